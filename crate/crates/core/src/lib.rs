//! Numerical toolkit for non-selfadjoint Dirac operators with rigid
//! matrix potentials.
//!
//! The crate is organized around a dense complex matrix kernel and builds up
//! to desk-scale spectral experiments:
//!
//! - [`matrix`]: dense complex matrices (Kronecker products, spectral norm,
//!   nullspace, nonsymmetric eigenvalues, Hermitian square root);
//! - [`clifford`]: recursive Dirac-matrix representations in any dimension
//!   and verification of their algebraic identities;
//! - [`rigidity`]: brick matrices, the rigid potential families RA(i)-(iv),
//!   a verifier for arbitrary factor pairs, polar splitting and randomized
//!   non-existence probes;
//! - [`norms`]: Lebesgue, Lorentz and Mizohata-Takeuchi norms of radial
//!   scalar profiles;
//! - [`regions`]: eigenvalue enclosure regions as membership predicates,
//!   boundary samplers and disk parameter calculators;
//! - [`atlas`]: exact-rational geometry of the Lebesgue exponent regions
//!   driving the resolvent estimates;
//! - [`lab`]: 1D Fourier-grid discretizations, Birman-Schwinger operator
//!   assembly and dense eigensolves used to validate the enclosures
//!   numerically.
//!
//! Data-parallel inner loops (probe trials, norm sweeps, membership grids)
//! run on rayon when the default `parallel` feature is enabled and fall back
//! to sequential execution otherwise; see [`exec`].

pub mod atlas;
pub mod clifford;
pub mod error;
pub mod exec;
pub mod lab;
pub mod matrix;
pub mod norms;
pub mod regions;
pub mod rigidity;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use matrix::ComplexMatrix;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
