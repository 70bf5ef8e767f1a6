//! Dirac matrices in arbitrary dimension.
//!
//! The representation is built by the Kalf-Yamada recursion: starting from
//! the Pauli matrices in dimensions 1 and 2, odd dimensions tensor a
//! `sigma_1` onto the previous representation and even dimensions interleave
//! `sigma_1 (x) I`, `sigma_2 (x) alpha_k`, `sigma_3 (x) I`. The same matrices
//! admit closed-form Kronecker expressions, which [`explicit_dirac_matrices`]
//! produces independently; the two constructions must agree entrywise.

use crate::error::Error;
use crate::matrix::{c64, ComplexMatrix};
use crate::Result;
use num_complex::Complex64;
use serde::Serialize;

/// Default cap on the spatial dimension; at `n = 20` the matrices are
/// 1024x1024 and dense storage is still comfortable.
pub const DEFAULT_DIMENSION_CAP: usize = 20;

/// Tolerance for the exact Clifford identities.
pub const CLIFFORD_TOL: f64 = 1e-14;

/// Pauli matrix `sigma_k` for `k` in `1..=3`; `pauli(0)` is the 2x2 identity.
pub fn pauli(k: usize) -> ComplexMatrix {
    match k {
        0 => ComplexMatrix::identity(2),
        1 => ComplexMatrix::from_rows(&[
            vec![c64(0.0, 0.0), c64(1.0, 0.0)],
            vec![c64(1.0, 0.0), c64(0.0, 0.0)],
        ]),
        2 => ComplexMatrix::from_rows(&[
            vec![c64(0.0, 0.0), c64(0.0, -1.0)],
            vec![c64(0.0, 1.0), c64(0.0, 0.0)],
        ]),
        3 => ComplexMatrix::from_rows(&[
            vec![c64(1.0, 0.0), c64(0.0, 0.0)],
            vec![c64(0.0, 0.0), c64(-1.0, 0.0)],
        ]),
        _ => panic!("pauli index {k} out of range"),
    }
}

/// `m^{(x) k}` with the convention that the zeroth power is the 1x1 identity.
pub fn kron_power(m: &ComplexMatrix, k: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(1);
    for _ in 0..k {
        out = out.kron(m);
    }
    out
}

/// Fiber dimension `N = 2^(ceil(n/2))`.
pub fn fiber_dim(n: usize) -> usize {
    1 << n.div_ceil(2)
}

/// A concrete Dirac-matrix representation in dimension `n`.
///
/// Holds the `n + 1` anticommuting Hermitian matrices of size `N x N`
/// together with the off-diagonal blocks `beta_k` of the spatial matrices.
#[derive(Debug, Clone, Serialize)]
pub struct DiracRep {
    #[serde(rename = "dimension")]
    n: usize,
    #[serde(rename = "N")]
    fiber: usize,
    alphas: Vec<ComplexMatrix>,
    betas: Vec<ComplexMatrix>,
}

impl DiracRep {
    /// Spatial dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Fiber dimension `N`.
    pub fn fiber_dim(&self) -> usize {
        self.fiber
    }

    /// `alpha_k` for `k` in `1..=n+1` (1-based, matching the usual notation).
    pub fn alpha(&self, k: usize) -> &ComplexMatrix {
        assert!(
            (1..=self.n + 1).contains(&k),
            "alpha index {k} out of range 1..={}",
            self.n + 1
        );
        &self.alphas[k - 1]
    }

    /// All `n + 1` matrices in index order.
    pub fn alphas(&self) -> &[ComplexMatrix] {
        &self.alphas
    }

    /// The mass matrix `alpha_{n+1}`.
    pub fn mass_matrix(&self) -> &ComplexMatrix {
        &self.alphas[self.n]
    }

    /// `beta_k`, the upper-right `N/2 x N/2` block of `alpha_k`, for `k <= n`.
    pub fn beta(&self, k: usize) -> &ComplexMatrix {
        assert!((1..=self.n).contains(&k), "beta index {k} out of range");
        &self.betas[k - 1]
    }

    pub fn betas(&self) -> &[ComplexMatrix] {
        &self.betas
    }

    /// The scaled product `(-i)^floor(n/2) alpha_1 ... alpha_{n+1}`.
    ///
    /// Equals `-i sigma_2 (x) I_{N/2}` in odd dimensions and `I_N` in even
    /// dimensions, squares to `(-1)^n I`, and (anti)commutes with every
    /// `alpha_k` according to the parity of `n`.
    pub fn alpha_tilde(&self) -> ComplexMatrix {
        let mut prod = ComplexMatrix::identity(self.fiber);
        for a in &self.alphas {
            prod = &prod * a;
        }
        let minus_i = c64(0.0, -1.0);
        let phase = minus_i.powu((self.n / 2) as u32);
        prod.scale(phase)
    }

    /// Residuals of every defining identity of the representation.
    pub fn verify(&self) -> CliffordReport {
        let nn = self.fiber;
        let half = nn / 2;
        let mut anticomm: f64 = 0.0;
        let mut herm: f64 = 0.0;
        for (ki, a) in self.alphas.iter().enumerate() {
            herm = herm.max(a.hermiticity_deviation());
            for (ji, b) in self.alphas.iter().enumerate() {
                let mut acc = &(a * b) + &(b * a);
                if ki == ji {
                    for d in 0..nn {
                        acc[(d, d)] -= c64(2.0, 0.0);
                    }
                }
                anticomm = anticomm.max(acc.max_abs());
            }
        }

        // alpha_{n+1} must be exactly diag(I, -I)
        let mut mass = ComplexMatrix::zeros(nn, nn);
        for d in 0..half {
            mass[(d, d)] = c64(1.0, 0.0);
            mass[(half + d, half + d)] = c64(-1.0, 0.0);
        }
        let mass_deviation = self.mass_matrix().max_abs_diff(&mass);

        let mut beta: f64 = 0.0;
        for (ki, bk) in self.betas.iter().enumerate() {
            for (ji, bj) in self.betas.iter().enumerate() {
                let mut acc = &(bk * &bj.adjoint()) + &(bj * &bk.adjoint());
                if ki == ji {
                    for d in 0..half {
                        acc[(d, d)] -= c64(2.0, 0.0);
                    }
                }
                beta = beta.max(acc.max_abs());
            }
        }

        CliffordReport {
            n: self.n,
            fiber: self.fiber,
            max_anticommutator_residual: anticomm,
            max_hermiticity_deviation: herm,
            mass_matrix_deviation: mass_deviation,
            max_beta_residual: beta,
        }
    }
}

/// Residual report for the Clifford identities of a [`DiracRep`].
#[derive(Debug, Clone, Serialize)]
pub struct CliffordReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub fiber: usize,
    pub max_anticommutator_residual: f64,
    pub max_hermiticity_deviation: f64,
    pub mass_matrix_deviation: f64,
    pub max_beta_residual: f64,
}

impl CliffordReport {
    /// True when every residual is within [`CLIFFORD_TOL`] and the mass
    /// matrix is exact.
    pub fn pass(&self) -> bool {
        self.max_anticommutator_residual < CLIFFORD_TOL
            && self.max_hermiticity_deviation < CLIFFORD_TOL
            && self.mass_matrix_deviation == 0.0
            && self.max_beta_residual < CLIFFORD_TOL
    }
}

/// Builds the recursive representation in dimension `n` with the default cap.
pub fn dirac_matrices(n: usize) -> Result<DiracRep> {
    dirac_matrices_with_cap(n, DEFAULT_DIMENSION_CAP)
}

/// Builds the recursive representation with an explicit dimension cap.
pub fn dirac_matrices_with_cap(n: usize, cap: usize) -> Result<DiracRep> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    if n > cap {
        return Err(Error::DimensionTooLarge { n, cap });
    }
    let alphas = recursive_alphas(n);
    let fiber = fiber_dim(n);
    debug_assert_eq!(alphas.len(), n + 1);
    debug_assert!(alphas.iter().all(|a| a.shape() == (fiber, fiber)));

    // Slice the beta blocks, asserting the off-diagonal structure exactly.
    let half = fiber / 2;
    let mut betas = Vec::with_capacity(n);
    for a in alphas.iter().take(n) {
        let tl = a.block(0, 0, half, half);
        let br = a.block(half, half, half, half);
        assert!(
            tl.max_abs() == 0.0 && br.max_abs() == 0.0,
            "spatial Dirac matrix lost its off-diagonal block structure"
        );
        let beta = a.block(0, half, half, half);
        let bl = a.block(half, 0, half, half);
        assert!(
            bl.max_abs_diff(&beta.adjoint()) == 0.0,
            "lower-left block is not the adjoint of the upper-right block"
        );
        betas.push(beta);
    }

    Ok(DiracRep {
        n,
        fiber,
        alphas,
        betas,
    })
}

fn recursive_alphas(n: usize) -> Vec<ComplexMatrix> {
    match n {
        1 => vec![pauli(1), pauli(3)],
        2 => vec![pauli(1), pauli(2), pauli(3)],
        _ if n % 2 == 1 => {
            let prev = recursive_alphas(n - 1);
            let half = fiber_dim(n) / 2;
            let mut alphas: Vec<_> = prev.iter().map(|a| pauli(1).kron(a)).collect();
            alphas.push(pauli(3).kron(&ComplexMatrix::identity(half)));
            alphas
        }
        _ => {
            let prev = recursive_alphas(n - 2);
            let half = fiber_dim(n) / 2;
            let mut alphas = vec![pauli(1).kron(&ComplexMatrix::identity(half))];
            alphas.extend(prev.iter().map(|a| pauli(2).kron(a)));
            alphas.push(pauli(3).kron(&ComplexMatrix::identity(half)));
            alphas
        }
    }
}

/// Closed-form Kronecker expressions for the same representation.
///
/// Even `n >= 2`:
/// `alpha_k = sigma_2^(k-1) (x) sigma_1 (x) I^(n/2-k)` for `k <= n/2`,
/// `alpha_{n/2+1} = sigma_2^(n/2)`, and
/// `alpha_k = sigma_2^(n+1-k) (x) sigma_3 (x) I^(k-n/2-2)` above.
/// Odd `n >= 3` prepends a `sigma_1` factor to the even-(n-1) pattern and
/// closes with `alpha_{n+1} = sigma_3 (x) I^((n-1)/2)`.
pub fn explicit_dirac_matrices(n: usize) -> Result<Vec<ComplexMatrix>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    if n == 1 {
        return Ok(vec![pauli(1), pauli(3)]);
    }
    let s1 = pauli(1);
    let s2 = pauli(2);
    let s3 = pauli(3);
    let i2 = ComplexMatrix::identity(2);
    let mut alphas = Vec::with_capacity(n + 1);
    if n % 2 == 0 {
        let half = n / 2;
        for k in 1..=n + 1 {
            let a = if k <= half {
                kron_power(&s2, k - 1).kron(&s1).kron(&kron_power(&i2, half - k))
            } else if k == half + 1 {
                kron_power(&s2, half)
            } else {
                kron_power(&s2, n + 1 - k)
                    .kron(&s3)
                    .kron(&kron_power(&i2, k - half - 2))
            };
            alphas.push(a);
        }
    } else {
        let half = (n - 1) / 2;
        for k in 1..=n + 1 {
            let a = if k <= half {
                s1.kron(&kron_power(&s2, k - 1))
                    .kron(&s1)
                    .kron(&kron_power(&i2, half - k))
            } else if k == half + 1 {
                s1.kron(&kron_power(&s2, half))
            } else if k <= n {
                s1.kron(&kron_power(&s2, n - k))
                    .kron(&s3)
                    .kron(&kron_power(&i2, k - half - 2))
            } else {
                s3.kron(&kron_power(&i2, half))
            };
            alphas.push(a);
        }
    }
    Ok(alphas)
}

/// Report for the cross-dimension recursion identity.
#[derive(Debug, Clone, Serialize)]
pub struct RecursionReport {
    pub n: usize,
    pub m: usize,
    /// Max entrywise deviation over the lower, middle and upper index branch.
    pub branch_deviation: [f64; 3],
    pub pass: bool,
}

/// Verifies the identity relating `alpha^(n)` to `alpha^(m)` tensored with
/// identities and with the `(n-m)`-dimensional matrices, for `2 <= m <= n`
/// with `n - m` even. All three branches must hold entrywise exactly.
pub fn recursion_check(n: usize, m: usize) -> Result<RecursionReport> {
    if m < 2 || m > n || (n - m) % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "recursion_check requires 2 <= m <= n with n - m even, got (n, m) = ({n}, {m})"
        )));
    }
    let rep_n = dirac_matrices(n)?;
    let rep_m = dirac_matrices(m)?;
    let diff = n - m;
    let half_m = m / 2;
    let pad = kron_power(&ComplexMatrix::identity(2), diff / 2);
    // alpha^(0) degenerates to the 1x1 identity, covering the n = m case.
    let rep_diff = if diff >= 1 {
        dirac_matrices(diff)?.alphas().to_vec()
    } else {
        vec![ComplexMatrix::identity(1)]
    };

    let mut dev = [0.0_f64; 3];
    for k in 1..=n + 1 {
        let (branch, expected) = if k <= half_m {
            (0, rep_m.alpha(k).kron(&pad))
        } else if k <= diff + half_m + 1 {
            (1, rep_m.alpha(half_m + 1).kron(&rep_diff[k - half_m - 1]))
        } else {
            (2, rep_m.alpha(k - diff).kron(&pad))
        };
        dev[branch] = dev[branch].max(rep_n.alpha(k).max_abs_diff(&expected));
    }
    Ok(RecursionReport {
        n,
        m,
        branch_deviation: dev,
        pass: dev.iter().all(|&d| d == 0.0),
    })
}
