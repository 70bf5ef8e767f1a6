//! Helpers shared by the unit tests.

use crate::matrix::ComplexMatrix;
use num_complex::Complex64;
use rand::Rng;

/// Random unitary built from Householder reflectors applied to the identity.
pub(crate) fn random_unitary(n: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(n);
    for _ in 0..n {
        let v = ComplexMatrix::random_gaussian(n, 1, rng);
        let norm = v.frobenius_norm();
        let v = v.scale(Complex64::new(1.0 / norm, 0.0));
        let h = &ComplexMatrix::identity(n) - &(&v * &v.adjoint()).scale(Complex64::new(2.0, 0.0));
        u = &h * &u;
    }
    u
}
