//! Dense complex matrix kernel.
//!
//! [`ComplexMatrix`] is the carrier for every matrix in the toolkit: Pauli
//! and Dirac matrices, rigid-potential factors, discrete operators. Entries
//! are `Complex64` in row-major order. Factorizations (SVD, nonsymmetric
//! eigenvalues, LU) are delegated to [`faer`]; the contracts asserted by the
//! tests (residual bounds, multiplicities, tolerances) are what this module
//! guarantees, not any particular algorithm.

use crate::error::Error;
use crate::Result;
use faer::Mat;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Relative threshold below which a singular value counts as zero.
pub const DEFAULT_NULLSPACE_TOL: f64 = 1e-10;

/// Tolerance for the Hermitian/PSD preconditions of [`ComplexMatrix::herm_sqrt`].
pub const HERM_SQRT_TOL: f64 = 1e-10;

/// Dense complex matrix with row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<[f64; 2]>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(de)?;
        if repr.entries.len() != repr.rows * repr.cols || repr.rows == 0 || repr.cols == 0 {
            return Err(serde::de::Error::custom("inconsistent matrix shape"));
        }
        Ok(ComplexMatrix {
            rows: repr.rows,
            cols: repr.cols,
            data: repr
                .entries
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        })
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from nested row slices.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ComplexMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// Square diagonal matrix from the given diagonal entries.
    pub fn from_diag(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Column vector from a slice.
    pub fn column_vector(entries: &[Complex64]) -> Self {
        ComplexMatrix {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    /// Matrix with independent standard complex Gaussian entries,
    /// `(x + iy)/sqrt(2)` with `x, y ~ N(0, 1)`.
    pub fn random_gaussian(rows: usize, cols: usize, rng: &mut impl Rng) -> Self {
        let norm = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_fn(rows, cols, |_, _| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re * norm, im * norm)
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    /// Scalar multiple.
    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry modulus of `self - other`; panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.shape(), other.shape(), "max_abs_diff shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation from Hermitian symmetry, `max |M - M*|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Contiguous sub-block starting at `(row0, col0)`.
    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols);
        Self::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)])
    }

    /// Assembles a matrix from a rectangular grid of equally shaped blocks.
    pub fn from_blocks(blocks: &[Vec<ComplexMatrix>]) -> Self {
        assert!(!blocks.is_empty() && !blocks[0].is_empty());
        let (br, bc) = blocks[0][0].shape();
        let out_rows = blocks.len() * br;
        let out_cols = blocks[0].len() * bc;
        let mut m = Self::zeros(out_rows, out_cols);
        for (bi, row) in blocks.iter().enumerate() {
            assert_eq!(row.len(), blocks[0].len(), "ragged block grid");
            for (bj, blk) in row.iter().enumerate() {
                assert_eq!(blk.shape(), (br, bc), "unequal block shapes");
                for i in 0..br {
                    for j in 0..bc {
                        m[(bi * br + i, bj * bc + j)] = blk[(i, j)];
                    }
                }
            }
        }
        m
    }

    /// Kronecker product. Block `(i, j)` of the result is `self[i, j] * other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        let mut out = Self::zeros(r1 * r2, c1 * c2);
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = self[(i1, j1)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        out[(i1 * r2 + i2, j1 * c2 + j2)] = a * other[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product on a slice.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.cols, "apply dimension mismatch");
        let mut y = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    pub(crate) fn to_faer(&self) -> Mat<Complex64> {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }

    pub(crate) fn from_faer(m: faer::MatRef<'_, Complex64>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }

    /// Largest singular value; zero exactly for the zero matrix.
    pub fn spectral_norm(&self) -> f64 {
        if self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
            return 0.0;
        }
        self.singular_values()
            .expect("svd of a finite matrix")
            .first()
            .copied()
            .unwrap_or(0.0)
    }

    /// Singular values in nonincreasing order.
    pub fn singular_values(&self) -> Result<Vec<f64>> {
        let svd = self
            .to_faer()
            .svd()
            .map_err(|e| Error::SvdFailure(format!("{e:?}")))?;
        Ok((0..self.rows.min(self.cols))
            .map(|i| svd.S()[i].re)
            .collect())
    }

    /// Full singular value decomposition `self = U diag(S) V*`.
    pub fn svd(&self) -> Result<(ComplexMatrix, Vec<f64>, ComplexMatrix)> {
        let svd = self
            .to_faer()
            .svd()
            .map_err(|e| Error::SvdFailure(format!("{e:?}")))?;
        let s = (0..self.rows.min(self.cols))
            .map(|i| svd.S()[i].re)
            .collect();
        Ok((
            Self::from_faer(svd.U()),
            s,
            Self::from_faer(svd.V()),
        ))
    }

    /// Orthonormal basis of the numerical right nullspace: right singular
    /// vectors whose singular value is at most `tol * sigma_max`.
    pub fn nullspace(&self, tol: f64) -> Result<Vec<ComplexMatrix>> {
        if tol <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "nullspace tolerance must be positive, got {tol}"
            )));
        }
        let (_, s, v) = self.svd()?;
        let sigma_max = s.first().copied().unwrap_or(0.0);
        let threshold = tol * sigma_max;
        let mut basis = Vec::new();
        for j in 0..self.cols {
            let sigma = s.get(j).copied().unwrap_or(0.0);
            if sigma <= threshold {
                basis.push(v.block(0, j, self.cols, 1));
            }
        }
        Ok(basis)
    }

    /// All eigenvalues with algebraic multiplicity, unsorted.
    pub fn eigenvalues(&self) -> Result<Vec<Complex64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_finite() {
            return Err(Error::NonFinite {
                context: "eigenvalue input",
            });
        }
        self.to_faer()
            .eigenvalues()
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))
    }

    /// Eigenvalues and the matrix of right eigenvectors (as columns).
    pub fn eigen(&self) -> Result<(Vec<Complex64>, ComplexMatrix)> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let evd = self
            .to_faer()
            .eigen()
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
        let n = self.rows;
        let values = (0..n).map(|i| evd.S()[i]).collect();
        Ok((values, Self::from_faer(evd.U())))
    }

    /// Eigenvalues of a Hermitian matrix, in nondecreasing order.
    pub fn hermitian_eigenvalues(&self) -> Result<Vec<f64>> {
        let dev = self.hermiticity_deviation();
        let scale = 1.0 + self.max_abs();
        if dev > HERM_SQRT_TOL * scale {
            return Err(Error::NotHermitian { deviation: dev });
        }
        self.to_faer()
            .self_adjoint_eigenvalues(faer::Side::Lower)
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))
    }

    /// Hermitian PSD square root: the unique Hermitian PSD `S` with `S S = self`.
    pub fn herm_sqrt(&self) -> Result<ComplexMatrix> {
        let dev = self.hermiticity_deviation();
        let scale = 1.0 + self.max_abs();
        if dev > HERM_SQRT_TOL * scale {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let evd = self
            .to_faer()
            .self_adjoint_eigen(faer::Side::Lower)
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
        let n = self.rows;
        let u = Self::from_faer(evd.U());
        let mut sqrt_diag = Vec::with_capacity(n);
        for i in 0..n {
            let lambda = evd.S()[i].re;
            if lambda < -HERM_SQRT_TOL * scale {
                return Err(Error::NotPositiveSemidefinite { eigenvalue: lambda });
            }
            sqrt_diag.push(Complex64::new(lambda.max(0.0).sqrt(), 0.0));
        }
        let s = &(&u * &Self::from_diag(&sqrt_diag)) * &u.adjoint();
        if !s.is_finite() {
            return Err(Error::NonFinite {
                context: "herm_sqrt",
            });
        }
        Ok(s)
    }

    /// Solves `self * X = rhs` by LU with partial pivoting.
    pub fn solve(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.rows, rhs.cols),
                found: rhs.shape(),
                context: "solve",
            });
        }
        use faer::linalg::solvers::Solve;
        let lu = self.to_faer().partial_piv_lu();
        let x = lu.solve(rhs.to_faer());
        let out = Self::from_faer(x.as_ref());
        if !out.is_finite() {
            return Err(Error::NonFinite { context: "solve" });
        }
        Ok(out)
    }

    /// Matrix inverse via LU.
    pub fn inverse(&self) -> Result<ComplexMatrix> {
        self.solve(&Self::identity(self.rows))
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Mul<Complex64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, s: Complex64) -> ComplexMatrix {
        self.scale(s)
    }
}

/// Shorthand complex constructor used throughout the crate.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::pauli;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    use crate::testutil::random_unitary;

    /// Four-loop index expansion of the Kronecker product, independent of
    /// `ComplexMatrix::kron`.
    fn kron_oracle(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
        for i1 in 0..a.rows() {
            for j1 in 0..a.cols() {
                for i2 in 0..b.rows() {
                    for j2 in 0..b.cols() {
                        out[(i1 * b.rows() + i2, j1 * b.cols() + j2)] =
                            a[(i1, j1)] * b[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn kron_of_sigma1_and_identity() {
        let got = pauli(1).kron(&ComplexMatrix::identity(2));
        let want = ComplexMatrix::from_rows(&[
            vec![r(0.0), r(0.0), r(1.0), r(0.0)],
            vec![r(0.0), r(0.0), r(0.0), r(1.0)],
            vec![r(1.0), r(0.0), r(0.0), r(0.0)],
            vec![r(0.0), r(1.0), r(0.0), r(0.0)],
        ]);
        assert_eq!(got.max_abs_diff(&want), 0.0);
    }

    #[test]
    fn kron_identity_one_is_noop() {
        let m = ComplexMatrix::from_rows(&[
            vec![c64(1.0, 2.0), c64(0.0, -1.0)],
            vec![r(3.0), c64(-0.5, 0.5)],
        ]);
        let got = ComplexMatrix::identity(1).kron(&m);
        assert_eq!(got.max_abs_diff(&m), 0.0);
    }

    #[test]
    fn kron_matches_bruteforce_oracle() {
        let got = pauli(2).kron(&pauli(1));
        let want = kron_oracle(&pauli(2), &pauli(1));
        assert_eq!(got.max_abs_diff(&want), 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = ComplexMatrix::random_gaussian(3, 2, &mut rng);
            let b = ComplexMatrix::random_gaussian(2, 4, &mut rng);
            assert_eq!(a.kron(&b).max_abs_diff(&kron_oracle(&a, &b)), 0.0);
        }
    }

    #[test]
    fn kron_mixed_product_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a1 = ComplexMatrix::random_gaussian(2, 2, &mut rng);
            let b1 = ComplexMatrix::random_gaussian(2, 2, &mut rng);
            let a2 = ComplexMatrix::random_gaussian(2, 2, &mut rng);
            let b2 = ComplexMatrix::random_gaussian(2, 2, &mut rng);
            let lhs = &a1.kron(&b1) * &a2.kron(&b2);
            let rhs = (&a1 * &a2).kron(&(&b1 * &b2));
            assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn kron_associativity_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = ComplexMatrix::random_gaussian(2, 3, &mut rng);
        let b = ComplexMatrix::random_gaussian(3, 2, &mut rng);
        let c = ComplexMatrix::random_gaussian(2, 2, &mut rng);
        let lhs = a.kron(&b).kron(&c);
        let rhs = a.kron(&b.kron(&c));
        assert_eq!(lhs.max_abs_diff(&rhs), 0.0);
    }

    #[test]
    fn spectral_norm_examples() {
        assert!((pauli(1).spectral_norm() - 1.0).abs() < 1e-14);
        // (sigma1 - i sigma2)/2 = [[0,0],[1,0]], a rank-one matrix with norm 1
        let m = (&pauli(1) - &pauli(2).scale(c64(0.0, 1.0))).scale(r(0.5));
        assert_eq!(m[(1, 0)], r(1.0));
        assert!((m.spectral_norm() - 1.0).abs() < 1e-14);
        assert_eq!(ComplexMatrix::zeros(3, 3).spectral_norm(), 0.0);
    }

    #[test]
    fn spectral_norm_submultiplicative_and_unitarily_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let a = ComplexMatrix::random_gaussian(4, 4, &mut rng);
            let b = ComplexMatrix::random_gaussian(4, 4, &mut rng);
            assert!(
                (&a * &b).spectral_norm() <= a.spectral_norm() * b.spectral_norm() + 1e-12
            );
            let u = random_unitary(4, &mut rng);
            let v = random_unitary(4, &mut rng);
            let conj = &(&u * &a) * &v;
            assert!((conj.spectral_norm() - a.spectral_norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn nullspace_of_full_rank_is_empty() {
        let basis = ComplexMatrix::identity(4).nullspace(1e-12).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn nullspace_of_rank_one_symmetric() {
        let m = ComplexMatrix::from_rows(&[vec![r(1.0), r(1.0)], vec![r(1.0), r(1.0)]]);
        let basis = m.nullspace(1e-12).unwrap();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // proportional to (1, -1)/sqrt(2)
        let ratio = v[(0, 0)] / v[(1, 0)];
        assert!((ratio + r(1.0)).norm() < 1e-12);
        assert!((v.frobenius_norm() - 1.0).abs() < 1e-12);
        // residual of the claimed nullspace vector
        assert!((&m * v).max_abs() < 1e-12);
    }

    #[test]
    fn nullspace_rejects_nonpositive_tol() {
        assert!(ComplexMatrix::identity(2).nullspace(0.0).is_err());
    }

    #[test]
    fn eigenvalues_of_diagonal_and_pauli() {
        let mut ev = ComplexMatrix::from_diag(&[r(1.0), r(-1.0)])
            .eigenvalues()
            .unwrap();
        ev.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((ev[0] - r(-1.0)).norm() < 1e-14);
        assert!((ev[1] - r(1.0)).norm() < 1e-14);

        let mut ev = pauli(2).eigenvalues().unwrap();
        ev.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((ev[0] - r(-1.0)).norm() < 1e-12);
        assert!((ev[1] - r(1.0)).norm() < 1e-12);
    }

    /// Characteristic polynomial coefficients via the Faddeev-LeVerrier
    /// recurrence `M_k = A (M_{k-1} + c_{k-1} I)`, `c_k = -tr(M_k)/k`, using
    /// only matrix products and traces. Returns the monic coefficients
    /// `[1, c_1, ..., c_n]` of `x^n + c_1 x^{n-1} + ... + c_n`.
    fn char_poly(m: &ComplexMatrix) -> Vec<Complex64> {
        let n = m.rows();
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        let mut aux = ComplexMatrix::identity(n);
        for k in 1..=n {
            aux = m * &aux;
            let c = -aux.trace() / r(k as f64);
            coeffs.push(c);
            for i in 0..n {
                aux[(i, i)] += c;
            }
        }
        coeffs
    }

    /// Durand-Kerner root finding on a monic polynomial, an eigenvalue path
    /// independent of the Schur-based solver.
    fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
        let n = coeffs.len() - 1;
        let eval = |x: Complex64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for &c in coeffs {
                acc = acc * x + c;
            }
            acc
        };
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(0.4, 0.9).powu(k as u32 + 1))
            .collect();
        for _ in 0..500 {
            let mut max_step = 0.0_f64;
            for i in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if j != i {
                        denom *= roots[i] - roots[j];
                    }
                }
                let step = eval(roots[i]) / denom;
                roots[i] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-14 {
                break;
            }
        }
        roots
    }

    fn match_multisets(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        let mut used = vec![false; b.len()];
        for x in a {
            let mut best: Option<(usize, f64)> = None;
            for (j, y) in b.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let d = (x - y).norm();
                if best.map_or(true, |(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
            let (j, d) = best.unwrap();
            assert!(d < tol, "unmatched eigenvalue {x} (closest {})", b[j]);
            used[j] = true;
        }
    }

    #[test]
    fn eigenvalues_match_characteristic_polynomial_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let m = ComplexMatrix::random_gaussian(8, 8, &mut rng);
        let ev = m.eigenvalues().unwrap();
        let roots = poly_roots(&char_poly(&m));
        match_multisets(&ev, &roots, 1e-6);
        // trace and determinant cross-checks
        let sum: Complex64 = ev.iter().sum();
        assert!((sum - m.trace()).norm() < 1e-10);
    }

    #[test]
    fn eigen_residuals_within_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let m = ComplexMatrix::random_gaussian(12, 12, &mut rng);
        let (values, vectors) = m.eigen().unwrap();
        let norm_m = m.spectral_norm();
        for (k, lambda) in values.iter().enumerate() {
            let v = vectors.block(0, k, 12, 1);
            let resid = (&(&m * &v) - &v.scale(*lambda)).frobenius_norm() / v.frobenius_norm();
            assert!(
                resid <= 1e-8 * norm_m,
                "residual {resid:.3e} too large for eigenvalue {lambda}"
            );
        }
    }

    #[test]
    fn eigenvalues_invariant_under_unitary_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let m = ComplexMatrix::random_gaussian(6, 6, &mut rng);
        let u = random_unitary(6, &mut rng);
        let conj = &(&u * &m) * &u.adjoint();
        match_multisets(
            &m.eigenvalues().unwrap(),
            &conj.eigenvalues().unwrap(),
            1e-8,
        );
    }

    #[test]
    fn herm_sqrt_examples() {
        let s = ComplexMatrix::from_diag(&[r(4.0), r(9.0)]).herm_sqrt().unwrap();
        assert!(s.max_abs_diff(&ComplexMatrix::from_diag(&[r(2.0), r(3.0)])) < 1e-12);

        let id = ComplexMatrix::identity(5);
        assert!(id.herm_sqrt().unwrap().max_abs_diff(&id) < 1e-12);
    }

    #[test]
    fn herm_sqrt_via_eigendecomposition_oracle() {
        // V = diag(1, 0): sqrt(V* V) recovers V itself
        let v = ComplexMatrix::from_diag(&[r(1.0), r(0.0)]);
        let s = (&v.adjoint() * &v).herm_sqrt().unwrap();
        assert!(s.max_abs_diff(&v) < 1e-12);

        // random Hermitian PSD: compare S*S with the input
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let g = ComplexMatrix::random_gaussian(5, 5, &mut rng);
        let psd = &g.adjoint() * &g;
        let s = psd.herm_sqrt().unwrap();
        assert!(s.hermiticity_deviation() < 1e-12);
        let err = (&s * &s).max_abs_diff(&psd) / (1.0 + psd.max_abs());
        assert!(err < 1e-10, "relative reconstruction error {err:.3e}");
    }

    #[test]
    fn herm_sqrt_rejects_bad_inputs() {
        assert!(matches!(
            pauli(1).scale(c64(0.0, 1.0)).herm_sqrt(),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            ComplexMatrix::from_diag(&[r(1.0), r(-1.0)]).herm_sqrt(),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn solve_and_inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let a = ComplexMatrix::random_gaussian(6, 6, &mut rng);
        let inv = a.inverse().unwrap();
        let err = (&a * &inv).max_abs_diff(&ComplexMatrix::identity(6));
        assert!(err < 1e-11);
    }

    #[test]
    fn serde_roundtrip_preserves_entries() {
        let m = ComplexMatrix::from_rows(&[
            vec![c64(1.0, -2.0), c64(0.5, 0.0)],
            vec![c64(0.0, 3.0), c64(-1.0, -1.0)],
        ]);
        let json = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }
}
