//! Dense complex square matrices and the Hermitian subtype.
//!
//! Storage is row-major `Vec<Complex64>`. [`HermitianMatrix`] is a newtype
//! over [`SquareMatrix`] whose constructors guarantee exact conjugate
//! symmetry: `entry(j, i) == entry(i, j).conj()` bit for bit and a zero
//! imaginary part on the diagonal. Every arithmetic operation that keeps a
//! matrix Hermitian (real scaling, sums, differences) preserves that
//! exactness, so products that are only Hermitian in exact arithmetic go
//! through [`HermitianMatrix::symmetrize`].

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from rows; fails unless the grid is non-empty and square.
    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.as_ref().len() != dim) {
            return Err(Error::NonSquare);
        }
        let data = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Ok(Self { dim, data })
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.as_ref().len() != dim) {
            return Err(Error::NonSquare);
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Ok(Self { dim, data })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.dim + j] = value;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.matmul_unchecked(other))
    }

    pub(crate) fn matmul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let dst = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in row.iter().enumerate() {
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let src = &other.data[k * n..(k + 1) * n];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { dim: self.dim, data })
    }

    /// Repeated squaring: returns `self^(2^k)`.
    pub fn square_times(&self, k: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.matmul_unchecked(&acc);
        }
        acc
    }

    /// `self^k` by sequential multiplication, `k >= 1`.
    pub fn power_sequential(&self, k: u64) -> Self {
        if k == 0 {
            return Self::identity(self.dim);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.matmul_unchecked(self);
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest |entry(i,j) - conj(entry(j,i))|.
    pub fn asymmetry(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix(SquareMatrix);

impl HermitianMatrix {
    /// Returns `(G + G*)/2` after checking that the asymmetry of `G` is within
    /// `tol * (1 + max |g_ij|)`.
    pub fn from_entries(grid: SquareMatrix, tol: f64) -> Result<Self> {
        if grid.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let allowed = tol * (1.0 + grid.max_abs());
        let asymmetry = grid.asymmetry();
        if asymmetry > allowed {
            return Err(Error::NotHermitian { asymmetry, allowed });
        }
        Ok(Self::symmetrize(&grid))
    }

    pub fn from_rows<R: AsRef<[Complex64]>>(rows: &[R], tol: f64) -> Result<Self> {
        Self::from_entries(SquareMatrix::from_rows(rows)?, tol)
    }

    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R], tol: f64) -> Result<Self> {
        Self::from_entries(SquareMatrix::from_real_rows(rows)?, tol)
    }

    /// `(G + G*)/2` without any tolerance check.
    pub fn symmetrize(grid: &SquareMatrix) -> Self {
        let n = grid.dim();
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            out.set(i, i, Complex64::new(grid.get(i, i).re, 0.0));
            for j in i + 1..n {
                let avg = (grid.get(i, j) + grid.get(j, i).conj()) * 0.5;
                out.set(i, j, avg);
                out.set(j, i, avg.conj());
            }
        }
        Self(out)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(SquareMatrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(SquareMatrix::identity(dim))
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let n = values.len();
        Self(SquareMatrix::from_fn(n, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }))
    }

    /// Rank-one projector-like matrix `v v*`.
    pub fn outer(v: &[Complex64]) -> Self {
        let n = v.len();
        Self::symmetrize(&SquareMatrix::from_fn(n, |i, j| v[i] * v[j].conj()))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0.get(i, j)
    }

    pub fn as_square(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn into_square(self) -> SquareMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i).re).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(1.0, other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(-1.0, other);
        Ok(out)
    }

    /// `self += c * other`, real `c`.
    pub fn add_scaled(&mut self, c: f64, other: &Self) -> Result<()> {
        self.check_dim(other)?;
        self.add_scaled_unchecked(c, other);
        Ok(())
    }

    pub(crate) fn add_scaled_unchecked(&mut self, c: f64, other: &Self) {
        for (a, b) in self.0.data.iter_mut().zip(&other.0.data) {
            *a += b * c;
        }
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self(SquareMatrix {
            dim: self.dim(),
            data: self.0.data.iter().map(|z| z * c).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1.0)
    }

    /// `A^2`, re-symmetrized.
    pub fn square(&self) -> Self {
        Self::symmetrize(&self.0.matmul_unchecked(&self.0))
    }

    pub fn matmul(&self, other: &Self) -> Result<SquareMatrix> {
        self.0.matmul(&other.0)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.frobenius_norm()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.max_abs()
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [Complex64] {
        &mut self.0.data
    }
}

/// `Tr(AB)` for Hermitian `A`, `B`; real in exact arithmetic.
pub fn product_trace(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    a.check_dim(b)?;
    let n = a.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += a.get(i, j) * b.get(j, i);
        }
    }
    debug_assert!(acc.im.abs() <= 1e-10 * (1.0 + acc.re.abs()));
    Ok(acc.re)
}
