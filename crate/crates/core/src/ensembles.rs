//! Random coefficient sequences, the random sum `Z = Σ ε_i A_i`, the Wigner
//! family and bounded isotropic vector ensembles.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, SquareMatrix};
use crate::rng::RngStream;
use crate::spectral::operator_norm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    Rademacher,
    Gaussian,
}

impl CoefficientKind {
    pub fn draw(self, stream: &mut RngStream, n: usize) -> Vec<f64> {
        match self {
            CoefficientKind::Rademacher => rademacher_signs(stream, n),
            CoefficientKind::Gaussian => gaussian_coeffs(stream, n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoefficientKind::Rademacher => "rademacher",
            CoefficientKind::Gaussian => "gaussian",
        }
    }
}

pub fn rademacher_signs(stream: &mut RngStream, n: usize) -> Vec<f64> {
    (0..n).map(|_| stream.sign()).collect()
}

/// Standard normals by the Marsaglia polar method.
pub fn gaussian_coeffs(stream: &mut RngStream, n: usize) -> Vec<f64> {
    (0..n).map(|_| stream.normal()).collect()
}

/// Ordered list `A_1, …, A_n` of Hermitian matrices of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFamily {
    dim: usize,
    members: Vec<HermitianMatrix>,
}

impl MatrixFamily {
    pub fn new(members: Vec<HermitianMatrix>) -> Result<Self> {
        let dim = members.first().ok_or(Error::EmptyInput)?.dim();
        if let Some(bad) = members.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimMismatch {
                left: dim,
                right: bad.dim(),
            });
        }
        Ok(Self { dim, members })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[HermitianMatrix] {
        &self.members
    }

    /// `Σ A_i²`.
    pub fn sum_of_squares(&self) -> HermitianMatrix {
        let mut acc = HermitianMatrix::zeros(self.dim);
        for m in &self.members {
            acc.add_scaled_unchecked(1.0, &m.square());
        }
        acc
    }

    /// `Σ c_i A_i` for real weights; exactly Hermitian.
    pub fn combine(&self, coeffs: &[f64]) -> Result<HermitianMatrix> {
        if coeffs.len() != self.members.len() {
            return Err(Error::LengthMismatch {
                expected: self.members.len(),
                found: coeffs.len(),
            });
        }
        let mut acc = HermitianMatrix::zeros(self.dim);
        for (m, &c) in self.members.iter().zip(coeffs) {
            acc.add_scaled_unchecked(c, m);
        }
        Ok(acc)
    }

    /// Family with every member multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            members: self.members.iter().map(|m| m.scaled(c)).collect(),
        }
    }
}

/// One draw of `Z = Σ ε_i A_i`.
pub fn sample_zn(family: &MatrixFamily, kind: CoefficientKind, stream: &mut RngStream) -> HermitianMatrix {
    let coeffs = kind.draw(stream, family.len());
    family
        .combine(&coeffs)
        .expect("coefficient count matches family size")
}

/// The `m(m-1)/2` matrices `A_ij` (`i < j`, row-major pair order) with ones at
/// `(i, j)` and `(j, i)`.
pub fn wigner_family(m: usize) -> Result<MatrixFamily> {
    if m < 2 {
        return Err(Error::BadDimension(m));
    }
    let mut members = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let grid = SquareMatrix::from_fn(m, |r, c| {
                if (r, c) == (i, j) || (r, c) == (j, i) {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            members.push(HermitianMatrix::symmetrize(&grid));
        }
    }
    MatrixFamily::new(members)
}

/// GUE-type draw (real Gaussian diagonal, complex Gaussian off-diagonal of
/// unit variance) rescaled to unit operator norm.
pub fn random_hermitian(stream: &mut RngStream, dim: usize) -> Result<HermitianMatrix> {
    if dim == 0 {
        return Err(Error::BadDimension(0));
    }
    let mut grid = SquareMatrix::zeros(dim);
    let half = core::f64::consts::FRAC_1_SQRT_2;
    for i in 0..dim {
        grid.set(i, i, Complex64::new(stream.normal(), 0.0));
        for j in i + 1..dim {
            let z = Complex64::new(stream.normal() * half, stream.normal() * half);
            grid.set(i, j, z);
            grid.set(j, i, z.conj());
        }
    }
    let h = HermitianMatrix::symmetrize(&grid);
    let norm = operator_norm(&h)?;
    Ok(if norm > 0.0 { h.scaled(1.0 / norm) } else { h })
}

/// `n` independent [`random_hermitian`] members of dimension `dim`.
pub fn random_family(stream: &mut RngStream, dim: usize, n: usize) -> Result<MatrixFamily> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let members = (0..n)
        .map(|_| random_hermitian(stream, dim))
        .collect::<Result<Vec<_>>>()?;
    MatrixFamily::new(members)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    /// `√d · e_J`, `J` uniform over the standard basis.
    ScaledBasis,
    /// `√d · g/|g|`, `g` a standard Gaussian vector.
    Sphere,
}

/// Isotropic vectors with `E[YY*] = I` and `|Y| = M = √d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VectorEnsemble {
    kind: EnsembleKind,
    dim: usize,
}

impl VectorEnsemble {
    pub fn new(kind: EnsembleKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDimension(0));
        }
        Ok(Self { kind, dim })
    }

    pub fn kind(&self) -> EnsembleKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Almost-sure bound `M` on `|Y|`.
    pub fn bound(&self) -> f64 {
        libm::sqrt(self.dim as f64)
    }
}

const SPHERE_MIN_NORM: f64 = 1e-150;
const SPHERE_MAX_REJECTIONS: usize = 100;

pub fn sample_isotropic_bounded(ensemble: &VectorEnsemble, stream: &mut RngStream) -> Result<Vec<Complex64>> {
    let d = ensemble.dim;
    let scale = ensemble.bound();
    match ensemble.kind {
        EnsembleKind::ScaledBasis => {
            let j = stream.below(d as u64) as usize;
            let mut y = alloc::vec![Complex64::new(0.0, 0.0); d];
            y[j] = Complex64::new(scale, 0.0);
            Ok(y)
        }
        EnsembleKind::Sphere => {
            for _ in 0..SPHERE_MAX_REJECTIONS {
                let g = gaussian_coeffs(stream, d);
                let norm = libm::sqrt(g.iter().map(|x| x * x).sum());
                if norm < SPHERE_MIN_NORM {
                    continue;
                }
                return Ok(g.iter().map(|&x| Complex64::new(scale * x / norm, 0.0)).collect());
            }
            Err(Error::DegenerateDraw(SPHERE_MAX_REJECTIONS))
        }
    }
}

/// `(1/n) Σ Y_i Y_i*`.
pub fn empirical_covariance<V: AsRef<[Complex64]>>(samples: &[V]) -> Result<HermitianMatrix> {
    let first = samples.first().ok_or(Error::EmptyInput)?.as_ref();
    let d = first.len();
    if d == 0 {
        return Err(Error::BadDimension(0));
    }
    let mut grid = SquareMatrix::zeros(d);
    for y in samples {
        let y = y.as_ref();
        if y.len() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                found: y.len(),
            });
        }
        for (i, &yi) in y.iter().enumerate() {
            if yi == Complex64::new(0.0, 0.0) {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let cur = grid.get(i, j);
                grid.set(i, j, cur + yi * yj.conj());
            }
        }
    }
    let inv = 1.0 / samples.len() as f64;
    Ok(HermitianMatrix::symmetrize(&grid).scaled(inv))
}
