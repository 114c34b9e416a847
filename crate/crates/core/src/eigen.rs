//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation acts on a pair `(p, q)`. A diagonal phase first makes the
//! pivot `a_pq` real, then a real Givens rotation annihilates it:
//!
//! ```text
//! U = [[ c,          s         ],
//!      [-s e^{-iφ},  c e^{-iφ} ]]      a_pq = |a_pq| e^{iφ}
//! ```
//!
//! with `t = tan θ` taken as the smaller root of `t² + 2τt - 1 = 0`,
//! `τ = (a_qq - a_pp) / (2|a_pq|)`. Sweeps stop once the off-diagonal
//! Frobenius mass drops below `OFFDIAG_REL_TOL * ‖A‖_F`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, SquareMatrix};

pub const MAX_SWEEPS: usize = 100;
pub const OFFDIAG_REL_TOL: f64 = 1e-13;

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    values: Vec<f64>,
    vectors: SquareMatrix,
}

impl EigenSystem {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &SquareMatrix {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `V diag(f(λ)) V*`.
    pub fn map(&self, mut f: impl FnMut(f64) -> f64) -> HermitianMatrix {
        let mapped: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        self.compose(&mapped)
    }

    /// `V diag(values) V*` for a caller-supplied spectrum.
    pub fn compose(&self, values: &[f64]) -> HermitianMatrix {
        let n = self.dim();
        let v = &self.vectors;
        let grid = SquareMatrix::from_fn(n, |i, j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &w) in values.iter().enumerate() {
                acc += v.get(i, k) * v.get(j, k).conj() * w;
            }
            acc
        });
        HermitianMatrix::symmetrize(&grid)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.compose(&self.values)
    }

    /// `‖V diag(λ) V* - A‖` in operator norm.
    pub fn reconstruction_residual(&self, a: &HermitianMatrix) -> Result<f64> {
        let diff = self.reconstruct().sub(a)?;
        Ok(eigh(&diff)?.spectral_radius())
    }

    /// `‖V* V - I‖` in operator norm.
    pub fn unitarity_residual(&self) -> Result<f64> {
        let n = self.dim();
        let gram = self.vectors.adjoint().matmul_unchecked(&self.vectors);
        let diff = gram.sub(&SquareMatrix::identity(n))?;
        let diff = HermitianMatrix::symmetrize(&diff);
        Ok(eigh(&diff)?.spectral_radius())
    }

    pub(crate) fn spectral_radius(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }
}

pub fn eigh(a: &HermitianMatrix) -> Result<EigenSystem> {
    let n = a.dim();
    let mut m = a.clone();
    let mut v = SquareMatrix::identity(n);

    let scale = a.frobenius_norm();
    if !scale.is_finite() {
        return Err(Error::NonFinite);
    }
    let target = OFFDIAG_REL_TOL * scale;

    let mut sweep = 0;
    loop {
        if off_diagonal_norm(&m) <= target {
            break;
        }
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
        sweep += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).re.total_cmp(&m.get(j, j).re));
    let values = order.iter().map(|&i| m.get(i, i).re).collect();
    let vectors = SquareMatrix::from_fn(n, |i, k| v.get(i, order[k]));
    Ok(EigenSystem { values, vectors })
}

fn off_diagonal_norm(m: &HermitianMatrix) -> f64 {
    let n = m.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += 2.0 * m.get(i, j).norm_sqr();
        }
    }
    libm::sqrt(acc)
}

fn rotate(m: &mut HermitianMatrix, v: &mut SquareMatrix, p: usize, q: usize) {
    let n = m.dim();
    let apq = m.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;

    let tau = (aqq - app) / (2.0 * r);
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else {
        let root = tau.abs() + libm::sqrt(1.0 + tau * tau);
        if tau >= 0.0 {
            1.0 / root
        } else {
            -1.0 / root
        }
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;
    let phase = (apq / r).conj();

    // Columns p, q of M U; rows follow by conjugate symmetry. The 2x2 pivot
    // block is set directly.
    let data = m.raw_mut();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let mkp = data[k * n + p];
        let w = data[k * n + q] * phase;
        let new_p = mkp * c - w * s;
        let new_q = mkp * s + w * c;
        data[k * n + p] = new_p;
        data[k * n + q] = new_q;
        data[p * n + k] = new_p.conj();
        data[q * n + k] = new_q.conj();
    }
    let zero = Complex64::new(0.0, 0.0);
    data[p * n + q] = zero;
    data[q * n + p] = zero;
    data[p * n + p] = Complex64::new(app - t * r, 0.0);
    data[q * n + q] = Complex64::new(aqq + t * r, 0.0);

    // V <- V U
    for k in 0..n {
        let vkp = v.get(k, p);
        let w = v.get(k, q) * phase;
        v.set(k, p, vkp * c - w * s);
        v.set(k, q, vkp * s + w * c);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use crate::ensembles::random_hermitian;

    #[test]
    fn diagonal_input() {
        let es = eigh(&HermitianMatrix::diagonal(&[3.0, -5.0])).unwrap();
        assert_eq!(es.values(), &[-5.0, 3.0]);
    }

    #[test]
    fn pauli_x() {
        let sx = HermitianMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]], 0.0).unwrap();
        let es = eigh(&sx).unwrap();
        assert!((es.values()[0] + 1.0).abs() < 1e-15);
        assert!((es.values()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn complex_two_by_two_closed_form() {
        // [[a, b],[b*, c]] has eigenvalues (a+c)/2 ± sqrt(((a-c)/2)^2 + |b|^2)
        let b = Complex64::new(0.3, -1.2);
        let h = HermitianMatrix::from_rows(
            &[[Complex64::new(2.0, 0.0), b], [b.conj(), Complex64::new(-0.5, 0.0)]],
            0.0,
        )
        .unwrap();
        let mid = 0.75;
        let rad = libm::sqrt(1.25f64 * 1.25 + b.norm_sqr());
        let es = eigh(&h).unwrap();
        assert!((es.values()[0] - (mid - rad)).abs() < 1e-14);
        assert!((es.values()[1] - (mid + rad)).abs() < 1e-14);
    }

    #[test]
    fn zero_and_one_by_one() {
        let es = eigh(&HermitianMatrix::zeros(3)).unwrap();
        assert_eq!(es.values(), &[0.0, 0.0, 0.0]);
        let es = eigh(&HermitianMatrix::diagonal(&[-2.5])).unwrap();
        assert_eq!(es.values(), &[-2.5]);
    }

    #[test]
    fn non_finite_input_is_rejected() {
        let mut h = HermitianMatrix::identity(2);
        h.raw_mut()[0] = Complex64::new(f64::INFINITY, 0.0);
        assert_eq!(eigh(&h).unwrap_err(), Error::NonFinite);
    }

    #[test]
    fn seeded_d16_reconstruction() {
        let mut rng = RngStream::new(2024, 0);
        let a = random_hermitian(&mut rng, 16).unwrap().scaled(7.0);
        let es = eigh(&a).unwrap();
        let norm = es.spectral_radius();
        assert!(es.reconstruction_residual(&a).unwrap() <= 1e-11 * norm);
        assert!(es.unitarity_residual().unwrap() <= 1e-12);
        assert!(es.values().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn repeated_eigenvalues() {
        // I + rank-one: eigenvalues 1 (x3) and 1 + |v|^2
        let v = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 1.0),
            Complex64::new(0.5, 0.0),
        ];
        let a = HermitianMatrix::identity(4).add(&HermitianMatrix::outer(&v)).unwrap();
        let es = eigh(&a).unwrap();
        let top = 1.0 + v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        for &l in &es.values()[..3] {
            assert!((l - 1.0).abs() < 1e-13);
        }
        assert!((es.max() - top).abs() < 1e-13);
        assert!(es.unitarity_residual().unwrap() < 1e-13);
    }
}
