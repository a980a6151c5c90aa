//! Floating-point numerics: a small dense f64 matrix, a Jacobi-rotation
//! symmetric eigensolver, and a scaling-and-squaring matrix exponential.
//!
//! These are the only places the crate leaves exact arithmetic. The
//! eigensolver backs the restricted-root computation (whose output is
//! recertified exactly); the exponential backs the geodesic simulator.

use crate::linalg::RatMatrix;
use crate::rat::rat_to_f64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("matrix not symmetric within tolerance {0}")]
    NotSymmetric(f64),
    #[error("Jacobi iteration did not converge")]
    NoConvergence,
    #[error("shape mismatch in {0}")]
    Shape(&'static str),
}

/// Dense row-major f64 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_rat(m: &RatMatrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, rat_to_f64(m.at(i, j)));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        for a in &mut out.data {
            *a *= c;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j));
            }
        }
        out
    }

    /// Maximum absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// 1-norm (maximum absolute column sum), used by the exponential.
    pub fn norm_1(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.at(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>, NumericError> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(NumericError::Shape("solve"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.to_vec();
        for k in 0..n {
            let (p, mx) = (k..n)
                .map(|i| (i, a.at(i, k).abs()))
                .fold((k, 0.0), |acc, v| if v.1 > acc.1 { v } else { acc });
            if mx == 0.0 {
                return Err(NumericError::Shape("singular solve"));
            }
            for j in 0..n {
                let tmp = a.at(k, j);
                a.set(k, j, a.at(p, j));
                a.set(p, j, tmp);
            }
            x.swap(k, p);
            for i in k + 1..n {
                let f = a.at(i, k) / a.at(k, k);
                for j in k..n {
                    let v = a.at(i, j) - f * a.at(k, j);
                    a.set(i, j, v);
                }
                x[i] -= f * x[k];
            }
        }
        for k in (0..n).rev() {
            for j in k + 1..n {
                x[k] -= a.at(k, j) * x[j];
            }
            x[k] /= a.at(k, k);
        }
        Ok(x)
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order together with the matching
/// orthonormal eigenvectors as columns. The iteration stops once the total
/// off-diagonal magnitude drops below `tol`.
pub fn sym_eigen(m: &FMat, tol: f64) -> Result<(Vec<f64>, FMat), NumericError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(NumericError::Shape("sym_eigen"));
    }
    let scale = m.max_abs().max(1.0);
    for i in 0..n {
        for j in 0..i {
            if (m.at(i, j) - m.at(j, i)).abs() > tol * scale.max(1.0) {
                return Err(NumericError::NotSymmetric(tol));
            }
        }
    }
    let mut a = m.clone();
    // symmetrize to kill representational noise
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (a.at(i, j) + a.at(j, i));
            a.set(i, j, v);
            a.set(j, i, v);
        }
    }
    let mut v = FMat::identity(n);
    let off = |a: &FMat| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a.at(i, j).abs();
                }
            }
        }
        s
    };
    let mut converged = false;
    for _sweep in 0..100 {
        if off(&a) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.at(p, q);
                if apq.abs() <= tol / (n * n).max(1) as f64 {
                    continue;
                }
                // Jacobi rotation annihilating a[p][q]
                let theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.at(k, p);
                    let akq = a.at(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.at(p, k);
                    let aqk = a.at(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let vkp = v.at(k, p);
                    let vkq = v.at(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    if !converged && off(&a) > tol {
        return Err(NumericError::NoConvergence);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.at(i, i).partial_cmp(&a.at(j, j)).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.at(i, i)).collect();
    let mut vectors = FMat::zeros(n, n);
    for (newc, &oldc) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, newc, v.at(r, oldc));
        }
    }
    Ok((eigenvalues, vectors))
}

// Padé-13 coefficients for the scaling-and-squaring exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Matrix exponential by scaling and squaring with a Padé(13,13)
/// approximant.
pub fn expm(a: &FMat) -> FMat {
    let n = a.rows();
    assert_eq!(n, a.cols(), "expm of non-square matrix");
    let norm = a.norm_1();
    let theta13 = 5.371920351148152;
    let s = if norm > theta13 {
        (norm / theta13).log2().ceil() as i32
    } else {
        0
    };
    let m = a.scale(0.5f64.powi(s));
    let m2 = m.mul(&m);
    let m4 = m2.mul(&m2);
    let m6 = m4.mul(&m2);
    let id = FMat::identity(n);
    let b = &PADE13;
    let u_inner = m6
        .scale(b[13])
        .add(&m4.scale(b[11]))
        .add(&m2.scale(b[9]));
    let u = m.mul(
        &m6.mul(&u_inner)
            .add(&m6.scale(b[7]))
            .add(&m4.scale(b[5]))
            .add(&m2.scale(b[3]))
            .add(&id.scale(b[1])),
    );
    let v_inner = m6
        .scale(b[12])
        .add(&m4.scale(b[10]))
        .add(&m2.scale(b[8]));
    let v = m6
        .mul(&v_inner)
        .add(&m6.scale(b[6]))
        .add(&m4.scale(b[4]))
        .add(&m2.scale(b[2]))
        .add(&id.scale(b[0]));
    // (V - U) X = (V + U)
    let lhs = v.sub(&u);
    let rhs = v.add(&u);
    let mut x = FMat::zeros(n, n);
    for j in 0..n {
        let col: Vec<f64> = (0..n).map(|i| rhs.at(i, j)).collect();
        let sol = lhs.solve(&col).expect("Padé denominator is invertible");
        for i in 0..n {
            x.set(i, j, sol[i]);
        }
    }
    for _ in 0..s {
        x = x.mul(&x);
    }
    x
}

/// `φ₁(A) = Σ Aᵏ/(k+1)! = A⁻¹(e^A − I)`, computed via the augmented-block
/// exponential so singular `A` needs no special casing.
pub fn phi1(a: &FMat) -> FMat {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut block = FMat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            block.set(i, j, a.at(i, j));
        }
        block.set(i, n + i, 1.0);
    }
    let e = expm(&block);
    let mut out = FMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, e.at(i, n + j));
        }
    }
    out
}
