//! Dense exact linear algebra over the rationals: matrices, solving,
//! kernels, and canonical subspaces.
//!
//! Subspaces are stored with a reduced row-echelon basis, so subspace
//! equality is representation equality and every rank/span identity is
//! decidable exactly.

use crate::rat::{rint, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Empty matrix with zero rows but a definite column count.
    pub fn empty(cols: usize) -> Self {
        Self::zeros(0, cols)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer literal constructor, mostly for tests and the catalog.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
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

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + self.at(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Stack rows of `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Concatenate columns of `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Flatten row-major into a single vector.
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).recip();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) - &f * m.at(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One exact solution of `A x = b`, or `None` when the system is
    /// inconsistent. Never a least-squares answer.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Shape(format!(
                "solve: {} equations vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = RatMatrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.at(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Basis (as rows) of the exact nullspace `{x : A x = 0}`.
    pub fn kernel(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            RatMatrix::empty(self.cols)
        } else {
            RatMatrix::from_rows(rows)
        }
    }

    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape("inverse of non-square".into()));
        }
        let aug = self.hstack(&RatMatrix::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        Ok(RatMatrix::from_fn(self.rows, self.rows, |i, j| {
            r.at(i, self.rows + j).clone()
        }))
    }

    /// Signature `(n_pos, n_neg, n_zero)` of a symmetric matrix, decided
    /// exactly by congruence diagonalization with symmetric pivoting.
    pub fn signature(&self) -> Result<(usize, usize, usize), LinalgError> {
        if !self.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        let n = self.rows;
        let mut m = self.clone();
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        for k in 0..n {
            if m.at(k, k).is_zero() {
                if let Some(l) = (k + 1..n).find(|&l| !m.at(l, l).is_zero()) {
                    m.swap_rows(k, l);
                    m.swap_cols(k, l);
                } else if let Some(l) = (k + 1..n).find(|&l| !m.at(k, l).is_zero()) {
                    // all remaining diagonal zero; fold row/col l into k
                    m.add_row(k, l);
                    m.add_col(k, l);
                } else {
                    zero += 1;
                    continue;
                }
            }
            let pivot = m.at(k, k).clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if m.at(i, k).is_zero() {
                    continue;
                }
                let f = m.at(i, k) / &pivot;
                for j in k..n {
                    let v = m.at(i, j) - &f * m.at(k, j);
                    m.set(i, j, v);
                }
                for j in k..n {
                    let v = m.at(j, i) - &f * m.at(j, k);
                    m.set(j, i, v);
                }
            }
        }
        Ok((pos, neg, zero))
    }

    pub fn is_positive_definite(&self) -> Result<bool, LinalgError> {
        Ok(self.signature()? == (self.rows, 0, 0))
    }

    pub fn is_negative_definite(&self) -> Result<bool, LinalgError> {
        Ok(self.signature()? == (0, self.rows, 0))
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.at(dst, j) + self.at(src, j);
            self.set(dst, j, v);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize) {
        for i in 0..self.rows {
            let v = self.at(i, dst) + self.at(i, src);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

// -------- vector helpers --------

pub fn vec_zeros(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn std_basis(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zeros(n);
    v[i] = Rat::one();
    v
}

/// Coordinates of `v` in the span of `basis` rows: solves `basisᵀ x = v`.
pub fn coords_in_rows(basis: &RatMatrix, v: &[Rat]) -> Option<Vec<Rat>> {
    basis
        .transpose()
        .solve(v)
        .expect("coords_in_rows shape checked by caller")
}

/// A subspace of a fixed ambient rational vector space, stored with its
/// canonical reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RatMatrix, // rref, full row rank
}

impl Subspace {
    /// Span of the given rows inside an ambient space; dependent or zero
    /// rows are allowed and reduced away.
    pub fn span(ambient: usize, rows: &RatMatrix) -> Self {
        assert!(
            rows.rows() == 0 || rows.cols() == ambient,
            "span: row length {} vs ambient {}",
            rows.cols(),
            ambient
        );
        let (r, pivots) = rows.rref();
        let basis = if pivots.is_empty() {
            RatMatrix::empty(ambient)
        } else {
            RatMatrix::from_fn(pivots.len(), ambient, |i, j| r.at(i, j).clone())
        };
        Self { ambient, basis }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Rat>]) -> Self {
        if vecs.is_empty() {
            return Self::zero(ambient);
        }
        Self::span(ambient, &RatMatrix::from_rows(vecs.to_vec()))
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RatMatrix::empty(ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RatMatrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical rref basis, rows are the basis vectors.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.rows_iter().map(<[Rat]>::to_vec).collect()
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if vec_is_zero(v) {
            return true;
        }
        let stacked = self.basis.vstack(&RatMatrix::from_rows(vec![v.to_vec()]));
        stacked.rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.rows_iter().all(|r| self.contains_vec(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::span(
            self.ambient,
            &self.basis.vstack(&other.basis),
        ))
    }

    /// Exact intersection via the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // x = aᵀ c = bᵀ d  ⇔  [aᵀ | -bᵀ] (c,d) = 0
        let m = self
            .basis
            .transpose()
            .hstack(&other.basis.transpose().neg());
        let ker = m.kernel();
        let mut vecs = Vec::new();
        for i in 0..ker.rows() {
            let c = &ker.row(i)[..self.dim()];
            let x = self.basis.transpose().mul_vec(c);
            vecs.push(x);
        }
        Ok(Subspace::from_vectors(self.ambient, &vecs))
    }

    /// True when `self + other` is a direct sum.
    pub fn sum_is_direct(&self, other: &Subspace) -> Result<bool, LinalgError> {
        Ok(self.sum(other)?.dim() == self.dim() + other.dim())
    }

    /// Rows spanning the annihilator of this subspace under the standard
    /// dot product; a vector lies in the subspace iff this matrix kills it.
    pub fn membership_matrix(&self) -> RatMatrix {
        if self.dim() == 0 {
            return RatMatrix::identity(self.ambient);
        }
        self.basis.kernel()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// `{x ∈ within : form(x, s) = 0}` for a symmetric bilinear form on the
/// ambient space. Degenerate forms are allowed; complementarity is the
/// caller's concern.
pub fn orthocomplement(
    form: &RatMatrix,
    s: &Subspace,
    within: &Subspace,
) -> Result<Subspace, LinalgError> {
    if !form.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    if form.rows() != s.ambient_dim() || s.ambient_dim() != within.ambient_dim() {
        return Err(LinalgError::AmbientMismatch(
            form.rows(),
            s.ambient_dim(),
        ));
    }
    if s.dim() == 0 || within.dim() == 0 {
        return Ok(within.clone());
    }
    // rows of conditions on coefficients c of x = Wᵀc: S · form · Wᵀ · c = 0
    let cond = s.basis().mul(form).mul(&within.basis().transpose());
    let ker = cond.kernel();
    let mut vecs = Vec::new();
    for i in 0..ker.rows() {
        vecs.push(within.basis().transpose().mul_vec(ker.row(i)));
    }
    Ok(Subspace::from_vectors(within.ambient_dim(), &vecs))
}

/// Restriction of a symmetric form to the rows of `basis`: the Gram matrix
/// `G[i][j] = rowsᵢ · form · rowsⱼ`.
pub fn restrict_form(form: &RatMatrix, basis: &RatMatrix) -> RatMatrix {
    basis.mul(form).mul(&basis.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rfrac, rint};
    use proptest::prelude::*;

    #[test]
    fn solve_identity() {
        let a = RatMatrix::identity(2);
        let x = a.solve(&[rint(1), rint(2)]).unwrap().unwrap();
        assert_eq!(x, vec![rint(1), rint(2)]);
    }

    #[test]
    fn solve_inconsistent_rank_deficient() {
        let a = RatMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[rint(1), rint(3)]).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_verified_by_substitution() {
        let a = RatMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let b = [rint(1), rint(2)];
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert_eq!(&x[0] + &x[1], rint(1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::zeros(2, 2).kernel().rank(), 2);
        assert_eq!(RatMatrix::identity(3).kernel().rows(), 0);
        let k = RatMatrix::from_i64(&[&[1, 1]]).kernel();
        assert_eq!(k.rows(), 1);
        // span{(1,-1)} by substitution
        assert_eq!(k.at(0, 0) + k.at(0, 1), rint(0));
    }

    #[test]
    fn subspace_ops_examples() {
        let e1 = Subspace::from_vectors(2, &[vec![rint(1), rint(0)]]);
        let e2 = Subspace::from_vectors(2, &[vec![rint(0), rint(1)]]);
        let sum = e1.sum(&e2).unwrap();
        assert_eq!(sum, Subspace::full(2));
        assert!(e1.sum_is_direct(&e2).unwrap());

        let diag = Subspace::from_vectors(2, &[vec![rint(1), rint(1)]]);
        assert!(e1.intersect(&diag).unwrap().is_zero());

        let plane = Subspace::full(2);
        let s = plane.sum(&e2).unwrap();
        assert_eq!(s, plane);
        assert!(!plane.sum_is_direct(&e2).unwrap());
    }

    #[test]
    fn orthocomplement_euclidean() {
        let form = RatMatrix::identity(3);
        let s = Subspace::from_vectors(3, &[vec![rint(1), rint(0), rint(0)]]);
        let c = orthocomplement(&form, &s, &Subspace::full(3)).unwrap();
        assert_eq!(
            c,
            Subspace::from_vectors(
                3,
                &[
                    vec![rint(0), rint(1), rint(0)],
                    vec![rint(0), rint(0), rint(1)]
                ]
            )
        );
    }

    #[test]
    fn orthocomplement_degenerate_form_returns_within() {
        let form = RatMatrix::zeros(2, 2);
        let s = Subspace::from_vectors(2, &[vec![rint(1), rint(2)]]);
        let c = orthocomplement(&form, &s, &Subspace::full(2)).unwrap();
        assert_eq!(c, Subspace::full(2));
    }

    #[test]
    fn orthocomplement_killing_sl2() {
        // Killing form of sl(2,R) in basis (H,E,F): B(H,H)=8, B(E,F)=4.
        let b = RatMatrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
        let s = Subspace::from_vectors(3, &[vec![rint(0), rint(1), rint(-1)]]);
        let c = orthocomplement(&b, &s, &Subspace::full(3)).unwrap();
        let expected = Subspace::from_vectors(
            3,
            &[
                vec![rint(1), rint(0), rint(0)],
                vec![rint(0), rint(1), rint(1)],
            ],
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn signature_and_definiteness() {
        assert_eq!(RatMatrix::identity(3).signature().unwrap(), (3, 0, 0));
        let m = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.signature().unwrap(), (1, 1, 0));
        let z = RatMatrix::zeros(2, 2);
        assert_eq!(z.signature().unwrap(), (0, 0, 2));
        let neg = RatMatrix::from_i64(&[&[-2, 0], &[0, -3]]);
        assert!(neg.is_negative_definite().unwrap());
        // indefinite with zero leading minor
        let tricky = RatMatrix::from_i64(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 5]]);
        assert_eq!(tricky.signature().unwrap(), (2, 1, 0));
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert!(RatMatrix::from_i64(&[&[1, 1], &[2, 2]]).inverse().is_err());
    }

    #[test]
    fn zero_row_matrices() {
        let e = RatMatrix::empty(3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().rank(), 3);
        let s = Subspace::zero(3);
        assert_eq!(s.membership_matrix().rank(), 3);
        assert!(s.contains_vec(&vec_zeros(3)));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rfrac(n, d))
    }

    fn rat_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_rat(), r * c)
                .prop_map(move |data| RatMatrix::from_flat(r, c, data))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(a in rat_matrix(8)) {
            prop_assert_eq!(a.rank() + a.kernel().rows(), a.cols());
        }

        #[test]
        fn solve_is_exact_or_certified_inconsistent(a in rat_matrix(6), seed in proptest::collection::vec(small_rat(), 6)) {
            let b: Vec<Rat> = (0..a.rows()).map(|i| seed[i % seed.len()].clone()).collect();
            match a.solve(&b).unwrap() {
                Some(x) => prop_assert_eq!(a.mul_vec(&x), b),
                None => {
                    let rhs = RatMatrix::from_fn(a.rows(), 1, |i, _| b[i].clone());
                    prop_assert!(a.hstack(&rhs).rank() > a.rank());
                }
            }
        }

        #[test]
        fn double_orthocomplement_nondegenerate(rows in rat_matrix(4)) {
            // Euclidean form and a mildly off-diagonal nondegenerate form.
            let n = rows.cols();
            let s = Subspace::span(n, &rows);
            let full = Subspace::full(n);
            let mut form = RatMatrix::identity(n);
            if n > 1 {
                form.set(0, 1, rfrac(1, 2));
                form.set(1, 0, rfrac(1, 2));
            }
            let c = orthocomplement(&form, &s, &full).unwrap();
            let cc = orthocomplement(&form, &c, &full).unwrap();
            prop_assert_eq!(cc, s);
        }
    }
}
