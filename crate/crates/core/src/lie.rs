//! Structure-constant Lie algebras over the rationals.
//!
//! An algebra is given by a labeled basis and an exact structure-constant
//! tensor; antisymmetry and the Jacobi identity are checked at
//! construction, so every downstream rank/span identity can be trusted.

use crate::linalg::{
    coords_in_rows, restrict_form, vec_is_zero, LinalgError, RatMatrix, Subspace,
};
use crate::rat::Rat;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("antisymmetry violated at c[{i}][{j}][{k}]")]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("Jacobi identity violated on basis triple ({i},{j},{k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subalgebra is not semisimple")]
    NotSemisimple,
    #[error("matrix basis is not closed under commutators")]
    NotClosed,
    #[error("internal verification failure: {0}")]
    Verification(String),
    #[error("Levi lifting failed: {0}")]
    Lifting(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Lie algebra with rational structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    // flattened: c[(i*dim + j)*dim + k]
    c: Vec<Rat>,
}

/// Killing form `B(x,y) = tr(ad x ∘ ad y)` of an algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct KillingForm {
    pub matrix: RatMatrix,
}

impl LieAlgebra {
    /// Build from a full structure-constant tensor, verifying antisymmetry
    /// and the Jacobi identity exactly.
    pub fn new(labels: Vec<String>, c: Vec<Rat>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if c.len() != dim * dim * dim {
            return Err(AlgebraError::Dimension(format!(
                "structure tensor has {} entries for dimension {}",
                c.len(),
                dim
            )));
        }
        let alg = Self { dim, labels, c };
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Build from a sparse bracket list: entries `(i, j, coeff, k)` meaning
    /// `[e_i, e_j] += coeff·e_k`. The reversed constants are filled in by
    /// antisymmetry; providing both orders inconsistently is an error.
    pub fn from_brackets(
        dim: usize,
        labels: Vec<String>,
        brackets: &[(usize, usize, Rat, usize)],
    ) -> Result<Self, AlgebraError> {
        assert_eq!(labels.len(), dim);
        let mut c = vec![Rat::zero(); dim * dim * dim];
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        let mut given = vec![false; dim * dim];
        for &(i, j, ref coeff, k) in brackets {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::Dimension(format!(
                    "bracket index out of range: ({i},{j})->{k}"
                )));
            }
            c[idx(i, j, k)] += coeff;
            given[i * dim + j] = true;
        }
        // fill the reversed order wherever it was not given explicitly
        for i in 0..dim {
            for j in 0..dim {
                if given[i * dim + j] && !given[j * dim + i] {
                    for k in 0..dim {
                        c[idx(j, i, k)] = -c[idx(i, j, k)].clone();
                    }
                }
            }
        }
        Self::new(labels, c)
    }

    /// Default labels e1..en.
    pub fn default_labels(dim: usize) -> Vec<String> {
        (1..=dim).map(|i| format!("e{i}")).collect()
    }

    fn check_axioms(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..=i {
                for k in 0..d {
                    if self.c_at(i, j, k) + self.c_at(j, i, k) != Rat::zero() {
                        return Err(AlgebraError::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let ei = crate::linalg::std_basis(d, i);
                    let ej = crate::linalg::std_basis(d, j);
                    let ek = crate::linalg::std_basis(d, k);
                    let mut sum = self.bracket(&self.bracket(&ei, &ej), &ek);
                    sum = crate::linalg::vec_add(&sum, &self.bracket(&self.bracket(&ej, &ek), &ei));
                    sum = crate::linalg::vec_add(&sum, &self.bracket(&self.bracket(&ek, &ei), &ej));
                    if !vec_is_zero(&sum) {
                        return Err(AlgebraError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn c_at(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim, "bracket: x has wrong dimension");
        assert_eq!(y.len(), self.dim, "bracket: y has wrong dimension");
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..self.dim {
                    let cijk = self.c_at(i, j, k);
                    if !cijk.is_zero() {
                        out[k] += &f * cijk;
                    }
                }
            }
        }
        out
    }

    /// Adjoint operator `ad(x): y ↦ [x,y]` as a matrix acting on
    /// coordinate columns.
    pub fn ad(&self, x: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &crate::linalg::std_basis(self.dim, j));
            for k in 0..self.dim {
                if !col[k].is_zero() {
                    m.set(k, j, col[k].clone());
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> RatMatrix {
        self.ad(&crate::linalg::std_basis(self.dim, i))
    }

    /// Span of `[a, b]` over all basis pairs of two subspaces.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in a.basis().rows_iter() {
            for y in b.basis().rows_iter() {
                let v = self.bracket(x, y);
                if !vec_is_zero(&v) {
                    vecs.push(v);
                }
            }
        }
        Subspace::from_vectors(self.dim, &vecs)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// Exact Killing form; ad-invariance is verified on basis triples.
    pub fn killing(&self) -> KillingForm {
        let ads: Vec<RatMatrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let matrix = RatMatrix::from_fn(self.dim, self.dim, |i, j| ads[i].mul(&ads[j]).trace());
        debug_assert!(matrix.is_symmetric());
        KillingForm { matrix }
    }

    /// Killing form restricted to a subspace basis.
    pub fn killing_on(&self, rows: &RatMatrix) -> RatMatrix {
        restrict_form(&self.killing().matrix, rows)
    }

    // ---- series ----

    /// Derived series g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ … until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut chain = vec![self.full_space()];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    /// Lower central series g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ … until stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = self.full_space();
        let mut chain = vec![full.clone()];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_span(&full, last);
            if next.dim() == last.dim() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    /// Nilpotency step: the number of nonzero terms of the lower central
    /// series. Abelian algebras have step 1. `None` when not nilpotent.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let chain = self.lower_central_series();
        if !chain.last().unwrap().is_zero() {
            return None;
        }
        if self.dim == 0 {
            return Some(0);
        }
        Some(chain.len() - 1)
    }

    // ---- centralizers / normalizers ----

    /// Centralizer of `s` inside `within`: `{x ∈ within : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace, within: &Subspace) -> Subspace {
        if within.dim() == 0 {
            return Subspace::zero(self.dim);
        }
        if s.dim() == 0 {
            return within.clone();
        }
        let wt = within.basis().transpose(); // n × w
        let mut stacked: Option<RatMatrix> = None;
        for srow in s.basis().rows_iter() {
            let block = self.ad(srow).mul(&wt); // condition: ad(s) Wᵀ c = 0
            stacked = Some(match stacked {
                None => block,
                Some(prev) => prev.vstack(&block),
            });
        }
        let ker = stacked.unwrap().kernel();
        let vecs: Vec<Vec<Rat>> = ker.rows_iter().map(|c| wt.mul_vec(c)).collect();
        Subspace::from_vectors(self.dim, &vecs)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&self.full_space(), &self.full_space())
    }

    /// Normalizer `{x : [x, s] ⊆ s}`.
    pub fn normalizer(&self, s: &Subspace) -> Subspace {
        if s.dim() == 0 {
            return self.full_space();
        }
        let q = s.membership_matrix(); // kills exactly the vectors of s
        let mut stacked: Option<RatMatrix> = None;
        for srow in s.basis().rows_iter() {
            // x ↦ [x, s_i] = -ad(s_i)x must satisfy Q·(ad(s_i) x) = 0
            let block = q.mul(&self.ad(srow));
            stacked = Some(match stacked {
                None => block,
                Some(prev) => prev.vstack(&block),
            });
        }
        Subspace::span(self.dim, &stacked.unwrap().kernel())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_span(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains(&self.bracket_span(&self.full_space(), s))
    }

    /// Smallest ideal containing `seed`: closure of the span under
    /// bracketing with the whole algebra.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let full = self.full_space();
        let mut cur = seed.clone();
        loop {
            let next = cur
                .sum(&self.bracket_span(&full, &cur))
                .expect("same ambient");
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    // ---- construction helpers ----

    /// Restrict to a subalgebra spanned by the given independent rows.
    /// Returns the restricted algebra whose basis is exactly those rows.
    pub fn subalgebra(&self, rows: &RatMatrix) -> Result<LieAlgebra, AlgebraError> {
        let s = Subspace::span(self.dim, rows);
        if s.dim() != rows.rows() {
            return Err(AlgebraError::Dimension(
                "subalgebra rows are dependent".into(),
            ));
        }
        if !s.contains(&self.bracket_span(&s, &s)) {
            return Err(AlgebraError::NotSubalgebra);
        }
        let d = rows.rows();
        let mut c = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let br = self.bracket(rows.row(i), rows.row(j));
                let coords = coords_in_rows(rows, &br)
                    .ok_or_else(|| AlgebraError::Verification("bracket left span".into()))?;
                for k in 0..d {
                    c[(i * d + j) * d + k] = coords[k].clone();
                }
            }
        }
        LieAlgebra::new(
            (0..d).map(|i| format!("s{}", i + 1)).collect(),
            c,
        )
    }

    /// Quotient by an ideal. Returns the quotient algebra on a standard
    /// complement basis together with the projection matrix; the
    /// projection is verified to be a homomorphism on basis pairs.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, RatMatrix), AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotIdeal);
        }
        let n = self.dim;
        let (_, pivots) = ideal.basis().rref();
        let compl: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let q = compl.len();
        // change of basis: rows = ideal basis then complement standard vectors
        let mut rows = ideal.basis().clone();
        for &c in &compl {
            rows = rows.vstack(&RatMatrix::from_rows(vec![crate::linalg::std_basis(n, c)]));
        }
        let inv = rows.transpose().inverse()?;
        // projection: coordinates in `rows`, keep the complement block
        let proj = RatMatrix::from_fn(q, n, |i, j| inv.at(ideal.dim() + i, j).clone());
        let mut c = vec![Rat::zero(); q * q * q];
        for a in 0..q {
            for b in 0..q {
                if a == b {
                    continue;
                }
                let br = self.bracket(
                    &crate::linalg::std_basis(n, compl[a]),
                    &crate::linalg::std_basis(n, compl[b]),
                );
                let coords = proj.mul_vec(&br);
                for k in 0..q {
                    c[(a * q + b) * q + k] = coords[k].clone();
                }
            }
        }
        let labels = compl.iter().map(|&i| self.labels[i].clone()).collect();
        let quot = LieAlgebra::new(labels, c)?;
        // verify homomorphism on all basis pairs
        for i in 0..n {
            for j in 0..n {
                let lhs = proj.mul_vec(&self.bracket(
                    &crate::linalg::std_basis(n, i),
                    &crate::linalg::std_basis(n, j),
                ));
                let rhs = quot.bracket(
                    &proj.mul_vec(&crate::linalg::std_basis(n, i)),
                    &proj.mul_vec(&crate::linalg::std_basis(n, j)),
                );
                if lhs != rhs {
                    return Err(AlgebraError::Verification(format!(
                        "quotient projection is not a homomorphism at ({i},{j})"
                    )));
                }
            }
        }
        Ok((quot, proj))
    }

    /// Direct sum of two algebras.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let d = self.dim + other.dim;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut c = vec![Rat::zero(); d * d * d];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    c[(i * d + j) * d + k] = self.c_at(i, j, k).clone();
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    c[((self.dim + i) * d + (self.dim + j)) * d + (self.dim + k)] =
                        other.c_at(i, j, k).clone();
                }
            }
        }
        LieAlgebra::new(labels, c).expect("direct sum of valid algebras is valid")
    }

    /// Semidirect sum `n ⋊ h` where `h` is a Lie algebra of derivations of
    /// `n` given by matrices acting on n-coordinates. The derivation span
    /// must be closed under commutators.
    pub fn semidirect_by_derivations(
        n: &LieAlgebra,
        ders: &[RatMatrix],
        der_labels: Vec<String>,
    ) -> Result<LieAlgebra, AlgebraError> {
        let nd = n.dim;
        let hd = ders.len();
        let d = nd + hd;
        assert_eq!(der_labels.len(), hd);
        // stack derivations as flat vectors for coordinate solving
        let flat = if hd == 0 {
            RatMatrix::empty(nd * nd)
        } else {
            RatMatrix::from_rows(ders.iter().map(RatMatrix::flatten).collect())
        };
        let mut c = vec![Rat::zero(); d * d * d];
        let idx = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
        for i in 0..nd {
            for j in 0..nd {
                for k in 0..nd {
                    c[idx(i, j, k)] = n.c_at(i, j, k).clone();
                }
            }
        }
        for (a, da) in ders.iter().enumerate() {
            // [D_a, e_j] = D_a e_j
            for j in 0..nd {
                let col = da.mul_vec(&crate::linalg::std_basis(nd, j));
                for k in 0..nd {
                    c[idx(nd + a, j, k)] = col[k].clone();
                    c[idx(j, nd + a, k)] = -col[k].clone();
                }
            }
            // [D_a, D_b] expressed in the derivation basis
            for (b, db) in ders.iter().enumerate() {
                if a == b {
                    continue;
                }
                let comm = da.mul(db).sub(&db.mul(da));
                let coords = coords_in_rows(&flat, &comm.flatten())
                    .ok_or(AlgebraError::NotClosed)?;
                for k in 0..hd {
                    c[idx(nd + a, nd + b, nd + k)] = coords[k].clone();
                }
            }
        }
        let mut labels = n.labels.clone();
        labels.extend(der_labels);
        LieAlgebra::new(labels, c)
    }

    /// Structure constants from a basis of matrices closed under
    /// commutators.
    pub fn from_matrix_basis(
        mats: &[RatMatrix],
        labels: Vec<String>,
    ) -> Result<LieAlgebra, AlgebraError> {
        let d = mats.len();
        assert_eq!(labels.len(), d);
        let flat = RatMatrix::from_rows(mats.iter().map(RatMatrix::flatten).collect());
        if flat.rank() != d {
            return Err(AlgebraError::Dimension(
                "matrix basis is linearly dependent".into(),
            ));
        }
        let mut c = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                if i == j {
                    continue;
                }
                let comm = mats[i].mul(&mats[j]).sub(&mats[j].mul(&mats[i]));
                let coords =
                    coords_in_rows(&flat, &comm.flatten()).ok_or(AlgebraError::NotClosed)?;
                for k in 0..d {
                    c[(i * d + j) * d + k] = coords[k].clone();
                }
            }
        }
        LieAlgebra::new(labels, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    pub fn heisenberg3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[(0, 1, rint(1), 2)],
        )
        .unwrap()
    }

    pub fn sl2() -> LieAlgebra {
        // basis (H, E, F)
        LieAlgebra::from_brackets(
            3,
            vec!["H".into(), "E".into(), "F".into()],
            &[
                (0, 1, rint(2), 1),
                (0, 2, rint(-2), 2),
                (1, 2, rint(1), 0),
            ],
        )
        .unwrap()
    }

    pub fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[
                (0, 1, rint(1), 2),
                (1, 2, rint(1), 0),
                (2, 0, rint(1), 1),
            ],
        )
        .unwrap()
    }

    pub fn e11() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[(0, 1, rint(1), 1), (0, 2, rint(-1), 2)],
        )
        .unwrap()
    }

    #[test]
    fn bracket_antisymmetry_and_examples() {
        let h3 = heisenberg3();
        let e1 = crate::linalg::std_basis(3, 0);
        let e2 = crate::linalg::std_basis(3, 1);
        let e3 = crate::linalg::std_basis(3, 2);
        assert_eq!(h3.bracket(&e1, &e2), e3);
        assert_eq!(
            h3.bracket(&e2, &e1),
            crate::linalg::vec_scale(&e3, &rint(-1))
        );
        assert!(vec_is_zero(&h3.bracket(&e1, &e1)));

        let sl2 = sl2();
        let e = crate::linalg::std_basis(3, 1);
        let f = crate::linalg::std_basis(3, 2);
        let h = crate::linalg::std_basis(3, 0);
        assert_eq!(sl2.bracket(&e, &f), h);
    }

    #[test]
    fn construction_rejects_antisymmetry_violation() {
        // c[0][1][2] = 1 but c[1][0][2] = 1
        let mut c = vec![Rat::zero(); 27];
        c[(0 * 3 + 1) * 3 + 2] = rint(1);
        c[(1 * 3 + 0) * 3 + 2] = rint(1);
        let err = LieAlgebra::new(LieAlgebra::default_labels(3), c).unwrap_err();
        assert!(matches!(err, AlgebraError::Antisymmetry { .. }));
    }

    #[test]
    fn construction_rejects_jacobi_violation() {
        // so(3) with [e3,e1] = e2 + e1 breaks Jacobi
        let err = LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[
                (0, 1, rint(1), 2),
                (1, 2, rint(1), 0),
                (2, 0, rint(1), 1),
                (2, 0, rint(1), 0),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::Jacobi { .. }));
    }

    #[test]
    fn killing_matches_hand_oracle() {
        // brute-force trace oracle, independent of KillingForm
        let brute = |g: &LieAlgebra| {
            RatMatrix::from_fn(g.dim(), g.dim(), |i, j| {
                let mut tr = Rat::zero();
                let ai = g.ad_basis(i);
                let aj = g.ad_basis(j);
                for r in 0..g.dim() {
                    for s in 0..g.dim() {
                        tr += ai.at(r, s) * aj.at(s, r);
                    }
                }
                tr
            })
        };
        for g in [heisenberg3(), sl2(), so3(), e11()] {
            assert_eq!(g.killing().matrix, brute(&g));
        }
        assert!(heisenberg3().killing().matrix.is_zero());
        let b = sl2().killing().matrix;
        assert_eq!(b, RatMatrix::from_i64(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
        assert_eq!(so3().killing().matrix, RatMatrix::from_i64(&[&[-2, 0, 0], &[0, -2, 0], &[0, 0, -2]]));
    }

    #[test]
    fn killing_is_ad_invariant() {
        for g in [sl2(), so3(), e11(), heisenberg3()] {
            let b = g.killing().matrix;
            let d = g.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let x = crate::linalg::std_basis(d, i);
                        let y = crate::linalg::std_basis(d, j);
                        let z = crate::linalg::std_basis(d, k);
                        let t1 = crate::linalg::vec_dot(&b.mul_vec(&g.bracket(&x, &y)), &z);
                        let t2 = crate::linalg::vec_dot(&b.mul_vec(&y), &g.bracket(&x, &z));
                        assert_eq!(t1 + t2, Rat::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn series_examples() {
        let h3 = heisenberg3();
        assert!(h3.is_nilpotent());
        assert_eq!(h3.nilpotency_step(), Some(2));
        assert!(!sl2().is_solvable());
        let abelian = LieAlgebra::from_brackets(2, LieAlgebra::default_labels(2), &[]).unwrap();
        assert_eq!(abelian.nilpotency_step(), Some(1));
        assert!(e11().is_solvable());
        assert!(!e11().is_nilpotent());
    }

    #[test]
    fn center_and_centralizer_examples() {
        let h3 = heisenberg3();
        let center = h3.center();
        assert_eq!(
            center,
            Subspace::from_vectors(3, &[crate::linalg::std_basis(3, 2)])
        );
        assert!(sl2().center().is_zero());
        let abelian = LieAlgebra::from_brackets(2, LieAlgebra::default_labels(2), &[]).unwrap();
        assert_eq!(abelian.center(), Subspace::full(2));
    }

    #[test]
    fn normalizer_of_borel_in_sl2() {
        let sl2 = sl2();
        // span{H,E} is self-normalizing
        let b = Subspace::from_vectors(
            3,
            &[crate::linalg::std_basis(3, 0), crate::linalg::std_basis(3, 1)],
        );
        assert_eq!(sl2.normalizer(&b), b);
        // the center of h3 is normalized by everything
        let h3 = heisenberg3();
        assert_eq!(h3.normalizer(&h3.center()), Subspace::full(3));
    }

    #[test]
    fn quotient_examples() {
        let h3 = heisenberg3();
        let (q, proj) = h3.quotient(&h3.center()).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.is_nilpotent());
        assert_eq!(q.nilpotency_step(), Some(1)); // abelian
        assert_eq!(proj.rows(), 2);

        let e11 = e11();
        let ideal = Subspace::from_vectors(
            3,
            &[crate::linalg::std_basis(3, 1), crate::linalg::std_basis(3, 2)],
        );
        let (q, _) = e11.quotient(&ideal).unwrap();
        assert_eq!(q.dim(), 1);

        let whole = Subspace::full(3);
        let (q, _) = h3.quotient(&whole).unwrap();
        assert_eq!(q.dim(), 0);

        // non-ideal is rejected
        let not_ideal = Subspace::from_vectors(3, &[crate::linalg::std_basis(3, 0)]);
        assert!(matches!(
            h3.quotient(&not_ideal),
            Err(AlgebraError::NotIdeal)
        ));
    }

    #[test]
    fn matrix_basis_construction_sl2() {
        let h = RatMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        let e = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = RatMatrix::from_i64(&[&[0, 0], &[1, 0]]);
        let g = LieAlgebra::from_matrix_basis(
            &[h, e, f],
            vec!["H".into(), "E".into(), "F".into()],
        )
        .unwrap();
        assert_eq!(g, sl2());
    }

    #[test]
    fn semidirect_h3_with_rotation() {
        let h3 = heisenberg3();
        let j = RatMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let g = LieAlgebra::semidirect_by_derivations(&h3, &[j], vec!["J".into()]).unwrap();
        assert_eq!(g.dim(), 4);
        // [J, e1] = e2
        let je1 = g.bracket(
            &crate::linalg::std_basis(4, 3),
            &crate::linalg::std_basis(4, 0),
        );
        assert_eq!(je1, crate::linalg::std_basis(4, 1));
    }
}
