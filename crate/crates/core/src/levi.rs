//! Radical, nilradical, Levi decomposition, and the compact/noncompact
//! split of semisimple factors — all exact.

use crate::lie::{AlgebraError, LieAlgebra};
use crate::linalg::{coords_in_rows, std_basis, RatMatrix, Subspace};
use crate::rat::Rat;
use num_traits::Zero;

/// The classical decomposition data of an algebra: radical, nilradical,
/// a Levi factor and its compact/noncompact split.
#[derive(Debug, Clone)]
pub struct LeviData {
    pub radical: Subspace,
    pub nilradical: Subspace,
    pub levi: Subspace,
    pub levi_nc: Subspace,
    pub levi_cp: Subspace,
}

impl LieAlgebra {
    /// Solvable radical via Cartan's criterion:
    /// `Rad(g) = {x : B(x, [g,g]) = 0}`. The result is verified to be a
    /// solvable ideal.
    pub fn radical(&self) -> Result<Subspace, AlgebraError> {
        let derived = self.bracket_span(&self.full_space(), &self.full_space());
        let b = self.killing().matrix;
        let rad = if derived.is_zero() {
            self.full_space()
        } else {
            // rows: d_jᵀ B, kernel gives the orthogonal set
            let cond = derived.basis().mul(&b);
            Subspace::span(self.dim(), &cond.kernel())
        };
        if !self.is_ideal(&rad) {
            return Err(AlgebraError::Verification("radical is not an ideal".into()));
        }
        if rad.dim() > 0 {
            let sub = self.subalgebra(rad.basis())?;
            if !sub.is_solvable() {
                return Err(AlgebraError::Verification("radical is not solvable".into()));
            }
        }
        Ok(rad)
    }

    /// Nilradical: with `r = radical(g)`, close the set `{ad x : x ∈ r}`
    /// under products into an associative span `A`; then
    /// `Nil(g) = {x ∈ r : tr(ad(x)·a) = 0 for all a ∈ A}`.
    /// The trace pairing linearizes ad-nilpotency exactly over the
    /// rationals. Verified to be a nilpotent ideal containing `[g, r]`.
    pub fn nilradical(&self) -> Result<Subspace, AlgebraError> {
        let r = self.radical()?;
        if r.is_zero() {
            return Ok(Subspace::zero(self.dim()));
        }
        let gens: Vec<RatMatrix> = r.basis().rows_iter().map(|x| self.ad(x)).collect();
        let assoc = associative_closure(&gens);
        // conditions tr(ad(x)·a) = 0, x = Σ c_i r_i
        let mut rows = Vec::new();
        for a in &assoc {
            let row: Vec<Rat> = gens.iter().map(|g| g.mul(a).trace()).collect();
            rows.push(row);
        }
        let nil_coords = if rows.is_empty() {
            RatMatrix::identity(r.dim())
        } else {
            RatMatrix::from_rows(rows).kernel()
        };
        let vecs: Vec<Vec<Rat>> = nil_coords
            .rows_iter()
            .map(|c| r.basis().transpose().mul_vec(c))
            .collect();
        let nil = Subspace::from_vectors(self.dim(), &vecs);
        // verification
        if !self.is_ideal(&nil) {
            return Err(AlgebraError::Verification(
                "nilradical is not an ideal".into(),
            ));
        }
        if nil.dim() > 0 && !self.subalgebra(nil.basis())?.is_nilpotent() {
            return Err(AlgebraError::Verification(
                "nilradical is not nilpotent".into(),
            ));
        }
        let g_r = self.bracket_span(&self.full_space(), &r);
        if !nil.contains(&g_r) {
            return Err(AlgebraError::Verification(
                "nilradical does not contain [g, radical]".into(),
            ));
        }
        Ok(nil)
    }

    /// Levi decomposition. With a candidate, verify it; without one, lift a
    /// Levi subalgebra by recursing along the derived series of the radical
    /// and solving the cocycle correction exactly once the radical is
    /// abelian. Always verified before returning.
    pub fn levi(&self, candidate: Option<&Subspace>) -> Result<LeviData, AlgebraError> {
        let radical = self.radical()?;
        let nilradical = self.nilradical()?;
        let levi = match candidate {
            Some(l) => {
                if !self.is_subalgebra(l) {
                    return Err(AlgebraError::NotSubalgebra);
                }
                l.clone()
            }
            None => self.levi_subalgebra(&radical)?,
        };
        if !self.is_subalgebra(&levi) {
            return Err(AlgebraError::Lifting("lifted space is not closed".into()));
        }
        if !levi.sum_is_direct(&radical)? || levi.sum(&radical)?.dim() != self.dim() {
            return Err(AlgebraError::Lifting(
                "Levi factor does not complement the radical".into(),
            ));
        }
        let (levi_nc, levi_cp) = if levi.is_zero() {
            (Subspace::zero(self.dim()), Subspace::zero(self.dim()))
        } else {
            self.compact_split(&levi)?
        };
        Ok(LeviData {
            radical,
            nilradical,
            levi,
            levi_nc,
            levi_cp,
        })
    }

    fn levi_subalgebra(&self, radical: &Subspace) -> Result<Subspace, AlgebraError> {
        if radical.is_zero() {
            return Ok(self.full_space());
        }
        if radical.dim() == self.dim() {
            return Ok(Subspace::zero(self.dim()));
        }
        let derived_r = {
            let r_alg = self.subalgebra(radical.basis())?;
            let dr = r_alg.bracket_span(&r_alg.full_space(), &r_alg.full_space());
            // map derived-series vectors back to ambient coordinates
            let vecs: Vec<Vec<Rat>> = dr
                .basis()
                .rows_iter()
                .map(|c| radical.basis().transpose().mul_vec(c))
                .collect();
            Subspace::from_vectors(self.dim(), &vecs)
        };
        if derived_r.is_zero() {
            return self.levi_abelian_radical(radical);
        }
        // recurse modulo the derived ideal of the radical
        let (quot, proj) = self.quotient(&derived_r)?;
        let levi_bar = quot.levi_subalgebra(&{
            // radical of the quotient is the image of the radical
            let vecs: Vec<Vec<Rat>> = radical
                .basis()
                .rows_iter()
                .map(|x| proj.mul_vec(x))
                .collect();
            Subspace::from_vectors(quot.dim(), &vecs)
        })?;
        // preimage of levi_bar in self
        let member = levi_bar.membership_matrix();
        let preimage = Subspace::span(self.dim(), &member.mul(&proj).kernel());
        let sub = self.subalgebra(preimage.basis())?;
        let inner_rad = {
            let vecs: Vec<Vec<Rat>> = derived_r
                .basis()
                .rows_iter()
                .map(|x| {
                    coords_in_rows(preimage.basis(), x)
                        .expect("derived radical lies in the preimage")
                })
                .collect();
            Subspace::from_vectors(sub.dim(), &vecs)
        };
        let inner_levi = sub.levi_subalgebra(&inner_rad)?;
        let vecs: Vec<Vec<Rat>> = inner_levi
            .basis()
            .rows_iter()
            .map(|c| preimage.basis().transpose().mul_vec(c))
            .collect();
        Ok(Subspace::from_vectors(self.dim(), &vecs))
    }

    /// Cocycle correction for an abelian radical: choose the standard
    /// complement `V` of the radical and solve for `φ: V → r` making
    /// `{v + φ(v)}` closed under brackets. Solvability is guaranteed in
    /// characteristic zero; an inconsistent system is reported loudly.
    fn levi_abelian_radical(&self, radical: &Subspace) -> Result<Subspace, AlgebraError> {
        let n = self.dim();
        let (_, pivots) = radical.basis().rref();
        let compl: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vd = compl.len();
        let rd = radical.dim();
        // decomposition helper: x = V-part + r-part in the combined basis
        let mut rows = RatMatrix::empty(n);
        for &c in &compl {
            rows = rows.vstack(&RatMatrix::from_rows(vec![std_basis(n, c)]));
        }
        let combined = rows.vstack(radical.basis());
        let inv = combined.transpose().inverse()?;
        let v_coords = RatMatrix::from_fn(vd, n, |i, j| inv.at(i, j).clone());
        let r_coords = RatMatrix::from_fn(rd, n, |i, j| inv.at(vd + i, j).clone());
        // ad(v_i) restricted to the radical, in radical coordinates
        let rho: Vec<RatMatrix> = compl
            .iter()
            .map(|&ci| {
                let ad = self.ad(&std_basis(n, ci));
                let img = ad.mul(&radical.basis().transpose()); // n × rd
                RatMatrix::from_fn(rd, rd, |a, b| {
                    let col: Vec<Rat> = (0..n).map(|r| img.at(r, b).clone()).collect();
                    coords_in_rows(radical.basis(), &col).expect("radical is an ideal")[a].clone()
                })
            })
            .collect();
        // unknowns P[k][j] (rd × vd): φ(v_j) = Σ_k P[k][j] r_k
        let unknowns = rd * vd;
        let mut sys_rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for a in 0..vd {
            for b in a + 1..vd {
                let br = self.bracket(&std_basis(n, compl[a]), &std_basis(n, compl[b]));
                let mu = v_coords.mul_vec(&br); // V-component coordinates
                let cc = r_coords.mul_vec(&br); // r-component coordinates
                // equation (per radical coordinate t):
                // Σ_j P[t][j] mu_j − (ρ_a P)[t][b] + (ρ_b P)[t][a] = cc_t
                for t in 0..rd {
                    let mut row = vec![Rat::zero(); unknowns];
                    for j in 0..vd {
                        if !mu[j].is_zero() {
                            row[t * vd + j] += mu[j].clone();
                        }
                    }
                    for s in 0..rd {
                        let w = rho[a].at(t, s).clone();
                        if !w.is_zero() {
                            row[s * vd + b] -= w;
                        }
                        let w = rho[b].at(t, s).clone();
                        if !w.is_zero() {
                            row[s * vd + a] += w;
                        }
                    }
                    sys_rows.push(row);
                    rhs.push(cc[t].clone());
                }
            }
        }
        let phi = if sys_rows.is_empty() {
            vec![Rat::zero(); unknowns]
        } else {
            RatMatrix::from_rows(sys_rows)
                .solve(&rhs)?
                .ok_or_else(|| {
                    AlgebraError::Lifting("cocycle correction system is inconsistent".into())
                })?
        };
        let mut vecs = Vec::with_capacity(vd);
        for (j, &cj) in compl.iter().enumerate() {
            let mut v = std_basis(n, cj);
            for t in 0..rd {
                let coef = &phi[t * vd + j];
                if !coef.is_zero() {
                    let radial = crate::linalg::vec_scale(radical.basis().row(t), coef);
                    v = crate::linalg::vec_add(&v, &radial);
                }
            }
            vecs.push(v);
        }
        Ok(Subspace::from_vectors(n, &vecs))
    }

    /// Decompose a semisimple subalgebra into its noncompact and compact
    /// parts: split into simple ideals, classify each by exact negative
    /// definiteness of its Killing form, and regroup.
    pub fn compact_split(&self, s: &Subspace) -> Result<(Subspace, Subspace), AlgebraError> {
        if s.is_zero() {
            return Ok((Subspace::zero(self.dim()), Subspace::zero(self.dim())));
        }
        let s_alg = self.subalgebra(s.basis())?;
        let b = s_alg.killing().matrix;
        if b.rank() != s_alg.dim() {
            return Err(AlgebraError::NotSemisimple);
        }
        let ideals = simple_ideals(&s_alg);
        let mut nc_vecs: Vec<Vec<Rat>> = Vec::new();
        let mut cp_vecs: Vec<Vec<Rat>> = Vec::new();
        for ideal in &ideals {
            let bi = s_alg.killing_on(ideal.basis());
            let compact = bi.is_negative_definite()?;
            for row in ideal.basis().rows_iter() {
                let ambient = s.basis().transpose().mul_vec(row);
                if compact {
                    cp_vecs.push(ambient);
                } else {
                    nc_vecs.push(ambient);
                }
            }
        }
        let nc = Subspace::from_vectors(self.dim(), &nc_vecs);
        let cp = Subspace::from_vectors(self.dim(), &cp_vecs);
        // the two parts must commute
        if !self.bracket_span(&nc, &cp).is_zero() {
            return Err(AlgebraError::Verification(
                "compact and noncompact parts do not commute".into(),
            ));
        }
        Ok((nc, cp))
    }
}

/// Minimal-ideal decomposition of a semisimple algebra: split off any
/// proper ideal generated by a basis vector (the Killing complement of an
/// ideal is a complementary ideal), recursing on both halves.
pub fn simple_ideals(s: &LieAlgebra) -> Vec<Subspace> {
    let d = s.dim();
    if d == 0 {
        return Vec::new();
    }
    for i in 0..d {
        let seed = Subspace::from_vectors(d, &[std_basis(d, i)]);
        let ideal = s.ideal_closure(&seed);
        if ideal.dim() < d {
            let b = s.killing().matrix;
            let compl = crate::linalg::orthocomplement(&b, &ideal, &Subspace::full(d))
                .expect("killing form shape");
            let mut out = Vec::new();
            for part in [ideal, compl] {
                let part_alg = s
                    .subalgebra(part.basis())
                    .expect("ideal of semisimple algebra is a subalgebra");
                for inner in simple_ideals(&part_alg) {
                    let vecs: Vec<Vec<Rat>> = inner
                        .basis()
                        .rows_iter()
                        .map(|c| part.basis().transpose().mul_vec(c))
                        .collect();
                    out.push(Subspace::from_vectors(d, &vecs));
                }
            }
            return out;
        }
    }
    vec![Subspace::full(d)]
}

/// Close a set of matrices under products: the span of all words of length
/// ≥ 1 in the generators. Left multiplication by generators reaches every
/// word.
fn associative_closure(gens: &[RatMatrix]) -> Vec<RatMatrix> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut span_rows: Vec<Vec<Rat>> = Vec::new();
    let mut basis_mats: Vec<RatMatrix> = Vec::new();
    fn add(m: &RatMatrix, span_rows: &mut Vec<Vec<Rat>>, basis: &mut Vec<RatMatrix>) -> bool {
        if m.is_zero() {
            return false;
        }
        let mut rows = span_rows.clone();
        rows.push(m.flatten());
        if RatMatrix::from_rows(rows).rank() > span_rows.len() {
            span_rows.push(m.flatten());
            basis.push(m.clone());
            true
        } else {
            false
        }
    }
    for g in gens {
        add(g, &mut span_rows, &mut basis_mats);
    }
    loop {
        let mut grew = false;
        let current = basis_mats.clone();
        for g in gens {
            for m in &current {
                if add(&g.mul(m), &mut span_rows, &mut basis_mats) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    basis_mats
}

/// Abstract nilpotent algebra `nil ⊕ abelian` used for fiber data.
pub fn nilpotent_extension(nil: &LieAlgebra, abelian_dim: usize) -> LieAlgebra {
    let ab = LieAlgebra::from_brackets(
        abelian_dim,
        (1..=abelian_dim).map(|i| format!("f{i}")).collect(),
        &[],
    )
    .expect("abelian algebra is valid");
    nil.direct_sum(&ab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            vec!["H".into(), "E".into(), "F".into()],
            &[(0, 1, rint(2), 1), (0, 2, rint(-2), 2), (1, 2, rint(1), 0)],
        )
        .unwrap()
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[(0, 1, rint(1), 2), (1, 2, rint(1), 0), (2, 0, rint(1), 1)],
        )
        .unwrap()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets(3, LieAlgebra::default_labels(3), &[(0, 1, rint(1), 2)]).unwrap()
    }

    fn e11() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            LieAlgebra::default_labels(3),
            &[(0, 1, rint(1), 1), (0, 2, rint(-1), 2)],
        )
        .unwrap()
    }

    /// sl(2,R) ⋉ R² with the standard representation.
    fn sl2_semidirect_r2() -> LieAlgebra {
        // basis: H, E, F, x, y
        LieAlgebra::from_brackets(
            5,
            vec!["H".into(), "E".into(), "F".into(), "x".into(), "y".into()],
            &[
                (0, 1, rint(2), 1),
                (0, 2, rint(-2), 2),
                (1, 2, rint(1), 0),
                (0, 3, rint(1), 3),
                (0, 4, rint(-1), 4),
                (1, 4, rint(1), 3),
                (2, 3, rint(1), 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn radical_examples() {
        assert!(sl2().radical().unwrap().is_zero());
        assert_eq!(h3().radical().unwrap(), Subspace::full(3));
        let g = sl2().direct_sum(
            &LieAlgebra::from_brackets(1, vec!["f0".into()], &[]).unwrap(),
        );
        let rad = g.radical().unwrap();
        assert_eq!(rad, Subspace::from_vectors(4, &[std_basis(4, 3)]));
    }

    #[test]
    fn nilradical_examples() {
        let two_dim = LieAlgebra::from_brackets(
            2,
            LieAlgebra::default_labels(2),
            &[(0, 1, rint(1), 1)],
        )
        .unwrap();
        assert_eq!(
            two_dim.nilradical().unwrap(),
            Subspace::from_vectors(2, &[std_basis(2, 1)])
        );
        assert_eq!(
            e11().nilradical().unwrap(),
            Subspace::from_vectors(3, &[std_basis(3, 1), std_basis(3, 2)])
        );
        assert_eq!(h3().nilradical().unwrap(), Subspace::full(3));
        assert!(sl2().nilradical().unwrap().is_zero());
    }

    #[test]
    fn nilradical_contains_g_bracket_radical() {
        for g in [e11(), h3(), sl2_semidirect_r2()] {
            let nil = g.nilradical().unwrap();
            let gr = g.bracket_span(&g.full_space(), &g.radical().unwrap());
            assert!(nil.contains(&gr));
        }
    }

    #[test]
    fn levi_of_semidirect_product() {
        let g = sl2_semidirect_r2();
        let data = g.levi(None).unwrap();
        assert_eq!(data.radical.dim(), 2);
        assert_eq!(data.nilradical.dim(), 2);
        assert_eq!(data.levi.dim(), 3);
        assert!(g.is_subalgebra(&data.levi));
        assert!(data.levi.sum_is_direct(&data.radical).unwrap());
        // semidirect with the sl2 block in standard position: the lift
        // must recover a complement even so
        assert_eq!(
            data.radical,
            Subspace::from_vectors(5, &[std_basis(5, 3), std_basis(5, 4)])
        );
    }

    #[test]
    fn levi_of_semisimple_and_solvable() {
        let d = sl2().levi(None).unwrap();
        assert_eq!(d.levi, Subspace::full(3));
        assert!(d.radical.is_zero());
        let d = e11().levi(None).unwrap();
        assert!(d.levi.is_zero());
    }

    #[test]
    fn levi_with_candidate_verifies() {
        let g = sl2_semidirect_r2();
        let good = Subspace::from_vectors(
            5,
            &[std_basis(5, 0), std_basis(5, 1), std_basis(5, 2)],
        );
        assert!(g.levi(Some(&good)).is_ok());
        let bad = Subspace::from_vectors(5, &[std_basis(5, 0), std_basis(5, 3)]);
        assert!(g.levi(Some(&bad)).is_err());
    }

    /// A twisted presentation: Levi factor not spanned by standard basis
    /// vectors. Obtained from sl2 ⋉ R² by mixing x into H's basis vector.
    #[test]
    fn levi_lifting_with_nonaligned_complement() {
        let g = sl2_semidirect_r2();
        // change of basis: H' = H + x. Recompute structure constants.
        let mut rows = RatMatrix::identity(5);
        rows.set(0, 3, rint(1));
        let inv = rows.transpose().inverse().unwrap();
        let d = 5usize;
        let mut c = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let br = g.bracket(rows.row(i), rows.row(j));
                let coords = inv.mul_vec(&br);
                for k in 0..d {
                    c[(i * d + j) * d + k] = coords[k].clone();
                }
            }
        }
        let twisted = LieAlgebra::new(LieAlgebra::default_labels(5), c).unwrap();
        let data = twisted.levi(None).unwrap();
        assert_eq!(data.levi.dim(), 3);
        assert!(twisted.is_subalgebra(&data.levi));
        assert!(data.levi.sum_is_direct(&data.radical).unwrap());
    }

    #[test]
    fn compact_split_examples() {
        let sl2 = sl2();
        let (nc, cp) = sl2.compact_split(&Subspace::full(3)).unwrap();
        assert_eq!(nc.dim(), 3);
        assert!(cp.is_zero());

        let so3 = so3();
        let (nc, cp) = so3.compact_split(&Subspace::full(3)).unwrap();
        assert!(nc.is_zero());
        assert_eq!(cp.dim(), 3);

        let mixed = sl2.direct_sum(&so3);
        let (nc, cp) = mixed.compact_split(&Subspace::full(6)).unwrap();
        assert_eq!(nc.dim(), 3);
        assert_eq!(cp.dim(), 3);
        assert!(mixed.bracket_span(&nc, &cp).is_zero());
        // nc is precisely the sl2 block
        assert!(nc.contains_vec(&std_basis(6, 0)));
        assert!(cp.contains_vec(&std_basis(6, 3)));

        // not semisimple is rejected
        assert!(matches!(
            h3().compact_split(&Subspace::full(3)),
            Err(AlgebraError::NotSemisimple)
        ));
    }

    #[test]
    fn simple_ideal_decomposition() {
        let mixed = sl2().direct_sum(&so3());
        let ideals = simple_ideals(&mixed);
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().all(|i| i.dim() == 3));
    }

    #[test]
    fn levi_quotient_has_zero_radical() {
        for g in [sl2_semidirect_r2(), e11(), h3()] {
            let rad = g.radical().unwrap();
            if rad.dim() == g.dim() {
                continue;
            }
            let (q, _) = g.quotient(&rad).unwrap();
            assert!(q.radical().unwrap().is_zero());
        }
    }
}

