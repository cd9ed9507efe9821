//! Twisted loop algebras and their finite-dimensional truncations.
//!
//! For a fold of order m, the twisted loop algebra is the span of the
//! x (x) t^r with x in g_eps and r = -eps mod m.  Truncating at nonzero
//! points a_1..a_l (with pairwise distinct a_k^m) and a power N quotients by
//! the ideal generated by P(t^m) where P(s) = prod_k (s - a_k^m)^N, leaving
//! an algebra of dimension l N dim g.  The untwisted case is the order-1
//! fold of the same algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{FieldElement, LaurentPoly};
use crate::chevalley::LieElement;
use crate::folding::{FoldError, FoldedAlgebra};
use crate::linalg::CoordSolver;

#[derive(Debug)]
pub enum TruncError {
    Fold(FoldError),
    ZeroPoint,
    RepeatedPoint,
    NoPoints,
    ZeroPower,
}

impl fmt::Display for TruncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruncError::Fold(e) => write!(f, "{e}"),
            TruncError::ZeroPoint => write!(f, "truncation points must be nonzero"),
            TruncError::RepeatedPoint => {
                write!(f, "truncation points must have pairwise distinct m-th powers")
            }
            TruncError::NoPoints => write!(f, "at least one truncation point required"),
            TruncError::ZeroPower => write!(f, "truncation power must be positive"),
        }
    }
}

impl std::error::Error for TruncError {}

impl From<FoldError> for TruncError {
    fn from(e: FoldError) -> Self {
        TruncError::Fold(e)
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    pub fold: FoldedAlgebra,
    pub points: Vec<FieldElement>,
    pub power: usize,
    /// P(s) = prod_k (s - a_k^m)^N, a polynomial in s = t^m
    pub pmod: LaurentPoly,
    /// number of residues per eigenvector: l * N
    pub deg: usize,
    /// basis: (eps, eigenvector index, power of s); loop representative is
    /// eigenvector (x) t^{(m - eps) mod m + m j}
    pub basis: Vec<(usize, usize, usize)>,
    index: BTreeMap<(usize, usize, usize), usize>,
    solvers: Vec<CoordSolver>,
}

impl TruncatedAlgebra {
    pub fn new(
        fold: FoldedAlgebra,
        points: &[FieldElement],
        power: usize,
    ) -> Result<Self, TruncError> {
        if points.is_empty() {
            return Err(TruncError::NoPoints);
        }
        if power == 0 {
            return Err(TruncError::ZeroPower);
        }
        let tag = fold.tag();
        let m = fold.m as usize;
        let mut pow_points = Vec::new();
        for a in points {
            if a.is_zero() {
                return Err(TruncError::ZeroPoint);
            }
            let am = a.pow(m as i64).unwrap();
            if pow_points.contains(&am) {
                return Err(TruncError::RepeatedPoint);
            }
            pow_points.push(am);
        }
        let mut pmod = LaurentPoly::one(tag);
        for am in &pow_points {
            pmod = pmod.mul(&LaurentPoly::linear(am).pow(power as u32));
        }
        let deg = points.len() * power;
        let mut basis = Vec::new();
        let mut index = BTreeMap::new();
        for eps in 0..m {
            for i in 0..fold.eigenbasis[eps].len() {
                for j in 0..deg {
                    index.insert((eps, i, j), basis.len());
                    basis.push((eps, i, j));
                }
            }
        }
        let parent_dim = fold.parent.dim();
        let mut solvers = Vec::new();
        for eps in 0..m {
            let mut cs = CoordSolver::new(parent_dim, tag);
            for v in fold.eigenbasis[eps].iter() {
                cs.insert(v.elem.to_dense(parent_dim));
            }
            solvers.push(cs);
        }
        Ok(TruncatedAlgebra {
            fold,
            points: points.to_vec(),
            power,
            pmod,
            deg,
            basis,
            index,
            solvers,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn tag(&self) -> u8 {
        self.fold.tag()
    }

    /// Loop exponent of a basis element.
    pub fn exponent(&self, b: usize) -> i64 {
        let (eps, _, j) = self.basis[b];
        let m = self.fold.m as i64;
        ((m - eps as i64) % m) + m * j as i64
    }

    /// Image of x (x) t^r in the truncation, for x in the eigenspace
    /// determined by r mod m.  None if x does not lie in that eigenspace.
    pub fn project_loop(&self, x: &LieElement, r: i64) -> Option<Vec<FieldElement>> {
        let tag = self.tag();
        let mut out = vec![FieldElement::zero(tag); self.dim()];
        if x.is_zero() {
            return Some(out);
        }
        let m = self.fold.m as i64;
        let eps = ((-r) % m + m) % m;
        let base = (m - eps) % m;
        let coords = self.solvers[eps as usize].express(&x.to_dense(self.fold.parent.dim()))?;
        // reduce s^q mod P(s), q possibly negative
        debug_assert_eq!((r - base).rem_euclid(m), 0);
        let q = (r - base).div_euclid(m);
        let rem = LaurentPoly::monomial(q, FieldElement::one(tag))
            .rem(&self.pmod)
            .expect("reduction mod a unit-leading polynomial");
        for (p, c) in rem.terms() {
            assert!(*p >= 0 && (*p as usize) < self.deg);
            for (i, ci) in coords.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let idx = self.index[&(eps as usize, i, *p as usize)];
                out[idx] = out[idx].add(&ci.mul(c));
            }
        }
        Some(out)
    }

    pub fn bracket_basis(&self, b1: usize, b2: usize) -> Vec<FieldElement> {
        let (e1, i1, _) = self.basis[b1];
        let (e2, i2, _) = self.basis[b2];
        let z = self.fold.parent.bracket(
            &self.fold.eigenbasis[e1][i1].elem,
            &self.fold.eigenbasis[e2][i2].elem,
        );
        self.project_loop(&z, self.exponent(b1) + self.exponent(b2))
            .expect("brackets close in the truncation")
    }

    pub fn bracket(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let tag = self.tag();
        let mut out = vec![FieldElement::zero(tag); self.dim()];
        for (i, ci) in x.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in y.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let b = self.bracket_basis(i, j);
                let f = ci.mul(cj);
                for (k, ck) in b.iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] = out[k].add(&ck.mul(&f));
                    }
                }
            }
        }
        out
    }

    /// Full structure-constant table.
    pub fn bracket_table(&self) -> Vec<Vec<Vec<FieldElement>>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.bracket_basis(i, j)).collect())
            .collect()
    }
}

/// A linear map between truncated algebras given on source basis elements.
pub struct TruncMap {
    pub matrix: Vec<Vec<FieldElement>>,
}

impl TruncMap {
    pub fn apply(&self, tag: u8, x: &[FieldElement]) -> Vec<FieldElement> {
        let n = self.matrix[0].len();
        let mut out = vec![FieldElement::zero(tag); n];
        for (i, ci) in x.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (k, ck) in self.matrix[i].iter().enumerate() {
                if !ck.is_zero() {
                    out[k] = out[k].add(&ck.mul(ci));
                }
            }
        }
        out
    }

    /// Verify the map is a Lie algebra isomorphism by exhausting basis
    /// brackets and checking bijectivity.
    pub fn verify_iso(&self, src: &TruncatedAlgebra, dst: &TruncatedAlgebra) -> bool {
        if src.dim() != dst.dim() {
            return false;
        }
        let mut cs = CoordSolver::new(dst.dim(), dst.tag());
        for row in &self.matrix {
            let reduced = cs.express(row);
            if reduced.is_some() {
                return false; // not injective
            }
            cs.insert(row.clone());
        }
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = self.apply(dst.tag(), &src.bracket_basis(i, j));
                let rhs = dst.bracket(&self.matrix[i], &self.matrix[j]);
                if lhs
                    .iter()
                    .zip(rhs.iter())
                    .any(|(a, b)| !a.sub(b).is_zero())
                {
                    return false;
                }
            }
        }
        true
    }
}

/// The untwisting map: the twisted truncation at points a_k is isomorphic to
/// the untwisted truncation of the parent at the same points, by reducing
/// each loop representative mod prod_k (t - a_k)^N.
pub fn untwist_map(src: &TruncatedAlgebra, dst: &TruncatedAlgebra) -> TruncMap {
    assert_eq!(dst.fold.m, 1, "untwist target is an order-1 fold");
    let matrix = (0..src.dim())
        .map(|b| {
            let (eps, i, _) = src.basis[b];
            let x = &src.fold.eigenbasis[eps][i].elem;
            dst.project_loop(x, src.exponent(b))
                .expect("order-1 fold accepts every element")
        })
        .collect();
    TruncMap { matrix }
}

/// Localization: a multi-point truncation splits as the direct sum of the
/// single-point truncations.  Columns are the concatenated part coordinates.
pub fn crt_map(src: &TruncatedAlgebra, parts: &[TruncatedAlgebra]) -> TruncMap {
    let matrix = (0..src.dim())
        .map(|b| {
            let (eps, i, _) = src.basis[b];
            let x = &src.fold.eigenbasis[eps][i].elem;
            let mut row = Vec::new();
            for part in parts {
                row.extend(
                    part.project_loop(x, src.exponent(b))
                        .expect("same grading"),
                );
            }
            row
        })
        .collect();
    TruncMap { matrix }
}

/// Full check that the multi-point truncation splits as the direct sum of
/// the given single-point truncations: bijectivity plus the bracket
/// homomorphism property into the componentwise bracket.
pub fn verify_crt(src: &TruncatedAlgebra, parts: &[TruncatedAlgebra]) -> bool {
    if src.dim() != parts.iter().map(|p| p.dim()).sum::<usize>() {
        return false;
    }
    let map = crt_map(src, parts);
    let mut cs = CoordSolver::new(src.dim(), src.tag());
    for row in &map.matrix {
        if cs.express(row).is_some() {
            return false;
        }
        cs.insert(row.clone());
    }
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = map.apply(src.tag(), &src.bracket_basis(i, j));
            let mut rhs = Vec::with_capacity(src.dim());
            let mut off = 0;
            for p in parts {
                rhs.extend(p.bracket(
                    &map.matrix[i][off..off + p.dim()],
                    &map.matrix[j][off..off + p.dim()],
                ));
                off += p.dim();
            }
            if lhs.iter().zip(rhs.iter()).any(|(a, b)| !a.sub(b).is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Rescaling t -> ct carries the truncation at points c a_k to the one at
/// points a_k: x (x) t^r goes to c^r x (x) t^r.
pub fn dilation_map(src: &TruncatedAlgebra, dst: &TruncatedAlgebra, c: &FieldElement) -> TruncMap {
    let matrix = (0..src.dim())
        .map(|b| {
            let (eps, i, _) = src.basis[b];
            let x = &src.fold.eigenbasis[eps][i].elem;
            let r = src.exponent(b);
            let v = dst.project_loop(x, r).expect("same grading");
            let f = c.pow(r).unwrap();
            v.into_iter().map(|y| y.mul(&f)).collect()
        })
        .collect();
    TruncMap { matrix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folding::{standard_fold, untwisted_fold};
    use crate::rootdata::{CartanDatum, TypeLetter};

    fn fe(tag: u8, n: i64) -> FieldElement {
        FieldElement::from_int(tag, n)
    }

    #[test]
    fn dimensions() {
        // untwisted: l N dim g
        let a2 = CartanDatum::new(TypeLetter::A, 2).unwrap();
        let f = untwisted_fold(&a2, 1).unwrap();
        let t = TruncatedAlgebra::new(f.clone(), &[fe(1, 1), fe(1, 2)], 1).unwrap();
        assert_eq!(t.dim(), 16);
        let t = TruncatedAlgebra::new(f, &[fe(1, 1), fe(1, 2)], 2).unwrap();
        assert_eq!(t.dim(), 32);
        // twisted single point: N dim g
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let t = TruncatedAlgebra::new(f.clone(), &[fe(2, 1)], 1).unwrap();
        assert_eq!(t.dim(), 8);
        let t = TruncatedAlgebra::new(f, &[fe(2, 3)], 2).unwrap();
        assert_eq!(t.dim(), 16);
        let f = standard_fold(TypeLetter::D, 4, 3).unwrap();
        let t = TruncatedAlgebra::new(f, &[fe(3, 1)], 1).unwrap();
        assert_eq!(t.dim(), 28);
    }

    #[test]
    fn bad_points_rejected() {
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        assert!(matches!(
            TruncatedAlgebra::new(f.clone(), &[fe(2, 0)], 1),
            Err(TruncError::ZeroPoint)
        ));
        // 1 and -1 square to the same point
        assert!(matches!(
            TruncatedAlgebra::new(f.clone(), &[fe(2, 1), fe(2, -1)], 1),
            Err(TruncError::RepeatedPoint)
        ));
        assert!(matches!(
            TruncatedAlgebra::new(f.clone(), &[], 1),
            Err(TruncError::NoPoints)
        ));
        assert!(matches!(
            TruncatedAlgebra::new(f, &[fe(2, 1)], 0),
            Err(TruncError::ZeroPower)
        ));
    }

    #[test]
    fn brackets_close_and_satisfy_jacobi() {
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let t = TruncatedAlgebra::new(f, &[fe(2, 2)], 2).unwrap();
        let d = t.dim();
        // antisymmetry on all pairs, Jacobi on a stride of triples
        for i in 0..d {
            for j in 0..d {
                let xy = t.bracket_basis(i, j);
                let yx = t.bracket_basis(j, i);
                for k in 0..d {
                    assert!(xy[k].add(&yx[k]).is_zero());
                }
            }
        }
        let e = |i: usize| {
            let mut v = vec![FieldElement::zero(2); d];
            v[i] = FieldElement::one(2);
            v
        };
        for i in (0..d).step_by(3) {
            for j in (0..d).step_by(4) {
                for k in (0..d).step_by(5) {
                    let lhs = t.bracket(&e(i), &t.bracket_basis(j, k));
                    let r1 = t.bracket(&t.bracket_basis(i, j), &e(k));
                    let r2 = t.bracket(&e(j), &t.bracket_basis(i, k));
                    for c in 0..d {
                        assert!(lhs[c].sub(&r1[c]).sub(&r2[c]).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn untwist_iso_a2() {
        let a2 = CartanDatum::new(TypeLetter::A, 2).unwrap();
        let tw = TruncatedAlgebra::new(
            standard_fold(TypeLetter::A, 2, 2).unwrap(),
            &[fe(2, 2)],
            1,
        )
        .unwrap();
        let untw =
            TruncatedAlgebra::new(untwisted_fold(&a2, 2).unwrap(), &[fe(2, 2)], 1).unwrap();
        assert_eq!(tw.dim(), untw.dim());
        let map = untwist_map(&tw, &untw);
        assert!(map.verify_iso(&tw, &untw));
    }

    #[test]
    fn untwist_iso_d4_triality() {
        let d4 = CartanDatum::new(TypeLetter::D, 4).unwrap();
        let tw = TruncatedAlgebra::new(
            standard_fold(TypeLetter::D, 4, 3).unwrap(),
            &[fe(3, 1)],
            1,
        )
        .unwrap();
        let untw =
            TruncatedAlgebra::new(untwisted_fold(&d4, 3).unwrap(), &[fe(3, 1)], 1).unwrap();
        let map = untwist_map(&tw, &untw);
        assert!(map.verify_iso(&tw, &untw));
    }

    #[test]
    fn crt_splits_multipoint() {
        let a2 = CartanDatum::new(TypeLetter::A, 2).unwrap();
        let f = untwisted_fold(&a2, 1).unwrap();
        let big = TruncatedAlgebra::new(f.clone(), &[fe(1, 1), fe(1, 2)], 1).unwrap();
        let p1 = TruncatedAlgebra::new(f.clone(), &[fe(1, 1)], 1).unwrap();
        let p2 = TruncatedAlgebra::new(f, &[fe(1, 2)], 1).unwrap();
        let map = crt_map(&big, &[p1.clone(), p2.clone()]);
        // bijective and a bracket homomorphism into the direct sum
        assert_eq!(big.dim(), p1.dim() + p2.dim());
        let mut cs = CoordSolver::new(big.dim(), 1);
        for row in &map.matrix {
            assert!(cs.express(row).is_none());
            cs.insert(row.clone());
        }
        for i in 0..big.dim() {
            for j in 0..big.dim() {
                let lhs = map.apply(1, &big.bracket_basis(i, j));
                let xi = &map.matrix[i];
                let xj = &map.matrix[j];
                let mut rhs = p1.bracket(&xi[..p1.dim()], &xj[..p1.dim()]);
                rhs.extend(p1_tail(&p2, xi, xj, p1.dim()));
                for c in 0..big.dim() {
                    assert!(lhs[c].sub(&rhs[c]).is_zero(), "crt bracket mismatch");
                }
            }
        }
        // twisted two-point case splits the same way
        let f = standard_fold(TypeLetter::A, 3, 2).unwrap();
        let big = TruncatedAlgebra::new(f.clone(), &[fe(2, 1), fe(2, 2)], 1).unwrap();
        let p1 = TruncatedAlgebra::new(f.clone(), &[fe(2, 1)], 1).unwrap();
        let p2 = TruncatedAlgebra::new(f, &[fe(2, 2)], 1).unwrap();
        let map = crt_map(&big, &[p1.clone(), p2.clone()]);
        let mut cs = CoordSolver::new(big.dim(), 2);
        for row in &map.matrix {
            assert!(cs.express(row).is_none());
            cs.insert(row.clone());
        }
    }

    fn p1_tail(
        p2: &TruncatedAlgebra,
        xi: &[FieldElement],
        xj: &[FieldElement],
        off: usize,
    ) -> Vec<FieldElement> {
        p2.bracket(&xi[off..], &xj[off..])
    }

    #[test]
    fn dilation_rescales_points() {
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let src = TruncatedAlgebra::new(f.clone(), &[fe(2, 2)], 1).unwrap();
        let dst = TruncatedAlgebra::new(f, &[fe(2, 1)], 1).unwrap();
        let map = dilation_map(&src, &dst, &fe(2, 2));
        assert!(map.verify_iso(&src, &dst));
    }
}
