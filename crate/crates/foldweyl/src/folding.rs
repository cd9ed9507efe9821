//! Folding a simply-laced algebra along a diagram automorphism of order m:
//! eigenspace bases g_eps, distinguished generators of the fixed subalgebra
//! g_0, identification of its Cartan type, and the weight maps between the
//! two weight lattices.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::chevalley::{BasisKind, ChevalleyAlgebra, DiagramAut, LieElement, diagram_automorphism};
use crate::exact::FieldElement;
use crate::linalg::Span;
use crate::rootdata::{
    identify_cartan, irreducible_character, CartanDatum, CharacterSum, RootError, TypeLetter,
    Weight,
};

#[derive(Debug)]
pub enum FoldError {
    Root(RootError),
    BadOrder { expected: u8, found: usize },
    UnknownQuotient,
    OddSpecialCoordinate(Weight),
    NotDominant(Weight),
    NoStandardAutomorphism(String, u8),
}

impl fmt::Display for FoldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoldError::Root(e) => write!(f, "{e}"),
            FoldError::BadOrder { expected, found } => {
                write!(f, "automorphism has order {found}, expected {expected}")
            }
            FoldError::UnknownQuotient => write!(f, "folded Cartan matrix is not of known type"),
            FoldError::OddSpecialCoordinate(w) => {
                write!(f, "weight {w} has an odd coordinate at the special node")
            }
            FoldError::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            FoldError::NoStandardAutomorphism(t, m) => {
                write!(f, "no standard order-{m} diagram automorphism of {t}")
            }
        }
    }
}

impl std::error::Error for FoldError {}

impl From<RootError> for FoldError {
    fn from(e: RootError) -> Self {
        FoldError::Root(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Lowering,
    Cartan,
    Raising,
}

/// One basis vector of an eigenspace g_eps, with its g_0-weight.
#[derive(Debug, Clone)]
pub struct EigenVector {
    pub eps: usize,
    pub tag: Tag,
    pub weight: Weight,
    pub elem: LieElement,
}

#[derive(Debug, Clone)]
pub struct FoldedAlgebra {
    pub parent: ChevalleyAlgebra,
    pub sigma: DiagramAut,
    /// order of the automorphism (the coefficient field tag is `tag()`)
    pub m: u8,
    /// minimal parent-node representative of each folded node, in the
    /// Bourbaki order of `g0`
    pub orbit_reps: Vec<usize>,
    /// full parent-node orbit of each folded node
    pub orbits: Vec<Vec<usize>>,
    /// position in `orbit_reps` of the special folded node (the adjacent
    /// two-node orbit of A_{2n}), if any
    pub special: Option<usize>,
    pub g0: CartanDatum,
    /// distinguished fixed-subalgebra generators, per folded node
    pub h0: Vec<LieElement>,
    pub xp0: Vec<LieElement>,
    pub xm0: Vec<LieElement>,
    /// per eps: Cartan eigenvectors h_{i,eps}, as (folded node, element)
    pub h_eps: Vec<Vec<(usize, LieElement)>>,
    /// per eps: full eigenbasis
    pub eigenbasis: Vec<Vec<EigenVector>>,
}

fn int(m: u8, v: i64) -> FieldElement {
    FieldElement::from_int(m, v)
}

/// A primitive `order`-th root of unity in the field tagged `tag`.
pub fn unity(tag: u8, order: u8) -> FieldElement {
    match order {
        1 => FieldElement::one(tag),
        2 => FieldElement::from_int(tag, -1),
        o if o == tag => FieldElement::zeta(tag),
        _ => panic!("no order-{order} root of unity in the field tagged {tag}"),
    }
}

/// The standard diagram automorphism of order m, as a node permutation.
pub fn standard_node_perm(
    letter: TypeLetter,
    rank: usize,
    m: u8,
) -> Result<Vec<usize>, FoldError> {
    let err = || FoldError::NoStandardAutomorphism(format!("{letter}{rank}"), m);
    match (letter, m) {
        (_, 1) => Ok((0..rank).collect()),
        (TypeLetter::A, 2) if rank >= 2 => Ok((0..rank).rev().collect()),
        (TypeLetter::D, 2) if rank >= 3 => {
            let mut p: Vec<usize> = (0..rank).collect();
            p.swap(rank - 2, rank - 1);
            Ok(p)
        }
        (TypeLetter::D, 3) if rank == 4 => Ok(vec![2, 1, 3, 0]),
        (TypeLetter::E, 2) if rank == 6 => Ok(vec![5, 1, 4, 3, 2, 0]),
        _ => Err(err()),
    }
}

/// Order-1 "fold" of a simply-laced algebra over the field tagged `tag`:
/// the untwisted picture, with the same scalars as an order-`tag` fold.
pub fn untwisted_fold(datum: &CartanDatum, tag: u8) -> Result<FoldedAlgebra, FoldError> {
    let alg = ChevalleyAlgebra::new(datum, tag)?;
    let perm: Vec<usize> = (0..datum.rank).collect();
    let sigma = diagram_automorphism(&alg, &perm)?;
    fold(alg, sigma, 1)
}

pub fn standard_fold(letter: TypeLetter, rank: usize, m: u8) -> Result<FoldedAlgebra, FoldError> {
    let datum = CartanDatum::new(letter, rank)?;
    let perm = standard_node_perm(letter, rank, m)?;
    let alg = ChevalleyAlgebra::new(&datum, m)?;
    let sigma = diagram_automorphism(&alg, &perm)?;
    fold(alg, sigma, m)
}

/// Fold `parent` along an automorphism of order `m`.  The coefficient field
/// is the parent's tag, which need not equal `m` (an order-1 fold over the
/// tag-m field gives the untwisted picture over the same scalars).
pub fn fold(parent: ChevalleyAlgebra, sigma: DiagramAut, m: u8) -> Result<FoldedAlgebra, FoldError> {
    let found = sigma.order();
    if found != m as usize {
        return Err(FoldError::BadOrder {
            expected: m,
            found,
        });
    }
    let tag = parent.m;
    let n = parent.rank();
    let mi = m as usize;
    // node orbits, by minimal representative
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut orb = vec![i];
        seen[i] = true;
        let mut j = sigma.node_perm[i];
        while j != i {
            seen[j] = true;
            orb.push(j);
            j = sigma.node_perm[j];
        }
        orbits.push(orb);
    }
    orbits.sort_by_key(|o| o[0]);
    let orbit_reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();

    // special orbit: two adjacent nodes (only in A_{2n})
    let mut special = None;
    for (k, orb) in orbits.iter().enumerate() {
        let adjacent = orb.len() == 2 && parent.rs.datum.cartan[orb[0]][orb[1]] != 0;
        if adjacent {
            assert!(special.is_none(), "at most one adjacent orbit");
            special = Some(k);
        }
    }

    // distinguished g_0 generators
    let mut h0 = Vec::new();
    let mut xp0 = Vec::new();
    let mut xm0 = Vec::new();
    for (k, orb) in orbits.iter().enumerate() {
        let mut h = LieElement::zero(tag);
        let mut xp = LieElement::zero(tag);
        let mut xm = LieElement::zero(tag);
        for &node in orb {
            h = h.add(&parent.gen_h(node));
            xp = xp.add(&parent.gen_e(node));
            xm = xm.add(&parent.gen_f(node));
        }
        if special == Some(k) {
            h = h.scale(&int(tag, 2));
            let s2 = FieldElement::sqrt2(tag);
            xp = xp.scale(&s2);
            xm = xm.scale(&s2);
        }
        h0.push(h);
        xp0.push(xp);
        xm0.push(xm);
    }

    // g_0 Cartan matrix from brackets of the distinguished generators
    let r0 = orbits.len();
    let mut computed = vec![vec![0i64; r0]; r0];
    for i in 0..r0 {
        for j in 0..r0 {
            let b = parent.bracket(&h0[i], &xp0[j]);
            if b.is_zero() {
                continue;
            }
            let (idx, lead) = xp0[j].coeffs.iter().next().unwrap();
            let c = b
                .coeffs
                .get(idx)
                .expect("bracket proportional to xp0")
                .mul(&lead.inverse().unwrap());
            assert!(b.sub(&xp0[j].scale(&c)).is_zero(), "ad h0 not diagonal");
            let r = c.as_rat().expect("Cartan entry is rational");
            assert!(r.denom().is_one());
            computed[i][j] = i64::try_from(r.numer().clone()).unwrap();
        }
    }
    let (g0, perm) = identify_cartan(&computed).ok_or(FoldError::UnknownQuotient)?;
    // reorder folded nodes so the computed matrix is exactly Bourbaki
    let reorder = |v: Vec<LieElement>| -> Vec<LieElement> {
        perm.iter().map(|&p| v[p].clone()).collect()
    };
    let orbits: Vec<Vec<usize>> = perm.iter().map(|&p| orbits[p].clone()).collect();
    let orbit_reps: Vec<usize> = perm.iter().map(|&p| orbit_reps[p]).collect();
    let special = special.map(|s| perm.iter().position(|&p| p == s).unwrap());
    let h0 = reorder(h0);
    let xp0 = reorder(xp0);
    let xm0 = reorder(xm0);
    for i in 0..r0 {
        for j in 0..r0 {
            let b = parent.bracket(&h0[i], &xp0[j]);
            assert!(b.sub(&xp0[j].scale(&int(tag, g0.cartan[i][j]))).is_zero());
        }
    }

    // Cartan eigenvectors per eps
    let zeta = unity(tag, m);
    let mut h_eps: Vec<Vec<(usize, LieElement)>> = vec![Vec::new(); mi];
    for eps in 0..mi {
        for (k, orb) in orbits.iter().enumerate() {
            let s = orb.len();
            if (eps * s) % mi != 0 {
                continue;
            }
            if eps == 0 {
                h_eps[0].push((k, h0[k].clone()));
                continue;
            }
            let mut h = LieElement::zero(tag);
            for (step, &node) in orb.iter().enumerate() {
                // orbit listed in sigma order starting at the representative
                let c = zeta.pow(-((eps * step) as i64)).unwrap();
                h = h.add(&parent.gen_h(node).scale(&c));
            }
            assert!(!h.is_zero());
            h_eps[eps].push((k, h));
        }
    }

    let folded = FoldedAlgebra {
        parent,
        sigma,
        m,
        orbit_reps,
        orbits,
        special,
        g0,
        h0,
        xp0,
        xm0,
        h_eps: h_eps.clone(),
        eigenbasis: Vec::new(),
    };
    let eigenbasis = folded.build_eigenbasis()?;
    let mut folded = folded;
    folded.eigenbasis = eigenbasis;
    folded.check_complete()?;
    Ok(folded)
}

impl FoldedAlgebra {
    /// Coefficient field tag.
    pub fn tag(&self) -> u8 {
        self.parent.m
    }

    fn build_eigenbasis(&self) -> Result<Vec<Vec<EigenVector>>, FoldError> {
        let mi = self.m as usize;
        let tag = self.tag();
        let zeta = unity(tag, self.m);
        let mut out: Vec<Vec<EigenVector>> = vec![Vec::new(); mi];
        // Cartan part: the distinguished h_{i,eps}
        for eps in 0..mi {
            for (_, h) in self.h_eps[eps].iter() {
                out[eps].push(EigenVector {
                    eps,
                    tag: Tag::Cartan,
                    weight: Weight::zero(self.g0.rank),
                    elem: h.clone(),
                });
            }
        }
        // Root part: sigma-orbits on root basis indices
        let dim = self.parent.dim();
        let mut done: BTreeSet<usize> = BTreeSet::new();
        for b in 0..dim {
            if done.contains(&b) || matches!(self.parent.kinds[b], BasisKind::Cartan(_)) {
                continue;
            }
            let mut orbit = vec![b];
            let mut j = self.sigma.image[b];
            while j != b {
                orbit.push(j);
                j = self.sigma.image[j];
            }
            for &x in &orbit {
                done.insert(x);
            }
            let kind = match self.parent.kinds[b] {
                BasisKind::EPos(_) => Tag::Raising,
                BasisKind::ENeg(_) => Tag::Lowering,
                BasisKind::Cartan(_) => unreachable!(),
            };
            let weight = self.restrict_weight(&self.parent.basis_weight(b));
            for eps in 0..mi {
                // u_eps = sum_k zeta^{-eps k} sigma^k(e_b)
                let mut u = LieElement::zero(tag);
                let mut x = LieElement::basis(tag, b);
                for k in 0..mi {
                    u = u.add(&x.scale(&zeta.pow(-((eps * k) as i64)).unwrap()));
                    x = self.sigma.apply(&self.parent, &x);
                }
                if u.is_zero() {
                    continue;
                }
                // divide out repetition so coefficients stay small
                let s = orbit.len();
                if s < mi {
                    u = u.scale(&int(tag, (mi / s) as i64).inverse().unwrap());
                }
                out[eps].push(EigenVector {
                    eps,
                    tag: kind,
                    weight: weight.clone(),
                    elem: u,
                });
            }
        }
        for eps in 0..mi {
            out[eps].sort_by_key(|v| {
                (
                    match v.tag {
                        Tag::Lowering => 0,
                        Tag::Cartan => 1,
                        Tag::Raising => 2,
                    },
                    v.weight.clone(),
                )
            });
        }
        Ok(out)
    }

    fn check_complete(&self) -> Result<(), FoldError> {
        let dim = self.parent.dim();
        let mut span = Span::new(dim, self.tag());
        let mut total = 0;
        let zeta = unity(self.tag(), self.m);
        for eps in 0..self.m as usize {
            for v in self.eigenbasis[eps].iter() {
                // genuine eigenvector
                let img = self.sigma.apply(&self.parent, &v.elem);
                let want = v.elem.scale(&zeta.pow(eps as i64).unwrap());
                assert!(img.sub(&want).is_zero(), "not a sigma eigenvector");
                // g_0-weight vector for the distinguished Cartan
                for (i, h) in self.h0.iter().enumerate() {
                    let b = self.parent.bracket(h, &v.elem);
                    let want = v.elem.scale(&int(self.tag(), v.weight.0[i]));
                    assert!(b.sub(&want).is_zero(), "wrong g0-weight");
                }
                assert!(span.insert(v.elem.to_dense(dim)), "eigenbasis dependent");
                total += 1;
            }
        }
        assert_eq!(total, dim, "eigenspaces must exhaust the algebra");
        Ok(())
    }

    pub fn eigenspace_dims(&self) -> Vec<usize> {
        self.eigenbasis.iter().map(|v| v.len()).collect()
    }

    /// Restrict a parent weight to the folded Cartan: coordinate i is the
    /// value on h_{i,0}.
    pub fn restrict_weight(&self, w: &Weight) -> Weight {
        let coords = (0..self.g0.rank)
            .map(|i| {
                let mut acc = 0i64;
                for (idx, c) in self.h0[i].coeffs.iter() {
                    let BasisKind::Cartan(node) = self.parent.kinds[*idx] else {
                        panic!("h0 is Cartan");
                    };
                    let r = c.as_rat().unwrap();
                    let ci = i64::try_from(r.numer().clone()).unwrap();
                    assert!(r.denom().is_one());
                    acc += ci * w.0[node];
                }
                acc
            })
            .collect();
        Weight(coords)
    }

    /// Embed a dominant folded weight into the parent weight lattice:
    /// supported on the orbit representatives, halved at the special node.
    pub fn embed_weight(&self, w: &Weight) -> Result<Weight, FoldError> {
        if !w.is_dominant() {
            return Err(FoldError::NotDominant(w.clone()));
        }
        let mut out = vec![0i64; self.parent.rank()];
        for (k, &rep) in self.orbit_reps.iter().enumerate() {
            let mut v = w.0[k];
            if self.special == Some(k) {
                if v % 2 != 0 {
                    return Err(FoldError::OddSpecialCoordinate(w.clone()));
                }
                v /= 2;
            }
            out[rep] = v;
        }
        Ok(Weight(out))
    }

    /// Weight multiset of the eigenspace g_eps as a g_0-module.
    pub fn eigenspace_character(&self, eps: usize) -> CharacterSum {
        let mut ch = CharacterSum::default();
        for v in self.eigenbasis[eps].iter() {
            ch.add_weight(v.weight.clone(), 1);
        }
        ch
    }

    /// Decompose g_eps into irreducible g_0-modules by iterated extraction
    /// of maximal weights.
    pub fn eigenspace_decomposition(&self, eps: usize) -> Result<Vec<(Weight, u64)>, FoldError> {
        let mut ch = self.eigenspace_character(eps);
        let mut out: Vec<(Weight, u64)> = Vec::new();
        while ch.dimension() > 0 {
            let (top, mult) = ch
                .0
                .iter()
                .filter(|(w, _)| w.is_dominant())
                .max_by(|(a, _), (b, _)| {
                    a.0.iter().sum::<i64>().cmp(&b.0.iter().sum()).then(a.cmp(b))
                })
                .map(|(w, m)| (w.clone(), *m))
                .expect("character of a module has a dominant weight");
            let irr = irreducible_character(&self.g0, &top)?;
            let mut next = CharacterSum::default();
            for (w, c) in ch.0.iter() {
                let used = irr.mult(w) * mult;
                assert!(*c >= used, "not a nonnegative sum of irreducibles");
                if *c > used {
                    next.add_weight(w.clone(), c - used);
                }
            }
            ch = next;
            out.push((top, mult));
        }
        Ok(out)
    }

    /// Highest g_0-weight of g_1 (errors if g_1 is not irreducible).
    pub fn g1_highest_weight(&self) -> Result<Weight, FoldError> {
        let dec = self.eigenspace_decomposition(1)?;
        assert_eq!(dec.len(), 1, "g_1 is irreducible");
        assert_eq!(dec[0].1, 1);
        Ok(dec[0].0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_system;

    #[test]
    fn folding_table() {
        // (parent letter, rank, m, g0 name, eps dims, g1 highest weight)
        let rows: [(TypeLetter, usize, u8, &str, Vec<usize>, Vec<i64>); 6] = [
            (TypeLetter::A, 2, 2, "A1", vec![3, 5], vec![4]),
            (TypeLetter::A, 3, 2, "C2", vec![10, 5], vec![0, 1]),
            (TypeLetter::A, 5, 2, "C3", vec![21, 14], vec![0, 1, 0]),
            (TypeLetter::D, 4, 2, "B3", vec![21, 7], vec![1, 0, 0]),
            (TypeLetter::E, 6, 2, "F4", vec![52, 26], vec![0, 0, 0, 1]),
            (TypeLetter::D, 4, 3, "G2", vec![14, 7, 7], vec![1, 0]),
        ];
        for (l, r, m, g0, dims, hw) in rows {
            let f = standard_fold(l, r, m).unwrap();
            assert_eq!(f.g0.name(), g0, "{l}{r} m={m}");
            assert_eq!(f.eigenspace_dims(), dims, "{l}{r} m={m}");
            assert_eq!(f.g1_highest_weight().unwrap(), Weight(hw), "{l}{r} m={m}");
        }
        // g1 of the A2n fold is V(2 theta_s) for g0 = A1: check explicitly
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let rs0 = build_root_system(&f.g0).unwrap();
        let ts = f.g0.root_to_weight(&rs0.theta_short);
        assert_eq!(f.g1_highest_weight().unwrap(), ts.scale(2));
        // non-special m=2 folds have g1 = V(theta_s); D4 m=3 has g1 = g2 = V(theta_s)
        for (l, r, m) in [
            (TypeLetter::A, 3, 2),
            (TypeLetter::D, 4, 2),
            (TypeLetter::E, 6, 2),
            (TypeLetter::D, 4, 3),
        ] {
            let f = standard_fold(l, r, m).unwrap();
            let rs0 = build_root_system(&f.g0).unwrap();
            let ts = f.g0.root_to_weight(&rs0.theta_short);
            assert_eq!(f.g1_highest_weight().unwrap(), ts);
            if m == 3 {
                assert_eq!(f.eigenspace_decomposition(2).unwrap(), vec![(ts, 1)]);
            }
        }
    }

    #[test]
    fn cartan_eigenvector_counts() {
        let counts: [(TypeLetter, usize, u8, Vec<usize>); 4] = [
            (TypeLetter::A, 2, 2, vec![1, 1]),
            (TypeLetter::A, 3, 2, vec![2, 1]),
            (TypeLetter::D, 4, 3, vec![2, 1, 1]),
            (TypeLetter::E, 6, 2, vec![4, 2]),
        ];
        for (l, r, m, want) in counts {
            let f = standard_fold(l, r, m).unwrap();
            let got: Vec<usize> = f.h_eps.iter().map(|v| v.len()).collect();
            assert_eq!(got, want, "{l}{r} m={m}");
        }
    }

    #[test]
    fn serre_relations_in_g0() {
        for (l, r, m) in [
            (TypeLetter::A, 2, 2),
            (TypeLetter::A, 3, 2),
            (TypeLetter::D, 4, 3),
        ] {
            let f = standard_fold(l, r, m).unwrap();
            for i in 0..f.g0.rank {
                let h = f.parent.bracket(&f.xp0[i], &f.xm0[i]);
                assert!(h.sub(&f.h0[i]).is_zero(), "[x+,x-] = h in fold {l}{r}");
            }
        }
    }

    #[test]
    fn weight_maps() {
        let f = standard_fold(TypeLetter::A, 2, 2).unwrap();
        // restrict(omega_1) = 2 omega (special node), embed back requires even
        let w = f.restrict_weight(&Weight(vec![1, 0]));
        assert_eq!(w, Weight(vec![2]));
        assert_eq!(f.embed_weight(&w).unwrap(), Weight(vec![1, 0]));
        assert!(matches!(
            f.embed_weight(&Weight(vec![1])),
            Err(FoldError::OddSpecialCoordinate(_))
        ));

        let f = standard_fold(TypeLetter::A, 3, 2).unwrap();
        assert_eq!(f.restrict_weight(&Weight(vec![1, 0, 0])), Weight(vec![1, 0]));
        assert_eq!(f.restrict_weight(&Weight(vec![0, 1, 0])), Weight(vec![0, 1]));
        assert_eq!(f.restrict_weight(&Weight(vec![0, 0, 1])), Weight(vec![1, 0]));
        assert_eq!(f.embed_weight(&Weight(vec![2, 1])).unwrap(), Weight(vec![2, 1, 0]));
        // restrict . embed = id on dominant folded weights
        for w in [vec![0, 0], vec![1, 2], vec![3, 1]] {
            let w = Weight(w);
            assert_eq!(f.restrict_weight(&f.embed_weight(&w).unwrap()), w);
        }
        assert!(f.embed_weight(&Weight(vec![-1, 0])).is_err());
    }

    #[test]
    fn untwisted_is_order_one_fold() {
        let f = standard_fold(TypeLetter::A, 2, 1).unwrap();
        assert_eq!(f.g0.name(), "A2");
        assert_eq!(f.eigenspace_dims(), vec![8]);
        assert_eq!(f.restrict_weight(&Weight(vec![2, 1])), Weight(vec![2, 1]));
    }

    #[test]
    fn wrong_order_rejected() {
        let datum = CartanDatum::new(TypeLetter::A, 3, ).unwrap();
        let alg = ChevalleyAlgebra::new(&datum, 3).unwrap();
        let sigma = diagram_automorphism(&alg, &[2, 1, 0]).unwrap();
        assert!(matches!(
            fold(alg, sigma, 3),
            Err(FoldError::BadOrder { .. })
        ));
    }
}
