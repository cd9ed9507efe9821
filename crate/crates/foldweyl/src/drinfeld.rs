//! Drinfeld polynomials for untwisted and twisted loop algebras, kept in
//! factored form: a multiset of (node, evaluation point, multiplicity).
//!
//! Twisted tuples store the pre-power evaluation point; at nodes fixed by
//! the automorphism the point only matters up to a root of unity, so the
//! canonical form takes the minimum of the zeta-orbit.  The special node is
//! the halved node of the A_{2n} fold, where the fundamental twisted factor
//! has weight 2 omega_n.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::FieldElement;
use crate::folding::{unity, FoldedAlgebra};
use crate::rootdata::Weight;

#[derive(Debug)]
pub enum DrinfeldError {
    ZeroParam,
    RankMismatch,
    OddSpecialCoordinate(Weight),
    NotDominant(Weight),
    FiberTooLarge(usize),
}

impl fmt::Display for DrinfeldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrinfeldError::ZeroParam => write!(f, "evaluation points must be nonzero"),
            DrinfeldError::RankMismatch => write!(f, "weight rank does not match tuple rank"),
            DrinfeldError::OddSpecialCoordinate(w) => {
                write!(f, "weight {w} has an odd coordinate at the special node")
            }
            DrinfeldError::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            DrinfeldError::FiberTooLarge(n) => {
                write!(f, "fiber would have more than {n} elements")
            }
        }
    }
}

impl std::error::Error for DrinfeldError {}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub node: usize,
    pub param: FieldElement,
    pub mult: u64,
}

fn canonicalize(mut factors: Vec<Factor>) -> Vec<Factor> {
    factors.retain(|f| f.mult > 0);
    factors.sort_by(|a, b| {
        a.node
            .cmp(&b.node)
            .then_with(|| a.param.canonical_cmp(&b.param))
    });
    let mut out: Vec<Factor> = Vec::new();
    for f in factors {
        match out.last_mut() {
            Some(last) if last.node == f.node && last.param == f.param => last.mult += f.mult,
            _ => out.push(f),
        }
    }
    out
}

/// pi = (pi_i)_{i in I}, each pi_i a product of (1 - a u) factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DrinfeldTuple {
    pub tag: u8,
    pub rank: usize,
    pub factors: Vec<Factor>,
}

impl DrinfeldTuple {
    pub fn new(tag: u8, rank: usize, factors: Vec<Factor>) -> Result<Self, DrinfeldError> {
        for f in &factors {
            if f.param.is_zero() {
                return Err(DrinfeldError::ZeroParam);
            }
            if f.node >= rank {
                return Err(DrinfeldError::RankMismatch);
            }
        }
        Ok(DrinfeldTuple {
            tag,
            rank,
            factors: canonicalize(factors),
        })
    }

    pub fn one(tag: u8, rank: usize) -> Self {
        DrinfeldTuple {
            tag,
            rank,
            factors: Vec::new(),
        }
    }

    /// pi_{lambda,a}: node i carries (1 - a u)^{lambda_i}.
    pub fn pi_lambda_a(
        tag: u8,
        lambda: &Weight,
        a: &FieldElement,
    ) -> Result<Self, DrinfeldError> {
        if !lambda.is_dominant() {
            return Err(DrinfeldError::NotDominant(lambda.clone()));
        }
        let factors = lambda
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| Factor {
                node: i,
                param: a.clone(),
                mult: c as u64,
            })
            .collect();
        DrinfeldTuple::new(tag, lambda.0.len(), factors)
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        DrinfeldTuple {
            tag: self.tag,
            rank: self.rank,
            factors: canonicalize(factors),
        }
    }

    /// lambda_pi = sum_i deg(pi_i) omega_i.
    pub fn highest_weight(&self) -> Weight {
        let mut w = vec![0i64; self.rank];
        for f in &self.factors {
            w[f.node] += f.mult as i64;
        }
        Weight(w)
    }

    /// Group by distinct evaluation point: (a_k, lambda_k).
    pub fn group_by_param(&self) -> Vec<(FieldElement, Weight)> {
        let mut out: Vec<(FieldElement, Weight)> = Vec::new();
        for f in &self.factors {
            match out.iter_mut().find(|(a, _)| *a == f.param) {
                Some((_, w)) => w.0[f.node] += f.mult as i64,
                None => {
                    let mut w = Weight::zero(self.rank);
                    w.0[f.node] = f.mult as i64;
                    out.push((f.param.clone(), w));
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
        out
    }
}

/// Twisted tuple over the folded node set I_0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistedDrinfeldTuple {
    pub tag: u8,
    pub m: u8,
    pub rank: usize,
    pub factors: Vec<Factor>,
}

/// Minimum of the zeta-orbit of a point, under the canonical coordinate order.
fn orbit_min(tag: u8, m: u8, a: &FieldElement) -> FieldElement {
    let zeta = unity(tag, m);
    let mut best = a.clone();
    let mut cur = a.clone();
    for _ in 1..m {
        cur = cur.mul(&zeta);
        if cur.canonical_cmp(&best).is_lt() {
            best = cur.clone();
        }
    }
    best
}

impl TwistedDrinfeldTuple {
    pub fn new(
        fold: &FoldedAlgebra,
        factors: Vec<Factor>,
    ) -> Result<Self, DrinfeldError> {
        let tag = fold.tag();
        let rank = fold.g0.rank;
        let mut fixed_up = Vec::new();
        for f in factors {
            if f.param.is_zero() {
                return Err(DrinfeldError::ZeroParam);
            }
            if f.node >= rank {
                return Err(DrinfeldError::RankMismatch);
            }
            let param = if fold.orbits[f.node].len() == 1 {
                orbit_min(tag, fold.m, &f.param)
            } else {
                f.param
            };
            fixed_up.push(Factor { param, ..f });
        }
        Ok(TwistedDrinfeldTuple {
            tag,
            m: fold.m,
            rank,
            factors: canonicalize(fixed_up),
        })
    }

    pub fn one(fold: &FoldedAlgebra) -> Self {
        TwistedDrinfeldTuple {
            tag: fold.tag(),
            m: fold.m,
            rank: fold.g0.rank,
            factors: Vec::new(),
        }
    }

    /// pi^sigma_{lambda,a} for dominant lambda of the folded type: node i
    /// carries multiplicity lambda_i, halved at the special node.
    pub fn pi_sigma_lambda_a(
        fold: &FoldedAlgebra,
        lambda: &Weight,
        a: &FieldElement,
    ) -> Result<Self, DrinfeldError> {
        if lambda.0.len() != fold.g0.rank {
            return Err(DrinfeldError::RankMismatch);
        }
        if !lambda.is_dominant() {
            return Err(DrinfeldError::NotDominant(lambda.clone()));
        }
        let mut factors = Vec::new();
        for (i, &c) in lambda.0.iter().enumerate() {
            let mut mult = c as u64;
            if fold.special == Some(i) {
                if c % 2 != 0 {
                    return Err(DrinfeldError::OddSpecialCoordinate(lambda.clone()));
                }
                mult /= 2;
            }
            if mult > 0 {
                factors.push(Factor {
                    node: i,
                    param: a.clone(),
                    mult,
                });
            }
        }
        TwistedDrinfeldTuple::new(fold, factors)
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        TwistedDrinfeldTuple {
            tag: self.tag,
            m: self.m,
            rank: self.rank,
            factors: canonicalize(factors),
        }
    }

    /// lambda_{pi^sigma}: degree at each node, doubled at the special node.
    pub fn highest_weight(&self, fold: &FoldedAlgebra) -> Weight {
        let mut w = vec![0i64; self.rank];
        for f in &self.factors {
            let c = if fold.special == Some(f.node) { 2 } else { 1 };
            w[f.node] += c * f.mult as i64;
        }
        Weight(w)
    }

    /// The sigma-orbit and zeta-power of a stored point: (epsilon, block
    /// representative) with param = zeta^epsilon rep and rep minimal.
    fn split_param(&self, a: &FieldElement) -> (usize, FieldElement) {
        let rep = orbit_min(self.tag, self.m, a);
        let zeta = unity(self.tag, self.m);
        let mut cur = rep.clone();
        for eps in 0..self.m as usize {
            if cur == *a {
                return (eps, rep);
            }
            cur = cur.mul(&zeta);
        }
        unreachable!("param lies in the orbit of its minimum")
    }

    /// The distinguished preimage under the restriction map: each factor
    /// (i, zeta^eps a, mult) lifts to (sigma^eps(i), a, mult).
    pub fn preferred_preimage(&self, fold: &FoldedAlgebra) -> DrinfeldTuple {
        let mut factors = Vec::new();
        for f in &self.factors {
            let (eps, rep) = self.split_param(&f.param);
            let orbit = &fold.orbits[f.node];
            let parent_node = orbit[eps % orbit.len()];
            factors.push(Factor {
                node: parent_node,
                param: rep,
                mult: f.mult,
            });
        }
        DrinfeldTuple::new(self.tag, fold.parent.rank(), factors).unwrap()
    }

    /// Standard decomposition: blocks (a_k, [lambda_{k,0}, .., lambda_{k,m-1}])
    /// with pi^sigma = prod_k prod_eps pi^sigma_{lambda_{k,eps}, zeta^eps a_k}.
    pub fn standard_decomposition(&self, fold: &FoldedAlgebra) -> Vec<(FieldElement, Vec<Weight>)> {
        let mut out: Vec<(FieldElement, Vec<Weight>)> = Vec::new();
        for f in &self.factors {
            let (eps, rep) = self.split_param(&f.param);
            let entry = match out.iter_mut().find(|(a, _)| *a == rep) {
                Some(e) => e,
                None => {
                    out.push((rep.clone(), vec![Weight::zero(self.rank); self.m as usize]));
                    out.last_mut().unwrap()
                }
            };
            let c = if fold.special == Some(f.node) { 2 } else { 1 };
            entry.1[eps].0[f.node] += c * f.mult as i64;
        }
        out.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
        out
    }

    /// The full fiber of the restriction map, as the set of products of the
    /// per-factor fibers.
    pub fn fiber(&self, fold: &FoldedAlgebra, cap: usize) -> Result<BTreeSet<DrinfeldTuple>, DrinfeldError> {
        let zeta = unity(self.tag, self.m);
        let m = self.m as usize;
        let prank = fold.parent.rank();
        // choice set per unit factor: (parent node, point)
        let mut units: Vec<Vec<(usize, FieldElement)>> = Vec::new();
        for f in &self.factors {
            let orbit = &fold.orbits[f.node];
            let mut choices = Vec::new();
            for r in 0..m {
                let node = orbit[r % orbit.len()];
                let p = f.param.mul(&zeta.pow((m - r) as i64).unwrap());
                if !choices.contains(&(node, p.clone())) {
                    choices.push((node, p));
                }
            }
            for _ in 0..f.mult {
                units.push(choices.clone());
            }
        }
        let mut size: usize = 1;
        for u in &units {
            size = size.saturating_mul(u.len());
            if size > cap {
                return Err(DrinfeldError::FiberTooLarge(cap));
            }
        }
        let mut out = BTreeSet::new();
        let mut pick = vec![0usize; units.len()];
        loop {
            let factors: Vec<Factor> = units
                .iter()
                .zip(pick.iter())
                .map(|(choices, &c)| Factor {
                    node: choices[c].0,
                    param: choices[c].1.clone(),
                    mult: 1,
                })
                .collect();
            out.insert(DrinfeldTuple::new(self.tag, prank, factors).unwrap());
            // odometer
            let mut k = 0;
            loop {
                if k == units.len() {
                    return Ok(out);
                }
                pick[k] += 1;
                if pick[k] < units[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
        }
    }
}

/// lambda(eps) of a parent dominant weight: the folded weights appearing in
/// the restriction of pi_{lambda,a}.
pub fn lambda_eps(fold: &FoldedAlgebra, lambda: &Weight, eps: usize) -> Weight {
    let mut w = vec![0i64; fold.g0.rank];
    for (k, orbit) in fold.orbits.iter().enumerate() {
        let c = if fold.special == Some(k) { 2 } else { 1 };
        if eps == 0 {
            w[k] = c * lambda.0[orbit[0]];
        } else if orbit.len() > 1 {
            w[k] = c * lambda.0[orbit[eps % orbit.len()]];
        }
    }
    Weight(w)
}

/// The restriction map r: untwisted tuples to twisted tuples.
pub fn restrict_tuple(fold: &FoldedAlgebra, pi: &DrinfeldTuple) -> TwistedDrinfeldTuple {
    let zeta = unity(fold.tag(), fold.m);
    let mut out = TwistedDrinfeldTuple::one(fold);
    for (a, lambda) in pi.group_by_param() {
        for eps in 0..fold.m as usize {
            let le = lambda_eps(fold, &lambda, eps);
            if le.is_zero() {
                continue;
            }
            let point = a.mul(&zeta.pow(eps as i64).unwrap());
            let piece = TwistedDrinfeldTuple::pi_sigma_lambda_a(fold, &le, &point)
                .expect("lambda(eps) is dominant with even special coordinate");
            out = out.product(&piece);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folding::standard_fold;
    use crate::rootdata::TypeLetter;

    fn fe(tag: u8, n: i64) -> FieldElement {
        FieldElement::from_int(tag, n)
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let f = vec![
            Factor { node: 1, param: fe(1, 2), mult: 1 },
            Factor { node: 0, param: fe(1, 3), mult: 2 },
            Factor { node: 1, param: fe(1, 2), mult: 3 },
        ];
        let t = DrinfeldTuple::new(1, 2, f).unwrap();
        assert_eq!(t.factors.len(), 2);
        assert_eq!(t.factors[1].mult, 4);
        assert_eq!(t.highest_weight(), Weight(vec![2, 4]));
    }

    #[test]
    fn fixed_node_zeta_orbit_is_quotiented() {
        let fold = standard_fold(TypeLetter::A, 3, 2).unwrap();
        // node 1 (second folded node) is fixed; 2 and -2 give the same tuple
        let a = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![0, 1]), &fe(2, 2))
            .unwrap();
        let b = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![0, 1]), &fe(2, -2))
            .unwrap();
        assert_eq!(a, b);
        // node 0 is a genuine orbit node; the points stay distinct
        let a = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![1, 0]), &fe(2, 2))
            .unwrap();
        let b = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![1, 0]), &fe(2, -2))
            .unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn special_node_needs_even_coordinate() {
        let fold = standard_fold(TypeLetter::A, 2, 2).unwrap();
        assert!(TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![1]), &fe(2, 1))
            .is_err());
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![4]), &fe(2, 1))
            .unwrap();
        assert_eq!(t.factors[0].mult, 2);
        assert_eq!(t.highest_weight(&fold), Weight(vec![4]));
    }

    #[test]
    fn fiber_of_fundamental_factors() {
        // A2 fold, node n: fiber of pi^sigma_{2 omega, a} = {pi_{omega_1,a}, pi_{omega_2,-a}}
        let fold = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![2]), &fe(2, 3))
            .unwrap();
        let fib = t.fiber(&fold, 1000).unwrap();
        let e1 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![1, 0]), &fe(2, 3)).unwrap();
        let e2 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![0, 1]), &fe(2, -3)).unwrap();
        assert_eq!(fib, BTreeSet::from([e1, e2]));

        // fixed node of the A3 fold: fiber is {pi_{omega_2, a}, pi_{omega_2, -a}}
        let fold = standard_fold(TypeLetter::A, 3, 2).unwrap();
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![0, 1]), &fe(2, 2))
            .unwrap();
        let fib = t.fiber(&fold, 1000).unwrap();
        let e1 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![0, 1, 0]), &fe(2, 2)).unwrap();
        let e2 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![0, 1, 0]), &fe(2, -2)).unwrap();
        assert_eq!(fib, BTreeSet::from([e1, e2]));

        // orbit node: fiber is {pi_{omega_1, a}, pi_{omega_3, -a}}
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![1, 0]), &fe(2, 2))
            .unwrap();
        let fib = t.fiber(&fold, 1000).unwrap();
        let e1 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![1, 0, 0]), &fe(2, 2)).unwrap();
        let e2 = DrinfeldTuple::pi_lambda_a(2, &Weight(vec![0, 0, 1]), &fe(2, -2)).unwrap();
        assert_eq!(fib, BTreeSet::from([e1, e2]));
    }

    #[test]
    fn restriction_is_constant_on_fibers() {
        for (l, r, m) in [
            (TypeLetter::A, 2, 2u8),
            (TypeLetter::A, 3, 2),
            (TypeLetter::D, 4, 3),
        ] {
            let fold = standard_fold(l, r, m).unwrap();
            let tag = fold.tag();
            let mut lam = vec![0i64; fold.g0.rank];
            lam[0] = if fold.special == Some(0) { 2 } else { 1 };
            if fold.g0.rank > 1 {
                lam[1] = if fold.special == Some(1) { 2 } else { 1 };
            }
            let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(
                &fold,
                &Weight(lam),
                &fe(tag, 2),
            )
            .unwrap();
            let fib = t.fiber(&fold, 100_000).unwrap();
            assert!(!fib.is_empty());
            for pi in fib.iter() {
                assert_eq!(restrict_tuple(&fold, pi), t, "{l}{r} m={m}");
            }
            // the preferred preimage is one of them
            assert!(fib.contains(&t.preferred_preimage(&fold)));
        }
    }

    #[test]
    fn restriction_of_pullback_roundtrip() {
        let fold = standard_fold(TypeLetter::D, 4, 3).unwrap();
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![1, 1]), &fe(3, 2))
            .unwrap()
            .product(
                &TwistedDrinfeldTuple::pi_sigma_lambda_a(
                    &fold,
                    &Weight(vec![2, 0]),
                    &fe(3, 3),
                )
                .unwrap(),
            );
        let pre = t.preferred_preimage(&fold);
        assert_eq!(restrict_tuple(&fold, &pre), t);
        // standard decomposition covers the tuple
        let dec = t.standard_decomposition(&fold);
        let mut rebuilt = TwistedDrinfeldTuple::one(&fold);
        let zeta = unity(3, 3);
        for (a, lams) in dec {
            for (eps, lam) in lams.iter().enumerate() {
                if lam.is_zero() {
                    continue;
                }
                let p = a.mul(&zeta.pow(eps as i64).unwrap());
                rebuilt = rebuilt.product(
                    &TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, lam, &p).unwrap(),
                );
            }
        }
        assert_eq!(rebuilt, t);
    }

    #[test]
    fn lambda_eps_matches_table() {
        // D4 m=3: lambda(0) = m1 w1 + m2 w2, lambda(1) = m3 w1, lambda(2) = m4 w1
        let fold = standard_fold(TypeLetter::D, 4, 3).unwrap();
        let lam = Weight(vec![5, 6, 7, 8]);
        assert_eq!(lambda_eps(&fold, &lam, 0), Weight(vec![5, 6]));
        assert_eq!(lambda_eps(&fold, &lam, 1), Weight(vec![7, 0]));
        assert_eq!(lambda_eps(&fold, &lam, 2), Weight(vec![8, 0]));
        // A2: lambda(0) = 2 m1, lambda(1) = 2 m2 on the single (special) node
        let fold = standard_fold(TypeLetter::A, 2, 2).unwrap();
        let lam = Weight(vec![3, 4]);
        assert_eq!(lambda_eps(&fold, &lam, 0), Weight(vec![6]));
        assert_eq!(lambda_eps(&fold, &lam, 1), Weight(vec![8]));
    }

    #[test]
    fn fiber_cap_enforced() {
        let fold = standard_fold(TypeLetter::A, 3, 2).unwrap();
        let t = TwistedDrinfeldTuple::pi_sigma_lambda_a(&fold, &Weight(vec![30, 0]), &fe(2, 2))
            .unwrap();
        assert!(matches!(
            t.fiber(&fold, 1000),
            Err(DrinfeldError::FiberTooLarge(1000))
        ));
    }
}
