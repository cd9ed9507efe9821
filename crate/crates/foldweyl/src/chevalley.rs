//! Chevalley basis with explicit integral structure constants for the
//! simply-laced types, built from a bimultiplicative asymmetry cocycle on the
//! root lattice, plus sign-corrected diagram automorphisms.
//!
//! Basis order: e_alpha for positive roots (height-then-lex), then e_{-alpha}
//! in the same root order, then h_1..h_n.  All structure constants are +-1 or
//! Cartan integers, but brackets are returned over the working field so
//! downstream eigenspace computations compose directly.

use std::collections::BTreeMap;

use crate::exact::FieldElement;
use crate::rootdata::{build_root_system, CartanDatum, Root, RootError, RootSystem, Weight};

/// What a basis index stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// e_alpha, positive root by index into `positive_roots`
    EPos(usize),
    /// e_{-alpha}
    ENeg(usize),
    /// h_i, node index
    Cartan(usize),
}

/// Sparse element of the Lie algebra in the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    pub m: u8,
    pub coeffs: BTreeMap<usize, FieldElement>,
}

impl LieElement {
    pub fn zero(m: u8) -> Self {
        LieElement {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(m: u8, idx: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(idx, FieldElement::one(m));
        LieElement { m, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, idx: usize, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(idx)
            .or_insert_with(|| FieldElement::zero(self.m));
        *entry = entry.add(c);
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (i, c) in other.coeffs.iter() {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&FieldElement::from_int(self.m, -1)))
    }

    pub fn scale(&self, c: &FieldElement) -> LieElement {
        if c.is_zero() {
            return LieElement::zero(self.m);
        }
        LieElement {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, v)| (*i, v.mul(c)))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(self.m); dim];
        for (i, c) in self.coeffs.iter() {
            v[*i] = c.clone();
        }
        v
    }
}

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// working field tag for coefficients
    pub m: u8,
    pub kinds: Vec<BasisKind>,
    /// signed root coordinates per basis index (zero vector for Cartan)
    roots_signed: Vec<Vec<i64>>,
    root_index: BTreeMap<Vec<i64>, usize>,
    /// parity matrix of the cocycle on simple roots: t[i][j] with
    /// eps(a_i, a_j) = (-1)^{t[i][j]}
    t: Vec<Vec<u8>>,
}

impl ChevalleyAlgebra {
    /// Build the algebra over the field tagged `m` (the eventual fold order;
    /// the structure constants themselves are rational integers).
    pub fn new(datum: &CartanDatum, m: u8) -> Result<Self, RootError> {
        if !datum.is_simply_laced() {
            return Err(RootError::NotSimplyLaced);
        }
        let rs = build_root_system(datum)?;
        let n = datum.rank;
        let np = rs.positive_roots.len();
        let mut kinds = Vec::with_capacity(2 * np + n);
        let mut roots_signed = Vec::with_capacity(2 * np + n);
        let mut root_index = BTreeMap::new();
        for (k, r) in rs.positive_roots.iter().enumerate() {
            kinds.push(BasisKind::EPos(k));
            roots_signed.push(r.0.clone());
            root_index.insert(r.0.clone(), k);
        }
        for (k, r) in rs.positive_roots.iter().enumerate() {
            kinds.push(BasisKind::ENeg(k));
            let neg: Vec<i64> = r.0.iter().map(|x| -x).collect();
            root_index.insert(neg.clone(), np + k);
            roots_signed.push(neg);
        }
        for i in 0..n {
            kinds.push(BasisKind::Cartan(i));
            roots_signed.push(vec![0; n]);
        }
        let mut t = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                t[i][j] = if i == j {
                    1
                } else if i < j {
                    (datum.cartan[i][j].rem_euclid(2)) as u8
                } else {
                    0
                };
            }
        }
        Ok(ChevalleyAlgebra {
            rs,
            m,
            kinds,
            roots_signed,
            root_index,
            t,
        })
    }

    pub fn dim(&self) -> usize {
        self.kinds.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.datum.rank
    }

    pub fn num_pos(&self) -> usize {
        self.rs.positive_roots.len()
    }

    pub fn cartan_index(&self, i: usize) -> usize {
        2 * self.num_pos() + i
    }

    /// Basis index of e_alpha for a signed root.
    pub fn index_of_root(&self, alpha: &[i64]) -> Option<usize> {
        self.root_index.get(alpha).copied()
    }

    pub fn signed_root(&self, idx: usize) -> &[i64] {
        &self.roots_signed[idx]
    }

    /// Weight of a basis vector under the adjoint action of h (zero for
    /// Cartan elements), in fundamental coordinates.
    pub fn basis_weight(&self, idx: usize) -> Weight {
        self.rs.datum.root_to_weight(&Root(self.roots_signed[idx].clone()))
    }

    /// x_i^+ = e_{alpha_i}
    pub fn gen_e(&self, i: usize) -> LieElement {
        let mut v = vec![0i64; self.rank()];
        v[i] = 1;
        LieElement::basis(self.m, self.index_of_root(&v).unwrap())
    }

    /// x_i^- = -e_{-alpha_i}, signed so that [x_i^+, x_i^-] = h_i
    pub fn gen_f(&self, i: usize) -> LieElement {
        let mut v = vec![0i64; self.rank()];
        v[i] = -1;
        LieElement::basis(self.m, self.index_of_root(&v).unwrap())
            .scale(&FieldElement::from_int(self.m, -1))
    }

    pub fn gen_h(&self, i: usize) -> LieElement {
        LieElement::basis(self.m, self.cartan_index(i))
    }

    /// Asymmetry cocycle on the root lattice, bimultiplicative extension of
    /// eps(a_i, a_i) = -1, eps(a_i, a_j) = (-1)^{a_ij} for i < j, +1 for i > j.
    pub fn eps(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut parity: i64 = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 && self.t[i][j] == 1 {
                    parity += a[i] * b[j];
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Bracket of two basis vectors.
    pub fn bracket_basis(&self, i: usize, j: usize) -> LieElement {
        let m = self.m;
        match (self.kinds[i], self.kinds[j]) {
            (BasisKind::Cartan(_), BasisKind::Cartan(_)) => LieElement::zero(m),
            (BasisKind::Cartan(hi), _) => {
                let c = self.rs.datum.pairing(&Root(self.roots_signed[j].clone()), hi);
                LieElement::basis(m, j).scale(&FieldElement::from_int(m, c))
            }
            (_, BasisKind::Cartan(hj)) => {
                let c = self.rs.datum.pairing(&Root(self.roots_signed[i].clone()), hj);
                LieElement::basis(m, i).scale(&FieldElement::from_int(m, -c))
            }
            _ => {
                let a = &self.roots_signed[i];
                let b = &self.roots_signed[j];
                let sum: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                if sum.iter().all(|&x| x == 0) {
                    // [e_a, e_{-a}] = eps(a, -a) h_a = -h_a
                    let s = self.eps(a, b);
                    let mut out = LieElement::zero(m);
                    for (k, &c) in a.iter().enumerate() {
                        out.add_term(self.cartan_index(k), &FieldElement::from_int(m, s * c));
                    }
                    out
                } else if let Some(idx) = self.index_of_root(&sum) {
                    let s = self.eps(a, b);
                    LieElement::basis(m, idx).scale(&FieldElement::from_int(m, s))
                } else {
                    LieElement::zero(m)
                }
            }
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero(self.m);
        for (i, ci) in x.coeffs.iter() {
            for (j, cj) in y.coeffs.iter() {
                let b = self.bracket_basis(*i, *j);
                let c = ci.mul(cj);
                for (k, ck) in b.coeffs.iter() {
                    out.add_term(*k, &ck.mul(&c));
                }
            }
        }
        out
    }
}

/// A diagram automorphism realized on the Chevalley basis: each basis vector
/// maps to a signed basis vector.
#[derive(Debug, Clone)]
pub struct DiagramAut {
    /// node permutation sigma on 0..rank
    pub node_perm: Vec<usize>,
    /// image basis index per basis index
    pub image: Vec<usize>,
    /// sign of the image
    pub sign: Vec<i64>,
}

impl DiagramAut {
    pub fn apply(&self, alg: &ChevalleyAlgebra, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero(alg.m);
        for (i, c) in x.coeffs.iter() {
            out.add_term(
                self.image[*i],
                &c.mul(&FieldElement::from_int(alg.m, self.sign[*i])),
            );
        }
        out
    }

    pub fn order(&self) -> usize {
        let n = self.image.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sgn: Vec<i64> = vec![1; n];
        for ord in 1..=24 {
            let mut np = vec![0usize; n];
            let mut ns = vec![0i64; n];
            for i in 0..n {
                np[i] = self.image[perm[i]];
                ns[i] = sgn[i] * self.sign[perm[i]];
            }
            perm = np;
            sgn = ns;
            if (0..n).all(|i| perm[i] == i && sgn[i] == 1) {
                return ord;
            }
        }
        panic!("automorphism order exceeds bound");
    }
}

/// sigma(e_alpha) = psi(alpha) e_{sigma(alpha)}, sigma(h_i) = h_{sigma(i)},
/// where psi corrects the cocycle so the map is a Lie algebra automorphism.
pub fn diagram_automorphism(
    alg: &ChevalleyAlgebra,
    node_perm: &[usize],
) -> Result<DiagramAut, RootError> {
    let n = alg.rank();
    if node_perm.len() != n {
        return Err(RootError::RankMismatch);
    }
    // permutation must preserve the Cartan matrix
    for i in 0..n {
        for j in 0..n {
            if alg.rs.datum.cartan[i][j] != alg.rs.datum.cartan[node_perm[i]][node_perm[j]] {
                return Err(RootError::NotFiniteType);
            }
        }
    }
    // c(i,j) = eps(a_i, a_j) eps(a_{si}, a_{sj}); psi(alpha) =
    // prod_{i<j} c(i,j)^{n_i n_j}
    let eps_simple = |i: usize, j: usize| -> i64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => -1,
            Less => {
                if alg.rs.datum.cartan[i][j].rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                }
            }
            Greater => 1,
        }
    };
    let psi = |alpha: &[i64]| -> i64 {
        let mut parity = 0i64;
        for i in 0..n {
            for j in i + 1..n {
                let c = eps_simple(i, j) * eps_simple(node_perm[i], node_perm[j]);
                if c == -1 {
                    parity += alpha[i] * alpha[j];
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    };
    let dim = alg.dim();
    let mut image = vec![0usize; dim];
    let mut sign = vec![1i64; dim];
    for idx in 0..dim {
        match alg.kinds[idx] {
            BasisKind::Cartan(i) => {
                image[idx] = alg.cartan_index(node_perm[i]);
            }
            _ => {
                let alpha = alg.signed_root(idx);
                let mut sa = vec![0i64; n];
                for (i, &c) in alpha.iter().enumerate() {
                    sa[node_perm[i]] = c;
                }
                image[idx] = alg
                    .index_of_root(&sa)
                    .expect("diagram symmetry permutes roots");
                sign[idx] = psi(alpha);
            }
        }
    }
    Ok(DiagramAut {
        node_perm: node_perm.to_vec(),
        image,
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::TypeLetter;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alg(l: TypeLetter, r: usize, m: u8) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(&CartanDatum::new(l, r).unwrap(), m).unwrap()
    }

    fn check_jacobi(a: &ChevalleyAlgebra, i: usize, j: usize, k: usize) {
        let x = LieElement::basis(a.m, i);
        let y = LieElement::basis(a.m, j);
        let z = LieElement::basis(a.m, k);
        let lhs = a.bracket(&x, &a.bracket(&y, &z));
        let rhs = a
            .bracket(&a.bracket(&x, &y), &z)
            .add(&a.bracket(&y, &a.bracket(&x, &z)));
        assert!(lhs.sub(&rhs).is_zero(), "jacobi fails at ({i},{j},{k})");
    }

    #[test]
    fn serre_triples() {
        for (l, r, m) in [
            (TypeLetter::A, 2, 2),
            (TypeLetter::A, 3, 2),
            (TypeLetter::D, 4, 2),
        ] {
            let a = alg(l, r, m);
            for i in 0..a.rank() {
                let h = a.bracket(&a.gen_e(i), &a.gen_f(i));
                assert_eq!(h, a.gen_h(i), "[x_i+, x_i-] = h_i in {l}{r}");
                for j in 0..a.rank() {
                    let he = a.bracket(&a.gen_h(i), &a.gen_e(j));
                    let expect = a
                        .gen_e(j)
                        .scale(&FieldElement::from_int(m, a.rs.datum.cartan[i][j]));
                    assert_eq!(he, expect);
                }
            }
        }
    }

    #[test]
    fn jacobi_exhaustive_small() {
        for (l, r) in [(TypeLetter::A, 2), (TypeLetter::A, 3), (TypeLetter::D, 4)] {
            let a = alg(l, r, 2);
            let d = a.dim();
            for i in 0..d {
                for j in i..d {
                    for k in j..d {
                        check_jacobi(&a, i, j, k);
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_sampled_large() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (l, r) in [(TypeLetter::A, 5), (TypeLetter::E, 6)] {
            let a = alg(l, r, 2);
            let d = a.dim();
            for _ in 0..400 {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                let k = rng.gen_range(0..d);
                check_jacobi(&a, i, j, k);
            }
        }
    }

    #[test]
    fn rejects_non_simply_laced() {
        let c2 = CartanDatum::new(TypeLetter::C, 2).unwrap();
        assert!(matches!(
            ChevalleyAlgebra::new(&c2, 2),
            Err(RootError::NotSimplyLaced)
        ));
    }

    fn check_aut(a: &ChevalleyAlgebra, sigma: &DiagramAut, expect_order: usize) {
        assert_eq!(sigma.order(), expect_order);
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = sigma.apply(a, &a.bracket_basis(i, j));
                let rhs = a.bracket(
                    &sigma.apply(a, &LieElement::basis(a.m, i)),
                    &sigma.apply(a, &LieElement::basis(a.m, j)),
                );
                assert!(lhs.sub(&rhs).is_zero(), "automorphism fails at ({i},{j})");
            }
        }
    }

    #[test]
    fn automorphisms_preserve_brackets() {
        let a = alg(TypeLetter::A, 2, 2);
        let s = diagram_automorphism(&a, &[1, 0]).unwrap();
        check_aut(&a, &s, 2);

        let a = alg(TypeLetter::A, 3, 2);
        let s = diagram_automorphism(&a, &[2, 1, 0]).unwrap();
        check_aut(&a, &s, 2);

        let a = alg(TypeLetter::A, 5, 2);
        let s = diagram_automorphism(&a, &[4, 3, 2, 1, 0]).unwrap();
        check_aut(&a, &s, 2);

        // D4: swap the fork leaves (order 2), and rotate (order 3)
        let a = alg(TypeLetter::D, 4, 2);
        let s = diagram_automorphism(&a, &[0, 1, 3, 2]).unwrap();
        check_aut(&a, &s, 2);

        let a = alg(TypeLetter::D, 4, 3);
        let s = diagram_automorphism(&a, &[2, 1, 3, 0]).unwrap();
        check_aut(&a, &s, 3);

        let a = alg(TypeLetter::E, 6, 2);
        let s = diagram_automorphism(&a, &[5, 1, 4, 3, 2, 0]).unwrap();
        check_aut(&a, &s, 2);

        // identity is always an automorphism of order 1
        let a = alg(TypeLetter::A, 3, 2);
        let s = diagram_automorphism(&a, &[0, 1, 2]).unwrap();
        assert_eq!(s.order(), 1);

        // non-symmetry rejected
        assert!(diagram_automorphism(&a, &[1, 0, 2]).is_err());
    }
}
