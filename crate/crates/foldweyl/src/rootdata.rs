//! Root systems, weights, Weyl orbits and irreducible characters for the
//! finite types A, B, C, D, E6, F4, G2.
//!
//! Conventions: Bourbaki node numbering.  The Cartan matrix is stored as
//! a[i][j] = alpha_j(h_i) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), with
//! symmetrizers d_i (short roots d = 1) making (d_i a[i][j]) symmetric.
//! Weights live in fundamental-weight coordinates; roots in simple-root
//! coordinates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{rat_int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLetter::A => "A",
            TypeLetter::B => "B",
            TypeLetter::C => "C",
            TypeLetter::D => "D",
            TypeLetter::E => "E",
            TypeLetter::F => "F",
            TypeLetter::G => "G",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    BadType(TypeLetter, usize),
    NotFiniteType,
    NotSimplyLaced,
    NotDominant(Weight),
    RankMismatch,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::BadType(t, r) => write!(f, "no finite type {t}{r}"),
            RootError::NotFiniteType => write!(f, "Cartan matrix is not of finite type"),
            RootError::NotSimplyLaced => write!(f, "datum is not simply laced"),
            RootError::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            RootError::RankMismatch => write!(f, "rank mismatch"),
        }
    }
}

impl std::error::Error for RootError {}

/// Integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Integer coordinates in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node] = 1;
        Weight(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub letter: TypeLetter,
    pub rank: usize,
    /// a[i][j] = alpha_j(h_i)
    pub cartan: Vec<Vec<i64>>,
    /// symmetrizers, short roots normalized to 1
    pub d: Vec<i64>,
}

impl CartanDatum {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self, RootError> {
        let bad = || RootError::BadType(letter, rank);
        let (cartan, d): (Vec<Vec<i64>>, Vec<i64>) = match (letter, rank) {
            (TypeLetter::A, n) if n >= 1 => (chain_matrix(n, &[]), vec![1; n]),
            (TypeLetter::B, n) if n >= 2 => {
                // node n short: a[n-1][n] = -1, a[n][n-1] = -2
                let mut m = chain_matrix(n, &[]);
                m[n - 1][n - 2] = -2;
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (m, d)
            }
            (TypeLetter::C, n) if n >= 2 => {
                // node n long
                let mut m = chain_matrix(n, &[]);
                m[n - 2][n - 1] = -2;
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (m, d)
            }
            (TypeLetter::D, n) if n >= 3 => {
                // chain 1..n-2, fork n-1 and n on n-2
                let mut m = vec![vec![0i64; n]; n];
                for i in 0..n {
                    m[i][i] = 2;
                }
                for i in 0..n.saturating_sub(3) {
                    m[i][i + 1] = -1;
                    m[i + 1][i] = -1;
                }
                m[n - 3][n - 2] = -1;
                m[n - 2][n - 3] = -1;
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
                (m, vec![1; n])
            }
            (TypeLetter::E, 6) => {
                // chain 1-3-4-5-6, node 2 on node 4
                let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                let mut m = vec![vec![0i64; 6]; 6];
                for i in 0..6 {
                    m[i][i] = 2;
                }
                for (a, b) in edges {
                    m[a][b] = -1;
                    m[b][a] = -1;
                }
                (m, vec![1; 6])
            }
            (TypeLetter::F, 4) => {
                // 1-2=>3-4, nodes 1,2 long
                let m = vec![
                    vec![2, -1, 0, 0],
                    vec![-1, 2, -1, 0],
                    vec![0, -2, 2, -1],
                    vec![0, 0, -1, 2],
                ];
                (m, vec![2, 2, 1, 1])
            }
            (TypeLetter::G, 2) => {
                // node 1 short
                (vec![vec![2, -3], vec![-1, 2]], vec![1, 3])
            }
            _ => return Err(bad()),
        };
        let datum = CartanDatum {
            letter,
            rank,
            cartan,
            d,
        };
        datum.validate()?;
        Ok(datum)
    }

    pub fn validate(&self) -> Result<(), RootError> {
        let n = self.rank;
        for i in 0..n {
            if self.cartan[i][i] != 2 {
                return Err(RootError::NotFiniteType);
            }
            for j in 0..n {
                if i != j {
                    if self.cartan[i][j] > 0 {
                        return Err(RootError::NotFiniteType);
                    }
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0) {
                        return Err(RootError::NotFiniteType);
                    }
                }
            }
        }
        // positive-definite symmetrization via leading principal minors
        let mut sym = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                sym[i][j] = rat_int(self.d[i] * self.cartan[i][j]);
            }
        }
        for k in 1..=n {
            if leading_minor(&sym, k) <= Rat::zero() {
                return Err(RootError::NotFiniteType);
            }
        }
        Ok(())
    }

    pub fn is_simply_laced(&self) -> bool {
        self.d.iter().all(|&x| x == 1)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    /// alpha(h_i) for a root alpha in simple-root coordinates.
    pub fn pairing(&self, alpha: &Root, i: usize) -> i64 {
        alpha
            .0
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.cartan[i][j])
            .sum()
    }

    /// Fundamental-weight coordinates of a root.
    pub fn root_to_weight(&self, alpha: &Root) -> Weight {
        Weight((0..self.rank).map(|i| self.pairing(alpha, i)).collect())
    }

    /// Rational simple-root coordinates of a weight (A^{-1} lambda).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rat> {
        let n = self.rank;
        let mut mat = vec![vec![Rat::zero(); n + 1]; n];
        for i in 0..n {
            for j in 0..n {
                mat[i][j] = rat_int(self.cartan[i][j]);
            }
            mat[i][n] = rat_int(w.0[i]);
        }
        solve_rat(&mut mat).expect("Cartan matrix invertible")
    }

    /// Simple reflection s_i acting in fundamental coordinates.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i];
        Weight(
            (0..self.rank)
                .map(|j| w.0[j] - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// (lambda, mu) in the normalization with short roots of squared length 2.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Rat {
        let ca = self.weight_to_root_coords(a);
        let cb = self.weight_to_root_coords(b);
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += &ca[i] * rat_int(self.d[i] * self.cartan[i][j]) * &cb[j];
            }
        }
        acc
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }
}

fn chain_matrix(n: usize, _extra: &[()]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn leading_minor(sym: &[Vec<Rat>], k: usize) -> Rat {
    // exact determinant of the top-left k x k block
    let mut m: Vec<Vec<Rat>> = (0..k).map(|i| sym[i][..k].to_vec()).collect();
    let mut det = Rat::one();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..k {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..k {
                    let sub = &m[col][c] * &f;
                    m[r][c] -= sub;
                }
            }
        }
    }
    det
}

fn solve_rat(mat: &mut [Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = mat.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, p);
        let inv = mat[col][col].recip();
        for c in 0..=n {
            mat[col][c] = &mat[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in 0..=n {
                    let sub = &mat[col][c] * &f;
                    mat[r][c] -= sub;
                }
            }
        }
    }
    Some((0..n).map(|r| mat[r][n].clone()).collect())
}

/// Complete root-system tables for one Cartan datum.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub datum: CartanDatum,
    pub positive_roots: Vec<Root>,
    /// highest root
    pub theta: Root,
    /// highest short root (equals theta in simply-laced types)
    pub theta_short: Root,
    /// squared length of each positive root
    pub norms: Vec<Rat>,
}

pub fn build_root_system(datum: &CartanDatum) -> Result<RootSystem, RootError> {
    datum.validate()?;
    let n = datum.rank;
    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        let r = Root(v);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(alpha) = queue.pop_front() {
        for i in 0..n {
            let c = datum.pairing(&alpha, i);
            let mut v = alpha.0.clone();
            v[i] -= c;
            let refl = Root(v);
            if refl.0.iter().all(|&x| x >= 0) && !seen.contains(&refl) {
                seen.insert(refl.clone());
                queue.push_back(refl);
            }
        }
    }
    let mut positive_roots: Vec<Root> = seen.into_iter().collect();
    positive_roots.sort_by_key(|r| (r.height(), r.0.clone()));
    let norms: Vec<Rat> = positive_roots
        .iter()
        .map(|r| {
            let mut acc = Rat::zero();
            for i in 0..n {
                for j in 0..n {
                    acc += rat_int(r.0[i] * datum.d[i] * datum.cartan[i][j] * r.0[j]);
                }
            }
            acc
        })
        .collect();
    let theta = positive_roots.last().cloned().ok_or(RootError::NotFiniteType)?;
    let min_norm = norms.iter().min().cloned().unwrap();
    let theta_short = positive_roots
        .iter()
        .zip(norms.iter())
        .filter(|(_, nn)| **nn == min_norm)
        .map(|(r, _)| r.clone())
        .max_by_key(|r| (r.height(), r.0.clone()))
        .unwrap();
    Ok(RootSystem {
        datum: datum.clone(),
        positive_roots,
        theta,
        theta_short,
        norms,
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn dim_g(&self) -> usize {
        self.datum.rank + 2 * self.positive_roots.len()
    }
}

/// Full Weyl orbit of a weight by reflection closure.
pub fn weyl_orbit(datum: &CartanDatum, w: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for i in 0..datum.rank {
            let r = datum.reflect(&v, i);
            if !seen.contains(&r) {
                seen.insert(r.clone());
                queue.push_back(r);
            }
        }
    }
    seen
}

/// Dominant representative of the Weyl orbit.
pub fn dominant_representative(datum: &CartanDatum, w: &Weight) -> Weight {
    let mut v = w.clone();
    loop {
        match v.0.iter().position(|&x| x < 0) {
            None => return v,
            Some(i) => v = datum.reflect(&v, i),
        }
    }
}

/// mu <= lambda in the dominance order: lambda - mu a nonnegative rational
/// combination of simple roots.
pub fn dominance_leq(datum: &CartanDatum, mu: &Weight, lambda: &Weight) -> bool {
    let diff = lambda.sub(mu);
    datum
        .weight_to_root_coords(&diff)
        .iter()
        .all(|c| !c.is_negative())
}

/// Hull membership: dominant_representative(mu) <= lambda in dominance order
/// and mu in lambda - Q+ (integral root coordinates).
pub fn in_hull(datum: &CartanDatum, mu: &Weight, lambda: &Weight) -> bool {
    let diff = lambda.sub(mu);
    let coords = datum.weight_to_root_coords(&diff);
    if !coords.iter().all(|c| c.denom().is_one() && !c.is_negative()) {
        return false;
    }
    dominance_leq(datum, &dominant_representative(datum, mu), lambda)
}

/// Finitely supported weight-multiplicity map.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CharacterSum(pub BTreeMap<Weight, u64>);

impl CharacterSum {
    pub fn singleton(w: Weight) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, 1);
        CharacterSum(m)
    }

    pub fn dimension(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn add_weight(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.0.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    /// Convolution product: the character of a tensor product.
    pub fn product(&self, other: &CharacterSum) -> CharacterSum {
        let mut out = CharacterSum::default();
        for (w1, m1) in self.0.iter() {
            for (w2, m2) in other.0.iter() {
                out.add_weight(w1.add(w2), m1 * m2);
            }
        }
        out
    }

    pub fn sum(&self, other: &CharacterSum) -> CharacterSum {
        let mut out = self.clone();
        for (w, m) in other.0.iter() {
            out.add_weight(w.clone(), *m);
        }
        out
    }

    /// Apply a weight map to every term.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> CharacterSum {
        let mut out = CharacterSum::default();
        for (w, m) in self.0.iter() {
            out.add_weight(f(w), *m);
        }
        out
    }
}

/// Weight multiplicities of the irreducible V(lambda) by Freudenthal's
/// recursion; cross-checked against the Weyl dimension formula in tests.
pub fn irreducible_character(
    datum: &CartanDatum,
    lambda: &Weight,
) -> Result<CharacterSum, RootError> {
    if lambda.0.len() != datum.rank {
        return Err(RootError::RankMismatch);
    }
    if !lambda.is_dominant() {
        return Err(RootError::NotDominant(lambda.clone()));
    }
    let rs = build_root_system(datum)?;
    // Enumerate the weight set by downward BFS inside the hull.
    let mut weights: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    weights.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..datum.rank {
            let mut v = w.clone();
            for j in 0..datum.rank {
                v.0[j] -= datum.cartan[j][i];
            }
            if !weights.contains(&v) && in_hull(datum, &v, lambda) {
                weights.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    // Process in decreasing height of lambda - mu.
    let mut ordered: Vec<Weight> = weights.iter().cloned().collect();
    let height = |w: &Weight| -> Rat {
        datum
            .weight_to_root_coords(&lambda.sub(w))
            .into_iter()
            .sum()
    };
    ordered.sort_by(|a, b| height(a).cmp(&height(b)));
    let rho = datum.rho();
    let lam_rho = lambda.add(&rho);
    let lam_norm = datum.weight_inner(&lam_rho, &lam_rho);
    let mut mults: BTreeMap<Weight, Rat> = BTreeMap::new();
    mults.insert(lambda.clone(), Rat::one());
    for mu in ordered.iter().skip(1) {
        let mut acc = Rat::zero();
        for alpha in rs.positive_roots.iter() {
            let alpha_w = datum.root_to_weight(alpha);
            let mut k = 1i64;
            loop {
                let up = mu.add(&alpha_w.scale(k));
                let Some(m_up) = mults.get(&up) else {
                    if !weights.contains(&up) {
                        break;
                    }
                    k += 1;
                    continue;
                };
                acc += datum.weight_inner(&up, &alpha_w) * m_up;
                k += 1;
            }
        }
        let mu_rho = mu.add(&rho);
        let denom = &lam_norm - datum.weight_inner(&mu_rho, &mu_rho);
        let m = acc * rat_int(2) / denom;
        if !m.is_zero() {
            mults.insert(mu.clone(), m);
        }
    }
    let mut out = CharacterSum::default();
    for (w, m) in mults {
        assert!(m.denom().is_one() && m.is_positive(), "Freudenthal gave non-integer multiplicity");
        let v: i64 = m.numer().try_into().expect("multiplicity fits i64");
        out.add_weight(w, v as u64);
    }
    Ok(out)
}

/// Independent dimension oracle: the Weyl dimension formula.
pub fn weyl_dimension(datum: &CartanDatum, lambda: &Weight) -> Result<u64, RootError> {
    if !lambda.is_dominant() {
        return Err(RootError::NotDominant(lambda.clone()));
    }
    let rs = build_root_system(datum)?;
    let rho = datum.rho();
    let mut num = Rat::one();
    let mut den = Rat::one();
    for alpha in rs.positive_roots.iter() {
        let aw = datum.root_to_weight(alpha);
        num *= datum.weight_inner(&lambda.add(&rho), &aw);
        den *= datum.weight_inner(&rho, &aw);
    }
    let q = num / den;
    assert!(q.denom().is_one());
    Ok(u64::try_from(i64::try_from(q.numer().clone()).unwrap()).unwrap())
}

/// Identify an integer Cartan matrix with a known finite type, up to a
/// simultaneous row/column permutation.  Preference: identity permutation
/// first, then letter order A..G.
pub fn identify_cartan(matrix: &[Vec<i64>]) -> Option<(CartanDatum, Vec<usize>)> {
    let n = matrix.len();
    let mut candidates = Vec::new();
    for letter in [
        TypeLetter::A,
        TypeLetter::B,
        TypeLetter::C,
        TypeLetter::D,
        TypeLetter::E,
        TypeLetter::F,
        TypeLetter::G,
    ] {
        if let Ok(d) = CartanDatum::new(letter, n) {
            candidates.push(d);
        }
    }
    // identity pass
    for cand in &candidates {
        if cand.cartan == matrix {
            return Some((cand.clone(), (0..n).collect()));
        }
    }
    // permutation pass: perm maps candidate index -> matrix index
    let mut perm: Vec<usize> = (0..n).collect();
    for cand in &candidates {
        if permute_match(&mut perm, 0, &cand.cartan, matrix) {
            return Some((cand.clone(), perm));
        }
        perm = (0..n).collect();
    }
    None
}

fn permute_match(perm: &mut Vec<usize>, k: usize, cand: &[Vec<i64>], m: &[Vec<i64>]) -> bool {
    let n = cand.len();
    if k == n {
        return (0..n).all(|i| (0..n).all(|j| cand[i][j] == m[perm[i]][perm[j]]));
    }
    for idx in k..n {
        perm.swap(k, idx);
        // prune: check row/col consistency for prefix
        let ok = (0..=k).all(|i| {
            cand[i][k] == m[perm[i]][perm[k]] && cand[k][i] == m[perm[k]][perm[i]]
        });
        if ok && permute_match(perm, k + 1, cand, m) {
            return true;
        }
        perm.swap(k, idx);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(l: TypeLetter, r: usize) -> CartanDatum {
        CartanDatum::new(l, r).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (TypeLetter::A, 2, 3),
            (TypeLetter::A, 3, 6),
            (TypeLetter::D, 4, 12),
            (TypeLetter::G, 2, 6),
            (TypeLetter::C, 2, 4),
            (TypeLetter::B, 3, 9),
            (TypeLetter::F, 4, 24),
            (TypeLetter::E, 6, 36),
        ];
        for (l, r, count) in cases {
            let rs = build_root_system(&datum(l, r)).unwrap();
            assert_eq!(rs.positive_roots.len(), count, "{l}{r}");
        }
        // dim D4 = 2*12 + 4 = 28
        let rs = build_root_system(&datum(TypeLetter::D, 4)).unwrap();
        assert_eq!(rs.dim_g(), 28);
    }

    #[test]
    fn highest_roots() {
        let rs = build_root_system(&datum(TypeLetter::A, 2)).unwrap();
        assert_eq!(rs.theta, Root(vec![1, 1]));
        assert_eq!(rs.theta_short, rs.theta);
        // G2: theta_s = 2a1 + a2, alpha1 short
        let rs = build_root_system(&datum(TypeLetter::G, 2)).unwrap();
        assert_eq!(rs.theta_short, Root(vec![2, 1]));
        assert_eq!(rs.theta, Root(vec![3, 2]));
    }

    #[test]
    fn rejects_non_finite_type() {
        // affine A1 tilde
        let bad = CartanDatum {
            letter: TypeLetter::A,
            rank: 2,
            cartan: vec![vec![2, -2], vec![-2, 2]],
            d: vec![1, 1],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn orbits() {
        let a2 = datum(TypeLetter::A, 2);
        let orbit = weyl_orbit(&a2, &Weight(vec![1, 0]));
        assert_eq!(orbit.len(), 3);
        assert_eq!(weyl_orbit(&a2, &Weight::zero(2)).len(), 1);
        let c2 = datum(TypeLetter::C, 2);
        assert_eq!(weyl_orbit(&c2, &Weight(vec![0, 1])).len(), 4);
        // orbit size divides Weyl group order (|W(A2)| = 6)
        let orbit = weyl_orbit(&a2, &Weight(vec![1, 1]));
        assert_eq!(6 % orbit.len(), 0);
    }

    #[test]
    fn characters_small() {
        let a1 = datum(TypeLetter::A, 1);
        let ch = irreducible_character(&a1, &Weight(vec![2])).unwrap();
        assert_eq!(ch.dimension(), 3);
        assert_eq!(ch.mult(&Weight(vec![2])), 1);
        assert_eq!(ch.mult(&Weight(vec![0])), 1);
        assert_eq!(ch.mult(&Weight(vec![-2])), 1);

        // adjoint of A2: zero weight has multiplicity 2
        let a2 = datum(TypeLetter::A, 2);
        let ch = irreducible_character(&a2, &Weight(vec![1, 1])).unwrap();
        assert_eq!(ch.dimension(), 8);
        assert_eq!(ch.mult(&Weight::zero(2)), 2);

        // C2 omega2 has dimension 5 (checked against the Weyl formula)
        let c2 = datum(TypeLetter::C, 2);
        let lam = Weight(vec![0, 1]);
        let ch = irreducible_character(&c2, &lam).unwrap();
        assert_eq!(ch.dimension(), 5);
        assert_eq!(ch.dimension(), weyl_dimension(&c2, &lam).unwrap());

        assert!(irreducible_character(&a2, &Weight(vec![-1, 0])).is_err());
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        // all dominant weights with coordinate sum <= 3 in small types
        let data = [
            datum(TypeLetter::A, 2),
            datum(TypeLetter::C, 2),
            datum(TypeLetter::G, 2),
            datum(TypeLetter::B, 3),
            datum(TypeLetter::A, 3),
        ];
        for d in data {
            let mut stack = vec![vec![0i64; d.rank]];
            let mut all = Vec::new();
            while let Some(v) = stack.pop() {
                if v.iter().sum::<i64>() < 3 {
                    for i in 0..d.rank {
                        let mut w = v.clone();
                        w[i] += 1;
                        stack.push(w);
                    }
                }
                all.push(v);
            }
            all.sort();
            all.dedup();
            for v in all {
                let lam = Weight(v);
                let ch = irreducible_character(&d, &lam).unwrap();
                assert_eq!(
                    ch.dimension(),
                    weyl_dimension(&d, &lam).unwrap(),
                    "{} {lam}",
                    d.name()
                );
            }
        }
    }

    #[test]
    fn character_weyl_invariance() {
        let c2 = datum(TypeLetter::C, 2);
        let ch = irreducible_character(&c2, &Weight(vec![1, 1])).unwrap();
        for (w, m) in ch.0.iter() {
            for i in 0..2 {
                assert_eq!(ch.mult(&c2.reflect(w, i)), *m);
            }
        }
    }

    #[test]
    fn hull_tests() {
        let a2 = datum(TypeLetter::A, 2);
        let adj = Weight(vec![1, 1]);
        assert!(in_hull(&a2, &Weight::zero(2), &adj));
        assert!(in_hull(&a2, &adj, &adj));
        let a1 = datum(TypeLetter::A, 1);
        assert!(!in_hull(&a1, &Weight(vec![4]), &Weight(vec![2])));
        // omega1 of A2 is not in the hull of the adjoint (not in lambda - Q)
        assert!(!in_hull(&a2, &Weight(vec![1, 0]), &adj));
    }

    #[test]
    fn identify_cartan_prefers_identity() {
        let c2 = datum(TypeLetter::C, 2);
        let (found, perm) = identify_cartan(&c2.cartan).unwrap();
        assert_eq!(found.letter, TypeLetter::C);
        assert_eq!(perm, vec![0, 1]);
        // reversed F4 matches F4 under a permutation
        let f4 = datum(TypeLetter::F, 4);
        let rev: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| f4.cartan[3 - i][3 - j]).collect())
            .collect();
        let (found, _) = identify_cartan(&rev).unwrap();
        assert_eq!(found.letter, TypeLetter::F);
        assert!(identify_cartan(&vec![vec![2, -2], vec![-2, 2]]).is_none());
    }
}
