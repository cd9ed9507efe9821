//! Exact scalar arithmetic over the tower Q(zeta_m, sqrt2) and Laurent
//! polynomials over it.
//!
//! Every scalar in the engine is a `FieldElement`: a vector over the basis
//! {1, zeta, sqrt2, zeta*sqrt2} where zeta is a primitive m-th root of unity
//! (m in {1,2,3}).  For m <= 2 the zeta coordinates are folded into the
//! rational part (zeta = 1 resp. -1), so equality is coordinate-wise.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    BadFieldTag(u8),
    DivisionByZero,
    MixedFieldTags(u8, u8),
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::BadFieldTag(m) => write!(f, "field tag m = {m} is not in {{1,2,3}}"),
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::MixedFieldTags(a, b) => {
                write!(f, "mixed field tags {a} and {b} in one operation")
            }
        }
    }
}

impl std::error::Error for ExactError {}

/// Element of Q(zeta_m, sqrt2), coordinates over {1, zeta, sqrt2, zeta*sqrt2}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    m: u8,
    c: [Rat; 4],
}

impl FieldElement {
    pub fn new(m: u8, c: [Rat; 4]) -> Result<Self, ExactError> {
        if !(1..=3).contains(&m) {
            return Err(ExactError::BadFieldTag(m));
        }
        let mut el = FieldElement { m, c };
        el.canonicalize();
        Ok(el)
    }

    /// zeta folds into the rational part when m <= 2.
    fn canonicalize(&mut self) {
        if self.m == 1 {
            let b = std::mem::replace(&mut self.c[1], Rat::zero());
            let d = std::mem::replace(&mut self.c[3], Rat::zero());
            self.c[0] += b;
            self.c[2] += d;
        } else if self.m == 2 {
            let b = std::mem::replace(&mut self.c[1], Rat::zero());
            let d = std::mem::replace(&mut self.c[3], Rat::zero());
            self.c[0] -= b;
            self.c[2] -= d;
        }
    }

    pub fn zero(m: u8) -> Self {
        FieldElement {
            m,
            c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one(m: u8) -> Self {
        FieldElement::from_rat(m, Rat::one())
    }

    pub fn from_rat(m: u8, r: Rat) -> Self {
        FieldElement {
            m,
            c: [r, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn from_int(m: u8, n: i64) -> Self {
        FieldElement::from_rat(m, rat_int(n))
    }

    /// The primitive m-th root of unity itself.
    pub fn zeta(m: u8) -> Self {
        let mut el = FieldElement::zero(m);
        el.c[1] = Rat::one();
        el.canonicalize();
        el
    }

    pub fn sqrt2(m: u8) -> Self {
        let mut el = FieldElement::zero(m);
        el.c[2] = Rat::one();
        el
    }

    pub fn field_tag(&self) -> u8 {
        self.m
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Returns Some(r) iff the element lies in Q.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    fn check_tag(&self, other: &Self) -> Result<(), ExactError> {
        if self.m != other.m {
            Err(ExactError::MixedFieldTags(self.m, other.m))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_tag(other).expect("field tag mismatch");
        let mut c = self.c.clone();
        for k in 0..4 {
            if !other.c[k].is_zero() {
                c[k] += &other.c[k];
            }
        }
        FieldElement { m: self.m, c }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_tag(other).expect("field tag mismatch");
        let mut c = self.c.clone();
        for k in 0..4 {
            c[k] -= &other.c[k];
        }
        FieldElement { m: self.m, c }
    }

    pub fn neg(&self) -> Self {
        let mut c = self.c.clone();
        for x in c.iter_mut() {
            *x = -std::mem::take(x);
        }
        FieldElement { m: self.m, c }
    }

    fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// self -= a * f, in place; the workhorse of row elimination.
    pub fn sub_mul_assign(&mut self, a: &Self, f: &Self) {
        if a.is_zero() || f.is_zero() {
            return;
        }
        if a.is_rational() && f.is_rational() {
            self.c[0] -= &a.c[0] * &f.c[0];
            return;
        }
        let prod = a.mul(f);
        for k in 0..4 {
            if !prod.c[k].is_zero() {
                self.c[k] -= &prod.c[k];
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_tag(other).expect("field tag mismatch");
        // most values met in practice are plain rationals; skip the
        // 12-multiplication general product for those
        if self.is_rational() {
            return other.scale(&self.c[0]);
        }
        if other.is_rational() {
            return self.scale(&other.c[0]);
        }
        // Write u = P + Q*sqrt2 with P, Q in Q[zeta]/Phi_m.
        let (p, q) = (&[&self.c[0], &self.c[1]], &[&self.c[2], &self.c[3]]);
        let (p2, q2) = (&[&other.c[0], &other.c[1]], &[&other.c[2], &other.c[3]]);
        let pp = Self::zmul(self.m, p, p2);
        let qq = Self::zmul(self.m, q, q2);
        let pq = Self::zmul(self.m, p, q2);
        let qp = Self::zmul(self.m, q, p2);
        let two = rat_int(2);
        let mut el = FieldElement {
            m: self.m,
            c: [
                &pp[0] + &qq[0] * &two,
                &pp[1] + &qq[1] * &two,
                &pq[0] + &qp[0],
                &pq[1] + &qp[1],
            ],
        };
        el.canonicalize();
        el
    }

    /// Multiply two degree-<=1 polynomials in zeta, reduced mod Phi_m.
    fn zmul(m: u8, a: &[&Rat; 2], b: &[&Rat; 2]) -> [Rat; 2] {
        let c0 = a[0] * b[0];
        let c1 = a[0] * b[1] + a[1] * b[0];
        let c2 = a[1] * b[1];
        match m {
            1 => [c0 + c2, c1],
            2 => [c0 + c2, c1], // zeta^2 = 1 when zeta = -1
            3 => [c0 - &c2, c1 - c2], // zeta^2 = -1 - zeta
            _ => unreachable!(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut c = self.c.clone();
        for x in c.iter_mut() {
            if !x.is_zero() {
                *x *= r;
            }
        }
        FieldElement { m: self.m, c }
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.m <= 2 {
            // (a + c sqrt2)^{-1} = (a - c sqrt2) / (a^2 - 2 c^2)
            let a = &self.c[0];
            let c = &self.c[2];
            let denom = a * a - rat_int(2) * c * c;
            let inv = denom.recip();
            let mut el = FieldElement::zero(self.m);
            el.c[0] = a * &inv;
            el.c[2] = -(c * &inv);
            return Ok(el);
        }
        // m = 3: solve M x = e_0 for the regular-representation matrix M of self.
        let basis = [
            FieldElement::one(3),
            FieldElement::zeta(3),
            FieldElement::sqrt2(3),
            FieldElement::zeta(3).mul(&FieldElement::sqrt2(3)),
        ];
        let mut mat = vec![vec![Rat::zero(); 5]; 4];
        for (j, b) in basis.iter().enumerate() {
            let col = self.mul(b);
            for i in 0..4 {
                mat[i][j] = col.c[i].clone();
            }
        }
        mat[0][4] = Rat::one();
        solve_square(&mut mat).ok_or(ExactError::DivisionByZero).map(|x| {
            FieldElement::new(3, [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]).unwrap()
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = FieldElement::one(self.m);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Total ordering on (m, coordinates); used for canonical serialization.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.m.cmp(&other.m).then_with(|| self.c.cmp(&other.c))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "z", "r2", "z*r2"];
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if names[k].is_empty() {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}*{}", names[k])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.canonical_cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_from_string(s: &str) -> Option<Rat> {
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next()?.trim().parse().ok()?;
    let den: BigInt = match parts.next() {
        Some(d) => d.trim().parse().ok()?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            m: u8,
            c: [&'a str; 4],
        }
        let strs: Vec<String> = self.c.iter().map(rat_to_string).collect();
        Repr {
            m: self.m,
            c: [&strs[0], &strs[1], &strs[2], &strs[3]],
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            m: u8,
            c: [String; 4],
        }
        let r = Repr::deserialize(de)?;
        let mut c: [Rat; 4] = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for (k, s) in r.c.iter().enumerate() {
            c[k] = rat_from_string(s).ok_or_else(|| D::Error::custom("bad rational"))?;
        }
        FieldElement::new(r.m, c).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Solve a 4x5 augmented exact linear system; returns None if singular.
fn solve_square(mat: &mut [Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = mat.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, piv);
        let p = mat[col][col].clone();
        for x in mat[col].iter_mut() {
            *x /= &p;
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

/// Finitely supported Laurent polynomial over the scalar field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    m: u8,
    coeffs: BTreeMap<i64, FieldElement>,
}

impl LaurentPoly {
    pub fn zero(m: u8) -> Self {
        LaurentPoly {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: i64, coeff: FieldElement) -> Self {
        let mut p = LaurentPoly::zero(coeff.field_tag());
        p.add_term(exp, coeff);
        p
    }

    pub fn one(m: u8) -> Self {
        LaurentPoly::monomial(0, FieldElement::one(m))
    }

    /// t - a
    pub fn linear(a: &FieldElement) -> Self {
        let m = a.field_tag();
        let mut p = LaurentPoly::monomial(1, FieldElement::one(m));
        p.add_term(0, a.neg());
        p
    }

    pub fn field_tag(&self) -> u8 {
        self.m
    }

    pub fn add_term(&mut self, exp: i64, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, coeff);
            }
            Some(prev) => {
                let s = prev.add(&coeff);
                if !s.is_zero() {
                    self.coeffs.insert(exp, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> FieldElement {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.m))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &FieldElement)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = LaurentPoly::zero(self.m);
        for (e, c) in self.coeffs.iter() {
            out.add_term(*e, c.neg());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero(self.m);
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in other.coeffs.iter() {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        let mut out = LaurentPoly::zero(self.m);
        for (e, c) in self.coeffs.iter() {
            out.add_term(*e, c.mul(s));
        }
        out
    }

    pub fn shift(&self, k: i64) -> Self {
        let mut out = LaurentPoly::zero(self.m);
        for (e, c) in self.coeffs.iter() {
            out.add_term(e + k, c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one(self.m);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = FieldElement::zero(self.m);
        for (e, c) in self.coeffs.iter() {
            acc = acc.add(&c.mul(&x.pow(*e).expect("eval at zero with negative exponent")));
        }
        acc
    }

    /// Remainder of `self` modulo the ideal g * C[t, t^-1].
    ///
    /// The divisor is normalized to an honest polynomial with nonzero constant
    /// term (multiplying by the unit t^k); negative exponents in the dividend
    /// are cleared through the inverse of t modulo that polynomial.
    pub fn rem(&self, g: &Self) -> Result<Self, ExactError> {
        if g.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g0 = g.shift(-g.min_exp().unwrap());
        let deg = g0.max_exp().unwrap();
        if deg == 0 {
            return Ok(LaurentPoly::zero(self.m));
        }
        // Constant term of g0 is nonzero by construction, so t is a unit mod g0:
        // t^{-1} = -(g0 - g0(0)) / (t * g0(0)).
        let c0 = g0.coeff(0);
        let c0_inv = c0.inverse()?;
        let mut tinv = LaurentPoly::zero(self.m);
        for (e, c) in g0.coeffs.iter() {
            if *e > 0 {
                tinv.add_term(e - 1, c.mul(&c0_inv).neg());
            }
        }
        let shift = self.min_exp().map(|e| e.min(0)).unwrap_or(0);
        let f = self.shift(-shift);
        let mut r = poly_rem(&f, &g0)?;
        for _ in 0..(-shift) {
            r = poly_rem(&r.mul(&tinv), &g0)?;
        }
        Ok(r)
    }
}

/// Plain polynomial remainder; both arguments must have no negative exponents.
fn poly_rem(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly, ExactError> {
    let gdeg = g.max_exp().ok_or(ExactError::DivisionByZero)?;
    let lead_inv = g.coeff(gdeg).inverse()?;
    let mut r = f.clone();
    while let Some(d) = r.max_exp() {
        if d < gdeg {
            break;
        }
        let factor = r.coeff(d).mul(&lead_inv);
        for (e, c) in g.coeffs.iter() {
            r.add_term(e + (d - gdeg), c.mul(&factor).neg());
        }
    }
    Ok(r)
}

/// field_make per the external contract: canonical element from raw coordinates.
pub fn field_make(
    m: u8,
    rational_part: Rat,
    zeta_part: Rat,
    sqrt2_part: Rat,
    zeta_sqrt2_part: Rat,
) -> Result<FieldElement, ExactError> {
    FieldElement::new(m, [rational_part, zeta_part, sqrt2_part, zeta_sqrt2_part])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample(rng: &mut ChaCha8Rng, m: u8) -> FieldElement {
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for x in c.iter_mut() {
            *x = rat(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        }
        FieldElement::new(m, c).unwrap()
    }

    #[test]
    fn field_make_folds_zeta_for_small_m() {
        // m=2: zeta = -1
        let e = field_make(2, rat_int(0), rat_int(1), rat_int(0), rat_int(0)).unwrap();
        assert_eq!(e, FieldElement::from_int(2, -1));
        // m=3: (1+zeta)*zeta = -1
        let e = field_make(3, rat_int(1), rat_int(1), rat_int(0), rat_int(0)).unwrap();
        let prod = e.mul(&FieldElement::zeta(3));
        assert_eq!(prod, FieldElement::from_int(3, -1));
        // m=1: sqrt2^2 = 2
        let s = field_make(1, rat_int(0), rat_int(0), rat_int(1), rat_int(0)).unwrap();
        assert_eq!(s.mul(&s), FieldElement::from_int(1, 2));
    }

    #[test]
    fn field_make_rejects_bad_tag() {
        assert!(field_make(4, rat_int(0), rat_int(0), rat_int(0), rat_int(0)).is_err());
        assert!(field_make(0, rat_int(0), rat_int(0), rat_int(0), rat_int(0)).is_err());
    }

    #[test]
    fn cyclotomic_relation_m3() {
        let z = FieldElement::zeta(3);
        let sum = FieldElement::one(3).add(&z).add(&z.mul(&z));
        assert!(sum.is_zero());
    }

    /// Independent extended-Euclid oracle over Q[x]/Phi_3 for the inverse of
    /// p0 + p1*zeta (sqrt2 parts zero): gcd(p0 + p1 x, x^2 + x + 1).
    fn euclid_inverse_m3(p0: &Rat, p1: &Rat) -> (Rat, Rat) {
        // For a linear a(x) = p0 + p1 x, the Bezout identity with
        // Phi(x) = x^2 + x + 1 is found by one division step:
        // Phi = a * q + r with deg r = 0 unless p1 = 0.
        if p1.is_zero() {
            return (p0.recip(), Rat::zero());
        }
        // q(x) = (x + 1 - p0/p1) / p1; r = Phi - a q (a constant).
        let q1 = p1.recip();
        let q0 = (Rat::one() - p0 / p1) / p1;
        // r = 1 - p0*q0
        let r = Rat::one() - p0 * &q0;
        // a^{-1} = -q / r ... indeed a * q = Phi - r == -r mod Phi.
        let inv_r = r.recip();
        (-(q0 * &inv_r), -(q1 * &inv_r))
    }

    #[test]
    fn inverse_examples() {
        let two = FieldElement::from_int(1, 2);
        assert_eq!(two.inverse().unwrap(), FieldElement::from_rat(1, rat(1, 2)));
        let s = FieldElement::sqrt2(1);
        assert_eq!(
            s.inverse().unwrap(),
            field_make(1, rat_int(0), rat_int(0), rat(1, 2), rat_int(0)).unwrap()
        );
        // (1+zeta)^{-1} computed by the extended-Euclid oracle
        let e = field_make(3, rat_int(1), rat_int(1), rat_int(0), rat_int(0)).unwrap();
        let (i0, i1) = euclid_inverse_m3(&rat_int(1), &rat_int(1));
        let expect = field_make(3, i0, i1, rat_int(0), rat_int(0)).unwrap();
        assert_eq!(e.inverse().unwrap(), expect);
        assert!(e.mul(&expect).is_one());
        // closed form: since 1 + zeta = -zeta^2, the inverse is -zeta
        assert_eq!(expect, FieldElement::zeta(3).neg());
        assert!(FieldElement::zero(3).inverse().is_err());
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [1u8, 2, 3] {
            for _ in 0..40 {
                let a = sample(&mut rng, m);
                let b = sample(&mut rng, m);
                let c = sample(&mut rng, m);
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                if !a.is_zero() {
                    assert!(a.mul(&a.inverse().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn laurent_mul_and_rem() {
        let m = 1u8;
        let one = FieldElement::one(m);
        // (t-1)(t+1) = t^2 - 1
        let f = LaurentPoly::linear(&one);
        let g = LaurentPoly::linear(&one.neg());
        let prod = f.mul(&g);
        let mut expect = LaurentPoly::monomial(2, one.clone());
        expect.add_term(0, one.neg());
        assert_eq!(prod, expect);

        // t^3 mod (t-2) = 8
        let t3 = LaurentPoly::monomial(3, one.clone());
        let g = LaurentPoly::linear(&FieldElement::from_int(m, 2));
        let r = t3.rem(&g).unwrap();
        assert_eq!(r, LaurentPoly::monomial(0, FieldElement::from_int(m, 8)));

        // t^{-1} mod (t-2) = 1/2; check by multiplying back
        let tneg = LaurentPoly::monomial(-1, one.clone());
        let r = tneg.rem(&g).unwrap();
        assert_eq!(
            r,
            LaurentPoly::monomial(0, FieldElement::from_rat(m, rat(1, 2)))
        );
        let back = r.mul(&LaurentPoly::monomial(1, one.clone())).sub(&LaurentPoly::one(m));
        assert!(back.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn laurent_rem_of_multiples_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in [1u8, 3] {
            for _ in 0..25 {
                let mut f = LaurentPoly::zero(m);
                let mut g = LaurentPoly::zero(m);
                for e in -2..3i64 {
                    f.add_term(e, sample(&mut rng, m));
                    g.add_term(e, sample(&mut rng, m));
                }
                if g.is_zero() {
                    continue;
                }
                assert!(f.mul(&g).rem(&g).unwrap().is_zero());
            }
        }
    }
}
