//! Exact arithmetic for Laurent polynomials over the integers.
//!
//! A [`LaurentPoly`] is an element of Z[t, t^-1], stored sparsely as a map
//! from (signed) exponent to nonzero arbitrary-precision coefficient. All
//! operations are exact; there is no floating point anywhere in this crate.
//!
//! The units of Z[t, t^-1] are +-t^k. Most invariants built on this ring are
//! only defined up to such a unit, so [`LaurentPoly::normalize_unit`] fixes a
//! canonical representative: lowest exponent 0 and positive leading
//! coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Evaluation point for [`LaurentPoly::eval_at`]. Only the units of Z are
/// admitted, so that t^-1 also evaluates inside Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    One,
    MinusOne,
}

/// A sparse Laurent polynomial in t with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // Invariant: no stored coefficient is zero.
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c.into())
    }

    /// c * t^k.
    pub fn monomial(k: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in pairs {
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        LaurentPoly { terms }
    }

    /// Coefficients c_0..c_d of an ordinary polynomial, lowest degree first.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone().into())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// True iff self is +-t^k.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// max_exp - min_exp for nonzero polynomials.
    pub fn degree_span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&k, c) in &other.terms {
            let entry = terms.entry(k).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ka, ca) in &self.terms {
            for (&kb, cb) in &other.terms {
                let k = ka + kb;
                let entry = terms.entry(k).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&k);
                }
            }
        }
        LaurentPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, co)| (e, co * c)).collect() }
    }

    /// Canonical representative up to units +-t^k: lowest exponent 0 and
    /// positive leading coefficient.
    ///
    /// Panics on the zero polynomial, which has no unit normal form.
    pub fn normalize_unit(&self) -> Self {
        assert!(!self.is_zero(), "normalize_unit: zero polynomial");
        let lo = self.min_exp().unwrap();
        let shifted = self.shift(-lo);
        if shifted.terms.values().next_back().unwrap().is_negative() {
            shifted.neg()
        } else {
            shifted
        }
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact evaluation at t = +-1.
    pub fn eval_at(&self, x: EvalPoint) -> BigInt {
        let mut acc = BigInt::zero();
        for (&k, c) in &self.terms {
            match x {
                EvalPoint::One => acc += c,
                EvalPoint::MinusOne => {
                    if k.rem_euclid(2) == 0 {
                        acc += c;
                    } else {
                        acc -= c;
                    }
                }
            }
        }
        acc
    }

    /// The ring automorphism t -> t^-1.
    pub fn invert_t(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect() }
    }

    /// Exact division: Some(q) with self = q * b, or None when b does not
    /// divide self in Z[t, t^-1].
    ///
    /// Panics if b is zero.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        assert!(!b.is_zero(), "div_exact: division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials with nonzero constant term;
        // divisibility in the Laurent ring is unchanged by units.
        let va = self.min_exp().unwrap();
        let vb = b.min_exp().unwrap();
        let a0 = self.shift(-va);
        let b0 = b.shift(-vb);
        let db = b0.max_exp().unwrap();
        let lc_b = b0.coeff(db);

        let mut rem = a0;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let dr = rem.max_exp().unwrap();
            if dr < db {
                return None;
            }
            let lc_r = rem.coeff(dr);
            let (q, r) = lc_r.div_rem(&lc_b);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(dr - db, q);
            rem = rem.sub(&term.mul(&b0));
            quot = quot.add(&term);
        }
        Some(quot.shift(va - vb))
    }

    /// Unit-normalized greatest common divisor via integer content extraction
    /// and a primitive pseudo-remainder sequence (Gauss's lemma pulls the
    /// Q[t] gcd of the primitive parts back to Z[t]).
    ///
    /// Panics if both arguments are zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "gcd: both arguments zero");
        if a.is_zero() {
            return b.normalize_unit();
        }
        if b.is_zero() {
            return a.normalize_unit();
        }
        let content = a.content().gcd(&b.content());
        let pa = a.normalize_unit().primitive();
        let pb = b.normalize_unit().primitive();
        let g = Self::primitive_gcd(pa, pb);
        g.scale(&content).normalize_unit()
    }

    fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&k, co)| (k, co / &c)).collect() }
    }

    // Primitive PRS on primitive, unit-normalized inputs.
    fn primitive_gcd(mut r0: Self, mut r1: Self) -> Self {
        if r0.max_exp().unwrap() < r1.max_exp().unwrap() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let rem = Self::pseudo_rem(&r0, &r1);
            r0 = r1;
            r1 = if rem.is_zero() { rem } else { rem.normalize_unit().primitive() };
        }
        r0.normalize_unit().primitive()
    }

    // Pseudo-remainder of ordinary polynomials: lc(b)^(da-db+1) * a mod b,
    // computed without fractions.
    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let db = b.max_exp().unwrap();
        let lc_b = b.coeff(db);
        let mut rem = a.clone();
        while !rem.is_zero() {
            let dr = rem.max_exp().unwrap();
            if dr < db {
                break;
            }
            let lc_r = rem.coeff(dr);
            rem = rem.scale(&lc_b).sub(&b.mul(&LaurentPoly::monomial(dr - db, lc_r)));
            // The t^dr term cancels exactly; scaling keeps everything in Z.
            debug_assert!(rem.coeff(dr).is_zero());
        }
        rem
    }

    /// The n-th cyclotomic polynomial, computed by dividing t^n - 1 by the
    /// cyclotomic polynomials of the proper divisors of n.
    pub fn cyclotomic(n: u64) -> Self {
        assert!(n >= 1, "cyclotomic: index must be positive");
        let mut table: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            // t^d - 1
            let mut num = LaurentPoly::from_terms([(d as i64, BigInt::one()), (0, -BigInt::one())]);
            for (&e, phi) in table.iter() {
                if d % e == 0 {
                    num = num.div_exact(phi).expect("cyclotomic division is exact");
                }
            }
            table.insert(d, num);
        }
        table.remove(&n).unwrap()
    }

    /// Ordering key used for canonical generator lists: degree span first,
    /// then the coefficient tuple read from the lowest exponent up.
    pub fn sort_key(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let coeffs = (lo..=hi).map(|k| self.coeff(k)).collect();
                (hi - lo, coeffs)
            }
            _ => (-1, Vec::new()),
        }
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key()).then_with(|| {
            let a: Vec<_> = self.terms.iter().collect();
            let b: Vec<_> = other.terms.iter().collect();
            a.cmp(&b)
        })
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in descending exponent order, e.g.
    /// `t^2 - t + 1`, `2t^-1 + 1`, `-3`. Round-trips through the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.terms.iter().rev().enumerate() {
            Self::write_term(f, k, c, i == 0)?;
        }
        Ok(())
    }
}

impl LaurentPoly {
    fn write_term(f: &mut fmt::Formatter<'_>, k: i64, c: &BigInt, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if k == 0 {
            write!(f, "{}", a)
        } else {
            if !a.is_one() {
                write!(f, "{}", a)?;
            }
            if k == 1 {
                write!(f, "t")
            } else {
                write!(f, "t^{}", k)
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
