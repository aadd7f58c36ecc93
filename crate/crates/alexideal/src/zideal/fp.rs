//! Dense univariate arithmetic over F_p, p a small prime.
//!
//! Used for the image of a Laurent ideal in the PID F_p[t, t^-1]:
//! reductions, gcds, and irreducibility by exhaustive trial division.
//! Bounds are enforced (p <= 97, divisor enumeration capped) so that an
//! out-of-scale input is a reported error, never a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::laurent::LaurentPoly;

pub(crate) const MAX_PRIME: u64 = 97;
pub(crate) const MAX_DEGREE: usize = 12;
const MAX_TRIAL_DIVISORS: u64 = 10_000_000;

/// Monic-by-convention dense polynomial over F_p. Coefficient of t^i at
/// index i; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.c.len() - 1
    }

    fn trim(mut self) -> Self {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        self
    }

    pub fn from_coeffs(p: u64, c: Vec<u64>) -> Self {
        FpPoly { p, c: c.into_iter().map(|x| x % p).collect() }.trim()
    }

    /// Reduce a Laurent polynomial mod p after clearing the unit t^min_exp.
    pub fn from_laurent(p: u64, f: &LaurentPoly) -> Self {
        if f.is_zero() {
            return Self::zero(p);
        }
        let shifted = f.shift(-f.min_exp().unwrap());
        let deg = shifted.max_exp().unwrap() as usize;
        let pb = BigInt::from(p);
        let mut c = vec![0u64; deg + 1];
        for (k, co) in shifted.terms() {
            c[k as usize] = co.mod_floor(&pb).to_u64().unwrap();
        }
        FpPoly { p, c }.trim()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.c.iter().enumerate().map(|(i, &co)| (i as i64, co)))
    }

    pub fn monic(mut self) -> Self {
        if self.is_zero() {
            return self;
        }
        let lead = *self.c.last().unwrap();
        if lead == 1 {
            return self;
        }
        let inv = mod_inverse(lead, self.p);
        for co in &mut self.c {
            *co = mulmod(*co, inv, self.p);
        }
        self
    }

    /// Strip the largest power of t dividing self (t is a unit in the
    /// Laurent image), so the constant term is nonzero.
    pub fn strip_t(mut self) -> Self {
        let k = self.c.iter().take_while(|&&co| co == 0).count();
        if k > 0 && k < self.c.len() {
            self.c.drain(0..k);
        }
        self
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        assert!(!d.is_zero());
        let p = self.p;
        let inv = mod_inverse(*d.c.last().unwrap(), p);
        let mut r = self.c.clone();
        let dd = d.deg();
        while r.len() > dd {
            let lead = *r.last().unwrap();
            if lead != 0 {
                let q = mulmod(lead, inv, p);
                let off = r.len() - 1 - dd;
                for (i, &dc) in d.c.iter().enumerate() {
                    let idx = off + i;
                    r[idx] = (r[idx] + p - mulmod(q, dc, p)) % p;
                }
            }
            r.pop();
        }
        FpPoly { p, c: r }.trim()
    }

    pub fn gcd(a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = r0.rem(&r1);
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        other.rem(self).is_zero()
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a nonzero mod p.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

pub(crate) fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// All monic polynomials of exact degree d over F_p, in lexicographic order
/// of their coefficient vectors (constant coefficient fastest).
fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = FpPoly> {
    let total = (p as u128).pow(d as u32);
    (0..total).map(move |mut idx| {
        let mut c = vec![0u64; d + 1];
        for co in c.iter_mut().take(d) {
            *co = (idx % p as u128) as u64;
            idx /= p as u128;
        }
        c[d] = 1;
        FpPoly { p, c }
    })
}

/// Irreducibility over F_p by trial division against every monic polynomial
/// of degree 1..=deg/2.
pub(crate) fn is_irreducible(f: &FpPoly) -> Result<bool, TrialBound> {
    assert!(!f.is_zero());
    let d = f.deg();
    check_bounds(f.p, d)?;
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    for dd in 1..=d / 2 {
        for g in monic_of_degree(f.p, dd) {
            if g.divides(f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monic irreducible factors with multiplicity, by repeated trial division
/// smallest divisor first; the output order is canonical.
pub(crate) fn factor(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>, TrialBound> {
    assert!(!f.is_zero());
    check_bounds(f.p, f.deg())?;
    let mut rest = f.clone().monic();
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    'outer: while rest.deg() >= 1 {
        for dd in 1..=rest.deg() {
            for g in monic_of_degree(rest.p, dd) {
                if g.divides(&rest) {
                    let mut mult = 0u32;
                    while g.divides(&rest) {
                        rest = divide_out(&rest, &g);
                        mult += 1;
                    }
                    out.push((g, mult));
                    continue 'outer;
                }
            }
        }
        unreachable!("a nonconstant polynomial has a monic divisor of its own degree");
    }
    Ok(out)
}

fn divide_out(f: &FpPoly, g: &FpPoly) -> FpPoly {
    // f / g via synthetic division; exact by caller's check.
    let p = f.p;
    let inv = mod_inverse(*g.c.last().unwrap(), p);
    let mut r = f.c.clone();
    let dg = g.deg();
    let mut q = vec![0u64; f.c.len() - dg];
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let qq = mulmod(lead, inv, p);
        let off = r.len() - 1 - dg;
        q[off] = qq;
        for (i, &gc) in g.c.iter().enumerate() {
            r[off + i] = (r[off + i] + p - mulmod(qq, gc, p)) % p;
        }
        r.pop();
    }
    FpPoly { p, c: q }.trim()
}

/// Out-of-scale trial division request.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct TrialBound {
    pub p: u64,
    pub degree: usize,
}

fn check_bounds(p: u64, degree: usize) -> Result<(), TrialBound> {
    if p > MAX_PRIME || degree > MAX_DEGREE {
        return Err(TrialBound { p, degree });
    }
    let half = (degree / 2) as u32;
    if (p as u128).pow(half) > MAX_TRIAL_DIVISORS as u128 {
        return Err(TrialBound { p, degree });
    }
    Ok(())
}
