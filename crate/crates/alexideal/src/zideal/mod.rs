//! Finitely generated ideals of Z[t, t^-1] with exact decision procedures:
//! membership, equality, products, quotient cardinality, principality,
//! maximality, content splitting, and ideal-class equivalence.
//!
//! Internally an ideal is modelled in Z[t,s]/(ts - 1) and cached as a reduced
//! strong Groebner basis over Z (see [`groebner`]). The construction is
//! canonical, so equality of ideals is equality of cached bases.

mod fp;
mod groebner;
mod lattice;


use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::{EvalPoint, LaurentPoly};
use groebner::{reduced_strong_basis, strong_reduce, Mono, ZtsPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZidealError {
    #[error("an ideal needs at least one nonzero generator")]
    ZeroIdeal,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("{what} exceeds the supported bound {limit} (got {got})")]
    ResourceBound { what: &'static str, limit: u64, got: u64 },
    #[error("the Hilbert function is only defined for maximal ideals here")]
    NotMaximal,
}

/// Cardinality of Z[t, t^-1]/I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientSize {
    Finite(BigUint),
    Infinite,
}

impl QuotientSize {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            QuotientSize::Finite(n) => Some(n),
            QuotientSize::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientSize::Finite(n) => write!(f, "{}", n),
            QuotientSize::Infinite => write!(f, "inf"),
        }
    }
}

/// A nonzero finitely generated ideal of Z[t, t^-1].
#[derive(Clone, Debug)]
pub struct LaurentIdeal {
    user_generators: Vec<LaurentPoly>,
    normal_form: Vec<ZtsPoly>,
    laurent_basis: Vec<LaurentPoly>,
}

impl PartialEq for LaurentIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.normal_form == other.normal_form
    }
}

impl Eq for LaurentIdeal {}

impl fmt::Display for LaurentIdeal {
    /// Canonical text form: the reduced basis, unit-normalized, sorted,
    /// joined by `; `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.laurent_basis.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl LaurentIdeal {
    /// Construct from generators; zero generators are dropped and an
    /// all-zero list is rejected.
    pub fn new(gens: impl IntoIterator<Item = LaurentPoly>) -> Result<Self, ZidealError> {
        let user_generators: Vec<LaurentPoly> =
            gens.into_iter().filter(|g| !g.is_zero()).collect();
        if user_generators.is_empty() {
            return Err(ZidealError::ZeroIdeal);
        }
        let mut lifted: Vec<ZtsPoly> = user_generators.iter().map(ZtsPoly::lift).collect();
        lifted.push(ZtsPoly::relator());
        let normal_form = reduced_strong_basis(lifted);
        let laurent_basis = canonical_projection(&normal_form);
        Ok(LaurentIdeal { user_generators, normal_form, laurent_basis })
    }

    pub fn principal(f: LaurentPoly) -> Result<Self, ZidealError> {
        Self::new([f])
    }

    pub fn unit() -> Self {
        Self::new([LaurentPoly::one()]).unwrap()
    }

    /// The generators this ideal was constructed from.
    pub fn generators(&self) -> &[LaurentPoly] {
        &self.user_generators
    }

    /// Canonical generator list: the unit-normalized projections of the
    /// reduced strong basis, deduplicated and sorted by (degree,
    /// coefficient tuple).
    pub fn basis(&self) -> &[LaurentPoly] {
        &self.laurent_basis
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.laurent_basis.len() == 1 && self.laurent_basis[0].is_one()
    }

    /// Exact membership test by strong reduction to zero.
    pub fn member(&self, f: &LaurentPoly) -> bool {
        strong_reduce(ZtsPoly::lift(f), &self.normal_form).is_zero()
    }

    /// Ideal equality (canonical normal forms compared directly).
    pub fn equals(&self, other: &Self) -> bool {
        self == other
    }

    /// Ideal generated by all pairwise products of generators.
    pub fn product(&self, other: &Self) -> Self {
        let gens = self
            .laurent_basis
            .iter()
            .flat_map(|a| other.laurent_basis.iter().map(move |b| a.mul(b)));
        Self::new(gens).expect("product of nonzero ideals is nonzero")
    }

    /// Ideal generated by the union of the generators.
    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.laurent_basis.iter().chain(other.laurent_basis.iter()).cloned())
            .expect("sum of nonzero ideals is nonzero")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::unit();
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// The nonnegative generator of I /\ Z, read off the reduced strong
    /// basis as its unique constant element (0 when there is none).
    pub fn intersect_z(&self) -> BigUint {
        for b in &self.normal_form {
            let (m, c) = b.leading().expect("basis elements are nonzero");
            if m == Mono::ONE {
                return c.magnitude().clone();
            }
        }
        BigUint::zero()
    }

    /// The nonnegative generator of {f(x) : f in I}, x in {+1, -1}.
    pub fn eval(&self, x: EvalPoint) -> BigUint {
        let mut g = BigInt::zero();
        for gen in &self.user_generators {
            g = g.gcd(&gen.eval_at(x));
            if g.is_one() {
                break;
            }
        }
        g.magnitude().clone()
    }

    /// |Z[t, t^-1]/I|, by the standard-monomial filtration: the product over
    /// monomials mu of [Z : L_mu], L_mu the gcd of leading coefficients of
    /// basis elements whose leading monomial divides mu. In the two-variable
    /// model only mu in {1} u {t^i} u {s^j} can contribute.
    pub fn quotient_size(&self) -> QuotientSize {
        let heads: Vec<(Mono, BigUint)> = self
            .normal_form
            .iter()
            .map(|b| {
                let (m, c) = b.leading().unwrap();
                (m, c.magnitude().clone())
            })
            .collect();

        let constant = match heads.iter().find(|(m, _)| *m == Mono::ONE) {
            Some((_, c)) => c.clone(),
            None => return QuotientSize::Infinite,
        };
        if constant.is_one() {
            return QuotientSize::Finite(BigUint::one());
        }

        let mut total = constant.clone();
        for (pure_t, side) in [(true, "t"), (false, "s")] {
            let _ = side;
            let mut side_heads: Vec<(u32, BigUint)> = heads
                .iter()
                .filter(|(m, _)| if pure_t { m.s == 0 && m.t > 0 } else { m.t == 0 && m.s > 0 })
                .map(|(m, c)| (if pure_t { m.t } else { m.s }, c.clone()))
                .collect();
            side_heads.sort_by_key(|(d, _)| *d);
            let max_deg = side_heads.last().map(|(d, _)| *d).unwrap_or(0);
            let mut g = constant.clone();
            let mut idx = 0;
            for i in 1..=max_deg {
                while idx < side_heads.len() && side_heads[idx].0 <= i {
                    g = g.gcd(&side_heads[idx].1);
                    idx += 1;
                }
                total *= &g;
            }
            // Beyond the last head the factor stabilizes; it must be 1 for
            // the quotient to be finite.
            if !g.is_one() {
                return QuotientSize::Infinite;
            }
        }
        QuotientSize::Finite(total)
    }

    /// Some(g) with I = (g), if I is principal. The single-element canonical
    /// basis is the fast path; otherwise I is principal iff it equals the
    /// ideal of the gcd of its generators, which is checked directly.
    pub fn principal_generator(&self) -> Option<LaurentPoly> {
        if self.laurent_basis.len() == 1 {
            let g = self.laurent_basis[0].clone();
            debug_assert!(Self::new([g.clone()]).unwrap() == *self);
            return Some(g);
        }
        let g = gcd_all(&self.laurent_basis);
        if &Self::new([g.clone()]).unwrap() == self {
            Some(g)
        } else {
            None
        }
    }

    pub fn is_principal(&self) -> bool {
        self.principal_generator().is_some()
    }

    /// The monic generator of the image of I in F_p[t, t^-1], with zero
    /// constant coefficient stripped (t is a unit there). Returns the zero
    /// polynomial when the image is zero and 1 when the image is the unit
    /// ideal.
    pub fn image_mod_p(&self, p: u64) -> Result<LaurentPoly, ZidealError> {
        if p > fp::MAX_PRIME {
            return Err(ZidealError::ResourceBound {
                what: "prime modulus",
                limit: fp::MAX_PRIME,
                got: p,
            });
        }
        if !fp::is_small_prime(p) {
            return Err(ZidealError::CompositeModulus(p));
        }
        let mut g = fp::FpPoly::zero(p);
        for gen in &self.user_generators {
            let r = fp::FpPoly::from_laurent(p, gen);
            g = if g.is_zero() { r } else { fp::FpPoly::gcd(&g, &r) };
        }
        if g.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let g = g.monic().strip_t();
        if g.deg() == 0 {
            return Ok(LaurentPoly::one());
        }
        Ok(g.to_laurent())
    }

    /// Maximality test: I /\ Z = (p) with p prime, and the image mod p
    /// generated by an irreducible polynomial of degree >= 1. These ideals
    /// are exactly (p, f) with f irreducible mod p.
    pub fn is_maximal(&self) -> Result<bool, ZidealError> {
        let n = self.intersect_z();
        if n.is_zero() || n.is_one() {
            return Ok(false);
        }
        let p = match n.to_u64() {
            Some(p) if p <= fp::MAX_PRIME => p,
            _ => {
                return Err(ZidealError::ResourceBound {
                    what: "characteristic of I /\\ Z",
                    limit: fp::MAX_PRIME,
                    got: n.to_u64().unwrap_or(u64::MAX),
                })
            }
        };
        if !fp::is_small_prime(p) {
            return Ok(false);
        }
        let h = self.image_mod_p(p)?;
        if h.is_zero() || h.is_one() {
            return Ok(false);
        }
        let hp = fp::FpPoly::from_laurent(p, &h);
        fp::is_irreducible(&hp).map_err(|b| ZidealError::ResourceBound {
            what: "irreducibility trial division",
            limit: fp::MAX_DEGREE as u64,
            got: b.degree as u64,
        })
    }

    /// Split off the content: returns (f, I0) with f the unit-normalized gcd
    /// of the generators and I = (f) * I0, gcd of I0's generators a unit.
    pub fn content_split(&self) -> (LaurentPoly, LaurentIdeal) {
        let f = gcd_all(&self.user_generators);
        let i0 = Self::new(
            self.user_generators
                .iter()
                .map(|g| g.div_exact(&f).expect("content divides every generator")),
        )
        .expect("primitive part of a nonzero ideal is nonzero");
        (f, i0)
    }

    /// Canonical form of the ideal class [I]: the primitive part I0.
    pub fn class_canonical(&self) -> IdealClass {
        IdealClass { primitive: self.content_split().1 }
    }

    /// I ~ J in the ideal class monoid iff the primitive parts are equal:
    /// writing I = (f) I0, (x)I = (y)J forces (xf) = (yg) by taking contents
    /// and then I0 = J0 by cancellation.
    pub fn class_equivalent(&self, other: &Self) -> bool {
        self.class_canonical() == other.class_canonical()
    }

    /// The ideal generated by g(t^-1) for each generator g.
    pub fn invert_t(&self) -> Self {
        Self::new(self.user_generators.iter().map(LaurentPoly::invert_t))
            .expect("t-inversion preserves nonzeroness")
    }

    /// Greedy factorization of the primitive part into maximal ideals,
    /// verified at every step by multiplying back. Returns the explicit
    /// failure value with the partial factorization when the primitive part
    /// is not a (detectable) product of maximals.
    pub fn factor_maximals(&self) -> Result<MaximalFactorization, ZidealError> {
        let (_, mut current) = self.content_split();
        let mut acc: Vec<LaurentIdeal> = Vec::new();
        for _ in 0..64 {
            if current.is_unit_ideal() {
                return Ok(MaximalFactorization::Factored(collect_multiplicities(acc)));
            }
            let n = current.intersect_z();
            if n.is_zero() {
                return Ok(MaximalFactorization::NotAProduct {
                    partial: collect_multiplicities(acc),
                });
            }
            let primes = small_prime_divisors(&n)?;
            let mut advanced = false;
            'candidates: for p in primes {
                let h = current.image_mod_p(p)?;
                if h.is_zero() || h.is_one() {
                    continue;
                }
                let factors = fp::factor(&fp::FpPoly::from_laurent(p, &h)).map_err(|b| {
                    ZidealError::ResourceBound {
                        what: "factorization trial division",
                        limit: fp::MAX_DEGREE as u64,
                        got: b.degree as u64,
                    }
                })?;
                for (irr, _) in factors {
                    let m = LaurentIdeal::new([
                        LaurentPoly::constant(BigInt::from(p)),
                        irr.to_laurent(),
                    ])?;
                    if !current.laurent_basis.iter().all(|g| m.member(g)) {
                        continue;
                    }
                    if let Some(q) = colon_quotient(&current, &m) {
                        if m.product(&q) == current {
                            acc.push(m);
                            current = q;
                            advanced = true;
                            break 'candidates;
                        }
                    }
                }
            }
            if !advanced {
                return Ok(MaximalFactorization::NotAProduct {
                    partial: collect_multiplicities(acc),
                });
            }
        }
        Ok(MaximalFactorization::NotAProduct { partial: collect_multiplicities(acc) })
    }

    /// H(n) = log_q(|R/m^(n+1)| / |R/m^n|) for a maximal ideal m with
    /// |R/m| = q. Non-integral ratios or logarithms are internal
    /// inconsistencies and abort.
    pub fn hilbert_function(&self, n: u32) -> Result<u64, ZidealError> {
        if !self.is_maximal()? {
            return Err(ZidealError::NotMaximal);
        }
        let q = self
            .quotient_size()
            .finite()
            .cloned()
            .expect("a maximal ideal has a finite residue field");
        let size = |e: u32| -> BigUint {
            match self.pow(e).quotient_size() {
                QuotientSize::Finite(v) => v,
                QuotientSize::Infinite => {
                    panic!("power of a maximal ideal must have finite quotient")
                }
            }
        };
        let a = size(n);
        let b = size(n + 1);
        let (ratio, rem) = b.div_rem(&a);
        assert!(rem.is_zero(), "hilbert function: quotient sizes are not nested multiplicatively");
        let mut k = 0u64;
        let mut acc = BigUint::one();
        while acc < ratio {
            acc *= &q;
            k += 1;
        }
        assert_eq!(acc, ratio, "hilbert function: |m^n / m^(n+1)| is not a power of |R/m|");
        Ok(k)
    }
}

/// Canonical form of an ideal class: the primitive part of any
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealClass {
    primitive: LaurentIdeal,
}

impl IdealClass {
    pub fn representative(&self) -> &LaurentIdeal {
        &self.primitive
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        self.primitive.basis()
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.primitive)
    }
}

/// Outcome of [`LaurentIdeal::factor_maximals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalFactorization {
    Factored(Vec<(LaurentIdeal, u32)>),
    NotAProduct { partial: Vec<(LaurentIdeal, u32)> },
}

fn canonical_projection(basis: &[ZtsPoly]) -> Vec<LaurentPoly> {
    let mut out: Vec<LaurentPoly> = Vec::new();
    for b in basis {
        let proj = b.project();
        if proj.is_zero() {
            continue;
        }
        let n = proj.normalize_unit();
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out.sort();
    out
}

fn gcd_all(polys: &[LaurentPoly]) -> LaurentPoly {
    let mut g = polys[0].clone();
    for p in &polys[1..] {
        if g.is_unit() {
            break;
        }
        g = LaurentPoly::gcd(&g, p);
    }
    g.normalize_unit()
}

fn collect_multiplicities(factors: Vec<LaurentIdeal>) -> Vec<(LaurentIdeal, u32)> {
    let mut out: Vec<(LaurentIdeal, u32)> = Vec::new();
    for f in factors {
        if let Some(entry) = out.iter_mut().find(|(g, _)| *g == f) {
            entry.1 += 1;
        } else {
            out.push((f, 1));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        (a.intersect_z(), a.basis().to_vec()).cmp(&(b.intersect_z(), b.basis().to_vec()))
    });
    out
}

fn small_prime_divisors(n: &BigUint) -> Result<Vec<u64>, ZidealError> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    for p in 2..=fp::MAX_PRIME {
        if !fp::is_small_prime(p) {
            continue;
        }
        let pb = BigUint::from(p);
        if (&rest % &pb).is_zero() {
            out.push(p);
            while (&rest % &pb).is_zero() {
                rest /= &pb;
            }
        }
    }
    if !rest.is_one() {
        return Err(ZidealError::ResourceBound {
            what: "prime factor of I /\\ Z",
            limit: fp::MAX_PRIME,
            got: rest.to_u64().unwrap_or(u64::MAX),
        });
    }
    Ok(out)
}

// Bounded generator search for the colon ideal (i : m): all q supported on a
// degree window with q * g in the shift-lattice of i for every generator g
// of m, found as an integer kernel. The caller verifies the result by
// multiplying back, so an undersized window can only cause a reported
// failure, never a wrong factorization.
fn colon_quotient(i: &LaurentIdeal, m: &LaurentIdeal) -> Option<LaurentIdeal> {
    let span = |p: &LaurentPoly| p.degree_span().unwrap() as usize;
    let dq = i.laurent_basis.iter().map(span).max().unwrap_or(0) + 2;
    let dg = m.laurent_basis.iter().map(span).max().unwrap_or(0);
    let w = dq + dg + 2; // window exponents 0..=w

    // Shift-lattice rows of i inside the window.
    let mut lat: Vec<Vec<BigInt>> = Vec::new();
    for b in &i.laurent_basis {
        let sb = span(b);
        for a in 0..=(w - sb) {
            let shifted = b.shift(a as i64);
            lat.push((0..=w as i64).map(|e| shifted.coeff(e)).collect());
        }
    }

    let k = m.laurent_basis.len();
    let q_cols = dq + 1;
    let cols = q_cols + k * lat.len();
    let mut mat: Vec<Vec<BigInt>> = Vec::new();
    for (gi, g) in m.laurent_basis.iter().enumerate() {
        for e in 0..=w as i64 {
            let mut row = vec![BigInt::zero(); cols];
            for c in 0..q_cols {
                // coefficient of t^e in t^c * g
                row[c] = g.coeff(e - c as i64);
            }
            for (j, lrow) in lat.iter().enumerate() {
                row[q_cols + gi * lat.len() + j] = -lrow[e as usize].clone();
            }
            mat.push(row);
        }
    }

    let kernel = lattice::kernel_basis(mat, cols);
    let qs: Vec<LaurentPoly> = kernel
        .iter()
        .map(|v| LaurentPoly::from_terms(v[..q_cols].iter().enumerate().map(|(c, co)| (c as i64, co.clone()))))
        .filter(|q| !q.is_zero())
        .collect();
    if qs.is_empty() {
        return None;
    }
    LaurentIdeal::new(qs).ok()
}
