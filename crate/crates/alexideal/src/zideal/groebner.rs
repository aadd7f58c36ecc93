//! Strong Groebner bases over the integers for the two-variable model of
//! Z[t, t^-1].
//!
//! The Laurent ring is handled as Z[t,s]/(ts - 1). An ideal of the Laurent
//! ring is lifted to Z[t,s] together with the relator ts - 1, and completed
//! to a reduced strong Groebner basis under graded-lexicographic order with
//! t > s. Strong means that every element of the ideal top-reduces to zero,
//! which makes membership, equality and I /\ Z read off the basis directly.
//! Over the Euclidean coefficient ring Z this requires closing the basis
//! under G-polynomials (gcd combinations of leading coefficients) as well as
//! the usual S-polynomials.
//!
//! With canonical Euclidean remainders (0 <= r < |lc|) and positive leading
//! coefficients, the reduced strong basis is canonical: equal ideals produce
//! identical bases. The callers never rely on this alone for correctness of
//! principality decisions; see `LaurentIdeal::is_principal`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Monomial t^a s^b of Z[t,s].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub(crate) struct Mono {
    pub t: u32,
    pub s: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { t: 0, s: 0 };

    pub fn deg(self) -> u32 {
        self.t + self.s
    }

    pub fn divides(self, other: Mono) -> bool {
        self.t <= other.t && self.s <= other.s
    }

    /// self / other; caller guarantees divisibility.
    pub fn quot(self, other: Mono) -> Mono {
        Mono { t: self.t - other.t, s: self.s - other.s }
    }

    pub fn mul(self, other: Mono) -> Mono {
        Mono { t: self.t + other.t, s: self.s + other.s }
    }

    pub fn lcm(a: Mono, b: Mono) -> Mono {
        Mono { t: a.t.max(b.t), s: a.s.max(b.s) }
    }

    /// Image in the Laurent ring: t^a s^b -> t^(a-b).
    pub fn laurent_exp(self) -> i64 {
        self.t as i64 - self.s as i64
    }
}

// Graded-lexicographic with t > s: compare total degree, then the t exponent.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.deg(), self.t).cmp(&(other.deg(), other.t))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial of Z[t,s], sparse, ordered by the global term order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct ZtsPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl ZtsPoly {
    pub fn zero() -> Self {
        ZtsPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(m: Mono, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ZtsPoly { terms }
    }

    /// The relator ts - 1.
    pub fn relator() -> Self {
        let mut p = Self::term(Mono { t: 1, s: 1 }, BigInt::one());
        p.add_term(Mono::ONE, -BigInt::one());
        p
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// self -= c * m * other.
    pub fn sub_mul_term(&mut self, c: &BigInt, m: Mono, other: &Self) {
        for (&mo, co) in &other.terms {
            self.add_term(mo.mul(m), -(c * co));
        }
    }

    pub fn neg_in_place(&mut self) {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
    }

    pub fn leading(&self) -> Option<(Mono, &BigInt)> {
        self.terms.iter().next_back().map(|(&m, c)| (m, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mono, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// Lift a Laurent polynomial: t^k -> t^k for k >= 0, t^k -> s^-k for k < 0.
    pub fn lift(p: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            let m = if k >= 0 {
                Mono { t: k as u32, s: 0 }
            } else {
                Mono { t: 0, s: (-k) as u32 }
            };
            out.add_term(m, c.clone());
        }
        out
    }

    /// Project back to the Laurent ring along s -> t^-1.
    pub fn project(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.iter().map(|(m, c)| (m.laurent_exp(), c.clone())))
    }

    /// Make the leading coefficient positive.
    pub fn sign_normalize(mut self) -> Self {
        if let Some((_, c)) = self.leading() {
            if c.is_negative() {
                self.neg_in_place();
            }
        }
        self
    }

    /// Key for the canonical ordering of basis elements.
    fn sort_key(&self) -> Vec<(Mono, BigInt)> {
        self.terms.iter().rev().map(|(&m, c)| (m, c.clone())).collect()
    }
}

/// Fully strong-reduce `f` by `basis`, leaving every coefficient of every
/// remaining term in the canonical residue range [0, lc) of each applicable
/// reducer. Deterministic: among applicable reducers the one with the
/// smallest leading coefficient (then lowest index) is used.
pub(crate) fn strong_reduce(mut f: ZtsPoly, basis: &[ZtsPoly]) -> ZtsPoly {
    'outer: loop {
        // Scan terms from the leading monomial downward for a reducible one.
        let monos: Vec<Mono> = f.terms.keys().rev().copied().collect();
        for m in monos {
            let c = match f.terms.get(&m) {
                Some(c) => c.clone(),
                None => continue,
            };
            let mut best: Option<(&ZtsPoly, Mono, &BigInt)> = None;
            for g in basis {
                let (lm, lc) = g.leading().expect("basis elements are nonzero");
                if lm.divides(m) {
                    let better = match best {
                        None => true,
                        Some((_, _, blc)) => lc < blc,
                    };
                    if better {
                        best = Some((g, lm, lc));
                    }
                }
            }
            if let Some((g, lm, lc)) = best {
                let r = c.mod_floor(lc);
                if r != c {
                    let q = (&c - &r).div_exact_ref(lc);
                    f.sub_mul_term(&q, m.quot(lm), g);
                    continue 'outer;
                }
            }
        }
        return f;
    }
}

trait DivExactRef {
    fn div_exact_ref(&self, d: &BigInt) -> BigInt;
}

impl DivExactRef for BigInt {
    fn div_exact_ref(&self, d: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }
}

fn s_polynomial(f: &ZtsPoly, g: &ZtsPoly) -> ZtsPoly {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    let m = Mono::lcm(mf, mg);
    let c = cf.lcm(cg);
    let mut out = ZtsPoly::zero();
    let qf = c.div_exact_ref(cf);
    let qg = c.div_exact_ref(cg);
    out.sub_mul_term(&-qf, m.quot(mf), f);
    out.sub_mul_term(&qg, m.quot(mg), g);
    out
}

// G-polynomial: a combination whose leading term is gcd(lc f, lc g) * lcm of
// the leading monomials. Only useful when neither leading coefficient
// divides the other.
fn g_polynomial(f: &ZtsPoly, g: &ZtsPoly) -> Option<ZtsPoly> {
    let (mf, cf) = f.leading().unwrap();
    let (mg, cg) = g.leading().unwrap();
    if (cg % cf).is_zero() || (cf % cg).is_zero() {
        return None;
    }
    let m = Mono::lcm(mf, mg);
    let ext = cf.extended_gcd(cg);
    let mut out = ZtsPoly::zero();
    out.sub_mul_term(&-ext.x, m.quot(mf), f);
    out.sub_mul_term(&-ext.y, m.quot(mg), g);
    debug_assert_eq!(out.leading().map(|(lm, lc)| (lm, lc.clone())), Some((m, ext.gcd)));
    Some(out)
}

/// Complete `gens` (plus whatever is already there) to a strong Groebner
/// basis by S- and G-polynomial saturation, then reduce canonically.
pub(crate) fn reduced_strong_basis(gens: Vec<ZtsPoly>) -> Vec<ZtsPoly> {
    let mut basis: Vec<ZtsPoly> = Vec::new();
    for g in gens {
        let r = strong_reduce(g, &basis);
        if !r.is_zero() {
            basis.push(r.sign_normalize());
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    while !pairs.is_empty() {
        // Normal selection: smallest lcm of leading monomials first.
        let lcm_of = |&(i, j): &(usize, usize)| {
            Mono::lcm(basis[i].leading().unwrap().0, basis[j].leading().unwrap().0)
        };
        let mut best = 0;
        for idx in 1..pairs.len() {
            if lcm_of(&pairs[idx]) < lcm_of(&pairs[best]) {
                best = idx;
            }
        }
        let (i, j) = pairs.swap_remove(best);

        let mut candidates = vec![s_polynomial(&basis[i], &basis[j])];
        if let Some(gp) = g_polynomial(&basis[i], &basis[j]) {
            candidates.push(gp);
        }
        for cand in candidates {
            let r = strong_reduce(cand, &basis);
            if !r.is_zero() {
                let k = basis.len();
                basis.push(r.sign_normalize());
                for l in 0..k {
                    pairs.push((l, k));
                }
            }
        }
    }

    reduce_basis(basis)
}

// Minimalize (drop elements whose leading term is strongly divisible by
// another's) and tail-reduce everything to canonical residues.
fn reduce_basis(mut basis: Vec<ZtsPoly>) -> Vec<ZtsPoly> {
    basis.sort_by(|a, b| {
        let (ma, ca) = a.leading().unwrap();
        let (mb, cb) = b.leading().unwrap();
        (ma, ca).cmp(&(mb, cb)).then_with(|| a.sort_key().cmp(&b.sort_key()))
    });

    let mut kept: Vec<ZtsPoly> = Vec::new();
    for g in basis {
        let (mg, cg) = {
            let (m, c) = g.leading().unwrap();
            (m, c.clone())
        };
        let dominated = kept.iter().any(|h| {
            let (mh, ch) = h.leading().unwrap();
            mh.divides(mg) && (&cg % ch).is_zero()
        });
        if !dominated {
            kept.push(g);
        }
    }

    // Tail reduction is stable on the heads: minimality guarantees the
    // leading term of each kept element is already canonical w.r.t. the rest.
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<ZtsPoly> =
                kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            let head = kept[i].leading().map(|(m, c)| (m, c.clone()));
            let reduced = strong_reduce(kept[i].clone(), &others).sign_normalize();
            debug_assert_eq!(reduced.leading().map(|(m, c)| (m, c.clone())), head);
            if reduced != kept[i] {
                kept[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    kept.sort_by(|a, b| {
        let (ma, ca) = a.leading().unwrap();
        let (mb, cb) = b.leading().unwrap();
        (ma, ca).cmp(&(mb, cb)).then_with(|| a.sort_key().cmp(&b.sort_key()))
    });
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lift_all(ps: &[LaurentPoly]) -> Vec<ZtsPoly> {
        let mut v: Vec<ZtsPoly> = ps.iter().map(ZtsPoly::lift).collect();
        v.push(ZtsPoly::relator());
        v
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, c)))
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        // t is a unit of the Laurent ring, so (t) completes to (1).
        let basis = reduced_strong_basis(lift_all(&[poly(&[(1, 1)])]));
        assert_eq!(basis.len(), 1);
        let (m, c) = basis[0].leading().unwrap();
        assert_eq!(m, Mono::ONE);
        assert!(c.is_one());
    }

    #[test]
    fn trefoil_ideal_basis_projects_to_single_generator() {
        let f = poly(&[(2, 1), (1, -1), (0, 1)]);
        let basis = reduced_strong_basis(lift_all(&[f.clone()]));
        // Every basis element projects to a unit multiple of t^2 - t + 1.
        for b in &basis {
            let proj = b.project();
            if proj.is_zero() {
                continue;
            }
            assert_eq!(proj.normalize_unit(), f.normalize_unit());
        }
    }

    #[test]
    fn twist_spun_trefoil_equals_three_t_plus_one() {
        let gens = [poly(&[(2, 1), (1, -1), (0, 1)]), poly(&[(2, 1), (0, -1)])];
        let target = [poly(&[(0, 3)]), poly(&[(1, 1), (0, 1)])];
        let a = reduced_strong_basis(lift_all(&gens));
        let b = reduced_strong_basis(lift_all(&target));
        assert_eq!(a, b);
    }

    #[test]
    fn membership_by_reduction() {
        let gens = [poly(&[(2, 1), (1, -1), (0, 1)]), poly(&[(2, 1), (0, -1)])];
        let basis = reduced_strong_basis(lift_all(&gens));
        let three = ZtsPoly::lift(&poly(&[(0, 3)]));
        assert!(strong_reduce(three, &basis).is_zero());
        let one = ZtsPoly::lift(&poly(&[(0, 1)]));
        assert!(!strong_reduce(one, &basis).is_zero());
    }

    #[test]
    fn canonical_under_generator_shuffle_and_units() {
        let gens1 = [poly(&[(0, 3)]), poly(&[(1, 1), (0, 1)])];
        // Same ideal: shuffled, duplicated, multiplied by units -t^2 and t^-1.
        let gens2 = [
            poly(&[(3, -1), (2, -1)]),
            poly(&[(-1, 3)]),
            poly(&[(0, 3)]),
            poly(&[(1, 1), (0, 1)]),
        ];
        assert_eq!(reduced_strong_basis(lift_all(&gens1)), reduced_strong_basis(lift_all(&gens2)));
    }
}
