//! Surface-knot constructors and the knot-level invariants built on Fox
//! calculus and the ideal machinery: 2-bridge presentations, twist spins,
//! connected sums, ribbon realizations of polynomials and ideals, the
//! determinant, and Fox colorings.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::fox::{
    alexander_ideal, elementary_ideal, ElementaryIdeal, FoxError, Presentation, Word,
};
use crate::laurent::{EvalPoint, LaurentPoly};
use crate::zideal::{LaurentIdeal, ZidealError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("two-bridge parameters need p odd, p >= 3, 0 < q < p, gcd(p,q) = 1; got ({p}, {q})")]
    BadTwoBridge { p: i64, q: i64 },
    #[error("twist spinning needs a classical knot")]
    NotClassical,
    #[error("connected sum needs Wirtinger presentations (all weights 1)")]
    NotWirtinger,
    #[error("connected sum of a classical knot with a surface knot is not defined here")]
    MixedConnectSum,
    #[error("kinoshita realization needs f(1) = +-1; got f(1) = {0}")]
    KinoshitaEval(BigInt),
    #[error("ideal is not realizable: I at t=1 generates ({0}), not (1)")]
    RealizeEval(BigUint),
    #[error("realization would need {0} relator syllllable groups; bound is {1}")]
    RealizeSize(u64, u64),
    #[error("colorings need an odd prime p <= 97; got {0}")]
    BadColoringPrime(u64),
    #[error("coloring count overflows")]
    ColoringOverflow,
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Ideal(#[from] ZidealError),
}

/// Classical knots (in S^3) are tagged as such; surface knots carry their
/// genus, with genus 0 the 2-knots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    Classical,
    Surface(u32),
}

impl std::fmt::Display for Genus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Genus::Classical => write!(f, "classical"),
            Genus::Surface(g) => write!(f, "{}", g),
        }
    }
}

/// How a knot was built; retained for provenance in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Unknot,
    UserPresentation,
    TwoBridge(i64, i64),
    TwistSpin { n: i64, base: Box<Construction> },
    ConnectSum(Box<Construction>, Box<Construction>),
    Kinoshita(LaurentPoly),
    RealizeIdeal(Vec<LaurentPoly>),
}

/// A knot given by a Wirtinger presentation of its group, together with a
/// genus tag and construction provenance.
#[derive(Clone, Debug)]
pub struct SurfaceKnot {
    pub name: String,
    pub genus: Genus,
    presentation: Presentation,
    pub construction: Construction,
}

impl SurfaceKnot {
    /// Wrap a user presentation. Knot-level invariants require a Wirtinger
    /// presentation, i.e. all weights 1.
    pub fn from_presentation(
        name: impl Into<String>,
        genus: Genus,
        presentation: Presentation,
    ) -> Result<Self, KnotError> {
        if !presentation.all_weights_one() {
            return Err(KnotError::NotWirtinger);
        }
        Ok(SurfaceKnot {
            name: name.into(),
            genus,
            presentation,
            construction: Construction::UserPresentation,
        })
    }

    /// The unknotted 2-sphere, <x | >.
    pub fn unknot() -> Self {
        let presentation = Presentation::wirtinger(vec!["x".into()], vec![]).unwrap();
        SurfaceKnot {
            name: "unknot".into(),
            genus: Genus::Surface(0),
            presentation,
            construction: Construction::Unknot,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn is_classical(&self) -> bool {
        self.genus == Genus::Classical
    }

    pub fn alexander_ideal(&self) -> Result<LaurentIdeal, KnotError> {
        Ok(alexander_ideal(&self.presentation)?)
    }

    /// The ideal of the reversed knot: t -> t^-1.
    pub fn reverse_ideal(&self) -> Result<LaurentIdeal, KnotError> {
        Ok(self.alexander_ideal()?.invert_t())
    }

    /// The determinant: the nonnegative generator of Delta(K) at t = -1.
    /// Always odd for well-formed knots; an even value is a hard fault.
    pub fn determinant(&self) -> Result<BigUint, KnotError> {
        let d = self.alexander_ideal()?.eval(EvalPoint::MinusOne);
        assert!(d.is_odd(), "determinant of {} came out even ({}): broken presentation", self.name, d);
        Ok(d)
    }
}

/// The 2-bridge knot b(p, q) via its Schubert presentation
/// <x, y | x w y^-1 w^-1>, w = y^e1 x^e2 ... x^e(p-1), e_i = (-1)^floor(iq/p).
pub fn two_bridge(p: i64, q: i64) -> Result<SurfaceKnot, KnotError> {
    if p < 3 || p % 2 == 0 || q <= 0 || q >= p || p.gcd(&q) != 1 {
        return Err(KnotError::BadTwoBridge { p, q });
    }
    let mut syllables = Vec::new();
    for i in 1..p {
        let eps: i64 = if num_integer::Integer::div_floor(&(i * q), &p) % 2 == 0 { 1 } else { -1 };
        let gen = if i % 2 == 1 { 1 } else { 0 }; // odd positions are y
        syllables.push((gen, eps));
    }
    let w = Word::new(syllables);
    let relator = Word::conjugation(0, &w, 1);
    let presentation = Presentation::wirtinger(vec!["x".into(), "y".into()], vec![relator])?;
    Ok(SurfaceKnot {
        name: format!("b({},{})", p, q),
        genus: Genus::Classical,
        presentation,
        construction: Construction::TwoBridge(p, q),
    })
}

/// Relator shape used when centralizing x_0^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistRelatorForm {
    /// [x_0^n, x_i]
    Commutator,
    /// x_0^n x_i^-n
    Power,
}

/// The n-twist spin of a classical knot: the presentation gains a relator
/// centralizing x_0^n against every other generator. n = 0 is the spun
/// knot (the presentation is unchanged); |n| = 1 gives the unknotted
/// sphere's ideal (1).
pub fn twist_spin(k: &SurfaceKnot, n: i64) -> Result<SurfaceKnot, KnotError> {
    twist_spin_with_form(k, n, TwistRelatorForm::Commutator)
}

pub fn twist_spin_with_form(
    k: &SurfaceKnot,
    n: i64,
    form: TwistRelatorForm,
) -> Result<SurfaceKnot, KnotError> {
    if !k.is_classical() {
        return Err(KnotError::NotClassical);
    }
    let gens = k.presentation.gens().to_vec();
    let mut relators = k.presentation.relators().to_vec();
    let name = if n == 0 {
        format!("spun({})", k.name)
    } else {
        format!("tau^{}({})", n, k.name)
    };
    if n != 0 {
        let x0n = Word::generator_pow(0, n);
        for i in 1..gens.len() {
            let r = match form {
                TwistRelatorForm::Commutator => Word::commutator(&x0n, &Word::generator(i)),
                TwistRelatorForm::Power => x0n.concat(&Word::generator_pow(i, -n)),
            };
            if !r.is_empty() {
                relators.push(r);
            }
        }
    }
    let presentation = Presentation::wirtinger(gens, relators)?;
    Ok(SurfaceKnot {
        name,
        genus: Genus::Surface(0),
        presentation,
        construction: Construction::TwistSpin { n, base: Box::new(k.construction.clone()) },
    })
}

/// Connected sum: merge the presentations and identify the first meridians
/// with the joining relator x_1 y_1^-1. Genus adds; classical knots sum to
/// classical knots.
pub fn connect_sum(a: &SurfaceKnot, b: &SurfaceKnot) -> Result<SurfaceKnot, KnotError> {
    if !a.presentation.all_weights_one() || !b.presentation.all_weights_one() {
        return Err(KnotError::NotWirtinger);
    }
    let genus = match (a.genus, b.genus) {
        (Genus::Classical, Genus::Classical) => Genus::Classical,
        (Genus::Surface(ga), Genus::Surface(gb)) => Genus::Surface(ga + gb),
        _ => return Err(KnotError::MixedConnectSum),
    };
    let mut gens: Vec<String> = a.presentation.gens().to_vec();
    let offset = gens.len();
    for g in b.presentation.gens() {
        let mut candidate = g.clone();
        let mut suffix = 2;
        while gens.contains(&candidate) {
            candidate = format!("{}_{}", g, suffix);
            suffix += 1;
        }
        gens.push(candidate);
    }
    let mut relators = vec![Word::new([(0usize, 1i64), (offset, -1)])];
    relators.extend(a.presentation.relators().iter().cloned());
    for r in b.presentation.relators() {
        relators.push(Word::new(r.syllables().iter().map(|&(g, e)| (g + offset, e))));
    }
    let presentation = Presentation::wirtinger(gens, relators)?;
    Ok(SurfaceKnot {
        name: format!("{} # {}", a.name, b.name),
        genus,
        presentation,
        construction: Construction::ConnectSum(
            Box::new(a.construction.clone()),
            Box::new(b.construction.clone()),
        ),
    })
}

const REALIZE_TERM_BOUND: u64 = 10_000;

// The Kinoshita relator of f: x w y^-1 w^-1 with w chosen so the abelianized
// x-derivative is exactly f. Requires f(1) = 1 after unit normalization.
fn kinoshita_relator(f: &LaurentPoly) -> Result<(Word, LaurentPoly), KnotError> {
    assert!(!f.is_zero());
    let mut f = f.shift(-f.min_exp().unwrap());
    let v = f.eval_at(EvalPoint::One);
    if v == BigInt::from(-1) {
        f = f.neg();
    } else if !v.is_one() {
        return Err(KnotError::KinoshitaEval(v));
    }
    let g = f
        .sub(&LaurentPoly::one())
        .div_exact(&LaurentPoly::from_terms([(1i64, 1i64), (0, -1)]))
        .expect("t - 1 divides f - 1 when f(1) = 1");

    // Expand g into +-1 steps: a term c t^k becomes |c| copies of
    // t^k (t - 1) for c > 0 and of t^(k+1) (t^-1 - 1) for c < 0.
    let mut m_pairs: Vec<(i64, i64)> = Vec::new();
    let mut budget = 0u64;
    for (k, c) in g.terms() {
        let copies = c.abs().to_u64().ok_or(KnotError::RealizeSize(u64::MAX, REALIZE_TERM_BOUND))?;
        budget += copies;
        if budget > REALIZE_TERM_BOUND {
            return Err(KnotError::RealizeSize(budget, REALIZE_TERM_BOUND));
        }
        for _ in 0..copies {
            if c.is_positive() {
                m_pairs.push((k, 1));
            } else {
                m_pairs.push((k + 1, -1));
            }
        }
    }

    // n_1 = m_1, n_2i = m_2i, n_(2i+1) = m_(2i+1) - (m_(2i-1) + m_2i):
    // the prefix exponent sums then realize the m's.
    let mut syllables: Vec<(usize, i64)> = Vec::new();
    for (i, &(m_odd, m_even)) in m_pairs.iter().enumerate() {
        let n_odd = if i == 0 {
            m_odd
        } else {
            let (prev_odd, prev_even) = m_pairs[i - 1];
            m_odd - (prev_odd + prev_even)
        };
        syllables.push((1, n_odd));
        syllables.push((0, m_even));
    }
    let w = Word::new(syllables);
    Ok((Word::conjugation(0, &w, 1), f))
}

/// A ribbon 2-knot of meridional rank 2 with Delta(K) = (f); needs
/// f(1) = +-1. The construction is verified by recomputing the ideal.
pub fn kinoshita_realize(f: &LaurentPoly) -> Result<SurfaceKnot, KnotError> {
    if f.is_zero() {
        return Err(KnotError::KinoshitaEval(BigInt::zero()));
    }
    let (relator, f_norm) = kinoshita_relator(f)?;
    let presentation = Presentation::wirtinger(vec!["x".into(), "y".into()], vec![relator])?;
    let knot = SurfaceKnot {
        name: format!("kinoshita({})", f_norm),
        genus: Genus::Surface(0),
        presentation,
        construction: Construction::Kinoshita(f_norm.clone()),
    };
    let ideal = knot.alexander_ideal()?;
    assert!(
        ideal == LaurentIdeal::principal(f_norm)?,
        "kinoshita realization failed to reproduce its polynomial"
    );
    Ok(knot)
}

/// A ribbon surface knot of genus m with Delta(K) = I, for I generated by
/// m elements with I at t=1 equal to (1). The generators are massaged so
/// each evaluates to 1 at t = 1, one Kinoshita relator is emitted per
/// generator, and the result is verified by recomputing the ideal.
pub fn realize_ideal(ideal: &LaurentIdeal) -> Result<SurfaceKnot, KnotError> {
    let e = ideal.eval(EvalPoint::One);
    if !e.is_one() {
        return Err(KnotError::RealizeEval(e));
    }
    let gens = ideal.generators();
    let values: Vec<BigInt> = gens.iter().map(|g| g.eval_at(EvalPoint::One)).collect();

    // Integer extended gcd across the values: sum a_i v_i = +-1.
    let mut d = values[0].clone();
    let mut coeffs = vec![BigInt::one()];
    for v in &values[1..] {
        let ext = d.extended_gcd(v);
        for c in coeffs.iter_mut() {
            *c *= &ext.x;
        }
        coeffs.push(ext.y);
        d = ext.gcd;
    }
    if d == BigInt::from(-1) {
        for c in coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        d = BigInt::one();
    }
    assert!(d.is_one(), "gcd of generator values at t=1 must be 1 when I|_(t=1) = 1");

    let mut f0 = LaurentPoly::zero();
    for (a, g) in coeffs.iter().zip(gens) {
        f0 = f0.add(&g.scale(a));
    }
    debug_assert!(f0.eval_at(EvalPoint::One).is_one());

    let mut fs = vec![f0.clone()];
    for (g, v) in gens.iter().zip(&values) {
        let correction = f0.scale(&(v - BigInt::one()));
        fs.push(g.sub(&correction));
    }

    let mut relators = Vec::new();
    for f in &fs {
        let (r, _) = kinoshita_relator(f)?;
        relators.push(r);
    }
    let presentation = Presentation::wirtinger(vec!["x".into(), "y".into()], relators)?;
    let knot = SurfaceKnot {
        name: format!("realize({})", ideal),
        genus: Genus::Surface(gens.len() as u32),
        presentation,
        construction: Construction::RealizeIdeal(gens.to_vec()),
    };
    let recomputed = knot.alexander_ideal()?;
    assert!(recomputed == *ideal, "ideal realization failed to reproduce its ideal");
    Ok(knot)
}

/// The twist-spin ideal assembled from the elementary ideals of a classical
/// knot: the sum over j of ((t^n - 1)^(j-1)) eps_j(K); zero summands are
/// skipped.
pub fn twist_spin_ideal_formula(k: &SurfaceKnot, n: i64) -> Result<LaurentIdeal, KnotError> {
    if !k.is_classical() {
        return Err(KnotError::NotClassical);
    }
    let gen_count = k.presentation.gens().len();
    let tn_minus_1 = LaurentPoly::from_terms([(n, 1i64), (0, -1)]);
    let mut acc: Option<LaurentIdeal> = None;
    for j in 1..=gen_count {
        let factor = tn_minus_1.pow((j - 1) as u32);
        if factor.is_zero() {
            continue;
        }
        let eps = match elementary_ideal(&k.presentation, j)? {
            ElementaryIdeal::Zero => continue,
            ElementaryIdeal::NonZero(i) => i,
        };
        let summand = LaurentIdeal::principal(factor)?.product(&eps);
        acc = Some(match acc {
            None => summand,
            Some(a) => a.sum(&summand),
        });
    }
    Ok(acc.expect("epsilon_1 of a classical knot is nonzero"))
}

/// Fox p-coloring count of a Wirtinger presentation: p^k where k is the
/// nullity over F_p of the full Alexander matrix evaluated at t = -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColoringCount {
    pub count: u128,
    pub nullity: u32,
}

impl ColoringCount {
    /// A coloring is nontrivial iff not all meridians share one color, i.e.
    /// the solution space is bigger than the p constant colorings.
    pub fn has_nontrivial(&self) -> bool {
        self.nullity >= 2
    }
}

pub fn colorings_count(k: &SurfaceKnot, p: u64) -> Result<ColoringCount, KnotError> {
    if p < 3 || p > 97 || !is_prime_u64(p) {
        return Err(KnotError::BadColoringPrime(p));
    }
    let matrix = k.presentation.alexander_matrix();
    let (rows, cols) = (matrix.rows(), matrix.cols());
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    matrix.entry(i, j).eval_at(EvalPoint::MinusOne).mod_floor(&pb).to_u64().unwrap()
                })
                .collect()
        })
        .collect();

    // Row reduce over F_p.
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| m[r][col] != 0);
        let Some(pr) = pivot else { continue };
        m.swap(rank, pr);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = (m[r][col] as u128 * inv as u128 % p as u128) as u64;
                for c in 0..cols {
                    let sub = (factor as u128 * m[rank][c] as u128 % p as u128) as u64;
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let nullity = (cols - rank) as u32;
    let count = (p as u128).checked_pow(nullity).ok_or(KnotError::ColoringOverflow)?;
    Ok(ColoringCount { count, nullity })
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, c)))
    }

    fn ideal(gens: &[&[(i64, i64)]]) -> LaurentIdeal {
        LaurentIdeal::new(gens.iter().map(|g| poly(g))).unwrap()
    }

    #[test]
    fn trefoil_via_two_bridge() {
        let k = two_bridge(3, 1).unwrap();
        let r = &k.presentation().relators()[0];
        // x y x y^-1 x^-1 y^-1
        assert_eq!(r.syllables(), &[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        assert_eq!(k.alexander_ideal().unwrap(), ideal(&[&[(2, 1), (1, -1), (0, 1)]]));
    }

    #[test]
    fn figure8_alexander_polynomial() {
        // Frozen from the hand Fox recursion: up to a unit, t^2 - 3t + 1.
        let k = two_bridge(5, 3).unwrap();
        assert_eq!(k.alexander_ideal().unwrap(), ideal(&[&[(2, 1), (1, -3), (0, 1)]]));
        assert_eq!(k.determinant().unwrap(), BigUint::from(5u32));
    }

    #[test]
    fn stevedore_alexander_polynomial() {
        // b(9,7): up to a unit, 2t^2 - 5t + 2; determinant 9.
        let k = two_bridge(9, 7).unwrap();
        assert_eq!(k.alexander_ideal().unwrap(), ideal(&[&[(2, 2), (1, -5), (0, 2)]]));
        assert_eq!(k.determinant().unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn bad_two_bridge_rejected() {
        assert!(two_bridge(4, 1).is_err());
        assert!(two_bridge(9, 3).is_err());
        assert!(two_bridge(3, 0).is_err());
    }

    #[test]
    fn twist_spin_of_trefoil() {
        let trefoil = two_bridge(3, 1).unwrap();
        let tau2 = twist_spin(&trefoil, 2).unwrap();
        assert_eq!(tau2.alexander_ideal().unwrap(), ideal(&[&[(0, 3)], &[(1, 1), (0, 1)]]));
        let tau5 = twist_spin(&trefoil, 5).unwrap();
        assert!(tau5.alexander_ideal().unwrap().is_unit_ideal());
        let tau1 = twist_spin(&trefoil, 1).unwrap();
        assert!(tau1.alexander_ideal().unwrap().is_unit_ideal());
    }

    #[test]
    fn commutator_and_power_forms_agree() {
        let base = two_bridge(5, 3).unwrap();
        for n in [-3i64, 2, 4] {
            let a = twist_spin_with_form(&base, n, TwistRelatorForm::Commutator).unwrap();
            let b = twist_spin_with_form(&base, n, TwistRelatorForm::Power).unwrap();
            assert_eq!(a.alexander_ideal().unwrap(), b.alexander_ideal().unwrap());
        }
    }

    #[test]
    fn connect_sum_multiplies_ideals() {
        let trefoil = two_bridge(3, 1).unwrap();
        let tau2 = twist_spin(&trefoil, 2).unwrap();
        let spun = twist_spin(&trefoil, 0).unwrap();
        let sum = connect_sum(&tau2, &spun).unwrap();
        let expected = tau2
            .alexander_ideal()
            .unwrap()
            .product(&spun.alexander_ideal().unwrap());
        assert_eq!(sum.alexander_ideal().unwrap(), expected);
        assert_eq!(sum.genus, Genus::Surface(0));
    }

    #[test]
    fn connect_sum_with_unknot_is_identity() {
        let trefoil = two_bridge(3, 1).unwrap();
        let tau2 = twist_spin(&trefoil, 2).unwrap();
        let sum = connect_sum(&tau2, &SurfaceKnot::unknot()).unwrap();
        assert_eq!(sum.alexander_ideal().unwrap(), tau2.alexander_ideal().unwrap());
    }

    #[test]
    fn kinoshita_examples() {
        // f = 1: empty w, relator x y^-1.
        let k = kinoshita_realize(&LaurentPoly::one()).unwrap();
        assert_eq!(k.presentation().relators()[0].syllables(), &[(0, 1), (1, -1)]);

        // f = t^2 - t + 1: w = y x, the trefoil relator.
        let k = kinoshita_realize(&poly(&[(2, 1), (1, -1), (0, 1)])).unwrap();
        assert_eq!(
            k.presentation().relators()[0].syllables(),
            &[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]
        );

        // f = 2t - 1 round trip.
        let f = poly(&[(1, 2), (0, -1)]);
        let k = kinoshita_realize(&f).unwrap();
        assert_eq!(k.alexander_ideal().unwrap(), LaurentIdeal::principal(f).unwrap());
    }

    #[test]
    fn kinoshita_rejects_bad_value() {
        assert!(matches!(
            kinoshita_realize(&poly(&[(1, 1), (0, 1)])),
            Err(KnotError::KinoshitaEval(_))
        ));
    }

    #[test]
    fn realize_ideal_examples() {
        let i = ideal(&[&[(0, 3)], &[(1, 1), (0, 1)]]);
        let k = realize_ideal(&i).unwrap();
        assert_eq!(k.genus, Genus::Surface(2));
        assert_eq!(k.alexander_ideal().unwrap(), i);

        // A unit ideal in disguise: (2, t) = (1).
        let u = ideal(&[&[(0, 2)], &[(1, 1)]]);
        let k = realize_ideal(&u).unwrap();
        assert!(k.alexander_ideal().unwrap().is_unit_ideal());

        // Not realizable: (3) evaluates to 3 at t = 1.
        let bad = ideal(&[&[(0, 3)]]);
        assert!(matches!(realize_ideal(&bad), Err(KnotError::RealizeEval(_))));
    }

    #[test]
    fn twist_spin_formula_matches_direct() {
        let base = two_bridge(3, 1).unwrap();
        for n in [-2i64, 0, 2, 3, 5] {
            let direct = twist_spin(&base, n).unwrap().alexander_ideal().unwrap();
            let formula = twist_spin_ideal_formula(&base, n).unwrap();
            assert_eq!(direct, formula, "n = {n}");
        }
    }

    #[test]
    fn determinant_laws_small() {
        let trefoil = two_bridge(3, 1).unwrap();
        assert_eq!(trefoil.determinant().unwrap(), BigUint::from(3u32));
        let tau2 = twist_spin(&trefoil, 2).unwrap();
        assert_eq!(tau2.determinant().unwrap(), BigUint::from(3u32));
        let tau3 = twist_spin(&trefoil, 3).unwrap();
        assert_eq!(tau3.determinant().unwrap(), BigUint::one());
    }

    #[test]
    fn trefoil_colorings() {
        let trefoil = two_bridge(3, 1).unwrap();
        let c = colorings_count(&trefoil, 3).unwrap();
        assert_eq!(c.count, 9);
        assert!(c.has_nontrivial());
        let c5 = colorings_count(&trefoil, 5).unwrap();
        assert_eq!(c5.count, 5);
        assert!(!c5.has_nontrivial());
    }

    #[test]
    fn reverse_ideal_of_symmetric_knot() {
        let trefoil = two_bridge(3, 1).unwrap();
        let i = trefoil.alexander_ideal().unwrap();
        assert_eq!(trefoil.reverse_ideal().unwrap(), i);
    }
}
