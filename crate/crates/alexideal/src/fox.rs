//! Free-group words, group presentations with abelianization weights, and
//! Fox free differential calculus composed with the abelianizer.
//!
//! The Fox derivative is the unique derivation on the free group ring with
//! d(x_i)/d(x_j) = delta_ij and the Leibniz rule D(uv) = Du + u Dv. We only
//! ever need its image in Z[t, t^-1] under the abelianization sending x_i to
//! t^(w_i), so the composition is computed directly by a left-to-right
//! recursion without materializing noncommutative group-ring elements.
//!
//! The Alexander matrix of a presentation has entries a_ij = (d r_i / d x_j)
//! abelianized; its k-th elementary ideal is generated by the determinants
//! of the square (n-k)-minors, with the convention (1) when n-k <= 0. When
//! all weights are 1 every row sums to zero, so one column may be deleted
//! before taking minors.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::zideal::{LaurentIdeal, ZidealError};

/// Largest matrix dimension accepted for minor enumeration.
pub const MAX_MATRIX_DIM: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoxError {
    #[error("presentation has {gens} generators but {weights} weights")]
    WeightCount { gens: usize, weights: usize },
    #[error("relator {index} mentions generator {gen}, which is not declared")]
    UnknownGenerator { index: usize, gen: usize },
    #[error("relator {index} does not abelianize to zero (weighted exponent sum {sum})")]
    UnbalancedRelator { index: usize, sum: i64 },
    #[error("alexander matrix is {rows}x{cols}; the supported bound is {max}x{max}", max = MAX_MATRIX_DIM)]
    MatrixBound { rows: usize, cols: usize },
    #[error("the alexander ideal of this presentation is the zero ideal")]
    ZeroAlexanderIdeal,
    #[error(transparent)]
    Ideal(#[from] ZidealError),
}

/// A freely reduced word in free-group generators, stored as syllables
/// (generator index, nonzero exponent) with adjacent generators distinct.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word { syllables: Vec::new() }
    }

    /// Build from syllables, freely reducing.
    pub fn new(syllables: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { syllables: out }
    }

    pub fn generator(g: usize) -> Self {
        Word::new([(g, 1)])
    }

    pub fn generator_pow(g: usize, e: i64) -> Self {
        Word::new([(g, e)])
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.syllables.iter().chain(other.syllables.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word::new(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }

    /// a b a^-1 b^-1.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// The conjugation relator a w b^-1 w^-1 (reads "a = w b w^-1").
    pub fn conjugation(a: usize, w: &Word, b: usize) -> Word {
        Word::generator(a).concat(w).concat(&Word::generator_pow(b, -1)).concat(&w.inverse())
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.syllables.iter().filter(|&&(h, _)| h == g).map(|&(_, e)| e).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }
}

/// A finite presentation with abelianization weights: generator x_i maps to
/// t^(w_i). Every relator must abelianize to 1; the constructor enforces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    weights: Vec<i64>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(
        gens: Vec<String>,
        weights: Vec<i64>,
        relators: Vec<Word>,
    ) -> Result<Self, FoxError> {
        if gens.len() != weights.len() {
            return Err(FoxError::WeightCount { gens: gens.len(), weights: weights.len() });
        }
        for (index, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator() {
                if g >= gens.len() {
                    return Err(FoxError::UnknownGenerator { index, gen: g });
                }
            }
            let sum: i64 =
                (0..gens.len()).map(|j| weights[j] * r.exponent_sum(j)).sum();
            if sum != 0 {
                return Err(FoxError::UnbalancedRelator { index, sum });
            }
        }
        Ok(Presentation { gens, weights, relators })
    }

    /// All weights 1 (the Wirtinger situation: every generator is a
    /// meridian abelianizing to t).
    pub fn wirtinger(gens: Vec<String>, relators: Vec<Word>) -> Result<Self, FoxError> {
        let weights = vec![1; gens.len()];
        Self::new(gens, weights, relators)
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn all_weights_one(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Image of a word under the abelianizer: always a single monomial t^k.
    pub fn abelianize(&self, w: &Word) -> LaurentPoly {
        let k: i64 = w.syllables().iter().map(|&(g, e)| self.weights[g] * e).sum();
        LaurentPoly::monomial(k, BigInt::one())
    }

    /// The abelianized Fox derivative d(w)/d(x_j) in Z[t, t^-1].
    ///
    /// Left-to-right over syllables, with sigma the weighted exponent sum of
    /// the prefix read so far:
    ///   x_j^e  contributes t^sigma (1 + t^w + ... + t^(w(e-1)))        e > 0
    ///   x_j^-e contributes -t^sigma (t^-w + t^-2w + ... + t^-ew)      e > 0
    pub fn fox_derivative_ab(&self, w: &Word, j: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        let mut sigma: i64 = 0;
        for &(g, e) in w.syllables() {
            let wg = self.weights[g];
            if g == j {
                if e > 0 {
                    for i in 0..e {
                        out = out.add(&LaurentPoly::monomial(sigma + wg * i, BigInt::one()));
                    }
                } else {
                    for i in 1..=(-e) {
                        out = out.sub(&LaurentPoly::monomial(sigma - wg * i, BigInt::one()));
                    }
                }
            }
            sigma += wg * e;
        }
        out
    }

    /// The full Alexander matrix a_ij = abelianized d(r_i)/d(x_j).
    ///
    /// The fundamental identity sum_j a_ij (t^(w_j) - 1) = 0 is checked for
    /// every row; a violation means a malformed relator slipped past the
    /// constructor and is a hard fault.
    pub fn alexander_matrix(&self) -> AlexanderMatrix {
        let rows = self
            .relators
            .iter()
            .map(|r| (0..self.gens.len()).map(|j| self.fox_derivative_ab(r, j)).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        let matrix = AlexanderMatrix {
            entries: rows,
            weights: self.weights.clone(),
            all_weights_one: self.all_weights_one(),
        };
        matrix.assert_fundamental_identity();
        matrix
    }
}

/// Matrix of abelianized Fox derivatives; a presentation matrix for the
/// Alexander module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderMatrix {
    entries: Vec<Vec<LaurentPoly>>,
    weights: Vec<i64>,
    all_weights_one: bool,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.weights.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i]
    }

    pub fn all_weights_one(&self) -> bool {
        self.all_weights_one
    }

    fn assert_fundamental_identity(&self) {
        for (i, row) in self.entries.iter().enumerate() {
            let mut acc = LaurentPoly::zero();
            for (j, a) in row.iter().enumerate() {
                let tw = LaurentPoly::monomial(self.weights[j], BigInt::one())
                    .sub(&LaurentPoly::one());
                acc = acc.add(&a.mul(&tw));
            }
            assert!(
                acc.is_zero(),
                "fox: fundamental identity fails on row {i}: sum_j a_ij (t^w_j - 1) = {acc}"
            );
        }
    }
}

/// The k-th elementary ideal, with the zero ideal as a distinguished value
/// (it cannot be represented by `LaurentIdeal`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryIdeal {
    Zero,
    NonZero(LaurentIdeal),
}

impl ElementaryIdeal {
    pub fn nonzero(&self) -> Option<&LaurentIdeal> {
        match self {
            ElementaryIdeal::Zero => None,
            ElementaryIdeal::NonZero(i) => Some(i),
        }
    }
}

/// The k-th elementary ideal of the presentation: the ideal generated by
/// all (n-k)-minor determinants, where n is the generator count. For
/// weight-1 presentations one column is deleted first (each row sums to
/// zero, so minors meeting that column contribute nothing new).
pub fn elementary_ideal(p: &Presentation, k: usize) -> Result<ElementaryIdeal, FoxError> {
    let n = p.gens().len();
    if n >= k && n - k == 0 || n < k {
        return Ok(ElementaryIdeal::NonZero(LaurentIdeal::unit()));
    }
    let d = n - k;
    let matrix = p.alexander_matrix();
    let cols: Vec<usize> = if matrix.all_weights_one() && n > 0 {
        (1..n).collect()
    } else {
        (0..n).collect()
    };
    minors_ideal(&matrix, &cols, d)
}

/// Elementary ideal computed from the full matrix, no column deletion.
/// Used to cross-check the deleted-column shortcut on weight-1
/// presentations.
pub fn elementary_ideal_full(p: &Presentation, k: usize) -> Result<ElementaryIdeal, FoxError> {
    let n = p.gens().len();
    if n >= k && n - k == 0 || n < k {
        return Ok(ElementaryIdeal::NonZero(LaurentIdeal::unit()));
    }
    let d = n - k;
    let matrix = p.alexander_matrix();
    let cols: Vec<usize> = (0..n).collect();
    minors_ideal(&matrix, &cols, d)
}

/// The Alexander ideal is the first elementary ideal. A zero result means a
/// degenerate presentation and is reported as an error.
pub fn alexander_ideal(p: &Presentation) -> Result<LaurentIdeal, FoxError> {
    match elementary_ideal(p, 1)? {
        ElementaryIdeal::NonZero(i) => Ok(i),
        ElementaryIdeal::Zero => Err(FoxError::ZeroAlexanderIdeal),
    }
}

fn minors_ideal(
    matrix: &AlexanderMatrix,
    cols: &[usize],
    d: usize,
) -> Result<ElementaryIdeal, FoxError> {
    let m = matrix.rows();
    if m > MAX_MATRIX_DIM || matrix.cols() > MAX_MATRIX_DIM {
        return Err(FoxError::MatrixBound { rows: m, cols: matrix.cols() });
    }
    if d > m || d > cols.len() {
        // Too few rows or columns for any (d x d)-minor: only zero rows
        // could be appended, so the ideal is zero.
        return Ok(ElementaryIdeal::Zero);
    }
    let mut gens: Vec<LaurentPoly> = Vec::new();
    for row_set in subsets(m, d) {
        // Skip row selections containing an all-zero row.
        if row_set.iter().any(|&i| cols.iter().all(|&j| matrix.entry(i, j).is_zero())) {
            continue;
        }
        for col_set in subsets(cols.len(), d) {
            let sub: Vec<Vec<LaurentPoly>> = row_set
                .iter()
                .map(|&i| col_set.iter().map(|&cj| matrix.entry(i, cols[cj]).clone()).collect())
                .collect();
            let det = bareiss_det(sub);
            if !det.is_zero() {
                gens.push(det);
            }
        }
    }
    if gens.is_empty() {
        return Ok(ElementaryIdeal::Zero);
    }
    gens.sort();
    Ok(ElementaryIdeal::NonZero(LaurentIdeal::new(gens)?))
}

// All d-element subsets of {0..n}, lexicographic.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..d).collect();
    if d == 0 || d > n {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    loop {
        out.push(current.clone());
        // advance
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] + 1 <= n - (d - i) {
                current[i] += 1;
                for j in i + 1..d {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Fraction-free Bareiss determinant over Z[t]. Rows are first cleared of
/// negative exponents by units; the resulting determinant differs from the
/// true one by a unit only, which is invisible at the ideal level.
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    for row in m.iter_mut() {
        let lo = row.iter().filter_map(|p| p.min_exp()).min();
        if let Some(lo) = lo {
            if lo < 0 {
                for p in row.iter_mut() {
                    *p = p.shift(-lo);
                }
            }
        }
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot.mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("bareiss: previous pivot divides the 2x2 determinant");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(sylls: &[(usize, i64)]) -> Word {
        Word::new(sylls.iter().copied())
    }

    fn names(n: usize) -> Vec<String> {
        ["x", "y", "z", "u", "v"][..n].iter().map(|s| s.to_string()).collect()
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, c)))
    }

    // The trefoil relator x y x y^-1 x^-1 y^-1.
    fn trefoil_relator() -> Word {
        w(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])
    }

    #[test]
    fn word_reduction() {
        let word = w(&[(0, 1), (0, -1), (1, 2), (1, -1)]);
        assert_eq!(word.syllables(), &[(1, 1)]);
        let c = Word::commutator(&Word::generator_pow(0, 2), &Word::generator(1));
        assert_eq!(c.syllables(), &[(0, 2), (1, 1), (0, -2), (1, -1)]);
    }

    #[test]
    fn derivative_of_generator() {
        let p = Presentation::wirtinger(names(2), vec![]).unwrap();
        let x = Word::generator(0);
        assert_eq!(p.fox_derivative_ab(&x, 0), LaurentPoly::one());
        assert!(p.fox_derivative_ab(&x, 1).is_zero());
    }

    #[test]
    fn trefoil_derivatives_match_hand_recursion() {
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator()]).unwrap();
        let r = trefoil_relator();
        assert_eq!(p.fox_derivative_ab(&r, 0), poly(&[(0, 1), (1, -1), (2, 1)]));
        assert_eq!(p.fox_derivative_ab(&r, 1), poly(&[(0, -1), (1, 1), (2, -1)]));
    }

    #[test]
    fn twist_spun_trefoil_matrix_rows() {
        let r2 = w(&[(0, 2), (1, 1), (0, -2), (1, -1)]);
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator(), r2]).unwrap();
        let m = p.alexander_matrix();
        assert_eq!(m.entry(0, 0), &poly(&[(0, 1), (2, 1), (1, -1)]));
        assert_eq!(m.entry(0, 1), &poly(&[(1, 1), (2, -1), (0, -1)]));
        assert_eq!(m.entry(1, 1), &poly(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn unbalanced_relator_rejected() {
        let r = w(&[(0, 1), (1, 1)]);
        assert!(matches!(
            Presentation::wirtinger(names(2), vec![r]),
            Err(FoxError::UnbalancedRelator { .. })
        ));
    }

    #[test]
    fn trefoil_alexander_ideal() {
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator()]).unwrap();
        let ideal = alexander_ideal(&p).unwrap();
        let expected = LaurentIdeal::new([poly(&[(2, 1), (1, -1), (0, 1)])]).unwrap();
        assert_eq!(ideal, expected);
    }

    #[test]
    fn unknot_conventions() {
        // <x | > : deleting the column leaves nothing, and epsilon_1 = (1)
        // by the 0x0-minor convention.
        let p = Presentation::wirtinger(names(1), vec![]).unwrap();
        let e1 = elementary_ideal(&p, 1).unwrap();
        assert_eq!(e1.nonzero().unwrap(), &LaurentIdeal::unit());
        // <x, y | x y^-1>
        let p2 = Presentation::wirtinger(names(2), vec![w(&[(0, 1), (1, -1)])]).unwrap();
        assert_eq!(alexander_ideal(&p2).unwrap(), LaurentIdeal::unit());
    }

    #[test]
    fn elementary_ideal_conventions() {
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator()]).unwrap();
        // n - k <= 0: the unit ideal.
        assert_eq!(
            elementary_ideal(&p, 2).unwrap().nonzero().unwrap(),
            &LaurentIdeal::unit()
        );
        // epsilon_0 of a deleted-column 1x1 matrix needs a 2x2 minor: zero.
        assert_eq!(elementary_ideal(&p, 0).unwrap(), ElementaryIdeal::Zero);
    }

    #[test]
    fn chain_property_on_twist_spun_trefoil() {
        let r2 = w(&[(0, 2), (1, 1), (0, -2), (1, -1)]);
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator(), r2]).unwrap();
        let e1 = elementary_ideal(&p, 1).unwrap();
        let e2 = elementary_ideal(&p, 2).unwrap();
        let (e1, e2) = (e1.nonzero().unwrap(), e2.nonzero().unwrap());
        for g in e1.basis() {
            assert!(e2.member(g));
        }
    }

    #[test]
    fn deleted_column_matches_full_matrix() {
        let r2 = w(&[(0, 2), (1, 1), (0, -2), (1, -1)]);
        let p = Presentation::wirtinger(names(2), vec![trefoil_relator(), r2]).unwrap();
        for k in 1..=2 {
            let a = elementary_ideal(&p, k).unwrap();
            let b = elementary_ideal_full(&p, k).unwrap();
            match (a, b) {
                (ElementaryIdeal::Zero, ElementaryIdeal::Zero) => {}
                (ElementaryIdeal::NonZero(a), ElementaryIdeal::NonZero(b)) => {
                    assert_eq!(a, b)
                }
                (a, b) => panic!("mismatch at k={k}: {a:?} vs {b:?}"),
            }
        }
    }

    #[test]
    fn bareiss_against_cofactor_expansion() {
        // 3x3 polynomial matrix with a known determinant.
        let t = poly(&[(1, 1)]);
        let one = LaurentPoly::one();
        let m = vec![
            vec![t.clone(), one.clone(), LaurentPoly::zero()],
            vec![one.clone(), t.clone(), one.clone()],
            vec![LaurentPoly::zero(), one.clone(), t.clone()],
        ];
        // det = t^3 - 2t
        assert_eq!(bareiss_det(m), poly(&[(3, 1), (1, -2)]));
    }
}
