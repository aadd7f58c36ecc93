//! Independent oracles for conformance testing. Everything here decides
//! questions about ideals through integer lattices (Hermite/Smith style row
//! reduction over Z) or exhaustive enumeration, never through the Groebner
//! path under test.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use alexideal::fox::Presentation;
use alexideal::laurent::LaurentPoly;

/// Coefficient vector of f on the window lo..=hi; None if f sticks out.
pub fn window_vec(f: &LaurentPoly, lo: i64, hi: i64) -> Option<Vec<BigInt>> {
    if !f.is_zero() {
        if f.min_exp().unwrap() < lo || f.max_exp().unwrap() > hi {
            return None;
        }
    }
    Some((lo..=hi).map(|k| f.coeff(k)).collect())
}

/// All shifts t^a g of the generators whose support fits the window.
pub fn shift_rows(gens: &[LaurentPoly], lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let (gmin, gmax) = (g.min_exp().unwrap(), g.max_exp().unwrap());
        for a in (lo - gmin)..=(hi - gmax) {
            let shifted = g.shift(a);
            rows.push(window_vec(&shifted, lo, hi).unwrap());
        }
    }
    rows
}

// Integer row echelon by Euclidean elimination; returns (echelon rows,
// pivot columns).
fn echelon(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    if rows.is_empty() {
        return (rows, Vec::new());
    }
    let cols = rows[0].len();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        loop {
            let mut best: Option<usize> = None;
            for r in top..rows.len() {
                if !rows[r][c].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => rows[r][c].abs() < rows[b][c].abs(),
                    };
                    if better {
                        best = Some(r);
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(top, b);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_floor(&rows[top][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let d = &rows[top][j] * &q;
                        rows[r][j] -= d;
                    }
                }
                if !rows[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                pivots.push(c);
                top += 1;
                break;
            }
        }
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

/// Does v lie in the integer row span of rows?
pub fn in_lattice(rows: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let (ech, pivots) = echelon(rows.to_vec());
    let mut v = v.to_vec();
    for (r, &c) in pivots.iter().enumerate() {
        if v[c].is_zero() {
            continue;
        }
        let (q, rem) = v[c].div_rem(&ech[r][c]);
        if !rem.is_zero() {
            return false;
        }
        for j in 0..v.len() {
            let d = &ech[r][j] * &q;
            v[j] -= d;
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Degree/height-bounded membership: f is declared a member when its vector
/// lies in the shift-lattice of the generators on a window with `slack`
/// extra exponents on both sides. A positive answer is always sound.
pub fn member_oracle(gens: &[LaurentPoly], f: &LaurentPoly, slack: i64) -> bool {
    if f.is_zero() {
        return true;
    }
    let lo = gens
        .iter()
        .chain([f])
        .filter_map(LaurentPoly::min_exp)
        .min()
        .unwrap()
        - slack;
    let hi = gens
        .iter()
        .chain([f])
        .filter_map(LaurentPoly::max_exp)
        .max()
        .unwrap()
        + slack;
    let rows = shift_rows(gens, lo, hi);
    match window_vec(f, lo, hi) {
        Some(v) => in_lattice(&rows, &v),
        None => false,
    }
}

/// Lattice-level equality of two generator lists: mutual membership of
/// every generator. Sound in the positive direction only, like
/// `member_oracle`.
pub fn ideals_equal_oracle(a: &[LaurentPoly], b: &[LaurentPoly], slack: i64) -> bool {
    a.iter().all(|g| member_oracle(b, g, slack))
        && b.iter().all(|g| member_oracle(a, g, slack))
}

// Diagonalize an integer matrix by row and column gcd elimination; returns
// the nonzero diagonal entries (invariant factors up to ordering and sign).
fn diagonalize(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Find the minimal nonzero |entry| in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => m[i][j].abs() < m[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&m[t][t]);
            if !q.is_zero() {
                for j in 0..cols {
                    let d = &m[t][j] * &q;
                    m[i][j] -= d;
                }
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&m[t][t]);
            if !q.is_zero() {
                for i in 0..rows {
                    let d = &m[i][t] * &q;
                    m[i][j] -= d;
                }
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if clean {
            diag.push(m[t][t].abs());
            t += 1;
        }
    }
    diag
}

/// Residue-enumeration quotient size at one window: reduce all monomials
/// t^-d..t^d against the shift lattice and read the Smith form. None means
/// not finite at this window.
pub fn quotient_size_at_window(gens: &[LaurentPoly], d: i64) -> Option<BigUint> {
    let rows = shift_rows(gens, -d, d);
    let dim = (2 * d + 1) as usize;
    let diag = diagonalize(rows);
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    if rank < dim {
        return None;
    }
    let mut prod = BigUint::one();
    for x in &diag {
        prod *= x.magnitude();
    }
    Some(prod)
}

/// Windowed quotient size with stabilization: grows the window until two
/// consecutive answers agree. Panics when the budget runs out, which means
/// the instance was not suitable for this oracle.
pub fn quotient_size_oracle(gens: &[LaurentPoly], base: i64) -> Option<BigUint> {
    let mut prev = quotient_size_at_window(gens, base);
    for step in 1..=4 {
        let next = quotient_size_at_window(gens, base + 2 * step);
        if next == prev {
            return next;
        }
        prev = next;
    }
    panic!("quotient size oracle did not stabilize on this instance");
}

/// Brute-force count of Fox p-colorings: assignments of generators to
/// dihedral reflections (z -> 2a - z as maps of Z_p) satisfying every
/// relator.
pub fn dihedral_colorings(p: &Presentation, prime: u64) -> u64 {
    let n = p.gens().len();
    let total = (prime as u128).pow(n as u32);
    assert!(total <= 10_000_000, "dihedral oracle instance too large");
    let mut count = 0u64;
    for idx in 0..total {
        let mut assignment = Vec::with_capacity(n);
        let mut rest = idx;
        for _ in 0..n {
            assignment.push((rest % prime as u128) as u64);
            rest /= prime as u128;
        }
        if p.relators().iter().all(|r| relator_holds(r.syllables(), &assignment, prime)) {
            count += 1;
        }
    }
    count
}

// Each dihedral element acts on Z_p as z -> e z + c with e = +-1; a
// reflection with color a is z -> -z + 2a and is an involution.
fn relator_holds(syllables: &[(usize, i64)], colors: &[u64], p: u64) -> bool {
    let mut e = 1i64;
    let mut c = 0u64;
    for &(g, exp) in syllables {
        if exp.rem_euclid(2) == 0 {
            continue;
        }
        let (ge, gc) = (-1i64, (2 * colors[g]) % p);
        // compose: (e, c) then apply (ge, gc) on the left: z -> ge (e z + c) + gc
        let new_c = if ge == 1 { (gc + c) % p } else { (gc + p - c % p) % p };
        e *= ge;
        c = new_c;
    }
    e == 1 && c == 0
}

/// Independent abelianized Fox derivative: divide-and-conquer splitting
/// D(uv) = Du + ab(u) Dv down to single syllables.
pub fn fox_derivative_oracle(syllables: &[(usize, i64)], j: usize, weights: &[i64]) -> LaurentPoly {
    fn ab(syllables: &[(usize, i64)], weights: &[i64]) -> i64 {
        syllables.iter().map(|&(g, e)| weights[g] * e).sum()
    }
    fn go(syllables: &[(usize, i64)], j: usize, weights: &[i64]) -> LaurentPoly {
        match syllables.len() {
            0 => LaurentPoly::zero(),
            1 => {
                let (g, e) = syllables[0];
                if g != j {
                    return LaurentPoly::zero();
                }
                let w = weights[g];
                let mut acc = LaurentPoly::zero();
                if e > 0 {
                    for i in 0..e {
                        acc = acc.add(&LaurentPoly::monomial(w * i, 1));
                    }
                } else {
                    for i in 1..=(-e) {
                        acc = acc.sub(&LaurentPoly::monomial(-w * i, 1));
                    }
                }
                acc
            }
            len => {
                let (u, v) = syllables.split_at(len / 2);
                let du = go(u, j, weights);
                let dv = go(v, j, weights);
                du.add(&dv.shift(ab(u, weights)))
            }
        }
    }
    go(syllables, j, weights)
}

/// Bounded witness search for ideal-class equivalence: scan a pool of small
/// multipliers for (x, y) with (x)I = (y)J, deciding the equality at the
/// lattice level. Returns the witness when found.
pub fn class_witness_search(
    i_gens: &[LaurentPoly],
    j_gens: &[LaurentPoly],
    pool: &[LaurentPoly],
    slack: i64,
) -> Option<(LaurentPoly, LaurentPoly)> {
    for x in pool {
        if x.is_zero() {
            continue;
        }
        let xi: Vec<LaurentPoly> = i_gens.iter().map(|g| g.mul(x)).collect();
        for y in pool {
            if y.is_zero() {
                continue;
            }
            let yj: Vec<LaurentPoly> = j_gens.iter().map(|g| g.mul(y)).collect();
            if ideals_equal_oracle(&xi, &yj, slack) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// Euclidean gcd over Q[t] with exact rational arithmetic, then content
/// fixup: an independent check of the polynomial gcd.
pub fn gcd_oracle(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    #[derive(Clone)]
    struct Frac {
        n: BigInt,
        d: BigInt,
    }
    impl Frac {
        fn new(n: BigInt, d: BigInt) -> Self {
            assert!(!d.is_zero());
            let g = n.gcd(&d);
            let (mut n, mut d) = if g.is_zero() { (n, d) } else { (n / &g, d / &g) };
            if d.is_negative() {
                n = -n;
                d = -d;
            }
            Frac { n, d }
        }
        fn zero() -> Self {
            Frac { n: BigInt::zero(), d: BigInt::one() }
        }
        fn is_zero(&self) -> bool {
            self.n.is_zero()
        }
        fn sub(&self, o: &Frac) -> Frac {
            Frac::new(&self.n * &o.d - &o.n * &self.d, &self.d * &o.d)
        }
        fn mul(&self, o: &Frac) -> Frac {
            Frac::new(&self.n * &o.n, &self.d * &o.d)
        }
        fn div(&self, o: &Frac) -> Frac {
            Frac::new(&self.n * &o.d, &self.d * &o.n)
        }
    }

    fn to_vec(f: &LaurentPoly) -> Vec<Frac> {
        let lo = f.min_exp().unwrap();
        let hi = f.max_exp().unwrap();
        (lo..=hi).map(|k| Frac::new(f.coeff(k), BigInt::one())).collect()
    }
    fn trim(v: &mut Vec<Frac>) {
        while v.last().map(Frac::is_zero).unwrap_or(false) {
            v.pop();
        }
    }
    fn rem(a: &[Frac], b: &[Frac]) -> Vec<Frac> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        while r.len() > db {
            let q = r.last().unwrap().div(b.last().unwrap());
            let off = r.len() - 1 - db;
            for (i, bc) in b.iter().enumerate() {
                r[off + i] = r[off + i].sub(&q.mul(bc));
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }

    if a.is_zero() {
        return b.normalize_unit();
    }
    if b.is_zero() {
        return a.normalize_unit();
    }
    let content = a.content().gcd(&b.content());
    let mut r0 = to_vec(a);
    let mut r1 = to_vec(b);
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let r = rem(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    // Clear denominators and take the primitive part.
    let mut denom = BigInt::one();
    for f in &r0 {
        denom = &denom / denom.gcd(&f.d) * &f.d;
    }
    let ints: Vec<BigInt> = r0.iter().map(|f| &f.n * (&denom / &f.d)).collect();
    let mut num_content = BigInt::zero();
    for c in &ints {
        num_content = num_content.gcd(c);
    }
    let prim = LaurentPoly::from_terms(
        ints.iter().enumerate().map(|(k, c)| (k as i64, c / &num_content)),
    );
    prim.scale(&content).normalize_unit()
}
