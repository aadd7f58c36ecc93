//! Small exact integer-matrix kernel computation, used by the bounded
//! generator search in `factor_maximals`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Basis of the integer kernel {x : mat * x = 0} of a rows x cols matrix,
/// via column reduction to Hermite-like form with a tracked unimodular
/// transformation.
pub(crate) fn kernel_basis(mut mat: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let rows = mat.len();
    debug_assert!(mat.iter().all(|r| r.len() == cols));
    // u starts as the identity; column operations applied to mat are mirrored
    // on u, so mat_original * u = mat at all times.
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..cols).map(|i| BigInt::from((i == j) as i64)).collect())
        .collect();
    // u is stored column-major: u[j] is the j-th column.

    let col_swap = |mat: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, a: usize, b: usize| {
        for row in mat.iter_mut() {
            row.swap(a, b);
        }
        u.swap(a, b);
    };
    // column[b] -= q * column[a]
    let col_axpy =
        |mat: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, q: &BigInt, a: usize, b: usize| {
            for row in mat.iter_mut() {
                let d = &row[a] * q;
                row[b] -= d;
            }
            for i in 0..u[a].len() {
                let d = &u[a][i] * q;
                u[b][i] -= d;
            }
        };

    let mut c = 0;
    for r in 0..rows {
        if c == cols {
            break;
        }
        loop {
            // Pick the column c..cols with the smallest nonzero |entry| in row r.
            let mut pivot: Option<usize> = None;
            for j in c..cols {
                if !mat[r][j].is_zero() {
                    let better = match pivot {
                        None => true,
                        Some(pj) => mat[r][j].abs() < mat[r][pj].abs(),
                    };
                    if better {
                        pivot = Some(j);
                    }
                }
            }
            let pj = match pivot {
                Some(pj) => pj,
                None => break,
            };
            if pj != c {
                col_swap(&mut mat, &mut u, pj, c);
            }
            let mut any_left = false;
            for j in c + 1..cols {
                if mat[r][j].is_zero() {
                    continue;
                }
                let q = div_round(&mat[r][j], &mat[r][c]);
                if !q.is_zero() {
                    col_axpy(&mut mat, &mut u, &q, c, j);
                }
                if !mat[r][j].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                c += 1;
                break;
            }
        }
    }

    (c..cols).map(|j| u[j].clone()).collect()
}

// Round-to-nearest quotient keeps the entries small during reduction.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if &r * &two >= b.abs() {
        q + 1
    } else {
        q
    }
}
