//! Column-style Hermite normal form.
//!
//! The column span of an integer matrix is put in lower echelon form by
//! unimodular column operations: each pivot is positive, sits strictly below
//! the previous pivot, and every entry to its left in the pivot row lies in
//! `[0, pivot)`. Zero columns are dropped, so two matrices span the same
//! lattice exactly when their forms are identical.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Echelonized matrix plus the unimodular transform that produced it.
pub(crate) struct ColumnEchelon {
    /// `a * transform`; the first `rank` columns are the HNF, the rest are zero.
    pub reduced: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
}

pub(crate) fn column_echelon(a: &IntMatrix, track: bool) -> ColumnEchelon {
    let rows = a.rows();
    let cols = a.cols();
    let mut h = a.clone();
    let mut v = if track { IntMatrix::identity(cols) } else { IntMatrix::zeros(0, 0) };
    let mut k = 0;

    for r in 0..rows {
        if k == cols {
            break;
        }
        // Euclid across row r on the columns not yet holding a pivot.
        loop {
            let smallest = (k..cols)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&x, &y| h[(r, x)].abs().cmp(&h[(r, y)].abs()).then(x.cmp(&y)));
            let Some(p) = smallest else { break };
            h.swap_cols(k, p);
            if track {
                v.swap_cols(k, p);
            }
            let mut settled = true;
            for j in k + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = -h[(r, j)].div_floor(&h[(r, k)]);
                h.add_col_multiple(j, k, &q);
                if track {
                    v.add_col_multiple(j, k, &q);
                }
                settled &= h[(r, j)].is_zero();
            }
            if settled {
                break;
            }
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            h.negate_col(k);
            if track {
                v.negate_col(k);
            }
        }
        let pivot = h[(r, k)].clone();
        for j in 0..k {
            let q: BigInt = -h[(r, j)].div_floor(&pivot);
            h.add_col_multiple(j, k, &q);
            if track {
                v.add_col_multiple(j, k, &q);
            }
        }
        k += 1;
    }

    ColumnEchelon { reduced: h, transform: v, rank: k }
}

/// Hermite normal form of the column span of `a`, with zero columns dropped.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, usize) {
    let e = column_echelon(a, false);
    (e.reduced.truncate_cols(e.rank), e.rank)
}

/// Row index of each pivot of a matrix already in column HNF.
pub(crate) fn pivot_rows(h: &IntMatrix) -> Vec<usize> {
    (0..h.cols()).map(|j| (0..h.rows()).find(|&i| !h[(i, j)].is_zero()).expect("zero column in HNF basis")).collect()
}
