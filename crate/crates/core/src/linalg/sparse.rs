use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::snf::invariant_factors;
use super::IntMatrix;

/// Rank and Smith invariants of a sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseSmith {
    pub rank: usize,
    /// Invariant factors greater than one, ascending.
    pub torsion: Vec<BigInt>,
}

/// Smith invariants of a sparse matrix given as `(row, col, value)` triples.
///
/// Unit pivots are eliminated first, directly on the sparse rows; whatever
/// remains has no unit entries and goes through the dense Smith form.
pub fn sparse_smith(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseSmith {
    let mut row_data: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for &(i, j, x) in entries {
        assert!(i < rows && j < cols, "entry ({i}, {j}) out of bounds");
        let e = row_data[i].entry(j).or_insert_with(BigInt::zero);
        *e += x;
        if e.is_zero() {
            row_data[i].remove(&j);
            col_rows[j].remove(&i);
        } else {
            col_rows[j].insert(i);
        }
    }

    let mut rank = 0;
    loop {
        // unit entry in the sparsest row, ties toward the sparsest column
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (i, row) in row_data.iter().enumerate() {
            if row.is_empty() || best.is_some_and(|b| row.len() > b.0) {
                continue;
            }
            for (&j, x) in row {
                if x.magnitude().is_one() {
                    let key = (row.len(), col_rows[j].len(), i, j);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, _, p, c)) = best else { break };

        let pivot_row = std::mem::take(&mut row_data[p]);
        let unit = pivot_row[&c].clone();
        for &j in pivot_row.keys() {
            col_rows[j].remove(&p);
        }
        let targets: Vec<usize> = col_rows[c].iter().copied().collect();
        for i in targets {
            let factor = &row_data[i][&c] * &unit;
            for (&j, x) in &pivot_row {
                let e = row_data[i].entry(j).or_insert_with(BigInt::zero);
                *e -= &factor * x;
                if e.is_zero() {
                    row_data[i].remove(&j);
                    col_rows[j].remove(&i);
                } else {
                    col_rows[j].insert(i);
                }
            }
        }
        debug_assert!(col_rows[c].is_empty());
        rank += 1;
    }

    let live_rows: Vec<usize> = (0..rows).filter(|&i| !row_data[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&j| !col_rows[j].is_empty()).collect();
    let mut torsion = Vec::new();
    if !live_rows.is_empty() {
        let col_pos: BTreeMap<usize, usize> =
            live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let mut dense = IntMatrix::zeros(live_rows.len(), live_cols.len());
        for (k, &i) in live_rows.iter().enumerate() {
            for (j, x) in &row_data[i] {
                dense[(k, col_pos[j])] = x.clone();
            }
        }
        for d in invariant_factors(&dense) {
            rank += 1;
            if d > BigInt::one() {
                torsion.push(d);
            }
        }
    }
    SparseSmith { rank, torsion }
}
