use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form `h = u * a` with its unimodular witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Hermite normal form under the left action of `GL(r, Z)`.
///
/// Zero rows sit at the bottom, pivots are positive and move strictly right
/// going down, and entries above a pivot `q` lie in `[0, q)`.
pub fn hnf(a: &IntMatrix) -> Hnf {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let pivots = reduce_in_place(&mut h, Some(&mut u));
    Hnf { h, u, pivots }
}

/// Hermite normal form without the transformation matrix.
pub fn hnf_matrix(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    reduce_in_place(&mut h, None);
    h
}

/// Pivot columns of a matrix already in Hermite normal form.
pub fn hnf_pivots(h: &IntMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h[(i, j)].is_zero()) {
            Some(j) => pivots.push(j),
            None => break,
        }
    }
    pivots
}

/// Checks the three defining properties of the Hermite normal form.
pub fn is_hnf(h: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for i in 0..h.rows() {
        let pivot = (0..h.cols()).find(|&j| !h[(i, j)].is_zero());
        match pivot {
            None => seen_zero_row = true,
            Some(p) => {
                if seen_zero_row || last_pivot.is_some_and(|l| p <= l) || !h[(i, p)].is_positive()
                {
                    return false;
                }
                for k in 0..i {
                    let x = &h[(k, p)];
                    if x.is_negative() || x >= &h[(i, p)] {
                        return false;
                    }
                }
                for k in i + 1..h.rows() {
                    if !h[(k, p)].is_zero() {
                        return false;
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    true
}

fn apply_add(h: &mut IntMatrix, u: &mut Option<&mut IntMatrix>, dst: usize, src: usize, k: &BigInt, from: usize) {
    h.add_row_multiple_from(dst, src, k, from);
    if let Some(u) = u.as_deref_mut() {
        u.add_row_multiple(dst, src, k);
    }
}

/// Column-by-column Euclidean elimination. Returns the pivot columns.
pub(crate) fn reduce_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) -> Vec<usize> {
    let (rows, cols) = (h.rows(), h.cols());
    let mut pivots = Vec::new();
    let mut p = 0;
    for c in 0..cols {
        if p == rows {
            break;
        }
        loop {
            // smallest nonzero magnitude among rows p.. becomes the pivot
            let best = (p..rows)
                .filter(|&k| !h[(k, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].magnitude().cmp(h[(b, c)].magnitude()));
            let Some(k) = best else { break };
            if k != p {
                h.swap_rows(k, p);
                if let Some(u) = u.as_deref_mut() {
                    u.swap_rows(k, p);
                }
            }
            let mut done = true;
            for k in p + 1..rows {
                if h[(k, c)].is_zero() {
                    continue;
                }
                let q = h[(k, c)].div_floor(&h[(p, c)]);
                apply_add(h, &mut u, k, p, &-q, c);
                if !h[(k, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(p, c)].is_zero() {
            continue;
        }
        if h[(p, c)].is_negative() {
            h.negate_row(p);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(p);
            }
        }
        for k in 0..p {
            if h[(k, c)].is_zero() {
                continue;
            }
            let q = h[(k, c)].div_floor(&h[(p, c)]);
            apply_add(h, &mut u, k, p, &-q, c);
        }
        pivots.push(c);
        p += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Hnf {
        let r = hnf(a);
        assert_eq!(&r.u * a, r.h);
        assert!(r.u.is_unimodular());
        assert!(is_hnf(&r.h), "{}", r.h);
        r
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        let r = check(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
    }

    #[test]
    fn negative_column_example() {
        let a = IntMatrix::from_rows(&[[4, -2], [0, -3]]);
        assert_eq!(check(&a).h, IntMatrix::from_rows(&[[4, 1], [0, 3]]));
    }

    #[test]
    fn row_swap() {
        let a = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(check(&a).h, IntMatrix::identity(2));
    }

    #[test]
    fn rank_deficient_and_empty() {
        let a = IntMatrix::from_rows(&[[2, 4, 6], [1, 2, 3], [0, 0, 1]]);
        let r = check(&a);
        assert_eq!(r.pivots, vec![0, 2]);
        assert!(r.h.row(2).iter().all(Zero::is_zero));
        check(&IntMatrix::zeros(3, 0));
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(2, 2));
    }

    #[test]
    fn non_pivot_column_is_left_alone() {
        let a = IntMatrix::from_rows(&[[1, 1, 1, -3], [0, 5, 0, -5], [0, 0, 5, -5]]);
        let r = check(&a);
        assert_eq!(r.h, a);
    }
}
