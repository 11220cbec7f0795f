use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Smith normal form `d = u * a * v`, with the inverses of both witnesses.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Invertible transform tracked alongside its inverse.
struct Tracked {
    m: IntMatrix,
    inv: IntMatrix,
}

impl Tracked {
    fn new(n: usize) -> Self {
        Tracked {
            m: IntMatrix::identity(n),
            inv: IntMatrix::identity(n),
        }
    }
}

/// Elimination state. `left` accumulates row operations (so `left.m * a`),
/// `right` accumulates column operations (so `a * right.m`).
struct Smith<'a> {
    a: &'a mut IntMatrix,
    left: Option<Tracked>,
    right: Option<Tracked>,
}

impl Smith<'_> {
    // row[dst] += k row[src]
    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some(t) = &mut self.left {
            t.m.add_row_multiple(dst, src, k);
            t.inv.add_column_multiple(src, dst, &-k);
        }
    }

    fn row_swap(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(t) = &mut self.left {
            t.m.swap_rows(x, y);
            t.inv.swap_columns(x, y);
        }
    }

    fn row_negate(&mut self, x: usize) {
        self.a.negate_row(x);
        if let Some(t) = &mut self.left {
            t.m.negate_row(x);
            t.inv.negate_column(x);
        }
    }

    // col[dst] += k col[src]
    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_column_multiple(dst, src, k);
        if let Some(t) = &mut self.right {
            t.m.add_column_multiple(dst, src, k);
            t.inv.add_row_multiple(src, dst, &-k);
        }
    }

    fn col_swap(&mut self, x: usize, y: usize) {
        self.a.swap_columns(x, y);
        if let Some(t) = &mut self.right {
            t.m.swap_columns(x, y);
            t.inv.swap_rows(x, y);
        }
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for t in 0..rows.min(cols) {
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        let x = &self.a[(i, j)];
                        if x.is_zero() {
                            continue;
                        }
                        if best.is_none_or(|(bi, bj)| x.magnitude() < self.a[(bi, bj)].magnitude()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else { return };
                self.row_swap(t, bi);
                self.col_swap(t, bj);

                let mut clean = true;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.row_add(i, t, &-q);
                    clean &= self.a[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.col_add(j, t, &-q);
                    clean &= self.a[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }
                // divisibility of the remaining block by the pivot
                let pivot = self.a[(t, t)].clone();
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.a[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }
}

/// Smith normal form with both transformation witnesses and their inverses.
pub fn snf(a: &IntMatrix) -> Snf {
    let mut d = a.clone();
    let mut s = Smith {
        a: &mut d,
        left: Some(Tracked::new(a.rows())),
        right: Some(Tracked::new(a.cols())),
    };
    s.run();
    let left = s.left.take().expect("tracked");
    let right = s.right.take().expect("tracked");
    Snf {
        d,
        u: left.m,
        u_inv: left.inv,
        v: right.m,
        v_inv: right.inv,
    }
}

/// Nonzero invariant factors only, without tracking transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut d = a.clone();
    Smith {
        a: &mut d,
        left: None,
        right: None,
    }
    .run();
    let k = d.rows().min(d.cols());
    (0..k)
        .map(|i| d[(i, i)].clone())
        .take_while(|x| !x.is_zero())
        .collect()
}
