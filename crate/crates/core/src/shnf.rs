//! Signed Hermite normal form: a canonical form for integer matrices under
//! `A -> U A S` with `U` unimodular and `S` a diagonal sign matrix.
//!
//! Columns are fixed left to right. For each column the group of sign
//! patterns that preserve the prefix is kept as a basis over `Z/2`, and each
//! entry of the current column is minimized over its orbit under the affine
//! action that group induces on it. The group is never enumerated.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{hnf, hnf_matrix, hnf_pivots, IntMatrix};

/// `x mod q` in `[0, q)` for `q > 0`, and `x` itself for `q = 0`.
pub fn mmod(x: &BigInt, q: &BigInt) -> BigInt {
    if q.is_zero() {
        x.clone()
    } else {
        x.mod_floor(q)
    }
}

/// Total order used for canonical forms: columns left to right, and within a
/// column entries bottom to top.
pub fn lex_cmp(a: &IntMatrix, b: &IntMatrix) -> Ordering {
    debug_assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    for j in 0..a.cols() {
        for i in (0..a.rows()).rev() {
            match a[(i, j)].cmp(&b[(i, j)]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// A diagonal `+-1` matrix, stored as the set of flipped columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignPattern(Vec<bool>);

impl SignPattern {
    pub fn identity(n: usize) -> Self {
        SignPattern(vec![false; n])
    }

    /// The pattern flipping only column `j` (0-based).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut s = Self::identity(n);
        s.0[j] = true;
        s
    }

    pub fn from_flips(flips: Vec<bool>) -> Self {
        SignPattern(flips)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&f| !f)
    }

    pub fn is_flipped(&self, j: usize) -> bool {
        self.0[j]
    }

    pub fn flips(&self) -> &[bool] {
        &self.0
    }

    /// `+1` or `-1` on column `j`.
    pub fn sign(&self, j: usize) -> i64 {
        if self.0[j] {
            -1
        } else {
            1
        }
    }

    /// Group product (the matrices commute).
    pub fn compose(&self, other: &SignPattern) -> SignPattern {
        SignPattern(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    fn compose_in_place(&mut self, other: &SignPattern) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    /// `a * S`: negates the flipped columns.
    pub fn apply(&self, a: &IntMatrix) -> IntMatrix {
        let mut out = a.clone();
        for j in (0..self.len()).filter(|&j| self.0[j]) {
            out.negate_column(j);
        }
        out
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let signs: Vec<i64> = (0..self.len()).map(|j| self.sign(j)).collect();
        IntMatrix::diagonal(&signs)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|&x| if x { '-' } else { '+' }).collect();
        f.write_str(&s)
    }
}

/// Sign patterns preserving the Hermite normal form of a prefix `B` of a matrix:
/// a `Z/2` basis, and for each basis element `S` the unique unimodular `phi(S)`
/// with `phi(S) B S = B`, acting on the top `rank(B)` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignStabilizer {
    pub n: usize,
    /// Number of leading columns the stabilizer refers to.
    pub columns: usize,
    pub basis: Vec<SignPattern>,
    pub phi_images: Vec<IntMatrix>,
}

impl SignStabilizer {
    /// Dimension over `Z/2`; the group has `2^dim` elements.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Checks `phi(S) B S = B` on the top rows of the prefix of `b`.
    pub fn verify(&self, b: &IntMatrix) -> bool {
        let prefix = b.prefix_columns(self.columns);
        let m = self.phi_images.first().map_or(0, IntMatrix::rows);
        let top = prefix.select_rows(&(0..m).collect::<Vec<_>>());
        self.basis.iter().zip(&self.phi_images).all(|(s, phi)| {
            let s = SignPattern::from_flips(s.flips()[..self.columns].to_vec());
            phi.is_unimodular() && phi * &s.apply(&top) == top
        })
    }

    /// Adds the flip of column `j`, which fixes every earlier column.
    pub fn with_column(&self, j: usize) -> SignStabilizer {
        let m = self.phi_images.first().map_or(0, IntMatrix::rows);
        let mut out = self.clone();
        out.basis.push(SignPattern::unit(self.n, j));
        out.phi_images.push(IntMatrix::identity(m));
        out
    }
}

/// Affine involution `x -> sign * x + shift` of `Z/q` (of `Z` when `q = 0`).
#[derive(Clone, PartialEq, Eq, Debug)]
struct AffineMap {
    negate: bool,
    shift: BigInt,
}

impl AffineMap {
    fn identity() -> Self {
        AffineMap { negate: false, shift: BigInt::zero() }
    }

    fn apply(&self, x: &BigInt, q: &BigInt) -> BigInt {
        let y = if self.negate { -x } else { x.clone() };
        mmod(&(y + &self.shift), q)
    }

    /// `self` after `other`.
    fn after(&self, other: &AffineMap, q: &BigInt) -> AffineMap {
        let inner = if self.negate { -&other.shift } else { other.shift.clone() };
        AffineMap {
            negate: self.negate ^ other.negate,
            shift: mmod(&(inner + &self.shift), q),
        }
    }
}

/// Orbit of a point under the group generated by commuting involutions, with
/// a generator combination reaching each orbit point.
struct Orbit {
    points: Vec<(BigInt, Vec<usize>)>,
}

impl Orbit {
    // The images form a group of order at most 4; a basis of at most two maps
    // is extended greedily, and combinations are listed in bitmask order.
    fn new(maps: &[AffineMap], x: &BigInt, q: &BigInt) -> Orbit {
        let mut span = vec![AffineMap::identity()];
        let mut basis: Vec<usize> = Vec::new();
        for (g, map) in maps.iter().enumerate() {
            if span.contains(map) {
                continue;
            }
            let extra: Vec<AffineMap> = span.iter().map(|s| map.after(s, q)).collect();
            span.extend(extra);
            basis.push(g);
            assert!(span.len() <= 4, "sign orbit group has more than four elements");
        }
        let mut points: Vec<(BigInt, Vec<usize>)> = Vec::new();
        for (mask, map) in span.iter().enumerate() {
            let y = map.apply(x, q);
            if points.iter().all(|(p, _)| p != &y) {
                let combo = (0..basis.len()).filter(|b| mask >> b & 1 == 1).map(|b| basis[b]).collect();
                points.push((y, combo));
            }
        }
        Orbit { points }
    }

    fn min(&self) -> &(BigInt, Vec<usize>) {
        self.points.iter().min_by(|a, b| a.0.cmp(&b.0)).expect("orbit is nonempty")
    }
}

/// Orbit of entry `(i, j)` (0-based) under the affine action of `g` on column
/// `j`, where `q` is the pivot below the entry (or 0). Include the flip of
/// column `j` itself with [`SignStabilizer::with_column`].
///
/// `g` must stabilize the first `j` columns of `a`, and every entry of column
/// `j` below row `i` must already be fixed by `g`.
pub fn orbit(g: &SignStabilizer, a: &IntMatrix, i: usize, j: usize, q: &BigInt) -> Vec<BigInt> {
    let maps: Vec<AffineMap> = g
        .basis
        .iter()
        .zip(&g.phi_images)
        .map(|(s, phi)| {
            let negate = s.is_flipped(j) ^ phi[(i, i)].is_negative();
            let tail: BigInt = (i + 1..phi.cols()).map(|k| &phi[(i, k)] * &a[(k, j)]).sum();
            AffineMap { negate, shift: mmod(&(tail * s.sign(j)), q) }
        })
        .collect();
    let mut points: Vec<BigInt> = Orbit::new(&maps, &mmod(&a[(i, j)], q), q)
        .points
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    points.sort();
    points
}

/// The canonical form with witnesses: `canonical = u * input * signs`.
#[derive(Clone, Debug)]
pub struct ShnfResult {
    pub canonical: IntMatrix,
    pub u: IntMatrix,
    pub signs: SignPattern,
    /// Sign patterns fixing `canonical`.
    pub stabilizer: SignStabilizer,
}

/// Upper triangular block formed by the pivot columns of an HNF prefix.
struct PivotBlock {
    p: IntMatrix,
    pivots: Vec<usize>,
    det: BigInt,
}

impl PivotBlock {
    fn new(a: &IntMatrix, pivots: &[usize]) -> Self {
        let m = pivots.len();
        let p = a.select_columns(pivots).select_rows(&(0..m).collect::<Vec<_>>());
        let det = (0..m).map(|k| p[(k, k)].clone()).product();
        PivotBlock { p, pivots: pivots.to_vec(), det }
    }

    fn m(&self) -> usize {
        self.pivots.len()
    }

    /// `det(P) P^-1 w`, exact by back substitution.
    fn scaled_solve(&self, w: &[BigInt]) -> Vec<BigInt> {
        let m = self.m();
        let mut z = vec![BigInt::zero(); m];
        for l in (0..m).rev() {
            let mut acc = &self.det * &w[l];
            for k in l + 1..m {
                acc -= &self.p[(l, k)] * &z[k];
            }
            debug_assert!(acc.is_multiple_of(&self.p[(l, l)]));
            z[l] = acc / &self.p[(l, l)];
        }
        z
    }

    /// Row `i` of `P D P^-1 w` where `D` holds the signs of `s` on the pivots,
    /// given `z = det(P) P^-1 w`.
    fn conjugate_row(&self, s: &SignPattern, z: &[BigInt], i: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for l in i..self.m() {
            let t = &self.p[(i, l)] * &z[l];
            if s.is_flipped(self.pivots[l]) {
                acc -= t;
            } else {
                acc += t;
            }
        }
        debug_assert!(acc.is_multiple_of(&self.det));
        acc / &self.det
    }

    /// `P D P^-1` as a matrix.
    fn conjugate(&self, s: &SignPattern) -> IntMatrix {
        let m = self.m();
        let mut out = IntMatrix::zeros(m, m);
        for k in 0..m {
            let mut e = vec![BigInt::zero(); m];
            e[k] = BigInt::one();
            let z = self.scaled_solve(&e);
            for i in 0..m {
                out[(i, k)] = self.conjugate_row(s, &z, i);
            }
        }
        out
    }
}

/// Signed Hermite normal form: the minimum of `HNF(A S)` over all sign
/// patterns `S`, in the order of [`lex_cmp`].
pub fn shnf(input: &IntMatrix) -> ShnfResult {
    let (rows, n) = (input.rows(), input.cols());
    let mut a = hnf_matrix(input);
    let mut total = SignPattern::identity(n);
    let mut gens: Vec<SignPattern> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    for j in 0..n {
        let block = PivotBlock::new(&a, &pivots);
        let m = block.m();
        let q = if m < rows { a[(m, j)].clone() } else { BigInt::zero() };
        debug_assert!(!q.is_negative());
        gens.push(SignPattern::unit(n, j));

        let mut w: Vec<BigInt> = (0..m).map(|i| a[(i, j)].clone()).collect();
        let mut acc = SignPattern::identity(n);
        for i in (0..m).rev() {
            let z = block.scaled_solve(&w);
            let maps: Vec<AffineMap> = gens
                .iter()
                .map(|g| {
                    let sj = g.sign(j);
                    let value = block.conjugate_row(g, &z, i) * sj;
                    let negate = g.is_flipped(j) ^ g.is_flipped(pivots[i]);
                    let eps_w = if negate { -&w[i] } else { w[i].clone() };
                    AffineMap { negate, shift: mmod(&(value - eps_w), &q) }
                })
                .collect();
            let orbit = Orbit::new(&maps, &mmod(&w[i], &q), &q);
            let (u, combo) = orbit.min().clone();

            if !combo.is_empty() {
                let mut chosen = SignPattern::identity(n);
                for &g in &combo {
                    chosen.compose_in_place(&gens[g]);
                }
                let sj = chosen.sign(j);
                w = (0..m)
                    .map(|k| mmod(&(block.conjugate_row(&chosen, &z, k) * sj), &q))
                    .collect();
                acc.compose_in_place(&chosen);
            } else {
                w[i] = mmod(&w[i], &q);
            }
            debug_assert_eq!(w[i], u);

            // keep the generators that fix u, correcting the others by
            // combinations of at most two that move it
            let mut moving: Vec<(SignPattern, AffineMap)> = Vec::new();
            let mut kept = Vec::with_capacity(gens.len());
            'gen: for (g, map) in gens.drain(..).zip(maps) {
                for mask in 0..1usize << moving.len() {
                    let mut fix = map.clone();
                    let mut pattern = g.clone();
                    for (b, (mg, mm)) in moving.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            fix = fix.after(mm, &q);
                            pattern.compose_in_place(mg);
                        }
                    }
                    if fix.apply(&u, &q) == u {
                        kept.push(pattern);
                        continue 'gen;
                    }
                }
                moving.push((g, map));
                assert!(moving.len() <= 2, "orbit larger than four points");
            }
            gens = kept;
        }

        if !acc.is_identity() {
            a = hnf_matrix(&acc.apply(&a));
            total.compose_in_place(&acc);
        }
        debug_assert!((0..m).all(|i| a[(i, j)] == w[i]));
        if !q.is_zero() {
            pivots.push(j);
        }
    }

    debug_assert_eq!(pivots, hnf_pivots(&a));
    let witness = hnf(&total.apply(input));
    assert_eq!(witness.h, a, "sign witness does not reproduce the canonical form");
    let block = PivotBlock::new(&a, &pivots);
    let phi_images = gens.iter().map(|g| block.conjugate(g)).collect();
    ShnfResult {
        canonical: a,
        u: witness.u,
        signs: total,
        stabilizer: SignStabilizer { n, columns: n, basis: gens, phi_images },
    }
}

/// Exhaustive minimum over all `2^n` sign patterns.
pub fn shnf_brute_force(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    assert!(n <= 20, "exhaustive search over 2^{n} patterns");
    (0..1usize << n)
        .map(|mask| {
            let s = SignPattern::from_flips((0..n).map(|j| mask >> j & 1 == 1).collect());
            hnf_matrix(&s.apply(a))
        })
        .min_by(lex_cmp)
        .unwrap_or_else(|| a.clone())
}
