#![allow(dead_code)]

pub mod properties;

use arith_matroid::linalg::rank;
use arith_matroid::{ArithmeticMatroid, IntMatrix, Subset};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const CASES: u32 = 256;

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

pub fn matrix(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (rows, cols).prop_flat_map(move |(r, n)| {
        prop::collection::vec(-bound..=bound, r * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n.max(1)).take(r).map(<[i64]>::to_vec).collect();
            if n == 0 {
                IntMatrix::zeros(r, 0)
            } else {
                IntMatrix::from_rows(&rows)
            }
        })
    })
}

pub fn full_rank_matrix(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = IntMatrix> {
    matrix(rows, cols, bound).prop_filter("full row rank", |a| rank(a) == a.rows())
}

pub fn unimodular(r: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..r, 0..r, -3i64..=3, any::<bool>()), 0..3 * r + 1).prop_map(move |ops| {
        let mut w = IntMatrix::identity(r);
        for (i, j, k, flip) in ops {
            if i != j {
                w.add_row_multiple(i, j, &BigInt::from(k));
            } else if flip {
                w.negate_row(i);
            }
            if flip && i != j {
                w.swap_rows(i, j);
            }
        }
        w
    })
}

/// Represented arithmetic matroids, sometimes scaled, dualized or
/// replaced by the matroid of lattice coordinates.
pub fn arithmetic_matroid() -> impl Strategy<Value = ArithmeticMatroid> {
    (full_rank_matrix(1..=3, 1..=6, 4), 1i64..=3, 0u8..4).prop_map(|(a, scale, variant)| {
        let a = match variant {
            1 => arith_matroid::linalg::lattice_coordinates(&a).expect("full row rank"),
            _ => a,
        };
        let m = ArithmeticMatroid::from_matrix(&a).unwrap();
        let m = if variant == 2 { m.dual() } else { m };
        let scaled: Vec<BigInt> = m.multiplicity_table().iter().map(|x| x * scale).collect();
        m.with_multiplicity(scaled).unwrap()
    })
}

pub fn subset(n: usize) -> impl Strategy<Value = Subset> {
    (0u32..1 << n).prop_map(Subset)
}

pub fn signs(n: usize) -> impl Strategy<Value = arith_matroid::shnf::SignPattern> {
    prop::collection::vec(any::<bool>(), n).prop_map(arith_matroid::shnf::SignPattern::from_flips)
}

/// Full-row-rank matrices with many zeros, so that splittings are common.
pub fn sparse_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=7)
        .prop_flat_map(|(r, n)| {
            let entry = prop_oneof![3 => Just(0i64), 2 => -4i64..=4];
            prop::collection::vec(entry, r * n)
                .prop_map(move |v| IntMatrix::from_rows(&v.chunks(n).map(<[i64]>::to_vec).collect::<Vec<_>>()))
        })
        .prop_filter("full row rank", |a| rank(a) == a.rows())
}

/// A matrix with a unimodular row operation and a sign pattern of matching sizes.
pub fn equivalence_move(a: impl Strategy<Value = IntMatrix>) -> impl Strategy<Value = (IntMatrix, IntMatrix, arith_matroid::shnf::SignPattern)> {
    a.prop_flat_map(|a| {
        let (r, n) = (a.rows(), a.cols());
        (Just(a), unimodular(r), signs(n))
    })
}
