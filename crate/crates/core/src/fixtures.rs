//! Small named instances used by tests, benchmarks and the command line.

use num_bigint::BigInt;

use crate::linalg::IntMatrix;
use crate::matroid::{ArithmeticMatroid, Subset};

/// Three inequivalent representations of one arithmetic matroid of rank 3 on
/// 4 elements whose toric arrangements have pairwise different posets of layers.
pub fn toric_triple() -> [IntMatrix; 3] {
    [
        IntMatrix::from_rows(&[[1, 1, 1, -3], [0, 5, 0, -5], [0, 0, 5, -5]]),
        IntMatrix::from_rows(&[[1, 1, 1, -1], [0, 5, 0, 5], [0, 0, 5, -5]]),
        IntMatrix::from_rows(&[[1, 2, 2, 1], [0, 5, 0, 5], [0, 0, 5, -5]]),
    ]
}

/// An arithmetic matroid on the uniform matroid of rank 2 over 6 elements
/// whose reduction violates the positivity axiom.
pub fn reduction_counterexample() -> ArithmeticMatroid {
    let low = Subset::from_elements([1, 2]);
    ArithmeticMatroid::from_fn(6, |x| {
        let high = (x - low).len();
        let m: i64 = if high >= 2 {
            1
        } else {
            match ((x & low).len(), high) {
                (0, _) => 1,
                (1, _) => 2,
                (2, 0) => 4,
                (2, _) if x.contains(3) => 1,
                _ => 2,
            }
        };
        (x.len().min(2), BigInt::from(m))
    })
    .expect("valid tables")
}
