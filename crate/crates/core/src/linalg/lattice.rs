use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::hnf::{hnf_matrix, reduce_in_place};
use super::snf::{invariant_factors, snf};
use super::IntMatrix;
use crate::error::{Error, Result};

/// Rank over the rationals.
pub fn rank(a: &IntMatrix) -> usize {
    let mut h = a.clone();
    reduce_in_place(&mut h, None).len()
}

/// Order of the torsion subgroup of `Z^rows / colspan(a)`.
pub fn torsion_order(a: &IntMatrix) -> BigInt {
    invariant_factors(a).iter().product::<BigInt>().max(BigInt::one())
}

/// Coordinates of the columns of a full-row-rank matrix with respect to a
/// basis of the lattice they generate: the first `rows` rows of `V^-1`,
/// where `D = U A V` is the Smith normal form.
pub fn lattice_coordinates(a: &IntMatrix) -> Result<IntMatrix> {
    let s = snf(a);
    let r = s.rank();
    if r != a.rows() {
        return Err(Error::RankDeficient { rank: r, rows: a.rows() });
    }
    Ok(s.v_inv.select_rows(&(0..r).collect::<Vec<_>>()))
}

/// Whether `v` lies in the lattice spanned by the columns of `a`.
pub fn in_lattice(v: &[BigInt], a: &IntMatrix) -> Result<bool> {
    if v.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "vector of length {} against a matrix with {} rows",
            v.len(),
            a.rows()
        )));
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    let s = snf(a);
    let f = s.invariant_factors();
    let uv = s.u.mul_vec(v);
    Ok(uv.iter().enumerate().all(|(i, x)| match f.get(i) {
        Some(d) => x.is_multiple_of(d),
        None => x.is_zero(),
    }))
}

/// Canonical basis of the lattice spanned by the columns of `a`: the
/// transposed nonzero rows of the Hermite normal form of `a^T`.
pub fn canonical_column_basis(a: &IntMatrix) -> IntMatrix {
    let h = hnf_matrix(&a.transpose());
    let nonzero: Vec<usize> = (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    transpose_keeping_rows(&h.select_rows(&nonzero), a.rows())
}

/// Smallest saturated lattice containing the columns of `a`, as a canonical
/// basis matrix with `a.rows()` rows.
pub fn saturation(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let r = s.rank();
    let basis = s.u_inv.select_columns(&(0..r).collect::<Vec<_>>());
    canonical_column_basis(&basis)
}

/// Canonical basis of the integer kernel `{x : a x = 0}`, one column per generator.
pub fn kernel(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let r = s.rank();
    let basis = s.v.select_columns(&(r..a.cols()).collect::<Vec<_>>());
    canonical_column_basis(&basis)
}

// an empty row set transposes to `ambient x 0`, not `cols x 0`
fn transpose_keeping_rows(m: &IntMatrix, ambient: usize) -> IntMatrix {
    if m.rows() == 0 {
        IntMatrix::zeros(ambient, 0)
    } else {
        m.transpose()
    }
}
