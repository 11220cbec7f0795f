//! Property checks shared by the proptest suites and the acceptance report.

use std::collections::BTreeSet;

use arith_matroid::decomposition::{decompose, is_decomposition};
use arith_matroid::linalg::{hnf_pivots, is_hnf, torsion_order};
use arith_matroid::reduction::{basis_pairs, exchange_inverse, molecule_basis_bijection, reduce, BasisPair};
use arith_matroid::shnf::{mmod, orbit, shnf, SignPattern};
use arith_matroid::toric::components;
use arith_matroid::{ArithmeticMatroid, IntMatrix, Subset};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::TestCaseResult;

pub fn strong_gcd_is_gcd_on_both_sides(m: &ArithmeticMatroid) -> TestCaseResult {
    prop_assert_eq!(m.strong_gcd_property(), m.gcd_property() && m.dual().gcd_property());
    if m.strong_gcd_property() {
        prop_assert!(m.dual().strong_gcd_property());
    }
    Ok(())
}

pub fn exchange_is_a_product_preserving_bijection(m: &ArithmeticMatroid) -> TestCaseResult {
    for mol in m.molecules() {
        let pairs = molecule_basis_bijection(m, &mol).unwrap();
        let images: BTreeSet<BasisPair> = pairs.iter().map(|&(_, q)| q).collect();
        let target: BTreeSet<BasisPair> = basis_pairs(m, mol.x | mol.t, mol.x | mol.f).into_iter().collect();
        prop_assert_eq!(images.len(), pairs.len());
        prop_assert_eq!(&images, &target);
        for &((b1, b2), (b3, b4)) in &pairs {
            prop_assert_eq!(exchange_inverse(&mol, (b3, b4)), (b1, b2));
            prop_assert_eq!(m.m(b1) * m.m(b2), m.m(b3) * m.m(b4));
        }
    }
    Ok(())
}

pub fn reduction_is_idempotent_and_commutes_with_dual(m: &ArithmeticMatroid) -> TestCaseResult {
    let r = reduce(m).unwrap();
    prop_assert_eq!(reduce(&r).unwrap(), r.clone());
    prop_assert_eq!(reduce(&m.dual()).unwrap(), r.dual());
    Ok(())
}

pub fn shnf_invariance(a: &IntMatrix, w: &IntMatrix, s: &SignPattern) -> TestCaseResult {
    let moved = w * &s.apply(a);
    prop_assert_eq!(shnf(&moved).canonical, shnf(a).canonical);
    Ok(())
}

pub fn shnf_idempotent_and_witnessed(a: &IntMatrix) -> TestCaseResult {
    let r = shnf(a);
    prop_assert!(is_hnf(&r.canonical));
    prop_assert_eq!(shnf(&r.canonical).canonical, r.canonical.clone());
    prop_assert!(r.u.is_unimodular());
    prop_assert_eq!(&r.u * &r.signs.apply(a), r.canonical.clone());
    prop_assert!(r.stabilizer.verify(&r.canonical));
    Ok(())
}

pub fn shnf_prefix(a: &IntMatrix, cut: usize) -> TestCaseResult {
    let j = cut.min(a.cols());
    let whole = shnf(a).canonical;
    prop_assert_eq!(whole.prefix_columns(j), shnf(&a.prefix_columns(j)).canonical);
    Ok(())
}

/// Orbit of the lowest entry above the pivot row in column `col`, under the
/// stabilizer of the preceding columns together with the flip of `col`.
/// Returns the orbit size, or `None` when the prefix has no pivot.
pub fn orbit_size(a: &IntMatrix, col: usize) -> Result<Option<usize>, TestCaseError> {
    let j = col.min(a.cols() - 1);
    let canonical = shnf(a).canonical;
    let m = hnf_pivots(&canonical.prefix_columns(j)).len();
    if m == 0 {
        return Ok(None);
    }
    let i = m - 1;
    let q = if m < canonical.rows() { canonical[(m, j)].clone() } else { BigInt::zero() };

    let mut g = shnf(&a.prefix_columns(j)).stabilizer;
    let pad = vec![false; a.cols() - j];
    g.basis = g.basis.iter().map(|s| SignPattern::from_flips([s.flips(), &pad[..]].concat())).collect();
    g.n = a.cols();
    let g = g.with_column(j);

    let points = orbit(&g, &canonical, i, j, &q);
    prop_assert!([1, 2, 4].contains(&points.len()), "orbit {:?}", points);
    // the canonical entry is the smallest point of its orbit
    prop_assert_eq!(&points[0], &mmod(&canonical[(i, j)], &q));
    Ok(Some(points.len()))
}

/// The bipartition `part | rest` passes the zero-pattern test of the normal
/// form exactly when it is a decomposition.
pub fn zero_pattern_iff_decomposition(a: &IntMatrix, part: Subset) -> TestCaseResult {
    let n = a.cols();
    let part = part & Subset::full(n);
    let d = decompose(a).unwrap();
    let side = |pos: usize| part.contains(d.order[pos]);
    let pattern = (0..d.normal_form.rows()).all(|k| (0..n).all(|j| side(k) == side(j) || d.normal_form[(k, j)].is_zero()));
    let m = ArithmeticMatroid::from_matrix(a).unwrap();
    let blocks: Vec<Subset> = [part, Subset::full(n) - part].into_iter().filter(|b| !b.is_empty()).collect();
    prop_assert_eq!(pattern, is_decomposition(&m, &blocks).unwrap());
    Ok(())
}

pub fn component_count_is_torsion(a: &IntMatrix, x: Subset) -> TestCaseResult {
    let x = x & Subset::full(a.cols());
    let comps = components(a, x);
    prop_assert_eq!(BigInt::from(comps.len()), torsion_order(&a.select_columns(&x.indices())));
    let distinct: BTreeSet<_> = comps.iter().collect();
    prop_assert_eq!(distinct.len(), comps.len());
    Ok(())
}
