mod common;

use arith_matroid::linalg::lattice_coordinates;
use arith_matroid::reduction::{molecule_basis_bijection, reduce};
use arith_matroid::ArithmeticMatroid;
use common::{arithmetic_matroid, config, full_rank_matrix, properties};
use num_traits::One;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn exchange_is_a_product_preserving_bijection(m in arithmetic_matroid()) {
        properties::exchange_is_a_product_preserving_bijection(&m)?;
    }

    #[test]
    fn reduction_is_torsion_free_surjective_strong_gcd(m in arithmetic_matroid()) {
        let r = reduce(&m).unwrap();
        prop_assert!(r.is_torsion_free());
        prop_assert!(r.is_surjective());
        prop_assert!(r.is_quasi());
        prop_assert!(r.strong_gcd_property());
        prop_assert_eq!(r.rank_table(), m.rank_table());
    }

    #[test]
    fn reduction_is_idempotent_and_commutes_with_dual(m in arithmetic_matroid()) {
        properties::reduction_is_idempotent_and_commutes_with_dual(&m)?;
    }

    #[test]
    fn reduction_of_a_representation_is_represented(a in full_rank_matrix(1..=3, 1..=6, 6)) {
        let m = ArithmeticMatroid::from_matrix(&a).unwrap();
        let coords = lattice_coordinates(&a).unwrap();
        prop_assert_eq!(reduce(&m).unwrap(), ArithmeticMatroid::from_matrix(&coords).unwrap());
    }
}

#[test]
fn trivial_molecule_swaps_the_spanning_parts() {
    // with T and F empty the exchange trades the parts of B1 and B2 inside X,
    // an involution of the basis pairs rather than the identity
    let m = ArithmeticMatroid::uniform(2, 3).unwrap();
    for x in arith_matroid::Subset::all(3) {
        let mol = m.molecule(x, x).unwrap().unwrap();
        for ((b1, b2), (b3, b4)) in molecule_basis_bijection(&m, &mol).unwrap() {
            assert_eq!((b3, b4), ((b1 - x) | (b2 & x), (b2 - x) | (b1 & x)));
            assert_eq!(molecule_basis_bijection(&m, &mol).unwrap().iter().find(|(p, _)| *p == (b3, b4)).unwrap().1, (b1, b2));
        }
    }
    assert!(reduce(&m).unwrap().multiplicity_table().iter().all(One::is_one));
}
