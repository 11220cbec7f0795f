mod common;

use arith_matroid::{ArithmeticMatroid, Subset};
use common::{arithmetic_matroid, config, matrix, properties, subset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn strong_gcd_is_gcd_on_both_sides(m in arithmetic_matroid()) {
        properties::strong_gcd_is_gcd_on_both_sides(&m)?;
    }

    #[test]
    fn strong_gcd_implies_gcd_and_passes_to_dual(m in arithmetic_matroid()) {
        if m.strong_gcd_property() {
            prop_assert!(m.gcd_property());
            prop_assert!(m.dual().strong_gcd_property());
        }
    }

    #[test]
    fn represented_matroids_are_arithmetic(a in matrix(1..=4, 0..=7, 9)) {
        let m = ArithmeticMatroid::from_matrix(&a).unwrap();
        prop_assert!(m.is_rank_function());
        if let Err(v) = m.check_arithmetic() {
            return Err(TestCaseError::fail(format!("{v} for\n{a}")));
        }
    }

    #[test]
    fn dual_is_an_involution(m in arithmetic_matroid()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert!(m.dual().is_arithmetic());
    }

    #[test]
    fn deletion_and_contraction_commute(
        (m, x, y) in arithmetic_matroid().prop_flat_map(|m| {
            let n = m.n();
            (Just(m), subset(n), subset(n))
        })
    ) {
        let y = y - x;
        let n = m.n();
        // y relabelled inside the deletion of x, and x inside the contraction of y
        let relabel = |s: Subset, removed: Subset| {
            let rest: Vec<usize> = (Subset::full(n) - removed).elements().collect();
            Subset::from_elements(s.elements().map(|e| rest.iter().position(|&r| r == e).unwrap() + 1))
        };
        let a = m.deletion(x).contraction(relabel(y, x));
        let b = m.contraction(y).deletion(relabel(x, y));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, m.minor(x, y));
    }
}

#[test]
fn generator_reaches_both_sides_of_the_theorem() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let (mut strong, mut weak) = (0, 0);
    for _ in 0..common::CASES {
        let m = arithmetic_matroid().new_tree(&mut runner).unwrap().current();
        if m.strong_gcd_property() {
            strong += 1;
        } else {
            weak += 1;
        }
    }
    assert!(strong > 20 && weak > 20, "strong {strong}, weak {weak}");
}
