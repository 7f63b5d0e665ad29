//! Property tests pitting the core algorithms against independent oracles.

use heller_core::gflin::field_make;
use heller_core::modrep::{Iso, Module};
use heller_core::symgrp::Group;
use heller_core::verify::{
    exhaustive_submodules, frobenius_instance, mackey_dimensions, meataxe_agreement,
    omega_inverse_instance,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frobenius_reciprocity_holds(i in 0u64..10_000) {
        let (desc, lhs, rhs) = frobenius_instance(i).unwrap();
        prop_assert_eq!(lhs, rhs, "{}", desc);
    }

    #[test]
    fn heller_and_coheller_are_inverse(i in 0u64..10_000) {
        let (desc, a, b) = omega_inverse_instance(i).unwrap();
        prop_assert!(matches!(a, Iso::Yes(_)), "Ω∘Ω⁻¹ on {}", desc);
        prop_assert!(matches!(b, Iso::Yes(_)), "Ω⁻¹∘Ω on {}", desc);
    }
}

#[test]
fn meataxe_matches_exhaustive_search() {
    let (checked, bad) = meataxe_agreement().unwrap();
    assert!(checked >= 30, "only {checked} modules checked");
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn exhaustive_search_sees_the_natural_permutation_module_split() {
    let f = field_make(3, 1).unwrap();
    let g = Group::symmetric(3).unwrap();
    assert!(exhaustive_submodules(&Module::natural_perm(&g, &f)).is_some());
    assert!(exhaustive_submodules(&Module::sign(&g, &f)).is_none());
}

#[test]
fn mackey_dimension_identity() {
    for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (5, 1)] {
        let (dim, sum) = mackey_dimensions(p, k).unwrap();
        assert_eq!(dim, sum, "p = {p}, k = {k}");
    }
}
