//! Randomized identity suites: ten thousand seeded instances per
//! surface for each closed-form identity, all checked exactly.

mod common;

const INSTANCES: usize = 10_000;

#[test]
fn euler_characteristic_matches_cohomology() {
    let checked = common::suite_euler_vs_cohomology(INSTANCES);
    assert_eq!(checked, INSTANCES * common::cohomology_models().len());
}

#[test]
fn serre_duality_on_generic_cohomology() {
    let checked = common::suite_serre_duality(INSTANCES);
    assert_eq!(checked, INSTANCES * common::cohomology_models().len());
}

#[test]
fn adjunction_genus_identity() {
    let checked = common::suite_adjunction_genus(INSTANCES);
    assert_eq!(checked, INSTANCES * common::all_models().len());
}

#[test]
fn capacity_twist_identity() {
    let checked = common::suite_capacity_twist(INSTANCES);
    assert_eq!(checked, INSTANCES * common::all_models().len());
}

#[test]
fn split_bundle_pairing_oracle() {
    let checked = common::suite_split_chi_pair(INSTANCES);
    assert_eq!(checked, INSTANCES * common::all_models().len());
}
