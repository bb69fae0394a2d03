//! Shared helpers for the integration suites: the surface model sets,
//! the randomized identity suites, and a harness for the compiled
//! binary. Each suite returns how many instances it checked.

#![allow(dead_code)]

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sheafstrata::{
    chi_line_bundle, chi_pair, chi_pair_split, line_cohomology, split_bundle_chern,
    DivisorClass, SurfaceModel,
};

const CLASS_BOUND: i64 = 24;
const SUMMAND_BOUND: i64 = 12;

pub fn all_models() -> Vec<SurfaceModel> {
    vec![
        SurfaceModel::p2(),
        SurfaceModel::quadric(),
        SurfaceModel::product_ruled(2).unwrap(),
        SurfaceModel::numerical_ruled(1, -1, true).unwrap(),
    ]
}

pub fn cohomology_models() -> Vec<SurfaceModel> {
    vec![
        SurfaceModel::p2(),
        SurfaceModel::quadric(),
        SurfaceModel::product_ruled(2).unwrap(),
    ]
}

fn random_class(s: &SurfaceModel, rng: &mut ChaCha8Rng, bound: i64) -> DivisorClass {
    DivisorClass::new(
        (0..s.ns_rank())
            .map(|_| rng.gen_range(-bound..=bound))
            .collect(),
    )
}

/// h0 - h1 + h2 of the generic line bundle equals the Riemann-Roch chi.
pub fn suite_euler_vs_cohomology(instances: usize) -> usize {
    let mut checked = 0;
    for (i, s) in cohomology_models().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(101 + i as u64);
        for _ in 0..instances {
            let d = random_class(s, &mut rng, CLASS_BOUND);
            let triple = line_cohomology(s, &d).unwrap();
            assert_eq!(
                triple.euler(),
                chi_line_bundle(s, &d).unwrap(),
                "euler characteristic mismatch on {s} at {d}"
            );
            checked += 1;
        }
    }
    checked
}

/// Serre duality for generic cohomology: h^i(D) = h^(2-i)(K - D).
pub fn suite_serre_duality(instances: usize) -> usize {
    let mut checked = 0;
    for (i, s) in cohomology_models().iter().enumerate() {
        let k = s.canonical_class();
        let mut rng = ChaCha8Rng::seed_from_u64(211 + i as u64);
        for _ in 0..instances {
            let d = random_class(s, &mut rng, CLASS_BOUND);
            let dual = k.sub(&d).unwrap();
            let a = line_cohomology(s, &d).unwrap();
            let b = line_cohomology(s, &dual).unwrap();
            assert_eq!(
                (a.h0, a.h1, a.h2),
                (b.h2, b.h1, b.h0),
                "duality mismatch on {s} at {d}"
            );
            checked += 1;
        }
    }
    checked
}

/// The adjunction form of the arithmetic genus, from both twists:
/// 2 (chi(O(D + K)) - chi(O)) = D.(D + K) = 2 (chi(O(-D)) - chi(O)),
/// so curves in |D| have genus 1 + D.(D + K)/2 on every model.
pub fn suite_adjunction_genus(instances: usize) -> usize {
    let mut checked = 0;
    for (i, s) in all_models().iter().enumerate() {
        let k = s.canonical_class();
        let chi_o = s.chi_o();
        let mut rng = ChaCha8Rng::seed_from_u64(307 + i as u64);
        for _ in 0..instances {
            let d = random_class(s, &mut rng, CLASS_BOUND);
            let dk = d.add(&k).unwrap();
            let pairing = s.intersect(&d, &dk).unwrap();
            assert_eq!(
                2 * (chi_line_bundle(s, &dk).unwrap() - chi_o),
                pairing,
                "adjunction mismatch on {s} at {d}"
            );
            assert_eq!(
                2 * (chi_line_bundle(s, &d.negate().unwrap()).unwrap() - chi_o),
                pairing,
                "genus twist mismatch on {s} at {d}"
            );
            checked += 1;
        }
    }
    checked
}

/// The capacity twist identity:
/// chi(O(2D - c1)) = chi(O(-c1)) + D.(2D - 2c1 - K).
pub fn suite_capacity_twist(instances: usize) -> usize {
    let mut checked = 0;
    for (i, s) in all_models().iter().enumerate() {
        let k = s.canonical_class();
        let mut rng = ChaCha8Rng::seed_from_u64(401 + i as u64);
        for _ in 0..instances {
            let c1 = random_class(s, &mut rng, CLASS_BOUND);
            let d = random_class(s, &mut rng, CLASS_BOUND);
            let twist = d.scale(2).unwrap().sub(&c1).unwrap();
            let lhs = chi_line_bundle(s, &twist).unwrap();
            let shifted = twist.sub(&c1).unwrap().sub(&k).unwrap();
            let rhs = chi_line_bundle(s, &c1.negate().unwrap()).unwrap()
                + s.intersect(&d, &shifted).unwrap();
            assert_eq!(lhs, rhs, "twist identity mismatch on {s} at c1 {c1}, D {d}");
            checked += 1;
        }
    }
    checked
}

/// chi(A, B) of split bundles computed from Whitney-sum Chern data
/// agrees with the term-by-term double sum over the summands.
pub fn suite_split_chi_pair(instances: usize) -> usize {
    let mut checked = 0;
    for (i, s) in all_models().iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(503 + i as u64);
        for _ in 0..instances {
            let draw = |rng: &mut ChaCha8Rng| -> Vec<DivisorClass> {
                let rank = rng.gen_range(1..=3);
                (0..rank)
                    .map(|_| random_class(s, rng, SUMMAND_BOUND))
                    .collect()
            };
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            let fast = chi_pair(
                s,
                &split_bundle_chern(s, &a).unwrap(),
                &split_bundle_chern(s, &b).unwrap(),
            )
            .unwrap();
            let slow = chi_pair_split(s, &a, &b).unwrap();
            assert_eq!(fast, slow, "pairing oracle mismatch on {s}");
            checked += 1;
        }
    }
    checked
}

/// Run the compiled binary; returns (exit code, stdout, stderr).
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sheafstrata"))
        .args(args)
        .output()
        .expect("binary launches");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

/// Path of a golden file checked in under tests/golden.
pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Content of a golden file checked in under tests/golden.
pub fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name))
        .unwrap_or_else(|e| panic!("golden file {name} unreadable: {e}"))
}
