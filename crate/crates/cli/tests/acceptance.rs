//! Acceptance checks: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see them on success) and
//! enforcing its runtime budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use molec_core::construct::{build_integers, shipped_ambients, BuildOptions};
use molec_core::factor::{is_molecule, is_unit_cancellative, molecularize};
use molec_core::ideal::{is_maximal, is_prime, Ideal};
use molec_core::oracle::molecularizations_by_force;
use molec_core::props::{property_suite, property_suite_ring};
use molec_core::ring::{make_gf, make_zmod, poly_quotient};

use molec_cli::experiments::{run_experiment, ExperimentArgs};
use molec_cli::report::ExperimentReport;

const LIMIT: u64 = 1 << 24;

fn opts() -> BuildOptions {
    BuildOptions::default()
}

fn finish(criterion: &str, budget: Duration, start: Instant, detail: String) {
    let elapsed = start.elapsed();
    println!("criterion {criterion}: pass — {detail} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_1_integer_factorizations_are_unique_with_prime_factors() {
    let start = Instant::now();
    let (_, rep) = run_experiment(
        "butts",
        &ExperimentArgs { n: Some(12), ..Default::default() },
        &opts(),
        LIMIT,
    )
    .unwrap();
    let ExperimentReport::Butts { molecularizations, factors, unique, all_factors_prime, .. } = rep
    else {
        panic!("wrong report kind")
    };
    assert_eq!(molecularizations, 1);
    assert_eq!(factors, vec!["(2)", "(2)", "(3)"]);
    assert!(unique && all_factors_prime);

    for n in 2..=200u64 {
        let amb = build_integers(n, &opts()).unwrap();
        let rep = molecularize(&amb.target, LIMIT).unwrap();
        assert!(rep.finite, "n={n}: factorization search did not terminate");
        assert_eq!(rep.molecularizations.len(), 1, "n={n}: not unique");
        for m in &rep.census.molecules {
            assert!(is_prime(m, LIMIT).unwrap(), "n={n}: molecule divisor not prime");
        }
    }
    finish(
        "1",
        Duration::from_secs(10),
        start,
        "n=12 factors (2)(2)(3); n=2..=200 all unique with prime molecules".into(),
    );
}

#[test]
fn criterion_2_quadratic_order_recovers_the_classical_splitting() {
    let start = Instant::now();
    let (_, rep) = run_experiment("quadratic", &ExperimentArgs::default(), &opts(), LIMIT).unwrap();
    let ExperimentReport::Quadratic {
        molecularizations,
        factor_count,
        ref factor_indices,
        doubled_factor_squares_to_two,
        split_pair_multiplies_to_three,
        all_factors_prime,
        ..
    } = rep
    else {
        panic!("wrong report kind")
    };
    assert_eq!(molecularizations, 1);
    assert_eq!(factor_count, 4);
    assert_eq!(factor_indices, &vec![2, 2, 3, 3]);
    assert!(doubled_factor_squares_to_two);
    assert!(split_pair_multiplies_to_three);
    assert!(all_factors_prime);
    finish(
        "2",
        Duration::from_secs(30),
        start,
        "(6) = P₂·P₂·P₃·P₃′ uniquely, P₂²=(2), P₃P₃′=(3)".into(),
    );
}

#[test]
fn criterion_3_cusp_ideal_count_tracks_the_field_size() {
    let start = Instant::now();
    let mut counts = Vec::new();
    for q in [2u64, 3, 4] {
        let args = ExperimentArgs { q: Some(q), ..Default::default() };
        let (_, rep) = run_experiment("theorem10", &args, &opts(), LIMIT).unwrap();
        let ExperimentReport::Theorem10 { shape_count, all_contain_target, .. } = rep else {
            panic!("wrong report kind")
        };
        assert!(all_contain_target, "q={q}: some shape ideal misses (X⁴)");
        assert_eq!(shape_count as u64, q, "q={q}: wrong shape count");
        counts.push(shape_count);
    }
    assert!(counts.windows(2).all(|w| w[0] < w[1]), "counts not strictly increasing");
    finish(
        "3",
        Duration::from_secs(60),
        start,
        format!("(X²+bX³, X⁴) counts {counts:?} for q = 2, 3, 4"),
    );
}

#[test]
fn criterion_4_squared_variable_ideal_is_a_nonprime_primary_molecule() {
    let start = Instant::now();
    for p in [2u64, 3] {
        let args = ExperimentArgs { p: Some(p), ..Default::default() };
        let (_, rep) = run_experiment("prop13-3", &args, &opts(), LIMIT).unwrap();
        let ExperimentReport::Prop13_3 { molecule, primary, prime, .. } = rep else {
            panic!("wrong report kind")
        };
        assert!(molecule, "p={p}: (X², p²) not certified a molecule");
        assert!(primary, "p={p}: (X², p²) not primary");
        assert!(!prime, "p={p}: (X², p²) wrongly prime");
    }
    finish(
        "4",
        Duration::from_secs(120),
        start,
        "(X², p²) molecule ∧ primary ∧ ¬prime for p = 2, 3".into(),
    );
}

#[test]
fn criterion_5_irreducibility_separates_molecule_from_compound() {
    let start = Instant::now();
    let (_, rep) = run_experiment("dedekind-poly", &ExperimentArgs::default(), &opts(), LIMIT).unwrap();
    let ExperimentReport::DedekindPoly {
        irreducible_target_is_molecule,
        reducible_target_is_compound,
        witness_product_matches,
        ..
    } = rep
    else {
        panic!("wrong report kind")
    };
    assert!(irreducible_target_is_molecule, "(2, X²) not a molecule");
    assert!(reducible_target_is_compound, "(2, X²+X) not compound");
    assert!(witness_product_matches, "(2,X)·(2,X+1) ≠ (2, X²+X)");
    finish(
        "5",
        Duration::from_secs(10),
        start,
        "(2, X²) molecule; (2, X²+X) = (2,X)·(2,X+1)".into(),
    );
}

#[test]
fn criterion_6_pullback_order_strata_classify_completely() {
    let start = Instant::now();
    let (_, rep) = run_experiment("dplusm", &ExperimentArgs::default(), &opts(), LIMIT).unwrap();
    let ExperimentReport::DPlusM {
        overideal_count,
        classification_complete,
        ref levels,
        level_one_all_molecules,
        ..
    } = rep
    else {
        panic!("wrong report kind")
    };
    assert!(classification_complete, "an ideal above (t³) escapes the strata");
    assert_eq!(overideal_count, 11);
    // Away from the boundary every level carries one stratum per nonzero
    // F₂-subspace of F₄.
    assert_eq!(levels[0].count, 4, "level 1 must have 4 strata");
    assert_eq!(levels[1].count, 4, "level 2 must have 4 strata");
    assert!(level_one_all_molecules, "a tF + t²V stratum failed the molecule check");
    finish(
        "6",
        Duration::from_secs(60),
        start,
        "11 ideals above (t³), per-level strata = #subspaces = 4, tF+t²V all molecules".into(),
    );
}

#[test]
fn criterion_7_property_suites_find_zero_violations() {
    let start = Instant::now();
    let mut suites = 0u32;
    for amb in shipped_ambients(&opts()).unwrap() {
        let rep = property_suite(&amb, 0, 32, LIMIT).unwrap();
        assert!(
            rep.passed(),
            "{}: {:?}",
            rep.label,
            rep.checks
                .iter()
                .filter(|c| c.violation_count > 0)
                .map(|c| (c.name, &c.violations))
                .collect::<Vec<_>>()
        );
        suites += 1;
    }
    for n in 2..=100u64 {
        let r = make_zmod(n).unwrap();
        let rep = property_suite_ring(&r, "zmod", 0, 16, LIMIT).unwrap();
        assert!(rep.passed(), "zmod({n}) violated a law");
        suites += 1;
    }

    // The split ring F₂×F₂: its maximal ideals are idempotent, so they are
    // unit-cancellativity counterexamples and not molecules — data the
    // laws predict, not a violation of them.
    let f2 = make_gf(2, 1).unwrap();
    let split = poly_quotient(&f2, &[f2.zero(), f2.one(), f2.one()]).unwrap();
    let x = Ideal::generated(&split, &[split.basis_element(1)]).unwrap();
    assert!(is_maximal(&x, LIMIT).unwrap());
    assert!(x.is_idempotent().unwrap());
    assert!(!is_unit_cancellative(&x, LIMIT).unwrap());
    assert!(!is_molecule(&x, LIMIT).unwrap());
    let rep = property_suite_ring(&split, "f2xf2", 0, 32, LIMIT).unwrap();
    assert!(rep.passed(), "the split ring broke a law");
    suites += 1;

    finish(
        "7",
        Duration::from_secs(120),
        start,
        format!("{suites} suites, zero violations; split-ring counterexample confirmed"),
    );
}

#[test]
fn criterion_8_engine_matches_the_brute_force_oracle() {
    let start = Instant::now();
    let mut compared = 0u32;
    for amb in shipped_ambients(&opts()).unwrap() {
        assert!(amb.ring.size() <= 4096, "{}: shipped ambient too large", amb.label);
        let engine = molecularize(&amb.target, LIMIT).unwrap();
        let force = molecularizations_by_force(&amb.target, LIMIT).unwrap();
        match force {
            None => assert!(!engine.finite, "{}: oracle saw an absorber, engine did not", amb.label),
            Some(multisets) => {
                assert!(engine.finite, "{}: engine saw an absorber, oracle did not", amb.label);
                let a: BTreeSet<Vec<Ideal>> = engine.molecularizations.into_iter().collect();
                let b: BTreeSet<Vec<Ideal>> = multisets.into_iter().collect();
                assert_eq!(a, b, "{}: engine and oracle disagree", amb.label);
            }
        }
        compared += 1;
    }
    finish(
        "8",
        Duration::from_secs(300),
        start,
        format!("{compared} ambients, engine factorizations equal brute force"),
    );
}
