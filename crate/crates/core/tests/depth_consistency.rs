//! Truncation-depth independence: the subring models cut an infinite ring
//! off at a chosen degree, and every question about ideals above the target
//! must give the same answer at any sufficient depth.  Factoring (X⁴) in
//! the cusp ring at depth 10 and at depth 12 has to produce matching
//! lattices, censuses, and factorizations.

use std::collections::BTreeSet;

use molec_core::construct::{build_cusp_model, build_dplusm_model, BuildOptions, DPlusMModel};
use molec_core::factor::{divisor_census, molecularize};
use molec_core::ideal::Ideal;

const LIM: u64 = 1 << 20;

/// t^j·K[t] as an ideal of the model ring, pulled back through the
/// inclusion into the truncation.
fn level_ideal(model: &DPlusMModel, j: usize) -> Ideal {
    let gens: Vec<_> = (0..model.field_rank)
        .map(|i| {
            model
                .inclusion
                .preimage(&model.truncation.basis_element(j * model.field_rank + i))
                .unwrap()
                .expect("t^j·K lies in the subring for j ≥ 1")
        })
        .collect();
    Ideal::generated(&model.ambient.ring, &gens).unwrap()
}

/// Index multiset of one factorization — invariant under the lattice
/// isomorphism between truncation depths.
fn profile(ms: &[Ideal]) -> Vec<u128> {
    let mut p: Vec<u128> = ms.iter().map(|i| i.index()).collect();
    p.sort();
    p
}

#[test]
fn cusp_census_and_factorizations_survive_deeper_truncation() {
    let opts = BuildOptions::default();
    let shallow = build_cusp_model(2, 1, 10, &[4], &opts).unwrap();
    let deep = build_cusp_model(2, 1, 12, &[4], &opts).unwrap();
    assert_eq!(shallow.ambient.ring.size(), 1 << 9);
    assert_eq!(deep.ambient.ring.size(), 1 << 11);

    let cs = divisor_census(&shallow.ambient.target, LIM).unwrap();
    let cd = divisor_census(&deep.ambient.target, LIM).unwrap();
    assert_eq!(cs.overideals.len(), cd.overideals.len());
    assert_eq!(cs.divisors.len(), cd.divisors.len());
    assert_eq!(cs.molecules.len(), cd.molecules.len());

    // The over-lattices are isomorphic, and indices are preserved because
    // both quotients by the target present the same finite ring.
    let hs: BTreeSet<u128> = cs.overideals.iter().map(|i| i.index()).collect();
    let hd: BTreeSet<u128> = cd.overideals.iter().map(|i| i.index()).collect();
    assert_eq!(hs, hd);

    let fs = molecularize(&shallow.ambient.target, LIM).unwrap();
    let fd = molecularize(&deep.ambient.target, LIM).unwrap();
    assert!(fs.finite && fd.finite);
    let ps: BTreeSet<Vec<u128>> = fs.molecularizations.iter().map(|m| profile(m)).collect();
    let pd: BTreeSet<Vec<u128>> = fd.molecularizations.iter().map(|m| profile(m)).collect();
    assert_eq!(fs.molecularizations.len(), fd.molecularizations.len());
    assert_eq!(ps, pd);
}

#[test]
fn dplusm_census_survives_deeper_truncation() {
    // Depth 6 and depth 8 models of the same subring; the target is the
    // power of the maximal ideal at the matching level, so its over-lattice
    // and molecule census must agree.
    let opts = BuildOptions::default();
    let shallow = build_dplusm_model(2, 1, 2, 6, &opts).unwrap();
    let deep = build_dplusm_model(2, 1, 2, 8, &opts).unwrap();
    assert_eq!(shallow.level, 3);
    assert_eq!(deep.level, 4);

    // Compare at the shallow model's level: rebuild t³·K[t] inside the deep
    // model.  Products of ideals above it stay faithful there because its
    // square already contains the deeper kernel.
    assert_eq!(level_ideal(&shallow, 3), shallow.ambient.target);
    let m_deep = level_ideal(&deep, 3);
    let cs = divisor_census(&shallow.ambient.target, LIM).unwrap();
    let cd = divisor_census(&m_deep, LIM).unwrap();
    assert_eq!(cs.overideals.len(), cd.overideals.len());
    assert_eq!(cs.divisors.len(), cd.divisors.len());
    assert_eq!(cs.molecules.len(), cd.molecules.len());
    let hs: BTreeSet<u128> = cs.overideals.iter().map(|i| i.index()).collect();
    let hd: BTreeSet<u128> = cd.overideals.iter().map(|i| i.index()).collect();
    assert_eq!(hs, hd);
}
