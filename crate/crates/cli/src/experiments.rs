//! The named experiments: each builds its own certified ambient from a
//! small parameter set, runs one headline computation, and re-verifies the
//! expected structure from inside the model.

use std::collections::BTreeSet;

use molec_core::construct::{
    build_cusp_model, build_dedekind_poly_model, build_dplusm_model, build_integers,
    build_quadratic, build_zx_ideal, BuildOptions,
};
use molec_core::factor::{is_molecule, molecularize, Ambient};
use molec_core::ideal::{enumerate_overideals, is_primary, is_prime, Ideal};
use molec_core::ring::{Ring, RingElement};
use molec_core::Error;

use crate::report::{ExperimentReport, LevelJson};

/// Optional per-experiment parameters; each experiment reads the ones it
/// understands and fills in its canonical defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExperimentArgs {
    pub n: Option<u64>,
    pub q: Option<u64>,
    pub p: Option<u64>,
    pub trunc: Option<usize>,
    pub d: Option<i64>,
}

impl ExperimentReport {
    /// Whether the experiment's expected structure was confirmed.
    pub fn passed(&self) -> bool {
        match self {
            ExperimentReport::Butts { unique, all_factors_prime, .. } => {
                *unique && *all_factors_prime
            }
            ExperimentReport::Theorem10 { all_contain_target, matches_field_size, .. } => {
                *all_contain_target && *matches_field_size
            }
            ExperimentReport::Prop13_3 { molecule, primary, prime, .. } => {
                *molecule && *primary && !*prime
            }
            ExperimentReport::DedekindPoly {
                irreducible_target_is_molecule,
                reducible_target_is_compound,
                witness_product_matches,
                ..
            } => {
                *irreducible_target_is_molecule
                    && *reducible_target_is_compound
                    && *witness_product_matches
            }
            ExperimentReport::DPlusM {
                classification_complete, level_one_all_molecules, ..
            } => *classification_complete && *level_one_all_molecules,
            ExperimentReport::Quadratic {
                molecularizations,
                doubled_factor_squares_to_two,
                split_pair_multiplies_to_three,
                all_factors_prime,
                ..
            } => {
                *molecularizations == 1
                    && *doubled_factor_squares_to_two
                    && *split_pair_multiplies_to_three
                    && *all_factors_prime
            }
        }
    }
}

pub const EXPERIMENT_NAMES: [&str; 6] =
    ["butts", "theorem10", "prop13-3", "dedekind-poly", "dplusm", "quadratic"];

/// Runs the experiment `name`, returning the ambient it reported on and
/// the findings.
pub fn run_experiment(
    name: &str,
    args: &ExperimentArgs,
    opts: &BuildOptions,
    limit: u64,
) -> Result<(Ambient, ExperimentReport), Error> {
    match name {
        "butts" => butts(args.n.unwrap_or(12), opts, limit),
        "theorem10" => theorem10(args.q.unwrap_or(2), opts, limit),
        "prop13-3" => prop13_3(args.p.unwrap_or(2), opts, limit),
        "dedekind-poly" => dedekind_poly(args.p.unwrap_or(2), opts, limit),
        "dplusm" => dplusm(args.trunc.unwrap_or(6), opts, limit),
        "quadratic" => quadratic(args.d.unwrap_or(-5), opts, limit),
        other => Err(Error::PreconditionViolation(format!(
            "unknown experiment \"{other}\"; expected one of {}",
            EXPERIMENT_NAMES.join(", ")
        ))),
    }
}

/// Factor (n) in the integer model; in a principal-ideal chain ring every
/// divisor is (d) with d = its index, so molecules are labeled "(d)".
fn butts(n: u64, opts: &BuildOptions, limit: u64) -> Result<(Ambient, ExperimentReport), Error> {
    let amb = build_integers(n, opts)?;
    let rep = molecularize(&amb.target, limit)?;
    let factors: Vec<String> = rep
        .molecularizations
        .first()
        .map(|ms| ms.iter().map(|i| format!("({})", i.index())).collect())
        .unwrap_or_default();
    let mut all_prime = true;
    for m in &rep.census.molecules {
        if !is_prime(m, limit)? {
            all_prime = false;
        }
    }
    let report = ExperimentReport::Butts {
        n,
        molecularizations: rep.molecularizations.len(),
        factors,
        unique: rep.finite && rep.molecularizations.len() == 1,
        all_factors_prime: all_prime,
    };
    Ok((amb, report))
}

fn prime_power(q: u64) -> Result<(u64, usize), Error> {
    if q < 2 {
        return Err(Error::PreconditionViolation("q must be a prime power ≥ 2".into()));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut k = 0;
    let mut m = q;
    while m > 1 {
        if m % p != 0 {
            return Err(Error::PreconditionViolation(format!(
                "q = {q} is not a prime power"
            )));
        }
        m /= p;
        k += 1;
    }
    Ok((p, k))
}

/// Count the ideals (X² + bX³, X⁴) of the cusp model as b runs over the
/// q-element coefficient field: one per field element, all above (X⁴).
fn theorem10(q: u64, opts: &BuildOptions, _limit: u64) -> Result<(Ambient, ExperimentReport), Error> {
    let (p, k) = prime_power(q)?;
    let model = build_cusp_model(p, k, 10, &[4], opts)?;
    let v = &model.truncation;
    let d = &model.ambient.ring;
    let pre = |y: &RingElement| -> Result<RingElement, Error> {
        model.inclusion.preimage(y)?.ok_or_else(|| {
            Error::InvalidPresentation("monomial missing from the cusp subring".into())
        })
    };
    let x4 = pre(&v.basis_element(4 * k))?;
    let mut ideals: BTreeSet<Ideal> = BTreeSet::new();
    let field = make_field_elements(p, k)?;
    for b in field {
        // X² + b·X³ in the truncation, then pulled back into the model.
        let mut e = v.basis_element(2 * k);
        for (i, &c) in b.iter().enumerate() {
            let term = v.scalar_mul(c as i128, &v.basis_element(3 * k + i))?;
            e = v.add(&e, &term)?;
        }
        ideals.insert(Ideal::generated(d, &[pre(&e)?, x4.clone()])?);
    }
    let mut all_contain = true;
    for i in &ideals {
        if !i.contains(&model.ambient.target)? {
            all_contain = false;
        }
    }
    let report = ExperimentReport::Theorem10 {
        q,
        shape_count: ideals.len(),
        all_contain_target: all_contain,
        matches_field_size: ideals.len() as u64 == q,
    };
    Ok((model.ambient, report))
}

/// Coordinate vectors of every element of F_{p^k}.
fn make_field_elements(p: u64, k: usize) -> Result<Vec<Vec<u64>>, Error> {
    let field = molec_core::ring::make_gf(p, k)?;
    Ok(field.elements().map(|e| e.coords().to_vec()).collect())
}

/// Certify (X², p²) in the polynomial-ideal model: molecule, primary, not
/// prime.
fn prop13_3(p: u64, opts: &BuildOptions, limit: u64) -> Result<(Ambient, ExperimentReport), Error> {
    let amb = build_zx_ideal(p, 2, opts)?;
    let report = ExperimentReport::Prop13_3 {
        p,
        molecule: is_molecule(&amb.target, limit)?,
        primary: is_primary(&amb.target, limit)?,
        prime: is_prime(&amb.target, limit)?,
    };
    Ok((amb, report))
}

/// Contrast (p, X²) with (p, X²+X): the first has irreducible X, the second
/// splits as (p, X)·(p, X+1).
fn dedekind_poly(
    p: u64,
    opts: &BuildOptions,
    limit: u64,
) -> Result<(Ambient, ExperimentReport), Error> {
    let irreducible = build_dedekind_poly_model(p, &[0, 1], 2, false, opts)?;
    let molecule = is_molecule(&irreducible.ambient.target, limit)?;

    let reducible = build_dedekind_poly_model(p, &[0, 1, 1], 1, true, opts)?;
    let compound = !is_molecule(&reducible.ambient.target, limit)?;
    // The witness pair, built in the covering presentation and pushed down.
    let cover = &reducible.cover;
    let proj = &reducible.projection;
    let x = cover.basis_element(1);
    let x1 = cover.add(&x, &cover.one())?;
    let pe = cover.from_integer(p as i128);
    let down = |els: &[RingElement]| -> Result<Ideal, Error> {
        let gens: Vec<RingElement> =
            els.iter().map(|e| proj.apply(e)).collect::<Result<_, _>>()?;
        Ideal::generated(&reducible.ambient.ring, &gens)
    };
    let j = down(&[pe.clone(), x])?;
    let k = down(&[pe, x1])?;
    let witness = j.product(&k)? == reducible.ambient.target;

    let report = ExperimentReport::DedekindPoly {
        p,
        irreducible_target_is_molecule: molecule,
        reducible_target_is_compound: compound,
        witness_product_matches: witness,
    };
    Ok((irreducible.ambient, report))
}

/// Classify every ideal above the principal (t^m) in the pullback-order
/// model D + t·K[t] (D = F₂ ⊆ K = F₄, m = ⌈N/2⌉): besides the ring itself,
/// each is t^j·F + t^{j+1}·K[t] for a nonzero D-subspace F of K.
fn dplusm(
    trunc: usize,
    opts: &BuildOptions,
    limit: u64,
) -> Result<(Ambient, ExperimentReport), Error> {
    let model = build_dplusm_model(2, 1, 2, trunc, opts)?;
    let v = &model.truncation;
    let r = &model.ambient.ring;
    let kk = model.field_rank;
    let level = model.level;
    let pre = |y: &RingElement| -> Result<RingElement, Error> {
        model.inclusion.preimage(y)?.ok_or_else(|| {
            Error::InvalidPresentation("t-power missing from the subring".into())
        })
    };

    // t^j·β for β given by K-coordinates.
    let tpow = |j: usize, beta: &[u64]| -> Result<RingElement, Error> {
        let mut e = v.zero();
        for (i, &c) in beta.iter().enumerate() {
            let term = v.scalar_mul(c as i128, &v.basis_element(j * kk + i))?;
            e = v.add(&e, &term)?;
        }
        pre(&e)
    };

    // The nonzero F₂-subspaces of F₄ by bases: three lines and the plane.
    let subspaces: [&[&[u64]]; 4] =
        [&[&[1, 0]], &[&[0, 1]], &[&[1, 1]], &[&[1, 0], &[0, 1]]];

    let princ = Ideal::generated(r, &[tpow(level, &[1, 0])?])?;
    let over = enumerate_overideals(&princ, limit)?;

    // Candidate strata t^j·F + t^{j+1}·K[t].
    let mut strata: Vec<(usize, Ideal)> = Vec::new();
    for j in 1..=level {
        for f in subspaces {
            let mut gens: Vec<RingElement> = Vec::new();
            for beta in f {
                gens.push(tpow(j, beta)?);
            }
            if j + 1 < trunc {
                for i in 0..kk {
                    let mut beta = vec![0u64; kk];
                    beta[i] = 1;
                    gens.push(tpow(j + 1, &beta)?);
                }
            }
            strata.push((j, Ideal::generated(r, &gens)?));
        }
    }

    let mut levels: Vec<LevelJson> = (1..=level).map(|l| LevelJson { level: l, count: 0 }).collect();
    let mut complete = true;
    for i in &over {
        if !i.is_proper() {
            continue;
        }
        match strata.iter().find(|(_, s)| s == i) {
            Some((j, _)) => levels[*j - 1].count += 1,
            None => complete = false,
        }
    }

    let mut level_one = true;
    for (j, s) in &strata {
        if *j == 1 && !is_molecule(s, limit)? {
            level_one = false;
        }
    }

    let report = ExperimentReport::DPlusM {
        trunc,
        overideal_count: over.len(),
        classification_complete: complete,
        levels,
        level_one_all_molecules: level_one,
    };
    Ok((model.ambient, report))
}

/// Factor (6) in ℤ[√d] and re-verify the classical splitting: the doubled
/// factor squares to (2), the split pair multiplies to (3).
fn quadratic(d: i64, opts: &BuildOptions, limit: u64) -> Result<(Ambient, ExperimentReport), Error> {
    let amb = build_quadratic(d, &[(6, 0)], opts)?;
    let rep = molecularize(&amb.target, limit)?;
    let first = rep.molecularizations.first();

    let mut doubled_squares = false;
    let mut pair_multiplies = false;
    let mut indices: Vec<u64> = Vec::new();
    if let Some(ms) = first {
        indices = ms.iter().map(|i| i.index() as u64).collect();
        indices.sort();
        let two = principal_int(&amb.ring, 2)?;
        let three = principal_int(&amb.ring, 3)?;
        let doubled: Vec<&Ideal> =
            ms.iter().filter(|i| ms.iter().filter(|j| j == i).count() == 2).collect();
        let singles: Vec<&Ideal> =
            ms.iter().filter(|i| ms.iter().filter(|j| j == i).count() == 1).collect();
        if doubled.len() == 2 && singles.len() == 2 {
            doubled_squares = doubled[0].product(doubled[1])? == two;
            pair_multiplies = singles[0].product(singles[1])? == three;
        }
    }
    let mut all_prime = true;
    for m in rep.molecularizations.iter().flatten() {
        if !is_prime(m, limit)? {
            all_prime = false;
        }
    }

    let report = ExperimentReport::Quadratic {
        d,
        molecularizations: rep.molecularizations.len(),
        factor_count: first.map(|ms| ms.len()).unwrap_or(0),
        factor_indices: indices,
        doubled_factor_squares_to_two: doubled_squares,
        split_pair_multiplies_to_three: pair_multiplies,
        all_factors_prime: all_prime,
    };
    Ok((amb, report))
}

fn principal_int(r: &Ring, c: i128) -> Result<Ideal, Error> {
    Ideal::generated(r, &[r.from_integer(c)])
}
