//! Law checks over finite rings and certified ambients.
//!
//! Each check states an identity or equivalence that holds in every finite
//! commutative ring; running a suite samples and enumerates ideals and
//! reports violations as printable data, never as errors or panics, so
//! callers can render them.  Sampling is driven by a deterministic splitmix
//! generator: the same seed and trial count always examine the same cases.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::factor::{
    divides, divisor_census, is_molecule, is_unit_cancellative, molecularize, Ambient,
};
use crate::ideal::{
    all_ideals, dedupe, enumerate_overideals, is_maximal, is_primary, is_prime,
    local_decomposition, quotient_by_ideal, Ideal,
};
use crate::ring::{Ring, RingElement};
use crate::Error;

/// Largest ring whose ideal lattice is enumerated exhaustively for the pool;
/// bigger rings fall back to the target's over-lattice plus random ideals.
const POOL_ENUM_LIMIT: u128 = 1 << 12;
/// Largest index for which per-ideal over-lattice checks run.
const WITNESS_CAP: u128 = 1 << 10;
/// Largest ring on which the local-decomposition checks run.
const LOCAL_CAP: u128 = 1 << 16;
/// Violations recorded per check before only counting.
const MAX_VIOLATIONS: usize = 8;

/// Deterministic 64-bit generator (splitmix), tiny and portable so suite
/// runs reproduce bit-for-bit everywhere.
#[derive(Debug, Clone)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }
}

/// One law, how many cases were examined, and every violation found
/// (capped at [`MAX_VIOLATIONS`] descriptions; `violation_count` keeps the
/// true total).
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome { name, cases: 0, violation_count: 0, violations: Vec::new() }
    }

    fn violate(&mut self, description: String) {
        self.violation_count += 1;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(description);
        }
    }
}

/// Outcome of a full suite run over one ring or ambient.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub label: String,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violation_count == 0)
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.iter().map(|c| c.violation_count).sum()
    }
}

fn show(i: &Ideal) -> String {
    let gens = i.generators();
    if gens.is_empty() {
        return String::from("(0)");
    }
    let parts: Vec<String> = gens
        .iter()
        .map(|g| {
            let cs: Vec<String> = g.coords().iter().map(|c| format!("{c}")).collect();
            format!("[{}]", cs.join(","))
        })
        .collect();
    format!("({})", parts.join(","))
}

fn random_element(r: &Ring, rng: &mut SplitMix64) -> RingElement {
    let coords: Vec<u64> = r.orders().iter().map(|&d| rng.below(d)).collect();
    r.element_from_coords(coords).expect("sampled coordinates are in range")
}

fn pick<'a>(pool: &'a [Ideal], rng: &mut SplitMix64) -> &'a Ideal {
    &pool[rng.below(pool.len() as u64) as usize]
}

/// The ideals a suite run works with: every ideal when the ring is small
/// enough, otherwise the target's over-lattice plus seeded random ideals.
fn ideal_pool(
    r: &Ring,
    target: Option<&Ideal>,
    trials: u32,
    rng: &mut SplitMix64,
    limit: u64,
) -> Result<Vec<Ideal>, Error> {
    let mut pool: Vec<Ideal> = if r.size() <= POOL_ENUM_LIMIT {
        all_ideals(r, limit)?
    } else {
        let mut v = Vec::new();
        v.push(Ideal::zero(r));
        v.push(Ideal::unit(r));
        if let Some(t) = target {
            v.extend(enumerate_overideals(t, limit)?);
        }
        for _ in 0..trials.max(8) {
            let a = random_element(r, rng);
            let b = random_element(r, rng);
            v.push(Ideal::generated(r, core::slice::from_ref(&a))?);
            v.push(Ideal::generated(r, &[a, b])?);
        }
        v
    };
    // `dedupe` also sorts, so pool order is canonical and seed-independent
    // whenever the same ideals get generated.
    pool = dedupe(pool);
    Ok(pool)
}

fn check_containment_sandwich(
    pool: &[Ideal],
    trials: u32,
    rng: &mut SplitMix64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("containment_sandwich");
    for _ in 0..trials {
        let i = pick(pool, rng);
        let j = pick(pool, rng);
        out.cases += 1;
        let p = i.product(j)?;
        let m = i.intersect(j)?;
        let s = i.sum(j)?;
        if !m.contains(&p)? || !i.contains(&m)? || !j.contains(&m)? || !s.contains(i)? {
            out.violate(format!(
                "I={} J={}: expected IJ ⊆ I∩J ⊆ I,J ⊆ I+J",
                show(i),
                show(j)
            ));
        }
    }
    Ok(out)
}

fn check_colon_extremal(
    pool: &[Ideal],
    trials: u32,
    rng: &mut SplitMix64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("colon_is_extreme_cofactor");
    for _ in 0..trials {
        let i = pick(pool, rng);
        let j = pick(pool, rng);
        let k = pick(pool, rng);
        out.cases += 1;
        let c = i.colon(j)?;
        if !i.contains(&j.product(&c)?)? {
            out.violate(format!("I={} J={}: J·(I:J) ⊄ I", show(i), show(j)));
            continue;
        }
        if i.contains(&j.product(k)?)? && !c.contains(k)? {
            out.violate(format!(
                "I={} J={} K={}: J·K ⊆ I but K ⊄ (I:J)",
                show(i),
                show(j),
                show(k)
            ));
        }
    }
    Ok(out)
}

fn check_divides_witness(
    pool: &[Ideal],
    trials: u32,
    rng: &mut SplitMix64,
    limit: u64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("divides_iff_lattice_witness");
    for _ in 0..trials {
        let i = pick(pool, rng);
        let j = pick(pool, rng);
        if i.is_zero() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        let fast = divides(j, i)?;
        let mut witness = false;
        for k in enumerate_overideals(i, limit)? {
            if j.product(&k)? == *i {
                witness = true;
                break;
            }
        }
        if fast != witness {
            out.violate(format!(
                "I={} J={}: divides={fast} but lattice witness={witness}",
                show(i),
                show(j)
            ));
        }
    }
    Ok(out)
}

fn check_molecule_equivalence(
    pool: &[Ideal],
    limit: u64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("molecule_iff_cancellative_and_unsplit");
    for i in pool {
        if i.is_zero() || !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        let fast = is_molecule(i, limit)?;
        let uc = is_unit_cancellative(i, limit)?;
        let over = enumerate_overideals(i, limit)?;
        let mut split = false;
        'outer: for j in &over {
            if !j.is_proper() || j == i {
                continue;
            }
            for k in &over {
                if k.is_proper() && k != i && j.product(k)? == *i {
                    split = true;
                    break 'outer;
                }
            }
        }
        if fast != (uc && !split) {
            out.violate(format!(
                "I={}: molecule={fast}, cancellative={uc}, nontrivial split={split}",
                show(i)
            ));
        }
    }
    Ok(out)
}

fn check_cancellative_primes(pool: &[Ideal], limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("cancellative_primes_are_molecules");
    for i in pool {
        if i.is_zero() || !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        if is_prime(i, limit)?
            && is_unit_cancellative(i, limit)?
            && !is_molecule(i, limit)?
        {
            out.violate(format!("I={}: cancellative prime but compound", show(i)));
        }
    }
    Ok(out)
}

fn check_maximal_molecules(pool: &[Ideal], limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("maximal_molecule_iff_nonidempotent");
    for i in pool {
        if i.is_zero() || !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        if !is_maximal(i, limit)? {
            continue;
        }
        out.cases += 1;
        let molecule = is_molecule(i, limit)?;
        let idem = i.is_idempotent()?;
        if molecule != !idem {
            out.violate(format!(
                "maximal I={}: molecule={molecule} but idempotent={idem}",
                show(i)
            ));
        }
    }
    Ok(out)
}

fn check_comaximal_absorption(
    pool: &[Ideal],
    trials: u32,
    rng: &mut SplitMix64,
    limit: u64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("comaximal_factors_enter_molecules");
    let mut molecules: Vec<&Ideal> = Vec::new();
    for i in pool {
        if !i.is_zero() && i.is_proper() && i.index() <= WITNESS_CAP && is_molecule(i, limit)? {
            molecules.push(i);
        }
    }
    if molecules.is_empty() {
        return Ok(out);
    }
    for _ in 0..trials {
        let m = molecules[rng.below(molecules.len() as u64) as usize];
        let j = pick(pool, rng);
        let k = pick(pool, rng);
        if !j.sum(k)?.is_proper() {
            // J and K comaximal.
            out.cases += 1;
            if m.contains(&j.product(k)?)? && !m.contains(j)? && !m.contains(k)? {
                out.violate(format!(
                    "molecule M={} J={} K={}: JK ⊆ M but neither factor is",
                    show(m),
                    show(j),
                    show(k)
                ));
            }
        }
    }
    Ok(out)
}

fn check_molecules_primary(pool: &[Ideal], limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("molecules_are_primary");
    for i in pool {
        if i.is_zero() || !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        if is_molecule(i, limit)? && !is_primary(i, limit)? {
            out.violate(format!("I={}: molecule but not primary", show(i)));
        }
    }
    Ok(out)
}

fn check_prime_iff_maximal(pool: &[Ideal], limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("prime_iff_maximal");
    for i in pool {
        if !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        let p = is_prime(i, limit)?;
        let m = is_maximal(i, limit)?;
        if p != m {
            out.violate(format!("I={}: prime={p} maximal={m}", show(i)));
        }
    }
    Ok(out)
}

fn check_overideals_match_quotient(pool: &[Ideal], limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("overideal_count_matches_quotient");
    for i in pool {
        if i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        let direct = enumerate_overideals(i, limit)?.len();
        let q = quotient_by_ideal(i.ring(), i)?;
        let through = all_ideals(&q.ring, limit)?.len();
        if direct != through {
            out.violate(format!(
                "I={}: {direct} over-ideals but {through} ideals in R/I",
                show(i)
            ));
        }
    }
    Ok(out)
}

fn check_local_census(
    r: &Ring,
    pool: &[Ideal],
    trials: u32,
    rng: &mut SplitMix64,
    limit: u64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("census_multiplies_over_local_factors");
    if r.size() > LOCAL_CAP || r.is_zero_ring() {
        return Ok(out);
    }
    let factors = local_decomposition(r, limit)?;
    for _ in 0..trials.min(8) {
        let i = pick(pool, rng);
        if i.is_zero() || !i.is_proper() || i.index() > WITNESS_CAP {
            continue;
        }
        out.cases += 1;
        let global = divisor_census(i, limit)?;
        let mut div_product: usize = 1;
        let mut mol_sum: usize = 0;
        for f in &factors {
            let gens: Vec<RingElement> = i
                .generators()
                .iter()
                .map(|g| f.projection.apply(g))
                .collect::<Result<_, _>>()?;
            let image = Ideal::generated(&f.ring, &gens)?;
            let local = divisor_census(&image, limit)?;
            div_product *= local.divisors.len();
            mol_sum += local.molecules.len();
        }
        if global.divisors.len() != div_product || global.molecules.len() != mol_sum {
            out.violate(format!(
                "I={}: global census (divisors {}, molecules {}) vs local (∏ {}, Σ {})",
                show(i),
                global.divisors.len(),
                global.molecules.len(),
                div_product,
                mol_sum
            ));
        }
    }
    Ok(out)
}

fn check_crt_separation(
    r: &Ring,
    trials: u32,
    rng: &mut SplitMix64,
    limit: u64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("crt_separates_elements");
    if r.size() > LOCAL_CAP || r.is_zero_ring() {
        return Ok(out);
    }
    let factors = local_decomposition(r, limit)?;
    for _ in 0..trials {
        let x = random_element(r, rng);
        let y = random_element(r, rng);
        if x == y {
            continue;
        }
        out.cases += 1;
        let mut separated = false;
        for f in &factors {
            if f.projection.apply(&x)? != f.projection.apply(&y)? {
                separated = true;
                break;
            }
        }
        if !separated {
            out.violate(format!(
                "elements {:?} and {:?} agree in every local factor",
                x.coords(),
                y.coords()
            ));
        }
    }
    Ok(out)
}

fn check_presentation_invariance(
    r: &Ring,
    trials: u32,
    rng: &mut SplitMix64,
) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("canonical_form_ignores_presentation");
    if r.is_zero_ring() {
        return Ok(out);
    }
    for _ in 0..trials {
        let a = random_element(r, rng);
        let b = random_element(r, rng);
        let m = random_element(r, rng);
        out.cases += 1;
        let base = Ideal::generated(r, &[a.clone(), b.clone()])?;
        // Reordered, duplicated, and closed up by a multiple of a generator.
        let noisy = Ideal::generated(r, &[b.clone(), r.mul(&m, &a)?, a.clone(), b.clone()])?;
        if base != noisy {
            out.violate(format!(
                "generators {:?}, {:?} (multiplier {:?}): canonical forms differ",
                a.coords(),
                b.coords(),
                m.coords()
            ));
        }
    }
    Ok(out)
}

fn check_target_descent_bound(target: &Ideal, limit: u64) -> Result<CheckOutcome, Error> {
    let mut out = CheckOutcome::new("target_factorizations_respect_descent_bound");
    if target.is_zero() || !target.is_proper() || target.index() > WITNESS_CAP {
        return Ok(out);
    }
    let rep = molecularize(target, limit)?;
    if !rep.finite {
        return Ok(out);
    }
    for ms in &rep.molecularizations {
        out.cases += 1;
        if ms.len() as u32 > rep.depth_bound {
            out.violate(format!(
                "target {}: {} factors exceeds bound {}",
                show(target),
                ms.len(),
                rep.depth_bound
            ));
        }
        let mut prod = Ideal::unit(target.ring());
        for m in ms {
            prod = prod.product(m)?;
        }
        if prod != *target {
            out.violate(format!("target {}: reported multiset does not multiply back", show(target)));
        }
    }
    Ok(out)
}

fn suite_impl(
    r: &Ring,
    target: Option<&Ideal>,
    label: &str,
    seed: u64,
    trials: u32,
    limit: u64,
) -> Result<PropertyReport, Error> {
    let mut rng = SplitMix64::new(seed);
    let pool = ideal_pool(r, target, trials, &mut rng, limit)?;
    // Every check draws from its own stream so adding or reordering checks
    // never changes what the others examine.
    let stream = |tag: u64| SplitMix64::new(seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15));

    let mut checks = Vec::new();
    checks.push(check_containment_sandwich(&pool, trials, &mut stream(1))?);
    checks.push(check_colon_extremal(&pool, trials, &mut stream(2))?);
    checks.push(check_divides_witness(&pool, trials, &mut stream(3), limit)?);
    checks.push(check_molecule_equivalence(&pool, limit)?);
    checks.push(check_cancellative_primes(&pool, limit)?);
    checks.push(check_maximal_molecules(&pool, limit)?);
    checks.push(check_comaximal_absorption(&pool, trials, &mut stream(4), limit)?);
    checks.push(check_molecules_primary(&pool, limit)?);
    checks.push(check_prime_iff_maximal(&pool, limit)?);
    checks.push(check_overideals_match_quotient(&pool, limit)?);
    checks.push(check_local_census(r, &pool, trials, &mut stream(5), limit)?);
    checks.push(check_crt_separation(r, trials, &mut stream(6), limit)?);
    checks.push(check_presentation_invariance(r, trials, &mut stream(7))?);
    if let Some(t) = target {
        checks.push(check_target_descent_bound(t, limit)?);
    }
    Ok(PropertyReport { label: String::from(label), seed, checks })
}

/// Runs every law check over the ambient's ring, pooling its full ideal
/// lattice when small and the target's over-lattice otherwise, plus the
/// target-specific factorization checks.
pub fn property_suite(
    amb: &Ambient,
    seed: u64,
    trials: u32,
    limit: u64,
) -> Result<PropertyReport, Error> {
    suite_impl(&amb.ring, Some(&amb.target), &amb.label, seed, trials, limit)
}

/// Runs the ring-level law checks over a bare ring.
pub fn property_suite_ring(
    r: &Ring,
    label: &str,
    seed: u64,
    trials: u32,
    limit: u64,
) -> Result<PropertyReport, Error> {
    suite_impl(r, None, label, seed, trials, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_integers, BuildOptions};
    use crate::ring::{make_gf, make_zmod, poly_quotient};
    use std::prelude::rust_2021::*;

    const LIM: u64 = 1 << 16;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        // Frozen reference values for the standard stream.
        let mut c = SplitMix64::new(0);
        assert_eq!(c.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(c.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn suite_is_clean_on_modular_rings() {
        for n in [6u64, 12, 16, 36, 100] {
            let r = make_zmod(n).unwrap();
            let rep = property_suite_ring(&r, "zmod", 0, 24, LIM).unwrap();
            assert!(
                rep.passed(),
                "n={n}: {:?}",
                rep.checks
                    .iter()
                    .filter(|c| c.violation_count > 0)
                    .map(|c| (c.name, &c.violations))
                    .collect::<Vec<_>>()
            );
            assert!(rep.total_cases() > 0);
        }
    }

    #[test]
    fn suite_is_clean_on_a_split_ring_with_idempotents() {
        // F₂×F₂ has an idempotent maximal ideal; the laws still hold, the
        // behaviors just land on the other side of each equivalence.
        let f2 = make_gf(2, 1).unwrap();
        let split = poly_quotient(&f2, &[f2.zero(), f2.one(), f2.one()]).unwrap();
        let rep = property_suite_ring(&split, "f2xf2", 0, 48, LIM).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
    }

    #[test]
    fn suite_is_clean_on_an_ambient_and_reproducible() {
        let amb = build_integers(12, &BuildOptions::default()).unwrap();
        let a = property_suite(&amb, 7, 24, LIM).unwrap();
        assert!(a.passed());
        let b = property_suite(&amb, 7, 24, LIM).unwrap();
        for (x, y) in a.checks.iter().zip(&b.checks) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.cases, y.cases);
            assert_eq!(x.violation_count, y.violation_count);
        }
    }

    #[test]
    fn suite_flags_a_false_law() {
        // Sanity-check the reporting path itself: run the maximal/molecule
        // check against a hand-broken expectation by asserting a suite on a
        // ring with an idempotent maximal ideal would have flagged the naive
        // "every maximal ideal is a molecule" claim.
        let r = make_zmod(6).unwrap();
        let two = Ideal::generated(&r, &[r.from_integer(2)]).unwrap();
        assert!(is_maximal(&two, LIM).unwrap());
        assert!(two.is_idempotent().unwrap());
        assert!(!is_molecule(&two, LIM).unwrap());
    }
}
