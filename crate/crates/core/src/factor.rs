//! Factorization of ideals into molecules.
//!
//! A molecule is a nonzero proper ideal that admits no factorization into
//! two proper ideals. `molecularize` enumerates every multiset of molecules
//! whose product is the target. Termination rests on one fact: if no ideal
//! above the target absorbs a proper factor (P·M = P), then each split
//! strictly increases the additive index of the cofactor, so search depth
//! is bounded by log₂ of the target's index. The absorber precheck is
//! complete because P = P·M forces P ⊆ M, placing both members of any
//! absorbing pair inside the searched lattice.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ideal::{enumerate_overideals, Ideal};
use crate::ring::Ring;
use crate::Error;

/// J divides I exactly when J·(I : J) = I; any witness cofactor K can be
/// enlarged to the colon ideal without changing the product.
pub fn divides(j: &Ideal, i: &Ideal) -> Result<bool, Error> {
    let c = i.colon(j)?;
    Ok(j.product(&c)? == *i)
}

/// The lattice above a target, its divisors, and the molecule divisors.
#[derive(Debug, Clone)]
pub struct Census {
    pub overideals: Vec<Ideal>,
    pub divisors: Vec<Ideal>,
    pub molecules: Vec<Ideal>,
}

/// A pair P = P·M with P nonzero and M proper: the obstruction to
/// termination of factorization searches.
#[derive(Debug, Clone)]
pub struct AbsorberWitness {
    pub stable: Ideal,
    pub absorber: Ideal,
}

/// Scans a lattice for an absorbing pair, in canonical order.
pub fn find_absorber(lattice: &[Ideal]) -> Result<Option<AbsorberWitness>, Error> {
    for m in lattice {
        if !m.is_proper() {
            continue;
        }
        for p in lattice {
            if p.is_zero() {
                continue;
            }
            if p.product(m)? == *p {
                return Ok(Some(AbsorberWitness { stable: p.clone(), absorber: m.clone() }));
            }
        }
    }
    Ok(None)
}

/// Unit-cancellativity of I over its own lattice: no proper J ⊇ I may
/// satisfy I·J = I. (Only factors containing I are consulted, which is the
/// fragment the exactness bridge makes sound; it is also all the
/// factorization search ever needs.)
pub fn is_unit_cancellative(i: &Ideal, limit: u64) -> Result<bool, Error> {
    if i.is_zero() {
        return Err(Error::PreconditionViolation(
            "unit-cancellativity is defined for nonzero ideals".into(),
        ));
    }
    for j in enumerate_overideals(i, limit)? {
        if j.is_proper() && i.product(&j)? == *i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Molecule test against an explicit list of candidate factors: every
/// factorization J = K·L has K, L ⊇ J, so a lattice containing all
/// over-ideals of J decides the question.
fn is_compound_in(j: &Ideal, lattice: &[Ideal]) -> Result<bool, Error> {
    for k in lattice {
        if !k.is_proper() || !k.contains(j)? {
            continue;
        }
        if k == j {
            // Factorizations j = j·C: the cofactor cannot be enlarged to
            // the colon (j : j) = R here, but j = j·C forces j ⊆ C, so any
            // witness is itself in the lattice and a direct scan is
            // complete.  This is exactly a unit-cancellativity failure.
            for c in lattice {
                if c.is_proper() && j.product(c)? == *j {
                    return Ok(true);
                }
            }
        } else {
            let l = j.colon(k)?;
            if l.is_proper() && k.product(&l)? == *j {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether I is a molecule: nonzero, proper, and not a product of two
/// proper ideals.
pub fn is_molecule(i: &Ideal, limit: u64) -> Result<bool, Error> {
    if i.is_zero() || !i.is_proper() {
        return Ok(false);
    }
    let over = enumerate_overideals(i, limit)?;
    Ok(!is_compound_in(i, &over)?)
}

/// Over-ideals, divisors, and molecule divisors of the target.
pub fn divisor_census(target: &Ideal, limit: u64) -> Result<Census, Error> {
    let over = enumerate_overideals(target, limit)?;
    let mut divisors = Vec::new();
    let mut molecules = Vec::new();
    for j in &over {
        if divides(j, target)? {
            divisors.push(j.clone());
            if j.is_proper() && !is_compound_in(j, &over)? {
                molecules.push(j.clone());
            }
        }
    }
    Ok(Census { overideals: over, divisors, molecules })
}

/// Everything `molecularize` learned about a target.
#[derive(Debug, Clone)]
pub struct FactorReport {
    /// Every multiset of molecules with product equal to the target, each
    /// sorted canonically; empty when the search was skipped (see `finite`).
    pub molecularizations: Vec<Vec<Ideal>>,
    /// False when an absorbing pair was found, in which case factorization
    /// chains need not terminate and no enumeration is attempted.
    pub finite: bool,
    pub absorber: Option<AbsorberWitness>,
    /// No molecularization can have more factors than this.
    pub depth_bound: u32,
    pub census: Census,
}

struct SearchCtx {
    over: Vec<Ideal>,
    contains: Vec<Vec<bool>>,
    molecule: Vec<bool>,
    unit_idx: usize,
}

fn product_rows(
    ctx: &SearchCtx,
    cache: &mut BTreeMap<(usize, usize), Vec<Vec<u64>>>,
    a: usize,
    b: usize,
) -> Result<Vec<Vec<u64>>, Error> {
    let key = (a.min(b), a.max(b));
    if let Some(rows) = cache.get(&key) {
        return Ok(rows.clone());
    }
    let p = ctx.over[key.0].product(&ctx.over[key.1])?;
    let rows = p.rows().to_vec();
    cache.insert(key, rows.clone());
    Ok(rows)
}

/// All sorted multisets (as lattice indices) of molecules ≥ min_m whose
/// product is over[i_idx].
fn solve(
    ctx: &SearchCtx,
    memo: &mut BTreeMap<(usize, usize), Vec<Vec<usize>>>,
    cache: &mut BTreeMap<(usize, usize), Vec<Vec<u64>>>,
    i_idx: usize,
    min_m: usize,
) -> Result<Vec<Vec<usize>>, Error> {
    if i_idx == ctx.unit_idx {
        return Ok(vec![vec![]]);
    }
    if let Some(hit) = memo.get(&(i_idx, min_m)) {
        return Ok(hit.clone());
    }
    let mut acc: Vec<Vec<usize>> = Vec::new();
    for m_idx in min_m..ctx.over.len() {
        if !ctx.molecule[m_idx] || !ctx.contains[m_idx][i_idx] {
            continue;
        }
        for c_idx in 0..ctx.over.len() {
            if !ctx.contains[c_idx][i_idx] {
                continue;
            }
            if c_idx == i_idx {
                // Would be an absorbing pair, which the precheck excluded.
                debug_assert!(product_rows(ctx, cache, m_idx, c_idx)? != ctx.over[i_idx].rows());
                continue;
            }
            if product_rows(ctx, cache, m_idx, c_idx)? != ctx.over[i_idx].rows() {
                continue;
            }
            for rest in solve(ctx, memo, cache, c_idx, m_idx)? {
                let mut ms = Vec::with_capacity(rest.len() + 1);
                ms.push(m_idx);
                ms.extend(rest);
                acc.push(ms);
            }
        }
    }
    acc.sort();
    memo.insert((i_idx, min_m), acc.clone());
    Ok(acc)
}

/// Enumerates the molecularizations of a nonzero proper target ideal.
pub fn molecularize(target: &Ideal, limit: u64) -> Result<FactorReport, Error> {
    if target.is_zero() || !target.is_proper() {
        return Err(Error::PreconditionViolation(
            "factorization target must be a nonzero proper ideal".into(),
        ));
    }
    let over = enumerate_overideals(target, limit)?;
    let n = over.len();
    let mut contains = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            contains[a][b] = over[a].contains(&over[b])?;
        }
    }
    let mut molecule = vec![false; n];
    let mut divisor = vec![false; n];
    for j in 0..n {
        divisor[j] = divides(&over[j], target)?;
        molecule[j] = over[j].is_proper() && !is_compound_in(&over[j], &over)?;
    }
    let census = Census {
        overideals: over.clone(),
        divisors: (0..n).filter(|&j| divisor[j]).map(|j| over[j].clone()).collect(),
        molecules: (0..n)
            .filter(|&j| divisor[j] && molecule[j])
            .map(|j| over[j].clone())
            .collect(),
    };
    let depth_bound = target.index().ilog2();
    let absorber = find_absorber(&over)?;
    if let Some(w) = absorber {
        return Ok(FactorReport {
            molecularizations: Vec::new(),
            finite: false,
            absorber: Some(w),
            depth_bound,
            census,
        });
    }

    let unit_idx = over
        .iter()
        .position(|j| !j.is_proper())
        .expect("the whole ring lies above every ideal");
    let target_idx = over
        .iter()
        .position(|j| j == target)
        .expect("the target lies in its own over-lattice");
    let ctx = SearchCtx { over, contains, molecule, unit_idx };
    let mut memo = BTreeMap::new();
    let mut cache = BTreeMap::new();
    let index_sets = solve(&ctx, &mut memo, &mut cache, target_idx, 0)?;

    let mut molecularizations: Vec<Vec<Ideal>> = Vec::with_capacity(index_sets.len());
    for ms in index_sets {
        assert!(ms.len() as u32 <= depth_bound, "multiset exceeds the index bound");
        let ideals: Vec<Ideal> = ms.iter().map(|&i| ctx.over[i].clone()).collect();
        let mut prod = Ideal::unit(target.ring());
        for m in &ideals {
            prod = prod.product(m)?;
        }
        assert!(prod == *target, "multiset product must reproduce the target");
        molecularizations.push(ideals);
    }
    Ok(FactorReport {
        molecularizations,
        finite: true,
        absorber: None,
        depth_bound,
        census,
    })
}

/// A certified working ring: the quotient A = R/I₀ in which factorizations
/// of over-ideals of the target are computed.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub label: String,
    pub ring: Ring,
    pub target: Ideal,
    /// Some(e) when the constructor certified I₀ ⊆ target^e in the source
    /// ring (so products of over-ideals of the target are exact images of
    /// products in the source); None for rings studied directly.
    pub exactness_exponent: Option<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::ring::{make_gf, make_zmod, poly_quotient, Ring};
    use std::prelude::rust_2021::*;
    use std::vec;

    const LIM: u64 = 1 << 16;

    fn zi(r: &Ring, g: u64) -> Ideal {
        Ideal::generated(r, &[r.from_integer(g as i128)]).unwrap()
    }

    #[test]
    fn divisibility_in_zmod() {
        let r = make_zmod(144).unwrap();
        let i12 = zi(&r, 12);
        assert!(divides(&zi(&r, 2), &i12).unwrap());
        assert!(divides(&zi(&r, 4), &i12).unwrap());
        assert!(divides(&zi(&r, 6), &i12).unwrap());
        assert!(divides(&i12, &i12).unwrap());
        assert!(divides(&Ideal::unit(&r), &i12).unwrap());
        assert!(!divides(&zi(&r, 8), &i12).unwrap());
        assert!(divides(&zi(&r, 8), &zi(&r, 24)).unwrap());
    }

    #[test]
    fn census_of_twelve_mod_144() {
        let r = make_zmod(144).unwrap();
        let census = divisor_census(&zi(&r, 12), LIM).unwrap();
        assert_eq!(census.overideals.len(), 6);
        assert_eq!(census.divisors.len(), 6, "every over-ideal of (12) divides it");
        let mols: Vec<Ideal> = vec![zi(&r, 2), zi(&r, 3)];
        assert_eq!(census.molecules.len(), 2);
        for m in &mols {
            assert!(census.molecules.contains(m));
        }
    }

    #[test]
    fn molecule_predicates() {
        let r = make_zmod(144).unwrap();
        assert!(is_molecule(&zi(&r, 2), LIM).unwrap());
        assert!(is_molecule(&zi(&r, 3), LIM).unwrap());
        assert!(!is_molecule(&zi(&r, 4), LIM).unwrap());
        assert!(!is_molecule(&zi(&r, 12), LIM).unwrap());
        assert!(!is_molecule(&Ideal::unit(&r), LIM).unwrap());
        assert!(!is_molecule(&Ideal::zero(&r), LIM).unwrap());

        // An idempotent maximal ideal is compound via I = I·I even though
        // no colon witness exists: (2) in ℤ/6, and (x) in F₂[X]/(X²+X).
        let r6 = make_zmod(6).unwrap();
        assert!(zi(&r6, 2).is_idempotent().unwrap());
        assert!(!is_molecule(&zi(&r6, 2), LIM).unwrap());
        let f2 = make_gf(2, 1).unwrap();
        let split = poly_quotient(&f2, &[f2.zero(), f2.one(), f2.one()]).unwrap();
        let x = Ideal::generated(&split, &[split.basis_element(1)]).unwrap();
        assert!(!is_molecule(&x, LIM).unwrap());
    }

    #[test]
    fn unique_molecularization_in_a_chain_ring() {
        let r = make_zmod(16).unwrap();
        let rep = molecularize(&zi(&r, 4), LIM).unwrap();
        assert!(rep.finite);
        assert_eq!(rep.depth_bound, 2);
        assert_eq!(rep.molecularizations, vec![vec![zi(&r, 2), zi(&r, 2)]]);
    }

    #[test]
    fn twelve_mod_144_factors_once() {
        let r = make_zmod(144).unwrap();
        let rep = molecularize(&zi(&r, 12), LIM).unwrap();
        assert!(rep.finite);
        assert!(rep.absorber.is_none());
        assert_eq!(rep.depth_bound, 3);
        assert_eq!(
            rep.molecularizations,
            vec![vec![zi(&r, 2), zi(&r, 2), zi(&r, 3)]],
            "12 = 2·2·3 and nothing else"
        );
    }

    #[test]
    fn molecule_target_is_its_own_factorization() {
        let r = make_zmod(144).unwrap();
        let rep = molecularize(&zi(&r, 3), LIM).unwrap();
        assert_eq!(rep.molecularizations, vec![vec![zi(&r, 3)]]);
    }

    #[test]
    fn idempotent_ideal_aborts_the_search() {
        // In F₂[X]/(X²+X) ≅ F₂×F₂ the ideal (x) absorbs itself.
        let f2 = make_gf(2, 1).unwrap();
        let f = vec![f2.zero(), f2.one(), f2.one()];
        let r = poly_quotient(&f2, &f).unwrap();
        let x = Ideal::generated(&r, &[r.basis_element(1)]).unwrap();
        let rep = molecularize(&x, LIM).unwrap();
        assert!(!rep.finite);
        let w = rep.absorber.expect("an absorbing pair must be reported");
        assert_eq!(w.stable.product(&w.absorber).unwrap(), w.stable);
        assert!(w.absorber.is_proper());
        assert!(rep.molecularizations.is_empty());
    }

    #[test]
    fn squarefree_split_modulus_is_not_cancellative() {
        // (2) is idempotent in ℤ/6: the classical failure of cancellation.
        let r = make_zmod(6).unwrap();
        let rep = molecularize(&zi(&r, 2), LIM).unwrap();
        assert!(!rep.finite);
        assert!(rep.absorber.is_some());
    }

    #[test]
    fn rejects_degenerate_targets() {
        let r = make_zmod(16).unwrap();
        assert!(molecularize(&Ideal::zero(&r), LIM).is_err());
        assert!(molecularize(&Ideal::unit(&r), LIM).is_err());
    }

    #[test]
    fn prime_power_targets_factor_uniquely() {
        // In ℤ/p^k the only molecule is (p) and (p^j) = (p)^j uniquely.
        for (p, k) in [(2u64, 5u32), (3, 4), (5, 3), (7, 2)] {
            let n = p.pow(k);
            let r = make_zmod(n).unwrap();
            for j in 1..k {
                let target = zi(&r, p.pow(j));
                let rep = molecularize(&target, LIM).unwrap();
                assert!(rep.finite);
                assert_eq!(rep.molecularizations.len(), 1, "p={p} k={k} j={j}");
                let ms = &rep.molecularizations[0];
                assert_eq!(ms.len(), j as usize);
                assert!(ms.iter().all(|m| *m == zi(&r, p)));
            }
        }
    }

    #[test]
    fn search_is_deterministic() {
        let r = make_zmod(144).unwrap();
        let a = molecularize(&zi(&r, 24), LIM).unwrap();
        let b = molecularize(&zi(&r, 24), LIM).unwrap();
        assert_eq!(a.molecularizations, b.molecularizations);
        assert_eq!(
            a.census.overideals.len(),
            b.census.overideals.len()
        );
    }

    #[test]
    fn unit_cancellativity_matches_the_absorber_test() {
        let r = make_zmod(144).unwrap();
        assert!(is_unit_cancellative(&zi(&r, 12), LIM).unwrap());

        let r6 = make_zmod(6).unwrap();
        assert!(!is_unit_cancellative(&zi(&r6, 2), LIM).unwrap());

        assert!(is_unit_cancellative(&Ideal::zero(&r6), LIM).is_err());
        // The unit ideal is trivially cancellative over its own lattice.
        assert!(is_unit_cancellative(&Ideal::unit(&r6), LIM).unwrap());
    }
}
