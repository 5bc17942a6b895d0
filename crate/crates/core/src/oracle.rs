//! Brute-force reference implementations for cross-checking the engines.
//!
//! Everything here recomputes answers of the production code by a slower,
//! structurally different route: direct scans over the full lattice above a
//! target, no colon shortcuts, no search-tree ordering, and deduplication of
//! factor multisets by canonical sorting.  Agreement between the two routes
//! on small rings is the strongest internal evidence the fast paths are
//! right, so nothing in this module may call [`crate::factor`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::ideal::{enumerate_overideals, Ideal};
use crate::Error;

/// Compound test by exhaustive pair scan: some pair of proper lattice
/// members multiplies to `i`.  Any factorization I = J·K has J, K ⊇ I, so a
/// lattice containing every over-ideal of `i` decides the question.
pub fn is_molecule_by_force(i: &Ideal, lattice: &[Ideal]) -> Result<bool, Error> {
    if i.is_zero() || !i.is_proper() {
        return Ok(false);
    }
    for j in lattice {
        if !j.is_proper() {
            continue;
        }
        for k in lattice {
            if k.is_proper() && j.product(k)? == *i {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every multiset of molecules with product equal to the target, by direct
/// recursion over (molecule, cofactor) pairs drawn from the full lattice,
/// with set-level deduplication.  Returns `None` when some lattice pair
/// P = P·M (M proper) exists, in which case factorizations need not
/// terminate and enumeration is declined — mirroring the production
/// engine's refusal, but detected by its own scan.
pub fn molecularizations_by_force(
    target: &Ideal,
    limit: u64,
) -> Result<Option<Vec<Vec<Ideal>>>, Error> {
    if target.is_zero() || !target.is_proper() {
        return Err(Error::PreconditionViolation(
            "factorization target must be a nonzero proper ideal".into(),
        ));
    }
    let lattice = enumerate_overideals(target, limit)?;
    for p in &lattice {
        if p.is_zero() {
            continue;
        }
        for m in &lattice {
            if m.is_proper() && p.product(m)? == *p {
                return Ok(None);
            }
        }
    }

    let molecule: Vec<bool> = lattice
        .iter()
        .map(|i| is_molecule_by_force(i, &lattice))
        .collect::<Result<_, _>>()?;

    // Memoized full enumeration: solve(i) = every sorted molecule multiset
    // with product i.  The cofactor of any factor is again in the lattice,
    // and with no absorbing pair each cofactor strictly shrinks, so the
    // recursion terminates.
    fn solve(
        i: &Ideal,
        lattice: &[Ideal],
        molecule: &[bool],
        memo: &mut BTreeMap<Ideal, BTreeSet<Vec<Ideal>>>,
    ) -> Result<BTreeSet<Vec<Ideal>>, Error> {
        if let Some(hit) = memo.get(i) {
            return Ok(hit.clone());
        }
        let mut out: BTreeSet<Vec<Ideal>> = BTreeSet::new();
        for (idx, m) in lattice.iter().enumerate() {
            if !molecule[idx] || !m.contains(i)? {
                continue;
            }
            if m == i {
                out.insert(alloc::vec![m.clone()]);
                continue;
            }
            for c in lattice {
                if !c.is_proper() || !c.contains(i)? || m.product(c)? != *i {
                    continue;
                }
                for rest in solve(c, lattice, molecule, memo)? {
                    let mut ms = rest;
                    ms.push(m.clone());
                    ms.sort();
                    out.insert(ms);
                }
            }
        }
        memo.insert(i.clone(), out.clone());
        Ok(out)
    }

    let mut memo = BTreeMap::new();
    let sets = solve(target, &lattice, &molecule, &mut memo)?;
    Ok(Some(sets.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_zmod, poly_quotient, Ring};
    use std::prelude::rust_2021::*;
    use std::vec;

    const LIM: u64 = 1 << 16;

    fn zi(r: &Ring, g: u64) -> Ideal {
        Ideal::generated(r, &[r.from_integer(g as i128)]).unwrap()
    }

    #[test]
    fn force_agrees_on_frozen_chain_values() {
        let r = make_zmod(16).unwrap();
        let sets = molecularizations_by_force(&zi(&r, 4), LIM).unwrap().unwrap();
        assert_eq!(sets, vec![vec![zi(&r, 2), zi(&r, 2)]]);

        let r = make_zmod(144).unwrap();
        let sets = molecularizations_by_force(&zi(&r, 12), LIM).unwrap().unwrap();
        assert_eq!(sets, vec![vec![zi(&r, 2), zi(&r, 2), zi(&r, 3)]]);
    }

    #[test]
    fn force_declines_absorbing_lattices() {
        let f2 = make_gf(2, 1).unwrap();
        let split = poly_quotient(&f2, &[f2.zero(), f2.one(), f2.one()]).unwrap();
        let x = Ideal::generated(&split, &[split.basis_element(1)]).unwrap();
        assert_eq!(molecularizations_by_force(&x, LIM).unwrap(), None);
    }

    #[test]
    fn force_matches_engine_on_a_mixed_modulus() {
        use crate::factor::molecularize;
        let r = make_zmod(360).unwrap();
        for g in [4u64, 6, 12, 24, 30, 60, 90, 180] {
            let target = zi(&r, g);
            let rep = molecularize(&target, LIM).unwrap();
            let forced = molecularizations_by_force(&target, LIM).unwrap();
            match forced {
                None => assert!(!rep.finite, "g={g}"),
                Some(sets) => {
                    assert!(rep.finite, "g={g}");
                    let engine: std::collections::BTreeSet<Vec<Ideal>> =
                        rep.molecularizations.iter().cloned().collect();
                    let brute: std::collections::BTreeSet<Vec<Ideal>> =
                        sets.into_iter().collect();
                    assert_eq!(engine, brute, "g={g}");
                }
            }
        }
    }
}
