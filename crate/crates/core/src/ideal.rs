//! Ideals of a finite ring, in canonical form.
//!
//! An ideal is stored as the Howell normal form of its additive span inside
//! the embedded coordinate group (ℤ/m)ⁿ, so two ideals are equal exactly
//! when their matrices are equal. All lattice operations (sum, product,
//! intersection, colon) and the quotient construction reduce to the span
//! calculus in `linalg`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::linalg;
use crate::ring::{FiniteRing, Ring, RingElement, RingHom};
use crate::Error;

/// Quotients with more elements than this are tested for primality by the
/// lattice route (maximality) instead of the direct zero-divisor scan.
const ZERO_DIVISOR_SCAN_LIMIT: u128 = 1 << 12;

/// An ideal of a specific finite ring.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    /// Canonical Howell form of the embedded additive span.
    rows: Vec<Vec<u64>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}
impl Eq for Ideal {}
impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ideal {
    /// Orders by the canonical matrix; only meaningful between ideals of
    /// one and the same ring.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    a == b
}

impl Ideal {
    /// The ideal generated by `gens`.
    pub fn generated(ring: &Ring, gens: &[RingElement]) -> Result<Ideal, Error> {
        let mut rows = Vec::with_capacity(gens.len() * ring.rank());
        for g in gens {
            if ring.element_from_coords(g.coords().to_vec()).is_err() {
                return Err(Error::RingMismatch);
            }
            // g·R is spanned additively by the products g·eᵢ.
            for i in 0..ring.rank() {
                rows.push(ring.embed(&ring.mul_basis_raw(g.coords(), i)));
            }
        }
        Ok(Ideal::from_embedded(ring, rows))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), rows: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::generated(ring, &[ring.one()]).expect("the ring's own identity")
    }

    /// Canonicalizes a set of embedded spanning vectors.
    pub(crate) fn from_embedded(ring: &Ring, rows: Vec<Vec<u64>>) -> Ideal {
        let form = linalg::howell(&rows, ring.rank(), ring.characteristic());
        Ideal { ring: ring.clone(), rows: form }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// A canonical generating set: the Howell rows, as ring elements.
    pub fn generators(&self) -> Vec<RingElement> {
        self.rows
            .iter()
            .map(|r| self.ring.element_from_raw(self.ring.unembed(r)))
            .collect()
    }

    pub fn contains_element(&self, x: &RingElement) -> Result<bool, Error> {
        let emb = self.ring.embed_element(x);
        if emb.len() != self.ring.rank() {
            return Err(Error::RingMismatch);
        }
        Ok(linalg::span_contains(&self.rows, self.ring.characteristic(), &emb))
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool, Error> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let m = self.ring.characteristic();
        Ok(other.rows.iter().all(|r| linalg::span_contains(&self.rows, m, r)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Proper means not the whole ring.
    pub fn is_proper(&self) -> bool {
        !linalg::span_contains(
            &self.rows,
            self.ring.characteristic(),
            &self.ring.embed_element(&self.ring.one()),
        )
    }

    /// Number of elements of the ideal, as an additive subgroup.
    pub fn subgroup_size(&self) -> u128 {
        linalg::span_size(&self.rows, self.ring.characteristic())
    }

    /// |R/I|, the additive index.
    pub fn index(&self) -> u128 {
        self.ring.size() / self.subgroup_size()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Ideal::from_embedded(&self.ring, rows))
    }

    /// The product ideal: spanned by the pairwise products of any additive
    /// generating sets of the factors.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let r = &self.ring;
        let a: Vec<Vec<u64>> = self.rows.iter().map(|v| r.unembed(v)).collect();
        let b: Vec<Vec<u64>> = other.rows.iter().map(|v| r.unembed(v)).collect();
        let mut rows = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                rows.push(r.embed(&r.mul_raw(x, y)));
            }
        }
        Ok(Ideal::from_embedded(r, rows))
    }

    pub fn pow(&self, e: u32) -> Result<Ideal, Error> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let rows = linalg::intersect_spans(
            &self.rows,
            &other.rows,
            self.ring.rank(),
            self.ring.characteristic(),
        );
        Ok(Ideal { ring: self.ring.clone(), rows })
    }

    /// The colon ideal (self : other) = {x : x·other ⊆ self}.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal, Error> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let r = &self.ring;
        let n = r.rank();
        let m = r.characteristic();
        let gens: Vec<Vec<u64>> = other.rows.iter().map(|v| r.unembed(v)).collect();
        if gens.is_empty() || n == 0 {
            return Ok(Ideal::unit(r));
        }
        // x·bₜ ∈ self for every generator bₜ, solved as one kernel over the
        // direct sum of the targets.
        let k = gens.len();
        let ncols = k * n;
        let mut map_rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(ncols);
            for b in &gens {
                row.extend(r.embed(&r.mul_basis_raw(b, i)));
            }
            map_rows.push(row);
        }
        let mut modulus_rows = Vec::new();
        for t in 0..k {
            for srow in &self.rows {
                let mut row = vec![0u64; ncols];
                row[t * n..(t + 1) * n].copy_from_slice(srow);
                modulus_rows.push(row);
            }
        }
        let ker = linalg::kernel_mod_span(&map_rows, &modulus_rows, ncols, m);
        let rows = ker
            .iter()
            .map(|c| {
                let raw: Vec<u64> =
                    c.iter().zip(r.orders()).map(|(&ci, &d)| ci % d).collect();
                r.embed(&raw)
            })
            .collect();
        Ok(Ideal::from_embedded(r, rows))
    }

    /// The annihilator (0 : self).
    pub fn annihilator(&self) -> Result<Ideal, Error> {
        Ideal::zero(&self.ring).colon(self)
    }

    /// I² = I and I ≠ 0 characterizes the idempotent obstructions to
    /// factorization searches.
    pub fn is_idempotent(&self) -> Result<bool, Error> {
        Ok(self.product(self)? == *self)
    }
}

/// A quotient ring R/I with its projection and a lift of each basis element.
pub struct QuotientRing {
    pub ring: Ring,
    pub projection: RingHom,
    /// lifts[j] ∈ R projects onto the j-th basis element of the quotient.
    pub lifts: Vec<RingElement>,
}

/// Kept-coordinate SNF data shared by the quotient and transversal paths.
struct QuotientShape {
    orders: Vec<u64>,
    /// Raw coordinates in R of a lift of each quotient basis element.
    lifts: Vec<Vec<u64>>,
    snf: linalg::SnfQuotient,
    kept: Vec<usize>,
}

fn quotient_shape(r: &Ring, i: &Ideal) -> QuotientShape {
    let n = r.rank();
    let m = r.characteristic();
    let mut rel = Vec::with_capacity(n + i.rows().len());
    for (idx, &d) in r.orders().iter().enumerate() {
        let mut row = vec![0u64; n];
        row[idx] = d % m;
        rel.push(row);
    }
    for row in i.rows() {
        rel.push(r.unembed(row));
    }
    let snf = linalg::snf_quotient(&rel, n, m);
    let kept: Vec<usize> = (0..n).filter(|&j| snf.orders[j] > 1).collect();
    let orders: Vec<u64> = kept.iter().map(|&j| snf.orders[j]).collect();
    let lifts: Vec<Vec<u64>> = kept
        .iter()
        .map(|&j| {
            snf.lifts[j]
                .iter()
                .zip(r.orders())
                .map(|(&c, &d)| c % d)
                .collect()
        })
        .collect();
    QuotientShape { orders, lifts, snf, kept }
}

impl QuotientShape {
    fn project(&self, raw: &[u64], m: u64) -> Vec<u64> {
        let full = self.snf.project(raw, m);
        self.kept.iter().map(|&j| full[j]).collect()
    }
}

/// Builds R/I together with the projection homomorphism and basis lifts.
pub fn quotient_by_ideal(r: &Ring, i: &Ideal) -> Result<QuotientRing, Error> {
    if !same_ring(r, i.ring()) {
        return Err(Error::RingMismatch);
    }
    let m = r.characteristic();
    let shape = quotient_shape(r, i);
    let rank = shape.orders.len();
    let mut structure = Vec::with_capacity(rank * rank);
    for a in &shape.lifts {
        for b in &shape.lifts {
            structure.push(shape.project(&r.mul_raw(a, b), m));
        }
    }
    let one = shape.project(r.one().coords(), m);
    let q = FiniteRing::new(shape.orders.clone(), structure, one)?;
    debug_assert_eq!(i.subgroup_size() * q.size(), r.size());
    let images = (0..r.rank())
        .map(|idx| {
            let coords = shape.project(r.basis_element(idx).coords(), m);
            q.element_from_raw(coords)
        })
        .collect();
    let projection = RingHom::new(r.clone(), q.clone(), images)?;
    let lifts = shape.lifts.iter().map(|raw| r.element_from_raw(raw.clone())).collect();
    Ok(QuotientRing { ring: q, projection, lifts })
}

/// Coset representatives of I in R, zero class first, in a deterministic
/// mixed-radix order. Errors when the index exceeds `limit`.
pub fn transversal(i: &Ideal, limit: u64) -> Result<Vec<RingElement>, Error> {
    let r = i.ring();
    let index = i.index();
    if index > limit as u128 {
        return Err(Error::SizeGuardExceeded { size: index, limit: limit as u128 });
    }
    let m = r.characteristic();
    let shape = quotient_shape(r, i);
    let mut reps = Vec::with_capacity(index as usize);
    let mut digits = vec![0u64; shape.orders.len()];
    loop {
        let mut acc = vec![0u64; r.rank()];
        for (d, lift) in digits.iter().zip(&shape.lifts) {
            let term = r.scalar_raw(*d as i128, lift);
            acc = r.add_raw(&acc, &term);
        }
        reps.push(r.element_from_raw(acc));
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                debug_assert_eq!(reps.len() as u128, index);
                let _ = m;
                return Ok(reps);
            }
            digits[pos] += 1;
            if digits[pos] == shape.orders[pos] {
                digits[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

/// All ideals J with I ⊆ J ⊆ R, sorted by canonical form. Walks the lattice
/// upward by single-element extensions; `limit` bounds both the index of I
/// and the number of ideals produced.
pub fn enumerate_overideals(i: &Ideal, limit: u64) -> Result<Vec<Ideal>, Error> {
    let r = i.ring();
    if i.index() > limit as u128 {
        return Err(Error::SizeGuardExceeded { size: i.index(), limit: limit as u128 });
    }
    let mut seen: BTreeMap<Vec<Vec<u64>>, Ideal> = BTreeMap::new();
    let mut queue: VecDeque<Ideal> = VecDeque::new();
    seen.insert(i.rows().to_vec(), i.clone());
    queue.push_back(i.clone());
    while let Some(j) = queue.pop_front() {
        for rep in transversal(&j, limit)? {
            if j.contains_element(&rep)? {
                continue;
            }
            let bigger = j.sum(&Ideal::generated(r, &[rep])?)?;
            if !seen.contains_key(bigger.rows()) {
                if seen.len() as u128 >= limit as u128 {
                    return Err(Error::SizeGuardExceeded {
                        size: seen.len() as u128 + 1,
                        limit: limit as u128,
                    });
                }
                seen.insert(bigger.rows().to_vec(), bigger.clone());
                queue.push_back(bigger);
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// The full ideal lattice of the ring.
pub fn all_ideals(r: &Ring, limit: u64) -> Result<Vec<Ideal>, Error> {
    enumerate_overideals(&Ideal::zero(r), limit)
}

/// Prime test: I is prime iff R/I has no zero divisors. Each element's
/// multiplication map is checked for injectivity; past the scan threshold
/// the equivalent maximality test (finite rings) is used instead.
pub fn is_prime(i: &Ideal, limit: u64) -> Result<bool, Error> {
    if !i.is_proper() {
        return Ok(false);
    }
    if i.index() > ZERO_DIVISOR_SCAN_LIMIT {
        return is_maximal(i, limit);
    }
    let q = quotient_by_ideal(i.ring(), i)?.ring;
    for x in q.elements() {
        if x == q.zero() {
            continue;
        }
        if mult_map_deficient(&q, &x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when multiplication by x is non-injective, i.e. x is 0 or a zero
/// divisor.
fn mult_map_deficient(q: &Ring, x: &RingElement) -> bool {
    let rows: Vec<Vec<u64>> = (0..q.rank())
        .map(|i| q.embed(&q.mul_basis_raw(x.coords(), i)))
        .collect();
    let form = linalg::howell(&rows, q.rank(), q.characteristic());
    linalg::span_size(&form, q.characteristic()) < q.size()
}

/// Maximality via the lattice: exactly the ideal itself and the whole ring
/// lie above a maximal ideal.
pub fn is_maximal(i: &Ideal, limit: u64) -> Result<bool, Error> {
    if !i.is_proper() {
        return Ok(false);
    }
    Ok(enumerate_overideals(i, limit)?.len() == 2)
}

/// Primary test: every zero divisor of R/I must be nilpotent.
pub fn is_primary(i: &Ideal, limit: u64) -> Result<bool, Error> {
    if !i.is_proper() {
        return Ok(false);
    }
    if i.index() > limit as u128 {
        return Err(Error::SizeGuardExceeded { size: i.index(), limit: limit as u128 });
    }
    let q = quotient_by_ideal(i.ring(), i)?.ring;
    for x in q.elements() {
        if x == q.zero() {
            continue;
        }
        if mult_map_deficient(&q, &x) && !is_nilpotent(&q, &x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Repeated squaring decides nilpotency: a nilpotent element of a ring with
/// s elements has index at most s, and squaring ⌈log₂ s⌉ times passes it.
fn is_nilpotent(q: &Ring, x: &RingElement) -> bool {
    let mut y = x.clone();
    let mut bound = q.size();
    loop {
        if y == q.zero() {
            return true;
        }
        if bound == 1 {
            return false;
        }
        y = q.element_from_raw(q.mul_raw(y.coords(), y.coords()));
        bound = bound / 2 + (bound & 1);
    }
}

/// √I, the preimage of the nilradical of R/I.
pub fn radical(i: &Ideal, limit: u64) -> Result<Ideal, Error> {
    let r = i.ring();
    if i.index() > limit as u128 {
        return Err(Error::SizeGuardExceeded { size: i.index(), limit: limit as u128 });
    }
    let quo = quotient_by_ideal(r, i)?;
    let q = &quo.ring;
    let mut rows = i.rows().to_vec();
    for x in q.elements() {
        if is_nilpotent(q, &x) {
            let lift = quo
                .projection
                .preimage(&x)?
                .expect("projections are surjective");
            rows.push(r.embed_element(&lift));
        }
    }
    Ok(Ideal::from_embedded(r, rows))
}

/// One factor of the decomposition of a finite ring into local pieces.
pub struct LocalFactor {
    /// The stabilized power M^∞ of the maximal ideal M.
    pub max_power: Ideal,
    pub ring: Ring,
    pub projection: RingHom,
}

/// Splits R into its local factors R/Mᵢ^∞ along the maximal ideals Mᵢ.
/// The factor sizes multiply to |R|.
pub fn local_decomposition(r: &Ring, limit: u64) -> Result<Vec<LocalFactor>, Error> {
    if r.size() > limit as u128 {
        return Err(Error::SizeGuardExceeded { size: r.size(), limit: limit as u128 });
    }
    if r.is_zero_ring() {
        return Ok(Vec::new());
    }
    // Maximal ideals of R = preimages of the maximal ideals of the reduced
    // quotient R/nilradical, whose lattice is small.
    let nil = radical(&Ideal::zero(r), limit)?;
    let red = quotient_by_ideal(r, &nil)?;
    let lattice = all_ideals(&red.ring, limit)?;
    let mut maximal_rows: Vec<&Ideal> = Vec::new();
    for j in &lattice {
        if !j.is_proper() {
            continue;
        }
        let over = lattice.iter().filter(|k| k.contains(j).unwrap_or(false)).count();
        if over == 2 {
            maximal_rows.push(j);
        }
    }
    let mut factors = Vec::new();
    let mut size_product: u128 = 1;
    for mbar in maximal_rows {
        let mut rows = nil.rows().to_vec();
        for g in mbar.generators() {
            let lift = red.projection.preimage(&g)?.expect("projection is surjective");
            rows.push(r.embed_element(&lift));
        }
        let mut p = Ideal::from_embedded(r, rows);
        loop {
            let p2 = p.product(&p)?;
            if p2 == p {
                break;
            }
            p = p2;
        }
        let quo = quotient_by_ideal(r, &p)?;
        size_product *= quo.ring.size();
        factors.push(LocalFactor { max_power: p, ring: quo.ring, projection: quo.projection });
    }
    if size_product != r.size() {
        return Err(Error::PreconditionViolation(format!(
            "local factor sizes multiply to {size_product}, expected {}",
            r.size()
        )));
    }
    factors.sort_by(|a, b| a.max_power.cmp(&b.max_power));
    Ok(factors)
}

// Re-exported for sibling modules that need deterministic ideal keys.
pub(crate) fn ideal_key(i: &Ideal) -> Vec<Vec<u64>> {
    i.rows().to_vec()
}

pub(crate) fn dedupe(ideals: Vec<Ideal>) -> Vec<Ideal> {
    let mut set: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut out = Vec::new();
    for i in ideals {
        if set.insert(ideal_key(&i)) {
            out.push(i);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_zmod, poly_quotient};
    use std::prelude::rust_2021::*;
    use std::vec;

    fn zmod_ideal(r: &Ring, g: u64) -> Ideal {
        Ideal::generated(r, &[r.from_integer(g as i128)]).unwrap()
    }

    #[test]
    fn principal_ideals_of_zmod() {
        let r = make_zmod(144).unwrap();
        let i = zmod_ideal(&r, 12);
        assert_eq!(i.subgroup_size(), 12);
        assert_eq!(i.index(), 12);
        assert!(i.is_proper());
        assert!(i.contains_element(&r.from_integer(60)).unwrap());
        assert!(!i.contains_element(&r.from_integer(8)).unwrap());
        assert!(zmod_ideal(&r, 4).contains(&i).unwrap());
        assert!(!i.contains(&zmod_ideal(&r, 4)).unwrap());
    }

    #[test]
    fn lattice_operations_match_gcd_arithmetic() {
        let r = make_zmod(144).unwrap();
        let a = zmod_ideal(&r, 8);
        let b = zmod_ideal(&r, 12);
        assert_eq!(a.sum(&b).unwrap(), zmod_ideal(&r, 4));
        assert_eq!(a.product(&b).unwrap(), zmod_ideal(&r, 96));
        assert_eq!(a.intersect(&b).unwrap(), zmod_ideal(&r, 24));
        assert_eq!(b.colon(&a).unwrap(), zmod_ideal(&r, 3));
        assert_eq!(b.annihilator().unwrap(), zmod_ideal(&r, 12));
        assert_eq!(b.colon(&Ideal::zero(&r)).unwrap(), Ideal::unit(&r));
        assert_eq!(b.pow(2).unwrap(), Ideal::zero(&r), "12² ≡ 0 mod 144");
    }

    #[test]
    fn quotient_of_zmod() {
        let r = make_zmod(144).unwrap();
        let i = zmod_ideal(&r, 12);
        let quo = quotient_by_ideal(&r, &i).unwrap();
        assert_eq!(quo.ring.size(), 12);
        assert_eq!(quo.ring.characteristic(), 12);
        // Projection respects products and lifts are sections.
        let five = r.from_integer(5);
        let seven = r.from_integer(7);
        let lhs = quo.projection.apply(&r.mul(&five, &seven).unwrap()).unwrap();
        let rhs = quo
            .ring
            .mul(
                &quo.projection.apply(&five).unwrap(),
                &quo.projection.apply(&seven).unwrap(),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
        for (j, lift) in quo.lifts.iter().enumerate() {
            assert_eq!(
                quo.projection.apply(lift).unwrap(),
                quo.ring.basis_element(j)
            );
        }
    }

    #[test]
    fn quotient_by_unit_ideal_is_zero_ring() {
        let r = make_zmod(36).unwrap();
        let quo = quotient_by_ideal(&r, &Ideal::unit(&r)).unwrap();
        assert!(quo.ring.is_zero_ring());
        assert_eq!(quo.ring.size(), 1);
    }

    #[test]
    fn transversal_is_a_full_coset_system() {
        let r = make_zmod(144).unwrap();
        let i = zmod_ideal(&r, 12);
        let reps = transversal(&i, 1 << 20).unwrap();
        assert_eq!(reps.len(), 12);
        // All pairwise differences avoid the ideal.
        for (a, x) in reps.iter().enumerate() {
            for y in reps.iter().skip(a + 1) {
                let diff = r.sub(x, y).unwrap();
                assert!(!i.contains_element(&diff).unwrap());
            }
        }
        assert!(transversal(&i, 4).is_err());
    }

    #[test]
    fn overideals_of_zmod_are_divisors() {
        let r = make_zmod(144).unwrap();
        let i = zmod_ideal(&r, 12);
        let over = enumerate_overideals(&i, 1 << 16).unwrap();
        assert_eq!(over.len(), 6, "divisors of 12: one over-ideal each");
        let expected: Vec<Ideal> =
            [1, 2, 3, 4, 6, 12].iter().map(|&d| zmod_ideal(&r, d)).collect();
        for e in &expected {
            assert!(over.contains(e));
        }
        let all = all_ideals(&make_zmod(12).unwrap(), 1 << 16).unwrap();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn primality_and_primary_in_zmod() {
        let r = make_zmod(144).unwrap();
        let lim = 1 << 16;
        assert!(is_prime(&zmod_ideal(&r, 2), lim).unwrap());
        assert!(is_prime(&zmod_ideal(&r, 3), lim).unwrap());
        assert!(is_maximal(&zmod_ideal(&r, 2), lim).unwrap());
        assert!(!is_prime(&zmod_ideal(&r, 4), lim).unwrap());
        assert!(is_primary(&zmod_ideal(&r, 4), lim).unwrap());
        assert!(!is_primary(&zmod_ideal(&r, 6), lim).unwrap());
        assert!(!is_prime(&zmod_ideal(&r, 12), lim).unwrap());
        assert!(!is_prime(&Ideal::unit(&r), lim).unwrap());
        assert!(is_primary(&Ideal::zero(&make_zmod(16).unwrap()), lim).unwrap());
    }

    #[test]
    fn radical_strips_multiplicity() {
        let r = make_zmod(144).unwrap();
        let lim = 1 << 16;
        assert_eq!(radical(&zmod_ideal(&r, 12), lim).unwrap(), zmod_ideal(&r, 6));
        assert_eq!(radical(&zmod_ideal(&r, 16), lim).unwrap(), zmod_ideal(&r, 2));
        let rad = radical(&zmod_ideal(&r, 6), lim).unwrap();
        assert_eq!(radical(&rad, lim).unwrap(), rad, "radical is idempotent");
    }

    #[test]
    fn local_factors_of_zmod144() {
        let r = make_zmod(144).unwrap();
        let facs = local_decomposition(&r, 1 << 16).unwrap();
        assert_eq!(facs.len(), 2);
        let mut sizes: Vec<u128> = facs.iter().map(|f| f.ring.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![9, 16]);
    }

    #[test]
    fn idempotent_ideal_in_split_ring() {
        // F₂[X]/(X²+X) ≅ F₂×F₂; the ideal (x) is idempotent and maximal.
        let f2 = make_gf(2, 1).unwrap();
        let f = vec![f2.zero(), f2.one(), f2.one()];
        let r = poly_quotient(&f2, &f).unwrap();
        let x = Ideal::generated(&r, &[r.basis_element(1)]).unwrap();
        assert!(x.is_idempotent().unwrap());
        assert!(is_maximal(&x, 1 << 12).unwrap());
        assert!(is_prime(&x, 1 << 12).unwrap());
        assert_eq!(all_ideals(&r, 1 << 12).unwrap().len(), 4);
        let facs = local_decomposition(&r, 1 << 12).unwrap();
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|f| f.ring.size() == 2));
    }

    #[test]
    fn quotient_of_truncated_polynomials() {
        // (ℤ/16)[X]/(X⁴), then kill 4X².
        let z16 = make_zmod(16).unwrap();
        let f = vec![z16.zero(), z16.zero(), z16.zero(), z16.zero(), z16.one()];
        let r = poly_quotient(&z16, &f).unwrap();
        let g = r.scalar_mul(4, &r.basis_element(2)).unwrap();
        let i = Ideal::generated(&r, &[g]).unwrap();
        assert_eq!(i.subgroup_size(), 16);
        let quo = quotient_by_ideal(&r, &i).unwrap();
        assert_eq!(quo.ring.size(), 4096);
    }

    #[test]
    fn colon_reverses_products_in_nice_rings() {
        let r = make_zmod(360).unwrap();
        for (a, b) in [(4u64, 6u64), (8, 10), (12, 90), (2, 180)] {
            let ia = zmod_ideal(&r, a);
            let ib = zmod_ideal(&r, b);
            let prod = ia.product(&ib).unwrap();
            // (ab : a) ⊇ b and (ab : a)·a = ab in a principal ring.
            let colon = prod.colon(&ia).unwrap();
            assert!(colon.contains(&ib).unwrap());
            assert_eq!(colon.product(&ia).unwrap(), prod);
        }
    }
}
