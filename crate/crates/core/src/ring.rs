//! Finite commutative rings presented by an additive basis.
//!
//! A presentation lists the cyclic order dᵢ ≥ 2 of each basis element, the
//! coordinates of every pairwise product eᵢ·eⱼ, and the coordinates of the
//! multiplicative identity. Construction validates the axioms exhaustively
//! (commutativity, associativity over all basis triples, identity, order
//! consistency), so everything downstream may trust the table.
//!
//! Elements are plain coordinate vectors; operations live on the ring.
//! The zero ring (rank 0) is representable so that quotients by the full
//! ideal are total.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg;
use crate::Error;

/// Shared handle to a validated ring presentation.
pub type Ring = Arc<FiniteRing>;

/// An element, stored as reduced coordinates (0 ≤ xᵢ < dᵢ).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    coords: Vec<u64>,
}

impl RingElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// A finite commutative ring with identity, presented on an additive basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    orders: Vec<u64>,
    /// Row i·n + j holds the coordinates of eᵢ·eⱼ.
    structure: Vec<Vec<u64>>,
    one: Vec<u64>,
    /// Additive exponent: lcm of the basis orders (1 for the zero ring).
    charac: u64,
}

impl FiniteRing {
    /// Validates and constructs a presentation. Rank 0 presents the zero
    /// ring; otherwise every order must be at least 2.
    pub fn new(
        orders: Vec<u64>,
        structure: Vec<Vec<u64>>,
        one: Vec<u64>,
    ) -> Result<Ring, Error> {
        let n = orders.len();
        if n > 0 && orders.iter().any(|&d| d < 2) {
            return Err(Error::InvalidPresentation(
                "basis orders must be at least 2".into(),
            ));
        }
        let mut charac: u64 = 1;
        for &d in &orders {
            let l = linalg::lcm(charac, d);
            if l == 0 || l > (1 << 32) {
                return Err(Error::InvalidPresentation(
                    "additive exponent too large".into(),
                ));
            }
            charac = l;
        }
        let mut size: u128 = 1;
        for &d in &orders {
            size = size
                .checked_mul(d as u128)
                .ok_or_else(|| Error::InvalidPresentation("ring size overflows".into()))?;
        }
        if structure.len() != n * n {
            return Err(Error::InvalidPresentation(format!(
                "structure table has {} rows, expected {}",
                structure.len(),
                n * n
            )));
        }
        let in_range = |v: &[u64]| v.len() == n && v.iter().zip(&orders).all(|(&x, &d)| x < d);
        if !in_range(&one) || structure.iter().any(|row| !in_range(row)) {
            return Err(Error::InvalidPresentation(
                "coordinates out of range for the declared orders".into(),
            ));
        }

        let ring = FiniteRing { orders, structure, one, charac };

        // Commutativity and order consistency: dᵢ·(eᵢeⱼ) = dⱼ·(eᵢeⱼ) = 0.
        for i in 0..n {
            for j in 0..n {
                if ring.sc(i, j) != ring.sc(j, i) {
                    return Err(Error::InvalidPresentation(format!(
                        "products e{i}·e{j} and e{j}·e{i} differ"
                    )));
                }
                for (k, &c) in ring.sc(i, j).iter().enumerate() {
                    let dk = ring.orders[k] as u128;
                    if (c as u128 * ring.orders[i] as u128) % dk != 0
                        || (c as u128 * ring.orders[j] as u128) % dk != 0
                    {
                        return Err(Error::InvalidPresentation(format!(
                            "order inconsistency in e{i}·e{j}"
                        )));
                    }
                }
            }
        }
        // Identity on the basis.
        for i in 0..n {
            if ring.mul_basis_raw(&ring.one, i) != ring.basis_coords(i) {
                return Err(Error::InvalidPresentation(format!(
                    "identity fails on basis element {i}"
                )));
            }
        }
        // Associativity on all basis triples.
        for i in 0..n {
            for j in 0..n {
                let ij = ring.sc(i, j).to_vec();
                for k in 0..n {
                    let left = ring.mul_basis_raw(&ij, k);
                    let jk = ring.sc(j, k).to_vec();
                    let right = ring.mul_basis_raw(&jk, i);
                    if left != right {
                        return Err(Error::InvalidPresentation(format!(
                            "associativity fails on (e{i}·e{j})·e{k}"
                        )));
                    }
                }
            }
        }
        Ok(Arc::new(ring))
    }

    fn sc(&self, i: usize, j: usize) -> &[u64] {
        &self.structure[i * self.rank() + j]
    }

    fn basis_coords(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.rank()];
        v[i] = 1 % self.orders[i];
        v
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Additive exponent (the classical characteristic for the rings built
    /// by the named constructors).
    pub fn characteristic(&self) -> u64 {
        self.charac
    }

    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&d| d as u128).product()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.rank() == 0
    }

    pub fn zero(&self) -> RingElement {
        RingElement { coords: vec![0; self.rank()] }
    }

    pub fn one(&self) -> RingElement {
        RingElement { coords: self.one.clone() }
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        RingElement { coords: self.basis_coords(i) }
    }

    /// Wraps raw coordinates after validating them against the orders.
    pub fn element_from_coords(&self, coords: Vec<u64>) -> Result<RingElement, Error> {
        if coords.len() != self.rank() {
            return Err(Error::RingMismatch);
        }
        if coords.iter().zip(&self.orders).any(|(&x, &d)| x >= d) {
            return Err(Error::InvalidPresentation(
                "element coordinates out of range".into(),
            ));
        }
        Ok(RingElement { coords })
    }

    /// Reduces possibly-unnormalized integer coordinates.
    pub fn element_from_ints(&self, coords: &[i128]) -> Result<RingElement, Error> {
        if coords.len() != self.rank() {
            return Err(Error::RingMismatch);
        }
        let v = coords
            .iter()
            .zip(&self.orders)
            .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
            .collect();
        Ok(RingElement { coords: v })
    }

    fn check(&self, a: &RingElement) -> Result<(), Error> {
        if a.coords.len() != self.rank()
            || a.coords.iter().zip(&self.orders).any(|(&x, &d)| x >= d)
        {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement { coords: self.add_raw(&a.coords, &b.coords) })
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement, Error> {
        self.check(a)?;
        Ok(RingElement { coords: self.neg_raw(&a.coords) })
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(RingElement { coords: self.mul_raw(&a.coords, &b.coords) })
    }

    pub fn scalar_mul(&self, c: i128, a: &RingElement) -> Result<RingElement, Error> {
        self.check(a)?;
        Ok(RingElement { coords: self.scalar_raw(c, &a.coords) })
    }

    /// The image of an integer under ℤ → R.
    pub fn from_integer(&self, c: i128) -> RingElement {
        RingElement { coords: self.scalar_raw(c, &self.one) }
    }

    /// x is a unit iff 1 lies in the additive span of {x·eᵢ}, i.e. in xR.
    pub fn is_unit(&self, a: &RingElement) -> Result<bool, Error> {
        self.check(a)?;
        if self.is_zero_ring() {
            return Ok(true);
        }
        let rows: Vec<Vec<u64>> = (0..self.rank())
            .map(|i| self.embed(&self.mul_basis_raw(&a.coords, i)))
            .collect();
        let target = self.embed(&self.one);
        Ok(linalg::solve_in_span(&rows, self.rank(), self.charac, &target).is_some())
    }

    pub fn pow(&self, a: &RingElement, e: u64) -> Result<RingElement, Error> {
        self.check(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = RingElement { coords: self.mul_raw(&acc.coords, &base.coords) };
            }
            base = RingElement { coords: self.mul_raw(&base.coords, &base.coords) };
            e >>= 1;
        }
        Ok(acc)
    }

    /// Iterates every element in lexicographic coordinate order.
    pub fn elements(&self) -> Elements<'_> {
        Elements { ring: self, next: Some(vec![0; self.rank()]) }
    }

    // ---- raw coordinate arithmetic (callers guarantee well-formed input) --

    pub(crate) fn add_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }

    pub(crate) fn neg_raw(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.orders).map(|(&x, &d)| (d - x) % d).collect()
    }

    pub(crate) fn scalar_raw(&self, c: i128, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.orders)
            .map(|(&x, &d)| (c.rem_euclid(d as i128) as u128 * x as u128 % d as u128) as u64)
            .collect()
    }

    /// x·eₖ via the structure table.
    pub(crate) fn mul_basis_raw(&self, x: &[u64], k: usize) -> Vec<u64> {
        let n = self.rank();
        let mut acc = vec![0u128; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (a, &s) in acc.iter_mut().zip(self.sc(i, k)) {
                *a += xi as u128 * s as u128;
            }
        }
        acc.iter().zip(&self.orders).map(|(&a, &d)| (a % d as u128) as u64).collect()
    }

    pub(crate) fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.rank();
        let mut acc = vec![0u128; n];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai as u128 * bj as u128 % self.charac as u128;
                for (x, &s) in acc.iter_mut().zip(self.sc(i, j)) {
                    *x = (*x + c * s as u128) % (self.charac as u128 * self.charac as u128);
                }
            }
        }
        acc.iter().zip(&self.orders).map(|(&a, &d)| (a % d as u128) as u64).collect()
    }

    /// Coordinate i scaled by charac/dᵢ: the standard embedding of
    /// ⊕ᵢ ℤ/dᵢ into (ℤ/charac)ⁿ used by all span computations.
    pub(crate) fn embed(&self, raw: &[u64]) -> Vec<u64> {
        raw.iter()
            .zip(&self.orders)
            .map(|(&x, &d)| x as u128 * (self.charac / d) as u128 % self.charac as u128)
            .map(|x| x as u64)
            .collect()
    }

    pub(crate) fn unembed(&self, emb: &[u64]) -> Vec<u64> {
        emb.iter()
            .zip(&self.orders)
            .map(|(&x, &d)| {
                let f = self.charac / d;
                debug_assert_eq!(x % f, 0, "vector not in the embedded lattice");
                x / f
            })
            .collect()
    }

    pub(crate) fn embed_element(&self, a: &RingElement) -> Vec<u64> {
        self.embed(&a.coords)
    }

    pub(crate) fn element_from_raw(&self, coords: Vec<u64>) -> RingElement {
        debug_assert!(coords.iter().zip(&self.orders).all(|(&x, &d)| x < d));
        RingElement { coords }
    }
}

pub struct Elements<'a> {
    ring: &'a FiniteRing,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements<'_> {
    type Item = RingElement;

    fn next(&mut self) -> Option<RingElement> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = 0;
        loop {
            if i == succ.len() {
                self.next = None;
                break;
            }
            succ[i] += 1;
            if succ[i] == self.ring.orders[i] {
                succ[i] = 0;
                i += 1;
            } else {
                self.next = Some(succ);
                break;
            }
        }
        Some(RingElement { coords: cur })
    }
}

/// A validated unital ring homomorphism, stored by basis images.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    images: Vec<RingElement>,
}

impl RingHom {
    pub fn new(source: Ring, target: Ring, images: Vec<RingElement>) -> Result<RingHom, Error> {
        if images.len() != source.rank() {
            return Err(Error::InvalidPresentation(
                "one image per source basis element required".into(),
            ));
        }
        for img in &images {
            target.check(img)?;
        }
        let hom = RingHom { source, target, images };
        let (src, tgt) = (&hom.source, &hom.target);
        // Additive orders must be respected: dᵢ·φ(eᵢ) = 0.
        for (i, img) in hom.images.iter().enumerate() {
            let killed = tgt.scalar_raw(src.orders[i] as i128, &img.coords);
            if killed.iter().any(|&x| x != 0) {
                return Err(Error::InvalidPresentation(format!(
                    "image of basis element {i} has too large an additive order"
                )));
            }
        }
        if hom.apply(&src.one())?.coords != tgt.one.clone() {
            return Err(Error::InvalidPresentation("identity is not preserved".into()));
        }
        for i in 0..src.rank() {
            for j in 0..src.rank() {
                let prod_src = src.element_from_raw(src.sc(i, j).to_vec());
                let lhs = hom.apply(&prod_src)?;
                let rhs =
                    tgt.mul_raw(&hom.images[i].coords, &hom.images[j].coords);
                if lhs.coords != rhs {
                    return Err(Error::InvalidPresentation(format!(
                        "multiplicativity fails on e{i}·e{j}"
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement, Error> {
        self.source.check(x)?;
        let mut acc = self.target.zero();
        for (xi, img) in x.coords.iter().zip(&self.images) {
            let term = self.target.scalar_raw(*xi as i128, &img.coords);
            acc = self.target.element_from_raw(self.target.add_raw(&acc.coords, &term));
        }
        Ok(acc)
    }

    /// Some preimage of y, if y is in the image.
    pub fn preimage(&self, y: &RingElement) -> Result<Option<RingElement>, Error> {
        self.target.check(y)?;
        let m = self.target.charac;
        let rows: Vec<Vec<u64>> =
            self.images.iter().map(|img| self.target.embed(&img.coords)).collect();
        let Some(c) =
            linalg::solve_in_span(&rows, self.target.rank(), m, &self.target.embed(&y.coords))
        else {
            return Ok(None);
        };
        let coords: Vec<u64> =
            c.iter().zip(self.source.orders()).map(|(&ci, &d)| ci % d).collect();
        Ok(Some(self.source.element_from_raw(coords)))
    }
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

/// ℤ/n for n ≥ 2.
pub fn make_zmod(n: u64) -> Result<Ring, Error> {
    if n < 2 {
        return Err(Error::InvalidPresentation(format!("zmod modulus {n} must be ≥ 2")));
    }
    FiniteRing::new(vec![n], vec![vec![1 % n]], vec![1 % n])
}

/// Trial-division primality for the small moduli handled here.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- dense polynomials over ℤ/p, coefficients constant-first ----

fn fp_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn fp_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    // f monic.
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    while r.len() >= f.len() {
        let c = *r.last().unwrap();
        let shift = r.len() - f.len();
        for (i, &fc) in f.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - c * fc % p % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

pub(crate) fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    // Trial division by all monic polynomials of degree 1..deg/2.
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        // Enumerate monic degree-d candidates by their lower coefficients.
        let mut low = vec![0u64; d];
        loop {
            let mut cand = low.clone();
            cand.push(1);
            if fp_rem(f, &cand, p).is_empty() {
                return false;
            }
            let mut i = 0;
            loop {
                if i == d {
                    break;
                }
                low[i] += 1;
                if low[i] == p {
                    low[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// The lexicographically least monic irreducible of degree k over ℤ/p,
/// ordered by the coefficient tuple (c_{k−1}, …, c₁, c₀).
fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; k]; // low coefficients c₀..c_{k−1}
    loop {
        let mut f = coeffs.clone();
        f.push(1);
        if fp_is_irreducible(&f, p) {
            return f;
        }
        // Increment as a (c_{k−1}, …, c₀) tuple: c₀ is the fastest digit.
        let mut i = 0;
        loop {
            assert!(i < k, "no irreducible of degree {k} over F_{p} found");
            coeffs[i] += 1;
            if coeffs[i] == p {
                coeffs[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// The field with p^k elements, presented on the power basis of the
/// lexicographically least monic irreducible modulus (deterministic).
pub fn make_gf(p: u64, k: usize) -> Result<Ring, Error> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidPresentation(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidPresentation("field degree must be positive".into()));
    }
    let modulus = least_irreducible(p, k);
    let orders = vec![p; k];
    let mut structure = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            // X^{i+j} mod modulus.
            let mut xpow = vec![0u64; i + j + 1];
            xpow[i + j] = 1;
            let mut red = fp_rem(&xpow, &modulus, p);
            red.resize(k, 0);
            structure.push(red);
        }
    }
    let mut one = vec![0u64; k];
    one[0] = 1 % p;
    FiniteRing::new(orders, structure, one)
}

/// R[X]/(f) for a monic f of degree ≥ 1 with coefficients in R
/// (constant term first). The basis is eᵢ·Xʲ, grouped by power of X.
pub fn poly_quotient(r: &Ring, f: &[RingElement]) -> Result<Ring, Error> {
    if f.len() < 2 {
        return Err(Error::InvalidPresentation(
            "quotient modulus must have degree at least 1".into(),
        ));
    }
    for c in f {
        r.check(c)?;
    }
    if f.last().unwrap() != &r.one() {
        return Err(Error::InvalidPresentation("quotient modulus must be monic".into()));
    }
    if r.is_zero_ring() {
        return Err(Error::InvalidPresentation("polynomials over the zero ring".into()));
    }
    let n = r.rank();
    let deg = f.len() - 1;

    // X^t mod f for t ≤ 2(deg−1), as coefficient vectors over R.
    let reduce_poly = |mut poly: Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        while poly.len() > deg {
            let lead = poly.pop().unwrap();
            if lead.iter().all(|&x| x == 0) {
                continue;
            }
            let shift = poly.len() - deg;
            for (i, fc) in f.iter().take(deg).enumerate() {
                let t = r.mul_raw(&lead, fc.coords());
                let cur = &poly[shift + i];
                poly[shift + i] = r.add_raw(cur, &r.neg_raw(&t));
            }
        }
        poly
    };
    let mut xpow: Vec<Vec<Vec<u64>>> = Vec::new();
    for t in 0..=(2 * deg).saturating_sub(2) {
        let mut poly = vec![vec![0u64; n]; t + 1];
        poly[t] = r.one().coords().to_vec();
        xpow.push(reduce_poly(poly));
    }

    let rank = n * deg;
    let mut orders = Vec::with_capacity(rank);
    for _ in 0..deg {
        orders.extend_from_slice(r.orders());
    }
    let flat = |poly: &[Vec<u64>]| -> Vec<u64> {
        let mut v = vec![0u64; rank];
        for (t, coeff) in poly.iter().enumerate() {
            v[t * n..(t + 1) * n].copy_from_slice(coeff);
        }
        v
    };
    let mut structure = Vec::with_capacity(rank * rank);
    for jt in 0..deg {
        for i in 0..n {
            for kt in 0..deg {
                for l in 0..n {
                    let base = r.mul_raw(&r.basis_element(i).coords, &r.basis_element(l).coords);
                    let poly: Vec<Vec<u64>> = xpow[jt + kt]
                        .iter()
                        .map(|c| r.mul_raw(&base, c))
                        .collect();
                    structure.push(flat(&poly));
                }
            }
        }
    }
    let mut one = vec![0u64; rank];
    one[..n].copy_from_slice(r.one().coords());
    FiniteRing::new(orders, structure, one)
}

/// The smallest unital subring of `r` containing `gens`, with its own
/// presentation and the inclusion homomorphism.
pub fn subring_closure(r: &Ring, gens: &[RingElement]) -> Result<(Ring, RingHom), Error> {
    for g in gens {
        r.check(g)?;
    }
    let n = r.rank();
    let m = r.characteristic();

    // Additive-span fixpoint under pairwise products.
    let mut rows: Vec<Vec<u64>> = Vec::new();
    rows.push(r.embed(r.one().coords()));
    for g in gens {
        rows.push(r.embed(g.coords()));
    }
    let mut form = linalg::howell(&rows, n, m);
    loop {
        let elems: Vec<Vec<u64>> = form.iter().map(|row| r.unembed(row)).collect();
        let mut next = form.clone();
        for a in &elems {
            for b in &elems {
                next.push(r.embed(&r.mul_raw(a, b)));
            }
        }
        let closed = linalg::howell(&next, n, m);
        if closed == form {
            break;
        }
        form = closed;
    }

    // Present the subgroup: relations among the Howell generators.
    let ker = linalg::kernel_mod_span(&form, &[], n, m);
    let snf = linalg::snf_quotient(&ker, form.len(), m);
    let kept: Vec<usize> =
        (0..form.len()).filter(|&i| snf.orders[i] > 1).collect();
    let basis: Vec<Vec<u64>> = kept
        .iter()
        .map(|&i| {
            let mut acc = vec![0u64; n];
            for (j, &c) in snf.lifts[i].iter().enumerate() {
                let term = r.scalar_raw(c as i128, &r.unembed(&form[j]));
                acc = r.add_raw(&acc, &term);
            }
            acc
        })
        .collect();
    let sub_orders: Vec<u64> = kept.iter().map(|&i| snf.orders[i]).collect();

    // Coordinates of a subring member with respect to the new basis.
    let coords_of = |x: &[u64]| -> Result<Vec<u64>, Error> {
        let c = linalg::solve_in_span(&form, n, m, &r.embed(x)).ok_or_else(|| {
            Error::InvalidPresentation("closure is not multiplicatively closed".into())
        })?;
        let y = snf.project(&c, m);
        Ok(kept.iter().map(|&i| y[i]).collect())
    };

    let rank = kept.len();
    let mut structure = Vec::with_capacity(rank * rank);
    for a in &basis {
        for b in &basis {
            structure.push(coords_of(&r.mul_raw(a, b))?);
        }
    }
    let one = coords_of(r.one().coords())?;
    let sub = FiniteRing::new(sub_orders, structure, one)?;
    let images = basis.into_iter().map(|b| r.element_from_raw(b)).collect();
    let incl = RingHom::new(sub.clone(), r.clone(), images)?;
    Ok((sub, incl))
}

/// A unital embedding of the field D into the field K, if one exists.
/// Deterministic: the least primitive element of D is sent to the least
/// root of its minimal polynomial in K.
pub fn subfield_embedding(d: &Ring, k: &Ring) -> Result<RingHom, Error> {
    let p = d.characteristic();
    if k.characteristic() != p || !is_prime_u64(p) {
        return Err(Error::NoEmbedding("characteristics differ or are not prime".into()));
    }
    let (a, b) = (d.rank(), k.rank());
    if a == 0 || b == 0 || d.orders().iter().any(|&x| x != p) || k.orders().iter().any(|&x| x != p)
    {
        return Err(Error::NoEmbedding("both rings must be fields of characteristic p".into()));
    }
    for ring in [d, k] {
        for x in ring.elements() {
            if x != ring.zero() && !ring.is_unit(&x)? {
                return Err(Error::NoEmbedding("argument is not a field".into()));
            }
        }
    }
    if b % a != 0 {
        return Err(Error::NoEmbedding(format!(
            "no copy of a degree-{a} field inside a degree-{b} field"
        )));
    }

    // Least element of D whose powers span D, and its minimal polynomial.
    let power_rows = |ring: &Ring, x: &RingElement, upto: usize| -> Vec<Vec<u64>> {
        let mut rows = Vec::with_capacity(upto);
        let mut cur = ring.one();
        for _ in 0..upto {
            rows.push(cur.coords().to_vec());
            cur = ring.element_from_raw(ring.mul_raw(cur.coords(), x.coords()));
        }
        rows
    };
    let mut gamma = None;
    for x in d.elements() {
        let rows = power_rows(d, &x, a);
        if linalg::span_size(&linalg::howell(&rows, a, p), p) == (p as u128).pow(a as u32) {
            gamma = Some((x, rows));
            break;
        }
    }
    let (gamma, gpow_rows) = gamma.expect("a finite field has a primitive element");
    let ga = d.mul_raw(
        &d.pow(&gamma, (a - 1) as u64)?.coords().to_vec(),
        gamma.coords(),
    );
    let rel = linalg::solve_in_span(&gpow_rows, a, p, &ga)
        .expect("γ^a lies in the span of lower powers");
    // minpoly g(X) = X^a − Σ relᵢ Xⁱ.

    // Least root of g in K.
    let eval_g = |x: &RingElement| -> RingElement {
        let mut acc = k.pow(x, a as u64).unwrap();
        let mut xpow = k.one();
        for &c in &rel {
            let term = k.scalar_raw(c as i128, xpow.coords());
            acc = k.element_from_raw(k.add_raw(acc.coords(), &k.neg_raw(&term)));
            xpow = k.element_from_raw(k.mul_raw(xpow.coords(), x.coords()));
        }
        acc
    };
    let root = k
        .elements()
        .find(|x| eval_g(x) == k.zero())
        .ok_or_else(|| Error::NoEmbedding("minimal polynomial has no root".into()))?;

    // Standard basis of D through the power basis of γ, then over to K.
    let root_rows = power_rows(k, &root, a);
    let mut images = Vec::with_capacity(a);
    for i in 0..a {
        let c = linalg::solve_in_span(&gpow_rows, a, p, &d.basis_coords(i))
            .expect("γ-powers span D");
        let mut img = k.zero();
        for (ci, row) in c.iter().zip(&root_rows) {
            let term = k.scalar_raw(*ci as i128, row);
            img = k.element_from_raw(k.add_raw(img.coords(), &term));
        }
        images.push(img);
    }
    RingHom::new(d.clone(), k.clone(), images)
}
