//! Builders for certified ambient rings.
//!
//! Each builder models a concrete infinite domain R together with a target
//! ideal I by a finite quotient A = R/I₀ whose kernel satisfies I₀ ⊆ I².
//! That containment is the exactness certificate: products of ideals
//! containing the target, computed in A, are then exact images of the
//! corresponding products in R, and the lattice of ideals of A matches the
//! lattice of ideals of R above I₀.  Certificates are verified before an
//! ambient is emitted — by exact integer arithmetic where the source ring
//! admits it, otherwise by explicit membership checks in a strictly deeper
//! finite model — and a builder that cannot certify refuses.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::factor::Ambient;
use crate::ideal::{quotient_by_ideal, Ideal};
use crate::ring::{
    fp_is_irreducible, is_prime_u64, make_gf, make_zmod, poly_quotient, subfield_embedding,
    subring_closure, FiniteRing, Ring, RingElement, RingHom,
};
use crate::{Error, DEFAULT_MAX_RING_SIZE};

/// Size limits enforced by every builder before a ring is materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest element count any ring created during a build may have,
    /// including transient certificate models.
    pub max_ring_size: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_ring_size: DEFAULT_MAX_RING_SIZE }
    }
}

fn guard(size: u128, opts: &BuildOptions) -> Result<(), Error> {
    if size > opts.max_ring_size as u128 {
        return Err(Error::SizeGuardExceeded { size, limit: opts.max_ring_size as u128 });
    }
    Ok(())
}

/// base^exp saturating at u128::MAX, so oversized requests fail the guard
/// instead of wrapping.
fn sat_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

fn int_poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_poly_pow(f: &[i128], e: u32) -> Vec<i128> {
    let mut acc = vec![1i128];
    for _ in 0..e {
        acc = int_poly_mul(&acc, f);
    }
    acc
}

/// Human-readable rendering of integer coefficients (constant first).
fn poly_label(coeffs: &[i128]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, c) => format!("{c}"),
            (1, 1) => String::from("X"),
            (1, c) => format!("{c}X"),
            (_, 1) => format!("X^{i}"),
            (_, c) => format!("{c}X^{i}"),
        });
    }
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join("+")
    }
}

/// The element Σ cⱼXʲ of a quotient base[X]/(f), given its base-ring
/// coefficients constant-first.  Coordinates of such quotients are laid out
/// in blocks of rank(base) per power of X.
fn poly_element(
    quot: &Ring,
    base_rank: usize,
    coeffs: &[RingElement],
) -> Result<RingElement, Error> {
    let mut raw = vec![0u64; quot.rank()];
    for (j, c) in coeffs.iter().enumerate() {
        for (i, &v) in c.coords().iter().enumerate() {
            let idx = j * base_rank + i;
            if idx >= raw.len() {
                if v != 0 {
                    return Err(Error::PreconditionViolation(
                        "polynomial coefficient beyond the truncation".into(),
                    ));
                }
                continue;
            }
            raw[idx] = v;
        }
    }
    quot.element_from_coords(raw)
}

/// X^n as a monic coefficient vector over the field, constant first.
fn monic_power(field: &Ring, n: usize) -> Vec<RingElement> {
    let mut f = vec![field.zero(); n + 1];
    f[n] = field.one();
    f
}

// ---------------------------------------------------------------------------
// ℤ with target (n)
// ---------------------------------------------------------------------------

/// Models ℤ with target I = (n), n ≥ 2: A = ℤ/n².  The kernel (n²) equals
/// I² as an identity of integer arithmetic, which serves as the certificate;
/// the builder still checks n·n ∈ I² explicitly in ℤ itself, the deepest
/// model available.
pub fn build_integers(n: u64, opts: &BuildOptions) -> Result<Ambient, Error> {
    if n < 2 {
        return Err(Error::PreconditionViolation(
            "the target (n) is proper and nonzero only for n ≥ 2".into(),
        ));
    }
    let size = (n as u128) * (n as u128);
    guard(size, opts)?;
    // I² = (n²) in ℤ; membership of the kernel generator is divisibility.
    debug_assert_eq!(size % ((n as u128) * (n as u128)), 0);
    let a = make_zmod(size as u64)?;
    let target = Ideal::generated(&a, &[a.from_integer(n as i128)])?;
    Ok(Ambient {
        label: format!("Z(n={n})"),
        ring: a,
        target,
        exactness_exponent: Some(2),
    })
}

// ---------------------------------------------------------------------------
// Imaginary quadratic orders ℤ[√d]
// ---------------------------------------------------------------------------

/// The coefficient bound keeping the exact ℤ²-lattice arithmetic far from
/// i128 overflow.
const QUADRATIC_COEFF_BOUND: i64 = 1 << 20;

/// A finitely generated subgroup of ℤ², rows meaning a + b√d, reduced so
/// that membership is a two-step divisibility test.  `pivot` has the least
/// positive √d-coefficient (0 if none); `int` generates {x : (x, 0) ∈ L}.
struct Lattice2 {
    pivot: (i128, i128),
    int: i128,
}

fn lattice2(rows: &[(i128, i128)]) -> Lattice2 {
    let mut pivot: (i128, i128) = (0, 0);
    let mut int: i128 = 0;
    for &row in rows {
        let mut x = pivot;
        let mut y = row;
        while y.1 != 0 {
            let q = x.1.div_euclid(y.1);
            x = (x.0 - q * y.0, x.1 - q * y.1);
            core::mem::swap(&mut x, &mut y);
        }
        pivot = x;
        int = gcd_i128(int, y.0);
    }
    if pivot.1 < 0 {
        pivot = (-pivot.0, -pivot.1);
    }
    Lattice2 { pivot, int }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Lattice2 {
    fn contains(&self, v: (i128, i128)) -> bool {
        let (mut a, b) = v;
        if self.pivot.1 == 0 {
            if b != 0 {
                return false;
            }
        } else {
            if b.rem_euclid(self.pivot.1) != 0 {
                return false;
            }
            a -= (b / self.pivot.1) * self.pivot.0;
        }
        a == 0 || (self.int != 0 && a % self.int == 0)
    }
}

/// Models the imaginary quadratic order ℤ[√d] (d < 0 squarefree) with a
/// finitely generated target I, generators given as (a, b) meaning a + b√d.
/// With m the least positive rational integer in I, the model is
/// A = ℤ[X]/(X² − d, m²); the kernel (m²) lies in I² because m ∈ I, and the
/// builder re-derives that containment by an explicit membership check in
/// the integer lattice of I² — exact arithmetic in the source ring itself.
pub fn build_quadratic(
    d: i64,
    gens: &[(i64, i64)],
    opts: &BuildOptions,
) -> Result<Ambient, Error> {
    if d >= 0 {
        return Err(Error::PreconditionViolation(
            "only imaginary quadratic orders are modelled: d must be negative".into(),
        ));
    }
    if d < -QUADRATIC_COEFF_BOUND {
        return Err(Error::PreconditionViolation("|d| too large".into()));
    }
    let ad = d.unsigned_abs();
    let mut q = 2u64;
    while q * q <= ad {
        if ad % (q * q) == 0 {
            return Err(Error::PreconditionViolation("d must be squarefree".into()));
        }
        q += 1;
    }
    if gens.is_empty() || gens.iter().all(|&(a, b)| a == 0 && b == 0) {
        return Err(Error::PreconditionViolation(
            "the zero ideal has no finite model".into(),
        ));
    }
    if gens
        .iter()
        .any(|&(a, b)| a.abs() > QUADRATIC_COEFF_BOUND || b.abs() > QUADRATIC_COEFF_BOUND)
    {
        return Err(Error::PreconditionViolation(
            "generator coefficients too large".into(),
        ));
    }

    // ℤ-lattice of I: each generator g contributes rows g·1 and g·√d.
    let di = d as i128;
    let mut rows: Vec<(i128, i128)> = Vec::with_capacity(2 * gens.len());
    for &(a, b) in gens {
        let (a, b) = (a as i128, b as i128);
        rows.push((a, b));
        rows.push((b * di, a));
    }
    let lat = lattice2(&rows);
    let m = lat.int;
    if m == 0 {
        // Unreachable for nonzero I: the norm a² − db² of any generator is a
        // positive rational integer in I.
        return Err(Error::PreconditionViolation(
            "no positive rational integer found in the target".into(),
        ));
    }
    if m == 1 {
        return Err(Error::PreconditionViolation(
            "the target is the unit ideal".into(),
        ));
    }

    // Certificate: m² ∈ I², checked in the lattice spanned by the pairwise
    // products of the lattice generators of I.
    let mut sq_rows = Vec::with_capacity(rows.len() * rows.len());
    for &(x0, x1) in &rows {
        for &(y0, y1) in &rows {
            sq_rows.push((x0 * y0 + x1 * y1 * di, x0 * y1 + x1 * y0));
        }
    }
    if !lattice2(&sq_rows).contains((m * m, 0)) {
        return Err(Error::PreconditionViolation(
            "exactness certificate failed: m² ∉ I²".into(),
        ));
    }

    guard(sat_pow(m as u128, 4), opts)?;
    let m2 = (m * m) as u64;
    let zm = make_zmod(m2)?;
    let f = vec![zm.from_integer(-di), zm.zero(), zm.one()];
    let a = poly_quotient(&zm, &f)?;
    let tgens: Vec<RingElement> = gens
        .iter()
        .map(|&(x, y)| a.element_from_ints(&[x as i128, y as i128]))
        .collect::<Result<_, _>>()?;
    let target = Ideal::generated(&a, &tgens)?;
    debug_assert!(target.is_proper() && !target.is_zero());
    Ok(Ambient {
        label: format!("Z[sqrt({d})]"),
        ring: a,
        target,
        exactness_exponent: Some(2),
    })
}

// ---------------------------------------------------------------------------
// F_q[X] with target (g)
// ---------------------------------------------------------------------------

/// Models the polynomial ring F_q[X], q = p^k, with a monic target (g):
/// A = F_q[X]/(g²).  The kernel is the square of the target by construction
/// — an identity of polynomial arithmetic — so the certificate is direct.
/// Coefficients of g are given as integers and reduced into the prime field.
pub fn build_gf_poly(p: u64, k: usize, g: &[i64], opts: &BuildOptions) -> Result<Ambient, Error> {
    guard(sat_pow(p as u128, k as u32), opts)?;
    let field = make_gf(p, k)?;
    if g.len() < 2 {
        return Err(Error::PreconditionViolation("g must have degree ≥ 1".into()));
    }
    let gf: Vec<RingElement> = g.iter().map(|&c| field.from_integer(c as i128)).collect();
    if *gf.last().unwrap() != field.one() {
        return Err(Error::PreconditionViolation("g must be monic".into()));
    }
    let deg = (g.len() - 1) as u32;
    guard(sat_pow(field.size(), 2 * deg), opts)?;

    let mut g2 = vec![field.zero(); 2 * deg as usize + 1];
    for (i, x) in gf.iter().enumerate() {
        for (j, y) in gf.iter().enumerate() {
            g2[i + j] = field.add(&g2[i + j], &field.mul(x, y)?)?;
        }
    }
    let a = poly_quotient(&field, &g2)?;
    let gimg = poly_element(&a, field.rank(), &gf)?;
    let target = Ideal::generated(&a, &[gimg])?;
    let label_coeffs: Vec<i128> = g
        .iter()
        .map(|&c| (c as i128).rem_euclid(p as i128))
        .collect();
    Ok(Ambient {
        label: format!("gf-poly(p={p},k={k},g={})", poly_label(&label_coeffs)),
        ring: a,
        target,
        exactness_exponent: Some(2),
    })
}

// ---------------------------------------------------------------------------
// The cusp F_q[X², X³] with monomial targets
// ---------------------------------------------------------------------------

/// A truncated model of the cusp: the subring generated by X² and X³ (and
/// the field constants) inside F_q[X]/(X^N), with its inclusion map.
pub struct CuspModel {
    pub ambient: Ambient,
    /// The covering truncation F_q[X]/(X^N) the model ring sits inside.
    pub truncation: Ring,
    /// Inclusion of the model ring into the truncation.
    pub inclusion: RingHom,
    /// rank of F_q over its prime field: X^j is truncation basis j·field_rank.
    pub field_rank: usize,
    pub trunc: usize,
}

fn cusp_subring(
    p: u64,
    k: usize,
    trunc: usize,
    opts: &BuildOptions,
) -> Result<(Ring, Ring, RingHom), Error> {
    let q = sat_pow(p as u128, k as u32);
    guard(q, opts)?;
    guard(sat_pow(q, trunc as u32), opts)?;
    let field = make_gf(p, k)?;
    let v = poly_quotient(&field, &monic_power(&field, trunc))?;
    let mut gens = Vec::new();
    if k > 1 {
        // The field generator as a constant; the prime field comes for free.
        gens.push(v.basis_element(1));
    }
    gens.push(v.basis_element(2 * k));
    gens.push(v.basis_element(3 * k));
    let (d, incl) = subring_closure(&v, &gens)?;
    if d.size() != sat_pow(q, trunc as u32 - 1) {
        return Err(Error::InvalidPresentation(
            "subring closure has unexpected size".into(),
        ));
    }
    Ok((v, d, incl))
}

/// Models the cusp coordinate ring F_q[X², X³] ⊆ F_q[X] with a monomial
/// target (X^{e₁}, …, X^{e_r}), all eᵢ ≥ 2, inside the truncation at X^N.
/// The kernel I₀ = span{X^j : j ≥ N} is generated over the subring by X^N
/// and X^{N+1}, and the builder certifies I₀ ⊆ I² by checking both
/// generators against I² computed in the strictly deeper truncation at
/// X^{N+2}.  For monomial targets the check is sound: I² is spanned by
/// monomials, so a monomial lying in the truncated image of I² lies in I²
/// itself.
pub fn build_cusp_model(
    p: u64,
    k: usize,
    trunc: usize,
    exponents: &[usize],
    opts: &BuildOptions,
) -> Result<CuspModel, Error> {
    if trunc < 5 {
        return Err(Error::PreconditionViolation(
            "the truncation must keep X² and X³ and a certificate tail".into(),
        ));
    }
    if exponents.is_empty() {
        return Err(Error::PreconditionViolation(
            "the zero ideal has no finite model".into(),
        ));
    }
    for &e in exponents {
        if e < 2 || e >= trunc {
            return Err(Error::PreconditionViolation(
                "target exponents must satisfy 2 ≤ e < N".into(),
            ));
        }
    }

    let monomial = |v: &Ring, incl: &RingHom, e: usize| -> Result<RingElement, Error> {
        incl.preimage(&v.basis_element(e * k))?.ok_or_else(|| {
            Error::InvalidPresentation("monomial missing from the subring".into())
        })
    };

    // Certificate in the deeper model.
    let (v2, d2, incl2) = cusp_subring(p, k, trunc + 2, opts)?;
    let tgens2: Vec<RingElement> = exponents
        .iter()
        .map(|&e| monomial(&v2, &incl2, e))
        .collect::<Result<_, _>>()?;
    let i2 = Ideal::generated(&d2, &tgens2)?;
    let sq = i2.product(&i2)?;
    for j in [trunc, trunc + 1] {
        if !sq.contains_element(&monomial(&v2, &incl2, j)?)? {
            return Err(Error::PreconditionViolation(format!(
                "truncation N={trunc} too shallow: X^{j} ∉ I², certificate refused"
            )));
        }
    }

    let (v, d, incl) = cusp_subring(p, k, trunc, opts)?;
    let tgens: Vec<RingElement> = exponents
        .iter()
        .map(|&e| monomial(&v, &incl, e))
        .collect::<Result<_, _>>()?;
    let target = Ideal::generated(&d, &tgens)?;
    let q = p.pow(k as u32);
    Ok(CuspModel {
        ambient: Ambient {
            label: format!("cusp(q={q},N={trunc})"),
            ring: d,
            target,
            exactness_exponent: Some(2),
        },
        truncation: v,
        inclusion: incl,
        field_rank: k,
        trunc,
    })
}

/// [`build_cusp_model`] reduced to its ambient.
pub fn build_cusp(
    p: u64,
    k: usize,
    trunc: usize,
    exponents: &[usize],
    opts: &BuildOptions,
) -> Result<Ambient, Error> {
    Ok(build_cusp_model(p, k, trunc, exponents, opts)?.ambient)
}

// ---------------------------------------------------------------------------
// ℤ[X] with target (Xⁿ, p²)
// ---------------------------------------------------------------------------

/// Models ℤ[X] with target I = (Xⁿ, p²): A = ℤ[X]/(X^{2n}, p²Xⁿ, p⁴),
/// presented directly on the basis 1, X, …, X^{2n−1} with X^j of additive
/// order p⁴ for j < n and p² for j ≥ n, and monomial multiplication.  The
/// kernel is I² by the displayed expansion (X^{2n}, p²Xⁿ, p⁴) = (Xⁿ, p²)²,
/// an identity of integer-polynomial arithmetic.
pub fn build_zx_ideal(p: u64, n: u32, opts: &BuildOptions) -> Result<Ambient, Error> {
    if !is_prime_u64(p) {
        return Err(Error::PreconditionViolation("p must be prime".into()));
    }
    if n == 0 {
        return Err(Error::PreconditionViolation("the exponent n must be ≥ 1".into()));
    }
    guard(sat_pow(p as u128, 6 * n), opts)?;
    let p128 = p as u128;
    let p4 = p128 * p128 * p128 * p128;
    if p4 > u32::MAX as u128 {
        return Err(Error::SizeGuardExceeded { size: p4, limit: u32::MAX as u128 });
    }
    let p2 = (p * p) as u64;
    let p4 = p4 as u64;
    let rank = (2 * n) as usize;
    let orders: Vec<u64> = (0..rank)
        .map(|j| if j < n as usize { p4 } else { p2 })
        .collect();
    let mut structure = Vec::with_capacity(rank * rank);
    for i in 0..rank {
        for j in 0..rank {
            let mut row = vec![0u64; rank];
            if i + j < rank {
                row[i + j] = 1;
            }
            structure.push(row);
        }
    }
    let mut one = vec![0u64; rank];
    one[0] = 1;
    let a = FiniteRing::new(orders, structure, one)?;
    let target = Ideal::generated(
        &a,
        &[a.basis_element(n as usize), a.from_integer(p2 as i128)],
    )?;
    Ok(Ambient {
        label: format!("zx(p={p},n={n})"),
        ring: a,
        target,
        exactness_exponent: Some(2),
    })
}

// ---------------------------------------------------------------------------
// ℤ[X] with target (p, fⁿ)
// ---------------------------------------------------------------------------

/// A model of ℤ[X]/(p, fⁿ)² together with the covering polynomial
/// presentation, whose basis 1, X, X², … the model ring's own canonical
/// basis need not preserve.
pub struct DedekindPolyModel {
    pub ambient: Ambient,
    /// The covering presentation (ℤ/p²)[X]/(f^{2n}) on the X-power basis.
    pub cover: Ring,
    /// Projection of the cover onto the model ring.
    pub projection: RingHom,
}

/// Builder for [`DedekindPolyModel`]; `unchecked` skips the irreducibility
/// gate exactly as [`build_dedekind_poly_raw`] does.
pub fn build_dedekind_poly_model(
    p: u64,
    f: &[i64],
    n: u32,
    unchecked: bool,
    opts: &BuildOptions,
) -> Result<DedekindPolyModel, Error> {
    let check_irreducible = !unchecked;
    if !is_prime_u64(p) {
        return Err(Error::PreconditionViolation("p must be prime".into()));
    }
    if f.len() < 2 || *f.last().unwrap() != 1 {
        return Err(Error::PreconditionViolation(
            "f must be monic of degree ≥ 1 with leading coefficient 1".into(),
        ));
    }
    if n == 0 {
        return Err(Error::PreconditionViolation("the exponent n must be ≥ 1".into()));
    }
    // Only f mod p matters: (p, fⁿ) and its square are unchanged when f
    // moves by a multiple of p.  Reduce first, keeping the arithmetic small.
    let fp: Vec<u64> = f
        .iter()
        .map(|&c| (c as i128).rem_euclid(p as i128) as u64)
        .collect();
    if check_irreducible && !fp_is_irreducible(&fp, p) {
        return Err(Error::PreconditionViolation(
            "f is reducible modulo p; use the raw builder to study this target".into(),
        ));
    }
    let deg = (f.len() - 1) as u32;
    let p2 = (p as u128) * (p as u128);
    guard(sat_pow(p2, deg * 2 * n), opts)?;
    if p2 > u32::MAX as u128 {
        return Err(Error::SizeGuardExceeded { size: p2, limit: u32::MAX as u128 });
    }
    let base = make_zmod(p2 as u64)?;
    let fi: Vec<i128> = fp.iter().map(|&c| c as i128).collect();
    let f2n: Vec<RingElement> = int_poly_pow(&fi, 2 * n)
        .iter()
        .map(|&c| base.from_integer(c))
        .collect();
    let fn_coeffs: Vec<RingElement> = int_poly_pow(&fi, n)
        .iter()
        .map(|&c| base.from_integer(c))
        .collect();
    // Intermediate model ℤ[X]/(p², f^{2n}); the remaining kernel generator
    // p·fⁿ is divided out as an ideal, leaving A = ℤ[X]/(p², p·fⁿ, f^{2n}).
    // That kernel equals (p, fⁿ)² identically.
    let big = poly_quotient(&base, &f2n)?;
    let fn_img = poly_element(&big, 1, &fn_coeffs)?;
    let pfn = big.scalar_mul(p as i128, &fn_img)?;
    let rel = Ideal::generated(&big, &[pfn])?;
    let q = quotient_by_ideal(&big, &rel)?;
    let a = q.ring.clone();
    let target = Ideal::generated(
        &a,
        &[a.from_integer(p as i128), q.projection.apply(&fn_img)?],
    )?;
    Ok(DedekindPolyModel {
        ambient: Ambient {
            label: format!("dedekind-poly(p={p},f={},n={n})", poly_label(&fi)),
            ring: a,
            target,
            exactness_exponent: Some(2),
        },
        cover: big,
        projection: q.projection,
    })
}

/// Models ℤ[X] with target I = (p, fⁿ) for f monic and irreducible modulo p
/// (checked), so that (p, f) is maximal: A = ℤ[X]/(p², p·fⁿ, f^{2n}), whose
/// kernel is exactly I².
pub fn build_dedekind_poly(
    p: u64,
    f: &[i64],
    n: u32,
    opts: &BuildOptions,
) -> Result<Ambient, Error> {
    Ok(build_dedekind_poly_model(p, f, n, false, opts)?.ambient)
}

/// [`build_dedekind_poly`] without the irreducibility gate, for studying
/// targets (p, fⁿ) with reducible f.  The exactness identity
/// (p², p·fⁿ, f^{2n}) = (p, fⁿ)² does not depend on irreducibility — only
/// the maximality of (p, f) does.
pub fn build_dedekind_poly_raw(
    p: u64,
    f: &[i64],
    n: u32,
    opts: &BuildOptions,
) -> Result<Ambient, Error> {
    Ok(build_dedekind_poly_model(p, f, n, true, opts)?.ambient)
}

// ---------------------------------------------------------------------------
// The pullback order D + tK[t]
// ---------------------------------------------------------------------------

/// A truncated model of D + tK[t] (D ⊆ K finite fields) with its inclusion
/// into the full truncation K[t]/(t^N).
pub struct DPlusMModel {
    pub ambient: Ambient,
    /// The covering truncation K[t]/(t^N).
    pub truncation: Ring,
    /// Inclusion of the model ring into the truncation.
    pub inclusion: RingHom,
    /// rank of K over its prime field: t^j·(K-basis i) is truncation basis
    /// j·field_rank + i.
    pub field_rank: usize,
    pub trunc: usize,
    /// The target is M^level = t^level·K[t], level = ⌈N/2⌉.
    pub level: usize,
}

fn dplusm_subring(
    p: u64,
    k_d: usize,
    k_k: usize,
    trunc: usize,
    opts: &BuildOptions,
) -> Result<(Ring, Ring, RingHom), Error> {
    let q = sat_pow(p as u128, k_k as u32);
    guard(q, opts)?;
    guard(sat_pow(q, trunc as u32), opts)?;
    let dfield = make_gf(p, k_d)?;
    let kfield = make_gf(p, k_k)?;
    let emb = subfield_embedding(&dfield, &kfield)?;
    let v = poly_quotient(&kfield, &monic_power(&kfield, trunc))?;
    let mut gens = Vec::new();
    for i in 0..k_d {
        let c = emb.apply(&dfield.basis_element(i))?;
        gens.push(poly_element(&v, k_k, core::slice::from_ref(&c))?);
    }
    for i in 0..k_k {
        gens.push(v.basis_element(k_k + i));
    }
    let (r, incl) = subring_closure(&v, &gens)?;
    let expected = sat_pow(p as u128, k_d as u32).saturating_mul(sat_pow(q, trunc as u32 - 1));
    if r.size() != expected {
        return Err(Error::InvalidPresentation(
            "subring closure has unexpected size".into(),
        ));
    }
    Ok((v, r, incl))
}

/// Models the pullback order R = D + tK[t] for finite fields D ⊆ K,
/// truncated at t^N, with target M^m = t^m·K[t] for m = ⌈N/2⌉.  The kernel
/// I₀ = t^N·K[t] lies in (M^m)² because 2m ≥ N; the builder re-checks this
/// by explicit membership of each kernel generator in the square of the
/// target computed in the strictly deeper truncation at t^{N+2}.  Every
/// ideal between the target and R is then handled exactly — in particular
/// the whole stratum t^jF + t^{j+1}K[t], 1 ≤ j ≤ m.
pub fn build_dplusm_model(
    p: u64,
    k_d: usize,
    k_k: usize,
    trunc: usize,
    opts: &BuildOptions,
) -> Result<DPlusMModel, Error> {
    if k_d == 0 || k_k <= k_d || k_k % k_d != 0 {
        return Err(Error::PreconditionViolation(
            "the coefficient fields need 1 ≤ k_d < k_k with k_d | k_k".into(),
        ));
    }
    if trunc < 2 {
        return Err(Error::PreconditionViolation(
            "the truncation must keep a nontrivial multiplicative stratum".into(),
        ));
    }
    let level = trunc.div_ceil(2);

    let level_gens = |v: &Ring, incl: &RingHom, j: usize| -> Result<Vec<RingElement>, Error> {
        (0..k_k)
            .map(|i| {
                incl.preimage(&v.basis_element(j * k_k + i))?.ok_or_else(|| {
                    Error::InvalidPresentation("t^j·K missing from the subring".into())
                })
            })
            .collect()
    };

    // Certificate in the deeper model.
    let (v2, r2, incl2) = dplusm_subring(p, k_d, k_k, trunc + 2, opts)?;
    let i2 = Ideal::generated(&r2, &level_gens(&v2, &incl2, level)?)?;
    let sq = i2.product(&i2)?;
    for j in [trunc, trunc + 1] {
        for e in level_gens(&v2, &incl2, j)? {
            if !sq.contains_element(&e)? {
                return Err(Error::PreconditionViolation(format!(
                    "truncation N={trunc} too shallow: t^{j}·K ⊄ (M^{level})², certificate refused"
                )));
            }
        }
    }

    let (v, r, incl) = dplusm_subring(p, k_d, k_k, trunc, opts)?;
    let target = Ideal::generated(&r, &level_gens(&v, &incl, level)?)?;
    Ok(DPlusMModel {
        ambient: Ambient {
            label: format!("dplusm(p={p},kD={k_d},kK={k_k},N={trunc})"),
            ring: r,
            target,
            exactness_exponent: Some(2),
        },
        truncation: v,
        inclusion: incl,
        field_rank: k_k,
        trunc,
        level,
    })
}

/// [`build_dplusm_model`] reduced to its ambient.
pub fn build_dplusm(
    p: u64,
    k_d: usize,
    k_k: usize,
    trunc: usize,
    opts: &BuildOptions,
) -> Result<Ambient, Error> {
    Ok(build_dplusm_model(p, k_d, k_k, trunc, opts)?.ambient)
}

// ---------------------------------------------------------------------------
// Declarative specs
// ---------------------------------------------------------------------------

/// Declarative description of a buildable ambient — the exchange format
/// between configuration files and the builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmbientSpec {
    Integers { n: u64 },
    Quadratic { d: i64, gens: Vec<(i64, i64)> },
    GfPoly { p: u64, k: usize, g: Vec<i64> },
    Cusp { p: u64, k: usize, trunc: usize, exponents: Vec<usize> },
    ZxIdeal { p: u64, n: u32 },
    DedekindPoly { p: u64, f: Vec<i64>, n: u32, unchecked: bool },
    DPlusM { p: u64, k_d: usize, k_k: usize, trunc: usize },
}

pub fn build(spec: &AmbientSpec, opts: &BuildOptions) -> Result<Ambient, Error> {
    match spec {
        AmbientSpec::Integers { n } => build_integers(*n, opts),
        AmbientSpec::Quadratic { d, gens } => build_quadratic(*d, gens, opts),
        AmbientSpec::GfPoly { p, k, g } => build_gf_poly(*p, *k, g, opts),
        AmbientSpec::Cusp { p, k, trunc, exponents } => {
            build_cusp(*p, *k, *trunc, exponents, opts)
        }
        AmbientSpec::ZxIdeal { p, n } => build_zx_ideal(*p, *n, opts),
        AmbientSpec::DedekindPoly { p, f, n, unchecked } => {
            Ok(build_dedekind_poly_model(*p, f, *n, *unchecked, opts)?.ambient)
        }
        AmbientSpec::DPlusM { p, k_d, k_k, trunc } => {
            build_dplusm(*p, *k_d, *k_k, *trunc, opts)
        }
    }
}

/// The stock examples exercised by the demo commands and the exhaustive
/// cross-checks: one per family, all small enough to enumerate completely.
pub fn shipped_specs() -> Vec<AmbientSpec> {
    vec![
        AmbientSpec::Integers { n: 12 },
        AmbientSpec::Quadratic { d: -5, gens: vec![(6, 0)] },
        AmbientSpec::GfPoly { p: 2, k: 1, g: vec![1, 1, 1] },
        AmbientSpec::Cusp { p: 2, k: 1, trunc: 10, exponents: vec![4] },
        AmbientSpec::ZxIdeal { p: 2, n: 2 },
        AmbientSpec::DedekindPoly { p: 2, f: vec![0, 1], n: 2, unchecked: false },
        AmbientSpec::DPlusM { p: 2, k_d: 1, k_k: 2, trunc: 6 },
    ]
}

pub fn shipped_ambients(opts: &BuildOptions) -> Result<Vec<Ambient>, Error> {
    shipped_specs().iter().map(|s| build(s, opts)).collect()
}
