//! Ambient descriptions as TOML documents.
//!
//! A document either names one of the certified model families, mirroring
//! [`molec_core::construct::AmbientSpec`], or builds a raw ring from nested
//! constructor expressions (`zmod`, `gf`, `poly_quotient`, `subring`,
//! `quotient`) and names target generators by coordinate vectors.  Raw
//! ambients carry no exactness certificate: reports about them speak only
//! about the finite ring itself.

use serde::Deserialize;

use molec_core::construct::{build, AmbientSpec, BuildOptions};
use molec_core::factor::Ambient;
use molec_core::ideal::{quotient_by_ideal, Ideal};
use molec_core::ring::{make_gf, make_zmod, poly_quotient, subring_closure, Ring, RingElement};
use molec_core::Error;

/// A nested ring-constructor expression.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingExpr {
    /// ℤ/n.
    Zmod { n: u64 },
    /// The field with p^k elements.
    Gf { p: u64, k: usize },
    /// base[X]/(modulus), modulus monic with integer coefficients,
    /// constant term first.
    PolyQuotient { base: Box<RingExpr>, modulus: Vec<i64> },
    /// Smallest subring containing the generators (coordinate vectors in
    /// the base ring's additive basis).
    Subring { base: Box<RingExpr>, gens: Vec<Vec<u64>> },
    /// base modulo the ideal generated by `gens`.
    Quotient { base: Box<RingExpr>, gens: Vec<Vec<u64>> },
}

impl RingExpr {
    pub fn build(&self, opts: &BuildOptions) -> Result<Ring, Error> {
        match self {
            RingExpr::Zmod { n } => {
                check_size((*n).into(), opts)?;
                make_zmod(*n)
            }
            RingExpr::Gf { p, k } => {
                let size = (*p as u128).saturating_pow(*k as u32);
                check_size(size, opts)?;
                make_gf(*p, *k)
            }
            RingExpr::PolyQuotient { base, modulus } => {
                let b = base.build(opts)?;
                let deg = modulus.len().saturating_sub(1).max(1);
                check_size(b.size().saturating_pow(deg as u32), opts)?;
                let coeffs: Vec<RingElement> =
                    modulus.iter().map(|&c| b.from_integer(c.into())).collect();
                poly_quotient(&b, &coeffs)
            }
            RingExpr::Subring { base, gens } => {
                let b = base.build(opts)?;
                let elements = coord_elements(&b, gens)?;
                let (r, _incl) = subring_closure(&b, &elements)?;
                Ok(r)
            }
            RingExpr::Quotient { base, gens } => {
                let b = base.build(opts)?;
                let elements = coord_elements(&b, gens)?;
                let ideal = Ideal::generated(&b, &elements)?;
                Ok(quotient_by_ideal(&b, &ideal)?.ring)
            }
        }
    }
}

fn check_size(size: u128, opts: &BuildOptions) -> Result<(), Error> {
    let limit = opts.max_ring_size as u128;
    if size > limit {
        return Err(Error::SizeGuardExceeded { size, limit });
    }
    Ok(())
}

fn coord_elements(r: &Ring, coords: &[Vec<u64>]) -> Result<Vec<RingElement>, Error> {
    coords.iter().map(|c| r.element_from_coords(c.clone())).collect()
}

/// One parsed ambient document.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AmbientConfig {
    /// ℤ with target (n), modeled in ℤ/n².
    Integers { n: u64 },
    /// The imaginary quadratic order ℤ[√d], target generated by
    /// a + b√d pairs.
    Quadratic { d: i64, gens: Vec<(i64, i64)> },
    /// F_{p^k}[X] with principal target (g), g monic with integer
    /// coefficients, constant first.
    GfPoly { p: u64, k: usize, g: Vec<i64> },
    /// The cusp coordinate ring F_{p^k}[[X²,X³]] truncated at X^trunc,
    /// target generated by the named monomials X^e.
    Cusp { p: u64, k: usize, trunc: usize, exponents: Vec<usize> },
    /// ℤ[X] with target (Xⁿ, p²), modeled in ℤ[X]/(X²ⁿ, p²Xⁿ, p⁴).
    Zx { p: u64, n: u32 },
    /// A Dedekind-style polynomial quotient with target (p, fⁿ);
    /// `unchecked` skips the irreducibility gate on f.
    DedekindPoly {
        p: u64,
        f: Vec<i64>,
        n: u32,
        #[serde(default)]
        unchecked: bool,
    },
    /// The pullback order D + t·K[t] (D = F_{p^k_d} ⊆ K = F_{p^k_k}),
    /// truncated at t^trunc.
    #[serde(rename = "dplusm")]
    DPlusM { p: u64, k_d: usize, k_k: usize, trunc: usize },
    /// A raw ring expression plus target generators (coordinate vectors);
    /// no exactness certificate.
    Raw {
        #[serde(default)]
        label: Option<String>,
        ring: RingExpr,
        target: Vec<Vec<u64>>,
    },
}

impl AmbientConfig {
    /// The certified-family spec, when this is not a raw document.
    pub fn spec(&self) -> Option<AmbientSpec> {
        match self.clone() {
            AmbientConfig::Integers { n } => Some(AmbientSpec::Integers { n }),
            AmbientConfig::Quadratic { d, gens } => Some(AmbientSpec::Quadratic { d, gens }),
            AmbientConfig::GfPoly { p, k, g } => Some(AmbientSpec::GfPoly { p, k, g }),
            AmbientConfig::Cusp { p, k, trunc, exponents } => {
                Some(AmbientSpec::Cusp { p, k, trunc, exponents })
            }
            AmbientConfig::Zx { p, n } => Some(AmbientSpec::ZxIdeal { p, n }),
            AmbientConfig::DedekindPoly { p, f, n, unchecked } => {
                Some(AmbientSpec::DedekindPoly { p, f, n, unchecked })
            }
            AmbientConfig::DPlusM { p, k_d, k_k, trunc } => {
                Some(AmbientSpec::DPlusM { p, k_d, k_k, trunc })
            }
            AmbientConfig::Raw { .. } => None,
        }
    }

    pub fn build(&self, opts: &BuildOptions) -> Result<Ambient, Error> {
        if let Some(spec) = self.spec() {
            return build(&spec, opts);
        }
        let AmbientConfig::Raw { label, ring, target } = self else { unreachable!() };
        let r = ring.build(opts)?;
        let gens = coord_elements(&r, target)?;
        let target = Ideal::generated(&r, &gens)?;
        Ok(Ambient {
            label: label.clone().unwrap_or_else(|| "raw".into()),
            ring: r,
            target,
            exactness_exponent: None,
        })
    }
}

/// Parses a TOML ambient document.
pub fn parse_ambient(text: &str) -> Result<AmbientConfig, String> {
    toml::from_str(text).map_err(|e| format!("ambient document: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certified_families_parse() {
        let cfg = parse_ambient("family = \"integers\"\nn = 12\n").unwrap();
        assert_eq!(cfg, AmbientConfig::Integers { n: 12 });
        let amb = cfg.build(&BuildOptions::default()).unwrap();
        assert_eq!(amb.ring.size(), 144);

        let cfg = parse_ambient(
            "family = \"quadratic\"\nd = -5\ngens = [[6, 0]]\n",
        )
        .unwrap();
        assert_eq!(cfg.build(&BuildOptions::default()).unwrap().ring.size(), 1296);

        let cfg = parse_ambient(
            "family = \"dedekind-poly\"\np = 2\nf = [0, 1]\nn = 2\n",
        )
        .unwrap();
        assert!(matches!(cfg, AmbientConfig::DedekindPoly { unchecked: false, .. }));

        let cfg = parse_ambient(
            "family = \"dplusm\"\np = 2\nk_d = 1\nk_k = 2\ntrunc = 6\n",
        )
        .unwrap();
        assert_eq!(cfg.build(&BuildOptions::default()).unwrap().ring.size(), 2048);
    }

    #[test]
    fn raw_expressions_nest() {
        // X generates the maximal ideal of the chain ring F₂[X]/(X³);
        // target coordinates are in the quotient's 3-element basis.
        let text = r#"
family = "raw"
label = "chain"
target = [[0, 1, 0]]

[ring]
op = "poly_quotient"
modulus = [0, 0, 0, 1]

[ring.base]
op = "gf"
p = 2
k = 1
"#;
        let cfg = parse_ambient(text).unwrap();
        let amb = cfg.build(&BuildOptions::default()).unwrap();
        assert_eq!(amb.label, "chain");
        assert_eq!(amb.ring.size(), 8);
        assert_eq!(amb.target.index(), 2);
        assert!(amb.exactness_exponent.is_none());
    }

    #[test]
    fn raw_quotient_and_subring_constructors() {
        // Quotient presentations get a Smith-form basis of their own, so
        // the document pins the ring and leaves the target at (0).
        let text = r#"
family = "raw"
target = []

[ring]
op = "quotient"
gens = [[0, 2]]

[ring.base]
op = "poly_quotient"
modulus = [0, 0, 1]

[ring.base.base]
op = "zmod"
n = 4
"#;
        let amb = parse_ambient(text).unwrap().build(&BuildOptions::default()).unwrap();
        // (ℤ/4)[X]/(X²) / (2X) has 8 elements.
        assert_eq!(amb.ring.size(), 8);
        assert!(amb.target.is_zero());

        // Subring presentations get their own basis, so this document keeps
        // the target at (0) and only pins the ring itself.
        let text = r#"
family = "raw"
target = []

[ring]
op = "subring"
gens = [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0]]

[ring.base]
op = "poly_quotient"
modulus = [0, 0, 0, 0, 0, 1]

[ring.base.base]
op = "gf"
p = 2
k = 1
"#;
        let amb = parse_ambient(text).unwrap().build(&BuildOptions::default()).unwrap();
        // F₂ + X²F₂ + X³F₂ + X⁴F₂ inside F₂[X]/(X⁵).
        assert_eq!(amb.ring.size(), 16);
        assert!(amb.target.is_zero());
    }

    #[test]
    fn config_errors_are_reported() {
        assert!(parse_ambient("family = \"unknown\"\n").is_err());
        assert!(parse_ambient("family = \"integers\"\n").is_err());
        assert!(parse_ambient("family = \"integers\"\nn = 12\nextra = 1\n").is_err());
        let cfg = parse_ambient("family = \"integers\"\nn = 100000\n").unwrap();
        assert!(matches!(
            cfg.build(&BuildOptions::default()),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }
}
