//! Report types shared by every command, rendered either as a
//! human-readable table or as versioned JSON.
//!
//! Determinism contract: for a fixed configuration and seed the JSON is
//! byte-identical across runs — reports carry no clocks, no host
//! information, and every list is in canonical order.

use serde::Serialize;

use molec_core::factor::{Census, FactorReport};
use molec_core::ideal::Ideal;
use molec_core::props::PropertyReport;

pub const SCHEMA: u32 = 1;

/// An ideal, by its canonical generator matrix and its index in the ring.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealJson {
    pub generators: Vec<Vec<u64>>,
    pub index: u64,
}

impl IdealJson {
    pub fn of(i: &Ideal) -> IdealJson {
        IdealJson {
            generators: i.generators().iter().map(|g| g.coords().to_vec()).collect(),
            index: i.index() as u64,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AbsorberJson {
    pub stable: IdealJson,
    pub absorber: IdealJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub cases: u64,
    pub violations: u64,
    pub examples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelJson {
    pub level: usize,
    pub count: usize,
}

/// Command-specific part of a report.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Payload {
    Info {
        rank: usize,
        orders: Vec<u64>,
        target: IdealJson,
        certified: bool,
        exactness_exponent: Option<u32>,
    },
    Enumerate {
        count: usize,
        overideals: Vec<IdealJson>,
    },
    Census {
        overideals: usize,
        divisors: usize,
        molecules: usize,
        molecule_list: Vec<IdealJson>,
    },
    Molecularize {
        finite: bool,
        absorber: Option<AbsorberJson>,
        depth_bound: u32,
        count: usize,
        molecularizations: Vec<Vec<IdealJson>>,
    },
    PropertySuite {
        seed: u64,
        trials: u32,
        passed: bool,
        total_cases: u64,
        checks: Vec<CheckJson>,
    },
    Experiment(ExperimentReport),
}

/// Results of the named experiments.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "experiment")]
pub enum ExperimentReport {
    /// Factor (n) in the integer model and label each molecule by its
    /// positive integer generator.
    #[serde(rename = "butts")]
    Butts {
        n: u64,
        molecularizations: usize,
        factors: Vec<String>,
        unique: bool,
        all_factors_prime: bool,
    },
    /// Count the distinct ideals (X² + bX³, X⁴) of the cusp model as b
    /// runs over the q-element coefficient field.
    #[serde(rename = "theorem10")]
    Theorem10 {
        q: u64,
        shape_count: usize,
        all_contain_target: bool,
        matches_field_size: bool,
    },
    /// Certify (X², p²) in the polynomial-ideal model: a molecule, primary,
    /// and not prime.
    #[serde(rename = "prop13-3")]
    Prop13_3 {
        p: u64,
        molecule: bool,
        primary: bool,
        prime: bool,
    },
    /// Contrast (p, X²) with (p, X²+X): the first is a molecule, the second
    /// splits as (p, X)·(p, X+1).
    #[serde(rename = "dedekind-poly")]
    DedekindPoly {
        p: u64,
        irreducible_target_is_molecule: bool,
        reducible_target_is_compound: bool,
        witness_product_matches: bool,
    },
    /// Classify every ideal above (t³) in the pullback-order model by its
    /// stratum t^j·F + t^{j+1}·K[t].
    #[serde(rename = "dplusm")]
    DPlusM {
        trunc: usize,
        overideal_count: usize,
        classification_complete: bool,
        levels: Vec<LevelJson>,
        level_one_all_molecules: bool,
    },
    /// Factor (a + b√d) in an imaginary quadratic order and re-verify the
    /// classical prime splitting.
    #[serde(rename = "quadratic")]
    Quadratic {
        d: i64,
        molecularizations: usize,
        factor_count: usize,
        factor_indices: Vec<u64>,
        doubled_factor_squares_to_two: bool,
        split_pair_multiplies_to_three: bool,
        all_factors_prime: bool,
    },
}

/// A complete report: envelope plus command payload.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub ambient: String,
    pub ring_size: u64,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports are serializable");
        s.push('\n');
        s
    }

    /// Human-readable rendering; every count shown here equals the
    /// corresponding JSON field.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("ambient        {}", self.ambient));
        line(format!("ring size      {}", self.ring_size));
        match &self.payload {
            Payload::Info { rank, orders, target, certified, exactness_exponent } => {
                line(format!("rank           {rank}"));
                line(format!("orders         {orders:?}"));
                line(format!("target index   {}", target.index));
                line(format!("target gens    {}", gens_str(target)));
                line(format!("certified      {certified}"));
                if let Some(e) = exactness_exponent {
                    line(format!("exactness      products above target^{e} are exact"));
                }
            }
            Payload::Enumerate { count, overideals } => {
                line(format!("overideals     {count}"));
                for i in overideals {
                    line(format!("  index {:<8} {}", i.index, gens_str(i)));
                }
            }
            Payload::Census { overideals, divisors, molecules, molecule_list } => {
                line(format!("overideals     {overideals}"));
                line(format!("divisors       {divisors}"));
                line(format!("molecules      {molecules}"));
                for i in molecule_list {
                    line(format!("  index {:<8} {}", i.index, gens_str(i)));
                }
            }
            Payload::Molecularize { finite, absorber, depth_bound, count, molecularizations } => {
                line(format!("finite         {finite}"));
                if let Some(a) = absorber {
                    line(format!(
                        "absorber       stable index {} absorbed by index {}",
                        a.stable.index, a.absorber.index
                    ));
                }
                line(format!("depth bound    {depth_bound}"));
                line(format!("factorizations {count}"));
                for (k, ms) in molecularizations.iter().enumerate() {
                    let parts: Vec<String> =
                        ms.iter().map(|i| format!("[index {}] {}", i.index, gens_str(i))).collect();
                    line(format!("  #{:<3} {}", k + 1, parts.join(" * ")));
                }
            }
            Payload::PropertySuite { seed, trials, passed, total_cases, checks } => {
                line(format!("seed           {seed}"));
                line(format!("trials         {trials}"));
                line(format!("cases          {total_cases}"));
                line(format!("passed         {passed}"));
                for c in checks {
                    line(format!("  {:<44} cases {:<6} violations {}", c.name, c.cases, c.violations));
                    for e in &c.examples {
                        line(format!("    counterexample: {e}"));
                    }
                }
            }
            Payload::Experiment(e) => render_experiment(e, &mut line),
        }
        out
    }
}

fn render_experiment(e: &ExperimentReport, line: &mut dyn FnMut(String)) {
    match e {
        ExperimentReport::Butts { n, molecularizations, factors, unique, all_factors_prime } => {
            line(format!("experiment     butts (n = {n})"));
            line(format!("factorizations {molecularizations}"));
            line(format!("factors        {}", factors.join(" * ")));
            line(format!("unique         {unique}"));
            line(format!("factors prime  {all_factors_prime}"));
        }
        ExperimentReport::Theorem10 { q, shape_count, all_contain_target, matches_field_size } => {
            line(format!("experiment     theorem10 (q = {q})"));
            line(format!("ideals (X²+bX³, X⁴)   {shape_count}"));
            line(format!("all contain target    {all_contain_target}"));
            line(format!("count equals q        {matches_field_size}"));
        }
        ExperimentReport::Prop13_3 { p, molecule, primary, prime } => {
            line(format!("experiment     prop13-3 (p = {p})"));
            line(format!("molecule       {molecule}"));
            line(format!("primary        {primary}"));
            line(format!("prime          {prime}"));
        }
        ExperimentReport::DedekindPoly {
            p,
            irreducible_target_is_molecule,
            reducible_target_is_compound,
            witness_product_matches,
        } => {
            line(format!("experiment     dedekind-poly (p = {p})"));
            line(format!("({p}, X²) molecule          {irreducible_target_is_molecule}"));
            line(format!("({p}, X²+X) compound        {reducible_target_is_compound}"));
            line(format!("witness product matches    {witness_product_matches}"));
        }
        ExperimentReport::DPlusM {
            trunc,
            overideal_count,
            classification_complete,
            levels,
            level_one_all_molecules,
        } => {
            line(format!("experiment     dplusm (N = {trunc})"));
            line(format!("ideals above (t³)        {overideal_count}"));
            line(format!("classification complete  {classification_complete}"));
            for l in levels {
                line(format!("  level {:<3} strata count {}", l.level, l.count));
            }
            line(format!("level-1 all molecules    {level_one_all_molecules}"));
        }
        ExperimentReport::Quadratic {
            d,
            molecularizations,
            factor_count,
            factor_indices,
            doubled_factor_squares_to_two,
            split_pair_multiplies_to_three,
            all_factors_prime,
        } => {
            line(format!("experiment     quadratic (d = {d})"));
            line(format!("factorizations {molecularizations}"));
            line(format!("factor count   {factor_count}"));
            line(format!("factor indices {factor_indices:?}"));
            line(format!("P₂² = (2)      {doubled_factor_squares_to_two}"));
            line(format!("P₃·P₃′ = (3)   {split_pair_multiplies_to_three}"));
            line(format!("factors prime  {all_factors_prime}"));
        }
    }
}

fn gens_str(i: &IdealJson) -> String {
    if i.generators.is_empty() {
        return "(0)".into();
    }
    let parts: Vec<String> = i
        .generators
        .iter()
        .map(|g| {
            let cs: Vec<String> = g.iter().map(|c| c.to_string()).collect();
            format!("[{}]", cs.join(","))
        })
        .collect();
    format!("({})", parts.join(", "))
}

pub fn census_payload(c: &Census) -> Payload {
    Payload::Census {
        overideals: c.overideals.len(),
        divisors: c.divisors.len(),
        molecules: c.molecules.len(),
        molecule_list: c.molecules.iter().map(IdealJson::of).collect(),
    }
}

pub fn molecularize_payload(rep: &FactorReport) -> Payload {
    Payload::Molecularize {
        finite: rep.finite,
        absorber: rep.absorber.as_ref().map(|a| AbsorberJson {
            stable: IdealJson::of(&a.stable),
            absorber: IdealJson::of(&a.absorber),
        }),
        depth_bound: rep.depth_bound,
        count: rep.molecularizations.len(),
        molecularizations: rep
            .molecularizations
            .iter()
            .map(|ms| ms.iter().map(IdealJson::of).collect())
            .collect(),
    }
}

pub fn suite_payload(rep: &PropertyReport, trials: u32) -> Payload {
    Payload::PropertySuite {
        seed: rep.seed,
        trials,
        passed: rep.passed(),
        total_cases: rep.total_cases(),
        checks: rep
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name.to_string(),
                cases: c.cases,
                violations: c.violation_count,
                examples: c.violations.clone(),
            })
            .collect(),
    }
}
