//! Property reports from the minor characterisations, and cross-checks of
//! those predictions against direct computation.

use crate::cut::cut_matrix;
use crate::error::{Error, Result};
use crate::graph::{recognize_family, Graph, GraphFamily};
use crate::koszul::{is_strongly_koszul_up_to, KoszulVerdict};
use crate::minor::{has_c5_minor, has_k4_minor, has_k5_minor};
use crate::toric::{
    compressed_probe, is_groebner_basis, lemma_families_k1m, markov_generators_up_to, paper_order,
    theorem_families_k2m, CompressedVerdict, FamilyBasis,
};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt;

/// Lengths of the chordless cycles of `g`: every vertex subset of size at
/// least 3 whose induced subgraph is connected and 2-regular.
pub fn induced_cycles(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    let masks = g.masks();
    let mut out = BTreeSet::new();
    for set in 1u32..(1u32 << n) {
        let k = set.count_ones() as usize;
        if k < 3 || out.contains(&k) {
            continue;
        }
        let regular = (0..n)
            .filter(|v| set >> v & 1 == 1)
            .all(|v| (masks[v] & set).count_ones() == 2);
        if regular && induced_connected(masks, set) {
            out.insert(k);
        }
    }
    out
}

fn induced_connected(masks: &[u32], set: u32) -> bool {
    let start = set & set.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = masks[v] & set & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == set
}

/// How a computation relates to the theorem's prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    /// A conclusive computation matches the prediction.
    Confirmed,
    /// The prediction holds as far as the bounded computation can see.
    Consistent,
    /// The prediction is negative but no witness appeared within the bound.
    Inconclusive,
    /// A conclusive computation contradicts the prediction.
    Disagree,
}

impl Agreement {
    /// `predicted`: the theorem's answer. `witness`: the computation found a
    /// conclusive counterexample to the property.
    fn from_witness(predicted: bool, witness: bool) -> Self {
        match (predicted, witness) {
            (true, false) => Agreement::Consistent,
            (true, true) => Agreement::Disagree,
            (false, true) => Agreement::Confirmed,
            (false, false) => Agreement::Inconclusive,
        }
    }
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Confirmed => "confirmed",
            Agreement::Consistent => "consistent",
            Agreement::Inconclusive => "inconclusive",
            Agreement::Disagree => "disagree",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: String,
    pub bound: Option<usize>,
    pub predicted: bool,
    pub agreement: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub graph: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
    pub family: GraphFamily,
    pub k4_minor: bool,
    pub c5_minor: bool,
    pub k5_minor: bool,
    pub induced_cycle_lengths: BTreeSet<usize>,
    pub strongly_koszul_theorem: bool,
    pub quadratic_generation_theorem: bool,
    pub compressed_theorem: bool,
    /// `Some(true)` when the sufficient condition applies, otherwise unknown.
    pub quadratic_gb_theorem: Option<bool>,
    pub computational_checks: Vec<CheckResult>,
}

impl ClassificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.computational_checks.iter().find(|c| c.name == name)
    }

    /// The least favourable agreement over all checks.
    pub fn agreement(&self) -> Option<Agreement> {
        self.computational_checks.iter().map(|c| c.agreement).max()
    }
}

/// Theorem-derived properties of `g`; `computational_checks` is left empty.
///
/// The minor conditions are evaluated on the whole graph, which for a
/// disconnected graph is the same as requiring them of every component.
pub fn classify(g: &Graph) -> ClassificationReport {
    classify_named(g, &g.to_string())
}

pub fn classify_named(g: &Graph, name: &str) -> ClassificationReport {
    let k4 = has_k4_minor(g);
    let c5 = has_c5_minor(g);
    let k5 = has_k5_minor(g);
    let cycles = induced_cycles(g);
    let sk = !(k4 || c5);
    ClassificationReport {
        graph: name.to_string(),
        n: g.n(),
        edges: g.edges().to_vec(),
        components: g.components().len(),
        family: recognize_family(g),
        k4_minor: k4,
        c5_minor: c5,
        k5_minor: k5,
        strongly_koszul_theorem: sk,
        quadratic_generation_theorem: !k4,
        compressed_theorem: !k5 && cycles.iter().all(|&l| l == 3 || l == 4),
        quadratic_gb_theorem: sk.then_some(true),
        induced_cycle_lengths: cycles,
        computational_checks: Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossValidateOptions {
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub override_guard: bool,
}

impl Default for CrossValidateOptions {
    fn default() -> Self {
        Self { degree: 4, trials: 50, seed: 0, override_guard: false }
    }
}

/// Vertex count above which computations need an explicit override.
pub const GUARD_LIMIT: usize = 8;

pub const CHECK_KOSZUL: &str = "strongly-koszul";
pub const CHECK_QUADRATIC: &str = "quadratic-generation";
pub const CHECK_COMPRESSED: &str = "compressed";
pub const CHECK_FAMILY_GB: &str = "closed-form-gb";

/// [`classify`] followed by the bounded computations: the pair test for
/// strong Koszulness, the degree of minimal generators, sampled orders for
/// compressedness and, for `K_{1,m}` and `K_{2,m}`, certification of the
/// closed-form Gröbner bases. Disconnected graphs are checked component by
/// component.
pub fn cross_validate(g: &Graph, opts: &CrossValidateOptions) -> Result<ClassificationReport> {
    cross_validate_named(g, &g.to_string(), opts)
}

pub fn cross_validate_named(g: &Graph, name: &str, opts: &CrossValidateOptions) -> Result<ClassificationReport> {
    if g.n() > GUARD_LIMIT && !opts.override_guard {
        return Err(Error::ResourceGuard { n: g.n(), limit: GUARD_LIMIT });
    }
    if opts.degree < 3 {
        return Err(Error::Precondition(format!("degree bound {} < 3", opts.degree)));
    }
    let mut report = classify_named(g, name);
    let comps = g.components();
    if comps.len() == 1 {
        report.computational_checks = connected_checks(g, &report, opts)?;
    } else {
        for (k, comp) in comps.iter().enumerate() {
            let h = g.induced_subgraph(comp)?;
            let sub = classify(&h);
            for mut c in connected_checks(&h, &sub, opts)? {
                c.name = format!("component {}: {}", k + 1, c.name);
                report.computational_checks.push(c);
            }
        }
    }
    Ok(report)
}

fn connected_checks(
    g: &Graph,
    report: &ClassificationReport,
    opts: &CrossValidateOptions,
) -> Result<Vec<CheckResult>> {
    let d = opts.degree;
    let matrix = cut_matrix(g)?;
    let mut checks = Vec::new();

    let koszul = is_strongly_koszul_up_to(&matrix, d)?;
    checks.push(koszul_check(&koszul, report.strongly_koszul_theorem));

    let gens = markov_generators_up_to(&matrix, d)?;
    let max_deg = gens.iter().map(|b| b.degree()).max().unwrap_or(0);
    let higher = gens.iter().filter(|b| b.degree() >= 3).count();
    checks.push(CheckResult {
        name: CHECK_QUADRATIC.into(),
        verdict: if higher > 0 {
            format!("minimal generator of degree {max_deg} found")
        } else {
            format!("quadratic up to degree {d}")
        },
        bound: Some(d),
        predicted: report.quadratic_generation_theorem,
        agreement: Agreement::from_witness(report.quadratic_generation_theorem, higher > 0),
        detail: Some(json!({ "generators": gens.len(), "non_quadratic": higher, "max_degree": max_deg })),
    });

    let probe = compressed_probe(g, opts.trials, opts.seed, d)?;
    checks.push(CheckResult {
        name: CHECK_COMPRESSED.into(),
        verdict: match &probe {
            CompressedVerdict::WitnessOrderFound { .. } => "witness-order-found".into(),
            CompressedVerdict::ConsistentWithCompressed { .. } => "consistent-with-compressed".into(),
        },
        bound: Some(d),
        predicted: report.compressed_theorem,
        agreement: Agreement::from_witness(report.compressed_theorem, probe.witness_found()),
        detail: Some(serde_json::to_value(&probe).expect("serialisable")),
    });

    if let Some((label, fam)) = closed_form_family(report.family)? {
        let ord = paper_order(fam.graph.n())?;
        let ok = is_groebner_basis(&fam.binomials, &ord, &fam.matrix, d)?;
        checks.push(CheckResult {
            name: CHECK_FAMILY_GB.into(),
            verdict: if ok { format!("certified up to degree {d}") } else { "not a Gröbner basis".into() },
            bound: Some(d),
            predicted: true,
            agreement: if ok { Agreement::Consistent } else { Agreement::Disagree },
            detail: Some(json!({ "family": label, "binomials": fam.binomials.len() })),
        });
    }
    Ok(checks)
}

fn koszul_check(v: &KoszulVerdict, predicted: bool) -> CheckResult {
    CheckResult {
        name: CHECK_KOSZUL.into(),
        verdict: if v.passed() { format!("pass-up-to-{}", v.bound) } else { "fail".into() },
        bound: Some(v.bound),
        predicted,
        agreement: Agreement::from_witness(predicted, !v.passed()),
        detail: v.witness.as_ref().map(|w| serde_json::to_value(w).expect("serialisable")),
    }
}

/// The closed-form basis for a recognised `K_{1,m}` or `K_{2,m}`, built on
/// its standard labelling.
pub fn closed_form_family(family: GraphFamily) -> Result<Option<(String, FamilyBasis)>> {
    Ok(match family {
        GraphFamily::Star(m) if m >= 2 => Some((format!("K1,{m}"), lemma_families_k1m(m + 2)?)),
        GraphFamily::K2m(m) if m >= 2 => Some((format!("K2,{m}"), theorem_families_k2m(m + 2)?)),
        _ => None,
    })
}

/// CSV header matching [`csv_row`].
pub const CSV_HEADER: [&str; 10] = [
    "n",
    "edges",
    "canonical_form",
    "k4_minor",
    "c5_minor",
    "k5_minor",
    "strongly_koszul_theorem",
    "koszul_computed",
    "quadratic_gb_theorem",
    "agreement",
];

/// One summary row: sizes, canonical form, six boolean or tri-state
/// columns and the agreement of the strong Koszul check.
pub fn csv_row(g: &Graph, report: &ClassificationReport) -> Vec<String> {
    let koszul = report.check(CHECK_KOSZUL);
    vec![
        g.n().to_string(),
        g.edge_count().to_string(),
        g.canonical_form().to_string(),
        report.k4_minor.to_string(),
        report.c5_minor.to_string(),
        report.k5_minor.to_string(),
        report.strongly_koszul_theorem.to_string(),
        koszul.map_or("unknown".into(), |c| c.verdict.clone()),
        report.quadratic_gb_theorem.map_or("unknown".into(), |b| b.to_string()),
        koszul.map_or("unknown".into(), |c| c.agreement.to_string()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordless_cycles() {
        assert_eq!(induced_cycles(&Graph::cycle(5).unwrap()), BTreeSet::from([5]));
        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(induced_cycles(&k23), BTreeSet::from([4]));
        assert_eq!(induced_cycles(&Graph::complete(4).unwrap()), BTreeSet::from([3]));
        assert!(induced_cycles(&Graph::path(4).unwrap()).is_empty());
    }

    #[test]
    fn theorem_fields() {
        let r = classify(&Graph::complete_multipartite(&[2, 3]).unwrap());
        assert!(r.strongly_koszul_theorem && r.compressed_theorem);
        assert_eq!(r.quadratic_gb_theorem, Some(true));
        let r = classify(&Graph::cycle(5).unwrap());
        assert!(!r.strongly_koszul_theorem && r.c5_minor);
        assert!(r.quadratic_generation_theorem && !r.compressed_theorem);
        assert_eq!(r.quadratic_gb_theorem, None);
        let r = classify(&Graph::complete(4).unwrap());
        assert!(!r.strongly_koszul_theorem && !r.quadratic_generation_theorem);
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::cycle(5).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let r = classify(&g);
        assert_eq!(r.components, 2);
        assert!(!r.strongly_koszul_theorem);
        let opts = CrossValidateOptions { degree: 3, trials: 5, ..Default::default() };
        let r = cross_validate(&g, &opts).unwrap();
        assert!(r.computational_checks.iter().any(|c| c.name.starts_with("component 2")));
        assert!(r.agreement() < Some(Agreement::Disagree));
    }

    #[test]
    fn guard() {
        let g = Graph::path(9).unwrap();
        let err = cross_validate(&g, &CrossValidateOptions::default()).unwrap_err();
        assert_eq!(err, Error::ResourceGuard { n: 9, limit: GUARD_LIMIT });
    }

    #[test]
    fn k23_cross_validation() {
        let g = Graph::complete_multipartite(&[2, 3]).unwrap();
        let opts = CrossValidateOptions { degree: 3, ..Default::default() };
        let r = cross_validate(&g, &opts).unwrap();
        assert_eq!(r.check(CHECK_KOSZUL).unwrap().agreement, Agreement::Consistent);
        assert_eq!(r.check(CHECK_FAMILY_GB).unwrap().agreement, Agreement::Consistent);
        assert_eq!(csv_row(&g, &r).len(), CSV_HEADER.len());
    }
}
