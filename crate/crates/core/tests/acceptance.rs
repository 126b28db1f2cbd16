//! Acceptance suite: one PASS/FAIL line per criterion, with wall time
//! against its limit. Exits non-zero on any unexpected result.

use cutideal::classify::CrossValidateOptions;
use cutideal::cli::{enumerate_corpus, run};
use cutideal::corpus::{connected_classes_up_to, two_connected_classes};
use cutideal::descriptor::parse_descriptor;
use cutideal::koszul::{is_pair_degree2_generated, is_strongly_koszul_up_to, validate_witness, KoszulStatus};
use cutideal::minor::{contraction_witness, ContractionTarget, has_c5_minor, has_k4_minor, has_minor};
use cutideal::toric::{
    buchberger, compressed_probe, is_groebner_basis, is_reduced, lemma_families_k1m,
    markov_generators_up_to, paper_order, paper_order_with, theorem_families_k2m, Binomial, TieBreak,
};
use cutideal::{cut_matrix, Cut, Graph};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

/// Outcome of one criterion.
struct Outcome {
    passed: bool,
    /// Whether the result is the one this suite expects; a known,
    /// documented failure is expected.
    expected: bool,
    detail: String,
}

impl Outcome {
    fn check(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, expected: passed, detail: detail.into() }
    }
}

fn gb_output(descriptor: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["cutideal", "gb", descriptor], &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut sizes = Vec::new();
    for g in ["K2", "K3"] {
        let (code, text) = gb_output(g);
        let body = text.lines().filter(|l| !l.starts_with('#')).count();
        ok &= code == 0 && body == 0;
        sizes.push(format!("{g}: {body} binomials"));
    }
    Outcome::check(ok, sizes.join(", "))
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, n) in [("K1,2", 4), ("K1,3", 5)] {
        let fam = lemma_families_k1m(n).unwrap();
        let ord = paper_order(fam.graph.n()).unwrap();
        let gens = markov_generators_up_to(&fam.matrix, 4).unwrap();
        let gb = buchberger(&fam.matrix, &gens, &ord).unwrap();
        let equal = gb.iter().collect::<BTreeSet<&Binomial>>() == fam.binomials.iter().collect();
        let reduced = is_reduced(&fam.binomials, &ord);
        ok &= equal && reduced;
        detail.push(format!("{name}: {} binomials, equal {equal}, reduced {reduced}", gb.len()));
    }
    Outcome::check(ok, detail.join("; "))
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, n) in [("K2,2", 4), ("K2,3", 5)] {
        let fam = theorem_families_k2m(n).unwrap();
        let mut ties = vec![TieBreak::Default];
        ties.extend(TieBreak::ALTERNATES);
        let verdicts: Vec<bool> = ties
            .iter()
            .map(|&t| is_groebner_basis(&fam.binomials, &paper_order_with(n, t).unwrap(), &fam.matrix, 4).unwrap())
            .collect();
        ok &= verdicts.iter().all(|&v| v);
        detail.push(format!("{name}: {:?} over {} orders", verdicts, ties.len()));
    }
    Outcome::check(ok, detail.join("; "))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let j = Cut::from_side(5, &[1, 3, 4]).unwrap().index();
    for t in [ContractionTarget::C4SumC3, ContractionTarget::DiamondSumC3] {
        let x = cut_matrix(&t.graph()).unwrap();
        let v = is_pair_degree2_generated(&x, 0, j, 3).unwrap();
        let w = v.witness.as_ref();
        let good = v.status == KoszulStatus::Fail
            && w.is_some_and(|w| w.degree == 3 && validate_witness(&x, w));
        ok &= good;
        detail.push(format!("{t}: {:?} at degree {:?}", v.status, w.map(|w| w.degree)));
    }
    Outcome::check(ok, detail.join("; "))
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in ["K1,1,2", "K1,1,3", "K2,2", "K2,3"] {
        let v = is_strongly_koszul_up_to(&cut_matrix(&parse_descriptor(d).unwrap()).unwrap(), 3).unwrap();
        ok &= v.passed();
        detail.push(format!("{d} {}", if v.passed() { "pass" } else { "fail" }));
    }
    Outcome::check(ok, detail.join(", "))
}

/// Theorem-false classes on at most five vertices whose cut ideals have no
/// failing pair below degree 4.
const KNOWN_D3_MISMATCHES: [&str; 5] = ["4:3f", "5:bf", "5:ff", "5:1ff", "5:3ff"];

fn criterion_6() -> Outcome {
    let opts = CrossValidateOptions { degree: 3, trials: 50, seed: 0, override_guard: false };
    let (csv, summary) = enumerate_corpus(5, &opts).unwrap();
    let mut mismatches = BTreeSet::new();
    let c5 = Graph::cycle(5).unwrap().canonical_form().to_string();
    let mut c5_fails = false;
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (form, theorem, computed) = (f[2], f[6] == "true", f[7]);
        if theorem != (computed != "fail") {
            mismatches.insert(form.to_string());
        }
        c5_fails |= form == c5 && computed == "fail";
    }
    let passed = mismatches.is_empty() && c5_fails;
    let known: BTreeSet<String> = KNOWN_D3_MISMATCHES.iter().map(|s| s.to_string()).collect();
    let corpus = connected_classes_up_to(5).unwrap();
    let fail_at_4 = KNOWN_D3_MISMATCHES.iter().all(|form| {
        let g = corpus.iter().find(|g| g.canonical_form().to_string() == *form).unwrap();
        is_strongly_koszul_up_to(&cut_matrix(g).unwrap(), 4).unwrap().status == KoszulStatus::Fail
    });
    let detail = format!(
        "{} classes, {} confirmed, {} consistent, {} inconclusive, {} disagree; C5 fails: {c5_fails}; \
         theorem/D=3 mismatches {:?}; all fail at D=4: {fail_at_4}",
        summary.classes, summary.confirmed, summary.consistent, summary.inconclusive, summary.disagree,
        mismatches
    );
    Outcome {
        passed,
        expected: passed || (mismatches == known && fail_at_4 && c5_fails && summary.disagree == 0),
        detail,
    }
}

fn criterion_7() -> Outcome {
    let mut wrong = Vec::new();
    let mut k4_higher = false;
    let graphs = connected_classes_up_to(5).unwrap();
    for g in &graphs {
        if g.n() < 2 {
            continue;
        }
        let gens = markov_generators_up_to(&cut_matrix(g).unwrap(), 4).unwrap();
        let higher = gens.iter().any(|b| b.degree() >= 3);
        if higher != has_k4_minor(g) {
            wrong.push(g.to_string());
        }
        if *g == Graph::complete(4).unwrap() {
            k4_higher = higher;
        }
    }
    Outcome::check(
        wrong.is_empty() && k4_higher,
        format!(
            "{} classes, mismatches {wrong:?}, K4 has a degree >= 3 generator: {k4_higher} \
             (generators above degree 4 are not searched)",
            graphs.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (d, expect_witness) in [("C5", true), ("C4", false), ("K2,3", false), ("K1,1,3", false)] {
        let v = compressed_probe(&parse_descriptor(d).unwrap(), 50, 0, 4).unwrap();
        ok &= v.witness_found() == expect_witness;
        detail.push(format!("{d} witness {}", v.witness_found()));
    }
    Outcome::check(ok, detail.join(", "))
}

fn criterion_9() -> Outcome {
    let (k4, c5) = (Graph::complete(4).unwrap(), Graph::cycle(5).unwrap());
    let graphs = connected_classes_up_to(6).unwrap();
    let wrong: Vec<String> = graphs
        .iter()
        .filter(|g| has_k4_minor(g) != has_minor(g, &k4) || has_c5_minor(g) != has_minor(g, &c5))
        .map(|g| g.to_string())
        .collect();
    Outcome::check(wrong.is_empty(), format!("{} classes, disagreements {wrong:?}", graphs.len()))
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    let mut wrong = Vec::new();
    for n in 5..=7 {
        for g in two_connected_classes(n).unwrap() {
            if has_k4_minor(&g) || !has_c5_minor(&g) {
                continue;
            }
            count += 1;
            match contraction_witness(&g) {
                Ok(w) if w.target.graph().is_isomorphic(&w.result) => {}
                _ => wrong.push(g.to_string()),
            }
        }
    }
    Outcome::check(wrong.is_empty(), format!("{count} graphs, without witness {wrong:?}"))
}

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("zero ideals of K2 and K3", 1, criterion_1),
        ("star bases equal Buchberger output", 10, criterion_2),
        ("K2,m families certified under four orders", 120, criterion_3),
        ("degree-3 failures on the two 1-sums", 30, criterion_4),
        ("strong Koszul pass at D=3 on four families", 300, criterion_5),
        ("theorem agreement sweep, n <= 5, D=3", 1800, criterion_6),
        ("higher-degree generators iff K4 minor", 1800, criterion_7),
        ("compressedness probes", 600, criterion_8),
        ("fast minor tests match generic search", 600, criterion_9),
        ("contraction witnesses, n <= 7", 600, criterion_10),
    ];
    let mut unexpected = 0;
    let mut known = Vec::new();
    for (k, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let passed = outcome.passed && in_time;
        println!(
            "criterion {:>2}: {} {name} [{:.2?} / {limit}s] {}",
            k + 1,
            if passed { "PASS" } else { "FAIL" },
            elapsed,
            outcome.detail
        );
        if !outcome.expected || !in_time {
            unexpected += 1;
        } else if !passed {
            known.push(k + 1);
        }
    }
    if !known.is_empty() {
        println!("known failures (mismatch set asserted instead): criteria {known:?}");
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected result(s)");
        std::process::exit(1);
    }
}
