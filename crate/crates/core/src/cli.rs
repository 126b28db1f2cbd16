//! Command-line front end: `classify`, `gb` and `enumerate`.

use crate::classify::{
    closed_form_family, cross_validate_named, csv_row, Agreement, CrossValidateOptions, CHECK_KOSZUL,
    CSV_HEADER, GUARD_LIMIT,
};
use crate::corpus::connected_classes_up_to;
use crate::cut::cut_matrix;
use crate::descriptor::parse_descriptor;
use crate::error::{Error, Result};
use crate::graph::{recognize_family, Graph};
use crate::koszul::all_failing_pairs;
use crate::toric::{
    buchberger, format_binomials, hilbert_check, is_groebner_basis, markov_generators_up_to,
    paper_order, paper_order_with, TieBreak,
};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Largest corpus size accepted by `enumerate` without the override.
pub const ENUMERATE_LIMIT: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "cutideal", version, about = "Cut ideals of graphs: Gröbner bases and strong Koszulness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report theorem predictions and bounded computational checks as JSON.
    Classify(ClassifyArgs),
    /// Compute the reduced Gröbner basis of the cut ideal.
    Gb(GbArgs),
    /// Cross-validate every connected graph up to a vertex count (CSV).
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Degree bound for all computations.
    #[arg(long, default_value_t = 4)]
    pub degree: usize,
    /// Random orders sampled by the compressedness probe.
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    /// Seed for every randomised probe.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Allow inputs above the size guard.
    #[arg(long)]
    pub override_guard: bool,
    /// Write output to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CommonArgs {
    fn options(&self) -> CrossValidateOptions {
        CrossValidateOptions {
            degree: self.degree,
            trials: self.trials,
            seed: self.seed,
            override_guard: self.override_guard,
        }
    }
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Edge-list file or descriptor such as `K2,3`, `C5`, `clique-sum:C4+C3@edge`.
    pub input: String,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Skip the computations and report theorem predictions only.
    #[arg(long)]
    pub theorem_only: bool,
    /// List every failing pair of the strong Koszul test, not just the first.
    #[arg(long)]
    pub all_pairs: bool,
}

#[derive(Debug, Args)]
pub struct GbArgs {
    pub input: String,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Tie-break inside the min-part order: default, ascending, descending
    /// or shuffled:<seed>.
    #[arg(long, default_value = "default")]
    pub order: String,
    /// Also emit and certify the closed-form basis for `K_{1,m}` / `K_{2,m}`.
    #[arg(long)]
    pub certify: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Largest vertex count.
    #[arg(long)]
    pub max_n: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

pub fn parse_tie_break(s: &str) -> Result<TieBreak> {
    match s {
        "default" => Ok(TieBreak::Default),
        "ascending" => Ok(TieBreak::Ascending),
        "descending" => Ok(TieBreak::Descending),
        _ => s
            .strip_prefix("shuffled:")
            .and_then(|seed| seed.parse().ok())
            .map(TieBreak::Shuffled)
            .ok_or_else(|| Error::Descriptor(format!("unknown order {s:?}"))),
    }
}

/// A graph file if `input` names an existing file, otherwise a descriptor.
pub fn load_graph(input: &str) -> Result<Graph> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, message: format!("{input}: {e}") })?;
        Graph::from_text(&text)
    } else {
        parse_descriptor(input)
    }
}

fn guard(n: usize, limit: usize, override_guard: bool) -> Result<()> {
    if n > limit && !override_guard {
        return Err(Error::ResourceGuard { n, limit });
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Descriptor(_) => EXIT_PARSE,
        Error::ResourceGuard { .. } => EXIT_GUARD,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Gb(a) => cmd_gb(a),
        Command::Enumerate(a) => cmd_enumerate(a, stderr),
    };
    let out = match &cli.command {
        Command::Classify(a) => &a.common.out,
        Command::Gb(a) => &a.common.out,
        Command::Enumerate(a) => &a.common.out,
    };
    match result {
        Ok(text) => {
            let written = match out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_FAILURE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn cmd_classify(a: &ClassifyArgs) -> Result<String> {
    let g = load_graph(&a.input)?;
    let mut report = if a.theorem_only {
        crate::classify::classify_named(&g, &a.input)
    } else {
        cross_validate_named(&g, &a.input, &a.common.options())?
    };
    if a.all_pairs && !a.theorem_only && g.is_connected() {
        let witnesses = all_failing_pairs(&cut_matrix(&g)?, a.common.degree)?;
        if let Some(check) = report.computational_checks.iter_mut().find(|c| c.name == CHECK_KOSZUL) {
            check.detail = Some(serde_json::json!({ "first": check.detail.take(), "all": witnesses }));
        }
    }
    let mut json = serde_json::to_string_pretty(&report).expect("report is serialisable");
    json.push('\n');
    Ok(json)
}

pub fn cmd_gb(a: &GbArgs) -> Result<String> {
    let g = load_graph(&a.input)?;
    guard(g.n(), GUARD_LIMIT, a.common.override_guard)?;
    let d = a.common.degree;
    let tie = parse_tie_break(&a.order)?;
    let ord = paper_order_with(g.n().max(2), tie)?;
    let matrix = cut_matrix(&g)?;
    let gens = if g.n() < 2 { Vec::new() } else { markov_generators_up_to(&matrix, d.max(2))? };
    let gb = buchberger(&matrix, &gens, &ord)?;

    let mut out = String::new();
    out.push_str(&format!("# n = {}\n", g.n()));
    out.push_str(&format!("# graph = {} ({g})\n", a.input));
    out.push_str(&format!("# order = {}\n", ord.name()));
    out.push_str(&format!("# D = {d} (generators of degree <= {d})\n"));
    out.push_str(&format!("# hilbert check up to D: {}\n", hilbert_check(&gb, &matrix, d)?));
    out.push_str(&format_binomials(&gb));

    if a.certify {
        match closed_form_family(recognize_family(&g))? {
            Some((label, fam)) => {
                let ord = paper_order(fam.graph.n())?;
                let ok = is_groebner_basis(&fam.binomials, &ord, &fam.matrix, d)?;
                out.push_str(&format!("# closed-form family for {label} on {}\n", fam.graph));
                for (b, l) in fam.binomials.iter().zip(&fam.labels) {
                    out.push_str(&format!("# {l:?}: {b}\n"));
                }
                out.push_str(&format!("# family certified up to D: {ok}\n"));
            }
            None => out.push_str("# no closed-form family for this graph\n"),
        }
    }
    Ok(out)
}

/// Counts of strong Koszul agreements over a corpus run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateSummary {
    pub classes: usize,
    pub confirmed: usize,
    pub consistent: usize,
    pub inconclusive: usize,
    pub disagree: usize,
}

/// Cross-validates every connected class up to `max_n` vertices; returns
/// the CSV text and the summary.
pub fn enumerate_corpus(max_n: usize, opts: &CrossValidateOptions) -> Result<(String, EnumerateSummary)> {
    guard(max_n, ENUMERATE_LIMIT, opts.override_guard)?;
    let graphs = connected_classes_up_to(max_n)?;
    let rows: Vec<(Vec<String>, Option<Agreement>)> = graphs
        .par_iter()
        .map(|g| {
            let report = cross_validate_named(g, &g.to_string(), opts)?;
            let agreement = report.check(CHECK_KOSZUL).map(|c| c.agreement);
            Ok((csv_row(g, &report), agreement))
        })
        .collect::<Result<_>>()?;
    let mut summary = EnumerateSummary { classes: rows.len(), ..Default::default() };
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for (row, agreement) in &rows {
        writer.write_record(row).expect("in-memory write");
        match agreement {
            Some(Agreement::Confirmed) => summary.confirmed += 1,
            Some(Agreement::Consistent) => summary.consistent += 1,
            Some(Agreement::Inconclusive) => summary.inconclusive += 1,
            Some(Agreement::Disagree) => summary.disagree += 1,
            None => {}
        }
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    Ok((String::from_utf8(bytes).expect("utf-8 csv"), summary))
}

fn cmd_enumerate(a: &EnumerateArgs, stderr: &mut dyn Write) -> Result<String> {
    let (csv, s) = enumerate_corpus(a.max_n, &a.common.options())?;
    let _ = writeln!(
        stderr,
        "{} classes up to n = {}, D = {}: {} confirmed, {} consistent, {} inconclusive, {} disagree",
        s.classes, a.max_n, a.common.degree, s.confirmed, s.consistent, s.inconclusive, s.disagree
    );
    Ok(csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cutideal").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tie_breaks() {
        assert_eq!(parse_tie_break("shuffled:3").unwrap(), TieBreak::Shuffled(3));
        assert!(parse_tie_break("shuffled:x").is_err());
        assert!(parse_tie_break("lex").is_err());
    }

    #[test]
    fn zero_ideal_gb() {
        let (code, out, _) = run_args(&["gb", "K2", "--order", "default"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.lines().all(|l| l.starts_with('#')));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["classify", "Q7"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["gb", "P9"]).0, EXIT_GUARD);
        assert_eq!(run_args(&["enumerate", "--max-n", "7"]).0, EXIT_GUARD);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_PARSE);
    }

    #[test]
    fn classify_theorem_only() {
        let (code, out, _) = run_args(&["classify", "C5", "--theorem-only"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["strongly_koszul_theorem"], false);
    }
}
