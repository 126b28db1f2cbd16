use std::process::{Command, Output};

fn cutideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutideal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = cutideal(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn check<'a>(report: &'a serde_json::Value, name: &str) -> &'a serde_json::Value {
    report["computational_checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn classify_c5_reports_failure_and_witness() {
    let r = json(&["classify", "C5", "--trials", "5"]);
    assert_eq!(r["strongly_koszul_theorem"], false);
    assert_eq!(r["c5_minor"], true);
    let k = check(&r, "strongly-koszul");
    assert_eq!(k["verdict"], "fail");
    assert_eq!(k["agreement"], "confirmed");
    assert_eq!(check(&r, "compressed")["agreement"], "confirmed");
}

#[test]
fn classify_k23_is_consistent() {
    let r = json(&["classify", "K2,3", "--degree", "3", "--trials", "5"]);
    assert_eq!(r["strongly_koszul_theorem"], true);
    assert_eq!(r["quadratic_gb_theorem"], true);
    for c in r["computational_checks"].as_array().unwrap() {
        assert_ne!(c["agreement"], "disagree", "{c}");
    }
}

#[test]
fn malformed_file_exits_with_parse_code() {
    let dir = std::env::temp_dir().join(format!("cutideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "7 7\n").unwrap();
    let o = cutideal(&["classify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn graph_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("cutideal-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = cutideal::descriptor::parse_descriptor("clique-sum:C4+C3@edge").unwrap();
    let path = dir.join("g.txt");
    std::fs::write(&path, g.to_text()).unwrap();
    assert_eq!(cutideal::Graph::from_text(&g.to_text()).unwrap(), g);
    let from_file = json(&["classify", path.to_str().unwrap(), "--theorem-only"]);
    let from_name = json(&["classify", "clique-sum:C4+C3@edge", "--theorem-only"]);
    assert_eq!(from_file["edges"], from_name["edges"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gb_of_zero_ideals_is_empty() {
    for g in ["K2", "K3"] {
        let o = cutideal(&["gb", g]);
        assert!(o.status.success());
        assert!(stdout(&o).lines().all(|l| l.starts_with('#')), "{g}");
    }
}

#[test]
fn gb_certifies_closed_form_families() {
    for g in ["K1,3", "K2,2"] {
        let o = cutideal(&["gb", g, "--certify"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.contains("# family certified up to D: true"), "{g}:\n{text}");
        assert!(text.contains("# hilbert check up to D: true"), "{g}:\n{text}");
        assert!(text.lines().any(|l| !l.starts_with('#')), "{g}");
    }
}

#[test]
fn gb_alternate_orders() {
    for order in ["ascending", "descending", "shuffled:7"] {
        let o = cutideal(&["gb", "C4", "--order", order]);
        assert!(o.status.success(), "{order}");
    }
    assert_eq!(cutideal(&["gb", "C4", "--order", "lex"]).status.code(), Some(2));
}

#[test]
fn enumerate_small_corpora() {
    let o = cutideal(&["enumerate", "--max-n", "3", "--degree", "3", "--trials", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 4);
    assert!(text.starts_with("n,edges,canonical_form,"));

    let o = cutideal(&["enumerate", "--max-n", "4", "--degree", "3", "--trials", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 10);
    let k4 = text.lines().find(|l| l.starts_with("4,6,")).unwrap();
    assert!(k4.ends_with(",inconclusive"), "{k4}");
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 disagree"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--max-n", "4", "--degree", "3", "--trials", "4", "--seed", "11"];
    assert_eq!(cutideal(&args).stdout, cutideal(&args).stdout);
    let args = ["classify", "C5", "--degree", "3", "--trials", "4", "--all-pairs"];
    assert_eq!(cutideal(&args).stdout, cutideal(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("cutideal-out-{}.txt", std::process::id()));
    let o = cutideal(&["gb", "C4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("# n = 4"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn guards() {
    assert_eq!(cutideal(&["classify", "K3,6"]).status.code(), Some(3));
    assert_eq!(cutideal(&["enumerate", "--max-n", "7"]).status.code(), Some(3));
}
