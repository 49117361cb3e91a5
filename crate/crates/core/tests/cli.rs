use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn qss_env(args: &[&str], stdin: &str, budget_env: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qss"));
    cmd.args(args)
        .env_remove("QSS_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if let Some(b) = budget_env {
        cmd.env("QSS_BUDGET", b);
    }
    let mut child = cmd.spawn().expect("spawn qss");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        out: String::from_utf8(out.stdout).unwrap(),
        err: String::from_utf8(out.stderr).unwrap(),
    }
}

fn qss(args: &[&str], stdin: &str) -> Run {
    qss_env(args, stdin, None)
}

const Z3: &str = "3\n0 1 2\n1 2 0\n2 0 1\n";
const ANTI: &str = "3\n0 2 1\n2 1 0\n1 0 2\n";

#[test]
fn budget_env_and_flag_precedence() {
    let pair = format!("{Z3}---\n{Z3}");
    let args = ["morph", "enumerate-homotopies", "-"];
    assert_eq!(qss_env(&args, &pair, Some("10")).code, 3);
    assert_eq!(qss_env(&args, &pair, None).code, 0);
    let flagged = ["--budget", "1000", "morph", "enumerate-homotopies", "-"];
    assert_eq!(qss_env(&flagged, &pair, Some("10")).code, 0);
    assert_eq!(qss_env(&args, &pair, Some("lots")).code, 2);
}

#[test]
fn enumerate_stream_reparses() {
    let run = qss(&["enumerate", "--order", "3"], "");
    assert_eq!(run.code, 0);
    let qs = qss::qcore::qgt::parse_stream(&run.out).unwrap();
    assert_eq!(qs.len(), 12);
    let run = qss(
        &["enumerate", "--order", "4", "--reduced", "--limit", "2"],
        "",
    );
    assert_eq!(qss::qcore::qgt::parse_stream(&run.out).unwrap().len(), 2);
    let run = qss(
        &["validate", "-"],
        &qss(&["enumerate", "--order", "3"], "").out,
    );
    assert_eq!(run.out.lines().filter(|l| l.ends_with("PASS")).count(), 12);
}

#[test]
fn semisymmetrize_then_check_pipeline() {
    let delta = qss(&["semisymmetrize"], Z3);
    assert_eq!(delta.code, 0);
    assert!(delta.out.starts_with("27\n"));
    let check = qss(&["check", "ss"], &delta.out);
    assert_eq!(check.code, 0, "{}", check.out);
    assert!(check.err.is_empty());
}

#[test]
fn v31_verbatim_reports_non_latin() {
    let run = qss(
        &[
            "semisymmetrize",
            "--functor",
            "nabla31",
            "--variant",
            "v31-verbatim",
        ],
        "2\n0 1\n1 0\n",
    );
    assert_eq!(run.code, 1);
    assert!(run.out.starts_with("4\n"));
    assert!(run.err.contains("not a Latin square"));
}

#[test]
fn find_iso_and_isotopy_output() {
    let run = qss(&["morph", "find-iso"], "2\n0 1\n1 0\n---\n2\n1 0\n0 1\n");
    assert_eq!((run.code, run.out.as_str()), (0, "1 0\n"));
    let run = qss(&["morph", "find-isotopy"], &format!("{Z3}---\n{ANTI}"));
    assert_eq!(run.code, 0);
    assert_eq!(run.out.lines().count(), 3);
    let run = qss(&["morph", "find-iso"], &format!("{Z3}---\n{ANTI}"));
    assert_eq!(run.code, 1);
    assert!(run.out.is_empty());
}

#[test]
fn probe_reports_and_budget_partial() {
    let pair = format!("{Z3}---\n{ANTI}");
    let run = qss(&["probe", "isotopy-vs-ss"], &pair);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.out,
        "PROBE isotopy-vs-ss isotopic=true delta_iso=true gamma_tables_equal=true\n"
    );
    let run = qss(&["--budget", "1", "probe", "isotopy-vs-ss"], &pair);
    assert_eq!(run.code, 3);
    assert!(run.out.contains("isotopic=unknown"));
    assert!(!run.err.is_empty());
}

#[test]
fn sweeps_without_inputs() {
    for property in ["adjunction", "faithful", "gf-algebra", "object-injectivity"] {
        let run = qss(
            &["check", property, "--max-order", "2", "--samples", "1000"],
            "",
        );
        assert_eq!(run.code, 0, "{property}: {}", run.out);
        assert!(run.out.lines().any(|l| l.starts_with("CHECK ")));
        assert!(!run.out.contains(" FAIL"));
    }
    let run = qss(&["check", "object-injectivity", "--max-order", "2"], "");
    assert!(run.out.contains("# gamma-untagged collisions: n2#0=n2#1"));
}

#[test]
fn show_parastrophes() {
    let run = qss(&["show"], Z3);
    assert_eq!(run.code, 0);
    assert_eq!(run.out.matches("---").count(), 2);
    let run = qss(&["show", "--parastrophe", "ldiv"], Z3);
    assert!(run.out.contains("3\n0 1 2\n2 0 1\n1 2 0\n"));
}
