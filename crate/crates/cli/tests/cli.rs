use std::process::Command;

use matconc::table::{parse_csv, Value};
use matconc::{run, EXIT_IO, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn matconc(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("matconc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn reals(table: &matconc::table::CsvTable, name: &str) -> Vec<f64> {
    table
        .column(name)
        .unwrap()
        .into_iter()
        .map(|v| v.as_f64().unwrap())
        .collect()
}

#[test]
fn bounds_table_c_p_values() {
    let r = matconc(&["bounds-table", "--p", "1,2,4"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let table = parse_csv(&r.stdout).unwrap();
    assert_eq!(table.columns, ["p", "c_p"]);
    let cp = reals(&table, "c_p");
    let want = [
        (std::f64::consts::PI / 2.0).sqrt(),
        2f64.sqrt(),
        8f64.powf(0.25),
    ];
    for (got, want) in cp.iter().zip(want) {
        assert!((got - want).abs() <= 1e-12 * want, "{got} vs {want}");
    }
}

#[test]
fn bounds_table_with_family() {
    let r = matconc(&["bounds-table", "--p", "2", "--family", "wigner:5"]);
    assert_eq!(r.code, EXIT_OK);
    let table = parse_csv(&r.stdout).unwrap();
    assert_eq!(table.columns, ["p", "c_p", "sigma", "dimension_term", "moment_bound"]);
    // σ² = m - 1 for the Wigner family.
    assert_eq!(reals(&table, "sigma"), [2.0]);
}

#[test]
fn wigner_summary_reports_scales() {
    let r = matconc(&["wigner", "--m", "5", "--trials", "1", "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let lines: Vec<&str> = r.stderr.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("matconc wigner --seed 7 --trials 1"));
    let fields: Vec<&str> = lines[1].split_whitespace().collect();
    assert!(fields.contains(&"sigma_sq=4"), "{}", lines[1]);
    assert!(fields.contains(&"naive_sum=10"), "{}", lines[1]);
    let table = parse_csv(&r.stdout).unwrap();
    assert_eq!(table.columns, ["trial", "norm", "ratio"]);
    assert_eq!(table.rows.len(), 1);
}

#[test]
fn gt_check_is_deterministic() {
    let args = ["gt-check", "--dim", "4", "--trials", "10", "--seed", "1"];
    let a = matconc(&args);
    let b = matconc(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(parse_csv(&a.stdout).unwrap().rows.len(), 10);
    let c = matconc(&["gt-check", "--dim", "4", "--trials", "10", "--seed", "2"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn echo_line_reproduces_the_run() {
    let first = matconc(&["khintchine", "--trials", "200", "--p", "1,3"]);
    let echo = first.stderr.lines().next().unwrap().to_string();
    let argv: Vec<&str> = echo.split_whitespace().skip(1).collect();
    let second = matconc(&argv);
    assert_eq!(first.code, second.code);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(second.stderr.lines().next().unwrap(), echo);
}

#[test]
fn every_command_round_trips_through_csv() {
    let runs: [&[&str]; 8] = [
        &["bounds-table", "--p", "1,1.5,64"],
        &["gt-check", "--trials", "5"],
        &["mgf-check", "--trials", "3", "--s", "-1,0.5"],
        &["lemma2", "--trials", "3", "--family", "random:2,3"],
        &["khintchine", "--trials", "50"],
        &["tail", "--trials", "50", "--points", "7"],
        &["covariance", "--trials", "4", "--n", "200", "--dim", "3", "--ensemble", "sphere"],
        &["wigner", "--trials", "3", "--m", "6"],
    ];
    for args in runs {
        let r = matconc(args);
        assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.stderr);
        let table = parse_csv(&r.stdout).unwrap();
        assert!(!table.rows.is_empty());
        assert!(table.rows.iter().all(|row| row.len() == table.columns.len()));
        // Re-emitting the parsed rows reproduces the bytes.
        let rows = table.clone().into_rows(args[0]);
        let mut again = Vec::new();
        matconc::table::emit_table(&table.columns, &rows, &mut again).unwrap();
        assert_eq!(String::from_utf8(again).unwrap(), r.stdout, "{args:?}");
        assert!(r.stdout.ends_with('\n') && !r.stdout.contains('\r'));
        assert!(r.stdout.lines().all(|l| !l.ends_with(',')));
    }
}

#[test]
fn violations_exit_two_and_are_flagged() {
    // A zero residual tolerance cannot be met by quadrature.
    let r = matconc(&["mgf-check", "--trials", "3", "--residual-tol", "0"]);
    assert_eq!(r.code, EXIT_VIOLATION, "{}", r.stderr);
    let table = parse_csv(&r.stdout).unwrap();
    let flags = table.column("ok").unwrap();
    assert!(flags.iter().any(|v| **v == Value::Flag(false)));

    let ok = matconc(&["mgf-check", "--trials", "3"]);
    assert_eq!(ok.code, EXIT_OK);
    let table = parse_csv(&ok.stdout).unwrap();
    assert!(table.column("ok").unwrap().iter().all(|v| **v == Value::Flag(true)));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["gt-check", "--trials", "x"][..],
        &["no-such-command"],
        &["lemma2", "--family", "gue:3"],
        &["khintchine", "--trials", "1"],
        &["bounds-table", "--p", "0.5"],
        &["lemma2", "--family", "random:2,30", "--trials", "1"],
        &["wigner", "--m", "1"],
    ] {
        let r = matconc(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
    assert_eq!(matconc(&["--help"]).code, EXIT_OK);
}

#[test]
fn overflow_exits_three() {
    let r = matconc(&["mgf-check", "--trials", "2", "--scale", "3", "--s", "400"]);
    assert_eq!(r.code, EXIT_NUMERIC, "{}", r.stderr);
}

#[test]
fn out_flag_writes_file_and_reports_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gt.csv");
    let path_str = path.to_str().unwrap();
    let r = matconc(&["gt-check", "--trials", "3", "--out", path_str]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.is_empty());
    let direct = matconc(&["gt-check", "--trials", "3"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct.stdout);

    let missing = dir.path().join("missing").join("x.csv");
    let r = matconc(&["gt-check", "--trials", "3", "--out", missing.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_IO);
}

#[test]
fn binary_matches_library_and_ignores_thread_count() {
    let bin = env!("CARGO_BIN_EXE_matconc");
    let args = ["tail", "--trials", "300", "--points", "9", "--seed", "3"];
    let lib = matconc(&args);
    for threads in ["1", "3"] {
        let out = Command::new(bin)
            .args(args)
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(lib.code));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
        assert_eq!(String::from_utf8(out.stderr).unwrap(), lib.stderr);
    }
}
