//! End-to-end runs of the `polyeuler` binary.

use std::path::Path;
use std::process::{Command, Output};

use polyeuler_cli::commands::{StirlingDocument, TableDocument};
use polyeuler_core::poly_euler::poly_euler_series;
use polyeuler_core::rational::int;
use polyeuler_core::xlambda::constant_value;

fn polyeuler(args: &[&str], out_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyeuler"))
        .args(args)
        .env("POLYEULER_OUT_DIR", out_dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn table_first_poly_euler_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(
        &[
            "table",
            "--family",
            "poly_euler",
            "--k",
            "1",
            "--n-max",
            "3",
            "--format",
            "csv",
            "--out",
            "-",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "1,1,x - 1/2"), "{text}");
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn table_degenerate_constant_row() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(
        &[
            "table",
            "--family",
            "deg_poly_euler",
            "--k",
            "2",
            "--n-max",
            "0",
            "--format",
            "csv",
            "--out",
            "-",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,k,polynomial\n0,2,1\n");
}

#[test]
fn table_at_x_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(&["table", "--k", "2", "--n-max", "1", "--x", "0"], dir.path());
    assert!(o.status.success());
    let path = dir.path().join("table_poly_euler.json");
    let doc: TableDocument = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc.rows.len(), 2);
    assert_eq!(constant_value(&doc.rows[1].poly), Some(int(-1)));
}

#[test]
fn negative_k_list_and_rational_lambda() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(
        &[
            "table",
            "--family",
            "deg_poly_euler",
            "--k=-1,2",
            "--n-max",
            "2",
            "--lambda",
            "-1/2",
            "--out",
            "-",
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let doc: TableDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.rows.len(), 6);
    assert_eq!(doc.lambda, "-1/2");
    assert_eq!(doc.rows.iter().filter(|r| r.k == Some(-1)).count(), 3);
}

#[test]
fn verify_single_identity() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(&["verify", "--ids", "T2.7", "--n-max", "12"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("verify_report.json")).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 1);
    assert_eq!(v["reports"][0]["verdict"], "pass");
    assert_eq!(v["reports"][0]["checked_range"]["n_max"], 12);
}

#[test]
fn verify_failing_variant_keeps_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(
        &["verify", "--ids", "T2.8", "--n-max", "4", "--k", "1", "--out", "-"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["discrepancy_count"], 1);
    let printed = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["variant"] == "as-printed")
        .unwrap();
    assert_eq!(printed["verdict"], "fail");
    assert!(printed["first_failure"]["n"].as_u64().unwrap() <= 4);
}

#[test]
fn verify_unknown_identity() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(&["verify", "--ids", "NoSuchId"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown identity"));
}

#[test]
fn config_errors_exit_two_and_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(&["table", "--lambda", "0.5"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("lambda"));
    let o = polyeuler(&["table", "--format", "xml"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("format"));
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "n_max = \"many\"\n").unwrap();
    let o = polyeuler(&["table", "--config", cfg.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n_max"));
    let o = polyeuler(&["verify", "--ids", "T2.7", "--x", "1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn order_below_grid_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(&["table", "--n-max", "10", "--order", "11"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("order"));
    let o = polyeuler(
        &["verify", "--ids", "T2.7", "--n-max", "10", "--order", "12"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let o = polyeuler(
        &["verify", "--ids", "T2.7", "--n-max", "10", "--order", "11"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "family = \"euler\"\nn_max = 6\nformat = \"csv\"\n").unwrap();
    let o = polyeuler(
        &["table", "--config", cfg.to_str().unwrap(), "--n-max", "2", "--out", "-"],
        dir.path(),
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "n,k,polynomial\n0,,1\n1,,x - 1/2\n2,,x^2 - x\n");
}

#[test]
fn json_table_round_trip_and_byte_stability() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = polyeuler(
            &["table", "--n-max", "8", "--k", "1,2", "--out", p.to_str().unwrap()],
            dir.path(),
        );
        assert!(o.status.success());
    }
    let text_a = std::fs::read_to_string(&a).unwrap();
    let text_b = std::fs::read_to_string(&b).unwrap();
    let strip = |t: &str| {
        t.lines()
            .filter(|l| !l.contains("\"generated_at\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&text_a), strip(&text_b));
    let doc: TableDocument = serde_json::from_str(&text_a).unwrap();
    for k in [1, 2] {
        let expected = poly_euler_series(k, 16).egf_coeffs();
        for r in doc.rows.iter().filter(|r| r.k == Some(k)) {
            assert_eq!(r.poly, expected[r.n]);
        }
    }
    assert_eq!(doc.rows.len(), 18);
}

#[test]
fn export_stirling_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = polyeuler(
        &["export-stirling", "--family", "stirling2", "--n-max", "4"],
        dir.path(),
    );
    assert!(o.status.success());
    let doc: StirlingDocument =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("stirling_stirling2.json")).unwrap()).unwrap();
    let s32 = doc.rows.iter().find(|r| r.n == 3 && r.l == 2).unwrap();
    assert_eq!(s32.value, polyeuler_core::LambdaPoly::constant(int(3)));
    let o = polyeuler(&["export-stirling", "--family", "poly_euler"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}
