use std::process::{Command, Output};

use proptest::prelude::*;

fn expwin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expwin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = expwin(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

fn json(args: &[&str]) -> (serde_json::Value, bool) {
    let out = expwin(args);
    let v = serde_json::from_slice(&out.stdout).expect("one json object");
    (v, out.status.success())
}

#[test]
fn sample_examples() {
    let text = stdout(&["sample", "rectangular", "--n", "4"]);
    assert_eq!(text, "t,w\n0,1\n0.25,1\n0.5,1\n0.75,1\n");

    let text = stdout(&["sample", "exp:poly:m=1,n=1", "--n", "2"]);
    assert_eq!(text, "t,w\n0,0\n0.5,1\n");

    let rows = csv_rows(&stdout(&["sample", "sine", "--n", "4"]));
    let w: Vec<f64> = rows.iter().map(|r| r[1]).collect();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for (got, want) in w.iter().zip([0.0, h, 1.0, h]) {
        assert!((got - want).abs() < 1e-11);
    }
}

#[test]
fn no_crlf_and_dot_decimals() {
    let text = stdout(&["sample", "hann", "--n", "8"]);
    assert!(!text.contains('\r'));
    assert!(text.lines().skip(1).all(|l| l.split(',').count() == 2));
}

#[test]
fn spectrum_examples() {
    let rows = csv_rows(&stdout(&[
        "spectrum",
        "rectangular",
        "--fmax",
        "5",
        "--method",
        "quad",
    ]));
    let null = rows.iter().find(|r| r[0] == 1.0).expect("row at 1 Hz");
    assert!(null[1] < 1e-9, "{null:?}");

    let text = stdout(&["spectrum", "hann", "--fmax", "1e-9"]);
    assert_eq!(text, "f_hz,abs,db\n0,0.5,0\n");
}

#[test]
fn spectrum_paths_agree() {
    let fft = csv_rows(&stdout(&[
        "spectrum",
        "exp:poly:m=1,n=1",
        "--fmax",
        "10",
        "--pad",
        "16",
    ]));
    let quad = csv_rows(&stdout(&[
        "spectrum",
        "exp:poly:m=1,n=1",
        "--fmax",
        "10",
        "--pad",
        "16",
        "--method",
        "quad",
    ]));
    assert_eq!(fft.len(), quad.len());
    assert_eq!(fft.len(), 161);
    for (a, b) in fft.iter().zip(&quad) {
        assert_eq!(a[0], b[0]);
        assert!((a[1] - b[1]).abs() < 1e-4, "{a:?} {b:?}");
    }
}

#[test]
fn metrics_json_objects() {
    let raw = stdout(&["metrics", "rectangular"]);
    let keys = [
        "window",
        "omega0_hz",
        "leakage_pct",
        "sidelobe_db",
        "sidelobe_width_hz",
        "decay_scale_hz",
        "half_width_0p1s",
    ];
    let at: Vec<usize> = keys
        .iter()
        .map(|k| raw.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{raw}");
    assert_eq!(raw.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(v.as_object().unwrap().len(), keys.len());
    assert!((v["omega0_hz"].as_f64().unwrap() - 1.0).abs() < 0.01);
    assert!((v["leakage_pct"].as_f64().unwrap() - 9.71).abs() < 0.02);

    let (v, _) = json(&["metrics", "hamming"]);
    assert!((v["sidelobe_db"].as_f64().unwrap() + 44.1).abs() < 0.5);
}

#[test]
fn asymmetric_metrics_hold_their_bounds() {
    let (v, ok) = json(&["metrics", "exp:poly:m=1,n=2"]);
    assert!(ok, "{v}");
    let f = |k: &str| v[k].as_f64().unwrap();
    assert!(f("omega0_hz") > 0.0);
    assert!((0.0..100.0).contains(&f("leakage_pct")));
    assert!(f("sidelobe_db") < 0.0);
    assert!(f("sidelobe_width_hz") > 0.0);
    assert!(f("decay_scale_hz") >= f("omega0_hz"));
    assert!(f("half_width_0p1s") > 0.0 && f("half_width_0p1s") <= 10.0);
}

#[test]
fn bad_specs_fail_with_the_token() {
    let out = expwin(&["sample", "kaiser:beta=2"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("beta"));

    let out = expwin(&["spectrum", "exp:gauss"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("gauss"));
}

#[test]
fn metric_failure_is_a_json_error() {
    // a window too narrow for any null below the analysis limit
    let (v, ok) = json(&["metrics", "exp:poly:m=40,n=40"]);
    assert!(!ok);
    assert!(
        v["error"].as_str().unwrap().contains("exp:poly:m=40,n=40"),
        "{v}"
    );
}

#[test]
fn list_covers_the_catalog() {
    let text = stdout(&["list"]);
    let hamming = text.lines().find(|l| l.starts_with("hamming")).unwrap();
    assert!(hamming.contains("0.54 - 0.46 cos(2 pi t)"));
    let poly = text.lines().find(|l| l.starts_with("exp:poly")).unwrap();
    assert!(poly.contains("m, n"));
    let rows = text.lines().skip(1).take_while(|l| !l.is_empty()).count();
    assert_eq!(rows, 29);
    assert!(text.contains("avci_exp"));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hann.csv");
    let printed = expwin(&[
        "sample",
        "hann",
        "--n",
        "16",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(printed.status.success());
    assert!(printed.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        stdout(&["sample", "hann", "--n", "16"])
    );
}

#[test]
fn table_is_complete_and_deterministic() {
    let first = expwin(&["table"]);
    assert!(first.status.success());
    let second = expwin(&["table"]);
    assert_eq!(first.stdout, second.stdout);

    let text = String::from_utf8(first.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 29);
    let rect = rows.iter().find(|r| &r[1] == "Rectangular").unwrap();
    let cells: Vec<f64> = (3..9).map(|i| rect[i].parse().unwrap()).collect();
    let want = [1.00, 9.71, 13.3, 1.00, 317.5, 10.0];
    let tol = [0.03, 0.15, 0.5, 0.05, 0.05 * 317.5, 0.03];
    for i in 0..6 {
        assert!(
            (cells[i] - want[i]).abs() <= tol[i],
            "column {i}: {}",
            cells[i]
        );
    }

    let md = stdout(&["table", "--format", "markdown"]);
    assert!(md
        .lines()
        .any(|l| l.starts_with("| Planck-taper(epsilon=0.25) | 1.33 |")));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sample_has_n_rows(n in 1usize..200) {
        let text = stdout(&["sample", "exp:sine:c=0.5", "--n", &n.to_string()]);
        prop_assert_eq!(text.lines().count(), n + 1);
    }
}
