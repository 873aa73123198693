use std::path::PathBuf;
use std::process::Command;

use lspace::cli::{FoxReport, GstReport, IntervalReport, SpliceReport};
use lspace::torsion::Verdict;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.display().to_string()
}

fn lspace(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lspace")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap(), out.status.code().unwrap())
}

#[test]
fn dset_exit_codes() {
    let (out, _, code) = lspace(&["dset", &data("solid_torus.toml"), "--mode", "pos"]);
    assert_eq!(code, 1);
    assert!(out.contains("empty"));
    let (out, _, code) = lspace(&["dset", &data("trefoil.toml")]);
    assert_eq!(code, 0);
    assert!(out.contains("t^1"), "{out}");
    let (_, err, code) = lspace(&["dset", &data("malformed.toml")]);
    assert_eq!(code, 2);
    assert!(err.contains("malformed.toml:3:"), "{err}");
    let (_, _, code) = lspace(&["dset", &data("missing.toml")]);
    assert_eq!(code, 2);
}

#[test]
fn gst_on_canonical_file() {
    let (out, _, code) = lspace(&["gst", &data("gst_g3_k2.toml")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("generalized solid torus: yes; deg Δ̄ = 2"), "{out}");
    let (out, _, _) = lspace(&["gst", &data("gst_g2_k1.toml"), "--json"]);
    let r: GstReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.verdict, Verdict::GeneralizedSolidTorus);
    assert_eq!(r.period, 2);
}

#[test]
fn interval_on_trefoil() {
    let (out, _, code) = lspace(&["interval", &data("trefoil.toml"), "--known", "1/0"]);
    assert_eq!(code, 0);
    assert!(out.contains("[1/1, 1/0]"), "{out}");
    let (out, _, _) = lspace(&["interval", &data("trefoil.toml"), "--known", "1/0", "--json"]);
    let r: IntervalReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.endpoints.map(|(a, b)| (a.to_string(), b.to_string())), Some(("1/1".into(), "1/0".into())));
    let (_, _, code) = lspace(&["interval", &data("trefoil.toml"), "--known", "0/1"]);
    assert_eq!(code, 2);
}

#[test]
fn splice_reports_uncovered_slope() {
    let (out, _, code) = lspace(&["splice", &data("solid_torus.toml"), &data("trefoil.toml"), "--matrix", "-1,0,0,1", "--json"]);
    assert_eq!(code, 0, "{out}");
    let r: SpliceReport = serde_json::from_str(&out).unwrap();
    assert!(!r.verdict);
    assert!(r.certificate.is_some());
    let (_, err, code) = lspace(&["splice", &data("trefoil.toml"), &data("trefoil.toml"), "--matrix", "1,0,0,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("determinant"), "{err}");
}

#[test]
fn family_lines() {
    let (out, _, code) = lspace(&["family", "ttk", "5", "2", "2", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("ttk_gst_predicate: true (s ≡ ±q mod p)"), "{out}");
    let (out, _, _) = lspace(&["family", "z", "5", "2"]);
    assert!(out.contains("distinguished"));
    let (_, _, code) = lspace(&["family", "z", "4", "2"]);
    assert_eq!(code, 2);
    let (a, _, _) = lspace(&["family", "ttk-sweep", "--max-p", "5", "--json"]);
    let (b, _, _) = lspace(&["family", "ttk-sweep", "--max-p", "5", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn fox_reports() {
    let (out, _, code) = lspace(&["fox", &data("trefoil.txt"), "--json"]);
    assert_eq!(code, 0);
    let r: FoxReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.alexander.unwrap().polynomial.to_string(), "1 - t + t^2");
    assert_eq!(r.verdict, Some(Verdict::NotGeneralizedSolidTorus));
    let (_, err, code) = lspace(&["fox", &data("bad_generator.txt")]);
    assert_eq!(code, 2);
    assert!(err.contains(":2:7: unknown generator `c`"), "{err}");
}

#[test]
fn data_files_are_canonical() {
    for f in ["trefoil.toml", "solid_torus.toml", "gst_g2_k1.toml", "gst_g3_k2.toml"] {
        let (out, _, code) = lspace(&["canon", &data(f)]);
        assert_eq!(code, 0);
        assert_eq!(out, std::fs::read_to_string(data(f)).unwrap(), "{f}");
    }
}
