use std::path::Path;
use std::process::Command;

use sierpinski::cli::{run, EXIT_CONSISTENCY, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn sierp(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("sierpinski").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const NNN_TEXT: &str = "\
family = NNN
a = 1.0000000000000000
b = 1.0000000000000000
f_A = 0.50000000000000000 0.0000000000000000 0.0000000000000000 0.50000000000000000 0.0000000000000000 0.0000000000000000
f_B = 0.50000000000000000 0.0000000000000000 0.0000000000000000 0.50000000000000000 0.50000000000000000 0.0000000000000000
f_C = 0.50000000000000000 0.0000000000000000 0.0000000000000000 0.50000000000000000 0.25000000000000000 0.43301270189221930
";

#[test]
fn info_golden() {
    let (code, out, _) = sierp(&["info", "--family", "nnn", "--a", "1", "--b", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("triangle = acute"));
    assert!(out.contains("dimension = 1.5849625007213035"));
    assert!(out.ends_with(NNN_TEXT), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(sierp(&["info", "--family", "fff", "--a", "1.4", "--b", "2"]).0, EXIT_DOMAIN);
    assert_eq!(sierp(&["info", "--family", "xyz", "--a", "1", "--b", "1"]).0, EXIT_USAGE);
    assert_eq!(sierp(&["dimension", "--family", "nnn", "--a", "-1", "--b", "1"]).0, EXIT_DOMAIN);
    assert_eq!(sierp(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(sierp(&["--help"]).0, EXIT_OK);
}

#[test]
fn check_passes_for_valid_shapes() {
    for fam in ["nnn", "fnn", "ffn", "fff"] {
        let (code, out, err) = sierp(&["check", "--family", fam, "--a", "1.1", "--b", "0.9"]);
        assert_eq!(code, EXIT_OK, "{fam}: {out}{err}");
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 7, "{out}");
    }
}

#[test]
fn ffn_scan_csv() {
    let (code, out, err) = sierp(&["scan", "--family", "ffn", "--b-min", "0.5", "--b-max", "2", "--steps", "16"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,dimension,residual,reason"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 16);
    for row in &rows {
        assert_eq!(row.len(), 5);
        let d: f64 = row[2].parse().unwrap();
        assert!(d > 1.0 && d < 2.0);
    }
    assert!(err.contains("conjecture"));
}

#[test]
fn scan2d_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    let (code, _, err) = sierp(&[
        "scan2d", "--family", "nnn", "--a-min", "0.8", "--a-max", "1.2", "--b-min", "0.8", "--b-max", "1.2", "--steps", "5",
        "-o", path_str(&path),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 26);
}

#[test]
fn render_pgm_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.pgm");
    let b = dir.path().join("b.pgm");
    let args = |p: &Path| {
        sierp(&[
            "render", "--family", "fnn", "--a", "1.2", "--b", "0.8", "--mode", "chaos", "--points", "5000", "--seed", "4",
            "--width", "64", "--height", "48", "-o", path_str(p),
        ])
    };
    assert_eq!(args(&a).0, EXIT_OK);
    assert_eq!(args(&b).0, EXIT_OK);
    let bytes = std::fs::read(&a).unwrap();
    assert!(bytes.starts_with(b"P5\n64 48\n255\n"));
    assert_eq!(bytes.len(), "P5\n64 48\n255\n".len() + 64 * 48);
    assert_eq!(bytes, std::fs::read(&b).unwrap());

    let meta: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("a.pgm.json")).unwrap()).unwrap();
    assert_eq!(meta["rng"], "ChaCha8");
    assert_eq!(meta["seed"], 4);
    assert_eq!(meta["osc"]["passed"], true);
}

#[test]
fn render_cover_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cover.svg");
    let (code, _, err) =
        sierp(&["render", "--family", "nnn", "--a", "1", "--b", "1", "--depth", "3", "--format", "svg", "-o", path_str(&path)]);
    assert_eq!(code, EXIT_OK, "{err}");
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml") || svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polygon").count(), 27);

    let (code, _, _) = sierp(&["render", "--family", "nnn", "--a", "1", "--b", "1", "--mode", "chaos", "--format", "svg", "-o", path_str(&path)]);
    assert_ne!(code, EXIT_OK);
}

#[test]
fn tile_writes_svg_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let stem = dir.path().join("t");
    let (code, out, err) = sierp(&["tile", "--fff-algebraic", "2", "2", "--theta", "3(12)", "--k", "3", "--check-disjoint", "-o", path_str(&stem)]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("tiles = 27"));
    let svg = std::fs::read_to_string(dir.path().join("t.svg")).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 27);
    let manifest: serde_json::Value = serde_json::from_slice(&std::fs::read(dir.path().join("t.json")).unwrap()).unwrap();
    assert_eq!(manifest["k"], 3);
    assert!(manifest["tiles"].as_array().is_some_and(|t| t.len() == 27));
}

#[test]
fn tile_rejects_bad_theta() {
    let (code, _, _) = sierp(&["tile", "--family", "nnn", "--a", "1", "--b", "1", "--theta", "(4)"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, err) = sierp(&["tile", "--fff-algebraic", "1", "2"]);
    assert_ne!(code, EXIT_OK);
    assert!(err.contains("unsupported"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_sierpinski");
    let ok = Command::new(bin).args(["dimension", "--family", "nnn", "--a", "1", "--b", "1"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("d = 1.58496250072"));
    let bad = Command::new(bin).args(["info", "--family", "ffn", "--a", "0.6", "--b", "0.7"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DOMAIN));
    assert_ne!(EXIT_DOMAIN, EXIT_CONSISTENCY);
}
