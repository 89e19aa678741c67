use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ginlex::format::read_ideal;
use ginlex::MonomialIdeal;
use tempfile::TempDir;

fn ginlex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ginlex")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn betti_of_maximal_square() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "m2.txt", "n=2\nx1^2, x1*x2, x2^2\n");
    let json = dir.path().join("out.json");
    for field in ["exact", "modular"] {
        let o = ginlex(&["betti", s(&file), "--method", "koszul", "--field", field, "--json", s(&json)]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
        let entries: Vec<(u64, u64, u64)> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
            .collect();
        assert_eq!(entries, vec![(0, 2, 3), (1, 3, 2)]);
    }
    for method in ["ek", "bigatti", "graph"] {
        let o = ginlex(&["betti", s(&file), "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
    }
}

#[test]
fn gin_of_square_with_seed() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "sq.txt", "n=2\nx2^2\n");
    let json = dir.path().join("gin.json");
    let o = ginlex(&["gin", s(&file), "--order", "revlex", "--seed", "7", "--json", s(&json)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_ideal(&stdout(&o)).unwrap(), MonomialIdeal::parse(2, "x1^2").unwrap());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["ideal"]["generators"], serde_json::json!([[2, 0]]));
}

#[test]
fn lex_and_hilbert() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "sq.txt", "# principal square\nn=2\nx2^2\n");
    let o = ginlex(&["lex", s(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_ideal(&stdout(&o)).unwrap(), MonomialIdeal::parse(2, "x1^2").unwrap());
    let o = ginlex(&["hilbert", s(&file), "--to", "3"]);
    assert_eq!(stdout(&o), "0: 0\n1: 0\n2: 1\n3: 2\n");
}

#[test]
fn verify_boston_and_sydney() {
    let o = ginlex(&["verify", "boston", "--n", "4", "--i", "2", "--j", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    let o = ginlex(&["verify", "sydney", "--n", "4", "--i", "3", "--j", "2", "--engines", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("shifted indices"));
    let o = ginlex(&["verify", "sweep", "--family", "boston", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4/4 cases passed"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "n=2\nx1^2, x3\n");
    let o = ginlex(&["betti", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"), "{}", String::from_utf8_lossy(&o.stderr));
    let missing = ginlex(&["lex", s(&dir.path().join("absent.txt"))]);
    assert_eq!(missing.status.code(), Some(2));
    // Eliahou-Kervaire needs a strongly stable ideal.
    let unstable = write(&dir, "unstable.txt", "n=2\nx2^2\n");
    assert_eq!(ginlex(&["betti", s(&unstable), "--method", "ek"]).status.code(), Some(3));
    assert_eq!(ginlex(&["verify", "boston", "--n", "4", "--i", "3", "--j", "3"]).status.code(), Some(3));
}

#[test]
fn structured_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "i.txt", "n=3\nx1*x3, x2^2, x3^3\n");
    let runs: Vec<Vec<String>> = vec![
        vec!["gin".into(), s(&file).into(), "--order".into(), "lex".into(), "--seed".into(), "99".into()],
        vec!["verify".into(), "sweep".into(), "--family".into(), "sydney".into(), "--max-n".into(), "4".into()],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for k in 0..2 {
            let json = dir.path().join(format!("run{k}.json"));
            let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
            full.extend(["--json", s(&json)]);
            let o = Command::new(env!("CARGO_BIN_EXE_ginlex"))
                .args(&full)
                .env("GINLEX_WORKERS", if k == 0 { "1" } else { "4" })
                .output()
                .unwrap();
            assert_eq!(o.status.code(), Some(0));
            outputs.push(fs::read(&json).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "{args:?}");
    }
}

#[test]
fn written_ideals_round_trip() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "i.txt", "n=4\nx1^2*x3, x2*x4^2, x1^2, x3^3\n");
    let json = dir.path().join("lex.json");
    let o = ginlex(&["lex", s(&file), "--json", s(&json)]);
    assert_eq!(o.status.code(), Some(0));
    let from_text = read_ideal(&stdout(&o)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let from_json = read_ideal(&v["ideal"].to_string()).unwrap();
    assert_eq!(from_text, from_json);
    let original = read_ideal(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(from_text.hilbert_function(8), original.hilbert_function(8));
    assert!(from_text.is_lexsegment());
}
