use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattice-forge")).args(args).output().expect("spawn cli")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no '{}' in output:\n{}", key, text))
        .trim()
}

#[test]
fn nanotube_classify() {
    let o = run(&["nanotube", "6", "6", "--classify"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "metal\n");
    let o = run(&["nanotube", "10", "0", "--classify"]);
    assert_eq!(stdout(&o), "semiconductor\n");
}

#[test]
fn euler_c60() {
    let o = run(&["euler", &data("c60.json")]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(field(&s, "χ ="), "2");
    assert_eq!(field(&s, "N5 ="), "12");
    assert_eq!(field(&s, "N6 ="), "20");
}

#[test]
fn homology_and_direct_agree() {
    for name in ["hexagonal.cg", "square.cg", "kagome.cg", "diamond.cg", "auto/hexagonal_unlabelled.cg"] {
        let h = stdout(&run(&["realize", &data(name), "--method", "homology"]));
        let d = stdout(&run(&["realize", &data(name), "--method", "direct"]));
        for s in [&h, &d] {
            let r: f64 = field(s, "eeT residual:").parse().unwrap();
            assert!(r < 1e-9, "{}: {}", name, r);
        }
        let parse = |s: &str| -> Vec<f64> {
            field(s, "inner products:").split_whitespace().map(|x| x.parse().unwrap()).collect()
        };
        let (a, b) = (parse(&h), parse(&d));
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9, "{}: {} vs {}", name, x, y);
        }
    }
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("diamond{}.json", k));
        let o = run(&["realize", &data("diamond.cg"), "--out", "json", "--output", path.to_str().unwrap()]);
        assert!(o.status.success());
        texts.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let a = run(&["realize", &data("gyroid.cg"), "--out", "json"]);
    let b = run(&["realize", &data("gyroid.cg"), "--out", "json"]);
    assert_eq!(a.stdout, b.stdout);

    let path = dir.path().join("diamond0.json");
    let o = run(&["verify", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "standard:"), "true");
}

#[test]
fn xyz_supercell() {
    let o = run(&["realize", &data("diamond.cg"), "--out", "xyz", "--supercell", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().next().unwrap(), "16");
    assert_eq!(s.lines().filter(|l| l.starts_with("C ")).count(), 16);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cg");
    std::fs::write(&bad, "dim 2\nvertex v\nedge v\n").unwrap();
    let o = run(&["realize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(run(&["realize", "/nonexistent/file.cg"]).status.code(), Some(1));
    assert_eq!(run(&["nanotube", "0", "0"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));

    // numerical failure: the gyroid lift has no cycle of length 3 or less
    let o = run(&["girth", &data("gyroid.cg"), "--cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&run(&["girth", &data("gyroid.cg")])), "girth: 10\n");

    // a displaced vertex is caught by verify
    let good = stdout(&run(&["realize", &data("hexagonal.cg"), "--out", "json"]));
    let moved = good.replacen("\"positions\": [\n    [\n      0.0", "\"positions\": [\n    [\n      0.25", 1);
    assert_ne!(good, moved);
    let path = dir.path().join("moved.json");
    std::fs::write(&path, moved).unwrap();
    assert_eq!(run(&["verify", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn band_and_spectrum() {
    let s = stdout(&run(&["band", "--grid", "12"]));
    assert_eq!(field(&s, "dirac points:"), "2");
    let s = stdout(&run(&["spectrum", &data("c60.json")]));
    assert_eq!(field(&s, "open shell:"), "false");
    let dens: Vec<f64> = field(&s, "density:").split_whitespace().map(|x| x.parse().unwrap()).collect();
    assert_eq!(dens.len(), 60);
    assert!(dens.iter().all(|d| (d - 1.0).abs() < 1e-9));
}

#[test]
fn shapes_match_bundled_fixtures() {
    for (name, file) in [("tetrahedron", "tetrahedron.json"), ("cube", "cube.json"), ("c60", "c60.json")] {
        let o = run(&["shape", name]);
        assert_eq!(stdout(&o), std::fs::read_to_string(data(file)).unwrap(), "{}", name);
    }
    let o = run(&["nanotube", "6", "6", "--out", "json"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(data("swnt_6_6.json")).unwrap());
}
