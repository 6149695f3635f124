#![allow(dead_code)]

use lattice_forge::io::CrystalInput;
use lattice_forge::realization::{realize_periodic, HomologyRealization};

pub const FIXTURES: [&str; 9] =
    ["square", "hexagonal", "triangular", "kagome", "diamond", "gyroid", "kagome3d_i", "kagome3d_ii", "cairo"];

pub fn data_path(rel: &str) -> String {
    format!("{}/../../data/{}", env!("CARGO_MANIFEST_DIR"), rel)
}

pub fn load(name: &str) -> CrystalInput {
    let text = std::fs::read_to_string(data_path(&format!("{}.cg", name))).expect("fixture");
    CrystalInput::parse(&text).expect("valid fixture")
}

pub fn load_auto(name: &str) -> CrystalInput {
    let text = std::fs::read_to_string(data_path(&format!("auto/{}.cg", name))).expect("fixture");
    CrystalInput::parse(&text).expect("valid fixture")
}

pub fn realize(input: &CrystalInput) -> HomologyRealization {
    let (d, labels) = input.resolved_labels().unwrap();
    realize_periodic(&input.graph, &labels, d, input.basis.as_ref()).unwrap()
}

pub fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[track_caller]
pub fn assert_close(a: &[f64], b: &[f64], tol: f64) {
    assert!(close(a, b, tol), "{:?} vs {:?} (tol {:e})", a, b, tol);
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn s(x: f64) -> f64 {
    x.sqrt()
}
