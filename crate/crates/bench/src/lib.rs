//! Fixtures shared by the benchmarks.

use lattice_forge::io::CrystalInput;

pub const DIAMOND: &str = include_str!("../../../data/diamond.cg");
pub const GYROID: &str = include_str!("../../../data/gyroid.cg");
pub const CAIRO: &str = include_str!("../../../data/cairo.cg");

pub fn load(text: &str) -> CrystalInput {
    CrystalInput::parse(text).expect("bundled fixture")
}
