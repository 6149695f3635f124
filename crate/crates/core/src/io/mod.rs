//! Text formats: the `.cg` crystal graph format, JSON documents, XYZ and OBJ.

mod cg;
mod export;
mod json;

pub use cg::{parse_cg, CgEdge, CrystalGraphFile, CrystalInput};
pub use export::{export_realization, export_surface, obj, xyz, Format};
pub use json::{realization_from_json, realization_to_json, GeometryFile, RealizationFile};
