use std::fmt::Write;

use super::json::{realization_to_json, GeometryFile};
use crate::error::{Error, Result};
use crate::realization::{supercell, CrystalRealization, SupercellOptions};
use crate::surface::DiscreteSurface;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Xyz,
    Obj,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "xyz" => Ok(Format::Xyz),
            "obj" => Ok(Format::Obj),
            other => Err(Error::InvalidArgument(format!("unknown format '{}'", other))),
        }
    }
}

fn pad3(p: &[f64]) -> [f64; 3] {
    [0, 1, 2].map(|k| p.get(k).copied().unwrap_or(0.0))
}

/// Atom lines `C x y z` behind the usual count and comment lines.
pub fn xyz(points: &[Vec<f64>], comment: &str) -> String {
    let mut s = format!("{}\n{}\n", points.len(), comment);
    for p in points {
        let [x, y, z] = pad3(p);
        writeln!(s, "C {} {} {}", x, y, z).unwrap();
    }
    s
}

pub fn obj(points: &[Vec<f64>], edges: &[(usize, usize)], faces: &[Vec<usize>]) -> String {
    let mut s = String::new();
    for p in points {
        let [x, y, z] = pad3(p);
        writeln!(s, "v {} {} {}", x, y, z).unwrap();
    }
    for &(a, b) in edges {
        writeln!(s, "l {} {}", a + 1, b + 1).unwrap();
    }
    for f in faces {
        let idx: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(s, "f {}", idx.join(" ")).unwrap();
    }
    s
}

pub fn export_realization(
    r: &CrystalRealization,
    names: &[String],
    format: Format,
    counts: &[usize],
    opts: SupercellOptions,
) -> Result<String> {
    if format != Format::Json && r.dim > 3 {
        return Err(Error::UnsupportedDimension(r.dim));
    }
    match format {
        Format::Json => {
            if counts.iter().any(|&c| c == 0) {
                return Err(Error::InvalidArgument("supercell counts must be positive".into()));
            }
            Ok(realization_to_json(r, names))
        }
        Format::Xyz => {
            let sc = supercell(r, counts, opts)?;
            let mut pts = sc.points;
            pts.extend(sc.endpoints);
            Ok(xyz(&pts, &format!("supercell {:?}", counts)))
        }
        Format::Obj => {
            let sc = supercell(r, counts, opts)?;
            let n = sc.points.len();
            let mut pts = sc.points;
            let mut edges = sc.edges;
            if opts.building_block {
                // one segment per edge of every cell, from its origin copy
                let cells = n / r.graph.vertex_count();
                for (k, p) in sc.endpoints.into_iter().enumerate() {
                    let cell = k / r.graph.edge_count();
                    let e = k % r.graph.edge_count();
                    let o = r.graph.edges()[e].0;
                    debug_assert!(cell < cells);
                    edges.push((cell * r.graph.vertex_count() + o, pts.len()));
                    pts.push(p);
                }
            }
            Ok(obj(&pts, &edges, &[]))
        }
    }
}

pub fn export_surface(s: &DiscreteSurface, format: Format) -> Result<String> {
    let pts: Vec<Vec<f64>> = s.positions.iter().map(|p| vec![p.x, p.y, p.z]).collect();
    match format {
        Format::Json => Ok(GeometryFile::from_surface(s, !s.is_periodic())?.to_json()),
        Format::Xyz => Ok(xyz(&pts, "surface")),
        Format::Obj => {
            let (g, labels) = s.labeled_graph()?;
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .zip(&labels)
                .filter(|(_, l)| l.iter().all(|&x| x == 0))
                .map(|(&e, _)| e)
                .collect();
            let faces = if s.is_periodic() { Vec::new() } else { s.faces()? };
            Ok(obj(&pts, &edges, &faces))
        }
    }
}
