use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::realization::{energy, verify_standard, CrystalRealization, PeriodLattice};
use crate::surface::{DiscreteSurface, Neighbor, V3};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub origin: usize,
    pub terminus: usize,
    pub label: Vec<i64>,
    pub vector: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualRecord {
    pub balance: f64,
    pub edge_sum: f64,
    pub eet: f64,
    pub closure: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnergyRecord {
    pub raw: f64,
    pub normalized: f64,
    pub volume: f64,
}

/// JSON form of a realization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealizationFile {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertex_names: Vec<String>,
    pub positions: Vec<Vec<f64>>,
    pub edges: Vec<EdgeRecord>,
    pub lattice: Vec<Vec<f64>>,
    pub c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals: Option<ResidualRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub energy: Option<EnergyRecord>,
}

impl RealizationFile {
    pub fn from_realization(r: &CrystalRealization, names: &[String]) -> Self {
        let rep = verify_standard(r);
        let en = energy(r);
        RealizationFile {
            dimension: r.dim,
            vertex_names: names.to_vec(),
            positions: r.positions.clone(),
            edges: r
                .graph
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(o, t))| EdgeRecord {
                    origin: o,
                    terminus: t,
                    label: r.labels[e].clone(),
                    vector: r.edge_vectors[e].clone(),
                })
                .collect(),
            lattice: r.lattice.rows.clone(),
            c: r.c,
            residuals: Some(ResidualRecord {
                balance: rep.balance_residual,
                edge_sum: rep.edge_sum_residual,
                eet: rep.eet_residual,
                closure: rep.closure_residual,
            }),
            energy: Some(EnergyRecord { raw: en.raw_energy, normalized: en.normalized_energy, volume: en.volume }),
        }
    }

    pub fn to_realization(&self) -> Result<CrystalRealization> {
        let d = self.dimension;
        let dims_ok = self.positions.iter().all(|p| p.len() == d)
            && self.edges.iter().all(|e| e.label.len() == d && e.vector.len() == d)
            && self.lattice.len() == d
            && self.lattice.iter().all(|r| r.len() == d);
        if !dims_ok {
            return Err(Error::Json(format!("coordinates do not all have dimension {}", d)));
        }
        let graph = MultiGraph::new(self.positions.len(), self.edges.iter().map(|e| (e.origin, e.terminus)).collect())?;
        let tree = graph.spanning_tree();
        Ok(CrystalRealization {
            dim: d,
            labels: self.edges.iter().map(|e| e.label.clone()).collect(),
            positions: self.positions.clone(),
            edge_vectors: self.edges.iter().map(|e| e.vector.clone()).collect(),
            cotree_edges: tree.cotree_edges,
            lattice: PeriodLattice { rows: self.lattice.clone() },
            c: self.c,
            graph,
        })
    }
}

pub fn realization_to_json(r: &CrystalRealization, names: &[String]) -> String {
    serde_json::to_string_pretty(&RealizationFile::from_realization(r, names)).expect("finite numbers") + "\n"
}

pub fn realization_from_json(text: &str) -> Result<CrystalRealization> {
    let f: RealizationFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    f.to_realization()
}

/// JSON form of a surface or any 3D geometric graph.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GeometryFile {
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<Vec<f64>>>,
    /// Ordered neighbor triples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighbors: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighbor_labels: Option<Vec<[[i64; 3]; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
}

impl GeometryFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite numbers") + "\n"
    }

    pub fn from_surface(s: &DiscreteSurface, with_faces: bool) -> Result<Self> {
        let labelled = s.neighbors.iter().flatten().any(|n| n.label != [0; 3]);
        let (g, labels) = s.labeled_graph()?;
        Ok(GeometryFile {
            vertices: s.positions.iter().map(|p| vec![p.x, p.y, p.z]).collect(),
            edges: g.edges().to_vec(),
            edge_labels: labelled.then_some(labels),
            lattice: s.lattice.map(|rows| rows.iter().map(|r| vec![r.x, r.y, r.z]).collect()),
            neighbors: Some(s.neighbors.iter().map(|t| t.map(|n| n.vertex)).collect()),
            neighbor_labels: labelled.then(|| s.neighbors.iter().map(|t| t.map(|n| n.label)).collect()),
            faces: if with_faces { Some(s.faces()?) } else { None },
        })
    }

    pub fn to_surface(&self) -> Result<DiscreteSurface> {
        let nbrs = self.neighbors.as_ref().ok_or_else(|| Error::Json("geometry has no neighbor triples".into()))?;
        let positions = self
            .vertices
            .iter()
            .map(|p| match p.as_slice() {
                [x, y, z] => Ok(V3::new(*x, *y, *z)),
                _ => Err(Error::Json("surface vertices must be 3D".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        let lattice = match &self.lattice {
            None => None,
            Some(rows) if rows.len() == 3 && rows.iter().all(|r| r.len() == 3) => {
                Some([0, 1, 2].map(|i| V3::new(rows[i][0], rows[i][1], rows[i][2])))
            }
            Some(_) => return Err(Error::Json("lattice must be 3x3".into())),
        };
        let labels = self.neighbor_labels.clone().unwrap_or_else(|| vec![[[0; 3]; 3]; nbrs.len()]);
        if labels.len() != nbrs.len() {
            return Err(Error::Json("neighbor_labels length differs from neighbors".into()));
        }
        let neighbors = nbrs
            .iter()
            .zip(&labels)
            .map(|(t, l)| [0, 1, 2].map(|k| Neighbor::new(t[k], l[k])))
            .collect();
        DiscreteSurface::new(positions, neighbors, lattice)
    }

    /// The combinatorial graph: explicit edges, else edges from neighbor triples.
    pub fn graph(&self) -> Result<MultiGraph> {
        if !self.edges.is_empty() {
            return MultiGraph::new(self.vertices.len(), self.edges.clone());
        }
        Ok(self.to_surface()?.labeled_graph()?.0)
    }
}
