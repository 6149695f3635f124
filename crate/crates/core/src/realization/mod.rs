//! Standard realizations of topological crystals.

mod direct;
mod girth;
mod supercell;
mod verify;

pub use direct::{realize_harmonic_direct, DirectRealization};
pub use girth::{periodic_girth, DEFAULT_GIRTH_CAP};
pub use supercell::{supercell, Supercell, SupercellOptions};
pub use verify::{energy, verify_standard, EnergyReport, StandardReport};

use nalgebra::DMatrix;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, SpanningTree};
use crate::homology::{
    check_basis, check_label_split, cycle_basis, gram_matrix, label_split_basis, labels_from_basis,
    CycleBasis,
};
use crate::rational::{q, to_f64, QMatrix, Q};

/// Period vectors as the rows of a d-by-d matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodLattice {
    pub rows: Vec<Vec<f64>>,
}

impl PeriodLattice {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `sum_k n_k * row_k`.
    pub fn translate(&self, n: &[i64]) -> Vec<f64> {
        let d = self.dim();
        let mut out = vec![0.0; d];
        for (k, &nk) in n.iter().enumerate() {
            if nk != 0 {
                for j in 0..d {
                    out[j] += nk as f64 * self.rows[k][j];
                }
            }
        }
        out
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| self.rows[i][j])
    }

    pub fn volume(&self) -> f64 {
        self.matrix().determinant().abs()
    }

    pub fn gram(&self) -> Vec<Vec<f64>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| dot(&self.rows[i], &self.rows[j])).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrystalRealization {
    pub dim: usize,
    pub graph: MultiGraph,
    pub labels: Vec<Vec<i64>>,
    pub positions: Vec<Vec<f64>>,
    pub edge_vectors: Vec<Vec<f64>>,
    pub cotree_edges: Vec<usize>,
    pub lattice: PeriodLattice,
    /// Standardness constant `c` in `sum e e^T = c I`.
    pub c: f64,
}

impl CrystalRealization {
    /// `position(o(e)) + e`, the far end of edge `e` in the building block.
    pub fn endpoint(&self, e: usize) -> Vec<f64> {
        let o = self.graph.edges()[e].0;
        add(&self.positions[o], &self.edge_vectors[e])
    }

    pub fn cotree_endpoints(&self) -> Vec<Vec<f64>> {
        self.cotree_edges.iter().map(|&e| self.endpoint(e)).collect()
    }

    /// Applies `x -> m x` to every coordinate and period vector.
    pub fn transformed(&self, m: &DMatrix<f64>) -> CrystalRealization {
        let apply = |v: &Vec<f64>| -> Vec<f64> {
            (0..self.dim).map(|i| (0..self.dim).map(|j| m[(i, j)] * v[j]).sum()).collect()
        };
        let edge_vectors: Vec<Vec<f64>> = self.edge_vectors.iter().map(apply).collect();
        let c = edge_vectors.iter().map(|e| dot(e, e)).sum::<f64>() / self.dim as f64;
        CrystalRealization {
            positions: self.positions.iter().map(apply).collect(),
            edge_vectors,
            lattice: PeriodLattice { rows: self.lattice.rows.iter().map(apply).collect() },
            c,
            ..self.clone()
        }
    }

    /// Same graph and labels with new vertex positions and period vectors;
    /// edge vectors are recomputed from them.
    pub fn with_geometry(&self, positions: Vec<Vec<f64>>, lattice: PeriodLattice) -> CrystalRealization {
        let edge_vectors: Vec<Vec<f64>> = self
            .graph
            .edges()
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), l)| {
                let shift = lattice.translate(l);
                (0..self.dim).map(|k| positions[v][k] - positions[u][k] + shift[k]).collect()
            })
            .collect();
        let c = edge_vectors.iter().map(|e| dot(e, e)).sum::<f64>() / self.dim as f64;
        CrystalRealization { positions, edge_vectors, lattice, c, ..self.clone() }
    }

    pub fn scaled(&self, s: f64) -> CrystalRealization {
        self.transformed(&(DMatrix::identity(self.dim, self.dim) * s))
    }

    /// Rescales so that the period lattice has unit volume.
    pub fn unit_volume(&self) -> CrystalRealization {
        self.scaled(self.lattice.volume().powf(-1.0 / self.dim as f64))
    }

    /// Gram matrix of the edge vectors.
    pub fn edge_gram(&self) -> Vec<Vec<f64>> {
        self.edge_vectors
            .iter()
            .map(|a| self.edge_vectors.iter().map(|b| dot(a, b)).collect())
            .collect()
    }

    /// Sorted multiset of pairwise edge-vector inner products (`i <= j`).
    pub fn inner_product_multiset(&self) -> Vec<f64> {
        let g = self.edge_gram();
        let mut out = Vec::new();
        for i in 0..g.len() {
            for j in i..g.len() {
                out.push(g[i][j]);
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Full output of the homology route, keeping the exact intermediates.
#[derive(Clone, Debug)]
pub struct HomologyRealization {
    pub realization: CrystalRealization,
    pub basis: CycleBasis,
    pub gram: QMatrix,
    /// b-by-|E| matrix with column `e` equal to `a(e)`.
    pub projections: QMatrix,
    pub period_gram: QMatrix,
    /// Vertex positions as exact coefficients over the period vectors.
    pub position_coefficients: Vec<Vec<Q>>,
}

/// `a(e) = A^{-1} b(e)` with `b(e)_i = <e, alpha_i>`, one column per edge.
pub fn project_edges(a: &QMatrix, basis: &CycleBasis, g: &MultiGraph) -> Result<QMatrix> {
    let b = basis.len();
    if a.rows != b || a.cols != b {
        return Err(Error::DimensionMismatch { expected: b, got: a.rows });
    }
    let rhs = QMatrix::from_fn(b, g.edge_count(), |i, e| q(basis.alphas[i][e]));
    a.solve(&rhs)
}

/// Schur complement `A11 - A12 A22^{-1} A21` onto the first `d` cycles.
pub fn reduce_period_gram(a: &QMatrix, d: usize) -> Result<QMatrix> {
    let b = a.rows;
    if d == 0 || d > b {
        return Err(Error::InvalidArgument(format!("period count {} for rank {}", d, b)));
    }
    if d == b {
        return Ok(a.clone());
    }
    let a11 = a.block(0, 0, d, d);
    let a12 = a.block(0, d, d, b - d);
    let a21 = a.block(d, 0, b - d, d);
    let a22 = a.block(d, d, b - d, b - d);
    let x = a22.solve(&a21).map_err(|_| Error::Singular("vanishing block"))?;
    Ok(a11.sub(&a12.mul(&x)))
}

/// Lower-triangular factor with positive diagonal; its rows are the periods.
pub fn cholesky_lattice(b: &[Vec<f64>]) -> Result<PeriodLattice> {
    let d = b.len();
    let mut l = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let v = b[i][i] - s;
                if !(v > 0.0) {
                    return Err(Error::NotPositiveDefinite);
                }
                l[i][i] = v.sqrt();
            } else {
                l[i][j] = (b[i][j] - s) / l[j][j];
            }
        }
    }
    Ok(PeriodLattice { rows: l })
}

pub fn realize_max_abelian(g: &MultiGraph, basis: Option<&CycleBasis>) -> Result<HomologyRealization> {
    if g.betti() == 0 {
        return Err(Error::NoPeriodicity);
    }
    let tree = g.spanning_tree();
    let basis = match basis {
        Some(b) => {
            check_basis(g, b)?;
            CycleBasis { alphas: b.alphas.clone(), period_count: b.len() }
        }
        None => cycle_basis(g, &tree),
    };
    let labels = labels_from_basis(g, &tree, &basis)?;
    let d = basis.len();
    realize_from_basis(g, &tree, basis, labels, d)
}

pub fn realize_periodic(
    g: &MultiGraph,
    labels: &[Vec<i64>],
    d: usize,
    basis: Option<&CycleBasis>,
) -> Result<HomologyRealization> {
    if d == 0 || g.betti() == 0 {
        return Err(Error::NoPeriodicity);
    }
    let basis = match basis {
        Some(b) => {
            check_basis(g, b)?;
            check_label_split(b, labels, d)?;
            b.clone()
        }
        None => label_split_basis(g, labels, d)?,
    };
    let tree = g.spanning_tree();
    realize_from_basis(g, &tree, basis, labels.to_vec(), d)
}

fn realize_from_basis(
    g: &MultiGraph,
    tree: &SpanningTree,
    basis: CycleBasis,
    labels: Vec<Vec<i64>>,
    d: usize,
) -> Result<HomologyRealization> {
    let gram = gram_matrix(&basis)?;
    let projections = project_edges(&gram, &basis, g)?;
    let period_gram = reduce_period_gram(&gram, d)?;
    let lattice = cholesky_lattice(&period_gram.to_f64())?;

    let edge_coefficients: Vec<Vec<Q>> = (0..g.edge_count())
        .map(|e| (0..d).map(|i| projections[(i, e)].clone()).collect())
        .collect();
    let position_coefficients = tree_positions(g, tree, &edge_coefficients, &labels, d);
    let realization = assemble(g, tree, labels, d, lattice, &position_coefficients, &edge_coefficients);
    Ok(HomologyRealization { realization, basis, gram, projections, period_gram, position_coefficients })
}

/// Positions over the period basis from tree paths, shifted by tree labels so
/// that `e = x_t - x_o + label(e)` holds for every edge.
fn tree_positions(
    g: &MultiGraph,
    tree: &SpanningTree,
    edge_coefficients: &[Vec<Q>],
    labels: &[Vec<i64>],
    d: usize,
) -> Vec<Vec<Q>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut x = vec![Q::zero(); d];
            for dart in tree.path_from_root(g, v) {
                let s = q(dart.sign());
                for k in 0..d {
                    x[k] += &s * (&edge_coefficients[dart.edge][k] - q(labels[dart.edge][k]));
                }
            }
            x
        })
        .collect()
}

pub(crate) fn assemble(
    g: &MultiGraph,
    tree: &SpanningTree,
    labels: Vec<Vec<i64>>,
    d: usize,
    lattice: PeriodLattice,
    position_coefficients: &[Vec<Q>],
    edge_coefficients: &[Vec<Q>],
) -> CrystalRealization {
    let embed = |coef: &Vec<Q>| -> Vec<f64> {
        let mut out = vec![0.0; d];
        for (k, ck) in coef.iter().enumerate() {
            let f = to_f64(ck);
            for j in 0..d {
                out[j] += f * lattice.rows[k][j];
            }
        }
        out
    };
    let positions: Vec<Vec<f64>> = position_coefficients.iter().map(embed).collect();
    let edge_vectors: Vec<Vec<f64>> = edge_coefficients.iter().map(embed).collect();
    let c = edge_vectors.iter().map(|e| dot(e, e)).sum::<f64>() / d as f64;
    CrystalRealization {
        dim: d,
        graph: g.clone(),
        labels,
        positions,
        edge_vectors,
        cotree_edges: tree.cotree_edges.clone(),
        lattice,
        c,
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
