use num_traits::{Signed, Zero};

use super::{assemble, cholesky_lattice, CrystalRealization};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::homology::label_split_basis;
use crate::rational::{q, to_f64, QMatrix, Q};

/// Output of the Laplacian-plus-lattice solver with its exact intermediates.
#[derive(Clone, Debug)]
pub struct DirectRealization {
    pub realization: CrystalRealization,
    /// Harmonic vertex positions over the abstract periods, root pinned at 0.
    pub coefficients: Vec<Vec<Q>>,
    /// Edge vectors over the abstract periods.
    pub edge_coefficients: Vec<Vec<Q>>,
    /// `M = sum m_e m_e^T`.
    pub moment: QMatrix,
}

/// Solves the balance equations exactly, then picks the period Gram matrix
/// `G = c M^{-1}` with `det G = 1`.
pub fn realize_harmonic_direct(g: &MultiGraph, labels: &[Vec<i64>], d: usize) -> Result<DirectRealization> {
    if d == 0 || g.betti() == 0 {
        return Err(Error::NoPeriodicity);
    }
    // surjectivity check only; the basis itself is not used here
    label_split_basis(g, labels, d)?;

    let n = g.vertex_count();
    let mut lap = QMatrix::zeros(n, n);
    let mut rhs = QMatrix::zeros(n, d);
    for (e, &(o, t)) in g.edges().iter().enumerate() {
        if o == t {
            continue;
        }
        // row o: x_t - x_o + l ; row t: x_o - x_t - l
        lap[(o, o)] += q(1);
        lap[(o, t)] -= q(1);
        lap[(t, t)] += q(1);
        lap[(t, o)] -= q(1);
        for k in 0..d {
            let l = q(labels[e][k]);
            rhs[(o, k)] += &l;
            rhs[(t, k)] -= &l;
        }
    }
    let mut coefficients = vec![vec![Q::zero(); d]; n];
    if n > 1 {
        let reduced = lap.block(1, 1, n - 1, n - 1);
        let reduced_rhs = rhs.block(1, 0, n - 1, d);
        let x = reduced.solve(&reduced_rhs).map_err(|_| Error::Singular("graph laplacian"))?;
        for v in 1..n {
            for k in 0..d {
                coefficients[v][k] = x[(v - 1, k)].clone();
            }
        }
    }

    let edge_coefficients: Vec<Vec<Q>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(o, t))| (0..d).map(|k| &coefficients[t][k] - &coefficients[o][k] + q(labels[e][k])).collect())
        .collect();
    let mut moment = QMatrix::zeros(d, d);
    for m in &edge_coefficients {
        for i in 0..d {
            for j in 0..d {
                moment[(i, j)] += &m[i] * &m[j];
            }
        }
    }
    let det = moment.det();
    if !det.is_positive() {
        return Err(Error::DegenerateHarmonicImage);
    }
    let scale = to_f64(&det).powf(1.0 / d as f64);
    let inv = moment.inverse().map_err(|_| Error::DegenerateHarmonicImage)?;
    let gram: Vec<Vec<f64>> = inv.to_f64().into_iter().map(|r| r.into_iter().map(|x| x * scale).collect()).collect();
    let lattice = cholesky_lattice(&gram)?;

    let tree = g.spanning_tree();
    let realization = assemble(g, &tree, labels.to_vec(), d, lattice, &coefficients, &edge_coefficients);
    Ok(DirectRealization { realization, coefficients, edge_coefficients, moment })
}
