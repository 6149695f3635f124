use std::collections::HashMap;

use super::{add, CrystalRealization};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SupercellOptions {
    /// Wrap edges that leave the box back into it.
    pub wrap: bool,
    /// Also emit `position(o(e)) + e` for every edge of every cell.
    pub building_block: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Supercell {
    pub points: Vec<Vec<f64>>,
    /// Index pairs into `points`.
    pub edges: Vec<(usize, usize)>,
    pub endpoints: Vec<Vec<f64>>,
}

pub fn supercell(r: &CrystalRealization, counts: &[usize], opts: SupercellOptions) -> Result<Supercell> {
    if counts.len() != r.dim {
        return Err(Error::DimensionMismatch { expected: r.dim, got: counts.len() });
    }
    if counts.iter().any(|&c| c == 0) {
        return Err(Error::InvalidArgument("supercell counts must be positive".into()));
    }
    let cells = cells(counts);
    let n = r.graph.vertex_count();
    let mut index = HashMap::new();
    let mut points = Vec::with_capacity(cells.len() * n);
    for cell in &cells {
        let shift = r.lattice.translate(cell);
        for v in 0..n {
            index.insert((v, cell.clone()), points.len());
            points.push(add(&r.positions[v], &shift));
        }
    }
    let mut edges = Vec::new();
    let mut endpoints = Vec::new();
    for cell in &cells {
        for (e, &(o, t)) in r.graph.edges().iter().enumerate() {
            let mut target: Vec<i64> = cell.iter().zip(&r.labels[e]).map(|(a, b)| a + b).collect();
            if opts.wrap {
                for (x, &c) in target.iter_mut().zip(counts) {
                    *x = x.rem_euclid(c as i64);
                }
            }
            if let Some(&j) = index.get(&(t, target)) {
                edges.push((index[&(o, cell.clone())], j));
            }
            if opts.building_block {
                endpoints.push(add(&r.endpoint(e), &r.lattice.translate(cell)));
            }
        }
    }
    Ok(Supercell { points, edges, endpoints })
}

fn cells(counts: &[usize]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &c in counts {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..c as i64).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}
