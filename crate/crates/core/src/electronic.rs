//! Tight-binding bands of graphene and Hückel orbitals of molecular graphs.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::{symmetric_eigen, MultiGraph};

fn structure_factor(xi: [f64; 2]) -> (f64, f64) {
    (1.0 + xi[0].cos() + xi[1].cos(), xi[0].sin() + xi[1].sin())
}

/// `|1 + e^{i xi1} + e^{i xi2}|^2`, equal to `3 + 2cos xi1 + 2cos xi2 + 2cos(xi1 - xi2)`.
pub fn band_radicand(xi: [f64; 2]) -> f64 {
    let (re, im) = structure_factor(xi);
    re * re + im * im
}

/// Lower and upper band energies. The modulus is taken directly so that
/// band touching points come out at rounding level rather than its square root.
pub fn graphene_band(xi: [f64; 2]) -> (f64, f64) {
    let (re, im) = structure_factor(xi);
    let e = re.hypot(im);
    (-e, e)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridPoint {
    pub i: usize,
    pub j: usize,
    pub xi: [f64; 2],
    pub gap: f64,
}

/// Points of the `n` by `n` grid on `[0, 2pi)^2` whose band gap is below `tol`.
pub fn dirac_scan(grid_n: usize, tol: f64) -> Result<Vec<GridPoint>> {
    if grid_n < 3 {
        return Err(Error::InvalidArgument("grid must be at least 3".into()));
    }
    let h = 2.0 * PI / grid_n as f64;
    let mut out = Vec::new();
    for i in 0..grid_n {
        for j in 0..grid_n {
            let xi = [i as f64 * h, j as f64 * h];
            let (lo, hi) = graphene_band(xi);
            let gap = hi - lo;
            if gap < tol {
                out.push(GridPoint { i, j, xi, gap });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HuckelReport {
    /// Adjacency eigenvalues, descending; filled from the top.
    pub energies: Vec<f64>,
    /// Electrons per orbital, aligned with `energies`.
    pub occupations: Vec<f64>,
    pub density: Vec<f64>,
    /// Set when the highest occupied level is degenerate and only partly filled.
    pub open_shell: bool,
}

impl HuckelReport {
    /// Orbital energies in the `E = -lambda` convention, ascending.
    pub fn hamiltonian_energies(&self) -> Vec<f64> {
        self.energies.iter().map(|x| -x).collect()
    }
}

const DEGENERACY_TOL: f64 = 1e-9;

pub fn huckel(g: &MultiGraph, n_electrons: usize) -> Result<HuckelReport> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.vertex_count();
    if n_electrons > 2 * n {
        return Err(Error::InvalidArgument(format!("{} electrons for {} orbitals", n_electrons, n)));
    }
    let (energies, vecs) = symmetric_eigen(&g.adjacency_f64());
    let mut occupations = vec![0.0; n];
    let mut left = n_electrons as f64;
    let mut open_shell = false;
    let mut k = 0;
    while k < n && left > 0.0 {
        let mut end = k + 1;
        while end < n && (energies[end] - energies[k]).abs() < DEGENERACY_TOL {
            end += 1;
        }
        let capacity = 2.0 * (end - k) as f64;
        let fill = left.min(capacity);
        if fill < capacity {
            open_shell = true;
        }
        for occ in &mut occupations[k..end] {
            *occ = fill / (end - k) as f64;
        }
        left -= fill;
        k = end;
    }
    let density = (0..n)
        .map(|v| (0..n).map(|o| occupations[o] * vecs[(v, o)].powi(2)).sum())
        .collect();
    Ok(HuckelReport { energies, occupations, density, open_shell })
}
