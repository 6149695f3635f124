//! Trivalent discrete surfaces: normals, fundamental forms and curvature.

mod faces;
mod relax;
pub mod shapes;

pub use faces::{euler_stats, face_histogram, trace_faces, EulerStats, RotationSystem};
pub use relax::{relax_to_minimal, Fixed, RelaxResult};

use nalgebra::{Matrix2, Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::realization::CrystalRealization;

pub type V3 = Vector3<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Neighbor {
    pub vertex: usize,
    pub label: [i64; 3],
}

impl Neighbor {
    pub fn new(vertex: usize, label: [i64; 3]) -> Self {
        Neighbor { vertex, label }
    }

    pub fn plain(vertex: usize) -> Self {
        Neighbor { vertex, label: [0; 3] }
    }
}

/// A 3-regular geometric graph in space. The stored neighbor order fixes the
/// orientation of the normal.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteSurface {
    pub positions: Vec<V3>,
    pub neighbors: Vec<[Neighbor; 3]>,
    /// Period vectors as rows; neighbor `(j, l)` sits at `x_j + sum l_k row_k`.
    pub lattice: Option<[V3; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VertexGeometry {
    pub e: [V3; 3],
    pub n: V3,
    pub first_form: Matrix2<f64>,
    pub second_form: Matrix2<f64>,
    pub k: f64,
    pub h: f64,
    pub local_area: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureMap {
    pub k: Vec<f64>,
    pub h: Vec<f64>,
    pub local_area: Vec<f64>,
    pub total_area: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AreaVariationEntry {
    pub t: f64,
    pub finite_difference: f64,
    pub discrepancy: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AreaVariationReport {
    /// `-2 sum H A`.
    pub predicted: f64,
    pub entries: Vec<AreaVariationEntry>,
    /// `log(disc_i / disc_{i+1}) / log(t_i / t_{i+1})` for consecutive entries.
    pub decay_orders: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalReport {
    pub max_abs_h: f64,
    /// Norm of the cross-product system at each vertex.
    pub system_residual: Vec<f64>,
    pub max_system_residual: f64,
}

impl DiscreteSurface {
    pub fn new(positions: Vec<V3>, neighbors: Vec<[Neighbor; 3]>, lattice: Option<[V3; 3]>) -> Result<Self> {
        let n = positions.len();
        if neighbors.len() != n {
            return Err(Error::InvalidSurface(format!("{} positions but {} neighbor triples", n, neighbors.len())));
        }
        let mut darts = std::collections::HashMap::new();
        for (u, triple) in neighbors.iter().enumerate() {
            for nb in triple {
                if nb.vertex >= n {
                    return Err(Error::InvalidSurface(format!("vertex {} has neighbor {} out of range", u, nb.vertex)));
                }
                if nb.vertex == u && nb.label == [0; 3] {
                    return Err(Error::InvalidSurface(format!("vertex {} is its own neighbor", u)));
                }
                if nb.label != [0; 3] && lattice.is_none() {
                    return Err(Error::InvalidSurface("translation labels without a lattice".into()));
                }
                *darts.entry((u, nb.vertex, nb.label)).or_insert(0i64) += 1;
            }
        }
        for (&(u, v, l), &count) in &darts {
            let back = darts.get(&(v, u, [-l[0], -l[1], -l[2]])).copied().unwrap_or(0);
            if back != count {
                return Err(Error::InvalidSurface(format!("neighbor relation not symmetric between {} and {}", u, v)));
            }
        }
        Ok(DiscreteSurface { positions, neighbors, lattice })
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.positions.len() / 2
    }

    pub fn is_periodic(&self) -> bool {
        self.lattice.is_some()
    }

    pub fn translation(&self, label: &[i64; 3]) -> V3 {
        match &self.lattice {
            Some(rows) => rows[0] * label[0] as f64 + rows[1] * label[1] as f64 + rows[2] * label[2] as f64,
            None => V3::zeros(),
        }
    }

    pub fn neighbor_position(&self, nb: &Neighbor) -> V3 {
        self.positions[nb.vertex] + self.translation(&nb.label)
    }

    pub fn edge_vectors(&self, v: usize) -> [V3; 3] {
        let x = self.positions[v];
        self.neighbors[v].map(|nb| self.neighbor_position(&nb) - x)
    }

    /// Unit normal of the plane through the three neighbors.
    pub fn normal(&self, v: usize) -> Result<V3> {
        let e = self.edge_vectors(v);
        let cross = (e[1] - e[0]).cross(&(e[2] - e[0]));
        let scale = e.iter().map(|x| x.norm_squared()).fold(0.0, f64::max);
        let len = cross.norm();
        if !(len >= 1e-12 * scale) || len == 0.0 {
            return Err(Error::DegenerateVertex(v));
        }
        Ok(cross / len)
    }

    pub fn normals(&self) -> Result<Vec<V3>> {
        (0..self.vertex_count()).map(|v| self.normal(v)).collect()
    }

    fn geometry_with(&self, v: usize, normals: &[V3]) -> Result<VertexGeometry> {
        let e = self.edge_vectors(v);
        let n = normals[v];
        let u = [e[1] - e[0], e[2] - e[0]];
        let nb = self.neighbors[v].map(|x| normals[x.vertex]);
        let dn = [nb[1] - nb[0], nb[2] - nb[0]];
        let first_form = Matrix2::new(u[0].dot(&u[0]), u[0].dot(&u[1]), u[1].dot(&u[0]), u[1].dot(&u[1]));
        let second_form = -Matrix2::new(u[0].dot(&dn[0]), u[0].dot(&dn[1]), u[1].dot(&dn[0]), u[1].dot(&dn[1]));
        let inv = first_form.try_inverse().ok_or(Error::DegenerateVertex(v))?;
        let shape = inv * second_form;
        Ok(VertexGeometry {
            e,
            n,
            first_form,
            second_form,
            k: shape.determinant(),
            h: 0.5 * shape.trace(),
            local_area: 0.5 * u[0].cross(&u[1]).norm(),
        })
    }

    pub fn vertex_geometry(&self, v: usize) -> Result<VertexGeometry> {
        let normals = self.normals()?;
        self.geometry_with(v, &normals)
    }

    pub fn curvature_map(&self) -> Result<CurvatureMap> {
        let normals = self.normals()?;
        let mut k = Vec::with_capacity(self.vertex_count());
        let mut h = Vec::with_capacity(self.vertex_count());
        let mut local_area = Vec::with_capacity(self.vertex_count());
        for v in 0..self.vertex_count() {
            let g = self.geometry_with(v, &normals)?;
            k.push(g.k);
            h.push(g.h);
            local_area.push(g.local_area);
        }
        let total_area = local_area.iter().sum();
        Ok(CurvatureMap { k, h, local_area, total_area })
    }

    /// `sum_x A(x)` with `A(x)` the area of the neighbor triangle.
    pub fn total_area(&self) -> f64 {
        (0..self.vertex_count())
            .map(|v| {
                let e = self.edge_vectors(v);
                0.5 * (e[1] - e[0]).cross(&(e[2] - e[0])).norm()
            })
            .sum()
    }

    /// `|P(n2-n1) x P(n3-n1) - K (e2-e1) x (e3-e1)|` with `P` the tangent projection.
    pub fn gauss_identity_residual(&self, v: usize) -> Result<f64> {
        let normals = self.normals()?;
        self.gauss_with(v, &normals)
    }

    fn gauss_with(&self, v: usize, normals: &[V3]) -> Result<f64> {
        let g = self.geometry_with(v, normals)?;
        let proj = Matrix3::identity() - g.n * g.n.transpose();
        let nb = self.neighbors[v].map(|x| normals[x.vertex]);
        let lhs = (proj * (nb[1] - nb[0])).cross(&(proj * (nb[2] - nb[0])));
        let rhs = (g.e[1] - g.e[0]).cross(&(g.e[2] - g.e[0])) * g.k;
        Ok((lhs - rhs).norm())
    }

    pub fn max_gauss_identity_residual(&self) -> Result<f64> {
        let normals = self.normals()?;
        let mut worst: f64 = 0.0;
        for v in 0..self.vertex_count() {
            worst = worst.max(self.gauss_with(v, &normals)?);
        }
        Ok(worst)
    }

    /// Moves every vertex by `t` along its own normal.
    pub fn pushed(&self, normals: &[V3], t: f64) -> DiscreteSurface {
        let mut out = self.clone();
        for (x, n) in out.positions.iter_mut().zip(normals) {
            *x += n * t;
        }
        out
    }

    /// Central differences of total area along the normal flow against `-2 sum H A`.
    pub fn area_first_variation_check(&self, t_values: &[f64]) -> Result<AreaVariationReport> {
        let normals = self.normals()?;
        let map = self.curvature_map()?;
        let predicted = -2.0 * map.h.iter().zip(&map.local_area).map(|(h, a)| h * a).sum::<f64>();
        let entries: Vec<AreaVariationEntry> = t_values
            .iter()
            .map(|&t| {
                let fd = (self.pushed(&normals, t).total_area() - self.pushed(&normals, -t).total_area()) / (2.0 * t);
                AreaVariationEntry { t, finite_difference: fd, discrepancy: (fd - predicted).abs() }
            })
            .collect();
        let decay_orders = entries
            .windows(2)
            .map(|w| (w[0].discrepancy / w[1].discrepancy).ln() / (w[0].t / w[1].t).ln())
            .collect();
        Ok(AreaVariationReport { predicted, entries, decay_orders })
    }

    /// Max `|H|` and the norm of
    /// `D_{e2-e3} n x D_{e1} x + D_{e3-e1} n x D_{e2} x + D_{e1-e2} n x D_{e3} x`.
    pub fn minimal_residual(&self) -> Result<MinimalReport> {
        let normals = self.normals()?;
        let mut max_abs_h: f64 = 0.0;
        let mut system_residual = Vec::with_capacity(self.vertex_count());
        for v in 0..self.vertex_count() {
            let g = self.geometry_with(v, &normals)?;
            max_abs_h = max_abs_h.max(g.h.abs());
            let proj = Matrix3::identity() - g.n * g.n.transpose();
            let nb = self.neighbors[v].map(|x| normals[x.vertex]);
            let mut s = V3::zeros();
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                s += (proj * (nb[j] - nb[k])).cross(&(proj * g.e[i]));
            }
            system_residual.push(s.norm());
        }
        let max_system_residual = system_residual.iter().cloned().fold(0.0, f64::max);
        Ok(MinimalReport { max_abs_h, system_residual, max_system_residual })
    }

    /// Applies `x -> r x + t` to positions and `r` to the lattice.
    pub fn rigid_motion(&self, r: &Matrix3<f64>, t: &V3) -> DiscreteSurface {
        DiscreteSurface {
            positions: self.positions.iter().map(|x| r * x + t).collect(),
            neighbors: self.neighbors.clone(),
            lattice: self.lattice.map(|rows| rows.map(|row| r * row)),
        }
    }

    /// Underlying labeled multigraph, one edge per neighbor pair.
    pub fn labeled_graph(&self) -> Result<(MultiGraph, Vec<Vec<i64>>)> {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        let mut pending: std::collections::HashMap<(usize, usize, [i64; 3]), usize> = Default::default();
        for (u, triple) in self.neighbors.iter().enumerate() {
            for nb in triple {
                let rev = (nb.vertex, u, nb.label.map(|x| -x));
                if let Some(c) = pending.get_mut(&rev).filter(|c| **c > 0) {
                    *c -= 1;
                    continue;
                }
                *pending.entry((u, nb.vertex, nb.label)).or_insert(0) += 1;
                edges.push((u, nb.vertex));
                labels.push(nb.label.to_vec());
            }
        }
        Ok((MultiGraph::new(self.vertex_count(), edges)?, labels))
    }

    /// Same combinatorics placed at the vertices and periods of a 3D
    /// realization of `labeled_graph()`.
    pub fn with_realization(&self, r: &CrystalRealization) -> Result<DiscreteSurface> {
        if r.dim != 3 {
            return Err(Error::UnsupportedDimension(r.dim));
        }
        if r.positions.len() != self.vertex_count() || !self.is_periodic() {
            return Err(Error::InvalidSurface("realization does not match the surface".into()));
        }
        let row = |k: usize| V3::new(r.lattice.rows[k][0], r.lattice.rows[k][1], r.lattice.rows[k][2]);
        let positions = r.positions.iter().map(|p| V3::new(p[0], p[1], p[2])).collect();
        DiscreteSurface::new(positions, self.neighbors.clone(), Some([row(0), row(1), row(2)]))
    }

    pub fn rotation_system(&self) -> Result<RotationSystem> {
        RotationSystem::from_surface(self)
    }
}
