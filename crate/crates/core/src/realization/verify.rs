use super::{dot, CrystalRealization};

/// Scale-free standardness residuals.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardReport {
    /// Largest vertex balance `|sum_{E_v} e|`, over the RMS edge length.
    pub balance_residual: f64,
    /// `|sum_E e|` over all oriented edges, over the RMS edge length.
    pub edge_sum_residual: f64,
    /// `||sum_{E_0} e e^T - c I||_F / c`.
    pub eet_residual: f64,
    /// Largest `|x_t - x_o + L label(e) - e|`, over the RMS edge length.
    pub closure_residual: f64,
    pub c: f64,
}

impl StandardReport {
    pub fn is_standard(&self, tol: f64) -> bool {
        self.balance_residual < tol
            && self.edge_sum_residual < tol
            && self.eet_residual < tol
            && self.closure_residual < tol
    }
}

pub fn verify_standard(r: &CrystalRealization) -> StandardReport {
    let d = r.dim;
    let g = &r.graph;
    let m = r.edge_vectors.len().max(1);
    let sq: f64 = r.edge_vectors.iter().map(|e| dot(e, e)).sum();
    let rms = (sq / m as f64).sqrt();
    let unit = if rms > 0.0 { rms } else { 1.0 };

    let mut balance = vec![vec![0.0; d]; g.vertex_count()];
    for (e, &(o, t)) in g.edges().iter().enumerate() {
        for k in 0..d {
            balance[o][k] += r.edge_vectors[e][k];
            balance[t][k] -= r.edge_vectors[e][k];
        }
    }
    let balance_residual = balance.iter().map(|b| dot(b, b).sqrt()).fold(0.0, f64::max) / unit;
    let mut total = vec![0.0; d];
    for b in &balance {
        for k in 0..d {
            total[k] += b[k];
        }
    }
    let edge_sum_residual = dot(&total, &total).sqrt() / unit;

    let mut closure_residual: f64 = 0.0;
    for (e, &(o, t)) in g.edges().iter().enumerate() {
        let shift = r.lattice.translate(&r.labels[e]);
        let gap: f64 = (0..d)
            .map(|k| (r.positions[t][k] - r.positions[o][k] + shift[k] - r.edge_vectors[e][k]).powi(2))
            .sum();
        closure_residual = closure_residual.max(gap.sqrt() / unit);
    }

    let c = sq / d as f64;
    let mut fro = 0.0;
    for i in 0..d {
        for j in 0..d {
            let s: f64 = r.edge_vectors.iter().map(|e| e[i] * e[j]).sum();
            let target = if i == j { c } else { 0.0 };
            fro += (s - target).powi(2);
        }
    }
    let eet_residual = if c > 0.0 { fro.sqrt() / c } else { f64::INFINITY };
    StandardReport { balance_residual, edge_sum_residual, eet_residual, closure_residual, c }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnergyReport {
    pub raw_energy: f64,
    /// `Vol^{-2/d} * raw`, unchanged by uniform scaling.
    pub normalized_energy: f64,
    pub volume: f64,
}

pub fn energy(r: &CrystalRealization) -> EnergyReport {
    let raw_energy: f64 = r.edge_vectors.iter().map(|e| dot(e, e)).sum();
    let volume = r.lattice.volume();
    let normalized_energy = raw_energy * volume.powf(-2.0 / r.dim as f64);
    EnergyReport { raw_energy, normalized_energy, volume }
}
