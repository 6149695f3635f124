use super::DiscreteSurface;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixed {
    /// Keep the period lattice; every vertex moves.
    Lattice,
    /// Keep these vertices in place.
    Vertices(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelaxResult {
    pub surface: DiscreteSurface,
    pub converged: bool,
    /// Max |H| of the input followed by each accepted iterate.
    pub history: Vec<f64>,
}

fn max_abs_h(s: &DiscreteSurface) -> Option<f64> {
    s.curvature_map().ok().map(|m| m.h.iter().fold(0.0f64, |a, h| a.max(h.abs())))
}

/// Damped normal flow `x += step * H * l^2 * n`, accepting a step only when
/// max |H| drops and halving the step otherwise.
pub fn relax_to_minimal(s: &DiscreteSurface, fixed: &Fixed, max_iters: usize, tol: f64) -> Result<RelaxResult> {
    let frozen: Vec<bool> = match fixed {
        Fixed::Lattice if s.lattice.is_some() => vec![false; s.vertex_count()],
        Fixed::Vertices(list) if !list.is_empty() => {
            let mut f = vec![false; s.vertex_count()];
            for &v in list {
                if v >= f.len() {
                    return Err(Error::InvalidArgument(format!("fixed vertex {} out of range", v)));
                }
                f[v] = true;
            }
            f
        }
        _ => return Err(Error::NoConstraints),
    };
    let mut cur = s.clone();
    let mut map = cur.curvature_map()?;
    let mut best = map.h.iter().fold(0.0f64, |a, h| a.max(h.abs()));
    let mut history = vec![best];
    let mut step = 0.5;
    for _ in 0..max_iters {
        if best < tol {
            break;
        }
        let normals = cur.normals()?;
        let mut sq = 0.0;
        for v in 0..cur.vertex_count() {
            sq += cur.edge_vectors(v).iter().map(|e| e.norm_squared()).sum::<f64>();
        }
        let l2 = sq / (3 * cur.vertex_count()) as f64;
        let mut accepted = false;
        while step > 1e-12 {
            let mut trial = cur.clone();
            for v in 0..trial.vertex_count() {
                if !frozen[v] {
                    trial.positions[v] += normals[v] * (step * map.h[v] * l2);
                }
            }
            if let Some(m) = max_abs_h(&trial) {
                if m < best {
                    cur = trial;
                    map = cur.curvature_map()?;
                    best = m;
                    history.push(m);
                    accepted = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Ok(RelaxResult { surface: cur, converged: best < tol, history })
}
