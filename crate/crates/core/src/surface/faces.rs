use std::collections::{BTreeMap, HashMap};

use super::DiscreteSurface;
use crate::error::{Error, Result};
use crate::rational::{qf, Q};

/// Darts with twins and a cyclic order of outgoing darts at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub twin: Vec<usize>,
    pub rotation: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

impl RotationSystem {
    pub fn new(from: Vec<usize>, to: Vec<usize>, twin: Vec<usize>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let m = from.len();
        if to.len() != m || twin.len() != m {
            return Err(Error::InvalidSurface("dart arrays differ in length".into()));
        }
        let mut slot = vec![usize::MAX; m];
        for (v, darts) in rotation.iter().enumerate() {
            for (k, &d) in darts.iter().enumerate() {
                if d >= m || from[d] != v || slot[d] != usize::MAX {
                    return Err(Error::InconsistentOrientation(v));
                }
                slot[d] = k;
            }
        }
        for d in 0..m {
            let t = twin[d];
            if slot[d] == usize::MAX || t >= m || twin[t] != d || from[t] != to[d] || to[t] != from[d] {
                return Err(Error::InconsistentOrientation(from[d]));
            }
        }
        Ok(RotationSystem { from, to, twin, rotation, slot })
    }

    pub fn from_surface(s: &DiscreteSurface) -> Result<Self> {
        let n = s.vertex_count();
        let m = 3 * n;
        let mut from = Vec::with_capacity(m);
        let mut to = Vec::with_capacity(m);
        let mut occurrences: HashMap<(usize, usize, [i64; 3]), Vec<usize>> = HashMap::new();
        for (u, triple) in s.neighbors.iter().enumerate() {
            for nb in triple {
                occurrences.entry((u, nb.vertex, nb.label)).or_default().push(from.len());
                from.push(u);
                to.push(nb.vertex);
            }
        }
        let mut twin = vec![usize::MAX; m];
        for (&(u, v, l), list) in &occurrences {
            let back = occurrences
                .get(&(v, u, l.map(|x| -x)))
                .filter(|b| b.len() == list.len())
                .ok_or(Error::InconsistentOrientation(u))?;
            // parallel darts pair up in opposite cyclic order
            for (k, &d) in list.iter().enumerate() {
                twin[d] = back[back.len() - 1 - k];
            }
        }
        let rotation = (0..n).map(|u| vec![3 * u, 3 * u + 1, 3 * u + 2]).collect();
        Self::new(from, to, twin, rotation)
    }

    pub fn dart_count(&self) -> usize {
        self.from.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    /// The dart after `d` around its left face.
    pub fn next(&self, d: usize) -> usize {
        let t = self.twin[d];
        let around = &self.rotation[self.from[t]];
        around[(self.slot[t] + 1) % around.len()]
    }
}

/// Faces as cyclic dart sequences; every dart lies on exactly one face.
pub fn trace_faces(r: &RotationSystem) -> Result<Vec<Vec<usize>>> {
    let m = r.dart_count();
    let mut used = vec![false; m];
    let mut faces = Vec::new();
    for start in 0..m {
        if used[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        loop {
            if used[d] || face.len() > 2 * m {
                return Err(Error::InconsistentOrientation(r.from[d]));
            }
            used[d] = true;
            face.push(d);
            d = r.next(d);
            if d == start {
                break;
            }
        }
        faces.push(face);
    }
    Ok(faces)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerStats {
    /// Face size to count.
    pub histogram: BTreeMap<usize, usize>,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub chi_from_counts: i64,
    pub chi_from_formula: Q,
}

/// Euler characteristic two ways from a face-size histogram of a closed
/// trivalent surface graph.
pub fn euler_stats(histogram: &BTreeMap<usize, usize>, v: usize, e: usize) -> Result<EulerStats> {
    if histogram.keys().any(|&k| k == 0) {
        return Err(Error::InconsistentCounts("face of size 0".into()));
    }
    let sides: usize = histogram.iter().map(|(k, n)| k * n).sum();
    if sides != 2 * e {
        return Err(Error::InconsistentCounts(format!("E = {} but sum k N_k / 2 = {}/2", e, sides)));
    }
    if sides != 3 * v {
        return Err(Error::InconsistentCounts(format!("V = {} but sum k N_k / 3 = {}/3", v, sides)));
    }
    let f: usize = histogram.values().sum();
    let chi_from_formula = histogram
        .iter()
        .map(|(&k, &n)| qf((6 - k as i64) * n as i64, 6))
        .fold(qf(0, 1), |a, b| a + b);
    Ok(EulerStats {
        histogram: histogram.clone(),
        v,
        e,
        f,
        chi_from_counts: f as i64 - e as i64 + v as i64,
        chi_from_formula,
    })
}

pub fn face_histogram(faces: &[Vec<usize>]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for f in faces {
        *h.entry(f.len()).or_insert(0) += 1;
    }
    h
}

impl DiscreteSurface {
    pub fn euler_stats(&self) -> Result<EulerStats> {
        let faces = trace_faces(&self.rotation_system()?)?;
        euler_stats(&face_histogram(&faces), self.vertex_count(), self.edge_count())
    }

    /// Faces as vertex index cycles.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        let r = self.rotation_system()?;
        Ok(trace_faces(&r)?.into_iter().map(|f| f.into_iter().map(|d| r.from[d]).collect()).collect())
    }
}
