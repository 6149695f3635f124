//! Single-wall nanotubes rolled from a unit-bond graphene sheet.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::surface::{DiscreteSurface, Neighbor, V3};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Graphene lattice vectors for unit bonds; sublattice B sits at (0, -1).
pub fn graphene_basis() -> [[f64; 2]; 2] {
    [[SQRT3, 0.0], [SQRT3 / 2.0, -1.5]]
}

/// Inner product of two integer vectors in the graphene basis, times two.
pub fn twice_inner(a: (i64, i64), b: (i64, i64)) -> i64 {
    6 * a.0 * b.0 + 3 * (a.0 * b.1 + a.1 * b.0) + 6 * a.1 * b.1
}

fn cart(p: (f64, f64)) -> [f64; 2] {
    let [a1, a2] = graphene_basis();
    [p.0 * a1[0] + p.1 * a2[0], p.0 * a1[1] + p.1 * a2[1]]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChiralIndex {
    pub c1: i64,
    pub c2: i64,
    pub lambda: f64,
}

impl ChiralIndex {
    pub fn new(c1: i64, c2: i64) -> Result<Self> {
        Self::with_lambda(c1, c2, 1.0)
    }

    pub fn with_lambda(c1: i64, c2: i64, lambda: f64) -> Result<Self> {
        if c1 <= 0 || c2 < 0 {
            return Err(Error::InvalidArgument(format!("chiral index ({}, {}) needs c1 > 0, c2 >= 0", c1, c2)));
        }
        if !(lambda > 0.0) {
            return Err(Error::InvalidArgument("lambda must be positive".into()));
        }
        Ok(ChiralIndex { c1, c2, lambda })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TubeFrame {
    /// `c = c1 a1 + c2 a2` in graphene-basis coordinates.
    pub chiral: (i64, i64),
    /// `((c1 + 2 c2) a1 - (2 c1 + c2) a2) / gcd(c1, c2)`.
    pub translation: (i64, i64),
    /// Shortest lattice vector along the axis, dividing by `gcd(2 c1 + c2, c1 + 2 c2)`.
    pub primitive_translation: (i64, i64),
    pub chiral_cartesian: [f64; 2],
    pub translation_cartesian: [f64; 2],
    pub primitive_translation_cartesian: [f64; 2],
    /// `sqrt(c1^2 + c1 c2 + c2^2)`.
    pub diameter_parameter: f64,
    /// `lambda |c| / (2 pi)`.
    pub radius: f64,
}

pub fn tube_frame(ci: &ChiralIndex) -> TubeFrame {
    let (c1, c2) = (ci.c1, ci.c2);
    let g = c1.gcd(&c2);
    let dr = (2 * c1 + c2).gcd(&(c1 + 2 * c2));
    let translation = ((c1 + 2 * c2) / g, -(2 * c1 + c2) / g);
    let primitive_translation = ((c1 + 2 * c2) / dr, -(2 * c1 + c2) / dr);
    let to_cart = |p: (i64, i64)| {
        let v = cart((p.0 as f64, p.1 as f64));
        [v[0] * ci.lambda, v[1] * ci.lambda]
    };
    let chiral_cartesian = to_cart((c1, c2));
    let norm = chiral_cartesian[0].hypot(chiral_cartesian[1]);
    TubeFrame {
        chiral: (c1, c2),
        translation,
        primitive_translation,
        chiral_cartesian,
        translation_cartesian: to_cart(translation),
        primitive_translation_cartesian: to_cart(primitive_translation),
        diameter_parameter: ((c1 * c1 + c1 * c2 + c2 * c2) as f64).sqrt(),
        radius: norm / (2.0 * PI),
    }
}

/// Atoms in one primitive cell of the tube: `4 (c1^2 + c1 c2 + c2^2) / gcd(2 c1 + c2, c1 + 2 c2)`.
pub fn atoms_per_cell(ci: &ChiralIndex) -> i64 {
    let (c1, c2) = (ci.c1, ci.c2);
    4 * (c1 * c1 + c1 * c2 + c2 * c2) / (2 * c1 + c2).gcd(&(c1 + 2 * c2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Nanotube {
    pub frame: TubeFrame,
    pub surface: DiscreteSurface,
    /// Graphene-basis coordinates (times three) and sublattice of each atom.
    pub sites: Vec<((i64, i64), u8)>,
}

// neighbor steps in graphene-basis coordinates times three, counter-clockwise
const STEPS_A: [(i64, i64); 3] = [(-1, 2), (2, -1), (-1, -1)];
const STEPS_B: [(i64, i64); 3] = [(1, -2), (-2, 1), (1, 1)];
const B_OFFSET: (i64, i64) = (-1, 2);

/// Rolls the rectangle spanned by `c` and `n_periods` primitive translations
/// into a tube periodic along z.
pub fn build_swnt(ci: &ChiralIndex, n_periods: usize) -> Result<Nanotube> {
    if n_periods == 0 {
        return Err(Error::InvalidArgument("n_periods must be at least 1".into()));
    }
    let frame = tube_frame(ci);
    let c = frame.chiral;
    let t = frame.primitive_translation;
    let np = n_periods as i64;
    let det = c.0 * t.1 - c.1 * t.0;
    let (sgn, den) = (det.signum(), 3 * det.abs());
    // fractional coordinates of 3p over (c, t), as numerators over `den`
    let frac = |p: (i64, i64)| (sgn * (t.1 * p.0 - t.0 * p.1), sgn * (c.0 * p.1 - c.1 * p.0));

    let corners = [(0, 0), c, (np * t.0, np * t.1), (c.0 + np * t.0, c.1 + np * t.1)];
    let lo0 = corners.iter().map(|p| p.0).min().unwrap() - 2;
    let hi0 = corners.iter().map(|p| p.0).max().unwrap() + 2;
    let lo1 = corners.iter().map(|p| p.1).min().unwrap() - 2;
    let hi1 = corners.iter().map(|p| p.1).max().unwrap() + 2;

    let mut sites = Vec::new();
    let mut index = HashMap::new();
    for i in lo0..=hi0 {
        for j in lo1..=hi1 {
            for sub in 0u8..2 {
                let p = if sub == 0 { (3 * i, 3 * j) } else { (3 * i + B_OFFSET.0, 3 * j + B_OFFSET.1) };
                let (fs, ft) = frac(p);
                if (0..den).contains(&fs) && (0..np * den).contains(&ft) {
                    index.insert((fs, ft), sites.len());
                    sites.push((p, sub));
                }
            }
        }
    }

    let lam = ci.lambda;
    let chat = {
        let v = frame.chiral_cartesian;
        let n = v[0].hypot(v[1]);
        [v[0] / n, v[1] / n]
    };
    let perp = [-chat[1], chat[0]];
    let tc = frame.primitive_translation_cartesian;
    let axis = (tc[0] * perp[0] + tc[1] * perp[1]) * np as f64;
    let r = frame.radius;
    let positions: Vec<V3> = sites
        .iter()
        .map(|&(p, _)| {
            let q = cart((p.0 as f64 / 3.0, p.1 as f64 / 3.0));
            let x = lam * (q[0] * chat[0] + q[1] * chat[1]);
            let y = lam * (q[0] * perp[0] + q[1] * perp[1]);
            V3::new(r * (x / r).cos(), r * (x / r).sin(), y)
        })
        .collect();

    let mut neighbors = Vec::with_capacity(sites.len());
    for &(p, sub) in &sites {
        let steps = if sub == 0 { STEPS_A } else { STEPS_B };
        let mut triple = [Neighbor::plain(0); 3];
        for (k, s) in steps.iter().enumerate() {
            let (fs, ft) = frac((p.0 + s.0, p.1 + s.1));
            let key = (fs.rem_euclid(den), ft.rem_euclid(np * den));
            let lab = ft.div_euclid(np * den);
            let v = *index.get(&key).ok_or_else(|| Error::InvalidSurface("nanotube neighbor missing".into()))?;
            triple[k] = Neighbor::new(v, [lab, 0, 0]);
        }
        neighbors.push(triple);
    }
    let lattice = [V3::new(0.0, 0.0, axis), V3::zeros(), V3::zeros()];
    let surface = DiscreteSurface::new(positions, neighbors, Some(lattice))?;
    Ok(Nanotube { frame, surface, sites })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conductivity {
    Metal,
    Semiconductor,
}

impl std::fmt::Display for Conductivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Conductivity::Metal => "metal",
            Conductivity::Semiconductor => "semiconductor",
        })
    }
}

pub fn classify_metallic(ci: &ChiralIndex) -> Conductivity {
    if (ci.c1 - ci.c2).rem_euclid(3) == 0 {
        Conductivity::Metal
    } else {
        Conductivity::Semiconductor
    }
}

/// `sqrt(3) |c1 (a1 - b1) - c2 (a2 - b1)| / (2 sqrt(c1^2 + c1 c2 + c2^2))`.
pub fn length_index(ci: &ChiralIndex, a1: f64, a2: f64, b1: f64) -> f64 {
    let (c1, c2) = (ci.c1 as f64, ci.c2 as f64);
    SQRT3 * (c1 * (a1 - b1) - c2 * (a2 - b1)).abs() / (2.0 * (c1 * c1 + c1 * c2 + c2 * c2).sqrt())
}
