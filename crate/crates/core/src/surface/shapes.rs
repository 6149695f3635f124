//! Reference surfaces: Platonic and Archimedean shells, flat graphene, and a
//! periodic 6.8.8 schwarzite.

use std::collections::HashMap;

use super::{DiscreteSurface, Neighbor, V3};
use crate::error::{Error, Result};

/// Trivalent polyhedron from its vertices (centered at the origin) by joining
/// points at distance `edge`; neighbors run counter-clockwise seen from outside.
pub fn from_convex_points(points: Vec<V3>, edge: f64) -> Result<DiscreteSurface> {
    let mut neighbors = Vec::with_capacity(points.len());
    for (i, x) in points.iter().enumerate() {
        let mut near: Vec<usize> = (0..points.len())
            .filter(|&j| j != i && ((points[j] - x).norm() - edge).abs() < 1e-9 * edge.max(1.0))
            .collect();
        if near.len() != 3 {
            return Err(Error::InvalidSurface(format!("vertex {} has {} neighbors", i, near.len())));
        }
        let out = x.normalize();
        let a = (points[near[0]] - x - out * (points[near[0]] - x).dot(&out)).normalize();
        let b = out.cross(&a);
        let angle = |j: usize| {
            let v = points[j] - x;
            v.dot(&b).atan2(v.dot(&a))
        };
        near.sort_by(|&p, &q| angle(p).total_cmp(&angle(q)));
        neighbors.push([Neighbor::plain(near[0]), Neighbor::plain(near[1]), Neighbor::plain(near[2])]);
    }
    DiscreteSurface::new(points, neighbors, None)
}

/// Regular tetrahedron with circumradius `r`.
pub fn tetrahedron(r: f64) -> DiscreteSurface {
    let s = r / 3f64.sqrt();
    let pts = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
        .iter()
        .map(|p| V3::new(p[0], p[1], p[2]) * s)
        .collect();
    from_convex_points(pts, 2.0 * 2f64.sqrt() * s).expect("tetrahedron")
}

/// Cube with edge length `a` centered at the origin.
pub fn cube(a: f64) -> DiscreteSurface {
    let mut pts = Vec::new();
    for i in 0..8 {
        let c = |bit: usize| if i >> bit & 1 == 1 { 0.5 * a } else { -0.5 * a };
        pts.push(V3::new(c(0), c(1), c(2)));
    }
    from_convex_points(pts, a).expect("cube")
}

/// Truncated icosahedron (the C60 cage) with edge length `a`.
pub fn truncated_icosahedron(a: f64) -> DiscreteSurface {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let bases = [[0.0, 1.0, 3.0 * phi], [1.0, 2.0 + phi, 2.0 * phi], [phi, 2.0, 2.0 * phi + 1.0]];
    let mut pts: Vec<V3> = Vec::new();
    for base in bases {
        for signs in 0..8 {
            let mut p = base;
            for (k, x) in p.iter_mut().enumerate() {
                if signs >> k & 1 == 1 {
                    *x = -*x;
                }
            }
            for shift in 0..3 {
                let v = V3::new(p[shift % 3], p[(shift + 1) % 3], p[(shift + 2) % 3]) * (a / 2.0);
                if !pts.iter().any(|q| (q - v).norm() < 1e-9) {
                    pts.push(v);
                }
            }
        }
    }
    from_convex_points(pts, a).expect("truncated icosahedron")
}

/// Flat periodic graphene with unit bonds, `nx` by `ny` cells in the xy-plane.
pub fn graphene_sheet(nx: usize, ny: usize) -> DiscreteSurface {
    let s3 = 3f64.sqrt();
    let a1 = V3::new(s3, 0.0, 0.0);
    let a2 = V3::new(s3 / 2.0, -1.5, 0.0);
    let (nx, ny) = (nx as i64, ny as i64);
    let index = |i: i64, j: i64, b: usize| -> (usize, [i64; 3]) {
        let (wi, li) = (i.rem_euclid(nx), i.div_euclid(nx));
        let (wj, lj) = (j.rem_euclid(ny), j.div_euclid(ny));
        (2 * (wi * ny + wj) as usize + b, [li, lj, 0])
    };
    let mut positions = Vec::new();
    let mut neighbors = Vec::new();
    for i in 0..nx {
        for j in 0..ny {
            let p = a1 * i as f64 + a2 * j as f64;
            positions.push(p);
            positions.push(p + V3::new(0.0, -1.0, 0.0));
            let nb = |(v, l): (usize, [i64; 3])| Neighbor::new(v, l);
            neighbors.push([nb(index(i, j, 1)), nb(index(i + 1, j - 1, 1)), nb(index(i, j - 1, 1))]);
            neighbors.push([nb(index(i, j, 0)), nb(index(i - 1, j + 1, 0)), nb(index(i, j + 1, 0))]);
        }
    }
    let lattice = [a1 * nx as f64, a2 * ny as f64, V3::new(0.0, 0.0, 1.0)];
    DiscreteSurface::new(positions, neighbors, Some(lattice)).expect("graphene sheet")
}

type P3 = [i64; 3];

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add(a: P3, b: P3) -> P3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Truncation of the {4,6|4} skew polyhedron: a periodic trivalent surface of
/// genus three per cubic cell with 8 hexagons and 12 octagons, lattice `2 I`.
pub fn p_schwarzite() -> DiscreteSurface {
    let solid = |c: P3| c.iter().filter(|x| x.rem_euclid(2) == 0).count() >= 2;
    // rotation at each vertex class: outgoing step -> next step counter-clockwise
    let mut rot: HashMap<P3, HashMap<P3, P3>> = HashMap::new();
    for c in cube_corners() {
        if !solid(c) {
            continue;
        }
        for axis in 0..3 {
            for sgn in [1i64, -1] {
                let mut nb = c;
                nb[axis] += sgn;
                if solid(nb) {
                    continue;
                }
                let (a, b) = ((axis + 1) % 3, (axis + 2) % 3);
                let mut base = c;
                base[axis] += (sgn > 0) as i64;
                let mut corners: Vec<P3> = [(0, 0), (1, 0), (1, 1), (0, 1)]
                    .iter()
                    .map(|&(da, db)| {
                        let mut p = base;
                        p[a] += da;
                        p[b] += db;
                        p
                    })
                    .collect();
                // (a, b, axis) is right-handed, so this square faces +axis
                if sgn < 0 {
                    corners.reverse();
                }
                for k in 0..4 {
                    let u = corners[(k + 3) % 4];
                    let v = corners[k];
                    let w = corners[(k + 1) % 4];
                    rot.entry(v.map(|x| x.rem_euclid(2))).or_default().insert(sub(w, v), sub(u, v));
                }
            }
        }
    }
    let classes = cube_corners();
    let cyclic: HashMap<P3, Vec<P3>> = classes
        .iter()
        .map(|&v| {
            let r = &rot[&v];
            let mut order = vec![[1, 0, 0]];
            for _ in 0..5 {
                order.push(r[order.last().unwrap()]);
            }
            (v, order)
        })
        .collect();
    let mut ids = HashMap::new();
    let mut positions = Vec::new();
    for &v in &classes {
        for &d in &cyclic[&v] {
            ids.insert((v, d), positions.len());
            positions.push(V3::new(v[0] as f64, v[1] as f64, v[2] as f64) + V3::new(d[0] as f64, d[1] as f64, d[2] as f64) / 3.0);
        }
    }
    let mut neighbors = Vec::new();
    for &v in &classes {
        let order = &cyclic[&v];
        for (i, &d) in order.iter().enumerate() {
            let w = add(v, d);
            let wr = w.map(|x| x.rem_euclid(2));
            let label = w.map(|x| x.div_euclid(2));
            neighbors.push([
                Neighbor::new(ids[&(wr, d.map(|x| -x))], label),
                Neighbor::plain(ids[&(v, order[(i + 1) % 6])]),
                Neighbor::plain(ids[&(v, order[(i + 5) % 6])]),
            ]);
        }
    }
    let lattice = [V3::new(2.0, 0.0, 0.0), V3::new(0.0, 2.0, 0.0), V3::new(0.0, 0.0, 2.0)];
    DiscreteSurface::new(positions, neighbors, Some(lattice)).expect("schwarzite")
}

fn cube_corners() -> Vec<P3> {
    (0..8).map(|i| [i & 1, i >> 1 & 1, i >> 2 & 1]).collect()
}
