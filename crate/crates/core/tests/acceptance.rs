//! Exit criteria. Each test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use common::{dot, load, load_auto, norm, realize, s, FIXTURES};
use lattice_forge::electronic::{dirac_scan, graphene_band, huckel};
use lattice_forge::graph::MultiGraph;
use lattice_forge::nanotube::{build_swnt, ChiralIndex};
use lattice_forge::rational::{qf, QMatrix};
use lattice_forge::realization::{
    energy, periodic_girth, realize_harmonic_direct, verify_standard, DEFAULT_GIRTH_CAP,
};
use lattice_forge::surface::shapes::{cube, graphene_sheet, tetrahedron, truncated_icosahedron};
use lattice_forge::surface::euler_stats;
use lattice_forge::{CrystalRealization, DiscreteSurface, PeriodLattice};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects failed conditions for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn that(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn near(&mut self, got: &[f64], want: &[f64], tol: f64, what: &str) {
        let ok = got.len() == want.len() && got.iter().zip(want).all(|(a, b)| (a - b).abs() <= tol);
        self.that(ok, format!("{}: {:?} vs {:?} (tol {:e})", what, got, want, tol));
    }

    fn finish(self, n: usize, title: &str) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS  {}", n, title);
        } else {
            println!("criterion {}: FAIL  {}", n, title);
            for f in &self.failures {
                println!("    {}", f);
            }
            panic!("criterion {} failed: {}", n, self.failures.join("; "));
        }
    }
}

fn frac(rows: &[[i64; 2]; 2], den: i64) -> QMatrix {
    QMatrix::from_fn(2, 2, |i, j| qf(rows[i][j], den))
}

fn angle_check(c: &mut Check, w: &[Vec<f64>], cosine: f64, what: &str) {
    for i in 0..w.len() {
        for j in 0..w.len() {
            if i != j {
                let lhs = dot(&w[i], &w[j]);
                let rhs = cosine * norm(&w[i]) * norm(&w[j]);
                c.that((lhs - rhs).abs() < 1e-9, format!("{} <w{},w{}> = {} vs {}", what, i + 1, j + 1, lhs, rhs));
            }
        }
    }
}

#[test]
fn criterion_01_hexagonal() {
    let mut c = Check::default();
    let r = realize(&load("hexagonal")).realization;
    let w = [[1.0 / s(2.0), -1.0 / s(6.0)], [0.0, s(2.0 / 3.0)], [-1.0 / s(2.0), -1.0 / s(6.0)]];
    for (e, want) in w.iter().enumerate() {
        c.near(&r.endpoint(e), want, 1e-9, &format!("w{}", e + 1));
    }
    c.near(&r.lattice.rows[0], &[s(2.0), 0.0], 1e-9, "period 1");
    c.near(&r.lattice.rows[1], &[1.0 / s(2.0), s(1.5)], 1e-9, "period 2");
    c.finish(1, "hexagonal building block and lattice");
}

#[test]
fn criterion_02_diamond_and_hexagonal_angles() {
    let mut c = Check::default();
    let r = realize(&load("diamond")).realization;
    let h = 1.0 / (2.0 * s(3.0));
    let w = [
        [1.0 / s(2.0), -1.0 / s(6.0), -h],
        [0.0, s(2.0 / 3.0), -h],
        // -a1/4 - a2/4 + 3a3/4 over the period rows
        [0.0, 0.0, s(3.0) / 2.0],
        [-1.0 / s(2.0), -1.0 / s(6.0), -h],
    ];
    for (e, want) in w.iter().enumerate() {
        c.near(&r.endpoint(e), want, 1e-9, &format!("diamond w{}", e + 1));
    }
    let x = [[s(2.0), 0.0, 0.0], [1.0 / s(2.0), s(1.5), 0.0], [1.0 / s(2.0), 1.0 / s(6.0), 2.0 / s(3.0)]];
    for (k, row) in x.iter().enumerate() {
        c.near(&r.lattice.rows[k], row, 1e-9, &format!("diamond period {}", k + 1));
    }
    let ws: Vec<Vec<f64>> = (0..4).map(|e| r.endpoint(e)).collect();
    angle_check(&mut c, &ws, -1.0 / 3.0, "diamond");

    let r = realize(&load("hexagonal")).realization;
    let ws: Vec<Vec<f64>> = (0..3).map(|e| r.endpoint(e)).collect();
    angle_check(&mut c, &ws, -0.5, "hexagonal");
    c.finish(2, "diamond building block, tetrahedral and trigonal angles");
}

#[test]
fn criterion_03_gyroid() {
    let mut c = Check::default();
    let input = load("gyroid");
    let r = realize(&input).realization;
    let (r2, r3, r6) = (s(2.0), s(3.0), s(6.0));
    c.near(&r.positions[0], &[0.0, 0.0, 0.0], 1e-9, "v0");
    c.near(&r.positions[1], &[1.0 / r3, 1.0 / (2.0 * r6), -1.0 / (2.0 * r2)], 1e-9, "v1");
    c.near(&r.positions[2], &[-1.0 / r3, 1.0 / r6, 0.0], 1e-9, "v2");
    c.near(&r.positions[3], &[0.0, -0.5 * s(1.5), 1.0 / (2.0 * r2)], 1e-9, "v3");
    // cotree edges v1-v2, v2-v3, v3-v1 end at w1, w2, w3
    c.near(&r.endpoint(3), &[2.0 / r3, 1.0 / r6, 0.0], 1e-9, "w1");
    c.near(&r.endpoint(4), &[-1.0 / r3, 5.0 / (2.0 * r6), 1.0 / (2.0 * r2)], 1e-9, "w2");
    c.near(&r.endpoint(5), &[0.0, -0.5 * s(1.5), 3.0 / (2.0 * r2)], 1e-9, "w3");
    let (_, labels) = input.resolved_labels().unwrap();
    let g = periodic_girth(&input.graph, &labels, DEFAULT_GIRTH_CAP);
    c.that(g == Ok(10), format!("girth {:?}", g));
    c.finish(3, "gyroid coordinates and girth 10");
}

#[test]
fn criterion_04_triangular_and_kagome() {
    let mut c = Check::default();
    let tri = realize(&load("triangular"));
    c.that(tri.period_gram == frac(&[[2, -1], [-1, 2]], 3), format!("triangular B = {:?}", tri.period_gram));
    let r = &tri.realization;
    c.near(&r.edge_vectors[0], &[s(2.0 / 3.0), 0.0], 1e-9, "triangular e1");
    c.near(&r.edge_vectors[1], &[-1.0 / s(6.0), 1.0 / s(2.0)], 1e-9, "triangular e2");
    c.near(&r.edge_vectors[2], &[-1.0 / s(6.0), -1.0 / s(2.0)], 1e-9, "triangular e3");

    let kag = realize(&load("kagome"));
    c.that(kag.period_gram == frac(&[[2, -1], [-1, 2]], 3).scale(&qf(2, 1)), format!("kagome B = {:?}", kag.period_gram));
    let r = &kag.realization;
    let (a, b) = (1.0 / s(3.0), 1.0 / (2.0 * s(3.0)));
    c.near(&r.positions[1], &[a, 0.0], 1e-9, "kagome v1");
    c.near(&r.edge_vectors[0], &[a, 0.0], 1e-9, "kagome e1");
    c.near(&r.edge_vectors[1], &[-b, 0.5], 1e-9, "kagome e2");
    // w1 = v0 + e4 and w2 = v0 + e5
    c.near(&r.endpoint(3), &[-a, 0.0], 1e-9, "kagome w1");
    c.near(&r.edge_vectors[4], &[b, -0.5], 1e-9, "kagome w2");
    // e3 = -(b1 + b2)/2 and e6 = -e3
    c.near(&r.edge_vectors[2], &[-b, -0.5], 1e-9, "kagome e3");
    c.near(&r.edge_vectors[5], &[b, 0.5], 1e-9, "kagome e6");
    // the cycles e1 e2 e3 and e4 e5 e6 close up into the two triangles
    let sides: Vec<f64> = r.edge_vectors.iter().map(|e| norm(e)).collect();
    let (lo, hi) = sides.iter().fold((f64::MAX, f64::MIN), |(l, h), &x| (l.min(x), h.max(x)));
    c.that(hi - lo < 1e-9, format!("kagome side spread {:e}", hi - lo));
    for tri in [[0, 1, 2], [3, 4, 5]] {
        let sum: Vec<f64> = (0..2).map(|k| tri.iter().map(|&e| r.edge_vectors[e][k]).sum()).collect();
        c.near(&sum, &[0.0, 0.0], 1e-9, "triangle closes");
    }
    c.finish(4, "triangular and kagome period Gram matrices and coordinates");
}

/// Faces of a periodic planar realization, traced by angular order of the
/// darts at each vertex; each face is the list of its corner coordinates.
fn planar_faces(r: &CrystalRealization) -> Vec<Vec<[f64; 2]>> {
    let g = &r.graph;
    let darts: Vec<(usize, usize, [f64; 2])> = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(o, t))| {
            let v = [r.edge_vectors[e][0], r.edge_vectors[e][1]];
            [(o, t, v), (t, o, [-v[0], -v[1]])]
        })
        .collect();
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (d, &(o, _, _)) in darts.iter().enumerate() {
        around[o].push(d);
    }
    for list in around.iter_mut() {
        list.sort_by(|&a, &b| {
            let (va, vb) = (darts[a].2, darts[b].2);
            va[1].atan2(va[0]).total_cmp(&vb[1].atan2(vb[0]))
        });
    }
    // next dart: reverse of d, then one step clockwise around its tail
    let next = |d: usize| -> usize {
        let rev = d ^ 1;
        let list = &around[darts[rev].0];
        let i = list.iter().position(|&x| x == rev).unwrap();
        list[(i + list.len() - 1) % list.len()]
    };
    let mut used = vec![false; darts.len()];
    let mut faces = Vec::new();
    for start in 0..darts.len() {
        if used[start] {
            continue;
        }
        let mut p = [r.positions[darts[start].0][0], r.positions[darts[start].0][1]];
        let mut corners = Vec::new();
        let mut d = start;
        loop {
            used[d] = true;
            corners.push(p);
            p = [p[0] + darts[d].2[0], p[1] + darts[d].2[1]];
            d = next(d);
            if d == start {
                break;
            }
        }
        faces.push(corners);
    }
    faces
}

#[test]
fn criterion_05_cairo() {
    let mut c = Check::default();
    let cairo = load("cairo");
    let (d, labels) = cairo.resolved_labels().unwrap();
    let out = realize_harmonic_direct(&cairo.graph, &labels, d).unwrap();
    let expected: [(i64, i64); 12] =
        [(0, 0), (4, 0), (1, 2), (3, 2), (6, 1), (6, 3), (0, 4), (4, 4), (2, 5), (2, 7), (5, 6), (7, 6)];
    for (v, &(a, b)) in expected.iter().enumerate() {
        let want = vec![qf(a, 8), qf(b, 8)];
        c.that(out.coefficients[v] == want, format!("v{} coefficients {:?}", v, out.coefficients[v]));
    }
    let r = &out.realization;
    let p = &r.lattice.rows;
    c.that((norm(&p[0]) - norm(&p[1])).abs() < 1e-9, "|p1| = |p2|");
    c.that(dot(&p[0], &p[1]).abs() < 1e-9, "p1 orthogonal to p2");

    let mut lengths: Vec<f64> = r.edge_vectors.iter().map(|e| norm(e)).collect();
    lengths.sort_by(f64::total_cmp);
    let (short, long) = (lengths[0], lengths[lengths.len() - 1]);
    c.that(
        lengths.iter().all(|&l| (l - short).abs() < 1e-6 || (l - long).abs() < 1e-6),
        format!("more than two edge lengths: {:?}", lengths),
    );
    c.that((long / short - s(5.0) / 2.0).abs() < 1e-6, format!("length ratio {}", long / short));

    let faces = planar_faces(r);
    c.that(faces.len() == 8, format!("{} faces per cell", faces.len()));
    let (mut theta, mut phi) = (0, 0);
    for f in &faces {
        c.that(f.len() == 5, format!("face with {} corners", f.len()));
        let n = f.len();
        for i in 0..n {
            let (a, b, q) = (f[(i + n - 1) % n], f[i], f[(i + 1) % n]);
            let u = [a[0] - b[0], a[1] - b[1]];
            let w = [q[0] - b[0], q[1] - b[1]];
            let cos = dot(&u, &w) / (norm(&u) * norm(&w));
            if (cos + 1.0 / s(5.0)).abs() < 1e-6 {
                theta += 1;
            } else if (cos + 0.6).abs() < 1e-6 {
                phi += 1;
            } else {
                c.that(cos.abs() < 1e-6, format!("corner with cos {}", cos));
            }
        }
    }
    c.that(theta > 0 && phi > 0, format!("theta corners {}, phi corners {}", theta, phi));
    c.finish(5, "Cairo tiling harmonic coefficients, lattice, pentagon shape");
}

#[test]
fn criterion_06_cross_solver() {
    let mut c = Check::default();
    for name in ["square", "hexagonal", "triangular", "kagome", "diamond", "gyroid", "cairo"] {
        let input = load(name);
        let (d, labels) = input.resolved_labels().unwrap();
        let a = realize(&input).realization.unit_volume();
        let b = realize_harmonic_direct(&input.graph, &labels, d).unwrap().realization;
        c.near(&a.inner_product_multiset(), &b.inner_product_multiset(), 1e-9, name);
    }
    c.finish(6, "homology and direct solvers are congruent");
}

#[test]
fn criterion_07_verify_standard() {
    let mut c = Check::default();
    for name in FIXTURES {
        for (tag, input) in [("override", load(name)), ("auto", load_auto(name))] {
            let (d, labels) = input.resolved_labels().unwrap();
            let h = realize(&input).realization;
            let x = realize_harmonic_direct(&input.graph, &labels, d).unwrap().realization;
            for (solver, r) in [("homology", h), ("direct", x)] {
                let rep = verify_standard(&r);
                c.that(
                    rep.balance_residual < 1e-9 && rep.edge_sum_residual < 1e-9 && rep.eet_residual < 1e-9,
                    format!("{} {} {}: {:?}", name, tag, solver, rep),
                );
            }
        }
    }
    let hex = realize(&load("hexagonal")).realization;
    let sheared = hex.transformed(&DMatrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, 0.5]));
    let rep = verify_standard(&sheared);
    c.that(rep.balance_residual < 1e-9, format!("sheared balance {:e}", rep.balance_residual));
    c.that(rep.eet_residual > 0.1, format!("sheared eeT {:e}", rep.eet_residual));
    c.finish(7, "standardness residuals, sheared counterexample rejected");
}

fn det1_map(rng: &mut ChaCha8Rng, d: usize) -> DMatrix<f64> {
    loop {
        let m = DMatrix::<f64>::from_fn(d, d, |i, j| (i == j) as u8 as f64 + rng.random_range(-0.5..0.5));
        let det = m.determinant();
        if det.abs() > 0.1 {
            return m * det.abs().powf(-1.0 / d as f64);
        }
    }
}

#[test]
fn criterion_08_energy_minimality() {
    let mut c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for name in ["hexagonal", "square", "kagome"] {
        let r = realize(&load(name)).realization;
        let e0 = energy(&r).normalized_energy;
        for trial in 0..100 {
            let pos: Vec<Vec<f64>> = r
                .positions
                .iter()
                .map(|p| p.iter().map(|x| x + rng.random_range(-0.3..0.3)).collect())
                .collect();
            let moved = r.with_geometry(pos, r.lattice.clone());
            let e = energy(&moved).normalized_energy;
            c.that(e >= e0 - 1e-12, format!("{} perturbation {}: {} < {}", name, trial, e, e0));
        }
        for trial in 0..100 {
            let m = det1_map(&mut rng, r.dim);
            let sheared = r.transformed(&m);
            let vol = sheared.lattice.volume();
            c.that((vol - r.lattice.volume()).abs() < 1e-9 * vol, format!("{} shear {} changed volume", name, trial));
            let e = energy(&sheared).normalized_energy;
            c.that(e >= e0 - 1e-12, format!("{} shear {}: {} < {}", name, trial, e, e0));
        }
        // the lattice alone, vertices kept at their fractional coordinates
        let rows = DMatrix::from_fn(r.dim, r.dim, |i, j| r.lattice.rows[i][j]);
        let inv = rows.clone().try_inverse().unwrap();
        for trial in 0..20 {
            let m = det1_map(&mut rng, r.dim);
            let new_rows = &rows * m.transpose();
            let pos: Vec<Vec<f64>> = r
                .positions
                .iter()
                .map(|p| {
                    let f = DMatrix::from_row_slice(1, r.dim, p) * &inv;
                    (f * &new_rows).iter().copied().collect()
                })
                .collect();
            let lattice = PeriodLattice { rows: (0..r.dim).map(|i| new_rows.row(i).iter().copied().collect()).collect() };
            let e = energy(&r.with_geometry(pos, lattice)).normalized_energy;
            c.that(e >= e0 - 1e-12, format!("{} lattice shear {}: {} < {}", name, trial, e, e0));
        }
    }
    c.finish(8, "normalized energy is minimal under perturbations and shears");
}

fn table_row(c: &mut Check, what: &str, hist: &[(usize, usize)], v: usize, e: usize, f: usize, chi: i64) {
    let h: BTreeMap<usize, usize> = hist.iter().copied().collect();
    match euler_stats(&h, v, e) {
        Ok(st) => {
            c.that(st.f == f, format!("{}: F = {} vs {}", what, st.f, f));
            c.that(st.chi_from_counts == chi, format!("{}: chi = {} vs {}", what, st.chi_from_counts, chi));
            c.that(st.chi_from_formula == qf(chi, 1), format!("{}: chi from faces = {}", what, st.chi_from_formula));
        }
        Err(err) => c.that(false, format!("{} row (V, E, F) = ({}, {}, {}): {}", what, v, e, f, err)),
    }
}

fn traced(c: &mut Check, what: &str, s: &DiscreteSurface, want: (usize, usize, usize, i64)) {
    match s.euler_stats() {
        Ok(st) => {
            let got = (st.v, st.e, st.f, st.chi_from_counts);
            c.that(got == want, format!("{} traced {:?} vs {:?}", what, got, want));
            c.that(st.chi_from_formula == qf(st.chi_from_counts, 1), format!("{} chi mismatch", what));
        }
        Err(err) => c.that(false, format!("{}: {}", what, err)),
    }
}

#[test]
fn criterion_09_euler_table() {
    let mut c = Check::default();
    traced(&mut c, "C60", &truncated_icosahedron(1.0), (60, 90, 32, 2));
    let tube = build_swnt(&ChiralIndex::new(6, 6).unwrap(), 1).unwrap();
    traced(&mut c, "SWNT(6,6)", &tube.surface, (24, 36, 12, 0));
    table_row(&mut c, "C60", &[(5, 12), (6, 20)], 60, 90, 32, 2);
    table_row(&mut c, "SWNT(6,6)", &[(6, 12)], 24, 36, 12, 0);
    table_row(&mut c, "Mackay-Terrones", &[(6, 90), (8, 12)], 192, 288, 102, -4);
    c.finish(9, "Euler statistics table");
}

#[test]
fn criterion_10_curvature() {
    let mut c = Check::default();
    let ball = truncated_icosahedron(1.0);
    let r = ball.positions[0].norm();
    for v in 0..ball.vertex_count() {
        c.that((ball.positions[v] - ball.normal(v).unwrap() * r).norm() < 1e-9, format!("C60 vertex {} off sphere", v));
    }
    let m = ball.curvature_map().unwrap();
    let spread = |xs: &[f64]| {
        let (lo, hi) = xs.iter().fold((f64::MAX, f64::MIN), |(l, h), &x| (l.min(x), h.max(x)));
        hi - lo
    };
    c.that(spread(&m.k) < 1e-9 && spread(&m.h) < 1e-9, format!("spread K {:e} H {:e}", spread(&m.k), spread(&m.h)));
    c.that((m.k[0] - 1.0 / (r * r)).abs() < 1e-9, format!("C60 K {} vs {}", m.k[0], 1.0 / (r * r)));
    c.that((m.h[0] + 1.0 / r).abs() < 1e-9, format!("C60 H {} vs {}", m.h[0], -1.0 / r));

    let flat = graphene_sheet(4, 3).curvature_map().unwrap();
    c.that(flat.k.iter().chain(&flat.h).all(|x| x.abs() < 1e-9), "graphene not flat");

    for n in [3, 6, 10] {
        let tube = build_swnt(&ChiralIndex::new(n, n).unwrap(), 2).unwrap();
        let m = tube.surface.curvature_map().unwrap();
        let worst = m.k.iter().fold(0.0f64, |a, k| a.max(k.abs()));
        c.that(worst < 1e-9, format!("({},{}) max |K| {:e}", n, n, worst));
    }
    c.finish(10, "sphere-shaped, flat and armchair curvature");
}

fn perturbed(s: &DiscreteSurface, amount: f64, rng: &mut ChaCha8Rng) -> DiscreteSurface {
    let mut out = s.clone();
    for x in out.positions.iter_mut() {
        for k in 0..3 {
            x[k] += amount * rng.random_range(-1.0..1.0);
        }
    }
    out
}

#[test]
fn criterion_11_gauss_identity_and_area_variation() {
    let mut c = Check::default();
    let base = [("tetrahedron", tetrahedron(1.0)), ("cube", cube(1.0)), ("C60", truncated_icosahedron(1.0))];
    for (name, s) in &base {
        let res = s.max_gauss_identity_residual().unwrap();
        c.that(res < 1e-10, format!("{} gauss residual {:e}", name, res));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..50 {
        let (name, s) = &base[trial % base.len()];
        let p = perturbed(s, 0.1, &mut rng);
        match p.max_gauss_identity_residual() {
            Ok(res) => c.that(res < 1e-10, format!("perturbed {} #{} gauss residual {:e}", name, trial, res)),
            Err(e) => c.that(false, format!("perturbed {} #{}: {}", name, trial, e)),
        }
    }

    let c60 = truncated_icosahedron(1.0);
    for trial in 0..5 {
        let p = perturbed(&c60, 0.05, &mut rng);
        let rep = p.area_first_variation_check(&[4e-2, 2e-2, 1e-2]).unwrap();
        for order in &rep.decay_orders {
            c.that((order - 2.0).abs() < 0.1, format!("perturbed C60 #{} decay order {}", trial, order));
        }
        let rep = p.area_first_variation_check(&[1e-4]).unwrap();
        c.that(rep.entries[0].discrepancy <= 0.01 * rep.predicted.abs(), format!("perturbed C60 #{} at 1e-4: {:?}", trial, rep));
    }
    for (name, s) in &base {
        let rep = s.area_first_variation_check(&[1e-4]).unwrap();
        c.that(rep.entries[0].discrepancy <= 0.01 * rep.predicted.abs(), format!("{} at 1e-4: {:?}", name, rep));
    }
    c.finish(11, "Gauss identity and area first variation");
}

#[test]
fn criterion_12_spectra() {
    let mut c = Check::default();
    let benzene = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6)).collect()).unwrap();
    let spec = benzene.adjacency_spectrum();
    c.near(&spec, &[2.0, 1.0, 1.0, -1.0, -1.0, -2.0], 1e-9, "benzene spectrum");
    let rep = huckel(&benzene, 6).unwrap();
    c.that(rep.density.iter().all(|x| (x - 1.0).abs() < 1e-9), format!("benzene density {:?}", rep.density));

    let (lo, hi) = graphene_band([0.0, 0.0]);
    c.that((lo + 3.0).abs() < 1e-12 && (hi - 3.0).abs() < 1e-12, format!("band at origin {} {}", lo, hi));
    let (lo, hi) = graphene_band([2.0 * PI / 3.0, -2.0 * PI / 3.0]);
    c.that(lo.abs() < 1e-12 && hi.abs() < 1e-12, format!("band at Dirac point {} {}", lo, hi));

    let pts: Vec<(usize, usize)> = dirac_scan(12, 1e-9).unwrap().iter().map(|p| (p.i, p.j)).collect();
    // (2pi/3, 4pi/3) and (4pi/3, 2pi/3) on the grid of step 2pi/12
    c.that(pts == vec![(4, 8), (8, 4)], format!("dirac scan {:?}", pts));
    c.finish(12, "benzene, graphene band and Dirac points");
}

#[test]
fn criterion_13_girth() {
    let mut c = Check::default();
    for (name, want) in [("hexagonal", 6), ("square", 4), ("gyroid", 10)] {
        let input = load(name);
        let (_, labels) = input.resolved_labels().unwrap();
        let g = periodic_girth(&input.graph, &labels, DEFAULT_GIRTH_CAP);
        c.that(g == Ok(want), format!("{} girth {:?} vs {}", name, g, want));
    }
    c.finish(13, "periodic girth");
}
