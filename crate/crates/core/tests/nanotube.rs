use lattice_forge::nanotube::*;
use proptest::prelude::*;

const S3: f64 = 1.732_050_807_568_877_2;

#[test]
fn frame_examples() {
    let f = tube_frame(&ChiralIndex::new(6, 6).unwrap());
    assert!((f.diameter_parameter - 108f64.sqrt()).abs() < 1e-12);
    assert!((f.diameter_parameter - 6.0 * S3).abs() < 1e-12);

    let f = tube_frame(&ChiralIndex::new(1, 0).unwrap());
    assert_eq!(f.chiral, (1, 0));
    assert_eq!(f.translation, (1, -2));
    assert!((f.chiral_cartesian[0] - S3).abs() < 1e-12 && f.chiral_cartesian[1].abs() < 1e-12);
    assert!(f.translation_cartesian[0].abs() < 1e-12 && (f.translation_cartesian[1] - 3.0).abs() < 1e-12);
    let c = f.chiral_cartesian;
    let t = f.translation_cartesian;
    assert!((c[0] * t[0] + c[1] * t[1]).abs() < 1e-12);

    for n in 1..10 {
        let f = tube_frame(&ChiralIndex::new(n, n).unwrap());
        assert_eq!(f.translation, (3, -3));
        assert_eq!(f.primitive_translation, (1, -1));
    }
}

#[test]
fn invalid_indices() {
    assert!(ChiralIndex::new(0, 0).is_err());
    assert!(ChiralIndex::new(3, -1).is_err());
    assert!(ChiralIndex::with_lambda(3, 1, 0.0).is_err());
    assert!(build_swnt(&ChiralIndex::new(3, 3).unwrap(), 0).is_err());
}

#[test]
fn classification() {
    let cls = |a, b| classify_metallic(&ChiralIndex::new(a, b).unwrap());
    assert_eq!(cls(6, 6), Conductivity::Metal);
    assert_eq!(cls(12, 8), Conductivity::Semiconductor);
    assert_eq!(cls(12, 0), Conductivity::Metal);
    assert_eq!(cls(10, 0), Conductivity::Semiconductor);
    assert_eq!(cls(6, 6).to_string(), "metal");
}

#[test]
fn length_index_examples() {
    let ci = ChiralIndex::new(6, 6).unwrap();
    assert_eq!(length_index(&ci, 0.3, 0.3, 0.3), 0.0);
    assert!((length_index(&ci, 1.0, 0.0, 0.0) - 0.5).abs() < 1e-12);
    let direct = S3 * (6.0f64 * 1.0 - 6.0 * 0.0).abs() / (2.0 * 108f64.sqrt());
    assert!((length_index(&ci, 1.0, 0.0, 0.0) - direct).abs() < 1e-15);
}

/// Counts honeycomb sites in the half-open cell spanned by the chiral vector
/// and the primitive translation, in plain Cartesian floating point. The cell
/// is nudged by a generic offset so no site sits on its boundary.
fn enumerate_cell(c1: i64, c2: i64) -> usize {
    let a1 = [S3, 0.0];
    let a2 = [S3 / 2.0, -1.5];
    let b = [0.0, -1.0];
    let c = [c1 as f64 * a1[0] + c2 as f64 * a2[0], c1 as f64 * a1[1] + c2 as f64 * a2[1]];
    let d = gcd(2 * c1 + c2, c1 + 2 * c2);
    let (t1, t2) = ((c1 + 2 * c2) / d, -(2 * c1 + c2) / d);
    let t = [t1 as f64 * a1[0] + t2 as f64 * a2[0], t1 as f64 * a1[1] + t2 as f64 * a2[1]];
    let det = c[0] * t[1] - c[1] * t[0];
    let off = [1.234e-6, 2.345e-6];
    let reach = (c1.abs() + c2.abs() + t1.abs() + t2.abs()) * 2 + 4;
    let mut count = 0;
    for i in -reach..=reach {
        for j in -reach..=reach {
            for sub in [[0.0, 0.0], b] {
                let p = [i as f64 * a1[0] + j as f64 * a2[0] + sub[0] + off[0], i as f64 * a1[1] + j as f64 * a2[1] + sub[1] + off[1]];
                let s = (p[0] * t[1] - p[1] * t[0]) / det;
                let u = (c[0] * p[1] - c[1] * p[0]) / det;
                if (0.0..1.0).contains(&s) && (0.0..1.0).contains(&u) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn atom_counts_match_enumeration() {
    let indices = [
        (1, 0), (2, 1), (3, 0), (3, 3), (4, 2), (5, 3), (5, 5), (6, 0), (6, 1), (6, 6),
        (7, 2), (7, 4), (8, 0), (8, 3), (9, 1), (10, 10), (11, 4), (12, 0), (12, 8), (13, 7),
    ];
    for (a, b) in indices {
        let ci = ChiralIndex::new(a, b).unwrap();
        let want = enumerate_cell(a, b);
        assert_eq!(atoms_per_cell(&ci) as usize, want, "({},{})", a, b);
        assert_eq!(build_swnt(&ci, 1).unwrap().surface.vertex_count(), want, "({},{})", a, b);
    }
    let table = [((6, 6), 24), ((5, 5), 20), ((12, 0), 48), ((12, 8), 304), ((5, 3), 196)];
    for ((a, b), n) in table {
        assert_eq!(atoms_per_cell(&ChiralIndex::new(a, b).unwrap()), n);
    }
}

#[test]
fn tube_geometry() {
    for (a, b) in [(6, 6), (12, 0), (8, 3), (5, 3)] {
        for lambda in [1.0, 1.42] {
            let ci = ChiralIndex::with_lambda(a, b, lambda).unwrap();
            let tube = build_swnt(&ci, 2).unwrap();
            let s = &tube.surface;
            assert_eq!(s.vertex_count() as i64, 2 * atoms_per_cell(&ci));
            let r = tube.frame.radius;
            for v in 0..s.vertex_count() {
                let x = s.positions[v];
                assert!((x[0].hypot(x[1]) - r).abs() < 1e-9);
                for e in s.edge_vectors(v) {
                    // a unit bond rolled onto the cylinder becomes a slightly shorter chord
                    assert!(e.norm() <= lambda + 1e-12 && e.norm() > 0.8 * lambda, "({},{}) {}", a, b, e.norm());
                }
                s.normal(v).unwrap();
            }
            let st = s.euler_stats().unwrap();
            assert_eq!(st.chi_from_counts, 0);
            assert_eq!(st.histogram.get(&6).copied(), Some(s.vertex_count() / 2));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chiral_and_translation_are_orthogonal(c1 in 1i64..60, c2 in 0i64..60) {
        let f = tube_frame(&ChiralIndex::new(c1, c2).unwrap());
        prop_assert_eq!(twice_inner(f.chiral, f.translation), 0);
        prop_assert_eq!(twice_inner(f.chiral, f.primitive_translation), 0);
        let (t, p) = (f.translation, f.primitive_translation);
        // the gcd-reduced translation is an integer multiple of the primitive one
        let k = if p.0 != 0 { t.0 / p.0 } else { t.1 / p.1 };
        prop_assert_eq!((k * p.0, k * p.1), t);
    }
}
