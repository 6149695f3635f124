//! Integer 1-chains, cycle bases and the period/vanishing split.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, SpanningTree};
use crate::rational::{q, QMatrix};

pub type Chain = Vec<i64>;

pub fn unit_chain(g: &MultiGraph, e: usize) -> Chain {
    let mut c = vec![0; g.edge_count()];
    c[e] = 1;
    c
}

/// Linear extension of `t(e) - o(e)`.
pub fn boundary(g: &MultiGraph, c: &[i64]) -> Vec<i64> {
    let mut out = vec![0; g.vertex_count()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        out[v] += c[i];
        out[u] -= c[i];
    }
    out
}

pub fn chain_inner_product(a: &[i64], b: &[i64]) -> Result<i64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    Ok(a.iter().zip(b).map(|(x, y)| x * y).sum())
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Image of a chain under the edge labelling.
pub fn label_map(c: &[i64], labels: &[Vec<i64>], d: usize) -> Vec<i64> {
    let mut out = vec![0; d];
    for (ce, l) in c.iter().zip(labels) {
        if *ce != 0 {
            for k in 0..d {
                out[k] += ce * l[k];
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub alphas: Vec<Chain>,
    /// The first `period_count` cycles carry the periods; the rest vanish.
    pub period_count: usize,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }
}

/// One cycle per cotree edge, closed through the tree.
pub fn cycle_basis(g: &MultiGraph, tree: &SpanningTree) -> CycleBasis {
    let alphas: Vec<Chain> = tree
        .cotree_edges
        .iter()
        .map(|&e| {
            let mut c = unit_chain(g, e);
            let (o, t) = g.edges()[e];
            for d in tree.path(g, t, o) {
                c[d.edge] += d.sign();
            }
            c
        })
        .collect();
    let b = alphas.len();
    CycleBasis { alphas, period_count: b }
}

pub fn gram_matrix(basis: &CycleBasis) -> Result<QMatrix> {
    let b = basis.len();
    let a = QMatrix::from_fn(b, b, |i, j| q(dot(&basis.alphas[i], &basis.alphas[j])));
    if a.det().is_zero() {
        return Err(Error::Singular("gram matrix"));
    }
    Ok(a)
}

/// Cotree coordinates of each basis cycle, a b-by-b integer matrix.
pub fn cotree_matrix(tree: &SpanningTree, basis: &CycleBasis) -> Vec<Vec<i64>> {
    basis
        .alphas
        .iter()
        .map(|a| tree.cotree_edges.iter().map(|&e| a[e]).collect())
        .collect()
}

/// Checks that `basis` is a Z-basis of the cycle lattice.
pub fn check_basis(g: &MultiGraph, basis: &CycleBasis) -> Result<()> {
    let b = g.betti();
    if basis.len() != b {
        return Err(Error::InvalidBasis(format!("expected {} cycles, got {}", b, basis.len())));
    }
    for (i, a) in basis.alphas.iter().enumerate() {
        if a.len() != g.edge_count() {
            return Err(Error::InvalidBasis(format!("cycle {} has {} coefficients", i + 1, a.len())));
        }
        if boundary(g, a).iter().any(|&x| x != 0) {
            return Err(Error::InvalidBasis(format!("cycle {} has nonzero boundary", i + 1)));
        }
    }
    let tree = g.spanning_tree();
    let c = QMatrix::from_i64(&cotree_matrix(&tree, basis));
    let det = c.det();
    if det.is_zero() {
        return Err(Error::InvalidBasis("cycles are linearly dependent".into()));
    }
    if det.abs() != num_rational::BigRational::one() {
        return Err(Error::InvalidBasis("cycles span a proper sublattice".into()));
    }
    Ok(())
}

/// Edge labels that send `basis` to the standard generators, zero on tree edges.
pub fn labels_from_basis(g: &MultiGraph, tree: &SpanningTree, basis: &CycleBasis) -> Result<Vec<Vec<i64>>> {
    let b = basis.len();
    let c = QMatrix::from_i64(&cotree_matrix(tree, basis));
    let inv = c.inverse()?;
    let mut labels = vec![vec![0; b]; g.edge_count()];
    for (l, &e) in tree.cotree_edges.iter().enumerate() {
        for k in 0..b {
            let x = &inv[(l, k)];
            if !x.is_integer() {
                return Err(Error::InvalidBasis("cycles span a proper sublattice".into()));
            }
            labels[e][k] = x.to_integer().to_i64().ok_or_else(|| Error::InvalidBasis("overflow".into()))?;
        }
    }
    Ok(labels)
}

/// Checks `label_map(alpha_i)` is `delta_i` for periods and zero for vanishing cycles.
pub fn check_label_split(basis: &CycleBasis, labels: &[Vec<i64>], d: usize) -> Result<()> {
    if basis.period_count != d {
        return Err(Error::InvalidBasis(format!(
            "{} period cycles for dimension {}",
            basis.period_count, d
        )));
    }
    for (i, a) in basis.alphas.iter().enumerate() {
        let img = label_map(a, labels, d);
        let ok = (0..d).all(|k| img[k] == if i < d && k == i { 1 } else { 0 });
        if !ok {
            return Err(Error::InvalidBasis(format!("cycle {} maps to {:?}", i + 1, img)));
        }
    }
    Ok(())
}

/// Recombines the cotree cycles so that the first `d` map onto the standard
/// generators of Z^d and the rest span the kernel of the label map.
pub fn label_split_basis(g: &MultiGraph, labels: &[Vec<i64>], d: usize) -> Result<CycleBasis> {
    if labels.len() != g.edge_count() {
        return Err(Error::DimensionMismatch { expected: g.edge_count(), got: labels.len() });
    }
    if let Some(l) = labels.iter().find(|l| l.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, got: l.len() });
    }
    let tree = g.spanning_tree();
    let base = cycle_basis(g, &tree);
    let b = base.len();
    if d > b {
        return Err(Error::LabelsDoNotSpan);
    }
    // rows: [label image | transform]
    let mut rows: Vec<Vec<BigInt>> = base
        .alphas
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut r: Vec<BigInt> = label_map(a, labels, d).into_iter().map(BigInt::from).collect();
            r.extend((0..b).map(|k| BigInt::from((k == i) as i64)));
            r
        })
        .collect();

    for col in 0..d {
        loop {
            let piv = (col..b)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(piv) = piv else {
                return Err(Error::LabelsDoNotSpan);
            };
            rows.swap(col, piv);
            let mut done = true;
            for r in col + 1..b {
                if rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col].div_floor(&rows[col][col]);
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
    }
    for i in 0..d {
        if !rows[i][i].abs().is_one() {
            return Err(Error::ProperSublattice);
        }
        if rows[i][i].is_negative() {
            for x in rows[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    for i in (0..d).rev() {
        for k in 0..i {
            let f = rows[k][i].clone();
            if f.is_zero() {
                continue;
            }
            let pivot_row = rows[i].clone();
            for (x, p) in rows[k].iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }

    let mut alphas = Vec::with_capacity(b);
    for r in &rows {
        let mut c = vec![0i64; g.edge_count()];
        for (k, coef) in r[d..].iter().enumerate() {
            let coef = coef.to_i64().ok_or_else(|| Error::InvalidBasis("overflow".into()))?;
            if coef != 0 {
                for (x, y) in c.iter_mut().zip(&base.alphas[k]) {
                    *x += coef * y;
                }
            }
        }
        alphas.push(c);
    }
    let (periods, kernel) = alphas.split_at_mut(d);
    reduce_pairwise(kernel);
    for k in kernel.iter_mut() {
        if k.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            k.iter_mut().for_each(|x| *x = -*x);
        }
    }
    for p in periods.iter_mut() {
        reduce_against(p, kernel);
    }
    Ok(CycleBasis { alphas, period_count: d })
}

fn reduce_step(v: &mut [i64], w: &[i64]) -> bool {
    let ww = dot(w, w);
    if ww == 0 {
        return false;
    }
    let f = (dot(v, w) as f64 / ww as f64).round() as i64;
    if f == 0 {
        return false;
    }
    let before = dot(v, v);
    let cand: Vec<i64> = v.iter().zip(w).map(|(a, b)| a - f * b).collect();
    if dot(&cand, &cand) < before {
        v.copy_from_slice(&cand);
        true
    } else {
        false
    }
}

fn reduce_pairwise(vs: &mut [Chain]) {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i != j {
                    let w = vs[j].clone();
                    changed |= reduce_step(&mut vs[i], &w);
                }
            }
        }
    }
}

fn reduce_against(v: &mut [i64], ws: &[Chain]) {
    let mut changed = true;
    while changed {
        changed = false;
        for w in ws {
            changed |= reduce_step(v, w);
        }
    }
}
