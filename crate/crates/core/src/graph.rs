//! Finite multigraphs with loops and parallel edges.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// One edge traversed in a chosen direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: usize,
    pub reversed: bool,
}

impl Dart {
    pub fn forward(edge: usize) -> Self {
        Dart { edge, reversed: false }
    }

    pub fn backward(edge: usize) -> Self {
        Dart { edge, reversed: true }
    }

    pub fn sign(&self) -> i64 {
        if self.reversed {
            -1
        } else {
            1
        }
    }

    pub fn rev(self) -> Self {
        Dart { edge: self.edge, reversed: !self.reversed }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::EndpointOutOfRange { edge: i, vertex: w, count: vertex_count });
                }
            }
        }
        let g = MultiGraph { vertex_count, edges };
        if !g.connected() {
            return Err(Error::NotConnected);
        }
        Ok(g)
    }

    fn connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn origin(&self, d: Dart) -> usize {
        let (u, v) = self.edges[d.edge];
        if d.reversed {
            v
        } else {
            u
        }
    }

    pub fn terminus(&self, d: Dart) -> usize {
        self.origin(d.rev())
    }

    /// Darts leaving `v`; a loop contributes both of its orientations.
    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(Dart::forward(i));
            }
            if b == v {
                out.push(Dart::backward(i));
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    /// First Betti number |E| - |V| + 1.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.edges {
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return false;
            }
        }
        true
    }

    /// `a_ij` counts edges between `i` and `j`; each loop adds one to `a_ii`.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count;
        let mut a = vec![vec![0i64; n]; n];
        for &(u, v) in &self.edges {
            if u == v {
                a[u][u] += 1;
            } else {
                a[u][v] += 1;
                a[v][u] += 1;
            }
        }
        a
    }

    /// Walks of length `k` from `i` to `j`, i.e. `(A^k)_ij`.
    pub fn path_count(&self, k: u32, i: usize, j: usize) -> u128 {
        let a = self.adjacency_matrix();
        let n = self.vertex_count;
        let mut row = vec![0u128; n];
        row[i] = 1;
        for _ in 0..k {
            let mut next = vec![0u128; n];
            for (u, &ru) in row.iter().enumerate() {
                if ru == 0 {
                    continue;
                }
                for (v, &auv) in a[u].iter().enumerate() {
                    next[v] += ru * auv as u128;
                }
            }
            row = next;
        }
        row[j]
    }

    pub fn triangle_count(&self) -> Result<u64> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let a = self.adjacency_matrix();
        let n = self.vertex_count;
        let mut trace = 0i64;
        for i in 0..n {
            for j in 0..n {
                if a[i][j] == 0 {
                    continue;
                }
                for k in 0..n {
                    trace += a[i][j] * a[j][k] * a[k][i];
                }
            }
        }
        Ok((trace / 6) as u64)
    }

    pub fn spanning_tree(&self) -> SpanningTree {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut tree = Vec::new();
        let mut cotree = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if uf.union(u, v) {
                tree.push(i);
            } else {
                cotree.push(i);
            }
        }
        SpanningTree::from_tree_edges(self, tree, cotree)
    }

    /// Eigenvalues of the adjacency matrix in descending order.
    pub fn adjacency_spectrum(&self) -> Vec<f64> {
        let (vals, _) = symmetric_eigen(&self.adjacency_f64());
        vals
    }

    pub fn adjacency_f64(&self) -> DMatrix<f64> {
        let a = self.adjacency_matrix();
        let n = self.vertex_count;
        DMatrix::from_fn(n, n, |i, j| a[i][j] as f64)
    }
}

/// Descending eigenvalues with matching unit eigenvectors as columns.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = m.nrows();
    let eig = nalgebra::SymmetricEigen::try_new(m.clone(), 1e-15, 0)
        .unwrap_or_else(|| nalgebra::SymmetricEigen::new(m.clone()));
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let vals = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, idx[c])]);
    (vals, vecs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub tree_edges: Vec<usize>,
    pub cotree_edges: Vec<usize>,
    /// Dart from the parent toward each vertex; `None` at the root 0.
    parent: Vec<Option<Dart>>,
    depth: Vec<usize>,
}

impl SpanningTree {
    /// Builds the rooted structure from a caller-chosen tree edge set.
    pub fn from_tree_edges(g: &MultiGraph, tree_edges: Vec<usize>, cotree_edges: Vec<usize>) -> Self {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &e in &tree_edges {
                for d in [Dart::forward(e), Dart::backward(e)] {
                    if g.origin(d) == u && !seen[g.terminus(d)] {
                        let v = g.terminus(d);
                        seen[v] = true;
                        parent[v] = Some(d);
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        SpanningTree { tree_edges, cotree_edges, parent, depth }
    }

    pub fn parent_dart(&self, v: usize) -> Option<Dart> {
        self.parent[v]
    }

    /// Darts of the tree path from the root to `v`.
    pub fn path_from_root(&self, g: &MultiGraph, v: usize) -> Vec<Dart> {
        let mut path = Vec::new();
        let mut cur = v;
        while let Some(d) = self.parent[cur] {
            path.push(d);
            cur = g.origin(d);
        }
        path.reverse();
        path
    }

    /// Darts of the unique tree path from `u` to `v`.
    pub fn path(&self, g: &MultiGraph, u: usize, v: usize) -> Vec<Dart> {
        let (mut a, mut b) = (u, v);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let d = self.parent[a].expect("non-root");
                up.push(d.rev());
                a = g.origin(d);
            } else {
                let d = self.parent[b].expect("non-root");
                down.push(d);
                b = g.origin(d);
            }
        }
        down.reverse();
        up.extend(down);
        up
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
