//! Materializing C-graphs: adjacency, per-part degrees and the Laplacian.
//!
//! Vertices are numbered in part order, all of π₁ first, then π₂, and so on.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::seqcore::CreationSequence;

/// Simple undirected graph with dense adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in 0..n {
                g.adj[u * n + v] = u != v;
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.set_edge(u, v, true);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Sets or clears the edge `{u, v}`. Loops are ignored.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if u == v {
            return;
        }
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        let present = self.adjacent(u, v);
        self.set_edge(u, v, !present);
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&a| a)
            .count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n)
                .filter(move |&v| self.adjacent(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * self.n + v] = u != v && !self.adjacent(u, v);
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * n + v] = self.adjacent(u, v);
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.adj[(self.n + u) * n + self.n + v] = other.adjacent(u, v);
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.adjacent(u, v);
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    data[u * n + v] = self.degree(u) as i64;
                } else if self.adjacent(u, v) {
                    data[u * n + v] = -1;
                }
            }
        }
        LaplacianMatrix { n, data }
    }

    /// One `u v` pair per line, 1-based, `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

/// A graph realizing a creation sequence, with its vertex partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CGraph {
    sequence: CreationSequence,
    graph: Graph,
    part_of: Vec<usize>,
    degrees: Vec<usize>,
}

impl CGraph {
    fn new(sequence: CreationSequence, graph: Graph) -> Self {
        let part_of: Vec<usize> = sequence
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a))
            .collect();
        let mut degrees = Vec::with_capacity(sequence.k());
        let mut first = 0;
        for &a in sequence.parts() {
            degrees.push(graph.degree(first));
            first += a;
        }
        Self {
            sequence,
            graph,
            part_of,
            degrees,
        }
    }

    pub fn sequence(&self) -> &CreationSequence {
        &self.sequence
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// 1-based part index of a (0-based) vertex.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// Degree of the first vertex of each part.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Range of vertices forming part `i` (1-based).
    pub fn part_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.sequence.parts()[..i - 1].iter().sum();
        start..start + self.sequence.part(i)
    }

    /// Whether every vertex has the degree recorded for its part.
    pub fn degrees_are_uniform(&self) -> bool {
        (0..self.n()).all(|v| self.graph.degree(v) == self.degrees[self.part_of[v] - 1])
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        self.graph.laplacian()
    }

    /// Flips one adjacency bit; only meant for fault-injection harnesses.
    pub fn corrupt_edge(&mut self, u: usize, v: usize) {
        self.graph.toggle_edge(u, v);
    }

    pub fn export(&self) -> GraphExport {
        GraphExport {
            n: self.n(),
            k: self.sequence.k(),
            parts: self.sequence.parts().to_vec(),
            degrees: self.degrees.clone(),
            edges: self.graph.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }
}

/// JSON export `{n, k, parts, degrees, edges}` with 1-based edge endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub n: usize,
    pub k: usize,
    pub parts: Vec<usize>,
    pub degrees: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

/// Iterates complement-of-disjoint-union, starting from the edgeless graph on α₁ vertices.
pub fn build_recursive(s: &CreationSequence) -> CGraph {
    let mut parts = s.parts().iter();
    let mut g = Graph::empty(*parts.next().expect("nonempty"));
    for &a in parts {
        g = g.disjoint_union(&Graph::complete(a)).complement();
    }
    CGraph::new(s.clone(), g)
}

/// Closed adjacency rule for even k: parts `i < j` are joined iff `j` is
/// even, and part `i` is a clique iff `i` is odd.
pub fn build_direct(s: &CreationSequence) -> Result<CGraph> {
    s.require_even()?;
    let n = s.n();
    let mut g = Graph::empty(n);
    let part_of: Vec<usize> = s
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a))
        .collect();
    for u in 0..n {
        for v in (u + 1)..n {
            let (i, j) = (part_of[u], part_of[v]);
            let joined = if i == j { i % 2 == 1 } else { j % 2 == 0 };
            if joined {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(CGraph::new(s.clone(), g))
}

/// Per-part degrees `d₁ … d_k`, from the sequence alone.
pub fn degrees(s: &CreationSequence) -> Result<Vec<usize>> {
    s.require_even()?;
    let p = s.parts();
    let k = p.len();
    // even_suffix[i] = sum of α_j over even j ≥ i (1-based), i in 1..=k+1
    let mut even_suffix = vec![0usize; k + 2];
    for j in (1..=k).rev() {
        even_suffix[j] = even_suffix[j + 1] + if j % 2 == 0 { p[j - 1] } else { 0 };
    }
    let mut prefix = 0usize;
    let mut d = Vec::with_capacity(k);
    for i in 1..=k {
        let a = p[i - 1];
        let di = if i % 2 == 1 {
            even_suffix[i + 1] + a - 1
        } else {
            prefix + even_suffix[(i + 2).min(k + 1)]
        };
        d.push(di);
        prefix += a;
    }
    Ok(d)
}

/// `m = (Σ αᵢ dᵢ) / 2`.
pub fn edge_count(s: &CreationSequence) -> Result<usize> {
    let d = degrees(s)?;
    Ok(s.parts().iter().zip(&d).map(|(a, d)| a * d).sum::<usize>() / 2)
}

/// Dense integer Laplacian `L = D − A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    data: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums_zero(&self) -> bool {
        (0..self.n).all(|i| self.row(i).iter().sum::<i64>() == 0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }

    /// Integer matrix-vector product.
    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}
