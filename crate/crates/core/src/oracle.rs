//! Brute-force ground truth, independent of the closed forms.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphbuild::{Graph, LaplacianMatrix};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
/// Largest distance to the nearest integer accepted when rounding eigenvalues.
pub const INTEGRALITY_TOL: f64 = 1e-6;
pub const DEFAULT_P4_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseSymmetricMatrix {
    /// Row-major `n × n` data; rejects matrices with asymmetry ≥ 1e-12.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        assert_eq!(data.len(), n * n, "expected {n}x{n} entries");
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((data[i * n + j] - data[j * n + i]).abs());
            }
        }
        if worst >= 1e-12 || worst.is_nan() {
            return Err(Error::NotSymmetric(worst));
        }
        Ok(Self { n, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }
}

impl From<&LaplacianMatrix> for DenseSymmetricMatrix {
    fn from(l: &LaplacianMatrix) -> Self {
        Self {
            n: l.n(),
            data: l.to_f64(),
        }
    }
}

/// Eigenvalues in ascending order by cyclic Jacobi rotations.
///
/// Sweeps stop once the largest off-diagonal magnitude falls below
/// `tol · ‖M‖_F`.
pub fn eig_symmetric(m: &DenseSymmetricMatrix, tol: f64) -> Result<Vec<f64>> {
    eig_symmetric_with_cap(m, tol, DEFAULT_MAX_SWEEPS)
}

pub fn eig_symmetric_with_cap(
    m: &DenseSymmetricMatrix,
    tol: f64,
    max_sweeps: usize,
) -> Result<Vec<f64>> {
    assert!(tol > 0.0);
    let n = m.n;
    let mut a = m.data.clone();
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * frob;
    let off_max = |a: &[f64]| {
        let mut w = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                w = w.max(a[p * n + q].abs());
            }
        }
        w
    };

    let mut sweeps = 0;
    while off_max(&a) >= threshold && frob > 0.0 {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence(max_sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // tan of the rotation angle, smaller root
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for r in 0..n {
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[r * n + q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p * n + r];
                    let aqr = a[q * n + r];
                    a[p * n + r] = c * apr - s * aqr;
                    a[q * n + r] = s * apr + c * aqr;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

/// Rounds every value to the nearest integer, or `None` if one is further
/// than `tol` from it.
pub fn round_to_integers(values: &[f64], tol: f64) -> Option<Vec<i64>> {
    values
        .iter()
        .map(|&x| {
            let r = x.round();
            ((x - r).abs() < tol).then_some(r as i64)
        })
        .collect()
}

pub fn laplacian_eigs(g: &Graph) -> Result<Vec<f64>> {
    eig_symmetric(&DenseSymmetricMatrix::from(&g.laplacian()), DEFAULT_TOL)
}

/// Exact clique number by branch and bound with a greedy-colouring bound.
pub fn max_clique(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // Initial order: decreasing degree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 0;
    let mut current = Vec::new();
    expand(g, &order, &mut current, &mut best);
    best
}

/// Greedy sequential colouring; returns vertices sorted by colour and their
/// colour numbers (1-based), ascending.
fn colour_sort(g: &Graph, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !g.adjacent(u, v)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut verts = Vec::with_capacity(candidates.len());
    let mut colours = Vec::with_capacity(candidates.len());
    for (c, class) in classes.into_iter().enumerate() {
        for v in class {
            verts.push(v);
            colours.push(c + 1);
        }
    }
    (verts, colours)
}

fn expand(g: &Graph, candidates: &[usize], current: &mut Vec<usize>, best: &mut usize) {
    let (verts, colours) = colour_sort(g, candidates);
    for idx in (0..verts.len()).rev() {
        if current.len() + colours[idx] <= *best {
            return;
        }
        let v = verts[idx];
        current.push(v);
        let next: Vec<usize> = verts[..idx]
            .iter()
            .copied()
            .filter(|&u| g.adjacent(u, v))
            .collect();
        if next.is_empty() {
            *best = (*best).max(current.len());
        } else {
            expand(g, &next, current, best);
        }
        current.pop();
    }
}

/// Unit-capacity flow network with residual arcs.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Max flow by BFS augmenting paths, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let nodes = self.adj.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            via[s] = usize::MAX - 1;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let w = self.head[e];
                    if self.cap[e] > 0 && via[w] == usize::MAX {
                        via[w] = e;
                        if w == t {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if via[t] == usize::MAX {
                break;
            }
            let mut w = t;
            while w != s {
                let e = via[w];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                w = self.head[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum number of internally disjoint paths between non-adjacent `s`, `t`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    // vertex v -> in-node v, out-node v + n
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { n as i32 } else { 1 };
        net.add_arc(v, v + n, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(u + n, v, 1);
        net.add_arc(v + n, u, 1);
    }
    net.max_flow(s + n, t, limit)
}

fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNetwork::new(g.n());
    for (u, v) in g.edges() {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    net.max_flow(s, t, limit)
}

/// `n − 1` for complete graphs, otherwise the minimum local connectivity over
/// all non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best = n.saturating_sub(1);
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.adjacent(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best)
}

pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    for t in 1..n {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    Ok(best)
}

/// Whether some four vertices induce a path `P₄`.
pub fn induced_p4_scan(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if induces_p4(g, [a, b, c, d]) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn induces_p4(g: &Graph, vs: [usize; 4]) -> bool {
    // P₄: 3 edges, connected, degree sequence (1,1,2,2)
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if g.adjacent(vs[i], vs[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    deg.sort_unstable();
    edges == 3 && deg == [1, 1, 2, 2]
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleParams {
    pub kappa: usize,
    pub kappa_prime: usize,
    pub omega: usize,
    pub eigs: Vec<f64>,
}

pub fn oracle_params(g: &Graph) -> Result<OracleParams> {
    Ok(OracleParams {
        kappa: vertex_connectivity(g)?,
        kappa_prime: edge_connectivity(g)?,
        omega: max_clique(g),
        eigs: laplacian_eigs(g)?,
    })
}
