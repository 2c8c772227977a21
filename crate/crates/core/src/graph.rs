//! Simple undirected graphs on vertices `0..n`.
//!
//! Vertex `i` here is the vertex written `v_{i+1}` in the usual one-based
//! notation, so the two dominating vertices of [`build_h`] are `0` and `1`
//! and its path runs `2 - 3 - ... - (n-1)`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Immutable simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Degree statistics of a graph.
///
/// `delta_second` counts multiplicity: when two vertices attain the maximum
/// degree it equals `delta_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_max: usize,
    pub delta_second: usize,
    pub delta_min: usize,
    pub m: usize,
}

/// An induced subgraph together with the map from its vertices back to the
/// parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(size_err("complete", "n must be at least 1"));
        }
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Ok(Graph { adj, m: n * (n - 1) / 2 })
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(size_err("path", "n must be at least 1"));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(size_err("cycle", "n must be at least 3"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph `K_{s,t}`; the first part is `0..s`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(size_err("complete_bipartite", "both parts must be nonempty"));
        }
        let mut edges = Vec::with_capacity(s * t);
        for u in 0..s {
            for v in s..s + t {
                edges.push((u, v));
            }
        }
        Graph::from_edges(s + t, &edges)
    }

    /// Star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n() })
        }
    }

    /// New graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = g.adj[a].binary_search(&b).unwrap_err();
            g.adj[a].insert(pos, b);
        }
        g.m += 1;
        Ok(g)
    }

    /// New graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let pos = g.adj[a].binary_search(&b).unwrap();
            g.adj[a].remove(pos);
        }
        g.m -= 1;
        Ok(g)
    }

    /// Graph with vertex `u` renamed to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: perm.len() });
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n(), &edges)
    }

    /// Subgraph induced by `vertices` (in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Induced> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Ok(Induced { graph: Graph::from_edges(vertices.len(), &edges)?, labels: vertices.to_vec() })
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        let k = degrees.len();
        DegreeProfile {
            delta_max: degrees.last().copied().unwrap_or(0),
            delta_second: if k >= 2 { degrees[k - 2] } else { 0 },
            delta_min: degrees.first().copied().unwrap_or(0),
            m: self.m,
            degrees,
        }
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::EdgeListParse { line: 1, detail: "missing header".into() })?;
        let nums = parse_pair(hline, header)?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeListParse {
                line: 1,
                detail: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let err = |detail: String| Error::EdgeListParse { line, detail };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| err("expected two integers".into()))?;
        tok.parse().map_err(|_| err(format!("not an integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err("trailing tokens".into()));
    }
    Ok((a, b))
}

fn size_err(kind: &'static str, detail: &str) -> Error {
    Error::InvalidSize { kind, detail: detail.to_string() }
}

/// Join `g1 ∇ g2`: disjoint union plus every edge between the two parts.
/// Vertices of `g2` are shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(size_err("join", "both graphs must be nonempty"));
    }
    let n1 = g1.n();
    let mut edges: Vec<_> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    for u in 0..n1 {
        for v in 0..g2.n() {
            edges.push((u, v + n1));
        }
    }
    Graph::from_edges(n1 + g2.n(), &edges)
}

/// The extremal graph `K_2 ∇ P_{n-2}` for `n >= 4`, and `K_n` below that.
pub fn build_h(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(size_err("H", "n must be at least 1"));
    }
    if n <= 3 {
        return Graph::complete(n);
    }
    join(&Graph::complete(2)?, &Graph::path(n - 2)?)
}

/// Closed and open neighbourhood subgraphs `G[N[u]]` and `G[N(u)]`.
///
/// In the closed subgraph `u` is vertex 0 and its neighbours follow in
/// increasing order; the open subgraph lists the neighbours in the same order.
pub fn neighborhood_subgraphs(g: &Graph, u: usize) -> Result<(Induced, Induced)> {
    g.check_vertex(u)?;
    let mut closed = vec![u];
    closed.extend_from_slice(g.neighbors(u));
    Ok((g.induced(&closed)?, g.induced(g.neighbors(u))?))
}
