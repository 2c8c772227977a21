//! Planarity and outer-planarity testing, rotation systems, faces and link
//! cycles.

mod lr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A combinatorial embedding: the clockwise cyclic order of neighbours around
/// every vertex, together with the face walks it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationEmbedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

impl RotationEmbedding {
    /// Wraps a rotation system and traces its faces. Fails when the rotation
    /// lists do not describe a simple undirected graph.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        for (v, list) in rotation.iter().enumerate() {
            for &w in list {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
                if !rotation[w].contains(&v) {
                    return Err(Error::Precondition(format!("rotation of {w} lacks {v}")));
                }
            }
        }
        let faces = trace_faces(&rotation);
        Ok(RotationEmbedding { rotation, faces })
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    /// Graph underlying the rotation system.
    pub fn graph(&self) -> Result<Graph> {
        let mut edges = Vec::new();
        for (v, list) in self.rotation.iter().enumerate() {
            edges.extend(list.iter().filter(|&&w| w > v).map(|&w| (v, w)));
        }
        Graph::from_edges(self.rotation.len(), &edges)
    }

    /// Checks Euler's formula `V - E + F = 2` on every component with an
    /// edge. A rotation system passing this check is a planar embedding.
    pub fn satisfies_euler(&self) -> bool {
        let n = self.rotation.len();
        let mut comp = vec![usize::MAX; n];
        let mut ncomp = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = ncomp;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.rotation[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = ncomp;
                        stack.push(w);
                    }
                }
            }
            ncomp += 1;
        }
        let mut verts = vec![0i64; ncomp];
        let mut darts = vec![0i64; ncomp];
        let mut faces = vec![0i64; ncomp];
        for v in 0..n {
            verts[comp[v]] += 1;
            darts[comp[v]] += self.rotation[v].len() as i64;
        }
        for f in &self.faces {
            faces[comp[f[0]]] += 1;
        }
        (0..ncomp).all(|c| darts[c] == 0 || verts[c] - darts[c] / 2 + faces[c] == 2)
    }
}

/// Traces face orbits: the dart `(v, w)` is followed by `(w, x)` where `x`
/// precedes `v` in the clockwise rotation at `w`.
fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotation.len();
    let offsets: Vec<usize> = std::iter::once(0)
        .chain(rotation.iter().scan(0, |acc, l| {
            *acc += l.len();
            Some(*acc)
        }))
        .collect();
    let index_of =
        |v: usize, w: usize| -> usize { rotation[v].iter().position(|&x| x == w).expect("symmetric rotation") };
    let mut used = vec![false; offsets[n]];
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if used[offsets[v] + i] {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut ai) = (v, i);
            while !used[offsets[a] + ai] {
                used[offsets[a] + ai] = true;
                face.push(a);
                let b = rotation[a][ai];
                let j = index_of(b, a);
                let deg = rotation[b].len();
                let next = (j + deg - 1) % deg;
                a = b;
                ai = next;
            }
            faces.push(face);
        }
    }
    faces
}

/// Planarity test. Returns a verified embedding when `g` is planar.
pub fn is_planar(g: &Graph) -> Option<RotationEmbedding> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let rotation = lr::planar_rotation(g)?;
    let emb = RotationEmbedding::from_rotation(rotation).expect("rotation matches graph");
    assert!(emb.satisfies_euler(), "planarity test produced a non-planar rotation system");
    Some(emb)
}

/// True iff `g` is planar with `3n - 6` edges (for `n >= 3`); graphs on fewer
/// than three vertices are maximal planar exactly when complete.
pub fn is_maximal_planar(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return g.m() == n * n.saturating_sub(1) / 2;
    }
    if g.m() != 3 * n - 6 || is_planar(g).is_none() {
        return false;
    }
    if n >= 4 {
        assert!(g.degree_profile().delta_min >= 3, "maximal planar graph with a vertex of degree < 3");
    }
    true
}

/// Outer-planarity via apex augmentation: `g` is outer-planar iff adding one
/// vertex adjacent to every vertex keeps it planar.
pub fn is_outer_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 2 && g.m() > 2 * n - 3 {
        return false;
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (v, n)));
    let apexed = Graph::from_edges(n + 1, &edges).expect("apex edges are new");
    is_planar(&apexed).is_some()
}

/// Outer-planar with `2n - 3` edges (`n >= 2`).
pub fn is_maximal_outer_planar(g: &Graph) -> bool {
    let n = g.n();
    if n < 2 {
        return n == 1;
    }
    g.m() == 2 * n - 3 && is_outer_planar(g)
}

/// Cyclic order of `N(u)` around `u` in a triangulation, which is the
/// Hamiltonian cycle of `G°(u)`. Canonical form: start at the smallest
/// neighbour and walk in the direction whose second entry is smaller.
pub fn link_cycle(g: &Graph, emb: &RotationEmbedding, u: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    if emb.rotations().len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: emb.rotations().len() });
    }
    if g.n() < 4 || g.m() != 3 * g.n() - 6 {
        return Err(Error::NotMaximalPlanar);
    }
    let rot = emb.rotation(u);
    let d = rot.len();
    if d != g.degree(u) || d < 3 {
        return Err(Error::NotMaximalPlanar);
    }
    let start = (0..d).min_by_key(|&i| rot[i]).unwrap();
    let fwd: Vec<usize> = (0..d).map(|i| rot[(start + i) % d]).collect();
    let bwd: Vec<usize> = (0..d).map(|i| rot[(start + d - i) % d]).collect();
    let cycle = if fwd[1] <= bwd[1] { fwd } else { bwd };
    for i in 0..d {
        if !g.has_edge(cycle[i], cycle[(i + 1) % d]) {
            return Err(Error::NotMaximalPlanar);
        }
    }
    Ok(cycle)
}

/// Checks `Σ_{v~u} d(v) <= n + 3 d(u) - 4` on a maximal outer-planar graph.
pub fn check_outerplanar_degree_sum(g: &Graph, u: usize) -> Result<bool> {
    g.check_vertex(u)?;
    if g.n() < 2 || !is_maximal_outer_planar(g) {
        return Err(Error::NotMaximalOuterPlanar);
    }
    let sum: usize = g.neighbors(u).iter().map(|&v| g.degree(v)).sum();
    Ok(sum + 4 <= g.n() + 3 * g.degree(u))
}
