//! Test oracles written independently of the library algorithms.

#![allow(dead_code)]

pub mod exact;

use std::collections::HashMap;

use nalgebra::DMatrix;
use qplanar_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Largest eigenvalue of `D + A` from a dense symmetric eigensolve.
pub fn dense_q(g: &Graph) -> f64 {
    let n = g.n();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for u in 0..n {
        m[(u, u)] = g.degree(u) as f64;
        for &v in g.neighbors(u) {
            m[(u, v)] = 1.0;
        }
    }
    m.symmetric_eigen().eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Random connected graph: a random labeled tree plus each other pair with
/// probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.push((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Exhaustive planarity: some rotation system has `V - E + F = 2` on every
/// component. Returns `None` when the rotation count exceeds `budget`.
pub fn planar_by_rotations(g: &Graph, budget: u64) -> Option<bool> {
    let n = g.n();
    let mut total: u64 = 1;
    for u in 0..n {
        let d = g.degree(u) as u64;
        for f in 2..d {
            total = total.checked_mul(f)?;
        }
        if total > budget {
            return None;
        }
    }
    let comps = components(g);
    let target_faces: i64 = comps.iter().filter(|c| c.len() > 1).map(|_| 2).sum::<i64>()
        - comps.iter().filter(|c| c.len() > 1).map(|c| c.len() as i64).sum::<i64>()
        + g.m() as i64;
    // rotation at u: fixed first neighbour, permuted rest
    let choices: Vec<Vec<Vec<usize>>> = (0..n).map(|u| cyclic_orders(g.neighbors(u))).collect();
    let mut idx = vec![0usize; n];
    loop {
        let rot: Vec<&Vec<usize>> = (0..n).map(|u| &choices[u][idx[u]]).collect();
        if count_faces(&rot) as i64 == target_faces {
            return Some(true);
        }
        let mut u = 0;
        loop {
            if u == n {
                return Some(false);
            }
            idx[u] += 1;
            if idx[u] < choices[u].len() {
                break;
            }
            idx[u] = 0;
            u += 1;
        }
    }
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        out.push(comp);
    }
    out
}

fn cyclic_orders(nb: &[usize]) -> Vec<Vec<usize>> {
    if nb.len() <= 2 {
        return vec![nb.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = nb[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut v = vec![nb[0]];
        v.extend_from_slice(p);
        out.push(v);
    });
    out
}

fn permute(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute(a, k + 1, f);
        a.swap(k, i);
    }
}

fn count_faces(rot: &[&Vec<usize>]) -> usize {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (u, r) in rot.iter().enumerate() {
        for (i, &w) in r.iter().enumerate() {
            pos.insert((u, w), i);
        }
    }
    let mut used: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = 0;
    for (u, r) in rot.iter().enumerate() {
        for &w in r.iter() {
            if used.contains_key(&(u, w)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, w);
            while !used.contains_key(&(a, b)) {
                used.insert((a, b), true);
                let rb = rot[b];
                let i = pos[&(b, a)];
                let c = rb[(i + 1) % rb.len()];
                a = b;
                b = c;
            }
        }
    }
    faces
}

/// Isomorphism by degree-pruned backtracking over vertex maps.
pub fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if u == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || a.degree(u) != b.degree(w) {
            continue;
        }
        if (0..u).any(|p| a.has_edge(u, p) != b.has_edge(w, map[p])) {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if extend(a, b, u + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[u] = usize::MAX;
    false
}

/// Representatives of the isomorphism classes of labeled triangulations on
/// `n <= 7` vertices: every edge set of size `3n - 6` that is planar,
/// deduplicated by brute-force isomorphism.
pub fn brute_force_triangulations(n: usize, is_planar: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = 3 * n - 6;
    let mut reps: Vec<Graph> = Vec::new();
    let mut pick: Vec<usize> = (0..m).collect();
    loop {
        let edges: Vec<(usize, usize)> = pick.iter().map(|&i| pairs[i]).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.degrees().iter().all(|&d| d >= 3) && is_planar(&g) && !reps.iter().any(|r| isomorphic_brute(r, &g)) {
            reps.push(g);
        }
        // next combination
        let mut i = m;
        loop {
            if i == 0 {
                return reps;
            }
            i -= 1;
            if pick[i] < pairs.len() - m + i {
                break;
            }
            if i == 0 {
                return reps;
            }
        }
        pick[i] += 1;
        for j in i + 1..m {
            pick[j] = pick[j - 1] + 1;
        }
    }
}
