//! Isomorph-free generation of plane triangulations by vertex splitting.
//!
//! Splitting `v` along two neighbours `w_i`, `w_j` of its rotation moves the
//! arc `w_i .. w_j` to a new vertex `v'` adjacent to `v`, adding three edges.
//! Every triangulation on `n >= 5` vertices has an edge whose contraction is
//! again a triangulation, so expanding all classes on `n - 1` vertices
//! reaches every class on `n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, decode, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::{is_maximal_outer_planar, is_planar};

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 12;

/// Every triangulation on `n` vertices, one per isomorphism class, sorted by
/// canonical code and labeled canonically.
pub fn gen_triangulations(n: usize) -> Result<Vec<Graph>> {
    Ok(gen_triangulations_coded(n)?.into_values().collect())
}

/// As [`gen_triangulations`], keyed by canonical code.
pub fn gen_triangulations_coded(n: usize) -> Result<BTreeMap<CanonicalCode, Graph>> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidSize {
            kind: "triangulation enumeration",
            detail: format!("n = {n} outside {MIN_ORDER}..={MAX_ORDER}"),
        });
    }
    let k4 = Graph::complete(4)?;
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let code = canonical_form(&k4)?;
    level.insert(code.clone(), decode(&code)?);
    for _ in MIN_ORDER..n {
        level = expand(&level)?;
    }
    Ok(level)
}

fn expand(level: &BTreeMap<CanonicalCode, Graph>) -> Result<BTreeMap<CanonicalCode, Graph>> {
    let parts: Vec<Result<Vec<CanonicalCode>>> =
        level.values().collect::<Vec<_>>().par_iter().map(|g| splits(g)).collect();
    let mut next = BTreeMap::new();
    for part in parts {
        for code in part? {
            if let Entry::Vacant(slot) = next.entry(code) {
                let g = decode(slot.key())?;
                slot.insert(g);
            }
        }
    }
    Ok(next)
}

/// Canonical codes of every vertex split of `g` keeping minimum degree 3.
fn splits(g: &Graph) -> Result<Vec<CanonicalCode>> {
    let emb = is_planar(g).expect("triangulation is planar");
    let n = g.n();
    let base: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for v in 0..n {
        let rot = emb.rotation(v);
        let d = rot.len();
        for i in 0..d {
            for t in 1..d {
                // arc w_i .. w_{i+t} moves to the new vertex n
                let inner: Vec<usize> = (1..t).map(|s| rot[(i + s) % d]).collect();
                let mut edges: Vec<(usize, usize)> = base
                    .iter()
                    .copied()
                    .filter(|&(a, b)| !(a == v && inner.contains(&b) || b == v && inner.contains(&a)))
                    .collect();
                edges.extend((0..=t).map(|s| (rot[(i + s) % d], n)));
                edges.push((v, n));
                let child = Graph::from_edges(n + 1, &edges)?;
                out.push(canonical_form(&child)?);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Every maximal outer-planar graph on `n >= 3` vertices up to isomorphism,
/// from all triangulations of a convex `n`-gon.
pub fn gen_maximal_outerplanar(n: usize) -> Result<Vec<Graph>> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidSize {
            kind: "outer-planar enumeration",
            detail: format!("n = {n} outside 3..={MAX_ORDER}"),
        });
    }
    let mut chords = Vec::new();
    polygon_triangulations(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut chords);
    let mut classes = BTreeMap::new();
    for set in chords {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(set);
        let g = Graph::from_edges(n, &edges)?;
        debug_assert!(is_maximal_outer_planar(&g));
        let code = canonical_form(&g)?;
        if let Entry::Vacant(slot) = classes.entry(code) {
            let d = decode(slot.key())?;
            slot.insert(d);
        }
    }
    Ok(classes.into_values().collect())
}

/// All diagonal sets triangulating the convex polygon `poly`: the edge
/// `poly[0] poly[m-1]` lies in exactly one triangle, with apex `poly[k]`.
fn polygon_triangulations(poly: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let mut pending = vec![poly.to_vec()];
    collect(&mut pending, acc, out);

    fn collect(pending: &mut Vec<Vec<usize>>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(poly) = pending.pop() else {
            out.push(acc.clone());
            return;
        };
        let m = poly.len();
        if m < 3 {
            collect(pending, acc, out);
            pending.push(poly);
            return;
        }
        for k in 1..m - 1 {
            let before = acc.len();
            if k > 1 {
                acc.push((poly[0], poly[k]));
            }
            if k < m - 2 {
                acc.push((poly[k], poly[m - 1]));
            }
            pending.push(poly[..=k].to_vec());
            pending.push(poly[k..].to_vec());
            collect(pending, acc, out);
            pending.pop();
            pending.pop();
            acc.truncate(before);
        }
        pending.push(poly);
    }
}
