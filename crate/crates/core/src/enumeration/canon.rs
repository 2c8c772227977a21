//! Canonical labeling by colour refinement and individualization.
//!
//! Leaves of the search tree are discrete colourings; each yields a
//! relabeled adjacency bit string and the smallest one is the canonical
//! code. Branches on twin vertices are pruned, since swapping two twins is
//! an automorphism.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 64;

/// Canonical code: the order followed by the upper-triangle adjacency bits of
/// the canonically relabeled graph, packed most significant bit first.
pub type CanonicalCode = Vec<u8>;

struct Ctx<'a> {
    g: &'a Graph,
    rows: Vec<u64>,
    best: Option<(CanonicalCode, Vec<usize>)>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_labeling(g)?.0)
}

/// Canonical code and the labeling achieving it: `labels[v]` is the new
/// label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(Error::InvalidSize {
            kind: "canonical form",
            detail: format!("n = {n} exceeds {MAX_CANON_ORDER}"),
        });
    }
    let rows = (0..n).map(|u| g.neighbors(u).iter().fold(0u64, |acc, &v| acc | (1u64 << v))).collect();
    let mut ctx = Ctx { g, rows, best: None };
    let colours = refine(g, vec![0; n]);
    search(&mut ctx, colours);
    Ok(ctx.best.unwrap_or_else(|| (vec![0], vec![])))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() || a.degree_profile().degrees != b.degree_profile().degrees {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Refines colours until stable. New colours are ranks of
/// `(colour, sorted neighbour colours)`, which keeps the cell order
/// label-independent.
fn refine(g: &Graph, mut colours: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    let mut classes = count_classes(&colours);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|u| {
                let mut nb: Vec<u32> = g.neighbors(u).iter().map(|&v| colours[v]).collect();
                nb.sort_unstable();
                (colours[u], nb)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank: HashMap<&(u32, Vec<u32>), u32> = distinct.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        colours = sigs.iter().map(|s| rank[s]).collect();
        let next = distinct.len();
        if next == classes {
            return colours;
        }
        classes = next;
    }
}

fn count_classes(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(ctx: &mut Ctx, colours: Vec<u32>) {
    let n = colours.len();
    let mut cells: HashMap<u32, Vec<usize>> = HashMap::new();
    for (v, &c) in colours.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    if cells.len() == n {
        let labels: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
        let code = encode(&ctx.rows, &labels);
        if ctx.best.as_ref().is_none_or(|(b, _)| code < *b) {
            ctx.best = Some((code, labels));
        }
        return;
    }
    let (_, target) = cells
        .into_iter()
        .filter(|(_, cell)| cell.len() > 1)
        .min_by_key(|(c, cell)| (cell.len(), *c))
        .expect("non-discrete colouring has a non-singleton cell");
    let mut tried: Vec<usize> = Vec::new();
    for &v in &target {
        if tried.iter().any(|&w| are_twins(&ctx.rows, v, w)) {
            continue;
        }
        tried.push(v);
        let individualized: Vec<u32> =
            colours.iter().enumerate().map(|(u, &c)| if u == v { 2 * c } else { 2 * c + 1 }).collect();
        let refined = refine(ctx.g, individualized);
        search(ctx, refined);
    }
}

/// Same open or same closed neighbourhood.
fn are_twins(rows: &[u64], v: usize, w: usize) -> bool {
    let (bv, bw) = (1u64 << v, 1u64 << w);
    rows[v] & !bw == rows[w] & !bv
}

fn encode(rows: &[u64], labels: &[usize]) -> CanonicalCode {
    let n = labels.len();
    let mut inverse = vec![0usize; n];
    for (v, &l) in labels.iter().enumerate() {
        inverse[l] = v;
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(8));
    out.push(n as u8);
    let (mut byte, mut bits) = (0u8, 0);
    for i in 0..n {
        let row = rows[inverse[i]];
        for &w in &inverse[i + 1..] {
            byte = (byte << 1) | ((row >> w) & 1) as u8;
            bits += 1;
            if bits == 8 {
                out.push(byte);
                byte = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(byte << (8 - bits));
    }
    out
}

/// Graph encoded by a canonical code.
pub fn decode(code: &[u8]) -> Result<Graph> {
    let bad = |detail: &str| Error::InvalidSize { kind: "canonical code", detail: detail.into() };
    let (&n, bits) = code.split_first().ok_or_else(|| bad("empty code"))?;
    let n = n as usize;
    let need = (n * n.saturating_sub(1) / 2).div_ceil(8);
    if bits.len() != need {
        return Err(bad("length does not match order"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_h;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(rng);
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn k4_is_invariant() {
        let k4 = Graph::complete(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = canonical_form(&k4).unwrap();
        for _ in 0..10 {
            assert_eq!(canonical_form(&shuffled(&k4, &mut rng)).unwrap(), c);
        }
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::path(4).unwrap();
        let s = Graph::star(3).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&s).unwrap());
        assert!(!are_isomorphic(&p4, &s).unwrap());
    }

    #[test]
    fn h9_relabelings_agree() {
        let h = build_h(9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let c = canonical_form(&h).unwrap();
        for _ in 0..20 {
            assert_eq!(canonical_form(&shuffled(&h, &mut rng)).unwrap(), c);
        }
    }

    #[test]
    fn decode_round_trip() {
        let h = build_h(8).unwrap();
        let (code, labels) = canonical_labeling(&h).unwrap();
        let d = decode(&code).unwrap();
        assert_eq!(d, h.relabel(&labels).unwrap());
        assert!(are_isomorphic(&d, &h).unwrap());
        assert!(decode(&[]).is_err());
        assert!(decode(&[3]).is_err());
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for g in [Graph::empty(12), Graph::complete(12).unwrap(), Graph::cycle(40).unwrap()] {
            let c = canonical_form(&g).unwrap();
            assert_eq!(decode(&c).unwrap().m(), g.m());
        }
        assert!(canonical_form(&Graph::empty(65)).is_err());
    }

    #[test]
    fn cospectral_like_pairs_are_separated() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }
}
