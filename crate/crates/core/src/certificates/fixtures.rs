//! Triangulations whose degree census meets one certificate construction.
//!
//! Every fixture is a hub over a rim (or the two-hub graph `K_2 ∇ P_{n-2}`
//! with edits), built edge by edge and then validated: a graph that is not
//! maximal planar or misses its census is an error.

use super::{Band, Regime};
use crate::error::{Error, Result};
use crate::graph::{build_h, Graph};
use crate::planarity::is_maximal_planar;

/// Fixture families. Vertex 0 is always the primary hub.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Hub over a zigzag-triangulated rim of `n - 1 - sunk` vertices, with
    /// `sunk` degree-3 vertices placed in outer faces. `Δ = n - 1 - sunk`;
    /// for `sunk <= 1` every other degree stays below the regime band.
    NearWheel { sunk: usize },
    /// `K_2 ∇ P_{n-2}` where the second hub misses `gap` consecutive path
    /// vertices, so `Δ' = n - 1 - gap`. With `sunk`, one extra degree-3
    /// vertex sits in a face away from the primary hub, giving `Δ = n - 2`.
    TwoHub { gap: usize, sunk: bool },
    /// Hub over a rim whose outer side holds fans with the given arc
    /// lengths; fan centres land in the middle band of `regime`.
    MidBand { regime: Regime, arcs: Vec<usize> },
}

impl Fixture {
    pub fn kind(&self) -> &'static str {
        match self {
            Fixture::NearWheel { .. } => "near_wheel",
            Fixture::TwoHub { .. } => "two_hub",
            Fixture::MidBand { .. } => "mid_band",
        }
    }

    pub fn build(&self, n: usize) -> Result<Graph> {
        build_fixture(self, n)
    }
}

pub fn build_fixture(fixture: &Fixture, n: usize) -> Result<Graph> {
    let kind = fixture.kind();
    let g = match fixture {
        Fixture::NearWheel { sunk } => hub_over_rim(kind, n, *sunk, &[])?,
        Fixture::TwoHub { gap, sunk } => two_hub(n, *gap, *sunk)?,
        Fixture::MidBand { regime, arcs } => {
            let sunk = match regime {
                Regime::Dominating => 0,
                Regime::NearDominating => 1,
            };
            hub_over_rim(kind, n, sunk, arcs)?
        }
    };
    if !is_maximal_planar(&g) {
        return Err(census(kind, "construction is not maximal planar".into()));
    }
    check_census(fixture, &g)?;
    Ok(g)
}

fn census(kind: &'static str, detail: String) -> Error {
    Error::FixtureCensus { kind, detail }
}

fn check_census(fixture: &Fixture, g: &Graph) -> Result<()> {
    let kind = fixture.kind();
    let n = g.n();
    let p = g.degree_profile();
    let expect_delta = |want: usize| {
        if p.delta_max == want && g.degree(0) == want {
            Ok(())
        } else {
            Err(census(kind, format!("hub degree {} / Δ = {}, expected {want}", g.degree(0), p.delta_max)))
        }
    };
    let others_below = |band: Band| -> Result<()> {
        match (1..n).find(|&u| band.reaches(g.degree(u))) {
            Some(u) => {
                Err(census(kind, format!("vertex {u} has degree {} >= {}/{}", g.degree(u), band.low_num, band.low_den)))
            }
            None => Ok(()),
        }
    };
    match fixture {
        Fixture::NearWheel { sunk } => {
            expect_delta(n - 1 - sunk)?;
            match sunk {
                0 => others_below(Regime::Dominating.band(n))?,
                1 => others_below(Regime::NearDominating.band(n))?,
                _ => {}
            }
        }
        Fixture::TwoHub { gap, sunk } => {
            let (delta, lo, hi) =
                if *sunk { (n - 2, n.saturating_sub(62), n - 2) } else { (n - 1, n.saturating_sub(81), n - 4) };
            expect_delta(delta)?;
            let d2 = g.degree(1);
            if d2 != n - 1 - gap || p.delta_second != d2 {
                return Err(census(kind, format!("second hub degree {d2}, Δ' = {}", p.delta_second)));
            }
            if d2 < lo || d2 > hi {
                return Err(census(kind, format!("Δ' = {d2} outside [{lo}, {hi}]")));
            }
        }
        Fixture::MidBand { regime, arcs } => {
            expect_delta(regime.delta(n))?;
            let band = regime.band(n);
            let reach: Vec<usize> = (1..n).filter(|&u| band.reaches(g.degree(u))).collect();
            if reach.len() != arcs.len() || reach.iter().any(|&u| !band.contains(g.degree(u))) {
                let degs: Vec<usize> = reach.iter().map(|&u| g.degree(u)).collect();
                return Err(census(kind, format!("band degrees {degs:?}, expected {} members", arcs.len())));
            }
            if arcs.is_empty() || arcs.len() > regime.band_cap() {
                return Err(census(kind, format!("{} fans, needs 1..={}", arcs.len(), regime.band_cap())));
            }
        }
    }
    Ok(())
}

/// Vertices of a polygon in zigzag order; consecutive entries of the result
/// (after the first) are the diagonals of a strip triangulation.
fn zigzag(poly: &[usize]) -> Vec<usize> {
    let m = poly.len();
    let mut z = Vec::with_capacity(m);
    z.push(poly[0]);
    let (mut lo, mut hi) = (1, m - 1);
    let mut take_lo = true;
    while lo <= hi {
        if take_lo {
            z.push(poly[lo]);
            lo += 1;
        } else {
            z.push(poly[hi]);
            hi -= 1;
        }
        take_lo = !take_lo;
    }
    z
}

/// Diagonals and triangles of the zigzag triangulation of `poly`.
fn triangulate_zigzag(poly: &[usize], edges: &mut Vec<(usize, usize)>, faces: &mut Vec<[usize; 3]>) {
    if poly.len() < 3 {
        return;
    }
    let z = zigzag(poly);
    for i in 1..z.len().saturating_sub(2) {
        edges.push((z[i], z[i + 1]));
    }
    for w in z.windows(3) {
        faces.push([w[0], w[1], w[2]]);
    }
}

/// Hub `0` over rim `1..=R` with `R = n - 1 - sunk`; the outer side of the
/// rim holds fans of the given arc lengths, spaced by one free vertex, and a
/// zigzag strip on what remains. Sunk vertices go into outer faces chosen to
/// keep degrees low.
fn hub_over_rim(kind: &'static str, n: usize, sunk: usize, arcs: &[usize]) -> Result<Graph> {
    if n < 4 + sunk {
        return Err(Error::InvalidSize { kind, detail: format!("n = {n} too small for {sunk} sunk vertices") });
    }
    let rim = n - 1 - sunk;
    let needed: usize = arcs.iter().map(|l| l + 1).sum();
    if arcs.iter().any(|&l| l < 2) || needed > rim {
        return Err(Error::InvalidSize { kind, detail: format!("fan arcs {arcs:?} do not fit a rim of {rim}") });
    }
    let pos = |i: usize| 1 + i % rim;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (0, pos(i))).collect();
    edges.extend((0..rim).map(|i| (pos(i), pos(i + 1))));
    let mut faces = Vec::new();
    let mut remaining = Vec::new();
    let mut i = 0;
    for &len in arcs {
        let c = pos(i);
        for j in 1..len {
            edges.push((c, pos(i + j + 1)));
            faces.push([c, pos(i + j), pos(i + j + 1)]);
        }
        remaining.push(c);
        remaining.push(pos(i + len));
        i += len + 1;
    }
    remaining.extend((i..rim).map(pos));
    if remaining.len() < 3 {
        return Err(Error::InvalidSize { kind, detail: format!("fan arcs {arcs:?} leave no strip on a rim of {rim}") });
    }
    triangulate_zigzag(&remaining, &mut edges, &mut faces);

    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    for s in 0..sunk {
        let v = rim + 1 + s;
        let (idx, _) = faces
            .iter()
            .enumerate()
            .min_by_key(|(_, f)| (f.iter().map(|&u| degree[u]).max(), f.iter().map(|&u| degree[u]).sum::<usize>()))
            .ok_or_else(|| Error::InvalidSize { kind, detail: "no outer face left for a sunk vertex".into() })?;
        let f = faces.swap_remove(idx);
        for u in f {
            edges.push((u, v));
            degree[u] += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_2 ∇ P` with the second hub (vertex 1) detached from a middle run of
/// `gap` path vertices; the freed polygon is triangulated by the chord
/// between the run's neighbours plus a zigzag strip.
fn two_hub(n: usize, gap: usize, sunk: bool) -> Result<Graph> {
    let kind = "two_hub";
    let base = if sunk { n.saturating_sub(1) } else { n };
    let path_len = base.saturating_sub(2);
    if gap == 0 || path_len < gap + 8 {
        return Err(Error::InvalidSize { kind, detail: format!("gap {gap} does not fit n = {n}") });
    }
    let h = build_h(base)?;
    let path: Vec<usize> = (2..base).collect();
    let start = (path_len - gap) / 2;
    let run = &path[start..start + gap];
    let (a, b) = (path[start - 1], path[start + gap]);
    let mut edges: Vec<(usize, usize)> = h.edges().filter(|&(u, v)| !(u == 1 && run.contains(&v))).collect();
    edges.push((a, b));
    let mut poly = vec![a];
    poly.extend_from_slice(run);
    poly.push(b);
    let mut faces = Vec::new();
    triangulate_zigzag(&poly, &mut edges, &mut faces);
    if sunk {
        let v = n - 1;
        edges.extend([(1, v), (path[1], v), (path[2], v)]);
    }
    Graph::from_edges(n, &edges)
}
