//! Exhaustive search for the triangulation maximizing `q(G)`.

use rayon::prelude::*;
use serde::Serialize;

use super::canon::are_isomorphic;
use super::generate::gen_triangulations;
use crate::error::{Error, Result};
use crate::graph::{build_h, Graph};
use crate::spectral::q_max;

/// First-pass tolerance.
pub const SEARCH_TOL: f64 = 1e-10;
/// Tolerance for re-evaluating near-ties.
pub const ESCALATED_TOL: f64 = 1e-13;
/// Values closer than this to the leader are re-evaluated.
pub const ESCALATION_GAP: f64 = 1e-7;
/// After escalation, values this close to the leader count as a tie.
pub const TIE_GAP: f64 = 1e-11;

const MAX_ITER: usize = 1_000_000;

/// Where the candidate triangulations come from.
pub enum Source {
    Generated,
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchRow {
    pub n: usize,
    pub m: usize,
    pub q: f64,
    pub is_best: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub count: usize,
    /// Edge list of the first maximizer.
    pub best: Vec<(usize, usize)>,
    pub best_q: f64,
    pub runner_up_q: Option<f64>,
    #[serde(rename = "is_H")]
    pub is_h: bool,
    /// Indices (into `rows`) of every graph tied with the maximum.
    pub maximizers: Vec<usize>,
    /// Whether the top values were re-evaluated at [`ESCALATED_TOL`].
    pub escalated: bool,
    pub rows: Vec<SearchRow>,
}

impl SearchResult {
    /// Per-graph CSV with a header line.
    pub fn to_csv(&self, fmt_f64: impl Fn(f64) -> String) -> String {
        let mut s = String::from("n,m,q,is_best\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.n, r.m, fmt_f64(r.q), r.is_best));
        }
        s
    }
}

/// Evaluates `q` on every triangulation of order `n` and identifies the
/// maximizer, checking it against `K_2 ∇ P_{n-2}`.
pub fn extremal_search(n: usize, source: Source) -> Result<SearchResult> {
    let graphs = match source {
        Source::Generated => gen_triangulations(n)?,
        Source::Graphs(gs) => gs,
    };
    if graphs.is_empty() {
        return Err(Error::Precondition(format!("no triangulations supplied for n = {n}")));
    }
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: g.n() });
    }
    let mut q: Vec<f64> =
        graphs.par_iter().map(|g| q_max(g, SEARCH_TOL, MAX_ITER).map(|r| r.q)).collect::<Result<Vec<_>>>()?;

    let lead = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let close: Vec<usize> = (0..q.len()).filter(|&i| lead - q[i] <= ESCALATION_GAP).collect();
    let escalated = close.len() > 1;
    if escalated {
        let fine: Vec<f64> = close
            .par_iter()
            .map(|&i| q_max(&graphs[i], ESCALATED_TOL, MAX_ITER).map(|r| r.q))
            .collect::<Result<Vec<_>>>()?;
        for (&i, v) in close.iter().zip(fine) {
            q[i] = v;
        }
    }
    let best_q = q.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let maximizers: Vec<usize> = (0..q.len()).filter(|&i| best_q - q[i] <= TIE_GAP).collect();
    let best = &graphs[maximizers[0]];
    let runner_up_q = (0..q.len()).filter(|i| !maximizers.contains(i)).map(|i| q[i]).reduce(f64::max);
    let is_h = n <= 64 && are_isomorphic(best, &build_h(n)?)?;
    let rows = graphs
        .iter()
        .zip(&q)
        .enumerate()
        .map(|(i, (g, &qi))| SearchRow { n, m: g.m(), q: qi, is_best: maximizers.contains(&i) })
        .collect();
    Ok(SearchResult {
        n,
        count: graphs.len(),
        best: best.edges().collect(),
        best_q,
        runner_up_q,
        is_h,
        maximizers,
        escalated,
        rows,
    })
}
