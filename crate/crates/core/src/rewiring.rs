//! Edge swaps that raise `q(G)` on triangulations with a dominating vertex
//! and a second hub of degree `n - 2` or `n - 3`.
//!
//! Roles follow the usual one-based names: `v_1` dominates, `v_2` is the
//! second hub, and `v_2 v_3 ... v_n` is the link cycle of `v_1`. Builders
//! place `v_i` at vertex `i - 1`.
//!
//! - `D1(k)`: `v_2` misses `v_k`; chord `v_{k-1} v_{k+1}`.
//! - `D2(k)`: `v_2` misses `v_k, v_{k+1}`; chords `v_{k-1} v_{k+2}`, `v_k v_{k+2}`.
//! - `D3(k)`: `v_2` misses `v_{k-1}, v_{k+1}`; chords `v_{k-2} v_k`, `v_k v_{k+2}`.
//! - `D4(k, l)`: `v_2` misses `v_k, v_l`; chords `v_{k-1} v_{k+1}`, `v_{l-1} v_{l+1}`.

use serde::Serialize;

use crate::enumeration::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{build_h, Graph};
use crate::planarity::{is_maximal_planar, is_planar, link_cycle};
use crate::spectral::{q_max, quadratic_form, DEFAULT_MAX_ITER};

/// Smallest order covered by [`detect_config`].
pub const MIN_ORDER: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Config {
    D1,
    D2,
    D3,
    D4,
}

impl Config {
    pub fn parse(s: &str) -> Option<Config> {
        match s.to_ascii_uppercase().as_str() {
            "D1" => Some(Config::D1),
            "D2" => Some(Config::D2),
            "D3" => Some(Config::D3),
            "D4" => Some(Config::D4),
            _ => None,
        }
    }
}

/// A detected configuration and the swap `G - remove + add`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapPlan {
    pub config: Config,
    pub remove: (usize, usize),
    pub add: (usize, usize),
    pub k: usize,
    pub l: Option<usize>,
    /// `labels[i - 1]` is the vertex of `G` playing `v_i`.
    pub labels: Vec<usize>,
}

impl SwapPlan {
    /// Vertex playing `v_i`.
    pub fn v(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    fn in_roles(config: Config, n: usize, k: usize, l: Option<usize>) -> SwapPlan {
        let v = |i: usize| i - 1;
        let (remove, add) = match config {
            Config::D1 => ((v(k - 1), v(k + 1)), (v(2), v(k))),
            Config::D2 => ((v(k - 1), v(k + 2)), (v(2), v(k))),
            Config::D3 => ((v(k), v(k + 2)), (v(2), v(k + 1))),
            Config::D4 => {
                let l = l.expect("D4 has two indices");
                ((v(l - 1), v(l + 1)), (v(2), v(l)))
            }
        };
        SwapPlan { config, remove, add, k, l, labels: (0..n).collect() }
    }

    fn relabeled(mut self, labels: &[usize]) -> SwapPlan {
        let map = |(a, b): (usize, usize)| {
            let (x, y) = (labels[a], labels[b]);
            (x.min(y), x.max(y))
        };
        self.remove = map(self.remove);
        self.add = map(self.add);
        self.labels = labels.to_vec();
        self
    }
}

fn check_indices(config: Config, n: usize, k: usize, l: Option<usize>) -> Result<()> {
    let ok = match (config, l) {
        (Config::D1, None) => (4..=n - 1).contains(&k),
        (Config::D2, None) => (4..=n - 2).contains(&k),
        (Config::D3, None) => (5..=n - 2).contains(&k),
        (Config::D4, Some(l)) => k >= 4 && k + 2 <= l && l < n,
        _ => false,
    };
    if n < 7 || !ok {
        return Err(Error::InvalidSize {
            kind: "configuration",
            detail: format!("{config:?} with n = {n}, k = {k}, l = {l:?}"),
        });
    }
    Ok(())
}

/// The configuration graph with `v_i` at vertex `i - 1`.
pub fn build_config(config: Config, n: usize, k: usize, l: Option<usize>) -> Result<Graph> {
    check_indices(config, n, k, l)?;
    let v = |i: usize| i - 1;
    let missing: Vec<usize> = match config {
        Config::D1 => vec![k],
        Config::D2 => vec![k, k + 1],
        Config::D3 => vec![k - 1, k + 1],
        Config::D4 => vec![k, l.expect("checked")],
    };
    let chords: Vec<(usize, usize)> = match config {
        Config::D1 => vec![(k - 1, k + 1)],
        Config::D2 => vec![(k - 1, k + 2), (k, k + 2)],
        Config::D3 => vec![(k - 2, k), (k, k + 2)],
        Config::D4 => {
            let l = l.expect("checked");
            vec![(k - 1, k + 1), (l - 1, l + 1)]
        }
    };
    let mut edges: Vec<(usize, usize)> = (2..=n).map(|i| (v(1), v(i))).collect();
    edges.extend((2..n).map(|i| (v(i), v(i + 1))));
    edges.push((v(n), v(2)));
    edges.extend((4..n).filter(|i| !missing.contains(i)).map(|i| (v(2), v(i))));
    edges.extend(chords.into_iter().map(|(a, b)| (v(a), v(b))));
    Graph::from_edges(n, &edges)
}

/// Identifies the configuration of `g` and returns its swap in `g`'s labels.
/// `None` means no configuration matched.
pub fn detect_config(g: &Graph) -> Result<Option<SwapPlan>> {
    let n = g.n();
    if n < MIN_ORDER {
        return Err(Error::Precondition(format!("needs n >= {MIN_ORDER}, got {n}")));
    }
    if !is_maximal_planar(g) {
        return Err(Error::NotMaximalPlanar);
    }
    let p = g.degree_profile();
    if p.delta_max != n - 1 || !(p.delta_second == n - 2 || p.delta_second == n - 3) {
        return Err(Error::Precondition(format!(
            "needs Δ = n - 1 and Δ' in {{n - 2, n - 3}}, got Δ = {}, Δ' = {}",
            p.delta_max, p.delta_second
        )));
    }
    let hub = (0..n).find(|&u| g.degree(u) == n - 1).expect("Δ attained");
    let emb = is_planar(g).expect("maximal planar");
    let cycle = link_cycle(g, &emb, hub)?;
    let len = cycle.len();
    for start in 0..len {
        if g.degree(cycle[start]) != p.delta_second {
            continue;
        }
        for dir in [1, len - 1] {
            let mut labels = vec![hub];
            labels.extend((0..len).map(|s| cycle[(start + s * dir) % len]));
            if let Some(plan) = match_roles(g, &labels)? {
                return Ok(Some(plan));
            }
        }
    }
    Ok(None)
}

/// Tries the templates consistent with the vertices `v_2` misses, under the
/// role assignment `labels`.
fn match_roles(g: &Graph, labels: &[usize]) -> Result<Option<SwapPlan>> {
    let n = g.n();
    let v2 = labels[1];
    let missing: Vec<usize> = (4..n).filter(|&i| !g.has_edge(v2, labels[i - 1])).collect();
    let candidates: Vec<(Config, usize, Option<usize>)> = match missing[..] {
        [k] => vec![(Config::D1, k, None)],
        [k, l] if l == k + 1 => vec![(Config::D2, k, None)],
        [k, l] if l == k + 2 => vec![(Config::D3, k + 1, None)],
        [k, l] => vec![(Config::D4, k, Some(l))],
        _ => vec![],
    };
    let mut inverse = vec![0; n];
    for (role, &u) in labels.iter().enumerate() {
        inverse[u] = role;
    }
    let in_roles = g.relabel(&inverse)?;
    for (config, k, l) in candidates {
        if check_indices(config, n, k, l).is_err() {
            continue;
        }
        if build_config(config, n, k, l)? == in_roles {
            return Ok(Some(SwapPlan::in_roles(config, n, k, l).relabeled(labels)));
        }
    }
    Ok(None)
}

/// `G - remove + add`.
pub fn apply_swap(g: &Graph, plan: &SwapPlan) -> Result<Graph> {
    let (a, b) = plan.remove;
    let (c, d) = plan.add;
    if !g.has_edge(a, b) {
        return Err(Error::PlanMismatch(format!("edge {a}-{b} to remove is absent")));
    }
    if g.has_edge(c, d) {
        return Err(Error::PlanMismatch(format!("edge {c}-{d} to add is present")));
    }
    g.without_edge(a, b)?.with_edge(c, d)
}

/// A named strict inequality between Perron entries.
#[derive(Clone, Debug, Serialize)]
pub struct SignCondition {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evidence that a swap raises `q`.
#[derive(Clone, Debug, Serialize)]
pub struct IncreaseCheck {
    pub q_before: f64,
    pub q_after: f64,
    pub gap: f64,
    pub removed: (usize, usize),
    pub added: (usize, usize),
    /// `Xᵀ Q(F) X - Xᵀ Q(G) X` with `X` the unit Perron vector of `G`.
    pub rayleigh_difference: f64,
    /// `(x_a + x_b)² - (x_c + x_d)²` for added `ab` and removed `cd`.
    pub predicted_difference: f64,
    pub identity_error: f64,
    pub signs: Vec<SignCondition>,
}

impl IncreaseCheck {
    pub fn passed(&self, identity_tol: f64, min_gap: f64) -> bool {
        self.identity_error <= identity_tol
            && self.gap > min_gap
            && self.rayleigh_difference > 0.0
            && self.signs.iter().all(|s| s.holds)
    }
}

/// Compares `q(F)` with `q(G)` for a single-edge swap `F` of `G`, checks the
/// Rayleigh difference identity, and, given the plan, the Perron-entry
/// inequalities that force the increase.
pub fn verify_increase(g: &Graph, f: &Graph, plan: Option<&SwapPlan>) -> Result<IncreaseCheck> {
    if g.n() != f.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: f.n() });
    }
    let removed: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| !f.has_edge(a, b)).collect();
    let added: Vec<(usize, usize)> = f.edges().filter(|&(a, b)| !g.has_edge(a, b)).collect();
    let (&[removed], &[added]) = (&removed[..], &added[..]) else {
        return Err(Error::PlanMismatch(format!(
            "expected one removed and one added edge, found {} and {}",
            removed.len(),
            added.len()
        )));
    };
    if let Some(p) = plan {
        if p.remove != removed || p.add != added {
            return Err(Error::PlanMismatch("plan edges differ from the graph difference".into()));
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rg = q_max(g, 1e-12, DEFAULT_MAX_ITER)?;
    let rf = q_max(f, 1e-12, DEFAULT_MAX_ITER)?;
    let x = &rg.perron;
    let rayleigh_difference = quadratic_form(f, x) - quadratic_form(g, x);
    let pair = |(a, b): (usize, usize)| (x[a] + x[b]).powi(2);
    let predicted_difference = pair(added) - pair(removed);
    let signs = plan.map(|p| sign_conditions(p, x)).unwrap_or_default();
    Ok(IncreaseCheck {
        q_before: rg.q,
        q_after: rf.q,
        gap: rf.q - rg.q,
        removed,
        added,
        rayleigh_difference,
        predicted_difference,
        identity_error: (rayleigh_difference - predicted_difference).abs(),
        signs,
    })
}

fn sign_conditions(p: &SwapPlan, x: &[f64]) -> Vec<SignCondition> {
    let xv = |i: usize| x[p.v(i)];
    let mut out = Vec::new();
    let mut cond = |name: String, lhs: f64, rhs: f64| out.push(SignCondition { name, lhs, rhs, holds: lhs > rhs });
    let k = p.k;
    match p.config {
        Config::D1 | Config::D4 => {
            let k = p.l.unwrap_or(k);
            cond(format!("x2 > x{k}"), xv(2), xv(k));
            cond(format!("x2 + x{k} > x{} + x{}", k - 1, k + 1), xv(2) + xv(k), xv(k - 1) + xv(k + 1));
        }
        Config::D2 => {
            cond(format!("x{k} > x{}", k + 1), xv(k), xv(k + 1));
            cond(format!("x{} + x{} > x{k}", k - 1, k + 1), xv(k - 1) + xv(k + 1), xv(k));
            for i in [k + 1, k, k - 1, k + 2] {
                cond(format!("x2 > x{i}"), xv(2), xv(i));
            }
            cond(format!("x2 + x{k} > x{} + x{}", k - 1, k + 2), xv(2) + xv(k), xv(k - 1) + xv(k + 2));
        }
        Config::D3 => {
            for i in [k + 1, k - 1, k, k + 2] {
                cond(format!("x2 > x{i}"), xv(2), xv(i));
            }
            cond(format!("x2 + x{} > x{k} + x{}", k + 1, k + 2), xv(2) + xv(k + 1), xv(k) + xv(k + 2));
        }
    }
    out
}

/// Whether `g` is isomorphic to `K_2 ∇ P_{n-2}`.
pub fn is_h(g: &Graph) -> Result<bool> {
    are_isomorphic(g, &build_h(g.n())?)
}
