//! Signless Laplacian `Q = D + A`, its spectral radius by power iteration,
//! and the closed-form bounds used to sandwich it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_maximal_planar;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Largest eigenvalue of `Q(G)` with its eigenvector.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    pub q: f64,
    /// Unit 2-norm eigenvector, entrywise nonnegative.
    pub perron: Vec<f64>,
    /// `‖Q x - q x‖∞` at the returned iterate.
    pub residual: f64,
    pub iterations: usize,
    /// `false` when `G` is disconnected; the Perron claims then do not apply.
    pub connected: bool,
}

impl SpectralResult {
    /// The eigenvector rescaled to sum to one.
    pub fn standard_vector(&self) -> Vec<f64> {
        let s: f64 = self.perron.iter().sum();
        self.perron.iter().map(|x| x / s).collect()
    }
}

/// Dense `Q(G)` as row-major rows.
pub fn assemble_q(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut q = vec![vec![0.0; n]; n];
    for (u, row) in q.iter_mut().enumerate() {
        row[u] = g.degree(u) as f64;
        for &v in g.neighbors(u) {
            row[v] = 1.0;
        }
    }
    q
}

/// `y = Q x` from adjacency lists.
pub fn q_mul(g: &Graph, x: &[f64], y: &mut [f64]) {
    for u in 0..g.n() {
        let nb: f64 = g.neighbors(u).iter().map(|&v| x[v]).sum();
        y[u] = g.degree(u) as f64 * x[u] + nb;
    }
}

/// `xᵀ Q x = Σ_{uv ∈ E} (x_u + x_v)²`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    g.edges().map(|(u, v)| (x[u] + x[v]).powi(2)).sum()
}

/// Power iteration on `Q` from the all-ones vector, stopping once the
/// residual `‖Qx - qx‖∞` drops to `tol`.
pub fn q_max(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.n();
    let connected = g.is_connected();
    if n == 0 {
        return Ok(SpectralResult { q: 0.0, perron: vec![], residual: 0.0, iterations: 0, connected });
    }
    if g.m() == 0 {
        let x = vec![1.0 / (n as f64).sqrt(); n];
        return Ok(SpectralResult { q: 0.0, perron: x, residual: 0.0, iterations: 0, connected });
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut q = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        q_mul(g, &x, &mut y);
        q = dot(&x, &y);
        residual = x.iter().zip(&y).map(|(xi, yi)| (yi - q * xi).abs()).fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult { q, perron: x, residual, iterations: it, connected });
        }
        let norm = dot(&y, &y).sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NoConvergence { iterations: max_iter, residual, q })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `max_u d(u) + (Σ_{v~u} d(v)) / d(u)`.
pub fn merris_bound(g: &Graph) -> Result<f64> {
    let mut best = f64::NEG_INFINITY;
    for u in 0..g.n() {
        let d = g.degree(u);
        if d == 0 {
            return Err(Error::IsolatedVertex(u));
        }
        let s: usize = g.neighbors(u).iter().map(|&v| g.degree(v)).sum();
        best = best.max(d as f64 + s as f64 / d as f64);
    }
    Ok(best)
}

/// `Δ + 1`, which never exceeds `q(G)` on a connected graph with an edge.
pub fn lower_bound_delta(g: &Graph) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.degree_profile().delta_max as f64 + 1.0)
}

/// Which of the three maximum-degree regimes a triangulation falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    /// `Δ = n - 1`: `q <= n + 4 - 6/(n-1)`.
    #[serde(rename = "i")]
    DominatingVertex,
    /// `Δ = n - 2`: `q <= n + 3 - 3/(n-2)`.
    #[serde(rename = "ii")]
    NearDominating,
    /// `Δ <= n - 3`: `q <= n + 2`.
    #[serde(rename = "iii")]
    Sparse,
}

impl CaseTag {
    pub fn label(self) -> &'static str {
        match self {
            CaseTag::DominatingVertex => "i",
            CaseTag::NearDominating => "ii",
            CaseTag::Sparse => "iii",
        }
    }
}

/// Degree-based bounds for a maximal planar graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlanarBound {
    /// `max_u d(u) + 2 + (3n - 9)/d(u)`.
    pub degree_max: f64,
    pub case_tag: CaseTag,
    pub case_bound: f64,
}

/// Bounds for a maximal planar graph on at least six vertices.
pub fn planar_degree_bound(g: &Graph) -> Result<PlanarBound> {
    let n = g.n();
    if n < 6 {
        return Err(Error::Precondition(format!("planar degree bound needs n >= 6, got {n}")));
    }
    if !is_maximal_planar(g) {
        return Err(Error::NotMaximalPlanar);
    }
    Ok(planar_bound_unchecked(g))
}

fn planar_bound_unchecked(g: &Graph) -> PlanarBound {
    let n = g.n();
    let nf = n as f64;
    let degree_max = (0..n)
        .map(|u| {
            let d = g.degree(u) as f64;
            d + 2.0 + (3.0 * nf - 9.0) / d
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let delta = g.degree_profile().delta_max;
    let (case_tag, case_bound) = if delta == n - 1 {
        (CaseTag::DominatingVertex, nf + 4.0 - 6.0 / (nf - 1.0))
    } else if delta == n - 2 {
        (CaseTag::NearDominating, nf + 3.0 - 3.0 / (nf - 2.0))
    } else {
        (CaseTag::Sparse, nf + 2.0)
    };
    PlanarBound { degree_max, case_tag, case_bound }
}

/// Per-graph comparison of `q(G)` against every applicable bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub q: f64,
    pub residual: f64,
    pub lower_delta: f64,
    pub merris: f64,
    /// Case bound for maximal planar graphs with `n >= 6`.
    pub planar_bound: Option<f64>,
    pub planar_degree_max: Option<f64>,
    pub case_tag: Option<CaseTag>,
}

impl BoundReport {
    /// Whether `Δ+1 <= q <= every upper bound` holds up to `tol`.
    pub fn is_consistent(&self, tol: f64) -> bool {
        let mut ok = self.lower_delta - tol <= self.q && self.q <= self.merris + tol;
        if let Some(b) = self.planar_bound {
            ok &= self.q <= b + tol;
        }
        if let Some(b) = self.planar_degree_max {
            ok &= self.q <= b + tol;
        }
        ok
    }
}

/// Evaluates every bound on a connected graph with an edge.
pub fn bound_report(g: &Graph, tol: f64) -> Result<BoundReport> {
    let lower_delta = lower_bound_delta(g)?;
    let merris = merris_bound(g)?;
    let res = q_max(g, tol, DEFAULT_MAX_ITER)?;
    let planar = if g.n() >= 6 && is_maximal_planar(g) { Some(planar_bound_unchecked(g)) } else { None };
    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        q: res.q,
        residual: res.residual,
        lower_delta,
        merris,
        planar_bound: planar.as_ref().map(|p| p.case_bound),
        planar_degree_max: planar.as_ref().map(|p| p.degree_max),
        case_tag: planar.map(|p| p.case_tag),
    })
}

/// Outcome of checking the Perron identities of `K_2 ∇ P_{n-2}`.
#[derive(Clone, Debug, Serialize)]
pub struct HIdentityCheck {
    pub n: usize,
    pub q: f64,
    /// Names of the identities that failed; empty on success.
    pub failures: Vec<&'static str>,
    /// `x_1 (q - n + 2) - 1` on the sum-one eigenvector.
    pub hub_identity_error: f64,
    /// Difference between `x_3` and its closed form in `q`.
    pub end_identity_error: f64,
    /// `q² - (n + 6) q + 4n + 8`.
    pub quadratic: f64,
}

impl HIdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the eigenvector identities of `H` on a spectral result computed
/// for `build_h(n)`. Vertex 0 and 1 are the hubs; 2 and `n-1` are the path
/// ends.
pub fn h_identities(n: usize, res: &SpectralResult, tol: f64) -> Result<HIdentityCheck> {
    if n < 5 {
        return Err(Error::Precondition(format!("identities need n >= 5, got {n}")));
    }
    if res.perron.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: res.perron.len() });
    }
    let x = res.standard_vector();
    let q = res.q;
    let nf = n as f64;
    let mut failures = Vec::new();

    if (x[0] - x[1]).abs() > tol {
        failures.push("hub symmetry x1 = x2");
    }
    if (x[2] - x[n - 1]).abs() > tol {
        failures.push("end symmetry x3 = xn");
    }
    let hub_identity_error = x[0] * (q - nf + 2.0) - 1.0;
    if hub_identity_error.abs() > tol {
        failures.push("x1 (q - n + 2) = 1");
    }
    let end_closed = (2.0 * (nf - 2.0) - (q - nf) * (q - 6.0)) / (4.0 * (q - nf + 2.0));
    let end_identity_error = x[2] - end_closed;
    if end_identity_error.abs() > tol {
        failures.push("x3 closed form");
    }
    if x[0] <= x[2] {
        failures.push("x1 > x3");
    }
    let quadratic = q * q - (6.0 + nf) * q + 4.0 * nf + 8.0;
    if quadratic <= 0.0 {
        failures.push("q^2 - (n+6) q + 4n + 8 > 0");
    }
    if q <= nf + 2.0 {
        failures.push("q > n + 2");
    }
    Ok(HIdentityCheck { n, q, failures, hub_identity_error, end_identity_error, quadratic })
}
