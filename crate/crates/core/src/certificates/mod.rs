//! Exact eigenvalue upper bounds for `Q(G)`.
//!
//! A certificate is a nonnegative vector `x != 0`, a rational `r` and a real
//! polynomial `f`. If `f(Q) x <= r x` entrywise and `Q` is irreducible, then
//! `f(q(G)) <= r`. Verification runs in exact integer arithmetic.
//!
//! The constructions below build piecewise-constant vectors for
//! triangulations whose maximum degree is `n - 1` or `n - 2`, each valid
//! under a degree census checked before the vector is built.

pub mod fixtures;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::is_maximal_planar;

pub use fixtures::{build_fixture, Fixture};

/// Highest supported polynomial degree.
pub const MAX_POLY_DEGREE: usize = 4;

/// Formats a rational as `"p/q"`, always with an explicit denominator.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::Precondition(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

fn ser_ratio_vec<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ratio_string))
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Which vector construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Supplied by the caller.
    Custom,
    /// `Δ <= n - 3`: the degree bound alone gives `q <= n + 2`.
    SparseDegree,
    /// `Δ = n - 2` with every other degree below `n/6 + 1`.
    NearDominatingFlat,
    /// `Δ = n - 2` with `1..=12` vertices in `[n/6 + 1, n - 61]`.
    NearDominatingBand,
    /// `Δ = n - 2` with `Δ' >= n - 62`.
    NearDominatingTwoHub,
    /// `Δ = n - 1` with every other degree below `n/7 + 19/7`.
    DominatingFlat,
    /// `Δ = n - 1` with `1..=13` vertices in `[n/7 + 19/7, n - 75]`.
    DominatingBand,
    /// `Δ = n - 1` with `n - 81 <= Δ' <= n - 4`.
    DominatingTwoHub,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        match self {
            Construction::Custom => "custom",
            Construction::SparseDegree => "sparse-degree",
            Construction::NearDominatingFlat => "near-dominating-flat",
            Construction::NearDominatingBand => "near-dominating-band",
            Construction::NearDominatingTwoHub => "near-dominating-two-hub",
            Construction::DominatingFlat => "dominating-flat",
            Construction::DominatingBand => "dominating-band",
            Construction::DominatingTwoHub => "dominating-two-hub",
        }
    }

    /// Smallest order for which the construction is claimed.
    pub fn min_order(self) -> usize {
        match self {
            Construction::Custom => 1,
            Construction::SparseDegree => 6,
            Construction::NearDominatingFlat => 4,
            Construction::NearDominatingBand => 115,
            Construction::NearDominatingTwoHub => 380,
            Construction::DominatingFlat => 6,
            Construction::DominatingBand => 91,
            Construction::DominatingTwoHub => 461,
        }
    }

    pub fn regime(self) -> Option<Regime> {
        match self {
            Construction::NearDominatingFlat
            | Construction::NearDominatingBand
            | Construction::NearDominatingTwoHub => Some(Regime::NearDominating),
            Construction::DominatingFlat | Construction::DominatingBand | Construction::DominatingTwoHub => {
                Some(Regime::Dominating)
            }
            Construction::Custom | Construction::SparseDegree => None,
        }
    }
}

/// A vector `x`, target `r` and polynomial `f` (coefficients from the
/// constant term up) claiming `f(Q) x <= r x`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "ser_ratio_vec")]
    pub x: Vec<BigRational>,
    #[serde(serialize_with = "ser_ratio")]
    pub r: BigRational,
    pub lemma_tag: Construction,
    #[serde(serialize_with = "ser_ratio_vec")]
    pub poly: Vec<BigRational>,
}

impl Certificate {
    /// Certificate with `f = identity`.
    pub fn new(x: Vec<BigRational>, r: BigRational, lemma_tag: Construction) -> Self {
        Certificate { x, r, lemma_tag, poly: vec![BigRational::zero(), BigRational::one()] }
    }

    pub fn with_poly(mut self, poly: Vec<BigRational>) -> Self {
        self.poly = poly;
        self
    }
}

/// Outcome of an exact check of `f(Q) x <= r x`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    /// `min_i (r x_i - (f(Q) x)_i)`.
    #[serde(serialize_with = "ser_ratio")]
    pub worst_slack: BigRational,
    pub worst_index: usize,
}

/// Checks `f(Q) x <= r x` entrywise in exact arithmetic.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> Result<Verdict> {
    let n = g.n();
    if c.x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: c.x.len() });
    }
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if c.x.iter().any(|v| v.is_negative()) {
        return Err(Error::Precondition("certificate vector has a negative entry".into()));
    }
    if c.x.iter().all(|v| v.is_zero()) {
        return Err(Error::Precondition("certificate vector is zero".into()));
    }
    let degree = match c.poly.iter().rposition(|a| !a.is_zero()) {
        Some(d) => d,
        None => return Err(Error::Precondition("polynomial is zero".into())),
    };
    if degree > MAX_POLY_DEGREE {
        return Err(Error::Precondition(format!("polynomial degree {degree} exceeds {MAX_POLY_DEGREE}")));
    }

    // x = X / dx and f_i = a_i / dc over common denominators, so Horner's
    // rule y <- Q y + f_i x runs on integer numerators over dx * dc.
    let dx = c.x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let xs: Vec<BigInt> = c.x.iter().map(|v| v.numer() * (&dx / v.denom())).collect();
    let poly = &c.poly[..=degree];
    let dc = poly.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let a: Vec<BigInt> = poly.iter().map(|v| v.numer() * (&dc / v.denom())).collect();

    let mut y: Vec<BigInt> = xs.iter().map(|xi| &a[degree] * xi).collect();
    for ai in a[..degree].iter().rev() {
        let mut next = Vec::with_capacity(n);
        for u in 0..n {
            let mut s = BigInt::from(g.degree(u)) * &y[u];
            for &v in g.neighbors(u) {
                s += &y[v];
            }
            s += ai * &xs[u];
            next.push(s);
        }
        y = next;
    }

    // r x_i - y_i = (rn * dc * X_i - rd * Y_i) / (rd * dc * dx)
    let rn = c.r.numer();
    let rd = c.r.denom();
    let scale = rn * &dc;
    let denom = rd * &dc * &dx;
    let mut worst_index = 0;
    let mut worst: Option<BigInt> = None;
    for i in 0..n {
        let s = &scale * &xs[i] - rd * &y[i];
        if worst.as_ref().is_none_or(|w| s < *w) {
            worst = Some(s);
            worst_index = i;
        }
    }
    let worst = worst.expect("n > 0");
    let pass = !worst.is_negative();
    Ok(Verdict { pass, worst_slack: BigRational::new(worst, denom), worst_index })
}

/// `max_i (Q x)_i / x_i` over the positive entries of `x`; the smallest `r`
/// at which `x` certifies `q <= r`, provided `x > 0`.
pub fn collatz_wielandt_max(g: &Graph, x: &[BigRational]) -> Result<BigRational> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: x.len() });
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::Precondition("vector must be strictly positive".into()));
    }
    let mut best: Option<BigRational> = None;
    for u in 0..g.n() {
        let mut s = &x[u] * BigInt::from(g.degree(u));
        for &v in g.neighbors(u) {
            s += &x[v];
        }
        let ratio = s / &x[u];
        if best.as_ref().is_none_or(|b| ratio > *b) {
            best = Some(ratio);
        }
    }
    best.ok_or_else(|| Error::Precondition("empty graph".into()))
}

/// The two maximum-degree regimes with certificate constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `Δ = n - 1`.
    Dominating,
    /// `Δ = n - 2`.
    NearDominating,
}

impl Regime {
    pub fn delta(self, n: usize) -> usize {
        match self {
            Regime::Dominating => n - 1,
            Regime::NearDominating => n - 2,
        }
    }

    /// Middle degree band `[low_num / low_den, high]`.
    pub fn band(self, n: usize) -> Band {
        match self {
            Regime::NearDominating => Band { low_num: n + 6, low_den: 6, high: n as i64 - 61 },
            Regime::Dominating => Band { low_num: n + 19, low_den: 7, high: n as i64 - 75 },
        }
    }

    /// Largest band population compatible with the degree sum `6n - 12`.
    pub fn band_cap(self) -> usize {
        match self {
            Regime::NearDominating => 12,
            Regime::Dominating => 13,
        }
    }

    fn band_construction(self) -> Construction {
        match self {
            Regime::NearDominating => Construction::NearDominatingBand,
            Regime::Dominating => Construction::DominatingBand,
        }
    }
}

/// Closed degree interval with a rational lower end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Band {
    pub low_num: usize,
    pub low_den: usize,
    pub high: i64,
}

impl Band {
    pub fn reaches(&self, d: usize) -> bool {
        d * self.low_den >= self.low_num
    }

    pub fn contains(&self, d: usize) -> bool {
        self.reaches(d) && (d as i64) <= self.high
    }
}

/// Degree census of a triangulation relative to a regime's middle band.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureClass {
    pub regime: Regime,
    pub n: usize,
    pub delta_max: usize,
    pub delta_second: usize,
    pub band: Band,
    /// Vertices other than the primary hub whose degree reaches the band.
    pub k_mid: usize,
    /// Primary hub first, then a vertex attaining `Δ'`.
    pub hub_vertices: Vec<usize>,
    pub band_members: Vec<usize>,
    /// Vertices above the band's upper end, excluding the primary hub.
    pub above_band: Vec<usize>,
}

impl StructureClass {
    pub fn hub(&self) -> usize {
        self.hub_vertices[0]
    }

    pub fn second_hub(&self) -> usize {
        self.hub_vertices[1]
    }
}

/// Degree census for `regime` on a maximal planar graph.
pub fn classify(g: &Graph, regime: Regime) -> Result<StructureClass> {
    let n = g.n();
    if n < 4 || !is_maximal_planar(g) {
        return Err(Error::NotMaximalPlanar);
    }
    let profile = g.degree_profile();
    if profile.delta_max != regime.delta(n) {
        return Err(Error::Precondition(format!(
            "maximum degree {} does not match the regime (expected {})",
            profile.delta_max,
            regime.delta(n)
        )));
    }
    let hub = (0..n).find(|&u| g.degree(u) == profile.delta_max).expect("Δ is attained");
    let second = (0..n).find(|&u| u != hub && g.degree(u) == profile.delta_second).expect("Δ' is attained");
    let band = regime.band(n);
    let mut band_members = Vec::new();
    let mut above_band = Vec::new();
    for u in (0..n).filter(|&u| u != hub) {
        let d = g.degree(u);
        if band.contains(d) {
            band_members.push(u);
        } else if band.reaches(d) {
            above_band.push(u);
        }
    }
    let k_mid = band_members.len() + above_band.len();
    if n >= regime.band_construction().min_order() {
        assert!(k_mid <= regime.band_cap(), "band population {k_mid} contradicts the degree sum 6n - 12");
    }
    Ok(StructureClass {
        regime,
        n,
        delta_max: profile.delta_max,
        delta_second: profile.delta_second,
        band,
        k_mid,
        hub_vertices: vec![hub, second],
        band_members,
        above_band,
    })
}

fn unmet(c: Construction, detail: String) -> Error {
    Error::HypothesisUnmet { construction: c.tag(), detail }
}

/// Checks the degree census a construction needs.
fn check_hypotheses(g: &Graph, construction: Construction, class: &StructureClass) -> Result<()> {
    let n = g.n();
    if class.n != n {
        return Err(Error::DimensionMismatch { expected: n, got: class.n });
    }
    let regime = construction
        .regime()
        .ok_or_else(|| Error::Precondition(format!("{} has no certificate vector", construction.tag())))?;
    if n < construction.min_order() {
        return Err(unmet(construction, format!("needs n >= {}, got {n}", construction.min_order())));
    }
    if class.regime != regime {
        return Err(unmet(construction, format!("classified for {:?}, needs {:?}", class.regime, regime)));
    }
    let k = class.band_members.len();
    match construction {
        Construction::NearDominatingFlat | Construction::DominatingFlat => {
            if class.k_mid != 0 {
                let u = class.band_members.iter().chain(&class.above_band).next().copied().unwrap_or(0);
                return Err(unmet(construction, format!("vertex {u} has degree {} reaching the band", g.degree(u))));
            }
        }
        Construction::NearDominatingBand | Construction::DominatingBand => {
            if let Some(&u) = class.above_band.first() {
                return Err(unmet(
                    construction,
                    format!("vertex {u} has degree {} above {}", g.degree(u), class.band.high),
                ));
            }
            if k < 1 || k > regime.band_cap() {
                return Err(unmet(construction, format!("band holds {k} vertices, needs 1..={}", regime.band_cap())));
            }
        }
        Construction::NearDominatingTwoHub => {
            if class.delta_second + 62 < n {
                return Err(unmet(construction, format!("Δ' = {} below n - 62", class.delta_second)));
            }
        }
        Construction::DominatingTwoHub => {
            if class.delta_second + 81 < n || class.delta_second + 4 > n {
                return Err(unmet(construction, format!("Δ' = {} outside [n - 81, n - 4]", class.delta_second)));
            }
        }
        Construction::Custom | Construction::SparseDegree => unreachable!("no regime"),
    }
    Ok(())
}

/// Builds the certificate vector of `construction` with `r = n + 2`.
pub fn build_vector(g: &Graph, construction: Construction, class: &StructureClass) -> Result<Certificate> {
    check_hypotheses(g, construction, class)?;
    let n = g.n();
    let ni = n as i64;
    let hub = class.hub();
    let k = class.band_members.len() as i64;
    let (special, special_value, rest) = match construction {
        Construction::NearDominatingFlat => (vec![], ratio(0, 1), ratio(4, ni - 1)),
        Construction::DominatingFlat => (vec![], ratio(0, 1), ratio(3, ni - 1)),
        Construction::NearDominatingBand => (class.band_members.clone(), ratio(1, k), ratio(3, ni - k - 1)),
        Construction::DominatingBand => (class.band_members.clone(), ratio(2, 3 * k), ratio(7, 3 * (ni - k - 1))),
        Construction::NearDominatingTwoHub => (vec![class.second_hub()], ratio(1, 1), ratio(3, ni - 2)),
        Construction::DominatingTwoHub => (vec![class.second_hub()], ratio(4, 7), ratio(17, 7 * (ni - 2))),
        Construction::Custom | Construction::SparseDegree => unreachable!("rejected by check_hypotheses"),
    };
    let mut x = vec![rest; n];
    for &u in &special {
        x[u] = special_value.clone();
    }
    x[hub] = BigRational::one();
    Ok(Certificate::new(x, ratio(ni + 2, 1), construction))
}

/// One construction tried by [`certify_upper`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Attempt {
    pub construction: Construction,
    /// Why the construction does not apply; absent when it was verified.
    pub skipped: Option<String>,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UpperStatus {
    /// `q <= n + 2` is proven.
    Certified,
    /// A construction whose census holds failed exact verification.
    Fail,
    /// No construction applies.
    Uncertified,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UpperReport {
    pub n: usize,
    pub delta_max: usize,
    pub delta_second: usize,
    pub status: UpperStatus,
    /// The construction that decided the status.
    pub lemma_tag: Option<Construction>,
    pub bound: usize,
    pub attempts: Vec<Attempt>,
    /// The verified certificate, when one was used.
    pub certificate: Option<Certificate>,
}

/// Tries to prove `q(G) <= n + 2` for a triangulation, cheapest
/// construction first.
pub fn certify_upper(g: &Graph) -> Result<UpperReport> {
    let n = g.n();
    if n < 6 {
        return Err(Error::Precondition(format!("needs n >= 6, got {n}")));
    }
    if !is_maximal_planar(g) {
        return Err(Error::NotMaximalPlanar);
    }
    let profile = g.degree_profile();
    let mut report = UpperReport {
        n,
        delta_max: profile.delta_max,
        delta_second: profile.delta_second,
        status: UpperStatus::Uncertified,
        lemma_tag: None,
        bound: n + 2,
        attempts: Vec::new(),
        certificate: None,
    };
    let (regime, order) = if profile.delta_max + 3 <= n {
        report.status = UpperStatus::Certified;
        report.lemma_tag = Some(Construction::SparseDegree);
        return Ok(report);
    } else if profile.delta_max == n - 2 {
        (
            Regime::NearDominating,
            [Construction::NearDominatingFlat, Construction::NearDominatingBand, Construction::NearDominatingTwoHub],
        )
    } else {
        (
            Regime::Dominating,
            [Construction::DominatingFlat, Construction::DominatingBand, Construction::DominatingTwoHub],
        )
    };
    let class = classify(g, regime)?;
    for construction in order {
        let cert = match build_vector(g, construction, &class) {
            Ok(c) => c,
            Err(Error::HypothesisUnmet { detail, .. }) => {
                report.attempts.push(Attempt { construction, skipped: Some(detail), verdict: None });
                continue;
            }
            Err(e) => return Err(e),
        };
        let verdict = verify_certificate(g, &cert)?;
        let pass = verdict.pass;
        report.attempts.push(Attempt { construction, skipped: None, verdict: Some(verdict) });
        report.lemma_tag = Some(construction);
        report.status = if pass { UpperStatus::Certified } else { UpperStatus::Fail };
        report.certificate = Some(cert);
        return Ok(report);
    }
    Ok(report)
}
