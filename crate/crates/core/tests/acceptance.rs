//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances are pinned here and nowhere else.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use qplanar_core::certificates::{
    certify_upper, collatz_wielandt_max, verify_certificate, Certificate, Construction, Fixture, UpperStatus,
};
use qplanar_core::enumeration::{canonical_form, extremal_search, gen_triangulations, read_planar_code, Source};
use qplanar_core::graph::build_h;
use qplanar_core::planarity::is_planar;
use qplanar_core::rewiring::{apply_swap, build_config, detect_config, is_h, verify_increase, Config};
use qplanar_core::spectral::{bound_report, h_identities, q_max, DEFAULT_MAX_ITER, DEFAULT_TOL};
use qplanar_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDENTITY_TOL: f64 = 1e-8;
const SANDWICH_TOL: f64 = 1e-8;
const SOUNDNESS_TOL: f64 = 1e-8;
const SWAP_MIN_GAP: f64 = 1e-6;
const SWAP_IDENTITY_TOL: f64 = 1e-8;
const MONOTONE_MIN_GAP: f64 = 1e-9;
const SEED: u64 = 0x9e37_79b9;

type Outcome = Result<String, String>;
type Criterion = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

fn q(g: &Graph) -> Result<f64, String> {
    q_max(g, DEFAULT_TOL, DEFAULT_MAX_ITER).map(|r| r.q).map_err(|e| e.to_string())
}

fn h_sweep() -> Outcome {
    for n in 5..=200 {
        let h = build_h(n).map_err(|e| e.to_string())?;
        let res = q_max(&h, DEFAULT_TOL, DEFAULT_MAX_ITER).map_err(|e| e.to_string())?;
        let check = h_identities(n, &res, IDENTITY_TOL).map_err(|e| e.to_string())?;
        if !check.passed() {
            return Err(format!("n = {n}: {:?}", check.failures));
        }
    }
    Ok("n = 5..200, identities within 1e-8".into())
}

fn sandwich() -> Outcome {
    let mut count = 0;
    for n in 5..=9 {
        for g in gen_triangulations(n).map_err(|e| e.to_string())? {
            let r = bound_report(&g, DEFAULT_TOL).map_err(|e| e.to_string())?;
            if !r.is_consistent(SANDWICH_TOL) {
                return Err(format!("bounds violated: {r:?}"));
            }
            if n >= 6 && r.planar_bound.is_none() {
                return Err(format!("planar bound missing at n = {n}"));
            }
            let dense = common::dense_q(&g);
            if (dense - r.q).abs() > SANDWICH_TOL {
                return Err(format!("q {} differs from dense {dense}", r.q));
            }
            count += 1;
        }
    }
    if count != 72 {
        return Err(format!("pool has {count} graphs, expected 72"));
    }
    Ok(format!("{count} graphs, n = 5..9"))
}

fn search() -> Outcome {
    let mut notes = Vec::new();
    for n in 4..=10 {
        let r = extremal_search(n, Source::Generated).map_err(|e| e.to_string())?;
        if !r.is_h || r.maximizers.len() != 1 {
            return Err(format!("n = {n}: is_H = {}, {} maximizers", r.is_h, r.maximizers.len()));
        }
        if let Some(second) = r.runner_up_q {
            notes.push(format!("n={n} gap {:.3e}", r.best_q - second));
        }
    }
    Ok(format!("best is H for n = 4..10 ({})", notes.join(", ")))
}

fn soundness(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut passes, mut fails) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=30);
        let p = rng.gen_range(0.0..0.5);
        let g = common::random_connected(rng, n, p);
        let x: Vec<BigRational> = (0..n)
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(1..1000)), BigInt::from(rng.gen_range(1..50))))
            .collect();
        let cw = collatz_wielandt_max(&g, &x).map_err(|e| e.to_string())?;
        // r spread on both sides of the smallest passing value
        let factor = BigRational::new(BigInt::from(rng.gen_range(900..=1100)), BigInt::from(1000));
        let r = cw * factor;
        let v =
            verify_certificate(&g, &Certificate::new(x, r.clone(), Construction::Custom)).map_err(|e| e.to_string())?;
        if v.pass {
            passes += 1;
            let qg = q(&g)?;
            if qg > r.to_f64().unwrap() + SOUNDNESS_TOL {
                return Err(format!("PASS at r = {r} but q = {qg}"));
            }
        } else {
            fails += 1;
        }
    }
    if passes == 0 || fails == 0 {
        return Err(format!("degenerate sample: {passes} passes, {fails} fails"));
    }
    Ok(format!("1000 graphs, {passes} passing certificates, 0 violations"))
}

fn fixtures() -> Outcome {
    let cases = [
        ("near_wheel(500, sunk 1)", Fixture::NearWheel { sunk: 1 }),
        ("near_wheel(500, sunk 0)", Fixture::NearWheel { sunk: 0 }),
        ("two_hub(500, gap 3)", Fixture::TwoHub { gap: 3, sunk: false }),
        ("two_hub(500, gap 9)", Fixture::TwoHub { gap: 9, sunk: false }),
        ("two_hub(500, gap 60)", Fixture::TwoHub { gap: 60, sunk: false }),
        ("two_hub(500, gap 9, sunk)", Fixture::TwoHub { gap: 9, sunk: true }),
        ("near_wheel(500, sunk 2)", Fixture::NearWheel { sunk: 2 }),
    ];
    let mut done = Vec::new();
    for (name, fixture) in cases {
        let start = Instant::now();
        let g = fixture.build(500).map_err(|e| format!("{name}: {e}"))?;
        let report = certify_upper(&g).map_err(|e| format!("{name}: {e}"))?;
        if report.status != UpperStatus::Certified {
            return Err(format!("{name}: {:?}", report.status));
        }
        let tag = report.lemma_tag.expect("certified has a tag");
        if tag != Construction::SparseDegree {
            let attempt = report.attempts.iter().find(|a| a.construction == tag).and_then(|a| a.verdict.as_ref());
            if !attempt.is_some_and(|v| v.pass) {
                return Err(format!("{name}: no exact PASS recorded"));
            }
        } else if g.degree_profile().delta_max + 3 > g.n() {
            return Err(format!("{name}: sparse tag with Δ = {}", g.degree_profile().delta_max));
        }
        if start.elapsed().as_secs() >= 60 {
            return Err(format!("{name}: took {:?}", start.elapsed()));
        }
        done.push(format!("{name} {}", tag.tag()));
    }
    let h = build_h(500).map_err(|e| e.to_string())?;
    let report = certify_upper(&h).map_err(|e| e.to_string())?;
    if report.status != UpperStatus::Uncertified {
        return Err(format!("H500 reported {:?}", report.status));
    }
    Ok(format!("{}; H500 uncertified", done.join(", ")))
}

fn swaps() -> Outcome {
    let mut worst_gap = f64::INFINITY;
    let mut worst_identity: f64 = 0.0;
    for n in [15, 20, 40] {
        let k = n / 2;
        for (config, k, l) in
            [(Config::D1, k, None), (Config::D2, k, None), (Config::D3, k, None), (Config::D4, 5, Some(k + 2))]
        {
            let g = build_config(config, n, k, l).map_err(|e| e.to_string())?;
            let plan =
                detect_config(&g).map_err(|e| e.to_string())?.ok_or(format!("{config:?} n = {n} not detected"))?;
            if plan.config != config {
                return Err(format!("{config:?} n = {n} detected as {:?}", plan.config));
            }
            let f = apply_swap(&g, &plan).map_err(|e| e.to_string())?;
            let check = verify_increase(&g, &f, Some(&plan)).map_err(|e| e.to_string())?;
            if !check.passed(SWAP_IDENTITY_TOL, SWAP_MIN_GAP) {
                return Err(format!("{config:?} n = {n}: {check:?}"));
            }
            worst_gap = worst_gap.min(check.gap);
            worst_identity = worst_identity.max(check.identity_error);
            if config == Config::D1 && !is_h(&f).map_err(|e| e.to_string())? {
                return Err(format!("D1 n = {n}: result is not H"));
            }
        }
    }
    Ok(format!("12 swaps, min gap {worst_gap:.3e}, max identity error {worst_identity:.1e}"))
}

fn census() -> Outcome {
    let mut got = Vec::new();
    for (n, want) in [(4, 1), (5, 1), (6, 2), (7, 5)] {
        let oracle = common::brute_force_triangulations(n, |g| is_planar(g).is_some()).len();
        let generated = gen_triangulations(n).map_err(|e| e.to_string())?.len();
        if oracle != want || generated != want {
            return Err(format!("n = {n}: oracle {oracle}, generated {generated}, expected {want}"));
        }
        got.push(generated);
    }
    for (n, want) in [(8, 14), (9, 50), (10, 233)] {
        let path = format!("{}/tests/data/tri_{n}.pc", env!("CARGO_MANIFEST_DIR"));
        let bytes = std::fs::read(&path).map_err(|e| format!("{path}: {e}"))?;
        let ext: BTreeSet<Vec<u8>> = read_planar_code(&bytes)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|(g, _)| canonical_form(g).unwrap())
            .collect();
        let gen: BTreeSet<Vec<u8>> =
            gen_triangulations(n).map_err(|e| e.to_string())?.iter().map(|g| canonical_form(g).unwrap()).collect();
        if ext.len() != want || gen != ext {
            return Err(format!("n = {n}: external {}, generated {}, expected {want}", ext.len(), gen.len()));
        }
        got.push(gen.len());
    }
    Ok(format!("counts {got:?} for n = 4..10"))
}

fn monotonicity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut min_gap = f64::INFINITY;
    let mut pairs = 0;
    while pairs < 500 {
        let n = rng.gen_range(3..=30);
        let p = rng.gen_range(0.0..0.4);
        let g = common::random_connected(rng, n, p);
        let missing: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if missing.is_empty() {
            continue;
        }
        let (u, v) = missing[rng.gen_range(0..missing.len())];
        let gap = q(&g.with_edge(u, v).map_err(|e| e.to_string())?)? - q(&g)?;
        if gap <= MONOTONE_MIN_GAP {
            return Err(format!("gap {gap:e} adding ({u}, {v}) to {:?}", g.edges().collect::<Vec<_>>()));
        }
        min_gap = min_gap.min(gap);
        pairs += 1;
    }
    Ok(format!("500 pairs, min gap {min_gap:.3e}"))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 H identity sweep", Box::new(|_| h_sweep())),
        ("2 bound sandwich", Box::new(|_| sandwich())),
        ("3 extremal search", Box::new(|_| search())),
        ("4 certificate soundness", Box::new(soundness)),
        ("5 fixture certificates", Box::new(|_| fixtures())),
        ("6 swap suite", Box::new(|_| swaps())),
        ("7 enumeration census", Box::new(|_| census())),
        ("8 edge monotonicity", Box::new(monotonicity)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut rng);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
