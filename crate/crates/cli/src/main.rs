//! `qplanar`: spectral radius tools for planar triangulations.
//!
//! Exit codes: 0 on success, 2 when a check fails, 1 on usage or input
//! errors.

mod input;
mod output;

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qplanar_core::certificates::{certify_upper, UpperStatus};
use qplanar_core::enumeration::{extremal_search, gen_triangulations, read_planar_code, Source};
use qplanar_core::graph::build_h;
use qplanar_core::rewiring::{apply_swap, build_config, detect_config, is_h, verify_increase, Config};
use qplanar_core::spectral::{bound_report, h_identities, q_max, DEFAULT_MAX_ITER};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::load_graph;
use crate::output::{sig, to_json};

#[derive(Parser, Debug)]
#[command(name = "qplanar", version, about = "Signless Laplacian spectral radius of planar triangulations")]
struct Cli {
    /// Residual tolerance for eigenvalue computations.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized steps; equal seeds give identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for generation and search.
    #[arg(long, global = true, env = "QPLANAR_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest eigenvalue of Q = D + A with its Perron vector.
    Spectral { graph: String },
    /// q(G) against the lower and upper degree bounds.
    Bound { graph: String },
    /// Exact-arithmetic proof of q(G) <= n + 2 for a triangulation.
    Certify { graph: String },
    /// Builds configuration D1..D4, applies its swap and checks that q rises.
    /// With a nonzero --seed the vertices are shuffled before detection.
    SwapDemo { config: String, n: usize, k: usize, l: Option<usize> },
    /// Every triangulation on n vertices, one per isomorphism class.
    Gen { n: usize },
    /// The triangulation on n vertices with the largest q.
    Search {
        n: usize,
        /// Read candidates from a planar_code file instead of generating them.
        #[arg(long)]
        file: Option<String>,
    },
    /// Checks q(H) > n + 2 and the Perron identities of K2 + P(n-2).
    VerifyH { n_min: usize, n_max: usize },
}

/// A rendered report and whether its checks passed.
struct Report {
    body: String,
    pass: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.body);
            if !report.body.ends_with('\n') {
                println!();
            }
            ExitCode::from(if report.pass { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Report> {
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        bail!("--tol must be positive, got {}", cli.tol);
    }
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Spectral { graph } => spectral(cli, graph),
        Command::Bound { graph } => bound(cli, graph),
        Command::Certify { graph } => certify(cli, graph),
        Command::SwapDemo { config, n, k, l } => swap_demo(cli, config, *n, *k, *l),
        Command::Gen { n } => gen(cli, *n),
        Command::Search { n, file } => search(cli, *n, file.as_deref()),
        Command::VerifyH { n_min, n_max } => verify_h(cli, *n_min, *n_max),
    }
}

fn spectral(cli: &Cli, arg: &str) -> Result<Report> {
    let g = load_graph(arg)?;
    let r = q_max(&g, cli.tol, DEFAULT_MAX_ITER)?;
    let body = match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                n: usize,
                m: usize,
                #[serde(flatten)]
                result: &'a qplanar_core::SpectralResult,
            }
            to_json(&Out { n: g.n(), m: g.m(), result: &r })
        }
        Format::Csv => format!(
            "n,m,q,residual,iterations\n{},{},{},{},{}\n",
            g.n(),
            g.m(),
            sig(r.q),
            sig(r.residual),
            r.iterations
        ),
        Format::Text => {
            let perron: Vec<String> = r.perron.iter().map(|&x| sig(x)).collect();
            format!(
                "n {}\nm {}\nq {}\nresidual {}\niterations {}\nperron {}\n",
                g.n(),
                g.m(),
                sig(r.q),
                sig(r.residual),
                r.iterations,
                perron.join(" ")
            )
        }
    };
    Ok(Report::ok(body))
}

fn opt(v: Option<f64>) -> String {
    v.map(sig).unwrap_or_default()
}

fn bound(cli: &Cli, arg: &str) -> Result<Report> {
    let g = load_graph(arg)?;
    let r = bound_report(&g, cli.tol)?;
    let pass = r.is_consistent(cli.tol);
    let tag = r.case_tag.map(|t| t.label()).unwrap_or_default();
    let body = match cli.format {
        Format::Json => to_json(&r),
        Format::Csv => format!(
            "n,m,q,residual,lower_delta,merris,planar_bound,case_tag\n{},{},{},{},{},{},{},{}\n",
            r.n,
            r.m,
            sig(r.q),
            sig(r.residual),
            sig(r.lower_delta),
            sig(r.merris),
            opt(r.planar_bound),
            tag
        ),
        Format::Text => {
            let mut s = format!(
                "n {}\nm {}\nq {}\nresidual {}\nlower_delta {}\nmerris {}\n",
                r.n,
                r.m,
                sig(r.q),
                sig(r.residual),
                sig(r.lower_delta),
                sig(r.merris)
            );
            if let (Some(b), Some(d)) = (r.planar_bound, r.planar_degree_max) {
                let _ = writeln!(s, "planar_bound {}\nplanar_degree_max {}\ncase_tag {tag}", sig(b), sig(d));
            }
            let _ = writeln!(s, "consistent {pass}");
            s
        }
    };
    Ok(Report { body, pass })
}

fn certify(cli: &Cli, arg: &str) -> Result<Report> {
    let g = load_graph(arg)?;
    let r = certify_upper(&g)?;
    let status = match r.status {
        UpperStatus::Certified => "certified",
        UpperStatus::Fail => "fail",
        UpperStatus::Uncertified => "uncertified",
    };
    let tag = r.lemma_tag.map(|t| t.tag()).unwrap_or("none");
    let body = match cli.format {
        Format::Json => to_json(&r),
        Format::Csv => {
            let mut s = String::from("n,delta_max,delta_second,status,construction,bound\n");
            let _ = writeln!(s, "{},{},{},{status},{tag},{}", r.n, r.delta_max, r.delta_second, r.bound);
            s
        }
        Format::Text => {
            let mut s = format!(
                "n {}\ndelta_max {}\ndelta_second {}\nstatus {status}\nconstruction {tag}\nbound {}\n",
                r.n, r.delta_max, r.delta_second, r.bound
            );
            for a in &r.attempts {
                match (&a.verdict, &a.skipped) {
                    (Some(v), _) => {
                        let verdict = if v.pass { "PASS" } else { "FAIL" };
                        let _ = writeln!(
                            s,
                            "attempt {} {verdict} worst_slack {} at {}",
                            a.construction.tag(),
                            v.worst_slack,
                            v.worst_index
                        );
                    }
                    (None, Some(why)) => {
                        let _ = writeln!(s, "attempt {} skipped: {why}", a.construction.tag());
                    }
                    (None, None) => {}
                }
            }
            s
        }
    };
    Ok(Report { body, pass: r.status != UpperStatus::Fail })
}

fn swap_demo(cli: &Cli, config: &str, n: usize, k: usize, l: Option<usize>) -> Result<Report> {
    let Some(config) = Config::parse(config) else {
        bail!("unknown configuration `{config}`; expected D1, D2, D3 or D4");
    };
    let mut g = build_config(config, n, k, l)?;
    if cli.seed != 0 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(cli.seed));
        g = g.relabel(&perm)?;
    }
    let plan = detect_config(&g)?.context("configuration not detected")?;
    let f = apply_swap(&g, &plan)?;
    let check = verify_increase(&g, &f, Some(&plan))?;
    let result_is_h = is_h(&f)?;
    let pass = check.passed(1e-8, 10.0 * cli.tol) && (plan.config != Config::D1 || result_is_h);

    #[derive(Serialize)]
    struct Out<'a> {
        plan: &'a qplanar_core::SwapPlan,
        check: &'a qplanar_core::rewiring::IncreaseCheck,
        result_is_h: bool,
        pass: bool,
    }
    let body = match cli.format {
        Format::Json => to_json(&Out { plan: &plan, check: &check, result_is_h, pass }),
        Format::Csv => format!(
            "config,n,remove,add,q_before,q_after,gap,identity_error,result_is_h,pass\n{:?},{n},{}-{},{}-{},{},{},{},{},{result_is_h},{pass}\n",
            plan.config,
            plan.remove.0,
            plan.remove.1,
            plan.add.0,
            plan.add.1,
            sig(check.q_before),
            sig(check.q_after),
            sig(check.gap),
            sig(check.identity_error)
        ),
        Format::Text => {
            let mut s = format!(
                "config {:?}\nremove {} {}\nadd {} {}\nq_before {}\nq_after {}\ngap {}\nrayleigh_difference {}\npredicted_difference {}\n",
                plan.config,
                plan.remove.0,
                plan.remove.1,
                plan.add.0,
                plan.add.1,
                sig(check.q_before),
                sig(check.q_after),
                sig(check.gap),
                sig(check.rayleigh_difference),
                sig(check.predicted_difference)
            );
            for c in &check.signs {
                let _ = writeln!(s, "sign {}: {}", c.name, c.holds);
            }
            let _ = writeln!(s, "result_is_h {result_is_h}\npass {pass}");
            s
        }
    };
    Ok(Report { body, pass })
}

fn gen(cli: &Cli, n: usize) -> Result<Report> {
    let graphs = gen_triangulations(n)?;
    let edges: Vec<Vec<(usize, usize)>> = graphs.iter().map(|g| g.edges().collect()).collect();
    let body = match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                n: usize,
                count: usize,
                graphs: &'a [Vec<(usize, usize)>],
            }
            to_json(&Out { n, count: graphs.len(), graphs: &edges })
        }
        Format::Csv | Format::Text => {
            let mut s = if cli.format == Format::Csv { String::from("index,n,m,edges\n") } else { String::new() };
            for (i, es) in edges.iter().enumerate() {
                let list: Vec<String> = es.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                if cli.format == Format::Csv {
                    let _ = writeln!(s, "{i},{n},{},{}", es.len(), list.join(" "));
                } else {
                    let _ = writeln!(s, "{}", list.join(" "));
                }
            }
            s
        }
    };
    Ok(Report::ok(body))
}

fn search(cli: &Cli, n: usize, file: Option<&str>) -> Result<Report> {
    let source = match file {
        Some(path) => {
            let bytes = std::fs::read(path).with_context(|| format!("reading {path}"))?;
            let graphs = read_planar_code(&bytes).with_context(|| format!("parsing {path}"))?;
            Source::Graphs(graphs.into_iter().map(|(g, _)| g).collect())
        }
        None => Source::Generated,
    };
    let r = extremal_search(n, source)?;
    let body = match cli.format {
        Format::Json => to_json(&r),
        Format::Csv => r.to_csv(sig),
        Format::Text => format!(
            "n {}\ncount {}\nbest_q {}\nrunner_up_q {}\nmaximizers {}\nescalated {}\nis_H {}\n",
            r.n,
            r.count,
            sig(r.best_q),
            opt(r.runner_up_q),
            r.maximizers.len(),
            r.escalated,
            r.is_h
        ),
    };
    Ok(Report { body, pass: r.is_h })
}

fn verify_h(cli: &Cli, n_min: usize, n_max: usize) -> Result<Report> {
    if n_min < 5 || n_min > n_max {
        bail!("need 5 <= n_min <= n_max, got {n_min}..{n_max}");
    }
    #[derive(Serialize)]
    struct Row {
        n: usize,
        q: f64,
        above_n_plus_2: bool,
        identities: bool,
        failures: Vec<&'static str>,
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let res = q_max(&build_h(n)?, cli.tol, DEFAULT_MAX_ITER)?;
        // identities hold to 1e-8 or 100 tol, whichever is looser
        let check = h_identities(n, &res, (100.0 * cli.tol).max(1e-8))?;
        rows.push(Row {
            n,
            q: res.q,
            above_n_plus_2: res.q > (n + 2) as f64,
            identities: check.passed(),
            failures: check.failures,
        });
    }
    let pass = rows.iter().all(|r| r.above_n_plus_2 && r.identities);
    let body = match cli.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("n,q,q_gt_n_plus_2,identities\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.n,
                    sig(r.q),
                    r.above_n_plus_2,
                    if r.identities { "pass" } else { "fail" }
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let verdict = if r.identities { "pass" } else { "fail" };
                let _ = writeln!(s, "{} {} q>n+2:{} identities:{verdict}", r.n, sig(r.q), r.above_n_plus_2);
            }
            s
        }
    };
    Ok(Report { body, pass })
}
