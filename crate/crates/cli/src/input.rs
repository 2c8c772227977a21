//! Graph arguments: a named builtin or a path to an edge-list file.

use anyhow::{bail, Context, Result};
use qplanar_core::certificates::Fixture;
use qplanar_core::graph::build_h;
use qplanar_core::Graph;

pub const BUILTINS: &str = "kN, pN, cN, hN, icosahedron, octahedron, near_wheel:N[:SUNK], two_hub:N:GAP[:sunk]";

pub fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(g) = builtin(arg)? {
        return Ok(g);
    }
    let text = std::fs::read_to_string(arg)
        .with_context(|| format!("`{arg}` is neither a builtin ({BUILTINS}) nor a readable file"))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {arg}"))
}

fn number(s: &str, what: &str) -> Result<usize> {
    s.parse().with_context(|| format!("invalid {what} `{s}`"))
}

fn builtin(arg: &str) -> Result<Option<Graph>> {
    let parts: Vec<&str> = arg.split(':').collect();
    let g = match parts[..] {
        ["icosahedron"] => icosahedron(),
        ["octahedron"] => Graph::from_edges(
            6,
            &(0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
                .collect::<Vec<_>>(),
        )?,
        ["near_wheel", n] => Fixture::NearWheel { sunk: 1 }.build(number(n, "order")?)?,
        ["near_wheel", n, s] => Fixture::NearWheel { sunk: number(s, "sunk count")? }.build(number(n, "order")?)?,
        ["two_hub", n, gap] => Fixture::TwoHub { gap: number(gap, "gap")?, sunk: false }.build(number(n, "order")?)?,
        ["two_hub", n, gap, "sunk"] => {
            Fixture::TwoHub { gap: number(gap, "gap")?, sunk: true }.build(number(n, "order")?)?
        }
        [name] if name.len() > 1 && name[1..].bytes().all(|b| b.is_ascii_digit()) => {
            let n: usize = number(&name[1..], "order")?;
            match &name[..1] {
                "k" => Graph::complete(n)?,
                "p" => Graph::path(n)?,
                "c" => Graph::cycle(n)?,
                "h" => build_h(n)?,
                _ => return Ok(None),
            }
        }
        [name, ..] if name == "near_wheel" || name == "two_hub" => {
            bail!("malformed builtin `{arg}`; expected one of {BUILTINS}")
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// Top vertex 0, upper ring 1..=5, lower ring 6..=10, bottom vertex 11.
fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11), (up, low), (up_next, low)]);
    }
    Graph::from_edges(12, &edges).expect("icosahedron edges are valid")
}
