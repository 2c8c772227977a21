//! The `planar_code` binary format: a `>>planar_code<<` header, then per
//! graph the order `n` followed by, for each vertex, its 1-based neighbours
//! in rotation order and a terminating `0`. One byte per value (`n < 256`).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::RotationEmbedding;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Parses every record of a `planar_code` byte stream.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<(Graph, RotationEmbedding)>> {
    if !bytes.starts_with(HEADER) {
        let at = bytes.iter().zip(HEADER).take_while(|(a, b)| a == b).count();
        return Err(Error::PlanarCode { offset: at, detail: "missing >>planar_code<< header".into() });
    }
    let mut pos = HEADER.len();
    let mut out = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(Error::PlanarCode { offset: start, detail: "graph of order 0".into() });
        }
        let mut rotation = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let &b = bytes
                    .get(pos)
                    .ok_or_else(|| Error::PlanarCode { offset: pos, detail: "truncated record".into() })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let w = b as usize;
                if w > n {
                    return Err(Error::PlanarCode {
                        offset: pos - 1,
                        detail: format!("neighbour {w} exceeds order {n}"),
                    });
                }
                list.push(w - 1);
            }
            rotation.push(list);
        }
        let emb = RotationEmbedding::from_rotation(rotation)
            .map_err(|e| Error::PlanarCode { offset: start, detail: e.to_string() })?;
        let g = emb.graph().map_err(|e| Error::PlanarCode { offset: start, detail: e.to_string() })?;
        out.push((g, emb));
    }
    Ok(out)
}

/// Encodes embedded graphs, header included.
pub fn write_planar_code<'a>(items: impl IntoIterator<Item = &'a RotationEmbedding>) -> Result<Vec<u8>> {
    let mut out = HEADER.to_vec();
    for emb in items {
        let n = emb.rotations().len();
        if n == 0 || n >= 256 {
            return Err(Error::InvalidSize { kind: "planar_code", detail: format!("order {n} not in 1..256") });
        }
        out.push(n as u8);
        for list in emb.rotations() {
            out.extend(list.iter().map(|&w| (w + 1) as u8));
            out.push(0);
        }
    }
    Ok(out)
}
