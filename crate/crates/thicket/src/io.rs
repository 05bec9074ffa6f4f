//! File formats: the `.graph` text format, model and weights JSON, and
//! PACE-style tree decomposition files. All formats are documented in
//! docs/formats.md.

use crate::graph::{Graph, VertexSet};
use crate::recognize::ThickModel;
use crate::treewidth::RawTreeDecomposition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {0}: {1}")]
    Bad(usize, String),
    #[error("{0}")]
    Invalid(String),
}

/// `.graph`: '#' comment lines, then `n m`, then exactly m lines `u v`
/// with 0 <= u < v < n. Duplicate edges are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines
        .next()
        .ok_or_else(|| FormatError::Invalid("empty graph file".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Bad(ln, "expected vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::Bad(ln, "expected edge count".into()))?;
    if it.next().is_some() {
        return Err(FormatError::Bad(ln, "trailing tokens after `n m`".into()));
    }
    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| FormatError::Invalid(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::Bad(ln, "expected edge endpoint".into()))?;
        let v: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::Bad(ln, "expected edge endpoint".into()))?;
        if it.next().is_some() {
            return Err(FormatError::Bad(ln, "trailing tokens after edge".into()));
        }
        if u >= v {
            return Err(FormatError::Bad(ln, format!("edge must satisfy u < v, got {u} {v}")));
        }
        if v as usize >= n {
            return Err(FormatError::Bad(ln, format!("endpoint {v} out of range")));
        }
        if !seen.insert((u, v)) {
            return Err(FormatError::Bad(ln, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(FormatError::Bad(ln, "extra data after edge list".into()));
    }
    Graph::from_edge_list(n, &pairs).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Model JSON, schema `{"thin_n": int, "thin_edges": [[a,b],...], "phi": [...]}`.
pub fn model_to_json(m: &ThickModel) -> String {
    serde_json::to_string(m).expect("serializable")
}

pub fn model_from_json(text: &str) -> Result<ThickModel, FormatError> {
    let m: ThickModel =
        serde_json::from_str(text).map_err(|e| FormatError::Invalid(e.to_string()))?;
    // re-canonicalize the edge order
    Ok(ThickModel::new(m.thin_n, m.thin_edges, m.phi))
}

/// Exact rational as `p/q` (plain integer when q = 1).
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<BigRational, FormatError> {
    let parse_int =
        |t: &str| BigInt::from_str(t.trim()).map_err(|e| FormatError::Invalid(e.to_string()));
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den == BigInt::from(0) {
                return Err(FormatError::Invalid("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Weights JSON: `{"weights": ["p/q", ...]}` indexed by vertex.
pub fn weights_from_json(text: &str, n: usize) -> Result<Vec<BigRational>, FormatError> {
    #[derive(serde::Deserialize)]
    struct W {
        weights: Vec<String>,
    }
    let w: W = serde_json::from_str(text).map_err(|e| FormatError::Invalid(e.to_string()))?;
    if w.weights.len() != n {
        return Err(FormatError::Invalid(format!(
            "expected {n} weights, got {}",
            w.weights.len()
        )));
    }
    let mut out = Vec::with_capacity(n);
    for s in &w.weights {
        let r = rational_from_str(s)?;
        if r < BigRational::from_integer(0.into()) {
            return Err(FormatError::Invalid(format!("negative weight {s}")));
        }
        out.push(r);
    }
    Ok(out)
}

pub fn weights_to_json(weights: &[BigRational]) -> String {
    let strings: Vec<String> = weights.iter().map(rational_to_string).collect();
    serde_json::to_string(&serde_json::json!({ "weights": strings })).unwrap()
}

/// PACE-style tree decomposition text: `c` comment lines, a header
/// `s td <num_bags> <width_plus_one> <n>`, bag lines `b <id> <v...>`
/// (ids and vertices 1-indexed), then one `<i> <j>` tree edge per line.
pub fn parse_td(text: &str) -> Result<(RawTreeDecomposition, usize), FormatError> {
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    let mut header: Option<(usize, usize, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "s" {
            if header.is_some() {
                return Err(FormatError::Bad(ln, "duplicate header".into()));
            }
            if toks.len() != 5 || toks[1] != "td" {
                return Err(FormatError::Bad(ln, "expected `s td <bags> <width+1> <n>`".into()));
            }
            let nb: usize = toks[2]
                .parse()
                .map_err(|_| FormatError::Bad(ln, "bad bag count".into()))?;
            let w: usize = toks[3]
                .parse()
                .map_err(|_| FormatError::Bad(ln, "bad width".into()))?;
            let n: usize = toks[4]
                .parse()
                .map_err(|_| FormatError::Bad(ln, "bad vertex count".into()))?;
            header = Some((nb, w, n));
            bags = vec![None; nb];
        } else if toks[0] == "b" {
            let (nb, _, n) = header.ok_or_else(|| FormatError::Bad(ln, "bag before header".into()))?;
            let id: usize = toks
                .get(1)
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| FormatError::Bad(ln, "bad bag id".into()))?;
            if id == 0 || id > nb {
                return Err(FormatError::Bad(ln, format!("bag id {id} out of range")));
            }
            let mut verts = Vec::new();
            for t in &toks[2..] {
                let v: usize = t
                    .parse()
                    .map_err(|_| FormatError::Bad(ln, format!("bad vertex `{t}`")))?;
                if v == 0 || v > n {
                    return Err(FormatError::Bad(ln, format!("vertex {v} out of range")));
                }
                verts.push((v - 1) as u32);
            }
            if bags[id - 1].is_some() {
                return Err(FormatError::Bad(ln, format!("duplicate bag {id}")));
            }
            bags[id - 1] = Some(VertexSet::from_unsorted(verts));
        } else {
            let (nb, _, _) = header.ok_or_else(|| FormatError::Bad(ln, "edge before header".into()))?;
            if toks.len() != 2 {
                return Err(FormatError::Bad(ln, "expected `<i> <j>` tree edge".into()));
            }
            let a: usize = toks[0]
                .parse()
                .map_err(|_| FormatError::Bad(ln, "bad edge endpoint".into()))?;
            let b: usize = toks[1]
                .parse()
                .map_err(|_| FormatError::Bad(ln, "bad edge endpoint".into()))?;
            if a == 0 || a > nb || b == 0 || b > nb {
                return Err(FormatError::Bad(ln, "tree edge endpoint out of range".into()));
            }
            edges.push((a - 1, b - 1));
        }
    }
    let (nb, w, n) = header.ok_or_else(|| FormatError::Invalid("missing `s td` header".into()))?;
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| FormatError::Invalid(format!("bag {} missing", i + 1))))
        .collect::<Result<_, _>>()?;
    let raw = RawTreeDecomposition { bags, edges };
    if raw.width() + 1 != w {
        return Err(FormatError::Invalid(format!(
            "header claims width+1 = {w}, bags give {}",
            raw.width() + 1
        )));
    }
    let _ = nb;
    Ok((raw, n))
}

pub fn write_td(raw: &RawTreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", raw.bags.len(), raw.width() + 1, n);
    for (i, b) in raw.bags.iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in b.iter() {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    for &(a, b) in &raw.edges {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}
