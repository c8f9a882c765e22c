//! Text formats. Vertex ids are 1-based in every document.
//!
//! Graph (edge list):
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines)
//! ```
//!
//! Weighted tree:
//!
//! ```text
//! # comment
//! n
//! id parent weight   (n lines, parent 0 marks the root)
//! ```
//!
//! Vertex weights for `solve-exact --weights`: `n` numbers separated by
//! whitespace, in vertex order, `#` comments allowed.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::tree::WeightedTree;

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn fields<'a, const N: usize>(line: usize, text: &'a str, what: &str) -> Result<[&'a str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts
        .try_into()
        .map_err(|_| Error::parse(line, format!("expected {what}, got {text:?}")))
}

fn number<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("{what} {s:?} is not a valid number")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let [n, m] = fields::<2>(hline, header, "header `n m`")?;
    let n: usize = number(hline, n, "vertex count")?;
    let m: usize = number(hline, m, "edge count")?;

    let mut g_edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        if g_edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = fields::<2>(line, text, "edge `u v`")?;
        let u: usize = number(line, u, "endpoint")?;
        let v: usize = number(line, v, "endpoint")?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(Error::parse(line, format!("endpoint {x} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        g_edges.push((u - 1, v - 1));
    }
    if g_edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges, found {}", g_edges.len()),
        ));
    }
    Graph::from_edges(n, g_edges)
}

pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_tree(text: &str) -> Result<WeightedTree> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing vertex count"))?;
    let [n] = fields::<1>(hline, header, "vertex count")?;
    let n: usize = number(hline, n, "vertex count")?;
    if n == 0 {
        return Err(Error::parse(hline, "a tree needs at least one vertex"));
    }

    // per vertex: (parent, weight, line)
    let mut rows: Vec<Option<(usize, f64, usize)>> = vec![None; n];
    let mut root: Option<(Vertex, usize)> = None;
    let mut count = 0;
    let mut last_line = hline;
    for (line, text) in lines {
        last_line = line;
        count += 1;
        if count > n {
            return Err(Error::parse(line, format!("more than the declared {n} vertices")));
        }
        let [id, parent, weight] = fields::<3>(line, text, "`id parent weight`")?;
        let id: usize = number(line, id, "vertex id")?;
        let parent: usize = number(line, parent, "parent id")?;
        let weight: f64 = number(line, weight, "weight")?;
        if id == 0 || id > n {
            return Err(Error::parse(line, format!("vertex id {id} outside 1..={n}")));
        }
        if rows[id - 1].is_some() {
            return Err(Error::parse(line, format!("vertex {id} listed twice")));
        }
        if parent > n {
            return Err(Error::parse(line, format!("parent {parent} does not resolve to a vertex")));
        }
        if parent == id {
            return Err(Error::parse(line, format!("vertex {id} is its own parent")));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::parse(line, format!("weight {weight} is not positive")));
        }
        if parent == 0 {
            if let Some((r, _)) = root {
                return Err(Error::parse(
                    line,
                    format!("second root {id} (vertex {} is already the root)", r + 1),
                ));
            }
            root = Some((id - 1, line));
        }
        rows[id - 1] = Some((parent, weight, line));
    }
    if count < n {
        return Err(Error::parse(last_line, format!("declared {n} vertices, found {count}")));
    }
    let rows: Vec<(usize, f64, usize)> = rows.into_iter().map(|r| r.unwrap()).collect();
    let (root, _) = root.ok_or_else(|| Error::parse(hline, "no root (no vertex has parent 0)"))?;

    // every parent chain must reach the root
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on current walk, 2 reaches root
    state[root] = 2;
    for start in 0..n {
        let mut walk = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = rows[v].0 - 1;
        }
        if state[v] == 1 {
            return Err(Error::parse(rows[v].2, format!("parent chain of vertex {} cycles", v + 1)));
        }
        for w in walk {
            state[w] = 2;
        }
    }

    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .filter(|&v| v != root)
        .map(|v| (v, rows[v].0 - 1))
        .collect();
    let weights: Vec<f64> = rows.iter().map(|r| r.1).collect();
    WeightedTree::from_edges(n, &edges, root, &weights)
}

/// Tree document in the input labels of `t`.
pub fn render_tree(t: &WeightedTree) -> String {
    let n = t.vertex_count();
    let mut lines: Vec<(Vertex, usize, f64)> = (0..n)
        .map(|v| {
            let parent = if v == t.root() { 0 } else { t.label(t.father(v)) + 1 };
            (t.label(v) + 1, parent, t.weight(v))
        })
        .collect();
    lines.sort_by_key(|l| l.0);
    let mut out = format!("{n}\n");
    for (id, parent, w) in lines {
        writeln!(out, "{id} {parent} {w}").unwrap();
    }
    out
}

pub fn parse_weights(text: &str, n: usize) -> Result<Vec<f64>> {
    let mut weights = Vec::with_capacity(n);
    let mut last_line = 1;
    for (line, text) in content_lines(text) {
        last_line = line;
        for tok in text.split_whitespace() {
            let w: f64 = number(line, tok, "weight")?;
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::parse(line, format!("weight {tok} is not positive")));
            }
            weights.push(w);
        }
    }
    if weights.len() != n {
        return Err(Error::parse(
            last_line,
            format!("expected {n} weights, got {}", weights.len()),
        ));
    }
    Ok(weights)
}

/// Comma-separated 1-based ids, e.g. `"1,4,7"`. Returns 0-based ids.
pub fn parse_id_list(text: &str, n: usize) -> Result<Vec<Vertex>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let id: usize = s
                .parse()
                .map_err(|_| Error::input(format!("vertex id {s:?} is not a number")))?;
            if id == 0 || id > n {
                return Err(Error::input(format!("vertex id {id} outside 1..={n}")));
            }
            Ok(id - 1)
        })
        .collect()
}

/// `{1, 4, 7}` from 0-based ids.
pub fn format_id_set(ids: &[Vertex]) -> String {
    let inner: Vec<String> = ids.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}
