//! Exhaustive solvers. Small inputs only; these are the reference answers
//! the tree DP and the bound experiments are checked against.

use std::cmp::Ordering;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::propagation::{closure, closure_trace, is_pds, TraceStep};
use crate::tree::WeightedTree;
use crate::tree_dp::Class;

pub const DEFAULT_CARDINALITY_CAP: usize = 24;
pub const DEFAULT_WEIGHT_CAP: usize = 20;

/// A power dominating set with its size, weight and propagation trace.
#[derive(Clone, Debug, PartialEq)]
pub struct PdsResult {
    pub set: VertexSet,
    pub cardinality: usize,
    /// Equals `cardinality` for unweighted searches.
    pub weight: f64,
    pub optimal: bool,
    pub certificate: Vec<TraceStep>,
}

impl PdsResult {
    fn certify(g: &Graph, set: VertexSet, weight: f64) -> Self {
        let certificate = closure_trace(g, &set, &VertexSet::empty(g.vertex_count()));
        debug_assert_eq!(
            certificate.iter().map(|s| s.observed.len()).sum::<usize>(),
            g.vertex_count()
        );
        PdsResult {
            cardinality: set.len(),
            set,
            weight,
            optimal: true,
            certificate,
        }
    }
}

/// Minimum-cardinality PDS, trying subsets by increasing size in
/// lexicographic order. Errors if `g` has more than
/// [`DEFAULT_CARDINALITY_CAP`] vertices.
pub fn min_pds(g: &Graph) -> Result<PdsResult> {
    min_pds_capped(g, DEFAULT_CARDINALITY_CAP)
}

pub fn min_pds_capped(g: &Graph, cap: usize) -> Result<PdsResult> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::Resource(format!(
            "exact solver cap is {cap} vertices, graph has {n}"
        )));
    }
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let set = VertexSet::from_ids(n, combo).expect("ids in range");
            if is_pds(g, &set) {
                return Ok(PdsResult::certify(g, set, size as f64));
            }
        }
    }
    unreachable!("the full vertex set is a PDS")
}

/// Compares candidate sets by weight, then size, then ascending member list.
fn better(a: (f64, &[Vertex]), b: (f64, &[Vertex])) -> bool {
    match a.0.partial_cmp(&b.0).expect("weights are finite") {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => (a.1.len(), a.1) < (b.1.len(), b.1),
    }
}

/// Minimum-weight PDS by enumerating every subset. Errors if `g` has more
/// than [`DEFAULT_WEIGHT_CAP`] vertices.
pub fn min_weight_pds(g: &Graph, weights: &[f64]) -> Result<PdsResult> {
    min_weight_pds_capped(g, weights, DEFAULT_WEIGHT_CAP)
}

pub fn min_weight_pds_capped(g: &Graph, weights: &[f64], cap: usize) -> Result<PdsResult> {
    let n = g.vertex_count();
    if n > cap.min(63) {
        return Err(Error::Resource(format!(
            "weighted exact solver cap is {} vertices, graph has {n}",
            cap.min(63)
        )));
    }
    if weights.len() != n {
        return Err(Error::input(format!("expected {n} weights, got {}", weights.len())));
    }
    if let Some((v, w)) = weights.iter().enumerate().find(|(_, &w)| !(w.is_finite() && w > 0.0)) {
        return Err(Error::input(format!("vertex {} has non-positive weight {w}", v + 1)));
    }

    let mut best: Option<(f64, Vec<Vertex>)> = None;
    for mask in 0u64..(1u64 << n) {
        let members: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let weight: f64 = members.iter().map(|&v| weights[v]).sum();
        if let Some((bw, bs)) = &best {
            if !better((weight, &members), (*bw, bs)) {
                continue;
            }
        }
        if is_pds(g, &VertexSet::from_mask(n, mask)) {
            best = Some((weight, members));
        }
    }
    let (weight, members) = best.expect("the full vertex set is a PDS");
    let set = VertexSet::from_ids(n, members).expect("ids in range");
    Ok(PdsResult::certify(g, set, weight))
}

/// Class of `(t, d)` in the tree DP's five-way classification, or `None`
/// when `d` fails even with the root observed in advance.
pub fn classify_pair(t: &WeightedTree, d: &VertexSet) -> Option<Class> {
    let g = t.graph();
    let n = g.vertex_count();
    let r = t.root();
    let root_in = d.contains(r);

    let pds_t = is_pds(&g, d);
    if pds_t && root_in {
        return Some(Class::A);
    }
    if root_in {
        // a set containing the root either observes T or nothing helps it
        return None;
    }

    let with_pendant = g.with_pendant(r);
    let d_ext = VertexSet::from_ids(n + 1, d.iter()).expect("ids in range");
    if is_pds(&with_pendant, &d_ext) {
        return Some(Class::B);
    }
    if pds_t {
        return Some(Class::C);
    }

    let mut keep = VertexSet::full(n);
    keep.remove(r);
    let (minus_root, old_ids) = g.induced_subgraph(&keep);
    let d_minus = VertexSet::from_ids(
        minus_root.vertex_count(),
        old_ids.iter().enumerate().filter(|(_, &v)| d.contains(v)).map(|(i, _)| i),
    )
    .expect("ids in range");
    if is_pds(&minus_root, &d_minus) {
        return Some(Class::D);
    }

    let pre = VertexSet::from_ids(n, [r]).expect("root in range");
    if closure(&g, d, &pre).is_full() {
        return Some(Class::E);
    }
    None
}
