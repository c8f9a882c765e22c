//! Reference implementations used only by the test suites. Each one is a
//! direct, slow transcription of a definition and shares no code path with
//! the library routine it checks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use powerdom::{Graph, Vertex, VertexSet, WeightedTree};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Set = BTreeSet<Vertex>;

pub fn to_set(s: &VertexSet) -> Set {
    s.iter().collect()
}

pub fn closed_nbhd(g: &Graph, v: Vertex) -> Set {
    let mut s: Set = g.neighbors(v).iter().copied().collect();
    s.insert(v);
    s
}

/// One application of the step formula
/// `P^{i+1} = P^i ∪ ⋃ { N[v] : v ∈ P^i, |N[v] \ P^i| <= 1 }`.
pub fn naive_step(g: &Graph, p: &Set) -> Set {
    let mut next = p.clone();
    for &v in p {
        let nv = closed_nbhd(g, v);
        if nv.difference(p).count() <= 1 {
            next.extend(nv);
        }
    }
    next
}

/// All levels `P^0, P^1, ...` until the first repeat (exclusive).
pub fn naive_levels(g: &Graph, s: &[Vertex], pre: &[Vertex]) -> Vec<Set> {
    let mut p: Set = pre.iter().copied().collect();
    for &v in s {
        p.extend(closed_nbhd(g, v));
    }
    let mut levels = vec![p.clone()];
    loop {
        let next = naive_step(g, &p);
        if next == p {
            return levels;
        }
        levels.push(next.clone());
        p = next;
    }
}

/// Applies single propagation moves in a random order until none applies.
pub fn random_order_closure<R: Rng>(g: &Graph, s: &[Vertex], pre: &[Vertex], rng: &mut R) -> Set {
    let mut obs: Set = pre.iter().copied().collect();
    for &v in s {
        obs.extend(closed_nbhd(g, v));
    }
    loop {
        let mut moves: Vec<Vertex> = obs
            .iter()
            .filter_map(|&v| {
                let un: Vec<Vertex> =
                    g.neighbors(v).iter().copied().filter(|u| !obs.contains(u)).collect();
                (un.len() == 1).then(|| un[0])
            })
            .collect();
        if moves.is_empty() {
            return obs;
        }
        moves.shuffle(rng);
        obs.insert(moves[0]);
    }
}

pub fn naive_is_pds(g: &Graph, s: &[Vertex]) -> bool {
    let levels = naive_levels(g, s, &[]);
    levels.last().unwrap().len() == g.vertex_count()
}

/// Minimum PDS weight by trying every subset, using the naive closure.
pub fn brute_min_weight(g: &Graph, w: &[f64]) -> f64 {
    let n = g.vertex_count();
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << n) {
        let s: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let weight: f64 = s.iter().map(|&v| w[v]).sum();
        if weight < best && naive_is_pds(g, &s) {
            best = weight;
        }
    }
    best
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_subset<R: Rng>(n: usize, p: f64, rng: &mut R) -> Vec<Vertex> {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Random tree as a father map in tree ordering (`father[i] > i`).
pub fn random_father_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n)
        .map(|i| if i + 1 == n { i } else { rng.gen_range(i + 1..n) })
        .collect()
}

pub fn path_tree(n: usize, w: Vec<f64>) -> WeightedTree {
    let father = (0..n).map(|i| (i + 1).min(n - 1)).collect();
    WeightedTree::from_father(father, w).unwrap()
}

/// Spider: a center (the root, last id) with legs of the given lengths.
pub fn spider(legs: &[usize]) -> WeightedTree {
    let n = 1 + legs.iter().sum::<usize>();
    let mut father = Vec::with_capacity(n);
    let root = n - 1;
    for &len in legs {
        // leg vertices in order tip .. attachment
        let start = father.len();
        for j in 0..len {
            father.push(if j + 1 == len { root } else { start + j + 1 });
        }
    }
    father.push(root);
    WeightedTree::from_father(father, vec![1.0; n]).unwrap()
}

/// Per-class minimum weights over every subset, via the class predicates
/// evaluated on the tree directly.
pub fn class_minima_by_enumeration(t: &WeightedTree) -> [Option<f64>; 5] {
    let n = t.vertex_count();
    let mut mins = [None::<f64>; 5];
    for mask in 0u32..(1 << n) {
        let d = VertexSet::from_mask(n, mask as u64);
        if let Some(class) = powerdom::classify_pair(t, &d) {
            let w: f64 = d.iter().map(|v| t.weight(v)).sum();
            let slot = &mut mins[class as usize];
            *slot = Some(slot.map_or(w, |m: f64| m.min(w)));
        }
    }
    mins
}

/// Root vector computed with the merge assignments applied in place, in
/// the order they are listed (each slot sees the earlier updated slots).
pub fn in_place_root_vector(t: &WeightedTree) -> [f64; 5] {
    let inf = f64::INFINITY;
    let n = t.vertex_count();
    let mut v: Vec<[f64; 5]> = t.weights().iter().map(|&w| [w, inf, inf, 0.0, inf]).collect();
    let min = |xs: &[f64]| xs.iter().copied().fold(inf, f64::min);
    for j in 0..n - 1 {
        let k = t.father(j);
        let c = v[j];
        let p = &mut v[k];
        p[0] += min(&c);
        p[1] = (p[1] + min(&c[0..3])).min(p[3] + min(&c[0..2]));
        p[2] = (p[1] + min(&c[3..5])).min(p[2] + min(&c[0..3])).min(p[4] + min(&c[0..2]));
        p[3] += c[2];
        p[4] = (p[3] + min(&c[3..5])).min(p[4] + c[2]);
    }
    v[n - 1]
}

/// Greedy random packing: scan vertices in random order, keep a vertex if
/// it is at distance at least 3 from everything kept so far.
pub fn greedy_packing<R: Rng>(g: &Graph, rng: &mut R) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    let mut blocked = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for v in order {
        if blocked[v] {
            continue;
        }
        chosen.push(v);
        // block the ball of radius 2
        for &u in g.neighbors(v) {
            blocked[u] = true;
            for &x in g.neighbors(u) {
                blocked[x] = true;
            }
        }
        blocked[v] = true;
    }
    chosen
}
