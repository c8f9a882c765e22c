//! Deterministic graph generators: the extremal `E_k` family, the `K_4`
//! chain `L_k`, textbook families, and seeded random cubic graphs and trees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::tree::WeightedTree;

pub const CUBIC_MAX_ATTEMPTS: usize = 10_000;

fn clique(vs: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    vs.iter()
        .enumerate()
        .flat_map(move |(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
}

/// Vertex layout of [`gen_e`], useful for naming special vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ELayout {
    /// The two large cliques joined by a partial matching.
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
    /// Cliques inserted by the splitting steps, in insertion order.
    pub chain: Vec<Vec<Vertex>>,
    /// Degree-`r` connector vertices; `connectors[0]` is `u` for `k = 0`.
    pub connectors: Vec<Vertex>,
}

/// The counterexample family `E_k` for even `r >= 4`.
///
/// `E_0`: two copies of `K_r` joined by `r/2` disjoint edges, plus a
/// vertex `u` adjacent to the `r` unmatched clique vertices. `E_j` splits
/// the connector attached to the right clique into two vertices of degree
/// `r/2` and inserts a fresh `K_r`, each half of it joined to one of the
/// two pieces. The result is `r`-regular on `2r + 1 + k(r + 1)` vertices.
pub fn gen_e(r: usize, k: usize) -> Result<Graph> {
    gen_e_layout(r, k).map(|(g, _)| g)
}

pub fn gen_e_layout(r: usize, k: usize) -> Result<(Graph, ELayout)> {
    if r < 4 || !r.is_multiple_of(2) {
        return Err(Error::input(format!("E_k needs an even r >= 4, got r = {r}")));
    }
    let half = r / 2;
    let n = 2 * r + 1 + k * (r + 1);
    let left: Vec<Vertex> = (0..r).collect();
    let right: Vec<Vertex> = (r..2 * r).collect();
    let mut connectors = vec![2 * r];
    let mut chain = Vec::with_capacity(k);
    let mut next = 2 * r + 1;
    for _ in 0..k {
        chain.push((next..next + r).collect::<Vec<_>>());
        connectors.push(next + r);
        next += r + 1;
    }
    debug_assert_eq!(next, n);

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    edges.extend(clique(&left));
    edges.extend(clique(&right));
    for c in &chain {
        edges.extend(clique(c));
    }
    for i in 0..half {
        edges.push((left[i], right[i]));
    }
    // Blocks in a row: left, chain[0], ..., chain[k-1], right. Connector j
    // sits between block j and block j + 1, taking the upper half of the
    // block before it and the lower half of the block after it.
    let mut blocks: Vec<&[Vertex]> = vec![&left];
    blocks.extend(chain.iter().map(Vec::as_slice));
    blocks.push(&right);
    for (j, &c) in connectors.iter().enumerate() {
        let before = blocks[j];
        let after = blocks[j + 1];
        let before_half = &before[half..];
        // the right clique's matched vertices are its lower half
        let after_half = if j + 1 == blocks.len() - 1 { &after[half..] } else { &after[..half] };
        edges.extend(before_half.iter().map(|&v| (c, v)));
        edges.extend(after_half.iter().map(|&v| (c, v)));
    }

    let g = Graph::from_edges(n, edges).expect("E_k construction is simple");
    Ok((
        g,
        ELayout {
            left,
            right,
            chain,
            connectors,
        },
    ))
}

/// `k` copies of `K_4` in a row, consecutive copies joined by two disjoint
/// edges (`d_{i,3} d_{i+1,1}` and `d_{i,4} d_{i+1,2}`).
pub fn gen_l(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::input(format!("L_k needs k >= 2, got {k}")));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let d: Vec<Vertex> = (4 * i..4 * i + 4).collect();
        edges.extend(clique(&d));
        if i + 1 < k {
            edges.push((4 * i + 2, 4 * (i + 1)));
            edges.push((4 * i + 3, 4 * (i + 1) + 1));
        }
    }
    Ok(Graph::from_edges(4 * k, edges).expect("L_k construction is simple"))
}

/// Named graph families with their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    E { r: usize, k: usize },
    L { k: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,n}`: center 0, leaves `1..=n`.
    Star { n: usize },
    Complete { n: usize },
    CompleteBipartite { left: usize, right: usize },
    RandomCubic { n: usize, seed: u64 },
    RandomTree { n: usize, lo: u64, hi: u64, seed: u64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::E { r, k } => gen_e(r, k),
            FamilySpec::L { k } => gen_l(k),
            FamilySpec::RandomCubic { n, seed } => gen_random_cubic(n, seed),
            FamilySpec::RandomTree { n, lo, hi, seed } => {
                Ok(gen_random_tree(n, (lo, hi), seed)?.graph())
            }
            _ => gen_standard(self),
        }
    }
}

/// Paths, cycles, stars, complete and complete bipartite graphs.
pub fn gen_standard(spec: &FamilySpec) -> Result<Graph> {
    let positive = |name: &str, n: usize| {
        if n == 0 {
            Err(Error::input(format!("{name} needs n >= 1")))
        } else {
            Ok(())
        }
    };
    let g = match *spec {
        FamilySpec::Path { n } => {
            positive("path", n)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        FamilySpec::Star { n } => {
            positive("star", n)?;
            Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))?
        }
        FamilySpec::Complete { n } => {
            positive("complete graph", n)?;
            let vs: Vec<Vertex> = (0..n).collect();
            Graph::from_edges(n, clique(&vs))?
        }
        FamilySpec::CompleteBipartite { left, right } => {
            positive("complete bipartite side", left)?;
            positive("complete bipartite side", right)?;
            let edges = (0..left).flat_map(|u| (left..left + right).map(move |v| (u, v)));
            Graph::from_edges(left + right, edges)?
        }
        ref other => {
            return Err(Error::input(format!("{other:?} is not a standard family")));
        }
    };
    Ok(g)
}

/// Connected simple cubic graph on `n` vertices from the pairing model,
/// resampling until the pairing is simple and connected.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::input(format!("random cubic graph needs an even n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: for _ in 0..CUBIC_MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        let g = Graph::from_edges(n, edges).expect("checked simple");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Resource(format!(
        "no simple connected cubic pairing on {n} vertices after {CUBIC_MAX_ATTEMPTS} attempts"
    )))
}

/// Uniform labeled tree on `n` vertices from a random Prüfer sequence,
/// rooted at the last label, with integer weights uniform in `[lo, hi]`.
pub fn gen_random_tree(n: usize, (lo, hi): (u64, u64), seed: u64) -> Result<WeightedTree> {
    if n == 0 {
        return Err(Error::input("random tree needs n >= 1"));
    }
    if lo == 0 || lo > hi {
        return Err(Error::input(format!("weight range needs 0 < lo <= hi, got [{lo}, {hi}]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = if n == 1 {
        Vec::new()
    } else {
        let pruefer: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        pruefer_decode(n, &pruefer)
    };
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..=hi) as f64).collect();
    WeightedTree::from_edges(n, &edges, n - 1, &weights)
}

fn pruefer_decode(n: usize, seq: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::propagation::is_pds;

    #[test]
    fn e_family_shape() {
        for r in [4, 6] {
            for k in 0..4 {
                let g = gen_e(r, k).unwrap();
                assert_eq!(g.vertex_count(), 2 * r + 1 + k * (r + 1));
                assert!(g.is_regular(r), "E_{k} r={r}");
                assert!(g.is_claw_free(), "E_{k} r={r}");
                assert!(g.is_connected());
            }
        }
        assert_eq!(gen_e(6, 2).unwrap().vertex_count(), 27);
    }

    #[test]
    fn e_rejects_bad_r() {
        assert!(gen_e(5, 0).is_err());
        assert!(gen_e(2, 0).is_err());
    }

    #[test]
    fn e0_matched_vertex_plus_u_is_pds() {
        let (g, layout) = gen_e_layout(4, 0).unwrap();
        let a = layout.left[0];
        let u = layout.connectors[0];
        assert!(is_pds(&g, &VertexSet::from_ids(9, [a, u]).unwrap()));
    }

    #[test]
    fn ek_witness_set_from_construction() {
        // a, the last connector, and one vertex per inserted clique
        for k in 1..4 {
            let (g, layout) = gen_e_layout(4, k).unwrap();
            let mut ids = vec![layout.left[0], *layout.connectors.last().unwrap()];
            ids.extend(layout.chain.iter().map(|c| c[0]));
            let s = VertexSet::from_ids(g.vertex_count(), ids).unwrap();
            assert_eq!(s.len(), k + 2);
            assert!(is_pds(&g, &s), "k={k}");
        }
    }

    #[test]
    fn l_family_shape() {
        let l2 = gen_l(2).unwrap();
        assert_eq!((l2.vertex_count(), l2.edge_count()), (8, 14));
        assert!(l2.is_claw_free());
        assert!(!l2.is_regular(4));
        for k in 2..6 {
            let g = gen_l(k).unwrap();
            let deg3 = g.vertices().filter(|&v| g.degree(v).unwrap() == 3).count();
            let deg4 = g.vertices().filter(|&v| g.degree(v).unwrap() == 4).count();
            assert_eq!((deg3, deg4), (4, 4 * k - 4));
            assert!(g.is_claw_free());
        }
        assert!(gen_l(1).is_err());
    }

    #[test]
    fn standard_families() {
        let p1 = gen_standard(&FamilySpec::Path { n: 1 }).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        let k33 = gen_standard(&FamilySpec::CompleteBipartite { left: 3, right: 3 }).unwrap();
        assert_eq!((k33.vertex_count(), k33.edge_count()), (6, 9));
        let c3 = gen_standard(&FamilySpec::Cycle { n: 3 }).unwrap();
        assert_eq!(c3, gen_standard(&FamilySpec::Complete { n: 3 }).unwrap());
        assert!(gen_standard(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(gen_standard(&FamilySpec::Path { n: 0 }).is_err());
        assert!(gen_standard(&FamilySpec::L { k: 3 }).is_err());
    }

    #[test]
    fn random_cubic() {
        let k4 = gen_standard(&FamilySpec::Complete { n: 4 }).unwrap();
        for seed in 0..5 {
            assert_eq!(gen_random_cubic(4, seed).unwrap(), k4);
        }
        for n in [6, 8, 10, 12, 20] {
            let g = gen_random_cubic(n, 42).unwrap();
            assert!(g.is_regular(3) && g.is_connected());
            assert_eq!(g, gen_random_cubic(n, 42).unwrap());
        }
        let line = gen_random_cubic(8, 3).unwrap().line_graph();
        assert_eq!(line.vertex_count(), 12);
        assert!(line.is_regular(4) && line.is_claw_free());
        assert!(gen_random_cubic(7, 0).is_err());
        assert!(gen_random_cubic(2, 0).is_err());
    }

    #[test]
    fn random_trees() {
        let t = gen_random_tree(1, (3, 9), 1).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert!((3.0..=9.0).contains(&t.weight(0)));
        let t = gen_random_tree(2, (1, 1), 1).unwrap();
        assert_eq!(t.graph().edge_count(), 1);
        for seed in 0..20 {
            let t = gen_random_tree(30, (1, 100), seed).unwrap();
            assert!(t.graph().is_connected());
            assert_eq!(t.label(t.root()), 29);
            assert_eq!(t, gen_random_tree(30, (1, 100), seed).unwrap());
        }
        assert!(gen_random_tree(3, (0, 4), 0).is_err());
        assert!(gen_random_tree(3, (5, 4), 0).is_err());
        assert!(gen_random_tree(0, (1, 4), 0).is_err());
    }
}
