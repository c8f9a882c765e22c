//! Undirected simple graphs and the structural predicates used throughout
//! the crate.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Dense 0-based vertex id.
pub type Vertex = usize;

/// A set of vertices of a graph with `capacity` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from ids, rejecting ids `>= capacity`.
    pub fn from_ids<I: IntoIterator<Item = Vertex>>(capacity: usize, ids: I) -> Result<Self> {
        let mut set = VertexSet::empty(capacity);
        for v in ids {
            if v >= capacity {
                return Err(Error::input(format!(
                    "vertex {} out of range (graph has {} vertices)",
                    v + 1,
                    capacity
                )));
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Set whose members are the low `capacity` bits of `mask`.
    pub fn from_mask(capacity: usize, mask: u64) -> Self {
        let mut set = VertexSet::empty(capacity);
        for v in 0..capacity.min(64) {
            if mask >> v & 1 == 1 {
                set.insert(v);
            }
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: Vertex) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected simple graph in canonical adjacency-list form: no loops, no
/// parallel edges, symmetric and ascending neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-based edges. Self-loops, duplicate edges and
    /// out-of-range endpoints are input errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::input(format!(
                "edge {}-{} has an endpoint outside 1..={}",
                u + 1,
                v + 1,
                n
            )));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {}", u + 1)));
        }
        if self.has_edge(u, v) {
            return Err(Error::input(format!("duplicate edge {}-{}", u + 1, v + 1)));
        }
        self.insert_sorted(u, v);
        Ok(())
    }

    fn insert_sorted(&mut self, u: Vertex, v: Vertex) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Sorted open neighborhood. Panics on an out-of-range id.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "vertex {} out of range (graph has {} vertices)",
                v + 1,
                self.vertex_count()
            )))
        }
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Every vertex has degree exactly `k`. Vacuously true on zero vertices.
    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|ns| ns.len() == k)
    }

    /// No vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Returns `(center, [x, y, z])` for some induced claw, if any.
    pub fn find_claw(&self) -> Option<(Vertex, [Vertex; 3])> {
        for (c, ns) in self.adj.iter().enumerate() {
            for (i, &x) in ns.iter().enumerate() {
                for (j, &y) in ns.iter().enumerate().skip(i + 1) {
                    if self.has_edge(x, y) {
                        continue;
                    }
                    for &z in &ns[j + 1..] {
                        if !self.has_edge(x, z) && !self.has_edge(y, z) {
                            return Some((c, [x, y, z]));
                        }
                    }
                }
            }
        }
        None
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path edge count, or `None` when `u` and `v` lie in
    /// different components.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// True iff all pairwise distances in `s` are at least 3, i.e. the
    /// closed neighborhoods of its members are pairwise disjoint.
    pub fn is_packing(&self, s: &VertexSet) -> bool {
        let members = s.to_vec();
        members.iter().enumerate().all(|(i, &u)| {
            let dist = self.bfs_distances(u);
            members[i + 1..]
                .iter()
                .all(|&v| dist[v].is_none_or(|d| d >= 3))
        })
    }

    /// One BFS from vertex 0 reaches everything. The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Closed neighborhood `N[s]`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            for &u in &self.adj[v] {
                out.insert(u);
            }
        }
        out
    }

    /// Line graph. Vertex `i` of the result is the `i`-th edge of
    /// [`Graph::edges`] (lexicographic `(u, v)` with `u < v`).
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = self.edges().collect();
        // incident[v] = ids of edges touching v
        let mut incident = vec![Vec::new(); self.vertex_count()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(id);
            incident[v].push(id);
        }
        let mut line = Graph::empty(edges.len());
        for ids in &incident {
            for (i, &a) in ids.iter().enumerate() {
                for &b in &ids[i + 1..] {
                    // two simple edges share at most one endpoint
                    line.adj[a].push(b);
                    line.adj[b].push(a);
                }
            }
        }
        for ns in &mut line.adj {
            ns.sort_unstable();
        }
        line
    }

    /// Copy of the graph with one extra vertex (id `n`) adjacent to `v`.
    pub fn with_pendant(&self, v: Vertex) -> Graph {
        let mut g = self.clone();
        let p = g.adj.len();
        g.adj.push(vec![v]);
        g.adj[v].push(p);
        g
    }

    /// Subgraph induced by `keep`. Returns the graph and, for each new id,
    /// the original id it came from.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old_ids = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old_ids
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| keep.contains(u))
                    .map(|&u| new_id[u])
                    .collect()
            })
            .collect();
        (Graph { adj }, old_ids)
    }
}
