//! The observation process: every vertex of `S` observes its closed
//! neighborhood, then any observed vertex with exactly one unobserved
//! neighbor observes that neighbor, until nothing changes.
//!
//! The engine advances in rounds so that round `i` yields exactly
//! `P^i \ P^{i-1}`. Within a round it only touches vertices whose
//! unobserved-neighbor counter dropped to one, so a full run is `O(n + m)`.

use crate::graph::{Graph, Vertex, VertexSet};

/// Vertices newly observed in one round. Round 0 is `N[S] ∪ pre_observed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub step: usize,
    /// Ascending vertex ids.
    pub observed: Vec<Vertex>,
}

/// Incremental state of one propagation run.
#[derive(Clone, Debug)]
pub struct ObservationState<'g> {
    graph: &'g Graph,
    observed: VertexSet,
    /// `|N(v) \ observed|`, kept exact for every vertex.
    unobserved_neighbors: Vec<usize>,
    /// Observed vertices whose counter is at most one and which have not
    /// fired yet. Evaluated at the start of the next round.
    frontier: Vec<Vertex>,
    fired: Vec<bool>,
    /// Chosen as an OR2 target; such vertices are observed at round end.
    targeted: Vec<bool>,
    step_index: usize,
    initial: Vec<Vertex>,
}

impl<'g> ObservationState<'g> {
    /// Applies the domination rule for `seeds` and marks `pre_observed`
    /// without dominating their neighbors.
    pub fn new(graph: &'g Graph, seeds: &VertexSet, pre_observed: &VertexSet) -> Self {
        let n = graph.vertex_count();
        let mut state = ObservationState {
            graph,
            observed: VertexSet::empty(n),
            unobserved_neighbors: graph.vertices().map(|v| graph.neighbors(v).len()).collect(),
            frontier: Vec::new(),
            fired: vec![false; n],
            targeted: vec![false; n],
            step_index: 0,
            initial: Vec::new(),
        };
        let mut initial = graph.closed_neighborhood(seeds);
        initial.union_with(pre_observed);
        let initial = initial.to_vec();
        state.observe_batch(&initial);
        state.initial = initial;
        state
    }

    fn observe_batch(&mut self, batch: &[Vertex]) {
        for &v in batch {
            debug_assert!(!self.observed.contains(v));
            self.observed.insert(v);
        }
        for &v in batch {
            if self.unobserved_neighbors[v] <= 1 {
                self.frontier.push(v);
            }
            for &u in self.graph.neighbors(v) {
                self.unobserved_neighbors[u] -= 1;
                if self.unobserved_neighbors[u] == 1 && self.observed.contains(u) {
                    self.frontier.push(u);
                }
            }
        }
    }

    /// Runs one round. Returns the newly observed vertices, or `None` once
    /// the fixpoint is reached.
    pub fn step(&mut self) -> Option<Vec<Vertex>> {
        let candidates = std::mem::take(&mut self.frontier);
        let mut batch = Vec::new();
        for v in candidates {
            if self.fired[v] || self.unobserved_neighbors[v] != 1 {
                continue;
            }
            self.fired[v] = true;
            let target = self
                .graph
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| !self.observed.contains(u))
                .expect("counter says one unobserved neighbor");
            if !self.targeted[target] {
                self.targeted[target] = true;
                batch.push(target);
            }
        }
        if batch.is_empty() {
            return None;
        }
        self.observe_batch(&batch);
        self.step_index += 1;
        batch.sort_unstable();
        Some(batch)
    }

    pub fn observed(&self) -> &VertexSet {
        &self.observed
    }

    pub fn step_index(&self) -> usize {
        self.step_index
    }

    pub fn unobserved_neighbor_count(&self, v: Vertex) -> usize {
        self.unobserved_neighbors[v]
    }

    /// Runs to the fixpoint and returns the observed set.
    pub fn run(mut self) -> VertexSet {
        while self.step().is_some() {}
        self.observed
    }
}

/// `P^∞(S)` starting from `N[S] ∪ pre_observed`.
pub fn closure(g: &Graph, s: &VertexSet, pre_observed: &VertexSet) -> VertexSet {
    ObservationState::new(g, s, pre_observed).run()
}

/// Per-round newly observed sets; the first entry is round 0 even when it
/// is empty, later rounds are emitted only while something changes.
pub fn closure_trace(g: &Graph, s: &VertexSet, pre_observed: &VertexSet) -> Vec<TraceStep> {
    let mut state = ObservationState::new(g, s, pre_observed);
    let mut trace = vec![TraceStep {
        step: 0,
        observed: std::mem::take(&mut state.initial),
    }];
    while let Some(observed) = state.step() {
        trace.push(TraceStep {
            step: state.step_index(),
            observed,
        });
    }
    trace
}

/// `s` observes every vertex of `g`.
pub fn is_pds(g: &Graph, s: &VertexSet) -> bool {
    closure(g, s, &VertexSet::empty(g.vertex_count())).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn path_center_observes_everything() {
        let g = path(5);
        assert!(closure(&g, &set(5, &[2]), &set(5, &[])).is_full());
    }

    #[test]
    fn k33_stalls_after_domination() {
        let g = k33();
        let c = closure(&g, &set(6, &[0]), &set(6, &[]));
        assert_eq!(c.to_vec(), vec![0, 3, 4, 5]);
        assert!(!is_pds(&g, &set(6, &[0])));
    }

    #[test]
    fn whole_vertex_set() {
        let g = k33();
        assert!(closure(&g, &VertexSet::full(6), &set(6, &[])).is_full());
    }

    #[test]
    fn cycle_single_vertex_is_pds() {
        let g = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        for v in 0..7 {
            assert!(is_pds(&g, &set(7, &[v])));
        }
    }

    #[test]
    fn traces() {
        let p3 = path(3);
        assert_eq!(
            closure_trace(&p3, &set(3, &[1]), &set(3, &[])),
            vec![TraceStep { step: 0, observed: vec![0, 1, 2] }]
        );

        let p5 = path(5);
        let trace = closure_trace(&p5, &set(5, &[0]), &set(5, &[]));
        let steps: Vec<(usize, Vec<usize>)> =
            trace.iter().map(|t| (t.step, t.observed.clone())).collect();
        assert_eq!(steps, vec![(0, vec![0, 1]), (1, vec![2]), (2, vec![3]), (3, vec![4])]);

        let empty = closure_trace(&p5, &set(5, &[]), &set(5, &[]));
        assert_eq!(empty, vec![TraceStep { step: 0, observed: vec![] }]);
    }

    #[test]
    fn pre_observed_does_not_dominate() {
        // P_3 with the middle pre-observed: it has two unobserved neighbors.
        let g = path(3);
        assert_eq!(closure(&g, &set(3, &[]), &set(3, &[1])).to_vec(), vec![1]);
        // endpoint pre-observed propagates down the path
        assert!(closure(&g, &set(3, &[]), &set(3, &[0])).is_full());
    }

    #[test]
    fn empty_graph_has_empty_pds() {
        assert!(is_pds(&Graph::empty(0), &VertexSet::empty(0)));
    }

    #[test]
    fn counters_track_unobserved_neighbors() {
        let g = k33();
        let mut st = ObservationState::new(&g, &set(6, &[0]), &set(6, &[]));
        while st.step().is_some() {}
        for v in st.observed().iter() {
            let expect = g.neighbors(v).iter().filter(|&&u| !st.observed().contains(u)).count();
            assert_eq!(st.unobserved_neighbor_count(v), expect);
        }
    }
}
