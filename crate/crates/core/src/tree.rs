//! Rooted vertex-weighted trees in tree-ordering form.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Result of [`tree_ordering`]: a relabeling in which every non-root vertex
/// precedes its father and the root is last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOrdering {
    /// `father[i] > i` for `i < n - 1`; `father[n - 1] == n - 1`.
    pub father: Vec<Vertex>,
    /// `new_to_old[i]` is the input label of ordered vertex `i`.
    pub new_to_old: Vec<Vertex>,
    pub old_to_new: Vec<Vertex>,
}

/// Orders the vertices `0..n` of the tree given by `edges` by an iterative
/// post-order walk from `root` (children visited in ascending label order).
pub fn tree_ordering(n: usize, edges: &[(Vertex, Vertex)], root: Vertex) -> Result<TreeOrdering> {
    if n == 0 {
        return Err(Error::input("a tree needs at least one vertex"));
    }
    if root >= n {
        return Err(Error::input(format!("root {} out of range", root + 1)));
    }
    if edges.len() != n - 1 {
        return Err(Error::input(format!(
            "a tree on {} vertices has {} edges, got {}",
            n,
            n - 1,
            edges.len()
        )));
    }
    // rejects loops and duplicate edges
    let g = Graph::from_edges(n, edges.iter().copied())?;

    let mut parent = vec![usize::MAX; n];
    let mut new_to_old = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    // (vertex, index of next neighbor to visit)
    let mut stack = vec![(root, 0usize)];
    visited[root] = true;
    parent[root] = root;
    while let Some((v, next)) = stack.last_mut() {
        let v = *v;
        let ns = g.neighbors(v);
        if let Some(&u) = ns.get(*next) {
            *next += 1;
            if u == parent[v] {
                continue;
            }
            if visited[u] {
                return Err(Error::input("edges contain a cycle"));
            }
            visited[u] = true;
            parent[u] = v;
            stack.push((u, 0));
        } else {
            new_to_old.push(v);
            stack.pop();
        }
    }
    if new_to_old.len() != n {
        return Err(Error::input("edges do not form a connected tree"));
    }
    let mut old_to_new = vec![0; n];
    for (i, &v) in new_to_old.iter().enumerate() {
        old_to_new[v] = i;
    }
    let father = new_to_old.iter().map(|&v| old_to_new[parent[v]]).collect();
    Ok(TreeOrdering {
        father,
        new_to_old,
        old_to_new,
    })
}

/// A rooted tree with positive vertex weights, stored in tree ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedTree {
    father: Vec<Vertex>,
    weights: Vec<f64>,
    labels: Vec<Vertex>,
}

fn check_weight(w: f64) -> Result<()> {
    if w.is_finite() && w > 0.0 {
        Ok(())
    } else {
        Err(Error::input(format!("weight {w} is not a positive number")))
    }
}

impl WeightedTree {
    /// Builds a tree directly from a father map already in tree ordering.
    pub fn from_father(father: Vec<Vertex>, weights: Vec<f64>) -> Result<Self> {
        let n = father.len();
        if n == 0 {
            return Err(Error::input("a tree needs at least one vertex"));
        }
        if weights.len() != n {
            return Err(Error::input(format!("expected {} weights, got {}", n, weights.len())));
        }
        for (i, &f) in father.iter().enumerate().take(n - 1) {
            if f <= i || f >= n {
                return Err(Error::input(format!(
                    "father of v{} is v{}; fathers must come later in the ordering",
                    i + 1,
                    f + 1
                )));
            }
        }
        if father[n - 1] != n - 1 {
            return Err(Error::input("the last vertex must be its own father"));
        }
        for &w in &weights {
            check_weight(w)?;
        }
        Ok(WeightedTree {
            father,
            weights,
            labels: (0..n).collect(),
        })
    }

    /// Builds a tree from arbitrary labels `0..n`, rooted at `root`.
    /// `weights` is indexed by the input labels.
    pub fn from_edges(
        n: usize,
        edges: &[(Vertex, Vertex)],
        root: Vertex,
        weights: &[f64],
    ) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::input(format!("expected {} weights, got {}", n, weights.len())));
        }
        for &w in weights {
            check_weight(w)?;
        }
        let ord = tree_ordering(n, edges, root)?;
        Ok(WeightedTree {
            weights: ord.new_to_old.iter().map(|&v| weights[v]).collect(),
            father: ord.father,
            labels: ord.new_to_old,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.father.len()
    }

    pub fn root(&self) -> Vertex {
        self.father.len() - 1
    }

    pub fn father(&self, v: Vertex) -> Vertex {
        self.father[v]
    }

    pub fn fathers(&self) -> &[Vertex] {
        &self.father
    }

    pub fn weight(&self, v: Vertex) -> f64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Input label of ordered vertex `v`.
    pub fn label(&self, v: Vertex) -> Vertex {
        self.labels[v]
    }

    pub fn set_weights(&mut self, weights: Vec<f64>) -> Result<()> {
        if weights.len() != self.vertex_count() {
            return Err(Error::input("weight vector length mismatch"));
        }
        for &w in &weights {
            check_weight(w)?;
        }
        self.weights = weights;
        Ok(())
    }

    /// Edges `(child, father)` in ordering labels.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.father[..self.father.len() - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (i, f))
    }

    /// Underlying undirected graph in ordering labels.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.vertex_count(), self.edges())
            .expect("father map is a valid tree")
    }

    /// Children of every vertex in ascending order, as CSR offsets + ids.
    pub(crate) fn children(&self) -> (Vec<usize>, Vec<Vertex>) {
        let n = self.vertex_count();
        let mut offsets = vec![0usize; n + 1];
        for (_, f) in self.edges() {
            offsets[f + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut ids = vec![0; n.saturating_sub(1)];
        for (c, f) in self.edges() {
            ids[fill[f]] = c;
            fill[f] += 1;
        }
        (offsets, ids)
    }
}
