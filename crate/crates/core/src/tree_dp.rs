//! Linear-time minimum-weight power domination on trees.
//!
//! A pair `(T, D)` of a rooted tree and a vertex subset falls into at most
//! one of five classes:
//!
//! * `A`: `D` is a PDS of `T` and the root is in `D`;
//! * `B`: `D` is a PDS of `T` with a pendant vertex hung on the root, root not in `D`;
//! * `C`: `D` is a PDS of `T` but not of the pendant extension, root not in `D`;
//! * `D`: `D` is a PDS of `T - r` but not of `T`, root not in `D`;
//! * `E`: neither of the above, but `D` observes all of `T` once the root is
//!   observed in advance.
//!
//! Joining a child subtree to a root combines the two classes according to
//! [`COMPOSE`]. Each vertex keeps the cheapest weight per class, folded in
//! tree-ordering order.

use std::fmt;
use std::ops::Add;

use crate::graph::{Vertex, VertexSet};
use crate::propagation::{closure_trace, TraceStep};
use crate::solver::PdsResult;
use crate::tree::WeightedTree;

/// Weight of a partial solution, or `+∞` for an empty class.
///
/// The infinite value is `f64::INFINITY` itself; weights are positive and
/// finite, so sums never produce NaN and infinity absorbs every addition.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Cost(f64);

impl Cost {
    pub const INFINITE: Cost = Cost(f64::INFINITY);

    /// Panics unless `w` is finite.
    pub fn finite(w: f64) -> Cost {
        assert!(w.is_finite(), "finite cost expected, got {w}");
        Cost(w)
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn value(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }

    pub fn min(self, other: Cost) -> Cost {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(w) => write!(f, "{w}"),
            None => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    A,
    B,
    C,
    D,
    E,
}

impl Class {
    pub const ALL: [Class; 5] = [Class::A, Class::B, Class::C, Class::D, Class::E];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ['a', 'b', 'c', 'd', 'e'][self.index()];
        write!(f, "{c}")
    }
}

/// `COMPOSE[root class][child class]`: class of the joined pair, `None`
/// where the join cannot be completed to a PDS.
pub const COMPOSE: [[Option<Class>; 5]; 5] = {
    use Class::*;
    [
        [Some(A), Some(A), Some(A), Some(A), Some(A)],
        [Some(B), Some(B), Some(B), Some(C), Some(C)],
        [Some(C), Some(C), Some(C), None, None],
        [Some(B), Some(B), Some(D), Some(E), Some(E)],
        [Some(C), Some(C), Some(E), None, None],
    ]
};

/// Cheapest weight per class for one rooted subtree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassVector(pub [Cost; 5]);

impl ClassVector {
    /// Vector of a lone vertex of weight `w`: `{v}` is class A, `∅` is class D.
    pub fn leaf(w: f64) -> Self {
        ClassVector([
            Cost::finite(w),
            Cost::INFINITE,
            Cost::INFINITE,
            Cost::finite(0.0),
            Cost::INFINITE,
        ])
    }

    pub fn get(&self, class: Class) -> Cost {
        self.0[class.index()]
    }

    /// Cheapest of the classes that are PDSs of the tree itself (A, B, C)
    /// and the class attaining it (lowest letter on ties).
    pub fn best_pds(&self) -> (Cost, Class) {
        [Class::A, Class::B, Class::C]
            .into_iter()
            .map(|c| (self.get(c), c))
            .fold((Cost::INFINITE, Class::A), |best, cand| {
                if cand.0 < best.0 {
                    cand
                } else {
                    best
                }
            })
    }
}

/// How each new slot of a merge was obtained: `(root's prior class,
/// child's class)`. `None` for slots that stayed infinite.
pub type MergeChoice = [Option<(Class, Class)>; 5];

/// Joins a child subtree under the root. Every new slot is computed from the
/// unmodified `parent` vector.
pub fn merge_child(parent: &ClassVector, child: &ClassVector) -> (ClassVector, MergeChoice) {
    let mut out = [Cost::INFINITE; 5];
    let mut choice: MergeChoice = [None; 5];
    // Child class in the outer loop: with strict improvement, ties keep the
    // lowest child letter, then the lowest prior root letter.
    for cc in Class::ALL {
        let cw = child.get(cc);
        if !cw.is_finite() {
            continue;
        }
        for pc in Class::ALL {
            let Some(target) = COMPOSE[pc.index()][cc.index()] else {
                continue;
            };
            let total = parent.get(pc) + cw;
            if total < out[target.index()] {
                out[target.index()] = total;
                choice[target.index()] = Some((pc, cc));
            }
        }
    }
    (ClassVector(out), choice)
}

struct Folded {
    vectors: Vec<ClassVector>,
    /// `choices[j]`: the merge that folded `j` into its father.
    choices: Vec<MergeChoice>,
}

fn fold(t: &WeightedTree) -> Folded {
    let n = t.vertex_count();
    let mut vectors: Vec<ClassVector> = t.weights().iter().map(|&w| ClassVector::leaf(w)).collect();
    let mut choices = vec![[None; 5]; n];
    for j in 0..n - 1 {
        let k = t.father(j);
        let (merged, choice) = merge_child(&vectors[k], &vectors[j]);
        vectors[k] = merged;
        choices[j] = choice;
    }
    Folded { vectors, choices }
}

/// Root class vector after folding the whole tree.
pub fn dp_class_minima(t: &WeightedTree) -> ClassVector {
    fold(t).vectors[t.root()]
}

/// Recovers a set attaining `class` at the root from the merge choices.
fn reconstruct(t: &WeightedTree, choices: &[MergeChoice], class: Class) -> VertexSet {
    let (offsets, children) = t.children();
    let mut set = VertexSet::empty(t.vertex_count());
    let mut stack = vec![(t.root(), class)];
    while let Some((v, mut slot)) = stack.pop() {
        // undo the merges of v's children, last merged first
        for &c in children[offsets[v]..offsets[v + 1]].iter().rev() {
            let (prior, child_class) =
                choices[c][slot.index()].expect("finite slot has a recorded merge");
            stack.push((c, child_class));
            slot = prior;
        }
        match slot {
            Class::A => set.insert(v),
            Class::D => {}
            other => unreachable!("initial vector has class {other} infinite"),
        }
    }
    set
}

/// Minimum-weight power dominating set of a tree in `O(n)`.
///
/// The returned set is in the tree's ordering labels. It is checked to be
/// a PDS whose weight equals the DP optimum before returning.
pub fn wpdt(t: &WeightedTree) -> PdsResult {
    let folded = fold(t);
    let (best, class) = folded.vectors[t.root()].best_pds();
    let Some(answer) = best.value() else {
        unreachable!("the whole vertex set is always class A or better")
    };
    let set = reconstruct(t, &folded.choices, class);

    let g = t.graph();
    let trace: Vec<TraceStep> = closure_trace(&g, &set, &VertexSet::empty(g.vertex_count()));
    let observed: usize = trace.iter().map(|s| s.observed.len()).sum();
    assert_eq!(observed, t.vertex_count(), "reconstructed set is not a PDS");
    let weight: f64 = set.iter().map(|v| t.weight(v)).sum();
    assert!(
        (weight - answer).abs() <= 1e-9 * answer.abs().max(1.0),
        "reconstructed weight {weight} differs from optimum {answer}"
    );

    PdsResult {
        cardinality: set.len(),
        set,
        weight: answer,
        optimal: true,
        certificate: trace,
    }
}

/// Vertex labels of a tree-ordered set translated back to input labels,
/// ascending.
pub fn input_labels(t: &WeightedTree, set: &VertexSet) -> Vec<Vertex> {
    let mut ids: Vec<Vertex> = set.iter().map(|v| t.label(v)).collect();
    ids.sort_unstable();
    ids
}
