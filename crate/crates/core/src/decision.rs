//! Subset activities driven by a decision tree: a binary tree whose nodes
//! name the next edge to resolve, deleting on the left branch and
//! contracting on the right.

use std::collections::HashMap;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::graph::{check_exhaustive, Graph};
use crate::poly::MultiPoly;
use crate::subgraph::gt_partition;
use crate::tutte::XWYZ;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Left: the edge was deleted.
    Delete,
    /// Right: the edge was contracted.
    Contract,
}

pub trait DecisionTree {
    /// The edge at the node reached by `history`.
    fn next_edge(&self, history: &[(usize, Branch)]) -> usize;
}

/// Resolves edges in a fixed order regardless of the branch taken.
#[derive(Clone, Debug)]
pub struct ConstantOrder(pub Vec<usize>);

impl ConstantOrder {
    pub fn increasing(m: usize) -> Self {
        ConstantOrder((0..m).collect())
    }

    pub fn decreasing(m: usize) -> Self {
        ConstantOrder((0..m).rev().collect())
    }
}

impl DecisionTree for ConstantOrder {
    fn next_edge(&self, history: &[(usize, Branch)]) -> usize {
        self.0.get(history.len()).copied().unwrap_or(usize::MAX)
    }
}

/// Picks a uniformly random unresolved edge, with the randomness derived
/// from the seed and the history so the same node always gets the same
/// label.
#[derive(Clone, Debug)]
pub struct SeededChooser {
    pub seed: u64,
    pub edge_count: usize,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl DecisionTree for SeededChooser {
    fn next_edge(&self, history: &[(usize, Branch)]) -> usize {
        let mut h = splitmix(self.seed);
        let mut done = EdgeSubset::EMPTY;
        for &(e, b) in history {
            h = splitmix(h ^ ((e as u64) << 1 | (b == Branch::Contract) as u64));
            done.insert(e);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(h);
        EdgeSubset::full(self.edge_count)
            .difference(done)
            .iter()
            .choose(&mut rng)
            .unwrap_or(usize::MAX)
    }
}

/// Heap-indexed perfect binary tree of depth `m`: node `i` has children
/// `2i+1` (delete) and `2i+2` (contract).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitTree {
    edge_count: usize,
    labels: Vec<usize>,
}

pub const EXPLICIT_TREE_CAP: usize = 12;

impl ExplicitTree {
    pub fn new(edge_count: usize, labels: Vec<usize>) -> Result<Self> {
        if edge_count > EXPLICIT_TREE_CAP {
            return Err(Error::ExhaustiveCap {
                what: "explicit decision tree edges",
                cap: EXPLICIT_TREE_CAP,
                actual: edge_count,
            });
        }
        let nodes = (1usize << edge_count) - 1;
        if labels.len() != nodes {
            return Err(Error::InvalidDecisionTree(format!(
                "{} labels for a tree with {nodes} nodes",
                labels.len()
            )));
        }
        let tree = ExplicitTree { edge_count, labels };
        tree.check_paths(0, EdgeSubset::EMPTY)?;
        Ok(tree)
    }

    fn check_paths(&self, node: usize, used: EdgeSubset) -> Result<()> {
        if node >= self.labels.len() {
            return Ok(());
        }
        let e = self.labels[node];
        if e >= self.edge_count || used.contains(e) {
            return Err(Error::InvalidDecisionTree(format!(
                "node {node} repeats or misnames edge {e}"
            )));
        }
        self.check_paths(2 * node + 1, used.with(e))?;
        self.check_paths(2 * node + 2, used.with(e))
    }

    /// Writes out every node of an implicit tree.
    pub fn materialize(tree: &dyn DecisionTree, edge_count: usize) -> Result<Self> {
        if edge_count > EXPLICIT_TREE_CAP {
            return Err(Error::ExhaustiveCap {
                what: "explicit decision tree edges",
                cap: EXPLICIT_TREE_CAP,
                actual: edge_count,
            });
        }
        let nodes = (1usize << edge_count) - 1;
        let mut labels = vec![0; nodes];
        let mut history = Vec::new();
        fill(tree, 0, &mut history, &mut labels);
        Self::new(edge_count, labels)
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

fn fill(
    tree: &dyn DecisionTree,
    node: usize,
    history: &mut Vec<(usize, Branch)>,
    labels: &mut [usize],
) {
    if node >= labels.len() {
        return;
    }
    let e = tree.next_edge(history);
    labels[node] = e;
    for (child, branch) in [(2 * node + 1, Branch::Delete), (2 * node + 2, Branch::Contract)] {
        history.push((e, branch));
        fill(tree, child, history, labels);
        history.pop();
    }
}

impl DecisionTree for ExplicitTree {
    fn next_edge(&self, history: &[(usize, Branch)]) -> usize {
        let mut node = 0;
        for &(_, b) in history {
            node = 2 * node + if b == Branch::Delete { 1 } else { 2 };
        }
        self.labels.get(node).copied().unwrap_or(usize::MAX)
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GmPartition {
    /// Bridges of the current minor when reached.
    pub internal: EdgeSubset,
    /// Loops of the current minor when reached.
    pub external: EdgeSubset,
    /// Ordinary edges in `S`, contracted.
    pub s_internal: EdgeSubset,
    /// Ordinary edges outside `S`, deleted.
    pub s_external: EdgeSubset,
}

/// Walks the decision tree, resolving one edge per node. Bridge and loop
/// status is judged in the current minor `(G \ D) / C`.
pub fn gm_partition(g: &Graph, d: &dyn DecisionTree, s: EdgeSubset) -> Result<GmPartition> {
    let m = g.edge_count();
    let mut contracted = EdgeSubset::EMPTY;
    let mut remaining = g.all_edges();
    let mut history = Vec::with_capacity(m);
    let mut part = GmPartition::default();
    for _ in 0..m {
        let e = d.next_edge(&history);
        if e >= m || !remaining.contains(e) {
            return Err(Error::InvalidDecisionTree(format!(
                "label {e} after {history:?} is not an unresolved edge"
            )));
        }
        let alive = remaining.union(contracted);
        let is_loop = g.rank(contracted.with(e)) == g.rank(contracted);
        let is_bridge = !is_loop && g.rank(alive.without(e)) < g.rank(alive);
        remaining.remove(e);
        let branch = if is_bridge {
            part.internal.insert(e);
            Branch::Contract
        } else if is_loop {
            part.external.insert(e);
            Branch::Delete
        } else if s.contains(e) {
            part.s_internal.insert(e);
            Branch::Contract
        } else {
            part.s_external.insert(e);
            Branch::Delete
        };
        if branch == Branch::Contract {
            contracted.insert(e);
        }
        history.push((e, branch));
    }
    Ok(part)
}

/// `Σ_S x^{|S∩I|} w^{|S^c∩I|} y^{|S^c∩L|} z^{|S∩L|}`.
pub fn gm_expansion(g: &Graph, d: &dyn DecisionTree) -> Result<MultiPoly> {
    let m = g.edge_count();
    check_exhaustive(m)?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for s in EdgeSubset::all(m) {
        let p = gm_partition(g, d, s)?;
        let absent = g.all_edges().difference(s);
        let key = vec![
            p.internal.intersection(s).len() as u32,
            p.internal.intersection(absent).len() as u32,
            p.external.intersection(absent).len() as u32,
            p.external.intersection(s).len() as u32,
        ];
        *counts.entry(key).or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XWYZ, counts))
}

/// For every subset, compares the closure-based four-way partition with the
/// decision-tree partition under the decreasing edge order: internal sets
/// must coincide, and external sets must coincide.
pub fn gt_unification_check(g: &Graph) -> Result<bool> {
    let m = g.edge_count();
    check_exhaustive(m)?;
    let d = ConstantOrder::decreasing(m);
    for s in EdgeSubset::all(m) {
        let gt = gt_partition(g, s)?;
        let gm = gm_partition(g, &d, s)?;
        if gt.internal() != gm.internal || gt.external() != gm.external {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::tutte::{shift_to_four_variables, tutte_whitney};

    fn set(v: &[usize]) -> EdgeSubset {
        v.iter().copied().collect()
    }

    #[test]
    fn k3_hand_trace() {
        let g = k3();
        let p = gm_partition(&g, &ConstantOrder::increasing(3), set(&[0, 1])).unwrap();
        assert_eq!(
            p,
            GmPartition {
                internal: EdgeSubset::EMPTY,
                external: set(&[2]),
                s_internal: set(&[0, 1]),
                s_external: EdgeSubset::EMPTY,
            }
        );
    }

    #[test]
    fn trees_and_loops() {
        let g = path(4);
        let p = gm_partition(&g, &ConstantOrder::increasing(3), g.all_edges()).unwrap();
        assert_eq!(p.internal, g.all_edges());
        let l = single_loop();
        for s in EdgeSubset::all(1) {
            let p = gm_partition(&l, &ConstantOrder::increasing(1), s).unwrap();
            assert_eq!(p.external, set(&[0]));
        }
        assert_eq!(
            gm_expansion(&single_edge(), &ConstantOrder::increasing(1)).unwrap(),
            "x + w".parse().unwrap()
        );
    }

    #[test]
    fn expansion_independent_of_tree() {
        for g in [k3(), complete(4), bond(3)] {
            let expected = shift_to_four_variables(&tutte_whitney(&g).unwrap());
            let m = g.edge_count();
            assert_eq!(gm_expansion(&g, &ConstantOrder::increasing(m)).unwrap(), expected);
            for seed in 0..5 {
                let d = SeededChooser { seed, edge_count: m };
                assert_eq!(gm_expansion(&g, &d).unwrap(), expected);
            }
        }
    }

    #[test]
    fn explicit_trees() {
        let d = SeededChooser {
            seed: 7,
            edge_count: 3,
        };
        let t = ExplicitTree::materialize(&d, 3).unwrap();
        assert_eq!(t.labels().len(), 7);
        let g = k3();
        for s in EdgeSubset::all(3) {
            assert_eq!(gm_partition(&g, &t, s).unwrap(), gm_partition(&g, &d, s).unwrap());
        }
        assert!(ExplicitTree::new(2, vec![0, 0, 1]).is_err());
        assert!(ExplicitTree::new(2, vec![0, 1]).is_err());
        assert!(ExplicitTree::new(2, vec![1, 0, 0]).is_ok());
        assert!(ExplicitTree::new(13, vec![]).is_err());
    }

    #[test]
    fn invalid_labels_are_errors() {
        let g = k3();
        let d = ConstantOrder(vec![0, 0, 1]);
        assert!(gm_partition(&g, &d, EdgeSubset::EMPTY).is_err());
        let d = ConstantOrder(vec![0, 1]);
        assert!(gm_partition(&g, &d, EdgeSubset::EMPTY).is_err());
    }

    #[test]
    fn matches_closure_partition_under_decreasing_order() {
        for g in [k3(), complete(4), bond(3), cycle(4)] {
            assert!(gt_unification_check(&g).unwrap());
        }
    }

    #[test]
    fn increasing_order_differs_from_closure_partition() {
        // the hand-traced subset above: closure partition puts e0, e1 in I
        let g = k3();
        let gm = gm_partition(&g, &ConstantOrder::increasing(3), set(&[0, 1])).unwrap();
        assert_ne!(gt_partition(&g, set(&[0, 1])).unwrap().internal(), gm.internal);
    }
}
