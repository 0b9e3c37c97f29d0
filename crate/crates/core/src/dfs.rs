//! Depth-first-search external activity of spanning trees.
//!
//! Vertices carry a total order. Searches start at the smallest vertex and
//! always step to the largest unvisited neighbour. A non-tree edge is
//! DFS-externally active when searching the tree plus that edge gives back
//! the tree.
//!
//! The expansion pairs this with Tutte's internal activity. The edge order
//! used for the internal side is lexicographic on `(smaller label, larger
//! label)`. No fixed edge order makes the pairing reproduce `T(G; x, y)` for
//! every vertex labelling: on `K4` minus an edge, labelled so that the root
//! has degree two and the missing edge joins the root to the next-smallest
//! vertex, every one of the `5!` edge orders fails. The chosen order is the
//! one that agrees on the most labelled graphs with at most four vertices.

use std::collections::HashMap;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::forest::forest_activities_in_order;
use crate::graph::{check_permutation, Graph};
use crate::poly::MultiPoly;
use crate::tutte::XY;

/// A total order on vertices. `label[v]` is the rank of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    label: Vec<usize>,
}

impl VertexOrder {
    pub fn identity(n: usize) -> Self {
        VertexOrder {
            label: (0..n).collect(),
        }
    }

    /// `sequence` lists the vertices from smallest to largest.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self> {
        check_permutation(sequence, sequence.len())?;
        let mut label = vec![0; sequence.len()];
        for (rank, &v) in sequence.iter().enumerate() {
            label[v] = rank;
        }
        Ok(VertexOrder { label })
    }

    pub fn label(&self, v: usize) -> usize {
        self.label[v]
    }

    pub fn len(&self) -> usize {
        self.label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.label.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        (0..self.label.len()).min_by_key(|&v| self.label[v])
    }

    /// Vertices from smallest to largest.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.label.len()).collect();
        seq.sort_by_key(|&v| self.label[v]);
        seq
    }
}

/// A forest with every tree oriented away from its root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedForest {
    pub edges: EdgeSubset,
    /// `(parent vertex, tree edge)` for every non-root vertex.
    pub parent: Vec<Option<(usize, usize)>>,
    pub roots: Vec<usize>,
}

impl RootedForest {
    /// Orients the forest `f` away from the smallest vertex of each tree.
    pub fn orient(g: &Graph, f: EdgeSubset, order: &VertexOrder) -> Result<Self> {
        if !g.is_independent(f) {
            return Err(Error::Precondition(format!("{f} contains a cycle")));
        }
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut roots = Vec::new();
        for r in order.sequence() {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            roots.push(r);
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for e in f {
                    let (a, b) = g.endpoints(e);
                    let y = if a == x { b } else if b == x { a } else { continue };
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, e));
                        stack.push(y);
                    }
                }
            }
        }
        Ok(RootedForest {
            edges: f,
            parent,
            roots,
        })
    }

    pub fn is_ancestor(&self, a: usize, mut b: usize) -> bool {
        loop {
            if a == b {
                return true;
            }
            match self.parent[b] {
                Some((p, _)) => b = p,
                None => return false,
            }
        }
    }

    /// Child of `ancestor` on the tree path down to `descendant`.
    fn child_towards(&self, ancestor: usize, mut descendant: usize) -> usize {
        loop {
            let (p, _) = self.parent[descendant].expect("descendant below ancestor");
            if p == ancestor {
                return descendant;
            }
            descendant = p;
        }
    }
}

fn check_dfs_graph(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition("DFS activity needs a connected graph".into()));
    }
    if g.has_parallel_edges() {
        return Err(Error::Precondition("DFS activity needs a graph without parallel edges".into()));
    }
    Ok(())
}

fn check_order(g: &Graph, order: &VertexOrder) -> Result<()> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidPermutation(format!(
            "vertex order has {} entries for {} vertices",
            order.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// The forest found by searching `(V, s)` from the smallest vertex, always
/// moving to the largest unvisited neighbour, and restarting at the smallest
/// unvisited vertex when a tree is exhausted. Loops are never tree edges.
pub fn dfs_canonical_forest(g: &Graph, s: EdgeSubset, order: &VertexOrder) -> Result<RootedForest> {
    check_dfs_graph(g)?;
    check_order(g, order)?;
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in s {
        let (u, v) = g.endpoints(e);
        if u != v {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
    }
    for list in &mut adj {
        list.sort_by_key(|&(v, _)| std::cmp::Reverse(order.label(v)));
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    let mut edges = EdgeSubset::EMPTY;
    for r in order.sequence() {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let mut stack = vec![(r, 0usize)];
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if let Some(&(y, e)) = adj[x].get(*next) {
                *next += 1;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    edges.insert(e);
                    stack.push((y, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    Ok(RootedForest {
        edges,
        parent,
        roots,
    })
}

/// Definitional test: `e = (u, v)` is active iff it is a loop, or `u` is an
/// ancestor of `v` and the child `w` of `u` towards `v` is larger than `v`.
pub fn dfs_external_active(
    g: &Graph,
    t: &RootedForest,
    e: usize,
    order: &VertexOrder,
) -> Result<bool> {
    g.check_edge(e)?;
    if t.edges.contains(e) {
        return Err(Error::EdgeMembership {
            edge: e,
            detail: "a tree edge",
        });
    }
    let (a, b) = g.endpoints(e);
    if a == b {
        return Ok(true);
    }
    let (u, v) = if t.is_ancestor(a, b) {
        (a, b)
    } else if t.is_ancestor(b, a) {
        (b, a)
    } else {
        return Ok(false);
    };
    let w = t.child_towards(u, v);
    Ok(order.label(w) > order.label(v))
}

/// Operational test: searching `t ∪ {e}` returns `t`.
pub fn dfs_external_active_by_search(
    g: &Graph,
    t: &RootedForest,
    e: usize,
    order: &VertexOrder,
) -> Result<bool> {
    g.check_edge(e)?;
    if t.edges.contains(e) {
        return Err(Error::EdgeMembership {
            edge: e,
            detail: "a tree edge",
        });
    }
    Ok(dfs_canonical_forest(g, t.edges.with(e), order)?.edges == t.edges)
}

/// Position of each edge in the order used for internal activity:
/// lexicographic on `(smaller label, larger label)`, ties by edge index.
pub fn induced_edge_positions(g: &Graph, order: &VertexOrder) -> Vec<usize> {
    let key = |e: usize| {
        let (u, v) = g.endpoints(e);
        let (a, b) = (order.label(u), order.label(v));
        (a.min(b), a.max(b), e)
    };
    let mut edges: Vec<usize> = (0..g.edge_count()).collect();
    edges.sort_by_key(|&e| key(e));
    let mut position = vec![0; g.edge_count()];
    for (p, e) in edges.into_iter().enumerate() {
        position[e] = p;
    }
    position
}

/// `Σ_T x^{|I(T)|} y^{|E_DFS(T)|}` over spanning trees.
pub fn dfs_expansion(g: &Graph, order: &VertexOrder) -> Result<MultiPoly> {
    check_dfs_graph(g)?;
    check_order(g, order)?;
    let position = induced_edge_positions(g, order);
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for t in g.maximal_spanning_forests() {
        let rooted = RootedForest::orient(g, t, order)?;
        let internal = forest_activities_in_order(g, t, &position)?.internal.len();
        let mut external = 0;
        for e in g.all_edges().difference(t) {
            if dfs_external_active(g, &rooted, e, order)? {
                external += 1;
            }
        }
        *counts
            .entry(vec![internal as u32, external])
            .or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XY, counts))
}
