//! Exhaustive small-graph corpus: every connected multigraph, loops allowed,
//! up to isomorphism.

use std::collections::BTreeSet;

use crate::graph::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// The lexicographically smallest sorted edge list over all vertex
/// relabellings.
pub fn canonical_edges(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_else(|| {
            debug_assert_eq!(n, 0);
            Vec::new()
        })
}

fn extend(
    n: usize,
    pairs: &[(usize, usize)],
    start: usize,
    max_edges: usize,
    current: &mut Vec<(usize, usize)>,
    perms: &[Vec<usize>],
    seen: &mut BTreeSet<(usize, Vec<(usize, usize)>)>,
) {
    let g = Graph::new(n, current.clone()).expect("pairs are in range");
    if g.is_connected() {
        seen.insert((current.len(), canonical_edges(n, current, perms)));
    }
    if current.len() == max_edges {
        return;
    }
    for i in start..pairs.len() {
        current.push(pairs[i]);
        extend(n, pairs, i, max_edges, current, perms, seen);
        current.pop();
    }
}

/// Connected multigraphs with `1..=max_vertices` vertices and at most
/// `max_edges` edges, one per isomorphism class, ordered by vertex count,
/// edge count, then edge list. Edges are listed in canonical order.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u..n).map(move |v| (u, v)))
            .collect();
        let mut seen = BTreeSet::new();
        extend(n, &pairs, 0, max_edges, &mut Vec::new(), &perms, &mut seen);
        out.extend(
            seen.into_iter()
                .map(|(_, edges)| Graph::new(n, edges).expect("canonical edges are in range")),
        );
    }
    out
}

/// Graphs without loops or parallel edges.
pub fn is_simple(g: &Graph) -> bool {
    !g.has_loops() && !g.has_parallel_edges()
}
