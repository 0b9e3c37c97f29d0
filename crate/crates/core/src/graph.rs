//! Multigraphs with a fixed edge order, their graphic-matroid rank function,
//! minors, and fundamental cuts and cycles.
//!
//! The total order on edges used by every activity notion is the position in
//! the edge list. Loops and parallel edges are allowed throughout.

use std::fmt;
use std::str::FromStr;

use crate::edgeset::{EdgeSubset, MAX_EDGES};
use crate::error::{Error, Result};

/// Upper bound on `m` for anything that sums or scans over all `2^m` subsets.
pub const EXHAUSTIVE_CAP: usize = 20;

pub(crate) fn check_exhaustive(m: usize) -> Result<()> {
    if m > EXHAUSTIVE_CAP {
        return Err(Error::ExhaustiveCap {
            what: "edges",
            cap: EXHAUSTIVE_CAP,
            actual: m,
        });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges {
                edges: edges.len(),
                cap: MAX_EDGES,
            });
        }
        for &(u, v) in &edges {
            for endpoint in [u, v] {
                if endpoint >= vertex_count {
                    return Err(Error::EndpointOutOfRange {
                        endpoint,
                        vertex_count,
                    });
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn all_edges(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::NoSuchEdge(e));
        }
        Ok(())
    }

    fn dsu_of(&self, a: EdgeSubset) -> Dsu {
        let mut dsu = Dsu::new(self.vertex_count);
        for e in a {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        dsu
    }

    /// Size of a largest forest inside `a`.
    pub fn rank(&self, a: EdgeSubset) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        a.iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                dsu.union(u, v)
            })
            .count()
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.all_edges())
    }

    /// Number of connected components of the spanning subgraph `(V, a)`.
    pub fn component_count(&self, a: EdgeSubset) -> usize {
        self.vertex_count - self.rank(a)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.all_edges()) <= 1
    }

    pub fn is_independent(&self, a: EdgeSubset) -> bool {
        self.rank(a) == a.len()
    }

    /// Closure: `a` plus every edge whose addition does not raise the rank.
    pub fn closure(&self, a: EdgeSubset) -> EdgeSubset {
        let mut dsu = self.dsu_of(a);
        let mut cl = a;
        for e in self.all_edges().difference(a) {
            let (u, v) = self.edges[e];
            if dsu.find(u) == dsu.find(v) {
                cl.insert(e);
            }
        }
        cl
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn is_bridge(&self, e: usize) -> bool {
        let all = self.all_edges();
        self.rank(all.without(e)) < self.rank(all)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.edge_count()).any(|e| self.is_loop(e))
    }

    /// True when two non-loop edges share both endpoints.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .filter(|(u, v)| u != v)
            .any(|&(u, v)| !seen.insert((u.min(v), u.max(v))))
    }

    /// Removes the edges of `a`. Surviving edges keep their relative order.
    pub fn delete(&self, a: EdgeSubset) -> Graph {
        let edges = self
            .all_edges()
            .difference(a)
            .iter()
            .map(|e| self.edges[e])
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// `G|a`: keeps only the edges of `a`.
    pub fn restrict(&self, a: EdgeSubset) -> Graph {
        self.delete(self.all_edges().difference(a))
    }

    /// Merges the endpoints of every non-loop edge of `a`, then removes `a`.
    /// Contracting a loop is the same as deleting it. Vertices of the minor
    /// are the merged classes, numbered by their smallest original vertex.
    pub fn contract(&self, a: EdgeSubset) -> Graph {
        let mut dsu = self.dsu_of(a);
        let mut class = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = dsu.find(v);
            if class[r] == usize::MAX {
                class[r] = next;
                next += 1;
            }
        }
        let edges = self
            .all_edges()
            .difference(a)
            .iter()
            .map(|e| {
                let (u, v) = self.edges[e];
                (class[dsu.find(u)], class[dsu.find(v)])
            })
            .collect();
        Graph {
            vertex_count: next,
            edges,
        }
    }

    /// Maps an edge subset of `self` onto the edge indices of a minor whose
    /// surviving edges are `kept` (in order).
    pub fn project(kept: EdgeSubset, a: EdgeSubset) -> EdgeSubset {
        kept.iter()
            .enumerate()
            .filter(|&(_, e)| a.contains(e))
            .map(|(i, _)| i)
            .collect()
    }

    /// Inverse of [`Graph::project`].
    pub fn lift(kept: EdgeSubset, a: EdgeSubset) -> EdgeSubset {
        kept.iter()
            .enumerate()
            .filter(|&(i, _)| a.contains(i))
            .map(|(_, e)| e)
            .collect()
    }

    /// Reorders the edge list: edge `i` of the result is edge `order[i]` of
    /// `self`.
    pub fn permute_edges(&self, order: &[usize]) -> Result<Graph> {
        check_permutation(order, self.edge_count())?;
        Ok(Graph {
            vertex_count: self.vertex_count,
            edges: order.iter().map(|&e| self.edges[e]).collect(),
        })
    }

    /// Renames vertex `v` to `map[v]`.
    pub fn relabel_vertices(&self, map: &[usize]) -> Result<Graph> {
        check_permutation(map, self.vertex_count)?;
        Ok(Graph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect(),
        })
    }

    pub fn is_maximal_spanning_forest(&self, f: EdgeSubset) -> bool {
        f.is_subset(self.all_edges()) && self.is_independent(f) && f.len() == self.full_rank()
    }

    pub(crate) fn check_forest(&self, f: EdgeSubset) -> Result<()> {
        if !self.is_maximal_spanning_forest(f) {
            return Err(Error::NotMaximalForest(format!("{f}")));
        }
        Ok(())
    }

    /// Every maximal spanning forest, each exactly once, in lexicographic
    /// order of their edge lists.
    pub fn maximal_spanning_forests(&self) -> Vec<EdgeSubset> {
        let target = self.full_rank();
        let mut out = Vec::new();
        let mut dsu = Dsu::new(self.vertex_count);
        self.forests_from(0, EdgeSubset::EMPTY, &mut dsu, target, &mut out);
        out
    }

    fn forests_from(
        &self,
        i: usize,
        chosen: EdgeSubset,
        dsu: &mut Dsu,
        target: usize,
        out: &mut Vec<EdgeSubset>,
    ) {
        if chosen.len() == target {
            out.push(chosen);
            return;
        }
        let rest = self.all_edges().above(i).with(i).intersection(self.all_edges());
        if i >= self.edge_count() || self.rank(chosen.union(rest)) < target {
            return;
        }
        let (u, v) = self.edges[i];
        if dsu.find(u) != dsu.find(v) {
            let saved = dsu.clone();
            dsu.union(u, v);
            self.forests_from(i + 1, chosen.with(i), dsu, target, out);
            *dsu = saved;
        }
        self.forests_from(i + 1, chosen, dsu, target, out);
    }

    /// Edges of the unique path in forest `f` between `a` and `b`, or `None`
    /// when they lie in different trees.
    fn forest_path(&self, f: EdgeSubset, a: usize, b: usize) -> Option<EdgeSubset> {
        let mut parent_edge = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        let mut queue = std::collections::VecDeque::from([a]);
        seen[a] = true;
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for e in f {
                let (u, v) = self.edges[e];
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    parent_edge[y] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        if !seen[b] {
            return None;
        }
        let mut path = EdgeSubset::EMPTY;
        let mut x = b;
        while x != a {
            let (e, prev) = parent_edge[x].expect("path reconstruction");
            path.insert(e);
            x = prev;
        }
        Some(path)
    }

    /// The unique circuit in `f ∪ {e}`; `{e}` when `e` is a loop.
    pub fn fundamental_cycle(&self, f: EdgeSubset, e: usize) -> Result<EdgeSubset> {
        self.check_edge(e)?;
        self.check_forest(f)?;
        if f.contains(e) {
            return Err(Error::EdgeMembership {
                edge: e,
                detail: "in the forest; fundamental cycles need a non-forest edge",
            });
        }
        let (u, v) = self.edges[e];
        let path = self
            .forest_path(f, u, v)
            .expect("maximal spanning forest spans every component");
        Ok(path.with(e))
    }

    /// The unique cocircuit inside `(E \ f) ∪ {e}`.
    pub fn fundamental_cut(&self, f: EdgeSubset, e: usize) -> Result<EdgeSubset> {
        self.check_edge(e)?;
        self.check_forest(f)?;
        if !f.contains(e) {
            return Err(Error::EdgeMembership {
                edge: e,
                detail: "not in the forest; fundamental cuts need a forest edge",
            });
        }
        let mut dsu = self.dsu_of(f.without(e));
        let (u, v) = self.edges[e];
        let (su, sv) = (dsu.find(u), dsu.find(v));
        Ok((0..self.edge_count())
            .filter(|&x| {
                let (a, b) = self.edges[x];
                let (ra, rb) = (dsu.find(a), dsu.find(b));
                (ra == su && rb == sv) || (ra == sv && rb == su)
            })
            .collect())
    }

    pub fn is_circuit(&self, c: EdgeSubset) -> bool {
        if c.is_empty() || self.rank(c) + 1 != c.len() {
            return false;
        }
        c.iter().all(|e| self.rank(c.without(e)) + 1 == c.len())
    }

    pub fn is_cocircuit(&self, d: EdgeSubset) -> bool {
        let all = self.all_edges();
        let r = self.rank(all);
        if d.is_empty() || self.rank(all.difference(d)) + 1 != r {
            return false;
        }
        d.iter()
            .all(|e| self.rank(all.difference(d).with(e)) == r)
    }

    /// All circuits (edge sets of cycles, including loops and digons).
    pub fn circuits(&self) -> Result<Vec<EdgeSubset>> {
        check_exhaustive(self.edge_count())?;
        Ok(EdgeSubset::all(self.edge_count())
            .filter(|&c| self.is_circuit(c))
            .collect())
    }

    /// All cocircuits (minimal edge cuts).
    pub fn cocircuits(&self) -> Result<Vec<EdgeSubset>> {
        check_exhaustive(self.edge_count())?;
        Ok(EdgeSubset::all(self.edge_count())
            .filter(|&d| self.is_cocircuit(d))
            .collect())
    }

    /// Whether some cocircuit `D ⊆ x` has `e` as its smallest edge.
    ///
    /// Such a `D` exists iff `e` is outside the closure of
    /// `(E \ x) ∪ {f ∈ x : f < e}`.
    pub fn min_in_some_cocircuit_within(&self, e: usize, x: EdgeSubset) -> Result<bool> {
        self.check_edge(e)?;
        if !x.contains(e) {
            return Err(Error::EdgeMembership {
                edge: e,
                detail: "outside the search set",
            });
        }
        let blocked = self.all_edges().difference(x).union(x.below(e));
        Ok(self.rank(blocked.with(e)) > self.rank(blocked))
    }

    /// Whether some circuit `C ⊆ x` has `e` as its smallest edge.
    ///
    /// Such a `C` exists iff `e` lies in the closure of `{f ∈ x : f > e}`.
    pub fn min_in_some_circuit_within(&self, e: usize, x: EdgeSubset) -> Result<bool> {
        self.check_edge(e)?;
        if !x.contains(e) {
            return Err(Error::EdgeMembership {
                edge: e,
                detail: "outside the search set",
            });
        }
        let larger = x.above(e);
        Ok(self.rank(larger.with(e)) == self.rank(larger))
    }
}

pub(crate) fn check_permutation(p: &[usize], n: usize) -> Result<()> {
    if p.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "length {} but {} items",
            p.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &i in p {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidPermutation(format!(
                "{p:?} is not a bijection on 0..{n}"
            )));
        }
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={}, E={:?})", self.vertex_count, self.edges)
    }
}

/// The text format: `V <n>` followed by one `<u> <v>` line per edge.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "V {}", self.vertex_count)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a nonnegative integer, found {tok:?}"),
    })
}

/// Parses a stream holding one or more graphs; each starts at a `V` line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    // (vertex count, edges, header line) of the graph being read
    type Pending = (usize, Vec<(usize, usize)>, usize);
    let mut current: Option<Pending> = None;
    let finish = |cur: Pending| -> Result<Graph> {
        let (n, edges, line) = cur;
        Graph::new(n, edges).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks[0] == "V" {
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: "vertex header must be `V <n>`".into(),
                });
            }
            if let Some(cur) = current.take() {
                graphs.push(finish(cur)?);
            }
            current = Some((parse_usize(toks[1], line)?, Vec::new(), line));
            continue;
        }
        let Some((n, edges, _)) = current.as_mut() else {
            return Err(Error::Parse {
                line,
                message: "edge before the `V <n>` header".into(),
            });
        };
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                message: "edge lines must be `<u> <v>`".into(),
            });
        }
        let (u, v) = (parse_usize(toks[0], line)?, parse_usize(toks[1], line)?);
        if u >= *n || v >= *n {
            return Err(Error::Parse {
                line,
                message: format!("endpoint out of range for {n} vertices"),
            });
        }
        edges.push((u, v));
    }
    if let Some(cur) = current.take() {
        graphs.push(finish(cur)?);
    }
    if graphs.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `V <n>` header".into(),
        });
    }
    Ok(graphs)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let mut graphs = parse_graphs(s)?;
        if graphs.len() != 1 {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected one graph, found {}", graphs.len()),
            });
        }
        Ok(graphs.pop().unwrap())
    }
}

/// Small named graphs used across tests and examples.
pub mod named {
    use super::Graph;

    /// Triangle with edges `e0={0,1} < e1={1,2} < e2={0,2}`.
    pub fn k3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).unwrap()
    }

    pub fn single_loop() -> Graph {
        Graph::new(1, vec![(0, 0)]).unwrap()
    }

    pub fn single_edge() -> Graph {
        Graph::new(2, vec![(0, 1)]).unwrap()
    }

    /// `k` parallel edges between two vertices.
    pub fn bond(k: usize) -> Graph {
        Graph::new(2, vec![(0, 1); k]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn set(v: &[usize]) -> EdgeSubset {
        v.iter().copied().collect()
    }

    #[test]
    fn rank_examples() {
        let g = k3();
        assert_eq!(g.rank(EdgeSubset::EMPTY), 0);
        assert_eq!(g.rank(g.all_edges()), 2);
        assert_eq!(single_loop().rank(set(&[0])), 0);
    }

    #[test]
    fn minors() {
        let g = k3();
        let c = g.contract(set(&[0]));
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges(), &[(0, 1), (0, 1)]);
        let d = g.delete(set(&[2]));
        assert_eq!(d.edges(), &[(0, 1), (1, 2)]);
        let lg = Graph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(lg.contract(set(&[0])), lg.delete(set(&[0])));
    }

    #[test]
    fn bridges_and_loops() {
        assert!(single_edge().is_bridge(0));
        assert!(single_loop().is_loop(0));
        assert!(!single_loop().is_bridge(0));
        assert!(!k3().is_bridge(0));
        assert!(!k3().is_loop(0));
    }

    #[test]
    fn forest_enumeration() {
        assert_eq!(
            k3().maximal_spanning_forests(),
            vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]
        );
        assert_eq!(single_loop().maximal_spanning_forests(), vec![EdgeSubset::EMPTY]);
        assert_eq!(complete(4).maximal_spanning_forests().len(), 16);
        let disconnected = Graph::new(4, vec![(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(disconnected.maximal_spanning_forests().len(), 2);
    }

    #[test]
    fn fundamental_cut_and_cycle() {
        let g = k3();
        assert_eq!(g.fundamental_cut(set(&[0, 1]), 0).unwrap(), set(&[0, 2]));
        assert_eq!(g.fundamental_cut(set(&[0, 2]), 2).unwrap(), set(&[1, 2]));
        assert_eq!(single_edge().fundamental_cut(set(&[0]), 0).unwrap(), set(&[0]));
        assert_eq!(g.fundamental_cycle(set(&[0, 1]), 2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(
            single_loop().fundamental_cycle(EdgeSubset::EMPTY, 0).unwrap(),
            set(&[0])
        );
        assert_eq!(bond(2).fundamental_cycle(set(&[0]), 1).unwrap(), set(&[0, 1]));
        assert!(g.fundamental_cut(set(&[0, 1]), 2).is_err());
        assert!(g.fundamental_cycle(set(&[0, 1]), 1).is_err());
        assert!(g.fundamental_cycle(set(&[0]), 1).is_err());
    }

    #[test]
    fn circuits_and_cocircuits() {
        let g = k3();
        assert_eq!(g.circuits().unwrap(), vec![set(&[0, 1, 2])]);
        let mut cocircuits = g.cocircuits().unwrap();
        cocircuits.sort_by_key(|s| s.iter().collect::<Vec<_>>());
        assert_eq!(cocircuits, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
        assert_eq!(single_loop().circuits().unwrap(), vec![set(&[0])]);
        assert!(single_loop().cocircuits().unwrap().is_empty());
    }

    #[test]
    fn min_in_some_examples() {
        let g = k3();
        let all = g.all_edges();
        assert!(g.min_in_some_cocircuit_within(0, all).unwrap());
        assert!(!g.min_in_some_cocircuit_within(2, all).unwrap());
        assert!(!single_loop()
            .min_in_some_cocircuit_within(0, set(&[0]))
            .unwrap());
        assert!(single_loop().min_in_some_circuit_within(0, set(&[0])).unwrap());
        assert!(g.min_in_some_circuit_within(0, all).unwrap());
        assert!(!g.min_in_some_circuit_within(1, all).unwrap());
        assert!(g.min_in_some_cocircuit_within(0, set(&[1])).is_err());
    }

    #[test]
    fn parse_and_print() {
        let text = "# triangle\nV 3\n0 1\n\n1 2 # middle\n0 2\n";
        let g: Graph = text.parse().unwrap();
        assert_eq!(g, k3());
        assert_eq!(g.to_string().parse::<Graph>().unwrap(), g);
        let err = "V 2\n0 5\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = "0 1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!("V x\n".parse::<Graph>().is_err());
        let many = parse_graphs("V 1\n0 0\nV 2\n0 1\n").unwrap();
        assert_eq!(many.len(), 2);
    }

    #[test]
    fn permutation_validation() {
        let g = k3();
        assert!(g.permute_edges(&[0, 0, 1]).is_err());
        assert!(g.permute_edges(&[0, 1]).is_err());
        assert_eq!(g.permute_edges(&[2, 0, 1]).unwrap().endpoints(0), (0, 2));
    }

    #[test]
    fn project_and_lift_roundtrip() {
        let kept = set(&[1, 3, 4]);
        let a = set(&[3, 4]);
        assert_eq!(Graph::project(kept, a), set(&[1, 2]));
        assert_eq!(Graph::lift(kept, set(&[1, 2])), a);
    }
}
