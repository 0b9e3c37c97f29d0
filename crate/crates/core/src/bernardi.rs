//! Rooted combinatorial maps and the activities induced by touring a
//! spanning tree with the motion operator.
//!
//! Half-edge `(e, s)` is edge `e` seen from endpoint `s` (0 for the first
//! listed endpoint, 1 for the second). Internally it is the integer `2e + s`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::forest::{forest_activities_in_order, ForestActivitySets};
use crate::graph::Graph;
use crate::poly::MultiPoly;
use crate::tutte::XY;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfEdge {
    pub edge: usize,
    pub slot: usize,
}

impl HalfEdge {
    pub fn new(edge: usize, slot: usize) -> Self {
        HalfEdge { edge, slot }
    }

    fn id(self) -> usize {
        2 * self.edge + self.slot
    }

    fn from_id(id: usize) -> Self {
        HalfEdge::new(id / 2, id % 2)
    }

    /// The other half of the same edge.
    pub fn opposite(self) -> Self {
        HalfEdge::new(self.edge, self.slot ^ 1)
    }

    pub fn vertex(self, g: &Graph) -> usize {
        let (u, v) = g.endpoints(self.edge);
        if self.slot == 0 {
            u
        } else {
            v
        }
    }
}

impl std::fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.edge, self.slot)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialMap {
    graph: Graph,
    /// `sigma[id]` is the id of the next half-edge around the same vertex.
    sigma: Vec<usize>,
    root: Option<HalfEdge>,
}

impl CombinatorialMap {
    /// Rotation at each vertex follows the edge list; root is `(e0, 0)`.
    pub fn default_for(g: &Graph) -> Result<Self> {
        let rotations = Self::edge_list_rotations(g);
        let root = (g.edge_count() > 0).then(|| HalfEdge::new(0, 0));
        Self::from_rotations(g, &rotations, root)
    }

    fn edge_list_rotations(g: &Graph) -> Vec<Vec<HalfEdge>> {
        let mut rotations = vec![Vec::new(); g.vertex_count()];
        for e in 0..g.edge_count() {
            for slot in 0..2 {
                let h = HalfEdge::new(e, slot);
                rotations[h.vertex(g)].push(h);
            }
        }
        rotations
    }

    /// `rotations[v]` lists the half-edges at `v` in cyclic order.
    pub fn from_rotations(
        g: &Graph,
        rotations: &[Vec<HalfEdge>],
        root: Option<HalfEdge>,
    ) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::InvalidMap("graph is not connected".into()));
        }
        if g.has_loops() {
            return Err(Error::InvalidMap("graph has loops".into()));
        }
        if rotations.len() != g.vertex_count() {
            return Err(Error::InvalidMap(format!(
                "{} rotations for {} vertices",
                rotations.len(),
                g.vertex_count()
            )));
        }
        let mut sigma = vec![usize::MAX; 2 * g.edge_count()];
        for (v, cycle) in rotations.iter().enumerate() {
            for (i, &h) in cycle.iter().enumerate() {
                if h.edge >= g.edge_count() || h.slot > 1 {
                    return Err(Error::InvalidMap(format!("no half-edge {h}")));
                }
                if h.vertex(g) != v {
                    return Err(Error::InvalidMap(format!("{h} is not at vertex {v}")));
                }
                if sigma[h.id()] != usize::MAX {
                    return Err(Error::InvalidMap(format!("{h} listed twice")));
                }
                sigma[h.id()] = cycle[(i + 1) % cycle.len()].id();
            }
        }
        if let Some(id) = sigma.iter().position(|&s| s == usize::MAX) {
            return Err(Error::InvalidMap(format!(
                "{} missing from the rotations",
                HalfEdge::from_id(id)
            )));
        }
        match root {
            Some(h) if h.edge >= g.edge_count() || h.slot > 1 => {
                return Err(Error::InvalidMap(format!("root {h} does not exist")))
            }
            None if g.edge_count() > 0 => {
                return Err(Error::InvalidMap("a root half-edge is required".into()))
            }
            _ => {}
        }
        Ok(CombinatorialMap {
            graph: g.clone(),
            sigma,
            root,
        })
    }

    /// A map with each rotation shuffled and a random root, reproducible from
    /// `seed`.
    pub fn random(g: &Graph, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rotations = Self::edge_list_rotations(g);
        for r in &mut rotations {
            r.shuffle(&mut rng);
        }
        let all: Vec<HalfEdge> = (0..2 * g.edge_count()).map(HalfEdge::from_id).collect();
        let root = all.choose(&mut rng).copied();
        Self::from_rotations(g, &rotations, root)
    }

    /// Same rotations, different root.
    pub fn with_root(&self, root: HalfEdge) -> Result<Self> {
        Self::from_rotations(&self.graph, &self.rotations(), Some(root))
    }

    /// Parses lines `<vertex>: (e,s) (e,s) ...` and one line
    /// `root <edge> <vertex>`. The vertex prefix is optional; without it the
    /// vertex is read off the first half-edge. Vertices with no line get
    /// their edge-list rotation.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut rotations = Self::edge_list_rotations(g);
        let mut given = vec![false; g.vertex_count()];
        let mut root = None;
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("root") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| err(format!("bad number {t:?}"))))
                    .collect::<Result<_>>()?;
                let [edge, vertex] = nums[..] else {
                    return Err(err("expected `root <edge> <vertex>`".into()));
                };
                if edge >= g.edge_count() {
                    return Err(err(format!("no edge {edge}")));
                }
                let (u, v) = g.endpoints(edge);
                let slot = if vertex == u {
                    0
                } else if vertex == v {
                    1
                } else {
                    return Err(err(format!("vertex {vertex} is not an endpoint of edge {edge}")));
                };
                root = Some(HalfEdge::new(edge, slot));
                continue;
            }
            let (prefix, body) = match line.split_once(':') {
                Some((p, b)) => (Some(p.trim()), b),
                None => (None, line),
            };
            let mut halves = Vec::new();
            for chunk in body.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let inner = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| err(format!("expected `(edge,slot)`, got {chunk:?}")))?;
                let (e, s) = inner
                    .split_once(',')
                    .ok_or_else(|| err(format!("expected `(edge,slot)`, got {chunk:?}")))?;
                let e: usize = e.trim().parse().map_err(|_| err(format!("bad edge {e:?}")))?;
                let s: usize = s.trim().parse().map_err(|_| err(format!("bad slot {s:?}")))?;
                if e >= g.edge_count() || s > 1 {
                    return Err(err(format!("no half-edge ({e},{s})")));
                }
                halves.push(HalfEdge::new(e, s));
            }
            let Some(first) = halves.first() else {
                return Err(err("empty rotation".into()));
            };
            let vertex = match prefix {
                Some(p) => p.parse().map_err(|_| err(format!("bad vertex {p:?}")))?,
                None => first.vertex(g),
            };
            if vertex >= g.vertex_count() {
                return Err(err(format!("no vertex {vertex}")));
            }
            if given[vertex] {
                return Err(err(format!("vertex {vertex} has two rotations")));
            }
            given[vertex] = true;
            rotations[vertex] = halves;
        }
        if root.is_none() && g.edge_count() > 0 {
            root = Some(HalfEdge::new(0, 0));
        }
        Self::from_rotations(g, &rotations, root)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> Option<HalfEdge> {
        self.root
    }

    pub fn sigma(&self, h: HalfEdge) -> HalfEdge {
        HalfEdge::from_id(self.sigma[h.id()])
    }

    pub fn rotations(&self) -> Vec<Vec<HalfEdge>> {
        let g = &self.graph;
        let mut out = vec![Vec::new(); g.vertex_count()];
        let mut seen = vec![false; self.sigma.len()];
        for start in 0..self.sigma.len() {
            if seen[start] {
                continue;
            }
            let v = HalfEdge::from_id(start).vertex(g);
            let mut id = start;
            while !seen[id] {
                seen[id] = true;
                out[v].push(HalfEdge::from_id(id));
                id = self.sigma[id];
            }
        }
        out
    }

    /// True iff the half-edges at every vertex form a single cycle.
    pub fn is_valid(&self) -> bool {
        let g = &self.graph;
        let mut cycles = vec![0usize; g.vertex_count()];
        let mut seen = vec![false; self.sigma.len()];
        for start in 0..self.sigma.len() {
            if seen[start] {
                continue;
            }
            let v = HalfEdge::from_id(start).vertex(g);
            cycles[v] += 1;
            let mut id = start;
            while !seen[id] {
                seen[id] = true;
                if HalfEdge::from_id(id).vertex(g) != v {
                    return false;
                }
                id = self.sigma[id];
            }
        }
        cycles.iter().all(|&c| c <= 1)
    }
}

fn check_tree(map: &CombinatorialMap, t: EdgeSubset) -> Result<()> {
    if !map.graph.is_maximal_spanning_forest(t) {
        return Err(Error::NotMaximalForest(format!("{t} is not a spanning tree")));
    }
    Ok(())
}

/// The half-edges in the order visited by `h ↦ σ(h)` off the tree and
/// `h ↦ σ(α(h))` on it, starting at the root.
pub fn motion_tour(map: &CombinatorialMap, t: EdgeSubset) -> Result<Vec<HalfEdge>> {
    check_tree(map, t)?;
    let Some(root) = map.root else {
        return Ok(Vec::new());
    };
    let total = map.sigma.len();
    let mut tour = Vec::with_capacity(total);
    let mut h = root;
    loop {
        tour.push(h);
        h = if t.contains(h.edge) {
            map.sigma(h.opposite())
        } else {
            map.sigma(h)
        };
        if h == root || tour.len() > total {
            break;
        }
    }
    if tour.len() != total {
        return Err(Error::InvalidMap(format!(
            "tour closed after {} of {} half-edges",
            tour.len(),
            total
        )));
    }
    Ok(tour)
}

/// Edges in order of the first visit to either half.
pub fn tour_edge_order(map: &CombinatorialMap, t: EdgeSubset) -> Result<Vec<usize>> {
    let mut seen = EdgeSubset::EMPTY;
    let mut order = Vec::new();
    for h in motion_tour(map, t)? {
        if !seen.contains(h.edge) {
            seen.insert(h.edge);
            order.push(h.edge);
        }
    }
    Ok(order)
}

pub fn bernardi_activities(map: &CombinatorialMap, t: EdgeSubset) -> Result<ForestActivitySets> {
    let order = tour_edge_order(map, t)?;
    let mut position = vec![0; order.len()];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    forest_activities_in_order(&map.graph, t, &position)
}

/// `Σ_T x^{|I_B(T)|} y^{|E_B(T)|}` over spanning trees.
pub fn bernardi_expansion(map: &CombinatorialMap) -> Result<MultiPoly> {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for t in map.graph.maximal_spanning_forests() {
        let act = bernardi_activities(map, t)?;
        *counts
            .entry(vec![act.internal.len() as u32, act.external.len() as u32])
            .or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XY, counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::tutte::tutte_whitney;

    fn set(v: &[usize]) -> EdgeSubset {
        v.iter().copied().collect()
    }

    #[test]
    fn k3_tour_hand_trace() {
        let g = k3();
        let map = CombinatorialMap::default_for(&g).unwrap();
        let tour = motion_tour(&map, set(&[0, 1])).unwrap();
        let expected: Vec<HalfEdge> = [(0, 0), (1, 0), (2, 1), (1, 1), (0, 1), (2, 0)]
            .iter()
            .map(|&(e, s)| HalfEdge::new(e, s))
            .collect();
        assert_eq!(tour, expected);
        assert_eq!(tour_edge_order(&map, set(&[0, 1])).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn single_edge_tour() {
        let g = single_edge();
        let map = CombinatorialMap::default_for(&g).unwrap();
        assert_eq!(tour_edge_order(&map, set(&[0])).unwrap(), vec![0]);
        assert_eq!(motion_tour(&map, set(&[0])).unwrap().len(), 2);
    }

    #[test]
    fn k3_every_root_and_rotation() {
        let g = k3();
        let expected = tutte_whitney(&g).unwrap();
        // each vertex has degree two, so there is one rotation system
        let map = CombinatorialMap::default_for(&g).unwrap();
        for id in 0..6 {
            let m = map.with_root(HalfEdge::from_id(id)).unwrap();
            assert_eq!(bernardi_expansion(&m).unwrap(), expected);
        }
    }

    #[test]
    fn k4_several_maps() {
        let g = complete(4);
        let expected = tutte_whitney(&g).unwrap();
        assert_eq!(
            bernardi_expansion(&CombinatorialMap::default_for(&g).unwrap()).unwrap(),
            expected
        );
        for seed in 0..4 {
            let map = CombinatorialMap::random(&g, seed).unwrap();
            assert!(map.is_valid());
            assert_eq!(bernardi_expansion(&map).unwrap(), expected);
        }
    }

    #[test]
    fn paths_and_edgeless() {
        let g = path(5);
        let map = CombinatorialMap::default_for(&g).unwrap();
        assert_eq!(bernardi_expansion(&map).unwrap(), "x^4".parse().unwrap());
        let point = Graph::new(1, vec![]).unwrap();
        let map = CombinatorialMap::default_for(&point).unwrap();
        assert_eq!(bernardi_expansion(&map).unwrap(), "1".parse().unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CombinatorialMap::default_for(&single_loop()).is_err());
        assert!(CombinatorialMap::default_for(&Graph::new(3, vec![(0, 1)]).unwrap()).is_err());
        let g = k3();
        let bad = vec![
            vec![HalfEdge::new(0, 0)],
            vec![HalfEdge::new(0, 1), HalfEdge::new(1, 0)],
            vec![HalfEdge::new(1, 1), HalfEdge::new(2, 1)],
        ];
        assert!(CombinatorialMap::from_rotations(&g, &bad, Some(HalfEdge::new(0, 0))).is_err());
        let map = CombinatorialMap::default_for(&g).unwrap();
        assert!(motion_tour(&map, set(&[0])).is_err());
    }

    #[test]
    fn parse_rotation_file() {
        let g = complete(4);
        let text = "\
# K4 with a twisted rotation at vertex 0
0: (2,0) (0,0) (1,0)
1: (0,1) (3,0) (4,0)
root 3 2
";
        let map = CombinatorialMap::parse(&g, text).unwrap();
        assert_eq!(map.root(), Some(HalfEdge::new(3, 1)));
        assert_eq!(map.sigma(HalfEdge::new(2, 0)), HalfEdge::new(0, 0));
        assert_eq!(map.sigma(HalfEdge::new(1, 0)), HalfEdge::new(2, 0));
        assert_eq!(bernardi_expansion(&map).unwrap(), tutte_whitney(&g).unwrap());
        assert!(CombinatorialMap::parse(&g, "0: (3,0)").is_err());
        assert!(CombinatorialMap::parse(&g, "root 0 3").is_err());
        assert!(CombinatorialMap::parse(&g, "0: (0,0) (1,0)").is_err());
    }
}
