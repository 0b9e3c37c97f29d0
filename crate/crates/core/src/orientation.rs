//! Orientation activities. An orientation records which edges are reversed
//! against the reference direction, which is the edge tuple `(u, v)` read as
//! `u → v`.

use std::collections::HashMap;

use num_traits::One;
use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::graph::{check_exhaustive, Graph};
use crate::poly::{integer, MultiPoly, Rational, Var};
use crate::tutte::XWYZ;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Orientation {
    pub reversed: EdgeSubset,
}

impl Orientation {
    pub fn reference() -> Self {
        Orientation::default()
    }

    pub fn reversing(reversed: EdgeSubset) -> Self {
        Orientation { reversed }
    }

    pub fn agrees(self, e: usize) -> bool {
        !self.reversed.contains(e)
    }

    /// `(tail, head)` of `e`.
    pub fn arc(self, g: &Graph, e: usize) -> (usize, usize) {
        let (u, v) = g.endpoints(e);
        if self.agrees(e) {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn all(m: usize) -> impl Iterator<Item = Orientation> {
        EdgeSubset::all(m).map(Orientation::reversing)
    }
}

/// The same graph with the listed edges' reference direction swapped.
pub fn flip_reference(g: &Graph, flip: EdgeSubset) -> Result<Graph> {
    for e in flip {
        g.check_edge(e)?;
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| if flip.contains(e) { (v, u) } else { (u, v) })
        .collect();
    Graph::new(g.vertex_count(), edges)
}

fn reachable_from(g: &Graph, o: Orientation, start: usize) -> Vec<bool> {
    let mut out = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (t, h) = o.arc(g, e);
        out[t].push(h);
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &out[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Edges on some directed cycle: loops, and arcs `u → v` with `u`
/// reachable from `v`.
pub fn directed_cycle_edges(g: &Graph, o: Orientation) -> EdgeSubset {
    let reach: Vec<Vec<bool>> = (0..g.vertex_count())
        .map(|v| reachable_from(g, o, v))
        .collect();
    (0..g.edge_count())
        .filter(|&e| {
            let (t, h) = o.arc(g, e);
            reach[h][t]
        })
        .collect()
}

/// Edges in some directed cut. Every edge lies on a directed cycle or in a
/// directed cut and never both, so this is the complement of the cycle
/// edges.
pub fn directed_cut_edges(g: &Graph, o: Orientation) -> EdgeSubset {
    directed_cycle_edges(g, o).complement(g.edge_count())
}

/// Union of `δ(X)` over vertex sets `X` with every edge of `δ(X)` leaving
/// `X`. Exponential in the number of vertices.
pub fn directed_cut_edges_brute(g: &Graph, o: Orientation) -> Result<EdgeSubset> {
    check_exhaustive(g.vertex_count())?;
    let mut found = EdgeSubset::EMPTY;
    for x in 0u64..(1u64 << g.vertex_count()) {
        let inside = |v: usize| x >> v & 1 == 1;
        let mut cut = EdgeSubset::EMPTY;
        let mut directed = true;
        for e in 0..g.edge_count() {
            let (t, h) = o.arc(g, e);
            match (inside(t), inside(h)) {
                (true, false) => cut.insert(e),
                (false, true) => directed = false,
                _ => {}
            }
        }
        if directed {
            found = found.union(cut);
        }
    }
    Ok(found)
}

/// A circuit or cocircuit with the edges that point one fixed way around it
/// (along a traversal, or out of one shore) in the reference direction.
#[derive(Copy, Clone, Debug)]
struct Signed {
    set: EdgeSubset,
    forward: EdgeSubset,
}

impl Signed {
    fn is_directed(self, o: Orientation) -> bool {
        let along = self.forward.union(o.reversed).difference(self.forward.intersection(o.reversed));
        let along = along.intersection(self.set);
        along == self.set || along.is_empty()
    }
}

fn signed_circuit(g: &Graph, c: EdgeSubset) -> Signed {
    let first = c.first().expect("circuits are nonempty");
    let mut forward = EdgeSubset::singleton(first);
    let (start, mut at) = g.endpoints(first);
    let mut used = EdgeSubset::singleton(first);
    while at != start {
        let e = c
            .difference(used)
            .iter()
            .find(|&e| {
                let (u, v) = g.endpoints(e);
                u == at || v == at
            })
            .expect("circuit is a closed walk");
        used.insert(e);
        let (u, v) = g.endpoints(e);
        if u == at {
            forward.insert(e);
            at = v;
        } else {
            at = u;
        }
    }
    Signed { set: c, forward }
}

fn signed_cocircuit(g: &Graph, d: EdgeSubset) -> Signed {
    let rest = g.all_edges().difference(d);
    let (u, _) = g.endpoints(d.first().expect("cocircuits are nonempty"));
    let mut shore = vec![false; g.vertex_count()];
    shore[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for e in rest {
            let (a, b) = g.endpoints(e);
            let y = if a == x { b } else if b == x { a } else { continue };
            if !shore[y] {
                shore[y] = true;
                stack.push(y);
            }
        }
    }
    let forward = d.iter().filter(|&e| shore[g.endpoints(e).0]).collect();
    Signed { set: d, forward }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrientationActivitySets {
    pub cut_pos: EdgeSubset,
    pub cut_neg: EdgeSubset,
    pub cyc_pos: EdgeSubset,
    pub cyc_neg: EdgeSubset,
}

impl OrientationActivitySets {
    pub fn cut(&self) -> EdgeSubset {
        self.cut_pos.union(self.cut_neg)
    }

    pub fn cyc(&self) -> EdgeSubset {
        self.cyc_pos.union(self.cyc_neg)
    }
}

/// Circuits and cocircuits of a graph with their reference signs, computed
/// once and reused across orientations.
pub struct SignedCircuits {
    circuits: Vec<Signed>,
    cocircuits: Vec<Signed>,
}

impl SignedCircuits {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(SignedCircuits {
            circuits: g.circuits()?.into_iter().map(|c| signed_circuit(g, c)).collect(),
            cocircuits: g
                .cocircuits()?
                .into_iter()
                .map(|d| signed_cocircuit(g, d))
                .collect(),
        })
    }

    pub fn activities(&self, o: Orientation) -> OrientationActivitySets {
        let mut act = OrientationActivitySets::default();
        for d in &self.cocircuits {
            if d.is_directed(o) {
                let e = d.set.first().expect("nonempty");
                if o.agrees(e) {
                    act.cut_pos.insert(e);
                } else {
                    act.cut_neg.insert(e);
                }
            }
        }
        for c in &self.circuits {
            if c.is_directed(o) {
                let e = c.set.first().expect("nonempty");
                if o.agrees(e) {
                    act.cyc_pos.insert(e);
                } else {
                    act.cyc_neg.insert(e);
                }
            }
        }
        act
    }
}

pub fn orientation_activities(g: &Graph, o: Orientation) -> Result<OrientationActivitySets> {
    if !o.reversed.is_subset(g.all_edges()) {
        return Err(Error::Precondition(format!(
            "orientation reverses edges {} outside the graph",
            o.reversed.difference(g.all_edges())
        )));
    }
    Ok(SignedCircuits::new(g)?.activities(o))
}

/// `Σ_O x^{|I⁺|} w^{|I⁻|} y^{|E⁺|} z^{|E⁻|}` over all `2^m` orientations.
pub fn orientation_expansion_4var(g: &Graph) -> Result<MultiPoly> {
    let signed = SignedCircuits::new(g)?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for o in Orientation::all(g.edge_count()) {
        let a = signed.activities(o);
        let key = [a.cut_pos, a.cut_neg, a.cyc_pos, a.cyc_neg]
            .iter()
            .map(|s| s.len() as u32)
            .collect();
        *counts.entry(key).or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XWYZ, counts))
}

/// `Σ_O (u/2)^{|I(O)|} (v/2)^{|L(O)|}`, which needs no reference direction.
pub fn orientation_expansion_2var(g: &Graph) -> Result<MultiPoly> {
    let signed = SignedCircuits::new(g)?;
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for o in Orientation::all(g.edge_count()) {
        let a = signed.activities(o);
        *counts
            .entry((a.cut().len() as u32, a.cyc().len() as u32))
            .or_default() += 1;
    }
    let mut p = MultiPoly::zero(&[Var::U, Var::V]);
    let two = integer(2);
    for ((i, l), n) in counts {
        let mut exps = [0u32; crate::poly::NUM_VARS];
        exps[Var::U as usize] = i;
        exps[Var::V as usize] = l;
        let mut c = Rational::from_integer(n.into());
        let mut denom = Rational::one();
        for _ in 0..i + l {
            denom *= &two;
        }
        c /= denom;
        p.add_term(exps, c);
    }
    Ok(p)
}

/// Orientations with no directed cycle, by direct enumeration.
pub fn count_acyclic_orientations(g: &Graph) -> Result<u64> {
    check_exhaustive(g.edge_count())?;
    if g.has_loops() {
        return Ok(0);
    }
    Ok(Orientation::all(g.edge_count())
        .filter(|&o| directed_cycle_edges(g, o).is_empty())
        .count() as u64)
}
