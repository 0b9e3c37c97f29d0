//! Flats, cyclic flats, the activity bipartition of spanning forests, the
//! convolution formula, and the active orders on spanning forests.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::forest::forest_activities;
use crate::graph::{check_exhaustive, Graph};
use crate::poly::{MultiPoly, Var};
use crate::tutte::{specialize, tutte_whitney};

/// Closure-closed edge sets. Every flat contains all loops.
pub fn flats(g: &Graph) -> Result<Vec<EdgeSubset>> {
    check_exhaustive(g.edge_count())?;
    Ok(EdgeSubset::all(g.edge_count())
        .filter(|&a| g.closure(a) == a)
        .collect())
}

/// Whether every edge of `a` lies on a circuit inside `a`.
pub fn is_union_of_circuits(g: &Graph, a: EdgeSubset) -> bool {
    let r = g.rank(a);
    a.iter().all(|e| g.rank(a.without(e)) == r)
}

pub fn cyclic_flats(g: &Graph) -> Result<Vec<EdgeSubset>> {
    Ok(flats(g)?
        .into_iter()
        .filter(|&a| is_union_of_circuits(g, a))
        .collect())
}

/// Whether `flat` splits the forest `f` into an internally inactive forest of
/// `G|flat` and an externally inactive forest of `G/flat`.
pub fn splits_forest(g: &Graph, flat: EdgeSubset, f: EdgeSubset) -> Result<bool> {
    let inner = g.restrict(flat);
    let inner_f = Graph::project(flat, f.intersection(flat));
    if !inner.is_maximal_spanning_forest(inner_f) {
        return Ok(false);
    }
    let kept = g.all_edges().difference(flat);
    let outer = g.contract(flat);
    let outer_f = Graph::project(kept, f.difference(flat));
    if !outer.is_maximal_spanning_forest(outer_f) {
        return Ok(false);
    }
    Ok(forest_activities(&inner, inner_f)?.internal.is_empty()
        && forest_activities(&outer, outer_f)?.external.is_empty())
}

/// The unique cyclic flat splitting `f`; anything other than exactly one
/// candidate is reported as an error.
pub fn activity_bipartition(g: &Graph, f: EdgeSubset) -> Result<EdgeSubset> {
    g.check_forest(f)?;
    let mut found = Vec::new();
    for flat in cyclic_flats(g)? {
        if splits_forest(g, flat, f)? {
            found.push(flat);
        }
    }
    match found[..] {
        [flat] => Ok(flat),
        _ => Err(Error::TheoremViolation(format!(
            "forest {f} is split by {} cyclic flats",
            found.len()
        ))),
    }
}

/// `Σ_ℱ T(G/ℱ; x, 0) · T(G|ℱ; 0, y)` over cyclic flats.
pub fn convolution_sum(g: &Graph) -> Result<MultiPoly> {
    let xy = [Var::X, Var::Y];
    let mut total = MultiPoly::zero(&xy);
    for flat in cyclic_flats(g)? {
        let outer = specialize(&tutte_whitney(&g.contract(flat))?, Var::Y, 0);
        let inner = specialize(&tutte_whitney(&g.restrict(flat))?, Var::X, 0);
        total = &total + &(&outer * &inner);
    }
    Ok(total.with_vars(&xy))
}

pub fn convolution_check(g: &Graph) -> Result<bool> {
    Ok(convolution_sum(g)? == tutte_whitney(g)?)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetElement {
    Bottom,
    Basis(EdgeSubset),
    Top,
}

impl std::fmt::Display for PosetElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetElement::Bottom => write!(f, "0"),
            PosetElement::Top => write!(f, "1"),
            PosetElement::Basis(b) => write!(f, "{b}"),
        }
    }
}

/// A finite strict partial order, stored as its full comparability matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<PosetElement>,
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Transitive closure of `relations`, given as index pairs `(a, b)` for
    /// `a < b`. Fails if the closure relates some element to itself.
    pub fn from_relations(elements: Vec<PosetElement>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!("relation ({a}, {b}) out of range")));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    let through = less[k].clone();
                    for (slot, &reach) in less[i].iter_mut().zip(&through) {
                        *slot |= reach;
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            return Err(Error::NotPartialOrder(format!(
                "{} lies on a cycle of relations",
                elements[i]
            )));
        }
        Ok(Poset { elements, less })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn index_of(&self, e: PosetElement) -> Option<usize> {
        self.elements.iter().position(|&x| x == e)
    }

    fn adjoin(&self, extra: PosetElement, below_all: bool) -> Poset {
        let n = self.len();
        let mut elements = self.elements.clone();
        elements.push(extra);
        let mut less: Vec<Vec<bool>> = self
            .less
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(!below_all);
                r
            })
            .collect();
        less.push(vec![below_all; n + 1]);
        less[n][n] = false;
        Poset { elements, less }
    }

    /// Adds a new element below everything.
    pub fn with_bottom(&self) -> Poset {
        self.adjoin(PosetElement::Bottom, true)
    }

    /// Adds a new element above everything.
    pub fn with_top(&self) -> Poset {
        self.adjoin(PosetElement::Top, false)
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.less[a][b] && !(0..n).any(|c| self.less[a][c] && self.less[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn least(&self, candidates: &[usize]) -> Option<usize> {
        candidates
            .iter()
            .copied()
            .find(|&c| candidates.iter().all(|&d| self.le(c, d)))
    }

    fn greatest(&self, candidates: &[usize]) -> Option<usize> {
        candidates
            .iter()
            .copied()
            .find(|&c| candidates.iter().all(|&d| self.le(d, c)))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&u| self.le(a, u) && self.le(b, u))
            .collect();
        self.least(&upper)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len())
            .filter(|&l| self.le(l, a) && self.le(l, b))
            .collect();
        self.greatest(&lower)
    }

    /// Every pair has a join and a meet. The empty poset is not a lattice.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        n > 0
            && (0..n).all(|a| (a..n).all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some()))
    }

    /// Hasse diagram in DOT syntax, edges pointing upwards.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for e in &self.elements {
            let _ = writeln!(out, "  \"{e}\";");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.elements[a], self.elements[b]);
        }
        out.push_str("}\n");
        out
    }
}

fn basis_index(g: &Graph) -> (Vec<EdgeSubset>, HashMap<EdgeSubset, usize>) {
    let bases = g.maximal_spanning_forests();
    let index = bases.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    (bases, index)
}

/// `B1 < B2` when `B2 = B1 − e + f` for `f ∉ B1` and `e ≠ f` the smallest
/// edge of the fundamental cycle of `f`.
fn external_relations(g: &Graph, bases: &[EdgeSubset], index: &HashMap<EdgeSubset, usize>) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, &b) in bases.iter().enumerate() {
        for f in g.all_edges().difference(b) {
            let e = g.fundamental_cycle(b, f)?.first().expect("cycle contains f");
            if e != f {
                out.push((i, index[&b.without(e).with(f)]));
            }
        }
    }
    Ok(out)
}

/// `B2 < B1` when `B2 = B1 − f + e` for `f ∈ B1` and `e ≠ f` the smallest
/// edge of the fundamental cut of `f`. Pivoting away an internally inactive
/// edge moves down, so the fully internally active forest is the minimum.
fn internal_relations(g: &Graph, bases: &[EdgeSubset], index: &HashMap<EdgeSubset, usize>) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, &b) in bases.iter().enumerate() {
        for f in b {
            let e = g.fundamental_cut(b, f)?.first().expect("cut contains f");
            if e != f {
                out.push((index[&b.without(f).with(e)], i));
            }
        }
    }
    Ok(out)
}

fn basis_poset(g: &Graph, external: bool, internal: bool) -> Result<Poset> {
    let (bases, index) = basis_index(g);
    let mut relations = Vec::new();
    if external {
        relations.extend(external_relations(g, &bases, &index)?);
    }
    if internal {
        relations.extend(internal_relations(g, &bases, &index)?);
    }
    let elements = bases.into_iter().map(PosetElement::Basis).collect();
    Poset::from_relations(elements, &relations)
}

pub fn external_order(g: &Graph) -> Result<Poset> {
    basis_poset(g, true, false)
}

pub fn internal_order(g: &Graph) -> Result<Poset> {
    basis_poset(g, false, true)
}

pub fn ext_int_order(g: &Graph) -> Result<Poset> {
    basis_poset(g, true, true)
}

/// The external order with a bottom, the internal order with a top, and the
/// mixed order as is.
pub fn adorned_active_orders(g: &Graph) -> Result<[Poset; 3]> {
    Ok([
        external_order(g)?.with_bottom(),
        internal_order(g)?.with_top(),
        ext_int_order(g)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(v: &[usize]) -> EdgeSubset {
        v.iter().copied().collect()
    }

    fn basis(p: &Poset, b: &[usize]) -> usize {
        p.index_of(PosetElement::Basis(set(b))).unwrap()
    }

    #[test]
    fn k3_flats() {
        let g = k3();
        assert_eq!(
            flats(&g).unwrap(),
            vec![EdgeSubset::EMPTY, set(&[0]), set(&[1]), set(&[2]), g.all_edges()]
        );
        assert_eq!(cyclic_flats(&g).unwrap(), vec![EdgeSubset::EMPTY, g.all_edges()]);
        assert_eq!(cyclic_flats(&path(4)).unwrap(), vec![EdgeSubset::EMPTY]);
    }

    #[test]
    fn loops_lie_in_every_flat() {
        let g = Graph::new(2, vec![(0, 1), (0, 0)]).unwrap();
        assert_eq!(flats(&g).unwrap(), vec![set(&[1]), set(&[0, 1])]);
        assert_eq!(cyclic_flats(&g).unwrap(), vec![set(&[1])]);
    }

    #[test]
    fn k3_bipartition() {
        let g = k3();
        assert_eq!(activity_bipartition(&g, set(&[0, 1])).unwrap(), EdgeSubset::EMPTY);
        assert_eq!(activity_bipartition(&g, set(&[1, 2])).unwrap(), g.all_edges());
        assert_eq!(activity_bipartition(&g, set(&[0, 2])).unwrap(), EdgeSubset::EMPTY);
        assert!(activity_bipartition(&g, set(&[0])).is_err());
    }

    #[test]
    fn bipartition_unique_on_small_graphs() {
        for g in [complete(4), bond(3), cycle(4), Graph::new(2, vec![(0, 1), (1, 1), (0, 1)]).unwrap()] {
            for f in g.maximal_spanning_forests() {
                activity_bipartition(&g, f).unwrap();
            }
        }
    }

    #[test]
    fn convolution() {
        for g in [k3(), path(3), complete(4), single_loop(), bond(3)] {
            assert!(convolution_check(&g).unwrap());
        }
    }

    #[test]
    fn k3_active_orders() {
        let g = k3();
        let ext = external_order(&g).unwrap();
        let t1 = basis(&ext, &[0, 1]);
        let t2 = basis(&ext, &[0, 2]);
        let t3 = basis(&ext, &[1, 2]);
        assert!(ext.less(t1, t3) && ext.less(t2, t3));
        assert!(!ext.less(t1, t2) && !ext.less(t2, t1));
        assert!(!ext.is_lattice());
        let int = internal_order(&g).unwrap();
        assert!(int.less(t1, t2) && int.less(t2, t3));
        let mixed = ext_int_order(&g).unwrap();
        assert_eq!(mixed.covers(), vec![(t1, t2), (t2, t3)]);
        for p in adorned_active_orders(&g).unwrap() {
            assert!(p.is_lattice());
        }
    }

    #[test]
    fn active_orders_are_lattices() {
        for g in [complete(4), bond(3), cycle(4), path(3)] {
            for p in adorned_active_orders(&g).unwrap() {
                assert!(p.is_lattice(), "{}", p.to_dot("p"));
            }
        }
    }

    #[test]
    fn lattice_basics() {
        let e = |i| PosetElement::Basis(EdgeSubset::singleton(i));
        let chain = Poset::from_relations(vec![e(0), e(1), e(2)], &[(0, 1), (1, 2)]).unwrap();
        assert!(chain.is_lattice());
        let anti = Poset::from_relations(vec![e(0), e(1)], &[]).unwrap();
        assert!(!anti.is_lattice());
        assert!(anti.with_bottom().with_top().is_lattice());
        assert!(Poset::from_relations(vec![e(0), e(1)], &[(0, 1), (1, 0)]).is_err());
        let single = Poset::from_relations(vec![e(0)], &[]).unwrap();
        assert!(single.is_lattice());
        assert!(chain.to_dot("c").contains("\"{e0}\" -> \"{e1}\""));
    }
}
