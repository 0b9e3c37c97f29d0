//! Internal and external activity of maximal spanning forests and the
//! spanning-forest expansion of the Tutte polynomial.

use std::collections::HashMap;

use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::Result;
use crate::graph::Graph;
use crate::poly::MultiPoly;
use crate::tutte::XY;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestActivitySets {
    pub internal: EdgeSubset,
    pub external: EdgeSubset,
}

/// Smallest element of `s` when edge `e` sits at `position[e]` in the order.
pub(crate) fn min_by_position(s: EdgeSubset, position: &[usize]) -> Option<usize> {
    s.iter().min_by_key(|&e| position[e])
}

/// Activities with respect to an arbitrary total order, given as the
/// position of each edge.
pub fn forest_activities_in_order(
    g: &Graph,
    f: EdgeSubset,
    position: &[usize],
) -> Result<ForestActivitySets> {
    g.check_forest(f)?;
    let mut internal = EdgeSubset::EMPTY;
    let mut external = EdgeSubset::EMPTY;
    for e in 0..g.edge_count() {
        if f.contains(e) {
            if min_by_position(g.fundamental_cut(f, e)?, position) == Some(e) {
                internal.insert(e);
            }
        } else if min_by_position(g.fundamental_cycle(f, e)?, position) == Some(e) {
            external.insert(e);
        }
    }
    Ok(ForestActivitySets { internal, external })
}

/// Activities with respect to the edge-list order.
pub fn forest_activities(g: &Graph, f: EdgeSubset) -> Result<ForestActivitySets> {
    let identity: Vec<usize> = (0..g.edge_count()).collect();
    forest_activities_in_order(g, f, &identity)
}

/// `Σ_F x^{|I(F)|} y^{|E(F)|}` over maximal spanning forests.
pub fn tutte_forest_expansion(g: &Graph) -> Result<MultiPoly> {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for f in g.maximal_spanning_forests() {
        let act = forest_activities(g, f)?;
        *counts
            .entry(vec![act.internal.len() as u32, act.external.len() as u32])
            .or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XY, counts))
}

/// Recomputes the expansion after reordering the edge list by each supplied
/// permutation and reports whether every result coincides.
pub fn check_order_independence(g: &Graph, permutations: &[Vec<usize>]) -> Result<bool> {
    let reference = tutte_forest_expansion(g)?;
    for p in permutations {
        let h = g.permute_edges(p)?;
        if tutte_forest_expansion(&h)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}
