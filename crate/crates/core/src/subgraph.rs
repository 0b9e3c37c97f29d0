//! Four-way activities of arbitrary edge subsets and the interval
//! decomposition of the Boolean lattice of subsets by spanning forests.

use std::collections::HashMap;

use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::Result;
use crate::forest::forest_activities;
use crate::graph::{check_exhaustive, Graph};
use crate::poly::MultiPoly;
use crate::tutte::XWYZ;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GtPartition {
    /// In `S`, smallest edge of some cocircuit inside `S^c ∪ e`.
    pub internal_present: EdgeSubset,
    /// Outside `S`, smallest edge of some cocircuit inside `S^c`.
    pub internal_absent: EdgeSubset,
    /// In `S`, smallest edge of some circuit inside `S`.
    pub external_present: EdgeSubset,
    /// Outside `S`, smallest edge of some circuit inside `S ∪ e`.
    pub external_absent: EdgeSubset,
}

impl GtPartition {
    pub fn internal(&self) -> EdgeSubset {
        self.internal_present.union(self.internal_absent)
    }

    pub fn external(&self) -> EdgeSubset {
        self.external_present.union(self.external_absent)
    }

    fn exponents(&self) -> Vec<u32> {
        [
            self.internal_present,
            self.internal_absent,
            self.external_present,
            self.external_absent,
        ]
        .iter()
        .map(|s| s.len() as u32)
        .collect()
    }
}

pub fn gt_partition(g: &Graph, s: EdgeSubset) -> Result<GtPartition> {
    let all = g.all_edges();
    let absent = all.difference(s);
    let mut part = GtPartition::default();
    for e in all {
        if s.contains(e) {
            if g.min_in_some_cocircuit_within(e, absent.with(e))? {
                part.internal_present.insert(e);
            }
            if g.min_in_some_circuit_within(e, s)? {
                part.external_present.insert(e);
            }
        } else {
            if g.min_in_some_cocircuit_within(e, absent)? {
                part.internal_absent.insert(e);
            }
            if g.min_in_some_circuit_within(e, s.with(e))? {
                part.external_absent.insert(e);
            }
        }
    }
    Ok(part)
}

/// `Σ_S x^{|I(S)∩S|} w^{|I(S)∩S^c|} y^{|L(S)∩S|} z^{|L(S)∩S^c|}`.
pub fn gt_expansion(g: &Graph) -> Result<MultiPoly> {
    check_exhaustive(g.edge_count())?;
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for s in EdgeSubset::all(g.edge_count()) {
        *counts.entry(gt_partition(g, s)?.exponents()).or_default() += 1;
    }
    Ok(MultiPoly::from_counts(&XWYZ, counts))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrapoInterval {
    /// `F \ I(F)`
    pub lower: EdgeSubset,
    /// `F ∪ E(F)`
    pub upper: EdgeSubset,
    pub forest: EdgeSubset,
}

impl CrapoInterval {
    pub fn contains(&self, s: EdgeSubset) -> bool {
        self.lower.is_subset(s) && s.is_subset(self.upper)
    }

    pub fn size(&self) -> u64 {
        1u64 << self.upper.difference(self.lower).len()
    }

    pub fn members(&self) -> impl Iterator<Item = EdgeSubset> + '_ {
        self.upper
            .difference(self.lower)
            .subsets()
            .map(|free| free.union(self.lower))
    }
}

pub fn crapo_intervals(g: &Graph) -> Result<Vec<CrapoInterval>> {
    g.maximal_spanning_forests()
        .into_iter()
        .map(|f| {
            let act = forest_activities(g, f)?;
            Ok(CrapoInterval {
                lower: f.difference(act.internal),
                upper: f.union(act.external),
                forest: f,
            })
        })
        .collect()
}

/// True iff the intervals are pairwise disjoint and cover all `2^m` subsets.
pub fn crapo_verify(g: &Graph) -> Result<bool> {
    let m = g.edge_count();
    check_exhaustive(m)?;
    let mut hits = vec![0u8; 1usize << m];
    for interval in crapo_intervals(g)? {
        for s in interval.members() {
            let slot = &mut hits[s.bits() as usize];
            *slot = slot.saturating_add(1);
        }
    }
    Ok(hits.iter().all(|&h| h == 1))
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
    fn k3_partitions() {
        let g = k3();
        let p = gt_partition(&g, EdgeSubset::EMPTY).unwrap();
        assert_eq!(
            p,
            GtPartition {
                internal_absent: set(&[0, 1]),
                ..Default::default()
            }
        );
        let p = gt_partition(&g, g.all_edges()).unwrap();
        assert_eq!(
            p,
            GtPartition {
                external_present: set(&[0]),
                ..Default::default()
            }
        );
        let p = gt_partition(&g, set(&[0, 1])).unwrap();
        assert_eq!(
            p,
            GtPartition {
                internal_present: set(&[0, 1]),
                ..Default::default()
            }
        );
    }

    #[test]
    fn k3_expansion() {
        let g = k3();
        let expected = shift_to_four_variables(&tutte_whitney(&g).unwrap());
        assert_eq!(gt_expansion(&g).unwrap(), expected);
        assert_eq!(
            expected,
            "x^2 + 2*x*w + w^2 + x + w + y + z".parse().unwrap()
        );
    }

    #[test]
    fn k3_crapo_intervals() {
        let ivs = crapo_intervals(&k3()).unwrap();
        let summary: Vec<_> = ivs.iter().map(|i| (i.lower, i.upper, i.size())).collect();
        assert_eq!(
            summary,
            vec![
                (EdgeSubset::EMPTY, set(&[0, 1]), 4),
                (set(&[2]), set(&[0, 2]), 2),
                (set(&[1, 2]), set(&[0, 1, 2]), 2),
            ]
        );
        assert!(crapo_verify(&k3()).unwrap());
    }

    #[test]
    fn crapo_small_cases() {
        let ivs = crapo_intervals(&single_loop()).unwrap();
        assert_eq!(ivs.len(), 1);
        assert_eq!((ivs[0].lower, ivs[0].upper), (EdgeSubset::EMPTY, set(&[0])));
        assert!(crapo_verify(&single_loop()).unwrap());
        let k4 = complete(4);
        assert_eq!(crapo_intervals(&k4).unwrap().len(), 16);
        assert!(crapo_verify(&k4).unwrap());
    }
}
