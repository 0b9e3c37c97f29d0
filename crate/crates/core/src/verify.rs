//! Runs every expansion and structural identity on one graph.

use serde::Serialize;

use crate::bernardi::{bernardi_expansion, CombinatorialMap};
use crate::complexes::{independence_complex, nbc_complex};
use crate::decision::{gm_expansion, gt_unification_check, ConstantOrder, SeededChooser};
use crate::dfs::{dfs_expansion, VertexOrder};
use crate::error::Result;
use crate::forest::tutte_forest_expansion;
use crate::graph::Graph;
use crate::orientation::{count_acyclic_orientations, orientation_expansion_2var, orientation_expansion_4var};
use crate::poly::{integer, MultiPoly, Var};
use crate::structure::{activity_bipartition, adorned_active_orders, convolution_check};
use crate::subgraph::{crapo_verify, gt_expansion};
use crate::tutte::{shift_to_four_variables, specialize, tutte_delcon, tutte_whitney};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn verdict(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skip(name: &str, why: &str) -> Self {
        Check {
            name: name.into(),
            status: Status::Skip,
            detail: why.into(),
        }
    }

    fn compare(name: &str, got: &MultiPoly, want: &MultiPoly) -> Self {
        if got == want {
            Check::verdict(name, true, got.to_string())
        } else {
            Check::verdict(name, false, format!("got {got}, expected {want}"))
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Choices for the expansions that depend on extra structure.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub vertex_order: Option<VertexOrder>,
    pub map: Option<CombinatorialMap>,
    pub seed: u64,
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

pub fn verify_all(g: &Graph, options: &VerifyOptions) -> Result<Vec<Check>> {
    let t = tutte_whitney(g)?;
    let t4 = shift_to_four_variables(&t);
    let m = g.edge_count();
    let mut out = vec![
        Check::compare("deletion-contraction", &tutte_delcon(g), &t),
        Check::compare("forest expansion", &tutte_forest_expansion(g)?, &t),
        Check::compare("subgraph expansion", &gt_expansion(g)?, &t4),
        Check::verdict("crapo partition", crapo_verify(g)?, "intervals tile the subset lattice"),
    ];

    let simple_connected = g.is_connected() && !g.has_parallel_edges();
    if simple_connected {
        let order = match &options.vertex_order {
            Some(o) => o.clone(),
            None => VertexOrder::identity(g.vertex_count()),
        };
        out.push(Check::compare("dfs expansion", &dfs_expansion(g, &order)?, &t));
    } else {
        out.push(Check::skip("dfs expansion", "needs a connected graph without parallel edges"));
    }

    if g.is_connected() && !g.has_loops() {
        let map = match &options.map {
            Some(map) => map.clone(),
            None => CombinatorialMap::default_for(g)?,
        };
        out.push(Check::compare("bernardi expansion", &bernardi_expansion(&map)?, &t));
    } else {
        out.push(Check::skip("bernardi expansion", "needs a connected loopless graph"));
    }

    out.push(Check::compare(
        "decision-tree expansion (edge order)",
        &gm_expansion(g, &ConstantOrder::increasing(m))?,
        &t4,
    ));
    let chooser = SeededChooser {
        seed: options.seed,
        edge_count: m,
    };
    out.push(Check::compare(
        &format!("decision-tree expansion (seed {})", options.seed),
        &gm_expansion(g, &chooser)?,
        &t4,
    ));
    out.push(Check::verdict(
        "decision tree unifies subgraph partition",
        gt_unification_check(g)?,
        "decreasing edge order",
    ));

    out.push(Check::compare("orientation expansion", &orientation_expansion_4var(g)?, &t4));
    let uv = [Var::U, Var::V];
    let t_uv = t
        .substitute(&[
            (Var::X, MultiPoly::var(&uv, Var::U)),
            (Var::Y, MultiPoly::var(&uv, Var::V)),
        ])
        .with_vars(&uv);
    out.push(Check::compare(
        "unsigned orientation expansion",
        &orientation_expansion_2var(g)?,
        &t_uv,
    ));
    let acyclic = count_acyclic_orientations(g)?;
    let t20 = t.evaluate_ints(&[(Var::X, 2), (Var::Y, 0)])?;
    out.push(Check::verdict(
        "acyclic orientations",
        integer(acyclic as i64) == t20,
        format!("{acyclic} counted, T(2,0) = {t20}"),
    ));

    let forests = g.maximal_spanning_forests();
    let mut bipartition_ok = true;
    let mut detail = format!("{} forests", forests.len());
    for &f in &forests {
        if let Err(e) = activity_bipartition(g, f) {
            bipartition_ok = false;
            detail = e.to_string();
            break;
        }
    }
    out.push(Check::verdict("activity bipartition", bipartition_ok, detail));
    out.push(Check::verdict("convolution", convolution_check(g)?, "sum over cyclic flats"));

    let names = ["external order with bottom", "internal order with top", "mixed order"];
    match adorned_active_orders(g) {
        Ok(posets) => {
            for (name, p) in names.iter().zip(posets.iter()) {
                out.push(Check::verdict(name, p.is_lattice(), format!("{} elements", p.len())));
            }
        }
        Err(e) => {
            for name in names {
                out.push(Check::verdict(name, false, e.to_string()));
            }
        }
    }

    let ind = independence_complex(g)?;
    let x_only = [Var::X];
    let t_x1 = specialize(&t, Var::Y, 1).with_vars(&x_only);
    out.push(Check::compare("independence complex h-polynomial", &ind.h_polynomial(), &t_x1));
    out.push(Check::verdict(
        "independence complex pure",
        ind.is_pure(),
        format!("{} facets", ind.facets.len()),
    ));
    if g.has_loops() {
        out.push(Check::skip("nbc complex h-polynomial", "needs a loopless graph"));
    } else {
        let t_x0 = specialize(&t, Var::Y, 0).with_vars(&x_only);
        out.push(Check::compare("nbc complex h-polynomial", &nbc_complex(g)?.h_polynomial(), &t_x0));
    }
    Ok(out)
}
