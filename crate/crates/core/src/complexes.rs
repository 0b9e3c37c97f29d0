//! The independence complex and the no-broken-circuit complex of a graph,
//! with their f- and h-polynomials.

use serde::Serialize;

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::graph::{check_exhaustive, Graph};
use crate::poly::{MultiPoly, Var};
use crate::tutte::{specialize, tutte_whitney};

const X_ONLY: [Var; 1] = [Var::X];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    /// Maximal faces in increasing bit order.
    pub facets: Vec<EdgeSubset>,
    faces: Vec<EdgeSubset>,
}

impl SimplicialComplex {
    /// The complex with the given face set, which must be closed under
    /// taking subsets.
    pub fn from_faces(mut faces: Vec<EdgeSubset>) -> Result<Self> {
        faces.sort();
        faces.dedup();
        for &f in &faces {
            for sub in f.subsets() {
                if faces.binary_search(&sub).is_err() {
                    return Err(Error::Precondition(format!(
                        "face {f} is present but its subset {sub} is not"
                    )));
                }
            }
        }
        let facets = faces
            .iter()
            .copied()
            .filter(|&f| !faces.iter().any(|&g| g != f && f.is_subset(g)))
            .collect();
        Ok(SimplicialComplex { facets, faces })
    }

    pub fn faces(&self) -> &[EdgeSubset] {
        &self.faces
    }

    /// Size of the largest face.
    pub fn dimension(&self) -> usize {
        self.faces.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// `f[i]` counts faces with `i` elements.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0; self.dimension() + 1];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// `Σ_i f_i x^{d−i}`.
    pub fn f_polynomial(&self) -> MultiPoly {
        let d = self.dimension() as u32;
        MultiPoly::from_counts(
            &X_ONLY,
            self.f_vector()
                .into_iter()
                .enumerate()
                .map(|(i, n)| (vec![d - i as u32], n)),
        )
    }

    /// `f(x − 1)`.
    pub fn h_polynomial(&self) -> MultiPoly {
        let shifted = &MultiPoly::var(&X_ONLY, Var::X) - &MultiPoly::one(&X_ONLY);
        self.f_polynomial().substitute(&[(Var::X, shifted)]).with_vars(&X_ONLY)
    }
}

/// Faces are the forests of `g`.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    check_exhaustive(g.edge_count())?;
    SimplicialComplex::from_faces(
        EdgeSubset::all(g.edge_count())
            .filter(|&a| g.is_independent(a))
            .collect(),
    )
}

/// Circuits with their smallest edge removed.
pub fn broken_circuits(g: &Graph) -> Result<Vec<EdgeSubset>> {
    Ok(g.circuits()?
        .into_iter()
        .map(|c| c.without(c.first().expect("circuits are nonempty")))
        .collect())
}

/// Faces are the forests containing no broken circuit. Loopless graphs
/// only: a loop's broken circuit is empty.
pub fn nbc_complex(g: &Graph) -> Result<SimplicialComplex> {
    if g.has_loops() {
        return Err(Error::Precondition(
            "the no-broken-circuit complex needs a loopless graph".into(),
        ));
    }
    let broken = broken_circuits(g)?;
    SimplicialComplex::from_faces(
        EdgeSubset::all(g.edge_count())
            .filter(|&a| g.is_independent(a) && !broken.iter().any(|b| b.is_subset(a)))
            .collect(),
    )
}

/// Edges outside the forest `a` that are the smallest edge of a cycle in
/// `a` plus that edge.
pub fn externally_active_for_forest(g: &Graph, a: EdgeSubset) -> Result<EdgeSubset> {
    if !g.is_independent(a) {
        return Err(Error::Precondition(format!("{a} contains a cycle")));
    }
    let mut out = EdgeSubset::EMPTY;
    for e in g.all_edges().difference(a) {
        if g.min_in_some_circuit_within(e, a.with(e))? {
            out.insert(e);
        }
    }
    Ok(out)
}

/// `h(IN) = T(x, 1)`, and `h(NBC) = T(x, 0)` when `g` is loopless.
pub fn verify_h_identities(g: &Graph) -> Result<bool> {
    let t = tutte_whitney(g)?;
    let as_x = |p: MultiPoly| p.with_vars(&X_ONLY);
    if independence_complex(g)?.h_polynomial() != as_x(specialize(&t, Var::Y, 1)) {
        return Ok(false);
    }
    if g.has_loops() {
        return Ok(true);
    }
    Ok(nbc_complex(g)?.h_polynomial() == as_x(specialize(&t, Var::Y, 0)))
}
