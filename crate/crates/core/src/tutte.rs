//! Reference computations of the Tutte polynomial: the subset-rank sum and a
//! memoized deletion-contraction solver.

use std::collections::HashMap;

use crate::edgeset::EdgeSubset;
use crate::graph::{check_exhaustive, Graph};
use crate::poly::{shifted_bivariate, MultiPoly, Var};
use crate::error::Result;

pub const XY: [Var; 2] = [Var::X, Var::Y];
pub const XWYZ: [Var; 4] = [Var::X, Var::W, Var::Y, Var::Z];

/// `Σ_{A ⊆ E} (x−1)^{r(E)−r(A)} (y−1)^{|A|−r(A)}`.
pub fn tutte_whitney(g: &Graph) -> Result<MultiPoly> {
    let m = g.edge_count();
    check_exhaustive(m)?;
    let full = g.full_rank();
    let mut counts = vec![vec![0u64; m + 1]; full + 1];
    for a in EdgeSubset::all(m) {
        let r = g.rank(a);
        counts[full - r][a.len() - r] += 1;
    }
    Ok(shifted_bivariate(Var::X, Var::Y, &counts))
}

/// Memoization key: vertices renumbered by a degree-guided traversal,
/// isolated vertices dropped, edges sorted. Two graphs with equal keys are
/// isomorphic, so a hit is always sound; misses on isomorphic inputs only
/// cost time.
#[derive(Clone, PartialEq, Eq, Hash)]
struct CanonKey(Vec<(usize, usize)>);

fn canonical(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut degree = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
        if u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut starts: Vec<usize> = (0..n).filter(|&v| degree[v] > 0).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for s in starts {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let mut nbrs = adj[x].clone();
            nbrs.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
            for y in nbrs {
                if label[y] == usize::MAX {
                    label[y] = next;
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    Graph::new(next, edges).expect("relabelled graph is valid")
}

/// Deletion-contraction on the last edge, with a cache confined to this call.
pub fn tutte_delcon(g: &Graph) -> MultiPoly {
    let mut memo = HashMap::new();
    delcon(&canonical(g), &mut memo).with_vars(&XY)
}

fn delcon(g: &Graph, memo: &mut HashMap<CanonKey, MultiPoly>) -> MultiPoly {
    let m = g.edge_count();
    if m == 0 {
        return MultiPoly::one(&XY);
    }
    let key = CanonKey(g.edges().to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let e = m - 1;
    let pivot = EdgeSubset::singleton(e);
    let result = if g.is_loop(e) {
        &MultiPoly::var(&XY, Var::Y) * &delcon(&canonical(&g.delete(pivot)), memo)
    } else if g.is_bridge(e) {
        &MultiPoly::var(&XY, Var::X) * &delcon(&canonical(&g.contract(pivot)), memo)
    } else {
        let deleted = delcon(&canonical(&g.delete(pivot)), memo);
        let contracted = delcon(&canonical(&g.contract(pivot)), memo);
        &deleted + &contracted
    };
    memo.insert(key, result.clone());
    result
}

/// `T(G; x+w, y+z)` as a polynomial in `(x, w, y, z)`.
pub fn shift_to_four_variables(t: &MultiPoly) -> MultiPoly {
    let xw = &MultiPoly::var(&XWYZ, Var::X) + &MultiPoly::var(&XWYZ, Var::W);
    let yz = &MultiPoly::var(&XWYZ, Var::Y) + &MultiPoly::var(&XWYZ, Var::Z);
    t.substitute(&[(Var::X, xw), (Var::Y, yz)]).with_vars(&XWYZ)
}

/// Specializes `T(G; x, y)` at a constant for one variable.
pub fn specialize(t: &MultiPoly, var: Var, value: i64) -> MultiPoly {
    let c = MultiPoly::constant(&XY, crate::poly::integer(value));
    t.substitute(&[(var, c)]).with_vars(&XY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::poly::integer;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn whitney_examples() {
        assert_eq!(tutte_whitney(&single_edge()).unwrap(), p("x"));
        assert_eq!(tutte_whitney(&single_loop()).unwrap(), p("y"));
        assert_eq!(tutte_whitney(&k3()).unwrap(), p("x^2 + x + y"));
        assert_eq!(tutte_whitney(&k3()).unwrap().to_string(), "x^2 + x + y");
    }

    #[test]
    fn delcon_examples() {
        assert_eq!(tutte_delcon(&single_edge()), p("x"));
        assert_eq!(tutte_delcon(&single_loop()), p("y"));
        assert_eq!(tutte_delcon(&k3()), p("x^2 + x + y"));
        let k4 = tutte_delcon(&complete(4));
        assert_eq!(k4.evaluate_ints(&[(Var::X, 1), (Var::Y, 1)]).unwrap(), integer(16));
        assert_eq!(k4, tutte_whitney(&complete(4)).unwrap());
    }

    #[test]
    fn whitney_rejects_large_graphs() {
        let g = complete(7);
        assert!(tutte_whitney(&g).is_err());
        // delcon has no cap
        let t = tutte_delcon(&g);
        assert_eq!(
            t.evaluate_ints(&[(Var::X, 1), (Var::Y, 1)]).unwrap(),
            integer(16807)
        );
    }

    #[test]
    fn empty_graph_is_one() {
        let g = Graph::new(3, vec![]).unwrap();
        assert_eq!(tutte_whitney(&g).unwrap(), p("1"));
        assert_eq!(tutte_delcon(&g), p("1"));
    }
}
