use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::matching::{enumerate_maximum_matchings, maximum_matching};

/// The partition `V = D ∪ A ∪ C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeDecomposition {
    /// Vertices missed by at least one maximum matching.
    pub d: VertexSet,
    /// `N(D) \ D`.
    pub a: VertexSet,
    /// Everything else.
    pub c: VertexSet,
}

impl GeDecomposition {
    fn from_d(graph: &Graph, d: VertexSet) -> Self {
        let a = graph.neighborhood(&d).difference(&d);
        let c = graph.vertices().difference(&d).difference(&a);
        GeDecomposition { d, a, c }
    }
}

/// Computes `D` by the deletion test `μ(G - v) = μ(G)`.
pub fn gallai_edmonds(graph: &Graph) -> GeDecomposition {
    let mu = maximum_matching(graph).size();
    let all = graph.vertices();
    let d = (0..graph.order())
        .filter(|&v| {
            let rest = all.difference(&VertexSet::new([v]));
            let sub = graph.induced_subgraph(&rest).expect("subset of V");
            maximum_matching(&sub.graph).size() == mu
        })
        .collect();
    GeDecomposition::from_d(graph, d)
}

/// Computes `D` by collecting the vertices missed across every maximum matching.
pub fn gallai_edmonds_oracle(graph: &Graph, cap: usize) -> Result<GeDecomposition> {
    let all = enumerate_maximum_matchings(graph, cap).complete("maximum matchings")?;
    let mut missed = vec![false; graph.order()];
    for m in &all {
        for &v in m.unsaturated().iter() {
            missed[v] = true;
        }
    }
    Ok(GeDecomposition::from_d(
        graph,
        VertexSet::from_mask(&missed),
    ))
}

/// Connected components of `G[D]`, ordered by smallest member.
pub fn d_components(graph: &Graph, ge: &GeDecomposition) -> Vec<VertexSet> {
    graph.components_within(&ge.d.to_mask(graph.order()))
}
