//! Matchings: the blossom engine, the exhaustive oracle, and alternating
//! walk classification.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

mod blossom;
mod enumerate;

pub use blossom::{alternating_labels, maximum_matching, AlternatingLabels};
pub use enumerate::{
    enumerate_maximum_matchings, matching_number_oracle, maximum_matching_oracle,
    DEFAULT_MATCHING_CAP,
};

/// A matching stored as its involution: `mate[v] == v` iff `v` is unsaturated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: (0..n).collect(),
        }
    }

    /// Builds a matching of `graph`, checking membership and disjointness.
    pub fn from_edges(graph: &Graph, edges: &[Edge]) -> Result<Self> {
        let check = verify_matching(graph, edges);
        if !check.valid {
            return Err(Error::Precondition(check.reason.unwrap_or_default()));
        }
        let mut m = Matching::empty(graph.order());
        for &(u, v) in edges {
            m.mate[u] = v;
            m.mate[v] = u;
        }
        Ok(m)
    }

    pub(crate) fn from_mate(mate: Vec<usize>) -> Self {
        debug_assert!(mate.iter().enumerate().all(|(v, &u)| mate[u] == v));
        Matching { mate }
    }

    /// `M(v)`; equals `v` when `v` is unsaturated.
    #[inline]
    pub fn partner(&self, v: usize) -> usize {
        self.mate[v]
    }

    #[inline]
    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v] != v
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        u != v && self.mate[u] == v
    }

    /// Number of matched pairs.
    pub fn size(&self) -> usize {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &u)| v < u)
            .count()
    }

    /// Matched edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<Edge> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &u)| v < u)
            .map(|(v, &u)| (v, u))
            .collect()
    }

    pub fn unsaturated(&self) -> VertexSet {
        VertexSet::new((0..self.mate.len()).filter(|&v| self.mate[v] == v))
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    /// Restriction to the edges with both endpoints in `set`.
    pub fn restrict(&self, set: &VertexSet) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .collect()
    }

    /// One `u v` line per matched edge.
    pub fn to_text(&self) -> String {
        self.edges()
            .iter()
            .map(|(u, v)| format!("{u} {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.edges())
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.edges().serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCheck {
    pub valid: bool,
    pub reason: Option<String>,
}

/// Checks that `edges` is a set of pairwise disjoint edges of `graph`.
pub fn verify_matching(graph: &Graph, edges: &[Edge]) -> MatchingCheck {
    let fail = |r: String| MatchingCheck {
        valid: false,
        reason: Some(r),
    };
    let mut used = vec![false; graph.order()];
    for &(u, v) in edges {
        if !graph.has_edge(u, v) {
            return fail(format!("{u} {v} is not an edge"));
        }
        for w in [u, v] {
            if used[w] {
                return fail(format!("vertex {w} is covered twice"));
            }
            used[w] = true;
        }
    }
    MatchingCheck {
        valid: true,
        reason: None,
    }
}

/// Alternating path classes by first and last edge membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkClass {
    Mm,
    Nn,
    Mn,
    Nm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternatingWalk {
    pub vertices: Vec<usize>,
    /// `matched[i]` tells whether edge `vertices[i]–vertices[i+1]` is in the matching.
    pub matched: Vec<bool>,
    pub class: WalkClass,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("walk rejected at index {index}: {reason}")]
pub struct WalkRejection {
    /// Index into the vertex sequence where the walk stops being valid.
    pub index: usize,
    pub reason: &'static str,
}

pub fn classify_walk(
    graph: &Graph,
    matching: &Matching,
    walk: &[usize],
) -> std::result::Result<AlternatingWalk, WalkRejection> {
    if walk.len() < 2 {
        return Err(WalkRejection {
            index: walk.len(),
            reason: "walk needs at least two vertices",
        });
    }
    if let Some(i) = walk.iter().position(|&v| v >= graph.order()) {
        return Err(WalkRejection {
            index: i,
            reason: "vertex out of range",
        });
    }
    let mut matched = Vec::with_capacity(walk.len() - 1);
    for (i, w) in walk.windows(2).enumerate() {
        if !graph.has_edge(w[0], w[1]) {
            return Err(WalkRejection {
                index: i + 1,
                reason: "consecutive vertices not adjacent",
            });
        }
        let m = matching.contains(w[0], w[1]);
        if matched.last() == Some(&m) {
            return Err(WalkRejection {
                index: i + 1,
                reason: "edge membership does not alternate",
            });
        }
        matched.push(m);
    }
    let class = match (matched[0], *matched.last().unwrap()) {
        (true, true) => WalkClass::Mm,
        (false, false) => WalkClass::Nn,
        (true, false) => WalkClass::Mn,
        (false, true) => WalkClass::Nm,
    };
    Ok(AlternatingWalk {
        vertices: walk.to_vec(),
        matched,
        class,
    })
}
