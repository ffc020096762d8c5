//! Simple undirected graphs on dense vertex identifiers `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod fixtures;
mod format;

pub use format::{parse_graph, serialize_graph, Format};

pub type Edge = (usize, usize);

/// Normalizes an edge so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            list.push(edge(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "duplicate edge {} {}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must already be normalized, sorted and duplicate free.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    /// Adjacency rows as 64-bit masks, available for graphs of order at most 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect(),
        )
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.0.last() {
            Some(&v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// `N(X)`: every vertex adjacent to some member of `X`. May intersect `X`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut mark = vec![false; self.n];
        for &v in set.iter() {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        VertexSet::from_mask(&mark)
    }

    /// The subgraph induced by `set`, relabeled to `0..|set|` in ascending
    /// order of the original labels.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Induced> {
        self.check_set(set)?;
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in set.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        Ok(Induced {
            graph: Graph::from_sorted(set.len(), edges),
            old_to_new,
            new_to_old: set.0.clone(),
        })
    }

    /// `∂(S)` as both the crossing edge set and the set of members of `S`
    /// incident to a crossing edge.
    pub fn boundary(&self, set: &VertexSet) -> Result<(Vec<Edge>, VertexSet)> {
        self.check_set(set)?;
        let inside = set.to_mask(self.n);
        let crossing: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| inside[u] != inside[v])
            .collect();
        let mut mark = vec![false; self.n];
        for &(u, v) in &crossing {
            mark[if inside[u] { u } else { v }] = true;
        }
        Ok((crossing, VertexSet::from_mask(&mark)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n])
    }

    /// Connected components of the subgraph induced by the `keep` mask.
    pub(crate) fn components_within(&self, keep: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if !keep[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if keep[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// Two-coloring by BFS; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_sorted(self.n + other.n, edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams(
                "permutation length differs from order".into(),
            ));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// An induced subgraph together with the label maps between it and its host.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Induced {
    /// Maps a vertex set of the subgraph back to host labels.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::new(set.iter().map(|&v| self.new_to_old[v]))
    }

    /// Maps a host vertex set into subgraph labels, dropping non-members.
    pub fn project(&self, set: &VertexSet) -> VertexSet {
        VertexSet::new(
            set.iter()
                .filter_map(|&v| self.old_to_new.get(v).copied().flatten()),
        )
    }
}

/// A sorted, duplicate-free set of vertices. Equality is list equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        )
    }

    pub fn from_bits(bits: u64) -> Self {
        let mut out = Vec::with_capacity(bits.count_ones() as usize);
        let mut b = bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize);
            b &= b - 1;
        }
        VertexSet(out)
    }

    /// Bit mask of the members. Every member must be below 64.
    pub fn to_bits(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// Builds a [`VertexSet`] from literal members.
#[macro_export]
macro_rules! vset {
    () => { $crate::graph::VertexSet::empty() };
    ($($v:expr),+ $(,)?) => { $crate::graph::VertexSet::new([$($v),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn induced_subgraph_cases() {
        let f1 = fixtures::triangle();
        assert_eq!(
            f1.induced_subgraph(&vset![]).unwrap().graph,
            Graph::empty(0)
        );
        assert_eq!(f1.induced_subgraph(&vset![0, 1, 2]).unwrap().graph, f1);
        // tadpole_k2 restricted to the tadpole part has identical labels here
        let sub = fixtures::tadpole_k2()
            .induced_subgraph(&vset![0, 1, 2, 3, 4])
            .unwrap();
        assert_eq!(sub.graph, fixtures::tadpole());
        assert!(f1.induced_subgraph(&vset![0, 3]).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = fixtures::two_tadpoles();
        let sub = g.induced_subgraph(&vset![5, 6, 7, 8, 9]).unwrap();
        assert_eq!(sub.graph, fixtures::tadpole());
        assert_eq!(sub.lift(&vset![0, 4]), vset![5, 9]);
        assert_eq!(sub.project(&vset![1, 6, 9]), vset![1, 4]);
    }

    #[test]
    fn boundary_cases() {
        let (e, v) = fixtures::tadpole_k2().boundary(&vset![5, 6]).unwrap();
        assert_eq!(e, vec![(3, 5)]);
        assert_eq!(v, vset![5]);
        let (e, v) = fixtures::triangle().boundary(&vset![0, 1, 2]).unwrap();
        assert!(e.is_empty() && v.is_empty());
        let (e, v) = fixtures::tadpole().boundary(&vset![0, 1, 2]).unwrap();
        assert_eq!(e, vec![(2, 3)]);
        assert_eq!(v, vset![2]);
    }

    #[test]
    fn bipartite_detection() {
        assert!(fixtures::p4().is_bipartite());
        assert!(!fixtures::c5().is_bipartite());
        assert!(Graph::empty(0).is_bipartite());
    }

    #[test]
    fn set_algebra() {
        let a = vset![3, 1, 2];
        let b = vset![2, 5];
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        assert_eq!(a.union(&b), vset![1, 2, 3, 5]);
        assert_eq!(a.intersection(&b), vset![2]);
        assert_eq!(a.difference(&b), vset![1, 3]);
        assert_eq!(VertexSet::from_bits(a.to_bits()), a);
        assert!(vset![2].is_subset(&a));
    }
}
