//! Edmonds' blossom algorithm for maximum cardinality matching.
//!
//! Roots are processed in ascending order and neighbors are scanned in
//! ascending order, so the result is a deterministic function of the graph.

use std::collections::VecDeque;

use super::Matching;
use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

struct Search<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, mate: Vec<usize>) -> Self {
        let n = graph.order();
        Search {
            graph,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.graph.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Grows an alternating tree from `root`. Returns the free endpoint of an
    /// augmenting path if one is found.
    fn grow(&mut self, root: usize) -> Option<usize> {
        let n = self.graph.order();
        self.parent.fill(NONE);
        self.outer.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.outer[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.graph.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.outer[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// A maximum cardinality matching.
pub fn maximum_matching(graph: &Graph) -> Matching {
    let n = graph.order();
    let mut mate = vec![NONE; n];
    // greedy start: lowest unsaturated vertex takes its lowest free neighbor
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = graph.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut search = Search::new(graph, mate);
    for root in 0..n {
        if search.mate[root] == NONE {
            if let Some(end) = search.grow(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mate(to_involution(search.mate))
}

fn to_involution(mate: Vec<usize>) -> Vec<usize> {
    mate.into_iter()
        .enumerate()
        .map(|(v, m)| if m == NONE { v } else { m })
        .collect()
}

/// Even/odd labels of the alternating forest grown from every unsaturated
/// vertex of a maximum matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingLabels {
    /// Vertices reachable from an unsaturated vertex by an even alternating path.
    pub even: VertexSet,
    /// Vertices reached only by odd alternating paths.
    pub odd: VertexSet,
}

/// Grows the alternating forest of `matching` and reads off the labels.
/// Returns `None` if an augmenting path exists, i.e. `matching` is not
/// maximum.
pub fn alternating_labels(graph: &Graph, matching: &Matching) -> Option<AlternatingLabels> {
    let n = graph.order();
    let mate = (0..n)
        .map(|v| {
            if matching.is_saturated(v) {
                matching.partner(v)
            } else {
                NONE
            }
        })
        .collect();
    let mut search = Search::new(graph, mate);
    let mut even = vec![false; n];
    let mut reached = vec![false; n];
    for root in 0..n {
        if search.mate[root] != NONE {
            continue;
        }
        search.grow(root).is_none().then_some(())?;
        for v in 0..n {
            if search.outer[v] {
                even[v] = true;
            }
            if search.outer[v] || search.parent[v] != NONE {
                reached[v] = true;
            }
        }
    }
    let odd: Vec<bool> = (0..n).map(|v| reached[v] && !even[v]).collect();
    Some(AlternatingLabels {
        even: VertexSet::from_mask(&even),
        odd: VertexSet::from_mask(&odd),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;
    use crate::vset;

    #[test]
    fn fixture_sizes() {
        assert_eq!(maximum_matching(&fixtures::triangle()).size(), 1);
        assert_eq!(maximum_matching(&fixtures::tadpole()).size(), 2);
        assert_eq!(maximum_matching(&Graph::empty(0)).size(), 0);
        assert_eq!(maximum_matching(&fixtures::posy_bridge()).size(), 3);
        assert_eq!(maximum_matching(&fixtures::two_tadpoles()).size(), 4);
    }

    #[test]
    fn blossom_needed() {
        // triangle hanging off a path, greedy start is suboptimal
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).size(), 3);
        // Petersen graph has a perfect matching
        let p = Graph::new(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(maximum_matching(&p).size(), 5);
    }

    #[test]
    fn labels_on_fixtures() {
        let g = fixtures::tadpole_k2();
        let m = maximum_matching(&g);
        let l = alternating_labels(&g, &m).unwrap();
        assert_eq!(l.even, vset![0, 1, 2, 4]);
        assert_eq!(l.odd, vset![3]);
        let p4 = fixtures::p4();
        let l = alternating_labels(&p4, &maximum_matching(&p4)).unwrap();
        assert!(l.even.is_empty() && l.odd.is_empty());
    }

    #[test]
    fn labels_reject_non_maximum() {
        let p4 = fixtures::p4();
        let m = Matching::from_edges(&p4, &[(1, 2)]).unwrap();
        assert!(alternating_labels(&p4, &m).is_none());
    }
}
