//! Exhaustive matching search. Independent of the blossom engine: used as
//! the oracle for it and for everything that quantifies over all maximum
//! matchings.

use super::Matching;
use crate::error::Enumeration;
use crate::graph::Graph;

pub const DEFAULT_MATCHING_CAP: usize = 100_000;

const FREE: usize = usize::MAX;

/// Branch and bound over edge subsets: the lowest undecided vertex is either
/// matched to a higher free neighbor or left unsaturated.
struct BranchAndBound<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    decided: Vec<bool>,
    best: usize,
    best_mate: Vec<usize>,
}

impl BranchAndBound<'_> {
    fn run(&mut self, from: usize, size: usize, undecided: usize) {
        if size > self.best {
            self.best = size;
            self.best_mate = self.mate.clone();
        }
        if size + undecided / 2 <= self.best {
            return;
        }
        let Some(v) = (from..self.graph.order()).find(|&v| !self.decided[v]) else {
            return;
        };
        self.decided[v] = true;
        for &w in self.graph.neighbors(v) {
            if !self.decided[w] {
                self.decided[w] = true;
                self.mate[v] = w;
                self.mate[w] = v;
                self.run(v + 1, size + 1, undecided - 2);
                self.mate[v] = FREE;
                self.mate[w] = FREE;
                self.decided[w] = false;
            }
        }
        self.run(v + 1, size, undecided - 1);
        self.decided[v] = false;
    }
}

/// A maximum matching found by exhaustive branch and bound.
pub fn maximum_matching_oracle(graph: &Graph) -> Matching {
    let n = graph.order();
    let mut bb = BranchAndBound {
        graph,
        mate: vec![FREE; n],
        decided: vec![false; n],
        best: 0,
        best_mate: vec![FREE; n],
    };
    bb.run(0, 0, n);
    Matching::from_mate(
        bb.best_mate
            .into_iter()
            .enumerate()
            .map(|(v, m)| if m == FREE { v } else { m })
            .collect(),
    )
}

/// `μ(G)` from the exhaustive oracle.
pub fn matching_number_oracle(graph: &Graph) -> usize {
    maximum_matching_oracle(graph).size()
}

struct Enumerator<'g> {
    graph: &'g Graph,
    mate: Vec<usize>,
    slack: usize,
    cap: usize,
    out: Vec<Matching>,
    truncated: bool,
}

impl Enumerator<'_> {
    fn run(&mut self, from: usize, free_used: usize) {
        if self.truncated {
            return;
        }
        let n = self.graph.order();
        let Some(v) = (from..n).find(|&v| self.mate[v] == FREE) else {
            if self.out.len() == self.cap {
                self.truncated = true;
            } else {
                let mate = self
                    .mate
                    .iter()
                    .enumerate()
                    .map(|(v, &m)| if m == v + n { v } else { m });
                self.out.push(Matching::from_mate(mate.collect()));
            }
            return;
        };
        for &w in self.graph.neighbors(v) {
            if w > v && self.mate[w] == FREE {
                self.mate[v] = w;
                self.mate[w] = v;
                self.run(v + 1, free_used);
                self.mate[v] = FREE;
                self.mate[w] = FREE;
            }
        }
        if free_used < self.slack {
            // `v + n` marks "decided unsaturated" without colliding with a real mate
            self.mate[v] = v + n;
            self.run(v + 1, free_used + 1);
            self.mate[v] = FREE;
        }
    }
}

/// Every maximum matching, in lexicographic order of their sorted edge
/// lists. Stops after `cap` matchings and flags the result as truncated.
pub fn enumerate_maximum_matchings(graph: &Graph, cap: usize) -> Enumeration<Matching> {
    let n = graph.order();
    let mu = matching_number_oracle(graph);
    let mut e = Enumerator {
        graph,
        mate: vec![FREE; n],
        slack: n - 2 * mu,
        cap,
        out: Vec::new(),
        truncated: false,
    };
    e.run(0, 0);
    Enumeration {
        items: e.out,
        truncated: e.truncated,
        cap,
    }
}
