//! Independence number, maximum independent sets, core, corona, critical
//! difference and ker. Everything here is exact and exponential; graphs of
//! order above [`Caps::mis_vertices`] are refused.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Enumeration, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure::GeDecomposition;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

fn masks(graph: &Graph, caps: &Caps) -> Result<Vec<u64>> {
    let limit = caps.mis_vertices.min(64);
    if graph.order() > limit {
        return Err(Error::CapExceeded {
            what: "independence vertex limit",
            cap: limit,
        });
    }
    Ok(graph.adjacency_masks().expect("order checked above"))
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Upper bound on the independence number of `G[p]` from a greedy clique cover.
fn clique_cover_bound(adj: &[u64], mut p: u64) -> u32 {
    let mut cliques = 0;
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let mut cand = p & adj[v];
        p &= !bit(v);
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            p &= !bit(w);
            cand &= adj[w];
        }
        cliques += 1;
    }
    cliques
}

/// Vertex of `p` with the most neighbors inside `p`, lowest index on ties.
fn pivot(adj: &[u64], p: u64) -> (usize, u32) {
    let mut best = (p.trailing_zeros() as usize, 0);
    let mut rest = p;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & p).count_ones();
        if d > best.1 {
            best = (v, d);
        }
    }
    best
}

fn greedy_lower_bound(adj: &[u64], n: usize) -> u32 {
    let mut p = full(n);
    let mut size = 0;
    while p != 0 {
        let mut rest = p;
        let mut best = (usize::MAX, u32::MAX);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & p).count_ones();
            if d < best.1 {
                best = (v, d);
            }
        }
        p &= !(adj[best.0] | bit(best.0));
        size += 1;
    }
    size
}

fn alpha_search(adj: &[u64], p: u64, size: u32, best: &mut u32) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, p) <= *best {
        return;
    }
    let (v, d) = pivot(adj, p);
    if d == 0 {
        *best = (*best).max(size + p.count_ones());
        return;
    }
    alpha_search(adj, p & !adj[v] & !bit(v), size + 1, best);
    alpha_search(adj, p & !bit(v), size, best);
}

/// `α(G)`.
pub fn independence_number(graph: &Graph, caps: &Caps) -> Result<usize> {
    let adj = masks(graph, caps)?;
    let n = graph.order();
    let mut best = greedy_lower_bound(&adj, n);
    alpha_search(&adj, full(n), 0, &mut best);
    Ok(best as usize)
}

struct MisEnumerator<'a> {
    adj: &'a [u64],
    alpha: u32,
    cap: usize,
    out: Vec<u64>,
    truncated: bool,
}

impl MisEnumerator<'_> {
    fn run(&mut self, p: u64, cur: u64) {
        if self.truncated {
            return;
        }
        let size = cur.count_ones();
        if p == 0 {
            if size == self.alpha {
                if self.out.len() == self.cap {
                    self.truncated = true;
                } else {
                    self.out.push(cur);
                }
            }
            return;
        }
        if size + clique_cover_bound(self.adj, p) < self.alpha {
            return;
        }
        let (v, d) = pivot(self.adj, p);
        if d == 0 {
            self.run(0, cur | p);
            return;
        }
        self.run(p & !self.adj[v] & !bit(v), cur | bit(v));
        self.run(p & !bit(v), cur);
    }
}

fn canonical_order(sets: &mut [u64]) {
    sets.sort_by_key(|&s| VertexSet::from_bits(s));
}

/// All maximum independent sets in lexicographic order.
pub fn enumerate_mis(graph: &Graph, caps: &Caps) -> Result<Enumeration<VertexSet>> {
    let alpha = independence_number(graph, caps)? as u32;
    let adj = masks(graph, caps)?;
    let mut e = MisEnumerator {
        adj: &adj,
        alpha,
        cap: caps.independent_sets,
        out: Vec::new(),
        truncated: false,
    };
    e.run(full(graph.order()), 0);
    canonical_order(&mut e.out);
    Ok(Enumeration {
        items: e.out.into_iter().map(VertexSet::from_bits).collect(),
        truncated: e.truncated,
        cap: caps.independent_sets,
    })
}

/// `(core, corona)`: intersection and union of all maximum independent sets.
pub fn core_corona(graph: &Graph, caps: &Caps) -> Result<(VertexSet, VertexSet)> {
    let all = enumerate_mis(graph, caps)?.complete("maximum independent sets")?;
    Ok(intersection_union(&all, graph.order()))
}

fn intersection_union(sets: &[VertexSet], n: usize) -> (VertexSet, VertexSet) {
    let mut inter = full(n);
    let mut union = 0;
    for s in sets {
        inter &= s.to_bits();
        union |= s.to_bits();
    }
    (VertexSet::from_bits(inter), VertexSet::from_bits(union))
}

/// `d_G(X) = |X| - |N(X)|`, where `N(X)` may meet `X`.
pub fn difference(graph: &Graph, set: &VertexSet) -> Result<i64> {
    graph.check_set(set)?;
    Ok(set.len() as i64 - graph.neighborhood(set).len() as i64)
}

/// The critical difference and every independent set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalSets {
    pub d: i64,
    /// Critical independent sets in lexicographic order; contains `∅` iff `d = 0`.
    pub witnesses: Vec<VertexSet>,
}

struct CriticalSearch<'a> {
    adj: &'a [u64],
    n: usize,
    visited: usize,
    cap: usize,
    best: i64,
    witnesses: Vec<u64>,
}

impl CriticalSearch<'_> {
    /// Visits every independent set exactly once: each extends `cur` by
    /// vertices above `from` that avoid `cur`'s closed neighborhood.
    fn run(&mut self, from: usize, cur: u64, nbhd: u64) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded {
                what: "independent sets",
                cap: self.cap,
            });
        }
        let d = cur.count_ones() as i64 - nbhd.count_ones() as i64;
        if d > self.best {
            self.best = d;
            self.witnesses.clear();
        }
        if d == self.best {
            self.witnesses.push(cur);
        }
        for v in from..self.n {
            if (cur | nbhd) & bit(v) == 0 {
                self.run(v + 1, cur | bit(v), nbhd | self.adj[v])?;
            }
        }
        Ok(())
    }
}

/// `d(G)` as the maximum difference over independent sets, with all witnesses.
pub fn critical_difference(graph: &Graph, caps: &Caps) -> Result<CriticalSets> {
    let adj = masks(graph, caps)?;
    let mut s = CriticalSearch {
        adj: &adj,
        n: graph.order(),
        visited: 0,
        cap: caps.independent_sets,
        best: i64::MIN,
        witnesses: Vec::new(),
    };
    s.run(0, 0, 0)?;
    canonical_order(&mut s.witnesses);
    Ok(CriticalSets {
        d: s.best,
        witnesses: s.witnesses.into_iter().map(VertexSet::from_bits).collect(),
    })
}

/// Intersection of all critical independent sets.
pub fn ker_set(graph: &Graph, caps: &Caps) -> Result<VertexSet> {
    let crit = critical_difference(graph, caps)?;
    Ok(intersection_union(&crit.witnesses, graph.order()).0)
}

/// A critical independent set inside `D(G)`, the first in lexicographic order.
/// Its absence falsifies a proved lemma and is reported as such.
pub fn critical_in_d(graph: &Graph, ge: &GeDecomposition, caps: &Caps) -> Result<VertexSet> {
    let crit = critical_difference(graph, caps)?;
    crit.witnesses
        .into_iter()
        .find(|w| w.is_subset(&ge.d))
        .ok_or_else(|| Error::TheoremViolation("no critical independent set inside D(G)".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceProfile {
    pub alpha: usize,
    pub tau: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub d: i64,
    pub mis_count: usize,
    pub critical_sets_count: usize,
}

pub fn independence_profile(graph: &Graph, caps: &Caps) -> Result<IndependenceProfile> {
    let mis = enumerate_mis(graph, caps)?.complete("maximum independent sets")?;
    let alpha = mis.first().map_or(0, VertexSet::len);
    let (core, corona) = intersection_union(&mis, graph.order());
    let crit = critical_difference(graph, caps)?;
    let ker = intersection_union(&crit.witnesses, graph.order()).0;
    Ok(IndependenceProfile {
        alpha,
        tau: graph.order() - alpha,
        core,
        corona,
        ker,
        d: crit.d,
        mis_count: mis.len(),
        critical_sets_count: crit.witnesses.len(),
    })
}
