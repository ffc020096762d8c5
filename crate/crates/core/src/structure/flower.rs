use serde::Serialize;

use super::cycles::OddCycle;
use crate::caps::Caps;
use crate::error::{Enumeration, Error, Result};
use crate::graph::{Edge, Graph};
use crate::independence::independence_number;
use crate::matching::{maximum_matching, Matching};

/// A blossom joined to an even alternating stem ending at an unsaturated root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flower {
    pub matching: Vec<Edge>,
    pub blossom: OddCycle,
    /// `stem[0]` is the base, the last entry is the root. The index of a
    /// vertex in this list is its distance from the base along the stem.
    pub stem: Vec<usize>,
    pub base: usize,
    pub root: usize,
}

/// Two disjoint blossoms whose bases are joined by an alternating path that
/// starts and ends with matched edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Posy {
    pub matching: Vec<Edge>,
    /// First blossom as a cyclic sequence starting at its base.
    pub first: Vec<usize>,
    /// Second blossom as a cyclic sequence starting at its base.
    pub second: Vec<usize>,
    /// Path from the first base to the second base.
    pub path: Vec<usize>,
}

/// Two blossoms, possibly sharing vertices, whose bases are joined by an
/// alternating walk that starts and ends with matched edges. In a vertex
/// cover of size `μ` both bases are forced in, and the walk then forces its
/// last vertex out, so no such cover exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlappingPosy {
    pub matching: Vec<Edge>,
    /// First blossom as a cyclic sequence starting at its base.
    pub first: Vec<usize>,
    /// Second blossom as a cyclic sequence starting at its base.
    pub second: Vec<usize>,
    /// Walk from the first base to the second base. Vertices may repeat.
    pub walk: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Flower(Flower),
    Posy(Posy),
    OverlappingPosy(OverlappingPosy),
}

/// The base of `cycle` under `matching`: the one vertex not covered by the
/// matched cycle edges, provided exactly `(len - 1) / 2` cycle edges are matched.
pub fn blossom_base(cycle: &OddCycle, matching: &Matching) -> Option<usize> {
    let vs = cycle.vertices();
    let len = vs.len();
    let mut covered = vec![false; len];
    let mut count = 0;
    for i in 0..len {
        let j = (i + 1) % len;
        if matching.contains(vs[i], vs[j]) {
            covered[i] = true;
            covered[j] = true;
            count += 1;
        }
    }
    (count == len / 2).then(|| vs[covered.iter().position(|&c| !c).unwrap()])
}

struct Budget {
    steps: usize,
    cap: usize,
}

impl Budget {
    fn new(cap: usize) -> Self {
        Budget { steps: 0, cap }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::CapExceeded {
                what: "alternating path search steps",
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// Calls `visit` with every stem of `cycle` under `matching`, base first.
/// Stops early when `visit` returns `false`.
pub(crate) fn for_each_stem(
    graph: &Graph,
    matching: &Matching,
    cycle: &OddCycle,
    step_cap: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    let Some(base) = blossom_base(cycle, matching) else {
        return Ok(());
    };
    if !matching.is_saturated(base) {
        visit(&[base]);
        return Ok(());
    }
    let first = matching.partner(base);
    let mut blocked = vec![false; graph.order()];
    for &v in cycle.vertices() {
        blocked[v] = true;
    }
    if blocked[first] {
        return Ok(());
    }
    blocked[first] = true;
    let mut path = vec![base, first];
    let mut budget = Budget::new(step_cap);
    stems_from(
        graph,
        matching,
        &mut path,
        &mut blocked,
        &mut budget,
        &mut visit,
    )?;
    Ok(())
}

/// `path` ends at a vertex entered through a matched edge. Returns `false`
/// once the visitor asked to stop.
fn stems_from(
    graph: &Graph,
    matching: &Matching,
    path: &mut Vec<usize>,
    blocked: &mut [bool],
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Result<bool> {
    budget.tick()?;
    let v = *path.last().unwrap();
    for &w in graph.neighbors(v) {
        if blocked[w] || matching.contains(v, w) {
            continue;
        }
        path.push(w);
        let keep_going = if !matching.is_saturated(w) {
            visit(path)
        } else {
            let m = matching.partner(w);
            blocked[w] = true;
            blocked[m] = true;
            path.push(m);
            let r = stems_from(graph, matching, path, blocked, budget, visit)?;
            path.pop();
            blocked[w] = false;
            blocked[m] = false;
            r
        };
        path.pop();
        if !keep_going {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every flower with blossom `cycle` relative to `matching`.
pub fn find_flowers(
    graph: &Graph,
    matching: &Matching,
    cycle: &OddCycle,
    caps: &Caps,
) -> Result<Enumeration<Flower>> {
    let mut items = Vec::new();
    let mut truncated = false;
    let edges = matching.edges();
    for_each_stem(graph, matching, cycle, caps.search_steps, |stem| {
        if items.len() == caps.flowers {
            truncated = true;
            return false;
        }
        items.push(Flower {
            matching: edges.clone(),
            blossom: cycle.clone(),
            stem: stem.to_vec(),
            base: stem[0],
            root: *stem.last().unwrap(),
        });
        true
    })?;
    Ok(Enumeration {
        items,
        truncated,
        cap: caps.flowers,
    })
}

/// First flower found by alternating depth-first search from each
/// unsaturated root. `matching` must be maximum.
pub fn find_flower(graph: &Graph, matching: &Matching, caps: &Caps) -> Result<Option<Flower>> {
    let mut budget = Budget::new(caps.search_steps);
    let mut on_path = vec![usize::MAX; graph.order()];
    for root in 0..graph.order() {
        if matching.is_saturated(root) {
            continue;
        }
        let mut path = vec![root];
        on_path[root] = 0;
        let found = flower_dfs(graph, matching, &mut path, &mut on_path, &mut budget)?;
        on_path[root] = usize::MAX;
        if let Some((i, j)) = found {
            let stem: Vec<usize> = path[..=i].iter().rev().copied().collect();
            let blossom = OddCycle::canonical(graph, &path[i..=j]);
            return Ok(Some(Flower {
                matching: matching.edges(),
                blossom,
                base: path[i],
                root,
                stem,
            }));
        }
    }
    Ok(None)
}

/// `path` ends at an even position. Returns the
/// positions `(i, j)` of a blossom `path[i..=j]` closed by a non-matching edge.
/// On success `path` is left holding the alternating path up to `j`.
fn flower_dfs(
    graph: &Graph,
    matching: &Matching,
    path: &mut Vec<usize>,
    on_path: &mut [usize],
    budget: &mut Budget,
) -> Result<Option<(usize, usize)>> {
    budget.tick()?;
    let j = path.len() - 1;
    let v = path[j];
    for &w in graph.neighbors(v) {
        if matching.contains(v, w) {
            continue;
        }
        let i = on_path[w];
        if i != usize::MAX {
            if i % 2 == 0 && j >= i + 2 {
                return Ok(Some((i, j)));
            }
            continue;
        }
        if !matching.is_saturated(w) {
            return Err(Error::InternalInconsistency(format!(
                "augmenting path to {w} found for a matching assumed maximum"
            )));
        }
        let m = matching.partner(w);
        on_path[w] = j + 1;
        on_path[m] = j + 2;
        path.push(w);
        path.push(m);
        if let Some(hit) = flower_dfs(graph, matching, path, on_path, budget)? {
            return Ok(Some(hit));
        }
        path.truncate(j + 1);
        on_path[w] = usize::MAX;
        on_path[m] = usize::MAX;
    }
    Ok(None)
}

/// First posy found, scanning first bases in ascending order.
pub fn find_posy(graph: &Graph, matching: &Matching, caps: &Caps) -> Result<Option<Posy>> {
    let mut budget = Budget::new(caps.search_steps);
    let n = graph.order();
    for b1 in 0..n {
        if !matching.is_saturated(b1) {
            continue;
        }
        let mut blossoms: Vec<Vec<usize>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut on_path = vec![false; n];
        on_path[b1] = true;
        let mut path = vec![b1];
        blossoms_at(
            graph,
            matching,
            &mut path,
            &mut on_path,
            &mut budget,
            &mut |cyc: &[usize]| {
                if seen.insert(OddCycle::canonical(graph, cyc)) {
                    blossoms.push(cyc.to_vec());
                }
                false
            },
        )?;
        for first in blossoms {
            let mut blocked = vec![usize::MAX; n];
            for &v in &first {
                blocked[v] = BLOSSOM;
            }
            let m = matching.partner(b1);
            blocked[b1] = 0;
            blocked[m] = 1;
            let mut path = vec![b1, m];
            if let Some((i, j)) = posy_dfs(graph, matching, &mut path, &mut blocked, &mut budget)? {
                return Ok(Some(Posy {
                    matching: matching.edges(),
                    first,
                    second: path[i..=j].to_vec(),
                    path: path[..=i].to_vec(),
                }));
            }
        }
    }
    Ok(None)
}

const BLOSSOM: usize = usize::MAX - 1;

/// Alternating cycles through `path[0]` that leave it by a non-matching edge
/// and return to it by one. Returns `true` once `found` asks to stop.
fn blossoms_at(
    graph: &Graph,
    matching: &Matching,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut Budget,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> Result<bool> {
    budget.tick()?;
    let v = *path.last().unwrap();
    if path.len() >= 3 && graph.has_edge(v, path[0]) && found(path) {
        return Ok(true);
    }
    for &w in graph.neighbors(v) {
        if on_path[w] || matching.contains(v, w) || !matching.is_saturated(w) {
            continue;
        }
        let m = matching.partner(w);
        if on_path[m] {
            continue;
        }
        on_path[w] = true;
        on_path[m] = true;
        path.push(w);
        path.push(m);
        if blossoms_at(graph, matching, path, on_path, budget, found)? {
            return Ok(true);
        }
        path.truncate(path.len() - 2);
        on_path[w] = false;
        on_path[m] = false;
    }
    Ok(false)
}

/// Some blossom whose base is the saturated vertex `b`.
fn blossom_with_base(
    graph: &Graph,
    matching: &Matching,
    b: usize,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let mut on_path = vec![false; graph.order()];
    on_path[b] = true;
    let mut out = None;
    blossoms_at(
        graph,
        matching,
        &mut vec![b],
        &mut on_path,
        budget,
        &mut |cyc: &[usize]| {
            out = Some(cyc.to_vec());
            true
        },
    )?;
    Ok(out)
}

/// First overlapping posy found, scanning first bases in ascending order.
/// Every saturated blossom base is a candidate endpoint; a breadth-first
/// search over (vertex, next edge matched) states finds the walk.
pub fn find_overlapping_posy(
    graph: &Graph,
    matching: &Matching,
    caps: &Caps,
) -> Result<Option<OverlappingPosy>> {
    let n = graph.order();
    let mut budget = Budget::new(caps.search_steps);
    let mut blossom = vec![None; n];
    for b in (0..n).filter(|&b| matching.is_saturated(b)) {
        blossom[b] = blossom_with_base(graph, matching, b, &mut budget)?;
    }
    for b1 in (0..n).filter(|&b| blossom[b].is_some()) {
        // state 2v: at v, next edge matched; state 2v+1: at v, next edge not matched
        let mut parent = vec![usize::MAX; 2 * n];
        let mut queue = std::collections::VecDeque::from([2 * b1]);
        parent[2 * b1] = 2 * b1;
        while let Some(s) = queue.pop_front() {
            budget.tick()?;
            let (v, matched_next) = (s / 2, s % 2 == 0);
            let nexts: Vec<usize> = if matched_next {
                vec![2 * matching.partner(v) + 1]
            } else {
                graph
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| !matching.contains(v, w) && matching.is_saturated(w))
                    .map(|&w| 2 * w)
                    .collect()
            };
            for t in nexts {
                if parent[t] != usize::MAX {
                    continue;
                }
                parent[t] = s;
                let w = t / 2;
                if t % 2 == 1 && blossom[w].is_some() {
                    let mut walk = vec![w];
                    let mut cur = t;
                    while cur != 2 * b1 {
                        cur = parent[cur];
                        walk.push(cur / 2);
                    }
                    walk.reverse();
                    return Ok(Some(OverlappingPosy {
                        matching: matching.edges(),
                        first: blossom[b1].clone().unwrap(),
                        second: blossom[w].clone().unwrap(),
                        walk,
                    }));
                }
                queue.push_back(t);
            }
        }
    }
    Ok(None)
}

/// `path` ends at an odd position entered by a matched edge. A non-matching
/// edge back to an earlier odd position `i` closes the second blossom.
fn posy_dfs(
    graph: &Graph,
    matching: &Matching,
    path: &mut Vec<usize>,
    pos: &mut [usize],
    budget: &mut Budget,
) -> Result<Option<(usize, usize)>> {
    budget.tick()?;
    let j = path.len() - 1;
    let v = path[j];
    for &w in graph.neighbors(v) {
        if matching.contains(v, w) || pos[w] == BLOSSOM {
            continue;
        }
        let i = pos[w];
        if i != usize::MAX {
            if i % 2 == 1 && j >= i + 2 {
                return Ok(Some((i, j)));
            }
            continue;
        }
        if !matching.is_saturated(w) {
            continue;
        }
        let m = matching.partner(w);
        pos[w] = j + 1;
        pos[m] = j + 2;
        path.push(w);
        path.push(m);
        if let Some(hit) = posy_dfs(graph, matching, path, pos, budget)? {
            return Ok(Some(hit));
        }
        path.truncate(j + 1);
        pos[w] = usize::MAX;
        pos[m] = usize::MAX;
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeVerdict {
    pub konig_egervary: bool,
    pub matching_number: usize,
    /// Present when the order is within the independence limit.
    pub alpha: Option<usize>,
    pub certificate: Option<Certificate>,
}

/// A flower, else a posy with disjoint blossoms, else (when
/// `allow_overlap`) an overlapping posy, for the maximum matching `m`.
/// Without overlapping posies some non-KE graphs have no certificate; `K4`
/// is the smallest.
pub fn ke_certificate(
    graph: &Graph,
    m: &Matching,
    caps: &Caps,
    allow_overlap: bool,
) -> Result<Option<Certificate>> {
    if let Some(f) = find_flower(graph, m, caps)? {
        return Ok(Some(Certificate::Flower(f)));
    }
    if let Some(p) = find_posy(graph, m, caps)? {
        return Ok(Some(Certificate::Posy(p)));
    }
    if allow_overlap {
        return Ok(find_overlapping_posy(graph, m, caps)?.map(Certificate::OverlappingPosy));
    }
    Ok(None)
}

/// Decides `α + μ = n` through certificates of one maximum matching. Within
/// the independence limit the answer is cross-checked against `α` computed
/// directly.
pub fn is_konig_egervary(graph: &Graph, caps: &Caps) -> Result<KeVerdict> {
    let m = maximum_matching(graph);
    let certificate = ke_certificate(graph, &m, caps, true)?;
    let mu = m.size();
    let alpha = if graph.order() <= caps.mis_vertices {
        let alpha = independence_number(graph, caps)?;
        if (alpha + mu == graph.order()) != certificate.is_none() {
            return Err(Error::InternalInconsistency(format!(
                "certificate search says {} but alpha + mu = {} + {} against n = {}",
                if certificate.is_none() {
                    "KE"
                } else {
                    "not KE"
                },
                alpha,
                mu,
                graph.order()
            )));
        }
        Some(alpha)
    } else {
        None
    };
    Ok(KeVerdict {
        konig_egervary: certificate.is_none(),
        matching_number: mu,
        alpha,
        certificate,
    })
}
