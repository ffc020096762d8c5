use serde::{Serialize, Serializer};

use super::gallai_edmonds::{d_components, gallai_edmonds};
use crate::caps::Caps;
use crate::error::{Enumeration, Error, Result};
use crate::graph::{edge, Edge, Graph, VertexSet};

/// An odd cycle stored in canonical form: the rotation starting at its
/// smallest vertex, oriented so the second vertex is below the last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddCycle {
    vertices: Vec<usize>,
    chordless: bool,
}

impl OddCycle {
    /// Validates a cyclic vertex sequence of `graph` and canonicalizes it.
    pub fn new(graph: &Graph, seq: &[usize]) -> Result<Self> {
        let len = seq.len();
        if len < 3 || len % 2 == 0 {
            return Err(Error::Precondition(format!(
                "cycle length {len} is not odd and at least 3"
            )));
        }
        if let Some(&v) = seq.iter().find(|&&v| v >= graph.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: graph.order(),
            });
        }
        let set = VertexSet::new(seq.iter().copied());
        if set.len() != len {
            return Err(Error::Precondition("cycle repeats a vertex".into()));
        }
        for i in 0..len {
            let (u, v) = (seq[i], seq[(i + 1) % len]);
            if !graph.has_edge(u, v) {
                return Err(Error::Precondition(format!(
                    "cycle step {u} {v} is not an edge"
                )));
            }
        }
        Ok(Self::canonical(graph, seq))
    }

    pub(crate) fn canonical(graph: &Graph, seq: &[usize]) -> Self {
        let len = seq.len();
        let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
        let mut vertices: Vec<usize> = (0..len).map(|i| seq[(start + i) % len]).collect();
        if vertices[1] > vertices[len - 1] {
            vertices[1..].reverse();
        }
        let set = VertexSet::new(vertices.iter().copied());
        let internal = graph
            .edges()
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count();
        OddCycle {
            vertices,
            chordless: internal == len,
        }
    }

    /// Cyclic vertex sequence in canonical rotation.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.vertices.iter().copied())
    }

    pub fn is_chordless(&self) -> bool {
        self.chordless
    }

    /// Cycle edges, normalized, in cyclic order.
    pub fn edges(&self) -> Vec<Edge> {
        let len = self.len();
        (0..len)
            .map(|i| edge(self.vertices[i], self.vertices[(i + 1) % len]))
            .collect()
    }
}

impl Serialize for OddCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

struct CycleSearch<'g> {
    graph: &'g Graph,
    path: Vec<usize>,
    on_path: Vec<bool>,
    steps: usize,
    step_cap: usize,
    cycle_cap: usize,
    out: Vec<OddCycle>,
    truncated: bool,
    /// Stop at the first pair of found cycles sharing a vertex.
    stop_on_overlap: bool,
    overlap: Option<(usize, usize)>,
}

impl CycleSearch<'_> {
    fn done(&self) -> bool {
        self.truncated || self.overlap.is_some()
    }

    /// Extends simple paths from `path[0]` through vertices above it; each
    /// cycle is found twice (once per orientation) and kept once.
    fn extend(&mut self, v: usize) -> Result<()> {
        self.steps += 1;
        if self.steps > self.step_cap {
            return Err(Error::CapExceeded {
                what: "cycle search steps",
                cap: self.step_cap,
            });
        }
        let s = self.path[0];
        for &w in self.graph.neighbors(v) {
            if self.done() {
                return Ok(());
            }
            if w == s {
                let len = self.path.len();
                if len >= 3 && len % 2 == 1 && self.path[1] < self.path[len - 1] {
                    self.record();
                }
            } else if w > s && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(w);
                self.extend(w)?;
                self.path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }

    fn record(&mut self) {
        if self.out.len() == self.cycle_cap {
            self.truncated = true;
            return;
        }
        let c = OddCycle::canonical(self.graph, &self.path);
        if self.stop_on_overlap {
            let set = c.vertex_set();
            if let Some(i) = self
                .out
                .iter()
                .position(|o| !o.vertex_set().is_disjoint(&set))
            {
                self.overlap = Some((i, self.out.len()));
            }
        }
        self.out.push(c);
    }

    fn run(&mut self) -> Result<()> {
        for s in 0..self.graph.order() {
            if self.done() {
                break;
            }
            self.path = vec![s];
            self.on_path[s] = true;
            self.extend(s)?;
            self.on_path[s] = false;
        }
        Ok(())
    }
}

fn search<'g>(graph: &'g Graph, caps: &Caps, stop_on_overlap: bool) -> Result<CycleSearch<'g>> {
    let mut s = CycleSearch {
        graph,
        path: Vec::new(),
        on_path: vec![false; graph.order()],
        steps: 0,
        step_cap: caps.search_steps,
        cycle_cap: caps.odd_cycles,
        out: Vec::new(),
        truncated: false,
        stop_on_overlap,
        overlap: None,
    };
    s.run()?;
    Ok(s)
}

/// Every odd cycle of `graph`, sorted by canonical sequence. Hitting
/// `caps.odd_cycles` truncates; exhausting `caps.search_steps` is an error.
pub fn enumerate_odd_cycles(graph: &Graph, caps: &Caps) -> Result<Enumeration<OddCycle>> {
    let mut s = search(graph, caps, false)?;
    s.out.sort();
    Ok(Enumeration {
        items: s.out,
        truncated: s.truncated,
        cap: caps.odd_cycles,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDisjointness {
    pub disjoint: bool,
    /// All odd cycles when disjoint; the cycles found before the overlap otherwise.
    pub cycles: Vec<OddCycle>,
    pub overlap: Option<(OddCycle, OddCycle)>,
}

/// Decides whether all odd cycles are pairwise vertex-disjoint. When they
/// are, also confirms that every component of `G[D]` is a single vertex or
/// an odd cycle, which must hold for such graphs.
pub fn is_odd_cycle_disjoint(graph: &Graph, caps: &Caps) -> Result<CycleDisjointness> {
    if graph.order() > caps.cycle_order {
        return Err(Error::CapExceeded {
            what: "order for odd cycle enumeration",
            cap: caps.cycle_order,
        });
    }
    let mut s = search(graph, caps, true)?;
    if let Some((i, j)) = s.overlap {
        let pair = (s.out[i].clone(), s.out[j].clone());
        s.out.truncate(j);
        return Ok(CycleDisjointness {
            disjoint: false,
            cycles: s.out,
            overlap: Some(pair),
        });
    }
    if s.truncated {
        return Err(Error::CapExceeded {
            what: "odd cycles",
            cap: caps.odd_cycles,
        });
    }
    s.out.sort();
    check_d_components(graph)?;
    Ok(CycleDisjointness {
        disjoint: true,
        cycles: s.out,
        overlap: None,
    })
}

fn check_d_components(graph: &Graph) -> Result<()> {
    let ge = gallai_edmonds(graph);
    for comp in d_components(graph, &ge) {
        if comp.len() > 1 && !is_cycle_component(graph, &comp) {
            return Err(Error::TheoremViolation(format!(
                "component {comp:?} of G[D] is neither a vertex nor an odd cycle"
            )));
        }
    }
    Ok(())
}

/// True when `G[set]` is a single odd cycle.
pub(crate) fn is_cycle_component(graph: &Graph, set: &VertexSet) -> bool {
    set.len() % 2 == 1
        && set.len() >= 3
        && set.iter().all(|&v| {
            graph
                .neighbors(v)
                .iter()
                .filter(|&&w| set.contains(w))
                .count()
                == 2
        })
        && graph
            .induced_subgraph(set)
            .map(|s| s.graph.components().len() == 1)
            .unwrap_or(false)
}

/// Walks the cycle of a component recognized by [`is_cycle_component`].
pub(crate) fn cycle_of_component(graph: &Graph, set: &VertexSet) -> OddCycle {
    let start = set.as_slice()[0];
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = *graph
            .neighbors(cur)
            .iter()
            .find(|&&w| set.contains(w) && w != prev)
            .expect("cycle component vertices have two inside neighbors");
        if next == start {
            break;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
    OddCycle::canonical(graph, &seq)
}
