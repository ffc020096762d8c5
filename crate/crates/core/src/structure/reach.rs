use serde::Serialize;

use super::cycles::{cycle_of_component, is_cycle_component, is_odd_cycle_disjoint, OddCycle};
use super::flower::for_each_stem;
use super::gallai_edmonds::{d_components, gallai_edmonds, GeDecomposition};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::{alternating_labels, enumerate_maximum_matchings, maximum_matching};

/// `R(C)` with its parity classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachSet {
    pub cycle: OddCycle,
    pub r: VertexSet,
    /// Vertices at odd distance from the base along some stem.
    pub r_odd: VertexSet,
    /// Stem vertices at even positive distance from the base.
    pub r_even: VertexSet,
    /// Vertices seen at both parities. Only the oracle fills this in.
    #[serde(skip_serializing_if = "VertexSet::is_empty")]
    pub parity_conflicts: VertexSet,
}

impl ReachSet {
    fn empty(cycle: &OddCycle) -> Self {
        ReachSet {
            cycle: cycle.clone(),
            r: VertexSet::empty(),
            r_odd: VertexSet::empty(),
            r_even: VertexSet::empty(),
            parity_conflicts: VertexSet::empty(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }
}

/// `R(C)` by enumerating every maximum matching and every flower with
/// blossom `cycle` under it.
pub fn reach_set_oracle(graph: &Graph, cycle: &OddCycle, caps: &Caps) -> Result<ReachSet> {
    let n = graph.order();
    let matchings =
        enumerate_maximum_matchings(graph, caps.matchings).complete("maximum matchings")?;
    let mut in_r = vec![false; n];
    let mut parity = vec![0u8; n];
    let mut flowers = 0usize;
    for m in &matchings {
        let mut over_cap = false;
        for_each_stem(graph, m, cycle, caps.search_steps, |stem| {
            flowers += 1;
            if flowers > caps.flowers {
                over_cap = true;
                return false;
            }
            for (i, &x) in stem.iter().enumerate().skip(1) {
                parity[x] |= 1 << (i % 2);
            }
            in_r[stem[0]] = true;
            true
        })?;
        if over_cap {
            return Err(Error::CapExceeded {
                what: "flowers",
                cap: caps.flowers,
            });
        }
    }
    if !in_r.iter().any(|&b| b) {
        return Ok(ReachSet::empty(cycle));
    }
    let on_cycle = cycle.vertex_set();
    let pick = |bit: u8| VertexSet::new((0..n).filter(|&v| parity[v] & bit != 0));
    let r_even = pick(1);
    let r_odd = pick(2);
    Ok(ReachSet {
        cycle: cycle.clone(),
        r: on_cycle.union(&r_even).union(&r_odd),
        parity_conflicts: r_odd.intersection(&r_even),
        r_odd,
        r_even,
    })
}

/// `R(C)` from a single maximum matching and its alternating labels.
///
/// `cycle` must either leave `D(G)` (then `R(C) = ∅`) or be a whole
/// component of `G[D]`. Starting from `V(C)`, the search alternates between
/// `D`-vertices and their `A`-neighbors, absorbing each `D`-component it
/// touches whole.
///
/// `r` always agrees with [`reach_set_oracle`]. The parity classes agree
/// whenever the oracle reports no conflicts, which covers every R-disjoint
/// graph; when stems can cross another non-trivial component of `G[D]`, that
/// component is reported as even here.
pub fn reach_set(graph: &Graph, cycle: &OddCycle) -> Result<ReachSet> {
    let n = graph.order();
    let m = maximum_matching(graph);
    let labels = alternating_labels(graph, &m).ok_or_else(|| {
        Error::InternalInconsistency("blossom engine returned a non-maximum matching".into())
    })?;
    let d = labels.even;
    let on_cycle = cycle.vertex_set();
    if !on_cycle.is_subset(&d) {
        return Ok(ReachSet::empty(cycle));
    }
    let comp_of = component_index(graph, &d);
    let own = comp_of[cycle.vertices()[0]];
    if on_cycle.iter().any(|&v| comp_of[v] != own) || comp_size(&comp_of, own) != cycle.len() {
        return Err(Error::Precondition(format!(
            "cycle {:?} is not a component of G[D]",
            cycle.vertices()
        )));
    }
    let is_d = d.to_mask(n);
    let mut even = on_cycle.to_mask(n);
    let mut odd = vec![false; n];
    let mut entered = vec![false; n];
    entered[own] = true;
    let mut queue: std::collections::VecDeque<usize> = on_cycle.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &y in graph.neighbors(x) {
            if is_d[y] || odd[y] {
                continue;
            }
            odd[y] = true;
            for &z in graph.neighbors(y) {
                if is_d[z] && !entered[comp_of[z]] {
                    entered[comp_of[z]] = true;
                    for w in (0..n).filter(|&w| comp_of[w] == comp_of[z]) {
                        even[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let r_odd = VertexSet::from_mask(&odd);
    let r_even = VertexSet::from_mask(&even).difference(&on_cycle);
    Ok(ReachSet {
        cycle: cycle.clone(),
        r: on_cycle.union(&r_odd).union(&r_even),
        r_odd,
        r_even,
        parity_conflicts: VertexSet::empty(),
    })
}

/// Component index of each `D`-vertex in `G[D]`; `usize::MAX` elsewhere.
fn component_index(graph: &Graph, d: &VertexSet) -> Vec<usize> {
    let mut idx = vec![usize::MAX; graph.order()];
    for (i, comp) in graph
        .components_within(&d.to_mask(graph.order()))
        .iter()
        .enumerate()
    {
        for &v in comp {
            idx[v] = i;
        }
    }
    idx
}

fn comp_size(comp_of: &[usize], c: usize) -> usize {
    comp_of.iter().filter(|&&x| x == c).count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RDisjointVerdict {
    RDisjoint {
        reach_sets: Vec<ReachSet>,
    },
    EmptyReach {
        cycle: OddCycle,
    },
    OverlappingReach {
        first: OddCycle,
        second: OddCycle,
        shared: VertexSet,
    },
    NoOddCycle,
}

impl RDisjointVerdict {
    pub fn is_r_disjoint(&self) -> bool {
        matches!(self, RDisjointVerdict::RDisjoint { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            RDisjointVerdict::RDisjoint { .. } => "r_disjoint",
            RDisjointVerdict::EmptyReach { .. } => "empty_reach",
            RDisjointVerdict::OverlappingReach { .. } => "overlapping_reach",
            RDisjointVerdict::NoOddCycle => "no_odd_cycle",
        }
    }
}

/// Decides R-disjointness.
///
/// Two odd cycles sharing a vertex always rule it out: either one of them
/// has an empty reach set or both reach sets contain the shared vertex. So
/// only odd-cycle-disjoint graphs need every reach set, and in those each
/// odd cycle inside `D` is a component of `G[D]`, where the fast path applies.
pub fn is_r_disjoint(graph: &Graph, caps: &Caps) -> Result<RDisjointVerdict> {
    if graph.is_bipartite() {
        return Ok(RDisjointVerdict::NoOddCycle);
    }
    let ge = gallai_edmonds(graph);
    let disjointness = is_odd_cycle_disjoint(graph, caps)?;
    if let Some((first, second)) = disjointness.overlap {
        for c in [&first, &second] {
            if reach_is_empty(graph, &ge, c, caps)? {
                return Ok(RDisjointVerdict::EmptyReach { cycle: c.clone() });
            }
        }
        let shared = first.vertex_set().intersection(&second.vertex_set());
        return Ok(RDisjointVerdict::OverlappingReach {
            first,
            second,
            shared,
        });
    }
    let mut sets = Vec::with_capacity(disjointness.cycles.len());
    for c in &disjointness.cycles {
        if !c.vertex_set().is_subset(&ge.d) {
            return Ok(RDisjointVerdict::EmptyReach { cycle: c.clone() });
        }
        sets.push(reach_set(graph, c)?);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let shared = sets[i].r.intersection(&sets[j].r);
            if !shared.is_empty() {
                return Ok(RDisjointVerdict::OverlappingReach {
                    first: sets[i].cycle.clone(),
                    second: sets[j].cycle.clone(),
                    shared,
                });
            }
        }
    }
    Ok(RDisjointVerdict::RDisjoint { reach_sets: sets })
}

fn reach_is_empty(
    graph: &Graph,
    ge: &GeDecomposition,
    cycle: &OddCycle,
    caps: &Caps,
) -> Result<bool> {
    if !cycle.vertex_set().is_subset(&ge.d) {
        return Ok(true);
    }
    let comps = d_components(graph, ge);
    if comps.iter().any(|k| *k == cycle.vertex_set()) {
        return Ok(reach_set(graph, cycle)?.is_empty());
    }
    let matchings =
        enumerate_maximum_matchings(graph, caps.matchings).complete("maximum matchings")?;
    for m in &matchings {
        let mut found = false;
        for_each_stem(graph, m, cycle, caps.search_steps, |_| {
            found = true;
            false
        })?;
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The partition of `V` into reach sets and the bipartite remainder `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowerDecomposition {
    /// One reach set per odd cycle, in canonical cycle order.
    pub parts: Vec<ReachSet>,
    pub b: VertexSet,
    pub k: usize,
}

impl FlowerDecomposition {
    /// Vertex sets of the parts followed by `B`.
    pub fn part_sets(&self) -> Vec<VertexSet> {
        self.parts
            .iter()
            .map(|p| p.r.clone())
            .chain([self.b.clone()])
            .collect()
    }
}

/// The flower decomposition of an R-disjoint graph, validated before return:
/// the parts partition `V`, `G[B]` is bipartite, and each `G[R(C)]` has `C`
/// as its only odd cycle and is not König–Egerváry.
pub fn flower_decomposition(graph: &Graph, caps: &Caps) -> Result<FlowerDecomposition> {
    let verdict = is_r_disjoint(graph, caps)?;
    let RDisjointVerdict::RDisjoint { reach_sets } = verdict else {
        return Err(Error::Precondition(format!(
            "graph is not R-disjoint ({})",
            verdict.name()
        )));
    };
    let mut covered = VertexSet::empty();
    for p in &reach_sets {
        covered = covered.union(&p.r);
    }
    let b = graph.vertices().difference(&covered);
    let decomp = FlowerDecomposition {
        k: reach_sets.len(),
        parts: reach_sets,
        b,
    };
    validate(graph, &decomp, caps)?;
    Ok(decomp)
}

fn validate(graph: &Graph, decomp: &FlowerDecomposition, caps: &Caps) -> Result<()> {
    let fail = |msg: String| Err(Error::TheoremViolation(msg));
    let total: usize = decomp.part_sets().iter().map(VertexSet::len).sum();
    if total != graph.order() {
        return fail("reach sets and B do not partition V".into());
    }
    if !graph.induced_subgraph(&decomp.b)?.graph.is_bipartite() {
        return fail(format!("G[B] is not bipartite for B = {:?}", decomp.b));
    }
    for p in &decomp.parts {
        let sub = graph.induced_subgraph(&p.r)?;
        let cycles = is_odd_cycle_disjoint(&sub.graph, caps)?;
        let expected = sub.project(&p.cycle.vertex_set());
        if cycles.cycles.len() != 1 || cycles.cycles[0].vertex_set() != expected {
            return fail(format!(
                "G[R(C)] for C = {:?} does not have C as its only odd cycle",
                p.cycle.vertices()
            ));
        }
        if super::flower::is_konig_egervary(&sub.graph, caps)?.konig_egervary {
            return fail(format!(
                "G[R(C)] for C = {:?} is König–Egerváry",
                p.cycle.vertices()
            ));
        }
    }
    Ok(())
}

/// Odd cycles that are whole components of `G[D]`.
pub fn d_cycle_components(graph: &Graph, ge: &GeDecomposition) -> Vec<OddCycle> {
    d_components(graph, ge)
        .iter()
        .filter(|k| is_cycle_component(graph, k))
        .map(|k| cycle_of_component(graph, k))
        .collect()
}
