//! Executable identities for R-disjoint graphs. Every check recomputes its
//! quantities from the exhaustive engines; a check that runs out of budget
//! is `skipped`, never `pass`.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{serialize_graph, Format, Graph, Induced, VertexSet};
use crate::independence::{
    critical_difference, critical_in_d, enumerate_mis, independence_number, ker_set,
};
use crate::matching::{enumerate_maximum_matchings, matching_number_oracle};
use crate::structure::{gallai_edmonds, FlowerDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    /// Present on failure: the graph in graph6 plus the sets involved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionSummary {
    pub k: usize,
    pub parts: Vec<VertexSet>,
    pub b: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    /// graph6 encoding of the input.
    pub graph: String,
    pub decomposition: DecompositionSummary,
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    fn new(graph: &Graph, decomp: &FlowerDecomposition) -> Self {
        TheoremReport {
            graph: serialize_graph(graph, Format::Graph6),
            decomposition: DecompositionSummary {
                k: decomp.k,
                parts: decomp.parts.iter().map(|p| p.r.clone()).collect(),
                b: decomp.b.clone(),
            },
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    fn merge(&mut self, other: TheoremReport) {
        self.checks.extend(other.checks);
    }
}

enum Verdict {
    Pass(String),
    /// Message and the sets that exhibit the failure.
    Fail(String, Value),
}

type Outcome = Result<Verdict>;

fn fail(msg: impl Into<String>, witness: Value) -> Outcome {
    Ok(Verdict::Fail(msg.into(), witness))
}

struct Ctx<'a> {
    graph: &'a Graph,
    decomp: &'a FlowerDecomposition,
    caps: &'a Caps,
}

impl Ctx<'_> {
    fn sub(&self, set: &VertexSet) -> Result<Induced> {
        self.graph.induced_subgraph(set)
    }

    fn run(&self, report: &mut TheoremReport, name: &'static str, body: impl FnOnce() -> Outcome) {
        let g6 = serialize_graph(self.graph, Format::Graph6);
        let record = match body() {
            Ok(Verdict::Pass(detail)) => CheckRecord {
                name,
                status: Status::Pass,
                detail,
                witness: None,
            },
            Ok(Verdict::Fail(detail, mut witness)) => {
                witness["graph"] = json!(g6);
                witness["decomposition"] = json!(self.decomp.part_sets());
                CheckRecord {
                    name,
                    status: Status::Fail,
                    detail,
                    witness: Some(witness),
                }
            }
            Err(e) if e.is_cap() => CheckRecord {
                name,
                status: Status::Skipped,
                detail: e.to_string(),
                witness: None,
            },
            Err(e) => CheckRecord {
                name,
                status: Status::Fail,
                detail: e.to_string(),
                witness: Some(json!({ "graph": g6, "decomposition": self.decomp.part_sets() })),
            },
        };
        report.checks.push(record);
    }
}

fn check_decomposition(graph: &Graph, decomp: &FlowerDecomposition) -> Result<()> {
    let mut seen = vec![false; graph.order()];
    for part in decomp.part_sets() {
        graph.check_set(&part)?;
        for &v in part.iter() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("vertex {v} lies in two parts")));
            }
        }
    }
    if seen.iter().any(|&s| !s) || decomp.parts.len() != decomp.k {
        return Err(Error::Precondition(
            "decomposition does not partition V".into(),
        ));
    }
    Ok(())
}

fn sum_detail<T: std::fmt::Display>(total: T, parts: &[T]) -> String {
    let terms: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("{total} = {}", terms.join(" + "))
}

/// `μ`, `α` and `d` add up over the parts. The matching check also asserts
/// that every maximum matching restricts to a maximum matching of each part;
/// the `α` check also asserts that each `G[R(C)]` has a maximum independent
/// set inside `D(G)`; the `d` check also asserts that `G` has a critical
/// independent set inside `D(G)`.
pub fn verify_additivity(
    graph: &Graph,
    decomp: &FlowerDecomposition,
    caps: &Caps,
) -> Result<TheoremReport> {
    check_decomposition(graph, decomp)?;
    let ctx = Ctx {
        graph,
        decomp,
        caps,
    };
    let parts = decomp.part_sets();
    let ge = gallai_edmonds(graph);
    let mut report = TheoremReport::new(graph, decomp);

    ctx.run(&mut report, "mu_additivity", || {
        let mu = matching_number_oracle(graph);
        let mut mu_parts = Vec::new();
        for p in &parts {
            mu_parts.push(matching_number_oracle(&ctx.sub(p)?.graph));
        }
        let detail = sum_detail(mu, &mu_parts);
        if mu != mu_parts.iter().sum::<usize>() {
            return fail(detail, json!({ "parts_mu": mu_parts }));
        }
        let all =
            enumerate_maximum_matchings(graph, caps.matchings).complete("maximum matchings")?;
        for m in &all {
            for (p, &want) in parts.iter().zip(&mu_parts) {
                let got = m.restrict(p).len();
                if got != want {
                    return fail(
                        format!(
                            "a maximum matching restricts to {got} edges in a part with μ = {want}"
                        ),
                        json!({ "matching": m, "part": p }),
                    );
                }
            }
        }
        Ok(Verdict::Pass(detail))
    });

    ctx.run(&mut report, "alpha_additivity", || {
        let alpha = independence_number(graph, caps)?;
        let mut alpha_parts = Vec::new();
        for p in &parts {
            alpha_parts.push(independence_number(&ctx.sub(p)?.graph, caps)?);
        }
        let detail = sum_detail(alpha, &alpha_parts);
        if alpha != alpha_parts.iter().sum::<usize>() {
            return fail(detail, json!({ "parts_alpha": alpha_parts }));
        }
        for part in &decomp.parts {
            let sub = ctx.sub(&part.r)?;
            let mis = enumerate_mis(&sub.graph, caps)?.complete("maximum independent sets")?;
            if !mis.iter().any(|s| sub.lift(s).is_subset(&ge.d)) {
                return fail(
                    "no maximum independent set of G[R(C)] lies inside D(G)",
                    json!({ "part": part.r, "d": ge.d }),
                );
            }
        }
        Ok(Verdict::Pass(detail))
    });

    ctx.run(&mut report, "d_additivity", || {
        let d = critical_difference(graph, caps)?.d;
        let mut d_parts = Vec::new();
        for p in &parts {
            d_parts.push(critical_difference(&ctx.sub(p)?.graph, caps)?.d);
        }
        let detail = sum_detail(d, &d_parts);
        if d != d_parts.iter().sum::<i64>() {
            return fail(detail, json!({ "parts_d": d_parts }));
        }
        let inside = critical_in_d(graph, &ge, caps)?;
        Ok(Verdict::Pass(format!(
            "{detail}; critical set {inside:?} inside D"
        )))
    });
    Ok(report)
}

struct Profile {
    alpha: usize,
    core: VertexSet,
    corona: VertexSet,
    ker: VertexSet,
}

fn profile(graph: &Graph, caps: &Caps) -> Result<Profile> {
    let mis = enumerate_mis(graph, caps)?.complete("maximum independent sets")?;
    Ok(Profile {
        alpha: mis.first().map_or(0, VertexSet::len),
        core: mis
            .iter()
            .fold(graph.vertices(), |acc, s| acc.intersection(s)),
        corona: mis.iter().fold(VertexSet::empty(), |acc, s| acc.union(s)),
        ker: ker_set(graph, caps)?,
    })
}

const MAIN_CHECKS: [&str; 5] = [
    "ker_eq_core",
    "corona_cover",
    "corona_core_count",
    "core_decomposition",
    "ker_decomposition",
];

/// `ker = core`, `corona ∪ N(core) = V`, `|corona| + |core| = 2α + k`, and
/// the part-wise formulas for `core` and `ker`.
pub fn verify_main_theorems(
    graph: &Graph,
    decomp: &FlowerDecomposition,
    caps: &Caps,
) -> Result<TheoremReport> {
    check_decomposition(graph, decomp)?;
    let ctx = Ctx {
        graph,
        decomp,
        caps,
    };
    let mut report = TheoremReport::new(graph, decomp);
    let p = match profile(graph, caps) {
        Ok(p) => p,
        Err(e) if e.is_cap() => {
            for name in MAIN_CHECKS {
                report.checks.push(CheckRecord {
                    name,
                    status: Status::Skipped,
                    detail: e.to_string(),
                    witness: None,
                });
            }
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    ctx.run(&mut report, "ker_eq_core", || {
        if p.ker != p.core {
            return fail(
                format!("ker {:?} differs from core {:?}", p.ker, p.core),
                json!({ "ker": p.ker, "core": p.core }),
            );
        }
        Ok(Verdict::Pass(format!("ker = core = {:?}", p.core)))
    });
    ctx.run(&mut report, "corona_cover", || {
        let covered = p.corona.union(&graph.neighborhood(&p.core));
        if covered != graph.vertices() {
            return fail(
                "corona ∪ N(core) misses vertices",
                json!({ "missing": graph.vertices().difference(&covered) }),
            );
        }
        Ok(Verdict::Pass(format!(
            "corona ∪ N(core) = V with corona = {:?}",
            p.corona
        )))
    });
    ctx.run(&mut report, "corona_core_count", || {
        let (lhs_a, lhs_b, k) = (p.corona.len(), p.core.len(), decomp.k);
        let detail = format!("{lhs_a} + {lhs_b} = 2·{} + {k}", p.alpha);
        if lhs_a + lhs_b != 2 * p.alpha + k {
            return fail(
                detail.replace('=', "!="),
                json!({ "core": p.core, "corona": p.corona, "alpha": p.alpha, "k": k }),
            );
        }
        Ok(Verdict::Pass(detail))
    });
    ctx.run(&mut report, "core_decomposition", || {
        let mut union = VertexSet::empty();
        for part in &decomp.parts {
            let sub = ctx.sub(&part.r.union(&decomp.b))?;
            let mis = enumerate_mis(&sub.graph, caps)?.complete("maximum independent sets")?;
            let sub_core = mis
                .iter()
                .fold(sub.graph.vertices(), |acc, s| acc.intersection(s));
            union = union.union(&sub.lift(&sub_core));
        }
        if decomp.parts.is_empty() || union != p.core {
            return fail(
                format!(
                    "core {:?} differs from the union {union:?} over G[R(C) ∪ B]",
                    p.core
                ),
                json!({ "core": p.core, "union": union }),
            );
        }
        Ok(Verdict::Pass(format!("core = {union:?}")))
    });
    ctx.run(&mut report, "ker_decomposition", || {
        let mut union = VertexSet::empty();
        for part in decomp.part_sets() {
            let sub = ctx.sub(&part)?;
            union = union.union(&sub.lift(&ker_set(&sub.graph, caps)?));
        }
        if union != p.ker {
            return fail(
                format!("ker {:?} differs from the part-wise union {union:?}", p.ker),
                json!({ "ker": p.ker, "union": union }),
            );
        }
        Ok(Verdict::Pass(format!("ker = {union:?}")))
    });
    Ok(report)
}

/// Every maximum matching has `⌊|C|/2⌋` edges on each odd cycle `C`.
pub fn verify_cycle_edge_count(
    graph: &Graph,
    decomp: &FlowerDecomposition,
    caps: &Caps,
) -> Result<TheoremReport> {
    check_decomposition(graph, decomp)?;
    let ctx = Ctx {
        graph,
        decomp,
        caps,
    };
    let mut report = TheoremReport::new(graph, decomp);
    let all = enumerate_maximum_matchings(graph, caps.matchings);
    if all.truncated {
        report.checks.push(CheckRecord {
            name: "cycle_edge_count",
            status: Status::Skipped,
            detail: format!(
                "matching enumeration stopped at cap {}; {} matchings checked",
                all.cap,
                all.items.len()
            ),
            witness: None,
        });
        return Ok(report);
    }
    ctx.run(&mut report, "cycle_edge_count", || {
        for m in &all.items {
            for part in &decomp.parts {
                let on_cycle = part
                    .cycle
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| m.contains(u, v))
                    .count();
                if on_cycle != part.cycle.len() / 2 {
                    return fail(
                        format!(
                            "a maximum matching has {on_cycle} edges on a {}-cycle",
                            part.cycle.len()
                        ),
                        json!({ "matching": m, "cycle": part.cycle }),
                    );
                }
            }
        }
        Ok(Verdict::Pass(format!(
            "{} maximum matchings checked",
            all.items.len()
        )))
    });
    Ok(report)
}

/// Boundary and membership structure of the parts: no maximum matching
/// crosses parts, `∂(B) ⊆ A ∪ C`, `∂(R(C)) ⊆ A`, closed neighborhoods of
/// `V(C) ∪ R_even` stay in `R(C)`, `V(C) ∪ R_even ⊆ D`, `R_odd ⊆ A`, and the
/// partition `(D, A, C)` is the union of the part-wise partitions.
pub fn verify_boundary_structure(
    graph: &Graph,
    decomp: &FlowerDecomposition,
    caps: &Caps,
) -> Result<TheoremReport> {
    check_decomposition(graph, decomp)?;
    let ctx = Ctx {
        graph,
        decomp,
        caps,
    };
    let mut report = TheoremReport::new(graph, decomp);
    ctx.run(&mut report, "boundary_structure", || boundary_body(&ctx));
    Ok(report)
}

fn boundary_body(ctx: &Ctx<'_>) -> Outcome {
    let (graph, decomp) = (ctx.graph, ctx.decomp);
    let ge = gallai_edmonds(graph);
    let (_, b_boundary) = graph.boundary(&decomp.b)?;
    if !b_boundary.is_subset(&ge.a.union(&ge.c)) {
        return fail("∂(B) leaves A ∪ C", json!({ "boundary": b_boundary }));
    }
    for part in &decomp.parts {
        let (_, boundary) = graph.boundary(&part.r)?;
        if !boundary.is_subset(&ge.a) {
            return fail(
                "∂(R(C)) leaves A",
                json!({ "part": part.r, "boundary": boundary }),
            );
        }
        let inner = part.cycle.vertex_set().union(&part.r_even);
        if !inner.is_subset(&ge.d) || !part.r_odd.is_subset(&ge.a) {
            return fail(
                "parity classes disagree with (D, A)",
                json!({ "part": part.r, "r_odd": part.r_odd, "r_even": part.r_even }),
            );
        }
        for &x in inner.iter() {
            if let Some(&y) = graph.neighbors(x).iter().find(|&&y| !part.r.contains(y)) {
                return fail(
                    "closed neighborhood leaves R(C)",
                    json!({ "part": part.r, "edge": [x, y] }),
                );
            }
        }
    }

    let (mut d, mut a, mut c) = (VertexSet::empty(), VertexSet::empty(), VertexSet::empty());
    for (i, set) in decomp.part_sets().iter().enumerate() {
        let sub = ctx.sub(set)?;
        let local = gallai_edmonds(&sub.graph);
        let local_c = sub.lift(&local.c);
        if i < decomp.parts.len() && !local_c.is_empty() {
            return fail(
                "C(G[R(C)]) is nonempty",
                json!({ "part": set, "c": local_c }),
            );
        }
        d = d.union(&sub.lift(&local.d));
        a = a.union(&sub.lift(&local.a));
        c = c.union(&local_c);
    }
    if (&d, &a, &c) != (&ge.d, &ge.a, &ge.c) {
        return fail(
            "(D, A, C) is not the union of the part-wise partitions",
            json!({ "d": d, "a": a, "c": c }),
        );
    }

    let all =
        enumerate_maximum_matchings(graph, ctx.caps.matchings).complete("maximum matchings")?;
    let parts = decomp.part_sets();
    let part_of = |v: usize| parts.iter().position(|p| p.contains(v));
    for m in &all {
        if let Some((u, v)) = m
            .edges()
            .into_iter()
            .find(|&(u, v)| part_of(u) != part_of(v))
        {
            return fail(
                "a maximum matching crosses parts",
                json!({ "matching": m, "edge": [u, v] }),
            );
        }
    }
    Ok(Verdict::Pass(format!(
        "D = {:?}, A = {:?}, C = {:?}",
        ge.d, ge.a, ge.c
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Main,
    Additivity,
    /// Edges of maximum matchings on each odd cycle.
    #[serde(rename = "cycle-edges")]
    CycleEdges,
    Boundary,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "main" => Ok(Suite::Main),
            "additivity" => Ok(Suite::Additivity),
            "cycle-edges" => Ok(Suite::CycleEdges),
            "boundary" => Ok(Suite::Boundary),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

/// Runs the selected checks and concatenates their records.
pub fn verify(
    graph: &Graph,
    decomp: &FlowerDecomposition,
    suite: Suite,
    caps: &Caps,
) -> Result<TheoremReport> {
    let mut report = TheoremReport::new(graph, decomp);
    if matches!(suite, Suite::All | Suite::Additivity) {
        report.merge(verify_additivity(graph, decomp, caps)?);
    }
    if matches!(suite, Suite::All | Suite::Main) {
        report.merge(verify_main_theorems(graph, decomp, caps)?);
    }
    if matches!(suite, Suite::All | Suite::CycleEdges) {
        report.merge(verify_cycle_edge_count(graph, decomp, caps)?);
    }
    if matches!(suite, Suite::All | Suite::Boundary) {
        report.merge(verify_boundary_structure(graph, decomp, caps)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;
    use crate::structure::flower_decomposition;

    fn report(g: &Graph) -> TheoremReport {
        let caps = Caps::default();
        verify(
            g,
            &flower_decomposition(g, &caps).unwrap(),
            Suite::All,
            &caps,
        )
        .unwrap()
    }

    #[test]
    fn all_checks_pass_on_r_disjoint_fixtures() {
        for (name, g) in fixtures::all() {
            if name == "posy_bridge" || name == "p4" {
                continue;
            }
            let r = report(&g);
            assert_eq!(r.checks.len(), 10, "{name}");
            for c in &r.checks {
                assert_eq!(c.status, Status::Pass, "{name}: {} {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn stable_check_names() {
        let names: Vec<_> = report(&fixtures::tadpole_k2())
            .checks
            .iter()
            .map(|c| c.name)
            .collect();
        assert_eq!(
            names,
            [
                "mu_additivity",
                "alpha_additivity",
                "d_additivity",
                "ker_eq_core",
                "corona_cover",
                "corona_core_count",
                "core_decomposition",
                "ker_decomposition",
                "cycle_edge_count",
                "boundary_structure"
            ]
        );
    }

    #[test]
    fn details_show_the_sums() {
        let r = report(&fixtures::tadpole_k2());
        let get = |n: &str| {
            r.checks
                .iter()
                .find(|c| c.name == n)
                .unwrap()
                .detail
                .clone()
        };
        assert_eq!(get("mu_additivity"), "3 = 2 + 1");
        assert_eq!(get("alpha_additivity"), "3 = 2 + 1");
        assert!(get("d_additivity").starts_with("0 = 0 + 0"));
        assert_eq!(get("corona_core_count"), "7 + 0 = 2·3 + 1");
        let r = report(&fixtures::double_pendant());
        let get = |n: &str| {
            r.checks
                .iter()
                .find(|c| c.name == n)
                .unwrap()
                .detail
                .clone()
        };
        assert_eq!(get("corona_core_count"), "5 + 2 = 2·3 + 1");
    }

    #[test]
    fn bad_decomposition_fails_with_witness() {
        let g = fixtures::tadpole_k2();
        let caps = Caps::default();
        let mut d = flower_decomposition(&g, &caps).unwrap();
        d.parts[0].r = crate::vset![0, 1, 2, 3, 4, 5];
        d.b = crate::vset![6];
        let r = verify_boundary_structure(&g, &d, &caps).unwrap();
        assert_eq!(r.checks[0].status, Status::Fail);
        assert!(r.checks[0].witness.as_ref().unwrap().get("graph").is_some());
    }

    #[test]
    fn caps_skip_rather_than_pass() {
        let g = fixtures::two_tadpoles();
        let caps = Caps::default();
        let d = flower_decomposition(&g, &caps).unwrap();
        let tight = Caps {
            matchings: 2,
            ..caps
        };
        let r = verify_cycle_edge_count(&g, &d, &tight).unwrap();
        assert_eq!(r.checks[0].status, Status::Skipped);
        let r = verify_main_theorems(
            &g,
            &d,
            &Caps {
                mis_vertices: 4,
                ..caps
            },
        )
        .unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::Skipped));
    }
}
