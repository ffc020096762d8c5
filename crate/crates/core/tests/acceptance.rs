//! Acceptance criteria 1-9. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{set, to_set, Set};
use reachkit::cli::{self, analyze, search_params};
use reachkit::generator::generate_r_disjoint;
use reachkit::graph::{fixtures, serialize_graph, Format};
use reachkit::independence::{
    core_corona, critical_difference, independence_number, independence_profile, ker_set,
};
use reachkit::matching::{enumerate_maximum_matchings, maximum_matching};
use reachkit::spectral::{adjacency_determinant, check_determinant_conjecture};
use reachkit::structure::{
    enumerate_odd_cycles, flower_decomposition, gallai_edmonds, gallai_edmonds_oracle,
    is_konig_egervary, is_r_disjoint, ke_certificate, reach_set, reach_set_oracle, OddCycle,
};
use reachkit::verifier::{verify, Status, Suite};
use reachkit::{Caps, Error, Graph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

struct FixtureValues {
    name: &'static str,
    mu: usize,
    alpha: usize,
    d: i64,
    dac: [&'static [usize]; 3],
    /// (cycle, R, R_odd, R_even)
    reach: &'static [(
        &'static [usize],
        &'static [usize],
        &'static [usize],
        &'static [usize],
    )],
    b: Option<&'static [usize]>,
    core: &'static [usize],
    corona: &'static [usize],
    ker: &'static [usize],
    ke: bool,
    verdict: &'static str,
}

const FIXTURES: &[FixtureValues] = &[
    FixtureValues {
        name: "triangle",
        mu: 1,
        alpha: 1,
        d: 0,
        dac: [&[0, 1, 2], &[], &[]],
        reach: &[(&[0, 1, 2], &[0, 1, 2], &[], &[])],
        b: Some(&[]),
        core: &[],
        corona: &[0, 1, 2],
        ker: &[],
        ke: false,
        verdict: "r_disjoint",
    },
    FixtureValues {
        name: "c5",
        mu: 2,
        alpha: 2,
        d: 0,
        dac: [&[0, 1, 2, 3, 4], &[], &[]],
        reach: &[(&[0, 1, 2, 3, 4], &[0, 1, 2, 3, 4], &[], &[])],
        b: Some(&[]),
        core: &[],
        corona: &[0, 1, 2, 3, 4],
        ker: &[],
        ke: false,
        verdict: "r_disjoint",
    },
    FixtureValues {
        name: "tadpole",
        mu: 2,
        alpha: 2,
        d: 0,
        dac: [&[0, 1, 2, 4], &[3], &[]],
        reach: &[(&[0, 1, 2], &[0, 1, 2, 3, 4], &[3], &[4])],
        b: Some(&[]),
        core: &[],
        corona: &[0, 1, 2, 3, 4],
        ker: &[],
        ke: false,
        verdict: "r_disjoint",
    },
    FixtureValues {
        name: "tadpole_k2",
        mu: 3,
        alpha: 3,
        d: 0,
        dac: [&[0, 1, 2, 4], &[3], &[5, 6]],
        reach: &[(&[0, 1, 2], &[0, 1, 2, 3, 4], &[3], &[4])],
        b: Some(&[5, 6]),
        core: &[],
        corona: &[0, 1, 2, 3, 4, 5, 6],
        ker: &[],
        ke: false,
        verdict: "r_disjoint",
    },
    FixtureValues {
        name: "two_tadpoles",
        mu: 4,
        alpha: 4,
        d: 0,
        dac: [&[0, 1, 2, 4, 5, 6, 7, 9], &[3, 8], &[]],
        reach: &[
            (&[0, 1, 2], &[0, 1, 2, 3, 4], &[3], &[4]),
            (&[5, 6, 7], &[5, 6, 7, 8, 9], &[8], &[9]),
        ],
        b: Some(&[]),
        core: &[],
        corona: &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
        ker: &[],
        ke: false,
        verdict: "r_disjoint",
    },
    FixtureValues {
        name: "posy_bridge",
        mu: 3,
        alpha: 2,
        d: 0,
        dac: [&[], &[], &[0, 1, 2, 3, 4, 5]],
        reach: &[(&[0, 1, 2], &[], &[], &[]), (&[3, 4, 5], &[], &[], &[])],
        b: None,
        core: &[],
        corona: &[0, 1, 2, 3, 4, 5],
        ker: &[],
        ke: false,
        verdict: "empty_reach",
    },
    FixtureValues {
        name: "p4",
        mu: 2,
        alpha: 2,
        d: 0,
        dac: [&[], &[], &[0, 1, 2, 3]],
        reach: &[],
        b: None,
        core: &[],
        corona: &[0, 1, 2, 3],
        ker: &[],
        ke: true,
        verdict: "no_odd_cycle",
    },
    FixtureValues {
        name: "double_pendant",
        mu: 2,
        alpha: 3,
        d: 1,
        dac: [&[0, 1, 2, 4, 5], &[3], &[]],
        reach: &[(&[0, 1, 2], &[0, 1, 2, 3, 4, 5], &[3], &[4, 5])],
        b: Some(&[]),
        core: &[4, 5],
        corona: &[0, 1, 2, 4, 5],
        ker: &[4, 5],
        ke: false,
        verdict: "r_disjoint",
    },
];

fn fixture_oracle(g: &Graph, f: &FixtureValues) -> Outcome {
    let n = g.order();
    ensure!(common::mu(g) == f.mu, "mu oracle {}", common::mu(g));
    ensure!(
        common::alpha(g) == f.alpha,
        "alpha oracle {}",
        common::alpha(g)
    );
    let (d, crit) = common::critical_independent_sets(g);
    ensure!(d == f.d, "d oracle {d}");
    let (dd, aa, cc) = common::gallai_edmonds(g);
    ensure!([dd, aa, cc] == f.dac.map(set), "D/A/C oracle");
    let cycles = common::odd_cycles(g);
    ensure!(cycles.len() == f.reach.len(), "odd cycle oracle {cycles:?}");
    let mut all_r = Vec::new();
    for (c, &(want_c, r, odd, even)) in cycles.iter().zip(f.reach) {
        ensure!(c.as_slice() == want_c, "cycle oracle {c:?}");
        let got = common::reach(g, c);
        ensure!(
            got.r == set(r) && got.odd == set(odd) && got.even == set(even),
            "reach oracle for {c:?}"
        );
        all_r.push(got.r);
    }
    let disjoint = all_r
        .iter()
        .enumerate()
        .all(|(i, a)| all_r[i + 1..].iter().all(|b| a.is_disjoint(b)));
    let verdict = if cycles.is_empty() {
        "no_odd_cycle"
    } else if all_r.iter().any(Set::is_empty) {
        "empty_reach"
    } else if !disjoint {
        "overlapping_reach"
    } else {
        "r_disjoint"
    };
    ensure!(verdict == f.verdict, "verdict oracle {verdict}");
    if let Some(b) = f.b {
        let covered = common::union(&all_r);
        ensure!(
            (0..n).filter(|v| !covered.contains(v)).collect::<Set>() == set(b),
            "B oracle"
        );
    }
    let mis = common::max_independent_sets(g);
    ensure!(common::intersection(&mis, n) == set(f.core), "core oracle");
    ensure!(common::union(&mis) == set(f.corona), "corona oracle");
    ensure!(common::intersection(&crit, n) == set(f.ker), "ker oracle");
    ensure!((f.alpha + f.mu == n) == f.ke, "KE oracle");
    Ok(String::new())
}

fn fixture_fast(g: &Graph, f: &FixtureValues, caps: &Caps) -> Outcome {
    let e = |x: Error| x.to_string();
    ensure!(maximum_matching(g).size() == f.mu, "mu");
    ensure!(independence_number(g, caps).map_err(e)? == f.alpha, "alpha");
    let ge = gallai_edmonds(g);
    ensure!(
        [to_set(&ge.d), to_set(&ge.a), to_set(&ge.c)] == f.dac.map(set),
        "D/A/C"
    );
    let cycles = enumerate_odd_cycles(g, caps).map_err(e)?.items;
    ensure!(cycles.len() == f.reach.len(), "cycle count");
    for (c, &(want_c, r, odd, even)) in cycles.iter().zip(f.reach) {
        ensure!(c.vertices() == want_c, "cycle {:?}", c.vertices());
        let got = reach_set(g, c).map_err(e)?;
        ensure!(
            to_set(&got.r) == set(r)
                && to_set(&got.r_odd) == set(odd)
                && to_set(&got.r_even) == set(even),
            "reach for {want_c:?}"
        );
    }
    let verdict = is_r_disjoint(g, caps).map_err(e)?;
    ensure!(verdict.name() == f.verdict, "verdict {}", verdict.name());
    if let Some(b) = f.b {
        ensure!(
            to_set(&flower_decomposition(g, caps).map_err(e)?.b) == set(b),
            "B"
        );
    }
    let p = independence_profile(g, caps).map_err(e)?;
    ensure!(
        to_set(&p.core) == set(f.core) && to_set(&p.corona) == set(f.corona),
        "core/corona"
    );
    ensure!(to_set(&p.ker) == set(f.ker) && p.d == f.d, "ker/d");
    ensure!(
        is_konig_egervary(g, caps).map_err(e)?.konig_egervary == f.ke,
        "KE"
    );
    Ok(String::new())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let caps = Caps::default();
    for f in FIXTURES {
        let g = fixtures::by_name(f.name).unwrap();
        fixture_oracle(&g, f).map_err(|m| format!("{}: {m}", f.name))?;
        fixture_fast(&g, f, &caps).map_err(|m| format!("{}: {m}", f.name))?;
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(5), "took {t:?}");
    Ok(format!("F1-F8, oracle then fast path, {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let caps = Caps::default();
    let mut by_k = [0usize; 4];
    let mut max_n = 0;
    for seed in 0..500u64 {
        let inst = generate_r_disjoint(&search_params(seed, 20).map_err(|e| e.to_string())?, &caps)
            .map_err(|e| e.to_string())?;
        let report = verify(&inst.graph, &inst.decomposition, Suite::All, &caps)
            .map_err(|e| e.to_string())?;
        ensure!(
            report.passed(),
            "seed {seed}: {:?}",
            report.checks.iter().find(|c| c.status != Status::Pass)
        );
        by_k[inst.decomposition.k] += 1;
        max_n = max_n.max(inst.graph.order());
    }
    ensure!(max_n <= 20, "order {max_n}");
    ensure!(by_k[1] > 0 && by_k[2] > 0 && by_k[3] > 0, "k mix {by_k:?}");
    Ok(format!(
        "500 graphs, n <= {max_n}, k=1/2/3: {}/{}/{}, 10 checks each, {:.2?}",
        by_k[1],
        by_k[2],
        by_k[3],
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let caps = Caps::default();
    let mut graphs: Vec<Graph> = fixtures::all().into_iter().map(|(_, g)| g).collect();
    let mut rng = common::rng(3);
    graphs.extend((0..200).map(|_| common::random_graph(&mut rng, 4, 14, 2.2)));
    let (mut pairs, mut outside) = (0, 0);
    for g in &graphs {
        let oracle = gallai_edmonds_oracle(g, caps.matchings).map_err(|e| e.to_string())?;
        ensure!(
            gallai_edmonds(g) == oracle,
            "GE differs on {}",
            serialize_graph(g, Format::Graph6)
        );
        for c in enumerate_odd_cycles(g, &caps)
            .map_err(|e| e.to_string())?
            .items
        {
            let slow = reach_set_oracle(g, &c, &caps).map_err(|e| e.to_string())?;
            match reach_set(g, &c) {
                Ok(fast) => {
                    pairs += 1;
                    ensure!(
                        fast.r == slow.r,
                        "R differs for {:?} on {}",
                        c.vertices(),
                        serialize_graph(g, Format::Graph6)
                    );
                    if slow.parity_conflicts.is_empty() {
                        ensure!(
                            fast.r_odd == slow.r_odd && fast.r_even == slow.r_even,
                            "parity differs for {:?}",
                            c.vertices()
                        );
                    }
                }
                Err(Error::Precondition(_)) => outside += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!(
        "{} graphs, GE exact; {pairs} reach pairs exact, {outside} cycles outside a G[D] component",
        graphs.len()
    ))
}

fn criterion_4() -> Outcome {
    // no independence cross-check inside: the verdict comes from certificates only
    let caps = Caps {
        mis_vertices: 0,
        ..Caps::default()
    };
    let mut rng = common::rng(4);
    let (mut non_ke, mut strict_misses, mut first_miss) = (0, 0, None);
    for _ in 0..1000 {
        let g = common::random_graph(&mut rng, 1, 12, 2.5);
        let ke = common::alpha(&g) + common::mu(&g) == g.order();
        let m = maximum_matching(&g);
        let strict = ke_certificate(&g, &m, &caps, false).map_err(|e| e.to_string())?;
        if strict.is_none() != ke {
            strict_misses += 1;
            first_miss.get_or_insert_with(|| serialize_graph(&g, Format::Graph6));
        }
        let v = is_konig_egervary(&g, &caps).map_err(|e| e.to_string())?;
        ensure!(
            v.konig_egervary == ke,
            "disagree on {}",
            serialize_graph(&g, Format::Graph6)
        );
        ensure!(v.certificate.is_some() == !ke, "certificate presence");
        non_ke += usize::from(!ke);
    }
    let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .map_err(|e| e.to_string())?;
    ensure!(
        ke_certificate(&k4, &maximum_matching(&k4), &caps, false)
            .map_err(|e| e.to_string())?
            .is_none(),
        "K4 has a disjoint certificate"
    );
    ensure!(
        !is_konig_egervary(&k4, &caps)
            .map_err(|e| e.to_string())?
            .konig_egervary,
        "K4 reported KE"
    );
    Ok(format!(
        "1000 graphs, {non_ke} non-KE, all agree with overlapping posies; flower/disjoint-posy alone misses {strict_misses} (first {}), K4 included",
        first_miss.unwrap_or_default()
    ))
}

fn cycle_edges_ok(g: &Graph, cycles: &[OddCycle], caps: &Caps) -> Result<usize, String> {
    let all = enumerate_maximum_matchings(g, caps.matchings)
        .complete("maximum matchings")
        .map_err(|e| e.to_string())?;
    for m in &all {
        for c in cycles {
            let on = c.edges().iter().filter(|&&(u, v)| m.contains(u, v)).count();
            ensure!(
                on == c.len() / 2,
                "{on} edges on {:?} in {}",
                c.vertices(),
                serialize_graph(g, Format::Graph6)
            );
        }
    }
    Ok(all.len())
}

fn criterion_5() -> Outcome {
    let caps = Caps::default();
    let mut checked = 0;
    for (name, g) in fixtures::all() {
        if is_r_disjoint(&g, &caps)
            .map_err(|e| e.to_string())?
            .is_r_disjoint()
        {
            let cycles = enumerate_odd_cycles(&g, &caps)
                .map_err(|e| e.to_string())?
                .items;
            checked += cycle_edges_ok(&g, &cycles, &caps).map_err(|m| format!("{name}: {m}"))?;
        }
    }
    let f3 = fixtures::tadpole();
    let f3_all = enumerate_maximum_matchings(&f3, caps.matchings).items;
    ensure!(
        f3_all.len() == 4,
        "F3 has {} maximum matchings",
        f3_all.len()
    );
    ensure!(
        f3_all.iter().all(|m| [(0, 1), (0, 2), (1, 2)]
            .iter()
            .any(|&(u, v)| m.contains(u, v))),
        "F3 matching without a cycle edge"
    );
    for seed in 0..200u64 {
        let inst = generate_r_disjoint(
            &search_params(1000 + seed, 16).map_err(|e| e.to_string())?,
            &caps,
        )
        .map_err(|e| e.to_string())?;
        let cycles: Vec<OddCycle> = inst
            .decomposition
            .parts
            .iter()
            .map(|p| p.cycle.clone())
            .collect();
        let all = enumerate_odd_cycles(&inst.graph, &caps)
            .map_err(|e| e.to_string())?
            .items;
        ensure!(
            all == cycles,
            "decomposition cycles differ from all odd cycles"
        );
        checked += cycle_edges_ok(&inst.graph, &cycles, &caps)?;
    }
    Ok(format!("fixtures + 200 generated graphs, {checked} maximum matchings; F3: 4 matchings, each with a cycle edge"))
}

fn criterion_6() -> Outcome {
    let caps = Caps::default();
    let mut rng = common::rng(6);
    let mut positive = 0;
    for _ in 0..200 {
        let g = common::random_graph(&mut rng, 1, 14, 2.0);
        let all = common::d_all_subsets(&g);
        let ind = critical_difference(&g, &caps).map_err(|e| e.to_string())?.d;
        ensure!(
            all == ind,
            "{all} vs {ind} on {}",
            serialize_graph(&g, Format::Graph6)
        );
        positive += usize::from(all > 0);
    }
    Ok(format!("200 graphs, {positive} with d > 0"))
}

fn criterion_7() -> Outcome {
    let caps = Caps::default();
    let mut rng = common::rng(7);
    let mut nonempty = 0;
    for _ in 0..500 {
        let g = common::random_graph(&mut rng, 1, 14, 2.5);
        let ker = ker_set(&g, &caps).map_err(|e| e.to_string())?;
        let (core, _) = core_corona(&g, &caps).map_err(|e| e.to_string())?;
        ensure!(
            ker.is_subset(&core),
            "ker {ker:?} not in core {core:?} on {}",
            serialize_graph(&g, Format::Graph6)
        );
        nonempty += usize::from(!ker.is_empty());
    }
    Ok(format!("500 graphs, {nonempty} with nonempty ker"))
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(args.iter().copied(), &mut out, &mut err);
    (code, out)
}

fn criterion_8() -> Outcome {
    let caps = Caps::default();
    let mut corpus: Vec<Graph> = fixtures::all().into_iter().map(|(_, g)| g).collect();
    let mut rng = common::rng(8);
    corpus.extend((0..150).map(|_| common::random_graph(&mut rng, 0, 8, 3.0)));
    for seed in 0..50u64 {
        corpus.push(
            generate_r_disjoint(&search_params(seed, 8).map_err(|e| e.to_string())?, &caps)
                .map_err(|e| e.to_string())?
                .graph,
        );
    }
    for g in corpus.iter().filter(|g| g.order() <= 8) {
        let want = common::det_by_permutations(g);
        ensure!(
            adjacency_determinant(g).to_string() == want.to_string(),
            "det of {}",
            serialize_graph(g, Format::Graph6)
        );
    }

    let f4 = fixtures::tadpole_k2();
    let check = check_determinant_conjecture(
        &f4,
        &flower_decomposition(&f4, &caps).map_err(|e| e.to_string())?,
    );
    let factors: Vec<String> = check.factors.iter().map(ToString::to_string).collect();
    ensure!(
        check.holds && check.lhs.to_string() == "2" && factors == ["-2", "-1"],
        "F4 gives {check:?}"
    );

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let emit = dir.path().to_str().unwrap();
    let args = [
        "reachkit",
        "search",
        "--count",
        "1000",
        "--seed",
        "7",
        "--max-n",
        "16",
        "--conjecture",
        "det",
        "--emit",
        emit,
        "--json",
    ];
    let (code, out) = run_cli(&args);
    let summary: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    let certs = summary["counterexamples"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    match code {
        0 => ensure!(certs.is_empty(), "exit 0 with certificates"),
        1 => {
            ensure!(!certs.is_empty(), "exit 1 without certificates");
            for cert in &certs {
                let file = dir.path().join("replay.g6");
                std::fs::write(&file, cert["graph"].as_str().unwrap())
                    .map_err(|e| e.to_string())?;
                let (_, report) =
                    run_cli(&["reachkit", "analyze", file.to_str().unwrap(), "--json"]);
                let report: serde_json::Value =
                    serde_json::from_slice(&report).map_err(|e| e.to_string())?;
                let det = &report["spectral"]["determinant_check"];
                ensure!(
                    det["lhs"] == cert["lhs"] && det["rhs"] == cert["rhs"],
                    "certificate does not replay"
                );
            }
        }
        other => return Err(format!("search exit code {other}")),
    }
    let (code2, out2) = run_cli(&args);
    ensure!(code2 == code && out2 == out, "second search run differs");
    let tally = &summary["determinant"];
    Ok(format!(
        "{} graphs with n <= 8 match the expansion; F4: 2 = (-2)(-1); search over 1000: exit {code}, {} hold, {} violated",
        corpus.iter().filter(|g| g.order() <= 8).count(),
        tally["holds"],
        tally["violated"]
    ))
}

fn criterion_9() -> Outcome {
    let caps = Caps::default();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for (name, g) in fixtures::all() {
        let path = dir.path().join(format!("{name}.g6"));
        std::fs::write(&path, serialize_graph(&g, Format::Graph6)).map_err(|e| e.to_string())?;
        files.push(path);
    }
    for seed in 0..20u64 {
        let inst = generate_r_disjoint(&search_params(seed, 14).map_err(|e| e.to_string())?, &caps)
            .map_err(|e| e.to_string())?;
        let path = dir.path().join(format!("gen{seed}.g6"));
        std::fs::write(&path, serialize_graph(&inst.graph, Format::Graph6))
            .map_err(|e| e.to_string())?;
        files.push(path);
    }
    for f in &files {
        let f = f.to_str().unwrap();
        let a = run_cli(&["reachkit", "analyze", f, "--json"]);
        let b = run_cli(&["reachkit", "analyze", f, "--json"]);
        ensure!(a == b, "analyze differs on {f}");
        let g = reachkit::graph::parse_graph(&std::fs::read_to_string(f).unwrap(), Format::Graph6)
            .unwrap();
        let direct =
            serde_json::to_vec_pretty(&analyze(&g, &caps).map_err(|e| e.to_string())?).unwrap();
        ensure!(
            a.1.strip_suffix(b"\n") == Some(direct.as_slice()),
            "library and CLI reports differ on {f}"
        );
    }
    let search = [
        "reachkit", "search", "--count", "60", "--seed", "3", "--max-n", "14", "--json",
    ];
    ensure!(run_cli(&search) == run_cli(&search), "search differs");
    let mut corpora = Vec::new();
    for run in 0..2 {
        let out = dir.path().join(format!("corpus{run}"));
        let (code, _) = run_cli(&[
            "reachkit",
            "gen",
            "--k",
            "2",
            "--tail-budget",
            "4",
            "--attachments",
            "5",
            "--relabel",
            "--seed",
            "5",
            "--count",
            "20",
            "--out",
            out.to_str().unwrap(),
        ]);
        ensure!(code == 0, "gen exit {code}");
        corpora.push((
            std::fs::read(out.join("graphs.g6")).unwrap(),
            std::fs::read(out.join("manifest.json")).unwrap(),
        ));
    }
    ensure!(corpora[0] == corpora[1], "gen output differs");
    Ok(format!(
        "{} analyze reports, one search summary and one corpus byte-identical across runs",
        files.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("fixture suite", criterion_1),
        ("theorem suite on 500 generated graphs", criterion_2),
        ("oracle equivalence", criterion_3),
        ("KE certificates vs alpha + mu = n", criterion_4),
        ("cycle edges of maximum matchings", criterion_5),
        ("d over subsets vs independent sets", criterion_6),
        ("ker within core", criterion_7),
        ("exact spectral checks", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
