//! The `reachkit` command line: `analyze`, `verify`, `search` and `gen`.
//!
//! Exit codes: 0 success, 1 a check failed or a counterexample was found,
//! 2 unreadable input, invalid parameters or a graph outside the required
//! class, 3 a cap or retry budget was exhausted. With `--json`, stdout holds
//! only the JSON document; diagnostics go to stderr.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::generator::{
    generate_corpus, generate_r_disjoint, write_corpus, GenParams, SCHEMA_VERSION,
};
use crate::graph::{parse_graph, serialize_graph, Format, Graph};
use crate::independence::{critical_difference, independence_profile, IndependenceProfile};
use crate::matching::maximum_matching;
use crate::spectral::{
    adjacency_determinant, check_determinant_conjecture, check_nullspace_decomposition, nullity,
    Counterexample, DeterminantCheck, NullspaceCheck, NullspaceVerdict,
};
use crate::structure::{
    enumerate_odd_cycles, flower_decomposition, gallai_edmonds, is_konig_egervary, is_r_disjoint,
    reach_set, reach_set_oracle, FlowerDecomposition, GeDecomposition, KeVerdict, OddCycle,
    RDisjointVerdict, ReachSet,
};
use crate::verifier::{verify, CheckRecord, Status, Suite, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable overriding the worker count of `search` and `gen`.
pub const THREADS_ENV: &str = "REACHKIT_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "reachkit",
    version,
    about = "Matching structure and independence invariants of R-disjoint graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every invariant of one graph.
    Analyze(AnalyzeArgs),
    /// Run the theorem checks on one R-disjoint graph.
    Verify(VerifyArgs),
    /// Generate R-disjoint graphs and test the spectral conjectures on them.
    Search(SearchArgs),
    /// Write a corpus of generated R-disjoint graphs.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct CapArgs {
    /// Largest order for exact independence computations.
    #[arg(long, default_value_t = Caps::default().mis_vertices)]
    pub mis_limit: usize,
    /// Maximum matchings to enumerate.
    #[arg(long, default_value_t = Caps::default().matchings)]
    pub matching_cap: usize,
    /// Odd cycles to enumerate.
    #[arg(long, default_value_t = Caps::default().odd_cycles)]
    pub cycle_cap: usize,
    /// Largest order for odd-cycle disjointness tests.
    #[arg(long, default_value_t = Caps::default().cycle_order)]
    pub cycle_order: usize,
    /// Flowers to enumerate per cycle in oracle computations.
    #[arg(long, default_value_t = Caps::default().flowers)]
    pub flower_cap: usize,
    /// Depth-first search steps.
    #[arg(long, default_value_t = Caps::default().search_steps)]
    pub search_steps: usize,
    /// Independent sets to visit when computing the critical difference.
    #[arg(long, default_value_t = Caps::default().independent_sets)]
    pub independent_set_cap: usize,
}

impl CapArgs {
    pub fn caps(&self) -> Caps {
        Caps {
            mis_vertices: self.mis_limit,
            matchings: self.matching_cap,
            odd_cycles: self.cycle_cap,
            cycle_order: self.cycle_order,
            flowers: self.flower_cap,
            search_steps: self.search_steps,
            independent_sets: self.independent_set_cap,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file. Edge list unless the extension is `.g6`.
    pub file: PathBuf,
    /// Input format, overriding the extension.
    #[arg(long)]
    pub format: Option<Format>,
}

impl InputArgs {
    fn read(&self) -> Result<Graph> {
        let text = fs::read_to_string(&self.file)?;
        let format =
            self.format
                .unwrap_or_else(|| match self.file.extension().and_then(|e| e.to_str()) {
                    Some("g6") | Some("graph6") => Format::Graph6,
                    _ => Format::EdgeList,
                });
        parse_graph(&text, format)
    }
}

#[derive(Debug, Clone, Args)]
pub struct JsonArg {
    /// Emit JSON: to stdout, or to the given file.
    #[arg(long, num_args = 0..=1, value_name = "PATH")]
    pub json: Option<Option<PathBuf>>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub json: JsonArg,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Checks to run: all, main, additivity, cycle-edges or boundary.
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[command(flatten)]
    pub json: JsonArg,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    Det,
    Nullspace,
    All,
}

impl Conjecture {
    fn det(self) -> bool {
        matches!(self, Conjecture::Det | Conjecture::All)
    }

    fn nullspace(self) -> bool {
        matches!(self, Conjecture::Nullspace | Conjecture::All)
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of generated instances.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// First seed; instance i uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest order of a generated graph.
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
    /// Which spectral statement to test.
    #[arg(long, value_enum, default_value_t = Conjecture::All)]
    pub conjecture: Conjecture,
    /// Directory receiving one certificate per counterexample.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Generator parameters as JSON; the seed is replaced per instance.
    #[arg(long)]
    pub params: Option<PathBuf>,
    #[command(flatten)]
    pub json: JsonArg,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Generator parameters as JSON. Inline flags override its fields.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Number of odd cycles, one per reach set.
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated odd cycle lengths.
    #[arg(long, value_delimiter = ',')]
    pub cycle_lengths: Option<Vec<usize>>,
    /// Upper bound for randomly drawn cycle lengths.
    #[arg(long)]
    pub max_cycle_length: Option<usize>,
    /// Most tail vertices hung from the cycles.
    #[arg(long)]
    pub tail_budget: Option<usize>,
    /// Matched pairs in the bipartite block.
    #[arg(long)]
    pub bipartite_pairs: Option<usize>,
    /// Probability of each extra edge inside the bipartite block.
    #[arg(long)]
    pub bipartite_density: Option<f64>,
    /// Cross-block edges proposed per instance.
    #[arg(long)]
    pub attachments: Option<usize>,
    /// Reject drafts with more vertices.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Shuffle vertex labels of each instance.
    #[arg(long)]
    pub relabel: bool,
    /// Drafts tried per instance before giving up.
    #[arg(long)]
    pub max_retries: Option<usize>,
    /// Base seed; instance i uses seed + i.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of instances.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub json: JsonArg,
    #[command(flatten)]
    pub caps: CapArgs,
}

impl GenArgs {
    fn params(&self) -> Result<GenParams> {
        let mut p = match &self.params {
            Some(path) => serde_json::from_str(&fs::read_to_string(path)?)?,
            None => GenParams::new(1, 0),
        };
        macro_rules! apply {
            ($($field:ident),*) => { $( if let Some(v) = self.$field.clone() { p.$field = v; } )* };
        }
        apply!(
            k,
            cycle_lengths,
            max_cycle_length,
            tail_budget,
            bipartite_pairs,
            bipartite_density,
            attachments,
            max_retries,
            seed
        );
        if self.max_order.is_some() {
            p.max_order = self.max_order;
        }
        p.relabel |= self.relabel;
        p.validate()?;
        Ok(p)
    }
}

/// Maps library errors onto the exit-code contract.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::GenerationFailed { .. } => EXIT_CAP,
        Error::TheoremViolation(_) | Error::InternalInconsistency(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInfo {
    pub order: usize,
    pub size: usize,
    pub graph6: String,
}

impl GraphInfo {
    fn of(graph: &Graph) -> Self {
        GraphInfo {
            order: graph.order(),
            size: graph.size(),
            graph6: serialize_graph(graph, Format::Graph6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralInfo {
    pub determinant: String,
    pub nullity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_check: Option<DeterminantCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nullspace_check: Option<NullspaceCheck>,
}

/// Everything computed about one graph. Sections that ran out of budget are
/// `null` and listed under `skipped` with the cap that stopped them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub graph: GraphInfo,
    pub matching_number: usize,
    pub alpha: Option<usize>,
    pub tau: Option<usize>,
    pub d: Option<i64>,
    pub gallai_edmonds: GeDecomposition,
    pub odd_cycles: Option<Vec<OddCycle>>,
    pub reach_sets: Option<Vec<ReachSet>>,
    pub r_disjoint: Option<RDisjointVerdict>,
    pub flower_decomposition: Option<FlowerDecomposition>,
    pub independence: Option<IndependenceProfile>,
    pub konig_egervary: Option<KeVerdict>,
    pub theorems: Option<TheoremReport>,
    pub spectral: SpectralInfo,
    pub skipped: BTreeMap<&'static str, String>,
}

fn section<T>(
    skipped: &mut BTreeMap<&'static str, String>,
    name: &'static str,
    r: Result<T>,
) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => {
            skipped.insert(name, e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Reach sets of the given cycles: the fast path where it applies and the
/// exhaustive oracle elsewhere.
fn reach_sets(graph: &Graph, cycles: &[OddCycle], caps: &Caps) -> Result<Vec<ReachSet>> {
    cycles
        .iter()
        .map(|c| match reach_set(graph, c) {
            Err(Error::Precondition(_)) => reach_set_oracle(graph, c, caps),
            other => other,
        })
        .collect()
}

pub fn analyze(graph: &Graph, caps: &Caps) -> Result<AnalysisReport> {
    let mut skipped = BTreeMap::new();
    let independence = section(
        &mut skipped,
        "independence",
        independence_profile(graph, caps),
    )?;
    let d = match &independence {
        Some(p) => Some(p.d),
        None => section(
            &mut skipped,
            "d",
            critical_difference(graph, caps).map(|c| c.d),
        )?,
    };
    let odd_cycles = section(
        &mut skipped,
        "odd_cycles",
        enumerate_odd_cycles(graph, caps).and_then(|e| e.complete("odd cycles")),
    )?;
    let reach = match &odd_cycles {
        Some(cycles) => section(&mut skipped, "reach_sets", reach_sets(graph, cycles, caps))?,
        None => None,
    };
    let r_disjoint = section(&mut skipped, "r_disjoint", is_r_disjoint(graph, caps))?;
    let decomposition = match &r_disjoint {
        Some(v) if v.is_r_disjoint() => section(
            &mut skipped,
            "flower_decomposition",
            flower_decomposition(graph, caps),
        )?,
        _ => None,
    };
    let theorems = match &decomposition {
        Some(f) => section(&mut skipped, "theorems", verify(graph, f, Suite::All, caps))?,
        None => None,
    };
    let konig_egervary = section(
        &mut skipped,
        "konig_egervary",
        is_konig_egervary(graph, caps),
    )?;
    let spectral = SpectralInfo {
        determinant: adjacency_determinant(graph).to_string(),
        nullity: nullity(graph),
        determinant_check: decomposition
            .as_ref()
            .map(|f| check_determinant_conjecture(graph, f)),
        nullspace_check: decomposition
            .as_ref()
            .map(|f| check_nullspace_decomposition(graph, f)),
    };
    let alpha = independence.as_ref().map(|p| p.alpha);
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        graph: GraphInfo::of(graph),
        matching_number: maximum_matching(graph).size(),
        alpha,
        tau: alpha.map(|a| graph.order() - a),
        d,
        gallai_edmonds: gallai_edmonds(graph),
        odd_cycles,
        reach_sets: reach,
        r_disjoint,
        flower_decomposition: decomposition,
        independence,
        konig_egervary,
        theorems,
        spectral,
        skipped,
    })
}

/// A replayable counterexample as written by `search --emit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub seed: u64,
    #[serde(flatten)]
    pub counterexample: Counterexample,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremFailure {
    pub seed: u64,
    pub graph: String,
    pub check: CheckRecord,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DeterminantTally {
    pub holds: usize,
    pub violated: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct NullspaceTally {
    pub supported: usize,
    pub violated: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchSummary {
    pub schema_version: u32,
    pub seed: u64,
    pub count: usize,
    pub max_n: usize,
    pub conjecture: Conjecture,
    /// Instances per number of odd cycles.
    pub by_k: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<DeterminantTally>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nullspace: Option<NullspaceTally>,
    pub checks: CheckTally,
    pub instances_with_skips: usize,
    pub counterexamples: Vec<Certificate>,
    pub theorem_failures: Vec<TheoremFailure>,
}

impl SearchSummary {
    pub fn exit_code(&self) -> i32 {
        if !self.counterexamples.is_empty() || !self.theorem_failures.is_empty() {
            EXIT_FAIL
        } else if self.count > 0 && self.instances_with_skips == self.count {
            EXIT_CAP
        } else {
            EXIT_OK
        }
    }
}

struct Outcome {
    seed: u64,
    k: usize,
    det: Option<DeterminantCheck>,
    nullspace: Option<NullspaceCheck>,
    certificates: Vec<Certificate>,
    report: TheoremReport,
}

/// Generator parameters used by `search` when none are given: `k` cycles
/// through 1, 2, 3 with the seed, and everything fits in `max_n` vertices.
pub fn search_params(seed: u64, max_n: usize) -> Result<GenParams> {
    if max_n < 3 {
        return Err(Error::InvalidParams(format!(
            "max_n {max_n} leaves no room for an odd cycle"
        )));
    }
    let k = (1 + (seed % 3) as usize).min(max_n / 3);
    let pairs = ((seed / 3) % 3) as usize;
    let pairs = pairs.min((max_n - 3 * k) / 2);
    let max_cycle_length = if 5 * k + 2 * pairs <= max_n { 5 } else { 3 };
    Ok(GenParams {
        max_cycle_length,
        tail_budget: 4,
        bipartite_pairs: pairs,
        bipartite_density: 0.4,
        attachments: 8,
        max_order: Some(max_n),
        relabel: true,
        ..GenParams::new(k, seed)
    })
}

fn search_one(
    template: Option<&GenParams>,
    seed: u64,
    args: &SearchArgs,
    caps: &Caps,
) -> Result<Outcome> {
    let params = match template {
        Some(t) => GenParams {
            seed,
            max_order: t.max_order.or(Some(args.max_n)),
            ..t.clone()
        },
        None => search_params(seed, args.max_n)?,
    };
    let inst = generate_r_disjoint(&params, caps)?;
    let (g, f) = (&inst.graph, &inst.decomposition);
    let det = args
        .conjecture
        .det()
        .then(|| check_determinant_conjecture(g, f));
    let nullspace = args
        .conjecture
        .nullspace()
        .then(|| check_nullspace_decomposition(g, f));
    let certificates = det
        .as_ref()
        .and_then(|c| c.counterexample(g, f))
        .into_iter()
        .chain(nullspace.as_ref().and_then(|c| c.counterexample(g, f)))
        .map(|counterexample| Certificate {
            schema_version: SCHEMA_VERSION,
            seed,
            counterexample,
        })
        .collect();
    let report = verify(g, f, Suite::All, caps)?;
    Ok(Outcome {
        seed,
        k: f.k,
        det,
        nullspace,
        certificates,
        report,
    })
}

/// Generates `count` instances with seeds `seed..seed + count` and checks
/// each. The summary depends only on the arguments, never on scheduling.
pub fn search(args: &SearchArgs) -> Result<SearchSummary> {
    let caps = args.caps.caps();
    let template = match &args.params {
        Some(path) => Some(GenParams::from_json(&fs::read_to_string(path)?)?),
        None => None,
    };
    let outcomes: Vec<Outcome> = (0..args.count as u64)
        .into_par_iter()
        .map(|i| search_one(template.as_ref(), args.seed.wrapping_add(i), args, &caps))
        .collect::<Result<_>>()?;

    let mut s = SearchSummary {
        schema_version: SCHEMA_VERSION,
        seed: args.seed,
        count: args.count,
        max_n: args.max_n,
        conjecture: args.conjecture,
        by_k: BTreeMap::new(),
        determinant: args.conjecture.det().then(DeterminantTally::default),
        nullspace: args.conjecture.nullspace().then(NullspaceTally::default),
        checks: CheckTally::default(),
        instances_with_skips: 0,
        counterexamples: Vec::new(),
        theorem_failures: Vec::new(),
    };
    for o in outcomes {
        *s.by_k.entry(o.k).or_default() += 1;
        if let (Some(t), Some(c)) = (s.determinant.as_mut(), &o.det) {
            if c.holds {
                t.holds += 1
            } else {
                t.violated += 1
            }
        }
        if let (Some(t), Some(c)) = (s.nullspace.as_mut(), &o.nullspace) {
            match c.verdict {
                NullspaceVerdict::Supported => t.supported += 1,
                NullspaceVerdict::Violated => t.violated += 1,
                NullspaceVerdict::Vacuous => t.vacuous += 1,
            }
        }
        s.checks.pass += o.report.count(Status::Pass);
        s.checks.fail += o.report.count(Status::Fail);
        s.checks.skipped += o.report.count(Status::Skipped);
        if o.report.count(Status::Skipped) > 0 {
            s.instances_with_skips += 1;
        }
        for check in o.report.failures() {
            s.theorem_failures.push(TheoremFailure {
                seed: o.seed,
                graph: o.report.graph.clone(),
                check: check.clone(),
            });
        }
        s.counterexamples.extend(o.certificates);
    }
    Ok(s)
}

/// Writes each certificate to `dir/<conjecture>-<seed>.json`.
pub fn emit_certificates(dir: &Path, certs: &[Certificate]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    certs
        .iter()
        .map(|c| {
            let path = dir.join(format!("{}-{}.json", c.counterexample.conjecture, c.seed));
            fs::write(&path, serde_json::to_string_pretty(c)? + "\n")?;
            Ok(path)
        })
        .collect()
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    /// Writes `value` as JSON where `--json` asked for it. Returns false when
    /// no JSON was requested so the caller prints a human summary instead.
    fn json<T: Serialize>(&mut self, arg: &JsonArg, value: &T) -> Result<bool> {
        let text = serde_json::to_string_pretty(value)? + "\n";
        match &arg.json {
            None => Ok(false),
            Some(None) => {
                self.out.write_all(text.as_bytes())?;
                Ok(true)
            }
            Some(Some(path)) => {
                fs::write(path, text)?;
                Ok(true)
            }
        }
    }

    fn line(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{text}");
    }

    fn diag(&mut self, text: impl std::fmt::Display) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn show<T: std::fmt::Debug>(v: &Option<T>) -> String {
    v.as_ref()
        .map_or_else(|| "skipped".into(), |x| format!("{x:?}"))
}

fn cmd_analyze(args: &AnalyzeArgs, io: &mut Io) -> Result<i32> {
    let graph = args.input.read()?;
    let report = analyze(&graph, &args.caps.caps())?;
    if !io.json(&args.json, &report)? {
        io.line(format_args!(
            "graph {} (n = {}, m = {})",
            report.graph.graph6,
            graph.order(),
            graph.size()
        ));
        io.line(format_args!(
            "mu = {}, alpha = {}, tau = {}, d = {}",
            report.matching_number,
            show(&report.alpha),
            show(&report.tau),
            show(&report.d)
        ));
        let ge = &report.gallai_edmonds;
        io.line(format_args!(
            "D = {:?}, A = {:?}, C = {:?}",
            ge.d, ge.a, ge.c
        ));
        if let Some(cycles) = &report.odd_cycles {
            io.line(format_args!(
                "odd cycles: {:?}",
                cycles.iter().map(OddCycle::vertices).collect::<Vec<_>>()
            ));
        }
        if let Some(v) = &report.r_disjoint {
            io.line(format_args!("verdict: {}", v.name()));
        }
        if let Some(f) = &report.flower_decomposition {
            io.line(format_args!(
                "k = {}, parts = {:?}, B = {:?}",
                f.k,
                f.parts.iter().map(|p| &p.r).collect::<Vec<_>>(),
                f.b
            ));
        }
        if let Some(p) = &report.independence {
            io.line(format_args!(
                "core = {:?}, corona = {:?}, ker = {:?}",
                p.core, p.corona, p.ker
            ));
        }
        if let Some(ke) = &report.konig_egervary {
            io.line(format_args!("konig_egervary = {}", ke.konig_egervary));
        }
        if let Some(t) = &report.theorems {
            io.line(format_args!(
                "theorem checks: {} pass, {} fail, {} skipped",
                t.count(Status::Pass),
                t.count(Status::Fail),
                t.count(Status::Skipped)
            ));
        }
        io.line(format_args!(
            "det A = {}, nullity = {}",
            report.spectral.determinant, report.spectral.nullity
        ));
    }
    for (name, why) in &report.skipped {
        io.diag(format_args!("skipped {name}: {why}"));
    }
    Ok(match &report.theorems {
        Some(t) if t.count(Status::Fail) > 0 => EXIT_FAIL,
        _ if !report.skipped.is_empty() => EXIT_CAP,
        _ => EXIT_OK,
    })
}

#[derive(Serialize)]
struct NotRDisjoint<'a> {
    schema_version: u32,
    graph: String,
    r_disjoint: &'a RDisjointVerdict,
}

fn cmd_verify(args: &VerifyArgs, io: &mut Io) -> Result<i32> {
    let graph = args.input.read()?;
    let caps = args.caps.caps();
    let verdict = is_r_disjoint(&graph, &caps)?;
    if !verdict.is_r_disjoint() {
        let doc = NotRDisjoint {
            schema_version: SCHEMA_VERSION,
            graph: serialize_graph(&graph, Format::Graph6),
            r_disjoint: &verdict,
        };
        io.json(&args.json, &doc)?;
        io.diag(format_args!("graph is not R-disjoint: {}", verdict.name()));
        return Ok(EXIT_INPUT);
    }
    let decomp = flower_decomposition(&graph, &caps)?;
    let report = verify(&graph, &decomp, args.suite, &caps)?;
    if !io.json(&args.json, &report)? {
        for c in &report.checks {
            let status = serde_json::to_value(c.status)?;
            io.line(format_args!(
                "{:<20} {:<8} {}",
                c.name,
                status.as_str().unwrap_or_default(),
                c.detail
            ));
        }
    }
    for c in report.failures() {
        io.diag(format_args!("FAIL {}: {}", c.name, c.detail));
        if let Some(w) = &c.witness {
            io.diag(w);
        }
    }
    Ok(if report.count(Status::Fail) > 0 {
        EXIT_FAIL
    } else if report.count(Status::Skipped) > 0 {
        EXIT_CAP
    } else {
        EXIT_OK
    })
}

fn cmd_search(args: &SearchArgs, io: &mut Io) -> Result<i32> {
    let summary = search(args)?;
    if let Some(dir) = &args.emit {
        for path in emit_certificates(dir, &summary.counterexamples)? {
            io.diag(format_args!("counterexample written to {}", path.display()));
        }
    }
    if !io.json(&args.json, &summary)? {
        io.line(format_args!(
            "{} instances from seed {} (n <= {}), by k: {:?}",
            summary.count, summary.seed, summary.max_n, summary.by_k
        ));
        if let Some(t) = &summary.determinant {
            io.line(format_args!(
                "determinant: {} hold, {} violated",
                t.holds, t.violated
            ));
        }
        if let Some(t) = &summary.nullspace {
            io.line(format_args!(
                "nullspace: {} supported, {} violated, {} vacuous",
                t.supported, t.violated, t.vacuous
            ));
        }
        let c = &summary.checks;
        io.line(format_args!(
            "theorem checks: {} pass, {} fail, {} skipped",
            c.pass, c.fail, c.skipped
        ));
    }
    for f in &summary.theorem_failures {
        io.diag(format_args!(
            "FAIL seed {} {}: {} ({})",
            f.seed, f.check.name, f.check.detail, f.graph
        ));
    }
    Ok(summary.exit_code())
}

fn cmd_gen(args: &GenArgs, io: &mut Io) -> Result<i32> {
    let params = args.params()?;
    let instances = generate_corpus(&params, args.count, &args.caps.caps())?;
    let manifest = write_corpus(&args.out, &params, &instances)?;
    if !io.json(&args.json, &manifest)? {
        io.line(format_args!(
            "wrote {} graphs to {}",
            manifest.count,
            args.out.display()
        ));
    }
    Ok(EXIT_OK)
}

/// Sizes the global worker pool from the environment. Only the first call
/// in a process has an effect.
fn configure_threads(err: &mut dyn Write) {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return;
    };
    match raw.parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => {
            let _ = writeln!(err, "ignoring {THREADS_ENV}={raw}: not a positive integer");
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads(err);
    let mut io = Io { out, err };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, &mut io),
        Command::Verify(a) => cmd_verify(a, &mut io),
        Command::Search(a) => cmd_search(a, &mut io),
        Command::Gen(a) => cmd_gen(a, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
