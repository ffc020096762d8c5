//! Seeded random R-disjoint graphs. Every emitted instance has passed
//! [`flower_decomposition`]; nothing about membership is assumed from the
//! construction.
//!
//! The random stream is part of the contract: instance `i` of a corpus is
//! drawn from a ChaCha8 generator seeded with `seed + i`, so any instance can
//! be replayed from its seed alone.

use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{edge, parse_graph, serialize_graph, Edge, Format, Graph, VertexSet};
use crate::structure::{
    enumerate_odd_cycles, flower_decomposition, is_konig_egervary, Certificate, FlowerDecomposition,
};

pub const SCHEMA_VERSION: u32 = 1;

fn default_max_cycle_length() -> usize {
    5
}

fn default_retries() -> usize {
    64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenParams {
    /// Number of odd cycles.
    pub k: usize,
    /// Either one length per cycle, a single length for all, or empty to
    /// draw odd lengths in `3..=max_cycle_length`.
    #[serde(default)]
    pub cycle_lengths: Vec<usize>,
    #[serde(default = "default_max_cycle_length")]
    pub max_cycle_length: usize,
    /// Explicit pendant path lengths per cycle. Tail `j` hangs from cycle
    /// vertex `j`. When absent, tails are drawn from `tail_budget`.
    #[serde(default)]
    pub tails: Option<Vec<Vec<usize>>>,
    /// Upper bound on random tail vertices per cycle.
    #[serde(default)]
    pub tail_budget: usize,
    /// Matched pairs in the bipartite block; zero omits the block.
    #[serde(default)]
    pub bipartite_pairs: usize,
    /// Probability of each non-matching edge across the block's two sides.
    #[serde(default)]
    pub bipartite_density: f64,
    /// Candidate cross edges between blocks; each is kept only if the graph
    /// stays R-disjoint with `k` odd cycles.
    #[serde(default)]
    pub attachments: usize,
    /// Random tails stop growing at this order.
    #[serde(default)]
    pub max_order: Option<usize>,
    /// Shuffle vertex labels before returning.
    #[serde(default)]
    pub relabel: bool,
    #[serde(default = "default_retries")]
    pub max_retries: usize,
    #[serde(default)]
    pub seed: u64,
}

impl GenParams {
    /// Bare cycles with no tails, block or attachments.
    pub fn new(k: usize, seed: u64) -> Self {
        GenParams {
            k,
            cycle_lengths: Vec::new(),
            max_cycle_length: default_max_cycle_length(),
            tails: None,
            tail_budget: 0,
            bipartite_pairs: 0,
            bipartite_density: 0.0,
            attachments: 0,
            max_order: None,
            relabel: false,
            max_retries: default_retries(),
            seed,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: GenParams = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if !self.cycle_lengths.is_empty()
            && self.cycle_lengths.len() != 1
            && self.cycle_lengths.len() != self.k
        {
            return bad(format!(
                "{} cycle lengths given for k = {}",
                self.cycle_lengths.len(),
                self.k
            ));
        }
        if let Some(&l) = self.cycle_lengths.iter().find(|&&l| l < 3 || l % 2 == 0) {
            return bad(format!("cycle length {l} is not odd and at least 3"));
        }
        if self.cycle_lengths.is_empty()
            && (self.max_cycle_length < 3 || self.max_cycle_length % 2 == 0)
        {
            return bad(format!(
                "max_cycle_length {} is not odd and at least 3",
                self.max_cycle_length
            ));
        }
        if let Some(tails) = &self.tails {
            if tails.len() != self.k {
                return bad(format!(
                    "{} tail lists given for k = {}",
                    tails.len(),
                    self.k
                ));
            }
            if let Some(&l) = tails.iter().flatten().find(|&&l| l == 0) {
                return bad(format!("tail length {l} must be positive"));
            }
        }
        if !(0.0..=1.0).contains(&self.bipartite_density) {
            return bad(format!(
                "bipartite_density {} is outside [0, 1]",
                self.bipartite_density
            ));
        }
        if let Some(max) = self.max_order {
            let least = self.k * 3 + 2 * self.bipartite_pairs;
            if max < least {
                return bad(format!(
                    "max_order {max} is below the smallest possible order {least}"
                ));
            }
        }
        Ok(())
    }

    fn cycle_length(&self, i: usize, rng: &mut ChaCha8Rng) -> usize {
        match self.cycle_lengths.as_slice() {
            [] => 3 + 2 * rng.gen_range(0..=(self.max_cycle_length - 3) / 2),
            [l] => *l,
            ls => ls[i],
        }
    }
}

/// One verified instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub seed: u64,
    /// Construction attempts used, including the accepted one.
    pub attempts: usize,
    pub graph: Graph,
    pub decomposition: FlowerDecomposition,
}

/// Vertex blocks of a construction, used to place cross edges.
struct Draft {
    n: usize,
    edges: Vec<Edge>,
    block: Vec<usize>,
}

impl Draft {
    fn add_vertex(&mut self, block: usize) -> usize {
        self.block.push(block);
        self.n += 1;
        self.n - 1
    }

    fn add_path(&mut self, from: usize, len: usize, block: usize) -> Vec<usize> {
        let mut prev = from;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            let v = self.add_vertex(block);
            self.edges.push(edge(prev, v));
            out.push(v);
            prev = v;
        }
        out
    }

    fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("draft edges are valid")
    }

    fn room(&self, params: &GenParams) -> usize {
        params
            .max_order
            .map_or(usize::MAX, |m| m.saturating_sub(self.n))
    }
}

/// Odd cycles with pendant paths, then the bipartite block. `even_tails`
/// rounds random tail lengths to even.
fn draft(params: &GenParams, rng: &mut ChaCha8Rng, even_tails: bool) -> Draft {
    let mut d = Draft {
        n: 0,
        edges: Vec::new(),
        block: Vec::new(),
    };
    let mut cycles = Vec::new();
    for i in 0..params.k {
        let len = params.cycle_length(i, rng);
        let cycle: Vec<usize> = (0..len).map(|_| d.add_vertex(i)).collect();
        for j in 0..len {
            d.edges.push(edge(cycle[j], cycle[(j + 1) % len]));
        }
        cycles.push(cycle);
    }
    if params.bipartite_pairs > 0 {
        let p = params.bipartite_pairs;
        let left: Vec<usize> = (0..p).map(|_| d.add_vertex(params.k)).collect();
        let right: Vec<usize> = (0..p).map(|_| d.add_vertex(params.k)).collect();
        for i in 0..p {
            for j in 0..p {
                if i == j || rng.gen_bool(params.bipartite_density) {
                    d.edges.push(edge(left[i], right[j]));
                }
            }
        }
    }
    for (i, cycle) in cycles.iter().enumerate() {
        match &params.tails {
            Some(tails) => {
                for (j, &len) in tails[i].iter().enumerate() {
                    d.add_path(cycle[j % cycle.len()], len, i);
                }
            }
            None => {
                let mut tree = cycle.clone();
                let mut budget = params.tail_budget.min(d.room(params));
                while budget > 0 && rng.gen_bool(0.75) {
                    let mut len = rng.gen_range(1..=budget);
                    if even_tails {
                        len -= len % 2;
                    }
                    if len == 0 {
                        break;
                    }
                    let from = *tree.choose(rng).expect("cycle is nonempty");
                    tree.extend(d.add_path(from, len, i));
                    budget -= len;
                }
            }
        }
    }
    d
}

fn relabel(graph: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..graph.order()).collect();
    perm.shuffle(rng);
    graph
        .permute(&perm)
        .expect("a permutation of the vertex set")
}

/// Random cross edges between distinct blocks, each kept only if `accept`
/// approves the enlarged graph.
fn attach(
    d: &mut Draft,
    params: &GenParams,
    rng: &mut ChaCha8Rng,
    mut accept: impl FnMut(&Graph) -> bool,
) {
    if params.k + usize::from(params.bipartite_pairs > 0) < 2 {
        return;
    }
    for _ in 0..params.attachments {
        let u = rng.gen_range(0..d.n);
        let v = rng.gen_range(0..d.n);
        if d.block[u] == d.block[v] || d.edges.contains(&edge(u, v)) {
            continue;
        }
        d.edges.push(edge(u, v));
        if !accept(&d.graph()) {
            d.edges.pop();
        }
    }
}

fn decomposition_with_k(graph: &Graph, k: usize, caps: &Caps) -> Option<FlowerDecomposition> {
    flower_decomposition(graph, caps).ok().filter(|f| f.k == k)
}

/// A verified R-disjoint graph with `params.k` odd cycles, drawn from
/// `params.seed`.
pub fn generate_r_disjoint(params: &GenParams, caps: &Caps) -> Result<Instance> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for attempt in 1..=params.max_retries.max(1) {
        let mut d = draft(params, &mut rng, true);
        if d.room(params) == 0 && params.max_order.is_some_and(|m| d.n > m) {
            continue;
        }
        if decomposition_with_k(&d.graph(), params.k, caps).is_none() {
            continue;
        }
        attach(&mut d, params, &mut rng, |g| {
            decomposition_with_k(g, params.k, caps).is_some()
        });
        let mut graph = d.graph();
        if params.relabel {
            graph = relabel(&graph, &mut rng);
        }
        let decomposition = flower_decomposition(&graph, caps)?;
        return Ok(Instance {
            seed: params.seed,
            attempts: attempt,
            graph,
            decomposition,
        });
    }
    Err(Error::GenerationFailed {
        attempts: params.max_retries.max(1),
        reason: format!(
            "no R-disjoint draft with k = {} from seed {}",
            params.k, params.seed
        ),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostBipartite {
    pub seed: u64,
    pub attempts: usize,
    pub graph: Graph,
    /// Flower or posy showing the graph is not König–Egerváry.
    pub certificate: Certificate,
}

fn odd_cycle_count(graph: &Graph, caps: &Caps) -> Option<usize> {
    enumerate_odd_cycles(graph, caps)
        .ok()
        .filter(|e| !e.truncated)
        .map(|e| e.items.len())
}

/// A graph with exactly one odd cycle that is not König–Egerváry. Tails may
/// have any length here.
pub fn generate_almost_bipartite_non_ke(
    params: &GenParams,
    caps: &Caps,
) -> Result<AlmostBipartite> {
    params.validate()?;
    if params.k != 1 {
        return Err(Error::InvalidParams(format!(
            "almost bipartite graphs need k = 1, got {}",
            params.k
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for attempt in 1..=params.max_retries.max(1) {
        let mut d = draft(params, &mut rng, false);
        if d.room(params) == 0 && params.max_order.is_some_and(|m| d.n > m) {
            continue;
        }
        attach(&mut d, params, &mut rng, |g| {
            odd_cycle_count(g, caps) == Some(1)
        });
        let mut graph = d.graph();
        if params.relabel {
            graph = relabel(&graph, &mut rng);
        }
        if odd_cycle_count(&graph, caps) != Some(1) {
            continue;
        }
        if let Some(certificate) = is_konig_egervary(&graph, caps)?.certificate {
            return Ok(AlmostBipartite {
                seed: params.seed,
                attempts: attempt,
                graph,
                certificate,
            });
        }
    }
    Err(Error::GenerationFailed {
        attempts: params.max_retries.max(1),
        reason: format!("no non-KE almost bipartite draft from seed {}", params.seed),
    })
}

/// `count` instances with seeds `params.seed + i`, generated in parallel and
/// returned in seed order.
pub fn generate_corpus(params: &GenParams, count: usize, caps: &Caps) -> Result<Vec<Instance>> {
    params.validate()?;
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            generate_r_disjoint(
                &GenParams {
                    seed: params.seed.wrapping_add(i),
                    ..params.clone()
                },
                caps,
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub seed: u64,
    pub order: usize,
    pub size: usize,
    pub k: usize,
    pub b: VertexSet,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: u32,
    pub params: GenParams,
    pub count: usize,
    pub entries: Vec<ManifestEntry>,
}

pub const CORPUS_GRAPHS: &str = "graphs.g6";
pub const CORPUS_MANIFEST: &str = "manifest.json";

/// Writes `graphs.g6` (one graph per line, in seed order) and
/// `manifest.json` into `dir`, creating it if needed.
pub fn write_corpus(dir: &Path, params: &GenParams, instances: &[Instance]) -> Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut lines = String::new();
    for inst in instances {
        lines.push_str(&serialize_graph(&inst.graph, Format::Graph6));
        lines.push('\n');
    }
    fs::write(dir.join(CORPUS_GRAPHS), lines)?;
    let manifest = Manifest {
        schema_version: SCHEMA_VERSION,
        params: params.clone(),
        count: instances.len(),
        entries: instances
            .iter()
            .map(|i| ManifestEntry {
                seed: i.seed,
                order: i.graph.order(),
                size: i.graph.size(),
                k: i.decomposition.k,
                b: i.decomposition.b.clone(),
                attempts: i.attempts,
            })
            .collect(),
    };
    fs::write(
        dir.join(CORPUS_MANIFEST),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    Ok(manifest)
}

/// Reads back the graphs and manifest written by [`write_corpus`].
pub fn read_corpus(dir: &Path) -> Result<(Vec<Graph>, Manifest)> {
    let text = fs::read_to_string(dir.join(CORPUS_GRAPHS))?;
    let graphs = text
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph(l, Format::Graph6))
        .collect::<Result<_>>()?;
    let manifest = serde_json::from_str(&fs::read_to_string(dir.join(CORPUS_MANIFEST))?)?;
    Ok((graphs, manifest))
}
