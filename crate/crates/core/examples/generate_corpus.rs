//! Seeded generation: a few R-disjoint corpora, an almost bipartite non-KE
//! graph, and a corpus written to disk.
//!
//! cargo run --example generate_corpus [OUT_DIR]

use reachkit::generator::{
    generate_almost_bipartite_non_ke, generate_corpus, write_corpus, GenParams,
};
use reachkit::graph::{serialize_graph, Format};
use reachkit::Caps;

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    let params = GenParams {
        tail_budget: 4,
        bipartite_pairs: 1,
        bipartite_density: 0.5,
        attachments: 6,
        max_order: Some(16),
        ..GenParams::new(2, 42)
    };
    println!("params: {}", serde_json::to_string(&params)?);
    let corpus = generate_corpus(&params, 8, &caps)?;
    for inst in &corpus {
        let d = &inst.decomposition;
        println!(
            "seed {} n = {:>2} {:<16} k = {} B = {:?}",
            inst.seed,
            inst.graph.order(),
            serialize_graph(&inst.graph, Format::Graph6),
            d.k,
            d.b
        );
    }

    let ab = generate_almost_bipartite_non_ke(
        &GenParams {
            tail_budget: 5,
            bipartite_pairs: 1,
            attachments: 4,
            ..GenParams::new(1, 9)
        },
        &caps,
    )?;
    println!(
        "almost bipartite: {} certificate {}",
        serialize_graph(&ab.graph, Format::Graph6),
        serde_json::to_string(&ab.certificate)?
    );

    if let Some(dir) = std::env::args().nth(1) {
        let manifest = write_corpus(dir.as_ref(), &params, &corpus)?;
        println!("wrote {} graphs to {dir}", manifest.count);
    }
    Ok(())
}
