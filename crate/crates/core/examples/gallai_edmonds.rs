//! The partition (D, A, C) by vertex deletion, checked against the
//! definition over all maximum matchings.

use reachkit::graph::fixtures;
use reachkit::matching::DEFAULT_MATCHING_CAP;
use reachkit::structure::{d_components, gallai_edmonds, gallai_edmonds_oracle};

fn main() -> reachkit::Result<()> {
    for (name, graph) in fixtures::all() {
        let ge = gallai_edmonds(&graph);
        assert_eq!(ge, gallai_edmonds_oracle(&graph, DEFAULT_MATCHING_CAP)?);
        let comps = d_components(&graph, &ge);
        println!(
            "{name:<15} D = {:?}  A = {:?}  C = {:?}  G[D] parts = {comps:?}",
            ge.d, ge.a, ge.c
        );
    }
    Ok(())
}
