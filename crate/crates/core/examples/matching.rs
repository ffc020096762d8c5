//! Maximum matchings: the blossom engine, the exhaustive list, and the
//! alternating labels that give the Gallai–Edmonds sets.

use reachkit::graph::fixtures;
use reachkit::matching::{
    alternating_labels, enumerate_maximum_matchings, maximum_matching, verify_matching,
};

fn main() {
    let graph = fixtures::double_pendant();
    let m = maximum_matching(&graph);
    println!("maximum matching {:?} (size {})", m.edges(), m.size());
    println!("unsaturated vertices: {:?}", m.unsaturated());

    let check = verify_matching(&graph, &m.edges());
    println!("verified: {check:?}");

    let all = enumerate_maximum_matchings(&graph, 1000);
    println!(
        "{} maximum matchings, truncated = {}",
        all.items.len(),
        all.truncated
    );
    for mm in &all.items {
        println!("  {:?}", mm.edges());
    }

    let labels = alternating_labels(&graph, &m).expect("blossom output is maximum");
    println!("even (D) = {:?}, odd (A) = {:?}", labels.even, labels.odd);
}
