//! Parse an edge list, print its graph6 encoding, and read it back.
//!
//! cargo run --example parse_and_convert [FILE]

use reachkit::graph::{fixtures, parse_graph, serialize_graph, Format};

fn main() -> reachkit::Result<()> {
    let graph = match std::env::args().nth(1) {
        Some(path) => parse_graph(&std::fs::read_to_string(path)?, Format::EdgeList)?,
        None => fixtures::tadpole_k2(),
    };
    let g6 = serialize_graph(&graph, Format::Graph6);
    println!("n = {}, m = {}", graph.order(), graph.size());
    println!("graph6: {g6}");
    println!(
        "edge list:\n{}",
        serialize_graph(&graph, Format::EdgeList).trim_end()
    );

    let back = parse_graph(&g6, Format::Graph6)?;
    assert_eq!(back, graph);
    println!("round trip ok");

    match parse_graph("3 2\n0 1\n1 1\n", Format::EdgeList) {
        Err(e) => println!("rejected bad input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
