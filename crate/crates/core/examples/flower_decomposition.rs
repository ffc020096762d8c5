//! Odd cycles, reach sets with their parity classes, the R-disjoint verdict
//! and the flower decomposition.

use reachkit::graph::{fixtures, Graph};
use reachkit::structure::{
    enumerate_odd_cycles, flower_decomposition, is_r_disjoint, reach_set, reach_set_oracle,
};
use reachkit::Caps;

fn report(name: &str, graph: &Graph, caps: &Caps) -> reachkit::Result<()> {
    println!("{name}");
    for cycle in enumerate_odd_cycles(graph, caps)?.complete("odd cycles")? {
        let fast = reach_set(graph, &cycle);
        let oracle = reach_set_oracle(graph, &cycle, caps)?;
        println!(
            "  C = {:?}: R = {:?}, R_odd = {:?}, R_even = {:?}",
            cycle.vertices(),
            oracle.r,
            oracle.r_odd,
            oracle.r_even
        );
        if let Ok(fast) = fast {
            assert_eq!(fast.r, oracle.r);
        }
    }
    let verdict = is_r_disjoint(graph, caps)?;
    println!("  verdict: {}", verdict.name());
    if verdict.is_r_disjoint() {
        let f = flower_decomposition(graph, caps)?;
        println!(
            "  k = {}, parts = {:?}, B = {:?}",
            f.k,
            f.parts.iter().map(|p| &p.r).collect::<Vec<_>>(),
            f.b
        );
    }
    Ok(())
}

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    for name in [
        "tadpole",
        "tadpole_k2",
        "two_tadpoles",
        "posy_bridge",
        "double_pendant",
    ] {
        report(name, &fixtures::by_name(name).unwrap(), &caps)?;
    }
    Ok(())
}
