//! α, core, corona, ker and the critical difference by exact search.

use reachkit::graph::fixtures;
use reachkit::independence::{critical_difference, enumerate_mis, independence_profile};
use reachkit::Caps;

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    let graph = fixtures::double_pendant();
    let mis = enumerate_mis(&graph, &caps)?.complete("maximum independent sets")?;
    println!("maximum independent sets: {mis:?}");
    let crit = critical_difference(&graph, &caps)?;
    println!(
        "d = {}, critical independent sets: {:?}",
        crit.d, crit.witnesses
    );

    for (name, g) in fixtures::all() {
        let p = independence_profile(&g, &caps)?;
        println!(
            "{name:<15} alpha = {} d = {} core = {:?} corona = {:?} ker = {:?}",
            p.alpha, p.d, p.core, p.corona, p.ker
        );
    }
    Ok(())
}
