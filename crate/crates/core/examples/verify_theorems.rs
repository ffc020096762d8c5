//! Run every theorem check on the R-disjoint fixtures and print the records.

use reachkit::graph::fixtures;
use reachkit::structure::flower_decomposition;
use reachkit::verifier::{verify, Suite};
use reachkit::Caps;

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    for name in [
        "triangle",
        "c5",
        "tadpole",
        "tadpole_k2",
        "two_tadpoles",
        "double_pendant",
    ] {
        let graph = fixtures::by_name(name).unwrap();
        let decomp = flower_decomposition(&graph, &caps)?;
        let report = verify(&graph, &decomp, Suite::All, &caps)?;
        println!(
            "{name}: {}",
            if report.passed() {
                "all pass"
            } else {
                "FAILURES"
            }
        );
        for c in &report.checks {
            println!("  {:<20} {:?}  {}", c.name, c.status, c.detail);
        }
    }
    Ok(())
}
