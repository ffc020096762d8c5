//! Exact determinants and null spaces, and both spectral checks against the
//! flower decomposition.

use reachkit::graph::fixtures;
use reachkit::spectral::{
    adjacency_determinant, check_determinant_conjecture, check_nullspace_decomposition,
    null_space_basis,
};
use reachkit::structure::flower_decomposition;
use reachkit::Caps;

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    for name in ["tadpole", "tadpole_k2", "two_tadpoles", "double_pendant"] {
        let graph = fixtures::by_name(name).unwrap();
        let decomp = flower_decomposition(&graph, &caps)?;
        let det = check_determinant_conjecture(&graph, &decomp);
        let ns = check_nullspace_decomposition(&graph, &decomp);
        println!(
            "{name}: det A = {}, part determinants {:?}, holds = {}",
            adjacency_determinant(&graph),
            det.factors,
            det.holds
        );
        println!(
            "  null space basis {}",
            serde_json::to_string(&null_space_basis(&graph))?
        );
        println!(
            "  nullspace verdict {:?}, supported dims {:?}",
            ns.verdict, ns.supported_dims
        );
    }
    Ok(())
}
