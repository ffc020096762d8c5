//! König–Egerváry tests with flower and posy certificates.

use reachkit::graph::fixtures;
use reachkit::structure::{is_konig_egervary, Certificate};
use reachkit::Caps;

fn main() -> reachkit::Result<()> {
    let caps = Caps::default();
    for (name, graph) in fixtures::all() {
        let v = is_konig_egervary(&graph, &caps)?;
        let cert = match &v.certificate {
            None => "none".to_string(),
            Some(Certificate::Flower(f)) => format!(
                "flower with blossom {:?} and stem {:?}",
                f.blossom.vertices(),
                f.stem
            ),
            Some(Certificate::Posy(p)) => {
                format!("posy {:?} / {:?} via {:?}", p.first, p.second, p.path)
            }
            Some(Certificate::OverlappingPosy(p)) => {
                format!(
                    "overlapping posy {:?} / {:?} via walk {:?}",
                    p.first, p.second, p.walk
                )
            }
        };
        println!(
            "{name:<15} KE = {:<5} mu = {} alpha = {:?} certificate: {cert}",
            v.konig_egervary, v.matching_number, v.alpha
        );
    }
    Ok(())
}
