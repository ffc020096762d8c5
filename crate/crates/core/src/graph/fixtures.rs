//! The shipped fixture graphs. The text of each lives under `fixtures/` in
//! edge-list format and is embedded at compile time.

use super::{parse_graph, Format, Graph};

macro_rules! fixture {
    ($(#[$m:meta])* $name:ident, $file:literal) => {
        $(#[$m])*
        pub fn $name() -> Graph {
            parse_graph(include_str!(concat!("../../fixtures/", $file)), Format::EdgeList)
                .expect(concat!("fixture ", $file, " must parse"))
        }
    };
}

fixture!(
    /// F1: the triangle.
    triangle, "triangle.txt"
);
fixture!(
    /// F2: the five-cycle.
    c5, "c5.txt"
);
fixture!(
    /// F3: triangle `{0,1,2}` with tail `2-3-4`.
    tadpole, "tadpole.txt"
);
fixture!(
    /// F4: tadpole plus the edge `5-6` hung from vertex 3.
    tadpole_k2, "tadpole_k2.txt"
);
fixture!(
    /// F5: two disjoint tadpoles.
    two_tadpoles, "two_tadpoles.txt"
);
fixture!(
    /// F6: two triangles joined by the bridge `2-3`.
    posy_bridge, "posy_bridge.txt"
);
fixture!(
    /// F7: the path on four vertices.
    p4, "p4.txt"
);
fixture!(
    /// F8: triangle with vertex 3 carrying two pendants.
    double_pendant, "double_pendant.txt"
);

/// All fixtures with their file stems, in F1..F8 order.
pub fn all() -> Vec<(&'static str, Graph)> {
    vec![
        ("triangle", triangle()),
        ("c5", c5()),
        ("tadpole", tadpole()),
        ("tadpole_k2", tadpole_k2()),
        ("two_tadpoles", two_tadpoles()),
        ("posy_bridge", posy_bridge()),
        ("p4", p4()),
        ("double_pendant", double_pendant()),
    ]
}

/// Looks a fixture up by file stem.
pub fn by_name(name: &str) -> Option<Graph> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}
