use serde::{Deserialize, Serialize};

/// Resource limits for the exponential searches. Hitting any of them yields
/// [`crate::Error::CapExceeded`] or a `skipped` check, never a guess.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest order for which independence data is computed exactly.
    pub mis_vertices: usize,
    /// Maximum matchings enumerated per graph.
    pub matchings: usize,
    /// Odd cycles enumerated per graph.
    pub odd_cycles: usize,
    /// Largest order for which the odd-cycle disjointness test runs.
    pub cycle_order: usize,
    /// Flowers enumerated per (matching, cycle) pair.
    pub flowers: usize,
    /// Node budget for depth-first path and cycle searches.
    pub search_steps: usize,
    /// Independent sets visited when computing critical sets.
    pub independent_sets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            mis_vertices: 32,
            matchings: 100_000,
            odd_cycles: 10_000,
            cycle_order: 24,
            flowers: 100_000,
            search_steps: 20_000_000,
            independent_sets: 20_000_000,
        }
    }
}
