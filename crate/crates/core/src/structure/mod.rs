//! Gallai–Edmonds partition, odd cycles, flowers and posies, reach sets and
//! the flower decomposition.

mod cycles;
mod flower;
mod gallai_edmonds;
mod reach;

pub use cycles::{enumerate_odd_cycles, is_odd_cycle_disjoint, CycleDisjointness, OddCycle};
pub use flower::{
    blossom_base, find_flower, find_flowers, find_overlapping_posy, find_posy, is_konig_egervary,
    ke_certificate, Certificate, Flower, KeVerdict, OverlappingPosy, Posy,
};
pub use gallai_edmonds::{d_components, gallai_edmonds, gallai_edmonds_oracle, GeDecomposition};
pub use reach::{
    d_cycle_components, flower_decomposition, is_r_disjoint, reach_set, reach_set_oracle,
    FlowerDecomposition, RDisjointVerdict, ReachSet,
};
