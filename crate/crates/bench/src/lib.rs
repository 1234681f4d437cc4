//! Benchmark fixtures shared by the criterion benches.

use hadastick_core::{make_profile, AConfig, HVector, SIProfile};

/// SI h-vectors of increasing size used across benches.
pub const PROFILES: &[&[u64]] = &[
    &[1, 3, 1],
    &[1, 3, 4, 3, 1],
    &[1, 3, 6, 6, 3, 1],
    &[1, 3, 6, 10, 10, 6, 3, 1],
    &[1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
];

pub fn profile(h: &[u64]) -> SIProfile {
    make_profile(&HVector::new(h.to_vec())).expect("fixture is an SI sequence")
}

/// Default configuration with index sets sized for `p`.
pub fn config_for(p: &SIProfile) -> AConfig {
    AConfig::standard(p.rows(), p.cols())
}
