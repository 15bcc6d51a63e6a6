//! Inputs shared by the benchmarks.

use quintic_core::ade::{Family, RootSystem};
use quintic_core::flopsim::orbit_starts;
use quintic_core::qsing::{wahl_string, TString};

/// Wahl strings of growing length, `[4]`, `[2, 5]`, `[2, 2, 6]`, ...
pub fn wahl_ladder(max_len: i64) -> Vec<TString> {
    (2..=max_len + 1).map(|n| wahl_string(n, n - 1).expect("valid parameters")).collect()
}

/// E6 with the orbit starts of its first minuscule weight.
pub fn e6_orbit() -> (RootSystem, Vec<Vec<i64>>) {
    let rs = RootSystem::build(Family::E, 6).expect("E6");
    let w = rs.fundamental_weight(0).expect("node");
    let starts = orbit_starts(&rs, &w, 20).expect("dominant");
    (rs, starts)
}
