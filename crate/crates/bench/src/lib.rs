//! Workloads shared by the benchmarks.

use gentle_mar::{fixtures, random_gentle, BoundQuiver};

/// Named algebras, smallest first.
pub fn workloads() -> Vec<(String, BoundQuiver)> {
    let mut out: Vec<(String, BoundQuiver)> = ["a2", "ex1", "zigzag3", "orpheus"]
        .iter()
        .map(|n| (n.to_string(), fixtures::bundled(n).expect("bundled fixture")))
        .collect();
    for seed in [3u64, 17] {
        out.push((format!("random{seed}"), random_gentle(seed, 6)));
    }
    out
}
