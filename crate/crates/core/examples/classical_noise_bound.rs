//! Classical noise channel: tile counting versus the displaced-vacuum
//! lower bound (g(W - 1/2 + mu2) - g(mu2)) / ln 2.
//!
//! Run with: cargo run --example classical_noise_bound

use dqcap::dq_engine::classical_capacity;
use dqcap::reference::classical_noise_lower_bound;
use dqcap::{ChannelModel, PowerBudget};

fn main() {
    println!("Classical noise channel: DQ capacity vs achievable lower bound\n");
    println!(
        "{:>8} {:>8} {:>10} {:>12} {:>8}",
        "mu2", "W", "dq", "lower bound", "gap"
    );

    let mut max_gap: f64 = 0.0;
    for &mu2 in &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
        for &w in &[1.0, 10.0, 100.0] {
            let channel = ChannelModel::classical_noise(mu2).unwrap();
            let budget = PowerBudget::new(w).unwrap();
            let dq = classical_capacity(&channel, budget, false).unwrap().bits;
            let bound = classical_noise_lower_bound(mu2, budget);
            let gap = dq - bound;
            max_gap = max_gap.max(gap.abs());
            println!("{mu2:>8.2} {w:>8.1} {dq:>10.4} {bound:>12.4} {gap:>8.4}");
        }
    }
    println!("\nmax |gap| above: {max_gap:.4} bits (within 1 bit for all mu2)");

    // The kink at mu2 = 1/2: below it the uncertainty floor, not the
    // noise, limits the tile size and the noiseless rate log2(2W) survives.
    let w = PowerBudget::new(16.0).unwrap();
    println!("\ntile-size branches at W = 16:");
    for &mu2 in &[0.2, 0.4, 0.5, 0.8, 1.6] {
        let channel = ChannelModel::classical_noise(mu2).unwrap();
        let dq = classical_capacity(&channel, w, false).unwrap().bits;
        let branch = if mu2 >= 0.5 {
            "log2(W/mu2)"
        } else {
            "log2(2W) "
        };
        println!("  mu2 = {mu2:<4} -> {dq:.4} bits  [{branch}]");
    }
}
