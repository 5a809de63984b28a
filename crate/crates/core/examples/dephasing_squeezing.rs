//! Dephasing channel: squeezing hides the signal from the noise.
//!
//! Noise hits only the Q quadrature, so states squeezed narrow in P and
//! wide in Q pack the data into the clean quadrature. The model predicts a
//! capacity of log2(2W) no matter how strong the noise, and the Holevo
//! rate of the squeezed ensemble confirms it to within a bit.
//!
//! Run with: cargo run --example dephasing_squeezing

use dqcap::dq_engine::classical_capacity;
use dqcap::reference::dephasing_holevo;
use dqcap::{ChannelModel, PowerBudget};

fn main() {
    let w = 8.0;
    let budget = PowerBudget::new(w).unwrap();

    println!("Dephasing channel at W = {w}: capacity is noise-independent\n");
    println!(
        "{:>8} {:>10} {:>12} {:>12}",
        "mu2", "dq", "holevo", "chi-dq"
    );
    for &mu2 in &[0.0, 0.1, 1.0, 10.0, 100.0] {
        let channel = ChannelModel::dephasing(mu2).unwrap();
        let dq = classical_capacity(&channel, budget, false).unwrap().bits;
        let chi = dephasing_holevo(mu2, budget);
        println!("{mu2:>8.1} {dq:>10.4} {chi:>12.4} {:>12.4}", chi - dq);
    }

    let channel = ChannelModel::dephasing(1.0).unwrap();
    let cap = classical_capacity(&channel, budget, false).unwrap();
    let s = cap.optimizer_scheme;
    println!("\noptimal modulation at mu2 = 1:");
    println!(
        "  sigma_p = sigma_q = {:.4} (full power, split evenly)",
        s.sigma_p
    );
    println!(
        "  delta_p = {:.4}, delta_q = {:.4} (squeeze ratio {:.0}x)",
        s.delta_p,
        s.delta_q,
        s.delta_q / s.delta_p
    );
    println!(
        "  tile area = {:.4} (minimum uncertainty), rate = {} bits",
        s.tile_area(),
        cap.bits
    );
    println!("\nthe squeezing, and therefore the rate, is limited only by power:");
    for &w in &[2.0, 8.0, 32.0, 128.0] {
        let b = PowerBudget::new(w).unwrap();
        let bits = classical_capacity(&channel, b, false).unwrap().bits;
        println!("  W = {w:>5} -> {bits:.3} bits = log2(2W)");
    }
}
