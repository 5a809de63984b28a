//! Broadcast channel: one sender, two receivers on a beamsplitter.
//!
//! Receiver B gets the transmitted branch (fraction lambda of the tiles
//! survive), receiver C the reflected one. With 1/sqrt(2) tiles the region
//! is R_C <= log2(2 (1 - lambda) W), R_B + R_C <= log2(2 lambda W).
//!
//! Run with: cargo run --example broadcast_region

use dqcap::multiuser::broadcast_region;
use dqcap::PowerBudget;

fn main() {
    let (lambda, w) = (0.8, 50.5);
    let region = broadcast_region(lambda, PowerBudget::new(w).unwrap()).unwrap();

    println!("broadcast region at lambda = {lambda}, W = {w}:");
    for c in region.constraints() {
        let lhs: Vec<&str> = region
            .labels()
            .iter()
            .zip(&c.coeffs)
            .filter(|(_, a)| **a == 1.0)
            .map(|(l, _)| l.as_str())
            .collect();
        println!("  {} <= {:.4} bits", lhs.join(" + "), c.bound_bits);
    }

    println!("\nPareto boundary (R_B, R_C):");
    for (rb, rc) in region.boundary(9) {
        println!("  {rb:>8.4} {rc:>8.4}");
    }

    println!("\nmembership checks:");
    for pt in [[1.0, 1.0], [0.0, 5.0], [6.0, 0.3], [0.0, 0.0]] {
        println!(
            "  ({}, {}) -> {}",
            pt[0],
            pt[1],
            region.contains(&pt).unwrap()
        );
    }

    // As lambda -> 1 everything goes to B.
    println!("\nweak-receiver bound as lambda -> 1 (W = {w}):");
    for &l in &[0.6, 0.8, 0.95, 0.999, 0.9999999] {
        let r = broadcast_region(l, PowerBudget::new(w).unwrap()).unwrap();
        println!(
            "  lambda = {l:<9} -> R_C <= {:.4} bits",
            r.constraints()[0].bound_bits
        );
    }
}
