//! Sending classical and quantum data through the same attenuation
//! channel: time sharing is not optimal.
//!
//! The high-order output levels are visible to the environment anyway, so
//! they can carry classical bits for free while the low-order levels carry
//! qubits at full rate. Only past C_max - Q_max classical bits does a
//! linear trade set in.
//!
//! Run with: cargo run --example cq_tradeoff

use dqcap::dq_engine::{classical_capacity, cq_tradeoff_region, quantum_capacity};
use dqcap::{ChannelModel, PowerBudget};

fn main() {
    let (lambda, w) = (0.8, 8.0);
    let channel = ChannelModel::attenuation(lambda).unwrap();
    let budget = PowerBudget::new(w).unwrap();

    let c_max = classical_capacity(&channel, budget, false).unwrap().bits;
    let q_max = quantum_capacity(&channel, budget).unwrap().bits;
    println!("attenuation lambda = {lambda}, W = {w}:");
    println!("  C_max = {c_max:.4} bits, Q_max = {q_max:.4} bits");
    println!(
        "  free classical allotment C_max - Q_max = {:.4} bits\n",
        c_max - q_max
    );

    let region = cq_tradeoff_region(&channel, budget).unwrap();
    println!("{:>10} {:>10} {:>14}", "C", "Q", "time sharing Q");
    for (c, q) in region.boundary(9) {
        // Time sharing interpolates straight between (0, Q_max) and (C_max, 0).
        let ts = q_max * (1.0 - c / c_max);
        println!("{c:>10.4} {q:>10.4} {ts:>14.4}");
    }

    println!("\nat C = C_max - Q_max the quantum rate is still Q_max:");
    let corner = [c_max - q_max, q_max];
    println!(
        "  region contains ({:.4}, {:.4}): {}",
        corner[0],
        corner[1],
        region.contains(&corner).unwrap()
    );
    let ts_at_corner = q_max * (1.0 - corner[0] / c_max);
    println!(
        "  time sharing would only reach Q = {:.4} there ({:.4} bits worse)",
        ts_at_corner,
        q_max - ts_at_corner
    );
}
