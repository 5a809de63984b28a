//! Quantum (= private) capacity of lossy and thermal channels.
//!
//! The quantum capacity counts output levels the environment knows nothing
//! about. Attenuation gives log2(lambda / (1 - lambda)), saturating in
//! power: shouting a secret helps the eavesdropper exactly as much as the
//! receiver. Thermal noise enters through the gain G = (1 - lambda) N_E + 1
//! of the loss + amplifier decomposition.
//!
//! Run with: cargo run --example quantum_capacity

use dqcap::dq_engine::{environment_leakage, quantum_capacity, thermal_decomposition};
use dqcap::phase_model::ModulationScheme;
use dqcap::reference::attenuation_quantum_exact;
use dqcap::{ChannelModel, PowerBudget};

fn main() {
    let budget = PowerBudget::new(8.0).unwrap();

    println!("Attenuation: model vs exact quantum capacity (bits)\n");
    println!(
        "{:>8} {:>10} {:>10} {:>12}",
        "lambda", "dq", "exact", "power hint"
    );
    for &lambda in &[0.5, 0.6, 2.0 / 3.0, 0.8, 0.9, 0.99] {
        let channel = ChannelModel::attenuation(lambda).unwrap();
        let q = quantum_capacity(&channel, budget).unwrap();
        let exact = attenuation_quantum_exact(lambda);
        let hint = if q.flags.power_limited {
            "W < 1/lambda"
        } else {
            "ok"
        };
        println!("{lambda:>8.3} {:>10.4} {exact:>10.4} {hint:>12}", q.bits);
    }

    println!("\nPower saturation: Q is identical at W and 10 W");
    let channel = ChannelModel::attenuation(0.8).unwrap();
    for &w in &[2.0, 20.0] {
        let q = quantum_capacity(&channel, PowerBudget::new(w).unwrap()).unwrap();
        println!("  W = {w:>4} -> Q = {} bits", q.bits);
    }

    println!("\nThermal noise via the loss + amplifier decomposition:");
    println!(
        "{:>8} {:>6} {:>8} {:>12} {:>10} {:>8} {:>8}",
        "lambda", "N_E", "gain", "lambda~", "Q (bits)", "S1", "S2"
    );
    let scheme = ModulationScheme::symmetric(8.0);
    for &(lambda, n_e) in &[(0.8, 0.0), (0.8, 1.0), (0.8, 3.0), (0.9, 1.0), (0.6, 1.0)] {
        let channel = ChannelModel::thermal(lambda, n_e).unwrap();
        let d = thermal_decomposition(&channel).unwrap();
        let q = quantum_capacity(&channel, budget).unwrap();
        let (s1, s2) = environment_leakage(&channel, &scheme).unwrap();
        println!(
            "{lambda:>8.2} {n_e:>6.1} {:>8.3} {:>12.4} {:>10.4} {s1:>8.3} {s2:>8.3}",
            d.gain, d.lambda_tilde, q.bits
        );
    }
    println!("\n(S1 >= S2: the loss-stage mode sees all the leaked bits; the");
    println!(" private capacity equals the quantum capacity in this model)");
}
