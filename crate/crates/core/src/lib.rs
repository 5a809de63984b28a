//! Discrete-quadrature (DQ) capacities of bosonic gaussian channels.
//!
//! The model replaces gaussian states with uniform mixtures of perfectly
//! distinguishable phase-space rectangles of area at least 1/2. Channels
//! act deterministically on the rectangles — attenuation shrinks them,
//! noise merges them, uncertainty re-inflates them — and a capacity is
//! just the log of how many distinguishable rectangles survive, maximized
//! over the input geometry. That one idea yields closed forms for
//! classical, quantum and private capacities, a classical-quantum
//! trade-off region, and two-user rate regions, all within a constant
//! number of bits of the known gaussian-model results.
//!
//! The library is organized by layer:
//!
//! * [`phase_model`] — schemes, budgets, channels, and the effective
//!   output tile.
//! * [`dq_engine`] — single-user capacities and the trade-off region.
//! * [`multiuser`] — multiple-access and broadcast rate regions.
//! * [`reference`] — exact/known gaussian formulas for gap reporting.
//! * [`optimizer`] — brute-force grid search over modulation schemes, the
//!   independent check on every closed form.
//! * [`cli`] — the `dqcap` command-line front end.
//!
//! ```
//! use dqcap::dq_engine::classical_capacity;
//! use dqcap::{ChannelModel, PowerBudget};
//!
//! let channel = ChannelModel::attenuation(0.5).unwrap();
//! let budget = PowerBudget::new(8.0).unwrap();
//! let cap = classical_capacity(&channel, budget, true).unwrap();
//! assert_eq!(cap.bits, 3.0); // log2 of ceil(2 W lambda) = log2 8
//! ```

pub mod cli;
pub mod dq_engine;
pub mod error;
pub mod multiuser;
pub mod optimizer;
pub mod phase_model;
pub mod reference;

pub use dq_engine::{CapacityFlags, CapacityResult, Method};
pub use error::{Error, Result};
pub use multiuser::RateRegion;
pub use phase_model::{ChannelModel, ModulationScheme, PowerBudget, TileDims};
