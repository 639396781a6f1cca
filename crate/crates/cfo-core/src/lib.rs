//! Deterministic gravitational-analogy global optimizer.
//!
//! Probes move through a bounded decision space under accelerations computed
//! from pairwise fitness differences. Every quantity is a pure function of the
//! settings and the objective, so two runs with equal inputs produce
//! bit-identical traces. The outer driver sweeps probes-per-dimension and the
//! initial-distribution parameter gamma, keeping the best result over all
//! inner runs.

mod diagnostics;
mod dynamics;
mod error;
mod frep;
mod ipd;
mod objective;
mod runner;
mod settings;
mod space;
mod trace;

pub use diagnostics::{davg, get_best_fitness, has_fitness_saturated, BestSample};
pub use dynamics::{
    compute_accelerations, retrieve_errant_probes, retrieve_errant_probes_directional,
    update_positions,
};
pub use error::{CfoError, ObjectiveError, SettingsError, SpaceError};
pub use frep::{frep_next, FrepSchedule};
pub use ipd::initial_probe_distribution;
pub use objective::{FnObjective, Objective, SENTINEL_FITNESS};
pub use runner::{run_cfo, run_inner};
pub use settings::CfoSettings;
pub use space::DecisionSpace;
pub use trace::{InnerBest, RunResult, RunTrace};
