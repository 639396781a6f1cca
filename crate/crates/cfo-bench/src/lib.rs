//! Benchmark-function catalog: classic global-optimization test functions
//! behind one maximize-convention evaluator. Minimization problems return the
//! negated value; constrained problems reject infeasible points to the shared
//! below-anything sentinel. Every function is implemented exactly as the
//! source catalog writes it, quirks included, so catalog values are the
//! ground truth the tests pin.

mod catalog;
mod functions;
mod noise;
mod objective;
mod tables;

pub use catalog::{
    catalog, default_bounds, entry, known_optimum, BenchmarkEntry, BenchmarkId, Dimension,
};
pub use functions::{evaluate, evaluate_sgo_with_offsets, EvalError};
pub use objective::BenchmarkObjective;
