//! End-to-end check: the parameter-free sweep recovers the known optima of
//! a few easy 2-D entries.

use cfo_bench::{default_bounds, BenchmarkId, BenchmarkObjective};
use cfo_core::{run_cfo, CfoSettings, DecisionSpace};

fn run(id: BenchmarkId) -> (f64, Vec<f64>, u64) {
    let bounds = default_bounds(id, 2);
    let mut space = DecisionSpace::new(&bounds).unwrap();
    let settings = CfoSettings::general(2);
    let obj = BenchmarkObjective::new(id);
    let result = run_cfo(&obj, &mut space, &settings).unwrap();
    (result.best_fitness, result.best_coords, result.neval_total)
}

#[test]
fn recovers_goldstein_price() {
    let (best, coords, neval) = run(BenchmarkId::F18);
    assert!(
        best >= -3.05,
        "best {best} at {coords:?} after {neval} evaluations"
    );
}

#[test]
fn recovers_himmelblau() {
    let (best, coords, neval) = run(BenchmarkId::Himmelblau);
    assert!(
        best >= 199.5,
        "best {best} at {coords:?} after {neval} evaluations"
    );
}

#[test]
fn recovers_sphere() {
    let (best, coords, neval) = run(BenchmarkId::Sphere);
    assert!(
        best >= -0.01,
        "best {best} at {coords:?} after {neval} evaluations"
    );
}
