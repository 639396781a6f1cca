use cfo_core::{Objective, ObjectiveError};

use crate::catalog::BenchmarkId;
use crate::functions::evaluate;

/// Adapter exposing one catalog entry as an engine objective. The seed only
/// matters for the noisy entry and is part of the objective's identity.
#[derive(Debug, Clone)]
pub struct BenchmarkObjective {
    pub id: BenchmarkId,
    pub seed: Option<u64>,
}

impl BenchmarkObjective {
    pub fn new(id: BenchmarkId) -> Self {
        Self { id, seed: None }
    }

    pub fn with_seed(id: BenchmarkId, seed: u64) -> Self {
        Self {
            id,
            seed: Some(seed),
        }
    }
}

impl Objective for BenchmarkObjective {
    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        evaluate(self.id, x, self.seed).map_err(|e| ObjectiveError::new(e.to_string()))
    }
}
