use crate::error::SpaceError;

/// Bounded search box with an immutable snapshot of its construction-time
/// bounds. The current bounds contract around the best probe during a run and
/// are restored from the snapshot between runs; they never leave the starting
/// box. The diagonal length is fixed at construction and used to normalize
/// probe-distance diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionSpace {
    xi_min: Vec<f64>,
    xi_max: Vec<f64>,
    starting_xi_min: Vec<f64>,
    starting_xi_max: Vec<f64>,
    diag_length: f64,
}

impl DecisionSpace {
    pub fn new(bounds: &[(f64, f64)]) -> Result<Self, SpaceError> {
        if bounds.is_empty() {
            return Err(SpaceError::EmptyDimensions);
        }
        for (dim, &(lo, hi)) in bounds.iter().enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(SpaceError::NonFiniteBounds { dim });
            }
            if lo >= hi {
                return Err(SpaceError::InvertedBounds { dim, lo, hi });
            }
        }
        let xi_min: Vec<f64> = bounds.iter().map(|b| b.0).collect();
        let xi_max: Vec<f64> = bounds.iter().map(|b| b.1).collect();
        let diag_length = bounds
            .iter()
            .map(|&(lo, hi)| (hi - lo) * (hi - lo))
            .sum::<f64>()
            .sqrt();
        Ok(Self {
            starting_xi_min: xi_min.clone(),
            starting_xi_max: xi_max.clone(),
            xi_min,
            xi_max,
            diag_length,
        })
    }

    pub fn nd(&self) -> usize {
        self.xi_min.len()
    }

    pub fn lo(&self, dim: usize) -> f64 {
        self.xi_min[dim]
    }

    pub fn hi(&self, dim: usize) -> f64 {
        self.xi_max[dim]
    }

    pub fn starting_lo(&self, dim: usize) -> f64 {
        self.starting_xi_min[dim]
    }

    pub fn starting_hi(&self, dim: usize) -> f64 {
        self.starting_xi_max[dim]
    }

    pub fn diag_length(&self) -> f64 {
        self.diag_length
    }

    pub fn bounds(&self) -> Vec<(f64, f64)> {
        self.xi_min
            .iter()
            .zip(&self.xi_max)
            .map(|(&a, &b)| (a, b))
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.nd()
            && x.iter()
                .enumerate()
                .all(|(i, &v)| v >= self.xi_min[i] && v <= self.xi_max[i])
    }

    pub fn contains_in_starting(&self, x: &[f64]) -> bool {
        x.len() == self.nd()
            && x.iter()
                .enumerate()
                .all(|(i, &v)| v >= self.starting_xi_min[i] && v <= self.starting_xi_max[i])
    }

    /// Move each bound halfway toward the best coordinate. Every dimension's
    /// extent shrinks to exactly half regardless of where `best` sits.
    pub fn shrink_around(&mut self, best: &[f64]) {
        assert_eq!(best.len(), self.nd());
        for i in 0..self.nd() {
            self.xi_min[i] += (best[i] - self.xi_min[i]) / 2.0;
            self.xi_max[i] -= (self.xi_max[i] - best[i]) / 2.0;
        }
    }

    /// Restore the construction-time bounds; called between inner runs.
    pub fn reset(&mut self) {
        self.xi_min.copy_from_slice(&self.starting_xi_min);
        self.xi_max.copy_from_slice(&self.starting_xi_max);
    }
}
