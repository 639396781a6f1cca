use crate::error::ObjectiveError;

/// Stand-in for "worse than anything": the smallest finite f64. Constrained
/// objectives return it for infeasible points and best-tracking starts from
/// it. Any real objective value compares greater. Kept finite so differences
/// of two sentinels are exactly zero instead of NaN.
pub const SENTINEL_FITNESS: f64 = f64::MIN;

/// A fitness function to be MAXIMIZED over a position vector.
///
/// `deterministic` must hold for the replay guarantees: equal inputs yield
/// bit-identical outputs. Noisy objectives get their randomness from an
/// explicit seed that is part of the objective's identity, which keeps them
/// deterministic in this sense.
pub trait Objective {
    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError>;

    fn deterministic(&self) -> bool {
        true
    }
}

/// Plain-closure objective for tests and ad-hoc use.
pub struct FnObjective<F: Fn(&[f64]) -> f64>(pub F);

impl<F: Fn(&[f64]) -> f64> Objective for FnObjective<F> {
    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        Ok((self.0)(x))
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        (**self).evaluate(x)
    }

    fn deterministic(&self) -> bool {
        (**self).deterministic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel_is_below_any_real_value() {
        assert!(SENTINEL_FITNESS < -1e300);
        assert!(SENTINEL_FITNESS.is_finite());
        assert_eq!(SENTINEL_FITNESS - SENTINEL_FITNESS, 0.0);
    }
}
