use std::sync::Arc;

use cfo_core::{Objective, ObjectiveError};

use crate::backend::{BackendError, SimulatorBackend};
use crate::deck::{generate_single_load_deck, FrequencySweep};
use crate::monopole::{MonopoleSpec, SingleLoadDesign};
use crate::response::FrequencyResponse;

/// Stands in for a fitness whose denominator degenerated to zero; large
/// enough to dominate any regular value so the optimizer keeps a total
/// ordering instead of dividing by zero.
pub const OBJECTIVE_CAP: f64 = 1e12;

/// Fitness value plus a flag marking the degenerate-denominator cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessEval {
    pub value: f64,
    pub capped: bool,
}

impl FitnessEval {
    fn regular(value: f64) -> Self {
        Self {
            value,
            capped: false,
        }
    }

    fn capped() -> Self {
        Self {
            value: OBJECTIVE_CAP,
            capped: true,
        }
    }
}

fn min_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::INFINITY, f64::min)
}

fn max_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Band-flatness fitness: (min efficiency% + min max-gain dBi) / (SWR span).
/// Rises with efficiency and worst-case gain, falls as the SWR excursion
/// over the band grows.
pub fn f1(resp: &FrequencyResponse, z0: f64) -> FitnessEval {
    let swr = resp.vswr_for(z0);
    let delta = max_of(&swr) - min_of(&swr);
    if delta == 0.0 {
        return FitnessEval::capped();
    }
    FitnessEval::regular((min_of(&resp.efficiency_pct) + min_of(&resp.gmax_dbi)) / delta)
}

/// Impedance-targeting fitness: min efficiency% divided by the distance of
/// the peak input resistance from z0 times the peak reactance magnitude.
pub fn f2(resp: &FrequencyResponse, z0: f64) -> FitnessEval {
    let den = (z0 - max_of(&resp.rin_ohms)).abs() * max_of(&resp.xin_ohms).abs();
    if den == 0.0 {
        return FitnessEval::capped();
    }
    FitnessEval::regular(min_of(&resp.efficiency_pct) / den)
}

/// Aggressive flatness fitness: min efficiency% over the product of the
/// resistance miss from z0, the SWR span, and the reactance span.
pub fn f3(resp: &FrequencyResponse, z0: f64) -> FitnessEval {
    let swr = resp.vswr_for(z0);
    let den = (z0 - max_of(&resp.rin_ohms)).abs()
        * (max_of(&swr) - min_of(&swr))
        * (max_of(&resp.xin_ohms) - min_of(&resp.xin_ohms));
    if den == 0.0 {
        return FitnessEval::capped();
    }
    FitnessEval::regular(min_of(&resp.efficiency_pct) / den)
}

/// Which of the three monopole fitness formulas to drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonopoleFitness {
    F1,
    F2,
    F3,
}

impl MonopoleFitness {
    pub fn apply(&self, resp: &FrequencyResponse, z0: f64) -> FitnessEval {
        match self {
            MonopoleFitness::F1 => f1(resp, z0),
            MonopoleFitness::F2 => f2(resp, z0),
            MonopoleFitness::F3 => f3(resp, z0),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            MonopoleFitness::F1 => "f1",
            MonopoleFitness::F2 => "f2",
            MonopoleFitness::F3 => "f3",
        }
    }
}

/// Full pipeline for one design: deck, simulate, score. Deterministic given
/// a deterministic backend.
pub fn evaluate_design(
    design: &SingleLoadDesign,
    fitness: MonopoleFitness,
    z0: f64,
    spec: &MonopoleSpec,
    backend: &dyn SimulatorBackend,
) -> Result<FitnessEval, BackendError> {
    let deck = generate_single_load_deck(design, spec, &FrequencySweep::default(), z0)
        .map_err(|e| BackendError::new(e.to_string(), String::new()))?;
    let resp = backend.frequency_response(&deck, z0)?;
    Ok(fitness.apply(&resp, z0))
}

/// SWR curves for one design across several candidate feed impedances. The
/// input impedance does not depend on z0, so the solver runs exactly once
/// and the per-z0 curves are recomputed from the same impedance data.
#[derive(Debug, Clone, PartialEq)]
pub struct Z0Sweep {
    pub freqs_mhz: Vec<f64>,
    /// (z0, vswr per frequency) in input order.
    pub curves: Vec<(f64, Vec<f64>)>,
}

pub fn z0_sweep(
    design: &SingleLoadDesign,
    z0_values: &[f64],
    spec: &MonopoleSpec,
    backend: &dyn SimulatorBackend,
) -> Result<Z0Sweep, BackendError> {
    let carrier_z0 = 50.0;
    let deck = generate_single_load_deck(design, spec, &FrequencySweep::default(), carrier_z0)
        .map_err(|e| BackendError::new(e.to_string(), String::new()))?;
    let resp = backend.frequency_response(&deck, carrier_z0)?;
    let curves = z0_values
        .iter()
        .map(|&z0| (z0, resp.vswr_for(z0)))
        .collect();
    Ok(Z0Sweep {
        freqs_mhz: resp.freqs_mhz,
        curves,
    })
}

/// The (R, H) design space exposed as an engine objective. Position vectors
/// are [resistance ohms, load height m]; failures carry the deck digest of
/// the offending design for reproduction.
pub struct MonopoleObjective {
    pub fitness: MonopoleFitness,
    pub z0: f64,
    pub spec: MonopoleSpec,
    pub backend: Arc<dyn SimulatorBackend>,
}

impl MonopoleObjective {
    pub fn new(fitness: MonopoleFitness, z0: f64, backend: Arc<dyn SimulatorBackend>) -> Self {
        Self {
            fitness,
            z0,
            spec: MonopoleSpec::single_load(),
            backend,
        }
    }
}

impl Objective for MonopoleObjective {
    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        if x.len() != 2 {
            return Err(ObjectiveError::new(format!(
                "monopole objective expects (R, H), got {} coordinates",
                x.len()
            )));
        }
        let design = SingleLoadDesign {
            r_ohms: x[0],
            h_m: x[1],
        };
        evaluate_design(
            &design,
            self.fitness,
            self.z0,
            &self.spec,
            self.backend.as_ref(),
        )
        .map(|eval| eval.value)
        .map_err(|e| ObjectiveError::new(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat(eff: f64, gmax: f64, rin: Vec<f64>, xin: Vec<f64>) -> FrequencyResponse {
        let n = rin.len();
        FrequencyResponse::from_parts(
            (0..n).map(|i| 5.0 + i as f64).collect(),
            vec![eff; n],
            vec![gmax; n],
            rin,
            xin,
            50.0,
        )
    }

    #[test]
    fn f1_units_consistency_hand_value() {
        // SWR spans [1.61, 36.61]: rin 80.5 and 1830.5 ohms, both purely
        // resistive, give those ratios exactly against 50 ohms.
        let resp = flat(80.0, 4.0, vec![80.5, 1830.5], vec![0.0, 0.0]);
        let eval = f1(&resp, 50.0);
        assert!(!eval.capped);
        assert!((eval.value - 2.4).abs() < 1e-12, "{}", eval.value);
    }

    #[test]
    fn f1_decreases_when_swr_spread_grows() {
        let base = flat(80.0, 4.0, vec![80.5, 1830.5], vec![0.0, 0.0]);
        let worse = flat(80.0, 4.0, vec![80.5, 3661.0], vec![0.0, 0.0]);
        assert!(f1(&worse, 50.0).value < f1(&base, 50.0).value);
    }

    #[test]
    fn f2_hand_value_and_scaling() {
        // min eff 10, max rin 60, max xin 5 -> 10/(10*5) = 0.2
        let resp = flat(10.0, 0.0, vec![40.0, 60.0], vec![2.0, 5.0]);
        let eval = f2(&resp, 50.0);
        assert!((eval.value - 0.2).abs() < 1e-12);
        // doubling the reactance peak halves the fitness
        let resp2 = flat(10.0, 0.0, vec![40.0, 60.0], vec![2.0, 10.0]);
        assert!((f2(&resp2, 50.0).value - 0.1).abs() < 1e-12);
    }

    #[test]
    fn f3_hand_value() {
        // min eff 15, max rin 250, SWR span 10 (50/11-ohm and matched
        // points), xin span 500
        let resp = flat(
            15.0,
            0.0,
            vec![50.0, 250.0, 50.0 / 11.0, 250.0, 250.0],
            vec![0.0, 0.0, 0.0, 250.0, -250.0],
        );
        let swr = resp.vswr_for(50.0);
        let span = swr.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - swr.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!((span - 10.0).abs() < 1e-9, "swr span {span}");
        let eval = f3(&resp, 50.0);
        assert!((eval.value - 1.5e-5).abs() < 1e-12, "{}", eval.value);
    }

    #[test]
    fn degenerate_denominators_cap_with_flag() {
        // single-frequency response: every span is zero
        let resp = flat(50.0, 2.0, vec![50.0], vec![0.0]);
        for eval in [f1(&resp, 50.0), f3(&resp, 50.0)] {
            assert!(eval.capped);
            assert_eq!(eval.value, OBJECTIVE_CAP);
        }
        // max rin exactly z0 zeroes an f2 factor
        let resp = flat(50.0, 2.0, vec![50.0, 30.0], vec![1.0, 0.5]);
        assert!(f2(&resp, 50.0).capped);
    }

    #[test]
    fn monotone_directions() {
        let base = flat(20.0, 1.0, vec![100.0, 220.0], vec![-40.0, 130.0]);
        // higher floor efficiency raises all three
        let better_eff = flat(25.0, 1.0, vec![100.0, 220.0], vec![-40.0, 130.0]);
        assert!(f1(&better_eff, 50.0).value > f1(&base, 50.0).value);
        assert!(f2(&better_eff, 50.0).value > f2(&base, 50.0).value);
        assert!(f3(&better_eff, 50.0).value > f3(&base, 50.0).value);
        // a higher reactance peak lowers f2 and f3
        let worse_x = flat(20.0, 1.0, vec![100.0, 220.0], vec![-40.0, 170.0]);
        assert!(f2(&worse_x, 50.0).value < f2(&base, 50.0).value);
        assert!(f3(&worse_x, 50.0).value < f3(&base, 50.0).value);
        // min gain enters f1 only
        let better_gain = flat(20.0, 2.0, vec![100.0, 220.0], vec![-40.0, 130.0]);
        assert!(f1(&better_gain, 50.0).value > f1(&base, 50.0).value);
        assert_eq!(f2(&better_gain, 50.0), f2(&base, 50.0));
    }
}
