use crate::error::SettingsError;
use crate::frep::FrepSchedule;

/// All hardwired run parameters. Defaults mirror the parameter-free setup:
/// alpha = beta = 1, four gamma points on `[0, 1]`, an even probes-per-dimension
/// sweep, the 0.5/+0.1/wrap-0.05 repositioning schedule, fitness saturation
/// over a 25-step window checked from step 35 on, and space shrinking every
/// 10th step starting at step 20.
#[derive(Debug, Clone, PartialEq)]
pub struct CfoSettings {
    /// Maximum time steps per inner run (early termination usually fires first).
    pub nt: usize,
    pub alpha: f64,
    pub beta: f64,
    pub frep_init: f64,
    pub frep_delta: f64,
    pub frep_min: f64,
    /// Number of gamma points; gamma_k = k/(count-1) for k in 0..count.
    pub gamma_count: usize,
    pub ppd_min: usize,
    pub ppd_step: usize,
    pub ppd_max: usize,
    pub saturation_window: usize,
    pub saturation_tol: f64,
    pub shrink_start_step: usize,
    pub shrink_interval: usize,
    /// Off by default: the published runs repositioned errant probes without
    /// directional information.
    pub directional_retrieval: bool,
}

impl CfoSettings {
    /// General-purpose defaults for an `nd`-dimensional problem. Nt = 1000;
    /// the probes-per-dimension ceiling drops with dimensionality to bound
    /// runtime.
    pub fn general(nd: usize) -> Self {
        Self {
            nt: 1000,
            alpha: 1.0,
            beta: 1.0,
            frep_init: 0.5,
            frep_delta: 0.1,
            frep_min: 0.05,
            gamma_count: 4,
            ppd_min: 2,
            ppd_step: 2,
            ppd_max: Self::max_ppd_for_dimension(nd),
            saturation_window: 25,
            saturation_tol: 1e-6,
            shrink_start_step: 20,
            shrink_interval: 10,
            directional_retrieval: false,
        }
    }

    /// Loaded-monopole defaults: shorter runs (Nt = 200) and at most 6 probes
    /// per dimension, since every evaluation invokes the field solver.
    pub fn monopole() -> Self {
        Self {
            nt: 200,
            ppd_max: 6,
            ..Self::general(2)
        }
    }

    /// Probes-per-dimension ceiling by dimensionality band.
    pub fn max_ppd_for_dimension(nd: usize) -> usize {
        match nd {
            1..=6 => 14,
            7..=10 => 12,
            11..=15 => 10,
            16..=20 => 8,
            21..=30 => 6,
            _ => 4,
        }
    }

    pub fn validate(&self) -> Result<(), SettingsError> {
        if self.ppd_min < 2 {
            return Err(SettingsError::ProbesPerDimensionTooSmall(self.ppd_min));
        }
        for &v in &[self.ppd_min, self.ppd_step, self.ppd_max] {
            if v % 2 != 0 {
                return Err(SettingsError::OddProbesPerDimension(v));
            }
        }
        if self.gamma_count < 2 {
            return Err(SettingsError::BadGammaCount(self.gamma_count));
        }
        if self.saturation_window == 0 {
            return Err(SettingsError::BadSaturationWindow);
        }
        Ok(())
    }

    /// Gamma values k/(count-1), k = 0..count. For the default count of 4
    /// this is exactly {0, 1/3, 2/3, 1}.
    pub fn gammas(&self) -> Vec<f64> {
        (0..self.gamma_count)
            .map(|k| k as f64 / (self.gamma_count - 1) as f64)
            .collect()
    }

    /// The even probes-per-dimension sweep {ppd_min, +step, ..., <= ppd_max}.
    pub fn ppd_schedule(&self) -> Vec<usize> {
        (self.ppd_min..=self.ppd_max)
            .step_by(self.ppd_step)
            .collect()
    }

    pub fn frep_schedule(&self) -> FrepSchedule {
        FrepSchedule::new(self.frep_init, self.frep_delta, self.frep_min)
    }
}
