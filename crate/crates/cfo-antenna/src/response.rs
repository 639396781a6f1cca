use crate::vswr::vswr;

/// Frequency-swept performance of one monopole design: radiation efficiency
/// (percent), maximum total power gain over the polar angle (dBi), input
/// impedance, and the standing-wave ratio against the z0 the response was
/// built with. All arrays share one frequency axis.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyResponse {
    pub freqs_mhz: Vec<f64>,
    pub efficiency_pct: Vec<f64>,
    pub gmax_dbi: Vec<f64>,
    pub rin_ohms: Vec<f64>,
    pub xin_ohms: Vec<f64>,
    pub vswr: Vec<f64>,
}

impl FrequencyResponse {
    /// Assemble from solver data, computing the SWR column for `z0`.
    pub fn from_parts(
        freqs_mhz: Vec<f64>,
        efficiency_pct: Vec<f64>,
        gmax_dbi: Vec<f64>,
        rin_ohms: Vec<f64>,
        xin_ohms: Vec<f64>,
        z0: f64,
    ) -> Self {
        assert_eq!(freqs_mhz.len(), efficiency_pct.len());
        assert_eq!(freqs_mhz.len(), gmax_dbi.len());
        assert_eq!(freqs_mhz.len(), rin_ohms.len());
        assert_eq!(freqs_mhz.len(), xin_ohms.len());
        let vswr = rin_ohms
            .iter()
            .zip(&xin_ohms)
            .map(|(&r, &x)| vswr(r, x, z0))
            .collect();
        Self {
            freqs_mhz,
            efficiency_pct,
            gmax_dbi,
            rin_ohms,
            xin_ohms,
            vswr,
        }
    }

    pub fn len(&self) -> usize {
        self.freqs_mhz.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs_mhz.is_empty()
    }

    /// SWR column recomputed for another feed impedance; the impedance data
    /// itself does not depend on z0.
    pub fn vswr_for(&self, z0: f64) -> Vec<f64> {
        self.rin_ohms
            .iter()
            .zip(&self.xin_ohms)
            .map(|(&r, &x)| vswr(r, x, z0))
            .collect()
    }
}
