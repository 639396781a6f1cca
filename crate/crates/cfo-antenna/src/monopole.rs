use std::fmt;

/// Loading-resistor bounds of the single-load design space, in ohms.
pub const R_LOAD_MIN_OHMS: f64 = 0.0;
pub const R_LOAD_MAX_OHMS: f64 = 1000.0;
/// Resistor-height bounds of the single-load design space, in meters.
pub const H_LOAD_MIN_M: f64 = 0.05;
pub const H_LOAD_MAX_M: f64 = 10.65;

/// Wire geometry of a vertical monopole over perfect ground.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonopoleSpec {
    pub height_m: f64,
    pub radius_m: f64,
    pub n_segments: usize,
    pub segment_length_m: f64,
}

impl MonopoleSpec {
    /// 10.7 m, 5 mm radius, 107 segments of 0.1 m: the single-resistor case.
    pub fn single_load() -> Self {
        Self {
            height_m: 10.7,
            radius_m: 0.005,
            n_segments: 107,
            segment_length_m: 0.1,
        }
    }

    /// 10.668 m, 0.0254 m radius, 14 segments: one resistor per segment.
    pub fn fourteen_segment() -> Self {
        Self {
            height_m: 10.668,
            radius_m: 0.0254,
            n_segments: 14,
            segment_length_m: 0.762,
        }
    }
}

/// Single loading resistor: its value and its height above the feed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleLoadDesign {
    pub r_ohms: f64,
    pub h_m: f64,
}

/// One resistor per segment of the 14-segment monopole.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiLoadDesign {
    pub loads_ohms: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DesignError {
    HeightOutOfRange(f64),
    ResistanceOutOfRange(f64),
    WrongLoadCount { expected: usize, got: usize },
    NegativeLoad(f64),
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::HeightOutOfRange(h) => write!(
                f,
                "load height {h} m outside [{H_LOAD_MIN_M}, {H_LOAD_MAX_M}]"
            ),
            DesignError::ResistanceOutOfRange(r) => write!(
                f,
                "load resistance {r} ohms outside [{R_LOAD_MIN_OHMS}, {R_LOAD_MAX_OHMS}]"
            ),
            DesignError::WrongLoadCount { expected, got } => {
                write!(f, "expected {expected} segment loads, got {got}")
            }
            DesignError::NegativeLoad(r) => write!(f, "segment load {r} ohms is negative"),
        }
    }
}

impl std::error::Error for DesignError {}

/// Map a load height to its 1-based wire segment: n = floor(0.5 + h/delta),
/// clamped to [1, n_segments]. Heights outside the design-space interval are
/// rejected before clamping.
pub fn height_to_segment(h_m: f64, spec: &MonopoleSpec) -> Result<usize, DesignError> {
    if !(H_LOAD_MIN_M..=H_LOAD_MAX_M).contains(&h_m) {
        return Err(DesignError::HeightOutOfRange(h_m));
    }
    let n = (0.5 + h_m / spec.segment_length_m).floor() as isize;
    Ok(n.clamp(1, spec.n_segments as isize) as usize)
}
