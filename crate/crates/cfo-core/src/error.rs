use std::fmt;

/// Objective evaluation failure. The message should carry everything needed
/// to reproduce the failing call (e.g. a deck digest for simulator-backed
/// objectives).
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveError {
    pub message: String,
}

impl ObjectiveError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

impl fmt::Display for ObjectiveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ObjectiveError {}

/// Invalid decision-space construction.
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceError {
    EmptyDimensions,
    InvertedBounds { dim: usize, lo: f64, hi: f64 },
    NonFiniteBounds { dim: usize },
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::EmptyDimensions => write!(f, "decision space needs at least 1 dimension"),
            SpaceError::InvertedBounds { dim, lo, hi } => {
                write!(
                    f,
                    "dimension {dim}: lower bound {lo} must be < upper bound {hi}"
                )
            }
            SpaceError::NonFiniteBounds { dim } => {
                write!(f, "dimension {dim}: bounds must be finite")
            }
        }
    }
}

impl std::error::Error for SpaceError {}

/// Invalid run settings.
#[derive(Debug, Clone, PartialEq)]
pub enum SettingsError {
    OddProbesPerDimension(usize),
    ProbesPerDimensionTooSmall(usize),
    BadGammaCount(usize),
    BadSaturationWindow,
}

impl fmt::Display for SettingsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SettingsError::OddProbesPerDimension(v) => {
                write!(f, "probes-per-dimension values must be even, got {v}")
            }
            SettingsError::ProbesPerDimensionTooSmall(v) => {
                write!(f, "probes-per-dimension must be >= 2, got {v}")
            }
            SettingsError::BadGammaCount(v) => {
                write!(f, "gamma count must be >= 2, got {v}")
            }
            SettingsError::BadSaturationWindow => {
                write!(f, "saturation window must be >= 1")
            }
        }
    }
}

impl std::error::Error for SettingsError {}

/// Engine-level failure.
#[derive(Debug)]
pub enum CfoError {
    Settings(SettingsError),
    Space(SpaceError),
    /// Objective evaluation failed; names the inner run and probe so the
    /// failing call can be replayed.
    Objective {
        ppd: usize,
        gamma: f64,
        step: usize,
        probe: usize,
        source: ObjectiveError,
    },
}

impl fmt::Display for CfoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfoError::Settings(e) => write!(f, "invalid settings: {e}"),
            CfoError::Space(e) => write!(f, "invalid decision space: {e}"),
            CfoError::Objective {
                ppd,
                gamma,
                step,
                probe,
                source,
            } => write!(
                f,
                "objective failed at ppd={ppd} gamma={gamma} step={step} probe={probe}: {source}"
            ),
        }
    }
}

impl std::error::Error for CfoError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CfoError::Settings(e) => Some(e),
            CfoError::Space(e) => Some(e),
            CfoError::Objective { source, .. } => Some(source),
        }
    }
}

impl From<SettingsError> for CfoError {
    fn from(e: SettingsError) -> Self {
        CfoError::Settings(e)
    }
}

impl From<SpaceError> for CfoError {
    fn from(e: SpaceError) -> Self {
        CfoError::Space(e)
    }
}
