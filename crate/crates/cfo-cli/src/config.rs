use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use cfo_antenna::{ExternalNecBackend, MonopoleFitness, MonopoleObjective, StubBackend};
use cfo_bench::{BenchmarkId, BenchmarkObjective, Dimension};
use cfo_core::{CfoSettings, DecisionSpace, Objective};

use crate::error::CliError;

/// What a run optimizes: a catalog benchmark or one of the monopole fitness
/// formulas (solver-backed).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObjectiveSelector {
    Benchmark(BenchmarkId),
    Monopole(MonopoleFitness),
}

impl ObjectiveSelector {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "LD_MONO_F1" => Some(Self::Monopole(MonopoleFitness::F1)),
            "LD_MONO_F2" => Some(Self::Monopole(MonopoleFitness::F2)),
            "LD_MONO_F3" => Some(Self::Monopole(MonopoleFitness::F3)),
            _ => BenchmarkId::parse(s).map(Self::Benchmark),
        }
    }

    pub fn as_str(&self) -> String {
        match self {
            Self::Benchmark(id) => id.as_str().to_string(),
            Self::Monopole(f) => format!("LD_MONO_{}", f.as_str().to_ascii_uppercase()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BackendSelector {
    None,
    Stub(PathBuf),
    External(PathBuf),
}

/// Fully resolved run configuration: defaults, then the config file, then
/// command-line overrides, in that order.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub objective: Option<ObjectiveSelector>,
    pub nd: Option<usize>,
    pub bounds: Option<Vec<(f64, f64)>>,
    pub z0: f64,
    pub seed: Option<u64>,
    pub backend: BackendSelector,
    pub backend_workdir: Option<PathBuf>,
    pub backend_timeout_secs: u64,
    pub out_dir: PathBuf,
    pub n1: usize,
    pub n2: usize,
    // engine settings overrides; None = per-objective default
    pub nt: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma_count: Option<usize>,
    pub ppd_min: Option<usize>,
    pub ppd_step: Option<usize>,
    pub ppd_max: Option<usize>,
    pub saturation_window: Option<usize>,
    pub saturation_tol: Option<f64>,
    pub shrink_start_step: Option<usize>,
    pub shrink_interval: Option<usize>,
    pub directional_retrieval: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            objective: None,
            nd: None,
            bounds: None,
            z0: 50.0,
            seed: None,
            backend: BackendSelector::None,
            backend_workdir: None,
            backend_timeout_secs: 60,
            out_dir: PathBuf::from("cfo-out"),
            n1: 200,
            n2: 200,
            nt: None,
            alpha: None,
            beta: None,
            gamma_count: None,
            ppd_min: None,
            ppd_step: None,
            ppd_max: None,
            saturation_window: None,
            saturation_tol: None,
            shrink_start_step: None,
            shrink_interval: None,
            directional_retrieval: false,
        }
    }
}

fn bad(key: &str, value: &str) -> CliError {
    CliError::Config(format!("cannot parse {key} = {value:?}"))
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut config = Self::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!(
                    "{}:{}: expected key = value",
                    path.display(),
                    idx + 1
                ))
            })?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    /// Apply one key=value pair; unknown keys are rejected.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "objective" => {
                self.objective = Some(
                    ObjectiveSelector::parse(value)
                        .ok_or_else(|| CliError::Config(format!("unknown objective {value:?}")))?,
                );
            }
            "nd" => self.nd = Some(value.parse().map_err(|_| bad(key, value))?),
            "bounds" => self.bounds = Some(parse_bounds(value)?),
            "z0" => self.z0 = value.parse().map_err(|_| bad(key, value))?,
            "seed" => self.seed = Some(value.parse().map_err(|_| bad(key, value))?),
            "backend" => {
                self.backend = if let Some(path) = value.strip_prefix("stub:") {
                    BackendSelector::Stub(PathBuf::from(path))
                } else if let Some(path) = value.strip_prefix("external:") {
                    BackendSelector::External(PathBuf::from(path))
                } else if value == "none" {
                    BackendSelector::None
                } else {
                    return Err(CliError::Config(format!(
                        "backend must be none, stub:<path> or external:<path>, got {value:?}"
                    )));
                };
            }
            "backend_workdir" => self.backend_workdir = Some(PathBuf::from(value)),
            "backend_timeout_secs" => {
                self.backend_timeout_secs = value.parse().map_err(|_| bad(key, value))?
            }
            "out_dir" => self.out_dir = PathBuf::from(value),
            "n1" => self.n1 = value.parse().map_err(|_| bad(key, value))?,
            "n2" => self.n2 = value.parse().map_err(|_| bad(key, value))?,
            "nt" => self.nt = Some(value.parse().map_err(|_| bad(key, value))?),
            "alpha" => self.alpha = Some(value.parse().map_err(|_| bad(key, value))?),
            "beta" => self.beta = Some(value.parse().map_err(|_| bad(key, value))?),
            "gamma_count" => self.gamma_count = Some(value.parse().map_err(|_| bad(key, value))?),
            "ppd_min" => self.ppd_min = Some(value.parse().map_err(|_| bad(key, value))?),
            "ppd_step" => self.ppd_step = Some(value.parse().map_err(|_| bad(key, value))?),
            "ppd_max" => self.ppd_max = Some(value.parse().map_err(|_| bad(key, value))?),
            "saturation_window" => {
                self.saturation_window = Some(value.parse().map_err(|_| bad(key, value))?)
            }
            "saturation_tol" => {
                self.saturation_tol = Some(value.parse().map_err(|_| bad(key, value))?)
            }
            "shrink_start_step" => {
                self.shrink_start_step = Some(value.parse().map_err(|_| bad(key, value))?)
            }
            "shrink_interval" => {
                self.shrink_interval = Some(value.parse().map_err(|_| bad(key, value))?)
            }
            "directional_retrieval" => {
                self.directional_retrieval = match value {
                    "true" | "on" | "yes" => true,
                    "false" | "off" | "no" => false,
                    _ => return Err(bad(key, value)),
                };
            }
            _ => return Err(CliError::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn apply_overrides(&mut self, overrides: &[String]) -> Result<(), CliError> {
        for pair in overrides {
            let (key, value) = pair.split_once('=').ok_or_else(|| {
                CliError::Config(format!("override {pair:?}: expected key=value"))
            })?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    /// Resolve everything needed to run: the objective, its search box, and
    /// the engine settings with per-objective defaults applied.
    pub fn resolve(&self) -> Result<ResolvedRun, CliError> {
        let selector = self
            .objective
            .ok_or_else(|| CliError::Config("objective is required".into()))?;

        let (objective, nd, default_bounds, mut settings): (
            Box<dyn Objective>,
            usize,
            Vec<(f64, f64)>,
            CfoSettings,
        ) = match selector {
            ObjectiveSelector::Benchmark(id) => {
                let entry = cfo_bench::entry(id);
                let nd = match (entry.dimension, self.nd) {
                    (Dimension::Fixed(n), Some(requested)) if requested != n => {
                        return Err(CliError::Config(format!(
                            "{} is fixed at {n} dimensions, nd = {requested} is not allowed",
                            id.as_str()
                        )))
                    }
                    (Dimension::Fixed(n), _) => n,
                    (Dimension::AnyAtLeast(min), Some(requested)) if requested < min => {
                        return Err(CliError::Config(format!(
                            "{} needs at least {min} dimensions",
                            id.as_str()
                        )))
                    }
                    (Dimension::AnyAtLeast(_), Some(requested)) => requested,
                    (Dimension::AnyAtLeast(_), None) => entry.nd_default,
                };
                let objective: Box<dyn Objective> = match self.seed {
                    Some(seed) => Box::new(BenchmarkObjective::with_seed(id, seed)),
                    None => Box::new(BenchmarkObjective::new(id)),
                };
                let mut settings = CfoSettings::general(nd);
                if id == BenchmarkId::F7 {
                    settings.nt = 100;
                }
                (objective, nd, cfo_bench::default_bounds(id, nd), settings)
            }
            ObjectiveSelector::Monopole(fitness) => {
                let backend = self.build_backend()?.ok_or_else(|| {
                    CliError::Config(
                        "monopole objectives need backend = stub:<path> or external:<path>".into(),
                    )
                })?;
                let objective = MonopoleObjective::new(fitness, self.z0, backend);
                let bounds = vec![
                    (cfo_antenna::R_LOAD_MIN_OHMS, cfo_antenna::R_LOAD_MAX_OHMS),
                    (cfo_antenna::H_LOAD_MIN_M, cfo_antenna::H_LOAD_MAX_M),
                ];
                (Box::new(objective), 2, bounds, CfoSettings::monopole())
            }
        };

        if let Some(v) = self.nt {
            settings.nt = v;
        }
        if let Some(v) = self.alpha {
            settings.alpha = v;
        }
        if let Some(v) = self.beta {
            settings.beta = v;
        }
        if let Some(v) = self.gamma_count {
            settings.gamma_count = v;
        }
        if let Some(v) = self.ppd_min {
            settings.ppd_min = v;
        }
        if let Some(v) = self.ppd_step {
            settings.ppd_step = v;
        }
        if let Some(v) = self.ppd_max {
            settings.ppd_max = v;
        }
        if let Some(v) = self.saturation_window {
            settings.saturation_window = v;
        }
        if let Some(v) = self.saturation_tol {
            settings.saturation_tol = v;
        }
        if let Some(v) = self.shrink_start_step {
            settings.shrink_start_step = v;
        }
        if let Some(v) = self.shrink_interval {
            settings.shrink_interval = v;
        }
        settings.directional_retrieval = self.directional_retrieval;
        settings
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;

        let bounds = match &self.bounds {
            Some(b) => {
                if b.len() != nd {
                    return Err(CliError::Config(format!(
                        "bounds specify {} dimensions but the objective has {nd}",
                        b.len()
                    )));
                }
                b.clone()
            }
            None => default_bounds,
        };
        let space = DecisionSpace::new(&bounds).map_err(|e| CliError::Config(e.to_string()))?;

        Ok(ResolvedRun {
            selector,
            objective,
            nd,
            space,
            settings,
        })
    }

    pub fn build_backend(
        &self,
    ) -> Result<Option<Arc<dyn cfo_antenna::SimulatorBackend>>, CliError> {
        match &self.backend {
            BackendSelector::None => Ok(None),
            BackendSelector::Stub(path) => {
                let stub = StubBackend::from_path(path)?;
                Ok(Some(Arc::new(stub)))
            }
            BackendSelector::External(exe) => {
                let workdir = self
                    .backend_workdir
                    .clone()
                    .unwrap_or_else(|| std::env::temp_dir().join("cfo-nec-work"));
                let mut backend = ExternalNecBackend::new(exe.clone(), workdir);
                backend.timeout = std::time::Duration::from_secs(self.backend_timeout_secs);
                Ok(Some(Arc::new(backend)))
            }
        }
    }

    /// The effective-config echo: every resolved setting in fixed order.
    /// The output directory is deliberately omitted so replayed trees stay
    /// byte-comparable.
    pub fn echo(&self, resolved: &ResolvedRun) -> String {
        let mut out = String::new();
        let s = &resolved.settings;
        out.push_str(&format!("objective = {}\n", resolved.selector.as_str()));
        out.push_str(&format!("nd = {}\n", resolved.nd));
        let bounds: Vec<String> = resolved
            .space
            .bounds()
            .iter()
            .map(|(lo, hi)| format!("{lo}:{hi}"))
            .collect();
        out.push_str(&format!("bounds = {}\n", bounds.join(",")));
        out.push_str(&format!("z0 = {}\n", self.z0));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed = {seed}\n"));
        }
        let backend = match &self.backend {
            BackendSelector::None => "none".to_string(),
            BackendSelector::Stub(p) => format!("stub:{}", p.display()),
            BackendSelector::External(p) => format!("external:{}", p.display()),
        };
        out.push_str(&format!("backend = {backend}\n"));
        if let BackendSelector::External(_) = self.backend {
            out.push_str(&format!(
                "backend_timeout_secs = {}\n",
                self.backend_timeout_secs
            ));
        }
        out.push_str(&format!("nt = {}\n", s.nt));
        out.push_str(&format!("alpha = {}\n", s.alpha));
        out.push_str(&format!("beta = {}\n", s.beta));
        out.push_str(&format!("gamma_count = {}\n", s.gamma_count));
        out.push_str(&format!("ppd_min = {}\n", s.ppd_min));
        out.push_str(&format!("ppd_step = {}\n", s.ppd_step));
        out.push_str(&format!("ppd_max = {}\n", s.ppd_max));
        out.push_str(&format!("saturation_window = {}\n", s.saturation_window));
        out.push_str(&format!("saturation_tol = {}\n", s.saturation_tol));
        out.push_str(&format!("shrink_start_step = {}\n", s.shrink_start_step));
        out.push_str(&format!("shrink_interval = {}\n", s.shrink_interval));
        out.push_str(&format!(
            "directional_retrieval = {}\n",
            s.directional_retrieval
        ));
        out
    }
}

fn parse_bounds(value: &str) -> Result<Vec<(f64, f64)>, CliError> {
    value
        .split(',')
        .map(|pair| {
            let (lo, hi) = pair
                .split_once(':')
                .ok_or_else(|| CliError::Config(format!("bounds pair {pair:?}: expected lo:hi")))?;
            let lo: f64 = lo.trim().parse().map_err(|_| bad("bounds", pair))?;
            let hi: f64 = hi.trim().parse().map_err(|_| bad("bounds", pair))?;
            Ok((lo, hi))
        })
        .collect()
}

/// Everything a run needs, resolved from the config.
pub struct ResolvedRun {
    pub selector: ObjectiveSelector,
    pub objective: Box<dyn Objective>,
    pub nd: usize,
    pub space: DecisionSpace,
    pub settings: CfoSettings,
}
