/// Full per-step history of one inner run. Step-major storage:
/// `positions[step][probe][dim]`, `fitness[step][probe]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    pub np: usize,
    pub nd: usize,
    pub positions: Vec<Vec<Vec<f64>>>,
    pub accelerations: Vec<Vec<Vec<f64>>>,
    pub fitness: Vec<Vec<f64>>,
    /// Repositioning factor in hand when the run ended.
    pub frep: f64,
    /// Factor used by the retrieval phase of steps 1..=last_step, in order.
    pub freps_used: Vec<f64>,
    /// Objective evaluations performed by this run.
    pub neval: u64,
    /// Step at which the run ended (nt, or earlier on saturation).
    pub last_step: usize,
}

impl RunTrace {
    pub fn position(&self, probe: usize, dim: usize, step: usize) -> f64 {
        self.positions[step][probe][dim]
    }

    pub fn acceleration(&self, probe: usize, dim: usize, step: usize) -> f64 {
        self.accelerations[step][probe][dim]
    }

    pub fn fitness_at(&self, probe: usize, step: usize) -> f64 {
        self.fitness[step][probe]
    }

    /// Steps recorded, including step 0.
    pub fn step_count(&self) -> usize {
        self.fitness.len()
    }
}

/// Winner of one inner run: the prefix-maximum fitness and where it occurred.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerBest {
    pub fitness: f64,
    /// 0-based probe index.
    pub probe: usize,
    pub step: usize,
}

/// Outcome of the full (probes-per-dimension x gamma) sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_fitness: f64,
    pub best_coords: Vec<f64>,
    /// 0-based probe index within the winning run.
    pub best_probe: usize,
    pub best_step: usize,
    pub best_gamma: f64,
    pub best_ppd: usize,
    /// Evaluations summed over every inner run.
    pub neval_total: u64,
    pub last_step_best_run: usize,
    /// Copy of the winning inner run's full history.
    pub best_trace: RunTrace,
}
