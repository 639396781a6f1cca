use crate::diagnostics::has_fitness_saturated;
use crate::dynamics::{
    compute_accelerations, retrieve_errant_probes, retrieve_errant_probes_directional,
    update_positions,
};
use crate::error::{CfoError, ObjectiveError};
use crate::ipd::initial_probe_distribution;
use crate::objective::{Objective, SENTINEL_FITNESS};
use crate::settings::CfoSettings;
use crate::space::DecisionSpace;
use crate::trace::{InnerBest, RunResult, RunTrace};

fn evaluate_all<O: Objective + ?Sized>(
    objective: &O,
    positions: &[Vec<f64>],
    ppd: usize,
    gamma: f64,
    step: usize,
) -> Result<Vec<f64>, CfoError> {
    positions
        .iter()
        .enumerate()
        .map(|(probe, x)| {
            objective
                .evaluate(x)
                .map_err(|source: ObjectiveError| CfoError::Objective {
                    ppd,
                    gamma,
                    step,
                    probe,
                    source,
                })
        })
        .collect()
}

/// One inner run at fixed probes-per-dimension and gamma.
///
/// Step 0 places the initial distribution, evaluates it, and zeroes the
/// accelerations. Each later step then, in order: position update, clamping
/// retrieval, directional retrieval when enabled, fitness evaluation,
/// acceleration update, best tracking (>= so the later step wins ties),
/// repositioning-factor increment, the conditional space shrink with its own
/// re-retrieval, and the saturation test, which ends the run at the current
/// step.
///
/// The space is mutated by shrinking; the caller resets it between runs.
pub fn run_inner<O: Objective + ?Sized>(
    objective: &O,
    space: &mut DecisionSpace,
    ppd: usize,
    gamma: f64,
    settings: &CfoSettings,
) -> Result<(RunTrace, InnerBest), CfoError> {
    let nd = space.nd();
    let first = initial_probe_distribution(space, ppd, gamma)?;
    let np = first.len();

    let mut positions = Vec::with_capacity(settings.nt + 1);
    let mut accelerations = Vec::with_capacity(settings.nt + 1);
    let mut fitness = Vec::with_capacity(settings.nt + 1);
    let mut freps_used = Vec::new();

    fitness.push(evaluate_all(objective, &first, ppd, gamma, 0)?);
    accelerations.push(vec![vec![0.0; nd]; np]);
    positions.push(first);
    let mut neval = np as u64;

    let mut best = InnerBest {
        fitness: SENTINEL_FITNESS,
        probe: 0,
        step: 0,
    };
    for (probe, &f) in fitness[0].iter().enumerate() {
        if f >= best.fitness {
            best = InnerBest {
                fitness: f,
                probe,
                step: 0,
            };
        }
    }

    let mut frep = settings.frep_schedule();
    let mut last_step = settings.nt;

    for step in 1..=settings.nt {
        let mut current = update_positions(&positions[step - 1], &accelerations[step - 1]);
        retrieve_errant_probes(&mut current, &positions[step - 1], space, frep.value());
        if settings.directional_retrieval {
            retrieve_errant_probes_directional(
                &mut current,
                &positions[step - 1],
                &accelerations[step - 1],
                space,
                frep.value(),
            );
        }
        freps_used.push(frep.value());

        let current_fitness = evaluate_all(objective, &current, ppd, gamma, step)?;
        neval += np as u64;
        let current_accel =
            compute_accelerations(&current, &current_fitness, settings.alpha, settings.beta);

        for (probe, &f) in current_fitness.iter().enumerate() {
            if f >= best.fitness {
                best = InnerBest {
                    fitness: f,
                    probe,
                    step,
                };
            }
        }

        positions.push(current);
        accelerations.push(current_accel);
        fitness.push(current_fitness);

        frep.advance();

        if step >= settings.shrink_start_step && step % settings.shrink_interval == 0 {
            let best_coords = positions[best.step][best.probe].clone();
            space.shrink_around(&best_coords);
            let (prev, current) = split_prev_current(&mut positions, step);
            retrieve_errant_probes(current, prev, space, frep.value());
            if settings.directional_retrieval {
                retrieve_errant_probes_directional(
                    current,
                    prev,
                    &accelerations[step - 1],
                    space,
                    frep.value(),
                );
            }
        }

        if has_fitness_saturated(
            &fitness,
            step,
            settings.saturation_window,
            settings.saturation_tol,
        ) {
            last_step = step;
            break;
        }
    }

    let trace = RunTrace {
        np,
        nd,
        positions,
        accelerations,
        fitness,
        frep: frep.value(),
        freps_used,
        neval,
        last_step: last_step.min(settings.nt),
    };
    Ok((trace, best))
}

fn split_prev_current(
    positions: &mut [Vec<Vec<f64>>],
    step: usize,
) -> (&[Vec<f64>], &mut [Vec<f64>]) {
    let (head, tail) = positions.split_at_mut(step);
    (&head[step - 1], &mut tail[0])
}

/// The full parameter-free sweep: every probes-per-dimension value crossed
/// with every gamma, bounds reset between runs, global best updated on >= so
/// later runs win exact ties. Returns the winner with its complete trace and
/// the evaluation total over all runs.
pub fn run_cfo<O: Objective + ?Sized>(
    objective: &O,
    space: &mut DecisionSpace,
    settings: &CfoSettings,
) -> Result<RunResult, CfoError> {
    settings.validate()?;
    let mut result: Option<RunResult> = None;
    let mut neval_total = 0u64;

    for ppd in settings.ppd_schedule() {
        for gamma in settings.gammas() {
            let run = run_inner(objective, space, ppd, gamma, settings);
            space.reset();
            let (trace, best) = run?;
            neval_total += trace.neval;

            let take = match &result {
                None => true,
                Some(r) => best.fitness >= r.best_fitness,
            };
            if take {
                let best_coords = trace.positions[best.step][best.probe].clone();
                result = Some(RunResult {
                    best_fitness: best.fitness,
                    best_coords,
                    best_probe: best.probe,
                    best_step: best.step,
                    best_gamma: gamma,
                    best_ppd: ppd,
                    neval_total: 0,
                    last_step_best_run: trace.last_step,
                    best_trace: trace,
                });
            }
        }
    }

    let mut result = result.expect("schedule yields at least one run");
    result.neval_total = neval_total;
    Ok(result)
}
