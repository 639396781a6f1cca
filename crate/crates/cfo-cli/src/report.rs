use std::fs;
use std::path::Path;

use cfo_core::{davg, RunResult, RunTrace, SENTINEL_FITNESS};

use crate::error::CliError;

fn write(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::io(&format!("write {}", path.display()), e))
}

/// Best probe at one step: scan ascending with >=, so the highest probe
/// index wins exact ties.
fn best_probe_at_step(fitness_row: &[f64]) -> usize {
    let mut best = 0;
    let mut best_fitness = SENTINEL_FITNESS;
    for (p, &f) in fitness_row.iter().enumerate() {
        if f >= best_fitness {
            best_fitness = f;
            best = p;
        }
    }
    best
}

/// Summary plus plot-data files for the winning run. Every file is a pure
/// function of the result; probe numbers print 1-based.
pub fn write_report(
    dir: &Path,
    objective_name: &str,
    result: &RunResult,
    diag_length: f64,
    nt: usize,
) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(&format!("create {}", dir.display()), e))?;
    let trace = &result.best_trace;
    let steps = trace.step_count();

    let mut summary = String::new();
    summary.push_str(&format!("objective: {objective_name}\n"));
    summary.push_str(&format!("nd: {}\n", trace.nd));
    summary.push_str(&format!("best_fitness: {}\n", result.best_fitness));
    let coords: Vec<String> = result.best_coords.iter().map(|c| format!("{c}")).collect();
    summary.push_str(&format!("best_coords: {}\n", coords.join(" ")));
    summary.push_str(&format!("best_probe: {}\n", result.best_probe + 1));
    summary.push_str(&format!("best_step: {}\n", result.best_step));
    summary.push_str(&format!(
        "Best Gamma: {} BestNp/Nd: {} Nt: {} Neval: {} LastStep: {}\n",
        result.best_gamma, result.best_ppd, nt, result.neval_total, result.last_step_best_run,
    ));
    write(&dir.join("summary.txt"), &summary)?;

    let mut fitness = String::new();
    for (j, row) in trace.fitness.iter().enumerate() {
        let best = row[best_probe_at_step(row)];
        fitness.push_str(&format!("{j} {best:.6}\n"));
    }
    write(&dir.join("fitness.dat"), &fitness)?;

    let mut davg_out = String::new();
    for j in 0..steps {
        let best = best_probe_at_step(&trace.fitness[j]);
        let value = davg(&trace.positions[j], best, diag_length);
        davg_out.push_str(&format!("{j} {value:.6}\n"));
    }
    write(&dir.join("davg.dat"), &davg_out)?;

    let mut best_probe = String::new();
    for (j, row) in trace.fitness.iter().enumerate() {
        best_probe.push_str(&format!("{j} {}\n", best_probe_at_step(row) + 1));
    }
    write(&dir.join("best_probe.dat"), &best_probe)?;

    if trace.nd == 2 {
        write_ranked_trajectories(dir, trace)?;
        write_probe_trajectories(dir, trace)?;
    }
    if trace.nd == 1 {
        write_probe_coordinates(dir, trace)?;
    }
    Ok(())
}

/// The ten fitness-ordered trajectories: trajectory k follows the per-step
/// k-th best probe. After each pass the visited (probe, step) fitness
/// entries are masked to the global minimum so the next pass picks the
/// runner-up.
fn write_ranked_trajectories(dir: &Path, trace: &RunTrace) -> Result<(), CliError> {
    let steps = trace.step_count();
    let mut masked = trace.fitness.clone();
    let global_min = masked
        .iter()
        .flat_map(|row| row.iter().copied())
        .fold(f64::INFINITY, f64::min);

    for k in 1..=trace.np.min(10) {
        let mut body = String::new();
        for j in 0..steps {
            let p = best_probe_at_step(&masked[j]);
            body.push_str(&format!(
                "{:.6} {:.6}\n",
                trace.positions[j][p][0], trace.positions[j][p][1]
            ));
            masked[j][p] = global_min;
        }
        write(&dir.join(format!("traj_best_{k:02}.dat")), &body)?;
    }
    Ok(())
}

fn write_probe_trajectories(dir: &Path, trace: &RunTrace) -> Result<(), CliError> {
    for p in 0..trace.np.min(16) {
        let mut body = String::new();
        for j in 0..trace.step_count() {
            body.push_str(&format!(
                "{:.6} {:.6}\n",
                trace.positions[j][p][0], trace.positions[j][p][1]
            ));
        }
        write(&dir.join(format!("traj_probe_{:02}.dat", p + 1)), &body)?;
    }
    Ok(())
}

/// 1-D runs: a table of every probe's coordinate per step, one column per
/// probe behind a header line.
fn write_probe_coordinates(dir: &Path, trace: &RunTrace) -> Result<(), CliError> {
    let mut body = String::from("# step");
    for p in 1..=trace.np {
        body.push_str(&format!(" p{p}"));
    }
    body.push('\n');
    for j in 0..trace.step_count() {
        body.push_str(&format!("{j}"));
        for p in 0..trace.np {
            body.push_str(&format!(" {:.6}", trace.positions[j][p][0]));
        }
        body.push('\n');
    }
    write(&dir.join("probe_coordinates.dat"), &body)
}
