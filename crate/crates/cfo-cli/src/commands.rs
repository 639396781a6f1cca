use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use cfo_antenna::{
    generate_multi_load_deck, generate_single_load_deck, grid_scan, parse_nec_output, z0_sweep,
    FrequencySweep, MonopoleSpec, MultiLoadDesign, SingleLoadDesign,
};
use cfo_bench::{catalog, known_optimum, Dimension};
use cfo_core::run_cfo;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::write_report;

fn write(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content).map_err(|e| CliError::io(&format!("write {}", path.display()), e))
}

/// Run the full sweep and drop the report bundle into `out_dir`.
pub fn cmd_optimize(config: &RunConfig, out_dir: &Path) -> Result<(), CliError> {
    let mut run = config.resolve()?;
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::io(&format!("create {}", out_dir.display()), e))?;
    write(&out_dir.join("effective_config.txt"), &config.echo(&run))?;

    let result = run_cfo(run.objective.as_ref(), &mut run.space, &run.settings)?;
    write_report(
        out_dir,
        &run.selector.as_str(),
        &result,
        run.space.diag_length(),
        run.settings.nt,
    )?;
    println!(
        "{}: best {} at ({}) [probe {}, step {}, gamma {}, ppd {}, {} evaluations]",
        run.selector.as_str(),
        result.best_fitness,
        result
            .best_coords
            .iter()
            .map(|c| format!("{c}"))
            .collect::<Vec<_>>()
            .join(", "),
        result.best_probe + 1,
        result.best_step,
        result.best_gamma,
        result.best_ppd,
        result.neval_total,
    );
    Ok(())
}

/// Evaluate the objective over the n1 x n2 lattice; write the grid and the
/// lattice argmax.
pub fn cmd_landscape(config: &RunConfig, out_dir: &Path) -> Result<(), CliError> {
    let run = config.resolve()?;
    if run.nd != 2 {
        return Err(CliError::Config(format!(
            "landscape needs a 2-D objective, {} has nd = {}",
            run.selector.as_str(),
            run.nd
        )));
    }
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::io(&format!("create {}", out_dir.display()), e))?;
    write(&out_dir.join("effective_config.txt"), &config.echo(&run))?;

    let scan = grid_scan(run.objective.as_ref(), &run.space, config.n1, config.n2)
        .map_err(|e| CliError::Objective(e.to_string()))?;
    let mut grid = String::new();
    for (x1, x2, v) in &scan.points {
        grid.push_str(&format!("{x1:.6} {x2:.6} {v:.6}\n"));
    }
    write(&out_dir.join("landscape.dat"), &grid)?;
    let argmax = format!("{} {} {}\n", scan.best.0, scan.best.1, scan.best.2);
    write(&out_dir.join("argmax.txt"), &argmax)?;
    println!(
        "{}: lattice argmax {} at ({}, {}) over {}x{} points",
        run.selector.as_str(),
        scan.best.2,
        scan.best.0,
        scan.best.1,
        config.n1,
        config.n2
    );
    Ok(())
}

/// Emit a solver input deck for a single- or multi-load design.
pub fn cmd_deck(
    r: Option<f64>,
    h: Option<f64>,
    loads: Option<&str>,
    z0: f64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let sweep = FrequencySweep::default();
    let deck = match (r, h, loads) {
        (Some(r), Some(h), None) => generate_single_load_deck(
            &SingleLoadDesign { r_ohms: r, h_m: h },
            &MonopoleSpec::single_load(),
            &sweep,
            z0,
        )
        .map_err(|e| CliError::Config(e.to_string()))?,
        (None, None, Some(list)) => {
            let loads: Result<Vec<f64>, _> =
                list.split(',').map(|t| t.trim().parse::<f64>()).collect();
            let loads = loads.map_err(|e| CliError::Config(format!("bad load list: {e}")))?;
            generate_multi_load_deck(
                &MultiLoadDesign { loads_ohms: loads },
                &MonopoleSpec::fourteen_segment(),
                &sweep,
                z0,
            )
            .map_err(|e| CliError::Config(e.to_string()))?
        }
        _ => {
            return Err(CliError::Config(
                "deck needs either --r and --h, or --loads r1,..,r14".into(),
            ))
        }
    };
    match out {
        Some(path) => write(path, &deck)?,
        None => print!("{deck}"),
    }
    Ok(())
}

/// Parse a solver report and print the response table.
pub fn cmd_parse_nec(file: &Path, z0: f64) -> Result<(), CliError> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::io(&format!("read {}", file.display()), e))?;
    let resp = parse_nec_output(&text, z0).map_err(|e| CliError::Backend(e.to_string()))?;
    println!("# freq_mhz efficiency_pct gmax_dbi rin_ohms xin_ohms vswr(z0={z0})");
    for i in 0..resp.len() {
        println!(
            "{:.3} {:.4} {:.4} {:.4} {:.4} {:.4}",
            resp.freqs_mhz[i],
            resp.efficiency_pct[i],
            resp.gmax_dbi[i],
            resp.rin_ohms[i],
            resp.xin_ohms[i],
            resp.vswr[i],
        );
    }
    Ok(())
}

/// One solver run, many feed impedances: write a SWR curve file per z0.
pub fn cmd_vswr_sweep(
    config: &RunConfig,
    r: f64,
    h: f64,
    z0_list: &str,
    out_dir: &Path,
) -> Result<(), CliError> {
    let backend = config
        .build_backend()?
        .ok_or_else(|| CliError::Config("vswr-sweep needs a backend".into()))?;
    let z0s: Result<Vec<f64>, _> = z0_list
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect();
    let z0s = z0s.map_err(|e| CliError::Config(format!("bad z0 list: {e}")))?;
    if z0s.is_empty() {
        return Err(CliError::Config("z0 list is empty".into()));
    }
    let design = SingleLoadDesign { r_ohms: r, h_m: h };
    let sweep = z0_sweep(
        &design,
        &z0s,
        &MonopoleSpec::single_load(),
        backend.as_ref(),
    )?;
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::io(&format!("create {}", out_dir.display()), e))?;
    for (z0, curve) in &sweep.curves {
        let mut body = String::new();
        for (f, v) in sweep.freqs_mhz.iter().zip(curve) {
            body.push_str(&format!("{f:.6} {v:.6}\n"));
        }
        write(&out_dir.join(format!("vswr_z0_{z0}.dat")), &body)?;
    }
    println!("wrote {} SWR curves for (R={r}, H={h})", sweep.curves.len());
    Ok(())
}

/// Run the optimizer twice into sibling directories and require the output
/// trees to match byte for byte.
pub fn cmd_replay_check(config: &RunConfig, out_dir: &Path) -> Result<(), CliError> {
    let dir_a = out_dir.join("run_a");
    let dir_b = out_dir.join("run_b");
    cmd_optimize(config, &dir_a)?;
    cmd_optimize(config, &dir_b)?;
    let differing = compare_trees(&dir_a, &dir_b)?;
    if differing.is_empty() {
        println!(
            "replay-check: PASS ({} files identical)",
            count_files(&dir_a)?
        );
        Ok(())
    } else {
        Err(CliError::ReplayMismatch(differing))
    }
}

fn count_files(dir: &Path) -> Result<usize, CliError> {
    Ok(collect_files(dir)?.len())
}

fn collect_files(dir: &Path) -> Result<BTreeMap<PathBuf, PathBuf>, CliError> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(current) = stack.pop() {
        let entries = fs::read_dir(&current)
            .map_err(|e| CliError::io(&format!("read dir {}", current.display()), e))?;
        for entry in entries {
            let entry = entry.map_err(|e| CliError::io("read dir entry", e))?;
            let path = entry.path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).expect("child of dir").to_path_buf();
                out.insert(rel, path);
            }
        }
    }
    Ok(out)
}

/// Relative paths of files that differ (content or presence) between trees.
pub fn compare_trees(a: &Path, b: &Path) -> Result<Vec<String>, CliError> {
    let files_a = collect_files(a)?;
    let files_b = collect_files(b)?;
    let mut differing = Vec::new();
    for (rel, path_a) in &files_a {
        match files_b.get(rel) {
            None => differing.push(rel.display().to_string()),
            Some(path_b) => {
                let bytes_a = fs::read(path_a).map_err(|e| CliError::io("read for compare", e))?;
                let bytes_b = fs::read(path_b).map_err(|e| CliError::io("read for compare", e))?;
                if bytes_a != bytes_b {
                    differing.push(rel.display().to_string());
                }
            }
        }
    }
    for rel in files_b.keys() {
        if !files_a.contains_key(rel) {
            differing.push(rel.display().to_string());
        }
    }
    differing.sort();
    Ok(differing)
}

/// One line per catalog entry plus the monopole objectives.
pub fn cmd_list() -> String {
    let mut out = String::new();
    for e in catalog() {
        let bounds = cfo_bench::default_bounds(e.id, e.nd_default);
        let uniform = bounds.windows(2).all(|w| w[0] == w[1]);
        let bounds_text = if uniform && bounds.len() > 1 {
            format!("[{},{}]^{}", bounds[0].0, bounds[0].1, bounds.len())
        } else {
            let parts: Vec<String> = bounds
                .iter()
                .map(|(lo, hi)| format!("[{lo},{hi}]"))
                .collect();
            parts.join("x")
        };
        let dims = match e.dimension {
            Dimension::Fixed(n) => format!("nd={n}"),
            Dimension::AnyAtLeast(_) => format!("nd={}(default)", e.nd_default),
        };
        let optimum = match known_optimum(e.id) {
            Some((value, _)) => format!("known_max={value}"),
            None => "known_max=-".to_string(),
        };
        let mut flags = Vec::new();
        if e.noisy {
            flags.push("noisy");
        }
        if e.constrained {
            flags.push("constrained");
        }
        if !e.implemented {
            flags.push("unimplemented");
        }
        let flag_text = if flags.is_empty() {
            String::new()
        } else {
            format!(" [{}]", flags.join(","))
        };
        out.push_str(&format!(
            "{:<18} {:<14} {:<24} {}{}\n",
            e.id.as_str(),
            dims,
            bounds_text,
            optimum,
            flag_text
        ));
    }
    for name in ["LD_MONO_F1", "LD_MONO_F2", "LD_MONO_F3"] {
        out.push_str(&format!(
            "{:<18} {:<14} {:<24} known_max=- [needs backend]\n",
            name, "nd=2", "[0,1000]x[0.05,10.65]"
        ));
    }
    out
}
