use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cfo_cli::commands::{
    cmd_deck, cmd_landscape, cmd_list, cmd_optimize, cmd_parse_nec, cmd_replay_check,
    cmd_vswr_sweep,
};
use cfo_cli::config::RunConfig;
use cfo_cli::error::CliError;

/// Deterministic global-optimization toolkit: a central-force probe sweep
/// over benchmark functions and solver-backed loaded-monopole objectives.
#[derive(Parser)]
#[command(name = "cfo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ConfigArgs {
    /// key=value configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Inline override, repeatable: --set key=value
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Output directory (overrides the config's out_dir)
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ConfigArgs {
    fn load(&self) -> Result<RunConfig, CliError> {
        let mut config = match &self.config {
            Some(path) => RunConfig::from_file(path)?,
            None => RunConfig::default(),
        };
        config.apply_overrides(&self.set)?;
        if let Some(out) = &self.out {
            config.out_dir = out.clone();
        }
        Ok(config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List every objective with dimensions, bounds, and known optimum
    List,
    /// Run the full parameter-free optimization and write the report bundle
    Optimize(ConfigArgs),
    /// Evaluate a 2-D objective over an n1 x n2 lattice
    Landscape {
        #[command(flatten)]
        args: ConfigArgs,
        /// Lattice points along the first axis
        #[arg(long)]
        n1: Option<usize>,
        /// Lattice points along the second axis
        #[arg(long)]
        n2: Option<usize>,
    },
    /// Emit a solver input deck
    Deck {
        /// Loading resistance in ohms (single-load design)
        #[arg(long)]
        r: Option<f64>,
        /// Load height in meters (single-load design)
        #[arg(long)]
        h: Option<f64>,
        /// Fourteen comma-separated per-segment resistances
        #[arg(long)]
        loads: Option<String>,
        /// Feed impedance recorded in the deck comments
        #[arg(long, default_value_t = 50.0)]
        z0: f64,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parse a solver output report and print the frequency response
    ParseNec {
        /// Solver report file
        #[arg(long)]
        file: PathBuf,
        /// Feed impedance for the SWR column
        #[arg(long, default_value_t = 50.0)]
        z0: f64,
    },
    /// Recompute one design's SWR across several feed impedances
    VswrSweep {
        #[command(flatten)]
        args: ConfigArgs,
        /// Loading resistance in ohms
        #[arg(long)]
        r: f64,
        /// Load height in meters
        #[arg(long)]
        h: f64,
        /// Comma-separated feed impedances
        #[arg(long)]
        z0_list: String,
    },
    /// Run optimize twice and require byte-identical output trees
    ReplayCheck(ConfigArgs),
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            print!("{}", cmd_list());
            Ok(())
        }
        Command::Optimize(args) => {
            let config = args.load()?;
            let out = config.out_dir.clone();
            cmd_optimize(&config, &out)
        }
        Command::Landscape { args, n1, n2 } => {
            let mut config = args.load()?;
            if let Some(n1) = n1 {
                config.n1 = n1;
            }
            if let Some(n2) = n2 {
                config.n2 = n2;
            }
            let out = config.out_dir.clone();
            cmd_landscape(&config, &out)
        }
        Command::Deck {
            r,
            h,
            loads,
            z0,
            out,
        } => cmd_deck(r, h, loads.as_deref(), z0, out.as_deref()),
        Command::ParseNec { file, z0 } => cmd_parse_nec(&file, z0),
        Command::VswrSweep {
            args,
            r,
            h,
            z0_list,
        } => {
            let config = args.load()?;
            let out = config.out_dir.clone();
            cmd_vswr_sweep(&config, r, h, &z0_list, &out)
        }
        Command::ReplayCheck(args) => {
            let config = args.load()?;
            let out = config.out_dir.clone();
            cmd_replay_check(&config, &out)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cfo: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
