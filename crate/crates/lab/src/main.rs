use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use micz_core::exact::Rational;
use micz_lab::config::{RunConfig, Suite};
use micz_lab::render;
use micz_lab::suites::all_passed;

#[derive(Parser)]
#[command(name = "micz", version, about = "Exact checks of the so(2,2n+2) dynamical symmetry of MICZ-Kepler problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Half the dimension minus one half: D = 2n+1. Omit to run n = 1 and 2.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Monopole charge as an exact fraction "p/q". Omit to run the grid.
    #[arg(long, global = true, allow_hyphen_values = true)]
    mu: Option<Rational>,
    #[arg(long, global = true, default_value_t = 4)]
    imax: u32,
    #[arg(long, global = true, default_value_t = 8)]
    kmax: u32,
    #[arg(long, global = true, default_value_t = 6)]
    lmax: u32,
    /// Lowering steps per tower.
    #[arg(long, global = true, default_value_t = 5)]
    steps: u32,
    #[arg(long, global = true, default_value_t = 20)]
    battery_size: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "MICZ_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Record wall time per check (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run the named suites.
    Verify {
        #[arg(required = true, value_parser = parse_suite)]
        suites: Vec<Suite>,
    },
    /// Energies and level dimensions.
    Spectrum,
    /// Weyl dimensions against the sum over orbital pieces.
    Degeneracy,
    /// so(2n+2) → so(2n+1) → so(2n) branching per level.
    Branch,
    /// Highest sections, lowering towers and hermiticity spot checks.
    Ladder,
    /// ⟨Â_D⟩ on highest sections.
    Expectation,
    /// Every suite.
    Run,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: micz_lab::ConfigError| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = cli.common;
    let suites = match cli.command {
        Command::Verify { suites } => suites,
        Command::Spectrum => vec![Suite::Spectrum],
        Command::Degeneracy => vec![Suite::Degeneracy],
        Command::Branch => vec![Suite::Branch],
        Command::Ladder => vec![Suite::Ladder],
        Command::Expectation => vec![Suite::Expectation],
        Command::Run => Suite::ALL.to_vec(),
    };
    let cfg = RunConfig {
        points: RunConfig::points_for(c.n, c.mu),
        imax: c.imax,
        kmax: c.kmax,
        lmax: c.lmax,
        steps: c.steps,
        battery_size: c.battery_size,
        seed: c.seed,
        suites,
        timings: c.timings,
    };
    if let Err(e) = cfg.validate() {
        eprintln!("micz: {e}");
        return ExitCode::from(2);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(c.jobs).build().expect("thread pool");
    let records = pool.install(|| micz_lab::run(&cfg));
    let out = match c.format {
        OutFormat::Json => render::json_lines(&records),
        OutFormat::Markdown => render::markdown(&records),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    if all_passed(&records) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
