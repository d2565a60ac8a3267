use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use rovib::cli::{self, RunConfig, Task};
use rovib::error::Error;

/// Ro-vibrational spectra and wavefunctions of diatomic molecules in
/// hyperbolical potentials.
#[derive(Parser, Debug)]
#[command(name = "rovib", disable_help_flag = false)]
struct Args {
    /// Molecule config file (key = value lines)
    #[arg(long)]
    config: Option<PathBuf>,

    /// Task to run: spectrum | wavefunction | validate | tables
    #[arg(long)]
    task: String,

    /// Vibrational quantum number range, inclusive (LO..HI)
    #[arg(long, default_value = "0..5")]
    n: String,

    /// Rotational quantum number range, inclusive (LO..HI)
    #[arg(long, default_value = "0..2")]
    l: String,

    /// Also evaluate the analytic continuation for non-physical levels
    #[arg(long)]
    allow_unphysical: bool,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Override the oracle grid point count
    #[arg(long)]
    grid_points: Option<usize>,

    /// Oracle eigenvalue bisection tolerance in cm^-1
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
}

fn parse_range(s: &str, what: &str) -> Result<(u32, u32), Error> {
    let parse_one = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| Error::Usage(format!("bad {what} range '{s}', expected LO..HI")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse_one(lo)?, parse_one(hi)?),
        None => {
            let v = parse_one(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(Error::Usage(format!("empty {what} range '{s}'")));
    }
    Ok((lo, hi))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(args: &Args) -> Result<ExitCode, Error> {
    let task: Task = args.task.parse()?;
    let molecule = match &args.config {
        Some(path) => Some(cli::load_config(path)?),
        None => None,
    };
    let cfg = RunConfig {
        molecule,
        task,
        n_range: parse_range(&args.n, "n")?,
        l_range: parse_range(&args.l, "l")?,
        allow_unphysical: args.allow_unphysical,
        grid_points: args.grid_points,
        tolerance: args.tolerance,
    };
    match task {
        Task::Spectrum => emit(&args.out, &cli::run_spectrum(&cfg)?)?,
        Task::Wavefunction => emit(&args.out, &cli::run_wavefunction(&cfg)?)?,
        Task::Validate => emit(&args.out, &cli::run_validate(&cfg)?)?,
        Task::Tables => {
            let report = cli::run_tables(cfg.allow_unphysical)?;
            emit(&args.out, &report.to_csv())?;
            if !report.breaches.is_empty() {
                for b in &report.breaches {
                    eprintln!("tolerance breach: {b}");
                }
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            // help/version are not errors
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(&args) {
        Ok(code) => code,
        Err(e @ (Error::Usage(_) | Error::Config { .. } | Error::Domain(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
