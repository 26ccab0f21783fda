use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use absphase::classical_limit::{Observable, DEFAULT_NBAR_LIST};
use absphase::oscillator::OscillatorParams;
use absphase::report::{self, Command, OutputFormat, RunConfig, StateSource};
use absphase::restricted::BoxConfig;
use absphase::PhaseError;

#[derive(Parser)]
#[command(
    name = "absphase",
    version,
    about = "Absolute phase observable reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; defaults to $ABSPHASE_OUT_DIR/<command>.<ext>, else stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Also write a gnuplot script next to the CSV.
    #[arg(long, global = true)]
    gnuplot_script: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObservableArg {
    Phi,
    Sin,
    Cos,
    Sin2,
    Cos2,
}

impl From<ObservableArg> for Observable {
    fn from(o: ObservableArg) -> Self {
        match o {
            ObservableArg::Phi => Observable::Phi,
            ObservableArg::Sin => Observable::Sin,
            ObservableArg::Cos => Observable::Cos,
            ObservableArg::Sin2 => Observable::Sin2,
            ObservableArg::Cos2 => Observable::Cos2,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Nonzero Fock matrix elements of Φ.
    PhiMatrix {
        #[arg(long)]
        n_max: usize,
    },
    /// Phase distribution of a number state.
    Distribution {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1001)]
        points: usize,
    },
    /// Coherent-state averages against their classical targets.
    LimitSweep {
        #[arg(long, value_enum)]
        observable: ObservableArg,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_NBAR_LIST)]
        nbar: Vec<f64>,
        /// Evaluate sweep points on this many threads (output order is fixed).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Recovered angle along an analytic classical orbit.
    Classical {
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        phi0: f64,
        #[arg(long, default_value_t = 10.0)]
        t_end: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Finite-dimensional angle operator.
    FiniteDim {
        #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32, 64, 128, 256, 512, 1024])]
        m: Vec<usize>,
        /// Emit the distance to the plane-rotator element per m.
        #[arg(long)]
        compare_rotator: bool,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        nprime: i64,
        /// Diagonalize each Θ^m and report the spectrum error.
        #[arg(long)]
        spectrum: bool,
    },
    /// Uncertainty product and commutator for box states.
    Uncertainty {
        /// `n,re,im` coefficient file with header.
        #[arg(long)]
        coeffs: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long, default_value_t = 20)]
        max_index: i64,
        #[arg(long, default_value_t = 2.0 * std::f64::consts::PI)]
        length: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
}

fn to_config(cli: Cli) -> Result<(RunConfig, usize), PhaseError> {
    let mut jobs = 1;
    let command = match cli.command {
        Cmd::PhiMatrix { n_max } => Command::PhiMatrix { n_max },
        Cmd::Distribution { n, points } => Command::Distribution { n, points },
        Cmd::LimitSweep {
            observable,
            theta,
            nbar,
            jobs: j,
        } => {
            jobs = j;
            Command::LimitSweep {
                observable: observable.into(),
                theta,
                nbar_list: nbar,
                parallel: j > 1,
            }
        }
        Cmd::Classical {
            mass,
            omega,
            amplitude,
            phi0,
            t_end,
            steps,
        } => Command::Classical {
            params: OscillatorParams::new(mass, omega)?,
            amplitude,
            phi0,
            t_end,
            steps,
        },
        Cmd::FiniteDim {
            m,
            compare_rotator,
            n,
            nprime,
            spectrum,
        } => Command::FiniteDim {
            m_list: m,
            compare_rotator: compare_rotator.then_some((n, nprime)),
            spectrum,
        },
        Cmd::Uncertainty {
            coeffs,
            seed,
            samples,
            terms,
            max_index,
            length,
            hbar,
        } => Command::Uncertainty {
            source: match coeffs {
                Some(path) => StateSource::File(path),
                None => StateSource::Random {
                    seed,
                    samples,
                    terms,
                    max_index,
                },
            },
            box_cfg: BoxConfig::new(length, hbar)?,
        },
    };
    let format = match cli.output.format {
        Format::Csv => OutputFormat::Csv,
        Format::Json => OutputFormat::Json,
    };
    Ok((
        RunConfig {
            command,
            format,
            out: cli.output.out,
            gnuplot_script: cli.output.gnuplot_script,
        },
        jobs,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = to_config(cli).and_then(|(config, jobs)| {
        if jobs > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build_global()
                .map_err(|e| PhaseError::InvalidArgument(e.to_string()))?;
        }
        let report = report::run(&config.command)?;
        report::emit(&report, &config)?;
        Ok(report)
    });
    match result {
        Ok(report) if report.passed() => ExitCode::SUCCESS,
        Ok(report) => {
            for gate in report.gates.iter().filter(|g| !g.passed) {
                eprintln!("gate {} failed: {}", gate.name, gate.detail);
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
