//! `plasmon-itm`: dispersion scans, kernels, point-spread functionals and figure
//! data for time-mirror refocusing of surface plasmons.

mod commands;
mod config;
mod error;
mod figures;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use plasmon_itm::psf::RegularizedPath;
use plasmon_itm::{ChiProfile, KernelMethod};

use crate::commands::PlasmonRequest;
use crate::config::{GridSpec, Overrides, Preset, RunConfig};
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "plasmon-itm", version, about)]
struct Cli {
    /// TOML file with D0, tau, c, mu0, U, alpha and optional z0, xi, T, dt,
    /// chi_profile, quad_rel_tol, quad_abs_tol, quad_max_subdiv (SI units).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in parameter set used when no configuration file is given.
    #[arg(long, global = true, value_enum)]
    preset: Option<Preset>,
    /// Output directory; tables go to standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for grid evaluation.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    quad_rel_tol: Option<f64>,
    /// Source height (m).
    #[arg(long, global = true)]
    z0: Option<f64>,
    #[arg(long, global = true)]
    xi: Option<f64>,
    /// Mirror time T (s); defaults to max(tau, 1.5 z0 / c).
    #[arg(long = "mirror-time", global = true)]
    mirror_time: Option<f64>,
    /// Mirror duration (s).
    #[arg(long, global = true)]
    dt: Option<f64>,
    #[arg(long, global = true, value_parser = parse_profile)]
    chi_profile: Option<ChiProfile>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Asymptotic,
}

impl From<Method> for KernelMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Exact => KernelMethod::Exact,
            Method::Asymptotic => KernelMethod::Asymptotic,
        }
    }
}

impl From<Method> for RegularizedPath {
    fn from(m: Method) -> Self {
        match m {
            Method::Exact => RegularizedPath::Exact,
            Method::Asymptotic => RegularizedPath::Asymptotic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print sigma0, eta, gamma, ell0, u_c and k_c.
    Params,
    /// Exact and asymptotic s+ over a grid of u = k ell0.
    DispersionScan {
        /// Defaults to the configured gamma.
        #[arg(long)]
        gamma: Option<f64>,
        /// `start:end:n`; defaults to 400 points on (u_c, 10].
        #[arg(long)]
        u: Option<GridSpec>,
    },
    /// K_P (exact and simplified) and K_S over a grid of k.
    Kernel {
        /// Observation height (m); defaults to z0.
        #[arg(long)]
        z: Option<f64>,
        /// `start:end:n` in 1/m; defaults to [xi k_c, 10 xi k_c].
        #[arg(long)]
        k: Option<GridSpec>,
        /// Evaluation of the branch integrals in K_S.
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
    },
    /// Plasmonic point-spread functional J_P on an (r, z) grid.
    PsfPlasmon {
        /// Sets z0 = zeta ell0 / (xi u_c), the Figure-1 parametrization.
        #[arg(long)]
        zeta: Option<f64>,
        /// Heights (m), `start:end:n` or a single value; defaults to 0.
        #[arg(long)]
        z: Option<GridSpec>,
        /// Radii (m); defaults to 201 points on [0, 40 ell0].
        #[arg(long)]
        r: Option<GridSpec>,
        /// Mirror duration (s) for the blurred functional.
        #[arg(long)]
        regularized: Option<f64>,
        /// Path of the blurred functional.
        #[arg(long, value_enum, default_value = "exact")]
        path: Method,
        /// Use the simplified integrand for the instantaneous mirror.
        #[arg(long)]
        asymptotic: bool,
    },
    /// Scattered point-spread functional J_S on an (r, z) grid.
    PsfScattered {
        /// Heights (m); defaults to 100 midpoints of (0, min(2 z0, cT)).
        #[arg(long)]
        z: Option<GridSpec>,
        /// Radii (m); defaults to 101 points on [0, 10 ell0].
        #[arg(long)]
        r: Option<GridSpec>,
        #[arg(long)]
        regularized: Option<f64>,
    },
    /// Unperturbed and perturbed field components over a grid of k.
    FieldDecompose {
        #[arg(long)]
        z: Option<f64>,
        #[arg(long)]
        k: Option<GridSpec>,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
    },
    /// Write the data and a gnuplot script for figure 1, 2 or 3.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Points per axis (figure 1: 201 radii; figure 2: 200 x 200).
        #[arg(long)]
        resolution: Option<usize>,
    },
}

fn parse_profile(s: &str) -> Result<ChiProfile, String> {
    s.parse().map_err(|e: plasmon_itm::Error| e.to_string())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("--threads: {e}")))?;
    }
    let overrides = Overrides {
        z0: cli.z0,
        xi: cli.xi,
        t_mirror: cli.mirror_time,
        dt: cli.dt,
        chi_profile: cli.chi_profile,
        quad_rel_tol: cli.quad_rel_tol,
    };
    let cfg = RunConfig::load(cli.config.as_deref(), cli.preset, &overrides)?;
    let out = cli.out.as_deref();
    match cli.command {
        Command::Params => commands::params(&cfg),
        Command::DispersionScan { gamma, u } => commands::dispersion_scan(&cfg, out, gamma, u),
        Command::Kernel { z, k, method } => commands::kernel(&cfg, out, z, k, method.into()),
        Command::PsfPlasmon {
            zeta,
            z,
            r,
            regularized,
            path,
            asymptotic,
        } => commands::psf_plasmon(
            &cfg,
            out,
            PlasmonRequest {
                zeta,
                z,
                r,
                dt: regularized,
                path: path.into(),
                asymptotic,
            },
        ),
        Command::PsfScattered { z, r, regularized } => commands::psf_scattered(&cfg, out, z, r, regularized),
        Command::FieldDecompose { z, k, method } => commands::field_decompose(&cfg, out, z, k, method.into()),
        Command::Figure { which, resolution } => {
            let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("figures"));
            figures::figure(&cfg, &dir, which, resolution)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("plasmon-itm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
