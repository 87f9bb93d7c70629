//! Run configuration: TOML ingestion, presets and the canonical form that is hashed
//! into every output file.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use plasmon_itm::{ChiProfile, PhysicalParams, QuadratureSpec, RawParams, SourceConfig};

use crate::error::CliError;

/// Keys accepted in a configuration file. The six physical constants are
/// required; everything else falls back to a documented default.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    #[serde(rename = "D0")]
    d0: Option<f64>,
    tau: Option<f64>,
    c: Option<f64>,
    mu0: Option<f64>,
    #[serde(rename = "U")]
    u: Option<f64>,
    alpha: Option<f64>,
    z0: Option<f64>,
    xi: Option<f64>,
    #[serde(rename = "T")]
    t: Option<f64>,
    dt: Option<f64>,
    chi_profile: Option<String>,
    quad_rel_tol: Option<f64>,
    quad_abs_tol: Option<f64>,
    quad_max_subdiv: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// eta = 0.1, ell0 = 1 um, refractive index 2.
    Figure,
    /// sigma0 = 6e-4 S, tau = 1e-13 s, refractive index 2.
    Experimental,
}

impl Preset {
    fn name(self) -> &'static str {
        match self {
            Preset::Figure => "figure",
            Preset::Experimental => "experimental",
        }
    }

    fn params(self) -> PhysicalParams {
        match self {
            Preset::Figure => PhysicalParams::figure_set(),
            Preset::Experimental => PhysicalParams::experimental_set(),
        }
    }
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub z0: Option<f64>,
    pub xi: Option<f64>,
    pub t_mirror: Option<f64>,
    pub dt: Option<f64>,
    pub chi_profile: Option<ChiProfile>,
    pub quad_rel_tol: Option<f64>,
}

/// Fully resolved inputs of a run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub origin: String,
    pub params: PhysicalParams,
    /// Source height; `10 ell0` when unset.
    pub z0: f64,
    pub xi: f64,
    t_mirror: Option<f64>,
    pub dt: f64,
    pub chi: ChiProfile,
    pub quad: QuadratureSpec,
}

fn required(value: Option<f64>, key: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Config(format!("missing key `{key}`")))
}

impl RunConfig {
    pub fn load(path: Option<&Path>, preset: Option<Preset>, overrides: &Overrides) -> Result<Self, CliError> {
        let (origin, params, file) = match (path, preset) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config("--config and --preset are mutually exclusive".into()));
            }
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
                let file: FileConfig = toml::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {}", path.display(), e.message())))?;
                let raw = RawParams {
                    d0: required(file.d0, "D0")?,
                    tau: required(file.tau, "tau")?,
                    c: required(file.c, "c")?,
                    mu0: required(file.mu0, "mu0")?,
                    u_amp: required(file.u, "U")?,
                    alpha: required(file.alpha, "alpha")?,
                };
                let params = PhysicalParams::derive(raw).map_err(|e| CliError::core("config", e))?;
                ("file".to_string(), params, file)
            }
            (None, preset) => {
                let preset = preset.unwrap_or(Preset::Figure);
                (format!("preset:{}", preset.name()), preset.params(), FileConfig::default())
            }
        };

        let chi = match (overrides.chi_profile, &file.chi_profile) {
            (Some(p), _) => p,
            (None, Some(name)) => ChiProfile::from_str(name).map_err(|e| CliError::core("config", e))?,
            (None, None) => ChiProfile::default(),
        };
        let mut quad = QuadratureSpec::default();
        if let Some(v) = overrides.quad_rel_tol.or(file.quad_rel_tol) {
            quad.rel_tol = v;
        }
        if let Some(v) = file.quad_abs_tol {
            quad.abs_tol = v;
        }
        if let Some(v) = file.quad_max_subdiv {
            quad.max_subdivisions = v;
        }
        quad.validate().map_err(|e| CliError::core("config", e))?;

        let config = RunConfig {
            origin,
            z0: overrides.z0.or(file.z0).unwrap_or(10.0 * params.ell0()),
            xi: overrides.xi.or(file.xi).unwrap_or(2.0),
            t_mirror: overrides.t_mirror.or(file.t),
            dt: overrides.dt.or(file.dt).unwrap_or(0.0),
            chi,
            quad,
            params,
        };
        config.source(config.z0)?;
        if let Some(t) = config.t_mirror {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Config(format!("`T` must be positive, got {t}")));
            }
        }
        if !(config.dt >= 0.0 && config.dt.is_finite()) {
            return Err(CliError::Config(format!("`dt` must be >= 0, got {}", config.dt)));
        }
        Ok(config)
    }

    /// Source at height `z0` with the configured `xi`.
    pub fn source(&self, z0: f64) -> Result<SourceConfig, CliError> {
        SourceConfig::new(z0, self.xi).map_err(|e| CliError::core("config", e))
    }

    /// Mirror time: the configured `T`, else `max(tau, 1.5 z0 / c)`.
    pub fn t_mirror(&self, z0: f64) -> f64 {
        self.t_mirror
            .unwrap_or_else(|| self.params.tau().max(1.5 * z0 / self.params.c()))
    }

    /// `key = value` lines describing every resolved input.
    pub fn canonical(&self) -> Vec<(String, String)> {
        let p = &self.params;
        let mut out = vec![
            ("origin".to_string(), self.origin.clone()),
            ("D0".to_string(), format!("{:e}", p.d0())),
            ("tau".to_string(), format!("{:e}", p.tau())),
            ("c".to_string(), format!("{:e}", p.c())),
            ("mu0".to_string(), format!("{:e}", p.mu0())),
            ("U".to_string(), format!("{:e}", p.u_amp())),
            ("alpha".to_string(), format!("{:e}", p.alpha())),
            ("z0".to_string(), format!("{:e}", self.z0)),
            ("xi".to_string(), format!("{:e}", self.xi)),
            (
                "T".to_string(),
                self.t_mirror.map_or("auto".to_string(), |t| format!("{t:e}")),
            ),
            ("dt".to_string(), format!("{:e}", self.dt)),
            ("chi_profile".to_string(), self.chi.name().to_string()),
            ("quad_rel_tol".to_string(), format!("{:e}", self.quad.rel_tol)),
            ("quad_abs_tol".to_string(), format!("{:e}", self.quad.abs_tol)),
            ("quad_max_subdiv".to_string(), self.quad.max_subdivisions.to_string()),
        ];
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Provenance of one output file: the resolved configuration plus the
/// command-specific settings, and their SHA-256.
#[derive(Debug, Clone)]
pub struct Provenance {
    pub command: String,
    pub entries: Vec<(String, String)>,
}

impl Provenance {
    pub fn new(command: impl Into<String>, config: &RunConfig) -> Self {
        Self {
            command: command.into(),
            entries: config.canonical(),
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(b"command=");
        h.update(self.command.as_bytes());
        h.update(b"\n");
        for (k, v) in &self.entries {
            h.update(k.as_bytes());
            h.update(b"=");
            h.update(v.as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }
}

/// `a:b:n` (inclusive, `n` points) or a single value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn single(x: f64) -> Self {
        Self { start: x, end: x, n: 1 }
    }

    pub fn new(start: f64, end: f64, n: usize) -> Self {
        Self { start, end, n }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.start];
        }
        let step = (self.end - self.start) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| if i + 1 == self.n { self.end } else { self.start + step * i as f64 })
            .collect()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}:{:e}:{}", self.start, self.end, self.n)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
        let spec = match parts.as_slice() {
            [x] => GridSpec::single(num(x)?),
            [a, b, n] => GridSpec {
                start: num(a)?,
                end: num(b)?,
                n: n.trim().parse().map_err(|e| format!("`{n}`: {e}"))?,
            },
            _ => return Err(format!("expected `start:end:n` or a single value, got `{s}`")),
        };
        if spec.n == 0 || !spec.start.is_finite() || !spec.end.is_finite() {
            return Err(format!("grid `{s}` is empty or not finite"));
        }
        Ok(spec)
    }
}
