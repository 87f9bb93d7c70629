use num_complex::Complex64;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Parameters outside the regime the analysis covers (e.g. eta >= 1).
    #[error("regime error: {0}")]
    Regime(String),

    #[error("no propagating plasmon mode: u = {u} <= u_c = {u_c}")]
    NoPropagatingMode { u: f64, u_c: f64 },

    #[error("{what} is singular at {at}")]
    Singular { what: &'static str, at: String },

    #[error("transmission coefficient has a plasmon pole at omega = {omega}, kz = {kz}")]
    TransmissionPole { omega: Complex64, kz: Complex64 },

    #[error("{what} overflowed")]
    Overflow { what: &'static str },

    #[error("{what}: argument outside its domain ({reason})")]
    Domain { what: &'static str, reason: String },

    #[error("root classification failed at gamma = {gamma}, u = {u}: {reason}")]
    Classification { gamma: f64, u: f64, reason: String },

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (partial value {partial}, error estimate {estimate:e})"
    )]
    NonConvergence {
        partial: Complex64,
        estimate: f64,
        subdivisions: usize,
    },
}

impl Error {
    /// True for errors that describe a parameter regime rather than a numerical failure.
    pub fn is_regime(&self) -> bool {
        matches!(
            self,
            Error::Regime(_) | Error::NoPropagatingMode { .. } | Error::Domain { .. }
        )
    }

    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
