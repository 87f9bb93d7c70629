//! Constitutive parameters of the conducting sheet and the frequency-domain
//! quantities built from them.
//!
//! All quantities are SI. The sheet is described by Drude's model with weight
//! `D0` and relaxation time `tau`; everything else is derived:
//!
//! ```text
//! sigma0 = D0 * tau           conductance (S)
//! eta    = mu0 * sigma0 * c/2 dimensionless coupling
//! ell0   = eta * c * tau      attenuation length (m)
//! gamma  = 1 - eta^2
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Vacuum light speed (m/s).
pub const C_VACUUM: f64 = 299_792_458.0;
/// Vacuum permeability (H/m).
pub const MU0_VACUUM: f64 = 4.0e-7 * std::f64::consts::PI;

/// The raw, user-supplied constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawParams {
    /// Drude weight (S/s).
    pub d0: f64,
    /// Relaxation time (s).
    pub tau: f64,
    /// Background light speed (m/s).
    pub c: f64,
    /// Permeability (H/m).
    pub mu0: f64,
    /// Pulse amplitude (A m s).
    pub u_amp: f64,
    /// Mirror strength (s).
    pub alpha: f64,
}

/// Whether inputs with `gamma <= 0` (`eta >= 1`) are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GammaPolicy {
    #[default]
    RequirePositive,
    AllowNonPositive,
}

/// Raw constants together with the derived `(sigma0, eta, ell0, gamma)`.
///
/// Fields are private so the derived quantities can never drift from the raw
/// ones; construct through [`PhysicalParams::derive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    raw: RawParams,
    sigma0: f64,
    eta: f64,
    ell0: f64,
    gamma: f64,
}

impl PhysicalParams {
    pub fn derive(raw: RawParams) -> Result<Self> {
        Self::derive_with(raw, GammaPolicy::RequirePositive)
    }

    pub fn derive_with(raw: RawParams, policy: GammaPolicy) -> Result<Self> {
        let checks: [(&'static str, f64); 6] = [
            ("D0", raw.d0),
            ("tau", raw.tau),
            ("c", raw.c),
            ("mu0", raw.mu0),
            ("U", raw.u_amp),
            ("alpha", raw.alpha),
        ];
        for (name, value) in checks {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::invalid(
                    name,
                    format!("must be finite and strictly positive, got {value}"),
                ));
            }
        }
        let sigma0 = raw.d0 * raw.tau;
        let eta = raw.mu0 * sigma0 * raw.c / 2.0;
        let ell0 = eta * raw.c * raw.tau;
        let gamma = 1.0 - eta * eta;
        if !(sigma0.is_finite() && eta.is_finite() && ell0.is_finite()) || sigma0 <= 0.0 {
            return Err(Error::invalid("D0", "derived quantities are not finite"));
        }
        if policy == GammaPolicy::RequirePositive && eta >= 1.0 {
            return Err(Error::Regime(format!(
                "eta = {eta} >= 1 (gamma = {gamma} <= 0) has no propagating plasmon analysis"
            )));
        }
        Ok(Self {
            raw,
            sigma0,
            eta,
            ell0,
            gamma,
        })
    }

    /// Builds parameters from the dimensionless coupling `eta`, the attenuation
    /// length `ell0` and the background (`c`, `mu0`).
    pub fn from_eta_ell0(eta: f64, ell0: f64, c: f64, mu0: f64) -> Result<Self> {
        if !(eta > 0.0) || !(ell0 > 0.0) {
            return Err(Error::invalid("eta", "eta and ell0 must be positive"));
        }
        let sigma0 = 2.0 * eta / (mu0 * c);
        let tau = ell0 / (eta * c);
        Self::derive(RawParams {
            d0: sigma0 / tau,
            tau,
            c,
            mu0,
            u_amp: 1.0,
            alpha: tau,
        })
    }

    /// `eta = 0.1`, `ell0 = 1 um` in a background of refractive index 2.
    pub fn figure_set() -> Self {
        Self::from_eta_ell0(0.1, 1.0e-6, C_VACUUM / 2.0, MU0_VACUUM)
            .expect("figure parameter set is valid")
    }

    /// Typical doped-graphene values: `sigma0 = 6e-4 S`, `tau = 1e-13 s`,
    /// refractive index 2.
    pub fn experimental_set() -> Self {
        let tau = 1.0e-13;
        Self::derive(RawParams {
            d0: 6.0e-4 / tau,
            tau,
            c: C_VACUUM / 2.0,
            mu0: MU0_VACUUM,
            u_amp: 1.0,
            alpha: tau,
        })
        .expect("experimental parameter set is valid")
    }

    pub fn raw(&self) -> RawParams {
        self.raw
    }

    pub fn d0(&self) -> f64 {
        self.raw.d0
    }

    pub fn tau(&self) -> f64 {
        self.raw.tau
    }

    pub fn c(&self) -> f64 {
        self.raw.c
    }

    pub fn mu0(&self) -> f64 {
        self.raw.mu0
    }

    pub fn u_amp(&self) -> f64 {
        self.raw.u_amp
    }

    pub fn alpha(&self) -> f64 {
        self.raw.alpha
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn ell0(&self) -> f64 {
        self.ell0
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `c * tau`, the distance light travels in one relaxation time.
    pub fn c_tau(&self) -> f64 {
        self.raw.c * self.raw.tau
    }

    /// Dimensionless critical wavenumber `u_c`.
    pub fn critical_u(&self) -> Result<f64> {
        crate::dispersion::critical_u(self.gamma)
    }

    /// Critical horizontal wavenumber `k_c = u_c / ell0` (1/m).
    pub fn critical_k(&self) -> Result<f64> {
        Ok(self.critical_u()? / self.ell0)
    }

    pub fn with_amplitudes(mut self, u_amp: f64, alpha: f64) -> Result<Self> {
        self.raw.u_amp = u_amp;
        self.raw.alpha = alpha;
        Self::derive(self.raw)
    }
}

/// Spectral profile of the horizontal source.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum SourceProfile {
    /// Indicator of `k > xi * k_c`.
    #[default]
    HighPass,
    /// Indicator of `xi * k_c < k < k_max`.
    Band { k_max: f64 },
}

/// Source height and spectral content.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceConfig {
    pub z0: f64,
    pub xi: f64,
    pub profile: SourceProfile,
}

impl SourceConfig {
    pub fn new(z0: f64, xi: f64) -> Result<Self> {
        let source = Self {
            z0,
            xi,
            profile: SourceProfile::HighPass,
        };
        source.validate()?;
        Ok(source)
    }

    pub fn with_profile(mut self, profile: SourceProfile) -> Result<Self> {
        self.profile = profile;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.z0.is_finite() && self.z0 > 0.0) {
            return Err(Error::invalid("z0", format!("must be > 0, got {}", self.z0)));
        }
        if !(self.xi.is_finite() && self.xi > 1.0) {
            return Err(Error::invalid("xi", format!("must be > 1, got {}", self.xi)));
        }
        if let SourceProfile::Band { k_max } = self.profile {
            if !(k_max.is_finite() && k_max > 0.0) {
                return Err(Error::invalid("k_max", "band limit must be positive"));
            }
        }
        Ok(())
    }

    /// Lower spectral edge `xi * k_c`.
    pub fn k_min(&self, params: &PhysicalParams) -> Result<f64> {
        Ok(self.xi * params.critical_k()?)
    }

    pub fn k_max(&self) -> Option<f64> {
        match self.profile {
            SourceProfile::HighPass => None,
            SourceProfile::Band { k_max } => Some(k_max),
        }
    }

    /// `f_hat(k)`, dimensionless.
    pub fn fhat(&self, params: &PhysicalParams, k: f64) -> Result<f64> {
        let above = k > self.k_min(params)?;
        let below = self.k_max().is_none_or(|k_max| k < k_max);
        Ok(if above && below { 1.0 } else { 0.0 })
    }
}

/// Complex sheet conductivity `sigma0 / (1 + i omega tau)`.
pub fn conductivity(params: &PhysicalParams, omega: Complex64) -> Result<Complex64> {
    let denom = Complex64::new(1.0, 0.0) + Complex64::i() * omega * params.tau();
    if denom.norm() <= 4.0 * f64::EPSILON * (1.0 + (omega * params.tau()).norm()) {
        return Err(Error::Singular {
            what: "conductivity",
            at: format!("omega = {omega} (= i/tau)"),
        });
    }
    Ok(params.sigma0() / denom)
}

/// Sheet transmission coefficient `1 / (1 - mu0 sigma(omega) kz c^2 / (2 omega))`.
pub fn transmission(params: &PhysicalParams, omega: Complex64, kz: Complex64) -> Result<Complex64> {
    if omega == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("transmission", "omega must be nonzero"));
    }
    let sigma = conductivity(params, omega)?;
    let c = params.c();
    let coupling = params.mu0() * sigma * kz * c * c / (2.0 * omega);
    if !(coupling.re.is_finite() && coupling.im.is_finite()) {
        return Err(Error::Overflow {
            what: "transmission coupling",
        });
    }
    let denom = Complex64::new(1.0, 0.0) - coupling;
    if denom.norm() <= 8.0 * f64::EPSILON * (1.0 + coupling.norm()) {
        return Err(Error::TransmissionPole { omega, kz });
    }
    let t = denom.inv();
    if !(t.re.is_finite() && t.im.is_finite()) {
        return Err(Error::Overflow {
            what: "transmission",
        });
    }
    Ok(t)
}

/// Reflection coefficient `1 - T`.
pub fn reflection(params: &PhysicalParams, omega: Complex64, kz: Complex64) -> Result<Complex64> {
    Ok(Complex64::new(1.0, 0.0) - transmission(params, omega, kz)?)
}

/// Vertical wavenumber for a real frequency.
///
/// `beta^2 = omega^2/c^2 - k^2`. Off the cuts the root with positive imaginary
/// part is taken. On the cuts `|omega| >= c k` the value is the limit from
/// below the real axis, i.e. `beta = -sign(omega) * sqrt(omega^2/c^2 - k^2)`,
/// which makes `exp(i omega t + i beta |z|)` outgoing.
pub fn beta(params: &PhysicalParams, omega: f64, k: f64) -> Complex64 {
    let c = params.c();
    let kw = omega / c;
    let b2 = kw * kw - k * k;
    if b2 < 0.0 {
        Complex64::new(0.0, (-b2).sqrt())
    } else if omega > 0.0 {
        Complex64::new(-b2.sqrt(), 0.0)
    } else {
        Complex64::new(b2.sqrt(), 0.0)
    }
}

/// Vertical wavenumber for a complex frequency, `Im beta >= 0`. Real
/// frequencies defer to [`beta`].
pub fn beta_complex(params: &PhysicalParams, omega: Complex64, k: f64) -> Complex64 {
    if omega.im == 0.0 {
        return beta(params, omega.re, k);
    }
    let kw = omega / params.c();
    let root = (kw * kw - k * k).sqrt();
    if root.im < 0.0 {
        -root
    } else {
        root
    }
}
