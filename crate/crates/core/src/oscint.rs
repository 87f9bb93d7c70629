//! Oscillatory building blocks of the refocused field.
//!
//! `H(T, k, z, g)` is the branch-cut integral
//!
//! ```text
//! H = int_R exp(i cT |K|) exp(i kz z) T(c|K|, kz) g(c|K|) kz / |K|^2 dkz,   |K|^2 = k^2 + kz^2
//! ```
//!
//! and `G(t, z, s)` the plasmon propagator attached to a root `s` of the
//! dispersion quartic.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::dispersion::pprime;
use crate::error::{Error, Result};
use crate::physics::PhysicalParams;
use crate::quad::{integrate, panels_of_length, QuadResult, QuadratureSpec};

/// Weight `g` in the branch-cut integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    /// `g = 1`.
    Unity,
    /// `g(omega) = sigma(omega) / sigma0`.
    SigmaOverSigma0,
}

/// Mirror time and observation geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryFrame {
    pub t_mirror: f64,
    pub z: f64,
    pub z0: f64,
    pub r: f64,
}

/// Geometric factors entering the stationary-phase form of the scattered kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub phi_z: f64,
    pub phi_z0: f64,
    pub delta_phi: f64,
    /// `2 pi z z0 / ((cT)^3 sqrt(phi(z) phi(z0)))`.
    pub c_factor: f64,
}

/// `phi(z) = sqrt(1 - (z / cT)^2)` for `0 <= z <= cT`.
pub fn phi(params: &PhysicalParams, t_mirror: f64, z: f64) -> Result<f64> {
    let ct = params.c() * t_mirror;
    if !(t_mirror > 0.0) {
        return Err(Error::invalid("T", "mirror time must be positive"));
    }
    if !(z >= 0.0 && z <= ct) {
        return Err(Error::domain("phi", format!("need 0 <= z <= cT, got z = {z}, cT = {ct}")));
    }
    let x = z / ct;
    Ok(((1.0 - x) * (1.0 + x)).sqrt())
}

pub fn geometry(params: &PhysicalParams, frame: &GeometryFrame) -> Result<Geometry> {
    let ct = params.c() * frame.t_mirror;
    for (what, v) in [("z", frame.z), ("z0", frame.z0)] {
        if !(v > 0.0 && v < ct) {
            return Err(Error::domain(
                "geometry",
                format!("need 0 < {what} < cT, got {what} = {v}, cT = {ct}"),
            ));
        }
    }
    let phi_z = phi(params, frame.t_mirror, frame.z)?;
    let phi_z0 = phi(params, frame.t_mirror, frame.z0)?;
    Ok(Geometry {
        phi_z,
        phi_z0,
        delta_phi: phi_z - phi_z0,
        c_factor: 2.0 * PI * frame.z * frame.z0 / (ct * ct * ct * (phi_z * phi_z0).sqrt()),
    })
}

/// Integrand of `H` at a possibly complex `kz`.
pub fn h_integrand(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    weight: Weight,
    kz: Complex64,
) -> Complex64 {
    let i = Complex64::i();
    let w = (kz * kz + k * k).sqrt();
    let d = 1.0 + i * params.c_tau() * w;
    let t = 1.0 / (1.0 - params.eta() * (kz / w) / d);
    let g = match weight {
        Weight::Unity => Complex64::new(1.0, 0.0),
        Weight::SigmaOverSigma0 => 1.0 / d,
    };
    let phase = (i * (params.c() * t_mirror * w + z * kz)).exp();
    phase * t * g * kz / (w * w)
}

const TAIL_KNOTS: [f64; 9] = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 60.0];
const MAX_PANELS: f64 = 2.0e6;

/// `H(T, k, z, g)` by phase-aware Gauss–Kronrod panels on `[-K, K]` and
/// exponentially decaying rotated contours beyond.
pub fn h_exact(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    weight: Weight,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::invalid("k", format!("must be positive, got {k}")));
    }
    if !(t_mirror > 0.0 && z >= 0.0) {
        return Err(Error::invalid("T", "need T > 0 and z >= 0"));
    }
    let ct = params.c() * t_mirror;
    let gap = (ct - z).abs();
    if gap <= 1e-9 * ct {
        return Err(Error::domain("H", "z = cT: the integral does not decay on either tail"));
    }
    // the continued integrand has no poles off the imaginary axis, so any
    // cutoff beyond the stationary point is admissible
    let mut cutoff = 4.0 * k;
    if z < ct {
        cutoff = cutoff.max(2.0 * k * (ct / (ct - z)).sqrt());
    }
    let panel = PI / (ct + z);
    if 2.0 * cutoff / panel > MAX_PANELS {
        return Err(Error::domain(
            "H",
            format!("phase too fast for direct quadrature (cT k = {:.3e})", ct * k),
        ));
    }
    let f = |kz: Complex64| h_integrand(params, t_mirror, k, z, weight, kz);

    let centre = integrate(
        |x| f(Complex64::new(x, 0.0)),
        &panels_of_length(-cutoff, cutoff, panel),
        spec,
    )?;

    let rate_right = ct + z;
    let jac_right = Complex64::new(0.0, 1.0 / rate_right);
    let right = integrate(
        |t| f(Complex64::new(cutoff, t / rate_right)) * jac_right,
        &TAIL_KNOTS,
        spec,
    )?;

    let s = if z > ct { 1.0 } else { -1.0 };
    let jac_left = Complex64::new(0.0, -s / gap);
    let left = integrate(
        |t| f(Complex64::new(-cutoff, s * t / gap)) * jac_left,
        &TAIL_KNOTS,
        spec,
    )?;
    Ok(centre + right + left)
}

/// Stationary-phase value of `H` with its regime flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryH {
    pub value: Complex64,
    /// Set when `cTk < 10`, outside the high-frequency regime.
    pub regime_warning: bool,
}

/// `T0(k, z) = 1 / (1 + mu0 sigma0 z / (2 T (1 + i c tau k / phi(z))))`.
pub fn t0(params: &PhysicalParams, t_mirror: f64, k: f64, z: f64) -> Result<Complex64> {
    let ph = phi(params, t_mirror, z)?;
    if ph == 0.0 {
        return Err(Error::domain("T0", "z = cT"));
    }
    let d = Complex64::new(1.0, params.c_tau() * k / ph);
    Ok(1.0 / (1.0 + params.mu0() * params.sigma0() * z / (2.0 * t_mirror * d)))
}

/// High-frequency form of `H` for `0 < z < cT`:
/// `-exp(i pi/4) sqrt(2 pi z^2 / (k (cT)^3 phi)) exp(i cT k phi) T0 g(ck/phi)`.
pub fn h_stationary(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    weight: Weight,
) -> Result<StationaryH> {
    if !(k > 0.0) {
        return Err(Error::invalid("k", format!("must be positive, got {k}")));
    }
    let ct = params.c() * t_mirror;
    if !(z > 0.0 && z < ct) {
        return Err(Error::domain(
            "stationary phase",
            format!("need 0 < z < cT, got z = {z}, cT = {ct}"),
        ));
    }
    let ph = phi(params, t_mirror, z)?;
    let amplitude = (2.0 * PI * z * z / (k * ct * ct * ct * ph)).sqrt();
    let phase = Complex64::new(0.0, ct * k * ph).exp();
    let g = match weight {
        Weight::Unity => Complex64::new(1.0, 0.0),
        Weight::SigmaOverSigma0 => 1.0 / Complex64::new(1.0, params.c_tau() * k / ph),
    };
    let lead = -Complex64::from_polar(1.0, FRAC_PI_4);
    Ok(StationaryH {
        value: lead * amplitude * phase * t0(params, t_mirror, k, z)? * g,
        regime_warning: ct * k < 10.0,
    })
}

/// `G(t, z, s) = 4 i pi (1 - s) / P'(s) exp(-s t / tau) exp(-s (1 - s) z / ell0)`.
pub fn plasmon_propagator(params: &PhysicalParams, t: f64, z: f64, s: Complex64) -> Result<Complex64> {
    if z < 0.0 {
        return Err(Error::invalid("z", "must be >= 0"));
    }
    let p = pprime(params, s)?;
    if p.norm() == 0.0 {
        return Err(Error::Singular {
            what: "plasmon propagator",
            at: format!("P'(s) = 0 at s = {s}"),
        });
    }
    let one_minus = 1.0 - s;
    let expo = -s * t / params.tau() - s * one_minus * z / params.ell0();
    Ok(Complex64::new(0.0, 4.0 * PI) * one_minus / p * expo.exp())
}
