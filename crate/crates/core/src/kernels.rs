//! Time-reversal kernels `K_P(k, z)` and `K_S(k, z)`, their simplified forms
//! and the finite-duration (regularized) variants.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dispersion::{pprime, solve_dispersion, DispersionRoots};
use crate::error::{Error, Result};
use crate::oscint::{h_exact, h_stationary, phi, Weight};
use crate::physics::PhysicalParams;
use crate::quad::QuadratureSpec;
use crate::specfun::ChiProfile;

/// How the branch-cut integrals of `K_S` are evaluated, or whether the
/// plasmonic kernel uses the exact roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KernelMethod {
    #[default]
    Exact,
    Asymptotic,
}

/// Mirror time, strength and duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorConfig {
    pub t_mirror: f64,
    pub alpha: f64,
    /// Duration `dt >= 0`; zero is the instantaneous mirror.
    pub dt: f64,
    pub chi: ChiProfile,
}

impl MirrorConfig {
    pub fn instantaneous(t_mirror: f64, alpha: f64) -> Self {
        Self {
            t_mirror,
            alpha,
            dt: 0.0,
            chi: ChiProfile::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_mirror > 0.0 && self.t_mirror.is_finite()) {
            return Err(Error::invalid("T", format!("must be positive, got {}", self.t_mirror)));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::invalid("alpha", "must be positive"));
        }
        if !(self.dt >= 0.0 && self.dt.is_finite()) {
            return Err(Error::invalid("dt", format!("must be >= 0, got {}", self.dt)));
        }
        Ok(())
    }
}

/// One kernel evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSample {
    pub k: f64,
    pub z: f64,
    pub value: f64,
    pub method: KernelMethod,
    pub regularized: Option<f64>,
}

fn check_heights(z: f64, z0: f64) -> Result<()> {
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::invalid("z", format!("must be >= 0, got {z}")));
    }
    if !(z0 >= 0.0 && z0.is_finite()) {
        return Err(Error::invalid("z0", format!("must be >= 0, got {z0}")));
    }
    Ok(())
}

/// `K_P` from pre-computed roots.
pub fn kernel_p_from_roots(
    params: &PhysicalParams,
    roots: &DispersionRoots,
    t_mirror: f64,
    z: f64,
    z0: f64,
) -> Result<f64> {
    check_heights(z, z0)?;
    let s = roots.s_plus;
    let (sr, si) = (s.re, s.im);
    let p = pprime(params, s)?;
    let phase = Complex64::new(0.0, si * (2.0 * sr - 1.0) * (z0 - z) / params.ell0()).exp();
    let num = ((1.0 - s) * phase).re;
    let decay = (-2.0 * sr * t_mirror / params.tau() - roots.decay_rate() * (z + z0) / params.ell0()).exp();
    Ok(num / p.norm_sqr() * 16.0 * PI * PI * decay)
}

/// `K_P(k, z)` with the exact complex root `s+`.
pub fn kernel_p_exact(params: &PhysicalParams, t_mirror: f64, k: f64, z: f64, z0: f64) -> Result<f64> {
    let roots = solve_dispersion(params.gamma(), k * params.ell0())?;
    kernel_p_from_roots(params, &roots, t_mirror, z, z0)
}

/// `16 pi^2 exp(-T/tau) exp(-(z+z0)/4 ell0) exp(-(u-u_c)(z+z0)/ell0) / (32 (u - u_c))`.
///
/// Diverges like `1/(u - u_c)` at the threshold; callers integrate through it.
pub fn kernel_p_asymptotic(params: &PhysicalParams, t_mirror: f64, k: f64, z: f64, z0: f64) -> Result<f64> {
    check_heights(z, z0)?;
    let u_c = params.critical_u()?;
    let u = k * params.ell0();
    if u <= u_c {
        return Err(Error::NoPropagatingMode { u, u_c });
    }
    let h = (z + z0) / params.ell0();
    let du = u - u_c;
    Ok(16.0 * PI * PI * (-t_mirror / params.tau() - h / 4.0 - du * h).exp() / (32.0 * du))
}

/// `K_S(k, z) = Re{ H*(T, k, z0, 1) H(T, k, z, sigma/sigma0) }`.
pub fn kernel_s(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    z0: f64,
    method: KernelMethod,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_heights(z, z0)?;
    let (h0, hz) = match method {
        KernelMethod::Exact => (
            h_exact(params, t_mirror, k, z0, Weight::Unity, spec)?.value,
            h_exact(params, t_mirror, k, z, Weight::SigmaOverSigma0, spec)?.value,
        ),
        KernelMethod::Asymptotic => (
            h_stationary(params, t_mirror, k, z0, Weight::Unity)?.value,
            h_stationary(params, t_mirror, k, z, Weight::SigmaOverSigma0)?.value,
        ),
    };
    Ok((h0.conj() * hz).re)
}

/// `K_P(k, z) chi_hat(2 dt s_i(k) / tau)`.
pub fn kernel_p_regularized(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    z0: f64,
    dt: f64,
    profile: ChiProfile,
) -> Result<f64> {
    if !(dt >= 0.0) {
        return Err(Error::invalid("dt", "must be >= 0"));
    }
    let roots = solve_dispersion(params.gamma(), k * params.ell0())?;
    let kp = kernel_p_from_roots(params, &roots, t_mirror, z, z0)?;
    Ok(kp * profile.chi_hat(2.0 * dt * roots.s_i() / params.tau()))
}

/// Blurring factor of the scattered kernel, `chi_hat(c dt k (phi(z) + phi(z0)))`.
pub fn scattered_blur(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    z0: f64,
    dt: f64,
    profile: ChiProfile,
) -> Result<f64> {
    let arg = params.c() * dt * k * (phi(params, t_mirror, z)? + phi(params, t_mirror, z0)?);
    Ok(profile.chi_hat(arg))
}

/// `K_S(k, z) chi_hat(c dt k (phi(z) + phi(z0)))`.
#[allow(clippy::too_many_arguments)]
pub fn kernel_s_regularized(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    z0: f64,
    dt: f64,
    profile: ChiProfile,
    method: KernelMethod,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(dt >= 0.0) {
        return Err(Error::invalid("dt", "must be >= 0"));
    }
    let blur = scattered_blur(params, t_mirror, k, z, z0, dt, profile)?;
    Ok(kernel_s(params, t_mirror, k, z, z0, method, spec)? * blur)
}

/// Evaluates a kernel and tags the sample.
pub fn sample<F>(k: f64, z: f64, method: KernelMethod, regularized: Option<f64>, f: F) -> Result<KernelSample>
where
    F: FnOnce() -> Result<f64>,
{
    let value = f()?;
    if !value.is_finite() {
        return Err(Error::Overflow { what: "kernel" });
    }
    Ok(KernelSample {
        k,
        z,
        value,
        method,
        regularized,
    })
}
