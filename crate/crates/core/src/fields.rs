//! Field-level decomposition of the refocused wave in the horizontal Fourier
//! domain.
//!
//! All fields are reported per unit `k_x`: the factor `k_x` of the unperturbed
//! horizontal field is carried symbolically and cancels in the vertical
//! component of the perturbed field.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::dispersion::solve_dispersion;
use crate::error::{Error, Result};
use crate::kernels::KernelMethod;
use crate::oscint::{h_exact, h_stationary, phi, plasmon_propagator, Weight};
use crate::physics::{PhysicalParams, SourceConfig};
use crate::quad::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldTag {
    UnperturbedPole,
    UnperturbedBranch,
    /// Time-reversed plasmonic wave.
    P,
    /// Time-reversed scattered wave.
    S,
    /// Forward-propagating wave.
    F,
    /// Mixed plasmonic-scattered wave.
    M,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::UnperturbedPole => "unperturbed_pole",
            FieldTag::UnperturbedBranch => "unperturbed_branch",
            FieldTag::P => "P",
            FieldTag::S => "S",
            FieldTag::F => "F",
            FieldTag::M => "M",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldComponent {
    pub tag: FieldTag,
    pub k: f64,
    pub z: f64,
    pub value: Complex64,
    pub t_mirror: f64,
}

/// `A1 = c^2 mu0 U / (4 pi)`.
pub fn a1(params: &PhysicalParams) -> f64 {
    params.c() * params.c() * params.mu0() * params.u_amp() / (4.0 * PI)
}

/// `A0 = 2 alpha (mu0 c^2)^2 U / (4 pi)^2`.
pub fn a0(params: &PhysicalParams) -> f64 {
    let m = params.mu0() * params.c() * params.c();
    2.0 * params.alpha() * m * m * params.u_amp() / (16.0 * PI * PI)
}

fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("k", format!("must be positive, got {k}")))
    }
}

fn h_value(
    params: &PhysicalParams,
    t_mirror: f64,
    k: f64,
    z: f64,
    weight: Weight,
    method: KernelMethod,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    match method {
        KernelMethod::Exact => Ok(h_exact(params, t_mirror, k, z, weight, spec)?.value),
        KernelMethod::Asymptotic => Ok(h_stationary(params, t_mirror, k, z, weight)?.value),
    }
}

/// Pole part of the unperturbed horizontal field on the sheet at time `T`:
/// `2 i A1 f_hat(k) Im{G(T, z0, s+)}`.
pub fn unperturbed_pole_field(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    k: f64,
) -> Result<FieldComponent> {
    check_k(k)?;
    let roots = solve_dispersion(params.gamma(), k * params.ell0())?;
    let g = plasmon_propagator(params, t_mirror, source.z0, roots.s_plus)?;
    Ok(FieldComponent {
        tag: FieldTag::UnperturbedPole,
        k,
        z: 0.0,
        value: Complex64::new(0.0, 2.0 * a1(params) * source.fhat(params, k)? * g.im),
        t_mirror,
    })
}

/// Branch-cut part of the unperturbed horizontal field on the sheet:
/// `-2 i A1 f_hat(k) Im{H(T, k, z0, 1)}`.
pub fn unperturbed_branch_field(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    k: f64,
    spec: &QuadratureSpec,
) -> Result<FieldComponent> {
    check_k(k)?;
    let h = h_exact(params, t_mirror, k, source.z0, Weight::Unity, spec)?.value;
    Ok(FieldComponent {
        tag: FieldTag::UnperturbedBranch,
        k,
        z: 0.0,
        value: Complex64::new(0.0, -2.0 * a1(params) * source.fhat(params, k)? * h.im),
        t_mirror,
    })
}

/// The four parts of the perturbed vertical field at `t = 2T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbedComponents {
    pub p: FieldComponent,
    pub s: FieldComponent,
    pub f: FieldComponent,
    pub m: FieldComponent,
}

impl PerturbedComponents {
    pub fn all(&self) -> [FieldComponent; 4] {
        [self.p, self.s, self.f, self.m]
    }

    pub fn total(&self) -> Complex64 {
        self.all().iter().map(|c| c.value).sum()
    }
}

/// Building blocks shared by the components: propagators and branch integrals
/// at the source height and the observation height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldBlocks {
    /// `sigma(i s+ / tau) = sigma0 / (1 - s+)`.
    pub sigma_s: Complex64,
    pub g_z0: Complex64,
    pub g_z: Complex64,
    /// `H(T, k, z0, 1)`.
    pub h_z0: Complex64,
    /// `H(T, k, z, sigma)`.
    pub h_z: Complex64,
    /// `A0 k^2 f_hat(k)`.
    pub scale: f64,
}

#[allow(clippy::too_many_arguments)]
pub fn field_blocks(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    k: f64,
    z: f64,
    method: KernelMethod,
    spec: &QuadratureSpec,
) -> Result<FieldBlocks> {
    check_k(k)?;
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::invalid("z", format!("must be >= 0, got {z}")));
    }
    let s = solve_dispersion(params.gamma(), k * params.ell0())?.s_plus;
    Ok(FieldBlocks {
        sigma_s: params.sigma0() / (1.0 - s),
        g_z0: plasmon_propagator(params, t_mirror, source.z0, s)?,
        g_z: plasmon_propagator(params, t_mirror, z, s)?,
        h_z0: h_value(params, t_mirror, k, source.z0, Weight::Unity, method, spec)?,
        h_z: params.sigma0() * h_value(params, t_mirror, k, z, Weight::SigmaOverSigma0, method, spec)?,
        scale: a0(params) * k * k * source.fhat(params, k)?,
    })
}

impl FieldBlocks {
    /// `A0 k^2 f Re{sigma_s G*(z0) G(z)}`.
    pub fn p(&self) -> f64 {
        self.scale * (self.sigma_s * self.g_z0.conj() * self.g_z).re
    }

    /// `A0 k^2 f Re{H*(z0, 1) H(z, sigma)}`.
    pub fn s(&self) -> f64 {
        self.scale * (self.h_z0.conj() * self.h_z).re
    }

    /// `-A0 k^2 f Re{(G*(z0) + H(z0, 1)) (sigma_s* G*(z) + H(z, sigma))}`.
    pub fn f(&self) -> f64 {
        let left = self.g_z0.conj() + self.h_z0;
        let right = self.sigma_s.conj() * self.g_z.conj() + self.h_z;
        -self.scale * (left * right).re
    }

    /// `A0 k^2 f Re{G(z0) H(z, sigma) + sigma_s G(z) H(z0, 1)}`.
    pub fn m(&self) -> f64 {
        self.scale * (self.g_z0 * self.h_z + self.sigma_s * self.g_z * self.h_z0).re
    }

    /// Factored form of the sum:
    /// `2 A0 k^2 f Im{G(z0) - H(z0, 1)} Im{sigma_s G(z) - H(z, sigma)}`.
    pub fn product_form(&self) -> f64 {
        2.0 * self.scale * (self.g_z0 - self.h_z0).im * (self.sigma_s * self.g_z - self.h_z).im
    }
}

/// `P`, `S`, `F` and `M` at `(k, z)` and `t = 2T`.
///
/// In the mixed wave the branch integral at the observation height is
/// `H(T, k, z, sigma)`, evaluated alongside the propagator at `s+`.
#[allow(clippy::too_many_arguments)]
pub fn perturbed_components(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    k: f64,
    z: f64,
    method: KernelMethod,
    spec: &QuadratureSpec,
) -> Result<PerturbedComponents> {
    let b = field_blocks(params, source, t_mirror, k, z, method, spec)?;
    let make = |tag, v: f64| FieldComponent {
        tag,
        k,
        z,
        value: Complex64::new(v, 0.0),
        t_mirror,
    };
    Ok(PerturbedComponents {
        p: make(FieldTag::P, b.p()),
        s: make(FieldTag::S, b.s()),
        f: make(FieldTag::F, b.f()),
        m: make(FieldTag::M, b.m()),
    })
}

/// Radius at which the mixed wave of wavenumber `k` is stationary in `k`:
/// the phase `cT/ell0 [(phi(w) - r/cT) k ell0 - eta sqrt(k ell0 - u_c)]`
/// gives `r = cT (phi(w) - eta / (2 sqrt(k ell0 - u_c)))`.
pub fn mixed_wave_radius(params: &PhysicalParams, t_mirror: f64, k: f64, w: f64) -> Result<f64> {
    let u_c = params.critical_u()?;
    let u = k * params.ell0();
    if u <= u_c {
        return Err(Error::NoPropagatingMode { u, u_c });
    }
    let ct = params.c() * t_mirror;
    Ok(ct * (phi(params, t_mirror, w)? - params.eta() / (2.0 * (u - u_c).sqrt())))
}

/// Localization radius of the mixed wave for a band of wavenumbers: the mean
/// of [`mixed_wave_radius`] over `k_grid`. Close to `cT phi(w)` when
/// `(w/cT)^2 << 1`.
pub fn mixed_wave_locator(params: &PhysicalParams, t_mirror: f64, k_grid: &[f64], w: f64) -> Result<f64> {
    if k_grid.is_empty() {
        return Err(Error::invalid("k_grid", "must not be empty"));
    }
    let mut sum = 0.0;
    for &k in k_grid {
        sum += mixed_wave_radius(params, t_mirror, k, w)?;
    }
    Ok(sum / k_grid.len() as f64)
}
