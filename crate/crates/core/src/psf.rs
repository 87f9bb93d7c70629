//! Point-spread functionals `J_P(r, z)` and `J_S(r, z)`.
//!
//! Both are radial transforms `J(r, z) = int J(kr) K(k, z) f_hat(k) k dk`
//! with `J(x) = 2 pi J0(x)`. The `1/(2 pi)^2` of the two-dimensional inverse
//! Fourier transform is left out so that values match the printed asymptotic
//! forms and characteristic values.

use std::cell::RefCell;
use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels::{kernel_p_exact, kernel_p_regularized};
use crate::oscint::{geometry, phi, GeometryFrame};
use crate::physics::{PhysicalParams, SourceConfig};
use crate::quad::{integrate, panels_of_length, QuadratureSpec};
use crate::specfun::{bessel_kernel, hankel_pq_complex, ChiProfile};

/// Which wave a functional describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsfKind {
    Plasmonic,
    Scattered,
}

impl PsfKind {
    pub fn name(self) -> &'static str {
        match self {
            PsfKind::Plasmonic => "plasmonic",
            PsfKind::Scattered => "scattered",
        }
    }
}

/// Evaluation path of the regularized plasmonic functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularizedPath {
    /// Exact roots with the blurring factor inside the `k` integral.
    Exact,
    /// Simplified kernel; the large-duration closed form once
    /// `dt >= 10 tau sqrt((z+z0)/ell0)`.
    Asymptotic,
}

/// A functional sampled on an `(r, z)` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PsfField {
    pub r: Vec<f64>,
    pub z: Vec<f64>,
    /// Row-major by height: `values[j * r.len() + i]` is at `(r[i], z[j])`.
    pub values: Vec<f64>,
    pub kind: PsfKind,
    /// Reference value used by [`PsfField::normalized`].
    pub normalization: f64,
}

impl PsfField {
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.r.len() + i]
    }

    pub fn normalized(&self, i: usize, j: usize) -> f64 {
        self.at(i, j) / self.normalization
    }

    /// Largest `|value|` on the grid.
    pub fn peak_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Evaluates `f(r, z)` on the tensor grid in parallel; the output order is fixed.
pub fn grid<F>(r: &[f64], z: &[f64], kind: PsfKind, normalization: Option<f64>, f: F) -> Result<PsfField>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    let points: Vec<(f64, f64)> = z.iter().flat_map(|&zj| r.iter().map(move |&ri| (ri, zj))).collect();
    let values = points
        .par_iter()
        .map(|&(ri, zj)| {
            let v = f(ri, zj)?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Overflow { what: "point-spread functional" })
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    let mut field = PsfField {
        r: r.to_vec(),
        z: z.to_vec(),
        values,
        kind,
        normalization: 1.0,
    };
    field.normalization = match normalization {
        Some(n) => n,
        None => field.peak_abs(),
    };
    if !(field.normalization.is_finite() && field.normalization != 0.0) {
        return Err(Error::domain("normalization", "reference value is zero or not finite"));
    }
    Ok(field)
}

/// Runs a fallible integrand through the quadrature, returning the first integrand error.
fn integrate_fallible<F>(f: F, breakpoints: &[f64], spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let out = integrate(
        |x| match f(x) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Complex64::new(f64::NAN, 0.0)
            }
        },
        breakpoints,
        spec,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(out?.value)
}

fn check_point(r: f64, z: f64) -> Result<()> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::invalid("r", format!("must be >= 0, got {r}")));
    }
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::invalid("z", format!("must be >= 0, got {z}")));
    }
    Ok(())
}

/// Upper integration limit where `exp(-(u - u_c)(z+z0)/ell0)` has dropped below `1e-18`.
fn plasmonic_k_limit(params: &PhysicalParams, source: &SourceConfig, z: f64) -> Result<f64> {
    let h = (z + source.z0) / params.ell0();
    let k_hi = source.k_min(params)? + 42.0 / (h * params.ell0());
    Ok(source.k_max().map_or(k_hi, |k_max| k_hi.min(k_max)))
}

fn radial_panels(k_lo: f64, k_hi: f64, r: f64) -> Vec<f64> {
    let mut len = (k_hi - k_lo) / 8.0;
    if r > 0.0 {
        len = len.min(PI / r);
    }
    panels_of_length(k_lo, k_hi, len)
}

fn plasmonic_transform<F>(
    params: &PhysicalParams,
    source: &SourceConfig,
    r: f64,
    z: f64,
    laplacian: bool,
    spec: &QuadratureSpec,
    kernel: F,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_point(r, z)?;
    source.validate()?;
    let k_lo = source.k_min(params)?;
    let k_hi = plasmonic_k_limit(params, source, z)?;
    if k_hi <= k_lo {
        return Ok(0.0);
    }
    let v = integrate_fallible(
        |k| {
            let lap = if laplacian { -k * k } else { 1.0 };
            Ok(Complex64::new(bessel_kernel(k * r) * kernel(k)? * k * lap, 0.0))
        },
        &radial_panels(k_lo, k_hi, r),
        spec,
    )?;
    Ok(v.re)
}

/// `J_P(r, z)` with the exact complex roots.
pub fn jp_exact(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    plasmonic_transform(params, source, r, z, false, spec, |k| {
        kernel_p_exact(params, t_mirror, k, z, source.z0)
    })
}

/// `Q(z, k) = (k + xi u_c h) / (k + (xi - 1) u_c h)` with `h = (z+z0)/ell0`.
pub fn q_factor(u_c: f64, xi: f64, h: f64, k: f64) -> f64 {
    (k + xi * u_c * h) / (k + (xi - 1.0) * u_c * h)
}

/// `pi^2 exp(-T/tau) exp(-(1 + 4 (xi-1) u_c)(z+z0)/4 ell0) / (2 ell0 (z+z0))`.
fn jp_prefactor(params: &PhysicalParams, source: &SourceConfig, t_mirror: f64, z: f64) -> Result<f64> {
    let u_c = params.critical_u()?;
    let zz = z + source.z0;
    let expo = -t_mirror / params.tau() - (1.0 + 4.0 * (source.xi - 1.0) * u_c) * zz / (4.0 * params.ell0());
    Ok(PI * PI * expo.exp() / (2.0 * params.ell0() * zz))
}

/// Simplified `J_P` valid for `eta^2 << 1`: the prefactor times
/// `int_0^inf J((k + xi u_c h) r / (z+z0)) Q(z, k) exp(-k) dk`.
pub fn jp_asymptotic(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    jp_asymptotic_blurred(params, source, t_mirror, r, z, None, spec)
}

fn jp_asymptotic_blurred(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    blur: Option<(f64, ChiProfile)>,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_point(r, z)?;
    source.validate()?;
    let u_c = params.critical_u()?;
    let zz = z + source.z0;
    let h = zz / params.ell0();
    let xi = source.xi;
    let mut v_hi: f64 = 45.0;
    if let Some(k_max) = source.k_max() {
        // k_max = v/(z+z0) + xi k_c
        v_hi = v_hi.min((k_max - source.k_min(params)?) * zz);
        if v_hi <= 0.0 {
            return Ok(0.0);
        }
    }
    let mut len: f64 = v_hi / 9.0;
    if r > 0.0 {
        len = len.min(PI * zz / r);
    }
    let f = |v: f64| {
        let mut w = bessel_kernel((v + xi * u_c * h) * r / zz) * q_factor(u_c, xi, h, v) * (-v).exp();
        if let Some((dt, profile)) = blur {
            w *= profile.chi_hat(2.0 * dt * (v / h + (xi - 1.0) * u_c).sqrt() / params.tau());
        }
        Ok(Complex64::new(w, 0.0))
    };
    let v = integrate_fallible(f, &panels_of_length(0.0, v_hi, len), spec)?;
    Ok(jp_prefactor(params, source, t_mirror, z)? * v.re)
}

/// Printed lower and upper bounds on `J_P(0, z)`:
/// `pi^3 exp(-T/tau) exp(-(1 + 4 (xi-1) u_c)(z+z0)/4 ell0) / (ell0 (z+z0))` times `1` and `xi/(xi-1)`.
pub fn carac_p_bounds(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    z: f64,
) -> Result<(f64, f64)> {
    source.validate()?;
    let lo = 2.0 * PI * jp_prefactor(params, source, t_mirror, z)?;
    Ok((lo, lo * source.xi / (source.xi - 1.0)))
}

/// Characteristic scattered value `2 pi^3 z0^2 / ((cT)^3 c tau)` near `(0, z0)`.
pub fn carac_s(params: &PhysicalParams, source: &SourceConfig, t_mirror: f64) -> Result<f64> {
    source.validate()?;
    let ct = params.c() * t_mirror;
    Ok(2.0 * PI.powi(3) * source.z0 * source.z0 / (ct.powi(3) * params.c_tau()))
}

/// Knots `0, s/4, s/2, s, 2s, ...` up to `limit` for a tail whose finest scale is `s`.
fn tail_knots(scale: f64, limit: f64) -> Vec<f64> {
    let mut knots = vec![0.0];
    let mut x = 0.25 * scale.min(limit);
    while x < limit {
        knots.push(x);
        x *= 2.0;
    }
    knots.push(limit);
    knots
}

/// `int_K^inf amp(k) exp(i omega k) dk` along `k = K + i sgn(omega) t`.
fn rotated_tail<A>(k0: f64, omega: f64, amp: A, spec: &QuadratureSpec) -> Result<Complex64>
where
    A: Fn(Complex64) -> Complex64,
{
    let dir = if omega >= 0.0 { 1.0 } else { -1.0 };
    let limit = if omega == 0.0 {
        1e12 * k0
    } else {
        (60.0 / omega.abs()).min(1e12 * k0)
    };
    let scale = if omega == 0.0 { k0 } else { k0.min(1.0 / omega.abs()) };
    let jac = Complex64::new(0.0, dir);
    let f = |t: f64| {
        let k = Complex64::new(k0, dir * t);
        amp(k) * (Complex64::new(0.0, omega) * k).exp() * jac
    };
    Ok(integrate(f, &tail_knots(scale, limit), spec)?.value)
}

struct ScatteredGeometry {
    c_factor: f64,
    /// `cT (phi(z) - phi(z0))`.
    delta: f64,
    /// `c tau / phi(z)`.
    b_rate: f64,
}

fn scattered_geometry(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    z: f64,
) -> Result<ScatteredGeometry> {
    let frame = GeometryFrame {
        t_mirror,
        z,
        z0: source.z0,
        r: 0.0,
    };
    let g = geometry(params, &frame)?;
    if g.phi_z == 0.0 {
        return Err(Error::domain("J_S", "z = cT"));
    }
    Ok(ScatteredGeometry {
        c_factor: g.c_factor,
        delta: params.c() * t_mirror * g.delta_phi,
        b_rate: params.c_tau() / g.phi_z,
    })
}

/// Simplified `J_S(r, z) = C(z) int J(kr) (cos a + b sin a) / (1 + b^2) dk`,
/// `a = cT k (phi(z) - phi(z0))`, `b = c tau k / phi(z)`, for `0 < z < cT`.
///
/// The integrand is `J(kr) Re{exp(i a) / (1 + i b)}`. Beyond a cutoff the
/// Bessel factor is split into Hankel waves and each exponential is
/// integrated on a rotated ray, so conditionally convergent cases (such as
/// `r = 0` near `z = z0`) come out without truncation error. At `r = 0,
/// z = z0` the sine part vanishes identically and the result is the mean of
/// the one-sided limits.
pub fn js_asymptotic(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    scattered_transform(params, source, t_mirror, r, z, false, None, spec)
}

/// Argument of `chi_hat` beyond which each profile's envelope is below `1e-6`.
fn blur_extent(profile: ChiProfile) -> f64 {
    match profile {
        ChiProfile::RaisedCosine => 500.0,
        ChiProfile::Triangle => 4000.0,
        ChiProfile::Box => 2.0e6,
    }
}

const MAX_RADIAL_PANELS: f64 = 2.0e6;

/// `J_S` for a mirror of duration `dt`: the simplified integrand times
/// `chi_hat(c dt k (phi(z) + phi(z0)))`, integrated on the real axis up to
/// where the blurring envelope falls below `1e-6`.
#[allow(clippy::too_many_arguments)]
pub fn js_regularized(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    dt: f64,
    profile: ChiProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(dt >= 0.0 && dt.is_finite()) {
        return Err(Error::invalid("dt", format!("must be >= 0, got {dt}")));
    }
    let blur = (dt > 0.0).then_some((dt, profile));
    scattered_transform(params, source, t_mirror, r, z, false, blur, spec)
}

#[allow(clippy::too_many_arguments)]
fn scattered_transform(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    laplacian: bool,
    blur: Option<(f64, ChiProfile)>,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_point(r, z)?;
    source.validate()?;
    let ct = params.c() * t_mirror;
    if !(z > 0.0 && z < ct && source.z0 < ct) {
        return Err(Error::domain(
            "J_S",
            format!("need 0 < z < cT and z0 < cT, got z = {z}, z0 = {}, cT = {ct}", source.z0),
        ));
    }
    let geo = scattered_geometry(params, source, t_mirror, z)?;
    let (delta, b_rate) = (geo.delta, geo.b_rate);
    let k_lo = source.k_min(params)?;
    let blur_rate = match blur {
        Some((dt, _)) => {
            params.c() * dt * (phi(params, t_mirror, z)? + phi(params, t_mirror, source.z0)?)
        }
        None => 0.0,
    };
    // Re{exp(i delta k) / (1 + i b)} with the optional -k^2 and blurring
    let f = |k: f64| {
        let lap = if laplacian { -k * k } else { 1.0 };
        let w = Complex64::new(0.0, delta * k).exp() / Complex64::new(1.0, b_rate * k);
        let chi = blur.map_or(1.0, |(_, profile)| profile.chi_hat(blur_rate * k));
        bessel_kernel(k * r) * w.re * lap * chi
    };

    let mut k_end = source.k_max();
    if let Some((_, profile)) = blur {
        let limit = blur_extent(profile) / blur_rate;
        k_end = Some(k_end.map_or(limit, |k| k.min(limit)));
    }
    if let Some(k_end) = k_end {
        if k_end <= k_lo {
            return Ok(0.0);
        }
        let len = (PI / (r + delta.abs()).max(1e-300)).min((k_end - k_lo) / 8.0);
        if (k_end - k_lo) / len > MAX_RADIAL_PANELS {
            return Err(Error::domain(
                "J_S",
                "spectral range too wide for direct quadrature (shorten the band or lengthen dt)",
            ));
        }
        let v = integrate(|k| Complex64::new(f(k), 0.0), &panels_of_length(k_lo, k_end, len), spec)?;
        return Ok(geo.c_factor * v.value.re);
    }
    if laplacian {
        return Err(Error::domain(
            "E_z (scattered)",
            "the spectral Laplacian diverges without a band-limited source (set k_max)",
        ));
    }

    let k_cut = if r > 0.0 { (2.0 * k_lo).max(30.0 / r) } else { 2.0 * k_lo };
    let len = (PI / (r + delta.abs()).max(1e-300)).min((k_cut - k_lo) / 8.0);
    let centre = integrate(|k| Complex64::new(f(k), 0.0), &panels_of_length(k_lo, k_cut, len), spec)?
        .value
        .re;

    let tail = if r == 0.0 {
        if delta == 0.0 {
            // Re{1/(1 + i b)} = 1/(1 + b^2)
            2.0 * PI * (0.5 * PI - (b_rate * k_cut).atan()) / b_rate
        } else {
            let g = |k: Complex64| 1.0 / (1.0 + Complex64::new(0.0, b_rate) * k);
            2.0 * PI * rotated_tail(k_cut, delta, g, spec)?.re
        }
    } else {
        // J(kr) F(k) = (2 pi / 4) sum over Hankel waves and conjugate weights
        let mut sum = Complex64::new(0.0, 0.0);
        for s1 in [1.0, -1.0] {
            for s2 in [1.0, -1.0] {
                let omega = s1 * r + s2 * delta;
                let amp = |k: Complex64| {
                    let x = k * r;
                    let (p, q) = hankel_pq_complex(x);
                    let lead = (2.0 / (PI * x)).sqrt() * (p + Complex64::new(0.0, s1) * q);
                    let g = 1.0 / (1.0 + Complex64::new(0.0, s2 * b_rate) * k);
                    lead * Complex64::from_polar(1.0, -s1 * FRAC_PI_4) * g
                };
                sum += rotated_tail(k_cut, omega, amp, spec)?;
            }
        }
        0.5 * PI * sum.re
    };
    Ok(geo.c_factor * (centre + tail))
}

/// Amplitude `A = -2 alpha sigma0 (mu0 c^2)^2 U / (4 pi)^2` of the refocused field.
pub fn field_amplitude(params: &PhysicalParams) -> f64 {
    let m = params.mu0() * params.c() * params.c();
    -2.0 * params.alpha() * params.sigma0() * m * m * params.u_amp() / (16.0 * PI * PI)
}

/// `E_z(2T, r, z) = A Lap_par J` with the horizontal Laplacian applied
/// spectrally (a factor `-k^2` in the radial integrand).
///
/// The plasmonic functional uses the exact roots; the scattered one uses the
/// simplified form and needs a band-limited source.
pub fn ez_from_kernel(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    kind: PsfKind,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let lap = match kind {
        PsfKind::Plasmonic => plasmonic_transform(params, source, r, z, true, spec, |k| {
            kernel_p_exact(params, t_mirror, k, z, source.z0)
        })?,
        PsfKind::Scattered => scattered_transform(params, source, t_mirror, r, z, true, None, spec)?,
    };
    Ok(field_amplitude(params) * lap)
}

/// Resolution scales predicted by the asymptotic analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionPredictors {
    /// `xi u_c (z+z0) / ell0`.
    pub zeta: f64,
    /// `z + z0` when `zeta <= 1`, `ell0` beyond.
    pub horizontal_p: f64,
    pub horizontal_s: f64,
    /// `sqrt(z0^2 + 2 cT ell0) - z0`.
    pub vertical_s: f64,
}

pub fn resolution_predictors(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    z: f64,
) -> Result<ResolutionPredictors> {
    source.validate()?;
    if !(z >= 0.0 && t_mirror > 0.0) {
        return Err(Error::invalid("z", "need z >= 0 and T > 0"));
    }
    let l = params.ell0();
    let zeta = source.xi * params.critical_u()? * (z + source.z0) / l;
    let z0 = source.z0;
    Ok(ResolutionPredictors {
        zeta,
        horizontal_p: if zeta <= 1.0 { z + z0 } else { l },
        horizontal_s: l,
        vertical_s: (z0 * z0 + 2.0 * params.c() * t_mirror * l).sqrt() - z0,
    })
}

/// `J_P` for a mirror of duration `dt` with profile `chi`.
///
/// The asymptotic path inserts `chi_hat(2 dt sqrt(k ell0/(z+z0) + (xi-1) u_c) / tau)`
/// in the simplified integral; once `dt >= 10 tau sqrt((z+z0)/ell0)` it
/// switches to the large-duration form
/// `pi^2 tau^2 e^{..} / (2 ell0^2 dt^2) int_0^inf J((k tau^2/(ell0 dt^2) + xi u_c/ell0) r) Q exp(-v) chi_hat(2 sqrt k) dk`,
/// with `v = k (z+z0) tau^2 / (ell0 dt^2)`.
#[allow(clippy::too_many_arguments)]
pub fn jp_regularized(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    dt: f64,
    profile: ChiProfile,
    path: RegularizedPath,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(dt >= 0.0 && dt.is_finite()) {
        return Err(Error::invalid("dt", format!("must be >= 0, got {dt}")));
    }
    match path {
        RegularizedPath::Exact => plasmonic_transform(params, source, r, z, false, spec, |k| {
            kernel_p_regularized(params, t_mirror, k, z, source.z0, dt, profile)
        }),
        RegularizedPath::Asymptotic => {
            let h = (z + source.z0) / params.ell0();
            if dt < 10.0 * params.tau() * h.sqrt() {
                jp_asymptotic_blurred(params, source, t_mirror, r, z, Some((dt, profile)), spec)
            } else {
                jp_large_dt(params, source, t_mirror, r, z, dt, profile, spec)
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn jp_large_dt(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    dt: f64,
    profile: ChiProfile,
    spec: &QuadratureSpec,
) -> Result<f64> {
    check_point(r, z)?;
    source.validate()?;
    let u_c = params.critical_u()?;
    let l = params.ell0();
    let h = (z + source.z0) / l;
    let ratio = (params.tau() / dt).powi(2);
    let xi = source.xi;
    // k = w^2 / 4 turns chi_hat(2 sqrt k) dk into chi_hat(w) w/2 dw
    let f = |w: f64| {
        let k = 0.25 * w * w;
        let v = k * h * ratio;
        let wave = (k * ratio + xi * u_c) * r / l;
        Complex64::new(
            bessel_kernel(wave) * q_factor(u_c, xi, h, v) * (-v).exp() * profile.chi_hat(w) * 0.5 * w,
            0.0,
        )
    };
    // exp(-v) bounds the range: v = w^2 h ratio / 4 <= 45
    let w_hi = (180.0 / (h * ratio)).sqrt();
    let mut len: f64 = 2.0 * PI;
    if r > 0.0 {
        // the Bessel phase grows like w^2 r ratio / (4 ell0)
        len = len.min(PI * l / (0.5 * w_hi * ratio * r));
    }
    let v = integrate(f, &panels_of_length(0.0, w_hi, len), spec)?;
    let u_c4 = -t_mirror / params.tau() - (1.0 + 4.0 * (xi - 1.0) * u_c) * h / 4.0;
    Ok(PI * PI * ratio * u_c4.exp() / (2.0 * l * l) * v.value.re)
}

/// Convenience: `J_P` or `J_S` by kind, with the exact roots for the plasmonic wave.
pub fn functional(
    params: &PhysicalParams,
    source: &SourceConfig,
    t_mirror: f64,
    r: f64,
    z: f64,
    kind: PsfKind,
    spec: &QuadratureSpec,
) -> Result<f64> {
    match kind {
        PsfKind::Plasmonic => jp_exact(params, source, t_mirror, r, z, spec),
        PsfKind::Scattered => js_asymptotic(params, source, t_mirror, r, z, spec),
    }
}

/// Smallest `r > 0` at which a sampled profile changes sign, by linear interpolation.
pub fn first_zero(r: &[f64], values: &[f64]) -> Option<f64> {
    r.windows(2)
        .zip(values.windows(2))
        .find(|(_, v)| v[0] != 0.0 && v[0].signum() != v[1].signum())
        .map(|(x, v)| x[0] + (x[1] - x[0]) * v[0] / (v[0] - v[1]))
}

/// First positive zero of `J0`.
pub const J0_FIRST_ZERO: f64 = 2.404_825_557_695_773;
