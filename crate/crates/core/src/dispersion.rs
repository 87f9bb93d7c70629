//! Plasmon dispersion: the quartic `s^4 - 2 s^3 + gamma s^2 - u^2 = 0`.
//!
//! A root `s` corresponds to the complex frequency `omega = i s / tau` of a
//! mode with horizontal wavenumber `k = u / ell0`. Above the critical value
//! `u_c` the quartic has one conjugate pair (the propagating plasmon) and two
//! real roots of opposite sign (discarded as unphysical).

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::physics::PhysicalParams;

/// Default width of the band around `u_c` where roots are flagged as nearly degenerate.
pub const NEAR_DEGENERATE_MARGIN: f64 = 1e-6;

/// Threshold on `|Im s| / max(1, |s|)` separating complex from real roots.
pub const COMPLEX_THRESHOLD: f64 = 1e-8;

/// Discriminant of the quartic.
pub fn discriminant(gamma: f64, u: f64) -> f64 {
    let u2 = u * u;
    let b = 36.0 * gamma - 27.0 - 8.0 * gamma * gamma;
    let d = gamma * gamma * gamma * (1.0 - gamma);
    16.0 * u2 * (-16.0 * u2 * u2 + b * u2 + d)
}

/// Critical dimensionless wavenumber: `Delta(gamma, u) < 0` exactly for `u > u_c`.
pub fn critical_u(gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::Regime(format!(
            "critical wavenumber requires gamma in (0, 1], got {gamma}"
        )));
    }
    let b = 36.0 * gamma - 27.0 - 8.0 * gamma * gamma;
    let d = gamma * gamma * gamma * (1.0 - gamma);
    let root = (b * b + 64.0 * d).sqrt();
    // avoid cancellation when b < 0
    let u2 = if b >= 0.0 {
        (b + root) / 32.0
    } else {
        2.0 * d / (root - b)
    };
    Ok(u2.sqrt())
}

/// The four roots of the quartic at fixed `(gamma, u)`, classified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionRoots {
    pub u: f64,
    pub gamma: f64,
    pub s_plus: Complex64,
    pub s_minus: Complex64,
    pub r_pos: f64,
    pub r_neg: f64,
    /// Relative backward error `|P(s)| / (|s|^4 + 2|s|^3 + gamma|s|^2 + u^2)`
    /// for `s_plus`, `s_minus`, `r_pos`, `r_neg`.
    pub residuals: [f64; 4],
    /// Set when `u` lies within the configured margin of `u_c`.
    pub near_degenerate: bool,
}

impl DispersionRoots {
    pub fn s_r(&self) -> f64 {
        self.s_plus.re
    }

    pub fn s_i(&self) -> f64 {
        self.s_plus.im
    }

    /// `Re(s(1-s)) = s_r - s_r^2 + s_i^2`, the vertical decay rate in units of `1/ell0`.
    pub fn decay_rate(&self) -> f64 {
        let (a, b) = (self.s_plus.re, self.s_plus.im);
        a - a * a + b * b
    }

    pub fn all(&self) -> [Complex64; 4] {
        [
            self.s_plus,
            self.s_minus,
            Complex64::new(self.r_pos, 0.0),
            Complex64::new(self.r_neg, 0.0),
        ]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn poly(gamma: f64, u: f64, s: Complex64) -> Complex64 {
    // Horner: ((s - 2) s + gamma) s^2 - u^2
    ((s - 2.0) * s + gamma) * s * s - u * u
}

fn poly_deriv(gamma: f64, s: Complex64) -> Complex64 {
    ((4.0 * s - 6.0) * s + 2.0 * gamma) * s
}

/// Relative backward error of `s` as a root.
pub fn relative_residual(gamma: f64, u: f64, s: Complex64) -> f64 {
    let a = s.norm();
    let scale = a.powi(4) + 2.0 * a.powi(3) + gamma.abs() * a * a + u * u;
    poly(gamma, u, s).norm() / scale
}

fn polish(gamma: f64, u: f64, mut s: Complex64) -> Complex64 {
    let mut best = poly(gamma, u, s).norm();
    for _ in 0..4 {
        let dp = poly_deriv(gamma, s);
        if dp.norm() == 0.0 {
            break;
        }
        let next = s - poly(gamma, u, s) / dp;
        let value = poly(gamma, u, next).norm();
        if !(value < best) {
            break;
        }
        best = value;
        s = next;
    }
    s
}

fn polish_real(gamma: f64, u: f64, mut x: f64) -> f64 {
    let p = |x: f64| ((x - 2.0) * x + gamma) * x * x - u * u;
    let dp = |x: f64| ((4.0 * x - 6.0) * x + 2.0 * gamma) * x;
    let mut best = p(x).abs();
    for _ in 0..4 {
        let d = dp(x);
        if d == 0.0 {
            break;
        }
        let next = x - p(x) / d;
        let value = p(next).abs();
        if !(value < best) {
            break;
        }
        best = value;
        x = next;
    }
    x
}

/// Raw eigenvalues of the companion matrix, unpolished and unordered.
fn companion_roots(gamma: f64, u: f64) -> [Complex64; 4] {
    // monic p(s) = s^4 + a3 s^3 + a2 s^2 + a1 s + a0
    let (a3, a2, a1, a0) = (-2.0, gamma, 0.0, -u * u);
    #[rustfmt::skip]
    let m = Matrix4::new(
        -a3, -a2, -a1, -a0,
        1.0, 0.0, 0.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        0.0, 0.0, 1.0, 0.0,
    );
    let ev = m.complex_eigenvalues();
    [ev[0], ev[1], ev[2], ev[3]]
}

/// Solves and classifies the quartic for `u > u_c(gamma)`.
pub fn solve_dispersion(gamma: f64, u: f64) -> Result<DispersionRoots> {
    solve_dispersion_with(gamma, u, NEAR_DEGENERATE_MARGIN)
}

/// As [`solve_dispersion`] with an explicit near-degeneracy margin.
pub fn solve_dispersion_with(gamma: f64, u: f64, margin: f64) -> Result<DispersionRoots> {
    if !u.is_finite() || u < 0.0 {
        return Err(Error::invalid("u", format!("must be finite and >= 0, got {u}")));
    }
    let u_c = critical_u(gamma)?;
    if u <= u_c {
        return Err(Error::NoPropagatingMode { u, u_c });
    }
    let near_degenerate = u - u_c < margin;

    let raw = companion_roots(gamma, u);
    let classify_err = |reason: String| Error::Classification { gamma, u, reason };

    let mut complex = Vec::with_capacity(2);
    let mut real = Vec::with_capacity(2);
    for s in raw {
        let s = polish(gamma, u, s);
        if s.im.abs() > COMPLEX_THRESHOLD * s.norm().max(1.0) {
            complex.push(s);
        } else {
            real.push(polish_real(gamma, u, s.re));
        }
    }
    if complex.len() != 2 || real.len() != 2 {
        return Err(classify_err(format!(
            "expected one complex pair and two real roots, found {} complex",
            complex.len()
        )));
    }
    let s_plus = if complex[0].im > 0.0 {
        complex[0]
    } else {
        complex[1]
    };
    let other = if complex[0].im > 0.0 {
        complex[1]
    } else {
        complex[0]
    };
    if other.im >= 0.0 || (other.conj() - s_plus).norm() > 1e-6 * s_plus.norm() {
        return Err(classify_err("complex roots are not a conjugate pair".into()));
    }
    if s_plus.re <= 0.0 {
        return Err(classify_err(format!("Re(s+) = {} is not positive", s_plus.re)));
    }
    let (r_neg, r_pos) = if real[0] < real[1] {
        (real[0], real[1])
    } else {
        (real[1], real[0])
    };
    if !(r_neg < 0.0 && r_pos > 0.0) {
        return Err(classify_err(format!(
            "real roots {r_neg}, {r_pos} do not have opposite signs"
        )));
    }
    let s_minus = s_plus.conj();
    let residuals = [
        relative_residual(gamma, u, s_plus),
        relative_residual(gamma, u, s_minus),
        relative_residual(gamma, u, Complex64::new(r_pos, 0.0)),
        relative_residual(gamma, u, Complex64::new(r_neg, 0.0)),
    ];
    Ok(DispersionRoots {
        u,
        gamma,
        s_plus,
        s_minus,
        r_pos,
        r_neg,
        residuals,
        near_degenerate,
    })
}

/// Large-`u` approximation `1/2 + (gamma - 1)/(4u) + i sqrt(u - u_c)`.
pub fn asymptotic_root(gamma: f64, u: f64) -> Result<Complex64> {
    let u_c = critical_u(gamma)?;
    if u <= u_c {
        return Err(Error::NoPropagatingMode { u, u_c });
    }
    Ok(Complex64::new(
        0.5 + (gamma - 1.0) / (4.0 * u),
        (u - u_c).sqrt(),
    ))
}

/// `P'(s) = 2 - 4 s - 2 eta^2 / (1 - s)`.
pub fn pprime(params: &PhysicalParams, s: Complex64) -> Result<Complex64> {
    pprime_eta(params.eta(), s)
}

/// [`pprime`] for an explicit coupling `eta`.
pub fn pprime_eta(eta: f64, s: Complex64) -> Result<Complex64> {
    let one_minus = Complex64::new(1.0, 0.0) - s;
    if one_minus.norm() == 0.0 {
        return Err(Error::Singular {
            what: "P'(s)",
            at: "s = 1".into(),
        });
    }
    Ok(2.0 - 4.0 * s - 2.0 * eta * eta / one_minus)
}
