//! Bessel kernel `J(x) = 2 pi J0(x)` and mirror smoothing profiles.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 12.0;

fn j0_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * k);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-3) {
            break;
        }
        k += 1.0;
    }
    sum
}

/// Coefficients `c_k = prod_{j<=k} (-(2j-1)^2) / (k! 8^k)` of the Hankel expansion.
fn hankel_coeff_next(c_prev: f64, k: usize) -> f64 {
    let m = (2 * k - 1) as f64;
    c_prev * (-(m * m)) / (k as f64 * 8.0)
}

/// Hankel `P0(x), Q0(x)` truncated at the smallest term.
pub fn hankel_pq(x: f64) -> (f64, f64) {
    let mut p = 1.0;
    let mut q = 0.0;
    let mut c = 1.0;
    let mut xk = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        c = hankel_coeff_next(c, k);
        xk *= x;
        let term = c / xk;
        if term.abs() >= last {
            break;
        }
        last = term.abs();
        // (-1)^m c_{2m} / x^{2m} for P and (-1)^m c_{2m+1} / x^{2m+1} for Q
        let m = k / 2;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if last < 1e-17 {
            break;
        }
    }
    (p, q)
}

/// Hankel `P0, Q0` at a complex argument with a fixed number of terms, for
/// `|x|` large enough that 12 terms reach double precision.
pub fn hankel_pq_complex(x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut c = 1.0;
    let mut xk = Complex64::new(1.0, 0.0);
    for k in 1..=12 {
        c = hankel_coeff_next(c, k);
        xk *= x;
        let term = c / xk;
        let m = k / 2;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
    }
    (p, q)
}

/// Bessel function of the first kind of order zero.
pub fn bessel_j0(x: f64) -> f64 {
    let x = x.abs();
    if x < SERIES_LIMIT {
        j0_series(x)
    } else {
        let (p, q) = hankel_pq(x);
        let chi = x - FRAC_PI_4;
        (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
    }
}

/// `J(x) = 2 pi J0(x)`, the radial kernel of the two-dimensional inverse Fourier transform.
pub fn bessel_kernel(x: f64) -> f64 {
    2.0 * PI * bessel_j0(x)
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Smoothing profile of a finite-duration mirror: even, unit mass, supported in `[-1/2, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChiProfile {
    /// `1 + cos(2 pi v)`.
    #[default]
    RaisedCosine,
    /// Indicator of `[-1/2, 1/2]`.
    Box,
    /// `2 (1 - 2|v|)`.
    Triangle,
}

impl ChiProfile {
    pub const ALL: [ChiProfile; 3] = [
        ChiProfile::RaisedCosine,
        ChiProfile::Box,
        ChiProfile::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChiProfile::RaisedCosine => "raised_cosine",
            ChiProfile::Box => "box",
            ChiProfile::Triangle => "triangle",
        }
    }

    pub fn chi(self, v: f64) -> f64 {
        if v.abs() > 0.5 {
            return 0.0;
        }
        match self {
            ChiProfile::RaisedCosine => 1.0 + (2.0 * PI * v).cos(),
            ChiProfile::Box => 1.0,
            ChiProfile::Triangle => 2.0 * (1.0 - 2.0 * v.abs()),
        }
    }

    /// `chi_hat(u) = int exp(-i u v) chi(v) dv`, real and even.
    pub fn chi_hat(self, u: f64) -> f64 {
        let a = u.abs();
        match self {
            ChiProfile::Box => sinc(a / 2.0),
            ChiProfile::Triangle => {
                let s = sinc(a / 4.0);
                s * s
            }
            ChiProfile::RaisedCosine => {
                if a < 1.0 {
                    sinc(a / 2.0) * 4.0 * PI * PI / (4.0 * PI * PI - a * a)
                } else {
                    // 8 pi^2 sin(a/2) / (a (4 pi^2 - a^2)) with the zero at a = 2 pi factored out
                    let d = a - 2.0 * PI;
                    let h = 0.5 * sinc(d / 2.0);
                    8.0 * PI * PI * h / (a * (a + 2.0 * PI))
                }
            }
        }
    }
}

impl fmt::Display for ChiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChiProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "raised_cosine" | "raisedcosine" | "hann" => Ok(ChiProfile::RaisedCosine),
            "box" => Ok(ChiProfile::Box),
            "triangle" => Ok(ChiProfile::Triangle),
            other => Err(Error::invalid(
                "chi_profile",
                format!("unknown profile `{other}` (expected raised_cosine, box or triangle)"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, QuadratureSpec};

    #[test]
    fn j0_matches_reference_library() {
        let mut x = 0.0;
        while x <= 1.0e4 {
            let reference = libm::j0(x);
            assert!((bessel_j0(x) - reference).abs() < 1e-10, "x = {x}");
            x += if x < 50.0 { 0.0137 } else { 1.37 };
        }
        for x in [11.999, 12.0, 12.001, 25.0, 99.5, 9999.0] {
            assert!((bessel_j0(x) - libm::j0(x)).abs() < 1e-10, "x = {x}");
        }
    }

    #[test]
    fn kernel_special_values() {
        assert_eq!(bessel_kernel(0.0), 2.0 * PI);
        assert!(bessel_kernel(2.404825557695773).abs() < 1e-5);
        for x in [20.0, 50.0, 300.0] {
            let asym = 2.0 * PI * (2.0 / (PI * x)).sqrt() * (x - FRAC_PI_4).cos();
            let env = 2.0 * PI * (2.0 / (PI * x)).sqrt();
            assert!((bessel_kernel(x) - asym).abs() < 0.01 * env, "x = {x}");
        }
    }

    #[test]
    fn series_region_matches_direct_sum() {
        for i in 0..=100 {
            let x = i as f64 * 0.1;
            let mut sum = 0.0;
            let mut term = 1.0;
            for k in 0..60 {
                if k > 0 {
                    term *= -(x * x / 4.0) / ((k * k) as f64);
                }
                sum += term;
            }
            assert!((bessel_j0(x) - sum).abs() < 1e-10);
        }
    }

    #[test]
    fn complex_hankel_matches_real() {
        for x in [25.0, 40.0, 1000.0] {
            let (p, q) = hankel_pq(x);
            let (pc, qc) = hankel_pq_complex(Complex64::new(x, 0.0));
            assert!((pc.re - p).abs() < 1e-13 && (qc.re - q).abs() < 1e-13, "{x}: {} {}", pc.re - p, qc.re - q);
        }
    }

    #[test]
    fn chi_profiles_have_unit_mass() {
        let spec = QuadratureSpec::default();
        for p in ChiProfile::ALL {
            let mass = integrate(|v| Complex64::new(p.chi(v), 0.0), &[-0.5, 0.0, 0.5], &spec)
                .unwrap()
                .value
                .re;
            assert!((mass - 1.0).abs() < 1e-12, "{p}");
            assert_eq!(p.chi(0.3), p.chi(-0.3));
            assert_eq!(p.chi(0.51), 0.0);
            assert_eq!(p.chi_hat(0.0), 1.0);
        }
    }

    #[test]
    fn chi_hat_matches_quadrature() {
        let spec = QuadratureSpec {
            rel_tol: 1e-12,
            abs_tol: 1e-15,
            ..QuadratureSpec::default()
        };
        let knots: Vec<f64> = (0..=40).map(|i| -0.5 + i as f64 / 40.0).collect();
        for p in ChiProfile::ALL {
            for i in 0..=400 {
                let u = i as f64 * 0.25;
                let q = integrate(
                    |v| Complex64::new(0.0, -u * v).exp() * p.chi(v),
                    &knots,
                    &spec,
                )
                .unwrap()
                .value;
                assert!(q.im.abs() < 1e-12);
                assert!((q.re - p.chi_hat(u)).abs() < 1e-8, "{p} u={u}");
                assert!(p.chi_hat(u).abs() <= 1.0);
                assert_eq!(p.chi_hat(u), p.chi_hat(-u));
            }
        }
    }

    #[test]
    fn chi_hat_special_values() {
        assert!(ChiProfile::Box.chi_hat(2.0 * PI).abs() < 1e-15);
        assert!((ChiProfile::RaisedCosine.chi_hat(2.0 * PI) - 0.5).abs() < 1e-15);
        // pinned by adaptive quadrature of the defining integral
        let v = ChiProfile::RaisedCosine.chi_hat(5.0);
        assert!((v - 0.6527435214301445).abs() < 1e-13, "{v}");
        for p in ChiProfile::ALL {
            assert!(p.chi_hat(1e6).abs() < 1e-5);
        }
    }

    #[test]
    fn profile_names_round_trip() {
        for p in ChiProfile::ALL {
            assert_eq!(p.name().parse::<ChiProfile>().unwrap(), p);
        }
        assert!("gauss".parse::<ChiProfile>().is_err());
    }
}
