use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use plasmon_itm::dispersion::{critical_u, solve_dispersion};
use plasmon_itm::kernels::kernel_p_exact;
use plasmon_itm::psf;
use plasmon_itm::quad::{integrate, panels_of_length, uniform_breakpoints};
use plasmon_itm::{PhysicalParams, QuadratureSpec, SourceConfig};

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn roots_are_backward_stable(gamma in 0.5..1.0f64, t in 1e-3..1.0f64) {
        let uc = critical_u(gamma).unwrap();
        let u = uc + t * t * 100.0;
        let r = solve_dispersion(gamma, u).unwrap();
        prop_assert!(r.max_residual() < 1e-12);
        prop_assert!(r.s_plus.im > 0.0 && r.decay_rate() > 0.0);
    }

    #[test]
    fn plasmonic_kernel_is_positive_and_decays_with_height(k in 0.3..20.0f64, h in 0.1..5.0f64) {
        let p = PhysicalParams::figure_set();
        let l = p.ell0();
        let kc = p.critical_k().unwrap();
        let k = kc + k / l;
        let a = kernel_p_exact(&p, p.tau(), k, 0.0, h * l).unwrap();
        let b = kernel_p_exact(&p, p.tau(), k, 0.5 * l, h * l).unwrap();
        prop_assert!(a > 0.0 && b > 0.0 && b < a);
    }
}

/// The radial reduction agrees with the two-dimensional transform evaluated
/// off-axis, with the angular integral done by quadrature.
#[test]
fn radial_reduction_matches_two_dimensional_transform() {
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let s = SourceConfig::new(2.0 * l, 2.0).unwrap();
    let t = p.tau();
    let spec = QuadratureSpec::default().with_rel_tol(1e-10);
    let (r, angle) = (1.5 * l, 0.7f64);
    let (x, y) = (r * angle.cos(), r * angle.sin());
    let k_lo = s.k_min(&p).unwrap();
    let h = (s.z0) / l;
    let k_hi = k_lo + 60.0 / (h * l);
    let theta_knots = uniform_breakpoints(0.0, 2.0 * PI, 16);
    let two_d = integrate(
        |k| {
            let ang = integrate(
                |th: f64| Complex64::new(0.0, k * (x * th.cos() + y * th.sin())).exp(),
                &theta_knots,
                &spec,
            )
            .unwrap()
            .value;
            ang * kernel_p_exact(&p, t, k, 0.0, s.z0).unwrap() * k
        },
        &panels_of_length(k_lo, k_hi, (k_hi - k_lo) / 40.0),
        &spec,
    )
    .unwrap()
    .value;
    let radial = psf::jp_exact(&p, &s, t, r, 0.0, &spec).unwrap();
    assert!(two_d.im.abs() < 1e-8 * radial.abs());
    assert!((two_d.re - radial).abs() < 1e-6 * radial.abs(), "{} vs {radial}", two_d.re);
}

#[test]
fn scattered_peak_matches_characteristic_value() {
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let s = SourceConfig::new(10.0 * l, 2.0).unwrap();
    let t = 50.0 * l / p.c();
    let carac = psf::carac_s(&p, &s, t).unwrap();
    let spec = QuadratureSpec::default();
    let below = psf::js_asymptotic(&p, &s, t, 0.0, s.z0 - 1e-3 * l, &spec).unwrap();
    let above = psf::js_asymptotic(&p, &s, t, 0.0, s.z0 + 1e-3 * l, &spec).unwrap();
    assert!(below > 0.0 && above < 0.0);
    for v in [below, -above] {
        assert!(v > 0.5 * carac && v < 1.5 * carac, "{v} vs {carac}");
    }
}
