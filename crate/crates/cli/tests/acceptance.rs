//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use plasmon_itm::dispersion::{asymptotic_root, critical_u, discriminant, pprime_eta, solve_dispersion};
use plasmon_itm::kernels::{kernel_p_exact, kernel_p_regularized, kernel_s, kernel_s_regularized};
use plasmon_itm::oscint::{h_exact, h_stationary, phi, plasmon_propagator, Weight};
use plasmon_itm::physics::{beta, beta_complex, conductivity, transmission};
use plasmon_itm::psf::{self, PsfKind, J0_FIRST_ZERO};
use plasmon_itm::quad::{integrate, panels_of_length};
use plasmon_itm::{ChiProfile, KernelMethod, PhysicalParams, QuadratureSpec, SourceConfig};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a * (b / a).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plasmon-itm"))
}

fn dispersion_battery() -> Outcome {
    let start = Instant::now();
    let mut worst_res: f64 = 0.0;
    let mut worst_vieta: f64 = 0.0;
    let mut failures = 0;
    for gamma in [0.9, 0.99] {
        let uc = critical_u(gamma).unwrap();
        // 50 log-spaced points on (u_c, 100]
        for u in log_grid(uc, 100.0, 51).into_iter().skip(1) {
            let Ok(r) = solve_dispersion(gamma, u) else {
                failures += 1;
                continue;
            };
            let all = r.all();
            let sum: Complex64 = all.iter().sum();
            let prod: Complex64 = all.iter().product();
            let pairs: Complex64 = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .map(|(i, j)| all[i] * all[j])
                .sum();
            worst_res = worst_res.max(r.max_residual());
            worst_vieta = worst_vieta
                .max((sum - 2.0).norm() / 2.0)
                .max((prod + u * u).norm() / (u * u))
                .max((pairs - gamma).norm() / gamma);
            let classified = r.s_plus.im > 0.0
                && r.s_plus.re > 0.0
                && r.s_minus == r.s_plus.conj()
                && r.r_pos > 0.0
                && r.r_neg < 0.0;
            if !classified {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst_res <= 1e-12 && worst_vieta <= 1e-12 && failures == 0 && elapsed < Duration::from_secs(1),
        format!("max residual {worst_res:.1e}, max Vieta error {worst_vieta:.1e}, classification failures {failures}, {elapsed:.2?}"),
    )
}

fn critical_wavenumber() -> Outcome {
    let uc1 = critical_u(1.0).unwrap();
    let mut flips = true;
    for gamma in [0.9, 0.99] {
        let uc = critical_u(gamma).unwrap();
        flips &= discriminant(gamma, uc - 1e-10).signum() != discriminant(gamma, uc + 1e-10).signum();
    }
    outcome(
        (uc1 - 0.25).abs() <= 1e-14 && flips,
        format!("u_c(1) - 1/4 = {:.1e}, discriminant flips within 1e-10: {flips}", uc1 - 0.25),
    )
}

fn figure3_roots() -> Outcome {
    let gamma = 0.99;
    let uc = critical_u(gamma).unwrap();
    let (mut worst_im, mut worst_re): (f64, f64) = (0.0, 0.0);
    for i in 0..=400 {
        let u = 1.2 * uc + (10.0 - 1.2 * uc) * i as f64 / 400.0;
        let exact = solve_dispersion(gamma, u).unwrap().s_plus;
        let asym = asymptotic_root(gamma, u).unwrap();
        worst_im = worst_im.max((asym.im - exact.im).abs() / exact.im);
        worst_re = worst_re.max((asym.re - exact.re).abs());
    }
    let dir = tempfile::tempdir().unwrap();
    let start = Instant::now();
    let status = bin().args(["figure", "3", "--out"]).arg(dir.path()).status().unwrap();
    let elapsed = start.elapsed();
    let files = ["fig3_gamma0.9.csv", "fig3_gamma0.99.csv", "figure3.gp"]
        .iter()
        .all(|f| dir.path().join(f).exists());
    outcome(
        worst_im <= 0.05 && worst_re <= 0.02 && status.success() && files && elapsed < Duration::from_secs(1),
        format!("max Im rel error {worst_im:.3}, max Re abs error {worst_re:.4}, CSV in {elapsed:.2?}"),
    )
}

fn stationary_phase() -> Outcome {
    let start = Instant::now();
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let z0 = 10.0 * l;
    let mut worst: f64 = 0.0;
    let mut monotone = true;
    let mut report = Vec::new();
    for ct_over_z0 in [5.0, 15.0] {
        let ct = ct_over_z0 * z0;
        let t = ct / p.c();
        for weight in [Weight::Unity, Weight::SigmaOverSigma0] {
            let mut last = f64::INFINITY;
            let mut errs = Vec::new();
            for ctk in log_grid(50.0, 5000.0, 5) {
                let k = ctk / ct;
                let e = h_exact(&p, t, k, z0, weight, &spec()).unwrap().value;
                let s = h_stationary(&p, t, k, z0, weight).unwrap().value;
                let err = (e - s).norm() / e.norm();
                worst = worst.max(err);
                monotone &= err <= last;
                last = err;
                errs.push(format!("{err:.1e}"));
            }
            report.push(format!("cT={ct_over_z0}z0 {weight:?}: [{}]", errs.join(" ")));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 0.10 && monotone && elapsed < Duration::from_secs(120),
        format!("max rel error {worst:.3}, decreasing {monotone}; {}; {elapsed:.1?}", report.join("; ")),
    )
}

fn figure1_profiles() -> Outcome {
    let start = Instant::now();
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let uc = p.critical_u().unwrap();
    let rs: Vec<f64> = (0..=200).map(|i| 40.0 * l * i as f64 / 200.0).collect();
    let profile = |zeta: f64| {
        let s = SourceConfig::new(zeta * l / (2.0 * uc), 2.0).unwrap();
        let t = p.tau().max(1.5 * s.z0 / p.c());
        let field = psf::grid(&rs, &[0.0, 1.0], PsfKind::Plasmonic, Some(1.0), |r, which| {
            if which == 0.0 {
                psf::jp_exact(&p, &s, t, r, 0.0, &spec())
            } else {
                psf::jp_asymptotic(&p, &s, t, r, 0.0, &spec())
            }
        })
        .unwrap();
        let n = rs.len();
        (field.values[..n].to_vec(), field.values[n..].to_vec())
    };
    let mut sups = Vec::new();
    for zeta in [0.1, 10.0] {
        let (e, a) = profile(zeta);
        let pe = e.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let pa = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let sup = e.iter().zip(&a).fold(0.0f64, |m, (x, y)| m.max((x / pe - y / pa).abs()));
        sups.push(sup);
    }
    let (e20, _) = profile(20.0);
    let zero = psf::first_zero(&rs, &e20).unwrap_or(f64::NAN);
    let expected = J0_FIRST_ZERO * l / (2.0 * uc);
    let zero_err = (zero - expected).abs() / expected;
    let elapsed = start.elapsed();
    outcome(
        sups.iter().all(|&s| s <= 0.10) && zero_err <= 0.20 && elapsed < Duration::from_secs(120),
        format!(
            "sup-norm zeta=0.1: {:.4}, zeta=10: {:.4}; first zero at zeta=20 {:.3} ell0 vs {:.3} ell0 ({:.1}%); {elapsed:.1?}",
            sups[0],
            sups[1],
            zero / l,
            expected / l,
            100.0 * zero_err
        ),
    )
}

fn carac_p_sandwich() -> Outcome {
    let p = PhysicalParams::figure_set();
    let tol = 10.0 * spec().rel_tol;
    let mut ok = true;
    let mut report = Vec::new();
    for h in [0.1, 1.0, 4.0] {
        let s = SourceConfig::new(h * p.ell0(), 2.0).unwrap();
        let (lo, hi) = psf::carac_p_bounds(&p, &s, p.tau(), 0.0).unwrap();
        let exact = psf::jp_exact(&p, &s, p.tau(), 0.0, 0.0, &spec()).unwrap();
        let asym = psf::jp_asymptotic(&p, &s, p.tau(), 0.0, 0.0, &spec()).unwrap();
        let inside = |v: f64| v >= lo * (1.0 - tol) && v <= hi * (1.0 + tol);
        ok &= inside(exact) && inside(asym);
        report.push(format!(
            "h={h}: exact/lo {:.4}, simplified/lo {:.4}, hi/lo {:.1}",
            exact / lo,
            asym / lo,
            hi / lo
        ));
    }
    outcome(ok, report.join("; "))
}

fn figure2_field() -> Outcome {
    let start = Instant::now();
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let z0 = 10.0 * l;
    let s = SourceConfig::new(z0, 2.0).unwrap();
    let n = 200;
    let rs: Vec<f64> = (0..n).map(|i| 10.0 * l * i as f64 / (n - 1) as f64).collect();
    let zs: Vec<f64> = (0..n).map(|j| 2.0 * z0 * (j as f64 + 0.5) / n as f64).collect();
    let mut ok = true;
    let mut report = Vec::new();
    for ct_over_z0 in [5.0, 15.0] {
        let ct = ct_over_z0 * z0;
        let t = ct / p.c();
        let field = psf::grid(&rs, &zs, PsfKind::Scattered, None, |r, z| psf::js_asymptotic(&p, &s, t, r, z, &spec())).unwrap();
        let peak = field.peak_abs();

        // (a) largest radius inside the half-maximum region
        let mut width: f64 = 0.0;
        for j in 0..n {
            for (i, &r) in rs.iter().enumerate() {
                if field.at(i, j).abs() >= 0.5 * peak {
                    width = width.max(r);
                }
            }
        }
        let width_ok = width >= l / 3.0 && width <= 3.0 * l;

        // (b) axis profile above z0 divided by its local amplitude pi^2 C(z) phi(z) / (c tau)
        let z_axis: Vec<f64> = (0..600).map(|i| z0 + (0.02 + 0.1 * i as f64) * l).filter(|&z| z < 0.99 * ct).collect();
        let axis = psf::grid(&[0.0], &z_axis, PsfKind::Scattered, Some(1.0), |r, z| psf::js_asymptotic(&p, &s, t, r, z, &spec())).unwrap();
        let amplitude = |z: f64| {
            let (pz, p0) = (phi(&p, t, z).unwrap(), phi(&p, t, z0).unwrap());
            let c = 2.0 * PI * z * z0 / (ct.powi(3) * (pz * p0).sqrt());
            PI * PI * c * pz / p.c_tau()
        };
        let refocus: Vec<f64> = z_axis.iter().zip(&axis.values).map(|(&z, v)| v.abs() / amplitude(z)).collect();
        let half_of = |values: &[f64], reference: f64| {
            let i = values.iter().position(|&v| v < 0.5 * reference).unwrap_or(values.len() - 1);
            z_axis[i] - z0
        };
        let extent = half_of(&refocus, refocus[0]);
        // the unnormalized profile, for the record
        let raw: Vec<f64> = axis.values.iter().map(|v| v.abs()).collect();
        let raw_peak = raw.iter().fold(0.0f64, |m, &v| m.max(v));
        let raw_peak_at = raw.iter().position(|&v| v == raw_peak).unwrap();
        let raw_end = raw[raw_peak_at..].iter().position(|&v| v < 0.5 * raw_peak).map_or(raw.len() - 1, |i| i + raw_peak_at);
        let raw_extent = z_axis[raw_end] - z0;
        let predicted = (z0 * z0 + 2.0 * ct * l).sqrt() - z0;
        let ratio = extent / predicted;
        let extent_ok = (0.5..=2.0).contains(&ratio);

        // (c) sign change across z0 on the axis
        let below = psf::js_asymptotic(&p, &s, t, 0.0, z0 - 0.05 * l, &spec()).unwrap();
        let above = psf::js_asymptotic(&p, &s, t, 0.0, z0 + 0.05 * l, &spec()).unwrap();
        let sign_ok = below > 0.0 && above < 0.0;

        ok &= width_ok && extent_ok && sign_ok;
        report.push(format!(
            "cT={ct_over_z0}z0: half-max width {:.2} ell0, vertical extent {:.2} ell0 vs {:.2} ell0 (x{ratio:.2}; raw half-of-peak {:.2} ell0), sign {:+.0}/{:+.0}",
            width / l,
            extent / l,
            predicted / l,
            raw_extent / l,
            below.signum(),
            above.signum()
        ));
    }
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(600), format!("{}; {elapsed:.1?}", report.join("; ")))
}

fn dominance_ratio(p: &PhysicalParams, z0_over_ell0: f64, ct_over_z0: f64) -> f64 {
    let z0 = z0_over_ell0 * p.ell0();
    let s = SourceConfig::new(z0, 2.0).unwrap();
    let t = ct_over_z0 * z0 / p.c();
    let (lo, _) = psf::carac_p_bounds(p, &s, t, z0).unwrap();
    psf::carac_s(p, &s, t).unwrap() / lo
}

fn dominance_ratios() -> Outcome {
    let exp = PhysicalParams::experimental_set();
    let small = dominance_ratio(&exp, 1.0, 15.0);
    let large = dominance_ratio(&exp, 10.0, 5.0);
    let within = |v: f64, target: f64| v >= target / 3.0 && v <= target * 3.0;
    let fig = PhysicalParams::figure_set();
    outcome(
        within(small, 1e-3) && within(large, 1e3),
        format!(
            "experimental set (eta = {:.4}): {small:.2e} (target 1e-3), {large:.2e} (target 1e3); figure set (eta = 0.1, informational): {:.2e}, {:.2e}",
            exp.eta(),
            dominance_ratio(&fig, 1.0, 15.0),
            dominance_ratio(&fig, 10.0, 5.0)
        ),
    )
}

fn regularization_limits() -> Outcome {
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let z0 = 10.0 * l;
    let z = 0.5 * z0;
    let t = 50.0 * l / p.c();
    let h = (z + z0) / l;
    let kc = p.critical_k().unwrap();
    let profile = ChiProfile::default();
    let mut worst_p: f64 = 0.0;
    let mut worst_s: f64 = 0.0;
    for k in [2.0 * kc, 4.0 * kc, 10.0 * kc] {
        let dt = p.tau() * h.sqrt() / 100.0;
        let kp = kernel_p_exact(&p, t, k, z, z0).unwrap();
        let kpr = kernel_p_regularized(&p, t, k, z, z0, dt, profile).unwrap();
        worst_p = worst_p.max((kpr - kp).abs() / kp.abs());
        let dt = l / (100.0 * p.c());
        let ks = kernel_s(&p, t, k, z, z0, KernelMethod::Exact, &spec()).unwrap();
        let ksr = kernel_s_regularized(&p, t, k, z, z0, dt, profile, KernelMethod::Exact, &spec()).unwrap();
        worst_s = worst_s.max((ksr - ks).abs() / ks.abs());
    }
    let k = 2.0 * kc;
    let ks = kernel_s(&p, t, k, z, z0, KernelMethod::Exact, &spec()).unwrap();
    let suppression = |profile: ChiProfile| {
        let dt = 100.0 * l / p.c();
        kernel_s_regularized(&p, t, k, z, z0, dt, profile, KernelMethod::Exact, &spec()).unwrap().abs() / ks.abs()
    };
    let long = suppression(profile);
    outcome(
        worst_p <= 0.01 && worst_s <= 0.01 && long <= 1e-2,
        format!(
            "short plasmonic {worst_p:.1e}, short scattered {worst_s:.1e}, long scattered ({profile}) {long:.1e}; informational: triangle {:.1e}, box {:.1e}",
            suppression(ChiProfile::Triangle),
            suppression(ChiProfile::Box)
        ),
    )
}

fn contour_toy() -> bool {
    let p = PhysicalParams::figure_set();
    let k = 1.0 / p.ell0();
    let ck = p.c() * k;
    let (t, z) = (1.3, 0.7);
    let poles = [
        Complex64::new(1.0, 1.0),
        Complex64::new(-2.0, 0.5),
        Complex64::new(0.5, 2.0),
        Complex64::new(-0.3, 1.5),
    ];
    let denom = |w: Complex64| poles.iter().fold(Complex64::new(1.0, 0.0), |acc, q| acc * (w - q));
    let f = |w: Complex64, b: Complex64| (Complex64::new(0.0, t) * w + Complex64::new(0.0, z) * b).exp() / denom(w);
    let spec = QuadratureSpec::default().with_rel_tol(1e-12);
    let lim = 2000.0;
    let mut knots = panels_of_length(-lim, lim, 1.0);
    knots.extend([-1.0, 1.0]);
    knots.sort_by(f64::total_cmp);
    knots.dedup();
    let lhs = integrate(|w| f(Complex64::new(w, 0.0), beta(&p, w * ck, k) / k), &knots, &spec).unwrap().value;
    let mut residues = Complex64::new(0.0, 0.0);
    for (j, q) in poles.iter().enumerate() {
        let d = poles
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != j)
            .fold(Complex64::new(1.0, 0.0), |acc, (_, o)| acc * (q - o));
        residues += (Complex64::new(0.0, t) * q + Complex64::new(0.0, z) * beta_complex(&p, q * ck, k) / k).exp() / d;
    }
    residues *= Complex64::new(0.0, 2.0 * PI);
    let cut = |w: f64| {
        let b = Complex64::new((w * w - 1.0).sqrt(), 0.0);
        let wc = Complex64::new(w, 0.0);
        (f(wc, -b) - f(wc, b)) + (f(-wc, b) - f(-wc, -b))
    };
    let rhs = residues + integrate(cut, &panels_of_length(1.0, lim, 1.0), &spec).unwrap().value;
    (lhs - rhs).norm() < 1e-8 * lhs.norm().max(rhs.norm())
}

fn conjugation_symmetries() -> bool {
    let p = PhysicalParams::figure_set();
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });
    let scale = 1.0 / p.tau();
    let kscale = 1.0 / p.ell0();
    let real_args = (-50.0..50.0f64, -50.0..50.0f64);
    let fields = runner.run(&real_args, |(w, kz)| {
        let omega = w * scale;
        prop_assume!(w.abs() > 1e-3);
        let s_neg = conductivity(&p, Complex64::new(-omega, 0.0)).unwrap();
        let s_pos = conductivity(&p, Complex64::new(omega, 0.0)).unwrap();
        prop_assert!((s_neg - s_pos.conj()).norm() <= 1e-14 * s_pos.norm());
        let kz = kz * kscale;
        if let (Ok(a), Ok(b)) = (
            transmission(&p, Complex64::new(-omega, 0.0), Complex64::new(-kz, 0.0)),
            transmission(&p, Complex64::new(omega, 0.0), Complex64::new(kz, 0.0)),
        ) {
            prop_assert!((a - b.conj()).norm() <= 1e-12 * b.norm());
        }
        Ok(())
    });
    let complex_args = (-3.0..3.0f64, 0.01..3.0f64, 0.0..5.0f64, 0.0..5.0f64);
    let roots = runner.run(&complex_args, |(a, b, t, z)| {
        let s = Complex64::new(a, b);
        prop_assume!((1.0 - s).norm() > 1e-3);
        let pp = pprime_eta(p.eta(), s).unwrap();
        prop_assert!((pprime_eta(p.eta(), s.conj()).unwrap().conj() - pp).norm() <= 1e-13 * pp.norm().max(1.0));
        let g = plasmon_propagator(&p, t * p.tau(), z * p.ell0(), s).unwrap();
        let gc = plasmon_propagator(&p, t * p.tau(), z * p.ell0(), s.conj()).unwrap();
        prop_assert!((gc + g.conj()).norm() <= 1e-12 * g.norm());
        Ok(())
    });
    fields.is_ok() && roots.is_ok()
}

fn branch_sign_lock() -> bool {
    let p = PhysicalParams::figure_set();
    let k = 1.0e6;
    [2.0, 5.0, 1.0001].iter().all(|&w| {
        let omega = w * p.c() * k;
        let pos = beta(&p, omega, k);
        let neg = beta(&p, -omega, k);
        let below = |o: f64| beta_complex(&p, Complex64::new(o, -1e-9 * o.abs()), k);
        pos.re < 0.0 && neg.re > 0.0 && (below(omega) - pos).norm() < 1e-6 * k && (below(-omega) - neg).norm() < 1e-6 * k
    })
}

fn laplacian_agreement() -> bool {
    let p = PhysicalParams::figure_set();
    let l = p.ell0();
    let s = SourceConfig::new(l / (2.0 * p.critical_u().unwrap()), 2.0).unwrap();
    let t = p.tau();
    let tight = QuadratureSpec::default().with_rel_tol(1e-11);
    let amp = psf::field_amplitude(&p);
    let scale = psf::ez_from_kernel(&p, &s, t, 0.0, 0.0, PsfKind::Plasmonic, &tight).unwrap().abs() / amp.abs();
    let dr = 0.01 * l;
    [0.5 * l, l, 2.0 * l, 4.0 * l].iter().all(|&r| {
        let f = |x: f64| psf::jp_exact(&p, &s, t, x, 0.0, &tight).unwrap();
        let (fm, f0, fp) = (f(r - dr), f(r), f(r + dr));
        let fd = (fp - 2.0 * f0 + fm) / (dr * dr) + (fp - fm) / (2.0 * dr * r);
        let spectral = psf::ez_from_kernel(&p, &s, t, r, 0.0, PsfKind::Plasmonic, &tight).unwrap() / amp;
        (fd - spectral).abs() < 0.01 * scale
    })
}

fn chi_hat_quadrature() -> bool {
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        abs_tol: 1e-15,
        ..QuadratureSpec::default()
    };
    let knots: Vec<f64> = (0..=40).map(|i| -0.5 + i as f64 / 40.0).collect();
    ChiProfile::ALL.iter().all(|&profile| {
        (0..=200).all(|i| {
            let u = i as f64 * 0.5;
            let q = integrate(|v| Complex64::new(0.0, -u * v).exp() * profile.chi(v), &knots, &spec)
                .unwrap()
                .value;
            (q.re - profile.chi_hat(u)).abs() < 1e-8 && q.im.abs() < 1e-8
        })
    })
}

fn byte_determinism() -> bool {
    let run = |threads: &str| {
        bin()
            .args(["--threads", threads, "psf-plasmon", "--zeta", "2", "--r", "0:2e-5:17", "--z", "0:2e-6:3"])
            .output()
            .unwrap()
    };
    let (a, b, c) = (run("1"), run("1"), run("3"));
    let figure = |dir: &std::path::Path| {
        bin().args(["figure", "3", "--out"]).arg(dir).status().unwrap();
        std::fs::read(dir.join("fig3_gamma0.99.csv")).unwrap()
    };
    let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    a.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout && a.stdout == c.stdout && figure(d1.path()) == figure(d2.path())
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let checks = [
        ("conjugation", conjugation_symmetries()),
        ("branch sign-lock", branch_sign_lock()),
        ("contour identity", contour_toy()),
        ("spectral Laplacian", laplacian_agreement()),
        ("chi_hat quadrature", chi_hat_quadrature()),
        ("byte determinism", byte_determinism()),
    ];
    let elapsed = start.elapsed();
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    outcome(
        failed.is_empty() && elapsed < Duration::from_secs(300),
        if failed.is_empty() {
            format!("all {} suites green in {elapsed:.1?}", checks.len())
        } else {
            format!("failed: {}; {elapsed:.1?}", failed.join(", "))
        },
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("dispersion correctness", dispersion_battery),
        ("critical wavenumber", critical_wavenumber),
        ("figure 3 roots", figure3_roots),
        ("stationary phase", stationary_phase),
        ("figure 1 profiles", figure1_profiles),
        ("caracP sandwich", carac_p_sandwich),
        ("figure 2 field", figure2_field),
        ("dominance ratios", dominance_ratios),
        ("regularization limits", regularization_limits),
        ("property suites", property_suites),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        if !result.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {:<24} {}  {}",
            i + 1,
            name,
            if result.pass { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
