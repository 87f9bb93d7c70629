//! Globally adaptive Gauss–Kronrod (7/15) quadrature for complex integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerances and budgets shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Bisections allowed beyond the initial panels.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 0.0,
            max_subdivisions: 20_000,
        }
    }
}

impl QuadratureSpec {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return Err(Error::invalid(
                "quad_rel_tol",
                format!("must lie in (0, 1e-3], got {}", self.rel_tol),
            ));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::invalid("quad_abs_tol", "must be finite and >= 0"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::invalid("quad_max_subdiv", "must be positive"));
        }
        Ok(())
    }
}

/// Value of an integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    /// Integral of `|f|`, used for the roundoff floor.
    pub abs_integral: f64,
    pub subdivisions: usize,
    pub evaluations: usize,
}

impl std::ops::Add for QuadResult {
    type Output = QuadResult;

    fn add(self, o: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + o.value,
            error: self.error + o.error,
            abs_integral: self.abs_integral + o.abs_integral,
            subdivisions: self.subdivisions + o.subdivisions,
            evaluations: self.evaluations + o.evaluations,
        }
    }
}

impl QuadResult {
    pub fn zero() -> Self {
        QuadResult {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            abs_integral: 0.0,
            subdivisions: 0,
            evaluations: 0,
        }
    }

    pub fn scale(self, factor: Complex64) -> Self {
        let m = factor.norm();
        QuadResult {
            value: self.value * factor,
            error: self.error * m,
            abs_integral: self.abs_integral * m,
            ..self
        }
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Result<Panel> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.norm() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        let s = f1 + f2;
        kron += s * WGK[j];
        abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    let value = kron * half;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow { what: "integrand" });
    }
    Ok(Panel {
        a,
        b,
        value,
        error: ((kron - gauss) * half).norm(),
        abs: abs * half.abs(),
    })
}

/// Integrates `f` over `[breakpoints[0], breakpoints[last]]`, starting from the
/// panels delimited by `breakpoints` and bisecting the worst panel until the
/// summed error meets `max(abs_tol, rel_tol |I|)` or a roundoff floor.
pub fn integrate<F>(mut f: F, breakpoints: &[f64], spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: FnMut(f64) -> Complex64,
{
    if breakpoints.len() < 2 {
        return Err(Error::invalid("breakpoints", "need at least two points"));
    }
    let mut heap = BinaryHeap::with_capacity(breakpoints.len() * 2);
    let mut evaluations = 0;
    for w in breakpoints.windows(2) {
        if !(w[0].is_finite() && w[1].is_finite()) {
            return Err(Error::invalid("breakpoints", "must be finite"));
        }
        if w[0] == w[1] {
            continue;
        }
        heap.push(gk15(&mut f, w[0], w[1])?);
        evaluations += 15;
    }
    let mut subdivisions = 0;
    loop {
        let (mut value, mut error, mut abs) = (Complex64::new(0.0, 0.0), 0.0, 0.0);
        // summation in heap-independent order keeps results deterministic
        let mut panels: Vec<&Panel> = heap.iter().collect();
        panels.sort_by(|x, y| x.a.total_cmp(&y.a));
        for p in &panels {
            value += p.value;
            error += p.error;
            abs += p.abs;
        }
        let tol = spec.abs_tol.max(spec.rel_tol * value.norm());
        let floor = 50.0 * f64::EPSILON * abs;
        if error <= tol || error <= floor || heap.is_empty() {
            return Ok(QuadResult {
                value,
                error,
                abs_integral: abs,
                subdivisions,
                evaluations,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::NonConvergence {
                partial: value,
                estimate: error,
                subdivisions,
            });
        }
        // bisect the worst panels in a batch to amortise the re-summation
        let batch = (heap.len() / 8).clamp(1, 64);
        for _ in 0..batch {
            let Some(worst) = heap.pop() else { break };
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // interval exhausted at machine precision; keep it as is
                heap.push(Panel {
                    error: 0.0,
                    ..worst
                });
                continue;
            }
            heap.push(gk15(&mut f, worst.a, mid)?);
            heap.push(gk15(&mut f, mid, worst.b)?);
            evaluations += 30;
            subdivisions += 1;
        }
    }
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(mut f: F, breakpoints: &[f64], spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: FnMut(f64) -> f64,
{
    integrate(|x| Complex64::new(f(x), 0.0), breakpoints, spec)
}

/// `n` equal panels on `[a, b]`.
pub fn uniform_breakpoints(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..=n)
        .map(|i| {
            if i == n {
                b
            } else {
                a + (b - a) * i as f64 / n as f64
            }
        })
        .collect()
}

/// Panels on `[a, b]` no longer than `max_len`.
pub fn panels_of_length(a: f64, b: f64, max_len: f64) -> Vec<f64> {
    let n = ((b - a) / max_len).ceil().max(1.0);
    uniform_breakpoints(a, b, n as usize)
}
