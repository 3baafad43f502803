//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Semi-infinite ranges are mapped onto `(0, 1]` by `t = a + (1 - v)/v`.
//! A power-law endpoint singularity `(t - a)^{x-1}` is removed analytically
//! by `u = (t - a)^x` before the range map is applied.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::PrecisionConfig;
use crate::error::{Error, Result};

// Kronrod nodes; odd indices are the 7-point Gauss nodes.
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
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Estimated absolute error.
    pub abs_err: f64,
    /// Number of subintervals in the final partition.
    pub intervals: usize,
}

/// Tolerances and subdivision budget for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Quadrature {
    pub fn new(cfg: &PrecisionConfig) -> Self {
        Quadrature {
            rel_tol: cfg.quad_rel_tol,
            abs_tol: 1e-300,
            max_intervals: 2000,
        }
    }

    pub fn with_budget(mut self, max_intervals: usize) -> Self {
        self.max_intervals = max_intervals;
        self
    }

    /// `∫_a^b f`, for finite `a < b`.
    pub fn finite<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<QuadResult> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::domain("integrate", "finite endpoints required"));
        }
        if a == b {
            return Ok(QuadResult {
                value: 0.0,
                abs_err: 0.0,
                intervals: 0,
            });
        }
        if a > b {
            let r = self.finite(f, b, a)?;
            return Ok(QuadResult {
                value: -r.value,
                ..r
            });
        }
        self.adaptive(&f, a, b)
    }

    /// `∫_a^∞ f`.
    pub fn semi_infinite<F: Fn(f64) -> f64>(&self, f: F, a: f64) -> Result<QuadResult> {
        let mapped = |v: f64| {
            let t = a + (1.0 - v) / v;
            let y = f(t);
            if y == 0.0 {
                0.0
            } else {
                y / (v * v)
            }
        };
        self.adaptive(&mapped, 0.0, 1.0)
    }

    /// `∫_a^∞ (t - a)^{x-1} g(t) dt` for `x > 0`.
    pub fn semi_infinite_singular<G: Fn(f64) -> f64>(
        &self,
        g: G,
        a: f64,
        x: f64,
    ) -> Result<QuadResult> {
        if !(x > 0.0) {
            return Err(Error::domain(
                "integrate_semi_infinite_singular",
                format!("exponent x = {x} must be positive"),
            ));
        }
        if x >= 1.0 {
            return self.semi_infinite(|t| (t - a).powf(x - 1.0) * g(t), a);
        }
        // u = (t - a)^x, dt (t - a)^{x-1} = du / x
        let inv = 1.0 / x;
        let r = self.semi_infinite(|u| g(a + u.powf(inv)), 0.0)?;
        Ok(QuadResult {
            value: r.value * inv,
            abs_err: r.abs_err * inv,
            intervals: r.intervals,
        })
    }

    fn adaptive(&self, f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<QuadResult> {
        let first = gk15(f, a, b)?;
        let mut total = first.value;
        let mut total_err = first.err;
        let mut heap = BinaryHeap::new();
        heap.push(first);
        loop {
            let tol = self.abs_tol.max(self.rel_tol * total.abs());
            if total_err <= tol {
                break;
            }
            if heap.len() >= self.max_intervals {
                return Err(Error::NonConvergence {
                    tol: self.rel_tol,
                    estimate: total_err / total.abs().max(f64::MIN_POSITIVE),
                    budget: self.max_intervals,
                });
            }
            let worst = heap.pop().expect("heap is never empty");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // Interval at machine resolution; its error cannot be reduced.
                heap.push(Segment { err: 0.0, ..worst });
                total_err -= worst.err;
                continue;
            }
            let left = gk15(f, worst.a, mid)?;
            let right = gk15(f, mid, worst.b)?;
            total += left.value + right.value - worst.value;
            total_err += left.err + right.err - worst.err;
            heap.push(left);
            heap.push(right);
        }
        // Re-sum to shed the drift from incremental updates.
        let mut segs: Vec<Segment> = heap.into_vec();
        segs.sort_by(|x, y| x.a.total_cmp(&y.a));
        let value = segs.iter().map(|s| s.value).sum::<f64>();
        let abs_err = segs.iter().map(|s| s.err).sum::<f64>();
        Ok(QuadResult {
            value,
            abs_err,
            intervals: segs.len(),
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn gk15(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::domain(
                "integrate",
                format!("integrand is {y} at t = {x}"),
            ))
        }
    };
    let fc = eval(center)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv = [(0.0, 0.0); 7];
    for (j, fvj) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
        *fvj = (f1, f2);
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let round = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(round);
    }
    Ok(Segment { a, b, value, err })
}

/// `∫_a^b f` with the configured relative tolerance.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &PrecisionConfig,
) -> Result<QuadResult> {
    Quadrature::new(cfg).finite(f, a, b)
}

/// `∫_a^∞ f` with the configured relative tolerance.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    cfg: &PrecisionConfig,
) -> Result<QuadResult> {
    Quadrature::new(cfg).semi_infinite(f, a)
}

/// `∫_a^∞ (t - a)^{x-1} g(t) dt`, with the endpoint singularity removed by substitution.
pub fn integrate_semi_infinite_singular<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    x: f64,
    cfg: &PrecisionConfig,
) -> Result<QuadResult> {
    Quadrature::new(cfg).semi_infinite_singular(g, a, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn rules_are_exact_on_polynomials() {
        // Kronrod-15 integrates degree 22 exactly, so a single panel suffices.
        let s = gk15(&|x: f64| x.powi(22), -1.0, 1.0).unwrap();
        assert!((s.value - 2.0 / 23.0).abs() < 1e-15);
        let s = gk15(&|x: f64| 3.0 * x * x, 0.0, 2.0).unwrap();
        assert!((s.value - 8.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_tail() {
        let r = integrate_semi_infinite(|t| (-t).exp(), 0.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn algebraic_tail() {
        let r = integrate_semi_infinite(|u| 1.0 / ((u + 1.0) * (u + 1.0)), 1.0, &cfg()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn fermi_integrand_at_two() {
        // ∫ 2t/(e^t + 1) dt = (1 - 2^{-1}) ζ(2) Γ(3) = ζ(2), with ζ(2) by direct summation.
        let zeta2 = {
            let n = 100_000u64;
            let s: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
            s + 1.0 / n as f64 - 0.5 / (n as f64 * n as f64)
        };
        let r = integrate_semi_infinite(|t| 2.0 * t * (-t).exp() / (1.0 + (-t).exp()), 0.0, &cfg())
            .unwrap();
        assert!((r.value - zeta2).abs() < 1e-10);
        assert!((r.value - PI * PI / 6.0).abs() < 1e-10);
    }

    #[test]
    fn singular_endpoint() {
        // ∫_0^∞ t^{-0.9} e^{-t} dt = Γ(0.1)
        let r = integrate_semi_infinite_singular(|t| (-t).exp(), 0.0, 0.1, &cfg()).unwrap();
        assert!((r.value - 9.513_507_698_668_731_8).abs() < 1e-9);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let q = Quadrature::new(&cfg()).with_budget(2);
        let r = q.finite(|x: f64| (1.0 / (x + 1e-6)).sin(), 0.0, 1.0);
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn doubling_budget_keeps_converged_result() {
        let f = |t: f64| t.powf(0.3) * (-t).exp() / (1.0 + (-t).exp()).powi(2);
        for budget in [50, 100, 200, 400] {
            let q = Quadrature::new(&cfg()).with_budget(budget);
            let a = q.semi_infinite(f, 0.0).unwrap();
            let b = q.with_budget(2 * budget).semi_infinite(f, 0.0).unwrap();
            assert!((a.value - b.value).abs() <= cfg().quad_rel_tol * a.value.abs());
        }
    }

    #[test]
    fn reversed_and_empty_ranges() {
        let r = integrate(|x| x, 1.0, 0.0, &cfg()).unwrap();
        assert!((r.value + 0.5).abs() < 1e-15);
        assert_eq!(integrate(|x| x, 2.0, 2.0, &cfg()).unwrap().value, 0.0);
    }
}
