//! Property suites run by the extended verification mode.
//!
//! Each suite evaluates an invariant over a fixed deterministic grid and
//! reports the worst residual as a single [`CheckResult`] with `rhs = 0`.

use std::f64::consts::PI;

use crate::numkernel::{digamma, gamma, ln_gamma, ComplexValue as C};
use crate::primes::PrimeTable;
use crate::report::CheckResult;
use crate::zeta::ZetaEngine;
use crate::Result;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

fn worst(
    name: &str,
    residuals: impl IntoIterator<Item = f64>,
    tol: f64,
    identity: &str,
) -> CheckResult {
    let max = residuals.into_iter().fold(0.0f64, f64::max);
    CheckResult::new(name, max, 0.0, tol, identity)
}

/// 100 points on a golden-angle spiral with `0.5 <= |s| <= 20`.
pub fn spiral_grid() -> Vec<C> {
    (0..100)
        .map(|j| {
            let r = 0.5 + 19.5 * j as f64 / 99.0;
            C::from_polar(r, GOLDEN_ANGLE * j as f64)
        })
        .filter(|s| !(s.re <= 0.0 && s.im.abs() < 1e-3 && (s.re - s.re.round()).abs() < 1e-3))
        .collect()
}

/// `|Γ(s+1) − sΓ(s)| / |Γ(s+1)|` over [`spiral_grid`].
pub fn gamma_recurrence() -> Result<CheckResult> {
    let mut res = Vec::new();
    for s in spiral_grid() {
        let g1 = gamma(s + 1.0)?;
        res.push((g1 - s * gamma(s)?).norm() / g1.norm());
    }
    Ok(worst(
        "gamma_recurrence",
        res,
        1e-12,
        "Gamma(s+1) = s Gamma(s)",
    ))
}

/// Relative residual of `Γ(s)Γ(1−s) = π / sin πs` off the integers.
pub fn gamma_reflection() -> Result<CheckResult> {
    let mut res = Vec::new();
    for j in 0..40 {
        let re = -7.3 + 0.37 * j as f64;
        for im in [0.0, 0.6, 3.1] {
            let s = C::new(re, im);
            let rhs = PI / (s * PI).sin();
            let lhs = gamma(s)? * gamma(1.0 - s)?;
            res.push((lhs - rhs).norm() / rhs.norm());
        }
    }
    Ok(worst(
        "gamma_reflection",
        res,
        1e-10,
        "Gamma(s) Gamma(1-s) = pi / sin(pi s)",
    ))
}

/// Digamma against a central difference of `log Γ`, step `1e-5`, on `[0.5, 10]`.
pub fn digamma_finite_difference() -> Result<CheckResult> {
    let h = 1e-5;
    let mut res = Vec::new();
    for j in 0..=38 {
        let x = 0.5 + 0.25 * j as f64;
        let fd = (ln_gamma(C::new(x + h, 0.0))?.re - ln_gamma(C::new(x - h, 0.0))?.re) / (2.0 * h);
        res.push((digamma(C::new(x, 0.0))?.re - fd).abs());
    }
    Ok(worst(
        "digamma_finite_difference",
        res,
        1e-6,
        "psi(x) = d/dx log Gamma(x)",
    ))
}

/// `Σ (−1)^{n−1} n^{−s}` by the Cohen–Villegas–Zagier acceleration.
pub fn alternating_zeta(s: f64) -> f64 {
    let n = 40;
    let d = (3.0 + 8f64.sqrt()).powi(n);
    let d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0f64;
    let mut c = -d;
    let mut sum = 0.0;
    for k in 0..n {
        c = b - c;
        sum += c * ((k + 1) as f64).powf(-s);
        let (kf, nf) = (k as f64, n as f64);
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

/// `(1 − 2^{1−s}) ζ(s)` from the engine against the accelerated alternating series.
pub fn alternating_series(engine: &ZetaEngine) -> Result<CheckResult> {
    let mut res = Vec::new();
    for s in [0.5, 1.5, 2.0, 3.0] {
        let z = engine.zeta(C::new(s, 0.0))?.re;
        res.push(((1.0 - 2f64.powf(1.0 - s)) * z - alternating_zeta(s)).abs());
    }
    Ok(worst(
        "alternating_series",
        res,
        1e-10,
        "(1 - 2^(1-s)) zeta(s) = sum (-1)^(n-1) n^-s",
    ))
}

/// `Σ_{d|n} μ(d) = [n = 1]` for `n <= 10^4`; reports the number of failures.
pub fn mobius_convolution() -> Result<CheckResult> {
    const N: u64 = 10_000;
    let table = PrimeTable::new(N)?;
    let mut sums = vec![0i64; N as usize + 1];
    for d in 1..=N {
        let mu = table.mobius(d)? as i64;
        if mu != 0 {
            for m in (d..=N).step_by(d as usize) {
                sums[m as usize] += mu;
            }
        }
    }
    let failures = (1..=N as usize)
        .filter(|&n| sums[n] != i64::from(n == 1))
        .count();
    Ok(CheckResult::new(
        "mobius_convolution",
        failures as f64,
        0.0,
        0.0,
        "sum_{d|n} mu(d) = [n = 1], n <= 10^4",
    ))
}

/// Relative gap between `ψ(x)` summed over `Λ` and `Σ_k θ(x^{1/k})`.
pub fn psi_theta_sum(table: &PrimeTable) -> Result<CheckResult> {
    let limit = table.limit() as f64;
    let mut res = Vec::new();
    for j in 0..100 {
        // Geometric grid on [2.25, limit − 1].
        let x = 2.25 * ((limit - 1.0) / 2.25).powf(j as f64 / 99.0);
        let a = table.psi(x)?;
        let b = table.psi_via_theta(x)?;
        res.push((a - b).abs() / a.max(1.0));
    }
    Ok(worst(
        "psi_theta_sum",
        res,
        1e-10,
        "psi(x) = sum_k theta(x^(1/k))",
    ))
}

/// All property suites, in report order.
pub fn run_all(engine: &ZetaEngine, table: &PrimeTable) -> Result<Vec<CheckResult>> {
    Ok(vec![
        gamma_recurrence()?,
        gamma_reflection()?,
        digamma_finite_difference()?,
        alternating_series(engine)?,
        mobius_convolution()?,
        psi_theta_sum(table)?,
    ])
}
