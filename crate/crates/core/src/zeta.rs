//! Riemann ζ, ζ′ and ξ via Euler–Maclaurin summation.
//!
//! The engine evaluates
//!
//! ```text
//! ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!        + Σ_{k=1}^{M} B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
//! ```
//!
//! everywhere, including `re(s) <= 0`; no functional equation is used, so
//! values such as ζ(0) = −1/2 and ζ′(0) = −½ log 2π come out of the
//! summation itself. ζ′ is obtained by differentiating every term.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::numkernel::{
    bernoulli, fmt_c, gamma, integrate_semi_infinite, integrate_semi_infinite_singular,
    pi_factorial, pi_log_deriv, ComplexSum, ComplexValue, NeumaierSum, PrecisionConfig,
};
use crate::report::CheckResult;
use crate::zeros::ZeroTable;

type C = ComplexValue;

/// Largest `|im(s)|` the engine is certified for.
pub const MAX_IM: f64 = 500.0;
/// Smallest `re(s)` the engine is certified for.
pub const MIN_RE: f64 = -10.0;

/// Pieces of the Euler–Maclaurin sum, kept apart so the pole term can be
/// multiplied by `(s - 1)` analytically.
#[derive(Debug, Clone, Copy)]
struct EmParts {
    /// `Σ_{start≤n<N} n^{-s}` plus the endpoint and Bernoulli corrections.
    regular: C,
    /// `N^{1-s}`; the Dirichlet series tail contributes `pole / (s - 1)`.
    pole: C,
    /// `d/ds` of `regular`.
    regular_d: C,
    ln_n: f64,
}

/// Euler–Maclaurin evaluator for ζ and the functions built from it.
#[derive(Debug, Clone)]
pub struct ZetaEngine {
    cfg: PrecisionConfig,
    /// `B_{2k}/(2k)!` for `k = 1..=bernoulli_terms`.
    coeffs: Vec<f64>,
}

impl Default for ZetaEngine {
    fn default() -> Self {
        Self::new(PrecisionConfig::default()).expect("default config is valid")
    }
}

impl ZetaEngine {
    pub fn new(cfg: PrecisionConfig) -> Result<Self> {
        cfg.validate()?;
        let mut fact = 1.0f64;
        let mut coeffs = Vec::with_capacity(cfg.bernoulli_terms);
        for k in 1..=cfg.bernoulli_terms {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            coeffs.push(bernoulli(2 * k as u32)? / fact);
        }
        Ok(ZetaEngine { cfg, coeffs })
    }

    pub fn config(&self) -> &PrecisionConfig {
        &self.cfg
    }

    /// Direct-sum length used at `s`.
    pub fn cutoff(&self, s: C) -> usize {
        self.cfg
            .em_cutoff
            .max(10 + (2.0 * s.im.abs()).ceil() as usize)
    }

    fn check_domain(&self, function: &'static str, s: C) -> Result<()> {
        if !(s.re.is_finite() && s.im.is_finite()) || s.re < MIN_RE || s.im.abs() > MAX_IM {
            return Err(Error::domain(
                function,
                format!(
                    "s = {} outside the certified region re(s) >= {MIN_RE}, |im(s)| <= {MAX_IM}",
                    fmt_c(s)
                ),
            ));
        }
        Ok(())
    }

    fn parts(&self, s: C, start: u64, with_deriv: bool) -> EmParts {
        let n_cut = self.cutoff(s) as u64;
        let mut head = ComplexSum::new();
        let mut head_d = ComplexSum::new();
        for n in start..n_cut {
            let ln = (n as f64).ln();
            let term = (-s * ln).exp();
            head.add(term);
            if with_deriv {
                head_d.add(-term * ln);
            }
        }
        let nf = n_cut as f64;
        let ln_n = nf.ln();
        let n_pow = (-s * ln_n).exp(); // N^{-s}
        let pole = n_pow * nf;

        // Corrections B_{2k}/(2k)! · P_k(s) · N^{-s-2k+1} with
        // P_k(s) = s(s+1)…(s+2k-2), tracked together with P_k'(s).
        let mut corr = C::new(0.0, 0.0);
        let mut corr_d = C::new(0.0, 0.0);
        let mut p = s;
        let mut dp = C::new(1.0, 0.0);
        let mut npow = n_pow / nf; // N^{-s-1}
        let inv_n2 = 1.0 / (nf * nf);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                for j in [2 * k - 1, 2 * k] {
                    let f = s + j as f64;
                    dp = dp * f + p;
                    p *= f;
                }
                npow *= inv_n2;
            }
            corr += p * npow * *c;
            if with_deriv {
                corr_d += (dp - p * ln_n) * npow * *c;
            }
        }
        let regular = head.value() + 0.5 * n_pow + corr;
        let regular_d = if with_deriv {
            head_d.value() - 0.5 * ln_n * n_pow + corr_d
        } else {
            C::new(0.0, 0.0)
        };
        EmParts {
            regular,
            pole,
            regular_d,
            ln_n,
        }
    }

    /// Riemann zeta function ζ(s).
    pub fn zeta(&self, s: C) -> Result<C> {
        if s == C::new(1.0, 0.0) {
            return Err(Error::Pole {
                function: "zeta",
                at: fmt_c(s),
            });
        }
        self.check_domain("zeta", s)?;
        let p = self.parts(s, 1, false);
        Ok(realify(s, p.regular + p.pole / (s - 1.0)))
    }

    /// ζ(s) − 1, accurate when ζ(s) is close to 1.
    pub fn zeta_minus_one(&self, s: C) -> Result<C> {
        if s == C::new(1.0, 0.0) {
            return Err(Error::Pole {
                function: "zeta_minus_one",
                at: fmt_c(s),
            });
        }
        self.check_domain("zeta_minus_one", s)?;
        let p = self.parts(s, 2, false);
        Ok(realify(s, p.regular + p.pole / (s - 1.0)))
    }

    /// `(s − 1) ζ(s)`, entire; equals 1 at `s = 1`.
    pub fn zeta_times_s_minus_one(&self, s: C) -> Result<C> {
        self.check_domain("zeta_times_s_minus_one", s)?;
        let p = self.parts(s, 1, false);
        Ok(realify(s, (s - 1.0) * p.regular + p.pole))
    }

    /// ζ′(s), by term-wise differentiation of the Euler–Maclaurin formula.
    pub fn zeta_deriv(&self, s: C) -> Result<C> {
        Ok(self.zeta_and_deriv(s)?.1)
    }

    /// `(ζ(s), ζ′(s))` from a single pass.
    pub fn zeta_and_deriv(&self, s: C) -> Result<(C, C)> {
        if s == C::new(1.0, 0.0) {
            return Err(Error::Pole {
                function: "zeta_deriv",
                at: fmt_c(s),
            });
        }
        self.check_domain("zeta_deriv", s)?;
        let p = self.parts(s, 1, true);
        let inv = 1.0 / (s - 1.0);
        let z = p.regular + p.pole * inv;
        let dz = p.regular_d - p.pole * inv * (p.ln_n + inv);
        Ok((realify(s, z), realify(s, dz)))
    }

    /// ζ′(s)/ζ(s).
    pub fn zeta_log_deriv(&self, s: C) -> Result<C> {
        let (z, dz) = self.zeta_and_deriv(s)?;
        if z == C::new(0.0, 0.0) {
            return Err(Error::Pole {
                function: "zeta_log_deriv",
                at: fmt_c(s),
            });
        }
        Ok(realify(s, dz / z))
    }

    /// The branch of log ζ(s) for `re(s) > 1` that vanishes as `re(s) → +∞`,
    /// i.e. `Σ_p Σ_k p^{-ks}/k`.
    pub fn log_zeta(&self, s: C) -> Result<C> {
        if !(s.re > 1.0) {
            return Err(Error::domain(
                "log_zeta",
                format!("re(s) = {} must exceed 1", s.re),
            ));
        }
        // For re(s) >= SAFE_RE, |ζ(s) − 1| <= ζ(re s) − 1 < 1 along the whole ray
        // to +∞, so log(1 + (ζ − 1)) with the principal branch is the right one.
        const SAFE_RE: f64 = 1.75;
        if s.im == 0.0 {
            return Ok(C::new(self.zeta_minus_one(s)?.re.ln_1p(), 0.0));
        }
        if s.re >= SAFE_RE {
            return Ok(ln_1p(self.zeta_minus_one(s)?));
        }
        let start = C::new(SAFE_RE, s.im);
        let start_log = ln_1p(self.zeta_minus_one(start)?);
        self.continue_log_zeta(start, start_log, s)
    }

    /// Carries a known value of log ζ at `from` along the straight segment to
    /// `to`, unwrapping the argument step by step. The segment must avoid
    /// zeros of ζ.
    pub fn continue_log_zeta(&self, from: C, log_from: C, to: C) -> Result<C> {
        let mut pos = from;
        let mut cur = self.zeta(from)?;
        let mut arg = log_from.im;
        let total = to - from;
        let mut done = 0.0f64;
        let mut step: f64 = 1.0 / 64.0;
        while done < 1.0 {
            let h = step.min(1.0 - done);
            let next_pos = from + total * (done + h);
            let next = self.zeta(next_pos)?;
            let ratio = next / cur;
            let d_arg = ratio.arg();
            if d_arg.abs() > 0.5 || !(0.5..2.0).contains(&ratio.norm()) {
                step = h / 2.0;
                if step < 1e-9 {
                    return Err(Error::domain(
                        "continue_log_zeta",
                        format!("path passes too close to a zero near s = {}", fmt_c(pos)),
                    ));
                }
                continue;
            }
            arg += d_arg;
            cur = next;
            pos = next_pos;
            done += h;
            if d_arg.abs() < 0.1 {
                step = (2.0 * step).min(1.0 / 16.0);
            }
        }
        // Snap the tracked argument onto the accurately computed principal one.
        let principal = cur.arg();
        let k = ((arg - principal) / (2.0 * PI)).round();
        Ok(C::new(cur.norm().ln(), principal + 2.0 * PI * k))
    }

    /// The completed zeta function `ξ(s) = Π(s/2) (s−1) π^{−s/2} ζ(s)`.
    pub fn xi(&self, s: C) -> Result<C> {
        let half = s / 2.0;
        // Π(s/2) has poles at the trivial zeros s = −2, −4, …; there ζ vanishes
        // and the product is finite, so take the value from the mirror point.
        if s.im == 0.0 && s.re < 0.0 && (s.re / 2.0).fract() == 0.0 {
            return self.xi(1.0 - s);
        }
        let fact = pi_factorial(half)?;
        let pi_pow = (-half * PI.ln()).exp();
        let v = fact * pi_pow * self.zeta_times_s_minus_one(s)?;
        Ok(realify(s, v))
    }

    /// Partial Hadamard product `ξ(0) ∏_{k≤K} (1 − s/ρ_k)(1 − s/ρ̄_k)`
    /// over conjugate pairs of zeros `ρ_k = 1/2 + iγ_k`.
    ///
    /// Each pair contributes `1 + s(s−1)/(1/4 + γ_k²)`.
    pub fn xi_hadamard_partial(&self, s: C, zeros: &ZeroTable, k: usize) -> Result<C> {
        let ordinates = zeros.ordinates();
        if k > ordinates.len() {
            return Err(Error::OutOfRange {
                what: "K",
                value: k as f64,
                min: 0.0,
                max: ordinates.len() as f64,
            });
        }
        let xi0 = self.xi(C::new(0.0, 0.0))?;
        let ss1 = s * (s - 1.0);
        let mut log_sum = ComplexSum::new();
        // Smallest factors last.
        for &g in ordinates[..k].iter().rev() {
            let w = ss1 / (0.25 + g * g);
            log_sum.add(if w.norm() < 0.5 {
                ln_1p(w)
            } else {
                (1.0 + w).ln()
            });
        }
        Ok(realify(s, xi0 * log_sum.value().exp()))
    }

    /// `Σ_ρ 1/ρ` from the logarithmic derivative of ξ at 0:
    /// `−½ Π′(0)/Π(0) + ½ log π + 1 − ζ′(0)/ζ(0)`.
    pub fn sum_inv_rho_closed(&self) -> Result<f64> {
        let zero = C::new(0.0, 0.0);
        let digamma0 = pi_log_deriv(zero)?.re;
        let ratio = self.zeta_log_deriv(zero)?.re;
        let mut acc = NeumaierSum::new();
        acc.add(-0.5 * digamma0);
        acc.add(0.5 * PI.ln());
        acc.add(1.0);
        acc.add(-ratio);
        Ok(acc.value())
    }

    /// `η = Σ_ρ 1/(ρ(1−ρ)) = 2 Σ_ρ 1/ρ`, closed form.
    pub fn eta_closed(&self) -> Result<f64> {
        Ok(2.0 * self.sum_inv_rho_closed()?)
    }

    /// Right side of the Fermi-integral identity,
    /// `(1 − 2^{1−x}) ζ(x) Γ(x+1)`, analytic through `x = 1`.
    pub fn fermi_integral_rhs(&self, x: f64) -> Result<f64> {
        let h = 1.0 - x;
        // (1 − 2^{1−x})/(x − 1) = expm1(h log 2)/h → log 2
        let factor = if h == 0.0 {
            LN_2
        } else {
            (h * LN_2).exp_m1() / h
        };
        let zs = self.zeta_times_s_minus_one(C::new(x, 0.0))?.re;
        let g = gamma(C::new(x + 1.0, 0.0))?.re;
        Ok(factor * zs * g)
    }

    /// Compares the quadrature value of `∫_0^∞ x t^{x−1}/(e^t+1) dt` with
    /// `(1 − 2^{1−x}) ζ(x) Γ(x+1)`; tolerance `rel_tol · (1 + |rhs|)`.
    pub fn fermi_identity_check(&self, x: f64, rel_tol: f64) -> Result<CheckResult> {
        let lhs = fermi_integral_lhs(x, &self.cfg)?;
        let rhs = self.fermi_integral_rhs(x)?;
        Ok(CheckResult::new(
            format!("fermi_identity(x={x})"),
            lhs,
            rhs,
            rel_tol * (1.0 + rhs.abs()),
            "int_0^inf x t^(x-1)/(e^t+1) dt = (1-2^(1-x)) zeta(x) Gamma(x+1)",
        ))
    }
}

/// `∫_0^∞ x t^{x−1}/(e^t + 1) dt` for `x > 0`, by quadrature.
pub fn fermi_integral_lhs(x: f64, cfg: &PrecisionConfig) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(
            "fermi_integral_lhs",
            format!("x = {x} must be positive"),
        ));
    }
    let g = |t: f64| {
        let e = (-t).exp();
        e / (1.0 + e)
    };
    Ok(x * integrate_semi_infinite_singular(g, 0.0, x, cfg)?.value)
}

/// The integrated-by-parts form `∫_0^∞ t^x e^t/(e^t + 1)² dt`, `x >= 0`.
/// Its value at `x → 0⁺` is 1/2, which forces ζ(0) = −1/2.
pub fn fermi_transformed(x: f64, cfg: &PrecisionConfig) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(
            "fermi_transformed",
            format!("x = {x} must be >= 0"),
        ));
    }
    let f = |t: f64| {
        let e = (-t).exp();
        let d = 1.0 + e;
        let w = e / (d * d);
        if x == 0.0 {
            w
        } else {
            t.powf(x) * w
        }
    };
    Ok(integrate_semi_infinite(f, 0.0, cfg)?.value)
}

/// ζ(0) as the limit of the Fermi-integral identity:
/// `lim_{x→0⁺} ∫ = 1/2 = (1 − 2) ζ(0) Γ(1)`. Evaluated at small `x`.
pub fn zeta0_via_fermi(x: f64, cfg: &PrecisionConfig) -> Result<f64> {
    Ok(-fermi_transformed(x, cfg)?)
}

fn realify(s: C, v: C) -> C {
    if s.im == 0.0 {
        C::new(v.re, 0.0)
    } else {
        v
    }
}

/// `log(1 + w)` without cancellation for small `|w|`.
pub(crate) fn ln_1p(w: C) -> C {
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    C::new(re, im)
}
