//! The prime zeta function `P(s) = Σ_p p^{-s}` and the regularized product
//! of the primes.
//!
//! Two independent routes to `P(s)` for `re(s) > 1`:
//!
//! * direct: an explicit sum over the sieved primes, plus the primes beyond
//!   the sieve limit `N` obtained from the rough zeta function
//!   `ζ_N(s) = ζ(s) ∏_{p≤N} (1 − p^{-s})`;
//! * Möbius: `P(s) = Σ_n μ(n)/n · log ζ(ns)`, which uses no primes at all.
//!
//! Differentiating the second gives `P′(s) = Σ_n μ(n) ζ′(ns)/ζ(ns)`. Carried
//! formally to `s = 0`, with the ζ-regularized `Σ μ(n)` realized as `1/ζ(0)`,
//! it yields `P′(0) = −2 log 2π` and the product `exp(−P′(0)) = 4π²`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::{euler_gamma, ComplexSum, ComplexValue};
use crate::primes::PrimeTable;
use crate::zeta::{ln_1p, ZetaEngine};

type C = ComplexValue;

/// Default Möbius truncation.
pub const DEFAULT_N_MAX: usize = 40;

/// A truncated series together with a rigorous bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: C,
    pub tail_bound: f64,
    pub terms: usize,
}

impl Truncated {
    /// The value, provided the dropped tail is below `tol` (relative to
    /// `max(1, |value|)`).
    pub fn certified(self, tol: f64) -> Result<C> {
        let scale = self.value.norm().max(1.0);
        if self.tail_bound > tol * scale {
            return Err(Error::InsufficientTerms {
                n_max: self.terms,
                bound: self.tail_bound,
                tol: tol * scale,
            });
        }
        Ok(self.value)
    }
}

/// Direct route result: explicit prime sum plus the beyond-table tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectPrimeSum {
    pub value: C,
    /// Sum over the primes in the table.
    pub head: C,
    /// Contribution of the primes above the table limit.
    pub tail: C,
    /// `N^{1−σ}/(σ−1)`, an upper bound on `|tail|`.
    pub tail_bound: f64,
}

fn check_half_plane(function: &'static str, s: C) -> Result<()> {
    if !(s.re > 1.0) {
        return Err(Error::domain(
            function,
            format!("re(s) = {} must exceed 1", s.re),
        ));
    }
    Ok(())
}

fn realify(s: C, v: C) -> C {
    if s.im == 0.0 {
        C::new(v.re, 0.0)
    } else {
        v
    }
}

/// μ(n) by trial division; only used for the short Möbius series.
fn mobius_small(mut n: usize) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        -mu
    } else {
        mu
    }
}

/// `Σ_{n>n_max} (ζ(nσ) − 1)` bound, using `ζ(u) − 1 <= 2^{-u}(1 + 2/(u − 1))`.
fn log_zeta_tail_bound(sigma: f64, n_max: usize) -> f64 {
    let u = (n_max + 1) as f64 * sigma;
    (-u * 2f64.ln()).exp() * (1.0 + 2.0 / (u - 1.0)) / (1.0 - (-sigma * 2f64.ln()).exp())
}

/// Same for `|ζ′/ζ(u)| <= Σ_{n≥2} log n · n^{-u}`.
fn log_deriv_tail_bound(sigma: f64, n_max: usize) -> f64 {
    let u = (n_max + 1) as f64 * sigma;
    let l2 = 2f64.ln();
    let one = (-u * l2).exp() * (l2 + 2.0 * (l2 / (u - 1.0) + 1.0 / ((u - 1.0) * (u - 1.0))));
    one / (1.0 - (-sigma * l2).exp())
}

/// `Σ_{p ≤ limit} p^{-s}` alone, refusing when the dropped primes could
/// contribute more than `series_rel_tol`.
pub fn prime_zeta_truncated(table: &PrimeTable, s: C, series_rel_tol: f64) -> Result<Truncated> {
    check_half_plane("prime_zeta_truncated", s)?;
    let head = prime_power_sum(table, s);
    let bound = rough_tail_bound(table.limit(), s.re);
    if bound > series_rel_tol {
        return Err(Error::InsufficientTable {
            limit: table.limit(),
            bound,
            sigma: s.re,
        });
    }
    Ok(Truncated {
        value: realify(s, head),
        tail_bound: bound,
        terms: table.primes().len(),
    })
}

fn prime_power_sum(table: &PrimeTable, s: C) -> C {
    let mut acc = ComplexSum::new();
    for &p in table.primes().iter().rev() {
        acc.add((-s * (p as f64).ln()).exp());
    }
    acc.value()
}

/// `Σ_{n>N} n^{-σ} <= N^{1−σ}/(σ−1)`.
fn rough_tail_bound(limit: u64, sigma: f64) -> f64 {
    (limit as f64).powf(1.0 - sigma) / (sigma - 1.0)
}

/// `log ζ_N(u) = log ζ(u) + Σ_{p≤N} log(1 − p^{-u})` and its derivative.
fn rough_log_zeta(engine: &ZetaEngine, table: &PrimeTable, u: C, deriv: bool) -> Result<C> {
    let mut acc = ComplexSum::new();
    if deriv {
        acc.add(engine.zeta_log_deriv(u)?);
    } else {
        acc.add(engine.log_zeta(u)?);
    }
    for &p in table.primes().iter().rev() {
        let lp = (p as f64).ln();
        let w = (-u * lp).exp();
        if deriv {
            acc.add(lp * w / (1.0 - w));
        } else {
            acc.add(ln_1p(-w));
        }
    }
    Ok(acc.value())
}

fn rough_tail(engine: &ZetaEngine, table: &PrimeTable, s: C, deriv: bool) -> Result<C> {
    let tol = engine.config().series_rel_tol;
    let mut acc = ComplexSum::new();
    let mut n = 1;
    loop {
        let mu = mobius_small(n);
        let u = s * n as f64;
        if mu != 0 {
            let term = rough_log_zeta(engine, table, u, deriv)?;
            acc.add(if deriv {
                term * mu as f64
            } else {
                term * (mu as f64 / n as f64)
            });
        }
        // Everything left is bounded by Σ_{m>n} N^{1−mσ}/(mσ−1) (times log N for
        // the derivative), dominated by its first term.
        let next = rough_tail_bound(table.limit(), (n + 1) as f64 * s.re);
        let next = if deriv {
            next * (table.limit() as f64).ln() * 2.0
        } else {
            2.0 * next
        };
        if next < 1e-3 * tol {
            break;
        }
        n += 1;
    }
    Ok(acc.value())
}

/// `P(s)` by explicit summation over the table primes plus the contribution
/// of primes above the table limit.
pub fn prime_zeta_direct(engine: &ZetaEngine, table: &PrimeTable, s: C) -> Result<DirectPrimeSum> {
    check_half_plane("prime_zeta_direct", s)?;
    let head = prime_power_sum(table, s);
    let tail = rough_tail(engine, table, s, false)?;
    Ok(DirectPrimeSum {
        value: realify(s, head + tail),
        head: realify(s, head),
        tail: realify(s, tail),
        tail_bound: rough_tail_bound(table.limit(), s.re),
    })
}

/// `P′(s) = −Σ_p log p · p^{-s}` by explicit summation, with the same
/// beyond-table tail treatment as [`prime_zeta_direct`].
pub fn prime_zeta_deriv_direct(
    engine: &ZetaEngine,
    table: &PrimeTable,
    s: C,
) -> Result<DirectPrimeSum> {
    check_half_plane("prime_zeta_deriv_direct", s)?;
    let mut acc = ComplexSum::new();
    for &p in table.primes().iter().rev() {
        let lp = (p as f64).ln();
        acc.add(-lp * (-s * lp).exp());
    }
    let head = acc.value();
    let tail = rough_tail(engine, table, s, true)?;
    let limit = table.limit() as f64;
    Ok(DirectPrimeSum {
        value: realify(s, head + tail),
        head: realify(s, head),
        tail: realify(s, tail),
        tail_bound: rough_tail_bound(table.limit(), s.re) * (limit.ln() + 1.0 / (s.re - 1.0)),
    })
}

/// `Σ_{n≤n_max} μ(n)/n · log ζ(ns)`.
pub fn prime_zeta_mobius(engine: &ZetaEngine, s: C, n_max: usize) -> Result<Truncated> {
    check_half_plane("prime_zeta_mobius", s)?;
    if n_max == 0 {
        return Err(Error::domain(
            "prime_zeta_mobius",
            "n_max must be at least 1",
        ));
    }
    let mut acc = ComplexSum::new();
    for n in (1..=n_max).rev() {
        let mu = mobius_small(n);
        if mu != 0 {
            acc.add(engine.log_zeta(s * n as f64)? * (mu as f64 / n as f64));
        }
    }
    Ok(Truncated {
        value: realify(s, acc.value()),
        tail_bound: log_zeta_tail_bound(s.re, n_max),
        terms: n_max,
    })
}

/// `Σ_{n≤n_max} μ(n) ζ′(ns)/ζ(ns)`.
pub fn prime_zeta_deriv(engine: &ZetaEngine, s: C, n_max: usize) -> Result<Truncated> {
    check_half_plane("prime_zeta_deriv", s)?;
    if n_max == 0 {
        return Err(Error::domain(
            "prime_zeta_deriv",
            "n_max must be at least 1",
        ));
    }
    let mut acc = ComplexSum::new();
    for n in (1..=n_max).rev() {
        let mu = mobius_small(n);
        if mu != 0 {
            acc.add(engine.zeta_log_deriv(s * n as f64)? * mu as f64);
        }
    }
    Ok(Truncated {
        value: realify(s, acc.value()),
        tail_bound: log_deriv_tail_bound(s.re, n_max),
        terms: n_max,
    })
}

fn auto_n_max(
    engine: &ZetaEngine,
    s: C,
    series: fn(&ZetaEngine, C, usize) -> Result<Truncated>,
) -> Result<C> {
    let tol = engine.config().series_rel_tol;
    let mut n_max = DEFAULT_N_MAX;
    loop {
        let t = series(engine, s, n_max)?;
        match t.certified(tol) {
            Ok(v) => return Ok(v),
            Err(e) if n_max >= 4096 => return Err(e),
            Err(_) => n_max *= 2,
        }
    }
}

/// `P(s)` via the Möbius series, with `n_max` grown from 40 until the
/// geometric tail bound meets `series_rel_tol`.
pub fn prime_zeta(engine: &ZetaEngine, s: C) -> Result<C> {
    auto_n_max(engine, s, prime_zeta_mobius)
}

/// `P′(s)` via the Möbius series, with automatic `n_max`.
pub fn prime_zeta_derivative(engine: &ZetaEngine, s: C) -> Result<C> {
    auto_n_max(engine, s, prime_zeta_deriv)
}

/// The regularized `P′(0) = (1/ζ(0)) · ζ′(0)/ζ(0)`, with ζ(0) and ζ′(0)
/// taken from the engine. The factor `1/ζ(0)` stands in for the
/// ζ-regularized `Σ_n μ(n)`.
pub fn prime_zeta_deriv_reg0(engine: &ZetaEngine) -> Result<f64> {
    let zero = C::new(0.0, 0.0);
    let (z0, dz0) = engine.zeta_and_deriv(zero)?;
    let regularized_mobius_sum = 1.0 / z0.re;
    Ok(regularized_mobius_sum * (dz0.re / z0.re))
}

/// How the exponent of the regularized product is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "route")]
pub enum ProductRoute {
    /// η from the closed form `γ + 2 − log 4π`.
    ClosedForm,
    /// η supplied by a sum over zeros.
    ZeroSum { eta: f64 },
    /// `exp(−P′(0))` with the regularized derivative.
    PprimeRoute,
}

/// `∏ p = π e^μ` with `μ = 2 + γ − η`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegularizedProductResult {
    pub mu_exponent: f64,
    pub eta_used: f64,
    pub product_value: f64,
    pub route: ProductRoute,
}

/// `∏ p` over every prime, assigned a value by ζ-regularization.
pub fn regularized_prime_product(
    engine: &ZetaEngine,
    route: ProductRoute,
) -> Result<RegularizedProductResult> {
    let gamma = euler_gamma();
    let (mu, eta) = match route {
        ProductRoute::ClosedForm => {
            let eta = engine.eta_closed()?;
            (2.0 + gamma - eta, eta)
        }
        ProductRoute::ZeroSum { eta } => (2.0 + gamma - eta, eta),
        ProductRoute::PprimeRoute => {
            // exp(−P′(0)) = π e^μ  ⇒  μ = −P′(0) − log π
            let mu = -prime_zeta_deriv_reg0(engine)? - PI.ln();
            (mu, 2.0 + gamma - mu)
        }
    };
    Ok(RegularizedProductResult {
        mu_exponent: mu,
        eta_used: eta,
        product_value: PI * mu.exp(),
        route,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn r(x: f64) -> C {
        C::new(x, 0.0)
    }

    fn engine() -> ZetaEngine {
        ZetaEngine::default()
    }

    fn table() -> &'static PrimeTable {
        static T: OnceLock<PrimeTable> = OnceLock::new();
        T.get_or_init(|| PrimeTable::new(1_000_000).unwrap())
    }

    #[test]
    fn mobius_small_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expected.iter().enumerate() {
            assert_eq!(mobius_small(i + 1), m);
        }
        let t = PrimeTable::new(5000).unwrap();
        for n in 1..=5000 {
            assert_eq!(mobius_small(n) as i8, t.mobius(n as u64).unwrap());
        }
    }

    #[test]
    fn direct_values() {
        let e = engine();
        // 30-digit reference values (mpmath primezeta).
        let p2 = prime_zeta_direct(&e, table(), r(2.0)).unwrap();
        assert!((p2.value.re - 0.452_247_420_041_065_5).abs() < 1e-13);
        assert_eq!(p2.value.im, 0.0);
        assert!(p2.tail.re.abs() <= p2.tail_bound);
        let p3 = prime_zeta_direct(&e, table(), r(3.0)).unwrap();
        assert!((p3.value.re - 0.174_762_639_299_443_5).abs() < 1e-13);
        let p20 = prime_zeta_direct(&e, table(), r(20.0)).unwrap().value.re;
        assert!((p20 - 2f64.powi(-20) - 3f64.powi(-20)).abs() < 2.0 * 5f64.powi(-20));
        assert!(prime_zeta_direct(&e, table(), r(1.0)).is_err());
    }

    #[test]
    fn truncated_sum_reports_insufficient_table() {
        let t = PrimeTable::new(1000).unwrap();
        assert!(matches!(
            prime_zeta_truncated(&t, r(2.0), 1e-12),
            Err(Error::InsufficientTable { .. })
        ));
        let v = prime_zeta_truncated(&t, r(6.0), 1e-12).unwrap();
        assert!((v.value.re - prime_zeta(&engine(), r(6.0)).unwrap().re).abs() < 1e-12);
    }

    #[test]
    fn mobius_route_agrees_with_direct() {
        let e = engine();
        let cases = [
            (r(2.0), 40, 1e-12),
            (r(1.5), 60, 1e-10),
            (r(3.0), 40, 1e-10),
            (r(4.0), 40, 1e-10),
            (C::new(2.0, 1.0), 40, 1e-10),
            (C::new(3.0, 2.0), 40, 1e-10),
        ];
        for (s, n_max, tol) in cases {
            let m = prime_zeta_mobius(&e, s, n_max).unwrap();
            let d = prime_zeta_direct(&e, table(), s).unwrap();
            assert!(
                (m.value - d.value).norm() < tol,
                "s = {s}: {} vs {}",
                m.value,
                d.value
            );
        }
    }

    #[test]
    fn single_term_is_log_zeta() {
        let e = engine();
        let one = prime_zeta_mobius(&e, r(2.0), 1).unwrap().value.re;
        assert!((one - 0.497_700_3).abs() < 1e-7);
        let p2 = prime_zeta(&e, r(2.0)).unwrap().re;
        // The next Möbius terms n = 2, 3, 5 account for the gap up to ~1e-4.
        let lz = |x: f64| e.log_zeta(r(x)).unwrap().re;
        let gap = lz(4.0) / 2.0 + lz(6.0) / 3.0 + lz(10.0) / 5.0;
        assert!((one - p2 - gap).abs() < 1e-4);
        assert!(prime_zeta_mobius(&e, r(2.0), 1)
            .unwrap()
            .certified(1e-12)
            .is_err());
    }

    #[test]
    fn exponential_form() {
        // exp P(s) = ∏_n ζ(ns)^{μ(n)/n} on the real axis.
        let e = engine();
        let p = prime_zeta_mobius(&e, r(2.0), 40).unwrap().value.re;
        let mut prod = 1.0;
        for n in 1..=40 {
            let mu = mobius_small(n);
            if mu != 0 {
                prod *= e
                    .zeta(r(2.0 * n as f64))
                    .unwrap()
                    .re
                    .powf(mu as f64 / n as f64);
            }
        }
        assert!((p.exp() - prod).abs() < 1e-10);
    }

    #[test]
    fn derivative_routes_agree() {
        let e = engine();
        for (s, tol) in [(2.0, 1e-10), (3.0, 1e-12)] {
            let m = prime_zeta_deriv(&e, r(s), 40).unwrap().value.re;
            let d = prime_zeta_deriv_direct(&e, table(), r(s)).unwrap().value.re;
            assert!((m - d).abs() < tol, "s = {s}: {m} vs {d}");
        }
        let first = prime_zeta_deriv(&e, r(2.0), 1).unwrap().value.re;
        assert!((first + 0.569_960_1).abs() < 1e-6);
        // Finite difference of the Möbius route.
        let h = 1e-5;
        let fd = (prime_zeta(&e, r(2.0 + h)).unwrap().re - prime_zeta(&e, r(2.0 - h)).unwrap().re)
            / (2.0 * h);
        assert!((fd - prime_zeta_derivative(&e, r(2.0)).unwrap().re).abs() < 1e-8);
    }

    #[test]
    fn decreasing_on_real_axis() {
        let e = engine();
        let mut prev = f64::INFINITY;
        for i in 0..40 {
            let s = 1.05 + 0.25 * i as f64;
            let v = prime_zeta(&e, r(s)).unwrap().re;
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn regularized_derivative_at_zero() {
        let e = engine();
        let v = prime_zeta_deriv_reg0(&e).unwrap();
        assert!((v + 2.0 * (2.0 * PI).ln()).abs() < 1e-12);
        assert!((v + 3.675_754_132_8).abs() < 1e-10);
        let ratio = e.zeta_log_deriv(r(0.0)).unwrap().re;
        assert!((v - (-2.0) * ratio).abs() < 1e-12);
        assert!(((-v).exp() - 39.478_417_6).abs() < 1e-7);
    }

    #[test]
    fn product_routes() {
        let e = engine();
        let four_pi2 = 4.0 * PI * PI;
        let closed = regularized_prime_product(&e, ProductRoute::ClosedForm).unwrap();
        assert!((closed.product_value - four_pi2).abs() < 1e-9);
        assert!((closed.mu_exponent - (4.0 * PI).ln()).abs() < 1e-12);
        assert_eq!(closed.product_value, PI * closed.mu_exponent.exp());
        let pp = regularized_prime_product(&e, ProductRoute::PprimeRoute).unwrap();
        assert!((pp.product_value - closed.product_value).abs() < 1e-9);
        let zs = regularized_prime_product(
            &e,
            ProductRoute::ZeroSum {
                eta: closed.eta_used + 5e-4,
            },
        )
        .unwrap();
        assert!((zs.product_value - four_pi2).abs() < 2e-2);
    }
}
