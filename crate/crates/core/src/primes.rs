//! Sieve tables and the Chebyshev functions θ, ψ, π and Π.
//!
//! The partial-summation identities
//!
//! ```text
//! π(x) = θ(x)/log x + ∫_2^x θ(t)/(t log² t) dt
//! Π(x) = ψ(x)/log x + ∫_2^x ψ(t)/(t log² t) dt
//! ```
//!
//! are checked with the integrals evaluated exactly: θ and ψ are step
//! functions and `∫ dt/(t log² t) = -1/log t`, so each step contributes a
//! closed-form term and no quadrature error enters.

use crate::error::{Error, Result};
use crate::numkernel::NeumaierSum;
use crate::report::CheckResult;

pub const MAX_LIMIT: u64 = 100_000_000;

/// Primes, Möbius values and prime-power markers up to `limit`.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u32>,
    mobius: Vec<i8>,
    /// `k` when `n = p^k`, otherwise 0.
    prime_power_exp: Vec<u8>,
    /// `theta_prefix[i] = θ(primes[i])`.
    theta_prefix: Vec<f64>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Result<Self> {
        if !(2..=MAX_LIMIT).contains(&limit) {
            return Err(Error::OutOfRange {
                what: "sieve limit",
                value: limit as f64,
                min: 2.0,
                max: MAX_LIMIT as f64,
            });
        }
        let n = limit as usize;
        let mut composite = vec![0u64; n / 64 + 1];
        let mut mobius = vec![1i8; n + 1];
        let mut prime_power_exp = vec![0u8; n + 1];
        mobius[0] = 0;
        let mut primes = Vec::with_capacity(estimate_prime_count(n));

        for p in 2..=n {
            if composite[p / 64] >> (p % 64) & 1 == 1 {
                continue;
            }
            primes.push(p as u32);
            for m in (p..=n).step_by(p) {
                mobius[m] = -mobius[m];
            }
            if let Some(sq) = p.checked_mul(p).filter(|&sq| sq <= n) {
                for m in (sq..=n).step_by(p) {
                    composite[m / 64] |= 1 << (m % 64);
                }
                for m in (sq..=n).step_by(sq) {
                    mobius[m] = 0;
                }
            }
            let mut pk = p;
            let mut k = 1u8;
            loop {
                prime_power_exp[pk] = k;
                match pk.checked_mul(p) {
                    Some(next) if next <= n => {
                        pk = next;
                        k += 1;
                    }
                    _ => break,
                }
            }
        }

        let mut acc = NeumaierSum::new();
        let theta_prefix = primes
            .iter()
            .map(|&p| {
                acc.add((p as f64).ln());
                acc.value()
            })
            .collect();

        Ok(PrimeTable {
            limit,
            primes,
            mobius,
            prime_power_exp,
            theta_prefix,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    fn check_n(&self, n: u64) -> Result<usize> {
        if n < 1 || n > self.limit {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as f64,
                min: 1.0,
                max: self.limit as f64,
            });
        }
        Ok(n as usize)
    }

    /// `⌊x⌋` for `min <= x <= limit`.
    fn check_x(&self, x: f64, min: f64) -> Result<u64> {
        if !(x >= min && x <= self.limit as f64) {
            return Err(Error::OutOfRange {
                what: "x",
                value: x,
                min,
                max: self.limit as f64,
            });
        }
        Ok(x.floor() as u64)
    }

    /// Möbius function μ(n).
    pub fn mobius(&self, n: u64) -> Result<i8> {
        Ok(self.mobius[self.check_n(n)?])
    }

    /// The prime `p` when `n = p^k`, `k >= 1`.
    pub fn mangoldt_base(&self, n: u64) -> Result<Option<u64>> {
        let i = self.check_n(n)?;
        Ok(match self.prime_power_exp[i] {
            0 => None,
            k => Some(integer_root(n, k as u32)),
        })
    }

    /// von Mangoldt function Λ(n).
    pub fn mangoldt(&self, n: u64) -> Result<f64> {
        Ok(self.mangoldt_base(n)?.map_or(0.0, |p| (p as f64).ln()))
    }

    fn count_upto(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| p as u64 <= n)
    }

    fn theta_upto(&self, n: u64) -> f64 {
        match self.count_upto(n) {
            0 => 0.0,
            c => self.theta_prefix[c - 1],
        }
    }

    /// Prime-counting function π(x).
    pub fn pi_count(&self, x: f64) -> Result<u64> {
        Ok(self.count_upto(self.check_x(x, 0.0)?) as u64)
    }

    /// θ(x) = Σ_{p≤x} log p.
    pub fn theta(&self, x: f64) -> Result<f64> {
        Ok(self.theta_upto(self.check_x(x, 0.0)?))
    }

    /// ψ(x) = Σ_{n≤x} Λ(n), summed directly over the von Mangoldt table.
    pub fn psi(&self, x: f64) -> Result<f64> {
        let n = self.check_x(x, 0.0)?;
        let mut acc = NeumaierSum::new();
        for (m, &k) in self.prime_power_exp.iter().enumerate().take(n as usize + 1) {
            if k != 0 {
                acc.add((integer_root(m as u64, k as u32) as f64).ln());
            }
        }
        Ok(acc.value())
    }

    /// ψ(x) = Σ_k θ(x^{1/k}).
    pub fn psi_via_theta(&self, x: f64) -> Result<f64> {
        let n = self.check_x(x, 0.0)?;
        let mut acc = NeumaierSum::new();
        for k in 1..=max_root_order(n) {
            acc.add(self.theta_upto(integer_root(n, k)));
        }
        Ok(acc.value())
    }

    /// ψ averaged across its jumps: ψ(x) − Λ(x)/2 when x is a prime power.
    pub fn psi0(&self, x: f64) -> Result<f64> {
        let n = self.check_x(x, 2.0)?;
        let psi = self.psi(x)?;
        if x.fract() == 0.0 {
            Ok(psi - 0.5 * self.mangoldt(n)?)
        } else {
            Ok(psi)
        }
    }

    /// Π(x) = Σ_k π(x^{1/k})/k.
    pub fn big_pi(&self, x: f64) -> Result<f64> {
        let n = self.check_x(x, 2.0)?;
        let mut acc = NeumaierSum::new();
        for k in 1..=max_root_order(n) {
            acc.add(self.count_upto(integer_root(n, k)) as f64 / k as f64);
        }
        Ok(acc.value())
    }

    /// π(x) against θ(x)/log x + ∫_2^x θ(t)/(t log² t) dt.
    pub fn verify_theta_pi_identity(&self, x: f64, tol: f64) -> Result<CheckResult> {
        let n = self.check_x(x, 2.0)?;
        let count = self.count_upto(n);
        let inv_log_x = 1.0 / x.ln();
        // With a_j = θ(p_j), the integral telescopes into
        // Σ_{j<k} a_j (1/log p_j − 1/log p_{j+1}) + a_k (1/log p_k − 1/log x).
        let mut integral = NeumaierSum::new();
        for j in 0..count {
            let a_j = self.theta_prefix[j];
            let lo = 1.0 / (self.primes[j] as f64).ln();
            let hi = if j + 1 < count {
                1.0 / (self.primes[j + 1] as f64).ln()
            } else {
                inv_log_x
            };
            integral.add(a_j * (lo - hi));
        }
        let theta = self.theta_upto(n);
        let rhs = theta * inv_log_x + integral.value();
        Ok(CheckResult::new(
            format!("theta_pi_identity(x={x})"),
            count as f64,
            rhs,
            tol,
            "pi(x) = theta(x)/log x + int_2^x theta(t)/(t log^2 t) dt",
        ))
    }

    /// Π(x) against ψ(x)/log x + Σ_{n≤x} Λ(n) ∫_n^x dt/(t log² t).
    pub fn verify_psi_bigpi_identity(&self, x: f64, tol: f64) -> Result<CheckResult> {
        let n = self.check_x(x, 2.0)?;
        let inv_log_x = 1.0 / x.ln();
        let mut integral = NeumaierSum::new();
        let mut psi = NeumaierSum::new();
        for (m, &k) in self.prime_power_exp.iter().enumerate().take(n as usize + 1) {
            if k == 0 {
                continue;
            }
            let lambda = (integer_root(m as u64, k as u32) as f64).ln();
            psi.add(lambda);
            integral.add(lambda * (1.0 / (m as f64).ln() - inv_log_x));
        }
        let rhs = psi.value() * inv_log_x + integral.value();
        Ok(CheckResult::new(
            format!("psi_bigpi_identity(x={x})"),
            self.big_pi(x)?,
            rhs,
            tol,
            "Pi(x) = psi(x)/log x + int_2^x psi(t)/(t log^2 t) dt",
        ))
    }
}

fn estimate_prime_count(n: usize) -> usize {
    if n < 10 {
        4
    } else {
        let x = n as f64;
        (1.26 * x / x.ln()) as usize
    }
}

/// Largest `k` with `2^k <= n`.
fn max_root_order(n: u64) -> u32 {
    if n < 2 {
        0
    } else {
        63 - n.leading_zeros()
    }
}

/// `⌊n^{1/k}⌋`, exact at perfect powers.
pub fn integer_root(n: u64, k: u32) -> u64 {
    if k <= 1 || n < 2 {
        return n;
    }
    let fits = |r: u64| r.checked_pow(k).is_some_and(|v| v <= n);
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}
