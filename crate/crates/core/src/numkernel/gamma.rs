use std::f64::consts::PI;
use std::sync::OnceLock;

use super::bernoulli::b2k;
use super::{fmt_c, is_nonpositive_integer, ComplexSum, ComplexValue, NeumaierSum};
use crate::error::{Error, Result};

type C = ComplexValue;

// Lanczos approximation with g = 607/128 and 15 terms; relative error
// below 1e-15 over the right half-plane.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_09;
const LANCZOS_COEF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

/// `ln Γ(z)` for `re(z) >= 1/2`, continuous in `z` (it is the branch that
/// is real on the positive axis).
fn ln_gamma_right(z: C) -> C {
    let mut ser = C::new(LANCZOS_C0, 0.0);
    for (j, c) in LANCZOS_COEF.iter().enumerate() {
        ser += *c / (z + (j + 1) as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + ser.ln() - z.ln()
}

/// Logarithm of the gamma function.
///
/// For `re(z) >= 1/2` this is the analytic branch that is real on the
/// positive real axis, so `im ln Γ(1/4 + it/2)` varies continuously in `t`.
/// Left of that the reflection formula is used and the imaginary part is
/// only determined modulo 2π.
pub fn ln_gamma(z: C) -> Result<C> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "ln_gamma",
            at: fmt_c(z),
        });
    }
    if z.re >= 0.5 {
        return Ok(ln_gamma_right(z));
    }
    let sin = (z * PI).sin();
    Ok(C::new(PI.ln(), 0.0) - sin.ln() - ln_gamma_right(1.0 - z))
}

/// The gamma function `Γ(s)`.
pub fn gamma(s: C) -> Result<C> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole {
            function: "gamma",
            at: fmt_c(s),
        });
    }
    let overflow = || Error::Overflow {
        function: "gamma",
        at: fmt_c(s),
    };
    if s.re >= 0.5 {
        let lg = ln_gamma_right(s);
        if lg.re > f64::MAX.ln() {
            return Err(overflow());
        }
        let v = lg.exp();
        // Real arguments give exactly real results.
        return Ok(if s.im == 0.0 { C::new(v.re, 0.0) } else { v });
    }
    let denom = (s * PI).sin() * gamma(1.0 - s)?;
    let v = PI / denom;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(overflow());
    }
    Ok(if s.im == 0.0 { C::new(v.re, 0.0) } else { v })
}

/// The factorial function `Π(s) = Γ(s + 1)`.
pub fn pi_factorial(s: C) -> Result<C> {
    if is_nonpositive_integer(s + 1.0) {
        return Err(Error::Pole {
            function: "pi_factorial",
            at: fmt_c(s),
        });
    }
    gamma(s + 1.0)
}

/// First `n_factors` factors of the infinite product
/// `Π(s) = ∏ (1 + s/n)^{-1} (1 + 1/n)^s`. Converges like `O(1/N)`.
pub fn pi_factorial_truncated(s: C, n_factors: usize) -> Result<C> {
    if is_nonpositive_integer(s + 1.0) {
        return Err(Error::Pole {
            function: "pi_factorial_truncated",
            at: fmt_c(s),
        });
    }
    let mut acc = ComplexSum::new();
    for n in 1..=n_factors {
        let nf = n as f64;
        let shift = s / nf;
        let ln_shift = if shift.norm() < 0.5 {
            ln_1p_c(shift)
        } else {
            (1.0 + shift).ln()
        };
        acc.add(s * (1.0 / nf).ln_1p() - ln_shift);
    }
    Ok(acc.value().exp())
}

fn ln_1p_c(w: C) -> C {
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    C::new(re, im)
}

/// The digamma function `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: C) -> Result<C> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole {
            function: "digamma",
            at: fmt_c(z),
        });
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 - z) - π cot(πz)
        let pz = z * PI;
        return Ok(digamma(1.0 - z)? - PI * pz.cos() / pz.sin());
    }
    let mut z = z;
    let mut shift = ComplexSum::new();
    while z.norm() < 12.0 {
        shift.add(-1.0 / z);
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut pow = inv2;
    let mut series = ComplexSum::new();
    for k in 1..=10 {
        series.add(pow * (b2k(k) / (2 * k) as f64));
        pow *= inv2;
    }
    Ok(z.ln() - 0.5 / z - series.value() + shift.value())
}

/// Logarithmic derivative of the factorial function, `Π'(s)/Π(s) = ψ(s+1)`.
pub fn pi_log_deriv(s: C) -> Result<C> {
    if is_nonpositive_integer(s + 1.0) {
        return Err(Error::Pole {
            function: "pi_log_deriv",
            at: fmt_c(s),
        });
    }
    let v = digamma(s + 1.0)?;
    Ok(if s.im == 0.0 { C::new(v.re, 0.0) } else { v })
}

/// Raw sequence `H_n - ln(n + 1)`, whose limit is the Euler–Mascheroni constant.
pub fn harmonic_gap(n: u64) -> f64 {
    let h: NeumaierSum = (1..=n).map(|k| 1.0 / k as f64).collect();
    h.value() - (n as f64).ln_1p()
}

/// The Euler–Mascheroni constant, computed from the harmonic-sum limit.
///
/// `H_n - ln(n+1)` converges like `1/n`; the Euler–Maclaurin expansion
/// `γ = H_n - ln n - 1/(2n) + Σ B_{2k} / (2k n^{2k})` removes the error
/// terms, so a short sum already gives full double precision.
pub fn euler_gamma() -> f64 {
    static GAMMA: OnceLock<f64> = OnceLock::new();
    *GAMMA.get_or_init(|| {
        const N: u64 = 16;
        let n = N as f64;
        let mut acc: NeumaierSum = (1..=N).map(|k| 1.0 / k as f64).collect();
        acc.add(-n.ln());
        acc.add(-0.5 / n);
        let inv2 = 1.0 / (n * n);
        let mut pow = inv2;
        for k in 1..=10 {
            acc.add(b2k(k) / (2 * k) as f64 * pow);
            pow *= inv2;
        }
        acc.value()
    })
}
