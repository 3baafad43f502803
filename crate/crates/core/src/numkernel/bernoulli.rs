use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_HALF_INDEX: usize = 30;

/// `B_{2k}` as an exact fraction `(numerator, denominator)`, for `k = 1..=30`.
///
/// Built from the tangent numbers, which the Brent–Harvey recurrence
/// produces in exact integer arithmetic:
/// `B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1))`.
fn exact_table() -> &'static [(BigInt, BigInt)] {
    static TABLE: OnceLock<Vec<(BigInt, BigInt)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = MAX_HALF_INDEX;
        let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
        t[1] = BigInt::one();
        for k in 2..=n {
            t[k] = &t[k - 1] * (k - 1);
        }
        for k in 2..=n {
            for j in k..=n {
                t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
            }
        }
        let mut out = Vec::with_capacity(n);
        for (k, tk) in t.iter().enumerate().skip(1) {
            let four_k = BigInt::one() << (2 * k);
            let mut num = tk * (2 * k);
            if k % 2 == 0 {
                num = -num;
            }
            let den = &four_k * (&four_k - 1);
            let g = num.gcd(&den);
            out.push((num / &g, den / &g));
        }
        out
    })
}

fn float_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        exact_table()
            .iter()
            .map(|(n, d)| n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN))
            .collect()
    })
}

fn check_index(k: u32) -> Result<usize> {
    if k < 2 || k > 2 * MAX_HALF_INDEX as u32 || !k.is_multiple_of(2) {
        return Err(Error::UnsupportedIndex(k));
    }
    Ok(k as usize / 2 - 1)
}

/// Bernoulli number `B_k` for even `k` in `2..=60`.
pub fn bernoulli(k: u32) -> Result<f64> {
    Ok(float_table()[check_index(k)?])
}

/// `B_k` as a reduced fraction `(numerator, denominator)`, denominator positive.
pub fn bernoulli_exact(k: u32) -> Result<(BigInt, BigInt)> {
    Ok(exact_table()[check_index(k)?].clone())
}

/// `B_{2k}` for `k >= 1`, unchecked; used by the series kernels.
#[inline]
pub(crate) fn b2k(k: usize) -> f64 {
    float_table()[k - 1]
}
