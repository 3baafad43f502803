//! Special functions and quadrature shared by the rest of the crate.
//!
//! Everything here is a pure function of its arguments. The only global
//! state is the Bernoulli table and the computed Euler–Mascheroni constant,
//! both built once on first use.

mod bernoulli;
mod gamma;
mod quad;
mod sum;

pub use bernoulli::{bernoulli, bernoulli_exact};
pub use gamma::{
    digamma, euler_gamma, gamma, harmonic_gap, ln_gamma, pi_factorial, pi_factorial_truncated,
    pi_log_deriv,
};
pub use quad::{
    integrate, integrate_semi_infinite, integrate_semi_infinite_singular, QuadResult, Quadrature,
};
pub use sum::{ComplexSum, NeumaierSum};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex argument `s = σ + iτ` used throughout the crate.
pub type ComplexValue = num_complex::Complex64;

/// Numerical knobs for series, Euler–Maclaurin and quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrecisionConfig {
    /// Minimum length of the direct sum in Euler–Maclaurin evaluations.
    pub em_cutoff: usize,
    /// Number of Bernoulli correction terms in Euler–Maclaurin evaluations.
    pub bernoulli_terms: usize,
    pub quad_rel_tol: f64,
    pub series_rel_tol: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            em_cutoff: 20,
            bernoulli_terms: 12,
            quad_rel_tol: 1e-10,
            series_rel_tol: 1e-12,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_cutoff < 10 {
            return Err(Error::Config(format!("em_cutoff {} < 10", self.em_cutoff)));
        }
        if !(2..=30).contains(&self.bernoulli_terms) {
            return Err(Error::Config(format!(
                "bernoulli_terms {} outside [2, 30]",
                self.bernoulli_terms
            )));
        }
        for (name, tol) in [
            ("quad_rel_tol", self.quad_rel_tol),
            ("series_rel_tol", self.series_rel_tol),
        ] {
            if !(tol > 0.0 && tol <= 1e-3) {
                return Err(Error::Config(format!("{name} {tol:e} outside (0, 1e-3]")));
            }
        }
        Ok(())
    }
}

pub(crate) fn fmt_c(s: ComplexValue) -> String {
    if s.im == 0.0 {
        format!("{}", s.re)
    } else {
        format!("{}{:+}i", s.re, s.im)
    }
}

/// True when `s` is real and a nonpositive integer.
pub(crate) fn is_nonpositive_integer(s: ComplexValue) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        PrecisionConfig::default().validate().unwrap();
    }

    #[test]
    fn config_bounds() {
        let cfg = PrecisionConfig {
            em_cutoff: 9,
            ..PrecisionConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = PrecisionConfig {
            bernoulli_terms: 31,
            ..PrecisionConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = PrecisionConfig {
            quad_rel_tol: 1e-2,
            ..PrecisionConfig::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = PrecisionConfig {
            quad_rel_tol: 0.0,
            ..PrecisionConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
