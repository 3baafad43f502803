//! Prime sums, ζ and its zeros, cross-checked to show that the primes
//! multiply to 4π² under ζ-regularization.
//!
//! The crate evaluates, from its own kernels, every quantity in the chain
//!
//! ```text
//! θ, ψ, π, Π  →  explicit formula over zeros  →  η = Σ 1/(ρ(1−ρ)) = γ + 2 − log 4π
//!             →  P(s) = Σ_p p^{-s},  P′(0) = −2 log 2π  →  ∏ p = π e^{2+γ−η} = 4π²
//! ```
//!
//! and checks each identity against an independent second route.
//!
//! ```
//! use zetakit::primezeta::{regularized_prime_product, ProductRoute};
//! use zetakit::zeta::ZetaEngine;
//!
//! let engine = ZetaEngine::default();
//! let product = regularized_prime_product(&engine, ProductRoute::ClosedForm).unwrap();
//! assert!((product.product_value - 4.0 * std::f64::consts::PI.powi(2)).abs() < 1e-9);
//! ```

// Comparisons are written as `!(x > a)` on purpose so that NaN is rejected,
// and reference constants keep every digit they were computed with.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod numkernel;
pub mod primes;
pub mod primezeta;
pub mod properties;
pub mod report;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
pub use numkernel::{ComplexValue, PrecisionConfig};
pub use primes::PrimeTable;
pub use report::{CheckResult, Report};
pub use zeros::ZeroTable;
pub use zeta::ZetaEngine;
