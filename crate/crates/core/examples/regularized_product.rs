//! The ζ-regularized product of all primes by three independent routes.
//!
//! ```sh
//! cargo run --release --example regularized_product
//! ```

use zetakit::primezeta::{prime_zeta_deriv_reg0, regularized_prime_product, ProductRoute};
use zetakit::zeros::{eta_from_zeros, load_zeros};
use zetakit::ZetaEngine;

fn main() -> zetakit::Result<()> {
    let engine = ZetaEngine::default();
    let zeros = load_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_1000.txt"))?;
    let eta = eta_from_zeros(&zeros, zeros.len(), true)?;

    println!(
        "regularized P'(0) = {:.12}",
        prime_zeta_deriv_reg0(&engine)?
    );
    for route in [
        ProductRoute::ClosedForm,
        ProductRoute::ZeroSum { eta },
        ProductRoute::PprimeRoute,
    ] {
        let r = regularized_prime_product(&engine, route)?;
        println!(
            "{:<40} mu = {:.12}  product = {:.12}",
            format!("{route:?}"),
            r.mu_exponent,
            r.product_value
        );
    }
    println!("4 pi^2 = {:.12}", 4.0 * std::f64::consts::PI.powi(2));
    Ok(())
}
