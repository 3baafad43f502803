//! Gamma, digamma, the Euler–Mascheroni constant and Bernoulli numbers.
//!
//! ```sh
//! cargo run --example special_functions
//! ```

use zetakit::numkernel::{bernoulli_exact, digamma, euler_gamma, gamma, pi_log_deriv};
use zetakit::ComplexValue as C;

fn main() -> zetakit::Result<()> {
    let g = euler_gamma();
    println!("Euler-Mascheroni gamma     = {g:.15}");
    println!(
        "-Pi'(0)/Pi(0)              = {:.15}",
        -pi_log_deriv(C::new(0.0, 0.0))?.re
    );

    for s in [
        C::new(0.5, 0.0),
        C::new(5.0, 0.0),
        C::new(0.5, 1.0),
        C::new(-1.5, 2.0),
    ] {
        let v = gamma(s)?;
        println!("Gamma({s})  = {:.15} {:+.15}i", v.re, v.im);
    }
    println!(
        "digamma(1)                 = {:.15}",
        digamma(C::new(1.0, 0.0))?.re
    );

    for k in [2, 4, 12, 20] {
        let (num, den) = bernoulli_exact(k)?;
        println!("B_{k:<2} = {num}/{den}");
    }
    Ok(())
}
