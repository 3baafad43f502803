//! Prime sieve, Chebyshev functions and the two partial-summation identities.
//!
//! ```sh
//! cargo run --release --example chebyshev -- 100000
//! ```

use zetakit::PrimeTable;

fn main() -> zetakit::Result<()> {
    let limit: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100_000);
    let table = PrimeTable::new(limit)?;

    println!(
        "{:>10} {:>8} {:>16} {:>16} {:>12}",
        "x", "pi(x)", "theta(x)", "psi(x)", "Pi(x)"
    );
    let mut x = 10.0;
    while x <= limit as f64 {
        println!(
            "{:>10} {:>8} {:>16.6} {:>16.6} {:>12.4}",
            x,
            table.pi_count(x)?,
            table.theta(x)?,
            table.psi(x)?,
            table.big_pi(x)?
        );
        x *= 10.0;
    }

    println!();
    for x in [100.0, 1e4] {
        if x > limit as f64 {
            break;
        }
        for c in [
            table.verify_theta_pi_identity(x, 1e-9)?,
            table.verify_psi_bigpi_identity(x, 1e-9)?,
        ] {
            println!(
                "{:<30} residual {:.2e}  ({})",
                c.name, c.abs_err, c.identity
            );
        }
    }
    Ok(())
}
