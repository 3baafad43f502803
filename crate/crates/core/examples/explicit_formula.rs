//! ψ₀(x) rebuilt from zeros of ζ, compared with the sieve value.
//!
//! ```sh
//! cargo run --release --example explicit_formula -- 100.5
//! ```

use zetakit::zeros::{explicit_psi, load_zeros};
use zetakit::{ComplexValue as C, PrimeTable, ZetaEngine};

fn main() -> zetakit::Result<()> {
    let x: f64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100.5);
    let engine = ZetaEngine::default();
    let table = PrimeTable::new(x.max(2.0) as u64 + 1)?;
    let zeros = load_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_1000.txt"))?;
    let log2pi = engine.zeta_log_deriv(C::new(0.0, 0.0))?.re;
    let psi0 = table.psi0(x)?;

    println!("psi0({x}) = {psi0:.10} from the sieve");
    for k in [10, 50, 100, 200, 500, 1000] {
        let v = explicit_psi(&zeros, x, k, log2pi)?;
        println!("K = {k:>4}: {v:>16.10}   error {:+.4}", v - psi0);
    }
    Ok(())
}
