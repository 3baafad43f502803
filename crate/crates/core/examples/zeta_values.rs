//! ζ, ζ′ and ξ from the Euler–Maclaurin engine, including the continuation
//! to ζ(0) and ζ(−1) and the functional equation of ξ.
//!
//! ```sh
//! cargo run --example zeta_values
//! ```

use zetakit::{ComplexValue as C, ZetaEngine};

fn main() -> zetakit::Result<()> {
    let engine = ZetaEngine::default();

    for s in [2.0, 0.0, -1.0, 0.5] {
        let (z, dz) = engine.zeta_and_deriv(C::new(s, 0.0))?;
        println!(
            "zeta({s:>4}) = {:>20.15}   zeta'({s:>4}) = {:>20.15}",
            z.re, dz.re
        );
    }

    let s = C::new(0.5, 14.134725141734695);
    println!("|zeta(1/2 + 14.1347i)|   = {:.3e}", engine.zeta(s)?.norm());

    let s = C::new(0.3, 5.0);
    let (a, b) = (engine.xi(s)?, engine.xi(1.0 - s)?);
    println!("xi(0.3+5i)  = {:.15} {:+.3e}i", a.re, a.im);
    println!("xi(0.7-5i)  = {:.15} {:+.3e}i", b.re, b.im);
    println!("xi(1/2)     = {:.15}", engine.xi(C::new(0.5, 0.0))?.re);
    Ok(())
}
