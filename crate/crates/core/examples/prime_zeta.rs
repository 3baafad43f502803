//! P(s) = Σ_p p^{−s} by the direct prime sum and by Möbius inversion of
//! log ζ, and the derivative P′(s) by both routes.
//!
//! ```sh
//! cargo run --release --example prime_zeta
//! ```

use zetakit::primezeta::{
    prime_zeta, prime_zeta_deriv_direct, prime_zeta_derivative, prime_zeta_direct,
};
use zetakit::{ComplexValue as C, PrimeTable, ZetaEngine};

fn main() -> zetakit::Result<()> {
    let engine = ZetaEngine::default();
    let table = PrimeTable::new(1_000_000)?;

    println!(
        "{:>5} {:>20} {:>20} {:>10} {:>10}",
        "s", "Mobius", "direct", "tail", "gap"
    );
    for s in [1.5, 2.0, 3.0, 4.0] {
        let s = C::new(s, 0.0);
        let m = prime_zeta(&engine, s)?.re;
        let d = prime_zeta_direct(&engine, &table, s)?;
        println!(
            "{:>5} {m:>20.16} {:>20.16} {:>10.2e} {:>10.1e}",
            s.re,
            d.value.re,
            d.tail.re,
            (m - d.value.re).abs()
        );
    }

    let two = C::new(2.0, 0.0);
    println!(
        "P'(2): Mobius {:.16}, direct {:.16}",
        prime_zeta_derivative(&engine, two)?.re,
        prime_zeta_deriv_direct(&engine, &table, two)?.value.re
    );

    let s = C::new(2.0, 3.0);
    let v = prime_zeta(&engine, s)?;
    println!("P(2+3i) = {:.15} {:+.15}i", v.re, v.im);
    Ok(())
}
