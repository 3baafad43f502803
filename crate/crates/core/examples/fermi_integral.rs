//! ∫_0^∞ x t^{x−1}/(e^t + 1) dt against (1 − 2^{1−x}) ζ(x) Γ(x+1), and the
//! limit x → 0 that pins down ζ(0).
//!
//! ```sh
//! cargo run --release --example fermi_integral
//! ```

use zetakit::zeta::{fermi_integral_lhs, fermi_transformed};
use zetakit::{PrecisionConfig, ZetaEngine};

fn main() -> zetakit::Result<()> {
    let cfg = PrecisionConfig::default();
    let engine = ZetaEngine::new(cfg)?;

    for x in [0.5, 1.0, 2.0, 3.0, 5.0] {
        let lhs = fermi_integral_lhs(x, &cfg)?;
        let rhs = engine.fermi_integral_rhs(x)?;
        println!(
            "x = {x}: integral {lhs:.15}  closed form {rhs:.15}  rel {:.1e}",
            (lhs - rhs).abs() / rhs
        );
    }

    for x in [1e-1, 1e-2, 1e-3, 0.0] {
        println!(
            "transformed integral at x = {x:<6} {:.10}",
            fermi_transformed(x, &cfg)?
        );
    }
    println!(
        "so zeta(0) = -1/2; engine gives {}",
        engine.zeta(zetakit::ComplexValue::new(0.0, 0.0))?.re
    );
    Ok(())
}
