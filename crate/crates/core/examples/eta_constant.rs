//! η = Σ_ρ 1/(ρ(1−ρ)): the closed form γ + 2 − log 4π against partial sums
//! over zeros, with and without the density tail.
//!
//! ```sh
//! cargo run --release --example eta_constant
//! ```

use zetakit::zeros::{eta_from_zeros, load_zeros};
use zetakit::ZetaEngine;

fn main() -> zetakit::Result<()> {
    let engine = ZetaEngine::default();
    let closed = engine.eta_closed()?;
    println!("closed form  eta = {closed:.12}");

    let zeros = load_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_1000.txt"))?;
    println!(
        "{:>6} {:>16} {:>16} {:>12}",
        "K", "bare sum", "with tail", "error"
    );
    for k in [1, 10, 100, 1000] {
        let bare = eta_from_zeros(&zeros, k, false)?;
        let tail = eta_from_zeros(&zeros, k, true)?;
        println!(
            "{k:>6} {bare:>16.12} {tail:>16.12} {:>12.2e}",
            (tail - closed).abs()
        );
    }
    Ok(())
}
