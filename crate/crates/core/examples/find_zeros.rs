//! Locate zeros on the critical line by sign changes of Hardy's Z and
//! compare against the smooth and exact zero counts.
//!
//! ```sh
//! cargo run --release --example find_zeros -- 100
//! ```

use zetakit::zeros::{find_zeros, hardy_z, zero_count_estimate, zero_count_exact};
use zetakit::ZetaEngine;

fn main() -> zetakit::Result<()> {
    let t_max: f64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100.0);
    let engine = ZetaEngine::default();
    let table = find_zeros(&engine, t_max)?;

    for (i, g) in table.ordinates().iter().enumerate().take(10) {
        println!(
            "gamma_{:<3} = {g:.10}   Z(gamma) = {:+.1e}",
            i + 1,
            hardy_z(&engine, *g)?
        );
    }
    if table.len() > 10 {
        println!("... {} more", table.len() - 10);
    }
    println!(
        "found {} zeros up to T = {t_max}; smooth estimate {:.3}, argument principle {}",
        table.len(),
        zero_count_estimate(t_max)?,
        zero_count_exact(&engine, t_max)?
    );
    Ok(())
}
