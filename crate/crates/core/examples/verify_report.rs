//! Run the whole verification chain from library code and print the
//! report as JSON.
//!
//! ```sh
//! cargo run --release --example verify_report
//! ```

use zetakit::cli::{run_verify, VerifyOptions};

fn main() -> zetakit::Result<()> {
    let report = run_verify(&VerifyOptions {
        extended: true,
        ..VerifyOptions::default()
    })?;
    println!("{}", report.to_json());
    std::process::exit(if report.overall_pass { 0 } else { 1 });
}
