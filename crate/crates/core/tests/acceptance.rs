//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the table is always printed:
//! `cargo test --test acceptance`. A criterion that cannot be met is listed in `UNATTAINABLE`;
//! its line stays FAIL and the test instead pins the measured value to an
//! independent high-precision recomputation, so a regression in either
//! direction is caught.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;
use std::sync::OnceLock;

use zetakit::cli::{run_verify, VerifyOptions};
use zetakit::primezeta::{
    prime_zeta_deriv, prime_zeta_deriv_direct, prime_zeta_deriv_reg0, prime_zeta_direct,
    prime_zeta_mobius, regularized_prime_product, ProductRoute,
};
use zetakit::zeros::{eta_from_zeros, explicit_psi, find_zeros, load_zeros, zero_count_estimate};
use zetakit::zeta::{fermi_integral_lhs, fermi_transformed};
use zetakit::{ComplexValue as C, PrecisionConfig, PrimeTable, ZeroTable, ZetaEngine};

/// Criteria whose tolerance is out of reach, with the reason.
const UNATTAINABLE: &[(u32, &str)] = &[(
    5,
    "sharply truncated explicit formula at x=100.5, K=500 is off by 0.1603 \
     (mpmath recomputation agrees to 1e-12); the error oscillates in K and \
     K=500 sits on a swing, only 97 of the K in 200..=1000 fall below 0.1",
)];

/// η = γ + 2 − log 4π at 40 digits (mpmath).
const ETA_REFERENCE: f64 = 0.046_191_417_932_242_067_628_620_495_812_99;
/// −2 log 2π at 40 digits (mpmath).
const MINUS_TWO_LOG_2PI: f64 = -3.675_754_132_818_690_967_121_318_945_62;
/// Truncated explicit formula minus ψ₀ at x = 100.5, K = 500, recomputed
/// with mpmath at 30 digits from the same zero table.
const EXPLICIT_100_5_K500_ERROR: f64 = -0.160_321_653_565_079_94;

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
}

fn engine() -> &'static ZetaEngine {
    static E: OnceLock<ZetaEngine> = OnceLock::new();
    E.get_or_init(ZetaEngine::default)
}

fn sieve() -> &'static PrimeTable {
    static T: OnceLock<PrimeTable> = OnceLock::new();
    T.get_or_init(|| PrimeTable::new(1_000_000).unwrap())
}

fn file_zeros() -> &'static ZeroTable {
    static Z: OnceLock<ZeroTable> = OnceLock::new();
    Z.get_or_init(|| {
        load_zeros(concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_1000.txt")).unwrap()
    })
}

fn r(x: f64) -> C {
    C::new(x, 0.0)
}

fn criterion_1() -> Outcome {
    let p = regularized_prime_product(engine(), ProductRoute::ClosedForm).unwrap();
    let err = (p.product_value - 4.0 * PI * PI).abs();
    Outcome {
        id: 1,
        pass: err < 1e-9,
        detail: format!(
            "pi e^mu = {:.12}, |diff from 4pi^2| = {err:.1e}",
            p.product_value
        ),
    }
}

fn criterion_2() -> Outcome {
    let closed = regularized_prime_product(engine(), ProductRoute::ClosedForm).unwrap();
    let pprime = regularized_prime_product(engine(), ProductRoute::PprimeRoute).unwrap();
    let route_err = (pprime.product_value - closed.product_value).abs();
    let d0 = prime_zeta_deriv_reg0(engine()).unwrap();
    let d0_err = (d0 - MINUS_TWO_LOG_2PI).abs();
    Outcome {
        id: 2,
        pass: route_err < 1e-9 && d0_err < 1e-10,
        detail: format!(
            "routes differ by {route_err:.1e}; P'(0) = {d0:.12} ({d0_err:.1e} from -2 log 2pi)"
        ),
    }
}

fn criterion_3() -> Outcome {
    let eta = engine().eta_closed().unwrap();
    let printed = (eta - 0.04619).abs();
    let internal = (eta - ETA_REFERENCE).abs();
    Outcome {
        id: 3,
        pass: printed < 5e-6 && internal < 1e-9,
        detail: format!(
            "eta = {eta:.12}; |eta - 0.04619| = {printed:.1e}, vs 40-digit value {internal:.1e}"
        ),
    }
}

fn criterion_4() -> Outcome {
    let computed = find_zeros(engine(), 240.0).unwrap();
    let closed = engine().eta_closed().unwrap();
    let e100 = (eta_from_zeros(&computed, 100, true).unwrap() - closed).abs();
    let file = file_zeros();
    let e1000 = (eta_from_zeros(file, 1000, true).unwrap() - closed).abs();
    Outcome {
        id: 4,
        pass: e100 < 5e-4 && e1000 < 5e-5,
        detail: format!("K=100 computed: {e100:.1e}; K=1000 file: {e1000:.1e}"),
    }
}

fn criterion_5() -> (Outcome, f64) {
    let log2pi = engine().zeta_log_deriv(r(0.0)).unwrap().re;
    let z = file_zeros();
    let e10 = explicit_psi(z, 10.5, 200, log2pi).unwrap() - sieve().psi0(10.5).unwrap();
    let e100 = explicit_psi(z, 100.5, 500, log2pi).unwrap() - sieve().psi0(100.5).unwrap();
    (
        Outcome {
            id: 5,
            pass: e10.abs() < 0.05 && e100.abs() < 0.1,
            detail: format!(
                "x=10.5,K=200: {:.4} (< 0.05); x=100.5,K=500: {:.4} (< 0.1)",
                e10.abs(),
                e100.abs()
            ),
        },
        e100,
    )
}

fn criterion_6() -> Outcome {
    let mut worst = 0.0f64;
    for x in [100.0, 1e4] {
        worst = worst.max(sieve().verify_theta_pi_identity(x, 1e-9).unwrap().abs_err);
        worst = worst.max(sieve().verify_psi_bigpi_identity(x, 1e-9).unwrap().abs_err);
    }
    Outcome {
        id: 6,
        pass: worst < 1e-9,
        detail: format!("worst residual {worst:.1e}"),
    }
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0f64;
    for s in [1.5, 2.0, 3.0, 4.0] {
        let m = prime_zeta_mobius(engine(), r(s), 200)
            .unwrap()
            .certified(1e-13)
            .unwrap();
        let d = prime_zeta_direct(engine(), sieve(), r(s)).unwrap().value;
        worst = worst.max((m - d).norm());
    }
    let dm = prime_zeta_deriv(engine(), r(2.0), 200)
        .unwrap()
        .certified(1e-13)
        .unwrap();
    let dd = prime_zeta_deriv_direct(engine(), sieve(), r(2.0))
        .unwrap()
        .value;
    let derr = (dm - dd).norm();
    Outcome {
        id: 7,
        pass: worst < 1e-10 && derr < 1e-10,
        detail: format!("P(s) routes: {worst:.1e}; P'(2) routes: {derr:.1e}"),
    }
}

fn criterion_8() -> Outcome {
    let cfg = PrecisionConfig::default();
    let mut worst = 0.0f64;
    for x in [0.5, 1.0, 2.0, 3.0, 5.0] {
        let lhs = fermi_integral_lhs(x, &cfg).unwrap();
        let rhs = engine().fermi_integral_rhs(x).unwrap();
        worst = worst.max((lhs - rhs).abs() / rhs.abs());
    }
    let t = fermi_transformed(1e-3, &cfg).unwrap();
    let terr = (t - 0.5).abs();
    Outcome {
        id: 8,
        pass: worst < 1e-8 && terr < 1e-3,
        detail: format!("worst relative gap {worst:.1e}; transformed(1e-3) = {t:.6}"),
    }
}

fn criterion_9() -> Outcome {
    let e = engine();
    let mut worst = 0.0f64;
    for i in 0..10 {
        let re = -2.0 + 5.0 * i as f64 / 9.0;
        for im in [-30.0, -11.5, 3.7, 17.0, 30.0] {
            let s = C::new(re, im);
            let a = e.xi(s).unwrap();
            let b = e.xi(1.0 - s).unwrap();
            worst = worst.max((a - b).norm() / (1.0 + a.norm()));
        }
    }
    let half = r(0.5);
    let had = e.xi_hadamard_partial(half, file_zeros(), 500).unwrap().re;
    let herr = (had - e.xi(half).unwrap().re).abs();
    Outcome {
        id: 9,
        pass: worst <= 1e-10 && herr < 1e-3,
        detail: format!(
            "symmetry {worst:.1e} on 50 points; Hadamard(500) at 1/2 off by {herr:.1e}"
        ),
    }
}

fn criterion_10() -> Outcome {
    let found = find_zeros(engine(), 100.0).unwrap();
    let first = found.ordinates()[0];
    let reference = file_zeros().ordinates()[0];
    let ferr = (first - 14.134725142).abs();
    let xerr = (first - reference).abs();
    let gap = (found.len() as f64 - zero_count_estimate(100.0).unwrap()).abs();
    let agree = found
        .ordinates()
        .iter()
        .zip(file_zeros().ordinates())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    Outcome {
        id: 10,
        pass: found.len() == 29 && ferr < 1e-6 && xerr < 1e-6 && gap < 2.0 && agree < 1e-6,
        detail: format!(
            "{} zeros, first {first:.10}, worst gap to table {agree:.1e}, count vs estimate {gap:.3}",
            found.len()
        ),
    }
}

fn criterion_11() -> Outcome {
    let report = run_verify(&VerifyOptions {
        extended: true,
        ..VerifyOptions::default()
    })
    .unwrap();
    let suites = [
        "gamma_recurrence",
        "gamma_reflection",
        "digamma_finite_difference",
        "alternating_series",
        "mobius_convolution",
        "psi_theta_sum",
    ];
    let found: Vec<_> = report
        .checks
        .iter()
        .filter(|c| suites.contains(&c.name.as_str()))
        .collect();
    let failing: Vec<_> = found
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    Outcome {
        id: 11,
        pass: found.len() == suites.len() && failing.is_empty(),
        detail: format!("{} property suites, failing: {failing:?}", found.len()),
    }
}

fn main() {
    let (c5, e100) = criterion_5();
    let outcomes = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        c5,
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
    ];

    for o in &outcomes {
        println!(
            "criterion {:>2}: {}  {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    for (id, why) in UNATTAINABLE {
        println!("criterion {id:>2} is out of reach: {why}");
    }

    for o in &outcomes {
        let known = UNATTAINABLE.iter().any(|(id, _)| *id == o.id);
        if known {
            assert!(
                !o.pass,
                "criterion {} now passes; drop it from UNATTAINABLE",
                o.id
            );
        } else {
            assert!(o.pass, "criterion {} failed: {}", o.id, o.detail);
        }
    }
    // The failing criterion is a property of the formula, not of the code.
    assert!((e100 - EXPLICIT_100_5_K500_ERROR).abs() < 1e-9, "{e100}");
}
