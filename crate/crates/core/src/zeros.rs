//! Nontrivial zeros: loading, locating, and the sums built from them.
//!
//! Zeros are carried as ordinates `γ_k > 0`, with `ρ_k = 1/2 + iγ_k` and
//! its conjugate implied. All sums group each zero with its conjugate, which
//! makes them real and absolutely convergent.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::{
    integrate_semi_infinite, ln_gamma, ComplexValue, NeumaierSum, PrecisionConfig,
};
use crate::zeta::{ZetaEngine, MAX_IM};

type C = ComplexValue;

/// Ordinates below this cannot belong to a nontrivial zero.
pub const MIN_ORDINATE: f64 = 13.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroSource {
    File(PathBuf),
    Computed { t_max: f64 },
}

/// Ascending ordinates of nontrivial zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: ZeroSource,
}

impl ZeroTable {
    /// Builds a table after checking that the ordinates are strictly
    /// ascending and above [`MIN_ORDINATE`].
    pub fn new(ordinates: Vec<f64>, source: ZeroSource) -> Result<Self> {
        let path = match &source {
            ZeroSource::File(p) => p.clone(),
            ZeroSource::Computed { .. } => PathBuf::from("<computed>"),
        };
        for (i, &g) in ordinates.iter().enumerate() {
            if !(g > MIN_ORDINATE) || !g.is_finite() {
                return Err(Error::InvalidOrdinate {
                    path,
                    line: i + 1,
                    value: g,
                });
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(Error::Ordering {
                    path,
                    line: i + 1,
                    value: g,
                });
            }
        }
        Ok(ZeroTable { ordinates, source })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> &ZeroSource {
        &self.source
    }

    /// The first `k` zeros as a new table.
    pub fn truncated(&self, k: usize) -> Result<ZeroTable> {
        check_k(k, self.len())?;
        Ok(ZeroTable {
            ordinates: self.ordinates[..k].to_vec(),
            source: self.source.clone(),
        })
    }

    /// Parses the plain-text format: one ordinate per line, `#` comments and
    /// blank lines ignored.
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut ordinates = Vec::new();
        let mut prev = f64::NEG_INFINITY;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value: f64 = line.parse().map_err(|_| Error::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                content: line.to_string(),
            })?;
            if !(value > MIN_ORDINATE) || !value.is_finite() {
                return Err(Error::InvalidOrdinate {
                    path: path.to_path_buf(),
                    line: i + 1,
                    value,
                });
            }
            if value <= prev {
                return Err(Error::Ordering {
                    path: path.to_path_buf(),
                    line: i + 1,
                    value,
                });
            }
            prev = value;
            ordinates.push(value);
        }
        if ordinates.is_empty() {
            return Err(Error::EmptyFile(path.to_path_buf()));
        }
        Ok(ZeroTable {
            ordinates,
            source: ZeroSource::File(path.to_path_buf()),
        })
    }

    /// Serializes in the same format [`load_zeros`] reads.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# nontrivial zeros rho = 1/2 + i*gamma; gamma listed ascending"
        );
        if let ZeroSource::Computed { t_max } = self.source {
            let _ = writeln!(
                out,
                "# located by sign changes of Z(t) for 0 < t <= {t_max}"
            );
        }
        for g in &self.ordinates {
            let _ = writeln!(out, "{g:.12}");
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_file_string()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Reads a zero table from disk.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    ZeroTable::parse(&text, path)
}

fn check_k(k: usize, len: usize) -> Result<()> {
    if k > len {
        return Err(Error::OutOfRange {
            what: "K",
            value: k as f64,
            min: 0.0,
            max: len as f64,
        });
    }
    Ok(())
}

/// Riemann–Siegel phase `ϑ(t) = im log Γ(1/4 + it/2) − (t/2) log π`.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    let lg = ln_gamma(C::new(0.25, 0.5 * t)).expect("no poles off the real axis");
    lg.im - 0.5 * t * PI.ln()
}

/// Hardy's function `Z(t) = e^{iϑ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(engine: &ZetaEngine, t: f64) -> Result<f64> {
    let z = engine.zeta(C::new(0.5, t))?;
    let rot = C::from_polar(1.0, riemann_siegel_theta(t));
    Ok((rot * z).re)
}

/// Smooth main term of the zero-counting function:
/// `(T/2π) log(T/2π) − T/2π + 7/8`.
pub fn zero_count_estimate(t: f64) -> Result<f64> {
    if !(t >= 2.0 * PI * std::f64::consts::E) {
        return Err(Error::domain(
            "zero_count_estimate",
            format!("T = {t} must be at least 2πe"),
        ));
    }
    let u = t / (2.0 * PI);
    Ok(u * u.ln() - u + 0.875)
}

/// Exact number of zeros with `0 < γ <= T` from the argument principle,
/// `N(T) = ϑ(T)/π + 1 + S(T)` with `S(T) = arg ζ(1/2 + iT)/π` continued
/// from `re(s) = +∞`. `T` must not be the ordinate of a zero.
pub fn zero_count_exact(engine: &ZetaEngine, t: f64) -> Result<i64> {
    let start = C::new(1.75, t);
    let start_log = engine.log_zeta(start)?;
    let log_z = engine.continue_log_zeta(start, start_log, C::new(0.5, t))?;
    let n = riemann_siegel_theta(t) / PI + 1.0 + log_z.im / PI;
    let rounded = n.round();
    if (n - rounded).abs() > 0.1 {
        return Err(Error::domain(
            "zero_count_exact",
            format!("N({t}) = {n} is not near an integer"),
        ));
    }
    Ok(rounded as i64)
}

/// Scan step near height `t`: eight points per mean zero spacing.
fn scan_step(t: f64) -> f64 {
    let density = ((t / (2.0 * PI)).ln() / (2.0 * PI)).max(1.0);
    1.0 / (4.0 * density * 2.0)
}

fn scan(engine: &ZetaEngine, t_max: f64, refine: f64) -> Result<Vec<(f64, f64)>> {
    // No zero lies below 14.
    let mut t = 10.0;
    let mut zt = hardy_z(engine, t)?;
    let mut brackets = Vec::new();
    while t < t_max {
        let next = (t + scan_step(t) / refine).min(t_max);
        let zn = hardy_z(engine, next)?;
        if zt.signum() != zn.signum() || zn == 0.0 {
            brackets.push((t, next));
        }
        t = next;
        zt = zn;
    }
    Ok(brackets)
}

fn bisect(engine: &ZetaEngine, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut zlo = hardy_z(engine, lo)?;
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        let zm = hardy_z(engine, mid)?;
        if zm == 0.0 {
            return Ok(mid);
        }
        if zm.signum() == zlo.signum() {
            lo = mid;
            zlo = zm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Locates every zero with `0 < γ <= t_max` on the critical line.
///
/// Sign changes of Z are isolated on a grid and bisected to width `1e-9`.
/// The count is checked against the exact argument-principle count; a
/// mismatch triggers one rescan at a ten times finer step before giving up.
pub fn find_zeros(engine: &ZetaEngine, t_max: f64) -> Result<ZeroTable> {
    if !(14.0..=MAX_IM).contains(&t_max) {
        return Err(Error::OutOfRange {
            what: "t_max",
            value: t_max,
            min: 14.0,
            max: MAX_IM,
        });
    }
    // Count at a point slightly below t_max if t_max sits on a zero.
    let (t_count, expected) = match zero_count_exact(engine, t_max) {
        Ok(n) => (t_max, n),
        Err(_) => {
            let t = t_max - 1e-4;
            (t, zero_count_exact(engine, t)?)
        }
    };
    let mut ordinates = Vec::new();
    for refine in [1.0, 10.0] {
        ordinates.clear();
        for (lo, hi) in scan(engine, t_max, refine)? {
            ordinates.push(bisect(engine, lo, hi)?);
        }
        let found = ordinates.iter().filter(|&&g| g <= t_count).count() as i64;
        if found == expected {
            break;
        }
        if refine > 1.0 {
            return Err(Error::MissedZeros {
                t_max,
                found: found as usize,
                expected,
            });
        }
    }
    for &g in &ordinates {
        let at = engine.xi(C::new(0.5, g))?.norm();
        let near = engine.xi(C::new(0.5, g + 0.5))?.norm();
        if !(at < 1e-6 * near) {
            return Err(Error::ZeroResidual { ordinate: g });
        }
    }
    ZeroTable::new(ordinates, ZeroSource::Computed { t_max })
}

/// `η = Σ_ρ 1/(ρ(1−ρ))` from the first `k` zeros; each conjugate pair adds
/// `2/(1/4 + γ²)`.
///
/// With `with_tail`, the remaining zeros are replaced by the smooth density
/// `(1/2π) log(t/2π)` and `∫_{γ_K}^∞ 2/(1/4 + t²) dN(t)` is added.
pub fn eta_from_zeros(table: &ZeroTable, k: usize, with_tail: bool) -> Result<f64> {
    check_k(k, table.len())?;
    let mut acc = NeumaierSum::new();
    for &g in table.ordinates()[..k].iter().rev() {
        acc.add(2.0 / (0.25 + g * g));
    }
    if with_tail {
        let start = if k == 0 {
            2.0 * PI
        } else {
            table.ordinates()[k - 1]
        };
        acc.add(eta_tail(start)?);
    }
    Ok(acc.value())
}

/// `∫_T^∞ 2/(1/4 + t²) · (1/2π) log(t/2π) dt`.
pub fn eta_tail(t: f64) -> Result<f64> {
    let cfg = PrecisionConfig::default();
    let density = |u: f64| 2.0 / (0.25 + u * u) * (u / (2.0 * PI)).ln() / (2.0 * PI);
    Ok(integrate_semi_infinite(density, t, &cfg)?.value)
}

/// Truncated explicit formula
/// `ψ₀(x) ≈ x − Σ_{k≤K} 2 re(x^{ρ_k}/ρ_k) − ζ′(0)/ζ(0) − ½ log(1 − x^{−2})`.
///
/// `log2pi` is ζ′(0)/ζ(0) as produced by the zeta engine.
pub fn explicit_psi(table: &ZeroTable, x: f64, k: usize, log2pi: f64) -> Result<f64> {
    if !(x > 1.0) {
        return Err(Error::domain(
            "explicit_psi",
            format!("x = {x} must exceed 1"),
        ));
    }
    check_k(k, table.len())?;
    let ln_x = x.ln();
    let sqrt_x = x.sqrt();
    let mut zero_sum = NeumaierSum::new();
    for &g in table.ordinates()[..k].iter().rev() {
        let rho = C::new(0.5, g);
        let term = C::from_polar(sqrt_x, g * ln_x) / rho;
        zero_sum.add(2.0 * term.re);
    }
    let mut acc = NeumaierSum::new();
    acc.add(x);
    acc.add(-zero_sum.value());
    acc.add(-log2pi);
    // Trivial zeros: Σ_k x^{−2k}/(2k) = −½ log(1 − x^{−2}).
    acc.add(-0.5 * (-(x * x).recip()).ln_1p());
    Ok(acc.value())
}
