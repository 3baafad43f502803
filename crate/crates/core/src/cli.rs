//! Command-line surface: argument parsing, the verification run, and the
//! `eval`, `find-zeros` and `sieve-info` commands.
//!
//! Everything here is library code so that it can be driven from tests;
//! the `zetakit` binary only forwards `std::env::args_os` to [`run`].

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::numkernel::{ComplexValue as C, PrecisionConfig};
use crate::primes::PrimeTable;
use crate::primezeta::{
    prime_zeta, prime_zeta_deriv_direct, prime_zeta_deriv_reg0, prime_zeta_derivative,
    prime_zeta_direct, regularized_prime_product, ProductRoute,
};
use crate::properties;
use crate::report::{fmt_sig, CheckResult, Report, ReportConfig, ZeroSourceInfo};
use crate::zeros::{
    eta_from_zeros, explicit_psi, find_zeros, load_zeros, zero_count_estimate, ZeroSource,
    ZeroTable,
};
use crate::zeta::{zeta0_via_fermi, ZetaEngine, MAX_IM};
use crate::{Error, Result};

/// Zeros computed when no file is given and `--k` is absent.
pub const DEFAULT_K: usize = 100;
pub const DEFAULT_LIMIT: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "zetakit",
    version,
    about = "Prime, zeta and zero computations with cross-checked identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Zero table: one ordinate per line, ascending, '#' comments allowed.
    #[arg(long, global = true, env = "ZETAKIT_ZEROS")]
    pub zeros_file: Option<PathBuf>,
    /// Number of zeros to use (default: 100 computed, or the whole file).
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Add the smooth-density tail to zero sums (default).
    #[arg(long, global = true, overrides_with = "no_tail")]
    pub tail: bool,
    #[arg(long, global = true, overrides_with = "tail")]
    pub no_tail: bool,
    /// Prime sieve limit.
    #[arg(long, global = true, env = "ZETAKIT_LIMIT", default_value_t = DEFAULT_LIMIT)]
    pub limit: u64,
    /// Multiply every verification tolerance by this factor.
    #[arg(long, global = true, env = "ZETAKIT_TOL_SCALE", default_value_t = 1.0)]
    pub tol_scale: f64,
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    /// Minimum Euler–Maclaurin cutoff N.
    #[arg(long, global = true, env = "ZETAKIT_EM_CUTOFF", default_value_t = 20)]
    pub em_cutoff: usize,
    /// Number of Bernoulli correction terms.
    #[arg(
        long,
        global = true,
        env = "ZETAKIT_BERNOULLI_TERMS",
        default_value_t = 12
    )]
    pub bernoulli_terms: usize,
    #[arg(
        long,
        global = true,
        env = "ZETAKIT_QUAD_REL_TOL",
        default_value_t = 1e-10
    )]
    pub quad_rel_tol: f64,
    #[arg(
        long,
        global = true,
        env = "ZETAKIT_SERIES_REL_TOL",
        default_value_t = 1e-12
    )]
    pub series_rel_tol: f64,
}

impl GlobalArgs {
    pub fn precision(&self) -> PrecisionConfig {
        PrecisionConfig {
            em_cutoff: self.em_cutoff,
            bernoulli_terms: self.bernoulli_terms,
            quad_rel_tol: self.quad_rel_tol,
            series_rel_tol: self.series_rel_tol,
        }
    }

    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Table
        }
    }

    fn zero_options(&self) -> ZeroOptions {
        ZeroOptions {
            zeros_file: self.zeros_file.clone(),
            k: self.k,
            tail: !self.no_tail,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full chain of checks and print a report.
    Verify {
        /// Also run the property suites.
        #[arg(long)]
        extended: bool,
    },
    /// Evaluate a single quantity.
    Eval {
        quantity: Quantity,
        /// Complex argument as REAL or REAL,IMAG.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Option<C>,
        #[arg(long)]
        x: Option<f64>,
        #[arg(long, value_enum, default_value_t = RouteArg::ClosedForm)]
        route: RouteArg,
    },
    /// Locate the zeros on the critical line up to t_max and write a table.
    FindZeros {
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
        /// Output file (default: standard output).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Summary of the prime sieve at the configured limit.
    SieveInfo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Theta,
    Psi,
    Pi,
    BigPi,
    Zeta,
    ZetaDeriv,
    Xi,
    PrimeZeta,
    PrimeZetaDeriv,
    Eta,
    ExplicitPsi,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    ClosedForm,
    ZeroSum,
    Pprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Parses `REAL` or `REAL,IMAG`.
pub fn parse_complex(text: &str) -> std::result::Result<C, String> {
    let parse = |p: &str| {
        p.trim()
            .parse::<f64>()
            .map_err(|e| format!("{p:?} is not a number: {e}"))
    };
    let v = match text.split_once(',') {
        Some((re, im)) => C::new(parse(re)?, parse(im)?),
        None => C::new(parse(text)?, 0.0),
    };
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(format!("{text:?} is not finite"));
    }
    Ok(v)
}

/// Where zeros come from and how many to use.
#[derive(Debug, Clone, Default)]
pub struct ZeroOptions {
    pub zeros_file: Option<PathBuf>,
    pub k: Option<usize>,
    pub tail: bool,
}

/// Loads the zero file, or computes enough zeros for `k` (default 100).
/// Returns the table and the number of zeros to use.
pub fn acquire_zeros(engine: &ZetaEngine, opts: &ZeroOptions) -> Result<(ZeroTable, usize)> {
    let table = match &opts.zeros_file {
        Some(path) => load_zeros(path)?,
        None => {
            let k = opts.k.unwrap_or(DEFAULT_K);
            // Smallest height whose smooth count leaves a margin of 3.
            let mut t = 20.0;
            while t < MAX_IM && zero_count_estimate(t)? < (k + 3) as f64 {
                t += 10.0;
            }
            find_zeros(engine, t.min(MAX_IM))?
        }
    };
    let k = opts.k.unwrap_or(match opts.zeros_file {
        Some(_) => table.len(),
        None => DEFAULT_K,
    });
    if k == 0 || k > table.len() {
        return Err(Error::OutOfRange {
            what: "K",
            value: k as f64,
            min: 1.0,
            max: table.len() as f64,
        });
    }
    Ok((table, k))
}

/// Options of a verification run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub precision: PrecisionConfig,
    pub limit: u64,
    pub zeros: ZeroOptions,
    pub tol_scale: f64,
    pub extended: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            precision: PrecisionConfig::default(),
            limit: DEFAULT_LIMIT,
            zeros: ZeroOptions {
                tail: true,
                ..ZeroOptions::default()
            },
            tol_scale: 1.0,
            extended: false,
        }
    }
}

/// The whole chain, from the prime sieve to the regularized product.
pub fn run_verify(opts: &VerifyOptions) -> Result<Report> {
    if !(opts.tol_scale >= 0.0 && opts.tol_scale.is_finite()) {
        return Err(Error::Config(format!(
            "tol_scale = {} must be finite and >= 0",
            opts.tol_scale
        )));
    }
    let engine = ZetaEngine::new(opts.precision)?;
    let table = PrimeTable::new(opts.limit)?;
    let (zeros, k) = acquire_zeros(&engine, &opts.zeros)?;
    let mut checks = Vec::new();

    for x in [100.0, 1e4] {
        checks.push(table.verify_theta_pi_identity(x, 1e-9)?);
        checks.push(table.verify_psi_bigpi_identity(x, 1e-9)?);
    }

    // The truncated explicit formula carries an oscillating error of
    // order x^{1/2}/γ_K; 2% of x covers it from K = 100 on.
    let log2pi = engine.zeta_log_deriv(C::new(0.0, 0.0))?.re;
    for x in [10.5, 100.5] {
        checks.push(CheckResult::new(
            format!("explicit_psi(x={x},K={k})"),
            explicit_psi(&zeros, x, k, log2pi)?,
            table.psi0(x)?,
            0.02 * x,
            "psi0(x) = x - sum_rho x^rho/rho - log 2pi - log(1 - x^-2)/2",
        ));
    }

    let eta_closed = engine.eta_closed()?;
    let eta_zeros = eta_from_zeros(&zeros, k, opts.zeros.tail)?;
    // The density tail leaves an error of order 1/K.
    let eta_tol = 0.05 / k as f64;
    checks.push(CheckResult::new(
        format!("eta_zero_sum(K={k})"),
        eta_zeros,
        eta_closed,
        eta_tol,
        "sum_rho 1/(rho(1-rho)) = gamma + 2 - log 4pi",
    ));

    for s in [1.5, 2.0, 3.0] {
        let s = C::new(s, 0.0);
        checks.push(CheckResult::new(
            format!("prime_zeta_routes(s={})", s.re),
            prime_zeta(&engine, s)?.re,
            prime_zeta_direct(&engine, &table, s)?.value.re,
            1e-10,
            "sum_n mu(n)/n log zeta(ns) = sum_p p^-s",
        ));
    }
    let two = C::new(2.0, 0.0);
    checks.push(CheckResult::new(
        "prime_zeta_deriv_routes(s=2)",
        prime_zeta_derivative(&engine, two)?.re,
        prime_zeta_deriv_direct(&engine, &table, two)?.value.re,
        1e-10,
        "sum_n mu(n) zeta'(ns)/zeta(ns) = -sum_p log p p^-s",
    ));

    for x in [0.5, 1.0, 2.0] {
        checks.push(engine.fermi_identity_check(x, 1e-8)?);
    }
    checks.push(CheckResult::new(
        "zeta0_via_fermi(x=1e-3)",
        zeta0_via_fermi(1e-3, &opts.precision)?,
        engine.zeta(C::new(0.0, 0.0))?.re,
        1e-3,
        "-int_0^inf t^x e^t/(e^t+1)^2 dt -> zeta(0) as x -> 0",
    ));
    checks.push(CheckResult::new(
        "prime_zeta_deriv_reg0",
        prime_zeta_deriv_reg0(&engine)?,
        -2.0 * (2.0 * PI).ln(),
        1e-10,
        "P'(0) = (1/zeta(0)) zeta'(0)/zeta(0) = -2 log 2pi",
    ));

    let four_pi2 = 4.0 * PI * PI;
    let routes = [
        ("closed_form", ProductRoute::ClosedForm, 1e-9),
        (
            "zero_sum",
            ProductRoute::ZeroSum { eta: eta_zeros },
            four_pi2 * eta_tol,
        ),
        ("pprime", ProductRoute::PprimeRoute, 1e-9),
    ];
    for (name, route, tol) in routes {
        checks.push(CheckResult::new(
            format!("prime_product({name})"),
            regularized_prime_product(&engine, route)?.product_value,
            four_pi2,
            tol,
            "prod_p p = pi e^(2 + gamma - eta) = 4 pi^2",
        ));
    }

    let s = C::new(0.3, 5.0);
    let xi_s = engine.xi(s)?;
    let xi_r = engine.xi(1.0 - s)?;
    checks.push(CheckResult::new(
        "xi_functional_equation(s=0.3+5i)",
        xi_s.re,
        xi_r.re,
        1e-10 * (1.0 + xi_s.norm()),
        "xi(s) = xi(1-s)",
    ));
    let half = C::new(0.5, 0.0);
    checks.push(CheckResult::new(
        format!("xi_hadamard(s=1/2,K={k})"),
        engine.xi_hadamard_partial(half, &zeros, k)?.re,
        engine.xi(half)?.re,
        1e-3,
        "xi(s) = xi(0) prod_rho (1 - s/rho)",
    ));

    if opts.extended {
        checks.extend(properties::run_all(&engine, &table)?);
    }

    let checks = checks
        .into_iter()
        .map(|c| c.rescaled(opts.tol_scale))
        .collect();
    let zero_source = match zeros.source() {
        ZeroSource::File(p) => ZeroSourceInfo::File {
            path: p.display().to_string(),
        },
        ZeroSource::Computed { t_max } => ZeroSourceInfo::Computed { t_max: *t_max },
    };
    Ok(Report::new(
        checks,
        ReportConfig {
            precision: opts.precision,
            sieve_limit: opts.limit,
            zeros_available: zeros.len(),
            zeros_used: k,
            zero_source,
            tol_scale: opts.tol_scale,
            extended: opts.extended,
        },
    ))
}

/// A named value printed by `eval` and `sieve-info`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
}

/// Result of `eval`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalOutput {
    pub quantity: String,
    pub input: String,
    pub values: Vec<NamedValue>,
}

impl EvalOutput {
    fn new(quantity: &str, input: String, values: &[(&str, f64)]) -> Self {
        EvalOutput {
            quantity: quantity.to_string(),
            input,
            values: values
                .iter()
                .map(|&(name, value)| NamedValue {
                    name: name.to_string(),
                    value,
                })
                .collect(),
        }
    }

    fn complex(quantity: &str, s: C, v: C) -> Self {
        Self::new(
            quantity,
            format!("s={}", fmt_complex(s)),
            &[("re", v.re), ("im", v.im)],
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializes") + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["quantity", "input", "name", "value"])
                    .expect("in-memory write");
                for v in &self.values {
                    w.write_record([&self.quantity, &self.input, &v.name, &fmt_sig(v.value)])
                        .expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
            }
            Format::Table => {
                let mut out = format!("{}({})\n", self.quantity, self.input);
                for v in &self.values {
                    out.push_str(&format!("  {} = {}\n", v.name, fmt_sig(v.value)));
                }
                out
            }
        }
    }
}

fn fmt_complex(s: C) -> String {
    if s.im == 0.0 {
        format!("{}", s.re)
    } else {
        format!("{}{:+}i", s.re, s.im)
    }
}

fn quantity_name(q: Quantity) -> String {
    q.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// Evaluates one quantity.
pub fn run_eval(
    global: &GlobalArgs,
    quantity: Quantity,
    s: Option<C>,
    x: Option<f64>,
    route: RouteArg,
) -> Result<EvalOutput> {
    let name = quantity_name(quantity);
    let need_s = || s.ok_or_else(|| Error::Config(format!("{name} needs --s")));
    let need_x = || x.ok_or_else(|| Error::Config(format!("{name} needs --x")));
    let engine = ZetaEngine::new(global.precision())?;
    let sieve = || PrimeTable::new(global.limit);
    let real = |v: f64, x: f64| EvalOutput::new(&name, format!("x={x}"), &[("value", v)]);

    Ok(match quantity {
        Quantity::Theta => {
            let x = need_x()?;
            real(sieve()?.theta(x)?, x)
        }
        Quantity::Psi => {
            let x = need_x()?;
            real(sieve()?.psi(x)?, x)
        }
        Quantity::Pi => {
            let x = need_x()?;
            real(sieve()?.pi_count(x)? as f64, x)
        }
        Quantity::BigPi => {
            let x = need_x()?;
            real(sieve()?.big_pi(x)?, x)
        }
        Quantity::Zeta => {
            let s = need_s()?;
            EvalOutput::complex(&name, s, engine.zeta(s)?)
        }
        Quantity::ZetaDeriv => {
            let s = need_s()?;
            EvalOutput::complex(&name, s, engine.zeta_deriv(s)?)
        }
        Quantity::Xi => {
            let s = need_s()?;
            EvalOutput::complex(&name, s, engine.xi(s)?)
        }
        Quantity::PrimeZeta => {
            let s = need_s()?;
            EvalOutput::complex(&name, s, prime_zeta(&engine, s)?)
        }
        Quantity::PrimeZetaDeriv => {
            let s = need_s()?;
            EvalOutput::complex(&name, s, prime_zeta_derivative(&engine, s)?)
        }
        Quantity::Eta => {
            let opts = global.zero_options();
            let (zeros, k) = acquire_zeros(&engine, &opts)?;
            let v = eta_from_zeros(&zeros, k, opts.tail)?;
            EvalOutput::new(
                &name,
                format!("K={k},tail={}", opts.tail),
                &[("value", v), ("closed_form", engine.eta_closed()?)],
            )
        }
        Quantity::ExplicitPsi => {
            let x = need_x()?;
            let (zeros, k) = acquire_zeros(&engine, &global.zero_options())?;
            let log2pi = engine.zeta_log_deriv(C::new(0.0, 0.0))?.re;
            let v = explicit_psi(&zeros, x, k, log2pi)?;
            let mut values = vec![("value", v)];
            if x <= global.limit as f64 {
                values.push(("psi0", sieve()?.psi0(x)?));
            }
            EvalOutput::new(&name, format!("x={x},K={k}"), &values)
        }
        Quantity::Product => {
            let route = match route {
                RouteArg::ClosedForm => ProductRoute::ClosedForm,
                RouteArg::Pprime => ProductRoute::PprimeRoute,
                RouteArg::ZeroSum => {
                    let opts = global.zero_options();
                    let (zeros, k) = acquire_zeros(&engine, &opts)?;
                    ProductRoute::ZeroSum {
                        eta: eta_from_zeros(&zeros, k, opts.tail)?,
                    }
                }
            };
            let r = regularized_prime_product(&engine, route)?;
            let label = route_name(route);
            EvalOutput::new(
                &name,
                format!("route={label}"),
                &[
                    ("value", r.product_value),
                    ("mu", r.mu_exponent),
                    ("eta", r.eta_used),
                ],
            )
        }
    })
}

fn route_name(route: ProductRoute) -> &'static str {
    match route {
        ProductRoute::ClosedForm => "closed-form",
        ProductRoute::ZeroSum { .. } => "zero-sum",
        ProductRoute::PprimeRoute => "pprime",
    }
}

/// Summary of the sieve at `limit`.
pub fn run_sieve_info(limit: u64) -> Result<EvalOutput> {
    let table = PrimeTable::new(limit)?;
    let x = limit as f64;
    let largest = table.primes().last().copied().unwrap_or(0);
    Ok(EvalOutput::new(
        "sieve-info",
        format!("limit={limit}"),
        &[
            ("prime_count", table.pi_count(x)? as f64),
            ("largest_prime", largest as f64),
            ("theta", table.theta(x)?),
            ("psi", table.psi(x)?),
            ("big_pi", table.big_pi(x)?),
        ],
    ))
}

#[derive(Serialize)]
struct ZerosJson<'a> {
    t_max: f64,
    count: usize,
    ordinates: &'a [f64],
}

fn render_zeros(table: &ZeroTable, t_max: f64, format: Format) -> String {
    match format {
        Format::Table => table.to_file_string(),
        Format::Json => {
            let doc = ZerosJson {
                t_max,
                count: table.len(),
                ordinates: table.ordinates(),
            };
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "ordinate"])
                .expect("in-memory write");
            for (i, g) in table.ordinates().iter().enumerate() {
                w.write_record([(i + 1).to_string(), format!("{g:.15}")])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
    }
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    }
}

/// Runs the command line and returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or domain error,
/// 3 I/O or parse error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let format = g.format();
    g.precision().validate()?;
    let io = |e: std::io::Error| Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match &cli.command {
        Command::Verify { extended } => {
            let opts = VerifyOptions {
                precision: g.precision(),
                limit: g.limit,
                zeros: g.zero_options(),
                tol_scale: g.tol_scale,
                extended: *extended,
            };
            let report = run_verify(&opts)?;
            out.write_all(render_report(&report, format).as_bytes())
                .map_err(io)?;
            Ok(if report.overall_pass { 0 } else { 1 })
        }
        Command::Eval {
            quantity,
            s,
            x,
            route,
        } => {
            let v = run_eval(g, *quantity, *s, *x, *route)?;
            out.write_all(v.render(format).as_bytes()).map_err(io)?;
            Ok(0)
        }
        Command::FindZeros { t_max, output } => {
            let engine = ZetaEngine::new(g.precision())?;
            let table = find_zeros(&engine, *t_max)?;
            match output {
                Some(path) => {
                    table.write(path)?;
                    if format != Format::Table {
                        out.write_all(render_zeros(&table, *t_max, format).as_bytes())
                            .map_err(io)?;
                    } else {
                        writeln!(out, "wrote {} ordinates to {}", table.len(), path.display())
                            .map_err(io)?;
                    }
                }
                None => out
                    .write_all(render_zeros(&table, *t_max, format).as_bytes())
                    .map_err(io)?,
            }
            Ok(0)
        }
        Command::SieveInfo => {
            let v = run_sieve_info(g.limit)?;
            out.write_all(v.render(format).as_bytes()).map_err(io)?;
            Ok(0)
        }
    }
}
