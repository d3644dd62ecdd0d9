//! Command-line front end for the `ajack` binary.
//!
//! Exit codes: 0 when every requested check passes, 1 on a check failure,
//! 2 on invalid parameters. Reports go to stdout or to `--output`.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::{self, JackLabel};
use crate::modular::{self, clean, GMode, SMatrix, SelbergMode};
use crate::qseries::{format_rational, NomeSeries, ScaledSeries, SeriesJson};
use crate::suite::{self, CheckLine, Settings};
use crate::tol;

/// Environment variable holding the default truncation order.
pub const DEFAULT_ORDER_ENV: &str = "AJACK_DEFAULT_ORDER";
const FALLBACK_ORDER: u32 = 10;

#[derive(Parser, Debug)]
#[command(name = "ajack", version, about = "Affine Jack polynomials for affine sl2: series, modular data, identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Affine Jack polynomials as exact series.
    #[command(subcommand)]
    Jack(JackCmd),
    /// The matrices S(K,k) and S^J(K,k).
    #[command(subcommand)]
    Smatrix(SmatrixCmd),
    /// Numeric modular transformation of J.
    #[command(subcommand)]
    Modular(ModularCmd),
    /// Selberg integrals.
    #[command(subcommand)]
    Selberg(SelbergCmd),
    /// The normalization factors g_{m,K,k}.
    Gfactor(GfactorArgs),
    /// Theta function transformation laws.
    #[command(subcommand)]
    Theta(ThetaCmd),
    /// Acceptance suite.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Level {
    /// Level K >= 0.
    #[arg(long = "K")]
    pub level: i64,
    /// Coupling k >= 1.
    #[arg(long)]
    pub k: i64,
}

#[derive(Args, Debug, Clone)]
pub struct Label {
    #[command(flatten)]
    pub level: Level,
    /// Label k <= l <= K + k.
    #[arg(long)]
    pub l: i64,
    /// Truncation order; defaults to $AJACK_DEFAULT_ORDER or 10.
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum JackCmd {
    /// Compute J (or Ĵ with --unnormalized).
    Compute {
        #[command(flatten)]
        label: Label,
        #[arg(long)]
        unnormalized: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Closed form at level 1 or 2, compared with the recursion.
    ClosedForm {
        #[command(flatten)]
        label: Label,
        #[command(flatten)]
        common: Common,
    },
    /// Level-1 closed forms for k in 1..=4.
    CheckLevel1 {
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Level-2 closed forms for k in 1..=3.
    CheckLevel2 {
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// The first-order heat equation for the transition matrix.
    HeatCheck {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SForm {
    Product,
    Macdonald,
    Fixture,
}

#[derive(Subcommand, Debug)]
pub enum SmatrixCmd {
    /// Build S(K,k).
    Build {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_enum, default_value_t = SForm::Product)]
        form: SForm,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the product, Macdonald and (for K <= 4) fixture forms.
    CrossCheck {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// The constant part of S^J(K,k) and its tau weight.
    Sj {
        #[command(flatten)]
        level: Level,
        #[command(flatten)]
        common: Common,
    },
    /// (S^J)^2 and (S^J T^J)^3 proportionalities.
    Relations {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum ModularCmd {
    /// Evaluate both sides of the S transformation of J.
    VerifyS {
        #[command(flatten)]
        level: Level,
        #[arg(long, default_value = "0,1.3")]
        tau: String,
        #[arg(long, default_value = "0.17,0")]
        z: String,
        #[arg(long, default_value = "0,0")]
        u: String,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BMode {
    Closed,
    Quadrature,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum SelbergCmd {
    /// B_n(alpha, beta, gamma).
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, value_enum, default_value_t = BMode::Closed)]
        mode: BMode,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GKind {
    Absolute,
    Ratio,
}

#[derive(Args, Debug)]
pub struct GfactorArgs {
    #[command(flatten)]
    pub level: Level,
    #[arg(long)]
    pub m: i64,
    #[arg(long, value_enum, default_value_t = GKind::Ratio)]
    pub mode: GKind,
    /// Step for ratio mode: g_m / g_{m+n}.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub n: i64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Subcommand, Debug)]
pub enum ThetaCmd {
    /// S- and T-laws at seeded random points, plus the triple product.
    CheckLaws {
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = suite::THETA_SEED)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        order: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// A1 to A12 (A1 to A11 at reduced orders with --quick).
    Acceptance {
        #[arg(long)]
        quick: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// A finished command: its report and whether the checks passed.
#[derive(Debug)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
    pub output: Option<std::path::PathBuf>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `--order`, else `$AJACK_DEFAULT_ORDER`, else 10.
pub fn resolve_order(order: Option<u32>) -> Result<u32> {
    if let Some(o) = order {
        return Ok(o);
    }
    match std::env::var(DEFAULT_ORDER_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{DEFAULT_ORDER_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(FALLBACK_ORDER),
    }
}

fn resolve_tol(t: Option<f64>, default: f64) -> Result<f64> {
    let t = t.unwrap_or(default);
    if t.is_nan() || t <= 0.0 {
        return Err(usage(format!("tolerance must be positive, got {t}")));
    }
    Ok(t)
}

/// Parses `"re,im"` (or a bare real part).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || usage(format!("expected \"re,im\", got {s:?}"));
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "0"),
    };
    Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
}

fn check_level(l: &Level) -> Result<()> {
    if l.level < 0 || l.k < 1 {
        return Err(usage(format!("need K >= 0 and k >= 1, got K={}, k={}", l.level, l.k)));
    }
    Ok(())
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct JackJson {
    K: i64,
    k: i64,
    l: i64,
    alpha: String,
    eigenvalue: String,
    normalized: bool,
    #[serde(flatten)]
    series: SeriesJson,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PartJson {
    i_power: u8,
    two_exp: String,
    series: SeriesJson,
}

fn scaled_json(s: &ScaledSeries) -> Vec<PartJson> {
    s.parts()
        .map(|(b, ser)| PartJson { i_power: b.i_power(), two_exp: format_rational(b.two_exp()), series: ser.to_json() })
        .collect()
}

#[derive(Serialize)]
struct LinesJson<'a> {
    passed: bool,
    checks: &'a [CheckLine],
}

fn lines_report(lines: &[CheckLine], format: Format) -> Outcome {
    let passed = lines.iter().all(|l| l.passed);
    let report = match format {
        Format::Json => serde_json::to_string(&LinesJson { passed, checks: lines }).expect("plain data"),
        Format::Csv => {
            let mut s = String::from("id,passed,name,detail\n");
            for l in lines {
                writeln!(s, "{},{},\"{}\",\"{}\"", l.id, l.passed, l.name, l.detail.replace('"', "'")).unwrap();
            }
            s
        }
        Format::Text => lines.iter().map(|l| format!("{l}\n")).collect(),
    };
    Outcome { report, passed, output: None }
}

fn matrix_report(m: &SMatrix, format: Format) -> String {
    match format {
        Format::Json => m.to_json(),
        Format::Csv => m.to_csv(),
        Format::Text => m.to_text(),
    }
}

fn series_text(s: &NomeSeries) -> String {
    format!("{s}\n")
}

fn jack_cmd(cmd: JackCmd) -> Result<Outcome> {
    match cmd {
        JackCmd::Compute { label, unnormalized, common } => {
            let order = resolve_order(label.order)?;
            let lab = JackLabel::new(label.level.level, label.level.k, label.l)?;
            let res = jack::jack_series(lab, order)?;
            let series = if unnormalized { &res.unnormalized } else { &res.normalized };
            let report = match common.format {
                Format::Json => serde_json::to_string(&JackJson {
                    K: lab.level,
                    k: lab.k,
                    l: lab.l,
                    alpha: format_rational(&res.alpha),
                    eigenvalue: format_rational(&res.eigenvalue),
                    normalized: !unnormalized,
                    series: series.to_json(),
                })
                .expect("plain data"),
                Format::Csv => {
                    let mut s = String::from("p_exponent,j,coefficient\n");
                    for (e, c) in series.terms() {
                        for (j, v) in c.iter() {
                            writeln!(s, "{},{j},{}", format_rational(&e), format_rational(v)).unwrap();
                        }
                    }
                    s
                }
                Format::Text => format!(
                    "K={} k={} l={} alpha={} eigenvalue={}\n{}",
                    lab.level,
                    lab.k,
                    lab.l,
                    res.alpha,
                    res.eigenvalue,
                    series_text(series)
                ),
            };
            Ok(Outcome { report, passed: true, output: common.output })
        }
        JackCmd::ClosedForm { label, common } => {
            let order = resolve_order(label.order)?;
            let lab = JackLabel::new(label.level.level, label.level.k, label.l)?;
            let closed = jack::closed_form(lab, order)?;
            let j = ScaledSeries::rational(jack::jack_normalized(lab, order)?);
            let diff = j.first_difference(&closed);
            let passed = diff.is_none();
            let verdict = match &diff {
                None => format!("closed form agrees with the recursion through order {order}"),
                Some((b, (e, x, l, r))) => format!("first difference at [{b}] p^{e} x^{x}: recursion {l}, closed form {r}"),
            };
            let report = match common.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out {
                        passed: bool,
                        detail: String,
                        parts: Vec<PartJson>,
                    }
                    serde_json::to_string(&Out { passed, detail: verdict, parts: scaled_json(&closed) }).expect("plain data")
                }
                _ => format!("{closed}\n{verdict}\n"),
            };
            Ok(Outcome { report, passed, output: common.output })
        }
        JackCmd::CheckLevel1 { order, common } => {
            let mut s = Settings::full();
            s.closed_form_order = resolve_order(order)?;
            let mut o = lines_report(&[suite::a1(&s)], common.format);
            o.output = common.output;
            Ok(o)
        }
        JackCmd::CheckLevel2 { order, common } => {
            let mut s = Settings::full();
            s.closed_form_order = resolve_order(order)?;
            let mut o = lines_report(&[suite::a2(&s)], common.format);
            o.output = common.output;
            Ok(o)
        }
        JackCmd::HeatCheck { level, order, common } => {
            check_level(&level)?;
            let order = resolve_order(order)?;
            let r = jack::heat_check(level.level, level.k, order)?;
            let detail = match &r.failure {
                None => format!("heat equation holds exactly through order {order}"),
                Some((row, e, j, v)) => format!("row {row}: coefficient of p^{e} x^{j} is {v}"),
            };
            let line = CheckLine {
                id: "heat".into(),
                name: format!("K={} k={}", level.level, level.k),
                passed: r.passed(),
                detail,
                seconds: 0.0,
            };
            let mut o = lines_report(&[line], common.format);
            o.output = common.output;
            Ok(o)
        }
    }
}

fn build_form(level: &Level, form: SForm) -> Result<SMatrix> {
    match form {
        SForm::Product => modular::build_s_product(level.level, level.k),
        SForm::Macdonald => modular::build_s_macdonald(level.level, level.k),
        SForm::Fixture => modular::fixture(level.level, level.k),
    }
}

#[derive(Serialize)]
struct DeviationJson {
    pair: String,
    deviation: f64,
    m: i64,
    l: i64,
}

fn smatrix_cmd(cmd: SmatrixCmd) -> Result<Outcome> {
    match cmd {
        SmatrixCmd::Build { level, form, common } => {
            check_level(&level)?;
            let m = build_form(&level, form)?;
            Ok(Outcome { report: matrix_report(&m, common.format), passed: true, output: common.output })
        }
        SmatrixCmd::CrossCheck { level, tol, common } => {
            check_level(&level)?;
            let tol = resolve_tol(tol, tol::TRIG)?;
            let p = build_form(&level, SForm::Product)?;
            let mut devs = vec![("product-macdonald".to_string(), p.max_deviation(&build_form(&level, SForm::Macdonald)?))];
            if level.level <= 4 {
                devs.push(("product-fixture".to_string(), p.max_deviation(&build_form(&level, SForm::Fixture)?)));
            }
            let passed = devs.iter().all(|(_, d)| d.0 < tol);
            let rows: Vec<DeviationJson> =
                devs.into_iter().map(|(pair, (d, m, l))| DeviationJson { pair, deviation: d, m, l }).collect();
            let report = match common.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out {
                        passed: bool,
                        tol: f64,
                        deviations: Vec<DeviationJson>,
                    }
                    serde_json::to_string(&Out { passed, tol, deviations: rows }).expect("plain data")
                }
                _ => rows
                    .iter()
                    .map(|r| format!("{}: max deviation {:.3e} at ({}, {})\n", r.pair, r.deviation, r.m, r.l))
                    .collect(),
            };
            Ok(Outcome { report, passed, output: common.output })
        }
        SmatrixCmd::Sj { level, common } => {
            check_level(&level)?;
            let sj = modular::build_sj(level.level, level.k)?;
            let report = match common.format {
                Format::Json => {
                    let m = sj.constant.to_json();
                    format!("{{\"weight\":\"{}\",\"constant\":{m}}}", format_rational(&sj.weight))
                }
                Format::Csv => sj.constant.to_csv(),
                Format::Text => format!("tau weight {}\n{}", sj.weight, sj.constant.to_text()),
            };
            Ok(Outcome { report, passed: true, output: common.output })
        }
        SmatrixCmd::Relations { level, tol, common } => {
            check_level(&level)?;
            let tol = resolve_tol(tol, tol::GAMMA)?;
            let r = modular::relations(level.level, level.k)?;
            let passed = r.max_residual() < tol;
            let report = match common.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out {
                        passed: bool,
                        s2_scalar: [f64; 2],
                        s2_residual: f64,
                        st3_scalar: [f64; 2],
                        st3_residual: f64,
                    }
                    serde_json::to_string(&Out {
                        passed,
                        s2_scalar: [r.s2_scalar.re, r.s2_scalar.im],
                        s2_residual: r.s2_residual,
                        st3_scalar: [r.st3_scalar.re, r.st3_scalar.im],
                        st3_residual: r.st3_residual,
                    })
                    .expect("plain data")
                }
                _ => format!(
                    "(S^J)^2 = ({:.12}{:+.12}i) I, residual {:.2e}\n(S^J T^J)^3 = ({:.12}{:+.12}i) (S^J)^2, residual {:.2e}\n",
                    clean(r.s2_scalar.re), clean(r.s2_scalar.im), r.s2_residual, clean(r.st3_scalar.re), clean(r.st3_scalar.im), r.st3_residual
                ),
            };
            Ok(Outcome { report, passed, output: common.output })
        }
    }
}

fn modular_cmd(cmd: ModularCmd) -> Result<Outcome> {
    let ModularCmd::VerifyS { level, tau, z, u, order, tol, common } = cmd;
    check_level(&level)?;
    let tau = parse_complex(&tau)?;
    if tau.im <= 0.0 {
        return Err(Error::TauNotInUpperHalfPlane(format!("{tau}")));
    }
    let tol = resolve_tol(tol, tol::END_TO_END)?;
    let order = resolve_order(order)?;
    let r = modular::verify_modular_numeric(level.level, level.k, parse_complex(&z)?, parse_complex(&u)?, tau, order, tol)?;
    let report = match common.format {
        Format::Json => serde_json::to_string(&r).expect("plain data"),
        _ => {
            let mut s = format!(
                "K={} k={} order {}: max deviation {:.3e}, fitted constant {:.12}{:+.12}i, tail {:.1e}\n",
                r.level, r.k, r.order, r.max_deviation, r.phase[0], clean(r.phase[1]), r.tail
            );
            for e in &r.entries {
                writeln!(s, "  m={}: lhs {:.12}{:+.12}i  rhs {:.12}{:+.12}i", e.m, e.lhs[0], clean(e.lhs[1]), e.rhs[0], clean(e.rhs[1]))
                    .unwrap();
            }
            s
        }
    };
    Ok(Outcome { report, passed: r.passed, output: common.output })
}

fn selberg_cmd(cmd: SelbergCmd) -> Result<Outcome> {
    let SelbergCmd::Eval { n, alpha, beta, gamma, mode, tol, common } = cmd;
    let tol = resolve_tol(tol, tol::QUADRATURE)?;
    let closed = matches!(mode, BMode::Closed | BMode::Both)
        .then(|| modular::selberg_b(n, alpha, beta, gamma, SelbergMode::Closed))
        .transpose()?;
    let quad = matches!(mode, BMode::Quadrature | BMode::Both)
        .then(|| modular::selberg_b(n, alpha, beta, gamma, SelbergMode::Quadrature))
        .transpose()?;
    let rel = match (closed, quad) {
        (Some(c), Some(q)) => Some((q / c - 1.0).abs()),
        _ => None,
    };
    let passed = rel.is_none_or(|r| r < tol);
    let report = match common.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: u32,
                alpha: f64,
                beta: f64,
                gamma: f64,
                closed: Option<f64>,
                quadrature: Option<f64>,
                relative_error: Option<f64>,
                passed: bool,
            }
            serde_json::to_string(&Out { n, alpha, beta, gamma, closed, quadrature: quad, relative_error: rel, passed })
                .expect("plain data")
        }
        _ => {
            let mut s = String::new();
            if let Some(c) = closed {
                writeln!(s, "closed     {c:.15e}").unwrap();
            }
            if let Some(q) = quad {
                writeln!(s, "quadrature {q:.15e}").unwrap();
            }
            if let Some(r) = rel {
                writeln!(s, "relative error {r:.3e}").unwrap();
            }
            s
        }
    };
    Ok(Outcome { report, passed, output: common.output })
}

fn gfactor_cmd(a: GfactorArgs) -> Result<Outcome> {
    check_level(&a.level)?;
    let mode = match a.mode {
        GKind::Absolute => GMode::Absolute,
        GKind::Ratio => GMode::Ratio(a.n),
    };
    let v = modular::g_factor(a.level.level, a.level.k, a.m, mode)?;
    let what = match mode {
        GMode::Absolute => format!("g_{}", a.m),
        GMode::Ratio(n) => format!("g_{}/g_{}", a.m, a.m + n),
    };
    let report = match a.common.format {
        Format::Json => format!(
            "{{\"K\":{},\"k\":{},\"m\":{},\"quantity\":\"{what}\",\"re\":{},\"im\":{}}}",
            a.level.level,
            a.level.k,
            a.m,
            serde_json::to_string(&v.re).unwrap(),
            serde_json::to_string(&v.im).unwrap()
        ),
        _ => format!("{what} = {:.15}{:+.15}i\n", clean(v.re), clean(v.im)),
    };
    Ok(Outcome { report, passed: true, output: a.common.output })
}

fn theta_cmd(cmd: ThetaCmd) -> Result<Outcome> {
    let ThetaCmd::CheckLaws { points, seed, tol, order, common } = cmd;
    let tol = resolve_tol(tol, tol::THETA_S)?;
    let order = resolve_order(order.or(Some(20)))?;
    let laws = suite::theta_law_suite(points, seed)?;
    let mut lines: Vec<CheckLine> = laws
        .into_iter()
        .map(|(name, r)| CheckLine {
            id: "law".into(),
            passed: r < tol,
            detail: format!("max residual {r:.2e} over {points} points"),
            name,
            seconds: 0.0,
        })
        .collect();
    let tp = suite::triple_product(order)?;
    lines.push(CheckLine {
        id: "series".into(),
        name: "p^{1/8} delta = i theta_1(2z)".into(),
        passed: tp.is_none(),
        detail: tp.unwrap_or_else(|| format!("exact through order {order}")),
        seconds: 0.0,
    });
    let mut o = lines_report(&lines, common.format);
    o.output = common.output;
    Ok(o)
}

fn suite_cmd(cmd: SuiteCmd) -> Result<Outcome> {
    let SuiteCmd::Acceptance { quick, common } = cmd;
    let s = if quick { Settings::quick() } else { Settings::full() };
    let mut o = lines_report(&suite::run_acceptance(&s), common.format);
    o.output = common.output;
    Ok(o)
}

/// Runs a parsed command.
pub fn execute(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Jack(c) => jack_cmd(c),
        Command::Smatrix(c) => smatrix_cmd(c),
        Command::Modular(c) => modular_cmd(c),
        Command::Selberg(c) => selberg_cmd(c),
        Command::Gfactor(a) => gfactor_cmd(a),
        Command::Theta(c) => theta_cmd(c),
        Command::Suite(c) => suite_cmd(c),
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParameter(_)
            | Error::TauNotInUpperHalfPlane(_)
            | Error::TailBound { .. }
            | Error::GammaPole(_)
            | Error::Encoding(_)
    )
}

/// Parses `args`, runs the command and writes its report. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(o) => {
            let mut text = o.report;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &o.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => {
                    use std::io::Write;
                    // a closed pipe downstream is not an error of ours
                    let _ = std::io::stdout().write_all(text.as_bytes());
                }
            }
            if o.passed {
                0
            } else {
                eprintln!("check failed");
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if is_usage_error(&e) {
                2
            } else {
                1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.2,1.3").unwrap(), Complex64::new(0.2, 1.3));
        assert_eq!(parse_complex(" 0.17 ").unwrap(), Complex64::new(0.17, 0.0));
        assert!(parse_complex("a,b").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["ajack", "smatrix", "build", "--K", "2", "--k", "3", "--format", "json"]), 0);
        assert_eq!(run(["ajack", "smatrix", "build", "--K", "2", "--k", "0"]), 2);
        assert_eq!(run(["ajack", "jack", "compute", "--K", "1", "--k", "2", "--l", "5"]), 2);
        assert_eq!(run(["ajack", "frobnicate"]), 2);
        assert_eq!(run(["ajack", "smatrix", "relations", "--K", "1", "--k", "2", "--tol", "-1"]), 2);
    }
}
