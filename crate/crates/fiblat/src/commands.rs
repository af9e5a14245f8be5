//! One function per subcommand. Each returns the exact text for stdout.

use std::str::FromStr;

use fiblat_core::asymptotics::{
    asymptotic_constants, closed_form_for, closed_sum, reference_asymptote, residual_fit, LineSource, DEFAULT_I_MAX,
    DEFAULT_K_MAX, N_DESK_MAX,
};
use fiblat_core::checks::{self, Counterexample};
use fiblat_core::dedekind::{
    cos2sin4_closed, dedekind_sum, fib_dedekind_sum, s13_closed, s22_closed, sigma2_closed, sigma4_closed,
    sigma6_closed, sin4_closed, trig_sum_from_dedekind,
};
use fiblat_core::energy::{energy_dft, energy_direct_lattice, fib_sum, fib_sum_grouped, wce_e, RationalLattice};
use fiblat_core::golden::{fib, fib_u64};
use fiblat_core::kernels::{dft_coeffs, HurwitzZeta, KPotential};
use fiblat_core::wythoff::WythoffRow;
use fiblat_core::{Dd, Kernel, Real};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::config::{Backend, Format, RunConfig, UsageError};
use crate::output::{csv_text, envelope, float, json_bigint, json_float, json_text, rational};
use crate::par::Parallel;
use crate::random_coprime_pairs;

/// Text for stdout and whether every check it reports passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

pub type CmdResult = Result<Output, UsageError>;

impl From<fiblat_core::Error> for UsageError {
    fn from(e: fiblat_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Runs `$body` with `$R` bound to the backend's real type.
macro_rules! with_backend {
    ($cfg:expr, $R:ident => $body:expr) => {
        match $cfg.backend {
            Backend::F64 => {
                type $R = f64;
                $body
            }
            Backend::DoubleDouble => {
                type $R = Dd;
                $body
            }
        }
    };
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn cmd_wythoff(cfg: &RunConfig, rows: u64, cols: u64, dual: bool) -> CmdResult {
    if rows == 0 || cols == 0 {
        return Err(usage("rows and cols must be at least 1"));
    }
    let table: Vec<(WythoffRow, Vec<_>)> = (1..=rows)
        .map(|i| {
            let r = WythoffRow::new(i).expect("i ≥ 1");
            let entries = (1..=cols)
                .map(|j| if dual { r.dual(r.mu as u64 + j).expect("slot above mu") } else { r.entry(j as i64) })
                .collect();
            (r, entries)
        })
        .collect();
    let text = match cfg.format_or(Format::Csv) {
        Format::Csv => {
            let mut header = vec!["i".to_string(), if dual { "mu" } else { "eta" }.to_string()];
            header.extend((1..=cols).map(|j| if dual { format!("W*_mu+{j}") } else { format!("W_{j}") }));
            let body: Vec<Vec<String>> = table
                .iter()
                .map(|(r, e)| {
                    let mut row = vec![r.i.to_string(), if dual { r.mu.to_string() } else { r.eta.to_string() }];
                    row.extend(strs(e));
                    row
                })
                .collect();
            csv_text(&header, &body)
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .iter()
                .map(|(r, e)| {
                    json!({
                        "i": r.i,
                        "eta": json_bigint(&r.eta),
                        "mu": r.mu,
                        "entries": e.iter().map(json_bigint).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let first_slot = if dual { "mu+1" } else { "1" };
            json_text(&envelope("wythoff", json!({ "dual": dual, "first_slot": first_slot, "rows": rows })))
        }
    };
    Ok(Output::ok(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SumMethod {
    Flat,
    Grouped,
}

impl SumMethod {
    fn name(self) -> &'static str {
        match self {
            SumMethod::Flat => "flat",
            SumMethod::Grouped => "grouped",
        }
    }
}

fn run_sum<R: Real>(n: u64, sigma: f64, kernel: &Kernel, method: SumMethod) -> fiblat_core::Result<f64> {
    let f = kernel.evaluator::<R>();
    let s = R::from_f64(sigma);
    let v = match method {
        SumMethod::Flat => fib_sum(&Parallel, n, s, &f)?,
        SumMethod::Grouped => fib_sum_grouped(&Parallel, n, s, &f)?,
    };
    Ok(v.to_f64())
}

pub fn cmd_sum(cfg: &RunConfig, n: u64, sigma: f64, kernel: &str, method: SumMethod) -> CmdResult {
    let k = Kernel::parse(kernel, sigma)?;
    let other = match method {
        SumMethod::Flat => SumMethod::Grouped,
        SumMethod::Grouped => SumMethod::Flat,
    };
    let (value, cross) =
        with_backend!(cfg, R => (run_sum::<R>(n, sigma, &k, method)?, run_sum::<R>(n, sigma, &k, other)?));
    let rel = |a: f64, b: f64| if a == b { 0.0 } else { ((a - b) / b).abs() };
    let terms = fib_u64(n).map(|f| f - 1).unwrap_or(0);
    let closed = closed_form_for(sigma, &k).map(|(expr, sg)| {
        let exact = expr.eval(n) / BigRational::from_integer(fib(n).pow(sg));
        let v = closed_sum::<f64>(&expr, sg, n);
        (exact, v)
    });
    let text = match cfg.format_or(Format::Json) {
        Format::Json => json_text(&envelope(
            "sum",
            json!({
                "n": n,
                "sigma": json_float(sigma),
                "kernel": k.name(),
                "method": method.name(),
                "value": json_float(value),
                "terms": terms,
                "backend": cfg.backend.name(),
                "precision_bits": cfg.backend.bits(),
                "cross_check": {
                    "method": other.name(),
                    "value": json_float(cross),
                    "relative_difference": json_float(rel(value, cross)),
                },
                "closed_form": closed.as_ref().map(|(q, v)| json!({
                    "exact": rational(q),
                    "value": json_float(*v),
                    "relative_error": json_float(rel(value, *v)),
                })),
            }),
        )),
        Format::Csv => csv_text(
            &strs(["n", "sigma", "kernel", "method", "value", "terms", "backend", "cross_check_rel", "closed_form"]),
            &[vec![
                n.to_string(),
                float(sigma),
                k.name(),
                method.name().into(),
                float(value),
                terms.to_string(),
                cfg.backend.name().into(),
                float(rel(value, cross)),
                closed.as_ref().map(|(q, _)| rational(q)).unwrap_or_default(),
            ]],
        ),
    };
    Ok(Output::ok(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EnergyMethod {
    Direct,
    Dft,
    Wce,
    All,
}

/// `E_{σ,p}(Λ_{N,h})` by the requested routes, as `(name, E)`.
fn run_energy<R: Real>(
    lat: &RationalLattice,
    sigma: f64,
    p: f64,
    method: EnergyMethod,
) -> fiblat_core::Result<Vec<(&'static str, f64)>> {
    let mut out = Vec::new();
    let all = method == EnergyMethod::All;
    if all || method == EnergyMethod::Direct {
        let pot = KPotential::<R>::new(sigma, p)?;
        out.push(("direct", energy_direct_lattice(&Parallel, &pot, lat).to_f64()));
    }
    if all || method == EnergyMethod::Dft {
        let c = dft_coeffs(R::from_f64(sigma), R::from_f64(p), lat.n())?;
        out.push(("dft", energy_dft(&c, lat)?.to_f64()));
    }
    if all || method == EnergyMethod::Wce {
        let hz = HurwitzZeta::<R>::new();
        let e = wce_e(&Parallel, &hz, R::from_f64(sigma), R::from_f64(p), lat)?;
        let nn = R::from_u64(lat.n()) * R::from_u64(lat.n());
        out.push(("wce", (nn * (R::one() + e)).to_f64()));
    }
    Ok(out)
}

pub fn cmd_energy(cfg: &RunConfig, n: u64, h: Option<u64>, sigma: f64, p: f64, method: EnergyMethod) -> CmdResult {
    let h = match h {
        Some(h) => h,
        None => (2..=92)
            .find(|&k| fib_u64(k) == Some(n))
            .and_then(|k| fib_u64(k - 1))
            .ok_or_else(|| usage(format!("{n} is not a Fibonacci number; pass --h")))?,
    };
    let lat = RationalLattice::new(n, h)?;
    let routes = with_backend!(cfg, R => run_energy::<R>(&lat, sigma, p, method)?);
    let nn = (n as f64) * (n as f64);
    let spread = if routes.len() > 1 {
        let lo = routes.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
        let hi = routes.iter().map(|r| r.1).fold(f64::NEG_INFINITY, f64::max);
        Some((hi - lo) / hi.abs())
    } else {
        None
    };
    let text = match cfg.format_or(Format::Json) {
        Format::Json => {
            let r: Vec<Value> = routes
                .iter()
                .map(|(name, e)| json!({ "route": name, "energy": json_float(*e), "e": json_float(e / nn - 1.0) }))
                .collect();
            json_text(&envelope(
                "energy",
                json!({
                    "n": n,
                    "h": h,
                    "sigma": json_float(sigma),
                    "p": json_float(p),
                    "backend": cfg.backend.name(),
                    "routes": r,
                    "relative_spread": spread.map(json_float),
                }),
            ))
        }
        Format::Csv => csv_text(
            &strs(["n", "h", "sigma", "p", "route", "energy", "e"]),
            &routes
                .iter()
                .map(|(name, e)| {
                    vec![
                        n.to_string(),
                        h.to_string(),
                        float(sigma),
                        float(p),
                        name.to_string(),
                        float(*e),
                        float(e / nn - 1.0),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Output::ok(text))
}

pub fn cmd_constants(cfg: &RunConfig, sigma: f64, kernel: &str) -> CmdResult {
    let k = Kernel::parse(kernel, sigma)?;
    let i_max = cfg.i_max.unwrap_or(DEFAULT_I_MAX);
    let k_max = cfg.k_max.unwrap_or(DEFAULT_K_MAX);
    let a = with_backend!(cfg, R => asymptotic_constants::<R, _>(&Parallel, sigma, &k, i_max, k_max)?);
    let text = match cfg.format_or(Format::Json) {
        Format::Json => json_text(&envelope(
            "constants",
            json!({
                "sigma": json_float(a.sigma),
                "kernel": a.kernel,
                "C": json_float(a.c),
                "D": json_float(a.d),
                "i_max": a.i_max,
                "k_max": a.k_max,
                "C_tail_bound": json_float(a.tail_bound),
                "D_error_estimate": json_float(a.d_error),
                "C_closed": a.c_closed.as_ref().map(|c| json!({
                    "coefficient": rational(&c.coef),
                    "sqrt5_power": c.sqrt5_power,
                    "value": json_float(c.to_f64()),
                })),
                "D_closed": a.d_closed.as_ref().map(|d| json!({
                    "exact": rational(d),
                    "value": json_float(d.to_f64().unwrap_or(f64::NAN)),
                })),
                "backend": cfg.backend.name(),
            }),
        )),
        Format::Csv => csv_text(
            &strs([
                "sigma",
                "kernel",
                "C",
                "D",
                "i_max",
                "k_max",
                "C_tail_bound",
                "D_error_estimate",
                "C_closed",
                "D_closed",
            ]),
            &[vec![
                float(a.sigma),
                a.kernel.clone(),
                float(a.c),
                float(a.d),
                a.i_max.to_string(),
                a.k_max.to_string(),
                float(a.tail_bound),
                float(a.d_error),
                a.c_closed.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                a.d_closed.as_ref().map(rational).unwrap_or_default(),
            ]],
        ),
    };
    Ok(Output::ok(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// `s_{2,2}(1, F_{n−1}; F_n)`
    S22,
    /// `s_{1,3}(1, F_{n−1}; F_n)`
    S13,
    /// `Σ 1/(sin² sin²)` over the Fibonacci grid
    Sigma2,
    /// `Σ (2+4cos²)(2+4cos²)/(sin⁴ sin⁴)`
    Sigma4,
    /// `Σ (16+88cos²+16cos⁴)(…)/(sin⁶ sin⁶)`
    Sigma6,
    /// `Σ 1/(sin⁴ sin⁴)`
    Sin4,
    /// `Σ cos²cos²/(sin⁴ sin⁴)`
    Cos2sin4,
    /// `s_{ℓ,m}(1, F_{n−1}; F_n)` from the definition
    Fib,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::S22 => "s22",
            Family::S13 => "s13",
            Family::Sigma2 => "sigma2",
            Family::Sigma4 => "sigma4",
            Family::Sigma6 => "sigma6",
            Family::Sin4 => "sin4",
            Family::Cos2sin4 => "cos2sin4",
            Family::Fib => "fib",
        }
    }

    /// The closed form and, where one exists, an independent exact route.
    fn eval(self, n: u64, ell: u32, m: u32) -> fiblat_core::Result<(BigRational, Option<BigRational>)> {
        Ok(match self {
            Family::S22 => (s22_closed(n)?, Some(fib_dedekind_sum(2, 2, n)?)),
            Family::S13 => (s13_closed(n)?, Some(fib_dedekind_sum(1, 3, n)?)),
            Family::Sigma2 => (sigma2_closed(n)?, Some(trig_sum_from_dedekind(1, n)?)),
            Family::Sigma4 => (sigma4_closed(n)?, Some(trig_sum_from_dedekind(2, n)?)),
            Family::Sigma6 => (sigma6_closed(n)?, Some(trig_sum_from_dedekind(3, n)?)),
            Family::Sin4 => (sin4_closed(n)?, None),
            Family::Cos2sin4 => (cos2sin4_closed(n)?, None),
            Family::Fib => (fib_dedekind_sum(ell, m, n)?, None),
        })
    }
}

/// Either a Fibonacci family over `n_from..=n_to`, or one generalized sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedQuery {
    Family { family: Family, n_from: u64, n_to: u64, ell: u32, m: u32 },
    General { ell: u32, m: u32, a: u64, b: u64, c: u64 },
}

pub fn cmd_closed(cfg: &RunConfig, q: &ClosedQuery) -> CmdResult {
    struct Row {
        label: String,
        n: Option<u64>,
        value: BigRational,
        check: Option<BigRational>,
    }
    let rows: Vec<Row> = match *q {
        ClosedQuery::General { ell, m, a, b, c } => vec![Row {
            label: format!("s_{ell},{m}({a},{b};{c})"),
            n: None,
            value: dedekind_sum(ell, m, a, b, c)?,
            check: None,
        }],
        ClosedQuery::Family { family, n_from, n_to, ell, m } => {
            if n_from > n_to {
                return Err(usage(format!("empty range {n_from}..={n_to}")));
            }
            (n_from..=n_to)
                .map(|n| {
                    let (value, check) = family.eval(n, ell, m)?;
                    let label = match family {
                        Family::Fib => format!("fib_s_{ell},{m}"),
                        f => f.name().to_string(),
                    };
                    Ok(Row { label, n: Some(n), value, check })
                })
                .collect::<fiblat_core::Result<_>>()?
        }
    };
    let agree = |r: &Row| r.check.as_ref().map(|c| *c == r.value);
    let passed = rows.iter().all(|r| agree(r) != Some(false));
    let text = match cfg.format_or(Format::Json) {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "family": r.label,
                        "n": r.n,
                        "value": rational(&r.value),
                        "value_f64": json_float(r.value.to_f64().unwrap_or(f64::NAN)),
                        "check": r.check.as_ref().map(rational),
                        "agree": agree(r),
                    })
                })
                .collect();
            json_text(&envelope("closed", json!({ "pass": passed, "rows": v })))
        }
        Format::Csv => csv_text(
            &strs(["family", "n", "value", "value_f64", "check", "agree"]),
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.clone(),
                        r.n.map(|n| n.to_string()).unwrap_or_default(),
                        rational(&r.value),
                        float(r.value.to_f64().unwrap_or(f64::NAN)),
                        r.check.as_ref().map(rational).unwrap_or_default(),
                        agree(r).map(|a| a.to_string()).unwrap_or_default(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Output { text, passed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Wythoff,
    Dual,
    Floor,
    Ineq,
    Reciprocity,
    Closedform,
    Dft,
    ZetaRoutes,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Wythoff,
        Suite::Dual,
        Suite::Floor,
        Suite::Ineq,
        Suite::Reciprocity,
        Suite::Closedform,
        Suite::Dft,
        Suite::ZetaRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wythoff => "wythoff",
            Suite::Dual => "dual",
            Suite::Floor => "floor",
            Suite::Ineq => "ineq",
            Suite::Reciprocity => "reciprocity",
            Suite::Closedform => "closedform",
            Suite::Dft => "dft",
            Suite::ZetaRoutes => "zeta-routes",
        }
    }

    pub fn default_limit(self) -> u64 {
        match self {
            Suite::Wythoff | Suite::ZetaRoutes => 100_000,
            Suite::Dual | Suite::Reciprocity => 200,
            Suite::Floor => 10_000,
            Suite::Ineq => 1000,
            Suite::Closedform => 25,
            Suite::Dft => 34,
        }
    }

    /// Runs the suite; `limit` scales the main range as listed in the help.
    pub fn run(self, limit: u64, seed: u64, tol: Option<f64>) -> checks::CheckResult {
        match self {
            Suite::Wythoff => Ok(checks::wythoff_partition(limit)?
                + checks::wythoff_rows(limit.min(500), 30)?
                + checks::threshold_equivalence(limit.min(200), 40)?
                + checks::half_fib_witnesses(8)?),
            Suite::Dual => checks::dual_suite(limit, 25),
            Suite::Floor => Ok(checks::floor_lemmas(limit)? + checks::approximation_lemma(limit)?),
            Suite::Ineq => checks::calc_inequalities(limit as usize),
            Suite::Reciprocity => {
                let mut pairs = random_coprime_pairs(limit as usize, 5000, seed);
                pairs.extend(checks::fibonacci_pairs(15));
                checks::reciprocity(&pairs)
            }
            Suite::Closedform => {
                Ok(checks::closed_forms_exact(limit)? + checks::closed_forms_float(&Parallel, limit.min(20), tol)?)
            }
            Suite::Dft => {
                let sizes: Vec<u64> = (5..=92).filter_map(fib_u64).filter(|&f| f <= limit).collect();
                if sizes.is_empty() {
                    return Err(Counterexample { check: "dft", detail: format!("no Fibonacci size in 5..={limit}") });
                }
                checks::dft_suite(&Parallel, &sizes, tol.unwrap_or(1e-9))
            }
            Suite::ZetaRoutes => checks::zeta_routes(&Parallel, &[2.0, 3.0, 4.0, 6.0], limit, 10 * limit),
        }
    }
}

impl FromStr for Suite {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            usage(format!("unknown suite {s:?}; valid suites are all, {}", Suite::ALL.map(Suite::name).join(", ")))
        })
    }
}

/// `suites` empty means all of them.
pub fn cmd_verify(cfg: &RunConfig, suites: &[Suite], limit: Option<u64>, seed: u64) -> CmdResult {
    let selected: Vec<Suite> = if suites.is_empty() { Suite::ALL.to_vec() } else { suites.to_vec() };
    let results: Vec<(Suite, u64, checks::CheckResult)> = selected
        .iter()
        .map(|&s| {
            let l = limit.unwrap_or_else(|| s.default_limit());
            (s, l, s.run(l, seed, cfg.tolerance))
        })
        .collect();
    let passed = results.iter().all(|r| r.2.is_ok());
    let text = match cfg.format_or(Format::Json) {
        Format::Json => {
            let v: Vec<Value> = results
                .iter()
                .map(|(s, l, r)| {
                    json!({
                        "suite": s.name(),
                        "limit": l,
                        "pass": r.is_ok(),
                        "checks": r.as_ref().ok(),
                        "counterexample": r.as_ref().err().map(|c| json!({ "check": c.check, "detail": c.detail })),
                    })
                })
                .collect();
            json_text(&envelope("verify", json!({ "pass": passed, "seed": seed, "suites": v })))
        }
        Format::Csv => csv_text(
            &strs(["suite", "limit", "pass", "checks", "check", "detail"]),
            &results
                .iter()
                .map(|(s, l, r)| {
                    let (n, c, d) = match r {
                        Ok(n) => (n.to_string(), String::new(), String::new()),
                        Err(c) => (String::new(), c.check.to_string(), c.detail.clone()),
                    };
                    vec![s.name().into(), l.to_string(), r.is_ok().to_string(), n, c, d]
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Output { text, passed })
}

pub const FIT_HEADER: &str = "n,sum,asymptote,residual,scaled_residual";

fn source_name(s: LineSource) -> String {
    match s {
        LineSource::ClosedForm => "closed-form".into(),
        LineSource::CharacterSeries => "character-series".into(),
        LineSource::HeldOut { n } => format!("held-out:{n}"),
    }
}

pub fn cmd_fit(cfg: &RunConfig, sigma: f64, kernel: &str, n_min: u64, n_max: u64, n_hold: Option<u64>) -> CmdResult {
    if n_max > N_DESK_MAX {
        return Err(usage(format!("n_max must be at most {N_DESK_MAX}, got {n_max}")));
    }
    if n_min < 2 || n_min > n_max {
        return Err(usage(format!("need 2 ≤ n_min ≤ n_max, got {n_min}..={n_max}")));
    }
    let n_hold = n_hold.unwrap_or((n_max + 6).min(N_DESK_MAX));
    let k = Kernel::parse(kernel, sigma)?;
    let (line, rows) = with_backend!(cfg, R => {
        let line = reference_asymptote::<R, _>(&Parallel, sigma, &k, n_hold)?;
        let rows = residual_fit(&Parallel, sigma, &k, n_min, n_max, &line)?;
        let f = |x: R| x.to_f64();
        (
            (f(line.c), f(line.d), line.c_source, line.d_source, f(line.d_error)),
            rows.iter().map(|r| (r.n, f(r.sum), f(r.asymptote), f(r.residual), f(r.scaled_residual))).collect::<Vec<_>>(),
        )
    });
    let text = match cfg.format_or(Format::Csv) {
        Format::Csv => csv_text(
            &strs(FIT_HEADER.split(',')),
            &rows
                .iter()
                .map(|&(n, s, a, r, sc)| vec![n.to_string(), float(s), float(a), float(r), float(sc)])
                .collect::<Vec<_>>(),
        ),
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|&(n, s, a, r, sc)| {
                    json!({
                        "n": n,
                        "sum": json_float(s),
                        "asymptote": json_float(a),
                        "residual": json_float(r),
                        "scaled_residual": json_float(sc),
                    })
                })
                .collect();
            json_text(&envelope(
                "fit",
                json!({
                    "sigma": json_float(sigma),
                    "kernel": k.name(),
                    "C": json_float(line.0),
                    "D": json_float(line.1),
                    "C_source": source_name(line.2),
                    "D_source": source_name(line.3),
                    "D_error_estimate": json_float(line.4),
                    "backend": cfg.backend.name(),
                    "rows": v,
                }),
            ))
        }
    };
    Ok(Output::ok(text))
}
