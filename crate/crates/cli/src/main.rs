//! Command-line front end: radii, bounds, Rayleigh/Laurent coefficients,
//! asymptotic expansions, comparison tables, and boundary-curve data.
//!
//! Exit codes: 0 success, 1 computation error (name + message on
//! stderr), 2 usage error.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

use besselrad::asympt::{self, Wiring};
use besselrad::exactnum::{parse_rational, to_decimal_string, CertifiedInterval, Rational};
use besselrad::radii::{self, RadiusKind};
use besselrad::rayleigh::{self, LaurentTarget};
use besselrad::series::{map_point, BesselMap, Order, SeriesFamily};

#[derive(Parser)]
#[command(
    name = "besselrad",
    about = "Radii of convexity and uniform convexity of normalized Bessel functions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Significant digits for decimal renderings
    #[arg(long, default_value_t = 10)]
    digits: usize,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Certified direct radius (smallest positive zero of the critical series)
    Radius {
        /// Radius kind: conv-g, conv-h, uconv-g, uconv-h
        #[arg(long)]
        kind: String,
        /// Order nu (> -1): integer, decimal, or p/q
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Absolute tolerance on the radius enclosure
        #[arg(long, default_value = "1e-12")]
        tol: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Euler-Rayleigh brackets for k = 1..k_max
    Bounds {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Largest bracket index
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Power sums S_1..S_k of reciprocal zeros of a series family
    Rayleigh {
        /// Series family: weierstrass-g, weierstrass-h, convex-g, convex-h,
        /// uconvex-g, uconvex-h
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Number of power sums
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Laurent coefficients of eta_k or theta_k in powers of 1/nu
    Laurent {
        /// Target: eta or theta
        #[arg(long)]
        family: String,
        /// Rayleigh sum index k >= 1
        #[arg(long)]
        k: usize,
        /// Number of coefficients beyond the leading one
        #[arg(long, default_value_t = 4)]
        terms: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Asymptotic expansion: leading constant and eps coefficients
    Asympt {
        #[arg(long)]
        kind: String,
        /// Total number of terms (leading constant plus eps_1..eps_{terms-1})
        #[arg(long, default_value_t = 2)]
        terms: usize,
        /// Fixed-point truncation order M
        #[arg(long, default_value_t = 20)]
        trunc: usize,
        /// Wiring of the linear factor: published (the reference decimals) or
        /// consistent (master-equation factor; differs for h-kinds)
        #[arg(long, default_value = "published")]
        wiring: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Comparison table: brackets, direct enclosure, asymptotic value
    Compare {
        /// Radius kind or "all"
        #[arg(long, default_value = "all")]
        kind: String,
        /// Comma-separated list of orders
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Terms in the asymptotic value
        #[arg(long, default_value_t = 2)]
        terms: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value = "1e-6")]
        tol: String,
        #[arg(long, default_value = "published")]
        wiring: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Boundary-curve data: the image of |z| = r under g_nu or h_nu
    Boundary {
        /// Map: g or h
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Radius source: `oracle`, `asympt:<terms>`, or `explicit:<value>`
        #[arg(long, default_value = "asympt:2")]
        radius_source: String,
        /// Radius kind backing oracle/asympt sources (default: the
        /// convexity radius of the chosen map)
        #[arg(long)]
        kind: Option<String>,
        /// Number of equispaced angles (>= 8)
        #[arg(long, default_value_t = 360)]
        samples: usize,
        /// Wiring for asympt radius sources
        #[arg(long, default_value = "published")]
        wiring: String,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
    },
}

/// Computation-level failure carrying the library's error rendering.
struct CmdError(String);

impl From<besselrad::Error> for CmdError {
    fn from(e: besselrad::Error) -> Self {
        CmdError(e.to_string())
    }
}

type CmdResult<T> = Result<T, CmdError>;

fn parse_kind(s: &str) -> CmdResult<RadiusKind> {
    RadiusKind::parse(s).ok_or_else(|| {
        CmdError(format!(
            "InvalidInput: unknown kind `{}` (expected conv-g, conv-h, uconv-g, uconv-h)",
            s
        ))
    })
}

fn parse_wiring(s: &str) -> CmdResult<Wiring> {
    Wiring::parse(s).ok_or_else(|| {
        CmdError(format!(
            "InvalidInput: unknown wiring `{}` (expected published or consistent)",
            s
        ))
    })
}

fn parse_nu(s: &str) -> CmdResult<Order> {
    Ok(Order::new(parse_rational(s)?)?)
}

struct Renderer {
    digits: usize,
}

impl Renderer {
    fn dec(&self, x: &Rational) -> Value {
        Value::String(to_decimal_string(x, self.digits))
    }

    fn exact(&self, x: &Rational) -> Value {
        Value::String(format!("{}", x))
    }

    fn interval(&self, i: &CertifiedInterval) -> Value {
        json!({
            "value": self.dec(&i.midpoint()),
            "lo": self.dec(i.lo()),
            "hi": self.dec(i.hi()),
            "uncertainty": self.dec(&i.width()),
            "lo_exact": self.exact(i.lo()),
            "hi_exact": self.exact(i.hi()),
        })
    }
}

fn emit(out: &Option<String>, content: &str) -> CmdResult<()> {
    match out {
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", content) {
                Ok(()) => Ok(()),
                // downstream consumer closed the pipe; not our error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(CmdError(format!("IoError: stdout: {}", e))),
            }
        }
        Some(path) => std::fs::write(path, format!("{}\n", content))
            .map_err(|e| CmdError(format!("IoError: {}: {}", path, e))),
    }
}

/// Flatten a JSON record into text lines (key: value).
fn render_text(value: &Value, indent: usize, lines: &mut Vec<String>) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        lines.push(format!("{}{}:", pad, k));
                        render_text(v, indent + 1, lines);
                    }
                    _ => lines.push(format!("{}{}: {}", pad, k, render_scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        lines.push(format!("{}[{}]", pad, i));
                        render_text(v, indent + 1, lines);
                    }
                    _ => lines.push(format!("{}- {}", pad, render_scalar(v))),
                }
            }
        }
        _ => lines.push(format!("{}{}", pad, render_scalar(value))),
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Render {command, inputs, results, warnings} in the chosen format.
/// CSV output flattens `results.rows` when present (one line per row),
/// falling back to key,value pairs.
fn emit_record(record: &Value, format: Format, out: &Option<String>) -> CmdResult<()> {
    match format {
        Format::Json => emit(out, &serde_json::to_string_pretty(record).unwrap()),
        Format::Text => {
            let mut lines = Vec::new();
            render_text(record, 0, &mut lines);
            emit(out, &lines.join("\n"))
        }
        Format::Csv => {
            let rows = record
                .get("results")
                .and_then(|r| r.get("rows"))
                .and_then(|r| r.as_array());
            let mut lines = Vec::new();
            match rows {
                Some(rows) if !rows.is_empty() => {
                    let header: Vec<String> = rows[0]
                        .as_object()
                        .map(|o| o.keys().cloned().collect())
                        .unwrap_or_default();
                    lines.push(header.join(","));
                    for row in rows {
                        let cells: Vec<String> = header
                            .iter()
                            .map(|h| render_scalar(row.get(h).unwrap_or(&Value::Null)))
                            .collect();
                        lines.push(cells.join(","));
                    }
                }
                _ => {
                    let mut flat = Vec::new();
                    render_text(record, 0, &mut flat);
                    lines.push("key,value".to_string());
                    for l in flat {
                        let trimmed = l.trim_start().to_string();
                        match trimmed.split_once(": ") {
                            Some((k, v)) => lines.push(format!("{},{}", k, v)),
                            None => lines.push(format!("{},", trimmed.trim_end_matches(':'))),
                        }
                    }
                }
            }
            emit(out, &lines.join("\n"))
        }
    }
}

fn cmd_radius(kind: &str, nu: &str, tol: &str, output: &OutputArgs) -> CmdResult<()> {
    let kind = parse_kind(kind)?;
    let order = parse_nu(nu)?;
    let tol_r = parse_rational(tol)?;
    let r = Renderer {
        digits: output.digits,
    };
    let radius = radii::direct_radius(kind, &order, &tol_r)?;
    let mut results = json!({ "radius": r.interval(&radius) });
    if kind.is_squared_variable() {
        let t = radii::direct_radius_t(kind, &order, &tol_r)?;
        results["radius_squared"] = r.interval(&t);
    }
    let record = json!({
        "command": "radius",
        "inputs": { "kind": kind.name(), "nu": format!("{}", order.value()), "tol": tol },
        "results": results,
        "warnings": [],
    });
    emit_record(&record, output.format, &output.out)
}

fn uconv_g_k1_warning() -> &'static str {
    "the uconv-g k=1 upper bound is the directly assembled omega_1/omega_2 = \
     4(nu+1)(nu+2)/(3(4nu+9)); the published closed form 4nu(nu+1)/(3(4nu-1)) \
     differs (both are valid upper bounds at tested orders; the assembled one \
     is tighter)"
}

fn cmd_bounds(kind: &str, nu: &str, k_max: usize, output: &OutputArgs) -> CmdResult<()> {
    let kind = parse_kind(kind)?;
    let order = parse_nu(nu)?;
    if k_max < 1 {
        return Err(CmdError("InvalidInput: k-max must be at least 1".into()));
    }
    let r = Renderer {
        digits: output.digits,
    };
    let mut rows = Vec::new();
    for k in 1..=k_max {
        let b = radii::euler_rayleigh_bracket(kind, &order, k);
        rows.push(json!({
            "k": k,
            "lower": render_scalar(&r.dec(&b.lower)),
            "upper": render_scalar(&r.dec(&b.upper)),
            "lower_exact_kth_power": render_scalar(&r.exact(&b.lower_kth_power)),
            "upper_exact": render_scalar(&r.exact(&b.upper)),
        }));
    }
    let mut warnings: Vec<Value> = Vec::new();
    if kind == RadiusKind::UconvG {
        warnings.push(Value::String(uconv_g_k1_warning().to_string()));
    }
    let record = json!({
        "command": "bounds",
        "inputs": {
            "kind": kind.name(),
            "nu": format!("{}", order.value()),
            "k_max": k_max,
            "variable": if kind.is_squared_variable() { "squared (t = z^2)" } else { "plain (t = z)" },
        },
        "results": { "rows": rows },
        "warnings": warnings,
    });
    emit_record(&record, output.format, &output.out)
}

fn cmd_rayleigh(family: &str, nu: &str, k: usize, output: &OutputArgs) -> CmdResult<()> {
    let family = SeriesFamily::parse(family).ok_or_else(|| {
        CmdError(format!(
            "InvalidInput: unknown family `{}` (expected weierstrass-g, weierstrass-h, convex-g, convex-h, uconvex-g, uconvex-h)",
            family
        ))
    })?;
    let order = parse_nu(nu)?;
    if k < 1 {
        return Err(CmdError("InvalidInput: k must be at least 1".into()));
    }
    let r = Renderer {
        digits: output.digits,
    };
    let sums = rayleigh::power_sums(family, &order, k);
    let rows: Vec<Value> = (1..=k)
        .map(|i| {
            json!({
                "k": i,
                "value": render_scalar(&r.dec(sums.s(i))),
                "exact": render_scalar(&r.exact(sums.s(i))),
            })
        })
        .collect();
    let record = json!({
        "command": "rayleigh",
        "inputs": { "family": family.name(), "nu": format!("{}", order.value()), "k": k },
        "results": { "rows": rows },
        "warnings": [],
    });
    emit_record(&record, output.format, &output.out)
}

fn cmd_laurent(family: &str, k: usize, terms: usize, output: &OutputArgs) -> CmdResult<()> {
    let target = LaurentTarget::parse(family).ok_or_else(|| {
        CmdError(format!(
            "InvalidInput: unknown Laurent target `{}` (expected eta or theta)",
            family
        ))
    })?;
    if k < 1 {
        return Err(CmdError("InvalidInput: k must be at least 1".into()));
    }
    let r = Renderer {
        digits: output.digits,
    };
    let coeffs = rayleigh::laurent(target, k, terms);
    let rows: Vec<Value> = coeffs
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| {
            json!({
                "n": n,
                "power_of_nu": -(k as i64) - n as i64,
                "value": render_scalar(&r.dec(c)),
                "exact": render_scalar(&r.exact(c)),
            })
        })
        .collect();
    let record = json!({
        "command": "laurent",
        "inputs": { "family": target.name(), "k": k, "terms": terms,
                     "validity": format!("convergent Laurent expansion for nu > {}", k) },
        "results": { "rows": rows },
        "warnings": [],
    });
    emit_record(&record, output.format, &output.out)
}

fn cmd_asympt(
    kind: &str,
    terms: usize,
    trunc: usize,
    wiring: &str,
    output: &OutputArgs,
) -> CmdResult<()> {
    let kind = parse_kind(kind)?;
    let wiring = parse_wiring(wiring)?;
    if terms < 1 {
        return Err(CmdError("InvalidInput: terms must be at least 1".into()));
    }
    let r = Renderer {
        digits: output.digits,
    };
    let exp = asympt::expansion(kind, wiring, terms - 1, trunc)?;
    let eps: Vec<Value> = exp
        .eps
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "n": i + 1,
                "value": render_scalar(&r.dec(&e.value)),
                "uncertainty": render_scalar(&r.dec(&e.uncertainty)),
            })
        })
        .collect();
    let mut warnings: Vec<Value> = Vec::new();
    if wiring == Wiring::Published && !kind.is_squared_variable() {
        warnings.push(Value::String(
            "published wiring reproduces the published h-kind constants; the consistent \
             wiring (--wiring consistent) is the one that tracks the certified direct \
             radii"
                .to_string(),
        ));
    }
    let record = json!({
        "command": "asympt",
        "inputs": { "kind": kind.name(), "terms": terms, "trunc": trunc,
                     "wiring": wiring.name(),
                     "front_factor": format!("{}", exp.front_factor) },
        "results": {
            "leading": r.interval(&exp.leading),
            "eps": eps,
            "form": if kind.is_squared_variable() {
                "radius^2 ~ nu (C + sum eps_n / nu^n)"
            } else {
                "radius ~ nu (C + sum eps_n / nu^n)"
            },
        },
        "warnings": warnings,
    });
    emit_record(&record, output.format, &output.out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_compare(
    kind: &str,
    nu: &str,
    terms: usize,
    k_max: usize,
    tol: &str,
    wiring: &str,
    output: &OutputArgs,
) -> CmdResult<()> {
    let kinds: Vec<RadiusKind> = if kind == "all" {
        RadiusKind::ALL.to_vec()
    } else {
        vec![parse_kind(kind)?]
    };
    let nus: Vec<Rational> = nu
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rational(s.trim()).map_err(CmdError::from))
        .collect::<CmdResult<_>>()?;
    let wiring = parse_wiring(wiring)?;
    let tol_r = parse_rational(tol)?;
    let report = radii::compare_report(&kinds, &nus, terms, k_max, wiring, &tol_r)?;
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::Map::new();
            obj.insert("kind".into(), Value::String(row.kind.name().into()));
            obj.insert("nu".into(), Value::String(format!("{}", row.nu)));
            for b in &row.brackets {
                obj.insert(
                    format!("lower_{}", b.k),
                    Value::String(to_decimal_string(&b.lower, output.digits)),
                );
                obj.insert(
                    format!("upper_{}", b.k),
                    Value::String(to_decimal_string(&b.upper, output.digits)),
                );
            }
            // enclosure in the series variable (same units as the brackets)
            obj.insert(
                "oracle_t_lo".into(),
                Value::String(to_decimal_string(row.oracle_t.lo(), output.digits)),
            );
            obj.insert(
                "oracle_t_hi".into(),
                Value::String(to_decimal_string(row.oracle_t.hi(), output.digits)),
            );
            // enclosure in z-units (same units as the asymptotic column)
            obj.insert(
                "oracle_radius_lo".into(),
                Value::String(to_decimal_string(row.oracle_radius.lo(), output.digits)),
            );
            obj.insert(
                "oracle_radius_hi".into(),
                Value::String(to_decimal_string(row.oracle_radius.hi(), output.digits)),
            );
            obj.insert(
                "asymptotic".into(),
                Value::String(to_decimal_string(&row.asymptotic, output.digits)),
            );
            obj.insert(
                "abs_gap".into(),
                Value::String(to_decimal_string(&row.abs_gap, output.digits)),
            );
            obj.insert(
                "rel_gap".into(),
                Value::String(to_decimal_string(&row.rel_gap, output.digits)),
            );
            obj.insert(
                "brackets_nested".into(),
                Value::Bool(row.checks.brackets_nested),
            );
            obj.insert(
                "oracle_within_brackets".into(),
                Value::Bool(row.checks.oracle_within_brackets),
            );
            Value::Object(obj)
        })
        .collect();
    let mut warnings: Vec<Value> = report
        .annotations
        .iter()
        .map(|a| Value::String(a.clone()))
        .collect();
    if kinds.contains(&RadiusKind::UconvG) {
        warnings.push(Value::String(uconv_g_k1_warning().to_string()));
    }
    if wiring == Wiring::Published
        && kinds
            .iter()
            .any(|k| matches!(k, RadiusKind::ConvH | RadiusKind::UconvH))
    {
        warnings.push(Value::String(
            "h-kind asymptotic columns use the published (published-constant) constants; \
             rerun with --wiring consistent for the oracle-tracking expansion"
                .to_string(),
        ));
    }
    let record = json!({
        "command": "compare",
        "inputs": { "kinds": kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
                     "nu": nu, "terms": terms, "k_max": k_max, "tol": tol,
                     "wiring": wiring.name() },
        "results": { "rows": rows },
        "warnings": warnings,
    });
    emit_record(&record, output.format, &output.out)
}

fn boundary_radius(
    source: &str,
    map: BesselMap,
    kind: Option<&str>,
    order: &Order,
    wiring: Wiring,
) -> CmdResult<Rational> {
    let default_kind = match map {
        BesselMap::G => RadiusKind::ConvG,
        BesselMap::H => RadiusKind::ConvH,
    };
    let kind = match kind {
        Some(s) => {
            let k = parse_kind(s)?;
            if k.base_map() != map {
                return Err(CmdError(format!(
                    "InvalidInput: kind {} does not belong to map {}",
                    k.name(),
                    map.name()
                )));
            }
            k
        }
        None => default_kind,
    };
    if source == "oracle" {
        let enc = radii::direct_radius(kind, order, &parse_rational("1e-8").unwrap())?;
        return Ok(enc.midpoint());
    }
    if let Some(rest) = source.strip_prefix("asympt:") {
        let terms: usize = rest
            .parse()
            .map_err(|_| CmdError(format!("InvalidInput: bad asympt term count `{}`", rest)))?;
        return Ok(asympt::asymptotic_radius_with(
            kind,
            wiring,
            order.value(),
            terms,
        )?);
    }
    if let Some(rest) = source.strip_prefix("explicit:") {
        return Ok(parse_rational(rest)?);
    }
    Err(CmdError(format!(
        "InvalidInput: unknown radius source `{}` (expected oracle, asympt:<terms>, explicit:<value>)",
        source
    )))
}

fn cmd_boundary(
    map: &str,
    nu: &str,
    radius_source: &str,
    kind: Option<&str>,
    samples: usize,
    wiring: &str,
    out: &Option<String>,
) -> CmdResult<()> {
    let map = BesselMap::parse(map)
        .ok_or_else(|| CmdError(format!("InvalidInput: unknown map `{}` (expected g or h)", map)))?;
    let order = parse_nu(nu)?;
    let wiring = parse_wiring(wiring)?;
    if samples < 8 {
        return Err(CmdError(
            "InvalidInput: samples must be at least 8".to_string(),
        ));
    }
    let radius = boundary_radius(radius_source, map, kind, &order, wiring)?;
    let tol = parse_rational("1e-8").unwrap();
    let mut lines = vec!["theta,re,im".to_string()];
    for i in 0..samples {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
        // cos/sin enter as exact dyadic rationals; the rectangle encloses
        // the map at the approximated point (plotting-grade)
        let c = Rational::from_float(theta.cos()).unwrap();
        let s = Rational::from_float(theta.sin()).unwrap();
        let rect = map_point(map, &order, &(&radius * c), &(&radius * s), &tol)?;
        let (re, im) = rect.midpoint();
        lines.push(format!(
            "{:.8},{},{}",
            theta,
            to_decimal_string(&re, 10),
            to_decimal_string(&im, 10)
        ));
    }
    emit(out, &lines.join("\n"))
}

fn dispatch(cli: Cli) -> CmdResult<()> {
    match &cli.command {
        Command::Radius {
            kind,
            nu,
            tol,
            output,
        } => cmd_radius(kind, nu, tol, output),
        Command::Bounds {
            kind,
            nu,
            k_max,
            output,
        } => cmd_bounds(kind, nu, *k_max, output),
        Command::Rayleigh {
            family,
            nu,
            k,
            output,
        } => cmd_rayleigh(family, nu, *k, output),
        Command::Laurent {
            family,
            k,
            terms,
            output,
        } => cmd_laurent(family, *k, *terms, output),
        Command::Asympt {
            kind,
            terms,
            trunc,
            wiring,
            output,
        } => cmd_asympt(kind, *terms, *trunc, wiring, output),
        Command::Compare {
            kind,
            nu,
            terms,
            k_max,
            tol,
            wiring,
            output,
        } => cmd_compare(kind, nu, *terms, *k_max, tol, wiring, output),
        Command::Boundary {
            map,
            nu,
            radius_source,
            kind,
            samples,
            wiring,
            out,
        } => cmd_boundary(
            map,
            nu,
            radius_source,
            kind.as_deref(),
            *samples,
            wiring,
            out,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError(msg)) => {
            let mut stderr = std::io::stderr();
            let _ = writeln!(stderr, "{}", msg);
            ExitCode::from(1)
        }
    }
}
