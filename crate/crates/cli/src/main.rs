use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qehrhart_core::algebra::{carlitz_bernoulli_table, render_qrat, render_t_numerator, render_xpoly, QRat, SeriesTQ, XPoly};
use qehrhart_core::ehrhart::{
    periodicity_certificate, qehrhart_polynomial, series_from_polynomial, series_limit_t1, special_value,
    value_at_infinity,
};
use qehrhart_core::error::{DocumentError, GeometryError};
use qehrhart_core::io::{parse_polytope_document, parse_poset_document, qrat_json, series_json, value_json, xpoly_json};
use qehrhart_core::poset::{descent_numerator, order_polytope, q_volume};
use qehrhart_core::polytope::{format_point, validate_pair, weighted_sum, LatticePolytope, LinearForm, Region};
use qehrhart_core::verify::{self, Scope};

#[derive(Parser)]
#[command(name = "qehrhart", version, about = "Exact q-Ehrhart series and polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Computations on a lattice polytope with a linear form.
    Polytope {
        action: PolytopeAction,
        #[arg(long)]
        input: String,
        /// Dilation factor.
        #[arg(long)]
        n: Option<i64>,
        /// Period for `certify`.
        #[arg(long = "N")]
        period: Option<i64>,
        /// Sampled multiples for `certify`.
        #[arg(long = "k", value_delimiter = ',', default_values_t = [1i64, 2])]
        ks: Vec<i64>,
        #[arg(long, value_enum, default_value_t = RegionArg::Closed)]
        region: RegionArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Computations on the order polytope of a poset.
    Poset {
        action: PosetAction,
        #[arg(long)]
        input: String,
        /// Also compute the series geometrically and compare.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Carlitz q-Bernoulli numbers beta_0..beta_N.
    Bernoulli {
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Runs the identity checks on the built-in corpus.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolytopeAction {
    Series,
    Poly,
    SpecialValue,
    Points,
    Certify,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetAction {
    Series,
    Poly,
    Volume,
    SpecialValue,
    Infinity,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    Closed,
    Interior,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    Polytopes,
    Posets,
    Umbral,
}

enum Failure {
    Parse(String),
    Violation(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Violation(m) | Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Violations(m) => Failure::Violation(m),
            GeometryError::Precondition(m) => Failure::Precondition(m),
            GeometryError::Internal(m) => Failure::Internal(m),
            other => Failure::Parse(other.to_string()),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Geometry(g) => g.into(),
            other => Failure::Parse(other.to_string()),
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {path}: {e}")))
}

fn series_text(s: &SeriesTQ) -> String {
    format!(
        "numerator: {}\ndenominator_exponents: {:?}",
        render_t_numerator(s.numerator()),
        s.denominator_exponents()
    )
}

fn emit_series(s: &SeriesTQ, format: Format) -> String {
    match format {
        Format::Text => series_text(s),
        Format::Json => series_json(s).to_string(),
    }
}

fn emit_poly(l: &XPoly, format: Format) -> String {
    match format {
        Format::Text => render_xpoly(l, "x", false),
        Format::Json => xpoly_json(l).to_string(),
    }
}

fn emit_value(r: &QRat, format: Format) -> String {
    match format {
        Format::Text => render_qrat(r),
        Format::Json => value_json(r).to_string(),
    }
}

fn load_pair(path: &str) -> Result<(LatticePolytope, LinearForm), Failure> {
    let (q, lambda) = parse_polytope_document(&read(path)?)?;
    for p in q.stripped_points() {
        eprintln!("warning: dropped non-extreme point {}", format_point(p));
    }
    if let Err(violations) = validate_pair(&q, &lambda) {
        let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Failure::Violation(lines.join("\n")));
    }
    Ok((q, lambda))
}

#[allow(clippy::too_many_arguments)]
fn run_polytope(
    action: PolytopeAction,
    input: &str,
    n: Option<i64>,
    period: Option<i64>,
    ks: &[i64],
    region: RegionArg,
    format: Format,
) -> Result<String, Failure> {
    let (q, lambda) = load_pair(input)?;
    let need_n = || n.ok_or_else(|| Failure::Precondition("--n is required for this action".into()));
    match action {
        PolytopeAction::Series => Ok(emit_series(&series_from_polynomial(&qehrhart_polynomial(&q, &lambda)?), format)),
        PolytopeAction::Poly => Ok(emit_poly(&qehrhart_polynomial(&q, &lambda)?, format)),
        PolytopeAction::SpecialValue => Ok(emit_value(&special_value(&q, &lambda)?, format)),
        PolytopeAction::Points => {
            let n = need_n()?;
            if n < 0 {
                return Err(Failure::Precondition(format!("dilation {n} is negative")));
            }
            let region = match region {
                RegionArg::Closed => Region::Closed,
                RegionArg::Interior => Region::Interior,
            };
            let points = q.lattice_points(n, region);
            let w = weighted_sum(&points, &lambda, false);
            Ok(match format {
                Format::Text => {
                    let mut lines: Vec<String> = points.iter().map(|p| format_point(p)).collect();
                    lines.push(format!("count: {}", points.len()));
                    lines.push(format!("weighted_sum: {}", render_qrat(&w)));
                    lines.join("\n")
                }
                Format::Json => json!({ "points": points, "count": points.len(), "weighted_sum": qrat_json(&w) }).to_string(),
            })
        }
        PolytopeAction::Certify => {
            let n = need_n()?;
            let period = period.ok_or_else(|| Failure::Precondition("--N is required for certify".into()))?;
            let ok = periodicity_certificate(&q, &lambda, n, period, ks)?;
            Ok(match format {
                Format::Text => ok.to_string(),
                Format::Json => json!({ "certified": ok, "n": n, "N": period, "k": ks }).to_string(),
            })
        }
    }
}

fn run_poset(action: PosetAction, input: &str, check: bool, format: Format) -> Result<String, Failure> {
    let p = parse_poset_document(&read(input)?)?;
    let (q, lambda) = order_polytope(&p);
    match action {
        PosetAction::Series => {
            let s = descent_numerator(&p);
            if check {
                let geometric = series_from_polynomial(&qehrhart_polynomial(&q, &lambda)?);
                if geometric != s {
                    return Err(Failure::Internal("descent numerator disagrees with the geometric series".into()));
                }
            }
            Ok(emit_series(&s, format))
        }
        PosetAction::Poly => Ok(emit_poly(&qehrhart_polynomial(&q, &lambda)?, format)),
        PosetAction::Volume => Ok(emit_value(&q_volume(&qehrhart_polynomial(&q, &lambda)?, p.size()), format)),
        PosetAction::SpecialValue => Ok(emit_value(&special_value(&q, &lambda)?, format)),
        PosetAction::Infinity => {
            let l = qehrhart_polynomial(&q, &lambda)?;
            let v = value_at_infinity(&l);
            if v != series_limit_t1(&series_from_polynomial(&l))? {
                return Err(Failure::Internal("value at infinity disagrees with the series limit".into()));
            }
            Ok(emit_value(&v, format))
        }
    }
}

fn run_bernoulli(count: usize, format: Format) -> String {
    let betas = carlitz_bernoulli_table(count);
    let at_one: Vec<String> = betas
        .iter()
        .map(|b| b.at_one().map_or_else(|| "pole".to_string(), |v| v.to_string()))
        .collect();
    match format {
        Format::Text => betas
            .iter()
            .zip(&at_one)
            .enumerate()
            .map(|(k, (b, v))| format!("{k}\t{}\t{v}", render_qrat(b)))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => Value::Array(
            betas
                .iter()
                .zip(&at_one)
                .enumerate()
                .map(|(k, (b, v))| json!({ "n": k, "beta": qrat_json(b), "at_q1": v }))
                .collect(),
        )
        .to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Polytope {
            action,
            input,
            n,
            period,
            ks,
            region,
            format,
        } => run_polytope(action, &input, n, period, &ks, region, format),
        Command::Poset {
            action,
            input,
            check,
            format,
        } => run_poset(action, &input, check, format),
        Command::Bernoulli { count, format } => Ok(run_bernoulli(count, format)),
        Command::Verify { scope, seed } => {
            let scope = match scope {
                ScopeArg::All => Scope::All,
                ScopeArg::Polytopes => Scope::Polytopes,
                ScopeArg::Posets => Scope::Posets,
                ScopeArg::Umbral => Scope::Umbral,
            };
            let report = verify::run(scope, seed);
            print!("{}", report.render());
            return if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match outcome {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}
