//! The `semisym` command line: compute polynomials and expansions, run the
//! verification suites, print the small-degree table, compare partitions and
//! apply operators.
//!
//! Exit codes: 0 on success, 1 when a verification or table comparison
//! fails, 2 on a usage or input error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ambient::Ambient;
use crate::combinatorics::partition::parse_int_vector;
use crate::combinatorics::{order_test, Partition, Relation};
use crate::diffops::{apply_top, component_operators, determinant_expand, Kind};
use crate::error::{Error, Result};
use crate::exactalg::{json, parse_rational, MultiPoly, ParamScalar};
use crate::identities::evaluation::{special_value, special_value_direct};
use crate::identities::pieri::{self, Parity};
use crate::identities::table;
use crate::interpolation::{
    build_r, build_r_normalized, elementary_semisym, shifted_elementary, shifted_jack, to_basis, Basis,
};
use crate::verify::{self, Suite, Sweep};

#[derive(Parser, Debug)]
#[command(name = "semisym", version, about = "Exact interpolation polynomials for the semisymmetric group")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build a polynomial or an expansion.
    Compute(ComputeArgs),
    /// Run verification suites (`all` or a comma-separated list).
    Verify(VerifyArgs),
    /// Print the non-elementary R_λ of small degree in terms of the columns.
    Table(TableArgs),
    /// Compare two integer vectors under the partial orders.
    Order(OrderArgs),
    /// Apply a difference operator to R_λ or to a polynomial read from JSON.
    Apply(ApplyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Object {
    /// R_λ, unit coefficient on z^[λ].
    #[value(name = "R")]
    BigR,
    /// r_λ = R_λ / R_λ(ρ+λ).
    #[value(name = "r")]
    SmallR,
    /// The top homogeneous component of R_λ.
    #[value(name = "Rbar")]
    Top,
    /// The elementary semisymmetric polynomial e_m.
    #[value(name = "e")]
    Elementary,
    /// R_(1^m) from the explicit shifted formula.
    #[value(name = "shifted-e")]
    ShiftedElementary,
    /// The shifted Jack polynomial with parameter 2r in n variables.
    Jack,
    /// R_λ(-ρ_α) from the product formula and by substitution.
    Value,
    /// ∏(t+z_i) over one parity times R_μ, in the R basis.
    PieriT,
    /// e_m(z_odd) or e_m(z_even) times R_μ, in the R basis.
    PieriE,
    /// R_(1^m) R_μ in the R basis.
    PieriShifted,
    /// e_m Rbar_μ in the Rbar basis.
    PieriBar,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    pub what: Object,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub mu: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    /// `monomial`, `elementary`, `columns`, `R` or `Rbar`.
    #[arg(long, default_value = "monomial")]
    pub basis: String,
    /// `sym` or a nonnegative rational `p/q`.
    #[arg(long, default_value = "sym")]
    pub r: String,
    #[arg(long, default_value = "0")]
    pub t: String,
    #[arg(long, default_value = "1")]
    pub alpha: String,
    /// `odd` or `even`.
    #[arg(long, default_value = "odd")]
    pub parity: String,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: String,
    /// Only this number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree bound for the sweeps over Λ(d).
    #[arg(long)]
    pub dmax: Option<i64>,
    #[arg(long, default_value = "sym")]
    pub r: String,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub report: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 3)]
    pub deg: i64,
    #[arg(long, default_value = "sym")]
    pub r: String,
    /// Compare against this file instead of the built-in table.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub mu: String,
    /// One relation; all of them when omitted.
    #[arg(long)]
    pub rel: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    /// `X`, `Y`, `Xbar` or `Ybar`.
    #[arg(long)]
    pub op: String,
    #[arg(long)]
    pub n: usize,
    /// The operator X(t) or Y(t) at this t.
    #[arg(long, default_value = "0")]
    pub t: String,
    /// Use the k-th component X_k or Y_k instead of X(t), Y(t).
    #[arg(long)]
    pub component: Option<usize>,
    /// Apply to R_λ, or to R̄_λ for `Xbar` and `Ybar`.
    #[arg(long, conflicts_with = "input")]
    pub lambda: Option<String>,
    /// Apply to the polynomial in this JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "sym")]
    pub r: String,
    #[command(flatten)]
    pub output: Output,
}

/// What a subcommand produced: text to print and whether it counts as success.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn done(text: String) -> Result<Outcome> {
    Ok(Outcome { text, ok: true })
}

/// `sym` or a rational value, checked against the admissible range.
pub fn parse_r(s: &str, n: usize) -> Result<ParamScalar> {
    if s == "sym" {
        return Ok(ParamScalar::r());
    }
    let q = parse_rational(s)?;
    Ok(Ambient::rational(n, &q)?.r)
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::Parse(format!("--{flag} is required here")))
}

fn partition(s: &str, n: usize) -> Result<Partition> {
    Partition::new(parse_int_vector(s)?, n)
}

fn parse_basis(s: &str) -> Result<Option<Basis>> {
    if s == "monomial" {
        Ok(None)
    } else {
        s.parse().map(Some)
    }
}

fn render_poly(amb: &Ambient, p: &MultiPoly, basis: Option<Basis>, format: Format) -> Result<String> {
    match (basis, format) {
        (None, Format::Json) => Ok(json::to_json(p)),
        (None, Format::Text) => Ok(p.to_string()),
        (Some(b), f) => {
            let e = to_basis(amb, p, b)?;
            Ok(if f == Format::Json { e.to_json() } else { e.to_string() })
        }
    }
}

fn compute(a: &ComputeArgs) -> Result<Outcome> {
    let n = need(&a.n, "n")?;
    let amb = Ambient { n, r: parse_r(&a.r, n)? };
    let basis = parse_basis(&a.basis)?;
    let lam = || partition(&need(&a.lambda, "lambda")?, n);
    let mu = || partition(&need(&a.mu, "mu")?, n);
    let m = || need(&a.m, "m");
    let parity: Parity = a.parity.parse()?;
    let poly = match a.what {
        Object::BigR => (*build_r(&amb, &lam()?)?).clone(),
        Object::SmallR => build_r_normalized(&amb, &lam()?)?,
        Object::Top => build_r(&amb, &lam()?)?.top_component(),
        Object::Elementary => elementary_semisym(m()?, n)?,
        Object::ShiftedElementary => shifted_elementary(&amb, m()?)?,
        Object::Jack => shifted_jack(lam()?.parts(), &(&amb.r * &ParamScalar::int(2)))?,
        Object::Value => {
            let lam = lam()?;
            let alpha = parse_rational(&a.alpha)?;
            let closed = special_value(&lam, &alpha, &amb.r)?;
            let direct = special_value_direct(&amb, &lam, &alpha)?;
            let text = match a.output.format {
                Format::Json => format!(
                    "{{\"lambda\":{:?},\"alpha\":\"{alpha}\",\"closed\":{},\"direct\":{},\"equal\":{}}}",
                    lam.parts(),
                    json::scalar_to_json(&closed),
                    json::scalar_to_json(&direct),
                    closed == direct
                ),
                Format::Text => format!("closed form: {closed}\nsubstitution: {direct}"),
            };
            return Ok(Outcome { text, ok: closed == direct });
        }
        Object::PieriT | Object::PieriE | Object::PieriShifted | Object::PieriBar => {
            let mu = mu()?;
            let e = match a.what {
                Object::PieriT => pieri::pieri_t(&amb, &mu, parity, &ParamScalar::from_rational(&parse_rational(&a.t)?))?,
                Object::PieriE => pieri::pieri_elementary(&amb, &mu, m()?, parity)?,
                Object::PieriShifted => pieri::pieri_shifted(&amb, &mu, m()?)?,
                _ => pieri::pieri_homogeneous(&amb, &mu, m()?)?,
            };
            return done(if a.output.format == Format::Json { e.to_json() } else { e.to_string() });
        }
    };
    done(render_poly(&amb, &poly, basis, a.output.format)?)
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome> {
    let suites = Suite::parse_list(&a.suite)?;
    let r = parse_r(&a.r, a.n.unwrap_or(1))?;
    if r.is_zero() {
        return Err(Error::InadmissibleR("0".into(), "the identities are stated for r != 0".into()));
    }
    if let Some(d) = a.dmax {
        if d < 0 {
            return Err(Error::OutOfRange(format!("--dmax {d}")));
        }
    }
    let sweep = Sweep { n: a.n, dmax: a.dmax };
    let report = verify::run(&suites, &sweep, &r, a.threads)?;
    let text = match a.report {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok(Outcome { text, ok: report.passed() })
}

fn run_table(a: &TableArgs) -> Result<Outcome> {
    if a.deg < 1 {
        return Err(Error::OutOfRange(format!("--deg {}", a.deg)));
    }
    let r = parse_r(&a.r, (2 * a.deg) as usize)?;
    let rows = table::compute_table(&r, a.deg)?;
    let golden_text = match &a.golden {
        Some(p) => Some(fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?),
        None if a.deg == 3 && !r.is_constant() => Some(table::GOLDEN_DEGREE3.to_string()),
        None => None,
    };
    let diff = match &golden_text {
        Some(t) => table::diff_tables(&rows, &table::parse_table(t)?),
        None => Vec::new(),
    };
    let text = match a.output.format {
        Format::Text => {
            let mut s: String = rows.iter().map(|row| format!("{row}\n")).collect();
            if golden_text.is_some() {
                s.push_str(&if diff.is_empty() { "golden: match\n".to_string() } else { format!("golden: {} differences\n", diff.len()) });
            }
            for d in &diff {
                s.push_str(&format!("  {d}\n"));
            }
            s
        }
        Format::Json => serde_json::json!({
            "deg": a.deg,
            "rows": rows.iter().map(|row| row.to_string()).collect::<Vec<_>>(),
            "golden": golden_text.as_ref().map(|_| diff.is_empty()),
            "differences": diff,
        })
        .to_string(),
    };
    Ok(Outcome { text, ok: diff.is_empty() })
}

const RELATIONS: [(&str, Relation); 6] = [
    ("subseteq", Relation::Subseteq),
    ("sqsubseteq", Relation::Sqsubseteq),
    ("dominance", Relation::Dominance),
    ("dominance_hom", Relation::DominanceHom),
    ("prec", Relation::Prec),
    ("prec_hom", Relation::PrecHom),
];

fn run_order(a: &OrderArgs) -> Result<Outcome> {
    let (x, y) = (parse_int_vector(&a.lambda)?, parse_int_vector(&a.mu)?);
    let rels: Vec<(&str, Relation)> = match &a.rel {
        Some(r) => {
            let rel: Relation = r.parse()?;
            RELATIONS.iter().copied().filter(|(_, q)| *q == rel).collect()
        }
        None => RELATIONS.to_vec(),
    };
    let mut results = Vec::new();
    for (name, rel) in rels {
        results.push((name, order_test(&x, &y, rel)?));
    }
    let text = match a.output.format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                results.iter().map(|(k, v)| (k.to_string(), serde_json::Value::Bool(*v))).collect();
            serde_json::Value::Object(map).to_string()
        }
        Format::Text => results.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    };
    done(text)
}

fn run_apply(a: &ApplyArgs) -> Result<Outcome> {
    let amb = Ambient { n: a.n, r: parse_r(&a.r, a.n)? };
    let f = match (&a.lambda, &a.input) {
        (Some(l), None) => (*build_r(&amb, &partition(l, a.n)?)?).clone(),
        (None, Some(p)) => json::from_json(&fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?)?,
        _ => return Err(Error::Parse("give exactly one of --lambda and --input".into())),
    };
    if f.nvars() != a.n {
        return Err(Error::LengthMismatch(a.n, f.nvars()));
    }
    let t = parse_rational(&a.t)?;
    let (kind, top) = match a.op.as_str() {
        "X" => (Kind::X, false),
        "Y" => (Kind::Y, false),
        "Xbar" => (Kind::X, true),
        "Ybar" => (Kind::Y, true),
        other => return Err(Error::Parse(format!("unknown operator `{other}`"))),
    };
    // The top-degree operators act on R̄_λ when λ is given.
    let f = if top && a.lambda.is_some() { f.top_component() } else { f };
    let g = match (a.component, top) {
        (Some(k), _) => {
            let ops = component_operators(kind, &amb)?;
            let op = ops.get(k.wrapping_sub(1)).ok_or_else(|| Error::OutOfRange(format!("component {k} of {kind}")))?;
            let g = op.apply(&f)?;
            if top {
                g.homogeneous_component(f.total_degree().unwrap_or(0))
            } else {
                g
            }
        }
        (None, false) => determinant_expand(kind, &amb, &t)?.apply(&f)?,
        (None, true) => apply_top(kind, &amb, &f, &t)?,
    };
    done(match a.output.format {
        Format::Json => json::to_json(&g),
        Format::Text => g.to_string(),
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Compute(a) => compute(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::Table(a) => run_table(a),
        Cmd::Order(a) => run_order(a),
        Cmd::Apply(a) => run_apply(a),
    }
}

fn out_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.cmd {
        Cmd::Compute(a) => a.output.out.as_ref(),
        Cmd::Verify(a) => a.out.as_ref(),
        Cmd::Table(a) => a.output.out.as_ref(),
        Cmd::Order(a) => a.output.out.as_ref(),
        Cmd::Apply(a) => a.output.out.as_ref(),
    }
}

/// Runs the command line and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match out_path(&cli) {
                Some(p) => {
                    if let Err(e) = fs::write(p, &text) {
                        eprintln!("error: {}: {e}", p.display());
                        return 2;
                    }
                }
                None => print!("{text}"),
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

