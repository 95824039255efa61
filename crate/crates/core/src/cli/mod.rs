//! Command-line front end for the `qpair` binary.

pub mod expr;
pub mod output;

pub use expr::parse_expression;
pub use output::{render, CommandResult, Format};

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::scalar::{fmt_rational, parse_rational};
use crate::exactalg::{ExpConvention, GaussianRational, LinearForm, LocalizationTerm, MultiPoly, Rational, TruncatedSeries};
use crate::ihring::{ih_pairing_matrix, monomial, semistable_ring, vm_basis, weakly_balanced_check};
use crate::models::config::{poly_from_map, rational_from_doc, RationalDoc};
use crate::models::{dump_model, load_model_file, model_circle_pn, model_su2_p1n, model_su2_pn, ActionModel, GroupKind};
use crate::pairing::{
    martin_factor, pair_abelianized_at, pair_ih, pair_partial_desing, pair_regular, small_shift, BlowupSpec,
};
use crate::residue::{jk_residue, Chamber, Perturbation};
use crate::stratify::{desing_series, equivariant_series_total, ip_series, semistable_series, Family, StratificationSpec};
use crate::witten::{witten_i0, Channel};

#[derive(Parser, Debug)]
#[command(name = "qpair", version, about = "Exact pairings on symplectic and GIT quotients")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a pairing of classes on a quotient.
    Pair(PairArgs),
    /// Intersection cohomology of a circle quotient of projective space.
    Ih(IhArgs),
    /// Poincaré series of the binary-form and point-configuration quotients.
    Poincare(PoincareArgs),
    /// Local Witten integral as a polynomial in sqrt(eps).
    Witten(WittenArgs),
    /// Jeffrey-Kirwan residue of terms read from a JSON file.
    Residue(ResidueArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    /// `circle:r0,r1,...`, `su2_pn:n` or `su2_p1n:n`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "model", required_unless_present = "model")]
    pub builtin: Option<String>,
    /// Path to a model JSON document.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Print the model as JSON and exit.
    #[arg(long)]
    pub dump_model: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairMode {
    Regular,
    Ih,
    Abelian,
    Desing,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub eta: String,
    /// Second class for `--mode ih`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, value_enum, default_value_t = PairMode::Regular)]
    pub mode: PairMode,
    /// Moment level for `--mode abelian` (defaults to half the smallest positive moment).
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<String>,
}

#[derive(Args, Debug)]
pub struct IhArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    /// `betti`, `vm`, `ring` or `matrix:d`.
    #[arg(long, default_value = "betti")]
    pub what: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Total,
    Ss,
    Desing,
    Ip,
}

#[derive(Args, Debug)]
pub struct PoincareArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Which::Total)]
    pub which: Which,
    /// Highest power of t kept (default 2n+4).
    #[arg(long)]
    pub bound: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Pn,
    P1n,
}

#[derive(Args, Debug)]
pub struct WittenArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub eta: String,
}

#[derive(Args, Debug)]
pub struct ResidueArgs {
    #[arg(long)]
    pub terms: PathBuf,
    /// Chamber vector, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub chamber: String,
    /// Perturbation direction, comma separated (must be negative on the chamber).
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
}

/// Outcome of one invocation: text to print and the process exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok(Executed::Result(r)) => Outcome { stdout: render(&r, cli.format), stderr: String::new(), code: 0 },
        Ok(Executed::Raw(s)) => Outcome { stdout: s, stderr: String::new(), code: 0 },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: if e.is_contract_violation() { 3 } else { 2 },
        },
    }
}

pub enum Executed {
    Result(CommandResult),
    Raw(String),
}

pub fn execute(cli: &Cli) -> Result<Executed> {
    match &cli.command {
        Command::Pair(a) => {
            let (model, builtin) = resolve_model(&a.model)?;
            if a.model.dump_model {
                return Ok(Executed::Raw(dump_model(&model)? + "\n"));
            }
            cmd_pair(&model, builtin.as_ref(), a).map(Executed::Result)
        }
        Command::Witten(a) => {
            let (model, _) = resolve_model(&a.model)?;
            if a.model.dump_model {
                return Ok(Executed::Raw(dump_model(&model)? + "\n"));
            }
            cmd_witten(&model, a).map(Executed::Result)
        }
        Command::Ih(a) => cmd_ih(a).map(Executed::Result),
        Command::Poincare(a) => cmd_poincare(a).map(Executed::Result),
        Command::Residue(a) => cmd_residue(a).map(Executed::Result),
    }
}

/// A parsed `--builtin` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Circle(Vec<i64>),
    Su2Pn(u32),
    Su2P1n(u32),
}

pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("`{t}` is not an integer"))))
        .collect()
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).ok_or_else(|| Error::Parse(format!("`{t}` is not a rational number"))))
        .collect()
}

pub fn parse_builtin(s: &str) -> Result<Builtin> {
    let (name, arg) = s.split_once(':').ok_or_else(|| Error::Parse(format!("builtin `{s}` should look like name:args")))?;
    let single = || -> Result<u32> { arg.trim().parse().map_err(|_| Error::Parse(format!("`{arg}` is not a size"))) };
    match name {
        "circle" | "circle_pn" => Ok(Builtin::Circle(parse_int_list(arg)?)),
        "su2_pn" => Ok(Builtin::Su2Pn(single()?)),
        "su2_p1n" => Ok(Builtin::Su2P1n(single()?)),
        _ => Err(Error::Parse(format!("unknown builtin `{name}` (circle, su2_pn, su2_p1n)"))),
    }
}

pub fn build_builtin(b: &Builtin) -> Result<ActionModel> {
    match b {
        Builtin::Circle(w) => model_circle_pn(w),
        Builtin::Su2Pn(n) => model_su2_pn(*n),
        Builtin::Su2P1n(n) => model_su2_p1n(*n),
    }
}

fn resolve_model(a: &ModelArgs) -> Result<(ActionModel, Option<Builtin>)> {
    match (&a.builtin, &a.model) {
        (Some(b), None) => {
            let b = parse_builtin(b)?;
            Ok((build_builtin(&b)?, Some(b)))
        }
        (None, Some(p)) => Ok((load_model_file(p)?, None)),
        _ => Err(Error::InvalidArgument("give exactly one of --builtin and --model".into())),
    }
}

fn scalar(v: &GaussianRational) -> Value {
    Value::String(v.to_string())
}

fn regular_provenance(model: &ActionModel) -> &'static str {
    match model.group {
        GroupKind::U1 => "U(1) residue formula at a regular value",
        GroupKind::Su2 => "SU(2) rank-one residue formula",
        GroupKind::Torus => "torus residue formula (Jeffrey-Kirwan residue of D^2 times the localized terms)",
    }
}

fn cmd_pair(model: &ActionModel, builtin: Option<&Builtin>, a: &PairArgs) -> Result<CommandResult> {
    let eta = parse_expression(&a.eta, &model.generators)?;
    let mut r = CommandResult::new(format!("pair --mode {:?} --eta {}", a.mode, a.eta).to_lowercase());
    match a.mode {
        PairMode::Regular => {
            let v = pair_regular(model, &eta)?;
            r.push("value", scalar(&v));
            r.provenance = regular_provenance(model).into();
        }
        PairMode::Abelian => {
            let xi = match &a.shift {
                Some(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("`{s}` is not a rational number")))?,
                None => small_shift(model)?,
            };
            let v = pair_abelianized_at(model, &eta, &xi)?;
            r.push("shift", Value::String(fmt_rational(&xi)));
            r.push("value", scalar(&v));
            r.provenance = "abelianized residue formula at a shifted moment level (times D^2)".into();
        }
        PairMode::Ih => {
            let beta = parse_expression(&a.beta, &model.generators)?;
            let v = pair_ih(model, &eta, &beta)?;
            r.push("shift", Value::String(fmt_rational(&small_shift(model)?)));
            r.push("martin_factor", Value::String(fmt_rational(&martin_factor(model))));
            r.push("value", scalar(&v));
            r.provenance = "intersection pairing via the residue formula at a small regular shift".into();
        }
        PairMode::Desing => {
            let blowups = match builtin {
                Some(Builtin::Su2Pn(n)) if n % 2 == 0 => vec![BlowupSpec::su2_pn(*n)?],
                _ if model.flagged().next().is_none() => vec![],
                _ => {
                    let id = model.flagged().next().map(|f| f.id.clone()).unwrap_or_default();
                    return Err(Error::MissingBlowup(id));
                }
            };
            let d = pair_partial_desing(model, &eta, &blowups)?;
            r.push("chamber_value", scalar(&d.chamber_value));
            r.push("correction", scalar(&d.correction));
            r.push("value", scalar(&d.total));
            if num_traits::Zero::is_zero(&d.correction) {
                r.notes.push("correction residue = 0".into());
            }
            r.provenance = "partial desingularization: chamber value plus exceptional-divisor residues".into();
        }
    }
    Ok(r)
}

fn cmd_ih(a: &IhArgs) -> Result<CommandResult> {
    let weights = parse_int_list(&a.weights)?;
    let mut r = CommandResult::new(format!("ih --weights {} --what {}", a.weights, a.what));
    let mono = |(i, j): (u32, u32)| monomial(i, j).display_with(&["xi", "rho"]);
    match a.what.as_str() {
        "betti" => {
            let b = vm_basis(&weights)?;
            r.push("betti", json!(b.betti()));
            r.provenance = "dimensions of the truncated standard-monomial basis".into();
        }
        "vm" => {
            let b = vm_basis(&weights)?;
            let by: BTreeMap<String, Value> =
                b.by_degree.iter().map(|(d, ms)| (d.to_string(), json!(ms.iter().map(|&m| mono(m)).collect::<Vec<_>>()))).collect();
            r.push("q", json!(b.q));
            r.push("n_r", json!(b.n_r));
            r.push("top_degree", json!(b.top_degree));
            r.push("tau", Value::String(mono(b.tau)));
            r.push("basis", json!(by));
            r.provenance = "truncation of standard monomials along the unstable strata".into();
        }
        "ring" => {
            let ring = semistable_ring(&weights)?;
            let names = ["xi", "rho"];
            r.push("weakly_balanced", json!(weakly_balanced_check(&weights)));
            r.push("ideal", json!(ring.ideal_generators.iter().map(|p| p.display_with(&names)).collect::<Vec<_>>()));
            r.push("groebner", json!(ring.groebner.polys().iter().map(|p| p.display_with(&names)).collect::<Vec<_>>()));
            r.provenance = "Groebner basis of the unstable-strata ideal (lex, xi > rho)".into();
        }
        w if w.starts_with("matrix:") => {
            let d: u32 = w[7..].parse().map_err(|_| Error::Parse(format!("bad degree in `{w}`")))?;
            let m = ih_pairing_matrix(&weights, d)?;
            let entries: Vec<Vec<Value>> = m.entries.iter().map(|row| row.iter().map(scalar).collect()).collect();
            r.push("rows", json!(m.rows.iter().map(|&x| mono(x)).collect::<Vec<_>>()));
            r.push("cols", json!(m.cols.iter().map(|&x| mono(x)).collect::<Vec<_>>()));
            r.push("matrix", json!(entries));
            r.latex = Some(output::latex_matrix(&m.entries));
            r.provenance = "intersection pairing: normal form of the product as a multiple of tau".into();
        }
        other => return Err(Error::InvalidArgument(format!("unknown --what `{other}` (betti, vm, ring, matrix:d)"))),
    }
    Ok(r)
}

fn series_value(s: &TruncatedSeries) -> Value {
    json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn cmd_poincare(a: &PoincareArgs) -> Result<CommandResult> {
    let family = match a.family {
        FamilyArg::Pn => Family::Pn,
        FamilyArg::P1n => Family::P1n,
    };
    let mut spec = StratificationSpec::new(family, a.n);
    if let Some(b) = a.bound {
        spec = spec.with_bound(b)?;
    }
    let s = match a.which {
        Which::Total => equivariant_series_total(&spec),
        Which::Ss => semistable_series(&spec),
        Which::Desing => desing_series(&spec)?,
        Which::Ip => ip_series(&spec)?,
    };
    let mut r = CommandResult::new(format!("poincare --family {:?} --n {} --which {:?}", a.family, a.n, a.which).to_lowercase());
    r.push("coefficients", series_value(&s));
    r.push("series", Value::String(s.to_string()));
    if let Some(top) = spec.quotient_degree() {
        if matches!(a.which, Which::Desing | Which::Ip) {
            r.push("palindromic", json!(s.is_palindromic_to(top) && s.vanishes_above(top)));
        }
    }
    if a.n == 4 && a.which == Which::Desing {
        r.notes.push("edge case: empty middle ranges are taken as 0".into());
    }
    r.latex = Some(output::latex_series(&s));
    r.provenance = "Poincare series subtraction over the equivariantly perfect stratification".into();
    Ok(r)
}

fn cmd_witten(model: &ActionModel, a: &WittenArgs) -> Result<CommandResult> {
    let eta = parse_expression(&a.eta, &model.generators)?;
    let w = witten_i0(model, &eta)?;
    let mut r = CommandResult::new(format!("witten --eta {}", a.eta));
    let terms: Vec<Value> = w
        .value
        .terms()
        .map(|(ch, e, c)| {
            json!({
                "channel": if ch == Channel::Rational { "rational" } else { "sqrt(pi/2)" },
                "sqrt_eps_power": e,
                "coeff": c.to_string(),
            })
        })
        .collect();
    r.push("value", json!(terms));
    r.push("display", Value::String(w.value.to_string()));
    r.push("prefactor", Value::String("A_K".into()));
    r.provenance = "Gaussian cone moments of localized residues, times eps^(-s/2)".into();
    Ok(r)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermsDoc {
    rank: usize,
    terms: Vec<TermDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    numerator: BTreeMap<String, RationalDoc>,
    #[serde(default)]
    exponent: Option<Vec<RationalDoc>>,
    #[serde(default)]
    convention: Option<String>,
    denominator: Vec<FactorDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    form: Vec<RationalDoc>,
    #[serde(default = "one")]
    multiplicity: u32,
}

fn one() -> u32 {
    1
}

/// Reads a terms document: `{"rank": l, "terms": [{"numerator": {...}, "exponent": [...],
/// "convention": "real"|"imaginary", "denominator": [{"form": [...], "multiplicity": m}]}]}`.
pub fn load_terms(json: &str) -> Result<Vec<LocalizationTerm>> {
    let doc: TermsDoc = serde_json::from_str(json)?;
    let form = |v: &[RationalDoc], f: &str| -> Result<LinearForm> {
        Ok(LinearForm::new(v.iter().map(|r| rational_from_doc(r, f)).collect::<Result<_>>()?))
    };
    doc.terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let field = format!("terms[{i}]");
            let num: MultiPoly = poly_from_map(&t.numerator, doc.rank, &format!("{field}.numerator"))?;
            let exponent = match &t.exponent {
                Some(e) => form(e, &format!("{field}.exponent"))?,
                None => LinearForm::zero(doc.rank),
            };
            let convention = match t.convention.as_deref() {
                None | Some("real") => ExpConvention::Real,
                Some("imaginary") => ExpConvention::Imaginary,
                Some(o) => return Err(Error::Parse(format!("{field}.convention: `{o}` (real or imaginary)"))),
            };
            let den = t
                .denominator
                .iter()
                .map(|d| Ok((form(&d.form, &format!("{field}.denominator"))?, d.multiplicity)))
                .collect::<Result<Vec<_>>>()?;
            LocalizationTerm::new(num, exponent, convention, den)
        })
        .collect()
}

fn cmd_residue(a: &ResidueArgs) -> Result<CommandResult> {
    let text = std::fs::read_to_string(&a.terms)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", a.terms.display())))?;
    let terms = load_terms(&text)?;
    let chamber = Chamber::new(parse_rational_list(&a.chamber)?);
    let rho = a.rho.as_deref().map(|s| Perturbation::new(LinearForm::new(parse_rational_list(s)?), &chamber)).transpose()?;
    let v = jk_residue(&terms, &chamber, rho.as_ref())?;
    let mut r = CommandResult::new(format!("residue --chamber {}", a.chamber));
    r.push("terms", json!(terms.len()));
    r.push("value", scalar(&v));
    r.provenance = "Jeffrey-Kirwan residue by iterated partial fractions".into();
    Ok(r)
}
