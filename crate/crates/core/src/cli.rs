//! Command-line front end. Parsing and execution live here so they can be
//! driven from tests; the binary only forwards `argv` and the exit code.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::arith::prime_divisors;
use crate::algebra::{Coeff, Torsion, TupleSpec};
use crate::cohomology::{cup_length, zero_divisor_cup_length, CohomologyRing};
use crate::error::Error;
use crate::fgl::FormalGroupLaw;
use crate::invariants::{self, InvariantInputs, Interval};
use crate::oracle::{self, DEFAULT_CAP};
use crate::report::{build_report, OracleSection};
use crate::splittings::{cartesian_split, verify_wedge, wedge_decomposition};
use crate::steenrod;

#[derive(Debug, Parser)]
#[command(name = "lensprod", version, about = "Cohomology and invariants of lens product spaces")]
struct Args {
    /// Nondecreasing tuple n₁,…,n_r
    #[arg(long, global = true, value_delimiter = ',')]
    n: Vec<u32>,
    /// Group order: a positive integer or `inf`
    #[arg(long, global = true)]
    t: Option<String>,
    /// Z, Q, F2 or F:<p>
    #[arg(long, global = true)]
    coeff: Option<String>,
    /// Bundle multiplicity for `wedge`
    #[arg(long, global = true)]
    k: Option<u64>,
    /// Geometric dimension input for the immersion formula
    #[arg(long, global = true)]
    gd: Option<u64>,
    /// Span of the bundle multiple over the base, for stable span
    #[arg(long, global = true)]
    span_base: Option<u64>,
    /// Override for TC of the base, as `lo,hi`
    #[arg(long, global = true)]
    tc_base: Option<String>,
    /// Truncation degree for `tseries`
    #[arg(long, global = true)]
    precision: Option<usize>,
    /// `additive` or `multiplicative[:u]` for `tseries`
    #[arg(long, global = true)]
    law: Option<String>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Sort n instead of rejecting unsorted input
    #[arg(long, global = true)]
    sort: bool,
    /// Largest chain-complex basis the oracle will build
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[command(subcommand)]
    command: CommandKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum CommandKind {
    /// Presentation, groups and cup lengths of the cohomology ring
    Ring,
    /// Steenrod squares and Stiefel–Whitney classes
    Steenrod,
    /// Sphere factors that split off
    Split,
    /// Stable wedge decomposition of the Thom space of kγ
    Wedge,
    /// Manifold invariants
    Invariants,
    /// t-series of a formal group law
    Tseries,
    /// Compare the ring with brute-force chain-complex homology
    Oracle,
    /// Everything at once
    Report,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Law {
    Additive,
    Multiplicative(BigRational),
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub command: CommandKind,
    pub spec: Option<TupleSpec>,
    pub t: Torsion,
    pub coeff: Coeff,
    pub k: u64,
    pub inputs: InvariantInputs,
    pub precision: Option<usize>,
    pub law: Law,
    pub json: bool,
    pub cap: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Help or version text; not an error.
    Display(String),
    Invalid(String),
    Unsupported(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Display(_) => 0,
            CliError::Invalid(_) => 2,
            CliError::Unsupported(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(_) | Error::CapExceeded { .. } => CliError::Unsupported(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

/// Text for stdout and stderr, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), exit_code: 0 }
    }

    fn error(e: &CliError) -> Self {
        match e {
            CliError::Display(text) => Output::ok(text.clone()),
            CliError::Invalid(m) | CliError::Unsupported(m) => Output {
                stdout: String::new(),
                stderr: format!("error: {m}\n"),
                exit_code: e.exit_code(),
            },
        }
    }
}

fn parse_interval(s: &str) -> Result<Interval, CliError> {
    let bad = || CliError::Invalid(format!("expected lo,hi but got {s:?}"));
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(CliError::Invalid(format!("interval {s:?} has lo > hi")));
    }
    Ok(Interval { lo, hi })
}

fn parse_law(s: &str) -> Result<Law, CliError> {
    let bad = || CliError::Invalid(format!("unknown law {s:?}; use additive or multiplicative[:u]"));
    match s.split_once(':') {
        None if s == "additive" => Ok(Law::Additive),
        None if s == "multiplicative" => Ok(Law::Multiplicative(BigRational::from_integer(1.into()))),
        Some(("multiplicative", u)) => {
            let u = match u.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.parse().map_err(|_| bad())?;
                    let b: BigInt = b.parse().map_err(|_| bad())?;
                    if b == 0.into() {
                        return Err(bad());
                    }
                    BigRational::new(a, b)
                }
                None => BigRational::from_integer(u.parse().map_err(|_| bad())?),
            };
            Ok(Law::Multiplicative(u))
        }
        _ => Err(bad()),
    }
}

/// Default coefficients: `Z` for `oracle` and `tseries`, `F2` for `steenrod`
/// and for even `t`, the smallest prime divisor of an odd `t > 1`, `Q` otherwise.
pub fn default_coeff(command: CommandKind, t: Torsion) -> Coeff {
    match (command, t) {
        (CommandKind::Oracle | CommandKind::Tseries, _) => Coeff::Integers,
        (CommandKind::Steenrod, _) => Coeff::Prime(2),
        (_, Torsion::Finite(t)) if t > 1 => Coeff::Prime(prime_divisors(t)[0]),
        _ => Coeff::Rationals,
    }
}

/// Parses `argv` (including the program name).
pub fn parse<I, S>(argv: I) -> Result<Query, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = Args::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Display(e.render().to_string()),
            _ => CliError::Invalid(e.render().to_string().trim_end().trim_start_matches("error: ").to_string()),
        }
    })?;
    let t: Torsion = args
        .t
        .as_deref()
        .ok_or_else(|| CliError::Invalid("--t is required".into()))?
        .parse()?;
    let spec = if args.n.is_empty() {
        if args.command != CommandKind::Tseries {
            return Err(CliError::Invalid("--n is required".into()));
        }
        None
    } else if args.sort {
        Some(TupleSpec::sorted(args.n.clone(), t)?)
    } else {
        Some(TupleSpec::new(args.n.clone(), t)?)
    };
    let coeff = match &args.coeff {
        Some(c) => c.parse()?,
        None => default_coeff(args.command, t),
    };
    let tc_base = args.tc_base.as_deref().map(parse_interval).transpose()?;
    let law = args.law.as_deref().map(parse_law).transpose()?.unwrap_or(Law::Additive);
    Ok(Query {
        command: args.command,
        spec,
        t,
        coeff,
        k: args.k.unwrap_or(0),
        inputs: InvariantInputs { span_base: args.span_base, gd: args.gd, tc_base },
        precision: args.precision,
        law,
        json: args.json,
        cap: args.cap.unwrap_or(DEFAULT_CAP),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Runs a parsed query.
pub fn execute(q: &Query) -> Output {
    match dispatch(q) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

/// Parses and runs.
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse(argv) {
        Ok(q) => execute(&q),
        Err(e) => Output::error(&e),
    }
}

fn label(spec: &TupleSpec) -> String {
    format!("{}_{spec}", if spec.t().is_finite() { "L" } else { "CP" })
}

fn spec_of(q: &Query) -> &TupleSpec {
    q.spec.as_ref().expect("validated in parse")
}

fn dispatch(q: &Query) -> Result<Output, CliError> {
    match q.command {
        CommandKind::Ring => ring(q),
        CommandKind::Steenrod => steenrod_cmd(q),
        CommandKind::Split => split(q),
        CommandKind::Wedge => wedge(q),
        CommandKind::Invariants => invariants_cmd(q),
        CommandKind::Tseries => tseries(q),
        CommandKind::Oracle => oracle_cmd(q),
        CommandKind::Report => report(q),
    }
}

#[derive(Serialize)]
struct RingJson {
    spec: String,
    coeff: Coeff,
    generators: Vec<(String, u64)>,
    relations: Vec<String>,
    groups: Vec<String>,
    poincare: Option<Vec<u64>>,
    cup_length: Option<usize>,
    zero_divisor_cup_length: Option<usize>,
}

fn ring(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let r = CohomologyRing::build(spec, q.coeff)?;
    let field = q.coeff.is_field();
    let data = RingJson {
        spec: spec.to_string(),
        coeff: q.coeff,
        generators: r.generators().into_iter().map(|g| (g.name, g.degree)).collect(),
        relations: r.relations(),
        groups: r.graded_groups().render_over(spec.dim() as i64, q.coeff),
        poincare: field.then(|| r.poincare_polynomial().map(|p| p.coeffs().to_vec())).transpose()?,
        cup_length: field.then(|| cup_length(&r).map(|c| c.length)).transpose()?,
        zero_divisor_cup_length: field
            .then(|| zero_divisor_cup_length(&r).map(|c| c.length))
            .transpose()?,
    };
    if q.json {
        return Ok(Output::ok(to_json(&data)));
    }
    let mut s = String::new();
    writeln!(s, "H*({}; {})", label(spec), q.coeff).unwrap();
    let gens: Vec<String> = data.generators.iter().map(|(n, d)| format!("{n} (deg {d})")).collect();
    writeln!(s, "generators: {}", gens.join(", ")).unwrap();
    for rel in &data.relations {
        writeln!(s, "  {rel}").unwrap();
    }
    for (d, g) in data.groups.iter().enumerate() {
        writeln!(s, "H^{d} = {g}").unwrap();
    }
    if let Some(p) = &data.poincare {
        writeln!(s, "Poincaré polynomial: {}", crate::algebra::PoincareSeries::new(p.clone())).unwrap();
        writeln!(s, "cup length: {}", data.cup_length.unwrap_or(0)).unwrap();
        writeln!(s, "zero-divisor cup length: {}", data.zero_divisor_cup_length.unwrap_or(0)).unwrap();
    }
    Ok(Output::ok(s))
}

#[derive(Serialize)]
struct SquareJson {
    class: String,
    degree: u64,
    k: u64,
    value: String,
}

#[derive(Serialize)]
struct SteenrodJson {
    stiefel_whitney: String,
    orientable: bool,
    spin: bool,
    squares: Vec<SquareJson>,
}

fn steenrod_cmd(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let r = CohomologyRing::build(spec, q.coeff)?;
    let mut squares = Vec::new();
    for d in 1..=spec.dim() {
        for row in steenrod::steenrod_table(&r, d)? {
            for (k, v) in row.squares {
                squares.push(SquareJson { class: row.monomial.to_string(), degree: d, k, value: v.to_string() });
            }
        }
    }
    let data = SteenrodJson {
        stiefel_whitney: steenrod::stiefel_whitney_total(spec).to_string(),
        orientable: steenrod::is_orientable(spec),
        spin: steenrod::is_spin(spec),
        squares,
    };
    if q.json {
        return Ok(Output::ok(to_json(&data)));
    }
    let mut s = String::new();
    writeln!(s, "Steenrod squares on H*({}; F2)", label(spec)).unwrap();
    for sq in &data.squares {
        writeln!(s, "  Sq^{} {} = {}", sq.k, sq.class, sq.value).unwrap();
    }
    writeln!(s, "w(τ) = {}", data.stiefel_whitney).unwrap();
    writeln!(s, "orientable: {}, spin: {}", data.orientable, data.spin).unwrap();
    Ok(Output::ok(s))
}

fn split(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let sp = cartesian_split(spec);
    if q.json {
        return Ok(Output::ok(to_json(&serde_json::json!({
            "factors": sp.factors,
            "remainder": sp.remainder.n(),
        }))));
    }
    let mut s = String::new();
    writeln!(s, "{}", label(spec)).unwrap();
    for f in &sp.factors {
        let status = match &f.status {
            crate::splittings::SplitStatus::Splits { rules } => format!("splits ({rules:?})"),
            crate::splittings::SplitStatus::Unknown { reason } => format!("unknown ({reason})"),
        };
        writeln!(s, "  index {} S^{}: {status}", f.index, f.sphere_dim).unwrap();
    }
    writeln!(s, "{sp}").unwrap();
    Ok(Output::ok(s))
}

fn wedge(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let summands = wedge_decomposition(spec, q.k);
    let check = verify_wedge(spec, q.k, q.coeff)?;
    if q.json {
        return Ok(Output::ok(to_json(&serde_json::json!({
            "k": q.k,
            "summands": summands,
            "verified": check.holds,
            "lhs": check.lhs.to_string(),
            "rhs": check.rhs.to_string(),
        }))));
    }
    let mut s = String::new();
    writeln!(s, "Σ T({}γ) over {} splits as", q.k, label(spec)).unwrap();
    for w in &summands {
        writeln!(s, "  σ = {:?}: {w}", w.sigma).unwrap();
    }
    writeln!(s, "Poincaré bookkeeping over {}: {} = {} ({})", q.coeff, check.lhs, check.rhs,
        if check.holds { "ok" } else { "MISMATCH" }).unwrap();
    Ok(Output { exit_code: if check.holds { 0 } else { 1 }, ..Output::ok(s) })
}

fn invariants_cmd(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let rep = invariants::invariant_report(spec, &q.inputs)?;
    if q.json {
        return Ok(Output::ok(to_json(&rep)));
    }
    let mut s = String::new();
    writeln!(s, "{} (dim {})", label(spec), spec.dim()).unwrap();
    writeln!(s, "χ = {}, χ* = {:?}", rep.chi, rep.chi_star).unwrap();
    if let (Torsion::Finite(t), true) = (spec.t(), spec.n1() >= 1) {
        writeln!(s, "σ(n₁, t) = {}", invariants::sigma(spec.n1(), t)?).unwrap();
    }
    writeln!(s, "orientable: {}, spin: {}, vector field: {}", rep.orientable, rep.spin, rep.vector_field).unwrap();
    writeln!(s, "stably parallelizable: {}", rep.stably_parallelizable).unwrap();
    writeln!(s, "parallelizable: {}", rep.parallelizable).unwrap();
    writeln!(s, "cat ∈ {}, TC ∈ {}", rep.cat, rep.tc).unwrap();
    let show = |v: Option<i64>| v.map_or("unknown".to_string(), |x| x.to_string());
    writeln!(s, "stable span: {}, span: {}{}", show(rep.span.stablespan), show(rep.span.span),
        rep.span.clause.as_ref().map_or(String::new(), |c| format!(" (span = stable span: {c})"))).unwrap();
    let imm = if rep.imm.exact { rep.imm.lo.to_string() } else { format!("[{}, {}]", rep.imm.lo, rep.imm.hi) };
    writeln!(s, "immersion dimension: {imm}").unwrap();
    Ok(Output::ok(s))
}

fn tseries(q: &Query) -> Result<Output, CliError> {
    let Torsion::Finite(t) = q.t else {
        return Err(CliError::Invalid("tseries needs a finite t".into()));
    };
    let precision = q.precision.unwrap_or_else(|| q.spec.as_ref().map_or(8, |s| s.n1() as usize + 1));
    let law = match &q.law {
        Law::Additive => FormalGroupLaw::additive(q.coeff),
        Law::Multiplicative(u) => FormalGroupLaw::multiplicative(q.coeff, u.clone())?,
    };
    let series = law.t_series(t, precision)?;
    if q.json {
        let coeffs: Vec<String> = series.series.coeffs().iter().map(|c| c.to_string()).collect();
        return Ok(Output::ok(to_json(&serde_json::json!({
            "law": law.kind().to_string(),
            "t": t,
            "precision": precision,
            "coefficients": coeffs,
        }))));
    }
    Ok(Output::ok(format!("{series}\n")))
}

fn oracle_cmd(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let cmp = oracle::compare_with_theory(spec, q.coeff, q.cap)?;
    let code = if cmp.matches { 0 } else { 1 };
    if q.json {
        return Ok(Output { exit_code: code, ..Output::ok(to_json(&cmp)) });
    }
    let mut s = String::new();
    writeln!(s, "{} over {}: theory vs chain complex", label(spec), q.coeff).unwrap();
    for v in &cmp.degrees {
        writeln!(s, "  H^{}: {} | {} {}", v.degree, v.theory, v.oracle, if v.ok { "ok" } else { "MISMATCH" }).unwrap();
    }
    writeln!(s, "{}", if cmp.matches { "match" } else { "mismatch" }).unwrap();
    Ok(Output { exit_code: code, ..Output::ok(s) })
}

fn report(q: &Query) -> Result<Output, CliError> {
    let spec = spec_of(q);
    let rep = build_report(spec, q.coeff, q.k, &q.inputs, q.cap)?;
    let code = match rep.oracle {
        OracleSection { checked: true, matches: false } => 1,
        _ => 0,
    };
    let text = if q.json { to_json(&rep) } else { rep.to_text() };
    Ok(Output { exit_code: code, ..Output::ok(text) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("lensprod".to_string()).chain(s.split_whitespace().map(String::from)).collect()
    }

    #[test]
    fn parses_documented_invocations() {
        let q = parse(argv("--n 1,1 --t inf ring --coeff Q")).unwrap();
        assert_eq!(q.command, CommandKind::Ring);
        assert_eq!(q.coeff, Coeff::Rationals);
        assert_eq!(parse(argv("--n 2,1 --t 4 ring")).unwrap_err().exit_code(), 2);
        let q = parse(argv("--n 2,1 --t 4 --sort ring")).unwrap();
        assert_eq!(q.spec.unwrap().n(), &[1, 2]);
        let q = parse(argv("--n 1 --t 3 oracle")).unwrap();
        assert_eq!((q.command, q.coeff), (CommandKind::Oracle, Coeff::Integers));
    }

    #[test]
    fn default_coefficients() {
        let c = |s: &str| parse(argv(s)).unwrap().coeff;
        assert_eq!(c("--n 1 --t 4 ring"), Coeff::Prime(2));
        assert_eq!(c("--n 1 --t inf ring"), Coeff::Rationals);
        assert_eq!(c("--n 1 --t 15 ring"), Coeff::Prime(3));
        assert_eq!(c("--n 1 --t 1 ring"), Coeff::Rationals);
        assert_eq!(c("--n 1 --t inf steenrod"), Coeff::Prime(2));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(argv("--n 1 --t 0 ring")).exit_code, 2);
        assert_eq!(run(argv("--n 1 --t 4 frobnicate")).exit_code, 2);
        assert_eq!(run(argv("--n 1 --t 4 ring --coeff F:9")).exit_code, 2);
        assert_eq!(run(argv("--n 1 --t inf oracle")).exit_code, 3);
        assert_eq!(run(argv("--n 1 --t 4 steenrod --coeff Q")).exit_code, 3);
        assert_eq!(run(argv("--n 2,2,2 --t 6 oracle --cap 100")).exit_code, 3);
        assert_eq!(run(argv("--n 1 --t 4 invariants --gd 9")).exit_code, 2);
        assert_eq!(run(argv("--n 1 --t 4 invariants --tc-base 3,1")).exit_code, 2);
        assert_eq!(run(argv("--help")).exit_code, 0);
    }

    #[test]
    fn commands_produce_output() {
        let out = run(argv("--n 1,1 --t 2 ring"));
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("y^2 = z"));
        let out = run(argv("--n 1 --t 3 oracle"));
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("Z/3"));
        let out = run(argv("--t 4 tseries --law multiplicative --precision 2"));
        assert_eq!(out.stdout.trim(), "[4](z) = 4z + 6z^2 + O(z^3)");
        let out = run(argv("--n 1,1 --t inf wedge --k 0"));
        assert!(out.stdout.contains("s^3 + s^4 + s^6"));
        for cmd in ["split", "invariants", "steenrod", "report"] {
            let out = run(argv(&format!("--n 1,2 --t 4 {cmd} --json")));
            assert_eq!(out.exit_code, 0, "{cmd}: {}", out.stderr);
            serde_json::from_str::<serde_json::Value>(&out.stdout).unwrap();
        }
    }
}
