//! Command implementations for the `knotsig` binary. Every command returns its
//! full output as a string so that results are byte-identical across runs.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use knotsig::alexmod::{
    alexander_module, cyclic_quotient, double_cover_linking_form, torsion_order_by_resultant, AlexModError,
    FiniteLambdaModule, DEFAULT_CAP,
};
use knotsig::fixtures::KnotFixture;
use knotsig::mbreps::{character_table_checks, enumerate_irreps, FiniteSemidirect, MbrepsError};
use knotsig::resolve::{bounded_witnesses, build_resolution, default_witnesses, ResolveError, SSchedule};
use knotsig::signature::{
    approximation_csv, approximation_table, factorial_schedule, signature_function, SignatureError,
};
use knotsig::{alexander_polynomial, arf_invariant, find_seifert_metabolizer, IntLaurentPoly, SeifertMatrix};

/// Largest `N` accepted in `factorial:N`.
pub const MAX_FACTORIAL: u32 = 10;
/// Coefficient bound for the metabolizer search in `invariants`.
pub const METABOLIZER_BOUND: u32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<SignatureError> for CliError {
    fn from(e: SignatureError) -> Self {
        match e {
            SignatureError::InvalidSchedule(_) | SignatureError::NonPositiveEps => CliError::Input(e.to_string()),
            SignatureError::PrecisionExhausted(_) => CliError::Compute(e.to_string()),
        }
    }
}

impl From<AlexModError> for CliError {
    fn from(e: AlexModError) -> Self {
        match e {
            AlexModError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            AlexModError::InvalidModule(_) | AlexModError::InvalidForm(_) => CliError::Input(e.to_string()),
            AlexModError::DegenerateForm => CliError::Compute(e.to_string()),
        }
    }
}

impl From<MbrepsError> for CliError {
    fn from(e: MbrepsError) -> Self {
        match e {
            MbrepsError::Module(m) => m.into(),
            MbrepsError::ActionNotPeriodic(_) | MbrepsError::CharacterNotPeriodic(_) | MbrepsError::CharacterNotDefined => {
                CliError::Input(e.to_string())
            }
        }
    }
}

impl From<ResolveError> for CliError {
    fn from(e: ResolveError) -> Self {
        match e {
            ResolveError::ModulusTooLarge { .. } => CliError::Cap(e.to_string()),
            ResolveError::SeparationFailure { .. } => CliError::Compute(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Enumeration cap, overridable with `KNOTSIG_CAP`.
pub fn enumeration_cap() -> Result<u64> {
    match std::env::var("KNOTSIG_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("KNOTSIG_CAP={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

pub fn read_knot(path: &Path) -> Result<SeifertMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_knot(&text)
}

pub fn parse_knot(text: &str) -> Result<SeifertMatrix> {
    let fixture = KnotFixture::from_json(text).map_err(|e| CliError::Input(e.to_string()))?;
    fixture.seifert_matrix().map_err(|e| CliError::Input(e.to_string()))
}

pub fn read_module(path: &Path) -> Result<FiniteLambdaModule> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(FiniteLambdaModule::from_json(&v)?)
}

/// Parses `"p/q"`, decimals and scientific notation exactly, e.g. `"1e-9"`,
/// `"0.25"`, `"-3/7"`, `"2.5E3"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || CliError::Input(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().unwrap();
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(all);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -r } else { r })
}

fn parse_eps(s: &str) -> Result<BigRational> {
    let eps = parse_rational(s)?;
    if !eps.is_positive() {
        return Err(CliError::Input("eps must be positive".into()));
    }
    Ok(eps)
}

/// `"factorial:N"` for `2!, .., N!`, or an explicit comma-separated list.
pub fn parse_schedule(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("factorial:") {
        let n: u32 = n.trim().parse().map_err(|_| CliError::Input(format!("bad schedule {s:?}")))?;
        if n < 2 {
            return Err(CliError::Input("factorial schedule needs N >= 2".into()));
        }
        if n > MAX_FACTORIAL {
            return Err(CliError::Cap(format!("factorial:{n} is above factorial:{MAX_FACTORIAL}")));
        }
        return Ok(factorial_schedule(n));
    }
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| CliError::Input(format!("bad schedule {s:?}"))))
        .collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_invariants(a: &SeifertMatrix) -> Result<String> {
    let mut out = json!({
        "name": a.name().unwrap_or(""),
        "genus": a.genus(),
        "alexander": alexander_polynomial(a).to_string(),
        "arf": arf_invariant(a),
    });
    if let Ok(m) = find_seifert_metabolizer(a, METABOLIZER_BOUND) {
        out["metabolizer"] = json!(m.to_i64_rows());
    }
    Ok(pretty(&out))
}

pub fn cmd_l2(a: &SeifertMatrix, eps: &str) -> Result<String> {
    let eps = parse_eps(eps)?;
    let i = signature_function(a)?.integral(&eps)?;
    Ok(pretty(&json!({ "integral_lo": i.lo.to_string(), "integral_hi": i.hi.to_string() })))
}

pub fn eta_cyclic_values(a: &SeifertMatrix, k: u64) -> Result<(i64, BigRational)> {
    if k == 0 {
        return Err(CliError::Input("k must be positive".into()));
    }
    let sum = signature_function(a)?.eta_cyclic(k)?;
    Ok((sum, BigRational::new(sum.into(), k.into())))
}

pub fn cmd_eta_cyclic(a: &SeifertMatrix, k: u64) -> Result<String> {
    let (sum, average) = eta_cyclic_values(a, k)?;
    Ok(pretty(&json!({ "k": k, "sum": sum, "average": average.to_string() })))
}

pub fn cmd_approx(a: &SeifertMatrix, schedule: &str, eps: &str) -> Result<String> {
    let schedule = parse_schedule(schedule)?;
    let eps = parse_eps(eps)?;
    Ok(approximation_csv(&approximation_table(a, &schedule, &eps)?))
}

pub fn cmd_sigfn(a: &SeifertMatrix) -> Result<String> {
    Ok(signature_function(a)?.to_csv())
}

pub fn cmd_covers(a: &SeifertMatrix, k: u64) -> Result<String> {
    if k == 0 {
        return Err(CliError::Input("k must be positive".into()));
    }
    let q = cyclic_quotient(&alexander_module(a), k as usize);
    let mut out = json!({
        "k": k,
        "free_rank": q.free_rank,
        "torsion": q.torsion.torsion().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "torsion_order": q.torsion.order().to_string(),
        "resultant_order": torsion_order_by_resultant(a, k as usize).to_string(),
        "module": q.torsion.to_json(),
    });
    if k == 2 {
        out["linking_form"] = double_cover_linking_form(a)?.to_json();
    }
    Ok(pretty(&out))
}

pub fn cmd_reps(f: &FiniteLambdaModule, m: u64) -> Result<String> {
    if m == 0 {
        return Err(CliError::Input("m must be positive".into()));
    }
    let cap = enumeration_cap()?;
    let reps = enumerate_irreps(m, f, cap)?;
    let g = FiniteSemidirect::new(m, f, cap)?;
    let report = character_table_checks(&reps, &g);
    Ok(pretty(&json!({
        "m": m,
        "group_order": g.order(),
        "classes": reps.iter().map(|r| r.to_json(m)).collect::<Vec<_>>(),
        "sum_of_squares": report.sum_of_squares,
        "dimension_identity": report.dimension_identity,
        "orthogonality": report.orthogonality_failures.is_empty(),
    })))
}

pub fn cmd_resolve(delta: &str, p: u64, depth: u32, s: &str, witness_bound: Option<u32>) -> Result<String> {
    let delta = IntLaurentPoly::parse_coeff_list(delta).ok_or_else(|| CliError::Input(format!("bad polynomial {delta:?}")))?;
    if depth == 0 {
        return Err(CliError::Input("depth must be positive".into()));
    }
    let schedule = SSchedule::parse(s)?;
    let witnesses = match witness_bound {
        Some(b) => bounded_witnesses(&delta, b),
        None => default_witnesses(),
    };
    let report = build_resolution(&delta, p, depth, &schedule, &witnesses)?;
    Ok(pretty(&report.to_json()))
}
