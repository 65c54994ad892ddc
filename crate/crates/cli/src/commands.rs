//! Command implementations producing [`RunReport`]s.

use std::time::Instant;

use serde_json::{json, Map, Value};
use seshadri_core::factory::{construct_surface_example, construct_threefold_example, ExampleReport, SurfaceExampleParams, ThreefoldExampleParams};
use seshadri_core::field::{PrimeField, Rational};
use seshadri_core::local::{smooth_at, PointedHypersurface};
use seshadri_core::seshadri::{
    degree_mult_bound_check, enumerate_surface_candidates, enumerate_threefold_candidates, hypersurface_bound_certificate, surface_bound_certificate,
    threefold_bound_certificate, BoundCertificate, SurfaceCertOptions, ThreefoldCase, ThreefoldCertOptions,
};
use seshadri_core::ideal::QIdeal;
use seshadri_core::settings::Settings;
use seshadri_core::Error;
use thiserror::Error as ThisError;

use crate::parse::{format_polynomial, parse_file, parse_point, ParseError, PolynomialText, Variables};
use crate::report::{certificate_entry, check_entry, rational_json, RunReport};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Budget(Error),
    #[error("{0}")]
    Computation(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e),
            Error::InvalidParameter(msg) => CliError::Usage(msg),
            e => CliError::Computation(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            _ => 2,
        }
    }
}

/// A finished run: the report and whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: RunReport,
    pub success: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Common {
    pub modulus: Option<u64>,
    pub budget: Option<u64>,
    pub timing: bool,
}

impl Common {
    fn settings(&self) -> Settings {
        match self.budget {
            Some(b) => Settings::with_budget(b),
            None => Settings::default(),
        }
    }

    fn field(&self) -> Result<PrimeField, CliError> {
        match self.modulus {
            Some(p) => PrimeField::new(p).map_err(|e| CliError::Usage(format!("--modulus: {e}"))),
            None => Ok(PrimeField::default()),
        }
    }

    fn params(&self, params: &mut Map<String, Value>) {
        if let Some(p) = self.modulus {
            params.insert("modulus".into(), json!(p));
        }
        if let Some(b) = self.budget {
            params.insert("budget".into(), json!(b));
        }
    }

    fn finish(&self, mut report: RunReport, start: Instant, success: bool) -> Outcome {
        if self.timing {
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        Outcome { report, success }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructArgs {
    pub d: u32,
    pub m: Option<u32>,
    pub seed: u64,
    pub coeff_bound: u32,
    pub max_attempts: usize,
}

fn example_checks(report: &mut RunReport, ex: &ExampleReport, prefix: &str) {
    report.checks.extend(ex.checks.iter().map(|c| check_entry(c, prefix)));
}

fn example_summary(report: &mut RunReport, ex: &ExampleReport, extra: Vec<(&str, Value)>) {
    let mut data = Map::new();
    data.insert("polynomial".into(), json!(ex.polynomial.to_string()));
    data.insert("attempts".into(), json!(ex.attempts));
    data.insert("verified".into(), json!(ex.verified));
    data.insert("failed_check".into(), ex.failed_check.map_or(Value::Null, |c| json!(c)));
    for (k, v) in extra {
        data.insert(k.into(), v);
    }
    report.push("example", ex.verified, data);
}

fn construct_params(a: &ConstructArgs, m: u32, common: &Common) -> Map<String, Value> {
    let mut params = Map::new();
    params.insert("d".into(), json!(a.d));
    params.insert("m".into(), json!(m));
    params.insert("seed".into(), json!(a.seed));
    params.insert("coeff_bound".into(), json!(a.coeff_bound));
    params.insert("max_attempts".into(), json!(a.max_attempts));
    common.params(&mut params);
    params
}

pub fn construct_surface(a: &ConstructArgs, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let m = a.m.ok_or_else(|| CliError::Usage("construct-surface needs --m".into()))?;
    let p = SurfaceExampleParams {
        d: a.d,
        m,
        seed: a.seed,
        coeff_bound: a.coeff_bound,
        max_attempts: a.max_attempts,
        modulus: common.field()?,
        prechecks: common.modulus.is_some(),
    };
    let ex = construct_surface_example(&p, &common.settings())?;
    let mut report = RunReport::new("construct-surface", construct_params(a, m, common));
    example_checks(&mut report, &ex.report, "");
    example_summary(&mut report, &ex.report, vec![]);
    report.certificate = ex.report.certificate.as_ref().map(certificate_entry);
    Ok(common.finish(report, start, ex.report.verified))
}

pub fn construct_threefold(a: &ConstructArgs, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let m = a.m.unwrap_or(2);
    let p = ThreefoldExampleParams {
        d: a.d,
        m,
        seed: a.seed,
        coeff_bound: a.coeff_bound,
        max_attempts: a.max_attempts,
        modulus: common.field()?,
        prechecks: common.modulus.is_some(),
    };
    let ex = construct_threefold_example(&p, &common.settings())?;
    let mut report = RunReport::new("construct-threefold", construct_params(a, m, common));
    if let Some(s) = &ex.report.surface {
        example_checks(&mut report, s, "surface/");
    }
    example_checks(&mut report, &ex.report, "");
    example_summary(&mut report, &ex.report, vec![("g_prime", json!(ex.g_prime.to_string()))]);
    report.certificate = ex.report.certificate.as_ref().map(certificate_entry);
    Ok(common.finish(report, start, ex.report.verified))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateFamily {
    Surface { m: u64 },
    Threefold(ThreefoldCase),
}

pub fn enumerate(d: u64, family: EnumerateFamily, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut params = Map::new();
    params.insert("d".into(), json!(d));
    let list = match family {
        EnumerateFamily::Surface { m } => {
            params.insert("surface_m".into(), json!(m));
            enumerate_surface_candidates(d, m)?
        }
        EnumerateFamily::Threefold(case) => {
            params.insert("case".into(), json!(if case == ThreefoldCase::B { "b" } else { "c" }));
            enumerate_threefold_candidates(d, case)?
        }
    };
    common.params(&mut params);
    let mut report = RunReport::new("enumerate", params);
    let values: Vec<Value> = list.iter().map(|c| json!({ "a": c.a, "b": c.b, "value": rational_json(&c.value()) })).collect();
    let mut distinct: Vec<Rational> = list.iter().map(|c| c.value()).collect();
    distinct.dedup();
    let mut data = Map::new();
    data.insert("count".into(), json!(list.len()));
    data.insert("pairs".into(), Value::Array(values));
    data.insert("values".into(), Value::Array(distinct.iter().map(rational_json).collect()));
    report.push("candidates", true, data);
    // the defining inequalities, rechecked on every emitted pair
    let holds = list.iter().all(|c| {
        let (a, b) = (c.a, c.b);
        a >= 3
            && match family {
                EnumerateFamily::Surface { m } => a <= m * d && m * a < (m + 1) * b && b * d <= (d - 1) * a,
                EnumerateFamily::Threefold(ThreefoldCase::B) => a <= d && a < 2 * b && b < a,
                EnumerateFamily::Threefold(ThreefoldCase::C) => a <= (d - 2) * d && (d - 2) * a < (d - 1) * b && b * d <= (d - 1) * a,
            }
    });
    let mut data = Map::new();
    data.insert("violations".into(), json!(if holds { 0 } else { 1 }));
    report.push("inequality-recheck", holds, data);
    Ok(common.finish(report, start, holds))
}

fn load(path: &str) -> Result<PolynomialText, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    Ok(parse_file(&text)?)
}

fn load_pointed(path: &str, point: &str) -> Result<(PolynomialText, PointedHypersurface<Rational>), CliError> {
    let text = load(path)?;
    let p = parse_point(point)?;
    if p.len() != text.vars.arity() {
        return Err(CliError::Usage(format!("--point has {} coordinates, file declares {} variables", p.len(), text.vars.arity())));
    }
    let x = PointedHypersurface::new(text.polynomial.clone(), p).map_err(|e| match e {
        Error::PointNotOnHypersurface | Error::ZeroPolynomial => CliError::Usage(e.to_string()),
        e => e.into(),
    })?;
    Ok((text, x))
}

fn point_params(path: &str, x: &PointedHypersurface<Rational>, common: &Common) -> Map<String, Value> {
    let mut params = Map::new();
    params.insert("file".into(), json!(path));
    params.insert("point".into(), Value::Array(x.point().iter().map(rational_json).collect()));
    common.params(&mut params);
    params
}

fn rational_data() -> Map<String, Value> {
    let mut data = Map::new();
    data.insert("certification".into(), json!("rational"));
    data
}

/// Best available certificate for a hypersurface at a point.
fn certificate_for(x: &PointedHypersurface<Rational>, slice: bool, settings: &Settings) -> Result<BoundCertificate, CliError> {
    let attempt = match x.arity() {
        3 if x.degree() >= 3 => surface_bound_certificate(x, SurfaceCertOptions { slice, seed: 0 }, settings),
        4 => {
            let ideal = QIdeal::new(4, seshadri_core::field::Rationals, vec![x.polynomial().clone()])?;
            threefold_bound_certificate(&ideal, x.point(), ThreefoldCertOptions::default(), settings).map(|mut c| {
                if c.kind != seshadri_core::seshadri::BoundKind::LinePresent {
                    c.warnings.push("bound assumes the projective closure is smooth and irreducible; this is not checked".into());
                }
                c
            })
        }
        _ => Err(Error::Precondition("no specialized bound".into())),
    };
    match attempt {
        Ok(c) => Ok(c),
        Err(e @ Error::BudgetExceeded { .. }) => Err(e.into()),
        Err(_) => Ok(hypersurface_bound_certificate(x, settings)?),
    }
}

pub fn analyze(path: &str, point: &str, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = common.settings();
    let (text, x) = load_pointed(path, point)?;
    let mut report = RunReport::new("analyze", point_params(path, &x, common));
    let vars: &Variables = &text.vars;

    let mut data = rational_data();
    data.insert("multiplicity".into(), json!(x.multiplicity_at()));
    data.insert("degree".into(), json!(x.degree()));
    report.push("multiplicity", true, data);

    let cone = x.tangent_cone_at();
    let mut data = rational_data();
    data.insert("polynomial".into(), json!(format_polynomial(cone, vars)));
    data.insert("degree".into(), json!(x.multiplicity_at()));
    report.push("tangent-cone", true, data);

    let smooth = smooth_at(x.polynomial(), x.point())?;
    let mut data = rational_data();
    data.insert("smooth".into(), json!(smooth));
    report.push("smooth-at-point", true, data);

    let line = x.contains_line_through(&settings)?.contains_line;
    let mut data = rational_data();
    data.insert("contains_line".into(), json!(line));
    report.push("line-through-point", true, data);

    if line {
        report.skip("hypersurface-multiplicity-lemma");
        report.skip("multiplicity-lemma");
    } else {
        let v = x.check_mult_degree_bound(&settings)?;
        let mut data = rational_data();
        for (k, val) in [("m", v.m), ("d", v.d), ("n", v.n)] {
            data.insert(k.into(), json!(val));
        }
        report.push("hypersurface-multiplicity-lemma", v.pass, data);
        let v = degree_mult_bound_check(&x, &settings)?;
        let mut data = rational_data();
        data.insert("d".into(), json!(v.d));
        data.insert("m".into(), json!(v.m));
        report.push("multiplicity-lemma", v.pass, data);
    }

    report.certificate = Some(certificate_entry(&certificate_for(&x, false, &settings)?));
    let success = report.all_passed();
    Ok(common.finish(report, start, success))
}

pub fn certify(path: &str, point: &str, slice: bool, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = common.settings();
    let (_, x) = load_pointed(path, point)?;
    if slice && x.arity() != 3 {
        return Err(CliError::Usage("--slice needs a surface with 3 variables".into()));
    }
    let mut params = point_params(path, &x, common);
    params.insert("slice".into(), json!(slice));
    let mut report = RunReport::new("certify", params);
    let cert = certificate_for(&x, slice, &settings)?;
    let mut data = rational_data();
    data.insert("kind".into(), json!(cert.kind.as_str()));
    data.insert("pinned".into(), json!(cert.is_pinned()));
    report.push("certificate", true, data);
    report.certificate = Some(certificate_entry(&cert));
    Ok(common.finish(report, start, true))
}
