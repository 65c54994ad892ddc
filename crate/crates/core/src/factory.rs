//! Seeded construction and verification of the singular surface family and
//! the threefolds built on it.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{rational, Fp, PrimeField, Rational, Rationals};
use crate::ideal::{Ideal, QIdeal};
use crate::irreducible::{absolutely_irreducible_factor_count, resultant_in_last};
use crate::local::{curve_multiplicity_at, singular_locus_dimension, smooth_at, PointedHypersurface};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::par::first_accepted;
use crate::poly::{random_form_with, Polynomial, QPoly};
use crate::seshadri::{
    classify_tangent_intersection, cone_lemma_check, degree_mult_bound_check, surface_bound_certificate, threefold_bound_certificate,
    BoundCertificate, SurfaceCertOptions, ThreefoldCertOptions,
};
use crate::settings::Settings;

pub const DEFAULT_COEFF_BOUND: u32 = 10;
pub const DEFAULT_MAX_ATTEMPTS: usize = 25;

const THREEFOLD_STREAM: u64 = 0x7468_7265_6566_6f6c;

/// A value attached to a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Datum {
    Int(i64),
    Bool(bool),
    Rational(Rational),
    Text(String),
}

impl From<i64> for Datum {
    fn from(v: i64) -> Self {
        Datum::Int(v)
    }
}

impl From<u64> for Datum {
    fn from(v: u64) -> Self {
        Datum::Int(v as i64)
    }
}

impl From<u32> for Datum {
    fn from(v: u32) -> Self {
        Datum::Int(v as i64)
    }
}

impl From<usize> for Datum {
    fn from(v: usize) -> Self {
        Datum::Int(v as i64)
    }
}

impl From<bool> for Datum {
    fn from(v: bool) -> Self {
        Datum::Bool(v)
    }
}

impl From<Rational> for Datum {
    fn from(v: Rational) -> Self {
        Datum::Rational(v)
    }
}

impl From<&str> for Datum {
    fn from(v: &str) -> Self {
        Datum::Text(v.to_string())
    }
}

impl From<String> for Datum {
    fn from(v: String) -> Self {
        Datum::Text(v)
    }
}

pub type Data = BTreeMap<String, Datum>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// How a check's verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    /// Exact computation over the rationals.
    Rational,
    /// Computed modulo a prime, in a direction where the answer transfers to the rationals.
    PrimeFieldSound,
    /// Computed modulo a prime without a transfer guarantee.
    PrimeFieldProbabilistic,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::Rational => "rational",
            Certification::PrimeFieldSound => "prime-field-sound",
            Certification::PrimeFieldProbabilistic => "prime-field-probabilistic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    /// `None` for skipped checks.
    pub certification: Option<Certification>,
    pub data: Data,
}

struct Outcome {
    pass: bool,
    certification: Certification,
    data: Vec<(&'static str, Datum)>,
}

fn outcome(pass: bool, certification: Certification, data: Vec<(&'static str, Datum)>) -> Result<Outcome> {
    Ok(Outcome { pass, certification, data })
}

#[derive(Default)]
struct CheckList {
    checks: Vec<Check>,
    failed: bool,
}

impl CheckList {
    /// Runs `f` unless an earlier check failed. Budget errors propagate; other
    /// errors fail the check.
    fn run(&mut self, name: &'static str, fallback: Certification, f: impl FnOnce() -> Result<Outcome>) -> Result<bool> {
        if self.failed {
            self.checks.push(Check { name, status: CheckStatus::Skipped, certification: None, data: Data::new() });
            return Ok(false);
        }
        let (pass, certification, data) = match f() {
            Ok(o) => (o.pass, o.certification, o.data.into_iter().map(|(k, v)| (k.to_string(), v)).collect()),
            Err(e @ Error::BudgetExceeded { .. }) => return Err(e),
            Err(e) => (false, fallback, Data::from([("error".to_string(), Datum::Text(e.to_string()))])),
        };
        self.failed |= !pass;
        let status = if pass { CheckStatus::Pass } else { CheckStatus::Fail };
        self.checks.push(Check { name, status, certification: Some(certification), data });
        Ok(pass)
    }

    fn first_failure(&self) -> Option<&'static str> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail).map(|c| c.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleReport {
    /// `"surface"` or `"threefold"`.
    pub family: &'static str,
    pub params: Data,
    /// Defining polynomial of the reported attempt, in the affine chart.
    pub polynomial: QPoly,
    /// 1-based index of the reported attempt.
    pub attempts: usize,
    pub verified: bool,
    pub checks: Vec<Check>,
    pub certificate: Option<BoundCertificate>,
    pub failed_check: Option<&'static str>,
    /// For threefolds, the report of the embedded surface.
    pub surface: Option<Box<ExampleReport>>,
}

impl ExampleReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn epsilon(&self) -> Option<Rational> {
        self.certificate.as_ref().and_then(|c| c.epsilon())
    }
}

/// Derives the seed of attempt `index` from the run seed.
pub fn attempt_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceExampleParams {
    pub d: u32,
    pub m: u32,
    pub seed: u64,
    pub coeff_bound: u32,
    pub max_attempts: usize,
    /// Prime used by the checks that run modulo p.
    pub modulus: PrimeField,
    /// Screen the line check modulo p before confirming over the rationals.
    pub prechecks: bool,
}

impl SurfaceExampleParams {
    pub fn new(d: u32, m: u32, seed: u64) -> Self {
        SurfaceExampleParams { d, m, seed, coeff_bound: DEFAULT_COEFF_BOUND, max_attempts: DEFAULT_MAX_ATTEMPTS, modulus: PrimeField::default(), prechecks: false }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 4 || self.m < 2 || self.m + 2 > self.d {
            return Err(Error::InvalidParameter(format!("need d >= 4 and 2 <= m <= d - 2, got d = {}, m = {}", self.d, self.m)));
        }
        validate_common(self.coeff_bound, self.max_attempts)
    }

    fn data(&self) -> Data {
        Data::from([
            ("d".to_string(), Datum::from(self.d)),
            ("m".to_string(), Datum::from(self.m)),
            ("seed".to_string(), Datum::Text(self.seed.to_string())),
            ("coeff_bound".to_string(), Datum::from(self.coeff_bound)),
            ("max_attempts".to_string(), Datum::from(self.max_attempts)),
            ("modulus".to_string(), Datum::from(self.modulus.modulus())),
        ])
    }
}

fn validate_common(coeff_bound: u32, max_attempts: usize) -> Result<()> {
    if coeff_bound < 1 {
        return Err(Error::InvalidParameter("coeff_bound must be at least 1".into()));
    }
    if max_attempts < 1 {
        return Err(Error::InvalidParameter("max_attempts must be at least 1".into()));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SurfaceExample {
    pub hypersurface: PointedHypersurface<Rational>,
    /// `f_m`, `f_{d-1}`, `f_d`.
    pub pieces: [QPoly; 3],
    pub report: ExampleReport,
}

struct SurfaceAttempt {
    f: QPoly,
    pieces: [QPoly; 3],
    list: CheckList,
    certificate: Option<BoundCertificate>,
}

impl SurfaceAttempt {
    fn verified(&self) -> bool {
        !self.list.failed
    }
}

fn origin(n: usize) -> Vec<Rational> {
    vec![rational(0, 1); n]
}

/// Absolutely irreducible factor count of `Res_z` of a random projection of `V(f, g)`.
fn projection_check(f: &QPoly, g: &QPoly, rng: &mut ChaCha8Rng, p: &PrimeField, settings: &Settings) -> Result<Outcome> {
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let expected = (df * dg) as u64;
    let x = QPoly::var(3, Rationals, 0);
    let y = QPoly::var(3, Rationals, 1);
    let z = QPoly::var(3, Rationals, 2);
    let zf = Monomial::from_exponents(&[0, 0, df as u16]);
    let zg = Monomial::from_exponents(&[0, 0, dg as u16]);
    for _ in 0..32 {
        let a = rng.gen_range(-20i64..=20);
        let b = rng.gen_range(-20i64..=20);
        let images = [&x + &z.scale(&rational(a, 1)), &y + &z.scale(&rational(b, 1)), z.clone()];
        let fs = f.compose(&images)?.reduce_mod(p)?;
        let gs = g.compose(&images)?.reduce_mod(p)?;
        if fs.coefficient(&zf).value() == 0 || gs.coefficient(&zg).value() == 0 {
            continue;
        }
        let r = resultant_in_last(&fs, &gs, settings.execution)?;
        let deg = r.degree().unwrap_or(0) as u64;
        let mut data = vec![("modulus", Datum::from(p.modulus())), ("projection_degree", Datum::from(deg)), ("expected_degree", Datum::from(expected))];
        if deg != expected {
            return outcome(false, Certification::PrimeFieldProbabilistic, data);
        }
        let plane: Polynomial<Fp> = r.dehomogenize(2);
        return match absolutely_irreducible_factor_count(&plane, settings.execution) {
            Ok(count) => {
                data.push(("factor_count", Datum::from(count)));
                let cert = if count == 1 { Certification::PrimeFieldSound } else { Certification::PrimeFieldProbabilistic };
                outcome(count == 1, cert, data)
            }
            Err(Error::NotSquarefree) => {
                data.push(("squarefree", Datum::from(false)));
                outcome(false, Certification::PrimeFieldProbabilistic, data)
            }
            Err(e) => Err(e),
        };
    }
    Err(Error::Precondition("no projection direction with constant leading coefficients found".into()))
}

fn surface_attempt(p: &SurfaceExampleParams, index: usize, settings: &Settings) -> Result<SurfaceAttempt> {
    let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(p.seed, index));
    let (d, m, cb) = (p.d, p.m, p.coeff_bound);
    let fm = random_form_with(&mut rng, &Rationals, m, 3, cb);
    let fd1 = random_form_with(&mut rng, &Rationals, d - 1, 3, cb);
    let fd = random_form_with(&mut rng, &Rationals, d, 3, cb);
    let f = &(&fm + &fd1) + &fd;
    let o = origin(3);
    let mut list = CheckList::default();
    let q = Certification::Rational;

    list.run("order-at-origin", q, || {
        let order = f.order_at_origin()?;
        outcome(order == m, q, vec![("order", order.into()), ("expected", m.into())])
    })?;
    list.run("tangent-cone-integral", q, || {
        let b = fm.dehomogenize(2);
        if b.degree() != Some(m) {
            return outcome(false, q, vec![("chart_degree", b.degree().unwrap_or(0).into())]);
        }
        let count = absolutely_irreducible_factor_count(&b, settings.execution)?;
        outcome(count == 1, q, vec![("factor_count", count.into())])
    })?;
    let x = PointedHypersurface::at_origin(f.clone())?;
    list.run("no-line-through-origin", q, || {
        if p.prechecks {
            let xp = PointedHypersurface::at_origin(f.reduce_mod(&p.modulus)?)?;
            if xp.contains_line_through(settings)?.contains_line {
                return outcome(false, Certification::PrimeFieldProbabilistic, vec![("contains_line_mod_p", true.into())]);
            }
        }
        let line = x.contains_line_through(settings)?.contains_line;
        outcome(!line, q, vec![("contains_line", line.into())])
    })?;
    let curve = QIdeal::new(3, Rationals, vec![f.clone(), fm.clone()])?;
    list.run("slice-curve-degree", q, || {
        let h = curve.affine_hilbert_data(settings)?;
        let expected = (d * m) as u64;
        outcome(h.dimension == 1 && h.degree == expected, q, vec![("degree", h.degree.into()), ("dimension", h.dimension.into()), ("expected", expected.into())])
    })?;
    list.run("slice-curve-multiplicity", q, || {
        let mult = curve_multiplicity_at(&curve, &o, settings)?;
        let expected = ((d - 1) * m) as u64;
        outcome(mult == expected, q, vec![("multiplicity", mult.into()), ("expected", expected.into())])
    })?;
    list.run("bertini-surrogate", Certification::PrimeFieldProbabilistic, || projection_check(&f, &fm, &mut rng, &p.modulus, settings))?;
    list.run("hypersurface-multiplicity-lemma", q, || {
        let v = x.check_mult_degree_bound(settings)?;
        outcome(v.pass, q, vec![("m", v.m.into()), ("d", v.d.into()), ("n", v.n.into())])
    })?;
    list.run("multiplicity-lemma", q, || {
        let v = degree_mult_bound_check(&x, settings)?;
        outcome(v.pass, q, vec![("d", v.d.into()), ("m", v.m.into())])
    })?;
    list.run("cone-lemma", q, || {
        let v = cone_lemma_check(&curve, &fm, &o, settings)?;
        let quotient = v.quotient.map(Datum::from).unwrap_or(Datum::Text("none".into()));
        outcome(
            v.pass && v.quotient == Some(1),
            q,
            vec![("curve_degree", v.curve_degree.into()), ("base_degree", v.base_degree.into()), ("multiplicity", v.multiplicity.into()), ("quotient", quotient)],
        )
    })?;
    let mut certificate = None;
    list.run("seshadri-certificate", q, || {
        let cert = surface_bound_certificate(&x, SurfaceCertOptions { slice: true, seed: attempt_seed(p.seed, index) }, settings)?;
        let target = rational(d as i64, d as i64 - 1);
        let eps = cert.epsilon();
        let pass = eps.as_ref() == Some(&target) && cert.warnings.is_empty();
        let mut data = vec![("kind", Datum::from(cert.kind.as_str())), ("lower_bound", cert.lower_bound.clone().into())];
        data.push(("epsilon", eps.map(Datum::from).unwrap_or(Datum::Text("none".into()))));
        certificate = Some(cert);
        outcome(pass, q, data)
    })?;
    Ok(SurfaceAttempt { f, pieces: [fm, fd1, fd], list, certificate })
}

/// Samples `f = f_m + f_{d-1} + f_d` until every check passes.
pub fn construct_surface_example(p: &SurfaceExampleParams, settings: &Settings) -> Result<SurfaceExample> {
    p.validate()?;
    let (index, attempt, _) = first_accepted(
        settings.execution,
        p.max_attempts,
        |i| surface_attempt(p, i, settings),
        |r| r.as_ref().map_or(true, |a| a.verified()),
    )
    .expect("at least one attempt");
    let a = attempt?;
    let verified = a.verified();
    let report = ExampleReport {
        family: "surface",
        params: p.data(),
        polynomial: a.f.clone(),
        attempts: index + 1,
        verified,
        failed_check: a.list.first_failure(),
        checks: a.list.checks,
        certificate: a.certificate,
        surface: None,
    };
    Ok(SurfaceExample { hypersurface: PointedHypersurface::at_origin(a.f)?, pieces: a.pieces, report })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreefoldExampleParams {
    pub d: u32,
    /// Multiplicity of the embedded surface.
    pub m: u32,
    pub seed: u64,
    pub coeff_bound: u32,
    pub max_attempts: usize,
    pub modulus: PrimeField,
    pub prechecks: bool,
}

impl ThreefoldExampleParams {
    pub fn new(d: u32, seed: u64) -> Self {
        ThreefoldExampleParams { d, m: 2, seed, coeff_bound: DEFAULT_COEFF_BOUND, max_attempts: DEFAULT_MAX_ATTEMPTS, modulus: PrimeField::default(), prechecks: false }
    }

    pub fn surface_params(&self) -> SurfaceExampleParams {
        SurfaceExampleParams {
            d: self.d,
            m: self.m,
            seed: self.seed,
            coeff_bound: self.coeff_bound,
            max_attempts: self.max_attempts,
            modulus: self.modulus,
            prechecks: self.prechecks,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 4 {
            return Err(Error::InvalidParameter(format!("need d >= 4, got {}", self.d)));
        }
        self.surface_params().validate()
    }
}

#[derive(Debug, Clone)]
pub struct ThreefoldExample {
    pub hypersurface: PointedHypersurface<Rational>,
    pub g_prime: QPoly,
    pub report: ExampleReport,
}

struct ThreefoldAttempt {
    f: QPoly,
    g_prime: QPoly,
    list: CheckList,
    certificate: Option<BoundCertificate>,
}

/// Dense polynomial of degree `degree` with every monomial present.
fn random_dense(rng: &mut ChaCha8Rng, degree: u32, arity: usize, cb: u32) -> QPoly {
    let mut acc = QPoly::zero(arity, Rationals);
    for k in 0..=degree {
        acc = &acc + &random_form_with(rng, &Rationals, k, arity, cb);
    }
    acc
}

fn threefold_attempt(p: &ThreefoldExampleParams, surface: &SurfaceExample, index: usize, settings: &Settings) -> Result<ThreefoldAttempt> {
    let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed(p.seed ^ THREEFOLD_STREAM, index));
    let d = p.d;
    let g_prime = random_dense(&mut rng, d - 1, 3, p.coeff_bound);
    let g4 = surface.hypersurface.polynomial().extend_arity(1);
    let x4 = QPoly::var(4, Rationals, 3);
    let f = &g4 + &(&x4 * &g_prime.extend_arity(1));
    let o = origin(4);
    let q = Certification::Rational;
    let sound = Certification::PrimeFieldSound;
    let modulus = p.modulus;
    let mut list = CheckList::default();

    let sreport = &surface.report;
    list.run("embedded-surface", q, || outcome(sreport.verified, q, vec![("attempts", sreport.attempts.into())]))?;
    list.run("g-prime-constant-term", q, || {
        let c = g_prime.constant_term();
        outcome(c != rational(0, 1), q, vec![("constant_term", c.into())])
    })?;
    list.run("g-prime-smooth", Certification::PrimeFieldProbabilistic, || {
        let gp = g_prime.reduce_mod(&modulus)?;
        if gp.degree() != g_prime.degree() {
            return outcome(false, Certification::PrimeFieldProbabilistic, vec![("degree_drop", true.into())]);
        }
        let dim = singular_locus_dimension(&gp, settings)?;
        let cert = if dim == -1 { sound } else { Certification::PrimeFieldProbabilistic };
        outcome(dim == -1, cert, vec![("singular_dimension", dim.into()), ("modulus", modulus.modulus().into())])
    })?;
    list.run("smooth-at-origin", q, || {
        let s = smooth_at(&f, &o)?;
        outcome(s, q, vec![("smooth", s.into())])
    })?;
    list.run("singular-locus-finite", Certification::PrimeFieldProbabilistic, || {
        let fp = f.reduce_mod(&modulus)?;
        if fp.degree() != f.degree() {
            return outcome(false, Certification::PrimeFieldProbabilistic, vec![("degree_drop", true.into())]);
        }
        let dim = singular_locus_dimension(&fp, settings)?;
        let cert = if dim <= 0 { sound } else { Certification::PrimeFieldProbabilistic };
        outcome(dim <= 0, cert, vec![("singular_dimension", dim.into()), ("modulus", modulus.modulus().into())])
    })?;
    let x = PointedHypersurface::at_origin(f.clone())?;
    list.run("no-line-through-origin", q, || {
        let line = x.contains_line_through(settings)?.contains_line;
        outcome(!line, q, vec![("contains_line", line.into())])
    })?;
    list.run("tangent-hyperplane", q, || {
        let grad: Vec<Rational> = f.jacobian().iter().map(|g| g.evaluate(&o)).collect::<Result<_>>()?;
        let zero = rational(0, 1);
        let pass = grad[..3].iter().all(|c| *c == zero) && grad[3] != zero;
        outcome(pass, q, vec![("normal", Datum::Text(grad.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))])
    })?;
    list.run("slice-equals-surface", q, || {
        let sx = QIdeal::new(4, Rationals, vec![f.clone(), x4.clone()])?;
        let ss = QIdeal::new(4, Rationals, vec![g4.clone(), x4.clone()])?;
        let order = MonomialOrder::grevlex();
        let same = sx.groebner(&order, settings)?.elements() == ss.groebner(&order, settings)?.elements();
        outcome(same, q, vec![("equal", same.into())])
    })?;
    let xi = QIdeal::new(4, Rationals, vec![f.clone()])?;
    list.run("tangent-intersection-dimension", q, || {
        let dim = classify_tangent_intersection(&xi, &o, settings)?;
        outcome(dim == 2, q, vec![("dimension", dim.into())])
    })?;
    let mut certificate = None;
    list.run("seshadri-certificate", q, || {
        let fm4 = surface.pieces[0].extend_arity(1);
        let witness = Ideal::new(4, Rationals, vec![f.clone(), fm4, x4.clone()])?;
        let cert = threefold_bound_certificate(&xi, &o, ThreefoldCertOptions { witness_curve: Some(&witness), assert_no_line: false }, settings)?;
        let target = rational(d as i64, d as i64 - 1);
        let scert = sreport.certificate.as_ref();
        let eps = cert.epsilon();
        let matches_surface = scert.is_some_and(|s| s.witness == cert.witness && s.epsilon() == eps);
        let pass = eps.as_ref() == Some(&target) && matches_surface;
        let data = vec![
            ("kind", Datum::from(cert.kind.as_str())),
            ("lower_bound", cert.lower_bound.clone().into()),
            ("epsilon", eps.map(Datum::from).unwrap_or(Datum::Text("none".into()))),
            ("matches_surface", matches_surface.into()),
        ];
        certificate = Some(cert);
        outcome(pass, q, data)
    })?;
    Ok(ThreefoldAttempt { f, g_prime, list, certificate })
}

/// Builds `f = g + x_4 g'` on a verified surface `g`, resampling `g'`.
pub fn construct_threefold_example(p: &ThreefoldExampleParams, settings: &Settings) -> Result<ThreefoldExample> {
    p.validate()?;
    let surface = construct_surface_example(&p.surface_params(), settings)?;
    let attempts = if surface.report.verified { p.max_attempts } else { 1 };
    let (index, attempt, _) = first_accepted(
        settings.execution,
        attempts,
        |i| threefold_attempt(p, &surface, i, settings),
        |r| r.as_ref().map_or(true, |a| !a.list.failed),
    )
    .expect("at least one attempt");
    let a = attempt?;
    let mut params = p.surface_params().data();
    params.insert("m".into(), Datum::from(p.m));
    let report = ExampleReport {
        family: "threefold",
        params,
        polynomial: a.f.clone(),
        attempts: index + 1,
        verified: !a.list.failed,
        failed_check: a.list.first_failure(),
        checks: a.list.checks,
        certificate: a.certificate,
        surface: Some(Box::new(surface.report)),
    };
    Ok(ThreefoldExample { hypersurface: PointedHypersurface::at_origin(a.f)?, g_prime: a.g_prime, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_guards() {
        let s = Settings::default();
        assert!(matches!(construct_surface_example(&SurfaceExampleParams::new(4, 3, 1), &s), Err(Error::InvalidParameter(_))));
        assert!(matches!(construct_threefold_example(&ThreefoldExampleParams::new(3, 1), &s), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn attempt_seeds_differ() {
        assert_ne!(attempt_seed(1, 0), attempt_seed(1, 1));
        assert_ne!(attempt_seed(1, 0), attempt_seed(2, 0));
        assert_eq!(attempt_seed(7, 3), attempt_seed(7, 3));
    }

    #[test]
    fn small_surface_is_verified() {
        let ex = construct_surface_example(&SurfaceExampleParams::new(4, 2, 1), &Settings::default()).unwrap();
        let r = &ex.report;
        assert!(r.verified, "{:?}", r.checks);
        assert_eq!(r.epsilon(), Some(rational(4, 3)));
        let w = r.certificate.as_ref().unwrap().witness.unwrap();
        assert_eq!((w.degree, w.multiplicity), (8, 6));
    }
}
