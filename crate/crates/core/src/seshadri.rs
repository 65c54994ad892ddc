//! Seshadri constant certificates: lemma lower bounds paired with exhibited
//! curves, plus the candidate values allowed by the bounds.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{rational, Field, Rational};
use crate::ideal::Ideal;
use crate::irreducible::absolutely_irreducible_factor_count;
use crate::local::{curve_multiplicity_at, ideal_contains_line_through_origin, PointedHypersurface};
use crate::par::Execution;
use crate::poly::Polynomial;
use crate::settings::Settings;

/// `deg C / mult_x C` for an exhibited curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeshadriRatio {
    pub degree: u64,
    pub multiplicity: u64,
}

impl SeshadriRatio {
    pub fn new(degree: u64, multiplicity: u64) -> Result<Self> {
        if degree == 0 || multiplicity == 0 {
            return Err(Error::InvalidParameter("curve degree and multiplicity must be positive".into()));
        }
        Ok(SeshadriRatio { degree, multiplicity })
    }

    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.degree), BigInt::from(self.multiplicity))
    }
}

impl fmt::Display for SeshadriRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.degree, self.multiplicity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// A line through the point: ε = 1.
    LinePresent,
    /// No line through the point: ε > 1.
    NoLineGt1,
    /// ε ≥ d/(d-1).
    DOverDMinus1,
    /// The tangent hyperplane section is finite at the point: ε ≥ 2.
    TangentDim0Ge2,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::LinePresent => "LINE_PRESENT",
            BoundKind::NoLineGt1 => "NO_LINE_GT1",
            BoundKind::DOverDMinus1 => "D_OVER_D_MINUS_1",
            BoundKind::TangentDim0Ge2 => "TANGENT_DIM0_GE2",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CertificateParams {
    pub d: u32,
    pub m: Option<u32>,
    pub n: u32,
}

/// A lower bound on ε(O_X(1), x) from a lemma, optionally paired with an
/// exhibited curve whose ratio bounds ε from above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    /// Name of the lemma supplying the lower bound.
    pub lemma: &'static str,
    pub lower_bound: Rational,
    /// The bound is strict (`ε > lower_bound`).
    pub strict: bool,
    pub witness: Option<SeshadriRatio>,
    pub params: CertificateParams,
    pub warnings: Vec<String>,
}

impl BoundCertificate {
    /// ε, when the lower bound is attained by the witness.
    pub fn epsilon(&self) -> Option<Rational> {
        let w = self.witness?.value();
        (!self.strict && w == self.lower_bound).then_some(w)
    }

    pub fn is_pinned(&self) -> bool {
        self.epsilon().is_some()
    }

    fn line_present(params: CertificateParams) -> Self {
        BoundCertificate {
            kind: BoundKind::LinePresent,
            lemma: "degree-at-least-multiplicity",
            lower_bound: rational(1, 1),
            strict: false,
            witness: Some(SeshadriRatio { degree: 1, multiplicity: 1 }),
            params,
            warnings: vec![],
        }
    }
}

/// Degree and multiplicity at `point` of the affine curve `V(C)`.
pub fn seshadri_ratio<K: Field>(curve: &Ideal<K>, point: &[K], settings: &Settings) -> Result<SeshadriRatio> {
    let h = curve.affine_hilbert_data(settings)?;
    if h.dimension != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: h.dimension });
    }
    let mult = curve_multiplicity_at(curve, point, settings)?;
    SeshadriRatio::new(h.degree, mult)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SurfaceCertOptions {
    /// Compute the slice curve `V(f, f_m)` and offer it as a witness.
    pub slice: bool,
    /// Seed for the random plane section used by the reducibility warning.
    pub seed: u64,
}

/// Number of absolutely irreducible factors of a random plane section.
fn plane_section_factor_count<K: Field>(f: &Polynomial<K>, seed: u64, exec: Execution) -> Result<usize> {
    let desc = f.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = || K::from_i64(&desc, rng.gen_range(-10..=10));
    let x = Polynomial::var(2, desc.clone(), 0);
    let y = Polynomial::var(2, desc.clone(), 1);
    let z = &(&x.scale(&c()) + &y.scale(&c())) + &Polynomial::constant(2, c());
    absolutely_irreducible_factor_count(&f.compose(&[x, y, z])?, exec)
}

/// Bound for a surface in P^3 at a point, in an affine chart with 3 variables.
pub fn surface_bound_certificate<K: Field>(x: &PointedHypersurface<K>, options: SurfaceCertOptions, settings: &Settings) -> Result<BoundCertificate> {
    if x.arity() != 3 {
        return Err(Error::Precondition(format!("surface chart needs 3 variables, found {}", x.arity())));
    }
    let d = x.degree();
    if d < 3 {
        return Err(Error::Precondition(format!("surface degree must be at least 3, found {d}")));
    }
    let m = x.multiplicity_at();
    let params = CertificateParams { d, m: Some(m), n: 2 };
    let mut warnings = vec![];
    match plane_section_factor_count(x.polynomial(), options.seed, settings.execution) {
        Ok(1) => {}
        Ok(k) => warnings.push(format!("random plane section has {k} absolutely irreducible factors; surface may be reducible")),
        Err(Error::NotSquarefree) => warnings.push("random plane section is not squarefree; surface may be non-reduced".into()),
        Err(e) => return Err(e),
    }
    if x.contains_line_through(settings)?.contains_line {
        let mut cert = BoundCertificate::line_present(params);
        cert.warnings = warnings;
        return Ok(cert);
    }
    let mut witness = None;
    if options.slice {
        let local = x.local_polynomial();
        let curve = Ideal::new(3, local.field().clone(), vec![local.clone(), x.tangent_cone_at().clone()])?;
        let origin = vec![K::zero(local.field()); 3];
        let ratio = seshadri_ratio(&curve, &origin, settings)?;
        if ratio.value() < rational(m as i64 + 1, m as i64) {
            witness = Some(ratio);
        }
    }
    Ok(BoundCertificate {
        kind: BoundKind::DOverDMinus1,
        lemma: "surface-multiplicity-bound",
        lower_bound: rational(d as i64, d as i64 - 1),
        strict: false,
        witness,
        params,
        warnings,
    })
}

/// Dimension of `X ∩ T_pX` at a smooth point, clamped to `0..=2`.
pub fn classify_tangent_intersection<K: Field>(x: &Ideal<K>, point: &[K], settings: &Settings) -> Result<u32> {
    Ok(tangent_slice(x, point, settings)?.1)
}

/// The ideal `X + (tangent linear forms)` and its clamped dimension.
fn tangent_slice<K: Field>(x: &Ideal<K>, point: &[K], settings: &Settings) -> Result<(Ideal<K>, u32)> {
    if !x.vanishes_at(point)? {
        return Err(Error::PointNotOnHypersurface);
    }
    let n = x.arity();
    let desc = x.field().clone();
    let mut rows: Vec<Vec<K>> = vec![];
    let mut linear = vec![];
    for g in x.generators() {
        let grad = g.jacobian().iter().map(|p| p.evaluate(point)).collect::<Result<Vec<K>>>()?;
        if grad.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut lin = Polynomial::zero(n, desc.clone());
        for (i, c) in grad.iter().enumerate() {
            let xi = &Polynomial::var(n, desc.clone(), i) - &Polynomial::constant(n, point[i].clone());
            lin = &lin + &xi.scale(c);
        }
        linear.push(lin);
        rows.push(grad);
    }
    let rank = crate::linalg::rank(rows, settings.execution) as i64;
    let dim = x.affine_hilbert_data(settings)?.dimension;
    if rank != n as i64 - dim {
        return Err(Error::SingularPoint);
    }
    let slice = x.with_generators(&linear)?;
    let sdim = slice.affine_hilbert_data(settings)?.dimension;
    Ok((slice, sdim.clamp(0, 2) as u32))
}

#[derive(Debug, Clone)]
pub struct ThreefoldCertOptions<'a, K: Field> {
    /// Curve inside `X` through the point, used as an upper-bound witness.
    pub witness_curve: Option<&'a Ideal<K>>,
    /// Caller asserts there is no line through the point (needed unless `X` is a hypersurface).
    pub assert_no_line: bool,
}

impl<K: Field> Default for ThreefoldCertOptions<'_, K> {
    fn default() -> Self {
        ThreefoldCertOptions { witness_curve: None, assert_no_line: false }
    }
}

/// Bound for a threefold at a smooth point.
pub fn threefold_bound_certificate<K: Field>(x: &Ideal<K>, point: &[K], options: ThreefoldCertOptions<'_, K>, settings: &Settings) -> Result<BoundCertificate> {
    let h = x.affine_hilbert_data(settings)?;
    if h.dimension != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: h.dimension });
    }
    let d = h.degree as u32;
    let mut params = CertificateParams { d, m: None, n: 3 };
    if let [f] = x.generators() {
        let px = PointedHypersurface::new(f.clone(), point.to_vec())?;
        if px.contains_line_through(settings)?.contains_line {
            return Ok(BoundCertificate::line_present(params));
        }
    } else if !options.assert_no_line {
        return Err(Error::Precondition("no-line condition must be asserted for non-hypersurface threefolds".into()));
    }
    let (slice, dim) = tangent_slice(x, point, settings)?;
    if x.generators().len() == 1 && dim == 2 {
        // multiplicity of the tangent hyperplane section at the point
        let cone = slice.translate(point)?.tangent_cone_ideal(settings)?;
        params.m = Some(cone.hilbert_data(settings)?.degree as u32);
    }
    let witness = match options.witness_curve {
        None => None,
        Some(c) => {
            for g in x.generators() {
                if !c.contains(g, settings)? {
                    return Err(Error::Precondition("witness curve does not lie on the threefold".into()));
                }
            }
            Some(seshadri_ratio(c, point, settings)?)
        }
    };
    let (kind, lemma, lower_bound) = if dim == 0 {
        (BoundKind::TangentDim0Ge2, "threefold-finite-tangent-section", rational(2, 1))
    } else {
        (BoundKind::DOverDMinus1, "threefold-tangent-section", rational(d as i64, d as i64 - 1))
    };
    Ok(BoundCertificate { kind, lemma, lower_bound, strict: false, witness, params, warnings: vec![] })
}

/// The weakest bound for a hypersurface at a point: 1 with a line, above 1 without.
pub fn hypersurface_bound_certificate<K: Field>(x: &PointedHypersurface<K>, settings: &Settings) -> Result<BoundCertificate> {
    let params = CertificateParams { d: x.degree(), m: Some(x.multiplicity_at()), n: x.arity() as u32 - 1 };
    if x.contains_line_through(settings)?.contains_line {
        return Ok(BoundCertificate::line_present(params));
    }
    Ok(BoundCertificate {
        kind: BoundKind::NoLineGt1,
        lemma: "degree-at-least-multiplicity",
        lower_bound: rational(1, 1),
        strict: true,
        witness: None,
        params,
        warnings: vec![],
    })
}

/// An admissible pair `(a, b)` with value `a/b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateValue {
    pub a: u64,
    pub b: u64,
}

impl CandidateValue {
    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.a), BigInt::from(self.b))
    }
}

fn sort_candidates(mut v: Vec<CandidateValue>) -> Vec<CandidateValue> {
    v.sort_by(|x, y| x.value().cmp(&y.value()).then(x.a.cmp(&y.a)));
    v
}

/// Pairs with `3 <= a <= m d` and `m a / (m + 1) < b <= a (d - 1) / d`.
pub fn enumerate_surface_candidates(d: u64, m: u64) -> Result<Vec<CandidateValue>> {
    if d < 3 || m < 1 || m > d - 1 {
        return Err(Error::InvalidParameter(format!("need d >= 3 and 1 <= m <= d - 1, got d = {d}, m = {m}")));
    }
    let mut out = vec![];
    for a in 3..=m * d {
        for b in 1..=a {
            if b * (m + 1) > m * a && b * d <= a * (d - 1) {
                out.push(CandidateValue { a, b });
            }
        }
    }
    Ok(sort_candidates(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThreefoldCase {
    B,
    C,
}

/// Case B: `3 <= a <= d`, `a/2 < b < a`.
/// Case C: `3 <= a <= (d - 2) d`, `(d - 2) a / (d - 1) < b <= a (d - 1) / d`.
pub fn enumerate_threefold_candidates(d: u64, case: ThreefoldCase) -> Result<Vec<CandidateValue>> {
    if d < 4 {
        return Err(Error::InvalidParameter(format!("need d >= 4, got {d}")));
    }
    let mut out = vec![];
    match case {
        ThreefoldCase::B => {
            for a in 3..=d {
                for b in 1..a {
                    if 2 * b > a {
                        out.push(CandidateValue { a, b });
                    }
                }
            }
        }
        ThreefoldCase::C => {
            for a in 3..=(d - 2) * d {
                for b in 1..=a {
                    if b * (d - 1) > (d - 2) * a && b * d <= a * (d - 1) {
                        out.push(CandidateValue { a, b });
                    }
                }
            }
        }
    }
    Ok(sort_candidates(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVerdict {
    pub curve_degree: u64,
    pub base_degree: u64,
    pub multiplicity: u64,
    /// `(deg C - mult_p C) / deg B` when it divides evenly.
    pub quotient: Option<u64>,
    pub pass: bool,
}

/// For a curve `C` on the cone `V(T)` with vertex `p`: `deg C - mult_p C` is a
/// positive multiple of `deg B`, hence `deg C - deg B >= mult_p C`.
pub fn cone_lemma_check<K: Field>(curve: &Ideal<K>, cone: &Polynomial<K>, point: &[K], settings: &Settings) -> Result<ConeVerdict> {
    let local_cone = cone.translate(point)?;
    if local_cone.is_zero() || !local_cone.is_homogeneous() || local_cone.is_constant() {
        return Err(Error::Precondition("cone equation must be a nonconstant form centred at the point".into()));
    }
    if !curve.contains(cone, settings)? {
        return Err(Error::Precondition("curve does not lie on the cone".into()));
    }
    let local = curve.translate(point)?;
    if ideal_contains_line_through_origin(&local, settings)? {
        return Err(Error::Precondition("curve contains a line through the point".into()));
    }
    let ratio = seshadri_ratio(curve, point, settings)?;
    let base_degree = local_cone.degree().expect("nonzero") as u64;
    let excess = ratio.degree as i64 - ratio.multiplicity as i64;
    let quotient = (excess > 0 && excess as u64 % base_degree == 0).then(|| excess as u64 / base_degree);
    let pass = quotient.is_some() && ratio.degree >= base_degree + ratio.multiplicity;
    Ok(ConeVerdict { curve_degree: ratio.degree, base_degree, multiplicity: ratio.multiplicity, quotient, pass })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeMultVerdict {
    pub d: u32,
    pub m: u32,
    pub pass: bool,
}

/// `deg X - 1 >= mult_x X` when no line passes through the point.
pub fn degree_mult_bound_check<K: Field>(x: &PointedHypersurface<K>, settings: &Settings) -> Result<DegreeMultVerdict> {
    if x.contains_line_through(settings)?.contains_line {
        return Err(Error::LinePresent);
    }
    let (d, m) = (x.degree(), x.multiplicity_at());
    Ok(DegreeMultVerdict { d, m, pass: d >= m + 1 })
}
