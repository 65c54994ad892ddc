#![allow(dead_code)]

use rand::Rng;
use seshadri_core::field::{rational_int, Rational, Rationals};
use seshadri_core::monomial::Monomial;
use seshadri_core::poly::{monomials_of_degree, QPoly};

pub fn q(terms: &[(i64, &[u16])]) -> QPoly {
    QPoly::from_i64_terms(terms[0].1.len(), terms)
}

/// Form of degree `degree` with each monomial kept with probability `density`.
pub fn sparse_form<R: Rng>(rng: &mut R, degree: u32, arity: usize, density: f64, bound: i64) -> QPoly {
    let mut terms: Vec<(Monomial, Rational)> = vec![];
    for m in monomials_of_degree(arity, degree) {
        if rng.gen_bool(density) {
            terms.push((m, rational_int(rng.gen_range(-bound..=bound))));
        }
    }
    QPoly::from_terms(arity, Rationals, terms)
}

/// Nonzero sparse form.
pub fn nonzero_form<R: Rng>(rng: &mut R, degree: u32, arity: usize, density: f64, bound: i64) -> QPoly {
    loop {
        let f = sparse_form(rng, degree, arity, density, bound);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Polynomial with pieces in degrees `lo..=hi`.
pub fn sparse_poly<R: Rng>(rng: &mut R, lo: u32, hi: u32, arity: usize, density: f64, bound: i64) -> QPoly {
    let mut acc = QPoly::zero(arity, Rationals);
    for k in lo..=hi {
        acc = &acc + &sparse_form(rng, k, arity, density, bound);
    }
    acc
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seshadri_core::ideal::QIdeal;
use seshadri_core::linalg::rank;
use seshadri_core::local::{curve_multiplicity_at, PointedHypersurface};
use seshadri_core::order::MonomialOrder;
use seshadri_core::par::Execution;
use seshadri_core::poly::random_form_with;
use seshadri_core::seshadri::{cone_lemma_check, degree_mult_bound_check, hypersurface_bound_certificate, surface_bound_certificate, BoundCertificate, SurfaceCertOptions};
use seshadri_core::Error;
use seshadri_core::settings::Settings;

/// Outcome of a randomized sweep.
#[derive(Debug, Default)]
pub struct Tally {
    pub trials: usize,
    pub violations: usize,
    pub skipped: usize,
    pub notes: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, note: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.violations += 1;
            if self.notes.len() < 5 {
                self.notes.push(note());
            }
        }
    }

    pub fn clean(&self, min_trials: usize) -> bool {
        self.violations == 0 && self.trials >= min_trials
    }
}

impl std::fmt::Display for Tally {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} trials, {} violations, {} skipped", self.trials, self.violations, self.skipped)?;
        for n in &self.notes {
            write!(f, "; {n}")?;
        }
        Ok(())
    }
}

pub fn settings() -> Settings {
    Settings::default()
}

fn vector_in(p: &QPoly, basis: &[Monomial]) -> Vec<Rational> {
    basis.iter().map(|m| p.coefficient(m)).collect()
}

/// Rows spanning the degree-`t` piece of the homogeneous ideal generated by `gens`.
fn degree_piece(gens: &[QPoly], n: usize, t: u32) -> Vec<Vec<Rational>> {
    let basis = monomials_of_degree(n, t);
    let mut rows = vec![];
    for g in gens {
        let dg = g.degree().unwrap();
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(n, t - dg) {
            rows.push(vector_in(&g.mul_monomial(&m), &basis));
        }
    }
    rows
}

/// Membership of a homogeneous `p` by linear algebra in its own degree.
pub fn brute_member(gens: &[QPoly], p: &QPoly, n: usize) -> bool {
    if p.is_zero() {
        return true;
    }
    let t = p.degree().unwrap();
    let rows = degree_piece(gens, n, t);
    let r = rank(rows.clone(), Execution::Sequential);
    let mut with = rows;
    with.push(vector_in(p, &monomials_of_degree(n, t)));
    rank(with, Execution::Sequential) == r
}

/// `dim_k (S/I)_t` by linear algebra.
pub fn brute_hilbert_function(gens: &[QPoly], n: usize, t: u32) -> i64 {
    binomial(t as i64 + n as i64 - 1, n as i64 - 1) - rank(degree_piece(gens, n, t), Execution::Sequential) as i64
}

fn random_homogeneous_ideal(rng: &mut ChaCha8Rng) -> (usize, Vec<QPoly>) {
    let n = rng.gen_range(2..=3);
    let k = rng.gen_range(1..=3);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            nonzero_form(rng, d, n, 0.5, 3)
        })
        .collect();
    (n, gens)
}

/// Groebner membership against linear algebra on random homogeneous ideals.
pub fn membership_sweep(seed: u64, ideals: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..ideals {
        let (n, gens) = random_homogeneous_ideal(&mut rng);
        let ideal = QIdeal::new(n, Rationals, gens.clone()).unwrap();
        for j in 0..6 {
            let t = rng.gen_range(1..=6u32);
            let mut p = QPoly::zero(n, Rationals);
            if j % 2 == 0 {
                for g in &gens {
                    let dg = g.degree().unwrap();
                    if dg <= t {
                        p = &p + &(&sparse_form(&mut rng, t - dg, n, 0.6, 3) * g);
                    }
                }
            }
            if j % 3 != 0 || p.is_zero() {
                p = &p + &sparse_form(&mut rng, t, n, 0.3, 2);
            }
            let engine = ideal.contains(&p, &settings()).unwrap();
            let oracle = brute_member(&gens, &p, n);
            tally.record(engine == oracle, || format!("membership of {p} in {gens:?}: engine {engine}, oracle {oracle}"));
        }
    }
    tally
}

/// Coefficients of `N(t) / (1 - t)^n` up to `t^top`.
pub fn series_from_numerator(numerator: &[i64], n: usize, top: u32) -> Vec<i64> {
    (0..=top as i64)
        .map(|t| numerator.iter().enumerate().map(|(j, c)| c * binomial(t - j as i64 + n as i64 - 1, n as i64 - 1)).sum())
        .collect()
}

/// Dimension and degree read off standard-monomial counts of a monomial ideal far out.
pub fn counted_dimension_degree(leading: &[Monomial], n: usize) -> (i64, u64) {
    let top = 40u32;
    let count = |t: u32| monomials_of_degree(n, t).iter().filter(|m| !leading.iter().any(|l| l.divides(m))).count() as i64;
    let values: Vec<i64> = (top - n as u32..=top).map(count).collect();
    if values.iter().all(|&v| v == 0) {
        return (-1, 0);
    }
    // finite differences at the top end
    let mut diffs = values;
    for k in 0..n {
        if diffs.windows(2).all(|w| w[0] == w[1]) {
            return (k as i64, *diffs.last().unwrap() as u64);
        }
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    unreachable!("Hilbert function grows at most like t^(n-1)")
}

/// Hilbert data against linear algebra and standard-monomial counts.
pub fn hilbert_sweep(seed: u64, ideals: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..ideals {
        let (n, gens) = random_homogeneous_ideal(&mut rng);
        let ideal = QIdeal::new(n, Rationals, gens.clone()).unwrap();
        let h = ideal.hilbert_data(&settings()).unwrap();
        let series = series_from_numerator(&h.numerator, n, 7);
        let brute: Vec<i64> = (0..=7).map(|t| brute_hilbert_function(&gens, n, t)).collect();
        tally.record(series == brute, || format!("Hilbert function of {gens:?}: {series:?} vs {brute:?}"));
        let leading = ideal.groebner(&MonomialOrder::grevlex(), &settings()).unwrap().leading_monomials();
        let counted = counted_dimension_degree(&leading, n);
        tally.record(counted == (h.dimension, h.degree), || format!("dimension/degree of {gens:?}: {counted:?} vs {:?}", (h.dimension, h.degree)));
    }
    tally
}

/// Tangent cone of a principal ideal against the lowest graded piece.
pub fn tangent_cone_sweep(seed: u64, germs: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    while tally.trials < germs {
        let n = rng.gen_range(2..=3);
        let lo = rng.gen_range(1..=3);
        let f = sparse_poly(&mut rng, lo, 4, n, 0.4, 4);
        if f.is_zero() {
            continue;
        }
        let lowest = f.homogeneous_component(f.min_degree().unwrap());
        let cone = QIdeal::new(n, Rationals, vec![f.clone()]).unwrap().tangent_cone_ideal(&settings()).unwrap();
        let expected = QIdeal::new(n, Rationals, vec![lowest]).unwrap();
        let o = MonomialOrder::grevlex();
        let same = cone.groebner(&o, &settings()).unwrap().elements() == expected.groebner(&o, &settings()).unwrap().elements();
        tally.record(same, || format!("tangent cone of {f}"));
    }
    tally
}

/// Degree of complete intersections of random forms against the product of degrees.
pub fn bezout_sweep(seed: u64, cases: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for i in 0..cases {
        let (n, degs): (usize, Vec<u32>) = match i % 3 {
            0 => (3, vec![rng.gen_range(1..=4), rng.gen_range(1..=4)]),
            1 => (4, vec![rng.gen_range(1..=4), rng.gen_range(1..=3)]),
            _ => (4, vec![rng.gen_range(1..=2), rng.gen_range(1..=2), rng.gen_range(1..=3)]),
        };
        let gens: Vec<QPoly> = degs.iter().map(|&d| random_form_with(&mut rng, &Rationals, d, n, 5)).collect();
        let h = QIdeal::new(n, Rationals, gens).unwrap().hilbert_data(&settings()).unwrap();
        let expected_dim = (n - 1 - degs.len()) as i64;
        if h.dimension != expected_dim {
            // not a complete intersection
            tally.skipped += 1;
            continue;
        }
        let product: u64 = degs.iter().map(|&d| d as u64).product();
        tally.record(h.degree == product, || format!("degrees {degs:?} in {n} variables: degree {}", h.degree));
    }
    tally
}

/// Random pointed hypersurface through the origin with multiplicity exactly `m`.
fn random_germ(rng: &mut ChaCha8Rng, n_vars: usize, m: u32, d: u32, keep: f64, density: f64) -> QPoly {
    let mut f = nonzero_form(rng, m, n_vars, density, 5);
    for k in m + 1..d {
        if rng.gen_bool(keep) {
            f = &f + &sparse_form(rng, k, n_vars, density, 5);
        }
    }
    &f + &nonzero_form(rng, d, n_vars, density, 5)
}

/// Hypersurfaces without lines through the point satisfy `m <= d - n` and `d - 1 >= m`.
/// Only line-free samples count as trials.
pub fn no_line_lemma_sweep(seed: u64, trials: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    while tally.trials < trials {
        let n_vars = if rng.gen_bool(0.7) { 3 } else { 4 };
        let n = n_vars as u32 - 1;
        let d = rng.gen_range(n + 1..=if n_vars == 3 { 5 } else { 4 });
        // mostly multiplicities where the lemma leaves room for line-free examples
        let m = if rng.gen_bool(0.8) { rng.gen_range(1..=d - n) } else { rng.gen_range(1..=d) };
        let density = rng.gen_range(0.3..=1.0);
        let f = random_germ(&mut rng, n_vars, m, d, 0.8, density);
        let x = PointedHypersurface::at_origin(f.clone()).unwrap();
        if x.contains_line_through(&settings()).unwrap().contains_line {
            tally.skipped += 1;
            continue;
        }
        let v = x.check_mult_degree_bound(&settings()).unwrap();
        let w = degree_mult_bound_check(&x, &settings()).unwrap();
        let ok = v.pass && w.pass && x.multiplicity_at() + n <= d && d >= x.multiplicity_at() + 1;
        tally.record(ok, || format!("{f}: m = {}, d = {d}, n = {n}", x.multiplicity_at()));
    }
    tally
}

/// Surfaces `f_m + f_{d-1} + f_d` sampled as the example factory does.
fn factory_surface(rng: &mut ChaCha8Rng) -> (u32, u32, QPoly, QPoly) {
    let (d, m) = [(4, 2), (4, 2), (4, 2), (5, 2), (5, 3)][rng.gen_range(0..5)];
    let fm = random_form_with(rng, &Rationals, m, 3, 10);
    let f = &(&fm + &random_form_with(rng, &Rationals, d - 1, 3, 10)) + &random_form_with(rng, &Rationals, d, 3, 10);
    (d, m, f, fm)
}

/// Slices `V(f, f_m)` of factory surfaces satisfy the on-cone lemma.
pub fn slice_lemma_sweep(seed: u64, trials: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let origin = vec![rational_int(0); 3];
    while tally.trials < trials {
        let (d, m, f, fm) = factory_surface(&mut rng);
        if PointedHypersurface::at_origin(f.clone()).unwrap().contains_line_through(&settings()).unwrap().contains_line {
            tally.skipped += 1;
            continue;
        }
        let curve = QIdeal::new(3, Rationals, vec![f.clone(), fm.clone()]).unwrap();
        let v = cone_lemma_check(&curve, &fm, &origin, &settings()).unwrap();
        let excess = v.curve_degree as i64 - v.multiplicity as i64;
        let ok = v.pass
            && excess > 0
            && excess % v.base_degree as i64 == 0
            && v.curve_degree >= v.base_degree + v.multiplicity
            && v.base_degree == m as u64
            && v.curve_degree == (d * m) as u64;
        tally.record(ok, || format!("(d, m) = ({d}, {m}): {v:?}"));
    }
    tally
}

/// Curves `V(f, h)` through the point that share no component with the slice
/// satisfy `m deg C >= (m + 1) mult C`.
pub fn non_slice_curve_sweep(seed: u64, trials: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let origin = vec![rational_int(0); 3];
    while tally.trials < trials {
        let (_, m, f, fm) = factory_surface(&mut rng);
        let hi = rng.gen_range(1..=2);
        let h = sparse_poly(&mut rng, 1, hi, 3, 0.6, 4);
        if h.is_zero() {
            continue;
        }
        let s = settings();
        let curve = QIdeal::new(3, Rationals, vec![f.clone(), h.clone()]).unwrap();
        let cd = curve.affine_hilbert_data(&s).unwrap();
        let meets = curve.with_generators(&[fm.clone()]).unwrap().affine_hilbert_data(&s).unwrap();
        if cd.dimension != 1 || meets.dimension > 0 {
            tally.skipped += 1;
            continue;
        }
        let mult = curve_multiplicity_at(&curve, &origin, &s).unwrap();
        let m = m as u64;
        tally.record(m * cd.degree >= (m + 1) * mult, || format!("h = {h}: deg {} mult {mult} m {m}", cd.degree));
    }
    tally
}

/// Why `c` breaks the pinning rule, if it does.
pub fn honesty_violation(c: &BoundCertificate) -> Option<&'static str> {
    if let Some(w) = c.witness {
        // a witness is an upper bound, never below the lower bound
        if w.value() < c.lower_bound {
            return Some("witness below lower bound");
        }
    }
    match c.epsilon() {
        Some(eps) => match c.witness {
            None => Some("pinned without witness"),
            Some(_) if c.strict => Some("pinned with a strict bound"),
            Some(w) if w.value() != c.lower_bound || eps != c.lower_bound => Some("pinned value differs from bound"),
            Some(_) => None,
        },
        None if !c.strict && c.witness.is_some_and(|w| w.value() == c.lower_bound) => Some("matching witness left unpinned"),
        None => None,
    }
}

/// Certificates on random pointed surfaces, with and without the slice witness.
pub fn honesty_sweep(seed: u64, trials: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    let mut i = 0u64;
    while tally.trials < trials {
        i += 1;
        let d = rng.gen_range(3..=4);
        let m = rng.gen_range(1..=d - 1);
        let f = random_germ(&mut rng, 3, m, d, 0.7, 0.7);
        let x = PointedHypersurface::at_origin(f.clone()).unwrap();
        if x.degree() < 3 {
            tally.skipped += 1;
            continue;
        }
        let c = hypersurface_bound_certificate(&x, &settings()).unwrap();
        let cert = |c: &BoundCertificate| format!("{f}: {:?}", honesty_violation(c));
        tally.record(honesty_violation(&c).is_none(), || cert(&c));
        match surface_bound_certificate(&x, SurfaceCertOptions { slice: i % 2 == 0, seed: i }, &settings()) {
            Ok(c) => tally.record(honesty_violation(&c).is_none(), || cert(&c)),
            // the slice may fail to be a curve through the point; nothing is claimed
            Err(Error::DimensionMismatch { .. } | Error::PointNotOnHypersurface) => tally.skipped += 1,
            Err(e) => tally.record(false, || format!("{f}: {e}")),
        }
    }
    tally
}
