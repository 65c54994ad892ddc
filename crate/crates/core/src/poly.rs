//! Sparse multivariate polynomials in canonical graded-reverse-lex form, plus
//! the point-local decompositions used throughout the crate.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Fp, PrimeField, Rational, Rationals};
use crate::monomial::Monomial;
use crate::univariate::UniPoly;

/// A polynomial in `arity` variables. Terms are sorted strictly descending in
/// grevlex and carry nonzero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<K: Field> {
    arity: usize,
    field: K::Desc,
    terms: Vec<(Monomial, K)>,
}

pub type QPoly = Polynomial<Rational>;
pub type FpPoly = Polynomial<Fp>;

impl<K: Field> Polynomial<K> {
    pub fn zero(arity: usize, field: K::Desc) -> Self {
        Polynomial { arity, field, terms: vec![] }
    }

    pub fn constant(arity: usize, c: K) -> Self {
        let field = c.descriptor();
        Self::from_terms(arity, field, vec![(Monomial::one(arity), c)])
    }

    pub fn one(arity: usize, field: K::Desc) -> Self {
        let c = K::one(&field);
        Self::constant(arity, c)
    }

    pub fn var(arity: usize, field: K::Desc, index: usize) -> Self {
        assert!(index < arity, "variable index out of range");
        let c = K::one(&field);
        Polynomial { arity, field, terms: vec![(Monomial::var(arity, index), c)] }
    }

    pub fn monomial(mono: Monomial, c: K) -> Self {
        let field = c.descriptor();
        Self::from_terms(mono.arity(), field, vec![(mono, c)])
    }

    /// Builds the canonical form: merges duplicates, drops zeros, sorts.
    pub fn from_terms(arity: usize, field: K::Desc, terms: Vec<(Monomial, K)>) -> Self {
        let mut map: HashMap<Monomial, K> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity");
            match map.get_mut(&m) {
                Some(acc) => acc.add_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(arity, field, map)
    }

    fn from_map(arity: usize, field: K::Desc, map: HashMap<Monomial, K>) -> Self {
        let mut terms: Vec<(Monomial, K)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.grevlex_cmp(&a.0));
        Polynomial { arity, field, terms }
    }

    /// Trusts the caller: terms sorted descending grevlex, no zeros, no duplicates.
    pub(crate) fn from_sorted_terms(arity: usize, field: K::Desc, terms: Vec<(Monomial, K)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grevlex_cmp(&w[1].0).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { arity, field, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> &K::Desc {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.degree(), self.min_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        self.terms
            .binary_search_by(|(t, _)| m.grevlex_cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| K::zero(&self.field))
    }

    pub fn constant_term(&self) -> K {
        self.coefficient(&Monomial::one(self.arity))
    }

    /// Variables with a nonzero exponent somewhere in the polynomial.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.arity).filter(|&v| self.degree_in(v) > 0).collect()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                self.terms[i].0.grevlex_cmp(&other.terms[j].0)
            };
            match take {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { c.neg() } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        self.terms[i].1.sub(&other.terms[j].1)
                    } else {
                        self.terms[i].1.add(&other.terms[j].1)
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { arity: self.arity, field: self.field.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.arity, self.field.clone());
        }
        let mut map: HashMap<Monomial, K> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.get_mut(&m) {
                    Some(acc) => acc.add_assign(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(self.arity, self.field.clone(), map)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity, self.field.clone());
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect();
        Polynomial { arity: self.arity, field: self.field.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect();
        Polynomial { arity: self.arity, field: self.field.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity, self.field.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient (grevlex); zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first().and_then(|(_, c)| c.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    fn check_point(&self, point: &[K]) -> Result<()> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        if point.iter().any(|c| c.descriptor() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[K]) -> Result<K> {
        self.check_point(point)?;
        let max_e: Vec<u16> = (0..self.arity).map(|v| self.degree_in(v)).collect();
        let powers: Vec<Vec<K>> = point
            .iter()
            .zip(&max_e)
            .map(|(x, &e)| {
                let mut p = vec![K::one(&self.field)];
                for k in 1..=e as usize {
                    let next = p[k - 1].mul(x);
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = K::zero(&self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[v][e as usize]);
                }
            }
            acc.add_assign(&t);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`. All images share one arity,
    /// which becomes the arity of the result.
    pub fn compose(&self, images: &[Polynomial<K>]) -> Result<Self> {
        if images.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: images.len() });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let target = first.arity;
        for img in images {
            if img.arity != target {
                return Err(Error::ArityMismatch { expected: target, found: img.arity });
            }
            if img.field != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        let mut cache: Vec<Vec<Polynomial<K>>> = images
            .iter()
            .map(|img| vec![Polynomial::one(target, self.field.clone()), img.clone()])
            .collect();
        let mut acc = Polynomial::zero(target, self.field.clone());
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[v].len() <= e as usize {
                    let next = cache[v].last().expect("nonempty").mul_unchecked(&images[v]);
                    cache[v].push(next);
                }
                t = t.mul_unchecked(&cache[v][e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// `f(X + p)`: moves the point `p` to the origin.
    pub fn translate(&self, point: &[K]) -> Result<Self> {
        self.check_point(point)?;
        if point.iter().all(|c| c.is_zero()) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial<K>> = point
            .iter()
            .enumerate()
            .map(|(i, c)| Polynomial::var(self.arity, self.field.clone(), i).merge(&Polynomial::constant(self.arity, c.clone()), false))
            .collect();
        self.compose(&images)
    }

    pub fn homogeneous_component(&self, degree: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == degree).cloned().collect();
        Polynomial { arity: self.arity, field: self.field.clone(), terms }
    }

    /// Homogeneous components of the polynomial itself (no translation).
    pub fn graded_pieces(&self) -> Result<GradedDecomposition<K>> {
        GradedDecomposition::build(self, vec![K::zero(&self.field); self.arity], self)
    }

    /// Multiplicity at the origin of `V(f)`: the least degree present.
    pub fn order_at_origin(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.constant_term().is_zero() {
            return Err(Error::PointNotOnHypersurface);
        }
        Ok(self.min_degree().expect("nonzero"))
    }

    /// `t -> f(a_1 t, ..., a_n t)`.
    pub fn restrict_to_line(&self, direction: &[K]) -> Result<UniPoly<K>> {
        self.check_point(direction)?;
        if direction.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroDirection);
        }
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![K::zero(&self.field); deg + 1];
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&direction[v].pow(e as u64));
                }
            }
            coeffs[m.degree() as usize].add_assign(&t);
        }
        Ok(UniPoly::new(self.field.clone(), coeffs))
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            let coeff = c.mul(&K::from_i64(&self.field, e as i64));
            if !coeff.is_zero() {
                terms.push((Monomial::from_exponents(&exps), coeff));
            }
        }
        // Lowering one exponent by one does not preserve grevlex order in general.
        Self::from_terms(self.arity, self.field.clone(), terms)
    }

    pub fn jacobian(&self) -> Vec<Self> {
        (0..self.arity).map(|v| self.partial(v)).collect()
    }

    /// Homogenizes to degree `deg f`, inserting the new variable at `at`.
    pub fn homogenize(&self, at: usize) -> Self {
        let d = self.degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.insert_var(at, (d - m.degree()) as u16), c.clone()))
            .collect();
        Self::from_terms(self.arity + 1, self.field.clone(), terms)
    }

    /// Sets variable `at` to 1 and removes it.
    pub fn dehomogenize(&self, at: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.remove_var(at), c.clone())).collect();
        Self::from_terms(self.arity - 1, self.field.clone(), terms)
    }

    /// Same polynomial viewed in `arity + extra` variables (new ones appended).
    pub fn extend_arity(&self, extra: usize) -> Self {
        let n = self.arity + extra;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(n, 0);
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        // Appending zero exponents keeps the grevlex order.
        Polynomial { arity: n, field: self.field.clone(), terms }
    }

    pub fn map_field<L: Field>(&self, field: &L::Desc, f: impl Fn(&K) -> Result<L>) -> Result<Polynomial<L>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.push((m.clone(), v));
            }
        }
        Ok(Polynomial { arity: self.arity, field: field.clone(), terms })
    }

    pub fn format_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.arity);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = vec![];
            if magnitude != "1" || m.is_one() {
                factors.push(magnitude);
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].clone()),
                    _ => factors.push(format!("{}^{}", names[v], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Default variable names: `x, y, z, w` up to arity 4, else `x1..xn`.
pub fn default_names(arity: usize) -> Vec<String> {
    if arity <= 4 {
        ["x", "y", "z", "w"][..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&default_names(self.arity)))
    }
}

impl Polynomial<Rational> {
    pub fn from_i64_terms(arity: usize, terms: &[(i64, &[u16])]) -> Self {
        let ts = terms
            .iter()
            .map(|(c, e)| (Monomial::from_exponents(e), Rational::from_i64(&Rationals, *c)))
            .collect();
        Self::from_terms(arity, Rationals, ts)
    }

    pub fn reduce_mod(&self, field: &PrimeField) -> Result<Polynomial<Fp>> {
        self.map_field(field, |c| Fp::from_rational(field, c))
    }

    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let coeffs: Vec<Rational> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        self.scale(&crate::field::primitive_scale(&coeffs))
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, K: Field> $tr<&'a Polynomial<K>> for &'a Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
                self.$checked(rhs).expect("incompatible polynomials")
            }
        }
        impl<K: Field> $tr<Polynomial<K>> for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $method(self, rhs: Polynomial<K>) -> Polynomial<K> {
                (&self).$checked(&rhs).expect("incompatible polynomials")
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        Polynomial { arity: self.arity, field: self.field.clone(), terms }
    }
}

impl<K: Field> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        -&self
    }
}

/// Homogeneous components of a polynomial after moving a base point to the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition<K: Field> {
    base_point: Vec<K>,
    /// Nonzero components, ascending by degree.
    components: Vec<(u32, Polynomial<K>)>,
    min_degree: u32,
    max_degree: u32,
}

impl<K: Field> GradedDecomposition<K> {
    /// Decomposes `f(X + p)` into homogeneous pieces.
    pub fn at(f: &Polynomial<K>, point: &[K]) -> Result<Self> {
        let local = f.translate(point)?;
        Self::build(f, point.to_vec(), &local)
    }

    fn build(source: &Polynomial<K>, base_point: Vec<K>, local: &Polynomial<K>) -> Result<Self> {
        if source.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut by_degree: Vec<(u32, Vec<(Monomial, K)>)> = vec![];
        // Terms are grevlex-descending, hence degree-descending.
        for (m, c) in local.terms.iter().rev() {
            match by_degree.last_mut() {
                Some((d, ts)) if *d == m.degree() => ts.push((m.clone(), c.clone())),
                _ => by_degree.push((m.degree(), vec![(m.clone(), c.clone())])),
            }
        }
        let components: Vec<(u32, Polynomial<K>)> = by_degree
            .into_iter()
            .map(|(d, mut ts)| {
                ts.reverse();
                (d, Polynomial::from_sorted_terms(local.arity, local.field.clone(), ts))
            })
            .collect();
        let min_degree = components.first().map(|c| c.0).unwrap_or(0);
        let max_degree = components.last().map(|c| c.0).unwrap_or(0);
        Ok(GradedDecomposition { base_point, components, min_degree, max_degree })
    }

    pub fn base_point(&self) -> &[K] {
        &self.base_point
    }

    pub fn components(&self) -> &[(u32, Polynomial<K>)] {
        &self.components
    }

    pub fn component(&self, degree: u32) -> Option<&Polynomial<K>> {
        self.components.iter().find(|(d, _)| *d == degree).map(|(_, p)| p)
    }

    /// `m`: the least degree with a nonzero piece (0 when the point is off the hypersurface).
    pub fn min_degree(&self) -> u32 {
        self.min_degree
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn lowest(&self) -> &Polynomial<K> {
        &self.components[0].1
    }

    pub fn recombine(&self) -> Polynomial<K> {
        let first = &self.components[0].1;
        let mut acc = Polynomial::zero(first.arity, first.field.clone());
        for (_, p) in &self.components {
            acc = acc.merge(p, false);
        }
        acc
    }
}

/// All monomials of exactly `degree` in `arity` variables, grevlex-descending.
pub fn monomials_of_degree(arity: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u16>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left as u16);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e as u16);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    if arity == 0 {
        return if degree == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = vec![];
    rec(&mut vec![], degree, arity, &mut out);
    out.sort_unstable_by(|a, b| b.grevlex_cmp(a));
    out
}

/// Dense homogeneous form with every coefficient drawn uniformly from
/// `[-bound, bound] \ {0}`.
pub fn random_form_with<K: Field, R: Rng>(rng: &mut R, field: &K::Desc, degree: u32, arity: usize, coeff_bound: u32) -> Polynomial<K> {
    let bound = coeff_bound.max(1) as i64;
    let terms = monomials_of_degree(arity, degree)
        .into_iter()
        .map(|m| {
            let mut c = rng.gen_range(1..=bound);
            if rng.gen_bool(0.5) {
                c = -c;
            }
            (m, K::from_i64(field, c))
        })
        .collect();
    Polynomial::from_terms(arity, field.clone(), terms)
}

pub fn random_form(degree: u32, arity: usize, seed: u64, coeff_bound: u32) -> QPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_with(&mut rng, &Rationals, degree, arity, coeff_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rational, rational_int};

    fn q(arity: usize, terms: &[(i64, &[u16])]) -> QPoly {
        QPoly::from_i64_terms(arity, terms)
    }

    fn x() -> QPoly {
        QPoly::var(2, Rationals, 0)
    }
    fn y() -> QPoly {
        QPoly::var(2, Rationals, 1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&x() + &y()) * &(&x() - &y());
        let rhs = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_identities() {
        let f = &x().pow(3) + &y();
        let zero = QPoly::zero(2, Rationals);
        assert!((&f * &zero).is_zero());
        assert_eq!(&f + &zero, f);
    }

    #[test]
    fn evaluation() {
        let f = (&x() + &y()).pow(3);
        assert_eq!(f.evaluate(&[rational_int(1), rational_int(2)]).unwrap(), rational_int(27));
    }

    #[test]
    fn mismatch_errors() {
        let a = QPoly::var(2, Rationals, 0);
        let b = QPoly::var(3, Rationals, 0);
        assert_eq!(a.checked_add(&b), Err(Error::ArityMismatch { expected: 2, found: 3 }));
        let fp = PrimeField::new(7).unwrap();
        assert!(a.evaluate(&[rational_int(1)]).is_err());
        let c = FpPoly::var(2, fp, 0);
        let d = FpPoly::var(2, PrimeField::new(11).unwrap(), 0);
        assert_eq!(c.checked_mul(&d), Err(Error::FieldMismatch));
    }

    #[test]
    fn translation_examples() {
        let f = &x().pow(2) + &y();
        let t = f.translate(&[rational_int(1), rational_int(0)]).unwrap();
        assert_eq!(t, q(2, &[(1, &[2, 0]), (2, &[1, 0]), (1, &[0, 1]), (1, &[0, 0])]));
        assert_eq!(x().translate(&[rational_int(0), rational_int(0)]).unwrap(), x());
    }

    #[test]
    fn graded_pieces_example() {
        let f = q(2, &[(1, &[1, 1]), (1, &[3, 0])]);
        let g = f.graded_pieces().unwrap();
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.component(2).unwrap(), &q(2, &[(1, &[1, 1])]));
        assert_eq!(g.component(3).unwrap(), &q(2, &[(1, &[3, 0])]));
        assert!(QPoly::zero(2, Rationals).graded_pieces().is_err());
        let h = q(2, &[(1, &[2, 0]), (-3, &[1, 1])]);
        assert_eq!(h.graded_pieces().unwrap().components().len(), 1);
        assert_eq!(h.graded_pieces().unwrap().min_degree(), 2);
    }

    #[test]
    fn order_examples() {
        let cusp = q(2, &[(1, &[0, 2]), (-1, &[3, 0])]);
        assert_eq!(cusp.order_at_origin().unwrap(), 2);
        assert_eq!(x().order_at_origin().unwrap(), 1);
        let off = &x() + &QPoly::one(2, Rationals);
        assert_eq!(off.order_at_origin(), Err(Error::PointNotOnHypersurface));
    }

    #[test]
    fn restriction_examples() {
        let f = &x().pow(2) + &y().pow(2);
        let r = f.restrict_to_line(&[rational_int(1), rational_int(1)]).unwrap();
        assert_eq!(r.coeffs(), &[rational_int(0), rational_int(0), rational_int(2)]);
        let cone = q(3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let one = rational_int(1);
        assert!(cone.restrict_to_line(&[one.clone(), one.clone(), one]).unwrap().is_zero());
        assert_eq!(f.restrict_to_line(&[rational_int(0), rational_int(0)]).unwrap_err(), Error::ZeroDirection);
    }

    #[test]
    fn jacobian_examples() {
        let f = &x().pow(2) + &y().pow(2);
        let j = f.jacobian();
        assert_eq!(j[0], x().scale(&rational_int(2)));
        assert_eq!(j[1], y().scale(&rational_int(2)));
        let c = QPoly::constant(2, rational(3, 2));
        assert!(c.jacobian().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn jacobian_of_threefold_form() {
        // f = g + x4 g' ; d f / d x4 = g'
        let g = random_form(4, 4, 3, 5).compose(&[
            QPoly::var(4, Rationals, 0),
            QPoly::var(4, Rationals, 1),
            QPoly::var(4, Rationals, 2),
            QPoly::zero(4, Rationals),
        ]);
        let g = g.unwrap();
        let gp = &random_form(3, 3, 4, 5).extend_arity(1) + &QPoly::one(4, Rationals);
        let f = &g + &(&QPoly::var(4, Rationals, 3) * &gp);
        assert_eq!(f.partial(3), gp);
    }

    #[test]
    fn random_form_contract() {
        let c = random_form(0, 3, 7, 10);
        assert!(c.is_constant() && !c.is_zero());
        assert_eq!(random_form(4, 3, 11, 10), random_form(4, 3, 11, 10));
        let f = random_form(2, 3, 5, 10);
        assert_eq!(f.len(), 6);
        assert!(f.is_homogeneous());
        assert!(f.terms().iter().all(|(_, c)| c.numer().magnitude() <= &10u32.into() && !num_traits::Zero::is_zero(c)));
    }

    #[test]
    fn format_examples() {
        let f = q(2, &[(1, &[2, 0]), (-2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(f.to_string(), "x^2 - 2*x*y + y^2");
        let g = QPoly::constant(2, rational(-3, 4));
        assert_eq!(g.to_string(), "-3/4");
        assert_eq!(QPoly::zero(1, Rationals).to_string(), "0");
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = q(2, &[(1, &[2, 0]), (3, &[0, 1]), (-1, &[0, 0])]);
        let h = f.homogenize(2);
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(2), f);
    }
}
