use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::{Field, Fp, PrimeField, Rational};
use crate::groebner::{groebner, GroebnerBasis};
use crate::hilbert::HilbertData;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::settings::Settings;

/// Polynomial ideal with a write-once Groebner basis cache per order.
#[derive(Debug)]
pub struct Ideal<K: Field> {
    arity: usize,
    field: K::Desc,
    gens: Vec<Polynomial<K>>,
    homogeneous: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<K>>>>,
}

pub type QIdeal = Ideal<Rational>;

impl<K: Field> Clone for Ideal<K> {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        Ideal { arity: self.arity, field: self.field.clone(), gens: self.gens.clone(), homogeneous: self.homogeneous, cache: Mutex::new(cache) }
    }
}

impl<K: Field> PartialEq for Ideal<K> {
    /// Equality of generator lists, not of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.gens == other.gens
    }
}

impl<K: Field> Ideal<K> {
    /// Zero generators are dropped.
    pub fn new(arity: usize, field: K::Desc, gens: Vec<Polynomial<K>>) -> Result<Self> {
        for g in &gens {
            if g.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
            }
            if g.field() != &field {
                return Err(Error::FieldMismatch);
            }
        }
        let gens: Vec<Polynomial<K>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ok(Ideal { arity, field, gens, homogeneous, cache: Mutex::new(HashMap::new()) })
    }

    /// Arity and field taken from the first generator.
    pub fn from_generators(gens: Vec<Polynomial<K>>) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Precondition("ideal needs at least one generator".into()))?;
        let (arity, field) = (first.arity(), first.field().clone());
        Self::new(arity, field, gens)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn field(&self) -> &K::Desc {
        &self.field
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// `self + (extra)`.
    pub fn with_generators(&self, extra: &[Polynomial<K>]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Self::new(self.arity, self.field.clone(), gens)
    }

    pub fn groebner(&self, order: &MonomialOrder, settings: &Settings) -> Result<Arc<GroebnerBasis<K>>> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner(&self.gens, self.arity, &self.field, order, settings)?);
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    pub fn contains(&self, f: &Polynomial<K>, settings: &Settings) -> Result<bool> {
        self.groebner(&MonomialOrder::grevlex(), settings)?.contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial<K>, settings: &Settings) -> Result<Polynomial<K>> {
        self.groebner(&MonomialOrder::grevlex(), settings)?.normal_form(f)
    }

    /// Dimension and degree of `Proj`; requires a homogeneous ideal.
    pub fn hilbert_data(&self, settings: &Settings) -> Result<HilbertData> {
        self.hilbert_data_in(&MonomialOrder::grevlex(), settings)
    }

    /// Like [`hilbert_data`](Self::hilbert_data) under an arbitrary order.
    pub fn hilbert_data_in(&self, order: &MonomialOrder, settings: &Settings) -> Result<HilbertData> {
        if !self.homogeneous {
            return Err(Error::NotHomogeneous);
        }
        if self.gens.is_empty() {
            return Ok(HilbertData::projective(&[], self.arity));
        }
        let gb = self.groebner(order, settings)?;
        Ok(HilbertData::projective(&gb.leading_monomials(), self.arity))
    }

    /// Affine dimension of `V(I)` and degree of its projective closure.
    pub fn affine_hilbert_data(&self, settings: &Settings) -> Result<HilbertData> {
        if self.gens.is_empty() {
            return Ok(HilbertData::affine(&[], self.arity));
        }
        let gb = self.groebner(&MonomialOrder::grevlex(), settings)?;
        Ok(HilbertData::affine(&gb.leading_monomials(), self.arity))
    }

    /// `I ∩ k[remaining variables]`, kept in the original arity.
    pub fn eliminate(&self, drop: &[usize], settings: &Settings) -> Result<Self> {
        for &v in drop {
            if v >= self.arity {
                return Err(Error::InvalidParameter(format!("variable index {v} out of range")));
            }
        }
        let order = MonomialOrder::elimination(self.arity, drop);
        let gb = self.groebner(&order, settings)?;
        let kept = gb.elements().into_iter().filter(|g| g.support_vars().iter().all(|v| !drop.contains(v))).collect();
        Self::new(self.arity, self.field.clone(), kept)
    }

    /// Whether `V(I)` is nonempty in projective space over the algebraic closure.
    pub fn projective_zero_exists(&self, settings: &Settings) -> Result<bool> {
        Ok(self.hilbert_data(settings)?.dimension >= 0)
    }

    /// Ideal of lowest-degree forms of all elements of `I`, at the origin.
    ///
    /// Homogenize with a new last variable `t`, compute a basis under an order
    /// that ranks higher powers of `t` first within a degree, then dehomogenize
    /// and take lowest forms.
    pub fn tangent_cone_ideal(&self, settings: &Settings) -> Result<Self> {
        if self.gens.iter().any(|g| !g.constant_term().is_zero()) {
            return Err(Error::PointNotOnHypersurface);
        }
        let n = self.arity;
        let homog: Vec<Polynomial<K>> = self.gens.iter().map(|g| g.homogenize(n)).collect();
        let gb = groebner(&homog, n + 1, &self.field, &MonomialOrder::lowest_degree_first(), settings)?;
        let lowest = gb
            .elements()
            .into_iter()
            .map(|g| {
                let d = g.dehomogenize(n);
                let m = d.min_degree().expect("nonzero");
                d.homogeneous_component(m)
            })
            .collect();
        Self::new(n, self.field.clone(), lowest)
    }

    /// Ideal of `I` moved so that `point` becomes the origin.
    pub fn translate(&self, point: &[K]) -> Result<Self> {
        let gens = self.gens.iter().map(|g| g.translate(point)).collect::<Result<Vec<_>>>()?;
        Self::new(self.arity, self.field.clone(), gens)
    }

    pub fn vanishes_at(&self, point: &[K]) -> Result<bool> {
        for g in &self.gens {
            if !g.evaluate(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Ideal<Rational> {
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<Ideal<Fp>> {
        let gens = self.gens.iter().map(|g| g.reduce_mod(field)).collect::<Result<Vec<_>>>()?;
        Ideal::new(self.arity, *field, gens)
    }
}
