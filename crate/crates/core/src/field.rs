//! Coefficient fields: exact rationals and prime fields `F_p`.
//!
//! Every coefficient knows how to do its own arithmetic. The associated
//! [`Field::Desc`] value identifies the field (for `F_p`, the modulus) so that
//! polynomials can create constants and refuse to mix fields.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Desc: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;
    /// Coefficient ring used inside Buchberger's algorithm: the field itself
    /// for `F_p`, the integers (fraction-free) for the rationals.
    type Ring: GbRing;

    fn descriptor(&self) -> Self::Desc;
    fn zero(desc: &Self::Desc) -> Self;
    fn one(desc: &Self::Desc) -> Self;
    fn from_i64(desc: &Self::Desc, n: i64) -> Self;
    fn from_rational(desc: &Self::Desc, q: &Rational) -> Result<Self>;
    /// 0 for the rationals.
    fn characteristic(desc: &Self::Desc) -> u64;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.descriptor());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    /// Coefficients as ring elements, scaled by a common nonzero constant.
    fn to_ring(coeffs: &[Self]) -> Vec<Self::Ring>;
    /// Field coefficients of a ring polynomial, scaled so the first is 1.
    fn from_ring_monic(desc: &Self::Desc, coeffs: &[Self::Ring]) -> Vec<Self>;
}

/// Arithmetic needed by the Buchberger loop. Elements of one polynomial may be
/// rescaled by nonzero constants at will.
pub trait GbRing: Clone + fmt::Debug + Send + Sync + 'static {
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// `a*x - b*y`
    fn lin_comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Self;
    fn ring_is_one(&self) -> bool;
    /// `(a, b)` with `a * c == b * lc` and `a` nonzero.
    fn cancel(c: &Self, lc: &Self) -> (Self, Self);
    /// Divide out a common factor; first coefficient becomes canonical.
    fn normalize(coeffs: &mut [Self]);
}

impl GbRing for Fp {
    fn ring_is_zero(&self) -> bool {
        self.value == 0
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn ring_neg(&self) -> Self {
        Field::neg(self)
    }
    fn lin_comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        let p = a.modulus;
        let u = a.value * x.value % p;
        let v = b.value * y.value % p;
        Fp { value: if u >= v { u - v } else { u + p - v }, modulus: p }
    }
    fn ring_is_one(&self) -> bool {
        self.value == 1
    }
    fn cancel(c: &Self, lc: &Self) -> (Self, Self) {
        (Field::one(&c.descriptor()), Field::div(c, lc).expect("nonzero leading coefficient"))
    }
    fn normalize(coeffs: &mut [Self]) {
        if let Some(inv) = coeffs.first().and_then(|c| c.inv()) {
            if inv.value != 1 {
                for c in coeffs.iter_mut() {
                    *c = Field::mul(c, &inv);
                }
            }
        }
    }
}

impl GbRing for BigInt {
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn lin_comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        if One::is_one(a) {
            x - b * y
        } else {
            a * x - b * y
        }
    }
    fn ring_is_one(&self) -> bool {
        One::is_one(self)
    }
    fn cancel(c: &Self, lc: &Self) -> (Self, Self) {
        let g = c.gcd(lc);
        let mut a = lc / &g;
        let mut b = c / &g;
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }
    fn normalize(coeffs: &mut [Self]) {
        let mut g = BigInt::zero();
        for c in coeffs.iter() {
            g = g.gcd(c);
            if One::is_one(&g) {
                break;
            }
        }
        if Zero::is_zero(&g) {
            return;
        }
        if coeffs[0].is_negative() {
            g = -g;
        }
        if !One::is_one(&g) {
            for c in coeffs.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

/// Descriptor of the rational field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for BigRational {
    type Desc = Rationals;
    type Ring = BigInt;

    fn descriptor(&self) -> Rationals {
        Rationals
    }
    fn zero(_: &Rationals) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &Rationals) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(_: &Rationals, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(_: &Rationals, q: &Rational) -> Result<Self> {
        Ok(q.clone())
    }
    fn characteristic(_: &Rationals) -> u64 {
        0
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn to_ring(coeffs: &[Self]) -> Vec<BigInt> {
        let s = primitive_scale(coeffs);
        coeffs.iter().map(|c| (c * &s).to_integer()).collect()
    }
    fn from_ring_monic(_: &Rationals, coeffs: &[BigInt]) -> Vec<Self> {
        let Some(lead) = coeffs.first() else {
            return vec![];
        };
        coeffs.iter().map(|c| BigRational::new(c.clone(), lead.clone())).collect()
    }
}

/// Descriptor of a prime field `F_p` with `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

/// Default modulus for prime-field computations: the Mersenne prime 2^31 - 1.
pub const DEFAULT_MODULUS: u64 = 2_147_483_647;

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 3 || modulus >= 1 << 32 {
            return Err(Error::InvalidParameter(format!(
                "modulus {modulus} must be an odd prime below 2^32"
            )));
        }
        if !is_prime(modulus) {
            return Err(Error::InvalidParameter(format!("modulus {modulus} is not prime")));
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, v: u64) -> Fp {
        Fp { value: v % self.modulus, modulus: self.modulus }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { modulus: DEFAULT_MODULUS }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed_value(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed_value())
    }
}

fn mod_big(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

impl Field for Fp {
    type Desc = PrimeField;
    type Ring = Fp;

    fn descriptor(&self) -> PrimeField {
        PrimeField { modulus: self.modulus }
    }
    fn zero(desc: &PrimeField) -> Self {
        Fp { value: 0, modulus: desc.modulus }
    }
    fn one(desc: &PrimeField) -> Self {
        Fp { value: 1, modulus: desc.modulus }
    }
    fn from_i64(desc: &PrimeField, n: i64) -> Self {
        let p = desc.modulus as i64;
        Fp { value: n.rem_euclid(p) as u64, modulus: desc.modulus }
    }
    fn from_rational(desc: &PrimeField, q: &Rational) -> Result<Self> {
        let p = desc.modulus;
        let den = mod_big(q.denom(), p);
        if den == 0 {
            return Err(Error::BadReduction(q.to_string(), p));
        }
        let num = mod_big(q.numer(), p);
        let d = Fp { value: den, modulus: p };
        Ok(Field::mul(&Fp { value: num, modulus: p }, &Field::inv(&d).expect("nonzero")))
    }
    fn characteristic(desc: &PrimeField) -> u64 {
        desc.modulus
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.value + rhs.value;
        Fp { value: if s >= self.modulus { s - self.modulus } else { s }, modulus: self.modulus }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.modulus - rhs.value
        };
        Fp { value: v, modulus: self.modulus }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Fp { value: self.value * rhs.value % self.modulus, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        Fp {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(self.modulus - 2))
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self = Field::add(self, rhs);
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.value * b.value % self.modulus;
        let v = if self.value >= prod { self.value - prod } else { self.value + self.modulus - prod };
        self.value = v;
    }
    fn to_ring(coeffs: &[Self]) -> Vec<Fp> {
        coeffs.to_vec()
    }
    fn from_ring_monic(_: &PrimeField, coeffs: &[Fp]) -> Vec<Self> {
        let mut out = coeffs.to_vec();
        GbRing::normalize(&mut out);
        out
    }
}

/// Build a rational from an integer pair; panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Positive integer content of a list of rationals: lcm of denominators and
/// gcd of numerators, returned as the scale `s` with `s * q` primitive integral.
pub fn primitive_scale(coeffs: &[Rational]) -> Rational {
    let mut den_lcm = BigInt::one();
    for c in coeffs {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in coeffs {
        let n = c.numer() * (&den_lcm / c.denom());
        num_gcd = num_gcd.gcd(&n);
    }
    if Zero::is_zero(&num_gcd) {
        return <BigRational as One>::one();
    }
    let mut s = BigRational::new(den_lcm, num_gcd.abs());
    if let Some(first) = coeffs.first() {
        if first.is_negative() {
            s = -s;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let fp = PrimeField::new(101).unwrap();
        let a = fp.element(37);
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
        assert_eq!(Fp::from_i64(&fp, -1).value(), 100);
        let half = Fp::from_rational(&fp, &rational(1, 2)).unwrap();
        assert_eq!(half.mul(&fp.element(2)).value(), 1);
    }

    #[test]
    fn reduction_rejects_bad_denominator() {
        let fp = PrimeField::new(7).unwrap();
        assert!(Fp::from_rational(&fp, &rational(1, 14)).is_err());
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(DEFAULT_MODULUS).is_ok());
        assert!(PrimeField::new(1 << 33).is_err());
    }

    #[test]
    fn primitive_scale_clears_denominators() {
        let cs = vec![rational(-1, 2), rational(3, 4)];
        let s = primitive_scale(&cs);
        let scaled: Vec<Rational> = cs.iter().map(|c| c * &s).collect();
        assert_eq!(scaled, vec![rational_int(2), rational_int(-3)]);
    }
}
