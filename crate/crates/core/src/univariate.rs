//! Dense univariate polynomials over a field.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<K: Field> {
    field: K::Desc,
    /// Coefficients from the constant term upward; no trailing zeros.
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(field: K::Desc, mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: K::Desc) -> Self {
        UniPoly { field, coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| K::zero(&self.field))
    }

    pub fn field(&self) -> &K::Desc {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&K::from_i64(&self.field, i as i64)))
            .collect();
        UniPoly::new(self.field.clone(), coeffs)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().and_then(|c| c.inv()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let q = r[top].mul(&lead_inv);
            if !q.is_zero() {
                let shift = top - d;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    r[shift + i].sub_mul_assign(&q, c);
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(self.field.clone(), r)
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(|c| c.inv()) {
            Some(inv) => UniPoly::new(self.field.clone(), self.coeffs.iter().map(|c| c.mul(&inv)).collect()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree in the separable sense: `gcd(p, p') = 1`.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Resultant by the Euclidean recurrence
    /// `res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r)`.
    pub fn resultant(&self, other: &Self) -> K {
        let zero = K::zero(&self.field);
        let one = K::one(&self.field);
        let (Some(_), Some(_)) = (self.degree(), other.degree()) else {
            return zero;
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = one.clone();
        loop {
            let da = a.degree().expect("nonzero");
            let db = b.degree().expect("nonzero");
            if db == 0 {
                return acc.mul(&b.coeffs[0].pow(da as u64));
            }
            let r = a.rem(&b);
            let Some(dr) = r.degree() else {
                return zero;
            };
            if da % 2 == 1 && db % 2 == 1 {
                acc = acc.neg();
            }
            acc = acc.mul(&b.leading().expect("nonzero").pow((da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Newton interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
    pub fn interpolate(field: &K::Desc, xs: &[K], ys: &[K]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd: Vec<K> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = dd[i].sub(&dd[i - 1]);
                let den = xs[i].sub(&xs[i - j]);
                dd[i] = num.div(&den).expect("distinct nodes");
            }
        }
        // Horner on the Newton form.
        let mut acc: Vec<K> = vec![];
        for i in (0..n).rev() {
            // acc = acc * (x - xs[i]) + dd[i]
            let mut next = vec![K::zero(field); acc.len() + 1];
            for (k, c) in acc.iter().enumerate() {
                next[k + 1].add_assign(c);
                next[k].sub_mul_assign(c, &xs[i]);
            }
            next[0].add_assign(&dd[i]);
            acc = next;
        }
        UniPoly::new(field.clone(), acc)
    }
}
