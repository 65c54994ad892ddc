use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 8]>;

/// Exponent vector with a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, arity), degree: 0 }
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Ideal quotient `self : other` for monomials.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// Insert a new variable with exponent `e` at position `at`.
    pub fn insert_var(&self, at: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(at, e);
        Monomial { exps, degree: self.degree + e as u32 }
    }

    pub fn remove_var(&self, at: usize) -> Monomial {
        let mut exps = self.exps.clone();
        let e = exps.remove(at);
        Monomial { exps, degree: self.degree - e as u32 }
    }

    /// Graded reverse lexicographic comparison with x1 > x2 > ... > xn.
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_examples() {
        let m = |e: &[u16]| Monomial::from_exponents(e);
        // x^2 > xy > y^2 > xz > yz > z^2
        let order = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in order.windows(2) {
            assert_eq!(w[0].grevlex_cmp(&w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[2, 1, 1]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 2, 1]);
        assert!(!a.divides(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.quotient_of(&a.lcm(&b)).unwrap().exponents(), &[1, 0, 1]);
        assert_eq!(a.lcm(&b).degree(), 5);
    }
}
