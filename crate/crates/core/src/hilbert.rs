//! Hilbert series numerators of monomial ideals and the dimension/degree data
//! they determine.

use crate::monomial::Monomial;

/// Hilbert series numerator `N(t)` with `HS = N(t) / (1 - t)^n`, plus the
/// dimension and degree read off from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `N`, constant term first.
    pub numerator: Vec<i64>,
    /// Dimension of the scheme (projective or affine, per constructor); -1 if empty.
    pub dimension: i64,
    /// Degree; 0 for the empty scheme.
    pub degree: u64,
}

/// Keep only the minimal generators.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Numerator of the Hilbert series of `k[x] / (gens)` in the standard grading.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(minimalize(gens.to_vec())))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] = -1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // Pivot x_v^e: v occurs in the most generators, e is the median of its
    // exponents among generators that are not pure powers of x_v. Then x_v^e
    // is not in I and I : x_v^e strictly contains I.
    let n = gens[0].arity();
    let mut best = (0usize, 0usize);
    for v in 0..n {
        let c = gens.iter().filter(|g| g.exponent(v) > 0).count();
        if c > best.1 {
            best = (v, c);
        }
    }
    let v = best.0;
    let mut exps: Vec<u16> = gens.iter().filter(|g| g.exponent(v) > 0 && g.exponent(v) as u32 != g.degree()).map(|g| g.exponent(v)).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pe = vec![0u16; n];
    pe[v] = e;
    let pivot = Monomial::from_exponents(&pe);

    // N(I) = N(I + p) + t^e N(I : p)
    let mut with_pivot: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = minimalize(gens.iter().map(|g| g.colon(&pivot)).collect());
    let mut acc = numerator_rec(minimalize(with_pivot));
    let c = numerator_rec(colon);
    poly_add_shifted(&mut acc, &c, e as usize);
    acc
}

/// Write `N = (1 - t)^k Q` with `Q(1) != 0`; returns `(k, Q(1))`.
fn split_at_one(num: &[i64]) -> (usize, i64) {
    let mut q = num.to_vec();
    let mut k = 0;
    loop {
        let s: i64 = q.iter().sum();
        if s != 0 || q.is_empty() {
            return (k, s);
        }
        // divide by (1 - t): q = (1 - t) r  <=>  r_i = sum_{j <= i} q_j
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut run = 0;
        for c in &q[..q.len() - 1] {
            run += c;
            r.push(run);
        }
        q = trim(r);
        k += 1;
    }
}

impl HilbertData {
    /// Projective data of `Proj k[x_1..x_n] / I` from the leading monomials of a
    /// homogeneous ideal's Groebner basis.
    pub fn projective(leading: &[Monomial], n: usize) -> Self {
        Self::from_numerator(hilbert_numerator(leading), n as i64 - 1)
    }

    /// Affine data of `V(I) ⊂ A^n` from the leading monomials under a
    /// degree-compatible order. The degree is that of the projective closure.
    pub fn affine(leading: &[Monomial], n: usize) -> Self {
        Self::from_numerator(hilbert_numerator(leading), n as i64)
    }

    fn from_numerator(numerator: Vec<i64>, top: i64) -> Self {
        if numerator.is_empty() {
            return HilbertData { numerator, dimension: -1, degree: 0 };
        }
        let (k, q1) = split_at_one(&numerator);
        let dimension = top - k as i64;
        if dimension < 0 {
            // Only the irrelevant ideal survives here: empty projective scheme.
            return HilbertData { numerator, dimension: -1, degree: 0 };
        }
        HilbertData { numerator, dimension, degree: q1.unsigned_abs() }
    }

    pub fn is_empty(&self) -> bool {
        self.dimension < 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn numerators() {
        assert_eq!(hilbert_numerator(&[]), vec![1]);
        assert_eq!(hilbert_numerator(&[m(&[0, 0])]), Vec::<i64>::new());
        // (x^2) -> 1 - t^2
        assert_eq!(hilbert_numerator(&[m(&[2, 0])]), vec![1, 0, -1]);
        // (x^2, xy) -> 1 - 2t^2 + t^3
        assert_eq!(hilbert_numerator(&[m(&[2, 0]), m(&[1, 1])]), vec![1, 0, -2, 1]);
    }

    #[test]
    fn projective_dimension_and_degree() {
        // cubic surface in P^3
        let h = HilbertData::projective(&[m(&[3, 0, 0, 0])], 4);
        assert_eq!((h.dimension, h.degree), (2, 3));
        // (x, y) in 2 variables: empty
        let h = HilbertData::projective(&[m(&[1, 0]), m(&[0, 1])], 2);
        assert_eq!((h.dimension, h.degree), (-1, 0));
        // complete intersection 2 x 3 in P^3
        let h = HilbertData::projective(&[m(&[2, 0, 0, 0]), m(&[0, 3, 0, 0])], 4);
        assert_eq!((h.dimension, h.degree), (1, 6));
        // lead ideal of twisted cubic (grevlex): y^2, yz, z^2 ... -> (xz, y^2, yw) style
        let h = HilbertData::projective(&[m(&[0, 2, 0, 0]), m(&[1, 0, 1, 0]), m(&[0, 1, 1, 0])], 4);
        assert_eq!((h.dimension, h.degree), (1, 3));
    }

    #[test]
    fn affine_point_and_curve() {
        // (x, y) in A^2: a point of degree 1
        let h = HilbertData::affine(&[m(&[1, 0]), m(&[0, 1])], 2);
        assert_eq!((h.dimension, h.degree), (0, 1));
        // unit ideal: empty
        let h = HilbertData::affine(&[m(&[0, 0])], 2);
        assert_eq!(h.dimension, -1);
        // y^2 - x^3 -> lead x^3, affine curve of degree 3
        let h = HilbertData::affine(&[m(&[3, 0])], 2);
        assert_eq!((h.dimension, h.degree), (1, 3));
    }

    #[test]
    fn matches_monomial_counting() {
        // Brute-force count of standard monomials in each degree vs the series.
        let gens = [m(&[2, 1, 0]), m(&[0, 3, 1]), m(&[1, 0, 2]), m(&[0, 0, 4])];
        let num = hilbert_numerator(&gens);
        // expand N / (1-t)^3 up to degree 10
        let mut series = num.clone();
        series.resize(11, 0);
        for _ in 0..3 {
            for i in 1..series.len() {
                series[i] += series[i - 1];
            }
        }
        for d in 0..=10u32 {
            let count = crate::poly::monomials_of_degree(3, d).iter().filter(|x| !gens.iter().any(|g| g.divides(x))).count();
            assert_eq!(series[d as usize], count as i64, "degree {d}");
        }
    }
}
