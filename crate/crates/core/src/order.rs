use std::cmp::Ordering;

use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Elimination order: the first `split` variables (in permuted position)
    /// compared by grevlex, ties broken by grevlex on the rest.
    Block(usize),
    /// Total degree first, then a larger exponent of the last variable wins,
    /// then grevlex on the remaining variables. On homogenized polynomials
    /// this makes the lowest-degree part of the dehomogenization leading.
    LowestDegreeFirst,
}

/// A monomial order together with a variable permutation. Position `i` of the
/// order looks at variable `perm[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, perm: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn block(split: usize) -> Self {
        MonomialOrder { kind: OrderKind::Block(split), perm: None }
    }

    pub fn lowest_degree_first() -> Self {
        MonomialOrder { kind: OrderKind::LowestDegreeFirst, perm: None }
    }

    /// Elimination order for `drop` in arity `n`: dropped variables first.
    pub fn elimination(n: usize, drop: &[usize]) -> Self {
        let mut perm: Vec<usize> = drop.to_vec();
        perm.sort_unstable();
        perm.dedup();
        let split = perm.len();
        perm.extend((0..n).filter(|v| !drop.contains(v)));
        MonomialOrder { kind: OrderKind::Block(split), perm: Some(perm) }
    }

    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        let mut check = perm.clone();
        check.sort_unstable();
        assert!(check.iter().enumerate().all(|(i, &v)| i == v), "not a permutation");
        self.perm = Some(perm);
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    /// The same order with the permutation removed.
    pub fn unpermuted(&self) -> Self {
        MonomialOrder { kind: self.kind, perm: None }
    }

    /// Leading monomials under this order bound total degree from above.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.kind, OrderKind::Grevlex | OrderKind::LowestDegreeFirst)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.perm {
            None => cmp_kind(self.kind, a.exponents(), b.exponents(), a.degree(), b.degree()),
            Some(p) => {
                let pa: Vec<u16> = p.iter().map(|&i| a.exponent(i)).collect();
                let pb: Vec<u16> = p.iter().map(|&i| b.exponent(i)).collect();
                cmp_kind(self.kind, &pa, &pb, a.degree(), b.degree())
            }
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

fn grevlex_slices(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn cmp_kind(kind: OrderKind, a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
    match kind {
        OrderKind::Grevlex => {
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            for (x, y) in a.iter().zip(b).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
        OrderKind::Lex => a.cmp(b),
        OrderKind::Block(split) => {
            let split = split.min(a.len());
            match grevlex_slices(&a[..split], &b[..split]) {
                Ordering::Equal => grevlex_slices(&a[split..], &b[split..]),
                o => o,
            }
        }
        OrderKind::LowestDegreeFirst => {
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            let n = a.len();
            if n == 0 {
                return Ordering::Equal;
            }
            match a[n - 1].cmp(&b[n - 1]) {
                Ordering::Equal => grevlex_slices(&a[..n - 1], &b[..n - 1]),
                o => o,
            }
        }
    }
}
