//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the sugar
//! selection strategy. Over the rationals the loop runs fraction-free on
//! primitive integer polynomials; bases are returned monic.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{Field, GbRing};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::settings::Settings;

type Terms<R> = Vec<(Monomial, R)>;

/// A reduced Groebner basis. Elements are stored in internal coordinates
/// (variables permuted so the order needs no permutation), sorted by the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field> {
    order: MonomialOrder,
    internal_order: MonomialOrder,
    perm: Option<Vec<usize>>,
    arity: usize,
    field: K::Desc,
    elements: Vec<Terms<K>>,
}

fn permute(m: &Monomial, perm: &Option<Vec<usize>>) -> Monomial {
    match perm {
        None => m.clone(),
        Some(p) => {
            let e: Vec<u16> = p.iter().map(|&i| m.exponent(i)).collect();
            Monomial::from_exponents(&e)
        }
    }
}

fn unpermute(m: &Monomial, perm: &Option<Vec<usize>>) -> Monomial {
    match perm {
        None => m.clone(),
        Some(p) => {
            let mut e = vec![0u16; p.len()];
            for (pos, &var) in p.iter().enumerate() {
                e[var] = m.exponent(pos);
            }
            Monomial::from_exponents(&e)
        }
    }
}

fn perm_of(order: &MonomialOrder, arity: usize) -> (MonomialOrder, Option<Vec<usize>>) {
    let perm = order.permutation().map(|p| p.to_vec());
    if let Some(p) = &perm {
        assert_eq!(p.len(), arity, "order permutation arity");
    }
    (order.unpermuted(), perm)
}

impl<K: Field> GroebnerBasis<K> {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|e| e[0].0.is_one())
    }

    /// Basis elements in original coordinates, canonical form.
    pub fn elements(&self) -> Vec<Polynomial<K>> {
        self.elements
            .iter()
            .map(|terms| {
                let ts = terms.iter().map(|(m, c)| (unpermute(m, &self.perm), c.clone())).collect();
                Polynomial::from_terms(self.arity, self.field.clone(), ts)
            })
            .collect()
    }

    /// Leading monomials in original coordinates.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| unpermute(&e[0].0, &self.perm)).collect()
    }

    fn to_internal(&self, f: &Polynomial<K>) -> Terms<K> {
        let mut ts: Terms<K> = f.terms().iter().map(|(m, c)| (permute(m, &self.perm), c.clone())).collect();
        let ord = &self.internal_order;
        ts.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        ts
    }

    /// Remainder of full reduction; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        if f.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: f.arity() });
        }
        if f.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let ord = &self.internal_order;
        let mut p = self.to_internal(f);
        let mut rem: Terms<K> = vec![];
        while !p.is_empty() {
            let (m, c) = p[0].clone();
            let reducer = self.elements.iter().find(|g| g[0].0.divides(&m));
            match reducer {
                None => {
                    rem.push((m, c));
                    p.remove(0);
                }
                Some(g) => {
                    let q = g[0].0.quotient_of(&m).expect("divides");
                    // elements are monic, so subtract c * q * g
                    p = sub_scaled(ord, &p[1..], &c, &q, &g[1..]);
                }
            }
        }
        let ts = rem.into_iter().map(|(m, c)| (unpermute(&m, &self.perm), c)).collect();
        Ok(Polynomial::from_terms(self.arity, self.field.clone(), ts))
    }

    pub fn contains(&self, f: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// `p - c * q * g`, both inputs sorted descending.
fn sub_scaled<K: Field>(ord: &MonomialOrder, p: &[(Monomial, K)], c: &K, q: &Monomial, g: &[(Monomial, K)]) -> Terms<K> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut cur: Option<Monomial> = None;
    while i < p.len() || j < g.len() {
        if j < g.len() && cur.is_none() {
            cur = Some(g[j].0.mul(q));
        }
        let o = match (i < p.len(), &cur) {
            (true, Some(gm)) => ord.cmp(&p[i].0, gm),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match o {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((cur.take().expect("term"), c.mul(&g[j].1).neg()));
                j += 1;
            }
            Ordering::Equal => {
                let mut v = p[i].1.clone();
                v.sub_mul_assign(c, &g[j].1);
                if !v.is_zero() {
                    out.push((cur.take().expect("term"), v));
                } else {
                    cur = None;
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

struct Entry<R> {
    terms: Terms<R>,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a, R: GbRing> {
    ord: &'a MonomialOrder,
    polys: Vec<Entry<R>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    steps: u64,
    budget: u64,
}

impl<'a, R: GbRing> Engine<'a, R> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i].terms[0].0
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded { steps: self.budget });
        }
        Ok(())
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &k in &self.active {
            if Some(k) == skip {
                continue;
            }
            if self.lm(k).divides(m) {
                match best {
                    Some(b) if self.polys[b].terms.len() <= self.polys[k].terms.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    /// `a*p[..] - b*q*g` where term `at` of `p` cancels against `g`'s lead.
    fn combine(&self, p: Terms<R>, at: usize, a: &R, b: &R, q: &Monomial, g: &[(Monomial, R)]) -> Terms<R> {
        let scale_a = !a.ring_is_one();
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut iter = p.into_iter();
        for _ in 0..at {
            let (m, c) = iter.next().expect("prefix");
            out.push((m, if scale_a { a.ring_mul(&c) } else { c }));
        }
        iter.next(); // cancelled term
        let rest: Vec<(Monomial, R)> = iter.collect();
        let (mut i, mut j) = (0, 1);
        while i < rest.len() || j < g.len() {
            let gm = if j < g.len() { Some(g[j].0.mul(q)) } else { None };
            let o = match (i < rest.len(), &gm) {
                (true, Some(gm)) => self.ord.cmp(&rest[i].0, gm),
                (true, None) => Ordering::Greater,
                (false, _) => Ordering::Less,
            };
            match o {
                Ordering::Greater => {
                    let c = &rest[i].1;
                    out.push((rest[i].0.clone(), if scale_a { a.ring_mul(c) } else { c.clone() }));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.expect("term"), b.ring_mul(&g[j].1).ring_neg()));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = R::lin_comb(a, &rest[i].1, b, &g[j].1);
                    if !v.ring_is_zero() {
                        out.push((gm.expect("term"), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Full reduction of `p` by the active set (excluding `skip`), starting at term `from`.
    fn reduce(&mut self, mut p: Terms<R>, from: usize, skip: Option<usize>) -> Result<Terms<R>> {
        let mut i = from;
        let mut since_normalize = 0;
        while i < p.len() {
            match self.find_reducer(&p[i].0, skip) {
                None => i += 1,
                Some(k) => {
                    self.tick()?;
                    let g = &self.polys[k].terms;
                    let q = g[0].0.quotient_of(&p[i].0).expect("divides");
                    let (a, b) = R::cancel(&p[i].1, &g[0].1);
                    p = self.combine(p, i, &a, &b, &q, g);
                    since_normalize += 1;
                    if since_normalize == 8 {
                        normalize_terms(&mut p);
                        since_normalize = 0;
                    }
                }
            }
        }
        normalize_terms(&mut p);
        Ok(p)
    }

    fn spoly(&self, pair: &Pair) -> Terms<R> {
        let f = &self.polys[pair.i].terms;
        let g = &self.polys[pair.j].terms;
        let qf = f[0].0.quotient_of(&pair.lcm).expect("lcm");
        let qg = g[0].0.quotient_of(&pair.lcm).expect("lcm");
        let (a, b) = R::cancel(&f[0].1, &g[0].1);
        // a*qf*f - b*qg*g; leading terms cancel.
        let fp: Terms<R> = f.iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        self.combine(fp, 0, &a, &b, &qg, g)
    }

    fn add(&mut self, terms: Terms<R>, sugar: u32) {
        let h = self.polys.len();
        self.polys.push(Entry { terms, sugar });
        let hl = self.lm(h).clone();

        let mut cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lcm = self.lm(g).lcm(&hl);
                let sg = self.polys[g].sugar + lcm.degree() - self.lm(g).degree();
                let sh = sugar + lcm.degree() - hl.degree();
                Pair { i: g, j: h, lcm, sugar: sg.max(sh) }
            })
            .collect();

        // Gebauer–Möller: drop (g, h) when another new pair's lcm divides its lcm.
        let mut kept: Vec<Pair> = vec![];
        while let Some(p) = cands.pop() {
            let coprime = self.lm(p.i).is_coprime(&hl);
            if coprime || (!cands.iter().any(|q| q.lcm.divides(&p.lcm)) && !kept.iter().any(|q| q.lcm.divides(&p.lcm))) {
                kept.push(p);
            }
        }
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !self.lm(p.i).is_coprime(&hl)).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && polys[p.i].terms[0].0.lcm(&hl) != p.lcm
                && polys[p.j].terms[0].0.lcm(&hl) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !hl.divides(&polys[g].terms[0].0));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => ord.cmp(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self, gens: Vec<Terms<R>>) -> Result<()> {
        for g in gens {
            let sugar = g.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
            let h = self.reduce(g, 0, None)?;
            if !h.is_empty() {
                self.add(h, sugar);
            }
        }
        while let Some(pair) = self.select() {
            let s = self.spoly(&pair);
            if s.is_empty() {
                continue;
            }
            let h = self.reduce(s, 0, None)?;
            if !h.is_empty() {
                self.add(h, pair.sugar);
            }
        }
        Ok(())
    }

    /// Tail-reduces the (already minimal) active set.
    fn interreduce(&mut self) -> Result<Vec<Terms<R>>> {
        let mut act = self.active.clone();
        act.sort_by(|&a, &b| self.ord.cmp(self.lm(a), self.lm(b)));
        for &k in &act {
            let p = std::mem::take(&mut self.polys[k].terms);
            // keep the lead visible to find_reducer for other elements
            self.polys[k].terms = p.clone();
            let r = self.reduce(p, 1, Some(k))?;
            self.polys[k].terms = r;
        }
        Ok(act.into_iter().map(|k| std::mem::take(&mut self.polys[k].terms)).collect())
    }
}

fn normalize_terms<R: GbRing>(p: &mut Terms<R>) {
    if p.is_empty() {
        return;
    }
    let mut cs: Vec<R> = p.iter().map(|(_, c)| c.clone()).collect();
    R::normalize(&mut cs);
    for (t, c) in p.iter_mut().zip(cs) {
        t.1 = c;
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner<K: Field>(gens: &[Polynomial<K>], arity: usize, field: &K::Desc, order: &MonomialOrder, settings: &Settings) -> Result<GroebnerBasis<K>> {
    for g in gens {
        if g.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: g.arity() });
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    let (internal_order, perm) = perm_of(order, arity);
    let ring_gens: Vec<Terms<K::Ring>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut ts: Vec<(Monomial, K)> = g.terms().iter().map(|(m, c)| (permute(m, &perm), c.clone())).collect();
            ts.sort_by(|a, b| internal_order.cmp(&b.0, &a.0));
            let coeffs: Vec<K> = ts.iter().map(|(_, c)| c.clone()).collect();
            let ring = K::to_ring(&coeffs);
            let mut out: Terms<K::Ring> = ts.into_iter().map(|(m, _)| m).zip(ring).collect();
            normalize_terms(&mut out);
            out
        })
        .collect();

    let mut engine = Engine { ord: &internal_order, polys: vec![], active: vec![], pairs: vec![], steps: 0, budget: settings.step_budget };
    // Smaller generators first keeps early reductions cheap.
    let mut ring_gens = ring_gens;
    ring_gens.sort_by(|a, b| internal_order.cmp(&a[0].0, &b[0].0).then(a.len().cmp(&b.len())));
    engine.run(ring_gens)?;
    let reduced = engine.interreduce()?;

    let mut elements: Vec<Terms<K>> = reduced
        .into_iter()
        .map(|ts| {
            let cs: Vec<K::Ring> = ts.iter().map(|(_, c)| c.clone()).collect();
            let monic = K::from_ring_monic(field, &cs);
            ts.into_iter().map(|(m, _)| m).zip(monic).collect()
        })
        .collect();
    elements.sort_by(|a, b| internal_order.cmp(&a[0].0, &b[0].0));
    Ok(GroebnerBasis { order: order.clone(), internal_order, perm, arity, field: field.clone(), elements })
}
