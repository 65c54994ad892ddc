//! Absolute irreducibility of plane curves and projections of space curves.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::rank;
use crate::monomial::Monomial;
use crate::par::{map_range, map_slice, Execution};
use crate::poly::Polynomial;
use crate::univariate::UniPoly;

fn check_characteristic<K: Field>(desc: &K::Desc, needed: u64) -> Result<()> {
    let p = K::characteristic(desc);
    if p != 0 && p <= needed {
        return Err(Error::InvalidParameter(format!("characteristic {p} too small, need > {needed}")));
    }
    Ok(())
}

/// `f(x, y0)` as a univariate polynomial in `x`.
fn specialize_y<K: Field>(f: &Polynomial<K>, y0: &K) -> UniPoly<K> {
    let desc = f.field().clone();
    let n = f.degree_in(0) as usize;
    let mut coeffs = vec![K::zero(&desc); n + 1];
    for (m, c) in f.terms() {
        coeffs[m.exponent(0) as usize].add_assign(&c.mul(&y0.pow(m.exponent(1) as u64)));
    }
    UniPoly::new(desc, coeffs)
}

/// Number of absolutely irreducible factors of a squarefree `f` in two
/// variables.
///
/// After a shear making `f` monic-like in `x`, the count is the dimension of
/// the space of pairs `(g, h)` with `∂/∂y (g/f) = ∂/∂x (h/f)`, where `g, h` are
/// bounded by the degrees of `f` (with total degree below `deg f`).
pub fn absolutely_irreducible_factor_count<K: Field>(f: &Polynomial<K>, exec: Execution) -> Result<usize> {
    if f.arity() != 2 {
        return Err(Error::InvalidParameter(format!("expected 2 variables, found {}", f.arity())));
    }
    if f.is_constant() {
        return Err(Error::Precondition("constant polynomial has no factors".into()));
    }
    let desc = f.field().clone();
    let d = f.degree().expect("nonzero");
    check_characteristic::<K>(&desc, d as u64)?;

    let x = Polynomial::var(2, desc.clone(), 0);
    let y = Polynomial::var(2, desc.clone(), 1);
    let xd = Monomial::from_exponents(&[d as u16, 0]);
    let mut sheared = None;
    for c in 0..=d as i64 {
        let img = &y + &x.scale(&K::from_i64(&desc, c));
        let g = f.compose(&[x.clone(), img])?;
        if !g.coefficient(&xd).is_zero() {
            sheared = Some(g);
            break;
        }
    }
    let g = sheared.expect("some shear makes the x^d coefficient nonzero");

    let tries = 2 * (d as i64) * (d as i64) + 1;
    let squarefree = (0..tries).any(|y0| specialize_y(&g, &K::from_i64(&desc, y0)).is_squarefree());
    if !squarefree {
        return Err(Error::NotSquarefree);
    }

    let m = d as i64;
    let n = g.degree_in(1) as i64;
    check_characteristic::<K>(&desc, ((2 * m - 1) * n).max(0) as u64)?;

    let gx = g.partial(0);
    let gy = g.partial(1);
    // unknowns: (is_h, i, j)
    let mut unknowns = vec![];
    for i in 0..m {
        for j in 0..=n {
            if i + j < m {
                unknowns.push((false, i as u16, j as u16));
            }
        }
    }
    for i in 0..=m {
        for j in 0..n {
            if i + j < m {
                unknowns.push((true, i as u16, j as u16));
            }
        }
    }
    let one = K::one(&desc);
    let columns: Vec<Polynomial<K>> = map_slice(exec, &unknowns, |&(is_h, i, j)| {
        let u = Polynomial::monomial(Monomial::from_exponents(&[i, j]), one.clone());
        if is_h {
            // h f_x - f h_x
            &(&u * &gx) - &(&g * &u.partial(0))
        } else {
            // f g_y - g f_y
            &(&g * &u.partial(1)) - &(&u * &gy)
        }
    });
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let rows: Vec<Vec<K>> = columns
        .iter()
        .map(|p| {
            let mut row = vec![];
            for (mono, c) in p.terms() {
                let next = index.len();
                let k = *index.entry(mono.clone()).or_insert(next);
                if row.len() <= k {
                    row.resize(k + 1, K::zero(&desc));
                }
                row[k] = c.clone();
            }
            row
        })
        .collect();
    Ok(unknowns.len() - rank(rows, exec))
}

/// `Res_z(f, g)` for `f, g` in `k[x, y, z]` whose leading coefficients in `z`
/// are nonzero constants, computed by evaluation and interpolation.
pub fn resultant_in_last<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>, exec: Execution) -> Result<Polynomial<K>> {
    if f.arity() != 3 || g.arity() != 3 {
        return Err(Error::InvalidParameter("expected 3 variables".into()));
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let desc = f.field().clone();
    let (df, dg) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    for (p, d) in [(f, df), (g, dg)] {
        if p.is_zero() || p.coefficient(&Monomial::from_exponents(&[0, 0, d as u16])).is_zero() {
            return Err(Error::Precondition("leading coefficient in z must be constant".into()));
        }
    }
    let e = (df * dg) as usize;
    check_characteristic::<K>(&desc, e as u64)?;
    let nodes: Vec<K> = (0..=e as i64).map(|v| K::from_i64(&desc, v)).collect();

    let specialize = |p: &Polynomial<K>, a: &K, b: &K| -> UniPoly<K> {
        let mut coeffs = vec![K::zero(&desc); p.degree_in(2) as usize + 1];
        for (m, c) in p.terms() {
            let v = c.mul(&a.pow(m.exponent(0) as u64)).mul(&b.pow(m.exponent(1) as u64));
            coeffs[m.exponent(2) as usize].add_assign(&v);
        }
        UniPoly::new(desc.clone(), coeffs)
    };
    let grid: Vec<K> = map_range(exec, (e + 1) * (e + 1), |k| {
        let (a, b) = (&nodes[k / (e + 1)], &nodes[k % (e + 1)]);
        specialize(f, a, b).resultant(&specialize(g, a, b))
    });
    // Interpolate in y for each x node, then in x for each y power.
    let in_y: Vec<UniPoly<K>> = map_range(exec, e + 1, |i| UniPoly::interpolate(&desc, &nodes, &grid[i * (e + 1)..(i + 1) * (e + 1)]));
    let mut terms = vec![];
    for k in 0..=e {
        let vals: Vec<K> = in_y.iter().map(|p| p.coeff(k)).collect();
        let px = UniPoly::interpolate(&desc, &nodes, &vals);
        for (a, c) in px.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(&[a as u16, k as u16, 0]), c.clone()));
            }
        }
    }
    Ok(Polynomial::from_terms(3, desc, terms))
}
