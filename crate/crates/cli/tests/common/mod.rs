#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seshadri_cli::parse::{format_polynomial, parse_polynomial, Variables};
use seshadri_core::field::{rational, Rational, Rationals};
use seshadri_core::monomial::Monomial;
use seshadri_core::poly::QPoly;

const NAMES: &[&str] = &["a", "b2", "_t", "u_v", "Xq", "zz9"];

/// Random polynomial; coefficients may be fractions or exceed `i64` when squared.
pub fn random_poly<R: Rng>(rng: &mut R, arity: usize) -> QPoly {
    let terms = rng.gen_range(0..=8);
    let mut out: Vec<(Monomial, Rational)> = vec![];
    for _ in 0..terms {
        let exps: Vec<u16> = (0..arity).map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=12) }).collect();
        let num = if rng.gen_bool(0.1) { rng.gen_range(-(1i64 << 62)..=(1i64 << 62)) } else { rng.gen_range(-30..=30) };
        let den = if rng.gen_bool(0.3) { rng.gen_range(2..=17) } else { 1 };
        let c = if rng.gen_bool(0.05) { rational(num, den) * rational(num, 1) } else { rational(num, den) };
        out.push((Monomial::from_exponents(&exps), c));
    }
    QPoly::from_terms(arity, Rationals, out)
}

pub fn variable_sets(arity: usize) -> Vec<Variables> {
    let declared = Variables::declared(NAMES[..arity].iter().map(|s| s.to_string()).collect()).unwrap();
    vec![declared, Variables::default_for(arity)]
}

/// Runs `parse(format(f)) == f` on `count` random polynomials of arity 1..=6.
/// Returns the number of mismatches together with the first failing text.
pub fn roundtrip_sweep(seed: u64, count: usize) -> (usize, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    let mut first = None;
    for _ in 0..count {
        let arity = rng.gen_range(1..=6);
        let f = random_poly(&mut rng, arity);
        for vars in variable_sets(arity) {
            let text = format_polynomial(&f, &vars);
            if parse_polynomial(&text, &vars).ok().as_ref() != Some(&f) {
                bad += 1;
                first.get_or_insert(text);
            }
        }
    }
    (bad, first)
}
