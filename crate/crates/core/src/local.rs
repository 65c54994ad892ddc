//! Point-local invariants of hypersurfaces and curves.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::{GradedDecomposition, Polynomial};
use crate::settings::Settings;

/// A hypersurface `V(f)` in an affine chart together with a point on it.
#[derive(Debug, Clone)]
pub struct PointedHypersurface<K: Field> {
    f: Polynomial<K>,
    point: Vec<K>,
    decomposition: GradedDecomposition<K>,
}

/// Outcome of the search for lines through the base point.
#[derive(Debug, Clone)]
pub struct LineSearchResult<K: Field> {
    pub contains_line: bool,
    /// Generated by every nonzero graded piece; its projective zeros are the
    /// directions of lines through the point.
    pub direction_ideal: Ideal<K>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultDegreeVerdict {
    pub m: u32,
    pub d: u32,
    pub n: u32,
    pub pass: bool,
}

impl<K: Field> PointedHypersurface<K> {
    pub fn new(f: Polynomial<K>, point: Vec<K>) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.evaluate(&point)?.is_zero() {
            return Err(Error::PointNotOnHypersurface);
        }
        let decomposition = GradedDecomposition::at(&f, &point)?;
        Ok(PointedHypersurface { f, point, decomposition })
    }

    /// The hypersurface through the origin.
    pub fn at_origin(f: Polynomial<K>) -> Result<Self> {
        let zero = vec![K::zero(f.field()); f.arity()];
        Self::new(f, zero)
    }

    pub fn polynomial(&self) -> &Polynomial<K> {
        &self.f
    }

    pub fn point(&self) -> &[K] {
        &self.point
    }

    pub fn arity(&self) -> usize {
        self.f.arity()
    }

    pub fn degree(&self) -> u32 {
        self.f.degree().expect("nonzero")
    }

    pub fn decomposition(&self) -> &GradedDecomposition<K> {
        &self.decomposition
    }

    /// `f` translated so the base point is the origin.
    pub fn local_polynomial(&self) -> Polynomial<K> {
        self.decomposition.recombine()
    }

    pub fn multiplicity_at(&self) -> u32 {
        self.decomposition.min_degree()
    }

    /// Lowest graded piece `f_m`.
    pub fn tangent_cone_at(&self) -> &Polynomial<K> {
        self.decomposition.lowest()
    }

    pub fn contains_line_through(&self, settings: &Settings) -> Result<LineSearchResult<K>> {
        let pieces: Vec<Polynomial<K>> = self.decomposition.components().iter().map(|(_, p)| p.clone()).collect();
        let direction_ideal = Ideal::new(self.arity(), self.f.field().clone(), pieces)?;
        let contains_line = direction_ideal.projective_zero_exists(settings)?;
        Ok(LineSearchResult { contains_line, direction_ideal })
    }

    /// `m <= d - n` for a hypersurface of dimension `n` without lines through the point.
    pub fn check_mult_degree_bound(&self, settings: &Settings) -> Result<MultDegreeVerdict> {
        if self.contains_line_through(settings)?.contains_line {
            return Err(Error::LinePresent);
        }
        let (m, d, n) = (self.multiplicity_at(), self.degree(), self.arity() as u32 - 1);
        Ok(MultDegreeVerdict { m, d, n, pass: m + n <= d })
    }
}

/// Whether some line through the origin lies in `V(I)`: every graded piece of
/// every generator must vanish along its direction.
pub fn ideal_contains_line_through_origin<K: Field>(ideal: &Ideal<K>, settings: &Settings) -> Result<bool> {
    let mut pieces = vec![];
    for g in ideal.generators() {
        let zero = vec![K::zero(ideal.field()); ideal.arity()];
        if !g.evaluate(&zero)?.is_zero() {
            return Ok(false);
        }
        pieces.extend(g.graded_pieces()?.components().iter().map(|(_, p)| p.clone()));
    }
    Ideal::new(ideal.arity(), ideal.field().clone(), pieces)?.projective_zero_exists(settings)
}

pub fn smooth_at<K: Field>(f: &Polynomial<K>, point: &[K]) -> Result<bool> {
    if !f.evaluate(point)?.is_zero() {
        return Err(Error::PointNotOnHypersurface);
    }
    for df in f.jacobian() {
        if !df.evaluate(point)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Projective dimension of the singular locus of the closure of `V(f)`:
/// -1 when smooth, 0 for finitely many singular points.
pub fn singular_locus_dimension<K: Field>(f: &Polynomial<K>, settings: &Settings) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.arity();
    let big = f.homogenize(n);
    let mut gens = vec![big.clone()];
    gens.extend(big.jacobian());
    let ideal = Ideal::new(n + 1, f.field().clone(), gens)?;
    let dim = ideal.hilbert_data(settings)?.dimension;
    // The hypersurface itself has dimension n - 1; a singular locus that large
    // means a multiple component.
    if dim >= n as i64 - 1 {
        return Err(Error::NotSquarefree);
    }
    Ok(dim)
}

/// Multiplicity at `point` of the curve `V(C)`, as the degree of its tangent cone.
pub fn curve_multiplicity_at<K: Field>(curve: &Ideal<K>, point: &[K], settings: &Settings) -> Result<u64> {
    if !curve.vanishes_at(point)? {
        return Err(Error::PointNotOnHypersurface);
    }
    let dim = curve.affine_hilbert_data(settings)?.dimension;
    if dim != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: dim });
    }
    let cone = curve.translate(point)?.tangent_cone_ideal(settings)?;
    let h = cone.hilbert_data(settings)?;
    if h.dimension != 0 {
        return Err(Error::DimensionMismatch { expected: 0, found: h.dimension });
    }
    Ok(h.degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rational_int, Rational};
    use crate::ideal::QIdeal;
    use crate::poly::QPoly;

    fn q(terms: &[(i64, &[u16])]) -> QPoly {
        QPoly::from_i64_terms(terms[0].1.len(), terms)
    }

    fn s() -> Settings {
        Settings::default()
    }

    #[test]
    fn multiplicity_and_cone() {
        let cusp = PointedHypersurface::at_origin(q(&[(1, &[0, 2]), (-1, &[3, 0])])).unwrap();
        assert_eq!(cusp.multiplicity_at(), 2);
        assert_eq!(cusp.tangent_cone_at(), &q(&[(1, &[0, 2])]));
        let smooth = PointedHypersurface::at_origin(q(&[(1, &[1, 0]), (1, &[0, 3])])).unwrap();
        assert_eq!(smooth.multiplicity_at(), 1);
        assert_eq!(PointedHypersurface::at_origin(q(&[(1, &[1, 0]), (1, &[0, 0])])).unwrap_err(), Error::PointNotOnHypersurface);
    }

    #[test]
    fn lines() {
        let cone = PointedHypersurface::at_origin(q(&[(1, &[1, 1, 0]), (-1, &[0, 0, 2])])).unwrap();
        assert!(cone.contains_line_through(&s()).unwrap().contains_line);
        assert_eq!(cone.check_mult_degree_bound(&s()).unwrap_err(), Error::LinePresent);
        // x^2 + y^2 + z^2 + x^3 + y^3 + z^3 + x^4+y^4+z^4: no common zero of the three pieces
        let f = q(&[
            (1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2]),
            (1, &[3, 0, 0]), (-1, &[0, 3, 0]), (2, &[0, 0, 3]),
            (1, &[4, 0, 0]), (3, &[0, 4, 0]), (1, &[0, 0, 4]), (1, &[1, 1, 2]),
        ]);
        let x = PointedHypersurface::at_origin(f).unwrap();
        assert!(!x.contains_line_through(&s()).unwrap().contains_line);
        let v = x.check_mult_degree_bound(&s()).unwrap();
        assert_eq!((v.m, v.d, v.n, v.pass), (2, 4, 2, true));
    }

    #[test]
    fn smoothness() {
        let z = [rational_int(0), rational_int(0), rational_int(0)];
        assert!(!smooth_at(&q(&[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]), &z).unwrap());
        assert!(smooth_at(&q(&[(1, &[1, 0]), (1, &[2, 0])]), &z[..2]).unwrap());
        // smooth quadric x^2 + y^2 + z^2 - 1
        let quadric = q(&[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2]), (-1, &[0, 0, 0])]);
        assert_eq!(singular_locus_dimension(&quadric, &s()).unwrap(), -1);
        // cone over the smooth conic: vertex only
        let cone = q(&[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (-1, &[0, 0, 2])]);
        assert_eq!(singular_locus_dimension(&cone, &s()).unwrap(), 0);
        let double = &quadric * &quadric;
        assert_eq!(singular_locus_dimension(&double, &s()).unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn curve_multiplicities() {
        let o: Vec<Rational> = vec![rational_int(0); 3];
        // node y^2 - x^2 - x^3 in the plane z = 0
        let node = QIdeal::from_generators(vec![q(&[(1, &[0, 2, 0]), (-1, &[2, 0, 0]), (-1, &[3, 0, 0])]), q(&[(1, &[0, 0, 1])])]).unwrap();
        assert_eq!(curve_multiplicity_at(&node, &o, &s()).unwrap(), 2);
        // monomial curve (t^3, t^4, t^5): y^2 - xz, x^3 - yz, z^2 - x^2 y
        let mono = QIdeal::from_generators(vec![
            q(&[(1, &[0, 2, 0]), (-1, &[1, 0, 1])]),
            q(&[(1, &[3, 0, 0]), (-1, &[0, 1, 1])]),
            q(&[(1, &[0, 0, 2]), (-1, &[2, 1, 0])]),
        ])
        .unwrap();
        assert_eq!(curve_multiplicity_at(&mono, &o, &s()).unwrap(), 3);
        // a smooth point of the twisted cubic, away from the origin
        let tw = QIdeal::from_generators(vec![q(&[(1, &[0, 1, 0]), (-1, &[2, 0, 0])]), q(&[(1, &[0, 0, 1]), (-1, &[3, 0, 0])])]).unwrap();
        let p = vec![rational_int(2), rational_int(4), rational_int(8)];
        assert_eq!(curve_multiplicity_at(&tw, &p, &s()).unwrap(), 1);
        let surface = QIdeal::from_generators(vec![q(&[(1, &[0, 0, 1])])]).unwrap();
        assert_eq!(curve_multiplicity_at(&surface, &o, &s()).unwrap_err(), Error::DimensionMismatch { expected: 1, found: 2 });
    }
}
