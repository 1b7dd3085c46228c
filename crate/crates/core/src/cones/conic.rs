//! Integer combinations of indicator functions of closed cones, with the
//! `*` (relative interior) and `^` (duality) involutions and certified
//! extensional equality.

use super::{arrangement_cells, cone_from_generators, Cone};
use crate::ratgeom::{Rat, RatVec};
use crate::{Error, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// A finite integer combination of characteristic functions of closed convex
/// polyhedral cones. Terms are kept merged with non-zero coefficients, so the
/// representation is canonical up to extensional equality of the summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicFunction {
    ambient_dim: usize,
    terms: Vec<(i64, Cone)>,
}

impl ConicFunction {
    pub fn zero(ambient_dim: usize) -> Self {
        ConicFunction {
            ambient_dim,
            terms: Vec::new(),
        }
    }

    pub fn new(ambient_dim: usize, raw_terms: Vec<(i64, Cone)>) -> Result<Self> {
        let mut merged: BTreeMap<(Vec<RatVec>, Vec<RatVec>), (i64, Cone)> = BTreeMap::new();
        for (coeff, cone) in raw_terms {
            if cone.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "conic term has ambient dim {}, expected {ambient_dim}",
                    cone.ambient_dim()
                )));
            }
            let key = term_key(&cone);
            merged
                .entry(key)
                .and_modify(|(c, _)| *c += coeff)
                .or_insert((coeff, cone));
        }
        Ok(ConicFunction {
            ambient_dim,
            terms: merged
                .into_values()
                .filter(|(c, _)| *c != 0)
                .collect(),
        })
    }

    pub fn indicator(cone: Cone) -> Self {
        let dim = cone.ambient_dim();
        ConicFunction {
            ambient_dim: dim,
            terms: vec![(1, cone)],
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn terms(&self) -> &[(i64, Cone)] {
        &self.terms
    }

    pub fn eval(&self, x: &RatVec) -> i64 {
        self.terms
            .iter()
            .map(|(c, cone)| if cone.contains(x) { *c } else { 0 })
            .sum()
    }

    pub fn add(&self, other: &ConicFunction) -> Result<ConicFunction> {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ConicFunction::new(self.ambient_dim, terms)
    }

    pub fn scale(&self, c: i64) -> ConicFunction {
        ConicFunction {
            ambient_dim: self.ambient_dim,
            terms: if c == 0 {
                Vec::new()
            } else {
                self.terms.iter().map(|(k, cone)| (c * k, cone.clone())).collect()
            },
        }
    }

    pub fn sub(&self, other: &ConicFunction) -> Result<ConicFunction> {
        self.add(&other.scale(-1))
    }
}

fn term_key(cone: &Cone) -> (Vec<RatVec>, Vec<RatVec>) {
    (cone.rays().to_vec(), cone.lineality().to_vec())
}

/// The involution `*`: on an indicator it is
/// `(xi_C)^* = (-1)^{dim C} xi_{relint C}`, written back in closed cones by
/// expanding the relative interior over the face lattice.
pub fn conic_star(f: &ConicFunction) -> ConicFunction {
    let mut terms: Vec<(i64, Cone)> = Vec::new();
    for (coeff, cone) in f.terms() {
        for face in cone.faces() {
            let sign = if face.cone.span_dim() % 2 == 0 { 1 } else { -1 };
            terms.push((coeff * sign, face.cone.clone()));
        }
    }
    ConicFunction::new(f.ambient_dim(), terms).expect("star keeps the ambient dimension")
}

/// The duality transform `^` from conic functions on `X` to conic functions
/// on `X*`: `(xi_C)^ = (-1)^{dim X - dim C*} xi_{relint C*}`.
pub fn conic_wedge(f: &ConicFunction) -> ConicFunction {
    let dim = f.ambient_dim();
    let global = if dim % 2 == 0 { 1 } else { -1 };
    let mut terms: Vec<(i64, Cone)> = Vec::new();
    for (coeff, cone) in f.terms() {
        let dual = cone.dual();
        for face in dual.faces() {
            let sign = if face.cone.span_dim() % 2 == 0 { 1 } else { -1 };
            terms.push((coeff * global * sign, face.cone.clone()));
        }
    }
    ConicFunction::new(dim, terms).expect("wedge keeps the ambient dimension")
}

/// Decides `f = g` pointwise on all of `X`.
///
/// A seeded random-sample pre-filter catches most inequalities; equality is
/// then certified by refining all bounding hyperplanes of `f - g` into the
/// cell complex of their arrangement and evaluating the difference at one
/// relative-interior sample point per cell.
pub fn conic_equal(f: &ConicFunction, g: &ConicFunction) -> Result<bool> {
    if f.ambient_dim() != g.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "conic_equal requires matching ambient dimensions".into(),
        ));
    }
    let diff = f.sub(g)?;
    if diff.terms().is_empty() {
        return Ok(true);
    }
    let dim = diff.ambient_dim();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let x = RatVec::new(
            (0..dim)
                .map(|_| Rat::new(rng.random_range(-50i64..=50).into(), rng.random_range(1i64..=7).into()))
                .collect(),
        );
        if diff.eval(&x) != 0 {
            return Ok(false);
        }
    }

    let mut normals: Vec<RatVec> = Vec::new();
    for (_, cone) in diff.terms() {
        for h in cone.facet_normals().iter().chain(cone.equalities()) {
            let h = h.sign_canonical();
            if !h.is_zero() && !normals.contains(&h) {
                normals.push(h);
            }
        }
    }
    for cell in arrangement_cells(&normals, dim) {
        if diff.eval(&cell.sample) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four cones of the structural relation: for a cone `C` and a non-zero
/// form `l`, `xi_C + xi_{C0} - xi_{C+} - xi_{C-} = 0` where the pieces cut
/// `C` by the sign of `l`.
pub fn slice_relation(cone: &Cone, l: &RatVec) -> Result<ConicFunction> {
    let dim = cone.ambient_dim();
    let mut plus = cone.inequalities();
    plus.push(l.clone());
    let mut minus = cone.inequalities();
    minus.push(l.neg());
    let mut zero = cone.inequalities();
    zero.push(l.clone());
    zero.push(l.neg());
    let c_plus = super::cone_from_inequalities(&plus, dim)?;
    let c_minus = super::cone_from_inequalities(&minus, dim)?;
    let c_zero = super::cone_from_inequalities(&zero, dim)?;
    ConicFunction::new(
        dim,
        vec![(1, cone.clone()), (1, c_zero), (-1, c_plus), (-1, c_minus)],
    )
}

/// `xi_{relint C}` as a conic function (the face-lattice expansion).
pub fn relint_indicator(cone: &Cone) -> ConicFunction {
    let dim = cone.ambient_dim();
    let outer = if cone.span_dim() % 2 == 0 { 1 } else { -1 };
    let terms = cone
        .faces()
        .iter()
        .map(|f| {
            let sign = if f.cone.span_dim() % 2 == 0 { 1 } else { -1 };
            (outer * sign, f.cone.clone())
        })
        .collect();
    ConicFunction::new(dim, terms).expect("faces share the ambient dimension")
}

/// Indicator of a direct sum `A + B` of cones lying in complementary
/// subspaces, as a single cone.
pub fn sum_cone(a: &Cone, b: &Cone) -> Result<Cone> {
    let mut gens = a.generators();
    gens.extend(b.generators());
    cone_from_generators(&gens, a.ambient_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::cone_from_generators;
    use crate::ratgeom::RatVec;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    fn ray(dir: &[i64]) -> Cone {
        cone_from_generators(&[v(dir)], dir.len()).unwrap()
    }

    #[test]
    fn star_of_nonneg_ray_dim1() {
        // (xi_{R>=0})^* = -(xi_{R>=0} - xi_{0})
        let c = ray(&[1]);
        let star = conic_star(&ConicFunction::indicator(c.clone()));
        let origin = cone_from_generators(&[], 1).unwrap();
        let expected =
            ConicFunction::new(1, vec![(-1, c), (1, origin)]).unwrap();
        assert!(conic_equal(&star, &expected).unwrap());
    }

    #[test]
    fn star_fixes_origin() {
        let origin = cone_from_generators(&[], 2).unwrap();
        let f = ConicFunction::indicator(origin);
        assert!(conic_equal(&conic_star(&f), &f).unwrap());
    }

    #[test]
    fn wedge_of_nonneg_ray_dim1() {
        // (xi_{R>=0})^ = xi_{(0,inf)}
        let c = ray(&[1]);
        let w = conic_wedge(&ConicFunction::indicator(c.clone()));
        let expected = relint_indicator(&c);
        assert!(conic_equal(&w, &expected).unwrap());
    }

    #[test]
    fn wedge_of_open_ray_dim1() {
        // (xi_{C°})^ = (-1)^{dim C} xi_{-C*}
        let c = ray(&[1]);
        let w = conic_wedge(&relint_indicator(&c));
        let neg = ray(&[-1]);
        let expected = ConicFunction::indicator(neg).scale(-1);
        assert!(conic_equal(&w, &expected).unwrap());
    }

    #[test]
    fn star_involution_random_two_term() {
        let c = cone_from_generators(&[v(&[1, 0]), v(&[1, 2])], 2).unwrap();
        let d = cone_from_generators(&[v(&[0, 1]), v(&[-1, -1])], 2).unwrap();
        let f = ConicFunction::new(2, vec![(3, c), (-1, d)]).unwrap();
        let ss = conic_star(&conic_star(&f));
        assert!(conic_equal(&ss, &f).unwrap());
    }

    #[test]
    fn wedge_star_four_fold_identity() {
        let c = cone_from_generators(&[v(&[1, 0]), v(&[1, 2])], 2).unwrap();
        let d = cone_from_generators(&[v(&[0, 1])], 2).unwrap();
        let f = ConicFunction::new(2, vec![(2, c), (1, d)]).unwrap();
        let g = conic_star(&conic_wedge(&conic_star(&conic_wedge(&f))));
        assert!(conic_equal(&g, &f).unwrap());
    }

    #[test]
    fn slice_relation_is_zero() {
        let plane = cone_from_generators(&[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])], 2)
            .unwrap();
        let rel = slice_relation(&plane, &v(&[1, 0])).unwrap();
        assert!(conic_equal(&rel, &ConicFunction::zero(2)).unwrap());
        // star and wedge are well-defined: they kill the relation too
        assert!(conic_equal(&conic_star(&rel), &ConicFunction::zero(2)).unwrap());
        assert!(conic_equal(&conic_wedge(&rel), &ConicFunction::zero(2)).unwrap());
    }

    #[test]
    fn closed_vs_open_ray_differ_at_origin() {
        let c = ray(&[1]);
        let f = ConicFunction::indicator(c.clone());
        let g = relint_indicator(&c);
        assert!(!conic_equal(&f, &g).unwrap());
    }

    #[test]
    fn permuted_generators_same_cone() {
        let a = cone_from_generators(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        let b = cone_from_generators(&[v(&[0, 1]), v(&[2, 0])], 2).unwrap();
        assert_eq!(a, b);
        assert!(conic_equal(
            &ConicFunction::indicator(a),
            &ConicFunction::indicator(b)
        )
        .unwrap());
    }
}
