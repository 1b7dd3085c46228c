//! Nearest-point projection onto a cone and the face-sum identity it
//! satisfies.
//!
//! A positive definite symmetric form identifies `X` with `X*`; the closest
//! point of a closed cone to `x` lies in the relative interior of a unique
//! face `F`, characterized by `x - x0` pairing non-positively with the cone
//! and vanishing on `F`.

use super::{Cone, Face};
use crate::ratgeom::{solve_linear, RatMat, RatVec};
use crate::{Error, Result};
use num::Signed;

fn check_gram(cone: &Cone, gram: &RatMat) -> Result<()> {
    if gram.rows() != cone.ambient_dim() || gram.cols() != cone.ambient_dim() {
        return Err(Error::DimensionMismatch(
            "gram matrix must match the ambient dimension".into(),
        ));
    }
    if !gram.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(())
}

/// Orthogonal projection of `x` onto the span of `basis` with respect to
/// `gram`. Returns the projected point.
fn project_span(basis: &[RatVec], gram: &RatMat, x: &RatVec) -> RatVec {
    if basis.is_empty() {
        return RatVec::zero(x.dim());
    }
    let b = RatMat::from_cols(basis);
    let bt_g = b.transpose().mul_mat(gram);
    let normal = bt_g.mul_mat(&b);
    let rhs = bt_g.mul_vec(x);
    let coeffs = solve_linear(&normal, &rhs)
        .expect("dimensions agree")
        .expect("gram restricted to a subspace is invertible");
    b.mul_vec(&coeffs)
}

/// The unique face `F` with the nearest point `x0` of the cone in its
/// relative interior, together with `x0` itself.
pub fn nearest_face(cone: &Cone, gram: &RatMat, x: &RatVec) -> Result<(Face, RatVec)> {
    check_gram(cone, gram)?;
    if x.dim() != cone.ambient_dim() {
        return Err(Error::DimensionMismatch("nearest_face: point dimension".into()));
    }
    let mut found: Option<(Face, RatVec)> = None;
    for face in cone.faces() {
        let span_basis: Vec<RatVec> = face.cone.generators();
        let x0 = project_span(&span_basis, gram, x);
        if !face.cone.relint_contains(&x0) {
            continue;
        }
        // x - x0 must lie in -F^perp: as a linear form, gram*(x - x0) is
        // non-positive on the cone (vanishing on F holds by construction).
        let form = gram.mul_vec(&x.sub(&x0));
        if !cone.generators().iter().all(|g| !form.dot(g).is_positive()) {
            continue;
        }
        if found.is_some() {
            return Err(Error::Internal(
                "nearest-face characterization accepted two faces".into(),
            ));
        }
        found = Some((face.clone(), x0));
    }
    found.ok_or_else(|| Error::Internal("nearest-face characterization accepted no face".into()))
}

/// The face sum
/// `sum_F psi_{C+span F}(-y, -p_{span(F)^perp}(x)) * xi_{relint F}(p_{span F}(x))`,
/// which collapses to `(-1)^{dim C} xi_{relint C}(y)`.
pub fn langlands_lhs(cone: &Cone, gram: &RatMat, x: &RatVec, y: &RatVec) -> Result<i64> {
    check_gram(cone, gram)?;
    if x.dim() != cone.ambient_dim() || y.dim() != cone.ambient_dim() {
        return Err(Error::DimensionMismatch("langlands_lhs: point dimension".into()));
    }
    let mut total = 0i64;
    let ext = cone.ext_cones();
    for (face, ext_cone) in cone.faces().iter().zip(ext) {
        let p_span = project_span(&face.cone.generators(), gram, x);
        if !face.cone.relint_contains(&p_span) {
            continue;
        }
        let p_perp = x.sub(&p_span);
        // Identify X with X* through the form.
        let lam = gram.mul_vec(&p_perp).neg();
        total += ext_cone.psi(&y.neg(), &lam);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::cone_from_generators;
    use crate::ratgeom::{rat, RatVec};

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    #[test]
    fn quadrant_projections() {
        let c = cone_from_generators(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        let gram = RatMat::identity(2);
        let (f, x0) = nearest_face(&c, &gram, &v(&[-1, 2])).unwrap();
        assert_eq!(x0, v(&[0, 2]));
        assert_eq!(f.cone.span_dim(), 1);
        let (f, x0) = nearest_face(&c, &gram, &v(&[-1, -1])).unwrap();
        assert_eq!(x0, v(&[0, 0]));
        assert_eq!(f.cone.span_dim(), 0);
        let (f, x0) = nearest_face(&c, &gram, &v(&[1, 2])).unwrap();
        assert_eq!(x0, v(&[1, 2]));
        assert_eq!(f.cone.span_dim(), 2);
    }

    #[test]
    fn rejects_non_pd_gram() {
        let c = cone_from_generators(&[v(&[1, 0])], 2).unwrap();
        let mut gram = RatMat::identity(2);
        gram.set(1, 1, rat(-1));
        assert!(nearest_face(&c, &gram, &v(&[1, 1])).is_err());
    }

    #[test]
    fn langlands_dim1_examples() {
        let c = cone_from_generators(&[v(&[1])], 1).unwrap();
        let gram = RatMat::identity(1);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[1]), &v(&[1])).unwrap(), -1);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[1]), &v(&[-1])).unwrap(), 0);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[-5]), &v(&[2])).unwrap(), -1);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[3]), &v(&[0])).unwrap(), 0);
    }

    #[test]
    fn langlands_on_a_line() {
        // For a linear subspace, xi_{relint C} = xi_C.
        let c = cone_from_generators(&[v(&[1, 0]), v(&[-1, 0])], 2).unwrap();
        let gram = RatMat::identity(2);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[3, 4]), &v(&[2, 0])).unwrap(), -1);
        assert_eq!(langlands_lhs(&c, &gram, &v(&[3, 4]), &v(&[2, 1])).unwrap(), 0);
    }
}
