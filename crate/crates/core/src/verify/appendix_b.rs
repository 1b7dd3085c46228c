//! Nearest-face partition and the face-sum collapse identity, on random
//! cones and on Weyl chamber cones.

use super::util::*;
use super::{Recorder, SuiteConfig, VerifyReport};
use crate::cones::conic::{relint_indicator, sum_cone};
use crate::cones::{
    cone_from_generators, cone_from_inequalities, conic_equal, langlands_lhs, nearest_face, Cone,
    ConicFunction,
};
use crate::ratgeom::{RatMat, RatVec, SubspaceMap};
use crate::rootsys::root_system;
use crate::Result;
use num::{Signed, Zero};

pub fn run(system: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut rec = Recorder::new("appendixB", system, cfg.seed);
    if system == "generic" {
        partition_under_projection(&mut rec, cfg)?;
        collapse_on_random_cones(&mut rec, cfg)?;
        certified_corollaries_random(&mut rec, cfg)?;
    } else {
        let sys = root_system(system)?;
        let mut rng = rng_for(cfg.seed, 21);
        let mut cones: Vec<Cone> = Vec::new();
        for c in sys.chambers() {
            cones.push(c.closure());
        }
        for (i, cone) in cones.iter().enumerate() {
            collapse_for_cone(&mut rec, cone, &format!("{system} chamber {i}"), cfg.seed + i as u64)?;
            for _ in 0..4 {
                let gram = random_gram(&mut rng, cone.ambient_dim());
                let x = random_vec(&mut rng, cone.ambient_dim(), 6);
                match nearest_face(cone, &gram, &x) {
                    Ok((face, x0)) => {
                        rec.check_true(
                            "nearest-face-in-cone",
                            format!("{system} chamber {i} x={x}"),
                            cone.contains(&x0) && face.cone.relint_contains(&x0),
                        );
                    }
                    Err(e) => rec.error("nearest-face", format!("{system} chamber {i} x={x}"), &e),
                }
            }
        }
        // certified identities on the dominant chamber cone
        certify_corollaries(&mut rec, &cones[0], system)?;
    }
    Ok(rec.finish())
}

/// Exactly one face accepts each point of the space (500 random cases by
/// default).
fn partition_under_projection(rec: &mut Recorder, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 22);
    let cases = cfg.cases.unwrap_or(500);
    for i in 0..cases {
        let dim = 1 + (i as usize) % 4;
        let c = random_cone(&mut rng, dim, dim + 2)?;
        let gram = if i % 3 == 0 {
            RatMat::identity(dim)
        } else {
            random_gram(&mut rng, dim)
        };
        let x = random_vec(&mut rng, dim, 8);
        match nearest_face(&c, &gram, &x) {
            Ok((face, x0)) => {
                // the defining conditions of the accepted face
                let form = gram.mul_vec(&x.sub(&x0));
                let ok = face.cone.relint_contains(&x0)
                    && c.generators().iter().all(|g| !form.dot(g).is_positive());
                rec.check_true(
                    "unique-accepting-face",
                    format!("cone {:?} x={x}", c.rays()),
                    ok,
                );
            }
            Err(e) => rec.error("unique-accepting-face", format!("cone {:?} x={x}", c.rays()), &e),
        }
    }
    Ok(())
}

fn collapse_on_random_cones(rec: &mut Recorder, cfg: &SuiteConfig) -> Result<()> {
    let cases = cfg.cases.unwrap_or(100);
    for i in 0..cases {
        let mut rng = rng_for(cfg.seed, 2300 + i);
        let dim = 1 + (i as usize) % 4;
        let c = random_cone(&mut rng, dim, dim + 2)?;
        collapse_for_cone(rec, &c, &format!("random cone {i}"), cfg.seed + 31 * i)?;
    }
    Ok(())
}

/// The face sum collapses to the signed indicator of the open cone.
fn collapse_for_cone(rec: &mut Recorder, c: &Cone, tag: &str, seed: u64) -> Result<()> {
    let dim = c.ambient_dim();
    let mut rng = rng_for(seed, 24);
    let gram = if seed % 2 == 0 {
        RatMat::identity(dim)
    } else {
        random_gram(&mut rng, dim)
    };
    for _ in 0..5 {
        let x = random_vec(&mut rng, dim, 7);
        let y = random_vec(&mut rng, dim, 7);
        let lhs = langlands_lhs(c, &gram, &x, &y)?;
        let sign = if c.span_dim() % 2 == 0 { 1 } else { -1 };
        let rhs = if c.relint_contains(&y) { sign } else { 0 };
        rec.check_eq("face-sum-collapse", format!("{tag} x={x} y={y}"), rhs, lhs);
        // also aim y into the open cone to exercise the non-zero branch
        if !c.rays().is_empty() || c.lineality_dim() > 0 {
            let mut deep = RatVec::zero(dim);
            for g in c.rays() {
                deep = deep.add(g);
            }
            for l in c.lineality() {
                deep = deep.add(l);
            }
            if c.relint_contains(&deep) {
                let lhs = langlands_lhs(c, &gram, &x, &deep)?;
                rec.check_eq("face-sum-collapse-interior", format!("{tag} x={x}"), sign, lhs);
            }
        }
    }
    Ok(())
}

/// The two corollary identities as certified conic-function equalities, on
/// a batch of random cones.
fn certified_corollaries_random(rec: &mut Recorder, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 25);
    let cases = cfg.cases.map(|c| (c / 20).max(4)).unwrap_or(12);
    for i in 0..cases {
        let dim = 1 + (i as usize) % 3;
        let c = random_cone(&mut rng, dim, dim + 1)?;
        certify_corollaries(rec, &c, &format!("random cone {i}"))?;
    }
    Ok(())
}

fn certify_corollaries(rec: &mut Recorder, c: &Cone, tag: &str) -> Result<()> {
    let dim = c.ambient_dim();
    // F^perp for each face: generators of the dual vanishing on the face
    let perp_of = |face: &Cone| -> Result<Cone> {
        let gens: Vec<RatVec> = c
            .dual()
            .generators()
            .into_iter()
            .filter(|g| face.generators().iter().all(|f| g.dot(f).is_zero()))
            .collect();
        cone_from_generators(&gens, dim)
    };

    // sum_F (-1)^{dim F_perp} xi_{(F_perp)° + F°} against the subspace rule
    let mut terms = ConicFunction::zero(dim);
    for face in c.faces() {
        let perp = perp_of(&face.cone)?;
        let box_cone = sum_cone(&face.cone, &perp)?;
        let sign = if perp.span_dim() % 2 == 0 { 1 } else { -1 };
        terms = terms.add(&relint_indicator(&box_cone).scale(sign))?;
    }
    let expected = if c.is_subspace() {
        let sign = if (dim - c.span_dim()) % 2 == 0 { 1 } else { -1 };
        full_space_indicator(dim)?.scale(sign)
    } else {
        ConicFunction::zero(dim)
    };
    rec.check_true(
        "perp-box-identity",
        format!("{tag} cone {:?}", c.rays()),
        conic_equal(&terms, &expected)?,
    );

    // sum_F (-1)^{dim F} xi_{((F^perp)* inside)° + (F* inside)°}: zero unless
    // the cone is a subspace, where it is the signed origin indicator.
    let mut terms2 = ConicFunction::zero(dim);
    for face in c.faces() {
        let perp = perp_of(&face.cone)?;
        let f_star_in = dual_inside_span(&face.cone)?;
        let perp_star_in = dual_inside_span(&perp)?;
        let box_cone = sum_cone(&perp_star_in, &f_star_in)?;
        let sign = if face.cone.span_dim() % 2 == 0 { 1 } else { -1 };
        terms2 = terms2.add(&relint_indicator(&box_cone).scale(sign))?;
    }
    let expected2 = if c.is_subspace() {
        let origin = cone_from_generators(&[], dim)?;
        let sign = if c.span_dim() % 2 == 0 { 1 } else { -1 };
        ConicFunction::indicator(origin).scale(sign)
    } else {
        ConicFunction::zero(dim)
    };
    rec.check_true(
        "interior-box-identity",
        format!("{tag} cone {:?}", c.rays()),
        conic_equal(&terms2, &expected2)?,
    );
    Ok(())
}

/// The dual of a cone taken inside its own span (rather than the ambient
/// space), re-embedded.
fn dual_inside_span(c: &Cone) -> Result<Cone> {
    let dim = c.ambient_dim();
    let basis = crate::ratgeom::canon_subspace_basis(&c.generators(), dim);
    if basis.is_empty() {
        return cone_from_generators(&[], dim);
    }
    let map = SubspaceMap::new(basis, dim);
    let gens: Result<Vec<RatVec>> = c.generators().iter().map(|g| map.to_sub_point(g)).collect();
    let inner = cone_from_generators(&gens?, map.dim())?;
    let dual_inner = inner.dual();
    // re-embed the dual generators as the covectors supported on the span
    let out: Vec<RatVec> = dual_inner
        .generators()
        .iter()
        .map(|g| embed_functional(&map, g))
        .collect();
    cone_from_generators(&out, dim)
}

/// The covector supported on the span that restricts to `g` (coordinates
/// against the span basis).
fn embed_functional(map: &SubspaceMap, g: &RatVec) -> RatVec {
    let b = RatMat::from_cols(&map.basis);
    let gram = b.transpose().mul_mat(&b);
    let coeffs = crate::ratgeom::solve_linear(&gram, g)
        .expect("dimensions agree")
        .expect("span gram invertible");
    b.mul_vec(&coeffs)
}

fn full_space_indicator(dim: usize) -> Result<ConicFunction> {
    Ok(ConicFunction::indicator(cone_from_inequalities(&[], dim)?))
}
