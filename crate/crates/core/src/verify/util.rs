//! Shared helpers for the verification suites: seeded random points and
//! cones, and the independent face-sum transcription of the valuation used
//! as an oracle against the fast paths.

use crate::cones::{cone_from_generators, Cone};
use crate::ratgeom::{Rat, RatMat, RatVec};
use crate::rootsys::RootSystem;
use crate::Result;
use num::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(tag))
}

pub fn random_vec(rng: &mut ChaCha8Rng, dim: usize, span: i64) -> RatVec {
    RatVec::new(
        (0..dim)
            .map(|_| Rat::new(rng.random_range(-span..=span).into(), rng.random_range(1i64..=5).into()))
            .collect(),
    )
}

pub fn random_regular(rng: &mut ChaCha8Rng, sys: &RootSystem, span: i64) -> RatVec {
    loop {
        let v = random_vec(rng, sys.dim(), span);
        if sys.is_regular(&v) {
            return v;
        }
    }
}

pub fn random_r_regular(rng: &mut ChaCha8Rng, sys: &RootSystem, span: i64) -> RatVec {
    loop {
        let v = random_vec(rng, sys.dim(), span);
        if sys.is_r_regular(&v) {
            return v;
        }
    }
}

pub fn random_rvee_regular(rng: &mut ChaCha8Rng, sys: &RootSystem, span: i64) -> RatVec {
    loop {
        let v = random_vec(rng, sys.dim(), span);
        if sys.is_rvee_regular(&v) {
            return v;
        }
    }
}

/// Random cone from a handful of integer generators.
pub fn random_cone(rng: &mut ChaCha8Rng, dim: usize, max_gens: usize) -> Result<Cone> {
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<RatVec> = (0..count)
        .map(|_| RatVec::new((0..dim).map(|_| Rat::new(rng.random_range(-4i64..=4).into(), 1.into())).collect()))
        .collect();
    cone_from_generators(&gens, dim)
}

/// Random full-dimensional pointed cone (retries until both hold).
pub fn random_pointed_fulldim_cone(rng: &mut ChaCha8Rng, dim: usize) -> Result<Cone> {
    loop {
        let c = random_cone(rng, dim, dim + 2)?;
        if c.is_full_dim() && c.lineality_dim() == 0 {
            return Ok(c);
        }
    }
}

/// Random simplicial full-dimensional cone.
pub fn random_simplicial_cone(rng: &mut ChaCha8Rng, dim: usize) -> Result<Cone> {
    loop {
        let gens: Vec<RatVec> = (0..dim)
            .map(|_| {
                RatVec::new(
                    (0..dim)
                        .map(|_| Rat::new(rng.random_range(-4i64..=4).into(), 1.into()))
                        .collect(),
                )
            })
            .collect();
        let m = RatMat::from_cols(&gens);
        if m.inverse().is_some() {
            return cone_from_generators(&gens, dim);
        }
    }
}

/// Random symmetric positive definite matrix `A^T A + I`.
pub fn random_gram(rng: &mut ChaCha8Rng, dim: usize) -> RatMat {
    let a = RatMat::from_rows(
        &(0..dim)
            .map(|_| {
                RatVec::new(
                    (0..dim)
                        .map(|_| Rat::new(rng.random_range(-2i64..=2).into(), 1.into()))
                        .collect(),
                )
            })
            .collect::<Vec<_>>(),
    );
    let mut g = a.transpose().mul_mat(&a);
    for i in 0..dim {
        let v = g.get(i, i) + Rat::new(1.into(), 1.into());
        g.set(i, i, v);
    }
    g
}

/// Direct transcription of the face-sum definition of the closed-cone
/// valuation; the independent oracle for the fast paths.
pub fn psi_by_definition(c: &Cone, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    let dim = c.ambient_dim();
    let mut total = 0;
    for face in c.faces() {
        let mut gens = c.generators();
        for g in face.cone.generators() {
            gens.push(g.clone());
            gens.push(g.neg());
        }
        let ext = cone_from_generators(&gens, dim)?;
        let fstar = face
            .cone
            .generators()
            .iter()
            .all(|g| !lambda.dot(g).is_negative());
        if ext.contains(x) && fstar {
            total += if face.cone.span_dim() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(total)
}

/// Face-sum transcription of the open-cone valuation.
pub fn phi_by_definition(c: &Cone, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    let dim = c.ambient_dim();
    let mut total = 0;
    for face in c.faces() {
        let mut gens = c.generators();
        for g in face.cone.generators() {
            gens.push(g.clone());
            gens.push(g.neg());
        }
        let ext = cone_from_generators(&gens, dim)?;
        let fstar = face
            .cone
            .generators()
            .iter()
            .all(|g| !lambda.dot(g).is_negative());
        if ext.relint_contains(x) && fstar {
            total += if face.cone.span_dim() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(total)
}
