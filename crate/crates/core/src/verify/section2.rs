//! Wall crossing in the point variable, the duality between the chamber
//! sums of a system and its coroot system, and the half-dimension integer.

use super::util::*;
use super::{Recorder, SuiteConfig, VerifyReport};
use crate::constants::psi_r;
use crate::ratgeom::{Rat, RatVec};
use crate::rootsys::{root_system, subsystem_wall, RootSystem};
use crate::Result;
use num::{Signed, Zero};

pub fn run(system: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut rec = Recorder::new("section2", system, cfg.seed);
    let sys = root_system(system)?;
    if !sys.minus_one_in_weyl() {
        rec.check_true("minus-one-present", system, false);
        return Ok(rec.finish());
    }
    q_value(&mut rec, &sys, system)?;
    coroot_rays(&mut rec, &sys)?;
    point_wall_crossing(&mut rec, &sys, cfg)?;
    duality(&mut rec, &sys, cfg)?;
    Ok(rec.finish())
}

/// `q(R) = (|R^+| + dim)/2` against the known small values.
fn q_value(rec: &mut Recorder, sys: &RootSystem, system: &str) -> Result<()> {
    let q = sys.q_invariant()?;
    let expected = match system {
        "A1" => Some(1),
        "A1xA1" => Some(2),
        "B2" | "C2" => Some(3),
        "G2" => Some(4),
        "B3" | "C3" => Some(6),
        _ => None,
    };
    if let Some(e) = expected {
        rec.check_eq("q-value", system, e, q);
    }
    rec.check_eq(
        "q-parity",
        system,
        0,
        (sys.positive_root_count() + sys.dim()) % 2,
    );
    Ok(())
}

/// With `-1` acting, every coroot spans a 1-dimensional chamber face, so
/// ray-regularity implies ordinary regularity.
fn coroot_rays(rec: &mut Recorder, sys: &RootSystem) -> Result<()> {
    for co in sys.coroots() {
        rec.check_true(
            "coroot-spans-chamber-ray",
            format!("coroot {co}"),
            sys.chamber_rays().contains(&co.primitive()),
        );
    }
    Ok(())
}

/// Crossing a root wall in the point variable drops to twice the wall
/// system's chamber sum, for every base chamber with that wall and every
/// adjacent chamber pair on its side.
fn point_wall_crossing(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    // exhaustive over chamber pairs for the small groups, sampled above
    let exhaustive = sys.weyl_order() <= 12;
    let transversals = if exhaustive {
        cfg.cases.map(|c| (c / 20).max(2) as usize).unwrap_or(10)
    } else {
        2
    };
    for (pair_pos, &rep) in sys.pair_reps().iter().enumerate() {
        let alpha = &sys.roots()[rep];
        let wall = subsystem_wall(sys, rep)?;
        // chambers having the wall as a facet
        let with_wall: Vec<usize> = sys
            .chambers()
            .iter()
            .filter(|c| {
                let mut flipped = c.signs().to_vec();
                flipped[pair_pos] = !flipped[pair_pos];
                sys.chamber_by_signs(&flipped).is_some()
                    && c.closure()
                        .facet_normals()
                        .iter()
                        .any(|f| f.sign_canonical() == alpha.sign_canonical())
            })
            .map(|c| c.index)
            .collect();
        let c0_list: Vec<usize> = if exhaustive {
            with_wall.clone()
        } else {
            with_wall.iter().copied().take(4).collect()
        };
        for &c0_idx in &c0_list {
            let c0 = sys.chamber(c0_idx);
            let c0_side = c0.signs()[pair_pos];
            // the wall chamber determined by c0
            let d0 = {
                let refl = sys.reflection_matrix(rep);
                let p = c0.interior_point();
                let mid = p.add(&refl.mul_vec(&p)).scale(&Rat::new(1.into(), 2.into()));
                if wall.system.dim() == 0 {
                    None
                } else {
                    Some(wall.system.chamber_of(&wall.map.to_sub_point(&mid)?)?)
                }
            };
            let d_list: Vec<usize> = if exhaustive {
                with_wall.clone()
            } else {
                with_wall.iter().copied().take(4).collect()
            };
            for &d_idx in &d_list {
                let d = sys.chamber(d_idx);
                if d.signs()[pair_pos] != c0_side {
                    continue;
                }
                let mut rng = rng_for(cfg.seed, (700 + c0_idx * 97 + d_idx) as u64);
                let mut done = 0;
                let mut guard = 0;
                while done < transversals && guard < 200 {
                    guard += 1;
                    // facet-interior point of d's wall facet, then step off it
                    let refl = sys.reflection_matrix(rep);
                    let p = {
                        let mut q = RatVec::zero(sys.dim());
                        for ray in sys.coweight_rays() {
                            let c: i64 = rand::Rng::random_range(&mut rng, 1..64);
                            q = q.add(&ray.scale(&Rat::new(c.into(), 16.into())));
                        }
                        sys.weyl()[d_idx].matrix.mul_vec(&q)
                    };
                    let y = p.add(&refl.mul_vec(&p)).scale(&Rat::new(1.into(), 2.into()));
                    let off_other = sys
                        .roots()
                        .iter()
                        .enumerate()
                        .all(|(i, r)| i == rep || i == sys.neg_of(rep) || !r.dot(&y).is_zero());
                    if !off_other || y.is_zero() {
                        continue;
                    }
                    // transversal: from y toward the chamber d
                    let t = p.sub(&y);
                    let mut eps = Rat::new(1.into(), 2.into());
                    for (i, r) in sys.roots().iter().enumerate() {
                        if i == rep || i == sys.neg_of(rep) {
                            continue;
                        }
                        let num = r.dot(&y);
                        let den = r.dot(&t);
                        if den.is_zero() {
                            continue;
                        }
                        let bound = (num / den).abs() / Rat::new(2.into(), 1.into());
                        if bound < eps {
                            eps = bound;
                        }
                    }
                    let x = y.add(&t.scale(&eps));
                    let x_prime = y.sub(&t.scale(&eps));
                    if !sys.is_regular(&x) || !sys.is_regular(&x_prime) {
                        continue;
                    }
                    // x on the same side as c0
                    if sys.roots()[rep].dot(&x).is_positive() != c0_side {
                        continue;
                    }
                    let lambda = random_vec(&mut rng, sys.dim(), 6);
                    let lhs =
                        psi_r(sys, &c0, &x, &lambda)? - psi_r(sys, &c0, &x_prime, &lambda)?;
                    let rhs = if wall.system.dim() == 0 {
                        2
                    } else {
                        let y_sub = wall.map.to_sub_point(&y)?;
                        let l_sub = wall.map.to_sub_functional(&lambda);
                        2 * psi_r(
                            &wall.system,
                            &wall.system.chamber(d0.as_ref().unwrap().index),
                            &y_sub,
                            &l_sub,
                        )?
                    };
                    rec.check_eq(
                        "point-wall-crossing",
                        format!(
                            "alpha={alpha} C0={} D={} x={x} lambda={lambda}",
                            c0.word(),
                            d.word()
                        ),
                        rhs,
                        lhs,
                    );
                    done += 1;
                }
                rec.check_eq(
                    "point-wall-crossing-count",
                    format!("alpha={alpha} C0={} D={}", c0.word(), d.word()),
                    transversals,
                    done,
                );
            }
        }
    }
    Ok(())
}

/// The chamber sum of the coroot system evaluates the same integers up to
/// the half-dimension sign.
fn duality(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let cases = cfg.cases.unwrap_or(100);
    let mut rng = rng_for(cfg.seed, 720);
    let dual = sys.dual_system();
    let q = sys.q_invariant()?;
    let sign = if q % 2 == 0 { 1 } else { -1 };
    let base = sys.base_chamber();
    let dual_base = sys.dual_chamber(&base);
    for _ in 0..cases {
        let x = random_rvee_regular(&mut rng, sys, 8);
        let l = random_r_regular(&mut rng, sys, 8);
        rec.check_eq(
            "chamber-sum-duality",
            format!("x={x} l={l}"),
            sign * psi_r(dual, &dual.chamber(dual_base.index), &l, &x)?,
            psi_r(sys, &base, &x, &l)?,
        );
    }
    Ok(())
}
