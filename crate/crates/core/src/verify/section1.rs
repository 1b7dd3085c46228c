//! Chamber-sum identities: equivariance, the coarsening bijection and its
//! parities, covector wall-crossing, the vanishing criterion and the
//! twisted sums.

use super::util::*;
use super::{Recorder, SuiteConfig, VerifyReport};
use crate::constants::{psi_r, sub_psi_r, twisted_sum_coroot, twisted_sum_root};
use crate::ratgeom::{sign_character_lifts, RatVec, SignCharacter};
use crate::rootsys::{root_system, subsystem_omega, RootSystem};
use crate::Result;
use num::{Signed, Zero};

pub fn run(system: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut rec = Recorder::new("section1", system, cfg.seed);
    let sys = root_system(system)?;
    equivariance(&mut rec, &sys, cfg)?;
    coarsening_bijection(&mut rec, &sys, cfg)?;
    if sys.minus_one_in_weyl() {
        covector_wall_crossing(&mut rec, &sys, cfg)?;
        twisted_sums(&mut rec, &sys, cfg)?;
    } else {
        vanishing_without_minus_one(&mut rec, &sys, cfg)?;
    }
    character_lift_brute_force(&mut rec, &sys, cfg)?;
    Ok(rec.finish())
}

/// `psi(wC_0,x,l) = eps(w) psi(C_0,x,l) = psi(C_0, w^{-1}x, w^{-1}l)`.
fn equivariance(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 101);
    let base = sys.base_chamber();
    for _ in 0..5 {
        let x = random_vec(&mut rng, sys.dim(), 6);
        let l = random_vec(&mut rng, sys.dim(), 6);
        let base_val = psi_r(sys, &base, &x, &l)?;
        for c in sys.chambers() {
            let w = &sys.weyl()[c.index];
            rec.check_eq(
                "sign-equivariance",
                format!("w={} x={x} l={l}", w.word_string()),
                w.sign * base_val,
                psi_r(sys, &c, &x, &l)?,
            );
            let wi = &sys.weyl()[w.inv];
            rec.check_eq(
                "move-the-points",
                format!("w={} x={x} l={l}", w.word_string()),
                psi_r(sys, &c, &x, &l)?,
                psi_r(
                    sys,
                    &base,
                    &wi.matrix.mul_vec(&x),
                    &wi.dual_matrix.mul_vec(&l),
                )?,
            );
        }
    }
    Ok(())
}

/// The chamber coarsening along a ray: bijection, length preservation, the
/// opposite chamber, and the parity statements.
fn coarsening_bijection(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let _ = cfg;
    let rays: Vec<RatVec> = sys.chamber_rays().to_vec();
    for omega in &rays {
        let om = subsystem_omega(sys, omega)?;
        // chambers whose closures contain omega
        let holding: Vec<usize> = sys
            .chambers()
            .iter()
            .filter(|c| c.closure().contains(omega))
            .map(|c| c.index)
            .collect();
        // (a) bijection onto the subsystem chambers
        let mut images: Vec<usize> = holding
            .iter()
            .map(|&i| om.coarsen(&sys.chamber(i)))
            .collect();
        images.sort();
        images.dedup();
        rec.check_eq(
            "coarsening-bijection",
            format!("omega={omega}"),
            om.sub.chamber_count(),
            images.len(),
        );
        rec.check_eq(
            "coarsening-count",
            format!("omega={omega}"),
            om.sub.chamber_count(),
            holding.len(),
        );
        // (a) length preservation
        for &i in &holding {
            for &j in &holding {
                let li = sys.length(&sys.chamber(i), &sys.chamber(j))?;
                let lj = om
                    .sub
                    .length(om.coarsen(&sys.chamber(i)), om.coarsen(&sys.chamber(j)));
                rec.check_eq(
                    "coarsening-length",
                    format!("omega={omega} chambers {i},{j}"),
                    li,
                    lj,
                );
            }
        }
        // |R^+| - |R^+_omega| with R^+ from the base chamber
        let pos_diff = sys.positive_root_count() - om.sub.pair_normals().len();
        // (b) parity cases
        let contains_coroot = sys
            .coroots()
            .iter()
            .any(|c| c.primitive() == omega.primitive() || c.neg().primitive() == omega.primitive());
        if contains_coroot {
            rec.check_eq(
                "parity-coroot-ray",
                format!("omega={omega}"),
                1,
                pos_diff % 2,
            );
        } else if om.quotient_system.dim() > 0 && om.quotient_system.minus_one_in_weyl() {
            rec.check_eq(
                "parity-minus-one-quotient",
                format!("omega={omega}"),
                0,
                pos_diff % 2,
            );
        }
        // (c) the opposite chamber: for each chamber holding omega, a unique
        // chamber holding -omega with the same coarsening
        let neg = omega.neg();
        let holding_neg: Vec<usize> = sys
            .chambers()
            .iter()
            .filter(|c| c.closure().contains(&neg))
            .map(|c| c.index)
            .collect();
        for &i in &holding {
            let ci = sys.chamber(i);
            let matches: Vec<usize> = holding_neg
                .iter()
                .copied()
                .filter(|&j| om.coarsen(&sys.chamber(j)) == om.coarsen(&ci))
                .collect();
            rec.check_eq(
                "opposite-chamber-unique",
                format!("omega={omega} chamber {i}"),
                1,
                matches.len(),
            );
            if matches.len() == 1 {
                let lp = sys.length(&ci, &sys.chamber(matches[0]))?;
                rec.check_eq(
                    "opposite-chamber-length",
                    format!("omega={omega} chamber {i}"),
                    pos_diff_for(sys, &ci, &om),
                    lp,
                );
            }
        }
        // (d) half-way chambers when the ray contains a coroot
        if contains_coroot {
            // the positive root whose coroot spans the ray
            let alpha_idx = (0..sys.roots().len())
                .find(|&k| sys.coroots()[k].primitive() == omega.primitive())
                .expect("ray carries a coroot");
            let alpha = &sys.roots()[alpha_idx];
            for c in sys.chambers() {
                // conditions: alpha >= 0 on the chamber, wall of the chamber,
                // same coarsening as the base... the base here is any fixed
                // chamber holding omega; use the first
                let c0 = sys.chamber(holding[0]);
                let cone = c.closure();
                let nonneg = cone.generators().iter().all(|g| !alpha.dot(g).is_negative());
                let has_wall = cone
                    .facet_normals()
                    .iter()
                    .any(|f| f.sign_canonical() == alpha.sign_canonical());
                if !(nonneg
                    && has_wall
                    && om.coarsen(&c) == om.coarsen(&c0))
                {
                    continue;
                }
                let expected = (pos_diff_for(sys, &c0, &om) - 1) / 2;
                rec.check_eq(
                    "half-way-length",
                    format!("omega={omega} chamber {}", c.index),
                    expected,
                    sys.length(&c0, &c)?,
                );
            }
        }
    }
    Ok(())
}

/// `|R^+(C)| - |R^+_omega(C)|` for the positive systems of a chamber whose
/// closure holds the ray: independent of that chamber, equal to the count of
/// separating hyperplanes to the opposite chamber.
fn pos_diff_for(sys: &RootSystem, _c: &crate::rootsys::Chamber, om: &crate::rootsys::OmegaSubsystem) -> usize {
    sys.positive_root_count() - om.sub.pair_normals().len()
}

/// Crossing a single ray hyperplane in the covector changes the chamber sum
/// by twice the quotient sum when the ray carries a coroot, and not at all
/// otherwise.
fn covector_wall_crossing(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let transversals = cfg.cases.map(|c| (c / 10).max(2) as usize).unwrap_or(10);
    // one representative ray per wall hyperplane
    let mut seen: Vec<RatVec> = Vec::new();
    for omega in sys.chamber_rays() {
        let canon = omega.sign_canonical();
        if seen.contains(&canon) {
            continue;
        }
        seen.push(canon.clone());
        // base chamber whose closure holds this ray, as the statement needs
        let base = sys
            .chambers()
            .into_iter()
            .find(|c| c.closure().contains(omega))
            .expect("every chamber ray lies in some closed chamber");
        let om = subsystem_omega(sys, omega)?;
        let contains_coroot = sys
            .coroots()
            .iter()
            .any(|c| c.sign_canonical() == omega.sign_canonical());
        let mut rng = rng_for(cfg.seed, 110 + seen.len() as u64);
        let mut done = 0;
        let mut guard = 0;
        while done < transversals && guard < 200 {
            guard += 1;
            // mu on the wall, off every other ray hyperplane and usable in
            // the quotient
            let cand = {
                let raw = random_vec(&mut rng, sys.dim(), 6);
                // force mu(omega) = 0 by subtracting the component
                let omega_cov = omega.clone();
                let corr = raw.dot(&omega_cov) / omega_cov.dot(&omega_cov);
                raw.sub(&omega_cov.scale(&corr))
            };
            if sys
                .chamber_rays()
                .iter()
                .any(|r| r.sign_canonical() != omega.sign_canonical() && cand.dot(r).is_zero())
            {
                continue;
            }
            if cand.is_zero() && om.quotient.dim() > 0 {
                continue;
            }
            // transversal direction: positive on omega
            let mut t = RatVec::zero(sys.dim());
            let k = omega.coords().iter().position(|v| !v.is_zero()).expect("ray nonzero");
            t.set(k, omega.get(k).clone());
            let mut eps = crate::ratgeom::ratio(1, 2);
            for r in sys.chamber_rays() {
                if r.sign_canonical() == omega.sign_canonical() {
                    continue;
                }
                let num = cand.dot(r);
                let den = t.dot(r);
                if den.is_zero() {
                    continue;
                }
                let bound = (num.clone() / den.clone()).abs() / crate::ratgeom::rat(2);
                if bound < eps {
                    eps = bound;
                }
            }
            let lambda = cand.add(&t.scale(&eps));
            let lambda_prime = cand.sub(&t.scale(&eps));
            if !lambda.dot(omega).is_positive() || !lambda_prime.dot(omega).is_negative() {
                continue;
            }
            let x = random_regular(&mut rng, sys, 6);
            let lhs =
                psi_r(sys, &base, &x, &lambda)? - psi_r(sys, &base, &x, &lambda_prime)?;
            let rhs = if contains_coroot {
                if om.quotient_system.dim() == 0 {
                    // rank-1 case: the quotient sum is 1
                    -2
                } else {
                    let x_t = om.quotient.point(&x);
                    let l_t = om.quotient.functional(&cand)?;
                    let base_q = om.quotient_chamber(&base)?;
                    -2 * psi_r(&om.quotient_system, &base_q, &x_t, &l_t)?
                }
            } else {
                0
            };
            rec.check_eq(
                "ray-wall-crossing",
                format!("omega={omega} x={x} lambda={lambda}"),
                rhs,
                lhs,
            );
            done += 1;
        }
        rec.check_eq(
            "ray-wall-crossing-count",
            format!("omega={omega}"),
            transversals,
            done,
        );
    }
    Ok(())
}

/// The chamber sum vanishes identically when `-1` is missing from the Weyl
/// group.
fn vanishing_without_minus_one(
    rec: &mut Recorder,
    sys: &RootSystem,
    cfg: &SuiteConfig,
) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 120);
    let cases = cfg.cases.unwrap_or(500);
    let base = sys.base_chamber();
    for _ in 0..cases {
        let x = random_regular(&mut rng, sys, 8);
        let l = random_r_regular(&mut rng, sys, 8);
        rec.check_eq(
            "vanishing-without-minus-one",
            format!("x={x} l={l}"),
            0,
            psi_r(sys, &base, &x, &l)?,
        );
    }
    Ok(())
}

/// Twisted chamber sums equal the subsystem sums; non-lifting characters
/// force vanishing.
fn twisted_sums(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let n = sys.dim();
    let points = cfg.cases.map(|c| (c / 20).max(5) as usize).unwrap_or(20);
    let base = sys.base_chamber();
    let q_basis: Vec<RatVec> = sys
        .simple_roots()
        .iter()
        .map(|&i| sys.coroots()[i].clone())
        .collect();
    let p_basis: Vec<RatVec> = (0..n).map(|i| RatVec::unit(n, i)).collect();
    // coweight lattice basis: dual basis to the simple roots; in this
    // realization the simple roots are the standard basis of X*, so the
    // coweight lattice is the standard lattice
    for mask in 0..(1u32 << n) {
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let chi = SignCharacter::new(q_basis.clone(), values.clone());
        let sub = crate::rootsys::subsystem_sign_coroot(sys, &chi)?;
        let lifts = sign_character_lifts(&chi, &p_basis)?;
        let mut rng = rng_for(cfg.seed, 130 + mask as u64);
        for _ in 0..points {
            let x = random_regular(&mut rng, sys, 6);
            let l = random_vec(&mut rng, n, 6);
            let lhs = twisted_sum_coroot(sys, &base, &chi, &x, &l)?;
            let rhs = sub_psi_r(&sub, &base, &x, &l)?;
            rec.check_eq(
                "coroot-twisted-sum",
                format!("chi={values:?} x={x} l={l}"),
                rhs,
                lhs,
            );
            if !lifts {
                let lr = random_r_regular(&mut rng, sys, 6);
                rec.check_eq(
                    "coroot-twist-vanishing",
                    format!("chi={values:?} x={x} l={lr}"),
                    0,
                    twisted_sum_coroot(sys, &base, &chi, &x, &lr)?,
                );
            }
        }
    }
    // root-lattice characters against the weight lattice
    let root_basis: Vec<RatVec> = sys
        .simple_roots()
        .iter()
        .map(|&i| sys.roots()[i].clone())
        .collect();
    let weight_basis = weight_lattice_basis(sys)?;
    for mask in 0..(1u32 << n) {
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let chi = SignCharacter::new(root_basis.clone(), values.clone());
        let sub = crate::rootsys::subsystem_sign_root(sys, &chi)?;
        let lifts = sign_character_lifts(&chi, &weight_basis)?;
        let mut rng = rng_for(cfg.seed, 140 + mask as u64);
        for _ in 0..points {
            let x = random_regular(&mut rng, sys, 6);
            let l = random_vec(&mut rng, n, 6);
            let lhs = twisted_sum_root(sys, &base, &chi, &x, &l)?;
            let rhs = sub_psi_r(&sub, &base, &x, &l)?;
            rec.check_eq(
                "root-twisted-sum",
                format!("chi={values:?} x={x} l={l}"),
                rhs,
                lhs,
            );
            if !lifts {
                let lr = random_r_regular(&mut rng, sys, 6);
                rec.check_eq(
                    "root-twist-vanishing",
                    format!("chi={values:?} x={x} l={lr}"),
                    0,
                    twisted_sum_root(sys, &base, &chi, &x, &lr)?,
                );
            }
        }
    }
    Ok(())
}

/// Fundamental weights: the dual basis to the simple coroots.
fn weight_lattice_basis(sys: &RootSystem) -> Result<Vec<RatVec>> {
    let n = sys.dim();
    let m = crate::ratgeom::RatMat::from_rows(
        &sys.simple_roots()
            .iter()
            .map(|&i| sys.coroots()[i].clone())
            .collect::<Vec<_>>(),
    );
    let inv = m
        .inverse()
        .ok_or_else(|| crate::Error::Internal("simple coroots are independent".into()))?;
    Ok((0..n).map(|j| inv.col(j)).collect())
}

/// The lift decision against brute force over all characters of the
/// coweight lattice.
fn character_lift_brute_force(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let _ = cfg;
    let n = sys.dim();
    if n > 4 {
        return Ok(());
    }
    let q_basis: Vec<RatVec> = sys
        .simple_roots()
        .iter()
        .map(|&i| sys.coroots()[i].clone())
        .collect();
    let p_basis: Vec<RatVec> = (0..n).map(|i| RatVec::unit(n, i)).collect();
    for mask in 0..(1u32 << n) {
        let values: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        let chi = SignCharacter::new(q_basis.clone(), values.clone());
        let expected = (0..(1u32 << n)).any(|m| {
            let sup = SignCharacter::new(p_basis.clone(), (0..n).map(|i| m >> i & 1 == 1).collect());
            chi.lattice_basis
                .iter()
                .zip(&chi.values)
                .all(|(b, &neg)| sup.eval(b).unwrap() == if neg { -1 } else { 1 })
        });
        rec.check_eq(
            "lift-vs-brute-force",
            format!("chi={values:?}"),
            expected,
            sign_character_lifts(&chi, &p_basis)?,
        );
    }
    Ok(())
}
