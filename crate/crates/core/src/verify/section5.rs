//! Levi-fan invariants: the partition of the space, Kostant counts and
//! grading, the truncation sentinels, the shift bookkeeping across Borels
//! and the collapse identity.

use super::util::*;
use super::{Recorder, SuiteConfig, VerifyReport};
use crate::cones::conic::relint_indicator;
use crate::cones::{cone_from_inequalities, conic_equal, ConicFunction};
use crate::parafan::{
    borel_above, identity_5_6_check, kostant_reps, kostant_reps_for_chamber, levi_fan,
    nu_middle, nu_restrict, truncated_cohomology_in, Nu,
};
use crate::ratgeom::RatVec;
use crate::rootsys::{root_system, RootSystem};
use crate::Result;
use num::Signed;
use std::collections::BTreeSet;

pub fn run(system: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    let mut rec = Recorder::new("section5", system, cfg.seed);
    let sys = root_system(system)?;
    let n = sys.dim();
    let subsets = all_subsets(n);
    for levi in &subsets {
        fan_partition(&mut rec, &sys, levi)?;
        kostant_invariants(&mut rec, &sys, levi)?;
    }
    truncation_profiles(&mut rec, &sys, cfg)?;
    shift_bookkeeping(&mut rec, &sys, cfg)?;
    collapse_identity(&mut rec, &sys, cfg)?;
    restriction_compatibility(&mut rec, &sys, cfg)?;
    Ok(rec.finish())
}

fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..(1u32 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// The relatively open cells tile the fan's space.
fn fan_partition(rec: &mut Recorder, sys: &RootSystem, levi: &[usize]) -> Result<()> {
    let fan = levi_fan(sys, levi)?;
    let m = fan.space_dim();
    if m == 0 {
        rec.check_eq("fan-partition-degenerate", format!("levi={levi:?}"), 1, fan.cells.len());
        return Ok(());
    }
    let mut sum = ConicFunction::zero(m);
    for cell in &fan.cells {
        let cone = cell.cone.as_ref().expect("positive dimension");
        sum = sum.add(&relint_indicator(cone))?;
    }
    let whole = ConicFunction::indicator(cone_from_inequalities(&[], m)?);
    rec.check_true(
        "fan-partition",
        format!("levi={levi:?}"),
        conic_equal(&sum, &whole)?,
    );
    Ok(())
}

/// Count and grading of the minimal coset representatives.
fn kostant_invariants(rec: &mut Recorder, sys: &RootSystem, levi: &[usize]) -> Result<()> {
    let reps = kostant_reps(sys, levi)?;
    // the Levi Weyl group
    let refls: Vec<usize> = levi
        .iter()
        .map(|&j| sys.reflection_weyl_index(sys.simple_roots()[j]))
        .collect();
    let mut wl: BTreeSet<usize> = BTreeSet::new();
    wl.insert(0);
    let mut queue = vec![0usize];
    while let Some(w) = queue.pop() {
        for &g in &refls {
            let p = sys.weyl_mul(g, w);
            if wl.insert(p) {
                queue.push(p);
            }
        }
    }
    rec.check_eq(
        "kostant-count",
        format!("levi={levi:?}"),
        sys.weyl_order(),
        reps.len() * wl.len(),
    );
    // lengths match coset minima
    let mut expected: Vec<usize> = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for w in 0..sys.weyl_order() {
        if seen.contains(&w) {
            continue;
        }
        let coset: Vec<usize> = wl.iter().map(|&u| sys.weyl_mul(u, w)).collect();
        for &c in &coset {
            seen.insert(c);
        }
        expected.push(coset.iter().map(|&c| sys.weyl()[c].word.len()).min().unwrap());
    }
    expected.sort();
    let mut got: Vec<usize> = reps.iter().map(|&w| sys.weyl()[w].word.len()).collect();
    got.sort();
    rec.check_eq(
        "kostant-grading",
        format!("levi={levi:?}"),
        format!("{expected:?}"),
        format!("{got:?}"),
    );
    Ok(())
}

/// Sentinel profiles: everything survives at the very-negative profile, and
/// only the full-group cell contributes at the very-positive one; the
/// rank-one middle profile keeps the top weight alone.
fn truncation_profiles(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 900);
    let lambda = dominant_weight(sys, &mut rng);
    for levi in all_subsets(sys.dim()) {
        let fan = levi_fan(sys, &levi)?;
        let reps = kostant_reps(sys, &levi)?;
        for cell in fan.open_cells() {
            let full = truncated_cohomology_in(&fan, cell, &lambda, &Nu::NegInfinity)?;
            rec.check_eq(
                "full-profile-keeps-all",
                format!("levi={levi:?} cell={cell}"),
                reps.len(),
                full.terms.len(),
            );
            let none = truncated_cohomology_in(&fan, cell, &lambda, &Nu::PosInfinity)?;
            let expected = if fan.space_dim() == 0 { 1 } else { 0 };
            rec.check_eq(
                "positive-profile-empties",
                format!("levi={levi:?} cell={cell}"),
                expected,
                none.terms.len(),
            );
        }
    }
    // rank-one middle profile: single term with the dominant weight
    if sys.dim() == 1 {
        let fan = levi_fan(sys, &[])?;
        let dom = fan.dominant_open_cell()?;
        let mid = truncated_cohomology_in(&fan, dom, &lambda, &Nu::Finite(nu_middle(sys)))?;
        rec.check_eq("middle-profile-single-term", "rank 1", 1, mid.terms.len());
        if let Some(t) = mid.terms.first() {
            rec.check_eq("middle-profile-weight", "rank 1", lambda.to_string(), t.weight.to_string());
            rec.check_eq("middle-profile-sign", "rank 1", 1, t.sign);
        }
    }
    Ok(())
}

fn dominant_weight(sys: &RootSystem, rng: &mut rand_chacha::ChaCha8Rng) -> RatVec {
    // a random non-negative integer combination of the fundamental weights
    let n = sys.dim();
    let m = crate::ratgeom::RatMat::from_rows(
        &sys.simple_roots()
            .iter()
            .map(|&i| sys.coroots()[i].clone())
            .collect::<Vec<_>>(),
    );
    let inv = m.inverse().expect("simple coroots independent");
    let mut out = RatVec::zero(n);
    for j in 0..n {
        let c: i64 = rand::Rng::random_range(rng, 0..4);
        out = out.add(&inv.col(j).scale(&crate::ratgeom::rat(c)));
    }
    out
}

/// The untruncated weight multiset `{w(lambda_B + rho_B)}` over the minimal
/// representatives is independent of the parabolic above the fixed Levi
/// (the induced Borels all cut the same Levi positive system).
fn shift_bookkeeping(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 910);
    let lambda = dominant_weight(sys, &mut rng);
    for levi in all_subsets(sys.dim()) {
        let fan = levi_fan(sys, &levi)?;
        if fan.space_dim() == 0 {
            continue;
        }
        let mut multisets: Vec<(usize, Vec<RatVec>)> = Vec::new();
        for cell in fan.open_cells() {
            let chamber = borel_above(&fan, cell)?;
            let w_b = &sys.weyl()[chamber.index];
            let lambda_b = w_b.dual_matrix.mul_vec(&lambda);
            let rho_b = sys.rho(&chamber);
            let shifted = lambda_b.add(&rho_b);
            let reps = kostant_reps_for_chamber(&fan, &chamber)?;
            let mut weights: Vec<RatVec> = reps
                .iter()
                .map(|&wi| sys.weyl()[wi].dual_matrix.mul_vec(&shifted))
                .collect();
            weights.sort();
            // each weight is dominant for the Levi's base positive system
            for weight in &weights {
                let dominant = fan.cells[cell]
                    .levi_roots
                    .iter()
                    .filter(|&&ri| sys.roots()[ri].dot(sys.base_point()).is_positive())
                    .all(|&ri| !weight.dot(&sys.coroots()[ri]).is_negative());
                rec.check_true(
                    "kostant-weight-levi-dominant",
                    format!("levi={levi:?} cell={cell}"),
                    dominant,
                );
            }
            multisets.push((cell, weights));
        }
        for (cell, w) in &multisets[1..] {
            rec.check_true(
                "shift-bookkeeping",
                format!("levi={levi:?} cell={cell} vs cell={}", multisets[0].0),
                w == &multisets[0].1,
            );
        }
    }
    Ok(())
}

/// The alternating sum over the parabolic order collapses cell by cell.
fn collapse_identity(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let cases = cfg.cases.unwrap_or(200);
    let mut rng = rng_for(cfg.seed, 920);
    if sys.dim() == 1 {
        // all sign patterns, including the degenerate point
        let nu = RatVec::zero(1);
        for x in [
            RatVec::from_ints(&[2]),
            RatVec::from_ints(&[-2]),
            RatVec::from_ints(&[0]),
        ] {
            for mu in [RatVec::from_ints(&[3]), RatVec::from_ints(&[-3])] {
                match identity_5_6_check(sys, &[], &x, &mu, &nu) {
                    Ok(ok) => rec.check_true(
                        "collapse-identity",
                        format!("x={x} mu={mu}"),
                        ok,
                    ),
                    Err(e) => rec.error("collapse-identity", format!("x={x} mu={mu}"), &e),
                }
            }
        }
        return Ok(());
    }
    for levi in all_subsets(sys.dim()) {
        let fan = levi_fan(sys, &levi)?;
        if fan.space_dim() == 0 {
            continue;
        }
        let per_levi = (cases as usize / (1 << sys.dim()).max(1)).max(8);
        for _ in 0..per_levi {
            let x_m = random_vec(&mut rng, fan.space_dim(), 6);
            let x = fan.map.from_sub(&x_m);
            let mu = random_vec(&mut rng, sys.dim(), 6);
            let nu = random_vec(&mut rng, sys.dim(), 6);
            match identity_5_6_check(sys, &levi, &x, &mu, &nu) {
                Ok(ok) => rec.check_true(
                    "collapse-identity",
                    format!("levi={levi:?} x={x} mu={mu} nu={nu}"),
                    ok,
                ),
                Err(e) => rec.error(
                    "collapse-identity",
                    format!("levi={levi:?} x={x} mu={mu} nu={nu}"),
                    &e,
                ),
            }
        }
    }
    Ok(())
}

/// Two-step versus one-step profile restriction along nested cells.
fn restriction_compatibility(rec: &mut Recorder, sys: &RootSystem, cfg: &SuiteConfig) -> Result<()> {
    let mut rng = rng_for(cfg.seed, 930);
    let fan = levi_fan(sys, &[])?;
    if fan.space_dim() == 0 {
        return Ok(());
    }
    let nu = random_vec(&mut rng, sys.dim(), 7);
    for q1 in 0..fan.cells.len() {
        for q2 in 0..fan.cells.len() {
            if q1 == q2 || !fan.in_closure(q2, q1) {
                continue;
            }
            let nu1 = nu_restrict(&fan, &nu, q1)?;
            let nu2 = nu_restrict(&fan, &nu, q2)?;
            let mut ok = true;
            for b in fan.span_in_x(q2) {
                if nu1.dot(&b) != nu2.dot(&b) {
                    ok = false;
                }
            }
            rec.check_true(
                "restriction-compatibility",
                format!("cells {q1} -> {q2}"),
                ok,
            );
        }
    }
    Ok(())
}
