//! The character-constant layer: chamber sums, the recursion oracle for the
//! stable constants, `d(w)` tables, twisted sums and the individual
//! constants `b`.

use crate::ratgeom::{Rat, RatMat, RatVec, SignCharacter, SubspaceMap};
use crate::rootsys::{subsystem_two, Chamber, RootSystem, SubSystem, WeylElement};
use crate::{Error, Result};
use num::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

/// Value of the simplicial-chamber valuation for the chamber `w(C_0)`:
/// signs of the coordinates of `x` in the chamber's ray basis against the
/// coordinates of `lambda` in the dual basis, complementary-signs rule.
fn psi_chamber(
    sys: &RootSystem,
    w: &WeylElement,
    w_inv: &WeylElement,
    x: &RatVec,
    lambda: &RatVec,
) -> i64 {
    let xi = w_inv.matrix.mul_vec(x);
    let li = w.matrix.transpose().mul_vec(lambda);
    let mut count_lambda = 0u32;
    for (i, ray) in sys.coweight_rays().iter().enumerate() {
        // sign of the i-th ray coordinate of w^{-1}x equals the sign of the
        // i-th base simple root there
        let a_nonneg = !sys.roots()[sys.simple_roots()[i]].dot(&xi).is_negative();
        let b_nonneg = !li.dot(ray).is_negative();
        if a_nonneg == b_nonneg {
            return 0;
        }
        if b_nonneg {
            count_lambda += 1;
        }
    }
    if count_lambda % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The chamber sum `psi_R(C_0, x, lambda) = sum_C eps(C_0, C) psi_C(x, lambda)`.
pub fn psi_r(sys: &RootSystem, c0: &Chamber, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    if sys.dim() == 0 {
        return Ok(1);
    }
    if x.dim() != sys.dim() || lambda.dim() != sys.dim() {
        return Err(Error::DimensionMismatch("psi_r: point dimensions".into()));
    }
    if !sys.same_system(&c0.system) {
        return Err(Error::Precondition(
            "psi_r: chamber from another system".into(),
        ));
    }
    let elems = sys.weyl();
    let base_sign = elems[c0.index].sign;
    let mut total = 0i64;
    for w in elems {
        let v = psi_chamber(sys, w, &elems[w.inv], x, lambda);
        if v != 0 {
            total += base_sign * w.sign * v;
        }
    }
    Ok(total)
}

/// `m_R(x, lambda) = psi_R(C_x, x, lambda)` for regular `x` and R-regular
/// `lambda`.
pub fn m_r(sys: &RootSystem, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    if sys.dim() == 0 {
        return Ok(1);
    }
    if !sys.is_regular(x) {
        return Err(Error::NotRegular(format!("m: {x} is not regular")));
    }
    if !sys.is_r_regular(lambda) {
        return Err(Error::NotRegular(format!("m: {lambda} is not R-regular")));
    }
    let cx = sys.chamber_of(x)?;
    psi_r(sys, &cx, x, lambda)
}

/// Full recursive genericity for the stable-constant recursion: R-regular
/// and, for every wall, recursively generic on the wall subsystem.
pub fn is_cbar_generic(sys: &RootSystem, lambda: &RatVec) -> Result<bool> {
    if sys.dim() == 0 {
        return Ok(true);
    }
    if !sys.is_r_regular(lambda) {
        return Ok(false);
    }
    for &rep in sys.pair_reps() {
        let wall = crate::rootsys::subsystem_wall(sys, rep)?;
        if wall.system.dim() == 0 {
            continue;
        }
        let restricted = wall.map.to_sub_functional(lambda);
        if !is_cbar_generic(&wall.system, &restricted)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A facet-interior point between a chamber and its mirror across the wall
/// of `wall_root`, regular for every other root.
fn facet_point(sys: &RootSystem, chamber: &Chamber, wall_root: usize) -> Result<RatVec> {
    let refl = sys.reflection_matrix(wall_root);
    let half = Rat::new(1.into(), 2.into());
    for attempt in 0u64..64 {
        let p = if attempt == 0 {
            chamber.interior_point()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xface + attempt);
            let base = &sys.weyl()[chamber.index].matrix;
            let mut q = RatVec::zero(sys.dim());
            for ray in sys.coweight_rays() {
                let c = Rat::new((64 + rng.random_range(0i64..64)).into(), 64.into());
                q = q.add(&ray.scale(&c));
            }
            base.mul_vec(&q)
        };
        let y = p.add(&refl.mul_vec(&p)).scale(&half);
        debug_assert!(sys.roots()[wall_root].dot(&y).is_zero());
        let ok = sys
            .roots()
            .iter()
            .enumerate()
            .all(|(i, r)| i == wall_root || i == sys.neg_of(wall_root) || !r.dot(&y).is_zero());
        if ok {
            return Ok(y);
        }
    }
    Err(Error::Internal("no regular facet point found".into()))
}

/// Table of the recursion oracle over all chambers for a fixed `lambda`.
///
/// Propagation starts from the chamber where `lambda` is positive (value 0)
/// and crosses walls with
/// `value(C) + value(C') = 2 * cbar_{R_Y}(y, lambda|_Y)`. Consistency over
/// every edge of the chamber graph is asserted, so the table is
/// path-independent.
fn cbar_table(sys: &RootSystem, lambda: &RatVec) -> Result<Arc<Vec<i64>>> {
    if let Some(t) = sys.cbar_cache_get(lambda) {
        return Ok(t);
    }
    if !sys.minus_one_in_weyl() {
        return Err(Error::MinusOneNotInWeylGroup(
            "the stable-constant recursion needs -1 in the Weyl group".into(),
        ));
    }
    if !sys.dual_system().is_regular(lambda) || !is_cbar_generic(sys, lambda)? {
        return Err(Error::NotRegular(format!(
            "{lambda} is not generic enough for the wall recursion"
        )));
    }
    let n_chambers = sys.weyl_order();
    let mut values: Vec<Option<i64>> = vec![None; n_chambers];
    // lambda is positive exactly on the chamber whose coroot signs match
    let start_signs: Vec<bool> = sys
        .pair_reps()
        .iter()
        .map(|&r| lambda.dot(&sys.coroots()[r]).is_positive())
        .collect();
    let start = sys
        .chamber_by_signs(&start_signs)
        .ok_or_else(|| Error::Internal("no chamber matches the lambda signs".into()))?;
    values[start.index] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(start.index);
    while let Some(ci) = queue.pop_front() {
        let chamber = sys.chamber(ci);
        let signs = chamber.signs().to_vec();
        for (pair_pos, &rep) in sys.pair_reps().iter().enumerate() {
            let mut flipped = signs.clone();
            flipped[pair_pos] = !flipped[pair_pos];
            let Some(neighbor) = sys.chamber_by_signs(&flipped) else {
                continue;
            };
            let y = facet_point(sys, &chamber, rep)?;
            let wall = crate::rootsys::subsystem_wall(sys, rep)?;
            let sub_value = if wall.system.dim() == 0 {
                1
            } else {
                let y_sub = wall.map.to_sub_point(&y)?;
                let l_sub = wall.map.to_sub_functional(lambda);
                let table = cbar_table(&wall.system, &l_sub)?;
                table[wall.system.chamber_of(&y_sub)?.index]
            };
            let v = 2 * sub_value - values[ci].expect("queued chambers have values");
            match values[neighbor.index] {
                None => {
                    values[neighbor.index] = Some(v);
                    queue.push_back(neighbor.index);
                }
                Some(old) => {
                    if old != v {
                        return Err(Error::Internal(
                            "wall recursion gave path-dependent values".into(),
                        ));
                    }
                }
            }
        }
    }
    let table: Vec<i64> = values
        .into_iter()
        .map(|v| v.expect("chamber graph is connected"))
        .collect();
    let table = Arc::new(table);
    sys.cbar_cache_put(lambda.clone(), table.clone());
    Ok(table)
}

/// The stable constants by the wall recursion, independent of the chamber
/// sums. Requires `-1` in the Weyl group and a recursively generic `lambda`.
pub fn cbar(sys: &RootSystem, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    if sys.dim() == 0 {
        return Ok(1);
    }
    if !sys.is_regular(x) {
        return Err(Error::NotRegular(format!("cbar: {x} is not regular")));
    }
    let table = cbar_table(sys, lambda)?;
    Ok(table[sys.chamber_of(x)?.index])
}

/// Deep generic points in a chamber and its dual chamber, produced from a
/// seed and re-jittered until all regularity conditions hold.
#[derive(Clone, Debug)]
pub struct GenericPair {
    pub seed: u64,
    pub x0: RatVec,
    pub lambda0: RatVec,
}

pub fn generic_pair(sys: &RootSystem, c0: &Chamber, seed: u64) -> Result<GenericPair> {
    let dual = sys.dual_system();
    let c0_dual = sys.dual_chamber(c0);
    let w = &sys.weyl()[c0.index];
    let wd = &dual.weyl()[c0_dual.index];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x0 = None;
    for _ in 0..256 {
        let mut q = RatVec::zero(sys.dim());
        for ray in sys.coweight_rays() {
            let c = Rat::new((1024 + rng.random_range(0i64..1024)).into(), 1024.into());
            q = q.add(&ray.scale(&c));
        }
        let cand = w.matrix.mul_vec(&q);
        if sys.is_regular(&cand) && sys.is_rvee_regular(&cand) {
            x0 = Some(cand);
            break;
        }
    }
    let mut lambda0 = None;
    for _ in 0..256 {
        let mut q = RatVec::zero(sys.dim());
        for ray in dual.coweight_rays() {
            let c = Rat::new((1024 + rng.random_range(0i64..1024)).into(), 1024.into());
            q = q.add(&ray.scale(&c));
        }
        let cand = wd.matrix.mul_vec(&q);
        if dual.is_regular(&cand) && sys.is_r_regular(&cand) {
            lambda0 = Some(cand);
            break;
        }
    }
    match (x0, lambda0) {
        (Some(x0), Some(lambda0)) => Ok(GenericPair { seed, x0, lambda0 }),
        _ => Err(Error::Internal("generic point search failed".into())),
    }
}

/// The table `d(w)` over the Weyl group, with the generic points that
/// produced it.
#[derive(Clone, Debug, Serialize)]
pub struct DTable {
    pub system: String,
    pub base_chamber: String,
    pub q: usize,
    pub seed: u64,
    pub x0: String,
    pub lambda0: String,
    /// `(reduced word, value)` pairs in Weyl enumeration order.
    pub values: Vec<(String, i64)>,
}

impl DTable {
    pub fn value_map(&self) -> HashMap<String, i64> {
        self.values.iter().cloned().collect()
    }
}

/// `d(w) = m_R(x_0, w lambda_0)` over all `w`, for deep generic points in
/// the base chamber and its dual.
pub fn d_table(sys: &RootSystem, c0: &Chamber, seed: u64) -> Result<DTable> {
    let q = sys.q_invariant()?;
    let pair = generic_pair(sys, c0, seed)?;
    let mut values = Vec::with_capacity(sys.weyl_order());
    for w in sys.weyl() {
        let moved = w.dual_matrix.mul_vec(&pair.lambda0);
        values.push((w.word_string(), m_r(sys, &pair.x0, &moved)?));
    }
    Ok(DTable {
        system: sys.label().unwrap_or("custom").to_string(),
        base_chamber: c0.word(),
        q,
        seed,
        x0: pair.x0.to_string(),
        lambda0: pair.lambda0.to_string(),
        values,
    })
}

/// The same construction for the coroot system:
/// `d_vee(w) = m_{R_vee}(lambda_0, w x_0)`.
pub fn d_vee_table(sys: &RootSystem, c0: &Chamber, seed: u64) -> Result<DTable> {
    let q = sys.q_invariant()?;
    let dual = sys.dual_system();
    let pair = generic_pair(sys, c0, seed)?;
    let mut values = Vec::with_capacity(sys.weyl_order());
    for w in sys.weyl() {
        let moved = w.matrix.mul_vec(&pair.x0);
        values.push((w.word_string(), m_r(dual, &pair.lambda0, &moved)?));
    }
    Ok(DTable {
        system: format!("{}^", sys.label().unwrap_or("custom")),
        base_chamber: c0.word(),
        q,
        seed,
        x0: pair.lambda0.to_string(),
        lambda0: pair.x0.to_string(),
        values,
    })
}

/// The twisted chamber sum
/// `sum_C eps(C_0,C) chi(delta_C - delta_{C_0}) psi_C(x, lambda)` for a sign
/// character of the coroot lattice.
pub fn twisted_sum_coroot(
    sys: &RootSystem,
    c0: &Chamber,
    chi: &SignCharacter,
    x: &RatVec,
    lambda: &RatVec,
) -> Result<i64> {
    let elems = sys.weyl();
    let base_sign = elems[c0.index].sign;
    let delta0 = sys.delta(c0);
    let mut total = 0i64;
    for (i, w) in elems.iter().enumerate() {
        let v = psi_chamber(sys, w, &elems[w.inv], x, lambda);
        if v == 0 {
            continue;
        }
        let delta = sys.delta(&sys.chamber(i));
        let twist = chi.eval(&delta.sub(&delta0))?;
        total += base_sign * w.sign * twist * v;
    }
    Ok(total)
}

/// The analogous twisted sum with `rho` differences for a character of the
/// root lattice.
pub fn twisted_sum_root(
    sys: &RootSystem,
    c0: &Chamber,
    chi: &SignCharacter,
    x: &RatVec,
    lambda: &RatVec,
) -> Result<i64> {
    let elems = sys.weyl();
    let base_sign = elems[c0.index].sign;
    let rho0 = sys.rho(c0);
    let mut total = 0i64;
    for (i, w) in elems.iter().enumerate() {
        let v = psi_chamber(sys, w, &elems[w.inv], x, lambda);
        if v == 0 {
            continue;
        }
        let rho = sys.rho(&sys.chamber(i));
        let twist = chi.eval(&rho.sub(&rho0))?;
        total += base_sign * w.sign * twist * v;
    }
    Ok(total)
}

/// Chamber sum for a subsystem on the ambient space, based at the subsystem
/// chamber containing `c0`.
pub fn sub_psi_r(sub: &SubSystem, c0: &Chamber, x: &RatVec, lambda: &RatVec) -> Result<i64> {
    let base = sub.chamber_of(&c0.interior_point())?;
    Ok(sub.psi_r(base, x, lambda))
}

/// Inputs of the individual-constant evaluation.
#[derive(Clone, Debug)]
pub struct BQuery {
    /// Regular element of `X*`.
    pub tau: RatVec,
    pub chamber: Chamber,
    /// R-vee-regular element of `X`.
    pub x: RatVec,
    /// Element of the Weyl orbit of `tau`.
    pub lambda: RatVec,
}

/// The subgroup `W_C` generated by reflections of the chamber's even
/// subsystem, as Weyl indices.
pub fn w_c_subgroup(sys: &RootSystem, c: &Chamber) -> Vec<usize> {
    let sub = subsystem_two(sys, c);
    subgroup_generated(sys, &sub.root_indices)
}

fn subgroup_generated(sys: &RootSystem, root_indices: &[usize]) -> Vec<usize> {
    let mut members: BTreeSet<usize> = BTreeSet::new();
    members.insert(0);
    let gens: Vec<usize> = root_indices
        .iter()
        .map(|&i| sys.reflection_weyl_index(i))
        .collect();
    let mut queue: Vec<usize> = vec![0];
    while let Some(w) = queue.pop() {
        for &g in &gens {
            let prod = sys.weyl_mul(w, g);
            if members.insert(prod) {
                queue.push(prod);
            }
        }
    }
    members.into_iter().collect()
}

/// The normalizer of `W_C` in `W`: elements permuting the even subsystem.
pub fn w_c_normalizer(sys: &RootSystem, c: &Chamber) -> Vec<usize> {
    let sub = subsystem_two(sys, c);
    let root_set: BTreeSet<RatVec> = sub.roots.iter().cloned().collect();
    (0..sys.weyl_order())
        .filter(|&wi| {
            let w = &sys.weyl()[wi];
            root_set
                .iter()
                .all(|r| root_set.contains(&w.dual_matrix.mul_vec(r)))
        })
        .collect()
}

/// The index set `W(tau, C, lambda) = {w : w^{-1} lambda in W_C tau}`.
/// Errors when `lambda` is not in the Weyl orbit of `tau`.
pub fn coset_w(sys: &RootSystem, tau: &RatVec, c: &Chamber, lambda: &RatVec) -> Result<Vec<usize>> {
    let wc = w_c_subgroup(sys, c);
    let orbit: BTreeSet<RatVec> = wc
        .iter()
        .map(|&u| sys.weyl()[u].dual_matrix.mul_vec(tau))
        .collect();
    let mut out = Vec::new();
    for (i, w) in sys.weyl().iter().enumerate() {
        let pulled = sys.weyl()[w.inv].dual_matrix.mul_vec(lambda);
        if orbit.contains(&pulled) {
            out.push(i);
        }
    }
    if out.is_empty() {
        return Err(Error::Precondition(format!(
            "{lambda} does not lie in the Weyl orbit of {tau}"
        )));
    }
    Ok(out)
}

/// The individual constant
/// `b_R(tau, C; x, lambda) =
///  (-1)^q sum_{w in W(tau,C,lambda)} eps(C_x, wC) psi_{w C^vee}(lambda, x)`.
pub fn b_constant(sys: &RootSystem, query: &BQuery) -> Result<i64> {
    if sys.dim() == 0 {
        return Ok(1);
    }
    let q = sys.q_invariant()?;
    let dual = sys.dual_system();
    if !dual.is_regular(&query.tau) {
        return Err(Error::NotRegular(format!(
            "b: tau {} is not regular",
            query.tau
        )));
    }
    if !sys.is_rvee_regular(&query.x) {
        return Err(Error::NotRegular(format!(
            "b: x {} is not R-vee-regular",
            query.x
        )));
    }
    let coset = coset_w(sys, &query.tau, &query.chamber, &query.lambda)?;
    let cx = sys.chamber_of(&query.x)?;
    let mut total = 0i64;
    for wi in coset {
        let moved_chamber = sys.chamber(sys.weyl_mul(wi, query.chamber.index));
        let eps = sys.epsilon(&cx, &moved_chamber)?;
        let dual_chamber = sys.dual_chamber(&moved_chamber);
        let w = &dual.weyl()[dual_chamber.index];
        let psi = psi_chamber(dual, w, &dual.weyl()[w.inv], &query.lambda, &query.x);
        total += eps * psi;
    }
    Ok(if q % 2 == 0 { total } else { -total })
}

/// `W_alpha`: the subgroup generated by reflections in the roots orthogonal
/// to `alpha` (the wall subsystem), as Weyl indices.
pub fn w_alpha_subgroup(sys: &RootSystem, alpha_index: usize) -> Vec<usize> {
    let alpha = &sys.roots()[alpha_index];
    let indices: Vec<usize> = (0..sys.roots().len())
        .filter(|&i| alpha.dot(&sys.coroots()[i]).is_zero())
        .collect();
    subgroup_generated(sys, &indices)
}

/// The wall constant: the coset sum of the individual-constant formula
/// restricted to `W_alpha`, evaluated in the wall system. Zero when
/// `lambda` lies outside `W_alpha W_C tau`.
pub fn b_sub(
    sys: &RootSystem,
    tau: &RatVec,
    c: &Chamber,
    alpha_index: usize,
    y: &RatVec,
    lambda: &RatVec,
) -> Result<i64> {
    let alpha = &sys.roots()[alpha_index];
    let dual_chamber_cone = sys.dual_chamber(c).closure();
    if !dual_chamber_cone.contains(alpha) {
        return Err(Error::Precondition(
            "alpha must lie in the closure of the dual chamber".into(),
        ));
    }
    if !alpha.dot(y).is_zero() {
        return Err(Error::Precondition("y must lie on the wall of alpha".into()));
    }
    let coset = coset_w(sys, tau, c, lambda)?;
    let wa = w_alpha_subgroup(sys, alpha_index);
    let members: Vec<usize> = coset
        .into_iter()
        .filter(|w| wa.binary_search(w).is_ok())
        .collect();
    if members.is_empty() {
        return Ok(0);
    }
    let wall = crate::rootsys::subsystem_wall(sys, alpha_index)?;
    if wall.system.dim() == 0 {
        return Ok(members.len() as i64);
    }
    let y_sub = wall.map.to_sub_point(y)?;
    if !wall.system.is_rvee_regular(&y_sub) {
        return Err(Error::NotRegular(format!(
            "b_sub: {y} is not regular enough on the wall"
        )));
    }
    let lambda_sub = wall.map.to_sub_functional(lambda);
    let q_sub = wall.system.q_invariant()?;
    // chamber C_Y: intersection of the R_alpha-chamber containing C with Y
    let proj = project_to_wall(sys, alpha_index, &c.interior_point());
    let cy = wall.system.chamber_of(&wall.map.to_sub_point(&proj)?)?;
    let cy_x = wall.system.chamber_of(&y_sub)?;
    let dual_wall = wall.system.dual_system();
    let mut total = 0i64;
    for wi in members {
        let w_mat = restrict_to_subspace(sys, &wall.map, wi)?;
        let w_idx = wall
            .system
            .weyl_index_of(&w_mat)
            .ok_or_else(|| Error::Internal("restricted element not in wall Weyl group".into()))?;
        let moved = wall.system.chamber(wall.system.weyl_mul(w_idx, cy.index));
        let eps = wall.system.epsilon(&cy_x, &moved)?;
        let dual_ch = wall.system.dual_chamber(&moved);
        let w_d = &dual_wall.weyl()[dual_ch.index];
        let psi = psi_chamber(dual_wall, w_d, &dual_wall.weyl()[w_d.inv], &lambda_sub, &y_sub);
        total += eps * psi;
    }
    Ok(if q_sub % 2 == 0 { total } else { -total })
}

/// The midpoint of `x` with its reflection: the canonical point of
/// `ker(alpha)` under `x`.
pub fn project_to_wall(sys: &RootSystem, alpha_index: usize, x: &RatVec) -> RatVec {
    let refl = sys.reflection_matrix(alpha_index);
    x.add(&refl.mul_vec(x)).scale(&Rat::new(1.into(), 2.into()))
}

/// Matrix of the action of a Weyl element restricted to subspace
/// coordinates; the element must preserve the subspace.
fn restrict_to_subspace(sys: &RootSystem, map: &SubspaceMap, wi: usize) -> Result<RatMat> {
    let w = &sys.weyl()[wi];
    let cols: Result<Vec<RatVec>> = map
        .basis
        .iter()
        .map(|b| map.to_sub_point(&w.matrix.mul_vec(b)))
        .collect();
    Ok(RatMat::from_cols(&cols?))
}

/// The re-indexed constants `c(w, lambda, Delta+) = b(lambda, C; x, w lambda)`
/// for a chamber `C` whose even subsystem matches the given compact roots
/// and `x` deep in the chamber of the positive system.
pub fn knapp_c(
    sys: &RootSystem,
    compact_roots: &BTreeSet<usize>,
    w_index: usize,
    lambda: &RatVec,
    positive_chamber: &Chamber,
) -> Result<i64> {
    if !sys.dual_system().is_regular(lambda) {
        return Err(Error::NotRegular(format!("{lambda} is not regular")));
    }
    let target: BTreeSet<RatVec> = compact_roots
        .iter()
        .map(|&i| sys.roots()[i].sign_canonical())
        .collect();
    let chamber = sys
        .chambers()
        .into_iter()
        .find(|c| {
            let sub = subsystem_two(sys, c);
            let set: BTreeSet<RatVec> = sub.roots.iter().map(|r| r.sign_canonical()).collect();
            set == target
        })
        .ok_or_else(|| {
            Error::Precondition("no chamber realizes the requested compact root set".into())
        })?;
    let pair = generic_pair(sys, positive_chamber, 17)?;
    let moved = sys.weyl()[w_index].dual_matrix.mul_vec(lambda);
    b_constant(
        sys,
        &BQuery {
            tau: lambda.clone(),
            chamber,
            x: pair.x0,
            lambda: moved,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::root_system;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    #[test]
    fn psi_r_a1_values() {
        let sys = root_system("A1").unwrap();
        let plus = sys.chamber_of(&v(&[1])).unwrap();
        assert_eq!(psi_r(&sys, &plus, &v(&[1]), &v(&[-1])).unwrap(), 2);
        assert_eq!(psi_r(&sys, &plus, &v(&[1]), &v(&[1])).unwrap(), 0);
        let minus = sys.chamber_of(&v(&[-1])).unwrap();
        assert_eq!(psi_r(&sys, &minus, &v(&[1]), &v(&[-1])).unwrap(), -2);
    }

    #[test]
    fn psi_r_equivariance() {
        let sys = root_system("B2").unwrap();
        let base = sys.base_chamber();
        let x = v(&[3, 1]);
        let l = v(&[-2, -3]);
        for c in sys.chambers() {
            let w = &sys.weyl()[c.index];
            let lhs = psi_r(&sys, &c, &x, &l).unwrap();
            assert_eq!(lhs, w.sign * psi_r(&sys, &base, &x, &l).unwrap());
            let wi = &sys.weyl()[w.inv];
            let rhs = psi_r(
                &sys,
                &base,
                &wi.matrix.mul_vec(&x),
                &wi.dual_matrix.mul_vec(&l),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn m_r_values() {
        let a1 = root_system("A1").unwrap();
        assert_eq!(m_r(&a1, &v(&[1]), &v(&[-1])).unwrap(), 2);
        assert_eq!(m_r(&a1, &v(&[1]), &v(&[1])).unwrap(), 0);
        let prod = root_system("A1xA1").unwrap();
        assert_eq!(m_r(&prod, &v(&[1, 1]), &v(&[-1, -1])).unwrap(), 4);
        assert_eq!(m_r(&prod, &v(&[1, 1]), &v(&[-1, 1])).unwrap(), 0);
    }

    #[test]
    fn m_r_rejects_irregular() {
        let a1 = root_system("A1").unwrap();
        assert!(m_r(&a1, &v(&[0]), &v(&[1])).is_err());
        assert!(m_r(&a1, &v(&[1]), &v(&[0])).is_err());
    }

    #[test]
    fn cbar_values_a1() {
        let a1 = root_system("A1").unwrap();
        assert_eq!(cbar(&a1, &v(&[1]), &v(&[-1])).unwrap(), 2);
        assert_eq!(cbar(&a1, &v(&[1]), &v(&[1])).unwrap(), 0);
        assert_eq!(cbar(&a1, &v(&[-1]), &v(&[1])).unwrap(), 2);
    }

    #[test]
    fn cbar_empty_system() {
        let e = crate::rootsys::empty_system();
        assert_eq!(cbar(&e, &RatVec::zero(0), &RatVec::zero(0)).unwrap(), 1);
        assert_eq!(m_r(&e, &RatVec::zero(0), &RatVec::zero(0)).unwrap(), 1);
    }

    #[test]
    fn cbar_equals_m_exhaustive_b2() {
        let sys = root_system("B2").unwrap();
        for dc in sys.dual_system().chambers() {
            let lambda = dc.interior_point();
            if !is_cbar_generic(&sys, &lambda).unwrap() {
                continue;
            }
            for c in sys.chambers() {
                let x = c.interior_point();
                assert_eq!(
                    m_r(&sys, &x, &lambda).unwrap(),
                    cbar(&sys, &x, &lambda).unwrap(),
                    "m and cbar at x={x}, lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn d_table_a1() {
        let sys = root_system("A1").unwrap();
        let t = d_table(&sys, &sys.base_chamber(), 7).unwrap();
        let m = t.value_map();
        assert_eq!(m["e"], 0);
        assert_eq!(m["s1"], 2);
    }

    #[test]
    fn d_table_a1xa1() {
        let sys = root_system("A1xA1").unwrap();
        let t = d_table(&sys, &sys.base_chamber(), 7).unwrap();
        let m = t.value_map();
        assert_eq!(m["e"], 0);
        assert_eq!(m["s1"], 0);
        assert_eq!(m["s2"], 0);
        assert_eq!(m["s1*s2"], 4);
    }

    #[test]
    fn d_table_symmetries_b2() {
        let sys = root_system("B2").unwrap();
        let c0 = sys.base_chamber();
        let d = d_table(&sys, &c0, 7).unwrap();
        let dv = d_vee_table(&sys, &c0, 7).unwrap();
        assert_eq!(
            d.values.iter().map(|(_, v)| v).collect::<Vec<_>>(),
            dv.values.iter().map(|(_, v)| v).collect::<Vec<_>>()
        );
        let q = sys.q_invariant().unwrap();
        let vals: Vec<i64> = d.values.iter().map(|&(_, v)| v).collect();
        for (i, w) in sys.weyl().iter().enumerate() {
            let sign = if q % 2 == 0 { 1 } else { -1 } * w.sign;
            assert_eq!(vals[w.inv], sign * vals[i], "d(w^-1) symmetry at {i}");
        }
        let w0 = sys.weyl().iter().position(|w| w.word.len() == 4).unwrap();
        assert_eq!(vals[w0], 0, "the longest element of B2 is forced to zero");
    }

    #[test]
    fn twisted_sum_examples() {
        let a1 = root_system("A1").unwrap();
        let base = a1.base_chamber();
        let q_basis: Vec<RatVec> = a1
            .simple_roots()
            .iter()
            .map(|&i| a1.coroots()[i].clone())
            .collect();
        let trivial = SignCharacter::trivial(q_basis.clone());
        assert_eq!(
            twisted_sum_coroot(&a1, &base, &trivial, &v(&[1]), &v(&[-1])).unwrap(),
            psi_r(&a1, &base, &v(&[1]), &v(&[-1])).unwrap()
        );
        let chi = SignCharacter::new(q_basis, vec![true]);
        assert_eq!(
            twisted_sum_coroot(&a1, &base, &chi, &v(&[1]), &v(&[-1])).unwrap(),
            0
        );
    }

    #[test]
    fn b_constant_a1_examples() {
        let sys = root_system("A1").unwrap();
        let plus = sys.chamber_of(&v(&[1])).unwrap();
        let tau = v(&[1]);
        let b0 = b_constant(
            &sys,
            &BQuery {
                tau: tau.clone(),
                chamber: plus.clone(),
                x: v(&[1]),
                lambda: v(&[1]),
            },
        )
        .unwrap();
        assert_eq!(b0, 0, "vanishes unless lambda <= 0 on C_x");
        let b1 = b_constant(
            &sys,
            &BQuery {
                tau,
                chamber: plus,
                x: v(&[1]),
                lambda: v(&[-1]),
            },
        )
        .unwrap();
        assert_eq!(b1, 1);
    }

    #[test]
    fn b_constant_rejects_off_orbit_lambda() {
        let sys = root_system("A1").unwrap();
        let plus = sys.chamber_of(&v(&[1])).unwrap();
        let r = b_constant(
            &sys,
            &BQuery {
                tau: v(&[1]),
                chamber: plus,
                x: v(&[1]),
                lambda: v(&[2]),
            },
        );
        assert!(r.is_err());
    }

    #[test]
    fn b_sub_a1_values() {
        let sys = root_system("A1").unwrap();
        let plus = sys.chamber_of(&v(&[1])).unwrap();
        let alpha = sys.simple_roots()[0];
        let tau = v(&[1]);
        let y = v(&[0]);
        assert_eq!(b_sub(&sys, &tau, &plus, alpha, &y, &v(&[1])).unwrap(), 1);
        assert_eq!(b_sub(&sys, &tau, &plus, alpha, &y, &v(&[-1])).unwrap(), 0);
    }

    #[test]
    fn knapp_c_a1() {
        let sys = root_system("A1").unwrap();
        let plus = sys.chamber_of(&v(&[1])).unwrap();
        let lambda = v(&[1]);
        let s = sys.reflection_weyl_index(sys.simple_roots()[0]);
        assert_eq!(knapp_c(&sys, &BTreeSet::new(), s, &lambda, &plus).unwrap(), 1);
        assert_eq!(knapp_c(&sys, &BTreeSet::new(), 0, &lambda, &plus).unwrap(), 0);
    }
}
