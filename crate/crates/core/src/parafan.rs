//! Levi fans, Kostant representatives, weight-profile restriction and
//! truncated virtual weight sums, in the split model: the minimal Levi is
//! the full torus, the space is semisimple, and every parabolic is
//! semistandard.

use crate::cones::{arrangement_cells, cone_from_generators, Cone};
use crate::ratgeom::{canon_subspace_basis, solve_linear, RatMat, RatVec, SubspaceMap};
use crate::rootsys::{Chamber, RootSystem};
use crate::{Error, Result};
use num::{Signed, Zero};
use std::collections::HashMap;

/// A weight-profile parameter: a linear form on `X`, or a sentinel for the
/// very-negative / very-positive regimes.
#[derive(Clone, Debug)]
pub enum Nu {
    Finite(RatVec),
    NegInfinity,
    PosInfinity,
}

/// One cone of a Levi fan, in the coordinates of the fan's space.
pub struct FanCell {
    pub id: usize,
    /// Signs of the restricted roots on the cell.
    pub signs: Vec<i8>,
    /// Closure of the cell; `None` only for the zero-dimensional space.
    pub cone: Option<Cone>,
    /// A point in the relatively open cell.
    pub sample: RatVec,
    /// Canonical basis of the cell's span (the space `a_L`).
    pub span_basis: Vec<RatVec>,
    /// Root indices vanishing on the span (the Levi's roots).
    pub levi_roots: Vec<usize>,
}

impl FanCell {
    pub fn span_dim(&self) -> usize {
        self.span_basis.len()
    }
}

/// The decomposition of `a_M = {x : alpha_j(x) = 0, j in J}` into the
/// relatively open cones cut by the restricted roots; open cells correspond
/// to the parabolic subgroups with Levi `M`, all cells to parabolic
/// subgroups containing `M`.
pub struct LeviFan {
    pub system: RootSystem,
    pub levi_subset: Vec<usize>,
    /// Coordinates of the fan's space inside `X`.
    pub map: SubspaceMap,
    pub cells: Vec<FanCell>,
    by_signs: HashMap<Vec<i8>, usize>,
    /// Restricted-root normals, in fan coordinates, defining `signs`.
    normals: Vec<RatVec>,
}

impl LeviFan {
    pub fn space_dim(&self) -> usize {
        self.map.dim()
    }

    pub fn open_cells(&self) -> Vec<usize> {
        self.cells
            .iter()
            .filter(|c| c.span_dim() == self.space_dim())
            .map(|c| c.id)
            .collect()
    }

    /// The cell whose relatively open cone contains the given point (fan
    /// coordinates).
    pub fn cell_of(&self, p: &RatVec) -> Result<usize> {
        let signs: Vec<i8> = self
            .normals
            .iter()
            .map(|h| {
                let v = h.dot(p);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect();
        self.by_signs
            .get(&signs)
            .copied()
            .ok_or_else(|| Error::Internal("point matches no fan cell".into()))
    }

    /// Cell sample point in ambient `X` coordinates.
    pub fn sample_in_x(&self, cell: usize) -> RatVec {
        self.map.from_sub(&self.cells[cell].sample)
    }

    /// Generators of the cell closure in ambient `X` coordinates.
    pub fn closure_gens_in_x(&self, cell: usize) -> Vec<RatVec> {
        match &self.cells[cell].cone {
            Some(c) => c.generators().iter().map(|g| self.map.from_sub(g)).collect(),
            None => Vec::new(),
        }
    }

    /// Span basis of the cell in ambient `X` coordinates (the space `a_L`).
    pub fn span_in_x(&self, cell: usize) -> Vec<RatVec> {
        self.cells[cell]
            .span_basis
            .iter()
            .map(|b| self.map.from_sub(b))
            .collect()
    }

    /// Containment in the parabolic order: true iff the cell of `inner` lies
    /// in the closure of the cell of `outer` (so the parabolic of `inner`
    /// contains the parabolic of `outer`).
    pub fn in_closure(&self, inner: usize, outer: usize) -> bool {
        if self.space_dim() == 0 {
            return true;
        }
        let cone = self.cells[outer].cone.as_ref().expect("positive dim");
        cone.contains(&self.cells[inner].sample)
    }

    /// The distinguished open cell meeting the dominant cone.
    pub fn dominant_open_cell(&self) -> Result<usize> {
        if self.space_dim() == 0 {
            return Ok(0);
        }
        for &id in &self.open_cells() {
            let sx = self.sample_in_x(id);
            if self
                .system
                .simple_roots()
                .iter()
                .all(|&i| !self.system.roots()[i].dot(&sx).is_negative())
            {
                return Ok(id);
            }
        }
        Err(Error::Internal("no dominant open cell".into()))
    }
}

/// Builds the fan of `a_M` for a subset of the base simple roots.
pub fn levi_fan(sys: &RootSystem, levi_subset: &[usize]) -> Result<LeviFan> {
    let n = sys.dim();
    for &j in levi_subset {
        if j >= n {
            return Err(Error::Precondition(format!(
                "levi index {j} out of range for rank {n}"
            )));
        }
    }
    let cut: Vec<RatVec> = levi_subset
        .iter()
        .map(|&j| sys.roots()[sys.simple_roots()[j]].clone())
        .collect();
    let map = SubspaceMap::kernel_of(&cut, n);
    let m = map.dim();
    let mut normals: Vec<RatVec> = Vec::new();
    for r in sys.roots() {
        let restricted = map.to_sub_functional(r).sign_canonical();
        if !restricted.is_zero() && !normals.contains(&restricted) {
            normals.push(restricted);
        }
    }
    normals.sort();
    let mut cells = Vec::new();
    let mut by_signs = HashMap::new();
    if m == 0 {
        by_signs.insert(Vec::new(), 0);
        cells.push(FanCell {
            id: 0,
            signs: Vec::new(),
            cone: None,
            sample: RatVec::zero(0),
            span_basis: Vec::new(),
            levi_roots: (0..sys.roots().len()).collect(),
        });
    } else {
        for (id, cell) in arrangement_cells(&normals, m).into_iter().enumerate() {
            let cone = cone_from_generators(&cell.closure_gens, m)?;
            let span_basis = canon_subspace_basis(&cone.generators(), m);
            let span_x: Vec<RatVec> = span_basis.iter().map(|b| map.from_sub(b)).collect();
            let levi_roots: Vec<usize> = (0..sys.roots().len())
                .filter(|&i| span_x.iter().all(|v| sys.roots()[i].dot(v).is_zero()))
                .collect();
            by_signs.insert(cell.signs.clone(), id);
            cells.push(FanCell {
                id,
                signs: cell.signs,
                cone: Some(cone),
                sample: cell.sample,
                span_basis,
                levi_roots,
            });
        }
    }
    Ok(LeviFan {
        system: sys.clone(),
        levi_subset: levi_subset.to_vec(),
        map,
        cells,
        by_signs,
        normals,
    })
}

/// Minimal-length representatives of the cosets of the Levi's Weyl group:
/// the elements carrying the Levi's base-positive roots into the base
/// positive system. Returned as Weyl indices.
pub fn kostant_reps(sys: &RootSystem, levi_subset: &[usize]) -> Result<Vec<usize>> {
    let fan = levi_fan(sys, levi_subset)?;
    kostant_reps_for_chamber(&fan, &sys.base_chamber())
}

/// Restriction of `nu` to the Levi space of a fan cell, conjugating the
/// cell to its standard form first. The result is the ambient covector
/// supported on the cell's span that agrees with the restriction.
pub fn nu_restrict(fan: &LeviFan, nu: &RatVec, cell: usize) -> Result<RatVec> {
    let sys = &fan.system;
    if nu.dim() != sys.dim() {
        return Err(Error::DimensionMismatch("nu_restrict: nu dimension".into()));
    }
    if cell >= fan.cells.len() {
        return Err(Error::Precondition("cell id out of range".into()));
    }
    if fan.cells[cell].span_dim() == 0 {
        return Ok(RatVec::zero(sys.dim()));
    }
    // Carry the cell into the dominant cone by simple-reflection ascent.
    let mut p = fan.sample_in_x(cell);
    let mut w_mat = RatMat::identity(sys.dim());
    loop {
        let neg = sys
            .simple_roots()
            .iter()
            .position(|&i| sys.roots()[i].dot(&p).is_negative());
        match neg {
            Some(si) => {
                let refl = sys.reflection_matrix(sys.simple_roots()[si]);
                p = refl.mul_vec(&p);
                w_mat = refl.mul_mat(&w_mat);
            }
            None => break,
        }
    }
    // nu_cell(x) = nu(w x): pull back, then represent on the span.
    let pulled = w_mat.transpose().mul_vec(nu);
    let basis = fan.span_in_x(cell);
    orthogonal_representative(&pulled, &basis)
}

/// The covector supported on `span(basis)` (under the coordinate dot
/// product) agreeing with `u` there.
fn orthogonal_representative(u: &RatVec, basis: &[RatVec]) -> Result<RatVec> {
    if basis.is_empty() {
        return Ok(RatVec::zero(u.dim()));
    }
    let b = RatMat::from_cols(basis);
    let bt = b.transpose();
    let gram = bt.mul_mat(&b);
    let rhs = bt.mul_vec(u);
    let coeffs = solve_linear(&gram, &rhs)?
        .ok_or_else(|| Error::Internal("span gram is invertible".into()))?;
    Ok(b.mul_vec(&coeffs))
}

/// The upper-middle weight profile: minus the half-sum of the base positive
/// roots (the central character vanishes in the semisimple model).
pub fn nu_middle(sys: &RootSystem) -> RatVec {
    sys.rho(&sys.base_chamber()).neg()
}

/// One signed Kostant weight of a truncated virtual module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTerm {
    pub sign: i64,
    pub weight: RatVec,
    pub kostant_length: usize,
}

/// A signed list of weights representing a virtual module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VirtualWeightSum {
    pub terms: Vec<WeightTerm>,
}

/// The truncated virtual module of an open fan cell: Kostant weights
/// `w(lambda_B + rho_B) - rho_B` over the minimal coset representatives,
/// kept when the restriction clears the profile on the cell's dual cone.
pub fn truncated_cohomology(
    sys: &RootSystem,
    levi_subset: &[usize],
    cell: usize,
    lambda: &RatVec,
    nu: &Nu,
) -> Result<VirtualWeightSum> {
    let fan = levi_fan(sys, levi_subset)?;
    truncated_cohomology_in(&fan, cell, lambda, nu)
}

/// As [`truncated_cohomology`], against a prebuilt fan.
pub fn truncated_cohomology_in(
    fan: &LeviFan,
    cell: usize,
    lambda: &RatVec,
    nu: &Nu,
) -> Result<VirtualWeightSum> {
    let sys = &fan.system;
    for &i in sys.simple_roots() {
        if lambda.dot(&sys.coroots()[i]).is_negative() {
            return Err(Error::Precondition(format!(
                "{lambda} is not dominant for the base chamber"
            )));
        }
    }
    let m = fan.space_dim();
    if m > 0 && fan.cells[cell].span_dim() != m {
        return Err(Error::Precondition(
            "truncation is defined on open fan cells".into(),
        ));
    }
    let chamber = borel_above(fan, cell)?;
    let w_b = &sys.weyl()[chamber.index];
    let lambda_b = w_b.dual_matrix.mul_vec(lambda);
    let rho_b = sys.rho(&chamber);
    let shifted = lambda_b.add(&rho_b);
    let gens_x = fan.closure_gens_in_x(cell);
    let nu_cell = match nu {
        Nu::Finite(v) => Some(nu_restrict(fan, v, cell)?),
        _ => None,
    };
    let mut terms = Vec::new();
    for wi in kostant_reps_for_chamber(fan, &chamber)? {
        let w = &sys.weyl()[wi];
        let weight = w.dual_matrix.mul_vec(&shifted).sub(&rho_b);
        let length = length_wrt_chamber(sys, &chamber, wi);
        let keep = if m == 0 {
            true
        } else {
            match (&nu_cell, nu) {
                (Some(nu_p), _) => {
                    let diff = weight.sub(nu_p);
                    gens_x.iter().all(|g| !diff.dot(g).is_negative())
                }
                (None, Nu::NegInfinity) => true,
                (None, Nu::PosInfinity) => false,
                (None, Nu::Finite(_)) => unreachable!(),
            }
        };
        if keep {
            terms.push(WeightTerm {
                sign: if length % 2 == 0 { 1 } else { -1 },
                weight,
                kostant_length: length,
            });
        }
    }
    terms.sort_by(|a, b| {
        a.kostant_length
            .cmp(&b.kostant_length)
            .then_with(|| a.weight.cmp(&b.weight))
    });
    Ok(VirtualWeightSum { terms })
}

/// The chamber of a Borel subgroup lying above the fan cell: restricted
/// signs as on the cell, Levi-root signs as on the base chamber.
pub fn borel_above(fan: &LeviFan, cell: usize) -> Result<Chamber> {
    let sys = &fan.system;
    if fan.space_dim() == 0 {
        return Ok(sys.base_chamber());
    }
    let sx = fan.sample_in_x(cell);
    let base_signs = sys.base_chamber().signs().to_vec();
    let signs: Vec<bool> = sys
        .pair_reps()
        .iter()
        .enumerate()
        .map(|(p, &rep)| {
            let v = sys.roots()[rep].dot(&sx);
            if v.is_zero() {
                base_signs[p]
            } else {
                v.is_positive()
            }
        })
        .collect();
    sys.chamber_by_signs(&signs)
        .ok_or_else(|| Error::Internal("no Borel chamber above the cell".into()))
}

/// Kostant representatives of the Levi cosets relative to a Borel chamber:
/// the `w` whose inverse carries the Levi's chamber-positive roots to
/// chamber-positive roots.
pub fn kostant_reps_for_chamber(fan: &LeviFan, chamber: &Chamber) -> Result<Vec<usize>> {
    let sys = &fan.system;
    let signs = chamber.signs().to_vec();
    let positive = |root: &RatVec| -> bool {
        for (p, &rep) in sys.pair_reps().iter().enumerate() {
            if sys.roots()[rep] == *root {
                return signs[p];
            }
            if sys.roots()[sys.neg_of(rep)] == *root {
                return !signs[p];
            }
        }
        unreachable!("every root belongs to a pair")
    };
    let levi_positive: Vec<RatVec> = (0..sys.roots().len())
        .filter(|&i| fan.map.to_sub_functional(&sys.roots()[i]).is_zero())
        .map(|i| sys.roots()[i].clone())
        .filter(|r| positive(r))
        .collect();
    Ok(sys
        .weyl()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            let w_inv = &sys.weyl()[w.inv];
            levi_positive
                .iter()
                .all(|r| positive(&w_inv.dual_matrix.mul_vec(r)))
        })
        .map(|(i, _)| i)
        .collect())
}

/// Length of `w` with respect to the positive system of a chamber: the
/// number of chamber-positive root pairs sent to negative ones.
pub fn length_wrt_chamber(sys: &RootSystem, chamber: &Chamber, wi: usize) -> usize {
    let signs = chamber.signs();
    let w = &sys.weyl()[wi];
    let mut count = 0;
    for (p, &rep) in sys.pair_reps().iter().enumerate() {
        let root = if signs[p] {
            sys.roots()[rep].clone()
        } else {
            sys.roots()[sys.neg_of(rep)].clone()
        };
        let moved = w.dual_matrix.mul_vec(&root);
        let pair = sys.pair_pos_of(
            sys.roots()
                .iter()
                .position(|r| *r == moved)
                .expect("Weyl group permutes the roots"),
        );
        let moved_positive = if sys.roots()[sys.pair_reps()[pair]] == moved {
            signs[pair]
        } else {
            !signs[pair]
        };
        if !moved_positive {
            count += 1;
        }
    }
    count
}

/// The cone factor of the Lefschetz weights: `(-1)^{dim a_L}` times the
/// open-cone valuation of the cell at `(-x, restriction of mu minus the
/// profile)`.
pub fn lefschetz_weight_factor(
    fan: &LeviFan,
    cell: usize,
    x: &RatVec,
    mu: &RatVec,
    nu: &RatVec,
) -> Result<i64> {
    let sys = &fan.system;
    if x.dim() != sys.dim() || mu.dim() != sys.dim() || nu.dim() != sys.dim() {
        return Err(Error::DimensionMismatch(
            "lefschetz_weight_factor: ambient dimensions".into(),
        ));
    }
    let span = fan.span_in_x(cell);
    if span.is_empty() {
        if !x.is_zero() {
            return Err(Error::Precondition("x must lie in the cell's span".into()));
        }
        return Ok(1);
    }
    let sub = SubspaceMap::new(span.clone(), sys.dim());
    let x_l = sub
        .to_sub_point(x)
        .map_err(|_| Error::Precondition("x must lie in the cell's span".into()))?;
    let nu_cell = nu_restrict(fan, nu, cell)?;
    let diff = mu.sub(&nu_cell);
    let lam_l = sub.to_sub_functional(&diff);
    let gens: Result<Vec<RatVec>> = fan
        .closure_gens_in_x(cell)
        .iter()
        .map(|g| sub.to_sub_point(g))
        .collect();
    let cone = cone_from_generators(&gens?, span.len())?;
    let phi = cone.phi(&x_l.neg(), &lam_l);
    Ok(if span.len() % 2 == 0 { phi } else { -phi })
}

/// Checks the collapse of the alternating cone-membership sum over the
/// parabolic order onto the open-cone valuation of the cell containing
/// `-x`. Returns true when both sides agree.
pub fn identity_5_6_check(
    sys: &RootSystem,
    levi_subset: &[usize],
    x: &RatVec,
    mu: &RatVec,
    nu: &RatVec,
) -> Result<bool> {
    let fan = levi_fan(sys, levi_subset)?;
    if fan.space_dim() == 0 {
        if !x.is_zero() {
            return Err(Error::Precondition("x must lie in the fan space".into()));
        }
        return Ok(true);
    }
    let x_m = fan.map.to_sub_point(x)?;
    let q1 = fan.cell_of(&x_m.neg())?;
    let dim_l1 = fan.cells[q1].span_dim();

    let mut lhs = 0i64;
    for q in 0..fan.cells.len() {
        if !fan.in_closure(q, q1) {
            continue;
        }
        // -x in C_{Q1} + a_L(Q): relative interior of the sum cone
        let mut gens = match &fan.cells[q1].cone {
            Some(c) => c.generators(),
            None => Vec::new(),
        };
        for b in &fan.cells[q].span_basis {
            gens.push(b.clone());
            gens.push(b.neg());
        }
        let sum_cone = cone_from_generators(&gens, fan.space_dim())?;
        if !sum_cone.relint_contains(&x_m.neg()) {
            continue;
        }
        let nu_q = nu_restrict(&fan, nu, q)?;
        let diff = mu.sub(&nu_q);
        let ok = fan
            .closure_gens_in_x(q)
            .iter()
            .all(|g| !diff.dot(g).is_negative());
        if !ok {
            continue;
        }
        let sign_exp = dim_l1 - fan.cells[q].span_dim();
        lhs += if sign_exp % 2 == 0 { 1 } else { -1 };
    }
    let rhs = lefschetz_weight_factor(&fan, q1, x, mu, nu)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::root_system;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    #[test]
    fn a1_fan_of_full_torus() {
        let sys = root_system("A1").unwrap();
        let fan = levi_fan(&sys, &[]).unwrap();
        assert_eq!(fan.cells.len(), 3, "two rays and the origin");
        assert_eq!(fan.open_cells().len(), 2);
    }

    #[test]
    fn a2_fan_cell_count() {
        let sys = root_system("A2").unwrap();
        let fan = levi_fan(&sys, &[]).unwrap();
        assert_eq!(fan.cells.len(), 13, "6 chambers + 6 rays + origin");
        assert_eq!(fan.open_cells().len(), 6);
    }

    #[test]
    fn full_levi_gives_zero_space() {
        let sys = root_system("B2").unwrap();
        let fan = levi_fan(&sys, &[0, 1]).unwrap();
        assert_eq!(fan.space_dim(), 0);
        assert_eq!(fan.cells.len(), 1);
    }

    #[test]
    fn kostant_counts() {
        let a2 = root_system("A2").unwrap();
        let all = kostant_reps(&a2, &[]).unwrap();
        assert_eq!(all.len(), 6);
        let reps = kostant_reps(&a2, &[0]).unwrap();
        assert_eq!(reps.len(), 3);
        let mut lengths: Vec<usize> = reps.iter().map(|&w| a2.weyl()[w].word.len()).collect();
        lengths.sort();
        assert_eq!(lengths, vec![0, 1, 2]);
        let full = kostant_reps(&a2, &[0, 1]).unwrap();
        assert_eq!(full, vec![0], "full Levi leaves only the identity");
    }

    #[test]
    fn kostant_lengths_match_coset_minima() {
        let sys = root_system("B2").unwrap();
        for levi in [vec![], vec![0], vec![1]] {
            let reps = kostant_reps(&sys, &levi).unwrap();
            let levi_refls: Vec<usize> = levi
                .iter()
                .map(|&j| sys.reflection_weyl_index(sys.simple_roots()[j]))
                .collect();
            let mut wl: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
            wl.insert(0);
            let mut queue = vec![0usize];
            while let Some(w) = queue.pop() {
                for &g in &levi_refls {
                    let p = sys.weyl_mul(g, w);
                    if wl.insert(p) {
                        queue.push(p);
                    }
                }
            }
            assert_eq!(reps.len() * wl.len(), sys.weyl_order());
            let mut expected: Vec<usize> = Vec::new();
            let mut seen: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
            for w in 0..sys.weyl_order() {
                if seen.contains(&w) {
                    continue;
                }
                let coset: Vec<usize> = wl.iter().map(|&u| sys.weyl_mul(u, w)).collect();
                for &c in &coset {
                    seen.insert(c);
                }
                expected.push(
                    coset
                        .iter()
                        .map(|&c| sys.weyl()[c].word.len())
                        .min()
                        .unwrap(),
                );
            }
            expected.sort();
            let mut got: Vec<usize> = reps.iter().map(|&w| sys.weyl()[w].word.len()).collect();
            got.sort();
            assert_eq!(got, expected, "lengths of minimal coset representatives");
        }
    }

    #[test]
    fn nu_middle_a1() {
        let sys = root_system("A1").unwrap();
        let rho = sys.rho(&sys.base_chamber());
        assert_eq!(nu_middle(&sys), rho.neg());
    }

    #[test]
    fn nu_restrict_standard_cell_is_identity_on_full_span() {
        let sys = root_system("A2").unwrap();
        let fan = levi_fan(&sys, &[]).unwrap();
        let dom = fan.dominant_open_cell().unwrap();
        let nu = v(&[3, 5]);
        let r = nu_restrict(&fan, &nu, dom).unwrap();
        assert_eq!(r, nu);
    }

    #[test]
    fn truncated_cohomology_a1() {
        let sys = root_system("A1").unwrap();
        let fan = levi_fan(&sys, &[]).unwrap();
        let dom = fan.dominant_open_cell().unwrap();
        let lambda = v(&[3]);
        let full = truncated_cohomology_in(&fan, dom, &lambda, &Nu::NegInfinity).unwrap();
        assert_eq!(full.terms.len(), 2);
        assert_eq!(full.terms[0].sign, 1);
        assert_eq!(full.terms[0].weight, lambda);
        assert_eq!(full.terms[1].sign, -1);
        let alpha = sys.roots()[sys.simple_roots()[0]].clone();
        assert_eq!(full.terms[1].weight, lambda.neg().sub(&alpha));
        let mid =
            truncated_cohomology_in(&fan, dom, &lambda, &Nu::Finite(nu_middle(&sys))).unwrap();
        assert_eq!(mid.terms.len(), 1);
        assert_eq!(mid.terms[0].weight, lambda);
        let none = truncated_cohomology_in(&fan, dom, &lambda, &Nu::PosInfinity).unwrap();
        assert!(none.terms.is_empty());
    }

    #[test]
    fn truncated_cohomology_at_full_group() {
        let sys = root_system("A1").unwrap();
        let fan = levi_fan(&sys, &[0]).unwrap();
        let lambda = v(&[2]);
        for nu in [
            Nu::NegInfinity,
            Nu::PosInfinity,
            Nu::Finite(nu_middle(&sys)),
        ] {
            let vw = truncated_cohomology_in(&fan, 0, &lambda, &nu).unwrap();
            assert_eq!(vw.terms.len(), 1);
            assert_eq!(vw.terms[0].weight, lambda);
            assert_eq!(vw.terms[0].sign, 1);
        }
    }

    #[test]
    fn lefschetz_factor_zero_space() {
        let sys = root_system("A1").unwrap();
        let fan = levi_fan(&sys, &[0]).unwrap();
        let f = lefschetz_weight_factor(&fan, 0, &v(&[0]), &v(&[1]), &v(&[0])).unwrap();
        assert_eq!(f, 1);
    }

    #[test]
    fn identity_5_6_a1_sign_patterns() {
        let sys = root_system("A1").unwrap();
        let nu = v(&[0]);
        for x in [v(&[2]), v(&[-2])] {
            for mu in [v(&[3]), v(&[-3])] {
                assert!(identity_5_6_check(&sys, &[], &x, &mu, &nu).unwrap());
            }
        }
        assert!(identity_5_6_check(&sys, &[], &v(&[0]), &v(&[1]), &nu).unwrap());
    }

    #[test]
    fn identity_5_6_b2_samples() {
        let sys = root_system("B2").unwrap();
        let nu = v(&[1, -1]);
        for (a, b) in [(2, 3), (-1, 4), (3, -2), (-2, -5), (0, 2), (1, 0), (0, 0)] {
            let x = v(&[a, b]);
            for (c, d) in [(1, 1), (-3, 2), (0, -1)] {
                let mu = v(&[c, d]);
                assert!(
                    identity_5_6_check(&sys, &[], &x, &mu, &nu).unwrap(),
                    "collapse identity at x={x}, mu={mu}"
                );
            }
        }
    }

    #[test]
    fn nu_restrict_compatible_with_refinement() {
        let sys = root_system("A2").unwrap();
        let fan = levi_fan(&sys, &[]).unwrap();
        let nu = v(&[5, -3]);
        for q1 in 0..fan.cells.len() {
            for q2 in 0..fan.cells.len() {
                if q1 == q2 || !fan.in_closure(q2, q1) {
                    continue;
                }
                let nu1 = nu_restrict(&fan, &nu, q1).unwrap();
                let nu2 = nu_restrict(&fan, &nu, q2).unwrap();
                for b in fan.span_in_x(q2) {
                    assert_eq!(nu1.dot(&b), nu2.dot(&b), "compatible restrictions");
                }
            }
        }
    }
}
