//! Incremental double description over exact rationals.
//!
//! [`DdState`] maintains a generator description (lineality basis plus
//! extreme rays) of an intersection of closed halfspaces, adding one
//! halfspace at a time. Rays carry zero-sets over the processed constraint
//! indices; adjacency of rays is decided by the standard combinatorial test.

use crate::ratgeom::{Rat, RatVec};
use num::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub v: RatVec,
    /// Bit i set iff constraint i vanishes on the ray.
    pub zero: u128,
}

#[derive(Clone, Debug)]
pub(crate) struct DdState {
    pub dim: usize,
    pub lin: Vec<RatVec>,
    pub rays: Vec<Ray>,
    pub constraints: Vec<RatVec>,
}

pub(crate) const MAX_CONSTRAINTS: usize = 128;

impl DdState {
    /// The full space.
    pub fn full(dim: usize) -> Self {
        DdState {
            dim,
            lin: (0..dim).map(|i| RatVec::unit(dim, i)).collect(),
            rays: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn generators(&self) -> Vec<RatVec> {
        let mut gens: Vec<RatVec> = self.rays.iter().map(|r| r.v.clone()).collect();
        for l in &self.lin {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        gens
    }

    /// A point in the relative interior: the sum of all extreme rays.
    pub fn relint_point(&self) -> RatVec {
        let mut p = RatVec::zero(self.dim);
        for r in &self.rays {
            p = p.add(&r.v);
        }
        p
    }

    /// True iff `h` vanishes on the whole current cone.
    pub fn vanishes(&self, h: &RatVec) -> bool {
        self.lin.iter().all(|l| h.dot(l).is_zero())
            && self.rays.iter().all(|r| h.dot(&r.v).is_zero())
    }

    fn recompute_zero_set(&self, v: &RatVec) -> u128 {
        let mut z = 0u128;
        for (i, c) in self.constraints.iter().enumerate() {
            if c.dot(v).is_zero() {
                z |= 1 << i;
            }
        }
        z
    }

    /// Intersects the cone with `{x : h(x) >= 0}`.
    pub fn add_halfspace(&mut self, h: &RatVec) {
        assert!(
            self.constraints.len() < MAX_CONSTRAINTS,
            "double description limited to {MAX_CONSTRAINTS} constraints"
        );
        let idx = self.constraints.len();
        self.constraints.push(h.clone());
        if h.is_zero() {
            for r in &mut self.rays {
                r.zero |= 1 << idx;
            }
            return;
        }

        // A lineality direction hit by h turns into a ray; the rest of the
        // lineality basis and all rays are shifted into ker(h). Earlier
        // constraints vanish on the lineality space, so their values on the
        // shifted rays are unchanged.
        if let Some(k) = self.lin.iter().position(|b| !h.dot(b).is_zero()) {
            let mut b = self.lin.remove(k);
            if h.dot(&b).is_negative() {
                b = b.neg();
            }
            let hb = h.dot(&b);
            let shift = |v: &RatVec, hv: &Rat| v.sub(&b.scale(&(hv / &hb)));
            for l in &mut self.lin {
                let hl = h.dot(l);
                if !hl.is_zero() {
                    *l = shift(l, &hl);
                }
            }
            for r in &mut self.rays {
                let hr = h.dot(&r.v);
                if !hr.is_zero() {
                    r.v = shift(&r.v, &hr).primitive();
                }
                r.zero |= 1 << idx;
            }
            let zero = self.recompute_zero_set(&b);
            self.rays.push(Ray {
                v: b.primitive(),
                zero,
            });
            return;
        }

        let mut pos: Vec<Ray> = Vec::new();
        let mut neg: Vec<Ray> = Vec::new();
        let mut zero: Vec<Ray> = Vec::new();
        for r in self.rays.drain(..) {
            match h.dot(&r.v).cmp(&Rat::from_integer(0.into())) {
                Ordering::Greater => pos.push(r),
                Ordering::Less => neg.push(r),
                Ordering::Equal => {
                    let mut r = r;
                    r.zero |= 1 << idx;
                    zero.push(r);
                }
            }
        }
        if neg.is_empty() {
            self.rays = pos;
            self.rays.extend(zero);
            return;
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for p in &pos {
            for n in &neg {
                if !self.adjacent(p, n, &pos, &neg, &zero) {
                    continue;
                }
                let hp = h.dot(&p.v);
                let hn = h.dot(&n.v);
                // (h.p) n + (-h.n) p lies in ker(h) and in the cone.
                let v = n.v.scale(&hp).add(&p.v.scale(&-hn)).primitive();
                if v.is_zero() || new_rays.iter().any(|r| r.v == v) {
                    continue;
                }
                let z = self.recompute_zero_set(&v);
                new_rays.push(Ray { v, zero: z });
            }
        }
        self.rays = pos;
        self.rays.extend(zero);
        self.rays.extend(new_rays);
    }

    fn adjacent(&self, p: &Ray, n: &Ray, pos: &[Ray], neg: &[Ray], zero: &[Ray]) -> bool {
        let common = p.zero & n.zero;
        let others = pos
            .iter()
            .chain(neg.iter())
            .chain(zero.iter())
            .filter(|r| r.v != p.v && r.v != n.v);
        for r in others {
            if r.zero & common == common {
                return false;
            }
        }
        true
    }
}

/// Generator description `(lineality, rays)` of `{x : h(x) >= 0 for all h}`.
pub(crate) fn vrep_from_hrep(halfspaces: &[RatVec], dim: usize) -> (Vec<RatVec>, Vec<RatVec>) {
    let mut state = DdState::full(dim);
    let mut seen: Vec<RatVec> = Vec::new();
    for h in halfspaces {
        let hp = h.primitive();
        if hp.is_zero() || seen.contains(&hp) {
            continue;
        }
        seen.push(hp.clone());
        state.add_halfspace(&hp);
    }
    (
        state.lin,
        state.rays.into_iter().map(|r| r.v).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::RatVec;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_ints(c)
    }

    #[test]
    fn quadrant() {
        let (lin, rays) = vrep_from_hrep(&[v(&[1, 0]), v(&[0, 1])], 2);
        assert!(lin.is_empty());
        assert_eq!(rays.len(), 2);
        assert!(rays.contains(&v(&[1, 0])));
        assert!(rays.contains(&v(&[0, 1])));
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let (lin, rays) = vrep_from_hrep(&[v(&[1, 0])], 2);
        assert_eq!(lin.len(), 1);
        assert_eq!(rays.len(), 1);
        assert!(lin[0].get(1).is_zero() == false || rays[0].get(0).is_zero() == false);
    }

    #[test]
    fn origin_from_opposite_halfspaces() {
        let (lin, rays) = vrep_from_hrep(&[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])], 2);
        assert!(lin.is_empty());
        assert!(rays.is_empty());
    }

    #[test]
    fn simplicial_3d() {
        let (lin, rays) = vrep_from_hrep(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])], 3);
        assert!(lin.is_empty());
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn square_cone_over_4_facets() {
        // x3 >= |x1|, x3 >= |x2| written as four halfspaces.
        let hs = [v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])];
        let (lin, rays) = vrep_from_hrep(&hs, 3);
        assert!(lin.is_empty());
        assert_eq!(rays.len(), 4);
        for r in &rays {
            for h in &hs {
                assert!(!h.dot(r).is_negative());
            }
        }
    }

    #[test]
    fn redundant_constraint_ignored() {
        let (lin, rays) = vrep_from_hrep(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], 2);
        assert!(lin.is_empty());
        assert_eq!(rays.len(), 2);
    }
}
