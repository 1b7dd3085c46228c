//! Root systems, Weyl groups, chambers and the subsystem constructions.
//!
//! Systems are realized with the simple roots as the standard basis of
//! `X*`, so roots and coroots have integer coordinates and the pairing is
//! the dot product. Chambers are stored as sign vectors over the root pairs;
//! the Weyl group is enumerated once and cached.

use crate::cones::{arrangement_cells, cone_from_generators, cone_from_inequalities, Cone};
use crate::ratgeom::{
    canon_subspace_basis, rat, QuotientMap, Rat, RatMat, RatVec, SignCharacter, SubspaceMap,
};
use crate::{Error, Result};
use num::{Integer, One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Maximum rank accepted by the constructors, overridable through the
/// `RANK_LIMIT` environment variable.
fn rank_limit() -> usize {
    std::env::var("RANK_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(4)
}

/// An element of the Weyl group with its action on both sides.
#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Action on `X`.
    pub matrix: RatMat,
    /// Contragredient action on `X*`.
    pub dual_matrix: RatMat,
    /// Reduced word in the base simple reflections.
    pub word: Vec<usize>,
    /// Index of the inverse element.
    pub inv: usize,
    /// `(-1)^{length}`, equal to the determinant of `matrix`.
    pub sign: i64,
}

impl WeylElement {
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

struct ChamberSet {
    /// Sign vector over the root pairs for each chamber; chamber index i is
    /// the chamber `w_i(C_0)`.
    signs: Vec<Vec<bool>>,
    by_signs: HashMap<Vec<bool>, usize>,
}

pub(crate) struct WallModel {
    pub map: SubspaceMap,
    pub system: RootSystem,
}

struct SystemData {
    dim: usize,
    roots: Vec<RatVec>,
    coroots: Vec<RatVec>,
    label: Option<String>,
    neg_of: Vec<usize>,
    /// One root index per `{alpha, -alpha}` pair, the one positive on the
    /// base chamber.
    pair_rep: Vec<usize>,
    /// Simple root indices for the base chamber.
    simple: Vec<usize>,
    /// Primitive generators of the base chamber rays, aligned with `simple`.
    coweight_rays: Vec<RatVec>,
    base_point: RatVec,
    weyl: OnceLock<Vec<WeylElement>>,
    weyl_by_matrix: OnceLock<HashMap<RatMat, usize>>,
    chambers: OnceLock<ChamberSet>,
    reflection_of_pair: OnceLock<Vec<usize>>,
    rays: OnceLock<Vec<RatVec>>,
    dual_rays: OnceLock<Vec<RatVec>>,
    deltas: OnceLock<Vec<RatVec>>,
    rhos: OnceLock<Vec<RatVec>>,
    dual_system: OnceLock<RootSystem>,
    wall_models: Mutex<HashMap<usize, Arc<WallModel>>>,
    pub(crate) cbar_cache: Mutex<HashMap<RatVec, Arc<Vec<i64>>>>,
}

/// A finite crystallographic root system spanning `X*`, or the empty system
/// on a zero-dimensional space.
#[derive(Clone)]
pub struct RootSystem {
    inner: Arc<SystemData>,
}

impl std::fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RootSystem(dim {}, {} roots{})",
            self.inner.dim,
            self.inner.roots.len(),
            self.inner
                .label
                .as_deref()
                .map(|l| format!(", {l}"))
                .unwrap_or_default()
        )
    }
}

/// A Weyl chamber, indexed against its system's chamber enumeration.
#[derive(Clone)]
pub struct Chamber {
    pub system: RootSystem,
    pub index: usize,
}

impl std::fmt::Debug for Chamber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Chamber({})", self.word())
    }
}

impl PartialEq for Chamber {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.system.inner, &other.system.inner) && self.index == other.index
    }
}
impl Eq for Chamber {}

impl Chamber {
    /// Reduced word of the Weyl element carrying the base chamber here.
    pub fn word(&self) -> String {
        self.system.weyl()[self.index].word_string()
    }

    /// A deep interior point.
    pub fn interior_point(&self) -> RatVec {
        self.system.weyl()[self.index]
            .matrix
            .mul_vec(&self.system.inner.base_point)
    }

    pub fn signs(&self) -> &[bool] {
        &self.system.chamber_set().signs[self.index]
    }

    /// The closed chamber as a cone.
    pub fn closure(&self) -> Cone {
        let sys = &self.system;
        let ineqs: Vec<RatVec> = sys
            .inner
            .pair_rep
            .iter()
            .zip(self.signs())
            .map(|(&r, &pos)| {
                if pos {
                    sys.inner.roots[r].clone()
                } else {
                    sys.inner.roots[r].neg()
                }
            })
            .collect();
        cone_from_inequalities(&ineqs, sys.inner.dim).expect("chamber cone")
    }
}

/// Cartan matrix validation: integer entries, 2 on the diagonal,
/// non-positive off the diagonal with symmetric vanishing, and positive
/// definite symmetrization.
fn validate_cartan(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::Unsupported("Cartan matrix must be square".into()));
        }
    }
    for i in 0..n {
        if a[i][i] != 2 {
            return Err(Error::Unsupported("Cartan diagonal must be 2".into()));
        }
        for j in 0..n {
            if i != j {
                if a[i][j] > 0 {
                    return Err(Error::Unsupported(
                        "off-diagonal Cartan entries must be non-positive".into(),
                    ));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::Unsupported(
                        "Cartan entries must vanish symmetrically".into(),
                    ));
                }
            }
        }
    }
    // Symmetrize: d_i a_ij = d_j a_ji with d_i > 0, then check positive
    // definiteness, which characterizes finite type.
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rat::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if a[i][j] != 0 && i != j {
                    let want = d[i].clone().unwrap() * rat(a[i][j]) / rat(a[j][i]);
                    match &d[j] {
                        None => {
                            d[j] = Some(want);
                            stack.push(j);
                        }
                        Some(have) => {
                            if *have != want {
                                return Err(Error::Unsupported(
                                    "Cartan matrix is not symmetrizable".into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut sym = RatMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            sym.set(i, j, d[i].clone().unwrap() * rat(a[i][j]));
        }
    }
    if !sym.is_positive_definite() {
        return Err(Error::Unsupported(
            "Cartan matrix is not of finite type".into(),
        ));
    }
    Ok(())
}

fn cartan_of_type(name: &str) -> Result<Vec<Vec<i64>>> {
    let name = name.trim();
    if name.len() < 2 {
        return Err(Error::Unsupported(format!("unknown Cartan type {name:?}")));
    }
    let (family, rank_str) = name.split_at(1);
    let n: usize = rank_str
        .parse()
        .map_err(|_| Error::Unsupported(format!("unknown Cartan type {name:?}")))?;
    if n == 0 {
        return Err(Error::Unsupported(format!("unknown Cartan type {name:?}")));
    }
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..n - 1 {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match (family, n) {
        ("A", _) => {
            if n > 1 {
                chain(&mut a);
            }
        }
        ("B", _) if n >= 2 => {
            chain(&mut a);
            // last simple root short
            a[n - 1][n - 2] = -2;
        }
        ("C", _) if n >= 2 => {
            chain(&mut a);
            // last simple root long
            a[n - 2][n - 1] = -2;
        }
        ("D", _) if n >= 3 => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        ("G", 2) => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
        ("F", 4) => {
            chain(&mut a);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "unsupported Cartan type {name:?}"
            )))
        }
    }
    Ok(a)
}

/// Builds a root system from a Cartan-type string such as `"B2"`, a product
/// `"A1xA1"`, or an explicit Cartan matrix in JSON form `"[[2,-1],[-1,2]]"`.
pub fn root_system(spec: &str) -> Result<RootSystem> {
    if spec.trim_start().starts_with('[') {
        let matrix: Vec<Vec<i64>> = serde_json::from_str(spec)
            .map_err(|e| Error::Unsupported(format!("bad Cartan matrix JSON: {e}")))?;
        return root_system_from_cartan(&matrix);
    }
    let mut blocks: Vec<Vec<Vec<i64>>> = Vec::new();
    for part in spec.split('x') {
        blocks.push(cartan_of_type(part)?);
    }
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0i64; n]; n];
    let mut off = 0;
    for b in &blocks {
        for i in 0..b.len() {
            for j in 0..b.len() {
                a[off + i][off + j] = b[i][j];
            }
        }
        off += b.len();
    }
    let sys = root_system_from_cartan(&a)?;
    let mut data = sys.inner;
    Arc::get_mut(&mut data)
        .expect("fresh system is unshared")
        .label = Some(spec.to_string());
    Ok(RootSystem { inner: data })
}

/// Root system from an explicit Cartan matrix `a[i][j] = <alpha_j, alpha_i^vee>`.
pub fn root_system_from_cartan(a: &[Vec<i64>]) -> Result<RootSystem> {
    validate_cartan(a)?;
    let n = a.len();
    if n > rank_limit() {
        return Err(Error::Unsupported(format!(
            "rank {n} exceeds RANK_LIMIT {}",
            rank_limit()
        )));
    }
    // Simple roots are the standard basis of X*; simple coroots are the rows
    // of the Cartan matrix.
    let mut roots: Vec<RatVec> = Vec::new();
    let mut coroots: Vec<RatVec> = Vec::new();
    for i in 0..n {
        roots.push(RatVec::unit(n, i));
        coroots.push(RatVec::new((0..n).map(|j| rat(a[i][j])).collect()));
    }
    // Close under the simple reflections.
    let mut frontier: Vec<usize> = (0..n).collect();
    while let Some(idx) = frontier.pop() {
        for i in 0..n {
            let beta = roots[idx].clone();
            let beta_v = coroots[idx].clone();
            let new_root = beta.sub(&roots[i].scale(&beta.dot(&coroots[i])));
            let new_coroot = beta_v.sub(&coroots[i].scale(&roots[i].dot(&beta_v)));
            if !roots.contains(&new_root) {
                roots.push(new_root);
                coroots.push(new_coroot);
                frontier.push(roots.len() - 1);
                if roots.len() > 10_000 {
                    return Err(Error::Unsupported(
                        "root closure did not terminate; matrix is not of finite type".into(),
                    ));
                }
            }
        }
    }
    from_root_data(
        n,
        roots,
        coroots,
        Some(RatVec::from_ints(&vec![1; n])),
        None,
    )
}

fn empty_data() -> SystemData {
    SystemData {
        dim: 0,
        roots: Vec::new(),
        coroots: Vec::new(),
        label: Some("empty".into()),
        neg_of: Vec::new(),
        pair_rep: Vec::new(),
        simple: Vec::new(),
        coweight_rays: Vec::new(),
        base_point: RatVec::zero(0),
        weyl: OnceLock::new(),
        weyl_by_matrix: OnceLock::new(),
        chambers: OnceLock::new(),
        reflection_of_pair: OnceLock::new(),
        rays: OnceLock::new(),
        dual_rays: OnceLock::new(),
        deltas: OnceLock::new(),
        rhos: OnceLock::new(),
        dual_system: OnceLock::new(),
        wall_models: Mutex::new(HashMap::new()),
        cbar_cache: Mutex::new(HashMap::new()),
    }
}

/// The empty root system on a zero-dimensional space.
pub fn empty_system() -> RootSystem {
    RootSystem {
        inner: Arc::new(empty_data()),
    }
}

/// Assembles a system from aligned root/coroot lists. `hint`, when given,
/// must be a regular point; it selects the base chamber. Pass `None` to let
/// a deterministic search pick one.
pub(crate) fn from_root_data(
    dim: usize,
    roots: Vec<RatVec>,
    coroots: Vec<RatVec>,
    hint: Option<RatVec>,
    label: Option<String>,
) -> Result<RootSystem> {
    if dim == 0 || roots.is_empty() {
        if roots.is_empty() && dim == 0 {
            return Ok(empty_system());
        }
        return Err(Error::Unsupported(
            "root data must span a positive-dimensional space".into(),
        ));
    }
    for (r, c) in roots.iter().zip(&coroots) {
        if r.dot(c) != rat(2) {
            return Err(Error::Unsupported(format!(
                "root/coroot pair ({r};{c}) does not pair to 2"
            )));
        }
    }
    if canon_subspace_basis(&roots, dim).len() != dim {
        return Err(Error::Unsupported(
            "roots do not span the dual space".into(),
        ));
    }
    let neg_of: Vec<usize> = roots
        .iter()
        .map(|r| {
            let neg = r.neg();
            roots
                .iter()
                .position(|s| *s == neg)
                .ok_or_else(|| Error::Unsupported(format!("root set not symmetric at {r}")))
        })
        .collect::<Result<_>>()?;

    // Base point: the hint, or a deterministic regular candidate.
    let base_hint = match hint {
        Some(h) => {
            if roots.iter().any(|r| r.dot(&h).is_zero()) {
                return Err(Error::NotRegular(
                    "base hint lies on a root hyperplane".into(),
                ));
            }
            h
        }
        None => {
            let mut found = None;
            'outer: for k in 1i64..200 {
                let cand = RatVec::new(
                    (0..dim)
                        .map(|i| {
                            Rat::new((k + (i as i64 + 1).pow(3)).into(), (k + i as i64).into())
                        })
                        .collect(),
                );
                if roots.iter().all(|r| !r.dot(&cand).is_zero()) {
                    found = Some(cand);
                    break 'outer;
                }
            }
            found.ok_or_else(|| Error::Internal("no regular base point found".into()))?
        }
    };

    let pair_rep: Vec<usize> = (0..roots.len())
        .filter(|&i| roots[i].dot(&base_hint).is_positive())
        .collect();
    // Base chamber cone; its facets are the simple roots, its rays the
    // fundamental coweight directions.
    let pos_forms: Vec<RatVec> = pair_rep.iter().map(|&i| roots[i].clone()).collect();
    let base_cone = cone_from_inequalities(&pos_forms, dim)?;
    let mut simple = Vec::new();
    for f in base_cone.facet_normals() {
        let idx = pair_rep
            .iter()
            .copied()
            .find(|&i| roots[i].sign_canonical() == f.sign_canonical())
            .ok_or_else(|| Error::Internal("facet normal is not a root".into()))?;
        simple.push(idx);
    }
    if simple.len() != dim || base_cone.rays().len() != dim {
        return Err(Error::Internal("base chamber is not simplicial".into()));
    }
    // Order rays so that ray i pairs positively with simple root i only.
    let mut coweight_rays = vec![RatVec::zero(dim); dim];
    for ray in base_cone.rays() {
        let pos: Vec<usize> = (0..dim)
            .filter(|&i| roots[simple[i]].dot(ray).is_positive())
            .collect();
        if pos.len() != 1 {
            return Err(Error::Internal(
                "chamber ray pairs with several simples".into(),
            ));
        }
        coweight_rays[pos[0]] = ray.clone();
    }
    let mut base = RatVec::zero(dim);
    for r in &coweight_rays {
        base = base.add(r);
    }

    Ok(RootSystem {
        inner: Arc::new(SystemData {
            dim,
            roots,
            coroots,
            label,
            neg_of,
            pair_rep,
            simple,
            coweight_rays,
            base_point: base,
            weyl: OnceLock::new(),
            weyl_by_matrix: OnceLock::new(),
            chambers: OnceLock::new(),
            reflection_of_pair: OnceLock::new(),
            rays: OnceLock::new(),
            dual_rays: OnceLock::new(),
            deltas: OnceLock::new(),
            rhos: OnceLock::new(),
            dual_system: OnceLock::new(),
            wall_models: Mutex::new(HashMap::new()),
            cbar_cache: Mutex::new(HashMap::new()),
        }),
    })
}

impl RootSystem {
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn label(&self) -> Option<&str> {
        self.inner.label.as_deref()
    }

    pub fn roots(&self) -> &[RatVec] {
        &self.inner.roots
    }

    pub fn coroots(&self) -> &[RatVec] {
        &self.inner.coroots
    }

    pub fn neg_of(&self, i: usize) -> usize {
        self.inner.neg_of[i]
    }

    /// Indices of the representative (base-positive) root of each pair.
    pub fn pair_reps(&self) -> &[usize] {
        &self.inner.pair_rep
    }

    /// Simple root indices of the base chamber.
    pub fn simple_roots(&self) -> &[usize] {
        &self.inner.simple
    }

    pub fn base_point(&self) -> &RatVec {
        &self.inner.base_point
    }

    pub fn coweight_rays(&self) -> &[RatVec] {
        &self.inner.coweight_rays
    }

    pub fn positive_root_count(&self) -> usize {
        self.inner.pair_rep.len()
    }

    pub fn same_system(&self, other: &RootSystem) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// The full Weyl group, enumerated by breadth-first closure over the
    /// simple reflections. The identity is element 0.
    pub fn weyl(&self) -> &[WeylElement] {
        self.inner.weyl.get_or_init(|| {
            let n = self.inner.dim;
            if n == 0 {
                return vec![WeylElement {
                    matrix: RatMat::identity(0),
                    dual_matrix: RatMat::identity(0),
                    word: Vec::new(),
                    inv: 0,
                    sign: 1,
                }];
            }
            let gens: Vec<RatMat> = self
                .inner
                .simple
                .iter()
                .map(|&i| self.reflection_matrix(i))
                .collect();
            let mut elems: Vec<(RatMat, Vec<usize>)> = vec![(RatMat::identity(n), Vec::new())];
            let mut seen: HashMap<RatMat, usize> = HashMap::new();
            seen.insert(RatMat::identity(n), 0);
            let mut head = 0;
            while head < elems.len() {
                let (m, w) = elems[head].clone();
                head += 1;
                for (gi, g) in gens.iter().enumerate() {
                    let prod = m.mul_mat(g);
                    if !seen.contains_key(&prod) {
                        let mut word = w.clone();
                        word.push(gi);
                        seen.insert(prod.clone(), elems.len());
                        elems.push((prod, word));
                    }
                }
            }
            let inv_of: Vec<usize> = elems
                .iter()
                .map(|(m, _)| seen[&m.inverse().expect("Weyl matrices are invertible")])
                .collect();
            elems
                .iter()
                .enumerate()
                .map(|(i, (m, w))| WeylElement {
                    matrix: m.clone(),
                    dual_matrix: elems[inv_of[i]].0.transpose(),
                    word: w.clone(),
                    inv: inv_of[i],
                    sign: if w.len() % 2 == 0 { 1 } else { -1 },
                })
                .collect()
        })
    }

    fn weyl_by_matrix(&self) -> &HashMap<RatMat, usize> {
        self.inner.weyl_by_matrix.get_or_init(|| {
            self.weyl()
                .iter()
                .enumerate()
                .map(|(i, e)| (e.matrix.clone(), i))
                .collect()
        })
    }

    pub fn weyl_index_of(&self, m: &RatMat) -> Option<usize> {
        self.weyl_by_matrix().get(m).copied()
    }

    /// Index of the product `w1 * w2`.
    pub fn weyl_mul(&self, w1: usize, w2: usize) -> usize {
        let m = self.weyl()[w1].matrix.mul_mat(&self.weyl()[w2].matrix);
        self.weyl_index_of(&m).expect("group closed under product")
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl().len()
    }

    /// Reflection matrix on `X` for the root at `index`.
    pub fn reflection_matrix(&self, index: usize) -> RatMat {
        let n = self.inner.dim;
        let alpha = &self.inner.roots[index];
        let alpha_v = &self.inner.coroots[index];
        let mut m = RatMat::identity(n);
        for a in 0..n {
            for b in 0..n {
                let v = m.get(a, b) - alpha_v.get(a) * alpha.get(b);
                m.set(a, b, v);
            }
        }
        m
    }

    /// Weyl index of the reflection in each root pair.
    fn reflections(&self) -> &[usize] {
        self.inner.reflection_of_pair.get_or_init(|| {
            self.inner
                .pair_rep
                .iter()
                .map(|&i| {
                    self.weyl_index_of(&self.reflection_matrix(i))
                        .expect("reflections lie in the Weyl group")
                })
                .collect()
        })
    }

    pub fn reflection_weyl_index(&self, root_index: usize) -> usize {
        let pair_pos = self.pair_pos_of(root_index);
        self.reflections()[pair_pos]
    }

    pub(crate) fn pair_pos_of(&self, root_index: usize) -> usize {
        self.inner
            .pair_rep
            .iter()
            .position(|&r| r == root_index || r == self.inner.neg_of[root_index])
            .expect("root index in range")
    }

    fn chamber_set(&self) -> &ChamberSet {
        self.inner.chambers.get_or_init(|| {
            let signs: Vec<Vec<bool>> = self
                .weyl()
                .iter()
                .map(|w| {
                    let p = w.matrix.mul_vec(&self.inner.base_point);
                    self.inner
                        .pair_rep
                        .iter()
                        .map(|&r| self.inner.roots[r].dot(&p).is_positive())
                        .collect()
                })
                .collect();
            let by_signs = signs
                .iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect();
            ChamberSet { signs, by_signs }
        })
    }

    pub fn chambers(&self) -> Vec<Chamber> {
        (0..self.weyl_order())
            .map(|index| Chamber {
                system: self.clone(),
                index,
            })
            .collect()
    }

    pub fn chamber(&self, index: usize) -> Chamber {
        Chamber {
            system: self.clone(),
            index,
        }
    }

    pub fn base_chamber(&self) -> Chamber {
        self.chamber(0)
    }

    /// The chamber containing a regular point.
    pub fn chamber_of(&self, x: &RatVec) -> Result<Chamber> {
        if x.dim() != self.inner.dim {
            return Err(Error::DimensionMismatch(
                "chamber_of: point dimension".into(),
            ));
        }
        let mut signs = Vec::with_capacity(self.inner.pair_rep.len());
        for &r in &self.inner.pair_rep {
            let v = self.inner.roots[r].dot(x);
            if v.is_zero() {
                return Err(Error::NotRegular(format!(
                    "{x} lies on the hyperplane of root {}",
                    self.inner.roots[r]
                )));
            }
            signs.push(v.is_positive());
        }
        let index = *self
            .chamber_set()
            .by_signs
            .get(&signs)
            .ok_or_else(|| Error::Internal("sign vector matches no chamber".into()))?;
        Ok(self.chamber(index))
    }

    /// Chamber with the given sign vector over the pair representatives.
    pub fn chamber_by_signs(&self, signs: &[bool]) -> Option<Chamber> {
        self.chamber_set()
            .by_signs
            .get(signs)
            .map(|&index| self.chamber(index))
    }

    /// Number of root hyperplanes separating two chambers.
    pub fn length(&self, c1: &Chamber, c2: &Chamber) -> Result<usize> {
        if !self.same_system(&c1.system) || !self.same_system(&c2.system) {
            return Err(Error::Precondition(
                "length: chambers from another system".into(),
            ));
        }
        let s1 = &self.chamber_set().signs[c1.index];
        let s2 = &self.chamber_set().signs[c2.index];
        Ok(s1.iter().zip(s2).filter(|(a, b)| a != b).count())
    }

    pub fn epsilon(&self, c1: &Chamber, c2: &Chamber) -> Result<i64> {
        Ok(if self.length(c1, c2)? % 2 == 0 { 1 } else { -1 })
    }

    /// Half-sum of the coroots positive on the chamber.
    pub fn delta(&self, c: &Chamber) -> RatVec {
        self.inner.deltas.get_or_init(|| {
            (0..self.weyl_order())
                .map(|i| {
                    let signs = &self.chamber_set().signs[i];
                    let mut sum = RatVec::zero(self.inner.dim);
                    for (&r, &pos) in self.inner.pair_rep.iter().zip(signs) {
                        let co = &self.inner.coroots[r];
                        sum = if pos { sum.add(co) } else { sum.sub(co) };
                    }
                    sum.scale(&Rat::new(1.into(), 2.into()))
                })
                .collect()
        })[c.index]
            .clone()
    }

    /// Half-sum of the roots positive on the chamber.
    pub fn rho(&self, c: &Chamber) -> RatVec {
        self.inner.rhos.get_or_init(|| {
            (0..self.weyl_order())
                .map(|i| {
                    let signs = &self.chamber_set().signs[i];
                    let mut sum = RatVec::zero(self.inner.dim);
                    for (&r, &pos) in self.inner.pair_rep.iter().zip(signs) {
                        let root = &self.inner.roots[r];
                        sum = if pos { sum.add(root) } else { sum.sub(root) };
                    }
                    sum.scale(&Rat::new(1.into(), 2.into()))
                })
                .collect()
        })[c.index]
            .clone()
    }

    /// All primitive generators of 1-dimensional faces of closed chambers
    /// (the Weyl orbit of the base fundamental coweight rays).
    pub fn chamber_rays(&self) -> &[RatVec] {
        self.inner.rays.get_or_init(|| {
            let mut out: Vec<RatVec> = Vec::new();
            for w in self.weyl() {
                for ray in &self.inner.coweight_rays {
                    let r = w.matrix.mul_vec(ray).primitive();
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
            out.sort();
            out
        })
    }

    /// Weyl orbit of the base dual-chamber rays (fundamental weight
    /// directions); the 1-dimensional faces of closed Weyl chambers in `X*`.
    pub fn dual_chamber_rays(&self) -> &[RatVec] {
        self.inner.dual_rays.get_or_init(|| {
            let dual_base = cone_from_inequalities(
                &self
                    .inner
                    .pair_rep
                    .iter()
                    .map(|&i| self.inner.coroots[i].clone())
                    .collect::<Vec<_>>(),
                self.inner.dim,
            )
            .expect("dual chamber cone");
            let mut out: Vec<RatVec> = Vec::new();
            for w in self.weyl() {
                for ray in dual_base.rays() {
                    let r = w.dual_matrix.mul_vec(ray).primitive();
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
            out.sort();
            out
        })
    }

    pub fn is_regular(&self, x: &RatVec) -> bool {
        self.inner.roots.iter().all(|r| !r.dot(x).is_zero())
    }

    /// Regularity against the hyperplanes dual to 1-dimensional chamber
    /// faces: no `lambda(omega) = 0`.
    pub fn is_r_regular(&self, lambda: &RatVec) -> bool {
        self.chamber_rays().iter().all(|w| !lambda.dot(w).is_zero())
    }

    /// The dual notion for points of `X`.
    pub fn is_rvee_regular(&self, x: &RatVec) -> bool {
        self.dual_chamber_rays().iter().all(|w| !w.dot(x).is_zero())
    }

    pub fn minus_one_in_weyl(&self) -> bool {
        if self.inner.dim == 0 {
            return true;
        }
        let mut m = RatMat::identity(self.inner.dim);
        for i in 0..self.inner.dim {
            m.set(i, i, rat(-1));
        }
        self.weyl_index_of(&m).is_some()
    }

    /// `q(R) = (|R^+| + dim X)/2`; requires `-1` in the Weyl group, which
    /// forces the parity to match.
    pub fn q_invariant(&self) -> Result<usize> {
        if !self.minus_one_in_weyl() {
            return Err(Error::MinusOneNotInWeylGroup(format!(
                "q is only defined when -1 acts (system {})",
                self.inner.label.as_deref().unwrap_or("custom")
            )));
        }
        let total = self.positive_root_count() + self.inner.dim;
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// The dual root system on `X*` (roots and coroots exchanged). Its base
    /// chamber is the dual of this system's base chamber.
    pub fn dual_system(&self) -> &RootSystem {
        self.inner.dual_system.get_or_init(|| {
            if self.inner.dim == 0 {
                return empty_system();
            }
            let rho = self.rho(&self.base_chamber());
            from_root_data(
                self.inner.dim,
                self.inner.coroots.clone(),
                self.inner.roots.clone(),
                Some(rho),
                self.inner.label.as_ref().map(|l| format!("{l}^")),
            )
            .expect("dual root data is valid")
        })
    }

    /// The chamber of the dual system corresponding to `c` (Weyl-equivariant,
    /// base to base).
    pub fn dual_chamber(&self, c: &Chamber) -> Chamber {
        let dual = self.dual_system();
        let w = &self.weyl()[c.index];
        let p = w.dual_matrix.mul_vec(dual.base_point());
        dual.chamber_of(&p)
            .expect("image of a regular point is regular")
    }

    /// Wall subsystem on `Y = ker(alpha)`, cached per root pair. Requires
    /// `-1` in the Weyl group.
    pub(crate) fn wall_model(&self, root_index: usize) -> Result<Arc<WallModel>> {
        if !self.minus_one_in_weyl() {
            return Err(Error::MinusOneNotInWeylGroup(
                "wall subsystems need -1 in the Weyl group".into(),
            ));
        }
        if root_index >= self.inner.roots.len() {
            return Err(Error::Precondition("root index out of range".into()));
        }
        let pair_pos = self.pair_pos_of(root_index);
        {
            let cache = self.inner.wall_models.lock().unwrap();
            if let Some(m) = cache.get(&pair_pos) {
                return Ok(m.clone());
            }
        }
        let alpha = &self.inner.roots[self.inner.pair_rep[pair_pos]];
        let map = SubspaceMap::kernel_of(std::slice::from_ref(alpha), self.inner.dim);
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for (i, beta_v) in self.inner.coroots.iter().enumerate() {
            if alpha.dot(beta_v).is_zero() {
                roots.push(map.to_sub_functional(&self.inner.roots[i]));
                coroots.push(map.to_sub_point(beta_v)?);
            }
        }
        let system = if map.dim() == 0 {
            empty_system()
        } else {
            from_root_data(map.dim(), roots, coroots, None, None)?
        };
        let model = Arc::new(WallModel { map, system });
        self.inner
            .wall_models
            .lock()
            .unwrap()
            .insert(pair_pos, model.clone());
        Ok(model)
    }

    pub(crate) fn cbar_cache_get(&self, lambda: &RatVec) -> Option<Arc<Vec<i64>>> {
        self.inner.cbar_cache.lock().unwrap().get(lambda).cloned()
    }

    pub(crate) fn cbar_cache_put(&self, lambda: RatVec, table: Arc<Vec<i64>>) {
        self.inner.cbar_cache.lock().unwrap().insert(lambda, table);
    }
}

/// A subset of the roots viewed on the full ambient space: the subsystems
/// `R_omega`, `R_s`, `R_a` and `R_C`. Chambers relative to the subset are
/// enumerated as arrangement cells, so they may have lineality.
pub struct SubSystem {
    pub ambient_dim: usize,
    /// Indices into the parent root list.
    pub root_indices: Vec<usize>,
    pub roots: Vec<RatVec>,
    pub coroots: Vec<RatVec>,
    pair_normals: Vec<RatVec>,
    chambers: OnceLock<SubChambers>,
}

struct SubChambers {
    /// Closed chamber cones with their sign vectors over `pair_normals`.
    cones: Vec<(Vec<bool>, Cone)>,
    by_signs: HashMap<Vec<bool>, usize>,
}

impl SubSystem {
    pub(crate) fn new(parent: &RootSystem, root_indices: Vec<usize>) -> SubSystem {
        let roots: Vec<RatVec> = root_indices
            .iter()
            .map(|&i| parent.roots()[i].clone())
            .collect();
        let coroots: Vec<RatVec> = root_indices
            .iter()
            .map(|&i| parent.coroots()[i].clone())
            .collect();
        let mut pair_normals: Vec<RatVec> = Vec::new();
        for r in &roots {
            let c = r.sign_canonical();
            if !pair_normals.contains(&c) {
                pair_normals.push(c);
            }
        }
        pair_normals.sort();
        SubSystem {
            ambient_dim: parent.dim(),
            root_indices,
            roots,
            coroots,
            pair_normals,
            chambers: OnceLock::new(),
        }
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn pair_normals(&self) -> &[RatVec] {
        &self.pair_normals
    }

    fn chamber_data(&self) -> &SubChambers {
        self.chambers.get_or_init(|| {
            let dim = self.ambient_dim;
            let mut cones = Vec::new();
            if self.pair_normals.is_empty() {
                let mut gens = Vec::new();
                for i in 0..dim {
                    gens.push(RatVec::unit(dim, i));
                    gens.push(RatVec::unit(dim, i).neg());
                }
                cones.push((
                    Vec::new(),
                    cone_from_generators(&gens, dim).expect("full space"),
                ));
            } else {
                for cell in arrangement_cells(&self.pair_normals, dim) {
                    if cell.signs.iter().any(|&s| s == 0) {
                        continue;
                    }
                    let cone =
                        cone_from_generators(&cell.closure_gens, dim).expect("chamber closure");
                    cones.push((cell.signs.iter().map(|&s| s > 0).collect(), cone));
                }
            }
            let by_signs = cones
                .iter()
                .enumerate()
                .map(|(i, (s, _))| (s.clone(), i))
                .collect();
            SubChambers { cones, by_signs }
        })
    }

    pub fn chamber_count(&self) -> usize {
        self.chamber_data().cones.len()
    }

    pub fn chamber_cone(&self, i: usize) -> &Cone {
        &self.chamber_data().cones[i].1
    }

    /// Index of the chamber containing `x`; `x` must avoid the subsystem's
    /// root hyperplanes.
    pub fn chamber_of(&self, x: &RatVec) -> Result<usize> {
        let mut signs = Vec::with_capacity(self.pair_normals.len());
        for h in &self.pair_normals {
            let v = h.dot(x);
            if v.is_zero() {
                return Err(Error::NotRegular(format!(
                    "{x} lies on a subsystem root hyperplane"
                )));
            }
            signs.push(v.is_positive());
        }
        self.chamber_data()
            .by_signs
            .get(&signs)
            .copied()
            .ok_or_else(|| Error::Internal("sign vector matches no subsystem chamber".into()))
    }

    pub fn length(&self, c1: usize, c2: usize) -> usize {
        let data = self.chamber_data();
        data.cones[c1]
            .0
            .iter()
            .zip(&data.cones[c2].0)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Separating-hyperplane parity between two chambers.
    pub fn epsilon(&self, c1: usize, c2: usize) -> i64 {
        if self.length(c1, c2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The chamber sum `sum_C eps(C0, C) psi_C(x, lambda)` over the
    /// subsystem's chambers.
    pub fn psi_r(&self, base: usize, x: &RatVec, lambda: &RatVec) -> i64 {
        let data = self.chamber_data();
        let mut total = 0;
        for i in 0..data.cones.len() {
            let psi = data.cones[i].1.psi(x, lambda);
            if psi != 0 {
                total += self.epsilon(base, i) * psi;
            }
        }
        total
    }
}

/// `R_omega`: the roots vanishing on a 1-dimensional chamber face generator,
/// with the chamber coarsening map and the quotient realization on
/// `X / R omega`.
pub struct OmegaSubsystem {
    pub sub: SubSystem,
    pub omega: RatVec,
    pub quotient: QuotientMap,
    /// The quotient root system (empty when no roots vanish on omega).
    pub quotient_system: RootSystem,
    parent: RootSystem,
}

impl OmegaSubsystem {
    /// The subsystem chamber containing a full chamber.
    pub fn coarsen(&self, c: &Chamber) -> usize {
        let p = c.interior_point();
        self.sub
            .chamber_of(&p)
            .expect("chamber points avoid subsystem walls")
    }

    /// Image in the quotient system of a chamber whose closure contains
    /// `omega` or `-omega`.
    pub fn quotient_chamber(&self, c: &Chamber) -> Result<Chamber> {
        let p = self.quotient.point(&c.interior_point());
        self.quotient_system.chamber_of(&p)
    }

    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }
}

/// Builds `R_omega` for a non-zero `omega` on a 1-dimensional face of some
/// closed chamber.
pub fn subsystem_omega(sys: &RootSystem, omega: &RatVec) -> Result<OmegaSubsystem> {
    if omega.is_zero() || omega.dim() != sys.dim() {
        return Err(Error::Precondition(
            "omega must be a non-zero point of X".into(),
        ));
    }
    let prim = omega.primitive();
    if !sys.chamber_rays().contains(&prim) {
        return Err(Error::Precondition(format!(
            "{omega} does not span a 1-dimensional chamber face"
        )));
    }
    let indices: Vec<usize> = (0..sys.roots().len())
        .filter(|&i| sys.roots()[i].dot(omega).is_zero())
        .collect();
    let sub = SubSystem::new(sys, indices.clone());
    let quotient = QuotientMap::new(std::slice::from_ref(&prim), sys.dim());
    let quotient_system = if indices.is_empty() {
        if quotient.dim() == 0 {
            empty_system()
        } else {
            return Err(Error::Internal(
                "a chamber ray in rank > 1 must kill some root".into(),
            ));
        }
    } else {
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for &i in &indices {
            roots.push(quotient.functional(&sys.roots()[i])?);
            coroots.push(quotient.point(&sys.coroots()[i]));
        }
        from_root_data(quotient.dim(), roots, coroots, None, None)?
    };
    Ok(OmegaSubsystem {
        sub,
        omega: omega.clone(),
        quotient,
        quotient_system,
        parent: sys.clone(),
    })
}

/// The wall subsystem `(Y, R_alpha)` for a root, in subspace coordinates.
pub struct WallSubsystem {
    pub alpha_index: usize,
    pub map: SubspaceMap,
    pub system: RootSystem,
}

pub fn subsystem_wall(sys: &RootSystem, root_index: usize) -> Result<WallSubsystem> {
    let model = sys.wall_model(root_index)?;
    Ok(WallSubsystem {
        alpha_index: root_index,
        map: model.map.clone(),
        system: model.system.clone(),
    })
}

/// `R_s` from a sign character of the coroot lattice: roots whose coroots
/// the character sends to `+1`.
pub fn subsystem_sign_coroot(sys: &RootSystem, chi: &SignCharacter) -> Result<SubSystem> {
    let mut indices = Vec::new();
    for (i, co) in sys.coroots().iter().enumerate() {
        if chi.eval(co)? == 1 {
            indices.push(i);
        }
    }
    Ok(SubSystem::new(sys, indices))
}

/// `R_a` from a sign character of the root lattice.
pub fn subsystem_sign_root(sys: &RootSystem, chi: &SignCharacter) -> Result<SubSystem> {
    let mut indices = Vec::new();
    for (i, r) in sys.roots().iter().enumerate() {
        if chi.eval(r)? == 1 {
            indices.push(i);
        }
    }
    Ok(SubSystem::new(sys, indices))
}

/// `R_C`: the roots pairing evenly with the half-sum of the chamber's
/// positive coroots.
pub fn subsystem_two(sys: &RootSystem, c: &Chamber) -> SubSystem {
    let delta = sys.delta(c);
    let indices: Vec<usize> = (0..sys.roots().len())
        .filter(|&i| {
            let v = sys.roots()[i].dot(&delta);
            debug_assert!(v.denom().is_one(), "root pairs integrally with delta");
            v.numer().is_even()
        })
        .collect();
    SubSystem::new(sys, indices)
}

/// Quick classification of small systems by (rank, root count); used by the
/// verification suites to name subsystems.
pub fn cartan_label(roots: &[RatVec], dim: usize) -> String {
    if roots.is_empty() {
        return "empty".into();
    }
    let rank = canon_subspace_basis(roots, dim).len();
    match (rank, roots.len()) {
        (1, 2) => "A1".into(),
        (2, 4) => "A1xA1".into(),
        (2, 6) => "A2".into(),
        (2, 8) => "B2".into(),
        (2, 12) => "G2".into(),
        (3, 6) => "A1xA1xA1".into(),
        (r, n) => format!("rank{r}-{n}roots"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_basics() {
        let sys = root_system("A1").unwrap();
        assert_eq!(sys.roots().len(), 2);
        assert_eq!(sys.dim(), 1);
        assert_eq!(sys.weyl_order(), 2);
        assert_eq!(sys.chambers().len(), 2);
        assert!(sys.minus_one_in_weyl());
        assert_eq!(sys.q_invariant().unwrap(), 1);
    }

    #[test]
    fn b2_counts() {
        let sys = root_system("B2").unwrap();
        assert_eq!(sys.roots().len(), 8);
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.weyl_order(), 8);
        assert_eq!(sys.q_invariant().unwrap(), 3);
    }

    #[test]
    fn g2_counts() {
        let sys = root_system("G2").unwrap();
        assert_eq!(sys.roots().len(), 12);
        assert_eq!(sys.weyl_order(), 12);
        assert_eq!(sys.q_invariant().unwrap(), 4);
    }

    #[test]
    fn a1xa1_product() {
        let sys = root_system("A1xA1").unwrap();
        assert_eq!(sys.roots().len(), 4);
        assert_eq!(sys.dim(), 2);
        assert_eq!(sys.weyl_order(), 4);
        let r0 = &sys.roots()[0];
        let other = sys
            .coroots()
            .iter()
            .find(|c| r0.dot(c).is_zero())
            .expect("orthogonal coroot exists");
        assert!(r0.dot(other).is_zero());
    }

    #[test]
    fn a2_no_minus_one() {
        let sys = root_system("A2").unwrap();
        assert_eq!(sys.weyl_order(), 6);
        assert!(!sys.minus_one_in_weyl());
        assert!(sys.q_invariant().is_err());
    }

    #[test]
    fn bigger_types() {
        let b3 = root_system("B3").unwrap();
        assert_eq!(b3.roots().len(), 18);
        assert_eq!(b3.weyl_order(), 48);
        let c3 = root_system("C3").unwrap();
        assert_eq!(c3.roots().len(), 18);
        assert_eq!(c3.weyl_order(), 48);
        let a3 = root_system("A3").unwrap();
        assert_eq!(a3.roots().len(), 12);
        assert_eq!(a3.weyl_order(), 24);
        assert!(!a3.minus_one_in_weyl());
        let f4 = root_system("F4").unwrap();
        assert_eq!(f4.roots().len(), 48);
        assert_eq!(f4.weyl_order(), 1152);
    }

    #[test]
    fn rank_limit_enforced() {
        if rank_limit() == 4 {
            assert!(root_system("B5").is_err());
        }
    }

    #[test]
    fn simple_transitivity() {
        let sys = root_system("B2").unwrap();
        let chambers = sys.chambers();
        for c1 in &chambers {
            for c2 in &chambers {
                let count = sys
                    .weyl()
                    .iter()
                    .filter(|w| {
                        let p = w.matrix.mul_vec(&c1.interior_point());
                        sys.chamber_of(&p).unwrap().index == c2.index
                    })
                    .count();
                assert_eq!(count, 1, "exactly one Weyl element maps chamber to chamber");
            }
        }
    }

    #[test]
    fn length_of_longest_element() {
        let sys = root_system("B2").unwrap();
        let base = sys.base_chamber();
        let max = sys
            .chambers()
            .iter()
            .map(|c| sys.length(&base, c).unwrap())
            .max()
            .unwrap();
        assert_eq!(max, 4, "longest element separates all positive roots");
    }

    #[test]
    fn epsilon_is_determinant() {
        let sys = root_system("G2").unwrap();
        let base = sys.base_chamber();
        for c in sys.chambers() {
            let w = &sys.weyl()[c.index];
            assert_eq!(w.sign, if w.matrix.det() == rat(1) { 1 } else { -1 });
            assert_eq!(sys.epsilon(&base, &c).unwrap(), w.sign);
        }
    }

    #[test]
    fn length_triangle_parity() {
        let sys = root_system("B2").unwrap();
        let chambers = sys.chambers();
        for a in &chambers {
            for b in &chambers {
                for c in &chambers {
                    let e1 = sys.epsilon(a, b).unwrap();
                    let e2 = sys.epsilon(b, c).unwrap();
                    let e3 = sys.epsilon(a, c).unwrap();
                    assert_eq!(e1 * e2, e3);
                }
            }
        }
    }

    #[test]
    fn delta_equivariant() {
        let sys = root_system("B2").unwrap();
        let base = sys.base_chamber();
        let d0 = sys.delta(&base);
        for c in sys.chambers() {
            let w = &sys.weyl()[c.index];
            assert_eq!(sys.delta(&c), w.matrix.mul_vec(&d0));
        }
    }

    #[test]
    fn a1_delta_is_half_coroot() {
        let sys = root_system("A1").unwrap();
        let d = sys.delta(&sys.base_chamber());
        let co = &sys.coroots()[sys.simple_roots()[0]];
        assert_eq!(d.scale(&rat(2)), *co);
    }

    #[test]
    fn rho_positive_on_own_chamber() {
        let sys = root_system("B2").unwrap();
        for c in sys.chambers() {
            let r = sys.rho(&c);
            assert!(r.dot(&c.interior_point()).is_positive());
        }
    }

    #[test]
    fn dual_chamber_equivariant() {
        let sys = root_system("B2").unwrap();
        let dual = sys.dual_system().clone();
        for c in sys.chambers() {
            let dc = sys.dual_chamber(&c);
            let w = &sys.weyl()[c.index];
            let p = w.dual_matrix.mul_vec(dual.base_point());
            assert_eq!(dual.chamber_of(&p).unwrap().index, dc.index);
        }
    }

    #[test]
    fn r_regularity_a1() {
        let sys = root_system("A1").unwrap();
        assert!(sys.is_r_regular(&RatVec::from_ints(&[5])));
        assert!(!sys.is_r_regular(&RatVec::from_ints(&[0])));
    }

    #[test]
    fn b2_fundamental_coweight_not_r_regular() {
        let sys = root_system("B2").unwrap();
        // a lambda vanishing on a fundamental coweight is never R-regular
        let omega = &sys.coweight_rays()[0];
        let kernel = crate::ratgeom::kernel_basis(&RatMat::from_rows(std::slice::from_ref(omega)));
        for lambda in kernel {
            assert!(!sys.is_r_regular(&lambda));
        }
    }

    #[test]
    fn a3_r_regularity_strictly_finer_than_regularity() {
        // With -1 outside the Weyl group some chamber rays span no coroot, so
        // a covector can be regular without being R-regular.
        let sys = root_system("A3").unwrap();
        let coroot_lines: Vec<RatVec> = sys.coroots().iter().map(|c| c.sign_canonical()).collect();
        let extra = sys
            .chamber_rays()
            .iter()
            .find(|r| !coroot_lines.contains(&r.sign_canonical()))
            .expect("A3 has chamber rays off the coroot lines");
        let kernel = crate::ratgeom::kernel_basis(&RatMat::from_rows(std::slice::from_ref(extra)));
        let witness = kernel
            .iter()
            .map(|k| k.add(&kernel[1].scale(&Rat::new(1.into(), 97.into()))))
            .find(|cand| sys.coroots().iter().all(|c| !cand.dot(c).is_zero()));
        let witness = witness.expect("regular covector on the extra ray's wall");
        assert!(!sys.is_r_regular(&witness));
    }

    #[test]
    fn minus_one_implies_coroots_span_rays() {
        for name in ["B2", "G2"] {
            let sys = root_system(name).unwrap();
            assert!(sys.minus_one_in_weyl());
            for co in sys.coroots() {
                assert!(
                    sys.chamber_rays().contains(&co.primitive())
                        || sys.chamber_rays().contains(&co.neg().primitive()),
                    "coroot {co} spans a 1-dim chamber face in {name}"
                );
            }
        }
    }

    #[test]
    fn omega_subsystem_b2() {
        let sys = root_system("B2").unwrap();
        for omega in sys.coweight_rays().to_vec() {
            let om = subsystem_omega(&sys, &omega).unwrap();
            assert_eq!(cartan_label(&om.sub.roots, 2), "A1");
            assert_eq!(om.quotient_system.dim(), 1);
        }
    }

    #[test]
    fn omega_subsystem_a1_is_empty() {
        let sys = root_system("A1").unwrap();
        let om = subsystem_omega(&sys, &RatVec::from_ints(&[1])).unwrap();
        assert!(om.sub.is_empty());
        assert_eq!(om.quotient.dim(), 0);
    }

    #[test]
    fn omega_rejects_regular_direction() {
        let sys = root_system("B2").unwrap();
        // a generic direction is not a chamber ray
        assert!(subsystem_omega(&sys, &RatVec::from_ints(&[5, 7])).is_err());
    }

    #[test]
    fn wall_subsystem_types() {
        let b2 = root_system("B2").unwrap();
        for &i in b2.pair_reps() {
            let wall = subsystem_wall(&b2, i).unwrap();
            assert_eq!(cartan_label(wall.system.roots(), wall.system.dim()), "A1");
            assert!(wall.system.minus_one_in_weyl());
        }
        let g2 = root_system("G2").unwrap();
        for &i in g2.pair_reps() {
            let wall = subsystem_wall(&g2, i).unwrap();
            assert_eq!(cartan_label(wall.system.roots(), wall.system.dim()), "A1");
        }
        let a1 = root_system("A1").unwrap();
        let wall = subsystem_wall(&a1, 0).unwrap();
        assert_eq!(wall.system.dim(), 0);
    }

    #[test]
    fn sign_subsystems_a1() {
        let a1 = root_system("A1").unwrap();
        let q_basis: Vec<RatVec> = a1
            .simple_roots()
            .iter()
            .map(|&i| a1.coroots()[i].clone())
            .collect();
        let chi = SignCharacter::new(q_basis.clone(), vec![true]);
        let sub = subsystem_sign_coroot(&a1, &chi).unwrap();
        assert!(sub.is_empty());
        let trivial = SignCharacter::trivial(q_basis);
        let sub = subsystem_sign_coroot(&a1, &trivial).unwrap();
        assert_eq!(sub.root_count(), 2);
    }

    #[test]
    fn b2_long_coroot_character_cuts_long_subsystem() {
        let b2 = root_system("B2").unwrap();
        let q_basis: Vec<RatVec> = b2
            .simple_roots()
            .iter()
            .map(|&i| b2.coroots()[i].clone())
            .collect();
        // Scan all four sign characters; each R_s must be a genuine subsystem
        // closed under its own reflections, and the trivial one is R itself.
        for mask in 0..4u32 {
            let chi = SignCharacter::new(q_basis.clone(), vec![mask & 1 == 1, mask & 2 == 2]);
            let sub = subsystem_sign_coroot(&b2, &chi).unwrap();
            if mask == 0 {
                assert_eq!(sub.root_count(), 8);
            } else {
                assert!(sub.root_count() < 8);
                assert!(sub.root_count() % 2 == 0);
            }
        }
    }

    #[test]
    fn subsystem_two_properties() {
        let a1 = root_system("A1").unwrap();
        assert!(subsystem_two(&a1, &a1.base_chamber()).is_empty());
        let b2 = root_system("B2").unwrap();
        let base_set: std::collections::BTreeSet<RatVec> = subsystem_two(&b2, &b2.base_chamber())
            .roots
            .iter()
            .cloned()
            .collect();
        for c in b2.chambers() {
            let w = &b2.weyl()[c.index];
            let moved: std::collections::BTreeSet<RatVec> = base_set
                .iter()
                .map(|r| w.dual_matrix.mul_vec(r))
                .collect();
            let direct: std::collections::BTreeSet<RatVec> =
                subsystem_two(&b2, &c).roots.iter().cloned().collect();
            assert_eq!(moved, direct, "R_(wC) = w R_C");
        }
        for c in b2.chambers() {
            let sub = subsystem_two(&b2, &c);
            let cone = c.closure();
            for f in cone.facet_normals() {
                assert!(
                    !sub.roots
                        .iter()
                        .any(|r| r.sign_canonical() == f.sign_canonical()),
                    "no simple root of the chamber belongs to R_C"
                );
            }
        }
    }

    #[test]
    fn custom_cartan_matrix() {
        let sys = root_system_from_cartan(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(sys.roots().len(), 6);
        assert!(root_system_from_cartan(&[vec![2, -1], vec![-4, 2]]).is_err());
        assert!(root_system_from_cartan(&[vec![2, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn unsupported_type_errors() {
        assert!(root_system("Z9").is_err());
        assert!(root_system("E8").is_err());
    }
}
