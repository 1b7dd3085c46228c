//! Exact rational linear algebra kernel.
//!
//! All coordinates are arbitrary-precision rationals ([`Rat`]). Chamber
//! membership and face identification throughout the crate are sign
//! decisions, so everything here is exact; there are no tolerances.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational scalar.
pub type Rat = num::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `p/q`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// A point of `X` or a linear form in `X*`, with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec {
    coords: Vec<Rat>,
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl RatVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVec { coords }
    }

    pub fn zero(dim: usize) -> Self {
        RatVec {
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rat::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec {
            coords: coords.iter().map(|&c| rat(c)).collect(),
        }
    }

    /// Parses a comma-separated list of rationals such as `1/2,-3,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let r: Rat = part
                .parse()
                .map_err(|_| Error::Unsupported(format!("cannot parse rational {part:?}")))?;
            coords.push(r);
        }
        Ok(RatVec { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, v: Rat) {
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dims");
        let mut acc = Rat::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim());
        RatVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> RatVec {
        RatVec {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Scales to the unique integer vector with coprime entries pointing the
    /// same way. The zero vector is returned unchanged.
    pub fn primitive(&self) -> RatVec {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coords {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = num::integer::gcd(gcd, v.clone());
        }
        RatVec {
            coords: ints.into_iter().map(|v| Rat::from_integer(v / &gcd)).collect(),
        }
    }

    /// Primitive form with the first non-zero entry positive. Used to index
    /// hyperplanes, where `v` and `-v` cut the same wall.
    pub fn sign_canonical(&self) -> RatVec {
        let p = self.primitive();
        match p.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        RatMat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: &[RatVec]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, RatVec::dim);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.dim(), ncols, "ragged rows");
            data.extend(r.coords.iter().cloned());
        }
        RatMat {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_cols(cols: &[RatVec]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> RatVec {
        RatVec::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> RatVec {
        RatVec::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> RatMat {
        let mut out = RatMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &RatVec) -> RatVec {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        RatVec::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = Rat::zero();
                    for j in 0..self.cols {
                        let a = self.get(i, j);
                        let b = v.get(j);
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn mul_mat(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Rat::zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(col, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            let piv = m.get(col, col).clone();
            det *= piv.clone();
            for r in col + 1..n {
                let factor = m.get(r, col) / &piv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    m.set(col, j, m.get(pivot, j).clone());
                    m.set(pivot, j, a);
                    let a = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(pivot, j).clone());
                    inv.set(pivot, j, a);
                }
            }
            let piv = m.get(col, col).clone();
            for j in 0..n {
                m.set(col, j, m.get(col, j) / &piv);
                inv.set(col, j, inv.get(col, j) / &piv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = m.get(r, j) - &factor * m.get(col, j);
                    m.set(r, j, v);
                    let v = inv.get(r, j) - &factor * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// True iff the matrix is symmetric with all leading principal minors
    /// positive.
    pub fn is_positive_definite(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        for k in 1..=self.rows {
            let mut sub = RatMat::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub.set(i, j, self.get(i, j).clone());
                }
            }
            if !sub.det().is_positive() {
                return false;
            }
        }
        true
    }
}

/// Solves `A x = b` exactly. Returns `Ok(None)` when the system is
/// inconsistent; any particular solution otherwise.
pub fn solve_linear(a: &RatMat, b: &RatVec) -> Result<Option<RatVec>> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "solve_linear: matrix has {} rows but rhs has dim {}",
            a.rows(),
            b.dim()
        )));
    }
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut rhs = b.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !m.get(r, col).is_zero());
        let Some(p) = pivot else { continue };
        if p != row {
            for j in 0..cols {
                let a0 = m.get(row, j).clone();
                m.set(row, j, m.get(p, j).clone());
                m.set(p, j, a0);
            }
            let a0 = rhs.get(row).clone();
            rhs.set(row, rhs.get(p).clone());
            rhs.set(p, a0);
        }
        let piv = m.get(row, col).clone();
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col) / &piv;
            if factor.is_zero() {
                continue;
            }
            for j in col..cols {
                let v = m.get(r, j) - &factor * m.get(row, j);
                m.set(r, j, v);
            }
            let v = rhs.get(r) - &factor * rhs.get(row);
            rhs.set(r, v);
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    // Inconsistency shows up as a non-zero rhs entry in a zero row.
    for r in row..rows {
        if !rhs.get(r).is_zero() {
            return Ok(None);
        }
    }
    let mut x = RatVec::zero(cols);
    for &(r, c) in &pivots {
        x.set(c, rhs.get(r) / m.get(r, c));
    }
    Ok(Some(x))
}

/// Basis of the null space of `A`; empty iff `A` is injective.
pub fn kernel_basis(a: &RatMat) -> Vec<RatVec> {
    let rows = a.rows();
    let cols = a.cols();
    let mut m = a.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !m.get(r, col).is_zero());
        let Some(p) = pivot else { continue };
        if p != row {
            for j in 0..cols {
                let a0 = m.get(row, j).clone();
                m.set(row, j, m.get(p, j).clone());
                m.set(p, j, a0);
            }
        }
        let piv = m.get(row, col).clone();
        for j in 0..cols {
            m.set(row, j, m.get(row, j) / &piv);
        }
        for r in 0..rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = m.get(r, j) - &factor * m.get(row, j);
                m.set(r, j, v);
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = RatVec::zero(cols);
        v.set(free, Rat::one());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v.set(pc, -m.get(r, free).clone());
        }
        basis.push(v);
    }
    basis
}

/// Canonical basis (reduced row echelon, primitive rows) of the span of
/// `vecs`. Two generating sets of the same subspace produce identical bases.
pub fn canon_subspace_basis(vecs: &[RatVec], dim: usize) -> Vec<RatVec> {
    let rows: Vec<RatVec> = vecs.iter().filter(|v| !v.is_zero()).cloned().collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let mut m = RatMat::from_rows(&rows);
    debug_assert_eq!(m.cols(), dim);
    let nrows = m.rows();
    let mut row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..dim {
        let pivot = (row..nrows).find(|&r| !m.get(r, col).is_zero());
        let Some(p) = pivot else { continue };
        if p != row {
            for j in 0..dim {
                let a0 = m.get(row, j).clone();
                m.set(row, j, m.get(p, j).clone());
                m.set(p, j, a0);
            }
        }
        let piv = m.get(row, col).clone();
        for j in 0..dim {
            m.set(row, j, m.get(row, j) / &piv);
        }
        for r in 0..nrows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..dim {
                let v = m.get(r, j) - &factor * m.get(row, j);
                m.set(r, j, v);
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    pivots
        .iter()
        .map(|&(r, _)| m.row(r).primitive())
        .collect()
}

/// Reduces `v` modulo the span of an RREF basis produced by
/// [`canon_subspace_basis`]. The result has a zero coordinate at every pivot
/// position, which makes it a canonical coset representative.
pub fn reduce_mod_basis(v: &RatVec, basis: &[RatVec]) -> RatVec {
    let mut out = v.clone();
    for b in basis {
        let pivot = b.coords().iter().position(|c| !c.is_zero());
        let Some(p) = pivot else { continue };
        let factor = out.get(p) / b.get(p);
        if !factor.is_zero() {
            out = out.sub(&b.scale(&factor));
        }
    }
    out
}

/// Coordinates on a linear subspace, given by a basis in ambient coordinates.
#[derive(Clone, Debug)]
pub struct SubspaceMap {
    pub basis: Vec<RatVec>,
    ambient: usize,
}

impl SubspaceMap {
    pub fn new(basis: Vec<RatVec>, ambient: usize) -> Self {
        debug_assert!(basis.iter().all(|b| b.dim() == ambient));
        SubspaceMap { basis, ambient }
    }

    /// Canonical coordinates for the kernel of the forms in `cut`.
    pub fn kernel_of(cut: &[RatVec], ambient: usize) -> Self {
        let basis = if cut.is_empty() {
            (0..ambient).map(|i| RatVec::unit(ambient, i)).collect()
        } else {
            let raw = kernel_basis(&RatMat::from_rows(cut));
            canon_subspace_basis(&raw, ambient)
        };
        SubspaceMap { basis, ambient }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Coordinates of an ambient point lying in the subspace.
    pub fn to_sub_point(&self, x: &RatVec) -> Result<RatVec> {
        let m = RatMat::from_cols(&self.basis);
        solve_linear(&m, x)?
            .ok_or_else(|| Error::Precondition(format!("{x} does not lie in the subspace")))
    }

    /// Restriction of an ambient linear form to the subspace.
    pub fn to_sub_functional(&self, l: &RatVec) -> RatVec {
        RatVec::new(self.basis.iter().map(|b| l.dot(b)).collect())
    }

    /// Ambient point from subspace coordinates.
    pub fn from_sub(&self, c: &RatVec) -> RatVec {
        let mut out = RatVec::zero(self.ambient);
        for (b, coeff) in self.basis.iter().zip(c.coords()) {
            out = out.add(&b.scale(coeff));
        }
        out
    }
}

/// Coordinates on the quotient of the ambient space by a subspace.
///
/// The killed subspace is stored as an RREF basis; the complement is spanned
/// by the unit vectors at the non-pivot positions, so quotient coordinates
/// are just those positions of the reduced representative.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kill: Vec<RatVec>,
    nonpivot: Vec<usize>,
    ambient: usize,
}

impl QuotientMap {
    pub fn new(kill_gens: &[RatVec], ambient: usize) -> Self {
        let kill = canon_subspace_basis(kill_gens, ambient);
        let pivots: Vec<usize> = kill
            .iter()
            .filter_map(|b| b.coords().iter().position(|c| !c.is_zero()))
            .collect();
        let nonpivot = (0..ambient).filter(|i| !pivots.contains(i)).collect();
        QuotientMap {
            kill,
            nonpivot,
            ambient,
        }
    }

    pub fn dim(&self) -> usize {
        self.nonpivot.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Image of a point in quotient coordinates.
    pub fn point(&self, x: &RatVec) -> RatVec {
        let red = reduce_mod_basis(x, &self.kill);
        RatVec::new(self.nonpivot.iter().map(|&i| red.get(i).clone()).collect())
    }

    /// Image of a linear form vanishing on the killed subspace.
    pub fn functional(&self, l: &RatVec) -> Result<RatVec> {
        for k in &self.kill {
            if !l.dot(k).is_zero() {
                return Err(Error::Precondition(format!(
                    "{l} does not vanish on the killed subspace"
                )));
            }
        }
        Ok(RatVec::new(
            self.nonpivot.iter().map(|&i| l.get(i).clone()).collect(),
        ))
    }
}

/// A `{±1}`-valued character of a lattice, recorded by its values on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCharacter {
    pub lattice_basis: Vec<RatVec>,
    /// One entry per basis vector; `false` is `+1`, `true` is `-1`.
    pub values: Vec<bool>,
}

impl SignCharacter {
    pub fn new(lattice_basis: Vec<RatVec>, values: Vec<bool>) -> Self {
        assert_eq!(lattice_basis.len(), values.len());
        SignCharacter {
            lattice_basis,
            values,
        }
    }

    pub fn trivial(lattice_basis: Vec<RatVec>) -> Self {
        let n = lattice_basis.len();
        SignCharacter::new(lattice_basis, vec![false; n])
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| !v)
    }

    /// Integer coordinates of `v` in the lattice basis, or an error when `v`
    /// lies outside the lattice.
    fn lattice_coords(&self, v: &RatVec) -> Result<Vec<BigInt>> {
        let m = RatMat::from_cols(&self.lattice_basis);
        let sol = solve_linear(&m, v)?
            .ok_or_else(|| Error::Precondition(format!("{v} not in the lattice span")))?;
        let mut out = Vec::with_capacity(sol.dim());
        for c in sol.coords() {
            if !c.denom().is_one() {
                return Err(Error::Precondition(format!(
                    "{v} is not an integral lattice point"
                )));
            }
            out.push(c.numer().clone());
        }
        Ok(out)
    }

    /// Evaluates the character at a lattice point; returns `+1` or `-1`.
    pub fn eval(&self, v: &RatVec) -> Result<i64> {
        let coords = self.lattice_coords(v)?;
        let mut parity = false;
        for (c, &neg) in coords.iter().zip(&self.values) {
            if neg && c.is_odd() {
                parity = !parity;
            }
        }
        Ok(if parity { -1 } else { 1 })
    }
}

/// Decides whether `chi` extends to a `{±1}`-valued character of the lattice
/// spanned by `superlattice_basis`. Equivalent to solvability of a linear
/// system over GF(2).
pub fn sign_character_lifts(chi: &SignCharacter, superlattice_basis: &[RatVec]) -> Result<bool> {
    let m = RatMat::from_cols(superlattice_basis);
    let mut rows_gf2: Vec<Vec<bool>> = Vec::new();
    let mut rhs_gf2: Vec<bool> = Vec::new();
    for (b, &neg) in chi.lattice_basis.iter().zip(&chi.values) {
        let sol = solve_linear(&m, b)?.ok_or_else(|| {
            Error::Precondition("character lattice not contained in the superlattice span".into())
        })?;
        let mut row = Vec::with_capacity(sol.dim());
        for c in sol.coords() {
            if !c.denom().is_one() {
                return Err(Error::Precondition(
                    "character lattice not contained in the superlattice".into(),
                ));
            }
            row.push(c.numer().is_odd());
        }
        rows_gf2.push(row);
        rhs_gf2.push(neg);
    }
    Ok(gf2_solvable(&mut rows_gf2, &mut rhs_gf2))
}

fn gf2_solvable(rows: &mut [Vec<bool>], rhs: &mut [bool]) -> bool {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        for i in 0..nrows {
            if i != r && rows[i][c] {
                for j in 0..ncols {
                    rows[i][j] ^= rows[r][j];
                }
                rhs[i] ^= rhs[r];
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    // Zero rows must have zero rhs.
    for i in 0..nrows {
        if rows[i].iter().all(|&b| !b) && rhs[i] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_identity() {
        let a = RatMat::identity(2);
        let b = RatVec::from_ints(&[3, 5]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_underdetermined_satisfies() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 1])]);
        let b = RatVec::from_ints(&[0]);
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert!(a.mul_vec(&x).is_zero());
    }

    #[test]
    fn solve_inconsistent() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[1, 0])]);
        let b = RatVec::from_ints(&[1, 2]);
        assert!(solve_linear(&a, &b).unwrap().is_none());
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = RatMat::identity(2);
        let b = RatVec::from_ints(&[1]);
        assert!(solve_linear(&a, &b).is_err());
    }

    #[test]
    fn kernel_of_identity_empty() {
        assert!(kernel_basis(&RatMat::identity(2)).is_empty());
    }

    #[test]
    fn kernel_of_sum_form() {
        let a = RatMat::from_rows(&[RatVec::from_ints(&[1, 1])]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).is_zero());
        assert!(!k[0].is_zero());
    }

    #[test]
    fn kernel_of_zero_map() {
        let a = RatMat::zero(1, 3);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 3);
        assert!(RatMat::from_rows(&k).inverse().is_some());
    }

    #[test]
    fn primitive_and_sign_canonical() {
        let v = RatVec::new(vec![ratio(-2, 3), ratio(4, 3)]);
        assert_eq!(v.primitive(), RatVec::from_ints(&[-1, 2]));
        assert_eq!(v.sign_canonical(), RatVec::from_ints(&[1, -2]));
    }

    #[test]
    fn canon_basis_is_generating_set_independent() {
        let b1 = canon_subspace_basis(
            &[RatVec::from_ints(&[1, 1, 0]), RatVec::from_ints(&[0, 0, 1])],
            3,
        );
        let b2 = canon_subspace_basis(
            &[
                RatVec::from_ints(&[2, 2, 5]),
                RatVec::from_ints(&[1, 1, 7]),
                RatVec::from_ints(&[3, 3, 12]),
            ],
            3,
        );
        assert_eq!(b1, b2);
    }

    #[test]
    fn pd_check() {
        let gram = RatMat::identity(3);
        assert!(gram.is_positive_definite());
        let mut bad = RatMat::identity(2);
        bad.set(1, 1, rat(-1));
        assert!(!bad.is_positive_definite());
        let mut asym = RatMat::identity(2);
        asym.set(0, 1, rat(1));
        assert!(!asym.is_positive_definite());
    }

    #[test]
    fn sign_character_a1_does_not_lift() {
        // Coroot lattice Z*2 inside the coweight lattice Z (coordinates on a
        // rank-1 lattice): chi(2) = -1 cannot extend since 2 = 2*1.
        let chi = SignCharacter::new(vec![RatVec::from_ints(&[2])], vec![true]);
        let lifts = sign_character_lifts(&chi, &[RatVec::from_ints(&[1])]).unwrap();
        assert!(!lifts);
    }

    #[test]
    fn trivial_character_lifts() {
        let chi = SignCharacter::trivial(vec![RatVec::from_ints(&[2, 0]), RatVec::from_ints(&[0, 2])]);
        let sup = [RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])];
        assert!(sign_character_lifts(&chi, &sup).unwrap());
    }

    #[test]
    fn equal_lattice_any_character_lifts() {
        let basis = vec![RatVec::from_ints(&[1, 0]), RatVec::from_ints(&[0, 1])];
        let chi = SignCharacter::new(basis.clone(), vec![true, false]);
        assert!(sign_character_lifts(&chi, &basis).unwrap());
    }

    #[test]
    fn lift_agrees_with_brute_force_small_ranks() {
        // Sub-lattice spanned by rows of a small integer matrix inside Z^n.
        let cases: Vec<Vec<RatVec>> = vec![
            vec![RatVec::from_ints(&[2, 0]), RatVec::from_ints(&[1, 1])],
            vec![RatVec::from_ints(&[2, -1]), RatVec::from_ints(&[-1, 2])],
            vec![
                RatVec::from_ints(&[2, -1, 0]),
                RatVec::from_ints(&[-1, 2, -1]),
                RatVec::from_ints(&[0, -2, 2]),
            ],
        ];
        for sub in cases {
            let n = sub[0].dim();
            let sup: Vec<RatVec> = (0..n).map(|i| RatVec::unit(n, i)).collect();
            for mask in 0..(1u32 << sub.len()) {
                let values: Vec<bool> = (0..sub.len()).map(|i| mask >> i & 1 == 1).collect();
                let chi = SignCharacter::new(sub.clone(), values);
                let expected = (0..(1u32 << n)).any(|m| {
                    let sup_chi = SignCharacter::new(
                        sup.clone(),
                        (0..n).map(|i| m >> i & 1 == 1).collect(),
                    );
                    chi.lattice_basis
                        .iter()
                        .zip(&chi.values)
                        .all(|(b, &neg)| sup_chi.eval(b).unwrap() == if neg { -1 } else { 1 })
                });
                assert_eq!(sign_character_lifts(&chi, &sup).unwrap(), expected);
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMat::from_rows(&[
            RatVec::from_ints(&[2, -1, 0]),
            RatVec::from_ints(&[-1, 2, -1]),
            RatVec::from_ints(&[0, -1, 2]),
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), RatMat::identity(3));
    }
}
