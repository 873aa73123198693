//! Finite abelian groups, `H₁(Y) = Z ⊕ T`, the boundary inclusion and the
//! longitudinal filling quotient.
//!
//! Everything is computed exactly from integer relation matrices through
//! [`smith_normal_form`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::gcd;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("invariant factors {0:?} are not of the form d1 | d2 | ... with every d >= 2")]
    BadInvariantFactors(Vec<i64>),
    #[error("torsion vector {tors:?} does not match invariant factors {factors:?}")]
    BadElement { tors: Vec<i64>, factors: Vec<i64> },
    #[error("the longitude must have zero free part, got phi(i_lambda) = {0}")]
    LongitudeNotTorsion(i64),
    #[error("phi(i_mu) must be positive, got {0}")]
    NonPositiveMeridian(i64),
    #[error("order of i_lambda is {order} but phi(i_mu) = {g}")]
    OrderMismatch { order: i64, g: i64 },
    #[error("torsion part of i_mu is not a multiple of i_lambda, so Im(i) is not g Z + <i_lambda>")]
    MeridianOffSplitting,
}

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.rows);
        (0..self.cols).map(|j| (0..self.rows).map(|i| x[i] * self[(i, j)]).sum()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += c * v;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += c * v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    /// Determinant by cofactor expansion along the first row. Only meant for
    /// the small matrices used in validation.
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        match self.rows {
            0 => 1,
            1 => self[(0, 0)],
            2 => self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)],
            n => (0..n)
                .map(|j| {
                    let minor_rows: Vec<Vec<i64>> = (1..n)
                        .map(|i| (0..n).filter(|&c| c != j).map(|c| self[(i, c)]).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * self[(0, j)] * IntMatrix::from_rows(&minor_rows, n - 1).det()
                })
                .sum(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d₁ | d₂ | …` (trailing zeros allowed), all `d ≥ 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[(i, t)].div_euclid(d[(t, t)]);
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if d[(i, t)] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_euclid(d[(t, t)]);
                if q != 0 {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if d[(t, j)] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| d[(i, j)] % d[(t, t)] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if d[(i, t)] != 0 && d[(i, t)].abs() < d[best].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if d[(t, j)] != 0 && d[(t, j)].abs() < d[best].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
            } else if best.1 != t {
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d[(i, j)];
            if x != 0 && best.map_or(true, |b| x.abs() < d[b].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// A finite abelian group `Z/d₁ ⊕ … ⊕ Z/d_r` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: i64) -> Self {
        Self::from_cyclic_orders(&[n]).0
    }

    /// Accepts factors already in invariant-factor form.
    pub fn new(factors: Vec<i64>) -> Result<Self, HomologyError> {
        let ok = factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0);
        if !ok {
            return Err(HomologyError::BadInvariantFactors(factors));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    /// Normalises `Z/n₁ ⊕ … ⊕ Z/n_k` (any `n ≥ 1`) to invariant-factor form,
    /// returning the coordinate change from the old presentation.
    pub fn from_cyclic_orders(orders: &[i64]) -> (Self, AbelianQuotient) {
        let n = orders.len();
        let rels: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect())
            .collect();
        let q = AbelianQuotient::from_relations(n, &rels);
        assert_eq!(q.rank(), 0, "cyclic orders must be positive");
        (q.torsion().clone(), q)
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> i64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.factors.len()]
    }

    pub fn is_valid(&self, x: &[i64]) -> bool {
        x.len() == self.factors.len() && x.iter().zip(&self.factors).all(|(&a, &d)| (0..d).contains(&a))
    }

    pub fn check(&self, x: &[i64]) -> Result<(), HomologyError> {
        if self.is_valid(x) {
            Ok(())
        } else {
            Err(HomologyError::BadElement { tors: x.to_vec(), factors: self.factors.clone() })
        }
    }

    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.factors.len());
        x.iter().zip(&self.factors).map(|(&a, &d)| a.rem_euclid(d)).collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).zip(&self.factors).map(|((&a, &b), &d)| (a + b).rem_euclid(d)).collect()
    }

    pub fn sub(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        x.iter().zip(y).zip(&self.factors).map(|((&a, &b), &d)| (a - b).rem_euclid(d)).collect()
    }

    pub fn neg(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.factors).map(|(&a, &d)| (-a).rem_euclid(d)).collect()
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.factors).map(|(&a, &d)| (k * a).rem_euclid(d)).collect()
    }

    pub fn element_order(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.factors).fold(1, |acc, (&a, &d)| {
            let o = d / gcd(a, d);
            acc / gcd(acc, o) * o
        })
    }

    /// Mixed-radix index of an element, in `0..order()`.
    pub fn index(&self, x: &[i64]) -> usize {
        x.iter().zip(&self.factors).fold(0usize, |acc, (&a, &d)| acc * d as usize + a as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> Vec<i64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % d as usize) as i64;
            idx /= d as usize;
        }
        out
    }

    /// All elements, in index order (lexicographic).
    pub fn elements(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// The cyclic subgroup generated by `x`, as `[0, x, 2x, …]`.
    pub fn multiples(&self, x: &[i64]) -> Vec<Vec<i64>> {
        (0..self.element_order(x)).map(|k| self.scale(k, x)).collect()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Z^n / ⟨relations⟩ ≅ Z^rank ⊕ T`, with the coordinate map realising the
/// isomorphism.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    ngens: usize,
    rank: usize,
    torsion: FiniteAbelianGroup,
    /// columns of `V` kept for the torsion factors, then the free ones
    torsion_cols: Vec<usize>,
    free_cols: Vec<usize>,
    v: IntMatrix,
}

impl AbelianQuotient {
    /// Each relation is a row vector of length `ngens`.
    pub fn from_relations(ngens: usize, relations: &[Vec<i64>]) -> Self {
        let m = IntMatrix::from_rows(relations, ngens);
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        let mut torsion_cols = Vec::new();
        let mut factors = Vec::new();
        let mut free_cols = Vec::new();
        for j in 0..ngens {
            let dj = diag.get(j).copied().unwrap_or(0);
            match dj {
                0 => free_cols.push(j),
                1 => {}
                d => {
                    torsion_cols.push(j);
                    factors.push(d);
                }
            }
        }
        AbelianQuotient {
            ngens,
            rank: free_cols.len(),
            torsion: FiniteAbelianGroup { factors },
            torsion_cols,
            free_cols,
            v: snf.v,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &FiniteAbelianGroup {
        &self.torsion
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Image of `x ∈ Z^n` as `(free coordinates, torsion coordinates)`.
    pub fn project(&self, x: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let y = self.v.apply_row(x);
        let free = self.free_cols.iter().map(|&j| y[j]).collect();
        let tors = self.torsion_cols.iter().map(|&j| y[j]).collect::<Vec<_>>();
        (free, self.torsion.reduce(&tors))
    }

    /// Flips the sign of the `k`-th free coordinate.
    pub fn flip_free(&mut self, k: usize) {
        let j = self.free_cols[k];
        for i in 0..self.v.rows {
            self.v[(i, j)] = -self.v[(i, j)];
        }
    }
}

/// An element of `H₁(Y) = Z ⊕ T`: `t^free · tors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct H1Element {
    pub free: i64,
    pub tors: Vec<i64>,
}

impl H1Element {
    pub fn new(free: i64, tors: Vec<i64>) -> Self {
        H1Element { free, tors }
    }

    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        H1Element { free: 0, tors: group.zero() }
    }

    /// The fixed projection `φ` onto the free part.
    pub fn phi(&self) -> i64 {
        self.free
    }

    pub fn add(&self, other: &H1Element, group: &FiniteAbelianGroup) -> H1Element {
        H1Element { free: self.free + other.free, tors: group.add(&self.tors, &other.tors) }
    }

    pub fn sub(&self, other: &H1Element, group: &FiniteAbelianGroup) -> H1Element {
        H1Element { free: self.free - other.free, tors: group.sub(&self.tors, &other.tors) }
    }

    pub fn neg(&self, group: &FiniteAbelianGroup) -> H1Element {
        H1Element { free: -self.free, tors: group.neg(&self.tors) }
    }

    pub fn scale(&self, k: i64, group: &FiniteAbelianGroup) -> H1Element {
        H1Element { free: k * self.free, tors: group.scale(k, &self.tors) }
    }
}

impl fmt::Display for H1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tors.is_empty() {
            write!(f, "t^{}", self.free)
        } else {
            let t: Vec<String> = self.tors.iter().map(|x| x.to_string()).collect();
            write!(f, "t^{}·[{}]", self.free, t.join(","))
        }
    }
}

/// `T`, together with `i(μ)` and `σ = i(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryData {
    group: FiniteAbelianGroup,
    i_mu: H1Element,
    i_lambda: H1Element,
}

impl BoundaryData {
    pub fn new(group: FiniteAbelianGroup, i_mu: H1Element, i_lambda: H1Element) -> Result<Self, HomologyError> {
        group.check(&i_mu.tors)?;
        group.check(&i_lambda.tors)?;
        if i_lambda.free != 0 {
            return Err(HomologyError::LongitudeNotTorsion(i_lambda.free));
        }
        let g = i_mu.free;
        if g <= 0 {
            return Err(HomologyError::NonPositiveMeridian(g));
        }
        let order = group.element_order(&i_lambda.tors);
        if order != g {
            return Err(HomologyError::OrderMismatch { order, g });
        }
        if !group.multiples(&i_lambda.tors).contains(&i_mu.tors) {
            return Err(HomologyError::MeridianOffSplitting);
        }
        Ok(BoundaryData { group, i_mu, i_lambda })
    }

    /// Boundary data of `S¹ × D²`: `T = 0`, `i(μ) = t`, `i(λ) = 0`.
    pub fn solid_torus() -> Self {
        let group = FiniteAbelianGroup::trivial();
        BoundaryData { i_mu: H1Element::new(1, vec![]), i_lambda: H1Element::new(0, vec![]), group }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn i_mu(&self) -> &H1Element {
        &self.i_mu
    }

    pub fn i_lambda(&self) -> &H1Element {
        &self.i_lambda
    }

    /// `σ = i(λ)`, as a torsion vector.
    pub fn sigma(&self) -> &[i64] {
        &self.i_lambda.tors
    }

    /// `g_Y = ord(σ) = φ(i(μ))`.
    pub fn g_y(&self) -> i64 {
        self.i_mu.free
    }

    /// `i(p μ + q λ)`
    pub fn include(&self, p: i64, q: i64) -> H1Element {
        self.i_mu.scale(p, &self.group).add(&self.i_lambda.scale(q, &self.group), &self.group)
    }

    /// Membership in `Im(i) = g_Y Z ⊕ ⟨σ⟩`.
    pub fn in_image(&self, h: &H1Element) -> bool {
        preimage_slopes(self, h).is_some()
    }
}

/// `H₁(Y(λ)) = Z ⊕ T*` and the quotient map `ι`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilledHomology {
    star_group: FiniteAbelianGroup,
    /// `(1 + r) × (1 + r*)`; row vector `(free, tors)` times this matrix,
    /// reduced mod the factors of `T*`, is `ι(h)`.
    iota_matrix: IntMatrix,
}

impl FilledHomology {
    pub fn star_group(&self) -> &FiniteAbelianGroup {
        &self.star_group
    }

    pub fn iota_matrix(&self) -> &IntMatrix {
        &self.iota_matrix
    }

    /// `k_Y = |T*|`
    pub fn k_y(&self) -> i64 {
        self.star_group.order()
    }

    pub fn iota(&self, h: &H1Element) -> H1Element {
        let mut x = vec![h.free];
        x.extend_from_slice(&h.tors);
        let y = self.iota_matrix.apply_row(&x);
        H1Element { free: y[0], tors: self.star_group.reduce(&y[1..]) }
    }

    /// For each element of `T*` (in index order) the least element of `T`
    /// mapping to it.
    pub fn section(&self, group: &FiniteAbelianGroup) -> Vec<Vec<i64>> {
        let mut out: Vec<Option<Vec<i64>>> = vec![None; self.k_y() as usize];
        for s in group.elements() {
            let img = self.iota(&H1Element::new(0, s.clone()));
            let slot = &mut out[self.star_group.index(&img.tors)];
            if slot.is_none() {
                *slot = Some(s);
            }
        }
        out.into_iter().map(|s| s.expect("iota is surjective")).collect()
    }
}

/// Quotient of `Z ⊕ T` by `⟨i(λ)⟩`.
pub fn filled_homology(b: &BoundaryData) -> FilledHomology {
    let r = b.group.rank();
    let mut rels: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| if i == j { b.group.factors[i] } else { 0 }).collect())
        .collect();
    rels.push(b.sigma().to_vec());
    let q = AbelianQuotient::from_relations(r, &rels);
    debug_assert_eq!(q.rank(), 0);
    let rs = q.torsion().rank();
    let mut iota = IntMatrix::zeros(1 + r, 1 + rs);
    iota[(0, 0)] = 1;
    for i in 0..r {
        for (k, &j) in q.torsion_cols.iter().enumerate() {
            iota[(1 + i, 1 + k)] = q.v[(i, j)];
        }
    }
    FilledHomology { star_group: q.torsion().clone(), iota_matrix: iota }
}

/// Solutions `(p, q)` of `p·i(μ) + q·i(λ) = d`, as `p` fixed and
/// `q ∈ q0 + period·Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeFamily {
    pub p: i64,
    pub q0: i64,
    pub period: i64,
}

impl SlopeFamily {
    pub fn member(&self, k: i64) -> (i64, i64) {
        (self.p, self.q0 + k * self.period)
    }
}

pub fn preimage_slopes(b: &BoundaryData, d: &H1Element) -> Option<SlopeFamily> {
    let g = b.g_y();
    if d.free.rem_euclid(g) != 0 || d.tors.len() != b.group.rank() {
        return None;
    }
    let p = d.free / g;
    let base = b.group.scale(p, &b.i_mu.tors);
    let target = b.group.reduce(&d.tors);
    (0..g)
        .find(|&q| b.group.add(&base, &b.group.scale(q, b.sigma())) == target)
        .map(|q0| SlopeFamily { p, q0, period: g })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.u.det().abs(), 1);
        assert_eq!(s.v.det().abs(), 1);
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0), "{diag:?}");
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(smith_normal_form(&m).diagonal(), vec![1, 6]);
        check_snf(&m);
        let one = IntMatrix::from_rows(&[vec![1]], 1);
        let s = smith_normal_form(&one);
        assert_eq!((s.u.clone(), s.d.clone(), s.v.clone()), (one.clone(), one.clone(), one));
        let zero = IntMatrix::from_rows(&[vec![0]], 1);
        assert_eq!(smith_normal_form(&zero).d, zero);
        check_snf(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3));
        check_snf(&IntMatrix::from_rows(&[vec![2, -3]], 2));
    }

    #[test]
    fn normalises_cyclic_orders() {
        let (g, q) = FiniteAbelianGroup::from_cyclic_orders(&[2, 3]);
        assert_eq!(g.factors(), &[6]);
        assert_eq!(g.element_order(&q.project(&[1, 0]).1), 2);
        assert_eq!(g.element_order(&q.project(&[0, 1]).1), 3);
        let (g, _) = FiniteAbelianGroup::from_cyclic_orders(&[4, 2, 1]);
        assert_eq!(g.factors(), &[2, 4]);
    }

    #[test]
    fn filled_homology_examples() {
        let st = BoundaryData::solid_torus();
        let f = filled_homology(&st);
        assert_eq!((f.k_y(), st.g_y()), (1, 1));

        let z2 = FiniteAbelianGroup::cyclic(2);
        let b = BoundaryData::new(z2.clone(), H1Element::new(2, vec![0]), H1Element::new(0, vec![1])).unwrap();
        let f = filled_homology(&b);
        assert!(f.star_group().is_trivial());
        assert_eq!((f.k_y(), b.g_y()), (1, 2));

        let z4 = FiniteAbelianGroup::cyclic(4);
        let b = BoundaryData::new(z4, H1Element::new(2, vec![0]), H1Element::new(0, vec![2])).unwrap();
        let f = filled_homology(&b);
        assert_eq!(f.star_group().factors(), &[2]);
        assert_eq!((f.k_y(), b.g_y()), (2, 2));
        assert!(f.iota(b.i_lambda()).tors.iter().all(|&x| x == 0));
        assert_eq!(f.iota(&H1Element::new(3, vec![1])).free, 3);
        assert_eq!(f.section(b.group()).len(), 2);
    }

    #[test]
    fn rejects_bad_boundary_data() {
        let z2 = FiniteAbelianGroup::cyclic(2);
        assert_eq!(
            BoundaryData::new(z2.clone(), H1Element::new(2, vec![0]), H1Element::new(1, vec![1])),
            Err(HomologyError::LongitudeNotTorsion(1))
        );
        assert!(matches!(
            BoundaryData::new(z2.clone(), H1Element::new(1, vec![0]), H1Element::new(0, vec![1])),
            Err(HomologyError::OrderMismatch { order: 2, g: 1 })
        ));
        assert_eq!(
            BoundaryData::new(z2, H1Element::new(1, vec![1]), H1Element::new(0, vec![0])),
            Err(HomologyError::MeridianOffSplitting)
        );
        assert!(FiniteAbelianGroup::new(vec![4, 2]).is_err());
    }

    #[test]
    fn preimage_examples() {
        let st = BoundaryData::solid_torus();
        let fam = preimage_slopes(&st, &H1Element::new(1, vec![])).unwrap();
        assert_eq!((fam.p, fam.period), (1, 1));

        let z2 = FiniteAbelianGroup::cyclic(2);
        let b = BoundaryData::new(z2, H1Element::new(2, vec![0]), H1Element::new(0, vec![1])).unwrap();
        assert_eq!(preimage_slopes(&b, &H1Element::new(1, vec![0])), None);
        assert_eq!(preimage_slopes(&b, &H1Element::new(2, vec![0])), Some(SlopeFamily { p: 1, q0: 0, period: 2 }));
        assert_eq!(preimage_slopes(&b, &H1Element::new(2, vec![1])), Some(SlopeFamily { p: 1, q0: 1, period: 2 }));
    }
}
