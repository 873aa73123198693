//! The group ring `Z[Z ⊕ T]` and its Novikov completion in the `t` direction.
//!
//! An element of `Z[Z ⊕ T]` is stored coset by coset: `Σ_s s · N_s(t)` with
//! one Laurent polynomial per element `s ∈ T` (indexed by
//! [`FiniteAbelianGroup::index`]). Novikov elements are `N / (1 − t)^e` with
//! `e ≤ 2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{FiniteAbelianGroup, H1Element};
use crate::poly::{LaurentPoly, StableSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupRingError {
    #[error("denominator (1-t)^{0} is not supported (at most (1-t)^2)")]
    DenominatorTooLarge(u32),
    #[error("cannot normalise the zero element")]
    Zero,
    #[error("elements live over different torsion groups")]
    GroupMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupRingElt {
    group: FiniteAbelianGroup,
    parts: Vec<LaurentPoly>,
}

impl GroupRingElt {
    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        GroupRingElt { group: group.clone(), parts: vec![LaurentPoly::zero(); group.order() as usize] }
    }

    pub fn one(group: &FiniteAbelianGroup) -> Self {
        Self::monomial(group, &H1Element::identity(group), 1)
    }

    pub fn monomial(group: &FiniteAbelianGroup, h: &H1Element, c: i64) -> Self {
        Self::from_terms(group, [(h.clone(), c)])
    }

    /// `t^n`
    pub fn t_power(group: &FiniteAbelianGroup, n: i64) -> Self {
        Self::monomial(group, &H1Element::new(n, group.zero()), 1)
    }

    /// `1 − t`
    pub fn one_minus_t(group: &FiniteAbelianGroup) -> Self {
        Self::from_t_poly(group, &LaurentPoly::from_coeffs(0, vec![1, -1]))
    }

    /// A polynomial in `t` alone.
    pub fn from_t_poly(group: &FiniteAbelianGroup, p: &LaurentPoly) -> Self {
        let mut x = Self::zero(group);
        x.parts[0] = p.clone();
        x
    }

    pub fn from_parts(group: &FiniteAbelianGroup, parts: Vec<LaurentPoly>) -> Self {
        assert_eq!(parts.len(), group.order() as usize);
        GroupRingElt { group: group.clone(), parts }
    }

    /// Torsion entries are reduced into range.
    pub fn from_terms<I: IntoIterator<Item = (H1Element, i64)>>(group: &FiniteAbelianGroup, terms: I) -> Self {
        let mut buckets: Vec<Vec<(i64, i64)>> = vec![Vec::new(); group.order() as usize];
        for (h, c) in terms {
            buckets[group.index(&group.reduce(&h.tors))].push((h.free, c));
        }
        let parts = buckets.into_iter().map(LaurentPoly::from_terms).collect();
        GroupRingElt { group: group.clone(), parts }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn parts(&self) -> &[LaurentPoly] {
        &self.parts
    }

    pub fn part(&self, tors: &[i64]) -> &LaurentPoly {
        &self.parts[self.group.index(tors)]
    }

    pub fn coefficient(&self, h: &H1Element) -> i64 {
        self.part(&h.tors).coefficient(h.free)
    }

    /// Nonzero terms sorted by `(φ, torsion)`.
    pub fn terms(&self) -> Vec<(H1Element, i64)> {
        let mut out: Vec<(H1Element, i64)> = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                let s = self.group.element_at(i);
                p.terms().map(move |(e, c)| (H1Element::new(e, s.clone()), c))
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_zero())
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.parts.iter().filter_map(|p| p.min_degree()).min()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.parts.iter().filter_map(|p| p.max_degree()).max()
    }

    pub fn scale(&self, c: i64) -> Self {
        self.map_parts(|p| p.scale(c))
    }

    /// Multiplication by a group element.
    pub fn mul_element(&self, h: &H1Element) -> Self {
        let mut parts = vec![LaurentPoly::zero(); self.parts.len()];
        for (i, p) in self.parts.iter().enumerate() {
            let s = self.group.add(&self.group.element_at(i), &h.tors);
            parts[self.group.index(&s)] = p.shift(h.free);
        }
        GroupRingElt { group: self.group.clone(), parts }
    }

    /// Multiplication by a polynomial in `t`.
    pub fn mul_t_poly(&self, q: &LaurentPoly) -> Self {
        self.map_parts(|p| p * q)
    }

    /// Exact division of every coset part by a polynomial in `t`.
    pub fn div_t_poly(&self, q: &LaurentPoly) -> Option<Self> {
        let parts = self.parts.iter().map(|p| p.div_exact(q)).collect::<Option<Vec<_>>>()?;
        Some(GroupRingElt { group: self.group.clone(), parts })
    }

    /// `Φ`: every `h` goes to `t^{φ(h)}`.
    pub fn phi_image(&self) -> LaurentPoly {
        self.parts.iter().fold(LaurentPoly::zero(), |acc, p| &acc + p)
    }

    /// `N_s(1)` for every coset.
    pub fn coset_sums(&self) -> Vec<i64> {
        self.parts.iter().map(|p| p.eval_one()).collect()
    }

    fn map_parts(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        GroupRingElt { group: self.group.clone(), parts: self.parts.iter().map(f).collect() }
    }

    fn zip_parts(&self, other: &Self, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> Self {
        assert_eq!(self.group, other.group, "group mismatch");
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| f(a, b)).collect();
        GroupRingElt { group: self.group.clone(), parts }
    }
}

impl Add for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        self.zip_parts(rhs, |a, b| a + b)
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        self.zip_parts(rhs, |a, b| a - b)
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        self.scale(-1)
    }
}

impl Mul for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        assert_eq!(self.group, rhs.group, "group mismatch");
        let g = &self.group;
        let mut out = GroupRingElt::zero(g);
        for (i, a) in self.parts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let si = g.element_at(i);
            for (j, b) in rhs.parts.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = g.index(&g.add(&si, &g.element_at(j)));
                out.parts[k] = &out.parts[k] + &(a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.group.is_trivial() {
            return write!(f, "{}", self.parts[0]);
        }
        let mut first = true;
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let s: Vec<String> = self.group.element_at(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]·({})", s.join(","), p)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `numerator / (1 − t)^denom_power`, kept with the smallest possible power.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NovikovElement {
    numerator: GroupRingElt,
    denom_power: u32,
}

fn one_minus_t() -> LaurentPoly {
    LaurentPoly::from_coeffs(0, vec![1, -1])
}

impl NovikovElement {
    pub fn new(numerator: GroupRingElt, denom_power: u32) -> Result<Self, GroupRingError> {
        let x = NovikovElement { numerator, denom_power }.cancelled();
        if x.denom_power > 2 {
            return Err(GroupRingError::DenominatorTooLarge(x.denom_power));
        }
        Ok(x)
    }

    pub fn polynomial(numerator: GroupRingElt) -> Self {
        NovikovElement { numerator, denom_power: 0 }
    }

    /// `numerator / (1 − t)`
    pub fn rational(numerator: GroupRingElt) -> Self {
        NovikovElement { numerator, denom_power: 1 }.cancelled()
    }

    /// The element whose coset-`s` expansion is `series[index(s)]`.
    pub fn from_coset_series(group: &FiniteAbelianGroup, series: &[StableSeries]) -> Self {
        let parts = series.iter().map(|s| s.numerator()).collect();
        Self::rational(GroupRingElt::from_parts(group, parts))
    }

    pub fn numerator(&self) -> &GroupRingElt {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.numerator.group
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn cancelled(mut self) -> Self {
        while self.denom_power > 0 && self.numerator.coset_sums().iter().all(|&c| c == 0) {
            self.numerator = self.numerator.div_t_poly(&one_minus_t()).expect("(1-t) divides");
            self.denom_power -= 1;
        }
        if self.numerator.is_zero() {
            self.denom_power = 0;
        }
        self
    }

    fn lift_numerator(&self, e: u32) -> GroupRingElt {
        self.numerator.mul_t_poly(&one_minus_t().pow(e - self.denom_power))
    }

    pub fn add(&self, other: &NovikovElement) -> NovikovElement {
        let e = self.denom_power.max(other.denom_power);
        let n = &self.lift_numerator(e) + &other.lift_numerator(e);
        NovikovElement { numerator: n, denom_power: e }.cancelled()
    }

    pub fn sub(&self, other: &NovikovElement) -> NovikovElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NovikovElement {
        NovikovElement { numerator: -&self.numerator, denom_power: self.denom_power }
    }

    pub fn mul(&self, other: &NovikovElement) -> Result<NovikovElement, GroupRingError> {
        if self.group() != other.group() {
            return Err(GroupRingError::GroupMismatch);
        }
        Self::new(&self.numerator * &other.numerator, self.denom_power + other.denom_power)
    }

    /// Multiplication by the unit `sign · h`.
    pub fn mul_unit(&self, unit: &Unit) -> NovikovElement {
        NovikovElement {
            numerator: self.numerator.mul_element(&unit.element).scale(unit.sign),
            denom_power: self.denom_power,
        }
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.numerator.min_degree()
    }

    /// Degrees at or above this have a closed-form tail in every coset.
    pub fn threshold(&self) -> i64 {
        self.numerator.max_degree().map_or(0, |d| d + 1)
    }

    /// `a_h`
    pub fn coefficient(&self, h: &H1Element) -> i64 {
        expansion_coefficient(self.numerator.part(&h.tors), self.denom_power, h.free)
    }

    pub fn expand(&self, hi: i64) -> GradedWindow {
        let lo = self.min_degree().map_or(0, |d| d.min(0));
        let parts = &self.numerator.parts;
        let coeffs: Vec<Vec<i64>> = parts
            .iter()
            .map(|p| expand_part(p, self.denom_power, lo, hi))
            .collect();
        let tail = (hi + 1 >= self.threshold()).then(|| {
            parts
                .iter()
                .map(|p| {
                    let value = expansion_coefficient(p, self.denom_power, hi + 1);
                    let step = if self.denom_power == 2 { p.eval_one() } else { 0 };
                    Tail { start: hi + 1, value, step }
                })
                .collect()
        });
        GradedWindow { group: self.group().clone(), lo, hi, coeffs, tail }
    }

    /// Pulls out `sign · s · t^lo` so that the result starts in degree 0 with a
    /// positive coefficient on the identity coset.
    pub fn normalize(&self) -> Result<(Unit, NovikovElement), GroupRingError> {
        let lo = self.min_degree().ok_or(GroupRingError::Zero)?;
        let g = self.group();
        let (idx, c) = self
            .numerator
            .parts
            .iter()
            .enumerate()
            .map(|(i, p)| (i, p.coefficient(lo)))
            .find(|&(_, c)| c != 0)
            .expect("some coset attains the minimal degree");
        let unit = Unit { sign: c.signum(), element: H1Element::new(lo, g.element_at(idx)) };
        let normalized = self.mul_unit(&unit.inverse(g));
        Ok((unit, normalized))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize().map_or(false, |(u, _)| u.sign == 1 && u.element.free == 0 && u.element.tors.iter().all(|&x| x == 0))
    }

    pub fn support(&self, hi: i64) -> SupportReport {
        let w = self.expand(hi.max(self.threshold() - 1));
        let window = w
            .entries()
            .filter(|(h, c)| *c != 0 && h.free <= hi)
            .map(|(h, _)| h)
            .collect();
        let hi_eff = w.hi;
        let tail = w
            .tail
            .as_ref()
            .expect("window reaches threshold")
            .iter()
            .map(|t| {
                if t.step == 0 {
                    if t.value == 0 { TailRule::Never } else { TailRule::Always }
                } else if t.value % t.step == 0 && -t.value / t.step >= 0 {
                    TailRule::AllBut(t.start - t.value / t.step)
                } else {
                    TailRule::Always
                }
            })
            .collect::<Vec<_>>();
        // entries between hi and the effective window are folded back in as exceptions
        let extra: Vec<H1Element> = w.entries().filter(|(h, c)| *c != 0 && h.free > hi).map(|(h, _)| h).collect();
        let absent: Vec<H1Element> = w.entries().filter(|(h, c)| *c == 0 && h.free > hi).map(|(h, _)| h).collect();
        SupportReport { hi, window, rule_from: hi_eff + 1, tail, beyond_window_present: extra, beyond_window_absent: absent }
    }

    /// Coset expansions as stable series. Requires `e ≤ 1` and no negative
    /// degrees.
    pub fn coset_series(&self) -> Option<Vec<StableSeries>> {
        if self.denom_power > 1 || self.min_degree().map_or(false, |d| d < 0) {
            return None;
        }
        Some(
            self.numerator
                .parts
                .iter()
                .map(|p| if self.denom_power == 1 { StableSeries::from_rational(p) } else { StableSeries::from_poly(p) })
                .collect(),
        )
    }
}

impl PartialEq for NovikovElement {
    fn eq(&self, other: &Self) -> bool {
        if self.group() != other.group() {
            return false;
        }
        let e = self.denom_power.max(other.denom_power);
        self.lift_numerator(e) == other.lift_numerator(e)
    }
}

impl Eq for NovikovElement {}

impl fmt::Display for NovikovElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom_power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (1 - t)", self.numerator),
            e => write!(f, "({}) / (1 - t)^{e}", self.numerator),
        }
    }
}

/// Coefficient of `t^n` in `p / (1 − t)^e`.
pub fn expansion_coefficient(p: &LaurentPoly, e: u32, n: i64) -> i64 {
    p.terms()
        .filter(|&(j, _)| j <= n)
        .map(|(j, c)| {
            let m = n - j;
            c * match e {
                0 => i64::from(m == 0),
                1 => 1,
                2 => m + 1,
                _ => unreachable!("denominator power is at most 2"),
            }
        })
        .sum()
}

fn expand_part(p: &LaurentPoly, e: u32, lo: i64, hi: i64) -> Vec<i64> {
    if hi < lo {
        return Vec::new();
    }
    // running sums, e times
    let mut v: Vec<i64> = (lo..=hi).map(|n| p.coefficient(n)).collect();
    for _ in 0..e {
        let mut acc = 0;
        for x in v.iter_mut() {
            acc += *x;
            *x = acc;
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Unit {
    pub sign: i64,
    pub element: H1Element,
}

impl Unit {
    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        Unit { sign: 1, element: H1Element::identity(group) }
    }

    pub fn inverse(&self, group: &FiniteAbelianGroup) -> Self {
        Unit { sign: self.sign, element: self.element.neg(group) }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign < 0 { "-" } else { "" }, self.element)
    }
}

/// Coset coefficients for degrees `> hi`: `value + step · (n − start)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tail {
    pub start: i64,
    pub value: i64,
    pub step: i64,
}

impl Tail {
    pub fn at(&self, n: i64) -> i64 {
        debug_assert!(n >= self.start);
        self.value + self.step * (n - self.start)
    }
}

/// Coefficients of an expansion on `lo ..= hi`, per coset, plus the tail if
/// `hi` has reached the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedWindow {
    pub group: FiniteAbelianGroup,
    pub lo: i64,
    pub hi: i64,
    /// `coeffs[index(s)][n − lo]`
    pub coeffs: Vec<Vec<i64>>,
    pub tail: Option<Vec<Tail>>,
}

impl GradedWindow {
    pub fn coefficient(&self, h: &H1Element) -> Option<i64> {
        let row = &self.coeffs[self.group.index(&h.tors)];
        if h.free < self.lo {
            return Some(0);
        }
        if h.free <= self.hi {
            return Some(row[(h.free - self.lo) as usize]);
        }
        self.tail.as_ref().map(|t| t[self.group.index(&h.tors)].at(h.free))
    }

    /// Degree-major iteration over the window.
    pub fn entries(&self) -> impl Iterator<Item = (H1Element, i64)> + '_ {
        (self.lo..=self.hi).flat_map(move |n| {
            (0..self.coeffs.len()).map(move |i| {
                (H1Element::new(n, self.group.element_at(i)), self.coeffs[i][(n - self.lo) as usize])
            })
        })
    }

    /// Coefficients of the identity coset on `lo ..= hi`.
    pub fn trivial_coset(&self) -> &[i64] {
        &self.coeffs[0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TailRule {
    Always,
    Never,
    /// every degree except this one
    AllBut(i64),
}

impl TailRule {
    pub fn contains(&self, n: i64) -> bool {
        match *self {
            TailRule::Always => true,
            TailRule::Never => false,
            TailRule::AllBut(m) => n != m,
        }
    }
}

/// Support of an expansion: explicit up to `hi`, then a rule per coset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub hi: i64,
    pub window: Vec<H1Element>,
    /// degree from which `tail` applies
    pub rule_from: i64,
    pub tail: Vec<TailRule>,
    /// explicit entries between `hi` and `rule_from`
    pub beyond_window_present: Vec<H1Element>,
    pub beyond_window_absent: Vec<H1Element>,
}

impl SupportReport {
    pub fn contains(&self, h: &H1Element, group: &FiniteAbelianGroup) -> bool {
        if h.free <= self.hi {
            self.window.contains(h)
        } else if h.free < self.rule_from {
            self.beyond_window_present.contains(h)
        } else {
            self.tail[group.index(&h.tors)].contains(h.free)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpoly(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.to_vec())
    }

    fn triv() -> FiniteAbelianGroup {
        FiniteAbelianGroup::trivial()
    }

    fn nov(c: &[i64], e: u32) -> NovikovElement {
        NovikovElement::new(GroupRingElt::from_t_poly(&triv(), &tpoly(c)), e).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(nov(&[1], 0).add(&nov(&[0, 1], 0)), nov(&[1, 1], 0));
        let telescoped = nov(&[1, -1], 0).mul(&nov(&[1], 1)).unwrap();
        assert_eq!(telescoped.denom_power(), 0);
        assert_eq!(telescoped, nov(&[1], 0));
        let sq = nov(&[1], 1).mul(&nov(&[1], 1)).unwrap();
        assert_eq!(sq.denom_power(), 2);
        assert_eq!(sq.expand(4).coeffs[0], vec![1, 2, 3, 4, 5]);
        assert_eq!(sq.mul(&nov(&[1], 1)), Err(GroupRingError::DenominatorTooLarge(3)));
    }

    #[test]
    fn expansion_examples() {
        let w = nov(&[1], 1).expand(3);
        assert_eq!(w.coeffs[0], vec![1, 1, 1, 1]);
        assert_eq!(w.tail.unwrap()[0], Tail { start: 4, value: 1, step: 0 });

        let w = nov(&[1, -1, 1], 1).expand(4);
        assert_eq!(w.coeffs[0], vec![1, 0, 1, 1, 1]);
        assert_eq!(w.tail.unwrap()[0].value, 1);

        let w = nov(&[0, 0, 1], 2).expand(4);
        assert_eq!(w.coeffs[0], vec![0, 0, 1, 2, 3]);
        assert_eq!(w.tail.unwrap()[0], Tail { start: 5, value: 4, step: 1 });
    }

    #[test]
    fn normalize_examples() {
        let (u, n) = nov(&[0, 0, 0, 1], 1).normalize().unwrap();
        assert_eq!((u.sign, u.element.free), (1, 3));
        assert_eq!(n, nov(&[1], 1));

        let (u, n) = nov(&[-1, -1], 0).normalize().unwrap();
        assert_eq!((u.sign, u.element.free), (-1, 0));
        assert_eq!(n, nov(&[1, 1], 0));

        let z3 = FiniteAbelianGroup::cyclic(3);
        let s = H1Element::new(2, vec![1]);
        let x = NovikovElement::rational(GroupRingElt::from_t_poly(&z3, &tpoly(&[1, -1, 1])).mul_element(&s));
        let (u, n) = x.normalize().unwrap();
        assert_eq!(u.element, s);
        assert_eq!(n, NovikovElement::rational(GroupRingElt::from_t_poly(&z3, &tpoly(&[1, -1, 1]))));
        assert_eq!(n.mul_unit(&u), x);
        assert!(n.is_normalized());
        assert_eq!(nov(&[], 1).normalize(), Err(GroupRingError::Zero));
    }

    #[test]
    fn support_examples() {
        let g = triv();
        let s = nov(&[1, -1, 1], 1).support(5);
        assert!(!s.contains(&H1Element::new(1, vec![]), &g));
        assert!(s.contains(&H1Element::new(0, vec![]), &g));
        assert!(s.contains(&H1Element::new(100, vec![]), &g));

        let z2 = FiniteAbelianGroup::cyclic(2);
        let num = GroupRingElt::from_terms(&z2, [(H1Element::new(0, vec![0]), 1), (H1Element::new(1, vec![1]), 1)]);
        let s = NovikovElement::rational(num).support(3);
        assert!(s.contains(&H1Element::new(0, vec![0]), &z2));
        assert!(!s.contains(&H1Element::new(0, vec![1]), &z2));
        assert!(s.contains(&H1Element::new(7, vec![1]), &z2));
        assert_eq!(s.tail, vec![TailRule::Always, TailRule::Always]);
    }
}
