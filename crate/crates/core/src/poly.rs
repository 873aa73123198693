//! Integer Laurent polynomials in one variable `t`, and eventually-constant
//! power series `Σ a_i t^i` (the expansions of `N(t)/(1-t)`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of `Z[t, t^-1]`.
///
/// Stored as a dense coefficient vector starting at exponent `low`. The
/// vector never has leading or trailing zeros; the zero polynomial is the
/// empty vector with `low = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c t^e`
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// Polynomial with `coeffs[j]` as the coefficient of `t^(low + j)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let terms: Vec<(i64, i64)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0; (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Width `max - min` of the exponent range; `0` for the zero polynomial.
    pub fn span(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        let j = e - self.low;
        if j < 0 {
            return 0;
        }
        self.coeffs.get(j as usize).copied().unwrap_or(0)
    }

    /// Iterates `(exponent, coefficient)` over the nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(j, &c)| (self.low + j as i64, c))
    }

    pub fn leading_coefficient(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn trailing_coefficient(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(t) ↦ p(t^-1)`
    pub fn reflect(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        match self.max_degree() {
            Some(hi) => Self::from_coeffs(-hi, coeffs),
            None => Self::zero(),
        }
    }

    /// gcd of the coefficients (nonnegative; `0` for zero).
    pub fn content(&self) -> i64 {
        self.coeffs.iter().fold(0, |g, &c| gcd(g, c))
    }

    /// Divides every coefficient by `c`, or `None` if some is not divisible.
    pub fn div_scalar(&self, c: i64) -> Option<Self> {
        if c == 0 || self.coeffs.iter().any(|x| x % c != 0) {
            return None;
        }
        Some(Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x / c).collect()))
    }

    /// Exact quotient `self / d` in `Z[t, t^-1]`, or `None` if `d` does not
    /// divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = self.shift(-self.low).divrem_poly(&d.shift(-d.low))?;
        if !r.is_zero() {
            return None;
        }
        Some(q.shift(self.low - d.low))
    }

    /// Long division of ordinary polynomials (both must have `low >= 0`).
    /// `None` when a leading-coefficient division is inexact.
    fn divrem_poly(&self, d: &LaurentPoly) -> Option<(Self, Self)> {
        let dn = d.max_degree()?;
        let lead = d.leading_coefficient();
        let mut rem = self.clone();
        let mut quot: Vec<(i64, i64)> = Vec::new();
        while let Some(rd) = rem.max_degree() {
            if rd < dn {
                break;
            }
            let rl = rem.leading_coefficient();
            if rl % lead != 0 {
                return None;
            }
            let c = rl / lead;
            let e = rd - dn;
            quot.push((e, c));
            rem = &rem - &(d * &Self::monomial(c, e));
        }
        Some((Self::from_terms(quot), rem))
    }

    /// Pseudo-remainder of `self` by `d` as ordinary polynomials.
    fn pseudo_rem(&self, d: &LaurentPoly) -> Self {
        let dn = d.max_degree().expect("nonzero divisor");
        let lead = d.leading_coefficient();
        let mut rem = self.clone();
        while let Some(rd) = rem.max_degree() {
            if rd < dn {
                break;
            }
            let rl = rem.leading_coefficient();
            rem = &rem.scale(lead) - &(d * &Self::monomial(rl, rd - dn));
            let c = rem.content();
            if c > 1 {
                rem = rem.div_scalar(c).unwrap();
            }
        }
        rem
    }

    /// gcd in `Z[t, t^-1]`, normalised with [`LaurentPoly::normalized`].
    pub fn gcd(&self, other: &LaurentPoly) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let ca = self.content();
        let cb = other.content();
        let mut a = self.shift(-self.low).div_scalar(ca).unwrap();
        let mut b = other.shift(-other.low).div_scalar(cb).unwrap();
        if a.max_degree() < b.max_degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.div_scalar(r.content()).unwrap().shift(-r.low) };
        }
        a.scale(gcd(ca, cb)).normalized()
    }

    /// Canonical unit associate: lowest exponent `0` and positive constant
    /// term.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.shift(-self.low);
        if p.trailing_coefficient() < 0 {
            -p
        } else {
            p
        }
    }

    /// True when `self = ±t^k other` for some `k`.
    pub fn is_associate(&self, other: &LaurentPoly) -> bool {
        self.normalized() == other.normalized()
    }

    /// `p(t) = t^k p(t^-1)` for some `k` (palindromic coefficients).
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Image under `Z[t, t^-1] → Z[t]/(t^g - 1)`, as the coefficient vector
    /// of `1, t, …, t^(g-1)`.
    pub fn reduce_cyclic(&self, g: i64) -> Vec<i64> {
        assert!(g >= 1);
        let mut out = vec![0; g as usize];
        for (e, c) in self.terms() {
            out[e.rem_euclid(g) as usize] += c;
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                write!(f, " ")?;
            }
            let a = c.abs();
            let body = match (e, a) {
                (0, _) => format!("{a}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{a}t"),
                (_, 1) => format!("t^{e}"),
                _ => format!("{a}t^{e}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coefficient(e) + rhs.coefficient(e)).collect();
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A power series `Σ_{i≥0} a_i t^i` with `a_i = tail` for `i ≥ head.len()`.
///
/// Canonical form: the last entry of `head` differs from `tail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StableSeries {
    head: Vec<i64>,
    tail: i64,
}

impl StableSeries {
    pub fn new(head: Vec<i64>, tail: i64) -> Self {
        let mut s = StableSeries { head, tail };
        while s.head.last() == Some(&s.tail) {
            s.head.pop();
        }
        s
    }

    /// A polynomial viewed as a series with zero tail. Negative exponents
    /// are not allowed.
    pub fn from_poly(p: &LaurentPoly) -> Self {
        assert!(p.min_degree().map_or(true, |d| d >= 0), "series must start at t^0");
        let n = p.max_degree().map_or(0, |d| d + 1);
        Self::new((0..n).map(|e| p.coefficient(e)).collect(), 0)
    }

    /// Expansion of `numerator / (1 - t)`; `numerator` must be a polynomial.
    pub fn from_rational(numerator: &LaurentPoly) -> Self {
        assert!(numerator.min_degree().map_or(true, |d| d >= 0), "series must start at t^0");
        let n = numerator.max_degree().map_or(0, |d| d + 1);
        let mut head = Vec::with_capacity(n as usize);
        let mut acc = 0;
        for e in 0..n {
            acc += numerator.coefficient(e);
            head.push(acc);
        }
        Self::new(head, acc)
    }

    pub fn coefficient(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.head.get(i as usize).copied().unwrap_or(self.tail)
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }

    /// First index from which every coefficient equals the tail.
    pub fn stable_from(&self) -> i64 {
        self.head.len() as i64
    }

    /// `(1 - t) · self`, always a polynomial.
    pub fn numerator(&self) -> LaurentPoly {
        let n = self.stable_from();
        LaurentPoly::from_terms((0..=n).map(|i| (i, self.coefficient(i) - self.coefficient(i - 1))))
    }

    /// Multiplies by `t^m`, `m ≥ 0`.
    pub fn shift(&self, m: i64) -> Self {
        assert!(m >= 0);
        let mut head = vec![0; m as usize];
        head.extend_from_slice(&self.head);
        Self::new(head, self.tail)
    }

    pub fn add_poly(&self, p: &LaurentPoly) -> Self {
        let n = self.stable_from().max(p.max_degree().map_or(0, |d| d + 1));
        Self::new((0..n).map(|i| self.coefficient(i) + p.coefficient(i)).collect(), self.tail)
    }

    /// `self - other` when the tails agree, as a polynomial.
    pub fn difference(&self, other: &StableSeries) -> Option<LaurentPoly> {
        if self.tail != other.tail {
            return None;
        }
        let n = self.stable_from().max(other.stable_from());
        Some(LaurentPoly::from_terms((0..n).map(|i| (i, self.coefficient(i) - other.coefficient(i)))))
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.head.iter().map(|x| x * c).collect(), self.tail * c)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c.to_vec())
    }

    #[test]
    fn trims_and_displays() {
        let x = p(-1, &[0, 1, -1, 1, 0]);
        assert_eq!(x.min_degree(), Some(0));
        assert_eq!(x.max_degree(), Some(2));
        assert_eq!(x.to_string(), "1 - t + t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[1, 0, 0, 1]); // 1 + t^3
        let b = p(0, &[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(0, &[1, -1, 1])));
        assert_eq!(a.div_exact(&p(0, &[1, 0, 1])), None);
        assert_eq!(p(2, &[2, 4]).div_exact(&p(1, &[2])), Some(p(1, &[1, 2])));
    }

    #[test]
    fn gcd_of_trefoil_minors() {
        let a = p(0, &[1, 0, 0, 1]);
        let b = p(0, &[1, 0, 1, 0, 1]);
        assert_eq!(a.gcd(&b), p(0, &[1, -1, 1]));
        assert_eq!(p(0, &[2, 2]).gcd(&p(0, &[4, -4])), p(0, &[2]));
    }

    #[test]
    fn cyclic_reduction() {
        let x = p(-1, &[1, 2, 3, 4]);
        assert_eq!(x.reduce_cyclic(2), vec![2 + 4, 1 + 3]);
        assert_eq!(x.reduce_cyclic(1), vec![10]);
    }

    #[test]
    fn stable_series_round_trip() {
        let num = p(0, &[1, -1, 1]);
        let s = StableSeries::from_rational(&num);
        assert_eq!(s.head(), &[1, 0]);
        assert_eq!(s.tail(), 1);
        assert_eq!(s.numerator(), num);
        assert_eq!(s.shift(2).coefficient(2), 1);
        assert_eq!(s.shift(2).coefficient(3), 0);
    }
}
