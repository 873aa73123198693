//! Slopes on the boundary torus as points of `P¹(Q)`.
//!
//! A slope `p/q` is the class `±(p μ + q λ)`; `μ = 1/0`, `λ = 0/1`. The
//! positive circular direction is increasing `p/q`, passing through `μ` from
//! `+∞` to `−∞`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::gcd;
use crate::torsion::{DMode, TorsionDescriptor, TorsionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlopeError {
    #[error("({0}, {1}) is not a primitive class")]
    NotPrimitive(i64, i64),
    #[error("cannot parse slope {0:?}; expected p/q")]
    Parse(String),
    #[error("slopes must be pairwise distinct")]
    NotDistinct,
    #[error("gluing matrix has determinant {0}, expected -1")]
    BadDeterminant(i64),
    #[error("the known L-space slope cannot be the longitude")]
    KnownIsLongitude,
    #[error("D_>0 is infinite; the pulled-back slopes do not form a discrete set")]
    InfiniteDSet,
    #[error(transparent)]
    Torsion(#[from] TorsionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const MERIDIAN: Slope = Slope { p: 1, q: 0 };
    pub const LONGITUDE: Slope = Slope { p: 0, q: 1 };

    /// Canonical representative of `±(p, q)`: `p > 0`, or `(0, 1)`.
    pub fn new(p: i64, q: i64) -> Result<Self, SlopeError> {
        if gcd(p, q) != 1 {
            return Err(SlopeError::NotPrimitive(p, q));
        }
        Ok(if p < 0 || (p == 0 && q < 0) { Slope { p: -p, q: -q } } else { Slope { p, q } })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `p/q` as a fraction with positive denominator; `None` for `μ`.
    fn value(&self) -> Option<(i64, i64)> {
        match self.q.cmp(&0) {
            Ordering::Equal => None,
            Ordering::Greater => Some((self.p, self.q)),
            Ordering::Less => Some((-self.p, -self.q)),
        }
    }

    /// Linear order cutting the circle at `μ`, which is the largest.
    fn linear_cmp(&self, other: &Slope) -> Ordering {
        match (self.value(), other.value()) {
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Greater,
            (_, None) => Ordering::Less,
            (Some((a, b)), Some((c, d))) => (a as i128 * d as i128).cmp(&(c as i128 * b as i128)),
        }
    }

    /// Number of Farey generations needed: `max(|p|, |q|)`.
    pub fn height(&self) -> i64 {
        self.p.abs().max(self.q.abs())
    }

    /// All slopes with `max(|p|, |q|) ≤ h`.
    pub fn up_to_height(h: i64) -> Vec<Slope> {
        let mut out = vec![Slope::LONGITUDE];
        for p in 1..=h {
            for q in -h..=h {
                if gcd(p, q) == 1 {
                    out.push(Slope { p, q });
                }
            }
        }
        out
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = SlopeError;
    fn from_str(s: &str) -> Result<Self, SlopeError> {
        let err = || SlopeError::Parse(s.to_string());
        let (a, b) = s.split_once('/').ok_or_else(err)?;
        let p = a.trim().parse().map_err(|_| err())?;
        let q = b.trim().parse().map_err(|_| err())?;
        Slope::new(p, q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Positive,
    Negative,
}

/// `y` lies strictly inside the positive arc from `x` to `z`.
pub fn between(x: &Slope, y: &Slope, z: &Slope) -> bool {
    let lt = |a: &Slope, b: &Slope| a.linear_cmp(b) == Ordering::Less;
    (lt(x, y) && lt(y, z)) || (lt(y, z) && lt(z, x)) || (lt(z, x) && lt(x, y))
}

pub fn circular_compare(x: &Slope, y: &Slope, z: &Slope) -> Result<Orientation, SlopeError> {
    if x == y || y == z || x == z {
        return Err(SlopeError::NotDistinct);
    }
    Ok(if between(x, y, z) { Orientation::Positive } else { Orientation::Negative })
}

/// A connected subset of `P¹(Q)` with rational endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SlopeInterval {
    Empty,
    Full,
    AllBut(Slope),
    Point(Slope),
    /// The positive arc from `start` to `end` (`start ≠ end`).
    Arc { start: Slope, end: Slope, start_closed: bool, end_closed: bool },
}

impl SlopeInterval {
    pub fn closed(start: Slope, end: Slope) -> Self {
        if start == end {
            SlopeInterval::Point(start)
        } else {
            SlopeInterval::Arc { start, end, start_closed: true, end_closed: true }
        }
    }

    pub fn open(start: Slope, end: Slope) -> Self {
        if start == end {
            SlopeInterval::AllBut(start)
        } else {
            SlopeInterval::Arc { start, end, start_closed: false, end_closed: false }
        }
    }

    pub fn contains(&self, s: &Slope) -> bool {
        match self {
            SlopeInterval::Empty => false,
            SlopeInterval::Full => true,
            SlopeInterval::AllBut(x) => s != x,
            SlopeInterval::Point(x) => s == x,
            SlopeInterval::Arc { start, end, start_closed, end_closed } => {
                if s == start {
                    *start_closed
                } else if s == end {
                    *end_closed
                } else {
                    between(start, s, end)
                }
            }
        }
    }

    pub fn interior(&self) -> Self {
        match *self {
            SlopeInterval::Point(_) => SlopeInterval::Empty,
            SlopeInterval::Arc { start, end, .. } => SlopeInterval::open(start, end),
            other => other,
        }
    }

    /// Complement of an open set (or of `Empty`/`Full`).
    fn complement_of_open(&self) -> Self {
        match *self {
            SlopeInterval::Empty => SlopeInterval::Full,
            SlopeInterval::Full => SlopeInterval::Empty,
            SlopeInterval::AllBut(x) => SlopeInterval::Point(x),
            SlopeInterval::Arc { start, end, .. } => SlopeInterval::closed(end, start),
            SlopeInterval::Point(_) => unreachable!("points are not open"),
        }
    }

    /// For closed sets only.
    fn disjoint_closed(&self, other: &SlopeInterval) -> bool {
        use SlopeInterval::*;
        match (self, other) {
            (Empty, _) | (_, Empty) => true,
            (Full, _) | (_, Full) => false,
            (Point(x), y) | (y, Point(x)) => !y.contains(x),
            (Arc { start: a, .. }, Arc { start: b, .. }) => !self.contains(b) && !other.contains(a),
            _ => unreachable!("closed sets only"),
        }
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeInterval::Empty => write!(f, "empty"),
            SlopeInterval::Full => write!(f, "all"),
            SlopeInterval::AllBut(x) => write!(f, "all - {{{x}}}"),
            SlopeInterval::Point(x) => write!(f, "{{{x}}}"),
            SlopeInterval::Arc { start, end, start_closed, end_closed } => write!(
                f,
                "{}{start}, {end}{}",
                if *start_closed { "[" } else { "(" },
                if *end_closed { "]" } else { ")" }
            ),
        }
    }
}

/// Orientation-reversing boundary identification, acting on `(μ, λ)`
/// coordinates: `(p, q) ↦ (a p + b q, c p + d q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl GluingMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, SlopeError> {
        let det = a * d - b * c;
        if det != -1 {
            return Err(SlopeError::BadDeterminant(det));
        }
        Ok(GluingMap { a, b, c, d })
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn inverse(&self) -> Self {
        GluingMap { a: -self.d, b: self.b, c: self.c, d: -self.a }
    }

    pub fn apply(&self, s: &Slope) -> Slope {
        Slope::new(self.a * s.p + self.b * s.q, self.c * s.p + self.d * s.q).expect("unimodular")
    }

    /// Endpoints are mapped and the arc reversed.
    pub fn apply_interval(&self, i: &SlopeInterval) -> SlopeInterval {
        match *i {
            SlopeInterval::AllBut(x) => SlopeInterval::AllBut(self.apply(&x)),
            SlopeInterval::Point(x) => SlopeInterval::Point(self.apply(&x)),
            SlopeInterval::Arc { start, end, start_closed, end_closed } => SlopeInterval::Arc {
                start: self.apply(&end),
                end: self.apply(&start),
                start_closed: end_closed,
                end_closed: start_closed,
            },
            other => other,
        }
    }
}

/// `Y₁ ∪_φ Y₂` is an L-space iff `φ_*(L°₁) ∪ L°₂` is everything.
pub fn splice_is_lspace(int1: &SlopeInterval, int2: &SlopeInterval, m: &GluingMap) -> bool {
    let a = m.apply_interval(&int1.interior()).complement_of_open();
    let b = int2.interior().complement_of_open();
    a.disjoint_closed(&b)
}

/// A slope of `Y₂` missed by `φ_*(L°₁) ∪ L°₂`, when there is one.
///
/// Two meeting closed arcs share an endpoint of one of them, so only
/// endpoints need checking.
pub fn splice_obstruction(int1: &SlopeInterval, int2: &SlopeInterval, m: &GluingMap) -> Option<Slope> {
    let a = m.apply_interval(&int1.interior()).complement_of_open();
    let b = int2.interior().complement_of_open();
    let ends = |s: &SlopeInterval| match *s {
        SlopeInterval::Point(x) => vec![x],
        SlopeInterval::Arc { start, end, .. } => vec![start, end],
        SlopeInterval::Full => vec![Slope::MERIDIAN],
        _ => vec![],
    };
    ends(&a).into_iter().chain(ends(&b)).find(|s| a.contains(s) && b.contains(s))
}

/// The L-space filling interval from `D_{>0}` and one known L-space slope.
///
/// The pulled-back slopes `i⁻¹(D_{>0})` cut the circle; the answer is the
/// closed arc between the two that are consecutive around `known`. When
/// `known` is itself pulled back, the arc ending at `known` is returned.
pub fn lspace_interval(d: &TorsionDescriptor, known: &Slope, hi: i64) -> Result<SlopeInterval, SlopeError> {
    if *known == Slope::LONGITUDE {
        return Err(SlopeError::KnownIsLongitude);
    }
    let dset = d.dset(hi, DMode::Positive);
    if dset.is_empty() {
        return Ok(SlopeInterval::AllBut(Slope::LONGITUDE));
    }
    if !dset.is_finite() {
        return Err(SlopeError::InfiniteDSet);
    }
    if !dset.is_complete() {
        return Err(TorsionError::WindowTooSmall { hi, needed: dset.stable_from }.into());
    }
    let families: Vec<_> = dset
        .elements
        .iter()
        .filter_map(|h| crate::homology::preimage_slopes(d.boundary(), h))
        .collect();

    let (pk, qk) = (known.p as i128, known.q as i128);
    // w = q/p; the positive direction is decreasing w
    let mut next: Option<Slope> = None;
    let mut prev: Option<Slope> = None;
    let mut hit = false;
    let w_lt = |x: &Slope, y: &Slope| (x.q as i128) * (y.p as i128) < (y.q as i128) * (x.p as i128);
    for fam in families {
        let (p, q0, g) = (fam.p as i128, fam.q0 as i128, fam.period as i128);
        let n = qk * p - q0 * pk;
        let dn = g * pk;
        if n.rem_euclid(dn) == 0 && gcd(fam.p, fam.q0 + (n / dn) as i64 * fam.period) == 1 {
            hit = true;
        }
        let bound = p * g;
        let k_max = n.div_euclid(dn) - i128::from(n.rem_euclid(dn) == 0);
        let k_min = n.div_euclid(dn) + 1;
        let pick = |k0: i128, step: i128| {
            (0..=bound)
                .map(|j| k0 + step * j)
                .map(|k| (fam.p, (q0 + k * g) as i64))
                .find(|&(p, q)| gcd(p, q) == 1)
                .map(|(p, q)| Slope::new(p, q).expect("primitive"))
        };
        if let Some(s) = pick(k_max, -1) {
            if next.map_or(true, |t| w_lt(&t, &s)) {
                next = Some(s);
            }
        }
        if let Some(s) = pick(k_min, 1) {
            if prev.map_or(true, |t| w_lt(&s, &t)) {
                prev = Some(s);
            }
        }
    }
    match (prev, next) {
        (Some(prev), _) if hit => Ok(SlopeInterval::closed(prev, *known)),
        (Some(prev), Some(next)) => Ok(SlopeInterval::closed(prev, next)),
        // no primitive pulled-back slope at all
        _ => Ok(SlopeInterval::AllBut(Slope::LONGITUDE)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::canonical_gst_cyclic;
    use crate::groupring::{GroupRingElt, NovikovElement};
    use crate::homology::{BoundaryData, FiniteAbelianGroup};
    use crate::poly::LaurentPoly;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(s(-2, 3), s(2, -3));
        assert_eq!(s(0, -1), Slope::LONGITUDE);
        assert!(Slope::new(2, 4).is_err());
        assert_eq!("3/-2".parse::<Slope>().unwrap(), s(-3, 2));
        assert_eq!(s(-3, 2).to_string(), "3/-2");
    }

    #[test]
    fn circular_examples() {
        assert_eq!(circular_compare(&s(0, 1), &s(1, 1), &s(1, 0)), Ok(Orientation::Positive));
        assert_eq!(circular_compare(&s(1, 0), &s(-1, 1), &s(0, 1)), Ok(Orientation::Positive));
        assert_eq!(circular_compare(&s(1, 2), &s(2, 3), &s(1, 1)), Ok(Orientation::Positive));
        assert_eq!(circular_compare(&s(1, 1), &s(2, 3), &s(1, 2)), Ok(Orientation::Negative));
        assert_eq!(circular_compare(&s(1, 1), &s(1, 1), &s(1, 2)), Err(SlopeError::NotDistinct));
    }

    #[test]
    fn gluing_examples() {
        let swap = GluingMap::new(0, 1, 1, 0).unwrap();
        assert_eq!(swap.apply(&s(2, 3)), s(3, 2));
        let img = swap.apply_interval(&SlopeInterval::closed(s(0, 1), s(1, 1)));
        assert_eq!(img, SlopeInterval::closed(s(1, 1), s(1, 0)));
        assert!(img.contains(&s(2, 1)) && !img.contains(&s(1, 2)));
        let flip = GluingMap::new(1, 0, 0, -1).unwrap();
        assert_eq!(flip.apply(&s(1, 2)), s(1, -2));
        assert!(GluingMap::new(1, 0, 0, 1).is_err());
        let m = GluingMap::new(2, 1, 3, 1).unwrap();
        assert_eq!(m.apply(&m.inverse().apply(&s(5, 7))), s(5, 7));
    }

    #[test]
    fn splice_examples() {
        let mu2 = s(1, 0);
        let int1 = SlopeInterval::AllBut(Slope::LONGITUDE);
        let int2 = SlopeInterval::AllBut(mu2);
        let swap = GluingMap::new(0, 1, 1, 0).unwrap();
        // swap sends λ to μ: the two missing points coincide
        assert!(!splice_is_lspace(&int1, &int2, &swap));
        let m = GluingMap::new(1, 1, 0, -1).unwrap();
        assert_ne!(m.apply(&Slope::LONGITUDE), mu2);
        assert!(splice_is_lspace(&int1, &int2, &m));
        let p = SlopeInterval::Point(s(1, 1));
        assert!(!splice_is_lspace(&p, &p, &swap));
    }

    #[test]
    fn intervals_from_torsion() {
        let st = canonical_gst_cyclic(1, 1).unwrap();
        assert_eq!(lspace_interval(&st, &Slope::MERIDIAN, 8), Ok(SlopeInterval::AllBut(Slope::LONGITUDE)));
        let c = canonical_gst_cyclic(3, 2).unwrap();
        assert_eq!(lspace_interval(&c, &Slope::MERIDIAN, 8), Ok(SlopeInterval::AllBut(Slope::LONGITUDE)));

        let triv = FiniteAbelianGroup::trivial();
        let tau = NovikovElement::rational(GroupRingElt::from_t_poly(&triv, &LaurentPoly::from_coeffs(0, vec![1, -1, 1])));
        let tr = TorsionDescriptor::new(BoundaryData::solid_torus(), tau).unwrap();
        let i = lspace_interval(&tr, &Slope::MERIDIAN, 8).unwrap();
        assert_eq!(i, SlopeInterval::closed(s(1, 1), Slope::MERIDIAN));
        assert!(i.contains(&Slope::MERIDIAN) && !i.contains(&Slope::LONGITUDE));
        let j = lspace_interval(&tr, &s(3, 2), 8).unwrap();
        assert_eq!(j, SlopeInterval::closed(s(1, 1), s(1, 0)));
        assert_eq!(lspace_interval(&tr, &Slope::LONGITUDE, 8), Err(SlopeError::KnownIsLongitude));
        assert!(matches!(lspace_interval(&tr, &Slope::MERIDIAN, 0), Err(SlopeError::Torsion(_))));
    }
}
