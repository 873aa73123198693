//! Group presentations, Fox free differential calculus and the Alexander
//! polynomial of a deficiency-one presentation.
//!
//! Text grammar:
//!
//! ```text
//! < a, b | a^2 b^-3, (a b)^2 a^-1 >
//! meridian: a^-1 b^1
//! longitude: a^2 b^-3
//! ```
//!
//! Juxtaposition is product, `^n` a power, `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groupring::{GroupRingElt, NovikovElement};
use crate::homology::{AbelianQuotient, BoundaryData, FiniteAbelianGroup, H1Element};
use crate::poly::LaurentPoly;
use crate::torsion::{TorsionDescriptor, TorsionError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParseErrorKind {
    UnknownGenerator(String),
    UnbalancedBracket,
    EmptyRelator,
    Syntax(String),
}

#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize, Deserialize)]
#[error("{line}:{col}: {}", describe(.kind))]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

fn describe(k: &ParseErrorKind) -> String {
    match k {
        ParseErrorKind::UnknownGenerator(g) => format!("unknown generator `{g}`"),
        ParseErrorKind::UnbalancedBracket => "unbalanced bracket".into(),
        ParseErrorKind::EmptyRelator => "empty relator".into(),
        ParseErrorKind::Syntax(m) => m.clone(),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoxError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("presentation has {gens} generators and {rels} relators; deficiency one is required")]
    Deficiency { gens: usize, rels: usize },
    #[error("first Betti number is {0}, expected 1")]
    Betti(usize),
    #[error("H_1 has torsion {0}; torsion lifts must be supplied by hand")]
    TorsionNontrivial(String),
    #[error("all maximal minors vanish")]
    ZeroPolynomial,
    #[error("no meridian word given")]
    MissingMeridian,
    #[error("meridian maps to 0 in H_1/torsion")]
    DegenerateMeridian,
    #[error("longitude maps to t^{0}, not to a torsion class")]
    LongitudeNotTorsion(i64),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv { -1 } else { 1 }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(gen: usize, exp: i64) -> Self {
        Word((0..exp.abs()).map(|_| Letter { gen, inv: exp < 0 }).collect())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for l in &self.0 {
            v[l.gen] += l.exponent();
        }
        v
    }

    /// Replaces each generator by a word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        self.0.iter().fold(Word::identity(), |acc, l| {
            let w = &images[l.gen];
            acc.mul(&if l.inv { w.inverse() } else { w.clone() })
        })
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let n = (j - i) as i64 * l.exponent();
            parts.push(if n == 1 { names[l.gen].clone() } else { format!("{}^{}", names[l.gen], n) });
            i = j;
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub meridian: Option<Word>,
    pub longitude: Option<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation { generators, relators, meridian: None, longitude: None }
    }

    pub fn with_peripheral(mut self, meridian: Word, longitude: Word) -> Self {
        self.meridian = Some(meridian);
        self.longitude = Some(longitude);
        self
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|w| w.format(&self.generators)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))?;
        if let Some(m) = &self.meridian {
            write!(f, "\nmeridian: {}", m.format(&self.generators))?;
        }
        if let Some(l) = &self.longitude {
            write!(f, "\nlongitude: {}", l.format(&self.generators))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    gens: &'a [String],
    /// stop words at a newline (peripheral lines)
    single_line: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &str, gens: &'a [String], line: usize, col: usize, single_line: bool) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, line, col, gens, single_line }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, col: self.col, kind }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() && !(self.single_line && c == '\n') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let c = self.peek()?;
        if !(c.is_alphabetic() || c == '_') {
            return None;
        }
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
            s.push(c);
            self.bump();
        }
        Some(s)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let mut s = String::new();
        if self.peek() == Some('-') || self.peek() == Some('+') {
            s.push(self.bump().unwrap());
        }
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        s.parse().map_err(|_| self.err(ParseErrorKind::Syntax("expected an integer exponent".into())))
    }

    fn word(&mut self) -> Result<(Word, usize), ParseError> {
        let mut w = Word::identity();
        let mut factors = 0;
        loop {
            self.skip_ws();
            let (line, col) = (self.line, self.col);
            let atom = match self.peek() {
                Some('(') => {
                    self.bump();
                    let (inner, _) = self.word()?;
                    if !self.eat(')') {
                        return Err(ParseError { line, col, kind: ParseErrorKind::UnbalancedBracket });
                    }
                    inner
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let name = self.ident().unwrap();
                    match self.gens.iter().position(|g| *g == name) {
                        Some(i) => Word::letter(i, 1),
                        None => return Err(ParseError { line, col, kind: ParseErrorKind::UnknownGenerator(name) }),
                    }
                }
                _ => break,
            };
            let exp = if self.eat('^') { self.integer()? } else { 1 };
            w = w.mul(&atom.pow(exp));
            factors += 1;
        }
        Ok((w, factors))
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let no_gens: Vec<String> = Vec::new();
    let mut p = Parser::new(text, &no_gens, 1, 1, false);
    p.skip_ws();
    let (open_line, open_col) = (p.line, p.col);
    if !p.eat('<') {
        return Err(p.err(ParseErrorKind::Syntax("expected `<`".into())));
    }
    let mut generators: Vec<String> = Vec::new();
    loop {
        p.skip_ws();
        let (line, col) = (p.line, p.col);
        match p.ident() {
            Some(g) if generators.contains(&g) => {
                return Err(ParseError { line, col, kind: ParseErrorKind::Syntax(format!("duplicate generator `{g}`")) })
            }
            Some(g) => generators.push(g),
            None => break,
        }
        if !p.eat(',') {
            break;
        }
    }
    let mut relators = Vec::new();
    if p.eat('|') {
        let gens = generators.clone();
        let mut q = Parser { chars: std::mem::take(&mut p.chars), pos: p.pos, line: p.line, col: p.col, gens: &gens, single_line: false };
        q.skip_ws();
        if q.peek() != Some('>') {
            loop {
                q.skip_ws();
                let (line, col) = (q.line, q.col);
                let (w, factors) = q.word()?;
                if factors == 0 {
                    if q.peek() == Some(')') {
                        return Err(q.err(ParseErrorKind::UnbalancedBracket));
                    }
                    if q.peek().is_none() {
                        return Err(ParseError { line: open_line, col: open_col, kind: ParseErrorKind::UnbalancedBracket });
                    }
                    return Err(ParseError { line, col, kind: ParseErrorKind::EmptyRelator });
                }
                relators.push(w);
                if !q.eat(',') {
                    break;
                }
            }
        }
        p.chars = std::mem::take(&mut q.chars);
        p.pos = q.pos;
        p.line = q.line;
        p.col = q.col;
    }
    p.skip_ws();
    match p.peek() {
        Some('>') => {
            p.bump();
        }
        Some(')') => return Err(p.err(ParseErrorKind::UnbalancedBracket)),
        None => return Err(ParseError { line: open_line, col: open_col, kind: ParseErrorKind::UnbalancedBracket }),
        Some(c) => return Err(p.err(ParseErrorKind::Syntax(format!("unexpected `{c}`")))),
    }
    let mut pres = Presentation::new(generators, relators);

    // peripheral lines
    let rest: String = p.chars[p.pos..].iter().collect();
    let (mut line, mut col) = (p.line, p.col);
    for (k, raw) in rest.split('\n').enumerate() {
        if k > 0 {
            line += 1;
            col = 1;
        }
        let body = raw.split('#').next().unwrap();
        if body.trim().is_empty() {
            continue;
        }
        let lead = body.len() - body.trim_start().len();
        let Some((key, value)) = body.split_once(':') else {
            return Err(ParseError { line, col: col + lead, kind: ParseErrorKind::Syntax("expected `meridian:` or `longitude:`".into()) });
        };
        let vcol = col + key.chars().count() + 1;
        let mut wp = Parser::new(value, &pres.generators, line, vcol, true);
        let (w, _) = wp.word()?;
        wp.skip_ws();
        if wp.peek().is_some() {
            if wp.peek() == Some(')') {
                return Err(wp.err(ParseErrorKind::UnbalancedBracket));
            }
            return Err(wp.err(ParseErrorKind::Syntax("trailing input".into())));
        }
        match key.trim() {
            "meridian" => pres.meridian = Some(w),
            "longitude" => pres.longitude = Some(w),
            other => {
                return Err(ParseError { line, col: col + lead, kind: ParseErrorKind::Syntax(format!("unknown key `{other}`")) })
            }
        }
    }
    Ok(pres)
}

/// An element of `Z[F]`, the integral group ring of the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeDerivative {
    terms: BTreeMap<Word, i64>,
}

impl FreeDerivative {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: Word, c: i64) {
        let e = self.terms.entry(w).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(w, c)| (w.clone(), k * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    /// Image in `Z[t, t^-1]` under `x_j ↦ t^{images[j]}`.
    pub fn abelianize(&self, images: &[i64]) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(w, c)| (w.exponent_sums(images.len()).iter().zip(images).map(|(a, b)| a * b).sum(), c)))
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms().map(|(w, c)| format!("{c}·{}", w.format(names))).collect::<Vec<_>>().join(" + ")
    }
}

/// `∂w/∂x`, with `∂(uv)/∂x = ∂u/∂x + u ∂v/∂x`, `∂x/∂x = 1`, `∂x⁻¹/∂x = −x⁻¹`.
pub fn fox_derivative(w: &Word, x: usize) -> FreeDerivative {
    let mut out = FreeDerivative::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.gen == x {
            if l.inv {
                out.add_term(prefix.mul(&Word::letter(x, -1)), -1);
            } else {
                out.add_term(prefix.clone(), 1);
            }
        }
        prefix = prefix.mul(&Word::from_letters([l]));
    }
    out
}

/// `H₁` of the presented group with the class of every generator.
#[derive(Clone, Debug)]
pub struct Abelianization {
    quotient: AbelianQuotient,
    /// per generator: (free coordinates, torsion coordinates)
    pub images: Vec<(Vec<i64>, Vec<i64>)>,
}

impl Abelianization {
    pub fn rank(&self) -> usize {
        self.quotient.rank()
    }

    pub fn torsion(&self) -> &FiniteAbelianGroup {
        self.quotient.torsion()
    }

    pub fn project(&self, w: &Word) -> (Vec<i64>, Vec<i64>) {
        self.quotient.project(&w.exponent_sums(self.quotient.ngens()))
    }

    /// `φ` of every generator, when the rank is one.
    pub fn phi_images(&self) -> Option<Vec<i64>> {
        (self.rank() == 1).then(|| self.images.iter().map(|(f, _)| f[0]).collect())
    }
}

/// Smith normal form of the exponent-sum matrix. Free coordinates are signed
/// so the first generator with a nonzero image maps positively.
pub fn abelianization(p: &Presentation) -> Abelianization {
    let n = p.ngens();
    let rows: Vec<Vec<i64>> = p.relators.iter().map(|r| r.exponent_sums(n)).collect();
    let mut q = AbelianQuotient::from_relations(n, &rows);
    for k in 0..q.rank() {
        let first = (0..n).map(|j| q.project(&unit_vec(n, j)).0[k]).find(|&x| x != 0);
        if first.is_some_and(|x| x < 0) {
            q.flip_free(k);
        }
    }
    let images = (0..n).map(|j| q.project(&unit_vec(n, j))).collect();
    Abelianization { quotient: q, images }
}

fn unit_vec(n: usize, j: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i == j)).collect()
}

/// Fox Jacobian pushed to `Z[t, t^-1]`: rows are relators, columns generators.
pub fn alexander_matrix(p: &Presentation, phi: &[i64]) -> Vec<Vec<LaurentPoly>> {
    p.relators
        .iter()
        .map(|r| (0..p.ngens()).map(|j| fox_derivative(r, j).abelianize(phi)).collect())
        .collect()
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign = 1;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(sign)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderData {
    pub phi: Vec<i64>,
    /// determinant with column `j` deleted
    pub minors: Vec<LaurentPoly>,
    pub polynomial: LaurentPoly,
    /// `minor_j (t − 1) / (t^{φ(x_j)} − 1)` is `±t^k Δ` for every `j` with `φ(x_j) ≠ 0`
    pub columns_agree: bool,
}

pub fn alexander_data(p: &Presentation) -> Result<AlexanderData, FoxError> {
    if p.ngens() != p.relators.len() + 1 {
        return Err(FoxError::Deficiency { gens: p.ngens(), rels: p.relators.len() });
    }
    let ab = abelianization(p);
    let phi = ab.phi_images().ok_or(FoxError::Betti(ab.rank()))?;
    let jac = alexander_matrix(p, &phi);
    let minors: Vec<LaurentPoly> = (0..p.ngens())
        .map(|j| {
            let sub: Vec<Vec<LaurentPoly>> =
                jac.iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
            bareiss_det(&sub)
        })
        .collect();
    let polynomial = minors.iter().fold(LaurentPoly::zero(), |acc, m| acc.gcd(m));
    if polynomial.is_zero() {
        return Err(FoxError::ZeroPolynomial);
    }
    let t_minus_1 = LaurentPoly::from_coeffs(0, vec![-1, 1]);
    let columns_agree = minors.iter().zip(&phi).all(|(m, &e)| {
        if e == 0 {
            return m.is_zero();
        }
        let te = &LaurentPoly::monomial(1, e) - &LaurentPoly::one();
        (m * &t_minus_1).div_exact(&te).is_some_and(|c| c.is_associate(&polynomial))
    });
    Ok(AlexanderData { phi, minors, polynomial, columns_agree })
}

/// gcd of the maximal minors, normalised to `Δ(0) > 0` with lowest degree 0.
pub fn alexander_polynomial(p: &Presentation) -> Result<LaurentPoly, FoxError> {
    Ok(alexander_data(p)?.polynomial)
}

/// `<a, b | a^p b^-q>` with meridian `a^u b^v` (`uq + vp = 1`) and
/// longitude `a^p m^{-pq}`.
pub fn torus_knot_presentation(p: i64, q: i64) -> Presentation {
    let (g, u, v) = ext_gcd(q, p);
    assert_eq!(g, 1, "p and q must be coprime");
    let a = Word::letter(0, 1);
    let b = Word::letter(1, 1);
    let meridian = a.pow(u).mul(&b.pow(v));
    let longitude = a.pow(p).mul(&meridian.pow(-p * q));
    Presentation::new(vec!["a".into(), "b".into()], vec![a.pow(p).mul(&b.pow(-q))]).with_peripheral(meridian, longitude)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// `τ = Δ / (1 − t)` with `i(μ), i(λ)` read off the peripheral words.
///
/// Only `H₁ = Z` is handled.
pub fn descriptor_from_presentation(p: &Presentation) -> Result<TorsionDescriptor, FoxError> {
    let ab = abelianization(p);
    if ab.rank() != 1 {
        return Err(FoxError::Betti(ab.rank()));
    }
    if !ab.torsion().is_trivial() {
        return Err(FoxError::TorsionNontrivial(ab.torsion().to_string()));
    }
    let meridian = p.meridian.as_ref().ok_or(FoxError::MissingMeridian)?;
    let mut g = ab.project(meridian).0[0];
    // orient φ so the meridian is positive
    let flip = if g < 0 { -1 } else { 1 };
    g *= flip;
    if g == 0 {
        return Err(FoxError::DegenerateMeridian);
    }
    if let Some(l) = &p.longitude {
        let f = ab.project(l).0[0];
        if f != 0 {
            return Err(FoxError::LongitudeNotTorsion(f * flip));
        }
    }
    let mut delta = alexander_polynomial(p)?;
    if flip < 0 {
        delta = delta.reflect().normalized();
    }
    let trivial = FiniteAbelianGroup::trivial();
    let boundary = BoundaryData::new(trivial.clone(), H1Element::new(g, vec![]), H1Element::new(0, vec![]))
        .map_err(|_| FoxError::DegenerateMeridian)?;
    let tau = NovikovElement::rational(GroupRingElt::from_t_poly(&trivial, &delta));
    Ok(TorsionDescriptor::new(boundary, tau)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.to_vec())
    }

    #[test]
    fn parse_examples() {
        let p = parse_presentation("<a,b | a^2 b^-3>").unwrap();
        assert_eq!(p.ngens(), 2);
        assert_eq!(p.relators.len(), 1);
        assert_eq!(p.relators[0].len(), 5);
        let p = parse_presentation("<a | >").unwrap();
        assert_eq!((p.ngens(), p.relators.len()), (1, 0));
        let e = parse_presentation("<a,b | a c>").unwrap_err();
        assert_eq!(e, ParseError { line: 1, col: 10, kind: ParseErrorKind::UnknownGenerator("c".into()) });
        let e = parse_presentation("<a,b | a b").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnbalancedBracket);
        let e = parse_presentation("<a,b | (a b >").unwrap_err();
        assert_eq!((e.kind, e.col), (ParseErrorKind::UnbalancedBracket, 8));
        let e = parse_presentation("<a,b | a,  , b>").unwrap_err();
        assert_eq!((e.kind, e.col), (ParseErrorKind::EmptyRelator, 12));
        let e = parse_presentation("<a,b |\n  a b,\n  >").unwrap_err();
        assert_eq!((e.line, e.col, e.kind), (3, 3, ParseErrorKind::EmptyRelator));
    }

    #[test]
    fn parse_peripheral() {
        let text = "# trefoil\n<a, b | a^2 b^-3>\nmeridian: a^-1 b\nlongitude: a^2 (a^-1 b)^-6\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.meridian.as_ref().unwrap().len(), 2);
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(again, p);
        let e = parse_presentation("<a | a^3>\nmeridian: a z\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 13));
    }

    #[test]
    fn fox_examples() {
        let x = Word::letter(0, 1);
        let y = Word::letter(1, 1);
        assert_eq!(fox_derivative(&x.pow(2), 0), FreeDerivative::from_terms([(Word::identity(), 1), (x.clone(), 1)]));
        let xyx = x.mul(&y).mul(&x.inverse());
        assert_eq!(fox_derivative(&xyx, 1), FreeDerivative::word(x.clone()));
        assert!(fox_derivative(&y, 0).is_zero());
        assert_eq!(fox_derivative(&x.inverse(), 0), FreeDerivative::from_terms([(x.inverse(), -1)]));
    }

    #[test]
    fn abelianization_examples() {
        let ab = abelianization(&parse_presentation("<a,b | a^2 b^-3>").unwrap());
        assert_eq!(ab.rank(), 1);
        assert!(ab.torsion().is_trivial());
        assert_eq!(ab.phi_images(), Some(vec![3, 2]));
        let ab = abelianization(&parse_presentation("<a | a^5>").unwrap());
        assert_eq!((ab.rank(), ab.torsion().factors()), (0, &[5][..]));
        assert_eq!(abelianization(&parse_presentation("<a,b | >").unwrap()).rank(), 2);
    }

    #[test]
    fn alexander_examples() {
        let d = alexander_data(&parse_presentation("<a,b | a^2 b^-3>").unwrap()).unwrap();
        assert_eq!(d.polynomial, tp(&[1, -1, 1]));
        assert!(d.columns_agree);
        assert_eq!(alexander_polynomial(&parse_presentation("<a | >").unwrap()).unwrap(), tp(&[1]));
        let d = alexander_polynomial(&parse_presentation("<a,b | a^2 b^-5>").unwrap()).unwrap();
        assert_eq!(d, tp(&[1, -1, 1, -1, 1]));
        assert!(matches!(alexander_polynomial(&parse_presentation("<a,b | >").unwrap()), Err(FoxError::Deficiency { .. })));
    }

    #[test]
    fn descriptors() {
        let tr = descriptor_from_presentation(&torus_knot_presentation(2, 3)).unwrap();
        assert_eq!(tr.g_y(), 1);
        assert_eq!(tr.tau().numerator().parts()[0], tp(&[1, -1, 1]));
        let un = descriptor_from_presentation(&parse_presentation("<a | >\nmeridian: a\nlongitude: a^0").unwrap()).unwrap();
        assert_eq!(un.tau().numerator().parts()[0], tp(&[1]));
        let t25 = descriptor_from_presentation(&torus_knot_presentation(2, 5)).unwrap();
        assert_eq!(t25.delta_bar_degree(), 4);
        let no_m = parse_presentation("<a,b | a^2 b^-3>").unwrap();
        assert_eq!(descriptor_from_presentation(&no_m).unwrap_err(), FoxError::MissingMeridian);
        let bad_l = parse_presentation("<a,b | a^2 b^-3>\nmeridian: a^-1 b\nlongitude: a").unwrap();
        assert_eq!(descriptor_from_presentation(&bad_l).unwrap_err(), FoxError::LongitudeNotTorsion(-3));
    }
}
