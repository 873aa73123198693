//! Example families: canonical generalized-solid-torus torsions and the
//! twisted torus knot predicates.
//!
//! The predicates are sufficient conditions only. A `false` never means
//! "not a generalized solid torus".

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groupring::{GroupRingElt, NovikovElement};
use crate::homology::{filled_homology, BoundaryData, FiniteAbelianGroup, H1Element, HomologyError};
use crate::poly::gcd;
use crate::torsion::{TorsionDescriptor, TorsionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error("parameters out of range: {0}")]
    Domain(String),
}

/// `τ = (Σ_{s ∈ T*} s)(Σ_{j<g} σ^j t^j) / (1 − t)` with `i(μ) = t^g`, `i(λ) = σ`.
///
/// Its Milnor torsion is `k (t^g − 1)/(t − 1)²`.
pub fn canonical_gst(g: i64, group: &FiniteAbelianGroup, sigma: &[i64]) -> Result<TorsionDescriptor, FamilyError> {
    let boundary = BoundaryData::new(group.clone(), H1Element::new(g, group.zero()), H1Element::new(0, sigma.to_vec()))?;
    let lifts = filled_homology(&boundary).section(group);
    let star_sum = GroupRingElt::from_terms(group, lifts.into_iter().map(|s| (H1Element::new(0, s), 1)));
    let staircase = GroupRingElt::from_terms(group, (0..g).map(|j| (H1Element::new(j, group.scale(j, sigma)), 1)));
    let tau = NovikovElement::rational(&star_sum * &staircase);
    Ok(TorsionDescriptor::new(boundary, tau)?)
}

/// Cyclic `T = Z/(gk)` with `σ = k`.
pub fn canonical_gst_cyclic(g: i64, k: i64) -> Result<TorsionDescriptor, FamilyError> {
    if g < 1 || k < 1 {
        return Err(FamilyError::Domain(format!("g = {g}, k = {k}")));
    }
    let n = g * k;
    let (group, sigma) = if n == 1 { (FiniteAbelianGroup::trivial(), vec![]) } else { (FiniteAbelianGroup::cyclic(n), vec![k % n]) };
    canonical_gst(g, &group, &sigma)
}

/// Twisted torus knot parameters `T(p, q; s, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TtkParams {
    pub p: i64,
    pub q: i64,
    pub s: i64,
    pub r: i64,
}

impl TtkParams {
    pub fn new(p: i64, q: i64, s: i64, r: i64) -> Self {
        TtkParams { p, q, s, r }
    }
}

/// Domain `p ≥ 2, k ≥ 1, r > 0, 0 < s < p` with `q = kp ± 1`.
fn check_kp_domain(x: &TtkParams, k: i64) -> Result<(), FamilyError> {
    let TtkParams { p, q, s, r } = *x;
    if p < 2 || k < 1 || r <= 0 || s <= 0 || s >= p {
        return Err(FamilyError::Domain(format!("need p >= 2, k >= 1, r > 0, 0 < s < p; got p={p}, k={k}, s={s}, r={r}")));
    }
    if (q - k * p).abs() != 1 {
        return Err(FamilyError::Domain(format!("q = {q} is not k p +- 1 for k = {k}, p = {p}")));
    }
    Ok(())
}

/// `K(p, kp ± 1; s, r) ⊂ S³` is an L-space knot iff `s = p − 1`, or
/// `s ∈ {2, p − 2}` and `r = 1`.
pub fn vafaee_s3_predicate(x: &TtkParams, k: i64) -> Result<bool, FamilyError> {
    check_kp_domain(x, k)?;
    let TtkParams { p, s, r, .. } = *x;
    Ok(s == p - 1 || ((s == 2 || s == p - 2) && r == 1))
}

/// `T(p, kp ± 1; s, r) ⊂ S¹ × S²` has generalized-solid-torus complement if
/// `s ∈ {1, p − 1}`, or `s ∈ {2, p − 2}` and `r = 1`.
pub fn gst_extension_predicate(x: &TtkParams, k: i64) -> Result<bool, FamilyError> {
    check_kp_domain(x, k)?;
    let TtkParams { p, s, r, .. } = *x;
    Ok(s == 1 || s == p - 1 || ((s == 2 || s == p - 2) && r == 1))
}

/// Generalized-solid-torus complement if `gcd(p, q) = 1` and `s ≡ ±q (mod p)`.
pub fn ttk_gst_predicate(x: &TtkParams) -> bool {
    let TtkParams { p, q, s, .. } = *x;
    p >= 1 && gcd(p, q) == 1 && ((s - q).rem_euclid(p) == 0 || (s + q).rem_euclid(p) == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub predicate: String,
    /// `None` when the parameters are outside the predicate's domain
    pub value: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub family: String,
    pub params: TtkParams,
    pub verdicts: Vec<Verdict>,
    pub distinguished: bool,
    pub notes: Vec<String>,
}

/// Evaluates every predicate that applies to `x`.
pub fn ttk_record(x: TtkParams, k: Option<i64>) -> FamilyRecord {
    let mut verdicts = Vec::new();
    if let Some(k) = k {
        verdicts.push(Verdict { predicate: "vafaee_s3".into(), value: vafaee_s3_predicate(&x, k).ok() });
        verdicts.push(Verdict { predicate: "gst_extension".into(), value: gst_extension_predicate(&x, k).ok() });
    }
    verdicts.push(Verdict { predicate: "ttk_gst".into(), value: Some(ttk_gst_predicate(&x)) });
    FamilyRecord {
        family: "T(p,q;s,r)".into(),
        params: x,
        verdicts,
        distinguished: false,
        notes: vec!["predicates are sufficient conditions; false is not a negative verdict".into()],
    }
}

/// The two-cusped manifolds `Z_{p,q}`: every filling with `b₁ = 0` is an
/// L-space. `(5, 2)` (with `s = 2`) is the hyperbolic member yielding
/// infinitely many Floer simple manifolds with equal torsion.
pub fn z_family_catalog(p: i64, q: i64) -> Result<FamilyRecord, FamilyError> {
    if p < 1 || gcd(p, q) != 1 {
        return Err(FamilyError::Domain(format!("gcd({p}, {q}) must be 1")));
    }
    let distinguished = (p, q) == (5, 2);
    let mut notes = vec![
        "two torus boundary components".to_string(),
        "every filling Z(alpha, beta) with b1 = 0 is an L-space".to_string(),
        "s is recorded verbatim, reduced mod p only".to_string(),
    ];
    if distinguished {
        notes.push("hyperbolic; its fillings give infinitely many distinct Floer simple manifolds with the same torsion".into());
    }
    Ok(FamilyRecord {
        family: "Z_{p,q}".into(),
        params: TtkParams { p, q, s: q.rem_euclid(p), r: 0 },
        verdicts: vec![Verdict { predicate: "b1_zero_fillings_are_lspaces".into(), value: Some(true) }],
        distinguished,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::LaurentPoly;
    use crate::torsion::{DMode, Verdict as PipelineVerdict};

    #[test]
    fn canonical_examples() {
        let st = canonical_gst(1, &FiniteAbelianGroup::trivial(), &[]).unwrap();
        assert_eq!(st.tau().expand(3).coeffs[0], vec![1, 1, 1, 1]);

        let c = canonical_gst(2, &FiniteAbelianGroup::cyclic(2), &[1]).unwrap();
        assert_eq!(c.milnor_torsion().unwrap().series().head(), &[1]);
        assert_eq!(c.milnor_torsion().unwrap().series().tail(), 2);

        let c = canonical_gst(3, &FiniteAbelianGroup::cyclic(3), &[1]).unwrap();
        assert_eq!(c.delta_bar(), LaurentPoly::from_coeffs(0, vec![1, 1, 1]));

        assert!(matches!(
            canonical_gst(3, &FiniteAbelianGroup::cyclic(4), &[2]),
            Err(FamilyError::Homology(HomologyError::OrderMismatch { .. }))
        ));
    }

    #[test]
    fn canonical_invariants() {
        for g in 1..=4 {
            for k in 1..=3 {
                let c = canonical_gst_cyclic(g, k).unwrap();
                assert_eq!((c.g_y(), c.k_y()), (g, k));
                assert!(c.is_admissible());
                assert!(c.dset(20, DMode::Positive).is_empty());
                assert_eq!(c.delta_bar_degree(), g - 1);
                assert_eq!(c.gst_pipeline(20).unwrap().verdict, PipelineVerdict::GeneralizedSolidTorus);
            }
        }
        let z22 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let c = canonical_gst(2, &z22, &[0, 1]).unwrap();
        assert_eq!(c.k_y(), 2);
        assert!(c.is_admissible());
    }

    #[test]
    fn predicate_examples() {
        let v = |p, s, r| vafaee_s3_predicate(&TtkParams::new(p, p + 1, s, r), 1).unwrap();
        assert!(v(5, 4, 3));
        assert!(v(5, 2, 1));
        assert!(!v(5, 2, 2));
        let e = |p, s, r| gst_extension_predicate(&TtkParams::new(p, p - 1, s, r), 1).unwrap();
        assert!(e(7, 1, 5));
        assert!(e(7, 5, 1));
        assert!(!e(7, 3, 1));
        assert!(ttk_gst_predicate(&TtkParams::new(5, 2, 2, 3)));
        assert!(ttk_gst_predicate(&TtkParams::new(5, 2, 3, 1)));
        assert!(!ttk_gst_predicate(&TtkParams::new(4, 2, 2, 1)));
        assert!(vafaee_s3_predicate(&TtkParams::new(1, 2, 1, 1), 1).is_err());
        assert!(vafaee_s3_predicate(&TtkParams::new(5, 7, 1, 1), 1).is_err());
    }

    #[test]
    fn catalog_examples() {
        assert!(z_family_catalog(5, 2).unwrap().distinguished);
        assert!(!z_family_catalog(2, 1).unwrap().distinguished);
        assert!(z_family_catalog(4, 2).is_err());
    }
}
