use proptest::prelude::*;

use lspace::cli::{dset_report, DescriptorFile, DsetReport};
use lspace::families::canonical_gst_cyclic;
use lspace::foxcalc::{alexander_polynomial, fox_derivative, torus_knot_presentation, FreeDerivative, Presentation, Word};
use lspace::groupring::{GroupRingElt, NovikovElement, Unit};
use lspace::homology::{smith_normal_form, FiniteAbelianGroup, H1Element, IntMatrix};
use lspace::poly::{LaurentPoly, StableSeries};
use lspace::slopes::{circular_compare, GluingMap, Orientation, Slope};
use lspace::torsion::{elementary_shift, shift_decomposition, tau_bar_zero, DMode};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..3, prop::collection::vec(-4i64..=4, 0..6)).prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, c))
}

fn word(ngens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens, any::<bool>()), 0..8).prop_map(|ls| {
        ls.into_iter().fold(Word::identity(), |w, (g, inv)| w.mul(&Word::letter(g, if inv { -1 } else { 1 })))
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn laurent_gcd_divides(a in laurent(), b in laurent(), c in laurent()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let x = &a * &c;
        let y = &b * &c;
        let g = x.gcd(&y);
        prop_assert!(x.div_exact(&g).is_some());
        prop_assert!(y.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.normalized()).is_some() || g.div_exact(&c).is_some());
    }

    #[test]
    fn smith_form_is_equivalent_and_divisible(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..4)) {
        let m = IntMatrix::from_rows(&rows, 3);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.det().abs(), 1);
        prop_assert_eq!(s.v.det().abs(), 1);
        let diag: Vec<i64> = s.diagonal().into_iter().filter(|&x| x != 0).collect();
        prop_assert!(diag.iter().all(|&x| x > 0));
        prop_assert!(diag.windows(2).all(|w| w[1] % w[0] == 0));
    }

    #[test]
    fn fox_fundamental_identity(w in word(3)) {
        // Σ_x (∂w/∂x)(x − 1) = w − 1
        let one = FreeDerivative::word(Word::identity());
        let lhs = (0..3).fold(FreeDerivative::zero(), |acc, x| {
            let x_minus_1 = FreeDerivative::word(Word::letter(x, 1)).sub(&one);
            acc.add(&fox_derivative(&w, x).mul(&x_minus_1))
        });
        prop_assert_eq!(lhs, FreeDerivative::word(w.clone()).sub(&one));
    }

    #[test]
    fn fox_product_rule(u in word(2), v in word(2), x in 0usize..2) {
        let lhs = fox_derivative(&u.mul(&v), x);
        let rhs = fox_derivative(&u, x).add(&FreeDerivative::word(u.clone()).mul(&fox_derivative(&v, x)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alexander_tietze_invariance(case in 0usize..4, c in word(2), move_kind in 0usize..3) {
        let (p, q) = [(2, 3), (2, 5), (3, 4), (3, 5)][case];
        let pres = torus_knot_presentation(p, q);
        let delta = alexander_polynomial(&pres).unwrap();
        let r = pres.relators[0].clone();
        let relators = match move_kind {
            0 => vec![c.mul(&r).mul(&c.inverse())],
            1 => vec![r.inverse()],
            // a ↦ a b, an automorphism of the free group
            _ => vec![r.substitute(&[Word::letter(0, 1).mul(&Word::letter(1, 1)), Word::letter(1, 1)])],
        };
        let moved = Presentation::new(pres.generators.clone(), relators);
        let d2 = alexander_polynomial(&moved).unwrap();
        prop_assert!(d2.is_associate(&delta) || d2.reflect().is_associate(&delta), "{} vs {}", d2, delta);
    }

    #[test]
    fn dset_and_delta_bar_unit_invariant(g in 1i64..4, k in 1i64..3, shift in -3i64..4, tors in 0i64..12, sign in any::<bool>()) {
        let d = canonical_gst_cyclic(g, k).unwrap();
        let grp = d.boundary().group().clone();
        let h = H1Element::new(shift, grp.reduce(&vec![tors; grp.factors().len()]));
        let unit = Unit { sign: if sign { 1 } else { -1 }, element: h };
        let moved = d.with_tau(d.tau().mul_unit(&unit)).unwrap();
        prop_assert!(moved.tau().is_normalized());
        for mode in [DMode::Positive, DMode::NonNegative] {
            prop_assert_eq!(moved.dset(12, mode).is_empty(), d.dset(12, mode).is_empty());
        }
        prop_assert_eq!(moved.delta_bar_degree(), d.delta_bar_degree());
    }

    #[test]
    fn normalize_is_idempotent(parts in prop::collection::vec(laurent(), 2)) {
        let grp = FiniteAbelianGroup::cyclic(2);
        let num = GroupRingElt::from_parts(&grp, parts);
        prop_assume!(!num.is_zero());
        let x = NovikovElement::rational(num);
        let (_, n1) = x.normalize().unwrap();
        let (u2, n2) = n1.normalize().unwrap();
        prop_assert_eq!(&n1, &n2);
        prop_assert_eq!(u2, Unit::identity(&grp));
    }

    #[test]
    fn shifts_are_recovered(g in 1i64..5, k in 1i64..4, moves in prop::collection::vec((0i64..5, 0i64..8, 1i64..3), 0..4)) {
        let base = tau_bar_zero(g, k);
        let mut f = base.clone();
        for (a, i, m) in moves {
            let a = a.min(g);
            f = f.add_poly(&elementary_shift(g, k, a, i).scale(m));
        }
        let dec = shift_decomposition(&f, &base, g, k).expect("built from shifts");
        let diff = (0..=f.stable_from().max(base.stable_from()) + g)
            .map(|i| (i, f.coefficient(i) - base.coefficient(i)));
        prop_assert_eq!(dec.total(), LaurentPoly::from_terms(diff));
    }

    #[test]
    fn random_series_shift_test_is_consistent(head in prop::collection::vec(-3i64..=3, 0..8), g in 1i64..4, k in 1i64..3) {
        let f = StableSeries::new(head, g * k);
        let base = tau_bar_zero(g, k);
        // f − base is a polynomial whose residues mod t^g − 1 all vanish mod g·k
        let top = f.stable_from().max(base.stable_from()) + 2 * g;
        let tail_ok = (top - g..top).all(|i| f.coefficient(i) == base.coefficient(i));
        let mut residues = vec![0i64; g as usize];
        for i in 0..top {
            residues[(i % g) as usize] += f.coefficient(i) - base.coefficient(i);
        }
        let coeff_ok = (0..top).all(|i| (f.coefficient(i) - base.coefficient(i)) % k == 0);
        let expected = tail_ok && coeff_ok && residues.iter().all(|r| r % (g * k) == 0);
        let dec = shift_decomposition(&f, &base, g, k);
        prop_assert_eq!(dec.is_some(), expected);
        if let Some(dec) = dec {
            prop_assert!(dec.terms.iter().all(|t| (0..=g).contains(&t.a)));
        }
    }

    #[test]
    fn gluing_maps_reverse_orientation(a in -5i64..=5, b in -5i64..=5, p in 1i64..6, q in -6i64..6) {
        prop_assume!(a * a + 1 != 0);
        // [[a, a²+1], [1, a]] has det −1; also try its transpose
        for m in [GluingMap::new(a, a * a + 1, 1, a).unwrap(), GluingMap::new(a, 1, a * a + 1, a).unwrap(), GluingMap::new(0, 1, 1, b).unwrap()] {
            let s = match Slope::new(p, q) { Ok(s) => s, Err(_) => return Ok(()) };
            prop_assert_eq!(m.inverse().apply(&m.apply(&s)), s);
            let x = Slope::MERIDIAN;
            let y = Slope::LONGITUDE;
            if s != x && s != y {
                let before = circular_compare(&x, &y, &s).unwrap();
                let after = circular_compare(&m.apply(&x), &m.apply(&y), &m.apply(&s)).unwrap();
                prop_assert_ne!(before == Orientation::Positive, after == Orientation::Positive);
            }
        }
    }

    #[test]
    fn descriptor_text_round_trips(g in 1i64..4, k in 1i64..4) {
        let d = canonical_gst_cyclic(g, k).unwrap();
        let f = DescriptorFile::from_descriptor("x", &d);
        let text = f.to_text();
        let back = DescriptorFile::parse(&text).unwrap();
        prop_assert_eq!(back.canonicalize().unwrap().to_text(), text);
        let rebuilt = back.to_descriptor().unwrap();
        prop_assert_eq!(rebuilt.tau(), d.tau());
    }

    #[test]
    fn dset_report_json_round_trips(g in 1i64..4, k in 1i64..3, hi in 0i64..10) {
        let d = canonical_gst_cyclic(g, k).unwrap();
        let r = dset_report("x", &d, DMode::NonNegative, hi);
        let back: DsetReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}
