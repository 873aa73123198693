//! Expanding and normalising elements of the Novikov completion.

use lspace::groupring::{GroupRingElt, NovikovElement};
use lspace::homology::{FiniteAbelianGroup, H1Element};
use lspace::poly::LaurentPoly;

fn main() {
    let z2 = FiniteAbelianGroup::cyclic(2);
    // (t^-2 + s t^-1) / (1 - t)^2
    let num = GroupRingElt::from_terms(&z2, [(H1Element::new(-2, vec![0]), 1), (H1Element::new(-1, vec![1]), 1)]);
    let x = NovikovElement::new(num, 2).unwrap();
    println!("x = {x}");
    let w = x.expand(3);
    for (s, row) in w.coeffs.iter().enumerate() {
        println!("  coset {s}: degrees {}..={}: {:?}", w.lo, w.hi, row);
    }

    let (unit, normal) = x.normalize().unwrap();
    println!("unit {unit}, normalised {normal}");
    assert!(normal.is_normalized());

    // cancellation of (1 - t)
    let triv = FiniteAbelianGroup::trivial();
    let y = NovikovElement::new(GroupRingElt::from_t_poly(&triv, &LaurentPoly::from_coeffs(0, vec![1, -1])), 1).unwrap();
    println!("(1 - t)/(1 - t) = {y}");
}
