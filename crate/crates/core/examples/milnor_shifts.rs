//! F-map, elementary shifts, congruence constants and the two moves on
//! Milnor torsions.

use lspace::poly::StableSeries;
use lspace::torsion::{congruence_constant, elementary_shift, f_map, f_map_poly, residue_move, shift_decomposition, tau_bar_zero, unit_move};

fn main() {
    let (g, k) = (3, 2);
    let e = elementary_shift(g, k, 1, 2);
    println!("elementary shift a=1 i=2: {e}");
    println!("F = {:?}", f_map_poly(&e, g));

    let base = tau_bar_zero(g, k);
    println!("τ̄₀ head {:?} tail {}, c = {:?}", base.head(), base.tail(), congruence_constant(&base, g, k));

    let moved = unit_move(&base, 1);
    println!("t·τ̄₀: c = {:?}", congruence_constant(&moved, g, k));
    let r = residue_move(&base, 1, g);
    println!("residue move i=1: head {:?}, c = {:?}", r.head(), congruence_constant(&r, g, k));

    let f = StableSeries::new(vec![2, 4, 6, 6], 6);
    println!("F(f) = {:?}", f_map(&f, g));
    match shift_decomposition(&f, &base, g, k) {
        Some(dec) => println!("f - τ̄₀ = {} (terms {})", dec.total(), dec.terms.len()),
        None => println!("f is not shift-equivalent to τ̄₀"),
    }
}
