//! Torus knot complements from their presentations: Alexander polynomial,
//! verdict, and L-space interval with the meridian as known L-space slope.

use lspace::foxcalc::{descriptor_from_presentation, torus_knot_presentation};
use lspace::slopes::{lspace_interval, Slope};

fn main() {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7)] {
        let pres = torus_knot_presentation(p, q);
        let d = descriptor_from_presentation(&pres).unwrap();
        let interval = lspace_interval(&d, &Slope::MERIDIAN, 4 * p * q).unwrap();
        println!("T({p},{q}): Δ = {}, GST: {}, L-space slopes {interval}", d.tau().numerator(), d.is_generalized_solid_torus());
    }
}
