//! The generalized-solid-torus pipeline: D-set, Δ̄, staircase, Milnor
//! torsion, congruence constant and the elementary-shift certificate.

use lspace::families::{canonical_gst, canonical_gst_cyclic};
use lspace::homology::FiniteAbelianGroup;
use lspace::torsion::Certificate;

fn main() {
    let z22 = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
    let cases = vec![
        ("g=1 k=1", canonical_gst_cyclic(1, 1).unwrap()),
        ("g=3 k=1", canonical_gst_cyclic(3, 1).unwrap()),
        ("g=2 k=3", canonical_gst_cyclic(2, 3).unwrap()),
        ("g=2 on Z/2+Z/2", canonical_gst(2, &z22, &[0, 1]).unwrap()),
    ];
    for (name, d) in cases {
        let r = d.gst_pipeline(24).unwrap();
        println!("{name}: {:?}, Δ̄ = {}, c = {:?}", r.verdict, r.delta_bar, r.congruence_constant);
        if let Some(Ok(m)) = &r.milnor {
            println!("  Milnor torsion head {:?} tail {}", m.head(), m.tail());
        }
        if let Certificate::Shifts(s) = &r.certificate {
            println!("  {} shift terms to τ̄₀", s.terms.len());
        }
    }
}
