//! Deciding whether a union along the boundary is an L-space, with an
//! uncovered slope as certificate when it is not.

use lspace::slopes::{splice_is_lspace, splice_obstruction, GluingMap, Slope, SlopeInterval};

fn main() {
    let s = |p, q| Slope::new(p, q).unwrap();
    let trefoil = SlopeInterval::closed(s(1, 1), s(1, 0));
    let solid = SlopeInterval::AllBut(s(0, 1));
    let maps = [GluingMap::new(0, 1, 1, 0).unwrap(), GluingMap::new(1, 0, 0, -1).unwrap(), GluingMap::new(1, 1, 1, 0).unwrap()];
    for (name, a, b) in [("trefoil ∪ trefoil", trefoil, trefoil), ("solid torus ∪ trefoil", solid, trefoil)] {
        for m in &maps {
            println!(
                "{name} via {:?}: {} {:?}",
                m.matrix(),
                if splice_is_lspace(&a, &b, m) { "L-space" } else { "not an L-space" },
                splice_obstruction(&a, &b, m).map(|x| x.to_string())
            );
        }
    }
}
