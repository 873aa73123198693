//! Smith normal form, H_1 of a presentation matrix, and the filled homology
//! of a boundary torus.

use lspace::homology::{filled_homology, smith_normal_form, AbelianQuotient, BoundaryData, FiniteAbelianGroup, H1Element, IntMatrix};

fn main() {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    let snf = smith_normal_form(&m);
    println!("diag = {:?}", snf.diagonal());
    // U M V = D
    assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);

    // Z^3 / <(2, 0, 0), (0, 3, 3)> = Z ⊕ Z/3 ⊕ Z/2 → Z ⊕ Z/6
    let q = AbelianQuotient::from_relations(3, &[vec![2, 0, 0], vec![0, 3, 3]]);
    println!("rank {} torsion {}", q.rank(), q.torsion());

    let t = FiniteAbelianGroup::cyclic(6);
    let b = BoundaryData::new(t.clone(), H1Element::new(3, vec![0]), H1Element::new(0, vec![2])).unwrap();
    let f = filled_homology(&b);
    println!("g_Y = {}, |T| = {}, k_Y = {}, T* = {}", b.g_y(), t.order(), f.k_y(), f.star_group());
    for s in f.section(&t) {
        println!("  lift {:?}", s);
    }
}
