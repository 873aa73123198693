//! Twisted torus knot predicates and the Z_{p,q} catalogue.

use lspace::cli::infer_k;
use lspace::families::{ttk_record, z_family_catalog, TtkParams};

fn main() {
    for (p, q, s, r) in [(5, 2, 2, 3), (5, 6, 4, 3), (5, 6, 2, 1), (5, 6, 2, 2), (7, 6, 1, 5), (7, 6, 3, 1)] {
        let rec = ttk_record(TtkParams::new(p, q, s, r), infer_k(p, q));
        let v: Vec<String> = rec.verdicts.iter().map(|v| format!("{}={:?}", v.predicate, v.value)).collect();
        println!("T({p},{q};{s},{r}): {}", v.join(" "));
    }
    for (p, q) in [(5, 2), (3, 1), (7, 3)] {
        let z = z_family_catalog(p, q).unwrap();
        println!("Z_{{{p},{q}}} distinguished={} {:?}", z.distinguished, z.notes);
    }
}
