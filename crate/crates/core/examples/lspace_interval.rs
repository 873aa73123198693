//! L-space filling intervals from D-sets, and how they move under the
//! orientation-reversing gluing maps.

use lspace::cli::DescriptorFile;
use lspace::slopes::{lspace_interval, GluingMap, Slope};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/trefoil.toml");
    let d = DescriptorFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap().to_descriptor().unwrap();
    let known: Slope = "1/0".parse().unwrap();
    let i = lspace_interval(&d, &known, 12).unwrap();
    println!("trefoil, known 1/0: {i}");
    for s in Slope::up_to_height(3) {
        println!("  {s:>5} {}", if i.contains(&s) { "L-space" } else { "-" });
    }
    let flip = GluingMap::new(0, 1, 1, 0).unwrap();
    println!("under (p, q) -> (q, p): {}", flip.apply_interval(&i));
}
