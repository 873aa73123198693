//! D-sets of a few descriptors: empty for the solid torus, a single element
//! for the trefoil, an infinite periodic set for a torsion that never
//! settles into the solid-torus pattern.

use lspace::cli::DescriptorFile;
use lspace::torsion::DMode;

fn show(path: &str) {
    let text = std::fs::read_to_string(path).unwrap();
    let file = DescriptorFile::parse(&text).unwrap();
    let d = file.to_descriptor().unwrap();
    for mode in [DMode::Positive, DMode::NonNegative] {
        let ds = d.dset(12, mode);
        println!(
            "{:>20} {:?}: empty={} finite={} elements={:?}",
            file.name,
            mode,
            ds.is_empty(),
            ds.is_finite(),
            ds.elements.iter().map(|h| (h.free, h.tors.clone())).collect::<Vec<_>>()
        );
    }
}

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/");
    for f in ["solid_torus.toml", "trefoil.toml", "gst_g2_k1.toml", "gst_g3_k2.toml"] {
        show(&format!("{dir}{f}"));
    }
}
