//! Writes canonical descriptor files for the canonical generalized solid tori.
//!
//! `cargo run --example descriptor_file -- 3 1` prints the file for g = 3, k = 1.

use lspace::cli::DescriptorFile;
use lspace::families::canonical_gst_cyclic;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (g, k) = match args[..] {
        [g, k] => (g, k),
        _ => (2, 1),
    };
    let d = canonical_gst_cyclic(g, k).expect("valid parameters");
    let file = DescriptorFile::from_descriptor(&format!("canonical gst g={g} k={k}"), &d);
    print!("{}", file.to_text());

    // the file reads back to the same descriptor
    let back = DescriptorFile::parse(&file.to_text()).unwrap().to_descriptor().unwrap();
    assert_eq!(back.tau(), d.tau());
}
