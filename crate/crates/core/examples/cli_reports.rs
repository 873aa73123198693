//! Drives the command-line entry point in-process and checks that the JSON
//! reports parse back.

use lspace::cli::{run, DsetReport, GstReport};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let out = run(["lspace", "dset", &format!("{dir}/trefoil.toml"), "--json"]);
    let r: DsetReport = serde_json::from_str(&out.stdout).unwrap();
    println!("dset trefoil: exit {} verdict {} elements {:?}", out.code, r.verdict, r.elements);

    let out = run(["lspace", "gst", &format!("{dir}/gst_g3_k2.toml"), "--json"]);
    let r: GstReport = serde_json::from_str(&out.stdout).unwrap();
    println!("gst g=3 k=2: {:?}", r.verdict);

    let out = run(["lspace", "dset", &format!("{dir}/malformed.toml")]);
    print!("malformed: exit {} {}", out.code, out.stderr);
}
