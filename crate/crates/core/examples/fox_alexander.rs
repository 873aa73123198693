//! Fox calculus: parse a presentation, differentiate the relators, and take
//! the gcd of the maximal minors of the abelianised Jacobian.

use lspace::foxcalc::{alexander_data, alexander_matrix, fox_derivative, parse_presentation};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "<a, b | a^2 b^-3>".into());
    let p = match parse_presentation(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for (i, r) in p.relators.iter().enumerate() {
        for (j, x) in p.generators.iter().enumerate() {
            println!("∂r{i}/∂{x} = {}", fox_derivative(r, j).format(&p.generators));
        }
    }
    let data = alexander_data(&p).unwrap();
    println!("φ = {:?}", data.phi);
    for row in alexander_matrix(&p, &data.phi) {
        println!("  {}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" | "));
    }
    println!("minors: {}", data.minors.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", "));
    println!("Δ = {}  (columns agree: {})", data.polynomial, data.columns_agree);
}
