// Loading a polytope from JSON: a trapezoid (Hirzebruch surface F_1 in
// another chart), validated, certified at its monotone fiber, and the
// certificate re-verified after a JSON round trip.

use std::error::Error;

use toric_floer::certificate::{certify_monotone, Certificate};
use toric_floer::polytope::{parse_polytope, validate};

const TRAPEZOID: &str = r#"{
  "name": "trapezoid",
  "dim": 2,
  "fano": true,
  "facets": [
    { "normal": [1, 0], "offset": "-1" },
    { "normal": [0, 1], "offset": -1 },
    { "normal": [0, -1], "offset": "-1" },
    { "normal": [-1, -1], "offset": "-1" }
  ]
}"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_polytope(TRAPEZOID)?;
    let report = validate(&p);
    println!(
        "{}: smooth {:?}, reflexive {}",
        p.name(),
        report.smooth,
        report.reflexive
    );
    for w in &report.warnings {
        println!("warning: {w}");
    }

    let cert = certify_monotone(&p)?.ok_or("no monotone fiber")?;
    println!("{:?} at {}", cert.verdict, cert.fiber);

    let text = serde_json::to_string_pretty(&cert)?;
    let reread: Certificate = serde_json::from_str(&text)?;
    println!("re-verified: {:?}", reread.verify(&p)?);
    assert_eq!(reread, cert);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
