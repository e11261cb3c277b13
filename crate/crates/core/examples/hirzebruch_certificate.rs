// The one-point blow-up of CP^2: the monotone fiber is displaceable-looking
// for the standard Floer cohomology, but a B-field with periods (2,1,1,1)
// makes it non-vanishing.

use std::error::Error;

use toric_floer::builtins;
use toric_floer::certificate::certify_fiber;
use toric_floer::floer::{
    disc_classes, energy_levels, floer_verdict, m12, BFieldWeights, FloerVerdict, LocalSystem,
};
use toric_floer::polytope::monotone_fiber;
use toric_floer::rational::{format_gaussian, GaussianRational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = builtins::hirzebruch1();
    let (fiber, area) = monotone_fiber(&p).ok_or("no monotone fiber")?;
    println!("monotone fiber {fiber}, every disc has area 2π·{area}");

    let discs = disc_classes(&p, &fiber)?;
    assert_eq!(energy_levels(&discs).len(), 1);

    let trivial = LocalSystem::<GaussianRational>::trivial(2);
    let standard = m12(&discs, &trivial, &BFieldWeights::trivial(p.num_facets()))?;
    for (i, m) in standard.iter().enumerate() {
        println!("B = 0: m12[{}] = {m}", i + 1);
    }
    assert_eq!(floer_verdict(&standard), FloerVerdict::Vanishing);

    let cert = certify_fiber(&p, &fiber)?;
    let weights: Vec<String> = cert.weights.iter().map(format_gaussian).collect();
    println!("{:?}, d = ({})", cert.verdict, weights.join(", "));

    let twisted = m12(&discs, &trivial, &BFieldWeights::new(cert.weights.clone())?)?;
    assert!(twisted.iter().all(|m| m.is_zero()));
    println!(
        "with the certificate weights: {:?}",
        floer_verdict(&twisted)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
