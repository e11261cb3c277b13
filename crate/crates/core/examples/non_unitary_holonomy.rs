// Instead of a B-field, twist by a flat but non-unitary line bundle: at the
// Hirzebruch monotone fiber the holonomy x = (z, z) with z^4 + z^3 = 1
// kills m12 with all weights equal to one.

use std::error::Error;

use num_complex::Complex64;
use toric_floer::builtins;
use toric_floer::floer::{
    disc_classes, floer_verdict, m12, BFieldWeights, FloerVerdict, LocalSystem,
};
use toric_floer::polytope::FiberPoint;

/// Positive real root of z^4 + z^3 - 1 by bisection on [0, 1].
fn quartic_root() -> f64 {
    let f = |z: f64| z.powi(4) + z.powi(3) - 1.0;
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = builtins::hirzebruch1();
    let discs = disc_classes(&p, &FiberPoint::origin(2))?;
    let z = Complex64::new(quartic_root(), 0.0);
    println!("x = ({z:.6}, {z:.6}), |x| != 1");

    let local = LocalSystem::non_unitary(vec![z, z])?;
    let components = m12(&discs, &local, &BFieldWeights::trivial(p.num_facets()))?;
    for (i, m) in components.iter().enumerate() {
        println!("m12[{}] max coefficient {:.1e}", i + 1, m.max_magnitude());
    }
    assert_eq!(floer_verdict(&components), FloerVerdict::NonVanishing);

    // A unitary local system cannot do this.
    let unitary = LocalSystem::from_angles(&[1.0, 1.0]);
    let components = m12(&discs, &unitary, &BFieldWeights::trivial(p.num_facets()))?;
    println!("unitary x = (e^i, e^i): {:?}", floer_verdict(&components));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
