// CP^2 blown up at three points: scanning a rational grid finds exactly
// three certifiable fibers, one near each exceptional divisor.

use std::error::Error;

use toric_floer::builtins;
use toric_floer::certificate::{certify_fiber, grid_points, scan_fibers};
use toric_floer::floer::{disc_classes, energy_levels};
use toric_floer::polytope::FiberPoint;
use toric_floer::rational::{format_gaussian, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = builtins::blowup3(rat(1, 8))?;
    for v in p.vertices() {
        println!("vertex {}", FiberPoint(v.clone()));
    }

    let corner = FiberPoint::parse("1/8,1/8")?;
    for level in energy_levels(&disc_classes(&p, &corner)?).levels() {
        println!(
            "at {corner}: area 2π·{} on facets {:?}",
            level.area, level.facets
        );
    }

    let certified = scan_fibers(&p, 8)?;
    println!(
        "{} of {} grid fibers certified",
        certified.len(),
        grid_points(&p, 8).len()
    );
    for cert in &certified {
        let d: Vec<String> = cert.weights.iter().map(format_gaussian).collect();
        println!("  {}  d = ({})", cert.fiber, d.join(", "));
    }
    assert_eq!(certified.len(), 3);

    let generic = certify_fiber(&p, &FiberPoint::parse("1/10,1/5")?)?;
    println!(
        "generic fiber (1/10, 1/5): {:?}, {} failing levels",
        generic.verdict,
        generic.failing_levels.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
