// Two ways of cutting two opposite corners off a cube. Both leave the
// origin certifiable, but only the first with positive weights, i.e. by
// the standard Floer cohomology up to rescaling.

use std::error::Error;

use toric_floer::builtins;
use toric_floer::certificate::{certify_fiber, is_same_sign, kernel::kernel_basis};
use toric_floer::floer::{disc_classes, energy_levels};
use toric_floer::linalg::column_matrix;
use toric_floer::polytope::FiberPoint;
use toric_floer::rational::{format_gaussian, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let origin = FiberPoint::origin(3);
    for (name, p) in [
        ("a", builtins::cube_blowup_a(rat(1, 4))?),
        ("b", builtins::cube_blowup_b(rat(1, 4))?),
    ] {
        let cert = certify_fiber(&p, &origin)?;
        println!("variant {name}: {:?}", cert.verdict);
        for level in energy_levels(&disc_classes(&p, &origin)?).levels() {
            let normals: Vec<&[i64]> = level
                .facets
                .iter()
                .map(|&j| &p.facets()[j].normal[..])
                .collect();
            let basis = kernel_basis(&column_matrix(&normals));
            let c: Vec<String> = basis[0].iter().map(|x| x.to_string()).collect();
            println!(
                "  area 2π·{}: kernel spanned by ({}), same sign: {}",
                level.area,
                c.join(", "),
                basis.len() == 1 && is_same_sign(&basis[0])
            );
        }
        let d: Vec<String> = cert.weights.iter().map(format_gaussian).collect();
        println!("  d = ({})", d.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
