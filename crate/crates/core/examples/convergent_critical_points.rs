// Critical points of the Hirzebruch superpotential and what they say
// (and do not say) about Floer cohomology after setting T^(2π) = e^-1.

use std::error::Error;

use toric_floer::builtins;
use toric_floer::floer::{BFieldWeights, LocalSystem};
use toric_floer::mirror::{
    convergent_verdict_at, critical_equations, solve_critical, superpotential, ConvergentVerdict,
    SolveOptions,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = builtins::hirzebruch1();
    let w = superpotential(&p);
    println!("W = {w}");
    for (i, e) in critical_equations(&w).iter().enumerate() {
        println!("E{} = {e}", i + 1);
    }

    let solve = solve_critical(&w, &SolveOptions::default())?;
    for pt in &solve.points {
        let logz = pt.log_z();
        println!(
            "log z = {:.4}{:+.4}i  θ = ({:.4}, {:.4})  residual {:.1e}",
            logz[0].re, logz[0].im, pt.fiber[0], pt.fiber[1], pt.residual
        );
        // The evaluated m12 vanishes at every interior critical point...
        let report = convergent_verdict_at(
            &p,
            &pt.fiber,
            &LocalSystem::from_angles(&pt.holonomy_angles),
            &BFieldWeights::trivial(p.num_facets()),
            1e-8,
        )?;
        assert_eq!(report.verdict, ConvergentVerdict::NonVanishingConvergent);
    }
    // ...but none of them sits over the monotone fiber, where |z| = 1.
    assert!(solve
        .points
        .iter()
        .all(|pt| pt.z.iter().all(|z| (z.norm() - 1.0).abs() > 1e-6)));
    println!("{}", toric_floer::mirror::CONVERGENT_LABEL);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
