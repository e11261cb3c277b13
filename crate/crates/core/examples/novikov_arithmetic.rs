// Finite Novikov sums with exact exponents, in both coefficient modes.

use std::error::Error;

use num_complex::Complex64;
use toric_floer::novikov::{Coefficient, NovikovElement, Valuation};
use toric_floer::rational::{gaussian, int, rat, GaussianRational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = NovikovElement::from_terms([
        (rat(1, 2), gaussian(int(1), int(1))),
        (int(1), gaussian(int(-2), int(0))),
    ]);
    let b = NovikovElement::monomial(gaussian(int(0), int(1)), rat(1, 3));
    println!("a = {a}");
    println!("b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a · b = {}", &a * &b);
    assert_eq!((&a * &b).valuation(), Valuation::Finite(rat(5, 6)));

    // Cancellation is exact: nothing survives.
    let copy = a.clone();
    let zero = &a - &copy;
    assert!(zero.is_zero());
    println!("a - a = {zero}, valuation {:?}", zero.valuation());

    let f: NovikovElement<Complex64> = a.map_coefficients(GaussianRational::to_complex);
    println!("a at T^(2π) = e^-1: {:.6}", f.convergent_eval_default());
    println!("{}", serde_json::to_string(&a)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
