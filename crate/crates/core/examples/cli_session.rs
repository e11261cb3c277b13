// Driving the command-line front end in-process.

use std::error::Error;

use toric_floer::cli;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let sessions: [&[&str]; 4] = [
        &["monotone", "--builtin", "hirzebruch1"],
        &[
            "levels",
            "--builtin",
            "blowup3",
            "--param",
            "1/8",
            "--fiber",
            "1/8,3/4",
        ],
        &["verdict", "--builtin", "cp2", "--holonomy", "1/3,1/3"],
        &["areas", "--builtin", "hirzebruch1", "--fiber", "2,2"],
    ];
    for args in sessions {
        println!("$ toric-floer {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(
            std::iter::once("toric-floer").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        print!("{}{}", String::from_utf8(out)?, String::from_utf8(err)?);
        println!("[exit {code}]");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
