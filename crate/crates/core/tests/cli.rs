use std::process::Command;

use toric_floer::builtins;
use toric_floer::certificate::{Certificate, CertificateVerdict};

fn toric_floer(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_toric-floer"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(toric_floer(&["--version"]).0, 0);
    assert_eq!(toric_floer(&["frobnicate"]).0, 1);
    assert_eq!(
        toric_floer(&["areas", "--builtin", "hirzebruch1", "--fiber", "1/2"]).0,
        1
    );
    assert_eq!(
        toric_floer(&["areas", "--polytope", "/nonexistent.json", "--fiber", "0,0"]).0,
        1
    );
    assert_eq!(
        toric_floer(&["areas", "--builtin", "blowup3", "--fiber", "0,0"]).0,
        1
    );
    assert_eq!(
        toric_floer(&[
            "certify",
            "--builtin",
            "blowup3",
            "--param",
            "1/8",
            "--fiber",
            "3/4,3/4"
        ])
        .0,
        2
    );
    assert_eq!(
        toric_floer(&[
            "verdict",
            "--builtin",
            "hirzebruch1",
            "--mode",
            "bfield",
            "--weights",
            "0,1,1,1"
        ])
        .0,
        2
    );
    assert_eq!(
        toric_floer(&["scan", "--builtin", "hirzebruch1", "--grid", "65"]).0,
        1
    );
}

#[test]
fn blowup3_areas() {
    let (code, out, _) = toric_floer(&[
        "areas",
        "--builtin",
        "blowup3",
        "--param",
        "1/8",
        "--fiber",
        "1/8,1/8",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("area 2π·1/8").count(), 3);
    assert_eq!(out.matches("area 2π·3/4").count(), 3);
}

#[test]
fn certificate_json_round_trips() {
    let dir = std::env::temp_dir().join(format!("toric-floer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (name, param, fiber) in [
        ("hirzebruch1", None, "0,0"),
        ("blowup3", Some("1/8"), "1/8,3/4"),
        ("blowup3", Some("1/8"), "1/10,1/5"),
        ("cube_blowup_b", Some("1/4"), "0,0,0"),
    ] {
        let mut args = vec!["certify", "--builtin", name, "--fiber", fiber, "--json"];
        if let Some(p) = param {
            args.extend(["--param", p]);
        }
        let (code, out, _) = toric_floer(&args);
        assert_eq!(code, 0);
        let cert: Certificate = serde_json::from_str(&out).unwrap();
        let polytope = builtins::lookup(name, param).unwrap();
        assert_eq!(cert.verify(&polytope).unwrap(), cert.verdict);

        let path = dir.join(format!("{name}-{}.json", fiber.replace(['/', ','], "_")));
        std::fs::write(&path, &out).unwrap();
        let mut verify = vec![
            "certify",
            "--builtin",
            name,
            "--verify",
            path.to_str().unwrap(),
        ];
        if let Some(p) = param {
            verify.extend(["--param", p]);
        }
        assert_eq!(toric_floer(&verify).0, 0, "{name} {fiber}");
    }

    let (_, out, _) = toric_floer(&[
        "certify",
        "--builtin",
        "hirzebruch1",
        "--fiber",
        "0,0",
        "--json",
    ]);
    let mut cert: Certificate = serde_json::from_str(&out).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Certified);
    cert.levels[0].coefficients[0] = cert.levels[0].coefficients[1].clone();
    let path = dir.join("tampered.json");
    std::fs::write(&path, serde_json::to_string(&cert).unwrap()).unwrap();
    assert_eq!(
        toric_floer(&[
            "certify",
            "--builtin",
            "hirzebruch1",
            "--verify",
            path.to_str().unwrap()
        ])
        .0,
        2
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_output_is_deterministic() {
    let runs: [&[&str]; 3] = [
        &["critical", "--builtin", "hirzebruch1", "--json"],
        &[
            "scan",
            "--builtin",
            "blowup3",
            "--param",
            "1/8",
            "--grid",
            "16",
            "--json",
        ],
        &[
            "certify",
            "--builtin",
            "cube_blowup_a",
            "--param",
            "1/4",
            "--fiber",
            "0,0,0",
            "--json",
        ],
    ];
    for args in runs {
        let (a, first, _) = toric_floer(args);
        let (b, second, _) = toric_floer(args);
        assert_eq!((a, b), (0, 0));
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: &str| {
        let output = Command::new(env!("CARGO_BIN_EXE_toric-floer"))
            .args(["critical", "--builtin", "cp2", "--json"])
            .env("TORIC_FLOER_SEED", seed)
            .output()
            .unwrap();
        serde_json::from_slice::<serde_json::Value>(&output.stdout).unwrap()
    };
    let value = run("42");
    assert_eq!(value["seed"], 42);
    assert_eq!(value["solve"]["points"].as_array().unwrap().len(), 3);
    let bad = Command::new(env!("CARGO_BIN_EXE_toric-floer"))
        .args(["critical", "--builtin", "cp2"])
        .env("TORIC_FLOER_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn every_builtin_validates() {
    let (code, out, _) = toric_floer(&["builtins", "--json"]);
    assert_eq!(code, 0);
    let catalog: serde_json::Value = serde_json::from_str(&out).unwrap();
    for entry in catalog.as_array().unwrap() {
        let name = entry["name"].as_str().unwrap();
        let args: Vec<&str> = match name {
            "cpN" => vec!["validate", "--builtin", "cp3"],
            "blowup3" => vec!["validate", "--builtin", name, "--param", "1/8"],
            "cube_blowup_a" | "cube_blowup_b" => {
                vec!["validate", "--builtin", name, "--param", "1/4"]
            }
            _ => vec!["validate", "--builtin", name],
        };
        let (code, out, err) = toric_floer(&args);
        assert_eq!(code, 0, "{name}: {err}");
        assert!(out.contains("valid polytope"));
    }
}

#[test]
fn modes() {
    let base = ["verdict", "--builtin", "hirzebruch1", "--fiber", "0,0"];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        toric_floer(&args)
    };
    assert_eq!(run(&[]).1.trim(), "Vanishing");
    assert_eq!(run(&["--mode", "bfield"]).1.trim(), "NonVanishing");
    assert_eq!(
        run(&["--mode", "bfield", "--weights", "2,1,1,1"]).1.trim(),
        "NonVanishing"
    );
    let convergent = run(&["--mode", "convergent"]).1;
    assert!(convergent.contains("VanishingConvergent"));
    assert!(convergent.contains("not a displaceability certificate"));
    assert_eq!(run(&["--weights", "2,1,1,1"]).0, 1);
}
