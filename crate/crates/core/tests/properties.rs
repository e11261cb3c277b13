mod common;

use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_floer::builtins;
use toric_floer::certificate::{
    certify_fiber, certify_monotone,
    kernel::{fully_supported_kernel_vector, kernel_basis},
};
use toric_floer::floer::{
    disc_classes, floer_verdict, m12, BFieldWeights, FloerVerdict, LocalSystem,
};
use toric_floer::linalg::row_matrix;
use toric_floer::mirror::{critical_equations, solve_critical, superpotential, SolveOptions};
use toric_floer::novikov::{Coefficient, NovikovElement, Valuation};
use toric_floer::polytope::{is_reflexive, monotone_fiber, Facet, FiberPoint, Polytope};
use toric_floer::rational::{gaussian, int, rat, GaussianRational, Rational};

fn arb_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (-max_num..=max_num, 1..=max_den).prop_map(|(n, d)| rat(n, d))
}

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (arb_rational(6, 4), arb_rational(6, 4)).prop_map(|(re, im)| gaussian(re, im))
}

fn arb_nonzero_gaussian() -> impl Strategy<Value = GaussianRational> {
    arb_gaussian().prop_filter("nonzero", |z| !z.is_zero())
}

fn arb_novikov() -> impl Strategy<Value = NovikovElement<GaussianRational>> {
    prop::collection::vec(
        (
            (0i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d)),
            arb_gaussian(),
        ),
        0..5,
    )
    .prop_map(NovikovElement::from_terms)
}

fn to_float(a: &NovikovElement<GaussianRational>) -> NovikovElement<Complex64> {
    a.map_coefficients(GaussianRational::to_complex)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn novikov_ring_laws(a in arb_novikov(), b in arb_novikov(), c in arb_novikov()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &NovikovElement::zero(), a.clone());
        prop_assert_eq!(&a * &NovikovElement::monomial(GaussianRational::one(), int(0)), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn valuation_is_additive(a in arb_novikov(), b in arb_novikov()) {
        let expected = match (a.valuation(), b.valuation()) {
            (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
            _ => Valuation::Infinity,
        };
        prop_assert_eq!((&a * &b).valuation(), expected);
        let sum = (&a + &b).valuation();
        prop_assert!(sum >= a.valuation().min(b.valuation()));
    }

    #[test]
    fn convergent_eval_is_a_homomorphism(a in arb_novikov(), b in arb_novikov()) {
        let (fa, fb) = (to_float(&a), to_float(&b));
        let sum = to_float(&(&a + &b)).convergent_eval_default();
        let prod = to_float(&(&a * &b)).convergent_eval_default();
        let (ea, eb) = (fa.convergent_eval_default(), fb.convergent_eval_default());
        prop_assert!((sum - (ea + eb)).norm() < 1e-12);
        prop_assert!((prod - ea * eb).norm() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rescaled_normals_give_the_same_polytope(k in 2i64..6, a in 1i64..4, b in 1i64..4, c in 1i64..4) {
        let facets = |scale: i64| vec![
            Facet::new(vec![scale, 0], int(-a * scale)),
            Facet::new(vec![0, scale], int(-b * scale)),
            Facet::new(vec![-scale, -scale], int(-c * scale)),
        ];
        let plain = Polytope::new("t", 2, facets(1), false).unwrap();
        let scaled = Polytope::new("t", 2, facets(k), false).unwrap();
        prop_assert_eq!(plain.facets(), scaled.facets());
        prop_assert_eq!(plain.vertices(), scaled.vertices());
    }

    #[test]
    fn vertices_match_brute_force(
        lo in (1i64..4, 1i64..4),
        cuts in prop::collection::vec(((-2i64..=2, -2i64..=2), 1i64..8), 1..4),
    ) {
        let mut facets = vec![
            Facet::new(vec![1, 0], int(-lo.0)),
            Facet::new(vec![0, 1], int(-lo.1)),
            Facet::new(vec![-1, 0], int(-3)),
            Facet::new(vec![0, -1], int(-3)),
        ];
        for ((x, y), off) in cuts {
            prop_assume!(x != 0 || y != 0);
            facets.push(Facet::new(vec![x, y], rat(-off, 2)));
        }
        let Ok(p) = Polytope::new("cut", 2, facets.clone(), false) else {
            return Ok(());
        };
        // Cramer's rule on every pair of defining lines, kept if feasible.
        let mut expected: Vec<Vec<Rational>> = Vec::new();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let (a, b) = (&facets[i], &facets[j]);
                let det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
                if det == 0 {
                    continue;
                }
                let det = int(det);
                let x = (&a.offset * int(b.normal[1]) - &b.offset * int(a.normal[1])) / &det;
                let y = (&b.offset * int(a.normal[0]) - &a.offset * int(b.normal[0])) / &det;
                let v = vec![x, y];
                let feasible = facets.iter().all(|f| {
                    int(f.normal[0]) * &v[0] + int(f.normal[1]) * &v[1] >= f.offset
                });
                if feasible && !expected.contains(&v) {
                    expected.push(v);
                }
            }
        }
        expected.sort();
        let mut got = p.vertices().to_vec();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn m12_is_linear_in_the_weights(
        d in prop::collection::vec(arb_nonzero_gaussian(), 6),
        e in prop::collection::vec(arb_nonzero_gaussian(), 6),
        x in prop::collection::vec(arb_nonzero_gaussian(), 2),
        fiber in (1i64..8, 1i64..8),
    ) {
        prop_assume!(fiber.0 + fiber.1 < 8);
        let sum: Vec<GaussianRational> = d.iter().zip(&e).map(|(a, b)| a + b).collect();
        prop_assume!(sum.iter().all(|s| !s.is_zero()));
        let p = builtins::blowup3(rat(1, 8)).unwrap();
        let discs = disc_classes(&p, &FiberPoint::new(vec![rat(fiber.0, 8), rat(fiber.1, 8)])).unwrap();
        let local = LocalSystem::non_unitary(x).unwrap();
        let md = m12(&discs, &local, &BFieldWeights::new(d).unwrap()).unwrap();
        let me = m12(&discs, &local, &BFieldWeights::new(e).unwrap()).unwrap();
        let ms = m12(&discs, &local, &BFieldWeights::new(sum).unwrap()).unwrap();
        for i in 0..2 {
            prop_assert_eq!(&ms[i], &(&md[i] + &me[i]));
        }
    }

    #[test]
    fn m12_commutes_with_conjugation(
        d in prop::collection::vec(arb_nonzero_gaussian(), 4),
        x in prop::collection::vec(arb_nonzero_gaussian(), 2),
    ) {
        let p = builtins::hirzebruch1();
        let discs = disc_classes(&p, &FiberPoint::parse("1/3,-1/4").unwrap()).unwrap();
        let local = LocalSystem::non_unitary(x).unwrap();
        let weights = BFieldWeights::new(d).unwrap();
        let plain = m12(&discs, &local, &weights).unwrap();
        let conj = m12(&discs, &local.conj(), &weights.conj()).unwrap();
        for (a, b) in plain.iter().zip(&conj) {
            prop_assert_eq!(&a.conj(), b);
        }
    }

    #[test]
    fn kernel_vectors_are_exact(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 3)) {
        let matrix = row_matrix(&m);
        for v in kernel_basis(&matrix) {
            for row in &m {
                let dot: Rational = row.iter().zip(&v).map(|(&a, x)| int(a) * x).sum();
                prop_assert!(dot.is_zero());
            }
        }
        if let Some(c) = fully_supported_kernel_vector(&matrix) {
            prop_assert!(c.iter().all(|x| !x.is_zero()));
            for row in &m {
                let dot: Rational = row.iter().zip(&c).map(|(&a, x)| int(a) * x).sum();
                prop_assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn reflexive_unit_critical_points_match_m12(angles in prop::collection::vec(0.0f64..std::f64::consts::TAU, 2)) {
        let p = builtins::hirzebruch1();
        prop_assert!(is_reflexive(&p));
        let (fiber, _) = monotone_fiber(&p).unwrap();
        let z: Vec<Complex64> = angles.iter().map(|&h| Complex64::from_polar(1.0, h)).collect();
        let equations = critical_equations(&superpotential(&p));
        let discs = disc_classes(&p, &fiber).unwrap();
        let m = m12(&discs, &LocalSystem::from_angles(&angles), &BFieldWeights::trivial(4)).unwrap();
        for (e, mi) in equations.iter().zip(&m) {
            // Both sides are T^(2π) times the same Laurent sum, up to (-1)^n.
            prop_assert!((e.eval(&z) - mi.convergent_eval_default()).norm() < 1e-10);
        }
    }
}

#[test]
fn fully_supported_search_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let m = common::random_matrix(&mut rng, 3, 5, 2);
        let found = fully_supported_kernel_vector(&row_matrix(&m));
        assert_eq!(
            found.is_some(),
            common::fully_supported_exists(&m),
            "matrix {m:?}"
        );
    }
}

#[test]
fn random_kernel_combinations_agree_with_oracle() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let m = common::random_matrix(&mut rng, 3, 5, 2);
        let basis = kernel_basis(&row_matrix(&m));
        let mut hit = false;
        for _ in 0..1000 {
            let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-20..=20)).collect();
            let v: Vec<Rational> = (0..5)
                .map(|j| {
                    basis
                        .iter()
                        .zip(&coeffs)
                        .map(|(b, &c)| &b[j] * int(c))
                        .sum()
                })
                .collect();
            if v.iter().all(|x| !x.is_zero()) {
                hit = true;
                break;
            }
        }
        if hit {
            assert!(common::fully_supported_exists(&m), "matrix {m:?}");
        }
    }
}

#[test]
fn unit_circle_critical_points_kill_m12() {
    let p = builtins::segment();
    let solve = solve_critical(&superpotential(&p), &SolveOptions::default()).unwrap();
    let (fiber, _) = monotone_fiber(&p).unwrap();
    let discs = disc_classes(&p, &fiber).unwrap();
    let unit: Vec<_> = solve
        .points
        .iter()
        .filter(|pt| (pt.z[0].norm() - 1.0).abs() < 1e-9)
        .collect();
    assert_eq!(unit.len(), 2);
    for pt in unit {
        let m = m12(
            &discs,
            &LocalSystem::from_angles(&pt.holonomy_angles),
            &BFieldWeights::trivial(2),
        )
        .unwrap();
        assert!(m.iter().all(|c| c.max_magnitude() < 1e-10));
    }
}

#[test]
fn monotone_m12_has_one_exponent() {
    for p in common::all_builtins() {
        let Some((fiber, area)) = monotone_fiber(&p) else {
            continue;
        };
        let discs = disc_classes(&p, &fiber).unwrap();
        let m = m12(
            &discs,
            &LocalSystem::<GaussianRational>::trivial(p.dim()),
            &BFieldWeights::trivial(p.num_facets()),
        )
        .unwrap();
        for c in &m {
            assert!(c.terms().len() <= 1, "{}", p.name());
            assert!(c.terms().iter().all(|t| t.exponent == area));
        }
    }
}

#[test]
fn certificates_are_sound_on_all_builtins() {
    for p in common::all_builtins() {
        let mut fibers: Vec<FiberPoint> = monotone_fiber(&p).map(|(f, _)| f).into_iter().collect();
        fibers.extend(toric_floer::certificate::grid_points(&p, 4));
        for fiber in fibers {
            let cert = certify_fiber(&p, &fiber).unwrap();
            if !cert.is_certified() {
                continue;
            }
            let discs = disc_classes(&p, &fiber).unwrap();
            let m = m12(
                &discs,
                &LocalSystem::trivial(p.dim()),
                &BFieldWeights::new(cert.weights.clone()).unwrap(),
            )
            .unwrap();
            assert!(
                m.iter().all(NovikovElement::is_zero),
                "{} at {fiber}",
                p.name()
            );
            assert_eq!(floer_verdict(&m), FloerVerdict::NonVanishing);
        }
        if p.fano_asserted() && monotone_fiber(&p).is_some() {
            assert!(certify_monotone(&p).unwrap().unwrap().is_certified());
        }
    }
}

#[test]
fn cube_root_holonomy_kills_cp2() {
    let p = builtins::cp(2).unwrap();
    let (fiber, _) = monotone_fiber(&p).unwrap();
    let discs = disc_classes(&p, &fiber).unwrap();
    let third = std::f64::consts::TAU / 3.0;
    let m = m12(
        &discs,
        &LocalSystem::from_angles(&[third, third]),
        &BFieldWeights::trivial(3),
    )
    .unwrap();
    assert!(m.iter().all(|c| c.max_magnitude() < 1e-12));
    assert_eq!(floer_verdict(&m), FloerVerdict::NonVanishing);
}
