//! Strategies and property checks shared by the property suite and the
//! acceptance runner.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qgrade_core::diagram::{linear_solid_torus, BorderedDiagram, Domain, Generator, Ring};
use qgrade_core::grgroup::{relative_lambda, Circle};
use qgrade_core::modules::GradedModulePresentation;
use qgrade_core::rational::{int, q};
use qgrade_core::{
    DoubleCoset, GradingElement, H1Chain, Membership, PointedMatchedCircle, RelativeGrading,
    SubgroupSpan, Q,
};

pub const CASES: u32 = 1000;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn load_module(name: &str) -> GradedModulePresentation {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    GradedModulePresentation::from_json(&text).expect("fixture parses")
}

pub fn load_diagram(name: &str) -> BorderedDiagram {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    BorderedDiagram::from_json(&text).expect("fixture parses")
}

pub fn circles() -> &'static [Circle] {
    static CIRCLES: OnceLock<Vec<Circle>> = OnceLock::new();
    CIRCLES.get_or_init(|| {
        vec![
            Arc::new(PointedMatchedCircle::torus()),
            Arc::new(PointedMatchedCircle::new(8, vec![[1, 3], [2, 4], [5, 7], [6, 8]]).unwrap()),
            Arc::new(PointedMatchedCircle::new(8, vec![[1, 5], [2, 6], [3, 7], [4, 8]]).unwrap()),
        ]
    })
}

pub fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2, 4])).prop_map(|(n, d)| q(n, d))
}

fn element_on(c: Circle) -> impl Strategy<Value = GradingElement> {
    let dim = c.h1_dim();
    (small_q(), prop::collection::vec(small_q(), dim))
        .prop_map(move |(m, h)| GradingElement::new(c.clone(), m, H1Chain(h)).unwrap())
}

/// A circle together with `n` elements on it.
pub fn elements(n: usize) -> impl Strategy<Value = Vec<GradingElement>> {
    (0..circles().len())
        .prop_flat_map(move |i| prop::collection::vec(element_on(circles()[i].clone()), n))
}

/// Word in subgroup generators: (generator index, exponent ±1).
fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..8, any::<bool>()), 0..=max_len)
}

fn eval_word(circle: &Circle, gens: &[GradingElement], word: &[(usize, bool)]) -> GradingElement {
    let mut acc = GradingElement::identity(circle);
    if gens.is_empty() {
        return acc;
    }
    for &(i, positive) in word {
        let g = &gens[i % gens.len()];
        let factor = if positive { g.clone() } else { g.inverse() };
        acc = acc.mul(&factor).unwrap();
    }
    acc
}

pub fn run<S: Strategy>(
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, check).map_err(|e| e.to_string())
}

pub fn group_axioms() -> Result<(), String> {
    run(elements(3), |v| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let e = GradingElement::identity(a.circle());
        prop_assert_eq!(
            a.mul(b).unwrap().mul(c).unwrap(),
            a.mul(&b.mul(c).unwrap()).unwrap()
        );
        prop_assert_eq!(&a.mul(&e).unwrap(), a);
        prop_assert_eq!(&e.mul(a).unwrap(), a);
        prop_assert!(a.mul(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().mul(a).unwrap().is_identity());
        Ok(())
    })
}

pub fn lambda_central() -> Result<(), String> {
    run((elements(1), small_q()), |(v, t)| {
        let g = &v[0];
        let lam = GradingElement::lambda_pow(g.circle(), t);
        prop_assert_eq!(lam.mul(g).unwrap(), g.mul(&lam).unwrap());
        Ok(())
    })
}

pub fn commutation() -> Result<(), String> {
    run(elements(2), |v| {
        let (g, h) = (&v[0], &v[1]);
        let c = g.circle();
        let exponent = int(2) * c.mu(h.h1(), &c.boundary(g.h1()).unwrap()).unwrap();
        let rhs = GradingElement::lambda_pow(c, exponent)
            .mul(&h.mul(g).unwrap())
            .unwrap();
        prop_assert_eq!(g.mul(h).unwrap(), rhs);
        Ok(())
    })
}

pub fn reversal_anti_homomorphism() -> Result<(), String> {
    run(elements(2), |v| {
        let (g, h) = (&v[0], &v[1]);
        let lhs = g.mul(h).unwrap().reverse();
        let rhs = h.reverse().mul(&g.reverse()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(&g.reverse().reverse().rebase(g.circle()).unwrap(), g);
        Ok(())
    })
}

/// Bordered diagrams with enough generators to compose domains.
pub fn composition_diagrams() -> &'static [BorderedDiagram] {
    static DIAGRAMS: OnceLock<Vec<BorderedDiagram>> = OnceLock::new();
    DIAGRAMS.get_or_init(|| {
        [(1, 2), (2, 3), (3, 2), (3, 1), (-1, 2)]
            .iter()
            .map(|&(a, b)| linear_solid_torus(a, b).unwrap())
            .collect()
    })
}

fn random_domain(
    d: &BorderedDiagram,
    x: &Generator,
    y: &Generator,
    coeffs: &[i64],
) -> Option<Domain> {
    let sol = d.solve_pi2(x, y, Ring::Z)?;
    let mut b = sol.particular.clone();
    for (p, &k) in sol.periodic_basis.iter().zip(coeffs) {
        b = b.add(&p.scale(&int(k)));
    }
    Some(b)
}

pub fn g_prime_composition() -> Result<(), String> {
    let strategy = (
        0..composition_diagrams().len(),
        (any::<u16>(), any::<u16>(), any::<u16>()),
        prop::collection::vec(-3i64..=3, 4),
        prop::collection::vec(-3i64..=3, 4),
    );
    run(strategy, |(di, (i, j, k), c1, c2)| {
        let d = &composition_diagrams()[di];
        let gens = d.enumerate_generators();
        let pick = |n: u16| gens[n as usize % gens.len()].clone();
        let (x, y, z) = (pick(i), pick(j), pick(k));
        let (Some(b1), Some(b2)) = (random_domain(d, &x, &y, &c1), random_domain(d, &y, &z, &c2))
        else {
            return Ok(());
        };
        let composite = d.g_prime(&b1.add(&b2), &x, &z).unwrap();
        let product = d
            .g_prime(&b1, &x, &y)
            .unwrap()
            .mul(&d.g_prime(&b2, &y, &z).unwrap())
            .unwrap();
        prop_assert_eq!(composite, product);
        Ok(())
    })
}

pub fn membership_words() -> Result<(), String> {
    let strategy = (
        (0..circles().len()).prop_flat_map(|i| {
            let c = circles()[i].clone();
            (Just(c.clone()), prop::collection::vec(element_on(c), 1..=2))
        }),
        word_strategy(5),
        small_q(),
    );
    run(strategy, |((circle, gens), word, shift)| {
        let span = SubgroupSpan::new(&circle, gens.clone()).unwrap();
        let w = eval_word(&circle, &gens, &word);
        prop_assert!(span.member(&w).unwrap().holds());
        if !span.is_indeterminate() && shift != int(0) {
            let off = GradingElement::lambda_pow(&circle, shift).mul(&w).unwrap();
            prop_assert_eq!(span.member(&off).unwrap(), Membership::No);
        }
        Ok(())
    })
}

fn negate(r: &RelativeGrading) -> RelativeGrading {
    match r {
        RelativeGrading::Same { q } => RelativeGrading::Same { q: -q },
        other => other.clone(),
    }
}

pub fn relative_lambda_laws() -> Result<(), String> {
    let strategy = (0..circles().len()).prop_flat_map(|i| {
        let c = circles()[i].clone();
        (
            prop::collection::vec(element_on(c.clone()), 0..=2),
            prop::collection::vec(element_on(c.clone()), 0..=2),
            prop::collection::vec(element_on(c), 2),
            (small_q(), small_q()),
            (
                word_strategy(3),
                word_strategy(3),
                word_strategy(3),
                word_strategy(3),
            ),
        )
    });
    run(
        strategy,
        |(lg, rg, reps, (q1, q2), (wl1, wr1, wl2, wr2))| {
            let circle = reps[0].circle().clone();
            let left = SubgroupSpan::new(&circle, lg.clone()).unwrap();
            let right = SubgroupSpan::new(&circle, rg.clone()).unwrap();
            let moved = |wl: &[(usize, bool)], t: &Q, wr: &[(usize, bool)]| {
                let rep = eval_word(&circle, &lg, wl)
                    .mul(&GradingElement::lambda_pow(&circle, t.clone()))
                    .unwrap()
                    .mul(&reps[0])
                    .unwrap()
                    .mul(&eval_word(&circle, &rg, wr))
                    .unwrap();
                DoubleCoset::new(left.clone(), rep, right.clone()).unwrap()
            };
            let a = DoubleCoset::new(left.clone(), reps[0].clone(), right.clone()).unwrap();
            let b = moved(&wl1, &q1, &wr1);
            let c = moved(&wl2, &q2, &wr2);
            let d = DoubleCoset::new(left.clone(), reps[1].clone(), right.clone()).unwrap();

            let ab = relative_lambda(&a, &b).unwrap();
            let ba = relative_lambda(&b, &a).unwrap();
            let bc = relative_lambda(&b, &c).unwrap();
            let ac = relative_lambda(&a, &c).unwrap();
            prop_assert_ne!(&ab, &RelativeGrading::Distinct);
            prop_assert_eq!(&ba, &negate(&ab));
            if let RelativeGrading::Same { q } = &ab {
                prop_assert_eq!(q, &q1);
            }
            if let (RelativeGrading::Same { q: x }, RelativeGrading::Same { q: y }) = (&ab, &bc) {
                prop_assert_eq!(&ac, &RelativeGrading::Same { q: x + y });
            }
            prop_assert_eq!(
                relative_lambda(&a, &a).unwrap() == RelativeGrading::Indeterminate,
                ab == RelativeGrading::Indeterminate
            );
            let ad = relative_lambda(&a, &d).unwrap();
            let da = relative_lambda(&d, &a).unwrap();
            prop_assert_eq!(&da, &negate(&ad));
            Ok(())
        },
    )
}

/// Every property suite, by name.
pub type Suite = (&'static str, fn() -> Result<(), String>);

pub fn all_properties() -> Vec<Suite> {
    vec![
        ("group axioms", group_axioms),
        ("lambda is central", lambda_central),
        ("commutation relation", commutation),
        (
            "reversal is an anti-homomorphism",
            reversal_anti_homomorphism,
        ),
        ("g' composition", g_prime_composition),
        ("membership of short words", membership_words),
        (
            "relative exponent antisymmetry and additivity",
            relative_lambda_laws,
        ),
    ]
}
