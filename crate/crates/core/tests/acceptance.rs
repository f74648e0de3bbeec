//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach the terminal; exits non-zero if any
//! criterion fails.

mod common;

use common::drawings::{b23_drawing, c23_drawing, c33_drawing, weights, Drawing};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qhd_core::fpgroup::GroupOracle;
use qhd_core::fpgroup::*;
use qhd_core::matgroup::{self, abelianization, closure, make_generators, Variant};
use qhd_core::resgraph::*;
use qhd_core::verify::*;
use qhd_core::zvk::{artin_act, BraidWord};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn b23_pipeline(fx: &Fixtures) -> Outcome {
    for p in 0..=3 {
        let r = verify_b23(fx, p).map_err(err)?;
        let q = p as usize + 3;
        ensure(
            r.order == Some(4 * (q - 1) * q),
            format!("p={p}: order {:?}", r.order),
        )?;
        let ab: i128 = r.abelian_invariants.iter().product();
        ensure(
            ab == 4 * q as i128,
            format!("p={p}: ab {:?}", r.abelian_invariants),
        )?;
    }
    Ok("orders 24, 48, 80, 120; |ab| = 4(p+3)".into())
}

fn b23_presentations(fx: &Fixtures) -> Outcome {
    for p in 0..=3 {
        let r = verify_b23(fx, p).map_err(err)?;
        let g = b23_presentation(p);
        ensure(
            group_order(&g, COSET_BOUND).finite() == Some(r.expected_order),
            format!("p={p}: order"),
        )?;
        ensure(
            r.index_of_a == Some(2),
            format!("p={p}: [G:<a>] = {:?}", r.index_of_a),
        )?;
        let iso = &r.presentation_iso;
        ensure(
            iso.forward_is_hom && iso.backward_is_hom,
            format!("p={p}: homomorphisms {iso:?}"),
        )?;
        ensure(iso.ok, format!("p={p}: {iso:?}"))?;
    }
    Ok("index of <a> is 2; mutually inverse homomorphisms to the pipeline group".into())
}

fn matrix_groups() -> Outcome {
    for m in 2..=6 {
        let c = verify_matgroup(m).map_err(err)?;
        ensure(
            c.ok,
            format!("m={m}: {}", serde_json::to_string(&c).unwrap()),
        )?;
    }
    for m in [3, 5] {
        let r = matgroup::report(m, Variant::GPrime).map_err(err)?;
        ensure(
            !r.fpf && r.witness_order == Some(2),
            format!("G' m={m}: fpf {} witness {:?}", r.fpf, r.witness_order),
        )?;
    }
    Ok(
        "m = 2..6 order/centre/ab/fpf/(S^iT)^2/Sylow; G' has an order-2 witness for m = 3, 5"
            .into(),
    )
}

fn g_iso_g1() -> Outcome {
    for m in 2..=5 {
        let c = check_matrix_isomorphism(m).map_err(err)?;
        ensure(c.ok, format!("m={m}: {c:?}"))?;
    }
    Ok("a -> S, l·a -> T is a homomorphism onto a group of the same order, m = 2..5".into())
}

fn invariance() -> Outcome {
    for m in 2..=5 {
        let c = verify_matgroup(m).map_err(err)?;
        ensure(c.invariance, format!("m={m}: invariant polynomials"))?;
        // Euler characteristic of the Milnor fibre, 1 + μ
        let chi = 4 * m as usize * (m as usize + 1);
        ensure(
            c.report.order == chi,
            format!("m={m}: |G| = {} vs χ = {chi}", c.report.order),
        )?;
    }
    Ok("xw+yz fixed, zw+x^2m+ζy^2m rescaled; |G| = χ(M) = 4m(m+1)".into())
}

fn graphs() -> Outcome {
    for p in 0..=4u32 {
        let q = p as i128 + 3;
        for (f, want) in [
            (Family::B23 { p }, 16 * q * q),
            (Family::C23 { p }, 9 * q * q),
            (Family::C33 { p }, 4 * (q + 1) * (q + 1)),
        ] {
            let d = discriminant_group(&family_graph(&f).map_err(err)?).map_err(err)?;
            ensure(
                d.order == want && d.negative_definite,
                format!("{f:?}: {d:?}"),
            )?;
        }
        let g = family_graph(&Family::B23 { p }).map_err(err)?;
        let mut arm: Vec<u64> = (1..=p as usize + 2)
            .map(|k| -g.vertices[g.position(&format!("a{k}")).unwrap()].weight as u64)
            .collect();
        arm.reverse();
        let n = 2 * (p as u64 + 2).pow(2);
        ensure(
            arm == hj_expand(n, 2 * p as u64 + 3).map_err(err)?,
            format!("p={p}: long arm {arm:?}"),
        )?;
    }
    for m in 2..=5u64 {
        let target = 16 * (m as u128 + 1).pow(2);
        let d = solve_central_weight(&seifert_arms(m).map_err(err)?, target);
        ensure(d == Some(2), format!("m={m}: central weight {d:?}"))?;
    }
    Ok("discriminants 16(p+3)^2, 9(p+3)^2, 4(p+4)^2; central weight 2; long arm = HJ chain".into())
}

fn blowup_models(fx: &Fixtures) -> Outcome {
    for p in 0..=3u32 {
        let drawings: [(ModelFamily, Drawing); 3] = [
            (ModelFamily::B23, b23_drawing(p)),
            (ModelFamily::C23, c23_drawing(p)),
            (ModelFamily::C33, c33_drawing(p)),
        ];
        for (f, (w, e)) in drawings {
            let m = run_script(&fx.script(f).map_err(err)?, p).map_err(err)?;
            let g = m.graph().map_err(err)?;
            ensure(
                weights(&g) == w && g.labelled_edges() == e,
                format!("{f:?} p={p}: dual graph differs"),
            )?;
        }
        let b = verify_b23(fx, p).map_err(err)?;
        ensure(
            b.complement_h1 == b.abelian_invariants,
            format!("B23 p={p}: h1 {:?}", b.complement_h1),
        )?;
        let c = verify_c23(fx, p).map_err(err)?;
        ensure(
            c.complement_h1 == [3 * (p as i128 + 3)],
            format!("C23 p={p}: h1 {:?}", c.complement_h1),
        )?;
        let c = verify_c33(fx, p).map_err(err)?;
        ensure(
            c.complement_h1 == [2 * (p as i128 + 4)],
            format!("C33 p={p}: h1 {:?}", c.complement_h1),
        )?;
    }
    Ok("drawings reproduced; H1 = ab(B23), Z/3(p+3), Z/2(p+4)".into())
}

fn conic_cubic(fx: &Fixtures) -> Outcome {
    let r = verify_c23(fx, 0).map_err(err)?;
    ensure(
        r.equivalence_certificate,
        "Tietze chain to <q,c,f | ...> does not check",
    )?;
    ensure(
        r.abelian_invariants == [0, 0],
        format!("ab {:?}", r.abelian_invariants),
    )?;
    ensure(
        r.abelian_certificate,
        "[q,cqc] / [q,c] certificates do not check",
    )?;
    Ok("certified equivalence to the target presentation; ab = Z^2; [q,c] = 1 certified".into())
}

fn polynomials() -> Outcome {
    let r = verify_poly().map_err(err)?;
    ensure(r.ok, serde_json::to_string(&r).unwrap().to_string())?;
    Ok(format!(
        "cone {}; pullback cofactor {}",
        r.tangent_cone,
        r.pullback_cofactor.unwrap_or_default()
    ))
}

fn run_prop<S: Strategy>(
    cases: u32,
    s: S,
    f: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner.run(&s, f).map_err(err)
}

fn letters(n: i32) -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec(prop_oneof![1..n, -(n - 1)..0], 0..8)
}

fn property_suites() -> Outcome {
    // Artin action respects the braid relations
    run_prop(
        200,
        (
            letters(5),
            letters(5),
            1i32..4,
            proptest::collection::vec(prop_oneof![1i32..=5, -5i32..=-1], 0..8),
        ),
        |(pre, post, i, w)| {
            let w = Word::new(w);
            let act = |mid: &[i32]| {
                let l: Vec<i32> = pre.iter().chain(mid).chain(&post).copied().collect();
                artin_act(&BraidWord::new(5, l).unwrap(), &w)
            };
            prop_assert_eq!(act(&[i, i + 1, i]), act(&[i + 1, i, i + 1]));
            prop_assert_eq!(act(&[i, -i]), act(&[]));
            Ok(())
        },
    )?;
    // coset index × element order = group order
    run_prop(
        60,
        (
            (2i64..7),
            proptest::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..6),
        ),
        |(n, w)| {
            let g =
                Presentation::parse(&["x", "y"], &["x^2", "y^2", &format!("(x*y)^{n}")]).unwrap();
            let w = Word::new(w);
            let rep = PermRep::from_table(&coset_enumerate(&g, &[], COSET_BOUND)).unwrap();
            let (e, gw) = (rep.identity(), rep.eval(&w));
            let mut k = 1;
            let mut x = gw.clone();
            while x != e {
                x = rep.mul(&x, &gw);
                k += 1;
            }
            let idx = coset_enumerate(&g, std::slice::from_ref(&w), COSET_BOUND)
                .index()
                .unwrap();
            prop_assert_eq!(idx * k, 2 * n as usize);
            Ok(())
        },
    )?;
    // HJ round trip, exhaustively
    for n in 2..=500u64 {
        for q in (1..n).filter(|q| num_integer::gcd(*q, n) == 1) {
            let v = hj_value(&hj_expand(n, q).map_err(err)?).map_err(err)?;
            ensure(v == (n, q), format!("hj({n},{q}) -> {v:?}"))?;
        }
    }
    // Smith form of the presentation against the enumerated abelianization
    for m in 2..=6u32 {
        let (s, t) = make_generators(m, Variant::G).map_err(err)?;
        let g = closure(&[s, t], matgroup::DEFAULT_SIZE_BOUND).map_err(err)?;
        let snf = abelian_invariants(&b23_presentation(m - 2));
        ensure(
            abelianization(&g) == snf,
            format!("m={m}: {:?} vs {snf:?}", abelianization(&g)),
        )?;
    }
    Ok("braid relations, Lagrange, HJ round trip n <= 500, SNF = enumerated abelianization".into())
}

fn main() {
    let fx = Fixtures::bundled();
    let criteria: Vec<Criterion> = vec![
        ("B23 pipeline end-to-end", Box::new(|| b23_pipeline(&fx))),
        (
            "B23 presentation and equivalence",
            Box::new(|| b23_presentations(&fx)),
        ),
        ("matrix group invariants", Box::new(matrix_groups)),
        ("G isomorphic to G1", Box::new(g_iso_g1)),
        ("polynomial invariance", Box::new(invariance)),
        ("plumbing graphs", Box::new(graphs)),
        ("blow-up models", Box::new(|| blowup_models(&fx))),
        ("conic + cubic presentation", Box::new(|| conic_cubic(&fx))),
        ("polynomial algebra", Box::new(polynomials)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
