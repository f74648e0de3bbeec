use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use proptest::prelude::*;
use qhd_core::fpgroup::{abelian_invariants, b23_presentation};
use qhd_core::resgraph::*;

mod common;
use common::drawings::*;
use std::collections::{BTreeMap, BTreeSet};

fn big(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `a₁ − 1/(a₂ − …)` evaluated in exact rationals.
fn cf_oracle(seq: &[u64]) -> BigRational {
    let mut x = big(*seq.last().unwrap() as i64);
    for &a in seq[..seq.len() - 1].iter().rev() {
        x = big(a as i64) - x.recip();
    }
    x
}

/// Determinant and definiteness of a tree's intersection form by pruning
/// leaves: each leaf `v` hanging off `u` contributes its current weight to
/// the determinant and changes `u` by `−1/w(v)`.
fn tree_oracle(g: &PlumbingGraph) -> (BigRational, bool) {
    assert_eq!(g.edges.len() + 1, g.len(), "not a tree");
    let mut w: Vec<BigRational> = g.vertices.iter().map(|v| big(v.weight)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.len()];
    for &(a, b) in &g.edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive: BTreeSet<usize> = (0..g.len()).collect();
    let mut det = BigRational::one();
    let mut negative = true;
    while let Some(&v) = alive.iter().find(|&&v| adj[v].len() <= 1) {
        alive.remove(&v);
        det *= &w[v];
        negative &= w[v].is_negative();
        if let Some(&u) = adj[v].iter().next() {
            let dw = w[v].recip();
            w[u] -= dw;
            adj[u].remove(&v);
        }
    }
    (det, negative)
}

#[test]
fn hj_examples() {
    assert_eq!(hj_expand(8, 3).unwrap(), vec![3, 3]);
    assert_eq!(hj_expand(4, 1).unwrap(), vec![4]);
    assert_eq!(hj_expand(9, 5).unwrap(), vec![2, 5]);
    assert_eq!(cf_oracle(&[2, 5]), BigRational::new(9.into(), 5.into()));
    assert_eq!(cf_oracle(&[2, 5, 2]), BigRational::new(16.into(), 9.into()));
}

#[test]
fn hj_round_trip_exhaustive() {
    for n in 2..=500u64 {
        for q in 1..n {
            if n.gcd(&q) != 1 {
                assert!(hj_expand(n, q).is_err());
                continue;
            }
            let s = hj_expand(n, q).unwrap();
            assert!(s.iter().all(|&a| a >= 2));
            assert_eq!(hj_value(&s).unwrap(), (n, q));
            assert_eq!(
                cf_oracle(&s),
                BigRational::new((n as i64).into(), (q as i64).into())
            );
        }
    }
}

#[test]
fn cyclic_types() {
    assert_eq!(
        normalize_cyclic_type(4, (1, 1)).unwrap(),
        CyclicType { n: 4, q: 1 }
    );
    assert_eq!(
        normalize_cyclic_type(12, (1, 7)).unwrap(),
        CyclicType { n: 12, q: 7 }
    );
    for m in 2..=8u64 {
        let n = 2 * m * m;
        let t = normalize_cyclic_type(n, (-(2 * m as i64 + 1), 1)).unwrap();
        // q·(−(2m+1)) ≡ 1 mod 2m²
        assert_eq!(
            (t.q as i128 * -(2 * m as i128 + 1)).rem_euclid(n as i128),
            1
        );
        // and the long arm is its resolution chain
        assert_eq!(
            t.resolution_chain(),
            hj_expand(n, 2 * m - 1).unwrap(),
            "m = {m}"
        );
    }
    assert!(matches!(
        normalize_cyclic_type(8, (2, 1)),
        Err(ResError::NonFree { .. })
    ));
}

#[test]
fn family_examples() {
    let g = family_graph(&Family::B23 { p: 0 }).unwrap();
    let c = g.position("c").unwrap();
    assert_eq!(g.vertices[c].weight, -2);
    let mut arms: Vec<Vec<i64>> = g
        .neighbours(c)
        .into_iter()
        .map(|mut v| {
            let mut arm = vec![g.vertices[v].weight];
            let mut prev = c;
            while let Some(&u) = g.neighbours(v).iter().find(|&&u| u != prev) {
                arm.push(g.vertices[u].weight);
                (prev, v) = (v, u);
            }
            arm
        })
        .collect();
    arms.sort();
    assert_eq!(arms, vec![vec![-4], vec![-4], vec![-3, -3]]);

    // C33 at p = 0: the chain −4, −2, −2, −2 with a −6 leaf on the third vertex.
    let g = family_graph(&Family::C33 { p: 0 }).unwrap();
    assert_eq!(
        weights(&g),
        BTreeMap::from([
            ("a1".into(), -2),
            ("a2".into(), -4),
            ("c".into(), -2),
            ("b1".into(), -2),
            ("l1".into(), -6)
        ])
    );
    assert_eq!(
        g.labelled_edges(),
        edge_set(&[("a2", "a1"), ("a1", "c"), ("c", "b1"), ("c", "l1")])
    );

    let s = family_graph(&Family::B23Seifert { m: 2, d: 7 }).unwrap();
    assert_eq!(s.vertices[0].weight, -7);
    assert_eq!(seifert_arms(2).unwrap(), vec![vec![4], vec![4], vec![3, 3]]);
}

#[test]
fn long_arm_is_hj_chain() {
    for p in 0..=4u32 {
        let g = family_graph(&Family::B23 { p }).unwrap();
        // read the long arm from its free end towards the centre
        let mut arm: Vec<u64> = (1..=p as usize + 2)
            .map(|k| -g.vertices[g.position(&format!("a{k}")).unwrap()].weight as u64)
            .collect();
        arm.reverse();
        let n = 2 * (p as u64 + 2).pow(2);
        assert_eq!(arm, hj_expand(n, 2 * p as u64 + 3).unwrap(), "p = {p}");
    }
}

#[test]
fn discriminant_orders() {
    for p in 0..=4i64 {
        let cases = [
            (Family::B23 { p: p as u32 }, 16 * (p + 3).pow(2)),
            (Family::C23 { p: p as u32 }, 9 * (p + 3).pow(2)),
            (Family::C33 { p: p as u32 }, 4 * (p + 4).pow(2)),
        ];
        for (f, expect) in cases {
            let g = family_graph(&f).unwrap();
            let (det, neg) = tree_oracle(&g);
            assert_eq!(det.abs(), big(expect), "{f:?}");
            let d = discriminant_group(&g).unwrap();
            assert_eq!(d.order, expect as i128, "{f:?}");
            assert_eq!(d.factors.iter().product::<i128>(), d.order);
            assert!(neg && d.negative_definite);
        }
    }
    assert_eq!(
        discriminant_group(&family_graph(&Family::B23 { p: 0 }).unwrap())
            .unwrap()
            .order,
        144
    );
    assert_eq!(
        discriminant_group(&family_graph(&Family::B23 { p: 1 }).unwrap())
            .unwrap()
            .order,
        256
    );
    assert_eq!(
        discriminant_group(&family_graph(&Family::C23 { p: 0 }).unwrap())
            .unwrap()
            .order,
        81
    );
}

#[test]
fn gnq_orders() {
    for n in 2..=6u64 {
        for q in 1..=n {
            let g = family_graph(&Family::Gnq { n, q }).unwrap();
            let (det, neg) = tree_oracle(&g);
            assert_eq!(det.abs(), big((n * n) as i64));
            assert!(neg);
            assert_eq!(discriminant_group(&g).unwrap().order, (n * n) as i128);
        }
    }
}

#[test]
fn central_weight() {
    for m in 2..=5u64 {
        let target = 16 * (m as u128 + 1).pow(2);
        assert_eq!(
            solve_central_weight(&seifert_arms(m).unwrap(), target),
            Some(2),
            "m = {m}"
        );
        // the d = 2 star is the B23 graph with p = m − 2
        let s = family_graph(&Family::B23Seifert { m, d: 2 }).unwrap();
        let b = family_graph(&Family::B23 { p: m as u32 - 2 }).unwrap();
        assert_eq!(weights(&s), weights(&b));
        assert_eq!(s.labelled_edges(), b.labelled_edges());
    }
    // centre −d with two (−2) leaves: det = 4 − 4d
    assert_eq!(solve_central_weight(&[vec![2], vec![2]], 4), Some(2));
    assert_eq!(solve_central_weight(&[vec![2], vec![2]], 8), Some(3));
    assert_eq!(solve_central_weight(&[vec![2], vec![2]], 6), None);
}

#[test]
fn models_reproduce_drawings() {
    for p in 0..=3 {
        for (f, (w, e)) in [
            (ModelFamily::B23, b23_drawing(p)),
            (ModelFamily::C23, c23_drawing(p)),
            (ModelFamily::C33, c33_drawing(p)),
        ] {
            let m = family_model(f, p).unwrap();
            assert_eq!(m.black.len(), 10 + p as usize, "{f:?} p={p}");
            // Picard rank equals the number of kept components
            assert_eq!(m.model.rank(), m.black.len());
            let g = m.graph().unwrap();
            assert_eq!(weights(&g), w, "{f:?} p={p}");
            assert_eq!(g.labelled_edges(), e, "{f:?} p={p}");
            assert!(g.vertices.iter().all(|v| v.genus == 0));
        }
    }
}

#[test]
fn gray_components_meet_as_drawn() {
    let m = family_model(ModelFamily::C23, 2).unwrap();
    let x = &m.model;
    // E′ touches C3, EP and Tinf; the last F touches F_p and C2
    for (a, b) in [
        ("EP2", "C3"),
        ("EP2", "EP"),
        ("EP2", "Tinf"),
        ("F3", "F2"),
        ("F3", "C2"),
    ] {
        assert_eq!(x.product(a, b).unwrap(), 1, "{a}·{b}");
    }
    assert_eq!(x.self_intersection("EP2").unwrap(), -1);
    let m = family_model(ModelFamily::C33, 1).unwrap();
    assert_eq!(m.gray, vec!["E3".to_string()]);
    assert_eq!(m.model.product("E3", "E2").unwrap(), 1);
    assert_eq!(m.model.product("E3", "C3").unwrap(), 1);
}

#[test]
fn seven_line_intermediate_weights() {
    let m = family_model(ModelFamily::B23, 0).unwrap().model;
    assert_eq!(m.self_intersection("A3").unwrap(), -3);
    assert_eq!(m.self_intersection("A1").unwrap(), -2);
    assert_eq!(m.self_intersection("E12").unwrap(), -1);
    assert_eq!(m.rank(), 10);
}

#[test]
fn complement_homology() {
    for p in 0..=4u32 {
        let pi = p as i128;
        let b = family_model(ModelFamily::B23, p).unwrap().h1().unwrap();
        assert_eq!(b, abelian_invariants(&b23_presentation(p)), "p = {p}");
        let order: i128 = b.iter().product();
        assert_eq!(order, 4 * (pi + 3));
        let disc = discriminant_group(&family_graph(&Family::B23 { p }).unwrap()).unwrap();
        assert_eq!(order * order, disc.order);

        assert_eq!(
            family_model(ModelFamily::C23, p).unwrap().h1().unwrap(),
            vec![3 * (pi + 3)]
        );
        assert_eq!(
            family_model(ModelFamily::C33, p).unwrap().h1().unwrap(),
            vec![2 * (pi + 4)]
        );
    }
}

#[test]
fn script_errors() {
    let mut s = ModelFamily::C33.script();
    s.gray = vec!["nope".into()];
    assert_eq!(
        run_script(&s, 0).unwrap_err(),
        ResError::UnknownCurve("nope".into())
    );
    let mut s = ModelFamily::C33.script();
    s.curves.pop();
    assert!(matches!(run_script(&s, 0), Err(ResError::UnknownCurve(c)) if c == "C2"));
}

/// Random blow-up sequences on a line, a conic and a cubic.
fn random_model(ops: &[(u8, u8, u8)]) -> BlowupModel {
    let mut m = BlowupModel::plane(&[("L", 1), ("Q", 2), ("C", 3)]).unwrap();
    for (k, &(a, b, mult)) in ops.iter().enumerate() {
        let labels = m.labels().to_vec();
        let x = &labels[a as usize % labels.len()];
        let y = &labels[b as usize % labels.len()];
        let mut through = vec![(x.as_str(), 1 + mult as i64 % 2)];
        if x != y {
            through.push((y.as_str(), 1));
        }
        m = m.blowup(&through, &format!("E{k}")).unwrap();
    }
    m
}

proptest! {
    #[test]
    fn hj_round_trip(n in 2u64..=500, q in 1u64..500) {
        prop_assume!(q < n && n.gcd(&q) == 1);
        let s = hj_expand(n, q).unwrap();
        prop_assert_eq!(hj_value(&s).unwrap(), (n, q));
    }

    #[test]
    fn families_negative_definite(p in 0u32..40) {
        for f in [Family::B23 { p }, Family::C23 { p }, Family::C33 { p }] {
            let g = family_graph(&f).unwrap();
            prop_assert!(g.is_connected());
            prop_assert!(g.is_negative_definite());
            let (det, neg) = tree_oracle(&g);
            prop_assert!(neg);
            prop_assert_eq!(det.abs().to_integer().to_i128().unwrap(), g.determinant().abs());
        }
    }

    #[test]
    fn blowups_follow_class_rules(ops in proptest::collection::vec((0u8..20, 0u8..20, 0u8..4), 0..12)) {
        let m = random_model(&ops);
        prop_assert_eq!(m.rank(), 1 + ops.len());
        for r in m.log() {
            prop_assert!(m.self_intersection(&r.label).unwrap() <= -1);
        }
        // self-intersection drops by exactly Σ mult² over the blow-ups through a curve
        for (label, deg) in [("L", 1i64), ("Q", 2), ("C", 3)] {
            let drop: i64 = m.log().iter()
                .flat_map(|r| r.through.iter())
                .filter(|(l, _)| l == label)
                .map(|(_, k)| k * k)
                .sum();
            prop_assert_eq!(m.self_intersection(label).unwrap(), deg * deg - drop);
        }
        // L and the exceptional curves are unitriangular in H, E₁, …: the complement of everything is simply connected
        let all: Vec<&str> = m.labels().iter().map(String::as_str).collect();
        prop_assert!(complement_h1(&m, &all).unwrap().is_empty());
    }
}
