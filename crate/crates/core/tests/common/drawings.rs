//! Black components of the blow-up models, drawn by hand.

#![allow(dead_code)]

use qhd_core::resgraph::PlumbingGraph;
use std::collections::{BTreeMap, BTreeSet};

pub type Drawing = (BTreeMap<String, i64>, BTreeSet<(String, String)>);

pub fn weights(g: &PlumbingGraph) -> BTreeMap<String, i64> {
    g.vertices
        .iter()
        .map(|v| (v.label.clone(), v.weight))
        .collect()
}

pub fn edge_set(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs
        .iter()
        .map(|&(a, b)| {
            if a <= b {
                (a.into(), b.into())
            } else {
                (b.into(), a.into())
            }
        })
        .collect()
}

pub fn chain_edges(labels: &[String]) -> Vec<(String, String)> {
    labels
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect()
}

pub fn owned(v: Vec<(String, String)>) -> BTreeSet<(String, String)> {
    v.into_iter()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect()
}

/// The black components of the seven-line model, drawn by hand.
pub fn b23_drawing(p: u32) -> Drawing {
    let mut w: BTreeMap<String, i64> = ["L1", "L2", "L3", "L4", "A2", "E14", "E23"]
        .iter()
        .map(|l| (l.to_string(), -2))
        .collect();
    w.insert("E12".into(), -1);
    w.insert("A1".into(), -(p as i64 + 2));
    w.insert("A3".into(), -3);
    let tower: Vec<String> = (1..=p).map(|j| format!("E3_{j}")).collect();
    for t in &tower {
        w.insert(t.clone(), -2);
    }
    let mut e = edge_set(&[
        ("L4", "E14"),
        ("E14", "L1"),
        ("L1", "E12"),
        ("E12", "L2"),
        ("L2", "E23"),
        ("E23", "L3"),
        ("E12", "A1"),
        ("A1", "A3"),
        ("A3", "A2"),
    ]);
    let mut path = vec!["A2".to_string()];
    path.extend(tower);
    e.extend(owned(chain_edges(&path)));
    (w, e)
}

/// Conic, cubic and line: `EP – C3 – EQ6 – C2 – Tinf – F1 – … – Fp` and
/// the branch `EQ6 – EQ5 – … – EQ1`.
pub fn c23_drawing(p: u32) -> Drawing {
    let mut path: Vec<String> = ["EP", "C3", "EQ6", "C2", "Tinf"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    path.extend((1..=p).map(|j| format!("F{j}")));
    let branch: Vec<String> = (1..=6).rev().map(|j| format!("EQ{j}")).collect();
    let mut w: BTreeMap<String, i64> = path
        .iter()
        .chain(&branch)
        .map(|l| (l.clone(), -2))
        .collect();
    w.insert("EQ6".into(), -1);
    w.insert("C2".into(), -(p as i64 + 3));
    let mut e = owned(chain_edges(&path));
    e.extend(owned(chain_edges(&branch)));
    (w, e)
}

/// Conic and cubic: `E_{p+1} – … – E1 – E0 – C3 – EQ6 – C2` and `EQ6 – … – EQ1`.
pub fn c33_drawing(p: u32) -> Drawing {
    let mut path: Vec<String> = (0..=p + 1).rev().map(|j| format!("E{j}")).collect();
    path.extend(["C3", "EQ6", "C2"].iter().map(|s| s.to_string()));
    let branch: Vec<String> = (1..=6).rev().map(|j| format!("EQ{j}")).collect();
    let mut w: BTreeMap<String, i64> = path
        .iter()
        .chain(&branch)
        .map(|l| (l.clone(), -2))
        .collect();
    w.insert("EQ6".into(), -1);
    w.insert("C3".into(), -(p as i64 + 3));
    let mut e = owned(chain_edges(&path));
    e.extend(owned(chain_edges(&branch)));
    (w, e)
}
