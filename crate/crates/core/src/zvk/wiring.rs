//! Zariski–van Kampen for real line arrangements.
//!
//! Generators are the meridians of the lines at the base fibre `x = x0`.
//! Multiple points are swept outward from the base fibre (increasing `x` on
//! the right, decreasing on the left). At a point where consecutive wires
//! (top to bottom) carry words `w_1 … w_k` we record `[w_k,…,w_1] = 1`, the
//! exceptional meridian `e = w_k ⋯ w_1`, and the wires leave in reverse
//! order carrying
//!
//! ```text
//! w_k,  (w_k⋯w_{i+1}) w_i (w_k⋯w_{i+1})⁻¹  for k-1 ≥ i ≥ 2,  w_1.
//! ```
//!
//! Finally the product of the base meridians from bottom to top is trivial,
//! since no line of the arrangement is at infinity.

use super::{cyclic_relators, MeridianMap, ZvkError};
use crate::fpgroup::{product, Presentation, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

/// Rational number in a fixture: an integer or a string `"p/q"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatLit {
    Int(i64),
    Str(String),
}

impl RatLit {
    fn value(&self) -> Result<BigRational, ZvkError> {
        match self {
            RatLit::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RatLit::Str(s) => {
                let s = s.trim();
                BigRational::from_str(s).map_err(|_| ZvkError::Parse(format!("bad rational `{s}`")))
            }
        }
    }
}

/// Affine lines `a x + b y + c = 0` (none vertical), with labels and an
/// optional base fibre; `points` names multiple points by two lines through them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineArrangement {
    pub labels: Vec<String>,
    pub lines: Vec<[RatLit; 3]>,
    #[serde(default)]
    pub base: Option<RatLit>,
    #[serde(default)]
    pub points: BTreeMap<String, [String; 2]>,
}

struct Point {
    x: BigRational,
    y: BigRational,
    lines: Vec<usize>,
}

impl LineArrangement {
    pub fn from_json(s: &str) -> Result<Self, ZvkError> {
        serde_json::from_str(s).map_err(|e| ZvkError::Parse(e.to_string()))
    }

    fn coeffs(&self) -> Result<Vec<[BigRational; 3]>, ZvkError> {
        self.lines
            .iter()
            .map(|[a, b, c]| Ok([a.value()?, b.value()?, c.value()?]))
            .collect()
    }

    fn multiple_points(&self, ls: &[[BigRational; 3]]) -> Result<Vec<Point>, ZvkError> {
        let mut pts: Vec<Point> = Vec::new();
        for i in 0..ls.len() {
            for j in i + 1..ls.len() {
                let [a1, b1, c1] = &ls[i];
                let [a2, b2, c2] = &ls[j];
                let det = a1 * b2 - a2 * b1;
                if det.is_zero() {
                    if (a1 * c2 - a2 * c1).is_zero() && (b1 * c2 - b2 * c1).is_zero() {
                        return Err(ZvkError::DegenerateArrangement(format!(
                            "lines {} and {} coincide",
                            self.labels[i], self.labels[j]
                        )));
                    }
                    continue;
                }
                let x = (b1 * c2 - b2 * c1) / &det;
                let y = (c1 * a2 - c2 * a1) / &det;
                match pts.iter_mut().find(|p| p.x == x && p.y == y) {
                    Some(p) => {
                        for l in [i, j] {
                            if !p.lines.contains(&l) {
                                p.lines.push(l);
                            }
                        }
                    }
                    None => pts.push(Point {
                        x,
                        y,
                        lines: vec![i, j],
                    }),
                }
            }
        }
        for p in &mut pts {
            p.lines.sort_unstable();
        }
        Ok(pts)
    }
}

fn height(l: &[BigRational; 3], x: &BigRational) -> BigRational {
    let [a, b, c] = l;
    -(a * x + c) / b
}

/// Presentation of `π₁(ℙ² ∖ L)` and the meridians of the lines and of the
/// multiple points.
pub fn wiring_presentation(arr: &LineArrangement) -> Result<(Presentation, MeridianMap), ZvkError> {
    let n = arr.lines.len();
    if arr.labels.len() != n {
        return Err(ZvkError::Parse("one label per line required".into()));
    }
    let ls = arr.coeffs()?;
    if let Some(i) = ls.iter().position(|l| l[1].is_zero()) {
        return Err(ZvkError::DegenerateArrangement(format!(
            "line {} is vertical",
            arr.labels[i]
        )));
    }
    let pts = arr.multiple_points(&ls)?;
    for (i, p) in pts.iter().enumerate() {
        if pts[i + 1..].iter().any(|q| q.x == p.x) {
            return Err(ZvkError::DegenerateArrangement(format!(
                "two multiple points share x = {}",
                p.x
            )));
        }
    }
    let x0 = match &arr.base {
        Some(b) => b.value()?,
        None => {
            // left of every multiple point
            let min = pts
                .iter()
                .map(|p| p.x.clone())
                .min()
                .unwrap_or_else(BigRational::zero);
            min - BigRational::from_integer(1.into())
        }
    };
    if pts.iter().any(|p| p.x == x0) {
        return Err(ZvkError::DegenerateArrangement(
            "base fibre passes through a multiple point".into(),
        ));
    }

    // wires top to bottom at the base fibre
    let mut base_order: Vec<usize> = (0..n).collect();
    base_order.sort_by(|&i, &j| height(&ls[j], &x0).cmp(&height(&ls[i], &x0)));
    for w in base_order.windows(2) {
        if height(&ls[w[0]], &x0) == height(&ls[w[1]], &x0) {
            return Err(ZvkError::DegenerateArrangement(
                "base fibre is not generic".into(),
            ));
        }
    }

    let mut right: Vec<&Point> = pts.iter().filter(|p| p.x > x0).collect();
    right.sort_by(|p, q| p.x.cmp(&q.x));
    let mut left: Vec<&Point> = pts.iter().filter(|p| p.x < x0).collect();
    left.sort_by(|p, q| q.x.cmp(&p.x));

    let mut relators = vec![product(
        base_order
            .iter()
            .rev()
            .map(|&l| Word::gen(l))
            .collect::<Vec<_>>()
            .iter(),
    )];
    let mut mm = MeridianMap::new();
    for (i, lab) in arr.labels.iter().enumerate() {
        mm.insert(lab.clone(), Word::gen(i));
    }
    let label_of = |p: &Point| -> String {
        arr.points
            .iter()
            .find(|(_, [u, v])| {
                let has = |s: &String| {
                    arr.labels
                        .iter()
                        .position(|l| l == s)
                        .is_some_and(|i| p.lines.contains(&i))
                };
                has(u) && has(v)
            })
            .map(|(k, _)| k.clone())
            .unwrap_or_else(|| {
                let names: Vec<&str> = p.lines.iter().map(|&i| arr.labels[i].as_str()).collect();
                format!("P_{}", names.join("_"))
            })
    };
    for name in arr.points.keys() {
        let [u, v] = &arr.points[name];
        for s in [u, v] {
            if !arr.labels.contains(s) {
                return Err(ZvkError::UnknownLabel(s.clone()));
            }
        }
    }

    for side in [&right, &left] {
        let mut order = base_order.clone();
        let mut words: Vec<Word> = order.iter().map(|&l| Word::gen(l)).collect();
        for p in side.iter() {
            let pos: Vec<usize> = p
                .lines
                .iter()
                .map(|l| order.iter().position(|x| x == l).expect("line present"))
                .collect();
            let (lo, hi) = (*pos.iter().min().unwrap(), *pos.iter().max().unwrap());
            let k = p.lines.len();
            if hi - lo + 1 != k {
                return Err(ZvkError::DegenerateArrangement(format!(
                    "wires through {} are not adjacent",
                    label_of(p)
                )));
            }
            let w: Vec<Word> = words[lo..=hi].to_vec();
            let rev: Vec<Word> = w.iter().rev().cloned().collect();
            relators.extend(cyclic_relators(&rev));
            mm.insert(label_of(p), product(&rev));
            // new words, top to bottom
            let mut nw = Vec::with_capacity(k);
            for t in 0..k {
                let i = k - 1 - t; // wire w_{i+1} (0-based i) lands at slot t
                let v = if i == 0 || i == k - 1 {
                    w[i].clone()
                } else {
                    let c = product(&rev[..k - 1 - i]);
                    w[i].conj(&c)
                };
                nw.push(v);
            }
            words.splice(lo..=hi, nw);
            order[lo..=hi].reverse();
        }
    }

    let p = Presentation::new(arr.labels.clone(), relators)
        .map_err(|e| ZvkError::Parse(e.to_string()))?;
    Ok((p, mm))
}
