use super::graph::PlumbingGraph;
use super::hj::hj_expand;
use super::ResError;
use serde::{Deserialize, Serialize};

/// Graph families. Dashed segments of length `p` are expanded into `p`
/// vertices of weight −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    B23 {
        p: u32,
    },
    C23 {
        p: u32,
    },
    C33 {
        p: u32,
    },
    /// The chain resolving the cyclic quotient of type `n²/(nq−1)`.
    Gnq {
        n: u64,
        q: u64,
    },
    /// Centre of weight `−d` with arms `[4]`, `[4]` and the chain of `2m²/(2m−1)`.
    B23Seifert {
        m: u64,
        d: i64,
    },
}

/// Star: centre `c` of weight `center`; arm `k` gets labels `{k}1, {k}2, …`
/// from the centre outward, with weights `−aᵢ`.
fn star(center: i64, arms: &[(&str, Vec<u64>)]) -> PlumbingGraph {
    let mut g = PlumbingGraph::new();
    let c = g.add_vertex("c", center);
    for (name, arm) in arms {
        let w: Vec<i64> = arm.iter().map(|&a| -(a as i64)).collect();
        g.add_chain(Some(c), name, &w);
    }
    g
}

/// The long arm `[2^p, b, p+k]` read from the centre outward.
fn long_arm(p: u32, b: u64, last: u64) -> Vec<u64> {
    let mut v = vec![2; p as usize];
    v.extend([b, last]);
    v
}

/// Arms of the Seifert star, each read from the centre outward.
pub fn seifert_arms(m: u64) -> Result<Vec<Vec<u64>>, ResError> {
    if m < 1 {
        return Err(ResError::BadInput("m ≥ 1".into()));
    }
    let mut long = hj_expand(2 * m * m, 2 * m - 1)?;
    long.reverse();
    Ok(vec![vec![4], vec![4], long])
}

pub fn family_graph(f: &Family) -> Result<PlumbingGraph, ResError> {
    Ok(match *f {
        Family::B23 { p } => {
            let q = p as u64;
            star(
                -2,
                &[("a", long_arm(p, 3, q + 3)), ("b", vec![4]), ("l", vec![4])],
            )
        }
        Family::C23 { p } => {
            let q = p as u64;
            star(
                -2,
                &[("a", long_arm(p, 2, q + 3)), ("b", vec![3]), ("l", vec![6])],
            )
        }
        Family::C33 { p } => {
            let q = p as u64;
            star(
                -2,
                &[("a", long_arm(p, 2, q + 4)), ("b", vec![2]), ("l", vec![6])],
            )
        }
        Family::Gnq { n, q } => {
            if n < 2 || q < 1 || q > n {
                return Err(ResError::BadInput(format!(
                    "need n ≥ 2 and 1 ≤ q ≤ n, got n={n}, q={q}"
                )));
            }
            let w: Vec<i64> = hj_expand(n * n, n * q - 1)?
                .iter()
                .map(|&a| -(a as i64))
                .collect();
            let mut g = PlumbingGraph::new();
            g.add_chain(None, "e", &w);
            g
        }
        Family::B23Seifert { m, d } => {
            let arms = seifert_arms(m)?;
            star(
                -d,
                &[
                    ("a", arms[2].clone()),
                    ("b", arms[0].clone()),
                    ("l", arms[1].clone()),
                ],
            )
        }
    })
}

/// Smallest `d ≥ 1` such that the star with centre `−d` and the given arms
/// (read from the centre outward) has `|det| = target`.
pub fn solve_central_weight(arms: &[Vec<u64>], target: u128) -> Option<u64> {
    let named: Vec<(String, Vec<u64>)> = arms
        .iter()
        .enumerate()
        .map(|(k, a)| (format!("x{k}_"), a.clone()))
        .collect();
    let refs: Vec<(&str, Vec<u64>)> = named.iter().map(|(n, a)| (n.as_str(), a.clone())).collect();
    // det is affine in the centre weight: expand along the centre's row.
    let beta = star(0, &refs).determinant();
    let alpha = star(-1, &refs).determinant() - beta;
    let t = i128::try_from(target).ok()?;
    if alpha == 0 {
        return (beta.abs() == t).then_some(1);
    }
    [t, -t]
        .iter()
        .filter_map(|&s| {
            let num = s - beta;
            (num % alpha == 0 && num / alpha >= 1).then(|| (num / alpha) as u64)
        })
        .min()
}
