//! Presentations from explicit braid-monodromy data.
//!
//! For an event with connecting braid `τ` and local braid `β`, every strand
//! generator satisfies `x_j = x_j · (τ β τ⁻¹)` (right Artin action). An event
//! whose fibre is itself a component of the curve adds one generator `f`
//! (its meridian); if that fibre meets the curve in groups of strands
//! `S_1, S_2, …` (1-based, in the basis transported by `τ`), each group gives
//! the cyclic relation `[f, x'_{s_1}, x'_{s_2}, …] = 1` with `x' = x · τ`.

use super::{artin_act, cyclic_relators, BraidWord, MeridianMap, ZvkError};
use crate::fpgroup::{Presentation, Word};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonodromyEvent {
    #[serde(default = "trivial")]
    pub tau: String,
    #[serde(default = "trivial")]
    pub beta: String,
    #[serde(default)]
    pub vertical: Option<String>,
    #[serde(default)]
    pub meets: Vec<Vec<usize>>,
}

fn trivial() -> String {
    "1".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BraidMonodromyData {
    pub strands: usize,
    /// Names of the geometric-basis meridians, in basis order.
    pub names: Vec<String>,
    pub events: Vec<MonodromyEvent>,
}

impl BraidMonodromyData {
    pub fn from_json(s: &str) -> Result<Self, ZvkError> {
        serde_json::from_str(s).map_err(|e| ZvkError::Parse(e.to_string()))
    }
}

pub fn braid_monodromy_presentation(
    d: &BraidMonodromyData,
) -> Result<(Presentation, MeridianMap), ZvkError> {
    let n = d.strands;
    if d.names.len() != n {
        return Err(ZvkError::Parse("one name per strand required".into()));
    }
    let mut names = d.names.clone();
    let mut relators = Vec::new();
    for ev in &d.events {
        let tau = BraidWord::parse(n, &ev.tau)?;
        let beta = BraidWord::parse(n, &ev.beta)?;
        let b = beta.conjugate_by(&tau);
        for j in 0..n {
            let x = Word::gen(j);
            let r = artin_act(&b, &x).mul(&x.inv());
            if !r.is_empty() {
                relators.push(r);
            }
        }
        if let Some(v) = &ev.vertical {
            if names.contains(v) {
                return Err(ZvkError::Parse(format!("duplicate generator `{v}`")));
            }
            names.push(v.clone());
            let f = Word::gen(names.len() - 1);
            let moved = tau.images();
            for group in &ev.meets {
                let mut ws = vec![f.clone()];
                for &s in group {
                    if s == 0 || s > n {
                        return Err(ZvkError::Parse(format!("strand {s} out of range")));
                    }
                    ws.push(moved[s - 1].clone());
                }
                relators.extend(cyclic_relators(&ws));
            }
        }
    }
    let mm: MeridianMap = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), Word::gen(i)))
        .collect();
    let p = Presentation::new(names, relators).map_err(|e| ZvkError::Parse(e.to_string()))?;
    Ok((p, mm))
}
