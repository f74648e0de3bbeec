use super::blowup::{complement_h1, dual_graph, BlowupModel};
use super::graph::PlumbingGraph;
use super::ResError;
use crate::template::expand_template;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const B23_BLOWUPS: &str = include_str!("../../data/b23_blowups.json");
pub const C23_BLOWUPS: &str = include_str!("../../data/c23_blowups.json");
pub const C33_BLOWUPS: &str = include_str!("../../data/c33_blowups.json");

/// A blow-up sequence over a plane curve configuration. Labels and counts
/// may use the templates `{p…}` and, inside towers, `{j…}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupScript {
    pub curves: Vec<(String, i64)>,
    pub steps: Vec<Step>,
    /// Components left out of the divisor; all others are kept.
    pub gray: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Step {
    /// `count` successive blow-ups `label(j)`, `j = 1..=count`: the first
    /// at a point on the curves `first`, each later one on `then`
    /// (typically the previous exceptional curve and a strict transform).
    Tower {
        tower: String,
        count: String,
        first: BTreeMap<String, i64>,
        then: BTreeMap<String, i64>,
    },
    Point {
        label: String,
        through: BTreeMap<String, i64>,
    },
}

#[derive(Clone, Debug)]
pub struct ScriptedModel {
    pub model: BlowupModel,
    /// Kept components, in creation order.
    pub black: Vec<String>,
    pub gray: Vec<String>,
}

impl ScriptedModel {
    fn black_refs(&self) -> Vec<&str> {
        self.black.iter().map(String::as_str).collect()
    }

    pub fn graph(&self) -> Result<PlumbingGraph, ResError> {
        dual_graph(&self.model, &self.black_refs())
    }

    pub fn h1(&self) -> Result<Vec<i128>, ResError> {
        complement_h1(&self.model, &self.black_refs())
    }
}

fn apply(
    model: &BlowupModel,
    through: &BTreeMap<String, i64>,
    label: &str,
    vars: &[(&str, i64)],
) -> Result<BlowupModel, ResError> {
    let names = through
        .keys()
        .map(|k| expand_template(k, vars))
        .collect::<Result<Vec<_>, _>>()?;
    let pts: Vec<(&str, i64)> = names
        .iter()
        .map(String::as_str)
        .zip(through.values().copied())
        .collect();
    model.blowup(&pts, label)
}

pub fn run_script(script: &BlowupScript, p: u32) -> Result<ScriptedModel, ResError> {
    let pv = p as i64;
    let curves: Vec<(&str, i64)> = script
        .curves
        .iter()
        .map(|(l, d)| (l.as_str(), *d))
        .collect();
    let mut m = BlowupModel::plane(&curves)?;
    for step in &script.steps {
        match step {
            Step::Point { label, through } => {
                let vars = [("p", pv)];
                m = apply(&m, through, &expand_template(label, &vars)?, &vars)?;
            }
            Step::Tower {
                tower,
                count,
                first,
                then,
            } => {
                let count: i64 = expand_template(count, &[("p", pv)])?
                    .parse()
                    .map_err(|_| ResError::Script(format!("bad tower count `{count}`")))?;
                for j in 1..=count {
                    let vars = [("p", pv), ("j", j)];
                    let label = expand_template(tower, &vars)?;
                    m = apply(&m, if j == 1 { first } else { then }, &label, &vars)?;
                }
            }
        }
    }
    let gray = script
        .gray
        .iter()
        .map(|g| expand_template(g, &[("p", pv)]))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(g) = gray.iter().find(|g| m.class(g).is_none()) {
        return Err(ResError::UnknownCurve(g.clone()));
    }
    let black = m
        .labels()
        .iter()
        .filter(|l| !gray.contains(l))
        .cloned()
        .collect();
    Ok(ScriptedModel {
        model: m,
        black,
        gray,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelFamily {
    /// Seven lines, towards the `B²₃(p)` Milnor fibre.
    B23,
    /// Conic, nodal cubic and a line.
    C23,
    /// Conic and nodal cubic.
    C33,
}

impl ModelFamily {
    pub fn script(self) -> BlowupScript {
        let src = match self {
            ModelFamily::B23 => B23_BLOWUPS,
            ModelFamily::C23 => C23_BLOWUPS,
            ModelFamily::C33 => C33_BLOWUPS,
        };
        serde_json::from_str(src).expect("bundled blow-up script parses")
    }
}

pub fn family_model(f: ModelFamily, p: u32) -> Result<ScriptedModel, ResError> {
    run_script(&f.script(), p)
}
