//! Browser bindings for a few `qhd-core` computations. Every export returns
//! a JSON string; the `*_json` functions hold the logic so they can be tested
//! natively.

use qhd_core::matgroup::{self, Variant};
use qhd_core::resgraph::{discriminant_group, family_graph, hj_expand, hj_value, Family};
use serde_json::json;
use wasm_bindgen::prelude::*;

pub fn hj_json(n: u32, q: u32) -> Result<String, String> {
    let chain = hj_expand(n.into(), q.into()).map_err(|e| e.to_string())?;
    let (n2, q2) = hj_value(&chain).map_err(|e| e.to_string())?;
    Ok(json!({"n": n, "q": q, "chain": chain, "value": [n2, q2]}).to_string())
}

pub fn graph_json(family: &str, p: u32) -> Result<String, String> {
    let f = match family {
        "b23" => Family::B23 { p },
        "c23" => Family::C23 { p },
        "c33" => Family::C33 { p },
        other => {
            return Err(format!(
                "unknown family {other:?}; expected b23, c23 or c33"
            ))
        }
    };
    let g = family_graph(&f).map_err(|e| e.to_string())?;
    let d = discriminant_group(&g).map_err(|e| e.to_string())?;
    let edges: Vec<_> = g.labelled_edges().into_iter().collect();
    Ok(json!({
        "family": family,
        "p": p,
        "vertices": g.vertices,
        "edges": edges,
        "discriminant": d,
    })
    .to_string())
}

pub fn matgroup_json(m: u32, prime: bool) -> Result<String, String> {
    if !(1..=12).contains(&m) {
        return Err("m must be between 1 and 12".into());
    }
    let variant = if prime { Variant::GPrime } else { Variant::G };
    let r = matgroup::report(m, variant).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

/// Hirzebruch–Jung chain of `n/q`.
#[wasm_bindgen]
pub fn hj(n: u32, q: u32) -> Result<String, JsError> {
    hj_json(n, q).map_err(|e| JsError::new(&e))
}

/// Resolution graph and discriminant group of a family member.
#[wasm_bindgen]
pub fn graph(family: &str, p: u32) -> Result<String, JsError> {
    graph_json(family, p).map_err(|e| JsError::new(&e))
}

/// Order, centre, abelianization, freeness and Sylow data of `⟨S, T⟩`.
#[wasm_bindgen]
pub fn matgroup(m: u32, prime: bool) -> Result<String, JsError> {
    matgroup_json(m, prime).map_err(|e| JsError::new(&e))
}
