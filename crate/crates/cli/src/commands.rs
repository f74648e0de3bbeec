use crate::report::Report;
use crate::*;
use qhd_core::fpgroup::{
    abelian_invariants, b23_presentation, coset_enumerate, group_order, parse_word, FpError,
    Presentation,
};
use qhd_core::matgroup::{self, MatError, Variant};
use qhd_core::polyalg::{rational, PolyError, PolyMap, SparsePolynomial};
use qhd_core::resgraph::{
    discriminant_group, family_graph, hj_expand, hj_value, run_script, seifert_arms,
    solve_central_weight, Family, ModelFamily, PlumbingGraph, ResError,
};
use qhd_core::verify::{self, Fixtures, VerifyError};
use qhd_core::zvk::{
    artin_act, braid_monodromy_presentation, wiring_presentation, BraidMonodromyData, BraidWord,
    LineArrangement, MeridianMap, ZvkError,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::path::Path;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Fp(#[from] FpError),
    #[error(transparent)]
    Zvk(#[from] ZvkError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Res(#[from] ResError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub struct Output {
    pub text: String,
    /// false when a mathematical check failed
    pub ok: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn fixtures(cli: &Cli) -> Result<Fixtures, CliError> {
    match &cli.data {
        None => Ok(Fixtures::bundled()),
        Some(d) if d.is_dir() => Ok(Fixtures::from_dir(d)?),
        Some(d) => Err(CliError::Usage(format!(
            "--data {}: not a directory",
            d.display()
        ))),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let start = Instant::now();
    let (command, inputs, results, ok) = dispatch(cli)?;
    let report = Report {
        command,
        inputs,
        results,
        timing_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let text = if cli.pretty {
        report.pretty()
    } else {
        report.json()
    };
    Ok(Output { text, ok })
}

type Dispatched = (String, Value, Value, bool);

fn dispatch(cli: &Cli) -> Result<Dispatched, CliError> {
    match &cli.command {
        Command::Group(a) => group(a),
        Command::Zvk(a) => zvk(cli, a),
        Command::Matgroup(a) => {
            let variant = match a.variant {
                VariantArg::G => Variant::G,
                VariantArg::GPrime => Variant::GPrime,
            };
            let r = matgroup::report(a.m, variant)?;
            Ok((
                "matgroup".into(),
                json!({"m": a.m, "variant": variant}),
                value(&r),
                true,
            ))
        }
        Command::Graph(a) => graph(a),
        Command::H1(a) => h1(cli, a),
        Command::Poly(a) => poly(a),
        Command::Verify(a) => verify(cli, a),
        Command::Hj(a) => hj(a),
    }
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "gens": p.names(),
        "relators": p.relators().iter().map(|r| p.format(r)).collect::<Vec<_>>(),
    })
}

fn group(a: &GroupArgs) -> Result<Dispatched, CliError> {
    let (p, inputs, subgroup) = match &a.source {
        GroupSource::B23 { p } => {
            let g = b23_presentation(*p);
            let a_word = g.word("a")?;
            (
                g,
                json!({"family": "b23", "p": p}),
                vec![("a".to_string(), a_word)],
            )
        }
        GroupSource::File { path, subgroup } => {
            let g = Presentation::from_json(&read(path)?)?;
            let words = subgroup
                .iter()
                .map(|s| Ok((s.clone(), g.word(s)?)))
                .collect::<Result<Vec<_>, FpError>>()?;
            (
                g,
                json!({"file": path.display().to_string(), "subgroup": subgroup}),
                words,
            )
        }
    };
    let order = group_order(&p, a.max_cosets).finite();
    let mut results = json!({
        "presentation": presentation_json(&p),
        "order": order,
        "ab": abelian_invariants(&p),
    });
    if !subgroup.is_empty() {
        let gens: Vec<_> = subgroup.iter().map(|(_, w)| w.clone()).collect();
        let idx = coset_enumerate(&p, &gens, a.max_cosets).index();
        results["subgroup"] = json!({
            "gens": subgroup.iter().map(|(s, _)| s).collect::<Vec<_>>(),
            "index": idx,
        });
    }
    let mut inputs = inputs;
    inputs["max_cosets"] = json!(a.max_cosets);
    Ok(("group".into(), inputs, results, true))
}

fn meridians_json(p: &Presentation, mm: &MeridianMap) -> Value {
    mm.iter()
        .map(|(k, w)| (k.clone(), Value::String(p.format(w))))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn zvk(cli: &Cli, a: &ZvkArgs) -> Result<Dispatched, CliError> {
    match &a.source {
        ZvkSource::Arrangement { path } => {
            let arr = match path {
                Some(p) => LineArrangement::from_json(&read(p)?)?,
                None => fixtures(cli)?.arrangement()?,
            };
            let (g, mm) = wiring_presentation(&arr)?;
            let inputs = json!({"source": path.as_ref().map_or("seven_lines.json".into(), |p| p.display().to_string())});
            let results = json!({
                "presentation": presentation_json(&g),
                "ab": abelian_invariants(&g),
                "meridians": meridians_json(&g, &mm),
            });
            Ok(("zvk arrangement".into(), inputs, results, true))
        }
        ZvkSource::Monodromy { path } => {
            let text = match path {
                Some(p) => read(p)?,
                None => fixtures(cli)?.c23_monodromy,
            };
            let data = BraidMonodromyData::from_json(&text)?;
            let (g, mm) = braid_monodromy_presentation(&data)?;
            let inputs = json!({"source": path.as_ref().map_or("c23_monodromy.json".into(), |p| p.display().to_string())});
            let results = json!({
                "presentation": presentation_json(&g),
                "ab": abelian_invariants(&g),
                "meridians": meridians_json(&g, &mm),
            });
            Ok(("zvk monodromy".into(), inputs, results, true))
        }
        ZvkSource::Act {
            strands,
            braid,
            word,
        } => {
            let b = BraidWord::parse(*strands, braid)?;
            let names: Vec<String> = (1..=*strands).map(|i| format!("x{i}")).collect();
            let w = parse_word(word, &names)?;
            let free = Presentation::new(names, vec![])?;
            let inputs = json!({"strands": strands, "braid": braid, "word": word});
            let results = json!({
                "image": free.format(&artin_act(&b, &w)),
                "generators": b.images().iter().map(|x| free.format(x)).collect::<Vec<_>>(),
            });
            Ok(("zvk act".into(), inputs, results, true))
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("graph {family} requires --{flag}")))
}

fn graph_json(g: &PlumbingGraph) -> Value {
    json!({
        "vertices": g.vertices,
        "edges": g.labelled_edges().into_iter().map(|(a, b)| vec![a, b]).collect::<Vec<_>>(),
        "negative_definite": g.is_negative_definite(),
    })
}

fn graph(a: &GraphArgs) -> Result<Dispatched, CliError> {
    let (family, inputs) = match a.family {
        FamilyArg::B23 => {
            let p = need(a.p, "p", "b23")?;
            (Family::B23 { p }, json!({"family": "b23", "p": p}))
        }
        FamilyArg::C23 => {
            let p = need(a.p, "p", "c23")?;
            (Family::C23 { p }, json!({"family": "c23", "p": p}))
        }
        FamilyArg::C33 => {
            let p = need(a.p, "p", "c33")?;
            (Family::C33 { p }, json!({"family": "c33", "p": p}))
        }
        FamilyArg::Gnq => {
            let (n, q) = (need(a.n, "n", "gnq")?, need(a.q, "q", "gnq")?);
            (
                Family::Gnq { n, q },
                json!({"family": "gnq", "n": n, "q": q}),
            )
        }
        FamilyArg::Seifert => {
            let m = need(a.m, "m", "seifert")?;
            let d = match a.d {
                Some(d) => d,
                // the weight that makes the discriminant order 16(m+1)²
                None => solve_central_weight(&seifert_arms(m)?, 16 * (m as u128 + 1).pow(2))
                    .map(|d| d as i64)
                    .ok_or_else(|| CliError::Usage(format!("no central weight for m = {m}")))?,
            };
            (
                Family::B23Seifert { m, d },
                json!({"family": "seifert", "m": m, "d": a.d}),
            )
        }
    };
    let g = family_graph(&family)?;
    let mut results = graph_json(&g);
    if let Family::B23Seifert { d, .. } = family {
        results["central_weight"] = json!(d);
    }
    if a.discriminant {
        results["discriminant"] = value(&discriminant_group(&g)?);
    }
    let mut inputs = inputs;
    inputs["discriminant"] = json!(a.discriminant);
    Ok(("graph".into(), inputs, results, true))
}

fn h1(cli: &Cli, a: &H1Args) -> Result<Dispatched, CliError> {
    let (f, name) = match a.family {
        ModelArg::B23 => (ModelFamily::B23, "b23"),
        ModelArg::C23 => (ModelFamily::C23, "c23"),
        ModelArg::C33 => (ModelFamily::C33, "c33"),
    };
    let m = run_script(&fixtures(cli)?.script(f)?, a.p)?;
    let h1 = m.h1()?;
    let g = m.graph()?;
    let results = json!({
        "h1": h1,
        "order": h1.iter().product::<i128>(),
        "cyclic": h1.len() <= 1,
        "rank": m.model.rank(),
        "black": graph_json(&g),
        "gray": m.gray,
    });
    Ok((
        "h1".into(),
        json!({"family": name, "p": a.p}),
        results,
        true,
    ))
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn poly(a: &PolyArgs) -> Result<Dispatched, CliError> {
    match &a.op {
        PolyOp::Degree {
            expr,
            vars,
            weights,
        } => {
            let f = SparsePolynomial::parse(expr, &strs(vars))?;
            let mut results = json!({
                "polynomial": f.to_string(),
                "degree": f.total_degree(),
                "min_degree": f.min_degree(),
            });
            if !weights.is_empty() {
                if weights.len() != vars.len() {
                    return Err(CliError::Usage(format!(
                        "--weights needs {} entries",
                        vars.len()
                    )));
                }
                results["weighted_degree"] = json!(f.weighted_degree(weights));
                results["weighted_homogeneous"] = json!(f.is_weighted_homogeneous(weights));
            }
            Ok((
                "poly degree".into(),
                json!({"expr": expr, "vars": vars, "weights": weights}),
                results,
                true,
            ))
        }
        PolyOp::Eval { expr, vars, at } => {
            let f = SparsePolynomial::parse(expr, &strs(vars))?;
            if at.len() != vars.len() {
                return Err(CliError::Usage(format!(
                    "--at needs {} coordinates",
                    vars.len()
                )));
            }
            let pt: Vec<_> = at.iter().map(|&x| rational(x, 1)).collect();
            let v = f.evaluate(&pt).ok_or_else(|| {
                CliError::Usage("polynomial has root-of-unity coefficients".into())
            })?;
            let results = json!({"value": v.to_string(), "vanishes": v == rational(0, 1)});
            Ok((
                "poly eval".into(),
                json!({"expr": expr, "vars": vars, "at": at}),
                results,
                true,
            ))
        }
        PolyOp::Cone {
            expr,
            vars,
            chart,
            chart_vars,
        } => {
            let f = SparsePolynomial::parse(expr, &strs(vars))?;
            let exprs: Vec<&str> = chart.split(';').map(str::trim).collect();
            let map = PolyMap::parse(&exprs, &strs(chart_vars))?;
            let cone = f.tangent_cone(&map)?;
            let results = json!({"cone": cone.to_string(), "multiplicity": cone.total_degree()});
            let inputs =
                json!({"expr": expr, "vars": vars, "chart": exprs, "chart_vars": chart_vars});
            Ok(("poly cone".into(), inputs, results, true))
        }
        PolyOp::Divide {
            expr,
            divisor,
            vars,
        } => {
            let f = SparsePolynomial::parse(expr, &strs(vars))?;
            let g = SparsePolynomial::parse(divisor, &strs(vars))?;
            let q = f.divide_exact(&g);
            let results = json!({"divides": q.is_some(), "quotient": q.map(|q| q.to_string())});
            Ok((
                "poly divide".into(),
                json!({"expr": expr, "divisor": divisor, "vars": vars}),
                results,
                true,
            ))
        }
    }
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<Dispatched, CliError> {
    let fx = fixtures(cli)?;
    let sources: serde_json::Map<String, Value> = fx
        .sources
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    let (name, inputs, results, ok) = match &a.target {
        VerifyTarget::B23 { p } => {
            let r = verify::verify_b23(&fx, *p)?;
            ("b23", json!({"p": p}), value(&r), r.ok)
        }
        VerifyTarget::C23 { p } => {
            let r = verify::verify_c23(&fx, *p)?;
            ("c23", json!({"p": p}), value(&r), r.ok)
        }
        VerifyTarget::C33 { p } => {
            let r = verify::verify_c33(&fx, *p)?;
            ("c33", json!({"p": p}), value(&r), r.ok)
        }
        VerifyTarget::Matgroup { m } => {
            if *m < 1 {
                return Err(CliError::Usage("--m must be at least 1".into()));
            }
            let r = verify::verify_matgroup(*m)?;
            ("matgroup", json!({"m": m}), value(&r), r.ok)
        }
        VerifyTarget::Poly => {
            let r = verify::verify_poly()?;
            ("poly", json!({}), value(&r), r.ok)
        }
        VerifyTarget::All { max_p, max_m } => {
            if *max_m < 2 {
                return Err(CliError::Usage("--max-m must be at least 2".into()));
            }
            let r = verify::verify_all(&fx, *max_p, *max_m)?;
            (
                "all",
                json!({"max_p": max_p, "max_m": max_m}),
                value(&r),
                r.ok,
            )
        }
    };
    let mut inputs = inputs;
    inputs["fixtures"] = Value::Object(sources);
    Ok((format!("verify {name}"), inputs, results, ok))
}

fn hj(a: &HjArgs) -> Result<Dispatched, CliError> {
    let chain = hj_expand(a.n, a.q)?;
    let (n, q) = hj_value(&chain)?;
    let results = json!({
        "chain": chain,
        "value": [n, q],
        "dual": (a.q < a.n).then(|| hj_expand(a.n, a.n - a.q)).transpose()?,
    });
    Ok(("hj".into(), json!({"n": a.n, "q": a.q}), results, true))
}
