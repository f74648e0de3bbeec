use super::graph::{PlumbingGraph, Vertex};
use super::ResError;
use crate::smith::cokernel_invariants;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupRecord {
    pub label: String,
    pub through: Vec<(String, i64)>,
}

/// Curves on an iterated blow-up of `ℙ²`, as classes in `ℤ^{1+n}` with
/// basis `H, E₁, …, Eₙ` and form `diag(1, −1, …, −1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupModel {
    labels: Vec<String>,
    classes: Vec<Vec<i64>>,
    log: Vec<BlowupRecord>,
}

impl BlowupModel {
    /// Plane curves of the given degrees.
    pub fn plane(curves: &[(&str, i64)]) -> Result<Self, ResError> {
        let mut m = BlowupModel {
            labels: Vec::new(),
            classes: Vec::new(),
            log: Vec::new(),
        };
        for &(l, d) in curves {
            if m.index(l).is_some() {
                return Err(ResError::BadInput(format!("duplicate curve `{l}`")));
            }
            m.labels.push(l.to_string());
            m.classes.push(vec![d]);
        }
        Ok(m)
    }

    /// `1 + n`.
    pub fn rank(&self) -> usize {
        1 + self.log.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn log(&self) -> &[BlowupRecord] {
        &self.log
    }

    fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn idx(&self, label: &str) -> Result<usize, ResError> {
        self.index(label)
            .ok_or_else(|| ResError::UnknownCurve(label.to_string()))
    }

    pub fn class(&self, label: &str) -> Option<&[i64]> {
        self.index(label).map(|i| self.classes[i].as_slice())
    }

    pub fn product(&self, a: &str, b: &str) -> Result<i64, ResError> {
        Ok(dot(
            &self.classes[self.idx(a)?],
            &self.classes[self.idx(b)?],
        ))
    }

    pub fn self_intersection(&self, a: &str) -> Result<i64, ResError> {
        self.product(a, a)
    }

    /// Arithmetic genus by adjunction, `K = −3H + ΣEᵢ`.
    pub fn arithmetic_genus(&self, a: &str) -> Result<i64, ResError> {
        let c = &self.classes[self.idx(a)?];
        let kc = -3 * c[0] - c[1..].iter().sum::<i64>();
        Ok(1 + (dot(c, c) + kc) / 2)
    }

    pub fn blowup(&self, through: &[(&str, i64)], label: &str) -> Result<Self, ResError> {
        blowup(self, through, label)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[0] - a[1..].iter().zip(&b[1..]).map(|(x, y)| x * y).sum::<i64>()
}

/// Blows up a point lying on the listed curves with the given multiplicities;
/// the exceptional curve is added under `label`.
pub fn blowup(
    model: &BlowupModel,
    through: &[(&str, i64)],
    label: &str,
) -> Result<BlowupModel, ResError> {
    if model.index(label).is_some() {
        return Err(ResError::BadInput(format!("duplicate curve `{label}`")));
    }
    let mut hits = Vec::with_capacity(through.len());
    for &(l, mult) in through {
        if mult < 1 {
            return Err(ResError::BadInput(format!("multiplicity {mult} of `{l}`")));
        }
        let i = model.idx(l)?;
        if hits.iter().any(|&(j, _)| j == i) {
            return Err(ResError::BadInput(format!("`{l}` listed twice")));
        }
        hits.push((i, mult));
    }
    let mut m = model.clone();
    for c in &mut m.classes {
        c.resize(model.rank(), 0);
        c.push(0);
    }
    for (i, mult) in hits {
        *m.classes[i].last_mut().unwrap() = -mult;
    }
    let mut e = vec![0; m.rank() + 1];
    e[m.rank()] = 1;
    m.labels.push(label.to_string());
    m.classes.push(e);
    m.log.push(BlowupRecord {
        label: label.to_string(),
        through: through.iter().map(|&(l, k)| (l.to_string(), k)).collect(),
    });
    Ok(m)
}

/// Dual graph of the chosen components: weights are self-intersections,
/// genera come from adjunction, edges join curves meeting once.
pub fn dual_graph(model: &BlowupModel, components: &[&str]) -> Result<PlumbingGraph, ResError> {
    let mut g = PlumbingGraph::new();
    for (k, &a) in components.iter().enumerate() {
        if components[..k].contains(&a) {
            return Err(ResError::BadInput(format!("`{a}` listed twice")));
        }
        let genus = model.arithmetic_genus(a)?;
        g.vertices.push(Vertex {
            label: a.to_string(),
            weight: model.self_intersection(a)?,
            genus: u32::try_from(genus)
                .map_err(|_| ResError::BadInput(format!("`{a}` has genus {genus}")))?,
        });
    }
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            match model.product(components[i], components[j])? {
                0 => {}
                1 => g.add_edge(i, j),
                product => {
                    return Err(ResError::NotSnc {
                        a: components[i].to_string(),
                        b: components[j].to_string(),
                        product,
                    })
                }
            }
        }
    }
    Ok(g)
}

/// `H₁` of the complement of the chosen components: invariant factors of
/// `ℤ^{1+n}` modulo their classes, one `0` per free summand.
pub fn complement_h1(model: &BlowupModel, components: &[&str]) -> Result<Vec<i128>, ResError> {
    let rows = components
        .iter()
        .map(|&a| {
            let c = &model.classes[model.idx(a)?];
            let mut r: Vec<i128> = c.iter().map(|&x| x as i128).collect();
            r.resize(model.rank(), 0);
            Ok(r)
        })
        .collect::<Result<Vec<_>, ResError>>()?;
    Ok(cokernel_invariants(&rows, model.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_of_cubic() {
        let m = BlowupModel::plane(&[("C3", 3)]).unwrap();
        assert_eq!(m.arithmetic_genus("C3").unwrap(), 1);
        let m = m.blowup(&[("C3", 2)], "E1").unwrap();
        assert_eq!(m.class("C3").unwrap(), &[3, -2]);
        assert_eq!(m.self_intersection("C3").unwrap(), 5);
        assert_eq!(m.self_intersection("E1").unwrap(), -1);
        assert_eq!(m.product("C3", "E1").unwrap(), 2);
        assert_eq!(m.arithmetic_genus("C3").unwrap(), 0);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn errors() {
        let m = BlowupModel::plane(&[("L", 1)]).unwrap();
        assert_eq!(
            m.blowup(&[("M", 1)], "E"),
            Err(ResError::UnknownCurve("M".into()))
        );
        assert!(m.blowup(&[("L", 0)], "E").is_err());
        assert!(m.blowup(&[("L", 1)], "L").is_err());
        let m = m.blowup(&[("L", 1)], "E").unwrap();
        let m = m.blowup(&[("E", 1), ("L", 1)], "F").unwrap();
        let m = m.blowup(&[("F", 1), ("L", 1)], "G").unwrap();
        // L·E = 0, L·F = 0, L·G = 1; tangency of order 3 separated
        assert!(dual_graph(&m, &["L", "E", "F", "G"]).is_ok());
        let tangent = BlowupModel::plane(&[("Q", 2), ("L", 1)]).unwrap();
        assert!(matches!(
            dual_graph(&tangent, &["Q", "L"]),
            Err(ResError::NotSnc { product: 2, .. })
        ));
    }

    #[test]
    fn disjoint_exceptionals() {
        let m = BlowupModel::plane(&[]).unwrap();
        let m = m.blowup(&[], "E1").unwrap().blowup(&[], "E2").unwrap();
        let g = dual_graph(&m, &["E1", "E2"]).unwrap();
        assert!(g.edges.is_empty());
        assert_eq!(complement_h1(&m, &["E1", "E2"]).unwrap(), vec![0]);
    }

    #[test]
    fn line_complement() {
        let m = BlowupModel::plane(&[("L", 1), ("Q", 2)]).unwrap();
        assert_eq!(complement_h1(&m, &["L"]).unwrap(), Vec::<i128>::new());
        assert_eq!(complement_h1(&m, &["Q"]).unwrap(), vec![2]);
    }
}
