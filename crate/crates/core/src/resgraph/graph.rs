use super::ResError;
use crate::smith::{cokernel_invariants, determinant, leading_minors};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    /// Self-intersection.
    pub weight: i64,
    #[serde(default)]
    pub genus: u32,
}

/// A weighted graph; each edge is one transverse intersection.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingGraph {
    pub vertices: Vec<Vertex>,
    /// Pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, weight: i64) -> usize {
        self.vertices.push(Vertex {
            label: label.into(),
            weight,
            genus: 0,
        });
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(
            a != b && a < self.len() && b < self.len(),
            "bad edge ({a}, {b})"
        );
        let e = (a.min(b), a.max(b));
        if let Err(i) = self.edges.binary_search(&e) {
            self.edges.insert(i, e);
        }
    }

    /// Appends a path with the given self-intersections, attached to `from`
    /// if given; returns the new vertex indices in order.
    pub fn add_chain(&mut self, from: Option<usize>, prefix: &str, weights: &[i64]) -> Vec<usize> {
        let mut prev = from;
        let mut out = Vec::with_capacity(weights.len());
        for (k, &w) in weights.iter().enumerate() {
            let v = self.add_vertex(format!("{prefix}{}", k + 1), w);
            if let Some(u) = prev {
                self.add_edge(u, v);
            }
            prev = Some(v);
            out.push(v);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i128>> {
        let n = self.len();
        let mut m = vec![vec![0i128; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = v.weight as i128;
        }
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }

    pub fn determinant(&self) -> i128 {
        determinant(&self.intersection_matrix())
    }

    /// Leading principal minors alternate in sign, starting negative.
    pub fn is_negative_definite(&self) -> bool {
        leading_minors(&self.intersection_matrix())
            .iter()
            .enumerate()
            .all(|(k, &d)| if k % 2 == 0 { d < 0 } else { d > 0 })
    }

    /// Edges as unordered label pairs, for comparing graphs built in different orders.
    pub fn labelled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (&self.vertices[a].label, &self.vertices[b].label);
                if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discriminant {
    /// `|det|` of the intersection matrix.
    pub order: i128,
    /// Invariant factors `d₁ | d₂ | …` (all > 1).
    pub factors: Vec<i128>,
    pub negative_definite: bool,
}

/// Cokernel of the intersection matrix.
pub fn discriminant_group(g: &PlumbingGraph) -> Result<Discriminant, ResError> {
    let m = g.intersection_matrix();
    let det = determinant(&m);
    if det == 0 {
        return Err(ResError::SingularMatrix);
    }
    Ok(Discriminant {
        order: det.abs(),
        factors: cokernel_invariants(&m, g.len()),
        negative_definite: g.is_negative_definite(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_twos() {
        let mut g = PlumbingGraph::new();
        g.add_chain(None, "e", &[-2, -2, -2]);
        assert_eq!(g.edges, vec![(0, 1), (1, 2)]);
        let d = discriminant_group(&g).unwrap();
        assert_eq!(
            d,
            Discriminant {
                order: 4,
                factors: vec![4],
                negative_definite: true
            }
        );
        assert!(g.is_connected());
    }

    #[test]
    fn singular_and_indefinite() {
        let mut g = PlumbingGraph::new();
        g.add_chain(None, "e", &[-1, -1]);
        assert_eq!(discriminant_group(&g), Err(ResError::SingularMatrix));
        let mut h = PlumbingGraph::new();
        h.add_vertex("x", 1);
        let d = discriminant_group(&h).unwrap();
        assert!(!d.negative_definite);
        assert_eq!(d.order, 1);
    }

    #[test]
    fn disjoint_vertices_split() {
        let mut g = PlumbingGraph::new();
        g.add_vertex("a", -2);
        g.add_vertex("b", -2);
        assert!(!g.is_connected());
        assert_eq!(discriminant_group(&g).unwrap().factors, vec![2, 2]);
    }
}
