//! Quandle coloring quivers.
//!
//! For a diagram `D`, a quandle `X` and a set `S` of endomorphisms of `X`, the
//! quiver has one vertex per coloring `f` and one edge `f → φ∘f` for every
//! `φ ∈ S`. Parallel edges are kept, so every vertex has out-degree `|S|`.

mod export;
mod iso;
mod poly;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{enumerate_colorings, induce_on_resolution, Coloring};
use crate::diagram::{MarkedGraphDiagram, Sign};
use crate::error::{Error, Result};
use crate::quandle::{enumerate_endos, Quandle, QuandleMap};

pub use export::{export_dot, export_json, import_json};
pub use iso::{are_isomorphic, find_isomorphism, MAX_ISO_VERTICES};
pub use poly::InDegreePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuiverEdge {
    pub from: usize,
    pub to: usize,
    /// Index into [`Quiver::endos`].
    pub endo: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    name: String,
    quandle: Arc<Quandle>,
    vertices: Vec<Coloring>,
    endos: Vec<QuandleMap>,
    // sorted by (from, endo)
    edges: Vec<QuiverEdge>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        *self.quandle == *other.quandle
            && self.vertices == other.vertices
            && self.endos == other.endos
            && self.edges == other.edges
    }
}

impl Eq for Quiver {}

/// Sorts and deduplicates `S`, checking that every map is an endomorphism of `x`.
fn normalize_endos(x: &Arc<Quandle>, endos: &[QuandleMap]) -> Result<Vec<QuandleMap>> {
    for phi in endos {
        if **phi.source() != **x || **phi.target() != **x {
            return Err(Error::Domain(format!("{phi} is not an endomorphism of `{}`", x.name())));
        }
    }
    let mut s = endos.to_vec();
    s.sort();
    let before = s.len();
    s.dedup();
    if s.len() < before {
        log::warn!("dropped {} duplicate endomorphisms from S", before - s.len());
    }
    Ok(s)
}

/// Quiver of `d` over `x` with edges labelled by `endos`.
pub fn build_quiver(d: &MarkedGraphDiagram, x: &Arc<Quandle>, endos: &[QuandleMap]) -> Result<Quiver> {
    let endos = normalize_endos(x, endos)?;
    let vertices = enumerate_colorings(d, x);
    Quiver::from_parts(d.name().to_string(), x.clone(), vertices, endos)
}

/// Quiver with `S = Hom(X, X)`.
pub fn full_quiver(d: &MarkedGraphDiagram, x: &Arc<Quandle>) -> Quiver {
    build_quiver(d, x, &enumerate_endos(x)).expect("every enumerated endomorphism is valid")
}

impl Quiver {
    /// Builds the edges over an already sorted vertex list closed under `S`.
    pub(crate) fn from_parts(
        name: String,
        quandle: Arc<Quandle>,
        vertices: Vec<Coloring>,
        endos: Vec<QuandleMap>,
    ) -> Result<Quiver> {
        let index: HashMap<&Coloring, usize> = vertices.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let edges = (0..vertices.len() * endos.len())
            .into_par_iter()
            .map(|k| {
                let (from, endo) = (k / endos.len(), k % endos.len());
                let image = vertices[from].push_forward(&endos[endo]);
                match index.get(&image) {
                    Some(&to) => Ok(QuiverEdge { from, to, endo }),
                    None => Err(Error::Domain(format!(
                        "{} sends vertex {} to {image}, which is not a vertex",
                        endos[endo], vertices[from]
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver { name, quandle, vertices, endos, edges })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quandle(&self) -> &Arc<Quandle> {
        &self.quandle
    }

    pub fn vertices(&self) -> &[Coloring] {
        &self.vertices
    }

    pub fn endos(&self) -> &[QuandleMap] {
        &self.endos
    }

    pub fn edges(&self) -> &[QuiverEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, c: &Coloring) -> Option<usize> {
        self.vertices.binary_search(c).ok()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.to] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.from] += 1;
        }
        deg
    }

    pub fn in_degree_polynomial(&self) -> InDegreePolynomial {
        InDegreePolynomial::from_degrees(self.in_degrees())
    }

    /// `matrix[u][v]` = number of edges `u → v`.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0u32; n]; n];
        for e in &self.edges {
            m[e.from][e.to] += 1;
        }
        m
    }

    /// The same quiver with vertex `i` renamed `perm[i]`; vertex data moves along.
    ///
    /// The result no longer lists vertices in lexicographic order, so it is
    /// only useful for comparing shapes.
    pub fn relabeled(&self, perm: &[usize]) -> Quiver {
        assert_eq!(perm.len(), self.vertices.len());
        let mut vertices = self.vertices.clone();
        for (i, &p) in perm.iter().enumerate() {
            vertices[p] = self.vertices[i].clone();
        }
        let mut edges: Vec<QuiverEdge> =
            self.edges.iter().map(|e| QuiverEdge { from: perm[e.from], to: perm[e.to], endo: e.endo }).collect();
        edges.sort_by_key(|e| (e.from, e.endo));
        Quiver { vertices, edges, ..self.clone() }
    }
}

/// Result of checking that a quiver embeds into the quivers of both resolutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkReport {
    pub plus: Embedding,
    pub minus: Embedding,
}

impl RemarkReport {
    pub fn holds(&self) -> bool {
        self.plus.holds() && self.minus.holds()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Embedding {
    Embeds {
        vertices: usize,
        edges: usize,
    },
    /// An induced coloring that is not a vertex of the resolution quiver.
    MissingVertex {
        vertex: usize,
        induced: Vec<usize>,
    },
    /// Two colorings with the same induced coloring.
    NotInjective {
        first: usize,
        second: usize,
    },
    /// An edge whose image is not an edge of the resolution quiver.
    MissingEdge {
        edge: QuiverEdge,
    },
}

impl Embedding {
    pub fn holds(&self) -> bool {
        matches!(self, Embedding::Embeds { .. })
    }
}

/// Checks that `induce_on_resolution` maps the quiver of `d` into the quivers
/// of both resolutions, edge labels included.
pub fn check_remark(d: &MarkedGraphDiagram, x: &Arc<Quandle>, endos: &[QuandleMap]) -> Result<RemarkReport> {
    let q = build_quiver(d, x, endos)?;
    let side = |sign| -> Result<Embedding> {
        let r = d.resolve(sign);
        let qr = build_quiver(&r, x, endos)?;
        let mut map = Vec::with_capacity(q.vertices.len());
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for (i, c) in q.vertices.iter().enumerate() {
            let induced = induce_on_resolution(d, c, sign);
            let Some(j) = qr.vertex_index(&induced) else {
                return Ok(Embedding::MissingVertex { vertex: i, induced: induced.to_one_based() });
            };
            if let Some(&first) = seen.get(&j) {
                return Ok(Embedding::NotInjective { first, second: i });
            }
            seen.insert(j, i);
            map.push(j);
        }
        // edges of qr are sorted by (from, endo) with one edge per pair
        let s = qr.endos.len();
        for e in &q.edges {
            let image = qr.edges[map[e.from] * s + e.endo];
            if image.to != map[e.to] {
                return Ok(Embedding::MissingEdge { edge: *e });
            }
        }
        Ok(Embedding::Embeds { vertices: q.vertices.len(), edges: q.edges.len() })
    };
    Ok(RemarkReport { plus: side(Sign::Positive)?, minus: side(Sign::Negative)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse;
    use crate::quandle::builtin;

    fn arc(name: &str) -> Arc<Quandle> {
        builtin(name).unwrap().into_arc()
    }

    #[test]
    fn identity_gives_self_loops() {
        let d = parse("diagram t\nx+ 1 4 2 5\nx+ 5 2 6 3\nx+ 3 6 4 1\n").unwrap();
        let x = arc("dihedral:3");
        let q = build_quiver(&d, &x, &[QuandleMap::identity(x.clone())]).unwrap();
        assert_eq!(q.vertices().len(), 9);
        assert!(q.edges().iter().all(|e| e.from == e.to));
        assert_eq!(q.in_degree_polynomial().to_string(), "9u");
    }

    #[test]
    fn unknot_over_trivial_two() {
        let d = parse("diagram o\ncircle 1\n").unwrap();
        let q = full_quiver(&d, &arc("trivial:2"));
        assert_eq!(q.endos().len(), 4);
        // 8 edges over 2 vertices, split evenly by the swap
        assert_eq!(q.in_degree_polynomial().to_string(), "2u^4");
    }

    #[test]
    fn unknot_full_quivers() {
        let d = parse("diagram o\ncircle 1\n").unwrap();
        assert_eq!(full_quiver(&d, &arc("dihedral:3")).in_degree_polynomial().to_string(), "3u^9");
        assert_eq!(full_quiver(&d, &arc("dihedral:4")).in_degree_polynomial().to_string(), "4u^16");
        assert_eq!(full_quiver(&d, &arc("tetrahedral")).in_degree_polynomial().to_string(), "4u^16");
    }

    #[test]
    fn duplicates_are_dropped_and_foreign_maps_rejected() {
        let d = parse("diagram o\ncircle 1\n").unwrap();
        let x = arc("dihedral:3");
        let id = QuandleMap::identity(x.clone());
        let q = build_quiver(&d, &x, &[id.clone(), id]).unwrap();
        assert_eq!(q.endos().len(), 1);
        let other = QuandleMap::identity(arc("dihedral:4"));
        assert!(matches!(build_quiver(&d, &x, &[other]), Err(Error::Domain(_))));
    }

    #[test]
    fn degrees_and_checksum() {
        let d = parse("diagram t\nx+ 1 4 2 5\nx+ 5 2 6 3\nx+ 3 6 4 1\n").unwrap();
        for name in ["dihedral:3", "dihedral:5", "tetrahedral"] {
            let q = full_quiver(&d, &arc(name));
            let s = q.endos().len();
            assert!(q.out_degrees().iter().all(|&k| k == s));
            let p = q.in_degree_polynomial();
            assert!(p.satisfies_checksum(s));
            assert_eq!(p.at_one(), q.vertices().len());
        }
    }

    #[test]
    fn trefoil_over_d3_is_not_the_printed_row() {
        let d = parse("diagram t\nx+ 1 4 2 5\nx+ 5 2 6 3\nx+ 3 6 4 1\n").unwrap();
        let p = full_quiver(&d, &arc("dihedral:3")).in_degree_polynomial();
        assert_eq!(p.to_string(), "6u^6 + 3u^15");
    }

    #[test]
    fn remark_for_node_free_diagram() {
        let d = parse("diagram o\ncircle 1\ncircle 2\n").unwrap();
        let x = arc("dihedral:3");
        let r = check_remark(&d, &x, &enumerate_endos(&x)).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn remark_with_a_marked_vertex() {
        let d = parse("diagram t\nx+ 1 4 2 5\nx+ 5 2 6 3\nx+ 3 6 4 7\nm 7 8 8 1\n").unwrap();
        for name in ["dihedral:3", "tetrahedral"] {
            let x = arc(name);
            assert!(check_remark(&d, &x, &enumerate_endos(&x)).unwrap().holds(), "{name}");
        }
    }
}
