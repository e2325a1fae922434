//! DOT and JSON forms of a quiver.
//!
//! JSON layout (see `docs/quiver.schema.json`): colors and endomorphism images
//! are 1-based like everywhere else in text output; `from`, `to` and `endos`
//! are 0-based indices into `vertices` and `endos`.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Quiver, QuiverEdge};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::quandle::{Quandle, QuandleMap};

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    name: String,
    quandle: QuandleJson,
    endos: Vec<Vec<usize>>,
    vertices: Vec<Coloring>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
struct QuandleJson {
    name: String,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    multiplicity: usize,
    endos: Vec<usize>,
}

/// Parallel edges grouped by `(from, to)`, endo indices ascending.
fn collapsed(q: &Quiver) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in q.edges() {
        groups.entry((e.from, e.to)).or_default().push(e.endo);
    }
    groups
}

pub fn export_dot(q: &Quiver) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", escape(q.name()));
    for (i, c) in q.vertices().iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{c}\"];");
    }
    for ((from, to), endos) in collapsed(q) {
        let _ = writeln!(s, "  v{from} -> v{to} [label=\"{}\"];", endos.len());
    }
    s.push_str("}\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_json(q: &Quiver) -> String {
    let doc = QuiverJson {
        name: q.name().to_string(),
        quandle: QuandleJson { name: q.quandle().name().to_string(), rows: q.quandle().rows() },
        endos: q.endos().iter().map(|f| f.to_one_based()).collect(),
        vertices: q.vertices().to_vec(),
        edges: collapsed(q)
            .into_iter()
            .map(|((from, to), endos)| EdgeJson { from, to, multiplicity: endos.len(), endos })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("quiver JSON");
    out.push('\n');
    out
}

/// Reads the output of [`export_json`], checking every edge against its label.
pub fn import_json(text: &str) -> Result<Quiver> {
    let doc: QuiverJson = serde_json::from_str(text)?;
    let x = Quandle::from_rows(doc.quandle.name, &doc.quandle.rows)?.into_arc();
    let endos = doc
        .endos
        .iter()
        .map(|img| QuandleMap::from_one_based(x.clone(), x.clone(), img))
        .collect::<Result<Vec<_>>>()?;
    if !doc.vertices.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Format("quiver vertices must be sorted and distinct".into()));
    }
    let n = doc.vertices.len();
    let mut edges = Vec::new();
    for e in &doc.edges {
        if e.from >= n || e.to >= n || e.multiplicity != e.endos.len() {
            return Err(Error::Format(format!("malformed edge record {} -> {}", e.from, e.to)));
        }
        for &endo in &e.endos {
            if endo >= endos.len() {
                return Err(Error::Format(format!("endo index {endo} out of range")));
            }
            edges.push(QuiverEdge { from: e.from, to: e.to, endo });
        }
    }
    edges.sort_by_key(|e| (e.from, e.endo));
    let q = Quiver::from_parts(doc.name, x, doc.vertices, endos)?;
    if q.edges != edges {
        return Err(Error::Format("edge list disagrees with the endomorphism labels".into()));
    }
    Ok(q)
}
