//! Oriented marked graph diagrams.
//!
//! A diagram is a list of nodes glued along numbered edges (semi-arcs).
//! Classical link diagrams are the case without marked vertices.
//!
//! Crossings list their edges by role: `under_in over_in under_out over_out`.
//! Marked vertices list their four edges in counterclockwise order. The
//! smoothing convention is fixed throughout the crate:
//!
//! * `L-` joins `(e1, e2)` and `(e3, e4)`,
//! * `L+` joins `(e2, e3)` and `(e4, e1)`.
//!
//! Edge directions at marked vertices are not written down; they are inferred
//! from the crossings and from the rule that the four edges at a marked vertex
//! alternate in, out, in, out around it.

mod morse;
mod orient;
mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

pub use morse::from_morse_word;
pub use orient::Role;
pub use text::{parse, parse_diagrams, parse_stanzas, serialize};

pub type EdgeId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "+1" => Ok(Sign::Positive),
            "-" | "minus" | "-1" => Ok(Sign::Negative),
            _ => Err(Error::Domain(format!("expected `+` or `-`, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Node {
    Crossing {
        sign: Sign,
        under_in: EdgeId,
        over_in: EdgeId,
        under_out: EdgeId,
        over_out: EdgeId,
    },
    /// Four edges in counterclockwise order.
    Marked([EdgeId; 4]),
    /// A closed component with no nodes on it.
    Circle(EdgeId),
}

impl Node {
    pub fn crossing(sign: Sign, under_in: EdgeId, over_in: EdgeId, under_out: EdgeId, over_out: EdgeId) -> Node {
        Node::Crossing { sign, under_in, over_in, under_out, over_out }
    }

    /// Edge slots: crossings in role order, marked vertices in cyclic order.
    pub fn slots(&self) -> Vec<EdgeId> {
        match *self {
            Node::Crossing { under_in, over_in, under_out, over_out, .. } => {
                vec![under_in, over_in, under_out, over_out]
            }
            Node::Marked(e) => e.to_vec(),
            Node::Circle(e) => vec![e],
        }
    }

    fn map_edges(&self, f: impl Fn(EdgeId) -> EdgeId) -> Node {
        match *self {
            Node::Crossing { sign, under_in, over_in, under_out, over_out } => Node::Crossing {
                sign,
                under_in: f(under_in),
                over_in: f(over_in),
                under_out: f(under_out),
                over_out: f(over_out),
            },
            Node::Marked(e) => Node::Marked(e.map(f)),
            Node::Circle(e) => Node::Circle(f(e)),
        }
    }
}

/// One structural problem found by [`validate_nodes`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EdgeMultiplicity {
        edge: EdgeId,
        count: usize,
    },
    /// A `circle` edge that also appears on a node.
    CircleEdgeReused {
        edge: EdgeId,
        node: usize,
    },
    Orientation {
        node: usize,
        message: String,
    },
    ZeroEdge {
        node: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeMultiplicity { edge, count } => write!(f, "edge {edge} occurs {count} times"),
            Violation::CircleEdgeReused { edge, node } => {
                write!(f, "circle edge {edge} is reused at node {node}")
            }
            Violation::Orientation { node, message } => {
                write!(f, "orientation violation at node {node}: {message}")
            }
            Violation::ZeroEdge { node } => write!(f, "node {node} uses edge id 0; ids start at 1"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        match v {
            Violation::EdgeMultiplicity { edge, count } => Error::EdgeMultiplicity { edge, count },
            Violation::Orientation { node, message } => Error::Orientation { node, message },
            other => Error::Format(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks edge multiplicities and the orientation pattern of a raw node list.
pub fn validate_nodes(nodes: &[Node]) -> ValidationReport {
    let mut violations = Vec::new();
    let mut counts: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut circles: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (i, node) in nodes.iter().enumerate() {
        if node.slots().contains(&0) {
            violations.push(Violation::ZeroEdge { node: i });
        }
        match node {
            Node::Circle(e) => {
                if circles.insert(*e, i).is_some() {
                    violations.push(Violation::CircleEdgeReused { edge: *e, node: i });
                }
            }
            _ => {
                for e in node.slots() {
                    *counts.entry(e).or_default() += 1;
                }
            }
        }
    }
    for (&edge, &node) in &circles {
        if counts.contains_key(&edge) {
            violations.push(Violation::CircleEdgeReused { edge, node });
        }
    }
    // overused edges first; a dangling edge is usually a consequence
    let mut bad: Vec<(EdgeId, usize)> =
        counts.iter().filter(|(e, &c)| c != 2 && !circles.contains_key(e)).map(|(&e, &c)| (e, c)).collect();
    bad.sort_by_key(|&(e, c)| (c < 2, e));
    violations.extend(bad.into_iter().map(|(edge, count)| Violation::EdgeMultiplicity { edge, count }));
    if violations.is_empty() {
        if let Err(v) = orient::infer_roles(nodes) {
            violations.extend(v);
        }
    }
    ValidationReport { violations }
}

/// A structurally valid oriented marked graph diagram.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct MarkedGraphDiagram {
    name: String,
    nodes: Vec<Node>,
    // roles[i][k]: direction of slot k of node i (empty for circles)
    roles: Vec<Vec<Role>>,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    name: String,
    nodes: Vec<Node>,
}

impl TryFrom<RawDiagram> for MarkedGraphDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        MarkedGraphDiagram::new(raw.name, raw.nodes)
    }
}

impl From<MarkedGraphDiagram> for RawDiagram {
    fn from(d: MarkedGraphDiagram) -> Self {
        RawDiagram { name: d.name, nodes: d.nodes }
    }
}

/// Outcome of the necessary-condition admissibility check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Admissibility {
    CertifiedAdmissible,
    CertifiedInadmissible,
    Unknown,
}

/// What is known about one resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SideStatus {
    /// Crossing-free, hence a trivial link.
    Unlink,
    /// Fox 3-coloring count differs from `3^components`, hence not trivial.
    NotUnlink,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub verdict: Admissibility,
    pub plus: SideReport,
    pub minus: SideReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideReport {
    pub status: SideStatus,
    pub components: usize,
    pub crossings: usize,
    pub fox_colorings: usize,
}

impl MarkedGraphDiagram {
    /// Validates and builds a diagram; the first violation becomes the error.
    pub fn new(name: impl Into<String>, nodes: Vec<Node>) -> Result<Self> {
        let report = validate_nodes(&nodes);
        if let Some(v) = report.violations.into_iter().next() {
            return Err(v.into());
        }
        let roles = orient::infer_roles(&nodes).map_err(|mut v| Error::from(v.remove(0)))?;
        Ok(MarkedGraphDiagram { name: name.into(), nodes, roles })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Direction of each slot of node `i`; empty for circles.
    pub fn roles(&self, i: usize) -> &[Role] {
        &self.roles[i]
    }

    pub fn validate(&self) -> ValidationReport {
        validate_nodes(&self.nodes)
    }

    pub fn edges(&self) -> BTreeSet<EdgeId> {
        self.nodes.iter().flat_map(|n| n.slots()).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Crossing { .. })).count()
    }

    pub fn marked_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Marked(_))).count()
    }

    pub fn is_classical(&self) -> bool {
        self.marked_count() == 0
    }

    /// Crossings plus marked vertices.
    pub fn ch_number(&self) -> usize {
        self.crossing_count() + self.marked_count()
    }

    pub fn writhe(&self) -> i32 {
        self.nodes
            .iter()
            .map(|n| match n {
                Node::Crossing { sign, .. } => sign.as_i32(),
                _ => 0,
            })
            .sum()
    }

    /// The classical diagram obtained by smoothing every marked vertex.
    ///
    /// Joined edges are merged under their smallest id; a merged edge that no
    /// longer meets any crossing becomes a `circle`.
    pub fn resolve(&self, sign: Sign) -> MarkedGraphDiagram {
        let edges: Vec<EdgeId> = self.edges().into_iter().collect();
        let mut uf = UnionFind::new(edges.len());
        let index = |e: EdgeId| edges.binary_search(&e).unwrap();
        for node in &self.nodes {
            if let Node::Marked([e1, e2, e3, e4]) = *node {
                let pairs = match sign {
                    Sign::Negative => [(e1, e2), (e3, e4)],
                    Sign::Positive => [(e2, e3), (e4, e1)],
                };
                for (a, b) in pairs {
                    uf.union(index(a), index(b));
                }
            }
        }
        let mut rep: Vec<EdgeId> = vec![EdgeId::MAX; edges.len()];
        for (i, &e) in edges.iter().enumerate() {
            let r = uf.find(i);
            rep[r] = rep[r].min(e);
        }
        let rename = |e: EdgeId| rep[uf.find_immut(index(e))];
        let mut nodes: Vec<Node> = Vec::new();
        let mut touched = BTreeSet::new();
        for node in &self.nodes {
            match node {
                Node::Marked(_) => {}
                Node::Crossing { .. } => {
                    let renamed = node.map_edges(rename);
                    touched.extend(renamed.slots());
                    nodes.push(renamed);
                }
                Node::Circle(_) => nodes.push(node.clone()),
            }
        }
        let mut new_circles = BTreeSet::new();
        for node in &self.nodes {
            if let Node::Marked(es) = node {
                for &e in es {
                    let r = rename(e);
                    if !touched.contains(&r) {
                        new_circles.insert(r);
                    }
                }
            }
        }
        nodes.extend(new_circles.into_iter().map(Node::Circle));
        let suffix = match sign {
            Sign::Positive => "L+",
            Sign::Negative => "L-",
        };
        MarkedGraphDiagram::new(format!("{}:{suffix}", self.name), nodes)
            .expect("smoothing a valid diagram yields a valid diagram")
    }

    /// Number of link components, tracing strands straight through crossings.
    pub fn component_count(&self) -> Result<usize> {
        if !self.is_classical() {
            return Err(Error::Domain(format!(
                "`{}` has {} marked vertices; resolve it first",
                self.name,
                self.marked_count()
            )));
        }
        let edges: Vec<EdgeId> = self.edges().into_iter().collect();
        let index = |e: EdgeId| edges.binary_search(&e).unwrap();
        let mut uf = UnionFind::new(edges.len());
        for node in &self.nodes {
            if let Node::Crossing { under_in, over_in, under_out, over_out, .. } = *node {
                uf.union(index(under_in), index(under_out));
                uf.union(index(over_in), index(over_out));
            }
        }
        Ok(uf.class_count())
    }

    /// Necessary-condition check that both resolutions are trivial links.
    pub fn admissibility_report(&self) -> AdmissibilityReport {
        let side = |sign| {
            let r = self.resolve(sign);
            let components = r.component_count().expect("resolution is classical");
            let crossings = r.crossing_count();
            let fox = crate::quandle::Quandle::dihedral(3).expect("dihedral(3)").into_arc();
            let fox_colorings = crate::coloring::count_colorings(&r, &fox);
            let status = if crossings == 0 {
                SideStatus::Unlink
            } else if fox_colorings != 3usize.pow(components as u32) {
                SideStatus::NotUnlink
            } else {
                SideStatus::Unknown
            };
            SideReport { status, components, crossings, fox_colorings }
        };
        let plus = side(Sign::Positive);
        let minus = side(Sign::Negative);
        let verdict = if plus.status == SideStatus::NotUnlink || minus.status == SideStatus::NotUnlink {
            Admissibility::CertifiedInadmissible
        } else if plus.status == SideStatus::Unlink && minus.status == SideStatus::Unlink {
            Admissibility::CertifiedAdmissible
        } else {
            Admissibility::Unknown
        };
        AdmissibilityReport { verdict, plus, minus }
    }

    /// Renumbers edges `1, 2, ...` by first appearance in node order.
    pub fn canonical(&self) -> MarkedGraphDiagram {
        let mut order: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        for node in &self.nodes {
            for e in node.slots() {
                let next = order.len() as EdgeId + 1;
                order.entry(e).or_insert(next);
            }
        }
        let nodes = self.nodes.iter().map(|n| n.map_edges(|e| order[&e])).collect();
        MarkedGraphDiagram { name: self.name.clone(), nodes, roles: self.roles.clone() }
    }
}

impl fmt::Debug for MarkedGraphDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}

impl fmt::Display for MarkedGraphDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}
