//! Quandle colorings of marked graph diagrams.
//!
//! Colors live on arc classes: edges joined through the over strand of a
//! crossing carry one color. At a crossing the outgoing under arc is
//! `under_in ▷ over` (positive) or `under_in ▷⁻¹ over` (negative). The four
//! arcs at a marked vertex share one color.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{EdgeId, MarkedGraphDiagram, Node, Sign};
use crate::error::{Error, Result};
use crate::quandle::{Quandle, QuandleMap};
use crate::union_find::UnionFind;

/// Arc classes ordered by their smallest edge id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcClasses {
    classes: Vec<Vec<EdgeId>>,
    #[serde(skip)]
    of_edge: BTreeMap<EdgeId, usize>,
}

impl ArcClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Edges of class `i`, ascending.
    pub fn members(&self, i: usize) -> &[EdgeId] {
        &self.classes[i]
    }

    pub fn class_of(&self, e: EdgeId) -> Option<usize> {
        self.of_edge.get(&e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[EdgeId]> {
        self.classes.iter().map(|c| c.as_slice())
    }
}

pub fn arc_classes(d: &MarkedGraphDiagram) -> ArcClasses {
    let edges: Vec<EdgeId> = d.edges().into_iter().collect();
    let index = |e: EdgeId| edges.binary_search(&e).unwrap();
    let mut uf = UnionFind::new(edges.len());
    for node in d.nodes() {
        if let Node::Crossing { over_in, over_out, .. } = *node {
            uf.union(index(over_in), index(over_out));
        }
    }
    // union-find roots are the smallest index, so first appearance orders classes
    let mut by_root: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        by_root.entry(uf.find(i)).or_default().push(e);
    }
    let classes: Vec<Vec<EdgeId>> = by_root.into_values().collect();
    let of_edge = classes.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&e| (e, i))).collect();
    ArcClasses { classes, of_edge }
}

/// One color per arc class, zero-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring(colors)
    }

    pub fn from_one_based(colors: &[usize]) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::Domain("colors are named from 1".into()));
        }
        Ok(Coloring(colors.iter().map(|c| c - 1).collect()))
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|c| c + 1).collect()
    }

    /// `φ ∘ self`.
    pub fn push_forward(&self, phi: &QuandleMap) -> Coloring {
        Coloring(self.0.iter().map(|&c| phi.apply(c)).collect())
    }
}

// JSON uses 1-based colors like the text output
impl From<Vec<usize>> for Coloring {
    fn from(v: Vec<usize>) -> Self {
        Coloring(v.into_iter().map(|c| c.saturating_sub(1)).collect())
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Self {
        c.to_one_based()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| (c + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{self}")
    }
}

/// First violated condition found by [`check_coloring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringViolation {
    pub node: usize,
    pub message: String,
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {}: {}", self.node, self.message)
    }
}

/// Returns the first violated node condition, or `None` for a valid coloring.
pub fn check_coloring(d: &MarkedGraphDiagram, x: &Quandle, c: &Coloring) -> Result<Option<ColoringViolation>> {
    let arcs = arc_classes(d);
    if c.0.len() != arcs.len() {
        return Err(Error::Domain(format!(
            "coloring has {} entries but `{}` has {} arc classes",
            c.0.len(),
            d.name(),
            arcs.len()
        )));
    }
    if let Some(&bad) = c.0.iter().find(|&&v| v >= x.order()) {
        return Err(Error::Domain(format!("color {} is outside `{}`", bad + 1, x.name())));
    }
    let col = |e: EdgeId| c.0[arcs.class_of(e).unwrap()];
    for (i, node) in d.nodes().iter().enumerate() {
        match *node {
            Node::Crossing { sign, under_in, over_in, under_out, .. } => {
                let (a, b) = (col(under_in), col(over_in));
                let want = match sign {
                    Sign::Positive => x.op(a, b),
                    Sign::Negative => x.inverse_op(a, b),
                };
                if col(under_out) != want {
                    let op = if sign == Sign::Positive { "▷" } else { "▷⁻¹" };
                    return Ok(Some(ColoringViolation {
                        node: i,
                        message: format!(
                            "under_out edge {under_out} has color {} but {} {op} {} = {}",
                            col(under_out) + 1,
                            a + 1,
                            b + 1,
                            want + 1
                        ),
                    }));
                }
            }
            Node::Marked(es) => {
                if let Some(&e) = es.iter().find(|&&e| col(e) != col(es[0])) {
                    return Ok(Some(ColoringViolation {
                        node: i,
                        message: format!(
                            "edges {} and {e} at a marked vertex have colors {} and {}",
                            es[0],
                            col(es[0]) + 1,
                            col(e) + 1
                        ),
                    }));
                }
            }
            Node::Circle(_) => {}
        }
    }
    Ok(None)
}

/// All colorings in lexicographic order.
pub fn enumerate_colorings(d: &MarkedGraphDiagram, x: &Arc<Quandle>) -> Vec<Coloring> {
    let p = Problem::new(d);
    let mut out = p.solve(x);
    out.sort();
    out
}

pub fn count_colorings(d: &MarkedGraphDiagram, x: &Arc<Quandle>) -> usize {
    Problem::new(d).solve(x).len()
}

/// The coloring of a resolution induced by a coloring of `d`.
///
/// Every edge of the resolution is named after an edge of `d`, and smoothing
/// only joins edges that already share a color.
pub fn induce_on_resolution(d: &MarkedGraphDiagram, c: &Coloring, sign: Sign) -> Coloring {
    let arcs = arc_classes(d);
    let r = d.resolve(sign);
    let r_arcs = arc_classes(&r);
    Coloring(r_arcs.iter().map(|members| c.0[arcs.class_of(members[0]).unwrap()]).collect())
}

/// Constraint system over variables, one per group of arc classes forced
/// equal by marked vertices.
struct Problem {
    class_var: Vec<usize>,
    vars: usize,
    // (under_in, over, under_out, positive)
    constraints: Vec<(usize, usize, usize, bool)>,
    watch: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl Problem {
    fn new(d: &MarkedGraphDiagram) -> Self {
        let arcs = arc_classes(d);
        let cls = |e: EdgeId| arcs.class_of(e).unwrap();
        let mut uf = UnionFind::new(arcs.len());
        for node in d.nodes() {
            if let Node::Marked(es) = node {
                for &e in &es[1..] {
                    uf.union(cls(es[0]), cls(e));
                }
            }
        }
        let mut var_of_root = BTreeMap::new();
        let class_var: Vec<usize> = (0..arcs.len())
            .map(|i| {
                let r = uf.find(i);
                let n = var_of_root.len();
                *var_of_root.entry(r).or_insert(n)
            })
            .collect();
        let vars = var_of_root.len();
        let mut constraints = Vec::new();
        let mut watch = vec![Vec::new(); vars];
        for node in d.nodes() {
            if let Node::Crossing { sign, under_in, over_in, under_out, .. } = *node {
                let c = (
                    class_var[cls(under_in)],
                    class_var[cls(over_in)],
                    class_var[cls(under_out)],
                    sign == Sign::Positive,
                );
                let k = constraints.len();
                constraints.push(c);
                for v in [c.0, c.1, c.2] {
                    if !watch[v].contains(&k) {
                        watch[v].push(k);
                    }
                }
            }
        }
        let order = branching_order(vars, &constraints);
        Problem { class_var, vars, constraints, watch, order }
    }

    fn solve(&self, x: &Arc<Quandle>) -> Vec<Coloring> {
        if self.vars == 0 {
            return vec![Coloring(Vec::new())];
        }
        let first = self.order[0];
        (0..x.order())
            .into_par_iter()
            .flat_map_iter(|value| {
                let mut out = Vec::new();
                let mut a = vec![None; self.vars];
                if self.assign(x, &mut a, first, value) {
                    self.search(x, &mut a, 1, &mut out);
                }
                out
            })
            .collect()
    }

    fn search(&self, x: &Quandle, a: &mut Vec<Option<usize>>, mut depth: usize, out: &mut Vec<Coloring>) {
        while depth < self.order.len() && a[self.order[depth]].is_some() {
            depth += 1;
        }
        if depth == self.order.len() {
            out.push(Coloring(self.class_var.iter().map(|&v| a[v].unwrap()).collect()));
            return;
        }
        let v = self.order[depth];
        for value in 0..x.order() {
            let saved = a.clone();
            if self.assign(x, a, v, value) {
                self.search(x, a, depth + 1, out);
            }
            *a = saved;
        }
    }

    fn assign(&self, x: &Quandle, a: &mut [Option<usize>], v: usize, value: usize) -> bool {
        a[v] = Some(value);
        let mut queue = vec![v];
        while let Some(v) = queue.pop() {
            for &k in &self.watch[v] {
                let (i, o, u, pos) = self.constraints[k];
                let fwd = |p: usize, q: usize| if pos { x.op(p, q) } else { x.inverse_op(p, q) };
                let back = |p: usize, q: usize| if pos { x.inverse_op(p, q) } else { x.op(p, q) };
                match (a[i], a[o], a[u]) {
                    (Some(p), Some(q), Some(r)) => {
                        if fwd(p, q) != r {
                            return false;
                        }
                    }
                    (Some(p), Some(q), None) => {
                        a[u] = Some(fwd(p, q));
                        queue.push(u);
                    }
                    (None, Some(q), Some(r)) => {
                        a[i] = Some(back(r, q));
                        queue.push(i);
                    }
                    _ => {}
                }
            }
        }
        true
    }
}

/// Greedy order: repeatedly take the variable with the most constraints
/// touching already chosen variables, preferring over arcs.
fn branching_order(vars: usize, constraints: &[(usize, usize, usize, bool)]) -> Vec<usize> {
    let mut chosen = vec![false; vars];
    let mut order = Vec::with_capacity(vars);
    for _ in 0..vars {
        let mut best = None;
        let mut best_score = (0usize, 0usize);
        for v in (0..vars).filter(|&v| !chosen[v]) {
            let touching = constraints
                .iter()
                .filter(|c| [c.0, c.1, c.2].contains(&v) && [c.0, c.1, c.2].iter().any(|&w| chosen[w]))
                .count();
            let as_over = constraints.iter().filter(|c| c.1 == v).count();
            let score = (touching, as_over);
            if best.is_none() || score > best_score {
                best = Some(v);
                best_score = score;
            }
        }
        let v = best.unwrap();
        chosen[v] = true;
        order.push(v);
    }
    order
}
