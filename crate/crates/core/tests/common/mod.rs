//! Independent reference implementations used by the integration tests.
//!
//! Everything here works from raw node lists and 1-based operation tables
//! and shares no code with the library's solvers.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use quiverlink::diagram::{EdgeId, MarkedGraphDiagram, Node, Sign};

/// Arc classes sorted by smallest edge id, and the class of each edge.
pub fn oracle_arcs(d: &MarkedGraphDiagram) -> (Vec<Vec<EdgeId>>, HashMap<EdgeId, usize>) {
    let mut parent: HashMap<EdgeId, EdgeId> = HashMap::new();
    for n in d.nodes() {
        for e in n.slots() {
            parent.insert(e, e);
        }
    }
    fn root(p: &mut HashMap<EdgeId, EdgeId>, mut e: EdgeId) -> EdgeId {
        while p[&e] != e {
            e = p[&e];
        }
        e
    }
    for n in d.nodes() {
        if let Node::Crossing { over_in, over_out, .. } = *n {
            let (a, b) = (root(&mut parent, over_in), root(&mut parent, over_out));
            parent.insert(a.max(b), a.min(b));
        }
    }
    let mut groups: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
    let mut edges: Vec<EdgeId> = parent.keys().copied().collect();
    edges.sort_unstable();
    for e in edges {
        let r = root(&mut parent, e);
        groups.entry(r).or_default().push(e);
    }
    let mut classes: Vec<Vec<EdgeId>> = groups.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut of = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for &e in c {
            of.insert(e, i);
        }
    }
    (classes, of)
}

/// `rows[x-1][y-1] = x ▷ y` on 1-based elements.
pub fn op(rows: &[Vec<usize>], x: usize, y: usize) -> usize {
    rows[x - 1][y - 1]
}

/// Every 1-based coloring, found by filtering all `n^arcs` assignments.
pub fn oracle_colorings(d: &MarkedGraphDiagram, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let (classes, of) = oracle_arcs(d);
    let k = classes.len();
    let total = n.checked_pow(k as u32).expect("search space fits in usize");
    let mut out = Vec::new();
    let mut c = vec![1usize; k];
    for idx in 0..total {
        let mut r = idx;
        for slot in c.iter_mut().rev() {
            *slot = r % n + 1;
            r /= n;
        }
        let col = |e: EdgeId| c[of[&e]];
        let ok = d.nodes().iter().all(|node| match *node {
            Node::Crossing { sign, under_in, over_in, under_out, .. } => match sign {
                Sign::Positive => op(rows, col(under_in), col(over_in)) == col(under_out),
                Sign::Negative => op(rows, col(under_out), col(over_in)) == col(under_in),
            },
            Node::Marked(es) => es.iter().all(|&e| col(e) == col(es[0])),
            Node::Circle(_) => true,
        });
        if ok {
            out.push(c.clone());
        }
    }
    out
}

/// Every 1-based endomorphism, found by filtering all `n^n` maps.
pub fn oracle_endos(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut out = Vec::new();
    let mut f = vec![1usize; n];
    for idx in 0..n.pow(n as u32) {
        let mut r = idx;
        for slot in f.iter_mut().rev() {
            *slot = r % n + 1;
            r /= n;
        }
        let hom = (1..=n).all(|x| (1..=n).all(|y| f[op(rows, x, y) - 1] == op(rows, f[x - 1], f[y - 1])));
        if hom {
            out.push(f.clone());
        }
    }
    out
}

/// In-degree of each coloring under `endos`, by composing every pair.
pub fn oracle_in_degrees(colorings: &[Vec<usize>], endos: &[Vec<usize>]) -> Vec<usize> {
    let index: HashMap<&Vec<usize>, usize> = colorings.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut indeg = vec![0; colorings.len()];
    for c in colorings {
        for f in endos {
            let image: Vec<usize> = c.iter().map(|&v| f[v - 1]).collect();
            indeg[*index.get(&image).expect("the image of a coloring is a coloring")] += 1;
        }
    }
    indeg
}

/// `exponent -> coefficient` of the in-degree polynomial.
pub fn oracle_polynomial(d: &MarkedGraphDiagram, rows: &[Vec<usize>], endos: &[Vec<usize>]) -> BTreeMap<usize, usize> {
    let colorings = oracle_colorings(d, rows);
    let mut terms = BTreeMap::new();
    for deg in oracle_in_degrees(&colorings, endos) {
        *terms.entry(deg).or_insert(0) += 1;
    }
    terms
}

/// Laurent polynomial in `A`.
pub type Laurent = BTreeMap<i32, i64>;

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn loop_value() -> Laurent {
    Laurent::from([(-2, -1), (2, -1)])
}

/// Kauffman bracket times `(-A^3)^(-writhe)` of a crossing-only diagram.
pub fn normalized_bracket(d: &MarkedGraphDiagram) -> Laurent {
    let crossings: Vec<(Sign, [EdgeId; 4])> = d
        .nodes()
        .iter()
        .filter_map(|n| match *n {
            // counterclockwise from the incoming under edge
            Node::Crossing { sign: Sign::Positive, under_in, over_in, under_out, over_out } => {
                Some((Sign::Positive, [under_in, over_out, under_out, over_in]))
            }
            Node::Crossing { sign: Sign::Negative, under_in, over_in, under_out, over_out } => {
                Some((Sign::Negative, [under_in, over_in, under_out, over_out]))
            }
            Node::Marked(_) => panic!("bracket of a diagram with marked vertices"),
            Node::Circle(_) => None,
        })
        .collect();
    let circles = d.nodes().iter().filter(|n| matches!(n, Node::Circle(_))).count();
    let mut edges: Vec<EdgeId> = crossings.iter().flat_map(|(_, s)| s.iter().copied()).collect();
    edges.sort_unstable();
    edges.dedup();
    let idx = |e: EdgeId| edges.binary_search(&e).unwrap();
    let mut total = Laurent::new();
    for state in 0u64..(1u64 << crossings.len()) {
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut join = |a: EdgeId, b: EdgeId| {
            let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
            parent[ra] = rb;
        };
        let mut a_count = 0i32;
        for (k, (_, [a, b, c, e])) in crossings.iter().enumerate() {
            if state >> k & 1 == 0 {
                a_count += 1;
                join(*a, *b);
                join(*c, *e);
            } else {
                join(*a, *e);
                join(*b, *c);
            }
        }
        let loops = (0..edges.len()).filter(|&i| find(&mut parent, i) == i).count() + circles;
        let mut term = Laurent::from([(a_count - (crossings.len() as i32 - a_count), 1)]);
        for _ in 1..loops {
            term = mul(&term, &loop_value());
        }
        for (k, v) in term {
            *total.entry(k).or_insert(0) += v;
        }
    }
    total.retain(|_, v| *v != 0);
    let writhe: i32 = crossings.iter().map(|(s, _)| if *s == Sign::Positive { 1 } else { -1 }).sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    mul(&total, &Laurent::from([(-3 * writhe, sign)]))
}

/// Normalized bracket of the `c`-component unlink.
pub fn unlink_bracket(c: usize) -> Laurent {
    let mut p = Laurent::from([(0, 1)]);
    for _ in 1..c {
        p = mul(&p, &loop_value());
    }
    p
}
