//! Isomorphism of quivers as directed multigraphs, ignoring edge labels.
//!
//! Vertices are first split by iterated degree refinement run on both quivers
//! together; a backtracking search then matches vertices class by class and
//! checks multiplicities against every vertex already matched.

use std::collections::BTreeMap;

use super::Quiver;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`are_isomorphic`].
pub const MAX_ISO_VERTICES: usize = 256;

// search nodes visited before giving up with `TooLarge`
const NODE_BUDGET: u64 = 20_000_000;

pub fn are_isomorphic(a: &Quiver, b: &Quiver) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// A vertex bijection `a → b` preserving edge multiplicities, if one exists.
pub fn find_isomorphism(a: &Quiver, b: &Quiver) -> Result<Option<Vec<usize>>> {
    let n = a.vertices().len();
    for q in [a, b] {
        if q.vertices().len() > MAX_ISO_VERTICES {
            return Err(Error::TooLarge(format!(
                "quiver `{}` has {} vertices; isomorphism testing is limited to {MAX_ISO_VERTICES}",
                q.name(),
                q.vertices().len()
            )));
        }
    }
    if n != b.vertices().len()
        || a.edges().len() != b.edges().len()
        || a.in_degree_polynomial() != b.in_degree_polynomial()
    {
        return Ok(None);
    }
    let ma = a.multiplicity_matrix();
    let mb = b.multiplicity_matrix();
    let (ca, cb) = refine(&ma, &mb);
    let mut hist_a: BTreeMap<usize, usize> = BTreeMap::new();
    let mut hist_b: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &ca {
        *hist_a.entry(c).or_default() += 1;
    }
    for &c in &cb {
        *hist_b.entry(c).or_default() += 1;
    }
    if hist_a != hist_b {
        return Ok(None);
    }
    // match vertices of small classes first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (hist_a[&ca[v]], ca[v], v));
    let mut s =
        Search { ma: &ma, mb: &mb, ca: &ca, cb: &cb, order, map: vec![usize::MAX; n], used: vec![false; n], nodes: 0 };
    match s.extend(0) {
        Ok(true) => Ok(Some(s.map)),
        Ok(false) => Ok(None),
        Err(()) => Err(Error::TooLarge(format!(
            "isomorphism search between `{}` and `{}` exceeded {NODE_BUDGET} steps",
            a.name(),
            b.name()
        ))),
    }
}

/// Stable colors for the vertices of both graphs, comparable across them.
fn refine(ma: &[Vec<u32>], mb: &[Vec<u32>]) -> (Vec<usize>, Vec<usize>) {
    let n = ma.len();
    let mats = [ma, mb];
    let mut colors: [Vec<usize>; 2] = [vec![0; n], vec![0; n]];
    let mut classes = 1;
    loop {
        let mut sigs: [Vec<_>; 2] = [Vec::with_capacity(n), Vec::with_capacity(n)];
        for g in 0..2 {
            let m = mats[g];
            let c = &colors[g];
            for v in 0..n {
                let mut out: Vec<(usize, u32)> =
                    (0..n).filter(|&w| m[v][w] > 0 && w != v).map(|w| (c[w], m[v][w])).collect();
                let mut inc: Vec<(usize, u32)> =
                    (0..n).filter(|&w| m[w][v] > 0 && w != v).map(|w| (c[w], m[w][v])).collect();
                out.sort_unstable();
                inc.sort_unstable();
                sigs[g].push((c[v], m[v][v], out, inc));
            }
        }
        let mut ids = BTreeMap::new();
        for s in sigs.iter().flatten() {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        let new: [Vec<usize>; 2] = [sigs[0].iter().map(|s| ids[s]).collect(), sigs[1].iter().map(|s| ids[s]).collect()];
        let count = ids.len();
        colors = new;
        if count == classes {
            break;
        }
        classes = count;
    }
    let [a, b] = colors;
    (a, b)
}

struct Search<'a> {
    ma: &'a [Vec<u32>],
    mb: &'a [Vec<u32>],
    ca: &'a [usize],
    cb: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> std::result::Result<bool, ()> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(());
        }
        let u = self.order[depth];
        for v in 0..self.map.len() {
            if self.used[v] || self.cb[v] != self.ca[u] || !self.consistent(u, v, depth) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        Ok(false)
    }

    fn consistent(&self, u: usize, v: usize, depth: usize) -> bool {
        if self.ma[u][u] != self.mb[v][v] {
            return false;
        }
        self.order[..depth].iter().all(|&w| {
            let x = self.map[w];
            self.ma[u][w] == self.mb[v][x] && self.ma[w][u] == self.mb[x][v]
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse;
    use crate::quandle::{builtin, QuandleMap};
    use crate::quiver::{build_quiver, full_quiver};

    fn trefoil_quiver(name: &str) -> Quiver {
        let d = parse("diagram t\nx+ 1 4 2 5\nx+ 5 2 6 3\nx+ 3 6 4 1\n").unwrap();
        full_quiver(&d, &builtin(name).unwrap().into_arc())
    }

    #[test]
    fn reflexive_and_relabeling_invariant() {
        let q = trefoil_quiver("dihedral:3");
        assert!(are_isomorphic(&q, &q).unwrap());
        let n = q.vertices().len();
        let perm: Vec<usize> = (0..n).map(|i| (i * 4 + 3) % n).collect();
        let p = q.relabeled(&perm);
        let iso = find_isomorphism(&q, &p).unwrap().unwrap();
        let (ma, mp) = (q.multiplicity_matrix(), p.multiplicity_matrix());
        for u in 0..n {
            for w in 0..n {
                assert_eq!(ma[u][w], mp[iso[u]][iso[w]]);
            }
        }
    }

    #[test]
    fn same_polynomial_different_shape() {
        // 1 -> 2 -> 3 -> 1 versus 1 <-> 2 with a loop at 3: both have in-degree 1 everywhere
        let x = builtin("trivial:3").unwrap().into_arc();
        let d = parse("diagram o\ncircle 1\n").unwrap();
        let cycle = QuandleMap::from_one_based(x.clone(), x.clone(), &[2, 3, 1]).unwrap();
        let swap = QuandleMap::from_one_based(x.clone(), x.clone(), &[2, 1, 3]).unwrap();
        let a = build_quiver(&d, &x, &[cycle]).unwrap();
        let b = build_quiver(&d, &x, &[swap]).unwrap();
        assert_eq!(a.in_degree_polynomial(), b.in_degree_polynomial());
        assert!(!are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn different_polynomials_short_circuit() {
        let a = trefoil_quiver("dihedral:3");
        let b = trefoil_quiver("dihedral:5");
        assert!(!are_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn oversized_inputs_are_refused() {
        let d = parse("diagram o\ncircle 1\ncircle 2\ncircle 3\n").unwrap();
        let x = builtin("dihedral:7").unwrap().into_arc();
        let q = build_quiver(&d, &x, &[QuandleMap::identity(x.clone())]).unwrap();
        assert_eq!(q.vertices().len(), 343);
        assert!(matches!(are_isomorphic(&q, &q), Err(Error::TooLarge(_))));
    }
}
