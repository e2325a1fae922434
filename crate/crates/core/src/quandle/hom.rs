use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::Quandle;
use crate::error::{Error, Result};

/// A map between finite quandles, stored as its image vector.
///
/// Equality and ordering only look at the image vector.
#[derive(Clone)]
pub struct QuandleMap {
    source: Arc<Quandle>,
    target: Arc<Quandle>,
    image: Vec<usize>,
}

impl QuandleMap {
    /// Builds a map from a zero-based image vector, checking the homomorphism condition.
    pub fn new(source: Arc<Quandle>, target: Arc<Quandle>, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.order() {
            return Err(Error::Domain(format!(
                "image vector has length {}, source has {} elements",
                image.len(),
                source.order()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= target.order()) {
            return Err(Error::Domain(format!(
                "image value {} is outside the target (order {})",
                bad + 1,
                target.order()
            )));
        }
        let map = QuandleMap { source, target, image };
        if let Some((x, y)) = map.first_failure() {
            return Err(Error::Domain(format!("{map} is not a homomorphism: fails at x={}, y={}", x + 1, y + 1)));
        }
        Ok(map)
    }

    /// Same as [`QuandleMap::new`] with an image vector written in `1..n`.
    pub fn from_one_based(source: Arc<Quandle>, target: Arc<Quandle>, image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::Domain("image entries are named from 1".into()));
        }
        Self::new(source, target, image.iter().map(|v| v - 1).collect())
    }

    pub fn identity(q: Arc<Quandle>) -> Self {
        let image = (0..q.order()).collect();
        QuandleMap { source: q.clone(), target: q, image }
    }

    fn first_failure(&self) -> Option<(usize, usize)> {
        let (s, t) = (&self.source, &self.target);
        for x in 0..s.order() {
            for y in 0..s.order() {
                if self.image[s.op(x, y)] != t.op(self.image[x], self.image[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn source(&self) -> &Arc<Quandle> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quandle> {
        &self.target
    }

    /// Zero-based image vector.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &QuandleMap) -> Result<QuandleMap> {
        if *inner.target != *self.source {
            return Err(Error::Domain(format!(
                "cannot compose: target `{}` of the inner map is not the source `{}` of the outer map",
                inner.target.name(),
                self.source.name()
            )));
        }
        Ok(QuandleMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            image: inner.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    pub fn is_endomorphism(&self) -> bool {
        *self.source == *self.target
    }
}

impl PartialEq for QuandleMap {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image
    }
}

impl Eq for QuandleMap {}

impl PartialOrd for QuandleMap {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuandleMap {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.image.cmp(&other.image)
    }
}

impl std::hash::Hash for QuandleMap {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.image.hash(state)
    }
}

impl fmt::Display for QuandleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for QuandleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuandleMap{self}")
    }
}

/// All homomorphisms `source → target`, in lexicographic order of image vectors.
///
/// Backtracks over `image[0], image[1], ...`; every assignment propagates the
/// forced values `image[a ▷ b] = image[a] ▷ image[b]` over assigned pairs.
pub fn enumerate_homs(source: &Arc<Quandle>, target: &Arc<Quandle>) -> Vec<QuandleMap> {
    let n = source.order();
    let m = target.order();
    let mut images: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut partial = vec![None; n];
            if assign(source, target, &mut partial, 0, first) {
                search(source, target, &mut partial, &mut out);
            }
            out
        })
        .flatten()
        .collect();
    images.sort();
    images.into_iter().map(|image| QuandleMap { source: source.clone(), target: target.clone(), image }).collect()
}

/// `enumerate_homs(q, q)`.
pub fn enumerate_endos(q: &Arc<Quandle>) -> Vec<QuandleMap> {
    enumerate_homs(q, q)
}

fn search(source: &Quandle, target: &Quandle, partial: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
    let Some(next) = partial.iter().position(Option::is_none) else {
        out.push(partial.iter().map(|v| v.unwrap()).collect());
        return;
    };
    for value in 0..target.order() {
        let saved = partial.clone();
        if assign(source, target, partial, next, value) {
            search(source, target, partial, out);
        }
        *partial = saved;
    }
}

/// Sets `partial[x] = value` and closes under the homomorphism condition.
/// Returns false on a contradiction (the partial map is then garbage).
fn assign(source: &Quandle, target: &Quandle, partial: &mut [Option<usize>], x: usize, value: usize) -> bool {
    let mut queue = vec![(x, value)];
    partial[x] = Some(value);
    let mut assigned: BTreeSet<usize> = partial.iter().enumerate().filter_map(|(i, v)| v.map(|_| i)).collect();
    while let Some((a, _)) = queue.pop() {
        let others: Vec<usize> = assigned.iter().copied().collect();
        for b in others {
            for (l, r) in [(a, b), (b, a)] {
                let prod = source.op(l, r);
                let want = target.op(partial[l].unwrap(), partial[r].unwrap());
                match partial[prod] {
                    Some(have) if have != want => return false,
                    Some(_) => {}
                    None => {
                        partial[prod] = Some(want);
                        assigned.insert(prod);
                        queue.push((prod, want));
                    }
                }
            }
        }
    }
    true
}
