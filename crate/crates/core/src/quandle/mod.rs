//! Finite quandles stored as operation tables.
//!
//! Elements are `0..n` inside the library. Every text, JSON and CLI surface
//! prints them as `1..n`, matching the usual way quandle tables are written.
//! The table is row-indexed by the left operand: `op(x, y)` is the entry in
//! row `x`, column `y`.

mod builtin;
mod hom;
mod text;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use builtin::{builtin, builtin_names, resolve_quandle};
pub use hom::{enumerate_endos, enumerate_homs, QuandleMap};
pub use text::{format_quandle, parse_quandles, parse_tables};

/// A validated finite quandle. Equality compares operation tables, not names.
#[derive(Clone)]
pub struct Quandle {
    name: String,
    n: usize,
    table: Vec<usize>,
    // inverse[x * n + y] = z with z ▷ y = x
    inverse: Vec<usize>,
}

/// A single failed axiom, with a witness in external `1..n` naming.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `x ▷ x != x`.
    Idempotence { x: usize },
    /// The column map `· ▷ y` sends both `x1` and `x2` to the same element.
    RightInvertibility { y: usize, x1: usize, x2: usize },
    /// `(x ▷ y) ▷ z != (x ▷ z) ▷ (y ▷ z)`.
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl AxiomViolation {
    pub fn axiom_number(&self) -> u8 {
        match self {
            AxiomViolation::Idempotence { .. } => 1,
            AxiomViolation::RightInvertibility { .. } => 2,
            AxiomViolation::SelfDistributivity { .. } => 3,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Idempotence { x } => write!(f, "axiom 1 (idempotence) fails at x={x}"),
            AxiomViolation::RightInvertibility { y, x1, x2 } => {
                write!(f, "axiom 2 (right invertibility) fails at y={y}: x={x1} and x={x2} have the same image")
            }
            AxiomViolation::SelfDistributivity { x, y, z } => {
                write!(f, "axiom 3 (right self-distributivity) fails at x={x}, y={y}, z={z}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three quandle axioms on a table written with entries in `1..n`.
///
/// A non-square table or an entry outside `1..n` is a [`Error::Format`];
/// axiom failures are reported, all of them, in the returned report.
pub fn verify_axioms(rows: &[Vec<usize>]) -> Result<AxiomReport> {
    let table = zero_based_table(rows)?;
    Ok(check_axioms(rows.len(), &table))
}

fn zero_based_table(rows: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Format("empty table".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Format(format!(
                "table is not square: row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        for (j, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::Format(format!("entry {v} at row {}, column {} is outside 1..{n}", i + 1, j + 1)));
            }
            table.push(v - 1);
        }
    }
    Ok(table)
}

fn check_axioms(n: usize, table: &[usize]) -> AxiomReport {
    let op = |x: usize, y: usize| table[x * n + y];
    let mut violations = Vec::new();
    for x in 0..n {
        if op(x, x) != x {
            violations.push(AxiomViolation::Idempotence { x: x + 1 });
        }
    }
    for y in 0..n {
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let img = op(x, y);
            match seen[img] {
                Some(prev) => violations.push(AxiomViolation::RightInvertibility { y: y + 1, x1: prev + 1, x2: x + 1 }),
                None => seen[img] = Some(x),
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), z) != op(op(x, z), op(y, z)) {
                    violations.push(AxiomViolation::SelfDistributivity { x: x + 1, y: y + 1, z: z + 1 });
                }
            }
        }
    }
    AxiomReport { violations }
}

impl Quandle {
    /// Builds a quandle from rows with entries in `1..n`, rejecting tables that fail an axiom.
    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self> {
        let table = zero_based_table(rows)?;
        Self::from_zero_based(name.into(), rows.len(), table)
    }

    pub(crate) fn from_zero_based(name: String, n: usize, table: Vec<usize>) -> Result<Self> {
        let report = check_axioms(n, &table);
        if !report.is_valid() {
            let shown: Vec<String> = report.violations.iter().take(3).map(|v| v.to_string()).collect();
            return Err(Error::Domain(format!(
                "`{name}` is not a quandle ({} violation(s)): {}",
                report.violations.len(),
                shown.join("; ")
            )));
        }
        let mut inverse = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                inverse[table[x * n + y] * n + y] = x;
            }
        }
        Ok(Quandle { name, n, table, inverse })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// The unique `z` with `z ▷ y = x`.
    #[inline]
    pub fn inverse_op(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.n + y]
    }

    /// Operation table with entries in `1..n`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| (0..self.n).map(|y| self.op(x, y) + 1).collect()).collect()
    }

    /// True when `x ▷ y = x` for all pairs.
    pub fn is_trivial(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.op(x, y) == x))
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    // --- constructors ---

    /// Dihedral (cyclic core) quandle `x ▷ y = 2y - x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("dihedral quandle needs n >= 1".into()));
        }
        Self::affine(format!("dihedral:{n}"), n, n as i64 - 1)
    }

    /// Trivial quandle `x ▷ y = x` on `n` elements.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("trivial quandle needs n >= 1".into()));
        }
        let table = (0..n).flat_map(|x| std::iter::repeat_n(x, n)).collect();
        Self::from_zero_based(format!("trivial:{n}"), n, table)
    }

    /// Alexander quandle on `Z/n` with `x ▷ y = t x + (1 - t) y`; `t` must be a unit mod `n`.
    pub fn alexander(n: usize, t: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("alexander quandle needs n >= 1".into()));
        }
        if gcd(t.rem_euclid(n as i64) as u64, n as u64) != 1 && n > 1 {
            return Err(Error::Domain(format!("t = {t} is not a unit mod {n}")));
        }
        Self::affine(format!("alexander:{n}:{t}"), n, t)
    }

    fn affine(name: String, n: usize, t: i64) -> Result<Self> {
        let m = n as i64;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                // elements 1..n stand for residues, with n standing for 0
                let (xv, yv) = (x as i64 + 1, y as i64 + 1);
                let v = (t * xv + (1 - t) * yv).rem_euclid(m);
                table.push(((v - 1).rem_euclid(m)) as usize);
            }
        }
        Self::from_zero_based(name, n, table)
    }

    /// Conjugation quandle `x ▷ y = y^-m x y^m` on a finite group given by its
    /// Cayley table (entries `1..n`, row `a` column `b` holding `a·b`).
    pub fn conjugation(group_rows: &[Vec<usize>], m: i64) -> Result<Self> {
        let group = Group::from_rows(group_rows)?;
        let n = group.n;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let ym = group.pow(y, m);
                let ym_inv = group.inv[ym];
                table.push(group.mul(group.mul(ym_inv, x), ym));
            }
        }
        Self::from_zero_based(format!("conjugation:{n}:{m}"), n, table)
    }

    /// Symplectic quandle on `(F_p)^2` with `x ▷ y = x + [x, y] y`,
    /// `[x, y] = x1 y2 - x2 y1`. Element `a*p + b + 1` is the vector `(a, b)`.
    pub fn symplectic(p: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("symplectic quandle needs a prime, got {p}")));
        }
        if p > 7 {
            return Err(Error::Domain(format!("symplectic quandle limited to p <= 7, got {p}")));
        }
        let n = p * p;
        let pi = p as i64;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = ((x / p) as i64, (x % p) as i64);
            for y in 0..n {
                let (y1, y2) = ((y / p) as i64, (y % p) as i64);
                let form = x1 * y2 - x2 * y1;
                let z1 = (x1 + form * y1).rem_euclid(pi);
                let z2 = (x2 + form * y2).rem_euclid(pi);
                table.push((z1 * pi + z2) as usize);
            }
        }
        Self::from_zero_based(format!("symplectic:{p}"), n, table)
    }
}

impl PartialEq for Quandle {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for Quandle {}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quandle").field("name", &self.name).field("rows", &self.rows()).finish()
    }
}

struct Group {
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl Group {
    fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let table = zero_based_table(rows)?;
        let n = rows.len();
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::Format("group table has no identity".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                    .ok_or_else(|| Error::Format(format!("element {} has no inverse", a + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::Format(format!(
                            "group table is not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(Group { n, table, identity, inv })
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    fn pow(&self, a: usize, m: i64) -> usize {
        let base = if m < 0 { self.inv[a] } else { a };
        (0..m.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
