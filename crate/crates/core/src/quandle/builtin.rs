use std::path::Path;
use std::sync::Arc;

use super::{parse_quandles, Quandle};
use crate::error::{Error, Result};

const TETRAHEDRAL: [[usize; 4]; 4] = [[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]];

// Six elements: a copy of Core(Z3) on {1,2,3}, a two-element orbit {4,5}
// swapped by 1, 2, 3 and 6, and a fixed point 6.
const EX1: [[usize; 6]; 6] = [
    [1, 3, 2, 1, 1, 1],
    [3, 2, 1, 2, 2, 2],
    [2, 1, 3, 3, 3, 3],
    [5, 5, 5, 4, 4, 5],
    [4, 4, 4, 5, 5, 4],
    [6, 6, 6, 6, 6, 6],
];

const EX2: [[usize; 3]; 3] = [[1, 1, 2], [2, 2, 1], [3, 3, 3]];

const FOUR_ELEMENT: [[usize; 4]; 4] = [[1, 1, 4, 3], [2, 2, 2, 2], [4, 3, 3, 1], [3, 4, 1, 4]];

fn rows<const N: usize>(t: &[[usize; N]; N]) -> Vec<Vec<usize>> {
    t.iter().map(|r| r.to_vec()).collect()
}

/// Names accepted by [`builtin`], with `<n>`/`<t>`/`<p>` placeholders.
pub fn builtin_names() -> Vec<String> {
    [
        "dihedral:<n>",
        "trivial:<n>",
        "alexander:<n>:<t>",
        "symplectic:<p>",
        "tetrahedral",
        "paper-ex1",
        "paper-ex2",
        "paper-4elt",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Resolves a built-in quandle name such as `dihedral:3` or `tetrahedral`.
pub fn builtin(name: &str) -> Result<Quandle> {
    let lookup_error = || Error::Lookup { name: name.to_string(), valid: builtin_names() };
    let parse_num = |s: &str| s.parse::<i64>().map_err(|_| lookup_error());
    let parts: Vec<&str> = name.split(':').collect();
    let q = match parts.as_slice() {
        ["dihedral", n] => Quandle::dihedral(parse_num(n)?.try_into().map_err(|_| lookup_error())?)?,
        ["trivial", n] => Quandle::trivial(parse_num(n)?.try_into().map_err(|_| lookup_error())?)?,
        ["alexander", n, t] => {
            Quandle::alexander(parse_num(n)?.try_into().map_err(|_| lookup_error())?, parse_num(t)?)?
        }
        ["symplectic", p] => Quandle::symplectic(parse_num(p)?.try_into().map_err(|_| lookup_error())?)?,
        ["tetrahedral"] => Quandle::from_rows("tetrahedral", &rows(&TETRAHEDRAL))?,
        ["paper-ex1"] => Quandle::from_rows("paper-ex1", &rows(&EX1))?,
        ["paper-ex2"] => Quandle::from_rows("paper-ex2", &rows(&EX2))?,
        ["paper-4elt"] => Quandle::from_rows("paper-4elt", &rows(&FOUR_ELEMENT))?,
        _ => return Err(lookup_error()),
    };
    Ok(q)
}

/// Resolves a quandle spec: a built-in name, a file path (first stanza), or
/// `path:name` selecting a named stanza from a file.
pub fn resolve_quandle(spec: &str) -> Result<Arc<Quandle>> {
    match builtin(spec) {
        Ok(q) => return Ok(Arc::new(q)),
        Err(Error::Lookup { .. }) => {}
        Err(e) => return Err(e),
    }
    let (path, wanted) = if Path::new(spec).is_file() {
        (spec, None)
    } else if let Some((p, n)) = spec.rsplit_once(':').filter(|(p, _)| Path::new(p).is_file()) {
        (p, Some(n))
    } else {
        return Err(Error::Lookup { name: spec.to_string(), valid: builtin_names() });
    };
    let text = std::fs::read_to_string(path)?;
    let mut all = parse_quandles(&text)?;
    let idx = match wanted {
        None if !all.is_empty() => 0,
        None => return Err(Error::Format(format!("{path} holds no quandle stanza"))),
        Some(n) => all.iter().position(|q| q.name() == n).ok_or_else(|| Error::Lookup {
            name: n.to_string(),
            valid: all.iter().map(|q| q.name().to_string()).collect(),
        })?,
    };
    Ok(Arc::new(all.swap_remove(idx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::verify_axioms;

    #[test]
    fn every_builtin_is_a_quandle() {
        for name in [
            "tetrahedral",
            "paper-ex1",
            "paper-ex2",
            "paper-4elt",
            "dihedral:5",
            "trivial:3",
            "alexander:7:3",
            "symplectic:3",
        ] {
            let q = builtin(name).unwrap();
            assert!(verify_axioms(&q.rows()).unwrap().is_valid(), "{name}");
        }
    }

    #[test]
    fn unknown_names_list_the_valid_ones() {
        match builtin("octahedral") {
            Err(Error::Lookup { valid, .. }) => assert!(valid.iter().any(|v| v == "tetrahedral")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(resolve_quandle("no/such/file"), Err(Error::Lookup { .. })));
    }

    #[test]
    fn domain_errors_pass_through() {
        assert!(matches!(builtin("alexander:6:2"), Err(Error::Domain(_))));
    }
}
