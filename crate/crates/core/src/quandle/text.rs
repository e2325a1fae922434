//! Stanza format for quandle tables:
//!
//! ```text
//! # comment
//! quandle core3 3
//! 1 3 2
//! 3 2 1
//! 2 1 3
//! ```

use super::Quandle;
use crate::error::{Error, Result};

pub fn parse_quandles(text: &str) -> Result<Vec<Quandle>> {
    parse_tables(text)?.into_iter().map(|(name, rows)| Quandle::from_rows(name, &rows)).collect()
}

/// Named tables in stanza order, without checking the axioms.
pub fn parse_tables(text: &str) -> Result<Vec<(String, Vec<Vec<usize>>)>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let mut out = Vec::new();
    while let Some((line_no, line)) = lines.next() {
        let words: Vec<&str> = line.split_whitespace().collect();
        let (name, n) = match words.as_slice() {
            ["quandle", name, n] => {
                let n: usize = n.parse().map_err(|_| syntax(line_no, line, n, "expected an element count"))?;
                (name.to_string(), n)
            }
            _ => return Err(syntax(line_no, line, words[0], "expected `quandle <name> <n>`")),
        };
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (row_no, row) =
                lines.next().ok_or_else(|| Error::Format(format!("quandle `{name}` ends before its {n} rows")))?;
            let parsed = row
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| syntax(row_no, row, w, "expected an integer")))
                .collect::<Result<Vec<_>>>()?;
            rows.push(parsed);
        }
        out.push((name, rows));
    }
    Ok(out)
}

fn syntax(line: usize, text: &str, word: &str, message: &str) -> Error {
    let column = text.find(word).map(|c| c + 1).unwrap_or(1);
    Error::Syntax { line, column, message: message.to_string() }
}

pub fn format_quandle(q: &Quandle) -> String {
    let width = q.order().to_string().len();
    let mut s = format!("quandle {} {}\n", q.name(), q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}
