//! Line format:
//!
//! ```text
//! diagram <name>
//! circle <e>
//! x+ <under_in> <over_in> <under_out> <over_out>
//! x- <under_in> <over_in> <under_out> <over_out>
//! m <e1> <e2> <e3> <e4>        # counterclockwise
//! ```
//!
//! `#` starts a comment. A file may hold several `diagram` stanzas. Input whose
//! first non-blank character is `{` or `[` is read as JSON instead.

use super::{MarkedGraphDiagram, Node, Sign};
use crate::error::{Error, Result};

/// Parses exactly one diagram.
pub fn parse(text: &str) -> Result<MarkedGraphDiagram> {
    let mut all = parse_diagrams(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Error::Format("no `diagram` stanza found".into())),
        n => Err(Error::Format(format!("expected one diagram, found {n}"))),
    }
}

/// Parses every stanza in a file.
pub fn parse_diagrams(text: &str) -> Result<Vec<MarkedGraphDiagram>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return Ok(vec![serde_json::from_str(text)?]);
    }
    if trimmed.starts_with('[') {
        return Ok(serde_json::from_str(text)?);
    }
    parse_stanzas(text)?.into_iter().map(|(name, nodes)| MarkedGraphDiagram::new(name, nodes)).collect()
}

/// Named node lists in stanza order, checked for syntax only. Text format only.
pub fn parse_stanzas(text: &str) -> Result<Vec<(String, Vec<Node>)>> {
    let mut stanzas: Vec<(String, Vec<Node>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some(&head) = words.first() else { continue };
        let err = |word: &str, message: String| Error::Syntax { line: line_no, column: column_of(line, word), message };
        if head == "diagram" {
            match words.as_slice() {
                [_, name] => stanzas.push((name.to_string(), Vec::new())),
                [_] => return Err(err(head, "`diagram` needs a name".into())),
                [_, _, extra, ..] => return Err(err(extra, "diagram names cannot contain spaces".into())),
                [] => unreachable!(),
            }
            continue;
        }
        let Some((_, nodes)) = stanzas.last_mut() else {
            return Err(err(head, "expected `diagram <name>` first".into()));
        };
        let arity = match head {
            "circle" => 1,
            "x+" | "x-" | "m" => 4,
            other => return Err(err(other, format!("unknown record `{other}`; expected circle, x+, x- or m"))),
        };
        if words.len() != arity + 1 {
            let at = words.get(arity + 1).copied().unwrap_or(head);
            return Err(err(at, format!("`{head}` takes {arity} edge ids, got {}", words.len() - 1)));
        }
        let mut ids = [0u32; 4];
        for (k, w) in words[1..].iter().enumerate() {
            ids[k] = match w.parse::<u32>() {
                Ok(v) if v > 0 => v,
                _ => return Err(err(w, format!("expected a positive edge id, got `{w}`"))),
            };
        }
        nodes.push(match head {
            "circle" => Node::Circle(ids[0]),
            "x+" => Node::crossing(Sign::Positive, ids[0], ids[1], ids[2], ids[3]),
            "x-" => Node::crossing(Sign::Negative, ids[0], ids[1], ids[2], ids[3]),
            _ => Node::Marked(ids),
        });
    }
    Ok(stanzas)
}

fn column_of(line: &str, word: &str) -> usize {
    line.find(word).map(|c| c + 1).unwrap_or(1)
}

/// Canonical text form: input node order, edges renumbered by first appearance.
pub fn serialize(d: &MarkedGraphDiagram) -> String {
    let c = d.canonical();
    let mut s = format!("diagram {}\n", c.name());
    if c.marked_count() > 0 {
        s.push_str("# smoothing: L- joins (e1,e2),(e3,e4); L+ joins (e2,e3),(e4,e1)\n");
    }
    for node in c.nodes() {
        let line = match node {
            Node::Circle(e) => format!("circle {e}"),
            Node::Crossing { sign, under_in, over_in, under_out, over_out } => {
                format!("x{sign} {under_in} {over_in} {under_out} {over_out}")
            }
            Node::Marked([a, b, c, d]) => format!("m {a} {b} {c} {d}"),
        };
        s.push_str(&line);
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let text = "diagram t # comment\nx+ 10 40 20 50\nx+ 50 20 60 30\nx+ 30 60 40 10\n";
        let d = parse(text).unwrap();
        let once = serialize(&d);
        assert_eq!(once, "diagram t\nx+ 1 2 3 4\nx+ 4 3 5 6\nx+ 6 5 2 1\n");
        assert_eq!(serialize(&parse(&once).unwrap()), once);
    }

    #[test]
    fn json_mirrors_text() {
        let d = parse("diagram v\nm 1 2 2 1\ncircle 3\nx- 4 5 4 5\n").unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("\"marked\":[1,2,2,1]"));
        assert!(json.contains("\"sign\":\"-\""));
        let back = parse(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn json_is_validated() {
        let bad = r#"{"name":"b","nodes":[{"circle":1},{"circle":1}]}"#;
        assert!(parse(bad).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("diagram d\nx+ 1 2 q 4\n") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("x+ 1 2 3 4\n") {
            Err(Error::Syntax { line: 1, column: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("diagram d\ny 1\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("diagram d\nm 1 2 3\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("diagram d\ncircle 0\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn several_stanzas() {
        let all = parse_diagrams("diagram a\ncircle 1\ndiagram b\ncircle 1\ncircle 2\n").unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].nodes().len(), 2);
        assert!(parse("diagram a\ncircle 1\ndiagram b\ncircle 1\n").is_err());
    }
}
