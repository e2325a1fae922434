//! Planar diagrams from Morse words.
//!
//! A word is read top to bottom over a row of vertical strands numbered from
//! 0 at the left. Tokens:
//!
//! * `C<i>` opens a cap, inserting two strands at positions `i`, `i+1`.
//!   `C<i>+` makes the left strand run downward, `C<i>-` upward; a bare `C<i>`
//!   leaves the direction to the rest of the word.
//! * `U<i>` closes strands `i` and `i+1` with a cup.
//! * `X<i>` crosses strands `i`, `i+1` with the strand from top left to bottom
//!   right on top; `Y<i>` puts the other strand on top.
//! * `M<i>` makes strands `i`, `i+1` touch at a marked vertex whose `L+`
//!   smoothing joins them horizontally (top pair and bottom pair); `N<i>`
//!   joins them vertically in `L+`. The strands must be antiparallel.
//!
//! Every strand must be closed off by the end of the word. Directions left
//! open after the hints are fixed by making the left strand of the earliest
//! cap of each component run downward.

use std::collections::{BTreeMap, HashSet};

use super::{EdgeId, MarkedGraphDiagram, Node, Sign};
use crate::error::{Error, Result};
use crate::union_find::{ParityUnionFind, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    // the strand from top left to bottom right is over
    OverFalling,
    OverRising,
    // L+ joins the top pair and the bottom pair
    MarkedH,
    MarkedV,
}

// counterclockwise slot order around a piece
const TL: usize = 0;
const BL: usize = 1;
const BR: usize = 2;
const TR: usize = 3;

struct Piece {
    kind: Kind,
    segments: [usize; 4],
}

/// Builds a diagram from a Morse word; see the module docs for the syntax.
pub fn from_morse_word(name: &str, word: &str) -> Result<MarkedGraphDiagram> {
    let mut segments = 0usize;
    // segment ids on the current row of strands
    let mut row: Vec<usize> = Vec::new();
    let mut pieces: Vec<Piece> = Vec::new();
    // segments joined by caps and cups form one edge
    let mut joins: Vec<(usize, usize)> = Vec::new();
    // cap left segments, with an optional "runs downward" hint
    let mut caps: Vec<(usize, Option<bool>)> = Vec::new();
    for (k, token) in word.split_whitespace().enumerate() {
        let bad = |msg: &str| Error::Format(format!("token {} `{token}`: {msg}", k + 1));
        let mut chars = token.chars();
        let head = chars.next().unwrap();
        let rest = chars.as_str();
        let (digits, hint) = if let Some(d) = rest.strip_suffix('+') {
            (d, Some(true))
        } else if let Some(d) = rest.strip_suffix('-') {
            (d, Some(false))
        } else {
            (rest, None)
        };
        let i: usize = digits.parse().map_err(|_| bad("expected a strand position"))?;
        if hint.is_some() && head != 'C' {
            return Err(bad("only caps take a direction"));
        }
        if head == 'C' {
            if i > row.len() {
                return Err(bad("position past the last strand"));
            }
            let (l, r) = (segments, segments + 1);
            segments += 2;
            row.splice(i..i, [l, r]);
            joins.push((l, r));
            caps.push((l, hint));
            continue;
        }
        if i + 1 >= row.len() {
            return Err(bad("needs strands at positions i and i+1"));
        }
        let (a, b) = (row[i], row[i + 1]);
        let kind = match head {
            'U' => {
                row.drain(i..i + 2);
                joins.push((a, b));
                continue;
            }
            'X' => Kind::OverFalling,
            'Y' => Kind::OverRising,
            'M' => Kind::MarkedH,
            'N' => Kind::MarkedV,
            _ => return Err(bad("unknown token; expected C, U, X, Y, M or N")),
        };
        let (bl, br) = (segments, segments + 1);
        segments += 2;
        row[i] = bl;
        row[i + 1] = br;
        pieces.push(Piece { kind, segments: [a, bl, br, b] });
    }
    if !row.is_empty() {
        return Err(Error::Format(format!("{} strands are left open at the bottom", row.len())));
    }

    // direction variables: value differs from the anchor (index 0) = downward
    let var = |s: usize| s + 1;
    let mut dir = ParityUnionFind::new(segments + 1);
    let conflict = |node: usize, what: &str| Error::Orientation { node, message: what.to_string() };
    for &(a, b) in &joins {
        // a cap or cup turns a downward strand upward
        if !dir.relate(var(a), var(b), true) {
            return Err(conflict(0, "a cap or cup closes a strand against its direction"));
        }
    }
    for (p, piece) in pieces.iter().enumerate() {
        let [tl, bl, br, tr] = piece.segments.map(var);
        let ok = match piece.kind {
            Kind::OverFalling | Kind::OverRising => dir.relate(tl, br, false) && dir.relate(tr, bl, false),
            Kind::MarkedH | Kind::MarkedV => {
                dir.relate(tl, bl, false) && dir.relate(tr, br, false) && dir.relate(tl, tr, true)
            }
        };
        if !ok {
            return Err(conflict(p, "strands cannot be oriented consistently here"));
        }
    }
    for &(l, hint) in &caps {
        if let Some(down) = hint {
            if !dir.relate(0, var(l), down) {
                return Err(conflict(0, "direction hints conflict"));
            }
        }
    }
    for &(l, _) in &caps {
        if dir.find(var(l)).0 != dir.find(0).0 {
            dir.relate(0, var(l), true);
        }
    }
    let anchor = dir.find(0).1;
    let mut downward = |s: usize| dir.find(var(s)).1 != anchor;

    // edges: classes of segments under caps and cups
    let mut edge_of = UnionFind::new(segments);
    for &(a, b) in &joins {
        edge_of.union(a, b);
    }
    let mut ids: BTreeMap<usize, EdgeId> = BTreeMap::new();
    for piece in &pieces {
        for &s in &piece.segments {
            let next = ids.len() as EdgeId + 1;
            ids.entry(edge_of.find(s)).or_insert(next);
        }
    }
    let mut nodes = Vec::with_capacity(pieces.len());
    for piece in &pieces {
        let e = piece.segments.map(|s| ids[&edge_of.find(s)]);
        let node = match piece.kind {
            Kind::MarkedH => Node::Marked([e[TL], e[BL], e[BR], e[TR]]),
            Kind::MarkedV => Node::Marked([e[BL], e[BR], e[TR], e[TL]]),
            Kind::OverFalling | Kind::OverRising => {
                // a top slot is incoming when its segment runs down, a bottom slot when it runs up
                let incoming = |slot: usize, d: &mut dyn FnMut(usize) -> bool| {
                    let down = d(piece.segments[slot]);
                    if slot == TL || slot == TR {
                        down
                    } else {
                        !down
                    }
                };
                let (over, under) =
                    if piece.kind == Kind::OverFalling { ([TL, BR], [TR, BL]) } else { ([TR, BL], [TL, BR]) };
                let (oi, oo) = if incoming(over[0], &mut downward) { (over[0], over[1]) } else { (over[1], over[0]) };
                let (ui, uo) =
                    if incoming(under[0], &mut downward) { (under[0], under[1]) } else { (under[1], under[0]) };
                // positive when the outgoing over slot follows the incoming under slot counterclockwise
                let sign = if (ui + 1) % 4 == oo { Sign::Positive } else { Sign::Negative };
                Node::crossing(sign, e[ui], e[oi], e[uo], e[oo])
            }
        };
        nodes.push(node);
    }
    let touched: HashSet<usize> = ids.keys().copied().collect();
    let mut free = HashSet::new();
    for s in 0..segments {
        let r = edge_of.find(s);
        if !touched.contains(&r) {
            free.insert(r);
        }
    }
    let first = ids.len() as EdgeId + 1;
    nodes.extend((first..first + free.len() as EdgeId).map(Node::Circle));
    MarkedGraphDiagram::new(name, nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Node;

    #[test]
    fn single_circle() {
        let d = from_morse_word("o", "C0 U0").unwrap();
        assert_eq!(d.nodes(), &[Node::Circle(1)]);
    }

    #[test]
    fn trefoil_as_two_bridge_plat() {
        let d = from_morse_word("t", "C0 C2 X1 X1 X1 U0 U0").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count().unwrap(), 1);
        assert_eq!(d.writhe().abs(), 3);
    }

    #[test]
    fn hopf_link_has_two_components_and_linking_signs() {
        let d = from_morse_word("h", "C0 C2 X1 X1 U2 U0").unwrap();
        assert_eq!(d.component_count().unwrap(), 2);
        assert_eq!(d.writhe().abs(), 2);
    }

    #[test]
    fn direction_hint_flips_signs() {
        let a = from_morse_word("h", "C0+ C2+ X1 X1 U2 U0").unwrap();
        let b = from_morse_word("h", "C0+ C2- X1 X1 U2 U0").unwrap();
        assert_eq!(a.writhe(), -b.writhe());
    }

    #[test]
    fn touching_parallel_strands_is_an_error() {
        // two caps side by side give strands 1 and 2 opposite directions only
        // if the caps agree; force them parallel
        assert!(from_morse_word("bad", "C0+ C2- M1 U2 U0").is_err());
        assert!(from_morse_word("ok", "C0+ C2+ M1 U2 U0").is_ok());
    }

    #[test]
    fn marked_torus_resolutions() {
        // two circles touching twice; each smoothing bands them once
        let d = from_morse_word("torus", "C0 C2 M1 N1 U2 U0").unwrap();
        for s in [Sign::Positive, Sign::Negative] {
            let r = d.resolve(s);
            assert_eq!(r.crossing_count(), 0);
            assert_eq!(r.component_count().unwrap(), 1);
        }
    }

    #[test]
    fn malformed_words() {
        assert!(from_morse_word("x", "C0").is_err());
        assert!(from_morse_word("x", "U0").is_err());
        assert!(from_morse_word("x", "C0 Q0 U0").is_err());
        assert!(from_morse_word("x", "C0 X0+ U0").is_err());
    }
}
