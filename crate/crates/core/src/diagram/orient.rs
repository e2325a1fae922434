//! Direction of every edge end.
//!
//! Each slot (node, position) is either the head or the tail of its edge. The
//! constraints are parity relations: the two ends of an edge have opposite
//! roles, crossing slots have fixed roles, and the four slots of a marked
//! vertex alternate. Components of the constraint graph that touch no crossing
//! are free; they get the earliest marked vertex's first edge incoming.

use std::collections::HashMap;

use serde::Serialize;

use super::{EdgeId, Node, Violation};
use crate::union_find::ParityUnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    /// The edge ends here.
    In,
    /// The edge starts here.
    Out,
}

const CROSSING_ROLES: [Role; 4] = [Role::In, Role::In, Role::Out, Role::Out];

pub(crate) fn infer_roles(nodes: &[Node]) -> Result<Vec<Vec<Role>>, Vec<Violation>> {
    // slot ids; index 0 is an anchor whose value means "Out"
    let mut base = Vec::with_capacity(nodes.len());
    let mut next = 1;
    for node in nodes {
        base.push(next);
        if !matches!(node, Node::Circle(_)) {
            next += 4;
        }
    }
    let mut uf = ParityUnionFind::new(next);
    let mut first_end: HashMap<EdgeId, usize> = HashMap::new();
    let mut violations = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        let slots = node.slots();
        let mut fail = |msg: String| violations.push(Violation::Orientation { node: i, message: msg });
        match node {
            Node::Circle(_) => continue,
            Node::Crossing { .. } => {
                for (k, role) in CROSSING_ROLES.iter().enumerate() {
                    if !uf.relate(0, base[i] + k, *role == Role::In) {
                        fail(format!("slot {} cannot be {}", k + 1, role_word(*role)));
                    }
                }
            }
            Node::Marked(_) => {
                for k in 0..3 {
                    if !uf.relate(base[i] + k, base[i] + k + 1, true) {
                        fail(format!("edges {} and {} cannot alternate", slots[k], slots[k + 1]));
                    }
                }
            }
        }
        for (k, &e) in slots.iter().enumerate() {
            let slot = base[i] + k;
            match first_end.get(&e) {
                None => {
                    first_end.insert(e, slot);
                }
                Some(&other) => {
                    if !uf.relate(other, slot, true) {
                        fail(format!("edge {e} would run head to head or tail to tail"));
                    }
                }
            }
        }
    }
    if !violations.is_empty() {
        violations.dedup();
        return Err(violations);
    }
    // pin free components: first slot of each marked vertex, in node order
    for (i, node) in nodes.iter().enumerate() {
        if matches!(node, Node::Marked(_)) {
            let (root, _) = uf.find(base[i]);
            let (anchor, _) = uf.find(0);
            if root != anchor {
                uf.relate(0, base[i], true);
            }
        }
    }
    let (_, anchor_parity) = uf.find(0);
    Ok(nodes
        .iter()
        .enumerate()
        .map(|(i, node)| match node {
            Node::Circle(_) => Vec::new(),
            _ => (0..4)
                .map(|k| {
                    let (_, p) = uf.find(base[i] + k);
                    if p == anchor_parity {
                        Role::Out
                    } else {
                        Role::In
                    }
                })
                .collect(),
        })
        .collect())
}

fn role_word(role: Role) -> &'static str {
    match role {
        Role::In => "incoming",
        Role::Out => "outgoing",
    }
}
