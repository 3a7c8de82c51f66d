//! Monotone, length-preserving maps between finite trees viewed as B-trees
//! (the root stands for the empty sequence and is left out of the domain).

use super::finite::FiniteTree;
use crate::error::{Error, Result};

/// Default node cap for the exhaustive oracle.
pub const DEFAULT_BRUTEFORCE_BOUND: usize = 12;

/// A node map `S → T`; `None` at the root of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeMap(pub Vec<Option<usize>>);

impl NodeMap {
    pub fn get(&self, node: usize) -> Option<usize> {
        self.0.get(node).copied().flatten()
    }
}

/// Builds a monotone length-preserving map from `s` into `t`, or `None` when
/// `o(S) > o(T)`.
///
/// Each length-one node `s` is sent to the first length-one node `t` whose
/// subtree order is at least that of `s`, and the construction recurses into
/// the two subtrees.
pub fn monotone_embed(s: &FiniteTree, t: &FiniteTree) -> Option<NodeMap> {
    let mut map = NodeMap(vec![None; s.len()]);
    let Some(s_root) = s.root() else {
        return Some(map);
    };
    if s.is_leaf(s_root) {
        return Some(map);
    }
    let t_root = t.root()?;
    embed_children(s, s_root, t, t_root, &mut map).then_some(map)
}

fn embed_children(
    s: &FiniteTree,
    s_node: usize,
    t: &FiniteTree,
    t_node: usize,
    map: &mut NodeMap,
) -> bool {
    for &sc in s.children(s_node) {
        let need = s.subtree_height(sc);
        let Some(&tc) = t
            .children(t_node)
            .iter()
            .find(|&&tc| t.subtree_height(tc) >= need)
        else {
            return false;
        };
        map.0[sc] = Some(tc);
        if !embed_children(s, sc, t, tc, map) {
            return false;
        }
    }
    true
}

/// Checks the defining properties directly: every non-root node is mapped to
/// a non-root node of the same depth, and `a ≺ b` implies `θ(a) ≺ θ(b)`.
pub fn is_monotone_length_preserving(s: &FiniteTree, t: &FiniteTree, map: &NodeMap) -> bool {
    if map.0.len() != s.len() {
        return false;
    }
    for a in 0..s.len() {
        let image = map.0[a];
        if s.parent(a).is_none() {
            if image.is_some() {
                return false;
            }
            continue;
        }
        let Some(ta) = image else {
            return false;
        };
        if ta >= t.len() || t.depth(ta) != s.depth(a) {
            return false;
        }
    }
    for a in 0..s.len() {
        for b in 0..s.len() {
            if s.parent(a).is_some() && s.is_proper_ancestor(a, b) {
                let (ta, tb) = (map.0[a].unwrap(), map.0[b].unwrap());
                if !t.is_proper_ancestor(ta, tb) {
                    return false;
                }
            }
        }
    }
    true
}

/// Exhaustive search over all depth-preserving assignments, checking
/// monotonicity against every already-assigned comparable pair.
pub fn embed_exists_bruteforce(s: &FiniteTree, t: &FiniteTree) -> Result<bool> {
    embed_exists_bruteforce_bounded(s, t, DEFAULT_BRUTEFORCE_BOUND)
}

pub fn embed_exists_bruteforce_bounded(s: &FiniteTree, t: &FiniteTree, bound: usize) -> Result<bool> {
    if s.len() > bound || t.len() > bound {
        return Err(Error::SizeBound(format!(
            "exhaustive embedding search is limited to {bound} nodes"
        )));
    }
    let domain: Vec<usize> = s.preorder().into_iter().filter(|&n| s.parent(n).is_some()).collect();
    let t_by_depth: Vec<Vec<usize>> = {
        let mut levels: Vec<Vec<usize>> = Vec::new();
        for n in 0..t.len() {
            let d = t.depth(n);
            if levels.len() <= d {
                levels.resize(d + 1, Vec::new());
            }
            levels[d].push(n);
        }
        levels
    };
    let mut assignment: Vec<Option<usize>> = vec![None; s.len()];
    Ok(search(s, t, &domain, 0, &t_by_depth, &mut assignment))
}

fn search(
    s: &FiniteTree,
    t: &FiniteTree,
    domain: &[usize],
    i: usize,
    t_by_depth: &[Vec<usize>],
    assignment: &mut Vec<Option<usize>>,
) -> bool {
    let Some(&node) = domain.get(i) else {
        return true;
    };
    let depth = s.depth(node);
    let Some(candidates) = t_by_depth.get(depth) else {
        return false;
    };
    for &cand in candidates {
        let consistent = domain[..i].iter().all(|&prev| {
            let image = assignment[prev].expect("assigned");
            // Preorder assigns ancestors first, so only this direction can apply.
            !s.is_proper_ancestor(prev, node) || t.is_proper_ancestor(image, cand)
        });
        if consistent {
            assignment[node] = Some(cand);
            if search(s, t, domain, i + 1, t_by_depth, assignment) {
                return true;
            }
            assignment[node] = None;
        }
    }
    false
}
