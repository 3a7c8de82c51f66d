use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::{ExtOrdinal, Ordinal};

/// A finite rooted tree. Node 0 is the root of a non-empty tree; children are
/// kept in a fixed order so rendering and searches are deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl FiniteTree {
    pub fn empty() -> Self {
        FiniteTree::default()
    }

    pub fn singleton() -> Self {
        FiniteTree {
            parent: vec![None],
            children: vec![Vec::new()],
        }
    }

    /// A path with `n` nodes (the root included).
    pub fn chain(n: usize) -> Self {
        let mut t = FiniteTree::empty();
        if n == 0 {
            return t;
        }
        t = FiniteTree::singleton();
        let mut last = 0;
        for _ in 1..n {
            last = t.add_child(last);
        }
        t
    }

    /// Builds a tree from a parent array. Exactly one entry must be `None`
    /// and it must be index 0.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        if parents.is_empty() {
            return Ok(FiniteTree::empty());
        }
        if parents[0].is_some() || parents[1..].iter().any(Option::is_none) {
            return Err(Error::InvariantViolation(
                "the root must be node 0 and the only parentless node".into(),
            ));
        }
        let mut children = vec![Vec::new(); parents.len()];
        for (i, p) in parents.iter().enumerate().skip(1) {
            let p = p.expect("checked");
            if p >= parents.len() {
                return Err(Error::InvariantViolation(format!("node {i} has unknown parent {p}")));
            }
            children[p].push(i);
        }
        let tree = FiniteTree {
            parent: parents.to_vec(),
            children,
        };
        // Acyclic iff every node is reachable from the root.
        if tree.preorder().len() != parents.len() {
            return Err(Error::InvariantViolation("parent map has a cycle".into()));
        }
        Ok(tree)
    }

    pub fn add_child(&mut self, parent: usize) -> usize {
        let id = self.parent.len();
        self.parent.push(Some(parent));
        self.children.push(Vec::new());
        self.children[parent].push(id);
        id
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        self.children[node].is_empty()
    }

    /// Distance from the root; the root has depth 0.
    pub fn depth(&self, node: usize) -> usize {
        let mut d = 0;
        let mut cur = node;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// True when `a` is a proper ancestor of `b`.
    pub fn is_proper_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = self.parent[b];
        while let Some(p) = cur {
            if p == a {
                return true;
            }
            cur = self.parent[p];
        }
        false
    }

    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let Some(root) = self.root() else {
            return out;
        };
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            out.push(n);
            stack.extend(self.children[n].iter().rev());
        }
        out
    }

    /// Number of nodes on a longest root-to-leaf path of the subtree at `node`.
    pub fn subtree_height(&self, node: usize) -> usize {
        1 + self.children[node]
            .iter()
            .map(|&c| self.subtree_height(c))
            .max()
            .unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.root().map_or(0, |r| self.subtree_height(r))
    }

    /// The derived tree with its maximal nodes removed, together with the map
    /// from new node ids to the ids they had in `self`.
    pub fn derive_with_map(&self) -> (FiniteTree, Vec<usize>) {
        let mut out = FiniteTree::empty();
        let mut origin = Vec::new();
        let mut new_id = HashMap::new();
        for n in self.preorder() {
            if self.is_leaf(n) {
                continue;
            }
            let id = match self.parent[n] {
                None => {
                    out = FiniteTree::singleton();
                    0
                }
                Some(p) => out.add_child(new_id[&p]),
            };
            new_id.insert(n, id);
            origin.push(n);
        }
        (out, origin)
    }

    /// `T' = T \ MAX(T)`.
    pub fn derive(&self) -> FiniteTree {
        self.derive_with_map().0
    }

    /// Least `k` with the `k`-th derived tree empty, by iterating [`derive`].
    ///
    /// [`derive`]: FiniteTree::derive
    pub fn order(&self) -> usize {
        let mut t = self.clone();
        let mut k = 0;
        while !t.is_empty() {
            t = t.derive();
            k += 1;
        }
        k
    }

    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.starts_with('(') {
            parse_sexpr(text)
        } else {
            Ok(parse_paths(text))
        }
    }

    /// Balanced-parenthesis form; leaves are `()`, the empty tree is `""`.
    pub fn render(&self) -> String {
        fn go(t: &FiniteTree, n: usize, out: &mut String) {
            out.push('(');
            for &c in &t.children[n] {
                go(t, c, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        if let Some(r) = self.root() {
            go(self, r, &mut out);
        }
        out
    }
}

impl fmt::Display for FiniteTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn parse_sexpr(text: &str) -> Result<FiniteTree> {
    let mut tree = FiniteTree::empty();
    let mut stack: Vec<usize> = Vec::new();
    let mut closed_root = false;
    for (pos, c) in text.chars().enumerate() {
        match c {
            c if c.is_whitespace() => {}
            '(' => {
                if closed_root {
                    return Err(Error::parse(pos, "a tree has a single root"));
                }
                let id = match stack.last() {
                    None => {
                        tree = FiniteTree::singleton();
                        0
                    }
                    Some(&p) => tree.add_child(p),
                };
                stack.push(id);
            }
            ')' => {
                if stack.pop().is_none() {
                    return Err(Error::parse(pos, "unbalanced ')'"));
                }
                if stack.is_empty() {
                    closed_root = true;
                }
            }
            other => return Err(Error::parse(pos, format!("unexpected '{other}'"))),
        }
    }
    if !stack.is_empty() {
        return Err(Error::parse(text.chars().count(), "unclosed '('"));
    }
    Ok(tree)
}

/// One `a/b/c` path per line; the root is implicit and shared prefixes are
/// merged.
fn parse_paths(text: &str) -> FiniteTree {
    let mut tree = FiniteTree::singleton();
    let mut index: HashMap<(usize, String), usize> = HashMap::new();
    for line in text.lines() {
        let mut cur = 0;
        for label in line.split('/').map(str::trim).filter(|l| !l.is_empty()) {
            cur = match index.get(&(cur, label.to_owned())) {
                Some(&id) => id,
                None => {
                    let id = tree.add_child(cur);
                    index.insert((cur, label.to_owned()), id);
                    id
                }
            };
        }
    }
    tree
}

/// Either an explicit finite tree or the symbolic full tree `Tₙ = Bₙ ∪ {∅}`
/// whose entries lie below `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeDescriptor {
    Finite(FiniteTree),
    BnFamily { bound: Ordinal },
}

/// Order of a tree, counting the root: finite trees by iterated derivation,
/// the `Tₙ` family by its closed form `bound + 1`.
pub fn tree_order(tree: &TreeDescriptor) -> Result<ExtOrdinal> {
    match tree {
        TreeDescriptor::Finite(t) => Ok(ExtOrdinal::Finite(Ordinal::nat(t.order() as u64))),
        TreeDescriptor::BnFamily { bound } => Ok(ExtOrdinal::Finite(bound.successor()?)),
    }
}
