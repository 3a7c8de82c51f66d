//! The full trees `Tₙ = Bₙ ∪ {∅}`, where `Bₙ` consists of the non-empty
//! sequences `(n, γᵢ, kᵢ)` with `γ₁ > γ₂ > … > γₚ` below a bound `ξₙ` and
//! arbitrary positive `kᵢ`. Derivation keeps exactly the nodes whose last
//! `γ` reaches the stage, so everything here is decided from the last entry.

use std::fmt;
use std::str::FromStr;

use super::finite::FiniteTree;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Largest `m` accepted by [`quotient_tree_order_oracle`] by default.
pub const DEFAULT_QUOTIENT_BOUND: u64 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnNode {
    n: u64,
    entries: Vec<(Ordinal, u64)>,
}

impl BnNode {
    pub fn new(n: u64, entries: Vec<(Ordinal, u64)>) -> Self {
        BnNode { n, entries }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[(Ordinal, u64)] {
        &self.entries
    }

    pub fn last_gamma(&self) -> Option<&Ordinal> {
        self.entries.last().map(|(g, _)| g)
    }

    /// Checks membership in `Bₙ` for entries bounded by `bound`.
    pub fn validate(&self, bound: &Ordinal) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvariantViolation("tag n must be positive".into()));
        }
        if self.entries.is_empty() {
            return Err(Error::InvariantViolation("node has no entries".into()));
        }
        for (i, (g, k)) in self.entries.iter().enumerate() {
            if *k == 0 {
                return Err(Error::InvariantViolation(format!("k at entry {i} is 0")));
            }
            if g >= bound {
                return Err(Error::InvariantViolation(format!(
                    "gamma {g} at entry {i} is not below {bound}"
                )));
            }
            if i > 0 && self.entries[i - 1].0 <= *g {
                return Err(Error::InvariantViolation(format!(
                    "gammas not strictly decreasing at entry {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(g, k)| format!("{g},{k}"))
            .collect();
        format!("{}:[{}]", self.n, body.join(";"))
    }
}

impl fmt::Display for BnNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BnNode {
    type Err = Error;

    /// `n:[g1,k1;g2,k2;...]` with each `g` in the ordinal grammar.
    fn from_str(text: &str) -> Result<Self> {
        let (tag, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::parse(0, "expected 'n:[...]'"))?;
        let n = tag
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::parse(0, format!("bad tag '{}'", tag.trim())))?;
        let offset = tag.len() + 1;
        let body = rest.trim();
        let inner = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::parse(offset, "entries must be enclosed in [ ]"))?;
        let mut entries = Vec::new();
        for part in inner.split(';').filter(|p| !p.trim().is_empty()) {
            let (g, k) = part
                .rsplit_once(',')
                .ok_or_else(|| Error::parse(offset, format!("entry '{part}' lacks ',k'")))?;
            let gamma = Ordinal::parse(g)?;
            let k = k
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::parse(offset, format!("bad k '{}'", k.trim())))?;
            entries.push((gamma, k));
        }
        Ok(BnNode { n, entries })
    }
}

/// Whether `node` lies in the `ζ`-th derived tree `Bₙ^ζ`: its last `γ` is at
/// least `ζ`.
pub fn bn_derived_member(node: &BnNode, bound: &Ordinal, zeta: &Ordinal) -> Result<bool> {
    node.validate(bound)?;
    Ok(node.last_gamma().expect("validated") >= zeta)
}

/// The unique `γ < ξ^{n−k}` with `node ∈ G_{n,k,γ} = Bₙ^{ξ^k·γ} \ Bₙ^{ξ^k·(γ+1)}`
/// for the family with bound `ξ^n`: the quotient of the last entry by `ξ^k`.
pub fn g_partition_index(node: &BnNode, xi: &Ordinal, k: u64) -> Result<Ordinal> {
    let n = node.n();
    if k == 0 || k > n {
        return Err(Error::PreconditionViolated(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let bound = xi.checked_pow(&Ordinal::nat(n))?;
    node.validate(&bound)?;
    let unit = xi.checked_pow(&Ordinal::nat(k))?;
    let (gamma, _) = node.last_gamma().expect("validated").divmod(&unit)?;
    Ok(gamma)
}

/// The quotient tree of strictly decreasing sequences over `{0, …, m−1}`
/// (each node standing for an infinite `k`-fiber), with the sequence carried
/// by every node. The root is the empty sequence.
pub fn quotient_tree(m: u64) -> Result<(FiniteTree, Vec<Vec<u64>>)> {
    quotient_tree_bounded(m, DEFAULT_QUOTIENT_BOUND)
}

pub fn quotient_tree_bounded(m: u64, bound: u64) -> Result<(FiniteTree, Vec<Vec<u64>>)> {
    if m > bound {
        return Err(Error::SizeBound(format!("quotient tree limited to m <= {bound}")));
    }
    let mut tree = FiniteTree::singleton();
    let mut labels = vec![Vec::new()];
    let mut frontier = vec![0usize];
    while let Some(node) = frontier.pop() {
        let seq = labels[node].clone();
        let below = seq.last().copied().unwrap_or(m);
        for g in (0..below).rev() {
            let child = tree.add_child(node);
            let mut s = seq.clone();
            s.push(g);
            labels.push(s);
            frontier.push(child);
        }
    }
    Ok((tree, labels))
}

/// Iterates leaf removal on the quotient tree and returns, for each stage
/// `ζ = 0, 1, …` until the tree is empty, the surviving non-empty sequences.
pub fn quotient_tree_stages(m: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let (mut tree, labels) = quotient_tree(m)?;
    let mut origin: Vec<usize> = (0..tree.len()).collect();
    let mut stages = Vec::new();
    while !tree.is_empty() {
        let mut live: Vec<Vec<u64>> = origin
            .iter()
            .map(|&i| labels[i].clone())
            .filter(|s| !s.is_empty())
            .collect();
        live.sort();
        stages.push(live);
        let (next, map) = tree.derive_with_map();
        origin = map.into_iter().map(|i| origin[i]).collect();
        tree = next;
    }
    Ok(stages)
}

/// Order of the quotient tree by iterated leaf removal; equals `m + 1`.
pub fn quotient_tree_order_oracle(m: u64) -> Result<Ordinal> {
    let (tree, _) = quotient_tree(m)?;
    Ok(Ordinal::nat(tree.order() as u64))
}
