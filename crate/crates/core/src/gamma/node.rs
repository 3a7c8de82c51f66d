use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::{left_sub, Ordinal};

/// A finite sequence of ordinals, read as a candidate node of `Γ_ξ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaNode(pub Vec<Ordinal>);

impl GammaNode {
    pub fn new(entries: Vec<Ordinal>) -> Self {
        GammaNode(entries)
    }

    pub fn entries(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The first `len` entries.
    pub fn prefix(&self, len: usize) -> GammaNode {
        GammaNode(self.0[..len].to_vec())
    }

    pub fn is_prefix_of(&self, other: &GammaNode) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(Ordinal::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for GammaNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for GammaNode {
    type Err = Error;

    /// `[e1, e2, ...]`; the brackets are optional.
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .map(|s| s.strip_suffix(']').ok_or_else(|| Error::parse(t.len(), "missing ']'")))
            .transpose()?
            .unwrap_or(t);
        if inner.trim().is_empty() {
            return Ok(GammaNode::default());
        }
        inner
            .split(',')
            .map(Ordinal::parse)
            .collect::<Result<Vec<_>>>()
            .map(GammaNode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    NotMember,
    Member,
    MaximalMember,
}

impl Membership {
    pub fn is_member(self) -> bool {
        self != Membership::NotMember
    }

    fn from_parts(member: bool, maximal: bool) -> Self {
        match (member, maximal) {
            (false, _) => Membership::NotMember,
            (true, false) => Membership::Member,
            (true, true) => Membership::MaximalMember,
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::NotMember => "not-member",
            Membership::Member => "member",
            Membership::MaximalMember => "maximal",
        })
    }
}

/// The unique representation of a node of `Γ_{ξ,n}` as
/// `(ω^ξ·(n−1) + t₁) ⌢ … ⌢ (ω^ξ·(n−m) + t_m)` with `t₁ … t_{m−1}` maximal
/// in `Γ_ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: u64,
    /// The level `m` of the node.
    pub m: u64,
    pub parts: Vec<GammaNode>,
    /// `t_m`.
    pub iota: GammaNode,
    /// The maximal level-`(m−1)` prefix; empty on the first level.
    pub pi: GammaNode,
    /// Membership of `t_m` in `Γ_ξ`.
    pub last_membership: Membership,
}

impl Decomposition {
    /// Rebuilds the node from its parts.
    pub fn reassemble(&self, xi: &Ordinal) -> Result<GammaNode> {
        let unit = Ordinal::omega_pow(xi.clone());
        let mut out = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            let offset = unit.checked_mul(&Ordinal::nat(self.n - 1 - i as u64))?;
            for e in &part.0 {
                out.push(offset.checked_add(e)?);
            }
        }
        Ok(GammaNode(out))
    }

    /// Lengths of the level prefixes `s₁ ≺ s₂ ≺ … ≺ s_m`.
    pub fn level_prefix_lengths(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, p| {
                *acc += p.len();
                Some(*acc)
            })
            .collect()
    }
}

/// Classifies `t` against `Γ_ξ`.
///
/// `Γ_0 = {(0)}`; `Γ_{η+1}` is the totally incomparable union of the
/// `Γ_{η,n}`, and the level `n` is read off the first entry; for limit `ξ`
/// the unique branch `ω^ζ + Γ_{ζ+1}` is read off the leading exponent of the
/// first entry.
pub fn gamma_node_classify(t: &GammaNode, xi: &Ordinal) -> Membership {
    classify_seq(&t.0, xi)
}

/// Classifies `t` against `Γ_{ξ,n}`. Maximality in `Γ_{ξ,n}` and in `Γ_{ξ+1}`
/// coincide.
pub fn level_classify(t: &GammaNode, xi: &Ordinal, n: u64) -> Membership {
    match split_levels(&t.0, xi, n) {
        None => Membership::NotMember,
        Some(d) => Membership::from_parts(
            true,
            d.parts.len() as u64 == n && d.last_membership == Membership::MaximalMember,
        ),
    }
}

/// Decomposes a member of `Γ_{ξ,n}` into its levels.
pub fn decompose(t: &GammaNode, xi: &Ordinal, n: u64) -> Result<Decomposition> {
    split_levels(&t.0, xi, n).ok_or_else(|| Error::NotMember(format!("{t} in Γ_({xi}),{n}")))
}

/// Whether two members of `Γ_{ξ,n}` lie in the same unit (equal `π`).
pub fn same_unit(a: &GammaNode, b: &GammaNode, xi: &Ordinal, n: u64) -> Result<bool> {
    Ok(decompose(a, xi, n)?.pi == decompose(b, xi, n)?.pi)
}

pub(crate) enum Branch {
    Base,
    /// `ξ = η + 1` and the node sits in `Γ_{η,n}`.
    Successor { eta: Ordinal, n: u64 },
    /// `ξ` is a limit and the node is `ω^ζ + s` with `s ∈ Γ_{ζ+1}`.
    Limit { zeta: Ordinal, stripped: Vec<Ordinal> },
}

/// Determines which piece of the recursive definition of `Γ_ξ` could contain
/// a sequence starting with `t[0]`, or `None` when no piece can.
pub(crate) fn branch(t: &[Ordinal], xi: &Ordinal) -> Option<Branch> {
    let first = t.first()?;
    if xi.is_zero() {
        return Some(Branch::Base);
    }
    if let Some(eta) = xi.predecessor() {
        let (q, _) = first.divmod(&Ordinal::omega_pow(eta.clone())).ok()?;
        let n = q.as_nat()?.checked_add(1)?;
        return Some(Branch::Successor { eta, n });
    }
    let zeta = first.leading_exponent()?.clone();
    if zeta >= *xi {
        return None;
    }
    let shift = Ordinal::omega_pow(zeta.clone());
    let stripped = t
        .iter()
        .map(|e| left_sub(&shift, e))
        .collect::<Option<Vec<_>>>()?;
    Some(Branch::Limit { zeta, stripped })
}

fn classify_seq(t: &[Ordinal], xi: &Ordinal) -> Membership {
    match branch(t, xi) {
        None => Membership::NotMember,
        Some(Branch::Base) => {
            Membership::from_parts(t.len() == 1 && t[0].is_zero(), true)
        }
        Some(Branch::Successor { eta, n }) => level_classify(&GammaNode(t.to_vec()), &eta, n),
        Some(Branch::Limit { zeta, stripped }) => match zeta.successor() {
            Ok(next) => classify_seq(&stripped, &next),
            Err(_) => Membership::NotMember,
        },
    }
}

fn split_levels(t: &[Ordinal], xi: &Ordinal, n: u64) -> Option<Decomposition> {
    if t.is_empty() || n == 0 {
        return None;
    }
    let unit = Ordinal::omega_pow(xi.clone());
    let mut parts = Vec::new();
    let mut rest = t;
    let mut consumed = 0;
    let mut level = n;
    loop {
        if level == 0 {
            return None;
        }
        let offset = unit.checked_mul(&Ordinal::nat(level - 1)).ok()?;
        let upper = unit.checked_mul(&Ordinal::nat(level)).ok()?;
        let len = rest
            .iter()
            .take_while(|e| **e >= offset && **e < upper)
            .count();
        if len == 0 {
            return None;
        }
        let part: Vec<Ordinal> = rest[..len]
            .iter()
            .map(|e| left_sub(&offset, e).expect("entry above offset"))
            .collect();
        let membership = classify_seq(&part, xi);
        if membership == Membership::NotMember {
            return None;
        }
        parts.push(GammaNode(part));
        rest = &rest[len..];
        if rest.is_empty() {
            let m = parts.len() as u64;
            let iota = parts.last().expect("nonempty").clone();
            return Some(Decomposition {
                n,
                m,
                parts,
                iota,
                pi: GammaNode(t[..consumed].to_vec()),
                last_membership: membership,
            });
        }
        if membership != Membership::MaximalMember {
            return None;
        }
        consumed += len;
        level -= 1;
    }
}
