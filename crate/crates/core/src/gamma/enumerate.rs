//! Finite windows onto `Γ_ξ` and random maximal nodes.

use rand::Rng;

use super::node::GammaNode;
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// Limits for [`enumerate_truncated`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest level index `n` used in any `Γ_{η,n}`.
    pub max_n: u64,
    /// Number of branches `ζ` taken at a limit: `0` and `ξ[1], …, ξ[k]`.
    pub limit_branches: u64,
    /// Cap on the number of nodes produced.
    pub max_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 3,
            limit_branches: 3,
            max_nodes: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedNode {
    pub node: GammaNode,
    pub maximal: bool,
    /// The outermost branch `ζ` when `ξ` is a limit.
    pub branch: Option<Ordinal>,
}

/// All nodes of `Γ_ξ` reachable with level indices and limit branches inside
/// the budget, in generation order.
pub fn enumerate_truncated(xi: &Ordinal, budget: &Budget) -> Result<Vec<EnumeratedNode>> {
    if xi.is_limit() {
        let mut out = Vec::new();
        for zeta in limit_branches(xi, budget.limit_branches)? {
            let shift = Ordinal::omega_pow(zeta.clone());
            for (seq, maximal) in generate(&zeta.successor()?, budget)? {
                let node = seq
                    .iter()
                    .map(|e| shift.checked_add(e))
                    .collect::<Result<Vec<_>>>()?;
                out.push(EnumeratedNode {
                    node: GammaNode(node),
                    maximal,
                    branch: Some(zeta.clone()),
                });
                check_size(out.len(), budget)?;
            }
        }
        return Ok(out);
    }
    Ok(generate(xi, budget)?
        .into_iter()
        .map(|(seq, maximal)| EnumeratedNode {
            node: GammaNode(seq),
            maximal,
            branch: None,
        })
        .collect())
}

/// Nodes of `Γ_{ξ,n}` for a fixed `n` within the budget.
pub fn enumerate_level(xi: &Ordinal, n: u64, budget: &Budget) -> Result<Vec<(GammaNode, bool)>> {
    let base = generate(xi, budget)?;
    let mut level = Vec::new();
    for k in 1..=n {
        level = next_level(xi, k, &base, &level, budget)?;
    }
    Ok(level.into_iter().map(|(s, m)| (GammaNode(s), m)).collect())
}

/// `0` followed by the first `count` terms of the fundamental sequence.
fn limit_branches(xi: &Ordinal, count: u64) -> Result<Vec<Ordinal>> {
    let mut zetas = vec![Ordinal::zero()];
    for i in 1..=count {
        let z = xi.fundamental(i)?;
        if !zetas.contains(&z) {
            zetas.push(z);
        }
    }
    Ok(zetas)
}

fn check_size(len: usize, budget: &Budget) -> Result<()> {
    if len > budget.max_nodes {
        Err(Error::SizeBound(format!(
            "enumeration exceeds {} nodes",
            budget.max_nodes
        )))
    } else {
        Ok(())
    }
}

type Seq = (Vec<Ordinal>, bool);

fn generate(xi: &Ordinal, budget: &Budget) -> Result<Vec<Seq>> {
    if xi.is_zero() {
        return Ok(vec![(vec![Ordinal::zero()], true)]);
    }
    if xi.is_limit() {
        return Ok(enumerate_truncated(xi, budget)?
            .into_iter()
            .map(|e| (e.node.0, e.maximal))
            .collect());
    }
    let eta = xi.predecessor().expect("successor");
    let base = generate(&eta, budget)?;
    let mut out = Vec::new();
    let mut level = Vec::new();
    for n in 1..=budget.max_n {
        level = next_level(&eta, n, &base, &level, budget)?;
        out.extend(level.iter().cloned());
        check_size(out.len(), budget)?;
    }
    Ok(out)
}

/// `Γ_{η,n}` from `Γ_η` and `Γ_{η,n−1}`:
/// `(ω^η(n−1) + Γ_η) ∪ {(ω^η(n−1) + t) ⌢ u : t ∈ MAX(Γ_η), u ∈ Γ_{η,n−1}}`.
fn next_level(eta: &Ordinal, n: u64, base: &[Seq], prev: &[Seq], budget: &Budget) -> Result<Vec<Seq>> {
    let offset = Ordinal::omega_pow(eta.clone()).checked_mul(&Ordinal::nat(n - 1))?;
    let shift = |s: &[Ordinal]| -> Result<Vec<Ordinal>> {
        s.iter().map(|e| offset.checked_add(e)).collect()
    };
    let mut out = Vec::new();
    for (s, maximal) in base {
        out.push((shift(s)?, *maximal && n == 1));
    }
    for (t, maximal) in base {
        if !maximal {
            continue;
        }
        let head = shift(t)?;
        for (u, u_max) in prev {
            let mut seq = head.clone();
            seq.extend(u.iter().cloned());
            out.push((seq, *u_max));
            check_size(out.len(), budget)?;
        }
    }
    Ok(out)
}

/// A random maximal node of `Γ_ξ`, with level indices drawn from
/// `1..=max_n` and limit branches from `ξ[1..=max_n]`.
pub fn sample_maximal<R: Rng + ?Sized>(xi: &Ordinal, rng: &mut R, max_n: u64) -> Result<GammaNode> {
    let max_n = max_n.max(1);
    if xi.is_zero() {
        return Ok(GammaNode(vec![Ordinal::zero()]));
    }
    if xi.is_limit() {
        let zeta = xi.fundamental(rng.gen_range(1..=max_n))?;
        let shift = Ordinal::omega_pow(zeta.clone());
        let inner = sample_maximal(&zeta.successor()?, rng, max_n)?;
        return inner
            .0
            .iter()
            .map(|e| shift.checked_add(e))
            .collect::<Result<Vec<_>>>()
            .map(GammaNode);
    }
    let eta = xi.predecessor().expect("successor");
    let n = rng.gen_range(1..=max_n);
    let unit = Ordinal::omega_pow(eta.clone());
    let mut out = Vec::new();
    for i in 1..=n {
        let offset = unit.checked_mul(&Ordinal::nat(n - i))?;
        for e in sample_maximal(&eta, rng, max_n)?.0 {
            out.push(offset.checked_add(&e)?);
        }
    }
    Ok(GammaNode(out))
}
