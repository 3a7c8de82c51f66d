//! The weights `ℙ_ξ`: `ℙ_0((0)) = 1` and `ℙ_{η+1}(t) = ℙ_η(t_m) / n` for
//! `t ∈ Γ_{η,n}` with last part `t_m`.

use num_bigint::BigInt;
use num_traits::One;

use super::node::{branch, decompose, gamma_node_classify, Branch, GammaNode, Membership};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::rational::Rational;

pub fn prob(t: &GammaNode, xi: &Ordinal) -> Result<Rational> {
    if !gamma_node_classify(t, xi).is_member() {
        return Err(Error::NotMember(format!("{t} in Γ_({xi})")));
    }
    prob_member(&t.0, xi)
}

fn prob_member(t: &[Ordinal], xi: &Ordinal) -> Result<Rational> {
    match branch(t, xi) {
        None => Err(Error::NotMember(format!("{}", GammaNode(t.to_vec())))),
        Some(Branch::Base) => Ok(Rational::one()),
        Some(Branch::Successor { eta, n }) => {
            let d = decompose(&GammaNode(t.to_vec()), &eta, n)?;
            let inner = prob_member(&d.iota.0, &eta)?;
            Ok(inner / Rational::from_integer(BigInt::from(n)))
        }
        Some(Branch::Limit { zeta, stripped }) => prob_member(&stripped, &zeta.successor()?),
    }
}

/// The non-empty prefixes of a maximal node with their weights.
pub fn branch_distribution(t: &GammaNode, xi: &Ordinal) -> Result<Vec<(GammaNode, Rational)>> {
    match gamma_node_classify(t, xi) {
        Membership::MaximalMember => {}
        Membership::Member => return Err(Error::NotMaximal(format!("{t} in Γ_({xi})"))),
        Membership::NotMember => return Err(Error::NotMember(format!("{t} in Γ_({xi})"))),
    }
    (1..=t.len())
        .map(|len| {
            let p = t.prefix(len);
            prob_member(&p.0, xi).map(|w| (p, w))
        })
        .collect()
}
