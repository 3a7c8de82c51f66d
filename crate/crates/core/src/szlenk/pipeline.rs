//! Per-ε derivation bounds for the two norming-set constructions, with the
//! audit trail that sandwiches each total index between an exact lower
//! supremum and per-ε upper bounds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::rational::{is_strictly_between_zero_and_one, render_rational, Rational};

/// Default cap on the threshold exponent `j`.
pub const DEFAULT_J_CAP: u32 = 256;
/// Number of levels sampled by the pipelines' audits.
pub const DEFAULT_AUDIT_LEVELS: u64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    UpperBound,
    Exact,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::UpperBound => "upper",
            BoundKind::Exact => "exact",
        })
    }
}

/// A bound on the ε-derivation index of one subfamily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBound {
    pub subject: String,
    pub epsilon: Rational,
    pub kind: BoundKind,
    pub value: ExtOrdinal,
    /// Which rule produced the bound.
    pub citation: &'static str,
}

impl fmt::Display for DerivationBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} eps={} {} {} [{}]",
            self.subject,
            render_rational(&self.epsilon),
            self.kind,
            self.value,
            self.citation
        )
    }
}

pub mod citation {
    /// `Sz_ε(L_{n,k,γ}) ≤ ξ^k + 1`.
    pub const LEVEL: &str = "level-bound";
    /// `Sz_ε(L_{n,k,γ}) ≤ ξ^j + 1` once `ε > 2θ^j`.
    pub const THRESHOLD: &str = "threshold-bound";
    /// `Sz_ε(L_{n,n,0}) = ξ^n + 1` for `ε < θ^{n−1}`.
    pub const DIAGONAL: &str = "diagonal-exact";
    /// Finite union: `sup + 1`.
    pub const UNION: &str = "union-sup";
    /// `Sz_ε(L_n) = ω^α·β_n + 1` for `ε < θ_n`, `≤` while `ε ≤ 2θ_n`.
    pub const SHIFTED: &str = "shifted-level";
    /// `Sz_ε(L_n) < ω^β` once `ε > 2θ_n`.
    pub const TAIL: &str = "tail-sup";
    /// `Sz_ε(L_{n,γ}) ≤ ω^α + 1`.
    pub const FIBER: &str = "fiber-bound";
}

/// Parameters of the norming constructions. The first family uses the fixed
/// ratio `θ` and `ξ = ω^{ω^α}`; the second uses `α`, `β` and the schedule
/// `θ_n = θ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormingParams {
    pub alpha: Ordinal,
    pub theta: Rational,
    pub beta: Option<Ordinal>,
    pub j_cap: u32,
    pub audit_levels: u64,
}

impl NormingParams {
    pub fn new(alpha: Ordinal, theta: Rational) -> Self {
        NormingParams {
            alpha,
            theta,
            beta: None,
            j_cap: DEFAULT_J_CAP,
            audit_levels: DEFAULT_AUDIT_LEVELS,
        }
    }

    pub fn with_beta(mut self, beta: Ordinal) -> Self {
        self.beta = Some(beta);
        self
    }

    /// `ξ = ω^{ω^α}`.
    pub fn xi(&self) -> Ordinal {
        Ordinal::omega_pow(Ordinal::omega_pow(self.alpha.clone()))
    }

    fn check_theta(&self) -> Result<()> {
        if is_strictly_between_zero_and_one(&self.theta) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "theta must lie in (0, 1), got {}",
                render_rational(&self.theta)
            )))
        }
    }

    /// `θ^n`.
    pub fn theta_pow(&self, n: u64) -> Rational {
        num_traits::pow(self.theta.clone(), n as usize)
    }
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

fn half(r: &Rational) -> Rational {
    r / two()
}

/// Least `j ≥ 0` with `ε > 2θ^j`, searched up to `cap`.
pub fn threshold_j(epsilon: &Rational, theta: &Rational, cap: u32) -> Option<u64> {
    let mut bound = two();
    for j in 0..=cap {
        if *epsilon > bound {
            return Some(j as u64);
        }
        bound *= theta;
    }
    None
}

/// The bound for `L_{n,k,γ}` at `ε`.
pub fn family_bound(
    n: u64,
    k: u64,
    gamma: &Ordinal,
    epsilon: &Rational,
    params: &NormingParams,
) -> Result<DerivationBound> {
    params.check_theta()?;
    if k == 0 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    if !epsilon.is_positive() {
        return Err(Error::Domain("epsilon must be positive".into()));
    }
    let xi = params.xi();
    if *gamma >= xi.checked_pow(&Ordinal::nat(n - k))? {
        return Err(Error::Domain(format!("gamma {gamma} is not below xi^{}", n - k)));
    }
    let subject = format!("L(n={n},k={k},gamma={gamma})");
    if k == n && gamma.is_zero() && *epsilon < params.theta_pow(n - 1) {
        return Ok(DerivationBound {
            subject,
            epsilon: epsilon.clone(),
            kind: BoundKind::Exact,
            value: xi.checked_pow(&Ordinal::nat(n))?.successor()?.into(),
            citation: citation::DIAGONAL,
        });
    }
    let (exp, citation) = match threshold_j(epsilon, &params.theta, params.j_cap) {
        Some(j) if j < k => (j, citation::THRESHOLD),
        _ => (k, citation::LEVEL),
    };
    Ok(DerivationBound {
        subject,
        epsilon: epsilon.clone(),
        kind: BoundKind::UpperBound,
        value: xi.checked_pow(&Ordinal::nat(exp))?.successor()?.into(),
        citation,
    })
}

/// Bound for a finite union of sets, each bounded at the same `ε`.
pub fn sz_union_bound(
    epsilon: &Rational,
    bounds: &[DerivationBound],
    subject: &str,
) -> Result<DerivationBound> {
    if bounds.iter().any(|b| b.epsilon != *epsilon) {
        return Err(Error::MixedEpsilon);
    }
    let value = match bounds.iter().map(|b| &b.value).max() {
        None => Ordinal::one().into(),
        Some(ExtOrdinal::Infinity) => ExtOrdinal::Infinity,
        Some(ExtOrdinal::Finite(v)) => v.successor()?.into(),
    };
    Ok(DerivationBound {
        subject: subject.to_owned(),
        epsilon: epsilon.clone(),
        kind: BoundKind::UpperBound,
        value,
        citation: citation::UNION,
    })
}

fn invariant(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvariantViolation(what.to_owned()))
    }
}

fn below(b: &DerivationBound, top: &Ordinal) -> bool {
    b.value.as_ordinal().is_some_and(|v| v < top)
}

/// Index of the first construction: `ξ^ω = ω^{ω^{α+1}}`.
pub fn sz_frak_g(params: &NormingParams) -> Result<(ExtOrdinal, Vec<DerivationBound>)> {
    params.check_theta()?;
    let xi = params.xi();
    let result = xi.checked_pow(&Ordinal::omega())?;
    invariant(
        result == Ordinal::omega_pow(Ordinal::omega_pow(params.alpha.successor()?)),
        "xi^w = w^(w^(alpha+1))",
    )?;
    let mut audit = Vec::new();
    for n in 1..=params.audit_levels {
        // Exact witness just below the diagonal threshold θ^{n−1}.
        let eps = half(&params.theta_pow(n - 1));
        let exact = family_bound(n, n, &Ordinal::zero(), &eps, params)?;
        invariant(exact.kind == BoundKind::Exact, "diagonal witness is exact")?;
        invariant(below(&exact, &result), "exact witness below the index")?;

        let j = threshold_j(&eps, &params.theta, params.j_cap)
            .ok_or_else(|| Error::Domain("epsilon below the threshold cap".into()))?;
        // Every L_{m,k,γ} at this ε is bounded by ξ^{min(j,k)} + 1 ≤ ξ^j + 1,
        // which the representatives k = 1..=j+1 realize.
        let mut family = Vec::new();
        for k in 1..=j + 1 {
            family.push(family_bound(k, k, &Ordinal::zero(), &eps, params)?);
        }
        let agg = sz_union_bound(&eps, &family, "aggregate")?;
        invariant(
            agg.value == ExtOrdinal::from(xi.checked_pow(&Ordinal::nat(j))?.checked_add(&Ordinal::nat(2))?),
            "aggregate is xi^j + 2",
        )?;
        invariant(below(&agg, &result), "aggregate below the index")?;
        invariant(exact.value <= agg.value, "exact within aggregate")?;
        audit.extend(family.iter().filter(|b| b.subject != exact.subject).cloned());
        audit.push(exact);
        audit.push(agg);
    }
    Ok((result.into(), audit))
}

/// `θ_n = θ^n` and the representation `β_n` of `ω^β`.
fn shifted_level(params: &NormingParams, omega_beta: &Ordinal, n: u64) -> Result<(Rational, Ordinal)> {
    Ok((params.theta_pow(n), omega_beta.fundamental(n)?))
}

/// Index of the second construction: `ω^{α+β}`.
pub fn sz_frak_s(params: &NormingParams) -> Result<(ExtOrdinal, Vec<DerivationBound>)> {
    params.check_theta()?;
    let alpha = &params.alpha;
    let beta = params
        .beta
        .as_ref()
        .ok_or_else(|| Error::Domain("beta is required".into()))?;
    let sum = alpha.checked_add(beta)?;
    if sum <= *alpha.max(beta) {
        return Err(Error::PreconditionViolated(format!(
            "alpha + beta = {sum} does not exceed max(alpha, beta)"
        )));
    }
    let omega_alpha = Ordinal::omega_pow(alpha.clone());
    let omega_beta = Ordinal::omega_pow(beta.clone());
    let result = Ordinal::omega_pow(sum);
    invariant(
        omega_alpha.checked_mul(&omega_beta)? == result,
        "w^alpha * w^beta = w^(alpha+beta)",
    )?;

    let mut audit = Vec::new();
    for level in 1..=params.audit_levels {
        let (theta_l, _) = shifted_level(params, &omega_beta, level)?;
        let eps = half(&theta_l);
        let mut family = Vec::new();
        // Only finitely many n have ε ≤ 2θ_n.
        let mut n = 1;
        loop {
            let (theta_n, beta_n) = shifted_level(params, &omega_beta, n)?;
            if eps > two() * &theta_n {
                break;
            }
            let kind = if eps < theta_n {
                BoundKind::Exact
            } else {
                BoundKind::UpperBound
            };
            family.push(DerivationBound {
                subject: format!("L(n={n})"),
                epsilon: eps.clone(),
                kind,
                value: omega_alpha.checked_mul(&beta_n)?.successor()?.into(),
                citation: citation::SHIFTED,
            });
            n += 1;
        }
        family.push(DerivationBound {
            subject: format!("L(n>={n})"),
            epsilon: eps.clone(),
            kind: BoundKind::UpperBound,
            value: omega_beta.clone().into(),
            citation: citation::TAIL,
        });
        family.push(DerivationBound {
            subject: "L(n,gamma)".into(),
            epsilon: eps.clone(),
            kind: BoundKind::UpperBound,
            value: omega_alpha.successor()?.into(),
            citation: citation::FIBER,
        });
        let exact = family
            .iter()
            .find(|b| b.subject == format!("L(n={level})"))
            .ok_or_else(|| Error::InvariantViolation("missing level witness".into()))?;
        invariant(exact.kind == BoundKind::Exact, "level witness is exact")?;
        let agg = sz_union_bound(&eps, &family, "aggregate")?;
        invariant(below(&agg, &result), "aggregate below the index")?;
        audit.extend(family);
        audit.push(agg);
    }
    // The exact witnesses ω^α·β_n + 1 are cofinal in ω^α·ω^β.
    let probe = omega_alpha.checked_mul(&omega_beta.fundamental(params.audit_levels.max(1))?)?;
    invariant(probe < result, "lower witnesses stay below the index")?;
    Ok((result.into(), audit))
}
