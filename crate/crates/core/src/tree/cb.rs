//! Cantor-Bendixson derivatives of the ordinal interval `[0, ξ]` in its order
//! topology.

use std::fmt;

use crate::error::Result;
use crate::ordinal::Ordinal;

/// A stage of the derivation of `[0, ξ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalDerivStage {
    Empty,
    /// Stage 0: the whole interval `[0, ξ]`, which is the only stage containing 0.
    Whole(Ordinal),
    /// `{ω^level · β : 1 ≤ β ≤ count}` with `count ≥ 1`.
    Points { level: Ordinal, count: Ordinal },
}

impl IntervalDerivStage {
    pub fn is_empty(&self) -> bool {
        matches!(self, IntervalDerivStage::Empty)
    }

    pub fn contains(&self, x: &Ordinal) -> bool {
        match self {
            IntervalDerivStage::Empty => false,
            IntervalDerivStage::Whole(top) => x <= top,
            IntervalDerivStage::Points { level, count } => {
                if x.is_zero() {
                    return false;
                }
                let unit = Ordinal::omega_pow(level.clone());
                let (beta, rest) = x.divmod(&unit).expect("ω^level is nonzero");
                rest.is_zero() && beta <= *count
            }
        }
    }

    /// One derivation step: a point `ω^ζ·β` is a limit point of the stage
    /// exactly when `β` is a limit ordinal, i.e. `β = ω·β'`.
    pub fn step(&self) -> Result<IntervalDerivStage> {
        let (level, count) = match self {
            IntervalDerivStage::Empty => return Ok(IntervalDerivStage::Empty),
            IntervalDerivStage::Whole(top) => (Ordinal::zero(), top),
            IntervalDerivStage::Points { level, count } => (level.clone(), count),
        };
        let (q, _) = count.divmod(&Ordinal::omega())?;
        Ok(points_or_empty(level.successor()?, q))
    }
}

impl fmt::Display for IntervalDerivStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalDerivStage::Empty => f.write_str("empty"),
            IntervalDerivStage::Whole(top) => write!(f, "[0, {top}]"),
            IntervalDerivStage::Points { level, count } => {
                write!(f, "{{w^({level})*b : 1 <= b <= {count}}}")
            }
        }
    }
}

fn points_or_empty(level: Ordinal, count: Ordinal) -> IntervalDerivStage {
    if count.is_zero() {
        IntervalDerivStage::Empty
    } else {
        IntervalDerivStage::Points { level, count }
    }
}

/// The `ζ`-th derivative of `[0, ξ]`: for `ζ ≥ 1` the multiples `ω^ζ·β` with
/// `1 ≤ β ≤ q`, where `q` is the left quotient of `ξ` by `ω^ζ`.
pub fn cb_interval_derivative(xi: &Ordinal, zeta: &Ordinal) -> Result<IntervalDerivStage> {
    if zeta.is_zero() {
        return Ok(IntervalDerivStage::Whole(xi.clone()));
    }
    let (q, _) = xi.divmod(&Ordinal::omega_pow(zeta.clone()))?;
    Ok(points_or_empty(zeta.clone(), q))
}

/// `i([0, ξ]) = ζ + 1` for `ω^ζ ≤ ξ < ω^{ζ+1}`; 1 for the one-point space.
pub fn cb_interval_index(xi: &Ordinal) -> Result<Ordinal> {
    match xi.leading_exponent() {
        None => Ok(Ordinal::one()),
        Some(e) => e.successor(),
    }
}
