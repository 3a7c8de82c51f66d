use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::{ExtOrdinal, Ordinal};

/// Constructions whose index is the larger of the two inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxContext {
    /// Injective tensor product of two sets.
    Tensor,
    /// `C(K, X)` from `C(K)` and `X`.
    CkX,
    /// Minkowski sum of two sets.
    Sum,
}

pub fn sz_max_rule(_context: MaxContext, a: &ExtOrdinal, b: &ExtOrdinal) -> ExtOrdinal {
    a.max(b).clone()
}

/// Index of the closed convex hull: the least gamma number at or above `a`.
pub fn sz_convex_hull(a: &ExtOrdinal) -> Result<ExtOrdinal> {
    a.gamma()
}

/// Index of `C(K)` from the Cantor-Bendixson index of `K`; `∞` stands for a
/// non-scattered `K`.
pub fn sz_ck(ik: &ExtOrdinal) -> Result<ExtOrdinal> {
    if ik.as_ordinal().is_some_and(Ordinal::is_zero) {
        return Err(Error::Domain("a nonempty compact has index at least 1".into()));
    }
    ik.gamma()
}

/// Index of `C([0, ξ])`: 1 for finite `ξ`, otherwise `ω^{ζ+1}` where
/// `ω^{ω^ζ} ≤ ξ < ω^{ω^{ζ+1}}`.
pub fn sz_c_interval(xi: &Ordinal) -> Result<ExtOrdinal> {
    if xi.is_finite() {
        return Ok(Ordinal::one().into());
    }
    let e = xi.leading_exponent().expect("infinite");
    let zeta = e.leading_exponent().expect("exponent of an infinite ordinal is positive");
    Ok(Ordinal::omega_pow(zeta.successor()?).into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    Sz,
    I1,
    Iinf,
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sz" => Ok(IndexKind::Sz),
            "i1" => Ok(IndexKind::I1),
            "iinf" => Ok(IndexKind::Iinf),
            _ => Err(Error::parse(0, format!("unknown index kind '{s}'"))),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::Sz => "Sz",
            IndexKind::I1 => "I1",
            IndexKind::Iinf => "Iinf",
        })
    }
}

/// Whether some Banach space has exactly this index.
///
/// Szlenk indices are attained exactly at the powers `ω^ζ` other than
/// `ω^{ω^η}` with `η` a limit; the two Bourgain indices also take every
/// positive integer. `∞` is attained by any non-Asplund space.
pub fn attainable(kind: IndexKind, value: &ExtOrdinal) -> bool {
    let Some(v) = value.as_ordinal() else {
        return true;
    };
    if kind != IndexKind::Sz && v.as_nat().is_some_and(|n| n >= 1) {
        return true;
    }
    if !v.is_power_of_omega() {
        return false;
    }
    let zeta = v.leading_exponent().expect("power of omega");
    !(zeta.is_power_of_omega() && zeta.leading_exponent().expect("nonzero").is_limit())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> ExtOrdinal {
        ExtOrdinal::parse(s).unwrap()
    }

    #[test]
    fn max_rule() {
        assert_eq!(sz_max_rule(MaxContext::Tensor, &e("w"), &e("w^2")), e("w^2"));
        assert_eq!(sz_max_rule(MaxContext::CkX, &e("infinity"), &e("w")), e("infinity"));
        assert_eq!(sz_max_rule(MaxContext::Sum, &e("1"), &e("1")), e("1"));
    }

    #[test]
    fn hull_and_ck() {
        assert_eq!(sz_convex_hull(&e("w*2+1")).unwrap(), e("w^2"));
        assert_eq!(sz_convex_hull(&e("w^w")).unwrap(), e("w^w"));
        assert_eq!(sz_convex_hull(&e("infinity")).unwrap(), e("infinity"));
        assert_eq!(sz_ck(&e("1")).unwrap(), e("1"));
        assert_eq!(sz_ck(&e("2")).unwrap(), e("w"));
        assert_eq!(sz_ck(&e("infinity")).unwrap(), e("infinity"));
        assert!(matches!(sz_ck(&e("0")), Err(Error::Domain(_))));
    }

    #[test]
    fn c_interval() {
        let o = |s| Ordinal::parse(s).unwrap();
        assert_eq!(sz_c_interval(&o("w")).unwrap(), e("w"));
        assert_eq!(sz_c_interval(&o("w^w")).unwrap(), e("w^2"));
        assert_eq!(sz_c_interval(&o("w^5")).unwrap(), e("w"));
        assert_eq!(sz_c_interval(&o("7")).unwrap(), e("1"));
        assert_eq!(sz_c_interval(&o("w^(w^2+3)")).unwrap(), e("w^3"));
    }

    #[test]
    fn attainability() {
        for v in ["1", "w", "w^2", "w^w", "w^(w^2)", "infinity"] {
            assert!(attainable(IndexKind::Sz, &e(v)), "{v}");
        }
        for v in ["0", "5", "w+1", "w^(w^w)", "w^(w^(w*2))"] {
            assert!(!attainable(IndexKind::Sz, &e(v)), "{v}");
        }
        assert!(attainable(IndexKind::I1, &e("5")));
        assert!(attainable(IndexKind::Iinf, &e("w^3")));
        assert!(!attainable(IndexKind::I1, &e("0")));
        assert!(!attainable(IndexKind::I1, &e("w+1")));
    }
}
