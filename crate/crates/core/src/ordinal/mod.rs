//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with strictly
//! decreasing exponents `e₁ > … > eₖ` (themselves ordinals) and positive
//! integer coefficients. The empty sum is 0. Every value is kept canonical, so
//! structural equality is ordinal equality and the derived `Hash` is sound.

mod arith;
mod codec;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub use arith::left_sub;
pub use codec::Style;

/// Default bound on exponent nesting depth.
pub const DEFAULT_MAX_DEPTH: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, 1)
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, rejecting
    /// anything that is not already in canonical form.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self> {
        for (i, (exponent, coefficient)) in terms.iter().enumerate() {
            if *coefficient == 0 {
                return Err(Error::InvariantViolation(format!(
                    "term {i} has coefficient 0"
                )));
            }
            if i > 0 && terms[i - 1].0 <= *exponent {
                return Err(Error::InvariantViolation(format!(
                    "exponents not strictly decreasing at term {i}"
                )));
            }
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        })
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.coefficient > 0));
        debug_assert!(terms.windows(2).all(|w| w[0].exponent > w[1].exponent));
        Ordinal { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_nat() == Some(1)
    }

    /// The value as a natural number, if it is finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `e₁` of the normal form, `None` for 0.
    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn leading_coefficient(&self) -> Option<u64> {
        self.terms.first().map(|t| t.coefficient)
    }

    /// Coefficient of the `ω^0` term.
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient,
            _ => 0,
        }
    }

    /// The ordinal with its finite part removed (largest limit or zero below it).
    pub fn limit_part(&self) -> Ordinal {
        let mut terms = self.terms.clone();
        if self.is_successor() {
            terms.pop();
        }
        Ordinal { terms }
    }

    /// True for `ω^ζ`, i.e. a single term with coefficient 1.
    pub fn is_power_of_omega(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.coefficient == 1)
    }

    /// Exponent nesting depth: 0 for 0, otherwise one more than the deepest
    /// exponent.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn successor(&self) -> Result<Ordinal> {
        self.checked_add(&Ordinal::one())
    }

    /// The immediate predecessor of a successor ordinal.
    pub fn predecessor(&self) -> Option<Ordinal> {
        if !self.is_successor() {
            return None;
        }
        let mut terms = self.terms.clone();
        let last = terms.last_mut().expect("successor has a term");
        if last.coefficient == 1 {
            terms.pop();
        } else {
            last.coefficient -= 1;
        }
        Some(Ordinal { terms })
    }

    pub fn cofinality(&self) -> Cofinality {
        if self.is_zero() {
            Cofinality::Zero
        } else if self.is_successor() {
            Cofinality::One
        } else {
            Cofinality::Omega
        }
    }

    /// The `n`-th element (n ≥ 1) of the canonical fundamental sequence of a
    /// limit ordinal: writing `a = β + ω^e`, `a[n] = β + ω^{e'}·n` when
    /// `e = e' + 1` and `a[n] = β + ω^{e[n]}` when `e` is a limit.
    pub fn fundamental(&self, n: u64) -> Result<Ordinal> {
        if !self.is_limit() {
            return Err(Error::NotALimit(self.to_string()));
        }
        if n == 0 {
            return Err(Error::Domain(
                "fundamental sequences are indexed from 1".into(),
            ));
        }
        let mut terms = self.terms.clone();
        let last = terms.pop().expect("limit has a term");
        if last.coefficient > 1 {
            terms.push(Term {
                exponent: last.exponent.clone(),
                coefficient: last.coefficient - 1,
            });
        }
        let base = Ordinal { terms };
        let tail = match last.exponent.predecessor() {
            Some(pred) => Ordinal::monomial(pred, n),
            None => Ordinal::omega_pow(last.exponent.fundamental(n)?),
        };
        base.checked_add(&tail)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then(a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Ascii))
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({})", self.render(Style::Ascii))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cofinality {
    Zero,
    One,
    Omega,
}

impl fmt::Display for Cofinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cofinality::Zero => "0",
            Cofinality::One => "1",
            Cofinality::Omega => "w",
        })
    }
}

/// An ordinal or the absorbing top element `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtOrdinal {
    Finite(Ordinal),
    Infinity,
}

impl ExtOrdinal {
    pub fn as_ordinal(&self) -> Option<&Ordinal> {
        match self {
            ExtOrdinal::Finite(o) => Some(o),
            ExtOrdinal::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtOrdinal::Infinity)
    }

    /// The gamma numbers are 0 and the powers `ω^ζ`; `∞` counts as one.
    pub fn is_gamma_number(&self) -> bool {
        match self {
            ExtOrdinal::Infinity => true,
            ExtOrdinal::Finite(o) => o.is_zero() || o.is_power_of_omega(),
        }
    }

    /// The least gamma number that is at least `self`.
    pub fn gamma(&self) -> Result<ExtOrdinal> {
        match self {
            ExtOrdinal::Infinity => Ok(ExtOrdinal::Infinity),
            ExtOrdinal::Finite(o) => o.gamma().map(ExtOrdinal::Finite),
        }
    }

    pub fn render(&self, style: Style) -> String {
        match self {
            ExtOrdinal::Finite(o) => o.render(style),
            ExtOrdinal::Infinity => match style {
                Style::Ascii => "infinity".to_owned(),
                Style::Unicode => "∞".to_owned(),
            },
        }
    }

    pub fn parse(text: &str) -> Result<ExtOrdinal> {
        match text.trim() {
            "infinity" | "inf" | "∞" => Ok(ExtOrdinal::Infinity),
            other => Ordinal::parse(other).map(ExtOrdinal::Finite),
        }
    }
}

impl From<Ordinal> for ExtOrdinal {
    fn from(o: Ordinal) -> Self {
        ExtOrdinal::Finite(o)
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Ascii))
    }
}

impl Ordinal {
    /// Least gamma number `≥ self`: the value itself when it is 0 or `ω^ζ`,
    /// otherwise `ω^{e+1}` for leading exponent `e`.
    pub fn gamma(&self) -> Result<Ordinal> {
        if self.is_zero() || self.is_power_of_omega() {
            return Ok(self.clone());
        }
        let lead = self.leading_exponent().expect("nonzero");
        Ok(Ordinal::omega_pow(lead.successor()?))
    }
}
