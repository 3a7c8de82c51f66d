use std::ops::{Add, Mul};

use super::{Ordinal, Term, DEFAULT_MAX_DEPTH};
use crate::error::{Error, Result};

fn coefficient_overflow() -> Error {
    Error::Overflow("coefficient exceeds u64".into())
}

/// The unique `r` with `a + r = b`, when `a ≤ b`.
pub fn left_sub(a: &Ordinal, b: &Ordinal) -> Option<Ordinal> {
    if a > b {
        return None;
    }
    let common = a
        .terms
        .iter()
        .zip(&b.terms)
        .take_while(|(x, y)| x == y)
        .count();
    if common == a.terms.len() {
        return Some(Ordinal::from_terms_unchecked(b.terms[common..].to_vec()));
    }
    let (ta, tb) = (&a.terms[common], &b.terms[common]);
    let mut terms = Vec::with_capacity(b.terms.len() - common);
    if ta.exponent == tb.exponent {
        terms.push(Term {
            exponent: tb.exponent.clone(),
            coefficient: tb.coefficient - ta.coefficient,
        });
        terms.extend_from_slice(&b.terms[common + 1..]);
    } else {
        terms.extend_from_slice(&b.terms[common..]);
    }
    Some(Ordinal::from_terms_unchecked(terms))
}

impl Ordinal {
    pub fn checked_add(&self, rhs: &Ordinal) -> Result<Ordinal> {
        let Some(head) = rhs.terms.first() else {
            return Ok(self.clone());
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent > head.exponent)
            .cloned()
            .collect();
        let merged = self.terms.iter().find(|t| t.exponent == head.exponent);
        let start = terms.len();
        terms.extend_from_slice(&rhs.terms);
        if let Some(t) = merged {
            terms[start].coefficient = t
                .coefficient
                .checked_add(head.coefficient)
                .ok_or_else(coefficient_overflow)?;
        }
        Ok(Ordinal::from_terms_unchecked(terms))
    }

    pub fn checked_mul(&self, rhs: &Ordinal) -> Result<Ordinal> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Ordinal::zero());
        }
        let lead = &self.terms[0];
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].coefficient = lead
                    .coefficient
                    .checked_mul(t.coefficient)
                    .ok_or_else(coefficient_overflow)?;
                Ordinal::from_terms_unchecked(terms)
            } else {
                Ordinal::monomial(lead.exponent.checked_add(&t.exponent)?, t.coefficient)
            };
            acc = acc.checked_add(&piece)?;
        }
        Ok(acc)
    }

    pub fn checked_pow(&self, rhs: &Ordinal) -> Result<Ordinal> {
        self.pow_bounded(rhs, DEFAULT_MAX_DEPTH)
    }

    /// Ordinal exponentiation, failing with `Overflow` when the result nests
    /// deeper than `max_depth`.
    pub fn pow_bounded(&self, rhs: &Ordinal, max_depth: usize) -> Result<Ordinal> {
        if rhs.is_zero() {
            return Ok(Ordinal::one());
        }
        if self.is_zero() || self.is_one() {
            return Ok(self.clone());
        }
        let finite_power = self.pow_nat(rhs.finite_part())?;
        let limit = rhs.limit_part();
        let result = if limit.is_zero() {
            finite_power
        } else {
            // k^(ω·L) = ω^L for finite k ≥ 2; a^L = ω^(e·L) for infinite a.
            let exponent = match self.as_nat() {
                Some(_) => limit.div_omega(),
                None => self.terms[0].exponent.checked_mul(&limit)?,
            };
            Ordinal::omega_pow(exponent).checked_mul(&finite_power)?
        };
        if result.depth() > max_depth {
            return Err(Error::Overflow(format!(
                "result nests deeper than {max_depth}"
            )));
        }
        Ok(result)
    }

    fn pow_nat(&self, mut n: u64) -> Result<Ordinal> {
        let mut result = Ordinal::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// For a limit-or-zero `L`, the unique `M` with `ω·M = L`.
    fn div_omega(&self) -> Ordinal {
        debug_assert_eq!(self.finite_part(), 0);
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                exponent: match t.exponent.as_nat() {
                    Some(m) => Ordinal::nat(m - 1),
                    None => t.exponent.clone(),
                },
                coefficient: t.coefficient,
            })
            .collect();
        Ordinal::from_terms_unchecked(terms)
    }

    /// Left division: the unique `(q, r)` with `self = divisor·q + r` and
    /// `r < divisor`.
    pub fn divmod(&self, divisor: &Ordinal) -> Result<(Ordinal, Ordinal)> {
        let Some(head) = divisor.terms.first() else {
            return Err(Error::DivisionByZero);
        };
        if self < divisor {
            return Ok((Ordinal::zero(), self.clone()));
        }
        let split = self
            .terms
            .iter()
            .take_while(|t| t.exponent > head.exponent)
            .count();
        let mut quotient: Vec<Term> = self.terms[..split]
            .iter()
            .map(|t| Term {
                exponent: left_sub(&head.exponent, &t.exponent).expect("exponent above divisor's"),
                coefficient: t.coefficient,
            })
            .collect();
        let low = Ordinal::from_terms_unchecked(self.terms[split..].to_vec());
        let remainder = if low >= *divisor {
            let mut k = low.terms[0].coefficient / head.coefficient;
            let mut multiple = divisor.checked_mul(&Ordinal::nat(k))?;
            while multiple > low {
                k -= 1;
                multiple = divisor.checked_mul(&Ordinal::nat(k))?;
            }
            quotient.push(Term {
                exponent: Ordinal::zero(),
                coefficient: k,
            });
            left_sub(&multiple, &low).expect("multiple below dividend")
        } else {
            low
        };
        Ok((Ordinal::from_terms_unchecked(quotient), remainder))
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.checked_add(rhs).expect("ordinal addition overflow")
    }
}

impl Mul for &Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: &Ordinal) -> Ordinal {
        self.checked_mul(rhs).expect("ordinal multiplication overflow")
    }
}
