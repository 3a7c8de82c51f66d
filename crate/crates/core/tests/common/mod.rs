#![allow(dead_code)]

use std::cmp::Ordering;

use rand::Rng;
use szlenk_calc::tree::FiniteTree;
use szlenk_calc::Ordinal;

pub fn o(s: &str) -> Ordinal {
    Ordinal::parse(s).unwrap()
}

/// A random exponent below `ω^3`: `ω^2·a + ω·b + c`.
pub fn rand_small_exponent<R: Rng>(rng: &mut R) -> Ordinal {
    let terms: Vec<(Ordinal, u64)> = (0..3u64)
        .rev()
        .map(|e| (Ordinal::nat(e), rng.gen_range(0..3)))
        .filter(|(_, c)| *c > 0)
        .collect();
    Ordinal::from_terms(terms).unwrap()
}

/// A random ordinal below `ω^{ω^3}` with at most `max_terms` terms.
pub fn rand_ordinal<R: Rng>(rng: &mut R, max_terms: usize, max_coeff: u64) -> Ordinal {
    let count = rng.gen_range(0..=max_terms);
    let mut exps: Vec<Ordinal> = (0..count).map(|_| rand_small_exponent(rng)).collect();
    exps.sort();
    exps.dedup();
    exps.reverse();
    let terms = exps
        .into_iter()
        .map(|e| (e, rng.gen_range(1..=max_coeff)))
        .collect();
    Ordinal::from_terms(terms).unwrap()
}

/// A random ordinal below `ω^ω` with exponents below `max_exp`.
pub fn rand_poly_ordinal<R: Rng>(rng: &mut R, max_exp: u64, max_coeff: u64) -> Ordinal {
    let terms = (0..max_exp)
        .rev()
        .map(|e| (Ordinal::nat(e), rng.gen_range(0..=max_coeff)))
        .filter(|(_, c)| *c > 0)
        .collect();
    Ordinal::from_terms(terms).unwrap()
}

/// Ordinals below `ω^ω` as coefficient vectors indexed by exponent, with
/// arithmetic written from the textbook definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<u64>);

impl Poly {
    pub fn from_ordinal(a: &Ordinal) -> Option<Poly> {
        let mut v = Vec::new();
        for t in a.terms() {
            let e = t.exponent().as_nat()? as usize;
            if v.len() <= e {
                v.resize(e + 1, 0);
            }
            v[e] = t.coefficient();
        }
        Some(Poly(v).trim())
    }

    pub fn to_ordinal(&self) -> Ordinal {
        let terms = (0..self.0.len())
            .rev()
            .filter(|&e| self.0[e] > 0)
            .map(|e| (Ordinal::nat(e as u64), self.0[e]))
            .collect();
        Ordinal::from_terms(terms).unwrap()
    }

    fn trim(mut self) -> Poly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn cmp(&self, other: &Poly) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }

    /// Terms of `a` below the leading exponent of `b` are absorbed.
    pub fn add(&self, b: &Poly) -> Poly {
        let Some(d) = b.degree() else {
            return self.clone();
        };
        let mut out = b.0.clone();
        for e in d..self.0.len() {
            if e == d {
                out[e] += self.0[e];
            } else {
                out.push(0);
                out[e] = self.0[e];
            }
        }
        Poly(out).trim()
    }

    /// `a·n` as `n`-fold repeated addition and `a·ω^f = ω^{deg a + f}`,
    /// combined by left distributivity.
    pub fn mul(&self, b: &Poly) -> Poly {
        let Some(da) = self.degree() else {
            return Poly(Vec::new());
        };
        let mut acc = Poly(Vec::new());
        for f in (0..b.0.len()).rev() {
            let c = b.0[f];
            if c == 0 {
                continue;
            }
            let piece = if f == 0 {
                let mut p = Poly(Vec::new());
                for _ in 0..c {
                    p = p.add(self);
                }
                p
            } else {
                let mut v = vec![0; da + f + 1];
                v[da + f] = c;
                Poly(v)
            };
            acc = acc.add(&piece);
        }
        acc
    }
}

/// A random tree with `n` nodes: each node picks an earlier parent.
pub fn rand_tree<R: Rng>(rng: &mut R, n: usize) -> FiniteTree {
    let parents: Vec<Option<usize>> = (0..n)
        .map(|i| if i == 0 { None } else { Some(rng.gen_range(0..i)) })
        .collect();
    FiniteTree::from_parents(&parents).unwrap()
}

/// A random expression in the ordinal grammar.
pub fn rand_expr<R: Rng>(rng: &mut R, depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => "w".to_owned(),
            1 => "ω".to_owned(),
            _ => rng.gen_range(0..5).to_string(),
        };
    }
    let a = rand_expr(rng, depth - 1);
    match rng.gen_range(0..4) {
        0 => format!("{a} + {}", rand_expr(rng, depth - 1)),
        1 => format!("({a})*{}", rand_expr(rng, depth - 1)),
        2 => format!("w^({a})"),
        _ => format!("({a})"),
    }
}
