//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so the leading term is the last entry and two
//! polynomials are equal exactly when their maps are.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Exponent vector, one slot per variable, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn constant_like(&self, c: Rat) -> Self {
        let mut p = self.empty_like();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::OutOfDomain(format!("unknown variable {name:?}")))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Monomial(exps), Rat::one());
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::OutOfDomain(format!("unknown variable {name:?}")))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff_of(&self, exps: &[u32]) -> Rat {
        self.coeff(&Monomial(exps.to_vec()))
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        assert_eq!(m.0.len(), self.nvars(), "monomial arity");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_compatible(&self, other: &MPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return self.empty_like();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = self.constant_like(Rat::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars() {
            return Err(Error::OutOfDomain(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars()
            )));
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
            })
            .sum())
    }

    /// Integer-point convenience wrapper around [`MPoly::evaluate`].
    pub fn evaluate_ints(&self, point: &[i64]) -> Result<Rat> {
        let pt: Vec<Rat> = point.iter().map(|&x| Rat::from(x)).collect();
        self.evaluate(&pt)
    }

    /// Coefficients of `var^0, var^1, ...`, each a polynomial with `var` absent.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let deg = self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0);
        let mut out = vec![self.empty_like(); deg as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = std::mem::take(&mut rest.0[var]);
            out[k as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Replaces `var` by `q` (which must live over the same variables).
    pub fn substitute(&self, var: usize, q: &MPoly) -> MPoly {
        self.check_compatible(q);
        // Horner in `var`
        let coeffs = self.coefficients_in(var);
        let mut acc = self.empty_like();
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Quotient `self / divisor` when the division is exact, `None` otherwise.
    pub fn exact_divide(&self, divisor: &MPoly) -> Result<Option<MPoly>> {
        self.check_compatible(divisor);
        let (lm, lc) = match divisor.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::OutOfDomain("division by the zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = self.empty_like();
        while let Some((m, c)) = rem.leading() {
            let Some(qm) = m.div(&lm) else {
                return Ok(None);
            };
            let qc = c / &lc;
            let mut step = self.empty_like();
            step.add_term(qm.clone(), qc.clone());
            rem = &rem - &(&step * divisor);
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// True when every coefficient is `>= 0`.
    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Monomials other than the constant whose coefficient is negative.
    pub fn negative_nonconstant_terms(&self) -> Vec<(Monomial, Rat)> {
        self.terms
            .iter()
            .filter(|(m, c)| !m.is_constant() && c.is_negative())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Monomials where `self` and `other` disagree, with both coefficients.
    pub fn differences(&self, other: &MPoly) -> Vec<(Monomial, Rat, Rat)> {
        self.check_compatible(other);
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|m| {
                let (x, y) = (self.coeff(m), other.coeff(m));
                (x != y).then(|| (m.clone(), x, y))
            })
            .collect()
    }

    /// GCD of the integer coefficients, for polynomials with integer coefficients.
    pub fn integer_content(&self) -> Option<num_bigint::BigInt> {
        use num_integer::Integer;
        if self.terms.values().any(|c| !c.is_integer()) {
            return None;
        }
        self.terms
            .values()
            .map(|c| c.numer().clone())
            .reduce(|a, b| a.gcd(&b))
    }

    /// Parses sums of terms such as `2x^4+5x^3y-6` over single-letter
    /// variables (`*` between factors is optional).
    pub fn parse(vars: &[&str], text: &str) -> Result<MPoly> {
        let mut p = Self::zero(vars);
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {text:?}"));
        let mut pos = 0;
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        while pos < chars.len() {
            let mut sign = Rat::one();
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            } else if pos > 0 {
                return Err(bad("expected + or -"));
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff = if pos > start {
                chars[start..pos].iter().collect::<String>().parse::<Rat>()?
            } else {
                Rat::one()
            };
            let mut exps = vec![0u32; vars.len()];
            let mut factors = pos > start;
            while pos < chars.len() && chars[pos] != '+' && chars[pos] != '-' {
                if chars[pos] == '*' {
                    pos += 1;
                    continue;
                }
                let name = chars[pos].to_string();
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| bad(&format!("unknown variable {name:?}")))?;
                pos += 1;
                let mut e = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let s = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    e = chars[s..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad("bad exponent"))?;
                }
                exps[idx] += e;
                factors = true;
            }
            if !factors {
                return Err(bad("empty term"));
            }
            p.add_term(Monomial(exps), sign * coeff);
        }
        Ok(p)
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (v, &e) in self.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => s.push_str(v),
                _ => s.push_str(&format!("{v}^{e}")),
            }
        }
        s
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        let s = self.fmt_monomial(m);
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

impl fmt::Display for MPoly {
    /// Leading term first, in the `2x^4+5x^3y-6` style accepted by [`MPoly::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str("-")?,
                (_, false) => f.write_str("+")?,
            }
            let mono = self.fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == Rat::one() {
                f.write_str(&mono)?;
            } else if abs.is_integer() {
                write!(f, "{abs}{mono}")?;
            } else {
                write!(f, "({abs}){mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        self.check_compatible(rhs);
        let mut out = self.empty_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: [&str; 2] = ["x", "y"];

    fn p(s: &str) -> MPoly {
        MPoly::parse(&XY, s).unwrap()
    }

    #[test]
    fn product_and_division() {
        let prod = &p("x+y") * &p("x-y");
        assert_eq!(prod, p("x^2-y^2"));
        assert_eq!(prod.exact_divide(&p("x-y")).unwrap(), Some(p("x+y")));
        assert_eq!(prod.exact_divide(&p("x+2y")).unwrap(), None);
        assert!(prod.exact_divide(&MPoly::zero(&XY)).is_err());
    }

    #[test]
    fn substitution_then_evaluation() {
        let vars = ["a", "x", "y"];
        let base = MPoly::parse(&vars, "a^2+a").unwrap();
        let q = MPoly::parse(&vars, "x+y+1").unwrap();
        let s = base.substitute(0, &q);
        assert_eq!(s.evaluate_ints(&[0, 1, 1]).unwrap(), Rat::from(12));
        assert_eq!(s.coefficients_in(0).len(), 1);
    }

    #[test]
    fn parse_display_round_trip() {
        for text in ["2x^2y-xy+3", "x^4+5x^3y-6", "-x", "7"] {
            let poly = p(text);
            assert_eq!(p(&poly.to_string()), poly);
        }
        assert_eq!(p("2x^2y-xy+3").to_string(), "2x^2y-xy+3");
        assert!(MPoly::parse(&XY, "2z").is_err());
        assert!(MPoly::parse(&XY, "x++y").is_err());
        assert!(MPoly::parse(&XY, "").is_err());
    }

    #[test]
    fn grlex_order() {
        let cubic = Monomial(vec![0, 3]);
        let square = Monomial(vec![2, 0]);
        let mixed = Monomial(vec![1, 1]);
        assert!(cubic > square);
        assert!(square > mixed);
    }

    #[test]
    fn content_and_differences() {
        let q = p("4x^2+6y-2");
        assert_eq!(q.integer_content(), Some(2.into()));
        let d = q.differences(&p("4x^2+5y-2"));
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, Rat::from(6));
        assert_eq!(p("x-3").negative_nonconstant_terms().len(), 0);
        assert_eq!(p("x-y-3").negative_nonconstant_terms().len(), 1);
    }
}
