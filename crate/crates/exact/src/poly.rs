//! Multivariate polynomials with integer coefficients.
//!
//! Terms are stored as a map from exponent vectors to nonzero coefficients.
//! Exponent vectors compare lexicographically, so the last key of the map is
//! the leading term for lex order with the first declared variable largest.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{ExactError, Result};

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: BigInt) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            let m = vec![0; p.vars.len()];
            p.terms.insert(m, c);
        }
        p
    }

    /// The polynomial consisting of the single variable `vars[index]`.
    pub fn variable(vars: Arc<[String]>, index: usize) -> Self {
        let mut m = vec![0; vars.len()];
        m[index] = 1;
        let mut p = Poly::zero(vars);
        p.terms.insert(m, BigInt::one());
        p
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), p.vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial has degree zero (the zero polynomial gives `Some(0)`).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ExactError::MixedRing {
                left: crate::Ring::Polynomial(self.vars.clone()),
                right: crate::Ring::Polynomial(other.vars.clone()),
            })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = Poly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.vars.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Exact division: returns `q` with `q * divisor == self`, or an error when
    /// no such polynomial exists.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        self.check_vars(divisor)?;
        let (lm, lc) = divisor.leading().ok_or(ExactError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading() {
            if !m.iter().zip(lm).all(|(a, b)| a >= b) {
                return Err(ExactError::InexactDivision);
            }
            let (q, r) = c.div_rem(lc);
            if !r.is_zero() {
                return Err(ExactError::InexactDivision);
            }
            let qm: Monomial = m.iter().zip(lm).map(|(a, b)| a - b).collect();
            let term = Poly::from_terms(self.vars.clone(), [(qm, q)]);
            rem = rem.try_sub(&term.try_mul(divisor)?)?;
            quot = quot.try_add(&term)?;
        }
        Ok(quot)
    }

    /// Substitutes integer values for every variable.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.vars.len());
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m) {
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Parses the fixed grammar `c*v1^e1*v2^e2 + ... - ...` over the declared variables.
    pub fn parse(vars: Arc<[String]>, input: &str) -> Result<Poly> {
        let err = |reason: String| ExactError::Parse {
            what: "polynomial",
            input: input.to_string(),
            reason,
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input".into()));
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.char_indices() {
            if ch == '+' || ch == '-' {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if i > 0 {
                    return Err(err("empty term".into()));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(err("trailing sign".into()));
        }
        terms.push((negative, current));

        let mut out = Poly::zero(vars.clone());
        for (neg, term) in terms {
            let mut coeff = BigInt::one();
            let mut mono = vec![0u32; vars.len()];
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor".into()));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|e| err(e.to_string()))?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|e| err(e.to_string()))?),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| err(format!("unknown variable {name:?}")))?;
                mono[idx] += exp;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = m
                .iter()
                .zip(self.vars.iter())
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Arc<[String]> {
        Arc::from(vec!["h".to_string(), "t".to_string()])
    }

    #[test]
    fn parse_and_print_round_trip() {
        let p = Poly::parse(vars(), "h").unwrap();
        assert_eq!(p.to_string(), "h");
        let q = Poly::parse(vars(), "-3*h^2*t + 2 - t").unwrap();
        assert_eq!(q.to_string(), "-3*h^2*t - t + 2");
        assert_eq!(Poly::parse(vars(), &q.to_string()).unwrap(), q);
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        assert!(Poly::parse(vars(), "2*y").is_err());
        assert!(Poly::parse(vars(), "h+").is_err());
    }

    #[test]
    fn difference_of_squares() {
        let h = Poly::variable(vars(), 0);
        let t = Poly::variable(vars(), 1);
        let lhs = h.try_add(&t).unwrap().try_mul(&h.try_sub(&t).unwrap()).unwrap();
        assert_eq!(lhs, Poly::parse(vars(), "h^2 - t^2").unwrap());
    }

    #[test]
    fn exact_division() {
        let a = Poly::parse(vars(), "h^2 - t^2").unwrap();
        let b = Poly::parse(vars(), "h - t").unwrap();
        assert_eq!(a.exact_div(&b).unwrap(), Poly::parse(vars(), "h + t").unwrap());
        let c = Poly::parse(vars(), "h^2 + 1").unwrap();
        assert_eq!(c.exact_div(&b), Err(ExactError::InexactDivision));
    }
}
