use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::{Error, Result};

/// Exponent vector, ordered graded-lexicographically: higher total degree is
/// larger, ties broken lexicographically with the first variable largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, degrees: &[u32]) -> u32 {
        self.0.iter().zip(degrees).map(|(e, d)| e * d).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients over a named,
/// ordered variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    variables: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(variables: Arc<[String]>) -> Self {
        MultiPoly {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variables: Arc<[String]>, c: Rational) -> Self {
        let n = variables.len();
        Self::term(variables, Monomial::one(n), c)
    }

    pub fn term(variables: Arc<[String]>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), variables.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { variables, terms }
    }

    pub fn var(variables: Arc<[String]>, index: usize) -> Self {
        let mut e = vec![0; variables.len()];
        e[index] = 1;
        Self::term(variables, Monomial(e), Rational::one())
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.variables.clone());
        }
        MultiPoly {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.mul(m), v.clone()))
                .collect(),
        }
    }

    /// `Some(d)` when every term has weighted degree `d`; `None` for the zero
    /// polynomial or an inhomogeneous one.
    pub fn homogeneous_degree(&self, degrees: &[u32]) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(degrees));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, degrees: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_degree(degrees).is_some()
    }

    /// Substitutes `value` for the named variable and removes it from the
    /// variable list.
    pub fn substitute(&self, name: &str, value: &Rational) -> Result<MultiPoly> {
        let idx = self
            .variable_index(name)
            .ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        let variables: Arc<[String]> = self
            .variables
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = MultiPoly::zero(variables);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut rest = m.0.clone();
            rest.remove(idx);
            let factor = num_traits::pow::pow(value.clone(), e as usize);
            out.add_term(Monomial(rest), c * factor);
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &MultiPoly) {
        assert!(
            Arc::ptr_eq(&self.variables, &other.variables) || self.variables == other.variables,
            "polynomials over different variable lists"
        );
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = MultiPoly::zero(self.variables.clone());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form: descending graded-lex terms, each `coeff*x^e*y`, the
    /// first carrying its own sign and later ones joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let shown = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                -c
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            write!(f, "{shown}")?;
            for (v, &e) in self.variables.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn vars(names: &[&str]) -> Arc<[String]> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn grlex_order() {
        let a = Monomial(vec![0, 2]);
        let b = Monomial(vec![1, 0]);
        let c = Monomial(vec![1, 1]);
        assert!(c > a && a > b);
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 1]));
    }

    #[test]
    fn arithmetic_cancels_zeros() {
        let v = vars(&["x", "y"]);
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let s = &x + &y;
        let d = &s - &x;
        assert_eq!(d, y);
        assert!((&x - &x).is_zero());
        let sq = &s * &s;
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.to_string(), "1*x^2 + 2*x*y + 1*y^2");
    }

    #[test]
    fn canonical_strings() {
        let v = vars(&["a", "b", "c"]);
        let a = MultiPoly::var(v.clone(), 0);
        let b = MultiPoly::var(v.clone(), 1);
        let c = MultiPoly::var(v.clone(), 2);
        let p = &(&(-&a) - &(&b * &c)) + &c.scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(p.to_string(), "-1*b*c - 1*a + 1/2*c");
        assert_eq!(MultiPoly::zero(v.clone()).to_string(), "0");
        assert_eq!(MultiPoly::constant(v, rat(-3)).to_string(), "-3");
    }

    #[test]
    fn homogeneity_and_substitution() {
        let v = vars(&["x", "y", "t"]);
        let x = MultiPoly::var(v.clone(), 0);
        let y = MultiPoly::var(v.clone(), 1);
        let t = MultiPoly::var(v.clone(), 2);
        let p = &(&x * &t) + &y; // degrees x=1, y=2, t=1
        assert_eq!(p.homogeneous_degree(&[1, 2, 1]), Some(2));
        assert_eq!(p.homogeneous_degree(&[1, 1, 1]), None);
        let at0 = p.substitute("t", &rat(0)).unwrap();
        assert_eq!(at0.to_string(), "1*y");
        let at2 = p.substitute("t", &rat(2)).unwrap();
        assert_eq!(at2.to_string(), "2*x + 1*y");
        assert!(p.substitute("z", &rat(0)).is_err());
    }
}
