use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial with integer coefficients; `coeffs[i]` is the
/// coefficient of `q^i`. Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `1 - q^exp`.
    pub fn one_minus_power(exp: usize) -> Self {
        Self::one() - Self::monomial(BigInt::one(), exp)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Coefficients as `i64`, panicking on overflow. Only used for small
    /// Poincaré polynomials.
    pub fn to_i64_vec(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| i64::try_from(c).expect("coefficient overflows i64"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Replaces `q` by `q^factor`.
    pub fn inflate(&self, factor: usize) -> Self {
        assert!(factor > 0);
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * factor + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * factor] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Exact division: `Some(quotient)` iff `divisor` divides `self` in `Z[q]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (quot, rem) = self.div_rem(divisor)?;
        rem.is_zero().then_some(quot)
    }

    /// Long division over the integers. Returns `None` if some step needs a
    /// non-integral quotient coefficient or the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d_deg = divisor.degree()?;
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + d_deg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
            quot[shift] = c;
        }
        Some((Self::new(quot), Self::new(rem)))
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $m(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{a}*q^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Gaussian binomial `[n choose k]_q` by the q-Pascal recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> IntegerPolynomial {
    if k > n {
        return IntegerPolynomial::zero();
    }
    // row[j] = [m choose j]_q for the current m
    let mut row = vec![IntegerPolynomial::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j >= 1 {
                row[j - 1].clone()
            } else {
                IntegerPolynomial::zero()
            };
            let right = if j < m {
                &IntegerPolynomial::monomial(BigInt::one(), j) * &row[j]
            } else {
                IntegerPolynomial::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k)
}

pub fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

/// `Phi_d(q) = (q^d - 1) / prod_{e | d, e < d} Phi_e(q)`.
pub fn cyclotomic_polynomial(d: u64) -> IntegerPolynomial {
    assert!(d >= 1);
    let mut p = &IntegerPolynomial::monomial(BigInt::one(), d as usize) - &IntegerPolynomial::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p
            .div_exact(&cyclotomic_polynomial(e))
            .expect("cyclotomic divisor always divides q^d - 1");
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CyclotomicFactor {
    /// The monomial `q` (root zero).
    Q,
    Phi(u64),
}

impl fmt::Display for CyclotomicFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclotomicFactor::Q => f.write_str("q"),
            CyclotomicFactor::Phi(d) => write!(f, "Phi_{d}"),
        }
    }
}

impl CyclotomicFactor {
    pub fn polynomial(&self) -> IntegerPolynomial {
        match *self {
            CyclotomicFactor::Q => IntegerPolynomial::monomial(BigInt::one(), 1),
            CyclotomicFactor::Phi(d) => cyclotomic_polynomial(d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicReduction {
    /// Removed factors with multiplicities, in removal order.
    pub removed: Vec<(CyclotomicFactor, u32)>,
    pub residual: IntegerPolynomial,
}

impl CyclotomicReduction {
    pub fn is_cyclotomic_product(&self) -> bool {
        self.residual.is_constant()
    }

    /// Product of the removed factors times the residual.
    pub fn reconstruct(&self) -> IntegerPolynomial {
        self.removed
            .iter()
            .fold(self.residual.clone(), |acc, (f, m)| {
                (0..*m).fold(acc, |acc, _| &acc * &f.polynomial())
            })
    }
}

/// Divides out `q` and every cyclotomic polynomial `Phi_d` with
/// `phi(d) <= deg P`, repeating until nothing more divides.
///
/// Since `phi(d) >= sqrt(d / 2)`, scanning `d <= 2 deg(P)^2` is complete.
pub fn strip_cyclotomic_factors(p: &IntegerPolynomial) -> CyclotomicReduction {
    assert!(!p.is_zero(), "cannot strip factors of the zero polynomial");
    let mut residual = p.clone();
    let mut removed: Vec<(CyclotomicFactor, u32)> = Vec::new();

    let bump = |f: CyclotomicFactor, removed: &mut Vec<(CyclotomicFactor, u32)>| match removed
        .iter_mut()
        .find(|(g, _)| *g == f)
    {
        Some((_, m)) => *m += 1,
        None => removed.push((f, 1)),
    };

    loop {
        let mut progressed = false;
        while residual.degree().unwrap_or(0) > 0 && residual.coeff(0).is_zero() {
            residual = residual
                .div_exact(&CyclotomicFactor::Q.polynomial())
                .expect("zero constant term");
            bump(CyclotomicFactor::Q, &mut removed);
            progressed = true;
        }
        let deg = residual.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        for d in 1..=2 * deg * deg {
            if euler_phi(d) > residual.degree().unwrap_or(0) as u64 {
                continue;
            }
            let phi = cyclotomic_polynomial(d);
            while let Some(quot) = residual.div_exact(&phi) {
                residual = quot;
                bump(CyclotomicFactor::Phi(d), &mut removed);
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }
    CyclotomicReduction { removed, residual }
}
