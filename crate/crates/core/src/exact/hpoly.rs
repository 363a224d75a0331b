use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{fmt_rat, Rational};

/// Polynomial in the formal parameter `h`, coefficients indexed by exponent.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn h() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `h`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Constant coefficient.
    pub fn mod_h(&self) -> Rational {
        self.coeff(0)
    }

    /// Exact division by `h^e`, or `None` if a lower coefficient is nonzero.
    pub fn div_h_pow(&self, e: usize) -> Option<HPoly> {
        if self.coeffs.iter().take(e).any(|c| !c.is_zero()) {
            return None;
        }
        Some(HPoly::from_coeffs(
            self.coeffs.iter().skip(e).cloned().collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> HPoly {
        HPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift(&self, e: usize) -> HPoly {
        if self.is_zero() {
            return HPoly::zero();
        }
        let mut v = vec![Rational::zero(); e];
        v.extend(self.coeffs.iter().cloned());
        HPoly { coeffs: v }
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

pub fn hpoly_mul(p: &HPoly, q: &HPoly) -> HPoly {
    if p.is_zero() || q.is_zero() {
        return HPoly::zero();
    }
    let mut v = vec![Rational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            v[i + j] += a * b;
        }
    }
    HPoly::from_coeffs(v)
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, o: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        HPoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &HPoly {
    type Output = HPoly;
    fn sub(self, o: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        HPoly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, o: &HPoly) -> HPoly {
        hpoly_mul(self, o)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl From<Rational> for HPoly {
    fn from(c: Rational) -> Self {
        HPoly::constant(c)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => fmt_rat(c),
                1 => format!("{} h", fmt_rat(c)),
                _ => format!("{} h^{}", fmt_rat(c), e),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn hpoly_mod_h(p: &HPoly) -> Rational {
    p.mod_h()
}
