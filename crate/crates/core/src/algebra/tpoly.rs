use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::OmegaPoly;
use crate::error::{Error, Result};

/// Polynomial in `t` with coefficients in `Z[w]`; index `n` holds `[t^n]`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<OmegaPoly>", into = "Vec<OmegaPoly>")]
pub struct TPoly {
    coeffs: Vec<OmegaPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(OmegaPoly::one())
    }

    pub fn constant(c: OmegaPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c t^n`.
    pub fn monomial(c: OmegaPoly, n: usize) -> Self {
        let mut coeffs = vec![OmegaPoly::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<OmegaPoly>) -> Self {
        while coeffs.last().is_some_and(OmegaPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, ascending in `t`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| OmegaPoly::constant(c)).collect())
    }

    pub fn coeffs(&self) -> &[OmegaPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> OmegaPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![OmegaPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &OmegaPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(t) -> p(-t)`.
    pub fn substitute_neg_t(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Replaces `t^2` by `t`. `None` if an odd power is present.
    pub fn compress(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Replaces `t` by `t^2`.
    pub fn expand_t_squared(&self) -> Self {
        let mut coeffs = Vec::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                coeffs.push(OmegaPoly::zero());
            }
            coeffs.push(c.clone());
        }
        Self::from_coeffs(coeffs)
    }

    /// Substitutes an integer weight into every coefficient.
    pub fn specialize(&self, x: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.specialize(x)).collect())
    }

    /// Exact polynomial division in `Z[w][t]`; errors on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision("polynomial division by zero".into()));
        };
        let Some(sd) = self.degree() else {
            return Ok(Self::zero());
        };
        let inexact = || Error::InexactDivision(format!("({self}) / ({divisor})"));
        if sd < dd {
            return Err(inexact());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![OmegaPoly::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let q = rem[k + dd].div_exact(lead).map_err(|_| inexact())?;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &(&q * c);
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl From<Vec<OmegaPoly>> for TPoly {
    fn from(v: Vec<OmegaPoly>) -> Self {
        Self::from_coeffs(v)
    }
}

impl From<TPoly> for Vec<OmegaPoly> {
    fn from(p: TPoly) -> Self {
        p.coeffs
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![OmegaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TPoly> for TPoly {
            type Output = TPoly;
            fn $m(self, rhs: &TPoly) -> TPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<TPoly> for &TPoly {
            type Output = TPoly;
            fn $m(self, rhs: TPoly) -> TPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negated_argument() {
        let d3 = TPoly::from_ints(&[1, 5, 5, 1]);
        assert_eq!(d3.substitute_neg_t(), TPoly::from_ints(&[1, -5, 5, -1]));
        let even = TPoly::from_ints(&[3, 0, -2, 0, 7]);
        assert_eq!(even.substitute_neg_t(), even);
        assert_eq!(d3.substitute_neg_t().substitute_neg_t(), d3);
    }

    #[test]
    fn compress_round_trip() {
        let p = TPoly::from_ints(&[1, 0, -3, 0, 1]);
        let c = p.compress().unwrap();
        assert_eq!(c, TPoly::from_ints(&[1, -3, 1]));
        assert_eq!(c.expand_t_squared(), p);
        assert!(TPoly::from_ints(&[1, 1]).compress().is_none());
    }

    #[test]
    fn exact_division_by_one_minus_t() {
        let one_minus_t = TPoly::from_ints(&[1, -1]);
        let p = &TPoly::from_ints(&[1, -6, 8, -2]) * &one_minus_t;
        assert_eq!(p.div_exact(&one_minus_t).unwrap(), TPoly::from_ints(&[1, -6, 8, -2]));
        assert!(TPoly::from_ints(&[1, 1]).div_exact(&one_minus_t).is_err());
    }

    #[test]
    fn division_with_weighted_leading_coefficient() {
        // (w t - 1) / (1 - w t) = -1
        let num = TPoly::from_coeffs(vec![OmegaPoly::constant(-1), OmegaPoly::omega()]);
        let den = TPoly::from_coeffs(vec![OmegaPoly::one(), -OmegaPoly::omega()]);
        assert_eq!(num.div_exact(&den).unwrap(), TPoly::from_ints(&[-1]));
    }
}
