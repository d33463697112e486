//! Polynomials in the horizontal-step weight `w` with big-integer coefficients.
//!
//! Every count in this crate is an element of `Z[w]`. Numeric weights are
//! obtained by [`OmegaPoly::eval`] at the boundary, never inside an algorithm.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense polynomial `c_0 + c_1 w + ... + c_d w^d`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OmegaPoly {
    coeffs: Vec<BigInt>,
}

impl OmegaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The weight `w` itself.
    pub fn omega() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `w^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at an integer weight.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Substitutes `w = x`, keeping the result inside `Z[w]` as a constant.
    pub fn specialize(&self, x: &BigInt) -> Self {
        Self::constant(self.eval(x))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division by an integer; fails if any coefficient leaves a remainder.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by the zero scalar".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("({self}) / {d}")));
            }
            out.push(q);
        }
        Ok(Self::from_coeffs(out))
    }

    /// Exact division in `Z[w]`. Succeeds only when `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision(format!("({self}) / 0")));
        };
        if dd == 0 {
            return self.div_exact_scalar(&divisor.coeffs[0]);
        }
        let inexact = || Error::InexactDivision(format!("({self}) / ({divisor})"));
        let Some(sd) = self.degree() else {
            return Ok(Self::zero());
        };
        if sd < dd {
            return Err(inexact());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl From<i64> for OmegaPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for OmegaPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &OmegaPoly {
    type Output = OmegaPoly;
    fn add(self, rhs: &OmegaPoly) -> OmegaPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &OmegaPoly {
    type Output = OmegaPoly;
    fn sub(self, rhs: &OmegaPoly) -> OmegaPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &OmegaPoly {
    type Output = OmegaPoly;
    fn mul(self, rhs: &OmegaPoly) -> OmegaPoly {
        if self.is_zero() || rhs.is_zero() {
            return OmegaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        OmegaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &OmegaPoly {
    type Output = OmegaPoly;
    fn neg(self) -> OmegaPoly {
        OmegaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for OmegaPoly {
    type Output = OmegaPoly;
    fn neg(mut self) -> OmegaPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for OmegaPoly {
            type Output = OmegaPoly;
            fn $m(self, rhs: OmegaPoly) -> OmegaPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&OmegaPoly> for OmegaPoly {
            type Output = OmegaPoly;
            fn $m(self, rhs: &OmegaPoly) -> OmegaPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<OmegaPoly> for &OmegaPoly {
            type Output = OmegaPoly;
            fn $m(self, rhs: OmegaPoly) -> OmegaPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&OmegaPoly> for OmegaPoly {
    fn add_assign(&mut self, rhs: &OmegaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&OmegaPoly> for OmegaPoly {
    fn sub_assign(&mut self, rhs: &OmegaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl std::iter::Sum for OmegaPoly {
    fn sum<I: Iterator<Item = OmegaPoly>>(iter: I) -> Self {
        iter.fold(OmegaPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Ascending powers, weight spelled `w`: `2 + 6*w^2 + w^4`, `-1 + w^2`.
impl fmt::Display for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("w")?,
                (1, false) => write!(f, "{mag}*w")?,
                (_, true) => write!(f, "w^{i}")?,
                (_, false) => write!(f, "{mag}*w^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OmegaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaPoly({self})")
    }
}

/// JSON form: array of decimal strings, index `i` holding the coefficient of `w^i`.
impl Serialize for OmegaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for OmegaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> OmegaPoly {
        OmegaPoly::from_i64s(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]) * p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn add_and_square() {
        assert_eq!(p(&[2, 0, 1]) + p(&[0, 0, 1]), p(&[2, 0, 2]));
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!((p(&[0, 3]) - p(&[0, 3])).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[2, 0, 6, 0, 1]).eval_i64(1), BigInt::from(9));
        assert_eq!(p(&[6, 6, 1]).eval_i64(1), BigInt::from(13));
        assert_eq!(p(&[7, -3, 5]).eval_i64(0), BigInt::from(7));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 0, 6, 0, 1]).to_string(), "2 + 6*w^2 + w^4");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "-1 + w^2");
        assert_eq!(p(&[0, -1, 0, -2]).to_string(), "-w - 2*w^3");
        assert_eq!(OmegaPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 3]).to_string(), "3*w");
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 2, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert!(a.div_exact(&p(&[2, 1])).is_err());
        assert_eq!(p(&[4, 6]).div_exact_scalar(&BigInt::from(2)).unwrap(), p(&[2, 3]));
        assert!(p(&[4, 5]).div_exact_scalar(&BigInt::from(2)).is_err());
        assert!(p(&[1]).div_exact(&OmegaPoly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = p(&[2, 0, -6]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["2","0","-6"]"#);
        assert_eq!(serde_json::from_str::<OmegaPoly>(&s).unwrap(), a);
    }
}
