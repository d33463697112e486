use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{OmegaPoly, TPoly};
use crate::error::{Error, Result};

/// Power series in `t` known through `t^order` (inclusive).
///
/// Binary operations on series of orders `n1`, `n2` yield order `min(n1, n2)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct TSeries {
    coeffs: Vec<OmegaPoly>,
    order: usize,
}

#[derive(Deserialize)]
struct RawSeries {
    coeffs: Vec<OmegaPoly>,
    order: usize,
}

impl TryFrom<RawSeries> for TSeries {
    type Error = String;
    fn try_from(raw: RawSeries) -> std::result::Result<Self, String> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(format!(
                "series of order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            ));
        }
        Ok(Self { coeffs: raw.coeffs, order: raw.order })
    }
}

impl TSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` terms are kept.
    pub fn new(mut coeffs: Vec<OmegaPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, OmegaPoly::zero());
        Self { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![OmegaPoly::one()], order)
    }

    pub fn from_poly(p: &TPoly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_poly(&TPoly::from_ints(coeffs), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[OmegaPoly] {
        &self.coeffs
    }

    /// `[t^n]`; panics when `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &OmegaPoly {
        assert!(n <= self.order, "coefficient t^{n} beyond order {}", self.order);
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise order {} to {order}", self.order);
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn to_poly(&self) -> TPoly {
        TPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn specialize(&self, x: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.specialize(x)).collect(), self.order)
    }

    /// Coefficients evaluated at an integer weight.
    pub fn eval(&self, x: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }

    pub fn scale(&self, c: &OmegaPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order)
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![OmegaPoly::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let unit = a0.as_constant().filter(|c| c == &BigInt::from(1) || c == &BigInt::from(-1));
        if unit.is_none() {
            return Err(Error::NonUnitConstant(a0.to_string()));
        }
        // a0 is its own inverse
        let mut out: Vec<OmegaPoly> = Vec::with_capacity(self.order + 1);
        out.push(a0.clone());
        for n in 1..=self.order {
            let mut acc = OmegaPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &(&self.coeffs[i] * &out[n - i]);
                }
            }
            out.push(-(a0 * &acc));
        }
        Ok(Self::new(out, self.order))
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        TSeries::new((0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(), order)
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        TSeries::new((0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(), order)
    }
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![OmegaPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TSeries::new(coeffs, order)
    }
}

impl Neg for &TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        TSeries::new(self.coeffs.iter().map(|c| -c).collect(), self.order)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TSeries {
            type Output = TSeries;
            fn $m(self, rhs: TSeries) -> TSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TSeries> for TSeries {
            type Output = TSeries;
            fn $m(self, rhs: &TSeries) -> TSeries {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", TPoly::from_coeffs(self.coeffs.clone()), self.order + 1)
    }
}

/// Rational generating function `num / den` with `den(0) = ±1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RationalGF {
    num: TPoly,
    den: TPoly,
}

impl RationalGF {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        check_unit_constant(&den)?;
        Ok(Self { num, den })
    }

    pub fn numerator(&self) -> &TPoly {
        &self.num
    }

    pub fn denominator(&self) -> &TPoly {
        &self.den
    }

    /// Power-series expansion through `t^order`.
    pub fn expand(&self, order: usize) -> TSeries {
        expand_unchecked(&self.num, &self.den, order)
    }

    pub fn specialize(&self, x: &BigInt) -> Self {
        Self { num: self.num.specialize(x), den: self.den.specialize(x) }
    }

    /// `t^2 -> t` on both parts; `None` if either has an odd power.
    pub fn compress(&self) -> Option<Self> {
        Some(Self { num: self.num.compress()?, den: self.den.compress()? })
    }
}

fn check_unit_constant(den: &TPoly) -> Result<()> {
    let c0 = den.coeff(0);
    match c0.as_constant() {
        Some(c) if c == BigInt::from(1) || c == BigInt::from(-1) => Ok(()),
        _ => Err(Error::NonUnitConstant(c0.to_string())),
    }
}

/// Coefficients of `num / den` via the linear recurrence the denominator defines.
pub fn series_from_rational(num: &TPoly, den: &TPoly, order: usize) -> Result<TSeries> {
    check_unit_constant(den)?;
    Ok(expand_unchecked(num, den, order))
}

fn expand_unchecked(num: &TPoly, den: &TPoly, order: usize) -> TSeries {
    let d0 = den.coeff(0);
    let dens = den.coeffs();
    let mut out: Vec<OmegaPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for (i, d) in dens.iter().enumerate().skip(1).take_while(|(i, _)| *i <= n) {
            if !d.is_zero() {
                acc -= &(d * &out[n - i]);
            }
        }
        out.push(&d0 * &acc);
    }
    TSeries::new(out, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TSeries) -> Vec<i64> {
        s.eval(&BigInt::from(1))
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn identity_and_difference() {
        let a = TSeries::from_ints(&[3, -1, 4, 1, 5], 4);
        assert_eq!(&a * &TSeries::one(4), a);
        let p = &TSeries::from_ints(&[1, 1], 5) * &TSeries::from_ints(&[1, -1], 5);
        assert_eq!(p, TSeries::from_ints(&[1, 0, -1], 5));
    }

    #[test]
    fn order_is_minimum() {
        let a = TSeries::from_ints(&[1, 2, 3], 7);
        let b = TSeries::from_ints(&[1, 1], 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn chebyshev_inverse() {
        // 1 / (1 + w t + t^2)
        let phi = TSeries::new(vec![OmegaPoly::one(), OmegaPoly::omega(), OmegaPoly::one()], 5);
        let inv = phi.inv().unwrap();
        assert_eq!(inv.coeff(0), &OmegaPoly::one());
        assert_eq!(inv.coeff(1), &OmegaPoly::from_i64s(&[0, -1]));
        assert_eq!(inv.coeff(2), &OmegaPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(inv.coeff(3), &OmegaPoly::from_i64s(&[0, 2, 0, -1]));
        assert_eq!(ints(&inv), vec![1, -1, 0, 1, -1, 0]);
        assert_eq!(&phi * &inv, TSeries::one(5));
    }

    #[test]
    fn geometric_series() {
        let inv = TSeries::from_ints(&[1, -1], 6).inv().unwrap();
        assert_eq!(ints(&inv), vec![1; 7]);
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert!(matches!(TSeries::from_ints(&[2, 1], 3).inv(), Err(Error::NonUnitConstant(_))));
        let w = TSeries::new(vec![OmegaPoly::omega()], 3);
        assert!(w.inv().is_err());
        assert!(series_from_rational(&TPoly::one(), &TPoly::from_ints(&[3]), 2).is_err());
        assert!(RationalGF::new(TPoly::one(), TPoly::zero()).is_err());
    }

    #[test]
    fn rational_expansions() {
        let s = series_from_rational(&TPoly::from_ints(&[1, -1]), &TPoly::from_ints(&[1, -3, 1]), 4)
            .unwrap();
        assert_eq!(ints(&s), vec![1, 2, 5, 13, 34]);
        let s = series_from_rational(
            &TPoly::from_ints(&[1, -3, 1, 1]),
            &TPoly::from_ints(&[1, -4, 3, 2, -1]),
            9,
        )
        .unwrap();
        assert_eq!(ints(&s), vec![1, 1, 2, 4, 9, 21, 51, 127, 322, 826]);
        let p = TPoly::from_ints(&[1, 7, -2]);
        assert_eq!(series_from_rational(&p, &p, 6).unwrap(), TSeries::one(6));
    }

    #[test]
    fn json_shape() {
        let s = TSeries::from_ints(&[1, -2], 2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"coeffs":[["1"],["-2"],[]],"order":2}"#);
        assert_eq!(serde_json::from_str::<TSeries>(&j).unwrap(), s);
        assert!(serde_json::from_str::<TSeries>(r#"{"coeffs":[["1"]],"order":2}"#).is_err());
    }
}
