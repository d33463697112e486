use super::{OmegaPoly, TSeries};

/// Series with finitely many negative powers: `sum_{e = min_exp}^{order} c_e t^e`.
///
/// Leading zero coefficients are stripped, so only the zero series has a zero
/// at `t^{min_exp}`; it is stored with no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<OmegaPoly>,
    order: i64,
}

impl LaurentSeries {
    /// `coeffs[i]` is the coefficient of `t^(min_exp + i)`; terms past `order` are
/// dropped and missing ones up to `order` are zero.
    pub fn new(min_exp: i64, mut coeffs: Vec<OmegaPoly>, order: i64) -> Self {
        let keep = (order - min_exp + 1).max(0) as usize;
        coeffs.resize(keep, OmegaPoly::zero());
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero(order);
        }
        coeffs.drain(..lead);
        Self { min_exp: min_exp + lead as i64, coeffs, order }
    }

    pub fn zero(order: i64) -> Self {
        Self { min_exp: 0.min(order + 1), coeffs: Vec::new(), order }
    }

    /// `t^shift * s`.
    pub fn from_series(s: &TSeries, shift: i64) -> Self {
        Self::new(shift, s.coeffs().to_vec(), s.order() as i64 + shift)
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> OmegaPoly {
        assert!(e <= self.order, "coefficient t^{e} beyond order {}", self.order);
        if e < self.min_exp {
            return OmegaPoly::zero();
        }
        self.coeffs.get((e - self.min_exp) as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(i64, OmegaPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.min_exp + i as i64, c.clone()))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let lo = self.min_exp.min(rhs.min_exp);
        let coeffs = (lo..=order).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        Self::new(lo, coeffs, order)
    }

    /// Splits into the principal part (exponents below zero, exact) and the
    /// regular part. Requires `order >= 0`.
    pub fn split(&self) -> (LaurentSeries, TSeries) {
        assert!(self.order >= 0, "regular part of a series with order {}", self.order);
        let principal: Vec<OmegaPoly> = (self.min_exp.min(0)..0).map(|e| self.coeff(e)).collect();
        let principal = Self::new(self.min_exp.min(0), principal, -1);
        let regular = (0..=self.order).map(|e| self.coeff(e)).collect();
        (principal, TSeries::new(regular, self.order as usize))
    }
}

/// Free-function form of [`LaurentSeries::split`].
pub fn laurent_split(x: &LaurentSeries) -> (LaurentSeries, TSeries) {
    x.split()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_example() {
        // t^-4 - 4t^-3 + 2t^-2 + 1 + 7t
        let x = LaurentSeries::new(-4, [1, -4, 2, 0, 1, 7].map(OmegaPoly::constant).to_vec(), 1);
        let (p, r) = x.split();
        assert_eq!(
            p.terms(),
            vec![(-4, OmegaPoly::constant(1)), (-3, OmegaPoly::constant(-4)), (-2, OmegaPoly::constant(2))]
        );
        assert_eq!(r, TSeries::from_ints(&[1, 7], 1));
        for e in -4..=1 {
            let part = if e < 0 { p.coeff(e) } else { r.coeff(e as usize).clone() };
            assert_eq!(part, x.coeff(e));
        }
    }

    #[test]
    fn pure_series_has_no_principal_part() {
        let s = TSeries::from_ints(&[2, 0, 5], 4);
        let (p, r) = LaurentSeries::from_series(&s, 0).split();
        assert!(p.is_zero());
        assert_eq!(r, s);
    }

    #[test]
    fn cancellation_against_negative_shift() {
        // t^-1 (t + t^2)
        let s = TSeries::from_ints(&[0, 1, 1], 3);
        let (p, r) = LaurentSeries::from_series(&s, -1).split();
        assert!(p.is_zero());
        assert_eq!(r, TSeries::from_ints(&[1, 1], 2));
    }
}
