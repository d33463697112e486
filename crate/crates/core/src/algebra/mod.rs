//! Exact scalar, polynomial and truncated-series arithmetic over `Z[w]`.

mod binom;
mod laurent;
mod omega;
mod series;
mod tpoly;

pub use binom::{binom_general, binomial};
pub use laurent::{laurent_split, LaurentSeries};
pub use omega::OmegaPoly;
pub use series::{series_from_rational, RationalGF, TSeries};
pub use tpoly::TPoly;

/// Exact rationals, used only for half-integer binomials.
pub type Rational = num_rational::BigRational;

/// Kinds accepted by [`opoly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn opoly_arith(a: &OmegaPoly, b: &OmegaPoly, op: ArithOp) -> OmegaPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

/// `1 - w t^step`.
pub(crate) fn one_minus_omega_t(step: usize) -> TPoly {
    let mut c = vec![OmegaPoly::zero(); step + 1];
    c[0] = OmegaPoly::one();
    c[step] = -OmegaPoly::omega();
    TPoly::from_coeffs(c)
}
