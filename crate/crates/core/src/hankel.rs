//! Hankel determinants of Motzkin numbers and their closed forms.

use crate::algebra::{binomial, OmegaPoly};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::motzkin::{inverse_motzkin_entry, motzkin_series};
use crate::verify::{expect_eq, Verdict};

/// Determinant by fraction-free (Bareiss) elimination over `Z[w]`.
///
/// A zero pivot is replaced by a lower row with a nonzero entry in the pivot
/// column, flipping the sign. Every interior division is exact; a remainder
/// surfaces as [`Error::InexactDivision`].
pub fn det_fraction_free(m: &SquareMatrix) -> Result<OmegaPoly> {
    let n = m.dim();
    if n == 0 {
        return Ok(OmegaPoly::one());
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = OmegaPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(OmegaPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Laplace expansion along the first row. Exponential; meant as a check for
/// small matrices.
pub fn det_cofactor(m: &SquareMatrix) -> OmegaPoly {
    fn go(rows: &[Vec<OmegaPoly>], cols: &[usize]) -> OmegaPoly {
        let Some((first, rest)) = rows.split_first() else {
            return OmegaPoly::one();
        };
        let mut acc = OmegaPoly::zero();
        for (pos, &c) in cols.iter().enumerate() {
            if first[c].is_zero() {
                continue;
            }
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = &first[c] * &go(rest, &minor_cols);
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }
    let rows = m.rows();
    go(&rows, &(0..m.dim()).collect::<Vec<_>>())
}

/// Hankel matrix `(alpha M_{i+j+shift} + beta M_{i+j+shift+1})_{0 <= i, j < n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSpec {
    pub shift: usize,
    pub alpha: OmegaPoly,
    pub beta: OmegaPoly,
    pub n: usize,
}

impl HankelSpec {
    /// Pure shifted Hankel matrix `(M_{i+j+shift})`.
    pub fn shifted(shift: usize, n: usize) -> Self {
        Self { shift, alpha: OmegaPoly::one(), beta: OmegaPoly::zero(), n }
    }

    pub fn combination(alpha: OmegaPoly, beta: OmegaPoly, n: usize) -> Self {
        Self { shift: 0, alpha, beta, n }
    }
}

pub fn hankel_matrix(spec: &HankelSpec) -> Result<SquareMatrix> {
    if spec.shift > 2 {
        return Err(Error::InvalidParameter(format!("shift must be 0, 1 or 2, got {}", spec.shift)));
    }
    if spec.alpha.is_zero() && spec.beta.is_zero() {
        return Err(Error::InvalidParameter("alpha and beta cannot both be zero".into()));
    }
    let mu = motzkin_series(2 * spec.n + spec.shift);
    let at = |k: usize| if k <= mu.order() { mu.coeff(k).clone() } else { OmegaPoly::zero() };
    Ok(SquareMatrix::from_fn(spec.n, |i, j| {
        let k = i + j + spec.shift;
        &spec.alpha * at(k) + &spec.beta * at(k + 1)
    }))
}

/// `det(alpha M_{i+j} + beta M_{i+j+1})_{n x n} = sum_i (-beta)^{n-i} alpha^i m_{n,i}`.
pub fn shifted_hankel_closed(n: usize, alpha: &OmegaPoly, beta: &OmegaPoly) -> OmegaPoly {
    let neg_beta = -beta;
    (0..=n)
        .map(|i| {
            let m = inverse_motzkin_entry(n, i).expect("i <= n");
            &(&neg_beta.pow((n - i) as u32) * &alpha.pow(i as u32)) * &m
        })
        .sum()
}

/// The same determinant as `sum_k C(n-k, k) (-1)^k beta^{2k} (alpha + beta w)^{n-2k}`.
pub fn hankel_binomial_form(n: usize, alpha: &OmegaPoly, beta: &OmegaPoly) -> OmegaPoly {
    let shifted = alpha + &(beta * &OmegaPoly::omega());
    (0..=n / 2)
        .map(|k| {
            let c = binomial((n - k) as i64, k as i64);
            let c = if k % 2 == 0 { c } else { -c };
            (&beta.pow(2 * k as u32) * &shifted.pow((n - 2 * k) as u32)).scale(&c)
        })
        .sum()
}

/// `det(M_{i+j+1})_{n x n} = sum_k C(n-k, k) (-1)^k w^{n-2k}`.
pub fn second_hankel_closed(n: usize) -> OmegaPoly {
    (0..=n / 2)
        .map(|k| {
            let c = binomial((n - k) as i64, k as i64);
            OmegaPoly::monomial(if k % 2 == 0 { c } else { -c }, n - 2 * k)
        })
        .sum()
}

/// `det(M_{i+j+2})_{n x n}`, unrolled from the recursion
/// `|M_{i+j+2}|_n = |M_{i+j+2}|_{n-1} + |M_{i+j+1}|_n^2`.
pub fn third_hankel_closed(n: usize) -> OmegaPoly {
    (0..=n).map(|r| second_hankel_closed(r).pow(2)).sum()
}

/// Closed-form value for the determinant described by `spec`, when one is known.
pub fn hankel_closed(spec: &HankelSpec) -> Option<OmegaPoly> {
    let pure = spec.alpha.is_one() && spec.beta.is_zero();
    match spec.shift {
        0 => Some(shifted_hankel_closed(spec.n, &spec.alpha, &spec.beta)),
        1 if pure => Some(second_hankel_closed(spec.n)),
        2 if pure => Some(third_hankel_closed(spec.n)),
        _ => None,
    }
}

/// `|M_{i+j+2}|_n = |M_{i+j+2}|_{n-1} + |M_{i+j+1}|_n^2`, with determinants
/// taken by elimination.
pub fn hankel_recursion_check(n: usize) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    let det = |shift: usize, dim: usize| det_fraction_free(&hankel_matrix(&HankelSpec::shifted(shift, dim))?);
    let lhs = det(2, n)?;
    let rhs = det(2, n - 1)? + det(1, n)?.pow(2);
    Ok(expect_eq("Hankel recursion", || format!("n = {n}"), &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn c(v: i64) -> OmegaPoly {
        OmegaPoly::constant(v)
    }

    #[test]
    fn small_determinants() {
        let id = SquareMatrix::from_fn(4, |i, j| if i == j { c(1) } else { c(0) });
        assert!(det_fraction_free(&id).unwrap().is_one());
        assert!(det_fraction_free(&SquareMatrix::from_ints(&[&[1, 2], &[2, 4]])).unwrap().is_zero());
        let h = SquareMatrix::from_ints(&[&[1, 1, 2], &[1, 2, 4], &[2, 4, 9]]);
        assert!(det_fraction_free(&h).unwrap().is_one());
        assert!(det_fraction_free(&SquareMatrix::from_fn(0, |_, _| c(0))).unwrap().is_one());
    }

    #[test]
    fn zero_pivot_swaps_rows() {
        let m = SquareMatrix::from_ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
        assert_eq!(det_fraction_free(&m).unwrap(), c(-2));
        let singular = SquareMatrix::from_ints(&[&[0, 1], &[0, 5]]);
        assert!(det_fraction_free(&singular).unwrap().is_zero());
    }

    #[test]
    fn hankel_matrices() {
        let one = BigInt::from(1);
        let h = hankel_matrix(&HankelSpec::shifted(0, 3)).unwrap().specialize(&one);
        assert_eq!(h, SquareMatrix::from_ints(&[&[1, 1, 2], &[1, 2, 4], &[2, 4, 9]]));
        let h = hankel_matrix(&HankelSpec::combination(c(1), c(1), 2)).unwrap().specialize(&one);
        assert_eq!(h, SquareMatrix::from_ints(&[&[2, 3], &[3, 6]]));
        let h = hankel_matrix(&HankelSpec::shifted(1, 1)).unwrap();
        assert_eq!(h.get(0, 0), &OmegaPoly::omega());
        assert!(hankel_matrix(&HankelSpec::shifted(3, 2)).is_err());
        assert!(hankel_matrix(&HankelSpec::combination(c(0), c(0), 2)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        for n in 0..8 {
            assert!(shifted_hankel_closed(n, &c(1), &c(0)).is_one());
        }
        assert_eq!(shifted_hankel_closed(2, &c(1), &c(1)).eval_i64(1), BigInt::from(3));
        assert_eq!(shifted_hankel_closed(3, &c(0), &c(1)).eval_i64(1), BigInt::from(-1));
        assert!(second_hankel_closed(0).is_one());
        let at1: Vec<BigInt> = (1..=6).map(|n| second_hankel_closed(n).eval_i64(1)).collect();
        assert_eq!(at1, [1, 0, -1, -1, 0, 1].map(BigInt::from));
        assert_eq!(second_hankel_closed(2), OmegaPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn dyck_specialization_is_periodic() {
        // w = 0, alpha = beta = 1 gives 1, 1, 0, -1, -1, 0, ... rather than delta_{0,n}
        let vals: Vec<BigInt> = (0..12).map(|n| shifted_hankel_closed(n, &c(1), &c(1)).eval_i64(0)).collect();
        let pattern = [1, 1, 0, -1, -1, 0];
        assert_eq!(vals, pattern.iter().cycle().take(12).map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        let det = det_fraction_free(&hankel_matrix(&HankelSpec::combination(c(1), c(1), 2)).unwrap().specialize(&BigInt::from(0))).unwrap();
        assert_eq!(det, c(0));
    }

    #[test]
    fn recursion_small_cases() {
        assert_eq!(hankel_recursion_check(1).unwrap(), Ok(()));
        assert_eq!(hankel_recursion_check(2).unwrap(), Ok(()));
        assert!(hankel_recursion_check(0).is_err());
        let h = hankel_matrix(&HankelSpec::shifted(2, 2)).unwrap().specialize(&BigInt::from(1));
        assert_eq!(det_fraction_free(&h).unwrap(), c(2));
    }
}
