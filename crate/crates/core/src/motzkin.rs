//! Motzkin paths: generating functions, the Riordan matrices `M` and `G`,
//! the inverse matrix `(m_{i,j})` and banded generating functions.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{binomial, one_minus_omega_t, OmegaPoly, RationalGF, TPoly, TSeries};
use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::oracle::{CountTable, Mode, PathSpec};
use crate::verify::{expect_eq, Verdict};

/// Unique series `mu = 1 + w t^step mu + t^2 mu^2`, by coefficient recursion.
pub(crate) fn fixed_point_series(step: usize, order: usize) -> TSeries {
    let omega = OmegaPoly::omega();
    let mut c: Vec<OmegaPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = if n == 0 { OmegaPoly::one() } else { OmegaPoly::zero() };
        if n >= step {
            acc += &(&omega * &c[n - step]);
        }
        if n >= 2 {
            for i in 0..=n - 2 {
                acc += &(&c[i] * &c[n - 2 - i]);
            }
        }
        c.push(acc);
    }
    TSeries::new(c, order)
}

/// `mu(t) = sum M_{n;w} t^n`.
pub fn motzkin_series(order: usize) -> TSeries {
    fixed_point_series(1, order)
}

/// `g(t) = 1 / sqrt((1 - w t)^2 - 4 t^2)`, computed as `1 / (1 - w t - 2 t^2 mu)`.
pub fn grand_motzkin_series(order: usize) -> TSeries {
    let mu = motzkin_series(order);
    let root = &TSeries::from_poly(&one_minus_omega_t(1), order) - &mu.shift(2).scale(&2.into());
    root.inv().expect("constant term is 1")
}

/// `(M(i, j; w))` for `0 <= i, j < n`.
pub fn motzkin_matrix(n: usize) -> TriMatrix {
    table_matrix(PathSpec::motzkin(), n)
}

/// `(G(i, j; w))` for `0 <= i, j < n`, nonnegative heights only.
pub fn grand_matrix(n: usize) -> TriMatrix {
    table_matrix(PathSpec::grand_motzkin(), n)
}

fn table_matrix(spec: PathSpec, n: usize) -> TriMatrix {
    let table = CountTable::build(spec, n.saturating_sub(1));
    TriMatrix::from_fn(n, |i, j| table.get(i, j as i64).expect("height in range"))
}

/// `sum_n M(n + j, j) t^n = mu^{j+1}`.
pub fn motzkin_column_gf(j: usize, order: usize) -> TSeries {
    motzkin_series(order).pow(j as u32 + 1)
}

/// `sum_n G(n, j) t^n = g (t mu)^j`.
pub fn grand_column_gf(j: usize, order: usize) -> TSeries {
    let t_mu = motzkin_series(order).shift(1);
    &grand_motzkin_series(order) * &t_mu.pow(j as u32)
}

/// `M_{n;w} = sum_k C(n, 2k) w^{n-2k} C_k`.
pub fn motzkin_closed(n: usize) -> OmegaPoly {
    (0..=n / 2)
        .map(|k| OmegaPoly::monomial(binomial(n as i64, 2 * k as i64) * catalan(k), n - 2 * k))
        .sum()
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// `M_{n;1}` as the alternating binomial transform of `C_{k+1}`.
pub fn motzkin_from_catalan(n: usize) -> BigInt {
    (0..=n)
        .map(|k| {
            let term = binomial(n as i64, k as i64) * catalan(k + 1);
            if (n - k).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn signed_power_of_neg_omega(e: usize) -> OmegaPoly {
    OmegaPoly::monomial(if e.is_multiple_of(2) { 1 } else { -1 }, e)
}

/// `m_{i,j}` from the Gegenbauer double-binomial sum.
pub fn inverse_motzkin_entry(i: usize, j: usize) -> Result<OmegaPoly> {
    if j > i {
        return Err(Error::IndexOutOfTriangle { row: i, col: j });
    }
    let d = i - j;
    Ok((0..=d / 2)
        .map(|l| {
            let c = binomial((i - l) as i64, (d - l) as i64) * binomial((d - l) as i64, l as i64);
            let c = if l % 2 == 0 { c } else { -c };
            signed_power_of_neg_omega(d - 2 * l).scale(&c)
        })
        .sum())
}

/// Column `j` of the inverse, rows `j..=max_row`, by the three-term recurrence
/// `(i - j) m_{i,j} = -w i m_{i-1,j} - (i + j) m_{i-2,j}`.
pub fn inverse_motzkin_column_rec(j: usize, max_row: usize) -> Result<Vec<OmegaPoly>> {
    let omega = OmegaPoly::omega();
    // entries for rows j-2, j-1, j, ...
    let mut col = vec![OmegaPoly::zero(), OmegaPoly::zero(), OmegaPoly::one()];
    for i in j + 1..=max_row {
        let k = i - j + 2;
        let rhs = -(&(&omega * &col[k - 1]).scale(&BigInt::from(i)) + &col[k - 2].scale(&BigInt::from(i + j)));
        let entry = rhs
            .div_exact_scalar(&BigInt::from(i - j))
            .map_err(|_| Error::InexactDivision(format!("inverse Motzkin recurrence at ({i}, {j})")))?;
        col.push(entry);
    }
    Ok(col.split_off(2))
}

/// `m_{i,j}` by the recurrence.
pub fn inverse_motzkin_entry_rec(i: usize, j: usize) -> Result<OmegaPoly> {
    if j > i {
        return Err(Error::IndexOutOfTriangle { row: i, col: j });
    }
    Ok(inverse_motzkin_column_rec(j, i)?.pop().expect("column has at least one entry"))
}

/// Triangular inverse of [`motzkin_matrix`].
pub fn inverse_motzkin_matrix(n: usize) -> TriMatrix {
    motzkin_matrix(n).inverse().expect("unit diagonal")
}

/// `m_k(t) = sum_l C(k - l, l) (-1)^l t^{2l} (1 - w t)^{k - 2l}`.
pub fn inverse_motzkin_poly(k: usize) -> TPoly {
    fibonacci_like_poly(k, &one_minus_omega_t(1), 2)
}

/// `sum_l C(n - l, l) (-1)^l t^{gap l} base^{n - 2l}`; shared by the inverse
/// Motzkin polynomials and the normalized `p_n` of step-`w` paths.
pub(crate) fn fibonacci_like_poly(n: usize, base: &TPoly, gap: usize) -> TPoly {
    (0..=n / 2)
        .map(|l| {
            let c = binomial((n - l) as i64, l as i64);
            let c = if l % 2 == 0 { c } else { -c };
            base.pow((n - 2 * l) as u32).shift(gap * l).scale(&OmegaPoly::constant(c))
        })
        .fold(TPoly::zero(), |acc, x| acc + x)
}

/// Both halves of the lemma linking `M(i, j)`, `m_{i,j}` and `M_{n;w}`:
/// `M(i, j) = sum_{k <= j} m_{j,k} M_{i+k}` and
/// `m_{i,j} = sum_{k <= i-j} m_{i+1, j+1+k} M_k`.
pub fn verify_lemma(i: usize, j: usize) -> Verdict {
    let table = CountTable::build(PathSpec::motzkin(), i + j + 1);
    let m = |r: usize, c: usize| inverse_motzkin_entry(r, c).unwrap_or_default();
    let big_m = |n: usize| table.get(n, 0).expect("quadrant");

    let lhs = table.get(i, j as i64).expect("quadrant");
    let rhs: OmegaPoly = (0..=j).map(|k| &m(j, k) * &big_m(i + k)).sum();
    expect_eq("lemma: M(i,j) = sum m_{j,k} M_{i+k}", || format!("(i, j) = ({i}, {j})"), &lhs, &rhs)?;

    let lhs = m(i, j);
    let rhs: OmegaPoly = if j <= i {
        (0..=i - j).map(|k| &m(i + 1, j + 1 + k) * &big_m(k)).sum()
    } else {
        OmegaPoly::zero()
    };
    expect_eq("lemma: m_{i,j} = sum m_{i+1,j+1+k} M_k", || format!("(i, j) = ({i}, {j})"), &lhs, &rhs)
}

/// `sum_{k <= j} m_{j,k} M_{i+k} = delta_{i,j}` for `0 <= i <= j <= max`.
pub fn orthogonality_check(max: usize) -> Verdict {
    let mu = motzkin_series(2 * max);
    for j in 0..=max {
        let row: Vec<OmegaPoly> = (0..=j).map(|k| inverse_motzkin_entry(j, k).expect("k <= j")).collect();
        for i in 0..=j {
            let sum: OmegaPoly = row.iter().enumerate().map(|(k, m)| m * mu.coeff(i + k)).sum();
            let delta = if i == j { OmegaPoly::one() } else { OmegaPoly::zero() };
            expect_eq("orthogonality", || format!("(i, j) = ({i}, {j})"), &delta, &sum)?;
        }
    }
    Ok(())
}

/// Generating function of paths confined to `0 <= y < k`, ending at `level`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandedGF {
    pub k: usize,
    pub level: usize,
    pub gf: RationalGF,
}

/// `sum_n M^{(k)}_{n;w} t^n = m_{k-1}(t) / m_k(t)`.
pub fn banded_motzkin_gf(k: usize) -> Result<BandedGF> {
    if k == 0 {
        return Err(Error::InvalidParameter("band height k must be at least 1".into()));
    }
    let gf = RationalGF::new(inverse_motzkin_poly(k - 1), inverse_motzkin_poly(k))?;
    Ok(BandedGF { k, level: 0, gf })
}

/// The linear recursion equivalent to the banded generating function, checked
/// against oracle counts for `n <= horizon`.
pub fn banded_motzkin_recursion_check(k: usize, horizon: usize) -> Result<Verdict> {
    let spec = PathSpec::new(1, Mode::Banded(k))?;
    let counts = CountTable::build(spec, horizon).series(0)?;
    let m_k: Vec<OmegaPoly> = (0..=k).map(|i| inverse_motzkin_entry(k, i).expect("i <= k")).collect();
    for n in 0..=horizon {
        let terms = n.min(k);
        let sum: OmegaPoly = (0..=terms).map(|j| counts.coeff(n - j) * &m_k[k - j]).sum();
        let expected = if n >= k {
            OmegaPoly::zero()
        } else {
            inverse_motzkin_entry(k - 1, k - 1 - n).expect("in triangle")
        };
        if let Err(e) = expect_eq("banded Motzkin recursion", || format!("k = {k}, n = {n}"), &expected, &sum) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(()))
}

/// `M_{n+2} - w M_{n+1} = sum_i M_i M_{n-i}` for `n <= horizon`.
pub fn first_return_check(horizon: usize) -> Verdict {
    let mu = motzkin_series(horizon + 2);
    let omega = OmegaPoly::omega();
    for n in 0..=horizon {
        let lhs = mu.coeff(n + 2) - &omega * mu.coeff(n + 1);
        let rhs: OmegaPoly = (0..=n).map(|i| mu.coeff(i) * mu.coeff(n - i)).sum();
        expect_eq("first return decomposition", || format!("n = {n}"), &lhs, &rhs)?;
    }
    Ok(())
}

/// `T(n+1, j+1) = T(n, j) + w T(n, j+1) + T(n, j+2)` on every interior cell.
pub fn riordan_recurrence_check(t: &TriMatrix) -> Verdict {
    let omega = OmegaPoly::omega();
    for n in 0..t.dim().saturating_sub(1) {
        for j in 0..=n {
            let rhs = t.get(n, j) + &omega * t.get(n, j + 1) + t.get(n, j + 2);
            expect_eq("Riordan recurrence", || format!("(n, j) = ({n}, {j})"), &t.get(n + 1, j + 1), &rhs)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};

    use super::*;

    fn p(c: &[i64]) -> OmegaPoly {
        OmegaPoly::from_i64s(c)
    }

    fn at1(s: &TSeries) -> Vec<i64> {
        s.eval(&BigInt::one()).iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn motzkin_series_symbolic_row() {
        let mu = motzkin_series(5);
        let expected = [
            p(&[1]),
            p(&[0, 1]),
            p(&[1, 0, 1]),
            p(&[0, 3, 0, 1]),
            p(&[2, 0, 6, 0, 1]),
            p(&[0, 10, 0, 10, 0, 1]),
        ];
        assert_eq!(mu.coeffs(), &expected);
    }

    #[test]
    fn catalan_specializations() {
        let mu = motzkin_series(8);
        let at0: Vec<BigInt> = mu.eval(&BigInt::zero());
        let even: Vec<BigInt> = at0.iter().step_by(2).cloned().collect();
        assert_eq!(even, [1, 1, 2, 5, 14].map(BigInt::from).to_vec());
        let at2 = mu.eval(&BigInt::from(2));
        assert_eq!(at2[..5], [1, 2, 5, 14, 42].map(BigInt::from));
    }

    #[test]
    fn grand_series() {
        let g = grand_motzkin_series(4);
        assert_eq!(
            g.coeffs(),
            &[p(&[1]), p(&[0, 1]), p(&[2, 0, 1]), p(&[0, 6, 0, 1]), p(&[6, 0, 12, 0, 1])]
        );
        assert_eq!(g.eval(&BigInt::zero()), [1, 0, 2, 0, 6].map(BigInt::from).to_vec());
        assert_eq!(g.eval(&BigInt::from(2)), [1, 2, 6, 20, 70].map(BigInt::from).to_vec());
    }

    #[test]
    fn matrices() {
        let m = motzkin_matrix(5).specialize(&BigInt::one());
        let rows: Vec<Vec<i64>> = vec![vec![1], vec![1, 1], vec![2, 2, 1], vec![4, 5, 3, 1], vec![9, 12, 9, 4, 1]];
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                assert_eq!(m.get(i, j), OmegaPoly::constant(v));
            }
        }
        assert_eq!(motzkin_matrix(4).get(3, 1), p(&[2, 0, 3]));
        let g = grand_matrix(7);
        assert_eq!(
            g.rows()[4],
            vec![p(&[6, 0, 12, 0, 1]), p(&[0, 12, 0, 4]), p(&[4, 0, 6]), p(&[0, 4]), p(&[1])]
        );
        assert_eq!(g.get(6, 1), p(&[0, 60, 0, 60, 0, 6]));
        assert!(riordan_recurrence_check(&g).is_ok());
        assert!(riordan_recurrence_check(&motzkin_matrix(8)).is_ok());
    }

    #[test]
    fn column_gfs() {
        assert_eq!(motzkin_column_gf(0, 6), motzkin_series(6));
        assert_eq!(motzkin_column_gf(1, 4).coeff(2).eval_i64(1), BigInt::from(5));
        assert!(motzkin_column_gf(2, 3).coeff(0).is_one());
        assert_eq!(grand_column_gf(0, 6), grand_motzkin_series(6));
        assert_eq!(grand_column_gf(1, 5).coeff(3), &p(&[3, 0, 3]));
        assert_eq!(grand_column_gf(2, 5).coeff(5).eval_i64(1), BigInt::from(30));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(motzkin_closed(4), p(&[2, 0, 6, 0, 1]));
        assert!(motzkin_closed(0).is_one());
        assert_eq!(motzkin_closed(5).eval_i64(1), BigInt::from(21));
        assert_eq!((0..6).map(catalan).collect::<Vec<_>>(), [1, 1, 2, 5, 14, 42].map(BigInt::from));
        assert_eq!(motzkin_from_catalan(0), BigInt::one());
        assert_eq!(motzkin_from_catalan(2), BigInt::from(2));
        assert_eq!(motzkin_from_catalan(7), BigInt::from(127));
    }

    #[test]
    fn inverse_entries() {
        assert_eq!(inverse_motzkin_entry(4, 0).unwrap().eval_i64(1), BigInt::from(-1));
        assert_eq!(inverse_motzkin_entry(3, 2).unwrap().eval_i64(1), BigInt::from(-3));
        assert!(inverse_motzkin_entry(6, 6).unwrap().is_one());
        assert!(matches!(inverse_motzkin_entry(1, 2), Err(Error::IndexOutOfTriangle { .. })));
        assert!(inverse_motzkin_entry_rec(2, 0).unwrap().eval_i64(1).is_zero());
        assert!(inverse_motzkin_entry_rec(5, 5).unwrap().is_one());
        assert_eq!(inverse_motzkin_entry_rec(4, 1).unwrap().eval_i64(1), BigInt::from(2));
        assert!(inverse_motzkin_entry_rec(0, 1).is_err());
    }

    #[test]
    fn inverse_matrix_display() {
        let inv = inverse_motzkin_matrix(5).specialize(&BigInt::one());
        let rows: Vec<Vec<i64>> = vec![vec![1], vec![-1, 1], vec![0, -2, 1], vec![1, 1, -3, 1], vec![-1, 2, 3, -4, 1]];
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(inv.rows()[i], r.iter().map(|&v| OmegaPoly::constant(v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn column_zero_is_chebyshev() {
        let n = 12;
        let phi = TSeries::from_poly(&TPoly::from_coeffs(vec![p(&[1]), p(&[0, 1]), p(&[1])]), n - 1);
        let inv = phi.inv().unwrap();
        assert_eq!(inverse_motzkin_matrix(n).column(0), inv.coeffs());
    }

    #[test]
    fn inverse_polynomials() {
        assert_eq!(inverse_motzkin_poly(4).specialize(&BigInt::one()), TPoly::from_ints(&[1, -4, 3, 2, -1]));
        assert_eq!(inverse_motzkin_poly(3).specialize(&BigInt::one()), TPoly::from_ints(&[1, -3, 1, 1]));
        assert_eq!(inverse_motzkin_poly(0), TPoly::one());
        for k in 0..10 {
            let rows = TPoly::from_coeffs((0..=k).map(|j| inverse_motzkin_entry(k, k - j).unwrap()).collect());
            assert_eq!(inverse_motzkin_poly(k), rows);
        }
    }

    #[test]
    fn lemma_and_orthogonality() {
        assert!(verify_lemma(0, 0).is_ok());
        for i in 0..=6 {
            for j in 0..=6 {
                assert_eq!(verify_lemma(i, j), Ok(()));
            }
        }
        assert!(orthogonality_check(8).is_ok());
    }

    #[test]
    fn banded_examples() {
        let at1 = |k: usize, n: usize| at1(&banded_motzkin_gf(k).unwrap().gf.expand(n));
        assert_eq!(at1(1, 3), vec![1, 1, 1, 1]);
        assert_eq!(at1(2, 6), vec![1, 1, 2, 4, 8, 16, 32]);
        assert_eq!(at1(3, 7), vec![1, 1, 2, 4, 9, 21, 50, 120]);
        assert!(banded_motzkin_gf(0).is_err());
    }

    #[test]
    fn recursions() {
        assert_eq!(banded_motzkin_recursion_check(1, 10).unwrap(), Ok(()));
        assert_eq!(banded_motzkin_recursion_check(4, 20).unwrap(), Ok(()));
        assert_eq!(first_return_check(12), Ok(()));
    }
}
