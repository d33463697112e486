//! Paths with horizontal steps of length `w`, compressed Schröder numbers and
//! their inverse, Delannoy numbers and polynomials, and Schröder paths in a
//! band.
//!
//! Functions documented as "at `w = 1`" work with unit weight only; their
//! results carry constant coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{
    binom_general, binomial, one_minus_omega_t, LaurentSeries, OmegaPoly, Rational, RationalGF, TPoly,
    TSeries,
};
use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::motzkin::{fibonacci_like_poly, fixed_point_series};
use crate::oracle::{CountTable, Mode, PathSpec};
use crate::verify::{expect_eq, Mismatch, Verdict};

fn check_step(w: usize) -> Result<()> {
    if w == 0 {
        return Err(Error::InvalidParameter("horizontal step length w must be at least 1".into()));
    }
    Ok(())
}

fn check_band(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("band height k must be at least 1".into()));
    }
    Ok(())
}

fn unit() -> BigInt {
    BigInt::one()
}

/// `mu_w = 1 + w t^step mu_w + t^2 mu_w^2`; coefficient `n` counts quadrant
/// paths to `(n, 0)`.
pub fn w_series(w: usize, order: usize) -> Result<TSeries> {
    check_step(w)?;
    Ok(fixed_point_series(w, order))
}

/// The polynomial `t^n p_n(t) = sum_j C(n-j, j) (-1)^j t^{2j} (1 - w t^step)^{n-2j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPoly {
    pub n: usize,
    pub step: usize,
    pub poly: TPoly,
}

impl PPoly {
    /// `t^2 -> t`, defined when every power of `t` is even (even step).
    pub fn compressed(&self) -> Option<TPoly> {
        self.poly.compress()
    }
}

pub fn w_p_poly(n: usize, w: usize) -> Result<PPoly> {
    check_step(w)?;
    Ok(PPoly { n, step: w, poly: fibonacci_like_poly(n, &one_minus_omega_t(w), 2) })
}

/// `t^n p_n(t)` in compressed Schröder form:
/// `sum_j C(n-j, j) (-1)^j t^j (1 - w t)^{n-2j}`.
pub fn compressed_p_poly(n: usize) -> TPoly {
    fibonacci_like_poly(n, &one_minus_omega_t(1), 1)
}

fn normalized_p(n: i64, w: usize) -> TPoly {
    if n < 0 {
        TPoly::zero()
    } else {
        fibonacci_like_poly(n as usize, &one_minus_omega_t(w), 2)
    }
}

/// `t^{-2j} (base P_j - P_{j-1})` as a Laurent series through `t^order`,
/// where `P_n = t^n p_n`.
fn column_laurent(base: &TSeries, j: usize, w: usize, order: usize) -> LaurentSeries {
    let ord = order + 2 * j;
    let pj = TSeries::from_poly(&normalized_p(j as i64, w), ord);
    let pj1 = TSeries::from_poly(&normalized_p(j as i64 - 1, w), ord);
    let x = &(base * &pj) - &pj1;
    LaurentSeries::from_series(&x, -2 * j as i64)
}

/// `sum_n W(n + j, j) t^n`, from `mu_w p_j - p_{j-1} / t`.
///
/// That expression, as a series in `t`, has `W(n, j)` at `t^n`; this function
/// divides by `t^j` so that the first coefficient is the all-up path, matching
/// [`crate::motzkin::motzkin_column_gf`].
pub fn w_column_gf(j: usize, w: usize, order: usize) -> Result<TSeries> {
    let mu = w_series(w, order + 2 * j)?;
    Ok(column_laurent(&mu, j, w, order).split().1)
}

/// Banded analogue of [`w_column_gf`]: paths with `0 <= y < k` ending at height `j`.
pub fn banded_w_column_gf(k: usize, j: usize, w: usize, order: usize) -> Result<TSeries> {
    if j >= k {
        return Err(Error::BandViolation { j: j as i64, k });
    }
    let base = banded_w_gf(k, w)?.expand(order + 2 * j);
    Ok(column_laurent(&base, j, w, order).split().1)
}

/// `sum_n W^{(k)}_n t^n = p_{k-1} / (t p_k)`, as a ratio of the normalized polynomials.
pub fn banded_w_gf(k: usize, w: usize) -> Result<RationalGF> {
    check_band(k)?;
    check_step(w)?;
    RationalGF::new(normalized_p(k as i64 - 1, w), normalized_p(k as i64, w))
}

/// Entry `(i, j)` is the number of quadrant step-2 paths to `(2i - j, j)`.
pub fn schroder_matrix_compressed(n: usize) -> TriMatrix {
    let table = CountTable::build(PathSpec::schroder(), 2 * n.saturating_sub(1));
    TriMatrix::from_fn(n, |i, j| table.compressed(i, j).expect("j <= i"))
}

/// `s_{k,j} = (-1)^{k-j} sum_m C(k+1-2m, k-j-m) (j+1)/(k-m+1) C(k-m+1, m) w^{k-j-m}`.
pub fn inverse_schroder_entry(k: usize, j: usize) -> Result<OmegaPoly> {
    if j > k {
        return Err(Error::IndexOutOfTriangle { row: k, col: j });
    }
    let (ki, ji) = (k as i64, j as i64);
    let mut out = OmegaPoly::zero();
    for m in 0..=ki - ji {
        let num = BigInt::from(j + 1) * binomial(ki + 1 - 2 * m, ki - ji - m) * binomial(ki - m + 1, m);
        if num.is_zero() {
            continue;
        }
        let (q, r) = num.div_rem(&BigInt::from(ki - m + 1));
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("inverse Schröder term m = {m} at ({k}, {j})")));
        }
        out += &OmegaPoly::monomial(q, (ki - ji - m) as usize);
    }
    Ok(if (k - j).is_multiple_of(2) { out } else { -out })
}

/// `s_n(t) = sum_k s_{n,k} t^{n-k}`, assembled from the closed sum
/// `sum_m (t w m/(n-m+1) - 1) C(n-m+1, m) (-1)^{m+1} (1 - w t)^{n-2m} t^m`.
pub fn inverse_schroder_poly(n: usize) -> TPoly {
    let ni = n as i64;
    let base = one_minus_omega_t(1);
    let mut acc = TPoly::zero();
    for m in 0..=ni {
        // (t w m/(n-m+1) - 1) C(n-m+1, m) = C(n-m, m-1) w t - C(n-m+1, m)
        let lin = TPoly::from_coeffs(vec![
            OmegaPoly::constant(-binomial(ni - m + 1, m)),
            OmegaPoly::monomial(binomial(ni - m, m - 1), 1),
        ]);
        if lin.is_zero() {
            continue;
        }
        let e = ni - 2 * m;
        let body = if e >= 0 {
            &lin * &base.pow(e as u32)
        } else {
            lin.div_exact(&base.pow((-e) as u32)).expect("only e = -1 occurs, where 1 - w t divides")
        };
        let term = body.shift(m as usize);
        acc = if m % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// Triangular inverse of [`schroder_matrix_compressed`].
pub fn inverse_schroder_matrix(n: usize) -> TriMatrix {
    schroder_matrix_compressed(n).inverse().expect("unit diagonal")
}

/// Column `k` of the inverse at `w = 1`: `sum_n s_{n,k} t^n = t^k ((1-t)/(1+t))^{k+1}`.
pub fn inverse_schroder_column_gf(k: usize, order: usize) -> TSeries {
    let ratio = &TSeries::from_ints(&[1, -1], order) * &TSeries::from_ints(&[1, 1], order).inv().expect("unit");
    ratio.pow(k as u32 + 1).shift(k)
}

/// `D(n, k) = sum_l C(k, l) C(n+k-l, k) w^l`.
pub fn delannoy_number(n: usize, k: usize) -> OmegaPoly {
    let (n, k) = (n as i64, k as i64);
    (0..=n)
        .map(|l| OmegaPoly::monomial(binomial(k, l) * binomial(n + k - l, k), l as usize))
        .sum()
}

/// `d_k(t) = sum_l C(k-l, l) w^l t^l (1+t)^{k-2l}`.
pub fn delannoy_poly(k: usize) -> TPoly {
    let one_plus_t = TPoly::from_ints(&[1, 1]);
    (0..=k / 2)
        .map(|l| {
            let c = OmegaPoly::monomial(binomial((k - l) as i64, l as i64), l);
            one_plus_t.pow((k - 2 * l) as u32).shift(l).scale(&c)
        })
        .fold(TPoly::zero(), |acc, x| acc + x)
}

/// `sum_k d_k(t) x^k = 1 / (1 - x - t(x + w x^2))`, compared on every
/// monomial `x^k t^i` with `k + i <= max_degree`.
pub fn delannoy_gf_check(max_degree: usize) -> Verdict {
    let d: Vec<TPoly> = (0..=max_degree).map(delannoy_poly).collect();
    let one_plus_t = TPoly::from_ints(&[1, 1]);
    let omega_t = TPoly::monomial(OmegaPoly::omega(), 1);
    for k in 0..=max_degree {
        let mut residual = d[k].clone();
        if k >= 1 {
            residual = residual - &one_plus_t * &d[k - 1];
        }
        if k >= 2 {
            residual = residual - &omega_t * &d[k - 2];
        }
        for i in 0..=max_degree - k {
            let expected = if k == 0 && i == 0 { OmegaPoly::one() } else { OmegaPoly::zero() };
            expect_eq("Delannoy bivariate generating function", || format!("x^{k} t^{i}"), &expected, &residual.coeff(i))?;
        }
    }
    Ok(())
}

/// `d_k(-t)` at `w = 1`, with `d_k = 0` for negative `k`.
fn d_neg(k: i64) -> TPoly {
    if k < 0 {
        TPoly::zero()
    } else {
        delannoy_poly(k as usize).specialize(&unit()).substitute_neg_t()
    }
}

/// Banded compressed Schröder generating function at `w = 1`: `d_{k-1}(-t) / d_k(-t)`.
pub fn banded_schroder_gf(k: usize) -> Result<RationalGF> {
    check_band(k)?;
    RationalGF::new(d_neg(k as i64 - 1), d_neg(k as i64))
}

/// `(1 - t) sum_i (-1)^i t^{2i} s_{n-2i}(t) + (n mod 2) (-1)^{(n+1)/2} t^{n+1}` at `w = 1`;
/// equals `d_{n+1}(-t)`. `n = -1` gives `1`.
fn alternating_s_sum(n: i64) -> TPoly {
    let one_minus_t = TPoly::from_ints(&[1, -1]);
    let mut sum = TPoly::zero();
    let mut i = 0;
    while n - 2 * i >= 0 {
        let s = inverse_schroder_poly((n - 2 * i) as usize).specialize(&unit()).shift(2 * i as usize);
        sum = if i % 2 == 0 { sum + s } else { sum - s };
        i += 1;
    }
    let mut out = &one_minus_t * &sum;
    if n.rem_euclid(2) == 1 {
        let sign = if ((n + 1) / 2) % 2 == 0 { 1 } else { -1 };
        out = out + TPoly::monomial(OmegaPoly::constant(sign), (n + 1) as usize);
    }
    out
}

/// Banded compressed Schröder generating function at `w = 1`, assembled from
/// the inverse Schröder polynomials `s_n`.
pub fn banded_schroder_gf_via_s(k: usize) -> Result<RationalGF> {
    check_band(k)?;
    RationalGF::new(alternating_s_sum(k as i64 - 2), alternating_s_sum(k as i64 - 1))
}

/// Four polynomial identities at index `n`, all at `w = 1`:
/// `s_n = (t^2 d_{n-1}(-t) + d_{n+1}(-t)) / (1 - t)`,
/// `s_n = d_n(-t) - t d_{n-1}(-t)`,
/// `t^n p_n(t) = d_n(-t)` (compressed) and
/// `d_{n-1}(-t) = t d_{n-1}(-t) + t d_{n-2}(-t) + d_n(-t)`.
pub fn delannoy_s_bridge_check(n: usize) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::InvalidParameter("bridge identities need n >= 1".into()));
    }
    let ni = n as i64;
    let t = TPoly::monomial(OmegaPoly::one(), 1);
    let s_n = inverse_schroder_poly(n).specialize(&unit());

    let quotient = (&t.pow(2) * &d_neg(ni - 1) + d_neg(ni + 1)).div_exact(&TPoly::from_ints(&[1, -1]))?;
    let checks = [
        ("s_n = (t^2 d_{n-1}(-t) + d_{n+1}(-t)) / (1 - t)", s_n.clone(), quotient),
        ("s_n = d_n(-t) - t d_{n-1}(-t)", s_n, d_neg(ni) - &t * &d_neg(ni - 1)),
        ("t^n p_n = d_n(-t)", d_neg(ni), compressed_p_poly(n).specialize(&unit())),
        (
            "d_{n-1}(-t) = t d_{n-1}(-t) + t d_{n-2}(-t) + d_n(-t)",
            d_neg(ni - 1),
            &t * &d_neg(ni - 1) + &t * &d_neg(ni - 2) + d_neg(ni),
        ),
    ];
    for (name, lhs, rhs) in checks {
        if let Err(e) = expect_eq(name, || format!("n = {n}"), &lhs, &rhs) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(()))
}

/// Laurent expansion of `t^{-k} S^{(k)}(t) s_{k-1}(t)` at `w = 1`, split into parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub k: usize,
    pub principal: LaurentSeries,
    pub regular: TSeries,
}

/// Expands `t^{-k} S^{(k)}(t) s_{k-1}(t)` through `t^order` (`k >= 2`, `w = 1`).
pub fn theorem_schroeder(k: usize, order: usize) -> Result<TheoremReport> {
    if k < 2 {
        return Err(Error::InvalidParameter("the band theorem needs k >= 2".into()));
    }
    let ord = order + k;
    let banded = banded_schroder_gf(k)?.expand(ord);
    let s = TSeries::from_poly(&inverse_schroder_poly(k - 1).specialize(&unit()), ord);
    let (principal, regular) = LaurentSeries::from_series(&(&banded * &s), -(k as i64)).split();
    Ok(TheoremReport { k, principal, regular })
}

/// Compressed counts at `w = 1` of step-2 paths in `0 <= y < k` ending at
/// height `j`, for compressed lengths `0..=max_len`.
fn banded_compressed_counts(k: usize, j: usize, max_len: usize) -> Result<Vec<OmegaPoly>> {
    let spec = PathSpec::new(2, Mode::Banded(k))?;
    let table = CountTable::build(spec, (2 * max_len).saturating_sub(j));
    (0..=max_len)
        .map(|n| if n < j { Ok(OmegaPoly::zero()) } else { Ok(table.compressed(n, j)?.specialize(&unit())) })
        .collect()
}

/// Checks that the principal part of `t^{-k} S^{(k)} s_{k-1}` is `t^{-k} s_{k-2}(t)`
/// and that the coefficient of `t^n` in its regular part counts banded
/// compressed paths of length `n + k - 1` ending at height `k - 1`.
pub fn theorem_schroeder_check(k: usize, order: usize) -> Result<Verdict> {
    let report = theorem_schroeder(k, order)?;
    let s_prev = inverse_schroder_poly(k - 2).specialize(&unit());
    let expected_principal = LaurentSeries::new(-(k as i64), s_prev.coeffs().to_vec(), -1);
    if report.principal != expected_principal {
        return Ok(Err(Mismatch::new(
            "principal part equals t^{-k} s_{k-2}(t)",
            format!("k = {k}"),
            format_laurent(&expected_principal),
            format_laurent(&report.principal),
        )));
    }
    let counts = banded_compressed_counts(k, k - 1, order + k - 1)?;
    for n in 0..=order {
        let r = expect_eq(
            "regular part counts paths ending at height k-1",
            || format!("k = {k}, t^{n}"),
            &counts[n + k - 1],
            report.regular.coeff(n),
        );
        if r.is_err() {
            return Ok(r);
        }
    }
    Ok(Ok(()))
}

/// `S^{(k)}(t) s_{k-1}(t) - s_{k-2}(t) = sum_n B(n, k-1) t^{n+1}` through
/// `t^order`, where `B(n, j)` is the oracle's banded compressed count.
pub fn theorem_identity_check(k: usize, order: usize) -> Result<Verdict> {
    if k < 2 {
        return Err(Error::InvalidParameter("the band theorem needs k >= 2".into()));
    }
    let banded = banded_schroder_gf(k)?.expand(order);
    let s = TSeries::from_poly(&inverse_schroder_poly(k - 1).specialize(&unit()), order);
    let s_prev = TSeries::from_poly(&inverse_schroder_poly(k - 2).specialize(&unit()), order);
    let lhs = &(&banded * &s) - &s_prev;
    let counts = banded_compressed_counts(k, k - 1, order.saturating_sub(1))?;
    let rhs = TSeries::new(std::iter::once(OmegaPoly::zero()).chain(counts).collect(), order);
    for n in 0..=order {
        let r = expect_eq("S^(k) s_{k-1} - s_{k-2} = t B(t)", || format!("k = {k}, t^{n}"), rhs.coeff(n), lhs.coeff(n));
        if r.is_err() {
            return Ok(r);
        }
    }
    Ok(Ok(()))
}

/// Renders nonzero terms like `t^-4 - 4*t^-3 + 2*t^-2`.
pub fn format_laurent(x: &LaurentSeries) -> String {
    let terms = x.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) if c.as_constant().is_some() => (true, rest.to_string()),
            _ => (false, text),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = if *e == 0 { String::new() } else { format!("t^{e}") };
        match (mag.as_str(), power.is_empty()) {
            (_, true) => out.push_str(&mag),
            ("1", false) => out.push_str(&power),
            _ => out.push_str(&format!("{mag}*{power}")),
        }
    }
    out
}

/// `sum_l C(k+1, l) C(l/2, m) = (k+1)/(k-2m+1) C(k-m, m) 2^{k+1-2m}`, exactly.
pub fn gould_identity_check(k: usize, m: usize) -> Result<Verdict> {
    if 2 * m > k {
        return Err(Error::InvalidParameter(format!("need 2m <= k, got k = {k}, m = {m}")));
    }
    let lhs: Rational = (0..=k + 1)
        .map(|l| {
            let half = Rational::new(BigInt::from(l), BigInt::from(2));
            Rational::from_integer(binomial(k as i64 + 1, l as i64)) * binom_general(&half, m as u32)
        })
        .fold(Rational::zero(), |a, b| a + b);
    let rhs = Rational::new(BigInt::from(k + 1), BigInt::from(k - 2 * m + 1))
        * Rational::from_integer(binomial((k - m) as i64, m as i64) * (BigInt::one() << (k + 1 - 2 * m)));
    Ok(expect_eq("Gould-Carlitz binomial sum", || format!("k = {k}, m = {m}"), &lhs, &rhs))
}

/// `D(n, n+j) = w D(n-1, n-1+j) + D(n, n+j-1) + D(n-1, n+j)` for
/// `1 <= n <= horizon`, `0 <= j <= horizon`.
pub fn delannoy_recursion_check(horizon: usize) -> Verdict {
    let omega = OmegaPoly::omega();
    for n in 1..=horizon {
        for j in 0..=horizon {
            let lhs = delannoy_number(n, n + j);
            let rhs = &omega * delannoy_number(n - 1, n - 1 + j)
                + delannoy_number(n, n + j - 1)
                + delannoy_number(n - 1, n + j);
            expect_eq("Delannoy recursion", || format!("(n, j) = ({n}, {j})"), &lhs, &rhs)?;
        }
    }
    Ok(())
}
