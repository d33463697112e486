use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)` for `n >= 0`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial `a (a-1) ... (a-k+1) / k!` for rational `a`.
pub fn binom_general(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= a - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn integer_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn half_integer_binomials() {
        assert_eq!(binom_general(&q(1, 2), 1), q(1, 2));
        assert_eq!(binom_general(&q(3, 2), 2), q(3, 8));
        assert_eq!(binom_general(&q(7, 3), 0), q(1, 1));
        for n in 0..12 {
            for k in 0..14 {
                assert_eq!(
                    binom_general(&q(n, 1), k as u32),
                    BigRational::from_integer(binomial(n, k))
                );
            }
        }
    }
}
