//! Exact combinatorial scalars: binomials, factorials, odd double
//! factorials, Catalan numbers, and the `0^n` convention (`0^0 = 1`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// `(2k-1)!! = 1 * 3 * ... * (2k-1)`, with `(-1)!! = 1` at `k = 0`.
pub fn odd_double_factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= BigInt::from(2 * i - 1);
    }
    acc
}

/// `0^n` with the convention `0^0 = 1`.
pub fn zero_pow(n: u64) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Catalan number `C_n = C(2n, n) / (n + 1)` (exact division).
pub fn catalan(n: u64) -> BigInt {
    binom(2 * n, n) / BigInt::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_values() {
        assert_eq!(binom(6, 2), BigInt::from(15));
        assert_eq!(binom(6, 0), BigInt::one());
        assert_eq!(binom(3, 5), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        // Pascal recurrence on a block of values.
        for n in 1..20u64 {
            for k in 1..=n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(odd_double_factorial(0), BigInt::one());
        assert_eq!(odd_double_factorial(1), BigInt::one());
        assert_eq!(odd_double_factorial(3), BigInt::from(15));
        assert_eq!(odd_double_factorial(5), BigInt::from(945));
    }

    #[test]
    fn zero_pow_convention() {
        assert_eq!(zero_pow(0), BigInt::one());
        assert_eq!(zero_pow(3), BigInt::zero());
    }

    #[test]
    fn catalan_values() {
        let want = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, c) in want.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigInt::from(*c));
        }
    }
}
