use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(a, b)` with the convention `C(a, b) = 0` when `b < 0` or `a < b`.
///
/// Negative `a` also yields zero, which is the convention needed by the
/// counting formulas (an empty range of monomials).
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b < 0 || a < b || a < 0 {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// [`binomial`] as a signed integer.
pub fn binomial_i(a: i64, b: i64) -> BigInt {
    BigInt::from(binomial(a, b))
}

/// Number of monomials of degree exactly `d` in `k` variables.
pub(crate) fn count_degree_vars(k: usize, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    if k == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(d + k as i64 - 1, k as i64 - 1)
}

/// Number of monomials of degree at most `d` in `k` variables.
pub(crate) fn count_upto_vars(k: usize, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    binomial(d + k as i64, k as i64)
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}
