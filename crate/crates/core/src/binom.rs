//! Exact binomial coefficients and partial sums over arbitrary-precision
//! integers. These feed every closed-form parameter and rate computation.

use num::{BigUint, One, Zero};

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `sum_{i=lo}^{hi} C(n, i)` exactly; zero when the range is empty.
///
/// Uses the ratio recurrence `C(n, i+1) = C(n, i) * (n - i) / (i + 1)`, which
/// divides exactly at every step.
pub fn binomial_sum(n: u64, lo: u64, hi: u64) -> BigUint {
    if lo > hi || lo > n {
        return BigUint::zero();
    }
    let hi = hi.min(n);
    let mut term = binomial(n, lo);
    let mut sum = term.clone();
    for i in lo..hi {
        term = term * BigUint::from(n - i) / BigUint::from(i + 1);
        sum += &term;
    }
    sum
}

/// `2^e` exactly.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << usize::try_from(e).expect("exponent fits usize")
}
