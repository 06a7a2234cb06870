use num_bigint::BigUint;
use num_traits::One;

use super::BigCount;

/// Tilings of the order-`n` Aztec diamond, `2^(n(n+1)/2)`.
pub fn aztec_closed_form(n: u32) -> BigCount {
    let exp = n as u64 * (n as u64 + 1) / 2;
    BigCount(BigUint::one() << exp)
}

/// Central Delannoy number `D(n, n) = Σ_k C(n,k)·C(n+k,k)`.
pub fn delannoy_closed_form(n: u32) -> BigCount {
    let n = n as u64;
    let total = (0..=n).map(|k| binomial(n, k) * binomial(n + k, k)).sum();
    BigCount(total)
}

/// Exact binomial coefficient; each partial product is itself a binomial, so
/// the division is exact at every step.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
