//! Binomial, Catalan and Narayana numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// Noncrossing partitions of `{1..n}` with `k` blocks.
pub fn narayana(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if k == 0 {
        return BigInt::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cat: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14, 42, 132, 429].map(BigInt::from));
        let row: Vec<BigInt> = (1..=5).map(|k| narayana(5, k)).collect();
        assert_eq!(row, [1, 10, 20, 10, 1].map(BigInt::from));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn catalan_matches_its_recurrence() {
        for n in 1..30 {
            let s: BigInt = (0..n).map(|k| catalan(k) * catalan(n - 1 - k)).sum();
            assert_eq!(s, catalan(n));
        }
    }
}
