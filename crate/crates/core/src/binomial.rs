//! Exact integer binomials and the two counting bounds on semigroups of a
//! given genus.

use num_integer::gcd;

/// `n choose k`, or `None` if the result does not fit in a `u64`.
///
/// Uses the multiplicative formula, cancelling the divisor against the
/// running product before each multiplication so that intermediates never
/// exceed the final value by more than a factor of `k`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i.
        let num = n - k + i;
        let g = gcd(acc, i);
        let (acc_red, den) = (acc / g, i / g);
        debug_assert_eq!(num % den, 0);
        acc = acc_red.checked_mul(num / den)?;
    }
    Some(acc)
}

/// The Catalan number `C_n = binom(2n, n) / (n + 1)`, the number of Dyck paths
/// of order `n`.
pub fn catalan(n: u64) -> Option<u64> {
    let c = binomial(2 * n, n)?;
    Some(c / (n + 1))
}

/// `binom(g - 1, ceil((g - 1) / 2))`, the bound on symmetric semigroups of
/// genus `g`.
///
/// For `g = 0` this is `binom(-1, 0) = 1` under the generalized binomial.
pub fn central_binomial_bound(genus: u64) -> Option<u64> {
    if genus == 0 {
        return Some(1);
    }
    let m = genus - 1;
    binomial(m, m.div_ceil(2))
}
