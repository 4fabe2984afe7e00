//! Integer helpers: primality, p-adic valuations, binomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of the largest power of `p` dividing `m`.
pub fn nu_p(p: u64, m: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::invalid("valuation of 0 is undefined"));
    }
    let mut m = m;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    Ok(e)
}

/// Distinct prime divisors of `m`, ascending.
pub fn prime_divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = m;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Prime-power decomposition `[(p, e)]` of `m >= 1`.
pub fn factorize(m: u64) -> Vec<(u64, u32)> {
    prime_divisors(m)
        .into_iter()
        .map(|p| (p, nu_p(p, m).expect("p is a prime divisor")))
        .collect()
}

/// `C(k, j) mod 2` by Lucas: odd iff the bits of `j` are a subset of those of `k`.
pub fn binom_mod2(k: u64, j: u64) -> u8 {
    u8::from(j & !k == 0)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k) mod 2` for possibly negative `n`, with `C(n, k) = 0` whenever `k < 0`
/// or `n < k` for `n >= 0`; negative `n` never occurs in the Adem range used here.
pub fn binom_mod2_signed(n: i64, k: i64) -> u8 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    binom_mod2(n as u64, k as u64)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` modulo prime `p`, if it exists.
pub fn inv_mod(a: i128, p: u64) -> Option<u64> {
    let p = p as i128;
    let a = a.rem_euclid(p);
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p, a);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(p) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(nu_p(2, 48).unwrap(), 4);
        assert_eq!(nu_p(3, 7).unwrap(), 0);
        assert_eq!(nu_p(5, 125).unwrap(), 3);
        assert!(nu_p(4, 16).is_err());
        assert!(nu_p(2, 0).is_err());
    }

    #[test]
    fn valuation_is_additive() {
        for p in [2u64, 3, 5, 7] {
            for a in (1..=10_000u64).step_by(97) {
                for b in (1..=10_000u64).step_by(131) {
                    assert_eq!(
                        nu_p(p, a * b).unwrap(),
                        nu_p(p, a).unwrap() + nu_p(p, b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        for n in 0..40u64 {
            for k in 0..=n {
                let exact = binomial(n, k) % 2;
                assert_eq!(BigInt::from(binom_mod2(n, k)), exact, "C({n},{k})");
            }
        }
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(97), vec![97]);
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(-1, 5), Some(4));
        assert_eq!(inv_mod(10, 5), None);
    }
}
