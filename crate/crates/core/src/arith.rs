//! Small-integer number theory: primality, factorization, residue symbols.

use crate::error::{Error, Result};

/// A prime checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        Ok(Self(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `p^m` as a `u64`, or `None` on overflow.
pub fn checked_prime_power(p: u32, m: u32) -> Option<u64> {
    (p as u64).checked_pow(m)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime(p));
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// `(base/p)^m`: the quadratic character of `base` read in GF(p^m).
///
/// For `p = 2` every element of GF(2^m) is a square, so the value is 1 for odd
/// `base` and 0 for even `base`.
pub fn jacobi_symbol_power(base: i64, p: u32, m: u32) -> i32 {
    let p = p as u64;
    let symbol = if p == 2 {
        if base.rem_euclid(2) == 0 {
            0
        } else {
            1
        }
    } else {
        legendre(base, p)
    };
    if m.is_multiple_of(2) && symbol != 0 {
        1
    } else {
        symbol
    }
}

/// `(q/3)` for `q = p^m`, i.e. the Legendre symbol of `p` mod 3 raised to `m`.
pub fn q_over_three(p: u32, m: u32) -> i32 {
    match p % 3 {
        0 => 0,
        1 => 1,
        _ => {
            if m.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

/// `(-1)^m`.
pub fn sign_pow(m: u32) -> i32 {
    if m.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_below_fifty() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(PrimeModulus::new(9).is_err());
        assert_eq!(PrimeModulus::new(7).unwrap().get(), 7);
    }

    #[test]
    fn factor_small() {
        assert_eq!(prime_factors(24), vec![2, 3]);
        assert_eq!(prime_factors(7 * 7 * 7 - 1), vec![2, 3, 19]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn jacobi_matches_legendre_on_primes() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in -30i64..30 {
                assert_eq!(jacobi(a, p), legendre(a, p), "a={a} p={p}");
            }
        }
    }

    #[test]
    fn jacobi_fifteen_classes() {
        // (p/15) = -1 exactly for p = 7, 11, 13, 14 mod 15.
        for p in [7u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            let expect = if [7, 11, 13, 14].contains(&(p % 15)) {
                -1
            } else {
                1
            };
            assert_eq!(jacobi(p as i64, 15), expect, "p={p}");
        }
    }

    #[test]
    fn symbol_powers_from_examples() {
        assert_eq!(jacobi_symbol_power(-15, 7, 3), -1);
        assert_eq!(jacobi_symbol_power(5, 11, 1), 1);
        assert_eq!(jacobi_symbol_power(5, 7, 3), -1);
        assert_eq!(jacobi_symbol_power(-15, 11, 1), -1);
        assert_eq!(q_over_three(7, 3), 1);
        assert_eq!(q_over_three(11, 1), -1);
        for p in [5u32, 7, 11, 13] {
            for m in 1..5 {
                assert_eq!(jacobi_symbol_power(4, p, m), 1);
                assert_eq!(jacobi_symbol_power(9 * 4, p, m), if p == 3 { 0 } else { 1 });
            }
        }
        assert_eq!(jacobi_symbol_power(10, 5, 3), 0);
    }
}
