//! Dense polynomials over GF(p), coefficients stored low degree first.

use crate::arith::{pow_mod, prime_factors};

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo a nonzero polynomial `f`.
pub(crate) fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let f = trim(f.to_vec());
    assert!(!f.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    let p64 = p as u64;
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let factor = r[r.len() - 1] as u64 * lead_inv % p64;
        if factor != 0 {
            for (i, &c) in f.iter().enumerate() {
                let sub = factor * c as u64 % p64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), f, p)
}

fn powmod(base: &[u32], mut exp: u64, f: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    rem(&acc, f, p)
}

/// `x^(p^k) mod f`.
fn x_pow_p_pow(k: u32, f: &[u32], p: u32) -> Vec<u32> {
    let mut r = rem(&[0, 1], f, p);
    for _ in 0..k {
        r = powmod(&r, p as u64, f, p);
    }
    r
}

/// Rabin's irreducibility test for a monic polynomial of degree `n >= 1`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 || f[f.len() - 1] != 1 {
        return false;
    }
    let n = (f.len() - 1) as u32;
    if n == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    if sub(&x_pow_p_pow(n, &f, p), &x, p) != rem(&[], &f, p) {
        return false;
    }
    for l in prime_factors(n as u64) {
        let h = sub(&x_pow_p_pow(n / l as u32, &f, p), &x, p);
        let g = gcd(&f, &h, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
