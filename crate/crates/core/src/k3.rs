//! The coefficient A_q attached to the quartic surface
//! `sum x_i = 0, e_4(x_1, ..., x_5) = 0` in P^4, by three routes: binary
//! quadratic forms, a theta-times-eta-product expansion, and point counting.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{jacobi, sign_pow, PrimeModulus};
use crate::error::{Error, Result};
use crate::field::{Code, FieldContext, LogTables};
use crate::lucas::QuadraticIntSequence;

/// Largest field for [`count_surface_points`].
pub const SURFACE_LIMIT: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadForm {
    /// a^2 + ab + 4b^2
    A,
    /// 2a^2 + ab + 2b^2
    B,
}

impl QuadForm {
    pub fn eval(self, a: i64, b: i64) -> i64 {
        match self {
            QuadForm::A => a * a + a * b + 4 * b * b,
            QuadForm::B => 2 * a * a + a * b + 2 * b * b,
        }
    }

    /// The coefficient read off a representation by this form.
    pub fn coefficient(self, a: i64, b: i64) -> i64 {
        match self {
            QuadForm::A => 2 * a * a - 7 * b * b + 2 * a * b,
            QuadForm::B => a * a + 8 * a * b + b * b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadFormRep {
    pub a: i64,
    pub b: i64,
    pub form: QuadForm,
    pub p: u64,
}

fn excluded(p: u64) -> Result<u64> {
    let p = PrimeModulus::new(p)?.get() as u64;
    if p == 3 || p == 5 {
        return Err(Error::BadCharacteristic(p as u32));
    }
    Ok(p)
}

/// Which form represents `p`, or `None` when `(p/15) = -1`.
fn form_for(p: u64) -> Option<QuadForm> {
    match p % 15 {
        1 | 4 => Some(QuadForm::A),
        2 | 8 => Some(QuadForm::B),
        _ => None,
    }
}

/// Every representation of `p` by `form` with `|a|, |b| <= ceil(sqrt p) + 1`.
pub fn representations(p: u64, form: QuadForm) -> Vec<QuadFormRep> {
    let bound = (p as f64).sqrt().ceil() as i64 + 1;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if form.eval(a, b) == p as i64 {
                out.push(QuadFormRep { a, b, form, p });
            }
        }
    }
    out
}

/// A_p from a quadratic-form representation of `p`.
///
/// All representations are tried and must give the same value.
pub fn a_p_coefficient(p: u64) -> Result<i64> {
    let p = excluded(p)?;
    if p != 2 && jacobi(p as i64, 15) == -1 {
        return Ok(0);
    }
    let form = form_for(p).ok_or(Error::MissingRepresentation(p))?;
    let reps = representations(p, form);
    let first = reps.first().ok_or(Error::MissingRepresentation(p))?;
    let value = form.coefficient(first.a, first.b);
    for r in &reps[1..] {
        let other = form.coefficient(r.a, r.b);
        if other != value {
            return Err(Error::AmbiguousRepresentation {
                p,
                first: value,
                second: other,
            });
        }
    }
    Ok(value)
}

/// Coefficient of z^p in `z * theta(z) * prod_r (1-z^r)(1-z^3r)(1-z^5r)(1-z^15r)`,
/// where `theta = sum z^(m^2 + mn + 4n^2)`.
pub fn a_p_modular_form(p: u64) -> Result<BigInt> {
    let p = excluded(p)?;
    // Work modulo z^p: the leading factor z shifts the target down to z^(p-1).
    let len = p as usize;
    let mut eta = vec![BigInt::zero(); len];
    eta[0] = BigInt::from(1);
    for step in [1usize, 3, 5, 15] {
        let mut k = step;
        while k < len {
            for i in (k..len).rev() {
                let (lo, hi) = eta.split_at_mut(i);
                hi[0] -= &lo[i - k];
            }
            k += step;
        }
    }
    let bound = (p as f64).sqrt().ceil() as i64 + 2;
    let mut theta = vec![0i64; len];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = QuadForm::A.eval(m, n);
            if (e as usize) < len {
                theta[e as usize] += 1;
            }
        }
    }
    let target = len - 1;
    Ok(theta
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| &eta[target - i] * c)
        .sum())
}

/// A_q for q = p^m.
pub fn a_q(p: u64, m: u32) -> Result<BigInt> {
    let prime = PrimeModulus::new(p)?.get() as u64;
    let q = BigInt::from(prime).pow(m);
    match prime {
        3 => Ok(q * sign_pow(m)),
        5 => Ok(q),
        _ => {
            let ap = a_p_coefficient(prime)?;
            let chi = if prime == 2 { 1 } else { jacobi(prime as i64, 15) } as i64;
            let norm = BigInt::from(chi) * BigInt::from(prime * prime);
            Ok(QuadraticIntSequence::power_sums(ap, norm).term(m as u64))
        }
    }
}

/// Projective point counts of the surface over GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceCount {
    pub q: u64,
    pub nx: u64,
    /// Count on the blow-up at the ten double points: `nx + 10q`.
    pub nx_tilde: u64,
    /// Points with at least one zero coordinate.
    pub on_coordinate_planes: u64,
    /// Points whose coordinates are nonzero and pairwise distinct.
    pub generic: u64,
}

/// Brute-force projective count over normalized representatives.
pub fn count_surface_points(ctx: &Arc<FieldContext>) -> Result<SurfaceCount> {
    let q = ctx.order();
    if q > SURFACE_LIMIT {
        return Err(Error::TooLarge {
            q,
            limit: SURFACE_LIMIT,
        });
    }
    let t = ctx.tables();
    let codes: Vec<Code> = t.codes().collect();

    // Prefixes (x1, x2, x3): every normalized nonzero triple, then the zero
    // triple whose only completion is x4 = 1.
    let mut prefixes: Vec<[Code; 3]> = Vec::new();
    for &b in &codes {
        for &c in &codes {
            prefixes.push([LogTables::ONE, b, c]);
        }
    }
    for &c in &codes {
        prefixes.push([0, LogTables::ONE, c]);
    }
    prefixes.push([0, 0, LogTables::ONE]);

    let (mut nx, mut planes, mut generic) = (0u64, 0u64, 0u64);
    let mut visit = |x: [Code; 5]| {
        if x.contains(&0) {
            planes += 1;
        } else {
            let mut s = x;
            s.sort_unstable();
            if s.windows(2).all(|w| w[0] != w[1]) {
                generic += 1;
            }
        }
        nx += 1;
    };
    for pre in prefixes.iter().copied().chain(std::iter::once([0, 0, 0])) {
        let [x1, x2, x3] = pre;
        let s = t.add(x1, t.add(x2, x3));
        let e2 = t.add(t.mul(x1, x2), t.add(t.mul(x1, x3), t.mul(x2, x3)));
        let e3 = t.mul(x1, t.mul(x2, x3));
        let x4_range: &[Code] = if pre == [0, 0, 0] {
            &[LogTables::ONE]
        } else {
            &codes
        };
        for &x4 in x4_range {
            let x5 = t.neg(t.add(s, x4));
            // e4 of five variables with x5 eliminated.
            let e4 = t.add(t.mul(x5, t.add(e3, t.mul(x4, e2))), t.mul(x4, e3));
            if e4 == 0 {
                visit([x1, x2, x3, x4, x5]);
            }
        }
    }
    Ok(SurfaceCount {
        q,
        nx,
        nx_tilde: nx + 10 * q,
        on_coordinate_planes: planes,
        generic,
    })
}

/// `1 + q^2 + q(16 + 4(q/3)) + A_q`.
pub fn surface_count_closed(p: u64, m: u32) -> Result<BigInt> {
    let q = BigInt::from(PrimeModulus::new(p)?.get()).pow(m);
    let q3 = crate::arith::q_over_three(p as u32, m);
    Ok(BigInt::from(1) + &q * &q + &q * (16 + 4 * q3) + a_q(p, m)?)
}

/// `|A_p| <= 2p`, as an `i64` check helper for callers holding a `BigInt`.
pub fn within_weil_bound(ap: &BigInt, p: u64) -> bool {
    ap.to_i64().map(|v| v.unsigned_abs() <= 2 * p).unwrap_or(false)
}
