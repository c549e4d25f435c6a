//! Quadratic-character sums over GF(q) and the curve y^2 = x(x - 5)(x + 27).

use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith::{legendre, sign_pow, PrimeModulus};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::lucas::QuadraticIntSequence;

/// Sum of `eta(a2 x^2 + a1 x + a0)` over GF(q), from the discriminant alone.
pub fn char_sum_quadratic(a2: &FieldElement, a1: &FieldElement, a0: &FieldElement) -> Result<i64> {
    let ctx = a2.context();
    if ctx.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if a2.is_zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let disc = a1 * a1 - &(&(ctx.from_int(4) * a0) * a2);
    let eta = a2.quadratic_character()? as i64;
    Ok(if disc.is_zero() {
        (ctx.order() as i64 - 1) * eta
    } else {
        -eta
    })
}

/// `sum_x eta((x^2 - 4)(2x + 1)(2x + 5))` over GF(q), term by term.
pub fn lambda_direct(ctx: &Arc<FieldContext>) -> Result<i64> {
    if ctx.p() < 5 {
        return Err(Error::SmallCharacteristic { p: ctx.p(), min: 5 });
    }
    let t = ctx.tables();
    let (one, two, four, five) = (t.from_int(1), t.from_int(2), t.from_int(4), t.from_int(5));
    Ok(t.codes()
        .map(|x| {
            let f = t.mul(
                t.sub(t.mul(x, x), four),
                t.mul(t.add(t.mul(two, x), one), t.add(t.mul(two, x), five)),
            );
            t.eta(f) as i64
        })
        .sum())
}

/// Affine point count of y^2 = x(x - 5)(x + 27) over GF(p) and its trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllipticTrace {
    pub p: u64,
    pub np: u64,
    /// `np - p`; bounded by `2 sqrt(p)`.
    pub a: i64,
}

pub fn count_curve_points(p: u64) -> Result<EllipticTrace> {
    let p = PrimeModulus::new(p)?.get() as u64;
    if p < 7 {
        return Err(Error::SmallCharacteristic { p: p as u32, min: 7 });
    }
    let pi = p as i64;
    let np: i64 = (0..pi)
        .map(|x| 1 + legendre(x * (x - 5) * (x + 27) % pi, p) as i64)
        .sum();
    let a = np - pi;
    debug_assert!((a * a) as u64 <= 4 * p);
    Ok(EllipticTrace {
        p,
        np: np as u64,
        a,
    })
}

/// The same sum as [`lambda_direct`], from the curve trace over GF(p).
pub fn lambda_closed(p: u64, m: u32) -> Result<BigInt> {
    let prime = PrimeModulus::new(p)?.get();
    if prime < 5 {
        return Err(Error::SmallCharacteristic { p: prime, min: 5 });
    }
    if prime == 5 {
        return Ok(BigInt::from(-1 - sign_pow(m)));
    }
    let a = count_curve_points(p)?.a;
    let t = QuadraticIntSequence::power_sums(-a, p).term(m as u64);
    Ok(-1 - t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field_context;
    use rand::{Rng, SeedableRng};

    fn direct_sum(a2: &FieldElement, a1: &FieldElement, a0: &FieldElement) -> i64 {
        a2.context()
            .elements()
            .map(|x| {
                let v = &(&(a2 * &x) * &x + &(a1 * &x)) + a0;
                v.quadratic_character().unwrap() as i64
            })
            .sum()
    }

    #[test]
    fn quadratic_sum_examples() {
        let ctx = build_field_context(7, 1).unwrap();
        let (o, z) = (ctx.one(), ctx.zero());
        assert_eq!(char_sum_quadratic(&o, &z, &z), Ok(6));
        assert_eq!(char_sum_quadratic(&o, &z, &o), Ok(-1));
        assert_eq!(
            char_sum_quadratic(&z, &o, &o),
            Err(Error::DegenerateLeadingCoefficient)
        );
    }

    #[test]
    fn quadratic_sum_matches_direct() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (p, m) in [(5u64, 2u32), (7, 2), (11, 2)] {
            let ctx = build_field_context(p, m).unwrap();
            let pick = |rng: &mut rand::rngs::StdRng| ctx.from_index(rng.gen_range(0..ctx.order()));
            let mut done = 0;
            while done < 50 {
                let (a2, a1, a0) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                if a2.is_zero() {
                    continue;
                }
                assert_eq!(char_sum_quadratic(&a2, &a1, &a0).unwrap(), direct_sum(&a2, &a1, &a0));
                done += 1;
            }
            // A zero discriminant is rare at random; cover it explicitly.
            let two = ctx.from_int(2);
            let one = ctx.one();
            assert_eq!(
                char_sum_quadratic(&one, &two, &one).unwrap(),
                direct_sum(&one, &two, &one)
            );
        }
    }

    #[test]
    fn curve_examples() {
        assert_eq!(count_curve_points(7).unwrap(), EllipticTrace { p: 7, np: 11, a: 4 });
        assert_eq!(count_curve_points(11).unwrap().np, 11);
        assert_eq!(count_curve_points(17).unwrap().a, -6);
        assert!(count_curve_points(5).is_err());
        assert!(count_curve_points(15).is_err());
    }

    #[test]
    fn lambda_examples() {
        let direct = |p, m| lambda_direct(&build_field_context(p, m).unwrap()).unwrap();
        assert_eq!(direct(5, 1), 0);
        assert_eq!(direct(5, 2), -2);
        assert_eq!(direct(7, 3), -21);
        assert_eq!(direct(11, 1), -1);
        assert_eq!(direct(13, 1), -3);
        assert_eq!(lambda_closed(7, 3).unwrap(), BigInt::from(-21));
        assert_eq!(lambda_closed(13, 1).unwrap(), BigInt::from(-3));
        for m in 1..=6 {
            assert_eq!(lambda_closed(5, m).unwrap(), BigInt::from(-1 - sign_pow(m)));
        }
        assert!(lambda_direct(&build_field_context(3, 2).unwrap()).is_err());
    }

    #[test]
    fn hasse_and_first_power() {
        for p in (7u64..200).filter(|&p| crate::arith::is_prime(p)) {
            let tr = count_curve_points(p).unwrap();
            assert!(tr.a * tr.a <= 4 * p as i64, "p={p}");
            assert_eq!(lambda_closed(p, 1).unwrap(), BigInt::from(-1 + tr.a));
            let ctx = build_field_context(p, 1).unwrap();
            assert_eq!(lambda_direct(&ctx).unwrap(), -1 + tr.a);
        }
    }
}
