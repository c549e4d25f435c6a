use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::patterns::gamma_d;
use crate::error::{Error, Result};
use crate::field::{FieldPair, LogTables};
use crate::params::FieldParams;

/// Largest q for [`b5_brute_force`].
pub const B5_LIMIT: u64 = 350;

/// Number of pure-weight-5 Zetterberg codewords, from `Gamma_2` and `Gamma_5`.
pub fn b5_pure_weight(p: u64, m: u32) -> Result<BigInt> {
    let fp = FieldParams::new(p, m)?;
    if fp.p < 3 {
        return Err(Error::SmallCharacteristic { p: fp.p, min: 3 });
    }
    let r = |n: &BigInt| BigRational::from_integer(n.clone());
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    let q = r(&fp.q);
    let one = BigRational::one();
    let g2 = r(&gamma_d(2, p, m)?);
    let g5 = r(&gamma_d(5, p, m)?);

    let mut b5 = (&q + &one) * (&q * &q + int(11)) / int(60) - (&q + &one) / (&q - &one) * g5;
    if fp.p == 5 {
        b5 -= int(3) * (&q + &one) / int(5);
    }
    if fp.p == 3 {
        let qq1 = &q * &q - &one;
        b5 -= &qq1 / int(6);
        let shape = &one - int(2) * &q / (int(fp.p as i64) * (&q - &one));
        b5 -= qq1 * shape * (g2 / (&q - &one) - &one / int(2));
    }
    if !b5.is_integer() || b5 < BigRational::zero() {
        return Err(Error::IntegralityFailure {
            what: format!("B_5 over GF({p}^{m}) = {b5}"),
        });
    }
    Ok(b5.to_integer())
}

/// 5-subsets of the unit circle with zero sum, by enumeration.
///
/// Each triple `i < j < k` is completed by the unique pair of unit-circle
/// points with a given nonzero sum (tabulated once), or by the pairs
/// `{u, -u}` when the remainder is zero.
pub fn b5_brute_force(pair: &FieldPair) -> Result<u64> {
    let q = pair.q();
    if q > B5_LIMIT {
        return Err(Error::TooLarge { q, limit: B5_LIMIT });
    }
    let et = pair.et();
    let unit = pair.unit_codes();
    let n = unit.len();

    const NONE: (u32, u32) = (u32::MAX, u32::MAX);
    let mut pair_of_sum = vec![NONE; et.order() as usize];
    let mut negation = vec![usize::MAX; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = et.add(unit[i], unit[j]);
            if s == LogTables::ZERO {
                negation[i] = j;
                negation[j] = i;
            } else {
                debug_assert_eq!(pair_of_sum[s as usize], NONE);
                pair_of_sum[s as usize] = (i as u32, j as u32);
            }
        }
    }
    // zero_pairs_above[k]: pairs {u, -u} with both indices above k.
    let mut zero_pairs_above = vec![0u64; n + 1];
    for k in (0..n).rev() {
        let starts_pair = negation[k] != usize::MAX && negation[k] > k;
        zero_pairs_above[k] = zero_pairs_above[k + 1] + starts_pair as u64;
    }

    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            let sij = et.add(unit[i], unit[j]);
            for k in j + 1..n {
                let rest = et.neg(et.add(sij, unit[k]));
                if rest == LogTables::ZERO {
                    total += zero_pairs_above[k + 1];
                } else {
                    let (a, _) = pair_of_sum[rest as usize];
                    if a != u32::MAX && a as usize > k {
                        total += 1;
                    }
                }
            }
        }
    }
    Ok(total)
}
