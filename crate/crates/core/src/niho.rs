//! Value distribution of the correlation `C_d(tau)`, d = 3(q - 1) + 1, over
//! GF(q^2): root counts of `z^5 + conj(a) z^3 + a z^2 + 1` on the unit circle,
//! the moment identities, and the closed-form table with its oracle.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Code, FieldPair, LogTables};
use crate::melas::b5_pure_weight;
use crate::params::FieldParams;

/// Largest q for the cubic and quadratic enumerations.
pub const ORACLE_LIMIT: u64 = 350;
/// Largest q^2 for [`distribution_oracle`].
pub const DISTRIBUTION_ORACLE_LIMIT: u64 = 100_000_000;
/// Largest q for which the oracle also sums the correlation directly.
pub const DIRECT_SUM_LIMIT: u64 = 13;

/// Whether `gcd(3q - 2, q^2 - 1) = 1`, i.e. `gcd(5, q + 1) = 1`.
pub fn check_gcd_condition(p: u64, m: u32) -> Result<bool> {
    let fp = FieldParams::new(p, m)?;
    let q = &fp.q;
    let d: BigInt = 3 * q - 2;
    let full = d.gcd(&(q * q - 1)) == BigInt::from(1);
    let short = (q + 1u32) % 5u32 != BigInt::zero();
    assert_eq!(full, short, "gcd reduction failed for q = {q}");
    Ok(full)
}

fn require_gcd(p: u64, m: u32) -> Result<()> {
    if check_gcd_condition(p, m)? {
        Ok(())
    } else {
        Err(Error::GcdViolation { p: p as u32, m })
    }
}

fn require_field(pair: &FieldPair, limit: u64) -> Result<()> {
    require_gcd(pair.p() as u64, pair.m())?;
    if pair.q() > limit {
        return Err(Error::TooLarge { q: pair.q(), limit });
    }
    Ok(())
}

/// Evaluates `F_a` on the whole unit circle with precomputed powers.
struct RootCounter<'a> {
    et: &'a LogTables,
    q: u64,
    /// `(z^2, z^3, z^5 + 1)` per unit-circle point.
    powers: Vec<(Code, Code, Code)>,
}

impl<'a> RootCounter<'a> {
    fn new(pair: &'a FieldPair) -> Self {
        let et = pair.et();
        let powers = pair
            .unit_codes()
            .iter()
            .map(|&z| (et.pow(z, 2), et.pow(z, 3), et.add(et.pow(z, 5), LogTables::ONE)))
            .collect();
        Self {
            et,
            q: pair.q(),
            powers,
        }
    }

    fn count(&self, a: Code) -> u32 {
        let et = self.et;
        let abar = et.pow(a, self.q);
        self.powers
            .iter()
            .filter(|&&(z2, z3, z5p1)| {
                et.add(et.add(z5p1, et.mul(abar, z3)), et.mul(a, z2)) == LogTables::ZERO
            })
            .count() as u32
    }
}

/// `N(a)`: unit-circle roots of `z^5 + conj(a) z^3 + a z^2 + 1`.
pub fn root_count(pair: &FieldPair, a: Code) -> Result<u32> {
    require_gcd(pair.p() as u64, pair.m())?;
    Ok(RootCounter::new(pair).count(a))
}

/// `N_i = #{a in GF(q^2) : N(a) = i}` for i = 0..=5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RootCountHistogram {
    pub counts: [u64; 6],
}

impl RootCountHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Root counts for every `a` in GF(q^2).
pub fn root_count_histogram(pair: &FieldPair) -> Result<RootCountHistogram> {
    require_field(pair, DISTRIBUTION_ORACLE_LIMIT.isqrt())?;
    let counter = RootCounter::new(pair);
    let mut hist = RootCountHistogram::default();
    for a in pair.et().codes() {
        hist.counts[counter.count(a) as usize] += 1;
    }
    Ok(hist)
}

/// Number of `y` in GF(q^2) with `(y + 1)^d - y^d = 1`.
pub fn b3_closed(p: u64, m: u32) -> Result<BigInt> {
    let q = FieldParams::new(p, m)?.q;
    Ok(if &q % 3u32 == BigInt::from(2) { q + 2 } else { q })
}

pub fn b3_brute_force(pair: &FieldPair) -> Result<u64> {
    let q = pair.q();
    if q > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            q,
            limit: ORACLE_LIMIT,
        });
    }
    let et = pair.et();
    let d = 3 * q - 2;
    Ok(et
        .codes()
        .filter(|&y| et.sub(et.pow(et.add(y, LogTables::ONE), d), et.pow(y, d)) == LogTables::ONE)
        .count() as u64)
}

fn small_p(fp: &FieldParams, min: u32) -> Result<()> {
    if fp.p < min {
        Err(Error::SmallCharacteristic { p: fp.p, min })
    } else {
        Ok(())
    }
}

fn exact_div(n: BigInt, d: u32, what: impl FnOnce() -> String) -> Result<BigInt> {
    let (quot, rem) = n.div_rem(&BigInt::from(d));
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::IntegralityFailure { what: what() })
    }
}

/// `N_4`, the number of `a` with four distinct unit-circle roots.
pub fn n4_closed(p: u64, m: u32) -> Result<BigInt> {
    let fp = FieldParams::new(p, m)?;
    small_p(&fp, 5)?;
    require_gcd(p, m)?;
    let q = &fp.q;
    let six_n4 = if fp.p == 5 {
        q - fp.sign
    } else {
        q - 4 + 3 * fp.eta5 + 3 * fp.eta_m15 + fp.lambda()?
    };
    exact_div(six_n4, 6, || format!("N_4 over GF({p}^{m})"))
}

/// Sizes of the triple sets behind `N_4`: all unit-circle triples with
/// `x1 + x2 + x3 + 2 = 0`, those with a repeated entry, and the remaining
/// ones containing 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct N4Counts {
    pub triples: BigInt,
    pub with_repeat: BigInt,
    pub through_one: BigInt,
}

impl N4Counts {
    /// `6 N_4`.
    pub fn generic(&self) -> BigInt {
        &self.triples - &self.with_repeat - &self.through_one
    }
}

/// Closed-form triple counts, verified against enumeration over the circle.
pub fn n4_intermediate_counts(pair: &FieldPair) -> Result<N4Counts> {
    let (p, m) = (pair.p() as u64, pair.m());
    let fp = FieldParams::new(p, m)?;
    small_p(&fp, 5)?;
    if pair.q() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            q: pair.q(),
            limit: ORACLE_LIMIT,
        });
    }
    let delta5 = (fp.p == 5) as i32;
    let closed = N4Counts {
        triples: &fp.q + 2 + fp.lambda()?,
        with_repeat: BigInt::from(3 - 3 * fp.eta_m15 - 2 * delta5),
        through_one: BigInt::from(3 * (1 - fp.eta5 - delta5)),
    };

    let et = pair.et();
    let minus_two = et.from_int(-2);
    let (mut triples, mut repeat, mut one) = (0u64, 0u64, 0u64);
    for &x1 in pair.unit_codes() {
        for &x2 in pair.unit_codes() {
            let x3 = et.sub(et.sub(minus_two, x1), x2);
            if !pair.is_unit_circle(x3) {
                continue;
            }
            triples += 1;
            if x1 == x2 || x1 == x3 || x2 == x3 {
                repeat += 1;
            } else if [x1, x2, x3].contains(&LogTables::ONE) {
                one += 1;
            }
        }
    }
    let counted = N4Counts {
        triples: triples.into(),
        with_repeat: repeat.into(),
        through_one: one.into(),
    };
    if counted != closed {
        return Err(Error::Mismatch {
            what: format!("triple counts over GF({p}^{m})"),
            closed: format!("{closed:?}"),
            enumerated: format!("{counted:?}"),
        });
    }
    Ok(closed)
}

/// `N_5`, the number of `a` with five distinct unit-circle roots; checked
/// against `B_5 / (q + 1)`.
pub fn n5_closed(p: u64, m: u32) -> Result<BigInt> {
    let fp = FieldParams::new(p, m)?;
    small_p(&fp, 3)?;
    require_gcd(p, m)?;
    let q = &fp.q;
    let s = fp.sign;
    let numerator: BigInt = match fp.p {
        3 => q * q - q * (6 + s) + 6,
        5 => q * q - q * (7 + 4 * s) + 10 * s,
        _ => {
            q * q - q * (6 + 4 * fp.q3) + 16 - 20 * fp.eta5 - 15 * fp.eta_m15 - 10 * fp.lambda()?
                - fp.a_q()?
        }
    };
    let n5 = exact_div(numerator, 120, || format!("N_5 over GF({p}^{m})"))?;
    let from_b5: BigInt = b5_pure_weight(p, m)? / (q + 1);
    if from_b5 != n5 {
        return Err(Error::Mismatch {
            what: format!("N_5 against B_5 / (q + 1) over GF({p}^{m})"),
            closed: n5.to_string(),
            enumerated: from_b5.to_string(),
        });
    }
    Ok(n5)
}

/// Correlation values with their frequencies, ascending by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    pub p: u32,
    pub m: u32,
    pub rows: Vec<(BigInt, BigInt)>,
}

impl DistributionTable {
    pub fn total(&self) -> BigInt {
        self.rows.iter().map(|(_, c)| c).sum()
    }

    pub fn frequency(&self, value: &BigInt) -> Option<&BigInt> {
        self.rows.iter().find(|(v, _)| v == value).map(|(_, c)| c)
    }

    fn values(q: &BigInt) -> [BigInt; 6] {
        [-q - 1, BigInt::from(-1), q - 1, 2 * q - 1, 3 * q - 1, 4 * q - 1]
    }
}

/// The six-row table from `b_3`, `N_4` and `N_5`, excluding `a = 0`.
pub fn distribution_closed(p: u64, m: u32) -> Result<DistributionTable> {
    let fp = FieldParams::new(p, m)?;
    small_p(&fp, 5)?;
    require_gcd(p, m)?;
    let q = &fp.q;
    let b3 = b3_closed(p, m)?;
    let n4 = n4_closed(p, m)?;
    let n5 = n5_closed(p, m)?;
    let b3q = &b3 * q;
    let what = || format!("distribution over GF({p}^{m})");

    let counts = [
        exact_div(3 * q * q - 2 * q - &b3q, 6, what)? + &n4 + 4 * &n5,
        exact_div(&b3q - q, 2, what)? - 4 * &n4 - 15 * &n5 - 1,
        exact_div(q * q + 2 * q - &b3q, 2, what)? + 6 * &n4 + 20 * &n5,
        exact_div(&b3q - q, 6, what)? - 4 * &n4 - 10 * &n5,
        n4,
        n5,
    ];
    let rows: Vec<(BigInt, BigInt)> = DistributionTable::values(q).into_iter().zip(counts).collect();
    for (v, c) in &rows {
        if c.sign() == num_bigint::Sign::Minus {
            return Err(Error::NegativeFrequency {
                value: v.to_string(),
                count: c.to_string(),
            });
        }
    }
    let table = DistributionTable {
        p: fp.p,
        m,
        rows,
    };
    assert_eq!(table.total(), q * q - 1, "frequencies must cover GF(q^2)*");
    Ok(table)
}

/// Correlation values by enumeration: `s(a) = q(N(a) - 1) - 1` for every
/// nonzero `a`. For q up to 13 the correlation sum over the m-sequence is
/// also evaluated directly and its histogram must agree.
pub fn distribution_oracle(pair: &FieldPair) -> Result<DistributionTable> {
    let hist = root_count_histogram(pair)?;
    let q = BigInt::from(pair.q());
    // a = 0 has N(0) = 1.
    let mut counts = hist.counts;
    counts[1] -= 1;
    let values = DistributionTable::values(&q);
    // Row order: N = 0, 1, 2, 3, 4, 5 matches ascending values.
    let rows: Vec<(BigInt, BigInt)> = values
        .into_iter()
        .zip(counts.iter().map(|&c| BigInt::from(c)))
        .collect();
    let table = DistributionTable {
        p: pair.p(),
        m: pair.m(),
        rows,
    };
    if pair.q() <= DIRECT_SUM_LIMIT {
        let direct = direct_correlation_histogram(pair)?;
        if direct != table.rows {
            return Err(Error::Mismatch {
                what: format!("direct correlation sums over GF({}^{})", pair.p(), 2 * pair.m()),
                closed: format!("{:?}", table.rows),
                enumerated: format!("{direct:?}"),
            });
        }
    }
    Ok(table)
}

/// Histogram of `C_d(tau) = sum_t w^(Tr(g^(t + tau)) - Tr(g^(dt)))`, tau = 0..q^2 - 2.
fn direct_correlation_histogram(pair: &FieldPair) -> Result<Vec<(BigInt, BigInt)>> {
    let et = pair.et();
    let p = pair.p() as i64;
    let q = pair.q();
    let n = et.group_order() as u64;
    let d = 3 * q - 2;
    let seq: Vec<i64> = (0..n).map(|t| et.trace(et.gen_pow(t)) as i64).collect();
    let decimated: Vec<i64> = (0..n).map(|t| seq[((d * t) % n) as usize]).collect();
    let roots: Vec<Complex64> = (0..p)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / p as f64))
        .collect();
    let qi = BigInt::from(q);
    let mut counts = vec![0u64; 6];
    let values = DistributionTable::values(&qi);
    for tau in 0..n {
        let c: Complex64 = (0..n)
            .map(|t| roots[(seq[((t + tau) % n) as usize] - decimated[t as usize]).rem_euclid(p) as usize])
            .sum();
        let v = c.re.round();
        if c.im.abs() > 1e-6 || (c.re - v).abs() > 1e-6 {
            return Err(Error::Mismatch {
                what: format!("correlation at shift {tau} is not an integer"),
                closed: "integer".into(),
                enumerated: c.to_string(),
            });
        }
        let v = BigInt::from(v as i64);
        let slot = values.iter().position(|x| *x == v).ok_or_else(|| Error::Mismatch {
            what: format!("correlation value at shift {tau}"),
            closed: format!("{values:?}"),
            enumerated: v.to_string(),
        })?;
        counts[slot] += 1;
    }
    Ok(values
        .into_iter()
        .zip(counts.into_iter().map(BigInt::from))
        .collect())
}

/// The four power-sum identities satisfied by the root-count histogram.
pub fn moment_identities_check(hist: &RootCountHistogram, p: u64, m: u32) -> Result<bool> {
    let q = FieldParams::new(p, m)?.q;
    let b3 = b3_closed(p, m)?;
    let moment = |k: u32| -> BigInt {
        hist.counts
            .iter()
            .enumerate()
            .map(|(i, &n)| BigInt::from(i as i64 - 1).pow(k) * n)
            .sum()
    };
    Ok(moment(0) == &q * &q && moment(1) == q && moment(2) == &q * &q && moment(3) == &q * b3)
}

/// `N_4` and `N_5` read off a histogram, as machine integers.
pub fn high_root_counts(hist: &RootCountHistogram) -> (u64, u64) {
    (hist.counts[4], hist.counts[5])
}
