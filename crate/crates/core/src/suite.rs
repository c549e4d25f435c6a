//! The cross-check suite behind `verify-all`: every closed form against its
//! enumeration, over all prime powers up to a bound.

use num_bigint::BigInt;

use crate::arith::is_prime;
use crate::char_sums::{lambda_closed, lambda_direct};
use crate::error::{Error, Result};
use crate::field::{build_field_context, Code, FieldPair, LogTables};
use crate::k3::{count_surface_points, surface_count_closed, SURFACE_LIMIT};
use crate::melas::{
    b5_brute_force, b5_pure_weight, count_pattern_tuples, gamma_d, gamma_oracle,
    macwilliams_identity_check, melas_dual_word, pattern_tuple_count_closed, sample_points,
    supported_patterns, zetterberg_dual_word, B5_LIMIT, MACWILLIAMS_LIMIT,
};
use crate::niho::{
    b3_brute_force, b3_closed, check_gcd_condition, distribution_closed, distribution_oracle,
    moment_identities_check, n4_closed, n4_intermediate_counts, n5_closed, root_count_histogram,
    ORACLE_LIMIT,
};

/// One column of the verification matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Lambda,
    SurfaceCount,
    B3,
    Moments,
    Distribution,
    N4,
    N5,
    Gamma2,
    Gamma5,
    B5,
    Patterns,
    Duality,
    MacWilliams,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Lambda,
        Check::SurfaceCount,
        Check::B3,
        Check::Moments,
        Check::Distribution,
        Check::N4,
        Check::N5,
        Check::Gamma2,
        Check::Gamma5,
        Check::B5,
        Check::Patterns,
        Check::Duality,
        Check::MacWilliams,
    ];

    pub const QUICK: [Check; 7] = [
        Check::Lambda,
        Check::B3,
        Check::N4,
        Check::N5,
        Check::Gamma2,
        Check::Gamma5,
        Check::B5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lambda => "lambda",
            Check::SurfaceCount => "aq",
            Check::B3 => "b3",
            Check::Moments => "moments",
            Check::Distribution => "dist",
            Check::N4 => "n4",
            Check::N5 => "n5",
            Check::Gamma2 => "gamma2",
            Check::Gamma5 => "gamma5",
            Check::B5 => "b5",
            Check::Patterns => "patterns",
            Check::Duality => "duality",
            Check::MacWilliams => "macwilliams",
        }
    }
}

/// Result of one check on one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The check does not apply (characteristic, gcd condition or size).
    Skipped,
}

impl Outcome {
    pub fn symbol(&self) -> &'static str {
        match self {
            Outcome::Pass => "ok",
            Outcome::Fail(_) => "FAIL",
            Outcome::Skipped => "-",
        }
    }
}

/// All prime powers `q = p^m <= max_q`, ordered by `q`.
pub fn prime_powers_up_to(max_q: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for p in 2..=max_q {
        if !is_prime(p) {
            continue;
        }
        let (mut q, mut m) = (p, 1);
        while q <= max_q {
            out.push((p, m, q));
            m += 1;
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
    }
    out.sort_by_key(|&(_, _, q)| q);
    out
}

fn compare<T: PartialEq + std::fmt::Display>(closed: T, counted: T) -> Result<Option<bool>> {
    if closed == counted {
        Ok(Some(true))
    } else {
        Err(Error::Mismatch {
            what: "value".into(),
            closed: closed.to_string(),
            enumerated: counted.to_string(),
        })
    }
}

/// Runs a single check over GF(p^m).
pub fn run_check(check: Check, p: u64, m: u32) -> Outcome {
    let result = (|| -> Result<Option<bool>> {
        let pair = FieldPair::new(p, m)?;
        let q = pair.q();
        let gcd = check_gcd_condition(p, m)?;
        match check {
            Check::Lambda => {
                if p < 5 {
                    return Ok(None);
                }
                let ctx = build_field_context(p, m)?;
                compare(lambda_closed(p, m)?, BigInt::from(lambda_direct(&ctx)?))
            }
            Check::SurfaceCount => {
                if p < 7 || q > SURFACE_LIMIT {
                    return Ok(None);
                }
                let count = count_surface_points(pair.base())?;
                compare(surface_count_closed(p, m)?, BigInt::from(count.nx_tilde))
            }
            Check::B3 => {
                if q > ORACLE_LIMIT {
                    return Ok(None);
                }
                compare(b3_closed(p, m)?, BigInt::from(b3_brute_force(&pair)?))
            }
            Check::Moments => {
                if !gcd || q > ORACLE_LIMIT {
                    return Ok(None);
                }
                Ok(Some(moment_identities_check(&root_count_histogram(&pair)?, p, m)?))
            }
            Check::Distribution => {
                if p < 5 || !gcd || q > ORACLE_LIMIT {
                    return Ok(None);
                }
                let closed = distribution_closed(p, m)?;
                Ok(Some(closed == distribution_oracle(&pair)?))
            }
            Check::N4 => {
                if p < 5 || q > ORACLE_LIMIT {
                    return Ok(None);
                }
                let counts = n4_intermediate_counts(&pair)?;
                if gcd {
                    compare(6 * n4_closed(p, m)?, counts.generic())
                } else {
                    Ok(Some(true))
                }
            }
            Check::N5 => {
                if p < 3 || !gcd || q > B5_LIMIT {
                    return Ok(None);
                }
                let b5 = b5_brute_force(&pair)?;
                if b5 % (q + 1) != 0 {
                    return Ok(Some(false));
                }
                compare(n5_closed(p, m)?, BigInt::from(b5 / (q + 1)))
            }
            Check::Gamma2 | Check::Gamma5 => {
                let d = if check == Check::Gamma2 { 2 } else { 5 };
                if (d == 5 && p < 3) || q > ORACLE_LIMIT {
                    return Ok(None);
                }
                compare(gamma_d(d, p, m)?, BigInt::from(gamma_oracle(d, pair.base())?))
            }
            Check::B5 => {
                if p < 3 || q > B5_LIMIT {
                    return Ok(None);
                }
                compare(b5_pure_weight(p, m)?, BigInt::from(b5_brute_force(&pair)?))
            }
            Check::Patterns => {
                if q > ORACLE_LIMIT {
                    return Ok(None);
                }
                for spec in supported_patterns() {
                    let closed = match pattern_tuple_count_closed(&spec, p, m) {
                        Err(Error::SmallCharacteristic { .. }) => continue,
                        other => other?,
                    };
                    let counted = count_pattern_tuples(&spec, pair.base())?;
                    if closed != BigInt::from(counted) {
                        return Err(Error::Mismatch {
                            what: format!("pattern {spec}"),
                            closed: closed.to_string(),
                            enumerated: counted.to_string(),
                        });
                    }
                }
                Ok(Some(true))
            }
            Check::Duality => Ok(Some(duality_holds(&pair, 100))),
            Check::MacWilliams => {
                if q > MACWILLIAMS_LIMIT {
                    return Ok(None);
                }
                Ok(Some(macwilliams_identity_check(&pair, &sample_points(10))?))
            }
        }
    })();
    match result {
        Ok(Some(true)) => Outcome::Pass,
        Ok(Some(false)) => Outcome::Fail("identity does not hold".into()),
        Ok(None) => Outcome::Skipped,
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

/// `t_i + s_i = 2q/p` for the Zetterberg dual word of `a` and the Melas dual
/// word of `(N(a), 1)`, over `samples` nonzero `a` spread evenly over the field.
pub fn duality_holds(pair: &FieldPair, samples: u64) -> bool {
    let et = pair.et();
    let n = et.group_order() as u64;
    let step = (n / samples.max(1)).max(1);
    (0..n.min(samples))
        .map(|k| et.gen_pow(k * step))
        .all(|a| duality_holds_at(pair, a))
}

/// The dual-word relation at a single nonzero `a`.
pub fn duality_holds_at(pair: &FieldPair, a: Code) -> bool {
    let target = 2 * pair.q() / pair.p() as u64;
    let t = zetterberg_dual_word(pair, a);
    let s = melas_dual_word(pair, pair.norm(a), LogTables::ONE);
    t.counts().iter().zip(s.counts()).all(|(ti, si)| ti + si == target)
}

/// One row of the matrix.
#[derive(Debug, Clone)]
pub struct FieldReport {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    pub outcomes: Vec<(Check, Outcome)>,
}

/// Runs `checks` on every prime power up to `max_q`.
pub fn run_suite(max_q: u64, checks: &[Check]) -> Vec<FieldReport> {
    prime_powers_up_to(max_q)
        .into_iter()
        .map(|(p, m, q)| FieldReport {
            p,
            m,
            q,
            outcomes: checks.iter().map(|&c| (c, run_check(c, p, m))).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        let got: Vec<u64> = prime_powers_up_to(16).iter().map(|t| t.2).collect();
        assert_eq!(got, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
        assert!(prime_powers_up_to(0).is_empty());
        assert!(prime_powers_up_to(1).is_empty());
    }

    #[test]
    fn small_suite_passes() {
        for row in run_suite(30, &Check::ALL) {
            for (c, o) in &row.outcomes {
                assert!(!matches!(o, Outcome::Fail(_)), "{} at q = {}: {o:?}", c.name(), row.q);
            }
        }
    }
}
