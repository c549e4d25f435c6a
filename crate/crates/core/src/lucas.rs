//! Two-term integer recurrences `s_m = lin * s_{m-1} + constant * s_{m-2}`.

use num_bigint::BigInt;

/// Initial terms and coefficients of a second-order integer recurrence.
///
/// With `s0 = 2` and `s1 = lin` the terms are the power sums `alpha^m + beta^m`
/// of the roots of `t^2 - lin t - constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticIntSequence {
    pub s0: BigInt,
    pub s1: BigInt,
    pub lin: BigInt,
    pub constant: BigInt,
}

impl QuadraticIntSequence {
    pub fn new(
        s0: impl Into<BigInt>,
        s1: impl Into<BigInt>,
        lin: impl Into<BigInt>,
        constant: impl Into<BigInt>,
    ) -> Self {
        Self {
            s0: s0.into(),
            s1: s1.into(),
            lin: lin.into(),
            constant: constant.into(),
        }
    }

    /// Power sums of the roots of `t^2 - trace t + norm`.
    pub fn power_sums(trace: impl Into<BigInt>, norm: impl Into<BigInt>) -> Self {
        let trace = trace.into();
        Self::new(2, trace.clone(), trace, -norm.into())
    }

    pub fn term(&self, m: u64) -> BigInt {
        if m == 0 {
            return self.s0.clone();
        }
        let (mut prev, mut cur) = (self.s0.clone(), self.s1.clone());
        for _ in 1..m {
            let next = &self.lin * &cur + &self.constant * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    }
}

/// `s_m` of `seq`.
pub fn lucas_sequence_term(seq: &QuadraticIntSequence, m: u64) -> BigInt {
    seq.term(m)
}
