//! The field-level constants shared by the closed forms.

use num_bigint::BigInt;

use crate::arith::{checked_prime_power, jacobi_symbol_power, q_over_three, sign_pow, PrimeModulus};
use crate::char_sums::lambda_closed;
use crate::error::{Error, Result};
use crate::k3::a_q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldParams {
    pub p: u32,
    pub m: u32,
    pub q: BigInt,
    /// `(-1)^m`
    pub sign: i32,
    /// `(5/q)`
    pub eta5: i32,
    /// `(-15/q)`
    pub eta_m15: i32,
    /// `(q/3)`
    pub q3: i32,
}

impl FieldParams {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let p = PrimeModulus::new(p)?.get();
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self {
            p,
            m,
            q: BigInt::from(p).pow(m),
            sign: sign_pow(m),
            eta5: jacobi_symbol_power(5, p, m),
            eta_m15: jacobi_symbol_power(-15, p, m),
            q3: q_over_three(p, m),
        })
    }

    /// `q` as a machine integer, when it fits.
    pub fn q_u64(&self) -> Option<u64> {
        checked_prime_power(self.p, self.m)
    }

    pub fn lambda(&self) -> Result<BigInt> {
        lambda_closed(self.p as u64, self.m)
    }

    pub fn a_q(&self) -> Result<BigInt> {
        a_q(self.p as u64, self.m)
    }
}
