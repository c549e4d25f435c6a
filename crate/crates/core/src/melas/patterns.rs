//! Low-weight codeword patterns of the Melas code and their counts.
//!
//! A pattern such as `1^3 2^1` stands for the coefficient list `(1, 1, 1, 2)`.
//! Its tuple count is the number of ordered tuples of distinct nonzero
//! `x_j` in GF(q) with `sum c_j x_j = 0` and `sum c_j / x_j = 0`, the
//! coefficients read in GF(p).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Code, FieldContext, LogTables};
use crate::params::FieldParams;

/// Coefficient/multiplicity pairs, coefficients ascending and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSpec {
    parts: Vec<(u32, u32)>,
}

impl PatternSpec {
    pub fn new(parts: &[(u32, u32)]) -> Result<Self> {
        let mut merged: Vec<(u32, u32)> = Vec::new();
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        for (c, t) in sorted {
            if c == 0 {
                return Err(Error::ZeroPatternCoefficient);
            }
            if t == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += t,
                _ => merged.push((c, t)),
            }
        }
        let total: u32 = merged.iter().map(|&(_, t)| t).sum();
        if total > 5 {
            return Err(Error::PatternTooLarge(total));
        }
        Ok(Self { parts: merged })
    }

    pub fn parts(&self) -> &[(u32, u32)] {
        &self.parts
    }

    /// The expanded coefficient list.
    pub fn coefficients(&self) -> Vec<u32> {
        self.parts
            .iter()
            .flat_map(|&(c, t)| std::iter::repeat_n(c, t as usize))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.parts.iter().map(|&(_, t)| t as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `sum c * t`, the symbol sum of a codeword with this pattern.
    pub fn degree(&self) -> u32 {
        self.parts.iter().map(|&(c, t)| c * t).sum()
    }

    /// `prod t!`: orderings of a tuple that give the same codeword.
    pub fn automorphism_factor(&self) -> u64 {
        self.parts
            .iter()
            .map(|&(_, t)| (1..=t as u64).product::<u64>())
            .product()
    }

    /// True when every coefficient is a distinct nonzero symbol of GF(p).
    pub fn is_realized_at(&self, p: u32) -> bool {
        self.parts.iter().all(|&(c, _)| c < p)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|(c, t)| format!("{c}^{t}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    /// Parses `"1^3 2^1"` (separators: spaces or commas).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownPattern(s.to_string());
        let parts = s
            .split(|ch: char| ch.is_whitespace() || ch == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                let (c, t) = tok.split_once('^').ok_or_else(bad)?;
                Ok((c.parse().map_err(|_| bad())?, t.parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<(u32, u32)>>>()?;
        Self::new(&parts)
    }
}

/// The nine patterns contributing to the symbol sums 2 and 5.
pub fn supported_patterns() -> Vec<PatternSpec> {
    ["1^2", "2^1", "5^1", "1^1 4^1", "2^1 3^1", "1^2 3^1", "1^1 2^2", "1^3 2^1", "1^5"]
        .iter()
        .map(|s| s.parse().expect("static pattern"))
        .collect()
}

struct TupleSearch<'a> {
    t: &'a LogTables,
    prefix_coeffs: Vec<Code>,
    /// Prefix position shares its coefficient with the previous one.
    continues_run: Vec<bool>,
    ca: Code,
    cb: Code,
}

impl TupleSearch<'_> {
    fn walk(&self, chosen: &mut Vec<Code>, s: Code, inv: Code) -> u64 {
        let t = self.t;
        let depth = chosen.len();
        if depth == self.prefix_coeffs.len() {
            return self.tail(chosen, s, inv);
        }
        let c = self.prefix_coeffs[depth];
        let start = if self.continues_run[depth] {
            chosen[depth - 1] + 1
        } else {
            1
        };
        let mut total = 0;
        for x in start..t.order() as Code {
            if chosen.contains(&x) {
                continue;
            }
            chosen.push(x);
            total += self.walk(chosen, t.add(s, t.mul(c, x)), t.add(inv, t.div(c, x)));
            chosen.pop();
        }
        total
    }

    /// Solutions `(x_a, x_b)` of `ca x_a + cb x_b = S`, `ca / x_a + cb / x_b = T`.
    fn tail(&self, chosen: &[Code], s: Code, inv: Code) -> u64 {
        let t = self.t;
        let (ca, cb) = (self.ca, self.cb);
        let (sp, tp) = (t.neg(s), t.neg(inv));
        // Clearing denominators: T ca x^2 + (cb^2 - ca^2 - T S) x + ca S = 0.
        let qa = t.mul(tp, ca);
        let qb = t.sub(t.sub(t.mul(cb, cb), t.mul(ca, ca)), t.mul(tp, sp));
        let qc = t.mul(ca, sp);
        let check = |xa: Code| -> bool {
            if xa == 0 || chosen.contains(&xa) {
                return false;
            }
            let xb = t.div(t.sub(sp, t.mul(ca, xa)), cb);
            xb != 0
                && xb != xa
                && !chosen.contains(&xb)
                && t.add(t.div(ca, xa), t.div(cb, xb)) == tp
        };
        match t.quadratic_roots(qa, qb, qc) {
            Some(roots) => roots.into_iter().filter(|&x| check(x)).count() as u64,
            None => t.nonzero_codes().filter(|&x| check(x)).count() as u64,
        }
    }
}

fn brute_force(coeffs: &[Code], t: &LogTables, chosen: &mut Vec<Code>) -> u64 {
    if chosen.len() == coeffs.len() {
        let (mut s, mut inv) = (0, 0);
        for (&c, &x) in coeffs.iter().zip(chosen.iter()) {
            s = t.add(s, t.mul(c, x));
            inv = t.add(inv, t.div(c, x));
        }
        return (s == 0 && inv == 0) as u64;
    }
    let mut total = 0;
    for x in t.nonzero_codes() {
        if !chosen.contains(&x) {
            chosen.push(x);
            total += brute_force(coeffs, t, chosen);
            chosen.pop();
        }
    }
    total
}

/// Enumerative tuple count over GF(q) (the context's field).
///
/// The first `k - 2` coordinates are enumerated (equal coefficients in
/// increasing order, weighted by the run factorials) and the last two are
/// solved from a quadratic; distinctness is checked on every solution.
pub fn count_pattern_tuples(spec: &PatternSpec, ctx: &Arc<FieldContext>) -> Result<u64> {
    let t = ctx.tables();
    let ints = spec.coefficients();
    if ints.len() > 5 {
        return Err(Error::PatternTooLarge(ints.len() as u32));
    }
    let coeffs: Vec<Code> = ints.iter().map(|&c| t.from_int(c as i64)).collect();
    let nonzero: Vec<usize> = (0..coeffs.len()).filter(|&i| coeffs[i] != 0).collect();
    if nonzero.len() < 2 {
        return Ok(brute_force(&coeffs, t, &mut Vec::new()));
    }
    let (ia, ib) = (nonzero[nonzero.len() - 2], nonzero[nonzero.len() - 1]);
    let prefix: Vec<usize> = (0..coeffs.len()).filter(|&i| i != ia && i != ib).collect();
    let continues_run: Vec<bool> = prefix
        .iter()
        .enumerate()
        .map(|(j, &i)| j > 0 && ints[prefix[j - 1]] == ints[i])
        .collect();
    let mut factor = 1u64;
    let mut run = 0u64;
    for &cont in &continues_run {
        run = if cont { run + 1 } else { 1 };
        factor *= run;
    }
    let search = TupleSearch {
        t,
        prefix_coeffs: prefix.iter().map(|&i| coeffs[i]).collect(),
        continues_run,
        ca: coeffs[ia],
        cb: coeffs[ib],
    };
    Ok(search.walk(&mut Vec::new(), 0, 0) * factor)
}

fn known(spec: &PatternSpec) -> Result<&'static str> {
    const NAMES: [&str; 9] = [
        "1^2", "2^1", "5^1", "1^1 4^1", "2^1 3^1", "1^2 3^1", "1^1 2^2", "1^3 2^1", "1^5",
    ];
    let text = spec.to_string();
    NAMES
        .iter()
        .find(|&&n| n == text)
        .copied()
        .ok_or(Error::UnknownPattern(text))
}

/// Closed-form tuple count for a supported pattern.
pub fn pattern_tuple_count_closed(spec: &PatternSpec, p: u64, m: u32) -> Result<BigInt> {
    let fp = FieldParams::new(p, m)?;
    let q = fp.q.clone();
    let qm1 = &q - 1;
    let p = fp.p;
    let s = fp.sign;
    let n = match known(spec)? {
        "1^2" => {
            if p == 2 {
                BigInt::zero()
            } else {
                qm1
            }
        }
        "2^1" | "5^1" => {
            let c = spec.parts()[0].0;
            if c.is_multiple_of(p) {
                qm1
            } else {
                BigInt::zero()
            }
        }
        "1^1 4^1" => {
            if p == 3 {
                qm1
            } else {
                BigInt::zero()
            }
        }
        "2^1 3^1" => BigInt::zero(),
        "1^2 3^1" => match p {
            2 => qm1 * (1 + s),
            3 => qm1 * (&q - 3),
            5 => BigInt::zero(),
            _ => qm1 * (1 + fp.eta5),
        },
        "1^1 2^2" => match p {
            2 | 3 | 5 => BigInt::zero(),
            _ => qm1 * (1 + fp.eta_m15),
        },
        "1^3 2^1" => match p {
            2 => qm1 * (1 + s) * (&q - 4),
            3 => BigInt::zero(),
            5 => qm1 * (&q - 6 - s),
            _ => qm1 * (&q - 10 - 3 * fp.eta5 - 3 * fp.eta_m15 + fp.lambda()?),
        },
        "1^5" => {
            let inner = match p {
                2 => return Err(Error::SmallCharacteristic { p, min: 3 }),
                3 => &q * &q + &q * (-14 + s) + 36,
                5 => &q * &q + &q * (-13 + 4 * s) + 10 * (7 + s),
                _ => {
                    &q * &q + &q * (-14 + 4 * fp.q3) + 86 + 20 * fp.eta5 + 15 * fp.eta_m15
                        - 10 * fp.lambda()?
                        + fp.a_q()?
                }
            };
            qm1 * inner
        }
        _ => unreachable!("known() only returns listed names"),
    };
    Ok(n)
}

/// Number of Melas codewords with this pattern: the tuple count divided by
/// the automorphism factor, or 0 when the pattern has no codewords over GF(p).
pub fn pattern_count_closed(spec: &PatternSpec, p: u64, m: u32) -> Result<BigInt> {
    let n = pattern_tuple_count_closed(spec, p, m)?;
    if !spec.is_realized_at(p as u32) {
        return Ok(BigInt::zero());
    }
    let (a, r) = n.div_rem(&BigInt::from(spec.automorphism_factor()));
    if !r.is_zero() {
        return Err(Error::IntegralityFailure {
            what: format!("tuple count of {spec} over GF({p}^{m}) divided by its symmetry"),
        });
    }
    Ok(a)
}

fn patterns_of_degree(d: u32) -> Result<Vec<PatternSpec>> {
    if d != 2 && d != 5 {
        return Err(Error::UnsupportedD(d));
    }
    Ok(supported_patterns()
        .into_iter()
        .filter(|s| s.degree() == d)
        .collect())
}

/// `Gamma_d`, the number of Melas codewords whose symbols sum to `d`, assembled
/// from the pattern counts. For d = 5 it must agree with [`gamma5_direct`].
pub fn gamma_d(d: u32, p: u64, m: u32) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for spec in patterns_of_degree(d)? {
        total += pattern_count_closed(&spec, p, m)?;
    }
    if d == 5 {
        let direct = gamma5_direct(p, m)?;
        if direct != total {
            return Err(Error::Mismatch {
                what: format!("Gamma_5 over GF({p}^{m})"),
                closed: direct.to_string(),
                enumerated: total.to_string(),
            });
        }
    }
    Ok(total)
}

/// The single-expression form of `Gamma_5` (odd p).
pub fn gamma5_direct(p: u64, m: u32) -> Result<BigInt> {
    let fp = FieldParams::new(p, m)?;
    let q = &fp.q;
    let s = fp.sign;
    let inner: BigInt = match fp.p {
        2 => return Err(Error::SmallCharacteristic { p: 2, min: 3 }),
        3 => q * q + q * (-14 + s) + 36,
        5 => q * q + q * (7 + 4 * s) - 50 - 10 * s,
        _ => {
            q * q + q * (6 + 4 * fp.q3) + 6 + 20 * fp.eta5 + 15 * fp.eta_m15 + 10 * fp.lambda()?
                + fp.a_q()?
        }
    };
    let total: BigInt = (q - 1) * inner;
    let (g, r) = total.div_rem(&BigInt::from(120));
    if !r.is_zero() {
        return Err(Error::IntegralityFailure {
            what: format!("Gamma_5 over GF({p}^{m})"),
        });
    }
    Ok(g)
}

/// `Gamma_d` from enumerated tuple counts.
pub fn gamma_oracle(d: u32, ctx: &Arc<FieldContext>) -> Result<u64> {
    let mut total = 0;
    for spec in patterns_of_degree(d)? {
        if spec.is_realized_at(ctx.p()) {
            total += count_pattern_tuples(&spec, ctx)? / spec.automorphism_factor();
        }
    }
    Ok(total)
}
