use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::weights::{melas_dual_word, zetterberg_dual_word, CompleteWeight};
use crate::error::{Error, Result};
use crate::field::FieldPair;

/// Largest q for [`macwilliams_identity_check`].
pub const MACWILLIAMS_LIMIT: u64 = 125;

const POLE_GUARD: f64 = 1e-3;
const TOLERANCE: f64 = 1e-6;

/// `n` points on `|z| = 1/2`, spread over the left half-plane where neither
/// side of the identity is dominated by cancellation.
pub fn sample_points(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(0.5, PI / 2.0 + (k as f64 + 0.5) * PI / n as f64))
        .collect()
}

fn weight_histogram(words: impl Iterator<Item = CompleteWeight>) -> BTreeMap<CompleteWeight, u64> {
    let mut hist = BTreeMap::new();
    for w in words {
        *hist.entry(w).or_insert(0) += 1;
    }
    hist
}

fn evaluate(hist: &BTreeMap<CompleteWeight, u64>, vars: &[Complex64]) -> Complex64 {
    hist.iter()
        .map(|(w, &mult)| {
            w.counts()
                .iter()
                .zip(vars)
                .fold(Complex64::new(mult as f64, 0.0), |acc, (&e, v)| {
                    acc * v.powi(e as i32)
                })
        })
        .sum()
}

/// Checks the pure-weight form of the Zetterberg/Melas MacWilliams relation
/// at each sample point `z`.
///
/// Left side: `q^2 W(z)`, with `W` the Zetterberg enumerator at
/// `(1, 0, ..., 0, -z)`, written through the dual words as
/// `sum_a prod_i (1 - w^-i z)^t_i(a)`. Right side: the closed expression in
/// `(1 - z)` and `(1 - z^p)` plus the dual Melas enumerator at
/// `y_i = sum_s w^(is) z^s`. Agreement is to relative tolerance `1e-6`.
pub fn macwilliams_identity_check(pair: &FieldPair, samples: &[Complex64]) -> Result<bool> {
    let q = pair.q();
    if q > MACWILLIAMS_LIMIT {
        return Err(Error::TooLarge {
            q,
            limit: MACWILLIAMS_LIMIT,
        });
    }
    let p = pair.p();
    for z in samples {
        if (Complex64::new(1.0, 0.0) - z.powi(p as i32)).norm() < POLE_GUARD {
            return Err(Error::InvalidInput(format!(
                "sample {z} is within {POLE_GUARD} of a pole"
            )));
        }
    }
    let zetterberg = weight_histogram(pair.et().codes().map(|a| zetterberg_dual_word(pair, a)));
    let bt = pair.bt();
    let melas = weight_histogram(
        bt.codes()
            .flat_map(|a| bt.codes().map(move |b| (a, b)))
            .map(|(a, b)| melas_dual_word(pair, a, b)),
    );
    let omega = |k: i64| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / p as f64);
    let one = Complex64::new(1.0, 0.0);
    let (qf, ratio) = (q as f64, (q as f64 + 1.0) / (q as f64 - 1.0));
    let (qp, q2p) = ((q / p as u64) as i32, (2 * q / p as u64) as i32);

    for &z in samples {
        let x: Vec<Complex64> = (0..p as i64).map(|i| one - omega(-i) * z).collect();
        let lhs = evaluate(&zetterberg, &x);

        let y: Vec<Complex64> = (0..p as i64)
            .map(|i| (0..p as i32).map(|s| omega(i * s as i64) * z.powi(s)).sum())
            .collect();
        let (a, b) = (one - z, one - z.powi(p as i32));
        let rhs = a.powi(q as i32 + 1) - (2.0 * (qf + 1.0)) * a * b.powi(qp)
            - ratio * b.powi(q2p) * a.powi(1 - q as i32)
            + ratio * b.powi(q2p - q as i32 + 1) * evaluate(&melas, &y);

        let scale = lhs.norm().max(rhs.norm());
        if (lhs - rhs).norm() > TOLERANCE * scale {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        for (p, m) in [(5u64, 1u32), (3, 2), (7, 1), (5, 2), (3, 3)] {
            let pair = FieldPair::new(p, m).unwrap();
            assert!(macwilliams_identity_check(&pair, &[Complex64::new(0.0, 0.0)]).unwrap());
            assert!(macwilliams_identity_check(&pair, &sample_points(10)).unwrap(), "q={}", pair.q());
        }
    }

    #[test]
    fn corrupted_identity_fails() {
        let pair = FieldPair::new(5, 1).unwrap();
        assert!(macwilliams_identity_check(&pair, &[Complex64::new(1.0, 0.0)]).is_err());
        assert!(macwilliams_identity_check(&FieldPair::new(127, 1).unwrap(), &[]).is_err());
    }
}
