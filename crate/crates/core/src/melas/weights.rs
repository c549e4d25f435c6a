use crate::error::{Error, Result};
use crate::field::{Code, FieldPair, LogTables};

/// Per-symbol counts `(w_0, ..., w_{p-1})` of a word over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteWeight {
    counts: Vec<u64>,
}

impl CompleteWeight {
    pub fn from_symbols(p: u32, symbols: impl IntoIterator<Item = u32>) -> Self {
        let mut counts = vec![0u64; p as usize];
        for s in symbols {
            counts[s as usize] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The code length, `sum w_i`.
    pub fn length(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Weight of the dual Zetterberg word `(Tr(a x))_{x in U}` for `a` in GF(q^2).
pub fn zetterberg_dual_word(pair: &FieldPair, a: Code) -> CompleteWeight {
    let et = pair.et();
    CompleteWeight::from_symbols(
        pair.p(),
        pair.unit_codes().iter().map(|&x| et.trace(et.mul(a, x))),
    )
}

/// Weight of the dual Melas word `(Tr(a x + b / x))_{x != 0}` for `a, b` in GF(q).
pub fn melas_dual_word(pair: &FieldPair, a: Code, b: Code) -> CompleteWeight {
    let bt = pair.bt();
    CompleteWeight::from_symbols(
        pair.p(),
        bt.nonzero_codes()
            .map(|x| bt.trace(bt.add(bt.mul(a, x), bt.div(b, x)))),
    )
}

fn odd(t: &LogTables) -> Result<()> {
    if t.p() == 2 {
        Err(Error::EvenCharacteristic)
    } else {
        Ok(())
    }
}

/// Number of unit-circle roots of `x^2 + a x + a / conj(a)`, given the norm
/// `a conj(a)` as a GF(q) code: `1 - eta((N - 4) / N)`.
pub fn count_unit_circle_quadratic_roots(t: &LogTables, norm: Code) -> Result<u32> {
    odd(t)?;
    if norm == LogTables::ZERO {
        return Err(Error::ZeroInput);
    }
    let ratio = t.div(t.sub(norm, t.from_int(4)), norm);
    Ok((1 - t.eta(ratio)) as u32)
}

/// Number of `x` on the unit circle with `x + 1/x = a`: `1 - eta(a^2 - 4)`.
pub fn count_unit_circle_sum_inverse(t: &LogTables, a: Code) -> Result<u32> {
    odd(t)?;
    Ok((1 - t.eta(t.sub(t.mul(a, a), t.from_int(4)))) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn zero_and_trivial_words() {
        let pair = FieldPair::new(5, 2).unwrap();
        let z = zetterberg_dual_word(&pair, 0);
        assert_eq!(z.counts(), &[26, 0, 0, 0, 0]);
        let m = melas_dual_word(&pair, 0, 0);
        assert_eq!(m.counts(), &[24, 0, 0, 0, 0]);
        let m = melas_dual_word(&pair, 1, 0);
        assert_eq!(m.counts(), &[4, 5, 5, 5, 5]);
        assert_eq!(m.length(), 24);
    }

    #[test]
    fn duality_small() {
        for (p, m) in [(3u64, 1u32), (5, 1), (3, 2), (7, 1), (2, 3), (3, 3)] {
            let pair = FieldPair::new(p, m).unwrap();
            let target = 2 * pair.q() / p;
            for a in pair.et().nonzero_codes() {
                let t = zetterberg_dual_word(&pair, a);
                let s = melas_dual_word(&pair, pair.norm(a), LogTables::ONE);
                assert_eq!(t.length(), pair.q() + 1);
                for (ti, si) in t.counts().iter().zip(s.counts()) {
                    assert_eq!(ti + si, target);
                }
            }
        }
    }

    #[test]
    fn sum_inverse_counts() {
        for (p, m) in [(5u64, 2u32), (7, 2), (11, 1), (3, 3)] {
            let pair = FieldPair::new(p, m).unwrap();
            let (bt, et) = (pair.bt(), pair.et());
            assert_eq!(count_unit_circle_sum_inverse(bt, bt.from_int(2)), Ok(1));
            assert_eq!(count_unit_circle_sum_inverse(bt, bt.from_int(-2)), Ok(1));
            let mut total = 0;
            for a in bt.codes() {
                let direct = pair
                    .unit_codes()
                    .iter()
                    .filter(|&&x| et.add(x, et.inv(x)) == pair.embed(a))
                    .count() as u32;
                let closed = count_unit_circle_sum_inverse(bt, a).unwrap();
                assert_eq!(closed, direct);
                total += closed as u64;
            }
            assert_eq!(total, pair.q() + 1);
        }
    }

    #[test]
    fn quadratic_roots_on_circle() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for (p, m) in [(5u64, 2u32), (7, 2)] {
            let pair = FieldPair::new(p, m).unwrap();
            let (bt, et) = (pair.bt(), pair.et());
            assert_eq!(count_unit_circle_quadratic_roots(bt, bt.from_int(4)), Ok(1));
            assert_eq!(
                count_unit_circle_quadratic_roots(bt, 0),
                Err(Error::ZeroInput)
            );
            for _ in 0..50 {
                let a = rng.gen_range(1..et.order() as Code);
                let b = et.div(a, pair.conj(a));
                let roots: Vec<Code> = pair
                    .unit_codes()
                    .iter()
                    .copied()
                    .filter(|&x| et.add(et.mul(x, x), et.add(et.mul(a, x), b)) == 0)
                    .collect();
                let closed = count_unit_circle_quadratic_roots(bt, pair.norm(a)).unwrap();
                assert_eq!(closed as usize, roots.len());
            }
        }
    }
}
