use std::sync::Arc;

use super::context::{build_field_context, FieldContext, FieldElement};
use super::tables::{Code, LogTables};
use crate::error::{Error, Result};

/// A point of the norm-one subgroup U_{q+1} of GF(q^2)*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCircleElement {
    value: FieldElement,
}

impl UnitCircleElement {
    /// Wraps `value` after checking `value^(q+1) = 1`.
    pub fn new(value: FieldElement, q: u64) -> Result<Self> {
        if value.pow(q + 1) != value.context().one() {
            return Err(Error::InvalidInput(format!(
                "{value:?} does not lie on the unit circle of order {}",
                q + 1
            )));
        }
        Ok(Self { value })
    }

    pub fn value(&self) -> &FieldElement {
        &self.value
    }

    /// The conjugate `x^q`, which is also the inverse.
    pub fn conjugate(&self, q: u64) -> Self {
        Self {
            value: self.value.frobenius_q(q),
        }
    }
}

/// The unit circle of a degree-2m context, as the powers `g^((q-1)k)`, k = 0..=q.
pub fn unit_circle(ctx: &Arc<FieldContext>) -> Result<Vec<UnitCircleElement>> {
    if !ctx.degree().is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "GF({}^{}) is not a quadratic extension",
            ctx.p(),
            ctx.degree()
        )));
    }
    let q = (ctx.p() as u64).pow(ctx.degree() / 2);
    let step = ctx.generator().pow(q - 1);
    let mut out = Vec::with_capacity(q as usize + 1);
    let mut cur = ctx.one();
    for _ in 0..=q {
        out.push(UnitCircleElement { value: cur.clone() });
        cur = &cur * &step;
    }
    Ok(out)
}

/// GF(q) and GF(q^2) built over the same prime, with the embedding between
/// them tabulated in table codes.
pub struct FieldPair {
    m: u32,
    q: u64,
    base: Arc<FieldContext>,
    ext: Arc<FieldContext>,
    unit: Vec<Code>,
    base_to_ext: Vec<Code>,
    /// Indexed by `log / (q + 1)` of a nonzero subfield element of GF(q^2).
    ext_to_base: Vec<Code>,
}

impl std::fmt::Debug for FieldPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldPair")
            .field("p", &self.p())
            .field("m", &self.m)
            .field("base", &self.base)
            .field("ext", &self.ext)
            .finish()
    }
}

impl FieldPair {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        let base = build_field_context(p, m)?;
        let ext = build_field_context(p, 2 * m)?;
        Self::from_contexts(base, ext)
    }

    /// Pairs two existing contexts; `ext` must have twice the degree of `base`.
    pub fn from_contexts(base: Arc<FieldContext>, ext: Arc<FieldContext>) -> Result<Self> {
        if base.p() != ext.p() || ext.degree() != 2 * base.degree() {
            return Err(Error::InvalidInput(format!(
                "GF({}^{}) is not the quadratic extension of GF({}^{})",
                ext.p(),
                ext.degree(),
                base.p(),
                base.degree()
            )));
        }
        let m = base.degree();
        let q = base.order();
        let et = ext.tables();
        let bt = base.tables();

        let unit = (0..=q).map(|k| et.gen_pow(k * (q - 1))).collect();

        // Send the base variable to a root of the base modulus inside GF(q^2).
        let modulus = base.modulus();
        let eval = |r: Code| {
            modulus
                .iter()
                .enumerate()
                .fold(LogTables::ZERO, |acc, (i, &c)| {
                    et.add(acc, et.mul(et.from_int(c as i64), et.pow(r, i as u64)))
                })
        };
        let root = std::iter::once(LogTables::ZERO)
            .chain((0..q - 1).map(|k| et.gen_pow(k * (q + 1))))
            .find(|&r| eval(r) == LogTables::ZERO)
            .expect("the base modulus splits in the subfield of order q");
        let powers: Vec<Code> = (0..m).map(|i| et.pow(root, i as u64)).collect();

        let mut base_to_ext = vec![LogTables::ZERO; q as usize];
        let mut ext_to_base = vec![LogTables::ZERO; q as usize - 1];
        for idx in 0..q {
            let coords = base.from_index(idx);
            let image = coords
                .coords()
                .iter()
                .zip(&powers)
                .fold(LogTables::ZERO, |acc, (&c, &r)| {
                    et.add(acc, et.mul(et.from_int(c as i64), r))
                });
            let code = bt.from_packed(idx);
            base_to_ext[code as usize] = image;
            if image != LogTables::ZERO {
                let l = image - 1;
                debug_assert_eq!(l as u64 % (q + 1), 0);
                ext_to_base[(l as u64 / (q + 1)) as usize] = code;
            }
        }

        Ok(FieldPair {
            m,
            q,
            base,
            ext,
            unit,
            base_to_ext,
            ext_to_base,
        })
    }

    pub fn p(&self) -> u32 {
        self.base.p()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn base(&self) -> &Arc<FieldContext> {
        &self.base
    }

    pub fn ext(&self) -> &Arc<FieldContext> {
        &self.ext
    }

    /// Tables of GF(q).
    pub fn bt(&self) -> &LogTables {
        self.base.tables()
    }

    /// Tables of GF(q^2).
    pub fn et(&self) -> &LogTables {
        self.ext.tables()
    }

    /// Codes (in GF(q^2)) of the unit circle, in generator order.
    pub fn unit_codes(&self) -> &[Code] {
        &self.unit
    }

    pub fn embed(&self, base_code: Code) -> Code {
        self.base_to_ext[base_code as usize]
    }

    /// The GF(q) code of an element of GF(q^2) fixed by conjugation.
    pub fn restrict(&self, ext_code: Code) -> Option<Code> {
        if ext_code == LogTables::ZERO {
            return Some(LogTables::ZERO);
        }
        let l = (ext_code - 1) as u64;
        if !l.is_multiple_of(self.q + 1) {
            return None;
        }
        Some(self.ext_to_base[(l / (self.q + 1)) as usize])
    }

    pub fn conj(&self, ext_code: Code) -> Code {
        self.et().pow(ext_code, self.q)
    }

    /// `x * conj(x)` as a GF(q) code.
    pub fn norm(&self, ext_code: Code) -> Code {
        let n = self.et().mul(ext_code, self.conj(ext_code));
        self.restrict(n).expect("norms lie in GF(q)")
    }

    pub fn is_unit_circle(&self, ext_code: Code) -> bool {
        ext_code != LogTables::ZERO && ((ext_code - 1) as u64).is_multiple_of(self.q - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_ring_map() {
        for (p, m) in [(3u64, 1u32), (5, 1), (5, 2), (7, 1), (3, 3), (2, 3)] {
            let pair = FieldPair::new(p, m).unwrap();
            let (bt, et) = (pair.bt(), pair.et());
            for a in bt.codes() {
                let ea = pair.embed(a);
                assert_eq!(pair.restrict(ea), Some(a));
                assert_eq!(pair.conj(ea), ea);
                for b in bt.codes() {
                    let eb = pair.embed(b);
                    assert_eq!(pair.embed(bt.add(a, b)), et.add(ea, eb));
                    assert_eq!(pair.embed(bt.mul(a, b)), et.mul(ea, eb));
                }
            }
        }
    }

    #[test]
    fn unit_circle_codes_and_elements_agree() {
        let pair = FieldPair::new(5, 2).unwrap();
        let elems = unit_circle(pair.ext()).unwrap();
        assert_eq!(elems.len(), 26);
        for (e, &c) in elems.iter().zip(pair.unit_codes()) {
            assert_eq!(e.value().code(), c);
            assert!(pair.is_unit_circle(c));
            assert_eq!(pair.norm(c), LogTables::ONE);
            assert_eq!(e.conjugate(25).value(), &e.value().inv().unwrap());
        }
    }

    #[test]
    fn product_of_unit_circle() {
        // The product over a cyclic group of even order is its element of order 2.
        for (p, m) in [(5u64, 1u32), (7, 1), (3, 2), (2, 2), (2, 3)] {
            let ctx = build_field_context(p, 2 * m).unwrap();
            let q = p.pow(m);
            let prod = unit_circle(&ctx)
                .unwrap()
                .iter()
                .fold(ctx.one(), |acc, x| &acc * x.value());
            let expect = if (q + 1) % 2 == 0 {
                ctx.from_int(-1)
            } else {
                ctx.one()
            };
            assert_eq!(prod, expect, "q={q}");
        }
    }

    #[test]
    fn rejects_off_circle() {
        let ctx = build_field_context(5, 2).unwrap();
        assert!(UnitCircleElement::new(ctx.generator(), 5).is_err());
        assert!(UnitCircleElement::new(ctx.generator().pow(4), 5).is_ok());
    }
}
