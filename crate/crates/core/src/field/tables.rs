//! Log/antilog/Zech tables for O(1) arithmetic in the oracle loops.
//!
//! An element is addressed by a [`Code`]: `0` is zero and `k + 1` is `g^k`
//! for the context generator `g`. Multiplication adds logs; addition goes
//! through the Zech table `1 + g^k`.

use super::context::FieldContext;

pub type Code = u32;

pub struct LogTables {
    p: u32,
    order: u64,
    /// `order - 1`, the size of the multiplicative group.
    n: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<Code>,
    trace: Vec<u32>,
    /// Characteristic 2 only: a root of `y^2 + y = t`, indexed by the code of `t`.
    artin_schreier: Vec<Code>,
}

impl LogTables {
    pub const ZERO: Code = 0;
    pub const ONE: Code = 1;

    pub(crate) fn build(ctx: &FieldContext) -> Self {
        let p = ctx.p();
        let order = ctx.order();
        let n = (order - 1) as u32;
        let generator = ctx.generator_coords().to_vec();

        let mut exp = Vec::with_capacity(n as usize);
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = ctx.coords_of(1);
        for k in 0..n {
            let idx = ctx.index_of(&cur) as u32;
            debug_assert_eq!(log[idx as usize], u32::MAX, "generator is not primitive");
            exp.push(idx);
            log[idx as usize] = k;
            cur = ctx.mul_coords(&cur, &generator);
        }

        let zech = exp
            .iter()
            .map(|&idx| {
                let c0 = idx % p;
                let shifted = idx - c0 + (c0 + 1) % p;
                if shifted == 0 {
                    Self::ZERO
                } else {
                    log[shifted as usize] + 1
                }
            })
            .collect();

        // The trace is GF(p)-linear: tabulate it on the power basis first.
        let basis_trace: Vec<u64> = (0..ctx.degree())
            .map(|i| {
                let mut c = vec![0u32; ctx.degree() as usize];
                c[i as usize] = 1;
                trace_slow(ctx, &c) as u64
            })
            .collect();
        let mut trace = Vec::with_capacity(order as usize);
        trace.push(0);
        for &idx in &exp {
            let coords = ctx.coords_of(idx as u64);
            let t = coords
                .iter()
                .zip(&basis_trace)
                .map(|(&c, &t)| c as u64 * t)
                .sum::<u64>()
                % p as u64;
            trace.push(t as u32);
        }

        let mut tables = LogTables {
            p,
            order,
            n,
            exp,
            log,
            zech,
            trace,
            artin_schreier: Vec::new(),
        };
        if p == 2 {
            let mut roots = vec![u32::MAX; order as usize];
            for y in tables.codes() {
                roots[tables.add(tables.mul(y, y), y) as usize] = y;
            }
            tables.artin_schreier = roots;
        }
        tables
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Size of the multiplicative group.
    pub fn group_order(&self) -> u32 {
        self.n
    }

    /// Codes of all elements: `0, 1, ..., order - 1`.
    pub fn codes(&self) -> std::ops::Range<Code> {
        0..self.order as Code
    }

    /// Codes of the nonzero elements.
    pub fn nonzero_codes(&self) -> std::ops::Range<Code> {
        1..self.order as Code
    }

    #[inline]
    pub fn log(&self, a: Code) -> Option<u32> {
        a.checked_sub(1)
    }

    #[inline]
    pub fn gen_pow(&self, k: u64) -> Code {
        (k % self.n as u64) as Code + 1
    }

    #[inline]
    pub fn mul(&self, a: Code, b: Code) -> Code {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (a - 1) as u64 + (b - 1) as u64;
        (s % self.n as u64) as Code + 1
    }

    #[inline]
    pub fn inv(&self, a: Code) -> Code {
        assert!(a != 0, "inverse of zero");
        let l = a - 1;
        if l == 0 {
            1
        } else {
            self.n - l + 1
        }
    }

    #[inline]
    pub fn div(&self, a: Code, b: Code) -> Code {
        self.mul(a, self.inv(b))
    }

    #[inline]
    pub fn pow(&self, a: Code, e: u64) -> Code {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = (a - 1) as u64 * (e % self.n as u64) % self.n as u64;
        l as Code + 1
    }

    #[inline]
    pub fn add(&self, a: Code, b: Code) -> Code {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let (la, lb) = (a - 1, b - 1);
        let d = if lb >= la { lb - la } else { lb + self.n - la };
        let z = self.zech[d as usize];
        if z == 0 {
            0
        } else {
            let s = la as u64 + (z - 1) as u64;
            (s % self.n as u64) as Code + 1
        }
    }

    #[inline]
    pub fn neg(&self, a: Code) -> Code {
        if a == 0 || self.p == 2 {
            return a;
        }
        let s = (a - 1) as u64 + (self.n / 2) as u64;
        (s % self.n as u64) as Code + 1
    }

    #[inline]
    pub fn sub(&self, a: Code, b: Code) -> Code {
        self.add(a, self.neg(b))
    }

    pub fn from_int(&self, v: i64) -> Code {
        self.from_packed(v.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_packed(&self, idx: u64) -> Code {
        if idx == 0 {
            0
        } else {
            self.log[idx as usize] + 1
        }
    }

    pub fn to_packed(&self, a: Code) -> u64 {
        if a == 0 {
            0
        } else {
            self.exp[(a - 1) as usize] as u64
        }
    }

    /// Absolute trace to GF(p).
    #[inline]
    pub fn trace(&self, a: Code) -> u32 {
        self.trace[a as usize]
    }

    /// Quadratic character (odd characteristic only).
    #[inline]
    pub fn eta(&self, a: Code) -> i32 {
        debug_assert!(self.p != 2);
        if a == 0 {
            0
        } else if (a - 1).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A square root, if one exists.
    pub fn sqrt(&self, a: Code) -> Option<Code> {
        if a == 0 {
            return Some(0);
        }
        let l = a - 1;
        if self.p == 2 {
            // n is odd, so halving is multiplication by (n + 1) / 2.
            let half = (l as u64 * (self.n as u64).div_ceil(2)) % self.n as u64;
            return Some(half as Code + 1);
        }
        if l % 2 == 1 {
            None
        } else {
            Some(l / 2 + 1)
        }
    }

    /// Roots of `a x^2 + b x + c` in the field, with multiplicity collapsed.
    ///
    /// Returns `None` when the polynomial is identically zero.
    pub fn quadratic_roots(&self, a: Code, b: Code, c: Code) -> Option<Vec<Code>> {
        if a == 0 {
            if b == 0 {
                return if c == 0 { None } else { Some(Vec::new()) };
            }
            return Some(vec![self.div(self.neg(c), b)]);
        }
        if self.p == 2 {
            if b == 0 {
                return Some(vec![self.sqrt(self.div(c, a)).expect("squares are onto")]);
            }
            // x = (b / a) y turns the equation into y^2 + y = ac / b^2.
            let t = self.div(self.mul(a, c), self.mul(b, b));
            let y = self.artin_schreier[t as usize];
            if y == u32::MAX {
                return Some(Vec::new());
            }
            let scale = self.div(b, a);
            let mut roots = vec![self.mul(scale, y), self.mul(scale, self.add(y, 1))];
            roots.dedup();
            return Some(roots);
        }
        let four = self.from_int(4);
        let disc = self.sub(self.mul(b, b), self.mul(four, self.mul(a, c)));
        let two_a = self.add(a, a);
        match self.sqrt(disc) {
            None => Some(Vec::new()),
            Some(0) => Some(vec![self.div(self.neg(b), two_a)]),
            Some(r) => {
                let nb = self.neg(b);
                Some(vec![
                    self.div(self.add(nb, r), two_a),
                    self.div(self.sub(nb, r), two_a),
                ])
            }
        }
    }
}

fn trace_slow(ctx: &FieldContext, coords: &[u32]) -> u32 {
    let mut acc = vec![0u32; ctx.degree() as usize];
    let mut frob = coords.to_vec();
    for _ in 0..ctx.degree() {
        for (a, f) in acc.iter_mut().zip(&frob) {
            *a = (*a + f) % ctx.p();
        }
        frob = ctx.pow_coords(&frob, ctx.p() as u64);
    }
    debug_assert!(acc[1..].iter().all(|&c| c == 0));
    acc[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field_context;

    #[test]
    fn codes_match_polynomial_arithmetic() {
        for (p, m) in [(5u64, 2u32), (3, 3), (2, 3), (7, 1), (2, 1)] {
            let ctx = build_field_context(p, m).unwrap();
            let t = ctx.tables();
            for x in ctx.elements() {
                let cx = x.code();
                assert_eq!(ctx.from_code(cx), x);
                assert_eq!(t.trace(cx), x.trace_to_prime());
                assert_eq!(t.neg(cx), (-&x).code());
                if p != 2 {
                    assert_eq!(t.eta(cx), x.quadratic_character().unwrap());
                }
                if let Some(r) = t.sqrt(cx) {
                    assert_eq!(t.mul(r, r), cx);
                }
                for y in ctx.elements() {
                    let cy = y.code();
                    assert_eq!(t.add(cx, cy), (&x + &y).code());
                    assert_eq!(t.sub(cx, cy), (&x - &y).code());
                    assert_eq!(t.mul(cx, cy), (&x * &y).code());
                }
            }
        }
    }

    #[test]
    fn quadratic_roots_by_search() {
        for (p, m) in [(5u64, 2u32), (2, 3), (3, 2), (7, 1)] {
            let ctx = build_field_context(p, m).unwrap();
            let t = ctx.tables();
            for a in t.codes().step_by(3) {
                for b in t.codes() {
                    for c in t.codes().step_by(2) {
                        let mut found: Vec<Code> = t
                            .codes()
                            .filter(|&x| {
                                t.add(t.mul(a, t.mul(x, x)), t.add(t.mul(b, x), c)) == 0
                            })
                            .collect();
                        match t.quadratic_roots(a, b, c) {
                            None => assert_eq!(found.len() as u64, t.order()),
                            Some(mut roots) => {
                                roots.sort();
                                found.sort();
                                assert_eq!(roots, found, "a={a} b={b} c={c}");
                            }
                        }
                    }
                }
            }
        }
    }
}
