use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use super::poly;
use super::tables::{Code, LogTables};
use crate::arith::{checked_prime_power, prime_factors, PrimeModulus};
use crate::error::{Error, Result};

/// Element counts above this are refused; codes and packed indices are `u32`.
pub const MAX_FIELD_ORDER: u64 = 1 << 31;

/// GF(p^k) presented as GF(p)[x] / (f) for a monic irreducible `f`.
///
/// Immutable once built. Element `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` has
/// packed index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`; that index order is the
/// element ordering used by the primitive-element search.
pub struct FieldContext {
    p: u32,
    degree: u32,
    order: u64,
    modulus: Vec<u32>,
    generator: Vec<u32>,
    tables: OnceLock<LogTables>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

/// Builds GF(p^m) with the lexicographically smallest monic irreducible
/// modulus (coefficients compared from the constant term upward) and the
/// first primitive element in packed-index order.
pub fn build_field_context(p: u64, m: u32) -> Result<Arc<FieldContext>> {
    let prime = PrimeModulus::new(p)?.get();
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = field_order(prime, m)?;
    let modulus = smallest_irreducible(prime, m);
    FieldContext::assemble(prime, m, order, modulus)
}

fn field_order(p: u32, m: u32) -> Result<u64> {
    match checked_prime_power(p, m) {
        Some(order) if order <= MAX_FIELD_ORDER => Ok(order),
        _ => Err(Error::TooLarge {
            q: checked_prime_power(p, m).unwrap_or(u64::MAX),
            limit: MAX_FIELD_ORDER,
        }),
    }
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    (0..count)
        .map(|rank| {
            // The constant term is the most significant digit of `rank`.
            let mut f = vec![0u32; m as usize + 1];
            let mut t = rank;
            for i in (0..m as usize).rev() {
                f[i] = (t % p as u64) as u32;
                t /= p as u64;
            }
            f[m as usize] = 1;
            f
        })
        .find(|f| poly::is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

impl FieldContext {
    /// Builds a context over an explicit modulus (monic, low degree first).
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Arc<Self>> {
        let prime = PrimeModulus::new(p)?.get();
        if modulus.len() < 2 {
            return Err(Error::ZeroDegree);
        }
        let degree = (modulus.len() - 1) as u32;
        if modulus.iter().any(|&c| c >= prime) || !poly::is_irreducible(modulus, prime) {
            return Err(Error::ReducibleModulus { p: prime, degree });
        }
        let order = field_order(prime, degree)?;
        Self::assemble(prime, degree, order, modulus.to_vec())
    }

    fn assemble(p: u32, degree: u32, order: u64, modulus: Vec<u32>) -> Result<Arc<Self>> {
        let mut ctx = FieldContext {
            p,
            degree,
            order,
            modulus,
            generator: Vec::new(),
            tables: OnceLock::new(),
        };
        ctx.generator = ctx.find_generator();
        Ok(Arc::new(ctx))
    }

    fn find_generator(&self) -> Vec<u32> {
        let n = self.order - 1;
        let cofactors: Vec<u64> = prime_factors(n).into_iter().map(|l| n / l).collect();
        let one = self.coords_of(1);
        (1..self.order)
            .map(|idx| self.coords_of(idx))
            .find(|g| {
                cofactors
                    .iter()
                    .all(|&e| self.pow_coords(g, e) != one)
            })
            .expect("GF(p^k)* is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements, p^degree.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub(crate) fn generator_coords(&self) -> &[u32] {
        &self.generator
    }

    pub fn generator(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            ctx: Arc::clone(self),
            coords: self.generator.clone(),
        }
    }

    /// Log/Zech tables, built on first use.
    pub fn tables(&self) -> &LogTables {
        self.tables.get_or_init(|| LogTables::build(self))
    }

    pub(crate) fn coords_of(&self, mut index: u64) -> Vec<u32> {
        let mut c = vec![0u32; self.degree as usize];
        for slot in c.iter_mut() {
            *slot = (index % self.p as u64) as u32;
            index /= self.p as u64;
        }
        c
    }

    pub(crate) fn index_of(&self, coords: &[u32]) -> u64 {
        coords
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    pub(crate) fn mul_coords(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let r = poly::rem(&poly::mul(a, b, self.p), &self.modulus, self.p);
        self.pad(r)
    }

    pub(crate) fn pow_coords(&self, base: &[u32], mut exp: u64) -> Vec<u32> {
        let mut acc = self.coords_of(1);
        let mut b = base.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_coords(&acc, &b);
            }
            b = self.mul_coords(&b, &b);
            exp >>= 1;
        }
        acc
    }

    fn pad(&self, mut c: Vec<u32>) -> Vec<u32> {
        c.resize(self.degree as usize, 0);
        c
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.from_index(0)
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_index(1)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_index(n.rem_euclid(self.p as i64) as u64)
    }

    /// Element with packed index `index` (must be below the field order).
    pub fn from_index(self: &Arc<Self>, index: u64) -> FieldElement {
        assert!(index < self.order, "packed index out of range");
        FieldElement {
            ctx: Arc::clone(self),
            coords: self.coords_of(index),
        }
    }

    pub fn from_coords(self: &Arc<Self>, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() > self.degree as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidInput(format!(
                "coordinates {coords:?} do not describe an element of GF({}^{})",
                self.p, self.degree
            )));
        }
        Ok(FieldElement {
            ctx: Arc::clone(self),
            coords: self.pad(coords.to_vec()),
        })
    }

    pub fn from_code(self: &Arc<Self>, code: Code) -> FieldElement {
        self.from_index(self.tables().to_packed(code))
    }

    /// All elements in packed-index order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |i| self.from_index(i))
    }
}

/// An element of GF(p^k), stored by its polynomial coordinates.
#[derive(Clone)]
pub struct FieldElement {
    ctx: Arc<FieldContext>,
    coords: Vec<u32>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in GF({}^{})", self.coords, self.ctx.p, self.ctx.degree)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn index(&self) -> u64 {
        self.ctx.index_of(&self.coords)
    }

    pub fn code(&self) -> Code {
        self.ctx.tables().from_packed(self.index())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// The constant coordinate when the element lies in the prime field.
    pub fn as_prime_residue(&self) -> Option<u32> {
        if self.coords[1..].iter().all(|&c| c == 0) {
            Some(self.coords[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx),
            "field elements from different contexts"
        );
    }

    fn with_coords(&self, coords: Vec<u32>) -> Self {
        FieldElement {
            ctx: Arc::clone(&self.ctx),
            coords,
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.with_coords(self.ctx.pow_coords(&self.coords, exp))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.ctx.order - 2))
        }
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.ctx.one();
        let mut ord = self.ctx.order - 1;
        for l in prime_factors(ord) {
            while ord.is_multiple_of(l) && self.pow(ord / l) == one {
                ord /= l;
            }
        }
        Some(ord)
    }

    /// Absolute trace to GF(p): `x + x^p + ... + x^(p^(k-1))`.
    pub fn trace_to_prime(&self) -> u32 {
        let mut acc = self.ctx.zero();
        let mut frob = self.clone();
        for _ in 0..self.ctx.degree {
            acc = &acc + &frob;
            frob = frob.pow(self.ctx.p as u64);
        }
        acc.as_prime_residue()
            .expect("the absolute trace lies in the prime field")
    }

    /// `x^q`; on GF(q^2) this is the conjugation fixing GF(q).
    pub fn frobenius_q(&self, q: u64) -> Self {
        self.pow(q)
    }

    /// Quadratic character: 0, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self) -> Result<i32> {
        if self.ctx.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if self.is_zero() {
            return Ok(0);
        }
        let e = self.pow((self.ctx.order - 1) / 2);
        if e == self.ctx.one() {
            Ok(1)
        } else {
            debug_assert_eq!(e, self.ctx.from_int(-1));
            Ok(-1)
        }
    }
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        let p = self.ctx.p;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        self.with_coords(coords)
    }
}

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.ctx.p;
        let coords = self.coords.iter().map(|&a| (p - a) % p).collect();
        self.with_coords(coords)
    }
}

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check(rhs);
        self.with_coords(self.ctx.mul_coords(&self.coords, &rhs.coords))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Free-function form of [`FieldElement::trace_to_prime`].
pub fn trace_to_prime(x: &FieldElement) -> u32 {
    x.trace_to_prime()
}

/// Free-function form of [`FieldElement::frobenius_q`].
pub fn frobenius_q(x: &FieldElement, q: u64) -> FieldElement {
    x.frobenius_q(q)
}

/// Free-function form of [`FieldElement::quadratic_character`].
pub fn quadratic_character(x: &FieldElement) -> Result<i32> {
    x.quadratic_character()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_generators() {
        assert_eq!(build_field_context(5, 1).unwrap().generator().coords(), &[2]);
        assert_eq!(build_field_context(7, 1).unwrap().generator().coords(), &[3]);
        assert!(matches!(build_field_context(9, 1), Err(Error::NonPrime(9))));
        assert!(matches!(build_field_context(5, 0), Err(Error::ZeroDegree)));
    }

    #[test]
    fn generator_is_primitive() {
        for (p, m) in [(5u64, 2u32), (2, 4), (3, 3), (7, 2), (11, 1)] {
            let ctx = build_field_context(p, m).unwrap();
            let n = ctx.order() - 1;
            assert_eq!(ctx.generator().multiplicative_order(), Some(n));
            let mut seen = std::collections::HashSet::new();
            let mut x = ctx.one();
            for _ in 0..n {
                assert!(seen.insert(x.index()));
                x = &x * &ctx.generator();
            }
        }
    }

    #[test]
    fn trace_examples() {
        let ctx = build_field_context(5, 2).unwrap();
        assert_eq!(ctx.zero().trace_to_prime(), 0);
        assert_eq!(ctx.from_int(3).trace_to_prime(), 1);
        for x in ctx.elements() {
            let direct = &x + &x.pow(5);
            assert_eq!(direct.as_prime_residue(), Some(x.trace_to_prime()));
        }
    }

    #[test]
    fn frobenius_examples() {
        let ctx = build_field_context(3, 4).unwrap();
        let q = 9;
        for x in ctx.elements() {
            assert_eq!(x.frobenius_q(q).frobenius_q(q), x);
        }
        let sub = ctx.generator().pow(10);
        assert_eq!(sub.frobenius_q(q), sub);
        let unit = ctx.generator().pow(8);
        assert_eq!(unit.frobenius_q(q), unit.inv().unwrap());
    }

    #[test]
    fn quadratic_character_examples() {
        let ctx = build_field_context(11, 1).unwrap();
        assert_eq!(ctx.one().quadratic_character(), Ok(1));
        assert_eq!(ctx.zero().quadratic_character(), Ok(0));
        assert_eq!(ctx.from_int(5).quadratic_character(), Ok(1));
        let even = build_field_context(2, 3).unwrap();
        assert_eq!(even.one().quadratic_character(), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn explicit_modulus() {
        // x^2 + 2 is irreducible over GF(5); x^2 - 1 is not.
        let ctx = FieldContext::with_modulus(5, &[2, 0, 1]).unwrap();
        assert_eq!(ctx.order(), 25);
        assert!(FieldContext::with_modulus(5, &[4, 0, 1]).is_err());
        assert!(ctx.from_coords(&[5]).is_err());
    }
}
