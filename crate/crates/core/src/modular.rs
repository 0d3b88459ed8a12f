//! Residue arithmetic modulo a prime power `p^e`.
//!
//! Moduli stay below `2^63` and products go through `u128`, so every
//! operation is exact.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigUint;

use crate::primes::is_prime;
use crate::{Error, Result};

const MAX_EXPONENT: u32 = 8;
const MODULUS_LIMIT: u128 = 1 << 63;

/// A validated odd prime `p`, an exponent `e` and the modulus `p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeCtx {
    p: u64,
    e: u32,
    m: u64,
}

impl PrimeCtx {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 3 {
            return Err(Error::UnsupportedPrime(p));
        }
        if !(1..=MAX_EXPONENT).contains(&e) {
            return Err(Error::InvalidExponent(e));
        }
        if !is_prime(p) {
            return Err(Error::CompositeP(p));
        }
        let mut m: u128 = 1;
        for _ in 0..e {
            m *= p as u128;
            if m >= MODULUS_LIMIT {
                return Err(Error::Overflow { p, e });
            }
        }
        Ok(Self { p, e, m: m as u64 })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The same prime at another exponent.
    pub fn with_exponent(&self, e: u32) -> Result<Self> {
        Self::new(self.p, e)
    }

    pub fn int(&self, z: i64) -> Residue {
        self.int128(z as i128)
    }

    pub fn int128(&self, z: i128) -> Residue {
        let m = self.m as i128;
        Residue { value: (((z % m) + m) % m) as u64, ctx: *self }
    }

    pub fn zero(&self) -> Residue {
        Residue { value: 0, ctx: *self }
    }

    pub fn one(&self) -> Residue {
        Residue { value: 1 % self.m, ctx: *self }
    }

    /// `p^k mod m`; zero once `k >= e`.
    pub fn p_pow(&self, k: u32) -> Residue {
        if k >= self.e {
            self.zero()
        } else {
            Residue { value: self.p.pow(k), ctx: *self }
        }
    }

    /// Maps a residue of a finer modulus (same prime, larger exponent) down to this one.
    pub fn reduce(&self, r: Residue) -> Result<Residue> {
        if r.ctx.p != self.p || r.ctx.e < self.e {
            return Err(Error::CtxMismatch);
        }
        Ok(Residue { value: r.value % self.m, ctx: *self })
    }

    #[inline]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.m as u128) as u64
    }
}

impl fmt::Display for PrimeCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

pub fn make_ctx(p: u64, e: u32) -> Result<PrimeCtx> {
    PrimeCtx::new(p, e)
}

/// An integer in `[0, p^e)` under a fixed [`PrimeCtx`].
///
/// The operator impls panic when the two sides carry different contexts;
/// [`Residue::combine`] is the checked form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    ctx: PrimeCtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueOp {
    Add,
    Sub,
    Mul,
}

pub fn residue_of_int(z: i64, ctx: &PrimeCtx) -> Residue {
    ctx.int(z)
}

impl Residue {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn ctx(&self) -> &PrimeCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.value % self.ctx.p != 0
    }

    pub fn combine(op: ResidueOp, a: Residue, b: Residue) -> Result<Residue> {
        if a.ctx != b.ctx {
            return Err(Error::CtxMismatch);
        }
        Ok(match op {
            ResidueOp::Add => a + b,
            ResidueOp::Sub => a - b,
            ResidueOp::Mul => a * b,
        })
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Residue> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(format!("{}", self.value)));
        }
        let m = self.ctx.m as i128;
        let (mut r0, mut r1) = (m, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.ctx.int128(t0))
    }

    pub fn pow(&self, mut n: u64) -> Residue {
        let ctx = self.ctx;
        let mut base = self.value;
        let mut acc = 1 % ctx.m;
        while n > 0 {
            if n & 1 == 1 {
                acc = ctx.mul_raw(acc, base);
            }
            base = ctx.mul_raw(base, base);
            n >>= 1;
        }
        Residue { value: acc, ctx }
    }

    /// Integer power allowing negative exponents on units.
    pub fn powi(&self, n: i64) -> Result<Residue> {
        if n >= 0 {
            Ok(self.pow(n as u64))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// `self / rhs` for a unit `rhs`.
    pub fn div(&self, rhs: Residue) -> Result<Residue> {
        if self.ctx != rhs.ctx {
            return Err(Error::CtxMismatch);
        }
        Ok(*self * rhs.inv()?)
    }

    /// Symmetric representative in `(-m/2, m/2]`.
    pub fn signed(&self) -> i128 {
        let v = self.value as i128;
        let m = self.ctx.m as i128;
        if 2 * v > m {
            v - m
        } else {
            v
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        assert_eq!(self.ctx, rhs.ctx, "residue context mismatch");
        let m = self.ctx.m;
        let s = self.value + rhs.value;
        Residue { value: if s >= m { s - m } else { s }, ctx: self.ctx }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        assert_eq!(self.ctx, rhs.ctx, "residue context mismatch");
        let m = self.ctx.m;
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + m - rhs.value
        };
        Residue { value: v, ctx: self.ctx }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        assert_eq!(self.ctx, rhs.ctx, "residue context mismatch");
        Residue { value: self.ctx.mul_raw(self.value, rhs.value), ctx: self.ctx }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.ctx.zero() - self
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl SubAssign for Residue {
    fn sub_assign(&mut self, rhs: Residue) {
        *self = *self - rhs;
    }
}

impl MulAssign for Residue {
    fn mul_assign(&mut self, rhs: Residue) {
        *self = *self * rhs;
    }
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> i8 {
    let pi = p as i128;
    let a = ((a as i128 % pi + pi) % pi) as u64;
    if a == 0 {
        return 0;
    }
    let mut base = a as u128;
    let mut n = (p - 1) / 2;
    let mut acc: u128 = 1;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        n >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Inverses of `1..=n` modulo `p^e`; index 0 holds zero.
pub fn inverses_upto(n: u64, ctx: &PrimeCtx) -> Result<Vec<Residue>> {
    if n >= ctx.p {
        return Err(Error::NotAUnit(format!("{}", ctx.p)));
    }
    // Prefix products then one inversion.
    let mut prefix = Vec::with_capacity(n as usize + 1);
    prefix.push(ctx.one());
    for i in 1..=n {
        let last = prefix[i as usize - 1];
        prefix.push(last * ctx.int(i as i64));
    }
    let mut out = alloc::vec![ctx.zero(); n as usize + 1];
    let mut running = prefix[n as usize].inv()?;
    for i in (1..=n as usize).rev() {
        out[i] = running * prefix[i - 1];
        running *= ctx.int(i as i64);
    }
    Ok(out)
}

/// Prefix sums `[S_0, S_1, ..., S_n]` with `S_j = sum_{k<=j} s(k)/k^order`,
/// `s(k) = (-1)^k` when `signed`, else 1.
pub fn harmonic_prefix(n: u64, order: u32, signed: bool, ctx: &PrimeCtx) -> Result<Vec<Residue>> {
    if !(1..=2).contains(&order) {
        return Err(Error::OutOfRange(format!("harmonic order {order}")));
    }
    let inv = inverses_upto(n, ctx)?;
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = ctx.zero();
    out.push(acc);
    for k in 1..=n as usize {
        let mut term = inv[k];
        if order == 2 {
            term *= inv[k];
        }
        if signed && k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `sum_{k=1}^{n} s(k)/k^order mod p^e`; requires `n < p`.
pub fn harmonic_sum(n: u64, order: u32, signed: bool, ctx: &PrimeCtx) -> Result<Residue> {
    Ok(*harmonic_prefix(n, order, signed, ctx)?.last().expect("nonempty"))
}

/// Fermat quotient `(a^(p-1) - 1)/p` modulo `p^e`.
///
/// The power is taken modulo `p^(e+1)` so that the exact division by `p`
/// leaves a value correct modulo `p^e`.
pub fn fermat_quotient(a: i64, ctx: &PrimeCtx) -> Result<Residue> {
    let p = ctx.p;
    if a.rem_euclid(p as i64) == 0 {
        return Err(Error::NotAUnit(format!("{a}")));
    }
    let big_m = BigUint::from(ctx.m) * BigUint::from(p);
    let base = {
        let m = ctx.m as i128 * p as i128;
        BigUint::from(((a as i128 % m + m) % m) as u128)
    };
    let r = base.modpow(&BigUint::from(p - 1), &big_m);
    let r = (r + &big_m - 1u32) % &big_m;
    let q: BigUint = r / p;
    let digits = q.to_u64_digits();
    let v = digits.first().copied().unwrap_or(0);
    debug_assert!(digits.len() <= 1);
    Ok(ctx.int128(v as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, e: u32) -> PrimeCtx {
        make_ctx(p, e).unwrap()
    }

    #[test]
    fn make_ctx_examples() {
        assert_eq!(ctx(5, 4).modulus(), 625);
        assert_eq!(make_ctx(4, 2), Err(Error::CompositeP(4)));
        assert_eq!(make_ctx(65537, 4), Err(Error::Overflow { p: 65537, e: 4 }));
        assert_eq!(make_ctx(2, 1), Err(Error::UnsupportedPrime(2)));
        assert_eq!(make_ctx(5, 0), Err(Error::InvalidExponent(0)));
        assert_eq!(make_ctx(5, 9), Err(Error::InvalidExponent(9)));
        // 65521^3 < 2^63 while 65537^4 is well beyond it.
        assert!(make_ctx(65521, 3).is_ok());
    }

    #[test]
    fn residue_of_int_examples() {
        assert_eq!(residue_of_int(-1, &ctx(5, 2)).value(), 24);
        assert_eq!(residue_of_int(625, &ctx(5, 4)).value(), 0);
        assert_eq!(residue_of_int(126, &ctx(5, 3)).value(), 1);
    }

    #[test]
    fn combine_examples() {
        let c25 = ctx(5, 2);
        let c625 = ctx(5, 4);
        let r = |op, a, b, c: &PrimeCtx| Residue::combine(op, c.int(a), c.int(b)).unwrap().value();
        assert_eq!(r(ResidueOp::Add, 3, 24, &c25), 2);
        assert_eq!(r(ResidueOp::Mul, 24, 24, &c25), 1);
        assert_eq!(r(ResidueOp::Sub, 0, 7, &c625), 618);
        assert_eq!(
            Residue::combine(ResidueOp::Add, c25.int(1), c625.int(1)),
            Err(Error::CtxMismatch)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ctx(5, 4).int(4).inv().unwrap().value(), 469);
        assert_eq!(ctx(5, 2).int(8).inv().unwrap().value(), 22);
        assert!(matches!(ctx(5, 4).int(5).inv(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn inverse_exhaustive_small_moduli() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for e in 1..=4 {
                let c = ctx(p, e);
                for a in 1..c.modulus() {
                    if a % p == 0 {
                        continue;
                    }
                    let r = c.int(a as i64);
                    assert_eq!((r * r.inv().unwrap()).value(), 1, "p={p} e={e} a={a}");
                }
            }
        }
    }

    #[test]
    fn pow_examples() {
        assert_eq!(ctx(5, 4).int(2).pow(4).value(), 16);
        assert_eq!(ctx(5, 2).int(2).pow(5 - 1).value(), 16);
        assert_eq!(ctx(7, 3).int(123).pow(0).value(), 1);
        assert_eq!(ctx(7, 3).int(0).pow(0).value(), 1);
        let c = ctx(5, 2);
        assert_eq!(c.int(2).powi(-3).unwrap(), c.int(8).inv().unwrap());
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(2, 7), 1);
        assert_eq!(legendre_symbol(-2, 5), -1);
        assert_eq!(legendre_symbol(10, 5), 0);
    }

    #[test]
    fn legendre_multiplicative() {
        for p in crate::primes::primes_in(3, 97) {
            for a in 1..p as i64 {
                for b in 1..p as i64 {
                    assert_eq!(
                        legendre_symbol(a * b, p),
                        legendre_symbol(a, p) * legendre_symbol(b, p)
                    );
                }
            }
            let expect = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
            assert_eq!(legendre_symbol(-1, p), expect);
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_sum(4, 1, false, &ctx(5, 2)).unwrap().value(), 0);
        assert_eq!(harmonic_sum(2, 1, false, &ctx(7, 1)).unwrap().value(), 5);
        assert_eq!(harmonic_sum(2, 1, true, &ctx(7, 1)).unwrap().value(), 3);
        assert_eq!(harmonic_sum(0, 2, true, &ctx(7, 1)).unwrap().value(), 0);
        assert!(matches!(harmonic_sum(5, 1, false, &ctx(5, 2)), Err(Error::NotAUnit(_))));
        assert!(matches!(harmonic_sum(2, 3, false, &ctx(5, 2)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(2, &ctx(5, 1)).unwrap().value(), 3);
        assert_eq!(fermat_quotient(2, &ctx(7, 1)).unwrap().value(), 2);
        assert_eq!(fermat_quotient(1, &ctx(11, 3)).unwrap().value(), 0);
        // (2^12 - 1)/13 = 315
        assert_eq!(fermat_quotient(2, &ctx(13, 3)).unwrap().value(), 315);
        assert_eq!(fermat_quotient(-2, &ctx(13, 3)).unwrap().value(), 315);
        assert!(fermat_quotient(26, &ctx(13, 1)).is_err());
    }

    #[test]
    fn reduce_to_coarser_modulus() {
        let fine = ctx(7, 4);
        let coarse = ctx(7, 2);
        assert_eq!(coarse.reduce(fine.int(2400)).unwrap().value(), 2400 % 49);
        assert_eq!(fine.reduce(coarse.int(1)), Err(Error::CtxMismatch));
    }
}
