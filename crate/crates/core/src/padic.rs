//! `p`-adically factored residues: `unit * p^val` with the unit known modulo
//! `p^e`.
//!
//! Products and quotients are exact, so factorials and binomials that `p`
//! divides can be multiplied out before anything is truncated. There is no
//! addition on this type; convert with [`FactoredResidue::to_residue`] first.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Div, Mul};

use crate::modular::{PrimeCtx, Residue};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactoredResidue {
    unit: Residue,
    val: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactoredOp {
    Mul,
    Div,
}

/// Factors a nonzero integer as `p^v * u` with the sign kept in `u`.
pub fn factored_of_int(z: i128, ctx: &PrimeCtx) -> Result<FactoredResidue> {
    if z == 0 {
        return Err(Error::ZeroInput);
    }
    let p = ctx.p() as i128;
    let mut z = z;
    let mut val = 0i64;
    while z % p == 0 {
        z /= p;
        val += 1;
    }
    Ok(FactoredResidue { unit: ctx.int128(z), val })
}

impl FactoredResidue {
    /// Builds from a unit residue and a valuation.
    pub fn new(unit: Residue, val: i64) -> Result<Self> {
        if !unit.is_unit() {
            return Err(Error::NotAUnit(format!("{unit}")));
        }
        Ok(Self { unit, val })
    }

    pub fn one(ctx: &PrimeCtx) -> Self {
        Self { unit: ctx.one(), val: 0 }
    }

    #[inline]
    pub fn unit(&self) -> Residue {
        self.unit
    }

    #[inline]
    pub fn val(&self) -> i64 {
        self.val
    }

    #[inline]
    pub fn ctx(&self) -> &PrimeCtx {
        self.unit.ctx()
    }

    pub fn combine(op: FactoredOp, a: Self, b: Self) -> Result<Self> {
        if a.ctx() != b.ctx() {
            return Err(Error::CtxMismatch);
        }
        Ok(match op {
            FactoredOp::Mul => a * b,
            FactoredOp::Div => a / b,
        })
    }

    pub fn inv(&self) -> Self {
        Self { unit: self.unit.inv().expect("unit part is invertible"), val: -self.val }
    }

    pub fn powi(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { *self };
        let k = n.unsigned_abs();
        Self { unit: base.unit.pow(k), val: base.val * k as i64 }
    }

    pub fn neg(&self) -> Self {
        Self { unit: -self.unit, val: self.val }
    }

    /// Multiplies by a unit residue.
    pub fn scale(&self, u: Residue) -> Result<Self> {
        Ok(*self * Self::new(u, 0)?)
    }

    /// `unit * p^val mod p^e`, defined only for `val >= 0`.
    pub fn to_residue(&self) -> Result<Residue> {
        if self.val < 0 {
            return Err(Error::NegativeValuation(self.val));
        }
        let ctx = self.ctx();
        let shift = u32::try_from(self.val).unwrap_or(u32::MAX);
        Ok(self.unit * ctx.p_pow(shift))
    }
}

impl fmt::Display for FactoredResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}^{}", self.unit, self.ctx().p(), self.val)
    }
}

impl Mul for FactoredResidue {
    type Output = FactoredResidue;
    fn mul(self, rhs: Self) -> Self {
        Self { unit: self.unit * rhs.unit, val: self.val + rhs.val }
    }
}

impl Div for FactoredResidue {
    type Output = FactoredResidue;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

/// Legendre's formula `v_p(n!) = sum floor(n/p^i)`.
pub fn factorial_valuation(n: u64, p: u64) -> i64 {
    let mut v = 0;
    let mut q = n / p;
    while q > 0 {
        v += q as i64;
        q /= p;
    }
    v
}

fn unit_product(n: u64, ctx: &PrimeCtx) -> Residue {
    let p = ctx.p();
    let mut acc = ctx.one();
    for i in 1..=n {
        if i % p != 0 {
            acc *= ctx.int(i as i64);
        }
    }
    acc
}

/// `n!` as a factored residue, using `n! = p^{n/p} (n/p)! prod_{i<=n, p∤i} i`.
pub fn factorial_factored(n: u64, ctx: &PrimeCtx) -> FactoredResidue {
    let mut unit = ctx.one();
    let mut m = n;
    while m > 0 {
        unit *= unit_product(m, ctx);
        m /= ctx.p();
    }
    FactoredResidue { unit, val: factorial_valuation(n, ctx.p()) }
}

/// Prefix products of the `p`-free parts of `1..=limit`, for `O(log n)`
/// factorials.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    ctx: PrimeCtx,
    prefix: Vec<Residue>,
}

impl FactorialTable {
    pub fn new(ctx: &PrimeCtx, limit: u64) -> Self {
        let p = ctx.p();
        let mut prefix = Vec::with_capacity(limit as usize + 1);
        let mut acc = ctx.one();
        prefix.push(acc);
        for i in 1..=limit {
            if i % p != 0 {
                acc *= ctx.int(i as i64);
            }
            prefix.push(acc);
        }
        Self { ctx: *ctx, prefix }
    }

    pub fn ctx(&self) -> &PrimeCtx {
        &self.ctx
    }

    pub fn limit(&self) -> u64 {
        self.prefix.len() as u64 - 1
    }

    pub fn factorial(&self, n: u64) -> FactoredResidue {
        if n > self.limit() {
            return factorial_factored(n, &self.ctx);
        }
        let mut unit = self.ctx.one();
        let mut m = n;
        while m > 0 {
            unit *= self.prefix[m as usize];
            m /= self.ctx.p();
        }
        FactoredResidue { unit, val: factorial_valuation(n, self.ctx.p()) }
    }

    pub fn binomial(&self, a: i64, b: i64) -> Result<FactoredResidue> {
        if b < 0 || b > a {
            return Err(Error::OutOfRange(format!("C({a},{b})")));
        }
        let (a, b) = (a as u64, b as u64);
        Ok(self.factorial(a) / (self.factorial(b) * self.factorial(a - b)))
    }
}

pub fn binomial_factored(a: i64, b: i64, ctx: &PrimeCtx) -> Result<FactoredResidue> {
    if b < 0 || b > a {
        return Err(Error::OutOfRange(format!("C({a},{b})")));
    }
    let (a, b) = (a as u64, b as u64);
    Ok(factorial_factored(a, ctx) / (factorial_factored(b, ctx) * factorial_factored(a - b, ctx)))
}

/// Rising factorial `(a/b)_k = prod_{i<k} (a + i b) / b^k`.
pub fn rising_factorial_rational(a: i64, b: i64, k: u64, ctx: &PrimeCtx) -> Result<FactoredResidue> {
    if b.rem_euclid(ctx.p() as i64) == 0 {
        return Err(Error::NotAUnit(format!("{b}")));
    }
    let mut acc = FactoredResidue::one(ctx);
    for i in 0..k as i128 {
        let f = a as i128 + i * b as i128;
        if f == 0 {
            return Err(Error::ZeroFactor);
        }
        acc = acc * factored_of_int(f, ctx)?;
    }
    let denom = FactoredResidue { unit: ctx.int(b), val: 0 }.powi(k as i64);
    Ok(acc / denom)
}
