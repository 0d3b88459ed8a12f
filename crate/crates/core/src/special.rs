//! Euler and Bernoulli numbers modulo `p`, Bernoulli and Euler polynomials
//! at rational points, and the exact rational counterparts.
//!
//! Both number systems use the same recurrences:
//! `sum_{j=0}^{n} C(2n,2j) E_{2j} = 0` and `sum_{k=0}^{n} C(n+1,k) B_k = 0`.
//! Euler polynomials are only ever reached through
//! `E_{n}(x) = 2^{n+1}/(n+1) (B_{n+1}((x+1)/2) - B_{n+1}(x/2))`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::modular::{make_ctx, PrimeCtx, Residue};
use crate::rational::{self, BigRat};
use crate::{Error, Result};

/// `E_0..=E_{n_max}` modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    ctx: PrimeCtx,
    values: Vec<Residue>,
}

impl EulerTable {
    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn values(&self) -> &[Residue] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<Residue> {
        self.values.get(n).copied()
    }
}

/// `B_0..=B_{n_max}` modulo `p`, `n_max <= p - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    ctx: PrimeCtx,
    values: Vec<Residue>,
}

fn pascal_next(row: &mut Vec<u64>, p: u64) {
    row.push(1);
    for j in (1..row.len() - 1).rev() {
        let s = row[j] + row[j - 1];
        row[j] = if s >= p { s - p } else { s };
    }
}

fn ctx_at_least_5(p: u64) -> Result<PrimeCtx> {
    if p < 5 {
        return Err(Error::OutOfRange(format!("special numbers need p >= 5, got {p}")));
    }
    make_ctx(p, 1)
}

pub fn euler_numbers_mod_p(p: u64, n_max: usize) -> Result<EulerTable> {
    let ctx = ctx_at_least_5(p)?;
    let mut values = vec![ctx.zero(); n_max + 1];
    values[0] = ctx.one();
    let mut row: Vec<u64> = vec![1];
    for r in 1..=n_max {
        pascal_next(&mut row, p);
        if r % 2 == 1 {
            continue;
        }
        let mut acc = ctx.zero();
        for j in (0..r).step_by(2) {
            acc += ctx.int(row[j] as i64) * values[j];
        }
        values[r] = -acc;
    }
    Ok(EulerTable { ctx, values })
}

pub fn bernoulli_numbers_mod_p(p: u64, n_max: usize) -> Result<BernoulliTable> {
    let ctx = ctx_at_least_5(p)?;
    if n_max as u64 > p - 2 {
        return Err(Error::OutOfRange(format!("B_n mod {p} needs n <= {}, got {n_max}", p - 2)));
    }
    let mut values: Vec<Residue> = Vec::with_capacity(n_max + 1);
    let mut row: Vec<u64> = vec![1, 1];
    values.push(ctx.one());
    for n in 1..=n_max {
        // row becomes C(n+1, .)
        pascal_next(&mut row, p);
        let mut acc = ctx.zero();
        for (k, b) in values.iter().enumerate() {
            acc += ctx.int(row[k] as i64) * *b;
        }
        let b = -acc * ctx.int((n + 1) as i64).inv()?;
        values.push(b);
    }
    Ok(BernoulliTable { ctx, values })
}

impl BernoulliTable {
    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Residue] {
        &self.values
    }

    fn point(&self, num: i64, den: i64) -> Result<Residue> {
        let d = self.ctx.int(den);
        if !d.is_unit() {
            return Err(Error::NotAUnit(format!("{den}")));
        }
        Ok(self.ctx.int(num) * d.inv()?)
    }

    fn eval(&self, n: usize, x: Residue) -> Result<Residue> {
        if n > self.n_max() {
            return Err(Error::OutOfRange(format!("B_{n} with table up to {}", self.n_max())));
        }
        let ctx = self.ctx;
        // sum_k C(n,k) B_k x^{n-k}; n < p so every C(n,k) step divides by a unit.
        let mut binom = ctx.one();
        let mut acc = ctx.zero();
        for k in 0..=n {
            acc += binom * self.values[k] * x.pow((n - k) as u64);
            if k < n {
                binom = binom * ctx.int((n - k) as i64) * ctx.int((k + 1) as i64).inv()?;
            }
        }
        Ok(acc)
    }

    /// `B_n(num/den) mod p`.
    pub fn poly(&self, n: usize, num: i64, den: i64) -> Result<Residue> {
        let x = self.point(num, den)?;
        self.eval(n, x)
    }

    /// `E_n(num/den) mod p` through the Bernoulli-difference formula.
    pub fn euler_poly(&self, n: usize, num: i64, den: i64) -> Result<Residue> {
        let ctx = self.ctx;
        let m = n + 1;
        if m > self.n_max() {
            return Err(Error::OutOfRange(format!("E_{n}(x) needs B_{m}, table up to {}", self.n_max())));
        }
        let den2 = den
            .checked_mul(2)
            .ok_or_else(|| Error::OutOfRange(format!("denominator {den}")))?;
        let hi = self.poly(m, num + den, den2)?;
        let lo = self.poly(m, num, den2)?;
        let scale = ctx.int(2).pow(m as u64) * ctx.int(m as i64).inv()?;
        Ok(scale * (hi - lo))
    }
}

pub fn bernoulli_poly_mod_p(n: usize, x_num: i64, x_den: i64, p: u64) -> Result<Residue> {
    let ctx = ctx_at_least_5(p)?;
    if n as u64 > p - 2 {
        return Err(Error::OutOfRange(format!("B_{n} mod {p}")));
    }
    if !ctx.int(x_den).is_unit() {
        return Err(Error::NotAUnit(format!("{x_den}")));
    }
    bernoulli_numbers_mod_p(p, n)?.poly(n, x_num, x_den)
}

pub fn euler_poly_mod_p(n: usize, x_num: i64, x_den: i64, p: u64) -> Result<Residue> {
    let ctx = ctx_at_least_5(p)?;
    if (n + 1) as u64 > p - 2 {
        return Err(Error::OutOfRange(format!("E_{n}(x) mod {p}")));
    }
    if !ctx.int(x_den).is_unit() {
        return Err(Error::NotAUnit(format!("{x_den}")));
    }
    bernoulli_numbers_mod_p(p, n + 1)?.euler_poly(n, x_num, x_den)
}

/// Exact Bernoulli numbers `B_0..=B_{n_max}` with `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct ExactBernoulli {
    values: Vec<BigRat>,
}

impl ExactBernoulli {
    pub fn new(n_max: usize) -> Self {
        let mut values: Vec<BigRat> = Vec::with_capacity(n_max + 1);
        values.push(BigRat::one());
        for n in 1..=n_max {
            let mut acc = BigRat::zero();
            for (k, b) in values.iter().enumerate() {
                acc += b * rational::big(rational::binomial(n as u64 + 1, k as u64));
            }
            values.push(-acc / rational::int(n as i64 + 1));
        }
        Self { values }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn number(&self, n: usize) -> &BigRat {
        &self.values[n]
    }

    /// `B_n(x)`; panics if `n` is beyond the table.
    pub fn poly(&self, n: usize, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        let mut xp = BigRat::one();
        // sum_k C(n,k) B_{n-k} x^k
        for k in 0..=n {
            acc += &self.values[n - k] * rational::big(rational::binomial(n as u64, k as u64)) * &xp;
            xp *= x;
        }
        acc
    }

    pub fn euler_poly(&self, n: usize, x: &BigRat) -> BigRat {
        let m = n + 1;
        let half = rational::rat(1, 2);
        let hi = self.poly(m, &((x + BigRat::one()) * &half));
        let lo = self.poly(m, &(x * &half));
        rational::pow2(m as i64) / rational::int(m as i64) * (hi - lo)
    }
}

pub fn bernoulli_poly_exact(n: usize, x: &BigRat) -> BigRat {
    ExactBernoulli::new(n).poly(n, x)
}

pub fn euler_poly_exact(n: usize, x: &BigRat) -> BigRat {
    ExactBernoulli::new(n + 1).euler_poly(n, x)
}

/// Exact Euler numbers `E_0..=E_{n_max}` (integers).
pub fn euler_numbers_exact(n_max: usize) -> Vec<BigInt> {
    let mut values = vec![BigInt::zero(); n_max + 1];
    values[0] = BigInt::one();
    for r in (2..=n_max).step_by(2) {
        let mut acc = BigInt::zero();
        for j in (0..r).step_by(2) {
            acc += rational::binomial(r as u64, j as u64) * &values[j];
        }
        values[r] = -acc;
    }
    values
}
