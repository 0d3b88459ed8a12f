//! Residue evaluators for the congruence entries.
//!
//! Terms are built as [`FactoredResidue`]s and reduced to [`Residue`]s only
//! when they are accumulated.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::CheckId;
use crate::modular::{fermat_quotient, harmonic_prefix, legendre_symbol, PrimeCtx, Residue};
use crate::padic::{factored_of_int, rising_factorial_rational, FactorialTable, FactoredResidue};
use crate::tables::PrimeTables;
use crate::wz::{f_term_mod, g_term_mod};
use crate::Result;

/// Both sides of a congruence modulo `p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub lhs: Residue,
    pub rhs: Residue,
    pub detail: Option<String>,
}

impl Evaluation {
    fn new(lhs: Residue, rhs: Residue) -> Self {
        Self { lhs, rhs, detail: None }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

struct At<'a> {
    ctx: PrimeCtx,
    p: u64,
    /// (p-1)/2
    h: u64,
    tables: &'a PrimeTables,
    facts: FactorialTable,
}

fn sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<'a> At<'a> {
    fn new(ctx: &PrimeCtx, tables: &'a PrimeTables) -> Self {
        let p = ctx.p();
        Self { ctx: *ctx, p, h: (p - 1) / 2, tables, facts: FactorialTable::new(ctx, 4 * p) }
    }

    fn int(&self, z: i64) -> Residue {
        self.ctx.int(z)
    }

    fn pp(&self, k: u32) -> Residue {
        self.ctx.p_pow(k)
    }

    /// `1/d` for a unit `d`.
    fn frac(&self, n: i64, d: i64) -> Result<Residue> {
        self.int(n).div(self.int(d))
    }

    fn fac(&self, z: i64) -> FactoredResidue {
        factored_of_int(z as i128, &self.ctx).expect("nonzero factor")
    }

    fn binom(&self, a: i64, b: i64) -> Result<FactoredResidue> {
        self.facts.binomial(a, b)
    }

    fn q(&self) -> Result<Residue> {
        fermat_quotient(2, &self.ctx)
    }

    fn leg(&self, a: i64) -> i64 {
        legendre_symbol(a, self.p) as i64
    }

    /// `(-1)^h`
    fn sh(&self) -> i64 {
        sign(self.h)
    }

    fn e_p3(&self) -> Result<Residue> {
        Ok(self.int(self.tables.e_p3()? as i64))
    }

    fn e_quarter(&self) -> Result<Residue> {
        Ok(self.int(self.tables.e_p3_quarter()? as i64))
    }

    fn harmonic(&self, n: u64, order: u32, signed: bool) -> Result<Vec<Residue>> {
        harmonic_prefix(n, order, signed, &self.ctx)
    }
}

/// Runs `f(k)` for each `k` and compares pointwise; reports the first
/// mismatch, or the last index when all agree.
fn pointwise<I, F>(ks: I, mut f: F) -> Result<Evaluation>
where
    I: IntoIterator<Item = u64>,
    F: FnMut(u64) -> Result<(Residue, Residue)>,
{
    let mut last = None;
    for k in ks {
        let (lhs, rhs) = f(k)?;
        let ev = Evaluation { lhs, rhs, detail: Some(format!("k={k}")) };
        if !ev.holds() {
            return Ok(ev);
        }
        last = Some(ev);
    }
    Ok(last.expect("nonempty index range"))
}

pub(super) fn evaluate(id: CheckId, ctx: &PrimeCtx, tables: &PrimeTables) -> Result<Evaluation> {
    let at = At::new(ctx, tables);
    use CheckId::*;
    match id {
        THM_1_1 => thm_1_1(&at),
        THM_1_2 => thm_1_2(&at, at.h),
        REMARK_1_2_FULL => thm_1_2(&at, at.p - 1),
        THM_1_3 => thm_1_3(&at),
        VH_ZUDILIN => vh_zudilin(&at),
        CXH_3K1 => cubic_binomial_sum(&at, 3, -8),
        SUN_4K1 => cubic_binomial_sum(&at, 4, -64),
        GUO_LIU => guo_liu(&at),
        WOLSTENHOLME_H1 => Ok(Evaluation::new(*at.harmonic(at.p - 1, 1, false)?.last().unwrap(), at.int(0))),
        WOLSTENHOLME_H2 => Ok(Evaluation::new(*at.harmonic(at.p - 1, 2, false)?.last().unwrap(), at.int(0))),
        BINOM_2P1P => Ok(Evaluation::new(at.binom(2 * at.p as i64 - 1, at.p as i64 - 1)?.to_residue()?, at.int(1))),
        LEM_2_2 => lem_2_2(&at),
        AUX_BINOM_P1 => aux_binom_p1(&at),
        SUM_ALT_INV => sum_alt_inv(&at),
        SUM_ALT_INV2 => sum_alt_inv2(&at),
        H_HALF => Ok(Evaluation::new(*at.harmonic(at.h, 1, false)?.last().unwrap(), -(at.int(2) * at.q()?))),
        H2_HALF => Ok(Evaluation::new(*at.harmonic(at.h, 2, false)?.last().unwrap(), at.int(0))),
        BINOM_TRANSFER => binom_transfer(&at),
        MORLEY => morley(&at),
        LEM_3_2 => lem_3_2(&at),
        LEM_3_3 => lem_3_3(&at),
        LEM_3_4 => lem_3_4(&at),
        TWO_POW_HALF => two_pow_half(&at),
        AUX_ODD_PRODUCT => aux_odd_product(&at),
        LEM_4_1 => lem_4_1(&at),
        BINOM_4P => Ok(Evaluation::new(at.binom(4 * at.p as i64 - 1, 2 * at.p as i64 - 1)?.to_residue()?, at.int(3))),
        LEM_4_3_A => lem_4_3_a(&at),
        LEM_4_3_B => lem_4_3_b(&at),
        LEM_4_4 => lem_4_4(&at),
        LEM_4_4_TERM => lem_4_4_term(&at),
        LEM_4_5 => lem_4_5(&at),
        LEM_4_6 => lem_4_6(&at),
        SIGMA_SUM_1 => sigma_sum_1(&at),
        SIGMA_SUM_2 => sigma_sum_2(&at),
        SIGMA_SUM_3 => sigma_sum_3(&at),
        other => Err(crate::Error::OutOfRange(format!("{other} is an exact identity"))),
    }
}

/// `sum_{n=0}^{top} (6n+1) C(2n,n)^3 / (-512)^n`
fn ramanujan_512(at: &At, top: u64) -> Result<Residue> {
    let base = at.fac(-512);
    let mut acc = at.int(0);
    for n in 0..=top {
        let c = at.binom(2 * n as i64, n as i64)?;
        let term = at.fac(6 * n as i64 + 1) * c * c * c * base.powi(-(n as i64));
        acc += term.to_residue()?;
    }
    Ok(acc)
}

fn thm_1_1(at: &At) -> Result<Evaluation> {
    let lhs = ramanujan_512(at, at.h)?;
    let rhs = at.int(at.p as i64 * at.leg(-2)) + at.pp(3) * at.frac(at.leg(2), 4)? * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn thm_1_3(at: &At) -> Result<Evaluation> {
    let lhs = ramanujan_512(at, at.p - 1)?;
    let rhs = at.int(at.p as i64 * at.leg(-2)) + at.pp(3) * at.frac(1, 16)? * at.e_quarter()?;
    Ok(Evaluation::new(lhs, rhs))
}

/// `sum_{k=0}^{top} C(2k,k)/2^k H_k^2` against `(-1)^h q^2 - E`.
fn thm_1_2(at: &At, top: u64) -> Result<Evaluation> {
    let hk = at.harmonic(top, 1, false)?;
    let half = at.fac(2).inv();
    let mut lhs = at.int(0);
    for k in 1..=top {
        let c = (at.binom(2 * k as i64, k as i64)? * half.powi(k as i64)).to_residue()?;
        lhs += c * hk[k as usize] * hk[k as usize];
    }
    let q = at.q()?;
    let rhs = at.int(at.sh()) * q * q - at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn vh_zudilin(at: &At) -> Result<Evaluation> {
    let mut lhs = at.int(0);
    for k in 0..=at.h {
        let ratio = rising_factorial_rational(1, 2, k, &at.ctx)? / at.facts.factorial(k);
        let term = at.fac(sign(k) * (4 * k as i64 + 1)) * ratio.powi(3);
        lhs += term.to_residue()?;
    }
    Ok(Evaluation::new(lhs, at.int(at.sh() * at.p as i64)))
}

/// `sum_{k=0}^{p-1} (a k + 1) C(2k,k)^3 / base^k` against `(-1)^h p + p^3 E`.
fn cubic_binomial_sum(at: &At, a: i64, base: i64) -> Result<Evaluation> {
    let base = at.fac(base);
    let mut lhs = at.int(0);
    for k in 0..at.p {
        let c = at.binom(2 * k as i64, k as i64)?;
        let term = at.fac(a * k as i64 + 1) * c * c * c * base.powi(-(k as i64));
        lhs += term.to_residue()?;
    }
    let rhs = at.int(at.sh() * at.p as i64) + at.pp(3) * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn guo_liu(at: &At) -> Result<Evaluation> {
    let top = (at.p + 1) / 2;
    let mut lhs = at.int(0);
    for k in 0..=top {
        let ratio = rising_factorial_rational(-1, 2, k, &at.ctx)? / at.facts.factorial(k);
        let term = at.fac(sign(k) * (4 * k as i64 - 1)) * ratio.powi(3);
        lhs += term.to_residue()?;
    }
    let rhs = at.int(at.p as i64 * sign(top)) + at.pp(3) * (at.int(2) - at.e_p3()?);
    Ok(Evaluation::new(lhs, rhs))
}

/// `sum_{k=1}^{h} (-1)^k H_k / k`
fn alt_harmonic_over_k(at: &At) -> Result<Residue> {
    let hk = at.harmonic(at.h, 1, false)?;
    let mut acc = at.int(0);
    for k in 1..=at.h {
        acc += at.frac(sign(k), k as i64)? * hk[k as usize];
    }
    Ok(acc)
}

fn lem_2_2(at: &At) -> Result<Evaluation> {
    let lhs = alt_harmonic_over_k(at)?;
    let q = at.q()?;
    let rhs = q * q * at.frac(1, 2)? + at.int(at.sh()) * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn aux_binom_p1(at: &At) -> Result<Evaluation> {
    let hk = at.harmonic(at.p - 1, 1, false)?;
    let p = at.p as i64;
    pointwise(1..at.p, |k| {
        let k = k as i64;
        let lhs = at.binom(p - 1, k - 1)?.to_residue()? * at.int(sign(k as u64 - 1));
        let rhs = at.int(1) - at.pp(1) * hk[k as usize - 1];
        Ok((lhs, rhs))
    })
}

fn sum_alt_inv(at: &At) -> Result<Evaluation> {
    let lhs = *at.harmonic(at.h, 1, true)?.last().unwrap();
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = -q + p * at.frac(1, 2)? * q * q - at.int(at.sh()) * p * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn sum_alt_inv2(at: &At) -> Result<Evaluation> {
    let lhs = *at.harmonic(at.h, 2, true)?.last().unwrap();
    Ok(Evaluation::new(lhs, at.int(2 * at.sh()) * at.e_p3()?))
}

fn binom_transfer(at: &At) -> Result<Evaluation> {
    let h = at.h as i64;
    let minus4 = at.fac(-4);
    pointwise(0..=at.h, |k| {
        let k = k as i64;
        let lhs = at.binom(2 * k, k)?.to_residue()?;
        let rhs = (at.binom(h, k)? * minus4.powi(k)).to_residue()?;
        Ok((lhs, rhs))
    })
}

fn morley(at: &At) -> Result<Evaluation> {
    let lhs = at.binom(at.p as i64 - 1, at.h as i64)?.to_residue()?;
    let rhs = at.int(at.sh()) * at.int(4).pow(at.p - 1);
    Ok(Evaluation::new(lhs, rhs))
}

/// `(-1)^h p (1 - pq + p^2 q^2)`
fn lem_3_2_rhs(at: &At) -> Result<Residue> {
    let q = at.q()?;
    let p = at.pp(1);
    Ok(at.int(at.sh()) * p * (at.int(1) - p * q + p * p * q * q))
}

fn wz_residue(term: Option<FactoredResidue>, at: &At) -> Result<Residue> {
    match term {
        Some(t) => t.to_residue(),
        None => Ok(at.int(0)),
    }
}

fn lem_3_2(at: &At) -> Result<Evaluation> {
    let lhs = wz_residue(f_term_mod(&at.facts, at.h, at.h), at)?;
    Ok(Evaluation::new(lhs, lem_3_2_rhs(at)?))
}

fn lem_3_3(at: &At) -> Result<Evaluation> {
    let hk = at.harmonic(at.h, 1, false)?;
    let minus2 = at.fac(-2);
    let mut lhs = at.int(0);
    for k in 1..=at.h {
        let c = (at.binom(at.h as i64, k as i64)? * minus2.powi(k as i64)).to_residue()?;
        lhs += c * hk[k as usize];
    }
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = at.int(at.sh()) * (-q + p * at.frac(1, 2)? * q * q) + p * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn lem_3_4(at: &At) -> Result<Evaluation> {
    let mut lhs = at.int(0);
    for k in 1..=at.h {
        lhs += wz_residue(g_term_mod(&at.facts, at.h + 1, k), at)?;
    }
    let rhs = at.int(at.p as i64 * at.leg(-2)) + at.pp(3) * at.frac(at.leg(2), 4)? * at.e_p3()?
        - lem_3_2_rhs(at)?;
    Ok(Evaluation::new(lhs, rhs))
}

fn two_pow_half(at: &At) -> Result<Evaluation> {
    let lhs = at.int(2).pow(at.h);
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = at.int(at.leg(2)) * (at.int(1) + p * at.frac(1, 2)? * q - p * p * at.frac(1, 8)? * q * q);
    Ok(Evaluation::new(lhs, rhs))
}

fn aux_odd_product(at: &At) -> Result<Evaluation> {
    let p = at.p as i64;
    let h = at.h as i64;
    let minus2 = at.fac(-2);
    let minus4 = at.fac(-4);
    let two = at.fac(2);
    pointwise(1..=at.h, |k| {
        let k = k as i64;
        let lhs = minus2.powi(k - 1) * rising_factorial_rational(p + 3 - 2 * k, 2, (k - 1) as u64, &at.ctx)?;
        // (2k-3)!! = (2k-2)! / (2^{k-1} (k-1)!)
        let double_fact =
            at.facts.factorial(2 * k as u64 - 2) / (two.powi(k - 1) * at.facts.factorial(k as u64 - 1));
        let rhs = double_fact * at.binom(h, k - 1)? * minus4.powi(k - 1) / at.binom(2 * k - 2, k - 1)?;
        Ok((lhs.to_residue()?, rhs.to_residue()?))
    })
}

/// `3p^2 (1 + 4p - 6pq)`
fn three_p2_block(at: &At) -> Result<Residue> {
    let q = at.q()?;
    let p = at.pp(1);
    Ok(at.int(3) * p * p * (at.int(1) + at.int(4) * p - at.int(6) * p * q))
}

fn lem_4_1(at: &At) -> Result<Evaluation> {
    let lhs = wz_residue(f_term_mod(&at.facts, at.p - 1, at.p - 1), at)?;
    Ok(Evaluation::new(lhs, -three_p2_block(at)?))
}

/// `8^k / (k (2k-1) C(2k,k))` as a factored residue.
fn lem_4_3_term(at: &At, k: u64) -> Result<FactoredResidue> {
    let k = k as i64;
    Ok(at.fac(8).powi(k) / (at.fac(k) * at.fac(2 * k - 1) * at.binom(2 * k, k)?))
}

fn lem_4_3_a(at: &At) -> Result<Evaluation> {
    let mut lhs = at.int(0);
    for k in 1..=at.h {
        lhs += lem_4_3_term(at, k)?.to_residue()?;
    }
    Ok(Evaluation::new(lhs, at.e_quarter()? * at.frac(1, 4)?))
}

fn lem_4_3_b(at: &At) -> Result<Evaluation> {
    let mut sum = at.int(0);
    for k in 1..=at.h {
        let k = k as i64;
        let term = at.fac(2).powi(k) / (at.fac(k) * at.fac(k) * at.binom(2 * k, k)?);
        sum += term.to_residue()?;
    }
    let lhs = at.int(at.leg(-2)) * sum;
    Ok(Evaluation::new(lhs, at.e_quarter()? * at.frac(1, 4)?))
}

fn lem_4_4(at: &At) -> Result<Evaluation> {
    let mut lhs = at.int(0);
    for k in 1..=at.h {
        lhs += wz_residue(g_term_mod(&at.facts, at.p, k), at)?;
    }
    Ok(Evaluation::new(lhs, at.pp(3) * at.frac(1, 16)? * at.e_quarter()?))
}

fn lem_4_4_term(at: &At) -> Result<Evaluation> {
    let p3_over_4 = at.fac(at.p as i64).powi(3) / at.fac(4);
    pointwise(1..=at.h, |k| {
        let lhs = wz_residue(g_term_mod(&at.facts, at.p, k), at)?;
        let rhs = (p3_over_4 * lem_4_3_term(at, k)?).to_residue()?;
        Ok((lhs, rhs))
    })
}

fn lem_4_5(at: &At) -> Result<Evaluation> {
    let lhs = wz_residue(g_term_mod(&at.facts, at.p, (at.p + 1) / 2), at)?;
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = p
        * at.int(at.leg(-2))
        * (at.int(1) - at.frac(3, 2)? * p * q + at.frac(15, 8)? * p * p * q * q);
    Ok(Evaluation::new(lhs, rhs))
}

fn lem_4_6(at: &At) -> Result<Evaluation> {
    let mut lhs = at.int(0);
    for k in (at.p + 3) / 2..at.p {
        lhs += wz_residue(g_term_mod(&at.facts, at.p, k), at)?;
    }
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = at.int(3 * at.leg(-2)) * p * p * (at.frac(1, 2)? * q - at.frac(5, 8)? * p * q * q)
        + three_p2_block(at)?;
    Ok(Evaluation::new(lhs, rhs))
}

/// `sum_{k=1}^{h} C(h,k)(-2)^k w(k)`
fn binomial_weighted_sum<F>(at: &At, mut w: F) -> Result<Residue>
where
    F: FnMut(u64) -> Result<Residue>,
{
    let minus2 = at.fac(-2);
    let mut acc = at.int(0);
    for k in 1..=at.h {
        let c = (at.binom(at.h as i64, k as i64)? * minus2.powi(k as i64)).to_residue()?;
        acc += c * w(k)?;
    }
    Ok(acc)
}

fn sigma_sum_1(at: &At) -> Result<Evaluation> {
    let lhs = binomial_weighted_sum(at, |k| at.frac(1, k as i64))?;
    let q = at.q()?;
    let p = at.pp(1);
    let rhs = q - p * at.frac(1, 2)? * q * q - p * at.int(at.sh()) * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn sigma_sum_2(at: &At) -> Result<Evaluation> {
    let lhs = binomial_weighted_sum(at, |k| at.frac(1, (k * k) as i64))?;
    let q = at.q()?;
    let rhs = -(q * q * at.frac(1, 2)?) + at.int(at.sh()) * at.e_p3()?;
    Ok(Evaluation::new(lhs, rhs))
}

fn sigma_sum_3(at: &At) -> Result<Evaluation> {
    let hk = at.harmonic(at.h, 1, false)?;
    let lhs = binomial_weighted_sum(at, |k| Ok(at.frac(1, k as i64)? * hk[k as usize]))?;
    Ok(Evaluation::new(lhs, at.int(at.sh()) * at.e_p3()?))
}
