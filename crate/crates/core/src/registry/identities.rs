//! Exact evaluators for the identity entries.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::CheckId;
use crate::rational::{self, BigRat};
use crate::special::ExactBernoulli;
use crate::wz::{Sides, WzEngine, WzPoint};
use crate::{Error, Result};

/// Both sides of an identity at one parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactEvaluation {
    pub lhs: BigRat,
    pub rhs: BigRat,
    pub detail: Option<String>,
}

impl ExactEvaluation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    fn of(s: Sides) -> Self {
        Self { lhs: s.lhs, rhs: s.rhs, detail: None }
    }
}

fn sign(e: u64) -> BigRat {
    if e % 2 == 0 {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

/// Prefix sums used by the binomial-harmonic identities, indexed `0..=n`.
struct Prefix {
    h: Vec<BigRat>,
    h2: Vec<BigRat>,
    /// `sum (-1)^k/k`
    a: Vec<BigRat>,
    /// `sum (-1)^k/k^2`
    a2: Vec<BigRat>,
    /// `sum (-1)^k H_k/k`
    c: Vec<BigRat>,
    /// `sum (1/k) A_k`
    d: Vec<BigRat>,
}

impl Prefix {
    fn new(n: u64) -> Self {
        let z = || {
            let mut v = Vec::with_capacity(n as usize + 1);
            v.push(BigRat::zero());
            v
        };
        let (mut h, mut h2, mut a, mut a2, mut c, mut d) = (z(), z(), z(), z(), z(), z());
        for k in 1..=n as usize {
            let inv = rational::rat(1, k as i64);
            let inv2 = &inv * &inv;
            let s = sign(k as u64);
            h.push(&h[k - 1] + &inv);
            h2.push(&h2[k - 1] + &inv2);
            a.push(&a[k - 1] + &s * &inv);
            a2.push(&a2[k - 1] + &s * &inv2);
            c.push(&c[k - 1] + &s * &h[k] * &inv);
            d.push(&d[k - 1] + &inv * &a[k]);
        }
        Self { h, h2, a, a2, c, d }
    }
}

/// `sum_{k=1}^{n} C(n,k)(-2)^k w(k)`
fn binomial_weighted(n: u64, mut w: impl FnMut(usize) -> BigRat) -> BigRat {
    let mut acc = BigRat::zero();
    let mut c = BigInt::one();
    for k in 1..=n {
        c = c * BigInt::from(n - k + 1) / BigInt::from(k);
        let term = rational::big(c.clone() * BigInt::from(-2).pow(k as u32));
        acc += term * w(k as usize);
    }
    acc
}

fn need_positive(id: CheckId, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange(format!("{id} needs n >= 1")));
    }
    Ok(())
}

/// Runs `f(k)` for each `k`; reports the first mismatch or the last index.
fn pointwise(ks: impl IntoIterator<Item = u64>, mut f: impl FnMut(u64) -> Result<Sides>) -> Result<ExactEvaluation> {
    let mut last = None;
    for k in ks {
        let s = f(k)?;
        let ev = ExactEvaluation { lhs: s.lhs, rhs: s.rhs, detail: Some(format!("k={k}")) };
        if !ev.holds() {
            return Ok(ev);
        }
        last = Some(ev);
    }
    last.ok_or_else(|| Error::OutOfRange("empty index range".into()))
}

pub(super) fn evaluate(id: CheckId, n: u64) -> Result<ExactEvaluation> {
    use CheckId::*;
    match id {
        LEM_2_1_A | LEM_2_1_B | SIGMA_ID_1 | SIGMA_ID_2 | SIGMA_ID_3 => {
            need_positive(id, n)?;
            Ok(binomial_harmonic(id, n))
        }
        SUM_BINOM_P_HALF => sum_binom_half(n),
        POWER_SUM_RESIDUE_CLASS => power_sum_residue_class(n),
        WZ_RELATION => {
            let mut wz = WzEngine::new();
            pointwise(1..=n + 1, |k| wz.wz_pair_check(WzPoint::new(n, k)))
        }
        WZ_TELESCOPE_HALF => Ok(ExactEvaluation::of(WzEngine::new().telescope_half_check(n)?)),
        WZ_TELESCOPE_FULL => Ok(ExactEvaluation::of(WzEngine::new().telescope_full_check(n)?)),
        F_SUMMAND => Ok(ExactEvaluation::of(WzEngine::new().f_summand_equiv(n))),
        G_REFORM => {
            need_positive(id, n)?;
            let mut wz = WzEngine::new();
            pointwise(1..=n, |k| wz.g_reform_check(WzPoint::new(n, k)))
        }
        other => Err(Error::OutOfRange(format!("{other} is a congruence"))),
    }
}

fn binomial_harmonic(id: CheckId, n: u64) -> ExactEvaluation {
    use CheckId::*;
    let s = Prefix::new(n);
    let m = n as usize;
    let (h, h2, a, a2, c, d) = (&s.h[m], &s.h2[m], &s.a[m], &s.a2[m], &s.c[m], &s.d[m]);
    let half = rational::rat(1, 2);
    let (lhs, rhs) = match id {
        LEM_2_1_A => (
            binomial_weighted(n, |k| &s.h[k] * &s.h[k]),
            sign(n)
                * (h2 * &half + h * h - rational::int(2) * a2 - rational::int(2) * h * a - a * a * &half
                    + rational::int(3) * c),
        ),
        LEM_2_1_B => (binomial_weighted(n, |k| s.h[k].clone()), sign(n) * (h - a)),
        SIGMA_ID_1 => (binomial_weighted(n, |k| rational::rat(1, k as i64)), a - h),
        SIGMA_ID_2 => (
            binomial_weighted(n, |k| rational::rat(1, (k * k) as i64)),
            d - (h2 + h * h) * &half,
        ),
        SIGMA_ID_3 => (
            binomial_weighted(n, |k| &s.h[k] * rational::rat(1, k as i64)),
            c - (h2 + a * a) * &half,
        ),
        _ => unreachable!("not a binomial-harmonic identity"),
    };
    ExactEvaluation { lhs, rhs, detail: None }
}

fn sum_binom_half(m: u64) -> Result<ExactEvaluation> {
    if m % 2 == 0 {
        return Err(Error::NotOdd(m));
    }
    let mut lhs = BigInt::zero();
    for k in 1..=(m - 1) / 2 {
        lhs += rational::binomial(m, k);
    }
    let rhs = (BigInt::one() << (m - 1) as usize) - BigInt::one();
    Ok(ExactEvaluation { lhs: rational::big(lhs), rhs: rational::big(rhs), detail: None })
}

/// Fractional part `{a/b}` for `b > 0`.
fn frac_part(a: i64, b: i64) -> BigRat {
    rational::rat(a.mod_floor(&b), b)
}

fn power_sum_residue_class(p: u64) -> Result<ExactEvaluation> {
    if p == 0 {
        return Err(Error::OutOfRange("power sum needs p >= 1".into()));
    }
    let bern = ExactBernoulli::new(4);
    let pi = p as i64;
    let mut last = None;
    for r in 0..8i64 {
        for k in 1..=3u32 {
            let mut lhs = BigInt::zero();
            let mut x = r;
            while x < pi {
                lhs += BigInt::from(x).pow(k);
                x += 8;
            }
            let hi = rational::rat(pi, 8) + frac_part(r - pi, 8);
            let lo = frac_part(r, 8);
            let scale = rational::big(BigInt::from(8).pow(k)) / rational::int(k as i64 + 1);
            let k1 = k as usize + 1;
            let rhs = scale * (bern.poly(k1, &hi) - bern.poly(k1, &lo));
            let ev = ExactEvaluation { lhs: rational::big(lhs), rhs, detail: Some(format!("r={r} k={k}")) };
            if !ev.holds() {
                return Ok(ev);
            }
            last = Some(ev);
        }
    }
    Ok(last.expect("24 cases"))
}
