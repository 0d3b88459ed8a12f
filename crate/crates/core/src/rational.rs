//! Exact rationals and their reduction modulo `p^e`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::modular::{PrimeCtx, Residue};
use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> BigRat {
    BigRat::from_integer(n)
}

/// `2^n` for any sign of `n`.
pub fn pow2(n: i64) -> BigRat {
    let m = BigInt::one() << n.unsigned_abs();
    if n >= 0 {
        big(m)
    } else {
        BigRat::new(BigInt::one(), m)
    }
}

/// Strips every factor `p` from `|z|`, returning `(count, rest)`.
fn split_p(z: &BigInt, p: u64) -> (i64, BigInt) {
    let pb = BigInt::from(p);
    let mut rest = z.clone();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    (v, rest)
}

fn big_mod(z: &BigInt, ctx: &PrimeCtx) -> Residue {
    let m = BigInt::from(ctx.modulus());
    let r = z.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    ctx.int128(digits.first().copied().unwrap_or(0) as i128)
}

/// `v_p(q)`; `None` for zero.
pub fn valuation(q: &BigRat, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(split_p(q.numer(), p).0 - split_p(q.denom(), p).0)
}

/// Writes `q = p^v a/b` with `p ∤ ab` and returns `p^v a b^{-1} mod p^e`.
pub fn rational_to_residue(q: &BigRat, ctx: &PrimeCtx) -> Result<Residue> {
    if q.is_zero() {
        return Ok(ctx.zero());
    }
    let (vn, a) = split_p(q.numer(), ctx.p());
    let (vd, b) = split_p(q.denom(), ctx.p());
    let v = vn - vd;
    if v < 0 {
        return Err(Error::NegativeValuation(v));
    }
    let unit = big_mod(&a, ctx) * big_mod(&b, ctx).inv()?;
    Ok(unit * ctx.p_pow(u32::try_from(v).unwrap_or(u32::MAX)))
}

/// Decimal rendering: `a` or `a/b`.
pub fn render(q: &BigRat) -> alloc::string::String {
    use alloc::string::ToString;
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    BigInt::from_biguint(Sign::Plus, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::make_ctx;

    #[test]
    fn rational_to_residue_examples() {
        let c = make_ctx(5, 2).unwrap();
        assert_eq!(rational_to_residue(&rat(25, 12), &c).unwrap().value(), 0);
        let c = make_ctx(5, 4).unwrap();
        let expect = c.int(618) * c.int(64).inv().unwrap();
        assert_eq!(rational_to_residue(&rat(-7, 64), &c).unwrap(), expect);
        let c = make_ctx(5, 1).unwrap();
        assert_eq!(rational_to_residue(&rat(1, 5), &c), Err(Error::NegativeValuation(-1)));
        assert_eq!(rational_to_residue(&int(0), &c).unwrap().value(), 0);
    }

    #[test]
    fn valuation_and_binomial() {
        assert_eq!(valuation(&rat(50, 3), 5), Some(2));
        assert_eq!(valuation(&rat(3, 125), 5), Some(-3));
        assert_eq!(valuation(&int(0), 5), None);
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(render(&rat(-7, 64)), "-7/64");
        assert_eq!(render(&int(15)), "15");
        assert_eq!(pow2(-3), rat(1, 8));
    }
}
