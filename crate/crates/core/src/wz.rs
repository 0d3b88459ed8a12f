//! The WZ pair
//!
//! ```text
//! F(n,k) = (-1)^{n+k} (6n-2k+1) / 2^{9n-3k} * (2n+2k)! (2n-2k)! C(2n-2k,n-k) / ((n+k)! (n-k)! n!^2)
//! G(n,k) = (-1)^{n+k} n^2 (2n+2k)! (2n-2k)! C(2n-2k,n-k)
//!          / (2^{9n-3k-4} (2n+2k-1) (n+k)! (n-k)! n!^2)
//! ```
//!
//! with `F = G = 0` for `n < k`, evaluated two ways: exactly in [`BigRat`]
//! by [`WzEngine`], and modulo `p^e` as factored residues by
//! [`f_term_mod`] / [`g_term_mod`].

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::padic::{factored_of_int, FactorialTable, FactoredResidue};
use crate::rational::{self, BigRat};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WzPoint {
    pub n: u64,
    pub k: u64,
}

impl WzPoint {
    pub fn new(n: u64, k: u64) -> Self {
        Self { n, k }
    }
}

/// Both sides of an identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: BigRat,
    pub rhs: BigRat,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(e: u64) -> BigRat {
    if e % 2 == 0 {
        BigRat::one()
    } else {
        -BigRat::one()
    }
}

/// Exact evaluator with a growing factorial cache. Each instance is owned by
/// one task.
#[derive(Debug, Clone)]
pub struct WzEngine {
    factorials: Vec<BigInt>,
}

impl Default for WzEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl WzEngine {
    pub fn new() -> Self {
        Self { factorials: alloc::vec![BigInt::one()] }
    }

    pub fn factorial(&mut self, n: u64) -> BigInt {
        let n = n as usize;
        while self.factorials.len() <= n {
            let i = self.factorials.len();
            let next = &self.factorials[i - 1] * BigInt::from(i);
            self.factorials.push(next);
        }
        self.factorials[n].clone()
    }

    fn fact(&mut self, n: u64) -> BigRat {
        rational::big(self.factorial(n))
    }

    pub fn binomial(&mut self, a: u64, b: u64) -> BigRat {
        if b > a {
            return BigRat::zero();
        }
        self.fact(a) / (self.fact(b) * self.fact(a - b))
    }

    /// `(2n+2k)! (2n-2k)! C(2n-2k,n-k) / ((n+k)! (n-k)! n!^2)`, for `k <= n`.
    fn core_block(&mut self, n: u64, k: u64) -> BigRat {
        let num = self.fact(2 * n + 2 * k) * self.fact(2 * n - 2 * k) * self.binomial(2 * n - 2 * k, n - k);
        let nf = self.fact(n);
        num / (self.fact(n + k) * self.fact(n - k) * &nf * &nf)
    }

    pub fn f_term(&mut self, pt: WzPoint) -> BigRat {
        let WzPoint { n, k } = pt;
        if n < k {
            return BigRat::zero();
        }
        let lin = rational::int(6 * n as i64 - 2 * k as i64 + 1);
        sign(n + k) * lin * rational::pow2(-(9 * n as i64 - 3 * k as i64)) * self.core_block(n, k)
    }

    pub fn g_term(&mut self, pt: WzPoint) -> BigRat {
        let WzPoint { n, k } = pt;
        if n < k || n == 0 {
            return BigRat::zero();
        }
        let n2 = rational::int((n * n) as i64);
        let lin = rational::int(2 * n as i64 + 2 * k as i64 - 1);
        sign(n + k) * n2 * rational::pow2(-(9 * n as i64 - 3 * k as i64 - 4)) / lin * self.core_block(n, k)
    }

    /// `F(n,k-1) - F(n,k)` against `G(n+1,k) - G(n,k)`.
    pub fn wz_pair_check(&mut self, pt: WzPoint) -> Result<Sides> {
        let WzPoint { n, k } = pt;
        if k == 0 {
            return Err(Error::OutOfRange(format!("WZ relation needs k >= 1, got ({n},{k})")));
        }
        let lhs = self.f_term(WzPoint::new(n, k - 1)) - self.f_term(pt);
        let rhs = self.g_term(WzPoint::new(n + 1, k)) - self.g_term(pt);
        Ok(Sides { lhs, rhs })
    }

    /// `sum_{n=0}^{h} F(n,0) = F(h,h) + sum_{k=1}^{h} G(h+1,k)` with `h = (m-1)/2`.
    pub fn telescope_half_check(&mut self, m: u64) -> Result<Sides> {
        if m % 2 == 0 {
            return Err(Error::NotOdd(m));
        }
        let h = (m - 1) / 2;
        Ok(self.telescope(h))
    }

    /// `sum_{n=0}^{m-1} F(n,0) = F(m-1,m-1) + sum_{k=1}^{m-1} G(m,k)`.
    pub fn telescope_full_check(&mut self, m: u64) -> Result<Sides> {
        if m == 0 {
            return Err(Error::OutOfRange("telescope needs m >= 1".into()));
        }
        Ok(self.telescope(m - 1))
    }

    fn telescope(&mut self, top: u64) -> Sides {
        let mut lhs = BigRat::zero();
        for n in 0..=top {
            lhs += self.f_term(WzPoint::new(n, 0));
        }
        let mut rhs = self.f_term(WzPoint::new(top, top));
        for k in 1..=top {
            rhs += self.g_term(WzPoint::new(top + 1, k));
        }
        Sides { lhs, rhs }
    }

    /// `F(n,0)` against `(6n+1) C(2n,n)^3 / (-512)^n`.
    pub fn f_summand_equiv(&mut self, n: u64) -> Sides {
        let lhs = self.f_term(WzPoint::new(n, 0));
        let c = self.binomial(2 * n, n);
        let rhs = rational::int(6 * n as i64 + 1) * &c * &c * &c * sign(n) * rational::pow2(-9 * n as i64);
        Sides { lhs, rhs }
    }

    /// `G(n,k)` against its Pochhammer form
    /// `(-1)^{n+k} / 2^{9n-k-8} * C(2n,n) C(2n-2,n-1)^2 (1/2+n)_k n!
    ///  / ((2n+2k-1) (1/2+n-k)_{k-1}^2 (n-k)!)`, for `1 <= k <= n`.
    pub fn g_reform_check(&mut self, pt: WzPoint) -> Result<Sides> {
        let WzPoint { n, k } = pt;
        if k == 0 || k > n {
            return Err(Error::OutOfRange(format!("G reformulation needs 1 <= k <= n, got ({n},{k})")));
        }
        let half = rational::rat(1, 2);
        let c1 = self.binomial(2 * n, n);
        let c2 = self.binomial(2 * n - 2, n - 1);
        let up = rising(&(&half + rational::int(n as i64)), k);
        let down = rising(&(&half + rational::int(n as i64 - k as i64)), k - 1);
        let num = c1 * &c2 * &c2 * up * self.fact(n);
        let den = rational::int(2 * n as i64 + 2 * k as i64 - 1) * &down * &down * self.fact(n - k);
        let rhs = sign(n + k) * rational::pow2(-(9 * n as i64 - k as i64 - 8)) * num / den;
        Ok(Sides { lhs: self.g_term(pt), rhs })
    }
}

/// `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising(x: &BigRat, k: u64) -> BigRat {
    let mut acc = BigRat::one();
    let mut cur = x.clone();
    for _ in 0..k {
        acc *= &cur;
        cur += BigRat::one();
    }
    acc
}

fn factored_core(t: &FactorialTable, n: u64, k: u64) -> FactoredResidue {
    let num = t.factorial(2 * n + 2 * k) * t.factorial(2 * n - 2 * k) * t.factorial(2 * n - 2 * k);
    let nmk = t.factorial(n - k);
    let nf = t.factorial(n);
    num / (t.factorial(n + k) * nmk * nmk * nmk * nf * nf)
}

fn factored_int(t: &FactorialTable, z: i64) -> FactoredResidue {
    factored_of_int(z as i128, t.ctx()).expect("nonzero integer")
}

fn with_sign(f: FactoredResidue, e: u64) -> FactoredResidue {
    if e % 2 == 1 {
        f.neg()
    } else {
        f
    }
}

/// `F(n,k)` modulo `p^e`; `None` when `F(n,k) = 0`.
pub fn f_term_mod(t: &FactorialTable, n: u64, k: u64) -> Option<FactoredResidue> {
    if n < k {
        return None;
    }
    let two = factored_int(t, 2);
    let lin = factored_int(t, 6 * n as i64 - 2 * k as i64 + 1);
    let v = lin * two.powi(-(9 * n as i64 - 3 * k as i64)) * factored_core(t, n, k);
    Some(with_sign(v, n + k))
}

/// `G(n,k)` modulo `p^e`; `None` when `G(n,k) = 0`.
pub fn g_term_mod(t: &FactorialTable, n: u64, k: u64) -> Option<FactoredResidue> {
    if n < k || n == 0 {
        return None;
    }
    let two = factored_int(t, 2);
    let nn = factored_int(t, n as i64);
    let lin = factored_int(t, 2 * n as i64 + 2 * k as i64 - 1);
    let v = nn * nn * two.powi(-(9 * n as i64 - 3 * k as i64 - 4)) / lin * factored_core(t, n, k);
    Some(with_sign(v, n + k))
}
