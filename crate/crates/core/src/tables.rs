//! Per-prime special-number values shared by every check at that prime.

use core::ops::BitOr;

use crate::modular::{make_ctx, PrimeCtx, Residue};
use crate::special::{bernoulli_numbers_mod_p, euler_numbers_mod_p};
use crate::{Error, Result};

/// Which special numbers a check reads.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Needs {
    /// `E_{p-3} mod p`
    pub euler: bool,
    /// `E_{p-3}(1/4) mod p`
    pub euler_quarter: bool,
}

impl Needs {
    pub const NONE: Needs = Needs { euler: false, euler_quarter: false };
    pub const EULER: Needs = Needs { euler: true, euler_quarter: false };
    pub const EULER_QUARTER: Needs = Needs { euler: false, euler_quarter: true };

    pub fn covers(&self, other: Needs) -> bool {
        (self.euler || !other.euler) && (self.euler_quarter || !other.euler_quarter)
    }
}

impl BitOr for Needs {
    type Output = Needs;
    fn bitor(self, rhs: Needs) -> Needs {
        Needs { euler: self.euler || rhs.euler, euler_quarter: self.euler_quarter || rhs.euler_quarter }
    }
}

/// Immutable once built; share by reference across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTables {
    ctx: PrimeCtx,
    needs: Needs,
    e_p3: Option<Residue>,
    e_p3_quarter: Option<Residue>,
}

impl PrimeTables {
    /// Needs `p >= 5` whenever anything is requested.
    pub fn new(p: u64, needs: Needs) -> Result<Self> {
        let ctx = make_ctx(p, 1)?;
        let e_p3 = if needs.euler {
            let n = (p - 3) as usize;
            Some(euler_numbers_mod_p(p, n)?.values()[n])
        } else {
            None
        };
        let e_p3_quarter = if needs.euler_quarter {
            let n = (p - 3) as usize;
            Some(bernoulli_numbers_mod_p(p, n + 1)?.euler_poly(n, 1, 4)?)
        } else {
            None
        };
        Ok(Self { ctx, needs, e_p3, e_p3_quarter })
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    pub fn needs(&self) -> Needs {
        self.needs
    }

    /// `E_{p-3} mod p` as an integer in `[0, p)`.
    pub fn e_p3(&self) -> Result<u64> {
        self.e_p3.map(|r| r.value()).ok_or(Error::MissingTable("E_{p-3}"))
    }

    /// `E_{p-3}(1/4) mod p` as an integer in `[0, p)`.
    pub fn e_p3_quarter(&self) -> Result<u64> {
        self.e_p3_quarter.map(|r| r.value()).ok_or(Error::MissingTable("E_{p-3}(1/4)"))
    }
}
