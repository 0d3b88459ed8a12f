//! Exact arithmetic for checking supercongruences and Wilf–Zeilberger pair
//! identities over ranges of primes.
//!
//! Everything here is pure computation and builds without `std`; the
//! companion `supercong` crate adds the parallel sweep, report formats and
//! the command line.
//!
//! Two number systems are used side by side:
//!
//! * [`Residue`] and [`FactoredResidue`] work modulo `p^e` in fixed-width
//!   integers. The factored form carries the `p`-adic valuation explicitly so
//!   products and quotients of factorials stay exact even when `p` divides
//!   them.
//! * [`BigRat`] is an exact rational used as the ground-truth oracle for the
//!   WZ engine and the finite identities.

#![no_std]

extern crate alloc;

mod error;
pub mod modular;
pub mod padic;
pub mod primes;
pub mod rational;
pub mod registry;
pub mod special;
pub mod tables;
pub mod wz;

pub use error::{Error, Result};
pub use modular::{
    fermat_quotient, harmonic_prefix, harmonic_sum, legendre_symbol, make_ctx, residue_of_int,
    PrimeCtx, Residue, ResidueOp,
};
pub use padic::{
    binomial_factored, factorial_factored, factored_of_int, rising_factorial_rational,
    FactorialTable, FactoredOp, FactoredResidue,
};
pub use rational::{rational_to_residue, BigRat};
pub use registry::{
    evaluate_check, evaluate_identity, registry_list, CheckDescriptor, CheckId, CheckKind,
    CheckReport, CheckStatus,
};
pub use tables::{Needs, PrimeTables};
pub use wz::{WzEngine, WzPoint};
