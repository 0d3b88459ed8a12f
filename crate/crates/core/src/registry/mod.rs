//! Catalog of congruences and exact identities, keyed by stable IDs.
//!
//! Congruences are evaluated at a prime `p` modulo `p^e`; exact identities
//! are evaluated in big rationals at an integer parameter `n`.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use crate::modular::make_ctx;
use crate::primes::is_prime;
use crate::tables::{Needs, PrimeTables};
use crate::{Error, Result};

mod congruences;
mod identities;

pub use congruences::Evaluation;
pub use identities::ExactEvaluation;

macro_rules! check_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// Stable identifier of a catalog entry.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        #[allow(non_camel_case_types)]
        pub enum CheckId {
            $($variant),+
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name),+
                }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CheckId::$variant),)+
                    _ => Err(Error::UnknownCheck(s.to_string())),
                }
            }
        }
    };
}

check_ids! {
    THM_1_1 => "THM_1_1",
    THM_1_2 => "THM_1_2",
    REMARK_1_2_FULL => "REMARK_1_2_FULL",
    THM_1_3 => "THM_1_3",
    VH_ZUDILIN => "VH_ZUDILIN",
    CXH_3K1 => "CXH_3K1",
    SUN_4K1 => "SUN_4K1",
    GUO_LIU => "GUO_LIU",
    WOLSTENHOLME_H1 => "WOLSTENHOLME_H1",
    WOLSTENHOLME_H2 => "WOLSTENHOLME_H2",
    BINOM_2P1P => "BINOM_2P1P",
    LEM_2_2 => "LEM_2_2",
    AUX_BINOM_P1 => "AUX_BINOM_P1",
    SUM_ALT_INV => "SUM_ALT_INV",
    SUM_ALT_INV2 => "SUM_ALT_INV2",
    H_HALF => "H_HALF",
    H2_HALF => "H2_HALF",
    BINOM_TRANSFER => "BINOM_TRANSFER",
    MORLEY => "MORLEY",
    LEM_3_2 => "LEM_3_2",
    LEM_3_3 => "LEM_3_3",
    LEM_3_4 => "LEM_3_4",
    TWO_POW_HALF => "TWO_POW_HALF",
    AUX_ODD_PRODUCT => "AUX_ODD_PRODUCT",
    LEM_4_1 => "LEM_4_1",
    BINOM_4P => "BINOM_4P",
    LEM_4_3_A => "LEM_4_3_A",
    LEM_4_3_B => "LEM_4_3_B",
    LEM_4_4 => "LEM_4_4",
    LEM_4_4_TERM => "LEM_4_4_TERM",
    LEM_4_5 => "LEM_4_5",
    LEM_4_6 => "LEM_4_6",
    SIGMA_SUM_1 => "SIGMA_SUM_1",
    SIGMA_SUM_2 => "SIGMA_SUM_2",
    SIGMA_SUM_3 => "SIGMA_SUM_3",
    LEM_2_1_A => "LEM_2_1_A",
    LEM_2_1_B => "LEM_2_1_B",
    SIGMA_ID_1 => "SIGMA_ID_1",
    SIGMA_ID_2 => "SIGMA_ID_2",
    SIGMA_ID_3 => "SIGMA_ID_3",
    SUM_BINOM_P_HALF => "SUM_BINOM_P_HALF",
    POWER_SUM_RESIDUE_CLASS => "POWER_SUM_RESIDUE_CLASS",
    WZ_RELATION => "WZ_RELATION",
    WZ_TELESCOPE_HALF => "WZ_TELESCOPE_HALF",
    WZ_TELESCOPE_FULL => "WZ_TELESCOPE_FULL",
    F_SUMMAND => "F_SUMMAND",
    G_REFORM => "G_REFORM",
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Congruence,
    ExactIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckDescriptor {
    pub id: CheckId,
    pub kind: CheckKind,
    /// The check runs for primes `p > min_prime_exclusive`.
    pub min_prime_exclusive: u64,
    /// `e` of the modulus `p^e`; `None` for exact identities.
    pub exponent: Option<u32>,
    /// Meaning of the sweep variable for exact identities.
    pub range_param: Option<&'static str>,
    /// The statement being checked, in plain text.
    pub statement: &'static str,
    pub needs: Needs,
}

impl CheckDescriptor {
    pub fn accepts(&self, p: u64) -> bool {
        p > self.min_prime_exclusive
    }
}

const fn cong(id: CheckId, min: u64, e: u32, needs: Needs, statement: &'static str) -> CheckDescriptor {
    CheckDescriptor {
        id,
        kind: CheckKind::Congruence,
        min_prime_exclusive: min,
        exponent: Some(e),
        range_param: None,
        statement,
        needs,
    }
}

const fn ident(id: CheckId, range: &'static str, statement: &'static str) -> CheckDescriptor {
    CheckDescriptor {
        id,
        kind: CheckKind::ExactIdentity,
        min_prime_exclusive: 3,
        exponent: None,
        range_param: Some(range),
        statement,
        needs: Needs::NONE,
    }
}

use CheckId::*;

const N: Needs = Needs::NONE;
const E: Needs = Needs::EULER;
const EQ: Needs = Needs::EULER_QUARTER;

// h = (p-1)/2, q = q_p(2) = (2^{p-1}-1)/p, E = E_{p-3}, E(1/4) = E_{p-3}(1/4), (a/p) Legendre symbol.
static CATALOG: &[CheckDescriptor] = &[
    cong(THM_1_1, 3, 4, E, "sum_{n=0}^{h} (6n+1) C(2n,n)^3/(-512)^n == p(-2/p) + (p^3/4)(2/p)E"),
    cong(THM_1_2, 3, 1, E, "sum_{k=1}^{h} C(2k,k)/2^k H_k^2 == (-1)^h q^2 - E"),
    cong(REMARK_1_2_FULL, 3, 1, E, "sum_{k=0}^{p-1} C(2k,k)/2^k H_k^2 == (-1)^h q^2 - E"),
    cong(THM_1_3, 3, 4, EQ, "sum_{n=0}^{p-1} (6n+1) C(2n,n)^3/(-512)^n == p(-2/p) + (p^3/16)E(1/4)"),
    cong(VH_ZUDILIN, 3, 3, N, "sum_{k=0}^{h} (4k+1)(-1)^k ((1/2)_k/k!)^3 == (-1)^h p (van Hamme)"),
    cong(CXH_3K1, 3, 4, E, "sum_{k=0}^{p-1} (3k+1) C(2k,k)^3/(-8)^k == p(-1)^h + p^3 E"),
    cong(SUN_4K1, 3, 4, E, "sum_{k=0}^{p-1} (4k+1) C(2k,k)^3/(-64)^k == (-1)^h p + p^3 E"),
    cong(GUO_LIU, 3, 4, E, "sum_{k=0}^{(p+1)/2} (-1)^k (4k-1) (-1/2)_k^3/(1)_k^3 == p(-1)^{(p+1)/2} + p^3(2-E)"),
    cong(WOLSTENHOLME_H1, 3, 2, N, "H_{p-1} == 0 (Wolstenholme)"),
    cong(WOLSTENHOLME_H2, 3, 1, N, "H^{(2)}_{p-1} == 0 (Wolstenholme)"),
    cong(BINOM_2P1P, 3, 3, N, "C(2p-1,p-1) == 1 (Wolstenholme)"),
    cong(LEM_2_2, 3, 1, E, "sum_{k=1}^{h} (-1)^k H_k/k == q^2/2 + (-1)^h E"),
    cong(AUX_BINOM_P1, 3, 2, N, "for 1 <= k <= p-1: (-1)^{k-1} C(p-1,k-1) == 1 - p H_{k-1}"),
    cong(SUM_ALT_INV, 3, 2, E, "sum_{k=1}^{h} (-1)^k/k == -q + (p/2)q^2 - (-1)^h p E"),
    cong(SUM_ALT_INV2, 5, 1, E, "sum_{k=1}^{h} (-1)^k/k^2 == 2(-1)^h E"),
    cong(H_HALF, 3, 1, N, "H_h == -2q"),
    cong(H2_HALF, 3, 1, N, "H^{(2)}_h == 0"),
    cong(BINOM_TRANSFER, 3, 1, N, "for 0 <= k <= h: C(2k,k) == C(h,k)(-4)^k"),
    cong(MORLEY, 3, 3, N, "C(p-1,h) == (-1)^h 4^{p-1} (Morley)"),
    cong(LEM_3_2, 3, 4, N, "F(h,h) == (-1)^h p (1 - pq + p^2 q^2)"),
    cong(LEM_3_3, 3, 2, E, "sum_{k=1}^{h} C(h,k)(-2)^k H_k == (-1)^h (-q + (p/2)q^2) + pE"),
    cong(LEM_3_4, 3, 4, E, "sum_{k=1}^{h} G(h+1,k) == p(-2/p) + (p^3/4)(2/p)E - (-1)^h p (1 - pq + p^2 q^2)"),
    cong(TWO_POW_HALF, 3, 3, N, "2^h == (2/p)(1 + (p/2)q - (p^2/8)q^2)"),
    cong(AUX_ODD_PRODUCT, 3, 3, N, "for 1 <= k <= h: (-2)^{k-1} ((p+3)/2-k)_{k-1} == (2k-3)!! C(h,k-1)(-4)^{k-1}/C(2k-2,k-1)"),
    cong(LEM_4_1, 3, 4, N, "F(p-1,p-1) == -3p^2 (1 + 4p - 6pq)"),
    cong(BINOM_4P, 3, 2, N, "C(4p-1,2p-1) == 3"),
    cong(LEM_4_3_A, 3, 1, EQ, "sum_{k=1}^{h} 8^k/(k(2k-1)C(2k,k)) == E(1/4)/4"),
    cong(LEM_4_3_B, 3, 1, EQ, "(-2/p) sum_{k=1}^{h} 2^k/(k^2 C(2k,k)) == E(1/4)/4"),
    cong(LEM_4_4, 3, 4, EQ, "sum_{k=1}^{h} G(p,k) == (p^3/16)E(1/4)"),
    cong(LEM_4_4_TERM, 3, 4, N, "for 1 <= k <= h: G(p,k) == (p^3/4) 8^k/(k(2k-1)C(2k,k))"),
    cong(LEM_4_5, 3, 4, N, "G(p,(p+1)/2) == p(-2/p)(1 - (3p/2)q + (15p^2/8)q^2)"),
    cong(LEM_4_6, 3, 4, N, "sum_{k=(p+3)/2}^{p-1} G(p,k) == (-2/p) 3p^2 (q/2 - (5/8)p q^2) + 3p^2 (1 + 4p - 6pq)"),
    cong(SIGMA_SUM_1, 3, 2, E, "sum_{k=1}^{h} C(h,k)(-2)^k/k == q - (p/2)q^2 - p(-1)^h E"),
    cong(SIGMA_SUM_2, 3, 1, E, "sum_{k=1}^{h} C(h,k)(-2)^k/k^2 == -q^2/2 + (-1)^h E"),
    cong(SIGMA_SUM_3, 3, 1, E, "sum_{k=1}^{h} C(h,k)(-2)^k H_k/k == (-1)^h E"),
    ident(LEM_2_1_A, "n >= 1", "sum_{k=1}^{n} C(n,k)(-2)^k H_k^2 == (-1)^n (H2_n/2 + H_n^2 - 2A2_n - 2H_n A_n - A_n^2/2 + 3 sum_{k<=n} (-1)^k H_k/k), A_n = sum_{k<=n} (-1)^k/k, A2_n = sum_{k<=n} (-1)^k/k^2"),
    ident(LEM_2_1_B, "n >= 1", "sum_{k=1}^{n} C(n,k)(-2)^k H_k == (-1)^n H_n - (-1)^n sum_{k=1}^{n} (-1)^k/k"),
    ident(SIGMA_ID_1, "n >= 1", "sum_{k=1}^{n} C(n,k)(-2)^k/k == -H_n + sum_{k=1}^{n} (-1)^k/k"),
    ident(SIGMA_ID_2, "n >= 1", "sum_{k=1}^{n} C(n,k)(-2)^k/k^2 == -H2_n/2 - H_n^2/2 + sum_{k=1}^{n} (1/k) sum_{j=1}^{k} (-1)^j/j"),
    ident(SIGMA_ID_3, "n >= 1", "sum_{k=1}^{n} C(n,k)(-2)^k H_k/k == -H2_n/2 - (sum_{k<=n} (-1)^k/k)^2/2 + sum_{k=1}^{n} (-1)^k H_k/k"),
    ident(SUM_BINOM_P_HALF, "odd m >= 1", "sum_{k=1}^{(m-1)/2} C(m,k) == 2^{m-1} - 1"),
    ident(POWER_SUM_RESIDUE_CLASS, "p >= 1; all r mod 8, k in 1..=3", "sum_{0<=x<p, x==r mod 8} x^k == 8^k/(k+1) (B_{k+1}(p/8 + {(r-p)/8}) - B_{k+1}({r/8}))"),
    ident(WZ_RELATION, "n >= 0; all 1 <= k <= n+1", "F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k)"),
    ident(WZ_TELESCOPE_HALF, "odd m >= 1", "sum_{n=0}^{(m-1)/2} F(n,0) == F((m-1)/2,(m-1)/2) + sum_{k=1}^{(m-1)/2} G((m+1)/2,k)"),
    ident(WZ_TELESCOPE_FULL, "m >= 1", "sum_{n=0}^{m-1} F(n,0) == F(m-1,m-1) + sum_{k=1}^{m-1} G(m,k)"),
    ident(F_SUMMAND, "n >= 0", "F(n,0) == (6n+1) C(2n,n)^3/(-512)^n"),
    ident(G_REFORM, "n >= 1; all 1 <= k <= n", "G(n,k) == (-1)^{n+k}/2^{9n-k-8} C(2n,n)C(2n-2,n-1)^2 (1/2+n)_k n! / ((2n+2k-1)(1/2+n-k)_{k-1}^2 (n-k)!)"),
];

/// The full catalog in stable order.
pub fn registry_list() -> &'static [CheckDescriptor] {
    CATALOG
}

pub fn descriptor(id: CheckId) -> &'static CheckDescriptor {
    CATALOG.iter().find(|d| d.id == id).expect("every id has a descriptor")
}

pub fn lookup(id: &str) -> Result<&'static CheckDescriptor> {
    Ok(descriptor(id.parse()?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check at one prime (or one identity parameter).
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub id: CheckId,
    /// The prime `p` for congruences, the parameter `n` for identities.
    pub param: u64,
    /// `"p^e"` for congruences.
    pub modulus: Option<String>,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    /// Filled in by callers that time the evaluation.
    pub elapsed_ms: f64,
    /// Index of a pointwise check, or a diagnostic for a failure.
    pub detail: Option<String>,
}

fn validate_prime(p: u64) -> Result<()> {
    if p < 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    Ok(())
}

/// Evaluates a congruence at `p`, building the special-number tables it needs.
pub fn evaluate_check(id: &str, p: u64) -> Result<CheckReport> {
    let desc = lookup(id)?;
    validate_prime(p)?;
    if desc.kind != CheckKind::Congruence {
        return Err(Error::OutOfRange(format!("{id} is an exact identity")));
    }
    if !desc.accepts(p) {
        return Ok(skip_report(desc, p));
    }
    let tables = PrimeTables::new(p, desc.needs)?;
    evaluate_check_with(desc, &tables)
}

fn skip_report(desc: &CheckDescriptor, p: u64) -> CheckReport {
    CheckReport {
        id: desc.id,
        param: p,
        modulus: desc.exponent.map(|e| format!("{p}^{e}")),
        status: CheckStatus::Skip,
        lhs: String::new(),
        rhs: String::new(),
        elapsed_ms: 0.0,
        detail: None,
    }
}

/// Evaluates a congruence against prebuilt tables for `tables.p()`.
///
/// A negative valuation while reducing a term is reported as a failure with
/// a diagnostic rather than an error.
pub fn evaluate_check_with(desc: &CheckDescriptor, tables: &PrimeTables) -> Result<CheckReport> {
    let p = tables.p();
    validate_prime(p)?;
    if desc.kind != CheckKind::Congruence {
        return Err(Error::OutOfRange(format!("{} is an exact identity", desc.id)));
    }
    if !desc.accepts(p) {
        return Ok(skip_report(desc, p));
    }
    let mut report = skip_report(desc, p);
    match evaluate_sides(desc, tables) {
        Ok(ev) => {
            report.status = if ev.lhs == ev.rhs { CheckStatus::Pass } else { CheckStatus::Fail };
            report.lhs = ev.lhs.to_string();
            report.rhs = ev.rhs.to_string();
            report.detail = ev.detail;
        }
        Err(Error::NegativeValuation(v)) => {
            report.status = CheckStatus::Fail;
            report.detail = Some(format!("term with p-adic valuation {v}"));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Both sides of a congruence as residues modulo `p^e`, without the filter.
pub fn evaluate_sides(desc: &CheckDescriptor, tables: &PrimeTables) -> Result<Evaluation> {
    let e = desc.exponent.ok_or_else(|| Error::OutOfRange(format!("{} is an exact identity", desc.id)))?;
    if !tables.needs().covers(desc.needs) {
        return Err(Error::MissingTable(desc.id.as_str()));
    }
    let ctx = make_ctx(tables.p(), e)?;
    congruences::evaluate(desc.id, &ctx, tables)
}

/// Evaluates an exact identity at parameter `n`.
pub fn evaluate_identity(id: &str, n: u64) -> Result<CheckReport> {
    let desc = lookup(id)?;
    let ev = identities::evaluate(desc.id, n)?;
    Ok(CheckReport {
        id: desc.id,
        param: n,
        modulus: None,
        status: if ev.holds() { CheckStatus::Pass } else { CheckStatus::Fail },
        lhs: crate::rational::render(&ev.lhs),
        rhs: crate::rational::render(&ev.rhs),
        elapsed_ms: 0.0,
        detail: ev.detail,
    })
}

/// Exact sides of an identity at `n`.
pub fn evaluate_identity_sides(id: CheckId, n: u64) -> Result<ExactEvaluation> {
    identities::evaluate(id, n)
}
