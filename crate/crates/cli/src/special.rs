//! Special-number queries for the `special` subcommand.

use supercong_core::make_ctx;
use supercong_core::rational::{self, render};
use supercong_core::special::{
    bernoulli_numbers_mod_p, bernoulli_poly_mod_p, euler_numbers_exact, euler_numbers_mod_p,
    euler_poly_mod_p, ExactBernoulli,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Euler,
    Bernoulli,
    EulerPoly,
    BernoulliPoly,
}

/// Exact values are only computed up to this index.
const EXACT_LIMIT: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValue {
    pub label: String,
    pub p: u64,
    pub residue: u64,
    pub exact: Option<String>,
}

/// Parses `a/b` or `a`.
pub fn parse_fraction(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::InvalidArgument(format!("expected a fraction a/b, got {s:?}"));
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if b == 0 {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn query_special(kind: Kind, p: u64, n: usize, x: Option<(i64, i64)>) -> Result<SpecialValue, CliError> {
    make_ctx(p, 1)?;
    let exact_ok = n <= EXACT_LIMIT;
    let (label, residue, exact) = match kind {
        Kind::Euler => {
            let t = euler_numbers_mod_p(p, n)?;
            let exact = exact_ok.then(|| euler_numbers_exact(n)[n].to_string());
            (format!("E_{n}"), t.values()[n].value(), exact)
        }
        Kind::Bernoulli => {
            let t = bernoulli_numbers_mod_p(p, n)?;
            let exact = exact_ok.then(|| render(ExactBernoulli::new(n).number(n)));
            (format!("B_{n}"), t.values()[n].value(), exact)
        }
        Kind::EulerPoly | Kind::BernoulliPoly => {
            let (a, b) = x.ok_or_else(|| CliError::InvalidArgument("--x is required for polynomials".into()))?;
            let xq = rational::rat(a, b);
            let xs = render(&xq);
            if kind == Kind::EulerPoly {
                let r = euler_poly_mod_p(n, a, b, p)?;
                let exact = exact_ok.then(|| render(&ExactBernoulli::new(n + 1).euler_poly(n, &xq)));
                (format!("E_{n}({xs})"), r.value(), exact)
            } else {
                let r = bernoulli_poly_mod_p(n, a, b, p)?;
                let exact = exact_ok.then(|| render(&ExactBernoulli::new(n).poly(n, &xq)));
                (format!("B_{n}({xs})"), r.value(), exact)
            }
        }
    };
    Ok(SpecialValue { label, p, residue, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let v = query_special(Kind::Euler, 7, 4, None).unwrap();
        assert_eq!((v.residue, v.exact.as_deref()), (5, Some("5")));
        let v = query_special(Kind::EulerPoly, 7, 2, Some((1, 4))).unwrap();
        // -3/16 mod 7: 16 = 2, -3/2 = 2.
        assert_eq!((v.residue, v.exact.as_deref()), (2, Some("-3/16")));
        assert!(query_special(Kind::Bernoulli, 5, 4, None).is_err());
        assert!(query_special(Kind::EulerPoly, 7, 2, None).is_err());
        assert_eq!(parse_fraction("-3/4").unwrap(), (-3, 4));
        assert!(parse_fraction("1/0").is_err());
    }
}
