use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use supercong_core::rational::{self, BigRat};
use supercong_core::wz::{f_term_mod, g_term_mod};
use supercong_core::{make_ctx, rational_to_residue, FactorialTable, WzEngine, WzPoint};

#[test]
fn terms_vanish_exactly_below_the_diagonal() {
    let mut wz = WzEngine::new();
    for n in 0..=60 {
        for k in 0..=60 {
            let pt = WzPoint::new(n, k);
            let (f, g) = (wz.f_term(pt), wz.g_term(pt));
            if n < k {
                assert!(f.is_zero() && g.is_zero(), "({n},{k})");
            } else {
                assert!(!f.is_zero(), "F({n},{k})");
                assert_eq!(g.is_zero(), n == 0, "G({n},{k})");
            }
        }
    }
}

#[test]
fn pair_relation_sums_to_the_telescope() {
    let mut wz = WzEngine::new();
    for m in (1..=99u64).step_by(2) {
        let h = (m - 1) / 2;
        let mut lhs = BigRat::zero();
        let mut rhs = BigRat::zero();
        for n in 0..=h {
            for k in 1..=h {
                let s = wz.wz_pair_check(WzPoint::new(n, k)).unwrap();
                assert!(s.holds(), "({n},{k})");
                lhs += s.lhs;
                rhs += s.rhs;
            }
        }
        let corner = wz.f_term(WzPoint::new(h, h));
        let tel = wz.telescope_half_check(m).unwrap();
        assert!(tel.holds(), "m={m}");
        assert_eq!(lhs + &corner, tel.lhs, "m={m}");
        assert_eq!(rhs + &corner, tel.rhs, "m={m}");
    }
}

#[test]
fn f_diagonal_denominators_are_powers_of_two() {
    let mut wz = WzEngine::new();
    let mut two_pow = BigInt::one();
    for n in 0..=100u64 {
        let f = wz.f_term(WzPoint::new(n, 0));
        assert!((&two_pow % f.denom()).is_zero(), "n={n}");
        two_pow <<= 9;
    }
}

#[test]
fn engines_are_independent() {
    let mut a = WzEngine::new();
    let mut b = WzEngine::new();
    let big = a.g_term(WzPoint::new(90, 40));
    let small = b.g_term(WzPoint::new(3, 2));
    assert_eq!(a.g_term(WzPoint::new(3, 2)), small);
    assert_eq!(b.g_term(WzPoint::new(90, 40)), big);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_terms_reduce_exact_terms(
        p in prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23]),
        n in 0u64..40,
        k in 0u64..40,
    ) {
        let ctx = make_ctx(p, 4).unwrap();
        let table = FactorialTable::new(&ctx, 4 * 40 + 4);
        let mut wz = WzEngine::new();
        let pt = WzPoint::new(n, k);
        for (exact, modular) in [
            (wz.f_term(pt), f_term_mod(&table, n, k)),
            (wz.g_term(pt), g_term_mod(&table, n, k)),
        ] {
            match modular {
                None => prop_assert!(exact.is_zero()),
                Some(m) => {
                    prop_assert_eq!(Some(m.val()), rational::valuation(&exact, p));
                    match rational_to_residue(&exact, &ctx) {
                        Ok(r) => prop_assert_eq!(m.to_residue().unwrap(), r),
                        Err(_) => prop_assert!(m.to_residue().is_err()),
                    }
                }
            }
        }
    }

    #[test]
    fn rising_factorial_shifts(a in -20i64..20, d in 1i64..8, k in 0u64..30) {
        // (x)_{k+1} = (x)_k (x + k)
        let x = rational::rat(a, d);
        let lhs = supercong_core::wz::rising(&x, k + 1);
        let rhs = supercong_core::wz::rising(&x, k) * (&x + rational::int(k as i64));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(supercong_core::wz::rising(&x, 0), BigRat::one());
    }
}
