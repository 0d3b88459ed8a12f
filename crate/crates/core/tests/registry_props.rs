use supercong_core::primes::primes_in;
use supercong_core::rational::{self, BigRat};
use supercong_core::registry::{descriptor, evaluate_check_with, evaluate_sides};
use supercong_core::{
    evaluate_check, fermat_quotient, harmonic_sum, make_ctx, rational_to_residue, registry_list,
    CheckId, CheckKind, CheckStatus, Needs, PrimeTables, Residue, WzEngine, WzPoint,
};

fn lhs(id: CheckId, tables: &PrimeTables) -> Residue {
    evaluate_sides(descriptor(id), tables).unwrap().lhs
}

#[test]
fn half_range_sum_splits_along_the_telescope() {
    for p in primes_in(5, 97) {
        let t = PrimeTables::new(p, Needs::EULER).unwrap();
        let whole = lhs(CheckId::THM_1_1, &t);
        assert_eq!(whole, lhs(CheckId::LEM_3_2, &t) + lhs(CheckId::LEM_3_4, &t), "p={p}");
    }
}

#[test]
fn full_range_sum_splits_into_g_ranges() {
    for p in primes_in(5, 61) {
        let t = PrimeTables::new(p, Needs::EULER | Needs::EULER_QUARTER).unwrap();
        let parts = lhs(CheckId::LEM_4_1, &t)
            + lhs(CheckId::LEM_4_4, &t)
            + lhs(CheckId::LEM_4_5, &t)
            + lhs(CheckId::LEM_4_6, &t);
        assert_eq!(lhs(CheckId::THM_1_3, &t), parts, "p={p}");
    }
}

#[test]
fn skip_exactly_when_filtered() {
    for d in registry_list().iter().filter(|d| d.kind == CheckKind::Congruence) {
        for p in primes_in(3, 40) {
            let r = evaluate_check(d.id.as_str(), p).unwrap();
            assert_eq!(r.status == CheckStatus::Skip, !d.accepts(p), "{} at {p}", d.id);
            if r.status != CheckStatus::Skip {
                assert_eq!(r.status, CheckStatus::Pass, "{} at {p}", d.id);
            }
        }
    }
}

#[test]
fn exponents_are_sharp() {
    // Raising e by one breaks each congruence at some small prime, except the
    // pointwise product (an exact identity) and C(4p-1,2p-1), which holds to a
    // higher power than the one pinned here.
    let exempt = [CheckId::AUX_ODD_PRODUCT, CheckId::BINOM_4P];
    for d in registry_list().iter().filter(|d| d.kind == CheckKind::Congruence) {
        if exempt.contains(&d.id) {
            continue;
        }
        let mut strict = *d;
        strict.exponent = d.exponent.map(|e| e + 1);
        let broken = primes_in(7, 60).into_iter().any(|p| {
            let t = PrimeTables::new(p, d.needs).unwrap();
            !evaluate_sides(&strict, &t).unwrap().holds()
        });
        assert!(broken, "{} still holds at e+1", d.id);
    }
}

#[test]
fn literal_alternating_sum_statement_fails_at_five() {
    // sum_{k<=2} (-1)^k/k = -1/2 = 2 mod 5, while -q + q^2/2 - (-1)^h E = 0 mod 5.
    let ctx = make_ctx(5, 1).unwrap();
    let sum = harmonic_sum(2, 1, true, &ctx).unwrap();
    let q = fermat_quotient(2, &ctx).unwrap();
    let e = ctx.int(-1);
    let literal = -q + q * q * ctx.int(2).inv().unwrap() - e;
    assert_eq!((sum.value(), literal.value()), (2, 0));
    // The corrected form at 5^2 holds.
    let r = evaluate_check("SUM_ALT_INV", 5).unwrap();
    assert_eq!(r.status, CheckStatus::Pass);
    assert_eq!(r.modulus.as_deref(), Some("5^2"));
}

fn cubic_sum(a: i64, base: i64, top: u64) -> BigRat {
    let mut acc = BigRat::from_integer(0.into());
    for k in 0..=top {
        let c = rational::big(rational::binomial(2 * k, k));
        acc += rational::int(a * k as i64 + 1) * &c * &c * &c / rational::big(num_bigint::BigInt::from(base).pow(k as u32));
    }
    acc
}

#[test]
fn residue_sums_agree_with_exact_sums() {
    for p in [5u64, 7, 11, 13] {
        let t = PrimeTables::new(p, Needs::EULER | Needs::EULER_QUARTER).unwrap();
        let ctx4 = make_ctx(p, 4).unwrap();
        let h = (p - 1) / 2;
        let cases = [
            (CheckId::THM_1_1, cubic_sum(6, -512, h)),
            (CheckId::THM_1_3, cubic_sum(6, -512, p - 1)),
            (CheckId::CXH_3K1, cubic_sum(3, -8, p - 1)),
            (CheckId::SUN_4K1, cubic_sum(4, -64, p - 1)),
        ];
        for (id, exact) in cases {
            assert_eq!(lhs(id, &t), rational_to_residue(&exact, &ctx4).unwrap(), "{id} at {p}");
        }

        let mut wz = WzEngine::new();
        let mut f_sum = BigRat::from_integer(0.into());
        for n in 0..=h {
            f_sum += wz.f_term(WzPoint::new(n, 0));
        }
        assert_eq!(lhs(CheckId::THM_1_1, &t), rational_to_residue(&f_sum, &ctx4).unwrap());

        let mut g_half = BigRat::from_integer(0.into());
        for k in 1..=h {
            g_half += wz.g_term(WzPoint::new(p, k));
        }
        assert_eq!(lhs(CheckId::LEM_4_4, &t), rational_to_residue(&g_half, &ctx4).unwrap());
        let f_diag = wz.f_term(WzPoint::new(p - 1, p - 1));
        assert_eq!(lhs(CheckId::LEM_4_1, &t), rational_to_residue(&f_diag, &ctx4).unwrap());
    }
}

#[test]
fn prebuilt_tables_reused_across_checks() {
    let t = PrimeTables::new(101, Needs::EULER | Needs::EULER_QUARTER).unwrap();
    for d in registry_list().iter().filter(|d| d.kind == CheckKind::Congruence) {
        assert_eq!(evaluate_check_with(d, &t).unwrap().status, CheckStatus::Pass, "{}", d.id);
    }
}
