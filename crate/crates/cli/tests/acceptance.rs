//! Acceptance suite. Every criterion is an exact match (zero tolerance); the
//! only numeric bounds are the runtime limits below. Prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use supercong::report::write_jsonl;
use supercong::{run_sweep, CheckSelection, SweepConfig, SweepOutcome};
use supercong_core::primes::primes_in;
use supercong_core::rational::{self, BigRat};
use supercong_core::registry::{descriptor, evaluate_identity_sides, evaluate_sides};
use supercong_core::{
    evaluate_check, make_ctx, rational_to_residue, CheckId, CheckStatus, PrimeTables, WzEngine,
    WzPoint,
};

const C1_SINGLE_LIMIT: Duration = Duration::from_secs(30);
const C1_JOBS4_LIMIT: Duration = Duration::from_secs(10);
const C7_LIMIT: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn sweep(ids: &[CheckId], lo: u64, hi: u64, jobs: usize) -> SweepOutcome {
    let cfg = SweepConfig { checks: CheckSelection::Ids(ids.to_vec()), prime_lo: lo, prime_hi: hi, jobs };
    run_sweep(&cfg).expect("valid sweep")
}

/// Every (id, p) passes, except filtered primes, which must be skips.
fn all_pass(out: &SweepOutcome, ids: &[CheckId], lo: u64, hi: u64) -> Outcome {
    let primes = primes_in(lo, hi);
    if out.reports.len() != ids.len() * primes.len() {
        return Err(format!("expected {} reports, got {}", ids.len() * primes.len(), out.reports.len()));
    }
    for r in &out.reports {
        let filtered = !descriptor(r.id).accepts(r.param);
        let ok = match r.status {
            CheckStatus::Pass => !filtered,
            CheckStatus::Skip => filtered,
            CheckStatus::Fail => false,
        };
        if !ok {
            return Err(format!("{} at p={} is {} (lhs {}, rhs {})", r.id, r.param, r.status, r.lhs, r.rhs));
        }
    }
    Ok(format!(
        "{} primes in {lo}..={hi}: {} pass, {} skip by filter",
        primes.len(),
        out.summary.pass,
        out.summary.skip
    ))
}

fn moduli_are(out: &SweepOutcome, expect: &[(CheckId, u32)]) -> Result<(), String> {
    for r in &out.reports {
        let e = expect.iter().find(|(id, _)| *id == r.id).map(|(_, e)| *e).unwrap();
        if r.modulus != Some(format!("{}^{e}", r.param)) {
            return Err(format!("{} at {} has modulus {:?}, want p^{e}", r.id, r.param, r.modulus));
        }
    }
    Ok(())
}

fn c1() -> Outcome {
    let ids = [CheckId::THM_1_1];
    let t = Instant::now();
    let single = sweep(&ids, 5, 499, 1);
    let t_single = t.elapsed();
    let t = Instant::now();
    let four = sweep(&ids, 5, 499, 4);
    let t_four = t.elapsed();
    moduli_are(&single, &[(CheckId::THM_1_1, 4)])?;
    all_pass(&single, &ids, 5, 499)?;
    let msg = all_pass(&four, &ids, 5, 499)?;
    if t_single > C1_SINGLE_LIMIT || t_four > C1_JOBS4_LIMIT {
        return Err(format!("too slow: {t_single:.2?} single, {t_four:.2?} with jobs=4"));
    }
    Ok(format!("{msg}; {t_single:.2?} single, {t_four:.2?} jobs=4"))
}

fn c2() -> Outcome {
    let ids = [CheckId::THM_1_3, CheckId::REMARK_1_2_FULL];
    let out = sweep(&ids, 5, 499, 4);
    moduli_are(&out, &[(CheckId::THM_1_3, 4), (CheckId::REMARK_1_2_FULL, 1)])?;
    all_pass(&out, &ids, 5, 499)
}

fn c3() -> Outcome {
    use CheckId::*;
    let ids = [THM_1_2, LEM_2_2, SUM_ALT_INV, SUM_ALT_INV2, H_HALF, H2_HALF, BINOM_TRANSFER, SIGMA_SUM_1, SIGMA_SUM_2, SIGMA_SUM_3];
    let out = sweep(&ids, 5, 997, 4);
    all_pass(&out, &ids, 5, 997)
}

fn c4() -> Outcome {
    use CheckId::*;
    let ids = [VH_ZUDILIN, SUN_4K1, GUO_LIU, CXH_3K1];
    let out = sweep(&ids, 5, 499, 4);
    moduli_are(&out, &[(VH_ZUDILIN, 3), (SUN_4K1, 4), (GUO_LIU, 4), (CXH_3K1, 4)])?;
    all_pass(&out, &ids, 5, 499)
}

fn c5() -> Outcome {
    use CheckId::*;
    let ids = [WOLSTENHOLME_H1, WOLSTENHOLME_H2, BINOM_2P1P, MORLEY, BINOM_4P, TWO_POW_HALF];
    let out = sweep(&ids, 5, 2003, 4);
    all_pass(&out, &ids, 5, 2003)
}

fn c6() -> Outcome {
    use CheckId::*;
    let ids = [
        LEM_3_2, LEM_3_3, LEM_3_4, LEM_4_1, LEM_4_3_A, LEM_4_3_B, LEM_4_4, LEM_4_4_TERM, LEM_4_5, LEM_4_6,
        AUX_BINOM_P1, AUX_ODD_PRODUCT,
    ];
    let out = sweep(&ids, 5, 199, 4);
    all_pass(&out, &ids, 5, 199)
}

fn c7() -> Outcome {
    let start = Instant::now();
    let mut wz = WzEngine::new();
    let mut points = 0usize;
    let mut check = |ok: bool, what: String| -> Result<(), String> {
        points += 1;
        if ok {
            Ok(())
        } else {
            Err(what)
        }
    };
    for n in 0..80 {
        for k in 1..=n + 1 {
            check(wz.wz_pair_check(WzPoint::new(n, k)).map_err(|e| e.to_string())?.holds(), format!("pair ({n},{k})"))?;
        }
    }
    for m in (1..=99).step_by(2) {
        check(wz.telescope_half_check(m).map_err(|e| e.to_string())?.holds(), format!("half telescope m={m}"))?;
    }
    for m in 1..=60 {
        check(wz.telescope_full_check(m).map_err(|e| e.to_string())?.holds(), format!("full telescope m={m}"))?;
    }
    for n in 0..=100 {
        check(wz.f_summand_equiv(n).holds(), format!("F summand n={n}"))?;
    }
    for n in 1..=40 {
        for k in 1..=n {
            check(wz.g_reform_check(WzPoint::new(n, k)).map_err(|e| e.to_string())?.holds(), format!("G form ({n},{k})"))?;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > C7_LIMIT {
        return Err(format!("too slow: {elapsed:.2?}"));
    }
    Ok(format!("{points} exact points in {elapsed:.2?}"))
}

fn c8() -> Outcome {
    use CheckId::*;
    let mut count = 0;
    let mut run = |id: CheckId, n: u64| -> Result<(), String> {
        let ev = evaluate_identity_sides(id, n).map_err(|e| format!("{id} at {n}: {e}"))?;
        count += 1;
        if ev.holds() {
            Ok(())
        } else {
            Err(format!("{id} fails at {n} {:?}", ev.detail))
        }
    };
    for id in [LEM_2_1_A, LEM_2_1_B, SIGMA_ID_1, SIGMA_ID_2, SIGMA_ID_3] {
        for n in 1..=200 {
            run(id, n)?;
        }
    }
    for m in (1..=201).step_by(2) {
        run(SUM_BINOM_P_HALF, m)?;
    }
    for p in primes_in(2, 97) {
        run(POWER_SUM_RESIDUE_CLASS, p)?;
    }
    Ok(format!("{count} exact evaluations"))
}

fn c9() -> Outcome {
    for p in [5u64, 7, 11, 13] {
        let ctx = make_ctx(p, 4).map_err(|e| e.to_string())?;
        let h = (p - 1) / 2;
        let mut exact = BigRat::from_integer(0.into());
        for n in 0..=h {
            let c = rational::big(rational::binomial(2 * n, n));
            exact += rational::int(6 * n as i64 + 1) * &c * &c * &c
                / rational::big(num_bigint::BigInt::from(-512).pow(n as u32));
        }
        let oracle = rational_to_residue(&exact, &ctx).map_err(|e| e.to_string())?;
        let d = descriptor(CheckId::THM_1_1);
        let tables = PrimeTables::new(p, d.needs).map_err(|e| e.to_string())?;
        let lhs = evaluate_sides(d, &tables).map_err(|e| e.to_string())?.lhs;
        if lhs != oracle {
            return Err(format!("p={p}: residue {lhs}, oracle {oracle}"));
        }
    }
    let spot = |id: &str, want: (&str, &str)| -> Result<(), String> {
        let r = evaluate_check(id, 5).map_err(|e| e.to_string())?;
        if r.status != CheckStatus::Pass || (r.lhs.as_str(), r.rhs.as_str()) != want || r.modulus.as_deref() != Some("5^3") {
            return Err(format!("{id} at 5: {} {} {} {:?}", r.status, r.lhs, r.rhs, r.modulus));
        }
        Ok(())
    };
    spot("MORLEY", ("6", "6"))?;
    spot("BINOM_2P1P", ("1", "1"))?;
    Ok("THM_1_1 residue = oracle at 5, 7, 11, 13; MORLEY 6 = 6 and BINOM_2P1P 1 = 1 mod 125".into())
}

fn stripped_jsonl(out: &SweepOutcome) -> Vec<u8> {
    let mut buf = Vec::new();
    write_jsonl(&mut buf, &out.reports).unwrap();
    let mut stripped = Vec::new();
    for line in String::from_utf8(buf).unwrap().lines() {
        let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
        v.as_object_mut().unwrap().remove("ms");
        stripped.extend(serde_json::to_vec(&v).unwrap());
        stripped.push(b'\n');
    }
    stripped
}

fn c10() -> Outcome {
    let ids = [CheckId::THM_1_1];
    let one = stripped_jsonl(&sweep(&ids, 5, 499, 1));
    let eight = stripped_jsonl(&sweep(&ids, 5, 499, 8));
    let again = stripped_jsonl(&sweep(&ids, 5, 499, 8));
    if one != eight {
        return Err("jobs=1 and jobs=8 differ".into());
    }
    if eight != again {
        return Err("two jobs=8 runs differ".into());
    }
    Ok(format!("{} bytes identical across jobs=1, jobs=8 and a repeat run", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("THM_1_1 for 5 <= p <= 499 mod p^4, within runtime limits", c1),
        ("THM_1_3 and REMARK_1_2_FULL for 5 <= p <= 499", c2),
        ("harmonic-sum congruences for primes up to 997", c3),
        ("VH_ZUDILIN, SUN_4K1, GUO_LIU, CXH_3K1 for p <= 499", c4),
        ("Wolstenholme, BINOM_2P1P, MORLEY, BINOM_4P, TWO_POW_HALF for 5 <= p <= 2003", c5),
        ("WZ-term congruences for 5 <= p <= 199", c6),
        ("exact WZ grids", c7),
        ("exact identities", c8),
        ("residue vs rational oracle, spot values", c9),
        ("determinism and parallel soundness", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("PASS  criterion {:>2}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
