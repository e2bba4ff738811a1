//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact; the only tolerances are the wall-clock limits.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use dyckflaw::closed_forms::{catalan, narayana_ascent, one_flaw_peak, peak_pair_sum, PeakRecurrence};
use dyckflaw::enumerate::{tabulate, Oracle};
use dyckflaw::series::{build_a, build_p, CheckStatus, IdentityInputs};
use dyckflaw::verify::PEAK_TABLE;
use dyckflaw::{cf_step, cf_step_inverse, enumerate_paths, Path, StatKind};

const N_MAX: usize = 12;
const BIJECTION_N_MAX: usize = 10;
const SERIES_ORDER: usize = 8;

const TABLE_LIMIT: Duration = Duration::from_secs(1);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(60);
const SERIES_LIMIT: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, took: Duration, what: &str) -> Result<(), String> {
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn table_golden() -> Outcome {
    let started = Instant::now();
    let tables: Vec<_> = (0..=6).map(|n| tabulate(n)[0].clone()).collect();
    let mut count = 0;
    for (n, m, expected) in PEAK_TABLE {
        let got = tables[n].polynomial(m).map_err(|e| e.to_string())?.to_string();
        ensure(got == expected, || format!("P_({n},{m}) = {got}, expected {expected}"))?;
        count += 1;
    }
    within(TABLE_LIMIT, started.elapsed(), "table")?;
    Ok(format!("{count} polynomials in {:?}", started.elapsed()))
}

fn chung_feller(oracle: &Oracle, took: Duration) -> Outcome {
    let mut rows = 0;
    for n in 0..=N_MAX {
        let c = catalan(n as u64);
        for stat in StatKind::ALL {
            for m in 0..=n {
                let s = oracle.table(n, stat).row_sum(m);
                ensure(s == c, || format!("n={n} m={m} {stat}: {s} != {c}"))?;
                rows += 1;
            }
        }
    }
    within(ENUMERATION_LIMIT, took, "single-threaded enumeration")?;
    Ok(format!("{rows} rows; enumeration n<=12 on 1 thread in {took:?}"))
}

fn reciprocity(oracle: &Oracle) -> Outcome {
    let mut cases = 0;
    for n in 1..=N_MAX as i64 {
        let t = oracle.table(n as usize, StatKind::Peak);
        for m in 0..=n {
            for k in 0..=n {
                let (a, b) = (t.get_signed(m, k), t.get_signed(n - m, n - k));
                ensure(a == b, || format!("p({n},{m},{k})={a} vs p({n},{},{})={b}", n - m, n - k))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} coefficients"))
}

fn one_flaw(oracle: &Oracle) -> Outcome {
    let mut cases = 0;
    for n in 2..=N_MAX as i64 {
        let t = oracle.table(n as usize, StatKind::Peak);
        for k in -1..=n + 1 {
            // one_flaw_peak panics if the rational prefactor leaves a remainder
            let f = one_flaw_peak(n as u64, k).map_err(|e| e.to_string())?;
            let o = t.get_signed(1, k);
            ensure(f == o, || format!("p({n},1,{k}): formula {f}, oracle {o}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} values, all prefactors integral"))
}

fn pair_sums(oracle: &Oracle) -> Outcome {
    let mut cases = 0;
    let mut middle = 0;
    for n in 2..=N_MAX as i64 {
        let t = oracle.table(n as usize, StatKind::Peak);
        for k in 1..=n / 2 {
            let expected = peak_pair_sum(n as u64, k).map_err(|e| e.to_string())?;
            for m in 1..n {
                let by_k = t.get_signed(m, k) + t.get_signed(m, n - k);
                let by_m = t.get_signed(m, k) + t.get_signed(n - m, k);
                ensure(by_k == expected, || format!("p({n},{m},{k})+p({n},{m},{}) = {by_k} != {expected}", n - k))?;
                ensure(by_m == expected, || format!("p({n},{m},{k})+p({n},{},{k}) = {by_m} != {expected}", n - m))?;
                cases += 1;
                if 2 * k == n {
                    middle += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (n,m,k) triples, {middle} at k=n/2"))
}

fn recurrence(oracle: &Oracle) -> Outcome {
    let mut rec = PeakRecurrence::new();
    let mut cases = 0;
    for n in 0..=N_MAX {
        let t = oracle.table(n, StatKind::Peak);
        for m in 0..=n {
            let got = rec.poly(n, m).map_err(|e| e.to_string())?;
            let expected = t.polynomial(m).map_err(|e| e.to_string())?;
            ensure(got == expected, || format!("P_({n},{m}): recurrence {got}, oracle {expected}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} polynomials"))
}

fn ascent_independence(oracle: &Oracle) -> Outcome {
    let mut cases = 0;
    for n in 1..=N_MAX as i64 {
        let t = oracle.table(n as usize, StatKind::DoubleAscent);
        for m in 0..=n {
            for k in -1..=n + 1 {
                let f = narayana_ascent(n as u64, k).map_err(|e| e.to_string())?;
                let o = t.get_signed(m, k);
                ensure(f == o, || format!("a({n},{m},{k}): formula {f}, oracle {o}"))?;
                cases += 1;
            }
        }
    }
    let t0 = oracle.table(0, StatKind::DoubleAscent);
    ensure(t0.get(0, 0) == BigInt::from(1), || "a(0,0,0) != 1".into())?;
    Ok(format!("{cases} coefficients"))
}

fn cf_bijection() -> Outcome {
    let mut mapped = 0usize;
    for n in 1..=BIJECTION_N_MAX {
        let classes: Vec<HashSet<Path>> = (0..=n).map(|m| enumerate_paths(n, Some(m)).collect()).collect();
        for m in 0..n {
            let mut image = HashSet::new();
            for p in &classes[m] {
                let q = cf_step(p).map_err(|e| e.to_string())?;
                let (sp, sq) = (p.stats(), q.stats());
                ensure(sq.flaws == m + 1, || format!("cf({p}) = {q} has {} flaws", sq.flaws))?;
                ensure(sq.double_ascents == sp.double_ascents, || format!("cf({p}) = {q} changes double ascents"))?;
                let back = cf_step_inverse(&q).map_err(|e| e.to_string())?;
                ensure(&back == p, || format!("cf_inv(cf({p})) = {back}"))?;
                ensure(image.insert(q), || format!("cf not injective at {p}"))?;
            }
            ensure(image == classes[m + 1], || format!("cf(L_{n},{m}) != L_{n},{}", m + 1))?;
            for q in &classes[m + 1] {
                let p = cf_step_inverse(q).map_err(|e| e.to_string())?;
                let again = cf_step(&p).map_err(|e| e.to_string())?;
                ensure(&again == q, || format!("cf(cf_inv({q})) = {again}"))?;
            }
            mapped += classes[m].len();
        }
    }
    Ok(format!("{mapped} paths mapped, n<=10"))
}

fn series(oracle: &Oracle) -> Outcome {
    let started = Instant::now();
    let results = IdentityInputs::build(SERIES_ORDER).check_all();
    ensure(results.len() == 8, || format!("expected 8 identities, got {}", results.len()))?;
    for r in &results {
        ensure(r.passed(), || format!("identity ({}) failed: {:?}", r.identity, r.first_failure))?;
    }
    let mut coeffs = 0;
    for (s, stat) in [(build_p(SERIES_ORDER), StatKind::Peak), (build_a(SERIES_ORDER), StatKind::DoubleAscent)] {
        for n in 0..=SERIES_ORDER {
            let t = oracle.table(n, stat);
            let c = s.coeff(n);
            for m in 0..=n as i32 + 1 {
                for k in -1..=2 * n as i32 {
                    let got = c.coeff(k, m);
                    let expected = t.get_signed(m as i64, k as i64);
                    ensure(got == expected, || format!("{stat} [x^{k} y^{m} z^{n}]: series {got}, oracle {expected}"))?;
                    if !expected.is_zero() {
                        coeffs += 1;
                    }
                }
            }
            ensure(c.min_exponents().is_none_or(|(a, b)| a >= 0 && b >= 0), || format!("negative exponent at z^{n}"))?;
        }
    }
    within(SERIES_LIMIT, started.elapsed(), "series suite")?;
    Ok(format!("identities (a)-(h) pass, {coeffs} nonzero coefficients match, {:?}", started.elapsed()))
}

fn negative_control(oracle: &Oracle) -> Outcome {
    let mut inputs = IdentityInputs::build(SERIES_ORDER);
    let mut c = inputs.p0.coeff(4);
    c.add_term(2, 0, BigInt::from(1));
    inputs.p0.set_coeff(4, c);
    let failed: Vec<&str> = inputs
        .check_all()
        .iter()
        .filter(|r| r.status == CheckStatus::Fail)
        .map(|r| r.identity)
        .collect();
    ensure(failed.contains(&"a"), || format!("corrupted P0 not caught by (a); failing: {failed:?}"))?;

    let mut inputs = IdentityInputs::build(SERIES_ORDER);
    let mut c = inputs.a0.coeff(3);
    c.add_term(1, 0, BigInt::from(-1));
    inputs.a0.set_coeff(3, c);
    ensure(inputs.check("f").is_some(), || "corrupted A0 not caught by (f)".into())?;

    let mut table = oracle.table(5, StatKind::Peak).clone();
    *table.rows.get_mut(&2).and_then(|r| r.get_mut(&3)).ok_or("missing cell")? += 1;
    let corrupted = table.polynomial(2).map_err(|e| e.to_string())?.to_string();
    ensure(corrupted != "4x^4+18x^3+17x^2+3x", || "corrupted oracle cell still matches the table".into())?;
    Ok(format!("P0 corruption fails {failed:?}; A0 corruption fails (f); oracle corruption breaks golden"))
}

fn main() -> ExitCode {
    // a custom harness still receives libtest flags; only honour --list
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }

    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("thread pool");
    let oracle = pool.install(|| Oracle::build(N_MAX));
    let enumeration_time = started.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("AC1 golden peak table (n<=6)", Box::new(table_golden)),
        ("AC2 Chung-Feller row sums (n<=12)", Box::new(|| chung_feller(&oracle, enumeration_time))),
        ("AC3 peak reciprocity (n<=12)", Box::new(|| reciprocity(&oracle))),
        ("AC4 one-flaw closed form (n<=12)", Box::new(|| one_flaw(&oracle))),
        ("AC5 flaw-independent pair sums (n<=12)", Box::new(|| pair_sums(&oracle))),
        ("AC6 peak recurrence (n<=12)", Box::new(|| recurrence(&oracle))),
        ("AC7 double ascents are Narayana for every m (n<=12)", Box::new(|| ascent_independence(&oracle))),
        ("AC8 cf_step bijection (n<=10)", Box::new(cf_bijection)),
        ("AC9 series identities and coefficients (N=8)", Box::new(|| series(&oracle))),
        ("AC10 negative control", Box::new(|| negative_control(&oracle))),
    ];

    let mut failures = 0;
    for (name, run) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed ({:?})",
        criteria.len() - failures,
        started.elapsed()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
