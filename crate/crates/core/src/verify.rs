//! Verification suites: every identity the library predicts, diffed against
//! the enumeration oracle.
//!
//! A suite is a list of named checks. Each check counts the comparisons it
//! made and keeps the first mismatch, so a pass with zero cases is visible as
//! vacuous in the report.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Display;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::{cf_step, cf_step_inverse, complement, reverse_complement};
use crate::closed_forms::{
    binomial, catalan, central_peak, narayana_ascent, narayana_peak, one_flaw_peak, peak_pair_sum,
    PeakRecurrence,
};
use crate::enumerate::{enumerate_paths, Oracle, StatKind};
use crate::path::{Path, StatVector};
use crate::series::{build_a, build_p, IdentityInputs, TruncSeries};

/// `P_{n,m}(x)` for `n <= 6`, transcribed from the published table.
pub const PEAK_TABLE: [(usize, usize, &str); 27] = [
    (1, 0, "x"),
    (1, 1, "1"),
    (2, 0, "x^2+x"),
    (2, 1, "2x"),
    (2, 2, "x+1"),
    (3, 0, "x^3+3x^2+x"),
    (3, 1, "3x^2+2x"),
    (3, 2, "2x^2+3x"),
    (3, 3, "x^2+3x+1"),
    (4, 0, "x^4+6x^3+6x^2+x"),
    (4, 1, "4x^3+8x^2+2x"),
    (4, 2, "3x^3+8x^2+3x"),
    (4, 3, "2x^3+8x^2+4x"),
    (4, 4, "x^3+6x^2+6x+1"),
    (5, 0, "x^5+10x^4+20x^3+10x^2+x"),
    (5, 1, "5x^4+20x^3+15x^2+2x"),
    (5, 2, "4x^4+18x^3+17x^2+3x"),
    (5, 3, "3x^4+17x^3+18x^2+4x"),
    (5, 4, "2x^4+15x^3+20x^2+5x"),
    (5, 5, "x^4+10x^3+20x^2+10x+1"),
    (6, 0, "x^6+15x^5+50x^4+50x^3+15x^2+x"),
    (6, 1, "6x^5+40x^4+60x^3+24x^2+2x"),
    (6, 2, "5x^5+35x^4+60x^3+29x^2+3x"),
    (6, 3, "4x^5+32x^4+60x^3+32x^2+4x"),
    (6, 4, "3x^5+29x^4+60x^3+35x^2+5x"),
    (6, 5, "2x^5+24x^4+60x^3+40x^2+6x"),
    (6, 6, "x^5+15x^4+50x^3+50x^2+15x+1"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Formulas,
    Bijections,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Oracle, Suite::Formulas, Suite::Bijections, Suite::Series];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Formulas => "formulas",
            Suite::Bijections => "bijections",
            Suite::Series => "series",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub status: &'static str,
    pub cases: u64,
    pub first_failure: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl Check {
    fn new(name: &str) -> Check {
        Check {
            check: name.to_string(),
            status: "pass",
            cases: 0,
            first_failure: None,
            detail: Value::Null,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    fn fail(&mut self, msg: impl FnOnce() -> String) {
        if self.first_failure.is_none() {
            self.first_failure = Some(msg());
            self.status = "fail";
        }
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg);
        }
    }

    fn expect_eq<T: PartialEq + Display>(&mut self, got: &T, expected: &T, ctx: impl FnOnce() -> String) {
        self.expect(got == expected, || format!("{}: got {got}, expected {expected}", ctx()));
    }

    fn with_detail(mut self, detail: Value) -> Check {
        self.detail = detail;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub status: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, checks: Vec<Check>) -> SuiteReport {
        let ok = checks.iter().all(Check::passed);
        SuiteReport {
            suite: suite.name(),
            status: if ok { "pass" } else { "fail" },
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

pub fn oracle_suite(oracle: &Oracle, n_max: usize) -> SuiteReport {
    let n_max = n_max.min(oracle.n_max());
    let mut row_sums = Check::new("chung_feller_row_sums");
    let mut totals = Check::new("total_is_central_binomial");
    let mut reciprocity = Check::new("peak_reciprocity");
    let mut phi = Check::new("valley_is_complemented_peak");
    let mut psi = Check::new("double_descent_equals_double_ascent");
    let mut shift = Check::new("catalan_valley_peak_shift");
    let mut golden = Check::new("peak_table_golden");

    for n in 0..=n_max {
        let peak = oracle.table(n, StatKind::Peak);
        let valley = oracle.table(n, StatKind::Valley);
        let asc = oracle.table(n, StatKind::DoubleAscent);
        let desc = oracle.table(n, StatKind::DoubleDescent);
        let c = catalan(n as u64);
        for t in [peak, valley, asc, desc] {
            totals.expect_eq(&t.total(), &binomial(2 * n as u64, n as u64), || format!("n={n} {}", t.stat));
            for m in 0..=n {
                row_sums.expect_eq(&t.row_sum(m), &c, || format!("n={n} m={m} {}", t.stat));
            }
        }
        for m in 0..=n {
            for k in 0..=2 * n {
                reciprocity.expect_eq(
                    &peak.get(m, k),
                    &peak.get_signed((n - m) as i64, n as i64 - k as i64),
                    || format!("p({n},{m},{k}) vs p({n},{},{})", n - m, n as i64 - k as i64),
                );
                phi.expect_eq(&valley.get(m, k), &peak.get(n - m, k), || format!("v({n},{m},{k})"));
                psi.expect_eq(&desc.get(m, k), &asc.get(m, k), || format!("d({n},{m},{k})"));
            }
        }
        if n >= 1 {
            for k in 0..=n {
                shift.expect_eq(&valley.get(0, k), &peak.get(0, k + 1), || format!("v({n},0,{k})"));
            }
        }
    }
    for (n, m, expected) in PEAK_TABLE.iter().filter(|r| r.0 <= n_max) {
        let got = oracle.table(*n, StatKind::Peak).polynomial(*m).expect("m <= n").to_string();
        golden.expect_eq(&got.as_str(), expected, || format!("P_({n},{m})"));
    }

    let paths = path_invariants(n_max.min(8));
    SuiteReport::new(
        Suite::Oracle,
        vec![row_sums, totals, reciprocity, phi, psi, shift, golden, paths],
    )
}

/// Per-path invariants of the statistics, exhaustively.
fn path_invariants(n_max: usize) -> Check {
    let mut check = Check::new("path_statistic_invariants");
    for n in 0..=n_max {
        for p in enumerate_paths(n, None) {
            let sv = p.stats();
            let w = p.to_string();
            if n >= 1 {
                check.expect_eq(&sv.joint_nodes(), &(2 * n - 1), || format!("{w} joint nodes"));
            }
            check.expect(sv.flaws <= n, || format!("{w} has {} flaws", sv.flaws));
            check.expect(p.is_catalan() == (sv.flaws == 0), || format!("{w} catalan vs flaws"));
            check.expect(
                (sv.flaws == n) == (complement(&p).stats().flaws == 0),
                || format!("{w} all-flawed vs complement"),
            );
            if sv.flaws == 0 && n >= 1 {
                check.expect_eq(&sv.peaks, &(sv.valleys + 1), || format!("{w} peaks vs valleys"));
            }
            if n <= 6 {
                check.expect(Path::parse(&w).as_ref() == Ok(&p), || format!("{w} round trip"));
            }
        }
    }
    check
}

pub fn formulas_suite(oracle: &Oracle, n_max: usize) -> SuiteReport {
    let n_max = n_max.min(oracle.n_max());
    let mut nar_peak = Check::new("narayana_peak");
    let mut nar_rows = Check::new("narayana_row_sums");
    let mut nar_asc = Check::new("double_ascent_flaw_independence");
    let mut nar_desc = Check::new("double_descent_flaw_independence");
    let mut one_flaw = Check::new("one_flaw_peak");
    let mut pair = Check::new("peak_pair_sum");
    let mut valley_pair = Check::new("valley_pair_sum");
    let mut central = Check::new("central_peak");
    let mut valley_central = Check::new("central_valley");
    let mut recurrence = Check::new("peak_recurrence");
    let mut rec = PeakRecurrence::new();

    for n in 1..=n_max {
        let nu = n as u64;
        let ni = n as i64;
        let peak = oracle.table(n, StatKind::Peak);
        let valley = oracle.table(n, StatKind::Valley);
        let asc = oracle.table(n, StatKind::DoubleAscent);
        let desc = oracle.table(n, StatKind::DoubleDescent);
        for k in 0..=2 * ni {
            nar_peak.expect_eq(&peak.get_signed(0, k), &narayana_peak(nu, k).unwrap(), || format!("p({n},0,{k})"));
            for m in 0..=n {
                let f = narayana_ascent(nu, k).unwrap();
                nar_asc.expect_eq(&asc.get_signed(m as i64, k), &f, || format!("a({n},{m},{k})"));
                nar_desc.expect_eq(&desc.get_signed(m as i64, k), &f, || format!("d({n},{m},{k})"));
            }
            if n >= 2 {
                one_flaw.expect_eq(&peak.get_signed(1, k), &one_flaw_peak(nu, k).unwrap(), || format!("p({n},1,{k})"));
            }
        }
        let sp: BigInt = (0..=ni + 1).map(|k| narayana_peak(nu, k).unwrap()).sum();
        let sa: BigInt = (0..=ni + 1).map(|k| narayana_ascent(nu, k).unwrap()).sum();
        nar_rows.expect_eq(&sp, &catalan(nu), || format!("peak row n={n}"));
        nar_rows.expect_eq(&sa, &catalan(nu), || format!("ascent row n={n}"));

        if n >= 2 {
            for k in 1..=ni / 2 {
                let expected = peak_pair_sum(nu, k).unwrap();
                for m in 1..n {
                    let mi = m as i64;
                    let by_k = peak.get_signed(mi, k) + peak.get_signed(mi, ni - k);
                    let by_m = peak.get_signed(mi, k) + peak.get_signed(ni - mi, k);
                    pair.expect_eq(&by_k, &expected, || format!("p({n},{m},{k})+p({n},{m},{})", ni - k));
                    pair.expect_eq(&by_m, &expected, || format!("p({n},{m},{k})+p({n},{},{k})", ni - mi));
                    let v_by_k = valley.get_signed(mi, k) + valley.get_signed(mi, ni - k);
                    let v_by_m = valley.get_signed(mi, k) + valley.get_signed(ni - mi, k);
                    valley_pair.expect_eq(&v_by_k, &expected, || format!("v({n},{m},{k})+v({n},{m},{})", ni - k));
                    valley_pair.expect_eq(&v_by_m, &expected, || format!("v({n},{m},{k})+v({n},{},{k})", ni - mi));
                }
            }
        }
        if n % 2 == 0 {
            let half = n / 2;
            let expected = central_peak(half as u64).unwrap();
            for m in 1..n {
                central.expect_eq(&peak.get(m, half), &expected, || format!("p({n},{m},{half})"));
                valley_central.expect_eq(&valley.get(m, half), &expected, || format!("v({n},{m},{half})"));
            }
        }
    }
    for n in 0..=n_max {
        let peak = oracle.table(n, StatKind::Peak);
        for m in 0..=n {
            let got = rec.poly(n, m).expect("m <= n");
            let expected = peak.polynomial(m).expect("m <= n");
            recurrence.expect_eq(&got, &expected, || format!("P_({n},{m})"));
        }
    }
    SuiteReport::new(
        Suite::Formulas,
        vec![
            nar_peak,
            nar_rows,
            nar_asc,
            nar_desc,
            one_flaw,
            pair,
            valley_pair,
            central,
            valley_central,
            recurrence,
        ],
    )
}

pub fn bijections_suite(n_max: usize) -> SuiteReport {
    let mut involutions = Check::new("involutions");
    let mut phi_transport = Check::new("complement_transport");
    let mut psi_transport = Check::new("reverse_complement_transport");
    let mut cf = Check::new("cf_step_bijection");
    let mut cf_inv = Check::new("cf_step_inverse_two_sided");
    let mut class_sizes: BTreeMap<String, Vec<usize>> = BTreeMap::new();

    for n in 0..=n_max {
        let mut images: Vec<HashSet<Path>> = vec![HashSet::new(); n + 1];
        let mut class_count = vec![0usize; n + 1];
        for p in enumerate_paths(n, None) {
            let w = p.to_string();
            let sv = p.stats();
            class_count[sv.flaws] += 1;
            if n <= 8 {
                let c = complement(&p);
                let r = reverse_complement(&p);
                involutions.expect(complement(&c) == p, || format!("phi(phi({w}))"));
                involutions.expect(reverse_complement(&r) == p, || format!("psi(psi({w}))"));
                let expected_c = StatVector {
                    semilength: n,
                    flaws: n - sv.flaws,
                    peaks: sv.valleys,
                    valleys: sv.peaks,
                    double_ascents: sv.double_descents,
                    double_descents: sv.double_ascents,
                };
                phi_transport.expect(c.stats() == expected_c, || format!("stats of phi({w})"));
                let expected_r = StatVector {
                    double_ascents: sv.double_descents,
                    double_descents: sv.double_ascents,
                    ..sv
                };
                psi_transport.expect(r.stats() == expected_r, || format!("stats of psi({w})"));
            }
            if sv.flaws < n {
                match cf_step(&p) {
                    Ok(img) => {
                        let si = img.stats();
                        cf.expect(si.flaws == sv.flaws + 1, || format!("flaws of cf({w})={img}"));
                        cf.expect(
                            si.double_ascents == sv.double_ascents,
                            || format!("double ascents of cf({w})={img}"),
                        );
                        cf.expect(si.semilength == n, || format!("length of cf({w})"));
                        cf_inv.expect(
                            cf_step_inverse(&img).as_ref() == Ok(&p),
                            || format!("cf_inv(cf({w}))"),
                        );
                        cf.expect(images[sv.flaws + 1].insert(img), || format!("cf({w}) collides"));
                    }
                    Err(e) => cf.expect(false, || format!("cf({w}) failed: {e}")),
                }
            }
            if sv.flaws >= 1 {
                match cf_step_inverse(&p) {
                    Ok(pre) => {
                        cf_inv.expect(pre.stats().flaws + 1 == sv.flaws, || format!("flaws of cf_inv({w})"));
                        cf_inv.expect(cf_step(&pre).as_ref() == Ok(&p), || format!("cf(cf_inv({w}))"));
                    }
                    Err(e) => cf_inv.expect(false, || format!("cf_inv({w}) failed: {e}")),
                }
            }
        }
        for m in 1..=n {
            // injective with image as large as the target class means onto
            cf.expect_eq(&images[m].len(), &class_count[m], || format!("|cf(L_{n},{})| vs |L_{n},{m}|", m - 1));
        }
        class_sizes.insert(n.to_string(), class_count);
    }
    let cf = cf.with_detail(json!({ "class_sizes": class_sizes }));
    SuiteReport::new(
        Suite::Bijections,
        vec![involutions, phi_transport, psi_transport, cf, cf_inv],
    )
}

fn series_matches_oracle(name: &str, series: &TruncSeries, oracle: &Oracle, stat: StatKind) -> Check {
    let mut check = Check::new(name);
    for n in 0..=series.order().min(oracle.n_max()) {
        let table = oracle.table(n, stat);
        let coeff = series.coeff(n);
        for (x, y, c) in coeff.terms() {
            check.expect(x >= 0 && y >= 0, || format!("negative exponent at z^{n}: x^{x} y^{y}"));
            let expected = table.get_signed(y as i64, x as i64);
            check.expect_eq(c, &expected, || format!("[x^{x} y^{y} z^{n}]"));
        }
        for (m, row) in &table.rows {
            for (k, c) in row {
                check.expect_eq(&coeff.coeff(*k as i32, *m as i32), c, || format!("[x^{k} y^{m} z^{n}]"));
            }
        }
    }
    check
}

pub fn series_suite(oracle: &Oracle, order: usize) -> SuiteReport {
    let inputs = IdentityInputs::build(order);
    let mut checks: Vec<Check> = inputs
        .check_all()
        .into_iter()
        .map(|r| {
            let mut c = Check::new(&format!("identity_{}", r.identity));
            c.cases = 1;
            if let Some(f) = &r.first_failure {
                c.fail(|| format!("z^{} x^{} y^{}: got {}, expected {}", f.n, f.xexp, f.yexp, f.got, f.expected));
            }
            c.with_detail(serde_json::to_value(&r).expect("serializable"))
        })
        .collect();
    checks.push(series_matches_oracle("build_p_matches_oracle", &build_p(order), oracle, StatKind::Peak));
    checks.push(series_matches_oracle("build_a_matches_oracle", &build_a(order), oracle, StatKind::DoubleAscent));
    SuiteReport::new(Suite::Series, checks)
}

/// Runs the requested suites. The oracle is built once, up to the larger of
/// `n_max` and `order`.
pub fn run_suites(suites: &[Suite], n_max: usize, order: usize) -> Vec<SuiteReport> {
    let needs_oracle = suites.iter().any(|s| *s != Suite::Bijections);
    let oracle_n = if suites.contains(&Suite::Series) { n_max.max(order) } else { n_max };
    let oracle = if needs_oracle { Oracle::build(oracle_n) } else { Oracle::build(0) };
    suites
        .iter()
        .map(|s| match s {
            Suite::Oracle => oracle_suite(&oracle, n_max),
            Suite::Formulas => formulas_suite(&oracle, n_max),
            Suite::Bijections => bijections_suite(n_max),
            Suite::Series => series_suite(&oracle, order),
        })
        .collect()
}
