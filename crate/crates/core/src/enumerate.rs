//! Brute-force enumeration of all n-Dyck paths, bucketed by flaws and by one
//! of the four joint-node statistics.
//!
//! This is the reference oracle every formula, bijection and generating
//! function in the crate is checked against.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::path::{stats_of_steps, Path, StatVector, Step};
use crate::poly::IntPolynomial;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatKind {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

impl StatKind {
    pub const ALL: [StatKind; 4] = [
        StatKind::Peak,
        StatKind::Valley,
        StatKind::DoubleAscent,
        StatKind::DoubleDescent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Peak => "peak",
            StatKind::Valley => "valley",
            StatKind::DoubleAscent => "double_ascent",
            StatKind::DoubleDescent => "double_descent",
        }
    }

    pub fn of(self, sv: &StatVector) -> usize {
        match self {
            StatKind::Peak => sv.peaks,
            StatKind::Valley => sv.valleys,
            StatKind::DoubleAscent => sv.double_ascents,
            StatKind::DoubleDescent => sv.double_descents,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownStat(s.to_string()))
    }
}

/// Rearranges `word` into the lexicographically next permutation of its
/// multiset of steps. Returns false (leaving `word` untouched) on the last one.
fn next_word(word: &mut [Step]) -> bool {
    let Some(i) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = word.iter().rposition(|&s| s > word[i]).expect("pivot has a successor");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// Visits every balanced word of semilength `n` that starts with `prefix`, in
/// lexicographic order (`D < U`). Words with an over-budget prefix are skipped.
fn for_each_word(n: usize, prefix: &[Step], mut visit: impl FnMut(&[Step])) {
    let ups = prefix.iter().filter(|&&s| s == Step::Up).count();
    let downs = prefix.len() - ups;
    if ups > n || downs > n {
        return;
    }
    let mut word = prefix.to_vec();
    word.extend(std::iter::repeat_n(Step::Down, n - downs));
    word.extend(std::iter::repeat_n(Step::Up, n - ups));
    let start = prefix.len();
    loop {
        visit(&word);
        if !next_word(&mut word[start..]) {
            break;
        }
    }
}

/// Iterator over n-Dyck paths in lexicographic order of their words.
#[derive(Debug, Clone)]
pub struct PathIter {
    word: Option<Vec<Step>>,
    flaws: Option<usize>,
}

impl Iterator for PathIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        loop {
            let word = self.word.as_mut()?;
            let current = word.clone();
            if !next_word(word) {
                self.word = None;
            }
            if self.flaws.is_none_or(|m| stats_of_steps(&current).flaws == m) {
                return Some(Path::from_steps_unchecked(current));
            }
        }
    }
}

/// All paths of semilength `n`, optionally restricted to exactly `flaws`
/// flaws. A flaw count above `n` gives an empty stream.
pub fn enumerate_paths(n: usize, flaws: Option<usize>) -> PathIter {
    if flaws.is_some_and(|m| m > n) {
        return PathIter { word: None, flaws };
    }
    let mut word = vec![Step::Down; n];
    word.extend(std::iter::repeat_n(Step::Up, n));
    PathIter {
        word: Some(word),
        flaws,
    }
}

/// Counts `p_{n,m,k}` (or the valley / double-ascent / double-descent
/// analogue) for one semilength: rows are flaw counts, columns statistic
/// values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub stat: StatKind,
    /// `rows[m][k]`; only nonzero counts are stored.
    pub rows: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

impl CountTable {
    pub fn get(&self, m: usize, k: usize) -> BigInt {
        self.rows
            .get(&m)
            .and_then(|row| row.get(&k))
            .cloned()
            .unwrap_or_default()
    }

    /// Signed lookup so identity checks can range over `n - k` freely.
    pub fn get_signed(&self, m: i64, k: i64) -> BigInt {
        if m < 0 || k < 0 {
            return BigInt::zero();
        }
        self.get(m as usize, k as usize)
    }

    pub fn row_sum(&self, m: usize) -> BigInt {
        self.rows
            .get(&m)
            .map(|row| row.values().sum())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        (0..=self.n).map(|m| self.row_sum(m)).sum()
    }

    pub fn polynomial(&self, m: usize) -> Result<IntPolynomial, Error> {
        if m > self.n {
            return Err(Error::FlawsExceedSemilength { m, n: self.n });
        }
        let deg = self.rows.get(&m).and_then(|r| r.keys().last().copied()).unwrap_or(0);
        Ok(IntPolynomial::from_coeffs((0..=deg).map(|k| self.get(m, k)).collect()))
    }

    /// `{"n", "stat", "rows": {"<m>": {"<k>": "<count>"}}}`, keys in numeric
    /// order, counts as decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Map<String, Value> = self
            .rows
            .iter()
            .map(|(m, row)| {
                let cells: Map<String, Value> = row
                    .iter()
                    .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
                    .collect();
                (m.to_string(), Value::Object(cells))
            })
            .collect();
        json!({ "n": self.n, "stat": self.stat.name(), "rows": rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,k,count\n");
        for (m, row) in &self.rows {
            for (k, c) in row {
                out.push_str(&format!("{m},{k},{c}\n"));
            }
        }
        out
    }

    /// Keeps only row `m` (used by the CLI when a single flaw class is asked for).
    pub fn restrict(&self, m: usize) -> CountTable {
        CountTable {
            n: self.n,
            stat: self.stat,
            rows: self.rows.iter().filter(|(r, _)| **r == m).map(|(r, v)| (*r, v.clone())).collect(),
        }
    }
}

/// Raw counts `[m][stat][k]` accumulated with native integers.
#[derive(Debug, Clone)]
struct Tally {
    n: usize,
    counts: Vec<u64>,
}

impl Tally {
    fn new(n: usize) -> Tally {
        Tally {
            n,
            counts: vec![0; (n + 1) * 4 * (2 * n).max(1)],
        }
    }

    fn slot(&self, m: usize, stat: usize, k: usize) -> usize {
        (m * 4 + stat) * (2 * self.n).max(1) + k
    }

    fn record(&mut self, sv: &StatVector) {
        for kind in StatKind::ALL {
            let i = self.slot(sv.flaws, kind.index(), kind.of(sv));
            self.counts[i] += 1;
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn to_table(&self, stat: StatKind) -> CountTable {
        let width = (2 * self.n).max(1);
        let mut rows = BTreeMap::new();
        for m in 0..=self.n {
            let row: BTreeMap<usize, BigInt> = (0..width)
                .filter_map(|k| {
                    let c = self.counts[self.slot(m, stat.index(), k)];
                    (c > 0).then(|| (k, BigInt::from(c)))
                })
                .collect();
            if !row.is_empty() {
                rows.insert(m, row);
            }
        }
        CountTable { n: self.n, stat, rows }
    }
}

const SPLIT_DEPTH: usize = 8;

/// All four count tables of semilength `n` from a single enumeration pass.
///
/// Work is split over word prefixes and merged by summation, so the result
/// does not depend on the number of worker threads.
pub fn tabulate(n: usize) -> [CountTable; 4] {
    let depth = SPLIT_DEPTH.min(2 * n);
    let prefixes: Vec<Vec<Step>> = (0..1u32 << depth)
        .map(|bits| {
            (0..depth)
                .map(|i| if bits >> (depth - 1 - i) & 1 == 1 { Step::Up } else { Step::Down })
                .collect()
        })
        .collect();
    let tally = prefixes
        .par_iter()
        .map(|prefix| {
            let mut t = Tally::new(n);
            for_each_word(n, prefix, |w| t.record(&stats_of_steps(w)));
            t
        })
        .reduce(|| Tally::new(n), Tally::merge);
    StatKind::ALL.map(|k| tally.to_table(k))
}

pub fn count_table(n: usize, stat: StatKind) -> CountTable {
    let [p, v, a, d] = tabulate(n);
    match stat {
        StatKind::Peak => p,
        StatKind::Valley => v,
        StatKind::DoubleAscent => a,
        StatKind::DoubleDescent => d,
    }
}

/// `P_{n,m}(x)` (or the analogue for `stat`) read off the oracle.
pub fn table_polynomial(n: usize, m: usize, stat: StatKind) -> Result<IntPolynomial, Error> {
    if m > n {
        return Err(Error::FlawsExceedSemilength { m, n });
    }
    count_table(n, stat).polynomial(m)
}

/// Memoized oracle tables for `n = 0..=n_max`, computed once and shared by
/// the verification suites.
#[derive(Debug, Clone)]
pub struct Oracle {
    tables: Vec<[CountTable; 4]>,
}

impl Oracle {
    pub fn build(n_max: usize) -> Oracle {
        Oracle {
            tables: (0..=n_max).map(tabulate).collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.tables.len() - 1
    }

    pub fn table(&self, n: usize, stat: StatKind) -> &CountTable {
        &self.tables[n][stat.index()]
    }
}
