//! Dyck paths over the step alphabet {U, D} and their joint-node statistics.
//!
//! A path here is any balanced word: it may dip below the x-axis. Up steps
//! that start below the axis are *flaws*.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// A single lattice step: up `(1,1)` or down `(1,-1)`.
///
/// `Down < Up`, so sorting words by their steps gives the lexicographic order
/// used by the enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Down,
    Up,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("path word has odd length {0}")]
    OddLength(usize),
    #[error("path word is unbalanced: {ups} up steps vs {downs} down steps")]
    Unbalanced { ups: usize, downs: usize },
    #[error("invalid character {ch:?} at position {pos} (expected U or D)")]
    InvalidChar { ch: char, pos: usize },
}

/// A balanced word of up and down steps, from `(0,0)` to `(2n,0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    pub fn empty() -> Path {
        Path { steps: Vec::new() }
    }

    /// Builds a path from raw steps, checking the balance condition.
    pub fn from_steps(steps: Vec<Step>) -> Result<Path, ParseError> {
        let ups = steps.iter().filter(|&&s| s == Step::Up).count();
        let downs = steps.len() - ups;
        if steps.len() % 2 == 1 {
            return Err(ParseError::OddLength(steps.len()));
        }
        if ups != downs {
            return Err(ParseError::Unbalanced { ups, downs });
        }
        Ok(Path { steps })
    }

    /// Caller guarantees the steps are balanced.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Path {
        debug_assert!(Path::from_steps(steps.clone()).is_ok());
        Path { steps }
    }

    pub fn parse(word: &str) -> Result<Path, ParseError> {
        let mut steps = Vec::with_capacity(word.len());
        for (pos, ch) in word.chars().enumerate() {
            match ch {
                'U' | 'u' => steps.push(Step::Up),
                'D' | 'd' => steps.push(Step::Down),
                _ => return Err(ParseError::InvalidChar { ch, pos }),
            }
        }
        Path::from_steps(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Heights after each prefix; `h[0] = 0` and `h[2n] = 0`.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut heights = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0;
        heights.push(h);
        for s in &self.steps {
            h += s.delta();
            heights.push(h);
        }
        heights
    }

    pub fn stats(&self) -> StatVector {
        stats_of_steps(&self.steps)
    }

    /// True iff the path never passes below the x-axis.
    pub fn is_catalan(&self) -> bool {
        let mut h = 0i64;
        for s in &self.steps {
            h += s.delta();
            if h < 0 {
                return false;
            }
        }
        true
    }

    /// Concatenation of segments; each segment is balanced so the result is too.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a [Step]>) -> Path {
        let steps: Vec<Step> = parts.into_iter().flatten().copied().collect();
        Path::from_steps_unchecked(steps)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Path::parse(s)
    }
}

/// Statistics of a balanced step word; see [`Path::stats`].
///
/// An up step is a flaw iff it starts strictly below the axis. Joint nodes are
/// counted at every height.
pub fn stats_of_steps(steps: &[Step]) -> StatVector {
    let mut flaws = 0;
    let mut h = 0i64;
    for &s in steps {
        if s == Step::Up && h < 0 {
            flaws += 1;
        }
        h += s.delta();
    }
    let mut sv = StatVector {
        semilength: steps.len() / 2,
        flaws,
        ..StatVector::default()
    };
    for pair in steps.windows(2) {
        match (pair[0], pair[1]) {
            (Step::Up, Step::Down) => sv.peaks += 1,
            (Step::Down, Step::Up) => sv.valleys += 1,
            (Step::Up, Step::Up) => sv.double_ascents += 1,
            (Step::Down, Step::Down) => sv.double_descents += 1,
        }
    }
    sv
}

/// Semilength, flaw count and the four joint-node counts of one path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct StatVector {
    pub semilength: usize,
    pub flaws: usize,
    pub peaks: usize,
    pub valleys: usize,
    pub double_ascents: usize,
    pub double_descents: usize,
}

impl StatVector {
    pub fn joint_nodes(&self) -> usize {
        self.peaks + self.valleys + self.double_ascents + self.double_descents
    }
}

impl fmt::Display for StatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} peaks={} valleys={} da={} dd={}",
            self.semilength,
            self.flaws,
            self.peaks,
            self.valleys,
            self.double_ascents,
            self.double_descents
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(n: usize, m: usize, p: usize, v: usize, a: usize, d: usize) -> StatVector {
        StatVector {
            semilength: n,
            flaws: m,
            peaks: p,
            valleys: v,
            double_ascents: a,
            double_descents: d,
        }
    }

    #[test]
    fn parse_accepts_mixed_case() {
        let p: Path = "uDUd".parse().unwrap();
        assert_eq!(p.to_string(), "UDUD");
        assert_eq!(p.semilength(), 2);
    }

    #[test]
    fn parse_empty() {
        let p = Path::parse("").unwrap();
        assert!(p.is_empty());
        assert_eq!(p.semilength(), 0);
        assert_eq!(p.to_string(), "");
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(Path::parse("UUD"), Err(ParseError::OddLength(3)));
        assert_eq!(
            Path::parse("UUUD"),
            Err(ParseError::Unbalanced { ups: 3, downs: 1 })
        );
        assert_eq!(
            Path::parse("UXDD"),
            Err(ParseError::InvalidChar { ch: 'X', pos: 1 })
        );
    }

    #[test]
    fn render() {
        assert_eq!(Path::parse("ud").unwrap().to_string(), "UD");
        assert_eq!(Path::parse("DUUD").unwrap().to_string(), "DUUD");
    }

    #[test]
    fn heights() {
        assert_eq!(Path::parse("UDUD").unwrap().height_profile(), vec![0, 1, 0, 1, 0]);
        assert_eq!(Path::parse("DUUD").unwrap().height_profile(), vec![0, -1, 0, 1, 0]);
        assert_eq!(Path::empty().height_profile(), vec![0]);
    }

    #[test]
    fn stats_examples() {
        assert_eq!(Path::parse("UDDU").unwrap().stats(), sv(2, 1, 1, 1, 0, 1));
        assert_eq!(Path::parse("DDUU").unwrap().stats(), sv(2, 2, 0, 1, 1, 1));
        assert_eq!(Path::parse("UUDD").unwrap().stats(), sv(2, 0, 1, 0, 1, 1));
        // below-axis joint nodes count too
        assert_eq!(Path::parse("DUDU").unwrap().stats().peaks, 1);
        assert_eq!(Path::empty().stats(), StatVector::default());
    }

    #[test]
    fn catalan() {
        assert!(Path::parse("UDUD").unwrap().is_catalan());
        assert!(!Path::parse("DU").unwrap().is_catalan());
        assert!(Path::empty().is_catalan());
    }
}
