//! Step complement, reverse complement, and the flaw-incrementing bijection
//! that preserves double ascents.
//!
//! The flaw-incrementing map works on the factorization of a path into
//! *excursions*: maximal factors that leave the x-axis and return to it,
//! either strictly above it or strictly below it. A path is `S R U Q D T`
//! where `U Q D` is the right-most excursion above the axis, `R` is the run
//! of below-axis excursions directly before it, `S` is everything earlier
//! (empty or ending in an above-axis excursion), and `T` is what follows
//! (below-axis only). The map sends it to `S T D R U Q`, and the inverse
//! reads the same six pieces back off the image.

use std::fmt;

use crate::path::{Path, Step};
use crate::Error;

/// Flips every step (`phi`). Sends `(n, m, peaks, valleys, da, dd)` to
/// `(n, n-m, valleys, peaks, dd, da)`.
pub fn complement(p: &Path) -> Path {
    Path::from_steps_unchecked(p.steps().iter().map(|s| s.flip()).collect())
}

/// Reverses the word and flips every step (`psi`). Preserves flaws, peaks
/// and valleys, and swaps double ascents with double descents.
pub fn reverse_complement(p: &Path) -> Path {
    Path::from_steps_unchecked(p.steps().iter().rev().map(|s| s.flip()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Excursion {
    start: usize,
    end: usize,
    above: bool,
}

/// Splits a path at every return to the x-axis. Contiguous and covering.
fn excursions(p: &Path) -> Vec<Excursion> {
    let mut out = Vec::new();
    let mut h = 0i64;
    let mut start = 0;
    for (i, s) in p.steps().iter().enumerate() {
        h += s.delta();
        if h == 0 {
            out.push(Excursion {
                start,
                end: i + 1,
                above: p.steps()[start] == Step::Up,
            });
            start = i + 1;
        }
    }
    out
}

/// The six pieces `S, R, U, Q, D, T` of a path. `S`, `R`, `Q` and `T` are
/// themselves balanced words, any of which may be empty; `U Q D` is a prime
/// Catalan path and `D R U` is its mirror below the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfDecomposition {
    pub s: Path,
    pub r: Path,
    pub q: Path,
    pub t: Path,
    /// Index of the distinguished up step in the decomposed word.
    pub up_index: usize,
    /// Index of the distinguished down step in the decomposed word.
    pub down_index: usize,
}

impl CfDecomposition {
    /// `S R U Q D T`: the path with `m` flaws.
    pub fn source(&self) -> Path {
        Path::concat([
            self.s.steps(),
            self.r.steps(),
            &[Step::Up],
            self.q.steps(),
            &[Step::Down],
            self.t.steps(),
        ])
    }

    /// `S T D R U Q`: the path with `m + 1` flaws.
    pub fn image(&self) -> Path {
        Path::concat([
            self.s.steps(),
            self.t.steps(),
            &[Step::Down],
            self.r.steps(),
            &[Step::Up],
            self.q.steps(),
        ])
    }
}

fn segment(p: &Path, from: usize, to: usize) -> Path {
    Path::from_steps_unchecked(p.steps()[from..to].to_vec())
}

/// Renders as `S|R|U|Q|D|T` with `·` standing for an empty segment.
impl fmt::Display for CfDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Path| if p.is_empty() { "·".to_string() } else { p.to_string() };
        write!(
            f,
            "{}|{}|U|{}|D|{}",
            show(&self.s),
            show(&self.r),
            show(&self.q),
            show(&self.t)
        )
    }
}

/// Start of the maximal run of below-axis excursions ending just before
/// excursion `last`.
fn below_run_start(parts: &[Excursion], last: usize) -> usize {
    let mut i = last;
    while i > 0 && !parts[i - 1].above {
        i -= 1;
    }
    i
}

/// Decomposes a path with `m <= n - 1` flaws as `S R U Q D T`.
pub fn cf_decompose_forward(p: &Path) -> Result<CfDecomposition, Error> {
    let parts = excursions(p);
    let prime = parts
        .iter()
        .rposition(|e| e.above)
        .ok_or_else(|| Error::NoPrimeFactor(p.to_string()))?;
    let run = below_run_start(&parts, prime);
    let s_end = parts[run].start;
    let uqd = parts[prime];
    let dec = CfDecomposition {
        s: segment(p, 0, s_end),
        r: segment(p, s_end, uqd.start),
        q: segment(p, uqd.start + 1, uqd.end - 1),
        t: segment(p, uqd.end, p.len()),
        up_index: uqd.start,
        down_index: uqd.end - 1,
    };
    debug_assert!(complement(&dec.t).is_catalan());
    debug_assert!(complement(&dec.r).is_catalan());
    debug_assert!(dec.q.is_catalan());
    Ok(dec)
}

/// Decomposes a path with at least one flaw as `S T D R U Q`, where `D R U`
/// is the right-most excursion below the axis.
pub fn cf_decompose_inverse(p: &Path) -> Result<CfDecomposition, Error> {
    let parts = excursions(p);
    let prime = parts
        .iter()
        .rposition(|e| !e.above)
        .ok_or_else(|| Error::NoFlaws(p.to_string()))?;
    let run = below_run_start(&parts, prime);
    let s_end = parts[run].start;
    let dru = parts[prime];
    let dec = CfDecomposition {
        s: segment(p, 0, s_end),
        t: segment(p, s_end, dru.start),
        r: segment(p, dru.start + 1, dru.end - 1),
        q: segment(p, dru.end, p.len()),
        up_index: dru.end - 1,
        down_index: dru.start,
    };
    debug_assert!(dec.q.is_catalan());
    debug_assert!(complement(&dec.t).is_catalan());
    Ok(dec)
}

/// Raises the flaw count by one and keeps the double-ascent count.
pub fn cf_step(p: &Path) -> Result<Path, Error> {
    Ok(cf_decompose_forward(p)?.image())
}

/// Lowers the flaw count by one; two-sided inverse of [`cf_step`].
pub fn cf_step_inverse(p: &Path) -> Result<Path, Error> {
    Ok(cf_decompose_inverse(p)?.source())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(w: &str) -> Path {
        Path::parse(w).unwrap()
    }

    fn words(d: &CfDecomposition) -> [String; 4] {
        [&d.s, &d.r, &d.q, &d.t].map(|p| p.to_string())
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&path("UD")), path("DU"));
        let p = path("UUDD");
        let c = complement(&p);
        assert_eq!(c, path("DDUU"));
        let (a, b) = (p.stats(), c.stats());
        assert_eq!((a.flaws, a.peaks, a.valleys), (0, 1, 0));
        assert_eq!((b.flaws, b.peaks, b.valleys), (2, 0, 1));
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(reverse_complement(&path("UUDD")), path("UUDD"));
        let p = path("UUDDUD");
        let q = reverse_complement(&p);
        assert_eq!(q, path("UDUUDD"));
        assert_eq!(p.stats().double_ascents, q.stats().double_descents);
    }

    #[test]
    fn forward_decompositions() {
        let d = cf_decompose_forward(&path("UDUD")).unwrap();
        assert_eq!(words(&d), ["UD", "", "", ""]);
        assert_eq!((d.up_index, d.down_index), (2, 3));
        let d = cf_decompose_forward(&path("UUDD")).unwrap();
        assert_eq!(words(&d), ["", "", "UD", ""]);
        assert_eq!(d.to_string(), "·|·|U|UD|D|·");
        assert!(matches!(cf_decompose_forward(&path("DDUU")), Err(Error::NoPrimeFactor(_))));
    }

    #[test]
    fn forward_decomposition_with_all_pieces() {
        // S = UD, R = DU, UQD = UUDD, T = DDUU
        let d = cf_decompose_forward(&path("UDDUUUDDDDUU")).unwrap();
        assert_eq!(words(&d), ["UD", "DU", "UD", "DDUU"]);
        assert_eq!(d.source(), path("UDDUUUDDDDUU"));
        assert_eq!(d.image(), path("UDDDUUDDUUUD"));
    }

    #[test]
    fn step_examples() {
        assert_eq!(cf_step(&path("UDUD")).unwrap(), path("UDDU"));
        assert_eq!(cf_step(&path("UUDD")).unwrap(), path("DUUD"));
        assert_eq!(cf_step_inverse(&path("UDDU")).unwrap(), path("UDUD"));
        assert_eq!(cf_step_inverse(&path("DUUD")).unwrap(), path("UUDD"));
        assert!(matches!(cf_step_inverse(&path("UDUD")), Err(Error::NoFlaws(_))));
        assert!(cf_step(&Path::empty()).is_err());
    }

    #[test]
    fn inverse_decomposition_reassembles() {
        let p = path("UDDDUUDDUUUD");
        let d = cf_decompose_inverse(&p).unwrap();
        assert_eq!(d.image(), p);
        assert_eq!(d.source(), path("UDDUUUDDDDUU"));
    }
}
