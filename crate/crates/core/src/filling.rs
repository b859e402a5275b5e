//! Fillings and degrees.
//!
//! The filling of a path turns every valley into a peak; it is the join of
//! all covers. Iterating it reaches `u^n` after `δ(P)` steps.

use serde::Serialize;

use crate::counting::{binom, BigCount};
use crate::error::{Error, Result};
use crate::lattice::raise_valley;
use crate::path::Path;

fn raise_all<F: Fn(usize, i32) -> bool>(p: &Path, keep: F) -> Path {
    p.valleys()
        .into_iter()
        .filter(|&(i, h)| keep(i, h))
        .fold(*p, |acc, (i, _)| raise_valley(&acc, i))
}

/// `P̃`: every valley turned into a peak. `filling(u^n) = u^n`.
pub fn filling(p: &Path) -> Path {
    raise_all(p, |_, _| true)
}

/// `P′`: only the low valleys (those at height `lv(P)`) turned into peaks.
pub fn low_fill(p: &Path) -> Path {
    match p.lv() {
        Some(lv) => raise_all(p, |_, h| h == lv),
        None => *p,
    }
}

/// `P*`: every valley turned into a peak except the final point when the
/// path ends with a downstep.
pub fn star_fill(p: &Path) -> Path {
    let n = p.len();
    raise_all(p, |i, _| i != n)
}

/// `δ(P)`: number of filling iterations needed to reach `u^n`.
///
/// Panics if the iteration disagrees with `|P| - 1 - lv(P)`.
pub fn degree(p: &Path) -> usize {
    let iterated = filling_iterates(p).len() - 1;
    if let Some(lv) = p.lv() {
        let formula = p.len() as i64 - 1 - lv as i64;
        assert_eq!(iterated as i64, formula, "degree of {p}: iteration and lowest-valley formula disagree");
    }
    iterated
}

/// `P = P^(0), P^(1), ..., P^(δ) = u^n`.
pub fn filling_iterates(p: &Path) -> Vec<Path> {
    let mut out = vec![*p];
    let mut cur = *p;
    while !cur.is_top() {
        cur = filling(&cur);
        out.push(cur);
    }
    out
}

/// O(n) recognition of the image of [`filling`]: `P ≠ d`, no factor `dduu`,
/// no prefix `duu`, no suffix `dd`.
pub fn is_filling(p: &Path) -> bool {
    let s = p.render();
    s != "d" && !s.contains("dduu") && !s.starts_with("duu") && !s.ends_with("dd")
}

/// Number of fillings of length `n`: `a_0 = a_1 = 1`, `a_2 = 3`,
/// `a_n = a_{n-1} + a_{n-2} + a_{n-3}`.
pub fn count_fillings(n: usize) -> BigCount {
    let mut a = [BigCount::from(1u32), BigCount::from(1u32), BigCount::from(3u32)];
    if n < 3 {
        return a[n].clone();
    }
    for _ in 3..=n {
        let next = &a[0] + &a[1] + &a[2];
        a = [a[1].clone(), a[2].clone(), next];
    }
    a[2].clone()
}

/// Number of paths of length `n` with degree `k`:
/// `binom(min(n, k), ⌊(k + 2) / 2⌋)` for `1 <= k <= 2n - 1`, and `1` for
/// `k = 0`.
pub fn degree_count(n: usize, k: usize) -> Result<BigCount> {
    if k == 0 {
        return Ok(BigCount::from(1u32));
    }
    if n == 0 || k > 2 * n - 1 {
        return Err(Error::domain(format!("degree {k} out of range for length {n}")));
    }
    Ok(binom(n.min(k) as i64, ((k + 2) / 2) as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FillingReport {
    pub filling: Path,
    pub low_fill: Path,
    pub star_fill: Path,
    pub degree: usize,
    pub iterates: Vec<Path>,
}

pub fn filling_report(p: &Path) -> FillingReport {
    FillingReport {
        filling: filling(p),
        low_fill: low_fill(p),
        star_fill: star_fill(p),
        degree: degree(p),
        iterates: filling_iterates(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{covers, is_below, join, IntervalSpec};
    use crate::path::p;

    #[test]
    fn filling_examples() {
        assert_eq!(filling(&p("dduudududdd")), p("duduududddu"));
        assert_eq!(filling(&p("u5")), p("u5"));
        assert_eq!(filling(&p("dd")), p("du"));
        assert_eq!(filling(&Path::EMPTY), Path::EMPTY);
    }

    #[test]
    fn filling_is_join_of_covers() {
        for n in 1..=10 {
            for q in Path::all(n).filter(|q| !q.is_top()) {
                let j = covers(&q).iter().fold(q, |acc, c| join(&acc, c).unwrap());
                assert_eq!(filling(&q), j, "{q}");
            }
        }
    }

    #[test]
    fn partial_fill_examples() {
        let q = p("dduudududdd");
        assert_eq!(low_fill(&q), p("dduudududdu"));
        assert!(is_below(&q, &low_fill(&q)) && is_below(&low_fill(&q), &filling(&q)));
        assert_eq!(star_fill(&p("ud")), p("ud"));
        assert_eq!(star_fill(&p("uudd")), p("uudd"));
        assert_eq!(star_fill(&p("dudu")), p("udud"));
    }

    #[test]
    fn partial_fills_sit_below_filling() {
        for n in 0..=10 {
            for q in Path::all(n) {
                let f = filling(&q);
                assert!(is_below(&q, &low_fill(&q)));
                assert!(is_below(&low_fill(&q), &f));
                assert!(is_below(&star_fill(&q), &f));
            }
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree(&p("u7")), 0);
        assert_eq!(degree(&p("dd")), 3);
        assert_eq!(filling_iterates(&p("dd")), vec![p("dd"), p("du"), p("ud"), p("uu")]);
        for k in 1..=12 {
            assert_eq!(degree(&Path::bottom(k)), 2 * k - 1);
        }
    }

    #[test]
    fn degree_formula_exhaustive() {
        // degree() itself asserts the lowest-valley formula
        for n in 0..=12 {
            for q in Path::all(n) {
                let d = degree(&q);
                if !q.is_top() {
                    assert_eq!(d as i64, n as i64 - 1 - q.lv().unwrap() as i64);
                }
            }
        }
    }

    #[test]
    fn is_filling_examples() {
        assert!(!is_filling(&p("d")));
        assert!(is_filling(&p("du")));
        assert!(!is_filling(&p("uudduu")));
        assert!(is_filling(&Path::EMPTY));
        let two: Vec<_> = Path::all(2).filter(is_filling).collect();
        assert_eq!(two.len(), 3);
    }

    #[test]
    fn is_filling_matches_image() {
        for n in 0..=12 {
            let image: std::collections::HashSet<Path> = Path::all(n).map(|q| filling(&q)).collect();
            for q in Path::all(n) {
                assert_eq!(is_filling(&q), image.contains(&q), "{q}");
            }
        }
    }

    #[test]
    fn filling_counts() {
        assert_eq!(count_fillings(2), BigCount::from(3u32));
        assert_eq!(count_fillings(4), BigCount::from(9u32));
        assert_eq!(count_fillings(7), BigCount::from(57u32));
        assert_eq!(Path::all(7).filter(is_filling).count(), 57);
    }

    #[test]
    fn degree_count_examples() {
        assert_eq!(degree_count(2, 3).unwrap(), BigCount::from(1u32));
        assert_eq!(degree_count(3, 3).unwrap(), BigCount::from(3u32));
        assert!(degree_count(2, 4).is_err());
        assert!(degree_count(0, 1).is_err());
        for n in 1..=12usize {
            let total: BigCount = (0..=2 * n - 1).map(|k| degree_count(n, k).unwrap()).sum();
            assert_eq!(total, BigCount::from(1u64 << n));
        }
    }

    #[test]
    fn filling_is_monotone() {
        for n in 0..=8 {
            let all: Vec<_> = Path::all(n).collect();
            for a in &all {
                for b in all.iter().filter(|b| !b.is_top() && is_below(a, b)) {
                    assert!(is_below(&filling(a), &filling(b)));
                    if a != &Path::top(n) {
                        assert!(a != &filling(a));
                    }
                }
            }
        }
    }

    #[test]
    fn lowest_valley_rises_by_one() {
        for n in 1..=10 {
            let skip = Path::top(n - 1).pushed(crate::path::Step::Down);
            for q in Path::all(n).filter(|q| !q.is_top() && *q != skip) {
                assert_eq!(filling(&q).lv(), q.lv().map(|v| v + 1), "{q}");
            }
        }
    }

    #[test]
    fn filling_interval_is_boolean() {
        for n in 0..=10 {
            for q in Path::all(n) {
                let size = IntervalSpec::new(q, filling(&q)).unwrap().size();
                assert_eq!(size, BigCount::from(1u64 << q.valleys().len()));
            }
        }
    }
}
