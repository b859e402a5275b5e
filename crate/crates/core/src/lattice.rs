//! The lattice `P_n` of binary paths of length `n`, ordered by "lies weakly
//! below".

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::{Path, Step};

fn check_len(p: &Path, q: &Path) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::domain(format!("length mismatch: |{p}| = {}, |{q}| = {}", p.len(), q.len())));
    }
    Ok(())
}

/// `p <= q` for paths of equal length, without the length check.
#[inline]
pub fn is_below(p: &Path, q: &Path) -> bool {
    debug_assert_eq!(p.len(), q.len());
    // h_i(p) <= h_i(q) iff p has no more upsteps than q in every prefix.
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..p.len() {
        a += p.is_up(i) as u32;
        b += q.is_up(i) as u32;
        if a > b {
            return false;
        }
    }
    true
}

pub fn leq(p: &Path, q: &Path) -> Result<bool> {
    check_len(p, q)?;
    Ok(is_below(p, q))
}

fn combine(p: &Path, q: &Path, pick: fn(i32, i32) -> i32) -> Result<Path> {
    check_len(p, q)?;
    let heights: Vec<i32> = p.heights().into_iter().zip(q.heights()).map(|(a, b)| pick(a, b)).collect();
    let out = Path::from_heights(&heights);
    assert!(out.is_ok(), "pointwise extremum of {p} and {q} is not a path");
    out
}

/// Pointwise maximum of height profiles.
pub fn join(p: &Path, q: &Path) -> Result<Path> {
    combine(p, q, i32::max)
}

/// Pointwise minimum of height profiles.
pub fn meet(p: &Path, q: &Path) -> Result<Path> {
    combine(p, q, i32::min)
}

/// Turns the valley at point `i` (1-based) into a peak.
pub(crate) fn raise_valley(p: &Path, i: usize) -> Path {
    debug_assert_eq!(p.step(i - 1), Step::Down);
    let mut q = p.with_step(i - 1, Step::Up);
    if i < p.len() {
        debug_assert_eq!(p.step(i), Step::Up);
        q = q.with_step(i, Step::Down);
    }
    q
}

/// The elements covering `p`: one per valley.
pub fn covers(p: &Path) -> Vec<Path> {
    p.valleys().into_iter().map(|(i, _)| raise_valley(p, i)).collect()
}

/// `l(p, q)`, the common length of every maximal chain of `[p, q]`.
pub fn chain_dist(p: &Path, q: &Path) -> Result<u64> {
    if !leq(p, q)? {
        return Err(Error::domain(format!("{p} is not below {q}")));
    }
    let sum: i64 = (1..=p.len()).map(|i| (q.height_at(i) - p.height_at(i)) as i64).sum();
    Ok((sum / 2) as u64)
}

/// `ρ(p) = Σ (n - i + 1) [p_i = u]`.
pub fn rank(p: &Path) -> u64 {
    let n = p.len();
    (0..n).filter(|&i| p.is_up(i)).map(|i| (n - i) as u64).sum()
}

/// The order-reversing involution: every step flipped, so heights negate.
pub fn dual(p: &Path) -> Path {
    p.mirror()
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    lo: Path,
    hi: Path,
}

impl IntervalSpec {
    pub fn new(lo: Path, hi: Path) -> Result<IntervalSpec> {
        if !leq(&lo, &hi)? {
            return Err(Error::domain(format!("{lo} is not below {hi}")));
        }
        Ok(IntervalSpec { lo, hi })
    }

    pub fn lo(&self) -> Path {
        self.lo
    }

    pub fn hi(&self) -> Path {
        self.hi
    }

    pub fn contains(&self, r: &Path) -> bool {
        r.len() == self.lo.len() && is_below(&self.lo, r) && is_below(r, &self.hi)
    }

    /// Cardinality by a transfer count over height windows.
    pub fn size(&self) -> BigUint {
        let n = self.lo.len();
        let base = self.lo.min_height();
        let top = self.hi.heights().into_iter().max().unwrap_or(0).max(0);
        let width = (top - base + 1) as usize;
        let mut ways = vec![BigUint::zero(); width];
        ways[(0 - base) as usize] = BigUint::one();
        for i in 1..=n {
            let (lo, hi) = (self.lo.height_at(i), self.hi.height_at(i));
            let mut next = vec![BigUint::zero(); width];
            for h in (lo..=hi).step_by(2) {
                let idx = (h - base) as usize;
                let mut v = BigUint::zero();
                if idx >= 1 {
                    v += &ways[idx - 1];
                }
                if idx + 1 < width {
                    v += &ways[idx + 1];
                }
                next[idx] = v;
            }
            ways = next;
        }
        ways.into_iter().sum()
    }

    pub fn iter(&self) -> IntervalIter {
        IntervalIter::new(self.lo, self.hi)
    }
}

/// Every element of `[lo, hi]`, capped. Fails up front with
/// [`Error::CapExceeded`] when the interval holds more than `cap` paths.
pub fn interval_elements(iv: &IntervalSpec, cap: usize) -> Result<IntervalIter> {
    if iv.size() > BigUint::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    Ok(iv.iter())
}

/// Uncapped iteration over `[lo, hi]`; requires `lo <= hi`.
pub fn interval_iter(lo: Path, hi: Path) -> IntervalIter {
    debug_assert!(is_below(&lo, &hi));
    IntervalIter::new(lo, hi)
}

/// Walks `[lo, hi]` in lexicographic order of height profiles.
///
/// Each successor raises the rightmost step that can still go up and then
/// completes the tail as low as the lower bound allows. Any point inside the
/// height window has a valid continuation, so there are no dead ends.
#[derive(Debug, Clone)]
pub struct IntervalIter {
    lo: Path,
    hi: Path,
    next: Option<Path>,
}

impl IntervalIter {
    fn new(lo: Path, hi: Path) -> Self {
        IntervalIter { lo, hi, next: Some(lo) }
    }

    fn successor(&self, cur: &Path) -> Option<Path> {
        let n = cur.len();
        let pos = (0..n)
            .rev()
            .find(|&i| !cur.is_up(i) && cur.height_at(i) + 1 <= self.hi.height_at(i + 1))?;
        let mut out = cur.slice(0, pos).pushed(Step::Up);
        let mut h = cur.height_at(pos) + 1;
        for j in pos + 1..n {
            if h - 1 >= self.lo.height_at(j + 1) {
                out = out.pushed(Step::Down);
                h -= 1;
            } else {
                out = out.pushed(Step::Up);
                h += 1;
            }
        }
        Some(out)
    }
}

impl Iterator for IntervalIter {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let cur = self.next.take()?;
        self.next = self.successor(&cur);
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::p;
    use proptest::prelude::*;

    #[test]
    fn order_examples() {
        assert!(leq(&p("dd"), &p("uu")).unwrap());
        assert!(!leq(&p("ud"), &p("du")).unwrap());
        assert!(leq(&p("du"), &p("ud")).unwrap());
        assert!(leq(&p("ud"), &p("u")).is_err());
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&p("ud"), &p("du")).unwrap(), p("ud"));
        assert_eq!(meet(&p("ud"), &p("du")).unwrap(), p("du"));
        // pointwise max of (1,0,1,0) and (-1,0,1,2) is (1,0,1,2)
        assert_eq!(join(&p("udud"), &p("duuu")).unwrap(), p("uduu"));
        assert_eq!(meet(&p("udud"), &p("duuu")).unwrap(), p("duud"));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(covers(&p("dd")), vec![p("du")]);
        assert!(covers(&p("u6")).is_empty());
        assert_eq!(covers(&p("dduudududdd")).len(), 4);
    }

    #[test]
    fn distance_and_rank() {
        assert_eq!(chain_dist(&p("dd"), &p("uu")).unwrap(), 3);
        assert_eq!(chain_dist(&p("dudu"), &p("dudu")).unwrap(), 0);
        assert_eq!(chain_dist(&p("d4"), &p("u4")).unwrap(), 10);
        assert!(chain_dist(&p("uu"), &p("dd")).is_err());
        assert_eq!(rank(&p("ud")), 2);
        assert_eq!(rank(&p("u3")), 6);
        for n in 0..=8 {
            for q in Path::all(n) {
                assert_eq!(rank(&q), chain_dist(&Path::bottom(n), &q).unwrap());
            }
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&p("uu")), p("dd"));
        assert_eq!(dual(&p("ud")), p("du"));
        assert_eq!(dual(&p("udu")), p("dud"));
        for n in 0..=8 {
            let all: Vec<_> = Path::all(n).collect();
            for a in &all {
                for b in &all {
                    assert_eq!(is_below(a, b), is_below(&dual(b), &dual(a)));
                }
            }
        }
    }

    #[test]
    fn interval_examples() {
        let iv = IntervalSpec::new(p("udu"), p("udu")).unwrap();
        assert_eq!(iv.iter().collect::<Vec<_>>(), vec![p("udu")]);
        let iv = IntervalSpec::new(p("du"), p("ud")).unwrap();
        assert_eq!(iv.iter().collect::<Vec<_>>(), vec![p("du"), p("ud")]);
        let iv = IntervalSpec::new(p("dd"), p("uu")).unwrap();
        assert_eq!(iv.iter().collect::<Vec<_>>(), vec![p("dd"), p("du"), p("ud"), p("uu")]);
        assert_eq!(iv.size(), BigUint::from(4u32));
        assert!(matches!(interval_elements(&iv, 3), Err(Error::CapExceeded { cap: 3 })));
        assert_eq!(interval_elements(&iv, 4).unwrap().count(), 4);
        assert!(IntervalSpec::new(p("ud"), p("du")).is_err());
    }

    #[test]
    fn interval_iteration_matches_filter() {
        for n in 0..=6 {
            let all: Vec<_> = Path::all(n).collect();
            for lo in &all {
                for hi in all.iter().filter(|h| is_below(lo, h)) {
                    let iv = IntervalSpec::new(*lo, *hi).unwrap();
                    let got: Vec<_> = iv.iter().collect();
                    let mut want: Vec<_> = all.iter().copied().filter(|r| iv.contains(r)).collect();
                    want.sort_by_key(|r| r.heights());
                    assert_eq!(got, want, "[{lo}, {hi}]");
                    assert_eq!(iv.size(), BigUint::from(want.len()));
                }
            }
        }
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for n in 0..=6 {
            let all: Vec<_> = Path::all(n).collect();
            for a in &all {
                assert_eq!(join(a, a).unwrap(), *a);
                assert_eq!(meet(a, a).unwrap(), *a);
                for b in &all {
                    let j = join(a, b).unwrap();
                    let m = meet(a, b).unwrap();
                    assert_eq!(j, join(b, a).unwrap());
                    assert_eq!(m, meet(b, a).unwrap());
                    assert_eq!(join(a, &m).unwrap(), *a);
                    assert_eq!(meet(a, &j).unwrap(), *a);
                    assert!(is_below(a, &j) && is_below(&m, a));
                }
            }
            // associativity and distributivity on a sparser grid
            for a in all.iter().step_by(3) {
                for b in all.iter().step_by(2) {
                    for c in &all {
                        assert_eq!(
                            join(&join(a, b).unwrap(), c).unwrap(),
                            join(a, &join(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            meet(&meet(a, b).unwrap(), c).unwrap(),
                            meet(a, &meet(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            join(a, &meet(b, c).unwrap()).unwrap(),
                            meet(&join(a, b).unwrap(), &join(a, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cover_consistency() {
        for n in 0..=7 {
            let all: Vec<_> = Path::all(n).collect();
            for a in &all {
                let cov = covers(a);
                for b in &all {
                    let is_cover = is_below(a, b) && chain_dist(a, b).unwrap() == 1;
                    assert_eq!(cov.contains(b), is_cover, "{a} -> {b}");
                }
            }
        }
    }

    fn arb_path(n: usize) -> impl Strategy<Value = Path> {
        prop::collection::vec(any::<bool>(), n)
            .prop_map(|v| Path::from_steps(v.into_iter().map(|b| if b { Step::Up } else { Step::Down })).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (Path, Path, Path)> {
        (0usize..=14).prop_flat_map(|n| (arb_path(n), arb_path(n), arb_path(n)))
    }

    proptest! {
        #[test]
        fn lattice_laws_random((a, b, c) in arb_triple()) {
            let ab = join(&a, &b).unwrap();
            prop_assert_eq!(join(&ab, &c).unwrap(), join(&a, &join(&b, &c).unwrap()).unwrap());
            prop_assert_eq!(meet(&a, &join(&a, &b).unwrap()).unwrap(), a);
            prop_assert_eq!(
                meet(&a, &join(&b, &c).unwrap()).unwrap(),
                join(&meet(&a, &b).unwrap(), &meet(&a, &c).unwrap()).unwrap()
            );
        }

        #[test]
        fn greedy_chains_are_graded((a, b, _c) in arb_triple(), seed in any::<u64>()) {
            prop_assume!(a.len() <= 8);
            let lo = meet(&a, &b).unwrap();
            let hi = join(&a, &b).unwrap();
            let mut cur = lo;
            let mut steps = 0u64;
            let mut s = seed;
            while cur != hi {
                let options: Vec<_> = covers(&cur).into_iter().filter(|c| is_below(c, &hi)).collect();
                prop_assert!(!options.is_empty());
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                cur = options[(s >> 33) as usize % options.len()];
                steps += 1;
            }
            prop_assert_eq!(steps, chain_dist(&lo, &hi).unwrap());
        }
    }
}
