//! Brute-force ground truth.
//!
//! Nothing here calls into the fast modules: the only shared pieces are
//! [`Path`] itself and [`leq`]. Valleys, fillings and degrees are recomputed
//! from the step sequence.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::lattice::leq;
use crate::path::{Path, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EnumFilter {
    All,
    DyckPath,
    DyckPrefix,
    Filling,
    DegreeEquals(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Longest path the oracle agrees to enumerate around.
    pub max_len: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_len: 16 }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Oracle {
    cfg: OracleConfig,
}

fn steps_of(p: &Path) -> Vec<bool> {
    p.steps().map(|s| s == Step::Up).collect()
}

fn from_bools(v: &[bool]) -> Path {
    Path::from_steps(v.iter().map(|&b| if b { Step::Up } else { Step::Down })).expect("short enough")
}

fn heights(p: &Path) -> Vec<i64> {
    let mut h = vec![0i64];
    for up in steps_of(p) {
        let last = *h.last().unwrap();
        h.push(if up { last + 1 } else { last - 1 });
    }
    h
}

/// `(point, height)` of each valley; the endpoint counts when the last step
/// is a downstep.
fn valleys(p: &Path) -> Vec<(usize, i64)> {
    let s = steps_of(p);
    let h = heights(p);
    let n = s.len();
    (1..=n).filter(|&i| !s[i - 1] && (i == n || s[i])).map(|i| (i, h[i])).collect()
}

fn fill(p: &Path) -> Path {
    let mut s = steps_of(p);
    let n = s.len();
    for (i, _) in valleys(p) {
        s[i - 1] = true;
        if i < n {
            s[i] = false;
        }
    }
    from_bools(&s)
}

fn is_top(p: &Path) -> bool {
    steps_of(p).iter().all(|&b| b)
}

fn degree(p: &Path) -> usize {
    let mut cur = *p;
    let mut k = 0;
    while !is_top(&cur) {
        cur = fill(&cur);
        k += 1;
    }
    k
}

fn is_dyck_prefix(p: &Path) -> bool {
    heights(p).iter().all(|&h| h >= 0)
}

fn is_dyck(p: &Path) -> bool {
    is_dyck_prefix(p) && *heights(p).last().unwrap() == 0
}

fn below(p: &Path, q: &Path) -> bool {
    leq(p, q).expect("equal lengths")
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Oracle {
        Oracle { cfg }
    }

    pub fn config(&self) -> OracleConfig {
        self.cfg
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cfg.max_len {
            return Err(Error::LimitExceeded { len: n, limit: self.cfg.max_len });
        }
        Ok(())
    }

    /// Every path of length `n` passing `filter`, in lexicographic order
    /// with `d < u`.
    pub fn enumerate_paths(&self, n: usize, filter: EnumFilter) -> Result<Vec<Path>> {
        self.check(n)?;
        let all: Vec<Path> = (0u64..1 << n)
            .map(|x| {
                let v: Vec<bool> = (0..n).map(|i| x >> (n - 1 - i) & 1 == 1).collect();
                from_bools(&v)
            })
            .collect();
        let out = match filter {
            EnumFilter::All => all,
            EnumFilter::DyckPath => all.into_iter().filter(is_dyck).collect(),
            EnumFilter::DyckPrefix => all.into_iter().filter(is_dyck_prefix).collect(),
            EnumFilter::Filling => {
                let image: HashSet<Path> = all.iter().map(fill).collect();
                all.into_iter().filter(|q| image.contains(q)).collect()
            }
            EnumFilter::DegreeEquals(k) => all.into_iter().filter(|q| degree(q) == k).collect(),
        };
        Ok(out)
    }

    /// `|[p, q]|` by membership tests over all of `P_n`.
    pub fn interval_count(&self, p: &Path, q: &Path) -> Result<BigCount> {
        leq(p, q)?;
        let n = self.enumerate_paths(p.len(), EnumFilter::All)?.into_iter().filter(|r| below(p, r) && below(r, q)).count();
        Ok(BigCount::from(n))
    }

    /// Number of chains `p = P_0 < ... < P_δ = u^n` with
    /// `P_i <= filling(P_{i-1})`, by depth-first search.
    pub fn f(&self, p: &Path) -> Result<BigCount> {
        let all = self.enumerate_paths(p.len(), EnumFilter::All)?;
        let deg: HashMap<Path, usize> = all.iter().map(|q| (*q, degree(q))).collect();
        fn dfs(cur: &Path, left: usize, all: &[Path], deg: &HashMap<Path, usize>) -> u64 {
            if left == 0 {
                return is_top(cur) as u64;
            }
            let hi = fill(cur);
            all.iter()
                .filter(|q| *q != cur && below(cur, q) && below(q, &hi) && deg[*q] < left)
                .map(|q| dfs(q, left - 1, all, deg))
                .sum()
        }
        Ok(BigCount::from(dfs(p, deg[p], &all, &deg)))
    }

    /// Length of a shortest chain with small intervals from `p` to `u^n`,
    /// by breadth-first search.
    pub fn min_chain_len(&self, p: &Path) -> Result<usize> {
        let all = self.enumerate_paths(p.len(), EnumFilter::All)?;
        let mut dist: HashMap<Path, usize> = HashMap::from([(*p, 0)]);
        let mut queue = VecDeque::from([*p]);
        while let Some(cur) = queue.pop_front() {
            let d = dist[&cur];
            if is_top(&cur) {
                return Ok(d);
            }
            let hi = fill(&cur);
            for q in all.iter().filter(|q| below(&cur, q) && below(q, &hi)) {
                if !dist.contains_key(q) {
                    dist.insert(*q, d + 1);
                    queue.push_back(*q);
                }
            }
        }
        unreachable!("u^n is reachable from every path")
    }

    /// Every `a`-`s` multichain of type V, by checking the valley condition
    /// on all candidate Dyck paths.
    pub fn v_chains(&self, a: &Path, s: &Path) -> Result<Vec<Vec<Path>>> {
        if !is_dyck(a) || !is_dyck(s) || a.len() != s.len() {
            return Err(Error::domain(format!("{a}, {s} are not Dyck paths of one length")));
        }
        let dyck = self.enumerate_paths(a.len(), EnumFilter::DyckPath)?;
        let h = valleys(a).iter().map(|v| v.1).max().unwrap_or(0).max(0) as usize;
        let upto = |p: &Path, cut: i64| -> Vec<(usize, i64)> { valleys(p).into_iter().filter(|v| v.1 <= cut).collect() };
        let mut out = Vec::new();
        let mut chain = vec![*a];
        fn go(
            chain: &mut Vec<Path>,
            h: usize,
            s: &Path,
            dyck: &[Path],
            upto: &dyn Fn(&Path, i64) -> Vec<(usize, i64)>,
            out: &mut Vec<Vec<Path>>,
        ) {
            let j = chain.len();
            if j == h + 1 {
                if chain[h] == *s {
                    out.push(chain.clone());
                }
                return;
            }
            let prev = chain[j - 1];
            let cut = h as i64 - j as i64;
            for c in dyck.iter().filter(|c| below(&prev, c) && below(c, s)) {
                if upto(&prev, cut) == upto(c, cut) {
                    chain.push(*c);
                    go(chain, h, s, dyck, upto, out);
                    chain.pop();
                }
            }
        }
        if below(a, s) {
            go(&mut chain, h, s, &dyck, &upto, &mut out);
        }
        Ok(out)
    }

    pub fn v_count(&self, a: &Path, s: &Path) -> Result<BigCount> {
        Ok(BigCount::from(self.v_chains(a, s)?.len()))
    }

    /// `μ^j(p, q)` for `j = 0..=k`: Möbius function from its defining
    /// recursion on the explicit interval, then repeated multiplication.
    pub fn mobius_powers(&self, p: &Path, q: &Path, k: usize) -> Result<Vec<BigInt>> {
        if !leq(p, q)? {
            return Err(Error::domain(format!("{p} is not below {q}")));
        }
        let mut elems: Vec<Path> =
            self.enumerate_paths(p.len(), EnumFilter::All)?.into_iter().filter(|r| below(p, r) && below(r, q)).collect();
        // sorting by height sum gives a linear extension of the order
        elems.sort_by_key(|r| heights(r).iter().sum::<i64>());
        let n = elems.len();
        let mut mu = vec![vec![0i128; n]; n];
        for x in 0..n {
            mu[x][x] = 1;
            for y in x + 1..n {
                if !below(&elems[x], &elems[y]) {
                    continue;
                }
                let s: i128 = (x..y).filter(|&z| below(&elems[x], &elems[z]) && below(&elems[z], &elems[y])).map(|z| mu[x][z]).sum();
                mu[x][y] = -s;
            }
        }
        let start = elems.iter().position(|r| r == p).expect("p in interval");
        let end = elems.iter().position(|r| r == q).expect("q in interval");
        let mut row = vec![0i128; n];
        row[start] = 1;
        let mut out = vec![BigInt::from(row[end])];
        for _ in 0..k {
            let mut next = vec![0i128; n];
            for (x, &c) in row.iter().enumerate().filter(|(_, c)| **c != 0) {
                for y in 0..n {
                    next[y] = next[y].checked_add(c.checked_mul(mu[x][y]).expect("no overflow")).expect("no overflow");
                }
            }
            row = next;
            out.push(BigInt::from(row[end]));
        }
        Ok(out)
    }

    pub fn mobius_power(&self, p: &Path, q: &Path, k: usize) -> Result<BigInt> {
        Ok(self.mobius_powers(p, q, k)?.pop().expect("non-empty"))
    }

    /// Degree by explicit filling iteration.
    pub fn degree(&self, p: &Path) -> usize {
        degree(p)
    }

    pub fn filling(&self, p: &Path) -> Path {
        fill(p)
    }
}

pub fn enumerate_paths(n: usize, filter: EnumFilter) -> Result<Vec<Path>> {
    Oracle::default().enumerate_paths(n, filter)
}

pub fn brute_interval_count(p: &Path, q: &Path) -> Result<BigCount> {
    Oracle::default().interval_count(p, q)
}

pub fn brute_f(p: &Path) -> Result<BigCount> {
    Oracle::default().f(p)
}

pub fn brute_v_count(a: &Path, s: &Path) -> Result<BigCount> {
    Oracle::default().v_count(a, s)
}

pub fn brute_mobius_power(p: &Path, q: &Path, k: usize) -> Result<BigInt> {
    Oracle::default().mobius_power(p, q, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::p;

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn enumeration() {
        let two = enumerate_paths(2, EnumFilter::All).unwrap();
        assert_eq!(two, vec![p("dd"), p("du"), p("ud"), p("uu")]);
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (k, &c) in catalan.iter().enumerate() {
            assert_eq!(enumerate_paths(2 * k, EnumFilter::DyckPath).unwrap().len(), c);
        }
        let central = [1usize, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252];
        for (len, &c) in central.iter().enumerate() {
            assert_eq!(enumerate_paths(len, EnumFilter::DyckPrefix).unwrap().len(), c);
        }
        assert_eq!(enumerate_paths(4, EnumFilter::Filling).unwrap().len(), 9);
        assert_eq!(enumerate_paths(2, EnumFilter::DegreeEquals(3)).unwrap(), vec![p("dd")]);
        assert_eq!(enumerate_paths(17, EnumFilter::All).unwrap_err(), Error::LimitExceeded { len: 17, limit: 16 });
    }

    #[test]
    fn small_values() {
        assert_eq!(brute_f(&p("dd")).unwrap(), n(1));
        assert_eq!(brute_interval_count(&p("dd"), &p("uu")).unwrap(), n(4));
        assert_eq!(brute_v_count(&p("u2d2u3dudud3"), &p("u2d2u4dud4")).unwrap(), n(4));
        assert_eq!(brute_v_count(&p("ud"), &p("ud")).unwrap(), n(1));
        assert_eq!(brute_mobius_power(&p("du"), &p("ud"), 1).unwrap(), BigInt::from(-1));
        assert_eq!(Oracle::default().min_chain_len(&p("dd")).unwrap(), 3);
    }

    #[test]
    fn mobius_zero_power_is_delta() {
        let o = Oracle::default();
        assert_eq!(o.mobius_power(&p("dud"), &p("dud"), 0).unwrap(), BigInt::from(1));
        assert_eq!(o.mobius_power(&p("dud"), &p("uud"), 0).unwrap(), BigInt::from(0));
        // μ(x, y) = 0 whenever y is not below the filling of x
        assert_eq!(o.mobius_power(&p("ddd"), &p("uuu"), 1).unwrap(), BigInt::from(0));
    }
}
