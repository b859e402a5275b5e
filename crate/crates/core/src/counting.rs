//! Exact interval cardinalities.
//!
//! Same-endpoint intervals are counted by a determinant of binomials over the
//! k-sequence encodings; intervals whose endpoints differ are partitioned into
//! same-endpoint pieces.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{is_below, leq};
use crate::path::{to_kseq, Path, Step};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// `binom(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigCount {
    if n < 0 || k < 0 || k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= BigCount::from((n - i) as u64);
        acc /= BigCount::from((i + 1) as u64);
    }
    acc
}

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination; every division is exact.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix is not square");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn to_count(v: BigInt) -> BigCount {
    assert!(!v.is_negative(), "interval count came out negative: {v}");
    v.to_biguint().unwrap_or_default()
}

/// `|[p, q]|` for paths with the same number of downsteps, by the
/// determinant `det_{i,j ∈ [m]} binom(μ_i - k_j + 1, j - i + 1)`.
pub fn interval_count_same_end(p: &Path, q: &Path) -> Result<BigCount> {
    if !leq(p, q)? {
        return Err(Error::domain(format!("{p} is not below {q}")));
    }
    if p.downs() != q.downs() {
        return Err(Error::domain(format!("{p} and {q} do not end at the same point")));
    }
    Ok(same_end_det(p, q))
}

fn same_end_det(p: &Path, q: &Path) -> BigCount {
    let ks = to_kseq(p);
    let mus = to_kseq(q);
    let (k, mu) = (ks.down_entries(), mus.down_entries());
    let m = k.len();
    let matrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let top = mu[i] as i64 - k[j] as i64 + 1;
                    BigInt::from_biguint(Sign::Plus, binom(top, j as i64 - i as i64 + 1))
                })
                .collect()
        })
        .collect();
    to_count(determinant(matrix))
}

/// Turns the last `count` steps equal to `from` into the opposite step.
fn turn_last(p: &Path, from: Step, count: usize) -> Path {
    let mut out = *p;
    let mut left = count;
    for i in (0..p.len()).rev() {
        if left == 0 {
            break;
        }
        if p.step(i) == from {
            out = out.with_step(i, from.flip());
            left -= 1;
        }
    }
    debug_assert_eq!(left, 0);
    out
}

/// `|[p, q]|` for any comparable pair.
pub fn interval_count(p: &Path, q: &Path) -> Result<BigCount> {
    if !leq(p, q)? {
        return Err(Error::domain(format!("{p} is not below {q}")));
    }
    Ok(partitioned_count(p, q))
}

/// As [`interval_count`], but an incomparable pair is an empty interval.
pub fn interval_count_lenient(p: &Path, q: &Path) -> Result<BigCount> {
    if !leq(p, q)? {
        return Ok(BigCount::zero());
    }
    Ok(partitioned_count(p, q))
}

fn partitioned_count(p: &Path, q: &Path) -> BigCount {
    let gap = p.downs() - q.downs();
    (0..=gap)
        .map(|i| {
            let pi = turn_last(p, Step::Down, gap - i);
            let qi = turn_last(q, Step::Up, i);
            if is_below(&pi, &qi) {
                same_end_det(&pi, &qi)
            } else {
                BigCount::zero()
            }
        })
        .sum()
}

/// `I(a) = |[a, u^{|a|/2} d^{|a|/2}]|` for a Dyck path `a`.
pub fn i_count(a: &Path) -> Result<BigCount> {
    if !a.is_dyck() {
        return Err(Error::domain(format!("{a} is not a Dyck path")));
    }
    Ok(same_end_det(a, &Path::pyramid(a.len() / 2)))
}

/// `J(p) = |[p, u^{|p|}]|`.
pub fn j_count(p: &Path) -> BigCount {
    partitioned_count(p, &Path::top(p.len()))
}
