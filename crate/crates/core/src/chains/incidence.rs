//! Möbius and zeta functions of intervals, and multichains with small
//! intervals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Evaluator, Method};
use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::filling::filling;
use crate::lattice::{chain_dist, interval_elements, interval_iter, is_below, leq, meet, IntervalSpec};
use crate::path::Path;

/// Arbitrary-precision signed value of an incidence function.
pub type SignedCount = BigInt;

/// Interval size limit used when the caller has no opinion.
pub const DEFAULT_CAP: usize = 5_000;

fn require_below(p: &Path, q: &Path) -> Result<()> {
    if !leq(p, q)? {
        return Err(Error::domain(format!("{p} is not below {q}")));
    }
    Ok(())
}

/// `μ(P, Q) = (-1)^{l(P,Q)}` when `P <= Q <= P̃`, else `0`.
pub fn mobius(p: &Path, q: &Path) -> Result<SignedCount> {
    if !leq(p, q)? || !is_below(q, &filling(p)) {
        return Ok(SignedCount::zero());
    }
    let l = chain_dist(p, q)?;
    Ok(if l % 2 == 0 { SignedCount::one() } else { -SignedCount::one() })
}

/// Row `P` of the `k`-th power of an incidence function restricted to
/// `[P, Q]`, read at `Q`. `step(x)` lists the nonzero `g(x, y)` with
/// `y` in the interval.
fn power<T, F>(p: &Path, q: &Path, k: usize, cap: usize, step: F) -> Result<T>
where
    T: Clone + Zero + One + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    F: Fn(&Path) -> Vec<(Path, T)>,
{
    require_below(p, q)?;
    let iv = IntervalSpec::new(*p, *q)?;
    let _ = interval_elements(&iv, cap)?;
    let mut row: HashMap<Path, T> = HashMap::from([(*p, T::one())]);
    for _ in 0..k {
        let mut next: HashMap<Path, T> = HashMap::new();
        for (x, c) in &row {
            for (y, g) in step(x) {
                *next.entry(y).or_insert_with(T::zero) += &(c * &g);
            }
        }
        next.retain(|_, v| !v.is_zero());
        row = next;
    }
    Ok(row.remove(q).unwrap_or_else(T::zero))
}

/// `μ^k(P, Q)` in the incidence algebra of `[P, Q]`.
pub fn mobius_power(p: &Path, q: &Path, k: usize, cap: usize) -> Result<SignedCount> {
    power(p, q, k, cap, |x| {
        let hi = meet(&filling(x), q).expect("same length");
        interval_iter(*x, hi)
            .map(|y| {
                let m = mobius(x, &y).expect("comparable");
                (y, m)
            })
            .collect()
    })
}

/// `ζ^k(P, Q)`: number of multichains `P = P_0 <= ... <= P_k = Q`.
pub fn zeta_power(p: &Path, q: &Path, k: usize, cap: usize) -> Result<BigCount> {
    power(p, q, k, cap, |x| interval_iter(*x, *q).map(|y| (y, BigCount::one())).collect())
}

/// Multichains `P = P_0 <= ... <= P_k = Q` with `P_i <= filling(P_{i-1})`.
pub fn count_small_multichains(p: &Path, q: &Path, k: usize) -> Result<BigCount> {
    require_below(p, q)?;
    let mut row: HashMap<Path, BigCount> = HashMap::from([(*p, BigCount::one())]);
    for _ in 0..k {
        let mut next: HashMap<Path, BigCount> = HashMap::new();
        for (x, c) in &row {
            let hi = meet(&filling(x), q).expect("same length");
            for y in interval_iter(*x, hi) {
                *next.entry(y).or_default() += c;
            }
        }
        row = next;
    }
    Ok(row.remove(q).unwrap_or_default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorollaryVariant {
    /// `f(u^k a d^k) = ζ^{k+1}(a, u^{|a|/2} d^{|a|/2})`, `k >= 0`.
    Pyramid,
    /// `f(d u^k a) = ζ^{k+1}(a, u^{|a|})`, `k >= 1`.
    Top,
}

/// Evaluates both sides of a zeta corollary for a product of pyramids `a`.
pub fn zeta_corollary_check(ev: &mut Evaluator, a: &Path, k: usize, variant: CorollaryVariant) -> Result<bool> {
    if !a.is_pyramid_product() {
        return Err(Error::domain(format!("{a} is not a product of pyramids")));
    }
    let ups = Path::top(k);
    let (lhs_path, top) = match variant {
        CorollaryVariant::Pyramid => (ups.concat(a).concat(&Path::bottom(k)), Path::pyramid(a.len() / 2)),
        CorollaryVariant::Top => {
            if k == 0 {
                return Err(Error::domain("the Top variant needs k >= 1"));
            }
            (Path::bottom(1).concat(&ups).concat(a), Path::top(a.len()))
        }
    };
    let lhs = ev.f(&lhs_path, Method::Closed);
    let rhs = zeta_power(a, &top, k + 1, usize::MAX)?;
    Ok(lhs == rhs)
}
