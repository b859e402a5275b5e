//! Multichains of type V and their counts.

use std::collections::HashMap;

use serde::Serialize;

use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::lattice::{interval_iter, is_below, raise_valley};
use crate::path::{decompose, DecompKind, Path};

/// Chain length of a type-V multichain starting at `a`: the height of the
/// highest valley, with the endpoint of a Dyck path counted as a valley at
/// height zero. Zero for the empty path.
pub fn v_height(a: &Path) -> usize {
    a.hv().map_or(0, |h| h.max(0) as usize)
}

fn valleys_upto(p: &Path, height: i64) -> Vec<(usize, i32)> {
    p.valleys().into_iter().filter(|v| (v.1 as i64) <= height).collect()
}

/// A multichain `σ_0 <= ... <= σ_h` of Dyck paths with `h = hv(σ_0)` such
/// that `σ_j` and `σ_{j-1}` share their valleys at every height `<= h - j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TypeVChain {
    elements: Vec<Path>,
}

impl TypeVChain {
    pub fn new(elements: Vec<Path>) -> Result<TypeVChain> {
        let first = *elements.first().ok_or_else(|| Error::domain("empty multichain"))?;
        if let Some(bad) = elements.iter().find(|e| !e.is_dyck() || e.len() != first.len()) {
            return Err(Error::domain(format!("{bad} is not a Dyck path of length {}", first.len())));
        }
        let h = v_height(&first);
        if elements.len() != h + 1 {
            return Err(Error::domain(format!(
                "type-V multichain from {first} needs {} elements, got {}",
                h + 1,
                elements.len()
            )));
        }
        for j in 1..=h {
            let (prev, cur) = (&elements[j - 1], &elements[j]);
            if !is_below(prev, cur) {
                return Err(Error::domain(format!("{prev} is not below {cur}")));
            }
            let cut = h as i64 - j as i64;
            if valleys_upto(prev, cut) != valleys_upto(cur, cut) {
                return Err(Error::domain(format!("{prev} and {cur} differ in valleys at height <= {cut}")));
            }
        }
        Ok(TypeVChain { elements })
    }

    pub fn elements(&self) -> &[Path] {
        &self.elements
    }

    pub fn h(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn start(&self) -> Path {
        self.elements[0]
    }

    pub fn end(&self) -> Path {
        self.elements[self.h()]
    }
}

/// Sends a type-V multichain `a -> t` together with some `s >= t` to a
/// type-V multichain `w -> s` with `w ∈ [a, a*]`.
pub fn v_bijection_forward(chain: &TypeVChain, s: &Path) -> Result<(Path, TypeVChain)> {
    let t = chain.end();
    if s.len() != t.len() || !s.is_dyck() {
        return Err(Error::domain(format!("{s} is not a Dyck path of length {}", t.len())));
    }
    if !is_below(&t, s) {
        return Err(Error::domain(format!("{t} is not below {s}")));
    }
    let h = chain.h();
    let mut sigma = chain.elements().to_vec();
    sigma.push(*s);
    let valley_sets: Vec<Vec<(usize, i32)>> = sigma.iter().map(Path::valleys).collect();

    // τ_i: raise each valley of σ_i at height j <= h - i that is not a
    // valley of σ_{h+1-j}.
    let tau: Vec<Path> = (0..=h + 1)
        .map(|i| {
            let mut out = sigma[i];
            for &(pos, height) in &valley_sets[i] {
                let j = height as i64;
                if j < 0 || j > h as i64 - i as i64 {
                    continue;
                }
                if !valley_sets[h + 1 - j as usize].contains(&(pos, height)) {
                    out = raise_valley(&out, pos);
                }
            }
            out
        })
        .collect();

    let w = tau[0];
    let k = v_height(&w);
    let shift = h + 1 - k;
    debug_assert_eq!(tau[shift], w);
    let out = TypeVChain::new(tau[shift..].to_vec())?;
    Ok((w, out))
}

/// Memoized counter for `V(a, s)`.
#[derive(Debug, Default)]
pub struct VCounter {
    memo: HashMap<(Path, Path), BigCount>,
}

impl VCounter {
    pub fn new() -> VCounter {
        VCounter::default()
    }

    /// `V(a, s)` for Dyck paths of equal length.
    pub fn count(&mut self, a: &Path, s: &Path) -> Result<BigCount> {
        check_dyck_pair(a, s)?;
        Ok(self.v(a, s))
    }

    /// Every `s >= a` with `V(a, s) != 0`, with that value.
    pub fn targets(&mut self, a: &Path) -> Vec<(Path, BigCount)> {
        let top = Path::pyramid(a.len() / 2);
        interval_iter(*a, top)
            .filter_map(|s| {
                let v = self.v(a, &s);
                (v != BigCount::from(0u32)).then_some((s, v))
            })
            .collect()
    }

    pub(crate) fn v(&mut self, a: &Path, s: &Path) -> BigCount {
        if !is_below(a, s) || a.returns() != s.returns() {
            return BigCount::from(0u32);
        }
        if a == s && v_height(a) == 0 {
            return BigCount::from(1u32);
        }
        if let Some(v) = self.memo.get(&(*a, *s)) {
            return v.clone();
        }
        let fa = decompose(a, DecompKind::PrimeFactors).expect("Dyck path").parts;
        let fs = decompose(s, DecompKind::PrimeFactors).expect("Dyck path").parts;
        let mut acc = BigCount::from(1u32);
        for (pa, ps) in fa.iter().zip(&fs) {
            acc *= self.v_prime(pa, ps);
            if acc == BigCount::from(0u32) {
                break;
            }
        }
        self.memo.insert((*a, *s), acc.clone());
        acc
    }

    /// `V(uad, usd) = Σ_{t ∈ [a, s]} V(a, t)`.
    fn v_prime(&mut self, pa: &Path, ps: &Path) -> BigCount {
        let a = pa.slice(1, pa.len() - 1);
        let s = ps.slice(1, ps.len() - 1);
        if a.is_empty() {
            return BigCount::from(1u32);
        }
        interval_iter(a, s).map(|t| self.v(&a, &t)).sum()
    }
}

fn check_dyck_pair(a: &Path, s: &Path) -> Result<()> {
    for x in [a, s] {
        if !x.is_dyck() {
            return Err(Error::domain(format!("{x} is not a Dyck path")));
        }
    }
    if a.len() != s.len() {
        return Err(Error::domain(format!("length mismatch: |{a}| = {}, |{s}| = {}", a.len(), s.len())));
    }
    Ok(())
}

/// `V(a, s)`: number of `a`-`s` multichains of type V.
pub fn v_count(a: &Path, s: &Path) -> Result<BigCount> {
    VCounter::new().count(a, s)
}
