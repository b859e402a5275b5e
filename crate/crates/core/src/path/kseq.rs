use serde::Serialize;

use super::{Path, Step};
use crate::error::{Error, Result};

/// The encoding `P = u^{k_1} d u^{k_2 - k_1} d ... d u^{k_{m+1} - k_m}`.
///
/// `ks[i]` is the number of upsteps before the `(i+1)`-th downstep for
/// `i < m`; the last entry is `|P|_u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KSequence(Vec<usize>);

impl KSequence {
    pub fn new(ks: Vec<usize>) -> Result<KSequence> {
        if ks.is_empty() {
            return Err(Error::domain("k-sequence needs at least the final entry |P|_u"));
        }
        if let Some(w) = ks.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::domain(format!(
                "k-sequence is not non-decreasing at index {}: {} > {}",
                w + 1,
                ks[w],
                ks[w + 1]
            )));
        }
        Ok(KSequence(ks))
    }

    /// Number of downsteps `m`.
    pub fn downs(&self) -> usize {
        self.0.len() - 1
    }

    pub fn ups(&self) -> usize {
        *self.0.last().expect("non-empty")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `k_1 .. k_m`, without the trailing `|P|_u`.
    pub fn down_entries(&self) -> &[usize] {
        &self.0[..self.downs()]
    }
}

pub fn to_kseq(path: &Path) -> KSequence {
    let mut ks = Vec::with_capacity(path.downs() + 1);
    let mut ups = 0;
    for s in path.steps() {
        match s {
            Step::Up => ups += 1,
            Step::Down => ks.push(ups),
        }
    }
    ks.push(ups);
    KSequence(ks)
}

/// Inverse of [`to_kseq`]; `n` must equal `m + k_{m+1}`.
pub fn from_kseq(ks: &KSequence, n: usize) -> Result<Path> {
    if ks.downs() + ks.ups() != n {
        return Err(Error::domain(format!(
            "k-sequence describes a path of length {}, not {n}",
            ks.downs() + ks.ups()
        )));
    }
    let mut steps = Vec::with_capacity(n);
    let mut prev = 0;
    for &k in ks.down_entries() {
        steps.extend(std::iter::repeat(Step::Up).take(k - prev));
        steps.push(Step::Down);
        prev = k;
    }
    steps.extend(std::iter::repeat(Step::Up).take(ks.ups() - prev));
    Path::from_steps(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::p;

    #[test]
    fn examples() {
        assert_eq!(to_kseq(&p("ud")).as_slice(), &[1, 1]);
        assert_eq!(to_kseq(&p("u2d2u3dudud3")).as_slice(), &[2, 2, 5, 6, 7, 7, 7, 7]);
        assert_eq!(to_kseq(&p("d3")).as_slice(), &[0, 0, 0, 0]);
        assert_eq!(to_kseq(&Path::EMPTY).as_slice(), &[0]);
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(KSequence::new(vec![2, 1, 3]).is_err());
        assert!(KSequence::new(vec![]).is_err());
        let ks = KSequence::new(vec![1, 2]).unwrap();
        assert!(from_kseq(&ks, 4).is_err());
        assert_eq!(from_kseq(&ks, 3).unwrap(), p("udu"));
    }

    #[test]
    fn exhaustive_roundtrip() {
        for n in 0..=12usize {
            for q in Path::all(n) {
                let ks = to_kseq(&q);
                assert_eq!(from_kseq(&ks, n).unwrap(), q);
            }
        }
    }
}
