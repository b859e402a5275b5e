use serde::Serialize;

use super::{Path, Step};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompKind {
    /// Dyck prefix as `a_0 u a_1 ... u a_k` with every `a_i` a Dyck path.
    PrefixForm,
    /// Dyck suffix as `a_0 d a_1 ... d a_k` with every `a_i` a Dyck path.
    SuffixForm,
    /// Dyck path as a product of prime Dyck paths `u a_i d`.
    PrimeFactors,
    /// `P = P_1 P_2` split at the leftmost point of minimal height.
    MinSplit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub kind: DecompKind,
    pub parts: Vec<Path>,
}

impl Decomposition {
    /// Reassembles the decomposed path.
    pub fn concat(&self) -> Path {
        let glue = match self.kind {
            DecompKind::PrefixForm => Some(Step::Up),
            DecompKind::SuffixForm => Some(Step::Down),
            DecompKind::PrimeFactors | DecompKind::MinSplit => None,
        };
        let mut out = Path::EMPTY;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                if let Some(step) = glue {
                    out = out.pushed(step);
                }
            }
            out = out.concat(part);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathClass {
    pub dyck_path: bool,
    pub dyck_prefix: bool,
    pub dyck_suffix: bool,
}

impl PathClass {
    pub fn is_general(&self) -> bool {
        !(self.dyck_path || self.dyck_prefix || self.dyck_suffix)
    }
}

pub fn classify(path: &Path) -> PathClass {
    PathClass {
        dyck_path: path.is_dyck(),
        dyck_prefix: path.is_dyck_prefix(),
        dyck_suffix: path.is_dyck_suffix(),
    }
}

impl Path {
    /// Never dips below the starting height.
    pub fn is_dyck_prefix(&self) -> bool {
        let mut h = 0i32;
        for s in self.steps() {
            h += if s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return false;
            }
        }
        true
    }

    /// Never dips below the final height.
    pub fn is_dyck_suffix(&self) -> bool {
        self.min_height() == self.final_height()
    }

    pub fn is_dyck(&self) -> bool {
        self.final_height() == 0 && self.is_dyck_prefix()
    }

    /// Dyck path whose only valleys sit at height zero, i.e. a product of
    /// pyramids `u^k d^k` (the empty path included).
    pub fn is_pyramid_product(&self) -> bool {
        self.is_dyck() && self.valleys().iter().all(|v| v.1 == 0)
    }

    /// Non-initial points at height zero of a Dyck prefix.
    pub fn returns(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.height_at(i) == 0).collect()
    }
}

pub fn decompose(path: &Path, kind: DecompKind) -> Result<Decomposition> {
    let parts = match kind {
        DecompKind::PrefixForm => prefix_form(path)?,
        DecompKind::SuffixForm => suffix_form(path)?,
        DecompKind::PrimeFactors => prime_factors(path)?,
        DecompKind::MinSplit => {
            let at = leftmost_min(path);
            vec![path.slice(0, at), path.slice(at, path.len())]
        }
    };
    Ok(Decomposition { kind, parts })
}

fn leftmost_min(path: &Path) -> usize {
    let mut best = 0;
    for i in 1..=path.len() {
        if path.height_at(i) < path.height_at(best) {
            best = i;
        }
    }
    best
}

/// Splits at the given 0-based step positions, dropping those steps.
fn split_dropping(path: &Path, cuts: &[usize]) -> Vec<Path> {
    let mut parts = Vec::with_capacity(cuts.len() + 1);
    let mut start = 0;
    for &c in cuts {
        parts.push(path.slice(start, c));
        start = c + 1;
    }
    parts.push(path.slice(start, path.len()));
    parts
}

fn prefix_form(path: &Path) -> Result<Vec<Path>> {
    if !path.is_dyck_prefix() {
        return Err(Error::domain(format!("{path} is not a Dyck prefix")));
    }
    // An upstep from height h is unmatched when no later point returns to h.
    let n = path.len();
    let mut suffix_min = vec![i32::MAX; n + 2];
    for i in (0..=n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(path.height_at(i));
    }
    let cuts: Vec<usize> = (0..n)
        .filter(|&i| path.is_up(i) && suffix_min[i + 1] > path.height_at(i))
        .collect();
    Ok(split_dropping(path, &cuts))
}

fn suffix_form(path: &Path) -> Result<Vec<Path>> {
    if !path.is_dyck_suffix() {
        return Err(Error::domain(format!("{path} is not a Dyck suffix")));
    }
    // A downstep is unmatched when it reaches a new running minimum.
    let mut low = 0;
    let mut cuts = Vec::new();
    for i in 0..path.len() {
        let h = path.height_at(i + 1);
        if h < low {
            low = h;
            cuts.push(i);
        }
    }
    Ok(split_dropping(path, &cuts))
}

fn prime_factors(path: &Path) -> Result<Vec<Path>> {
    if !path.is_dyck() {
        return Err(Error::domain(format!("{path} is not a Dyck path")));
    }
    let mut parts = Vec::new();
    let mut start = 0;
    for r in path.returns() {
        parts.push(path.slice(start, r));
        start = r;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::p;

    #[test]
    fn examples() {
        let d = decompose(&p("udud"), DecompKind::PrimeFactors).unwrap();
        assert_eq!(d.parts, vec![p("ud"), p("ud")]);

        let d = decompose(&p("uduu"), DecompKind::PrefixForm).unwrap();
        assert_eq!(d.parts, vec![p("ud"), Path::EMPTY, Path::EMPTY]);
        assert_eq!(d.concat(), p("uduu"));

        let d = decompose(&p("uddu"), DecompKind::MinSplit).unwrap();
        assert_eq!(d.parts, vec![p("udd"), p("u")]);

        let d = decompose(&p("ddud"), DecompKind::SuffixForm).unwrap();
        assert_eq!(d.parts, vec![Path::EMPTY, Path::EMPTY, p("ud")]);
    }

    #[test]
    fn class_examples() {
        let c = classify(&p("uudd"));
        assert!(c.dyck_path && c.dyck_prefix && c.dyck_suffix);
        let c = classify(&p("uud"));
        assert!(!c.dyck_path && c.dyck_prefix && !c.dyck_suffix);
        assert!(classify(&p("du")).is_general());
        assert!(classify(&Path::EMPTY).dyck_path);
    }

    #[test]
    fn domain_errors() {
        assert!(decompose(&p("du"), DecompKind::PrefixForm).is_err());
        assert!(decompose(&p("uud"), DecompKind::SuffixForm).is_err());
        assert!(decompose(&p("uud"), DecompKind::PrimeFactors).is_err());
    }

    #[test]
    fn suffix_matches_reverse_flipped_prefix() {
        for n in 0..=10 {
            for q in Path::all(n) {
                assert_eq!(q.is_dyck_suffix(), q.reverse_flip().is_dyck_prefix());
            }
        }
    }

    #[test]
    fn decompositions_reassemble_exhaustively() {
        for n in 0..=10 {
            for q in Path::all(n) {
                let c = classify(&q);
                let kinds = [
                    (DecompKind::PrefixForm, c.dyck_prefix),
                    (DecompKind::SuffixForm, c.dyck_suffix),
                    (DecompKind::PrimeFactors, c.dyck_path),
                    (DecompKind::MinSplit, true),
                ];
                for (kind, applies) in kinds {
                    let d = decompose(&q, kind);
                    assert_eq!(d.is_ok(), applies);
                    let Ok(d) = d else { continue };
                    assert_eq!(d.concat(), q, "{kind:?} of {q}");
                    match kind {
                        DecompKind::PrefixForm | DecompKind::SuffixForm => {
                            assert!(d.parts.iter().all(Path::is_dyck));
                        }
                        DecompKind::PrimeFactors => {
                            assert!(d.parts.iter().all(|f| f.is_dyck() && f.returns() == vec![f.len()]));
                        }
                        DecompKind::MinSplit => {
                            assert!(d.parts[0].is_dyck_suffix());
                            assert!(d.parts[1].is_dyck_prefix());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dyck_counts() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (k, &c) in catalan.iter().enumerate() {
            assert_eq!(Path::all(2 * k).filter(Path::is_dyck).count() as u64, c);
        }
        let central = [1u64, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435, 12870];
        for (n, &c) in central.iter().enumerate() {
            assert_eq!(Path::all(n).filter(Path::is_dyck_prefix).count() as u64, c);
        }
    }
}
