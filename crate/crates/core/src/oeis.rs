//! Bundled OEIS fixtures and the locally computed sequences they check.

use serde::Serialize;

use crate::counting::{i_count, j_count, BigCount};
use crate::error::{Error, Result};
use crate::filling::count_fillings;
use crate::path::{Path, Step};

const A000108: &str = include_str!("../fixtures/A000108.txt");
const A000213: &str = include_str!("../fixtures/A000213.txt");
const A001405: &str = include_str!("../fixtures/A001405.txt");

pub const SEQUENCES: [&str; 3] = ["A000108", "A000213", "A001405"];

/// One decimal term per line; blank lines and `#` comments are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<BigCount>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            l.parse::<BigCount>()
                .map_err(|e| Error::Parse { offset: i + 1, message: format!("fixture line {}: {e}", i + 1) })
        })
        .collect()
}

pub fn fixture(id: &str) -> Result<Vec<BigCount>> {
    let text = match id.to_ascii_uppercase().as_str() {
        "A000108" => A000108,
        "A000213" => A000213,
        "A001405" => A001405,
        other => return Err(Error::domain(format!("no bundled fixture for {other}"))),
    };
    parse_fixture(text)
}

fn lowest_prefix(n: usize) -> Path {
    Path::from_steps((0..n).map(|i| if i % 2 == 0 { Step::Up } else { Step::Down })).expect("short")
}

/// Local term `n` and the fixture index it is compared against.
///
/// Catalan numbers are `I((ud)^n)`; central binomials are `J` of the lowest
/// Dyck prefix; filling counts satisfy `count_fillings(n) = A000213(n + 1)`.
pub fn local_term(id: &str, n: usize) -> Result<(usize, BigCount)> {
    match id.to_ascii_uppercase().as_str() {
        "A000108" => Ok((n, i_count(&lowest_prefix(2 * n))?)),
        "A000213" => Ok((n + 1, count_fillings(n))),
        "A001405" => Ok((n, j_count(&lowest_prefix(n)))),
        other => Err(Error::domain(format!("no local sequence for {other}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisReport {
    pub id: String,
    pub upto: usize,
    pub compared: usize,
    pub mismatches: Vec<usize>,
}

impl OeisReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Largest `n` the bundled fixture can be compared at.
pub fn max_upto(id: &str) -> Result<usize> {
    let len = fixture(id)?.len();
    let (idx, _) = local_term(id, 0)?;
    Ok(len - 1 - idx)
}

pub fn check(id: &str, upto: usize) -> Result<OeisReport> {
    let terms = fixture(id)?;
    let limit = max_upto(id)?;
    if upto > limit {
        return Err(Error::domain(format!("{id} fixture only reaches n = {limit}")));
    }
    let mut mismatches = Vec::new();
    for n in 0..=upto {
        let (idx, v) = local_term(id, n)?;
        if terms[idx] != v {
            mismatches.push(n);
        }
    }
    Ok(OeisReport { id: id.to_ascii_uppercase(), upto, compared: upto + 1, mismatches })
}
