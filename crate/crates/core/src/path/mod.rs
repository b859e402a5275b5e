//! Binary paths: finite words over up/down steps.
//!
//! A [`Path`] is stored as a bit-vector (bit `i` set when step `i + 1` is an
//! upstep) together with its length, so paths are `Copy`, hash in O(1) and
//! make cheap memo keys. Heights are derived on demand.

mod decompose;
mod kseq;
mod stats;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use decompose::{classify, decompose, DecompKind, Decomposition, PathClass};
pub use kseq::{from_kseq, to_kseq, KSequence};
pub use stats::{path_stats, PathStats};

/// Longest path representable by [`Path`].
pub const MAX_LEN: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    Up,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
        }
    }
}

/// An immutable binary path `p_1 p_2 ... p_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    len: u8,
    bits: u128,
}

impl Path {
    /// The empty path.
    pub const EMPTY: Path = Path { len: 0, bits: 0 };

    pub fn empty() -> Path {
        Path::EMPTY
    }

    /// Builds a path from steps. Fails when longer than [`MAX_LEN`].
    pub fn from_steps<I: IntoIterator<Item = Step>>(steps: I) -> Result<Path> {
        let mut p = Path::EMPTY;
        for s in steps {
            if p.len() == MAX_LEN {
                return Err(Error::domain(format!("path longer than {MAX_LEN} steps")));
            }
            p = p.pushed(s);
        }
        Ok(p)
    }

    /// Every path of length `n`, in increasing order of the bit encoding.
    pub fn all(n: usize) -> impl Iterator<Item = Path> {
        assert!(n < MAX_LEN);
        (0u128..1 << n).map(move |bits| Path { len: n as u8, bits })
    }

    /// `u^n`, the maximum of the lattice of length `n`.
    pub fn top(n: usize) -> Path {
        Path::run(Step::Up, n)
    }

    /// `d^n`, the minimum of the lattice of length `n`.
    pub fn bottom(n: usize) -> Path {
        Path::run(Step::Down, n)
    }

    /// `u^k d^k`.
    pub fn pyramid(k: usize) -> Path {
        Path::top(k).concat(&Path::bottom(k))
    }

    pub fn run(step: Step, n: usize) -> Path {
        assert!(n <= MAX_LEN, "path longer than {MAX_LEN} steps");
        let bits = match step {
            Step::Down => 0,
            Step::Up if n == MAX_LEN => u128::MAX,
            Step::Up => (1u128 << n) - 1,
        };
        Path { len: n as u8, bits }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Raw bit encoding; bit `i` is set iff step `i + 1` is an upstep.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// Step at 0-based position `i`.
    #[inline]
    pub fn step(&self, i: usize) -> Step {
        debug_assert!(i < self.len());
        if self.bits >> i & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    #[inline]
    pub fn is_up(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn steps(&self) -> impl DoubleEndedIterator<Item = Step> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    /// `|P|_u`.
    pub fn ups(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// `|P|_d`.
    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    /// Height of the point reached after `i` steps (`h_0 = 0`).
    #[inline]
    pub fn height_at(&self, i: usize) -> i32 {
        debug_assert!(i <= self.len());
        let mask = if i == MAX_LEN { u128::MAX } else { (1u128 << i) - 1 };
        2 * (self.bits & mask).count_ones() as i32 - i as i32
    }

    pub fn final_height(&self) -> i32 {
        self.height_at(self.len())
    }

    /// Heights `h_1 .. h_n` of the non-initial points.
    pub fn heights(&self) -> Vec<i32> {
        let mut h = 0;
        self.steps()
            .map(|s| {
                h += if s == Step::Up { 1 } else { -1 };
                h
            })
            .collect()
    }

    /// Rebuilds a path from heights `h_1 .. h_n`; every consecutive
    /// difference (starting from `h_0 = 0`) must be `±1`.
    pub fn from_heights(heights: &[i32]) -> Result<Path> {
        let mut prev = 0;
        let mut steps = Vec::with_capacity(heights.len());
        for (i, &h) in heights.iter().enumerate() {
            match h - prev {
                1 => steps.push(Step::Up),
                -1 => steps.push(Step::Down),
                _ => {
                    return Err(Error::domain(format!(
                        "height profile jumps by {} at point {}",
                        h - prev,
                        i + 1
                    )))
                }
            }
            prev = h;
        }
        Path::from_steps(steps)
    }

    /// Path with the step at 0-based position `i` replaced.
    pub fn with_step(&self, i: usize, step: Step) -> Path {
        assert!(i < self.len());
        let bits = match step {
            Step::Up => self.bits | 1u128 << i,
            Step::Down => self.bits & !(1u128 << i),
        };
        Path { len: self.len, bits }
    }

    /// Appends one step. Panics past [`MAX_LEN`].
    pub fn pushed(&self, step: Step) -> Path {
        assert!(self.len() < MAX_LEN, "path longer than {MAX_LEN} steps");
        let bits = match step {
            Step::Up => self.bits | 1u128 << self.len,
            Step::Down => self.bits,
        };
        Path { len: self.len + 1, bits }
    }

    /// Concatenation `self · other`. Panics past [`MAX_LEN`].
    pub fn concat(&self, other: &Path) -> Path {
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN, "path longer than {MAX_LEN} steps");
        let shifted = if other.len == 0 { 0 } else { other.bits << self.len };
        Path { len: len as u8, bits: self.bits | shifted }
    }

    pub fn concat_all<'a, I: IntoIterator<Item = &'a Path>>(parts: I) -> Path {
        parts.into_iter().fold(Path::EMPTY, |acc, p| acc.concat(p))
    }

    /// Steps `start .. end` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> Path {
        assert!(start <= end && end <= self.len());
        let len = end - start;
        let mask = if len == MAX_LEN { u128::MAX } else { (1u128 << len) - 1 };
        let bits = if len == 0 { 0 } else { (self.bits >> start) & mask };
        Path { len: len as u8, bits }
    }

    /// Flip every step. This is the order-reversing involution of the
    /// lattice of paths of a given length.
    pub fn mirror(&self) -> Path {
        let mask = if self.len() == MAX_LEN { u128::MAX } else { (1u128 << self.len) - 1 };
        Path { len: self.len, bits: !self.bits & mask }
    }

    /// Reverse the step sequence and flip every step. Maps Dyck suffixes to
    /// Dyck prefixes and back.
    pub fn reverse_flip(&self) -> Path {
        Path::from_steps(self.steps().rev().map(Step::flip)).expect("same length")
    }

    pub fn is_top(&self) -> bool {
        self.ups() == self.len()
    }

    /// Plain rendering, one letter per step.
    pub fn render(&self) -> String {
        self.steps().map(Step::letter).collect()
    }

    /// Run-length rendering, e.g. `u2d2u3dudud3`.
    pub fn render_run_length(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.len() {
            let s = self.step(i);
            let mut j = i;
            while j < self.len() && self.step(j) == s {
                j += 1;
            }
            out.push(s.letter());
            if j - i > 1 {
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.render())
        }
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

/// Parses the path literal grammar: a sequence of `u` / `d` tokens, each
/// optionally followed by a decimal repeat count `>= 1`. The empty string is
/// the empty path.
pub fn parse_path(text: &str) -> Result<Path> {
    let bytes = text.as_bytes();
    let mut steps = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let step = match bytes[i] {
            b'u' => Step::Up,
            b'd' => Step::Down,
            _ => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Parse { offset: i, message: format!("unexpected character {c:?}") });
            }
        };
        let start = i + 1;
        let mut j = start;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        let count = if j == start {
            1
        } else {
            let n: usize = text[start..j].parse().map_err(|_| Error::Parse {
                offset: start,
                message: "repeat count out of range".into(),
            })?;
            if n == 0 {
                return Err(Error::Parse { offset: start, message: "repeat count must be at least 1".into() });
            }
            n
        };
        if steps.len() + count > MAX_LEN {
            return Err(Error::Parse { offset: i, message: format!("path longer than {MAX_LEN} steps") });
        }
        steps.extend(std::iter::repeat(step).take(count));
        i = j;
    }
    Path::from_steps(steps)
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        parse_path(s)
    }
}

/// Shorthand for literals known to be valid.
pub fn p(text: &str) -> Path {
    parse_path(text).unwrap_or_else(|e| panic!("bad path literal {text:?}: {e}"))
}
