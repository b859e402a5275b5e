//! Minimal chains with small intervals from a path to the top element.
//!
//! `f(P)` counts chains `P = P_0 <= ... <= P_δ = u^n` of length `δ(P)` with
//! `P_i <= filling(P_{i-1})`. [`Evaluator`] computes it by the basic
//! recursion or by the closed summation formulas.

mod incidence;
mod vchain;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

pub use incidence::{
    count_small_multichains, mobius, mobius_power, zeta_corollary_check, zeta_power, CorollaryVariant, SignedCount,
    DEFAULT_CAP,
};
pub use vchain::{v_bijection_forward, v_count, v_height, TypeVChain, VCounter};

use crate::counting::{i_count, j_count, BigCount};
use crate::error::Error;
use crate::filling::{filling, low_fill};
use crate::lattice::interval_iter;
use crate::path::{decompose, DecompKind, Path, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recursive,
    Closed,
    /// Currently the closed route.
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method, Error> {
        match s.to_ascii_lowercase().as_str() {
            "recursive" => Ok(Method::Recursive),
            "closed" => Ok(Method::Closed),
            "auto" => Ok(Method::Auto),
            other => Err(Error::Parse { offset: 0, message: format!("unknown method {other:?}") }),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Recursive => "recursive",
            Method::Closed => "closed",
            Method::Auto => "auto",
        };
        f.write_str(s)
    }
}

/// One identity applied while evaluating `f` in closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum TraceEvent {
    /// `f(uP) = f(P)`.
    StripUp { path: Path },
    /// All valleys at one height, so `f = 1`.
    SingleValleyHeight { path: Path },
    /// `f(P_1 P_2) = f(P_1) f(d P_2)`, split at the leftmost minimum.
    MinSplit { path: Path, suffix: Path, prefix: Path },
    /// `f(a u P) = f(a) f(d u P)` for a nonempty Dyck path `a`.
    DyckHead { path: Path, head: Path, rest: Path },
    /// `f(dP) = f(P)` for a Dyck prefix with a return.
    DropDown { path: Path },
    /// Multiplicativity over prime factors.
    PrimeFactors { path: Path, factors: Vec<Path> },
    /// `f(uad) = Σ V(a,s) I(s)`.
    PrimeSum { path: Path, terms: usize, value: String },
    /// `f(duP) = Σ Π V(a_i,s_i) J(s_0 V_1)`.
    DyckPrefixSum { path: Path, terms: usize, value: String },
    /// Dyck-suffix factor evaluated by the basic recursion.
    Recursion { path: Path, value: String },
}

/// Memo tables for `f`, `V`, `I` and `J`. Confined to one evaluator.
#[derive(Debug, Default)]
pub struct Evaluator {
    rec: HashMap<Path, BigCount>,
    v: VCounter,
    i_memo: HashMap<Path, BigCount>,
    j_memo: HashMap<Path, BigCount>,
    trace: Option<Vec<TraceEvent>>,
}

impl Evaluator {
    pub fn new() -> Evaluator {
        Evaluator::default()
    }

    pub fn f(&mut self, p: &Path, method: Method) -> BigCount {
        match method {
            Method::Recursive => self.f_recursive(p),
            Method::Closed | Method::Auto => self.f_closed(p),
        }
    }

    /// Closed evaluation together with the identities that fired.
    pub fn f_traced(&mut self, p: &Path) -> (BigCount, Vec<TraceEvent>) {
        self.trace = Some(Vec::new());
        let v = self.f_closed(p);
        (v, self.trace.take().unwrap_or_default())
    }

    pub fn v_counter(&mut self) -> &mut VCounter {
        &mut self.v
    }

    fn log(&mut self, ev: impl FnOnce() -> TraceEvent) {
        if let Some(t) = self.trace.as_mut() {
            t.push(ev());
        }
    }

    /// `f(P) = Σ_{Q ∈ [P', P̃]} f(Q)`, `f(u^n) = 1`.
    pub fn f_recursive(&mut self, p: &Path) -> BigCount {
        if p.is_top() {
            return BigCount::from(1u32);
        }
        if let Some(v) = self.rec.get(p) {
            return v.clone();
        }
        let v: BigCount = interval_iter(low_fill(p), filling(p)).map(|q| self.f_recursive(&q)).sum();
        self.rec.insert(*p, v.clone());
        v
    }

    pub fn f_closed(&mut self, p: &Path) -> BigCount {
        if p.is_top() {
            return BigCount::from(1u32);
        }
        if single_valley_height(p) {
            self.log(|| TraceEvent::SingleValleyHeight { path: *p });
            return BigCount::from(1u32);
        }
        if p.is_dyck_prefix() {
            return self.dyck_prefix(p);
        }
        if p.step(0) == Step::Up {
            self.log(|| TraceEvent::StripUp { path: *p });
            return self.f_closed(&p.slice(1, p.len()));
        }
        let parts = decompose(p, DecompKind::MinSplit).expect("always applies").parts;
        let (suffix, prefix) = (parts[0], parts[1]);
        self.log(|| TraceEvent::MinSplit { path: *p, suffix, prefix });
        let head = self.dyck_suffix(&suffix);
        if head.is_zero() {
            return head;
        }
        head * self.down_prefix(&prefix)
    }

    /// A Dyck suffix has no closed form; fall back to the recursion.
    fn dyck_suffix(&mut self, p: &Path) -> BigCount {
        if single_valley_height(p) {
            self.log(|| TraceEvent::SingleValleyHeight { path: *p });
            return BigCount::from(1u32);
        }
        let v = self.f_recursive(p);
        self.log(|| TraceEvent::Recursion { path: *p, value: v.to_string() });
        v
    }

    /// `f(dP)` for a Dyck prefix `P`.
    fn down_prefix(&mut self, p: &Path) -> BigCount {
        if p.is_empty() {
            return BigCount::from(1u32);
        }
        if p.returns().is_empty() {
            // P = u P' with P' a Dyck prefix
            return self.du_sum(&p.slice(1, p.len()));
        }
        self.log(|| TraceEvent::DropDown { path: p.pushed_front_down() });
        self.f_closed(p)
    }

    fn dyck_prefix(&mut self, p: &Path) -> BigCount {
        let parts = decompose(p, DecompKind::PrefixForm).expect("Dyck prefix").parts;
        let head = parts[0];
        if head.is_empty() {
            self.log(|| TraceEvent::StripUp { path: *p });
            return self.f_closed(&p.slice(1, p.len()));
        }
        if parts.len() == 1 {
            return self.dyck_path(&head);
        }
        let rest = p.slice(head.len() + 1, p.len());
        self.log(|| TraceEvent::DyckHead { path: *p, head, rest });
        let a = self.dyck_path(&head);
        a * self.du_sum(&rest)
    }

    fn dyck_path(&mut self, a: &Path) -> BigCount {
        let factors = decompose(a, DecompKind::PrimeFactors).expect("Dyck path").parts;
        if factors.len() > 1 {
            self.log(|| TraceEvent::PrimeFactors { path: *a, factors: factors.clone() });
        }
        factors.iter().map(|q| self.prime_sum(q)).product()
    }

    fn i_of(&mut self, s: &Path) -> BigCount {
        if let Some(v) = self.i_memo.get(s) {
            return v.clone();
        }
        let v = i_count(s).expect("Dyck path");
        self.i_memo.insert(*s, v.clone());
        v
    }

    fn j_of(&mut self, s: &Path) -> BigCount {
        if let Some(v) = self.j_memo.get(s) {
            return v.clone();
        }
        let v = j_count(s);
        self.j_memo.insert(*s, v.clone());
        v
    }

    /// `f(uad) = Σ_{s >= a} V(a, s) I(s)`.
    fn prime_sum(&mut self, q: &Path) -> BigCount {
        let a = q.slice(1, q.len() - 1);
        let targets = self.v.targets(&a);
        let terms = targets.len();
        let v: BigCount = targets.into_iter().map(|(s, vs)| vs * self.i_of(&s)).sum();
        self.log(|| TraceEvent::PrimeSum { path: *q, terms, value: v.to_string() });
        v
    }

    /// `f(duP) = Σ Π_{i=0}^k V(a_i, s_i) J(s_0 V_1)` for the Dyck prefix
    /// `P = a_0 u a_1 ... u a_k`, over Dyck paths `s_i >= a_i` and Dyck
    /// prefixes `V_i >= u s_i V_{i+1}`, `V_{k+1} = ε`.
    fn du_sum(&mut self, p: &Path) -> BigCount {
        let a = decompose(p, DecompKind::PrefixForm).expect("Dyck prefix").parts;
        // weights[V] = Σ over (s_i, V_{i+1}) for i > current of the V products
        let mut weights: HashMap<Path, BigCount> = HashMap::from([(Path::EMPTY, BigCount::from(1u32))]);
        for ai in a[1..].iter().rev() {
            let targets = self.v.targets(ai);
            let mut next: HashMap<Path, BigCount> = HashMap::new();
            for (below, c) in &weights {
                for (s, vs) in &targets {
                    let lo = Path::EMPTY.pushed(Step::Up).concat(s).concat(below);
                    let w = c * vs;
                    for v in interval_iter(lo, Path::top(lo.len())) {
                        *next.entry(v).or_default() += &w;
                    }
                }
            }
            weights = next;
        }
        let mut total = BigCount::zero();
        let mut terms = 0usize;
        for (s0, v0) in self.v.targets(&a[0]) {
            for (v1, c) in &weights {
                total += &v0 * c * self.j_of(&s0.concat(v1));
                terms += 1;
            }
        }
        self.log(|| TraceEvent::DyckPrefixSum { path: p.pushed_front_down_up(), terms, value: total.to_string() });
        total
    }
}

impl Path {
    fn pushed_front_down(&self) -> Path {
        Path::EMPTY.pushed(Step::Down).concat(self)
    }

    fn pushed_front_down_up(&self) -> Path {
        Path::EMPTY.pushed(Step::Down).pushed(Step::Up).concat(self)
    }
}

fn single_valley_height(p: &Path) -> bool {
    let vs = p.valleys();
    vs.windows(2).all(|w| w[0].1 == w[1].1)
}

/// `f(P)` with a fresh evaluator.
pub fn f_eval(p: &Path, method: Method) -> BigCount {
    Evaluator::new().f(p, method)
}
