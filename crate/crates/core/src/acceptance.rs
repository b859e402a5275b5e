//! The acceptance suite: nine exact-equality checks, each against an
//! independent computation. Shared by `pathlat selftest` and the
//! `acceptance` integration test.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chains::{
    mobius_power, v_bijection_forward, zeta_corollary_check, CorollaryVariant, Evaluator, Method, TypeVChain,
    VCounter,
};
use crate::counting::{binom, i_count, interval_count, j_count, BigCount};
use crate::filling::{count_fillings, degree, degree_count, is_filling, star_fill};
use crate::lattice::{chain_dist, interval_iter, is_below, join, meet};
use crate::oeis;
use crate::oracle::{EnumFilter, Oracle};
use crate::path::{p, Path};

/// Every comparison is exact integer equality.
pub const TOLERANCE: u64 = 0;
/// Wall-clock budget for the worked examples.
pub const WORKED_EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
pub const RANDOM_PAIRS: usize = 10_000;
pub const RANDOM_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {}. {}: {} checks, {} mismatches, tolerance {TOLERANCE}, {} ms",
            self.id,
            self.title,
            self.checked,
            self.failures.len(),
            self.elapsed_ms
        )?;
        for fail in self.failures.iter().take(5) {
            write!(f, "\n       {fail}")?;
        }
        Ok(())
    }
}

struct Tally {
    checked: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { checked: 0, failures: Vec::new() }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, what: impl FnOnce() -> String, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.failures.push(format!("{}: got {got}, want {want}", what()));
        }
    }

    fn ok(&mut self, what: impl FnOnce() -> String, cond: bool) {
        self.checked += 1;
        if !cond {
            self.failures.push(what());
        }
    }
}

fn report(id: u8, title: &'static str, t: Tally, start: Instant) -> CriterionReport {
    CriterionReport {
        id,
        title,
        passed: t.failures.is_empty(),
        checked: t.checked,
        failures: t.failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn n(v: u64) -> BigCount {
    BigCount::from(v)
}

pub const TITLES: [&str; 9] = [
    "worked examples",
    "interval counts against brute force",
    "f: recursive, closed and brute force agree",
    "Moebius powers at the degree",
    "filling census",
    "degree distribution",
    "zeta corollaries",
    "type-V multichains",
    "minimality of the degree",
];

pub fn run(id: u8) -> Option<CriterionReport> {
    Some(match id {
        1 => worked_examples(),
        2 => intervals(),
        3 => f_agreement(),
        4 => mobius_powers(),
        5 => filling_census(),
        6 => degree_distribution(),
        7 => zeta_corollaries(),
        8 => v_machinery(),
        9 => minimality(),
        _ => return None,
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    (1..=9).filter_map(run).collect()
}

pub fn worked_examples() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut ev = Evaluator::new();
    t.eq(|| "f(u3d2u3dudud4)".into(), ev.f(&p("u3d2u3dudud4"), Method::Closed), n(514));
    t.eq(|| "f(du3du2d3u2d)".into(), ev.f(&p("du3du2d3u2d"), Method::Closed), n(921));

    let a = p("u2d2u3dudud3");
    let tails = ["u3dudud3", "u4d2ud3", "u3du2d4", "u4dud4", "u5d5"];
    let want_i = [71u64, 51, 46, 36, 21];
    let want_v = [1u64, 2, 2, 4, 5];
    let targets = ev.v_counter().targets(&a);
    t.eq(|| "number of s with V(a, s) != 0".into(), targets.len(), tails.len());
    for (i, tail) in tails.iter().enumerate() {
        let s = p("u2d2").concat(&p(tail));
        t.eq(|| format!("I({s})"), i_count(&s).unwrap_or_default(), n(want_i[i]));
        t.eq(|| format!("V({a}, {s})"), ev.v_counter().count(&a, &s).unwrap_or_default(), n(want_v[i]));
    }

    let js = [
        ("u2du2d3u2d", 218u64),
        ("u2du2d3u3", 183),
        ("u3dud3u2d", 166),
        ("u3dud3u3", 141),
        ("u4d4u2d", 114),
        ("u4d4u3", 99),
    ];
    for (q, want) in js {
        t.eq(|| format!("J({q})"), j_count(&p(q)), n(want));
    }
    t.eq(|| "V(ud, ud)".into(), ev.v_counter().count(&p("ud"), &p("ud")).unwrap_or_default(), n(1));
    let elapsed = start.elapsed();
    t.ok(|| format!("runtime {elapsed:?} exceeds {WORKED_EXAMPLE_BUDGET:?}"), elapsed < WORKED_EXAMPLE_BUDGET);
    report(1, TITLES[0], t, start)
}

pub fn intervals() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    for len in 0..=7 {
        let all = oracle.enumerate_paths(len, EnumFilter::All).expect("within limit");
        for a in &all {
            for b in all.iter().filter(|b| is_below(a, b)) {
                t.eq(|| format!("[{a}, {b}]"), interval_count(a, b).unwrap(), oracle.interval_count(a, b).unwrap());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for _ in 0..RANDOM_PAIRS {
        let len = rng.gen_range(0..=12usize);
        let x = random_path(&mut rng, len);
        let y = random_path(&mut rng, len);
        let (lo, hi) = (meet(&x, &y).unwrap(), join(&x, &y).unwrap());
        t.eq(|| format!("[{lo}, {hi}]"), interval_count(&lo, &hi).unwrap(), oracle.interval_count(&lo, &hi).unwrap());
    }
    report(2, TITLES[1], t, start)
}

fn random_path(rng: &mut ChaCha8Rng, len: usize) -> Path {
    let bits: u64 = rng.gen();
    Path::from_steps((0..len).map(|i| if bits >> i & 1 == 1 { crate::Step::Up } else { crate::Step::Down }))
        .expect("short")
}

pub fn f_agreement() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    let mut ev = Evaluator::new();
    for len in 0..=12 {
        for q in Path::all(len) {
            let r = ev.f(&q, Method::Recursive);
            let c = ev.f(&q, Method::Closed);
            if len <= 8 {
                let b = oracle.f(&q).unwrap();
                t.eq(|| format!("brute f({q})"), r.clone(), b);
            }
            t.eq(|| format!("closed f({q})"), c, r);
        }
    }
    report(3, TITLES[2], t, start)
}

pub fn mobius_powers() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    let mut ev = Evaluator::new();
    for len in 0..=7 {
        let top = Path::top(len);
        for q in Path::all(len) {
            let d = degree(&q);
            let brute = oracle.mobius_powers(&q, &top, d).unwrap();
            for k in 0..=d {
                let got = mobius_power(&q, &top, k, usize::MAX).unwrap();
                let want = if k < d {
                    BigInt::from(0)
                } else {
                    let f = BigInt::from(ev.f(&q, Method::Recursive));
                    if chain_dist(&q, &top).unwrap() % 2 == 0 {
                        f
                    } else {
                        -f
                    }
                };
                t.eq(|| format!("mu^{k}({q}, {top})"), got.clone(), want);
                t.eq(|| format!("brute mu^{k}({q}, {top})"), got, brute[k].clone());
            }
        }
    }
    report(4, TITLES[3], t, start)
}

pub fn filling_census() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut trib = vec![1u64, 1, 3];
    while trib.len() <= 20 {
        let k = trib.len();
        trib.push(trib[k - 1] + trib[k - 2] + trib[k - 3]);
    }
    for len in 0..=14 {
        let count = Path::all(len).filter(is_filling).count() as u64;
        t.eq(|| format!("fillings of length {len}"), count, trib[len]);
        t.eq(|| format!("count_fillings({len})"), count_fillings(len), n(trib[len]));
    }
    let oracle = Oracle::default();
    for len in 0..=12 {
        let image = oracle.enumerate_paths(len, EnumFilter::Filling).unwrap().len() as u64;
        t.eq(|| format!("filling image of length {len}"), image, trib[len]);
    }
    match oeis::check("A000213", 20) {
        Ok(r) => t.ok(|| format!("A000213 mismatches at n = {:?}", r.mismatches), r.passed()),
        Err(e) => t.ok(|| format!("A000213 fixture: {e}"), false),
    }
    report(5, TITLES[4], t, start)
}

pub fn degree_distribution() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    for len in 1..=10usize {
        let mut hist = vec![0u64; 2 * len];
        for q in Path::all(len) {
            let d = degree(&q);
            t.eq(|| format!("degree({q}) against filling iteration"), d, oracle.degree(&q));
            hist[d] += 1;
        }
        for (k, &c) in hist.iter().enumerate() {
            let want = degree_count(len, k).unwrap();
            t.eq(|| format!("paths of length {len} with degree {k}"), n(c), want.clone());
            if k >= 1 {
                t.eq(|| format!("closed form at ({len}, {k})"), want, binom(len.min(k) as i64, ((k + 2) / 2) as i64));
            }
        }
        t.eq(|| format!("degree(d^{len})"), degree(&Path::bottom(len)), 2 * len - 1);
    }
    report(6, TITLES[5], t, start)
}

pub fn zeta_corollaries() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut ev = Evaluator::new();
    for len in (0..=8).step_by(2) {
        for a in Path::all(len).filter(Path::is_pyramid_product) {
            for k in 0..=3 {
                let ok = zeta_corollary_check(&mut ev, &a, k, CorollaryVariant::Pyramid).unwrap();
                t.ok(|| format!("pyramid corollary a = {a}, k = {k}"), ok);
                if k >= 1 {
                    let ok = zeta_corollary_check(&mut ev, &a, k, CorollaryVariant::Top).unwrap();
                    t.ok(|| format!("top corollary a = {a}, k = {k}"), ok);
                }
            }
        }
    }
    report(7, TITLES[6], t, start)
}

pub fn v_machinery() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    let mut vc = VCounter::new();
    for len in (0..=8).step_by(2) {
        let dyck = oracle.enumerate_paths(len, EnumFilter::DyckPath).unwrap();
        for a in &dyck {
            for s in &dyck {
                let brute = oracle.v_count(a, s).unwrap();
                t.eq(|| format!("V({a}, {s})"), vc.count(a, s).unwrap(), brute.clone());

                // prime recursion: V(uad, usd) = Σ_{t ∈ [a, s]} V(a, t)
                if is_below(a, s) {
                    let ua = wrap(a);
                    let us = wrap(s);
                    let rhs: BigCount = interval_iter(*a, *s).map(|m| oracle.v_count(a, &m).unwrap()).sum();
                    t.eq(|| format!("V({ua}, {us}) by prime recursion"), oracle.v_count(&ua, &us).unwrap(), rhs);
                    bijection(&oracle, a, s, &mut t);
                }
            }
        }
    }

    let sigma = [
        "u2du2du2d2u2d3ud2u3du2dud2udud3",
        "u2du2du2d2u2d3ud2u3du3d3udud3",
        "u2du4d2udud3ud2u5du2d4ud3",
        "u4du2d2ududud4u6dud4ud3",
    ];
    let s = p("u5du3d3ud3udu4dudud3ud4");
    let want = [
        p("u3du2dududud2ud2udu3du2d2ud2ud3"),
        p("u3du3d2udud2ud2udu4du2d4ud3"),
        p("u4du2d2ududud3udu5dud4ud3"),
        s,
    ];
    match TypeVChain::new(sigma.iter().map(|x| p(x)).collect()).and_then(|c| v_bijection_forward(&c, &s)) {
        Ok((w, chain)) => {
            t.eq(|| "example w".into(), w, want[0]);
            t.ok(|| format!("example chain {:?}", chain.elements()), chain.elements() == want);
        }
        Err(e) => t.ok(|| format!("example mapping failed: {e}"), false),
    }
    report(8, TITLES[7], t, start)
}

fn wrap(a: &Path) -> Path {
    Path::top(1).concat(a).concat(&Path::bottom(1))
}

/// `Σ_{t <= s} V(a, t) = Σ_{w ∈ [a, a*]} V(w, s)`, and the forward map sends
/// the left-hand chains injectively onto the right-hand ones.
fn bijection(oracle: &Oracle, a: &Path, s: &Path, t: &mut Tally) {
    let mut lhs = Vec::new();
    for m in interval_iter(*a, *s) {
        lhs.extend(oracle.v_chains(a, &m).unwrap());
    }
    let a_star = star_fill(a);
    let mut rhs_total = 0usize;
    for w in interval_iter(*a, a_star) {
        if is_below(&w, s) {
            rhs_total += oracle.v_chains(&w, s).unwrap().len();
        }
    }
    t.eq(|| format!("bijection cardinality at ({a}, {s})"), lhs.len(), rhs_total);

    let mut images = HashSet::new();
    for chain in lhs {
        let out = TypeVChain::new(chain).and_then(|c| v_bijection_forward(&c, s));
        match out {
            Ok((w, image)) => {
                let inside = is_below(a, &w) && is_below(&w, &a_star) && image.start() == w && image.end() == *s;
                t.ok(|| format!("image of a chain at ({a}, {s}) starts outside [a, a*]"), inside);
                images.insert(image.elements().to_vec());
            }
            Err(e) => t.ok(|| format!("forward map at ({a}, {s}): {e}"), false),
        }
    }
    t.eq(|| format!("distinct images at ({a}, {s})"), images.len(), rhs_total);
}

pub fn minimality() -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let oracle = Oracle::default();
    for len in 0..=6 {
        for q in Path::all(len) {
            t.eq(|| format!("shortest small-interval chain from {q}"), oracle.min_chain_len(&q).unwrap(), degree(&q));
        }
    }
    report(9, TITLES[8], t, start)
}
