//! Named verification suites.
//!
//! Each suite replays a family of identities at desk scale with exact
//! arithmetic and reports every mismatch together with the inputs and both
//! sides that produced it.  Suites are deterministic: randomized cases are
//! driven by a seeded generator.

mod dualities;
mod erasure;
mod examples;
mod groups;
mod kernels;
mod operators;
mod vertex;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::poly::SparsePolynomial;

/// Every suite name accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "coxeter", "welldef", "fact4", "thm9", "thm11", "prop6", "cor8", "dualityA", "dualityB",
    "dualityD", "kernels", "thm15", "thm18", "thm21", "thm23", "prop17", "prop20", "prop22",
    "prop25", "prop28", "lemma27", "fact26", "stability", "examples",
];

/// One failed case: which inputs, and what both sides evaluated to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub details: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub millis: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One line per suite, stable across runs except for the timing field.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: PASS ({} cases, {} ms)", self.suite, self.cases, self.millis)
        } else {
            format!(
                "{}: FAIL ({} of {} cases failed, {} ms)",
                self.suite,
                self.failures.len(),
                self.cases,
                self.millis
            )
        }
    }
}

/// Shared state threaded through a suite: the rank restriction, the seeded
/// generator, and the accumulated counts.
pub(crate) struct Ctx {
    restrict: Option<usize>,
    rng: ChaCha8Rng,
    cases: usize,
    failures: Vec<Failure>,
    ranges: Vec<String>,
}

impl Ctx {
    fn new(restrict: Option<usize>, seed: u64) -> Self {
        Ctx {
            restrict,
            rng: ChaCha8Rng::seed_from_u64(seed),
            cases: 0,
            failures: Vec::new(),
            ranges: Vec::new(),
        }
    }

    /// Ranks from `all` kept by the `--n` restriction, recorded for the
    /// report's parameter line.
    fn ranks(&mut self, label: &str, all: &[usize]) -> Vec<usize> {
        let picked: Vec<usize> = all
            .iter()
            .copied()
            .filter(|&n| self.restrict.map_or(true, |r| r == n))
            .collect();
        self.ranges.push(format!("{label}: n in {picked:?}"));
        picked
    }

    fn note_range(&mut self, text: impl Into<String>) {
        self.ranges.push(text.into());
    }

    fn check(&mut self, case: impl Into<String>, ok: bool, details: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure { case: case.into(), details: details() });
        }
    }

    fn check_poly(
        &mut self,
        case: impl Into<String>,
        got: &SparsePolynomial,
        want: &SparsePolynomial,
    ) {
        let ok = got == want;
        self.check(case, ok, || {
            format!("lhs = {}; rhs = {}", got.to_plain_string(), want.to_plain_string())
        });
    }

    /// A random polynomial with small dyadic coefficients.
    fn random_poly(&mut self, n: usize, max_degree: u16, terms: usize) -> SparsePolynomial {
        let mut acc = SparsePolynomial::zero(n);
        for _ in 0..terms {
            let exps: Vec<u16> = (0..n).map(|_| self.rng.gen_range(0..=max_degree)).collect();
            let mantissa: i64 = self.rng.gen_range(-4..=4);
            let exp2: i64 = self.rng.gen_range(-1..=1);
            let term =
                SparsePolynomial::monomial(n, &exps, DyadicRational::new(mantissa.into(), exp2));
            acc = acc.checked_add(&term).expect("same alphabet");
        }
        acc
    }

    /// A random symmetric polynomial: a small integer combination of
    /// products of elementary symmetric polynomials.
    fn random_symmetric(&mut self, n: usize) -> SparsePolynomial {
        let mut acc = SparsePolynomial::zero(n);
        for _ in 0..3 {
            let mut term = int_poly(n, self.rng.gen_range(-3..=3));
            for _ in 0..self.rng.gen_range(0..=2usize) {
                let k = self.rng.gen_range(1..=n);
                term = term.checked_mul(&crate::ptilde::elementary(k, n)).expect("same alphabet");
            }
            acc = acc.checked_add(&term).expect("same alphabet");
        }
        acc
    }
}

/// Runs the named suite.  `restrict` keeps only cases at that rank; the
/// seed drives randomized cases.
pub fn run_suite(suite: &str, restrict: Option<usize>, seed: u64) -> Result<Report> {
    if !SUITES.contains(&suite) {
        return Err(Error::InvalidArgument(format!("unknown suite: {suite}")));
    }
    let start = Instant::now();
    let mut ctx = Ctx::new(restrict, seed);
    match suite {
        "coxeter" => groups::coxeter(&mut ctx)?,
        "welldef" => groups::welldef(&mut ctx)?,
        "fact4" => erasure::fact4(&mut ctx)?,
        "thm9" => erasure::thm9(&mut ctx)?,
        "thm11" => erasure::thm11(&mut ctx)?,
        "prop6" => operators::prop6(&mut ctx)?,
        "cor8" => operators::cor8(&mut ctx)?,
        "dualityA" => dualities::duality_a(&mut ctx)?,
        "dualityB" => dualities::duality_b(&mut ctx)?,
        "dualityD" => dualities::duality_d(&mut ctx)?,
        "kernels" => kernels::kernels(&mut ctx)?,
        "thm15" => dualities::thm15(&mut ctx)?,
        "thm18" => dualities::thm18(&mut ctx)?,
        "thm21" => erasure::thm21(&mut ctx)?,
        "thm23" => dualities::thm23(&mut ctx)?,
        "prop17" => operators::prop17(&mut ctx)?,
        "prop20" => operators::prop20(&mut ctx)?,
        "prop22" => operators::prop22(&mut ctx)?,
        "prop25" => vertex::prop25(&mut ctx)?,
        "prop28" => operators::prop28(&mut ctx)?,
        "lemma27" => vertex::lemma27(&mut ctx)?,
        "fact26" => vertex::fact26(&mut ctx)?,
        "stability" => dualities::stability(&mut ctx)?,
        "examples" => examples::examples(&mut ctx)?,
        _ => unreachable!(),
    }
    Ok(Report {
        suite: suite.to_string(),
        params: ctx.ranges.join("; "),
        cases: ctx.cases,
        failures: ctx.failures,
        millis: start.elapsed().as_millis(),
    })
}

/// Runs every suite in declaration order.
pub fn run_all(restrict: Option<usize>, seed: u64) -> Result<Vec<Report>> {
    SUITES.iter().map(|s| run_suite(s, restrict, seed)).collect()
}

// ---- shared small helpers -------------------------------------------------

/// All weakly increasing vectors in `N^k` with entries at most `max`.
pub(crate) fn weakly_increasing(k: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, k: usize, lo: u32, max: u32) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            rec(out, cur, k, v, max);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), k, 0, max);
    out
}

/// Sum of the 1-based positions of `erased` inside `parts`; `None` when a
/// requested value is not present.
pub(crate) fn erase_positions(parts: &[u32], erased: &[u32]) -> Option<usize> {
    let mut sum = 0;
    for e in erased {
        sum += parts.iter().position(|p| p == e)? + 1;
    }
    Some(sum)
}

/// The parts surviving the erasure.
pub(crate) fn erase_parts(parts: &[u32], erased: &[u32]) -> Vec<u32> {
    parts.iter().copied().filter(|p| !erased.contains(p)).collect()
}

/// Exponent vectors contained in the staircase: entry `i` at most `n-1-i`.
pub(crate) fn staircase_codes(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let cap = (n - 1 - i) as u32;
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=cap).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// The staircase partition `(top, top-1, .., 1)`.
pub(crate) fn staircase_parts(top: usize) -> Vec<u32> {
    (1..=top as u32).rev().collect()
}

/// Weakly decreasing sequences with parts in `1..=max_part` and weight at
/// most `max_weight`, the empty one included.
pub(crate) fn bounded_partitions(max_part: usize, max_weight: usize) -> Vec<Vec<usize>> {
    fn go(max_part: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for p in 1..=max_part.min(remaining) {
            prefix.push(p);
            go(p, remaining - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_weight, &mut Vec::new(), &mut out);
    out
}

/// `x_1 x_2 .. x_k` inside an alphabet of `n` variables.
pub(crate) fn leading_product(n: usize, k: usize) -> SparsePolynomial {
    let mut exps = vec![0u16; n];
    for e in exps.iter_mut().take(k) {
        *e = 1;
    }
    SparsePolynomial::monomial(n, &exps, DyadicRational::one())
}

/// `x_1^p` inside an alphabet of `n` variables.
pub(crate) fn x1_power(n: usize, p: usize) -> SparsePolynomial {
    let mut exps = vec![0u16; n];
    exps[0] = p as u16;
    SparsePolynomial::monomial(n, &exps, DyadicRational::one())
}

pub(crate) fn int_poly(n: usize, value: i64) -> SparsePolynomial {
    SparsePolynomial::constant(n, DyadicRational::from_integer(value))
}

/// `(-1)^{odd} p`.
pub(crate) fn signed(p: SparsePolynomial, odd: bool) -> SparsePolynomial {
    if odd {
        -p
    } else {
        p
    }
}
