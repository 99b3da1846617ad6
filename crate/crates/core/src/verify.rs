//! Exhaustive checks of existence, uniqueness and the supporting binomial
//! identities.
//!
//! [`sweep_uniqueness`] deliberately avoids the codec: it walks tuples with
//! its own generator and evaluates terms from a Pascal-triangle table, so it
//! can serve as an oracle for `encode`/`decode`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::binomial::{binomial, corollary_gap, hockey_stick_lhs_rhs, pascal_lhs_rhs};
use crate::codec::{self, Combinadic};
use crate::ranking::split_range;
use crate::{Error, Natural, Result};

/// Outcome of a sweep. Violations are collected, never raised.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    /// Degree swept; `None` for the identity sweep.
    pub r: Option<usize>,
    /// Exclusive bound on the top coefficient; only set by the uniqueness sweep.
    pub coefficient_bound: Option<usize>,
    pub values_covered: Natural,
    /// `(value, first representation, second representation)`
    pub duplicates: Vec<(Natural, Combinadic, Combinadic)>,
    pub gaps: Vec<Natural>,
    pub identities_checked: u64,
    pub identities_failed: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.duplicates.is_empty() && self.gaps.is_empty() && self.identities_failed == 0
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.values_covered += other.values_covered;
        self.duplicates.extend(other.duplicates);
        self.gaps.extend(other.gaps);
        self.identities_checked += other.identities_checked;
        self.identities_failed += other.identities_failed;
    }
}

/// Line-oriented form:
///
/// ```text
/// RESULT pass|fail
/// COVERED <n>
/// DUPLICATE <value> <rep1> <rep2>
/// GAP <value>
/// IDENTITIES <checked> <failed>
/// ```
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RESULT {}", if self.passed() { "pass" } else { "fail" })?;
        writeln!(f, "COVERED {}", self.values_covered)?;
        for (value, a, b) in &self.duplicates {
            writeln!(f, "DUPLICATE {value} {a} {b}")?;
        }
        for value in &self.gaps {
            writeln!(f, "GAP {value}")?;
        }
        writeln!(
            f,
            "IDENTITIES {} {}",
            self.identities_checked, self.identities_failed
        )
    }
}

/// Decodes every strictly decreasing `r`-tuple with top coefficient below
/// `coefficient_bound` and checks that no value repeats and that the values
/// are exactly `0..C(coefficient_bound, r)`.
pub fn sweep_uniqueness(r: usize, coefficient_bound: usize) -> Result<VerifyReport> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    if coefficient_bound < r {
        return Err(Error::BoundBelowDegree {
            bound: coefficient_bound,
            r,
        });
    }

    let table = PascalTable::new(coefficient_bound);
    let expected = table.get(coefficient_bound, r);

    let mut report = VerifyReport {
        r: Some(r),
        coefficient_bound: Some(coefficient_bound),
        ..VerifyReport::default()
    };

    let mut first_seen: BTreeMap<Natural, Vec<usize>> = BTreeMap::new();
    let mut tuple: Vec<usize> = (0..r).rev().collect();
    loop {
        let value: Natural = tuple
            .iter()
            .enumerate()
            .map(|(idx, &c)| table.get(c, r - idx))
            .sum();
        match first_seen.get(&value) {
            Some(prev) => {
                report
                    .duplicates
                    .push((value, as_rep(prev), as_rep(&tuple)));
            }
            None => {
                first_seen.insert(value, tuple.clone());
            }
        }
        if !next_decreasing(&mut tuple, coefficient_bound) {
            break;
        }
    }

    report.values_covered = Natural::from(first_seen.len());

    // values are visited sorted, so merging against 0..expected finds every hole
    let mut want = Natural::zero();
    for value in first_seen.keys() {
        while &want < value && want < expected {
            report.gaps.push(want.clone());
            want += 1u32;
        }
        if *value == want {
            want += 1u32;
        }
    }
    while want < expected {
        report.gaps.push(want.clone());
        want += 1u32;
    }
    Ok(report)
}

/// Next strictly decreasing tuple in lexicographic order, all entries below
/// `bound`. Returns false after the last one.
fn next_decreasing(tuple: &mut [usize], bound: usize) -> bool {
    let r = tuple.len();
    for p in (0..r).rev() {
        let ceiling = if p == 0 { bound } else { tuple[p - 1] };
        if tuple[p] + 1 < ceiling {
            tuple[p] += 1;
            for (q, slot) in tuple.iter_mut().enumerate().skip(p + 1) {
                *slot = r - 1 - q;
            }
            return true;
        }
    }
    false
}

fn as_rep(tuple: &[usize]) -> Combinadic {
    codec::validate(tuple.iter().copied().map(Natural::from).collect())
        .expect("generator only yields decreasing tuples")
}

struct PascalTable {
    rows: Vec<Vec<Natural>>,
}

impl PascalTable {
    fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Natural::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(Natural::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(Natural::one());
            rows.push(row);
        }
        PascalTable { rows }
    }

    fn get(&self, n: usize, k: usize) -> Natural {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

/// For every `m` in `0..=m_max`: `decode(encode(m)) == m` and
/// `successor(encode(m)) == encode(m + 1)`.
///
/// A decode mismatch is reported as `GAP m`; a successor mismatch as
/// `DUPLICATE m+1 <successor> <encoded>`. The range is split across threads;
/// the merged report does not depend on the split.
pub fn sweep_roundtrip(r: usize, m_max: &Natural) -> Result<VerifyReport> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let end = m_max + 1u32;
    let parts = match end.to_usize() {
        Some(len) => (len / 2048).clamp(1, rayon::current_num_threads() * 8),
        None => rayon::current_num_threads() * 8,
    };
    let ranges = split_range(r, &Natural::zero(), &end, parts)?;

    let partials: Vec<VerifyReport> = ranges
        .par_iter()
        .map(|(lo, hi)| roundtrip_range(r, lo, hi))
        .collect::<Result<_>>()?;

    let mut report = VerifyReport {
        r: Some(r),
        ..VerifyReport::default()
    };
    for partial in partials {
        report.absorb(partial);
    }
    Ok(report)
}

fn roundtrip_range(r: usize, lo: &Natural, hi: &Natural) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    if lo >= hi {
        return Ok(report);
    }
    let mut m = lo.clone();
    let mut current = codec::encode(&m, r)?;
    while &m < hi {
        if codec::decode(&current) == m {
            report.values_covered += 1u32;
        } else {
            report.gaps.push(m.clone());
        }
        m += 1u32;
        let next = codec::encode(&m, r)?;
        let stepped = codec::successor(&current);
        if stepped != next {
            report.duplicates.push((m.clone(), stepped, next.clone()));
        }
        current = next;
    }
    Ok(report)
}

/// Pascal recurrence for `n <= n_max, 1 <= r <= r_max`; Hockey-Stick for
/// `r <= n <= n_max`; the `+1` gap for `n <= n_max, 1 <= r <= r_max`; strict
/// growth `C(n, r) < C(n + 1, r)` for `1 <= r <= min(n, r_max)`, `n < n_max`.
/// Adjacent growth chains to every pair `n1 < n2`.
pub fn sweep_identities(n_max: usize, r_max: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut tally = |ok: bool| {
        report.identities_checked += 1;
        if !ok {
            report.identities_failed += 1;
        }
    };

    for n in 0..=n_max {
        let n_big = Natural::from(n);
        for r in 1..=r_max {
            let (lhs, rhs) = pascal_lhs_rhs(&n_big, r).expect("r >= 1");
            tally(lhs == rhs);
        }
        for r in 0..=n {
            let (lhs, rhs) = hockey_stick_lhs_rhs(&n_big, r).expect("r <= n");
            tally(lhs == rhs);
        }
        for r in 1..=r_max {
            let (top, run) = corollary_gap(&n_big, r).expect("r >= 1");
            tally(top == run + 1u32);
        }
        if n < n_max {
            let n_next = &n_big + 1u32;
            for r in 1..=r_max.min(n) {
                let r_big = Natural::from(r);
                tally(binomial(&n_big, &r_big) < binomial(&n_next, &r_big));
            }
        }
    }
    report
}
