//! Degree-`r` combinatorial representations: validation, decode, greedy
//! encode, and the carry-based successor/predecessor.
//!
//! A [`Combinadic`] stores its coefficients in descending order,
//! `(c_r, c_{r-1}, ..., c_1)`, which is also its textual order (`4,3,0`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::binomial::{choose, parse_natural};
use crate::{Error, Natural, Result};

/// A validated representation: non-empty, strictly decreasing coefficients.
///
/// Coefficients with `c_i < i` are allowed; their terms contribute zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combinadic {
    coeffs: Vec<Natural>,
}

impl Combinadic {
    /// Same as [`validate`].
    pub fn new(coeffs: Vec<Natural>) -> Result<Self> {
        validate(coeffs)
    }

    /// Number of terms `r`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients in storage order, `c_r` first.
    pub fn coefficients(&self) -> &[Natural] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<Natural> {
        self.coeffs
    }

    /// `c_i` for `1 <= i <= r`.
    pub fn coefficient(&self, i: usize) -> Option<&Natural> {
        let r = self.degree();
        if i == 0 || i > r {
            return None;
        }
        Some(&self.coeffs[r - i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs
            .iter()
            .rev()
            .enumerate()
            .all(|(below, c)| *c == Natural::from(below))
    }
}

impl fmt::Display for Combinadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.coeffs)
    }
}

impl FromStr for Combinadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate(parse_list(s)?)
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, values: &[Natural]) -> fmt::Result {
    for (idx, v) in values.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Splits `a,b,c` into naturals. The empty string is the empty list.
pub(crate) fn parse_list(s: &str) -> Result<Vec<Natural>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_natural).collect()
}

/// The representation of zero: `(r-1, r-2, ..., 1, 0)`, every term `C(i-1, i) = 0`.
pub fn zero_rep(r: usize) -> Result<Combinadic> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(Combinadic {
        coeffs: (0..r).rev().map(Natural::from).collect(),
    })
}

/// Checks the tuple is non-empty and strictly decreasing.
pub fn validate(coeffs: Vec<Natural>) -> Result<Combinadic> {
    if coeffs.is_empty() {
        return Err(Error::EmptyRepresentation);
    }
    let r = coeffs.len();
    if let Some(index) = coeffs.windows(2).position(|w| w[0] <= w[1]) {
        return Err(Error::NotStrictlyDecreasing {
            index,
            upper_term: r - index,
            upper: coeffs[index].clone(),
            lower: coeffs[index + 1].clone(),
        });
    }
    Ok(Combinadic { coeffs })
}

/// `sum_{i=1}^{r} C(c_i, i)`.
pub fn decode(rep: &Combinadic) -> Natural {
    let r = rep.degree();
    rep.coeffs
        .iter()
        .enumerate()
        .map(|(idx, c)| choose(c, r - idx))
        .sum()
}

/// Greedy encoding: from `i = r` down to `1`, take the largest `c_i` whose
/// term still fits in what is left.
pub fn encode(m: &Natural, r: usize) -> Result<Combinadic> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut rem = m.clone();
    let mut coeffs: Vec<Natural> = Vec::with_capacity(r);
    for i in (1..=r).rev() {
        let cap = coeffs.last().map(|above| above - 1u32);
        let c = largest_fitting(&rem, i, cap.as_ref());
        rem -= choose(&c, i);
        coeffs.push(c);
    }
    debug_assert!(rem.is_zero());
    Ok(Combinadic { coeffs })
}

/// Largest `c <= cap` with `C(c, i) <= rem`: doubling ascent from `i - 1`
/// to bracket, then bisection.
fn largest_fitting(rem: &Natural, i: usize, cap: Option<&Natural>) -> Natural {
    if i == 1 {
        // C(c, 1) = c
        return match cap {
            Some(cap) if cap < rem => cap.clone(),
            _ => rem.clone(),
        };
    }

    // C(i-1, i) = 0 always fits
    let mut lo = Natural::from(i - 1);
    if matches!(cap, Some(cap) if *cap <= lo) {
        return lo;
    }

    let mut step = Natural::one();
    let mut hi = loop {
        let probe = &lo + &step;
        if let Some(cap) = cap {
            if &probe > cap {
                break cap + 1u32;
            }
        }
        if choose(&probe, i) <= *rem {
            lo = probe;
            step <<= 1;
        } else {
            break probe;
        }
    };

    // choose(lo) fits; hi is too big or past the cap
    loop {
        let gap = &hi - &lo;
        if gap <= Natural::one() {
            return lo;
        }
        let mid = &lo + (gap >> 1);
        if choose(&mid, i) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Representation of `decode(rep) + 1`, computed on the coefficients alone.
///
/// Let `j` be the length of the consecutive run `c_1, c_1 + 1, ..., c_1 + j - 1`
/// at the bottom. The run plus one collapses into the single term
/// `C(c_1 + j, j)`, so `c_j` becomes `c_1 + j` and positions `j-1..1` are
/// refilled with the zero block `(j-2, ..., 0)`. When the run covers the whole
/// tuple the same rewrite produces a new top coefficient.
pub fn successor(rep: &Combinadic) -> Combinadic {
    let c = &rep.coeffs;
    let r = c.len();
    let bottom = &c[r - 1];

    let mut run = 1;
    while run < r && c[r - run - 1] == &c[r - run] + 1u32 {
        run += 1;
    }

    let mut next = c.clone();
    next[r - run] = bottom + run;
    for l in 1..run {
        next[r - l] = Natural::from(l - 1);
    }
    Combinadic { coeffs: next }
}

/// Representation of `decode(rep) - 1`; undoes [`successor`].
///
/// A successor always ends in a zero block of length `j - 1` under a raised
/// `c_j`; peeling that block off and spreading `c_j - j` back into a
/// consecutive run restores the original.
pub fn predecessor(rep: &Combinadic) -> Result<Combinadic> {
    let c = &rep.coeffs;
    let r = c.len();

    let zero_block = c
        .iter()
        .rev()
        .enumerate()
        .take_while(|(below, v)| **v == Natural::from(*below))
        .count();
    if zero_block == r {
        return Err(Error::PredecessorOfZero(r));
    }

    let run = zero_block + 1;
    // c_run > run - 1 because the zero block is maximal and the tuple decreases
    let base = &c[r - run] - run;
    let mut prev = c.clone();
    for l in 1..=run {
        prev[r - l] = &base + (l - 1);
    }
    Ok(Combinadic { coeffs: prev })
}

/// Numeric order of two same-degree representations, read straight off the
/// coefficient tuples.
pub fn compare(a: &Combinadic, b: &Combinadic) -> Result<Ordering> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(a.coeffs.cmp(&b.coeffs))
}
