//! The subset view of the number system.
//!
//! A k-combination `{c_1 < c_2 < ... < c_k}` is the same object as the
//! representation `(c_k, ..., c_1)`, and its value is its 0-based position in
//! colexicographic order. Reading the subset as an MSB-first bitstring, colex
//! order is plain numeric order of the bitstrings.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::codec::{self, parse_list, write_joined, Combinadic};
use crate::{Error, Natural, Result};

/// Non-empty, strictly increasing element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Combination {
    elements: Vec<Natural>,
}

impl Combination {
    pub fn new(elements: Vec<Natural>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyCombination);
        }
        if let Some(pos) = elements.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing {
                index: pos + 1,
                earlier: elements[pos].clone(),
                later: elements[pos + 1].clone(),
            });
        }
        Ok(Combination { elements })
    }

    pub fn elements(&self) -> &[Natural] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Natural> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for the `len` convention.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_element(&self) -> &Natural {
        self.elements.last().expect("combination is non-empty")
    }
}

impl From<Combinadic> for Combination {
    fn from(rep: Combinadic) -> Self {
        let mut elements = rep.into_coefficients();
        elements.reverse();
        Combination { elements }
    }
}

impl From<Combination> for Combinadic {
    fn from(comb: Combination) -> Self {
        let mut coeffs = comb.elements;
        coeffs.reverse();
        codec::validate(coeffs).expect("reversed increasing tuple is strictly decreasing")
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.elements)
    }
}

impl FromStr for Combination {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Combination::new(parse_list(s)?)
    }
}

/// `sum_i C(c_i, i)` over the ascending elements.
pub fn rank(comb: &Combination) -> Natural {
    codec::decode(&Combinadic::from(comb.clone()))
}

/// The `r`-combination at colex position `x`. No universe size is needed.
pub fn unrank(x: &Natural, r: usize) -> Result<Combination> {
    codec::encode(x, r).map(Combination::from)
}

/// `count` combinations starting at rank `start`, in colex order.
///
/// Only the first is unranked; the rest are produced by [`codec::successor`].
pub fn enumerate(r: usize, start: &Natural, count: &Natural) -> Result<Enumerate> {
    let current = codec::encode(start, r)?;
    Ok(Enumerate {
        current,
        remaining: count.clone(),
    })
}

/// Stream returned by [`enumerate`].
#[derive(Debug, Clone)]
pub struct Enumerate {
    current: Combinadic,
    remaining: Natural,
}

impl Iterator for Enumerate {
    type Item = Combination;

    fn next(&mut self) -> Option<Combination> {
        if self.remaining.is_zero() {
            return None;
        }
        self.remaining -= 1u32;
        let next = codec::successor(&self.current);
        Some(std::mem::replace(&mut self.current, next).into())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self.remaining.to_usize() {
            Some(n) => (n, Some(n)),
            None => (usize::MAX, None),
        }
    }
}

/// Cuts `[start, end)` into `parts` contiguous half-open intervals whose
/// sizes differ by at most one; the longer ones come first.
pub fn split_range(
    r: usize,
    start: &Natural,
    end: &Natural,
    parts: usize,
) -> Result<Vec<(Natural, Natural)>> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    if parts == 0 {
        return Err(Error::ZeroParts);
    }
    if start > end {
        return Err(Error::InvalidRange {
            start: start.clone(),
            end: end.clone(),
        });
    }
    let (size, extra) = (end - start).div_rem(&Natural::from(parts));
    let extra = extra.to_usize().expect("remainder is below parts");

    let mut out = Vec::with_capacity(parts);
    let mut lo = start.clone();
    for idx in 0..parts {
        let mut hi = &lo + &size;
        if idx < extra {
            hi += 1u32;
        }
        out.push((lo, hi.clone()));
        lo = hi;
    }
    debug_assert_eq!(&lo, end);
    Ok(out)
}

/// `n` characters, MSB first: the character for bit `b` sits at position
/// `n - 1 - b` and is `1` iff `b` is an element.
pub fn to_bitstring(comb: &Combination, n: usize) -> Result<String> {
    let mut bits = vec![b'0'; n];
    for e in &comb.elements {
        match e.to_usize() {
            Some(b) if b < n => bits[n - 1 - b] = b'1',
            _ => {
                return Err(Error::ElementOutOfUniverse {
                    element: e.clone(),
                    universe: n,
                })
            }
        }
    }
    Ok(String::from_utf8(bits).expect("ascii"))
}

/// Inverse of [`to_bitstring`] with `n = s.len()`.
pub fn from_bitstring(s: &str) -> Result<Combination> {
    if let Some((position, found)) = s
        .chars()
        .enumerate()
        .find(|(_, ch)| *ch != '0' && *ch != '1')
    {
        return Err(Error::MalformedBitstring { position, found });
    }
    let n = s.len();
    let elements: Vec<Natural> = s
        .bytes()
        .enumerate()
        .rev()
        .filter(|(_, b)| *b == b'1')
        .map(|(pos, _)| Natural::from(n - 1 - pos))
        .collect();
    Combination::new(elements)
}
