//! Exact binomial coefficients with the extended definition
//! `C(n, r) = 0` whenever `n < r`, and evaluators for the Pascal recurrence
//! and the Hockey-Stick identity.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Unbounded non-negative integer.
pub type Natural = BigUint;

/// Parses a plain base-10 natural number: ASCII digits only, no sign, no
/// separators, no surrounding whitespace.
pub fn parse_natural(s: &str) -> Result<Natural> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidNatural(s.to_owned()));
    }
    Natural::parse_bytes(s.as_bytes(), 10).ok_or_else(|| Error::InvalidNatural(s.to_owned()))
}

/// `n! / (r! (n-r)!)` for `n >= r`, and `0` otherwise.
///
/// Panics only if the result could not be held in memory at all
/// (`min(r, n - r)` above `usize::MAX`).
pub fn binomial(n: &Natural, r: &Natural) -> Natural {
    if r > n {
        return Natural::zero();
    }
    let co = n - r;
    let k = r.min(&co);
    let k = k
        .to_usize()
        .expect("binomial coefficient too large to represent");
    choose(n, k)
}

/// [`binomial`] with a machine-sized lower index.
///
/// Runs the multiplicative product `prod (n-k+i)/i`, which stays exact at
/// every step because the partial product after step `i` is `C(n-k+i, i)`.
/// Small cases stay in `u128` until the first overflow.
pub fn choose(n: &Natural, k: usize) -> Natural {
    let k_big = Natural::from(k);
    if &k_big > n {
        return Natural::zero();
    }
    let k = {
        let co = n - &k_big;
        match co.to_usize() {
            Some(co) if co < k => co,
            _ => k,
        }
    };
    if k == 0 {
        return Natural::one();
    }

    let base = n - Natural::from(k);
    let mut i = 1usize;
    if let Some(base) = base.to_u64() {
        let mut acc: u128 = 1;
        while i <= k {
            let factor = base as u128 + i as u128;
            match acc.checked_mul(factor) {
                Some(p) => acc = p / i as u128,
                None => break,
            }
            i += 1;
        }
        if i > k {
            return Natural::from(acc);
        }
        return finish(Natural::from(acc), &Natural::from(base), i, k);
    }
    finish(Natural::one(), &base, i, k)
}

fn finish(mut acc: Natural, base: &Natural, from: usize, k: usize) -> Natural {
    for i in from..=k {
        acc *= base + Natural::from(i);
        acc /= Natural::from(i);
    }
    acc
}

/// Both sides of `C(n+1, r) = C(n, r) + C(n, r-1)`.
pub fn pascal_lhs_rhs(n: &Natural, r: usize) -> Result<(Natural, Natural)> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let lhs = choose(&(n + 1u32), r);
    let rhs = choose(n, r) + choose(n, r - 1);
    Ok((lhs, rhs))
}

/// Both sides of the Hockey-Stick identity
/// `C(n+1, r) = sum_{j=0}^{r} C(n-r+j, j)`.
pub fn hockey_stick_lhs_rhs(n: &Natural, r: usize) -> Result<(Natural, Natural)> {
    let r_big = Natural::from(r);
    if n < &r_big {
        return Err(Error::LowerExceedsUpper {
            n: n.clone(),
            r: r_big,
        });
    }
    let lhs = choose(&(n + 1u32), r);
    let base = n - &r_big;
    let rhs = (0..=r).map(|j| choose(&(&base + j), j)).sum();
    Ok((lhs, rhs))
}

/// `(C(n+r, r), sum_{i=1}^{r} C(n+i-1, i))`. The first exceeds the second by
/// exactly one: the sum is the "all ones below" run that a `+1` carries into
/// the next binomial.
pub fn corollary_gap(n: &Natural, r: usize) -> Result<(Natural, Natural)> {
    if r == 0 {
        return Err(Error::ZeroDegree);
    }
    let top = choose(&(n + r), r);
    let run = (1..=r).map(|i| choose(&(n + (i - 1)), i)).sum();
    Ok((top, run))
}
