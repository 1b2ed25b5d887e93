use crate::error::{Error, Result};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least `k` such that every `n > k` is a nonnegative integer combination of
/// `lengths` (the Frobenius number, clamped below at 0).
///
/// Representability is tabulated up to `min · max + min`: the Frobenius
/// number is below `min · max`, and past it any run of `min` consecutive
/// representable values keeps going by adding `min`.
pub fn cofinite_threshold(lengths: &[u64]) -> Result<u64> {
    if lengths.is_empty() {
        return Err(Error::Precondition("no lengths given".into()));
    }
    if lengths.contains(&0) {
        return Err(Error::Precondition("lengths must be positive".into()));
    }
    let g = lengths.iter().fold(0, |acc, &l| gcd(acc, l));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    let lo = *lengths.iter().min().unwrap();
    let hi = *lengths.iter().max().unwrap();
    let limit = (lo * hi + lo) as usize;
    let mut representable = vec![false; limit + 1];
    representable[0] = true;
    for n in 1..=limit {
        representable[n] = lengths.iter().any(|&l| l as usize <= n && representable[n - l as usize]);
    }
    Ok((1..=limit).rev().find(|&n| !representable[n]).unwrap_or(0) as u64)
}
