//! Eventually periodic biinfinite words `...LLL · C · RRR...`.
//!
//! Positions are addressed through block coordinates: coordinate `j` in
//! `0..|C|` is `C[j]`, negative coordinates read the left period backwards
//! from its last letter, and coordinates `>= |C|` read the right period.
//! Position `i` of the point sits at coordinate `i + origin`, so the shift
//! map increments `origin`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicPoint {
    left_period: Vec<String>,
    center: Vec<String>,
    right_period: Vec<String>,
    origin: i64,
}

fn primitive_root(word: Vec<String>) -> Vec<String> {
    let n = word.len();
    for d in 1..n {
        if n.is_multiple_of(d) && (d..n).all(|i| word[i] == word[i - d]) {
            return word[..d].to_vec();
        }
    }
    word
}

impl EventuallyPeriodicPoint {
    /// The point `left^∞ · center · right^∞` whose position 0 is at
    /// coordinate `origin` (so `origin = 0` puts the first center letter,
    /// or the first letter of `right` when the center is empty, at 0).
    pub fn new<L, C, R>(left: L, center: C, right: R, origin: i64) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        C: IntoIterator,
        C::Item: Into<String>,
        R: IntoIterator,
        R::Item: Into<String>,
    {
        let left: Vec<String> = left.into_iter().map(Into::into).collect();
        let center: Vec<String> = center.into_iter().map(Into::into).collect();
        let right: Vec<String> = right.into_iter().map(Into::into).collect();
        if left.is_empty() || right.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut p = EventuallyPeriodicPoint {
            left_period: primitive_root(left),
            center,
            right_period: primitive_root(right),
            origin,
        };
        p.normalize();
        Ok(p)
    }

    /// The periodic point with `x_i = word[i mod |word|]`.
    pub fn periodic<W>(word: W) -> Result<Self>
    where
        W: IntoIterator,
        W::Item: Into<String>,
    {
        let word: Vec<String> = word.into_iter().map(Into::into).collect();
        Self::new(word.clone(), Vec::<String>::new(), word, 0)
    }

    fn normalize(&mut self) {
        let (l, c, r) = (&mut self.left_period, &mut self.center, &mut self.right_period);

        // Extend the right tail as far left as it goes. With an empty center
        // this moves the boundary into the left tail; the loop ends within
        // |L| + |R| steps unless L == R, which is the purely periodic case.
        let mut periodic = false;
        loop {
            if let Some(last) = c.last() {
                if last == r.last().unwrap() {
                    c.pop();
                    r.rotate_right(1);
                    continue;
                }
                break;
            }
            if l == r {
                periodic = true;
                break;
            }
            if l.last() == r.last() {
                l.rotate_right(1);
                r.rotate_right(1);
                self.origin += 1;
                continue;
            }
            break;
        }

        if periodic {
            let shift = self.origin.rem_euclid(r.len() as i64) as usize;
            r.rotate_left(shift);
            *l = r.clone();
            self.origin = 0;
            return;
        }

        // Then let the left tail take whatever prefix of the center it covers.
        let mut absorbed = 0;
        while absorbed < c.len() && c[absorbed] == l[0] {
            l.rotate_left(1);
            absorbed += 1;
        }
        c.drain(..absorbed);
        self.origin -= absorbed as i64;
    }

    pub fn left_period(&self) -> &[String] {
        &self.left_period
    }

    pub fn center(&self) -> &[String] {
        &self.center
    }

    pub fn right_period(&self) -> &[String] {
        &self.right_period
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// True iff `σ^n(x) = x` for some `n > 0`.
    pub fn is_periodic(&self) -> bool {
        self.center.is_empty() && self.left_period == self.right_period
    }

    /// The letter at position `i`.
    pub fn letter_at(&self, i: i64) -> &str {
        let j = i + self.origin;
        let c = self.center.len() as i64;
        if j < 0 {
            let l = self.left_period.len() as i64;
            &self.left_period[j.rem_euclid(l) as usize]
        } else if j < c {
            &self.center[j as usize]
        } else {
            let r = self.right_period.len() as i64;
            &self.right_period[(j - c).rem_euclid(r) as usize]
        }
    }

    /// `σ^n(x)`; negative `n` shifts the other way.
    pub fn shifted(&self, n: i64) -> Self {
        let mut p = self.clone();
        if p.is_periodic() {
            let len = p.right_period.len() as i64;
            p.right_period.rotate_left(n.rem_euclid(len) as usize);
            p.left_period = p.right_period.clone();
        } else {
            p.origin += n;
        }
        p
    }
}

impl fmt::Display for EventuallyPeriodicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})^inf [{}] ({})^inf @{}",
            self.left_period.join(" "),
            self.center.join(" "),
            self.right_period.join(" "),
            self.origin
        )
    }
}

/// Least `n > 0` with `y = σ^n(x)`, if any.
///
/// Shifting keeps the canonical periods and center and only moves the
/// origin, except for periodic points, whose origin is pinned to 0 and whose
/// period rotates instead.
pub fn shift_relation(x: &EventuallyPeriodicPoint, y: &EventuallyPeriodicPoint) -> Option<u64> {
    if x.is_periodic() {
        if !y.is_periodic() || x.right_period.len() != y.right_period.len() {
            return None;
        }
        let p = x.right_period.len();
        let mut rotated = x.right_period.clone();
        (1..=p).find_map(|n| {
            rotated.rotate_left(1);
            (rotated == y.right_period).then_some(n as u64)
        })
    } else {
        let same_shape = x.left_period == y.left_period && x.center == y.center && x.right_period == y.right_period;
        let n = y.origin - x.origin;
        (same_shape && n > 0).then_some(n as u64)
    }
}
