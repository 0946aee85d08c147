//! Permutations of `{0, .., n-1}`.
//!
//! Composition is rightmost-first: `(a * b)(x) = a(b(x))`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation stored by its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its images, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(Error::Parse(format!(
                    "image {y} of point {x} is out of range for degree {n}"
                )));
            }
            if seen[y] {
                return Err(Error::Parse(format!(
                    "not a bijection: point {y} is hit twice"
                )));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(0 1)(2 3 4)"`; `""` and `"()"` give the identity.
    /// Points may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, msg: &str| Error::Parse(format!("{msg} at position {pos} in {text:?}"));
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'\t' => pos += 1,
                b'(' => {
                    pos += 1;
                    let mut cycle = Vec::new();
                    loop {
                        while pos < bytes.len() && matches!(bytes[pos], b' ' | b',' | b'\t') {
                            pos += 1;
                        }
                        if pos >= bytes.len() {
                            return Err(err(pos, "unterminated cycle"));
                        }
                        if bytes[pos] == b')' {
                            pos += 1;
                            break;
                        }
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(err(pos, "expected a point"));
                        }
                        let p: usize = text[start..pos]
                            .parse()
                            .map_err(|_| err(start, "bad point"))?;
                        if p >= degree {
                            return Err(err(start, &format!("point {p} out of range for degree {degree}")));
                        }
                        if seen[p] {
                            return Err(err(start, &format!("point {p} repeated")));
                        }
                        seen[p] = true;
                        cycle.push(p);
                    }
                    for (a, &p) in cycle.iter().enumerate() {
                        images[p] = cycle[(a + 1) % cycle.len()];
                    }
                }
                _ => return Err(err(pos, "unexpected character")),
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        let mut images = vec![0; x.images.len()];
        for (p, &q) in x.images.iter().enumerate() {
            images[self.images[p]] = self.images[q];
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point,
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(|c| c.len())
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    pub fn support_size(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x != y)
            .count()
    }

    /// Sign (+1 or -1).
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Ordering used to pick "simplest" representatives: fewer moved points first,
    /// then the canonical cycle notation compared lexicographically.
    pub fn cmp_simplest(&self, other: &Permutation) -> Ordering {
        self.support_size()
            .cmp(&other.support_size())
            .then_with(|| self.cycles().cmp(&other.cycles()))
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (a, p) in c.iter().enumerate() {
                if a > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}
