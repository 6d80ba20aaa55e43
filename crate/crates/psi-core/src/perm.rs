//! Permutations of `{1..d}` and streaming enumeration of `S_d`.

use crate::error::{Error, Result};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

/// A permutation stored as its image tuple: `images[i]` is the (1-based)
/// image of `i + 1`. Displays as a one-line image array `[2,1,3]`; cycle
/// notation like `(1 2)(3 4)` is accepted on parse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Build from a 1-based image tuple, validating bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = alloc::vec![false; d];
        for &v in &images {
            if v < 1 || v > d || seen[v - 1] {
                return Err(Error::InvalidArgument(
                    "image tuple is not a permutation".to_string(),
                ));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: usize) -> Self {
        Permutation { images: (1..=d).collect() }
    }

    /// The transposition `(i j)` (1-based).
    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=d).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn d(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self * rhs`: apply `rhs` first, so `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.d(), rhs.d());
        Permutation {
            images: (1..=self.d()).map(|i| self.apply(rhs.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.d()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Sign of the permutation: +1 for even, -1 for odd.
    pub fn sign(&self) -> i32 {
        let mut seen = alloc::vec![false; self.d()];
        let mut sign = 1;
        for start in 1..=self.d() {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                cur = self.apply(cur);
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// All of `S_d` in lexicographic order of image tuples, starting from
    /// the identity.
    pub fn all(d: usize) -> impl Iterator<Item = Permutation> {
        PermIter { next: Some(Permutation::identity(d)) }
    }

    /// The alternating group `A_d`.
    pub fn alternating(d: usize) -> Vec<Permutation> {
        Permutation::all(d).filter(|p| p.is_even()).collect()
    }

    /// Parse either an image array `[2,1,3]` or cycle notation
    /// `(1 2)(3 4)`; `d` fixes the ambient symmetric group.
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            Self::parse_images(trimmed, d)
        } else if trimmed.starts_with('(') {
            Self::parse_cycles(trimmed, d)
        } else {
            Err(Error::Parse {
                position: 0,
                message: "expected '[images]' or '(cycle)' notation".to_string(),
            })
        }
    }

    fn parse_images(text: &str, d: usize) -> Result<Self> {
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: "unterminated image array".to_string(),
            })?;
        let mut images = Vec::new();
        for part in inner.split(',') {
            let v: usize = part.trim().parse().map_err(|_| Error::Parse {
                position: 0,
                message: alloc::format!("invalid image entry '{}'", part.trim()),
            })?;
            images.push(v);
        }
        if images.len() != d {
            return Err(Error::InvalidArgument(alloc::format!(
                "image array has length {}, expected {d}",
                images.len()
            )));
        }
        Permutation::new(images)
    }

    fn parse_cycles(text: &str, d: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=d).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse {
                position: 0,
                message: "expected '(' starting a cycle".to_string(),
            })?;
            let close = open.find(')').ok_or_else(|| Error::Parse {
                position: 0,
                message: "unterminated cycle".to_string(),
            })?;
            let body = &open[..close];
            let mut points = Vec::new();
            for tok in body.split([' ', ',']).filter(|t| !t.is_empty()) {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    position: 0,
                    message: alloc::format!("invalid cycle entry '{tok}'"),
                })?;
                if v < 1 || v > d {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "cycle entry {v} out of range for d = {d}"
                    )));
                }
                points.push(v);
            }
            for w in points.windows(2) {
                images[w[0] - 1] = w[1];
            }
            if points.len() > 1 {
                images[points[points.len() - 1] - 1] = points[0];
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

struct PermIter {
    next: Option<Permutation>,
}

impl Iterator for PermIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut images = current.images.clone();
        if next_permutation(&mut images) {
            self.next = Some(Permutation { images });
        }
        Some(current)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
