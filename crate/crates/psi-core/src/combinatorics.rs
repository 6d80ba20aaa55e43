//! Partitions, order types, and the counting formulas attached to them.
//!
//! A partition is stored trimmed (no trailing zeros) and padded to `d` parts
//! on demand when used as the order type of a monomial in `d` variables;
//! this avoids any ambiguity between a partition and its padded form.

use crate::monomial::Monomial;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A non-increasing tuple of positive parts with cached sum.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
    sum: usize,
}

impl Partition {
    /// Build from any list of naturals: sorts non-increasingly and trims
    /// zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let sum = parts.iter().map(|&p| p as usize).sum();
        Partition { parts, sum }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), sum: 0 }
    }

    /// Trimmed parts, non-increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|a|`, the sum of the parts.
    pub fn sum(&self) -> usize {
        self.sum
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The d-part order-type form: parts padded with zeros to length `d`.
    pub fn padded(&self, d: usize) -> Vec<u32> {
        debug_assert!(self.parts.len() <= d);
        let mut v = self.parts.clone();
        v.resize(d, 0);
        v
    }

    /// Whether the padded d-tuple is constant `(t, ..., t)`; these are the
    /// order types of the invariant monomials `(x_1 ... x_d)^t`.
    pub fn is_constant_tuple(&self, d: usize) -> bool {
        let padded = self.padded(d);
        padded.iter().all(|&p| p == padded[0])
    }

    /// Order type of a monomial: exponents sorted non-increasingly.
    pub fn order_type(m: &Monomial) -> Partition {
        Partition::new(m.exponents().to_vec())
    }

    /// The canonical monomial of this order type: exponents in
    /// non-increasing variable order, e.g. `x1^2*x2` for `(2,1)` in d = 3.
    pub fn canonical_monomial(&self, d: usize) -> Monomial {
        Monomial::new(self.padded(d))
    }

    /// Whether some monomial of type `self` divides the canonical monomial
    /// of type `other` (equivalently, `R_other` lies in the ideal generated
    /// by `R_self`). With both tuples sorted non-increasingly this is the
    /// componentwise comparison.
    pub fn divides_type(&self, other: &Partition, d: usize) -> bool {
        self.padded(d)
            .iter()
            .zip(other.padded(d))
            .all(|(&a, b)| a <= b)
    }
}

/// Partitions sort in enumeration order: `(4) < (3,1) < (2,2) < (2,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // lexicographic on the trimmed parts, longer-prefix rules apply
        for (a, b) in self.parts.iter().zip(&other.parts) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.parts.len().cmp(&other.parts.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` with at most `max_parts` parts, in lexicographically
/// decreasing order. `P(n)` is the length when `max_parts >= n`.
pub fn partitions_of(n: usize, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n as u32, max_parts, &mut current, &mut out);
    out
}

fn descend(
    remaining: usize,
    max_part: u32,
    slots: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let sum = current.iter().map(|&p| p as usize).sum();
        out.push(Partition { parts: current.clone(), sum });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = max_part.min(remaining as u32);
    for part in (1..=hi).rev() {
        current.push(part);
        descend(remaining - part as usize, part, slots - 1, current, out);
        current.pop();
    }
}

/// The partition-counting function `P(n)`.
pub fn partition_count(n: usize) -> usize {
    partitions_of(n, n).len()
}

/// `dim R_a` for an order type `a` padded to `d` parts: the multinomial
/// `d! / (n_1! n_2! ... n_k!)` over the multiplicities of the distinct
/// values (zeros included).
pub fn dim_r_a(a: &Partition, d: usize) -> usize {
    let padded = a.padded(d);
    let mut result = factorial_u128(d);
    let mut i = 0;
    while i < d {
        let mut j = i;
        while j < d && padded[j] == padded[i] {
            j += 1;
        }
        result /= factorial_u128(j - i);
        i = j;
    }
    result as usize
}

/// All distinct monomials of order type `a` in `d` variables, in descending
/// canonical order.
pub fn monomials_of_order_type(a: &Partition, d: usize) -> Vec<Monomial> {
    let mut exps = a.padded(d);
    // distinct permutations: start from the sorted-descending form and walk
    // down the lexicographic predecessor chain on exponent vectors
    let mut out = Vec::new();
    exps.sort_unstable_by(|x, y| y.cmp(x));
    loop {
        out.push(Monomial::new(exps.clone()));
        if !prev_permutation(&mut exps) {
            break;
        }
    }
    out.sort_by(|x, y| y.cmp(x));
    out
}

fn prev_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    factorial_u128(n) as usize
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Binomial coefficient as an exact machine integer.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// `dim R_n` for the full degree-`n` graded piece of `k[x_1..x_d]`.
pub fn dim_full_degree(d: usize, n: usize) -> usize {
    binomial(n + d - 1, d - 1)
}
