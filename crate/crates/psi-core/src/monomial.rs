//! Monomials as fixed-length exponent vectors, ordered by graded
//! reverse-lexicographic order (the crate-wide canonical term order).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A monomial in `d` variables: an exponent vector of length `d`.
///
/// Immutable after construction. The `Ord` impl is grevlex: higher total
/// degree wins; at equal degree the monomial whose rightmost differing
/// exponent is smaller is the larger one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `d` variables.
    pub fn one(d: usize) -> Self {
        Monomial { exps: alloc::vec![0; d] }
    }

    /// The variable `x_i` (1-based index).
    pub fn var(d: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= d);
        let mut exps = alloc::vec![0; d];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn d(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.d(), rhs.d());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// Enumerate all monomials of the given total degree, in descending
    /// canonical (grevlex) order.
    pub fn all_of_degree(d: usize, degree: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = alloc::vec![0u32; d];
        fill(&mut out, &mut exps, 0, degree);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, pos: usize, remaining: usize) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining as u32;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e as u32;
        fill(out, exps, pos + 1, remaining - e);
    }
    exps[pos] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-dimension comparisons only arise in degenerate containers;
        // order by length first to keep the order total.
        if self.exps.len() != other.exps.len() {
            return self.exps.len().cmp(&other.exps.len());
        }
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // rightmost difference: smaller exponent => larger monomial
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
