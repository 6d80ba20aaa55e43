//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept in a map ordered by the canonical (grevlex) monomial
//! order with no stored zero coefficients, so equality, display, and
//! hashing are all canonical. The text grammar is
//!
//! ```text
//! poly     := term (('+' | '-') term)*
//! term     := [sign] [rational "*"] factor ("*" factor)*
//! factor   := "x" index ["^" exponent]
//! rational := integer ["/" positive-integer]
//! ```
//!
//! with insignificant whitespace, e.g. `3/2*x1^2*x3 - x2*x4`. A bare
//! rational is accepted as a degree-zero term so that every polynomial the
//! library produces (gcds and symmetric reductions can be constants)
//! round-trips through its display form.

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::scalar::Field;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

/// Homogeneity of a polynomial. The zero polynomial is homogeneous of every
/// degree and gets its own marker rather than a fake degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Homogeneous(usize),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<usize> {
        match self {
            Homogeneity::Homogeneous(n) => Some(n),
            _ => None,
        }
    }
}

/// A sparse polynomial in `d` variables over the field `F`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Polynomial<F: Field> {
    d: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(d: usize) -> Self {
        Polynomial { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        Self::from_term(Monomial::one(d), F::one())
    }

    /// The variable `x_i` (1-based).
    pub fn var(d: usize, i: usize) -> Self {
        Self::from_term(Monomial::var(d, i), F::one())
    }

    pub fn from_term(m: Monomial, c: F) -> Self {
        let d = m.d();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { d, terms }
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::from_term(m.clone(), F::one())
    }

    pub fn from_terms(d: usize, pairs: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Polynomial::zero(d);
        for (m, c) in pairs {
            p.add_term(m, c);
        }
        p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    /// Largest monomial in canonical order, `None` for zero.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    /// Total degree (max over terms), `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: F) {
        debug_assert_eq!(m.d(), self.d);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.d);
        }
        Polynomial {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            d: self.d,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        let mut out = Polynomial::zero(self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.d);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient so the canonical leading term is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Sum of all coefficients: the value of the polynomial at
    /// `x_1 = ... = x_d = 1`.
    pub fn eval_at_one(&self) -> F {
        let mut acc = F::zero();
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(first) => {
                if degrees.all(|n| n == first) {
                    Homogeneity::Homogeneous(first)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Homogeneous degree, treating zero as an error and mixed degrees as
    /// `NotHomogeneous`. Convenience used by preconditions all over.
    pub fn homogeneous_degree(&self) -> Result<usize> {
        match self.homogeneity() {
            Homogeneity::Zero => Err(Error::ZeroPolynomial),
            Homogeneity::Homogeneous(n) => Ok(n),
            Homogeneity::Inhomogeneous => Err(Error::NotHomogeneous),
        }
    }

    /// The set of order types among the terms.
    pub fn order_type_support(&self) -> BTreeSet<Partition> {
        self.terms.keys().map(Partition::order_type).collect()
    }

    /// Parse a polynomial in the crate grammar with `d` variables.
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        Parser::new(text, d).parse()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.display_is_negative();
            let mag = c.display_magnitude();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    d: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, d: usize) -> Self {
        Parser { bytes: text.as_bytes(), pos: 0, d }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn parse<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut poly = Polynomial::zero(self.d);
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            Some(_) => false,
            None => return Err(self.error("empty input")),
        };
        loop {
            let (m, c) = self.term(negative)?;
            poly.add_term(m, c);
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(_) => return Err(self.error("expected '+' or '-' between terms")),
            }
        }
    }

    fn term<F: Field>(&mut self, negative: bool) -> Result<(Monomial, F)> {
        let mut coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.sign() == num_bigint::Sign::NoSign {
                        return Err(self.error("zero denominator"));
                    }
                    den
                } else {
                    BigInt::from(1)
                };
                let c = F::from_ratio(&num, &den)
                    .map_err(|e| self.error(&alloc::format!("{e}")))?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    // bare constant term
                    let c = if negative { c.neg() } else { c };
                    return Ok((Monomial::one(self.d), c));
                }
                c
            }
            Some(b'x') => F::one(),
            Some(_) => return Err(self.error("expected a coefficient or a variable")),
            None => return Err(self.error("unexpected end of input")),
        };
        if negative {
            coeff = coeff.neg();
        }
        let mut exps = alloc::vec![0u32; self.d];
        loop {
            self.factor(&mut exps)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        match self.bump() {
            Some(b'x') => {}
            _ => return Err(self.error("expected variable 'x<index>'")),
        }
        let idx = self.small_integer("variable index")?;
        if idx == 0 || idx > self.d {
            return Err(Error::VarIndexOutOfRange { index: idx, vars: self.d });
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.small_integer("exponent")? as u32
        } else {
            1
        };
        exps[idx - 1] += exp;
        Ok(())
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse::<BigInt>()
            .map_err(|_| self.error("invalid integer"))
    }

    fn small_integer(&mut self, what: &str) -> Result<usize> {
        // indices and exponents stay machine-sized
        let start = self.pos;
        let n = self.integer()?;
        let msg = alloc::format!("{what} too large");
        n.try_into().map_err(|_| Error::Parse { position: start, message: msg })
    }
}

// ---------------------------------------------------------------------------
// Bivariate homogeneous gcd and exact division
// ---------------------------------------------------------------------------

/// Monic gcd of two homogeneous bivariate polynomials (not both zero).
///
/// Strips common powers of `x1`, `x2`, runs the Euclidean algorithm on the
/// dehomogenizations at `x2 = 1`, and rehomogenizes.
pub fn bivariate_homogeneous_gcd<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<Polynomial<F>> {
    check_bivariate(f)?;
    check_bivariate(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    f.homogeneous_degree()?;
    g.homogeneous_degree()?;
    let (a1, b1, u) = strip_and_dehomogenize(f);
    let (a2, b2, v) = strip_and_dehomogenize(g);
    let h = univariate_gcd(u, v);
    let core = rehomogenize::<F>(&h);
    let shift = Monomial::new(alloc::vec![a1.min(a2), b1.min(b2)]);
    Ok(core.mul_monomial(&shift).monic())
}

/// Exact quotient `f / g` for homogeneous bivariate polynomials with `g`
/// dividing `f`. Errors if the division leaves a remainder.
pub fn bivariate_div_exact<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<Polynomial<F>> {
    check_bivariate(f)?;
    check_bivariate(g)?;
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_zero() {
        return Ok(Polynomial::zero(2));
    }
    f.homogeneous_degree()?;
    g.homogeneous_degree()?;
    let (a1, b1, u) = strip_and_dehomogenize(f);
    let (a2, b2, v) = strip_and_dehomogenize(g);
    if a2 > a1 || b2 > b1 {
        return Err(Error::InvalidArgument("division is not exact".to_string()));
    }
    let (q, r) = univariate_div_rem(&u, &v);
    if !r.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidArgument("division is not exact".to_string()));
    }
    let core = rehomogenize::<F>(&q);
    let shift = Monomial::new(alloc::vec![a1 - a2, b1 - b2]);
    Ok(core.mul_monomial(&shift))
}

fn check_bivariate<F: Field>(f: &Polynomial<F>) -> Result<()> {
    if f.d() != 2 {
        return Err(Error::WrongVariableCount { expected: 2, found: f.d() });
    }
    Ok(())
}

/// Factor `f = x1^a * x2^b * f0` and return `(a, b, dehomogenized f0)`,
/// where the dehomogenization sets `x2 = 1` and is indexed by the exponent
/// of `x1`. `f0` is divisible by neither variable, so the result has a
/// nonzero constant term and exact degree `deg f0`.
fn strip_and_dehomogenize<F: Field>(f: &Polynomial<F>) -> (u32, u32, Vec<F>) {
    let a = f.terms().map(|(m, _)| m.exponents()[0]).min().unwrap();
    let b = f.terms().map(|(m, _)| m.exponents()[1]).min().unwrap();
    let deg = f.homogeneous_degree().unwrap() as u32 - a - b;
    let mut coeffs = alloc::vec![F::zero(); deg as usize + 1];
    for (m, c) in f.terms() {
        let j = (m.exponents()[0] - a) as usize;
        coeffs[j] = c.clone();
    }
    (a, b, coeffs)
}

fn rehomogenize<F: Field>(u: &[F]) -> Polynomial<F> {
    let deg = univariate_degree(u).expect("nonzero univariate input");
    Polynomial::from_terms(
        2,
        u.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| {
            (Monomial::new(alloc::vec![j as u32, (deg - j) as u32]), c.clone())
        }),
    )
}

fn univariate_degree<F: Field>(u: &[F]) -> Option<usize> {
    u.iter().rposition(|c| !c.is_zero())
}

fn univariate_div_rem<F: Field>(u: &[F], v: &[F]) -> (Vec<F>, Vec<F>) {
    let dv = univariate_degree(v).expect("division by zero polynomial");
    let mut rem: Vec<F> = u.to_vec();
    let mut quot = alloc::vec![F::zero(); u.len()];
    let lead_inv = v[dv].inv().expect("nonzero leading coefficient");
    while let Some(dr) = univariate_degree(&rem) {
        if dr < dv {
            break;
        }
        let factor = rem[dr].mul(&lead_inv);
        quot[dr - dv] = factor.clone();
        for (i, vc) in v.iter().enumerate().take(dv + 1) {
            let delta = factor.mul(vc);
            rem[dr - dv + i] = rem[dr - dv + i].sub(&delta);
        }
    }
    (quot, rem)
}

fn univariate_gcd<F: Field>(mut u: Vec<F>, mut v: Vec<F>) -> Vec<F> {
    loop {
        if univariate_degree(&v).is_none() {
            let d = univariate_degree(&u).expect("gcd of zero polynomials");
            let inv = u[d].inv().unwrap();
            return u.iter().map(|c| c.mul(&inv)).collect();
        }
        let (_, r) = univariate_div_rem(&u, &v);
        u = v;
        v = r;
    }
}
