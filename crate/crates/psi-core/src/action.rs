//! The `S_d` action on polynomials: orbits, k-stabilizers, k-symmetry, and
//! order-type decompositions.
//!
//! `sigma . f(x_1, ..., x_d) = f(x_{sigma(1)}, ..., x_{sigma(d)})`, so the
//! exponent of `x_{sigma(i)}` in `sigma . m` equals the exponent of `x_i`
//! in `m`. Order types, degrees, and the value at the all-ones point are
//! invariant under the action.

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::scalar::Field;
use crate::DEFAULT_ORBIT_CAP;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

/// Apply a permutation of the variables to a polynomial.
pub fn act<F: Field>(sigma: &Permutation, f: &Polynomial<F>) -> Result<Polynomial<F>> {
    if sigma.d() != f.d() {
        return Err(Error::DimensionMismatch { left: sigma.d(), right: f.d() });
    }
    Ok(Polynomial::from_terms(
        f.d(),
        f.terms().map(|(m, c)| (act_monomial(sigma, m), c.clone())),
    ))
}

pub fn act_monomial(sigma: &Permutation, m: &Monomial) -> Monomial {
    let mut exps = alloc::vec![0u32; m.d()];
    for (i, &e) in m.exponents().iter().enumerate() {
        exps[sigma.apply(i + 1) - 1] = e;
    }
    Monomial::new(exps)
}

/// The distinct polynomials `sigma . f` over all of `S_d`, in first-seen
/// order along the lexicographic permutation stream. Length divides `d!`.
pub fn orbit<F: Field>(f: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    orbit_with_cap(f, DEFAULT_ORBIT_CAP)
}

pub fn orbit_with_cap<F: Field>(f: &Polynomial<F>, cap: usize) -> Result<Vec<Polynomial<F>>> {
    let d = f.d();
    if d > cap {
        return Err(Error::OrbitCapExceeded { d, cap });
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sigma in Permutation::all(d) {
        let g = act(&sigma, f).expect("same d");
        if seen.insert(g.clone()) {
            out.push(g);
        }
    }
    Ok(out)
}

/// If `g = c * f` for a nonzero scalar `c`, return `c`.
///
/// The candidate is read off the leading coefficients in canonical order
/// and then verified across every term, so no trial division happens.
pub fn proportionality<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Option<F> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    if f.num_terms() != g.num_terms() {
        return None;
    }
    let lead = f.leading_monomial()?;
    let c = g.coeff(lead)?.div(f.leading_coeff()?)?;
    for (m, fc) in f.terms() {
        match g.coeff(m) {
            Some(gc) if *gc == fc.mul(&c) => {}
            _ => return None,
        }
    }
    Some(c)
}

/// The k-stabilizer of `f`: all permutations sending `f` to a nonzero
/// scalar multiple of itself, with the multiple recorded per element.
#[derive(Clone, Debug)]
pub struct StabilizerReport<F: Field> {
    pub elements: Vec<Permutation>,
    pub characters: BTreeMap<Permutation, F>,
    pub is_full_group: bool,
    pub is_alternating: bool,
}

impl<F: Field> StabilizerReport<F> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.characters.contains_key(sigma)
    }
}

/// Compute the k-stabilizer by testing each element of `S_d` for
/// proportionality `sigma . f = c f`.
pub fn k_stabilizer<F: Field>(f: &Polynomial<F>) -> Result<StabilizerReport<F>> {
    k_stabilizer_with_cap(f, DEFAULT_ORBIT_CAP)
}

pub fn k_stabilizer_with_cap<F: Field>(
    f: &Polynomial<F>,
    cap: usize,
) -> Result<StabilizerReport<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.d();
    if d > cap {
        return Err(Error::OrbitCapExceeded { d, cap });
    }
    let mut elements = Vec::new();
    let mut characters = BTreeMap::new();
    for sigma in Permutation::all(d) {
        let g = act(&sigma, f).expect("same d");
        if let Some(c) = proportionality(f, &g) {
            elements.push(sigma.clone());
            characters.insert(sigma, c);
        }
    }
    let full = crate::combinatorics::factorial(d);
    let is_full_group = elements.len() == full;
    let is_alternating = elements.len() == full / 2 && elements.iter().all(|p| p.is_even());
    Ok(StabilizerReport { elements, characters, is_full_group, is_alternating })
}

/// Whether `sigma . f` is proportional to `f` for every permutation.
///
/// Checks only the `d - 1` adjacent transpositions: they generate `S_d`
/// and proportionality constants multiply along products.
pub fn is_k_symmetric<F: Field>(f: &Polynomial<F>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.d();
    for i in 1..d {
        let sigma = Permutation::transposition(d, i, i + 1);
        let g = act(&sigma, f).expect("same d");
        if proportionality(f, &g).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full-enumeration cross-check for [`is_k_symmetric`]; subject to the
/// orbit cap.
pub fn is_k_symmetric_exhaustive<F: Field>(f: &Polynomial<F>) -> Result<bool> {
    Ok(k_stabilizer(f)?.is_full_group)
}

/// Split a homogeneous polynomial into its strongly homogeneous components,
/// keyed by order type. The components sum back to the input.
pub fn order_type_decompose<F: Field>(
    f: &Polynomial<F>,
) -> Result<BTreeMap<Partition, Polynomial<F>>> {
    if f.homogeneity() == crate::poly::Homogeneity::Inhomogeneous {
        return Err(Error::NotHomogeneous);
    }
    let mut out: BTreeMap<Partition, Polynomial<F>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let key = Partition::order_type(m);
        out.entry(key)
            .or_insert_with(|| Polynomial::zero(f.d()))
            .add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// Write `f = g' + h` where `g'` collects the terms whose order type lies
/// in `types` and `h` the rest.
pub fn order_type_split<F: Field>(
    f: &Polynomial<F>,
    types: &BTreeSet<Partition>,
) -> Result<(Polynomial<F>, Polynomial<F>)> {
    if f.homogeneity() == crate::poly::Homogeneity::Inhomogeneous {
        return Err(Error::NotHomogeneous);
    }
    let mut g_prime = Polynomial::zero(f.d());
    let mut h = Polynomial::zero(f.d());
    for (m, c) in f.terms() {
        if types.contains(&Partition::order_type(m)) {
            g_prime.add_term(m.clone(), c.clone());
        } else {
            h.add_term(m.clone(), c.clone());
        }
    }
    Ok((g_prime, h))
}

/// The common order type when all terms of `f` share one, `None` otherwise.
pub fn is_strongly_homogeneous<F: Field>(f: &Polynomial<F>) -> Result<Option<Partition>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support = f.order_type_support();
    if support.len() == 1 {
        Ok(support.into_iter().next())
    } else {
        Ok(None)
    }
}
