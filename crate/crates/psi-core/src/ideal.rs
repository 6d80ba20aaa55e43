//! Symmetric ideals: psi construction, minimal generators, products,
//! powers, and Hilbert functions.
//!
//! A [`SymmetricIdeal`] owns a minimal homogeneous generating list and a
//! per-instance cache of graded pieces, filled degree by degree. Ideals are
//! immutable once built; the cache is interior state local to the instance.

use crate::action::orbit_with_cap;
use crate::combinatorics::{dim_full_degree, factorial};
use crate::error::{Error, Result};
use crate::linalg::{graded_piece, ideal_equal, span_reduce, GradedPiece};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::Field;
use crate::DEFAULT_ORBIT_CAP;
use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::rc::Rc;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

/// How an ideal was built; products and powers keep the full construction
/// tree so decision procedures can consult the original generators.
#[derive(Clone, Debug)]
pub enum Provenance<F: Field> {
    Psi(Polynomial<F>),
    Product(Box<Provenance<F>>, Box<Provenance<F>>),
    Power(Box<Provenance<F>>, u32),
    Explicit,
}

impl<F: Field> fmt::Display for Provenance<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Psi(p) => write!(f, "psi({p})"),
            Provenance::Product(a, b) => write!(f, "product({a}, {b})"),
            Provenance::Power(base, k) => write!(f, "power({base}, {k})"),
            Provenance::Explicit => write!(f, "gens"),
        }
    }
}

/// A homogeneous ideal of `k[x_1..x_d]` stable under the ambient symmetric
/// group action in the cases the constructors produce (psi's, their
/// products and powers); explicit generator lists are accepted as well.
#[derive(Debug)]
pub struct SymmetricIdeal<F: Field> {
    d: usize,
    generators: Vec<Polynomial<F>>,
    provenance: Provenance<F>,
    cache: RefCell<PieceCache<F>>,
}

#[derive(Debug)]
struct PieceCache<F: Field> {
    pieces: Vec<Rc<GradedPiece<F>>>,
    mu: Option<usize>,
}

impl<F: Field> Clone for SymmetricIdeal<F> {
    fn clone(&self) -> Self {
        let cache = self.cache.borrow();
        SymmetricIdeal {
            d: self.d,
            generators: self.generators.clone(),
            provenance: self.provenance.clone(),
            cache: RefCell::new(PieceCache {
                pieces: cache.pieces.clone(),
                mu: cache.mu,
            }),
        }
    }
}

impl<F: Field> SymmetricIdeal<F> {
    /// The principal symmetric ideal `(f)_{S_d}` generated by the orbit of
    /// a nonzero homogeneous `f`; the stored generators are the reduced
    /// basis of the orbit span, hence a minimal generating set.
    pub fn psi(f: &Polynomial<F>) -> Result<Self> {
        Self::psi_with_cap(f, DEFAULT_ORBIT_CAP)
    }

    pub fn psi_with_cap(f: &Polynomial<F>, cap: usize) -> Result<Self> {
        let degree = f.homogeneous_degree()?;
        let orb = orbit_with_cap(f, cap)?;
        let piece = span_reduce(f.d(), degree, &orb)?;
        let ideal = SymmetricIdeal {
            d: f.d(),
            generators: piece.basis().to_vec(),
            provenance: Provenance::Psi(f.clone()),
            cache: RefCell::new(PieceCache { pieces: Vec::new(), mu: None }),
        };
        // a psi has at most d! generators: the orbit maps onto a generating set
        assert!(
            ideal.generators.len() <= factorial(f.d()),
            "psi generator count exceeded d!"
        );
        Ok(ideal)
    }

    /// Ideal from an explicit list of homogeneous generators; zero entries
    /// are dropped and the list is minimalized degree by degree.
    pub fn from_generators(d: usize, generators: &[Polynomial<F>]) -> Result<Self> {
        for g in generators {
            if g.d() != d {
                return Err(Error::DimensionMismatch { left: d, right: g.d() });
            }
        }
        let minimal = minimalize(d, generators)?;
        Ok(SymmetricIdeal {
            d,
            generators: minimal,
            provenance: Provenance::Explicit,
            cache: RefCell::new(PieceCache { pieces: Vec::new(), mu: None }),
        })
    }

    /// The product ideal, generated by all pairwise products of the two
    /// generator lists and reduced immediately.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                gens.push(g.mul(h));
            }
        }
        let minimal = minimalize(self.d, &gens)?;
        Ok(SymmetricIdeal {
            d: self.d,
            generators: minimal,
            provenance: Provenance::Product(
                Box::new(self.provenance.clone()),
                Box::new(other.provenance.clone()),
            ),
            cache: RefCell::new(PieceCache { pieces: Vec::new(), mu: None }),
        })
    }

    /// `k`-th power (`k >= 1`), computed by repeated product with reduction
    /// at each step.
    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("power exponent must be >= 1".to_string()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        acc.provenance = Provenance::Power(Box::new(self.provenance.clone()), k);
        Ok(acc)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn provenance(&self) -> &Provenance<F> {
        &self.provenance
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Degrees in which the minimal generators live.
    pub fn generation_degrees(&self) -> BTreeSet<usize> {
        self.generators
            .iter()
            .map(|g| g.homogeneous_degree().expect("validated generators"))
            .collect()
    }

    /// The generation degree when there is exactly one.
    pub fn single_generation_degree(&self) -> Option<usize> {
        let degrees = self.generation_degrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    /// Minimal number of homogeneous generators, computed degree by degree
    /// as `dim I_n - dim (R_1 * I_{n-1})` and cached.
    pub fn mu(&self) -> usize {
        if let Some(mu) = self.cache.borrow().mu {
            return mu;
        }
        let mut total = 0;
        for n in self.generation_degrees() {
            let dim_n = self.graded_piece(n).dim();
            let below = if n == 0 {
                0
            } else {
                let prev = self.graded_piece(n - 1);
                let shifted: Vec<Polynomial<F>> = prev
                    .basis()
                    .iter()
                    .flat_map(|b| {
                        (1..=self.d).map(move |i| b.mul_monomial(&Monomial::var(b.d(), i)))
                    })
                    .collect();
                span_reduce(self.d, n, &shifted)
                    .expect("validated generators")
                    .dim()
            };
            total += dim_n - below;
        }
        debug_assert_eq!(total, self.generators.len());
        self.cache.borrow_mut().mu = Some(total);
        total
    }

    /// The degree-`n` graded piece, from the per-instance cache.
    pub fn graded_piece(&self, n: usize) -> Rc<GradedPiece<F>> {
        self.ensure_pieces(n);
        Rc::clone(&self.cache.borrow().pieces[n])
    }

    /// `H_I(n) = dim I_n`.
    pub fn hilbert_ideal(&self, n: usize) -> usize {
        self.graded_piece(n).dim()
    }

    /// `H_{R/I}(n) = dim R_n - dim I_n`.
    pub fn hilbert_quotient(&self, n: usize) -> usize {
        dim_full_degree(self.d, n) - self.hilbert_ideal(n)
    }

    /// Membership test for homogeneous polynomials (zero included).
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let n = f.homogeneous_degree()?;
        self.graded_piece(n).contains(f)
    }

    /// Mathematical equality of ideals via degreewise comparison of graded
    /// pieces up to the largest generator degree.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        ideal_equal(self.d, &self.generators, &other.generators)
    }

    /// Default cutoff for "for all degrees" style verifications: the sum of
    /// the generator degrees plus `d + 2` covers every decisive degree in
    /// practice.
    pub fn default_verification_cutoff(&self) -> usize {
        let sum: usize = self
            .generators
            .iter()
            .map(|g| g.homogeneous_degree().expect("validated generators"))
            .sum();
        sum + self.d + 2
    }

    fn ensure_pieces(&self, upto: usize) {
        let mut cache = self.cache.borrow_mut();
        while cache.pieces.len() <= upto {
            let m = cache.pieces.len();
            let piece = if m > 0 && cache.pieces[m - 1].is_full() {
                GradedPiece::full(self.d, m)
            } else {
                let mut rows: Vec<Polynomial<F>> = Vec::new();
                if m > 0 {
                    for b in cache.pieces[m - 1].basis() {
                        for i in 1..=self.d {
                            rows.push(b.mul_monomial(&Monomial::var(self.d, i)));
                        }
                    }
                }
                rows.extend(
                    self.generators
                        .iter()
                        .filter(|g| g.homogeneous_degree() == Ok(m))
                        .cloned(),
                );
                span_reduce(self.d, m, &rows).expect("validated generators")
            };
            cache.pieces.push(Rc::new(piece));
        }
    }
}

/// Reduce a homogeneous generator list to a minimal one: per degree
/// (ascending), keep only basis elements that are new modulo the ideal
/// generated so far.
fn minimalize<F: Field>(d: usize, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    let mut by_degree: alloc::collections::BTreeMap<usize, Vec<&Polynomial<F>>> =
        alloc::collections::BTreeMap::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        by_degree.entry(g.homogeneous_degree()?).or_default().push(g);
    }
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (n, group) in by_degree {
        let lower = graded_piece(d, &minimal, n)?;
        let lower_pivots: BTreeSet<Monomial> = lower
            .basis()
            .iter()
            .map(|b| b.leading_monomial().unwrap().clone())
            .collect();
        let mut stacked: Vec<Polynomial<F>> = lower.basis().to_vec();
        stacked.extend(group.into_iter().cloned());
        let combined = span_reduce(d, n, &stacked)?;
        for row in combined.basis() {
            if !lower_pivots.contains(row.leading_monomial().unwrap()) {
                minimal.push(row.clone());
            }
        }
    }
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::is_k_symmetric;
    use crate::combinatorics::{dim_r_a, Partition};
    use crate::scalar::Rational;
    use alloc::vec;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;
    type Ideal = SymmetricIdeal<Rational>;

    fn parse(s: &str, d: usize) -> P {
        P::parse(s, d).unwrap()
    }

    fn psi(s: &str, d: usize) -> Ideal {
        Ideal::psi(&parse(s, d)).unwrap()
    }

    #[test]
    fn psi_of_single_variable() {
        let ideal = psi("x1", 2);
        assert_eq!(ideal.mu(), 2);
        let gens: BTreeSet<_> = ideal.generators().iter().cloned().collect();
        assert!(gens.contains(&parse("x1", 2)));
        assert!(gens.contains(&parse("x2", 2)));
    }

    #[test]
    fn psi_of_paired_quadratic_has_three_generators() {
        assert_eq!(psi("x1*x2 + x3*x4", 4).mu(), 3);
        assert_eq!(psi("x1 - x2", 4).mu(), 3);
    }

    #[test]
    fn psi_of_elementary_symmetric_is_principal() {
        let e1 = psi("x1 + x2 + x3 + x4", 4);
        assert_eq!(e1.mu(), 1);
    }

    #[test]
    fn psi_rejects_bad_inputs() {
        assert!(matches!(Ideal::psi(&P::zero(3)), Err(Error::ZeroPolynomial)));
        assert!(matches!(
            Ideal::psi(&parse("x1 + x1*x2", 2)),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn mu_of_square_of_maximal_ideal() {
        let i = psi("x1", 2);
        let sq = i.power(2).unwrap();
        assert_eq!(sq.mu(), 3);
        // same ideal written explicitly
        let explicit = Ideal::from_generators(
            2,
            &[parse("x1^2", 2), parse("x1*x2", 2), parse("x2^2", 2)],
        )
        .unwrap();
        assert!(sq.equals(&explicit).unwrap());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(psi("x1 - x2", 2).mu(), 1);
        let i = psi("x1*x2", 4);
        assert_eq!(i.mu(), 6);
        assert_eq!(i.mu(), dim_r_a(&Partition::new(vec![1, 1]), 4));
    }

    #[test]
    fn product_of_variable_psi_with_itself() {
        let i = psi("x1", 2);
        let p = i.product(&i).unwrap();
        assert_eq!(p.mu(), 3);
        assert_eq!(p.single_generation_degree(), Some(2));
    }

    #[test]
    fn product_with_invariant_monomial_shifts_generators() {
        let inv = psi("x1*x2*x3*x4", 4);
        assert_eq!(inv.mu(), 1);
        let j = psi("x1*x2 + x3*x4", 4);
        let shifted = inv.product(&j).unwrap();
        assert_eq!(shifted.mu(), j.mu());
        let m = Monomial::new(vec![1, 1, 1, 1]);
        let expected: BTreeSet<P> = j.generators().iter().map(|g| g.mul_monomial(&m)).collect();
        let got: BTreeSet<P> = shifted.generators().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn product_matches_named_psi() {
        // (x1x2)_{S_4} * (x1-x2)_{S_4} = (x1x2(x1-x3))_{S_4}
        let i = psi("x1*x2", 4);
        let j = psi("x1 - x2", 4);
        let product = i.product(&j).unwrap();
        // x1*x2*(x1 - x3) expanded
        let witness = psi("x1^2*x2 - x1*x2*x3", 4);
        assert!(product.equals(&witness).unwrap());
    }

    #[test]
    fn square_of_difference_psi_is_psi_of_square() {
        for d in [3usize, 4] {
            let i = Ideal::psi(&parse("x1 - x2", d)).unwrap();
            let sq = i.power(2).unwrap();
            let direct = Ideal::psi(&parse("x1^2 - 2*x1*x2 + x2^2", d)).unwrap();
            assert!(sq.equals(&direct).unwrap(), "d = {d}");
        }
    }

    #[test]
    fn first_power_is_identity() {
        let i = psi("x1*x2 + x3*x4", 4);
        let p1 = i.power(1).unwrap();
        assert!(i.equals(&p1).unwrap());
        assert!(i.power(0).is_err());
    }

    #[test]
    fn hilbert_of_zero_ideal_quotient_is_ring_hilbert() {
        let zero = Ideal::from_generators(2, &[]).unwrap();
        for m in 0..6 {
            assert_eq!(zero.hilbert_ideal(m), 0);
            assert_eq!(zero.hilbert_quotient(m), m + 1);
        }
    }

    #[test]
    fn hilbert_of_orbit_monomial_ideal() {
        // brute-force oracle: degree-n monomials divisible by x1^2x2 or x1x2^2
        let i = psi("x1^2*x2", 2);
        let oracle = |n: usize| {
            Monomial::all_of_degree(2, n)
                .into_iter()
                .filter(|m| {
                    Monomial::new(vec![2, 1]).divides(m) || Monomial::new(vec![1, 2]).divides(m)
                })
                .count()
        };
        for (n, expected) in [(3usize, 2usize), (4, 3), (5, 4)] {
            assert_eq!(i.hilbert_ideal(n), expected);
            assert_eq!(i.hilbert_ideal(n), oracle(n));
        }
        assert_eq!(i.hilbert_ideal(0), 0);
        assert_eq!(i.hilbert_ideal(2), 0);
    }

    #[test]
    fn membership_through_cached_pieces() {
        let f = parse("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4", 4);
        let i = Ideal::psi(&f).unwrap();
        assert!(i.contains(&parse("x1*x2^2 + x1*x3*x4", 4)).unwrap());
        assert!(i.contains(&P::zero(4)).unwrap());
        assert!(!i.contains(&parse("x1^3", 4)).unwrap());
    }

    #[test]
    fn minimalize_drops_redundant_generators() {
        let i = Ideal::from_generators(
            2,
            &[
                parse("x1", 2),
                parse("x1 + x2", 2),
                parse("x1^2", 2), // redundant: already in (x1, x2) at degree 2
                parse("x1*x2 - x2^2", 2),
            ],
        )
        .unwrap();
        assert_eq!(i.mu(), 2);
        assert_eq!(i.generation_degrees(), BTreeSet::from([1]));
    }

    #[test]
    fn provenance_display() {
        let i = psi("x1*x2", 4);
        let j = psi("x1 - x2", 4);
        let p = i.product(&j).unwrap();
        assert_eq!(
            p.provenance().to_string(),
            "product(psi(x1*x2), psi(x1 - x2))"
        );
        assert_eq!(i.power(3).unwrap().provenance().to_string(), "power(psi(x1*x2), 3)");
    }

    fn arb_homogeneous(d: usize, degree: usize) -> impl Strategy<Value = P> {
        let monos = Monomial::all_of_degree(d, degree);
        let len = monos.len();
        proptest::collection::vec(-3i64..=3, len).prop_map(move |coeffs| {
            Polynomial::from_terms(
                d,
                monos
                    .iter()
                    .cloned()
                    .zip(coeffs.into_iter().map(Field::from_i64)),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn mu_bounded_by_group_order(f in arb_homogeneous(3, 2)) {
            prop_assume!(!f.is_zero());
            let i = Ideal::psi(&f).unwrap();
            prop_assert!(i.mu() <= 6);
        }

        #[test]
        fn mu_is_one_iff_k_symmetric(f in arb_homogeneous(3, 2)) {
            prop_assume!(!f.is_zero());
            let i = Ideal::psi(&f).unwrap();
            prop_assert_eq!(i.mu() == 1, is_k_symmetric(&f).unwrap());
        }

        #[test]
        fn k_symmetric_factor_distributes_over_psi(g in arb_homogeneous(3, 2)) {
            prop_assume!(!g.is_zero());
            let f = parse("x1*x2*x3", 3);
            let i = Ideal::psi(&f).unwrap();
            let j = Ideal::psi(&g).unwrap();
            let product = i.product(&j).unwrap();
            let direct = Ideal::psi(&f.mul(&g)).unwrap();
            prop_assert!(product.equals(&direct).unwrap());
        }

        #[test]
        fn hilbert_ideal_bounded_by_ring(f in arb_homogeneous(3, 2)) {
            prop_assume!(!f.is_zero());
            let i = Ideal::psi(&f).unwrap();
            for n in 0..7 {
                prop_assert!(i.hilbert_ideal(n) <= dim_full_degree(3, n));
            }
        }

        #[test]
        fn shift_equality_of_hilbert_characterizes_principal(f in arb_homogeneous(3, 2)) {
            prop_assume!(!f.is_zero());
            let i = Ideal::psi(&f).unwrap();
            let k = 2;
            let shifted_everywhere = (0..8).all(|n| {
                i.hilbert_ideal(n) == if n >= k { dim_full_degree(3, n - k) } else { 0 }
            });
            prop_assert_eq!(shifted_everywhere, i.mu() == 1);
        }
    }

    #[test]
    fn strongly_homogeneous_zero_at_one_bounds_mu() {
        // strongly homogeneous with f(1) = 0 => mu <= dim R_a - 1
        let cases = [
            ("x1*x2 - x3*x4", 4),
            ("x1^2*x2 - x2^2*x3", 3),
            ("x1 - x2", 3),
        ];
        for (s, d) in cases {
            let f = parse(s, d);
            assert!(Field::is_zero(&f.eval_at_one()));
            let a = crate::action::is_strongly_homogeneous(&f).unwrap().unwrap();
            let i = Ideal::psi(&f).unwrap();
            assert!(i.mu() <= dim_r_a(&a, d) - 1, "{s}");
        }
    }
}
