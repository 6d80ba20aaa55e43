//! Decision procedures for recognizing and refuting principal symmetric
//! ideals: generator-count bounds, order-type obstruction certificates,
//! monomial-psi characterizations, product/power criteria, and the
//! stabilizer-product criterion.
//!
//! Every `NotPsi` verdict carries a certificate that can be re-validated
//! from its own data via [`validate_certificate`], independently of the
//! search that produced it. `IsPsi` is never claimed without an explicit
//! witness `f` checked by ideal equality against `psi(f)`.

use crate::action::{is_k_symmetric, is_strongly_homogeneous, k_stabilizer};
use crate::combinatorics::{dim_r_a, factorial, Partition};
use crate::error::{Error, Result};
use crate::ideal::SymmetricIdeal;
use crate::linalg::intersect_order_types;
use crate::monomial::Monomial;
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::scalar::Field;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Beyond this many order types in the generation degree the obstruction
/// search restricts itself to single-type witnesses.
pub const DEFAULT_SUBSET_CAP: usize = 12;

/// Outcome of a psi check.
#[derive(Clone, Debug)]
pub enum PsiVerdict<F: Field> {
    /// The ideal equals `psi(witness)`; verified by ideal equality.
    IsPsi { witness: Polynomial<F>, notes: String },
    /// The ideal is provably not a psi; see the certificate.
    NotPsi { certificate: Certificate<F>, notes: String },
    Inconclusive { notes: String },
}

impl<F: Field> PsiVerdict<F> {
    pub fn is_not_psi(&self) -> bool {
        matches!(self, PsiVerdict::NotPsi { .. })
    }

    pub fn is_psi(&self) -> bool {
        matches!(self, PsiVerdict::IsPsi { .. })
    }
}

/// Re-checkable evidence that an ideal is not a psi.
#[derive(Clone, Debug)]
pub enum Certificate<F: Field> {
    /// More minimal generators than `|S_d| = d!` permits.
    MuBound { mu: usize, d_factorial: usize },
    /// Two elements of the generation degree with disjoint order-type
    /// supports, both nonzero at the all-ones point.
    OrderTypePair {
        types_a: Vec<Partition>,
        types_b: Vec<Partition>,
        g1: Polynomial<F>,
        g2: Polynomial<F>,
    },
}

/// Generator-count bound: a psi has at most `d!` minimal generators.
pub fn mu_bound_check<F: Field>(ideal: &SymmetricIdeal<F>) -> PsiVerdict<F> {
    let mu = ideal.mu();
    let bound = factorial(ideal.d());
    if mu > bound {
        PsiVerdict::NotPsi {
            certificate: Certificate::MuBound { mu, d_factorial: bound },
            notes: format!("mu = {mu} exceeds d! = {bound}"),
        }
    } else {
        PsiVerdict::Inconclusive {
            notes: format!("mu = {mu} within the d! = {bound} bound"),
        }
    }
}

/// Search the generation degree for two elements with disjoint order-type
/// supports that are nonzero at the all-ones point; such a pair certifies
/// that the ideal is not a psi.
///
/// Witness spaces are intersections of the graded piece with spans of
/// order-type component unions; subsets are scanned in canonical order
/// (size, then lexicographic), so single-type witnesses are preferred and
/// the reported pair is deterministic.
pub fn order_type_obstruction<F: Field>(ideal: &SymmetricIdeal<F>) -> PsiVerdict<F> {
    order_type_obstruction_with_cap(ideal, DEFAULT_SUBSET_CAP)
}

pub fn order_type_obstruction_with_cap<F: Field>(
    ideal: &SymmetricIdeal<F>,
    subset_cap: usize,
) -> PsiVerdict<F> {
    let Some(n) = ideal.single_generation_degree() else {
        return PsiVerdict::Inconclusive {
            notes: "ideal is not generated in a single degree; obstruction not applicable"
                .to_string(),
        };
    };
    let piece = ideal.graded_piece(n);
    let mut present: BTreeSet<Partition> = BTreeSet::new();
    for row in piece.basis() {
        present.extend(row.order_type_support());
    }
    let present: Vec<Partition> = present.into_iter().collect();
    let t = present.len();
    let singles_only = t > subset_cap;
    let mut masks: Vec<u32> = if singles_only {
        (0..t).map(|i| 1u32 << i).collect()
    } else {
        (1..(1u32 << t)).collect()
    };
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let mut flagged: Vec<(u32, Polynomial<F>)> = Vec::new();
    for mask in masks {
        let types: BTreeSet<Partition> = present
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect();
        let w = intersect_order_types(&piece, &types).expect("piece and types share degree");
        let Some(witness) = w.basis().iter().find(|b| !b.eval_at_one().is_zero()) else {
            continue;
        };
        for (other_mask, other_witness) in &flagged {
            if other_mask & mask == 0 {
                let g1 = other_witness.clone();
                let g2 = witness.clone();
                let types_a: Vec<Partition> = g1.order_type_support().into_iter().collect();
                let types_b: Vec<Partition> = g2.order_type_support().into_iter().collect();
                return PsiVerdict::NotPsi {
                    certificate: Certificate::OrderTypePair { types_a, types_b, g1, g2 },
                    notes: format!(
                        "degree-{n} witnesses with disjoint order-type supports, both nonzero at the all-ones point"
                    ),
                };
            }
        }
        flagged.push((mask, witness.clone()));
    }
    PsiVerdict::Inconclusive {
        notes: if singles_only {
            format!("no obstruction among single order types ({t} types, union scan skipped)")
        } else {
            "no pair of disjoint order-type unions certifies an obstruction".to_string()
        },
    }
}

/// Re-validate a certificate from its own data: membership, disjointness,
/// and nonvanishing at the all-ones point are recomputed, never trusted.
pub fn validate_certificate<F: Field>(
    ideal: &SymmetricIdeal<F>,
    certificate: &Certificate<F>,
) -> Result<()> {
    let fail = |msg: &str| Err(Error::InvalidArgument(msg.to_string()));
    match certificate {
        Certificate::MuBound { mu, d_factorial } => {
            if *d_factorial != factorial(ideal.d()) {
                return fail("certificate d! does not match the ideal's variable count");
            }
            if ideal.mu() != *mu {
                return fail("certificate mu does not match a recomputation");
            }
            if mu <= d_factorial {
                return fail("mu does not exceed d!, no obstruction");
            }
            Ok(())
        }
        Certificate::OrderTypePair { types_a, types_b, g1, g2 } => {
            let Some(n) = ideal.single_generation_degree() else {
                return fail("ideal is not generated in a single degree");
            };
            for (name, g) in [("g1", g1), ("g2", g2)] {
                match g.homogeneity() {
                    crate::poly::Homogeneity::Homogeneous(k) if k == n => {}
                    _ => return fail(&format!("{name} is not homogeneous of the generation degree")),
                }
                if g.eval_at_one().is_zero() {
                    return fail(&format!("{name} vanishes at the all-ones point"));
                }
                if !ideal.contains(g)? {
                    return fail(&format!("{name} is not an element of the ideal"));
                }
            }
            let sa = g1.order_type_support();
            let sb = g2.order_type_support();
            if sa.intersection(&sb).next().is_some() {
                return fail("witnesses share an order type");
            }
            if types_a.iter().cloned().collect::<BTreeSet<_>>() != sa {
                return fail("recorded order types of g1 do not match its support");
            }
            if types_b.iter().cloned().collect::<BTreeSet<_>>() != sb {
                return fail("recorded order types of g2 do not match its support");
            }
            Ok(())
        }
    }
}

/// Whether a single-degree ideal is a monomial ideal: in canonical reduced
/// form this holds exactly when every basis row is a single monomial.
pub fn is_monomial_ideal<F: Field>(ideal: &SymmetricIdeal<F>) -> Result<bool> {
    let n = ideal.single_generation_degree().ok_or(Error::NotSingleDegree)?;
    let piece = ideal.graded_piece(n);
    Ok(piece.basis().iter().all(|row| row.num_terms() == 1))
}

/// If the ideal is a monomial ideal whose generating piece is exactly one
/// whole order-type component `R_a`, return the canonical monomial of type
/// `a`; the ideal then equals `(m)_{S_d}`.
pub fn monomial_psi_test<F: Field>(ideal: &SymmetricIdeal<F>) -> Result<Option<Monomial>> {
    let n = ideal.single_generation_degree().ok_or(Error::NotSingleDegree)?;
    if !is_monomial_ideal(ideal)? {
        return Ok(None);
    }
    let piece = ideal.graded_piece(n);
    let mut types = BTreeSet::new();
    for row in piece.basis() {
        types.insert(Partition::order_type(row.leading_monomial().unwrap()));
    }
    if types.len() != 1 {
        return Ok(None);
    }
    let a = types.into_iter().next().unwrap();
    if piece.dim() == dim_r_a(&a, ideal.d()) {
        Ok(Some(a.canonical_monomial(ideal.d())))
    } else {
        Ok(None)
    }
}

/// Monomial-ideal consistency report for `psi(f)`: when the orbit ideal is
/// a monomial ideal, `f` must be strongly homogeneous and the ideal must be
/// `(m)_{S_d}` for a monomial `m`.
#[derive(Clone, Debug)]
pub struct StrongHomogeneityReport<F: Field> {
    pub ideal: SymmetricIdeal<F>,
    pub monomial_ideal: bool,
    pub strongly_homogeneous: Option<Partition>,
    pub monomial_witness: Option<Monomial>,
    pub consistent: bool,
}

pub fn strongly_homogeneous_psi_check<F: Field>(
    f: &Polynomial<F>,
) -> Result<StrongHomogeneityReport<F>> {
    let ideal = SymmetricIdeal::psi(f)?;
    let monomial_ideal = is_monomial_ideal(&ideal)?;
    let strongly_homogeneous = is_strongly_homogeneous(f)?;
    let monomial_witness = monomial_psi_test(&ideal)?;
    let consistent =
        !monomial_ideal || (strongly_homogeneous.is_some() && monomial_witness.is_some());
    Ok(StrongHomogeneityReport {
        ideal,
        monomial_ideal,
        strongly_homogeneous,
        monomial_witness,
        consistent,
    })
}

/// Predict whether the product of the monomial psi's of order types `a` and
/// `b` is again a psi: exactly when one of the padded tuples is constant,
/// i.e. one factor is generated by a power of `x_1 ... x_d`.
pub fn product_monomial_psi_predict(a: &Partition, b: &Partition, d: usize) -> bool {
    a.is_constant_tuple(d) || b.is_constant_tuple(d)
}

/// Everything the power criteria say about `I = psi(f)`.
#[derive(Clone, Debug)]
pub struct PowerPsiReport {
    pub d: usize,
    /// `sigma . f` proportional to `f` for all permutations.
    pub k_symmetric: bool,
    /// All powers of `I` are psi's iff `f` is k-symmetric (with witness
    /// `f^k` in that case).
    pub all_powers_psi: bool,
    /// When `f` is a monomial: whether it is of the invariant form
    /// `(x_1...x_d)^t`, which is equivalent to `I^2` being a psi.
    pub monomial_case: Option<bool>,
    /// When `d = 2`: `I^2` is a psi iff `f` is k-symmetric.
    pub two_var_square_psi: Option<bool>,
    /// Whether `I^2` equals `psi(f^2)`; a `true` here is an explicit psi
    /// witness for the square even when `f` is not k-symmetric.
    pub square_matches_f_squared: Option<bool>,
    /// First exponent whose power breaks the `mu <= d!` bound, with the
    /// offending `mu`. `None` when `f` is k-symmetric or the cap is hit.
    pub first_mu_violation: Option<(u32, usize)>,
    /// Exponent cap used for the violation search; the default is the
    /// smallest `k` with `mu(I) + k - 1 > d!`, which must fail by the
    /// product lower bound.
    pub power_cap: u32,
}

pub fn power_psi_analysis<F: Field>(f: &Polynomial<F>) -> Result<PowerPsiReport> {
    power_psi_analysis_with_cap(f, None)
}

pub fn power_psi_analysis_with_cap<F: Field>(
    f: &Polynomial<F>,
    cap: Option<u32>,
) -> Result<PowerPsiReport> {
    f.homogeneous_degree()?;
    let d = f.d();
    let ideal = SymmetricIdeal::psi(f)?;
    let k_symmetric = is_k_symmetric(f)?;
    let monomial_case = if f.num_terms() == 1 {
        let m = f.leading_monomial().unwrap();
        Some(Partition::order_type(m).is_constant_tuple(d))
    } else {
        None
    };
    let two_var_square_psi = (d == 2).then_some(k_symmetric);

    let square = ideal.power(2)?;
    let square_witness = SymmetricIdeal::psi(&f.mul(f))?;
    let square_matches_f_squared = Some(square.equals(&square_witness)?);

    let mu = ideal.mu();
    let bound = factorial(d);
    let default_cap = (bound + 2).saturating_sub(mu) as u32;
    let power_cap = cap.unwrap_or(default_cap).max(2);
    let mut first_mu_violation = None;
    if !k_symmetric {
        let mut acc = ideal.clone();
        for k in 2..=power_cap {
            acc = acc.product(&ideal)?;
            let mu_k = acc.mu();
            if mu_k > bound {
                first_mu_violation = Some((k, mu_k));
                break;
            }
        }
    }
    Ok(PowerPsiReport {
        d,
        k_symmetric,
        all_powers_psi: k_symmetric,
        monomial_case,
        two_var_square_psi,
        square_matches_f_squared,
        first_mu_violation,
        power_cap,
    })
}

/// Proof object for the stabilizer-product criterion.
#[derive(Clone, Debug)]
pub struct StabilizerProductProof {
    pub stab_f_order: usize,
    pub stab_g_order: usize,
    pub product_set_order: usize,
    /// `Stab_f` is the alternating group and `|Stab_g| = 2`; this forces
    /// the product set to be all of `S_d`.
    pub alternating_special_case: bool,
}

/// If the k-stabilizers of `f` and `g` satisfy `Stab_f Stab_g = S_d`, the
/// product of their psi's is `(fg)_{S_d}`; returns the proof data when the
/// criterion fires.
pub fn stabilizer_product_criterion<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<Option<StabilizerProductProof>> {
    if f.d() != g.d() {
        return Err(Error::DimensionMismatch { left: f.d(), right: g.d() });
    }
    let stab_f = k_stabilizer(f)?;
    let stab_g = k_stabilizer(g)?;
    let mut products: BTreeSet<Permutation> = BTreeSet::new();
    for sigma in &stab_f.elements {
        for tau in &stab_g.elements {
            products.insert(sigma.compose(tau));
        }
    }
    let full = factorial(f.d());
    if products.len() == full {
        Ok(Some(StabilizerProductProof {
            stab_f_order: stab_f.order(),
            stab_g_order: stab_g.order(),
            product_set_order: products.len(),
            alternating_special_case: stab_f.is_alternating && stab_g.order() == 2,
        }))
    } else {
        Ok(None)
    }
}

/// In two variables the product of two psi's is a psi exactly when one of
/// the generators is k-symmetric.
pub fn two_var_product_psi_test<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<bool> {
    for h in [f, g] {
        if h.d() != 2 {
            return Err(Error::WrongVariableCount { expected: 2, found: h.d() });
        }
        h.homogeneous_degree()?;
    }
    Ok(is_k_symmetric(f)? || is_k_symmetric(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use alloc::vec;
    use alloc::vec::Vec;
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
    fn mu_bound_flags_square_of_maximal_ideal() {
        let sq = psi("x1", 2).power(2).unwrap();
        let verdict = mu_bound_check(&sq);
        assert!(verdict.is_not_psi());
        match verdict {
            PsiVerdict::NotPsi { certificate, .. } => {
                validate_certificate(&sq, &certificate).unwrap();
                assert!(matches!(
                    certificate,
                    Certificate::MuBound { mu: 3, d_factorial: 2 }
                ));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn mu_bound_inconclusive_on_fresh_psi() {
        for (s, d) in [("x1*x2 + x3*x4", 4), ("x1 - x2", 3), ("x1^2*x2", 2)] {
            assert!(!mu_bound_check(&psi(s, d)).is_not_psi());
        }
    }

    #[test]
    fn mu_bound_flags_two_var_product_of_non_symmetric() {
        let i = psi("x1", 2);
        let j = psi("x1 + 2*x2", 2);
        let product = i.product(&j).unwrap();
        assert!(mu_bound_check(&product).is_not_psi());
    }

    #[test]
    fn obstruction_fires_on_product_example() {
        let i = psi("x1*x2", 4);
        let j = psi("x1*x2 + x3*x4", 4);
        let product = i.product(&j).unwrap();
        let verdict = order_type_obstruction(&product);
        match &verdict {
            PsiVerdict::NotPsi { certificate, .. } => {
                validate_certificate(&product, certificate).unwrap();
            }
            other => panic!("expected NotPsi, got {other:?}"),
        }
    }

    #[test]
    fn paper_form_witnesses_validate_for_product_example() {
        let i = psi("x1*x2", 4);
        let j = psi("x1*x2 + x3*x4", 4);
        let product = i.product(&j).unwrap();
        let g1 = parse("x1*x2*x3*x4 + x3^2*x4^2", 4);
        let g2 = parse("x2*x3^2*x4 + x1*x3*x4^2", 4);
        let certificate = Certificate::OrderTypePair {
            types_a: g1.order_type_support().into_iter().collect(),
            types_b: g2.order_type_support().into_iter().collect(),
            g1,
            g2,
        };
        validate_certificate(&product, &certificate).unwrap();
    }

    #[test]
    fn obstruction_inconclusive_on_monomial_psi() {
        let verdict = order_type_obstruction(&psi("x1*x2", 4));
        assert!(!verdict.is_not_psi());
    }

    #[test]
    fn obstruction_on_explicit_square_ideal() {
        let ideal = Ideal::from_generators(
            2,
            &[parse("x1^2", 2), parse("x1*x2", 2), parse("x2^2", 2)],
        )
        .unwrap();
        match order_type_obstruction(&ideal) {
            PsiVerdict::NotPsi { certificate, .. } => {
                validate_certificate(&ideal, &certificate).unwrap();
                match certificate {
                    Certificate::OrderTypePair { g1, g2, .. } => {
                        assert_eq!(g1, parse("x1^2", 2));
                        assert_eq!(g2, parse("x1*x2", 2));
                    }
                    _ => panic!("expected order-type certificate"),
                }
            }
            other => panic!("expected NotPsi, got {other:?}"),
        }
    }

    #[test]
    fn validator_rejects_tampered_certificates() {
        let ideal = Ideal::from_generators(
            2,
            &[parse("x1^2", 2), parse("x1*x2", 2), parse("x2^2", 2)],
        )
        .unwrap();
        // shared order type
        let bad = Certificate::OrderTypePair {
            types_a: vec![Partition::new(vec![2])],
            types_b: vec![Partition::new(vec![2])],
            g1: parse("x1^2", 2),
            g2: parse("x2^2", 2),
        };
        assert!(validate_certificate(&ideal, &bad).is_err());
        // witness vanishing at the all-ones point
        let bad = Certificate::OrderTypePair {
            types_a: vec![Partition::new(vec![2])],
            types_b: vec![Partition::new(vec![1, 1])],
            g1: parse("x1^2 - x2^2", 2),
            g2: parse("x1*x2", 2),
        };
        assert!(validate_certificate(&ideal, &bad).is_err());
        // non-member witness
        let smaller = Ideal::from_generators(2, &[parse("x1^2", 2)]).unwrap();
        let bad = Certificate::OrderTypePair {
            types_a: vec![Partition::new(vec![2])],
            types_b: vec![Partition::new(vec![1, 1])],
            g1: parse("x1^2", 2),
            g2: parse("x1*x2", 2),
        };
        assert!(validate_certificate(&smaller, &bad).is_err());
        // inflated mu claim
        let bad = Certificate::MuBound { mu: 99, d_factorial: 2 };
        assert!(validate_certificate(&ideal, &bad).is_err());
    }

    #[test]
    fn monomial_ideal_detection() {
        assert!(is_monomial_ideal(&psi("x1*x2", 4)).unwrap());
        assert!(!is_monomial_ideal(&psi("x1*x2 + x3*x4", 4)).unwrap());
        assert!(!is_monomial_ideal(&psi("x1 - x2", 2)).unwrap());
    }

    #[test]
    fn monomial_psi_test_examples() {
        let m = monomial_psi_test(&psi("x1*x2", 4)).unwrap();
        assert_eq!(m, Some(Monomial::new(vec![1, 1, 0, 0])));

        let two_types = Ideal::from_generators(2, &[parse("x1^2", 2), parse("x1*x2", 2)]).unwrap();
        assert_eq!(monomial_psi_test(&two_types).unwrap(), None);

        let inv = psi("x1^2*x2^2*x3^2", 3);
        assert_eq!(
            monomial_psi_test(&inv).unwrap(),
            Some(Monomial::new(vec![2, 2, 2]))
        );
    }

    #[test]
    fn strong_homogeneity_reports() {
        let r = strongly_homogeneous_psi_check(&parse("x1*x2", 4)).unwrap();
        assert!(r.monomial_ideal);
        assert!(r.consistent);
        assert_eq!(r.monomial_witness, Some(Monomial::new(vec![1, 1, 0, 0])));

        let r =
            strongly_homogeneous_psi_check(&parse("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4", 4)).unwrap();
        assert!(!r.monomial_ideal);
        assert!(r.strongly_homogeneous.is_none());
        assert!(r.consistent);

        let r = strongly_homogeneous_psi_check(&parse("x1*x2 + x3*x4", 4)).unwrap();
        assert!(!r.monomial_ideal);
        assert!(r.consistent);
    }

    #[test]
    fn product_monomial_psi_prediction() {
        let p = |parts: &[u32]| Partition::new(parts.to_vec());
        assert!(product_monomial_psi_predict(&p(&[1, 1, 1, 1]), &p(&[1, 1]), 4));
        assert!(!product_monomial_psi_predict(&p(&[1, 1]), &p(&[1, 1]), 4));
        assert!(product_monomial_psi_predict(&Partition::empty(), &p(&[3, 1]), 2));
    }

    #[test]
    fn exhaustive_monomial_product_agreement_small() {
        // constructive cross-validation of the prediction for |a|,|b| <= 3, d = 3
        for na in 1..=3usize {
            for nb in 1..=3usize {
                for a in crate::combinatorics::partitions_of(na, 3) {
                    for b in crate::combinatorics::partitions_of(nb, 3) {
                        let ia = Ideal::psi(&P::from_monomial(&a.canonical_monomial(3))).unwrap();
                        let ib = Ideal::psi(&P::from_monomial(&b.canonical_monomial(3))).unwrap();
                        let product = ia.product(&ib).unwrap();
                        let constructive = monomial_psi_test(&product).unwrap().is_some();
                        assert_eq!(
                            constructive,
                            product_monomial_psi_predict(&a, &b, 3),
                            "a = {a}, b = {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_analysis_of_difference_in_three_vars() {
        let report = power_psi_analysis(&parse("x1 - x2", 3)).unwrap();
        assert!(!report.k_symmetric);
        assert!(!report.all_powers_psi);
        assert_eq!(report.square_matches_f_squared, Some(true));
        // some power must break the bound
        assert!(report.first_mu_violation.is_some());
    }

    #[test]
    fn power_analysis_of_variable_in_two_vars() {
        let report = power_psi_analysis(&parse("x1", 2)).unwrap();
        assert!(!report.k_symmetric);
        assert_eq!(report.two_var_square_psi, Some(false));
        assert_eq!(report.first_mu_violation, Some((2, 3)));
        assert_eq!(report.square_matches_f_squared, Some(false));
    }

    #[test]
    fn power_analysis_of_invariant_monomial() {
        let report = power_psi_analysis(&parse("x1^2*x2^2*x3^2", 3)).unwrap();
        assert!(report.k_symmetric);
        assert!(report.all_powers_psi);
        assert_eq!(report.monomial_case, Some(true));
        assert_eq!(report.first_mu_violation, None);
        assert_eq!(report.square_matches_f_squared, Some(true));
    }

    #[test]
    fn stabilizer_criterion_fires_on_alternating_example() {
        let f = parse("x1^2*x2 + x2^2*x3 + x3^2*x1", 3);
        let g = parse("x1 - x2", 3);
        let proof = stabilizer_product_criterion(&f, &g).unwrap().unwrap();
        assert_eq!(proof.stab_f_order, 3);
        assert_eq!(proof.stab_g_order, 2);
        assert_eq!(proof.product_set_order, 6);
        assert!(proof.alternating_special_case);
        // independent confirmation: IJ = (fg)
        let product = Ideal::psi(&f).unwrap().product(&Ideal::psi(&g).unwrap()).unwrap();
        let direct = Ideal::psi(&f.mul(&g)).unwrap();
        assert!(product.equals(&direct).unwrap());
    }

    #[test]
    fn stabilizer_criterion_trivial_for_symmetric_inputs() {
        let f = parse("x1 + x2 + x3", 3);
        let g = parse("x1*x2*x3", 3);
        let proof = stabilizer_product_criterion(&f, &g).unwrap().unwrap();
        assert_eq!(proof.stab_f_order, 6);
        assert!(!proof.alternating_special_case);
    }

    #[test]
    fn stabilizer_criterion_fails_for_small_product_set() {
        let f = parse("x1 - x2", 4);
        // product set of two order-2 stabilizers has at most 4 elements < 24
        assert!(stabilizer_product_criterion(&f, &f).unwrap().is_none());
    }

    #[test]
    fn two_var_product_test_examples() {
        let x1 = parse("x1", 2);
        assert!(!two_var_product_psi_test(&x1, &x1).unwrap());
        assert!(two_var_product_psi_test(&parse("x1*x2", 2), &x1).unwrap());
        assert!(two_var_product_psi_test(&parse("x1 - x2", 2), &x1).unwrap());
        assert!(two_var_product_psi_test(&parse("x1", 3), &x1).is_err());
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
        fn obstruction_never_fires_on_a_psi(f in arb_homogeneous(3, 2)) {
            prop_assume!(!f.is_zero());
            let ideal = Ideal::psi(&f).unwrap();
            prop_assert!(!order_type_obstruction(&ideal).is_not_psi());
        }

        #[test]
        fn monomial_psi_test_recovers_order_type(
            idx in 0usize..20, degree in 1usize..4
        ) {
            for d in 2..=4usize {
                let parts = crate::combinatorics::partitions_of(degree, d);
                let a = &parts[idx % parts.len()];
                let ideal = Ideal::psi(&P::from_monomial(&a.canonical_monomial(d))).unwrap();
                let m = monomial_psi_test(&ideal).unwrap().expect("monomial psi");
                prop_assert_eq!(&Partition::order_type(&m), a);
            }
        }

        #[test]
        fn two_var_test_agrees_with_mu_bound(
            f in arb_homogeneous(2, 2), g in arb_homogeneous(2, 3)
        ) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let predicted = two_var_product_psi_test(&f, &g).unwrap();
            let product = Ideal::psi(&f).unwrap().product(&Ideal::psi(&g).unwrap()).unwrap();
            if !predicted {
                // both non-symmetric: mu >= 3 > 2! so the bound must fire
                prop_assert!(mu_bound_check(&product).is_not_psi());
            } else {
                prop_assert!(!mu_bound_check(&product).is_not_psi());
            }
        }

        #[test]
        fn stabilizer_criterion_is_sound(
            f in arb_homogeneous(3, 2), g in arb_homogeneous(3, 1)
        ) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            if stabilizer_product_criterion(&f, &g).unwrap().is_some() {
                let product =
                    Ideal::psi(&f).unwrap().product(&Ideal::psi(&g).unwrap()).unwrap();
                let direct = Ideal::psi(&f.mul(&g)).unwrap();
                prop_assert!(product.equals(&direct).unwrap());
            }
        }
    }
}
