//! Exact linear algebra on coefficient vectors of homogeneous polynomials.
//!
//! A [`GradedPiece`] is the canonical reduced basis (reduced row echelon
//! form over the grevlex-sorted monomial coordinates) of a subspace of the
//! degree-`n` slice of the polynomial ring. Matrices are dense rows over
//! the sorted monomial list of the degree; rational elimination is
//! fraction-free (Bareiss) with a final normalization pass, and a naive
//! Gauss-Jordan path is kept both for other fields and as a cross-check
//! oracle.

use crate::combinatorics::{dim_full_degree, Partition};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{Field, Rational};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Canonical reduced basis of a subspace of the degree-`degree` piece of
/// `k[x_1..x_d]`.
///
/// Basis rows have distinct pivot (leading) monomials with coefficient 1
/// and zeros above and below each pivot, and are listed with pivots in
/// descending canonical order. Reducing a reduced basis returns it
/// unchanged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPiece<F: Field> {
    d: usize,
    degree: usize,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> GradedPiece<F> {
    pub fn empty(d: usize, degree: usize) -> Self {
        GradedPiece { d, degree, basis: Vec::new() }
    }

    /// The full degree-`degree` piece, with the monomials themselves as the
    /// reduced basis.
    pub fn full(d: usize, degree: usize) -> Self {
        GradedPiece {
            d,
            degree,
            basis: Monomial::all_of_degree(d, degree)
                .iter()
                .map(Polynomial::from_monomial)
                .collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.dim() == dim_full_degree(self.d, self.degree)
    }

    /// Whether `f` lies in the span: true iff `f` reduces to zero against
    /// the basis.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        match f.homogeneity() {
            crate::poly::Homogeneity::Homogeneous(n) if n == self.degree => {}
            crate::poly::Homogeneity::Homogeneous(n) => {
                return Err(Error::DegreeMismatch { expected: self.degree, found: n })
            }
            _ => return Err(Error::NotHomogeneous),
        }
        Ok(self.reduce(f).is_zero())
    }

    /// Remainder of `f` after subtracting its pivot components. Pivot
    /// columns of distinct rows are independent in reduced form, so a
    /// single pass suffices.
    pub fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let mut r = f.clone();
        for row in &self.basis {
            let pivot = row.leading_monomial().expect("basis rows are nonzero");
            if let Some(c) = r.coeff(pivot) {
                let c = c.clone();
                r = r.sub(&row.scale(&c));
            }
        }
        r
    }
}

/// Reduce a list of homogeneous polynomials of the given degree to the
/// canonical basis of their span. Zero polynomials are discarded; a nonzero
/// input of the wrong degree is an error.
pub fn span_reduce<F: Field>(
    d: usize,
    degree: usize,
    polys: &[Polynomial<F>],
) -> Result<GradedPiece<F>> {
    let columns = Monomial::all_of_degree(d, degree);
    let index: BTreeMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut seen = BTreeSet::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        match p.homogeneity() {
            crate::poly::Homogeneity::Homogeneous(n) if n == degree => {}
            crate::poly::Homogeneity::Homogeneous(n) => {
                return Err(Error::DegreeMismatch { expected: degree, found: n })
            }
            _ => return Err(Error::NotHomogeneous),
        }
        if !seen.insert(p.clone()) {
            continue; // duplicate rows add nothing
        }
        let mut row = alloc::vec![F::zero(); columns.len()];
        for (m, c) in p.terms() {
            row[index[m]] = c.clone();
        }
        rows.push(row);
    }
    F::rref_rows(&mut rows);
    let basis = rows
        .into_iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| row_to_poly(d, &columns, &r))
        .collect();
    Ok(GradedPiece { d, degree, basis })
}

fn row_to_poly<F: Field>(d: usize, columns: &[Monomial], row: &[F]) -> Polynomial<F> {
    Polynomial::from_terms(
        d,
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (columns[i].clone(), c.clone())),
    )
}

/// The degree-`m` piece of the ideal generated by homogeneous `generators`:
/// the reduced span of `u * g` over generators `g` and monomials `u` of
/// degree `m - deg g`.
pub fn graded_piece<F: Field>(
    d: usize,
    generators: &[Polynomial<F>],
    m: usize,
) -> Result<GradedPiece<F>> {
    let mut rows = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let k = g.homogeneous_degree()?;
        if k > m {
            continue;
        }
        for u in Monomial::all_of_degree(d, m - k) {
            rows.push(g.mul_monomial(&u));
        }
    }
    span_reduce(d, m, &rows)
}

/// Graded pieces of the ideal generated by `generators` for every degree
/// `0..=cutoff`, computed incrementally: the degree-`m` piece is spanned by
/// `x_i * (degree m-1 basis)` plus the generators of degree `m`. Once a
/// piece fills its whole degree, all later pieces are full as well.
pub fn graded_pieces_up_to<F: Field>(
    d: usize,
    generators: &[Polynomial<F>],
    cutoff: usize,
) -> Result<Vec<GradedPiece<F>>> {
    let mut by_degree: BTreeMap<usize, Vec<&Polynomial<F>>> = BTreeMap::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        by_degree.entry(g.homogeneous_degree()?).or_default().push(g);
    }
    let mut pieces: Vec<GradedPiece<F>> = Vec::with_capacity(cutoff + 1);
    let mut full = false;
    for m in 0..=cutoff {
        if full {
            pieces.push(GradedPiece::full(d, m));
            continue;
        }
        let mut rows: Vec<Polynomial<F>> = Vec::new();
        if m > 0 {
            for b in pieces[m - 1].basis() {
                for i in 1..=d {
                    rows.push(b.mul_monomial(&Monomial::var(d, i)));
                }
            }
        }
        if let Some(gs) = by_degree.get(&m) {
            rows.extend(gs.iter().map(|g| (*g).clone()));
        }
        let piece = span_reduce(d, m, &rows)?;
        full = piece.is_full();
        pieces.push(piece);
    }
    Ok(pieces)
}

/// Whether two homogeneous generator lists generate the same ideal.
///
/// Both ideals are generated in degrees `<= D`, the largest generator
/// degree across the two lists, so agreement of every graded piece up to
/// `D` forces the ideals to coincide.
pub fn ideal_equal<F: Field>(
    d: usize,
    gens_a: &[Polynomial<F>],
    gens_b: &[Polynomial<F>],
) -> Result<bool> {
    let max_degree = |gens: &[Polynomial<F>]| -> Result<Option<usize>> {
        let mut out = None;
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let k = g.homogeneous_degree()?;
            out = Some(out.map_or(k, |cur: usize| cur.max(k)));
        }
        Ok(out)
    };
    let da = max_degree(gens_a)?;
    let db = max_degree(gens_b)?;
    let cutoff = match (da, db) {
        (None, None) => return Ok(true), // both zero ideals
        (None, Some(_)) | (Some(_), None) => return Ok(false),
        (Some(a), Some(b)) => a.max(b),
    };
    let pa = graded_pieces_up_to(d, gens_a, cutoff)?;
    let pb = graded_pieces_up_to(d, gens_b, cutoff)?;
    Ok(pa == pb)
}

/// Intersection of a graded piece with `R_a`, the span of the monomials of
/// order type `a`.
pub fn intersect_order_type<F: Field>(
    piece: &GradedPiece<F>,
    a: &Partition,
) -> Result<GradedPiece<F>> {
    let mut types = BTreeSet::new();
    types.insert(a.clone());
    intersect_order_types(piece, &types)
}

/// Intersection of a graded piece with the span of all monomials whose
/// order type lies in `types`: the elements of the span supported only on
/// those monomials.
pub fn intersect_order_types<F: Field>(
    piece: &GradedPiece<F>,
    types: &BTreeSet<Partition>,
) -> Result<GradedPiece<F>> {
    if piece.dim() == 0 {
        return Ok(GradedPiece::empty(piece.d(), piece.degree()));
    }
    let columns = Monomial::all_of_degree(piece.d(), piece.degree());
    let outside: Vec<&Monomial> = columns
        .iter()
        .filter(|m| !types.contains(&Partition::order_type(m)))
        .collect();
    // combination coefficients c with sum_i c_i basis_i supported inside:
    // rows indexed by outside monomials, columns by basis elements
    let k = piece.dim();
    let mut constraint: Vec<Vec<F>> = Vec::with_capacity(outside.len());
    for m in &outside {
        let row: Vec<F> = piece
            .basis()
            .iter()
            .map(|b| b.coeff(m).cloned().unwrap_or_else(F::zero))
            .collect();
        constraint.push(row);
    }
    let kernel = nullspace(constraint, k);
    let combos: Vec<Polynomial<F>> = kernel
        .iter()
        .map(|c| {
            let mut acc = Polynomial::zero(piece.d());
            for (ci, b) in c.iter().zip(piece.basis()) {
                if !ci.is_zero() {
                    acc = acc.add(&b.scale(ci));
                }
            }
            acc
        })
        .collect();
    span_reduce(piece.d(), piece.degree(), &combos)
}

/// Basis of the solution space of `M x = 0` for a dense matrix with
/// `ncols` columns.
pub fn nullspace<F: Field>(mut matrix: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    F::rref_rows(&mut matrix);
    let mut pivot_of_col: Vec<Option<usize>> = alloc::vec![None; ncols];
    let mut pivot_cols = Vec::new();
    for (r, row) in matrix.iter().enumerate() {
        if let Some(c) = row.iter().position(|v| !v.is_zero()) {
            pivot_of_col[c] = Some(r);
            pivot_cols.push(c);
        }
    }
    let mut out = Vec::new();
    for j in 0..ncols {
        if pivot_of_col[j].is_some() {
            continue;
        }
        let mut v = alloc::vec![F::zero(); ncols];
        v[j] = F::one();
        for &c in &pivot_cols {
            let r = pivot_of_col[c].unwrap();
            v[c] = matrix[r][j].neg();
        }
        out.push(v);
    }
    out
}

/// Plain Gauss-Jordan reduction to reduced row echelon form; works over
/// any field and doubles as the naive oracle the Bareiss path is checked
/// against.
pub fn gauss_jordan_rref<F: Field>(rows: &mut Vec<Vec<F>>) {
    if rows.is_empty() {
        return;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let delta = factor.mul(&rows[rank][c]);
                rows[r][c] = rows[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|c| !c.is_zero()));
}

/// Fraction-free (Bareiss) reduction for rational matrices: denominators
/// are cleared per row, forward elimination stays in integers with exact
/// divisions, and a final rational normalization pass produces the reduced
/// echelon form.
pub fn bareiss_rref(rows: &mut Vec<Vec<Rational>>) {
    if rows.is_empty() {
        return;
    }
    let ncols = rows[0].len();
    let mut int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();

    // forward fraction-free elimination
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..ncols {
        let Some(pivot) = (rank..int_rows.len()).find(|&r| !int_rows[r][col].is_zero()) else {
            continue;
        };
        int_rows.swap(rank, pivot);
        let p = int_rows[rank][col].clone();
        for r in rank + 1..int_rows.len() {
            let factor = int_rows[r][col].clone();
            if factor.is_zero() && p == prev {
                continue; // row is already exact under the scale-and-divide
            }
            for c in 0..ncols {
                let scaled = &int_rows[r][c] * &p - &factor * &int_rows[rank][c];
                let (q, rem) = scaled.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                int_rows[r][c] = q;
            }
        }
        prev = p;
        pivot_cols.push(col);
        rank += 1;
        if rank == int_rows.len() {
            break;
        }
    }
    int_rows.truncate(rank);

    // normalization pass: rational back-substitution to reduced form
    let mut reduced: Vec<Vec<Rational>> = int_rows
        .iter()
        .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
        .collect();
    for i in (0..rank).rev() {
        let col = pivot_cols[i];
        let inv = Field::inv(&reduced[i][col]).expect("nonzero pivot");
        for c in col..ncols {
            reduced[i][c] = reduced[i][c].mul(&inv);
        }
        for r in 0..i {
            if Field::is_zero(&reduced[r][col]) {
                continue;
            }
            let factor = reduced[r][col].clone();
            for c in col..ncols {
                let delta = factor.mul(&reduced[i][c]);
                reduced[r][c] = reduced[r][c].sub(&delta);
            }
        }
    }
    *rows = reduced;
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        if !Field::is_zero(v) {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut ints: Vec<BigInt> = row
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    // divide out the content to keep entries small
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in &mut ints {
            *v = &*v / &content;
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::orbit;
    use alloc::vec;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn parse(s: &str, d: usize) -> P {
        P::parse(s, d).unwrap()
    }

    #[test]
    fn span_reduce_scalar_multiples_collapse() {
        let piece = span_reduce(
            2,
            1,
            &[parse("x1 - x2", 2), parse("x2 - x1", 2)],
        )
        .unwrap();
        assert_eq!(piece.dim(), 1);
        assert_eq!(piece.basis()[0], parse("x1 - x2", 2));
    }

    #[test]
    fn span_reduce_orbit_of_paired_quadratic() {
        let f = parse("x1*x2 + x3*x4", 4);
        let piece = span_reduce(4, 2, &orbit(&f).unwrap()).unwrap();
        assert_eq!(piece.dim(), 3);
    }

    #[test]
    fn span_reduce_empty_input() {
        let piece = span_reduce::<Rational>(3, 2, &[]).unwrap();
        assert_eq!(piece.dim(), 0);
    }

    #[test]
    fn span_reduce_rejects_degree_mismatch() {
        let err = span_reduce(2, 2, &[parse("x1", 2)]);
        assert!(matches!(err, Err(Error::DegreeMismatch { expected: 2, found: 1 })));
    }

    #[test]
    fn span_reduce_is_idempotent() {
        let f = parse("x1*x2 + x3*x4", 4);
        let piece = span_reduce(4, 2, &orbit(&f).unwrap()).unwrap();
        let again = span_reduce(4, 2, piece.basis()).unwrap();
        assert_eq!(piece, again);
    }

    #[test]
    fn contains_paper_membership_example() {
        let f = parse("x1^3 - x2^3 + x1^2*x3 + x2*x3*x4", 4);
        let piece = span_reduce(4, 3, &orbit(&f).unwrap()).unwrap();
        let g = parse("x1*x2^2 + x1*x3*x4", 4);
        assert!(piece.contains(&g).unwrap());
    }

    #[test]
    fn contains_trivial_cases() {
        let piece = span_reduce(2, 2, &[parse("x1*x2", 2)]).unwrap();
        assert!(piece.contains(&P::zero(2)).unwrap());
        assert!(!piece.contains(&parse("x1^2", 2)).unwrap());
        assert!(matches!(
            piece.contains(&parse("x1", 2)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn graded_piece_of_monomial_pair() {
        // degree-4 multiples of x1^2*x2 and x1*x2^2: x1^3*x2, x1^2*x2^2, x1*x2^3
        let gens = [parse("x1^2*x2", 2), parse("x1*x2^2", 2)];
        let piece = graded_piece(2, &gens, 4).unwrap();
        assert_eq!(piece.dim(), 3);
        // independent divisibility oracle
        let oracle = Monomial::all_of_degree(2, 4)
            .into_iter()
            .filter(|m| {
                Monomial::new(vec![2, 1]).divides(m) || Monomial::new(vec![1, 2]).divides(m)
            })
            .count();
        assert_eq!(piece.dim(), oracle);
    }

    #[test]
    fn graded_piece_of_maximal_ideal() {
        let gens: Vec<P> = (1..=3).map(|i| P::var(3, i)).collect();
        for k in 1..=4 {
            let piece = graded_piece(3, &gens, k).unwrap();
            assert_eq!(piece.dim(), dim_full_degree(3, k));
        }
    }

    #[test]
    fn graded_piece_below_generators_is_empty() {
        let gens = [parse("x1^2*x2", 2)];
        assert_eq!(graded_piece(2, &gens, 2).unwrap().dim(), 0);
        assert_eq!(graded_piece(2, &gens, 0).unwrap().dim(), 0);
    }

    #[test]
    fn incremental_sweep_matches_direct_construction() {
        let gens = [parse("x1*x2 + x3*x4", 4), parse("x1^2 - x2^2", 4)];
        let pieces = graded_pieces_up_to(4, &gens, 6).unwrap();
        for (m, piece) in pieces.iter().enumerate() {
            let direct = graded_piece(4, &gens, m).unwrap();
            assert_eq!(piece, &direct, "degree {m}");
        }
    }

    #[test]
    fn ideal_equal_examples() {
        assert!(ideal_equal(2, &[parse("x1", 2)], &[parse("x1", 2)]).unwrap());
        assert!(!ideal_equal(2, &[parse("x1", 2)], &[parse("x2", 2)]).unwrap());
        // same ideal, different generators
        assert!(ideal_equal(
            2,
            &[parse("x1", 2), parse("x2", 2)],
            &[parse("x1 + x2", 2), parse("x1 - x2", 2)],
        )
        .unwrap());
        assert!(ideal_equal::<Rational>(2, &[], &[]).unwrap());
        assert!(!ideal_equal(2, &[parse("x1", 2)], &[]).unwrap());
    }

    #[test]
    fn intersect_order_type_examples() {
        let gens = [parse("x1^2", 2), parse("x1*x2", 2), parse("x2^2", 2)];
        let piece = span_reduce(2, 2, &gens).unwrap();
        let w = intersect_order_type(&piece, &Partition::new(vec![2])).unwrap();
        assert_eq!(w.dim(), 2);
        let w11 = intersect_order_type(&piece, &Partition::new(vec![1, 1])).unwrap();
        assert_eq!(w11.dim(), 1);

        // no basis monomial of the requested type
        let piece = span_reduce(2, 2, &[parse("x1*x2", 2)]).unwrap();
        let w = intersect_order_type(&piece, &Partition::new(vec![2])).unwrap();
        assert_eq!(w.dim(), 0);

        // full degree piece intersects R_a in all of R_a
        let full = GradedPiece::<Rational>::full(4, 3);
        for a in crate::combinatorics::partitions_of(3, 4) {
            let w = intersect_order_type(&full, &a).unwrap();
            assert_eq!(w.dim(), crate::combinatorics::dim_r_a(&a, 4));
        }
    }

    #[test]
    fn intersection_finds_hidden_combinations() {
        // x1^2 + x1*x2 and x1^2 - x1*x2 span contains x1^2 and x1*x2
        let piece = span_reduce(
            2,
            2,
            &[parse("x1^2 + x1*x2", 2), parse("x1^2 - x1*x2", 2)],
        )
        .unwrap();
        let w = intersect_order_type(&piece, &Partition::new(vec![2])).unwrap();
        assert_eq!(w.dim(), 1);
        assert_eq!(w.basis()[0], parse("x1^2", 2));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1usize..8, 1usize..8).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                proptest::collection::vec((-6i64..=6, 1i64..=4), c),
                r,
            )
            .prop_map(|rows| {
                rows.into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|(n, d)| Rational::new(n.into(), d.into()))
                            .collect()
                    })
                    .collect()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_naive_gauss(m in arb_matrix()) {
            let mut a = m.clone();
            let mut b = m;
            bareiss_rref(&mut a);
            gauss_jordan_rref(&mut b);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn bareiss_matches_naive_gauss_large() {
        // deterministic congruential fill, 50 x 200
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 13) as i64 - 6
        };
        let m: Vec<Vec<Rational>> = (0..50)
            .map(|_| (0..200).map(|_| Rational::from_integer(next().into())).collect())
            .collect();
        let mut a = m.clone();
        let mut b = m;
        bareiss_rref(&mut a);
        gauss_jordan_rref(&mut b);
        assert_eq!(a, b);
    }
}
