//! Normal rational curves over GF(q): the degree-n moment curve
//! { (1, x, …, x^n) : x ∈ F ∪ {∞} }, its Hasse-derivative osculating
//! subspaces, and k-nuclei.
//!
//! Every nucleus can be computed two ways: geometrically, by intersecting
//! all q+1 k-osculating subspaces ([`NrcSpec::nucleus_bruteforce`]), or
//! combinatorially from base-p digits ([`nucleus_basis_indices`],
//! [`nucleus_dim_by_digits`]). The digit formulas are exact when the field
//! is rich enough (q ≥ k+1); below that they are only a lower bound, which
//! the result structs flag explicitly.

use crate::base_p::{binom_mod_p, sigma, to_digits, to_u64, top_line, Prime};
use crate::gf::{Field, FieldElement};
use crate::lattice::IndexSet;
use crate::linalg::{rref, Matrix, Subspace};
use crate::rng::SplitMix64;

/// Inhomogeneous curve parameter: a field element or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    Finite(FieldElement),
    Infinity,
}

/// A curve point together with the parameter it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    pub parameter: Parameter,
    pub coords: Vec<FieldElement>,
}

/// A normal rational curve of degree n in PG(n, q).
#[derive(Debug, Clone)]
pub struct NrcSpec {
    n: usize,
    field: Field,
    /// C(r, c) mod p for r, c ≤ n, flattened row-major.
    binom_table: Vec<u64>,
}

/// Result of the digit-formula dimension computation for one k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NucleusDimFormula {
    /// Projective dimension Σ(R, n) − 1.
    pub dim: i64,
    /// The minimal cut R with T(R, n+1) ≤ k+1.
    pub r_position: u32,
    /// The matching upper cut Q = R − 1 (T(Q, n+1) > k+1).
    pub q_position: u32,
    /// At most one non-zero digit of n+1 in positions Q..R — always satisfied
    /// for the adjacent bracketing, recorded for the report.
    pub digit_condition_holds: bool,
    /// Whether q ≥ k+1 held, i.e. the formula is exact rather than a lower bound.
    pub in_hypothesis: bool,
}

pub const DEFAULT_ARC_SAMPLE_CAP: u64 = 200_000;

impl NrcSpec {
    pub fn new(n: usize, field: Field) -> NrcSpec {
        assert!(n >= 2, "a normal rational curve needs degree at least 2");
        let p = field.characteristic();
        let mut binom_table = Vec::with_capacity((n + 1) * (n + 1));
        for r in 0..=n as u64 {
            for c in 0..=n as u64 {
                binom_table.push(binom_mod_p(r, c, p));
            }
        }
        NrcSpec { n, field, binom_table }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn characteristic(&self) -> Prime {
        self.field.characteristic()
    }

    /// q ≥ n+2: the curve is a (q+1)-arc and the collineation group is full.
    pub fn is_arc_regime(&self) -> bool {
        self.q() >= self.n as u64 + 2
    }

    /// q ≥ k+1: the closed-form nucleus results for this k are exact.
    pub fn formula_applicable(&self, k: i64) -> bool {
        self.check_k(k);
        k < 0 || self.q() >= (k + 1) as u64
    }

    /// q ≥ n: the distinct-nuclei count applies.
    pub fn count_applicable(&self) -> bool {
        self.q() >= self.n as u64
    }

    fn check_k(&self, k: i64) {
        assert!(
            (-1..self.n as i64).contains(&k),
            "k must lie in -1..={}, got {k}",
            self.n - 1
        );
    }

    #[inline]
    fn binom(&self, r: usize, c: usize) -> u64 {
        self.binom_table[r * (self.n + 1) + c]
    }

    /// All q+1 points of the curve: one per field element plus infinity.
    pub fn curve_points(&self) -> Vec<CurvePoint> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.q() as usize + 1);
        for x in f.all_elements() {
            let mut coords = Vec::with_capacity(self.n + 1);
            let mut pw = f.one();
            for _ in 0..=self.n {
                coords.push(pw);
                pw = f.mul(pw, x);
            }
            out.push(CurvePoint { parameter: Parameter::Finite(x), coords });
        }
        let mut coords = vec![f.zero(); self.n + 1];
        coords[self.n] = f.one();
        out.push(CurvePoint { parameter: Parameter::Infinity, coords });
        out
    }

    /// The (n+1)×(n+1) matrix whose column c is the c-th Hasse-derivative
    /// point at parameter u: entry (r, c) = C(r, c)·u^(r−c). At infinity the
    /// columns are the reversed standard basis.
    pub fn derivative_matrix(&self, u: Parameter) -> Matrix {
        let f = &self.field;
        let n = self.n;
        let mut m = Matrix::zeros(f, n + 1, n + 1);
        match u {
            Parameter::Infinity => {
                for c in 0..=n {
                    m.set(n - c, c, f.one());
                }
            }
            Parameter::Finite(u) => {
                let mut powers = Vec::with_capacity(n + 1);
                let mut pw = f.one();
                for _ in 0..=n {
                    powers.push(pw);
                    pw = f.mul(pw, u);
                }
                for r in 0..=n {
                    for c in 0..=r {
                        let coef = self.binom(r, c);
                        if coef != 0 {
                            m.set(r, c, f.mul(f.from_int(coef), powers[r - c]));
                        }
                    }
                }
            }
        }
        m
    }

    /// Span of the first k+1 derivative points at u; k = −1 is the empty
    /// subspace. Projective dimension is exactly k (the matrix is regular).
    pub fn osculating_subspace(&self, u: Parameter, k: i64) -> Subspace {
        self.check_k(k);
        let f = &self.field;
        if k == -1 {
            return Subspace::empty(f, self.n + 1);
        }
        let m = self.derivative_matrix(u);
        let cols: Vec<Vec<FieldElement>> = (0..=(k as usize)).map(|c| m.col(c)).collect();
        let s = Subspace::span(f, &cols, self.n + 1);
        debug_assert_eq!(s.projective_dim(), k);
        s
    }

    /// All q+1 parameters, finite ones first.
    pub fn parameters(&self) -> Vec<Parameter> {
        let mut out: Vec<Parameter> =
            self.field.all_elements().into_iter().map(Parameter::Finite).collect();
        out.push(Parameter::Infinity);
        out
    }

    /// k-nucleus the hard way: fold-intersect the q+1 osculating subspaces,
    /// stopping early once the accumulator is empty.
    pub fn nucleus_bruteforce(&self, k: i64) -> Subspace {
        self.check_k(k);
        let f = &self.field;
        if k == -1 {
            return Subspace::empty(f, self.n + 1);
        }
        let mut acc: Option<Subspace> = None;
        for u in self.parameters() {
            let osc = self.osculating_subspace(u, k);
            acc = Some(match acc {
                None => osc,
                Some(cur) => Subspace::intersect(f, &cur, &osc),
            });
            if acc.as_ref().unwrap().is_empty() {
                break;
            }
        }
        acc.expect("a field has at least one element")
    }

    /// Base points spanning the k-nucleus, by the digit criterion.
    pub fn nucleus_basis_formula(&self, k: i64) -> IndexSet {
        self.check_k(k);
        nucleus_basis_indices(self.n as u64, self.characteristic(), k)
    }

    /// Closed-form nucleus dimension for this k, with the bracketing data.
    pub fn nucleus_dim_formula(&self, k: i64) -> NucleusDimFormula {
        self.check_k(k);
        let p = self.characteristic();
        let n = self.n as u64;
        let b = n + 1;
        let target = (k + 1) as u64;
        let blen = to_digits(b, p).len() as u32;
        let mut r_position = 0u32;
        while top_line(r_position, b, p) > target {
            r_position += 1;
            assert!(r_position <= blen, "T eventually reaches 0");
        }
        assert!(r_position >= 1, "k <= n-1 keeps T(0,b)=n+1 above k+1");
        let q_position = r_position - 1;
        let bd = to_digits(b, p);
        let nonzero_in_gap =
            (q_position..r_position).filter(|&s| bd.digit(s as usize) != 0).count();
        let dim = to_u64(&sigma(r_position, n, p)) as i64 - 1;
        NucleusDimFormula {
            dim,
            r_position,
            q_position,
            digit_condition_holds: nonzero_in_gap <= 1,
            in_hypothesis: self.formula_applicable(k),
        }
    }

    /// Number of distinct nuclei (empty one included): non-zero digits of
    /// n+1 in base p. Exact for q ≥ n.
    pub fn count_nuclei(&self) -> u32 {
        count_nuclei(self.n as u64, self.characteristic())
    }

    /// Index i with the smallest non-empty nucleus equal to the single base
    /// point at p^i − 1, when n = 2p^i − 2; `None` otherwise.
    pub fn point_nucleus_index(&self) -> Option<u64> {
        point_nucleus_index(self.n as u64, self.characteristic())
    }

    /// Every n+1 of the q+1 curve points linearly independent? Exhaustive
    /// when the number of (n+1)-subsets is at most the cap, sampled with a
    /// fixed seed otherwise.
    pub fn arc_check(&self) -> bool {
        self.arc_check_with_cap(DEFAULT_ARC_SAMPLE_CAP)
    }

    pub fn arc_check_with_cap(&self, cap: u64) -> bool {
        let points: Vec<Vec<FieldElement>> =
            self.curve_points().into_iter().map(|p| p.coords).collect();
        all_subsets_independent(&self.field, &points, self.n + 1, cap)
    }
}

/// D^(k) applied to a coefficient vector (constant term first): the
/// characteristic-safe divided-power derivative with D^(k) X^r = C(r,k) X^(r−k).
pub fn hasse_derivative(f: &Field, k: usize, poly: &[FieldElement]) -> Vec<FieldElement> {
    let p = f.characteristic();
    if poly.len() <= k {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(poly.len() - k);
    for r in k..poly.len() {
        let coef = binom_mod_p(r as u64, k as u64, p);
        out.push(f.mul(f.from_int(coef), poly[r]));
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// j qualifies for the k-nucleus basis when C(r, j) vanishes mod p for every
/// r from k+1 up to n.
pub fn nucleus_basis_indices(n: u64, p: Prime, k: i64) -> IndexSet {
    assert!((-1..n as i64).contains(&k));
    let mut members = Vec::new();
    'next: for j in 0..=n {
        let start = (k + 1) as u64;
        for r in start..=n {
            if binom_mod_p(r, j, p) != 0 {
                continue 'next;
            }
        }
        members.push(j);
    }
    IndexSet::new(n, members)
}

/// Field-free form of the dimension formula: Σ(R, n) − 1 with R the minimal
/// cut where the top line of n+1 drops to at most k+1.
pub fn nucleus_dim_by_digits(n: u64, p: Prime, k: i64) -> i64 {
    assert!((-1..n as i64).contains(&k));
    let b = n + 1;
    let target = (k + 1) as u64;
    let mut r = 0u32;
    while top_line(r, b, p) > target {
        r += 1;
    }
    to_u64(&sigma(r, n, p)) as i64 - 1
}

pub fn count_nuclei(n: u64, p: Prime) -> u32 {
    let bd = to_digits(n + 1, p);
    (0..bd.len()).filter(|&s| bd.digit(s) != 0).count() as u32
}

pub fn point_nucleus_index(n: u64, p: Prime) -> Option<u64> {
    let mut pw = p.get();
    loop {
        let candidate = 2 * pw - 2;
        if candidate == n && n >= 2 {
            return Some(pw - 1);
        }
        if candidate > n {
            return None;
        }
        pw *= p.get();
    }
}

/// Rank test over all (or a fixed-seed sample of) size-k subsets of the
/// given points.
pub fn all_subsets_independent(
    f: &Field,
    points: &[Vec<FieldElement>],
    k: usize,
    cap: u64,
) -> bool {
    let n_points = points.len();
    if k > n_points {
        return true;
    }
    let total = count_combinations(n_points as u64, k as u64);
    let full_rank = |chosen: &[usize]| -> bool {
        let rows: Vec<Vec<FieldElement>> = chosen.iter().map(|&i| points[i].clone()).collect();
        let (_, rank) = rref(f, &Matrix::from_rows(f, &rows));
        rank == k
    };
    match total {
        Some(t) if t <= cap => {
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                if !full_rank(&idx) {
                    return false;
                }
                // lexicographic successor
                let mut i = k;
                let advanced = loop {
                    if i == 0 {
                        break false;
                    }
                    i -= 1;
                    if idx[i] != i + n_points - k {
                        break true;
                    }
                };
                if !advanced {
                    return true;
                }
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        _ => {
            let mut rng = SplitMix64::new(0x41524353);
            for _ in 0..cap {
                // Floyd's distinct sampler
                let mut chosen: Vec<usize> = Vec::with_capacity(k);
                for j in (n_points - k)..n_points {
                    let t = rng.below(j as u64 + 1) as usize;
                    if chosen.contains(&t) {
                        chosen.push(j);
                    } else {
                        chosen.push(t);
                    }
                }
                if !full_rank(&chosen) {
                    return false;
                }
            }
            true
        }
    }
}

fn count_combinations(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn unit_vec(f: &Field, n: usize, at: usize) -> Vec<FieldElement> {
        let mut v = vec![f.zero(); n];
        v[at] = f.one();
        v
    }

    #[test]
    fn curve_points_gf2_n2() {
        let f = Field::new(2, 1).unwrap();
        let s = NrcSpec::new(2, f.clone());
        let pts = s.curve_points();
        assert_eq!(pts.len(), 3);
        let got: Vec<Vec<u64>> = pts
            .iter()
            .map(|pt| pt.coords.iter().map(|c| c.repr()).collect())
            .collect();
        assert_eq!(got, vec![vec![1, 0, 0], vec![1, 1, 1], vec![0, 0, 1]]);
    }

    #[test]
    fn curve_points_cardinality_and_infinity() {
        let f = Field::new(2, 2).unwrap();
        let s = NrcSpec::new(2, f.clone());
        let pts = s.curve_points();
        assert_eq!(pts.len(), 5);
        let inf = pts.last().unwrap();
        assert_eq!(inf.parameter, Parameter::Infinity);
        assert_eq!(inf.coords, vec![f.zero(), f.zero(), f.one()]);
        let set: BTreeSet<_> = pts.iter().map(|p| p.coords.clone()).collect();
        assert_eq!(set.len(), 5);
    }

    #[test]
    fn hasse_derivative_examples() {
        let f = Field::new(2, 1).unwrap();
        // D^(1)(X^2) over GF(2): coefficient C(2,1) = 2 vanishes
        let d = hasse_derivative(&f, 1, &[f.zero(), f.zero(), f.one()]);
        assert!(d.iter().all(|c| c.is_zero()));

        // D^(0) is the identity
        let poly = vec![f.one(), f.one(), f.zero(), f.one()];
        assert_eq!(hasse_derivative(&f, 0, &poly), poly);

        // D^(2)(X^3) = 3X: zero over GF(3), X over GF(2)
        let f3 = Field::new(3, 1).unwrap();
        let x3 = vec![f3.zero(), f3.zero(), f3.zero(), f3.one()];
        let d = hasse_derivative(&f3, 2, &x3);
        assert!(d.iter().all(|c| c.is_zero()));
        let x3 = vec![f.zero(), f.zero(), f.zero(), f.one()];
        let d = hasse_derivative(&f, 2, &x3);
        assert_eq!(d, vec![f.zero(), f.one()]);
    }

    #[test]
    fn derivative_matrix_at_zero_is_identity() {
        let f = Field::new(3, 2).unwrap();
        let s = NrcSpec::new(4, f.clone());
        let m = s.derivative_matrix(Parameter::Finite(f.zero()));
        assert_eq!(m, Matrix::identity(&f, 5));
    }

    #[test]
    fn derivative_matrix_n2_gf2_at_one() {
        let f = Field::new(2, 1).unwrap();
        let s = NrcSpec::new(2, f.clone());
        let m = s.derivative_matrix(Parameter::Finite(f.one()));
        let rows: Vec<Vec<u64>> =
            (0..3).map(|r| m.row(r).iter().map(|c| c.repr()).collect()).collect();
        assert_eq!(rows, vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1]]);
    }

    /// Column k of the matrix is the k-th Hasse derivative of the coordinate
    /// monomials evaluated at u.
    #[test]
    fn derivative_matrix_columns_are_hasse_derivatives() {
        let f = Field::new(3, 2).unwrap();
        let n = 4usize;
        let s = NrcSpec::new(n, f.clone());
        for x in f.all_elements() {
            let m = s.derivative_matrix(Parameter::Finite(x));
            for k in 0..=n {
                for r in 0..=n {
                    // coordinate r of the curve is the monomial X^r
                    let mut monomial = vec![f.zero(); r + 1];
                    monomial[r] = f.one();
                    let deriv = hasse_derivative(&f, k, &monomial);
                    let mut value = f.zero();
                    let mut pw = f.one();
                    for c in deriv {
                        value = f.add(value, f.mul(c, pw));
                        pw = f.mul(pw, x);
                    }
                    assert_eq!(m.get(r, k), value, "entry ({r},{k}) at x={x:?}");
                }
            }
        }
    }

    #[test]
    fn derivative_matrix_regular_for_all_parameters() {
        for (pv, e, n) in [(2u64, 3u32, 4usize), (3, 2, 5), (5, 1, 3)] {
            let f = Field::new(pv, e).unwrap();
            let s = NrcSpec::new(n, f.clone());
            for u in s.parameters() {
                let m = s.derivative_matrix(u);
                let (_, rank) = rref(&f, &m);
                assert_eq!(rank, n + 1, "u={u:?}");
            }
        }
    }

    #[test]
    fn osculating_subspace_basics() {
        let f = Field::new(2, 2).unwrap();
        let s = NrcSpec::new(2, f.clone());
        for u in s.parameters() {
            assert!(s.osculating_subspace(u, -1).is_empty());
            let point = s.osculating_subspace(u, 0);
            assert_eq!(point.projective_dim(), 0);
            let tangent = s.osculating_subspace(u, 1);
            assert_eq!(tangent.projective_dim(), 1);
        }
        // five distinct tangent lines
        let tangents: BTreeSet<Subspace> =
            s.parameters().into_iter().map(|u| s.osculating_subspace(u, 1)).collect();
        assert_eq!(tangents.len(), 5);
    }

    #[test]
    fn conic_nucleus_gf4() {
        let f = Field::new(2, 2).unwrap();
        let s = NrcSpec::new(2, f.clone());
        let nucleus = s.nucleus_bruteforce(1);
        let expected = Subspace::span(&f, &[unit_vec(&f, 3, 1)], 3);
        assert_eq!(nucleus, expected);
        assert!(s.nucleus_bruteforce(-1).is_empty());
    }

    #[test]
    fn quartic_nucleus_gf8_dim_two() {
        let f = Field::new(2, 3).unwrap();
        let s = NrcSpec::new(4, f);
        // 4 = ⟨100⟩ in base 2, so n − Π(n_σ+1) = 4 − 2 = 2
        assert_eq!(s.nucleus_bruteforce(3).projective_dim(), 2);
        assert_eq!(s.nucleus_dim_formula(3).dim, 2);
    }

    #[test]
    fn nucleus_basis_examples() {
        assert_eq!(nucleus_basis_indices(2, p(2), 1).members(), &[1]);
        for k in -1..3i64 {
            assert!(nucleus_basis_indices(3, p(2), k).members().is_empty(), "k={k}");
        }
        assert_eq!(nucleus_basis_indices(50, p(2), 31).members().len(), 13);
    }

    #[test]
    fn nucleus_dim_table_n50() {
        let f = Field::new(2, 1).unwrap();
        let s = NrcSpec::new(50, f);
        for k in -1..=49i64 {
            let expected = match k {
                -1..=30 => -1,
                31..=46 => 12,
                47 | 48 => 38,
                _ => 42,
            };
            assert_eq!(s.nucleus_dim_formula(k).dim, expected, "k={k}");
            assert_eq!(nucleus_dim_by_digits(50, p(2), k), expected, "k={k}");
        }
    }

    #[test]
    fn top_k_dim_is_digit_product_defect() {
        // k = n−1 specializes to n − Π(n_σ + 1)
        for pv in [2u64, 3, 5] {
            for n in 2..60u64 {
                let digits = to_digits(n, p(pv));
                let prod: i64 =
                    (0..digits.len()).map(|s| digits.digit(s) as i64 + 1).product();
                assert_eq!(
                    nucleus_dim_by_digits(n, p(pv), n as i64 - 1),
                    n as i64 - prod,
                    "n={n} p={pv}"
                );
            }
        }
    }

    #[test]
    fn all_nuclei_empty_pattern() {
        let f = Field::new(2, 3).unwrap();
        let s = NrcSpec::new(3, f);
        for k in -1..3i64 {
            assert_eq!(s.nucleus_bruteforce(k).projective_dim(), -1);
            assert_eq!(s.nucleus_dim_formula(k).dim, -1);
        }
        assert_eq!(s.count_nuclei(), 1);
    }

    #[test]
    fn count_nuclei_examples() {
        assert_eq!(count_nuclei(50, p(2)), 4);
        assert_eq!(count_nuclei(2, p(2)), 2);
        // single non-zero digit of n+1
        assert_eq!(count_nuclei(8, p(3)), 1);
        assert_eq!(count_nuclei(15, p(2)), 1);
    }

    #[test]
    fn point_nucleus_examples() {
        assert_eq!(point_nucleus_index(2, p(2)), Some(1));
        assert_eq!(point_nucleus_index(6, p(2)), Some(3));
        assert_eq!(point_nucleus_index(5, p(2)), None);
        assert_eq!(point_nucleus_index(4, p(3)), Some(2));
    }

    /// n = 6 = 2·2² − 2 over GF(16): the smallest non-empty nucleus is the
    /// single base point at index 3.
    #[test]
    fn point_nucleus_bruteforce_n6() {
        let f = Field::new(2, 4).unwrap();
        let s = NrcSpec::new(6, f.clone());
        let mut smallest: Option<Subspace> = None;
        for k in -1..6i64 {
            let nuc = s.nucleus_bruteforce(k);
            if !nuc.is_empty() && smallest.as_ref().map_or(true, |s| nuc.rank() < s.rank()) {
                smallest = Some(nuc);
            }
        }
        let expected = Subspace::span(&f, &[unit_vec(&f, 7, 3)], 7);
        assert_eq!(smallest, Some(expected));
    }

    #[test]
    fn nuclei_nested_and_counted() {
        for (pv, n) in [(2u64, 4usize), (2, 6), (3, 5), (3, 7), (5, 6)] {
            let mut e = 1;
            while pv.pow(e) < n as u64 + 2 {
                e += 1;
            }
            let f = Field::new(pv, e).unwrap();
            let s = NrcSpec::new(n, f.clone());
            let mut prev: Option<Subspace> = None;
            let mut distinct: BTreeSet<Subspace> = BTreeSet::new();
            for k in -1..n as i64 {
                let nuc = s.nucleus_bruteforce(k);
                if let Some(prev) = &prev {
                    assert!(prev.leq(&f, &nuc), "nuclei must be nested at k={k}");
                }
                distinct.insert(nuc.clone());
                prev = Some(nuc);
            }
            assert_eq!(distinct.len() as u32, s.count_nuclei(), "p={pv} n={n}");
        }
    }

    /// Formula vs oracle on a small grid; the acceptance suite runs the full one.
    #[test]
    fn formula_matches_bruteforce_small_grid() {
        for pv in [2u64, 3, 5] {
            for n in 2..=6usize {
                let mut e = 1;
                while pv.pow(e) < n as u64 + 2 {
                    e += 1;
                }
                let f = Field::new(pv, e).unwrap();
                let s = NrcSpec::new(n, f.clone());
                for k in -1..n as i64 {
                    let bf = s.nucleus_bruteforce(k);
                    let formula = s.nucleus_dim_formula(k);
                    assert!(formula.in_hypothesis);
                    assert_eq!(bf.projective_dim(), formula.dim, "p={pv} n={n} k={k}");
                    let basis = s.nucleus_basis_formula(k);
                    let rows: Vec<Vec<FieldElement>> = basis
                        .members()
                        .iter()
                        .map(|&j| unit_vec(&f, n + 1, j as usize))
                        .collect();
                    let span = Subspace::span(&f, &rows, n + 1);
                    assert_eq!(bf, span, "p={pv} n={n} k={k}");
                }
            }
        }
    }

    /// Below the richness bound the formula is only a lower bound.
    #[test]
    fn small_field_formula_is_lower_bound() {
        for (pv, e, n) in [(2u64, 1u32, 4usize), (2, 2, 5), (3, 1, 5)] {
            let f = Field::new(pv, e).unwrap();
            let s = NrcSpec::new(n, f);
            for k in -1..n as i64 {
                let formula = s.nucleus_dim_formula(k);
                let bf = s.nucleus_bruteforce(k).projective_dim();
                if !formula.in_hypothesis {
                    assert!(bf >= formula.dim, "p={pv} e={e} n={n} k={k}");
                } else {
                    assert_eq!(bf, formula.dim, "p={pv} e={e} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn arc_checks() {
        // (q+1)-arc in the rich regime
        let s = NrcSpec::new(2, Field::new(2, 2).unwrap());
        assert!(s.arc_check());
        // q = n+1: the curve is a frame, still in general position
        let s = NrcSpec::new(3, Field::new(2, 2).unwrap());
        assert!(s.arc_check());
        // triangle in PG(2, 2)
        let s = NrcSpec::new(2, Field::new(2, 1).unwrap());
        assert!(s.arc_check());
    }

    /// Conic plus nucleus point in even characteristic is a (q+2)-arc.
    #[test]
    fn conic_plus_nucleus_is_arc() {
        for e in [2u32, 3] {
            let f = Field::new(2, e).unwrap();
            let s = NrcSpec::new(2, f.clone());
            let nucleus = s.nucleus_bruteforce(1);
            assert_eq!(nucleus.rank(), 1);
            let mut pts: Vec<Vec<FieldElement>> =
                s.curve_points().into_iter().map(|p| p.coords).collect();
            pts.push(nucleus.basis().row(0).to_vec());
            assert!(all_subsets_independent(&f, &pts, 3, DEFAULT_ARC_SAMPLE_CAP));
        }
    }

    #[test]
    #[should_panic(expected = "k must lie in")]
    fn k_out_of_range_rejected() {
        let s = NrcSpec::new(2, Field::new(2, 1).unwrap());
        s.nucleus_bruteforce(2);
    }

    #[test]
    fn sampled_arc_check_path() {
        // force the sampled path with a tiny cap; a real arc still passes
        let f = Field::new(2, 3).unwrap();
        let s = NrcSpec::new(2, f);
        assert!(s.arc_check_with_cap(10));
    }

    /// The dependent triple sits at the very last combination in
    /// lexicographic order, so this fails only if the walk is complete.
    #[test]
    fn subset_walk_reaches_last_combination() {
        let f = Field::new(2, 1).unwrap();
        let e = |at: usize| unit_vec(&f, 3, at);
        let mut sum12 = e(1);
        for (a, b) in sum12.iter_mut().zip(e(2)) {
            *a = f.add(*a, b);
        }
        let pts = vec![e(0), e(1), e(2), sum12];
        assert!(!all_subsets_independent(&f, &pts, 3, 1000));
        // every proper prefix of triples is fine
        assert!(all_subsets_independent(&f, &pts[..3], 3, 1000));
    }

    #[test]
    fn sampled_path_detects_degenerate_sets() {
        let f = Field::new(3, 1).unwrap();
        let v = vec![f.one(), f.one(), f.one()];
        let pts = vec![v.clone(), v.clone(), v.clone(), v];
        // C(4,2) = 6 > cap forces sampling; every pair is dependent
        assert!(!all_subsets_independent(&f, &pts, 2, 5));
    }
}
