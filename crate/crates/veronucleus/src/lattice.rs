//! The lattice of invariant subspaces of a normal rational curve.
//!
//! For rich enough fields every invariant subspace is a span of base points
//! F·c_λ, so subspaces become index sets Λ ⊆ {0,…,n} closed under the
//! reversal map Ψ and the digit-domination operator Ω. The irreducible ones
//! are enumerated through interval families on the base-p digits of b = n+1;
//! closing the irreducibles under union yields the whole lattice.
//!
//! Two independent oracles keep the enumeration honest: a 2^(n+1) subset
//! scan for the closure conditions ([`closure_bruteforce`]), and the action
//! of symmetric-power collineation matrices on coordinate spans
//! ([`invariance_oracle`]).

use crate::base_p::{binom_mod_p, to_digits, Digits, Prime};
use crate::gf::{Field, FieldElement};
use crate::linalg::{Matrix, Subspace};
use crate::nrc::nucleus_basis_indices;
use std::collections::{BTreeMap, BTreeSet};

/// A subset of {0,…,n} naming base points; the carrier of lattice nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: u64,
    members: Vec<u64>,
}

impl IndexSet {
    pub fn new(n: u64, members: impl IntoIterator<Item = u64>) -> IndexSet {
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        assert!(members.last().is_none_or(|&m| m <= n), "index above n");
        IndexSet { n, members }
    }

    pub fn empty(n: u64) -> IndexSet {
        IndexSet { n, members: Vec::new() }
    }

    pub fn full(n: u64) -> IndexSet {
        IndexSet { n, members: (0..=n).collect() }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        assert_eq!(self.n, other.n, "mismatched ambient degree");
        IndexSet::new(self.n, self.members.iter().chain(other.members.iter()).copied())
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        assert_eq!(self.n, other.n);
        self.members.iter().all(|&j| other.contains(j))
    }

    /// Coordinate span of the member base points.
    pub fn span(&self, f: &Field) -> Subspace {
        let len = self.n as usize + 1;
        let rows: Vec<Vec<FieldElement>> = self
            .members
            .iter()
            .map(|&j| {
                let mut v = vec![f.zero(); len];
                v[j as usize] = f.one();
                v
            })
            .collect();
        Subspace::span(f, &rows, len)
    }
}

/// Ω(j) = { m ≤ n : C(m, j) ≢ 0 mod p }: by Lucas these are exactly the m
/// whose base-p digits dominate those of j. Arguments above n give the empty
/// set, which is how values of the digit machinery past n are absorbed.
pub fn omega(j: u64, n: u64, p: Prime) -> IndexSet {
    IndexSet::new(n, (0..=n).filter(|&m| binom_mod_p(m, j, p) != 0))
}

/// Ω extended to sets: union of Ω over the members.
pub fn omega_set(js: &IndexSet, p: Prime) -> IndexSet {
    let mut acc = IndexSet::empty(js.n);
    for &j in js.members() {
        acc = acc.union(&omega(j, js.n, p));
    }
    acc
}

/// Ψ(J) = J ∪ { n − j : j ∈ J }: closure under the reversal collineation.
pub fn psi_closure(js: &IndexSet) -> IndexSet {
    let n = js.n;
    IndexSet::new(n, js.members().iter().flat_map(|&j| [j, n - j]))
}

/// V(i, b): the digits of b strictly below position i.
pub fn v_truncate(i: u32, b: u64, p: Prime) -> u64 {
    let bd = to_digits(b, p);
    let mut acc = 0u64;
    let mut pw = 1u64;
    for sigma in 0..bd.len().min(i as usize) {
        acc += bd.digit(sigma) * pw;
        pw = pw.saturating_mul(p.get());
    }
    acc
}

/// Half-open digit-position interval [lo, hi).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("interval [{lo},{hi}) is empty or reversed")]
    Degenerate { lo: usize, hi: usize },
    #[error("interval [{lo},{hi}) exceeds the cut {cut}")]
    BeyondCut { lo: usize, hi: usize, cut: u32 },
    #[error("intervals must be separated by at least one position")]
    Overlap,
    #[error("digit of b at position {pos} violates the boundary condition")]
    Digit { pos: usize },
}

/// A cut position together with separated digit intervals of b = n+1:
/// each interval [lo, hi) must satisfy hi ≤ cut−1, b_lo > 0, b_hi < p−1,
/// and successive intervals must leave a gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily {
    cut: u32,
    intervals: Vec<Interval>,
    b: u64,
    p: Prime,
}

/// One admissible choice of sub-runs inside the intervals of a family,
/// along with the modified digit value it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TVariant {
    /// Chosen positions per interval (possibly empty).
    pub subsets: Vec<Vec<usize>>,
    /// V(T_1, …, T_L; i, b).
    pub value: u64,
}

/// Splits a sorted position set into maximal runs [lo, hi).
fn maximal_runs(positions: &[usize]) -> Vec<Interval> {
    let mut runs = Vec::new();
    let mut iter = positions.iter().copied();
    let Some(first) = iter.next() else { return runs };
    let (mut lo, mut prev) = (first, first);
    for pos in iter {
        if pos == prev + 1 {
            prev = pos;
        } else {
            runs.push(Interval { lo, hi: prev + 1 });
            lo = pos;
            prev = pos;
        }
    }
    runs.push(Interval { lo, hi: prev + 1 });
    runs
}

impl IntervalFamily {
    pub fn new(
        cut: u32,
        intervals: Vec<Interval>,
        b: u64,
        p: Prime,
    ) -> Result<IntervalFamily, FamilyError> {
        let bd = to_digits(b, p);
        let mut prev_hi: Option<usize> = None;
        for iv in &intervals {
            if iv.hi <= iv.lo {
                return Err(FamilyError::Degenerate { lo: iv.lo, hi: iv.hi });
            }
            if cut == 0 || iv.hi > cut as usize - 1 {
                return Err(FamilyError::BeyondCut { lo: iv.lo, hi: iv.hi, cut });
            }
            if let Some(prev) = prev_hi {
                if iv.lo <= prev {
                    return Err(FamilyError::Overlap);
                }
            }
            check_run_digits(iv, &bd, p)?;
            prev_hi = Some(iv.hi);
        }
        Ok(IntervalFamily { cut, intervals, b, p })
    }

    pub fn cut(&self) -> u32 {
        self.cut
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// The fully modified value: every interval raises the digit at its hi
    /// end by one and zeroes the digits it covers.
    pub fn v_modified(&self) -> u64 {
        apply_runs(self.cut, &self.intervals, self.b, self.p)
    }

    /// All tuples of admissible sub-runs: each interval contributes any
    /// subset of its positions whose maximal runs individually satisfy the
    /// digit boundary conditions (the empty subset included).
    pub fn t_variants(&self) -> Vec<TVariant> {
        let bd = to_digits(self.b, self.p);
        let per_interval: Vec<Vec<Vec<usize>>> = self
            .intervals
            .iter()
            .map(|iv| {
                let width = iv.hi - iv.lo;
                assert!(width <= 24, "interval too wide to enumerate");
                let mut choices = Vec::new();
                'mask: for mask in 0u32..(1 << width) {
                    let positions: Vec<usize> =
                        (0..width).filter(|&k| mask >> k & 1 == 1).map(|k| iv.lo + k).collect();
                    for run in maximal_runs(&positions) {
                        if check_run_digits(&run, &bd, self.p).is_err() {
                            continue 'mask;
                        }
                    }
                    choices.push(positions);
                }
                choices
            })
            .collect();

        let mut out = Vec::new();
        let mut current: Vec<Vec<usize>> = Vec::new();
        cartesian(&per_interval, &mut current, &mut out);
        out.into_iter()
            .map(|subsets| {
                let runs: Vec<Interval> =
                    subsets.iter().flat_map(|s| maximal_runs(s)).collect();
                let value = apply_runs(self.cut, &runs, self.b, self.p);
                TVariant { subsets, value }
            })
            .collect()
    }

    /// Λ(I_1, …, I_L; i, b): union of Ω over the values of all variants.
    /// The result is checked to be Ω- and Ψ-closed.
    pub fn lambda_set(&self) -> IndexSet {
        let n = self.b - 1;
        let mut acc = IndexSet::empty(n);
        for variant in self.t_variants() {
            acc = acc.union(&omega(variant.value, n, self.p));
        }
        assert!(is_closed(&acc, self.p), "lambda sets are closed by construction");
        acc
    }

    /// Descriptor for reports: (cut, interval bounds).
    pub fn descriptor(&self) -> FamilyDescriptor {
        FamilyDescriptor {
            cut: self.cut,
            intervals: self.intervals.iter().map(|iv| (iv.lo, iv.hi)).collect(),
        }
    }
}

fn check_run_digits(iv: &Interval, bd: &Digits, p: Prime) -> Result<(), FamilyError> {
    if bd.digit(iv.hi) >= p.get() - 1 {
        return Err(FamilyError::Digit { pos: iv.hi });
    }
    if bd.digit(iv.lo) == 0 {
        return Err(FamilyError::Digit { pos: iv.lo });
    }
    Ok(())
}

/// Digits of V(cut, b) with each run bumped at its hi end and zeroed inside.
/// Runs never collide: they are separated and their carries stay single-digit
/// because b_hi < p−1.
fn apply_runs(cut: u32, runs: &[Interval], b: u64, p: Prime) -> u64 {
    let base = v_truncate(cut, b, p);
    let mut digits: Vec<u64> = to_digits(base, p).as_slice().to_vec();
    let max_pos = runs.iter().map(|r| r.hi).max().unwrap_or(0);
    if digits.len() <= max_pos {
        digits.resize(max_pos + 1, 0);
    }
    for run in runs {
        digits[run.hi] += 1;
        debug_assert!(digits[run.hi] < p.get());
        for d in digits[run.lo..run.hi].iter_mut() {
            *d = 0;
        }
    }
    Digits::from_digits(&digits, p)
}

fn cartesian<T: Clone>(per: &[Vec<T>], current: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if current.len() == per.len() {
        out.push(current.clone());
        return;
    }
    for choice in &per[current.len()] {
        current.push(choice.clone());
        cartesian(per, current, out);
        current.pop();
    }
}

/// Is the set closed under both Ψ and Ω?
pub fn is_closed(set: &IndexSet, p: Prime) -> bool {
    psi_closure(set).is_subset_of(set) && omega_set(set, p).is_subset_of(set)
}

/// Smallest Ψ- and Ω-closed superset.
pub fn close(set: &IndexSet, p: Prime) -> IndexSet {
    let mut acc = set.clone();
    loop {
        let next = omega_set(&psi_closure(&acc), p);
        let next = acc.union(&next);
        if next == acc {
            return acc;
        }
        acc = next;
    }
}

/// Provenance of an irreducible node: the cut and interval bounds that
/// produced it (several descriptors may yield the same set).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct FamilyDescriptor {
    pub cut: u32,
    pub intervals: Vec<(usize, usize)>,
}

/// All valid interval families at every cut 0..=digit-length of b = n+1,
/// with the Λ set of each; deduplicated by the resulting set.
pub fn irreducible_descriptors(
    n: u64,
    p: Prime,
) -> BTreeMap<IndexSet, Vec<FamilyDescriptor>> {
    let b = n + 1;
    let bd = to_digits(b, p);
    let mut out: BTreeMap<IndexSet, Vec<FamilyDescriptor>> = BTreeMap::new();
    for cut in 0..=bd.len() as u32 {
        for family in families_at_cut(cut, b, p) {
            let lambda = family.lambda_set();
            out.entry(lambda).or_default().push(family.descriptor());
        }
    }
    out
}

/// The distinct irreducible index sets.
pub fn enumerate_irreducibles(n: u64, p: Prime) -> BTreeSet<IndexSet> {
    irreducible_descriptors(n, p).into_keys().collect()
}

/// Every valid family at one cut: ordered separated intervals with the digit
/// boundary conditions, the empty family included.
fn families_at_cut(cut: u32, b: u64, p: Prime) -> Vec<IntervalFamily> {
    let bd = to_digits(b, p);
    let mut out = Vec::new();
    let mut stack: Vec<Interval> = Vec::new();
    fn rec(
        min_lo: usize,
        cut: u32,
        bd: &Digits,
        p: Prime,
        b: u64,
        stack: &mut Vec<Interval>,
        out: &mut Vec<IntervalFamily>,
    ) {
        out.push(
            IntervalFamily::new(cut, stack.clone(), b, p)
                .expect("generated families are valid by construction"),
        );
        if cut == 0 {
            return;
        }
        let max_hi = cut as usize - 1;
        for lo in min_lo..max_hi {
            if bd.digit(lo) == 0 {
                continue;
            }
            for hi in (lo + 1)..=max_hi {
                if bd.digit(hi) < p.get() - 1 {
                    stack.push(Interval { lo, hi });
                    rec(hi + 1, cut, bd, p, b, stack, out);
                    stack.pop();
                }
            }
        }
    }
    rec(0, cut, &bd, p, b, &mut stack, &mut out);
    out
}

/// One node of the invariant-subspace lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeNode {
    pub set: IndexSet,
    /// Not a union of strictly smaller nodes (the bottom counts as
    /// irreducible: there is nothing below it to span it).
    pub irreducible: bool,
    /// Equals some k-nucleus basis.
    pub nucleus: bool,
    /// Interval-family descriptors that generated the set, if any.
    pub descriptors: Vec<FamilyDescriptor>,
}

/// The full lattice: nodes sorted by (size, members), cover edges of the
/// inclusion order, plus the flags of each node.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub n: u64,
    pub p: Prime,
    pub nodes: Vec<LatticeNode>,
    /// (lower, upper) pairs of node indices forming the Hasse covers.
    pub cover_edges: Vec<(usize, usize)>,
    /// True if a union of nodes ever failed the closure assertion and had to
    /// be re-closed; the digit machinery keeps this false.
    pub reclosure_used: bool,
}

/// Closes the irreducible sets under pairwise union and assembles the
/// lattice with cover edges and node flags.
pub fn build_lattice(n: u64, p: Prime) -> Lattice {
    let descriptors = irreducible_descriptors(n, p);
    build_lattice_from(n, p, descriptors)
}

pub fn build_lattice_from(
    n: u64,
    p: Prime,
    descriptors: BTreeMap<IndexSet, Vec<FamilyDescriptor>>,
) -> Lattice {
    let mut reclosure_used = false;
    let mut sets: BTreeSet<IndexSet> = descriptors.keys().cloned().collect();
    sets.insert(IndexSet::empty(n));
    loop {
        let snapshot: Vec<IndexSet> = sets.iter().cloned().collect();
        let mut grew = false;
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let mut u = snapshot[i].union(&snapshot[j]);
                if !is_closed(&u, p) {
                    // guard on a property the digit machinery implies
                    reclosure_used = true;
                    u = close(&u, p);
                }
                if sets.insert(u) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let mut ordered: Vec<IndexSet> = sets.into_iter().collect();
    ordered.sort_by_key(|s| (s.len(), s.members().to_vec()));

    // distinct nucleus bases over all k
    let mut nucleus_sets: BTreeSet<IndexSet> = BTreeSet::new();
    for k in -1..n as i64 {
        nucleus_sets.insert(nucleus_basis_indices(n, p, k));
    }

    let nodes: Vec<LatticeNode> = ordered
        .iter()
        .map(|set| {
            let strictly_smaller: Vec<&IndexSet> = ordered
                .iter()
                .filter(|o| o.len() < set.len() && o.is_subset_of(set))
                .collect();
            let union_of_smaller = strictly_smaller
                .iter()
                .fold(IndexSet::empty(n), |acc, o| acc.union(o));
            let irreducible = strictly_smaller.is_empty() || union_of_smaller != *set;
            LatticeNode {
                set: set.clone(),
                irreducible,
                nucleus: nucleus_sets.contains(set),
                descriptors: descriptors.get(set).cloned().unwrap_or_default(),
            }
        })
        .collect();

    let mut cover_edges = Vec::new();
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            let (a, b) = (&nodes[i].set, &nodes[j].set);
            if a.len() < b.len() && a.is_subset_of(b) {
                let has_between = nodes.iter().any(|c| {
                    c.set.len() > a.len()
                        && c.set.len() < b.len()
                        && a.is_subset_of(&c.set)
                        && c.set.is_subset_of(b)
                });
                if !has_between {
                    cover_edges.push((i, j));
                }
            }
        }
    }

    Lattice { n, p, nodes, cover_edges, reclosure_used }
}

impl Lattice {
    pub fn node_sets(&self) -> BTreeSet<IndexSet> {
        self.nodes.iter().map(|node| node.set.clone()).collect()
    }

    pub fn is_totally_ordered(&self) -> bool {
        for i in 0..self.nodes.len() {
            for j in (i + 1)..self.nodes.len() {
                let (a, b) = (&self.nodes[i].set, &self.nodes[j].set);
                if !a.is_subset_of(b) && !b.is_subset_of(a) {
                    return false;
                }
            }
        }
        true
    }
}

/// Digit test for total orderedness: with N_1 < … < N_d the positions of the
/// non-zero digits of b = n+1, the lattice is a chain exactly when d ≤ 2, or
/// when the positions are consecutive and all middle digits equal p−1.
pub fn is_chain_criterion(n: u64, p: Prime) -> bool {
    let bd = to_digits(n + 1, p);
    let positions: Vec<usize> = (0..bd.len()).filter(|&s| bd.digit(s) != 0).collect();
    let d = positions.len();
    if d <= 2 {
        return true;
    }
    if positions[d - 1] - positions[0] != d - 1 {
        return false;
    }
    positions[1..d - 1].iter().all(|&s| bd.digit(s) == p.get() - 1)
}

pub const DEFAULT_SUBSET_SCAN_CAP: u64 = 16;

/// All Ψ- and Ω-closed subsets of {0,…,n} by scanning every one of the
/// 2^(n+1) candidates. The independent oracle for the Λ machinery.
pub fn closure_bruteforce(n: u64, p: Prime) -> BTreeSet<IndexSet> {
    closure_bruteforce_with_cap(n, p, DEFAULT_SUBSET_SCAN_CAP)
}

pub fn closure_bruteforce_with_cap(n: u64, p: Prime, cap: u64) -> BTreeSet<IndexSet> {
    assert!(n <= cap, "subset scan capped at n = {cap}, got {n}");
    assert!(n <= 62);
    let width = n as usize + 1;
    // need[j]: positions forced into any closed set containing j
    let mut need = vec![0u64; width];
    for j in 0..width {
        let mut mask = 1u64 << (n as usize - j);
        for m in 0..width {
            if binom_mod_p(m as u64, j as u64, p) != 0 {
                mask |= 1 << m;
            }
        }
        need[j] = mask;
    }
    let mut out = BTreeSet::new();
    for candidate in 0u64..(1 << width) {
        let mut ok = true;
        let mut rest = candidate;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if need[j] & !candidate != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            out.insert(IndexSet::new(n, (0..width as u64).filter(|&j| candidate >> j & 1 == 1)));
        }
    }
    out
}

/// The induced action of an invertible 2×2 parameter matrix on degree-n
/// forms: column e holds the coefficients of (a·X₀+c·X₁)^(n−e)(b·X₀+d·X₁)^e
/// in the basis X₀^(n−j)X₁^j. Acts on coordinate rows from the right
/// (v ↦ v·M), under which curve points map to curve points; the image of
/// the base vector e_j is row j.
pub fn symmetric_power_matrix(f: &Field, g: &Matrix, n: usize) -> Matrix {
    assert_eq!((g.rows(), g.cols()), (2, 2), "parameter matrix must be 2x2");
    let det = f.sub(f.mul(g.get(0, 0), g.get(1, 1)), f.mul(g.get(0, 1), g.get(1, 0)));
    assert!(!det.is_zero(), "parameter matrix must be invertible");
    let (a, b) = (g.get(0, 0), g.get(0, 1));
    let (c, d) = (g.get(1, 0), g.get(1, 1));

    // powers of (a + c·T) and (b + d·T) as coefficient vectors in T
    let mul_linear = |poly: &[FieldElement], s: FieldElement, t: FieldElement| {
        let mut out = vec![f.zero(); poly.len() + 1];
        for (i, &coef) in poly.iter().enumerate() {
            out[i] = f.add(out[i], f.mul(coef, s));
            out[i + 1] = f.add(out[i + 1], f.mul(coef, t));
        }
        out
    };
    let mut first_powers = vec![vec![f.one()]];
    let mut second_powers = vec![vec![f.one()]];
    for e in 1..=n {
        first_powers.push(mul_linear(&first_powers[e - 1], a, c));
        second_powers.push(mul_linear(&second_powers[e - 1], b, d));
    }

    let mut m = Matrix::zeros(f, n + 1, n + 1);
    for e in 0..=n {
        let left = &first_powers[n - e];
        let right = &second_powers[e];
        for (i, &x) in left.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in right.iter().enumerate() {
                let cur = m.get(i + j, e);
                m.set(i + j, e, f.add(cur, f.mul(x, y)));
            }
        }
    }
    m
}

/// Does the coordinate span of `candidate` stay fixed under the three
/// generator collineations (diagonal, reversal, unipotent shear)? For
/// q ≥ n+2 this decides membership in the invariant lattice; the Frobenius
/// part of the semilinear group fixes every coordinate span, so testing the
/// projective generators suffices.
pub fn invariance_oracle(f: &Field, n: usize, candidate: &IndexSet) -> bool {
    assert_eq!(candidate.n(), n as u64);
    let gamma = f.generator();
    let generators = [
        Matrix::from_rows(f, &[vec![f.one(), f.zero()], vec![f.zero(), gamma]]),
        Matrix::from_rows(f, &[vec![f.zero(), f.one()], vec![f.one(), f.zero()]]),
        Matrix::from_rows(f, &[vec![f.one(), f.one()], vec![f.zero(), f.one()]]),
    ];
    let span = candidate.span(f);
    for g in &generators {
        let m = symmetric_power_matrix(f, g, n);
        // e_j · M is row j of M
        let image_rows: Vec<Vec<FieldElement>> =
            candidate.members().iter().map(|&j| m.row(j as usize).to_vec()).collect();
        let image = Subspace::span(f, &image_rows, n + 1);
        if image != span {
            return false;
        }
    }
    true
}
