//! Dense exact linear algebra over a finite field.
//!
//! Subspaces are canonicalized to reduced row echelon form at construction,
//! so equality, hashing, and containment are structural. Intersections go
//! through the Zassenhaus stacked-basis construction; everything returns the
//! canonical RREF basis, which makes folds over many subspaces
//! order-independent.

use crate::gf::{Field, FieldElement};

/// Row-major matrix over one finite field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn new(f: &Field, rows: usize, cols: usize, data: Vec<FieldElement>) -> Matrix {
        assert_eq!(rows * cols, data.len(), "matrix shape mismatch");
        for &x in &data {
            // cheap way to reject foreign elements: adding zero asserts the fid
            let _ = f.add(x, f.zero());
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(f: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity(f: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_rows(f: &Field, rows: &[Vec<FieldElement>]) -> Matrix {
        if rows.is_empty() {
            return Matrix::zeros(f, 0, 0);
        }
        let cols = rows[0].len();
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        Matrix::new(f, rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(f: &Field, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.cols, b.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(f, a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let aik = a.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(aik, b.get(k, j))));
                }
            }
        }
        out
    }

    pub fn mul_vec(f: &Field, m: &Matrix, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(m.cols, v.len());
        (0..m.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..m.cols {
                    acc = f.add(acc, f.mul(m.get(r, c), v[c]));
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix (the right action on coordinate rows).
    pub fn vec_mul(f: &Field, v: &[FieldElement], m: &Matrix) -> Vec<FieldElement> {
        assert_eq!(v.len(), m.rows);
        (0..m.cols)
            .map(|c| {
                let mut acc = f.zero();
                for r in 0..m.rows {
                    acc = f.add(acc, f.mul(v[r], m.get(r, c)));
                }
                acc
            })
            .collect()
    }
}

/// In-place Gauss–Jordan; returns pivot columns. Rows are fully reduced and
/// zero rows sink to the bottom. Pivot choice is the leftmost non-zero
/// column, topmost remaining row.
fn rref_in_place(f: &Field, m: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr == rows {
            break;
        }
        let mut sel = None;
        for r in pr..rows {
            if !m.get(r, pc).is_zero() {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        if sel != pr {
            for c in pc..cols {
                let a = m.get(sel, c);
                let b = m.get(pr, c);
                m.set(sel, c, b);
                m.set(pr, c, a);
            }
        }
        let inv = f.inv(m.get(pr, pc));
        for c in pc..cols {
            m.set(pr, c, f.mul(inv, m.get(pr, c)));
        }
        let pivot_row: Vec<FieldElement> = m.row(pr).to_vec();
        for r in 0..rows {
            if r == pr {
                continue;
            }
            let factor = m.get(r, pc);
            if factor.is_zero() {
                continue;
            }
            for c in pc..cols {
                let cur = m.get(r, c);
                m.set(r, c, f.sub(cur, f.mul(factor, pivot_row[c])));
            }
        }
        pivots.push(pc);
        pr += 1;
    }
    pivots
}

/// Reduced row echelon form with zero rows dropped, plus the rank.
pub fn rref(f: &Field, m: &Matrix) -> (Matrix, usize) {
    let mut w = m.clone();
    let pivots = rref_in_place(f, &mut w);
    let rank = pivots.len();
    let data = w.data[..rank * w.cols].to_vec();
    (Matrix { rows: rank, cols: w.cols, data }, rank)
}

/// A linear subspace of F^N held as its canonical RREF basis. The projective
/// dimension is rank − 1, so the empty projective subspace has rank 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Row space of the given vectors, canonicalized.
    pub fn span(f: &Field, vectors: &[Vec<FieldElement>], ambient: usize) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace::empty(f, ambient);
        }
        let (basis, _) = rref(f, &Matrix::from_rows(f, vectors));
        Subspace { ambient, basis }
    }

    pub fn empty(f: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(f, 0, ambient) }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(f, ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Vector-space dimension (rank of the basis).
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Projective dimension: rank − 1; the empty subspace has −1.
    pub fn projective_dim(&self) -> i64 {
        self.basis.rows() as i64 - 1
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.basis.rows() == 0
    }

    /// Membership by reduction against the RREF basis.
    pub fn contains(&self, f: &Field, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut w = v.to_vec();
        for r in 0..self.basis.rows() {
            let pc = (0..self.ambient)
                .find(|&c| !self.basis.get(r, c).is_zero())
                .expect("no zero rows in a canonical basis");
            if !w[pc].is_zero() {
                let factor = w[pc];
                for c in pc..self.ambient {
                    w[c] = f.sub(w[c], f.mul(factor, self.basis.get(r, c)));
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    /// True when every vector of `self` lies in `other`.
    pub fn leq(&self, f: &Field, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        (0..self.basis.rows()).all(|r| other.contains(f, self.basis.row(r)))
    }

    /// Span of the union (the lattice join).
    pub fn join(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient, b.ambient, "ambient mismatch");
        let mut rows = a.basis.row_vecs();
        rows.extend(b.basis.row_vecs());
        Subspace::span(f, &rows, a.ambient)
    }

    /// Set-theoretic intersection via the Zassenhaus stacked-basis trick:
    /// row-reduce [A|A; B|0]; rows whose left half vanished carry an
    /// intersection basis in the right half.
    pub fn intersect(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient, b.ambient, "ambient mismatch");
        let n = a.ambient;
        if a.is_empty() || b.is_empty() {
            return Subspace::empty(f, n);
        }
        let (ra, rb) = (a.rank(), b.rank());
        let mut stack = Matrix::zeros(f, ra + rb, 2 * n);
        for r in 0..ra {
            for c in 0..n {
                let v = a.basis.get(r, c);
                stack.set(r, c, v);
                stack.set(r, n + c, v);
            }
        }
        for r in 0..rb {
            for c in 0..n {
                stack.set(ra + r, c, b.basis.get(r, c));
            }
        }
        rref_in_place(f, &mut stack);
        let mut rows = Vec::new();
        for r in 0..(ra + rb) {
            let left_zero = (0..n).all(|c| stack.get(r, c).is_zero());
            if left_zero {
                let right: Vec<FieldElement> = (0..n).map(|c| stack.get(r, n + c)).collect();
                if right.iter().any(|x| !x.is_zero()) {
                    rows.push(right);
                }
            }
        }
        Subspace::span(f, &rows, n)
    }
}

/// Right null space { v : m·v = 0 }, as a canonical subspace of F^cols.
pub fn kernel(f: &Field, m: &Matrix) -> Subspace {
    let cols = m.cols();
    let mut w = m.clone();
    let pivots = rref_in_place(f, &mut w);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &pc in &pivots {
            v[pc] = true;
        }
        v
    };
    let mut rows = Vec::new();
    for fc in 0..cols {
        if is_pivot[fc] {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[fc] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(w.get(i, fc));
        }
        rows.push(v);
    }
    Subspace::span(f, &rows, cols)
}
