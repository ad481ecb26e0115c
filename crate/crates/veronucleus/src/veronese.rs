//! Veronese varieties V_m^t: the degree-t monomial embedding of projective
//! m-space, its osculating hyperplanes, and the nucleus cut out by all of
//! them.
//!
//! Coordinates live on Pascal's simplex: one coordinate per exponent tuple
//! (e_0,…,e_m) of degree t, in a fixed graded-lexicographic order (largest
//! tuple first). The dual Veronese map weights each monomial with its
//! multinomial coefficient, which makes the vanishing pattern of those
//! coefficients mod p the combinatorial skeleton of the nucleus.

use crate::base_p::{binomial, multinom_mod_p, to_digits, to_u64, Prime};
use crate::gf::{Field, FieldElement};
use crate::linalg::{kernel, Matrix, Subspace};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// A Veronese variety V_m^t over a finite field.
#[derive(Debug, Clone)]
pub struct VeroneseSpec {
    m: usize,
    t: u64,
    field: Field,
    /// All exponent tuples of degree t in m+1 variables, graded-lex,
    /// largest first.
    exponents: Vec<Vec<u64>>,
}

impl VeroneseSpec {
    pub fn new(m: usize, t: u64, field: Field) -> VeroneseSpec {
        assert!(m >= 1, "parameter space must be at least a line");
        assert!(t >= 2, "degree must be at least 2");
        let exponents = exponent_tuples(m + 1, t);
        debug_assert_eq!(exponents.len() as u64, to_u64(&binomial(m as u64 + t, t)));
        VeroneseSpec { m, t, field, exponents }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn characteristic(&self) -> Prime {
        self.field.characteristic()
    }

    /// Ambient vector dimension C(m+t, t).
    pub fn ambient_dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    /// q ≥ t: the spanning half of the nucleus description applies.
    pub fn in_hypothesis(&self) -> bool {
        self.field.order() >= self.t
    }

    /// Image of a parameter point: the vector of all degree-t monomials.
    pub fn veronese_point(&self, x: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(x.len(), self.m + 1, "parameter point length");
        assert!(x.iter().any(|c| !c.is_zero()), "zero vector is not a point");
        let f = &self.field;
        let out: Vec<FieldElement> = self
            .exponents
            .iter()
            .map(|tuple| {
                let mut acc = f.one();
                for (xi, &ei) in x.iter().zip(tuple) {
                    acc = f.mul(acc, f.pow(*xi, ei));
                }
                acc
            })
            .collect();
        debug_assert!(out.iter().any(|c| !c.is_zero()));
        out
    }

    /// Dual Veronese image of a parameter hyperplane Σ a_i x_i = 0: the
    /// coefficient vector of its osculating hyperplane, with each monomial
    /// weighted by the multinomial coefficient mod p.
    pub fn osculating_hyperplane(&self, a: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(a.len(), self.m + 1, "dual vector length");
        assert!(a.iter().any(|c| !c.is_zero()), "zero vector is not a hyperplane");
        let f = &self.field;
        let p = self.characteristic();
        let out: Vec<FieldElement> = self
            .exponents
            .iter()
            .map(|tuple| {
                let coef = multinom_mod_p(self.t, tuple, p);
                if coef == 0 {
                    return f.zero();
                }
                let mut acc = f.from_int(coef);
                for (ai, &ei) in a.iter().zip(tuple) {
                    acc = f.mul(acc, f.pow(*ai, ei));
                }
                acc
            })
            .collect();
        // the pure powers a_i^t carry coefficient 1, so some entry survives
        assert!(out.iter().any(|c| !c.is_zero()));
        out
    }

    /// One representative per parameter hyperplane: first non-zero
    /// coordinate normalized to 1; (q^(m+1)−1)/(q−1) of them.
    pub fn parameter_hyperplanes(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let els = f.all_elements();
        let mut out = Vec::new();
        for lead in 0..=self.m {
            let free = self.m - lead;
            let mut counters = vec![0usize; free];
            loop {
                let mut v = vec![f.zero(); self.m + 1];
                v[lead] = f.one();
                for (offset, &c) in counters.iter().enumerate() {
                    v[lead + 1 + offset] = els[c];
                }
                out.push(v);
                // odometer
                let mut pos = 0;
                loop {
                    if pos == free {
                        break;
                    }
                    counters[pos] += 1;
                    if counters[pos] < els.len() {
                        break;
                    }
                    counters[pos] = 0;
                    pos += 1;
                }
                if pos == free {
                    break;
                }
            }
        }
        out
    }

    /// The (m−1, t−1)-nucleus by brute force: the common zero set of every
    /// osculating hyperplane.
    pub fn hyperplane_nucleus_bruteforce(&self) -> Subspace {
        let f = &self.field;
        let rows: Vec<Vec<FieldElement>> = self
            .parameter_hyperplanes()
            .iter()
            .map(|a| self.osculating_hyperplane(a))
            .collect();
        kernel(f, &Matrix::from_rows(f, &rows))
    }

    /// Exponent tuples whose multinomial coefficient vanishes mod p: the
    /// base points contained in the nucleus (spanning it when q ≥ t).
    pub fn hyperplane_nucleus_basis(&self) -> Vec<Vec<u64>> {
        let p = self.characteristic();
        self.exponents
            .iter()
            .filter(|tuple| multinom_mod_p(self.t, tuple, p) == 0)
            .cloned()
            .collect()
    }

    /// Coordinate span of the vanishing-coefficient base points.
    pub fn hyperplane_nucleus_basis_span(&self) -> Subspace {
        let f = &self.field;
        let n = self.ambient_dim();
        let p = self.characteristic();
        let rows: Vec<Vec<FieldElement>> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, tuple)| multinom_mod_p(self.t, tuple, p) == 0)
            .map(|(i, _)| {
                let mut v = vec![f.zero(); n];
                v[i] = f.one();
                v
            })
            .collect();
        Subspace::span(f, &rows, n)
    }

    /// Closed-form projective dimension of the hyperplane nucleus.
    pub fn hyperplane_nucleus_dim(&self) -> i64 {
        hyperplane_nucleus_dim_formula(self.m as u64, self.t, self.characteristic())
    }
}

/// All exponent tuples of the given total degree, graded-lex, largest first.
pub fn exponent_tuples(vars: usize, degree: u64) -> Vec<Vec<u64>> {
    fn rec(vars: usize, degree: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if vars == 1 {
            current.push(degree);
            out.push(current.clone());
            current.pop();
            return;
        }
        for e in (0..=degree).rev() {
            current.push(e);
            rec(vars - 1, degree - e, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::with_capacity(vars), &mut out);
    out
}

/// C(m+t, t) − Π_σ C(m + t_σ, t_σ) − 1: the nucleus dimension for q ≥ t.
pub fn hyperplane_nucleus_dim_formula(m: u64, t: u64, p: Prime) -> i64 {
    let td = to_digits(t, p);
    let mut prod = BigInt::from(1);
    for sigma in 0..td.len() {
        prod *= BigInt::from(binomial(m + td.digit(sigma), td.digit(sigma)));
    }
    let total = BigInt::from(binomial(m + t, t));
    (total - prod - BigInt::from(1)).to_i64().expect("dimension fits i64")
}

/// Dimension of the (r, k)-osculating subspace of V_m^t:
/// Σ_{i=t−k}^{t} C(r+i, i)·C(m+t−r−i−1, t−i) − 1. Characteristic-free.
pub fn osculating_dim_formula(r: u64, k: i64, m: u64, t: u64) -> i64 {
    assert!(r < m, "r must satisfy 0 <= r < m");
    assert!((-1..t as i64).contains(&k), "k must lie in -1..=t-1");
    let mut acc = BigInt::from(0);
    let lo = (t as i64 - k) as u64;
    for i in lo..=t {
        let left = binomial(r + i, i);
        let right = binomial(m + t - r - i - 1, t - i);
        acc += BigInt::from(left * right);
    }
    (acc - BigInt::from(1)).to_i64().expect("dimension fits i64")
}
