//! Finite fields GF(p^e) with exact, table-driven arithmetic.
//!
//! Elements are stored as a single integer repr < q encoding the coefficient
//! vector in base p (coefficient of x^0 in the least significant digit).
//! Multiplication and inversion run through discrete-log tables built once at
//! field construction; addition is digit arithmetic (a plain XOR in
//! characteristic two). For e > 1 the modulus is the irreducible monic
//! polynomial of degree e with the smallest integer encoding, found by
//! exhaustive search, so every run reconstructs the identical field.

use crate::base_p::{NotPrime, Prime};
use std::fmt;
use std::sync::Arc;

/// Default ceiling on the field order. Brute-force oracles need q up to a
/// few hundred; the cap guards against accidental huge table builds.
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error(transparent)]
    NotPrime(#[from] NotPrime),
    #[error("field order {order} exceeds the cap of {cap} elements")]
    TooLarge { order: u128, cap: u64 },
}

/// One element of a finite field: the integer repr plus a token identifying
/// the owning field, so elements of distinct fields never mix silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    repr: u32,
    fid: u32,
}

impl FieldElement {
    pub fn is_zero(self) -> bool {
        self.repr == 0
    }

    /// Integer encoding of the coefficient vector in base p.
    pub fn repr(self) -> u64 {
        self.repr as u64
    }
}

struct FieldInner {
    p: Prime,
    e: u32,
    q: u64,
    fid: u32,
    /// Monic modulus coefficients, constant term first; empty for e = 1.
    modulus: Vec<u64>,
    /// exp[k] = g^k for k in 0..2(q-1), doubled so log sums skip a reduction.
    exp: Vec<u32>,
    /// log[r] for r in 1..q; log[0] is unused.
    log: Vec<u32>,
    generator: u32,
}

/// A finite field GF(p^e). Cheap to clone and share; all arithmetic is pure.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.descriptor())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.fid == other.0.fid
    }
}
impl Eq for Field {}

// ---- polynomial helpers over Z_p used only during construction ----

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mod(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    // f monic
    while a.len() >= f.len() && !a.is_empty() {
        let lead = a[a.len() - 1];
        let shift = a.len() - f.len();
        if lead != 0 {
            for (i, &fc) in f.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + (p - lead % p) * fc) % p;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_mod(prod, f, p)
}

fn poly_pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        b = poly_mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat
    let mut acc = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // make b monic so poly_mod applies
        let lead = b[b.len() - 1];
        if lead != 1 {
            let inv = inv_mod_p(lead, p);
            for c in b.iter_mut() {
                *c = *c * inv % p;
            }
        }
        let r = poly_mod(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// x^(p^k) mod f by iterated p-th powers.
fn frobenius_power(k: u32, f: &[u64], p: u64) -> Vec<u64> {
    let mut t = vec![0u64, 1]; // x
    for _ in 0..k {
        t = poly_pow_mod(&t, p, f, p);
    }
    t
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if e <= 3 {
        // a quadratic or cubic is reducible exactly when it has a root
        for a in 0..p {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * a + c) % p;
            }
            if acc == 0 {
                return false;
            }
        }
        return true;
    }
    // x^(p^e) must fix x ...
    let xq = frobenius_power(e, f, p);
    if xq != vec![0, 1] {
        return false;
    }
    // ... and x^(p^(e/r)) - x must be coprime to f for every prime r | e
    for r in distinct_prime_factors(e as u64) {
        let m = e / r as u32;
        let mut t = frobenius_power(m, f, p);
        // subtract x
        if t.len() < 2 {
            t.resize(2, 0);
        }
        t[1] = (t[1] + p - 1) % p;
        trim(&mut t);
        let g = poly_gcd(f.to_vec(), t, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

// ---- field construction ----

fn digits_of(mut v: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

impl Field {
    /// GF(p^e) under the default size cap.
    pub fn new(p: u64, e: u32) -> Result<Field, GfError> {
        Field::with_cap(p, e, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Field, GfError> {
        let prime = Prime::new(p)?;
        assert!(e >= 1, "extension degree must be at least 1");
        let mut q: u128 = 1;
        for _ in 0..e {
            q *= p as u128;
            if q > cap as u128 {
                return Err(GfError::TooLarge { order: q, cap });
            }
        }
        let q = q as u64;

        let modulus = if e == 1 {
            Vec::new()
        } else {
            let mut found = None;
            for k in 0..q {
                let mut f = digits_of(k, p, e as usize);
                f.push(1);
                if is_irreducible(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("an irreducible monic polynomial of every degree exists")
        };

        // repr <-> polynomial conversions for the slow bootstrap arithmetic
        let to_poly = |r: u64| -> Vec<u64> {
            let mut v = digits_of(r, p, e as usize);
            trim(&mut v);
            v
        };
        let from_poly = |poly: &[u64]| -> u64 {
            let mut acc = 0u64;
            for &c in poly.iter().rev() {
                acc = acc * p + c;
            }
            acc
        };
        let mul_slow = |a: u64, b: u64| -> u64 {
            if e == 1 {
                a * b % p
            } else {
                from_poly(&poly_mul_mod(&to_poly(a), &to_poly(b), &modulus, p))
            }
        };
        let pow_slow = |mut a: u64, mut k: u64| -> u64 {
            let mut acc = 1u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = mul_slow(acc, a);
                }
                a = mul_slow(a, a);
                k >>= 1;
            }
            acc
        };

        // deterministic multiplicative generator: smallest repr working
        let group = q - 1;
        let factors = distinct_prime_factors(group);
        let mut generator = 1u64;
        if group > 1 {
            'search: for g in 2..q {
                for &r in &factors {
                    if pow_slow(g, group / r) == 1 {
                        continue 'search;
                    }
                }
                generator = g;
                break;
            }
            assert!(generator > 1, "multiplicative group of a finite field is cyclic");
        }

        let mut exp = vec![0u32; (2 * group.max(1)) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for k in 0..group.max(1) {
            exp[k as usize] = acc as u32;
            exp[(k + group.max(1)) as usize] = acc as u32;
            log[acc as usize] = k as u32;
            acc = mul_slow(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order must be q-1");

        let fid = ((p as u32) << 6) | e;
        Ok(Field(Arc::new(FieldInner {
            p: prime,
            e,
            q,
            fid,
            modulus,
            exp,
            log,
            generator: generator as u32,
        })))
    }

    pub fn characteristic(&self) -> Prime {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients (constant term first, monic); `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.0.e == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn descriptor(&self) -> String {
        if self.0.e == 1 {
            format!("GF({})", self.0.p)
        } else {
            format!("GF({}^{})", self.0.p, self.0.e)
        }
    }

    #[inline]
    fn check(&self, a: FieldElement) {
        assert_eq!(a.fid, self.0.fid, "operand from a different field");
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { repr: 0, fid: self.0.fid }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { repr: 1 % self.0.q as u32, fid: self.0.fid }
    }

    /// Element with the given integer repr (< q).
    pub fn element(&self, repr: u64) -> FieldElement {
        assert!(repr < self.0.q, "repr {repr} out of range for {}", self.descriptor());
        FieldElement { repr: repr as u32, fid: self.0.fid }
    }

    /// Embedding of an integer through the prime subfield.
    pub fn from_int(&self, n: u64) -> FieldElement {
        FieldElement { repr: (n % self.0.p.get()) as u32, fid: self.0.fid }
    }

    /// Element from its coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.0.e as usize, "too many coefficients");
        let p = self.0.p.get();
        let mut repr = 0u64;
        for &c in coeffs.iter().rev() {
            assert!(c < p, "coefficient {c} not reduced mod {p}");
            repr = repr * p + c;
        }
        self.element(repr)
    }

    /// Coefficient vector of an element, constant term first, length e.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        self.check(a);
        digits_of(a.repr as u64, self.0.p.get(), self.0.e as usize)
    }

    /// All q elements, zero first, in repr order.
    pub fn all_elements(&self) -> Vec<FieldElement> {
        (0..self.0.q).map(|r| FieldElement { repr: r as u32, fid: self.0.fid }).collect()
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement { repr: self.0.generator, fid: self.0.fid }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let p = self.0.p.get() as u32;
        if p == 2 {
            return FieldElement { repr: a.repr ^ b.repr, fid: a.fid };
        }
        let mut out = 0u32;
        let mut pw = 1u32;
        let (mut x, mut y) = (a.repr, b.repr);
        while x > 0 || y > 0 {
            let s = (x % p + y % p) % p;
            out += s * pw;
            x /= p;
            y /= p;
            pw *= p;
        }
        FieldElement { repr: out, fid: a.fid }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        let p = self.0.p.get() as u32;
        if p == 2 {
            return a;
        }
        let mut out = 0u32;
        let mut pw = 1u32;
        let mut x = a.repr;
        while x > 0 {
            let d = x % p;
            if d > 0 {
                out += (p - d) * pw;
            }
            x /= p;
            pw *= p;
        }
        FieldElement { repr: out, fid: a.fid }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        if a.repr == 0 || b.repr == 0 {
            return FieldElement { repr: 0, fid: a.fid };
        }
        let inner = &*self.0;
        let idx = inner.log[a.repr as usize] as usize + inner.log[b.repr as usize] as usize;
        FieldElement { repr: inner.exp[idx], fid: a.fid }
    }

    /// Multiplicative inverse. Panics on zero; see [`Field::checked_inv`].
    #[inline]
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.checked_inv(a).expect("inverse of zero")
    }

    pub fn checked_inv(&self, a: FieldElement) -> Option<FieldElement> {
        self.check(a);
        if a.repr == 0 {
            return None;
        }
        let inner = &*self.0;
        let group = (inner.q - 1).max(1);
        let idx = (group - inner.log[a.repr as usize] as u64) % group;
        Some(FieldElement { repr: inner.exp[idx as usize], fid: a.fid })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        self.check(a);
        if a.repr == 0 {
            return if k == 0 { self.one() } else { self.zero() };
        }
        let inner = &*self.0;
        let group = (inner.q - 1).max(1);
        let idx = (inner.log[a.repr as usize] as u128 * (k % group) as u128 % group as u128) as usize;
        FieldElement { repr: inner.exp[idx], fid: a.fid }
    }

    /// The field automorphism a ↦ a^p; iterating it e times is the identity.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.0.p.get())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn prime_field_no_modulus() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert!(f.modulus().is_none());
        assert_eq!(f.descriptor(), "GF(2)");
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1u64, 1, 1][..]));
    }

    #[test]
    fn gf81_modulus_is_deterministic() {
        let a = Field::new(3, 4).unwrap();
        let b = Field::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.order(), 81);
        let m = a.modulus().unwrap();
        assert_eq!(m.len(), 5);
        assert_eq!(m[4], 1);
    }

    #[test]
    fn rejects_non_prime_and_oversize() {
        assert!(matches!(Field::new(6, 1), Err(GfError::NotPrime(_))));
        assert!(matches!(Field::new(2, 21), Err(GfError::TooLarge { .. })));
        assert!(Field::with_cap(2, 5, 16).is_err());
    }

    #[test]
    fn gf4_multiplication() {
        let f = Field::new(2, 2).unwrap();
        let x = f.from_coeffs(&[0, 1]);
        let x1 = f.from_coeffs(&[1, 1]);
        // x * (x+1) = x^2 + x = 1 modulo x^2+x+1
        assert_eq!(f.mul(x, x1), f.one());
    }

    #[test]
    fn gf3_addition() {
        let f = Field::new(3, 1).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.add(two, two), f.one());
    }

    #[test]
    fn inverses_exhaustive_small_fields() {
        for (p, e) in [(2u64, 1u32), (2, 2), (2, 3), (2, 10), (3, 1), (3, 2), (5, 2), (7, 1)] {
            let f = Field::new(p, e).unwrap();
            for a in f.all_elements() {
                if a.is_zero() {
                    assert!(f.checked_inv(a).is_none());
                } else {
                    assert_eq!(f.mul(a, f.inv(a)), f.one(), "{} in {}", a.repr(), f.descriptor());
                }
            }
        }
    }

    #[test]
    fn all_elements_enumeration() {
        let f = Field::new(2, 1).unwrap();
        let els = f.all_elements();
        assert_eq!(els, vec![f.zero(), f.one()]);

        let f = Field::new(2, 2).unwrap();
        let els = f.all_elements();
        assert_eq!(els.len(), 4);
        for i in 0..els.len() {
            for j in (i + 1)..els.len() {
                assert_ne!(els[i], els[j]);
            }
        }

        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.all_elements().len(), 9);
        for a in f.all_elements() {
            if !a.is_zero() {
                assert_eq!(f.pow(a, 8), f.one());
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = Field::new(2, 2).unwrap();
        let x = f.from_coeffs(&[0, 1]);
        // x^2 = x + 1 modulo x^2+x+1
        assert_eq!(f.frobenius(x), f.from_coeffs(&[1, 1]));
        assert_eq!(f.frobenius(f.zero()), f.zero());

        let f = Field::new(5, 1).unwrap();
        for a in f.all_elements() {
            assert_eq!(f.frobenius(a), a);
        }
    }

    #[test]
    fn frobenius_is_automorphism_of_order_e() {
        for (p, e) in [(2u64, 3u32), (3, 3), (5, 2)] {
            let f = Field::new(p, e).unwrap();
            for a in f.all_elements() {
                for b in f.all_elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
                let mut it = a;
                for _ in 0..e {
                    it = f.frobenius(it);
                }
                assert_eq!(it, a);
            }
        }
    }

    /// Every prime power q ≤ 256 (not a hand-picked subset).
    fn all_prime_powers_up_to(cap: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for p in 2..=cap {
            if Prime::new(p).is_err() {
                continue;
            }
            let mut e = 1u32;
            while p.pow(e) <= cap {
                out.push((p, e));
                e += 1;
            }
        }
        out
    }

    /// Associativity and distributivity sampled, inverses and the unit-group
    /// order exhaustive, over every field with q ≤ 256.
    #[test]
    fn field_axioms_all_fields_q_le_256() {
        for (p, e) in all_prime_powers_up_to(256) {
            let f = Field::new(p, e).unwrap();
            let q = f.order();
            for a in f.all_elements() {
                if a.is_zero() {
                    assert!(f.checked_inv(a).is_none());
                } else {
                    assert_eq!(f.mul(a, f.inv(a)), f.one(), "{} in {}", a.repr(), f.descriptor());
                    assert_eq!(f.pow(a, q - 1), f.one());
                }
            }
            let mut rng = SplitMix64::new(0x00c0ffee ^ q);
            let draw = |rng: &mut SplitMix64| f.element(rng.below(q));
            for _ in 0..120 {
                let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
            }
        }
    }

    #[test]
    fn characteristic_sums_to_zero() {
        for (p, e) in [(2u64, 3u32), (3, 2), (5, 1), (7, 2)] {
            let f = Field::new(p, e).unwrap();
            let mut acc = f.zero();
            for _ in 0..p {
                acc = f.add(acc, f.one());
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn unit_group_order() {
        for (p, e) in [(2u64, 7u32), (3, 3), (5, 2)] {
            let f = Field::new(p, e).unwrap();
            let q = f.order();
            for a in f.all_elements() {
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q - 1), f.one());
                }
            }
            // the stored generator really has full order
            let g = f.generator();
            for r in distinct_prime_factors(q - 1) {
                assert_ne!(f.pow(g, (q - 1) / r), f.one());
            }
        }
    }

    #[test]
    #[should_panic(expected = "different field")]
    fn cross_field_operands_rejected() {
        let f4 = Field::new(2, 2).unwrap();
        let f8 = Field::new(2, 3).unwrap();
        let a = f4.one();
        let b = f8.one();
        let _ = f4.add(a, b);
    }

    #[test]
    fn coeff_round_trip() {
        let f = Field::new(3, 4).unwrap();
        for a in f.all_elements() {
            let c = f.coeffs(a);
            assert_eq!(c.len(), 4);
            assert_eq!(f.from_coeffs(&c), a);
        }
    }
}
