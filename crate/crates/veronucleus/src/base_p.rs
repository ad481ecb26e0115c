//! Pascal's triangle modulo a prime p, seen through base-p digits.
//!
//! The zero entries of the triangle fall into disjoint maximal zero triangles;
//! gluing triangles of equal size gives the class partition computed by
//! [`zero_class`]. The counting functions [`phi`] (zeros of one class in a
//! row), [`sigma`] (zeros of a class and above), and the top-line function
//! [`top_line`] are pure digit formulas. [`count_vanishing_multinomials`]
//! is the multinomial analogue on Pascal's simplex.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A prime number, validated at construction by trial division.
///
/// All digit combinatorics in this crate assume a prime base; the newtype
/// pushes the check to the boundary so the hot paths stay infallible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

/// Rejection of a non-prime base.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not prime")]
pub struct NotPrime(pub u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if p < 2 {
            return Err(NotPrime(p));
        }
        if p.is_multiple_of(2) {
            return if p == 2 { Ok(Prime(2)) } else { Err(NotPrime(p)) };
        }
        let mut d = 3;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(NotPrime(p));
            }
            d += 2;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Base-p representation of a non-negative integer, least significant digit
/// first. The canonical form has no trailing zero block; zero is the empty
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digits {
    value: u64,
    base: Prime,
    digits: Vec<u64>,
}

impl Digits {
    pub fn new(n: u64, p: Prime) -> Self {
        let mut digits = Vec::new();
        let mut rest = n;
        while rest > 0 {
            digits.push(rest % p.get());
            rest /= p.get();
        }
        Digits { value: n, base: p, digits }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn base(&self) -> Prime {
        self.base
    }

    /// Digit at position `sigma`; zero beyond the stored length.
    pub fn digit(&self, sigma: usize) -> u64 {
        self.digits.get(sigma).copied().unwrap_or(0)
    }

    /// Number of stored digits (zero for the value 0).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digits least-significant first.
    pub fn as_slice(&self) -> &[u64] {
        &self.digits
    }

    /// Reassemble a value from least-significant-first digits.
    pub fn from_digits(digits: &[u64], p: Prime) -> u64 {
        let mut value = 0u64;
        for &d in digits.iter().rev() {
            debug_assert!(d < p.get());
            value = value * p.get() + d;
        }
        value
    }
}

/// Prints most-significant digit first as `⟨…⟩`, the way base-p expansions
/// are usually written; zero prints as `⟨0⟩`.
impl fmt::Display for Digits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        if self.digits.is_empty() {
            write!(f, "0")?;
        } else {
            for &d in self.digits.iter().rev() {
                write!(f, "{d}")?;
            }
        }
        write!(f, "⟩")
    }
}

/// Class assignment for a vanishing entry (n, j) of Pascal's triangle mod p:
/// the size index of the maximal zero triangle containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroClass {
    pub class_index: u32,
    pub n: u64,
    pub j: u64,
}

pub fn to_digits(n: u64, p: Prime) -> Digits {
    Digits::new(n, p)
}

/// C(a, b) mod p for single digits a, b < p, via the falling-factorial
/// quotient with modular inverses (Fermat).
fn binom_digit_mod_p(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = mulmod(num, (a - i) % p, p);
        den = mulmod(den, (i + 1) % p, p);
    }
    mulmod(num, powmod(den, p - 2, p), p)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Binomial coefficient C(n, j) mod p, digit by digit: the product of the
/// digitwise coefficients C(n_σ, j_σ). Never touches big factorials.
pub fn binom_mod_p(n: u64, j: u64, p: Prime) -> u64 {
    let pv = p.get();
    let mut n = n;
    let mut j = j;
    let mut acc = 1u64 % pv;
    while j > 0 || n > 0 {
        let nd = n % pv;
        let jd = j % pv;
        if jd > nd {
            return 0;
        }
        acc = mulmod(acc, binom_digit_mod_p(nd, jd, pv), pv);
        n /= pv;
        j /= pv;
    }
    acc
}

/// Multinomial coefficient t! / (e_0! … e_m!) mod p, digit by digit. A digit
/// position where the part digits do not sum to the digit of t forces a carry
/// in e_0 + … + e_m = t and the coefficient vanishes mod p.
///
/// Panics if the parts do not sum to `t`.
pub fn multinom_mod_p(t: u64, parts: &[u64], p: Prime) -> u64 {
    let sum: u64 = parts.iter().sum();
    assert_eq!(sum, t, "multinomial parts must sum to t: {parts:?} vs {t}");
    let pv = p.get();
    let mut t_rest = t;
    let mut rest: Vec<u64> = parts.to_vec();
    let mut acc = 1u64 % pv;
    while t_rest > 0 {
        let td = t_rest % pv;
        let mut digit_sum = 0u64;
        for r in rest.iter_mut() {
            digit_sum += *r % pv;
        }
        if digit_sum != td {
            return 0;
        }
        // multinomial of one digit column as a chain of binomials
        let mut partial = 0u64;
        for r in rest.iter() {
            let ed = *r % pv;
            partial += ed;
            acc = mulmod(acc, binom_digit_mod_p(partial, ed, pv), pv);
            if acc == 0 {
                return 0;
            }
        }
        t_rest /= pv;
        for r in rest.iter_mut() {
            *r /= pv;
        }
    }
    acc
}

/// Class of the vanishing entry (n, j): with L the highest digit position
/// where j exceeds n, the class is the least position above L where j's digit
/// is strictly smaller. Returns `None` when C(n, j) does not vanish mod p.
///
/// Panics if j > n.
pub fn zero_class(n: u64, j: u64, p: Prime) -> Option<ZeroClass> {
    assert!(j <= n, "zero_class requires j <= n, got j={j} n={n}");
    let nd = Digits::new(n, p);
    let jd = Digits::new(j, p);
    let mut l: Option<usize> = None;
    for sigma in 0..nd.len().max(jd.len()) {
        if jd.digit(sigma) > nd.digit(sigma) {
            l = Some(sigma);
        }
    }
    let l = l?;
    let mut sigma = l + 1;
    loop {
        if jd.digit(sigma) < nd.digit(sigma) {
            return Some(ZeroClass { class_index: sigma as u32, n, j });
        }
        sigma += 1;
        // j < n guarantees a higher position with j_sigma < n_sigma
        assert!(sigma <= nd.len(), "no class position found for ({n},{j})");
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Number of vanishing entries of class `i` in row `n`:
/// (p^i − 1 − Σ_{μ<i} n_μ p^μ) · n_i · Π_{σ>i}(n_σ+1).
///
/// Panics if i = 0 (classes start at 1).
pub fn phi(i: u32, n: u64, p: Prime) -> BigUint {
    assert!(i >= 1, "class indices start at 1");
    let nd = Digits::new(n, p);
    let i = i as usize;
    let mut low = BigUint::zero();
    let mut pw = BigUint::one();
    for mu in 0..i {
        low += big(nd.digit(mu)) * &pw;
        pw *= big(p.get());
    }
    // pw is now p^i
    let head = pw - BigUint::one() - low;
    let mut tail = BigUint::one();
    for sigma in (i + 1)..nd.len() {
        tail *= big(nd.digit(sigma) + 1);
    }
    head * big(nd.digit(i)) * tail
}

/// Number of vanishing entries in row `n` of class `i` or higher:
/// n + 1 − (1 + Σ_{μ<i} n_μ p^μ) · Π_{σ≥i}(n_σ+1). Equals Σ_{η≥i} Φ(η, n).
///
/// Panics if i = 0.
pub fn sigma(i: u32, n: u64, p: Prime) -> BigUint {
    assert!(i >= 1, "class indices start at 1");
    let nd = Digits::new(n, p);
    let i = i as usize;
    let mut low = BigInt::zero();
    let mut pw = BigInt::one();
    for mu in 0..i {
        low += BigInt::from(nd.digit(mu)) * &pw;
        pw *= BigInt::from(p.get());
    }
    let mut tail = BigInt::one();
    for sigma in i..nd.len() {
        tail *= BigInt::from(nd.digit(sigma) + 1);
    }
    let result = BigInt::from(n) + BigInt::one() - (BigInt::one() + low) * tail;
    assert!(!result.is_negative(), "sigma must be a count");
    result.to_biguint().unwrap()
}

/// Top-line function T(R, b) = Σ_{σ≥R} b_σ p^σ: the value of b with all
/// digits below position R zeroed.
pub fn top_line(r: u32, b: u64, p: Prime) -> u64 {
    let bd = Digits::new(b, p);
    let mut acc = 0u64;
    let mut pw = 1u64;
    for sigma in 0..bd.len() {
        if sigma >= r as usize {
            acc += bd.digit(sigma) * pw;
        }
        pw = pw.saturating_mul(p.get());
    }
    acc
}

/// Exact binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * big(n - i) / big(i + 1);
    }
    acc
}

/// Number of degree-t multinomial coefficients in m+1 variables divisible by
/// p: C(m+t, t) − Π_σ C(m + t_σ, t_σ).
pub fn count_vanishing_multinomials(m: u32, t: u64, p: Prime) -> BigUint {
    assert!(m >= 1);
    let total = binomial(m as u64 + t, t);
    let td = Digits::new(t, p);
    let mut prod = BigUint::one();
    for sigma in 0..td.len() {
        prod *= binomial(m as u64 + td.digit(sigma), td.digit(sigma));
    }
    total - prod
}

/// ASCII Pascal's triangle mod p with vanishing entries blanked. Row n is
/// indented by rows−1−n spaces so entry (n, j) sits at column rows−1−n+2j.
pub fn render_triangle(rows: u32, p: Prime) -> String {
    assert!(rows >= 1);
    let mut out = String::new();
    for n in 0..rows as u64 {
        let indent = (rows as u64 - 1 - n) as usize;
        let mut line = " ".repeat(indent);
        for j in 0..=n {
            if j > 0 {
                line.push(' ');
            }
            let r = binom_mod_p(n, j, p);
            if r == 0 {
                line.push(' ');
            } else {
                line.push(std::char::from_digit((r % 36) as u32, 36).unwrap_or('#'));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Sum of `phi(η, n)` for η from `i` up to the digit length of n; past the
/// highest digit every class is empty.
pub fn phi_tail_sum(i: u32, n: u64, p: Prime) -> BigUint {
    let len = Digits::new(n, p).len() as u32;
    let mut acc = BigUint::zero();
    for eta in i..=len.max(i) {
        acc += phi(eta, n, p);
    }
    acc
}

/// Convenience: number of vanishing entries in row n (all classes).
pub fn zeros_in_row(n: u64, p: Prime) -> BigUint {
    sigma(1, n, p)
}

pub(crate) fn to_u64(b: &BigUint) -> u64 {
    b.to_u64().expect("value exceeds u64")
}
