//! Laurent polynomials in the base variable `v` with arbitrary-precision
//! integer coefficients.
//!
//! `v` is a square root of the quantum parameter, `v^2 = q`; working in `v`
//! keeps the half-integer powers of `q` produced by the Cartan part of the
//! R-matrix polynomial. The pair (numerator, denominator) of [`crate::ScalarQ`]
//! is built from this type.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense Laurent polynomial: `coeffs[k]` is the coefficient of `v^(low + k)`.
///
/// Canonical form: `coeffs` is empty for the zero polynomial (then `low == 0`),
/// otherwise both the first and last stored coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly { low: 0, coeffs: vec![BigInt::one()] }
    }

    /// The monomial `c * v^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { low: exp, coeffs: vec![c] }
        }
    }

    /// Builds a polynomial from coefficients of `v^low, v^(low+1), ...`,
    /// trimming zeros at both ends.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Single-term polynomials (including constants).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient; 0 for the zero polynomial.
    pub fn high_exp(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    /// Coefficient of the highest power, if any.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Iterates over `(exponent, coefficient)` pairs, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (low + k as i64, c))
    }

    /// Multiplies by `v^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let low = self.low + other.low;
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }

    /// Gcd of the absolute values of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d` (must be exact).
    pub fn div_coeffs(&self, d: &BigInt) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| exact_int_div(c, d)).collect(),
        }
    }

    /// Exact polynomial division; panics if the division leaves a remainder,
    /// which would indicate a broken reduction invariant upstream.
    pub fn div_exact(&self, g: &Self) -> Self {
        assert!(!g.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let q = div_exact_ordinary(&self.coeffs, &g.coeffs);
        LaurentPoly::from_coeffs(self.low - g.low, q)
    }

    /// Primitive gcd over the integers with positive leading coefficient.
    ///
    /// Powers of `v` are units here, so the result ignores the `low` offsets
    /// of the inputs and is an ordinary polynomial with nonzero constant term.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return primitive_positive(b);
        }
        if b.is_zero() {
            return primitive_positive(a);
        }
        if a.is_monomial() || b.is_monomial() {
            return LaurentPoly::one();
        }
        let g = gcd_ordinary(&a.coeffs, &b.coeffs);
        LaurentPoly::from_coeffs(0, g)
    }
}

fn exact_int_div(a: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(d);
    assert!(r.is_zero(), "non-exact integer division in polynomial reduction");
    q
}

fn primitive_positive(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    if p.is_monomial() {
        return LaurentPoly::one();
    }
    let mut c = p.content();
    if p.leading().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    LaurentPoly::from_coeffs(0, p.coeffs.iter().map(|x| exact_int_div(x, &c)).collect())
}

fn trim_vec(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of ordinary ascending coefficient vectors.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut nr = vec![BigInt::zero(); dr];
        for (k, c) in r.iter().take(dr).enumerate() {
            nr[k] = c * lb;
        }
        for (k, c) in b.iter().take(db).enumerate() {
            nr[k + dr - db] -= &lr * c;
        }
        r = trim_vec(nr);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn vec_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_vec(v: Vec<BigInt>) -> Vec<BigInt> {
    if v.is_empty() {
        return v;
    }
    let mut c = vec_content(&v);
    if v.last().unwrap().is_negative() {
        c = -c;
    }
    v.iter().map(|x| exact_int_div(x, &c)).collect()
}

/// Primitive-PRS gcd of ordinary coefficient vectors.
fn gcd_ordinary(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive_vec(trim_vec(a.to_vec()));
    let mut b = primitive_vec(trim_vec(b.to_vec()));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive_vec(r);
    }
    a
}

fn div_exact_ordinary(a: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let da = a.len() - 1;
    let dg = g.len() - 1;
    assert!(da >= dg, "degree of divisor exceeds dividend in exact division");
    let lg = &g[dg];
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); da - dg + 1];
    for k in (0..=da - dg).rev() {
        let c = exact_int_div(&rem[k + dg], lg);
        if !c.is_zero() {
            for (t, gc) in g.iter().enumerate() {
                let prod = &c * gc;
                rem[k + t] -= prod;
            }
            q[k] = c;
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "non-exact polynomial division in reduction"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(low: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trim_and_zero() {
        let p = poly(-1, &[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.low_exp(), 0);
        let q = poly(-2, &[0, 3, 0, 1, 0]);
        assert_eq!(q.low_exp(), -1);
        assert_eq!(q.high_exp(), 1);
    }

    #[test]
    fn arithmetic() {
        // (v - v^-1)(v + v^-1) = v^2 - v^-2
        let a = poly(-1, &[-1, 0, 1]);
        let b = poly(-1, &[1, 0, 1]);
        assert_eq!(a.mul(&b), poly(-2, &[-1, 0, 0, 0, 1]));
        assert_eq!(a.add(&a.neg()), LaurentPoly::zero());
        assert_eq!(a.sub(&a), LaurentPoly::zero());
    }

    #[test]
    fn gcd_and_division() {
        // gcd(v^4 - 1, v^2 - 1) = v^2 - 1
        let a = poly(0, &[-1, 0, 0, 0, 1]);
        let b = poly(0, &[-1, 0, 1]);
        let g = LaurentPoly::gcd(&a, &b);
        assert_eq!(g, b);
        assert_eq!(a.div_exact(&g), poly(0, &[1, 0, 1]));
        // gcd ignores v-power factors and constant contents
        let a2 = a.shifted(-3);
        let g2 = LaurentPoly::gcd(&a2, &b);
        assert_eq!(g2, b);
        // coprime pair
        let c = poly(0, &[1, 1]);
        let d = poly(0, &[2, 1]);
        assert!(LaurentPoly::gcd(&c, &d).is_one());
    }

    #[test]
    fn content_and_primitive() {
        let p = poly(0, &[2, 4, 6]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.div_coeffs(&BigInt::from(2)), poly(0, &[1, 2, 3]));
    }
}
