//! The exact coefficient field: rational functions of `v = q^(1/2)` over the
//! rationals.
//!
//! A [`ScalarQ`] is a reduced fraction of integer Laurent polynomials in `v`.
//! Canonical form: numerator and denominator share no polynomial factor and
//! no integer content, the denominator is an ordinary polynomial with nonzero
//! constant term, and its leading coefficient is positive. Equality is plain
//! structural equality of canonical forms, which makes the type usable as a
//! table key.
//!
//! Scalars print with `v` rendered as a half-integer power of `q`, e.g.
//! `q^2 + 1 + q^-2` or `-q^(-3/2)`, and parse back exactly.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::QComplex;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Tolerance on the denominator magnitude below which numeric evaluation is
/// reported as a singularity.
pub const EVAL_DENOMINATOR_TOL: f64 = 1e-12;

/// An element of the field of rational functions in `v = q^(1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        ScalarQ { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ {
            num: LaurentPoly::monomial(BigInt::from(n), 0),
            den: LaurentPoly::one(),
        }
    }

    /// `v^k`, i.e. `q^(k/2)`.
    pub fn v_pow(k: i64) -> Self {
        ScalarQ {
            num: LaurentPoly::monomial(BigInt::one(), k),
            den: LaurentPoly::one(),
        }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        ScalarQ::v_pow(2 * k)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        ScalarQ { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num/den` in canonical form; `den` must be nonzero.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    fn add_ref(&self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ::from_poly(self.num.add(&rhs.num));
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        reduce(num, den)
    }

    fn sub_ref(&self, rhs: &ScalarQ) -> ScalarQ {
        self.add_ref(&rhs.neg_ref())
    }

    fn neg_ref(&self) -> ScalarQ {
        ScalarQ { num: self.num.neg(), den: self.den.clone() }
    }

    fn mul_ref(&self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarQ::from_poly(self.num.mul(&rhs.num));
        }
        // Cross-reduce before multiplying; each factor is already reduced, so
        // only integer contents can remain common afterwards.
        let g1 = LaurentPoly::gcd(&self.num, &rhs.den);
        let g2 = LaurentPoly::gcd(&rhs.num, &self.den);
        let num = self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2));
        let den = self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1));
        normalize_coprime(num, den)
    }

    /// Multiplicative inverse; the zero scalar is reported as an error.
    pub fn inv(&self) -> Result<ScalarQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = self.num.low_exp();
        let num = self.den.shifted(-k);
        let den = self.num.shifted(-k);
        Ok(fix_sign(num, den))
    }

    /// Exact division with the zero divisor reported as an error.
    pub fn checked_div(&self, rhs: &ScalarQ) -> Result<ScalarQ> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, k: i64) -> Result<ScalarQ> {
        if k == 0 {
            return Ok(ScalarQ::one());
        }
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = ScalarQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// Substitutes `v = exp(i pi t / 2)`, i.e. `q = exp(i pi t)`.
    pub fn eval_at(&self, t: f64) -> Result<QComplex> {
        let den = eval_poly(&self.den, t);
        if den.abs() < EVAL_DENOMINATOR_TOL {
            return Err(Error::EvalSingularity { t });
        }
        let num = eval_poly(&self.num, t);
        let z = num / den;
        if !z.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(z)
    }
}

fn eval_poly(p: &LaurentPoly, t: f64) -> QComplex {
    let mut acc = QComplex::ZERO;
    for (e, c) in p.terms() {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_f64().unwrap_or(f64::NAN);
        // v^e = exp(i pi t e / 2), computed from the angle directly
        acc = acc + QComplex::unit_phase(core::f64::consts::PI * t * e as f64 / 2.0).scale(coeff);
    }
    acc
}

/// Full canonicalization of an arbitrary fraction (nonzero denominator).
fn reduce(num: LaurentPoly, den: LaurentPoly) -> ScalarQ {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return ScalarQ::zero();
    }
    let g = LaurentPoly::gcd(&num, &den);
    if g.is_one() {
        normalize_coprime(num, den)
    } else {
        normalize_coprime(num.div_exact(&g), den.div_exact(&g))
    }
}

/// Normalization when no positive-degree common factor remains: strip the
/// common integer content, move `v`-powers out of the denominator, fix signs.
fn normalize_coprime(mut num: LaurentPoly, mut den: LaurentPoly) -> ScalarQ {
    if num.is_zero() {
        return ScalarQ::zero();
    }
    let k = den.low_exp();
    if k != 0 {
        den = den.shifted(-k);
        num = num.shifted(-k);
    }
    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = num.div_coeffs(&c);
        den = den.div_coeffs(&c);
    }
    fix_sign(num, den)
}

fn fix_sign(num: LaurentPoly, den: LaurentPoly) -> ScalarQ {
    if den.leading().is_some_and(|l| l.is_negative()) {
        ScalarQ { num: num.neg(), den: den.neg() }
    } else {
        ScalarQ { num, den }
    }
}

/// The q-integer `[n] = (q^n - q^-n)/(q - q^-1)`, a Laurent polynomial.
pub fn qint(n: i64) -> ScalarQ {
    if n == 0 {
        return ScalarQ::zero();
    }
    let m = n.unsigned_abs() as usize;
    // [m] = q^(m-1) + q^(m-3) + ... + q^(1-m)
    let mut coeffs = vec![BigInt::zero(); 4 * (m - 1) + 1];
    for k in 0..m {
        coeffs[4 * k] = BigInt::one();
    }
    let p = LaurentPoly::from_coeffs(-2 * (m as i64 - 1), coeffs);
    let s = ScalarQ::from_poly(p);
    if n < 0 {
        s.neg_ref()
    } else {
        s
    }
}

/// The q-factorial `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn qfact(n: u32) -> ScalarQ {
    let mut acc = ScalarQ::one();
    for k in 1..=n as i64 {
        acc = acc.mul_ref(&qint(k));
    }
    acc
}

macro_rules! forward_binop {
    ($Op:ident, $op:ident, $method:ident) => {
        impl core::ops::$Op<&ScalarQ> for &ScalarQ {
            type Output = ScalarQ;
            fn $op(self, rhs: &ScalarQ) -> ScalarQ {
                self.$method(rhs)
            }
        }
        impl core::ops::$Op<ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $op(self, rhs: ScalarQ) -> ScalarQ {
                self.$method(&rhs)
            }
        }
        impl core::ops::$Op<&ScalarQ> for ScalarQ {
            type Output = ScalarQ;
            fn $op(self, rhs: &ScalarQ) -> ScalarQ {
                self.$method(rhs)
            }
        }
        impl core::ops::$Op<ScalarQ> for &ScalarQ {
            type Output = ScalarQ;
            fn $op(self, rhs: ScalarQ) -> ScalarQ {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl core::ops::Div<&ScalarQ> for &ScalarQ {
    type Output = ScalarQ;
    /// Panics on a zero divisor; use [`ScalarQ::checked_div`] to report it.
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        self.checked_div(rhs).expect("division by zero ScalarQ")
    }
}
impl core::ops::Div<ScalarQ> for ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: ScalarQ) -> ScalarQ {
        (&self).div(&rhs)
    }
}
impl core::ops::Div<&ScalarQ> for ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        (&self).div(rhs)
    }
}
impl core::ops::Div<ScalarQ> for &ScalarQ {
    type Output = ScalarQ;
    fn div(self, rhs: ScalarQ) -> ScalarQ {
        self.div(&rhs)
    }
}

impl core::ops::Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        self.neg_ref()
    }
}
impl core::ops::Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        self.neg_ref()
    }
}

impl core::iter::Sum for ScalarQ {
    fn sum<I: Iterator<Item = ScalarQ>>(iter: I) -> ScalarQ {
        iter.fold(ScalarQ::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for ScalarQ {
    fn product<I: Iterator<Item = ScalarQ>>(iter: I) -> ScalarQ {
        iter.fold(ScalarQ::one(), |a, b| a * b)
    }
}

// ---- canonical text form ----

fn fmt_power(out: &mut String, e: i64) {
    // exponent in v-units; render as a power of q
    if e % 2 == 0 {
        let k = e / 2;
        if k == 1 {
            out.push('q');
        } else {
            out.push_str(&format!("q^{k}"));
        }
    } else {
        out.push_str(&format!("q^({e}/2)"));
    }
}

fn poly_to_string(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(i64, &BigInt)> = p.terms().filter(|(_, c)| !c.is_zero()).collect();
    terms.reverse();
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.abs();
        if *e == 0 {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&format!("{a}*"));
            }
            fmt_power(&mut out, *e);
        }
    }
    out
}

fn poly_term_count(p: &LaurentPoly) -> usize {
    p.terms().filter(|(_, c)| !c.is_zero()).count()
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&poly_to_string(&self.num));
        }
        let num = poly_to_string(&self.num);
        let den = poly_to_string(&self.den);
        if poly_term_count(&self.num) > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        f.write_str("/")?;
        if poly_term_count(&self.den) > 1 {
            write!(f, "({den})")
        } else {
            f.write_str(&den)
        }
    }
}

// ---- parser ----

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        let digits = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(BigInt::parse_bytes(digits.as_bytes(), 10).unwrap())
    }

    fn parse_sint(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.parse_uint()?;
        Ok(if neg { -n } else { n })
    }

    /// Exponent after `^`, returned in `v`-units.
    fn parse_exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            self.skip_ws();
            let n = self.parse_sint()?;
            self.skip_ws();
            let half = if self.eat(b'/') {
                self.skip_ws();
                let d = self.parse_uint()?;
                if d != BigInt::from(2) {
                    return self.err("only /2 exponents are supported");
                }
                true
            } else {
                false
            };
            self.skip_ws();
            if !self.eat(b')') {
                return self.err("expected ')' in exponent");
            }
            let n = n.to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?;
            Ok(if half { n } else { 2 * n })
        } else {
            let n = self.parse_sint()?;
            let n = n.to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?;
            Ok(2 * n)
        }
    }

    /// `q`, `q^3`, `q^-1`, `q^(1/2)`, `q^(-3/2)`; exponent in `v`-units.
    fn parse_qfactor(&mut self) -> Result<i64> {
        if !self.eat(b'q') {
            return self.err("expected 'q'");
        }
        if self.eat(b'^') {
            self.parse_exponent()
        } else {
            Ok(2)
        }
    }

    /// One additive term: `INT`, `INT*q^e`, `INTq^e`, or `q^e`.
    fn parse_term(&mut self) -> Result<LaurentPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'q') => {
                let e = self.parse_qfactor()?;
                Ok(LaurentPoly::monomial(BigInt::one(), e))
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.parse_uint()?;
                let save = self.pos;
                self.skip_ws();
                let star = self.eat(b'*');
                self.skip_ws();
                if self.peek() == Some(b'q') {
                    let e = self.parse_qfactor()?;
                    Ok(LaurentPoly::monomial(c, e))
                } else if star {
                    self.err("expected 'q' after '*'")
                } else {
                    self.pos = save;
                    Ok(LaurentPoly::monomial(c, 0))
                }
            }
            _ => self.err("expected a term"),
        }
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly> {
        self.skip_ws();
        let mut acc = LaurentPoly::zero();
        let mut sign_neg = self.eat(b'-');
        loop {
            let t = self.parse_term()?;
            acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign_neg = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign_neg = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_poly_expr(&mut self) -> Result<LaurentPoly> {
        self.skip_ws();
        if self.eat(b'(') {
            let p = self.parse_poly()?;
            self.skip_ws();
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            Ok(p)
        } else {
            self.parse_poly()
        }
    }
}

impl FromStr for ScalarQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<ScalarQ> {
        let mut cur = Cursor::new(s);
        let num = cur.parse_poly_expr()?;
        cur.skip_ws();
        let den = if cur.eat(b'/') {
            cur.parse_poly_expr()?
        } else {
            LaurentPoly::one()
        };
        cur.skip_ws();
        if cur.bump().is_some() {
            return cur.err("trailing input");
        }
        ScalarQ::fraction(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q() -> ScalarQ {
        ScalarQ::q_pow(1)
    }

    fn q_minus_qinv() -> ScalarQ {
        ScalarQ::q_pow(1) - ScalarQ::q_pow(-1)
    }

    // ---- q-integers and q-factorials ----

    #[test]
    fn qint_small_values() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        // [3] = q^2 + 1 + q^-2, checked against (q - q^-1)[3] = q^3 - q^-3
        let three = qint(3);
        let expected = ScalarQ::q_pow(2) + ScalarQ::one() + ScalarQ::q_pow(-2);
        assert_eq!(three, expected);
        assert_eq!(
            &three * &q_minus_qinv(),
            ScalarQ::q_pow(3) - ScalarQ::q_pow(-3)
        );
        assert_eq!(qint(-3), -qint(3));
        assert!(qint(5).denominator().is_one());
    }

    #[test]
    fn qfact_small_values() {
        assert!(qfact(0).is_one());
        assert!(qfact(1).is_one());
        assert_eq!(qfact(2), ScalarQ::q_pow(1) + ScalarQ::q_pow(-1));
        assert_eq!(qfact(3), qint(3) * qint(2));
    }

    #[test]
    fn qint_addition_identity() {
        // [m+n] = [m] q^n + q^-m [n], exact for all |m|, |n| <= 20
        for m in -20i64..=20 {
            for n in -20i64..=20 {
                let lhs = qint(m + n);
                let rhs = qint(m) * ScalarQ::q_pow(n) + ScalarQ::q_pow(-m) * qint(n);
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    // ---- field arithmetic ----

    #[test]
    fn arithmetic_examples() {
        let d = q_minus_qinv();
        assert!((&d / &d).is_one());
        assert_eq!(ScalarQ::v_pow(1).powi(2).unwrap(), q());
        // [2]^2 = [3] + [1]
        let lhs = qint(2) * qint(2) - qint(3) - ScalarQ::one();
        assert!(lhs.is_zero());
    }

    #[test]
    fn division_by_zero_reported() {
        assert_eq!(
            ScalarQ::one().checked_div(&ScalarQ::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(ScalarQ::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(ScalarQ::zero().powi(-1), Err(Error::DivisionByZero));
        assert!(ScalarQ::zero().powi(0).unwrap().is_one());
    }

    #[test]
    fn canonical_form_reduces() {
        // (-q^3 + q)/(q^2 - 1) = -q after reduction
        let num = ScalarQ::q_pow(3).neg_ref() + q();
        let den = ScalarQ::q_pow(2) - ScalarQ::one();
        let r = num / den;
        assert_eq!(r, -q());
        assert_eq!(r.to_string(), "-q");
    }

    #[test]
    fn negative_powers() {
        let x = qint(2);
        let y = x.powi(-2).unwrap();
        assert!((y * &x * &x).is_one());
    }

    // ---- numeric evaluation ----

    #[test]
    fn eval_examples() {
        let one = ScalarQ::one().eval_at(0.37).unwrap();
        assert!(one.dist(QComplex::ONE) < 1e-14);

        for &t in &[0.2, 0.41, 0.9] {
            let z = qint(2).eval_at(t).unwrap();
            let expected = QComplex::new(2.0 * libm::cos(core::f64::consts::PI * t), 0.0);
            assert!(z.dist(expected) < 1e-12, "t={t}");
        }

        let v = ScalarQ::v_pow(1).eval_at(0.5).unwrap();
        let expected = QComplex::unit_phase(core::f64::consts::PI / 4.0);
        assert!(v.dist(expected) < 1e-12);
    }

    #[test]
    fn eval_singularity_reported() {
        // 1/(q - q^-1) is singular at t = 0 where q = 1
        let s = ScalarQ::one() / q_minus_qinv();
        assert!(matches!(s.eval_at(0.0), Err(Error::EvalSingularity { .. })));
    }

    // ---- text form ----

    #[test]
    fn display_examples() {
        assert_eq!(ScalarQ::zero().to_string(), "0");
        assert_eq!(ScalarQ::from_int(-7).to_string(), "-7");
        assert_eq!(qint(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(ScalarQ::v_pow(1).to_string(), "q^(1/2)");
        assert_eq!((-ScalarQ::v_pow(-3)).to_string(), "-q^(-3/2)");
        assert_eq!(
            (ScalarQ::from_int(3) * ScalarQ::q_pow(2) + q()).to_string(),
            "3*q^2 + q"
        );
        let s = q() / (ScalarQ::q_pow(2) - ScalarQ::one());
        assert_eq!(s.to_string(), "q/(q^2 - 1)");
    }

    #[test]
    fn parse_round_trips() {
        for s in [
            "0",
            "1",
            "-1",
            "q",
            "-q",
            "q^(1/2)",
            "-q^(-3/2)",
            "q^2 + 1 + q^-2",
            "3*q^2 + q",
            "q/(q^2 - 1)",
            "(q^4 - q^2 + 1)/(q^2 + 1)",
        ] {
            let v: ScalarQ = s.parse().unwrap();
            assert_eq!(v.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_canonicalizes() {
        let v: ScalarQ = "(-q^3 + q)/(q^2 - 1)".parse().unwrap();
        assert_eq!(v, -q());
        let w: ScalarQ = " 2*q^-1  + q^-1 ".parse().unwrap();
        assert_eq!(w, ScalarQ::from_int(3) * ScalarQ::q_pow(-1));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<ScalarQ>().is_err());
        assert!("q +".parse::<ScalarQ>().is_err());
        assert!("1/0".parse::<ScalarQ>().is_err());
        assert!("q^(1/3)".parse::<ScalarQ>().is_err());
        assert!("2 * 3".parse::<ScalarQ>().is_err());
        assert!("q 1".parse::<ScalarQ>().is_err());
    }
}
