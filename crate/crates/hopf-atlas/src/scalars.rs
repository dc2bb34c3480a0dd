//! Exact arithmetic in Q and in cyclotomic fields Q(ζ_N).
//!
//! An element of Q(ζ_N) is a coordinate vector of length φ(N) in the power
//! basis 1, ζ, …, ζ^{φ(N)-1}, always reduced modulo Φ_N, so equality is
//! plain coordinate equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Reduced fraction with a positive denominator (zero is 0/1).
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mismatched cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to}): {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("bad fraction literal {0:?}")]
    BadLiteral(String),
    #[error("coordinate vector has length {got}, expected phi({n}) = {want}")]
    BadLength { n: u32, got: usize, want: usize },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` text form used by the file formats (integers are written `p/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::BadLiteral(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn int_poly_cyclotomic(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d; exact integer division
    // since every Φ_d is monic.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = int_poly_cyclotomic(d);
        num = poly_div_monic(&num, &den);
    }
    num
}

fn poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// Φ_N with rational coefficients, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<Rational> {
    assert!(n >= 1, "cyclotomic order must be positive");
    int_poly_cyclotomic(n)
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}

/// Human-readable polynomial, e.g. `x^4 - x^2 + 1`.
pub fn format_poly(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug)]
struct FieldData {
    n: u32,
    phi: usize,
    /// Φ_N as integers, lowest degree first.
    poly: Vec<BigInt>,
    /// x^k mod Φ_N for k < 2φ - 1, as integer coordinate vectors.
    reduce: Vec<Vec<BigInt>>,
}

/// Handle on Q(ζ_N); cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}
impl Eq for Field {}

impl Field {
    pub fn new(n: u32) -> Field {
        assert!(n >= 1, "cyclotomic order must be positive");
        let poly = int_poly_cyclotomic(n);
        let phi = poly.len() - 1;
        let top = (2 * phi).max(1);
        let mut reduce: Vec<Vec<BigInt>> = Vec::with_capacity(top);
        for k in 0..top {
            if k < phi {
                let mut v = vec![BigInt::zero(); phi];
                v[k] = BigInt::one();
                reduce.push(v);
            } else {
                // x^k = x * x^{k-1}; shift and fold the overflowing coefficient.
                let prev = &reduce[k - 1];
                let mut v = vec![BigInt::zero(); phi];
                let carry = prev[phi - 1].clone();
                for j in (1..phi).rev() {
                    v[j] = prev[j - 1].clone();
                }
                if !carry.is_zero() {
                    for j in 0..phi {
                        v[j] -= &carry * &poly[j];
                    }
                }
                reduce.push(v);
            }
        }
        Field(Arc::new(FieldData { n, phi, poly, reduce }))
    }

    pub fn try_new(n: u32) -> Result<Field, ScalarError> {
        if n == 0 {
            return Err(ScalarError::ZeroOrder);
        }
        Ok(Field::new(n))
    }

    pub fn order(&self) -> u32 {
        self.0.n
    }

    pub fn degree(&self) -> usize {
        self.0.phi
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), coords: vec![Rational::zero(); self.0.phi] }
    }

    pub fn one(&self) -> FieldElem {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, k: i64) -> FieldElem {
        self.from_rational(rat_int(k))
    }

    pub fn from_frac(&self, n: i64, d: i64) -> FieldElem {
        self.from_rational(rat(n, d))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElem {
        let mut e = self.zero();
        e.coords[0] = r;
        e
    }

    pub fn from_coords(&self, coords: Vec<Rational>) -> Result<FieldElem, ScalarError> {
        if coords.len() != self.0.phi {
            return Err(ScalarError::BadLength { n: self.0.n, got: coords.len(), want: self.0.phi });
        }
        Ok(FieldElem { field: self.clone(), coords })
    }

    /// ζ_N^k for any integer k (negative powers allowed).
    pub fn zeta_pow(&self, k: i64) -> FieldElem {
        let n = self.0.n as i64;
        let k = k.rem_euclid(n) as usize;
        self.reduce_poly(&monomial(k))
    }

    pub fn zeta(&self) -> FieldElem {
        self.zeta_pow(1)
    }

    /// Reduce an arbitrary-degree polynomial in ζ modulo Φ_N.
    fn reduce_poly(&self, c: &[Rational]) -> FieldElem {
        let phi = self.0.phi;
        let mut out = vec![Rational::zero(); phi];
        let mut tail: Vec<Rational> = Vec::new();
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += ck;
            } else if k < self.0.reduce.len() {
                for (j, r) in self.0.reduce[k].iter().enumerate() {
                    if !r.is_zero() {
                        out[j] += ck * Rational::from_integer(r.clone());
                    }
                }
            } else {
                if tail.len() < c.len() {
                    tail = vec![Rational::zero(); c.len()];
                }
                tail[k] = ck.clone();
            }
        }
        if !tail.is_empty() {
            // Degrees beyond the table: long division by the monic Φ_N.
            let mut rem = tail;
            for k in (self.0.reduce.len()..rem.len()).rev() {
                let ck = std::mem::take(&mut rem[k]);
                if ck.is_zero() {
                    continue;
                }
                for (j, pj) in self.0.poly.iter().enumerate().take(phi) {
                    if !pj.is_zero() {
                        rem[k - phi + j] -= &ck * Rational::from_integer(pj.clone());
                    }
                }
            }
            let e = self.reduce_poly(&rem);
            for j in 0..phi {
                out[j] += &e.coords[j];
            }
        }
        FieldElem { field: self.clone(), coords: out }
    }

    /// Every root of unity in the field: μ_N, or μ_{2N} when N is odd.
    pub fn roots_of_unity(&self) -> Vec<FieldElem> {
        let n = self.0.n as i64;
        let mut out: Vec<FieldElem> = (0..n).map(|k| self.zeta_pow(k)).collect();
        if n % 2 == 1 {
            let m1 = self.from_int(-1);
            out.extend((0..n).map(|k| &m1 * &self.zeta_pow(k)));
        }
        out
    }
}

fn monomial(k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); k + 1];
    v[k] = Rational::one();
    v
}

/// Element of Q(ζ_N) in canonical reduced coordinates.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.0.n == other.field.0.n && self.coords == other.coords
    }
}
impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.0.n.hash(state);
        self.coords.hash(state);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary operation: errors on mismatched orders or division by zero.
pub fn field_arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, ScalarError> {
    if a.order() != b.order() {
        return Err(ScalarError::OrderMismatch(a.order(), b.order()));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.0.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.is_rational()
    }

    fn same_field(&self, other: &FieldElem) {
        assert_eq!(
            self.field.0.n, other.field.0.n,
            "mixed cyclotomic orders in an unchecked operation"
        );
    }

    pub fn scale(&self, r: &Rational) -> FieldElem {
        FieldElem { field: self.field.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<FieldElem, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        // Extended Euclid in Q[x] between a(x) and Φ_N(x); Φ_N is irreducible,
        // so the gcd is a nonzero constant.
        let phi_poly: Vec<Rational> =
            self.field.0.poly.iter().cloned().map(Rational::from_integer).collect();
        let (g, s) = ext_euclid(&self.coords, &phi_poly);
        debug_assert_eq!(trim(&g).len(), 1);
        let c = g[0].recip();
        let s: Vec<Rational> = s.iter().map(|x| x * &c).collect();
        Ok(self.field.reduce_poly(&s))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem, ScalarError> {
        if self.order() != other.order() {
            return Err(ScalarError::OrderMismatch(self.order(), other.order()));
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<FieldElem, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Image under ζ_N ↦ ζ_M^{M/N}.
    pub fn embed(&self, m: u32) -> Result<FieldElem, ScalarError> {
        let n = self.order();
        if m == 0 || m % n != 0 {
            return Err(ScalarError::NotDivisible { from: n, to: m });
        }
        Ok(self.embed_into(&Field::new(m)))
    }

    /// Same as [`embed`](Self::embed) with a caller-supplied target field.
    pub fn embed_into(&self, target: &Field) -> FieldElem {
        let n = self.order();
        let m = target.order();
        assert!(m % n == 0, "embedding requires N | M");
        if n == m {
            return FieldElem { field: target.clone(), coords: self.coords.clone() };
        }
        let step = (m / n) as usize;
        let mut poly = vec![Rational::zero(); (self.coords.len().max(1) - 1) * step + 1];
        for (k, c) in self.coords.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        target.reduce_poly(&poly)
    }

    /// Least k ≥ 1 with self^k = 1, searching up to `cap`.
    pub fn multiplicative_order(&self, cap: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

fn trim(p: &[Rational]) -> &[Rational] {
    let mut len = p.len();
    while len > 0 && p[len - 1].is_zero() {
        len -= 1;
    }
    &p[..len]
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    // a - q*b
    let mut out = a.to_vec();
    let need = q.len() + b.len();
    if out.len() < need {
        out.resize(need, Rational::zero());
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(&out).to_vec()
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b);
    let mut r = trim(a).to_vec();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b[b.len() - 1].clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let c = &r[r.len() - 1] / &lead;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r = trim(&r).to_vec();
    }
    (q, r)
}

/// Returns (g, s) with s·a ≡ g (mod b).
fn ext_euclid(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = trim(b).to_vec();
    let mut r1 = trim(a).to_vec();
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl<'a> std::ops::Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        FieldElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> std::ops::Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        FieldElem {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> std::ops::Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.same_field(rhs);
        if rhs.is_rational() {
            return self.scale(&rhs.coords[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coords[0]);
        }
        let phi = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce_poly(&prod)
    }
}

impl std::ops::Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl std::ops::AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        self.same_field(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl std::ops::SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        self.same_field(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl FieldElem {
    /// self += a * b, the inner loop of every contraction.
    pub fn add_mul(&mut self, a: &FieldElem, b: &FieldElem) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_rational() && b.is_rational() {
            let p = &a.coords[0] * &b.coords[0];
            self.coords[0] += p;
            return;
        }
        let p = a * b;
        *self += &p;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.order());
        f.write_str(&format_poly(&self.coords, &var))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// Least common multiple helper for field orders.
pub fn lcm_order(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_arithmetic() {
        let f4 = Field::new(4);
        let z = f4.zeta();
        assert_eq!(&z * &z, f4.from_int(-1));
        let f3 = Field::new(3);
        let w = f3.zeta();
        let s = &(&f3.one() + &w) + &(&w * &w);
        assert!(s.is_zero());
        let a = &f4.one() + &z;
        let b = &f4.one() - &z;
        let q = (&a * &b).checked_div(&f4.from_int(2)).unwrap();
        assert!(q.is_one());
    }

    #[test]
    fn frozen_polys() {
        assert_eq!(format_poly(&cyclotomic_poly(1), "x"), "x - 1");
        assert_eq!(format_poly(&cyclotomic_poly(4), "x"), "x^2 + 1");
        assert_eq!(format_poly(&cyclotomic_poly(12), "x"), "x^4 - x^2 + 1");
        assert_eq!(format_poly(&cyclotomic_poly(6), "x"), "x^2 - x + 1");
    }

    #[test]
    fn frozen_embeddings() {
        let minus_one = Field::new(2).from_int(-1);
        assert_eq!(minus_one.embed(4).unwrap(), Field::new(4).from_int(-1));
        assert_eq!(Field::new(3).zeta().embed(6).unwrap(), Field::new(6).zeta_pow(2));
        let f12 = Field::new(12);
        let e = Field::new(4).zeta().embed(12).unwrap();
        assert_eq!(e, f12.zeta_pow(3));
        assert_eq!(e.multiplicative_order(100), Some(4));
        assert!(Field::new(4).zeta().embed(6).is_err());
    }

    #[test]
    fn errors_are_explicit() {
        let f = Field::new(5);
        assert_eq!(f.zero().inv(), Err(ScalarError::DivisionByZero));
        let g = Field::new(7);
        assert!(matches!(
            field_arith(&f.one(), &g.one(), ArithOp::Add),
            Err(ScalarError::OrderMismatch(5, 7))
        ));
        assert!(field_arith(&f.one(), &f.zero(), ArithOp::Div).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(20);
        let a = &(&f.zeta() + &f.from_frac(3, 7)) - &f.zeta_pow(5).scale(&rat(2, 3));
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn literals() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat_int(0)), "0/1");
        assert!(parse_rational("1/0").is_err());
    }
}
