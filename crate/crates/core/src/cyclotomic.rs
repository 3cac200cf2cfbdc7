//! Exact arithmetic in the cyclotomic field `Q(zeta_d)`.
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^(phi(d)-1)`, always
//! reduced modulo the cyclotomic polynomial `Phi_d`, so equality is coefficient
//! equality. Coefficients are rational; internally an element keeps integer
//! numerators over one positive common denominator, normalized so that the
//! representation is unique.
//!
//! Each conductor's `Phi_d` and its table of reduced powers `zeta^e` is built once
//! and cached for the life of the process.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{check_unit, Fraction};
use crate::{Error, Result};

/// The `d`-th cyclotomic polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloPoly {
    pub d: u32,
    pub coeffs: Vec<i64>,
}

impl CycloPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Exact quotient of integer polynomials; `divisor` must be monic.
fn div_exact_monic(dividend: &[i64], divisor: &[i64]) -> Option<Vec<i64>> {
    let dn = divisor.len() - 1;
    if dividend.len() <= dn {
        return None;
    }
    debug_assert_eq!(divisor[dn], 1);
    let mut rem = dividend.to_vec();
    let mut quot = vec![0i64; dividend.len() - dn];
    for e in (dn..rem.len()).rev() {
        let c = rem[e];
        if c == 0 {
            continue;
        }
        quot[e - dn] = c;
        for (i, &p) in divisor.iter().enumerate() {
            rem[e - dn + i] -= c * p;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        None
    } else {
        Some(quot)
    }
}

fn build_cyclotomic(d: u32) -> Result<CycloPoly> {
    if d == 0 {
        return Err(Error::InvalidModulus(0));
    }
    // x^d - 1
    let mut acc = vec![0i64; d as usize + 1];
    acc[0] = -1;
    acc[d as usize] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        let phi_e = field(e)?.poly.coeffs.clone();
        acc = div_exact_monic(&acc, &phi_e).ok_or(Error::ReductionRemainder(d))?;
    }
    Ok(CycloPoly { d, coeffs: acc })
}

/// Per-conductor data: `Phi_d` and `zeta^e` reduced for `e = 0..d`.
pub(crate) struct Field {
    pub d: u32,
    pub phi: usize,
    pub poly: CycloPoly,
    powers: Vec<Vec<i128>>,
}

impl Field {
    fn new(poly: CycloPoly) -> Field {
        let d = poly.d;
        let phi = poly.degree();
        let mut powers = Vec::with_capacity(d as usize);
        let mut cur = vec![0i128; phi];
        cur[0] = 1;
        for _ in 0..d {
            powers.push(cur.clone());
            // multiply by zeta, then fold the top coefficient back in
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly.coeffs[i] as i128;
                }
            }
        }
        Field {
            d,
            phi,
            poly,
            powers,
        }
    }

    pub(crate) fn power(&self, e: i64) -> &[i128] {
        &self.powers[e.rem_euclid(self.d as i64) as usize]
    }

    /// Reduces a raw product (length up to `2 phi - 1`) in place to length `phi`.
    pub(crate) fn reduce(&self, buf: &mut Vec<i128>) -> Result<()> {
        let phi = self.phi;
        let c = &self.poly.coeffs;
        for e in (phi..buf.len()).rev() {
            let top = buf[e];
            if top == 0 {
                continue;
            }
            for i in 0..phi {
                let t = top.checked_mul(c[i] as i128).ok_or(Error::Overflow)?;
                buf[e - phi + i] = buf[e - phi + i].checked_sub(t).ok_or(Error::Overflow)?;
            }
        }
        buf.truncate(phi);
        Ok(())
    }
}

fn cache() -> &'static RwLock<HashMap<u32, &'static Field>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, &'static Field>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn field(d: u32) -> Result<&'static Field> {
    if let Some(f) = cache().read().expect("cache poisoned").get(&d) {
        return Ok(f);
    }
    let poly = build_cyclotomic(d)?;
    let mut w = cache().write().expect("cache poisoned");
    // leaked once per conductor; bounded by the set of conductors ever used
    let f: &'static Field = w.entry(d).or_insert_with(|| Box::leak(Box::new(Field::new(poly))));
    Ok(f)
}

/// `Phi_d`, built by exact division of `x^d - 1` by `Phi_e` for every proper divisor `e`.
pub fn cyclotomic_poly(d: u32) -> Result<CycloPoly> {
    Ok(field(d)?.poly.clone())
}

/// Element of `Q(zeta_d)`.
#[derive(Clone)]
pub struct CycloElem {
    field: &'static Field,
    num: Vec<i128>,
    den: i128,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.d == other.field.d && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloElem {}

impl Hash for CycloElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.d.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})[", self.field.d)?;
        for (i, c) in self.num.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]/{}", self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn normalize(num: &mut [i128], den: &mut i128) {
    if num.iter().all(|&c| c == 0) {
        *den = 1;
        return;
    }
    if *den < 0 {
        *den = -*den;
        num.iter_mut().for_each(|c| *c = -*c);
    }
    if *den == 1 {
        return;
    }
    let mut g = *den;
    for &c in num.iter() {
        if c != 0 {
            g = g.gcd(&c);
            if g == 1 {
                return;
            }
        }
    }
    if g > 1 {
        *den /= g;
        num.iter_mut().for_each(|c| *c /= g);
    }
}

impl CycloElem {
    fn from_parts(field: &'static Field, mut num: Vec<i128>, mut den: i128) -> CycloElem {
        normalize(&mut num, &mut den);
        CycloElem { field, num, den }
    }

    pub fn zero(d: u32) -> Result<CycloElem> {
        let f = field(d)?;
        Ok(CycloElem {
            field: f,
            num: vec![0; f.phi],
            den: 1,
        })
    }

    pub fn one(d: u32) -> Result<CycloElem> {
        Self::from_int(d, 1)
    }

    pub fn from_int(d: u32, n: i64) -> Result<CycloElem> {
        let mut z = Self::zero(d)?;
        z.num[0] = n as i128;
        Ok(z)
    }

    pub fn from_fraction(d: u32, q: Fraction) -> Result<CycloElem> {
        let f = field(d)?;
        let mut num = vec![0; f.phi];
        num[0] = q.numer() as i128;
        Ok(Self::from_parts(f, num, q.denom() as i128))
    }

    /// Builds an element from power-basis coefficients (length `phi(d)`).
    pub fn from_coeffs(d: u32, coeffs: &[Fraction]) -> Result<CycloElem> {
        let f = field(d)?;
        if coeffs.len() != f.phi {
            return Err(Error::WrongArity {
                expected: f.phi,
                got: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(1i128, |l, q| l.lcm(&(q.denom() as i128)));
        let num = coeffs
            .iter()
            .map(|q| q.numer() as i128 * (den / q.denom() as i128))
            .collect();
        Ok(Self::from_parts(f, num, den))
    }

    /// `zeta_d^e`; any integer exponent, reduced mod `d`.
    pub fn root_power(d: u32, e: i64) -> Result<CycloElem> {
        let f = field(d)?;
        Ok(CycloElem {
            field: f,
            num: f.power(e).to_vec(),
            den: 1,
        })
    }

    pub fn d(&self) -> u32 {
        self.field.d
    }

    pub fn phi(&self) -> usize {
        self.field.phi
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.den == 1 && self.num[0] == 1 && self.num[1..].iter().all(|&c| c == 0)
    }

    /// All power-basis coefficients are integers (the element lies in `Z[zeta_d]`).
    pub fn is_integral(&self) -> bool {
        self.den == 1
    }

    /// Common-denominator numerators.
    pub fn numerators(&self) -> &[i128] {
        &self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    /// Power-basis coefficients as reduced fractions.
    pub fn coeffs(&self) -> Result<Vec<Fraction>> {
        let den: i64 = self.den.try_into().map_err(|_| Error::Overflow)?;
        self.num
            .iter()
            .map(|&c| {
                let c: i64 = c.try_into().map_err(|_| Error::Overflow)?;
                Ok(Fraction::new(c, den))
            })
            .collect()
    }

    /// The rational number this element equals, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Fraction> {
        if self.num[1..].iter().any(|&c| c != 0) {
            return None;
        }
        let n: i64 = self.num[0].try_into().ok()?;
        let d: i64 = self.den.try_into().ok()?;
        Some(Fraction::new(n, d))
    }

    fn check_same(&self, other: &CycloElem) -> Result<()> {
        if self.field.d != other.field.d {
            Err(Error::ConductorMismatch(self.field.d, other.field.d))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &CycloElem) -> Result<CycloElem> {
        self.add_sub(other, false)
    }

    pub fn try_sub(&self, other: &CycloElem) -> Result<CycloElem> {
        self.add_sub(other, true)
    }

    fn add_sub(&self, other: &CycloElem, negate: bool) -> Result<CycloElem> {
        self.check_same(other)?;
        let sign: i128 = if negate { -1 } else { 1 };
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(&a, &b)| a.checked_add(sign * b).ok_or(Error::Overflow))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::from_parts(self.field, num, self.den));
        }
        let g = self.den.gcd(&other.den);
        let sa = other.den / g;
        let sb = self.den / g;
        let den = self.den.checked_mul(sa).ok_or(Error::Overflow)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(&a, &b)| {
                let x = a.checked_mul(sa).ok_or(Error::Overflow)?;
                let y = b.checked_mul(sb).ok_or(Error::Overflow)?;
                x.checked_add(sign * y).ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.field, num, den))
    }

    pub fn try_mul(&self, other: &CycloElem) -> Result<CycloElem> {
        self.check_same(other)?;
        let phi = self.field.phi;
        let mut buf = vec![0i128; 2 * phi - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                buf[i + j] = buf[i + j].checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        self.field.reduce(&mut buf)?;
        let den = self.den.checked_mul(other.den).ok_or(Error::Overflow)?;
        Ok(Self::from_parts(self.field, buf, den))
    }

    pub fn try_div(&self, other: &CycloElem) -> Result<CycloElem> {
        self.check_same(other)?;
        self.try_mul(&other.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Phi_d`
    /// over `Q`.
    pub fn inverse(&self) -> Result<CycloElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.field.d));
        }
        let modulus: Vec<BigRational> = self
            .field
            .poly
            .coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let den = BigInt::from(self.den);
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|&c| BigRational::new(BigInt::from(c), den.clone()))
            .collect();
        let inv = poly_inverse_mod(&a, &modulus).ok_or(Error::DivisionByZero(self.field.d))?;
        let mut common = BigInt::one();
        for c in &inv {
            common = common.lcm(c.denom());
        }
        let mut num = vec![0i128; self.field.phi];
        for (slot, c) in num.iter_mut().zip(&inv) {
            let v = c.numer() * (&common / c.denom());
            *slot = v.to_i128().ok_or(Error::Overflow)?;
        }
        let den = common.to_i128().ok_or(Error::Overflow)?;
        Ok(Self::from_parts(self.field, num, den))
    }

    pub fn arith(&self, other: &CycloElem, op: ArithOp) -> Result<CycloElem> {
        match op {
            ArithOp::Add => self.try_add(other),
            ArithOp::Sub => self.try_sub(other),
            ArithOp::Mul => self.try_mul(other),
            ArithOp::Div => self.try_div(other),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<CycloElem> {
        let mut base = self.clone();
        let mut acc = CycloElem::one(self.d())?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Image under the automorphism `zeta -> zeta^s`.
    pub fn galois(&self, s: u32) -> Result<CycloElem> {
        let d = self.field.d;
        check_unit(d, s)?;
        let phi = self.field.phi;
        let mut out = vec![0i128; phi];
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.field.power(i as i64 * s as i64);
            for (o, &v) in out.iter_mut().zip(img) {
                let t = c.checked_mul(v).ok_or(Error::Overflow)?;
                *o = o.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::from_parts(self.field, out, self.den))
    }

    /// Complex conjugate, i.e. `galois(d - 1)`.
    pub fn conj(&self) -> Result<CycloElem> {
        if self.field.d <= 2 {
            return Ok(self.clone());
        }
        self.galois(self.field.d - 1)
    }

    /// Numerical value at the embedding `zeta -> exp(2 pi i s / d)`.
    pub fn embed(&self, s: u32) -> Result<Complex64> {
        let d = self.field.d;
        check_unit(d, s)?;
        let den = self.den as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = ((i as u64 * s as u64) % d as u64) as f64;
            let theta = 2.0 * std::f64::consts::PI * e / d as f64;
            z += Complex64::from_polar(c as f64 / den, theta);
        }
        Ok(z)
    }
}

/// Inverse of `a` modulo the irreducible `m` over `Q`, or `None` if not coprime.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let inv: Vec<BigRational> = t0.into_iter().map(|x| x / &c).collect();
    let (_, rem) = poly_divmod(&inv, m);
    let mut out = rem;
    out.resize(m.len() - 1, BigRational::zero());
    Some(out)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(out)
}

/// Panics on conductor mismatch or overflow; use [`CycloElem::arith`] to get a `Result`.
macro_rules! forward_op {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&CycloElem> for &CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: &CycloElem) -> CycloElem {
                self.$call(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                (&self).$call(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            field: self.field,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den,
        }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycloElemRepr {
    d: u32,
    coeffs: Vec<Fraction>,
}

impl Serialize for CycloElem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coeffs().map_err(serde::ser::Error::custom)?;
        CycloElemRepr {
            d: self.d(),
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycloElem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = CycloElemRepr::deserialize(deserializer)?;
        CycloElem::from_coeffs(r.d, &r.coeffs).map_err(serde::de::Error::custom)
    }
}

/// Conjugate pairs embed to reals: `a + conj(a)` has no imaginary part.
pub fn is_conjugation_invariant(a: &CycloElem) -> Result<bool> {
    Ok(a.conj()? == *a)
}

/// Numerically checks the sign of a real-valued element at embedding `s`.
pub fn real_sign_at(a: &CycloElem, s: u32) -> Result<Option<i8>> {
    let z = a.embed(s)?;
    if z.re.abs() < 1e-9 {
        Ok(None)
    } else {
        Ok(Some(if z.re > 0.0 { 1 } else { -1 }))
    }
}

impl CycloElem {
    /// `a / b` for rational scalars, exact.
    pub fn scale(&self, q: Fraction) -> Result<CycloElem> {
        let num = self
            .num
            .iter()
            .map(|&c| c.checked_mul(q.numer() as i128).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let den = self
            .den
            .checked_mul(q.denom() as i128)
            .ok_or(Error::Overflow)?;
        if q.is_zero() {
            return CycloElem::zero(self.d());
        }
        Ok(Self::from_parts(self.field, num, den))
    }

    pub fn abs_max_numerator(&self) -> i128 {
        self.num.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(d: u32, e: i64) -> CycloElem {
        CycloElem::root_power(d, e).unwrap()
    }

    fn int(d: u32, n: i64) -> CycloElem {
        CycloElem::from_int(d, n).unwrap()
    }

    #[test]
    fn cyclotomic_poly_examples() {
        assert_eq!(cyclotomic_poly(1).unwrap().coeffs, vec![-1, 1]);
        assert_eq!(cyclotomic_poly(6).unwrap().coeffs, vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12).unwrap().coeffs, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(5).unwrap().coeffs, vec![1, 1, 1, 1, 1]);
        // first coefficient of absolute value 2
        assert!(cyclotomic_poly(105).unwrap().coeffs.contains(&-2));
        assert!(cyclotomic_poly(0).is_err());
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for d in 1..=120 {
            let p = cyclotomic_poly(d).unwrap();
            assert_eq!(p.degree() as u32, crate::arith::euler_phi(d).max(1));
            assert_eq!(*p.coeffs.last().unwrap(), 1);
        }
    }

    #[test]
    fn root_power_examples() {
        assert!(z(6, 0).is_one());
        // zeta^2 = zeta - 1 modulo x^2 - x + 1
        assert_eq!(z(6, 2).numerators(), &[-1, 1]);
        // zeta^5 = zeta^{-1} = 1 - zeta
        assert_eq!(z(6, 5).numerators(), &[1, -1]);
        assert_eq!(z(6, -1), z(6, 5));
    }

    #[test]
    fn arith_examples() {
        assert!((&z(6, 1) * &z(6, 5)).is_one());
        let a = &int(6, 1) - &z(6, 1);
        assert!(a.try_div(&a).unwrap().is_one());
        assert_eq!(&z(6, 1) + &z(6, 5), int(6, 1));
    }

    #[test]
    fn division_by_zero_is_distinct() {
        let zero = CycloElem::zero(7).unwrap();
        assert_eq!(z(7, 1).try_div(&zero), Err(Error::DivisionByZero(7)));
        assert_eq!(
            z(7, 1).try_add(&z(5, 1)),
            Err(Error::ConductorMismatch(7, 5))
        );
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(6, 1).galois(5).unwrap(), z(6, 5));
        let a = &z(12, 1) + &(&z(12, 3) * &int(12, 4));
        assert_eq!(a.galois(1).unwrap(), a);
        for s in [1u32, 5, 7, 11] {
            for t in [1u32, 5, 7, 11] {
                assert_eq!(
                    a.galois(s).unwrap().galois(t).unwrap(),
                    a.galois(s * t % 12).unwrap()
                );
            }
        }
        assert!(a.galois(2).is_err());
    }

    #[test]
    fn embed_examples() {
        let v = z(6, 1).embed(1).unwrap();
        assert!((v.re - 0.5).abs() < 1e-12);
        assert!((v.im - 0.8660254037844386).abs() < 1e-12);
        for s in [1, 5] {
            let v = int(6, 1).embed(s).unwrap();
            assert!((v.re - 1.0).abs() < 1e-12 && v.im.abs() < 1e-12);
        }
        let v = (&z(6, 1) + &z(6, 5)).embed(1).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12 && v.im.abs() < 1e-12);
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        for d in [2u32, 3, 4, 5, 6, 12, 15, 30, 60] {
            for k in 1..d {
                let a = &int(d, 1) - &z(d, k as i64);
                let inv = a.inverse().unwrap();
                assert!((&a * &inv).is_one(), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn root_power_order() {
        for d in 2..=30u32 {
            for e in 0..d {
                let g = crate::arith::gcd(d as u64, e as u64) as u32;
                let ord = d / g;
                let r = z(d, e as i64);
                assert!(r.pow(ord).unwrap().is_one());
                for m in 1..ord {
                    if ord % m == 0 {
                        assert!(!r.pow(m).unwrap().is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let a = (&int(6, 1) - &z(6, 1)).inverse().unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["d"], 6);
        assert_eq!(v["coeffs"].as_array().unwrap().len(), 2);
        let back: CycloElem = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
    }
}
