//! Exact rationals, residue tuples and the unit group action.
//!
//! Every sign decision downstream is made on exact values produced here; no
//! floating point is involved.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Reduced rational number with positive denominator.
///
/// Displays and serializes as `"p/q"` (integers as `"p/1"`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction(Rational64);

impl Fraction {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Fraction(Rational64::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Fraction(Rational64::from_integer(n))
    }

    pub fn zero() -> Self {
        Fraction(Rational64::zero())
    }

    pub fn one() -> Self {
        Fraction(Rational64::one())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Integral part `[x]` (floor).
    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    /// Fractional part `{x} = x - [x]`, in `[0, 1)`.
    pub fn fract(&self) -> Fraction {
        *self - Fraction::from_int(self.floor())
    }

    pub fn is_integer(&self) -> bool {
        self.denom() == 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFraction(s.to_string());
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Fraction::new(p, q))
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        Fraction(self.0 + rhs.0)
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Fraction) -> Fraction {
        Fraction(self.0 - rhs.0)
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        Fraction(self.0 * rhs.0)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |a, b| a + b)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// gcd of the modulus and all residues.
pub fn gcd_all(d: u32, ks: &[u32]) -> u32 {
    ks.iter().fold(d, |g, &k| g.gcd(&k))
}

/// Euler's totient.
pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
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
    result
}

pub fn divisors(d: u32) -> Vec<u32> {
    (1..=d).filter(|e| d % e == 0).collect()
}

/// A modulus `d >= 2` together with `n + 1 >= 3` residues in `[1, d-1]`.
///
/// Residue order is preserved: the skew-Hermitian form depends on it, the
/// fractional-part conditions do not.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ResidueTuple {
    d: u32,
    ks: Vec<u32>,
}

impl ResidueTuple {
    pub fn new(d: u32, ks: Vec<u32>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidModulus(d as u64));
        }
        if ks.len() < 3 {
            return Err(Error::TooFewResidues(ks.len()));
        }
        if let Some(&k) = ks.iter().find(|&&k| k == 0 || k >= d) {
            return Err(Error::ResidueOutOfRange { d, k });
        }
        Ok(ResidueTuple { d, ks })
    }

    /// Builds a tuple whose residues are known to be in range.
    pub(crate) fn new_unchecked(d: u32, ks: Vec<u32>) -> Self {
        debug_assert!(d >= 2 && ks.iter().all(|&k| k >= 1 && k < d));
        ResidueTuple { d, ks }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    /// `n`, one less than the number of residues.
    pub fn n(&self) -> usize {
        self.ks.len() - 1
    }

    pub fn sorted(&self) -> ResidueTuple {
        let mut ks = self.ks.clone();
        ks.sort_unstable();
        ResidueTuple { d: self.d, ks }
    }

    pub fn is_sorted(&self) -> bool {
        self.ks.windows(2).all(|w| w[0] <= w[1])
    }

    /// Residues `k_i t mod d` in the original order. `t` must be a unit.
    pub fn scaled(&self, t: u32) -> Result<ResidueTuple> {
        check_unit(self.d, t)?;
        Ok(self.scaled_unchecked(t))
    }

    fn scaled_unchecked(&self, t: u32) -> ResidueTuple {
        let d = self.d as u64;
        let ks = self
            .ks
            .iter()
            .map(|&k| ((k as u64 * t as u64) % d) as u32)
            .collect();
        ResidueTuple { d: self.d, ks }
    }

    /// Same modulus, residues sorted ascending and scaled by `t`.
    pub fn scaled_sorted(&self, t: u32) -> ResidueTuple {
        let mut r = self.scaled_unchecked(t);
        r.ks.sort_unstable();
        r
    }

    /// Adds one residue, keeping the modulus.
    pub fn extended(&self, k: u32) -> Result<ResidueTuple> {
        let mut ks = self.ks.clone();
        ks.push(k);
        ResidueTuple::new(self.d, ks)
    }
}

impl fmt::Display for ResidueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.d)?;
        for (i, k) in self.ks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// The unit group `(Z/dZ)^*` as a sorted list of residues.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct UnitGroup {
    pub d: u32,
    pub units: Vec<u32>,
}

impl UnitGroup {
    pub fn order(&self) -> usize {
        self.units.len()
    }

    pub fn contains(&self, s: u32) -> bool {
        self.units.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.units.iter().copied()
    }
}

/// All residues in `[1, d-1]` coprime to `d`. For `d = 2` this is `{1}`.
pub fn units(d: u32) -> UnitGroup {
    let units = (1..d.max(2)).filter(|&s| s.gcd(&d) == 1).collect();
    UnitGroup { d, units }
}

pub fn is_unit(d: u32, s: u32) -> bool {
    s % d != 0 && s.gcd(&d) == 1
}

pub(crate) fn check_unit(d: u32, s: u32) -> Result<()> {
    if is_unit(d, s) {
        Ok(())
    } else {
        Err(Error::NotAUnit { d, s })
    }
}

/// Remainder `l` with `k s = q d + l`, `1 <= l <= d-1`.
pub fn remainder(k: u32, d: u32, s: u32) -> u32 {
    ((k as u64 * s as u64) % d as u64) as u32
}

/// `{k s / d}` as a reduced fraction.
pub fn frac_part(k: u32, d: u32, s: u32) -> Result<Fraction> {
    if d < 2 {
        return Err(Error::InvalidModulus(d as u64));
    }
    if k % d == 0 {
        return Err(Error::ZeroResidue { d, k: k as u64 });
    }
    check_unit(d, s)?;
    Ok(Fraction::new(remainder(k, d, s) as i64, d as i64))
}

/// The `(Z/dZ)^*`-orbit of a tuple, each element stored sorted ascending.
pub fn orbit(tuple: &ResidueTuple) -> BTreeSet<ResidueTuple> {
    units(tuple.d)
        .iter()
        .map(|t| tuple.scaled_sorted(t))
        .collect()
}

/// The orbit as a multiset: how many units map the tuple to each sorted vector.
pub fn orbit_multiset(tuple: &ResidueTuple) -> BTreeMap<ResidueTuple, usize> {
    let mut out = BTreeMap::new();
    for t in units(tuple.d).iter() {
        *out.entry(tuple.scaled_sorted(t)).or_insert(0) += 1;
    }
    out
}

/// Lexicographically smallest sorted tuple in the orbit.
pub fn canonical_rep(tuple: &ResidueTuple) -> ResidueTuple {
    units(tuple.d)
        .iter()
        .map(|t| tuple.scaled_sorted(t))
        .min()
        .expect("unit group is never empty")
}

/// Same as [`canonical_rep`] on a raw slice, reusing a precomputed unit list.
pub(crate) fn canonical_ks(d: u32, ks: &[u32], units: &[u32]) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut buf = Vec::with_capacity(ks.len());
    for &t in units {
        buf.clear();
        buf.extend(ks.iter().map(|&k| remainder(k, d, t)));
        buf.sort_unstable();
        if best.as_ref().map_or(true, |b| buf < *b) {
            best = Some(buf.clone());
        }
    }
    best.expect("unit group is never empty")
}
