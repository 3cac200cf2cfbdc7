//! The tridiagonal skew-Hermitian form attached to a residue tuple, its principal
//! minors, and the anisotropy test at every complex embedding.
//!
//! With `x_i = zeta_d^(k_i s)` the form on `n = len - 1` basis vectors is
//!
//! ```text
//! h(e_i, e_i)     = (1 - x_i x_{i+1}) / ((1 - x_i)(1 - x_{i+1}))
//! h(e_i, e_{i+1}) = -1 / (1 - x_{i+1})
//! h(e_{i+1}, e_i) = -x_{i+1} / (1 - x_{i+1})
//! ```
//!
//! and zero elsewhere. Its leading minors are
//! `u_j = (1 - x_1...x_{j+1}) / ((1 - x_1)...(1 - x_{j+1}))`, and the form is
//! anisotropic at the embedding `s` exactly when every `u_j` is nonzero and every
//! `beta_j = u_{j+1} u_{j-1} / u_j^2` is positive.

use std::f64::consts::PI;

use serde::Serialize;

use crate::arith::{check_unit, gcd, units, Fraction, ResidueTuple};
use crate::cyclotomic::CycloElem;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkewHermitianForm {
    pub n: usize,
    pub entries: Vec<Vec<CycloElem>>,
    pub source: ResidueTuple,
    pub embedding_unit: u32,
}

impl SkewHermitianForm {
    /// `h[j][i] == -conj(h[i][j])` for all entries.
    pub fn is_skew_hermitian(&self) -> Result<bool> {
        for i in 0..self.n {
            for j in 0..self.n {
                let c = self.entries[i][j].conj()?;
                if self.entries[j][i] != -c {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_tridiagonal(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i.abs_diff(j) < 2 || self.entries[i][j].is_zero())
        })
    }

    /// Entrywise Galois image.
    pub fn galois(&self, s: u32) -> Result<SkewHermitianForm> {
        let d = self.source.d();
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.galois(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(SkewHermitianForm {
            n: self.n,
            entries,
            source: self.source.clone(),
            embedding_unit: (self.embedding_unit as u64 * s as u64 % d as u64) as u32,
        })
    }

    pub fn transpose(&self) -> SkewHermitianForm {
        let entries = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        SkewHermitianForm {
            entries,
            ..self.clone()
        }
    }
}

/// Exponents `e_i = k_i s mod d`, rejecting any that vanish.
fn exponents(tuple: &ResidueTuple, s: u32) -> Result<Vec<u32>> {
    let d = tuple.d();
    check_unit(d, s)?;
    tuple
        .ks()
        .iter()
        .map(|&k| {
            let e = (k as u64 * s as u64 % d as u64) as u32;
            if e == 0 {
                Err(Error::ZeroResidue { d, k: k as u64 * s as u64 })
            } else {
                Ok(e)
            }
        })
        .collect()
}

fn one_minus_root(d: u32, e: i64) -> Result<CycloElem> {
    CycloElem::one(d)?.try_sub(&CycloElem::root_power(d, e)?)
}

/// `1/(1 - w)` for `w = zeta_d^e` of order `m > 1`, as `-(1/m) sum_{j<m} j w^j`.
fn inv_one_minus_root(d: u32, e: i64) -> Result<CycloElem> {
    let r = e.rem_euclid(d as i64);
    if r == 0 {
        return Err(Error::DivisionByZero(d));
    }
    let m = d as i64 / gcd(d as u64, r as u64) as i64;
    let mut acc = CycloElem::zero(d)?;
    for j in 1..m {
        acc = acc.try_add(&CycloElem::root_power(d, r * j)?.scale(Fraction::from_int(j))?)?;
    }
    acc.scale(Fraction::new(-1, m))
}

/// The form specialized at `X_i -> zeta_d^(k_i s)`.
pub fn build_h(tuple: &ResidueTuple, s: u32) -> Result<SkewHermitianForm> {
    let d = tuple.d();
    let e = exponents(tuple, s)?;
    let n = tuple.n();
    let x: Vec<CycloElem> = e
        .iter()
        .map(|&e| CycloElem::root_power(d, e as i64))
        .collect::<Result<_>>()?;
    let inv: Vec<CycloElem> = e
        .iter()
        .map(|&e| inv_one_minus_root(d, e as i64))
        .collect::<Result<_>>()?;
    let zero = CycloElem::zero(d)?;
    let mut entries = vec![vec![zero; n]; n];
    for i in 0..n {
        let num = one_minus_root(d, e[i] as i64 + e[i + 1] as i64)?;
        entries[i][i] = num.try_mul(&inv[i])?.try_mul(&inv[i + 1])?;
        if i + 1 < n {
            entries[i][i + 1] = -&inv[i + 1];
            entries[i + 1][i] = -(x[i + 1].try_mul(&inv[i + 1])?);
        }
    }
    Ok(SkewHermitianForm {
        n,
        entries,
        source: tuple.clone(),
        embedding_unit: s,
    })
}

/// The 2x2 matrix written out for triples, with `x_2` on the upper off-diagonal.
/// It is the transpose of [`build_h`] for `n = 2`.
pub fn build_h_explicit_n2(tuple: &ResidueTuple, s: u32) -> Result<SkewHermitianForm> {
    if tuple.ks().len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: tuple.ks().len(),
        });
    }
    let d = tuple.d();
    let e = exponents(tuple, s)?;
    let x2 = CycloElem::root_power(d, e[1] as i64)?;
    let inv: Vec<CycloElem> = e
        .iter()
        .map(|&e| inv_one_minus_root(d, e as i64))
        .collect::<Result<_>>()?;
    let h11 = one_minus_root(d, (e[0] + e[1]) as i64)?
        .try_mul(&inv[0])?
        .try_mul(&inv[1])?;
    let h22 = one_minus_root(d, (e[1] + e[2]) as i64)?
        .try_mul(&inv[1])?
        .try_mul(&inv[2])?;
    let h12 = -(x2.try_mul(&inv[1])?);
    let h21 = -&inv[1];
    Ok(SkewHermitianForm {
        n: 2,
        entries: vec![vec![h11, h12], vec![h21, h22]],
        source: tuple.clone(),
        embedding_unit: s,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinorSequence {
    /// `u_1 ... u_n`; `u_0 = 1` is implicit.
    pub minors: Vec<CycloElem>,
    /// Sign of `beta_j` for `j = 1..n-1`.
    pub betas: Vec<i8>,
    /// Index `j` of the first vanishing minor, if any.
    pub first_zero_minor: Option<usize>,
}

impl MinorSequence {
    /// `lambda_j = u_j / u_{j-1}`, the diagonal after Gram-Schmidt.
    pub fn gram_diagonal(&self) -> Result<Vec<CycloElem>> {
        let Some(first) = self.minors.first() else {
            return Ok(vec![]);
        };
        let mut out = vec![first.clone()];
        for w in self.minors.windows(2) {
            out.push(w[1].try_div(&w[0])?);
        }
        Ok(out)
    }
}

/// `u_j` from its closed form.
pub fn closed_form_minor(tuple: &ResidueTuple, s: u32, j: usize) -> Result<CycloElem> {
    let d = tuple.d();
    let e = exponents(tuple, s)?;
    if j == 0 {
        return CycloElem::one(d);
    }
    if j > tuple.n() {
        return Err(Error::IndexOutOfRange {
            index: j,
            len: tuple.n(),
        });
    }
    let total: i64 = e[..=j].iter().map(|&e| e as i64).sum();
    let mut acc = one_minus_root(d, total)?;
    for &ei in &e[..=j] {
        acc = acc.try_mul(&inv_one_minus_root(d, ei as i64)?)?;
    }
    Ok(acc)
}

/// Leading minors by the three-term recurrence, each checked against
/// [`closed_form_minor`].
pub fn principal_minors(form: &SkewHermitianForm) -> Result<MinorSequence> {
    let d = form.source.d();
    let h = &form.entries;
    let mut minors: Vec<CycloElem> = Vec::with_capacity(form.n);
    let one = CycloElem::one(d)?;
    for j in 0..form.n {
        let prev = if j == 0 { &one } else { &minors[j - 1] };
        let mut u = h[j][j].try_mul(prev)?;
        if j >= 1 {
            let prev2 = if j == 1 { &one } else { &minors[j - 2] };
            let off = h[j][j - 1].try_mul(&h[j - 1][j])?;
            u = u.try_sub(&off.try_mul(prev2)?)?;
        }
        if u != closed_form_minor(&form.source, form.embedding_unit, j + 1)? {
            return Err(Error::ClosedFormMismatch {
                tuple: form.source.to_string(),
                s: form.embedding_unit,
                j: j + 1,
            });
        }
        minors.push(u);
    }
    let betas = (1..form.n)
        .map(|j| beta_sign(&form.source, form.embedding_unit, j))
        .collect::<Result<_>>()?;
    let first_zero_minor = minors.iter().position(|u| u.is_zero()).map(|i| i + 1);
    Ok(MinorSequence {
        minors,
        betas,
        first_zero_minor,
    })
}

fn parity_sign(v: u64) -> i8 {
    if v % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exact sign of `beta_j` at the embedding `s`, `1 <= j <= n-1`:
/// the parity of `[x+y+z] - [x] - [y] - [z]` with `x = (k_1+...+k_j)s/d`,
/// `y = k_{j+1}s/d`, `z = k_{j+2}s/d`.
pub fn beta_sign(tuple: &ResidueTuple, s: u32, j: usize) -> Result<i8> {
    let d = tuple.d() as u64;
    check_unit(tuple.d(), s)?;
    let n = tuple.n();
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let ks = tuple.ks();
    let s = s as u64;
    let x: u64 = ks[..j].iter().map(|&k| k as u64).sum::<u64>() * s;
    let y = ks[j] as u64 * s;
    let z = ks[j + 1] as u64 * s;
    let bracket = (x + y + z) / d - x / d - y / d - z / d;
    Ok(parity_sign(bracket))
}

/// Float value of `beta_j` from the sine-ratio form of the minors.
pub fn beta_float(tuple: &ResidueTuple, s: u32, j: usize) -> Result<f64> {
    let n = tuple.n();
    if j == 0 || j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let sj = |m: usize| -> Result<f64> { sine_ratio(tuple, s, m) };
    let (a, b, c) = (sj(j + 1)?, sj(j - 1)?, sj(j)?);
    Ok(a * b / (c * c))
}

/// `S_j = sin(pi A_j) / prod_{i <= j+1} sin(pi theta_i)` where `theta_i = {k_i s/d}`
/// and `A_j = theta_1 + ... + theta_{j+1}`; `u_j = (-2i)^{-j} S_j`.
fn sine_ratio(tuple: &ResidueTuple, s: u32, j: usize) -> Result<f64> {
    let d = tuple.d() as f64;
    let e = exponents(tuple, s)?;
    if j == 0 {
        return Ok(1.0);
    }
    let total: u64 = e[..=j].iter().map(|&e| e as u64).sum();
    let mut v = (PI * total as f64 / d).sin();
    for &ei in &e[..=j] {
        v /= (PI * ei as f64 / d).sin();
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingDiagnostic {
    pub s: u32,
    pub betas: Vec<i8>,
    pub first_zero_minor: Option<usize>,
    pub anisotropic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnisotropyReport {
    pub tuple: ResidueTuple,
    pub holds: bool,
    pub diagnostics: Vec<EmbeddingDiagnostic>,
}

/// `(k_1 + ... + k_{j+1}) s == 0 mod d` makes `u_j` vanish.
fn first_zero_minor(d: u32, ks: &[u32], s: u32) -> Option<usize> {
    let d = d as u64;
    let mut acc = 0u64;
    for (i, &k) in ks.iter().enumerate() {
        acc = (acc + k as u64 * s as u64) % d;
        if i >= 1 && acc == 0 {
            return Some(i);
        }
    }
    None
}

/// Total anisotropy: at every unit `s`, all minors nonzero and all `beta_j > 0`.
pub fn totally_anisotropic(tuple: &ResidueTuple) -> AnisotropyReport {
    let d = tuple.d();
    let n = tuple.n();
    let diagnostics: Vec<EmbeddingDiagnostic> = units(d)
        .iter()
        .map(|s| {
            let betas: Vec<i8> = (1..n)
                .map(|j| beta_sign(tuple, s, j).expect("unit and index in range"))
                .collect();
            let first_zero_minor = first_zero_minor(d, tuple.ks(), s);
            EmbeddingDiagnostic {
                s,
                anisotropic: first_zero_minor.is_none() && betas.iter().all(|&b| b > 0),
                betas,
                first_zero_minor,
            }
        })
        .collect();
    AnisotropyReport {
        tuple: tuple.clone(),
        holds: diagnostics.iter().all(|e| e.anisotropic),
        diagnostics,
    }
}

/// Allocation-free version of [`totally_anisotropic`] for sweeps.
pub fn is_totally_anisotropic(d: u32, ks: &[u32], unit_list: &[u32]) -> bool {
    let dd = d as u64;
    unit_list.iter().all(|&s| {
        let s = s as u64;
        let mut prefix = 0u64;
        for (i, &k) in ks.iter().enumerate() {
            prefix += k as u64 * s;
            if i >= 1 && prefix % dd == 0 {
                return false;
            }
        }
        beta_signs_positive(ks, s, dd)
    })
}

fn beta_signs_positive(ks: &[u32], s: u64, d: u64) -> bool {
    let mut x = 0u64;
    for j in 0..ks.len().saturating_sub(2) {
        x += ks[j] as u64 * s;
        let y = ks[j + 1] as u64 * s;
        let z = ks[j + 2] as u64 * s;
        if ((x + y + z) / d - x / d - y / d - z / d) % 2 == 1 {
            return false;
        }
    }
    true
}

/// Sign of `det h` for a triple, exact, with its float cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DetSign {
    pub sign: i8,
    /// `-(1/4) sin(pi (k_1+k_2+k_3) s/d) / prod sin(pi k_i s/d)` with reduced `k_i s`.
    pub float_value: f64,
    /// Whether the float sign agrees; `None` when `|float_value| <= 1e-9`.
    pub float_agrees: Option<bool>,
}

pub const SIGN_GUARD: f64 = 1e-9;

/// `-(-1)^[Sigma_s]`, checked against the sine formula.
pub fn det_sign_n2(d: u32, k1: u32, k2: u32, k3: u32, s: u32) -> Result<DetSign> {
    let tuple = ResidueTuple::new(d, vec![k1, k2, k3])?;
    check_unit(d, s)?;
    let sum: u64 = [k1, k2, k3]
        .iter()
        .map(|&k| k as u64 * s as u64 % d as u64)
        .sum();
    let sign = -parity_sign(sum / d as u64);
    let float_value = -0.25 * sine_ratio(&tuple, s, 2)?;
    let float_agrees = (float_value.abs() > SIGN_GUARD).then(|| (float_value > 0.0) == (sign > 0));
    Ok(DetSign {
        sign,
        float_value,
        float_agrees,
    })
}

/// Per-conductor tables for incremental minor checks over many tuples at `s = 1`.
pub struct MinorTables {
    d: u32,
    /// `1 / (1 - zeta^e)` for `e = 1..d-1` (index 0 unused).
    inv: Vec<CycloElem>,
    /// `zeta^e / (1 - zeta^e)^2`, the product of the two off-diagonal entries.
    off: Vec<CycloElem>,
    /// `1 - zeta^e` for `e = 0..d-1`.
    one_minus: Vec<CycloElem>,
}

impl MinorTables {
    pub fn new(d: u32) -> Result<MinorTables> {
        let zero = CycloElem::zero(d)?;
        let mut inv = vec![zero.clone()];
        let mut off = vec![zero];
        let mut one_minus = vec![];
        for e in 0..d as i64 {
            one_minus.push(one_minus_root(d, e)?);
        }
        for e in 1..d as i64 {
            let i = inv_one_minus_root(d, e)?;
            off.push(CycloElem::root_power(d, e)?.try_mul(&i)?.try_mul(&i)?);
            inv.push(i);
        }
        Ok(MinorTables {
            d,
            inv,
            off,
            one_minus,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

struct ChainLevel {
    exp: u32,
    prefix: u32,
    /// `prod_{i <= m} 1/(1 - x_i)`
    denom: CycloElem,
    /// `u_{m-1}` once `m >= 2`, else `1`.
    minor: CycloElem,
}

/// Residues pushed one at a time; each push from the second on yields the next
/// leading minor by recurrence and checks it against the closed form. Popping makes
/// depth-first sweeps share prefixes.
pub struct MinorChain<'a> {
    tables: &'a MinorTables,
    levels: Vec<ChainLevel>,
}

impl<'a> MinorChain<'a> {
    pub fn new(tables: &'a MinorTables) -> MinorChain<'a> {
        MinorChain {
            tables,
            levels: Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn pop(&mut self) {
        self.levels.pop();
    }

    /// Latest minor `u_{depth-1}`.
    pub fn last_minor(&self) -> Option<&CycloElem> {
        self.levels.last().map(|l| &l.minor)
    }

    /// Pushes `x = zeta^exp`; returns the closed-form check of the new minor.
    pub fn push(&mut self, exp: u32) -> Result<bool> {
        let t = self.tables;
        let d = t.d;
        if exp == 0 || exp >= d {
            return Err(Error::ResidueOutOfRange { d, k: exp });
        }
        let m = self.levels.len();
        let (prefix, denom) = match self.levels.last() {
            None => (exp, t.inv[exp as usize].clone()),
            Some(l) => ((l.prefix + exp) % d, l.denom.try_mul(&t.inv[exp as usize])?),
        };
        if m == 0 {
            self.levels.push(ChainLevel {
                exp,
                prefix,
                minor: CycloElem::one(d)?,
                denom,
            });
            return Ok(true);
        }
        let prev = &self.levels[m - 1];
        // h_{m-1,m-1} built from x_{m-1} (prev.exp) and x_m (exp)
        let diag = t.one_minus[((prev.exp + exp) % d) as usize]
            .try_mul(&t.inv[prev.exp as usize])?
            .try_mul(&t.inv[exp as usize])?;
        let mut minor = diag.try_mul(&prev.minor)?;
        if m >= 2 {
            let prev2 = &self.levels[m - 2];
            minor = minor.try_sub(&t.off[prev.exp as usize].try_mul(&prev2.minor)?)?;
        }
        let closed = t.one_minus[prefix as usize].try_mul(&denom)?;
        let ok = closed == minor;
        self.levels.push(ChainLevel {
            exp,
            prefix,
            denom,
            minor,
        });
        Ok(ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{satisfies_condition, satisfies_star, star_trace};

    fn t(d: u32, ks: &[u32]) -> ResidueTuple {
        ResidueTuple::new(d, ks.to_vec()).unwrap()
    }

    #[test]
    fn inverse_of_one_minus_root() {
        for d in 2..=30u32 {
            for e in 1..d as i64 {
                let p = one_minus_root(d, e).unwrap().try_mul(&inv_one_minus_root(d, e).unwrap()).unwrap();
                assert!(p.is_one(), "d={d} e={e}");
            }
        }
        assert!(inv_one_minus_root(6, 12).is_err());
    }

    #[test]
    fn build_h_n2_example() {
        let tup = t(6, &[1, 1, 3]);
        let h = build_h(&tup, 1).unwrap();
        assert_eq!(h.n, 2);
        let one_minus = |e| one_minus_root(6, e).unwrap();
        let expected = one_minus(2).try_div(&one_minus(1).pow(2).unwrap()).unwrap();
        assert_eq!(h.entries[0][0], expected);
        assert!(h.is_skew_hermitian().unwrap());
    }

    #[test]
    fn build_h_is_tridiagonal_and_skew() {
        let tup = t(12, &[1, 5, 7, 2, 11]);
        for s in units(12).iter() {
            let h = build_h(&tup, s).unwrap();
            assert!(h.entries[0][2].is_zero());
            assert!(h.is_tridiagonal());
            assert!(h.is_skew_hermitian().unwrap());
        }
    }

    #[test]
    fn build_h_galois_equivariance() {
        let tup = t(15, &[1, 2, 4, 7]);
        let h1 = build_h(&tup, 1).unwrap();
        for s in units(15).iter() {
            assert_eq!(build_h(&tup, s).unwrap(), h1.galois(s).unwrap());
        }
    }

    #[test]
    fn explicit_n2_variant_is_transpose_with_equal_minors() {
        for tup in [t(6, &[1, 1, 3]), t(12, &[3, 3, 5]), t(7, &[1, 2, 3])] {
            for s in units(tup.d()).iter() {
                let h = build_h(&tup, s).unwrap();
                let h2 = build_h_explicit_n2(&tup, s).unwrap();
                assert_eq!(h.transpose(), h2);
                assert!(h2.is_skew_hermitian().unwrap());
                let m = principal_minors(&h).unwrap();
                let m2 = principal_minors(&h2).unwrap();
                assert_eq!(m.minors, m2.minors);
            }
        }
    }

    #[test]
    fn minors_examples() {
        let tup = t(12, &[3, 3, 5]);
        let m = principal_minors(&build_h(&tup, 1).unwrap()).unwrap();
        assert_eq!(m.betas, vec![1]);
        assert_eq!(closed_form_minor(&tup, 1, 0).unwrap(), CycloElem::one(12).unwrap());
        let tup6 = t(6, &[1; 6]);
        let m = principal_minors(&build_h(&tup6, 1).unwrap()).unwrap();
        assert_eq!(m.betas[3], -1);
        assert_eq!(star_trace(&tup6, 1).unwrap().eps[3], -1);
    }

    #[test]
    fn beta_sign_examples() {
        assert_eq!(beta_sign(&t(12, &[3, 3, 5]), 7, 1).unwrap(), 1);
        assert_eq!(beta_sign(&t(6, &[1, 1, 1, 1, 1]), 5, 2).unwrap(), 1);
        assert_eq!(beta_sign(&t(5, &[1, 1, 1]), 2, 1).unwrap(), -1);
        assert!(beta_sign(&t(5, &[1, 1, 1]), 2, 2).is_err());
    }

    #[test]
    fn totally_anisotropic_examples() {
        assert!(totally_anisotropic(&t(6, &[1; 5])).holds);
        assert!(!totally_anisotropic(&t(6, &[1; 6])).holds);
        assert!(totally_anisotropic(&t(12, &[3, 3, 5])).holds);
    }

    #[test]
    fn det_sign_examples() {
        let a = det_sign_n2(6, 1, 1, 3, 1).unwrap();
        assert_eq!(a.sign, -1);
        assert_eq!(a.float_agrees, Some(true));
        assert_eq!(det_sign_n2(12, 3, 3, 5, 7).unwrap().sign, -1);
        assert_eq!(det_sign_n2(5, 1, 1, 1, 2).unwrap().sign, 1);
    }

    #[test]
    fn det_matches_embedded_minor() {
        for d in 3..=13u32 {
            for k1 in 1..d {
                for k2 in 1..d {
                    let k3 = 1 + (k1 * 7 + k2 * 3) % (d - 1);
                    let tup = t(d, &[k1, k2, k3]);
                    for s in units(d).iter() {
                        let ds = det_sign_n2(d, k1, k2, k3, s).unwrap();
                        let u2 = closed_form_minor(&tup, s, 2).unwrap().embed(1).unwrap();
                        assert!((u2.re - ds.float_value).abs() < 1e-9, "{tup} s={s}");
                        assert!(u2.im.abs() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn criteria_agree_small() {
        for d in 2..=12u32 {
            let us: Vec<u32> = units(d).units;
            for a in 1..d {
                for b in 1..d {
                    for c in 1..d {
                        let ks = [a, b, c];
                        let tup = t(d, &ks);
                        let ss = satisfies_condition(&tup).holds;
                        assert_eq!(ss, satisfies_star(&tup).holds, "{tup}");
                        assert_eq!(ss, totally_anisotropic(&tup).holds, "{tup}");
                        assert_eq!(ss, is_totally_anisotropic(d, &ks, &us), "{tup}");
                    }
                }
            }
        }
    }

    #[test]
    fn beta_float_sign_matches() {
        for (d, ks) in [(12u32, vec![3u32, 3, 5, 1]), (7, vec![1, 2, 3, 4, 5]), (30, vec![1, 9, 11, 13])] {
            let tup = t(d, &ks);
            for s in units(d).iter() {
                if first_zero_minor(d, &ks, s).is_some() {
                    continue;
                }
                for j in 1..tup.n() {
                    let v = beta_float(&tup, s, j).unwrap();
                    assert!(v.abs() > SIGN_GUARD);
                    assert_eq!(v > 0.0, beta_sign(&tup, s, j).unwrap() > 0);
                }
            }
        }
    }

    #[test]
    fn chain_matches_principal_minors() {
        let tables = MinorTables::new(12).unwrap();
        let mut chain = MinorChain::new(&tables);
        let ks = [5u32, 7, 2, 11, 3];
        let h = build_h(&t(12, &ks), 1).unwrap();
        let m = principal_minors(&h).unwrap();
        for (i, &k) in ks.iter().enumerate() {
            assert!(chain.push(k).unwrap());
            if i >= 1 {
                assert_eq!(chain.last_minor().unwrap(), &m.minors[i - 1]);
            }
        }
        chain.pop();
        assert_eq!(chain.depth(), 4);
    }

    #[test]
    fn gram_diagonal_product_is_minor() {
        let tup = t(10, &[1, 3, 3, 7]);
        let m = principal_minors(&build_h(&tup, 3).unwrap()).unwrap();
        let g = m.gram_diagonal().unwrap();
        let mut acc = CycloElem::one(10).unwrap();
        for (lam, u) in g.iter().zip(&m.minors) {
            acc = &acc * lam;
            assert_eq!(&acc, u);
        }
    }
}
