//! Independent finiteness oracle for triples: the group generated by the two
//! explicit 2x2 matrices
//!
//! ```text
//! A = [[x1 x2, 1 - x1], [0, 1]]      B = [[1, 0], [x2 (1 - x3), x2 x3]]
//! ```
//!
//! over `Z[zeta_d]`, enumerated by breadth-first closure with exact equality.

use std::fmt;

use hashbrown::HashTable;
use num_complex::Complex64;
use rustc_hash::FxHasher;
use serde::Serialize;
use std::hash::{Hash, Hasher};

use crate::arith::{gcd, Fraction, ResidueTuple};
use crate::cyclotomic::{field, CycloElem};
use crate::forms::SkewHermitianForm;
use crate::{Error, Result};

/// A 2x2 matrix over `Q(zeta_d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloMatrix2 {
    pub entries: [[CycloElem; 2]; 2],
}

impl fmt::Debug for CycloMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

impl Serialize for CycloMatrix2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl CycloMatrix2 {
    pub fn new(a: CycloElem, b: CycloElem, c: CycloElem, e: CycloElem) -> CycloMatrix2 {
        CycloMatrix2 {
            entries: [[a, b], [c, e]],
        }
    }

    pub fn identity(d: u32) -> Result<CycloMatrix2> {
        let one = CycloElem::one(d)?;
        let zero = CycloElem::zero(d)?;
        Ok(Self::new(one.clone(), zero.clone(), zero, one))
    }

    pub fn d(&self) -> u32 {
        self.entries[0][0].d()
    }

    pub fn try_mul(&self, other: &CycloMatrix2) -> Result<CycloMatrix2> {
        let m = |i: usize, j: usize| -> Result<CycloElem> {
            self.entries[i][0]
                .try_mul(&other.entries[0][j])?
                .try_add(&self.entries[i][1].try_mul(&other.entries[1][j])?)
        };
        Ok(Self::new(m(0, 0)?, m(0, 1)?, m(1, 0)?, m(1, 1)?))
    }

    pub fn det(&self) -> Result<CycloElem> {
        let [[a, b], [c, e]] = &self.entries;
        a.try_mul(e)?.try_sub(&b.try_mul(c)?)
    }

    pub fn trace(&self) -> Result<CycloElem> {
        self.entries[0][0].try_add(&self.entries[1][1])
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_integral())
    }

    /// A scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let [[a, b], [c, e]] = &self.entries;
        b.is_zero() && c.is_zero() && a == e
    }

    /// Entrywise conjugate, transposed.
    pub fn conj_transpose(&self) -> Result<CycloMatrix2> {
        let [[a, b], [c, e]] = &self.entries;
        Ok(Self::new(a.conj()?, c.conj()?, b.conj()?, e.conj()?))
    }

    /// Inverse by adjugate over the determinant.
    pub fn inverse(&self) -> Result<CycloMatrix2> {
        let inv_det = self.det()?.inverse()?;
        let [[a, b], [c, e]] = &self.entries;
        Ok(Self::new(
            e.try_mul(&inv_det)?,
            (-b).try_mul(&inv_det)?,
            (-c).try_mul(&inv_det)?,
            a.try_mul(&inv_det)?,
        ))
    }

    /// Smallest `m <= max` with `g^m` scalar.
    pub fn projective_order(&self, max: u32) -> Result<Option<u32>> {
        let mut acc = self.clone();
        for m in 1..=max {
            if acc.is_scalar() {
                return Ok(Some(m));
            }
            acc = acc.try_mul(self)?;
        }
        Ok(None)
    }
}

/// `e` with `det == zeta^e`, if the determinant is a root of unity of order dividing `d`.
pub fn det_root_exponent(g: &CycloMatrix2) -> Result<Option<u32>> {
    let det = g.det()?;
    let d = g.d();
    for e in 0..d {
        if det == CycloElem::root_power(d, e as i64)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// `A` and `B` with `x_j = zeta_d^(k_j)`.
pub fn gassner_generators_n2(d: u32, k1: u32, k2: u32, k3: u32) -> Result<(CycloMatrix2, CycloMatrix2)> {
    ResidueTuple::new(d, vec![k1, k2, k3])?;
    let x = |e: u32| CycloElem::root_power(d, e as i64);
    let one = CycloElem::one(d)?;
    let zero = CycloElem::zero(d)?;
    let a = CycloMatrix2::new(
        x(k1 + k2)?,
        one.try_sub(&x(k1)?)?,
        zero.clone(),
        one.clone(),
    );
    let b = CycloMatrix2::new(
        one.clone(),
        zero,
        x(k2)?.try_mul(&one.try_sub(&x(k3)?)?)?,
        x(k2 + k3)?,
    );
    Ok((a, b))
}

/// Exact test `conj(g)^T h g == h` for a 2x2 form.
pub fn preserves_form(g: &CycloMatrix2, h: &SkewHermitianForm) -> Result<bool> {
    if h.n != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: h.n,
        });
    }
    if g.d() != h.source.d() {
        return Err(Error::ConductorMismatch(g.d(), h.source.d()));
    }
    let hm = CycloMatrix2::new(
        h.entries[0][0].clone(),
        h.entries[0][1].clone(),
        h.entries[1][0].clone(),
        h.entries[1][1].clone(),
    );
    let lhs = g.conj_transpose()?.try_mul(&hm)?.try_mul(g)?;
    Ok(lhs == hm)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralTrace {
    pub dihedral: bool,
    /// Which of `A`, `B`, `C = AB` have trace exactly zero.
    pub zero_trace: Vec<&'static str>,
}

/// Two of `trace A`, `trace B`, `trace AB` vanish.
pub fn dihedral_trace_test(a: &CycloMatrix2, b: &CycloMatrix2) -> Result<DihedralTrace> {
    let c = a.try_mul(b)?;
    let mut zero_trace = vec![];
    for (name, g) in [("A", a), ("B", b), ("C", &c)] {
        if g.trace()?.is_zero() {
            zero_trace.push(name);
        }
    }
    Ok(DihedralTrace {
        dihedral: zero_trace.len() >= 2,
        zero_trace,
    })
}

/// Pairwise-sum fractions `mu_1 = {(k2+k3)/d}`, `mu_2 = {(k3+k1)/d}`,
/// `mu_3 = {(k1+k2)/d}` and the projective orders of `A`, `B`, `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSumFractions {
    pub mu1: Fraction,
    pub mu2: Fraction,
    pub mu3: Fraction,
    /// Orders `d / gcd(d, k_i + k_j)` for the pairs (1,2), (2,3), (3,1).
    pub orders: [u32; 3],
}

pub fn pgl2_orders(d: u32, k1: u32, k2: u32, k3: u32) -> Result<PairSumFractions> {
    ResidueTuple::new(d, vec![k1, k2, k3])?;
    let frac = |a: u32, b: u32| Fraction::new(((a + b) % d) as i64, d as i64);
    let ord = |a: u32, b: u32| d / gcd(d as u64, (a + b) as u64) as u32;
    Ok(PairSumFractions {
        mu1: frac(k2, k3),
        mu2: frac(k3, k1),
        mu3: frac(k1, k2),
        orders: [ord(k1, k2), ord(k2, k3), ord(k3, k1)],
    })
}

/// `det h != 0` at the identity embedding, i.e. `x1 x2 x3 != 1`.
pub fn det_h_nonzero(tuple: &ResidueTuple) -> bool {
    tuple.ks().iter().map(|&k| k as u64).sum::<u64>() % tuple.d() as u64 != 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordEntry {
    pub index: usize,
    pub word: String,
}

/// Why an element has infinite order.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InfiniteOrderReason {
    /// The trace leaves the disc of radius 2 at this embedding, so some
    /// eigenvalue is off the unit circle.
    LargeTrace { embedding: u32, trace_abs: f64 },
    /// Not scalar, yet `trace^2 = 4 det` exactly: a repeated eigenvalue with a
    /// nontrivial unipotent part.
    NonSemisimple,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfiniteOrderWitness {
    pub word: String,
    pub reason: InfiniteOrderReason,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosureResult {
    pub finite: bool,
    pub order: Option<usize>,
    pub cap: usize,
    pub elements_found: usize,
    /// Generator words of the first elements found; lowercase is the inverse.
    pub word_log: Vec<WordEntry>,
    /// Only set when the closure ran with [`ClosureOptions::stop_on_infinite_order`].
    pub infinite_order_witness: Option<InfiniteOrderWitness>,
}

impl ClosureResult {
    pub fn verdict(&self) -> String {
        match (self.finite, &self.infinite_order_witness) {
            (true, _) => format!("finite, order {}", self.order.unwrap_or(0)),
            (false, Some(w)) => format!("infinite: element {} has infinite order", w.word),
            (false, None) => format!("cap exceeded at {}", self.cap),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    pub cap: usize,
    /// Stop as soon as an element of provably infinite order turns up.
    pub stop_on_infinite_order: bool,
    pub word_log_len: usize,
}

impl ClosureOptions {
    pub fn with_cap(cap: usize) -> ClosureOptions {
        ClosureOptions {
            cap,
            stop_on_infinite_order: false,
            word_log_len: 20,
        }
    }
}

pub const DEFAULT_CAP: usize = 1_000_000;

/// Right multiplication by a fixed generator as integer linear maps on coefficients.
struct GenMap {
    /// `maps[i][j]`: matrix of multiplication by entry `(i, j)`, or `None` if zero.
    maps: [[Option<Vec<i64>>; 2]; 2],
    letter: char,
}

fn mult_map(c: &CycloElem, phi: usize) -> Result<Option<Vec<i64>>> {
    if c.is_zero() {
        return Ok(None);
    }
    if !c.is_integral() {
        return Err(Error::NonIntegral);
    }
    let d = c.d();
    // column j holds the coefficients of c * zeta^j
    let mut m = vec![0i64; phi * phi];
    for j in 0..phi {
        let col = c.try_mul(&CycloElem::root_power(d, j as i64)?)?;
        for (i, &v) in col.numerators().iter().enumerate() {
            m[i * phi + j] = v.try_into().map_err(|_| Error::Overflow)?;
        }
    }
    Ok(Some(m))
}

impl GenMap {
    fn new(g: &CycloMatrix2, letter: char) -> Result<GenMap> {
        let phi = field(g.d())?.phi;
        let e = &g.entries;
        Ok(GenMap {
            maps: [
                [mult_map(&e[0][0], phi)?, mult_map(&e[0][1], phi)?],
                [mult_map(&e[1][0], phi)?, mult_map(&e[1][1], phi)?],
            ],
            letter,
        })
    }
}

/// Flat storage: entry `(i, j)` of element `idx` is at `(idx*4 + 2i + j) * phi`.
struct Arena {
    phi: usize,
    data: Vec<i64>,
}

impl Arena {
    fn elem(&self, idx: usize) -> &[i64] {
        let w = 4 * self.phi;
        &self.data[idx * w..(idx + 1) * w]
    }

    fn len(&self) -> usize {
        self.data.len() / (4 * self.phi)
    }
}

fn hash_slice(s: &[i64]) -> u64 {
    let mut h = FxHasher::default();
    s.hash(&mut h);
    h.finish()
}

/// `out = g * G` on flat coefficients.
fn right_mul(g: &[i64], gen: &GenMap, phi: usize, out: &mut [i64], acc: &mut [i128]) -> Result<()> {
    for i in 0..2 {
        for j in 0..2 {
            acc.iter_mut().for_each(|a| *a = 0);
            for l in 0..2 {
                let Some(m) = &gen.maps[l][j] else { continue };
                let src = &g[(2 * i + l) * phi..(2 * i + l + 1) * phi];
                for (r, a) in acc.iter_mut().enumerate() {
                    let row = &m[r * phi..(r + 1) * phi];
                    let mut s = 0i128;
                    for (x, y) in row.iter().zip(src) {
                        s += (*x as i128) * (*y as i128);
                    }
                    *a += s;
                }
            }
            let dst = &mut out[(2 * i + j) * phi..(2 * i + j + 1) * phi];
            for (o, a) in dst.iter_mut().zip(acc.iter()) {
                *o = i64::try_from(*a).map_err(|_| Error::Overflow)?;
            }
        }
    }
    Ok(())
}

fn flatten(g: &CycloMatrix2, phi: usize) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(4 * phi);
    for e in g.entries.iter().flatten() {
        if !e.is_integral() {
            return Err(Error::NonIntegral);
        }
        for &c in e.numerators() {
            out.push(c.try_into().map_err(|_| Error::Overflow)?);
        }
    }
    Ok(out)
}

fn unflatten(d: u32, flat: &[i64], phi: usize) -> Result<CycloMatrix2> {
    let entry = |k: usize| -> Result<CycloElem> {
        let coeffs: Vec<Fraction> = flat[k * phi..(k + 1) * phi]
            .iter()
            .map(|&c| Fraction::from_int(c))
            .collect();
        CycloElem::from_coeffs(d, &coeffs)
    };
    Ok(CycloMatrix2::new(entry(0)?, entry(1)?, entry(2)?, entry(3)?))
}

/// Float evaluation of trace and determinant at every embedding.
struct TraceProbe {
    d: u32,
    phi: usize,
    /// `zeta^(i s)` for each unit `s` (rows) and basis index `i`.
    roots: Vec<(u32, Vec<Complex64>)>,
}

impl TraceProbe {
    fn new(d: u32, phi: usize) -> TraceProbe {
        let roots = crate::arith::units(d)
            .iter()
            .map(|s| {
                let row = (0..phi)
                    .map(|i| {
                        let e = (i as u64 * s as u64) % d as u64;
                        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / d as f64)
                    })
                    .collect();
                (s, row)
            })
            .collect();
        TraceProbe { d, phi, roots }
    }

    fn entry(&self, g: &[i64], k: usize, row: &[Complex64]) -> Complex64 {
        let src = &g[k * self.phi..(k + 1) * self.phi];
        src.iter()
            .zip(row)
            .fold(Complex64::new(0.0, 0.0), |z, (&c, r)| z + r * c as f64)
    }

    fn check(&self, g: &[i64]) -> Result<Option<InfiniteOrderReason>> {
        let mut near_parabolic = true;
        for (s, row) in &self.roots {
            let (a, b, c, e) = (
                self.entry(g, 0, row),
                self.entry(g, 1, row),
                self.entry(g, 2, row),
                self.entry(g, 3, row),
            );
            let tr = a + e;
            if tr.norm() > 2.0 + TRACE_MARGIN {
                return Ok(Some(InfiniteOrderReason::LargeTrace {
                    embedding: *s,
                    trace_abs: tr.norm(),
                }));
            }
            let disc = tr * tr - (a * e - b * c) * 4.0;
            if disc.norm() > TRACE_MARGIN {
                near_parabolic = false;
            }
        }
        if !near_parabolic {
            return Ok(None);
        }
        let m = unflatten(self.d, g, self.phi)?;
        if m.is_scalar() {
            return Ok(None);
        }
        let tr = m.trace()?;
        let four_det = m.det()?.scale(Fraction::from_int(4))?;
        if tr.try_mul(&tr)? == four_det {
            Ok(Some(InfiniteOrderReason::NonSemisimple))
        } else {
            Ok(None)
        }
    }
}

/// Margin above 2 for an infinite-order certificate.
const TRACE_MARGIN: f64 = 1e-6;

/// The closure together with its elements.
pub struct Closure {
    pub result: ClosureResult,
    d: u32,
    arena: Arena,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.arena.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn element(&self, idx: usize) -> Result<CycloMatrix2> {
        unflatten(self.d, self.arena.elem(idx), self.arena.phi)
    }
}

/// Breadth-first closure under the generators and their inverses.
pub fn group_closure(gens: &[CycloMatrix2], cap: usize) -> Result<ClosureResult> {
    Ok(closure_with_elements(gens, ClosureOptions::with_cap(cap))?.result)
}

/// [`group_closure`] with options, keeping the elements for inspection.
pub fn closure_with_elements(gens: &[CycloMatrix2], opts: ClosureOptions) -> Result<Closure> {
    let Some(first) = gens.first() else {
        return Err(Error::TooFewResidues(0));
    };
    let d = first.d();
    if let Some(g) = gens.iter().find(|g| g.d() != d) {
        return Err(Error::ConductorMismatch(d, g.d()));
    }
    let phi = field(d)?.phi;
    let mut maps = Vec::with_capacity(gens.len() * 2);
    for (i, g) in gens.iter().enumerate() {
        if !g.is_integral() {
            return Err(Error::NonIntegral);
        }
        let upper = (b'A' + i as u8) as char;
        maps.push(GenMap::new(g, upper)?);
        let inv = g.inverse()?;
        maps.push(GenMap::new(&inv, upper.to_ascii_lowercase())?);
    }
    let probe = opts.stop_on_infinite_order.then(|| TraceProbe::new(d, phi));

    let w = 4 * phi;
    let mut arena = Arena {
        phi,
        data: Vec::with_capacity(w * 1024),
    };
    let mut table: HashTable<u32> = HashTable::new();
    let mut words: Vec<WordEntry> = vec![];
    let mut parent_words: Vec<String> = vec![];

    let id = flatten(&CycloMatrix2::identity(d)?, phi)?;
    arena.data.extend_from_slice(&id);
    table.insert_unique(hash_slice(&id), 0, |&i| hash_slice(arena_elem(&arena.data, w, i)));
    if opts.word_log_len > 0 {
        words.push(WordEntry {
            index: 0,
            word: "1".into(),
        });
        parent_words.push(String::new());
    }

    let mut buf = vec![0i64; w];
    let mut acc = vec![0i128; phi];
    let mut head = 0usize;
    let mut witness = None;
    let mut exceeded = false;
    'outer: while head < arena.len() {
        for gm in &maps {
            right_mul(arena.elem(head), gm, phi, &mut buf, &mut acc)?;
            let h = hash_slice(&buf);
            let data = &arena.data;
            if table
                .find(h, |&i| arena_elem(data, w, i) == buf.as_slice())
                .is_some()
            {
                continue;
            }
            let idx = arena.len();
            if idx >= opts.cap {
                exceeded = true;
                break 'outer;
            }
            arena.data.extend_from_slice(&buf);
            let data = &arena.data;
            table.insert_unique(h, idx as u32, |&i| hash_slice(arena_elem(data, w, i)));
            let word = if idx < opts.word_log_len || probe.is_some() {
                let parent = parent_words.get(head).cloned().unwrap_or_default();
                format!("{parent}{}", gm.letter)
            } else {
                String::new()
            };
            if idx < opts.word_log_len {
                words.push(WordEntry {
                    index: idx,
                    word: word.clone(),
                });
            }
            if probe.is_some() {
                parent_words.resize(idx, String::new());
                parent_words.push(word.clone());
            } else if idx < opts.word_log_len {
                parent_words.resize(idx, String::new());
                parent_words.push(word.clone());
            }
            if let Some(p) = &probe {
                if let Some(reason) = p.check(&buf)? {
                    witness = Some(InfiniteOrderWitness { word, reason });
                    break 'outer;
                }
            }
        }
        head += 1;
    }
    let found = arena.len();
    let finite = !exceeded && witness.is_none();
    let result = ClosureResult {
        finite,
        order: finite.then_some(found),
        cap: opts.cap,
        elements_found: if exceeded { opts.cap + 1 } else { found },
        word_log: words,
        infinite_order_witness: witness,
    };
    Ok(Closure { result, d, arena })
}

fn arena_elem<'a>(data: &'a [i64], w: usize, i: u32) -> &'a [i64] {
    let i = i as usize;
    &data[i * w..(i + 1) * w]
}

/// Closure of `<A, B>` for a triple.
pub fn triple_closure(tuple: &ResidueTuple, opts: ClosureOptions) -> Result<Closure> {
    let ks = tuple.ks();
    if ks.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: ks.len(),
        });
    }
    let (a, b) = gassner_generators_n2(tuple.d(), ks[0], ks[1], ks[2])?;
    closure_with_elements(&[a, b], opts)
}
