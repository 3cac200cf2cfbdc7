//! Enumeration and classification of tuples satisfying the fractional-part
//! condition: primitive triples (the dihedral family and the Schwarz list),
//! the two branches of the quadruple search, and the bootstrap for longer tuples.

pub mod reference;

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::arith::{canonical_ks, gcd_all, orbit_multiset, units, Fraction, ResidueTuple};
use crate::conditions::{holds_ss, lambda_mu_nu};
use crate::groups::pgl2_orders;
use crate::{Error, Result};

/// Default modulus bound for the triple search.
pub const DEFAULT_D_MAX: u32 = 120;

/// A `(Z/dZ)^*`-orbit of sorted tuples. Multiplicities count units giving the
/// same sorted vector, so they sum to `phi(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    pub canonical: ResidueTuple,
    pub orbit_size: usize,
    pub members: Vec<(ResidueTuple, usize)>,
}

impl EquivClass {
    pub fn of(tuple: &ResidueTuple) -> EquivClass {
        let members: Vec<(ResidueTuple, usize)> = orbit_multiset(tuple).into_iter().collect();
        EquivClass {
            canonical: members[0].0.clone(),
            orbit_size: members.iter().map(|(_, m)| m).sum(),
            members,
        }
    }

    pub fn d(&self) -> u32 {
        self.canonical.d()
    }

    pub fn contains(&self, tuple: &ResidueTuple) -> bool {
        let sorted = tuple.sorted();
        self.members.iter().any(|(m, _)| *m == sorted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubtupleFactorization {
    pub subtuple: ResidueTuple,
    pub scale: u32,
    pub base: ResidueTuple,
}

pub fn is_primitive(tuple: &ResidueTuple) -> bool {
    gcd_all(tuple.d(), tuple.ks()) == 1
}

/// `tuple = a * base` componentwise, `d` included, with `base` primitive.
pub fn factor_primitive(tuple: &ResidueTuple) -> SubtupleFactorization {
    let a = gcd_all(tuple.d(), tuple.ks());
    let base = ResidueTuple::new_unchecked(tuple.d() / a, tuple.ks().iter().map(|k| k / a).collect());
    SubtupleFactorization {
        subtuple: tuple.clone(),
        scale: a,
        base,
    }
}

/// How a triple reduces to the dihedral shape `(2m; p, p, m-p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralWitness {
    pub m: u32,
    pub p: u32,
    /// Common factor `a` of the triple; the shape applies to the primitive base.
    pub scale: u32,
    /// Unit of the base modulus `2m`.
    pub scaling_unit: u32,
    /// `permutation[i]` is the source index placed at position `i`.
    pub permutation: [usize; 3],
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Shape test: after factoring out `gcd(d, k_i)`, some unit and permutation
/// carry the base to `(2m; p, p, m-p)` with `gcd(p, m) = 1`.
pub fn is_dihedral_class(d: u32, k1: u32, k2: u32, k3: u32) -> Result<Option<DihedralWitness>> {
    let tuple = ResidueTuple::new(d, vec![k1, k2, k3])?;
    let f = factor_primitive(&tuple);
    let d1 = f.base.d();
    if d1 % 2 == 1 {
        return Ok(None);
    }
    let m = d1 / 2;
    let l = f.base.ks();
    for t in units(d1).iter() {
        let scaled: Vec<u32> = l.iter().map(|&k| (k as u64 * t as u64 % d1 as u64) as u32).collect();
        for perm in PERMUTATIONS {
            let (a, b, c) = (scaled[perm[0]], scaled[perm[1]], scaled[perm[2]]);
            if a == b && a >= 1 && a < m && c == m - a && crate::arith::gcd(a as u64, m as u64) == 1 {
                return Ok(Some(DihedralWitness {
                    m,
                    p: a,
                    scale: f.scale,
                    scaling_unit: t,
                    permutation: perm,
                }));
            }
        }
    }
    Ok(None)
}

/// Pair-sum test: two of `k_i + k_j` are `d/2 mod d`.
pub fn dihedral_by_pair_sums(d: u32, ks: &[u32]) -> bool {
    if d % 2 == 1 || ks.len() != 3 {
        return false;
    }
    let half = d / 2;
    let hits = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .filter(|&&(i, j)| (ks[i] + ks[j]) % d == half)
        .count();
    hits >= 2
}

/// All sub-tuples of the given size, dropping indices in lexicographic order of
/// the kept index sets.
pub fn subtuples(tuple: &ResidueTuple, size: usize) -> Result<Vec<ResidueTuple>> {
    let len = tuple.ks().len();
    if size < 3 || size > len {
        return Err(Error::IndexOutOfRange { index: size, len });
    }
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let ks = idx.iter().map(|&i| tuple.ks()[i]).collect();
        out.push(ResidueTuple::new_unchecked(tuple.d(), ks));
        // next combination
        let mut i = size;
        while i > 0 && idx[i - 1] == len - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// One row of the Schwarz table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub tuple: ResidueTuple,
    pub d: u32,
    /// Pairwise-sum fractions `mu_1, mu_2, mu_3`.
    pub mu: [Fraction; 3],
    pub k_over_d: [Fraction; 3],
    pub lmn: [Fraction; 3],
}

impl Table1Row {
    fn of(tuple: &ResidueTuple) -> Result<Table1Row> {
        let d = tuple.d();
        let ks = tuple.ks();
        let p = pgl2_orders(d, ks[0], ks[1], ks[2])?;
        let l = lambda_mu_nu(tuple)?;
        Ok(Table1Row {
            tuple: tuple.clone(),
            d,
            mu: [p.mu1, p.mu2, p.mu3],
            k_over_d: [
                Fraction::new(ks[0] as i64, d as i64),
                Fraction::new(ks[1] as i64, d as i64),
                Fraction::new(ks[2] as i64, d as i64),
            ],
            lmn: l.as_array(),
        })
    }
}

/// `(lambda, mu, nu)` up to complementing two coordinates (`x -> 1 - x`) and
/// permuting: the variant of least sum, sorted descending.
pub fn schwarz_normal_form(lmn: [Fraction; 3]) -> [Fraction; 3] {
    let one = Fraction::one();
    let [a, b, c] = lmn;
    let variants = [
        [a, b, c],
        [one - a, one - b, c],
        [one - a, b, one - c],
        [a, one - b, one - c],
    ];
    variants
        .into_iter()
        .map(|mut v| {
            v.sort_by(|x, y| y.cmp(x));
            let sum = v[0] + v[1] + v[2];
            (sum, v)
        })
        .min()
        .expect("four variants")
        .1
}

/// A non-dihedral class with the Schwarz rows it realizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchwarzClass {
    pub class: EquivClass,
    /// Distinct normal forms of `(lambda, mu, nu)` over members with `sum k_i < d`.
    pub normal_forms: Vec<[Fraction; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleEnumeration {
    pub d_max: u32,
    pub dihedral_classes: Vec<EquivClass>,
    pub schwarz_classes: Vec<SchwarzClass>,
}

/// All primitive sorted triples with `d <= d_max` satisfying the condition, split
/// into dihedral and Schwarz classes.
pub fn enumerate_triples(d_max: u32) -> Result<TripleEnumeration> {
    if d_max < 2 {
        return Err(Error::InvalidModulus(d_max as u64));
    }
    let mut dihedral = vec![];
    let mut schwarz = vec![];
    for d in 2..=d_max {
        let us = units(d).units;
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        for k1 in 1..d {
            for k2 in k1..d {
                for k3 in k2..d {
                    let ks = [k1, k2, k3];
                    if gcd_all(d, &ks) != 1 || !holds_ss(d, &ks, &us) {
                        continue;
                    }
                    let canon = canonical_ks(d, &ks, &us);
                    if !seen.insert(canon.clone()) {
                        continue;
                    }
                    let class = EquivClass::of(&ResidueTuple::new_unchecked(d, canon));
                    if dihedral_by_pair_sums(d, &ks) {
                        dihedral.push(class);
                    } else {
                        schwarz.push(schwarz_class(class)?);
                    }
                }
            }
        }
    }
    dihedral.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    schwarz.sort_by(|a, b| a.class.canonical.cmp(&b.class.canonical));
    Ok(TripleEnumeration {
        d_max,
        dihedral_classes: dihedral,
        schwarz_classes: schwarz,
    })
}

fn schwarz_class(class: EquivClass) -> Result<SchwarzClass> {
    let mut forms = BTreeSet::new();
    for (m, _) in &class.members {
        if m.ks().iter().map(|&k| k as u64).sum::<u64>() < m.d() as u64 {
            forms.insert(schwarz_normal_form(lambda_mu_nu(m)?.as_array()));
        }
    }
    Ok(SchwarzClass {
        class,
        normal_forms: forms.into_iter().collect(),
    })
}

/// Table 1: one row per Schwarz normal form, taken from the member whose own
/// `(lambda, mu, nu)` already is the normal form. Ordered by `d`, then tuple.
pub fn table1(e: &TripleEnumeration) -> Result<Vec<Table1Row>> {
    let mut by_form: BTreeMap<[Fraction; 3], Vec<ResidueTuple>> = BTreeMap::new();
    for c in &e.schwarz_classes {
        for (m, _) in &c.class.members {
            if m.ks().iter().map(|&k| k as u64).sum::<u64>() >= m.d() as u64 {
                continue;
            }
            let raw = lambda_mu_nu(m)?.as_array();
            if schwarz_normal_form(raw) == raw {
                by_form.entry(raw).or_default().push(m.clone());
            }
        }
    }
    let mut rows: Vec<Table1Row> = by_form
        .values()
        .map(|hits| Table1Row::of(&hits[0]))
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    Ok(rows)
}

/// Number of members realizing each normal form directly; used to check that
/// every Table 1 row is hit exactly once.
pub fn table1_direct_hits(e: &TripleEnumeration) -> Result<BTreeMap<[Fraction; 3], usize>> {
    let mut out = BTreeMap::new();
    for c in &e.schwarz_classes {
        for (m, _) in &c.class.members {
            if m.ks().iter().map(|&k| k as u64).sum::<u64>() >= m.d() as u64 {
                continue;
            }
            let raw = lambda_mu_nu(m)?.as_array();
            if schwarz_normal_form(raw) == raw {
                *out.entry(raw).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// One orbit line of Tables 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitLine {
    pub d: u32,
    pub members: Vec<(ResidueTuple, usize)>,
}

impl From<&EquivClass> for OrbitLine {
    fn from(c: &EquivClass) -> Self {
        OrbitLine {
            d: c.d(),
            members: c.members.clone(),
        }
    }
}

/// Table 2: the Schwarz classes as orbit lines, by `d`.
pub fn table2(e: &TripleEnumeration) -> Vec<OrbitLine> {
    e.schwarz_classes.iter().map(|c| OrbitLine::from(&c.class)).collect()
}

/// A Table 4 candidate `(2ma; ap, ap, a(m-p), m_4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCandidate {
    pub tuple: ResidueTuple,
    pub m: u32,
    pub p: u32,
    pub a: u32,
    pub satisfies_ss: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrupleSearch {
    /// Branch A orbit lines (Table 3), over moduli dividing 120.
    pub candidates_nondihedral: Vec<OrbitLine>,
    /// Moduli searched in branch A.
    pub moduli: Vec<u32>,
    /// Branch B candidates (Table 4) in shape order.
    pub candidates_dihedral_shape: Vec<ShapeCandidate>,
    /// Sorted tuples from both branches satisfying the condition.
    pub winners: Vec<ResidueTuple>,
    pub winners_nondihedral: Vec<ResidueTuple>,
    pub winners_dihedral_shape: Vec<ResidueTuple>,
}

fn lcm_of(values: impl Iterator<Item = u32>) -> u32 {
    values.fold(1u32, |l, v| l / crate::arith::gcd(l as u64, v as u64) as u32 * v)
}

/// Both branches of the quadruple search, driven by the Schwarz classes of `e`.
pub fn enumerate_quadruples(e: &TripleEnumeration) -> Result<QuadrupleSearch> {
    let schwarz: FxHashSet<ResidueTuple> = e
        .schwarz_classes
        .iter()
        .flat_map(|c| c.class.members.iter().map(|(m, _)| m.clone()))
        .collect();
    let bound = lcm_of(e.schwarz_classes.iter().map(|c| c.class.d()));
    let moduli: Vec<u32> = crate::arith::divisors(bound).into_iter().filter(|&d| d >= 2).collect();

    // Branch A: every drop-one sub-triple is a multiple of a Schwarz triple.
    let from_schwarz = |d: u32, ks: [u32; 3]| -> bool {
        let mut s = ks;
        s.sort_unstable();
        let f = factor_primitive(&ResidueTuple::new_unchecked(d, s.to_vec()));
        schwarz.contains(&f.base)
    };
    let mut lines = vec![];
    let mut winners_a = vec![];
    for &d in &moduli {
        let us = units(d).units;
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        for k1 in 1..d {
            for k2 in k1..d {
                for k3 in k2..d {
                    if !from_schwarz(d, [k1, k2, k3]) {
                        continue;
                    }
                    for k4 in k3..d {
                        let ks = [k1, k2, k3, k4];
                        if gcd_all(d, &ks) != 1
                            || !from_schwarz(d, [k1, k2, k4])
                            || !from_schwarz(d, [k1, k3, k4])
                            || !from_schwarz(d, [k2, k3, k4])
                        {
                            continue;
                        }
                        if holds_ss(d, &ks, &us) {
                            winners_a.push(ResidueTuple::new_unchecked(d, ks.to_vec()));
                        }
                        let canon = canonical_ks(d, &ks, &us);
                        if seen.insert(canon.clone()) {
                            lines.push(OrbitLine::from(&EquivClass::of(&ResidueTuple::new_unchecked(d, canon))));
                        }
                    }
                }
            }
        }
    }

    // Branch B: (2ma; ap, ap, a(m-p), m4) with (2ma; ap, ap, m4) a Schwarz triple.
    let mut shape = vec![];
    let mut winners_b = vec![];
    let mut d2s: Vec<u32> = e.schwarz_classes.iter().map(|c| c.class.d()).collect();
    d2s.sort_unstable();
    d2s.dedup();
    for d2 in d2s {
        if d2 % 2 == 1 {
            continue;
        }
        let us = units(d2).units;
        let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
        for c in e.schwarz_classes.iter().filter(|c| c.class.d() == d2) {
            for (m, _) in &c.class.members {
                let k = m.ks();
                for (i, j, o) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                    if k[i] == k[j] {
                        pairs.insert((k[i], k[o]));
                    }
                }
            }
        }
        for (c, m4) in pairs {
            for a in crate::arith::divisors(d2 / 2) {
                let m = d2 / (2 * a);
                if c % a != 0 || m < 2 {
                    continue;
                }
                let p = c / a;
                if p >= m || crate::arith::gcd(p as u64, m as u64) != 1 {
                    continue;
                }
                let ks = vec![c, c, a * (m - p), m4];
                let ok = holds_ss(d2, &ks, &us);
                let tuple = ResidueTuple::new_unchecked(d2, ks);
                if ok {
                    winners_b.push(tuple.clone());
                }
                shape.push(ShapeCandidate {
                    tuple,
                    m,
                    p,
                    a,
                    satisfies_ss: ok,
                });
            }
        }
    }
    shape.sort_by(|x, y| x.tuple.cmp(&y.tuple));

    let mut winners: Vec<ResidueTuple> = winners_a
        .iter()
        .cloned()
        .chain(winners_b.iter().map(|t| t.sorted()))
        .collect();
    winners.sort();
    winners.dedup();
    Ok(QuadrupleSearch {
        candidates_nondihedral: lines,
        moduli,
        candidates_dihedral_shape: shape,
        winners,
        winners_nondihedral: winners_a,
        winners_dihedral_shape: winners_b,
    })
}

/// Classification for a given `n` (tuples of `n + 1` residues).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    /// For `n = 2`: the infinite dihedral family `(2m; p, p, m-p)` is present and
    /// is not listed class by class.
    pub dihedral_family: bool,
    pub classes: Vec<EquivClass>,
    /// Modulus bound of the triple search these classes derive from.
    pub d_max: u32,
}

/// Every class of primitive tuples of length `n + 1` satisfying the condition.
///
/// `n = 2` lists the Schwarz classes with `d <= d_max`; `n = 3` comes from the
/// quadruple search; each larger `n` extends the previous classes by one residue
/// and keeps the extensions whose drop-one sub-tuples all lie in the previous
/// level. The extension step relies on every class of the previous level sharing
/// one modulus, which is checked.
pub fn classify_n(n: usize, d_max: u32) -> Result<Classification> {
    if n < 2 {
        return Err(Error::TooFewResidues(n + 1));
    }
    let triples = enumerate_triples(d_max)?;
    if n == 2 {
        return Ok(Classification {
            n,
            dihedral_family: true,
            classes: triples.schwarz_classes.into_iter().map(|c| c.class).collect(),
            d_max,
        });
    }
    let quads = enumerate_quadruples(&triples)?;
    let mut classes = classes_of(&quads.winners);
    for level in 4..=n {
        classes = extend_level(&classes, level)?;
    }
    Ok(Classification {
        n,
        dihedral_family: false,
        classes,
        d_max,
    })
}

fn classes_of(tuples: &[ResidueTuple]) -> Vec<EquivClass> {
    let mut seen = BTreeSet::new();
    let mut out = vec![];
    for t in tuples {
        let c = EquivClass::of(t);
        if seen.insert(c.canonical.clone()) {
            out.push(c);
        }
    }
    out.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    out
}

/// Winners with `level + 1` residues from the winners with `level` residues.
pub fn extend_level(prev: &[EquivClass], level: usize) -> Result<Vec<EquivClass>> {
    let Some(first) = prev.first() else {
        return Ok(vec![]);
    };
    let d = first.d();
    if prev.iter().any(|c| c.d() != d) {
        return Err(Error::InvalidModulus(d as u64));
    }
    let us = units(d).units;
    let prev_canon: FxHashSet<&ResidueTuple> = prev.iter().map(|c| &c.canonical).collect();
    let mut found = vec![];
    for c in prev {
        for (m, _) in &c.members {
            for k in 1..d {
                let mut ks = m.ks().to_vec();
                ks.push(k);
                ks.sort_unstable();
                debug_assert_eq!(ks.len(), level + 1);
                if gcd_all(d, &ks) != 1 || !holds_ss(d, &ks, &us) {
                    continue;
                }
                let t = ResidueTuple::new_unchecked(d, ks);
                let subs = subtuples(&t, level)?;
                if subs
                    .iter()
                    .all(|s| prev_canon.contains(&ResidueTuple::new_unchecked(d, canonical_ks(d, s.ks(), &us))))
                {
                    found.push(t);
                }
            }
        }
    }
    Ok(classes_of(&found))
}

/// A difference between a computed and a printed table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDiff {
    pub only_computed: Vec<ResidueTuple>,
    pub only_printed: Vec<ResidueTuple>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.only_computed.is_empty() && self.only_printed.is_empty()
    }
}

/// Table 4 candidates against the printed list, tuples compared in shape order.
pub fn diff_table4(q: &QuadrupleSearch) -> TableDiff {
    let computed: BTreeSet<ResidueTuple> =
        q.candidates_dihedral_shape.iter().map(|c| c.tuple.clone()).collect();
    let printed: BTreeSet<ResidueTuple> = reference::TABLE4
        .iter()
        .map(|(d, ks)| ResidueTuple::new_unchecked(*d, ks.to_vec()))
        .collect();
    TableDiff {
        only_computed: computed.difference(&printed).cloned().collect(),
        only_printed: printed.difference(&computed).cloned().collect(),
    }
}

/// Orbit lines against a printed table: member sets and multiplicities per line.
pub fn diff_orbit_lines(computed: &[OrbitLine], printed: &[reference::TableLine]) -> TableDiff {
    let flatten = |lines: Vec<(ResidueTuple, usize)>| -> BTreeMap<ResidueTuple, usize> { lines.into_iter().collect() };
    let c = flatten(
        computed
            .iter()
            .flat_map(|l| l.members.iter().cloned())
            .collect(),
    );
    let p = flatten(
        printed
            .iter()
            .flat_map(|(d, ts, mult)| {
                ts.iter()
                    .map(move |ks| (ResidueTuple::new_unchecked(*d, ks.to_vec()), *mult))
            })
            .collect(),
    );
    let only_computed = c
        .iter()
        .filter(|(t, m)| p.get(t) != Some(m))
        .map(|(t, _)| t.clone())
        .collect();
    let only_printed = p
        .iter()
        .filter(|(t, m)| c.get(t) != Some(m))
        .map(|(t, _)| t.clone())
        .collect();
    TableDiff {
        only_computed,
        only_printed,
    }
}

/// Computed Table 1 rows with no printed counterpart, and indices of printed rows
/// with no computed counterpart. Rows match when `d` agrees and each of the three
/// fraction triples agrees as a multiset.
pub fn diff_table1(rows: &[Table1Row]) -> (Vec<ResidueTuple>, Vec<usize>) {
    type Key = (u32, [Fraction; 3], [Fraction; 3], [Fraction; 3]);
    let sorted = |mut a: [Fraction; 3]| {
        a.sort();
        a
    };
    let mut printed: Vec<Option<Key>> = printed_table1()
        .into_iter()
        .map(|(mu, k, l, d)| Some((d, sorted(mu), sorted(k), sorted(l))))
        .collect();
    let mut only_computed = vec![];
    for r in rows {
        let key = (r.d, sorted(r.mu), sorted(r.k_over_d), sorted(r.lmn));
        match printed.iter_mut().find(|p| p.as_ref() == Some(&key)) {
            Some(slot) => *slot = None,
            None => only_computed.push(r.tuple.clone()),
        }
    }
    let only_printed = printed
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.is_some().then_some(i))
        .collect();
    (only_computed, only_printed)
}

/// Printed Table 1 rows as exact fractions.
pub fn printed_table1() -> Vec<([Fraction; 3], [Fraction; 3], [Fraction; 3], u32)> {
    let f = |(n, d): (i64, i64)| Fraction::new(n, d);
    reference::TABLE1
        .iter()
        .map(|(d, mu, k, l)| (mu.map(f), k.map(f), l.map(f), *d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::satisfies_condition;

    fn t(d: u32, ks: &[u32]) -> ResidueTuple {
        ResidueTuple::new(d, ks.to_vec()).unwrap()
    }

    #[test]
    fn primitivity_examples() {
        assert!(!is_primitive(&t(6, &[2, 2, 2])));
        assert!(is_primitive(&t(6, &[1, 1, 3])));
        assert!(is_primitive(&t(30, &[5, 5, 10, 1])));
    }

    #[test]
    fn factor_examples() {
        let f = factor_primitive(&t(12, &[2, 2, 4]));
        assert_eq!((f.scale, f.base), (2, t(6, &[1, 1, 2])));
        let f = factor_primitive(&t(6, &[1, 1, 3]));
        assert_eq!((f.scale, f.base), (1, t(6, &[1, 1, 3])));
        let f = factor_primitive(&t(60, &[5, 5, 10]));
        assert_eq!((f.scale, f.base), (5, t(12, &[1, 1, 2])));
    }

    #[test]
    fn dihedral_examples() {
        let w = is_dihedral_class(4, 1, 1, 1).unwrap().unwrap();
        assert_eq!((w.m, w.p), (2, 1));
        let w = is_dihedral_class(6, 1, 1, 2).unwrap().unwrap();
        assert_eq!((w.m, w.p), (3, 1));
        assert!(is_dihedral_class(12, 3, 3, 5).unwrap().is_none());
        assert!(is_dihedral_class(15, 1, 2, 4).unwrap().is_none());
        let w = is_dihedral_class(12, 2, 2, 4).unwrap().unwrap();
        assert_eq!((w.m, w.p, w.scale), (3, 1, 2));
    }

    #[test]
    fn dihedral_witness_reproduces_shape() {
        for (d, ks) in [(10u32, [3u32, 2, 3]), (20, [3, 3, 7]), (12, [11, 7, 7]), (24, [2, 10, 2])] {
            let w = is_dihedral_class(d, ks[0], ks[1], ks[2]).unwrap().unwrap();
            let f = factor_primitive(&t(d, &ks));
            let base = f.base.ks();
            let d1 = f.base.d();
            let img: Vec<u32> = w
                .permutation
                .iter()
                .map(|&i| base[i] * w.scaling_unit % d1)
                .collect();
            assert_eq!(img, vec![w.p, w.p, w.m - w.p]);
        }
    }

    #[test]
    fn dihedral_tests_agree() {
        for d in 2..=60u32 {
            for a in 1..d {
                for b in a..d {
                    for c in b..d {
                        let shape = is_dihedral_class(d, a, b, c).unwrap().is_some();
                        assert_eq!(shape, dihedral_by_pair_sums(d, &[a, b, c]), "({d};{a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn subtuple_examples() {
        let s = subtuples(&t(6, &[1, 1, 2, 1]), 3).unwrap();
        let mut sorted: Vec<ResidueTuple> = s.iter().map(|x| x.sorted()).collect();
        sorted.sort();
        assert_eq!(
            sorted,
            vec![t(6, &[1, 1, 1]), t(6, &[1, 1, 2]), t(6, &[1, 1, 2]), t(6, &[1, 1, 2])]
        );
        assert_eq!(subtuples(&t(6, &[1; 5]), 3).unwrap().len(), 10);
        assert_eq!(subtuples(&t(6, &[1; 5]), 4).unwrap().len(), 5);
        assert!(subtuples(&t(6, &[1; 5]), 2).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let h = |n, d| Fraction::new(n, d);
        assert_eq!(
            schwarz_normal_form([h(1, 2), h(1, 3), h(1, 3)]),
            [h(1, 2), h(1, 3), h(1, 3)]
        );
        // complementing two coordinates of the (12;3,3,5) row
        assert_eq!(
            schwarz_normal_form([h(1, 2), h(2, 3), h(2, 3)]),
            [h(1, 2), h(1, 3), h(1, 3)]
        );
    }

    #[test]
    fn small_enumeration() {
        let e = enumerate_triples(12).unwrap();
        let canon: Vec<ResidueTuple> = e.schwarz_classes.iter().map(|c| c.class.canonical.clone()).collect();
        assert_eq!(
            canon,
            vec![
                t(6, &[1, 1, 1]),
                t(6, &[1, 1, 3]),
                t(10, &[1, 1, 1]),
                t(10, &[1, 1, 7]),
                t(12, &[1, 2, 2]),
                t(12, &[1, 2, 7]),
                t(12, &[1, 3, 3]),
                t(12, &[1, 3, 5]),
            ]
        );
        for c in &e.schwarz_classes {
            assert_eq!(c.class.orbit_size, crate::arith::euler_phi(c.class.d()) as usize);
            for (m, _) in &c.class.members {
                assert!(satisfies_condition(m).holds);
            }
        }
    }

    #[test]
    fn extend_from_nothing_is_empty() {
        assert!(extend_level(&[], 5).unwrap().is_empty());
    }
}
