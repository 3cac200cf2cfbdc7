//! The acceptance criteria as runnable checks.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::Result;
use fracsum::arith::{canonical_rep, euler_phi, gcd_all, units, Fraction};
use fracsum::classify::{
    classify_n, diff_orbit_lines, diff_table1, diff_table4, enumerate_quadruples, enumerate_triples,
    is_dihedral_class, reference, subtuples, table1, table1_direct_hits, table2, QuadrupleSearch,
    TripleEnumeration, DEFAULT_D_MAX,
};
use fracsum::conditions::{holds_ss, holds_star, satisfies_condition, sum_fracs};
use fracsum::cyclotomic::CycloElem;
use fracsum::forms::{
    build_h, closed_form_minor, det_sign_n2, is_totally_anisotropic, principal_minors, MinorChain, MinorTables,
    SIGN_GUARD,
};
use fracsum::groups::{
    dihedral_trace_test, gassner_generators_n2, pgl2_orders, preserves_form, triple_closure, ClosureOptions,
    DEFAULT_CAP,
};
use fracsum::ResidueTuple;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::render::{Report, Table};
use crate::Status;

/// Agreement tolerance between exact cyclotomic values and their complex embeddings.
pub const EMBED_TOL: f64 = 1e-9;
pub const SWEEP_D_MAX: u32 = 30;
pub const ORACLE_D_MAX: u32 = 12;
const FORM_SAMPLES: usize = 16;
const PROPERTY_CASES: usize = 2000;
const LITERAL_SAMPLE: [(u32, [u32; 3]); 2] = [(5, [1, 1, 1]), (7, [1, 2, 4])];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {} ({:.2} s)",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.seconds
        )
    }
}

/// Failed sub-checks collected while a criterion runs.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self, id: u8, title: &'static str, summary: String, start: Instant) -> CriterionResult {
        let pass = self.0.is_empty();
        let detail = if pass {
            summary
        } else {
            let shown: Vec<&str> = self.0.iter().take(5).map(String::as_str).collect();
            format!("{summary}; {} failures: {}", self.0.len(), shown.join("; "))
        };
        CriterionResult {
            id,
            title,
            pass,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Triple enumeration and quadruple search shared by criteria 1 to 3.
pub struct Context {
    pub triples: TripleEnumeration,
    pub quads: QuadrupleSearch,
    pub seconds: f64,
}

impl Context {
    pub fn new() -> Result<Context> {
        let start = Instant::now();
        let triples = enumerate_triples(DEFAULT_D_MAX)?;
        let quads = enumerate_quadruples(&triples)?;
        Ok(Context {
            triples,
            quads,
            seconds: start.elapsed().as_secs_f64(),
        })
    }
}

fn t(d: u32, ks: &[u32]) -> ResidueTuple {
    ResidueTuple::new(d, ks.to_vec()).expect("fixed tuple")
}

pub fn criterion_1(ctx: &Context) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let rows = table1(&ctx.triples)?;
    f.check(rows.len() == 14, || format!("{} rows", rows.len()));
    f.check(rows.iter().all(|r| r.d <= 60), || "row with d > 60".into());
    f.check(
        ctx.triples.schwarz_classes.iter().all(|c| c.class.d() <= 60),
        || "non-dihedral class with 60 < d <= 120".into(),
    );
    let (only_computed, only_printed) = diff_table1(&rows);
    f.check(only_computed.is_empty(), || format!("unmatched computed rows {only_computed:?}"));
    f.check(only_printed.is_empty(), || format!("unmatched printed rows {only_printed:?}"));
    let hits = table1_direct_hits(&ctx.triples)?;
    f.check(hits.len() == 14 && hits.values().all(|&h| h == 1), || {
        format!("normal form hits {:?}", hits.values().collect::<Vec<_>>())
    });
    let summary = format!(
        "{} rows, all values equal to the printed table; d <= {DEFAULT_D_MAX} sweep took {:.2} s",
        rows.len(),
        ctx.seconds
    );
    Ok(f.finish(1, "Table 1 reproduction", summary, start))
}

pub fn criterion_2(ctx: &Context) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let lines = table2(&ctx.triples);
    let diff = diff_orbit_lines(&lines, reference::TABLE2);
    f.check(diff.is_empty(), || format!("diff {diff:?}"));
    let moduli: BTreeSet<u32> = lines.iter().map(|l| l.d).collect();
    f.check(moduli == BTreeSet::from([6, 10, 12, 15, 20, 24, 30, 60]), || format!("moduli {moduli:?}"));
    for l in &lines {
        let total: usize = l.members.iter().map(|m| m.1).sum();
        f.check(total == euler_phi(l.d) as usize, || format!("d={} line sums to {total}", l.d));
    }
    let d60: Vec<_> = lines.iter().filter(|l| l.d == 60).collect();
    f.check(d60.len() == 1 && d60[0].members.len() == 16, || "d=60 is not one orbit of 16".into());
    let summary = format!("{} orbit lines, each of cardinality phi(d); d=60 is one orbit of 16", lines.len());
    Ok(f.finish(2, "Table 2 reproduction", summary, start))
}

pub fn criterion_3(ctx: &Context) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let expected: [(usize, Vec<ResidueTuple>); 4] = [
        (3, vec![t(6, &[1, 1, 1, 1]), t(6, &[1, 1, 1, 2])]),
        (4, vec![t(6, &[1, 1, 1, 1, 1])]),
        (5, vec![]),
        (6, vec![]),
    ];
    for (n, want) in &expected {
        let got: Vec<ResidueTuple> = classify_n(*n, DEFAULT_D_MAX)?
            .classes
            .into_iter()
            .map(|c| c.canonical)
            .collect();
        f.check(&got == want, || format!("classify_n({n}) = {got:?}"));
    }
    let q = &ctx.quads;
    let a = &q.winners_nondihedral;
    f.check(*a == [t(6, &[1, 1, 1, 1]), t(6, &[5, 5, 5, 5])], || format!("Table 3 winners {a:?}"));
    f.check(
        a.iter().map(canonical_rep).collect::<BTreeSet<_>>().len() == 1,
        || "Table 3 winners span several classes".into(),
    );
    let b = &q.winners_dihedral_shape;
    f.check(*b == [t(6, &[1, 1, 2, 1])], || format!("Table 4 winners {b:?}"));
    f.check(q.candidates_nondihedral.iter().all(|l| l.d != 120), || "d=120 has candidates".into());
    let t3 = diff_orbit_lines(&q.candidates_nondihedral, reference::TABLE3);
    f.check(t3.is_empty(), || format!("Table 3 diff {t3:?}"));
    let t4 = diff_table4(q);
    let shown = |v: &[ResidueTuple]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
    let summary = format!(
        "classify_n(3..6) as expected; Table 3 matches; Table 4 diff: computed-only [{}], printed-only [{}]",
        shown(&t4.only_computed),
        shown(&t4.only_printed)
    );
    Ok(f.finish(3, "case analysis for n >= 3", summary, start))
}

/// Calls `visit` on every tuple of the given length over `1..d`, ordered or
/// non-decreasing.
fn for_each_tuple(d: u32, len: usize, ordered: bool, mut visit: impl FnMut(&[u32])) {
    let mut ks = vec![1u32; len];
    loop {
        visit(&ks);
        let mut i = len;
        while i > 0 && ks[i - 1] == d - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        ks[i - 1] += 1;
        let reset = if ordered { 1 } else { ks[i - 1] };
        ks[i..].iter_mut().for_each(|k| *k = reset);
    }
}

/// Criterion 4: every ordered primitive tuple of length 3 to 5.
pub fn criterion_4() -> Result<CriterionResult> {
    criterion_4_up_to(SWEEP_D_MAX)
}

pub fn criterion_4_up_to(d_max: u32) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let mut tuples = 0u64;
    let mut holding = 0u64;
    for d in 2..=d_max {
        let us = units(d).units;
        for len in 3..=5 {
            for_each_tuple(d, len, true, |ks| {
                if gcd_all(d, ks) != 1 {
                    return;
                }
                tuples += 1;
                let ss = holds_ss(d, ks, &us);
                holding += u64::from(ss);
                let star = holds_star(d, ks, &us);
                let an = is_totally_anisotropic(d, ks, &us);
                f.check(ss == star && ss == an, || format!("({d};{ks:?}) SS={ss} STAR={star} aniso={an}"));
            });
        }
    }
    // the report-producing versions on the sorted triples and quadruples
    for d in 2..=d_max.min(20) {
        for len in 3..=4 {
            for_each_tuple(d, len, false, |ks| {
                let tup = t(d, ks);
                let ss = satisfies_condition(&tup).holds;
                let star = fracsum::conditions::satisfies_star(&tup).holds;
                let an = fracsum::forms::totally_anisotropic(&tup).holds;
                f.check(ss == star && ss == an, || format!("{tup} reports disagree"));
            });
        }
    }
    let summary = format!("{tuples} ordered primitive tuples with d <= {d_max}, n in 2..=4 ({holding} satisfy SS), no mismatch");
    Ok(f.finish(4, "equivalence sweep", summary, start))
}

pub fn criterion_5() -> Result<CriterionResult> {
    criterion_5_up_to(SWEEP_D_MAX)
}

pub fn criterion_5_up_to(d_max: u32) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let mut signs = 0u64;
    let mut guarded = 0u64;
    for d in 2..=d_max {
        let us = units(d).units;
        for_each_tuple(d, 3, true, |ks| {
            if gcd_all(d, ks) != 1 {
                return;
            }
            let tup = t(d, ks);
            for &s in &us {
                let ds = det_sign_n2(d, ks[0], ks[1], ks[2], s).expect("valid triple and unit");
                let sigma = sum_fracs(&tup, s).expect("unit").floor();
                let expected = if sigma % 2 == 0 { -1 } else { 1 };
                signs += 1;
                f.check(ds.sign == expected, || format!("{tup} s={s}: sign {}", ds.sign));
                match ds.float_agrees {
                    Some(ok) => f.check(ok, || format!("{tup} s={s}: float {}", ds.float_value)),
                    None => {
                        guarded += 1;
                        // only an exactly vanishing determinant may sit in the band
                        let total: u32 = ks.iter().sum();
                        f.check(total % d == 0, || format!("{tup} s={s}: float {} in the guard band", ds.float_value));
                    }
                }
            }
        });
    }
    // full recurrence at every unit for sorted triples
    let mut full = 0u64;
    for d in 2..=d_max {
        let us = units(d).units;
        for_each_tuple(d, 3, false, |ks| {
            let tup = t(d, ks);
            for &s in &us {
                full += 1;
                let ok = principal_minors(&build_h(&tup, s).expect("valid")).is_ok();
                f.check(ok, || format!("{tup} s={s}: recurrence differs from closed form"));
            }
        });
    }
    // incremental minors at s = 1 for every non-decreasing tuple of length <= 5;
    // the Galois action carries both sides to every other unit
    let mut chained = 0u64;
    for d in 2..=d_max {
        let tables = MinorTables::new(d)?;
        let mut chain = MinorChain::new(&tables);
        chained += minor_dfs(&mut chain, d, 1, 5, &mut f)?;
    }
    let galois = galois_spot_check(d_max, &mut f)?;
    let summary = format!(
        "{signs} signs ({guarded} inside the {SIGN_GUARD:e} guard band, all with sum k = 0 mod d); {full} full minor sequences; {chained} incremental minors; {galois} Galois transports"
    );
    Ok(f.finish(5, "sign identities and minors", summary, start))
}

fn minor_dfs(chain: &mut MinorChain, d: u32, min: u32, max_len: usize, f: &mut Failures) -> Result<u64> {
    let mut count = 0;
    for e in min..d {
        let ok = chain.push(e)?;
        if chain.depth() >= 2 {
            count += 1;
            f.check(ok, || format!("d={d} depth {} last {e}: minor differs from closed form", chain.depth()));
        }
        if chain.depth() < max_len {
            count += minor_dfs(chain, d, e, max_len, f)?;
        }
        chain.pop();
    }
    Ok(count)
}

/// Minors at `s` equal the Galois image of minors at 1, on a fixed tuple per modulus.
fn galois_spot_check(d_max: u32, f: &mut Failures) -> Result<u64> {
    let mut count = 0;
    for d in 3..=d_max {
        let ks: Vec<u32> = [1, 2, d - 1, 3, d - 2].iter().map(|&k| k % d).filter(|&k| k != 0).collect();
        let tup = ResidueTuple::new(d, ks)?;
        for s in units(d).iter() {
            for j in 1..tup.n() {
                count += 1;
                let lhs = closed_form_minor(&tup, s, j)?;
                let rhs = closed_form_minor(&tup, 1, j)?.galois(s)?;
                f.check(lhs == rhs, || format!("{tup} s={s} j={j}: Galois transport fails"));
            }
        }
    }
    Ok(count)
}

pub fn criterion_6(seed: u64) -> Result<CriterionResult> {
    criterion_6_up_to(ORACLE_D_MAX, seed)
}

pub fn criterion_6_up_to(d_max: u32, seed: u64) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut opts = ClosureOptions::with_cap(DEFAULT_CAP);
    opts.stop_on_infinite_order = true;
    let (mut total, mut finite, mut max_order, mut dihedral) = (0u64, 0u64, 0usize, 0u64);
    for d in 2..=d_max {
        let mut err = None;
        for_each_tuple(d, 3, true, |ks| {
            if err.is_some() {
                return;
            }
            if let Err(e) = oracle_triple(d, ks, opts, &mut rng, &mut f, &mut dihedral).map(|order| {
                total += 1;
                if let Some(o) = order {
                    finite += 1;
                    max_order = max_order.max(o);
                }
            }) {
                err = Some(e);
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    let e = enumerate_triples(60)?;
    for row in table1(&e)? {
        let k = row.tuple.ks();
        let p = pgl2_orders(row.d, k[0], k[1], k[2])?;
        f.check(p.orders.iter().all(|&o| o <= 5), || format!("{}: orders {:?}", row.tuple, p.orders));
    }
    let mut literal = vec![];
    for (d, ks) in LITERAL_SAMPLE {
        let tup = t(d, &ks);
        let c = triple_closure(&tup, ClosureOptions::with_cap(DEFAULT_CAP))?;
        f.check(
            !satisfies_condition(&tup).holds && !c.result.finite && c.result.elements_found > DEFAULT_CAP,
            || format!("{tup}: literal closure {}", c.result.verdict()),
        );
        literal.push(format!("{tup} {}", c.result.verdict()));
    }
    let summary = format!(
        "{total} ordered primitive triples with d <= {d_max}: {finite} finite (largest order {max_order}), {dihedral} dihedral; literal runs: {}",
        literal.join(", ")
    );
    Ok(f.finish(6, "group oracle agreement", summary, start))
}

/// Closure, form and trace checks for one triple; the group order if finite.
fn oracle_triple(
    d: u32,
    ks: &[u32],
    opts: ClosureOptions,
    rng: &mut ChaCha8Rng,
    f: &mut Failures,
    dihedral: &mut u64,
) -> Result<Option<usize>> {
    if gcd_all(d, ks) != 1 {
        return Ok(None);
    }
    let tup = t(d, ks);
    let ss = satisfies_condition(&tup).holds;
    let c = triple_closure(&tup, opts)?;
    f.check(c.result.finite == ss, || format!("{tup}: SS={ss}, closure {}", c.result.verdict()));
    if c.result.finite {
        let h = build_h(&tup, 1)?;
        for i in sample(rng, c.len(), FORM_SAMPLES.min(c.len())) {
            f.check(preserves_form(&c.element(i)?, &h)?, || format!("{tup}: element {i} moves the form"));
        }
    }
    let (a, b) = gassner_generators_n2(d, ks[0], ks[1], ks[2])?;
    let trace = dihedral_trace_test(&a, &b)?.dihedral;
    let family = is_dihedral_class(d, ks[0], ks[1], ks[2])?.is_some();
    *dihedral += u64::from(family);
    f.check(trace == family, || format!("{tup}: trace test {trace}, family {family}"));
    Ok(c.result.order)
}

fn random_elem(rng: &mut ChaCha8Rng, d: u32) -> Result<CycloElem> {
    let phi = euler_phi(d) as usize;
    let coeffs: Vec<Fraction> = (0..phi)
        .map(|_| Fraction::new(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
        .collect();
    Ok(CycloElem::from_coeffs(d, &coeffs)?)
}

pub fn criterion_7(seed: u64) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut f = Failures::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PROPERTY_CASES {
        let d = rng.gen_range(2..=60u32);
        let len = rng.gen_range(3..=7usize);
        let tup = ResidueTuple::new(d, (0..len).map(|_| rng.gen_range(1..d)).collect())?;
        let us = units(d).units;
        let s = us[rng.gen_range(0..us.len())];
        let neg = if d == 2 { 1 } else { d - s };
        let total = sum_fracs(&tup, s)? + sum_fracs(&tup, neg)?;
        f.check(total == Fraction::from_int(len as i64), || format!("{tup} s={s}: sums {total}"));
        let c = canonical_rep(&tup);
        f.check(canonical_rep(&c) == c, || format!("{tup}: canonical not idempotent"));
        f.check(canonical_rep(&tup.scaled(s)?) == c, || format!("{tup}: canonical not orbit invariant"));
    }
    let conductors = [3u32, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 30];
    for _ in 0..PROPERTY_CASES / 4 {
        let d = conductors[rng.gen_range(0..conductors.len())];
        let (a, b) = (random_elem(&mut rng, d)?, random_elem(&mut rng, d)?);
        let us = units(d).units;
        let (s, u) = (us[rng.gen_range(0..us.len())], us[rng.gen_range(0..us.len())]);
        let su = (s as u64 * u as u64 % d as u64) as u32;
        let ga = a.galois(s)?;
        let gb = b.galois(s)?;
        f.check(a.try_add(&b)?.galois(s)? == ga.try_add(&gb)?, || format!("d={d} s={s}: additivity"));
        f.check(a.try_mul(&b)?.galois(s)? == ga.try_mul(&gb)?, || format!("d={d} s={s}: multiplicativity"));
        f.check(ga.galois(u)? == a.galois(su)?, || format!("d={d}: composition"));
        let exact = a.try_mul(&b)?.embed(s)?;
        let float = a.embed(s)? * b.embed(s)?;
        let err = (exact - float).norm();
        f.check(err <= EMBED_TOL * 1f64.max(float.norm()), || format!("d={d} s={s}: embed error {err:e}"));
    }
    let mut winners = 0;
    for n in 3..=4 {
        for class in classify_n(n, DEFAULT_D_MAX)?.classes {
            for (m, _) in &class.members {
                winners += 1;
                for size in 3..m.ks().len() {
                    for sub in subtuples(m, size)? {
                        f.check(satisfies_condition(&sub).holds, || format!("{sub} inside {m} fails SS"));
                    }
                }
            }
        }
    }
    let summary = format!(
        "seed {seed}: {PROPERTY_CASES} tuple cases, {} field cases at tolerance {EMBED_TOL:e}, {winners} winners bootstrap-sound",
        PROPERTY_CASES / 4
    );
    Ok(f.finish(7, "property suites", summary, start))
}

pub fn run_all(seed: u64) -> Result<Vec<CriterionResult>> {
    let ctx = Context::new()?;
    Ok(vec![
        criterion_1(&ctx)?,
        criterion_2(&ctx)?,
        criterion_3(&ctx)?,
        criterion_4()?,
        criterion_5()?,
        criterion_6(seed)?,
        criterion_7(seed)?,
    ])
}

pub fn report(seed: u64) -> Result<(Report, Status)> {
    let results = run_all(seed)?;
    let mut t = Table::new("acceptance", &["criterion", "title", "pass", "detail", "seconds"]);
    for r in &results {
        t.push(vec![
            json!(r.id),
            json!(r.title),
            json!(r.pass),
            json!(r.detail),
            json!(format!("{:.2}", r.seconds)),
        ]);
    }
    let pass = results.iter().all(|r| r.pass);
    let mut rep = Report::new("verify");
    rep.tables.push(t);
    rep.field("seed", seed);
    rep.field("all_pass", pass);
    Ok((rep, Status::Ok.and(pass)))
}
