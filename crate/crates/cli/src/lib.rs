//! Command implementations behind the `fracsum` binary.

use std::path::PathBuf;

use anyhow::Result;
use fracsum::arith::gcd_all;
use fracsum::classify::{classify_n, EquivClass};
use fracsum::conditions::{satisfies_condition, satisfies_star};
use fracsum::forms::{build_h, totally_anisotropic};
use fracsum::groups::{preserves_form, triple_closure, ClosureOptions};
use fracsum::ResidueTuple;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

pub mod render;
pub mod tables;
pub mod verify;

use render::{Report, Table};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_240_611;
pub const DEFAULT_ORACLE_D_MAX: u32 = 12;
const MIN_CAP: usize = 1000;
const FORM_SAMPLES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check { d: u32, ks: Vec<u32>, cap: usize },
    Enumerate { n: usize, d_max: u32 },
    Tables { which: u8, d_max: u32 },
    /// One triple when `d` and `ks` are given, all primitive triples of modulus
    /// `d` when only `d` is, else every modulus up to `d_max`.
    Oracle {
        d: Option<u32>,
        ks: Option<Vec<u32>>,
        d_max: u32,
        cap: usize,
        literal: bool,
    },
    Verify,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UsageError {
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u32),
    #[error("residue {k} out of range 1..{d}")]
    Residue { d: u32, k: u32 },
    #[error("need at least 3 residues, got {0}")]
    TooFewResidues(usize),
    #[error("the group oracle takes exactly 3 residues, got {0}")]
    OracleArity(usize),
    #[error("--ks needs --d")]
    ResiduesWithoutModulus,
    #[error("cap must be at least {MIN_CAP}, got {0}")]
    Cap(usize),
    #[error("n must be at least 2, got {0}")]
    N(usize),
    #[error("--which must be 1, 2, 3 or 4, got {0}")]
    Which(u8),
}

/// Exit status of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
        }
    }

    fn and(self, ok: bool) -> Status {
        if ok {
            self
        } else {
            Status::Mismatch
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub output: String,
}

fn check_tuple(d: u32, ks: &[u32]) -> Result<(), UsageError> {
    if d < 2 {
        return Err(UsageError::Modulus(d));
    }
    if let Some(&k) = ks.iter().find(|&&k| k == 0 || k >= d) {
        return Err(UsageError::Residue { d, k });
    }
    Ok(())
}

fn check_cap(cap: usize) -> Result<(), UsageError> {
    if cap < MIN_CAP {
        return Err(UsageError::Cap(cap));
    }
    Ok(())
}

fn check_d_max(d_max: u32) -> Result<(), UsageError> {
    if d_max < 2 {
        return Err(UsageError::Modulus(d_max));
    }
    Ok(())
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            format: Format::Md,
            out: None,
            seed: DEFAULT_SEED,
        }
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        match &self.command {
            Command::Check { d, ks, cap } => {
                check_tuple(*d, ks)?;
                if ks.len() < 3 {
                    return Err(UsageError::TooFewResidues(ks.len()));
                }
                check_cap(*cap)
            }
            Command::Enumerate { n, d_max } => {
                if *n < 2 {
                    return Err(UsageError::N(*n));
                }
                check_d_max(*d_max)
            }
            Command::Tables { which, d_max } => {
                if !(1..=4).contains(which) {
                    return Err(UsageError::Which(*which));
                }
                check_d_max(*d_max)
            }
            Command::Oracle {
                d, ks, d_max, cap, ..
            } => {
                check_cap(*cap)?;
                check_d_max(*d_max)?;
                match (d, ks) {
                    (None, Some(_)) => Err(UsageError::ResiduesWithoutModulus),
                    (Some(d), Some(ks)) => {
                        check_tuple(*d, ks)?;
                        if ks.len() != 3 {
                            return Err(UsageError::OracleArity(ks.len()));
                        }
                        Ok(())
                    }
                    (Some(d), None) => check_tuple(*d, &[]),
                    (None, None) => Ok(()),
                }
            }
            Command::Verify => Ok(()),
        }
    }
}

/// Runs a validated config and renders its report. Nothing is written here.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let (report, status) = match &config.command {
        Command::Check { d, ks, cap } => check(*d, ks, *cap)?,
        Command::Enumerate { n, d_max } => (enumerate(*n, *d_max)?, Status::Ok),
        Command::Tables { which, d_max } => tables::table(*which, *d_max)?,
        Command::Oracle {
            d,
            ks,
            d_max,
            cap,
            literal,
        } => oracle(*d, ks.as_deref(), *d_max, *cap, *literal, config.seed)?,
        Command::Verify => verify::report(config.seed)?,
    };
    Ok(Outcome {
        status,
        output: report.render(config.format)?,
    })
}

fn check(d: u32, ks: &[u32], cap: usize) -> Result<(Report, Status)> {
    let tuple = ResidueTuple::new(d, ks.to_vec())?;
    let ss = satisfies_condition(&tuple);
    let star = satisfies_star(&tuple);
    let aniso = totally_anisotropic(&tuple);
    let agree = ss.holds == star.holds && ss.holds == aniso.holds;

    let mut r = Report::new("check");
    let mut t = Table::new("criteria", &["criterion", "holds", "failing units"]);
    let ss_fail: Vec<u32> = ss.witnesses.iter().filter(|w| !w.ok).map(|w| w.s).collect();
    let star_fail: Vec<u32> = star.witnesses.iter().filter(|w| !w.ok).map(|w| w.s).collect();
    let aniso_fail: Vec<u32> = aniso.diagnostics.iter().filter(|e| !e.anisotropic).map(|e| e.s).collect();
    for (name, holds, fail) in [
        ("SS", ss.holds, &ss_fail),
        ("STAR", star.holds, &star_fail),
        ("anisotropy", aniso.holds, &aniso_fail),
    ] {
        t.push(vec![json!(name), json!(holds), json!(fail)]);
        r.json_field(name, json!({ "holds": holds, "failing_units": fail }));
    }
    r.tables.push(t);
    r.field("tuple", tuple.to_string());
    r.field("n", tuple.n());
    r.field("primitive", gcd_all(d, ks) == 1);
    r.field("criteria_agree", agree);
    r.field("monodromy_finite", if agree { json!(ss.holds) } else { Value::Null });
    r.field("monodromy_basis", "fractional-part criterion (SS), equivalent to total anisotropy of the form");

    let mut status = Status::Ok.and(agree);
    if tuple.n() == 2 {
        let mut opts = ClosureOptions::with_cap(cap);
        opts.stop_on_infinite_order = true;
        match triple_closure(&tuple, opts) {
            Ok(c) => {
                let ok = c.result.finite == ss.holds;
                r.field("oracle_verdict", c.result.verdict());
                r.field("oracle_agrees", ok);
                status = status.and(ok);
            }
            Err(e) => r.field("oracle_verdict", format!("unavailable: {e}")),
        }
    } else {
        r.notes
            .push("group oracle covers n = 2 only; for n >= 3 finiteness is decided by the form criterion".into());
    }
    if !agree {
        eprintln!("criteria disagree for {tuple}");
    }
    Ok((r, status))
}

fn class_row(c: &EquivClass) -> Vec<Value> {
    let members: Vec<String> = c.members.iter().map(|(m, mult)| format!("{m}x{mult}")).collect();
    vec![json!(c.d()), json!(c.canonical.to_string()), json!(c.orbit_size), json!(members)]
}

fn enumerate(n: usize, d_max: u32) -> Result<Report> {
    let c = classify_n(n, d_max)?;
    let mut r = Report::new("enumerate");
    let mut t = Table::new(
        format!("classes with n = {n}"),
        &["d", "canonical", "orbit size", "members"],
    );
    for class in &c.classes {
        t.push(class_row(class));
    }
    r.tables.push(t);
    r.field("n", n);
    r.field("d_max", d_max);
    r.field("class_count", c.classes.len());
    r.field("dihedral_family", c.dihedral_family);
    if c.dihedral_family {
        r.notes
            .push("the dihedral family (2m; p, p, m-p) and its scalings are present for every m and not listed".into());
    }
    Ok(r)
}

struct OracleRow {
    tuple: ResidueTuple,
    ss: bool,
    verdict: String,
    agrees: bool,
    form_preserved: Option<bool>,
}

fn oracle_one(tuple: &ResidueTuple, opts: ClosureOptions, rng: &mut ChaCha8Rng) -> Result<OracleRow> {
    let ss = satisfies_condition(tuple).holds;
    let c = triple_closure(tuple, opts)?;
    let form_preserved = if c.result.finite {
        let h = build_h(tuple, 1)?;
        let mut ok = true;
        for i in sample(rng, c.len(), FORM_SAMPLES.min(c.len())) {
            ok &= preserves_form(&c.element(i)?, &h)?;
        }
        Some(ok)
    } else {
        None
    };
    Ok(OracleRow {
        tuple: tuple.clone(),
        ss,
        agrees: c.result.finite == ss && form_preserved != Some(false),
        verdict: c.result.verdict(),
        form_preserved,
    })
}

fn oracle(d: Option<u32>, ks: Option<&[u32]>, d_max: u32, cap: usize, literal: bool, seed: u64) -> Result<(Report, Status)> {
    let mut opts = ClosureOptions::with_cap(cap);
    opts.stop_on_infinite_order = !literal;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<ResidueTuple> = match (d, ks) {
        (Some(d), Some(ks)) => vec![ResidueTuple::new(d, ks.to_vec())?],
        (Some(d), None) => primitive_sorted_triples(d),
        _ => (2..=d_max).flat_map(primitive_sorted_triples).collect(),
    };
    let mut t = Table::new(
        "closure against the fractional-part criterion",
        &["tuple", "SS", "closure", "form preserved", "agrees"],
    );
    let mut mismatches = 0;
    let mut finite = 0;
    for tuple in &tuples {
        let row = oracle_one(tuple, opts, &mut rng)?;
        mismatches += usize::from(!row.agrees);
        finite += usize::from(row.form_preserved.is_some());
        t.push(vec![
            json!(row.tuple.to_string()),
            json!(row.ss),
            json!(row.verdict),
            row.form_preserved.map_or(Value::Null, Value::from),
            json!(row.agrees),
        ]);
    }
    let mut r = Report::new("oracle");
    r.tables.push(t);
    r.field("triples", tuples.len());
    r.field("finite", finite);
    r.field("mismatches", mismatches);
    r.field(
        "mode",
        if literal {
            "literal closure up to the cap"
        } else {
            "closure with infinite-order certificates"
        },
    );
    Ok((r, Status::Ok.and(mismatches == 0)))
}

/// Primitive non-decreasing triples of modulus `d`.
pub fn primitive_sorted_triples(d: u32) -> Vec<ResidueTuple> {
    let mut out = vec![];
    for a in 1..d {
        for b in a..d {
            for c in b..d {
                if gcd_all(d, &[a, b, c]) == 1 {
                    out.push(ResidueTuple::new(d, vec![a, b, c]).expect("residues in range"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fracsum::groups::DEFAULT_CAP;

    fn cfg(command: Command) -> RunConfig {
        let mut c = RunConfig::new(command);
        c.format = Format::Json;
        c
    }

    #[test]
    fn validation() {
        let bad = [
            Command::Check { d: 1, ks: vec![1, 1, 1], cap: 1000 },
            Command::Check { d: 6, ks: vec![1, 6, 1], cap: 1000 },
            Command::Check { d: 6, ks: vec![1, 1], cap: 1000 },
            Command::Check { d: 6, ks: vec![1, 1, 1], cap: 999 },
            Command::Enumerate { n: 1, d_max: 120 },
            Command::Tables { which: 5, d_max: 120 },
            Command::Oracle { d: None, ks: Some(vec![1, 1, 1]), d_max: 12, cap: 1000, literal: false },
            Command::Oracle { d: Some(6), ks: Some(vec![1, 1, 1, 1]), d_max: 12, cap: 1000, literal: false },
        ];
        for c in bad {
            assert!(cfg(c.clone()).validate().is_err(), "{c:?}");
        }
        assert!(cfg(Command::Check { d: 6, ks: vec![1, 1, 1, 1, 1], cap: 1000 }).validate().is_ok());
    }

    #[test]
    fn check_six_ones() {
        let out = run(&cfg(Command::Check { d: 6, ks: vec![1; 5], cap: DEFAULT_CAP })).unwrap();
        assert_eq!(out.status, Status::Ok);
        let v: Value = serde_json::from_str(&out.output).unwrap();
        for c in ["SS", "STAR", "anisotropy"] {
            assert_eq!(v[c]["holds"], json!(true));
        }
        assert_eq!(v["monodromy_finite"], json!(true));
        assert!(v["notes"][0].as_str().unwrap().contains("n = 2 only"));
    }

    #[test]
    fn check_triple_runs_oracle() {
        let out = run(&cfg(Command::Check { d: 7, ks: vec![1, 2, 4], cap: DEFAULT_CAP })).unwrap();
        let v: Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(out.status, Status::Ok);
        assert_eq!(v["monodromy_finite"], json!(false));
        assert_eq!(v["oracle_agrees"], json!(true));
    }

    #[test]
    fn enumerate_five_is_empty() {
        let out = run(&cfg(Command::Enumerate { n: 5, d_max: 120 })).unwrap();
        let v: Value = serde_json::from_str(&out.output).unwrap();
        assert_eq!(v["class_count"], json!(0));
    }

    #[test]
    fn oracle_single_modulus() {
        let c = Command::Oracle { d: Some(6), ks: None, d_max: 12, cap: 10_000, literal: false };
        let out = run(&cfg(c)).unwrap();
        assert_eq!(out.status, Status::Ok);
    }

    #[test]
    fn output_is_deterministic() {
        let c = cfg(Command::Tables { which: 2, d_max: 60 });
        assert_eq!(run(&c).unwrap().output, run(&c).unwrap().output);
    }
}
