//! The fractional-part conditions and their per-unit diagnostics.
//!
//! Two conditions are decided here, by deliberately separate code paths:
//!
//! - **SS**: for every unit `s`, `sum_i {k_i s/d} < 1` or `sum_i {-k_i s/d} < 1`.
//!   For three residues this is the Schwarz condition on a triple.
//! - **STAR**: for every unit `s` and `1 <= j <= n-1`,
//!   `eps_j(s) = (-1)^[nu_j(s) + mu_{j+1}(s) + mu_{j+2}(s)] = +1` where
//!   `nu_j(s) = {k_1 s/d + ... + k_j s/d}` and `mu_i(s) = {k_i s/d}`.
//!
//! The two are equivalent; nothing here assumes it.

use serde::{Deserialize, Serialize};

use crate::arith::{check_unit, frac_part, remainder, units, Fraction, ResidueTuple};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionName {
    #[serde(rename = "SS")]
    Ss,
    #[serde(rename = "STAR")]
    Star,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub s: u32,
    pub sum_s: Fraction,
    pub sum_neg_s: Fraction,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition_name: ConditionName,
    pub tuple: ResidueTuple,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl ConditionReport {
    /// First unit at which the condition breaks.
    pub fn first_failure(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| !w.ok)
    }
}

/// Per-unit data behind condition STAR.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarTrace {
    pub s: u32,
    /// `alpha_j = {k_1 s/d} + ... + {k_j s/d}` for `j = 1..=n+1`, not reduced.
    pub partial_sums: Vec<Fraction>,
    /// `nu_j(s)` for `j = 1..=n-1`.
    pub nu: Vec<Fraction>,
    /// `eps_j(s)` for `j = 1..=n-1`, each `+1` or `-1`.
    pub eps: Vec<i8>,
}

impl StarTrace {
    pub fn all_positive(&self) -> bool {
        self.eps.iter().all(|&e| e == 1)
    }
}

/// `(lambda, mu, nu) = (1 - m1 - m2, 1 - m1 - m3, 1 - m2 - m3)` with `m_i = {k_i/d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LmnTriple {
    pub lambda: Fraction,
    pub mu: Fraction,
    pub nu: Fraction,
}

impl LmnTriple {
    pub fn as_array(&self) -> [Fraction; 3] {
        [self.lambda, self.mu, self.nu]
    }

    pub fn all_in_open_unit_interval(&self) -> bool {
        self.as_array()
            .iter()
            .all(|x| x.is_positive() && *x < Fraction::one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuInfinity {
    pub value: Fraction,
    pub integral: bool,
}

/// `Sigma_s = sum_i {k_i s / d}`.
pub fn sum_fracs(tuple: &ResidueTuple, s: u32) -> Result<Fraction> {
    check_unit(tuple.d(), s)?;
    tuple
        .ks()
        .iter()
        .map(|&k| frac_part(k, tuple.d(), s))
        .sum::<Result<Fraction>>()
}

/// Decides condition SS with one witness per unit.
pub fn satisfies_condition(tuple: &ResidueTuple) -> ConditionReport {
    let d = tuple.d();
    let one = Fraction::one();
    let witnesses: Vec<Witness> = units(d)
        .iter()
        .map(|s| {
            let sum_s = sum_fracs(tuple, s).expect("unit by construction");
            let sum_neg_s = sum_fracs(tuple, d - s).expect("unit by construction");
            Witness {
                s,
                sum_s,
                sum_neg_s,
                ok: sum_s < one || sum_neg_s < one,
            }
        })
        .collect();
    ConditionReport {
        condition_name: ConditionName::Ss,
        tuple: tuple.clone(),
        holds: witnesses.iter().all(|w| w.ok),
        witnesses,
    }
}

/// Integer-only SS check for enumeration sweeps; `unit_list` must be the units of `d`.
pub fn holds_ss(d: u32, ks: &[u32], unit_list: &[u32]) -> bool {
    let total = (ks.len() as u64) * d as u64;
    unit_list.iter().all(|&s| {
        let l: u64 = ks.iter().map(|&k| remainder(k, d, s) as u64).sum();
        l < d as u64 || total - l < d as u64
    })
}

/// `(lambda, mu, nu)` of a triple.
pub fn lambda_mu_nu(tuple: &ResidueTuple) -> Result<LmnTriple> {
    if tuple.ks().len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: tuple.ks().len(),
        });
    }
    let d = tuple.d();
    let m: Vec<Fraction> = tuple
        .ks()
        .iter()
        .map(|&k| frac_part(k, d, 1))
        .collect::<Result<_>>()?;
    let one = Fraction::one();
    Ok(LmnTriple {
        lambda: one - m[0] - m[1],
        mu: one - m[0] - m[2],
        nu: one - m[1] - m[2],
    })
}

/// `nu_j(s)` and `eps_j(s)` for every `1 <= j <= n-1`.
pub fn star_trace(tuple: &ResidueTuple, s: u32) -> Result<StarTrace> {
    let d = tuple.d();
    check_unit(d, s)?;
    let mu: Vec<Fraction> = tuple
        .ks()
        .iter()
        .map(|&k| frac_part(k, d, s))
        .collect::<Result<_>>()?;
    let mut partial_sums = Vec::with_capacity(mu.len());
    let mut acc = Fraction::zero();
    for m in &mu {
        acc = acc + *m;
        partial_sums.push(acc);
    }
    let n = tuple.n();
    let mut nu = Vec::with_capacity(n.saturating_sub(1));
    let mut eps = Vec::with_capacity(n.saturating_sub(1));
    for j in 1..n {
        // 1-based j: nu_j uses alpha_j; mu_{j+1}, mu_{j+2} are mu[j], mu[j+1].
        let nu_j = partial_sums[j - 1].fract();
        let bracket = (nu_j + mu[j] + mu[j + 1]).floor();
        nu.push(nu_j);
        eps.push(if bracket % 2 == 0 { 1 } else { -1 });
    }
    Ok(StarTrace {
        s,
        partial_sums,
        nu,
        eps,
    })
}

/// Decides condition STAR. Witness sums are `Sigma_s` and `Sigma_{-s}` for reference;
/// `ok` comes only from the signs `eps_j(s)`.
pub fn satisfies_star(tuple: &ResidueTuple) -> ConditionReport {
    let d = tuple.d();
    let witnesses: Vec<Witness> = units(d)
        .iter()
        .map(|s| {
            let trace = star_trace(tuple, s).expect("unit by construction");
            let sum_s = *trace.partial_sums.last().expect("nonempty tuple");
            let sum_neg_s = Fraction::from_int(tuple.ks().len() as i64) - sum_s;
            Witness {
                s,
                sum_s,
                sum_neg_s,
                ok: trace.all_positive(),
            }
        })
        .collect();
    ConditionReport {
        condition_name: ConditionName::Star,
        tuple: tuple.clone(),
        holds: witnesses.iter().all(|w| w.ok),
        witnesses,
    }
}

/// Integer-only STAR check for sweeps; `unit_list` must be the units of `d`.
pub fn holds_star(d: u32, ks: &[u32], unit_list: &[u32]) -> bool {
    let d = d as u64;
    unit_list.iter().all(|&s| {
        let r = |k: u32| k as u64 * s as u64 % d;
        let mut prefix = 0u64;
        for j in 0..ks.len().saturating_sub(2) {
            prefix = (prefix + r(ks[j])) % d;
            if (prefix + r(ks[j + 1]) + r(ks[j + 2])) / d % 2 == 1 {
                return false;
            }
        }
        true
    })
}

/// `mu_inf = 2 - sum_i k_i/d`.
pub fn mu_infinity(tuple: &ResidueTuple) -> MuInfinity {
    let total: i64 = tuple.ks().iter().map(|&k| k as i64).sum();
    let value = Fraction::from_int(2) - Fraction::new(total, tuple.d() as i64);
    MuInfinity {
        value,
        integral: value.is_integer(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: u32, ks: &[u32]) -> ResidueTuple {
        ResidueTuple::new(d, ks.to_vec()).unwrap()
    }

    #[test]
    fn sum_fracs_examples() {
        assert_eq!(sum_fracs(&t(6, &[1, 1, 1, 1, 1]), 1).unwrap(), Fraction::new(5, 6));
        assert_eq!(sum_fracs(&t(6, &[1; 6]), 1).unwrap(), Fraction::one());
        assert_eq!(sum_fracs(&t(12, &[3, 3, 5]), 7).unwrap(), Fraction::new(29, 12));
        assert!(sum_fracs(&t(12, &[3, 3, 5]), 2).is_err());
    }

    #[test]
    fn condition_examples() {
        assert!(satisfies_condition(&t(6, &[1, 1, 1, 1, 1])).holds);
        assert!(!satisfies_condition(&t(6, &[1; 6])).holds);
        assert!(satisfies_condition(&t(6, &[1, 1, 2, 1])).holds);
        assert!(satisfies_condition(&t(12, &[3, 3, 5])).holds);
    }

    #[test]
    fn sum_equal_to_one_fails_both_branches() {
        // Sigma_1 = 1 exactly, Sigma_{-1} = 2.
        let r = satisfies_condition(&t(4, &[1, 1, 2]));
        let w = r.witnesses.iter().find(|w| w.s == 1).unwrap();
        assert_eq!(w.sum_s, Fraction::one());
        assert!(!w.ok);
        assert!(!r.holds);
    }

    #[test]
    fn lmn_examples() {
        let f = Fraction::new;
        let l = lambda_mu_nu(&t(12, &[3, 3, 5])).unwrap();
        assert_eq!(l.as_array(), [f(1, 2), f(1, 3), f(1, 3)]);
        let l = lambda_mu_nu(&t(10, &[3, 3, 3])).unwrap();
        assert_eq!(l.as_array(), [f(2, 5), f(2, 5), f(2, 5)]);
        let l = lambda_mu_nu(&t(6, &[1, 1, 3])).unwrap();
        assert_eq!(l.as_array(), [f(2, 3), f(1, 3), f(1, 3)]);
        assert!(lambda_mu_nu(&t(6, &[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn star_trace_examples() {
        let tr = star_trace(&t(6, &[1, 1, 1, 1, 1]), 5).unwrap();
        assert_eq!(tr.eps[0], 1);
        let tr = star_trace(&t(6, &[1; 6]), 1).unwrap();
        assert_eq!(tr.nu[3], Fraction::new(4, 6));
        assert_eq!(tr.eps[3], -1);
        let tr = star_trace(&t(12, &[3, 3, 5]), 1).unwrap();
        assert_eq!(tr.eps, vec![1]);
    }

    #[test]
    fn star_examples() {
        assert!(satisfies_star(&t(6, &[1, 1, 1, 1, 1])).holds);
        assert!(!satisfies_star(&t(6, &[1; 6])).holds);
        assert!(satisfies_star(&t(12, &[3, 3, 5])).holds);
    }

    #[test]
    fn mu_infinity_examples() {
        let m = mu_infinity(&t(6, &[1, 1, 1, 1, 1]));
        assert_eq!(m.value, Fraction::new(7, 6));
        assert!(!m.integral);
        assert_eq!(mu_infinity(&t(12, &[3, 3, 5])).value, Fraction::new(13, 12));
        let m = mu_infinity(&t(4, &[1, 1, 2]));
        assert_eq!(m.value, Fraction::one());
        assert!(m.integral);
    }

    #[test]
    fn fast_path_agrees_with_report() {
        for d in 2..=14u32 {
            let u = units(d).units;
            for a in 1..d {
                for b in a..d {
                    for c in b..d {
                        let tup = t(d, &[a, b, c]);
                        assert_eq!(holds_ss(d, tup.ks(), &u), satisfies_condition(&tup).holds);
                    }
                }
            }
        }
    }

    #[test]
    fn report_json_uses_fraction_strings() {
        let r = satisfies_condition(&t(6, &[1, 1, 3]));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["condition_name"], "SS");
        assert_eq!(v["witnesses"][0]["sum_s"], "5/6");
    }
}
