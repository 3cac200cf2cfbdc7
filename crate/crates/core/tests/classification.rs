//! Classification results cross-checked by exhaustive search that does not use
//! the bootstrap.

use std::collections::BTreeSet;

use fracsum::arith::{canonical_rep, gcd_all, units};
use fracsum::classify::{
    classify_n, diff_orbit_lines, diff_table1, diff_table4, enumerate_quadruples, enumerate_triples, reference, subtuples,
    table1, table1_direct_hits, table2, EquivClass,
};
use fracsum::conditions::{holds_ss, satisfies_condition};
use fracsum::ResidueTuple;

fn t(d: u32, ks: &[u32]) -> ResidueTuple {
    ResidueTuple::new(d, ks.to_vec()).unwrap()
}

/// Canonical classes of all primitive sorted tuples of the given length and
/// `d <= d_max` satisfying the condition.
fn brute_force(len: usize, d_max: u32) -> BTreeSet<ResidueTuple> {
    let mut out = BTreeSet::new();
    for d in 2..=d_max {
        let us = units(d).units;
        let mut ks = vec![1u32; len];
        loop {
            if gcd_all(d, &ks) == 1 && holds_ss(d, &ks, &us) {
                out.insert(canonical_rep(&t(d, &ks)));
            }
            // next non-decreasing vector
            let mut i = len;
            while i > 0 && ks[i - 1] == d - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            ks[i - 1] += 1;
            let v = ks[i - 1];
            ks[i..].iter_mut().for_each(|k| *k = v);
        }
    }
    out
}

fn canon_set(classes: &[EquivClass]) -> BTreeSet<ResidueTuple> {
    classes.iter().map(|c| c.canonical.clone()).collect()
}

#[test]
fn quadruples_by_brute_force_up_to_60() {
    let expected = brute_force(4, 60);
    assert_eq!(expected, BTreeSet::from([t(6, &[1, 1, 1, 1]), t(6, &[1, 1, 1, 2])]));
    assert_eq!(canon_set(&classify_n(3, 120).unwrap().classes), expected);
}

#[test]
fn quintuples_by_brute_force_up_to_30() {
    let expected = brute_force(5, 30);
    assert_eq!(expected, BTreeSet::from([t(6, &[1, 1, 1, 1, 1])]));
    assert_eq!(canon_set(&classify_n(4, 120).unwrap().classes), expected);
}

#[test]
fn no_six_or_seven_tuples_by_brute_force() {
    assert!(brute_force(6, 14).is_empty());
    assert!(brute_force(7, 10).is_empty());
    assert!(classify_n(5, 120).unwrap().classes.is_empty());
    assert!(classify_n(6, 120).unwrap().classes.is_empty());
}

#[test]
fn triples_by_brute_force_match_enumeration() {
    let e = enumerate_triples(40).unwrap();
    let mut all = canon_set(&e.dihedral_classes);
    all.extend(e.schwarz_classes.iter().map(|c| c.class.canonical.clone()));
    assert_eq!(brute_force(3, 40), all);
}

#[test]
fn classes_are_closed_and_canonical() {
    for n in 2..=4 {
        let c = classify_n(n, 120).unwrap();
        let mut seen = BTreeSet::new();
        for class in &c.classes {
            assert!(seen.insert(class.canonical.clone()));
            for (m, _) in &class.members {
                assert!(satisfies_condition(m).holds, "{m}");
                assert_eq!(canonical_rep(m), class.canonical);
            }
        }
    }
}

#[test]
fn bootstrap_soundness_on_winners() {
    for n in 3..=4 {
        for class in classify_n(n, 120).unwrap().classes {
            for (m, _) in &class.members {
                for size in 3..m.ks().len() {
                    for sub in subtuples(m, size).unwrap() {
                        assert!(satisfies_condition(&sub).holds, "{sub} from {m}");
                    }
                }
            }
        }
    }
}

#[test]
fn schwarz_enumeration_facts() {
    let e = enumerate_triples(120).unwrap();
    assert_eq!(e.schwarz_classes.len(), 16);
    assert!(e.schwarz_classes.iter().all(|c| c.class.d() <= 60));
    let d60: Vec<_> = e.schwarz_classes.iter().filter(|c| c.class.d() == 60).collect();
    assert_eq!(d60.len(), 1);
    assert_eq!(d60[0].class.members.len(), 16);
    let d15: usize = e
        .schwarz_classes
        .iter()
        .filter(|c| c.class.d() == 15)
        .map(|c| c.class.members.len())
        .sum();
    assert_eq!(d15, 8);
    for c in &e.schwarz_classes {
        assert_eq!(c.class.orbit_size, fracsum::arith::euler_phi(c.class.d()) as usize);
    }
}

#[test]
fn tables_against_printed() {
    let e = enumerate_triples(120).unwrap();
    let rows = table1(&e).unwrap();
    assert_eq!(rows.len(), 14);
    assert_eq!(diff_table1(&rows), (vec![], vec![]));
    assert!(table1_direct_hits(&e).unwrap().values().all(|&h| h == 1));
    assert!(diff_orbit_lines(&table2(&e), reference::TABLE2).is_empty());
    let q = enumerate_quadruples(&e).unwrap();
    assert!(diff_orbit_lines(&q.candidates_nondihedral, reference::TABLE3).is_empty());
    assert!(q.candidates_nondihedral.iter().all(|l| l.d != 120));
    let diff = diff_table4(&q);
    assert_eq!(diff.only_computed, vec![t(30, &[3, 3, 12, 7]), t(30, &[9, 9, 6, 1])]);
    assert_eq!(diff.only_printed, vec![t(30, &[3, 3, 17, 7]), t(30, &[9, 29, 6, 1])]);
    assert_eq!(q.winners_nondihedral, vec![t(6, &[1, 1, 1, 1]), t(6, &[5, 5, 5, 5])]);
    assert_eq!(q.winners_dihedral_shape, vec![t(6, &[1, 1, 2, 1])]);
}
