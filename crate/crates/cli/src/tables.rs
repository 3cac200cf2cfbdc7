use anyhow::Result;
use fracsum::classify::{
    diff_orbit_lines, diff_table1, diff_table4, enumerate_quadruples, enumerate_triples, reference, table1, table2,
    OrbitLine, TableDiff,
};
use fracsum::ResidueTuple;
use serde_json::{json, Value};

use crate::render::{Report, Table};
use crate::Status;

const ORBIT_COLUMNS: [&str; 3] = ["d", "tuples", "multiplicity"];

fn tuple_strings(ts: &[ResidueTuple]) -> Value {
    json!(ts.iter().map(|t| t.to_string()).collect::<Vec<_>>())
}

fn ks_string(t: &ResidueTuple) -> String {
    let ks: Vec<String> = t.ks().iter().map(|k| k.to_string()).collect();
    format!("({})", ks.join(","))
}

fn orbit_table(title: &str, lines: &[OrbitLine]) -> Table {
    let mut t = Table::new(title, &ORBIT_COLUMNS);
    for l in lines {
        let tuples: Vec<String> = l.members.iter().map(|(m, _)| ks_string(m)).collect();
        let mults: Vec<usize> = l.members.iter().map(|&(_, k)| k).collect();
        // members of one orbit share a stabilizer, hence one multiplicity
        let mult = if mults.windows(2).all(|w| w[0] == w[1]) {
            json!(mults[0])
        } else {
            json!(mults)
        };
        t.push(vec![json!(l.d), json!(tuples), mult]);
    }
    t
}

fn diff_fields(r: &mut Report, diff: &TableDiff) {
    r.field("matches_printed", diff.is_empty());
    r.field("only_computed", tuple_strings(&diff.only_computed));
    r.field("only_printed", tuple_strings(&diff.only_printed));
}

/// Renders Table `which` from a fresh triple enumeration up to `d_max`.
pub fn table(which: u8, d_max: u32) -> Result<(Report, Status)> {
    let e = enumerate_triples(d_max)?;
    let mut r = Report::new("tables");
    r.field("which", which);
    r.field("d_max", d_max);
    let ok = match which {
        1 => {
            let rows = table1(&e)?;
            let mut t = Table::new(
                "Table 1",
                &["d", "mu1", "mu2", "mu3", "k1/d", "k2/d", "k3/d", "lambda", "mu", "nu"],
            );
            for row in &rows {
                let mut cells = vec![json!(row.d)];
                cells.extend(
                    row.mu
                        .iter()
                        .chain(&row.k_over_d)
                        .chain(&row.lmn)
                        .map(|f| json!(f.to_string())),
                );
                t.push(cells);
            }
            r.tables.push(t);
            let (only_computed, only_printed) = diff_table1(&rows);
            r.field("rows", rows.len());
            r.field("matches_printed", only_computed.is_empty() && only_printed.is_empty());
            r.field("only_computed", tuple_strings(&only_computed));
            r.field("only_printed_rows", json!(only_printed));
            only_computed.is_empty() && only_printed.is_empty()
        }
        2 => {
            let lines = table2(&e);
            r.tables.push(orbit_table("Table 2", &lines));
            let diff = diff_orbit_lines(&lines, reference::TABLE2);
            diff_fields(&mut r, &diff);
            diff.is_empty()
        }
        3 => {
            let q = enumerate_quadruples(&e)?;
            let lines = &q.candidates_nondihedral;
            r.tables.push(orbit_table("Table 3", lines));
            let empty: Vec<u32> = q.moduli.iter().copied().filter(|&d| lines.iter().all(|l| l.d != d)).collect();
            r.field("moduli", json!(q.moduli));
            r.field("moduli_without_candidates", json!(empty));
            r.field("winners", tuple_strings(&q.winners_nondihedral));
            let diff = diff_orbit_lines(lines, reference::TABLE3);
            diff_fields(&mut r, &diff);
            diff.is_empty()
        }
        _ => {
            let q = enumerate_quadruples(&e)?;
            let mut t = Table::new("Table 4", &ORBIT_COLUMNS);
            let mut groups: Vec<((u32, u32, u32, u32), Vec<String>)> = vec![];
            for c in &q.candidates_dihedral_shape {
                let key = (c.tuple.d(), c.m, c.p, c.a);
                match groups.last_mut() {
                    Some((k, v)) if *k == key => v.push(ks_string(&c.tuple)),
                    _ => groups.push((key, vec![ks_string(&c.tuple)])),
                }
            }
            for ((d, ..), tuples) in groups {
                t.push(vec![json!(d), json!(tuples), json!(1)]);
            }
            r.tables.push(t);
            r.field("winners", tuple_strings(&q.winners_dihedral_shape));
            diff_fields(&mut r, &diff_table4(&q));
            r.notes
                .push("tuples are in shape order (ap, ap, a(m-p), m4); differences from the printed table are listed, not patched".into());
            true
        }
    };
    Ok((r, Status::Ok.and(ok)))
}
