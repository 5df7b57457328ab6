//! Exhaustive enumeration of local configurations, used to regenerate the
//! tables from scratch.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::local::classify::{classify, Classification};
use crate::local::code::{symmetry_group, table_dup, RelationCode};
use crate::local::config::{DupPattern, LocalConfig};
use crate::local::tables::{table, TABLE_SIZES};

/// Line counts occurring in a table.
pub fn table_shapes(table: u8) -> &'static [usize] {
    match table {
        1 => &[0, 1, 2, 3, 4],
        2 => &[2, 3, 4],
        4 | 7 => &[0, 2, 4],
        _ => &[4],
    }
}

/// Sequences of `n` elements of `(Z_2)^r` up to `GL_r(F_2)`, in echelon
/// form: each entry is a nonzero element of the span of the earlier ones or
/// the next unit vector. Returns `(r, elements)` pairs.
fn echelon_sequences(n: usize) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(n: usize, dim: usize, current: &mut Vec<u32>, out: &mut Vec<(usize, Vec<u32>)>) {
        if current.len() == n {
            out.push((dim, current.clone()));
            return;
        }
        for g in 1u32..1 << dim {
            current.push(g);
            rec(n, dim, current, out);
            current.pop();
        }
        current.push(1 << dim);
        rec(n, dim + 1, current, out);
        current.pop();
    }
    rec(n, 0, &mut current, &mut out);
    out
}

fn build(table: u8, k: usize, r: usize, elems: &[u32]) -> Option<LocalConfig> {
    let dup = table_dup(table);
    match table {
        1..=3 => LocalConfig::smooth(r, elems.to_vec(), dup).ok(),
        4..=6 => {
            let h = k / 2;
            LocalConfig::double_crossing(
                r,
                0,
                elems[..h].to_vec(),
                elems[h..].to_vec(),
                dup != DupPattern::None,
                dup == DupPattern::BothPairs,
            )
            .ok()
        }
        _ => {
            let h = k / 2;
            let lines = &elems[1..];
            LocalConfig::double_crossing(
                r,
                elems[0],
                lines[..h].to_vec(),
                lines[h..].to_vec(),
                dup != DupPattern::None,
                dup == DupPattern::BothPairs,
            )
            .ok()
        }
    }
}

/// One equivalence class of admissible configurations of a table shape.
#[derive(Clone, Debug, Serialize)]
pub struct EnumeratedClass {
    pub k: usize,
    pub relations: String,
    pub config: LocalConfig,
    pub classification: Classification,
}

/// All admissible configurations of a table's shapes, one per class under
/// the table symmetries, each classified and checked against its row.
pub fn enumerate_table(table_id: u8) -> Result<Vec<EnumeratedClass>> {
    if !(1..=9).contains(&table_id) {
        return Err(Error::Input(format!("no table {table_id}")));
    }
    let mut out = Vec::new();
    for &k in table_shapes(table_id) {
        let n = k + usize::from(table_id >= 7);
        let perms = symmetry_group(table_id, k);
        let mut classes: BTreeMap<Vec<u32>, LocalConfig> = BTreeMap::new();
        for (r, elems) in echelon_sequences(n) {
            if let Some(cfg) = build(table_id, k, r, &elems) {
                classes.entry(RelationCode::of(&cfg).canonical(&perms)).or_insert(cfg);
            }
        }
        for cfg in classes.into_values() {
            let classification = classify(&cfg)?;
            out.push(EnumeratedClass {
                k,
                relations: RelationCode::of(&cfg).basis_label(),
                config: cfg,
                classification,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Regeneration {
    pub table: u8,
    pub classes: usize,
    pub rows: usize,
    pub matched: Vec<(String, &'static str)>,
}

/// Enumerates a table and checks that classes and rows are in bijection.
pub fn regenerate_table(table_id: u8) -> Result<Regeneration> {
    let classes = enumerate_table(table_id)?;
    let mut seen: BTreeMap<&'static str, usize> = BTreeMap::new();
    for c in &classes {
        *seen.entry(c.classification.label).or_default() += 1;
    }
    if let Some((label, n)) = seen.iter().find(|(_, &n)| n > 1) {
        return Err(Error::Regeneration(format!("{n} classes map to row {label}")));
    }
    let missing: Vec<&str> = table(table_id).map(|r| r.label).filter(|l| !seen.contains_key(l)).collect();
    if !missing.is_empty() {
        return Err(Error::Regeneration(format!("rows without a class: {}", missing.join(", "))));
    }
    let rows = TABLE_SIZES[table_id as usize - 1];
    if classes.len() != rows {
        return Err(Error::Regeneration(format!("{} classes for {rows} rows", classes.len())));
    }
    Ok(Regeneration {
        table: table_id,
        classes: classes.len(),
        rows,
        matched: classes.iter().map(|c| (c.relations.clone(), c.classification.label)).collect(),
    })
}
