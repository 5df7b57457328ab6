//! Lookup of a configuration in the tables, with every computable column
//! recomputed and compared against the embedded one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{component_sum_hom, residual_index, CyclicPair, FiniteAbelianGroup};
use crate::local::code::{config_from_code, symmetry_group, RelationCode};
use crate::local::config::{rank, DupPattern, LocalConfig, Side};
use crate::local::tables::{rows, ChiEntry, TableRow};

type RowKey = (u8, usize, Vec<u32>);

struct RowIndex {
    by_key: BTreeMap<RowKey, &'static TableRow>,
    conflicts: Vec<String>,
}

fn row_index() -> &'static RowIndex {
    static INDEX: OnceLock<RowIndex> = OnceLock::new();
    INDEX.get_or_init(|| {
        let mut by_key = BTreeMap::new();
        let mut conflicts = Vec::new();
        for row in rows() {
            match row_code(row) {
                Ok(code) => {
                    let key = (row.table, row.k, code.canonical(&symmetry_group(row.table, row.k)));
                    if let Some(prev) = by_key.insert(key, row) {
                        conflicts.push(format!("{} and {} have equivalent relations", prev.label, row.label));
                    }
                }
                Err(e) => conflicts.push(format!("{}: {e}", row.label)),
            }
        }
        RowIndex { by_key, conflicts }
    })
}

/// The relation code printed in a row.
pub fn row_code(row: &TableRow) -> Result<RelationCode> {
    let zero = row.table >= 7;
    RelationCode::parse(row.relations, row.k + usize::from(zero), zero)
}

/// A configuration realizing the printed relations of a row.
pub fn row_config(row: &TableRow) -> Result<LocalConfig> {
    config_from_code(row.table, row.k, &row_code(row)?)
}

/// Table row whose relation code is equivalent to that of `cfg`.
pub fn lookup(cfg: &LocalConfig) -> Result<&'static TableRow> {
    let index = row_index();
    if let Some(c) = index.conflicts.first() {
        return Err(Error::InternalConsistency(c.clone()));
    }
    let table = cfg.table_id();
    let code = RelationCode::of(cfg);
    let key = (table, cfg.k(), code.canonical(&symmetry_group(table, cfg.k())));
    index
        .by_key
        .get(&key)
        .copied()
        .ok_or_else(|| Error::ClassificationGap(format!("table {table}, relations {}", code.basis_label())))
}

/// `iota` by the parity rule: 1 iff every relation has even length once
/// the double-curve index is dropped.
pub fn iota_parity(cfg: &LocalConfig) -> u8 {
    let code = RelationCode::of(cfg);
    let line_mask: u32 = if cfg.has_zero_index() { !1 } else { !0 };
    if code.words().iter().all(|&w| (w & line_mask).count_ones().is_multiple_of(2)) {
        1
    } else {
        2
    }
}

/// `iota` as the index of `chibar` on the kernel of the component-sum map,
/// counting the double-curve datum once per side.
pub fn iota_residual(cfg: &LocalConfig) -> Result<u8> {
    let group = FiniteAbelianGroup::z2r(cfg.r());
    let to_pair = |g: u32| CyclicPair::standard(&group, crate::local::config::to_element(cfg.r(), g));
    let mut pairs = Vec::new();
    if cfg.has_zero_index() {
        pairs.push(to_pair(cfg.g0())?);
        pairs.push(to_pair(cfg.g0())?);
    }
    let first_line = pairs.len();
    for l in cfg.lines() {
        pairs.push(to_pair(l.element)?);
    }
    let mask: BTreeSet<usize> = (first_line..pairs.len()).collect();
    let hom = component_sum_hom(&group, &pairs)?;
    Ok(residual_index(&hom, &mask) as u8)
}

/// Both routes, which must agree.
pub fn iota_index(cfg: &LocalConfig) -> Result<u8> {
    let a = iota_parity(cfg);
    let b = iota_residual(cfg)?;
    if a != b {
        return Err(Error::InternalConsistency(format!("parity rule gives {a}, residual index gives {b} for {cfg}")));
    }
    Ok(a)
}

/// Contribution of a two-sided point to `chi(O_X)`: `[G : H]` when some
/// character kills `g0` and is odd on all four lines, else 0.
pub fn chi_contribution(cfg: &LocalConfig) -> Result<ChiEntry> {
    if !cfg.is_double_crossing() {
        return Err(Error::InvalidConfig("chi contribution is defined for two-sided points only".into()));
    }
    if cfg.k() != 4 {
        return Ok(ChiEntry::Zero);
    }
    let odd = |chi: u32, g: u32| (chi & g).count_ones() % 2 == 1;
    let relevant =
        (0u32..1 << cfg.r()).any(|chi| !odd(chi, cfg.g0()) && cfg.lines().iter().all(|l| odd(chi, l.element)));
    Ok(if relevant { ChiEntry::Power { offset: cfg.h_rank() } } else { ChiEntry::Zero })
}

/// A normalized germ: `copies` disjoint copies of a Table 1 row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalPiece {
    pub copies: u64,
    pub label: &'static str,
}

impl fmt::Display for NormalPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copies == 1 {
            write!(f, "({})", self.label)
        } else {
            write!(f, "{}({})", self.copies, self.label)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// The cover is already normal.
    Normal,
    OneSided(NormalPiece),
    TwoSided(NormalPiece, NormalPiece),
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::Normal => write!(f, "normal"),
            Normalization::OneSided(p) => write!(f, "{p}"),
            Normalization::TwoSided(a, b) => write!(f, "{a} ⊔ {b}"),
        }
    }
}

/// Replaces each coincident pair `(g_a, g_b)` by one line with `g_a + g_b`,
/// dropped when that is zero. Returns the number of copies and the new germ.
pub fn normalize_config(cfg: &LocalConfig) -> Result<(u64, LocalConfig)> {
    if cfg.is_double_crossing() {
        return Err(Error::InvalidConfig("use normalize_sides for two-sided points".into()));
    }
    let e: Vec<u32> = cfg.lines().iter().map(|l| l.element).collect();
    let merged: Vec<u32> = match cfg.dup() {
        DupPattern::None => return Err(Error::InvalidConfig("no coincident lines to normalize".into())),
        DupPattern::FirstPair => std::iter::once(e[0] ^ e[1]).chain(e[2..].iter().copied()).collect(),
        DupPattern::BothPairs => vec![e[0] ^ e[1], e[2] ^ e[3]],
    };
    let merged: Vec<u32> = merged.into_iter().filter(|&g| g != 0).collect();
    let copies = cfg.h_order() >> rank(&merged);
    Ok((copies, LocalConfig::smooth(cfg.r(), merged, DupPattern::None)?))
}

/// Normalization of a two-sided germ, one smooth germ per side. On each side
/// the double curve is a branch line with `g0` when `g0 != 0`.
pub fn normalize_sides(cfg: &LocalConfig) -> Result<[(u64, LocalConfig); 2]> {
    if !cfg.is_double_crossing() {
        return Err(Error::InvalidConfig("normalize_sides needs a two-sided point".into()));
    }
    let side = |s: Side| -> Result<(u64, LocalConfig)> {
        let e = cfg.side_elements(s);
        let mut elems: Vec<u32> = if cfg.side_has_dup(s) { vec![e[0] ^ e[1]] } else { e };
        elems.retain(|&g| g != 0);
        if cfg.g0() != 0 {
            elems.push(cfg.g0());
        }
        let copies = cfg.h_order() >> rank(&elems);
        Ok((copies, LocalConfig::smooth(cfg.r(), elems, DupPattern::None)?))
    };
    Ok([side(Side::First)?, side(Side::Second)?])
}

fn piece(copies: u64, germ: &LocalConfig) -> Result<NormalPiece> {
    Ok(NormalPiece { copies, label: lookup(germ)?.label })
}

pub fn normalization(cfg: &LocalConfig) -> Result<Normalization> {
    if cfg.is_double_crossing() {
        let [(c1, a), (c2, b)] = normalize_sides(cfg)?;
        return Ok(Normalization::TwoSided(piece(c1, &a)?, piece(c2, &b)?));
    }
    if cfg.dup() == DupPattern::None {
        return Ok(Normalization::Normal);
    }
    let (c, germ) = normalize_config(cfg)?;
    Ok(Normalization::OneSided(piece(c, &germ)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub label: &'static str,
    pub row: &'static TableRow,
    /// The row a "same as" entry refers to, else the row itself.
    pub descriptor: &'static TableRow,
    pub relations: String,
    pub h_order: u64,
    pub iota: u8,
    pub chi: Option<ChiEntry>,
    pub normalization: Normalization,
}

/// Finds the row of `cfg` and checks `|H|`, `iota`, `chi` and the
/// normalization against it.
pub fn classify(cfg: &LocalConfig) -> Result<Classification> {
    let row = lookup(cfg)?;
    let descriptor = row.descriptor();
    let h_order = cfg.h_order();
    let iota = iota_index(cfg)?;
    let chi = if cfg.is_double_crossing() { Some(chi_contribution(cfg)?) } else { None };
    let normalization = normalization(cfg)?;
    let mismatch = |what: &str, got: String, want: String| {
        Error::InternalConsistency(format!("{}: computed {what} {got}, table has {want}", row.label))
    };
    if h_order != row.h_order as u64 {
        return Err(mismatch("|H|", h_order.to_string(), row.h_order.to_string()));
    }
    if let Some(want) = descriptor.iota {
        if want != iota {
            return Err(mismatch("iota", iota.to_string(), want.to_string()));
        }
    }
    if let (Some(want), Some(got)) = (descriptor.chi, chi) {
        if want != got {
            return Err(mismatch("chi", got.to_string(), want.to_string()));
        }
    }
    if let Some(want) = row.normalization {
        if normalization.to_string() != want {
            return Err(mismatch("normalization", normalization.to_string(), want.to_string()));
        }
    }
    Ok(Classification {
        label: row.label,
        row,
        descriptor,
        relations: RelationCode::of(cfg).basis_label(),
        h_order,
        iota,
        chi,
        normalization,
    })
}
