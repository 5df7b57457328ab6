//! The nine classification tables, embedded row by row.
//!
//! Relations are written as in print: a word such as `134` means
//! `g_1 + g_3 + g_4 = 0`, and `0` stands for the double-curve element `g_0`.
//! Rows whose singularity column reads "same as X" carry `same_as` and no
//! other descriptor.

use serde::Serialize;

/// Contribution of a double-crossing point to `chi(O_X)`: zero, or
/// `2^(r - offset)` for `|G| = 2^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiEntry {
    Zero,
    Power { offset: u32 },
}

impl ChiEntry {
    /// The numeric value for a group of order `2^r`.
    pub fn value(self, r: u32) -> Option<u64> {
        match self {
            ChiEntry::Zero => Some(0),
            ChiEntry::Power { offset } => r.checked_sub(offset).map(|e| 1u64 << e),
        }
    }
}

impl std::fmt::Display for ChiEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChiEntry::Zero => write!(f, "0"),
            ChiEntry::Power { offset } => write!(f, "2^(r-{offset})"),
        }
    }
}

/// Type of the minimal semi-resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SrType {
    DoubleCrossing,
    Pinch,
    /// The printed cell is empty.
    Unspecified,
}

impl std::fmt::Display for SrType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SrType::DoubleCrossing => "d.c.",
            SrType::Pinch => "pinch",
            SrType::Unspecified => "",
        })
    }
}

/// Printed values that were replaced by the embedded ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Printed {
    pub relations: &'static str,
    pub h_order: u32,
    pub same_as: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: &'static str,
    pub table: u8,
    /// Number of branch lines through the point, the first digit of the label.
    pub k: usize,
    pub h_order: u32,
    pub relations: &'static str,
    pub iota: Option<u8>,
    pub chi: Option<ChiEntry>,
    pub singularity: Option<&'static str>,
    /// Normalization as copies of Table 1 germs; for two sides `a ⊔ b`.
    pub normalization: Option<&'static str>,
    /// Double curve maps `C_{X~} -> C_X -> C_Y`.
    pub curve_map: Option<&'static str>,
    pub sr: Option<SrType>,
    pub same_as: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<Printed>,
}

impl TableRow {
    /// The row this one refers to, or itself.
    pub fn descriptor(&self) -> &'static TableRow {
        match self.same_as {
            Some(label) => row(label).expect("same-as reference resolves"),
            None => row(self.label).expect("row is embedded"),
        }
    }
}

pub const TABLE_TITLES: [&str; 9] = [
    "one to four reduced lines",
    "double line plus reduced lines",
    "two double lines",
    "C not branched, reduced lines",
    "C not branched, a double line and two reduced lines",
    "C not branched, two pairs of double lines",
    "C branched, reduced lines",
    "C branched, a double line and two reduced lines",
    "C branched, two pairs of double lines",
];

/// Row counts per table.
pub const TABLE_SIZES: [usize; 9] = [16, 22, 11, 6, 4, 4, 23, 25, 19];

pub fn rows() -> &'static [TableRow] {
    ROWS
}

pub fn table(id: u8) -> impl Iterator<Item = &'static TableRow> {
    ROWS.iter().filter(move |r| r.table == id)
}

pub fn row(label: &str) -> Option<&'static TableRow> {
    ROWS.iter().find(|r| r.label == label)
}

static ROWS: &[TableRow] = &[
    TableRow {
        label: "0.1",
        table: 1,
        k: 0,
        h_order: 1,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("smooth"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "1.1",
        table: 1,
        k: 1,
        h_order: 2,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("smooth"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "2.1",
        table: 1,
        k: 2,
        h_order: 4,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("smooth"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "2.2",
        table: 1,
        k: 2,
        h_order: 2,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("A1"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3.1",
        table: 1,
        k: 3,
        h_order: 8,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("A1"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3.2",
        table: 1,
        k: 3,
        h_order: 4,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("A3"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3.3",
        table: 1,
        k: 3,
        h_order: 4,
        relations: "123",
        iota: Some(2),
        chi: None,
        singularity: Some("1/4(1,1)"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3.4",
        table: 1,
        k: 3,
        h_order: 2,
        relations: "12 13",
        iota: Some(1),
        chi: None,
        singularity: Some("D4"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.1",
        table: 1,
        k: 4,
        h_order: 16,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-4"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.2",
        table: 1,
        k: 4,
        h_order: 8,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-2"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.3",
        table: 1,
        k: 4,
        h_order: 8,
        relations: "123",
        iota: Some(2),
        chi: None,
        singularity: Some("T2,2,2,2, F^2=-4"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.4",
        table: 1,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-8"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.5",
        table: 1,
        k: 4,
        h_order: 4,
        relations: "12 13",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-1"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.6",
        table: 1,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-4"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.7",
        table: 1,
        k: 4,
        h_order: 4,
        relations: "12 134",
        iota: Some(2),
        chi: None,
        singularity: Some("T2,2,2,2, F^2=-3"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4.8",
        table: 1,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: None,
        singularity: Some("elliptic, F^2=-2"),
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "2'.1",
        table: 2,
        k: 2,
        h_order: 4,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("2(1.1)"),
        curve_map: Some("2Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "2'.2",
        table: 2,
        k: 2,
        h_order: 2,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("2(0.1)"),
        curve_map: Some("2Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3'.1",
        table: 2,
        k: 3,
        h_order: 8,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("2(2.1)"),
        curve_map: Some("2Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3'.2",
        table: 2,
        k: 3,
        h_order: 4,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("2(1.1)"),
        curve_map: Some("2Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3'.3",
        table: 2,
        k: 3,
        h_order: 4,
        relations: "13",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("(2.1)"),
        curve_map: Some("Δ →[2] Δ → Δ"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3'.4",
        table: 2,
        k: 3,
        h_order: 4,
        relations: "123",
        iota: Some(2),
        chi: None,
        singularity: Some("(3'.1)/Z2"),
        normalization: Some("2(2.2)"),
        curve_map: Some("2Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "3'.5",
        table: 2,
        k: 3,
        h_order: 2,
        relations: "12 13",
        iota: Some(1),
        chi: None,
        singularity: Some("semismooth"),
        normalization: Some("(1.1)"),
        curve_map: Some("Δ →[2] Δ → Δ"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.1",
        table: 2,
        k: 4,
        h_order: 16,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(3.1)"),
        curve_map: Some("2Γ2 → Γ2 →[22] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.2",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(2.1)"),
        curve_map: Some("2Γ2 → Γ2 →[22] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.3",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "13",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(1)"),
        normalization: Some("(3.1)"),
        curve_map: Some("Γ2 → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.4",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "34",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(6)"),
        normalization: Some("2(3.2)"),
        curve_map: Some("2Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.5",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "123",
        iota: Some(2),
        chi: None,
        singularity: Some("(4'.1)/Z2"),
        normalization: Some("2(3.2)"),
        curve_map: Some("2Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.6",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "134",
        iota: Some(2),
        chi: None,
        singularity: Some("(4'.1)/Z2"),
        normalization: Some("(3.1)"),
        curve_map: Some("Γ2 →[22] Γ2 → Δ"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.7",
        table: 2,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(3.3)"),
        curve_map: Some("2Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.8",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "12 13",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(1)"),
        normalization: Some("(2.1)"),
        curve_map: Some("Γ2 → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.9",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "13 14",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(3)"),
        normalization: Some("(3.2)"),
        curve_map: Some("Γ2 → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.10",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(2.2)"),
        curve_map: Some("2Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.11",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "13 24",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(1)"),
        normalization: Some("(3.3)"),
        curve_map: Some("Γ2 → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.12",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "12 134",
        iota: Some(2),
        chi: None,
        singularity: Some("(4'.2)/Z2"),
        normalization: Some("(2.1)"),
        curve_map: Some("Γ2 →[22] Γ2 → Δ"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.13",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "13 124",
        iota: Some(2),
        chi: None,
        singularity: Some("(4'.3)/Z2"),
        normalization: Some("(3.2)"),
        curve_map: Some("Δ →[2] Δ → Δ"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.14",
        table: 2,
        k: 4,
        h_order: 4,
        relations: "123 34",
        iota: Some(2),
        chi: None,
        singularity: Some("(4'.4)/Z2"),
        normalization: Some("2(3.4)"),
        curve_map: Some("2Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4'.15",
        table: 2,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(1)"),
        normalization: Some("(2.2)"),
        curve_map: Some("Γ2 → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.1",
        table: 3,
        k: 4,
        h_order: 16,
        relations: "none",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(4)"),
        normalization: Some("4(2.1)"),
        curve_map: Some("4Γ2 → Γ4 →[2222] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.2",
        table: 3,
        k: 4,
        h_order: 8,
        relations: "12",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(4)"),
        normalization: Some("4(1.1)"),
        curve_map: Some("4Γ2 → Γ4 →[2211] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.3",
        table: 3,
        k: 4,
        h_order: 8,
        relations: "13",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(2.1)"),
        curve_map: Some("2Γ2 → Γ2 →[22] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.4",
        table: 3,
        k: 4,
        h_order: 8,
        relations: "123",
        iota: Some(2),
        chi: None,
        singularity: Some("(4''.1)/Z2"),
        normalization: Some("2(2.1)"),
        curve_map: Some("2Γ2 →[1122] Γ3 →[211] Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.5",
        table: 3,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(4)"),
        normalization: Some("4(2.2)"),
        curve_map: Some("4Γ2 → Γ4 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.6",
        table: 3,
        k: 4,
        h_order: 4,
        relations: "12 13",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(1.1)"),
        curve_map: Some("2Γ2 → Γ2 →[21] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.7",
        table: 3,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(4)"),
        normalization: Some("4(0.1)"),
        curve_map: Some("4Γ2 → Γ4 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.8",
        table: 3,
        k: 4,
        h_order: 4,
        relations: "13 24",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(2.2)"),
        curve_map: Some("2Γ2 → Γ2 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.9",
        table: 3,
        k: 4,
        h_order: 4,
        relations: "12 134",
        iota: Some(2),
        chi: None,
        singularity: Some("(4''.2)/Z2"),
        normalization: Some("2(1.1)"),
        curve_map: Some("2Γ2 →[2211] Γ3 → Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.10",
        table: 3,
        k: 4,
        h_order: 4,
        relations: "13 124",
        iota: Some(2),
        chi: None,
        singularity: Some("(4''.3)/Z2"),
        normalization: Some("(2.1)"),
        curve_map: Some("Γ2 →[22] Γ2 → Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "4''.11",
        table: 3,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: None,
        singularity: Some("deg.cusp(2)"),
        normalization: Some("2(0.1)"),
        curve_map: Some("2Γ2 → Γ2 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E0.1",
        table: 4,
        k: 0,
        h_order: 1,
        relations: "none",
        iota: Some(1),
        chi: Some(ChiEntry::Zero),
        singularity: Some("d.c."),
        normalization: Some("(0.1) ⊔ (0.1)"),
        curve_map: Some("2Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E2.1",
        table: 4,
        k: 2,
        h_order: 2,
        relations: "12",
        iota: Some(1),
        chi: Some(ChiEntry::Zero),
        singularity: Some("d.c."),
        normalization: Some("(1.1) ⊔ (1.1)"),
        curve_map: Some("2Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4.1",
        table: 4,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(2.1) ⊔ 2(2.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[2222] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4.2",
        table: 4,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(2.2) ⊔ 2(2.2)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4.3",
        table: 4,
        k: 4,
        h_order: 4,
        relations: "13 24",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(2)"),
        normalization: Some("(2.1) ⊔ (2.1)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 →[22] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4.4",
        table: 4,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 1 }),
        singularity: Some("deg.cusp(2)"),
        normalization: Some("(2.2) ⊔ (2.2)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4'.1",
        table: 5,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("4(1.1) ⊔ 2(2.1)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 →[112… 2] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4'.2",
        table: 5,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("4(0.1) ⊔ 2(2.2)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4'.3",
        table: 5,
        k: 4,
        h_order: 4,
        relations: "13 24",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(3)"),
        normalization: Some("2(1.1) ⊔ (2.1)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 →[122] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4'.4",
        table: 5,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 1 }),
        singularity: Some("deg.cusp(3)"),
        normalization: Some("2(0.1) ⊔ (2.2)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4''.1",
        table: 6,
        k: 4,
        h_order: 8,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(1.1) ⊔ 4(1.1)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 →[112…211] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4''.2",
        table: 6,
        k: 4,
        h_order: 4,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(0.1) ⊔ 4(0.1)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 → Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4''.3",
        table: 6,
        k: 4,
        h_order: 4,
        relations: "13 24",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(1.1) ⊔ 2(1.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[1221] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "E4''.4",
        table: 6,
        k: 4,
        h_order: 2,
        relations: "12 13 14",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 1 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(0.1) ⊔ 2(0.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R0.1",
        table: 7,
        k: 0,
        h_order: 2,
        relations: "none",
        iota: Some(1),
        chi: Some(ChiEntry::Zero),
        singularity: Some("d.c."),
        normalization: Some("(1.1) ⊔ (1.1)"),
        curve_map: Some("Δ ⊔ Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R2.1",
        table: 7,
        k: 2,
        h_order: 4,
        relations: "12",
        iota: Some(1),
        chi: Some(ChiEntry::Zero),
        singularity: Some("d.c."),
        normalization: Some("(2.1) ⊔ (2.1)"),
        curve_map: Some("Δ ⊔ Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R2.3",
        table: 7,
        k: 2,
        h_order: 2,
        relations: "12 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R2.1)/Z2"),
        normalization: Some("(2.2) ⊔ (2.2)"),
        curve_map: Some("Δ ⊔ Δ → Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R2.2",
        table: 7,
        k: 2,
        h_order: 4,
        relations: "012",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R2.1"),
        printed: None,
    },
    TableRow {
        label: "R4.1",
        table: 7,
        k: 4,
        h_order: 16,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 4 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(3.1) ⊔ 2(3.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[2… 2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.2",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "1234 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4.1)/Z2"),
        normalization: Some("2(3.2) ⊔ (3.1)"),
        curve_map: Some("2Δ ⊔ Γ2 → Γ2 →[22] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.3",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "1234 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(3.3) ⊔ 2(3.3)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.4",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "1234 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(2)"),
        normalization: Some("(3.1) ⊔ (3.1)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 →[22] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.5",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(12)"),
        normalization: Some("2(3.2) ⊔ 2(3.2)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.6",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "12 34 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4.5)/Z2"),
        normalization: Some("2(3.4) ⊔ (3.2)"),
        curve_map: Some("2Δ ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.7",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "12 34 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("(3.2) ⊔ (3.2)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.8",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "13 24",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.4"),
        printed: None,
    },
    TableRow {
        label: "R4.9",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "13 24 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4.8)/Z2"),
        normalization: Some("(3.2) ⊔ (3.2)"),
        curve_map: Some("Δ ⊔ Δ → Δ →[2] Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.10",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "13 24 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(2)"),
        normalization: Some("(3.3) ⊔ (3.3)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.11",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "12 13 14",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.7"),
        printed: None,
    },
    TableRow {
        label: "R4.12",
        table: 7,
        k: 4,
        h_order: 2,
        relations: "12 13 14 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4.11)/Z2"),
        normalization: Some("(3.4) ⊔ (3.4)"),
        curve_map: Some("Δ ⊔ Δ → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.13",
        table: 7,
        k: 4,
        h_order: 16,
        relations: "01234",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.1"),
        printed: None,
    },
    TableRow {
        label: "R4.14",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "12 034",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("2(3.2) ⊔ 2(3.3)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.15",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "13 024",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.4"),
        printed: None,
    },
    TableRow {
        label: "R4.16",
        table: 7,
        k: 4,
        h_order: 8,
        relations: "123 04",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.2"),
        printed: None,
    },
    TableRow {
        label: "R4.17",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "12 13 014",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("(3.2) ⊔ (3.3)"),
        curve_map: Some("Γ2 ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.18",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "12 134 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4.14)/Z2"),
        normalization: Some("2(3.4) ⊔ (3.3)"),
        curve_map: Some("2Δ ⊔ Γ2 → Γ2 → Δ"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4.19",
        table: 7,
        k: 4,
        h_order: 4,
        relations: "13 124 01",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4.9"),
        printed: None,
    },
    TableRow {
        label: "R4'.1",
        table: 8,
        k: 4,
        h_order: 16,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 4 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("4(2.1) ⊔ 2(3.1)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 →[2… 2] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.2",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "1234 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.1)/Z2"),
        normalization: Some("2(2.1) ⊔ (3.1)"),
        curve_map: Some("2Γ2 ⊔ Γ2 →[221111] Γ4 →[1122] Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.3",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "1234 03",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.1)/Z2"),
        normalization: Some("2(2.1) ⊔ 2(3.2)"),
        curve_map: Some("2Γ2 ⊔ 2Δ → Γ3 →[222] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.4",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "1234 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("4(2.2) ⊔ 2(3.3)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.5",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "1234 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(3)"),
        normalization: Some("2(2.1) ⊔ (3.1)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 →[222] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.6",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(10)"),
        normalization: Some("4(1.1) ⊔ 2(3.2)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 →[221… 1] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.7",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 34 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.6)/Z2"),
        normalization: Some("2(1.1) ⊔ (3.2)"),
        curve_map: Some("2Γ2 ⊔ Γ2 →[221…1] Γ4 → Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.8",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 34 03",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.6)/Z2"),
        normalization: Some("2(1.1) ⊔ 2(3.4)"),
        curve_map: Some("2Γ2 ⊔ 2Δ → Γ3 →[211] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.9",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 34 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(5)"),
        normalization: Some("2(1.1) ⊔ (3.2)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 →[211] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.10",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "13 24",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.5"),
        printed: None,
    },
    TableRow {
        label: "R4'.11",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "13 24 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.10)/Z2"),
        normalization: Some("(2.1) ⊔ (3.2)"),
        curve_map: Some("Γ2 ⊔ Δ →[211] Γ2 →[12] Γ2"),
        sr: Some(SrType::Unspecified),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.12",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "13 24 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(3)"),
        normalization: Some("2(2.2) ⊔ (3.3)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.13",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 13 14",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.9"),
        printed: None,
    },
    TableRow {
        label: "R4'.14",
        table: 8,
        k: 4,
        h_order: 2,
        relations: "12 13 14 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.13)/Z2"),
        normalization: Some("(1.1) ⊔ (3.4)"),
        curve_map: Some("Γ2 ⊔ Δ →[211] Γ2 → Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.15",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "13 024",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.5"),
        printed: None,
    },
    TableRow {
        label: "R4'.16",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "12 034",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(6)"),
        normalization: Some("4(1.1) ⊔ 2(3.3)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 →[221… 1] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.17",
        table: 8,
        k: 4,
        h_order: 16,
        relations: "01234",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.1"),
        printed: Some(Printed { relations: "13 024", h_order: 8, same_as: "R4'.5" }),
    },
    TableRow {
        label: "R4'.18",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "34 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(10)"),
        normalization: Some("4(2.2) ⊔ 2(3.2)"),
        curve_map: Some("4Γ2 ⊔ 2Γ2 → Γ6 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.19",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "123 04",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.3"),
        printed: None,
    },
    TableRow {
        label: "R4'.20",
        table: 8,
        k: 4,
        h_order: 8,
        relations: "134 02",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.2"),
        printed: None,
    },
    TableRow {
        label: "R4'.21",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 13 014",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(3)"),
        normalization: Some("2(1.1) ⊔ (3.3)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 →[211] Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.22",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "13 14 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(5)"),
        normalization: Some("2(2.2) ⊔ (3.2)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.23",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "12 134 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.16)/Z2"),
        normalization: Some("2(1.1) ⊔ (3.3)"),
        curve_map: Some("2Γ2 ⊔ Γ2 → Γ3 →[211] Γ2"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4'.24",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "13 124 01",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4'.11"),
        printed: None,
    },
    TableRow {
        label: "R4'.25",
        table: 8,
        k: 4,
        h_order: 4,
        relations: "34 123 03",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4'.18)/Z2"),
        normalization: Some("2(2.2) ⊔ 2(3.4)"),
        curve_map: Some("2Γ2 ⊔ 2Δ → Γ3 → Γ2"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.1",
        table: 9,
        k: 4,
        h_order: 16,
        relations: "1234",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 4 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(2.1) ⊔ 4(2.1)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 →[2… 2] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.2",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "1234 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4''.1)/Z2"),
        normalization: Some("2(2.1) ⊔ 2(2.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 →[221… 1] Γ5 →[11222] Γ3"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.3",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "1234 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(2.2) ⊔ 4(2.2)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 → Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.4",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "1234 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(2.1) ⊔ 2(2.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[2222] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.5",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "12 34",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(1.1) ⊔ 4(1.1)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 →[22111122] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.6",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "12 34 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4''.5)/Z2"),
        normalization: Some("2(1.1) ⊔ 2(1.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 →[221…1] Γ5 →[11112] Γ3"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.7",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "12 34 013",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(1.1) ⊔ 2(1.1)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[2112] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.8",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "13 24",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.4"),
        printed: None,
    },
    TableRow {
        label: "R4''.9",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "13 24 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4''.8)/Z2"),
        normalization: Some("(2.1) ⊔ (2.1)"),
        curve_map: Some("Γ2 ⊔ Γ2 →[212] Γ3 →[121] Γ3"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.10",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "13 24 012",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(2.2) ⊔ 2(2.2)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 → Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.11",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "12 13 14",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.7"),
        printed: None,
    },
    TableRow {
        label: "R4''.12",
        table: 9,
        k: 4,
        h_order: 2,
        relations: "12 13 14 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4''.11)/Z2"),
        normalization: Some("(1.1) ⊔ (1.1)"),
        curve_map: Some("Γ2 ⊔ Γ2 →[2112] Γ3 → Γ3"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.13",
        table: 9,
        k: 4,
        h_order: 16,
        relations: "01234",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.1"),
        printed: None,
    },
    TableRow {
        label: "R4''.14",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "12 034",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 3 }),
        singularity: Some("deg.cusp(8)"),
        normalization: Some("4(1.1) ⊔ 4(2.2)"),
        curve_map: Some("4Γ2 ⊔ 4Γ2 → Γ8 →[221…1] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.15",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "13 024",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.4"),
        printed: None,
    },
    TableRow {
        label: "R4''.16",
        table: 9,
        k: 4,
        h_order: 8,
        relations: "123 04",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.2"),
        printed: None,
    },
    TableRow {
        label: "R4''.17",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "12 13 014",
        iota: Some(1),
        chi: Some(ChiEntry::Power { offset: 2 }),
        singularity: Some("deg.cusp(4)"),
        normalization: Some("2(1.1) ⊔ 2(2.2)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 → Γ4 →[2111] Γ3"),
        sr: Some(SrType::DoubleCrossing),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.18",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "12 134 01",
        iota: Some(2),
        chi: Some(ChiEntry::Zero),
        singularity: Some("(R4''.14)/Z2"),
        normalization: Some("2(1.1) ⊔ 2(2.2)"),
        curve_map: Some("2Γ2 ⊔ 2Γ2 →[221…1] Γ5 → Γ3"),
        sr: Some(SrType::Pinch),
        same_as: None,
        printed: None,
    },
    TableRow {
        label: "R4''.19",
        table: 9,
        k: 4,
        h_order: 4,
        relations: "13 124 01",
        iota: None,
        chi: None,
        singularity: None,
        normalization: None,
        curve_map: None,
        sr: None,
        same_as: Some("R4''.9"),
        printed: None,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        for (i, &n) in TABLE_SIZES.iter().enumerate() {
            assert_eq!(table(i as u8 + 1).count(), n, "table {}", i + 1);
        }
        assert_eq!(rows().len(), TABLE_SIZES.iter().sum::<usize>());
    }

    #[test]
    fn labels_unique_and_references_resolve() {
        let mut seen = std::collections::BTreeSet::new();
        for r in rows() {
            assert!(seen.insert(r.label), "{}", r.label);
            if let Some(target) = r.same_as {
                let t = row(target).unwrap();
                assert_eq!(t.table, r.table);
                assert!(t.same_as.is_none());
                assert!(r.iota.is_none() && r.chi.is_none() && r.singularity.is_none());
            }
        }
    }

    #[test]
    fn chi_column_only_on_two_sided_tables() {
        for r in rows().iter().filter(|r| r.same_as.is_none()) {
            assert_eq!(r.chi.is_some(), r.table >= 4, "{}", r.label);
            assert_eq!(r.normalization.is_some(), r.table >= 2, "{}", r.label);
        }
    }

    #[test]
    fn spot_values() {
        let r = row("4.3").unwrap();
        assert_eq!((r.h_order, r.relations, r.iota), (8, "123", Some(2)));
        assert_eq!(row("E4.2").unwrap().chi, Some(ChiEntry::Power { offset: 2 }));
        assert_eq!(row("R4'.11").unwrap().sr, Some(SrType::Unspecified));
        assert_eq!(row("R4.2").unwrap().normalization, Some("2(3.2) ⊔ (3.1)"));
        assert_eq!(ChiEntry::Power { offset: 2 }.value(2), Some(1));
    }
}
