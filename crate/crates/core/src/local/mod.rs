//! Singularities of `(Z_2)^r`-covers at a point: relation codes, the
//! embedded tables, normalization, the Cartier index and blow-ups.

pub mod blowup;
pub mod classify;
pub mod code;
pub mod config;
pub mod enumerate;
pub mod tables;

pub use blowup::{blowup_transform, semiresolve, Blowup, BlowupGerm, ResolutionStep, MAX_BLOWUP_DEPTH};
pub use classify::{
    chi_contribution, classify, iota_index, iota_parity, iota_residual, lookup, normalization, normalize_config,
    Classification, Normalization,
};
pub use code::{symmetry_group, RelationCode};
pub use config::{Base, DupPattern, LocalConfig, LocalLine, Side};
pub use enumerate::{enumerate_table, regenerate_table, EnumeratedClass, Regeneration};
pub use tables::{ChiEntry, SrType, TableRow, TABLE_SIZES, TABLE_TITLES};
