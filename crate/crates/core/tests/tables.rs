use abelcover_core::local::{regenerate_table, TABLE_SIZES};

#[test]
fn every_table_regenerates() {
    for t in 1..=9u8 {
        let r = regenerate_table(t).unwrap_or_else(|e| panic!("table {t}: {e}"));
        assert_eq!(r.classes, TABLE_SIZES[t as usize - 1]);
    }
}
