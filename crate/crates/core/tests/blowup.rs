use abelcover_core::local::{blowup_transform, classify, semiresolve, DupPattern, LocalConfig, Side};

fn germ_rows(cfg: &LocalConfig) -> Vec<(String, u64, &'static str, &'static str)> {
    blowup_transform(cfg)
        .unwrap()
        .germs
        .iter()
        .map(|g| {
            let c = classify(g.config.as_ref().expect("germ inside the tables")).unwrap();
            (g.location.clone(), g.copies, c.label, c.descriptor.singularity.unwrap_or(""))
        })
        .collect()
}

#[test]
fn case_4p1_exceptional_inertia_is_total_sum() {
    // D1 = D2 with g1, g2; D3, D4 with g3, g4; all independent.
    let cfg = LocalConfig::smooth(4, vec![0b0001, 0b0010, 0b0100, 0b1000], DupPattern::FirstPair).unwrap();
    assert_eq!(classify(&cfg).unwrap().label, "4'.1");
    let b = blowup_transform(&cfg).unwrap();
    assert_eq!(b.exceptional, vec![(Side::First, Some(0b1111))]);
    let rows = germ_rows(&cfg);
    // Only the double line stays singular, and it is d.c. there.
    assert_eq!(rows[0].2, "3'.1");
    assert_eq!(rows[0].3, "semismooth");
    assert!(rows[1..].iter().all(|r| r.3 == "smooth"));
    // One blow-up already semi-resolves.
    assert_eq!(semiresolve(&cfg).unwrap().len(), 1);
}

#[test]
fn case_4p5_has_four_a1_points_then_resolves() {
    // g3 = g1 + g2.
    let cfg = LocalConfig::smooth(3, vec![0b001, 0b010, 0b011, 0b100], DupPattern::FirstPair).unwrap();
    assert_eq!(classify(&cfg).unwrap().label, "4'.5");
    let b = blowup_transform(&cfg).unwrap();
    assert_eq!(b.exceptional, vec![(Side::First, Some(0b100))]);
    let a1: Vec<_> = germ_rows(&cfg).into_iter().filter(|r| r.3 == "A1").collect();
    assert_eq!(a1.len(), 1);
    assert_eq!(a1[0].0, "E∩D4");
    assert_eq!(a1[0].1, 4);
    let steps = semiresolve(&cfg).unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[1].germ, "4'.5/E∩D4");
}
