use std::collections::BTreeSet;

use abelcover_core::document::parse_input;
use abelcover_core::fixtures::{ex1, six_cycle, EX1};
use abelcover_core::gluing::{glue_check, incidence_sets, local_config_at, m_degree, relevant_points};
use abelcover_core::invariants::{chi_eigensheaf, chi_normalized_b, invariant_report, k_square, CartierIndex};
use abelcover_core::local::classify;
use abelcover_core::{Character, QDivisorClass};
use num_rational::Rational64;

fn chi(v: &[u32]) -> Character {
    Character(v.to_vec())
}

fn set(ids: &[&str]) -> BTreeSet<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

#[test]
fn ex1_document_shape() {
    let doc = parse_input(EX1).unwrap();
    assert_eq!((doc.components.len(), doc.curves.len(), doc.points.len()), (2, 13, 3));
}

#[test]
fn ex1_line_bundles() {
    let p = ex1().unwrap();
    for (bd, expected) in p.building.iter().zip([QDivisorClass::from_ints(&[1, 1]), QDivisorClass::from_ints(&[2])]) {
        let lines = abelcover_core::cover::solve_line_bundles(&p.surface, bd).unwrap();
        for (c, l) in lines {
            if !c.is_trivial() {
                assert_eq!(l, expected);
            }
        }
    }
}

#[test]
fn ex1_invariants() {
    let p = ex1().unwrap();
    assert!(glue_check(&p).unwrap().passed());
    assert_eq!(k_square(&p).unwrap(), Rational64::from_integer(6));
    let r = invariant_report(&p).unwrap();
    assert_eq!(r.chi_ox, 1);
    assert_eq!(r.chi_x_prime, 2);
    assert_eq!(r.chi_b_tilde, 4);
    assert_eq!(r.relevant.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
}

#[test]
fn ex1_point_sets() {
    let p = ex1().unwrap();
    let sets = incidence_sets(&p).unwrap();
    // chi_1 kills g1 = (1,0): the character (0,1).
    let c1 = &sets.per_curve["C"][&chi(&[0, 1])];
    assert_eq!(c1.a, set(&["y1", "y2"]));
    assert_eq!(c1.b, set(&["y1", "y3"]));
    assert_eq!(c1.n, set(&["y1"]));
    for c in p.group.characters() {
        assert_eq!(m_degree(&p, &sets, "C", &c).unwrap(), 0);
        assert!(sets.t[&c].is_empty());
    }
    assert_eq!(chi_normalized_b(&p, &sets).unwrap(), 4);
    assert_eq!(relevant_points(&p, &sets).unwrap().len(), 3);
}

#[test]
fn ex1_eigensheaves() {
    let p = ex1().unwrap();
    let sets = incidence_sets(&p).unwrap();
    for c in p.group.characters() {
        let e = chi_eigensheaf(&p, &sets, &c).unwrap();
        let (_, h1, h2) = e.cohomology.unwrap();
        assert_eq!((h1, h2), (0, 0));
        if c.is_trivial() {
            assert_eq!(e.chi_f, 1);
        } else {
            assert_eq!(e.chi_f, 0);
            assert_eq!(e.pieces.iter().map(|pc| pc.degree).collect::<Vec<_>>(), vec![-1]);
        }
    }
}

#[test]
fn ex1_point_classification() {
    let p = ex1().unwrap();
    let cfg = local_config_at(&p, "y1").unwrap();
    assert_eq!(classify(&cfg).unwrap().label, "E4.2");
    let r = invariant_report(&p).unwrap();
    assert!(r.cartier.values().all(|&c| c == CartierIndex::One));
}

#[test]
fn six_cycle_invariants() {
    let p = six_cycle().unwrap();
    assert!(glue_check(&p).unwrap().passed(), "{:?}", glue_check(&p).unwrap());
    let r = invariant_report(&p).unwrap();
    assert_eq!(r.k_square, Rational64::from_integer(6));
    assert_eq!(r.chi_ox, 1);
    assert_eq!(r.chi_b_tilde, 6);
    assert_eq!(r.relevant.into_iter().collect::<Vec<_>>(), vec![("y".to_string(), 1)]);
    for e in &r.eigensheaves {
        let (_, h1, h2) = e.cohomology.unwrap();
        assert_eq!((h1, h2), (0, 0));
        if !e.character.is_trivial() {
            assert_eq!(e.pieces.iter().map(|pc| pc.degree).collect::<Vec<_>>(), vec![-1, -1]);
        }
    }
    assert_eq!(r.cartier["y"], CartierIndex::One);
}

#[test]
fn six_cycle_double_covers_are_connected() {
    let p = six_cycle().unwrap();
    let sets = incidence_sets(&p).unwrap();
    for l in 1..=6 {
        let curve = format!("F{l}");
        let g = p.double_inertia(&curve).unwrap();
        for c in p.group.characters().filter(|c| !c.is_trivial() && p.group.eval(c, &g).is_zero()) {
            assert_eq!(m_degree(&p, &sets, &curve, &c).unwrap(), 1);
        }
    }
}
