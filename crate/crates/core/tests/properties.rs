use std::collections::BTreeSet;

use abelcover_core::cover::{
    check_fundamental_relations, local_equations, solve_line_bundles, BranchDatum, FundamentalCheck, LocalGerm,
};
use abelcover_core::gluing::{
    characters_killing, glue_check, incidence_sets, local_config_at, m_degree, relevant_points, GluingProblem,
};
use abelcover_core::group::{
    character_exponent, component_sum_hom, epsilon, residual_index, subgroup_generated, Character, CyclicPair,
    FiniteAbelianGroup, GroupElement,
};
use abelcover_core::invariants::{chi_eigensheaf, chi_ox, k_square};
use abelcover_core::local::config::rank;
use abelcover_core::local::{
    chi_contribution, classify, iota_parity, iota_residual, normalize_config, DupPattern, LocalConfig,
};
use abelcover_core::sample::glueable;
use abelcover_core::surface::QDivisorClass;
use abelcover_core::SmoothSurfaceModel;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn group() -> impl Strategy<Value = FiniteAbelianGroup> {
    prop::collection::vec(2u32..=6, 1..=3)
        .prop_filter("small", |o| o.iter().product::<u32>() <= 72)
        .prop_map(|o| FiniteAbelianGroup::new(o).unwrap())
}

fn coords(g: &FiniteAbelianGroup) -> impl Strategy<Value = Vec<u32>> {
    g.orders().iter().map(|&n| 0..n).collect::<Vec<_>>()
}

fn character(g: &FiniteAbelianGroup) -> impl Strategy<Value = Character> {
    coords(g).prop_map(Character)
}

fn element(g: &FiniteAbelianGroup) -> impl Strategy<Value = GroupElement> {
    coords(g).prop_map(GroupElement)
}

fn pair(g: &FiniteAbelianGroup) -> impl Strategy<Value = CyclicPair> {
    let g = g.clone();
    (element(&g), 1u32..64).prop_filter_map("nontrivial pair", move |(h, a)| CyclicPair::new(&g, h, a).ok())
}

fn with_chars(n: usize) -> impl Strategy<Value = (FiniteAbelianGroup, Vec<Character>, CyclicPair)> {
    group().prop_flat_map(move |g| {
        let chars = prop::collection::vec(character(&g), n);
        let p = pair(&g);
        (Just(g), chars, p)
    })
}

fn glueable_from(seed: u64) -> GluingProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    glueable(&mut |n| rng.gen_range(0..n)).expect("sampler accepts within its attempt budget")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn epsilon_is_symmetric_and_a_carry((g, c, p) in with_chars(2)) {
        let e = epsilon(&g, &c[0], &c[1], &p).unwrap();
        prop_assert_eq!(e, epsilon(&g, &c[1], &c[0], &p).unwrap());
        prop_assert!(e <= 1);
    }

    #[test]
    fn exponents_add_up_to_a_carry((g, c, p) in with_chars(2)) {
        let a = character_exponent(&g, &c[0], &p).unwrap();
        let b = character_exponent(&g, &c[1], &p).unwrap();
        let ab = character_exponent(&g, &g.char_mul(&c[0], &c[1]), &p).unwrap();
        prop_assert_eq!(a + b, ab + p.order() * epsilon(&g, &c[0], &c[1], &p).unwrap());
    }

    #[test]
    fn epsilon_is_a_cocycle((g, c, p) in with_chars(3)) {
        let e = |x: &Character, y: &Character| epsilon(&g, x, y, &p).unwrap();
        let left = e(&c[0], &c[1]) + e(&g.char_mul(&c[0], &c[1]), &c[2]);
        let right = e(&c[1], &c[2]) + e(&c[0], &g.char_mul(&c[1], &c[2]));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn residual_index_matches_brute_force(
        (g, pairs, mask) in group().prop_flat_map(|g| {
            let pairs = prop::collection::vec(pair(&g), 1..=4);
            (Just(g), pairs, prop::collection::btree_set(0usize..4, 0..=4))
        })
    ) {
        let mask: BTreeSet<usize> = mask.into_iter().filter(|&i| i < pairs.len()).collect();
        prop_assume!(pairs.iter().map(|p| p.order() as u64).product::<u64>() <= 4096);
        let hom = component_sum_hom(&g, &pairs).unwrap();
        let got = residual_index(&hom, &mask);
        // Oracle: walk the whole source, test membership in the kernel
        // coordinatewise and collect chibar as exact rationals mod 1.
        let radices: Vec<u32> = pairs.iter().map(CyclicPair::order).collect();
        let mut values = BTreeSet::new();
        let total: u32 = radices.iter().product();
        for mut idx in 0..total {
            let mut x = Vec::new();
            for &m in &radices {
                x.push(idx % m);
                idx /= m;
            }
            let in_kernel = g.orders().iter().enumerate().all(|(j, &n)| {
                pairs.iter().zip(&x).map(|(p, &xi)| p.generator().0[j] * xi).sum::<u32>() % n == 0
            });
            if in_kernel {
                let v: Rational64 = mask
                    .iter()
                    .map(|&i| Rational64::new((x[i] * pairs[i].psi_exponent()) as i64, pairs[i].order() as i64))
                    .sum();
                values.insert(v.fract());
            }
        }
        prop_assert_eq!(got, values.len() as u64);
        prop_assert_eq!(g.exponent() as u64 % got, 0);
    }

    #[test]
    fn subgroup_closure_is_idempotent_and_monotone(
        (g, gens, extra) in group().prop_flat_map(|g| {
            let gens = prop::collection::vec(element(&g), 0..=3);
            let e = element(&g);
            (Just(g), gens, e)
        })
    ) {
        let h = subgroup_generated(&g, &gens).unwrap();
        let again: Vec<GroupElement> = h.elements().iter().cloned().collect();
        let closed = subgroup_generated(&g, &again).unwrap();
        prop_assert_eq!(closed.elements(), h.elements());
        let mut bigger = gens.clone();
        bigger.push(extra);
        prop_assert!(h.is_subgroup_of(&subgroup_generated(&g, &bigger).unwrap()));
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn intersection_form_is_symmetric_and_bilinear(
        p1p1 in any::<bool>(),
        a in prop::collection::vec(-6i64..=6, 2),
        b in prop::collection::vec(-6i64..=6, 2),
        c in prop::collection::vec(-6i64..=6, 2),
    ) {
        let (m, n) = if p1p1 { (SmoothSurfaceModel::p1xp1(), 2) } else { (SmoothSurfaceModel::p2(), 1) };
        let [a, b, c] = [&a, &b, &c].map(|v| QDivisorClass::from_ints(&v[..n]));
        prop_assert_eq!(m.intersect(&a, &b).unwrap(), m.intersect(&b, &a).unwrap());
        prop_assert_eq!(
            m.intersect(&a.add(&b), &c).unwrap(),
            m.intersect(&a, &c).unwrap() + m.intersect(&b, &c).unwrap()
        );
    }

    #[test]
    fn riemann_roch_and_serre_duality(p1p1 in any::<bool>(), d in prop::collection::vec(-5i64..=5, 2)) {
        let (m, n) = if p1p1 { (SmoothSurfaceModel::p1xp1(), 2) } else { (SmoothSurfaceModel::p2(), 1) };
        let l = QDivisorClass::from_ints(&d[..n]);
        let (h0, h1, h2) = m.cohomology(&l).unwrap();
        prop_assert_eq!(h0 - h1 + h2, m.euler_char(&l).unwrap());
        let dual = m.canonical_class().sub(&l);
        prop_assert_eq!(m.cohomology(&dual).unwrap(), (h2, h1, h0));
    }

    #[test]
    fn solved_line_bundles_satisfy_the_relations(seed in any::<u64>()) {
        let p = glueable_from(seed);
        for bd in &p.building {
            let mut bd = bd.clone();
            bd.line_bundles = Some(solve_line_bundles(&p.surface, &bd).unwrap());
            prop_assert_eq!(check_fundamental_relations(&p.surface, &bd).unwrap(), FundamentalCheck::Pass);
        }
    }

    #[test]
    fn product_relations_carry_epsilons((g, pairs) in group().prop_flat_map(|g| {
        let pairs = prop::collection::vec(pair(&g), 0..=3);
        (Just(g), pairs)
    })) {
        let germ = LocalGerm { group: g.clone(), lines: pairs.iter().cloned().enumerate().collect() };
        let eq = local_equations(&germ).unwrap();
        for rel in &eq.products {
            for (s, p) in pairs.iter().enumerate() {
                prop_assert_eq!(rel.sigma[s], epsilon(&g, &rel.left, &rel.right, p).unwrap() as u64);
            }
        }
    }

    #[test]
    fn every_admissible_germ_is_classified_up_to_relabeling(
        (r, cols) in (1usize..=4).prop_flat_map(|r| {
            // Columns of a random invertible matrix over F_2.
            let cols = prop::collection::vec(1u32..1 << r, r).prop_filter("invertible", |c| rank(c) as usize == c.len());
            (Just(r), cols)
        }),
        raw in prop::collection::vec(1u32..16, 0..=4),
        dup in 0u8..3,
    ) {
        let elems: Vec<u32> = raw.iter().map(|&e| e & ((1 << r) - 1)).collect();
        let dup = [DupPattern::None, DupPattern::FirstPair, DupPattern::BothPairs][dup as usize];
        let Ok(cfg) = LocalConfig::smooth(r, elems.clone(), dup) else { return Ok(()) };
        let label = classify(&cfg).unwrap().label;
        let apply = |e: u32| (0..r).filter(|j| e >> j & 1 == 1).fold(0, |acc, j| acc ^ cols[j]);
        let moved = LocalConfig::smooth(r, elems.iter().map(|&e| apply(e)).collect(), dup).unwrap();
        prop_assert_eq!(classify(&moved).unwrap().label, label);
        if dup == DupPattern::None {
            let reversed: Vec<u32> = elems.iter().rev().copied().collect();
            prop_assert_eq!(classify(&LocalConfig::smooth(r, reversed, dup).unwrap()).unwrap().label, label);
        }
        if dup != DupPattern::None {
            let (copies, normal) = normalize_config(&cfg).unwrap();
            prop_assert_eq!(copies * normal.h_order(), cfg.h_order());
        }
    }

    #[test]
    fn glueable_configurations_are_consistent(seed in any::<u64>()) {
        let p = glueable_from(seed);
        prop_assert!(glue_check(&p).unwrap().passed());
        let sets = incidence_sets(&p).unwrap();
        for curve in p.surface.double_curves() {
            let g = p.double_inertia(&curve.id).unwrap();
            for chi in characters_killing(&p.group, &g) {
                m_degree(&p, &sets, &curve.id, &chi).unwrap();
                let cs = &sets.per_curve[&curve.id][&chi];
                prop_assert!(cs.n.is_subset(&cs.a) && cs.n.is_subset(&cs.b));
            }
        }
        let total: i64 = p.group.characters().map(|chi| chi_eigensheaf(&p, &sets, &chi).unwrap().chi_f).sum();
        prop_assert_eq!(total, chi_ox(&p, &sets).unwrap());
    }

    #[test]
    fn relevant_weights_match_the_local_chi_column(seed in any::<u64>()) {
        let p = glueable_from(seed);
        let r = p.group.rank() as u32;
        let relevant = relevant_points(&p, &incidence_sets(&p).unwrap()).unwrap();
        for pt in &p.surface.points {
            let cfg = local_config_at(&p, &pt.id).unwrap();
            let local = chi_contribution(&cfg).unwrap().value(r).unwrap();
            prop_assert_eq!(local, relevant.get(&pt.id).copied().unwrap_or(0), "at {}", pt.id);
        }
    }

    #[test]
    fn invariants_ignore_side_order_and_relabeling(seed in any::<u64>(), shift in 1u32..8) {
        let p = glueable_from(seed);
        let sets = incidence_sets(&p).unwrap();
        let (k2, chi) = (k_square(&p).unwrap(), chi_ox(&p, &sets).unwrap());
        let relevant = relevant_points(&p, &sets).unwrap();

        let mut surface = p.surface.clone();
        surface.components.reverse();
        let building: Vec<_> = p.building.iter().rev().cloned().collect();
        let swapped = GluingProblem::new(surface, p.group.clone(), building).unwrap();
        prop_assert_eq!(k_square(&swapped).unwrap(), k2);
        prop_assert_eq!(chi_ox(&swapped, &incidence_sets(&swapped).unwrap()).unwrap(), chi);

        // The automorphism e_0 -> e_0 + s, fixing the other basis vectors,
        // where s has no e_0 component.
        let r = p.group.rank();
        let s = (shift << 1) & ((1 << r) - 1);
        let map = |g: &GroupElement| {
            let mut c = g.0.clone();
            if c[0] == 1 {
                for (j, x) in c.iter_mut().enumerate().skip(1) {
                    *x ^= s >> j & 1;
                }
            }
            GroupElement(c)
        };
        let building = p
            .building
            .iter()
            .map(|bd| {
                let mut bd = bd.clone();
                bd.line_bundles = None;
                bd.branches = bd
                    .branches
                    .iter()
                    .map(|b| BranchDatum { curve: b.curve.clone(), pair: CyclicPair::standard(&p.group, map(b.pair.generator())).unwrap() })
                    .collect();
                bd
            })
            .collect();
        let moved = GluingProblem::new(p.surface.clone(), p.group.clone(), building).unwrap();
        let moved_sets = incidence_sets(&moved).unwrap();
        prop_assert_eq!(relevant_points(&moved, &moved_sets).unwrap(), relevant);
        prop_assert_eq!(chi_ox(&moved, &moved_sets).unwrap(), chi);
        prop_assert_eq!(k_square(&moved).unwrap(), k2);
    }
}

#[test]
fn parity_and_residual_indices_agree_on_every_table_row() {
    for row in abelcover_core::local::tables::rows() {
        let cfg = abelcover_core::local::classify::row_config(row).unwrap();
        if [1, 2, 3, 7, 8, 9].contains(&row.table) {
            assert_eq!(iota_parity(&cfg), iota_residual(&cfg).unwrap(), "{}", row.label);
        }
    }
}

#[test]
fn canonical_codes_are_distinct_within_each_table() {
    for t in 1..=9u8 {
        let classes = abelcover_core::local::enumerate_table(t).unwrap();
        let labels: BTreeSet<&str> = classes.iter().map(|c| c.classification.label).collect();
        assert_eq!(labels.len(), classes.len(), "table {t}");
    }
}
