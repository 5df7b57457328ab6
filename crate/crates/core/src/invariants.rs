//! `K_X^2`, `chi(O_X)`, the eigensheaves `F_chi` of `O_X` and the Cartier
//! index of `K_X` at the declared points.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use serde::Serialize;

use crate::cover::hurwitz_divisor;
use crate::error::{Error, Result};
use crate::gluing::{
    characters_killing, glue_check, incidence_sets, m_degree, relevant_points, GluingProblem, SideSets, ViolationKind,
};
use crate::group::{component_sum_hom, residual_index, Character, CyclicPair};
use crate::surface::{Cohomology, CurveRole, QDivisorClass};

/// `K_X^2 = sum_i |G| (K_{Y_i} + D|_{Y_i} + C'|_{Y_i})^2`.
pub fn k_square(p: &GluingProblem) -> Result<Rational64> {
    let order = Rational64::from_integer(p.group.order() as i64);
    let mut total = Rational64::from_integer(0);
    for (comp, bd) in p.surface.components.iter().zip(&p.building) {
        let model = &comp.model;
        let mut class = model.canonical_class();
        for (curve, &m) in &hurwitz_divisor(&p.surface, bd)?.mults {
            class = class.add(&p.surface.class_on(curve, &comp.id)?.scale(m));
        }
        for curve in p.surface.double_curves() {
            for side in curve.sides.iter().filter(|s| s.component == comp.id) {
                class = class.add(&side.class);
            }
        }
        total += order * model.self_intersection(&class)?;
    }
    Ok(total)
}

/// `chi(O_{B~}) = sum_l sum_{chi(g_l) = 0} (1 - deg M_{l,chi})`.
pub fn chi_normalized_b(p: &GluingProblem, sets: &SideSets) -> Result<i64> {
    let mut total = 0;
    for curve in p.surface.double_curves() {
        let g = p.double_inertia(&curve.id)?;
        for chi in characters_killing(&p.group, &g) {
            total += 1 - m_degree(p, sets, &curve.id, &chi)?;
        }
    }
    Ok(total)
}

/// One summand `M_{l,chi}^{-1}(-N_{l,chi})` of `(im alpha)_chi`, a line
/// bundle on the rational curve `F_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImAlphaPiece {
    pub curve: String,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigensheafReport {
    pub character: Character,
    /// `chi` of `(+)_i L_{i,chi}^{-1}`.
    pub chi_sum_l: i64,
    pub chi_im_alpha: i64,
    pub chi_f: i64,
    pub pieces: Vec<ImAlphaPiece>,
    pub t: BTreeSet<String>,
    /// `(h^0, h^1, h^2)` of `F_chi` when forced by the two exact sequences.
    pub cohomology: Option<Cohomology>,
}

/// `chi((im alpha)_chi) = sum_{l: chi(g_l)=0} (1 - deg M - |N|) - |T_chi|` and
/// `chi(F_chi) = sum_i chi(L_{i,chi}^{-1}) - chi((im alpha)_chi)`.
pub fn chi_eigensheaf(p: &GluingProblem, sets: &SideSets, chi: &Character) -> Result<EigensheafReport> {
    p.group.check_character(chi)?;
    let mut pieces = Vec::new();
    for curve in p.surface.double_curves() {
        let Some(cs) = sets.per_curve.get(&curve.id).and_then(|m| m.get(chi)) else {
            continue;
        };
        pieces.push(ImAlphaPiece {
            curve: curve.id.clone(),
            degree: -m_degree(p, sets, &curve.id, chi)? - cs.n.len() as i64,
        });
    }
    let t = sets.t.get(chi).cloned().unwrap_or_default();
    let chi_im_alpha = pieces.iter().map(|pc| 1 + pc.degree).sum::<i64>() - t.len() as i64;

    let mut chi_sum_l = 0;
    let mut l_cohomology = Some((0, 0, 0));
    for (comp, bd) in p.surface.components.iter().zip(&p.building) {
        let lines = p.line_bundles(&bd.component)?;
        let l = lines.get(chi).cloned().unwrap_or_else(|| QDivisorClass::zero(comp.model.rank()));
        chi_sum_l += comp.model.euler_char_inverse(&l)?;
        l_cohomology = match (l_cohomology, comp.model.cohomology(&l.neg())) {
            (Some((a0, a1, a2)), Ok((b0, b1, b2))) => Some((a0 + b0, a1 + b1, a2 + b2)),
            _ => None,
        };
    }
    let chi_f = chi_sum_l - chi_im_alpha;
    let cohomology = forced_cohomology(p, &pieces, &t, l_cohomology, chi.is_trivial());
    Ok(EigensheafReport { character: chi.clone(), chi_sum_l, chi_im_alpha, chi_f, pieces, t, cohomology })
}

/// Cohomology of `F_chi` read off `0 -> F -> (+)L^{-1} -> im alpha -> 0` when
/// `(+)L^{-1}` has no higher cohomology and `(im alpha)_chi` has none either
/// because every piece surjects onto its points of `T`.
fn forced_cohomology(
    p: &GluingProblem,
    pieces: &[ImAlphaPiece],
    t: &BTreeSet<String>,
    l_cohomology: Option<Cohomology>,
    trivial: bool,
) -> Option<Cohomology> {
    let (l0, l1, l2) = l_cohomology?;
    if l1 != 0 || l2 != 0 {
        return None;
    }
    for piece in pieces {
        let on_curve = t.iter().filter(|y| p.surface.point(y).map(|pt| pt.contains(&piece.curve)).unwrap_or(false));
        if piece.degree < (on_curve.count() as i64 - 1).max(-1) {
            return None;
        }
    }
    let h0_im: i64 = pieces.iter().map(|pc| pc.degree + 1).sum::<i64>() - t.len() as i64;
    if l0 == 0 {
        Some((0, h0_im, 0))
    } else if trivial && p.surface.is_connected() {
        Some((1, h0_im - l0 + 1, 0))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CartierIndex {
    One,
    Two,
    Indeterminate,
}

/// Is `chibar = prod_{non-double data} psi_i` at the point the pullback of a
/// character of `G`? Data on double curves enter once per side.
pub fn chibar_is_pullback(p: &GluingProblem, point: &str) -> Result<bool> {
    let point = p.surface.point(point)?;
    let mut pairs: Vec<CyclicPair> = Vec::new();
    let mut mask = BTreeSet::new();
    for bd in &p.building {
        for datum in bd.data_through(point) {
            if p.surface.curve(&datum.curve)?.role == CurveRole::Branch {
                mask.insert(pairs.len());
            }
            pairs.push(datum.pair.clone());
        }
    }
    if pairs.is_empty() {
        return Ok(true);
    }
    Ok(residual_index(&component_sum_hom(&p.group, &pairs)?, &mask) == 1)
}

/// Cartier index of `K_X` over a point: 2 when `chibar` is not a pullback,
/// 1 when it is and the graph of local branches is a tree, or when the point
/// is a c-singular point meeting the cycle conditions. Otherwise undecided.
pub fn global_cartier_index(p: &GluingProblem, point: &str) -> Result<CartierIndex> {
    if !p.group.is_elementary_2() {
        return Err(Error::Unsupported("Cartier indices are only decided for G = (Z_2)^r".into()));
    }
    if !chibar_is_pullback(p, point)? {
        return Ok(CartierIndex::Two);
    }
    let decl = p.surface.point(point)?;
    let vertices = p.surface.components_at(decl)?.len();
    let edges: Vec<&str> = decl
        .on
        .iter()
        .filter(|c| p.surface.curve(c).map(|d| d.role == CurveRole::Double).unwrap_or(false))
        .map(String::as_str)
        .collect();
    let tree = vertices > 0 && edges.len() + 1 == vertices && !decl.c_singular;
    if tree {
        return Ok(CartierIndex::One);
    }
    if decl.c_singular {
        let report = glue_check(p)?;
        let broken =
            report.violations.iter().any(|v| v.kind == ViolationKind::Cycle && v.point.as_deref() == Some(point));
        if !broken {
            return Ok(CartierIndex::One);
        }
    }
    Ok(CartierIndex::Indeterminate)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub k_square: Rational64,
    pub chi_ox: i64,
    /// `chi(O_{X'})`, the Euler characteristic of the normalization.
    pub chi_x_prime: i64,
    pub chi_b_tilde: i64,
    /// Relevant points with weight `[G:H_y]`.
    pub relevant: BTreeMap<String, u64>,
    pub eigensheaves: Vec<EigensheafReport>,
    pub cartier: BTreeMap<String, CartierIndex>,
}

/// `chi(O_{X'}) = sum_i [chi(O_{Y_i}) + sum_{chi != 1} chi(L_{i,chi}^{-1})]`.
pub fn chi_x_prime(p: &GluingProblem) -> Result<i64> {
    let mut total = 0;
    for (comp, bd) in p.surface.components.iter().zip(&p.building) {
        total += comp.model.chi_o();
        for (chi, l) in p.line_bundles(&bd.component)? {
            if !chi.is_trivial() {
                total += comp.model.euler_char_inverse(l)?;
            }
        }
    }
    Ok(total)
}

/// `chi(O_X) = chi(O_{X'}) - chi(O_{B~}) + sum_{y in Rel} [G:H_y]`, checked
/// against `sum_chi chi(F_chi)`.
pub fn chi_ox(p: &GluingProblem, sets: &SideSets) -> Result<i64> {
    let value = chi_x_prime(p)? - chi_normalized_b(p, sets)? + relevant_points(p, sets)?.values().sum::<u64>() as i64;
    let mut by_sheaves = 0;
    for chi in p.group.characters() {
        by_sheaves += chi_eigensheaf(p, sets, &chi)?.chi_f;
    }
    if by_sheaves != value {
        return Err(Error::InternalConsistency(format!(
            "chi(O_X) = {value} from the corollary but {by_sheaves} from the eigensheaves"
        )));
    }
    Ok(value)
}

/// Everything at once, after checking that the covers glue.
pub fn invariant_report(p: &GluingProblem) -> Result<InvariantReport> {
    let glue = glue_check(p)?;
    if let Some(v) = glue.violations.first() {
        return Err(Error::Inconsistent(format!(
            "the covers do not glue ({} violation(s)); first at `{}`: {}",
            glue.violations.len(),
            v.point.as_deref().unwrap_or(&v.curve),
            v.message
        )));
    }
    let sets = incidence_sets(p)?;
    let eigensheaves = p.group.characters().map(|chi| chi_eigensheaf(p, &sets, &chi)).collect::<Result<Vec<_>>>()?;
    let cartier = p
        .surface
        .points
        .iter()
        .map(|pt| Ok((pt.id.clone(), global_cartier_index(p, &pt.id)?)))
        .collect::<Result<_>>()?;
    Ok(InvariantReport {
        k_square: k_square(p)?,
        chi_ox: chi_ox(p, &sets)?,
        chi_x_prime: chi_x_prime(p)?,
        chi_b_tilde: chi_normalized_b(p, &sets)?,
        relevant: relevant_points(p, &sets)?,
        eigensheaves,
        cartier,
    })
}
