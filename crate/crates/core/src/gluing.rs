//! Gluing `(Z_2)^r`-covers of the components along the double curves, and
//! the point sets on the double curves that enter the Euler characteristic.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_rational::Rational64;
use serde::Serialize;

use crate::cover::{inertia_at_point, line_bundles, BranchDatum, BuildingData};
use crate::error::{Error, Result};
use crate::group::{Character, FiniteAbelianGroup, GroupElement, Residue, Subgroup};
use crate::local::config::{DupPattern, LocalConfig};
use crate::surface::{CurveDecl, CurveRole, GdcSurface, PointDecl, QDivisorClass};

/// A gdc surface with building data on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingProblem {
    pub surface: GdcSurface,
    pub group: FiniteAbelianGroup,
    /// One entry per component, in the order of `surface.components`.
    pub building: Vec<BuildingData>,
    lines: OnceLock<Result<Vec<LineBundles>>>,
}

type LineBundles = BTreeMap<Character, QDivisorClass>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The two sides disagree on the inertia of the double curve.
    InertiaMismatch,
    /// Branch elements on the two sides differ modulo `g_l`.
    Congruence,
    /// Different Hurwitz multiplicity on the two sides of a point.
    Unbalanced,
    /// A cycle condition at a c-singular point fails.
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlueViolation {
    pub kind: ViolationKind,
    pub curve: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GlueReport {
    pub violations: Vec<GlueViolation>,
}

impl GlueReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A branch datum through a point, with the local intersection multiplicity
/// of its curve with the double curve.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Incident<'a> {
    datum: &'a BranchDatum,
    mult: u32,
}

impl GluingProblem {
    pub fn new(surface: GdcSurface, group: FiniteAbelianGroup, building: Vec<BuildingData>) -> Result<Self> {
        if building.len() != surface.components.len() {
            return Err(Error::Incomplete(format!(
                "{} components but building data for {}",
                surface.components.len(),
                building.len()
            )));
        }
        for (c, bd) in surface.components.iter().zip(&building) {
            if c.id != bd.component {
                return Err(Error::Inconsistent(format!("building data for `{}` listed at `{}`", bd.component, c.id)));
            }
            if bd.group != group {
                return Err(Error::Inconsistent(format!("building data on `{}` use another group", c.id)));
            }
        }
        Ok(GluingProblem { surface, group, building, lines: OnceLock::new() })
    }

    pub fn building_for(&self, component: &str) -> Result<&BuildingData> {
        Ok(&self.building[self.surface.component_index(component)?])
    }

    /// `L_chi` on the component, explicit or solved; computed once.
    pub fn line_bundles(&self, component: &str) -> Result<&LineBundles> {
        let all = self
            .lines
            .get_or_init(|| self.building.iter().map(|bd| line_bundles(&self.surface, bd)).collect())
            .as_ref()
            .map_err(Clone::clone)?;
        Ok(&all[self.surface.component_index(component)?])
    }

    fn require_z2r(&self) -> Result<()> {
        if !self.group.is_elementary_2() {
            return Err(Error::Unsupported("gluing is only decided for G = (Z_2)^r".into()));
        }
        Ok(())
    }

    fn require_rational(&self) -> Result<()> {
        if let Some(c) = self.surface.double_curves().find(|c| !c.rational) {
            return Err(Error::Unsupported(format!("double curve `{}` is not rational", c.id)));
        }
        Ok(())
    }

    /// Inertia generator of a double curve as seen from side `side`;
    /// zero when that side carries no datum on it.
    pub fn side_inertia(&self, curve: &CurveDecl, side: usize) -> Result<GroupElement> {
        let comp = &curve
            .sides
            .get(side)
            .ok_or_else(|| Error::Incomplete(format!("double curve `{}` has no side {}", curve.id, side + 1)))?
            .component;
        let bd = self.building_for(comp)?;
        Ok(bd.data_on(&curve.id).next().map(|b| b.pair.generator().clone()).unwrap_or_else(|| self.group.zero()))
    }

    /// `g_l`, read from the first side.
    pub fn double_inertia(&self, curve: &str) -> Result<GroupElement> {
        let decl = self.surface.curve(curve)?;
        if decl.role != CurveRole::Double {
            return Err(Error::Input(format!("`{curve}` is not a double curve")));
        }
        self.side_inertia(decl, 0)
    }

    fn branch_data_at<'a>(&'a self, component: &str, point: &'a PointDecl) -> Result<Vec<Incident<'a>>> {
        let bd = self.building_for(component)?;
        let mut out = Vec::new();
        for datum in bd.data_through(point) {
            if self.surface.curve(&datum.curve)?.role == CurveRole::Branch {
                out.push(Incident { datum, mult: point.mult(&datum.curve) });
            }
        }
        Ok(out)
    }

    /// Inertia subgroup `H_y`, including the double-curve generators.
    pub fn inertia(&self, point: &PointDecl) -> Result<Subgroup> {
        inertia_at_point(&self.group, &self.building, point)
    }
}

fn weighted_sum(group: &FiniteAbelianGroup, data: &[Incident<'_>]) -> GroupElement {
    data.iter().fold(group.zero(), |acc, i| group.add(&acc, &group.scale(i.datum.pair.generator(), i.mult as u64)))
}

fn weighted_hurwitz(data: &[Incident<'_>]) -> Rational64 {
    data.iter()
        .map(|i| {
            let m = i.datum.pair.order() as i64;
            Rational64::new((m - 1) * i.mult as i64, m)
        })
        .sum()
}

fn congruent_mod(group: &FiniteAbelianGroup, a: &GroupElement, b: &GroupElement, g: &GroupElement) -> bool {
    let diff = group.add(a, &group.neg(b));
    diff.is_zero() || diff == *g
}

/// Checks the conditions under which the component covers glue: equal
/// inertia on both sides of each double curve, the congruence of branch
/// elements modulo `g_l` and equal multiplicity at each point of a double
/// curve, and the cycle conditions at c-singular points.
pub fn glue_check(p: &GluingProblem) -> Result<GlueReport> {
    p.require_z2r()?;
    p.require_rational()?;
    let group = &p.group;
    let mut report = GlueReport::default();
    let mut push = |kind, curve: &str, point: Option<&str>, message: String| {
        report.violations.push(GlueViolation {
            kind,
            curve: curve.to_string(),
            point: point.map(str::to_string),
            message,
        })
    };
    for curve in p.surface.double_curves() {
        if curve.sides.len() != 2 {
            return Err(Error::Incomplete(format!("double curve `{}` needs two sides", curve.id)));
        }
        let ga = p.side_inertia(curve, 0)?;
        let gb = p.side_inertia(curve, 1)?;
        if ga != gb {
            push(
                ViolationKind::InertiaMismatch,
                &curve.id,
                None,
                format!("inertia {ga} on one side, {gb} on the other"),
            );
            continue;
        }
        for point in p.surface.points.iter().filter(|pt| pt.contains(&curve.id) && !pt.c_singular) {
            let a = p.branch_data_at(&curve.sides[0].component, point)?;
            let b = p.branch_data_at(&curve.sides[1].component, point)?;
            let (sa, sb) = (weighted_sum(group, &a), weighted_sum(group, &b));
            if !congruent_mod(group, &sa, &sb, &ga) {
                push(
                    ViolationKind::Congruence,
                    &curve.id,
                    Some(&point.id),
                    format!("branch elements sum to {sa} and {sb}, not congruent modulo {ga}"),
                );
            }
            let (ha, hb) = (weighted_hurwitz(&a), weighted_hurwitz(&b));
            if ha != hb {
                push(
                    ViolationKind::Unbalanced,
                    &curve.id,
                    Some(&point.id),
                    format!("branch multiplicity {ha} on one side, {hb} on the other"),
                );
            }
        }
    }
    for point in p.surface.points.iter().filter(|pt| pt.c_singular) {
        let q = point.cycle.len();
        if q == 0 {
            return Err(Error::Incomplete(format!("c-singular point `{}` has no cycle", point.id)));
        }
        let gens: Vec<GroupElement> = point.cycle.iter().map(|s| p.double_inertia(&s.curve)).collect::<Result<_>>()?;
        let h = p.inertia(point)?;
        for i in 0..q {
            let (prev, cur, next) = (&gens[(i + q - 1) % q], &gens[i], &gens[(i + 1) % q]);
            let curve = &point.cycle[i].curve;
            if !congruent_mod(group, prev, next, cur) {
                push(
                    ViolationKind::Cycle,
                    curve,
                    Some(&point.id),
                    format!("neighbours {prev} and {next} differ modulo {cur}"),
                );
            }
            let independent = !cur.is_zero() && !next.is_zero() && cur != next;
            if !independent || h.order() != 4 {
                push(
                    ViolationKind::Cycle,
                    curve,
                    Some(&point.id),
                    format!("<{cur}> + <{next}> is not isomorphic to the inertia group of order {}", h.order()),
                );
            }
        }
    }
    Ok(report)
}

/// Point sets on the double curves: for each double curve `l` and each
/// character trivial on `g_l`, the sets `A`, `B` and `N = A ∩ B`; for each
/// character, the c-singular points `T` where it is trivial on `H_y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SideSets {
    pub per_curve: BTreeMap<String, BTreeMap<Character, CurveSets>>,
    pub t: BTreeMap<Character, BTreeSet<String>>,
    /// Points of a double curve where a side has branch multiplicity other
    /// than 0 or 1; they lie in no `A` or `B`.
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CurveSets {
    pub a: BTreeSet<String>,
    pub b: BTreeSet<String>,
    pub n: BTreeSet<String>,
}

/// Characters of `G` vanishing on `g`.
pub fn characters_killing<'a>(
    group: &'a FiniteAbelianGroup,
    g: &'a GroupElement,
) -> impl Iterator<Item = Character> + 'a {
    group.characters().filter(move |chi| group.eval(chi, g).is_zero())
}

fn half() -> Residue {
    Residue::new(1, 2)
}

pub fn incidence_sets(p: &GluingProblem) -> Result<SideSets> {
    p.require_z2r()?;
    p.require_rational()?;
    let group = &p.group;
    let mut out = SideSets::default();
    let one = Rational64::from_integer(1);
    for curve in p.surface.double_curves() {
        let g = p.double_inertia(&curve.id)?;
        let mut per_char: BTreeMap<Character, CurveSets> =
            characters_killing(group, &g).map(|chi| (chi, CurveSets::default())).collect();
        for point in p.surface.points.iter().filter(|pt| pt.contains(&curve.id) && !pt.c_singular) {
            if let Some((c, &m)) = point.incident_mults.iter().find(|(_, &m)| m != 1) {
                return Err(Error::InvalidConfig(format!(
                    "point `{}` meets `{c}` with multiplicity {m}; only transverse lines are supported",
                    point.id
                )));
            }
            for (side, sets) in [(0usize, true), (1, false)] {
                let data = p.branch_data_at(&curve.sides[side].component, point)?;
                let mult = weighted_hurwitz(&data);
                if mult != one {
                    if mult != Rational64::from_integer(0) {
                        out.diagnostics.push(format!(
                            "`{}` on `{}`: branch multiplicity {mult} on {}",
                            point.id, curve.id, curve.sides[side].component
                        ));
                    }
                    continue;
                }
                if data.len() != 2 {
                    continue;
                }
                for (chi, cs) in per_char.iter_mut() {
                    if data.iter().all(|i| group.eval(chi, i.datum.pair.generator()) == half()) {
                        let set = if sets { &mut cs.a } else { &mut cs.b };
                        set.insert(point.id.clone());
                    }
                }
            }
        }
        for cs in per_char.values_mut() {
            cs.n = cs.a.intersection(&cs.b).cloned().collect();
        }
        out.per_curve.insert(curve.id.clone(), per_char);
    }
    for chi in group.characters() {
        out.t.insert(chi, BTreeSet::new());
    }
    for point in p.surface.points.iter().filter(|pt| pt.c_singular) {
        let h = p.inertia(point)?;
        for (chi, t) in out.t.iter_mut() {
            if h.elements().iter().all(|g| group.eval(chi, g).is_zero()) {
                t.insert(point.id.clone());
            }
        }
    }
    out.diagnostics.sort();
    out.diagnostics.dedup();
    Ok(out)
}

fn side_degree(p: &GluingProblem, curve: &CurveDecl, side: usize, chi: &Character) -> Result<Rational64> {
    let s = &curve.sides[side];
    let model = &p.surface.component(&s.component)?.model;
    let lines = p.line_bundles(&s.component)?;
    let l = lines.get(chi).cloned().unwrap_or_else(|| QDivisorClass::zero(model.rank()));
    model.intersect(&l, &s.class)
}

/// `deg M_{l,chi} = L_{a,chi}.F_l - |A| = L_{b,chi}.F_l - |B|`.
pub fn m_degree(p: &GluingProblem, sets: &SideSets, curve: &str, chi: &Character) -> Result<i64> {
    let decl = p.surface.curve(curve)?;
    let cs = sets
        .per_curve
        .get(curve)
        .ok_or_else(|| Error::unknown("double curve", curve))?
        .get(chi)
        .ok_or_else(|| Error::Input(format!("{chi} is not trivial on the inertia of `{curve}`")))?;
    let da = side_degree(p, decl, 0, chi)? - Rational64::from_integer(cs.a.len() as i64);
    let db = side_degree(p, decl, 1, chi)? - Rational64::from_integer(cs.b.len() as i64);
    if da != db || !da.is_integer() {
        return Err(Error::Inconsistent(format!(
            "deg M on `{curve}` for {chi}: {da} from one side, {db} from the other"
        )));
    }
    Ok(da.to_integer())
}

/// Points of `C` that are singular for `C` or lie in some `N_{l,chi}`,
/// with weight `[G:H_y]`.
pub fn relevant_points(p: &GluingProblem, sets: &SideSets) -> Result<BTreeMap<String, u64>> {
    let mut ids: BTreeSet<String> =
        p.surface.points.iter().filter(|pt| pt.c_singular).map(|pt| pt.id.clone()).collect();
    for per_char in sets.per_curve.values() {
        for cs in per_char.values() {
            ids.extend(cs.n.iter().cloned());
        }
    }
    ids.into_iter()
        .map(|id| {
            let h = p.inertia(p.surface.point(&id)?)?;
            Ok((id, p.group.order() / h.order()))
        })
        .collect()
}

fn local_sides(p: &GluingProblem, component: &str, point: &PointDecl) -> Result<(Vec<GroupElement>, usize)> {
    let data = p.branch_data_at(component, point)?;
    let mut by_curve: BTreeMap<&str, Vec<GroupElement>> = BTreeMap::new();
    for i in &data {
        if i.datum.pair.order() != 2 {
            return Err(Error::Unsupported("local classification needs order-2 data".into()));
        }
        by_curve.entry(&i.datum.curve).or_default().push(i.datum.pair.generator().clone());
    }
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    for (curve, elems) in by_curve {
        match elems.len() {
            1 => singles.extend(elems),
            2 => pairs.push(elems),
            n => return Err(Error::InvalidConfig(format!("{n} branch data on `{curve}` at `{}`", point.id))),
        }
    }
    let dups = pairs.len();
    let mut out: Vec<GroupElement> = pairs.into_iter().flatten().collect();
    out.extend(singles);
    Ok((out, dups))
}

/// The local configuration of the cover at a declared point, for the
/// classifier. Points of a double curve give two-sided configurations.
pub fn local_config_at(p: &GluingProblem, point: &str) -> Result<LocalConfig> {
    p.require_z2r()?;
    let point = p.surface.point(point)?;
    if point.c_singular {
        return Err(Error::Unsupported(format!("`{}` lies on several double curves (degenerate cusp)", point.id)));
    }
    let r = p.group.rank();
    let doubles: Vec<&CurveDecl> =
        point.on.iter().filter_map(|c| p.surface.curve(c).ok()).filter(|c| c.role == CurveRole::Double).collect();
    match doubles.as_slice() {
        [] => {
            let comps = p.surface.components_at(point)?;
            let [comp] = comps.as_slice() else {
                return Err(Error::Inconsistent(format!("`{}` lies on {} components", point.id, comps.len())));
            };
            let (elems, dups) = local_sides(p, comp, point)?;
            let masks = LocalConfig::masks(&p.group, &elems)?;
            let dup = match dups {
                0 => DupPattern::None,
                1 => DupPattern::FirstPair,
                _ => DupPattern::BothPairs,
            };
            LocalConfig::smooth(r, masks, dup)
        }
        [curve] => {
            let g0 = LocalConfig::masks(&p.group, &[p.double_inertia(&curve.id)?])?[0];
            let (a, da) = local_sides(p, &curve.sides[0].component, point)?;
            let (b, db) = local_sides(p, &curve.sides[1].component, point)?;
            LocalConfig::double_crossing(
                r,
                g0,
                LocalConfig::masks(&p.group, &a)?,
                LocalConfig::masks(&p.group, &b)?,
                da > 0,
                db > 0,
            )
        }
        _ => Err(Error::Inconsistent(format!("`{}` lies on several double curves but is not c-singular", point.id))),
    }
}
