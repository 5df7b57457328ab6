//! Building data of abelian covers of a single smooth component and the
//! checks that only involve that component.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    character_exponent, epsilon, subgroup_generated, Character, CyclicPair, FiniteAbelianGroup, GroupElement, Subgroup,
};
use crate::surface::{CurveRole, GdcSurface, PointDecl, QDivisorClass};

/// A curve `D_i` on a component with its inertia pair `(H_i, psi_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDatum {
    pub curve: String,
    pub pair: CyclicPair,
}

/// Building data `(L_chi, D_i, H_i, psi_i)` of a `G`-cover of one component.
/// Double curves with nontrivial inertia appear among the branch data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingData {
    pub group: FiniteAbelianGroup,
    pub component: String,
    pub branches: Vec<BranchDatum>,
    /// Explicit line bundles; when absent they are solved for.
    pub line_bundles: Option<BTreeMap<Character, QDivisorClass>>,
}

impl BuildingData {
    pub fn data_on<'a>(&'a self, curve: &'a str) -> impl Iterator<Item = &'a BranchDatum> + 'a {
        self.branches.iter().filter(move |b| b.curve == curve)
    }

    /// Branch data whose curve passes through `point`.
    pub fn data_through<'a>(&'a self, point: &'a PointDecl) -> impl Iterator<Item = &'a BranchDatum> + 'a {
        self.branches.iter().filter(move |b| point.contains(&b.curve))
    }
}

/// Outcome of checking `L_chi + L_chi' = L_{chi chi'} + sum_i eps^i D_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FundamentalCheck {
    Pass,
    Fail { left: Character, right: Character, difference: String },
}

fn branch_classes(surface: &GdcSurface, bd: &BuildingData) -> Result<Vec<QDivisorClass>> {
    for b in &bd.branches {
        if b.pair.generator().coords().len() != bd.group.rank() {
            return Err(Error::Shape { expected: bd.group.rank(), got: b.pair.generator().coords().len() });
        }
    }
    bd.branches.iter().map(|b| surface.class_on(&b.curve, &bd.component)).collect()
}

fn rank_of(surface: &GdcSurface, bd: &BuildingData) -> Result<usize> {
    Ok(surface.component(&bd.component)?.model.rank())
}

pub fn check_fundamental_relations(surface: &GdcSurface, bd: &BuildingData) -> Result<FundamentalCheck> {
    let lines = bd
        .line_bundles
        .as_ref()
        .ok_or_else(|| Error::Incomplete(format!("no line bundles given on `{}`", bd.component)))?;
    check_relations_against(surface, bd, lines)
}

fn check_relations_against(
    surface: &GdcSurface,
    bd: &BuildingData,
    lines: &BTreeMap<Character, QDivisorClass>,
) -> Result<FundamentalCheck> {
    let classes = branch_classes(surface, bd)?;
    let rank = rank_of(surface, bd)?;
    let zero = QDivisorClass::zero(rank);
    let group = &bd.group;
    let lookup = |chi: &Character| -> Result<QDivisorClass> {
        if chi.is_trivial() {
            return Ok(lines.get(chi).cloned().unwrap_or_else(|| zero.clone()));
        }
        let l = lines.get(chi).ok_or_else(|| Error::Incomplete(format!("missing line bundle for {chi}")))?;
        surface.component(&bd.component)?.model.check_class(l)?;
        Ok(l.clone())
    };
    let trivial = group.trivial_character();
    if !lookup(&trivial)?.is_zero() {
        return Ok(FundamentalCheck::Fail {
            left: trivial.clone(),
            right: trivial,
            difference: "line bundle of the trivial character is not zero".into(),
        });
    }
    let chars: Vec<Character> = group.characters().collect();
    for (i, chi) in chars.iter().enumerate() {
        for chi2 in &chars[i..] {
            let prod = group.char_mul(chi, chi2);
            let mut diff = lookup(chi)?.add(&lookup(chi2)?).sub(&lookup(&prod)?);
            for (b, class) in bd.branches.iter().zip(&classes) {
                let e = epsilon(group, chi, chi2, &b.pair)?;
                diff = diff.sub(&class.scale(Rational64::from_integer(e as i64)));
            }
            if !diff.is_zero() {
                return Ok(FundamentalCheck::Fail {
                    left: chi.clone(),
                    right: chi2.clone(),
                    difference: diff.to_string(),
                });
            }
        }
    }
    Ok(FundamentalCheck::Pass)
}

/// `L_chi = sum_i (a^i_chi / m_i) D_i`, the unique solution in a torsion-free
/// Picard lattice. Fails when some `L_chi` is not integral.
pub fn solve_line_bundles(surface: &GdcSurface, bd: &BuildingData) -> Result<BTreeMap<Character, QDivisorClass>> {
    let classes = branch_classes(surface, bd)?;
    let rank = rank_of(surface, bd)?;
    let group = &bd.group;
    let mut out = BTreeMap::new();
    for chi in group.characters() {
        let mut l = QDivisorClass::zero(rank);
        for (b, class) in bd.branches.iter().zip(&classes) {
            let a = character_exponent(group, &chi, &b.pair)?;
            l = l.add(&class.scale(Rational64::new(a as i64, b.pair.order() as i64)));
        }
        if !l.is_integral() {
            return Err(Error::NoSolution { character: chi.to_string(), class: l.to_string() });
        }
        out.insert(chi, l);
    }
    match check_relations_against(surface, bd, &out)? {
        FundamentalCheck::Pass => Ok(out),
        FundamentalCheck::Fail { left, right, .. } => {
            Err(Error::InternalConsistency(format!("solved line bundles violate the relation for ({left}, {right})")))
        }
    }
}

/// Explicit line bundles when given, solved ones otherwise.
pub fn line_bundles(surface: &GdcSurface, bd: &BuildingData) -> Result<BTreeMap<Character, QDivisorClass>> {
    match &bd.line_bundles {
        Some(lines) => {
            let mut full = lines.clone();
            full.entry(bd.group.trivial_character()).or_insert_with(|| QDivisorClass::zero(lines_rank(lines)));
            for chi in bd.group.characters() {
                if !full.contains_key(&chi) {
                    return Err(Error::Incomplete(format!("missing line bundle for {chi} on `{}`", bd.component)));
                }
            }
            Ok(full)
        }
        None => solve_line_bundles(surface, bd),
    }
}

fn lines_rank(lines: &BTreeMap<Character, QDivisorClass>) -> usize {
    lines.values().next().map(|c| c.rank()).unwrap_or(0)
}

/// `ν^*D = sum_i (m_i - 1)/m_i D_i` over branch curves; double curves carry
/// multiplicity 0 and are listed apart.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HurwitzDivisor {
    pub mults: BTreeMap<String, Rational64>,
    pub double_curves: BTreeSet<String>,
}

pub fn hurwitz_divisor(surface: &GdcSurface, bd: &BuildingData) -> Result<HurwitzDivisor> {
    let mut out = HurwitzDivisor::default();
    for b in &bd.branches {
        let decl = surface.curve(&b.curve)?;
        if decl.role == CurveRole::Double {
            out.double_curves.insert(b.curve.clone());
            continue;
        }
        let m = b.pair.order() as i64;
        *out.mults.entry(b.curve.clone()).or_insert_with(|| Rational64::from_integer(0)) += Rational64::new(m - 1, m);
    }
    Ok(out)
}

/// Subgroup generated by every inertia generator along curves through the point.
pub fn inertia_at_point(group: &FiniteAbelianGroup, bds: &[BuildingData], point: &PointDecl) -> Result<Subgroup> {
    let gens: Vec<GroupElement> =
        bds.iter().flat_map(|bd| bd.data_through(point)).map(|b| b.pair.generator().clone()).collect();
    subgroup_generated(group, &gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub normal: bool,
    pub gdc: bool,
    pub standardable: bool,
}

/// Normal iff every Hurwitz multiplicity is below 1, gdc iff all are at most
/// 1, standardable iff every multiplicity-1 curve carries exactly two data of
/// order 2.
pub fn structure_flags(surface: &GdcSurface, bd: &BuildingData) -> Result<StructureFlags> {
    let hd = hurwitz_divisor(surface, bd)?;
    let one = Rational64::from_integer(1);
    let normal = hd.mults.values().all(|&m| m < one);
    let gdc = hd.mults.values().all(|&m| m <= one);
    let standardable = hd.mults.iter().filter(|(_, &m)| m == one).all(|(curve, _)| {
        let data: Vec<&BranchDatum> = bd.data_on(curve).collect();
        data.len() == 2 && data.iter().all(|b| b.pair.order() == 2)
    });
    Ok(StructureFlags { normal, gdc, standardable })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlcViolation {
    pub component: String,
    pub locus: String,
    pub value: String,
}

/// Checks that `ν^*D + C'` has coefficients at most 1 on every component and
/// total multiplicity at most 2 at every declared point.
pub fn slc_check(surface: &GdcSurface, bds: &[BuildingData]) -> Result<Vec<SlcViolation>> {
    let one = Rational64::from_integer(1);
    let two = Rational64::from_integer(2);
    let mut out = Vec::new();
    for bd in bds {
        let hd = hurwitz_divisor(surface, bd)?;
        let mut coeffs = hd.mults.clone();
        for curve in surface.double_curves() {
            let sides = curve.sides.iter().filter(|s| s.component == bd.component).count() as i64;
            if sides > 0 {
                *coeffs.entry(curve.id.clone()).or_insert_with(|| Rational64::from_integer(0)) +=
                    Rational64::from_integer(sides);
            }
        }
        for (curve, &c) in &coeffs {
            if c > one {
                out.push(SlcViolation { component: bd.component.clone(), locus: curve.clone(), value: c.to_string() });
            }
        }
        for point in &surface.points {
            let total: Rational64 = point
                .on
                .iter()
                .filter_map(|curve| coeffs.get(curve).map(|&c| c * Rational64::from_integer(point.mult(curve) as i64)))
                .sum();
            if total > two {
                out.push(SlcViolation {
                    component: bd.component.clone(),
                    locus: point.id.clone(),
                    value: total.to_string(),
                });
            }
        }
    }
    Ok(out)
}

/// A germ of a smooth surface with branch lines through the origin. Lines
/// sharing a `symbol` are the same geometric curve `sigma_symbol = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalGerm {
    pub group: FiniteAbelianGroup,
    pub lines: Vec<(usize, CyclicPair)>,
}

/// The germ of `bd` at a declared point: one symbol per curve through it.
pub fn local_germ(bd: &BuildingData, point: &PointDecl) -> LocalGerm {
    let mut symbols: Vec<&str> = Vec::new();
    let mut lines = Vec::new();
    for datum in bd.data_through(point) {
        let s = match symbols.iter().position(|c| *c == datum.curve) {
            Some(s) => s,
            None => {
                symbols.push(&datum.curve);
                symbols.len() - 1
            }
        };
        lines.push((s, datum.pair.clone()));
    }
    LocalGerm { group: bd.group.clone(), lines }
}

/// `z_chi^d = prod_s sigma_s^{e_s}` where `d` is the order of `chi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerRelation {
    pub character: Character,
    pub order: u32,
    pub sigma: Vec<u64>,
}

/// `z_chi z_chi' = (prod_s sigma_s^{e_s}) z_{chi chi'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRelation {
    pub left: Character,
    pub right: Character,
    pub product: Character,
    pub sigma: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalEquations {
    pub symbols: usize,
    pub powers: Vec<PowerRelation>,
    pub products: Vec<ProductRelation>,
}

impl LocalEquations {
    pub fn power(&self, chi: &Character) -> Option<&PowerRelation> {
        self.powers.iter().find(|p| &p.character == chi)
    }
}

fn character_order(group: &FiniteAbelianGroup, chi: &Character) -> u32 {
    chi.0.iter().zip(group.orders()).fold(1u32, |acc, (&c, &n)| acc.lcm(&(n / c.gcd(&n))))
}

/// The relations presenting the local ring of the cover over the germ.
pub fn local_equations(germ: &LocalGerm) -> Result<LocalEquations> {
    let group = &germ.group;
    let symbols = germ.lines.iter().map(|(s, _)| s + 1).max().unwrap_or(0);
    let chars: Vec<Character> = group.characters().filter(|c| !c.is_trivial()).collect();
    let mut powers = Vec::new();
    for chi in &chars {
        let d = character_order(group, chi);
        let mut sigma = vec![0u64; symbols];
        for (s, pair) in &germ.lines {
            let a = character_exponent(group, chi, pair)? as u64;
            sigma[*s] += d as u64 * a / pair.order() as u64;
        }
        powers.push(PowerRelation { character: chi.clone(), order: d, sigma });
    }
    let mut products = Vec::new();
    for (i, chi) in chars.iter().enumerate() {
        for chi2 in &chars[i..] {
            let mut sigma = vec![0u64; symbols];
            for (s, pair) in &germ.lines {
                sigma[*s] += epsilon(group, chi, chi2, pair)? as u64;
            }
            products.push(ProductRelation {
                left: chi.clone(),
                right: chi2.clone(),
                product: group.char_mul(chi, chi2),
                sigma,
            });
        }
    }
    Ok(LocalEquations { symbols, powers, products })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{Component, CurveDecl, CurveSide, SmoothSurfaceModel};

    fn p2_with_lines(n: usize) -> GdcSurface {
        GdcSurface {
            components: vec![Component { id: "Y".into(), model: SmoothSurfaceModel::p2() }],
            curves: (0..n)
                .map(|i| CurveDecl {
                    id: format!("D{i}"),
                    role: CurveRole::Branch,
                    sides: vec![CurveSide { component: "Y".into(), class: QDivisorClass::from_ints(&[1]) }],
                    rational: true,
                })
                .collect(),
            points: vec![],
        }
    }

    fn datum(group: &FiniteAbelianGroup, curve: &str, g: &[u32]) -> BranchDatum {
        BranchDatum { curve: curve.into(), pair: CyclicPair::standard(group, GroupElement(g.to_vec())).unwrap() }
    }

    #[test]
    fn double_cover_of_p2_branched_on_two_lines() {
        let s = p2_with_lines(2);
        let g = FiniteAbelianGroup::z2r(1);
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![datum(&g, "D0", &[1]), datum(&g, "D1", &[1])],
            line_bundles: None,
        };
        let l = solve_line_bundles(&s, &bd).unwrap();
        assert_eq!(l[&Character(vec![1])], QDivisorClass::from_ints(&[1]));
    }

    #[test]
    fn odd_branch_degree_has_no_solution() {
        let s = p2_with_lines(1);
        let g = FiniteAbelianGroup::z2r(1);
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![datum(&g, "D0", &[1])],
            line_bundles: None,
        };
        assert!(matches!(solve_line_bundles(&s, &bd), Err(Error::NoSolution { .. })));
    }

    #[test]
    fn wrong_explicit_bundle_fails_check() {
        let s = p2_with_lines(2);
        let g = FiniteAbelianGroup::z2r(1);
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![datum(&g, "D0", &[1]), datum(&g, "D1", &[1])],
            line_bundles: Some(BTreeMap::from([(Character(vec![1]), QDivisorClass::from_ints(&[2]))])),
        };
        assert!(matches!(check_fundamental_relations(&s, &bd).unwrap(), FundamentalCheck::Fail { .. }));
    }

    #[test]
    fn z4_line_is_not_normal_flagged_correctly() {
        let s = p2_with_lines(1);
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![datum(&g, "D0", &[1])],
            line_bundles: None,
        };
        assert_eq!(hurwitz_divisor(&s, &bd).unwrap().mults["D0"], Rational64::new(3, 4));
        let f = structure_flags(&s, &bd).unwrap();
        assert!(f.normal && f.gdc && f.standardable);
    }

    #[test]
    fn doubled_line_is_standardable() {
        let s = p2_with_lines(1);
        let g = FiniteAbelianGroup::z2r(2);
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![datum(&g, "D0", &[1, 0]), datum(&g, "D0", &[0, 1])],
            line_bundles: None,
        };
        let f = structure_flags(&s, &bd).unwrap();
        assert_eq!(f, StructureFlags { normal: false, gdc: true, standardable: true });
    }

    #[test]
    fn z4_single_line_equation() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let germ =
            LocalGerm { group: g.clone(), lines: vec![(0, CyclicPair::standard(&g, GroupElement(vec![1])).unwrap())] };
        let eq = local_equations(&germ).unwrap();
        let p = eq.power(&Character(vec![1])).unwrap();
        assert_eq!((p.order, p.sigma.clone()), (4, vec![1]));
        let p3 = eq.power(&Character(vec![3])).unwrap();
        assert_eq!(p3.sigma, vec![3]);
    }

    #[test]
    fn triple_point_violates_slc() {
        let mut s = p2_with_lines(3);
        s.points.push(PointDecl {
            id: "p".into(),
            on: vec!["D0".into(), "D1".into(), "D2".into()],
            incident_mults: BTreeMap::new(),
            c_singular: false,
            cycle: vec![],
        });
        let g = FiniteAbelianGroup::z2r(2);
        let bd = BuildingData {
            group: g.clone(),
            component: "Y".into(),
            branches: vec![
                datum(&g, "D0", &[1, 0]),
                datum(&g, "D0", &[0, 1]),
                datum(&g, "D1", &[1, 1]),
                datum(&g, "D2", &[1, 1]),
            ],
            line_bundles: None,
        };
        assert!(slc_check(&s, std::slice::from_ref(&bd)).unwrap().is_empty());
        let mut heavier = bd;
        heavier.branches.push(datum(&g, "D1", &[1, 0]));
        let v = slc_check(&s, &[heavier]).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].locus.as_str(), v[0].value.as_str()), ("p", "5/2"));
    }
}
