//! The JSON input format.
//!
//! Parsing is strict: unknown keys are rejected and the version must match
//! [`SCHEMA_VERSION`]. Group elements and characters are integer arrays and
//! rational coefficients are `[num, den]` pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cover::{BranchDatum, BuildingData};
use crate::error::{Error, Result};
use crate::gluing::GluingProblem;
use crate::group::{Character, CyclicPair, FiniteAbelianGroup, GroupElement};
use crate::surface::{
    validate_surface, Component, CurveDecl, CurveRole, Finding, GdcSurface, PointDecl, QDivisorClass,
    SmoothSurfaceModel, SurfaceKind,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub version: String,
    pub group: Vec<u32>,
    pub components: Vec<ComponentDoc>,
    pub curves: Vec<CurveDecl>,
    #[serde(default)]
    pub points: Vec<PointDecl>,
    /// Branch data per component id.
    #[serde(default)]
    pub branch_data: BTreeMap<String, Vec<BranchDoc>>,
    /// Inertia `g_l` per double curve, added to both sides unless a side
    /// lists the curve in its branch data itself.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub double_inertia: BTreeMap<String, GroupElement>,
    /// Explicit `L_chi` per component id; solved for when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_bundles: Option<BTreeMap<String, Vec<LineBundleDoc>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub id: String,
    pub kind: SurfaceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_o: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDoc {
    pub curve: String,
    pub element: GroupElement,
    /// `psi(h) = psi_exponent / m`; 1 when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_exponent: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineBundleDoc {
    pub character: Character,
    pub class: QDivisorClass,
}

/// Parses and checks the version. Schema errors carry serde's line and
/// column.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    if doc.version != SCHEMA_VERSION {
        return Err(Error::Input(format!(
            "schema version `{}` is not supported (expected `{SCHEMA_VERSION}`)",
            doc.version
        )));
    }
    Ok(doc)
}

/// Pretty JSON; `parse_input(&render(d))` gives `d` back.
pub fn render(doc: &InputDocument) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}

fn model(c: &ComponentDoc) -> Result<SmoothSurfaceModel> {
    let extra = c.gram.is_some() || c.canonical.is_some() || c.chi_o.is_some();
    match c.kind {
        SurfaceKind::P2 | SurfaceKind::P1xP1 if extra => {
            Err(Error::Input(format!("component `{}`: gram, canonical and chi_o are only for LATTICE", c.id)))
        }
        SurfaceKind::P2 => Ok(SmoothSurfaceModel::p2()),
        SurfaceKind::P1xP1 => Ok(SmoothSurfaceModel::p1xp1()),
        SurfaceKind::Lattice => match (&c.gram, &c.canonical, c.chi_o) {
            (Some(g), Some(k), Some(chi)) => SmoothSurfaceModel::lattice(g.clone(), k.clone(), chi),
            _ => Err(Error::Incomplete(format!("LATTICE component `{}` needs gram, canonical and chi_o", c.id))),
        },
    }
}

pub fn surface_of(doc: &InputDocument) -> Result<GdcSurface> {
    let components = doc
        .components
        .iter()
        .map(|c| Ok(Component { id: c.id.clone(), model: model(c)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(GdcSurface { components, curves: doc.curves.clone(), points: doc.points.clone() })
}

/// Structural findings: those of the surface plus unresolved references in
/// the branch data.
pub fn validate_document(doc: &InputDocument) -> Result<Vec<Finding>> {
    let surface = surface_of(doc)?;
    let mut findings = validate_surface(&surface);
    let mut push = |subject: &str, message: String| findings.push(Finding { subject: subject.into(), message });
    for (comp, data) in &doc.branch_data {
        if surface.component(comp).is_err() {
            push(comp, "branch data for an unknown component".into());
            continue;
        }
        for b in data {
            match surface.curve(&b.curve) {
                Ok(decl) if !decl.sides.iter().any(|s| &s.component == comp) => {
                    push(comp, format!("curve `{}` does not lie on this component", b.curve))
                }
                Ok(_) => {}
                Err(e) => push(comp, e.to_string()),
            }
        }
    }
    for curve in doc.double_inertia.keys() {
        match surface.curve(curve) {
            Ok(decl) if decl.role != CurveRole::Double => push(curve, "inertia given for a branch curve".into()),
            Ok(_) => {}
            Err(e) => push(curve, e.to_string()),
        }
    }
    if let Some(lines) = &doc.line_bundles {
        for comp in lines.keys() {
            if surface.component(comp).is_err() {
                push(comp, "line bundles for an unknown component".into());
            }
        }
    }
    Ok(findings)
}

/// Builds the gluing problem. Structural findings are reported as an input
/// error.
pub fn to_problem(doc: &InputDocument) -> Result<GluingProblem> {
    let findings = validate_document(doc)?;
    if !findings.is_empty() {
        let listed: Vec<String> = findings.iter().map(|f| format!("{}: {}", f.subject, f.message)).collect();
        return Err(Error::Input(listed.join("; ")));
    }
    let group = FiniteAbelianGroup::new(doc.group.clone())?;
    let surface = surface_of(doc)?;
    let mut building = Vec::with_capacity(surface.components.len());
    for comp in &surface.components {
        let mut branches = Vec::new();
        for b in doc.branch_data.get(&comp.id).into_iter().flatten() {
            group.check(&b.element)?;
            let pair = CyclicPair::new(&group, b.element.clone(), b.psi_exponent.unwrap_or(1))?;
            branches.push(BranchDatum { curve: b.curve.clone(), pair });
        }
        for (curve, g) in &doc.double_inertia {
            group.check(g)?;
            let decl = surface.curve(curve)?;
            let listed = branches.iter().any(|b| &b.curve == curve);
            if g.is_zero() || listed {
                continue;
            }
            for _ in decl.sides.iter().filter(|s| s.component == comp.id) {
                branches.push(BranchDatum { curve: curve.clone(), pair: CyclicPair::standard(&group, g.clone())? });
            }
        }
        let line_bundles = match doc.line_bundles.as_ref().and_then(|m| m.get(&comp.id)) {
            Some(list) => {
                let mut map = BTreeMap::new();
                for lb in list {
                    group.check_character(&lb.character)?;
                    comp.model.check_class(&lb.class)?;
                    if map.insert(lb.character.clone(), lb.class.clone()).is_some() {
                        return Err(Error::Input(format!(
                            "line bundle for {} given twice on `{}`",
                            lb.character, comp.id
                        )));
                    }
                }
                Some(map)
            }
            None => None,
        };
        building.push(BuildingData { group: group.clone(), component: comp.id.clone(), branches, line_bundles });
    }
    GluingProblem::new(surface, group, building)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "version": "1",
        "group": [2],
        "components": [{"id": "Y", "kind": "P2"}],
        "curves": [
            {"id": "D1", "role": "BRANCH", "sides": [{"component": "Y", "class": [[1, 1]]}]},
            {"id": "D2", "role": "BRANCH", "sides": [{"component": "Y", "class": [[1, 1]]}]}
        ],
        "points": [{"id": "p", "on": ["D1", "D2"]}],
        "branch_data": {"Y": [{"curve": "D1", "element": [1]}, {"curve": "D2", "element": [1]}]}
    }"#;

    #[test]
    fn minimal_document_builds() {
        let doc = parse_input(MINIMAL).unwrap();
        let p = to_problem(&doc).unwrap();
        assert_eq!(p.building[0].branches.len(), 2);
    }

    #[test]
    fn unknown_keys_and_versions_rejected() {
        let extra = MINIMAL.replacen("\"version\": \"1\",", "\"version\": \"1\", \"colour\": 3,", 1);
        assert!(parse_input(&extra).unwrap_err().is_input_error());
        let v2 = MINIMAL.replacen("\"version\": \"1\"", "\"version\": \"2\"", 1);
        assert!(parse_input(&v2).is_err());
        assert!(parse_input("{}").is_err());
    }

    #[test]
    fn render_round_trips() {
        let doc = parse_input(MINIMAL).unwrap();
        assert_eq!(parse_input(&render(&doc)).unwrap(), doc);
    }

    #[test]
    fn dangling_references_are_input_errors() {
        let bad = MINIMAL.replacen("\"on\": [\"D1\", \"D2\"]", "\"on\": [\"D1\", \"D9\"]", 1);
        let err = to_problem(&parse_input(&bad).unwrap()).unwrap_err();
        assert!(err.is_input_error());
    }
}
