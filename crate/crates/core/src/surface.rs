//! Smooth surface models, rational divisor classes and the declared curves
//! and points of a generalized double-crossing surface.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A class in `Pic(Y) ⊗ Q`, as rational coordinates in the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QDivisorClass(pub Vec<Rational64>);

impl Serialize for QDivisorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, i64)> = self.0.iter().map(|q| (*q.numer(), *q.denom())).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QDivisorClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, i64)> = Vec::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(pairs.len());
        for (n, den) in pairs {
            if den == 0 {
                return Err(serde::de::Error::custom("rational with zero denominator"));
            }
            coeffs.push(Rational64::new(n, den));
        }
        Ok(QDivisorClass(coeffs))
    }
}

impl QDivisorClass {
    pub fn zero(rank: usize) -> Self {
        QDivisorClass(vec![Rational64::from_integer(0); rank])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QDivisorClass(coeffs.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c.numer() == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &QDivisorClass) -> QDivisorClass {
        QDivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QDivisorClass) -> QDivisorClass {
        QDivisorClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: Rational64) -> QDivisorClass {
        QDivisorClass(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> QDivisorClass {
        self.scale(Rational64::from_integer(-1))
    }
}

impl fmt::Display for QDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceKind {
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "P1xP1")]
    P1xP1,
    #[serde(rename = "LATTICE")]
    Lattice,
}

/// A smooth projective surface given by its Picard lattice, canonical class
/// and `chi(O_Y)`. Catalog surfaces also know the cohomology of every line
/// bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothSurfaceModel {
    kind: SurfaceKind,
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    chi_o: i64,
}

/// Cohomology dimensions `(h^0, h^1, h^2)`.
pub type Cohomology = (i64, i64, i64);

impl SmoothSurfaceModel {
    pub fn p2() -> Self {
        SmoothSurfaceModel { kind: SurfaceKind::P2, gram: vec![vec![1]], canonical: vec![-3], chi_o: 1 }
    }

    /// Basis: the two rulings `(1,0)` and `(0,1)`.
    pub fn p1xp1() -> Self {
        SmoothSurfaceModel {
            kind: SurfaceKind::P1xP1,
            gram: vec![vec![0, 1], vec![1, 0]],
            canonical: vec![-2, -2],
            chi_o: 1,
        }
    }

    /// A user supplied lattice; only intersection numbers and Euler
    /// characteristics are available for it.
    pub fn lattice(gram: Vec<Vec<i64>>, canonical: Vec<i64>, chi_o: i64) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::Input("gram matrix is not square".into()));
        }
        if (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::Input("gram matrix is not symmetric".into()));
        }
        if canonical.len() != n {
            return Err(Error::SurfaceMismatch { expected: n, got: canonical.len() });
        }
        Ok(SmoothSurfaceModel { kind: SurfaceKind::Lattice, gram, canonical, chi_o })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn canonical_class(&self) -> QDivisorClass {
        QDivisorClass::from_ints(&self.canonical)
    }

    pub fn check_class(&self, c: &QDivisorClass) -> Result<()> {
        if c.rank() != self.rank() {
            return Err(Error::SurfaceMismatch { expected: self.rank(), got: c.rank() });
        }
        Ok(())
    }

    pub fn intersect(&self, a: &QDivisorClass, b: &QDivisorClass) -> Result<Rational64> {
        self.check_class(a)?;
        self.check_class(b)?;
        let mut acc = Rational64::from_integer(0);
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                acc += ai * bj * Rational64::from_integer(self.gram[i][j]);
            }
        }
        Ok(acc)
    }

    pub fn self_intersection(&self, a: &QDivisorClass) -> Result<Rational64> {
        self.intersect(a, a)
    }

    /// `chi(L^{-1}) = chi(O_Y) + L·(L + K)/2`.
    pub fn euler_char_inverse(&self, l: &QDivisorClass) -> Result<i64> {
        if !l.is_integral() {
            return Err(Error::Parity(format!("non-integral class {l}")));
        }
        let twice = self.intersect(l, &l.add(&self.canonical_class()))?;
        let value = Rational64::from_integer(self.chi_o) + twice / 2;
        if !value.is_integer() {
            return Err(Error::Parity(format!("class {l}")));
        }
        Ok(value.to_integer())
    }

    /// `chi(O(L)) = chi(O_Y) + L·(L - K)/2`.
    pub fn euler_char(&self, l: &QDivisorClass) -> Result<i64> {
        self.euler_char_inverse(&l.neg())
    }

    /// `(h^0, h^1, h^2)` of `O(L)`; only for catalog surfaces.
    pub fn cohomology(&self, l: &QDivisorClass) -> Result<Cohomology> {
        self.check_class(l)?;
        if !l.is_integral() {
            return Err(Error::Parity(format!("non-integral class {l}")));
        }
        let c: Vec<i64> = l.0.iter().map(|q| q.to_integer()).collect();
        match self.kind {
            SurfaceKind::P2 => Ok(p2_cohomology(c[0])),
            SurfaceKind::P1xP1 => {
                let (a0, a1) = p1_cohomology(c[0]);
                let (b0, b1) = p1_cohomology(c[1]);
                Ok((a0 * b0, a0 * b1 + a1 * b0, a1 * b1))
            }
            SurfaceKind::Lattice => Err(Error::Unsupported("cohomology is only available on catalog surfaces".into())),
        }
    }
}

/// `(h^0, h^1)` of `O_{P^1}(d)`.
pub fn p1_cohomology(d: i64) -> (i64, i64) {
    if d >= 0 {
        (d + 1, 0)
    } else {
        (0, -d - 1)
    }
}

fn p2_cohomology(d: i64) -> Cohomology {
    if d >= 0 {
        ((d + 1) * (d + 2) / 2, 0, 0)
    } else if d <= -3 {
        (0, 0, (-d - 1) * (-d - 2) / 2)
    } else {
        (0, 0, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveRole {
    #[serde(rename = "BRANCH")]
    Branch,
    #[serde(rename = "DOUBLE")]
    Double,
}

/// The class of a curve on one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSide {
    pub component: String,
    pub class: QDivisorClass,
}

/// A branch curve has one side; a double curve has two, listed as
/// `(Y_a, Y_b)`, possibly on the same component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDecl {
    pub id: String,
    pub role: CurveRole,
    pub sides: Vec<CurveSide>,
    #[serde(default = "default_true")]
    pub rational: bool,
}

fn default_true() -> bool {
    true
}

/// One step of the cycle at a c-singular point: the component `Y_i` and the
/// double curve joining `Y_i` to the next component of the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleStep {
    pub component: String,
    pub curve: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDecl {
    pub id: String,
    /// Curves through the point.
    pub on: Vec<String>,
    /// Local intersection multiplicity per curve; absent entries mean 1.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub incident_mults: BTreeMap<String, u32>,
    #[serde(default)]
    pub c_singular: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cycle: Vec<CycleStep>,
}

impl PointDecl {
    pub fn mult(&self, curve: &str) -> u32 {
        self.incident_mults.get(curve).copied().unwrap_or(1)
    }

    pub fn contains(&self, curve: &str) -> bool {
        self.on.iter().any(|c| c == curve)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: String,
    pub model: SmoothSurfaceModel,
}

/// The normalization `Y` of a gdc surface: components, branch and double
/// curves, and the declared special points.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GdcSurface {
    pub components: Vec<Component>,
    pub curves: Vec<CurveDecl>,
    pub points: Vec<PointDecl>,
}

impl GdcSurface {
    pub fn component(&self, id: &str) -> Result<&Component> {
        self.components.iter().find(|c| c.id == id).ok_or_else(|| Error::unknown("component", id))
    }

    pub fn component_index(&self, id: &str) -> Result<usize> {
        self.components.iter().position(|c| c.id == id).ok_or_else(|| Error::unknown("component", id))
    }

    pub fn curve(&self, id: &str) -> Result<&CurveDecl> {
        self.curves.iter().find(|c| c.id == id).ok_or_else(|| Error::unknown("curve", id))
    }

    pub fn point(&self, id: &str) -> Result<&PointDecl> {
        self.points.iter().find(|p| p.id == id).ok_or_else(|| Error::unknown("point", id))
    }

    pub fn double_curves(&self) -> impl Iterator<Item = &CurveDecl> {
        self.curves.iter().filter(|c| c.role == CurveRole::Double)
    }

    /// Class of `curve` on `component`, summed over sides lying there.
    pub fn class_on(&self, curve: &str, component: &str) -> Result<QDivisorClass> {
        let decl = self.curve(curve)?;
        let model = &self.component(component)?.model;
        let mut acc = QDivisorClass::zero(model.rank());
        let mut found = false;
        for side in decl.sides.iter().filter(|s| s.component == component) {
            model.check_class(&side.class)?;
            acc = acc.add(&side.class);
            found = true;
        }
        if !found {
            return Err(Error::Inconsistent(format!("curve `{curve}` does not lie on `{component}`")));
        }
        Ok(acc)
    }

    /// Components on which a point lies, in declaration order.
    pub fn components_at(&self, point: &PointDecl) -> Result<Vec<String>> {
        let mut seen = BTreeSet::new();
        for curve in &point.on {
            for side in &self.curve(curve)?.sides {
                seen.insert(side.component.clone());
            }
        }
        Ok(self.components.iter().filter(|c| seen.contains(&c.id)).map(|c| c.id.clone()).collect())
    }

    /// Components grouped into connected pieces along double curves.
    pub fn is_connected(&self) -> bool {
        let n = self.components.len();
        if n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for curve in self.double_curves() {
            let idx: Vec<usize> = curve.sides.iter().filter_map(|s| self.component_index(&s.component).ok()).collect();
            for w in idx.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..n).all(|i| find(&mut parent, i) == root)
    }
}

/// A problem found while validating declared data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub subject: String,
    pub message: String,
}

/// Structural validation: identifiers resolve, classes live in the right
/// lattice, double curves are rational with two sides, and cycles at
/// c-singular points close up.
pub fn validate_surface(surface: &GdcSurface) -> Vec<Finding> {
    let mut findings = Vec::new();
    let mut push = |subject: &str, message: String| findings.push(Finding { subject: subject.to_string(), message });
    let mut ids = BTreeSet::new();
    for c in &surface.components {
        if !ids.insert(("component", c.id.as_str())) {
            push(&c.id, "duplicate component id".into());
        }
    }
    for curve in &surface.curves {
        if !ids.insert(("curve", curve.id.as_str())) {
            push(&curve.id, "duplicate curve id".into());
        }
        let expected = match curve.role {
            CurveRole::Branch => 1,
            CurveRole::Double => 2,
        };
        if curve.sides.len() != expected {
            push(&curve.id, format!("{:?} curve needs {expected} side(s), has {}", curve.role, curve.sides.len()));
        }
        if curve.role == CurveRole::Double && !curve.rational {
            push(&curve.id, "double curves of positive genus are not supported".into());
        }
        for side in &curve.sides {
            match surface.component(&side.component) {
                Ok(comp) => {
                    if let Err(e) = comp.model.check_class(&side.class) {
                        push(&curve.id, e.to_string());
                    }
                }
                Err(e) => push(&curve.id, e.to_string()),
            }
        }
    }
    for point in &surface.points {
        if !ids.insert(("point", point.id.as_str())) {
            push(&point.id, "duplicate point id".into());
        }
        for curve in &point.on {
            if surface.curve(curve).is_err() {
                push(&point.id, format!("unknown curve `{curve}`"));
            }
        }
        for (curve, &m) in &point.incident_mults {
            if !point.contains(curve) {
                push(&point.id, format!("multiplicity given for curve `{curve}` not through the point"));
            }
            if m == 0 {
                push(&point.id, format!("zero multiplicity for `{curve}`"));
            }
        }
        if point.c_singular {
            for f in cycle_findings(surface, point) {
                push(&point.id, f);
            }
        } else if !point.cycle.is_empty() {
            push(&point.id, "cycle given for a point that is not c-singular".into());
        }
    }
    findings
}

fn cycle_findings(surface: &GdcSurface, point: &PointDecl) -> Vec<String> {
    let mut out = Vec::new();
    let q = point.cycle.len();
    if q == 0 {
        out.push("c-singular point without a cycle".into());
        return out;
    }
    for (i, step) in point.cycle.iter().enumerate() {
        let next = &point.cycle[(i + 1) % q].component;
        let Ok(curve) = surface.curve(&step.curve) else {
            out.push(format!("unknown curve `{}` in cycle", step.curve));
            continue;
        };
        if curve.role != CurveRole::Double {
            out.push(format!("cycle curve `{}` is not a double curve", step.curve));
        }
        if !point.contains(&step.curve) {
            out.push(format!("cycle curve `{}` does not pass through the point", step.curve));
        }
        let mut sides: Vec<&str> = curve.sides.iter().map(|s| s.component.as_str()).collect();
        let mut wanted = vec![step.component.as_str(), next.as_str()];
        sides.sort_unstable();
        wanted.sort_unstable();
        if sides != wanted {
            out.push(format!("cycle curve `{}` does not join `{}` and `{next}`", step.curve, step.component));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn p2_basic_numbers() {
        let p2 = SmoothSurfaceModel::p2();
        let h = QDivisorClass::from_ints(&[1]);
        assert_eq!(p2.intersect(&h, &h).unwrap(), q(1, 1));
        assert_eq!(p2.euler_char_inverse(&h).unwrap(), 0);
        assert_eq!(p2.euler_char_inverse(&QDivisorClass::from_ints(&[2])).unwrap(), 0);
        assert_eq!(p2.euler_char_inverse(&QDivisorClass::from_ints(&[3])).unwrap(), 1);
    }

    #[test]
    fn p1xp1_numbers() {
        let m = SmoothSurfaceModel::p1xp1();
        let l = QDivisorClass::from_ints(&[1, 1]);
        assert_eq!(m.self_intersection(&l).unwrap(), q(2, 1));
        assert_eq!(m.euler_char_inverse(&l).unwrap(), 0);
        assert_eq!(m.cohomology(&QDivisorClass::from_ints(&[-1, -1])).unwrap(), (0, 0, 0));
        assert_eq!(m.cohomology(&QDivisorClass::from_ints(&[-2, 0])).unwrap(), (0, 1, 0));
        assert_eq!(m.cohomology(&QDivisorClass::from_ints(&[-2, -2])).unwrap(), (0, 0, 1));
    }

    #[test]
    fn p2_cohomology_values() {
        let p2 = SmoothSurfaceModel::p2();
        assert_eq!(p2.cohomology(&QDivisorClass::from_ints(&[-3])).unwrap(), (0, 0, 1));
        assert_eq!(p2.cohomology(&QDivisorClass::from_ints(&[2])).unwrap(), (6, 0, 0));
        assert_eq!(p2.cohomology(&QDivisorClass::from_ints(&[-1])).unwrap(), (0, 0, 0));
    }

    #[test]
    fn half_classes_fail_parity() {
        let p2 = SmoothSurfaceModel::p2();
        let half = QDivisorClass(vec![q(1, 2)]);
        assert!(matches!(p2.euler_char_inverse(&half), Err(Error::Parity(_))));
        let odd = SmoothSurfaceModel::lattice(vec![vec![1]], vec![0], 1).unwrap();
        assert!(matches!(odd.euler_char_inverse(&QDivisorClass::from_ints(&[1])), Err(Error::Parity(_))));
    }

    #[test]
    fn rank_mismatch_rejected() {
        let p2 = SmoothSurfaceModel::p2();
        let bad = QDivisorClass::from_ints(&[1, 0]);
        assert_eq!(p2.intersect(&bad, &bad), Err(Error::SurfaceMismatch { expected: 1, got: 2 }));
    }

    #[test]
    fn lattice_has_no_cohomology() {
        let m = SmoothSurfaceModel::lattice(vec![vec![1]], vec![-3], 1).unwrap();
        assert!(matches!(m.cohomology(&QDivisorClass::from_ints(&[1])), Err(Error::Unsupported(_))));
        assert!(SmoothSurfaceModel::lattice(vec![vec![0, 1], vec![2, 0]], vec![0, 0], 1).is_err());
    }

    #[test]
    fn p1_curve_cohomology() {
        assert_eq!(p1_cohomology(0), (1, 0));
        assert_eq!(p1_cohomology(-1), (0, 0));
        assert_eq!(p1_cohomology(-3), (0, 2));
    }

    #[test]
    fn class_serde_reduces_fractions() {
        let c: QDivisorClass = serde_json::from_str("[[2,4],[3,1]]").unwrap();
        assert_eq!(c, QDivisorClass(vec![q(1, 2), q(3, 1)]));
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[1,2],[3,1]]");
        assert!(serde_json::from_str::<QDivisorClass>("[[1,0]]").is_err());
    }
}
