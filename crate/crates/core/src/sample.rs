//! Random glueable configurations: two catalog components glued along a
//! rational curve, with branch lines through declared points of it.
//!
//! Randomness comes from a caller-supplied `next(n)` returning a uniform
//! value in `0..n`, so the library itself carries no RNG.

use std::collections::BTreeMap;

use crate::document::{to_problem, BranchDoc, ComponentDoc, InputDocument, SCHEMA_VERSION};
use crate::gluing::{glue_check, GluingProblem};
use crate::local::config::to_element;
use crate::surface::{CurveDecl, CurveRole, CurveSide, PointDecl, QDivisorClass, SurfaceKind};

/// Attempts per call of [`glueable`] before giving up.
pub const MAX_ATTEMPTS: usize = 10_000;

struct Builder<'a> {
    next: &'a mut dyn FnMut(u32) -> u32,
    r: usize,
    curves: Vec<CurveDecl>,
    points: Vec<PointDecl>,
    data: BTreeMap<String, Vec<BranchDoc>>,
    kinds: [SurfaceKind; 2],
}

const SIDES: [&str; 2] = ["Y1", "Y2"];

impl Builder<'_> {
    fn nonzero(&mut self) -> u32 {
        1 + (self.next)((1 << self.r) - 1)
    }

    /// Adds a branch curve on side `s` through the point, with one datum per
    /// element. On `P1xP1` the ruling is `ruling`.
    fn curve(&mut self, s: usize, point: usize, ruling: usize, elems: &[u32]) {
        let id = format!("D{}", self.curves.len());
        let class = match self.kinds[s] {
            SurfaceKind::P1xP1 if ruling == 0 => QDivisorClass::from_ints(&[1, 0]),
            SurfaceKind::P1xP1 => QDivisorClass::from_ints(&[0, 1]),
            _ => QDivisorClass::from_ints(&[1]),
        };
        self.curves.push(CurveDecl {
            id: id.clone(),
            role: CurveRole::Branch,
            sides: vec![CurveSide { component: SIDES[s].into(), class }],
            rational: true,
        });
        self.points[point].on.push(id.clone());
        for &g in elems {
            self.data.entry(SIDES[s].into()).or_default().push(BranchDoc {
                curve: id.clone(),
                element: to_element(self.r, g),
                psi_exponent: None,
            });
        }
    }

    /// Two lines on side `s` through a point, or one line carrying both
    /// data when `dup`.
    fn pair(&mut self, s: usize, point: usize, a: u32, b: u32, dup: bool) {
        if dup {
            let ruling = (self.next)(2) as usize;
            self.curve(s, point, ruling, &[a, b]);
        } else {
            self.curve(s, point, 0, &[a]);
            self.curve(s, point, 1, &[b]);
        }
    }

    fn new_point(&mut self) -> usize {
        self.points.push(PointDecl {
            id: format!("y{}", self.points.len() + 1),
            on: vec!["C".into()],
            incident_mults: BTreeMap::new(),
            c_singular: false,
            cycle: vec![],
        });
        self.points.len() - 1
    }

    /// What still has to be added on side `s` for every `L_chi` to be
    /// integral: one element per generator of the Picard lattice.
    fn deficiency(&self, s: usize, gl: u32) -> Vec<u32> {
        let mut d = match self.kinds[s] {
            SurfaceKind::P1xP1 => vec![gl, gl],
            _ => vec![gl],
        };
        for b in self.data.get(SIDES[s]).into_iter().flatten() {
            let decl = self.curves.iter().find(|c| c.id == b.curve).expect("curve was added");
            let g = b.element.coords().iter().enumerate().fold(0u32, |acc, (j, &c)| acc | c << j);
            for (slot, coeff) in d.iter_mut().zip(&decl.sides[0].class.0) {
                if coeff.to_integer() % 2 != 0 {
                    *slot ^= g;
                }
            }
        }
        d
    }
}

/// One attempt; `None` when the draw is rejected.
pub fn try_glueable(next: &mut dyn FnMut(u32) -> u32) -> Option<GluingProblem> {
    let r = 1 + next(3) as usize;
    let kinds = [0, 1].map(|_| if next(2) == 0 { SurfaceKind::P2 } else { SurfaceKind::P1xP1 });
    let gl = next(1 << r);
    let mut b = Builder { next, r, curves: Vec::new(), points: Vec::new(), data: BTreeMap::new(), kinds };
    let c_class = |k: SurfaceKind| match k {
        SurfaceKind::P1xP1 => QDivisorClass::from_ints(&[1, 1]),
        _ => QDivisorClass::from_ints(&[1]),
    };
    b.curves.push(CurveDecl {
        id: "C".into(),
        role: CurveRole::Double,
        sides: (0..2).map(|s| CurveSide { component: SIDES[s].into(), class: c_class(kinds[s]) }).collect(),
        rational: true,
    });
    let npoints = 1 + (b.next)(4);
    for _ in 0..npoints {
        let y = b.new_point();
        match (b.next)(4) {
            0 => {
                let a = b.nonzero();
                let c = a ^ if (b.next)(2) == 0 { 0 } else { gl };
                if c == 0 {
                    return None;
                }
                let (ra, rb) = ((b.next)(2) as usize, (b.next)(2) as usize);
                b.curve(0, y, ra, &[a]);
                b.curve(1, y, rb, &[c]);
            }
            t => {
                let (a1, a2, b1) = (b.nonzero(), b.nonzero(), b.nonzero());
                let b2 = a1 ^ a2 ^ b1 ^ if (b.next)(2) == 0 { 0 } else { gl };
                if b2 == 0 {
                    return None;
                }
                b.pair(0, y, a1, a2, t == 2);
                b.pair(1, y, b1, b2, t == 3);
            }
        }
    }
    let fixes: Vec<Option<(u32, u32)>> = (0..2)
        .map(|s| {
            let d = b.deficiency(s, gl);
            match d.as_slice() {
                [0, 0] | [0] => Some((0, 0)),
                [x, y] if *x != 0 && *y != 0 => Some((*x, *y)),
                [x] if r > 1 => {
                    let mut u = 0;
                    while u == 0 || u == *x {
                        u = b.nonzero();
                    }
                    Some((u, u ^ x))
                }
                _ => None,
            }
        })
        .collect();
    match (fixes[0]?, fixes[1]?) {
        ((0, 0), (0, 0)) => {}
        ((0, 0), _) | (_, (0, 0)) => return None,
        ((a1, a2), (b1, b2)) => {
            let y = b.new_point();
            b.curve(0, y, 0, &[a1]);
            b.curve(0, y, 1, &[a2]);
            b.curve(1, y, 0, &[b1]);
            b.curve(1, y, 1, &[b2]);
        }
    }
    let doc = InputDocument {
        version: SCHEMA_VERSION.into(),
        group: vec![2; r],
        components: (0..2)
            .map(|s| ComponentDoc { id: SIDES[s].into(), kind: kinds[s], gram: None, canonical: None, chi_o: None })
            .collect(),
        curves: b.curves,
        points: b.points,
        branch_data: b.data,
        double_inertia: BTreeMap::from([("C".to_string(), to_element(r, gl))]),
        line_bundles: None,
    };
    let p = to_problem(&doc).ok()?;
    for comp in &p.surface.components {
        p.line_bundles(&comp.id).ok()?;
    }
    glue_check(&p).ok()?.passed().then_some(p)
}

/// Draws until a glueable configuration comes up.
pub fn glueable(next: &mut dyn FnMut(u32) -> u32) -> Option<GluingProblem> {
    (0..MAX_ATTEMPTS).find_map(|_| try_glueable(next))
}
