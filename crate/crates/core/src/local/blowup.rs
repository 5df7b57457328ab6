//! Blowing up the base point, pulling the cover back and normalizing along
//! the exceptional curve, and iterating until the germs are semismooth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::local::classify::lookup;
use crate::local::config::{DupPattern, LocalConfig, Side};

/// Blow-up depth after which semi-resolution gives up.
pub const MAX_BLOWUP_DEPTH: usize = 4;

/// A point of the blown-up base where the new cover may be singular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupGerm {
    pub location: String,
    /// Number of points of the new cover over this point.
    pub copies: u64,
    /// `None` when the germ falls outside every table shape.
    pub config: Option<LocalConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub issue: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Blowup {
    /// Inertia of each exceptional curve, `None` when it is not branched.
    /// A two-sided point has one exceptional curve per side.
    pub exceptional: Vec<(Side, Option<u32>)>,
    pub germs: Vec<BlowupGerm>,
}

/// Curves through the point on one side: `(first index, coincident pair?)`.
fn geometric_lines(cfg: &LocalConfig, side: Side) -> Vec<Vec<u32>> {
    let e = cfg.side_elements(side);
    if cfg.side_has_dup(side) {
        let mut out = vec![vec![e[0], e[1]]];
        if !cfg.is_double_crossing() && cfg.dup() == DupPattern::BothPairs {
            out.push(vec![e[2], e[3]]);
        } else {
            out.extend(e[2..].iter().map(|&g| vec![g]));
        }
        out
    } else {
        e.into_iter().map(|g| vec![g]).collect()
    }
}

fn line_name(cfg: &LocalConfig, side: Side, first: usize, size: usize) -> String {
    let offset = if side == Side::Second { cfg.side_elements(Side::First).len() } else { 0 };
    let i = offset + first + 1;
    if size == 2 {
        format!("D{i}=D{}", i + 1)
    } else {
        format!("D{i}")
    }
}

pub fn blowup_transform(cfg: &LocalConfig) -> Result<Blowup> {
    let h = cfg.h_order();
    let copies_of = |germ: &LocalConfig| h / germ.h_order();
    let sides: &[Side] = if cfg.is_double_crossing() { &[Side::First, Side::Second] } else { &[Side::First] };
    let mut exceptional = Vec::new();
    let mut germs = Vec::new();
    for &side in sides {
        let sum = cfg.side_elements(side).iter().fold(cfg.g0(), |a, g| a ^ g);
        let e = (sum != 0).then_some(sum);
        exceptional.push((side, e));
        let ename =
            if cfg.is_double_crossing() { format!("E{}", if side == Side::First { 1 } else { 2 }) } else { "E".into() };
        let mut first = 0;
        for group in geometric_lines(cfg, side) {
            let mut elems = group.clone();
            elems.extend(e);
            let dup = if group.len() == 2 { DupPattern::FirstPair } else { DupPattern::None };
            let config = LocalConfig::smooth(cfg.r(), elems, dup)?;
            germs.push(BlowupGerm {
                location: format!("{ename}∩{}", line_name(cfg, side, first, group.len())),
                copies: copies_of(&config),
                config: Some(config),
                issue: None,
            });
            first += group.len();
        }
    }
    if cfg.is_double_crossing() {
        let pick = |i: usize| exceptional[i].1.into_iter().collect::<Vec<u32>>();
        let location = "E1∩E2∩C".to_string();
        match LocalConfig::double_crossing(cfg.r(), cfg.g0(), pick(0), pick(1), false, false) {
            Ok(config) => {
                germs.push(BlowupGerm { location, copies: copies_of(&config), config: Some(config), issue: None })
            }
            Err(e) => germs.push(BlowupGerm { location, copies: 0, config: None, issue: Some(e.to_string()) }),
        }
    }
    Ok(Blowup { exceptional, germs })
}

/// True when the germ's table entry is smooth, semismooth or d.c.
pub fn is_semismooth(cfg: &LocalConfig) -> Result<bool> {
    let row = lookup(cfg)?.descriptor();
    Ok(matches!(row.singularity, Some("smooth" | "semismooth" | "d.c.")))
}

/// One blow-up in a semi-resolution: which germ was blown up and at what depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionStep {
    pub depth: usize,
    pub germ: String,
    pub blowup: Blowup,
}

/// Blows up until every germ is semismooth.
pub fn semiresolve(cfg: &LocalConfig) -> Result<Vec<ResolutionStep>> {
    let mut steps = Vec::new();
    let mut pending = vec![(1usize, lookup(cfg)?.label.to_string(), cfg.clone())];
    while let Some((depth, name, germ)) = pending.pop() {
        if is_semismooth(&germ)? {
            continue;
        }
        if depth > MAX_BLOWUP_DEPTH {
            return Err(Error::IterationCap(MAX_BLOWUP_DEPTH));
        }
        let blowup = blowup_transform(&germ)?;
        for g in &blowup.germs {
            if let Some(c) = &g.config {
                pending.push((depth + 1, format!("{name}/{}", g.location), c.clone()));
            }
        }
        steps.push(ResolutionStep { depth, germ: name, blowup });
    }
    steps.sort_by(|a, b| (a.depth, &a.germ).cmp(&(b.depth, &b.germ)));
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::classify::classify;

    #[test]
    fn smooth_pair_blowup_separates_lines() {
        let cfg = LocalConfig::smooth(2, vec![1, 2], DupPattern::None).unwrap();
        let b = blowup_transform(&cfg).unwrap();
        assert_eq!(b.exceptional, vec![(Side::First, Some(3))]);
        assert_eq!(b.germs.len(), 2);
        for g in &b.germs {
            assert_eq!(classify(g.config.as_ref().unwrap()).unwrap().label, "2.1");
        }
    }

    #[test]
    fn a1_resolves_in_one_step() {
        let cfg = LocalConfig::smooth(1, vec![1, 1], DupPattern::None).unwrap();
        let steps = semiresolve(&cfg).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].blowup.exceptional, vec![(Side::First, None)]);
    }

    #[test]
    fn two_sided_blowup_has_corner_germ() {
        let cfg = LocalConfig::double_crossing(2, 0, vec![2, 2], vec![3, 3], false, false).unwrap();
        let b = blowup_transform(&cfg).unwrap();
        assert_eq!(b.exceptional, vec![(Side::First, None), (Side::Second, None)]);
        let corner = b.germs.iter().find(|g| g.location == "E1∩E2∩C").unwrap();
        assert_eq!(corner.config.as_ref().unwrap().k(), 0);
    }
}
