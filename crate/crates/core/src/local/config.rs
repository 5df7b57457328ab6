//! Local configurations of branch lines through a point of a smooth or
//! double-crossing base, with inertia in `(Z_2)^r`.
//!
//! Elements of `(Z_2)^r` are bitmasks: bit `j` is coordinate `j`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};

/// Largest rank accepted for local computations.
pub const MAX_LOCAL_RANK: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

/// Which lines coincide as curves: `FirstPair` means `D_1 = D_2`,
/// `BothPairs` means also `D_3 = D_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DupPattern {
    None,
    FirstPair,
    BothPairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Smooth,
    /// Two smooth sheets meeting along `C`, whose inertia is generated by `g0`
    /// (possibly zero).
    DoubleCrossing {
        g0: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocalLine {
    pub side: Side,
    pub element: u32,
}

/// A validated local configuration. Lines on the first side come first and a
/// duplicated pair always occupies positions 1 and 2 (and 3 and 4).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocalConfig {
    r: usize,
    base: Base,
    lines: Vec<LocalLine>,
    dup: DupPattern,
}

fn check_element(r: usize, g: u32, what: &str) -> Result<()> {
    if g >> r != 0 {
        return Err(Error::InvalidConfig(format!("{what} {g:#b} does not lie in (Z_2)^{r}")));
    }
    Ok(())
}

impl LocalConfig {
    /// Lines through a smooth point. With `FirstPair` the first two elements
    /// sit on one curve, with `BothPairs` also the last two.
    pub fn smooth(r: usize, elements: Vec<u32>, dup: DupPattern) -> Result<Self> {
        if r > MAX_LOCAL_RANK {
            return Err(Error::InvalidConfig(format!("rank {r} exceeds {MAX_LOCAL_RANK}")));
        }
        let k = elements.len();
        if k > 4 {
            return Err(Error::InvalidConfig(format!("{k} lines through a point is not log canonical")));
        }
        match dup {
            DupPattern::FirstPair if k < 2 => {
                return Err(Error::InvalidConfig("a duplicated pair needs two lines".into()))
            }
            DupPattern::BothPairs if k != 4 => {
                return Err(Error::InvalidConfig("two duplicated pairs need four lines".into()))
            }
            _ => {}
        }
        for &g in &elements {
            check_element(r, g, "element")?;
            if g == 0 {
                return Err(Error::InvalidConfig("branch line with trivial inertia".into()));
            }
        }
        let lines = elements.into_iter().map(|element| LocalLine { side: Side::First, element }).collect();
        Ok(LocalConfig { r, base: Base::Smooth, lines, dup })
    }

    /// Lines through a point of the double curve. A side with `dup` set has
    /// its two lines on one curve; a duplicate only on the second side is
    /// moved to the first by exchanging the sides.
    pub fn double_crossing(
        r: usize,
        g0: u32,
        side1: Vec<u32>,
        side2: Vec<u32>,
        dup1: bool,
        dup2: bool,
    ) -> Result<Self> {
        if r > MAX_LOCAL_RANK {
            return Err(Error::InvalidConfig(format!("rank {r} exceeds {MAX_LOCAL_RANK}")));
        }
        check_element(r, g0, "double-curve element")?;
        let (side1, side2, dup1, dup2) =
            if dup2 && !dup1 { (side2, side1, dup2, dup1) } else { (side1, side2, dup1, dup2) };
        if side1.len() != side2.len() {
            return Err(Error::InvalidConfig(format!(
                "{} lines on one side and {} on the other; D is not Q-Cartier",
                side1.len(),
                side2.len()
            )));
        }
        if side1.len() > 2 {
            return Err(Error::InvalidConfig("more than two lines on a side is not slc".into()));
        }
        if (dup1 && side1.len() != 2) || (dup2 && side2.len() != 2) {
            return Err(Error::InvalidConfig("a duplicated pair needs two lines on its side".into()));
        }
        for &g in side1.iter().chain(&side2) {
            check_element(r, g, "element")?;
            if g == 0 {
                return Err(Error::InvalidConfig("branch line with trivial inertia".into()));
            }
        }
        let s1 = side1.iter().fold(0, |a, g| a ^ g);
        let s2 = side2.iter().fold(0, |a, g| a ^ g);
        if s1 ^ s2 != 0 && s1 ^ s2 != g0 {
            return Err(Error::InvalidConfig("side sums differ modulo g0; the covers do not glue".into()));
        }
        let dup = match (dup1, dup2) {
            (false, false) => DupPattern::None,
            (true, false) => DupPattern::FirstPair,
            _ => DupPattern::BothPairs,
        };
        let lines = side1
            .into_iter()
            .map(|element| LocalLine { side: Side::First, element })
            .chain(side2.into_iter().map(|element| LocalLine { side: Side::Second, element }))
            .collect();
        Ok(LocalConfig { r, base: Base::DoubleCrossing { g0 }, lines, dup })
    }

    /// Converts group elements of `(Z_2)^r` to bitmasks.
    pub fn masks(group: &FiniteAbelianGroup, elements: &[GroupElement]) -> Result<Vec<u32>> {
        if !group.is_elementary_2() {
            return Err(Error::Unsupported("local classification needs G = (Z_2)^r".into()));
        }
        elements
            .iter()
            .map(|g| {
                group.check(g)?;
                Ok(g.coords().iter().enumerate().fold(0u32, |acc, (j, &c)| acc | (c << j)))
            })
            .collect()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn lines(&self) -> &[LocalLine] {
        &self.lines
    }

    pub fn dup(&self) -> DupPattern {
        self.dup
    }

    pub fn k(&self) -> usize {
        self.lines.len()
    }

    pub fn is_double_crossing(&self) -> bool {
        matches!(self.base, Base::DoubleCrossing { .. })
    }

    pub fn g0(&self) -> u32 {
        match self.base {
            Base::Smooth => 0,
            Base::DoubleCrossing { g0 } => g0,
        }
    }

    /// True when the double curve is itself a branch curve (an R row).
    pub fn has_zero_index(&self) -> bool {
        self.g0() != 0
    }

    /// Elements in index order: `g0` first when it is nonzero, then the lines.
    pub fn indexed_elements(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.lines.len() + 1);
        if self.has_zero_index() {
            out.push(self.g0());
        }
        out.extend(self.lines.iter().map(|l| l.element));
        out
    }

    pub fn side_elements(&self, side: Side) -> Vec<u32> {
        self.lines.iter().filter(|l| l.side == side).map(|l| l.element).collect()
    }

    pub fn side_has_dup(&self, side: Side) -> bool {
        match (self.dup, side) {
            (DupPattern::None, _) => false,
            (DupPattern::FirstPair, s) => s == Side::First || !self.is_double_crossing(),
            (DupPattern::BothPairs, _) => true,
        }
    }

    /// `H`, the span of all elements, as its rank.
    pub fn h_rank(&self) -> u32 {
        rank(&self.indexed_elements())
    }

    pub fn h_order(&self) -> u64 {
        1 << self.h_rank()
    }

    /// The table a configuration of this shape is listed in.
    pub fn table_id(&self) -> u8 {
        let offset = match self.dup {
            DupPattern::None => 0,
            DupPattern::FirstPair => 1,
            DupPattern::BothPairs => 2,
        };
        match self.base {
            Base::Smooth => 1 + offset,
            Base::DoubleCrossing { g0: 0 } => 4 + offset,
            Base::DoubleCrossing { .. } => 7 + offset,
        }
    }
}

/// Rank over `F_2` of a list of bitmasks.
pub fn rank(vectors: &[u32]) -> u32 {
    let mut basis: Vec<u32> = Vec::new();
    for &v in vectors {
        let reduced = basis.iter().fold(v, |acc, &b| acc.min(acc ^ b));
        if reduced != 0 {
            basis.push(reduced);
        }
    }
    basis.len() as u32
}

/// Bitmask to coordinate vector in `(Z_2)^r`.
pub fn to_element(r: usize, mask: u32) -> GroupElement {
    GroupElement((0..r).map(|j| (mask >> j) & 1).collect())
}

impl fmt::Display for LocalConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: u32| -> String { (0..self.r).map(|j| if g >> j & 1 == 1 { '1' } else { '0' }).collect() };
        match self.base {
            Base::Smooth => write!(f, "smooth")?,
            Base::DoubleCrossing { g0 } => write!(f, "d.c. g0={}", show(g0))?,
        }
        write!(f, " lines=[")?;
        for (i, l) in self.lines.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let tag = if self.is_double_crossing() && l.side == Side::Second { "'" } else { "" };
            write!(f, "{}{tag}", show(l.element))?;
        }
        write!(f, "] dup={:?}", self.dup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_f2() {
        assert_eq!(rank(&[0b01, 0b10, 0b11]), 2);
        assert_eq!(rank(&[0, 0]), 0);
        assert_eq!(rank(&[0b100, 0b110, 0b011, 0b001]), 3);
    }

    #[test]
    fn smooth_rejects_bad_input() {
        assert!(LocalConfig::smooth(2, vec![1, 2, 3, 1, 2], DupPattern::None).is_err());
        assert!(LocalConfig::smooth(2, vec![0], DupPattern::None).is_err());
        assert!(LocalConfig::smooth(2, vec![4], DupPattern::None).is_err());
        assert!(LocalConfig::smooth(2, vec![1], DupPattern::FirstPair).is_err());
        assert!(LocalConfig::smooth(2, vec![1, 2, 3], DupPattern::BothPairs).is_err());
    }

    #[test]
    fn double_crossing_balance_and_congruence() {
        assert!(LocalConfig::double_crossing(2, 0, vec![1], vec![], false, false).is_err());
        assert!(LocalConfig::double_crossing(2, 0, vec![1], vec![2], false, false).is_err());
        assert!(LocalConfig::double_crossing(2, 3, vec![1], vec![2], false, false).is_ok());
        assert!(LocalConfig::double_crossing(2, 0, vec![2, 2], vec![3, 3], false, false).is_ok());
    }

    #[test]
    fn second_side_duplicate_moves_first() {
        let c = LocalConfig::double_crossing(2, 0, vec![1, 1], vec![3, 3], false, true).unwrap();
        assert_eq!(c.dup(), DupPattern::FirstPair);
        assert_eq!(c.side_elements(Side::First), vec![3, 3]);
        assert_eq!(c.table_id(), 5);
    }

    #[test]
    fn indexed_elements_include_g0_only_when_branched() {
        let e = LocalConfig::double_crossing(2, 0, vec![1], vec![1], false, false).unwrap();
        assert_eq!(e.indexed_elements(), vec![1, 1]);
        let r = LocalConfig::double_crossing(2, 2, vec![1], vec![3], false, false).unwrap();
        assert_eq!(r.indexed_elements(), vec![2, 1, 3]);
        assert_eq!(r.table_id(), 7);
        assert_eq!(r.h_order(), 4);
    }
}
