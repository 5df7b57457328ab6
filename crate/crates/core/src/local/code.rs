//! Relation codes: the subsets of indices whose elements sum to zero, and
//! their normal forms under the symmetries of each table.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::local::config::{DupPattern, LocalConfig};

/// The kernel of `F_2^n -> (Z_2)^r`, `e_i -> g_i`, as the set of its words.
///
/// Positions are indices into [`LocalConfig::indexed_elements`]; when
/// `zero_index` is set, position 0 is the double-curve element and position
/// `i` is line `i`, otherwise position `i - 1` is line `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationCode {
    n: usize,
    zero_index: bool,
    words: Vec<u32>,
}

impl RelationCode {
    pub fn of(cfg: &LocalConfig) -> Self {
        let elems = cfg.indexed_elements();
        let n = elems.len();
        let words = (0u32..1 << n)
            .filter(|&w| (0..n).filter(|&i| w >> i & 1 == 1).fold(0, |acc, i| acc ^ elems[i]) == 0)
            .collect();
        RelationCode { n, zero_index: cfg.has_zero_index(), words }
    }

    /// The span of printed relation words such as `"12 134 01"`.
    pub fn parse(relations: &str, n: usize, zero_index: bool) -> Result<Self> {
        let mut gens = Vec::new();
        for word in relations.split(|c: char| c.is_whitespace() || c == ',').filter(|w| !w.is_empty()) {
            if word == "none" {
                continue;
            }
            let mut mask = 0u32;
            for ch in word.chars() {
                let pos = position_of(ch, n, zero_index)
                    .ok_or_else(|| Error::InvalidConfig(format!("bad index `{ch}` in relation `{word}`")))?;
                mask ^= 1 << pos;
            }
            gens.push(mask);
        }
        Ok(RelationCode { n, zero_index, words: span(&gens) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero_index(&self) -> bool {
        self.zero_index
    }

    /// All words, sorted, including the empty word.
    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn dim(&self) -> u32 {
        self.words.len().trailing_zeros()
    }

    pub fn contains(&self, word: u32) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    pub fn label(&self, pos: usize) -> char {
        let digit = if self.zero_index { pos } else { pos + 1 };
        char::from_digit(digit as u32, 10).expect("at most five indices")
    }

    pub fn word_label(&self, word: u32) -> String {
        (0..self.n).filter(|&i| word >> i & 1 == 1).map(|i| self.label(i)).collect()
    }

    /// A short basis in print style, lightest words first.
    pub fn basis_label(&self) -> String {
        let mut candidates: Vec<u32> = self.words.iter().copied().filter(|&w| w != 0).collect();
        candidates.sort_by_key(|&w| (w.count_ones(), self.word_label(w)));
        let mut chosen: Vec<u32> = Vec::new();
        let mut spanned = vec![0u32];
        for w in candidates {
            if !spanned.contains(&w) {
                chosen.push(w);
                spanned = span(&chosen);
            }
        }
        if chosen.is_empty() {
            return "none".into();
        }
        chosen.iter().map(|&w| self.word_label(w)).collect::<Vec<_>>().join(" ")
    }

    /// Elements realizing the code: the columns of a basis of its dual.
    /// Returns the rank `r` and one element per position.
    pub fn realize(&self) -> (usize, Vec<u32>) {
        let mut basis: Vec<u32> = Vec::new();
        let mut spanned = vec![0u32];
        for f in 0u32..1 << self.n {
            if self.words.iter().all(|&w| (f & w).count_ones() % 2 == 0) && !spanned.contains(&f) {
                basis.push(f);
                spanned = span(&basis);
            }
        }
        let elems = (0..self.n)
            .map(|i| basis.iter().enumerate().fold(0u32, |acc, (j, &f)| acc | ((f >> i & 1) << j)))
            .collect();
        (basis.len(), elems)
    }

    fn permuted(&self, perm: &[usize]) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .words
            .iter()
            .map(|&w| (0..self.n).filter(|&i| w >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << perm[i]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Lexicographically least image of the word list under `perms`.
    pub fn canonical(&self, perms: &[Vec<usize>]) -> Vec<u32> {
        perms.iter().map(|p| self.permuted(p)).min().unwrap_or_else(|| self.words.clone())
    }
}

fn position_of(ch: char, n: usize, zero_index: bool) -> Option<usize> {
    let d = ch.to_digit(10)? as usize;
    let pos = if zero_index { d } else { d.checked_sub(1)? };
    (pos < n).then_some(pos)
}

/// All sums of subsets of `gens`, sorted.
pub fn span(gens: &[u32]) -> Vec<u32> {
    let mut set = BTreeSet::from([0u32]);
    for &g in gens {
        let shifted: Vec<u32> = set.iter().map(|&s| s ^ g).collect();
        set.extend(shifted);
    }
    set.into_iter().collect()
}

/// The symmetry group of a table shape, acting on positions.
///
/// Smooth base: all permutations of distinct curves, with the coincident
/// pairs kept together. Two-sided base: swaps within each side and, when the
/// sides have the same shape, the exchange of sides. The double-curve index
/// is never moved.
pub fn symmetry_group(table: u8, k: usize) -> Vec<Vec<usize>> {
    let zero = table >= 7;
    let n = k + usize::from(zero);
    let pos = |line: usize| if zero { line } else { line - 1 };
    let transposition = |a: usize, b: usize| -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(pos(a), pos(b));
        p
    };
    let mut gens: Vec<Vec<usize>> = Vec::new();
    match table {
        1 => {
            for a in 1..k {
                gens.push(transposition(a, a + 1));
            }
        }
        2 => {
            gens.push(transposition(1, 2));
            for a in 3..k {
                gens.push(transposition(a, a + 1));
            }
        }
        3 | 6 | 9 | 4 | 7 => {
            if k == 2 {
                gens.push(transposition(1, 2));
            }
            if k == 4 {
                gens.push(transposition(1, 2));
                gens.push(transposition(3, 4));
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(pos(1), pos(3));
                p.swap(pos(2), pos(4));
                gens.push(p);
            }
        }
        5 | 8 => {
            gens.push(transposition(1, 2));
            gens.push(transposition(3, 4));
        }
        _ => {}
    }
    closure(n, &gens)
}

fn closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<usize> = (0..n).map(|i| g[p[i]]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

/// The duplication pattern belonging to a table.
pub fn table_dup(table: u8) -> DupPattern {
    match table {
        2 | 5 | 8 => DupPattern::FirstPair,
        3 | 6 | 9 => DupPattern::BothPairs,
        _ => DupPattern::None,
    }
}

/// Builds the configuration of a table shape realizing `code`.
pub fn config_from_code(table: u8, k: usize, code: &RelationCode) -> Result<LocalConfig> {
    let (r, elems) = code.realize();
    let dup = table_dup(table);
    if table <= 3 {
        return LocalConfig::smooth(r, elems, dup);
    }
    let (g0, lines) = if code.zero_index() { (elems[0], &elems[1..]) } else { (0, &elems[..]) };
    if lines.len() != k {
        return Err(Error::InvalidConfig(format!("code has {} line positions, shape needs {k}", lines.len())));
    }
    let h = k / 2;
    LocalConfig::double_crossing(
        r,
        g0,
        lines[..h].to_vec(),
        lines[h..].to_vec(),
        dup != DupPattern::None,
        dup == DupPattern::BothPairs,
    )
}
