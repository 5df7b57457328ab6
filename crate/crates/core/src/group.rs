//! Finite abelian groups `Z_{n_1} x ... x Z_{n_s}`, their characters and the
//! bookkeeping attached to cyclic pairs `(H, psi)`.
//!
//! Characters take values in `Q/Z`, represented exactly by [`Residue`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on any explicit enumeration of group elements.
pub const MAX_ENUMERATION: u64 = 1 << 16;

/// A group element as its coordinate vector, each entry reduced mod `n_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u32>);

/// A character `x -> sum_j c_j x_j / n_j`, stored as its coefficients `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<u32>);

impl GroupElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi")?;
        write_coords(f, &self.0)
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// An element of `Q/Z` as a reduced fraction `num/den` with `0 <= num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    num: u64,
    den: u64,
}

impl Residue {
    pub const ZERO: Residue = Residue { num: 0, den: 1 };

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "residue with zero denominator");
        let num = num % den;
        let g = num.gcd(&den);
        Residue { num: num / g, den: den / g }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;

    fn add(self, other: Residue) -> Residue {
        let den = self.den.lcm(&other.den);
        Residue::new(self.num * (den / self.den) + other.num * (den / other.den), den)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `Z_{n_1} x ... x Z_{n_s}` with every `n_j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

impl TryFrom<Vec<u32>> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(orders: Vec<u32>) -> Result<Self> {
        FiniteAbelianGroup::new(orders)
    }
}

impl From<FiniteAbelianGroup> for Vec<u32> {
    fn from(g: FiniteAbelianGroup) -> Self {
        g.orders
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {bad}")));
        }
        let mut total: u64 = 1;
        for &n in &orders {
            total = total.saturating_mul(n as u64);
        }
        if total > MAX_ENUMERATION {
            return Err(Error::TooLarge { limit: MAX_ENUMERATION });
        }
        Ok(FiniteAbelianGroup { orders })
    }

    /// `(Z_2)^r`.
    pub fn z2r(r: usize) -> Self {
        FiniteAbelianGroup::new(vec![2; r]).expect("2^r within enumeration cap")
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&n| n as u64).product()
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u32, |acc, &n| acc.lcm(&n))
    }

    pub fn is_elementary_2(&self) -> bool {
        self.orders.iter().all(|&n| n == 2)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn trivial_character(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        self.check_coords(&g.0)
    }

    pub fn check_character(&self, chi: &Character) -> Result<()> {
        self.check_coords(&chi.0)
    }

    fn check_coords(&self, coords: &[u32]) -> Result<()> {
        if coords.len() != self.rank() {
            return Err(Error::Shape { expected: self.rank(), got: coords.len() });
        }
        for (&c, &n) in coords.iter().zip(&self.orders) {
            if c >= n {
                return Err(Error::Input(format!("coordinate {c} out of range for Z_{n}")));
            }
        }
        Ok(())
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Shape { expected: self.rank(), got: coords.len() });
        }
        Ok(GroupElement(coords.iter().zip(&self.orders).map(|(&c, &n)| c.rem_euclid(n as i64) as u32).collect()))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).zip(&self.orders).map(|((&x, &y), &n)| (x + y) % n).collect())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(&x, &n)| (n - x) % n).collect())
    }

    pub fn scale(&self, a: &GroupElement, k: u64) -> GroupElement {
        GroupElement(
            a.0.iter().zip(&self.orders).map(|(&x, &n)| ((x as u64 * (k % n as u64)) % n as u64) as u32).collect(),
        )
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        items.into_iter().fold(self.zero(), |acc, g| self.add(&acc, g))
    }

    pub fn element_order(&self, a: &GroupElement) -> u32 {
        a.0.iter().zip(&self.orders).fold(1u32, |acc, (&x, &n)| acc.lcm(&(n / x.gcd(&n))))
    }

    /// All elements in mixed-radix order, first coordinate fastest.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        MixedRadix::new(&self.orders).map(GroupElement)
    }

    /// All characters in mixed-radix order; the first is trivial.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        MixedRadix::new(&self.orders).map(Character)
    }

    pub fn eval(&self, chi: &Character, g: &GroupElement) -> Residue {
        let den = self.exponent() as u64;
        let mut num = 0u64;
        for ((&c, &x), &n) in chi.0.iter().zip(&g.0).zip(&self.orders) {
            num += (c as u64 * x as u64 % n as u64) * (den / n as u64);
        }
        Residue::new(num, den)
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Character {
        Character(a.0.iter().zip(&b.0).zip(&self.orders).map(|((&x, &y), &n)| (x + y) % n).collect())
    }

    pub fn char_inverse(&self, a: &Character) -> Character {
        Character(a.0.iter().zip(&self.orders).map(|(&x, &n)| (n - x) % n).collect())
    }

    /// Characters vanishing on every element of `gens`.
    pub fn annihilator<'a>(&'a self, gens: &'a [GroupElement]) -> impl Iterator<Item = Character> + 'a {
        self.characters().filter(move |chi| gens.iter().all(|g| self.eval(chi, g).is_zero()))
    }
}

struct MixedRadix {
    radices: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl MixedRadix {
    fn new(radices: &[u32]) -> Self {
        MixedRadix { radices: radices.to_vec(), next: Some(vec![0; radices.len()]) }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for (digit, &radix) in succ.iter_mut().zip(&self.radices) {
            *digit += 1;
            if *digit < radix {
                carried = false;
                break;
            }
            *digit = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// A cyclic subgroup `H = <h>` of order `m >= 2` with a generator `psi` of
/// its dual, given by `psi(h) = a/m` where `gcd(a, m) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPair {
    generator: GroupElement,
    order: u32,
    psi_exponent: u32,
}

impl CyclicPair {
    pub fn new(group: &FiniteAbelianGroup, generator: GroupElement, psi_exponent: u32) -> Result<Self> {
        group.check(&generator)?;
        let order = group.element_order(&generator);
        if order < 2 {
            return Err(Error::InvalidPair("generator is the identity".into()));
        }
        let a = psi_exponent % order;
        if a.gcd(&order) != 1 {
            return Err(Error::InvalidPair(format!(
                "psi(h) = {psi_exponent}/{order} does not generate the dual of <h>"
            )));
        }
        Ok(CyclicPair { generator, order, psi_exponent: a })
    }

    /// The pair `(<h>, psi)` with `psi(h) = 1/m`.
    pub fn standard(group: &FiniteAbelianGroup, generator: GroupElement) -> Result<Self> {
        CyclicPair::new(group, generator, 1)
    }

    pub fn generator(&self) -> &GroupElement {
        &self.generator
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn psi_exponent(&self) -> u32 {
        self.psi_exponent
    }
}

/// The unique `a in [0, m)` with `chi|_H = psi^a`.
pub fn character_exponent(group: &FiniteAbelianGroup, chi: &Character, pair: &CyclicPair) -> Result<u32> {
    let m = pair.order as u64;
    let target = group.eval(chi, &pair.generator);
    (0..pair.order)
        .find(|&a| Residue::new(a as u64 * pair.psi_exponent as u64, m) == target)
        .ok_or_else(|| Error::InternalConsistency("character does not restrict to a power of psi".into()))
}

/// `epsilon_{chi, chi'} = floor((a_chi + a_chi') / m)`, either 0 or 1.
pub fn epsilon(group: &FiniteAbelianGroup, chi: &Character, chi2: &Character, pair: &CyclicPair) -> Result<u32> {
    let a = character_exponent(group, chi, pair)?;
    let b = character_exponent(group, chi2, pair)?;
    Ok((a + b) / pair.order)
}

/// An explicitly enumerated subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    generators: Vec<GroupElement>,
    elements: BTreeSet<GroupElement>,
}

impl Subgroup {
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &BTreeSet<GroupElement> {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }
}

/// Closure of `gens` under addition.
pub fn subgroup_generated(group: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Subgroup> {
    for g in gens {
        group.check(g)?;
    }
    let mut elements = BTreeSet::from([group.zero()]);
    let mut queue = VecDeque::from([group.zero()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = group.add(&x, g);
            if elements.insert(y.clone()) {
                if elements.len() as u64 > MAX_ENUMERATION {
                    return Err(Error::TooLarge { limit: MAX_ENUMERATION });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(Subgroup { generators: gens.to_vec(), elements })
}

/// The surjection-onto-image `Gbar = (+)_i H_i -> G`, `x -> sum_i x_i h_i`,
/// with its kernel `N` enumerated.
#[derive(Clone, Debug)]
pub struct ComponentSumHom {
    pairs: Vec<CyclicPair>,
    kernel: Vec<Vec<u32>>,
    image_order: u64,
}

impl ComponentSumHom {
    pub fn pairs(&self) -> &[CyclicPair] {
        &self.pairs
    }

    /// Kernel elements as coordinate vectors `x_i in [0, m_i)`.
    pub fn kernel(&self) -> &[Vec<u32>] {
        &self.kernel
    }

    pub fn image_order(&self) -> u64 {
        self.image_order
    }

    pub fn source_order(&self) -> u64 {
        self.pairs.iter().map(|p| p.order as u64).product()
    }
}

pub fn component_sum_hom(group: &FiniteAbelianGroup, pairs: &[CyclicPair]) -> Result<ComponentSumHom> {
    let radices: Vec<u32> = pairs.iter().map(|p| p.order).collect();
    let source: u64 = radices.iter().map(|&m| m as u64).product();
    if source > MAX_ENUMERATION {
        return Err(Error::TooLarge { limit: MAX_ENUMERATION });
    }
    let mut kernel = Vec::new();
    let mut image = BTreeSet::new();
    for x in MixedRadix::new(&radices) {
        let mut value = group.zero();
        for (&xi, pair) in x.iter().zip(pairs) {
            value = group.add(&value, &group.scale(&pair.generator, xi as u64));
        }
        if value.is_zero() {
            kernel.push(x);
        }
        image.insert(value);
    }
    Ok(ComponentSumHom { pairs: pairs.to_vec(), kernel, image_order: image.len() as u64 })
}

/// `|N / (N ∩ ker chibar)|` where `chibar(x) = sum_{i in mask} x_i a_i / m_i`.
///
/// Indices in `mask` are 0-based positions in `hom.pairs()`. The value is 1
/// exactly when `chibar` restricted to the kernel is trivial.
pub fn residual_index(hom: &ComponentSumHom, mask: &BTreeSet<usize>) -> u64 {
    let mut values = BTreeSet::new();
    for x in &hom.kernel {
        let mut acc = Residue::ZERO;
        for &i in mask {
            let pair = &hom.pairs[i];
            acc = acc + Residue::new(x[i] as u64 * pair.psi_exponent as u64, pair.order as u64);
        }
        values.insert(acc);
    }
    values.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(r: usize) -> FiniteAbelianGroup {
        FiniteAbelianGroup::z2r(r)
    }

    fn el(v: &[u32]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    #[test]
    fn rejects_degenerate_factors() {
        assert!(FiniteAbelianGroup::new(vec![2, 1]).is_err());
        assert!(FiniteAbelianGroup::new(vec![0]).is_err());
        assert!(FiniteAbelianGroup::new(vec![]).is_ok());
    }

    #[test]
    fn element_shape_checked() {
        let g = z2(2);
        assert_eq!(g.check(&el(&[1])), Err(Error::Shape { expected: 2, got: 1 }));
        assert!(g.check(&el(&[2, 0])).is_err());
    }

    #[test]
    fn z2_squared_basis_subgroups() {
        let g = z2(2);
        let h = subgroup_generated(&g, &[el(&[1, 0]), el(&[0, 1])]).unwrap();
        assert_eq!(h.order(), 4);
        let d = subgroup_generated(&g, &[el(&[1, 1])]).unwrap();
        assert_eq!(d.order(), 2);
        assert!(d.is_subgroup_of(&h));
    }

    #[test]
    fn closure_respects_cap() {
        let g = FiniteAbelianGroup::new(vec![256, 256]).unwrap();
        assert_eq!(subgroup_generated(&g, &[el(&[1, 0]), el(&[0, 1])]).unwrap().order(), 65536);
        assert!(FiniteAbelianGroup::new(vec![256, 257]).is_err());
    }

    #[test]
    fn z4_exponent_of_generator_character() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let pair = CyclicPair::new(&g, el(&[1]), 1).unwrap();
        assert_eq!(character_exponent(&g, &Character(vec![1]), &pair).unwrap(), 1);
        assert_eq!(character_exponent(&g, &Character(vec![3]), &pair).unwrap(), 3);
    }

    #[test]
    fn z4_epsilon_values() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let pair = CyclicPair::new(&g, el(&[1]), 1).unwrap();
        let c = |k| Character(vec![k]);
        assert_eq!(epsilon(&g, &c(1), &c(1), &pair).unwrap(), 0);
        assert_eq!(epsilon(&g, &c(2), &c(3), &pair).unwrap(), 1);
        assert_eq!(epsilon(&g, &c(0), &c(3), &pair).unwrap(), 0);
    }

    #[test]
    fn nonunit_psi_rejected() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        assert!(matches!(CyclicPair::new(&g, el(&[1]), 2), Err(Error::InvalidPair(_))));
        assert!(matches!(CyclicPair::new(&g, el(&[0]), 1), Err(Error::InvalidPair(_))));
        assert_eq!(CyclicPair::new(&g, el(&[2]), 1).unwrap().order(), 2);
    }

    #[test]
    fn pairs_summing_to_zero_have_nonpullback_character() {
        let g = z2(2);
        let a = CyclicPair::standard(&g, el(&[1, 0])).unwrap();
        let b = CyclicPair::standard(&g, el(&[0, 1])).unwrap();
        let c = CyclicPair::standard(&g, el(&[1, 1])).unwrap();
        let hom = component_sum_hom(&g, &[a, b, c]).unwrap();
        assert_eq!(hom.kernel().len(), 2);
        assert_eq!(hom.image_order(), 4);
        assert_eq!(residual_index(&hom, &BTreeSet::from([0, 1, 2])), 2);
        assert_eq!(residual_index(&hom, &BTreeSet::new()), 1);
    }

    #[test]
    fn independent_pairs_trivial_kernel() {
        let g = z2(2);
        let a = CyclicPair::standard(&g, el(&[1, 0])).unwrap();
        let b = CyclicPair::standard(&g, el(&[0, 1])).unwrap();
        let hom = component_sum_hom(&g, &[a, b]).unwrap();
        assert_eq!(hom.kernel(), &[vec![0, 0]]);
        assert_eq!(residual_index(&hom, &BTreeSet::from([0, 1])), 1);
    }

    #[test]
    fn residue_arithmetic() {
        assert_eq!(Residue::new(3, 6), Residue::new(1, 2));
        assert_eq!(Residue::new(1, 2) + Residue::new(1, 2), Residue::ZERO);
        assert_eq!(Residue::new(1, 3) + Residue::new(1, 6), Residue::new(1, 2));
        assert_eq!(Residue::new(7, 4).to_string(), "3/4");
    }

    #[test]
    fn characters_enumerate_dual() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.characters().count(), 6);
        assert!(g.characters().next().unwrap().is_trivial());
        let h = [el(&[1, 0])];
        assert_eq!(g.annihilator(&h).count(), 3);
    }
}
