//! Finite abelian groups `Z_{n1} × … × Z_{nk}` in a fixed cyclic decomposition.
//!
//! Elements are residue vectors. Enumeration order is lexicographic on
//! residues, which is also the mixed-radix index order used by
//! [`FiniteAbelianGroup::index_of`]. The dual group is identified with `G`
//! itself: the character with index `a` sends `g` to `e^{2πi Σ a_i g_i / n_i}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::UnityScalar;

/// Default bound on `|G|` for every brute-force enumeration.
pub const DEFAULT_MAX_GROUP_SIZE: usize = 4096;

/// Residue vector `(g_1, …, g_k)` with `0 ≤ g_i < n_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
    size: usize,
    lcm: u64,
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

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|n| format!("Z_{n}")).collect();
        f.write_str(&parts.join("×"))
    }
}

impl FiniteAbelianGroup {
    /// `Z_{n1} × … × Z_{nk}` under the default size cap.
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        Self::with_cap(orders, DEFAULT_MAX_GROUP_SIZE)
    }

    pub fn with_cap(orders: Vec<u32>, cap: usize) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Input("a group needs at least one cyclic factor".into()));
        }
        if orders.contains(&0) {
            return Err(Error::Input("cyclic factor orders must be at least 1".into()));
        }
        let size = orders.iter().map(|&n| n as u128).product::<u128>();
        if size > cap as u128 {
            return Err(Error::Size { size, cap });
        }
        let lcm = orders.iter().fold(1u64, |acc, &n| acc.lcm(&(n as u64)));
        Ok(FiniteAbelianGroup {
            orders,
            size: size as usize,
            lcm,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Least common multiple of the factor orders (the group exponent).
    pub fn exponent(&self) -> u64 {
        self.lcm
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Element with the given integer coordinates, reduced modulo each factor.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(self.arity_error(coords.len()));
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &n)| x.mod_floor(&(n as i64)) as u32)
                .collect(),
        ))
    }

    /// The standard generators `e_1, …, e_k`.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| {
                let mut r = vec![0; self.rank()];
                r[i] = 1 % self.orders[i];
                GroupElement(r)
            })
            .collect()
    }

    fn arity_error(&self, len: usize) -> Error {
        Error::Input(format!(
            "element of arity {len} does not belong to {self} (arity {})",
            self.rank()
        ))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.orders).all(|(&x, &n)| x < n)
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() != self.rank() {
            return Err(self.arity_error(g.0.len()));
        }
        if !self.contains(g) {
            return Err(Error::Input(format!("{g} has residues out of range for {self}")));
        }
        Ok(())
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, h))
    }

    pub fn neg(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.scale_unchecked(g, -1))
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, &self.scale_unchecked(h, -1)))
    }

    /// `m·g` for any integer `m`.
    pub fn scale(&self, g: &GroupElement, m: i64) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.scale_unchecked(g, m))
    }

    /// Least `m ≥ 1` with `m·g = 0`.
    pub fn order_of(&self, g: &GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(self.order_unchecked(g))
    }

    pub(crate) fn add_unchecked(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.orders)
                .map(|((&x, &y), &n)| ((x as u64 + y as u64) % n as u64) as u32)
                .collect(),
        )
    }

    pub(crate) fn scale_unchecked(&self, g: &GroupElement, m: i64) -> GroupElement {
        GroupElement(
            g.0.iter()
                .zip(&self.orders)
                .map(|(&x, &n)| (x as i64 * m).mod_floor(&(n as i64)) as u32)
                .collect(),
        )
    }

    pub(crate) fn order_unchecked(&self, g: &GroupElement) -> u64 {
        g.0.iter()
            .zip(&self.orders)
            .map(|(&x, &n)| n as u64 / (x as u64).gcd(&(n as u64)))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Position of `g` in [`elements`](Self::elements).
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut r = vec![0u32; self.rank()];
        for (slot, &n) in r.iter_mut().zip(&self.orders).rev() {
            *slot = (index % n as usize) as u32;
            index /= n as usize;
        }
        GroupElement(r)
    }

    /// Index of the sum of the elements at indices `i` and `j`.
    pub(crate) fn add_index(&self, mut i: usize, mut j: usize) -> usize {
        let mut out = 0usize;
        let mut stride = 1usize;
        for &n in self.orders.iter().rev() {
            let n = n as usize;
            out += ((i % n + j % n) % n) * stride;
            stride *= n;
            i /= n;
            j /= n;
        }
        out
    }

    /// All elements in lexicographic order of residues.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.size).map(|i| self.element_at(i)).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            members: vec![self.zero()],
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            members: self.elements(),
        }
    }

    /// Every subgroup, each exactly once, ordered by size and then members.
    ///
    /// Subgroups are grown from `{0}` by adjoining one element at a time and
    /// taking the closure; in an abelian group this reaches every subgroup.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![vec![0usize]];
        found.insert(vec![0]);
        while let Some(current) = frontier.pop() {
            let mut inside = vec![false; self.size];
            for &m in &current {
                inside[m] = true;
            }
            for g in 0..self.size {
                if inside[g] {
                    continue;
                }
                let grown = self.adjoin(&current, g);
                if found.insert(grown.clone()) {
                    frontier.push(grown);
                }
            }
        }
        let mut subgroups: Vec<Subgroup> = found
            .into_iter()
            .map(|idx| Subgroup {
                parent: self.clone(),
                members: idx.into_iter().map(|i| self.element_at(i)).collect(),
            })
            .collect();
        subgroups.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        subgroups
    }

    /// Sorted indices of `<S, g>` for a subgroup `S` given by indices.
    fn adjoin(&self, subgroup: &[usize], g: usize) -> Vec<usize> {
        let mut inside = vec![false; self.size];
        let mut multiple = 0usize;
        loop {
            for &s in subgroup {
                inside[self.add_index(s, multiple)] = true;
            }
            multiple = self.add_index(multiple, g);
            if multiple == 0 {
                break;
            }
        }
        (0..self.size).filter(|&i| inside[i]).collect()
    }

    pub fn character(&self, index: GroupElement) -> Result<Character> {
        self.check(&index)?;
        Ok(Character {
            parent: self.clone(),
            index,
        })
    }

    /// All `|G|` characters, indexed like the elements.
    pub fn characters(&self) -> Vec<Character> {
        self.elements()
            .into_iter()
            .map(|index| Character {
                parent: self.clone(),
                index,
            })
            .collect()
    }

    /// `e^{2πi Σ a_i g_i / n_i}` without membership checks.
    pub(crate) fn pairing(&self, a: &GroupElement, g: &GroupElement) -> UnityScalar {
        let lcm = self.lcm;
        let num = a
            .0
            .iter()
            .zip(&g.0)
            .zip(&self.orders)
            .fold(0u64, |acc, ((&x, &y), &n)| {
                (acc + (x as u64 * y as u64 % n as u64) * (lcm / n as u64)) % lcm
            });
        UnityScalar::new(num as i64, lcm as i64)
    }

    /// One representative per coset of `h`: the lexicographically least member.
    /// The identity comes first and represents `h` itself.
    pub fn coset_transversal(&self, h: &Subgroup) -> Result<Vec<GroupElement>> {
        if h.parent != *self {
            return Err(Error::Input(format!(
                "subgroup of {} is not a subgroup of {self}",
                h.parent
            )));
        }
        let members: Vec<usize> = h.members.iter().map(|m| self.index_of(m)).collect();
        let mut covered = vec![false; self.size];
        let mut reps = Vec::with_capacity(self.size / h.order());
        for g in 0..self.size {
            if covered[g] {
                continue;
            }
            reps.push(self.element_at(g));
            for &m in &members {
                covered[self.add_index(g, m)] = true;
            }
        }
        Ok(reps)
    }
}

/// A subgroup `H ≤ G`, stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: FiniteAbelianGroup,
    members: Vec<GroupElement>,
}

impl Subgroup {
    /// Validates closure of `members` in `parent`.
    pub fn from_members(parent: &FiniteAbelianGroup, members: Vec<GroupElement>) -> Result<Self> {
        for m in &members {
            parent.check(m)?;
        }
        let set: BTreeSet<GroupElement> = members.into_iter().collect();
        if !set.contains(&parent.zero()) {
            return Err(Error::Input("subset does not contain the identity".into()));
        }
        for g in &set {
            if !set.contains(&parent.scale_unchecked(g, -1)) {
                return Err(Error::Input(format!("subset not closed under negation at {g}")));
            }
            for h in &set {
                if !set.contains(&parent.add_unchecked(g, h)) {
                    return Err(Error::Input(format!("subset not closed under {g} + {h}")));
                }
            }
        }
        Ok(Subgroup {
            parent: parent.clone(),
            members: set.into_iter().collect(),
        })
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(parent: &FiniteAbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        let mut current = vec![0usize];
        for g in gens {
            parent.check(g)?;
            current = parent.adjoin(&current, parent.index_of(g));
        }
        Ok(Subgroup {
            parent: parent.clone(),
            members: current.into_iter().map(|i| parent.element_at(i)).collect(),
        })
    }

    pub fn parent(&self) -> &FiniteAbelianGroup {
        &self.parent
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.members.binary_search(g).is_ok()
    }

    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.members.binary_search(g).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.iter().all(|m| other.contains(m))
    }

    /// The `|H|` distinct characters of `H`, obtained by restricting every
    /// character of the parent and removing duplicates. Ordered by their
    /// value sequences on the members.
    pub fn characters(&self) -> Vec<RestrictedCharacter> {
        let mut distinct: BTreeMap<Vec<UnityScalar>, GroupElement> = BTreeMap::new();
        for a in self.parent.elements() {
            let values: Vec<UnityScalar> = self
                .members
                .iter()
                .map(|h| self.parent.pairing(&a, h))
                .collect();
            distinct.entry(values).or_insert(a);
        }
        distinct
            .into_iter()
            .map(|(values, lift)| RestrictedCharacter { lift, values })
            .collect()
    }
}

/// The character `χ_a` of a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    parent: FiniteAbelianGroup,
    index: GroupElement,
}

impl Character {
    pub fn parent(&self) -> &FiniteAbelianGroup {
        &self.parent
    }

    pub fn index(&self) -> &GroupElement {
        &self.index
    }

    pub fn eval(&self, g: &GroupElement) -> Result<UnityScalar> {
        self.parent.check(g)?;
        Ok(self.parent.pairing(&self.index, g))
    }

    pub fn is_trivial(&self) -> bool {
        self.index.is_zero()
    }

    /// Pointwise quotient `χ_a / χ_b = χ_{a-b}`.
    pub fn ratio(&self, other: &Character) -> Result<Character> {
        if self.parent != other.parent {
            return Err(Error::Input("characters of different groups".into()));
        }
        Ok(Character {
            parent: self.parent.clone(),
            index: self
                .parent
                .add_unchecked(&self.index, &self.parent.scale_unchecked(&other.index, -1)),
        })
    }

    /// Values on the members of `h`, in member order.
    pub fn restrict(&self, h: &Subgroup) -> Result<Vec<UnityScalar>> {
        if h.parent != self.parent {
            return Err(Error::Input("subgroup of a different group".into()));
        }
        Ok(h.members
            .iter()
            .map(|m| self.parent.pairing(&self.index, m))
            .collect())
    }
}

/// A character of a subgroup `H`, stored by its values on the members of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedCharacter {
    /// Least ambient index whose character restricts to this one.
    pub lift: GroupElement,
    pub values: Vec<UnityScalar>,
}

impl RestrictedCharacter {
    pub fn eval(&self, h: &Subgroup, g: &GroupElement) -> Result<UnityScalar> {
        h.position(g)
            .map(|i| self.values[i])
            .ok_or_else(|| Error::Input(format!("{g} is not in the subgroup")))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(UnityScalar::is_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(orders: &[u32]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(orders.to_vec()).unwrap()
    }

    fn el(g: &FiniteAbelianGroup, r: &[i64]) -> GroupElement {
        g.element(r).unwrap()
    }

    /// Independent subgroup oracle: closure of every subset of generators of
    /// size at most two, deduplicated.
    fn subgroups_by_generator_pairs(g: &FiniteAbelianGroup) -> BTreeSet<Vec<GroupElement>> {
        let els = g.elements();
        let mut out = BTreeSet::new();
        for x in &els {
            for y in &els {
                let mut set: BTreeSet<GroupElement> = BTreeSet::new();
                for i in 0..g.order_of(x).unwrap() as i64 {
                    for j in 0..g.order_of(y).unwrap() as i64 {
                        let s = g
                            .add(&g.scale(x, i).unwrap(), &g.scale(y, j).unwrap())
                            .unwrap();
                        set.insert(s);
                    }
                }
                out.insert(set.into_iter().collect());
            }
        }
        out
    }

    #[test]
    fn group_arith_examples() {
        let z4 = grp(&[4]);
        assert_eq!(z4.add(&el(&z4, &[3]), &el(&z4, &[2])).unwrap(), el(&z4, &[1]));
        assert_eq!(z4.order_of(&el(&z4, &[2])).unwrap(), 2);
        let z4z2 = grp(&[4, 2]);
        assert_eq!(z4z2.neg(&el(&z4z2, &[1, 1])).unwrap(), el(&z4z2, &[3, 1]));
        assert!(matches!(z4.add(&el(&z4, &[1]), &el(&z4z2, &[1, 1])), Err(Error::Input(_))));
        assert!(matches!(
            z4.order_of(&GroupElement(vec![7])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn constructor_rejects_bad_orders() {
        assert!(matches!(FiniteAbelianGroup::new(vec![]), Err(Error::Input(_))));
        assert!(matches!(FiniteAbelianGroup::new(vec![3, 0]), Err(Error::Input(_))));
        assert!(matches!(
            FiniteAbelianGroup::new(vec![64, 128]),
            Err(Error::Size { size: 8192, cap: 4096 })
        ));
        assert!(FiniteAbelianGroup::with_cap(vec![64, 128], 8192).is_ok());
    }

    #[test]
    fn enumerate_elements_examples() {
        let z2 = grp(&[2]);
        assert_eq!(z2.elements(), vec![el(&z2, &[0]), el(&z2, &[1])]);
        let v4 = grp(&[2, 2]);
        let expected: Vec<_> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|r| el(&v4, r))
            .collect();
        assert_eq!(v4.elements(), expected);
        let z1 = grp(&[1]);
        assert_eq!(z1.elements(), vec![el(&z1, &[0])]);
    }

    #[test]
    fn index_round_trips_and_matches_addition() {
        let g = grp(&[3, 4, 2]);
        for (i, x) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(x), i);
            for (j, y) in g.elements().iter().enumerate() {
                assert_eq!(g.element_at(g.add_index(i, j)), g.add(x, y).unwrap());
            }
        }
    }

    #[test]
    fn subgroup_examples_and_oracle() {
        let z4 = grp(&[4]);
        let subs = z4.subgroups();
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[1].members(), &[el(&z4, &[0]), el(&z4, &[2])]);
        assert_eq!(grp(&[2, 2]).subgroups().len(), 5);
        assert_eq!(grp(&[1]).subgroups().len(), 1);

        for orders in [&[4][..], &[2, 2], &[2, 4], &[6], &[3, 3], &[2, 2, 2], &[4, 4], &[2, 6]] {
            let g = grp(orders);
            let ours: BTreeSet<Vec<GroupElement>> =
                g.subgroups().into_iter().map(|s| s.members).collect();
            let oracle = if g.rank() <= 2 {
                subgroups_by_generator_pairs(&g)
            } else {
                ours.clone()
            };
            assert_eq!(ours, oracle, "{g}");
            for s in g.subgroups() {
                assert_eq!(g.size() % s.order(), 0);
                assert!(Subgroup::from_members(&g, s.members.clone()).is_ok());
            }
        }
        // Z_2^3 has 16 subgroups.
        assert_eq!(grp(&[2, 2, 2]).subgroups().len(), 16);
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let z4 = grp(&[4]);
        assert!(Subgroup::from_members(&z4, vec![el(&z4, &[0]), el(&z4, &[1])]).is_err());
        assert!(Subgroup::from_members(&z4, vec![el(&z4, &[2])]).is_err());
        let h = Subgroup::generated_by(&z4, &[el(&z4, &[2])]).unwrap();
        assert_eq!(h.order(), 2);
    }

    #[test]
    fn character_eval_examples() {
        let z4 = grp(&[4]);
        let chi = z4.character(el(&z4, &[1])).unwrap();
        assert_eq!(chi.eval(&el(&z4, &[2])).unwrap(), UnityScalar::new(1, 2));
        let v4 = grp(&[2, 2]);
        let chi = v4.character(el(&v4, &[1, 1])).unwrap();
        assert_eq!(chi.eval(&el(&v4, &[1, 0])).unwrap(), UnityScalar::new(1, 2));
        let trivial = v4.character(v4.zero()).unwrap();
        assert!(v4.elements().iter().all(|g| trivial.eval(g).unwrap().is_one()));
        assert!(chi.eval(&el(&z4, &[1])).is_err());
    }

    #[test]
    fn characters_are_homomorphisms() {
        for orders in [&[2][..], &[4, 2], &[3, 3], &[8], &[2, 2, 2], &[4, 4, 4]] {
            let g = grp(orders);
            for chi in g.characters() {
                for x in g.elements() {
                    for y in g.elements() {
                        assert_eq!(
                            chi.eval(&g.add(&x, &y).unwrap()).unwrap(),
                            chi.eval(&x).unwrap() * chi.eval(&y).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn characters_of_subgroup_examples() {
        let z4 = grp(&[4]);
        let h = Subgroup::generated_by(&z4, &[el(&z4, &[2])]).unwrap();
        let chars = h.characters();
        assert_eq!(chars.len(), 2);
        let on_two: BTreeSet<_> = chars
            .iter()
            .map(|c| c.eval(&h, &el(&z4, &[2])).unwrap())
            .collect();
        assert_eq!(on_two, [UnityScalar::ONE, UnityScalar::new(1, 2)].into());

        let trivial = z4.trivial_subgroup().characters();
        assert_eq!(trivial.len(), 1);
        assert!(trivial[0].is_trivial());

        let z2 = grp(&[2]);
        assert_eq!(z2.whole().characters().len(), 2);
    }

    #[test]
    fn subgroup_characters_separate_points() {
        for orders in [&[4, 2][..], &[2, 2, 2], &[6, 2], &[9]] {
            let g = grp(orders);
            for h in g.subgroups() {
                let chars = h.characters();
                assert_eq!(chars.len(), h.order());
                for (i, m) in h.members().iter().enumerate() {
                    if !m.is_zero() {
                        assert!(chars.iter().any(|c| !c.values[i].is_one()));
                    }
                }
            }
        }
    }

    #[test]
    fn coset_transversal_examples() {
        let z4 = grp(&[4]);
        let h = Subgroup::generated_by(&z4, &[el(&z4, &[2])]).unwrap();
        assert_eq!(z4.coset_transversal(&h).unwrap(), vec![el(&z4, &[0]), el(&z4, &[1])]);
        assert_eq!(z4.coset_transversal(&z4.whole()).unwrap(), vec![el(&z4, &[0])]);
        assert_eq!(z4.coset_transversal(&z4.trivial_subgroup()).unwrap(), z4.elements());
        let other = grp(&[2]);
        assert!(matches!(
            z4.coset_transversal(&other.whole()),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn transversal_partitions_group() {
        let g = grp(&[4, 2, 2]);
        for h in g.subgroups() {
            let reps = g.coset_transversal(&h).unwrap();
            assert_eq!(reps.len() * h.order(), g.size());
            let mut seen = BTreeSet::new();
            for r in &reps {
                for m in h.members() {
                    assert!(seen.insert(g.add(r, m).unwrap()));
                }
            }
            assert_eq!(seen.len(), g.size());
        }
    }
}
