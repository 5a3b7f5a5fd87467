use std::collections::BTreeSet;
use std::fmt;

use super::{AbelianGroup, Element};
use crate::error::{Error, Result};

/// Largest group order for which the lattice is enumerated by default.
pub const DEFAULT_LATTICE_BOUND: usize = 256;

/// A subgroup, stored as its sorted element list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<Element>,
}

impl Subgroup {
    /// Wraps a sorted, duplicate-free element list without checking closure.
    pub(crate) fn from_sorted(elements: Vec<Element>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Element) -> bool {
        self.elements.binary_search(a).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|a| other.contains(a))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().filter(|a| other.contains(a)).cloned().collect(),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(Element::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// All subgroups of a finite abelian group, sorted by `(order, elements)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupLattice {
    group: AbelianGroup,
    subgroups: Vec<Subgroup>,
    /// `inclusion[i][j]` iff subgroup `i ⊆` subgroup `j`.
    inclusion: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn includes(&self, i: usize, j: usize) -> bool {
        self.inclusion[i][j]
    }

    pub fn inclusion_matrix(&self) -> &[Vec<bool>] {
        &self.inclusion
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups
            .binary_search_by(|s| (s.order(), s).cmp(&(h.order(), h)))
            .ok()
    }

    /// Index of the subgroup with exactly these elements, in any order.
    pub fn find(&self, elements: &[Element]) -> Option<usize> {
        let set: BTreeSet<Element> = elements.iter().cloned().collect();
        self.index_of(&Subgroup::from_sorted(set.into_iter().collect()))
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn intersection_index(&self, i: usize, j: usize) -> usize {
        let h = self.subgroups[i].intersection(&self.subgroups[j]);
        self.index_of(&h).expect("intersection of subgroups is a subgroup")
    }
}

/// Enumerates every subgroup as a join of cyclic subgroups.
pub fn subgroup_lattice(group: &AbelianGroup, bound: usize) -> Result<SubgroupLattice> {
    let order = group.order();
    if order > bound {
        return Err(Error::GroupTooLarge { order, bound });
    }
    let elements = group.elements();
    let cyclic = |a: &Element| -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut x = group.identity();
        loop {
            out.insert(group.index_of(&x));
            x = group.compose(&x, a);
            if x == group.identity() {
                return out;
            }
        }
    };
    let elements = &elements;
    let join = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| -> BTreeSet<usize> {
        a.iter()
            .flat_map(|&i| {
                b.iter()
                    .map(move |&j| group.index_of(&group.compose(&elements[i], &elements[j])))
            })
            .collect()
    };

    let cyclics: BTreeSet<BTreeSet<usize>> = elements.iter().map(cyclic).collect();
    let mut all: BTreeSet<BTreeSet<usize>> = cyclics.clone();
    let mut frontier: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclics {
                if c.is_subset(h) {
                    continue;
                }
                let j = join(h, c);
                if all.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }

    let mut subgroups: Vec<Subgroup> = all
        .into_iter()
        .map(|s| Subgroup {
            elements: s.into_iter().map(|i| elements[i].clone()).collect(),
        })
        .collect();
    subgroups.sort_by(|a, b| (a.order(), a).cmp(&(b.order(), b)));
    let inclusion = subgroups
        .iter()
        .map(|a| subgroups.iter().map(|b| a.is_subset_of(b)).collect())
        .collect();
    Ok(SubgroupLattice {
        group: group.clone(),
        subgroups,
        inclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(factors: Vec<u32>) -> usize {
        subgroup_lattice(&AbelianGroup::new(factors).unwrap(), DEFAULT_LATTICE_BOUND)
            .unwrap()
            .len()
    }

    #[test]
    fn small_lattices() {
        assert_eq!(count(vec![2]), 2);
        assert_eq!(count(vec![4]), 3);
        assert_eq!(count(vec![2, 2]), 5);
        assert_eq!(count(vec![6]), 4);
        assert_eq!(count(vec![2, 4]), 8);
        assert_eq!(count(vec![2, 2, 2]), 16);
        assert_eq!(count(vec![]), 1);
    }

    #[test]
    fn ordering_and_inclusion() {
        let l = subgroup_lattice(&AbelianGroup::cyclic(4), DEFAULT_LATTICE_BOUND).unwrap();
        let orders: Vec<usize> = l.subgroups().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        assert!(l.includes(0, 1) && l.includes(1, 2) && !l.includes(2, 1));
        assert_eq!(l.intersection_index(1, 2), 1);
        assert_eq!(l.get(1).to_string(), "{(0), (2)}");
    }

    #[test]
    fn bound_is_enforced() {
        let err = subgroup_lattice(&AbelianGroup::cyclic(300), DEFAULT_LATTICE_BOUND).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { order: 300, bound: 256 });
    }

    /// Brute force over all element subsets for tiny groups.
    #[test]
    fn matches_subset_enumeration() {
        for factors in [vec![2, 2], vec![6], vec![2, 4]] {
            let g = AbelianGroup::new(factors).unwrap();
            let els = g.elements();
            let n = els.len();
            let mut expected = 0;
            for mask in 1u32..(1 << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                if !s.contains(&0) {
                    continue;
                }
                let closed = s
                    .iter()
                    .all(|&i| s.iter().all(|&j| s.contains(&g.index_of(&g.compose(&els[i], &els[j])))));
                if closed {
                    expected += 1;
                }
            }
            assert_eq!(subgroup_lattice(&g, 256).unwrap().len(), expected);
        }
    }
}
