//! Subgroup enumeration by cyclic extension.

use std::collections::HashSet;

use super::group::PermutationGroup;
use super::table::{ElemSet, ElementTable};
use crate::error::{Error, Result};

/// Largest group order accepted by the exhaustive subgroup routines.
pub const MAX_SUBGROUP_SCAN_ORDER: u128 = 200;

/// Subgroups of `parent`, or one representative per conjugacy class.
#[derive(Clone, Debug)]
pub struct SubgroupList {
    pub parent: PermutationGroup,
    pub subgroups: Vec<PermutationGroup>,
    pub up_to_conjugacy: bool,
}

impl SubgroupList {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn orders(&self) -> Vec<u128> {
        self.subgroups.iter().map(PermutationGroup::order).collect()
    }
}

/// Full subgroup lattice of a tabulated group as membership sets, sorted by
/// order and then by member indices.
pub(crate) fn subgroup_sets(table: &ElementTable) -> Vec<ElemSet> {
    let m = table.len();
    // Distinct cyclic subgroups, each with one generator.
    let mut cyclic: Vec<(usize, ElemSet)> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in 0..m {
        let c = table.closure(&[x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push((x, c));
        }
    }

    let trivial = table.closure(&[]);
    let mut all: HashSet<ElemSet> = HashSet::from([trivial.clone()]);
    let mut list: Vec<(Vec<usize>, ElemSet)> = vec![(Vec::new(), trivial)];
    let mut head = 0;
    while head < list.len() {
        let (gens, h) = list[head].clone();
        head += 1;
        for (x, c) in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*x);
            let k = table.closure(&next_gens);
            if all.insert(k.clone()) {
                list.push((next_gens, k));
            }
        }
    }
    let mut sets: Vec<ElemSet> = list.into_iter().map(|(_, s)| s).collect();
    sort_sets(&mut sets);
    sets
}

pub(crate) fn sort_sets(sets: &mut [ElemSet]) {
    sets.sort_by_cached_key(|s| (s.count(), s.to_vec()));
}

/// Partitions `sets` into conjugacy classes under the whole tabulated group;
/// returns the class index of each set (classes numbered by first occurrence).
pub(crate) fn conjugacy_classes(table: &ElementTable, sets: &[ElemSet]) -> Vec<usize> {
    let mut class = vec![usize::MAX; sets.len()];
    let index: std::collections::HashMap<&ElemSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut next = 0;
    for i in 0..sets.len() {
        if class[i] != usize::MAX {
            continue;
        }
        for g in 0..table.len() {
            let conj = table.conjugate_set(&sets[i], g);
            if let Some(&j) = index.get(&conj) {
                class[j] = next;
            }
        }
        next += 1;
    }
    class
}

fn guarded_table(group: &PermutationGroup) -> Result<ElementTable> {
    ElementTable::new(group, MAX_SUBGROUP_SCAN_ORDER)
}

/// All subgroups of `group` (or conjugacy-class representatives), ascending by order.
pub fn enumerate_subgroups(group: &PermutationGroup, up_to_conjugacy: bool) -> Result<SubgroupList> {
    let table = guarded_table(group)?;
    let sets = subgroup_sets(&table);
    let chosen: Vec<&ElemSet> = if up_to_conjugacy {
        let class = conjugacy_classes(&table, &sets);
        let mut taken = HashSet::new();
        sets.iter()
            .zip(&class)
            .filter(|(_, c)| taken.insert(**c))
            .map(|(s, _)| s)
            .collect()
    } else {
        sets.iter().collect()
    };
    Ok(SubgroupList {
        parent: group.clone(),
        subgroups: chosen.into_iter().map(|s| table.to_group(s, group.degree())).collect(),
        up_to_conjugacy,
    })
}

/// Normal subgroups of `group`, ascending by order.
pub fn normal_subgroups(group: &PermutationGroup) -> Result<Vec<PermutationGroup>> {
    let table = guarded_table(group)?;
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|g| group.element_index(g).expect("generator is a member"))
        .collect();
    Ok(subgroup_sets(&table)
        .into_iter()
        .filter(|s| gens.iter().all(|&g| table.conjugate_set(s, g) == *s))
        .map(|s| table.to_group(&s, group.degree()))
        .collect())
}

/// True iff no subgroup lies strictly between `h` and `g`.
pub fn is_maximal(g: &PermutationGroup, h: &PermutationGroup) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::Precondition("H is not a subgroup of G".into()));
    }
    let table = guarded_table(g)?;
    let h_set = table.set_of(h, g).expect("members of G");
    let h_count = h_set.count();
    if h_count == table.len() {
        return Ok(false);
    }
    Ok(!subgroup_sets(&table).iter().any(|k| {
        let c = k.count();
        c > h_count && c < table.len() && h_set.is_subset(k)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn grp(degree: usize, gens: &[&[usize]]) -> PermutationGroup {
        PermutationGroup::from_images(degree, gens).unwrap()
    }

    /// Independent oracle: every subset of the element list that contains the
    /// identity and is closed under products.
    fn brute_force_subgroups(g: &PermutationGroup) -> Vec<Vec<Permutation>> {
        let elems = g.elements();
        let m = elems.len();
        assert!(m <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << m) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<&Permutation> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| &elems[i]).collect();
            let closed = members
                .iter()
                .all(|a| members.iter().all(|b| members.contains(&&a.compose(b).unwrap())));
            if closed {
                out.push(members.into_iter().cloned().collect());
            }
        }
        out
    }

    #[test]
    fn cyclic_four() {
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        let list = enumerate_subgroups(&c4, false).unwrap();
        assert_eq!(list.orders(), vec![1, 2, 4]);
    }

    #[test]
    fn s3_and_a4_counts_match_brute_force() {
        let s3 = grp(3, &[&[1, 0, 2], &[1, 2, 0]]);
        assert_eq!(brute_force_subgroups(&s3).len(), 6);
        assert_eq!(enumerate_subgroups(&s3, false).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&s3, true).unwrap().orders(), vec![1, 2, 3, 6]);

        let a4 = grp(4, &[&[1, 0, 3, 2], &[1, 2, 0, 3]]);
        assert_eq!(brute_force_subgroups(&a4).len(), 10);
        assert_eq!(enumerate_subgroups(&a4, false).unwrap().len(), 10);
        assert_eq!(enumerate_subgroups(&a4, true).unwrap().orders(), vec![1, 2, 3, 4, 12]);
    }

    #[test]
    fn d4_matches_brute_force() {
        let d4 = grp(4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]]);
        let brute = brute_force_subgroups(&d4);
        let list = enumerate_subgroups(&d4, false).unwrap();
        assert_eq!(brute.len(), 10);
        assert_eq!(list.len(), brute.len());
        for h in &list.subgroups {
            let mut elems = h.elements();
            elems.sort();
            assert!(brute.iter().any(|b| {
                let mut b = b.clone();
                b.sort();
                b == elems
            }));
        }
    }

    #[test]
    fn maximality_examples() {
        let s4 = grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        assert!(is_maximal(&s4, &s4.point_stabilizer(0).unwrap()).unwrap());
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        assert!(!is_maximal(&c4, &PermutationGroup::trivial(4)).unwrap());
        let a4 = grp(4, &[&[1, 0, 3, 2], &[1, 2, 0, 3]]);
        let v4 = grp(4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]]);
        assert!(is_maximal(&a4, &v4).unwrap());
        let not_sub = grp(4, &[&[1, 0, 2, 3]]);
        assert!(is_maximal(&a4, &not_sub).is_err());
    }

    #[test]
    fn guard_rejects_large_groups() {
        let s6 = grp(6, &[&[1, 2, 3, 4, 5, 0], &[1, 0, 2, 3, 4, 5]]);
        assert!(matches!(enumerate_subgroups(&s6, false), Err(Error::Guard { .. })));
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let s4 = grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        let orders: Vec<u128> = normal_subgroups(&s4).unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }
}
