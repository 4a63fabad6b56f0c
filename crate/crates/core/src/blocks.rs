//! Block systems and the primitivity test.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::PermutationGroup;

/// A partition of `{0, …, degree-1}` into nonempty parts.
///
/// Parts are kept sorted internally and ordered by their minimum element, which
/// is also the JSON form: an array of arrays of integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Partition {
    degree: usize,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(degree: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; degree];
        let mut parts: Vec<Vec<usize>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        for part in &parts {
            if part.is_empty() {
                return Err(Error::Precondition("partition has an empty part".into()));
            }
            for &x in part {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if seen[x] {
                    return Err(Error::Precondition(format!("point {x} lies in two parts")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!("point {missing} is not covered")));
        }
        parts.sort_by_key(|p| p[0]);
        Ok(Self { degree, parts })
    }

    pub fn singletons(degree: usize) -> Self {
        Self {
            degree,
            parts: (0..degree).map(|i| vec![i]).collect(),
        }
    }

    /// The translates `{g·block : g ∈ G}`; fails if they overlap without coinciding.
    pub fn from_block(group: &PermutationGroup, block: &BTreeSet<usize>) -> Result<Self> {
        let mut parts: Vec<BTreeSet<usize>> = vec![block.clone()];
        let mut k = 0;
        while k < parts.len() {
            for g in group.generators() {
                let image: BTreeSet<usize> = parts[k].iter().map(|&x| g.apply(x)).collect();
                if !parts.contains(&image) {
                    parts.push(image);
                }
            }
            k += 1;
        }
        Self::new(
            group.degree(),
            parts.into_iter().map(|p| p.into_iter().collect()).collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// More than one part, and some part with more than one point.
    pub fn is_essential(&self) -> bool {
        self.parts.len() > 1 && self.parts.iter().any(|p| p.len() > 1)
    }

    fn part_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.degree];
        for (i, part) in self.parts.iter().enumerate() {
            for &x in part {
                index[x] = i;
            }
        }
        index
    }
}

impl TryFrom<Vec<Vec<usize>>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<Vec<usize>>) -> Result<Self> {
        let degree = parts.iter().map(Vec::len).sum();
        Partition::new(degree, parts)
    }
}

impl From<Partition> for Vec<Vec<usize>> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

pub fn is_essential(partition: &Partition) -> bool {
    partition.is_essential()
}

/// True iff every generator maps every part onto a part.
pub fn is_g_stable(group: &PermutationGroup, partition: &Partition) -> Result<bool> {
    if group.degree() != partition.degree() {
        return Err(Error::DegreeMismatch {
            expected: group.degree(),
            got: partition.degree(),
        });
    }
    let index = partition.part_index();
    Ok(group.generators().iter().all(|g| {
        partition.parts().iter().all(|part| {
            let target = index[g.apply(part[0])];
            partition.parts()[target].len() == part.len() && part.iter().all(|&x| index[g.apply(x)] == target)
        })
    }))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes, keeping the smaller root. Returns false if already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest block of imprimitivity containing `a` and `b` (Atkinson's method).
pub fn minimal_block(group: &PermutationGroup, a: usize, b: usize) -> Result<BTreeSet<usize>> {
    let degree = group.degree();
    for p in [a, b] {
        if p >= degree {
            return Err(Error::PointOutOfRange { point: p, degree });
        }
    }
    if a == b {
        return Err(Error::Precondition("minimal_block needs two distinct points".into()));
    }
    if !group.is_transitive() {
        return Err(Error::Precondition("group is not transitive".into()));
    }
    Ok(minimal_block_unchecked(group, a, b))
}

fn minimal_block_unchecked(group: &PermutationGroup, a: usize, b: usize) -> BTreeSet<usize> {
    let degree = group.degree();
    let mut uf = UnionFind::new(degree);
    uf.union(a, b);
    let mut pending = vec![(a.min(b), a.max(b))];
    let mut head = 0;
    while head < pending.len() {
        let (x, y) = pending[head];
        head += 1;
        for g in group.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (rx, ry) = (uf.find(gx), uf.find(gy));
            if uf.union(rx, ry) {
                pending.push((rx.min(ry), rx.max(ry)));
            }
        }
    }
    let root = uf.find(a);
    (0..degree).filter(|&x| uf.find(x) == root).collect()
}

/// Primitive: order > 1 and no stable essential partition.
///
/// Intransitive nontrivial groups are imprimitive: their orbit partition,
/// refined if necessary, is stable and essential.
pub fn is_primitive(group: &PermutationGroup) -> Result<bool> {
    let degree = group.degree();
    if degree < 2 {
        return Err(Error::Precondition("primitivity needs at least two points".into()));
    }
    if group.order() == 1 || !group.is_transitive() {
        return Ok(false);
    }
    Ok((1..degree).all(|b| minimal_block_unchecked(group, 0, b).len() == degree))
}

/// A stable essential partition witnessing imprimitivity, if one exists.
pub fn block_system(group: &PermutationGroup) -> Result<Option<Partition>> {
    if is_primitive(group)? {
        return Ok(None);
    }
    if group.order() == 1 {
        // Any essential partition is stable under the trivial group.
        let mut parts = vec![vec![0, 1]];
        parts.extend((2..group.degree()).map(|i| vec![i]));
        if parts.len() == 1 {
            return Ok(None);
        }
        return Partition::new(group.degree(), parts).map(Some);
    }
    if !group.is_transitive() {
        // Nontrivial, so some orbit has two points.
        return Partition::new(group.degree(), group.orbits()).map(Some);
    }
    for b in 1..group.degree() {
        let block = minimal_block_unchecked(group, 0, b);
        if block.len() < group.degree() {
            return Partition::from_block(group, &block).map(Some);
        }
    }
    Err(Error::Defect(
        "imprimitive transitive group without a proper block".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(degree: usize, gens: &[&[usize]]) -> PermutationGroup {
        PermutationGroup::from_images(degree, gens).unwrap()
    }

    fn part(degree: usize, parts: &[&[usize]]) -> Partition {
        Partition::new(degree, parts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn stability_examples() {
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        assert!(is_g_stable(&c4, &part(4, &[&[0, 2], &[1, 3]])).unwrap());
        assert!(!is_g_stable(&c4, &part(4, &[&[0, 1], &[2, 3]])).unwrap());
        assert!(is_g_stable(&c4, &Partition::singletons(4)).unwrap());
        assert!(is_g_stable(&c4, &Partition::singletons(5)).is_err());
    }

    #[test]
    fn essential_examples() {
        assert!(part(4, &[&[0, 2], &[1, 3]]).is_essential());
        assert!(!Partition::singletons(4).is_essential());
        assert!(!part(4, &[&[0, 1, 2, 3]]).is_essential());
    }

    #[test]
    fn minimal_block_examples() {
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        let s4 = grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        assert_eq!(minimal_block(&c4, 0, 2).unwrap(), BTreeSet::from([0, 2]));
        assert_eq!(minimal_block(&s4, 0, 1).unwrap(), BTreeSet::from([0, 1, 2, 3]));
        assert_eq!(minimal_block(&c4, 0, 1).unwrap(), BTreeSet::from([0, 1, 2, 3]));
        assert!(minimal_block(&c4, 1, 1).is_err());
        let intransitive = grp(4, &[&[1, 0, 2, 3]]);
        assert!(minimal_block(&intransitive, 0, 1).is_err());
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&grp(2, &[&[1, 0]])).unwrap());
        assert!(!is_primitive(&grp(4, &[&[1, 2, 3, 0]])).unwrap());
        assert!(is_primitive(&grp(4, &[&[1, 0, 3, 2], &[1, 2, 0, 3]])).unwrap());
        assert!(is_primitive(&grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])).unwrap());
        assert!(!is_primitive(&grp(4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]])).unwrap());
        assert!(!is_primitive(&PermutationGroup::trivial(2)).unwrap());
        assert!(!is_primitive(&grp(3, &[&[1, 0, 2]])).unwrap());
        assert!(is_primitive(&PermutationGroup::trivial(1)).is_err());
    }

    #[test]
    fn block_system_witnesses() {
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        let p = block_system(&c4).unwrap().unwrap();
        assert_eq!(p.parts(), &[vec![0, 2], vec![1, 3]]);
        assert!(is_g_stable(&c4, &p).unwrap() && p.is_essential());
        let s4 = grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        assert_eq!(block_system(&s4).unwrap(), None);
    }

    #[test]
    fn partition_json_orders_parts_by_minimum() {
        let p = part(4, &[&[3, 1], &[2, 0]]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[0,2],[1,3]]");
        let back: Partition = serde_json::from_str("[[1,3],[0,2]]").unwrap();
        assert_eq!(back, p);
    }
}
