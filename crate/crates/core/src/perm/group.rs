use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::chain::StabChain;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermutationGroup {
    /// An empty generator list yields the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// Convenience constructor from image tables.
    pub fn from_images(degree: usize, generators: &[&[usize]]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Permutation::new(g.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain().strong_generators()
    }

    /// Every element, in canonical chain order (identity first).
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements()
    }

    /// Index of `g` in [`elements`](Self::elements), if `g` is a member.
    pub fn element_index(&self, g: &Permutation) -> Option<usize> {
        self.chain().index_of(g)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// The smallest set containing `point` closed under the generators.
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut stack = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok((0..self.degree).filter(|&i| seen[i]).collect())
    }

    /// All orbits, each ascending, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if covered[p] {
                continue;
            }
            let orbit: Vec<usize> = self.orbit(p).expect("in range").into_iter().collect();
            for &q in &orbit {
                covered[q] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// `{g ∈ G : g(point) = point}` via Schreier generators.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermutationGroup> {
        self.check_point(point)?;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[point] = Some(self.identity());
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for s in &self.generators {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(s.mul(transversal[x].as_ref().expect("visited")));
                    queue.push(y);
                }
            }
        }
        let mut stab = GeneratorAccumulator::new(self.degree);
        for &x in &queue {
            let ux = transversal[x].as_ref().expect("visited");
            for s in &self.generators {
                let uy_inv = transversal[s.apply(x)].as_ref().expect("closed").inverse();
                stab.add(uy_inv.mul(s).mul(ux));
            }
        }
        Ok(stab.finish())
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// True iff `self ≤ other` and `self` is invariant under conjugation by `other`.
    pub fn is_normal_in(&self, other: &PermutationGroup) -> bool {
        self.is_subgroup_of(other)
            && other
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// The prime `l` if the group is nontrivial elementary abelian of exponent `l`.
    pub fn elementary_abelian_prime(&self) -> Option<u64> {
        if self.is_trivial() || !self.is_abelian() {
            return None;
        }
        let (l, _) = prime_power(self.order())?;
        self.generators
            .iter()
            .all(|g| g.pow(l as u64).is_identity())
            .then_some(l as u64)
    }

    /// Smallest subgroup of `self` containing `gens` and normalized by `self`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> PermutationGroup {
        let mut acc = GeneratorAccumulator::new(self.degree);
        for g in gens {
            acc.add(g.clone());
        }
        let mut k = 0;
        while k < acc.gens.len() {
            let h = acc.gens[k].clone();
            for g in &self.generators {
                acc.add(h.conjugate_by(g));
            }
            k += 1;
        }
        acc.finish()
    }

    /// Commutator subgroup: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> PermutationGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                comms.push(Permutation::commutator(a, b));
            }
        }
        self.normal_closure(&comms)
    }

    /// `G = G⁽⁰⁾ ⊇ G⁽¹⁾ ⊇ …`, ending at the first term equal to its successor.
    pub fn derived_series(&self) -> Vec<PermutationGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().map(|g| g.order() == 1).unwrap_or(true)
    }

    /// Generated subgroup with the same degree.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermutationGroup> {
        let h = PermutationGroup::new(self.degree, gens)?;
        if !h.is_subgroup_of(self) {
            return Err(Error::Precondition("generators are not members of the group".into()));
        }
        Ok(h)
    }

    /// Generators sorted lexicographically with duplicates and identities dropped.
    pub fn canonical_generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = self.generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        gens
    }
}

/// Collects generators, dropping any already in the group generated so far.
pub(crate) struct GeneratorAccumulator {
    degree: usize,
    pub(crate) gens: Vec<Permutation>,
    group: PermutationGroup,
}

impl GeneratorAccumulator {
    pub(crate) fn new(degree: usize) -> Self {
        Self {
            degree,
            gens: Vec::new(),
            group: PermutationGroup::trivial(degree),
        }
    }

    pub(crate) fn add(&mut self, g: Permutation) -> bool {
        if self.group.contains(&g) {
            return false;
        }
        self.gens.push(g);
        self.group = PermutationGroup::new(self.degree, self.gens.clone()).expect("same degree");
        true
    }

    pub(crate) fn finish(self) -> PermutationGroup {
        self.group
    }
}

/// `(p, k)` with `n = p^k`, `p` prime, `k ≥ 1`; `None` otherwise.
pub fn prime_power(n: u128) -> Option<(u128, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn smallest_prime_factor(n: u128) -> Option<u128> {
    if n < 2 {
        return None;
    }
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return Some(p);
        }
        p += 1;
    }
    Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermutationGroup {
        PermutationGroup::from_images(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]).unwrap()
    }

    fn a4() -> PermutationGroup {
        PermutationGroup::from_images(4, &[&[1, 0, 3, 2], &[1, 2, 0, 3]]).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let g = PermutationGroup::from_images(3, &[&[1, 2, 0]]).unwrap();
        assert_eq!(g.orbit(0).unwrap(), BTreeSet::from([0, 1, 2]));
        let g = PermutationGroup::from_images(3, &[&[1, 0, 2]]).unwrap();
        assert_eq!(g.orbit(2).unwrap(), BTreeSet::from([2]));
        let g = PermutationGroup::from_images(4, &[&[1, 0, 3, 2]]).unwrap();
        assert_eq!(g.orbit(0).unwrap(), BTreeSet::from([0, 1]));
        assert!(matches!(g.orbit(4), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn chain_orders() {
        assert_eq!(a4().order(), 12);
        assert_eq!(s4().order(), 24);
        assert_eq!(PermutationGroup::trivial(5).order(), 1);
    }

    #[test]
    fn derived_series_examples() {
        let series = s4().derived_series();
        let orders: Vec<u128> = series.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(s4().is_solvable());

        let c3 = PermutationGroup::from_images(3, &[&[1, 2, 0]]).unwrap();
        let orders: Vec<u128> = c3.derived_series().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![3, 1]);

        let s5 = PermutationGroup::from_images(5, &[&[1, 2, 3, 4, 0], &[1, 0, 2, 3, 4]]).unwrap();
        let series = s5.derived_series();
        assert_eq!(series.last().unwrap().order(), 60);
        assert!(!s5.is_solvable());
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(s4().point_stabilizer(0).unwrap().order(), 6);
        assert_eq!(a4().point_stabilizer(0).unwrap().order(), 3);
        let g = PermutationGroup::from_images(3, &[&[1, 0, 2]]).unwrap();
        assert!(g.point_stabilizer(2).unwrap().same_group(&g));
        assert!(g.point_stabilizer(3).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn element_index_matches_enumeration() {
        let g = s4();
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(g.element_index(e), Some(i));
        }
        assert!(g.elements()[0].is_identity());
        let odd = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(a4().element_index(&odd), None);
    }

    #[test]
    fn identity_first_when_base_is_not_orbit_minimum() {
        // the second generator moves 1 before 0 is in its level's orbit
        let g = PermutationGroup::from_images(3, &[&[0, 2, 1], &[1, 2, 0]]).unwrap();
        let h = PermutationGroup::from_images(3, &[&[1, 2, 0], &[0, 2, 1]]).unwrap();
        for grp in [g, h] {
            let elements = grp.elements();
            assert!(elements[0].is_identity());
            for (i, e) in elements.iter().enumerate() {
                assert_eq!(grp.element_index(e), Some(i));
            }
        }
    }
}
