//! Dense multiplication tables for small groups.

use super::group::PermutationGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Elements of a small group in canonical chain order with a full Cayley table.
#[derive(Clone, Debug)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl ElementTable {
    pub fn new(group: &PermutationGroup, limit: u128) -> Result<Self> {
        let order = group.order();
        if order > limit {
            return Err(Error::guard("group order", order, limit));
        }
        let elements = group.elements();
        let m = elements.len();
        let mut mul = vec![0u32; m * m];
        let mut inv = vec![0u32; m];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let k = group.element_index(&a.mul(b)).expect("closed under products");
                mul[i * m + j] = k as u32;
                if k == 0 {
                    inv[i] = j as u32;
                }
            }
        }
        Ok(Self { elements, mul, inv })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Index of `a ∘ b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Index of `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Subgroup generated by the given element indices, as a membership set.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::empty(self.len());
        set.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Image of a subgroup under conjugation by `g`.
    pub fn conjugate_set(&self, set: &ElemSet, g: usize) -> ElemSet {
        let mut out = ElemSet::empty(self.len());
        for x in set.iter() {
            out.insert(self.conj(g, x));
        }
        out
    }

    /// Greedy generating set: scan members in index order, keep those not yet generated.
    pub fn generators_of(&self, set: &ElemSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = self.closure(&[]);
        for x in set.iter() {
            if !current.contains(x) {
                gens.push(x);
                current = self.closure(&gens);
                if current.count() == set.count() {
                    break;
                }
            }
        }
        gens
    }

    /// Converts a membership set to a permutation group of the parent's degree.
    pub fn to_group(&self, set: &ElemSet, degree: usize) -> PermutationGroup {
        let gens = self
            .generators_of(set)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        PermutationGroup::new(degree, gens).expect("elements share the parent degree")
    }

    pub fn set_of(&self, group: &PermutationGroup, parent: &PermutationGroup) -> Option<ElemSet> {
        let gens = group
            .generators()
            .iter()
            .map(|g| parent.element_index(g))
            .collect::<Option<Vec<_>>>()?;
        Some(self.closure(&gens))
    }
}

/// Fixed-width bitset over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true if `i` was newly inserted.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let before = self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        !before
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection_count(&self, other: &ElemSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
