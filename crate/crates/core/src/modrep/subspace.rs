use std::fmt;

use serde::Serialize;

use super::field::{self, FlMatrix};

/// A subspace of `F_l^n`, stored as its reduced row echelon basis.
///
/// Two subspaces are equal iff their bases are, so derived equality and
/// hashing are set equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    l: u32,
    n: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(l: u32, n: usize) -> Self {
        Self {
            l,
            n,
            basis: Vec::new(),
        }
    }

    pub fn full(l: u32, n: usize) -> Self {
        Self::span(l, n, FlMatrix::identity(l, n).rows())
    }

    pub fn span(l: u32, n: usize, vectors: Vec<Vec<u32>>) -> Self {
        let (basis, _) = field::rref(l, vectors, n);
        Self { l, n, basis }
    }

    /// Column space of a matrix.
    pub fn image(m: &FlMatrix) -> Self {
        Self::span(m.l(), m.dim(), (0..m.dim()).map(|j| m.column(j)).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.n
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        field::rank(self.l, rows, self.n) == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.l, self.n, rows)
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn is_invariant_under(&self, m: &FlMatrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }

    /// Smallest subspace containing `v` and invariant under `generators`.
    pub fn spin(l: u32, n: usize, v: &[u32], generators: &[FlMatrix]) -> Subspace {
        let mut space = Subspace::span(l, n, vec![v.to_vec()]);
        let mut queue = vec![v.to_vec()];
        while let Some(w) = queue.pop() {
            for g in generators {
                let gw = g.apply(&w);
                if !space.contains(&gw) {
                    space = space.sum(&Subspace::span(l, n, vec![gw.clone()]));
                    queue.push(gw);
                }
            }
        }
        space
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{:?}⟩ ≤ F_{}^{}", self.basis, self.l, self.n)
    }
}
