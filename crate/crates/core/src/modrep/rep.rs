use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::field::{self, check_prime, FlMatrix};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::perm::{normal_subgroups, smallest_prime_factor, Permutation, PermutationGroup, MAX_SUBGROUP_SCAN_ORDER};

/// Largest group order for which a representation tabulates every element's matrix.
pub const MAX_REP_GROUP_ORDER: u128 = 100_000;
/// Largest `l^n` for exhaustive invariant-subspace enumeration.
pub const MAX_MODULE_SIZE: u128 = 10_000;

/// A homomorphism from a permutation group to `GL(n, l)`, given on generators.
///
/// Construction tabulates the matrix of every element by walking the Cayley
/// graph, which also proves the generator images extend to a homomorphism.
#[derive(Clone, Debug)]
pub struct LinearRepresentation {
    l: u32,
    n: usize,
    group: PermutationGroup,
    images: Vec<FlMatrix>,
    element_matrices: Vec<FlMatrix>,
}

impl LinearRepresentation {
    pub fn new(l: u32, n: usize, group: PermutationGroup, images: Vec<FlMatrix>) -> Result<Self> {
        check_prime(l)?;
        if n == 0 {
            return Err(Error::Precondition("dimension must be positive".into()));
        }
        if images.len() != group.generators().len() {
            return Err(Error::Precondition(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        for m in &images {
            if m.l() != l || m.dim() != n {
                return Err(Error::Precondition("matrix over the wrong field or dimension".into()));
            }
            if !m.is_invertible() {
                return Err(Error::Precondition(format!("{m:?} is not invertible")));
            }
        }
        let order = group.order();
        if order > MAX_REP_GROUP_ORDER {
            return Err(Error::guard("group order", order, MAX_REP_GROUP_ORDER));
        }
        let element_matrices = tabulate(&group, &images, l, n)?;
        Ok(Self {
            l,
            n,
            group,
            images,
            element_matrices,
        })
    }

    /// Trivial action of `group` on `F_l^n`.
    pub fn trivial(l: u32, n: usize, group: PermutationGroup) -> Result<Self> {
        let images = vec![FlMatrix::identity(l, n); group.generators().len()];
        Self::new(l, n, group, images)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    /// Matrices of the group generators, in generator order.
    pub fn images(&self) -> &[FlMatrix] {
        &self.images
    }

    /// Matrices of all elements, aligned with `group().elements()`.
    pub fn element_matrices(&self) -> &[FlMatrix] {
        &self.element_matrices
    }

    pub fn matrix_of(&self, g: &Permutation) -> Option<&FlMatrix> {
        self.group.element_index(g).map(|i| &self.element_matrices[i])
    }

    /// The same group acting through `t ρ(g) t⁻¹`.
    pub fn conjugate_by(&self, t: &FlMatrix) -> Result<Self> {
        let images = self.images.iter().map(|m| m.conjugate_by(t)).collect();
        Self::new(self.l, self.n, self.group.clone(), images)
    }

    /// Restriction to a subgroup of the carrier group.
    pub fn restrict(&self, subgroup: &PermutationGroup) -> Result<Self> {
        let images = subgroup
            .generators()
            .iter()
            .map(|g| {
                self.matrix_of(g)
                    .cloned()
                    .ok_or_else(|| Error::Precondition("not a subgroup of the carrier group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.l, self.n, subgroup.clone(), images)
    }

    /// Subspace of vectors fixed by every generator.
    pub fn fixed_subspace(&self) -> Subspace {
        // Kernel of the stacked ρ(g) - I.
        let mut rows = Vec::new();
        for m in &self.images {
            rows.extend(m.sub(&FlMatrix::identity(self.l, self.n)).rows());
        }
        kernel(self.l, self.n, rows)
    }
}

/// Null space of the matrix with the given rows.
pub(crate) fn kernel(l: u32, n: usize, rows: Vec<Vec<u32>>) -> Subspace {
    let (rows, pivots) = field::rref(l, rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; n];
            v[f] = 1;
            for (r, &p) in rows.iter().zip(&pivots) {
                v[p] = field::neg(l, r[f]);
            }
            v
        })
        .collect();
    Subspace::span(l, n, basis)
}

fn tabulate(group: &PermutationGroup, images: &[FlMatrix], l: u32, n: usize) -> Result<Vec<FlMatrix>> {
    let elements = group.elements();
    let mut mats: Vec<Option<FlMatrix>> = vec![None; elements.len()];
    mats[0] = Some(FlMatrix::identity(l, n));
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let mx = mats[x].clone().expect("visited");
        for (s, ms) in group.generators().iter().zip(images) {
            let y = group
                .element_index(&s.mul(&elements[x]))
                .expect("closed under generators");
            let my = ms.mul(&mx);
            match &mats[y] {
                None => {
                    mats[y] = Some(my);
                    queue.push(y);
                }
                Some(existing) if *existing != my => {
                    return Err(Error::Precondition(
                        "generator images do not extend to a homomorphism".into(),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    Ok(mats.into_iter().map(|m| m.expect("group is generated")).collect())
}

/// The conjugation action of `L/N` on an elementary abelian normal subgroup `N`.
#[derive(Clone, Debug)]
pub struct ConjugationModule {
    /// `L/N` acting on the cosets of `N`; generator `i` is the image of `L`'s generator `i`.
    pub quotient: PermutationGroup,
    pub rep: LinearRepresentation,
    /// The `F_l`-basis of `N` used for coordinates.
    pub basis: Vec<Permutation>,
    /// Coset number of each element of `L`, in `L`'s chain order.
    pub coset_of: Vec<usize>,
}

/// Coordinates of elements of an elementary abelian group in a given basis.
fn coordinate_map(basis: &[Permutation], l: u32) -> HashMap<Permutation, Vec<u32>> {
    let degree = basis[0].degree();
    let n = basis.len();
    let total = (l as usize).pow(n as u32);
    let mut map = HashMap::with_capacity(total);
    for index in 0..total {
        let coords = field::decode(l, n, index);
        let mut g = Permutation::identity(degree);
        for (b, &c) in basis.iter().zip(&coords) {
            g = g.mul(&b.pow(c as u64));
        }
        map.insert(g, coords);
    }
    map
}

/// Greedy basis: scan `N` in chain order, keep elements outside the span so far.
pub(crate) fn greedy_basis(normal: &PermutationGroup) -> Vec<Permutation> {
    let mut basis: Vec<Permutation> = Vec::new();
    let mut span = PermutationGroup::trivial(normal.degree());
    let target = normal.order();
    for x in normal.elements() {
        if span.order() == target {
            break;
        }
        if !span.contains(&x) {
            basis.push(x);
            span = PermutationGroup::new(normal.degree(), basis.clone()).expect("same degree");
        }
    }
    basis
}

pub fn module_from_conjugation(l_group: &PermutationGroup, normal: &PermutationGroup) -> Result<ConjugationModule> {
    let basis = greedy_basis(normal);
    module_from_conjugation_with_basis(l_group, normal, basis)
}

pub fn module_from_conjugation_with_basis(
    l_group: &PermutationGroup,
    normal: &PermutationGroup,
    basis: Vec<Permutation>,
) -> Result<ConjugationModule> {
    if !normal.is_normal_in(l_group) {
        return Err(Error::Precondition("N is not a normal subgroup of L".into()));
    }
    let l = normal
        .elementary_abelian_prime()
        .ok_or_else(|| Error::Precondition("N is not a nontrivial elementary abelian group".into()))?
        as u32;
    let order = l_group.order();
    if order > MAX_REP_GROUP_ORDER {
        return Err(Error::guard("group order", order, MAX_REP_GROUP_ORDER));
    }
    let n = basis.len();
    if basis.iter().any(|b| !normal.contains(b)) || (l as u128).pow(n as u32) != normal.order() {
        return Err(Error::Precondition("basis does not match N".into()));
    }
    let coords = coordinate_map(&basis, l);
    if coords.len() != (l as usize).pow(n as u32) {
        return Err(Error::Precondition("basis elements are dependent".into()));
    }

    // Cosets xN, numbered by their first element in chain order.
    let elements = l_group.elements();
    let n_elements = normal.elements();
    let mut coset_of = vec![usize::MAX; elements.len()];
    let mut reps = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x.clone());
        for y in &n_elements {
            let j = l_group.element_index(&x.mul(y)).expect("N ≤ L");
            coset_of[j] = id;
        }
    }
    let num_cosets = reps.len();
    let quotient_gens = l_group
        .generators()
        .iter()
        .map(|g| {
            let images = reps
                .iter()
                .map(|r| coset_of[l_group.element_index(&g.mul(r)).expect("closed")])
                .collect();
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let quotient = PermutationGroup::new(num_cosets, quotient_gens)?;

    let images = l_group
        .generators()
        .iter()
        .map(|g| {
            let columns: Vec<Vec<u32>> = basis.iter().map(|b| coords[&b.conjugate_by(g)].clone()).collect();
            FlMatrix::from_columns(l, &columns)
        })
        .collect();
    let rep = LinearRepresentation::new(l, n, quotient.clone(), images)?;
    Ok(ConjugationModule {
        quotient,
        rep,
        basis,
        coset_of,
    })
}

fn guard_module(rep: &LinearRepresentation) -> Result<()> {
    let size = (rep.l as u128).pow(rep.n as u32);
    if size > MAX_MODULE_SIZE {
        return Err(Error::guard("module size l^n", size, MAX_MODULE_SIZE));
    }
    Ok(())
}

/// Every invariant subspace, ascending by dimension then basis.
///
/// Submodules are sums of cyclic submodules, so the lattice is the closure
/// under sums of the spins of individual vectors.
pub fn invariant_subspaces(rep: &LinearRepresentation) -> Result<Vec<Subspace>> {
    guard_module(rep)?;
    let (l, n) = (rep.l, rep.n);
    let mut cyclic: Vec<Subspace> = Vec::new();
    let mut seen = HashSet::new();
    let size = (l as usize).pow(n as u32);
    let mut covered: HashSet<Vec<u32>> = HashSet::new();
    for index in 1..size {
        let v = field::decode(l, n, index);
        if covered.contains(&v) {
            continue;
        }
        let w = Subspace::spin(l, n, &v, &rep.images);
        // Nonzero multiples of an eigenvector spin to the same line.
        if w.dim() == 1 {
            for c in 1..l {
                covered.insert(v.iter().map(|&x| field::mul(l, x, c)).collect());
            }
        }
        if seen.insert(w.clone()) {
            cyclic.push(w);
        }
    }
    let mut all: HashSet<Subspace> = HashSet::from([Subspace::zero(l, n)]);
    let mut list = vec![Subspace::zero(l, n)];
    let mut head = 0;
    while head < list.len() {
        let s = list[head].clone();
        head += 1;
        for c in &cyclic {
            let t = s.sum(c);
            if all.insert(t.clone()) {
                list.push(t);
            }
        }
    }
    list.sort_by(|a, b| (a.dim(), a.basis()).cmp(&(b.dim(), b.basis())));
    Ok(list)
}

/// Simple iff the only invariant subspaces are `0` and the whole space.
pub fn is_simple(rep: &LinearRepresentation) -> Result<bool> {
    Ok(invariant_subspaces(rep)?.len() == 2)
}

/// Faithful iff only the identity acts as the identity matrix.
pub fn is_faithful(rep: &LinearRepresentation) -> Result<bool> {
    let order = rep.group.order();
    if order > MAX_SUBGROUP_SCAN_ORDER {
        return Err(Error::guard("group order", order, MAX_SUBGROUP_SCAN_ORDER));
    }
    Ok(rep.element_matrices.iter().filter(|m| m.is_identity()).count() == 1)
}

/// True iff every `N`-invariant subspace has an `N`-invariant complement.
pub fn clifford_restriction_semisimple(rep: &LinearRepresentation, normal: &PermutationGroup) -> Result<bool> {
    if !normal.is_normal_in(&rep.group) {
        return Err(Error::Precondition("N is not normal in the carrier group".into()));
    }
    if !is_simple(rep)? {
        return Err(Error::Precondition("representation is not simple".into()));
    }
    let restricted = rep.restrict(normal)?;
    let subspaces = invariant_subspaces(&restricted)?;
    Ok(subspaces.iter().all(|w| {
        subspaces
            .iter()
            .any(|c| c.dim() + w.dim() == rep.n && c.intersection_dim(w) == 0)
    }))
}

/// Images of the central idempotent `r_N = |N|⁻¹ Σ_{x∈N} x` and of `1 - r_N`.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentSplit {
    pub r_matrix: FlMatrix,
    pub r_image: Subspace,
    pub s_image: Subspace,
}

pub fn idempotent_split(rep: &LinearRepresentation, normal: &PermutationGroup, p: u32) -> Result<IdempotentSplit> {
    if p == rep.l {
        return Err(Error::Precondition(format!(
            "p = l = {p}: |N| is not invertible in F_l"
        )));
    }
    if !normal.is_normal_in(&rep.group) {
        return Err(Error::Precondition("N is not normal in the carrier group".into()));
    }
    if normal.elementary_abelian_prime() != Some(p as u64) && !normal.is_trivial() {
        return Err(Error::Precondition(format!(
            "N is not elementary abelian of exponent {p}"
        )));
    }
    let l = rep.l;
    let mut sum = FlMatrix::zero(l, rep.n);
    for x in normal.elements() {
        sum = sum.add(rep.matrix_of(&x).expect("N ≤ G"));
    }
    let order = (normal.order() % l as u128) as u32;
    let r = sum.scale(field::inv(l, order));
    let s = FlMatrix::identity(l, rep.n).sub(&r);
    Ok(IdempotentSplit {
        r_image: Subspace::image(&r),
        s_image: Subspace::image(&s),
        r_matrix: r,
    })
}

/// A minimal normal subgroup of a solvable group, with the prime of its exponent.
///
/// Taken inside the `p`-torsion of the last nontrivial derived term for the
/// smallest prime `p` dividing its order, then minimized over normal subgroups.
pub fn minimal_normal_subgroup(group: &PermutationGroup) -> Result<(PermutationGroup, u32)> {
    if group.order() == 1 {
        return Err(Error::Precondition(
            "trivial group has no minimal normal subgroup".into(),
        ));
    }
    let series = group.derived_series();
    let last = series.last().expect("nonempty");
    if last.order() != 1 {
        return Err(Error::Precondition("group is not solvable".into()));
    }
    let abelian = &series[series.len() - 2];
    let p = smallest_prime_factor(abelian.order()).expect("nontrivial") as u64;
    let torsion: Vec<Permutation> = abelian
        .elements()
        .into_iter()
        .filter(|x| !x.is_identity() && x.pow(p).is_identity())
        .collect();
    let omega = PermutationGroup::new(group.degree(), torsion)?;
    let order = group.order();
    if order > MAX_SUBGROUP_SCAN_ORDER {
        return Err(Error::guard("group order", order, MAX_SUBGROUP_SCAN_ORDER));
    }
    let minimal = normal_subgroups(group)?
        .into_iter()
        .find(|k| k.order() > 1 && k.is_subgroup_of(&omega))
        .ok_or_else(|| Error::Defect("no normal subgroup inside the p-torsion".into()))?;
    Ok((minimal, p as u32))
}
