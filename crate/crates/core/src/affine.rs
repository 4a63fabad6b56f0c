//! Affine structure of solvable primitive groups.
//!
//! A solvable primitive group `G` on `Ω` has a regular elementary abelian
//! normal subgroup `N` of order `l^n`, and `Ω` is an `N`-torsor: fixing an
//! origin identifies `Ω` with `F_l^n`, `N` with the translations, and every
//! element of `G` with an affine map. The last nontrivial derived term is that
//! `N`: a nontrivial normal subgroup of a primitive group is transitive, a
//! transitive abelian group is regular, and the minimal normal subgroup lies
//! inside the last nontrivial derived term, so the two regular groups coincide.
//!
//! The standard affine space on `l^n` points numbers the vector `v` by
//! `Σ v_i l^i`.

use std::collections::HashMap;

use serde::Serialize;

use crate::blocks::is_primitive;
use crate::error::{Error, Result};
use crate::modrep::field::{self, check_prime};
use crate::modrep::{
    gl_generators, greedy_basis, is_simple, matrix_to_permutation, module_from_conjugation_with_basis, FlMatrix,
    LinearRepresentation,
};
use crate::perm::{prime_power, Permutation, PermutationGroup};

/// Largest `l^n` accepted when building affine groups as permutation groups.
pub const MAX_AFFINE_DEGREE: u128 = 512;

/// `x ↦ matrix·x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    pub matrix: FlMatrix,
    pub offset: Vec<u32>,
}

impl AffineMap {
    pub fn new(matrix: FlMatrix, offset: Vec<u32>) -> Result<Self> {
        if !matrix.is_invertible() {
            return Err(Error::Precondition("affine map needs an invertible matrix".into()));
        }
        if offset.len() != matrix.dim() {
            return Err(Error::Precondition("offset has the wrong dimension".into()));
        }
        Ok(Self { matrix, offset })
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        field::vec_add(self.matrix.l(), &self.matrix.apply(v), &self.offset)
    }

    /// The permutation of the standard `l^n` points.
    pub fn to_permutation(&self) -> Permutation {
        let (l, n) = (self.matrix.l(), self.matrix.dim());
        let size = (l as usize).pow(n as u32);
        let images = (0..size)
            .map(|k| field::encode(l, &self.apply(&field::decode(l, n, k))))
            .collect();
        Permutation::new(images).expect("affine bijection")
    }
}

fn check_degree(n: usize, l: u32) -> Result<usize> {
    check_prime(l)?;
    if n == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let size = (l as u128).pow(n as u32);
    if size > MAX_AFFINE_DEGREE {
        return Err(Error::guard("l^n", size, MAX_AFFINE_DEGREE));
    }
    Ok(size as usize)
}

/// Translation by `v` on the standard affine space.
pub fn translation(l: u32, v: &[u32]) -> Permutation {
    AffineMap {
        matrix: FlMatrix::identity(l, v.len()),
        offset: v.to_vec(),
    }
    .to_permutation()
}

/// `v ↦ m·v` on all `l^n` points.
pub fn linear_permutation(m: &FlMatrix) -> Permutation {
    AffineMap {
        matrix: m.clone(),
        offset: vec![0; m.dim()],
    }
    .to_permutation()
}

/// Translations by the standard basis vectors.
pub fn standard_translation_basis(n: usize, l: u32) -> Vec<Permutation> {
    (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            translation(l, &e)
        })
        .collect()
}

pub fn standard_translations(n: usize, l: u32) -> Result<PermutationGroup> {
    let size = check_degree(n, l)?;
    PermutationGroup::new(size, standard_translation_basis(n, l))
}

/// `AGL(n, l)` on `l^n` points.
pub fn agl_full(n: usize, l: u32) -> Result<PermutationGroup> {
    let size = check_degree(n, l)?;
    let mut gens = standard_translation_basis(n, l);
    gens.extend(gl_generators(n, l).iter().map(linear_permutation));
    PermutationGroup::new(size, gens)
}

/// The affine map of `g` on the standard space, if `g` is affine.
pub fn standard_affine_map(g: &Permutation, n: usize, l: u32) -> Option<AffineMap> {
    let offset = field::decode(l, n, g.apply(0));
    let columns: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            field::vec_sub(l, &field::decode(l, n, g.apply(field::encode(l, &e))), &offset)
        })
        .collect();
    let map = AffineMap::new(FlMatrix::from_columns(l, &columns), offset).ok()?;
    (map.to_permutation() == *g).then_some(map)
}

/// Identification of `Ω` with `F_l^n` under which `N` is the translation group.
#[derive(Clone, Debug)]
pub struct AffineStructure {
    pub l: u32,
    pub n: usize,
    pub origin: usize,
    /// `labels[p]` is the coordinate vector of point `p`.
    pub labels: Vec<Vec<u32>>,
    pub translations: PermutationGroup,
    /// Translations labelled by the standard basis vectors.
    pub basis: Vec<Permutation>,
    points: HashMap<Vec<u32>, usize>,
}

impl AffineStructure {
    pub fn point_of(&self, v: &[u32]) -> Option<usize> {
        self.points.get(v).copied()
    }

    /// The affine map realized by `g`, verified on every point.
    pub fn affine_map_of(&self, g: &Permutation) -> Result<AffineMap> {
        let l = self.l;
        let offset = self.labels[g.apply(self.origin)].clone();
        let columns: Vec<Vec<u32>> = self
            .basis
            .iter()
            .map(|t| field::vec_sub(l, &self.labels[g.apply(t.apply(self.origin))], &offset))
            .collect();
        let matrix = FlMatrix::from_columns(l, &columns);
        let map = AffineMap::new(matrix, offset)
            .map_err(|_| Error::Defect("element acts with a singular linear part".into()))?;
        for (p, label) in self.labels.iter().enumerate() {
            if self.labels[g.apply(p)] != map.apply(label) {
                return Err(Error::Defect(format!(
                    "element {g} is not affine on the recovered space"
                )));
            }
        }
        Ok(map)
    }

    /// An affine map `φ` with `other.labels[p] = φ(self.labels[p])` for every point.
    pub fn equivalence_to(&self, other: &AffineStructure) -> Option<AffineMap> {
        if (self.l, self.n, self.labels.len()) != (other.l, other.n, other.labels.len()) {
            return None;
        }
        let offset = other.labels[self.origin].clone();
        let columns: Vec<Vec<u32>> = (0..self.n)
            .map(|j| {
                let mut e = vec![0; self.n];
                e[j] = 1;
                let p = self.point_of(&e).expect("every vector labels a point");
                field::vec_sub(self.l, &other.labels[p], &offset)
            })
            .collect();
        let map = AffineMap::new(FlMatrix::from_columns(self.l, &columns), offset).ok()?;
        self.labels
            .iter()
            .zip(&other.labels)
            .all(|(a, b)| map.apply(a) == *b)
            .then_some(map)
    }
}

/// Result of [`recover_affine`].
#[derive(Clone, Debug)]
pub struct AffineRecovery {
    pub structure: AffineStructure,
    /// Affine maps of the group generators, in generator order.
    pub generator_maps: Vec<AffineMap>,
    /// `g ↦ linear part of g` on the whole group (kernel contains `N`).
    pub linear_part: LinearRepresentation,
}

impl AffineRecovery {
    /// The image of the linear part as a subgroup of `GL(n, l)` acting on
    /// nonzero vectors, with its natural representation.
    pub fn point_group_representation(&self) -> Result<LinearRepresentation> {
        let (l, n) = (self.structure.l, self.structure.n);
        let mut mats: Vec<FlMatrix> = self.generator_maps.iter().map(|m| m.matrix.clone()).collect();
        mats.sort();
        mats.dedup();
        let perms = mats.iter().map(matrix_to_permutation).collect();
        let degree = (l as usize).pow(n as u32) - 1;
        let group = PermutationGroup::new(degree, perms)?;
        let images = group
            .generators()
            .iter()
            .map(|p| crate::modrep::permutation_to_matrix(p, l, n).expect("linear"))
            .collect();
        LinearRepresentation::new(l, n, group, images)
    }
}

/// JSON form of a recovered structure.
#[derive(Clone, Debug, Serialize)]
pub struct AffineReport {
    pub l: u32,
    pub n: usize,
    pub origin: usize,
    pub labels: Vec<String>,
    pub generator_maps: Vec<AffineMap>,
}

impl From<&AffineRecovery> for AffineReport {
    fn from(r: &AffineRecovery) -> Self {
        AffineReport {
            l: r.structure.l,
            n: r.structure.n,
            origin: r.structure.origin,
            labels: r
                .structure
                .labels
                .iter()
                .map(|v| v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .collect(),
            generator_maps: r.generator_maps.clone(),
        }
    }
}

fn check_solvable_primitive(group: &PermutationGroup) -> Result<()> {
    if group.degree() < 2 {
        return Err(Error::Precondition("degree must be at least 2".into()));
    }
    if !group.is_solvable() {
        return Err(Error::Precondition("not-solvable".into()));
    }
    if !is_primitive(group)? {
        return Err(Error::Precondition("not-primitive".into()));
    }
    if prime_power(group.degree() as u128).is_none() {
        return Err(Error::Precondition("degree-not-prime-power".into()));
    }
    Ok(())
}

/// The regular elementary abelian normal subgroup of a solvable primitive group.
pub fn minimal_normal_translations(group: &PermutationGroup) -> Result<PermutationGroup> {
    check_solvable_primitive(group)?;
    let series = group.derived_series();
    let n = series[series.len() - 2].clone();
    let degree = group.degree() as u128;
    let defect = |what: &str| Err(Error::Defect(format!("last derived term {what}")));
    match n.elementary_abelian_prime() {
        None => return defect("is not elementary abelian"),
        Some(l) if prime_power(degree).map(|(p, _)| p) != Some(l as u128) => {
            return defect("has the wrong prime");
        }
        _ => {}
    }
    if n.order() != degree {
        return defect("does not have order equal to the degree");
    }
    if !n.is_transitive() {
        return defect("is not transitive");
    }
    if !n.is_normal_in(group) {
        return defect("is not normal");
    }
    Ok(n)
}

pub fn recover_affine(group: &PermutationGroup) -> Result<AffineRecovery> {
    recover_affine_with_origin(group, 0)
}

pub fn recover_affine_with_origin(group: &PermutationGroup, origin: usize) -> Result<AffineRecovery> {
    let translations = minimal_normal_translations(group)?;
    if origin >= group.degree() {
        return Err(Error::PointOutOfRange {
            point: origin,
            degree: group.degree(),
        });
    }
    let (l, n) = prime_power(group.degree() as u128).expect("checked");
    let (l, n) = (l as u32, n as usize);
    let basis = greedy_basis(&translations);
    if basis.len() != n {
        return Err(Error::Defect("translation basis has the wrong size".into()));
    }

    let mut labels = vec![Vec::new(); group.degree()];
    for index in 0..(l as usize).pow(n as u32) {
        let coords = field::decode(l, n, index);
        let mut p = origin;
        for (b, &c) in basis.iter().zip(&coords) {
            for _ in 0..c {
                p = b.apply(p);
            }
        }
        if !labels[p].is_empty() {
            return Err(Error::Defect("translations do not act regularly".into()));
        }
        labels[p] = coords;
    }
    let points = labels.iter().enumerate().map(|(p, v)| (v.clone(), p)).collect();
    let structure = AffineStructure {
        l,
        n,
        origin,
        labels,
        translations,
        basis,
        points,
    };
    let generator_maps = group
        .generators()
        .iter()
        .map(|g| structure.affine_map_of(g))
        .collect::<Result<Vec<_>>>()?;
    let linear_part = LinearRepresentation::new(
        l,
        n,
        group.clone(),
        generator_maps.iter().map(|m| m.matrix.clone()).collect(),
    )
    .map_err(|e| match e {
        Error::Guard { .. } => e,
        other => Error::Defect(format!("linear parts are not a homomorphism: {other}")),
    })?;
    Ok(AffineRecovery {
        structure,
        generator_maps,
        linear_part,
    })
}

/// Outcome of comparing the group-theoretic and module-theoretic criteria for
/// a group between the translations and `AGL(n, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntermediateGroupReport {
    pub solvable: bool,
    pub quotient_solvable: bool,
    pub primitive: bool,
    pub module_simple: bool,
}

pub fn intermediate_group_tests(n: usize, l: u32, group: &PermutationGroup) -> Result<IntermediateGroupReport> {
    let translations = standard_translations(n, l)?;
    if group.degree() != translations.degree() {
        return Err(Error::DegreeMismatch {
            expected: translations.degree(),
            got: group.degree(),
        });
    }
    if !translations.is_subgroup_of(group) {
        return Err(Error::Precondition("group does not contain the translations".into()));
    }
    if group
        .generators()
        .iter()
        .any(|g| standard_affine_map(g, n, l).is_none())
    {
        return Err(Error::Precondition("group is not inside AGL(n, l)".into()));
    }
    let module = module_from_conjugation_with_basis(group, &translations, standard_translation_basis(n, l))?;
    let report = IntermediateGroupReport {
        solvable: group.is_solvable(),
        quotient_solvable: module.quotient.is_solvable(),
        primitive: is_primitive(group)?,
        module_simple: is_simple(&module.rep)?,
    };
    if report.primitive != report.module_simple || report.solvable != report.quotient_solvable {
        return Err(Error::Defect(format!("criteria disagree: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(degree: usize, gens: &[&[usize]]) -> PermutationGroup {
        PermutationGroup::from_images(degree, gens).unwrap()
    }

    fn a4() -> PermutationGroup {
        grp(4, &[&[1, 0, 3, 2], &[1, 2, 0, 3]])
    }

    fn s4() -> PermutationGroup {
        grp(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]])
    }

    #[test]
    fn minimal_normal_examples() {
        let v4 = grp(4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]]);
        assert!(minimal_normal_translations(&a4()).unwrap().same_group(&v4));
        assert!(minimal_normal_translations(&s4()).unwrap().same_group(&v4));
        let c3 = grp(3, &[&[1, 2, 0]]);
        assert!(minimal_normal_translations(&c3).unwrap().same_group(&c3));
    }

    #[test]
    fn recover_a4_and_s4() {
        let r = recover_affine(&a4()).unwrap();
        assert_eq!((r.structure.l, r.structure.n), (2, 2));
        let point_group = r.point_group_representation().unwrap();
        assert_eq!(point_group.group().order(), 3);

        let r = recover_affine(&s4()).unwrap();
        assert_eq!((r.structure.l, r.structure.n), (2, 2));
        assert_eq!(r.point_group_representation().unwrap().group().order(), 6);
        // Involutions of V4 label the three nonzero vectors.
        let nonzero: std::collections::BTreeSet<Vec<u32>> = r
            .structure
            .translations
            .elements()
            .iter()
            .filter(|t| !t.is_identity())
            .map(|t| r.structure.labels[t.apply(0)].clone())
            .collect();
        assert_eq!(nonzero.len(), 3);
        assert!(!nonzero.contains(&vec![0, 0]));
    }

    #[test]
    fn recover_c2() {
        let r = recover_affine(&grp(2, &[&[1, 0]])).unwrap();
        assert_eq!((r.structure.l, r.structure.n), (2, 1));
        assert!(r.generator_maps[0].matrix.is_identity());
    }

    #[test]
    fn rejects_bad_inputs() {
        let s5 = grp(5, &[&[1, 2, 3, 4, 0], &[1, 0, 2, 3, 4]]);
        assert_eq!(
            recover_affine(&s5).unwrap_err(),
            Error::Precondition("not-solvable".into())
        );
        let c4 = grp(4, &[&[1, 2, 3, 0]]);
        assert_eq!(
            recover_affine(&c4).unwrap_err(),
            Error::Precondition("not-primitive".into())
        );
    }

    #[test]
    fn translation_labels_are_additive() {
        let r = recover_affine(&s4()).unwrap();
        let s = &r.structure;
        for t in s.translations.elements() {
            let shift = &s.labels[t.apply(s.origin)];
            for p in 0..4 {
                assert_eq!(s.labels[t.apply(p)], field::vec_add(2, &s.labels[p], shift));
            }
        }
    }

    #[test]
    fn alternative_origin_is_affinely_equivalent() {
        let g = agl_full(2, 3).unwrap();
        let base = recover_affine(&g).unwrap();
        for origin in 1..9 {
            let other = recover_affine_with_origin(&g, origin).unwrap();
            assert!(base.structure.equivalence_to(&other.structure).is_some());
        }
    }

    #[test]
    fn agl_orders() {
        assert_eq!(agl_full(2, 2).unwrap().order(), 24);
        assert_eq!(agl_full(1, 3).unwrap().order(), 6);
        assert_eq!(agl_full(3, 2).unwrap().order(), 8 * 168);
        assert!(matches!(agl_full(10, 2), Err(Error::Guard { .. })));
    }

    #[test]
    fn intermediate_examples() {
        let t = standard_translations(2, 2).unwrap();
        let r = intermediate_group_tests(2, 2, &t).unwrap();
        assert!(!r.primitive && !r.module_simple && r.solvable);

        let a4 = recover_affine(&a4()).unwrap();
        let c3 = a4.point_group_representation().unwrap();
        let mut gens = standard_translation_basis(2, 2);
        gens.extend(c3.images().iter().map(linear_permutation));
        let g = PermutationGroup::new(4, gens).unwrap();
        let r = intermediate_group_tests(2, 2, &g).unwrap();
        assert!(r.primitive && r.module_simple);

        // translations plus the coordinate swap: invariant line (1,1)
        let swap = FlMatrix::from_rows(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let mut gens = standard_translation_basis(2, 2);
        gens.push(linear_permutation(&swap));
        let g = PermutationGroup::new(4, gens).unwrap();
        assert_eq!(g.order(), 8);
        let r = intermediate_group_tests(2, 2, &g).unwrap();
        assert!(!r.primitive && !r.module_simple);
    }
}
