//! Solvable primitive groups of degree `l^n`.
//!
//! Such a group contains the translations of a unique affine structure, splits
//! over them, and acts irreducibly on them through a solvable quotient, so it
//! is `F_l^n ⋊ H` for an irreducible solvable `H ≤ GL(n, l)`. Enumerating the
//! conjugacy classes of such `H` and merging permutation-isomorphic products
//! gives the complete list.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::affine::recover_affine;
use crate::blocks::is_primitive;
use crate::error::{Error, Result};
use crate::extensions::semidirect;
use crate::modrep::{
    irreducible_solvable_subgroups, module_from_conjugation_with_basis, FlMatrix, LinearRepresentation,
};
use crate::perm::io::write_group;
use crate::perm::{Permutation, PermutationGroup};

/// Largest degree accepted by [`permutation_isomorphic`].
pub const MAX_ISOMORPHISM_DEGREE: usize = 9;

#[derive(Clone, Debug)]
pub struct ClassificationEntry {
    pub l: u32,
    pub n: usize,
    /// Point groups in `GL(n, l)` giving this group, first one canonical.
    pub reps: Vec<LinearRepresentation>,
    pub group: PermutationGroup,
    pub order: u128,
    pub label: String,
}

fn cycle_type_histogram(g: &PermutationGroup) -> BTreeMap<Vec<usize>, usize> {
    let mut hist = BTreeMap::new();
    for e in g.elements() {
        *hist.entry(e.cycle_type()).or_insert(0) += 1;
    }
    hist
}

fn orbit_signature(g: &PermutationGroup) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

/// Calls `visit` on every arrangement of `rest` appended to `prefix` until it returns true.
fn search_arrangements(
    prefix: &mut Vec<usize>,
    rest: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if rest.is_empty() {
        return visit(prefix);
    }
    for i in 0..rest.len() {
        let x = rest.remove(i);
        prefix.push(x);
        let found = search_arrangements(prefix, rest, visit);
        prefix.pop();
        rest.insert(i, x);
        if found {
            return true;
        }
    }
    false
}

/// Whether some relabeling `σ` of the points gives `σ G σ⁻¹ = H`.
pub fn permutation_isomorphic(g: &PermutationGroup, h: &PermutationGroup) -> Result<bool> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            got: h.degree(),
        });
    }
    let degree = g.degree();
    if degree > MAX_ISOMORPHISM_DEGREE {
        return Err(Error::guard("degree", degree as u128, MAX_ISOMORPHISM_DEGREE as u128));
    }
    if g.order() != h.order()
        || orbit_signature(g) != orbit_signature(h)
        || cycle_type_histogram(g) != cycle_type_histogram(h)
    {
        return Ok(false);
    }
    // σ may be replaced by hσ for h ∈ H, so σ(0) ranges over H-orbit minima.
    let starts: Vec<usize> = h.orbits().iter().map(|o| o[0]).collect();
    let gens = g.generators();
    for start in starts {
        let mut prefix = vec![start];
        let mut rest: Vec<usize> = (0..degree).filter(|&p| p != start).collect();
        let found = search_arrangements(&mut prefix, &mut rest, &mut |images| {
            let sigma = Permutation::new(images.to_vec()).expect("arrangement");
            gens.iter().all(|x| h.contains(&x.conjugate_by(&sigma)))
        });
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

fn canonical_label(l: u32, n: usize, order: u128, index: usize) -> String {
    let degree = (l as u128).pow(n as u32);
    match (degree, order) {
        (4, 12) => "A4".into(),
        (4, 24) => "S4".into(),
        _ if n == 1 && order == degree * (degree - 1) => format!("AGL(1,{l})"),
        _ => format!("{l}^{n}:{order}#{index}"),
    }
}

pub fn solvable_primitive_groups(l: u32, n: usize) -> Result<Vec<ClassificationEntry>> {
    let reps = irreducible_solvable_subgroups(n, l)?;
    let mut built = reps
        .into_par_iter()
        .map(|rep| -> Result<(String, PermutationGroup, LinearRepresentation)> {
            let group = semidirect(&rep)?.l_group;
            if !is_primitive(&group)? || !group.is_solvable() {
                return Err(Error::Defect(format!(
                    "semidirect product of order {} is not solvable primitive",
                    group.order()
                )));
            }
            Ok((write_group(&group), group, rep))
        })
        .collect::<Result<Vec<_>>>()?;
    built.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));

    let mut entries: Vec<ClassificationEntry> = Vec::new();
    for (_, group, rep) in built {
        let order = group.order();
        let mut merged = false;
        for e in entries.iter_mut().filter(|e| e.order == order) {
            if permutation_isomorphic(&e.group, &group)? {
                e.reps.push(rep.clone());
                merged = true;
                break;
            }
        }
        if !merged {
            entries.push(ClassificationEntry {
                l,
                n,
                reps: vec![rep],
                group,
                order,
                label: String::new(),
            });
        }
    }
    let mut seen: BTreeMap<u128, usize> = BTreeMap::new();
    for e in &mut entries {
        let index = seen.entry(e.order).or_insert(0);
        *index += 1;
        e.label = canonical_label(l, n, e.order, *index);
    }
    Ok(entries)
}

/// Recovers the affine structure of `group`, rebuilds the split extension
/// from the conjugation module, and compares the result with `group`.
pub fn affine_round_trip(group: &PermutationGroup) -> Result<bool> {
    let recovered = recover_affine(group)?;
    let s = &recovered.structure;
    let module = module_from_conjugation_with_basis(group, &s.translations, s.basis.clone())?;
    let rebuilt = semidirect(&module.rep)?.l_group;
    permutation_isomorphic(&rebuilt, group)
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    pub index: usize,
    pub label: String,
    pub order: u128,
    pub file: String,
    /// Generator matrices of each merged point group.
    pub rep_matrices: Vec<Vec<FlMatrix>>,
    pub rep_orders: Vec<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Manifest {
    pub l: u32,
    pub n: usize,
    pub degree: usize,
    pub count: usize,
    pub entries: Vec<ManifestEntry>,
}

pub fn manifest(l: u32, n: usize, entries: &[ClassificationEntry]) -> Manifest {
    Manifest {
        l,
        n,
        degree: (l as usize).pow(n as u32),
        count: entries.len(),
        entries: entries
            .iter()
            .enumerate()
            .map(|(i, e)| ManifestEntry {
                index: i,
                label: e.label.clone(),
                order: e.order,
                file: format!("group_{i:02}.txt"),
                rep_matrices: e.reps.iter().map(|r| r.images().to_vec()).collect(),
                rep_orders: e.reps.iter().map(|r| r.group().order()).collect(),
            })
            .collect(),
    }
}

/// Writes one group file per entry and `manifest.json` into `dir`.
pub fn write_classification(
    dir: &Path,
    l: u32,
    n: usize,
    entries: &[ClassificationEntry],
) -> std::io::Result<Manifest> {
    fs::create_dir_all(dir)?;
    let m = manifest(l, n, entries);
    for (entry, meta) in entries.iter().zip(&m.entries) {
        let header = format!("# {} (order {})\n", meta.label, meta.order);
        fs::write(dir.join(&meta.file), header + &write_group(&entry.group))?;
    }
    let json = serde_json::to_string_pretty(&serde_json::to_value(&m).expect("serializable")).expect("serializable");
    fs::write(dir.join("manifest.json"), json + "\n")?;
    Ok(m)
}
