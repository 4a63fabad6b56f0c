//! Split extensions `1 → N → L → L/N → 1` with `N` elementary abelian.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::affine::{linear_permutation, standard_translation_basis, standard_translations};
use crate::error::{Error, Result};
use crate::modrep::{
    module_from_conjugation, module_from_conjugation_with_basis, ConjugationModule, LinearRepresentation,
};
use crate::perm::io::{parse_degree, parse_permutation, significant_lines, write_group};
use crate::perm::{conjugacy_classes, subgroup_sets, ElementTable, PermutationGroup, MAX_SUBGROUP_SCAN_ORDER};

/// A group `L` with a distinguished elementary abelian normal subgroup `N`.
#[derive(Clone, Debug)]
pub struct ExtensionPresentation {
    pub l_group: PermutationGroup,
    pub normal: PermutationGroup,
    /// Conjugation action of `L/N` on `N`.
    pub induced: ConjugationModule,
}

impl ExtensionPresentation {
    pub fn new(l_group: PermutationGroup, normal: PermutationGroup) -> Result<Self> {
        let induced = module_from_conjugation(&l_group, &normal)?;
        Ok(Self {
            l_group,
            normal,
            induced,
        })
    }

    /// Group file of `L`, then `normal k` and `k` generator lines of `N`.
    pub fn to_file_string(&self) -> String {
        let mut out = write_group(&self.l_group);
        let gens = self.normal.canonical_generators();
        out.push_str(&format!("normal {}\n", gens.len()));
        for g in gens {
            out.push_str(&format!("{g}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = significant_lines(text);
        let degree = parse_degree(&mut lines)?;
        let mut l_gens = Vec::new();
        let mut n_gens = Vec::new();
        let mut expected_normal = None;
        for (line_no, line) in lines {
            if let Some(rest) = line.strip_prefix("normal") {
                if expected_normal.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "repeated `normal` line".into(),
                    });
                }
                let k = rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected `normal k`, found `{line}`"),
                })?;
                expected_normal = Some((line_no, k));
                continue;
            }
            let g = parse_permutation(line, degree, line_no)?;
            match expected_normal {
                None => l_gens.push(g),
                Some(_) => n_gens.push(g),
            }
        }
        let (line_no, k) = expected_normal.ok_or(Error::Parse {
            line: 1,
            message: "missing `normal k` line".into(),
        })?;
        if n_gens.len() != k {
            return Err(Error::Parse {
                line: line_no,
                message: format!("`normal {k}` followed by {} generators", n_gens.len()),
            });
        }
        let l_group = PermutationGroup::new(degree, l_gens)?;
        let normal = l_group.subgroup(n_gens)?;
        Self::new(l_group, normal)
    }

    /// `|L| / |N|`.
    pub fn quotient_order(&self) -> u128 {
        self.l_group.order() / self.normal.order()
    }
}

/// `F_l^n ⋊ G` on the `l^n` vectors: translations by basis vectors together
/// with the matrices of `rep`'s generators. When `rep` is not faithful the
/// result is `F_l^n ⋊ ρ(G)`, of order `l^n·|ρ(G)|`.
pub fn semidirect(rep: &LinearRepresentation) -> Result<ExtensionPresentation> {
    let (l, n) = (rep.l(), rep.dim());
    let translations = standard_translations(n, l)?;
    let mut gens = standard_translation_basis(n, l);
    gens.extend(rep.images().iter().map(linear_permutation));
    let l_group = PermutationGroup::new(translations.degree(), gens)?;
    let induced = module_from_conjugation_with_basis(&l_group, &translations, standard_translation_basis(n, l))?;
    Ok(ExtensionPresentation {
        l_group,
        normal: translations,
        induced,
    })
}

fn guarded_table(e: &ExtensionPresentation) -> Result<ElementTable> {
    ElementTable::new(&e.l_group, MAX_SUBGROUP_SCAN_ORDER)
}

fn complement_sets(e: &ExtensionPresentation, table: &ElementTable) -> Vec<crate::perm::ElemSet> {
    let n_set = table.set_of(&e.normal, &e.l_group).expect("N ≤ L");
    let target = e.quotient_order() as usize;
    subgroup_sets(table)
        .into_iter()
        .filter(|h| h.count() == target && h.intersection_count(&n_set) == 1)
        .collect()
}

/// Every `H ≤ L` with `H ∩ N = 1` and `|H| = |L/N|`, in subgroup-lattice order.
pub fn complements(e: &ExtensionPresentation) -> Result<Vec<PermutationGroup>> {
    let table = guarded_table(e)?;
    Ok(complement_sets(e, &table)
        .iter()
        .map(|h| table.to_group(h, e.l_group.degree()))
        .collect())
}

/// Number of `L`-conjugacy classes of complements.
pub fn complement_classes(e: &ExtensionPresentation) -> Result<usize> {
    Ok(complement_summary(e)?.classes)
}

pub fn is_split(e: &ExtensionPresentation) -> Result<bool> {
    Ok(complement_summary(e)?.count > 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementSummary {
    pub count: usize,
    pub classes: usize,
    pub split: bool,
}

/// Count and conjugacy classes of complements from a single subgroup scan.
pub fn complement_summary(e: &ExtensionPresentation) -> Result<ComplementSummary> {
    let table = guarded_table(e)?;
    let sets = complement_sets(e, &table);
    let classes: BTreeSet<usize> = conjugacy_classes(&table, &sets).into_iter().collect();
    Ok(ComplementSummary {
        count: sets.len(),
        classes: classes.len(),
        split: !sets.is_empty(),
    })
}
