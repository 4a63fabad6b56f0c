//! `GL(n, l)` as a permutation group on the nonzero vectors of `F_l^n`.

use rayon::prelude::*;

use super::field::{self, check_prime, FlMatrix};
use super::rep::{is_simple, LinearRepresentation};
use crate::error::{Error, Result};
use crate::perm::{enumerate_subgroups, Permutation, PermutationGroup, MAX_SUBGROUP_SCAN_ORDER};

/// `|GL(n, l)| = ∏_{i<n} (l^n - l^i)`.
pub fn gl_order(n: usize, l: u32) -> u128 {
    let q = (l as u128).pow(n as u32);
    (0..n as u32).map(|i| q - (l as u128).pow(i)).product()
}

/// Point `k` is the vector with index `k + 1` under [`field::encode`].
pub fn matrix_to_permutation(m: &FlMatrix) -> Permutation {
    let (l, n) = (m.l(), m.dim());
    let size = (l as usize).pow(n as u32);
    let images = (1..size)
        .map(|k| field::encode(l, &m.apply(&field::decode(l, n, k))) - 1)
        .collect();
    Permutation::new(images).expect("invertible matrix permutes nonzero vectors")
}

/// Inverse of [`matrix_to_permutation`]; `None` if `p` is not linear.
pub fn permutation_to_matrix(p: &Permutation, l: u32, n: usize) -> Option<FlMatrix> {
    let columns: Vec<Vec<u32>> = (0..n)
        .map(|j| {
            let mut e = vec![0u32; n];
            e[j] = 1;
            field::decode(l, n, p.apply(field::encode(l, &e) - 1) + 1)
        })
        .collect();
    let m = FlMatrix::from_columns(l, &columns);
    (matrix_to_permutation(&m) == *p).then_some(m)
}

/// Generators of `GL(n, l)`: elementary transvections and `diag(ω, 1, …, 1)`.
pub fn gl_generators(n: usize, l: u32) -> Vec<FlMatrix> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut rows = FlMatrix::identity(l, n).rows();
                rows[i][j] = 1;
                gens.push(FlMatrix::from_rows(l, rows).expect("square"));
            }
        }
    }
    let omega = field::primitive_root(l);
    if omega != 1 {
        let mut rows = FlMatrix::identity(l, n).rows();
        rows[0][0] = omega;
        gens.push(FlMatrix::from_rows(l, rows).expect("square"));
    }
    gens
}

pub fn gl_group(n: usize, l: u32) -> Result<PermutationGroup> {
    check_prime(l)?;
    if n == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let degree = (l as usize).pow(n as u32) - 1;
    let gens = gl_generators(n, l).iter().map(matrix_to_permutation).collect();
    PermutationGroup::new(degree, gens)
}

/// Representation of a subgroup of `GL(n, l)` (given on nonzero vectors) on `F_l^n`.
pub fn natural_representation(subgroup: &PermutationGroup, l: u32, n: usize) -> Result<LinearRepresentation> {
    let images = subgroup
        .generators()
        .iter()
        .map(|p| {
            permutation_to_matrix(p, l, n).ok_or_else(|| Error::Precondition("permutation is not a linear map".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    LinearRepresentation::new(l, n, subgroup.clone(), images)
}

/// Conjugacy-class representatives of solvable subgroups of `GL(n, l)` acting
/// irreducibly on `F_l^n`, ascending by order.
pub fn irreducible_solvable_subgroups(n: usize, l: u32) -> Result<Vec<LinearRepresentation>> {
    check_prime(l)?;
    let order = gl_order(n, l);
    if order > MAX_SUBGROUP_SCAN_ORDER {
        return Err(Error::guard("|GL(n,l)|", order, MAX_SUBGROUP_SCAN_ORDER));
    }
    let gl = gl_group(n, l)?;
    let classes = enumerate_subgroups(&gl, true)?;
    let reps: Vec<Option<LinearRepresentation>> = classes
        .subgroups
        .par_iter()
        .map(|h| -> Result<Option<LinearRepresentation>> {
            if !h.is_solvable() {
                return Ok(None);
            }
            let rep = natural_representation(h, l, n)?;
            Ok(is_simple(&rep)?.then_some(rep))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(reps.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_orders_match_formula() {
        for (n, l, expected) in [(1, 2, 1), (1, 5, 4), (2, 2, 6), (2, 3, 48), (3, 2, 168)] {
            assert_eq!(gl_order(n, l), expected);
            assert_eq!(gl_group(n, l).unwrap().order(), expected);
        }
    }

    #[test]
    fn matrix_permutation_round_trip() {
        for m in gl_generators(2, 3) {
            let p = matrix_to_permutation(&m);
            assert_eq!(permutation_to_matrix(&p, 3, 2), Some(m));
        }
    }

    #[test]
    fn gl22_has_c3_and_s3() {
        let reps = irreducible_solvable_subgroups(2, 2).unwrap();
        let orders: Vec<u128> = reps.iter().map(|r| r.group().order()).collect();
        assert_eq!(orders, vec![3, 6]);
    }

    #[test]
    fn one_dimensional_counts_are_divisor_counts() {
        for l in [2u32, 3, 5, 7, 13] {
            let divisors = (1..l).filter(|d| (l - 1) % d == 0).count();
            assert_eq!(irreducible_solvable_subgroups(1, l).unwrap().len(), divisors, "l = {l}");
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(irreducible_solvable_subgroups(4, 2), Err(Error::Guard { .. })));
    }
}
