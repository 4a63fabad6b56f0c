//! Inhomogeneous cochains `C^i = Map(G^i, M)` for `M = F_l^n` and the
//! dimensions of `H^0`, `H^1`, `H^2`.
//!
//! Coboundaries:
//!
//! ```text
//! (d⁰m)(g)       = g·m − m
//! (d¹f)(g,h)     = g·f(h) − f(gh) + f(g)
//! (d²f)(g,h,k)   = g·f(h,k) − f(gh,k) + f(g,hk) − f(g,h)
//! ```
//!
//! `dim Z²` is computed without materializing `d²`. Fix a breadth-first tree
//! of the Cayley graph for right multiplication by the generators, writing
//! each `y` at depth ≥ 2 as `p(y)·s(y)`. The equation `(d²f)(g,p(y),s(y)) = 0`
//! reads `f(g,y) = f(g,p(y)) + f(g·p(y),s(y)) − g·f(p(y),s(y))`, so on its
//! solution set every `f(g,y)` is determined by the free values `f(x,t)` with
//! `t` the identity or a generator. `Z²` is the kernel of the remaining
//! equations restricted to those free values. Since `Z² ⊇ B²`, elimination
//! stops as soon as the rank forces `dim Z² = dim B²`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modrep::{field, irreducible_solvable_subgroups, is_faithful, is_simple, FlMatrix, LinearRepresentation};
use crate::perm::ElementTable;

/// Largest group order accepted by cochain computations.
pub const MAX_COCHAIN_GROUP_ORDER: u128 = 48;
/// Largest module dimension accepted by cochain computations.
pub const MAX_COCHAIN_DIM: usize = 3;

/// Indexing of `C^i`: element tuples in lexicographic chain order, then coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    pub degree: usize,
    pub group_order: usize,
    pub n: usize,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.group_order.pow(self.degree as u32) * self.n
    }

    pub fn index(&self, tuple: &[usize], coord: usize) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &g| acc * self.group_order + g) * self.n + coord
    }
}

/// Row-major sparse matrix over `F_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub l: u32,
    pub ncols: usize,
    /// `(column, value)` pairs per row, sorted by column, values nonzero.
    pub rows: Vec<Vec<(usize, u32)>>,
}

impl SparseMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `self · other` as linear maps (`other` applied first).
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = Vec::new();
                for &(k, a) in row {
                    acc.extend(other.rows[k].iter().map(|&(j, b)| (j, field::mul(self.l, a, b))));
                }
                normalize_row(self.l, acc)
            })
            .collect();
        SparseMatrix {
            l: self.l,
            ncols: other.ncols,
            rows,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Rank by incremental dense elimination.
    pub fn rank(&self) -> usize {
        let mut echelon = Echelon::new(self.l, self.ncols);
        for row in &self.rows {
            let mut dense = vec![0; self.ncols];
            for &(j, v) in row {
                dense[j] = v;
            }
            echelon.insert(dense);
        }
        echelon.rank()
    }
}

fn normalize_row(l: u32, mut entries: Vec<(usize, u32)>) -> Vec<(usize, u32)> {
    entries.sort_unstable_by_key(|&(j, _)| j);
    let mut out: Vec<(usize, u32)> = Vec::with_capacity(entries.len());
    for (j, v) in entries {
        match out.last_mut() {
            Some((k, w)) if *k == j => *w = field::add(l, *w, v),
            _ => out.push((j, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// Rows with distinct leading columns, each leading entry 1.
struct Echelon {
    l: u32,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Vec<u32>>,
}

impl Echelon {
    fn new(l: u32, ncols: usize) -> Self {
        Self {
            l,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns whether the rank grew.
    fn insert(&mut self, mut row: Vec<u32>) -> bool {
        let l = self.l as u64;
        for c in 0..row.len() {
            let x = row[c];
            if x == 0 {
                continue;
            }
            match self.pivot_row[c] {
                Some(r) => {
                    let f = l - x as u64;
                    let pivot = &self.rows[r];
                    for j in c..row.len() {
                        if pivot[j] != 0 {
                            row[j] = ((row[j] as u64 + f * pivot[j] as u64) % l) as u32;
                        }
                    }
                }
                None => {
                    let s = field::inv(self.l, x);
                    for v in row[c..].iter_mut() {
                        *v = field::mul(self.l, *v, s);
                    }
                    self.pivot_row[c] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }
}

struct Setup {
    l: u32,
    n: usize,
    table: ElementTable,
    /// `ρ(g)` in chain order.
    mats: Vec<FlMatrix>,
}

fn setup(rep: &LinearRepresentation) -> Result<Setup> {
    if rep.dim() > MAX_COCHAIN_DIM {
        return Err(Error::guard(
            "module dimension",
            rep.dim() as u128,
            MAX_COCHAIN_DIM as u128,
        ));
    }
    let table = ElementTable::new(rep.group(), MAX_COCHAIN_GROUP_ORDER)?;
    Ok(Setup {
        l: rep.l(),
        n: rep.dim(),
        table,
        mats: rep.element_matrices().to_vec(),
    })
}

/// The coboundary `d^i : C^i → C^{i+1}` for `i ∈ {0, 1, 2}`.
pub fn coboundary_matrix(rep: &LinearRepresentation, i: usize) -> Result<SparseMatrix> {
    if i > 2 {
        return Err(Error::Precondition(format!("coboundary degree {i} is not in 0..=2")));
    }
    let s = setup(rep)?;
    let (l, n, m) = (s.l, s.n, s.table.len());
    let src = CochainSpace {
        degree: i,
        group_order: m,
        n,
    };
    let dst = CochainSpace {
        degree: i + 1,
        group_order: m,
        n,
    };
    let minus_one = l - 1;
    let tuples: Vec<Vec<usize>> = (0..m.pow(i as u32 + 1))
        .map(|mut k| {
            let mut t = vec![0; i + 1];
            for slot in t.iter_mut().rev() {
                *slot = k % m;
                k /= m;
            }
            t
        })
        .collect();
    let rows: Vec<Vec<Vec<(usize, u32)>>> = tuples
        .par_iter()
        .map(|t| {
            let g = t[0];
            let rho = &s.mats[g];
            (0..n)
                .map(|c| {
                    let mut e: Vec<(usize, u32)> = Vec::new();
                    // g·f(rest)
                    for j in 0..n {
                        e.push((src.index(&t[1..], j), rho.get(c, j)));
                    }
                    // alternating inner terms f(..., t_k t_{k+1}, ...)
                    for k in 0..i {
                        let mut merged = t.clone();
                        merged[k] = s.table.mul(t[k], t[k + 1]);
                        merged.remove(k + 1);
                        let sign = if k % 2 == 0 { minus_one } else { 1 };
                        e.push((src.index(&merged, c), sign));
                    }
                    // (−1)^{i+1} f(t_0, …, t_{i−1})
                    let sign = if i.is_multiple_of(2) { minus_one } else { 1 };
                    e.push((src.index(&t[..i], c), sign));
                    normalize_row(l, e)
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<(usize, u32)>> = rows.into_iter().flatten().collect();
    debug_assert_eq!(rows.len(), dst.dim());
    Ok(SparseMatrix {
        l,
        ncols: src.dim(),
        rows,
    })
}

/// Dimensions over `F_l` of cocycle and coboundary spaces in degrees 0 to 2, with their quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub l: u32,
    pub n: usize,
    pub order: u128,
    pub h0: usize,
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

fn rank_d0(s: &Setup) -> usize {
    let mut rows = Vec::new();
    for m in &s.mats {
        rows.extend(m.sub(&FlMatrix::identity(s.l, s.n)).rows());
    }
    field::rank(s.l, rows, s.n)
}

/// Rank of `d¹`, stopping once it reaches `bound`.
fn rank_d1(s: &Setup, bound: usize) -> usize {
    let (l, n, m) = (s.l, s.n, s.table.len());
    let c1 = CochainSpace {
        degree: 1,
        group_order: m,
        n,
    };
    let mut echelon = Echelon::new(l, c1.dim());
    for g in 0..m {
        for h in 0..m {
            let gh = s.table.mul(g, h);
            for c in 0..n {
                let mut row = vec![0u32; c1.dim()];
                for j in 0..n {
                    let k = c1.index(&[h], j);
                    row[k] = field::add(l, row[k], s.mats[g].get(c, j));
                }
                let k = c1.index(&[gh], c);
                row[k] = field::sub(l, row[k], 1);
                let k = c1.index(&[g], c);
                row[k] = field::add(l, row[k], 1);
                echelon.insert(row);
                if echelon.rank() == bound {
                    return bound;
                }
            }
        }
    }
    echelon.rank()
}

/// Cayley-graph tree and the expressions of every `f(g, y)` in free variables.
struct Tree {
    /// Free-variable slot of each element (identity and generators), else `None`.
    free_slot: Vec<Option<usize>>,
    parent: Vec<Option<(usize, usize)>>,
    order: Vec<usize>,
    nfree: usize,
}

fn cayley_tree(table: &ElementTable, gens: &[usize]) -> Tree {
    let m = table.len();
    let mut free_slot = vec![None; m];
    free_slot[0] = Some(0);
    let mut nfree = 1;
    let mut parent = vec![None; m];
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut order = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for &s in gens {
        if !seen[s] {
            seen[s] = true;
            free_slot[s] = Some(nfree);
            nfree += 1;
            queue.push_back(s);
        }
    }
    while let Some(p) = queue.pop_front() {
        for &s in gens {
            let y = table.mul(p, s);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((p, s));
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    debug_assert!(seen.iter().all(|&b| b), "generators generate");
    Tree {
        free_slot,
        parent,
        order,
        nfree,
    }
}

/// `n × V` coefficient block of `f(g, y)` over the free variables.
type Expr = Vec<u32>;

fn cocycle_expressions(s: &Setup, tree: &Tree, nvars: usize) -> Vec<Vec<Expr>> {
    let (l, n, m) = (s.l, s.n, s.table.len());
    let var = |x: usize, slot: usize, c: usize| (x * tree.nfree + slot) * n + c;
    (0..m)
        .into_par_iter()
        .map(|g| {
            let mut exprs: Vec<Expr> = vec![Vec::new(); m];
            for (y, slot) in tree.free_slot.iter().enumerate() {
                if let Some(slot) = slot {
                    let mut e = vec![0; n * nvars];
                    for c in 0..n {
                        e[c * nvars + var(g, *slot, c)] = 1;
                    }
                    exprs[y] = e;
                }
            }
            for &y in &tree.order {
                let (p, sg) = tree.parent[y].expect("non-free element has a parent");
                let gp = s.table.mul(g, p);
                let slot = tree.free_slot[sg].expect("generator slot");
                let pslot_rho = &s.mats[g];
                let mut e = exprs[p].clone();
                for c in 0..n {
                    let k = c * nvars + var(gp, slot, c);
                    e[k] = field::add(l, e[k], 1);
                    // − Σ_j ρ(g)_{cj} f(p, s)_j
                    for j in 0..n {
                        let a = pslot_rho.get(c, j);
                        if a != 0 {
                            let k = c * nvars + var(p, slot, j);
                            e[k] = field::sub(l, e[k], a);
                        }
                    }
                }
                exprs[y] = e;
            }
            exprs
        })
        .collect()
}

/// `dim Z²`, stopping once it is forced down to `lower_bound`.
fn dim_z2(s: &Setup, gens: &[usize], lower_bound: usize) -> usize {
    let (l, n, m) = (s.l, s.n, s.table.len());
    let tree = cayley_tree(&s.table, gens);
    let nvars = m * tree.nfree * n;
    let exprs = cocycle_expressions(s, &tree, nvars);
    let target = nvars - lower_bound;
    let mut echelon = Echelon::new(l, nvars);
    if target == 0 {
        return nvars;
    }
    let is_tree_pair = |h: usize, k: usize| {
        let y = s.table.mul(h, k);
        tree.parent[y] == Some((h, k))
    };
    for g in 0..m {
        let batch: Vec<Vec<u32>> = (0..m)
            .into_par_iter()
            .flat_map_iter(|h| {
                let gh = s.table.mul(g, h);
                let rho = &s.mats[g];
                let exprs = &exprs;
                (0..m).filter(move |&k| !is_tree_pair(h, k)).flat_map(move |k| {
                    let hk = s.table.mul(h, k);
                    (0..n).map(move |c| {
                        let mut row = vec![0u32; nvars];
                        let mut axpy = |coef: u32, src: &[u32]| {
                            if coef == 0 {
                                return;
                            }
                            for (r, &x) in row.iter_mut().zip(src) {
                                if x != 0 {
                                    *r = field::add(l, *r, field::mul(l, coef, x));
                                }
                            }
                        };
                        for j in 0..n {
                            axpy(rho.get(c, j), &exprs[h][k][j * nvars..(j + 1) * nvars]);
                        }
                        let block = |e: &Expr| e[c * nvars..(c + 1) * nvars].to_vec();
                        axpy(l - 1, &block(&exprs[gh][k]));
                        axpy(1, &block(&exprs[g][hk]));
                        axpy(l - 1, &block(&exprs[g][h]));
                        row
                    })
                })
            })
            .collect();
        for row in batch {
            echelon.insert(row);
            if echelon.rank() == target {
                return nvars - target;
            }
        }
    }
    nvars - echelon.rank()
}

fn element_generators(s: &Setup, rep: &LinearRepresentation) -> Vec<usize> {
    let mut gens: Vec<usize> = rep
        .group()
        .generators()
        .iter()
        .map(|g| rep.group().element_index(g).expect("generator is an element"))
        .filter(|&i| i != 0)
        .collect();
    gens.sort_unstable();
    gens.dedup();
    debug_assert!(gens.iter().all(|&g| g < s.table.len()));
    gens
}

pub fn cohomology(rep: &LinearRepresentation) -> Result<CohomologyReport> {
    let s = setup(rep)?;
    let (n, m) = (s.n, s.table.len());
    let r0 = rank_d0(&s);
    let h0 = n - r0;
    let b1 = r0;
    let r1 = rank_d1(&s, m * n - b1);
    let z1 = m * n - r1;
    let b2 = r1;
    let z2 = dim_z2(&s, &element_generators(&s, rep), b2);
    Ok(CohomologyReport {
        l: s.l,
        n,
        order: m as u128,
        h0,
        z1,
        b1,
        h1: z1 - b1,
        z2,
        b2,
        h2: z2 - b2,
    })
}

/// One faithful simple solvable module and its low cohomology.
#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub n: usize,
    pub l: u32,
    pub order: u128,
    pub report: CohomologyReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    /// Candidates above the cochain guard, as `(n, l, order)`.
    pub skipped: Vec<(usize, u32, u128)>,
}

/// Cohomology of each candidate. Candidates must be solvable groups acting faithfully and simply.
/// A nonzero `H¹` or `H²` is returned as a defect.
pub fn vanishing_sweep(candidates: &[LinearRepresentation]) -> Result<SweepReport> {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for rep in candidates {
        if !rep.group().is_solvable() || !is_simple(rep)? || !is_faithful(rep)? {
            return Err(Error::Precondition(
                "sweep candidates must be faithful, simple and solvable".into(),
            ));
        }
        let order = rep.group().order();
        if order > MAX_COCHAIN_GROUP_ORDER || rep.dim() > MAX_COCHAIN_DIM {
            skipped.push((rep.dim(), rep.l(), order));
            continue;
        }
        let report = cohomology(rep)?;
        if report.h1 != 0 || report.h2 != 0 {
            return Err(Error::Defect(format!(
                "nonvanishing cohomology for a faithful simple solvable module: {report:?}"
            )));
        }
        entries.push(SweepEntry {
            n: rep.dim(),
            l: rep.l(),
            order,
            report,
        });
    }
    Ok(SweepReport { entries, skipped })
}

/// [`vanishing_sweep`] over the irreducible solvable subgroups of each `GL(n, l)`.
pub fn vanishing_sweep_over(dims: &[(usize, u32)]) -> Result<SweepReport> {
    let mut candidates = Vec::new();
    for &(n, l) in dims {
        candidates.extend(irreducible_solvable_subgroups(n, l)?);
    }
    vanishing_sweep(&candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::natural_representation;
    use crate::perm::PermutationGroup;

    fn cyclic(k: usize) -> PermutationGroup {
        let images: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        PermutationGroup::from_images(k, &[&images]).unwrap()
    }

    fn rep1(l: u32, group: PermutationGroup, scalars: &[u32]) -> LinearRepresentation {
        let images = scalars
            .iter()
            .map(|&x| FlMatrix::from_rows(l, vec![vec![x]]).unwrap())
            .collect();
        LinearRepresentation::new(l, 1, group, images).unwrap()
    }

    fn c3_on_f2_squared() -> LinearRepresentation {
        let m = FlMatrix::from_rows(2, vec![vec![0, 1], vec![1, 1]]).unwrap();
        LinearRepresentation::new(2, 2, cyclic(3), vec![m]).unwrap()
    }

    fn s3_on_f2_squared() -> LinearRepresentation {
        let gl = crate::modrep::gl_group(2, 2).unwrap();
        natural_representation(&gl, 2, 2).unwrap()
    }

    /// Dimensions from the full coboundary matrices.
    fn dense_report(rep: &LinearRepresentation) -> (usize, usize, usize) {
        let r: Vec<usize> = (0..3).map(|i| coboundary_matrix(rep, i).unwrap().rank()).collect();
        let m = rep.group().order() as usize;
        let n = rep.dim();
        (n - r[0], m * n - r[1] - r[0], m * m * n - r[2] - r[1])
    }

    /// Counts cocycles by enumerating every cochain.
    fn brute_force(rep: &LinearRepresentation) -> (usize, usize, usize) {
        let l = rep.l();
        let d: Vec<SparseMatrix> = (0..3).map(|i| coboundary_matrix(rep, i).unwrap()).collect();
        let kernel_size = |mat: &SparseMatrix| -> usize {
            let dim = mat.ncols;
            let total = (l as usize).pow(dim as u32);
            (0..total)
                .filter(|&k| {
                    let v = field::decode(l, dim, k);
                    mat.rows.iter().all(|row| {
                        row.iter()
                            .fold(0, |acc, &(j, a)| field::add(l, acc, field::mul(l, a, v[j])))
                            == 0
                    })
                })
                .count()
        };
        let log = |x: usize| -> usize {
            let mut k = 0;
            let mut y = 1;
            while y < x {
                y *= l as usize;
                k += 1;
            }
            assert_eq!(y, x);
            k
        };
        let z0 = log(kernel_size(&d[0]));
        let z1 = log(kernel_size(&d[1]));
        let z2 = log(kernel_size(&d[2]));
        let n = rep.dim();
        let m = rep.group().order() as usize;
        let b1 = n - z0;
        let b2 = m * n - z1;
        (z0, z1 - b1, z2 - b2)
    }

    #[test]
    fn d_squared_is_zero() {
        for rep in [s3_on_f2_squared(), c3_on_f2_squared(), rep1(3, cyclic(2), &[2])] {
            let d0 = coboundary_matrix(&rep, 0).unwrap();
            let d1 = coboundary_matrix(&rep, 1).unwrap();
            let d2 = coboundary_matrix(&rep, 2).unwrap();
            assert!(d1.compose(&d0).is_zero());
            assert!(d2.compose(&d1).is_zero());
        }
    }

    #[test]
    fn cochain_dimensions() {
        let rep = s3_on_f2_squared();
        let d2 = coboundary_matrix(&rep, 2).unwrap();
        assert_eq!(d2.ncols, 36 * 2);
        assert_eq!(d2.nrows(), 216 * 2);
    }

    #[test]
    fn trivial_c2_on_f2() {
        let rep = rep1(2, cyclic(2), &[1]);
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (1, 1, 1));
        assert_eq!(brute_force(&rep), (1, 1, 1));
    }

    #[test]
    fn sign_c2_on_f3() {
        let rep = rep1(3, cyclic(2), &[2]);
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (0, 0, 0));
        assert_eq!(brute_force(&rep), (0, 0, 0));
    }

    #[test]
    fn trivial_c3_on_f3() {
        let rep = rep1(3, cyclic(3), &[1]);
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (1, 1, 1));
        assert_eq!(dense_report(&rep), (1, 1, 1));
    }

    #[test]
    fn c3_on_f2_squared_vanishes() {
        let rep = c3_on_f2_squared();
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (0, 0, 0));
        assert_eq!(dense_report(&rep), (0, 0, 0));
    }

    #[test]
    fn s3_on_f2_squared_vanishes() {
        let rep = s3_on_f2_squared();
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (0, 0, 0));
        assert_eq!(r.b1, 2);
        assert_eq!(dense_report(&rep), (0, 0, 0));
    }

    #[test]
    fn klein_four_trivial_on_f2() {
        // H^1 = Hom(V4, F2) has dimension 2; H^2 has dimension 3.
        let v4 = PermutationGroup::from_images(4, &[&[1, 0, 3, 2], &[2, 3, 0, 1]]).unwrap();
        let rep = rep1(2, v4, &[1, 1]);
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (1, 2, 3));
        assert_eq!(dense_report(&rep), (1, 2, 3));
    }

    #[test]
    fn tree_elimination_matches_dense_ranks() {
        let s3 = PermutationGroup::from_images(3, &[&[1, 0, 2], &[1, 2, 0]]).unwrap();
        let d4 = PermutationGroup::from_images(4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]]).unwrap();
        let reps = [
            rep1(3, s3.clone(), &[1, 1]),
            rep1(3, s3.clone(), &[2, 1]),
            rep1(2, s3, &[1, 1]),
            rep1(2, d4.clone(), &[1, 1]),
            rep1(5, d4, &[4, 1]),
            rep1(2, cyclic(4), &[1]),
        ];
        for rep in reps {
            let r = cohomology(&rep).unwrap();
            assert_eq!((r.h0, r.h1, r.h2), dense_report(&rep), "{rep:?}");
        }
    }

    #[test]
    fn trivial_group() {
        let rep = LinearRepresentation::trivial(5, 2, PermutationGroup::trivial(3)).unwrap();
        let r = cohomology(&rep).unwrap();
        assert_eq!((r.h0, r.h1, r.h2), (2, 0, 0));
    }

    #[test]
    fn h0_matches_fixed_subspace() {
        for rep in [s3_on_f2_squared(), rep1(2, cyclic(2), &[1]), rep1(7, cyclic(3), &[2])] {
            assert_eq!(cohomology(&rep).unwrap().h0, rep.fixed_subspace().dim());
        }
    }

    #[test]
    fn sweep_small() {
        let report = vanishing_sweep_over(&[(2, 2), (1, 3)]).unwrap();
        assert_eq!(report.entries.len(), 2 + 2);
        assert!(report.skipped.is_empty());
    }

    #[test]
    fn guard() {
        let s5 = PermutationGroup::from_images(5, &[&[1, 2, 3, 4, 0], &[1, 0, 2, 3, 4]]).unwrap();
        let rep = LinearRepresentation::trivial(2, 1, s5).unwrap();
        assert!(matches!(cohomology(&rep), Err(Error::Guard { .. })));
    }
}
