//! Arithmetic over the prime field `F_l` and dense matrices.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub fn is_prime(l: u64) -> bool {
    l >= 2 && (2..).take_while(|d| d * d <= l).all(|d| !l.is_multiple_of(d))
}

pub(crate) fn check_prime(l: u32) -> Result<()> {
    if !is_prime(l as u64) {
        return Err(Error::Precondition(format!("{l} is not prime")));
    }
    Ok(())
}

#[inline]
pub fn add(l: u32, a: u32, b: u32) -> u32 {
    ((a as u64 + b as u64) % l as u64) as u32
}

#[inline]
pub fn sub(l: u32, a: u32, b: u32) -> u32 {
    ((a as u64 + l as u64 - b as u64) % l as u64) as u32
}

#[inline]
pub fn mul(l: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % l as u64) as u32
}

#[inline]
pub fn neg(l: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        l - a
    }
}

pub fn pow(l: u32, a: u32, mut e: u64) -> u32 {
    let mut base = a % l;
    let mut acc = 1 % l;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(l, acc, base);
        }
        base = mul(l, base, base);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero element (Fermat).
pub fn inv(l: u32, a: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(l));
    pow(l, a, l as u64 - 2)
}

/// Smallest generator of `F_l^×`.
pub fn primitive_root(l: u32) -> u32 {
    if l == 2 {
        return 1;
    }
    let order = l as u64 - 1;
    let mut factors = Vec::new();
    let mut m = order;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..l)
        .find(|&g| factors.iter().all(|&q| pow(l, g, order / q) != 1))
        .expect("cyclic multiplicative group")
}

/// `v ↦ Σ v_i l^i`.
pub fn encode(l: u32, v: &[u32]) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * l as usize + x as usize)
}

pub fn decode(l: u32, n: usize, mut index: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for x in v.iter_mut() {
        *x = (index % l as usize) as u32;
        index /= l as usize;
    }
    v
}

pub fn vec_add(l: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| add(l, x, y)).collect()
}

pub fn vec_sub(l: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| sub(l, x, y)).collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(l: u32, mut rows: Vec<Vec<u32>>, ncols: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let s = inv(l, rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = mul(l, *x, s);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &p) in row.iter_mut().zip(&pivot_row).take(ncols) {
                    *x = sub(l, *x, mul(l, f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(l: u32, rows: Vec<Vec<u32>>, ncols: usize) -> usize {
    rref(l, rows, ncols).0.len()
}

/// A square matrix over `F_l`, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlMatrix {
    l: u32,
    n: usize,
    entries: Vec<u32>,
}

impl FlMatrix {
    pub fn from_rows(l: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        check_prime(l)?;
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix must be square and nonempty".into()));
        }
        Ok(Self {
            l,
            n,
            entries: rows.into_iter().flatten().map(|x| x % l).collect(),
        })
    }

    pub fn identity(l: u32, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % l;
        }
        Self { l, n, entries }
    }

    pub fn zero(l: u32, n: usize) -> Self {
        Self {
            l,
            n,
            entries: vec![0; n * n],
        }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(l: u32, columns: &[Vec<u32>]) -> Self {
        let n = columns.len();
        let mut entries = vec![0; n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * n + j] = x % l;
            }
        }
        Self { l, n, entries }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| add(self.l, acc, mul(self.l, self.get(i, j), v[j]))))
            .collect()
    }

    pub fn mul(&self, other: &FlMatrix) -> FlMatrix {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = add(self.l, *e, mul(self.l, a, other.get(k, j)));
                }
            }
        }
        FlMatrix { l: self.l, n, entries }
    }

    pub fn add(&self, other: &FlMatrix) -> FlMatrix {
        FlMatrix {
            l: self.l,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| add(self.l, a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FlMatrix) -> FlMatrix {
        FlMatrix {
            l: self.l,
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| sub(self.l, a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u32) -> FlMatrix {
        FlMatrix {
            l: self.l,
            n: self.n,
            entries: self.entries.iter().map(|&a| mul(self.l, a, s)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == FlMatrix::identity(self.l, self.n)
    }

    pub fn rank(&self) -> usize {
        rank(self.l, self.rows(), self.n)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn inverse(&self) -> Option<FlMatrix> {
        let n = self.n;
        let augmented: Vec<Vec<u32>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| u32::from(i == j)));
                row
            })
            .collect();
        let (rows, pivots) = rref(self.l, augmented, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(FlMatrix {
            l: self.l,
            n,
            entries: rows.into_iter().flat_map(|r| r[n..].to_vec()).collect(),
        })
    }

    pub fn conjugate_by(&self, t: &FlMatrix) -> FlMatrix {
        t.mul(self).mul(&t.inverse().expect("conjugating matrix is invertible"))
    }
}

impl fmt::Debug for FlMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.rows(), self.l)
    }
}

/// JSON form: array of row arrays.
impl Serialize for FlMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_and_roots() {
        assert_eq!(inv(7, 3), 5);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(2), 1);
        assert!(is_prime(199) && !is_prime(91) && !is_prime(1));
    }

    #[test]
    fn encode_decode() {
        for i in 0..27 {
            assert_eq!(encode(3, &decode(3, 3, i)), i);
        }
        assert_eq!(decode(2, 2, 2), vec![0, 1]);
    }

    #[test]
    fn matrix_inverse() {
        let a = FlMatrix::from_rows(3, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let b = a.inverse().unwrap();
        assert!(a.mul(&b).is_identity());
        let singular = FlMatrix::from_rows(2, vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(singular.inverse(), None);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,2],[0,1]]");
    }
}
