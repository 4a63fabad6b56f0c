//! Fixtures and independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use primex::perm::io::parse_group;
use primex::PermutationGroup;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> PermutationGroup {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    parse_group(&text).expect("fixture parses")
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Resultant of two polynomials (coefficients leading first) via the Sylvester matrix.
pub fn resultant(f: &[i128], g: &[i128]) -> i128 {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![0; size];
        row[shift..shift + f.len()].copy_from_slice(f);
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![0; size];
        row[shift..shift + g.len()].copy_from_slice(g);
        rows.push(row);
    }
    bareiss_det(rows)
}

/// `disc(f) = (-1)^{n(n-1)/2} Res(f, f')` for monic `f` of degree `n`.
pub fn discriminant_by_resultant(f: &[i128]) -> i128 {
    let n = f.len() - 1;
    let df: Vec<i128> = f[..n].iter().enumerate().map(|(i, &c)| c * (n - i) as i128).collect();
    let r = resultant(f, &df);
    if (n * (n - 1) / 2).is_multiple_of(2) {
        r
    } else {
        -r
    }
}

/// Whether a nonzero integer is a square in `Q_2`: even valuation and odd part `≡ 1 (mod 8)`.
pub fn is_square_2adic(x: i128) -> bool {
    assert_ne!(x, 0);
    let v = x.trailing_zeros();
    v.is_multiple_of(2) && (x >> v).rem_euclid(8) == 1
}

fn eval_wrapping(f: &[i128], x: u128) -> u128 {
    f.iter()
        .fold(0u128, |acc, &c| acc.wrapping_mul(x).wrapping_add(c as u128))
}

fn derivative(f: &[i128]) -> Vec<i128> {
    let n = f.len() - 1;
    f[..n].iter().enumerate().map(|(i, &c)| c * (n - i) as i128).collect()
}

/// Whether a monic integral polynomial with nonzero discriminant has a root in `Z_2`.
///
/// Refines residues `x mod 2^k` with `f(x) ≡ 0`; a residue with
/// `v(f(x)) > 2 v(f'(x))` lifts to a root by Hensel's lemma, and an empty
/// frontier means no root. Evaluation is exact modulo `2^128`.
pub fn has_2adic_root(f: &[i128]) -> bool {
    let df = derivative(f);
    let v = |x: u128| if x == 0 { 128 } else { x.trailing_zeros() };
    let mut frontier: Vec<u128> = vec![0, 1];
    for k in 1..100u32 {
        let mut next = Vec::new();
        for &x in &frontier {
            let fx = v(eval_wrapping(f, x));
            if fx < k {
                continue;
            }
            let dfx = v(eval_wrapping(&df, x));
            if fx > 2 * dfx {
                return true;
            }
            next.push(x);
            next.push(x | (1u128 << k));
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    panic!("root search did not settle");
}

/// Coefficients of `f(x + s)` for monic quartic `x⁴ + ax³ + bx² + cx + d`.
pub fn shift_quartic([a, b, c, d]: [i128; 4], s: i128) -> [i128; 4] {
    let full = [1, a, b, c, d];
    let mut out = [0i128; 5];
    // coefficient of x^(4-i) contributes to x^(4-i-j) with binomial(4-i, j) s^j
    for (i, &coef) in full.iter().enumerate() {
        let deg = 4 - i;
        let mut binom = 1i128;
        let mut power = 1i128;
        for j in 0..=deg {
            out[i + j] += coef * binom * power;
            binom = binom * (deg - j) as i128 / (j + 1) as i128;
            power *= s;
        }
    }
    [out[1], out[2], out[3], out[4]]
}
