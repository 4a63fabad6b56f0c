//! 2-adic numbers at fixed precision and Galois types of Eisenstein quartics over `Q₂`.
//!
//! For an irreducible quartic the Galois group is primitive (`A₄` or `S₄`)
//! exactly when the resolvent cubic has no root; it is then `A₄` iff the
//! discriminant is a square. Eisenstein polynomials are irreducible, so these
//! two tests classify them.
//!
//! The resolvent used here has roots `αᵢαⱼ + αₖαₗ`:
//! `y³ − b y² + (ac − 4d) y + (4bd − a²d − c²)` for `x⁴ + ax³ + bx² + cx + d`.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 64;
pub const MIN_PRECISION: u32 = 16;
/// Leaves eight guard bits below the 128-bit working width.
pub const MAX_PRECISION: u32 = 112;
const GUARD_BITS: u32 = 8;
/// Largest `m` accepted by [`eisenstein_scan`].
pub const MAX_SCAN_BITS: u32 = 6;
const MAX_LIFT_CANDIDATES: usize = 4096;

fn check_precision(precision: u32) -> Result<()> {
    if !(MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
        return Err(Error::Precondition(format!(
            "precision {precision} outside {MIN_PRECISION}..={MAX_PRECISION}"
        )));
    }
    Ok(())
}

#[inline]
fn mask(bits: u32) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

/// Inverse of an odd number modulo `2^128`.
fn inv_odd(u: u128) -> u128 {
    debug_assert!(u & 1 == 1);
    // x ≡ u⁻¹ mod 8 already; each step doubles the correct bits.
    let mut x = u;
    for _ in 0..6 {
        x = x.wrapping_mul(2u128.wrapping_sub(u.wrapping_mul(x)));
    }
    x
}

fn v2_i128(x: i128) -> Option<u32> {
    (x != 0).then(|| x.trailing_zeros())
}

/// `2^v · u` with `u` odd and known modulo `2^precision`, or zero.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicNumber {
    valuation: Option<i64>,
    unit: u128,
    precision: u32,
    exact: Option<i128>,
}

impl TwoAdicNumber {
    pub fn zero() -> Self {
        Self {
            valuation: None,
            unit: 0,
            precision: u32::MAX,
            exact: Some(0),
        }
    }

    /// A rational integer; the exact value is kept alongside the unit.
    pub fn from_int(x: i128, precision: u32) -> Self {
        match v2_i128(x) {
            None => Self::zero(),
            Some(v) => Self {
                valuation: Some(v as i64),
                unit: ((x >> v) as u128) & mask(precision),
                precision,
                exact: Some(x),
            },
        }
    }

    pub fn from_parts(valuation: i64, unit: u128, precision: u32) -> Result<Self> {
        if unit & 1 == 0 || precision == 0 {
            return Err(Error::Precondition(
                "unit must be odd and carry at least one bit".into(),
            ));
        }
        Ok(Self {
            valuation: Some(valuation),
            unit: unit & mask(precision),
            precision: precision.min(128),
            exact: None,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    pub fn unit(&self) -> u128 {
        self.unit
    }

    /// Number of known unit bits.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn exact(&self) -> Option<i128> {
        self.exact
    }

    /// Drops the exact value, keeping `precision` unit bits.
    pub fn truncate(&self, precision: u32) -> Self {
        let precision = precision.min(self.precision);
        Self {
            valuation: self.valuation,
            unit: self.unit & mask(precision),
            precision,
            exact: None,
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        Self {
            valuation: self.valuation,
            unit: self.unit.wrapping_neg() & mask(self.precision),
            precision: self.precision,
            exact: self.exact.and_then(i128::checked_neg),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (Some(v), Some(w)) = (self.valuation, other.valuation) else {
            return Self::zero();
        };
        if let Some(x) = self.exact.zip(other.exact).and_then(|(a, b)| a.checked_mul(b)) {
            return Self::from_int(x, self.precision.min(other.precision));
        }
        let precision = self.precision.min(other.precision);
        Self {
            valuation: Some(v + w),
            unit: self.unit.wrapping_mul(other.unit) & mask(precision),
            precision,
            exact: None,
        }
    }

    /// Unit bits available for an operand, counting all bits of an exact value.
    fn unit_bits(&self) -> (u128, u32) {
        match (self.exact, self.valuation) {
            (Some(x), Some(v)) => ((x >> v) as u128, 128),
            _ => (self.unit, self.precision),
        }
    }

    /// Fails with a precision error when the sum vanishes to every known bit.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let (Some(v), Some(w)) = (self.valuation, other.valuation) else {
            return Ok(if self.is_zero() { *other } else { *self });
        };
        if let Some(x) = self.exact.zip(other.exact).and_then(|(a, b)| a.checked_add(b)) {
            return Ok(Self::from_int(x, self.precision.min(other.precision)));
        }
        let vmin = v.min(w);
        let (ux, kx) = self.unit_bits();
        let (uy, ky) = other.unit_bits();
        // absolute precision of each operand, relative to 2^vmin
        let ax = (v - vmin) as u64 + kx as u64;
        let ay = (w - vmin) as u64 + ky as u64;
        let bits = ax.min(ay).min(128) as u32;
        let shifted = |u: u128, shift: i64| if shift >= 128 { 0 } else { u << shift };
        let s = shifted(ux, v - vmin).wrapping_add(shifted(uy, w - vmin)) & mask(bits);
        if s == 0 {
            return Err(Error::Precision(format!(
                "sum vanishes to all {bits} known bits above 2^{vmin}"
            )));
        }
        let t = s.trailing_zeros();
        let precision = (bits - t).min(self.precision.max(other.precision));
        Ok(Self {
            valuation: Some(vmin + t as i64),
            unit: (s >> t) & mask(precision),
            precision,
            exact: None,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<Self> {
        let Some(v) = self.valuation else {
            return Err(Error::Precondition("inversion of zero".into()));
        };
        let exact = match self.exact {
            Some(1) => Some(1),
            Some(-1) => Some(-1),
            _ => None,
        };
        Ok(Self {
            valuation: Some(-v),
            unit: inv_odd(self.unit_bits().0) & mask(self.precision),
            precision: self.precision,
            exact,
        })
    }
}

impl fmt::Debug for TwoAdicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0"),
            Some(v) => write!(f, "2^{v}·{} (mod 2^{})", self.unit, self.precision),
        }
    }
}

/// JSON: `valuation` (null for zero), `unit` and `exact` as decimal strings.
impl Serialize for TwoAdicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            valuation: Option<i64>,
            unit: Option<String>,
            precision: Option<u32>,
            exact: Option<String>,
        }
        let nonzero = !self.is_zero();
        Repr {
            valuation: self.valuation,
            unit: nonzero.then(|| self.unit.to_string()),
            precision: nonzero.then_some(self.precision),
            exact: self.exact.map(|x| x.to_string()),
        }
        .serialize(serializer)
    }
}

/// `x = 2^v·u` is a square in `Q₂` iff `v` is even and `u ≡ 1 (mod 8)`.
pub fn is_square_q2(x: &TwoAdicNumber) -> Result<bool> {
    let Some(v) = x.valuation() else {
        return Err(Error::Precondition("square test of zero".into()));
    };
    if x.precision() < 3 && x.exact().is_none() {
        return Err(Error::Precision("unit not known modulo 8".into()));
    }
    Ok(v % 2 == 0 && x.unit() & 7 == 1)
}

fn checked(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow("integer arithmetic exceeds 128 bits"))
}

/// Evaluates an integer polynomial expression with overflow checks.
macro_rules! ck {
    ($a:expr, +, $b:expr) => {
        checked(i128::checked_add($a, $b))?
    };
    ($a:expr, -, $b:expr) => {
        checked(i128::checked_sub($a, $b))?
    };
    ($a:expr, *, $b:expr) => {
        checked(i128::checked_mul($a, $b))?
    };
}

/// Discriminant of the depressed quartic `x⁴ + px² + qx + r`.
fn depressed_discriminant(p: i128, q: i128, r: i128) -> Result<i128> {
    let p2 = ck!(p, *, p);
    let q2 = ck!(q, *, q);
    let r2 = ck!(r, *, r);
    let terms = [
        ck!(256, *, ck!(r2, *, r)),
        ck!(-128, *, ck!(p2, *, r2)),
        ck!(144, *, ck!(ck!(p, *, q2), *, r)),
        ck!(16, *, ck!(ck!(p2, *, p2), *, r)),
        ck!(-4, *, ck!(ck!(p2, *, p), *, q2)),
        ck!(-27, *, ck!(q2, *, q2)),
    ];
    terms.iter().try_fold(0i128, |acc, &t| checked(acc.checked_add(t)))
}

/// Discriminant of `x⁴ + ax³ + bx² + cx + d`.
///
/// The shift `x ↦ x − a/4` gives a depressed quartic with coefficients
/// `P/16, Q/64, R/256`; the depressed discriminant is weighted homogeneous of
/// degree 12, so `disc = disc(P, Q, R) / 2²⁴`.
pub fn discriminant_quartic(a: i128, b: i128, c: i128, d: i128) -> Result<i128> {
    let a2 = ck!(a, *, a);
    let p = ck!(ck!(16, *, b), -, ck!(6, *, a2));
    let q = ck!(ck!(ck!(64, *, c), -, ck!(32, *, ck!(a, *, b))), +, ck!(8, *, ck!(a2, *, a)));
    let r = ck!(
        ck!(ck!(ck!(256, *, d), -, ck!(64, *, ck!(a, *, c))), +, ck!(16, *, ck!(a2, *, b))),
        -,
        ck!(3, *, ck!(a2, *, a2))
    );
    let scaled = depressed_discriminant(p, q, r)?;
    if scaled % (1 << 24) != 0 {
        return Err(Error::Defect("scaled discriminant is not divisible by 2^24".into()));
    }
    Ok(scaled >> 24)
}

/// Monic resolvent cubic, leading coefficient first.
pub fn resolvent_cubic(a: i128, b: i128, c: i128, d: i128) -> Result<[i128; 4]> {
    Ok([
        1,
        checked(b.checked_neg())?,
        ck!(ck!(a, *, c), -, ck!(4, *, d)),
        ck!(ck!(ck!(4, *, ck!(b, *, d)), -, ck!(ck!(a, *, a), *, d)), -, ck!(c, *, c)),
    ])
}

/// Slopes of the 2-adic Newton polygon of `Σ cᵢ yⁱ` (coefficients leading
/// first), as reduced `(rise, run)` pairs from left to right. A segment of
/// slope `−s` carries `run` roots of valuation `s`.
pub fn newton_slopes(coeffs_leading_first: &[i128]) -> Vec<(i64, i64)> {
    let deg = coeffs_leading_first.len().saturating_sub(1);
    let points: Vec<(i64, i64)> = coeffs_leading_first
        .iter()
        .rev()
        .enumerate()
        .filter_map(|(i, &c)| v2_i128(c).map(|v| (i as i64, v as i64)))
        .collect();
    let mut slopes = Vec::new();
    let mut k = 0;
    while k + 1 < points.len() && (points[k].0 as usize) < deg {
        let (i0, v0) = points[k];
        let mut best = k + 1;
        for j in k + 1..points.len() {
            let (ib, vb) = points[best];
            let (ij, vj) = points[j];
            // slope_j <= slope_best, preferring the farther point on ties
            if (vj - v0) * (ib - i0) <= (vb - v0) * (ij - i0) {
                best = j;
            }
        }
        let (i1, v1) = points[best];
        let (rise, run) = (v1 - v0, i1 - i0);
        let g = gcd(rise.abs(), run);
        slopes.push((rise / g, run / g));
        k = best;
    }
    slopes
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn eval_mod(coeffs: &[i128], w: u128) -> u128 {
    coeffs
        .iter()
        .fold(0u128, |acc, &c| acc.wrapping_mul(w).wrapping_add(c as u128))
}

fn derivative(coeffs: &[i128]) -> Result<Vec<i128>> {
    let deg = coeffs.len() - 1;
    coeffs[..deg]
        .iter()
        .enumerate()
        .map(|(i, &c)| checked(c.checked_mul((deg - i) as i128)))
        .collect()
}

#[inline]
fn v2(x: u128) -> u32 {
    x.trailing_zeros()
}

/// Lifts `w` with `v(g(w)) > 2 v(g'(w))` to a root known modulo `2^precision`.
fn newton_lift(g: &[i128], dg: &[i128], mut w: u128, precision: u32) -> Result<u128> {
    let e = v2(eval_mod(dg, w));
    if e + precision + GUARD_BITS > 128 {
        return Err(Error::Precision(format!(
            "derivative valuation {e} leaves fewer than {GUARD_BITS} guard bits"
        )));
    }
    for _ in 0..16 {
        let gw = eval_mod(g, w);
        if v2(gw).saturating_sub(e) >= precision {
            return Ok(w & mask(precision));
        }
        let unit = eval_mod(dg, w) >> e;
        w = w.wrapping_sub((gw >> e).wrapping_mul(inv_odd(unit)));
    }
    Err(Error::Precision("Newton iteration did not converge".into()))
}

/// A root with `v(w) = 0` of the integer polynomial `g`, if one exists.
fn unit_root(g: &[i128], precision: u32) -> Result<Option<u128>> {
    let dg = derivative(g)?;
    let mut candidates: Vec<u128> = if eval_mod(g, 1) & 1 == 0 { vec![1] } else { vec![] };
    for k in 1..=precision {
        let mut next = Vec::new();
        for &r in &candidates {
            let (vg, vd) = (v2(eval_mod(g, r)), v2(eval_mod(&dg, r)));
            if vd + GUARD_BITS < 128 && vg > 2 * vd {
                return newton_lift(g, &dg, r, precision).map(Some);
            }
            for t in [r, r + (1u128 << k)] {
                if v2(eval_mod(g, t)) > k {
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        if next.len() > MAX_LIFT_CANDIDATES {
            return Err(Error::Precision("too many residue classes survive lifting".into()));
        }
        candidates = next;
    }
    Err(Error::Precision(format!(
        "root existence undecided at precision {precision}"
    )))
}

/// A root in `Q₂` of the cubic `c₃y³ + c₂y² + c₁y + c₀` (leading first), if any.
pub fn cubic_root_in_q2(coeffs: [i128; 4], precision: u32) -> Result<Option<TwoAdicNumber>> {
    check_precision(precision)?;
    if coeffs[0] == 0 {
        return Err(Error::Precondition("cubic has zero leading coefficient".into()));
    }
    if coeffs[3] == 0 {
        return Ok(Some(TwoAdicNumber::zero()));
    }
    let vals: Vec<Option<u32>> = coeffs.iter().map(|&c| v2_i128(c)).collect();
    for (rise, run) in newton_slopes(&coeffs) {
        // non-integer slopes carry no roots in Q₂
        if run != 1 {
            continue;
        }
        // y = 2^s w with s = −slope
        let s = -rise;
        // exponent of 2 in cᵢ 2^{s i}, over present coefficients
        let exps: Vec<Option<i64>> = vals
            .iter()
            .enumerate()
            .map(|(k, v)| v.map(|v| v as i64 + s * (3 - k as i64)))
            .collect();
        let low = exps.iter().flatten().copied().min().expect("nonzero cubic");
        let g = coeffs
            .iter()
            .zip(&vals)
            .zip(&exps)
            .map(|((&c, v), e)| match (v, e) {
                (Some(v), Some(e)) => {
                    let shift = (e - low) as u32;
                    if shift >= 126 {
                        return Err(Error::Overflow("rescaled cubic coefficient"));
                    }
                    checked((c >> v).checked_mul(1i128 << shift))
                }
                _ => Ok(0),
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(w) = unit_root(&g, precision)? {
            return TwoAdicNumber::from_parts(s, w, precision).map(Some);
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    A4,
    S4,
    #[serde(rename = "IMPRIMITIVE")]
    Imprimitive,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::A4 => "A4",
            Verdict::S4 => "S4",
            Verdict::Imprimitive => "IMPRIMITIVE",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticReport {
    /// `[a, b, c, d]` of `x⁴ + ax³ + bx² + cx + d`.
    pub coefficients: [i128; 4],
    pub eisenstein: bool,
    pub discriminant: TwoAdicNumber,
    /// False when the discriminant is zero.
    pub disc_square: bool,
    /// Leading coefficient first.
    pub resolvent: [i128; 4],
    /// Searched only for Eisenstein inputs.
    pub resolvent_root: Option<TwoAdicNumber>,
    pub verdict: Verdict,
}

/// Eisenstein at 2: `a, b, c` even and `d ≡ 2 (mod 4)`.
pub fn is_eisenstein(a: i128, b: i128, c: i128, d: i128) -> bool {
    a % 2 == 0 && b % 2 == 0 && c % 2 == 0 && d % 4 != 0 && d % 2 == 0
}

pub fn classify_quartic(a: i128, b: i128, c: i128, d: i128, precision: u32) -> Result<QuarticReport> {
    check_precision(precision)?;
    let disc = discriminant_quartic(a, b, c, d)?;
    let discriminant = TwoAdicNumber::from_int(disc, precision);
    let disc_square = disc != 0 && is_square_q2(&discriminant)?;
    let resolvent = resolvent_cubic(a, b, c, d)?;
    let eisenstein = is_eisenstein(a, b, c, d);
    let (resolvent_root, verdict) = if eisenstein {
        let root = cubic_root_in_q2(resolvent, precision)?;
        let verdict = match (root.is_some(), disc_square) {
            (true, _) => Verdict::Imprimitive,
            (false, true) => Verdict::A4,
            (false, false) => Verdict::S4,
        };
        (root, verdict)
    } else {
        (None, Verdict::NotApplicable)
    };
    Ok(QuarticReport {
        coefficients: [a, b, c, d],
        eisenstein,
        discriminant,
        disc_square,
        resolvent,
        resolvent_root,
        verdict,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanTally {
    pub mod_bits: u32,
    pub total: usize,
    pub a4: usize,
    pub s4: usize,
    pub imprimitive: usize,
    pub not_applicable: usize,
    /// First coefficient tuples `[a, b, c, d]` of the quartic with each
    /// primitive verdict, in scan order.
    pub a4_examples: Vec<[i128; 4]>,
    pub s4_examples: Vec<[i128; 4]>,
}

const SCAN_EXAMPLES: usize = 5;

/// Classifies `x⁴ + 2a x³ + 2b x² + 2c x + 2d` for `a, b, c ∈ [0, 2^m)` and odd `d ∈ [0, 2^m)`.
pub fn eisenstein_scan(mod_bits: u32) -> Result<ScanTally> {
    if !(1..=MAX_SCAN_BITS).contains(&mod_bits) {
        return Err(Error::guard("mod-bits", mod_bits, MAX_SCAN_BITS));
    }
    let size = 1i128 << mod_bits;
    let odd = size / 2;
    let total = (size * size * size * odd) as usize;
    let coeffs = |k: usize| -> [i128; 4] {
        let k = k as i128;
        let d = 2 * (k % odd) + 1;
        let rest = k / odd;
        let c = rest % size;
        let b = (rest / size) % size;
        let a = rest / (size * size);
        [2 * a, 2 * b, 2 * c, 2 * d]
    };
    let verdicts = (0..total)
        .into_par_iter()
        .map(|k| {
            let [a, b, c, d] = coeffs(k);
            classify_quartic(a, b, c, d, DEFAULT_PRECISION).map(|r| r.verdict)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut tally = ScanTally {
        mod_bits,
        total,
        a4: 0,
        s4: 0,
        imprimitive: 0,
        not_applicable: 0,
        a4_examples: Vec::new(),
        s4_examples: Vec::new(),
    };
    for (k, v) in verdicts.into_iter().enumerate() {
        match v {
            Verdict::A4 => {
                tally.a4 += 1;
                if tally.a4_examples.len() < SCAN_EXAMPLES {
                    tally.a4_examples.push(coeffs(k));
                }
            }
            Verdict::S4 => {
                tally.s4 += 1;
                if tally.s4_examples.len() < SCAN_EXAMPLES {
                    tally.s4_examples.push(coeffs(k));
                }
            }
            Verdict::Imprimitive => tally.imprimitive += 1,
            Verdict::NotApplicable => tally.not_applicable += 1,
        }
    }
    Ok(tally)
}
