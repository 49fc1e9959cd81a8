//! Moment sequences, their Hankel blocks, normal indices and regularity.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::linalg::{inertia, Inertia, SymmetricMatrix};

/// Finite list `s_start, …, s_last`. Problem data always starts at 0; the
/// intermediate sequences of a step-down start at -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentSequence {
    start: i64,
    values: Vec<Rational>,
}

impl MomentSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::MalformedInput("moment sequence is empty".into()));
        }
        Ok(MomentSequence { start: 0, values })
    }

    pub fn with_start(start: i64, values: Vec<Rational>) -> Self {
        MomentSequence { start, values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        MomentSequence { start: 0, values: values.iter().map(|&v| Rational::from_integer(v.into())).collect() }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Index of the last stored moment.
    pub fn last_index(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    /// `ℓ` for a sequence starting at 0.
    pub fn ell(&self) -> usize {
        debug_assert_eq!(self.start, 0);
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, index: i64) -> Result<&Rational> {
        if index < self.start || index > self.last_index() {
            return Err(Error::InsufficientMoments { index });
        }
        Ok(&self.values[(index - self.start) as usize])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Same sequence with one more moment appended.
    pub fn extended(&self, next: Rational) -> Self {
        let mut values = self.values.clone();
        values.push(next);
        MomentSequence { start: self.start, values }
    }

    /// The subsequence `s_0, …, s_last` (indices before 0 dropped).
    pub fn from_zero(&self) -> Self {
        let skip = (-self.start).max(0) as usize;
        MomentSequence { start: 0.max(self.start), values: self.values[skip.min(self.values.len())..].to_vec() }
    }

    pub fn truncated(&self, last: i64) -> Self {
        let keep = (last - self.start + 1).clamp(0, self.values.len() as i64) as usize;
        MomentSequence { start: self.start, values: self.values[..keep].to_vec() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Display for MomentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// Offset applied to the Hankel index pattern `s_{i+j+shift}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HankelShift {
    Zero,
    Plus,
    Minus,
}

impl HankelShift {
    fn offset(self) -> i64 {
        match self {
            HankelShift::Zero => 0,
            HankelShift::Plus => 1,
            HankelShift::Minus => -1,
        }
    }
}

/// `(s_{i+j+shift})` for `i, j < n`; `n = 0` gives the empty matrix.
pub fn hankel(s: &MomentSequence, n: usize, shift: HankelShift) -> Result<SymmetricMatrix> {
    if n > 0 {
        let lo = shift.offset();
        let hi = 2 * n as i64 - 2 + shift.offset();
        s.get(lo)?;
        s.get(hi)?;
    }
    Ok(SymmetricMatrix::from_fn(n, |i, j| s.get((i + j) as i64 + shift.offset()).expect("checked").clone()))
}

/// Number of sign changes in `1, D_1, …, D_n`, which by the Frobenius rule is
/// the number of negative eigenvalues of `S_n` when no `D_j` vanishes.
pub fn frobenius_negative_count(dets: &[Rational]) -> Result<usize> {
    if let Some(j) = dets.iter().position(|d| d.is_zero()) {
        return Err(Error::NotApplicable(format!("D_{} vanishes", j + 1)));
    }
    let mut prev_negative = false;
    let mut changes = 0;
    for d in dets {
        let neg = d.is_negative();
        if neg != prev_negative {
            changes += 1;
        }
        prev_negative = neg;
    }
    Ok(changes)
}

/// Which of the two problems a sequence of length `ℓ + 1` poses: odd
/// (`ℓ = 2n − 2`, the last moment has even index) or even (`ℓ = 2n − 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_ell(ell: usize) -> Parity {
        if ell.is_multiple_of(2) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Number of moments `ℓ` this parity needs when the largest normal index is `top`.
    pub fn required_ell(self, top: usize) -> usize {
        match self {
            Parity::Odd => 2 * top - 2,
            Parity::Even => 2 * top - 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => {
                Err(Error::Parse { field: "parity".into(), message: format!("expected odd or even, got `{other}`") })
            }
        }
    }
}

/// Classification of one normal index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexClass {
    pub index: usize,
    pub det: Rational,
    /// `det S⁺_{n−1}`.
    pub det_plus_before: Rational,
    /// `det S⁺_n`, when `s_{2n−1}` is available.
    pub det_plus: Option<Rational>,
    pub is_nu: bool,
    pub is_mu: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalIndexReport {
    pub indices: Vec<usize>,
    pub nu_subset: Vec<usize>,
    pub mu_subset: Vec<usize>,
    pub regular: bool,
    /// First index breaking regularity.
    pub first_irregular: Option<usize>,
    pub classes: Vec<IndexClass>,
}

impl NormalIndexReport {
    pub fn top(&self) -> usize {
        *self.indices.last().expect("report always holds an index")
    }
}

fn det_of(s: &MomentSequence, n: usize, shift: HankelShift) -> Result<Rational> {
    Ok(hankel(s, n, shift)?.det())
}

/// Normal indices `n ≤ ⌊ℓ/2⌋ + 1` of a sequence starting at 0.
pub fn normal_indices(s: &MomentSequence) -> Result<NormalIndexReport> {
    let ell = s.ell();
    let mut classes = Vec::new();
    for n in 1..=ell / 2 + 1 {
        let det = det_of(s, n, HankelShift::Zero)?;
        if det.is_zero() {
            continue;
        }
        let det_plus_before = det_of(s, n - 1, HankelShift::Plus)?;
        let det_plus = if 2 * n - 1 <= ell { Some(det_of(s, n, HankelShift::Plus)?) } else { None };
        let is_nu = !det_plus_before.is_zero();
        let is_mu = det_plus.as_ref().is_some_and(|d| !d.is_zero());
        classes.push(IndexClass { index: n, det, det_plus_before, det_plus, is_nu, is_mu });
    }
    if classes.is_empty() {
        return Err(Error::NoNormalIndex);
    }
    let first_irregular = classes.iter().find(|c| !c.is_nu || (c.det_plus.is_some() && !c.is_mu)).map(|c| c.index);
    Ok(NormalIndexReport {
        indices: classes.iter().map(|c| c.index).collect(),
        nu_subset: classes.iter().filter(|c| c.is_nu).map(|c| c.index).collect(),
        mu_subset: classes.iter().filter(|c| c.is_mu).map(|c| c.index).collect(),
        regular: first_irregular.is_none(),
        first_irregular,
        classes,
    })
}

/// `1 +` the number of leading zeros, provided the first nonzero moment lies
/// inside the window where `S_n` is determined.
pub fn first_normal_index(s: &MomentSequence) -> Result<usize> {
    let ell = s.last_index();
    let base = s.start();
    let lead = s.values().iter().position(|v| !v.is_zero()).ok_or(Error::NoNormalIndex)?;
    let j = base + lead as i64;
    if j < 0 || 2 * j > ell {
        return Err(Error::NoNormalIndex);
    }
    Ok(j as usize + 1)
}

/// `(ν₋(S_{n_N}), ν₋(S⁺_{n_N − 1}))` for odd parity and
/// `(ν₋(S_{n_N}), ν₋(S⁺_{n_N}))` for even.
pub fn solvability_indices(s: &MomentSequence, parity: Parity) -> Result<(usize, usize)> {
    let report = normal_indices(s)?;
    let top = report.top();
    let need = parity.required_ell(top);
    if s.ell() < need {
        return Err(Error::InsufficientMoments { index: need as i64 });
    }
    let kappa = inertia(&hankel(s, top, HankelShift::Zero)?).nu_minus;
    let plus_order = match parity {
        Parity::Odd => top - 1,
        Parity::Even => top,
    };
    let k = inertia(&hankel(s, plus_order, HankelShift::Plus)?).nu_minus;
    Ok((kappa, k))
}

/// Inertia of the Hankel block of the given order and shift.
pub fn hankel_inertia(s: &MomentSequence, n: usize, shift: HankelShift) -> Result<Inertia> {
    Ok(inertia(&hankel(s, n, shift)?))
}
