//! Determinants and inertia of exact rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Square symmetric matrix with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    rows: Vec<Vec<Rational>>,
}

impl SymmetricMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedInput("matrix is not square".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != rows[j][i]) {
                return Err(Error::MalformedInput(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
        Ok(SymmetricMatrix { rows })
    }

    /// Build from `entry(i, j)` evaluated on the lower triangle.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let lower: Vec<Vec<Rational>> = (0..n).map(|i| (0..=i).map(|j| entry(i, j)).collect()).collect();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if j <= i { lower[i][j].clone() } else { lower[j][i].clone() }).collect())
            .collect();
        SymmetricMatrix { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn det(&self) -> Rational {
        determinant(&self.rows)
    }

    /// `Cᵀ M C`.
    pub fn congruent(&self, c: &[Vec<Rational>]) -> SymmetricMatrix {
        let n = self.order();
        let mc: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &self.rows[i][k] * &c[k][j])).collect()
            })
            .collect();
        SymmetricMatrix::from_fn(n, |i, j| (0..n).fold(Rational::zero(), |acc, k| acc + &c[k][i] * &mc[k][j]))
    }
}

impl fmt::Display for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Inertia {
    pub nu_minus: usize,
    pub nu_zero: usize,
    pub nu_plus: usize,
}

impl Inertia {
    pub fn new(nu_minus: usize, nu_zero: usize, nu_plus: usize) -> Self {
        Inertia { nu_minus, nu_zero, nu_plus }
    }

    pub fn order(&self) -> usize {
        self.nu_minus + self.nu_zero + self.nu_plus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.nu_minus, self.nu_zero, self.nu_plus)
    }
}

/// Determinant by fraction-free (Bareiss) elimination after clearing the
/// denominators of each row.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let den = common_denominator(row.iter());
            let out = row.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect();
            scale *= den;
            out
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Rational::new(sign * &a[n - 1][n - 1], scale)
}

/// Inertia by symmetric congruence reduction. A nonzero diagonal entry is
/// used as a 1×1 pivot; when the remaining diagonal vanishes entirely, an
/// off-diagonal entry `a` gives a 2×2 pivot `[[0, a], [a, 0]]` contributing
/// one negative and one positive square.
///
/// The work is done on an integer matrix `M` with a divisor `div` such that
/// the remaining Schur complement is `M / div`. Runs of 1×1 pivots use
/// fraction-free (Bareiss) updates, whose divisions are exact; a 2×2 pivot
/// restarts the chain with `div = 1`.
pub fn inertia(m: &SymmetricMatrix) -> Inertia {
    let den = common_denominator(m.rows().iter().flatten());
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|row| row.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let mut div = BigInt::one();
    let mut out = Inertia::default();
    loop {
        let n = a.len();
        if n == 0 {
            return out;
        }
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let piv = a[p][p].clone();
            if piv.is_positive() == div.is_positive() {
                out.nu_plus += 1;
            } else {
                out.nu_minus += 1;
            }
            let keep: Vec<usize> = (0..n).filter(|&r| r != p).collect();
            a = keep
                .iter()
                .map(|&r| keep.iter().map(|&c| (&piv * &a[r][c] - &a[r][p] * &a[p][c]) / &div).collect())
                .collect();
            div = piv;
            continue;
        }
        let Some((i, j)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        else {
            out.nu_zero += n;
            return out;
        };
        out.nu_minus += 1;
        out.nu_plus += 1;
        // Complement against K = [[0, a], [a, 0]], scaled by a·div.
        let piv = a[i][j].clone();
        let flip = piv.is_negative() != div.is_negative();
        let keep: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        let mut next: Vec<Vec<BigInt>> = keep
            .iter()
            .map(|&r| {
                keep.iter()
                    .map(|&c| {
                        let v = &piv * &a[r][c] - &a[r][i] * &a[j][c] - &a[r][j] * &a[i][c];
                        if flip {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        let content = next.iter().flatten().fold(BigInt::zero(), |g, v| g.gcd(v));
        if content > BigInt::one() {
            for v in next.iter_mut().flatten() {
                *v /= &content;
            }
        }
        a = next;
        div = BigInt::one();
    }
}
