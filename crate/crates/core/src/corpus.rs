//! Seeded random inputs: continued fractions with known data, symmetric
//! matrices, series and discrete measures.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{lft_apply, rat, Parameter, PolyMatrix2, Polynomial, Rational};
use crate::error::Result;
use crate::hankel::{MomentSequence, Parity};
use crate::linalg::SymmetricMatrix;
use crate::oracle::discrete_moments;
use crate::stieltjes::reproduced_moments;
use crate::toeplitz::ToeplitzVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator and denominator bounded by `bound` in absolute value.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_nonzero(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let v = random_rational(rng, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A continued fraction with prescribed data and the moments it produces.
#[derive(Debug, Clone)]
pub struct KnownExpansion {
    pub parity: Parity,
    pub m: Vec<Polynomial>,
    /// `N` values for even parity, `N − 1` for odd.
    pub l: Vec<Rational>,
    pub indices: Vec<usize>,
    pub moments: MomentSequence,
}

/// Draw `N ≤ max_steps` steps with `deg m_j ≤ max_degree` and nonzero
/// leading coefficients; lower coefficients vanish a quarter of the time.
pub fn random_steps(
    rng: &mut impl Rng,
    parity: Parity,
    max_steps: usize,
    max_degree: usize,
    bound: i64,
) -> (Vec<Polynomial>, Vec<Rational>) {
    let n = rng.gen_range(1..=max_steps);
    let m: Vec<Polynomial> = (0..n)
        .map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let mut cs: Vec<Rational> = (0..deg)
                .map(|_| if rng.gen_bool(0.25) { Rational::zero() } else { random_rational(rng, bound) })
                .collect();
            cs.push(random_nonzero(rng, bound));
            Polynomial::new(cs)
        })
        .collect();
    let nl = match parity {
        Parity::Even => n,
        Parity::Odd => n - 1,
    };
    let l = (0..nl).map(|_| random_nonzero(rng, bound)).collect();
    (m, l)
}

/// `M_1 L_1 ⋯` applied to the terminal parameter (0 for even, ∞ for odd),
/// expanded at infinity for the moments the problem needs.
pub fn synthesize(parity: Parity, m: &[Polynomial], l: &[Rational]) -> Result<KnownExpansion> {
    let mut w = PolyMatrix2::identity();
    let mut indices = Vec::with_capacity(m.len());
    let mut n = 0;
    for (j, mj) in m.iter().enumerate() {
        w = w.mul(&PolyMatrix2::m_factor(mj));
        if let Some(lj) = l.get(j) {
            w = w.mul(&PolyMatrix2::l_factor(&Polynomial::constant(lj.clone())));
        }
        n += mj.degree().finite().unwrap_or(0) + 1;
        indices.push(n);
    }
    let tau = match parity {
        Parity::Even => Parameter::zero(),
        Parity::Odd => Parameter::Infinity,
    };
    let f = lft_apply(&w, &tau)?;
    let ell = parity.required_ell(n);
    let moments = MomentSequence::new(reproduced_moments(&f, ell + 1)?)?;
    Ok(KnownExpansion { parity, m: m.to_vec(), l: l.to_vec(), indices, moments })
}

/// Corpus of regular expansions with alternating parity.
pub fn regular_corpus(seed: u64, count: usize, max_steps: usize, max_degree: usize, bound: i64) -> Vec<KnownExpansion> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let parity = if i % 2 == 0 { Parity::Even } else { Parity::Odd };
            let (m, l) = random_steps(&mut r, parity, max_steps, max_degree, bound);
            synthesize(parity, &m, &l).expect("a constant-l continued fraction always has a regular expansion")
        })
        .collect()
}

/// Symmetric matrix of order `1..=max_order` with small entries; about a
/// third of the entries and, occasionally, the whole diagonal are zero so
/// that singular and block-pivot cases appear.
pub fn random_symmetric(rng: &mut impl Rng, max_order: usize, bound: i64) -> SymmetricMatrix {
    let n = rng.gen_range(1..=max_order);
    let zero_diag = rng.gen_bool(0.2);
    let mut m = SymmetricMatrix::from_fn(n, |i, j| {
        if (i == j && zero_diag) || rng.gen_bool(0.3) {
            Rational::zero()
        } else {
            random_rational(rng, bound)
        }
    });
    if rng.gen_bool(0.15) && n > 1 {
        // Force a rank deficiency by duplicating a row and column.
        let (a, b) = (0, n - 1);
        let rows = m.rows().to_vec();
        m = SymmetricMatrix::from_fn(n, |i, j| {
            let pick = |k: usize| if k == b { a } else { k };
            rows[pick(i)][pick(j)].clone()
        });
    }
    m
}

/// Series `c` with `c_0 ≠ 0` and length `1..=max_len`.
pub fn random_series(rng: &mut impl Rng, max_len: usize, bound: i64) -> ToeplitzVector {
    let len = rng.gen_range(1..=max_len);
    let mut cs = vec![random_nonzero(rng, bound)];
    cs.extend((1..len).map(|_| random_rational(rng, bound)));
    ToeplitzVector::new(cs)
}

/// A positive discrete measure `Σ w_i δ_{t_i}`.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    pub weights: Vec<Rational>,
    pub atoms: Vec<Rational>,
}

impl DiscreteMeasure {
    /// Moments through `ℓ = 2·(#atoms) − 1`.
    pub fn moments(&self) -> MomentSequence {
        MomentSequence::with_start(0, discrete_moments(&self.weights, &self.atoms, 2 * self.atoms.len()))
    }
}

pub fn random_measure(rng: &mut impl Rng, max_atoms: usize, bound: i64) -> DiscreteMeasure {
    let k = rng.gen_range(1..=max_atoms);
    let mut atoms: Vec<Rational> = Vec::with_capacity(k);
    while atoms.len() < k {
        let t = rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound));
        if !atoms.contains(&t) {
            atoms.push(t);
        }
    }
    atoms.shuffle(rng);
    let weights = (0..k).map(|_| rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound))).collect();
    DiscreteMeasure { weights, atoms }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = regular_corpus(3, 6, 3, 2, 9);
        let b = regular_corpus(3, 6, 3, 2, 9);
        assert_eq!(
            a.iter().map(|c| c.moments.clone()).collect::<Vec<_>>(),
            b.iter().map(|c| c.moments.clone()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn synthesized_sizes() {
        for case in regular_corpus(11, 10, 4, 3, 100) {
            let top = *case.indices.last().unwrap();
            assert_eq!(case.moments.ell(), case.parity.required_ell(top));
            assert_eq!(case.m.len(), case.indices.len());
        }
    }

    #[test]
    fn measures_have_distinct_positive_atoms() {
        let mut r = rng(5);
        for _ in 0..20 {
            let mu = random_measure(&mut r, 4, 20);
            assert_eq!(mu.moments().len(), 2 * mu.atoms.len());
            let mut sorted = mu.atoms.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), mu.atoms.len());
        }
    }
}
