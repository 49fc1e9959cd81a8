//! Upper-triangular Toeplitz arithmetic and the two step-down maps that peel
//! one polynomial `m` or one constant `l` off an asymptotic expansion.

use num_traits::{One, Zero};

use crate::algebra::{minus_one_pow, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hankel::{first_normal_index, hankel, HankelShift, MomentSequence};
use crate::linalg::determinant;

/// First row `c_0, …, c_n` of the upper-triangular Toeplitz matrix with
/// `c_{j−i}` in position `(i, j)`. Products of such matrices are truncated
/// power-series products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToeplitzVector {
    coeffs: Vec<Rational>,
}

impl ToeplitzVector {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        ToeplitzVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The full square matrix.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.coeffs.len();
        (0..n)
            .map(|i| (0..n).map(|j| if j >= i { self.coeffs[j - i].clone() } else { Rational::zero() }).collect())
            .collect()
    }

    /// Truncated convolution; both operands must have the same length.
    pub fn mul(&self, rhs: &ToeplitzVector) -> ToeplitzVector {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        ToeplitzVector::new(
            (0..n)
                .map(|k| (0..=k).fold(Rational::zero(), |acc, i| acc + &self.coeffs[i] * &rhs.coeffs[k - i]))
                .collect(),
        )
    }
}

/// `d` with `T(c)·T(d) = I`, by forward substitution.
pub fn toeplitz_reciprocal(c: &ToeplitzVector) -> Result<ToeplitzVector> {
    let cs = c.coeffs();
    let Some(c0) = cs.first().filter(|v| !v.is_zero()) else {
        return Err(Error::NonInvertible);
    };
    let inv0 = c0.recip();
    let mut d: Vec<Rational> = Vec::with_capacity(cs.len());
    d.push(inv0.clone());
    for k in 1..cs.len() {
        let acc = (1..=k).fold(Rational::zero(), |acc, i| acc + &cs[i] * &d[k - i]);
        d.push(-acc * &inv0);
    }
    Ok(ToeplitzVector::new(d))
}

/// Output of [`step_down_m`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepDownResult {
    pub nu: usize,
    /// Monic, degree `nu`.
    pub a: Polynomial,
    pub b: Rational,
    /// Degree `nu − 1`, leading coefficient `1/b`.
    pub m: Polynomial,
    /// `𝔰_{−1}, …, 𝔰_{ℓ−2ν}`, starting at index −1; empty when `ℓ = 2ν − 2`.
    pub frak_s: MomentSequence,
    /// The value used for the missing `s_{2ν−1}` when `ℓ = 2ν − 2`.
    pub free_tail_used: Option<Rational>,
}

fn check_basic_form(s: &MomentSequence, nu: usize) -> Result<()> {
    if nu == 0 {
        return Err(Error::NotBasicForm("the step order must be positive".into()));
    }
    if s.start() != 0 {
        return Err(Error::NotBasicForm("sequence must start at s_0".into()));
    }
    if s.ell() + 2 < 2 * nu {
        return Err(Error::InsufficientMoments { index: 2 * nu as i64 - 2 });
    }
    for j in 0..nu - 1 {
        if !s.values()[j].is_zero() {
            return Err(Error::NotBasicForm(format!("s_{j} must vanish for a step of order {nu}")));
        }
    }
    if s.values()[nu - 1].is_zero() {
        return Err(Error::NotBasicForm(format!("s_{} must be nonzero for a step of order {nu}", nu - 1)));
    }
    Ok(())
}

/// Split `f(z) = −s_{ν−1}/z^ν − …` as `f = 1/(−z m(z) − 1/g(z))`, returning
/// `m` and the expansion coefficients `𝔰` of `g`.
pub fn step_down_m(s: &MomentSequence, nu: usize, free_tail: Option<&Rational>) -> Result<StepDownResult> {
    check_basic_form(s, nu)?;
    let ell = s.ell();
    let mut c: Vec<Rational> = s.values()[nu - 1..].to_vec();
    let free_tail_used = if ell == 2 * nu - 2 {
        let v = free_tail.cloned().unwrap_or_else(Rational::zero);
        c.push(v.clone());
        Some(v)
    } else {
        None
    };
    let d = toeplitz_reciprocal(&ToeplitzVector::new(c))?;
    let d = d.coeffs();
    let m = Polynomial::new((0..nu).map(|k| d[nu - 1 - k].clone()).collect());
    let b = s.values()[nu - 1].clone();
    let a = (m.shift(1) + Polynomial::constant(d[nu].clone())).scale(&b);
    let frak: Vec<Rational> =
        if free_tail_used.is_some() { Vec::new() } else { (nu..d.len()).map(|k| -&d[k]).collect() };
    Ok(StepDownResult { nu, a, b, m, frak_s: MomentSequence::with_start(-1, frak), free_tail_used })
}

/// Split `g(z) = −𝔰_{−1} − 𝔰_0/z − …` as `−1/g = l + f` with the constant
/// `l = 1/𝔰_{−1}`; returns `l` and the moments of `f`.
pub fn step_down_l(frak_s: &MomentSequence) -> Result<(Rational, MomentSequence)> {
    if frak_s.start() != -1 || frak_s.is_empty() {
        return Err(Error::InsufficientMoments { index: -1 });
    }
    if frak_s.values()[0].is_zero() {
        return Err(Error::RequiresPolynomialL);
    }
    let e = toeplitz_reciprocal(&ToeplitzVector::new(frak_s.values().to_vec()))?;
    let e = e.coeffs();
    let l = e[0].clone();
    let next = e[1..].iter().map(|v| -v).collect();
    Ok((l, MomentSequence::with_start(0, next)))
}

/// As [`step_down_l`] when `𝔰_{−1} = 0`: then `−1/g = l(z) + f` with a
/// polynomial `l` of positive degree, found by a second `m`-type step on
/// `𝔰_0, 𝔰_1, …`.
pub fn step_down_l_poly(frak_s: &MomentSequence) -> Result<(Polynomial, MomentSequence)> {
    if frak_s.start() != -1 || frak_s.is_empty() {
        return Err(Error::InsufficientMoments { index: -1 });
    }
    if !frak_s.values()[0].is_zero() {
        return Err(Error::NotApplicable("leading coefficient is nonzero; l is a constant".into()));
    }
    let inner = frak_s.from_zero();
    if inner.is_empty() {
        return Err(Error::InsufficientMoments { index: 0 });
    }
    let order = first_normal_index(&inner)?;
    if inner.ell() + 1 < 2 * order {
        return Err(Error::InsufficientMoments { index: 2 * order as i64 - 1 });
    }
    let inner_step = step_down_m(&inner, order, None)?;
    let lead = inner_step.frak_s.get(-1)?.clone();
    let l = inner_step.m.shift(1) - Polynomial::constant(lead);
    Ok((l, inner_step.frak_s.from_zero()))
}

/// `𝔰_{−1}, …, 𝔰_{ℓ−2ν}` from closed determinant formulas: a ratio of Hankel
/// determinants for `𝔰_{−1}` and lower Hessenberg Toeplitz determinants in
/// `s_{ν−1}, s_ν, …` for the rest.
pub fn explicit_frak_s(s: &MomentSequence, nu: usize) -> Result<Vec<Rational>> {
    check_basic_form(s, nu)?;
    let ell = s.ell();
    if ell + 1 < 2 * nu {
        return Err(Error::InsufficientMoments { index: 2 * nu as i64 - 1 });
    }
    let lead = s.values()[nu - 1].clone();
    let d = hankel(s, nu, HankelShift::Zero)?.det();
    let d_plus = hankel(s, nu, HankelShift::Plus)?.det();
    let mut out = vec![minus_one_pow(nu + 1) * &d_plus / (&lead * &d)];
    let mut lead_pow = lead.clone();
    for _ in 0..nu + 1 {
        lead_pow *= &lead;
    }
    for i in 0..(ell + 1 - 2 * nu) {
        let order = nu + i + 1;
        let h: Vec<Vec<Rational>> = (0..order)
            .map(|r| {
                (0..order)
                    .map(|col| if col <= r + 1 { s.values()[nu + r - col].clone() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        out.push(minus_one_pow(i + nu) * determinant(&h) / &lead_pow);
        lead_pow *= &lead;
    }
    Ok(out)
}

/// `T(c)·T(d)` computed as dense matrices, for checking reciprocals.
pub fn dense_toeplitz_product(c: &ToeplitzVector, d: &ToeplitzVector) -> Vec<Vec<Rational>> {
    let (a, b) = (c.matrix(), d.matrix());
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

pub fn is_identity(m: &[Vec<Rational>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn tv(v: &[Rational]) -> ToeplitzVector {
        ToeplitzVector::new(v.to_vec())
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(toeplitz_reciprocal(&tv(&[int(1), int(0), int(0)])).unwrap().coeffs(), &[int(1), int(0), int(0)]);
        let (a, b) = (int(3), int(5));
        let d = toeplitz_reciprocal(&tv(&[int(1), a.clone(), b.clone()])).unwrap();
        assert_eq!(d.coeffs(), &[int(1), -&a, &a * &a - &b]);
        let c = tv(&[int(2), int(1)]);
        let d = toeplitz_reciprocal(&c).unwrap();
        assert_eq!(d.coeffs(), &[rat(1, 2), rat(-1, 4)]);
        assert!(is_identity(&dense_toeplitz_product(&c, &d)));
        assert_eq!(toeplitz_reciprocal(&tv(&[int(0), int(1)])), Err(Error::NonInvertible));
    }

    #[test]
    fn m_step_point_mass() {
        let s = MomentSequence::from_ints(&[1, 1, 1, 1]);
        let r = step_down_m(&s, 1, None).unwrap();
        assert_eq!(r.m, Polynomial::one());
        assert_eq!(r.frak_s.get(-1).unwrap(), &int(1));
        assert_eq!(r.a, Polynomial::new(vec![int(-1), int(1)]));
    }

    #[test]
    fn m_step_with_free_tail() {
        let s = MomentSequence::from_ints(&[0, 1, 0]);
        let r = step_down_m(&s, 2, None).unwrap();
        assert_eq!(r.a, Polynomial::monomial(int(1), 2));
        assert_eq!(r.b, int(1));
        assert_eq!(r.m, Polynomial::z());
        assert!(r.frak_s.is_empty());
        assert_eq!(r.free_tail_used, Some(int(0)));
        let r7 = step_down_m(&s, 2, Some(&int(7))).unwrap();
        assert_eq!(r7.m, r.m);
        assert_ne!(r7.a, r.a);
    }

    #[test]
    fn m_step_negative_lead() {
        let r = step_down_m(&MomentSequence::from_ints(&[-1, 2]), 1, None).unwrap();
        assert_eq!(r.m, Polynomial::constant(int(-1)));
    }

    #[test]
    fn m_step_factorial_moments() {
        let r = step_down_m(&MomentSequence::from_ints(&[1, 1, 2, 6]), 1, None).unwrap();
        assert_eq!(r.m, Polynomial::one());
        assert_eq!(r.frak_s.values(), &[int(1), int(1), int(3)]);
        assert_eq!(explicit_frak_s(&MomentSequence::from_ints(&[1, 1, 2, 6]), 1).unwrap(), r.frak_s.values());
    }

    #[test]
    fn m_step_rejects_non_basic() {
        assert!(matches!(step_down_m(&MomentSequence::from_ints(&[1, 0, 0]), 2, None), Err(Error::NotBasicForm(_))));
        assert!(matches!(step_down_m(&MomentSequence::from_ints(&[0, 0, 0]), 2, None), Err(Error::NotBasicForm(_))));
    }

    #[test]
    fn l_step_examples() {
        let (l, next) = step_down_l(&MomentSequence::with_start(-1, vec![int(1)])).unwrap();
        assert_eq!(l, int(1));
        assert!(next.is_empty());
        let (l, next) = step_down_l(&MomentSequence::with_start(-1, vec![int(1), int(1)])).unwrap();
        assert_eq!((l, next.values().to_vec()), (int(1), vec![int(1)]));
        let (l, next) = step_down_l(&MomentSequence::with_start(-1, vec![int(2), int(0), int(4)])).unwrap();
        assert_eq!((l, next.values().to_vec()), (rat(1, 2), vec![int(0), int(1)]));
        assert_eq!(step_down_l(&MomentSequence::with_start(-1, vec![int(0), int(1)])), Err(Error::RequiresPolynomialL));
    }

    #[test]
    fn polynomial_l_step() {
        let (l, next) = step_down_l_poly(&MomentSequence::with_start(-1, vec![int(0), int(1), int(0)])).unwrap();
        assert_eq!(l, Polynomial::z());
        assert!(next.is_empty());
        let (l, _) = step_down_l_poly(&MomentSequence::with_start(-1, vec![int(0), int(4), int(2), int(5)])).unwrap();
        assert_eq!(l.degree().finite(), Some(1));
        assert_eq!(l.leading_coeff(), Some(&rat(1, 4)));
        assert!(matches!(
            step_down_l_poly(&MomentSequence::with_start(-1, vec![int(3), int(1)])),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn explicit_lead_vanishes_without_mu_index() {
        let f = explicit_frak_s(&MomentSequence::from_ints(&[0, 1, 0, 0]), 2).unwrap();
        assert_eq!(f, vec![int(0)]);
        let r = step_down_m(&MomentSequence::from_ints(&[0, 1, 0, 0]), 2, None).unwrap();
        assert_eq!(r.frak_s.values(), &f[..]);
    }
}
