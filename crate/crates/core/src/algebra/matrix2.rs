use std::fmt;

use super::polynomial::Polynomial;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// 2×2 matrix of polynomials, `[[w11, w12], [w21, w22]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix2 {
    pub w11: Polynomial,
    pub w12: Polynomial,
    pub w21: Polynomial,
    pub w22: Polynomial,
}

/// Argument of a linear fractional transform: a rational function or the
/// point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parameter {
    Function(RationalFunction),
    Infinity,
}

impl Parameter {
    pub fn zero() -> Self {
        Parameter::Function(RationalFunction::zero())
    }
}

impl From<RationalFunction> for Parameter {
    fn from(f: RationalFunction) -> Self {
        Parameter::Function(f)
    }
}

impl PolyMatrix2 {
    pub fn new(w11: Polynomial, w12: Polynomial, w21: Polynomial, w22: Polynomial) -> Self {
        PolyMatrix2 { w11, w12, w21, w22 }
    }

    pub fn identity() -> Self {
        Self::new(Polynomial::one(), Polynomial::zero(), Polynomial::zero(), Polynomial::one())
    }

    /// `[[1, 0], [-z m, 1]]`
    pub fn m_factor(m: &Polynomial) -> Self {
        Self::new(Polynomial::one(), Polynomial::zero(), -m.shift(1), Polynomial::one())
    }

    /// `[[1, l], [0, 1]]`
    pub fn l_factor(l: &Polynomial) -> Self {
        Self::new(Polynomial::one(), l.clone(), Polynomial::zero(), Polynomial::one())
    }

    pub fn det(&self) -> Polynomial {
        &self.w11 * &self.w22 - &self.w12 * &self.w21
    }

    pub fn mul(&self, rhs: &PolyMatrix2) -> PolyMatrix2 {
        matmul2(self, rhs)
    }

    pub fn entries(&self) -> [&Polynomial; 4] {
        [&self.w11, &self.w12, &self.w21, &self.w22]
    }
}

impl fmt::Display for PolyMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.w11, self.w12, self.w21, self.w22)
    }
}

pub fn matmul2(a: &PolyMatrix2, b: &PolyMatrix2) -> PolyMatrix2 {
    PolyMatrix2 {
        w11: &a.w11 * &b.w11 + &a.w12 * &b.w21,
        w12: &a.w11 * &b.w12 + &a.w12 * &b.w22,
        w21: &a.w21 * &b.w11 + &a.w22 * &b.w21,
        w22: &a.w21 * &b.w12 + &a.w22 * &b.w22,
    }
}

/// `(w11 τ + w12) / (w21 τ + w22)`, or `w11 / w21` at `τ = ∞`.
pub fn lft_apply(w: &PolyMatrix2, tau: &Parameter) -> Result<RationalFunction> {
    let (num, den) = match tau {
        Parameter::Infinity => (w.w11.clone(), w.w21.clone()),
        Parameter::Function(t) => (&w.w11 * t.num() + &w.w12 * t.den(), &w.w21 * t.num() + &w.w22 * t.den()),
    };
    if den.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, laurent_expand_at_infinity};

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn identity_is_neutral() {
        let b = PolyMatrix2::new(p(&[1, 2]), p(&[0, 0, 3]), p(&[-1]), p(&[4, 1]));
        assert_eq!(matmul2(&PolyMatrix2::identity(), &b), b);
        let g = RationalFunction::new(p(&[1, 1]), p(&[2, 0, 1])).unwrap();
        assert_eq!(lft_apply(&PolyMatrix2::identity(), &g.clone().into()).unwrap(), g);
    }

    #[test]
    fn unit_mass_factor_product() {
        let w = matmul2(&PolyMatrix2::m_factor(&p(&[1])), &PolyMatrix2::l_factor(&p(&[1])));
        assert_eq!(w, PolyMatrix2::new(p(&[1]), p(&[1]), p(&[0, -1]), p(&[1, -1])));
        assert_eq!(w.det(), Polynomial::one());
    }

    #[test]
    fn first_convergent_at_infinity() {
        let f = lft_apply(&PolyMatrix2::m_factor(&p(&[1])), &Parameter::Infinity).unwrap();
        assert_eq!(f, RationalFunction::new(p(&[1]), p(&[0, -1])).unwrap());
    }

    #[test]
    fn second_convergent_is_point_mass_transform() {
        let w = matmul2(&PolyMatrix2::m_factor(&p(&[1])), &PolyMatrix2::l_factor(&p(&[1])));
        let f = lft_apply(&w, &Parameter::zero()).unwrap();
        assert_eq!(f, RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap());
        let tail = laurent_expand_at_infinity(&f, -5).unwrap();
        assert_eq!(tail.moments(5).unwrap(), vec![int(1); 5]);
    }

    #[test]
    fn zero_denominator_is_degenerate() {
        let w = PolyMatrix2::new(p(&[1]), p(&[1]), p(&[0]), p(&[0]));
        assert_eq!(lft_apply(&w, &Parameter::zero()), Err(Error::DegenerateParameter));
        assert_eq!(lft_apply(&w, &Parameter::Infinity), Err(Error::DegenerateParameter));
    }
}
