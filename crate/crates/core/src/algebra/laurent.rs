//! Expansions of rational functions at infinity.

use num_traits::Zero;

use super::polynomial::Degree;
use super::ratfunc::RationalFunction;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Expansion `c_top z^top + c_{top-1} z^{top-1} + ...` known exactly down to
/// `z^cutoff`. Powers below the cutoff are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentTail {
    top_power: i64,
    cutoff: i64,
    // descending powers top_power, top_power-1, ..., cutoff
    coeffs: Vec<Rational>,
}

impl LaurentTail {
    pub fn top_power(&self) -> i64 {
        self.top_power
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// Stored coefficients from `z^top_power` down to `z^cutoff`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^power`. Powers above the leading power are zero;
    /// powers below the cutoff are refused.
    pub fn coefficient(&self, power: i64) -> Result<Rational> {
        if power < self.cutoff {
            return Err(Error::BeyondCutoff { power, cutoff: self.cutoff });
        }
        if power > self.top_power {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(self.top_power - power) as usize].clone())
    }

    /// Read the expansion as `-s_0/z - s_1/z^2 - ...` and return `s_0..s_{count-1}`.
    pub fn moments(&self, count: usize) -> Result<Vec<Rational>> {
        (0..count).map(|j| self.coefficient(-(j as i64) - 1).map(|c| -c)).collect()
    }
}

/// Expand `f` at infinity exactly through `z^cutoff_power`.
pub fn laurent_expand_at_infinity(f: &RationalFunction, cutoff_power: i64) -> Result<LaurentTail> {
    let num = f.num();
    let den = f.den();
    let db = match den.degree() {
        Degree::Finite(d) => d,
        Degree::NegInfinity => return Err(Error::MalformedInput("zero denominator".into())),
    };
    let da = match num.degree() {
        Degree::Finite(d) => d,
        Degree::NegInfinity => {
            return Ok(LaurentTail { top_power: cutoff_power, cutoff: cutoff_power, coeffs: vec![Rational::zero()] })
        }
    };
    let top = da as i64 - db as i64;
    if cutoff_power > top {
        return Ok(LaurentTail { top_power: top, cutoff: cutoff_power, coeffs: Vec::new() });
    }
    let count = (top - cutoff_power + 1) as usize;
    // With w = 1/z: f = z^top * A(w)/B(w), A and B the reversed coefficient lists.
    let a: Vec<&Rational> = num.coeffs().iter().rev().collect();
    let b: Vec<&Rational> = den.coeffs().iter().rev().collect();
    let b0 = b[0];
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = a.get(k).map(|c| (*c).clone()).unwrap_or_else(Rational::zero);
        for i in 1..=k.min(b.len() - 1) {
            acc -= b[i] * &out[k - i];
        }
        out.push(acc / b0);
    }
    Ok(LaurentTail { top_power: top, cutoff: cutoff_power, coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Polynomial};

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn geometric_series_at_infinity() {
        let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let t = laurent_expand_at_infinity(&f, -3).unwrap();
        assert_eq!(t.top_power(), -1);
        assert_eq!(t.coefficients(), &[int(-1), int(-1), int(-1)]);
    }

    #[test]
    fn exact_division() {
        let f = RationalFunction::new(p(&[1, 1]), p(&[0, 1])).unwrap();
        let t = laurent_expand_at_infinity(&f, -1).unwrap();
        assert_eq!(t.top_power(), 0);
        assert_eq!(t.coefficients(), &[int(1), int(1)]);
    }

    #[test]
    fn point_mass_moments_are_one() {
        // Stieltjes transform of the unit mass at t = 1 has moments ∫ t^j dδ_1 = 1.
        let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let t = laurent_expand_at_infinity(&f, -8).unwrap();
        let direct: Vec<_> = (0..8).map(|j| int(1).pow(j)).collect();
        assert_eq!(t.moments(8).unwrap(), direct);
    }

    #[test]
    fn refuses_powers_below_cutoff() {
        let f = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        let t = laurent_expand_at_infinity(&f, -2).unwrap();
        assert!(matches!(t.coefficient(-3), Err(Error::BeyondCutoff { .. })));
        assert_eq!(t.coefficient(4).unwrap(), int(0));
    }

    #[test]
    fn cutoff_above_leading_power_gives_zeros() {
        let f = RationalFunction::new(p(&[1]), p(&[0, 0, 1])).unwrap();
        let t = laurent_expand_at_infinity(&f, -1).unwrap();
        assert_eq!(t.coefficient(-1).unwrap(), int(0));
        assert_eq!(t.moments(1).unwrap(), vec![int(0)]);
    }
}
