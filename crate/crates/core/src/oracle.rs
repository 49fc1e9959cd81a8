//! Independent checks that share no code path with the algorithms they audit:
//! eigenvalue counting by Sturm sequences, a determinant formula for series
//! reciprocals and power moments of discrete measures.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{common_denominator, minus_one_pow, Polynomial, Rational};
use crate::linalg::{determinant, Inertia, SymmetricMatrix};
use crate::toeplitz::ToeplitzVector;

type IntPoly = Vec<BigInt>;

/// Scale `A` by the least common denominator of its entries; a positive
/// scale leaves the inertia unchanged.
fn integer_scaled(a: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let den = common_denominator(a.iter().flatten());
    let rows = a
        .iter()
        .map(|row| row.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    (rows, den)
}

/// Division-free characteristic polynomial (Berkowitz), coefficients from
/// `z^n` down to `z^0`.
fn berkowitz(a: &[Vec<BigInt>]) -> IntPoly {
    let mut v: IntPoly = vec![BigInt::one()];
    for r in 0..a.len() {
        let mut col = vec![BigInt::one(), -&a[r][r]];
        let mut x: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rx = (0..r).fold(BigInt::zero(), |acc, j| acc + &a[r][j] * &x[j]);
            col.push(-rx);
            x = (0..r).map(|i| (0..r).fold(BigInt::zero(), |acc, j| acc + &a[i][j] * &x[j])).collect();
        }
        let next =
            (0..r + 2).map(|i| (0..=i.min(r)).fold(BigInt::zero(), |acc, j| acc + &col[i - j] * &v[j])).collect();
        v = next;
    }
    v
}

/// Characteristic polynomial `det(zI − A)`.
pub fn characteristic_polynomial(a: &[Vec<Rational>]) -> Polynomial {
    let n = a.len();
    let (b, den) = integer_scaled(a);
    let desc = berkowitz(&b);
    // Coefficient of z^k in det(zI − B) carries den^{n−k}.
    let mut scale = Rational::one();
    let den = Rational::from_integer(den);
    let mut asc = Vec::with_capacity(n + 1);
    for c in desc {
        asc.push(Rational::from_integer(c) / &scale);
        scale *= &den;
    }
    asc.reverse();
    Polynomial::new(asc)
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Divide out the positive content.
fn primitive(p: IntPoly) -> IntPoly {
    let g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

fn derivative(p: &[BigInt]) -> IntPoly {
    p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

/// Pseudo-remainder `lc(b)^e a − q b` together with `e`.
fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> (IntPoly, usize) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut e = 0;
    while r.len() > db {
        let k = r.len() - 1;
        let lr = r[k].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k - db + i] -= &lr * bc;
        }
        r = trim(r);
        e += 1;
    }
    (r, e)
}

fn sign_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs.filter(|&s| s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of `f` scaled by positive factors only; the last entry is
/// a multiple of `gcd(f, f')`.
fn sturm_chain(f: &[BigInt]) -> Vec<IntPoly> {
    let mut seq = vec![primitive(f.to_vec()), primitive(trim(derivative(f)))];
    while !seq.last().expect("nonempty").is_empty() {
        let k = seq.len();
        let (r, e) = pseudo_remainder(&seq[k - 2], &seq[k - 1]);
        let lb_negative = seq[k - 1].last().expect("nonzero").is_negative();
        let flip = lb_negative && e % 2 == 1;
        seq.push(primitive(r.into_iter().map(|c| if flip { c } else { -c }).collect()));
    }
    seq.pop();
    seq
}

/// Real roots of `f` with `f(0) ≠ 0`, counted with multiplicity and split
/// as (negative, positive). Distinct roots come from the Sturm chain; the
/// chain ends in `gcd(f, f')`, whose roots are those of `f` with
/// multiplicity lowered by one, so recursing on it adds the repeats.
pub fn sturm_sign_counts(f: &[BigInt]) -> (usize, usize) {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return (0, 0);
    }
    let seq = sturm_chain(&f);
    let lead = |p: &IntPoly| p.last().expect("nonzero").sign();
    let at_zero = sign_changes(seq.iter().map(|p| p[0].sign()));
    let at_pos = sign_changes(seq.iter().map(lead));
    let at_neg = sign_changes(seq.iter().map(|p| if p.len() % 2 == 0 { -lead(p) } else { lead(p) }));
    let (neg, pos) = (at_neg - at_zero, at_zero - at_pos);
    let g = seq.last().expect("nonempty");
    let (rn, rp) = sturm_sign_counts(g);
    (neg + rn, pos + rp)
}

/// Inertia from the characteristic polynomial: the multiplicity of the
/// root 0, then Sturm counts on the rest.
pub fn sturm_inertia(m: &SymmetricMatrix) -> Inertia {
    let (b, _) = integer_scaled(m.rows());
    let mut asc = berkowitz(&b);
    asc.reverse();
    let zeros = asc.iter().take_while(|c| c.is_zero()).count();
    let (neg, pos) = sturm_sign_counts(&asc[zeros..]);
    Inertia::new(neg, zeros, pos)
}

/// Reciprocal series coefficients `d_n = (−1)^n det(A_n) / c_0^{n+1}` where
/// `A_n` is the lower Hessenberg matrix `(c_{i−j+1})`.
pub fn hessenberg_reciprocal(c: &ToeplitzVector) -> Option<Vec<Rational>> {
    let cs = c.coeffs();
    let c0 = cs.first()?;
    if c0.is_zero() {
        return None;
    }
    let at = |k: i64| if k < 0 || k as usize >= cs.len() { Rational::zero() } else { cs[k as usize].clone() };
    let mut out = Vec::with_capacity(cs.len());
    let mut c0_pow = c0.clone();
    for n in 0..cs.len() {
        let a: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| at(i as i64 - j as i64 + 1)).collect()).collect();
        out.push(minus_one_pow(n) * determinant(&a) / &c0_pow);
        c0_pow *= c0;
    }
    Some(out)
}

/// Power moments `Σ w_i t_i^j` for `j < count`.
pub fn discrete_moments(weights: &[Rational], atoms: &[Rational], count: usize) -> Vec<Rational> {
    let mut powers: Vec<Rational> = weights.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(powers.iter().fold(Rational::zero(), |acc, p| acc + p));
        for (p, t) in powers.iter_mut().zip(atoms) {
            *p *= t;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::linalg::inertia;
    use crate::toeplitz::toeplitz_reciprocal;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn sym(rows: &[&[i64]]) -> SymmetricMatrix {
        SymmetricMatrix::new(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn charpoly_small() {
        assert_eq!(characteristic_polynomial(&[]), Polynomial::one());
        assert_eq!(characteristic_polynomial(sym(&[&[0, 1], &[1, 0]]).rows()), p(&[-1, 0, 1]));
        // Eigenvalues 1, 2, 4.
        let a = sym(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 3]]);
        let cp = characteristic_polynomial(a.rows());
        assert_eq!(cp.coeff(3), int(1));
        assert_eq!(cp.coeff(2), int(-7));
        assert_eq!(cp.coeff(0), -a.det());
        let anti = sym(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(characteristic_polynomial(anti.rows()), p(&[1, -1, -1, 1]));
    }

    fn ip(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(sturm_sign_counts(&ip(&[-1, 0, 1])), (1, 1));
        assert_eq!(sturm_sign_counts(&ip(&[6, -5, 1])), (0, 2));
        assert_eq!(sturm_sign_counts(&ip(&[1, 0, 1])), (0, 0));
        // (z − 1)^2 (z + 2)^3
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &(&(&p(&[2, 1]) * &p(&[2, 1])) * &p(&[2, 1]));
        let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.to_integer()).collect();
        assert_eq!(sturm_sign_counts(&ints), (3, 2));
    }

    #[test]
    fn charpoly_of_fractions() {
        let r = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 3), rat(1, 4)]];
        assert_eq!(characteristic_polynomial(&r), Polynomial::new(vec![rat(1, 72), rat(-3, 4), int(1)]));
    }

    #[test]
    fn sturm_inertia_matches_reduction() {
        for m in [
            sym(&[&[0, 1], &[1, 0]]),
            sym(&[&[1, 1], &[1, 1]]),
            sym(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
            sym(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]),
            sym(&[&[0, 0], &[0, 0]]),
            sym(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]),
            sym(&[&[-2, 1, 1, 0], &[1, -1, 1, 3], &[1, 1, -1, 0], &[0, 3, 0, 5]]),
            sym(&[&[0, -3, 1, 2], &[-3, 0, 4, 1], &[1, 4, 0, -2], &[2, 1, -2, 0]]),
            sym(&[&[-1, 2, 0], &[2, -4, 5], &[0, 5, 7]]),
        ] {
            assert_eq!(sturm_inertia(&m), inertia(&m), "{m}");
        }
    }

    #[test]
    fn reciprocal_by_determinants() {
        let c = ToeplitzVector::new(vec![int(2), int(1), int(0), rat(3, 2)]);
        assert_eq!(hessenberg_reciprocal(&c).unwrap(), toeplitz_reciprocal(&c).unwrap().coeffs());
        assert!(hessenberg_reciprocal(&ToeplitzVector::new(vec![int(0)])).is_none());
    }

    #[test]
    fn point_mass_moments() {
        assert_eq!(discrete_moments(&[int(1)], &[int(1)], 3), vec![int(1); 3]);
        assert_eq!(discrete_moments(&[int(2), int(1)], &[int(1), int(2)], 3), vec![int(3), int(4), int(6)]);
    }
}
