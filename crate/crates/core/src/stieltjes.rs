//! Orthogonal polynomials of the moment functional, the P-fraction
//! coefficients, Stieltjes polynomials, solution matrices and convergents.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{
    laurent_expand_at_infinity, lft_apply, minus_one_pow, Degree, Parameter, PolyMatrix2, Polynomial, Rational,
    RationalFunction,
};
use crate::error::{ensure_consistent, Error, Result};
use crate::hankel::{hankel, HankelShift, MomentSequence, Parity};
use crate::linalg::determinant;
use crate::schur::{admissible_for, SchurExpansion};

/// Polynomials of the first and second kind at one normal index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthPolyPair {
    pub index: usize,
    /// Monic of degree `index`.
    pub p: Polynomial,
    pub q: Polynomial,
}

/// `s` completed to `s_0 … s_{2n−1}`; the one missing moment of an odd
/// problem is filled with `free_tail` (0 by default).
fn moments_through(s: &MomentSequence, last: usize, free_tail: Option<&Rational>) -> Result<Vec<Rational>> {
    let ell = s.ell();
    if ell >= last {
        return Ok(s.values()[..=last].to_vec());
    }
    if ell + 1 == last {
        let mut v = s.values().to_vec();
        v.push(free_tail.cloned().unwrap_or_else(Rational::zero));
        return Ok(v);
    }
    Err(Error::InsufficientMoments { index: ell as i64 + 1 })
}

/// `P_n` from the bordered Hankel determinant normalized by `D_n`, and `Q_n`
/// by applying the moment functional to `(P(λ) − P(t))/(λ − t)` in `t`.
pub fn first_second_kind(s: &MomentSequence, n: usize, free_tail: Option<&Rational>) -> Result<OrthPolyPair> {
    if n == 0 {
        return Ok(OrthPolyPair { index: 0, p: Polynomial::one(), q: Polynomial::zero() });
    }
    let mom = moments_through(s, 2 * n - 1, free_tail)?;
    let full = MomentSequence::with_start(0, mom.clone());
    let dn = hankel(&full, n, HankelShift::Zero)?.det();
    if dn.is_zero() {
        return Err(Error::NotNormalIndex { order: n });
    }
    // Expand along the bottom row (1, λ, …, λ^n).
    let coeffs: Vec<Rational> = (0..=n)
        .map(|k| {
            let minor: Vec<Vec<Rational>> =
                (0..n).map(|i| (0..=n).filter(|&j| j != k).map(|j| mom[i + j].clone()).collect()).collect();
            minus_one_pow(n + k) * determinant(&minor) / &dn
        })
        .collect();
    let p = Polynomial::new(coeffs);
    let mut q = vec![Rational::zero(); n];
    for (k, pk) in p.coeffs().iter().enumerate() {
        for i in 0..k {
            q[k - 1 - i] += pk * &mom[i];
        }
    }
    Ok(OrthPolyPair { index: n, p, q: Polynomial::new(q) })
}

/// Coefficients of the P-fraction `−b_0/(a_0 − b_1/(a_1 − …))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFraction {
    pub b: Vec<Rational>,
    pub a: Vec<Polynomial>,
}

/// `b_j` and `a_j` from the steps `(m_j, l_j)` with `d_j` the leading
/// coefficient of `m_j`.
pub fn pfraction_coeffs(expansion: &SchurExpansion) -> Result<PFraction> {
    let n = expansion.len();
    let d = expansion.m_leads();
    let mut l = Vec::with_capacity(n);
    for (j, st) in expansion.steps.iter().enumerate() {
        match (&st.l, st.l_constant()) {
            (None, _) => {}
            (Some(_), Some(v)) => l.push(v),
            (Some(_), None) => return Err(Error::NotRegular { index: expansion.indices[j] }),
        }
    }
    if l.len() < n {
        if let Some(t) = &expansion.tail_l {
            l.push(t.clone());
        }
    }
    let mut b = vec![d[0].recip()];
    for j in 1..n {
        b.push((&l[j - 1] * &l[j - 1] * &d[j - 1] * &d[j]).recip());
    }
    let zm = |j: usize| expansion.steps[j].m.shift(1);
    let mut a = Vec::new();
    if let Some(l1) = l.first() {
        a.push((zm(0) - Polynomial::constant(l1.recip())).scale(&d[0].recip()));
    }
    for j in 1..n {
        if j >= l.len() {
            break;
        }
        let shift = l[j - 1].recip() + l[j].recip();
        a.push((zm(j) - Polynomial::constant(shift)).scale(&d[j].recip()));
    }
    let mut prev = 0;
    for (j, aj) in a.iter().enumerate() {
        let deg = expansion.indices[j] - prev;
        ensure_consistent!(
            aj.degree() == Degree::Finite(deg) && aj.leading_coeff().is_some_and(|c| c.is_one()),
            "a_{j} is not monic of degree {deg}"
        );
        prev = expansion.indices[j];
    }
    Ok(PFraction { b, a })
}

/// Orthogonal polynomials at `0 = n_0 < n_1 < … < n_N` together with the
/// three-term coefficients read off from them by division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthFamily {
    /// Entry `j` is the pair at `n_j`, starting with `n_0 = 0`.
    pub pairs: Vec<OrthPolyPair>,
    pub b: Vec<Rational>,
    pub a: Vec<Polynomial>,
}

/// Builds the family and checks `b_j P_{n_{j−1}} − a_j P_{n_j} + P_{n_{j+1}} = 0`
/// (and the same for `Q`) with `P_{−1} = 0`, `Q_{−1} = −1`.
pub fn orthogonal_family(s: &MomentSequence, indices: &[usize], free_tail: Option<&Rational>) -> Result<OrthFamily> {
    let mut pairs = vec![first_second_kind(s, 0, None)?];
    for &n in indices {
        pairs.push(first_second_kind(s, n, free_tail)?);
    }
    let lead = s.values()[indices[0] - 1].clone();
    ensure_consistent!(pairs[1].q == Polynomial::constant(lead.clone()), "Q_{} is not the constant {lead}", indices[0]);
    let mut b = vec![lead];
    let mut a = vec![pairs[1].p.clone()];
    for j in 1..indices.len() {
        let (quot, rem) = pairs[j + 1].p.div_rem(&pairs[j].p);
        let bj = -rem.leading_coeff().cloned().unwrap_or_else(Rational::zero);
        ensure_consistent!(!bj.is_zero(), "b_{j} vanishes");
        ensure_consistent!(
            rem == pairs[j - 1].p.scale(&-&bj),
            "remainder of P_{} is not a multiple of P_{}",
            indices[j],
            j - 1
        );
        let q_next = &(&quot * &pairs[j].q) - &pairs[j - 1].q.scale(&bj);
        ensure_consistent!(q_next == pairs[j + 1].q, "second-kind recurrence fails at j = {j}");
        b.push(bj);
        a.push(quot);
    }
    Ok(OrthFamily { pairs, b, a })
}

/// P-fraction coefficients from the steps, checked against those read off
/// the orthogonal family by division.
pub fn verified_pfraction(expansion: &SchurExpansion) -> Result<(PFraction, OrthFamily)> {
    let pf = pfraction_coeffs(expansion)?;
    let fam = orthogonal_family(&expansion.moments, &expansion.indices, expansion.free_tail.as_ref())?;
    ensure_consistent!(pf.b == fam.b, "b_j from the steps differ from the three-term recurrence");
    ensure_consistent!(
        pf.a.iter().zip(&fam.a).all(|(x, y)| x == y),
        "a_j from the steps differ from the three-term recurrence"
    );
    Ok((pf, fam))
}

/// `P⁺_{−1}, P⁺_0, …` and `Q⁺_{−1}, Q⁺_0, …` up to a common top index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StieltjesPolySeq {
    p_plus: Vec<Polynomial>,
    q_plus: Vec<Polynomial>,
}

impl StieltjesPolySeq {
    fn start() -> Self {
        StieltjesPolySeq {
            p_plus: vec![Polynomial::zero(), Polynomial::one()],
            q_plus: vec![Polynomial::one(), Polynomial::zero()],
        }
    }

    fn push(&mut self, p: Polynomial, q: Polynomial) {
        self.p_plus.push(p);
        self.q_plus.push(q);
    }

    /// Largest available index.
    pub fn top(&self) -> usize {
        self.p_plus.len() - 2
    }

    pub fn p(&self, k: i64) -> &Polynomial {
        &self.p_plus[(k + 1) as usize]
    }

    pub fn q(&self, k: i64) -> &Polynomial {
        &self.q_plus[(k + 1) as usize]
    }
}

/// Stieltjes polynomials from the orthogonal polynomials:
/// `P⁺_{2i−1} = −(P_{n_i}(z) P_{n_{i−1}}(0) − P_{n_{i−1}}(z) P_{n_i}(0)) / (b_0⋯b_{i−1})`,
/// `P⁺_{2i} = P_{n_i}/P_{n_i}(0)`, and likewise for `Q⁺` with `Q⁺_{2i} = −Q_{n_i}/P_{n_i}(0)`.
pub fn stieltjes_polys_determinant(s: &MomentSequence, expansion: &SchurExpansion) -> Result<StieltjesPolySeq> {
    let n = expansion.len();
    let odd = expansion.parity == Parity::Odd;
    let fam = orthogonal_family(s, &expansion.indices, expansion.free_tail.as_ref())?;
    let zero = Rational::zero();
    let mut seq = StieltjesPolySeq::start();
    let mut bprod = Rational::one();
    for i in 1..=n {
        bprod *= &fam.b[i - 1];
        let (cur, prev) = (&fam.pairs[i], &fam.pairs[i - 1]);
        let (c0, p0) = (cur.p.eval(&zero), prev.p.eval(&zero));
        let inv = bprod.recip();
        let p_odd = (&cur.p.scale(&p0) - &prev.p.scale(&c0)).scale(&-&inv);
        let q_odd = (&cur.q.scale(&p0) - &prev.q.scale(&c0)).scale(&inv);
        if odd && i == n && expansion.free_tail.is_none() {
            // The top odd-index polynomial must not depend on the free moment.
            let alt = first_second_kind(s, cur.index, Some(&Rational::one()))?;
            let a0 = alt.p.eval(&zero);
            let p_alt = (&alt.p.scale(&p0) - &prev.p.scale(&a0)).scale(&-&inv);
            let q_alt = (&alt.q.scale(&p0) - &prev.q.scale(&a0)).scale(&inv);
            ensure_consistent!(p_alt == p_odd && q_alt == q_odd, "P+_{} depends on the free moment", 2 * n - 1);
        }
        seq.push(p_odd, q_odd);
        let terminal_free = odd && i == n;
        if terminal_free && expansion.free_tail.is_none() {
            break;
        }
        if c0.is_zero() {
            if terminal_free {
                break;
            }
            return Err(Error::NotRegular { index: cur.index });
        }
        let inv0 = c0.recip();
        seq.push(cur.p.scale(&inv0), cur.q.scale(&-&inv0));
    }
    Ok(seq)
}

/// Stieltjes polynomials from the continued-fraction recurrences
/// `P⁺_{2i−1} = −z m_i P⁺_{2i−2} + P⁺_{2i−3}` and `P⁺_{2i} = l_i P⁺_{2i−1} + P⁺_{2i−2}`.
pub fn stieltjes_polys_recurrence(expansion: &SchurExpansion) -> StieltjesPolySeq {
    let mut seq = StieltjesPolySeq::start();
    let n = expansion.len();
    for (i, st) in expansion.steps.iter().enumerate() {
        let k = 2 * i as i64 + 1;
        let zm = st.m.shift(1);
        let p = seq.p(k - 2) - &zm * seq.p(k - 1);
        let q = seq.q(k - 2) - &zm * seq.q(k - 1);
        seq.push(p, q);
        let l = match (&st.l, &expansion.tail_l) {
            (Some(l), _) => l.clone(),
            (None, Some(t)) if i + 1 == n => Polynomial::constant(t.clone()),
            (None, _) => break,
        };
        let p = seq.p(k - 1) + &l * seq.p(k);
        let q = seq.q(k - 1) + &l * seq.q(k);
        seq.push(p, q);
    }
    seq
}

/// Partial product of the factors `M_1 L_1 M_2 L_2 …` with `k` factors.
pub fn partial_product(expansion: &SchurExpansion, k: usize) -> PolyMatrix2 {
    let mut w = PolyMatrix2::identity();
    let mut used = 0;
    for st in &expansion.steps {
        if used == k {
            break;
        }
        w = w.mul(&st.m_factor());
        used += 1;
        if used == k {
            break;
        }
        if let Some(lf) = st.l_factor() {
            w = w.mul(&lf);
            used += 1;
        }
    }
    w
}

/// Entry matrix of the Stieltjes polynomials at step `k`:
/// `[[Q⁺_k, Q⁺_{k−1}], [P⁺_k, P⁺_{k−1}]]` for odd `k`, columns swapped for even `k`.
pub fn entry_matrix(seq: &StieltjesPolySeq, k: usize) -> PolyMatrix2 {
    let k = k as i64;
    if k % 2 == 1 {
        PolyMatrix2::new(seq.q(k).clone(), seq.q(k - 1).clone(), seq.p(k).clone(), seq.p(k - 1).clone())
    } else {
        PolyMatrix2::new(seq.q(k - 1).clone(), seq.q(k).clone(), seq.p(k - 1).clone(), seq.p(k).clone())
    }
}

/// The solution matrix `W_{2N−1}` (odd) or `W_{2N}` (even). It is built as the
/// factor product and compared, at every partial product, with the matrix of
/// Stieltjes polynomials from both routes; every partial product must have
/// determinant 1.
pub fn solution_matrix(expansion: &SchurExpansion) -> Result<PolyMatrix2> {
    let by_det = stieltjes_polys_determinant(&expansion.moments, expansion)?;
    let by_rec = stieltjes_polys_recurrence(expansion);
    let shared = by_det.top().min(by_rec.top());
    for k in -1..=shared as i64 {
        ensure_consistent!(
            by_det.p(k) == by_rec.p(k) && by_det.q(k) == by_rec.q(k),
            "Stieltjes polynomials of index {k} differ between the two constructions"
        );
    }
    let factors = expansion.steps.len() + expansion.steps.iter().filter(|s| s.l.is_some()).count();
    let mut w = PolyMatrix2::identity();
    let mut k = 0;
    for st in &expansion.steps {
        let mut fs = vec![st.m_factor()];
        fs.extend(st.l_factor());
        for f in fs {
            w = w.mul(&f);
            k += 1;
            ensure_consistent!(w.det() == Polynomial::one(), "det W_{k} = {}", w.det());
            if k <= by_det.top() {
                ensure_consistent!(w == entry_matrix(&by_det, k), "W_{k} differs from its Stieltjes-polynomial form");
            }
        }
    }
    ensure_consistent!(k == factors, "factor count");
    Ok(w)
}

/// `Q⁺_j / P⁺_j`.
pub fn convergent(seq: &StieltjesPolySeq, j: usize) -> Result<RationalFunction> {
    if j == 0 || j > seq.top() {
        return Err(Error::MalformedInput(format!("convergent {j} is outside 1..={}", seq.top())));
    }
    let den = seq.p(j as i64);
    if den.is_zero() {
        return Err(Error::DegenerateParameter);
    }
    RationalFunction::new(seq.q(j as i64).clone(), den.clone())
}

/// One evaluated identity at `P(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub j: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroValueReport {
    pub checks: Vec<IdentityCheck>,
}

impl ZeroValueReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Evaluate the three identities tying `P_{n_j}(0)` to `d_j`, `l_j` and `b_j`:
/// `P_{n_j}(0) = (−1)^j Π_{i≤j} 1/(d_i l_i)`,
/// `P_{n_j}(0)² = d_{j+1} Π_{i≤j} b_i` and
/// `P_{n_{j−1}}(0) P_{n_j}(0) = −(1/l_j) Π_{i<j} b_i`.
pub fn zero_value_identities(s: &MomentSequence, expansion: &SchurExpansion) -> Result<ZeroValueReport> {
    let fam = orthogonal_family(s, &expansion.indices, expansion.free_tail.as_ref())?;
    let d = expansion.m_leads();
    let mut l = expansion.l_values();
    if l.len() < expansion.len() {
        if let Some(t) = &expansion.tail_l {
            l.push(t.clone());
        }
    }
    let zero = Rational::zero();
    let at0: Vec<Rational> = fam.pairs.iter().map(|p| p.p.eval(&zero)).collect();
    let mut checks = Vec::new();
    let mut prod = Rational::one();
    for j in 0..=l.len() {
        if j > 0 {
            prod /= &d[j - 1] * &l[j - 1];
        }
        checks.push(IdentityCheck { identity: "value", j, pass: at0[j] == minus_one_pow(j) * &prod });
    }
    let mut bprod = Rational::one();
    for j in 0..expansion.len() {
        bprod *= &fam.b[j];
        checks.push(IdentityCheck { identity: "square", j, pass: &at0[j] * &at0[j] == &d[j] * &bprod });
    }
    let mut bprod = Rational::one();
    for j in 1..=l.len() {
        bprod *= &fam.b[j - 1];
        checks.push(IdentityCheck {
            identity: "product",
            j,
            pass: &at0[j - 1] * &at0[j] == -(l[j - 1].recip() * &bprod),
        });
    }
    Ok(ZeroValueReport { checks })
}

/// A solution `f = T_W[τ]` and the moments read back from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionDescription {
    pub f: RationalFunction,
    pub reproduced: Vec<Rational>,
}

/// `f = T_W[τ]` for an admissible `τ`; fails unless the expansion of `f` at
/// infinity starts with `−s_0/z − … − s_ℓ/z^{ℓ+1}`.
pub fn describe_solution(expansion: &SchurExpansion, w: &PolyMatrix2, tau: &Parameter) -> Result<SolutionDescription> {
    let verdict = admissible_for(tau, expansion.parity);
    if !verdict.admissible {
        return Err(Error::Inadmissible(verdict.reason));
    }
    let f = lft_apply(w, tau)?;
    let ell = expansion.moments.ell();
    let reproduced = reproduced_moments(&f, ell + 1)?;
    ensure_consistent!(
        reproduced == expansion.moments.values(),
        "solution reproduces ({}) instead of {}",
        reproduced.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
        expansion.moments
    );
    Ok(SolutionDescription { f, reproduced })
}

/// The first `count` moments of `f`, or an error if `f` does not vanish at infinity.
pub fn reproduced_moments(f: &RationalFunction, count: usize) -> Result<Vec<Rational>> {
    let tail = laurent_expand_at_infinity(f, -(count as i64))?;
    if !f.is_zero() && tail.top_power() >= 0 {
        return Err(Error::Consistency(format!("function grows like z^{} at infinity", tail.top_power())));
    }
    tail.moments(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StringClass {
    /// Positive constant masses and lengths.
    Classical,
    /// Constant masses and lengths of mixed sign.
    Signed,
    /// Some mass is a polynomial of positive degree.
    Multipole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringData {
    pub masses: Vec<Polynomial>,
    pub lengths: Vec<Polynomial>,
    pub class: StringClass,
}

pub fn string_data(expansion: &SchurExpansion) -> StringData {
    let masses: Vec<Polynomial> = expansion.steps.iter().map(|s| s.m.clone()).collect();
    let lengths: Vec<Polynomial> = expansion.steps.iter().filter_map(|s| s.l.clone()).collect();
    let class = if masses.iter().chain(&lengths).any(|p| !p.is_constant()) {
        StringClass::Multipole
    } else if masses.iter().chain(&lengths).all(|p| p.coeff(0).is_positive()) {
        StringClass::Classical
    } else {
        StringClass::Signed
    };
    StringData { masses, lengths, class }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::schur::{schur_expand, schur_expand_with, ExpandOptions};

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    fn unit_mass() -> SchurExpansion {
        schur_expand(&MomentSequence::from_ints(&[1, 1]), Parity::Even).unwrap()
    }

    #[test]
    fn first_kind_unit_mass() {
        let pair = first_second_kind(&MomentSequence::from_ints(&[1, 1]), 1, None).unwrap();
        assert_eq!(pair.p, p(&[-1, 1]));
        assert_eq!(pair.q, p(&[1]));
        let zero = first_second_kind(&MomentSequence::from_ints(&[1, 1]), 0, None).unwrap();
        assert_eq!((zero.p, zero.q), (Polynomial::one(), Polynomial::zero()));
    }

    #[test]
    fn first_kind_is_monic() {
        let pair = first_second_kind(&MomentSequence::from_ints(&[0, 1, 0, 0]), 2, None).unwrap();
        assert_eq!(pair.p.degree(), Degree::Finite(2));
        assert_eq!(pair.p.leading_coeff(), Some(&int(1)));
        assert!(matches!(
            first_second_kind(&MomentSequence::from_ints(&[1, 1, 1, 1]), 2, None),
            Err(Error::NotNormalIndex { order: 2 })
        ));
    }

    #[test]
    fn pfraction_unit_mass() {
        let pf = pfraction_coeffs(&unit_mass()).unwrap();
        assert_eq!(pf.b, vec![int(1)]);
        assert_eq!(pf.a, vec![p(&[-1, 1])]);
    }

    #[test]
    fn unit_mass_polynomials() {
        let e = unit_mass();
        let det = stieltjes_polys_determinant(&e.moments, &e).unwrap();
        let rec = stieltjes_polys_recurrence(&e);
        assert_eq!(det, rec);
        assert_eq!(det.p(1), &p(&[0, -1]));
        assert_eq!(det.p(2), &p(&[1, -1]));
        assert_eq!(det.q(1), &p(&[1]));
        assert_eq!(det.q(2), &p(&[1]));
    }

    #[test]
    fn unit_mass_solution() {
        let e = unit_mass();
        let w = solution_matrix(&e).unwrap();
        assert_eq!(w, PolyMatrix2::new(p(&[1]), p(&[1]), p(&[0, -1]), p(&[1, -1])));
        let sol = describe_solution(&e, &w, &Parameter::zero()).unwrap();
        assert_eq!(sol.f, RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap());
        let tau = RationalFunction::new(p(&[-1]), p(&[-2, 1])).unwrap();
        assert!(describe_solution(&e, &w, &tau.into()).is_ok());
        assert!(matches!(describe_solution(&e, &w, &Parameter::Infinity), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn convergents_of_unit_mass() {
        let e = unit_mass();
        let seq = stieltjes_polys_recurrence(&e);
        assert_eq!(convergent(&seq, 1).unwrap(), RationalFunction::new(p(&[1]), p(&[0, -1])).unwrap());
        assert_eq!(convergent(&seq, 2).unwrap(), RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap());
    }

    #[test]
    fn zero_values_unit_mass() {
        let e = unit_mass();
        let r = zero_value_identities(&e.moments, &e).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn odd_expansion_with_and_without_free_tail() {
        let s = MomentSequence::from_ints(&[1, 1, 2]);
        let e = schur_expand(&s, Parity::Odd).unwrap();
        let w = solution_matrix(&e).unwrap();
        assert!(describe_solution(&e, &w, &Parameter::Infinity).is_ok());
        let e3 = schur_expand_with(&s, &ExpandOptions { parity: None, free_tail: Some(int(5)), audit: true }).unwrap();
        let seq = stieltjes_polys_determinant(&s, &e3).unwrap();
        assert_eq!(seq.top(), 4);
        assert_eq!(seq, stieltjes_polys_recurrence(&e3));
        assert!(zero_value_identities(&s, &e3).unwrap().all_pass());
    }

    #[test]
    fn pfraction_matches_division() {
        for case in crate::corpus::regular_corpus(9, 12, 3, 2, 20) {
            let e = schur_expand(&case.moments, case.parity).unwrap();
            let (pf, fam) = verified_pfraction(&e).unwrap();
            assert_eq!(pf.b.len(), e.len());
            assert_eq!(fam.pairs.len(), e.len() + 1);
        }
        let s = MomentSequence::from_ints(&[1, 2, 5]);
        let e = schur_expand_with(&s, &ExpandOptions { parity: None, free_tail: Some(int(3)), audit: true }).unwrap();
        let (pf, _) = verified_pfraction(&e).unwrap();
        assert_eq!(pf.a.len(), pf.b.len());
    }

    #[test]
    fn string_classes() {
        assert_eq!(string_data(&unit_mass()).class, StringClass::Classical);
        let e = schur_expand(&MomentSequence::from_ints(&[-1, 1]), Parity::Even).unwrap();
        assert_eq!(string_data(&e).class, StringClass::Signed);
        let e = schur_expand(&MomentSequence::from_ints(&[0, 1, 0]), Parity::Odd).unwrap();
        assert_eq!(string_data(&e).class, StringClass::Multipole);
    }
}
