//! The Schur algorithm: basic odd and even steps and the full recursion over
//! the normal indices of a regular sequence.

use num_traits::Signed;

use crate::algebra::{poly_negative_index, Degree, Parameter, PolyMatrix2, Polynomial, Rational};
use crate::error::{ensure_consistent, Error, Result};
use crate::hankel::{
    first_normal_index, hankel_inertia, normal_indices, solvability_indices, HankelShift, MomentSequence, Parity,
};
use crate::toeplitz::{step_down_l, step_down_l_poly, step_down_m, StepDownResult};

/// One pair `(m_j, l_j)` of the continued fraction. `l` is absent only in the
/// terminal step of an odd expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurStep {
    /// `n_j − n_{j−1}`.
    pub order: usize,
    pub m: Polynomial,
    pub l: Option<Polynomial>,
    pub kappa_zm: usize,
    pub kappa_m: usize,
    pub kappa_zl: Option<usize>,
    pub kappa_l: Option<usize>,
}

impl SchurStep {
    pub fn new(order: usize, m: Polynomial, l: Option<Polynomial>) -> Self {
        let kappa_zm = poly_negative_index(&m.shift(1));
        let kappa_m = poly_negative_index(&m);
        let kappa_zl = l.as_ref().map(|l| poly_negative_index(&l.shift(1)));
        let kappa_l = l.as_ref().map(poly_negative_index);
        SchurStep { order, m, l, kappa_zm, kappa_m, kappa_zl, kappa_l }
    }

    /// Leading coefficient of `m`.
    pub fn m_lead(&self) -> &Rational {
        self.m.leading_coeff().expect("m is never zero")
    }

    /// `l` when it is a constant.
    pub fn l_constant(&self) -> Option<Rational> {
        self.l.as_ref().filter(|l| l.is_constant()).map(|l| l.coeff(0))
    }

    pub fn m_factor(&self) -> PolyMatrix2 {
        PolyMatrix2::m_factor(&self.m)
    }

    pub fn l_factor(&self) -> Option<PolyMatrix2> {
        self.l.as_ref().map(PolyMatrix2::l_factor)
    }
}

/// Result of running the algorithm on a regular sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub moments: MomentSequence,
    pub parity: Parity,
    /// Normal indices `n_1 < … < n_N`.
    pub indices: Vec<usize>,
    pub steps: Vec<SchurStep>,
    pub kappa_n: usize,
    pub k_n: usize,
    /// `s^{(1)}, s^{(2)}, …`: the sequences left after each completed pair.
    pub intermediate: Vec<MomentSequence>,
    /// The `𝔰` sequence produced by each `m`-step (starting at index −1).
    pub frak: Vec<MomentSequence>,
    /// Supplied value of the free moment `s_{2n_N−1}` (odd parity only).
    pub free_tail: Option<Rational>,
    /// `l_N` of the even expansion obtained by appending `free_tail`, when
    /// that expansion is regular.
    pub tail_l: Option<Rational>,
    /// Number of step-down inertia relations that were checked.
    pub audited_relations: usize,
}

impl SchurExpansion {
    pub fn terminal_has_l(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `l_j` as constants (all of them in a regular expansion).
    pub fn l_values(&self) -> Vec<Rational> {
        self.steps.iter().filter_map(|s| s.l_constant()).collect()
    }

    /// Leading coefficients `d_j` of `m_j`.
    pub fn m_leads(&self) -> Vec<Rational> {
        self.steps.iter().map(|s| s.m_lead().clone()).collect()
    }
}

/// Options for [`schur_expand_with`].
#[derive(Debug, Clone, Default)]
pub struct ExpandOptions {
    /// Must agree with the parity of `ℓ` when given.
    pub parity: Option<Parity>,
    pub free_tail: Option<Rational>,
    /// Check the step-down inertia relations on every intermediate sequence.
    pub audit: bool,
}

/// `κ₋(z m_1)` predicted from `ν_1` and the sign of `s_{ν_1−1}` alone.
pub fn closed_form_kappa1(nu: usize, lead_negative: bool) -> usize {
    if nu % 2 == 1 && lead_negative {
        nu.div_ceil(2)
    } else {
        nu / 2
    }
}

/// `κ₋(m_1)` predicted from `ν_1` and the sign of `s_{ν_1−1}`.
pub fn closed_form_k1(nu: usize, lead_negative: bool) -> usize {
    if nu.is_multiple_of(2) && lead_negative {
        nu / 2
    } else {
        (nu - 1) / 2
    }
}

/// `κ₋(m_1)` expressed through `κ₋(z m_1)`.
pub fn closed_form_k1_from_kappa1(nu: usize, lead_negative: bool, kappa1: usize) -> usize {
    let drop = (nu % 2 == 1 && lead_negative) || (nu.is_multiple_of(2) && !lead_negative);
    if drop {
        kappa1 - 1
    } else {
        kappa1
    }
}

/// Odd basic problem `ℓ = 2ν_1 − 2`: a single `m`-step and no `l`.
pub fn basic_odd_step(s: &MomentSequence, free_tail: Option<&Rational>) -> Result<(PolyMatrix2, SchurStep)> {
    let nu = first_normal_index(s)?;
    if s.ell() != 2 * nu - 2 {
        return Err(Error::NotBasicForm(format!(
            "odd basic problem needs ell = {} for first normal index {nu}, got {}",
            2 * nu - 2,
            s.ell()
        )));
    }
    let sd = step_down_m(s, nu, free_tail)?;
    let step = SchurStep::new(nu, sd.m, None);
    let negative = s.values()[nu - 1].is_negative();
    let kappa1 = hankel_inertia(s, nu, HankelShift::Zero)?.nu_minus;
    let k1 = hankel_inertia(s, nu - 1, HankelShift::Plus)?.nu_minus;
    ensure_consistent!(
        step.kappa_zm == kappa1 && kappa1 == closed_form_kappa1(nu, negative),
        "kappa_1 mismatch: polynomial {} vs inertia {kappa1}",
        step.kappa_zm
    );
    ensure_consistent!(
        step.kappa_m == k1 && k1 == closed_form_k1(nu, negative),
        "k_1 mismatch: polynomial {} vs inertia {k1}",
        step.kappa_m
    );
    ensure_consistent!(closed_form_k1_from_kappa1(nu, negative, kappa1) == k1, "k_1 does not follow from kappa_1");
    Ok((step.m_factor(), step))
}

/// Even basic problem `ℓ = 2μ_1 − 1`: an `m`-step followed by an `l`-step,
/// where `l` is a polynomial when `ν_1 < μ_1`.
pub fn basic_even_step(s: &MomentSequence) -> Result<(PolyMatrix2, SchurStep)> {
    let report = normal_indices(s)?;
    let nu = report.indices[0];
    let Some(mu) = report.mu_subset.first().copied() else {
        return Err(Error::NotBasicForm("no index with nonsingular shifted block in range".into()));
    };
    if s.ell() != 2 * mu - 1 {
        return Err(Error::NotBasicForm(format!("even basic problem needs ell = {}, got {}", 2 * mu - 1, s.ell())));
    }
    let sd = step_down_m(s, nu, None)?;
    let (l, rest) = match step_down_l(&sd.frak_s) {
        Ok((l, rest)) => (Polynomial::constant(l), rest),
        Err(Error::RequiresPolynomialL) => step_down_l_poly(&sd.frak_s)?,
        Err(e) => return Err(e),
    };
    ensure_consistent!(rest.is_empty(), "basic even step left {} unused moments", rest.len());
    ensure_consistent!(l.degree() == Degree::Finite(mu - nu), "deg l = {} but mu - nu = {}", l.degree(), mu - nu);
    let step = SchurStep::new(nu, sd.m, Some(l));
    let kappa1 = hankel_inertia(s, mu, HankelShift::Zero)?.nu_minus;
    let k1 = hankel_inertia(s, mu, HankelShift::Plus)?.nu_minus;
    let kappa_sum = step.kappa_zm + step.kappa_l.unwrap_or(0);
    let k_sum = step.kappa_m + step.kappa_zl.unwrap_or(0);
    ensure_consistent!(kappa_sum == kappa1, "kappa_1: steps give {kappa_sum}, inertia gives {kappa1}");
    ensure_consistent!(k_sum == k1, "k_1: steps give {k_sum}, inertia gives {k1}");
    let w = step.m_factor().mul(&step.l_factor().expect("even step has l"));
    Ok((w, step))
}

fn check_intermediate(seq: &MomentSequence, expected: &[usize]) -> Result<()> {
    let got = normal_indices(seq)?.indices;
    ensure_consistent!(got == expected, "intermediate normal indices {got:?}, expected {expected:?}");
    Ok(())
}

/// Check the inertia relations between a sequence `cur`, the `𝔰` sequence of
/// its `m`-step of order `nu`, and (when present) the sequence `next` left by
/// the following `l`-step. Returns the number of relations checked.
pub fn audit_step_down(
    cur: &MomentSequence,
    nu: usize,
    frak: &MomentSequence,
    next: Option<&MomentSequence>,
) -> Result<usize> {
    let mut checked = 0;
    let ell = cur.ell();
    if ell + 1 < 2 * nu || frak.is_empty() {
        return Ok(0);
    }
    let inner = frak.from_zero();
    let base = hankel_inertia(cur, nu, HankelShift::Zero)?;
    let base_plus = hankel_inertia(cur, nu - 1, HankelShift::Plus)?;
    // Blocks (𝔰_{i+j}) against S_{p+ν}.
    let mut p = 1;
    while 2 * (p + nu) - 2 <= ell {
        let small = hankel_inertia(&inner, p, HankelShift::Zero)?;
        let big = hankel_inertia(cur, p + nu, HankelShift::Zero)?;
        ensure_consistent!(
            small.nu_zero == big.nu_zero
                && small.nu_minus + base.nu_minus == big.nu_minus
                && small.nu_plus + base.nu_plus == big.nu_plus,
            "m-step block relation fails at p = {p}: {small} vs {big} - {base}"
        );
        checked += 1;
        p += 1;
    }
    // Blocks (𝔰_{i+j−1}) against S⁺_{p+ν−1}.
    let mut p = 1;
    while 2 * (p + nu) - 3 <= ell {
        let small = hankel_inertia(frak, p, HankelShift::Minus)?;
        let big = hankel_inertia(cur, p + nu - 1, HankelShift::Plus)?;
        ensure_consistent!(
            small.nu_zero == big.nu_zero
                && small.nu_minus + base_plus.nu_minus == big.nu_minus
                && small.nu_plus + base_plus.nu_plus == big.nu_plus,
            "m-step shifted relation fails at p = {p}: {small} vs {big} - {base_plus}"
        );
        checked += 1;
        p += 1;
    }
    let Some(next) = next else {
        return Ok(checked);
    };
    let lead = frak.get(-1)?;
    let lead_neg = usize::from(lead.is_negative());
    let lead_pos = usize::from(lead.is_positive());
    let last = next.last_index();
    let mut p = 1;
    while 2 * p as i64 - 2 <= last {
        let a = hankel_inertia(next, p, HankelShift::Zero)?;
        let b = hankel_inertia(&inner, p, HankelShift::Zero)?;
        ensure_consistent!(a == b, "l-step block relation fails at p = {p}: {a} vs {b}");
        checked += 1;
        p += 1;
    }
    let mut p = 1;
    while 2 * p as i64 - 1 <= last {
        let a = hankel_inertia(next, p, HankelShift::Plus)?;
        let b = hankel_inertia(frak, p + 1, HankelShift::Minus)?;
        ensure_consistent!(
            a.nu_zero == b.nu_zero && a.nu_minus + lead_neg == b.nu_minus && a.nu_plus + lead_pos == b.nu_plus,
            "l-step shifted relation fails at p = {p}: {a} vs {b}"
        );
        checked += 1;
        p += 1;
    }
    Ok(checked)
}

/// Run the algorithm with default options (parity from `ℓ`, audits on).
pub fn schur_expand(s: &MomentSequence, parity: Parity) -> Result<SchurExpansion> {
    schur_expand_with(s, &ExpandOptions { parity: Some(parity), free_tail: None, audit: true })
}

pub fn schur_expand_with(s: &MomentSequence, opts: &ExpandOptions) -> Result<SchurExpansion> {
    if s.start() != 0 {
        return Err(Error::MalformedInput("moment sequence must start at s_0".into()));
    }
    let ell = s.ell();
    let parity = Parity::of_ell(ell);
    if let Some(p) = opts.parity {
        if p != parity {
            return Err(Error::MalformedInput(format!(
                "{p} parity needs {} ell, got ell = {ell}",
                if p == Parity::Odd { "even" } else { "odd" }
            )));
        }
    }
    let report = normal_indices(s)?;
    let top = report.top();
    let expected = parity.required_ell(top);
    if ell < expected {
        return Err(Error::InsufficientMoments { index: expected as i64 });
    }
    if ell > expected {
        return Err(Error::Degenerate { ell, top, expected });
    }
    if let Some(index) = report.first_irregular {
        return Err(Error::NotRegular { index });
    }
    let indices = report.indices.clone();
    let n = indices.len();
    let mut steps = Vec::with_capacity(n);
    let mut intermediate = Vec::new();
    let mut frak = Vec::new();
    let mut audited = 0;
    let mut cur = s.clone();
    let mut prev = 0;
    for (j, &nj) in indices.iter().enumerate() {
        let nu = nj - prev;
        let terminal = j + 1 == n;
        if j > 0 {
            let shifted: Vec<usize> = indices[j..].iter().map(|&x| x - prev).collect();
            check_intermediate(&cur, &shifted)?;
        }
        ensure_consistent!(first_normal_index(&cur)? == nu, "step {} expected order {nu}", j + 1);
        let sd: StepDownResult = step_down_m(&cur, nu, None)?;
        ensure_consistent!(
            sd.m.degree() == Degree::Finite(nu - 1),
            "deg m_{} = {}, expected {}",
            j + 1,
            sd.m.degree(),
            nu - 1
        );
        ensure_consistent!(
            sd.m.leading_coeff() == Some(&cur.values()[nu - 1].recip()),
            "leading coefficient of m_{} is not 1/s_{}",
            j + 1,
            nu - 1
        );
        if terminal && parity == Parity::Odd {
            steps.push(SchurStep::new(nu, sd.m, None));
            break;
        }
        let (l, next) = match step_down_l(&sd.frak_s) {
            Ok(v) => v,
            Err(Error::RequiresPolynomialL) => return Err(Error::NotRegular { index: nj }),
            Err(e) => return Err(e),
        };
        if opts.audit {
            audited += audit_step_down(&cur, nu, &sd.frak_s, Some(&next))?;
        }
        frak.push(sd.frak_s);
        steps.push(SchurStep::new(nu, sd.m, Some(Polynomial::constant(l))));
        intermediate.push(next.clone());
        cur = next;
        prev = nj;
    }
    let degree_sum: usize = steps.iter().map(|s| s.order).sum();
    ensure_consistent!(degree_sum == top, "sum of deg(z m_j) = {degree_sum}, expected {top}");
    let kappa_n: usize = steps.iter().map(|s| s.kappa_zm).sum();
    let k_n: usize = steps.iter().map(|s| s.kappa_m + s.kappa_zl.unwrap_or(0)).sum();
    let (kappa_ref, k_ref) = solvability_indices(s, parity)?;
    ensure_consistent!(kappa_n == kappa_ref, "kappa_N: steps give {kappa_n}, inertia gives {kappa_ref}");
    ensure_consistent!(k_n == k_ref, "k_N: steps give {k_n}, inertia gives {k_ref}");

    let free_tail = if parity == Parity::Odd { opts.free_tail.clone() } else { None };
    let tail_l = match &free_tail {
        Some(v) => {
            let ext = s.extended(v.clone());
            let sub = ExpandOptions { parity: Some(Parity::Even), free_tail: None, audit: false };
            match schur_expand_with(&ext, &sub) {
                Ok(e) => e.steps.last().and_then(|st| st.l_constant()),
                Err(Error::NotRegular { .. }) => None,
                Err(e) => return Err(e),
            }
        }
        None => None,
    };
    Ok(SchurExpansion {
        moments: s.clone(),
        parity,
        indices,
        steps,
        kappa_n,
        k_n,
        intermediate,
        frak,
        free_tail,
        tail_l,
        audited_relations: audited,
    })
}

/// Solvability verdict for `MP_κ^k(s, ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solvability {
    pub solvable: bool,
    pub kappa_n: usize,
    pub k_n: usize,
}

pub fn check_solvable(s: &MomentSequence, kappa: usize, k: usize, parity: Parity) -> Result<Solvability> {
    let e = schur_expand(s, parity)?;
    Ok(Solvability { solvable: e.kappa_n <= kappa && e.k_n <= k, kappa_n: e.kappa_n, k_n: e.k_n })
}

/// Verdict on the asymptotic side condition for a parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    pub reason: String,
}

/// Odd problems need `1/τ = o(z)`, even problems `τ = o(1)`. Membership of
/// `τ` in the residual function class is not decided here.
pub fn admissible_for(tau: &Parameter, parity: Parity) -> Admissibility {
    let (admissible, reason) = match (parity, tau) {
        (Parity::Odd, Parameter::Infinity) => (true, "1/tau = 0".to_string()),
        (Parity::Even, Parameter::Infinity) => (false, "tau = infinity is not o(1)".to_string()),
        (Parity::Odd, Parameter::Function(f)) => match f.growth() {
            None => (false, "1/tau is undefined for tau = 0".to_string()),
            Some(g) if g >= 0 => (true, format!("1/tau decays like z^{}", -g)),
            Some(g) => (false, format!("1/tau grows like z^{}, which is not o(z)", -g)),
        },
        (Parity::Even, Parameter::Function(f)) => match f.growth() {
            None => (true, "tau = 0".to_string()),
            Some(g) if g < 0 => (true, format!("tau decays like z^{g}")),
            Some(g) => (false, format!("tau grows like z^{g}, which is not o(1)")),
        },
    };
    Admissibility { admissible, reason }
}

pub fn parameter_admissibility(tau: &Parameter, expansion: &SchurExpansion) -> Admissibility {
    admissible_for(tau, expansion.parity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, RationalFunction};
    use num_traits::Zero;

    fn seq(v: &[i64]) -> MomentSequence {
        MomentSequence::from_ints(v)
    }

    #[test]
    fn odd_basic_examples() {
        let (_, st) = basic_odd_step(&seq(&[1]), None).unwrap();
        assert_eq!((st.m.clone(), st.kappa_zm, st.kappa_m), (Polynomial::one(), 0, 0));
        let (_, st) = basic_odd_step(&seq(&[-1]), None).unwrap();
        assert_eq!((st.m.clone(), st.kappa_zm, st.kappa_m), (Polynomial::constant(int(-1)), 1, 0));
        let (w, st) = basic_odd_step(&seq(&[0, 1, 0]), None).unwrap();
        assert_eq!((st.m.clone(), st.kappa_zm, st.kappa_m), (Polynomial::z(), 1, 0));
        assert_eq!(w, PolyMatrix2::m_factor(&Polynomial::z()));
    }

    #[test]
    fn even_basic_examples() {
        let (w, st) = basic_even_step(&seq(&[1, 1])).unwrap();
        assert_eq!(st.l_constant(), Some(int(1)));
        assert_eq!(
            w,
            PolyMatrix2::new(
                Polynomial::one(),
                Polynomial::one(),
                -Polynomial::z(),
                Polynomial::new(vec![int(1), int(-1)])
            )
        );
        let (_, st) = basic_even_step(&seq(&[-1, 1])).unwrap();
        assert_eq!(st.m, Polynomial::constant(int(-1)));
        assert_eq!(st.l_constant(), Some(int(1)));
        assert_eq!((st.kappa_zm, st.kappa_m + st.kappa_zl.unwrap()), (1, 0));
    }

    #[test]
    fn even_basic_with_polynomial_l() {
        let (_, st) = basic_even_step(&seq(&[0, 1, 0, 0, 1, 0])).unwrap();
        assert_eq!(st.m, Polynomial::z());
        assert_eq!(st.l, Some(Polynomial::z()));
        assert!(matches!(basic_even_step(&seq(&[0, 1, 0, 0])), Err(Error::NotBasicForm(_))));
    }

    #[test]
    fn closed_forms_match_polynomials() {
        for nu in 1..=6usize {
            for neg in [false, true] {
                let lead = if neg { int(-1) } else { int(1) };
                let mut v = vec![Rational::zero(); 2 * nu - 1];
                v[nu - 1] = lead;
                let (_, st) = basic_odd_step(&MomentSequence::new(v).unwrap(), None).unwrap();
                assert_eq!(st.kappa_zm, closed_form_kappa1(nu, neg));
                assert_eq!(st.kappa_m, closed_form_k1(nu, neg));
            }
        }
    }

    #[test]
    fn expand_point_mass() {
        let e = schur_expand(&seq(&[1, 1]), Parity::Even).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.steps[0].m, Polynomial::one());
        assert_eq!(e.steps[0].l_constant(), Some(int(1)));
        assert_eq!((e.kappa_n, e.k_n), (0, 0));
    }

    #[test]
    fn expand_two_atoms() {
        // 2δ_1 + δ_2
        let e = schur_expand(&seq(&[3, 4, 6, 10]), Parity::Even).unwrap();
        assert_eq!(e.len(), 2);
        for st in &e.steps {
            assert!(st.m.is_constant() && st.m.coeff(0).is_positive());
            assert!(st.l_constant().unwrap().is_positive());
        }
        assert_eq!((e.kappa_n, e.k_n), (0, 0));
        assert!(e.audited_relations > 0);
    }

    #[test]
    fn alternating_sequence_is_degenerate() {
        // D_2 = 0, so the only normal index is 1 while ell = 3.
        assert_eq!(
            schur_expand(&seq(&[-1, 1, -1, 1]), Parity::Even),
            Err(Error::Degenerate { ell: 3, top: 1, expected: 1 })
        );
        let s = seq(&[-1, 1, 2, 3]);
        let e = schur_expand(&s, Parity::Even).unwrap();
        assert_eq!(e.kappa_n, hankel_inertia(&s, 2, HankelShift::Zero).unwrap().nu_minus);
    }

    #[test]
    fn expand_factorial_moments() {
        let e = schur_expand(&seq(&[1, 1, 2, 6]), Parity::Even).unwrap();
        assert_eq!(e.indices, vec![1, 2]);
        assert_eq!(e.intermediate.len(), 2);
    }

    #[test]
    fn expand_errors() {
        assert_eq!(schur_expand(&seq(&[0, 0]), Parity::Even), Err(Error::NoNormalIndex));
        assert!(matches!(schur_expand(&seq(&[0, 1, 0, 0]), Parity::Even), Err(Error::NotRegular { index: 2 })));
        assert!(matches!(schur_expand(&seq(&[1, 1, 1]), Parity::Odd), Err(Error::Degenerate { .. })));
        assert!(matches!(schur_expand(&seq(&[1, 1]), Parity::Odd), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn solvability_verdicts() {
        assert!(check_solvable(&seq(&[1, 1]), 0, 0, Parity::Even).unwrap().solvable);
        assert!(!check_solvable(&seq(&[-1, 1]), 0, 0, Parity::Even).unwrap().solvable);
        assert!(check_solvable(&seq(&[-1, 1]), 1, 0, Parity::Even).unwrap().solvable);
    }

    #[test]
    fn admissibility_rules() {
        let p = |n: &[i64], d: &[i64]| {
            Parameter::Function(
                RationalFunction::new(
                    Polynomial::new(n.iter().map(|&c| int(c)).collect()),
                    Polynomial::new(d.iter().map(|&c| int(c)).collect()),
                )
                .unwrap(),
            )
        };
        assert!(admissible_for(&Parameter::zero(), Parity::Even).admissible);
        assert!(!admissible_for(&p(&[0, 1], &[1]), Parity::Even).admissible);
        assert!(!admissible_for(&p(&[-1], &[0, 1]), Parity::Odd).admissible);
        assert!(admissible_for(&p(&[3], &[1]), Parity::Odd).admissible);
        assert!(admissible_for(&Parameter::Infinity, Parity::Odd).admissible);
        assert!(!admissible_for(&Parameter::zero(), Parity::Odd).admissible);
        assert!(!admissible_for(&Parameter::Infinity, Parity::Even).admissible);
    }
}
