//! Seeded invariant suites behind the `selftest` command.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Parameter, Polynomial, Rational};
use crate::corpus::{self, KnownExpansion};
use crate::hankel::{hankel, HankelShift, Parity};
use crate::linalg::inertia;
use crate::oracle::{hessenberg_reciprocal, sturm_inertia};
use crate::report::ProblemInput;
use crate::schur::schur_expand;
use crate::stieltjes::{describe_solution, solution_matrix, verified_pfraction, zero_value_identities};
use crate::toeplitz::{dense_toeplitz_product, is_identity, toeplitz_reciprocal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestOptions {
    pub seed: u64,
    pub expansions: usize,
    pub matrices: usize,
    pub series: usize,
    pub measures: usize,
    /// Corrupt one corpus case so that the failure path can be exercised.
    pub inject_fault: bool,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions { seed: 0, expansions: 60, matrices: 100, series: 100, measures: 20, inject_fault: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub message: String,
    pub counterexample: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub command: &'static str,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
    pub pass: bool,
}

impl SelftestReport {
    pub fn first_failure(&self) -> Option<&Failure> {
        self.suites.iter().find_map(|s| s.failure.as_ref())
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out.push_str(&format!("{:<22} {:>4} cases  {}\n", s.name, s.cases, if s.pass { "pass" } else { "FAIL" }));
        }
        out.push_str(if self.pass { "all suites pass" } else { "some suites failed" });
        out
    }
}

fn suite<T>(name: &'static str, items: &[T], check: impl Fn(&T) -> Result<(), Failure>) -> SuiteResult {
    let failure = items.iter().find_map(|x| check(x).err());
    SuiteResult { name, cases: items.len(), pass: failure.is_none(), failure }
}

/// The failing input together with the steps it was generated from, laid out
/// like the `expansion.steps` of an `expand` report.
fn expansion_counterexample(case: &KnownExpansion) -> Value {
    let mut input = ProblemInput::from_moments(&case.moments);
    input.parity = Some(case.parity.to_string());
    let text = |v: &Rational| v.to_string();
    let steps: Vec<Value> = case
        .m
        .iter()
        .enumerate()
        .map(|(j, m)| {
            json!({
                "m": m.coeffs().iter().map(text).collect::<Vec<_>>(),
                "l": case.l.get(j).map(|l| vec![text(l)]),
            })
        })
        .collect();
    json!({ "input": input, "expected_steps": steps })
}

fn check_expansion(case: &KnownExpansion) -> Result<(), String> {
    let e = schur_expand(&case.moments, case.parity).map_err(|err| err.to_string())?;
    let m: Vec<Polynomial> = e.steps.iter().map(|s| s.m.clone()).collect();
    if m != case.m || e.l_values() != case.l {
        return Err("recovered steps differ from the generating continued fraction".into());
    }
    let w = solution_matrix(&e).map_err(|err| err.to_string())?;
    verified_pfraction(&e).map_err(|err| err.to_string())?;
    let zero = zero_value_identities(&e.moments, &e).map_err(|err| err.to_string())?;
    if !zero.all_pass() {
        return Err("zero-value identities fail".into());
    }
    let tau = match case.parity {
        Parity::Even => Parameter::zero(),
        Parity::Odd => Parameter::Infinity,
    };
    describe_solution(&e, &w, &tau).map_err(|err| err.to_string())?;
    for n in 1..=case.moments.ell() / 2 + 1 {
        let h = hankel(&case.moments, n, HankelShift::Zero).map_err(|err| err.to_string())?;
        if inertia(&h) != sturm_inertia(&h) {
            return Err(format!("inertia of S_{n} disagrees with the Sturm count"));
        }
    }
    Ok(())
}

pub fn run_selftest(opts: &SelftestOptions) -> SelftestReport {
    let mut cases = corpus::regular_corpus(opts.seed, opts.expansions, 4, 3, 100);
    if opts.inject_fault {
        if let Some(case) = cases.first_mut() {
            let mut values = case.moments.values().to_vec();
            let last = values.len() - 1;
            values[last] += crate::algebra::int(1);
            case.moments = crate::hankel::MomentSequence::with_start(0, values);
        }
    }
    let mut rng = corpus::rng(opts.seed.wrapping_add(1));
    let matrices: Vec<_> = (0..opts.matrices).map(|_| corpus::random_symmetric(&mut rng, 6, 12)).collect();
    let series: Vec<_> = (0..opts.series).map(|_| corpus::random_series(&mut rng, 9, 100)).collect();
    let measures: Vec<_> = (0..opts.measures).map(|_| corpus::random_measure(&mut rng, 4, 20)).collect();

    let suites = vec![
        suite("regular-expansions", &cases, |case| {
            check_expansion(case).map_err(|message| Failure { message, counterexample: expansion_counterexample(case) })
        }),
        suite("inertia-oracle", &matrices, |m| {
            let (a, b) = (inertia(m), sturm_inertia(m));
            if a == b {
                return Ok(());
            }
            let rows: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
            Err(Failure { message: format!("reduction {a} vs Sturm {b}"), counterexample: json!({ "matrix": rows }) })
        }),
        suite("toeplitz-reciprocal", &series, |c| {
            let fail = |message: &str| Failure {
                message: message.into(),
                counterexample: json!({ "series": c.coeffs().iter().map(|v| v.to_string()).collect::<Vec<_>>() }),
            };
            let d = toeplitz_reciprocal(c).map_err(|e| fail(&e.to_string()))?;
            if !is_identity(&dense_toeplitz_product(c, &d)) {
                return Err(fail("T(c)T(d) is not the identity"));
            }
            if toeplitz_reciprocal(&d).ok().as_ref() != Some(c) {
                return Err(fail("reciprocal is not an involution"));
            }
            if hessenberg_reciprocal(c).as_deref() != Some(d.coeffs()) {
                return Err(fail("determinant formula disagrees"));
            }
            Ok(())
        }),
        suite("classical-measures", &measures, |mu| {
            let s = mu.moments();
            let fail = |message: String| Failure {
                message,
                counterexample: serde_json::to_value(ProblemInput::from_moments(&s)).expect("input serializes"),
            };
            let e = schur_expand(&s, Parity::Even).map_err(|e| fail(e.to_string()))?;
            let classical = e.kappa_n == 0
                && e.k_n == 0
                && e.steps.iter().all(|st| st.m.is_constant() && num_traits::Signed::is_positive(&st.m.coeff(0)))
                && e.l_values().iter().all(num_traits::Signed::is_positive);
            if !classical {
                return Err(fail("positive measure did not give a classical string".into()));
            }
            Ok(())
        }),
    ];
    let pass = suites.iter().all(|s| s.pass);
    SelftestReport { command: "selftest", seed: opts.seed, suites, pass }
}
