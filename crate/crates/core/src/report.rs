//! JSON problem input and the reports produced by the commands.
//!
//! Rationals travel as strings `"p/q"` and polynomials as ascending
//! coefficient lists.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_field, Parameter, PolyMatrix2, Polynomial, Rational, RationalFunction};
use crate::error::{ensure_consistent, Error, Result};
use crate::hankel::{hankel_inertia, normal_indices, solvability_indices, HankelShift, MomentSequence, Parity};
use crate::linalg::Inertia;
use crate::schur::{schur_expand_with, ExpandOptions, SchurExpansion};
use crate::stieltjes::{
    describe_solution, solution_matrix, stieltjes_polys_recurrence, string_data, verified_pfraction,
    zero_value_identities, StringClass,
};

/// Rational-function literal, or the string `"infinity"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TauInput {
    Symbol(String),
    Function { num: Vec<String>, den: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemInput {
    pub moments: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_tail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<TauInput>,
}

/// A validated problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub moments: MomentSequence,
    pub parity: Option<Parity>,
    pub kappa: Option<usize>,
    pub k: Option<usize>,
    pub free_tail: Option<Rational>,
    pub tau: Option<Parameter>,
}

fn parse_poly(field: &str, coeffs: &[String]) -> Result<Polynomial> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| parse_field(&format!("{field}[{i}]"), c))
        .collect::<Result<Vec<_>>>()
        .map(Polynomial::new)
}

fn count(field: &str, v: Option<u64>) -> Result<Option<usize>> {
    v.map(|x| usize::try_from(x).map_err(|_| Error::Parse { field: field.into(), message: "out of range".into() }))
        .transpose()
}

impl ProblemInput {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { field: "input".into(), message: e.to_string() })
    }

    pub fn from_moments(s: &MomentSequence) -> Self {
        ProblemInput { moments: s.to_strings(), ..Default::default() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn parse(&self) -> Result<Problem> {
        if self.moments.is_empty() {
            return Err(Error::Parse { field: "moments".into(), message: "at least one moment is required".into() });
        }
        let values = self
            .moments
            .iter()
            .enumerate()
            .map(|(i, m)| parse_field(&format!("moments[{i}]"), m))
            .collect::<Result<Vec<_>>>()?;
        let parity = self.parity.as_deref().map(str::parse).transpose()?;
        let free_tail = self.free_tail.as_deref().map(|t| parse_field("free_tail", t)).transpose()?;
        let tau = match &self.tau {
            None => None,
            Some(TauInput::Symbol(s)) if matches!(s.as_str(), "infinity" | "inf" | "∞") => Some(Parameter::Infinity),
            Some(TauInput::Symbol(s)) => {
                return Err(Error::Parse {
                    field: "tau".into(),
                    message: format!("expected {{num, den}} or \"infinity\", got `{s}`"),
                })
            }
            Some(TauInput::Function { num, den }) => {
                let num = parse_poly("tau.num", num)?;
                let den = parse_poly("tau.den", den)?;
                let f = RationalFunction::new(num, den)
                    .map_err(|_| Error::Parse { field: "tau.den".into(), message: "denominator is zero".into() })?;
                Some(Parameter::Function(f))
            }
        };
        Ok(Problem {
            moments: MomentSequence::new(values)?,
            parity,
            kappa: count("kappa", self.kappa)?,
            k: count("k", self.k)?,
            free_tail,
            tau,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Expand,
    Solve,
    String,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Expand => "expand",
            Command::Solve => "solve",
            Command::String => "string",
        }
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Regularity {
    pub regular: bool,
    pub first_irregular: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InertiaRow {
    pub order: usize,
    pub s: Inertia,
    pub s_plus: Option<Inertia>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolvabilityReport {
    pub kappa: usize,
    pub k: usize,
    pub solvable: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub order: usize,
    pub m: Vec<String>,
    pub l: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PFractionReport {
    pub b: Vec<String>,
    pub a: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthReport {
    pub index: usize,
    pub p: Vec<String>,
    pub q: Vec<String>,
}

/// `P⁺_k`, `Q⁺_k` for `k = −1, 0, 1, …`.
#[derive(Debug, Clone, Serialize)]
pub struct StieltjesReport {
    pub p_plus: Vec<Vec<String>>,
    pub q_plus: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub w11: Vec<String>,
    pub w12: Vec<String>,
    pub w21: Vec<String>,
    pub w22: Vec<String>,
}

impl From<&PolyMatrix2> for MatrixReport {
    fn from(w: &PolyMatrix2) -> Self {
        MatrixReport {
            w11: w.w11.to_strings(),
            w12: w.w12.to_strings(),
            w21: w.w21.to_strings(),
            w22: w.w22.to_strings(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub expected_moments: Vec<String>,
    pub reproduced_moments: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionReport {
    pub steps: Vec<StepReport>,
    pub free_tail: Option<String>,
    pub tail_l: Option<String>,
    pub pfraction: PFractionReport,
    pub orthogonal: Vec<OrthReport>,
    pub stieltjes: StieltjesReport,
    pub matrix: MatrixReport,
    pub zero_value_checks: usize,
    pub audited_relations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctionReport {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolutionReport {
    pub tau: Option<FunctionReport>,
    pub f: FunctionReport,
    pub tail: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StringReport {
    pub masses: Vec<Vec<String>>,
    pub lengths: Vec<Vec<String>>,
    pub class: StringClass,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub moments: Vec<String>,
    pub ell: usize,
    pub parity: Parity,
    pub normal_indices: Vec<usize>,
    pub nu_indices: Vec<usize>,
    pub mu_indices: Vec<usize>,
    pub regularity: Regularity,
    pub inertia: Vec<InertiaRow>,
    #[serde(rename = "kappa_N")]
    pub kappa_n: usize,
    #[serde(rename = "k_N")]
    pub k_n: usize,
    pub solvability: SolvabilityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<ExpansionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub string: Option<StringReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Short human-readable digest.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{}: ell = {}, {} parity, normal indices {:?}, regular = {}, kappa_N = {}, k_N = {}, solvable = {}",
            self.command,
            self.ell,
            self.parity,
            self.normal_indices,
            self.regularity.regular,
            self.kappa_n,
            self.k_n,
            self.solvability.solvable
        );
        if let Some(e) = &self.expansion {
            for (j, st) in e.steps.iter().enumerate() {
                out.push_str(&format!("\n  m_{} = {:?}", j + 1, st.m));
                if let Some(l) = &st.l {
                    out.push_str(&format!(", l_{} = {:?}", j + 1, l));
                }
            }
        }
        if let Some(s) = &self.solution {
            out.push_str(&format!("\n  f = ({:?}) / ({:?})", s.f.num, s.f.den));
        }
        if let Some(s) = &self.string {
            out.push_str(&format!("\n  string: {:?}", s.class));
        }
        if let Some(v) = &self.verification {
            out.push_str(&format!("\n  verification: match = {}", v.matches));
        }
        out
    }
}

fn inertia_table(s: &MomentSequence) -> Result<Vec<InertiaRow>> {
    let ell = s.ell();
    (1..=ell / 2 + 1)
        .map(|n| {
            let plus = if 2 * n - 1 <= ell { Some(hankel_inertia(s, n, HankelShift::Plus)?) } else { None };
            Ok(InertiaRow { order: n, s: hankel_inertia(s, n, HankelShift::Zero)?, s_plus: plus })
        })
        .collect()
}

fn function_report(f: &RationalFunction) -> FunctionReport {
    FunctionReport { num: f.num().to_strings(), den: f.den().to_strings() }
}

fn verification(expected: &MomentSequence, reproduced: &[Rational]) -> Result<Verification> {
    let v = Verification {
        expected_moments: expected.to_strings(),
        reproduced_moments: strings(reproduced),
        matches: reproduced == expected.values(),
    };
    ensure_consistent!(v.matches, "reproduced moments differ from the input");
    Ok(v)
}

fn expansion_report(e: &SchurExpansion) -> Result<(ExpansionReport, PolyMatrix2, Verification)> {
    let w = solution_matrix(e)?;
    let (pf, fam) = verified_pfraction(e)?;
    let zero = zero_value_identities(&e.moments, e)?;
    ensure_consistent!(zero.all_pass(), "zero-value identities fail");
    let seq = stieltjes_polys_recurrence(e);
    let terminal = match e.parity {
        Parity::Even => Parameter::zero(),
        Parity::Odd => Parameter::Infinity,
    };
    let sol = describe_solution(e, &w, &terminal)?;
    let report = ExpansionReport {
        steps: e
            .steps
            .iter()
            .map(|st| StepReport { order: st.order, m: st.m.to_strings(), l: st.l.as_ref().map(|l| l.to_strings()) })
            .collect(),
        free_tail: e.free_tail.as_ref().map(|v| v.to_string()),
        tail_l: e.tail_l.as_ref().map(|v| v.to_string()),
        pfraction: PFractionReport { b: strings(&pf.b), a: pf.a.iter().map(|a| a.to_strings()).collect() },
        orthogonal: fam
            .pairs
            .iter()
            .skip(1)
            .map(|p| OrthReport { index: p.index, p: p.p.to_strings(), q: p.q.to_strings() })
            .collect(),
        stieltjes: StieltjesReport {
            p_plus: (-1..=seq.top() as i64).map(|k| seq.p(k).to_strings()).collect(),
            q_plus: (-1..=seq.top() as i64).map(|k| seq.q(k).to_strings()).collect(),
        },
        matrix: MatrixReport::from(&w),
        zero_value_checks: zero.checks.len(),
        audited_relations: e.audited_relations,
    };
    let v = verification(&e.moments, &sol.reproduced)?;
    Ok((report, w, v))
}

/// Run one command on a parsed problem.
pub fn run(command: Command, problem: &Problem) -> Result<Report> {
    let s = &problem.moments;
    let ell = s.ell();
    let parity = problem.parity.unwrap_or_else(|| Parity::of_ell(ell));
    let indices = normal_indices(s)?;
    let (kappa_n, k_n) = solvability_indices(s, parity)?;
    let (kappa, k) = (problem.kappa.unwrap_or(0), problem.k.unwrap_or(0));
    let mut report = Report {
        command: command.name(),
        moments: s.to_strings(),
        ell,
        parity,
        normal_indices: indices.indices.clone(),
        nu_indices: indices.nu_subset.clone(),
        mu_indices: indices.mu_subset.clone(),
        regularity: Regularity { regular: indices.regular, first_irregular: indices.first_irregular },
        inertia: inertia_table(s)?,
        kappa_n,
        k_n,
        solvability: SolvabilityReport { kappa, k, solvable: kappa_n <= kappa && k_n <= k },
        expansion: None,
        solution: None,
        string: None,
        verification: None,
    };
    if command == Command::Analyze {
        return Ok(report);
    }
    let opts = ExpandOptions { parity: problem.parity, free_tail: problem.free_tail.clone(), audit: true };
    let e = schur_expand_with(s, &opts)?;
    ensure_consistent!(e.kappa_n == kappa_n && e.k_n == k_n, "expansion indices differ from the Hankel inertia");
    let (exp, w, v) = expansion_report(&e)?;
    match command {
        Command::Solve => {
            let tau = problem
                .tau
                .as_ref()
                .ok_or_else(|| Error::Parse { field: "tau".into(), message: "solve needs a parameter".into() })?;
            let sol = describe_solution(&e, &w, tau)?;
            report.verification = Some(verification(s, &sol.reproduced)?);
            report.solution = Some(SolutionReport {
                tau: match tau {
                    Parameter::Function(f) => Some(function_report(f)),
                    Parameter::Infinity => None,
                },
                f: function_report(&sol.f),
                tail: strings(&sol.reproduced),
            });
        }
        Command::String => {
            let d = string_data(&e);
            report.string = Some(StringReport {
                masses: d.masses.iter().map(|m| m.to_strings()).collect(),
                lengths: d.lengths.iter().map(|l| l.to_strings()).collect(),
                class: d.class,
            });
            report.verification = Some(v);
        }
        _ => report.verification = Some(v),
    }
    report.expansion = Some(exp);
    Ok(report)
}

/// JSON error object.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        ErrorReport {
            kind: e.kind(),
            message: e.to_string(),
            exit_code: e.exit_code(),
            field: match e {
                Error::Parse { field, .. } => Some(field.clone()),
                _ => None,
            },
            index: match e {
                Error::NotRegular { index } => Some(*index),
                _ => None,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct ErrorEnvelope {
    error: ErrorReport,
}

pub fn error_json(e: &Error) -> serde_json::Value {
    serde_json::to_value(ErrorEnvelope { error: e.into() }).expect("error serializes")
}

/// Parse and run one JSON problem.
pub fn execute(command: Command, input: &str, overrides: &Overrides) -> Result<Report> {
    let mut problem = ProblemInput::from_json(input)?.parse()?;
    overrides.apply(&mut problem);
    run(command, &problem)
}

/// Parse, run and render one JSON problem: the document to print and the exit code.
pub fn run_json(command: Command, input: &str, overrides: &Overrides) -> (serde_json::Value, i32) {
    match execute(command, input, overrides) {
        Ok(r) => (serde_json::to_value(&r).expect("report serializes"), 0),
        Err(e) => (error_json(&e), e.exit_code()),
    }
}

/// Command-line values that replace the corresponding input fields.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub parity: Option<Parity>,
    pub free_tail: Option<Rational>,
}

impl Overrides {
    pub fn apply(&self, p: &mut Problem) {
        if self.parity.is_some() {
            p.parity = self.parity;
        }
        if self.free_tail.is_some() {
            p.free_tail = self.free_tail.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(command: Command, json: &str) -> (serde_json::Value, i32) {
        run_json(command, json, &Overrides::default())
    }

    #[test]
    fn analyze_unit_mass() {
        let (v, code) = go(Command::Analyze, r#"{"moments": ["1", "1"]}"#);
        assert_eq!(code, 0);
        assert_eq!(v["normal_indices"], serde_json::json!([1]));
        assert_eq!(v["regularity"]["regular"], true);
        assert_eq!(v["solvability"]["solvable"], true);
    }

    #[test]
    fn analyze_odd_override() {
        let (v, code) = go(Command::Analyze, r#"{"moments": ["0", "1", "0", "0"], "parity": "odd"}"#);
        assert_eq!(code, 0);
        assert_eq!(v["kappa_N"], 1);
    }

    #[test]
    fn error_codes() {
        assert_eq!(go(Command::Analyze, r#"{"moments": ["0", "0"]}"#).1, 5);
        let (v, code) = go(Command::Analyze, r#"{"moments": ["1", "x"]}"#);
        assert_eq!(code, 2);
        assert_eq!(v["error"]["field"], "moments[1]");
        assert_eq!(go(Command::Analyze, "not json").1, 2);
        let (v, code) = go(Command::Expand, r#"{"moments": ["0", "1", "0", "0"]}"#);
        assert_eq!(code, 3);
        assert_eq!(v["error"]["index"], 2);
        assert_eq!(go(Command::Solve, r#"{"moments": ["1", "1"], "tau": "infinity"}"#).1, 6);
    }

    #[test]
    fn expand_unit_mass() {
        let (v, code) = go(Command::Expand, r#"{"moments": ["1", "1"]}"#);
        assert_eq!(code, 0);
        let m = &v["expansion"]["matrix"];
        assert_eq!(m["w11"], serde_json::json!(["1"]));
        assert_eq!(m["w21"], serde_json::json!(["0", "-1"]));
        assert_eq!(m["w22"], serde_json::json!(["1", "-1"]));
        assert_eq!(v["verification"]["match"], true);
    }

    #[test]
    fn expand_two_steps() {
        let (v, code) = go(Command::Expand, r#"{"moments": ["1", "1", "2", "6"]}"#);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["expansion"]["steps"].as_array().unwrap().len(), 2);
        assert_eq!(v["verification"]["match"], true);
    }

    #[test]
    fn solve_with_parameter() {
        let (v, code) = go(Command::Solve, r#"{"moments": ["1", "1"], "tau": {"num": ["-1"], "den": ["-2", "1"]}}"#);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["solution"]["tail"], serde_json::json!(["1", "1"]));
    }

    #[test]
    fn string_signed() {
        let (v, _) = go(Command::String, r#"{"moments": ["-1", "1"]}"#);
        assert_eq!(v["string"]["class"], "signed");
    }

    #[test]
    fn input_round_trip() {
        let input = ProblemInput { moments: vec!["1/2".into(), "-3".into()], kappa: Some(1), ..Default::default() };
        assert_eq!(ProblemInput::from_json(&input.to_json()).unwrap(), input);
    }
}
