//! Output records for each verb, rendered as text or JSON.

use serde::Serialize;

use qsylv_core::sylvester::{self, SolutionKind};
use qsylv_core::text::{format_significant, format_terms};
use qsylv_core::verify::{self, max_residual};
use qsylv_core::{
    Classification, Quaternion, RootKind, RootSet, SolutionSet, SylvesterProblem, Tolerance,
};

const DIGITS: usize = 12;

pub fn human(q: Quaternion) -> String {
    format_terms(q, |v| format_significant(v, DIGITS))
}

fn human_real(v: f64) -> String {
    format_significant(v, DIGITS)
}

#[derive(Debug, Serialize)]
pub struct RootsReport {
    pub kind: RootKind,
    pub principal: Quaternion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<[Quaternion; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
}

impl From<RootSet> for RootsReport {
    fn from(r: RootSet) -> Self {
        match r {
            RootSet::Pair(_) => RootsReport {
                kind: r.kind(),
                principal: r.principal(),
                roots: Some(r.representatives()),
                radius: None,
            },
            RootSet::PureSphere { radius } => RootsReport {
                kind: r.kind(),
                principal: r.principal(),
                roots: None,
                radius: Some(radius),
            },
        }
    }
}

impl RootsReport {
    pub fn text(&self) -> String {
        match self.radius {
            None => format!("±({})\n", human(self.principal)),
            Some(r) => {
                let r = human_real(r);
                format!("±{r}·u for any pure unit u (principal: {r}i)\n")
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolutionReport {
    pub kind: SolutionKind,
    pub particular: Option<Quaternion>,
    pub basis: Vec<Quaternion>,
}

#[derive(Debug, Serialize)]
pub struct Condition {
    pub lhs: Quaternion,
    pub rhs: Quaternion,
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub classification: Classification,
    pub solution: SolutionReport,
    pub residual: Option<f64>,
    pub oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<Condition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub general: Option<Quaternion>,
}

impl SolveReport {
    pub fn build(
        p: &SylvesterProblem,
        set: &SolutionSet,
        q: Option<Quaternion>,
        oracle: bool,
        tol: Tolerance,
    ) -> Self {
        let classification = sylvester::classify(p.a, p.b, tol);
        let (reason, condition) = match (set, classification) {
            (SolutionSet::Empty, Classification::RealEqual) => (
                Some(format!(
                    "real equal coefficients: a x - x b = ({} - {}) x = 0 for every x, so c = {} is unreachable",
                    p.a, p.b, p.c
                )),
                None,
            ),
            (SolutionSet::Empty, _) => {
                let (lhs, rhs) = sylvester::solvability_sides(*p);
                (
                    Some("solvability condition a c = c conj(b) fails".to_string()),
                    Some(Condition { lhs, rhs }),
                )
            }
            _ => (None, None),
        };
        let general = match (q, set) {
            (Some(q), SolutionSet::Affine { .. }) if classification == Classification::SingularNonreal => {
                if tol.is_zero(p.c) {
                    sylvester::homogeneous_general(p.a, p.b, q, tol).ok()
                } else {
                    sylvester::inhomogeneous_general(*p, q, tol).ok()
                }
            }
            _ => None,
        };
        SolveReport {
            classification,
            solution: SolutionReport {
                kind: set.kind(),
                particular: set.particular(),
                basis: set.basis().to_vec(),
            },
            residual: max_residual(p, set),
            oracle_agrees: oracle.then(|| verify::cross_check(p, set, tol).agrees),
            reason,
            condition,
            general,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("classification: {:?}\n", self.classification);
        let sol = &self.solution;
        match sol.kind {
            SolutionKind::Affine => {
                out += &format!("solution: Affine (dimension {})\n", sol.basis.len())
            }
            kind => out += &format!("solution: {kind:?}\n"),
        }
        if let Some(x) = sol.particular {
            let label = if sol.kind == SolutionKind::Unique { "x" } else { "particular" };
            out += &format!("{label}: {}\n", human(x));
        }
        if !sol.basis.is_empty() {
            out += "basis:\n";
            for e in &sol.basis {
                out += &format!("  {}\n", human(*e));
            }
        }
        if let Some(g) = self.general {
            out += &format!("general(q): {}\n", human(g));
        }
        if let Some(r) = self.residual {
            out += &format!("residual: {}\n", format_significant(r, 3));
        }
        if let Some(reason) = &self.reason {
            out += &format!("reason: {reason}\n");
        }
        if let Some(c) = &self.condition {
            out += &format!("  a c       = {}\n", human(c.lhs));
            out += &format!("  c conj(b) = {}\n", human(c.rhs));
        }
        if let Some(agrees) = self.oracle_agrees {
            out += &format!("oracle: {}\n", if agrees { "agrees" } else { "DISAGREES" });
        }
        out
    }
}
