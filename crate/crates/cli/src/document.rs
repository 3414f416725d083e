//! The JSON envelope and the per-command payloads. Integers are written as
//! decimal strings.

use serde::Serialize;
use serde_json::Value;

use scrollfano_core::census::{CensusRow, MatchReport};
use scrollfano_core::logfano::{BoundarySpec, Check, FamilyId, FamilyReport, PairReport, Params};
use scrollfano_core::sections::{MemberStatus, SncObstruction};
use scrollfano_core::CurveClass;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timing_ms: String,
}

impl OutputDocument {
    pub fn new(command: &str, inputs: impl Serialize, results: impl Serialize) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs: serde_json::to_value(inputs).expect("serializable inputs"),
            results: serde_json::to_value(results).expect("serializable results"),
            timing_ms: "0".to_string(),
        }
    }
}

pub fn dec(v: impl ToString) -> String {
    v.to_string()
}

#[derive(Serialize)]
pub struct CurveDegree {
    pub curve: String,
    pub degree: String,
}

impl CurveDegree {
    pub fn new(curve: CurveClass, degree: i64) -> Self {
        CurveDegree {
            curve: curve.to_string(),
            degree: dec(degree),
        }
    }
}

#[derive(Serialize)]
pub struct PairPayload {
    pub adjoint_class: String,
    pub is_log_fano: bool,
    pub index: String,
    pub pseudoindex: Option<String>,
    pub fundamental_class: String,
    pub witness: Option<CurveDegree>,
}

impl From<&PairReport> for PairPayload {
    fn from(r: &PairReport) -> Self {
        PairPayload {
            adjoint_class: r.adjoint_class.to_string(),
            is_log_fano: r.is_log_fano,
            index: dec(r.index),
            pseudoindex: r.pseudoindex.map(dec),
            fundamental_class: r.fundamental_class.to_string(),
            witness: r.witness.map(|(c, d)| CurveDegree::new(c, d)),
        }
    }
}

pub fn component(spec: &BoundarySpec) -> String {
    match spec {
        BoundarySpec::SubBundle(i) => format!("D{i}"),
        BoundarySpec::BasePullback(j) => format!("H{j}"),
        BoundarySpec::GeneralMember(c) => c.to_string(),
    }
}

#[derive(Serialize)]
pub struct StatusPayload {
    pub status: &'static str,
    pub components: Vec<String>,
}

impl From<&MemberStatus> for StatusPayload {
    fn from(s: &MemberStatus) -> Self {
        let (status, components) = match s {
            MemberStatus::NoMember => ("no-member", Vec::new()),
            MemberStatus::ForcedNonReduced => ("forced-non-reduced", Vec::new()),
            MemberStatus::ForcedDecomposition(parts) => (
                "forced-decomposition",
                parts.iter().map(|c| c.to_string()).collect(),
            ),
            MemberStatus::Unconstrained => ("unconstrained", Vec::new()),
        };
        StatusPayload { status, components }
    }
}

#[derive(Serialize)]
pub struct ObstructionPayload {
    pub kind: &'static str,
    pub component: Option<String>,
    pub summands: Vec<String>,
    pub multiplicity: String,
}

impl From<&SncObstruction> for ObstructionPayload {
    fn from(o: &SncObstruction) -> Self {
        let names = |s: &[usize]| s.iter().map(|i| format!("D{i}")).collect();
        match o {
            SncObstruction::StratumSingularity {
                summands,
                multiplicity,
            } => ObstructionPayload {
                kind: "stratum-singularity",
                component: None,
                summands: names(summands),
                multiplicity: dec(multiplicity),
            },
            SncObstruction::NonTransverse {
                component,
                summands,
                multiplicity,
            } => ObstructionPayload {
                kind: "non-transverse",
                component: Some(format!("D{component}")),
                summands: names(summands),
                multiplicity: dec(multiplicity),
            },
        }
    }
}

#[derive(Serialize)]
pub struct FamilyRef {
    pub family: &'static str,
    pub params: String,
}

impl FamilyRef {
    pub fn new(id: FamilyId, params: Params) -> Self {
        FamilyRef {
            family: id.slug(),
            params: params.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct CheckPayload {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl From<&Check> for CheckPayload {
    fn from(c: &Check) -> Self {
        CheckPayload {
            name: c.name,
            expected: c.expected.clone(),
            actual: c.actual.clone(),
            pass: c.pass,
        }
    }
}

#[derive(Serialize)]
pub struct InstancePayload {
    #[serde(flatten)]
    pub family: FamilyRef,
    pub pass: bool,
    pub checks: Vec<CheckPayload>,
}

impl From<&FamilyReport> for InstancePayload {
    fn from(r: &FamilyReport) -> Self {
        InstancePayload {
            family: FamilyRef::new(r.id, r.params),
            pass: r.pass(),
            checks: r.checks.iter().map(CheckPayload::from).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct RowPayload {
    pub no: String,
    pub variety: String,
    pub boundary_class: String,
    pub members: StatusPayload,
    #[serde(flatten)]
    pub pair: PairPayload,
    pub family: Option<FamilyRef>,
}

impl RowPayload {
    pub fn new(no: usize, row: &CensusRow) -> Self {
        RowPayload {
            no: dec(no),
            variety: row.variety.to_string(),
            boundary_class: row.boundary_class.to_string(),
            members: StatusPayload::from(&row.decomposition),
            pair: PairPayload::from(&row.report),
            family: row.matched.map(|(id, p)| FamilyRef::new(id, p)),
        }
    }
}

#[derive(Serialize)]
pub struct MatchPayload {
    pub matched: String,
    /// Row numbers (1-based, as in `no`).
    pub unmatched: Vec<String>,
    pub absent: Vec<FamilyRef>,
    pub out_of_scope: Vec<FamilyRef>,
}

impl From<&MatchReport> for MatchPayload {
    fn from(m: &MatchReport) -> Self {
        let refs =
            |v: &[(FamilyId, Params)]| v.iter().map(|&(id, p)| FamilyRef::new(id, p)).collect();
        MatchPayload {
            matched: dec(m.matched.len()),
            unmatched: m.unmatched.iter().map(|k| dec(k + 1)).collect(),
            absent: refs(&m.absent),
            out_of_scope: refs(&m.out_of_scope),
        }
    }
}
