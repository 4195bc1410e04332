use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One operation of a quantum program. Qubit indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOp", into = "RawOp")]
pub enum GateOp {
    Hadamard(usize),
    /// Controls, then target: |a, b, t⟩ ↦ |a, b, t ⊕ a·b⟩.
    Toffoli(usize, usize, usize),
    /// diag(−1, 1) on the qubit, i.e. 2|1⟩⟨1| − I.
    Reflect1(usize),
    Measure(usize),
    Reset(usize),
}

impl GateOp {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            GateOp::Hadamard(q) | GateOp::Reflect1(q) | GateOp::Measure(q) | GateOp::Reset(q) => vec![q],
            GateOp::Toffoli(a, b, t) => vec![a, b, t],
        }
    }

    pub fn is_measure(&self) -> bool {
        matches!(self, GateOp::Measure(_))
    }

    pub fn validate(&self, qubits: usize) -> Result<()> {
        for q in self.qubits() {
            if q == 0 || q > qubits {
                return Err(Error::QubitOutOfRange { index: q, qubits });
            }
        }
        if let GateOp::Toffoli(a, b, t) = *self {
            if a == b || a == t || b == t {
                return Err(Error::InvalidGate(format!("Toffoli qubits must be distinct, got ({a}, {b}, {t})")));
            }
        }
        Ok(())
    }

    fn code(&self) -> &'static str {
        match self {
            GateOp::Hadamard(_) => "H",
            GateOp::Toffoli(..) => "TOF",
            GateOp::Reflect1(_) => "RFL",
            GateOp::Measure(_) => "M",
            GateOp::Reset(_) => "R",
        }
    }
}

/// Wire form: `{"g": "H" | "TOF" | "RFL" | "M" | "R", "q": [indices]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawOp {
    g: String,
    q: Vec<usize>,
}

impl From<GateOp> for RawOp {
    fn from(op: GateOp) -> Self {
        RawOp { g: op.code().to_string(), q: op.qubits() }
    }
}

impl TryFrom<RawOp> for GateOp {
    type Error = Error;

    fn try_from(raw: RawOp) -> Result<Self> {
        let arity = |n: usize| {
            if raw.q.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidGate(format!("gate {} takes {n} qubits, got {}", raw.g, raw.q.len())))
            }
        };
        let op = match raw.g.as_str() {
            "H" => arity(1).map(|_| GateOp::Hadamard(raw.q[0])),
            "TOF" => arity(3).map(|_| GateOp::Toffoli(raw.q[0], raw.q[1], raw.q[2])),
            "RFL" => arity(1).map(|_| GateOp::Reflect1(raw.q[0])),
            "M" => arity(1).map(|_| GateOp::Measure(raw.q[0])),
            "R" => arity(1).map(|_| GateOp::Reset(raw.q[0])),
            other => Err(Error::InvalidGate(format!("unknown gate {other:?}"))),
        }?;
        Ok(op)
    }
}

/// A straight-line program over all operation kinds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumProgram {
    pub qubits: usize,
    pub ops: Vec<GateOp>,
}

impl QuantumProgram {
    pub fn new(qubits: usize, ops: Vec<GateOp>) -> Result<Self> {
        let qp = Self { qubits, ops };
        qp.validate()?;
        Ok(qp)
    }

    pub fn validate(&self) -> Result<()> {
        check_qubit_count(self.qubits)?;
        self.ops.iter().try_for_each(|op| op.validate(self.qubits))
    }

    pub fn measurements(&self) -> usize {
        self.ops.iter().filter(|op| op.is_measure()).count()
    }
}

/// One coin-indexed step: `c0` runs when the coin reads 0, `c1` when it reads 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub c0: Vec<GateOp>,
    pub c1: Vec<GateOp>,
}

impl Step {
    pub fn new(c0: Vec<GateOp>, c1: Vec<GateOp>) -> Self {
        Self { c0, c1 }
    }

    /// Both branches run `ops`.
    pub fn fixed(ops: Vec<GateOp>) -> Self {
        Self { c0: ops.clone(), c1: ops }
    }

    pub fn branch(&self, coin: bool) -> &[GateOp] {
        if coin {
            &self.c1
        } else {
            &self.c0
        }
    }

    pub fn is_coin_insensitive(&self) -> bool {
        self.c0 == self.c1
    }
}

/// A quantum branching program reading one coin per step, left to right.
/// Steps contain no measurements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingProgram {
    pub qubits: usize,
    pub steps: Vec<Step>,
}

impl BranchingProgram {
    pub fn new(qubits: usize, steps: Vec<Step>) -> Result<Self> {
        let bp = Self { qubits, steps };
        bp.validate()?;
        Ok(bp)
    }

    pub fn validate(&self) -> Result<()> {
        check_qubit_count(self.qubits)?;
        for (k, step) in self.steps.iter().enumerate() {
            for op in step.c0.iter().chain(&step.c1) {
                op.validate(self.qubits)?;
                if op.is_measure() {
                    return Err(Error::InvalidGate(format!("step {k} contains a measurement")));
                }
            }
        }
        Ok(())
    }

    pub fn coins(&self) -> usize {
        self.steps.len()
    }

    /// Index of the first step after which every step ignores its coin.
    pub fn insensitive_from(&self) -> usize {
        self.steps.iter().rposition(|s| !s.is_coin_insensitive()).map_or(0, |k| k + 1)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let bp: Self = serde_json::from_str(text)?;
        bp.validate()?;
        Ok(bp)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("programs always serialize")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

fn check_qubit_count(qubits: usize) -> Result<()> {
    if qubits == 0 || qubits > super::MAX_QUBITS {
        return Err(Error::QubitCount(qubits));
    }
    Ok(())
}

/// Either program kind, as read from a JSON file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProgramFile {
    Quantum(QuantumProgram),
    Branching(BranchingProgram),
}

impl ProgramFile {
    /// Distinguishes the kinds by their `ops` / `steps` key.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("steps").is_some() {
            let bp: BranchingProgram = serde_json::from_value(value)?;
            bp.validate()?;
            Ok(Self::Branching(bp))
        } else if value.get("ops").is_some() {
            let qp: QuantumProgram = serde_json::from_value(value)?;
            qp.validate()?;
            Ok(Self::Quantum(qp))
        } else {
            Err(Error::Parse("program file needs an \"ops\" or \"steps\" array".into()))
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_wire_format() {
        let qp = QuantumProgram::new(3, vec![GateOp::Hadamard(1), GateOp::Toffoli(1, 2, 3), GateOp::Measure(2)]).unwrap();
        let text = serde_json::to_string(&qp).unwrap();
        assert_eq!(
            text,
            r#"{"qubits":3,"ops":[{"g":"H","q":[1]},{"g":"TOF","q":[1,2,3]},{"g":"M","q":[2]}]}"#
        );
        match ProgramFile::from_json(&text).unwrap() {
            ProgramFile::Quantum(back) => assert_eq!(back, qp),
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn branching_json() {
        let text = r#"{"qubits": 1, "steps": [{"c0": [], "c1": [{"g": "H", "q": [1]}]}]}"#;
        let bp = BranchingProgram::from_json(text).unwrap();
        assert_eq!(bp.steps[0].c1, vec![GateOp::Hadamard(1)]);
        assert!(matches!(ProgramFile::from_json(text).unwrap(), ProgramFile::Branching(_)));
    }

    #[test]
    fn rejects_bad_programs() {
        assert!(ProgramFile::from_json(r#"{"qubits": 1, "ops": [{"g": "X", "q": [1]}]}"#).is_err());
        assert!(ProgramFile::from_json(r#"{"qubits": 1, "ops": [{"g": "H", "q": [2]}]}"#).is_err());
        assert!(ProgramFile::from_json(r#"{"qubits": 3, "ops": [{"g": "TOF", "q": [1, 1, 2]}]}"#).is_err());
        assert!(ProgramFile::from_json(r#"{"qubits": 3, "ops": [{"g": "TOF", "q": [1, 2]}]}"#).is_err());
        assert!(BranchingProgram::from_json(r#"{"qubits": 1, "steps": [{"c0": [{"g": "M", "q": [1]}], "c1": []}]}"#).is_err());
        assert!(ProgramFile::from_json(r#"{"qubits": 1}"#).is_err());
        assert!(QuantumProgram::new(0, vec![]).is_err());
        assert!(QuantumProgram::new(13, vec![]).is_err());
    }

    #[test]
    fn insensitive_suffix() {
        let h = GateOp::Hadamard(1);
        let bp = BranchingProgram::new(
            1,
            vec![Step::fixed(vec![h]), Step::new(vec![], vec![h]), Step::fixed(vec![]), Step::fixed(vec![h])],
        )
        .unwrap();
        assert_eq!(bp.insensitive_from(), 2);
        assert_eq!(BranchingProgram::new(1, vec![Step::fixed(vec![h])]).unwrap().insensitive_from(), 0);
    }
}
