//! Per-identity verification outcomes, serialized as JSON.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExactEqual,
    Mismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Point,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Constants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

/// A rapidity point at which an identity failed, plus what differed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub zeta: Vec<String>,
    pub z: Vec<String>,
    pub detail: String,
}

impl Witness {
    pub fn new<T: ToString>(zeta: &[T], z: &[T], detail: impl Into<String>) -> Self {
        Witness {
            zeta: zeta.iter().map(ToString::to_string).collect(),
            z: z.iter().map(ToString::to_string).collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub mode: Mode,
    pub trials: usize,
    pub verdict: Verdict,
    pub constants: Constants,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Extra observations that do not decide the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, n: usize, mode: Mode) -> Self {
        VerificationReport {
            identity: identity.into(),
            n,
            mode,
            trials: 0,
            verdict: Verdict::ExactEqual,
            constants: Constants::default(),
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::ExactEqual
    }

    /// Records one trial; the first failing trial is kept as the witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.trials += 1;
        if !ok && self.passed() {
            self.verdict = Verdict::Mismatch;
            self.witness = Some(witness());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut r = VerificationReport::new("demo", 2, Mode::Point);
        r.record(true, || unreachable!());
        r.record(false, || Witness::new(&[1], &[2], "first"));
        r.record(false, || Witness::new(&[3], &[4], "second"));
        assert_eq!(r.trials, 3);
        assert!(!r.passed());
        assert_eq!(r.witness.as_ref().unwrap().detail, "first");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["verdict"], "mismatch");
        assert_eq!(json["mode"], "point");
    }
}
