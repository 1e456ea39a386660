//! Machine-readable verification outcome.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub quiver: String,
    pub w: u32,
    pub theorem: String,
    pub counts: BTreeMap<String, u64>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(quiver: impl Into<String>, w: u32, theorem: impl Into<String>) -> Self {
        Self {
            quiver: quiver.into(),
            w,
            theorem: theorem.into(),
            counts: BTreeMap::new(),
            pass: true,
            witness: None,
            elapsed_ms: 0,
        }
    }

    pub fn count(&mut self, key: &str, value: usize) -> &mut Self {
        self.counts.insert(key.to_string(), value as u64);
        self
    }

    /// Records a failed check; the first witness is kept.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.pass = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    /// Fails with `witness` unless `ok`.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new("A_2", 1, "A");
        r.count("smc", 2).count("sms", 2);
        let text = r.to_json();
        assert_eq!(
            text,
            r#"{"quiver":"A_2","w":1,"theorem":"A","counts":{"smc":2,"sms":2},"pass":true,"elapsed_ms":0}"#
        );
        assert_eq!(VerificationReport::from_json(&text).unwrap(), r);
        r.fail("first");
        r.fail("second");
        assert_eq!(r.witness.as_deref(), Some("first"));
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
    }
}
