//! Machine-readable result records, serialized as JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ordinal::ExtOrdinal;
use crate::rational::render_rational;
use crate::szlenk::DerivationBound;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub subject: String,
    pub epsilon: String,
    pub kind: String,
    pub value: String,
    pub citation: String,
}

impl From<&DerivationBound> for AuditEntry {
    fn from(b: &DerivationBound) -> Self {
        AuditEntry {
            subject: b.subject.clone(),
            epsilon: render_rational(&b.epsilon),
            kind: b.kind.to_string(),
            value: b.value.to_string(),
            citation: b.citation.to_owned(),
        }
    }
}

/// `inputs` maps argument names to canonical text; keys serialize sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub operation: String,
    pub inputs: BTreeMap<String, String>,
    pub value: String,
    pub audit: Vec<AuditEntry>,
}

impl Record {
    pub fn new(operation: impl Into<String>, value: impl Into<String>) -> Self {
        Record {
            operation: operation.into(),
            inputs: BTreeMap::new(),
            value: value.into(),
            audit: Vec::new(),
        }
    }

    pub fn input(mut self, name: &str, text: impl Into<String>) -> Self {
        self.inputs.insert(name.to_owned(), text.into());
        self
    }

    pub fn with_audit(mut self, audit: &[DerivationBound]) -> Self {
        self.audit = audit.iter().map(AuditEntry::from).collect();
        self
    }

    pub fn ordinal_value(operation: &str, value: &ExtOrdinal) -> Self {
        Record::new(operation, value.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Record> {
        serde_json::from_str(text)
    }
}
