//! Serialized factorizations: a JSON object with a fixed field order,
//! elements written in the text grammar of their domain.

use serde::{Deserialize, Serialize};

use crate::domain::DomainId;
use crate::error::{Error, Result};
use crate::factorization::{Factor, Factorization, Form};
use crate::instances::parse;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorEntry {
    pub base: String,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDocument {
    pub schema_version: u32,
    pub domain: String,
    pub form: String,
    pub unit: String,
    pub factors: Vec<FactorEntry>,
}

impl FactorizationDocument {
    pub fn from_factorization(f: &Factorization) -> Self {
        FactorizationDocument {
            schema_version: SCHEMA_VERSION,
            domain: f.domain.to_string(),
            form: f.form.to_string(),
            unit: f.unit.to_string(),
            factors: f
                .factors
                .iter()
                .map(|x| FactorEntry { base: x.base.to_string(), exponent: x.exponent })
                .collect(),
        }
    }

    pub fn to_factorization(&self) -> Result<Factorization> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::usage(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let domain: DomainId = self.domain.parse()?;
        let form: Form = self.form.parse()?;
        let unit = parse(domain, &self.unit)?;
        let factors = self
            .factors
            .iter()
            .map(|e| Ok(Factor::new(parse(domain, &e.base)?, e.exponent)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization { domain, form, unit, factors })
    }

    /// Pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })
    }
}

pub fn to_json(f: &Factorization) -> String {
    FactorizationDocument::from_factorization(f).to_json()
}

pub fn from_json(text: &str) -> Result<Factorization> {
    FactorizationDocument::from_json(text)?.to_factorization()
}
