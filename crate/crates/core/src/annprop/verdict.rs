use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Failure,
    Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Module,
    Ring,
}

/// A ring element (coordinates) or an endomorphism (generator-image matrix).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Item {
    Coords(Vec<u64>),
    Matrix(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitEntry {
    pub element: Item,
    pub unit: Item,
}

/// Certificate attached to a verdict.
///
/// For a failure, `submodule` (a submodule of the module, or an ideal of the
/// ring at ring level), `endomorphism`, `endomorphisms` and `elements` name the
/// offending objects. For a certificate, `units` maps each obligation to the
/// units (or idempotents, or complements) that discharge it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub submodule: Option<Vec<Vec<u64>>>,
    pub endomorphism: Option<Vec<Vec<u64>>>,
    #[serde(default)]
    pub units: BTreeMap<String, Vec<UnitEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub endomorphisms: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn failure() -> Self {
        Witness {
            kind: WitnessKind::Failure,
            submodule: None,
            endomorphism: None,
            units: BTreeMap::new(),
            endomorphisms: Vec::new(),
            elements: Vec::new(),
            note: None,
        }
    }

    pub fn certificate() -> Self {
        Witness {
            kind: WitnessKind::Certificate,
            ..Witness::failure()
        }
    }

    pub fn with_submodule(mut self, s: Vec<Vec<u64>>) -> Self {
        self.submodule = Some(s);
        self
    }

    pub fn with_endomorphism(mut self, f: Vec<Vec<u64>>) -> Self {
        self.endomorphism = Some(f);
        self
    }

    pub fn with_endomorphisms(mut self, fs: Vec<Vec<Vec<u64>>>) -> Self {
        self.endomorphisms = fs;
        self
    }

    pub fn with_elements(mut self, xs: Vec<Vec<u64>>) -> Self {
        self.elements = xs;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn push_units(&mut self, label: impl Into<String>, entries: Vec<UnitEntry>) {
        self.units.insert(label.into(), entries);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub level: Level,
    pub holds: bool,
    pub witness: Witness,
}

impl Verdict {
    pub fn holds(property: &str, level: Level, witness: Witness) -> Self {
        Verdict {
            property: property.to_string(),
            level,
            holds: true,
            witness,
        }
    }

    pub fn fails(property: &str, level: Level, witness: Witness) -> Self {
        Verdict {
            property: property.to_string(),
            level,
            holds: false,
            witness,
        }
    }
}
