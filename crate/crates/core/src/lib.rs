//! Finite rings, finite right modules and their endomorphism rings, with
//! decision procedures for annihilator conditions (centrally endo-AIP,
//! endo-AIP, the Rickart/Baer family, abelian-type conditions and more) and a
//! harness that checks implications between them over a generated corpus.
//!
//! Every structure is finite and presented explicitly: additive groups are
//! products of cyclic groups, multiplication and module actions are given by
//! structure constants on generators.

#![allow(clippy::needless_range_loop)]

pub mod annprop;
pub mod describe;
pub mod error;
pub mod group;
pub mod harness;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod module;
pub mod replay;
pub mod ring;
pub mod smith;

use serde::{Deserialize, Serialize};

pub use annprop::{
    check_module_property, check_ring_property, ModuleAnalysis, Orientation, PropertyId, RingAnalysis, RingPropertyId,
    Verdict, Witness, WitnessKind,
};
pub use error::{Error, Result};
pub use group::{ElemSet, FiniteAbelianGroup};
pub use hom::{end_ring, hom_group, EndoRing, ModuleHom};
pub use ideal::{IdealHandle, Side};
pub use lattice::Submodule;
pub use module::FiniteModule;
pub use ring::FiniteRing;

/// Size limits applied by every constructor and enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Maximum order of a constructed ring (including endomorphism rings).
    pub ring: usize,
    /// Maximum order of a constructed module.
    pub module: usize,
    /// Maximum number of members of an enumerated submodule or ideal lattice.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ring: 4096,
            module: 4096,
            lattice: 20_000,
        }
    }
}
