//! Annihilators, s-unital ideals and the module- and ring-level property checkers.
//!
//! Conventions: annihilators of submodules are taken on the left in
//! `S = End_R(M)`, s-unitality is tested on the right (`a x = a`), and the
//! ring-level AIP family uses left annihilators so that a ring satisfies a
//! property exactly when its regular module satisfies the module version.

mod module;
mod ring;
mod sunital;
mod verdict;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use module::{
    check_module_property, left_annihilator, prime_submodules, right_annihilator_in_module, ModuleAnalysis,
};
pub use ring::{check_ring_property, check_ring_property_oriented, RingAnalysis};
pub use sunital::{find_units, is_centrally_s_unital, is_right_s_unital, UnitSide, Units};
pub use verdict::{Item, Level, UnitEntry, Verdict, Witness, WitnessKind};

macro_rules! property_enum {
    ($name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(rename_all = "snake_case")]
        pub enum $name {
            $($variant),*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),*
                }
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($text => Ok($name::$variant),)*
                    _ => Err(Error::UnknownProperty(s.to_string())),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

property_enum!(PropertyId {
    Rickart => "rickart",
    Baer => "baer",
    QuasiBaer => "quasi_baer",
    PqBaer => "pq_baer",
    Abelian => "abelian",
    Reduced => "reduced",
    Rigid => "rigid",
    Symmetric => "symmetric",
    Semicommutative => "semicommutative",
    Ifp => "ifp",
    Retractable => "retractable",
    EndoAip => "endo_aip",
    EndoApp => "endo_app",
    CentrallyEndoAip => "centrally_endo_aip",
    LocallyPqRetractable => "locally_pq_retractable",
    SemiProjective => "semi_projective",
    Semisimple => "semisimple",
    PrimeModule => "prime_module",
    SemiprimeModule => "semiprime_module",
});

property_enum!(RingPropertyId {
    Baer => "baer",
    QuasiBaer => "quasi_baer",
    PqBaer => "pq_baer",
    RickartPp => "rickart_pp",
    Aip => "aip",
    App => "app",
    CentrallyAip => "centrally_aip",
    Abelian => "abelian",
    Reduced => "reduced",
    Semiprime => "semiprime",
    Prime => "prime",
    Local => "local",
    Domain => "domain",
});

/// Which side annihilators are taken on at ring level.
///
/// `Standard` uses left annihilators with right s-unitality (and right
/// annihilators for the Baer family); `Mirrored` swaps both sides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    #[default]
    Standard,
    Mirrored,
}

/// A property at either level, written `name` (module) or `ring:name`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AnyProperty {
    Module(PropertyId),
    Ring(RingPropertyId),
}

impl FromStr for AnyProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.strip_prefix("ring:") {
            Some(rest) => rest.parse().map(AnyProperty::Ring),
            None => s.parse().map(AnyProperty::Module),
        }
    }
}

impl fmt::Display for AnyProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyProperty::Module(p) => write!(f, "{p}"),
            AnyProperty::Ring(p) => write!(f, "ring:{p}"),
        }
    }
}
