//! JSON descriptions of rings and modules, their builders, and a summary
//! report for a built structure.
//!
//! Rings: `{"kind": "cyclic", "n": 4}`, `{"kind": "matrix", "base": .., "k": 2}`,
//! `{"kind": "triangular", "base": .., "k": 2}`, `{"kind": "product", "factors": [..]}`,
//! `{"kind": "quotient", "base": .., "ideal_generators": [[coords], ..]}`.
//!
//! Modules: `{"kind": "regular", "ring": ..}`, `{"kind": "free", "ring": .., "n": 2}`,
//! `{"kind": "z_module", "orders": [2, 4]}`, `{"kind": "direct_sum", "summands": [..]}`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::end_ring;
use crate::lattice;
use crate::module::{direct_sum, free_module, regular_module, z_module, FiniteModule};
use crate::ring::{
    direct_product, make_cyclic_ring, matrix_ring, quotient_ring, triangular_ring, two_sided_ideal, FiniteRing,
};
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDesc {
    Cyclic {
        n: u64,
    },
    Matrix {
        base: Box<RingDesc>,
        k: usize,
    },
    Triangular {
        base: Box<RingDesc>,
        k: usize,
    },
    Product {
        factors: Vec<RingDesc>,
    },
    Quotient {
        base: Box<RingDesc>,
        ideal_generators: Vec<Vec<u64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleDesc {
    Regular { ring: RingDesc },
    Free { ring: RingDesc, n: usize },
    ZModule { orders: Vec<u64> },
    DirectSum { summands: Vec<ModuleDesc> },
}

/// Either kind of structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureDesc {
    Ring(RingDesc),
    Module(ModuleDesc),
}

impl RingDesc {
    pub fn cyclic(n: u64) -> Self {
        RingDesc::Cyclic { n }
    }

    pub fn matrix(base: RingDesc, k: usize) -> Self {
        RingDesc::Matrix {
            base: Box::new(base),
            k,
        }
    }

    pub fn triangular(base: RingDesc, k: usize) -> Self {
        RingDesc::Triangular {
            base: Box::new(base),
            k,
        }
    }

    pub fn product(factors: Vec<RingDesc>) -> Self {
        RingDesc::Product { factors }
    }

    pub fn quotient(base: RingDesc, ideal_generators: Vec<Vec<u64>>) -> Self {
        RingDesc::Quotient {
            base: Box::new(base),
            ideal_generators,
        }
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDesc::Cyclic { n } => write!(f, "Z{n}"),
            RingDesc::Matrix { base, k } => write!(f, "M{k}({base})"),
            RingDesc::Triangular { base, k } => write!(f, "T{k}({base})"),
            RingDesc::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|r| r.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            RingDesc::Quotient { base, ideal_generators } => {
                let gens: Vec<String> = ideal_generators
                    .iter()
                    .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, "{base}/({})", gens.join(";"))
            }
        }
    }
}

impl fmt::Display for ModuleDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDesc::Regular { ring } => write!(f, "{ring}_{ring}"),
            ModuleDesc::Free { ring, n } => write!(f, "({ring})^{n}"),
            ModuleDesc::ZModule { orders } => {
                let parts: Vec<String> = orders.iter().map(|d| format!("Z{d}")).collect();
                write!(f, "Zmod[{}]", parts.join("+"))
            }
            ModuleDesc::DirectSum { summands } => {
                let parts: Vec<String> = summands.iter().map(|m| m.to_string()).collect();
                write!(f, "({})", parts.join(" + "))
            }
        }
    }
}

impl fmt::Display for StructureDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureDesc::Ring(r) => write!(f, "{r}"),
            StructureDesc::Module(m) => write!(f, "{m}"),
        }
    }
}

impl Serialize for StructureDesc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StructureDesc::Ring(r) => r.serialize(s),
            StructureDesc::Module(m) => m.serialize(s),
        }
    }
}

fn malformed(e: impl fmt::Display) -> Error {
    Error::Malformed(e.to_string())
}

/// Parses a structure file, dispatching on `kind`.
pub fn parse_structure(text: &str) -> Result<StructureDesc> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(malformed)?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| malformed("missing string field `kind`"))?;
    match kind {
        "cyclic" | "matrix" | "triangular" | "product" | "quotient" => serde_json::from_value(value)
            .map(StructureDesc::Ring)
            .map_err(malformed),
        "regular" | "free" | "z_module" | "direct_sum" => serde_json::from_value(value)
            .map(StructureDesc::Module)
            .map_err(malformed),
        other => Err(malformed(format!("unknown kind `{other}`"))),
    }
}

fn ring_cap(r: FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    if r.order() > caps.ring {
        Err(Error::cap("ring", r.order() as u128, caps.ring))
    } else {
        Ok(r)
    }
}

pub fn build_ring(d: &RingDesc, caps: &Caps) -> Result<FiniteRing> {
    match d {
        RingDesc::Cyclic { n } => {
            if *n as u128 > caps.ring as u128 {
                return Err(Error::cap("ring", *n as u128, caps.ring));
            }
            make_cyclic_ring(*n)
        }
        RingDesc::Matrix { base, k } => matrix_ring(&build_ring(base, caps)?, *k, caps),
        RingDesc::Triangular { base, k } => triangular_ring(&build_ring(base, caps)?, *k, caps),
        RingDesc::Product { factors } => {
            let mut it = factors.iter();
            let first = it
                .next()
                .ok_or_else(|| malformed("product needs at least one factor"))?;
            let mut acc = build_ring(first, caps)?;
            for f in it {
                acc = direct_product(&acc, &build_ring(f, caps)?, caps)?;
            }
            Ok(acc)
        }
        RingDesc::Quotient { base, ideal_generators } => {
            let r = build_ring(base, caps)?;
            let gens = ideal_generators
                .iter()
                .map(|c| r.element(c))
                .collect::<Result<Vec<_>>>()?;
            quotient_ring(&r, &two_sided_ideal(&r, &gens)).map(|q| q.ring)
        }
    }
    .and_then(|r| ring_cap(r, caps))
}

fn module_cap(m: FiniteModule, caps: &Caps) -> Result<FiniteModule> {
    if m.order() > caps.module {
        Err(Error::cap("module", m.order() as u128, caps.module))
    } else {
        Ok(m)
    }
}

/// Orders of a description made only of z_modules, if it is one.
fn z_orders(d: &ModuleDesc) -> Option<Vec<u64>> {
    match d {
        ModuleDesc::ZModule { orders } => Some(orders.clone()),
        ModuleDesc::DirectSum { summands } => {
            let parts: Option<Vec<Vec<u64>>> = summands.iter().map(z_orders).collect();
            parts.map(|p| p.concat())
        }
        _ => None,
    }
}

/// Builds a module. Sums of z_modules are merged into a single z_module over
/// the common quotient ring `Z_e`.
pub fn build_module(d: &ModuleDesc, caps: &Caps) -> Result<FiniteModule> {
    if let Some(orders) = z_orders(d) {
        let order = orders.iter().try_fold(1u128, |acc, &o| acc.checked_mul(o as u128));
        match order {
            Some(o) if o <= caps.module as u128 => {}
            o => return Err(Error::cap("module", o.unwrap_or(u128::MAX), caps.module)),
        }
        return z_module(&orders);
    }
    match d {
        ModuleDesc::Regular { ring } => Ok(regular_module(&Arc::new(build_ring(ring, caps)?))),
        ModuleDesc::Free { ring, n } => free_module(&Arc::new(build_ring(ring, caps)?), *n, caps),
        ModuleDesc::ZModule { orders } => z_module(orders),
        ModuleDesc::DirectSum { summands } => {
            let mut it = summands.iter();
            let first = it
                .next()
                .ok_or_else(|| malformed("direct_sum needs at least one summand"))?;
            let mut acc = build_module(first, caps)?;
            for s in it {
                acc = direct_sum(&acc, &build_module(s, caps)?, caps)?;
            }
            Ok(acc)
        }
    }
    .and_then(|m| module_cap(m, caps))
}

/// A built structure. Rings are analysed through their regular module where a
/// module is needed.
#[derive(Clone, Debug)]
pub enum Structure {
    Ring(Arc<FiniteRing>),
    Module(FiniteModule),
}

pub fn build_structure(d: &StructureDesc, caps: &Caps) -> Result<Structure> {
    match d {
        StructureDesc::Ring(r) => build_ring(r, caps).map(|r| Structure::Ring(Arc::new(r))),
        StructureDesc::Module(m) => build_module(m, caps).map(Structure::Module),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingSummary {
    pub order: usize,
    pub additive_orders: Vec<u64>,
    pub commutative: bool,
    pub idempotents: usize,
    pub central_elements: usize,
    pub units: usize,
    pub two_sided_ideals: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSummary {
    pub order: usize,
    pub additive_orders: Vec<u64>,
    pub ring: RingSummary,
    pub endomorphism_ring_order: usize,
    pub submodules: usize,
    pub fully_invariant_submodules: usize,
    pub uniform_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Summary {
    Ring(RingSummary),
    Module(ModuleSummary),
}

pub fn summarize_ring(r: &FiniteRing, caps: &Caps) -> Result<RingSummary> {
    Ok(RingSummary {
        order: r.order(),
        additive_orders: r.group().orders().to_vec(),
        commutative: r.is_commutative(),
        idempotents: r.idempotents().len(),
        central_elements: r.central_elements().len(),
        units: r.elements().filter(|&x| r.is_unit(x)).count(),
        two_sided_ideals: crate::ideal::all_two_sided_ideals(r, caps)?.len(),
    })
}

pub fn summarize_module(m: &FiniteModule, caps: &Caps) -> Result<ModuleSummary> {
    let s = end_ring(m, caps)?;
    Ok(ModuleSummary {
        order: m.order(),
        additive_orders: m.carrier().orders().to_vec(),
        ring: summarize_ring(m.ring(), caps)?,
        endomorphism_ring_order: s.order(),
        submodules: lattice::all_submodules(m, caps)?.len(),
        fully_invariant_submodules: lattice::fully_invariant_submodules(&s, caps)?.len(),
        uniform_dimension: lattice::uniform_dimension(m, caps)?,
    })
}

pub fn summarize(s: &Structure, caps: &Caps) -> Result<Summary> {
    match s {
        Structure::Ring(r) => summarize_ring(r, caps).map(Summary::Ring),
        Structure::Module(m) => summarize_module(m, caps).map(Summary::Module),
    }
}
