use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::describe::{build_module, build_ring, ModuleDesc, RingDesc};
use crate::error::{Error, Result};
use crate::ideal::{all_two_sided_ideals, IdealHandle};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::Caps;

/// Which structures to generate. Every family is enumerated in a fixed order,
/// and the optional random sample is drawn from a seeded generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    /// `z_module(d)` for `1 <= d <= z_cyclic_max`.
    pub z_cyclic_max: u64,
    /// `z_module(d1, d2)` for `2 <= d1 <= d2 <= z_pair_max`.
    pub z_pair_max: u64,
    /// Regular modules of `Z_n` for `1 <= n <= cyclic_ring_max`.
    pub cyclic_ring_max: u64,
    /// Further rings whose regular modules are included.
    pub rings: Vec<RingDesc>,
    /// Also include the regular modules of the quotients of `rings` by their
    /// proper nonzero two-sided ideals.
    pub quotients: bool,
    /// Free modules of this rank over every ring above of order at most
    /// `free_ring_max_order` (0 disables).
    pub free_rank: usize,
    pub free_ring_max_order: usize,
    /// Extra modules appended verbatim.
    pub modules: Vec<ModuleDesc>,
    /// Number of random three-factor z_modules of order at most 32.
    pub random_z_modules: usize,
    pub seed: u64,
    pub caps: Caps,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        let z2 = RingDesc::cyclic(2);
        CorpusSpec {
            z_cyclic_max: 12,
            z_pair_max: 6,
            cyclic_ring_max: 12,
            rings: vec![
                RingDesc::triangular(z2.clone(), 2),
                RingDesc::triangular(RingDesc::cyclic(3), 2),
                RingDesc::matrix(z2.clone(), 2),
                RingDesc::product(vec![z2.clone(), z2.clone()]),
                RingDesc::product(vec![z2, RingDesc::cyclic(4)]),
            ],
            quotients: true,
            free_rank: 2,
            free_ring_max_order: 4,
            modules: Vec::new(),
            random_z_modules: 4,
            seed: 0x5eed,
            caps: Caps::default(),
        }
    }
}

impl CorpusSpec {
    /// A spec that generates nothing.
    pub fn empty() -> Self {
        CorpusSpec {
            z_cyclic_max: 0,
            z_pair_max: 0,
            cyclic_ring_max: 0,
            rings: Vec::new(),
            quotients: false,
            free_rank: 0,
            free_ring_max_order: 0,
            modules: Vec::new(),
            random_z_modules: 0,
            seed: 0,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub desc: ModuleDesc,
    pub ring: Arc<FiniteRing>,
    pub module: FiniteModule,
}

impl CorpusEntry {
    /// The module is `R_R` for its ring.
    pub fn is_regular(&self) -> bool {
        matches!(self.desc, ModuleDesc::Regular { .. })
            || matches!(&self.desc, ModuleDesc::ZModule { orders } if orders.len() == 1)
    }

    /// The ring is some `Z_n`, so the module is a finite abelian group.
    pub fn is_z_module(&self) -> bool {
        self.ring.rank() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub structure: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<Skip>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn quotient_descs(base: &RingDesc, caps: &Caps) -> Result<Vec<RingDesc>> {
    let r = build_ring(base, caps)?;
    let ideals = all_two_sided_ideals(&r, caps)?;
    Ok(ideals
        .iter()
        .filter(|i| !i.is_zero() && i.len() < r.order())
        .map(|i: &IdealHandle| RingDesc::quotient(base.clone(), i.generators().iter().map(|&x| r.coords(x)).collect()))
        .collect())
}

/// Module descriptions in corpus order.
pub fn corpus_descriptions(spec: &CorpusSpec) -> (Vec<ModuleDesc>, Vec<Skip>) {
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for d in 1..=spec.z_cyclic_max {
        out.push(ModuleDesc::ZModule { orders: vec![d] });
    }
    for d1 in 2..=spec.z_pair_max {
        for d2 in d1..=spec.z_pair_max {
            out.push(ModuleDesc::ZModule { orders: vec![d1, d2] });
        }
    }
    let mut rings: Vec<RingDesc> = (1..=spec.cyclic_ring_max).map(RingDesc::cyclic).collect();
    for r in &spec.rings {
        rings.push(r.clone());
        if spec.quotients {
            match quotient_descs(r, &spec.caps) {
                Ok(qs) => rings.extend(qs),
                Err(e) => skipped.push(Skip {
                    structure: format!("quotients of {r}"),
                    reason: e.to_string(),
                }),
            }
        }
    }
    for r in &rings {
        out.push(ModuleDesc::Regular { ring: r.clone() });
    }
    if spec.free_rank > 0 {
        for r in &rings {
            match build_ring(r, &spec.caps) {
                Ok(ring) if ring.order() <= spec.free_ring_max_order && ring.order() > 1 => {
                    out.push(ModuleDesc::Free {
                        ring: r.clone(),
                        n: spec.free_rank,
                    })
                }
                _ => {}
            }
        }
    }
    out.extend(spec.modules.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut drawn = 0;
    while drawn < spec.random_z_modules {
        let mut orders: Vec<u64> = (0..3).map(|_| rng.gen_range(2..=4)).collect();
        orders.sort_unstable();
        if orders.iter().product::<u64>() <= 32 {
            out.push(ModuleDesc::ZModule { orders });
            drawn += 1;
        }
    }
    (out, skipped)
}

/// Builds the corpus. Structures over the caps are listed in `skipped`;
/// repeated descriptions are kept once.
pub fn generate_corpus(spec: &CorpusSpec) -> Corpus {
    let (descs, mut skipped) = corpus_descriptions(spec);
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for d in descs {
        let name = d.to_string();
        if !seen.insert(name.clone()) {
            continue;
        }
        match build_module(&d, &spec.caps) {
            Ok(module) => entries.push(CorpusEntry {
                name,
                ring: module.ring().clone(),
                desc: d,
                module,
            }),
            Err(e @ Error::SizeCapExceeded { .. }) => skipped.push(Skip {
                structure: name,
                reason: e.to_string(),
            }),
            Err(e) => skipped.push(Skip {
                structure: name,
                reason: format!("construction failed: {e}"),
            }),
        }
    }
    Corpus { entries, skipped }
}
