use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::annprop::{ModuleAnalysis, PropertyId, RingAnalysis, RingPropertyId, Verdict};
use crate::error::{Error, Result};
use crate::group::ElemSet;
use crate::lattice::{ring_right_uniform_dimension, submodule_as_module, Submodule};
use crate::module::{direct_sum, free_module, FiniteModule};
use crate::ring::{matrix_ring, FiniteRing};
use crate::Caps;

use super::corpus::{Corpus, CorpusEntry, Skip};
use super::report::{Observation, Report, TheoremResult, Timing, Violation};

macro_rules! theorems {
    ($($variant:ident => $text:literal : $statement:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum TheoremId {
            $(#[serde(rename = $text)] $variant),*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $text),*
                }
            }

            pub fn statement(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $statement),*
                }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.to_ascii_uppercase().as_str() {
                    $($text => Ok(TheoremId::$variant),)*
                    _ => Err(Error::Malformed(format!("unknown theorem id `{s}`"))),
                }
            }
        }
    };
}

theorems! {
    Hier => "HIER": "abelian and rickart => centrally_endo_aip => endo_aip",
    Rl => "RL": "for rickart modules: abelian <=> reduced <=> rigid <=> semicommutative <=> symmetric",
    IfpEq => "IFP-EQ": "for ifp modules: centrally_endo_aip <=> endo_aip <=> endo_app",
    Dsum => "DSUM": "direct summands of centrally_endo_aip modules are centrally_endo_aip",
    Finv => "FINV": "a fully invariant N of a centrally_endo_aip M, with every endomorphism of N extending to M, is centrally_endo_aip",
    Fgz => "FGZ": "a finite centrally_endo_aip Z-module is semisimple",
    Dsum2 => "DSUM2": "M1, M2 centrally_endo_aip with every nonzero cross homomorphism mono => M1 + M2 centrally_endo_aip",
    Copies => "COPIES": "M centrally_endo_aip => M^n centrally_endo_aip (n = 2, 3)",
    Free => "FREE": "R centrally_aip <=> R^2 centrally_endo_aip",
    Matrx => "MATRX": "R centrally_aip => M2(R) centrally_aip (|R| <= 4)",
    Endca => "ENDCA": "M centrally_endo_aip => End(M) centrally_aip",
    Endsp => "ENDSP": "M centrally_endo_aip => End(M) semiprime",
    Lpqr => "LPQR": "M locally_pq_retractable and End(M) centrally_aip => M centrally_endo_aip",
    Udqb => "UDQB": "M centrally_endo_aip => End(M) quasi_baer",
    Ud1p => "UD1P": "M centrally_endo_aip and u.dim(S_S) = 1 => End(M) prime",
    Locp => "LOCP": "M endo_aip and End(M) local => End(M) prime",
    Speq => "SPEQ": "for semiprime modules: quasi_baer <=> endo_aip <=> centrally_endo_aip",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one theorem on one structure.
#[derive(Clone, Debug)]
enum Outcome {
    /// Hypothesis false.
    Vacuous,
    Passed,
    Violated(String, Option<Verdict>),
    Skipped(String),
}

/// Several outcomes (one per derived structure) for one corpus entry.
type Outcomes = Vec<(String, Outcome)>;

/// Per-entry analysis shared by all theorem checks.
struct Subject<'a> {
    entry: &'a CorpusEntry,
    caps: Caps,
    m: ModuleAnalysis,
    s: OnceLock<Result<RingAnalysis>>,
    r: RingAnalysis,
}

impl<'a> Subject<'a> {
    fn new(entry: &'a CorpusEntry, caps: Caps) -> Self {
        Subject {
            entry,
            caps,
            m: ModuleAnalysis::new(entry.module.clone(), caps),
            s: OnceLock::new(),
            r: RingAnalysis::new(entry.ring.clone(), caps),
        }
    }

    fn m(&self, p: PropertyId) -> Result<bool> {
        self.m.holds(p)
    }

    fn s_ring(&self) -> Result<&RingAnalysis> {
        self.s
            .get_or_init(|| {
                let s = self.m.end()?;
                Ok(RingAnalysis::new(Arc::new(s.ring().clone()), self.caps))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn s(&self, p: RingPropertyId) -> Result<bool> {
        self.s_ring()?.holds(p)
    }
}

fn outcome(r: Result<Outcome>) -> Outcome {
    match r {
        Ok(o) => o,
        Err(e @ Error::SizeCapExceeded { .. }) => Outcome::Skipped(e.to_string()),
        Err(e) => Outcome::Violated(format!("internal error: {e}"), None),
    }
}

fn implication(hyp: bool, concl: impl FnOnce() -> Result<bool>, what: &str) -> Result<Outcome> {
    if !hyp {
        return Ok(Outcome::Vacuous);
    }
    Ok(if concl()? {
        Outcome::Passed
    } else {
        Outcome::Violated(what.to_string(), None)
    })
}

fn module_verdict(a: &ModuleAnalysis, p: PropertyId) -> Option<Verdict> {
    a.check(p).ok()
}

fn equivalence(values: &[(&str, bool)]) -> Outcome {
    if values.windows(2).all(|w| w[0].1 == w[1].1) {
        Outcome::Passed
    } else {
        let parts: Vec<String> = values.iter().map(|(n, v)| format!("{n}={v}")).collect();
        Outcome::Violated(format!("not equivalent: {}", parts.join(", ")), None)
    }
}

fn hier(x: &Subject) -> Result<Outcome> {
    let ab_r = x.m(PropertyId::Abelian)? && x.m(PropertyId::Rickart)?;
    let ce = x.m(PropertyId::CentrallyEndoAip)?;
    if !(ab_r || ce) {
        return Ok(Outcome::Vacuous);
    }
    if ab_r && !ce {
        return Ok(Outcome::Violated(
            "abelian rickart module is not centrally_endo_aip".into(),
            module_verdict(&x.m, PropertyId::CentrallyEndoAip),
        ));
    }
    if !x.m(PropertyId::EndoAip)? {
        return Ok(Outcome::Violated(
            "centrally_endo_aip module is not endo_aip".into(),
            module_verdict(&x.m, PropertyId::EndoAip),
        ));
    }
    Ok(Outcome::Passed)
}

fn rl(x: &Subject) -> Result<Outcome> {
    if !x.m(PropertyId::Rickart)? {
        return Ok(Outcome::Vacuous);
    }
    let mut vals = Vec::new();
    for p in [
        PropertyId::Abelian,
        PropertyId::Reduced,
        PropertyId::Rigid,
        PropertyId::Semicommutative,
        PropertyId::Symmetric,
    ] {
        vals.push((p.as_str(), x.m(p)?));
    }
    Ok(equivalence(&vals))
}

fn ifp_eq(x: &Subject) -> Result<Outcome> {
    if !x.m(PropertyId::Ifp)? {
        return Ok(Outcome::Vacuous);
    }
    let mut vals = Vec::new();
    for p in [PropertyId::CentrallyEndoAip, PropertyId::EndoAip, PropertyId::EndoApp] {
        vals.push((p.as_str(), x.m(p)?));
    }
    Ok(equivalence(&vals))
}

/// Distinct images `e(M)` of idempotents `e`.
fn summands(x: &Subject) -> Result<Vec<Submodule>> {
    let s = x.m.end()?;
    let images = x.m.images()?;
    let mut seen: HashSet<&ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for &e in x.m.idempotents()? {
        if seen.insert(&images[e]) {
            out.push(Submodule::from_set(s.module().carrier(), images[e].clone()));
        }
    }
    Ok(out)
}

fn dsum(x: &Subject) -> Result<Outcomes> {
    if !x.m(PropertyId::CentrallyEndoAip)? {
        return Ok(vec![(x.entry.name.clone(), Outcome::Vacuous)]);
    }
    let mut out = Vec::new();
    for n in summands(x)? {
        let label = format!("{} / summand of order {}", x.entry.name, n.len());
        let o = submodule_as_module(&x.entry.module, &n).and_then(|sm| {
            let a = ModuleAnalysis::new(sm.module, x.caps);
            Ok(if a.holds(PropertyId::CentrallyEndoAip)? {
                Outcome::Passed
            } else {
                Outcome::Violated(
                    "direct summand is not centrally_endo_aip".into(),
                    module_verdict(&a, PropertyId::CentrallyEndoAip),
                )
            })
        });
        out.push((label, outcome(o)));
    }
    Ok(out)
}

fn finv(x: &Subject) -> Result<Outcomes> {
    if !x.m(PropertyId::CentrallyEndoAip)? {
        return Ok(vec![(x.entry.name.clone(), Outcome::Vacuous)]);
    }
    let s = x.m.end()?;
    let mut out = Vec::new();
    for n in x.m.fully_invariant()? {
        let label = format!("{} / fully invariant submodule of order {}", x.entry.name, n.len());
        let o = submodule_as_module(&x.entry.module, n).and_then(|sm| {
            let a = ModuleAnalysis::new(sm.module.clone(), x.caps);
            let t = a.end()?;
            let restrictions: HashSet<Vec<usize>> = (0..s.order())
                .map(|f| sm.embedding.iter().map(|&y| s.eval(f, y)).collect())
                .collect();
            if restrictions.len() != t.order() {
                return Ok(Outcome::Vacuous);
            }
            Ok(if a.holds(PropertyId::CentrallyEndoAip)? {
                Outcome::Passed
            } else {
                Outcome::Violated(
                    "fully invariant submodule with extendable endomorphisms is not centrally_endo_aip".into(),
                    module_verdict(&a, PropertyId::CentrallyEndoAip),
                )
            })
        });
        out.push((label, outcome(o)));
    }
    Ok(out)
}

fn fgz(x: &Subject) -> Result<Outcome> {
    if !x.entry.is_z_module() {
        return Ok(Outcome::Vacuous);
    }
    implication(
        x.m(PropertyId::CentrallyEndoAip)?,
        || x.m(PropertyId::Semisimple),
        "centrally_endo_aip Z-module is not semisimple",
    )
}

fn copies(x: &Subject) -> Result<Outcomes> {
    if !x.m(PropertyId::CentrallyEndoAip)? {
        return Ok(vec![(x.entry.name.clone(), Outcome::Vacuous)]);
    }
    let m = &x.entry.module;
    let mut out = Vec::new();
    let mut power = m.clone();
    for n in 2..=3u32 {
        let label = format!("{}^{n}", x.entry.name);
        let s_order = (x.m.end()?.order() as u128).checked_pow(n * n).unwrap_or(u128::MAX);
        if s_order > x.caps.ring as u128 {
            out.push((
                label,
                Outcome::Skipped(Error::cap("endomorphism ring", s_order, x.caps.ring).to_string()),
            ));
            break;
        }
        let o = direct_sum(&power, m, &x.caps).and_then(|p| {
            power = p.clone();
            let a = ModuleAnalysis::new(p, x.caps);
            Ok(if a.holds(PropertyId::CentrallyEndoAip)? {
                Outcome::Passed
            } else {
                Outcome::Violated(
                    "direct sum of copies is not centrally_endo_aip".into(),
                    module_verdict(&a, PropertyId::CentrallyEndoAip),
                )
            })
        });
        out.push((label, outcome(o)));
    }
    Ok(out)
}

fn free(x: &Subject) -> Result<Outcome> {
    if !x.entry.is_regular() {
        return Ok(Outcome::Vacuous);
    }
    let r = &x.entry.ring;
    let s_order = (r.order() as u128).pow(4);
    if s_order > x.caps.ring as u128 {
        return Err(Error::cap("endomorphism ring of R^2", s_order, x.caps.ring));
    }
    let lhs = x.r.holds(RingPropertyId::CentrallyAip)?;
    let f = free_module(r, 2, &x.caps)?;
    let a = ModuleAnalysis::new(f, x.caps);
    let rhs = a.holds(PropertyId::CentrallyEndoAip)?;
    Ok(if lhs == rhs {
        Outcome::Passed
    } else {
        Outcome::Violated(
            format!("centrally_aip(R) = {lhs} but centrally_endo_aip(R^2) = {rhs}"),
            module_verdict(&a, PropertyId::CentrallyEndoAip),
        )
    })
}

fn matrx(x: &Subject) -> Result<Outcome> {
    if !x.entry.is_regular() || x.entry.ring.order() > 4 {
        return Ok(Outcome::Vacuous);
    }
    if !x.r.holds(RingPropertyId::CentrallyAip)? {
        return Ok(Outcome::Vacuous);
    }
    let m2 = matrix_ring(&x.entry.ring, 2, &x.caps)?;
    let a = RingAnalysis::new(Arc::new(m2), x.caps);
    let v = a.check(RingPropertyId::CentrallyAip)?;
    Ok(if v.holds {
        Outcome::Passed
    } else {
        Outcome::Violated("M2(R) is not centrally_aip".into(), Some(v))
    })
}

fn ring_conclusion(x: &Subject, hyp: bool, p: RingPropertyId, what: &str) -> Result<Outcome> {
    if !hyp {
        return Ok(Outcome::Vacuous);
    }
    let v = x.s_ring()?.check(p)?;
    Ok(if v.holds {
        Outcome::Passed
    } else {
        Outcome::Violated(what.to_string(), Some(v))
    })
}

fn lpqr(x: &Subject) -> Result<Outcome> {
    let hyp = x.m(PropertyId::LocallyPqRetractable)? && x.s(RingPropertyId::CentrallyAip)?;
    implication(
        hyp,
        || x.m(PropertyId::CentrallyEndoAip),
        "hypotheses hold but M is not centrally_endo_aip",
    )
}

fn ud1p(x: &Subject) -> Result<Outcome> {
    if !x.m(PropertyId::CentrallyEndoAip)? {
        return Ok(Outcome::Vacuous);
    }
    let s = x.s_ring()?;
    if ring_right_uniform_dimension(s.ring(), &x.caps)? != 1 {
        return Ok(Outcome::Vacuous);
    }
    ring_conclusion(x, true, RingPropertyId::Prime, "End(M) is not prime")
}

fn locp(x: &Subject) -> Result<Outcome> {
    let hyp = x.m(PropertyId::EndoAip)? && x.s(RingPropertyId::Local)?;
    ring_conclusion(x, hyp, RingPropertyId::Prime, "End(M) is local but not prime")
}

fn speq(x: &Subject) -> Result<Outcome> {
    if !x.m(PropertyId::SemiprimeModule)? {
        return Ok(Outcome::Vacuous);
    }
    let mut vals = Vec::new();
    for p in [PropertyId::QuasiBaer, PropertyId::EndoAip, PropertyId::CentrallyEndoAip] {
        vals.push((p.as_str(), x.m(p)?));
    }
    Ok(equivalence(&vals))
}

fn run_single(id: TheoremId, x: &Subject) -> Outcomes {
    use TheoremId::*;
    let single = |r: Result<Outcome>| vec![(x.entry.name.clone(), outcome(r))];
    let many = |r: Result<Outcomes>| match r {
        Ok(v) => v,
        Err(e) => vec![(x.entry.name.clone(), outcome(Err(e)))],
    };
    match id {
        Hier => single(hier(x)),
        Rl => single(rl(x)),
        IfpEq => single(ifp_eq(x)),
        Dsum => many(dsum(x)),
        Finv => many(finv(x)),
        Fgz => single(fgz(x)),
        Dsum2 => Vec::new(),
        Copies => many(copies(x)),
        Free => single(free(x)),
        Matrx => single(matrx(x)),
        Endca => single(
            x.m(PropertyId::CentrallyEndoAip)
                .and_then(|h| ring_conclusion(x, h, RingPropertyId::CentrallyAip, "End(M) is not centrally_aip")),
        ),
        Endsp => single(
            x.m(PropertyId::CentrallyEndoAip)
                .and_then(|h| ring_conclusion(x, h, RingPropertyId::Semiprime, "End(M) is not semiprime")),
        ),
        Lpqr => single(lpqr(x)),
        Udqb => single(
            x.m(PropertyId::CentrallyEndoAip)
                .and_then(|h| ring_conclusion(x, h, RingPropertyId::QuasiBaer, "End(M) is not quasi_baer")),
        ),
        Ud1p => single(ud1p(x)),
        Locp => single(locp(x)),
        Speq => single(speq(x)),
    }
}

/// Pairs of corpus modules over the same ring, with `|M1| * |M2|` at most this.
const PAIR_ORDER_LIMIT: usize = 64;

fn nonzero_homs_mono(a: &FiniteModule, b: &FiniteModule, caps: &Caps) -> Result<bool> {
    Ok(crate::hom::hom_group(a, b, caps)?
        .iter()
        .all(|f| f.is_zero() || f.is_monomorphism()))
}

fn dsum2_pair(a: &Subject, b: &Subject, caps: &Caps) -> Result<Outcome> {
    if !(a.m(PropertyId::CentrallyEndoAip)? && b.m(PropertyId::CentrallyEndoAip)?) {
        return Ok(Outcome::Vacuous);
    }
    let (ma, mb) = (&a.entry.module, &b.entry.module);
    if !(nonzero_homs_mono(ma, mb, caps)? && nonzero_homs_mono(mb, ma, caps)?) {
        return Ok(Outcome::Vacuous);
    }
    let sum = ModuleAnalysis::new(direct_sum(ma, mb, caps)?, *caps);
    Ok(if sum.holds(PropertyId::CentrallyEndoAip)? {
        Outcome::Passed
    } else {
        Outcome::Violated(
            "direct sum is not centrally_endo_aip".into(),
            module_verdict(&sum, PropertyId::CentrallyEndoAip),
        )
    })
}

fn dsum2_pairs(corpus: &Corpus) -> Vec<(usize, usize)> {
    let e = &corpus.entries;
    let mut out = Vec::new();
    for i in 0..e.len() {
        for j in i..e.len() {
            if e[i].ring == e[j].ring
                && !e[i].module.is_zero()
                && !e[j].module.is_zero()
                && e[i].module.order() * e[j].module.order() <= PAIR_ORDER_LIMIT
            {
                out.push((i, j));
            }
        }
    }
    out
}

/// Outcome list for one theorem, in corpus order.
fn collect(id: TheoremId, results: Vec<Outcomes>, skipped_corpus: &[Skip]) -> TheoremResult {
    let mut t = TheoremResult {
        id: id.as_str().to_string(),
        statement: id.statement().to_string(),
        tested: 0,
        hypothesis_met: 0,
        violations: Vec::new(),
        skipped: skipped_corpus.to_vec(),
    };
    for (name, o) in results.into_iter().flatten() {
        match o {
            Outcome::Skipped(reason) => t.skipped.push(Skip {
                structure: name,
                reason,
            }),
            Outcome::Vacuous => t.tested += 1,
            Outcome::Passed => {
                t.tested += 1;
                t.hypothesis_met += 1;
            }
            Outcome::Violated(detail, verdict) => {
                t.tested += 1;
                t.hypothesis_met += 1;
                let mut detail = detail;
                if id == TheoremId::Udqb {
                    detail.push_str(" (check the annihilator side convention first)");
                }
                t.violations.push(Violation::new(name, detail, verdict));
            }
        }
    }
    t
}

/// Runs the selected theorems over the corpus. Structures are processed in
/// parallel; the report follows registry order and corpus order.
pub fn run_theorem_suite(corpus: &Corpus, ids: &[TheoremId], caps: &Caps) -> Report {
    let start = Instant::now();
    let mut wanted: Vec<TheoremId> = ids.to_vec();
    wanted.sort();
    wanted.dedup();
    let subjects: Vec<Subject> = corpus.entries.iter().map(|e| Subject::new(e, *caps)).collect();
    let per_entry: Vec<Vec<Outcomes>> = subjects
        .par_iter()
        .map(|x| wanted.iter().map(|&id| run_single(id, x)).collect())
        .collect();
    let mut per_theorem: Vec<Vec<Outcomes>> = vec![Vec::new(); wanted.len()];
    for row in per_entry {
        for (k, o) in row.into_iter().enumerate() {
            per_theorem[k].push(o);
        }
    }
    if let Some(k) = wanted.iter().position(|&t| t == TheoremId::Dsum2) {
        let pairs = dsum2_pairs(corpus);
        per_theorem[k] = pairs
            .par_iter()
            .map(|&(i, j)| {
                let name = format!("{} + {}", corpus.entries[i].name, corpus.entries[j].name);
                vec![(name, outcome(dsum2_pair(&subjects[i], &subjects[j], caps)))]
            })
            .collect();
    }
    let theorems: Vec<TheoremResult> = wanted
        .iter()
        .zip(per_theorem)
        .map(|(&id, res)| collect(id, res, &corpus.skipped))
        .collect();
    let observations = observations(corpus, &subjects);
    Report {
        theorems,
        observations,
        timing: Timing {
            total_ms: start.elapsed().as_millis(),
            structures: corpus.len(),
        },
    }
}

fn observations(corpus: &Corpus, subjects: &[Subject]) -> Vec<Observation> {
    let mut converse = Observation::new(
        "FGZ-CONVERSE",
        "exploratory: a finite semisimple Z-module is centrally_endo_aip",
    );
    let mut separation = Observation::new(
        "CEAIP-NOT-RICKART",
        "exploratory: search for a centrally_endo_aip module that is not rickart",
    );
    for x in subjects {
        if x.entry.is_z_module() {
            if let (Ok(true), Ok(c)) = (x.m(PropertyId::Semisimple), x.m(PropertyId::CentrallyEndoAip)) {
                converse.tested += 1;
                if !c {
                    converse.counterexamples.push(x.entry.name.clone());
                }
            }
        }
        if let (Ok(c), Ok(r)) = (x.m(PropertyId::CentrallyEndoAip), x.m(PropertyId::Rickart)) {
            separation.tested += 1;
            if c && !r {
                separation.counterexamples.push(x.entry.name.clone());
            }
        }
    }
    converse.conclude("no counterexample in the corpus", "counterexamples listed");
    separation.conclude("no finite witness found (not a theorem)", "finite witnesses listed");
    let mut obs = vec![converse, separation];
    if let Some(o) = triangular_product_observation(corpus) {
        obs.push(o);
    }
    obs
}

/// Records the computed products `T11 T22` and `T11 T12 T22` in `T2(Z2)`.
fn triangular_product_observation(_corpus: &Corpus) -> Option<Observation> {
    let z2 = crate::ring::make_cyclic_ring(2).ok()?;
    let t2: FiniteRing = crate::ring::triangular_ring(&z2, 2, &Caps::default()).ok()?;
    let unit = |i, j| crate::ring::matrix_unit(&z2, &t2, 2, true, i, j);
    let (t11, t12, t22) = (unit(0, 0)?, unit(0, 1)?, unit(1, 1)?);
    let a = t2.mul(t11, t22);
    let b = t2.mul(t2.mul(t11, t12), t22);
    let mut o = Observation::new("T2-PRODUCTS", "computed matrix-unit products in T2(Z2)");
    o.tested = 1;
    o.result = format!(
        "T11*T22 = {:?}, T11*T12*T22 = {:?} (T12 = {:?})",
        t2.coords(a),
        t2.coords(b),
        t2.coords(t12)
    );
    Some(o)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::corpus::{generate_corpus, CorpusSpec};

    fn small_corpus() -> Corpus {
        generate_corpus(&CorpusSpec {
            z_cyclic_max: 8,
            z_pair_max: 4,
            cyclic_ring_max: 6,
            free_rank: 2,
            random_z_modules: 0,
            ..CorpusSpec::default()
        })
    }

    #[test]
    fn ids_roundtrip_and_count() {
        assert_eq!(TheoremId::ALL.len(), 17);
        for &t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("NOPE".parse::<TheoremId>().is_err());
    }

    #[test]
    fn suite_on_small_corpus_has_no_violations() {
        let c = small_corpus();
        let r = run_theorem_suite(&c, TheoremId::ALL, &Caps::default());
        for t in &r.theorems {
            assert!(t.violations.is_empty(), "{}: {:?}", t.id, t.violations);
        }
        assert_eq!(r.theorems.len(), 17);
    }

    #[test]
    fn ud1p_on_z4_is_vacuous() {
        let c = generate_corpus(&CorpusSpec {
            modules: vec![crate::describe::ModuleDesc::ZModule { orders: vec![4] }],
            ..CorpusSpec::empty()
        });
        let r = run_theorem_suite(&c, &[TheoremId::Ud1p, TheoremId::Speq], &Caps::default());
        assert_eq!(r.theorems[0].tested, 1);
        assert_eq!(r.theorems[0].hypothesis_met, 0);
    }

    #[test]
    fn speq_on_z2_squared() {
        let m = crate::module::z_module(&[2, 2]).unwrap();
        let a = ModuleAnalysis::new(m, Caps::default());
        for p in [
            PropertyId::SemiprimeModule,
            PropertyId::QuasiBaer,
            PropertyId::EndoAip,
            PropertyId::CentrallyEndoAip,
        ] {
            assert!(a.holds(p).unwrap(), "{p}");
        }
    }
}
