//! End-to-end acceptance checks. Runs without the libtest harness so that the
//! per-criterion PASS/FAIL lines are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use endoaip::annprop::AnyProperty;
use endoaip::harness::{find_separation, generate_corpus, run_theorem_suite, Corpus, CorpusSpec, TheoremId};
use endoaip::hom::hom_group_exhaustive;
use endoaip::lattice::{fully_invariant_submodules, uniform_dimension};
use endoaip::module::{regular_module, z_module};
use endoaip::replay::{replay_module, replay_ring};
use endoaip::ring::{is_isomorphism, make_cyclic_ring, matrix_ring};
use endoaip::{
    check_module_property, check_ring_property, end_ring, hom_group, Caps, FiniteModule, FiniteRing, PropertyId,
    RingPropertyId, Verdict,
};

const SMALL: usize = 16;

/// A verdict to be replayed in the last criterion.
enum Emitted {
    Module(FiniteModule, Verdict),
    Ring(Arc<FiniteRing>, Verdict),
}

type Check = Result<String, String>;

// ---------------------------------------------------------------------------
// Naive oracles. They only use element-level arithmetic of the structures.

/// All homomorphisms M -> N, as tuples of generator images. Every tuple is
/// extended through coordinates to a table and kept when the table satisfies
/// f(x + g) = f(x) + f(g) for each generator g (which gives additivity by
/// induction) and f(xr) = f(x)r for all x and r.
fn naive_homs(m: &FiniteModule, n: &FiniteModule) -> BTreeSet<Vec<usize>> {
    let (g, t) = (m.carrier(), n.carrier());
    let rank = g.rank();
    let gens: Vec<usize> = (0..rank).map(|i| g.generator(i)).collect();
    let coords: Vec<Vec<u64>> = m.elements().map(|x| m.coords(x)).collect();
    let ring = m.ring();
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; rank];
    loop {
        let f: Vec<usize> = coords
            .iter()
            .map(|c| {
                c.iter()
                    .zip(&pick)
                    .fold(0, |acc, (&k, &y)| t.add(acc, t.scale(y, k as i64)))
            })
            .collect();
        let additive = m
            .elements()
            .all(|x| gens.iter().all(|&y| f[g.add(x, y)] == t.add(f[x], f[y])));
        let linear = additive
            && m.elements()
                .all(|x| ring.elements().all(|r| f[m.scalar_act(x, r)] == n.scalar_act(f[x], r)));
        if linear {
            out.insert(gens.iter().map(|&x| f[x]).collect());
        }
        let mut k = 0;
        loop {
            if k == rank {
                return out;
            }
            pick[k] += 1;
            if pick[k] < n.order() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn sum_set(m: &FiniteModule, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| m.carrier().add(x, y)))
        .collect()
}

/// Every submodule, as the closure under sums of the cyclic submodules xR.
fn naive_submodules(m: &FiniteModule) -> BTreeSet<BTreeSet<usize>> {
    let cyclic: Vec<BTreeSet<usize>> = m
        .elements()
        .map(|x| m.ring().elements().map(|r| m.scalar_act(x, r)).collect())
        .collect();
    let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::from([BTreeSet::from([0])]);
    let mut frontier: Vec<BTreeSet<usize>> = all.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let t = sum_set(m, &s, c);
            if all.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    all
}

fn apply_images(m: &FiniteModule, images: &[usize], x: usize) -> usize {
    let t = m.carrier();
    m.coords(x)
        .iter()
        .zip(images)
        .fold(0, |acc, (&k, &y)| t.add(acc, t.scale(y, k as i64)))
}

fn naive_fully_invariant(m: &FiniteModule) -> BTreeSet<BTreeSet<usize>> {
    let ends = naive_homs(m, m);
    naive_submodules(m)
        .into_iter()
        .filter(|n| {
            ends.iter()
                .all(|f| n.iter().all(|&x| n.contains(&apply_images(m, f, x))))
        })
        .collect()
}

/// Largest family of nonzero submodules whose sum is direct.
fn naive_uniform_dimension(m: &FiniteModule) -> usize {
    let subs: Vec<BTreeSet<usize>> = naive_submodules(m).into_iter().filter(|s| s.len() > 1).collect();
    fn grow(m: &FiniteModule, subs: &[BTreeSet<usize>], from: usize, sum: &BTreeSet<usize>) -> usize {
        let mut best = 0;
        for i in from..subs.len() {
            let t = sum_set(m, sum, &subs[i]);
            if t.len() == sum.len() * subs[i].len() {
                best = best.max(1 + grow(m, subs, i + 1, &t));
            }
        }
        best
    }
    grow(m, &subs, 0, &BTreeSet::from([0]))
}

fn image_sets(homs: &[endoaip::ModuleHom]) -> BTreeSet<Vec<usize>> {
    homs.iter().map(|h| h.generator_images()).collect()
}

fn small(m: &FiniteModule) -> bool {
    m.order() <= SMALL && m.ring().order() <= SMALL
}

// ---------------------------------------------------------------------------

fn criterion_1(corpus: &Corpus, caps: &Caps) -> Check {
    let modules: Vec<&FiniteModule> = corpus.entries.iter().map(|e| &e.module).filter(|m| small(m)).collect();
    let mut pairs = 0;
    for (i, m) in modules.iter().enumerate() {
        let name = &corpus
            .entries
            .iter()
            .find(|e| std::ptr::eq(&e.module, *m))
            .unwrap()
            .name;
        for n in &modules[i..] {
            if m.ring() != n.ring() {
                continue;
            }
            let naive = naive_homs(m, n);
            let fast = image_sets(&hom_group(m, n, caps).map_err(|e| format!("{name}: {e}"))?);
            let exhaustive = image_sets(&hom_group_exhaustive(m, n, caps).map_err(|e| format!("{name}: {e}"))?);
            if fast != naive || exhaustive != naive {
                return Err(format!(
                    "{name}: Hom disagrees ({} fast, {} naive)",
                    fast.len(),
                    naive.len()
                ));
            }
            pairs += 1;
        }
        let s = end_ring(m, caps).map_err(|e| e.to_string())?;
        let fi: BTreeSet<BTreeSet<usize>> = fully_invariant_submodules(&s, caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|n| n.elements().iter().collect())
            .collect();
        if fi != naive_fully_invariant(m) {
            return Err(format!("{name}: fully invariant submodules disagree"));
        }
        let ud = uniform_dimension(m, caps).map_err(|e| e.to_string())?;
        let naive_ud = naive_uniform_dimension(m);
        if ud != naive_ud {
            return Err(format!("{name}: uniform dimension {ud}, naive {naive_ud}"));
        }
    }
    if modules.is_empty() {
        return Err("no small structures in the corpus".into());
    }
    Ok(format!("{} modules, {pairs} Hom pairs", modules.len()))
}

fn criterion_2(corpus: &Corpus, caps: &Caps, emitted: &mut Vec<Emitted>) -> Check {
    if corpus.len() < 40 {
        return Err(format!("corpus has {} structures", corpus.len()));
    }
    if TheoremId::ALL.len() != 17 {
        return Err(format!("{} theorem checks registered", TheoremId::ALL.len()));
    }
    let report = run_theorem_suite(corpus, TheoremId::ALL, caps);
    for t in &report.theorems {
        for v in &t.violations {
            if let (Some(w), Some(e)) = (&v.witness, corpus.find(&v.structure)) {
                emitted.push(Emitted::Module(e.module.clone(), w.clone()));
            }
        }
    }
    if !report.passed() {
        return Err(format!("{} violations", report.violation_count()));
    }
    let tested: usize = report.theorems.iter().map(|t| t.tested).sum();
    Ok(format!(
        "{} structures, 17 checks, {tested} instances, 0 violations",
        corpus.len()
    ))
}

fn criterion_3(corpus: &Corpus, caps: &Caps, emitted: &mut Vec<Emitted>) -> Check {
    let cases = [
        (
            AnyProperty::Module(PropertyId::EndoAip),
            AnyProperty::Module(PropertyId::CentrallyEndoAip),
            "T2(Z2)_T2(Z2)",
        ),
        (
            AnyProperty::Ring(RingPropertyId::CentrallyAip),
            AnyProperty::Ring(RingPropertyId::Abelian),
            "M2(Z2)_M2(Z2)",
        ),
    ];
    for (a, b, expected) in cases {
        let s = find_separation(a, b, corpus, caps).ok_or(format!("no separation of {a} from {b}"))?;
        if s.structure != expected {
            return Err(format!("{a} vs {b}: found {}, expected {expected}", s.structure));
        }
        let e = corpus.find(&s.structure).unwrap();
        for v in [s.holds, s.fails] {
            emitted.push(match (a, b) {
                (AnyProperty::Ring(_), _) => Emitted::Ring(e.ring.clone(), v),
                _ => Emitted::Module(e.module.clone(), v),
            });
        }
    }
    let z4 = z_module(&[4]).map_err(|e| e.to_string())?;
    let v = check_module_property(&z4, PropertyId::EndoAip, caps).map_err(|e| e.to_string())?;
    let n: BTreeSet<Vec<u64>> = v.witness.submodule.clone().unwrap_or_default().into_iter().collect();
    if v.holds || n != BTreeSet::from([vec![0], vec![2]]) {
        return Err(format!("z_module(4) endo_aip: holds={}, N={n:?}", v.holds));
    }
    emitted.push(Emitted::Module(z4, v));
    Ok("T2(Z2), M2(Z2), Z4 with N = {0,2}".into())
}

fn criterion_4(corpus: &Corpus, caps: &Caps, emitted: &mut Vec<Emitted>) -> Check {
    let mut rings = 0;
    for e in corpus.entries.iter().filter(|e| e.is_regular()) {
        let rv =
            check_ring_property(&e.ring, RingPropertyId::CentrallyAip, caps).map_err(|x| format!("{}: {x}", e.name))?;
        let mv = check_module_property(&regular_module(&e.ring), PropertyId::CentrallyEndoAip, caps)
            .map_err(|x| format!("{}: {x}", e.name))?;
        if rv.holds != mv.holds {
            return Err(format!("{}: ring {} vs module {}", e.name, rv.holds, mv.holds));
        }
        emitted.push(Emitted::Ring(e.ring.clone(), rv));
        emitted.push(Emitted::Module(regular_module(&e.ring), mv));
        rings += 1;
    }
    Ok(format!("{rings} rings agree"))
}

/// Searches for a ring isomorphism by trying every assignment of additive
/// generator images.
fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let g = a.group();
    let rank = g.rank();
    let mut pick = vec![0usize; rank];
    loop {
        let map: Vec<usize> = a
            .elements()
            .map(|x| {
                a.coords(x)
                    .iter()
                    .zip(&pick)
                    .fold(0, |acc, (&k, &y)| b.add(acc, b.group().scale(y, k as i64)))
            })
            .collect();
        if is_isomorphism(a, b, &map) {
            return Some(map);
        }
        let mut k = 0;
        loop {
            if k == rank {
                return None;
            }
            pick[k] += 1;
            if pick[k] < b.order() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn criterion_5(caps: &Caps, emitted: &mut Vec<Emitted>) -> Check {
    let z2z4 = z_module(&[2, 4]).map_err(|e| e.to_string())?;
    let z2z2 = z_module(&[2, 2]).map_err(|e| e.to_string())?;
    let z6 = z_module(&[6]).map_err(|e| e.to_string())?;

    let naive = naive_homs(&z2z4, &z2z4).len();
    let fast = end_ring(&z2z4, caps).map_err(|e| e.to_string())?.order();
    if (naive, fast) != (32, 32) {
        return Err(format!("|End(Z2+Z4)|: naive {naive}, computed {fast}"));
    }

    let s = end_ring(&z2z2, caps).map_err(|e| e.to_string())?;
    let m2 = matrix_ring(&make_cyclic_ring(2).map_err(|e| e.to_string())?, 2, caps).map_err(|e| e.to_string())?;
    if find_isomorphism(s.ring(), &m2).is_none() {
        return Err("End(Z2+Z2) is not isomorphic to M2(F2)".into());
    }

    let (naive, fast) = (
        naive_uniform_dimension(&z6),
        uniform_dimension(&z6, caps).map_err(|e| e.to_string())?,
    );
    if (naive, fast) != (2, 2) {
        return Err(format!("u.dim(Z6): naive {naive}, computed {fast}"));
    }

    let naive = naive_fully_invariant(&z2z2).len();
    let fast = fully_invariant_submodules(&s, caps).map_err(|e| e.to_string())?.len();
    if (naive, fast) != (2, 2) {
        return Err(format!(
            "fully invariant count of Z2+Z2: naive {naive}, computed {fast}"
        ));
    }

    for m in [&z2z4, &z2z2, &z6] {
        for &p in PropertyId::ALL {
            let v = check_module_property(m, p, caps).map_err(|e| e.to_string())?;
            emitted.push(Emitted::Module(m.clone(), v));
        }
    }
    Ok("|End(Z2+Z4)| = 32, End(Z2+Z2) = M2(F2), u.dim(Z6) = 2, 2 fully invariant".into())
}

fn criterion_6(emitted: &[Emitted], caps: &Caps) -> Check {
    let mut failures = 0;
    for e in emitted {
        let (v, outcome) = match e {
            Emitted::Module(m, v) => (v, replay_module(m, v, caps)),
            Emitted::Ring(r, v) => (v, replay_ring(r, v)),
        };
        if !v.holds {
            failures += 1;
        }
        outcome.map_err(|x| {
            format!(
                "{} ({}): {x}",
                v.property,
                if v.holds { "certificate" } else { "failure" }
            )
        })?;
    }
    if failures == 0 {
        return Err("no failure certificates were emitted".into());
    }
    Ok(format!(
        "{failures} failure certificates and {} satisfaction certificates replayed",
        emitted.len() - failures
    ))
}

fn report(n: usize, title: &str, started: Instant, r: Check) -> bool {
    let ms = started.elapsed().as_millis();
    match r {
        Ok(detail) => {
            println!("criterion {n} PASS  {title}: {detail} ({ms} ms)");
            true
        }
        Err(detail) => {
            println!("criterion {n} FAIL  {title}: {detail} ({ms} ms)");
            false
        }
    }
}

fn main() -> ExitCode {
    let caps = Caps::default();
    let corpus = generate_corpus(&CorpusSpec::default());
    let mut emitted = Vec::new();
    let mut ok = true;

    let t = Instant::now();
    ok &= report(1, "oracle equivalence", t, criterion_1(&corpus, &caps));
    let t = Instant::now();
    ok &= report(2, "theorem suite", t, criterion_2(&corpus, &caps, &mut emitted));
    let t = Instant::now();
    ok &= report(3, "separations", t, criterion_3(&corpus, &caps, &mut emitted));
    let t = Instant::now();
    ok &= report(
        4,
        "ring and module centrally AIP agree",
        t,
        criterion_4(&corpus, &caps, &mut emitted),
    );
    let t = Instant::now();
    ok &= report(5, "named values", t, criterion_5(&caps, &mut emitted));
    let t = Instant::now();
    ok &= report(6, "witness replay", t, criterion_6(&emitted, &caps));

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
