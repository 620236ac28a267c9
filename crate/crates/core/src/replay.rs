//! Independent re-validation of verdict witnesses.
//!
//! Nothing here goes through the annihilator checkers. Endomorphisms are
//! recomputed by exhaustive enumeration when the search space is small
//! (falling back to the congruence solver otherwise), every matrix in a
//! witness is re-validated as an R-linear map, and each claim is checked
//! against the definition of the property.

use std::collections::{HashMap, HashSet};

use crate::annprop::{Item, Level, PropertyId, RingPropertyId, Verdict, WitnessKind};
use crate::group::ElemSet;
use crate::hom::{hom_group, hom_group_exhaustive, ModuleHom};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::Caps;

pub type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `End_R(M)` as a plain list of maps with an evaluation table.
struct Endos<'a> {
    m: &'a FiniteModule,
    homs: Vec<ModuleHom>,
    by_matrix: HashMap<Vec<Vec<u64>>, usize>,
    by_table: HashMap<Vec<usize>, usize>,
    table: Vec<Vec<usize>>,
    images: Vec<ElemSet>,
}

impl<'a> Endos<'a> {
    fn new(m: &'a FiniteModule, caps: &Caps) -> Result<Self, String> {
        let exhaustive = if m.order() * m.ring().order() <= 1 << 12 {
            hom_group_exhaustive(m, m, caps).ok()
        } else {
            None
        };
        let homs = match exhaustive {
            Some(h) => h,
            None => hom_group(m, m, caps).map_err(|e| e.to_string())?,
        };
        if homs.len().saturating_mul(m.order()) > 1 << 24 {
            return Err(format!("End(M) of order {} is too large to replay", homs.len()));
        }
        let table: Vec<Vec<usize>> = homs
            .iter()
            .map(|f| m.elements().map(|x| f.apply(x)).collect())
            .collect();
        let by_matrix = homs.iter().enumerate().map(|(i, f)| (f.matrix().to_vec(), i)).collect();
        let by_table = table.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let images = table
            .iter()
            .map(|t| ElemSet::from_iter_in(m.order(), t.iter().copied()))
            .collect();
        Ok(Endos {
            m,
            homs,
            by_matrix,
            by_table,
            table,
            images,
        })
    }

    fn len(&self) -> usize {
        self.homs.len()
    }

    fn eval(&self, f: usize, x: usize) -> usize {
        self.table[f][x]
    }

    fn parse(&self, matrix: &[Vec<u64>]) -> Result<usize, String> {
        let f = ModuleHom::new(self.m, self.m, matrix.to_vec()).map_err(|e| format!("bad endomorphism: {e}"))?;
        self.by_matrix
            .get(f.matrix())
            .copied()
            .ok_or_else(|| "endomorphism missing from End(M)".to_string())
    }

    fn parse_item(&self, item: &Item) -> Result<usize, String> {
        match item {
            Item::Matrix(a) => self.parse(a),
            Item::Coords(_) => Err("expected an endomorphism".into()),
        }
    }

    /// `f ∘ g`, by comparing values on all of `M`.
    fn compose(&self, f: usize, g: usize) -> usize {
        let vals: Vec<usize> = self.m.elements().map(|x| self.eval(f, self.eval(g, x))).collect();
        *self.by_table.get(&vals).expect("End(M) is closed under composition")
    }

    fn same(&self, f: usize, g: usize) -> bool {
        self.table[f] == self.table[g]
    }

    fn commutes_with_all(&self, u: usize) -> bool {
        (0..self.len()).all(|f| {
            self.m
                .elements()
                .all(|x| self.eval(u, self.eval(f, x)) == self.eval(f, self.eval(u, x)))
        })
    }

    fn is_idempotent(&self, e: usize) -> bool {
        self.m
            .elements()
            .all(|x| self.eval(e, self.eval(e, x)) == self.eval(e, x))
    }

    fn image(&self, f: usize) -> ElemSet {
        self.images[f].clone()
    }

    fn kernel(&self, f: usize) -> ElemSet {
        ElemSet::from_iter_in(self.m.order(), self.m.elements().filter(|&x| self.eval(f, x) == 0))
    }

    /// `l_S(N)`.
    fn annihilator(&self, n: &ElemSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&f| n.iter().all(|x| self.eval(f, x) == 0))
            .collect()
    }

    fn fully_invariant(&self, n: &ElemSet) -> bool {
        (0..self.len()).all(|f| n.iter().all(|x| n.contains(self.eval(f, x))))
    }
}

fn module_set(m: &FiniteModule, coords: &[Vec<u64>]) -> Result<ElemSet, String> {
    let mut s = ElemSet::empty(m.order());
    for c in coords {
        s.insert(m.element(c).map_err(|e| e.to_string())?);
    }
    Ok(s)
}

fn is_submodule(m: &FiniteModule, n: &ElemSet) -> bool {
    let g = m.carrier();
    let r = m.ring();
    n.contains(0)
        && n.iter().all(|x| n.iter().all(|y| n.contains(g.add(x, y))))
        && n.iter().all(|x| r.elements().all(|a| n.contains(m.scalar_act(x, a))))
}

fn is_cyclic(m: &FiniteModule, n: &ElemSet) -> bool {
    let r = m.ring();
    n.iter().any(|x| {
        let xr = ElemSet::from_iter_in(m.order(), r.elements().map(|a| m.scalar_act(x, a)));
        xr == *n
    })
}

/// Checks a module-level verdict against `m`.
pub fn replay_module(m: &FiniteModule, v: &Verdict, caps: &Caps) -> Outcome {
    ensure(v.level == Level::Module, || "not a module-level verdict".into())?;
    let p: PropertyId = v.property.parse().map_err(|e: crate::Error| e.to_string())?;
    ensure(v.holds == (v.witness.kind == WitnessKind::Certificate), || {
        "witness kind does not match the verdict".into()
    })?;
    let s = Endos::new(m, caps)?;
    if v.holds {
        replay_module_certificate(&s, p, v)
    } else {
        replay_module_failure(&s, p, v)
    }
}

fn single_endo(s: &Endos, v: &Verdict) -> Result<usize, String> {
    let f = v.witness.endomorphism.as_ref().ok_or("missing endomorphism")?;
    s.parse(f)
}

fn listed_endos(s: &Endos, v: &Verdict, n: usize) -> Result<Vec<usize>, String> {
    ensure(v.witness.endomorphisms.len() >= n, || {
        format!("expected {n} listed endomorphisms")
    })?;
    v.witness.endomorphisms.iter().map(|a| s.parse(a)).collect()
}

fn listed_elements(m: &FiniteModule, v: &Verdict, n: usize) -> Result<Vec<usize>, String> {
    ensure(v.witness.elements.len() >= n, || {
        format!("expected {n} listed elements")
    })?;
    v.witness
        .elements
        .iter()
        .map(|c| m.element(c).map_err(|e| e.to_string()))
        .collect()
}

fn witness_submodule(s: &Endos, v: &Verdict) -> Result<ElemSet, String> {
    let coords = v.witness.submodule.as_ref().ok_or("missing submodule")?;
    let n = module_set(s.m, coords)?;
    ensure(is_submodule(s.m, &n), || "listed set is not a submodule".into())?;
    Ok(n)
}

fn replay_module_failure(s: &Endos, p: PropertyId, v: &Verdict) -> Outcome {
    use PropertyId::*;
    let m = s.m;
    match p {
        CentrallyEndoAip | EndoAip | EndoApp => {
            let n = witness_submodule(s, v)?;
            if p == EndoApp {
                ensure(is_cyclic(m, &n), || "submodule is not cyclic".into())?;
            } else {
                ensure(s.fully_invariant(&n), || "submodule is not fully invariant".into())?;
            }
            let a = single_endo(s, v)?;
            let l = s.annihilator(&n);
            ensure(l.contains(&a), || {
                "endomorphism does not annihilate the submodule".into()
            })?;
            let found = l
                .iter()
                .any(|&x| s.same(s.compose(a, x), a) && (p != CentrallyEndoAip || s.commutes_with_all(x)));
            ensure(!found, || {
                "a unit for the endomorphism exists in the annihilator".into()
            })
        }
        Baer | QuasiBaer | PqBaer => {
            let n = witness_submodule(s, v)?;
            match p {
                QuasiBaer => ensure(s.fully_invariant(&n), || "submodule is not fully invariant".into())?,
                PqBaer => ensure(is_cyclic(m, &n), || "submodule is not cyclic".into())?,
                _ => {}
            }
            let l = s.annihilator(&n);
            let summand = l
                .iter()
                .any(|&e| s.is_idempotent(e) && l.iter().all(|&f| s.same(s.compose(f, e), f)));
            ensure(!summand, || "annihilator is generated by an idempotent".into())
        }
        Rickart => {
            let f = single_endo(s, v)?;
            let k = s.kernel(f);
            ensure(witness_submodule(s, v)? == k, || "listed set is not the kernel".into())?;
            let found = (0..s.len()).any(|e| s.is_idempotent(e) && s.image(e) == k);
            ensure(!found, || "kernel is the image of an idempotent".into())
        }
        Abelian => {
            let e = single_endo(s, v)?;
            let g = listed_endos(s, v, 1)?[0];
            ensure(s.is_idempotent(e), || "not an idempotent".into())?;
            ensure(!s.same(s.compose(e, g), s.compose(g, e)), || "the maps commute".into())
        }
        Reduced => {
            let f = single_endo(s, v)?;
            let g = listed_endos(s, v, 1)?[0];
            let xs = listed_elements(m, v, 3)?;
            let (mm, y, x) = (xs[0], xs[1], xs[2]);
            ensure(
                s.eval(f, mm) == 0 && y != 0 && s.eval(g, mm) == y && s.eval(f, x) == y,
                || "reduced counterexample does not hold".into(),
            )
        }
        Rigid => {
            let f = single_endo(s, v)?;
            let x = listed_elements(m, v, 1)?[0];
            let fx = s.eval(f, x);
            ensure(fx != 0 && s.eval(f, fx) == 0, || {
                "rigid counterexample does not hold".into()
            })
        }
        Symmetric => {
            let fs = listed_endos(s, v, 2)?;
            let x = listed_elements(m, v, 1)?[0];
            let (phi, psi) = (fs[0], fs[1]);
            ensure(
                s.eval(phi, s.eval(psi, x)) == 0 && s.eval(psi, s.eval(phi, x)) != 0,
                || "symmetric counterexample does not hold".into(),
            )
        }
        Semicommutative => {
            let psi = single_endo(s, v)?;
            let g = listed_endos(s, v, 1)?[0];
            let x = listed_elements(m, v, 1)?[0];
            ensure(s.eval(psi, x) == 0 && s.eval(psi, s.eval(g, x)) != 0, || {
                "semicommutative counterexample does not hold".into()
            })
        }
        Ifp => {
            let f = single_endo(s, v)?;
            let h = listed_endos(s, v, 1)?[0];
            let x = listed_elements(m, v, 1)?[0];
            ensure(s.eval(f, x) == 0 && s.eval(f, s.eval(h, x)) != 0, || {
                "ifp counterexample does not hold".into()
            })
        }
        Retractable => {
            let n = witness_submodule(s, v)?;
            ensure(n.len() > 1, || "submodule is zero".into())?;
            let found = (0..s.len()).any(|f| {
                let im = s.image(f);
                im.len() > 1 && im.is_subset(&n)
            });
            ensure(!found, || "a nonzero map into the submodule exists".into())
        }
        LocallyPqRetractable => {
            let f = single_endo(s, v)?;
            // r_M(S f S) = {x : g f h (x) = 0 for all g, h}.
            let r = ElemSet::from_iter_in(
                m.order(),
                m.elements().filter(|&x| {
                    (0..s.len()).all(|h| {
                        let y = s.eval(f, s.eval(h, x));
                        (0..s.len()).all(|g| s.eval(g, y) == 0)
                    })
                }),
            );
            ensure(witness_submodule(s, v)? == r, || "listed set is not r_M(SfS)".into())?;
            ensure(r.len() > 1, || "r_M(SfS) is zero".into())?;
            ensure(!(0..s.len()).any(|g| s.image(g) == r), || "r_M(SfS) is an image".into())
        }
        SemiProjective => {
            let f = single_endo(s, v)?;
            let g = listed_endos(s, v, 1)?[0];
            ensure(s.image(g).is_subset(&s.image(f)), || "g(M) is not inside f(M)".into())?;
            let in_fs = (0..s.len()).any(|h| s.same(s.compose(f, h), g));
            ensure(!in_fs, || "g lies in f S".into())
        }
        Semisimple => {
            let n = witness_submodule(s, v)?;
            // N is a summand iff it is the image of an idempotent.
            let found = (0..s.len()).any(|e| s.is_idempotent(e) && s.image(e) == n);
            ensure(!found, || "submodule is a direct summand".into())
        }
        PrimeModule => {
            if m.is_zero() {
                return Ok(());
            }
            let n = witness_submodule(s, v)?;
            ensure(n.len() > 1 && s.fully_invariant(&n), || {
                "not a nonzero fully invariant submodule".into()
            })?;
            let g = single_endo(s, v)?;
            ensure(s.image(g).len() > 1 && n.iter().all(|x| s.eval(g, x) == 0), || {
                "map does not witness non-primeness".into()
            })
        }
        SemiprimeModule => {
            let meet = witness_submodule(s, v)?;
            ensure(meet.len() > 1, || "intersection is zero".into())?;
            for p in naive_prime_submodules(s) {
                ensure(meet.is_subset(&p), || {
                    "a prime submodule misses part of the listed intersection".into()
                })?;
            }
            Ok(())
        }
    }
}

fn all_fully_invariant(s: &Endos) -> Vec<ElemSet> {
    let m = s.m;
    let g = m.carrier();
    // Fully invariant submodules are exactly sums of S-orbits S x.
    let orbits: Vec<ElemSet> = m
        .elements()
        .map(|x| g.span((0..s.len()).map(|f| s.eval(f, x))))
        .collect();
    let mut out: Vec<ElemSet> = vec![ElemSet::singleton(m.order(), 0)];
    let mut i = 0;
    while i < out.len() {
        for o in &orbits {
            let joined = g.span(out[i].iter().chain(o.iter()));
            if !out.contains(&joined) {
                out.push(joined);
            }
        }
        i += 1;
    }
    out
}

fn naive_prime_submodules(s: &Endos) -> Vec<ElemSet> {
    let fi = all_fully_invariant(s);
    let n_all = s.m.order();
    fi.iter()
        .filter(|n| n.len() < n_all)
        .filter(|n| {
            fi.iter()
                .filter(|np| !np.is_subset(n))
                .all(|np| (0..s.len()).all(|g| !np.iter().all(|x| n.contains(s.eval(g, x))) || s.image(g).is_subset(n)))
        })
        .cloned()
        .collect()
}

fn replay_module_certificate(s: &Endos, p: PropertyId, v: &Verdict) -> Outcome {
    use PropertyId::*;
    let m = s.m;
    let entries = v.witness.units.values().flatten();
    match p {
        CentrallyEndoAip | EndoAip | EndoApp | Baer | QuasiBaer | PqBaer => {
            for e in entries {
                let a = s.parse_item(&e.element)?;
                let u = s.parse_item(&e.unit)?;
                ensure(s.same(s.compose(a, u), a), || "unit entry fails a u = a".into())?;
                if p == CentrallyEndoAip {
                    ensure(s.commutes_with_all(u), || "unit is not central".into())?;
                }
                if matches!(p, Baer | QuasiBaer | PqBaer) {
                    ensure(s.is_idempotent(u), || "unit is not idempotent".into())?;
                }
            }
            Ok(())
        }
        Rickart => {
            for e in entries {
                let f = s.parse_item(&e.element)?;
                let id = s.parse_item(&e.unit)?;
                ensure(s.is_idempotent(id) && s.image(id) == s.kernel(f), || {
                    "kernel is not e(M)".into()
                })?;
            }
            Ok(())
        }
        Abelian => {
            for e in entries {
                let id = s.parse_item(&e.unit)?;
                ensure(s.is_idempotent(id) && s.commutes_with_all(id), || {
                    "idempotent is not central".into()
                })?;
            }
            let count = (0..s.len()).filter(|&e| s.is_idempotent(e)).count();
            ensure(count == v.witness.units.values().map(Vec::len).sum::<usize>(), || {
                "idempotents missing".into()
            })
        }
        Retractable => {
            for e in entries {
                let n = match &e.element {
                    Item::Matrix(g) => s.m.carrier().span(module_set(m, g)?.iter()),
                    Item::Coords(_) => return Err("expected submodule generators".into()),
                };
                let f = s.parse_item(&e.unit)?;
                let im = s.image(f);
                ensure(im.len() > 1 && im.is_subset(&n), || {
                    "map is zero or leaves the submodule".into()
                })?;
            }
            Ok(())
        }
        LocallyPqRetractable => {
            for e in entries {
                let psi = s.parse_item(&e.unit)?;
                ensure(s.image(psi).len() > 1, || "image is zero".into())?;
            }
            Ok(())
        }
        Semisimple => {
            let g = m.carrier();
            for e in entries {
                let (n, k) = match (&e.element, &e.unit) {
                    (Item::Matrix(a), Item::Matrix(b)) => {
                        (g.span(module_set(m, a)?.iter()), g.span(module_set(m, b)?.iter()))
                    }
                    _ => return Err("expected submodule generators".into()),
                };
                ensure(n.intersection_len(&k) == 1 && n.len() * k.len() == m.order(), || {
                    "listed complement is not a complement".into()
                })?;
            }
            Ok(())
        }
        SemiprimeModule => {
            let g = m.carrier();
            let primes = naive_prime_submodules(s);
            let mut meet = ElemSet::full(m.order());
            for e in entries {
                let n = match &e.element {
                    Item::Matrix(a) => g.span(module_set(m, a)?.iter()),
                    Item::Coords(_) => return Err("expected submodule generators".into()),
                };
                ensure(primes.contains(&n), || "listed submodule is not prime".into())?;
                meet = meet.intersection(&n);
            }
            ensure(meet.len() == 1, || "prime submodules do not meet in zero".into())
        }
        PrimeModule => {
            ensure(!m.is_zero(), || "zero module reported prime".into())?;
            ensure(
                all_fully_invariant(s)
                    .iter()
                    .filter(|n| n.len() > 1)
                    .all(|n| (1..s.len()).all(|f| s.image(f).len() == 1 || n.iter().any(|x| s.eval(f, x) != 0))),
                || "a nonzero map kills a nonzero fully invariant submodule".into(),
            )
        }
        Reduced | Rigid | Symmetric | Semicommutative | Ifp | SemiProjective => {
            // Universal statements; re-decide them by brute force.
            let fails = replay_exhaustive(s, p);
            ensure(!fails, || format!("{p} fails under exhaustive search"))
        }
    }
}

/// Brute-force decision of the elementwise properties; true when a counterexample exists.
fn replay_exhaustive(s: &Endos, p: PropertyId) -> bool {
    use PropertyId::*;
    let m = s.m;
    let n = s.len();
    match p {
        Rigid => (0..n).any(|f| {
            m.elements().any(|x| {
                let fx = s.eval(f, x);
                fx != 0 && s.eval(f, fx) == 0
            })
        }),
        Symmetric => m
            .elements()
            .any(|x| (0..n).any(|a| (0..n).any(|b| s.eval(a, s.eval(b, x)) == 0 && s.eval(b, s.eval(a, x)) != 0))),
        Semicommutative => (0..n).any(|a| {
            m.elements()
                .any(|x| s.eval(a, x) == 0 && (0..n).any(|g| s.eval(a, s.eval(g, x)) != 0))
        }),
        Ifp => (0..n).any(|f| {
            let k = s.kernel(f);
            (0..n).any(|h| k.iter().any(|x| !k.contains(s.eval(h, x))))
        }),
        Reduced => (0..n).any(|f| {
            m.elements().any(|x| {
                s.eval(f, x) == 0
                    && (0..n).any(|g| {
                        let y = s.eval(g, x);
                        y != 0 && s.image(f).contains(y)
                    })
            })
        }),
        SemiProjective => (0..n).any(|f| {
            let fs: HashSet<usize> = (0..n).map(|h| s.compose(f, h)).collect();
            (0..n).any(|g| s.images[g].is_subset(&s.images[f]) && !fs.contains(&g))
        }),
        _ => false,
    }
}

/// Checks a ring-level verdict (standard orientation) against `r`.
pub fn replay_ring(r: &FiniteRing, v: &Verdict) -> Outcome {
    ensure(v.level == Level::Ring, || "not a ring-level verdict".into())?;
    let p: RingPropertyId = v.property.parse().map_err(|e: crate::Error| e.to_string())?;
    ensure(v.holds == (v.witness.kind == WitnessKind::Certificate), || {
        "witness kind does not match the verdict".into()
    })?;
    if v.holds {
        replay_ring_certificate(r, p, v)
    } else {
        replay_ring_failure(r, p, v)
    }
}

fn ring_set(r: &FiniteRing, coords: &[Vec<u64>]) -> Result<ElemSet, String> {
    let mut s = ElemSet::empty(r.order());
    for c in coords {
        s.insert(r.element(c).map_err(|e| e.to_string())?);
    }
    Ok(s)
}

fn ring_elements(r: &FiniteRing, v: &Verdict, n: usize) -> Result<Vec<usize>, String> {
    ensure(v.witness.elements.len() >= n, || {
        format!("expected {n} listed elements")
    })?;
    v.witness
        .elements
        .iter()
        .map(|c| r.element(c).map_err(|e| e.to_string()))
        .collect()
}

fn ideal_of(r: &FiniteRing, v: &Verdict, left: bool, right: bool) -> Result<ElemSet, String> {
    let i = ring_set(r, v.witness.submodule.as_ref().ok_or("missing ideal")?)?;
    ensure(
        i.contains(0) && i.iter().all(|x| i.iter().all(|y| i.contains(r.add(x, y)))),
        || "not an additive subgroup".into(),
    )?;
    let closed = i.iter().all(|x| {
        r.elements()
            .all(|a| (!left || i.contains(r.mul(a, x))) && (!right || i.contains(r.mul(x, a))))
    });
    ensure(closed, || "not closed under the required multiplications".into())?;
    Ok(i)
}

fn is_unit(r: &FiniteRing, x: usize) -> bool {
    r.elements().any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
}

fn central(r: &FiniteRing, z: usize) -> bool {
    r.elements().all(|a| r.mul(a, z) == r.mul(z, a))
}

fn replay_ring_failure(r: &FiniteRing, p: RingPropertyId, v: &Verdict) -> Outcome {
    use RingPropertyId::*;
    match p {
        Aip | CentrallyAip | App => {
            let i = if p == App {
                ideal_of(r, v, false, true)?
            } else {
                ideal_of(r, v, true, true)?
            };
            let l: Vec<usize> = r.elements().filter(|&a| i.iter().all(|x| r.mul(a, x) == 0)).collect();
            let a = ring_elements(r, v, 1)?[0];
            ensure(l.contains(&a), || "element is not in the left annihilator".into())?;
            let found = l
                .iter()
                .any(|&x| r.mul(a, x) == a && (p != CentrallyAip || central(r, x)));
            ensure(!found, || "a unit exists in the annihilator".into())
        }
        Baer | QuasiBaer | PqBaer | RickartPp => {
            let (set, principal) = match p {
                Baer => (ideal_of(r, v, true, false)?, None),
                QuasiBaer | PqBaer => (ideal_of(r, v, true, true)?, None),
                _ => {
                    let x = ring_elements(r, v, 1)?[0];
                    (
                        ring_set(r, v.witness.submodule.as_ref().ok_or("missing annihilator")?)?,
                        Some(x),
                    )
                }
            };
            let ann: Vec<usize> = match principal {
                Some(x) => {
                    let a: Vec<usize> = r.elements().filter(|&a| r.mul(x, a) == 0).collect();
                    ensure(a.len() == set.len() && a.iter().all(|&y| set.contains(y)), || {
                        "listed set is not r(x)".into()
                    })?;
                    a
                }
                None => r.elements().filter(|&a| set.iter().all(|x| r.mul(x, a) == 0)).collect(),
            };
            let found = ann
                .iter()
                .any(|&e| r.mul(e, e) == e && ann.iter().all(|&a| r.mul(e, a) == a));
            ensure(!found, || "annihilator is e R for an idempotent e".into())
        }
        Abelian => {
            let xs = ring_elements(r, v, 2)?;
            ensure(r.mul(xs[0], xs[0]) == xs[0], || "not idempotent".into())?;
            ensure(r.mul(xs[0], xs[1]) != r.mul(xs[1], xs[0]), || "elements commute".into())
        }
        Reduced => {
            let x = ring_elements(r, v, 1)?[0];
            ensure(x != 0 && r.mul(x, x) == 0, || {
                "not a nonzero nilpotent of index 2".into()
            })
        }
        Semiprime => {
            let i = ideal_of(r, v, true, true)?;
            ensure(i.len() > 1, || "ideal is zero".into())?;
            let square_zero = i.iter().all(|x| i.iter().all(|y| r.mul(x, y) == 0));
            ensure(square_zero, || "ideal squares to nonzero".into())
        }
        Prime => {
            if r.order() == 1 {
                return Ok(());
            }
            let xs = ring_elements(r, v, 2)?;
            ensure(
                xs[0] != 0 && xs[1] != 0 && r.elements().all(|g| r.mul(r.mul(xs[0], g), xs[1]) == 0),
                || "a R b is nonzero".into(),
            )
        }
        Local => {
            if r.order() == 1 {
                return Ok(());
            }
            let xs = ring_elements(r, v, 2)?;
            ensure(
                !is_unit(r, xs[0]) && !is_unit(r, xs[1]) && is_unit(r, r.add(xs[0], xs[1])),
                || "listed elements do not break locality".into(),
            )
        }
        Domain => {
            if r.order() == 1 {
                return Ok(());
            }
            let xs = ring_elements(r, v, 2)?;
            ensure(xs[0] != 0 && xs[1] != 0 && r.mul(xs[0], xs[1]) == 0, || {
                "not zero divisors".into()
            })
        }
    }
}

fn replay_ring_certificate(r: &FiniteRing, p: RingPropertyId, v: &Verdict) -> Outcome {
    use RingPropertyId::*;
    let elem = |item: &Item| match item {
        Item::Coords(c) => r.element(c).map_err(|e| e.to_string()),
        Item::Matrix(_) => Err("expected ring coordinates".to_string()),
    };
    match p {
        Aip | CentrallyAip | App | Baer | QuasiBaer | PqBaer | RickartPp => {
            for e in v.witness.units.values().flatten() {
                let a = elem(&e.element)?;
                let u = elem(&e.unit)?;
                match p {
                    Aip | App => ensure(r.mul(a, u) == a, || "a u != a".into())?,
                    CentrallyAip => ensure(r.mul(a, u) == a && central(r, u), || {
                        "unit is not a central right unit".into()
                    })?,
                    RickartPp => {
                        let ann: Vec<usize> = r.elements().filter(|&y| r.mul(a, y) == 0).collect();
                        ensure(
                            r.mul(u, u) == u && ann.contains(&u) && ann.iter().all(|&y| r.mul(u, y) == y),
                            || "r(x) is not e R".into(),
                        )?
                    }
                    _ => ensure(r.mul(u, u) == u && r.mul(u, a) == a, || {
                        "idempotent does not fix the element".into()
                    })?,
                }
            }
            Ok(())
        }
        Abelian => {
            let all: Vec<usize> = r.elements().filter(|&e| r.mul(e, e) == e).collect();
            ensure(all.iter().all(|&e| central(r, e)), || {
                "a non-central idempotent exists".into()
            })
        }
        Reduced => ensure(!r.elements().any(|x| x != 0 && r.mul(x, x) == 0), || {
            "nilpotent found".into()
        }),
        Domain => ensure(
            r.order() > 1
                && !r
                    .elements()
                    .skip(1)
                    .any(|a| r.elements().skip(1).any(|b| r.mul(a, b) == 0)),
            || "zero divisors found".into(),
        ),
        Local => {
            let non: Vec<usize> = r.elements().filter(|&x| !is_unit(r, x)).collect();
            ensure(
                r.order() > 1 && non.iter().all(|&x| non.iter().all(|&y| !is_unit(r, r.add(x, y)))),
                || "non-units are not closed under addition".into(),
            )
        }
        Prime => ensure(
            r.order() > 1
                && r.elements().skip(1).all(|a| {
                    r.elements()
                        .skip(1)
                        .all(|b| r.elements().any(|g| r.mul(r.mul(a, g), b) != 0))
                }),
            || "a R b = 0 for some nonzero a, b".into(),
        ),
        // A nonzero ideal with zero square contains a nonzero a with a R a = 0.
        Semiprime => ensure(
            !r.elements()
                .skip(1)
                .any(|a| r.elements().all(|g| r.mul(r.mul(a, g), a) == 0)),
            || "nonzero a with a R a = 0".into(),
        ),
    }
}
