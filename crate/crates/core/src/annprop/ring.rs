use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::ElemSet;
use crate::ideal::{all_ideals, ideal_generated, product_of, IdealHandle, Side};
use crate::ring::FiniteRing;
use crate::Caps;

use super::sunital::{find_units, unit_pairs, UnitSide, Units};
use super::verdict::{Item, Level, UnitEntry, Verdict, Witness};
use super::{Orientation, RingPropertyId};

fn cached<T>(cell: &OnceLock<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

/// Lazily computed data shared by the ring-level checkers.
pub struct RingAnalysis {
    ring: Arc<FiniteRing>,
    caps: Caps,
    two_sided: OnceLock<Result<Vec<IdealHandle>>>,
    left: OnceLock<Result<Vec<IdealHandle>>>,
    right: OnceLock<Result<Vec<IdealHandle>>>,
    central: OnceLock<ElemSet>,
    idempotents: OnceLock<ElemSet>,
    units: OnceLock<ElemSet>,
    verdicts: Mutex<HashMap<(RingPropertyId, Orientation), Result<Verdict>>>,
}

#[derive(Clone, Copy)]
enum Annihilator {
    /// `{a : a X = 0}`.
    Left,
    /// `{a : X a = 0}`.
    Right,
}

impl RingAnalysis {
    pub fn new(ring: Arc<FiniteRing>, caps: Caps) -> Self {
        RingAnalysis {
            ring,
            caps,
            two_sided: OnceLock::new(),
            left: OnceLock::new(),
            right: OnceLock::new(),
            central: OnceLock::new(),
            idempotents: OnceLock::new(),
            units: OnceLock::new(),
            verdicts: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    fn within_cap(&self) -> Result<()> {
        if self.ring.order() > self.caps.ring {
            Err(Error::cap("ring", self.ring.order() as u128, self.caps.ring))
        } else {
            Ok(())
        }
    }

    pub fn ideals(&self, side: Side) -> Result<&[IdealHandle]> {
        self.within_cap()?;
        let cell = match side {
            Side::TwoSided => &self.two_sided,
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        cached(cell, || all_ideals(&self.ring, side, &self.caps)).map(Vec::as_slice)
    }

    pub fn central(&self) -> &ElemSet {
        self.central.get_or_init(|| self.ring.central_elements())
    }

    pub fn idempotents(&self) -> &ElemSet {
        self.idempotents
            .get_or_init(|| ElemSet::from_iter_in(self.ring.order(), self.ring.idempotents()))
    }

    /// `x` is a unit iff `x R = R` in a finite ring.
    pub fn units(&self) -> &ElemSet {
        self.units.get_or_init(|| {
            let r = &self.ring;
            ElemSet::from_iter_in(
                r.order(),
                r.elements()
                    .filter(|&x| r.group().span(r.generators().map(|g| r.mul(x, g))).len() == r.order()),
            )
        })
    }

    pub fn check(&self, p: RingPropertyId) -> Result<Verdict> {
        self.check_oriented(p, Orientation::Standard)
    }

    pub fn holds(&self, p: RingPropertyId) -> Result<bool> {
        self.check(p).map(|v| v.holds)
    }

    pub fn check_oriented(&self, p: RingPropertyId, o: Orientation) -> Result<Verdict> {
        if let Some(v) = self.verdicts.lock().unwrap().get(&(p, o)) {
            return v.clone();
        }
        let v = self.within_cap().and_then(|_| self.compute(p, o));
        self.verdicts.lock().unwrap().insert((p, o), v.clone());
        v
    }

    fn compute(&self, p: RingPropertyId, o: Orientation) -> Result<Verdict> {
        use RingPropertyId::*;
        let mirrored = o == Orientation::Mirrored;
        // AIP family: left annihilators with right units, or the mirror image.
        let (aip_ann, aip_unit, principal_side) = if mirrored {
            (Annihilator::Right, UnitSide::Left, Side::Left)
        } else {
            (Annihilator::Left, UnitSide::Right, Side::Right)
        };
        // Baer family: right annihilators generated by an idempotent on the left.
        let (baer_ann, baer_unit, baer_side) = if mirrored {
            (Annihilator::Left, UnitSide::Right, Side::Right)
        } else {
            (Annihilator::Right, UnitSide::Left, Side::Left)
        };
        match p {
            Aip => self.annihilator_test(p, self.ideals(Side::TwoSided)?.to_vec(), aip_ann, aip_unit, Kind::Any),
            CentrallyAip => self.annihilator_test(
                p,
                self.ideals(Side::TwoSided)?.to_vec(),
                aip_ann,
                aip_unit,
                Kind::Central,
            ),
            App => self.annihilator_test(p, self.principal(principal_side), aip_ann, aip_unit, Kind::Any),
            Baer => self.annihilator_test(
                p,
                self.ideals(baer_side)?.to_vec(),
                baer_ann,
                baer_unit,
                Kind::Idempotent,
            ),
            QuasiBaer => self.annihilator_test(
                p,
                self.ideals(Side::TwoSided)?.to_vec(),
                baer_ann,
                baer_unit,
                Kind::Idempotent,
            ),
            PqBaer => self.annihilator_test(p, self.principal(Side::TwoSided), baer_ann, baer_unit, Kind::Idempotent),
            RickartPp => self.rickart_pp(baer_ann, baer_unit),
            Abelian => self.abelian(),
            Reduced => self.reduced(),
            Semiprime => self.semiprime(),
            Prime => self.prime(),
            Local => self.local(),
            Domain => self.domain(),
        }
    }

    fn principal(&self, side: Side) -> Vec<IdealHandle> {
        let mut seen = HashSet::new();
        self.ring
            .elements()
            .map(|x| ideal_generated(&self.ring, &[x], side))
            .filter(|i| seen.insert(i.elements().clone()))
            .collect()
    }

    fn annihilator(&self, gens: &[usize], side: Annihilator) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_iter_in(
            r.order(),
            r.elements().filter(|&a| {
                gens.iter().all(|&x| match side {
                    Annihilator::Left => r.mul(a, x) == 0,
                    Annihilator::Right => r.mul(x, a) == 0,
                })
            }),
        )
    }

    fn coords(&self, set: &ElemSet) -> Vec<Vec<u64>> {
        set.iter().map(|x| self.ring.coords(x)).collect()
    }

    fn item(&self, x: usize) -> Item {
        Item::Coords(self.ring.coords(x))
    }

    fn annihilator_test(
        &self,
        p: RingPropertyId,
        family: Vec<IdealHandle>,
        ann: Annihilator,
        unit: UnitSide,
        kind: Kind,
    ) -> Result<Verdict> {
        let r = &self.ring;
        let mut w = Witness::certificate();
        let mut seen = HashSet::new();
        for (k, i) in family.iter().enumerate() {
            let a = self.annihilator(i.generators(), ann);
            if !seen.insert(a.clone()) {
                continue;
            }
            let gens = r.group().generators_of(&a);
            let units = match kind {
                Kind::Any => find_units(r, &a, &gens, |_| true, unit),
                Kind::Central => find_units(r, &a, &gens, |x| self.central().contains(x), unit),
                Kind::Idempotent => match find_units(r, &a, &gens, |x| self.idempotents().contains(x), unit) {
                    Units::PerElement(_) => Units::Fails(gens[0]),
                    u => u,
                },
            };
            match units {
                Units::Fails(x) => {
                    let mut fw = Witness::failure().with_submodule(self.coords(i.elements()));
                    fw = match kind {
                        Kind::Idempotent => fw.with_note("annihilator is not generated by an idempotent"),
                        _ => fw.with_elements(vec![r.coords(x)]),
                    };
                    return Ok(Verdict::fails(p.as_str(), Level::Ring, fw));
                }
                u => {
                    let entries = unit_pairs(&u, &gens)
                        .into_iter()
                        .map(|(a, x)| UnitEntry {
                            element: self.item(a),
                            unit: self.item(x),
                        })
                        .collect();
                    w.push_units(format!("I{k}"), entries);
                }
            }
        }
        Ok(Verdict::holds(p.as_str(), Level::Ring, w))
    }

    fn rickart_pp(&self, ann: Annihilator, unit: UnitSide) -> Result<Verdict> {
        let r = &self.ring;
        let mut w = Witness::certificate();
        let mut entries = Vec::new();
        let mut seen = HashSet::new();
        for x in r.elements() {
            let a = self.annihilator(&[x], ann);
            if !seen.insert(a.clone()) {
                continue;
            }
            let gens = r.group().generators_of(&a);
            match find_units(r, &a, &gens, |e| self.idempotents().contains(e), unit) {
                Units::Single(e) => entries.push(UnitEntry {
                    element: self.item(x),
                    unit: self.item(e),
                }),
                _ => {
                    return Ok(Verdict::fails(
                        "rickart_pp",
                        Level::Ring,
                        Witness::failure()
                            .with_submodule(self.coords(&a))
                            .with_elements(vec![r.coords(x)])
                            .with_note("annihilator of the element is not generated by an idempotent"),
                    ))
                }
            }
        }
        w.push_units("elements", entries);
        Ok(Verdict::holds("rickart_pp", Level::Ring, w))
    }

    fn abelian(&self) -> Result<Verdict> {
        let r = &self.ring;
        for e in self.idempotents().iter() {
            if let Some(x) = r.generators().find(|&x| r.mul(e, x) != r.mul(x, e)) {
                return Ok(Verdict::fails(
                    "abelian",
                    Level::Ring,
                    Witness::failure()
                        .with_elements(vec![r.coords(e), r.coords(x)])
                        .with_note("idempotent does not commute with the second element"),
                ));
            }
        }
        Ok(Verdict::holds(
            "abelian",
            Level::Ring,
            Witness::certificate().with_elements(self.idempotents().iter().map(|e| r.coords(e)).collect()),
        ))
    }

    fn reduced(&self) -> Result<Verdict> {
        let r = &self.ring;
        match r.elements().skip(1).find(|&x| r.mul(x, x) == 0) {
            Some(x) => Ok(Verdict::fails(
                "reduced",
                Level::Ring,
                Witness::failure()
                    .with_elements(vec![r.coords(x)])
                    .with_note("nonzero element squares to zero"),
            )),
            None => Ok(Verdict::holds("reduced", Level::Ring, Witness::certificate())),
        }
    }

    fn semiprime(&self) -> Result<Verdict> {
        let r = &self.ring;
        for i in self.ideals(Side::TwoSided)? {
            if !i.is_zero() && product_of(r, i, i).len() == 1 {
                return Ok(Verdict::fails(
                    "semiprime",
                    Level::Ring,
                    Witness::failure()
                        .with_submodule(self.coords(i.elements()))
                        .with_note("nonzero ideal with zero square"),
                ));
            }
        }
        Ok(Verdict::holds("semiprime", Level::Ring, Witness::certificate()))
    }

    fn prime(&self) -> Result<Verdict> {
        let r = &self.ring;
        if r.is_zero_ring() {
            return Ok(Verdict::fails(
                "prime",
                Level::Ring,
                Witness::failure().with_note("the zero ring is not prime"),
            ));
        }
        for a in r.elements().skip(1) {
            for b in r.elements().skip(1) {
                if r.generators().all(|g| r.mul(r.mul(a, g), b) == 0) {
                    return Ok(Verdict::fails(
                        "prime",
                        Level::Ring,
                        Witness::failure()
                            .with_elements(vec![r.coords(a), r.coords(b)])
                            .with_note("a R b = 0 for nonzero a, b"),
                    ));
                }
            }
        }
        Ok(Verdict::holds("prime", Level::Ring, Witness::certificate()))
    }

    fn local(&self) -> Result<Verdict> {
        let r = &self.ring;
        if r.is_zero_ring() {
            return Ok(Verdict::fails(
                "local",
                Level::Ring,
                Witness::failure().with_note("the zero ring is not local"),
            ));
        }
        let units = self.units();
        let non_units: Vec<usize> = r.elements().filter(|&x| !units.contains(x)).collect();
        for &x in &non_units {
            for &y in &non_units {
                if units.contains(r.add(x, y)) {
                    return Ok(Verdict::fails(
                        "local",
                        Level::Ring,
                        Witness::failure()
                            .with_elements(vec![r.coords(x), r.coords(y)])
                            .with_note("two non-units add up to a unit"),
                    ));
                }
            }
        }
        Ok(Verdict::holds(
            "local",
            Level::Ring,
            Witness::certificate().with_note("non-units are closed under addition"),
        ))
    }

    fn domain(&self) -> Result<Verdict> {
        let r = &self.ring;
        if r.is_zero_ring() {
            return Ok(Verdict::fails(
                "domain",
                Level::Ring,
                Witness::failure().with_note("the zero ring is not a domain"),
            ));
        }
        for a in r.elements().skip(1) {
            if let Some(b) = r.elements().skip(1).find(|&b| r.mul(a, b) == 0) {
                return Ok(Verdict::fails(
                    "domain",
                    Level::Ring,
                    Witness::failure()
                        .with_elements(vec![r.coords(a), r.coords(b)])
                        .with_note("zero divisors"),
                ));
            }
        }
        Ok(Verdict::holds("domain", Level::Ring, Witness::certificate()))
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Any,
    Central,
    Idempotent,
}

pub fn check_ring_property(r: &FiniteRing, p: RingPropertyId, caps: &Caps) -> Result<Verdict> {
    check_ring_property_oriented(r, p, Orientation::Standard, caps)
}

pub fn check_ring_property_oriented(r: &FiniteRing, p: RingPropertyId, o: Orientation, caps: &Caps) -> Result<Verdict> {
    RingAnalysis::new(Arc::new(r.clone()), *caps).check_oriented(p, o)
}
