use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::group::ElemSet;
use crate::hom::{end_ring, EndoRing};
use crate::ideal::{ideal_generated, IdealHandle, Side};
use crate::lattice::{self, complement_in, Submodule};
use crate::module::FiniteModule;
use crate::Caps;

use super::sunital::{find_units, unit_pairs, UnitSide, Units};
use super::verdict::{Item, Level, UnitEntry, Verdict, Witness};
use super::PropertyId;

fn cached<T>(cell: &OnceLock<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

/// Lazily computed data shared by the module-level checkers.
pub struct ModuleAnalysis {
    module: FiniteModule,
    caps: Caps,
    end: OnceLock<Result<EndoRing>>,
    submodules: OnceLock<Result<Vec<Submodule>>>,
    fully_invariant: OnceLock<Result<Vec<Submodule>>>,
    cyclic: OnceLock<Vec<Submodule>>,
    atoms: OnceLock<Vec<Submodule>>,
    central: OnceLock<Result<ElemSet>>,
    idempotents: OnceLock<Result<Vec<usize>>>,
    images: OnceLock<Result<Vec<ElemSet>>>,
    verdicts: Mutex<HashMap<PropertyId, Result<Verdict>>>,
}

impl ModuleAnalysis {
    pub fn new(module: FiniteModule, caps: Caps) -> Self {
        ModuleAnalysis {
            module,
            caps,
            end: OnceLock::new(),
            submodules: OnceLock::new(),
            fully_invariant: OnceLock::new(),
            cyclic: OnceLock::new(),
            atoms: OnceLock::new(),
            central: OnceLock::new(),
            idempotents: OnceLock::new(),
            images: OnceLock::new(),
            verdicts: Mutex::new(HashMap::new()),
        }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn end(&self) -> Result<&EndoRing> {
        cached(&self.end, || {
            if self.module.order() > self.caps.module {
                return Err(crate::error::Error::cap(
                    "module",
                    self.module.order() as u128,
                    self.caps.module,
                ));
            }
            end_ring(&self.module, &self.caps)
        })
    }

    pub fn submodules(&self) -> Result<&[Submodule]> {
        cached(&self.submodules, || lattice::all_submodules(&self.module, &self.caps)).map(Vec::as_slice)
    }

    pub fn fully_invariant(&self) -> Result<&[Submodule]> {
        let s = self.end()?;
        cached(&self.fully_invariant, || {
            lattice::fully_invariant_submodules(s, &self.caps)
        })
        .map(Vec::as_slice)
    }

    /// Distinct cyclic submodules, zero included.
    pub fn cyclic(&self) -> &[Submodule] {
        self.cyclic.get_or_init(|| {
            let mut seen = HashSet::new();
            self.module
                .elements()
                .map(|x| lattice::cyclic_submodule(&self.module, x))
                .filter(|c| seen.insert(c.elements().clone()))
                .collect()
        })
    }

    pub fn atoms(&self) -> &[Submodule] {
        self.atoms.get_or_init(|| lattice::atoms(&self.module))
    }

    /// Central elements of `S`.
    pub fn central(&self) -> Result<&ElemSet> {
        let s = self.end()?;
        cached(&self.central, || Ok(s.ring().central_elements()))
    }

    pub fn idempotents(&self) -> Result<&[usize]> {
        let s = self.end()?;
        cached(&self.idempotents, || Ok(s.ring().idempotents())).map(Vec::as_slice)
    }

    /// `f(M)` for every `f in S`, indexed like the ring elements of `S`.
    pub fn images(&self) -> Result<&[ElemSet]> {
        let s = self.end()?;
        let gens: Vec<usize> = (0..self.module.rank())
            .map(|i| self.module.carrier().generator(i))
            .collect();
        cached(&self.images, || {
            Ok((0..s.order()).map(|f| s.image_of(f, &gens)).collect())
        })
        .map(Vec::as_slice)
    }

    /// Memoized property check.
    pub fn check(&self, p: PropertyId) -> Result<Verdict> {
        if let Some(v) = self.verdicts.lock().unwrap().get(&p) {
            return v.clone();
        }
        let v = self.compute(p);
        self.verdicts.lock().unwrap().insert(p, v.clone());
        v
    }

    pub fn holds(&self, p: PropertyId) -> Result<bool> {
        self.check(p).map(|v| v.holds)
    }

    fn compute(&self, p: PropertyId) -> Result<Verdict> {
        use PropertyId::*;
        match p {
            CentrallyEndoAip => self.annihilator_family(p, Family::FullyInvariant, Test::CentralUnit),
            EndoAip => self.annihilator_family(p, Family::FullyInvariant, Test::RightUnit),
            EndoApp => self.annihilator_family(p, Family::Cyclic, Test::RightUnit),
            Baer => self.annihilator_family(p, Family::All, Test::Summand),
            QuasiBaer => self.annihilator_family(p, Family::FullyInvariant, Test::Summand),
            PqBaer => self.annihilator_family(p, Family::Cyclic, Test::Summand),
            Rickart => self.rickart(),
            Abelian => self.abelian(),
            Reduced => self.reduced(),
            Rigid => self.rigid(),
            Symmetric => self.symmetric(),
            Semicommutative => self.semicommutative(),
            Ifp => self.ifp(),
            Retractable => self.retractable(),
            LocallyPqRetractable => self.locally_pq_retractable(),
            SemiProjective => self.semi_projective(),
            Semisimple => self.semisimple(),
            PrimeModule => self.prime_module(),
            SemiprimeModule => self.semiprime_module(),
        }
    }

    fn coords_of(&self, set: &ElemSet) -> Vec<Vec<u64>> {
        set.iter().map(|x| self.module.coords(x)).collect()
    }

    fn mat(&self, f: usize) -> Result<Vec<Vec<u64>>> {
        Ok(self.end()?.hom(f).matrix().to_vec())
    }

    fn annihilator_family(&self, p: PropertyId, family: Family, test: Test) -> Result<Verdict> {
        let s = self.end()?;
        let members: Vec<&Submodule> = match family {
            Family::All => self.submodules()?.iter().collect(),
            Family::FullyInvariant => self.fully_invariant()?.iter().collect(),
            Family::Cyclic => self.cyclic().iter().collect(),
        };
        let sr = s.ring();
        let central = match test {
            Test::CentralUnit => Some(self.central()?),
            _ => None,
        };
        let idempotents: Option<ElemSet> = match test {
            Test::Summand => Some(ElemSet::from_iter_in(sr.order(), self.idempotents()?.iter().copied())),
            _ => None,
        };
        let mut witness = Witness::certificate();
        let mut done: HashSet<ElemSet> = HashSet::new();
        for (k, n) in members.iter().enumerate() {
            let l = annihilator_set(s, n.generators());
            if !done.insert(l.clone()) {
                continue;
            }
            let gens = sr.group().generators_of(&l);
            let units = match test {
                Test::CentralUnit => {
                    let c = central.unwrap();
                    find_units(sr, &l, &gens, |x| c.contains(x), UnitSide::Right)
                }
                Test::RightUnit => find_units(sr, &l, &gens, |_| true, UnitSide::Right),
                Test::Summand => {
                    let idem = idempotents.as_ref().unwrap();
                    match find_units(sr, &l, &gens, |x| idem.contains(x), UnitSide::Right) {
                        Units::PerElement(_) => Units::Fails(gens[0]),
                        u => u,
                    }
                }
            };
            match units {
                Units::Fails(a) => {
                    let mut w = Witness::failure().with_submodule(self.coords_of(n.elements()));
                    match test {
                        Test::Summand => {
                            w = w.with_note("no idempotent e in the annihilator with annihilator = S e");
                        }
                        _ => {
                            w = w.with_endomorphism(self.mat(a)?);
                        }
                    }
                    return Ok(Verdict::fails(p.as_str(), Level::Module, w));
                }
                u => {
                    let entries = unit_pairs(&u, &gens)
                        .into_iter()
                        .map(|(a, x)| {
                            Ok(UnitEntry {
                                element: Item::Matrix(self.mat(a)?),
                                unit: Item::Matrix(self.mat(x)?),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    witness.push_units(format!("N{k}"), entries);
                }
            }
        }
        Ok(Verdict::holds(p.as_str(), Level::Module, witness))
    }

    fn rickart(&self) -> Result<Verdict> {
        let s = self.end()?;
        let images = self.images()?;
        let by_image: HashMap<&ElemSet, usize> = self.idempotents()?.iter().map(|&e| (&images[e], e)).collect();
        let mut w = Witness::certificate();
        let mut entries = Vec::new();
        let mut seen = HashSet::new();
        for f in 0..s.order() {
            let k = s.kernel_of(f);
            if !seen.insert(k.clone()) {
                continue;
            }
            match by_image.get(&k) {
                Some(&e) => entries.push(UnitEntry {
                    element: Item::Matrix(self.mat(f)?),
                    unit: Item::Matrix(self.mat(e)?),
                }),
                None => {
                    return Ok(Verdict::fails(
                        "rickart",
                        Level::Module,
                        Witness::failure()
                            .with_submodule(self.coords_of(&k))
                            .with_endomorphism(self.mat(f)?)
                            .with_note("kernel is not the image of an idempotent"),
                    ))
                }
            }
        }
        w.push_units("kernels", entries);
        Ok(Verdict::holds("rickart", Level::Module, w))
    }

    fn abelian(&self) -> Result<Verdict> {
        let s = self.end()?;
        let sr = s.ring();
        let mut entries = Vec::new();
        for &e in self.idempotents()? {
            if let Some(g) = sr.generators().find(|&g| sr.mul(e, g) != sr.mul(g, e)) {
                return Ok(Verdict::fails(
                    "abelian",
                    Level::Module,
                    Witness::failure()
                        .with_endomorphism(self.mat(e)?)
                        .with_endomorphisms(vec![self.mat(g)?])
                        .with_note("idempotent does not commute with the listed endomorphism"),
                ));
            }
            entries.push(UnitEntry {
                element: Item::Matrix(self.mat(e)?),
                unit: Item::Matrix(self.mat(e)?),
            });
        }
        let mut w = Witness::certificate().with_note("every idempotent of S is central");
        w.push_units("idempotents", entries);
        Ok(Verdict::holds("abelian", Level::Module, w))
    }

    /// `S m` for every `m`.
    fn orbits(&self, s: &EndoRing) -> Vec<ElemSet> {
        let g = self.module.carrier();
        self.module
            .elements()
            .map(|m| g.span(s.generators().map(|f| s.eval(f, m))))
            .collect()
    }

    fn reduced(&self) -> Result<Verdict> {
        let s = self.end()?;
        let images = self.images()?;
        let orbits = self.orbits(s);
        for f in 0..s.order() {
            for m in self.module.elements() {
                if s.eval(f, m) != 0 || orbits[m].intersection_len(&images[f]) == 1 {
                    continue;
                }
                let y = orbits[m].intersection(&images[f]).iter().find(|&y| y != 0).unwrap_or(0);
                let g = (0..s.order()).find(|&g| s.eval(g, m) == y).unwrap_or(0);
                let x = self.module.elements().find(|&x| s.eval(f, x) == y).unwrap_or(0);
                return Ok(Verdict::fails(
                    "reduced",
                    Level::Module,
                    Witness::failure()
                        .with_endomorphism(self.mat(f)?)
                        .with_endomorphisms(vec![self.mat(g)?])
                        .with_elements(vec![
                            self.module.coords(m),
                            self.module.coords(y),
                            self.module.coords(x),
                        ])
                        .with_note("f(m) = 0 but y = g(m) = f(x) is nonzero"),
                ));
            }
        }
        Ok(Verdict::holds(
            "reduced",
            Level::Module,
            Witness::certificate().with_note("exhaustive over S x M"),
        ))
    }

    fn rigid(&self) -> Result<Verdict> {
        let s = self.end()?;
        for f in 0..s.order() {
            for m in self.module.elements() {
                let fm = s.eval(f, m);
                if fm != 0 && s.eval(f, fm) == 0 {
                    return Ok(Verdict::fails(
                        "rigid",
                        Level::Module,
                        Witness::failure()
                            .with_endomorphism(self.mat(f)?)
                            .with_elements(vec![self.module.coords(m)])
                            .with_note("f(f(m)) = 0 but f(m) != 0"),
                    ));
                }
            }
        }
        Ok(Verdict::holds(
            "rigid",
            Level::Module,
            Witness::certificate().with_note("exhaustive over S x M"),
        ))
    }

    fn symmetric(&self) -> Result<Verdict> {
        let s = self.end()?;
        let n = s.order();
        for m in self.module.elements().skip(1) {
            let at: Vec<usize> = (0..n).map(|f| s.eval(f, m)).collect();
            for phi in 0..n {
                for psi in 0..n {
                    if s.eval(phi, at[psi]) == 0 && s.eval(psi, at[phi]) != 0 {
                        return Ok(Verdict::fails(
                            "symmetric",
                            Level::Module,
                            Witness::failure()
                                .with_endomorphisms(vec![self.mat(phi)?, self.mat(psi)?])
                                .with_elements(vec![self.module.coords(m)])
                                .with_note("phi(psi(m)) = 0 but psi(phi(m)) != 0"),
                        ));
                    }
                }
            }
        }
        Ok(Verdict::holds(
            "symmetric",
            Level::Module,
            Witness::certificate().with_note("exhaustive over S x S x M"),
        ))
    }

    fn semicommutative(&self) -> Result<Verdict> {
        let s = self.end()?;
        let gens: Vec<usize> = s.generators().collect();
        for psi in 0..s.order() {
            for m in self.module.elements() {
                if s.eval(psi, m) != 0 {
                    continue;
                }
                if let Some(&g) = gens.iter().find(|&&g| s.eval(psi, s.eval(g, m)) != 0) {
                    return Ok(Verdict::fails(
                        "semicommutative",
                        Level::Module,
                        Witness::failure()
                            .with_endomorphism(self.mat(psi)?)
                            .with_endomorphisms(vec![self.mat(g)?])
                            .with_elements(vec![self.module.coords(m)])
                            .with_note("psi(m) = 0 but psi(g(m)) != 0"),
                    ));
                }
            }
        }
        Ok(Verdict::holds(
            "semicommutative",
            Level::Module,
            Witness::certificate().with_note("exhaustive over S x M"),
        ))
    }

    fn ifp(&self) -> Result<Verdict> {
        let s = self.end()?;
        let g = self.module.carrier();
        let mut seen = HashSet::new();
        for f in 0..s.order() {
            let k = s.kernel_of(f);
            if !seen.insert(k.clone()) {
                continue;
            }
            let kgens = g.generators_of(&k);
            for h in s.generators() {
                if let Some(&x) = kgens.iter().find(|&&x| !k.contains(s.eval(h, x))) {
                    return Ok(Verdict::fails(
                        "ifp",
                        Level::Module,
                        Witness::failure()
                            .with_submodule(self.coords_of(&k))
                            .with_endomorphism(self.mat(f)?)
                            .with_endomorphisms(vec![self.mat(h)?])
                            .with_elements(vec![self.module.coords(x)])
                            .with_note(
                                "the kernel of the endomorphism is moved out of itself by the listed endomorphism",
                            ),
                    ));
                }
            }
        }
        Ok(Verdict::holds(
            "ifp",
            Level::Module,
            Witness::certificate().with_note("every kernel is fully invariant"),
        ))
    }

    fn retractable(&self) -> Result<Verdict> {
        let s = self.end()?;
        let images = self.images()?;
        let mut entries = Vec::new();
        for a in self.atoms() {
            match (1..s.order()).find(|&f| images[f].is_subset(a.elements())) {
                Some(f) => entries.push(UnitEntry {
                    element: Item::Matrix(a.generators().iter().map(|&x| self.module.coords(x)).collect()),
                    unit: Item::Matrix(self.mat(f)?),
                }),
                None => {
                    return Ok(Verdict::fails(
                        "retractable",
                        Level::Module,
                        Witness::failure()
                            .with_submodule(self.coords_of(a.elements()))
                            .with_note("Hom(M, N) = 0 for this nonzero submodule"),
                    ))
                }
            }
        }
        let mut w = Witness::certificate().with_note("every minimal submodule receives a nonzero map");
        w.push_units("atoms", entries);
        Ok(Verdict::holds("retractable", Level::Module, w))
    }

    fn locally_pq_retractable(&self) -> Result<Verdict> {
        let s = self.end()?;
        let sr = s.ring();
        let images = self.images()?;
        let by_image: HashMap<&ElemSet, usize> = (0..s.order()).rev().map(|f| (&images[f], f)).collect();
        let mut seen = HashSet::new();
        let mut entries = Vec::new();
        for f in 0..s.order() {
            let ideal = ideal_generated(sr, &[f], Side::TwoSided);
            if !seen.insert(ideal.elements().clone()) {
                continue;
            }
            let r = right_annihilator_set(s, ideal.generators());
            if r.len() == 1 {
                continue;
            }
            match by_image.get(&r) {
                Some(&psi) => entries.push(UnitEntry {
                    element: Item::Matrix(self.mat(f)?),
                    unit: Item::Matrix(self.mat(psi)?),
                }),
                None => {
                    return Ok(Verdict::fails(
                        "locally_pq_retractable",
                        Level::Module,
                        Witness::failure()
                            .with_submodule(self.coords_of(&r))
                            .with_endomorphism(self.mat(f)?)
                            .with_note("r_M(S f S) is nonzero and is not the image of an endomorphism"),
                    ))
                }
            }
        }
        let mut w = Witness::certificate();
        w.push_units("principal_ideals", entries);
        Ok(Verdict::holds("locally_pq_retractable", Level::Module, w))
    }

    fn semi_projective(&self) -> Result<Verdict> {
        let s = self.end()?;
        let sr = s.ring();
        let images = self.images()?;
        for f in 0..s.order() {
            let fs = sr.group().span(sr.generators().map(|g| sr.mul(f, g)));
            if let Some(g) = (0..s.order()).find(|&g| !fs.contains(g) && images[g].is_subset(&images[f])) {
                return Ok(Verdict::fails(
                    "semi_projective",
                    Level::Module,
                    Witness::failure()
                        .with_endomorphism(self.mat(f)?)
                        .with_endomorphisms(vec![self.mat(g)?])
                        .with_note("g(M) lies in f(M) but g is not in f S"),
                ));
            }
        }
        Ok(Verdict::holds(
            "semi_projective",
            Level::Module,
            Witness::certificate().with_note("Hom(M, fM) = f S for every f"),
        ))
    }

    fn semisimple(&self) -> Result<Verdict> {
        let subs = self.submodules()?;
        let mut entries = Vec::new();
        for n in subs {
            match complement_in(&self.module, subs, n) {
                Some(k) => entries.push(UnitEntry {
                    element: Item::Matrix(n.generators().iter().map(|&x| self.module.coords(x)).collect()),
                    unit: Item::Matrix(k.generators().iter().map(|&x| self.module.coords(x)).collect()),
                }),
                None => {
                    return Ok(Verdict::fails(
                        "semisimple",
                        Level::Module,
                        Witness::failure()
                            .with_submodule(self.coords_of(n.elements()))
                            .with_note("submodule has no complement"),
                    ))
                }
            }
        }
        let mut w = Witness::certificate();
        w.push_units("complements", entries);
        Ok(Verdict::holds("semisimple", Level::Module, w))
    }

    /// `None` if `n` is prime in `M`, else a fully invariant `N'` and an
    /// endomorphism `g` with `g(N') ⊆ N`, `N' ⊄ N` and `g(M) ⊄ N`.
    ///
    /// For fully invariant `N`, `N'` the endomorphisms with `g(N') ⊆ N` form the
    /// largest ideal `T` with `T(N') ⊆ N`, so testing single endomorphisms
    /// covers every ideal.
    pub fn prime_obstruction(&self, n: &Submodule) -> Result<Option<(Submodule, usize)>> {
        let s = self.end()?;
        let images = self.images()?;
        for np in self.fully_invariant()? {
            if np.is_subset(n) {
                continue;
            }
            for g in 0..s.order() {
                if images[g].is_subset(n.elements()) {
                    continue;
                }
                if np.generators().iter().all(|&x| n.contains(s.eval(g, x))) {
                    return Ok(Some((np.clone(), g)));
                }
            }
        }
        Ok(None)
    }

    fn prime_module(&self) -> Result<Verdict> {
        if self.module.is_zero() {
            return Ok(Verdict::fails(
                "prime_module",
                Level::Module,
                Witness::failure().with_note("the zero module is not prime by convention"),
            ));
        }
        let zero = Submodule::zero(&self.module);
        match self.prime_obstruction(&zero)? {
            None => Ok(Verdict::holds(
                "prime_module",
                Level::Module,
                Witness::certificate().with_note("l_S(N') = 0 for every nonzero fully invariant N'"),
            )),
            Some((np, g)) => Ok(Verdict::fails(
                "prime_module",
                Level::Module,
                Witness::failure()
                    .with_submodule(self.coords_of(np.elements()))
                    .with_endomorphism(self.mat(g)?)
                    .with_note("nonzero endomorphism kills a nonzero fully invariant submodule"),
            )),
        }
    }

    fn semiprime_module(&self) -> Result<Verdict> {
        let primes = prime_submodules(self)?;
        let mut meet = ElemSet::full(self.module.order());
        for p in &primes {
            meet = meet.intersection(p.elements());
        }
        if meet.len() == 1 {
            let mut w =
                Witness::certificate().with_note(format!("the {} prime submodules intersect in zero", primes.len()));
            w.push_units(
                "prime_submodules",
                primes
                    .iter()
                    .map(|p| {
                        let gens = Item::Matrix(p.generators().iter().map(|&x| self.module.coords(x)).collect());
                        UnitEntry {
                            element: gens.clone(),
                            unit: gens,
                        }
                    })
                    .collect(),
            );
            Ok(Verdict::holds("semiprime_module", Level::Module, w))
        } else {
            Ok(Verdict::fails(
                "semiprime_module",
                Level::Module,
                Witness::failure()
                    .with_submodule(self.coords_of(&meet))
                    .with_note("intersection of all prime submodules is nonzero"),
            ))
        }
    }
}

#[derive(Clone, Copy)]
enum Family {
    All,
    FullyInvariant,
    Cyclic,
}

#[derive(Clone, Copy)]
enum Test {
    CentralUnit,
    RightUnit,
    Summand,
}

/// `{f in S : f(x) = 0 for all x in gens}`.
fn annihilator_set(s: &EndoRing, gens: &[usize]) -> ElemSet {
    ElemSet::from_iter_in(
        s.order(),
        (0..s.order()).filter(|&f| gens.iter().all(|&x| s.eval(f, x) == 0)),
    )
}

/// `{m in M : f(m) = 0 for all f in gens}`.
fn right_annihilator_set(s: &EndoRing, gens: &[usize]) -> ElemSet {
    let m = s.module();
    ElemSet::from_iter_in(
        m.order(),
        m.elements().filter(|&x| gens.iter().all(|&f| s.eval(f, x) == 0)),
    )
}

/// `l_S(N)`: two-sided when `N` is fully invariant, a left ideal otherwise.
pub fn left_annihilator(s: &EndoRing, n: &Submodule) -> Result<IdealHandle> {
    let set = annihilator_set(s, n.generators());
    let side = if lattice::is_fully_invariant(s, n) {
        Side::TwoSided
    } else {
        Side::Left
    };
    IdealHandle::from_elements(s.ring(), set, side)
}

/// `r_M(I)`.
pub fn right_annihilator_in_module(s: &EndoRing, i: &IdealHandle) -> Submodule {
    let set = right_annihilator_set(s, i.generators());
    Submodule::from_set(s.module().carrier(), set)
}

/// Proper fully invariant submodules that are prime in `M`.
pub fn prime_submodules(a: &ModuleAnalysis) -> Result<Vec<Submodule>> {
    let mut out = Vec::new();
    for n in a.fully_invariant()? {
        if n.len() == a.module().order() {
            continue;
        }
        if a.prime_obstruction(n)?.is_none() {
            out.push(n.clone());
        }
    }
    Ok(out)
}

pub fn check_module_property(m: &FiniteModule, p: PropertyId, caps: &Caps) -> Result<Verdict> {
    ModuleAnalysis::new(m.clone(), *caps).check(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{free_module, regular_module, z_module, zero_module};
    use crate::ring::{make_cyclic_ring, matrix_ring, matrix_unit, triangular_ring};
    use std::sync::Arc;

    fn caps() -> Caps {
        Caps::default()
    }

    fn holds(m: &FiniteModule, p: PropertyId) -> bool {
        check_module_property(m, p, &caps()).unwrap().holds
    }

    fn t2z2() -> (crate::ring::FiniteRing, Arc<crate::ring::FiniteRing>) {
        let z2 = make_cyclic_ring(2).unwrap();
        let t2 = Arc::new(triangular_ring(&z2, 2, &caps()).unwrap());
        (z2, t2)
    }

    #[test]
    fn annihilators_in_z4() {
        let z4 = Arc::new(make_cyclic_ring(4).unwrap());
        let m = regular_module(&z4);
        let s = end_ring(&m, &caps()).unwrap();
        let n = lattice::cyclic_submodule(&m, 2);
        let l = left_annihilator(&s, &n).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.side(), Side::TwoSided);
        let images: Vec<usize> = l.elements().iter().map(|f| s.eval(f, 1)).collect();
        assert_eq!(images, vec![0, 2]);
        let r = right_annihilator_in_module(&s, &l);
        assert_eq!(r.elements().to_vec(), vec![0, 2]);
        assert_eq!(left_annihilator(&s, &Submodule::zero(&m)).unwrap().len(), 4);
        assert_eq!(left_annihilator(&s, &Submodule::whole(&m)).unwrap().len(), 1);
        let zero_ideal = ideal_generated(s.ring(), &[], Side::TwoSided);
        assert_eq!(right_annihilator_in_module(&s, &zero_ideal).len(), 4);
    }

    #[test]
    fn centrally_endo_aip_examples() {
        assert!(holds(&z_module(&[6]).unwrap(), PropertyId::CentrallyEndoAip));
        assert!(holds(&z_module(&[2, 2]).unwrap(), PropertyId::CentrallyEndoAip));
        let v = check_module_property(&z_module(&[4]).unwrap(), PropertyId::CentrallyEndoAip, &caps()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.submodule, Some(vec![vec![0], vec![2]]));
        let (_, t2) = t2z2();
        let r = regular_module(&t2);
        assert!(holds(&r, PropertyId::EndoAip));
        assert!(!holds(&r, PropertyId::CentrallyEndoAip));
    }

    #[test]
    fn triangular_ring_lacks_ifp() {
        let (z2, t2) = t2z2();
        let r = regular_module(&t2);
        let v = check_module_property(&r, PropertyId::Ifp, &caps()).unwrap();
        assert!(!v.holds);
        // The kernel of left multiplication by e_11 is not fully invariant.
        let s = end_ring(&r, &caps()).unwrap();
        let e11 = matrix_unit(&z2, &t2, 2, true, 0, 0).unwrap();
        let f = (0..s.order())
            .find(|&f| t2.elements().all(|x| s.eval(f, x) == t2.mul(e11, x)))
            .unwrap();
        let k = Submodule::from_set(r.carrier(), s.kernel_of(f));
        assert!(!lattice::is_fully_invariant(&s, &k));
    }

    #[test]
    fn z4_separates_retractable_from_endo_aip() {
        let m = z_module(&[4]).unwrap();
        assert!(holds(&m, PropertyId::Retractable));
        let v = check_module_property(&m, PropertyId::EndoAip, &caps()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.submodule, Some(vec![vec![0], vec![2]]));
        assert!(!holds(&m, PropertyId::Rickart));
        assert!(!holds(&m, PropertyId::Semisimple));
        assert!(holds(&m, PropertyId::Abelian));
        assert!(!holds(&m, PropertyId::Reduced));
        assert!(!holds(&m, PropertyId::Rigid));
    }

    #[test]
    fn semisimple_modules() {
        for orders in [&[2u64, 2][..], &[6], &[2, 3], &[3, 3]] {
            let m = z_module(orders).unwrap();
            assert!(holds(&m, PropertyId::Semisimple), "{orders:?}");
            assert!(holds(&m, PropertyId::Rickart), "{orders:?}");
            assert!(holds(&m, PropertyId::Baer), "{orders:?}");
            assert!(holds(&m, PropertyId::SemiprimeModule), "{orders:?}");
        }
        assert!(holds(&z_module(&[2, 2]).unwrap(), PropertyId::PrimeModule));
        assert!(!holds(&z_module(&[6]).unwrap(), PropertyId::PrimeModule));
        assert!(!holds(&z_module(&[2, 2]).unwrap(), PropertyId::Abelian));
    }

    #[test]
    fn zero_module_conventions() {
        let z2 = Arc::new(make_cyclic_ring(2).unwrap());
        let m = zero_module(&z2);
        for &p in PropertyId::ALL {
            let expected = p != PropertyId::PrimeModule;
            assert_eq!(holds(&m, p), expected, "{p}");
        }
    }

    #[test]
    fn regular_module_of_matrix_ring() {
        let z2 = make_cyclic_ring(2).unwrap();
        let m2 = Arc::new(matrix_ring(&z2, 2, &caps()).unwrap());
        let r = regular_module(&m2);
        assert!(holds(&r, PropertyId::CentrallyEndoAip));
        assert!(!holds(&r, PropertyId::Abelian));
        assert!(holds(&r, PropertyId::Baer));
        let f = free_module(&Arc::new(z2), 2, &caps()).unwrap();
        assert!(holds(&f, PropertyId::CentrallyEndoAip));
    }
}
