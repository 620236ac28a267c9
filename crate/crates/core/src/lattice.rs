//! Submodule lattices: enumeration, fully invariant submodules, complements,
//! essentiality and uniform dimension.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteAbelianGroup};
use crate::hom::EndoRing;
use crate::module::{regular_module, FiniteModule};
use crate::ring::FiniteRing;
use crate::smith;
use crate::Caps;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Submodule {
    #[serde(rename = "elements", serialize_with = "ser_set")]
    set: ElemSet,
    #[serde(skip)]
    gens: Vec<usize>,
}

fn ser_set<S: serde::Serializer>(set: &ElemSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(set.iter())
}

impl Submodule {
    /// Wraps an additive subgroup; closure under the ring action is the caller's
    /// responsibility (see [`Submodule::checked`]).
    pub fn from_set(g: &FiniteAbelianGroup, set: ElemSet) -> Self {
        let gens = g.generators_of(&set);
        Submodule { set, gens }
    }

    pub fn checked(m: &FiniteModule, set: ElemSet) -> Result<Self> {
        let s = Submodule::from_set(m.carrier(), set);
        if !s.set.contains(0)
            || m.carrier().span(s.gens.iter().copied()) != s.set
            || !s
                .gens
                .iter()
                .all(|&x| m.ring().generators().all(|k| s.set.contains(m.scalar_act(x, k))))
        {
            return Err(Error::InvalidStructure("subset is not a submodule".into()));
        }
        Ok(s)
    }

    pub fn zero(m: &FiniteModule) -> Self {
        Submodule {
            set: ElemSet::singleton(m.order(), 0),
            gens: Vec::new(),
        }
    }

    pub fn whole(m: &FiniteModule) -> Self {
        Submodule::from_set(m.carrier(), ElemSet::full(m.order()))
    }

    pub fn elements(&self) -> &ElemSet {
        &self.set
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }
}

fn sort_canonical(v: &mut [Submodule]) {
    v.sort_by_cached_key(|a| (a.len(), a.set.to_vec()));
}

/// Submodule generated by `gens`: the additive span of all `x g_k`.
pub fn submodule_generated(m: &FiniteModule, gens: &[usize]) -> Submodule {
    let r = m.ring();
    let prods: Vec<usize> = gens
        .iter()
        .flat_map(|&x| r.generators().map(move |k| m.scalar_act(x, k)))
        .collect();
    Submodule::from_set(m.carrier(), m.carrier().span(prods))
}

pub fn cyclic_submodule(m: &FiniteModule, x: usize) -> Submodule {
    submodule_generated(m, &[x])
}

pub fn join(m: &FiniteModule, a: &Submodule, b: &Submodule) -> Submodule {
    Submodule::from_set(m.carrier(), m.carrier().span_with(&a.set, b.gens.iter().copied()))
}

pub fn meet(m: &FiniteModule, a: &Submodule, b: &Submodule) -> Submodule {
    Submodule::from_set(m.carrier(), a.set.intersection(&b.set))
}

fn distinct_cyclic(m: &FiniteModule) -> Vec<Submodule> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in m.elements().skip(1) {
        let c = cyclic_submodule(m, x);
        if seen.insert(c.set.clone()) {
            out.push(c);
        }
    }
    out
}

fn join_closure(m: &FiniteModule, atoms: &[Submodule], caps: &Caps) -> Result<Vec<Submodule>> {
    let zero = Submodule::zero(m);
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(zero.set.clone());
    let mut out = vec![zero];
    let mut k = 0;
    while k < out.len() {
        for a in atoms {
            if a.set.is_subset(&out[k].set) {
                continue;
            }
            let j = join(m, &out[k], a);
            if seen.insert(j.set.clone()) {
                out.push(j);
                if out.len() > caps.lattice {
                    return Err(Error::cap("submodule lattice", out.len() as u128, caps.lattice));
                }
            }
        }
        k += 1;
    }
    sort_canonical(&mut out);
    Ok(out)
}

fn module_cap(m: &FiniteModule, caps: &Caps) -> Result<()> {
    if m.order() > caps.module {
        Err(Error::cap("module", m.order() as u128, caps.module))
    } else {
        Ok(())
    }
}

/// Every submodule, as the join-closure of the cyclic ones, in canonical order.
pub fn all_submodules(m: &FiniteModule, caps: &Caps) -> Result<Vec<Submodule>> {
    module_cap(m, caps)?;
    join_closure(m, &distinct_cyclic(m), caps)
}

/// Minimal nonzero submodules. Every simple submodule is cyclic.
pub fn atoms(m: &FiniteModule) -> Vec<Submodule> {
    let cyc = distinct_cyclic(m);
    let mut out: Vec<Submodule> = cyc
        .iter()
        .filter(|c| !cyc.iter().any(|d| d.len() < c.len() && d.set.is_subset(&c.set)))
        .cloned()
        .collect();
    sort_canonical(&mut out);
    out
}

/// `S x R`: the smallest fully invariant submodule containing `x`.
pub fn fully_invariant_closure(s: &EndoRing, x: usize) -> Submodule {
    let m = s.module();
    let r = m.ring();
    let mut imgs = Vec::new();
    for k in r.generators() {
        let xk = m.scalar_act(x, k);
        imgs.extend(s.generators().map(|f| s.eval(f, xk)));
    }
    Submodule::from_set(m.carrier(), m.carrier().span(imgs))
}

pub fn fully_invariant_submodules(s: &EndoRing, caps: &Caps) -> Result<Vec<Submodule>> {
    let m = s.module();
    module_cap(m, caps)?;
    let mut seen = HashSet::new();
    let mut closures = Vec::new();
    for x in m.elements().skip(1) {
        let c = fully_invariant_closure(s, x);
        if seen.insert(c.set.clone()) {
            closures.push(c);
        }
    }
    join_closure(m, &closures, caps)
}

pub fn is_fully_invariant(s: &EndoRing, n: &Submodule) -> bool {
    s.generators()
        .all(|f| n.gens.iter().all(|&x| n.set.contains(s.eval(f, x))))
}

/// A complement `K` with `N + K = M` and `N ∩ K = 0`, searched in `lattice`.
pub fn complement_in<'a>(m: &FiniteModule, lattice: &'a [Submodule], n: &Submodule) -> Option<&'a Submodule> {
    lattice
        .iter()
        .find(|k| k.len() * n.len() == m.order() && k.set.intersection_len(&n.set) == 1)
}

pub fn is_direct_summand(m: &FiniteModule, n: &Submodule, caps: &Caps) -> Result<Option<Submodule>> {
    if n.len() == m.order() {
        return Ok(Some(Submodule::zero(m)));
    }
    if n.is_zero() {
        return Ok(Some(Submodule::whole(m)));
    }
    let lattice = all_submodules(m, caps)?;
    Ok(complement_in(m, &lattice, n).cloned())
}

/// `N` is essential iff it meets every nonzero submodule, iff it contains every atom.
pub fn is_essential(m: &FiniteModule, n: &Submodule) -> bool {
    if m.is_zero() {
        return true;
    }
    atoms(m).iter().all(|a| a.set.is_subset(&n.set))
}

/// Size of a maximal independent family of nonzero submodules.
///
/// Independence is a matroid condition on the simple submodules, so a greedy
/// pass over the atoms reaches the socle length.
pub fn uniform_dimension(m: &FiniteModule, caps: &Caps) -> Result<usize> {
    module_cap(m, caps)?;
    let mut sum = Submodule::zero(m);
    let mut count = 0;
    for a in atoms(m) {
        if a.set.intersection_len(&sum.set) == 1 {
            sum = join(m, &sum, &a);
            count += 1;
        }
    }
    Ok(count)
}

pub fn ring_right_uniform_dimension(r: &std::sync::Arc<FiniteRing>, caps: &Caps) -> Result<usize> {
    uniform_dimension(&regular_module(r), caps)
}

/// A submodule presented as a module in its own right, with the embedding
/// into the parent (`embedding[i]` is the parent index of element `i`).
pub struct SubmoduleModule {
    pub module: FiniteModule,
    pub embedding: Vec<usize>,
}

pub fn submodule_as_module(m: &FiniteModule, n: &Submodule) -> Result<SubmoduleModule> {
    let g = m.carrier();
    let gens: Vec<Vec<i64>> = n
        .gens
        .iter()
        .map(|&x| g.coords(x).into_iter().map(|c| c as i64).collect())
        .collect();
    let dec = smith::subgroup_decomposition(g.orders(), &gens);
    let orders: Vec<u64> = dec.iter().map(|d| d.1).collect();
    let basis: Vec<usize> = dec.iter().map(|d| g.index_signed(&d.0)).collect();
    let carrier = FiniteAbelianGroup::new(orders)?;
    let mut embedding = vec![0usize; carrier.order()];
    for (i, slot) in embedding.iter_mut().enumerate() {
        let c = carrier.coords(i);
        *slot = c
            .iter()
            .zip(&basis)
            .fold(0, |acc, (&k, &b)| g.add(acc, g.scale(b, k as i64)));
    }
    let back: HashMap<usize, usize> = embedding.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    if back.len() != n.len() {
        return Err(Error::InvalidStructure("submodule decomposition mismatch".into()));
    }
    let r = m.ring();
    let mut action = vec![vec![0usize; r.rank()]; carrier.rank()];
    for (t, &b) in basis.iter().enumerate() {
        for k in 0..r.rank() {
            let y = m.scalar_act(b, r.generator(k));
            action[t][k] = *back
                .get(&y)
                .ok_or_else(|| Error::InvalidStructure("subset is not closed under the action".into()))?;
        }
    }
    let module = FiniteModule::from_indices(carrier, r.clone(), action);
    Ok(SubmoduleModule { module, embedding })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::end_ring;
    use crate::module::{direct_sum, z_module, zero_module};
    use crate::ring::{make_cyclic_ring, matrix_ring, triangular_ring};
    use std::sync::Arc;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn cyclic_submodules() {
        let z4 = Arc::new(make_cyclic_ring(4).unwrap());
        let r = regular_module(&z4);
        assert_eq!(cyclic_submodule(&r, 2).elements().to_vec(), vec![0, 2]);
        assert!(cyclic_submodule(&r, 0).is_zero());
        let m = z_module(&[2, 4]).unwrap();
        assert_eq!(cyclic_submodule(&m, m.element(&[1, 0]).unwrap()).len(), 2);
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(all_submodules(&z_module(&[4]).unwrap(), &caps()).unwrap().len(), 3);
        assert_eq!(all_submodules(&z_module(&[2, 2]).unwrap(), &caps()).unwrap().len(), 5);
        let z2 = Arc::new(make_cyclic_ring(2).unwrap());
        assert_eq!(all_submodules(&zero_module(&z2), &caps()).unwrap().len(), 1);
    }

    #[test]
    fn fully_invariant() {
        let m = z_module(&[2, 2]).unwrap();
        let s = end_ring(&m, &caps()).unwrap();
        let fi = fully_invariant_submodules(&s, &caps()).unwrap();
        assert_eq!(fi.len(), 2);
        let line = Submodule::from_set(m.carrier(), ElemSet::from_iter_in(4, [0, 1]));
        assert!(!is_fully_invariant(&s, &line));
        let m4 = z_module(&[4]).unwrap();
        let s4 = end_ring(&m4, &caps()).unwrap();
        assert_eq!(fully_invariant_submodules(&s4, &caps()).unwrap().len(), 3);
        let z2 = make_cyclic_ring(2).unwrap();
        let t2 = Arc::new(triangular_ring(&z2, 2, &caps()).unwrap());
        let r = regular_module(&t2);
        let st = end_ring(&r, &caps()).unwrap();
        let fi = fully_invariant_submodules(&st, &caps()).unwrap();
        let e12 = crate::ring::matrix_unit(&z2, &t2, 2, true, 0, 1).unwrap();
        assert!(fi.iter().any(|n| n.elements().to_vec() == {
            let mut v = vec![0, e12];
            v.sort();
            v
        }));
    }

    #[test]
    fn summands_and_essential() {
        let m4 = z_module(&[4]).unwrap();
        let half = cyclic_submodule(&m4, 2);
        assert!(is_direct_summand(&m4, &half, &caps()).unwrap().is_none());
        assert!(is_essential(&m4, &half));
        assert!(!is_essential(&m4, &Submodule::zero(&m4)));
        let m = z_module(&[2, 2]).unwrap();
        let line = cyclic_submodule(&m, 1);
        let k = is_direct_summand(&m, &line, &caps()).unwrap().unwrap();
        assert_eq!(k.len() * line.len(), 4);
        assert!(is_direct_summand(&m, &Submodule::whole(&m), &caps())
            .unwrap()
            .unwrap()
            .is_zero());
    }

    #[test]
    fn uniform_dimensions() {
        let z2 = Arc::new(make_cyclic_ring(2).unwrap());
        assert_eq!(uniform_dimension(&zero_module(&z2), &caps()).unwrap(), 0);
        assert_eq!(uniform_dimension(&z_module(&[4]).unwrap(), &caps()).unwrap(), 1);
        assert_eq!(uniform_dimension(&z_module(&[2, 3]).unwrap(), &caps()).unwrap(), 2);
        assert_eq!(uniform_dimension(&z_module(&[6]).unwrap(), &caps()).unwrap(), 2);
        assert_eq!(ring_right_uniform_dimension(&z2, &caps()).unwrap(), 1);
        let z6 = Arc::new(make_cyclic_ring(6).unwrap());
        assert_eq!(ring_right_uniform_dimension(&z6, &caps()).unwrap(), 2);
        let m2 = Arc::new(matrix_ring(&z2, 2, &caps()).unwrap());
        assert_eq!(ring_right_uniform_dimension(&m2, &caps()).unwrap(), 2);
        let a = z_module(&[2, 4]).unwrap();
        let b = z_module(&[4]).unwrap();
        let s = direct_sum(&a, &b, &caps()).unwrap();
        assert_eq!(uniform_dimension(&s, &caps()).unwrap(), 3);
    }

    #[test]
    fn submodule_presentation() {
        let m = z_module(&[2, 4]).unwrap();
        let n = cyclic_submodule(&m, m.element(&[1, 2]).unwrap());
        let sm = submodule_as_module(&m, &n).unwrap();
        assert_eq!(sm.module.order(), 2);
        sm.module.verify_axioms_exhaustive().unwrap();
        let mut emb = sm.embedding.clone();
        emb.sort();
        assert_eq!(emb, n.elements().to_vec());
    }
}
