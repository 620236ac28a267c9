//! `Hom_R(M, N)` and endomorphism rings.
//!
//! Additive maps between products of cyclic groups are parametrized
//! componentwise through `Hom(Z_d, Z_e) = Z_gcd(d,e)`; R-linearity becomes a
//! system of linear congruences whose solution group is computed with the
//! kernel routine in [`crate::smith`].

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{gcd, ElemSet, FiniteAbelianGroup};
use crate::lattice::Submodule;
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::smith;
use crate::Caps;

/// Evaluation tables are materialized when `|S| * |M|` is at most this.
const EVAL_LIMIT: usize = 1 << 22;

/// An additive map given by `f(g_i) = sum_j a_ij h_j` on carrier generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleHom {
    #[serde(skip)]
    source: FiniteAbelianGroup,
    #[serde(skip)]
    target: FiniteAbelianGroup,
    matrix: Vec<Vec<u64>>,
}

impl ModuleHom {
    /// Validates well-definedness and R-linearity.
    pub fn new(source: &FiniteModule, target: &FiniteModule, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        let (s, t) = (source.carrier(), target.carrier());
        if matrix.len() != s.rank() || matrix.iter().any(|row| row.len() != t.rank()) {
            return Err(Error::InvalidStructure(format!(
                "hom matrix must be {}x{}",
                s.rank(),
                t.rank()
            )));
        }
        let matrix: Vec<Vec<u64>> = matrix
            .into_iter()
            .map(|row| row.iter().zip(t.orders()).map(|(&a, &e)| a % e).collect())
            .collect();
        for (i, row) in matrix.iter().enumerate() {
            let d = s.orders()[i];
            if row.iter().zip(t.orders()).any(|(&a, &e)| (a * d) % e != 0) {
                return Err(Error::InvalidStructure(format!(
                    "row {i} is not compatible with the order of source generator {i}"
                )));
            }
        }
        let f = ModuleHom::from_matrix(s.clone(), t.clone(), matrix);
        if !f.is_linear(source, target) {
            return Err(Error::InvalidStructure("map is not R-linear".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_matrix(source: FiniteAbelianGroup, target: FiniteAbelianGroup, matrix: Vec<Vec<u64>>) -> Self {
        ModuleHom { source, target, matrix }
    }

    pub fn zero(source: &FiniteModule, target: &FiniteModule) -> Self {
        let (s, t) = (source.carrier(), target.carrier());
        ModuleHom::from_matrix(s.clone(), t.clone(), vec![vec![0; t.rank()]; s.rank()])
    }

    pub fn identity(m: &FiniteModule) -> Self {
        let g = m.carrier();
        let matrix = (0..g.rank())
            .map(|i| (0..g.rank()).map(|j| u64::from(i == j && g.orders()[j] > 1)).collect())
            .collect();
        ModuleHom::from_matrix(g.clone(), g.clone(), matrix)
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    pub fn apply(&self, m: usize) -> usize {
        let x = self.source.coords(m);
        let mut out = vec![0u64; self.target.rank()];
        for (xi, row) in x.iter().zip(&self.matrix) {
            if *xi == 0 {
                continue;
            }
            for ((slot, &a), &e) in out.iter_mut().zip(row).zip(self.target.orders()) {
                *slot = (*slot + xi * a) % e;
            }
        }
        self.target.index(&out)
    }

    /// Images of the source generators.
    pub fn generator_images(&self) -> Vec<usize> {
        self.matrix.iter().map(|row| self.target.index(row)).collect()
    }

    fn is_linear(&self, source: &FiniteModule, target: &FiniteModule) -> bool {
        let r = source.ring();
        (0..source.rank()).all(|i| {
            let gi = source.carrier().generator(i);
            r.generators()
                .all(|k| self.apply(source.scalar_act(gi, k)) == target.scalar_act(self.apply(gi), k))
        })
    }

    pub fn kernel(&self) -> Submodule {
        let set = ElemSet::from_iter_in(
            self.source.order(),
            (0..self.source.order()).filter(|&m| self.apply(m) == 0),
        );
        Submodule::from_set(&self.source, set)
    }

    pub fn image(&self) -> Submodule {
        let set = self.target.span(self.generator_images());
        Submodule::from_set(&self.target, set)
    }

    pub fn is_monomorphism(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&a| a == 0)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        debug_assert_eq!(other.target, self.source);
        let matrix = other
            .generator_images()
            .into_iter()
            .map(|y| self.target.coords(self.apply(y)))
            .collect();
        ModuleHom::from_matrix(other.source.clone(), self.target.clone(), matrix)
    }
}

/// Cyclic decomposition of `Hom_R(M, N)`: generators and their additive orders.
struct HomDecomposition {
    gens: Vec<ModuleHom>,
    orders: Vec<u64>,
}

fn hom_decomposition(m: &FiniteModule, n: &FiniteModule) -> Result<HomDecomposition> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let (s, t) = (m.carrier(), n.carrier());
    let r = m.ring();
    // Parameters p = (i, j) with a_ij = t_p * (e_j / c_p), t_p in Z_{c_p}.
    let mut params: Vec<(usize, usize, u64)> = Vec::new();
    for (i, &d) in s.orders().iter().enumerate() {
        for (j, &e) in t.orders().iter().enumerate() {
            let c = gcd(d, e);
            if c > 1 {
                params.push((i, j, c));
            }
        }
    }
    let src: Vec<u64> = params.iter().map(|p| p.2).collect();
    let kr = r.rank();
    let kn = t.rank();
    let mut dst = Vec::with_capacity(s.rank() * kr * kn);
    for _ in 0..s.rank() * kr {
        dst.extend_from_slice(t.orders());
    }
    // Constraint image of each basic parameter map phi_p:
    //   phi_p(g_l r_k) - phi_p(g_l) r_k  for every (l, k).
    let images: Vec<Vec<i64>> = params
        .iter()
        .map(|&(i, j, c)| {
            let step = (t.orders()[j] / c) as i64;
            let hj = t.index_signed(&unit_vec(kn, j, step));
            let mut v = vec![0i64; dst.len()];
            for l in 0..s.rank() {
                for k in 0..kr {
                    let off = (l * kr + k) * kn;
                    let ci = s.coords(m.action_index(l, k))[i] as i64;
                    v[off + j] += ci * step;
                    if l == i {
                        let moved = t.coords(n.scalar_act(hj, r.generator(k)));
                        for (q, &x) in moved.iter().enumerate() {
                            v[off + q] -= x as i64;
                        }
                    }
                }
            }
            for (x, &e) in v.iter_mut().zip(&dst) {
                *x = x.rem_euclid(e as i64);
            }
            v
        })
        .collect();
    let kernel = smith::kernel(&src, &images, &dst);
    let decomposition = smith::subgroup_decomposition(&src, &kernel);
    let to_hom = |tvec: &[i64]| {
        let mut matrix = vec![vec![0u64; kn]; s.rank()];
        for (&(i, j, c), &tp) in params.iter().zip(tvec) {
            let e = t.orders()[j];
            matrix[i][j] = (tp.rem_euclid(c as i64) as u64 * (e / c)) % e;
        }
        ModuleHom::from_matrix(s.clone(), t.clone(), matrix)
    };
    let mut gens = Vec::new();
    let mut orders = Vec::new();
    for (v, o) in decomposition {
        gens.push(to_hom(&v));
        orders.push(o);
    }
    Ok(HomDecomposition { gens, orders })
}

fn unit_vec(n: usize, j: usize, v: i64) -> Vec<i64> {
    let mut out = vec![0; n];
    out[j] = v;
    out
}

fn add_homs(a: &ModuleHom, b: &ModuleHom) -> ModuleHom {
    let matrix = a
        .matrix
        .iter()
        .zip(&b.matrix)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .zip(a.target.orders())
                .map(|((&x, &y), &e)| (x + y) % e)
                .collect()
        })
        .collect();
    ModuleHom::from_matrix(a.source.clone(), a.target.clone(), matrix)
}

/// Enumerates `sum k_t G_t` in mixed-radix order of `(k_t)`, coordinate 0 fastest.
fn enumerate_span(dec: &HomDecomposition, zero: ModuleHom) -> Vec<ModuleHom> {
    let mut out = vec![zero];
    for (g, &o) in dec.gens.iter().zip(&dec.orders) {
        let block = out.clone();
        let mut shifted = block.clone();
        for _ in 1..o {
            shifted = shifted.iter().map(|f| add_homs(f, g)).collect();
            out.extend(shifted.iter().cloned());
        }
    }
    out
}

/// All R-linear maps `M -> N`, without duplicates.
pub fn hom_group(m: &FiniteModule, n: &FiniteModule, caps: &Caps) -> Result<Vec<ModuleHom>> {
    let dec = hom_decomposition(m, n)?;
    let size: u128 = dec.orders.iter().map(|&o| o as u128).product();
    if size > caps.ring as u128 {
        return Err(Error::cap("hom group", size, caps.ring));
    }
    Ok(enumerate_span(&dec, ModuleHom::zero(m, n)))
}

/// Order of `Hom_R(M, N)` without enumerating it.
pub fn hom_group_order(m: &FiniteModule, n: &FiniteModule) -> Result<u128> {
    let dec = hom_decomposition(m, n)?;
    Ok(dec.orders.iter().map(|&o| o as u128).product())
}

/// Reference enumeration: every additive map, filtered by linearity checks
/// over all module elements against each additive generator of the ring
/// (`f(xr)` and `f(x)r` are both additive in `r`).
pub fn hom_group_exhaustive(m: &FiniteModule, n: &FiniteModule, caps: &Caps) -> Result<Vec<ModuleHom>> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let (s, t) = (m.carrier(), n.carrier());
    let choices: Vec<Vec<usize>> = s.orders().iter().map(|&d| t_elements_killed_by(t, d)).collect();
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    if total > (caps.ring as u128) * 64 {
        return Err(Error::cap("additive hom search", total, caps.ring * 64));
    }
    let r = m.ring();
    let ring_gens: Vec<usize> = r.generators().collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let matrix: Vec<Vec<u64>> = pick.iter().zip(&choices).map(|(&p, c)| t.coords(c[p])).collect();
        let f = ModuleHom::from_matrix(s.clone(), t.clone(), matrix);
        let linear = m.elements().all(|x| {
            ring_gens
                .iter()
                .all(|&a| f.apply(m.scalar_act(x, a)) == n.scalar_act(f.apply(x), a))
        });
        if linear {
            out.push(f);
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(out);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn t_elements_killed_by(t: &FiniteAbelianGroup, d: u64) -> Vec<usize> {
    (0..t.order()).filter(|&y| t.scale(y, d as i64) == 0).collect()
}

/// `S = End_R(M)` as a finite ring with multiplication `(f g)(m) = f(g(m))`.
#[derive(Debug)]
pub struct EndoRing {
    ring: FiniteRing,
    module: FiniteModule,
    homs: Vec<ModuleHom>,
    index: HashMap<Vec<usize>, usize>,
    eval: OnceLock<Option<Vec<u32>>>,
}

pub fn end_ring(m: &FiniteModule, caps: &Caps) -> Result<EndoRing> {
    let dec = hom_decomposition(m, m)?;
    let size: u128 = dec.orders.iter().map(|&o| o as u128).product();
    if size > caps.ring as u128 {
        return Err(Error::cap("endomorphism ring", size, caps.ring));
    }
    let homs = enumerate_span(&dec, ModuleHom::zero(m, m));
    let index: HashMap<Vec<usize>, usize> = homs
        .iter()
        .enumerate()
        .map(|(i, f)| (f.generator_images(), i))
        .collect();
    debug_assert_eq!(index.len(), homs.len());
    let group = FiniteAbelianGroup::new(dec.orders.clone())?;
    let lookup = |f: &ModuleHom| index[&f.generator_images()];
    let constants: Vec<Vec<usize>> = dec
        .gens
        .iter()
        .map(|gi| dec.gens.iter().map(|gj| lookup(&gi.compose(gj))).collect())
        .collect();
    let one = lookup(&ModuleHom::identity(m));
    let ring = FiniteRing::from_indices(group, constants, one);
    Ok(EndoRing {
        ring,
        module: m.clone(),
        homs,
        index,
        eval: OnceLock::new(),
    })
}

impl EndoRing {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn order(&self) -> usize {
        self.homs.len()
    }

    pub fn hom(&self, f: usize) -> &ModuleHom {
        &self.homs[f]
    }

    pub fn homs(&self) -> &[ModuleHom] {
        &self.homs
    }

    pub fn index_of(&self, f: &ModuleHom) -> Option<usize> {
        if f.source != *self.module.carrier() || f.target != *self.module.carrier() {
            return None;
        }
        self.index.get(&f.generator_images()).copied()
    }

    pub fn identity(&self) -> usize {
        self.ring.one()
    }

    fn eval_table(&self) -> Option<&Vec<u32>> {
        self.eval
            .get_or_init(|| {
                let (ns, nm) = (self.homs.len(), self.module.order());
                if ns * nm > EVAL_LIMIT {
                    return None;
                }
                let mut t = Vec::with_capacity(ns * nm);
                for f in &self.homs {
                    t.extend((0..nm).map(|x| f.apply(x) as u32));
                }
                Some(t)
            })
            .as_ref()
    }

    /// `f(m)` for the endomorphism with ring index `f`.
    pub fn eval(&self, f: usize, m: usize) -> usize {
        match self.eval_table() {
            Some(t) => t[f * self.module.order() + m] as usize,
            None => self.homs[f].apply(m),
        }
    }

    /// Image `f(N)` of a submodule given by additive generators.
    pub fn image_of(&self, f: usize, gens: &[usize]) -> ElemSet {
        self.module.carrier().span(gens.iter().map(|&x| self.eval(f, x)))
    }

    pub fn kernel_of(&self, f: usize) -> ElemSet {
        ElemSet::from_iter_in(
            self.module.order(),
            self.module.elements().filter(|&m| self.eval(f, m) == 0),
        )
    }

    /// Additive generators of `S`, as ring element indices.
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.ring.generators()
    }
}
