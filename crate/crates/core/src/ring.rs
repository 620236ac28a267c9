//! Finite rings presented by structure constants over a product of cyclic groups.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElemSet, FiniteAbelianGroup};
use crate::ideal::{IdealHandle, Side};
use crate::smith;
use crate::Caps;

/// Rings up to this order get a materialized multiplication table.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Serialize)]
pub struct FiniteRing {
    additive: FiniteAbelianGroup,
    /// `constants[i][j]` is the index of `g_i * g_j`.
    constants: Vec<Vec<usize>>,
    one: usize,
    #[serde(skip)]
    constant_coords: Vec<Vec<Vec<u64>>>,
    #[serde(skip)]
    table: OnceLock<Option<Vec<u32>>>,
}

impl Clone for FiniteRing {
    fn clone(&self) -> Self {
        FiniteRing {
            additive: self.additive.clone(),
            constants: self.constants.clone(),
            one: self.one,
            constant_coords: self.constant_coords.clone(),
            table: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.additive == other.additive && self.constants == other.constants && self.one == other.one
    }
}

impl Eq for FiniteRing {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemicentralClass {
    NotIdempotent,
    Left,
    Right,
    Both,
    Neither,
}

impl FiniteRing {
    /// Builds a ring from generator orders, generator products and the unit.
    ///
    /// Bilinearity, associativity and unitality are checked on generators,
    /// which suffices for the bilinear extension.
    pub fn new(orders: Vec<u64>, constants: Vec<Vec<Vec<u64>>>, one: Vec<u64>) -> Result<Self> {
        let additive = FiniteAbelianGroup::new(orders)?;
        let k = additive.rank();
        if constants.len() != k || constants.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidStructure(format!(
                "structure constants must be a {k}x{k} table"
            )));
        }
        let mut idx = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                idx[i][j] = additive.checked_index(&constants[i][j])?;
            }
        }
        let one = additive.checked_index(&one)?;
        let ring = Self::from_indices(additive, idx, one);
        ring.validate_generators()?;
        Ok(ring)
    }

    pub(crate) fn from_indices(additive: FiniteAbelianGroup, constants: Vec<Vec<usize>>, one: usize) -> Self {
        let constant_coords = constants
            .iter()
            .map(|row| row.iter().map(|&c| additive.coords(c)).collect())
            .collect();
        FiniteRing {
            additive,
            constants,
            one,
            constant_coords,
            table: OnceLock::new(),
        }
    }

    fn validate_generators(&self) -> Result<()> {
        let g = &self.additive;
        let k = g.rank();
        for i in 0..k {
            for j in 0..k {
                let c = self.constants[i][j];
                for d in [g.orders()[i], g.orders()[j]] {
                    if g.scale(c, d as i64) != 0 {
                        return Err(Error::InvalidStructure(format!(
                            "product of generators {i},{j} is not compatible with their orders"
                        )));
                    }
                }
            }
        }
        for i in 0..k {
            let gi = g.generator(i);
            if self.mul_slow(self.one, gi) != gi || self.mul_slow(gi, self.one) != gi {
                return Err(Error::InvalidStructure(format!(
                    "the unit does not act as identity on generator {i}"
                )));
            }
            for j in 0..k {
                let gj = g.generator(j);
                for l in 0..k {
                    let gl = g.generator(l);
                    let lhs = self.mul_slow(self.mul_slow(gi, gj), gl);
                    let rhs = self.mul_slow(gi, self.mul_slow(gj, gl));
                    if lhs != rhs {
                        return Err(Error::InvalidStructure(format!(
                            "multiplication is not associative on generators {i},{j},{l}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.additive
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    pub fn rank(&self) -> usize {
        self.additive.rank()
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order() == 1
    }

    pub fn generator(&self, i: usize) -> usize {
        self.additive.generator(i)
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).map(|i| self.generator(i))
    }

    pub fn constant(&self, i: usize, j: usize) -> usize {
        self.constants[i][j]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn coords(&self, x: usize) -> Vec<u64> {
        self.additive.coords(x)
    }

    pub fn element(&self, coords: &[u64]) -> Result<usize> {
        self.additive.checked_index(coords)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.additive.add(a, b)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.additive.sub(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.additive.neg(a)
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        let k = self.rank();
        let orders = self.additive.orders();
        let x = self.additive.coords(a);
        let y = self.additive.coords(b);
        let mut acc = vec![0u64; k];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                if y[j] == 0 {
                    continue;
                }
                let s = x[i] * y[j];
                for (slot, &c) in acc.iter_mut().zip(&self.constant_coords[i][j]) {
                    *slot += s * c;
                }
            }
        }
        for (slot, &d) in acc.iter_mut().zip(orders) {
            *slot %= d;
        }
        self.additive.index(&acc)
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut t = vec![0u32; n * n];
                for a in 0..n {
                    for b in 0..n {
                        t[a * n + b] = self.mul_slow(a, b) as u32;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// Central iff it commutes with every additive generator.
    pub fn is_central(&self, z: usize) -> bool {
        self.generators().all(|g| self.mul(z, g) == self.mul(g, z))
    }

    pub fn is_commutative(&self) -> bool {
        self.generators().all(|g| self.is_central(g))
    }

    pub fn semicentral_class(&self, e: usize) -> SemicentralClass {
        if !self.is_idempotent(e) {
            return SemicentralClass::NotIdempotent;
        }
        // exe is linear in x, so generators suffice.
        let left = self.generators().all(|x| self.mul(self.mul(e, x), e) == self.mul(x, e));
        let right = self.generators().all(|x| self.mul(self.mul(e, x), e) == self.mul(e, x));
        match (left, right) {
            (true, true) => SemicentralClass::Both,
            (true, false) => SemicentralClass::Left,
            (false, true) => SemicentralClass::Right,
            (false, false) => SemicentralClass::Neither,
        }
    }

    pub fn central_elements(&self) -> ElemSet {
        ElemSet::from_iter_in(self.order(), self.elements().filter(|&z| self.is_central(z)))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.elements()
            .any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    /// Exhaustive check of the ring axioms over all elements.
    pub fn verify_axioms_exhaustive(&self) -> std::result::Result<(), String> {
        let n = self.order();
        for a in 0..n {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(format!("unit fails on {a}"));
            }
            if self.mul(0, a) != 0 || self.mul(a, 0) != 0 {
                return Err(format!("zero does not annihilate {a}"));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("associativity fails on ({a},{b},{c})"));
                    }
                    let bc = self.add(b, c);
                    if self.mul(a, bc) != self.add(self.mul(a, b), self.mul(a, c))
                        || self.mul(bc, a) != self.add(self.mul(b, a), self.mul(c, a))
                    {
                        return Err(format!("distributivity fails on ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks that `map` (indexed by elements of `a`) is a ring isomorphism onto `b`
/// by comparing addition and multiplication tables.
pub fn is_isomorphism(a: &FiniteRing, b: &FiniteRing, map: &[usize]) -> bool {
    if a.order() != b.order() || map.len() != a.order() {
        return false;
    }
    let mut seen = vec![false; b.order()];
    for &y in map {
        if y >= b.order() || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    if map[a.one()] != b.one() {
        return false;
    }
    a.elements().all(|x| {
        a.elements()
            .all(|y| map[a.add(x, y)] == b.add(map[x], map[y]) && map[a.mul(x, y)] == b.mul(map[x], map[y]))
    })
}

fn check_cap(what: &'static str, order: u128, caps: &Caps) -> Result<()> {
    if order > caps.ring as u128 {
        Err(Error::cap(what, order, caps.ring))
    } else {
        Ok(())
    }
}

/// `Z_n`; for `n = 1` the zero ring.
pub fn make_cyclic_ring(n: u64) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidStructure("Z_0 is infinite".into()));
    }
    FiniteRing::new(vec![n], vec![vec![vec![1 % n]]], vec![1 % n])
}

fn matrix_like(
    base: &FiniteRing,
    k: usize,
    positions: &[(usize, usize)],
    caps: &Caps,
    what: &'static str,
) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidStructure("matrix size must be positive".into()));
    }
    let order = (base.order() as u128)
        .checked_pow(positions.len() as u32)
        .unwrap_or(u128::MAX);
    check_cap(what, order, caps)?;
    let b = base.rank();
    let pos_index = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let mut orders = Vec::with_capacity(positions.len() * b);
    for _ in positions {
        orders.extend_from_slice(base.group().orders());
    }
    let n = orders.len();
    let mut constants = vec![vec![vec![0u64; n]; n]; n];
    for (pa, &(i, j)) in positions.iter().enumerate() {
        for (pb, &(l, m)) in positions.iter().enumerate() {
            if j != l {
                continue;
            }
            let Some(pc) = pos_index(i, m) else { continue };
            for ga in 0..b {
                for gb in 0..b {
                    let prod = base.coords(base.constant(ga, gb));
                    let slot = &mut constants[pa * b + ga][pb * b + gb];
                    slot[pc * b..pc * b + b].copy_from_slice(&prod);
                }
            }
        }
    }
    let mut one = vec![0u64; n];
    let base_one = base.coords(base.one());
    for d in 0..k {
        if let Some(pc) = pos_index(d, d) {
            one[pc * b..pc * b + b].copy_from_slice(&base_one);
        }
    }
    FiniteRing::new(orders, constants, one)
}

/// Full `k x k` matrix ring. Generator order is row-major over positions,
/// then over the base generators.
pub fn matrix_ring(base: &FiniteRing, k: usize, caps: &Caps) -> Result<FiniteRing> {
    let positions: Vec<_> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    matrix_like(base, k, &positions, caps, "matrix ring")
}

/// Upper-triangular `k x k` matrices.
pub fn triangular_ring(base: &FiniteRing, k: usize, caps: &Caps) -> Result<FiniteRing> {
    let positions: Vec<_> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    matrix_like(base, k, &positions, caps, "triangular ring")
}

/// Index of the matrix unit at `(i, j)` (with base entry `one`) in a ring built by
/// [`matrix_ring`] or [`triangular_ring`].
pub fn matrix_unit(
    base: &FiniteRing,
    ring: &FiniteRing,
    k: usize,
    triangular: bool,
    i: usize,
    j: usize,
) -> Option<usize> {
    let positions: Vec<_> = if triangular {
        (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect()
    } else {
        (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect()
    };
    let p = positions.iter().position(|&q| q == (i, j))?;
    let b = base.rank();
    let mut coords = vec![0u64; ring.rank()];
    coords[p * b..p * b + b].copy_from_slice(&base.coords(base.one()));
    ring.element(&coords).ok()
}

pub fn direct_product(a: &FiniteRing, b: &FiniteRing, caps: &Caps) -> Result<FiniteRing> {
    check_cap("direct product", a.order() as u128 * b.order() as u128, caps)?;
    let (ka, kb) = (a.rank(), b.rank());
    let mut orders = a.group().orders().to_vec();
    orders.extend_from_slice(b.group().orders());
    let n = ka + kb;
    let mut constants = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..ka {
        for j in 0..ka {
            constants[i][j][..ka].copy_from_slice(&a.coords(a.constant(i, j)));
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            constants[ka + i][ka + j][ka..].copy_from_slice(&b.coords(b.constant(i, j)));
        }
    }
    let mut one = a.coords(a.one());
    one.extend(b.coords(b.one()));
    FiniteRing::new(orders, constants, one)
}

/// Embedding of a pair into the product ring built by [`direct_product`].
pub fn product_element(a: &FiniteRing, b: &FiniteRing, prod: &FiniteRing, x: usize, y: usize) -> usize {
    let mut coords = a.coords(x);
    coords.extend(b.coords(y));
    prod.group().index(&coords)
}

/// Quotient ring together with the projection of each element of `r`.
pub struct Quotient {
    pub ring: FiniteRing,
    pub projection: Vec<usize>,
}

pub fn quotient_ring(r: &FiniteRing, ideal: &IdealHandle) -> Result<Quotient> {
    if !ideal.is_two_sided_ideal_of(r) {
        return Err(Error::NotAnIdeal(format!(
            "{} elements, declared {:?}",
            ideal.len(),
            ideal.side()
        )));
    }
    let g = r.group();
    let gens: Vec<Vec<i64>> = ideal
        .generators()
        .iter()
        .map(|&x| g.coords(x).into_iter().map(|c| c as i64).collect())
        .collect();
    let qm = smith::quotient(g.orders(), &gens);
    let qgroup = FiniteAbelianGroup::new(qm.orders.clone())?;
    let to_q = |x: usize| qgroup.index(&qm.project(&g.coords(x)));
    let reps: Vec<usize> = qm.reps.iter().map(|v| g.index_signed(v)).collect();
    let k = reps.len();
    let constants: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| to_q(r.mul(reps[i], reps[j]))).collect())
        .collect();
    let one = to_q(r.one());
    let projection: Vec<usize> = r.elements().map(to_q).collect();
    let ring = FiniteRing::from_indices(qgroup, constants, one);
    ring.validate_generators()?;
    Ok(Quotient { ring, projection })
}

/// Two-sided ideal generated by `gens` (convenience for quotient construction).
pub fn two_sided_ideal(r: &FiniteRing, gens: &[usize]) -> IdealHandle {
    crate::ideal::ideal_generated(r, gens, Side::TwoSided)
}
