//! Finite right modules over finite rings.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{lcm, FiniteAbelianGroup};
use crate::ring::{make_cyclic_ring, FiniteRing};
use crate::Caps;

/// Full action tables are materialized when `|M| * |R|` is at most this.
const TABLE_LIMIT: usize = 1 << 20;

#[derive(Debug)]
pub struct FiniteModule {
    carrier: FiniteAbelianGroup,
    ring: Arc<FiniteRing>,
    /// `action[i][k]` is the index of `m_i * r_k` for carrier generator `i`
    /// and ring generator `k`.
    action: Vec<Vec<usize>>,
    action_coords: Vec<Vec<Vec<u64>>>,
    table: OnceLock<Option<Vec<u32>>>,
}

impl Clone for FiniteModule {
    fn clone(&self) -> Self {
        FiniteModule {
            carrier: self.carrier.clone(),
            ring: self.ring.clone(),
            action: self.action.clone(),
            action_coords: self.action_coords.clone(),
            table: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && *self.ring == *other.ring && self.action == other.action
    }
}

impl Eq for FiniteModule {}

impl FiniteModule {
    /// Builds a module from carrier orders and the images of generator pairs.
    /// Well-definedness, unitality and associativity are verified on generators.
    pub fn new(orders: Vec<u64>, ring: Arc<FiniteRing>, action: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let carrier = FiniteAbelianGroup::new(orders)?;
        if action.len() != carrier.rank() || action.iter().any(|row| row.len() != ring.rank()) {
            return Err(Error::InvalidStructure(format!(
                "action table must be {}x{}",
                carrier.rank(),
                ring.rank()
            )));
        }
        let mut idx = vec![vec![0; ring.rank()]; carrier.rank()];
        for (i, row) in action.iter().enumerate() {
            for (k, img) in row.iter().enumerate() {
                idx[i][k] = carrier.checked_index(img)?;
            }
        }
        let m = Self::from_indices(carrier, ring, idx);
        m.validate_generators()?;
        Ok(m)
    }

    pub(crate) fn from_indices(carrier: FiniteAbelianGroup, ring: Arc<FiniteRing>, action: Vec<Vec<usize>>) -> Self {
        let action_coords = action
            .iter()
            .map(|row| row.iter().map(|&x| carrier.coords(x)).collect())
            .collect();
        FiniteModule {
            carrier,
            ring,
            action,
            action_coords,
            table: OnceLock::new(),
        }
    }

    pub(crate) fn validate_generators(&self) -> Result<()> {
        let g = &self.carrier;
        let r = &*self.ring;
        for i in 0..g.rank() {
            let mi = g.generator(i);
            for k in 0..r.rank() {
                let img = self.action[i][k];
                if g.scale(img, g.orders()[i] as i64) != 0 || g.scale(img, r.group().orders()[k] as i64) != 0 {
                    return Err(Error::InvalidStructure(format!(
                        "action on generators ({i},{k}) is incompatible with their orders"
                    )));
                }
            }
            if self.act_slow(mi, r.one()) != mi {
                return Err(Error::InvalidStructure(format!("m·1 ≠ m for generator {i}")));
            }
            for k in 0..r.rank() {
                let rk = r.generator(k);
                for l in 0..r.rank() {
                    let rl = r.generator(l);
                    if self.act_slow(self.act_slow(mi, rk), rl) != self.act_slow(mi, r.mul(rk, rl)) {
                        return Err(Error::InvalidStructure(format!(
                            "action is not associative on generators ({i},{k},{l})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> &FiniteAbelianGroup {
        &self.carrier
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    pub fn rank(&self) -> usize {
        self.carrier.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.order() == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn coords(&self, m: usize) -> Vec<u64> {
        self.carrier.coords(m)
    }

    pub fn element(&self, coords: &[u64]) -> Result<usize> {
        self.carrier.checked_index(coords)
    }

    pub fn action_index(&self, i: usize, k: usize) -> usize {
        self.action[i][k]
    }

    fn act_slow(&self, m: usize, r: usize) -> usize {
        let g = &self.carrier;
        let x = g.coords(m);
        let y = self.ring.coords(r);
        let mut acc = vec![0u64; g.rank()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (k, &yk) in y.iter().enumerate() {
                if yk == 0 {
                    continue;
                }
                let s = xi * yk;
                for (slot, &c) in acc.iter_mut().zip(&self.action_coords[i][k]) {
                    *slot += s * c;
                }
            }
        }
        for (slot, &d) in acc.iter_mut().zip(g.orders()) {
            *slot %= d;
        }
        g.index(&acc)
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let (nm, nr) = (self.order(), self.ring.order());
                if nm * nr > TABLE_LIMIT {
                    return None;
                }
                let mut t = vec![0u32; nm * nr];
                for m in 0..nm {
                    for r in 0..nr {
                        t[m * nr + r] = self.act_slow(m, r) as u32;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// `m · r`, extended biadditively from the generator table.
    pub fn scalar_act(&self, m: usize, r: usize) -> usize {
        match self.table() {
            Some(t) => t[m * self.ring.order() + r] as usize,
            None => self.act_slow(m, r),
        }
    }

    /// Exhaustive module-axiom check; intended for small modules.
    pub fn verify_axioms_exhaustive(&self) -> std::result::Result<(), String> {
        let r = &*self.ring;
        let g = &self.carrier;
        for m in self.elements() {
            if self.scalar_act(m, r.one()) != m {
                return Err(format!("m·1 ≠ m at {m}"));
            }
            for a in r.elements() {
                for b in r.elements() {
                    if self.scalar_act(self.scalar_act(m, a), b) != self.scalar_act(m, r.mul(a, b)) {
                        return Err(format!("(m·r)·s ≠ m·(rs) at ({m},{a},{b})"));
                    }
                    if self.scalar_act(m, r.add(a, b)) != g.add(self.scalar_act(m, a), self.scalar_act(m, b)) {
                        return Err(format!("m·(r+s) ≠ m·r + m·s at ({m},{a},{b})"));
                    }
                }
                for n in self.elements() {
                    if self.scalar_act(g.add(m, n), a) != g.add(self.scalar_act(m, a), self.scalar_act(n, a)) {
                        return Err(format!("(m+n)·r ≠ m·r + n·r at ({m},{n},{a})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `R_R`: the ring acting on itself by right multiplication.
pub fn regular_module(r: &Arc<FiniteRing>) -> FiniteModule {
    let carrier = r.group().clone();
    let k = r.rank();
    let action = (0..k).map(|i| (0..k).map(|j| r.constant(i, j)).collect()).collect();
    FiniteModule::from_indices(carrier, r.clone(), action)
}

/// The finite abelian group `⊕ Z_{d_i}` as a module over `Z_e`, `e = lcm(d_i)`.
///
/// A finite abelian group of exponent `e` has the same submodules and the same
/// endomorphisms over `Z` and over `Z_e`.
pub fn z_module(orders: &[u64]) -> Result<FiniteModule> {
    if orders.is_empty() {
        return Err(Error::InvalidStructure(
            "z_module needs at least one cyclic factor".into(),
        ));
    }
    if orders.contains(&0) {
        return Err(Error::InvalidStructure("z_module factors must be positive".into()));
    }
    let e = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    let ring = Arc::new(make_cyclic_ring(e)?);
    let carrier = FiniteAbelianGroup::new(orders.to_vec())?;
    let action = (0..orders.len())
        .map(|i| vec![carrier.generator(i); ring.rank()])
        .collect();
    Ok(FiniteModule::from_indices(carrier, ring, action))
}

fn check_cap(order: u128, caps: &Caps) -> Result<()> {
    if order > caps.module as u128 {
        Err(Error::cap("module", order, caps.module))
    } else {
        Ok(())
    }
}

pub fn direct_sum(a: &FiniteModule, b: &FiniteModule, caps: &Caps) -> Result<FiniteModule> {
    if *a.ring != *b.ring {
        return Err(Error::RingMismatch);
    }
    check_cap(a.order() as u128 * b.order() as u128, caps)?;
    let mut orders = a.carrier.orders().to_vec();
    orders.extend_from_slice(b.carrier.orders());
    let carrier = FiniteAbelianGroup::new(orders)?;
    let (ka, kb) = (a.rank(), b.rank());
    let kr = a.ring.rank();
    let mut action = vec![vec![0usize; kr]; ka + kb];
    for i in 0..ka {
        for k in 0..kr {
            let mut c = a.coords(a.action[i][k]);
            c.extend(std::iter::repeat_n(0, kb));
            action[i][k] = carrier.index(&c);
        }
    }
    for i in 0..kb {
        for k in 0..kr {
            let mut c = vec![0u64; ka];
            c.extend(b.coords(b.action[i][k]));
            action[ka + i][k] = carrier.index(&c);
        }
    }
    Ok(FiniteModule::from_indices(carrier, a.ring.clone(), action))
}

/// `R^n` with componentwise action.
pub fn free_module(r: &Arc<FiniteRing>, n: usize, caps: &Caps) -> Result<FiniteModule> {
    if n == 0 {
        return Err(Error::InvalidStructure("free module rank must be positive".into()));
    }
    let order = (r.order() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_cap(order, caps)?;
    let base = regular_module(r);
    let mut m = base.clone();
    for _ in 1..n {
        m = direct_sum(&m, &base, caps)?;
    }
    Ok(m)
}

/// The zero module over `r`.
pub fn zero_module(r: &Arc<FiniteRing>) -> FiniteModule {
    FiniteModule::from_indices(FiniteAbelianGroup::trivial(), r.clone(), Vec::new())
}
