//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are addressed by a mixed-radix index: the tuple `(a_1, ..., a_k)`
//! with `0 <= a_i < d_i` maps to `sum a_i * stride_i` where `stride_0 = 1`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteAbelianGroup {
    orders: Vec<u64>,
    #[serde(skip)]
    strides: Vec<usize>,
    #[serde(skip)]
    order: usize,
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        let mut strides = Vec::with_capacity(orders.len());
        let mut order: u128 = 1;
        for &d in &orders {
            if d == 0 {
                return Err(Error::InvalidStructure("cyclic factor of order 0".into()));
            }
            strides.push(order as usize);
            order *= d as u128;
            if order > u32::MAX as u128 {
                return Err(Error::cap("abelian group", order, u32::MAX as usize));
            }
        }
        Ok(FiniteAbelianGroup {
            orders,
            strides,
            order: order as usize,
        })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            orders: Vec::new(),
            strides: Vec::new(),
            order: 1,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Index of the `i`-th cyclic generator.
    pub fn generator(&self, i: usize) -> usize {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i]
        }
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &d| lcm(acc, d))
    }

    pub fn coords(&self, mut x: usize) -> Vec<u64> {
        self.orders
            .iter()
            .map(|&d| {
                let c = x % d as usize;
                x /= d as usize;
                c as u64
            })
            .collect()
    }

    pub fn coords_into(&self, mut x: usize, out: &mut [u64]) {
        for (slot, &d) in out.iter_mut().zip(&self.orders) {
            *slot = (x % d as usize) as u64;
            x /= d as usize;
        }
    }

    /// Encodes a coordinate tuple, reducing each entry modulo its order.
    pub fn index(&self, coords: &[u64]) -> usize {
        debug_assert_eq!(coords.len(), self.orders.len());
        coords
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&c, &d), &s)| (c % d) as usize * s)
            .sum()
    }

    pub fn index_signed(&self, coords: &[i64]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&c, &d), &s)| c.rem_euclid(d as i64) as usize * s)
            .sum()
    }

    /// Checks bounds without reducing.
    pub fn checked_index(&self, coords: &[u64]) -> Result<usize> {
        if coords.len() != self.orders.len() {
            return Err(Error::InvalidStructure(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.orders.len()
            )));
        }
        if coords.iter().zip(&self.orders).any(|(&c, &d)| c >= d) {
            return Err(Error::InvalidStructure(format!(
                "coordinates {coords:?} out of bounds for orders {:?}",
                self.orders
            )));
        }
        Ok(self.index(coords))
    }

    pub fn add(&self, mut a: usize, mut b: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            out += ((a % d + b % d) % d) * s;
            a /= d;
            b /= d;
        }
        out
    }

    pub fn neg(&self, mut a: usize) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            out += ((d - a % d) % d) * s;
            a /= d;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, mut a: usize, k: i64) -> usize {
        let mut out = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let dd = d as i64;
            let c = (a % d as usize) as i64;
            out += ((c * k.rem_euclid(dd)).rem_euclid(dd)) as usize * s;
            a /= d as usize;
        }
        out
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: usize) -> u64 {
        self.coords(a)
            .iter()
            .zip(&self.orders)
            .fold(1, |acc, (&c, &d)| lcm(acc, d / gcd(c, d)))
    }

    /// Subgroup generated by `base` (assumed to be a subgroup) together with `gens`.
    pub fn span_with(&self, base: &ElemSet, gens: impl IntoIterator<Item = usize>) -> ElemSet {
        let mut set = base.clone();
        let mut members: Vec<usize> = set.iter().collect();
        for g in gens {
            if set.contains(g) {
                continue;
            }
            let coset_reps = members.clone();
            let mut t = g;
            while !set.contains(t) {
                for &h in &coset_reps {
                    let x = self.add(h, t);
                    set.insert(x);
                    members.push(x);
                }
                t = self.add(t, g);
            }
        }
        set
    }

    pub fn span(&self, gens: impl IntoIterator<Item = usize>) -> ElemSet {
        self.span_with(&ElemSet::singleton(self.order, 0), gens)
    }

    /// A small additive generating set of a subgroup.
    pub fn generators_of(&self, subgroup: &ElemSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = ElemSet::singleton(self.order, 0);
        for x in subgroup.iter() {
            if cur.len() == subgroup.len() {
                break;
            }
            if !cur.contains(x) {
                cur = self.span_with(&cur, [x]);
                gens.push(x);
            }
        }
        gens
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Set of element indices of a fixed finite universe.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ElemSet {
    words: Vec<u64>,
    len: usize,
    universe: usize,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            words: vec![0; universe.div_ceil(64)],
            len: 0,
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_iter_in(universe: usize, it: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for x in it {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, 1u64 << (x % 64));
        if self.words[w] & b == 0 {
            self.words[w] |= b;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / 64] & (1u64 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        ElemSet {
            words,
            len,
            universe: self.universe,
        }
    }

    pub fn intersection_len(&self, other: &ElemSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
