//! One- and two-sided ideals of finite rings.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::ElemSet;
use crate::ring::FiniteRing;
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHandle {
    elements: ElemSet,
    gens: Vec<usize>,
    side: Side,
}

impl IdealHandle {
    /// Wraps an element set, checking closure for the declared side.
    pub fn from_elements(r: &FiniteRing, elements: ElemSet, side: Side) -> Result<Self> {
        let gens = r.group().generators_of(&elements);
        let h = IdealHandle { elements, gens, side };
        if !h.is_closed(r) {
            return Err(Error::NotAnIdeal(format!("not closed as a {side:?} ideal")));
        }
        Ok(h)
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    fn closed_left(&self, r: &FiniteRing) -> bool {
        self.gens
            .iter()
            .all(|&x| r.generators().all(|g| self.elements.contains(r.mul(g, x))))
    }

    fn closed_right(&self, r: &FiniteRing) -> bool {
        self.gens
            .iter()
            .all(|&x| r.generators().all(|g| self.elements.contains(r.mul(x, g))))
    }

    fn is_additive_subgroup(&self, r: &FiniteRing) -> bool {
        self.elements.contains(0) && r.group().span(self.gens.iter().copied()) == self.elements
    }

    fn is_closed(&self, r: &FiniteRing) -> bool {
        self.is_additive_subgroup(r)
            && match self.side {
                Side::Left => self.closed_left(r),
                Side::Right => self.closed_right(r),
                Side::TwoSided => self.closed_left(r) && self.closed_right(r),
            }
    }

    pub fn is_two_sided_ideal_of(&self, r: &FiniteRing) -> bool {
        self.elements.universe() == r.order()
            && self.is_additive_subgroup(r)
            && self.closed_left(r)
            && self.closed_right(r)
    }
}

/// Closure of `gens` under addition and the declared multiplications.
pub fn ideal_generated(r: &FiniteRing, gens: &[usize], side: Side) -> IdealHandle {
    let mut products = Vec::new();
    for &x in gens {
        match side {
            Side::Left => products.extend(r.generators().map(|g| r.mul(g, x))),
            Side::Right => products.extend(r.generators().map(|g| r.mul(x, g))),
            Side::TwoSided => {
                for a in r.generators() {
                    let ax = r.mul(a, x);
                    products.extend(r.generators().map(|b| r.mul(ax, b)));
                }
            }
        }
    }
    let elements = r.group().span(products);
    let gens = r.group().generators_of(&elements);
    IdealHandle { elements, gens, side }
}

fn join(r: &FiniteRing, a: &IdealHandle, b: &IdealHandle) -> IdealHandle {
    let elements = r.group().span_with(&a.elements, b.gens.iter().copied());
    let gens = r.group().generators_of(&elements);
    IdealHandle {
        elements,
        gens,
        side: a.side,
    }
}

/// All ideals of the given side, as the join-closure of principal ones.
pub fn all_ideals(r: &FiniteRing, side: Side, caps: &Caps) -> Result<Vec<IdealHandle>> {
    let mut principal: Vec<IdealHandle> = Vec::new();
    let mut seen_p = HashSet::new();
    for x in r.elements() {
        let i = ideal_generated(r, &[x], side);
        if !i.is_zero() && seen_p.insert(i.elements.clone()) {
            principal.push(i);
        }
    }
    let zero = ideal_generated(r, &[], side);
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(zero.elements.clone());
    let mut out = vec![zero];
    let mut k = 0;
    while k < out.len() {
        for p in &principal {
            if p.elements.is_subset(&out[k].elements) {
                continue;
            }
            let j = join(r, &out[k], p);
            if seen.insert(j.elements.clone()) {
                out.push(j);
                if out.len() > caps.lattice {
                    return Err(Error::cap("ideal lattice", out.len() as u128, caps.lattice));
                }
            }
        }
        k += 1;
    }
    out.sort_by_cached_key(|a| (a.len(), a.elements.to_vec()));
    Ok(out)
}

pub fn all_two_sided_ideals(r: &FiniteRing, caps: &Caps) -> Result<Vec<IdealHandle>> {
    all_ideals(r, Side::TwoSided, caps)
}

/// `{a : a x = 0 for all x in set}`; `set` is given by additive generators.
pub fn left_annihilator(r: &FiniteRing, gens: &[usize]) -> ElemSet {
    ElemSet::from_iter_in(
        r.order(),
        r.elements().filter(|&a| gens.iter().all(|&x| r.mul(a, x) == 0)),
    )
}

/// `{a : x a = 0 for all x in set}`.
pub fn right_annihilator(r: &FiniteRing, gens: &[usize]) -> ElemSet {
    ElemSet::from_iter_in(
        r.order(),
        r.elements().filter(|&a| gens.iter().all(|&x| r.mul(x, a) == 0)),
    )
}

/// Additive span of all products `x y` with `x` in `a` and `y` in `b`.
pub fn product_of(r: &FiniteRing, a: &IdealHandle, b: &IdealHandle) -> ElemSet {
    let mut prods = Vec::new();
    for &x in &a.gens {
        for &y in &b.gens {
            prods.push(r.mul(x, y));
        }
    }
    r.group().span(prods)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, matrix_ring, matrix_unit, triangular_ring};

    #[test]
    fn generated_ideals() {
        let z2 = make_cyclic_ring(2).unwrap();
        let t2 = triangular_ring(&z2, 2, &Caps::default()).unwrap();
        assert_eq!(ideal_generated(&t2, &[t2.one()], Side::TwoSided).len(), 8);
        assert_eq!(ideal_generated(&t2, &[], Side::TwoSided).len(), 1);
        let e12 = matrix_unit(&z2, &t2, 2, true, 0, 1).unwrap();
        let i = ideal_generated(&t2, &[e12], Side::TwoSided);
        assert_eq!(i.elements().to_vec(), {
            let mut v = vec![0, e12];
            v.sort();
            v
        });
    }

    #[test]
    fn ideal_counts() {
        let caps = Caps::default();
        assert_eq!(
            all_two_sided_ideals(&make_cyclic_ring(6).unwrap(), &caps)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            all_two_sided_ideals(&make_cyclic_ring(4).unwrap(), &caps)
                .unwrap()
                .len(),
            3
        );
        let z2 = make_cyclic_ring(2).unwrap();
        let m2 = matrix_ring(&z2, 2, &caps).unwrap();
        assert_eq!(all_two_sided_ideals(&m2, &caps).unwrap().len(), 2);
        // Right ideals of M_2(Z_2): 0, three row spaces, whole ring.
        assert_eq!(all_ideals(&m2, Side::Right, &caps).unwrap().len(), 5);
    }

    #[test]
    fn from_elements_checks_closure() {
        let z4 = make_cyclic_ring(4).unwrap();
        let bad = ElemSet::from_iter_in(4, [0, 1]);
        assert!(IdealHandle::from_elements(&z4, bad, Side::TwoSided).is_err());
        let good = ElemSet::from_iter_in(4, [0, 2]);
        assert!(IdealHandle::from_elements(&z4, good, Side::TwoSided).is_ok());
    }
}
