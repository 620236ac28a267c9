//! s-unital ideals.
//!
//! In a finite ring an ideal `I` is right s-unital iff a single `x in I`
//! satisfies `a x = a` for every `a in I`: units for two elements `a`, `b`
//! combine to `u = x + y - x y`. The same combination keeps units central, so
//! the search looks for one unit first and only falls back to a per-element
//! scan to name a failing element.

use crate::group::ElemSet;
use crate::ideal::IdealHandle;
use crate::ring::FiniteRing;

use super::verdict::{Item, Level, UnitEntry, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSide {
    /// `a x = a`.
    Right,
    /// `x a = a`.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Units {
    /// One unit works for every element.
    Single(usize),
    /// Each listed element has its own unit.
    PerElement(Vec<(usize, usize)>),
    /// No admissible unit exists for this element.
    Fails(usize),
}

fn fixes(r: &FiniteRing, a: usize, x: usize, side: UnitSide) -> bool {
    match side {
        UnitSide::Right => r.mul(a, x) == a,
        UnitSide::Left => r.mul(x, a) == a,
    }
}

/// Searches `set` (restricted by `allowed`) for a unit of every element of `set`.
/// `gens` must generate `set` additively.
pub fn find_units(
    r: &FiniteRing,
    set: &ElemSet,
    gens: &[usize],
    allowed: impl Fn(usize) -> bool,
    side: UnitSide,
) -> Units {
    let candidates: Vec<usize> = set.iter().filter(|&x| allowed(x)).collect();
    if let Some(&u) = candidates.iter().find(|&&x| gens.iter().all(|&a| fixes(r, a, x, side))) {
        return Units::Single(u);
    }
    let mut per = Vec::with_capacity(set.len());
    for a in set.iter() {
        match candidates.iter().find(|&&x| fixes(r, a, x, side)) {
            Some(&x) => per.push((a, x)),
            None => return Units::Fails(a),
        }
    }
    Units::PerElement(per)
}

/// Pairs `(element, unit)` covering the generators, for certificates.
pub fn unit_pairs(units: &Units, gens: &[usize]) -> Vec<(usize, usize)> {
    match units {
        Units::Single(u) => gens.iter().map(|&a| (a, *u)).collect(),
        Units::PerElement(v) => v.clone(),
        Units::Fails(_) => Vec::new(),
    }
}

fn ring_item(r: &FiniteRing, x: usize) -> Item {
    Item::Coords(r.coords(x))
}

fn verdict_from(r: &FiniteRing, i: &IdealHandle, units: Units, name: &str) -> Verdict {
    match units {
        Units::Fails(a) => Verdict::fails(
            name,
            Level::Ring,
            Witness::failure()
                .with_submodule(i.elements().iter().map(|x| r.coords(x)).collect())
                .with_elements(vec![r.coords(a)]),
        ),
        u => {
            let mut w = Witness::certificate();
            let entries = unit_pairs(&u, i.generators())
                .into_iter()
                .map(|(a, x)| UnitEntry {
                    element: ring_item(r, a),
                    unit: ring_item(r, x),
                })
                .collect();
            w.push_units("ideal", entries);
            Verdict::holds(name, Level::Ring, w)
        }
    }
}

/// Every `a in I` has some `x in I` with `a x = a`.
pub fn is_right_s_unital(r: &FiniteRing, i: &IdealHandle) -> Verdict {
    let units = find_units(r, i.elements(), i.generators(), |_| true, UnitSide::Right);
    verdict_from(r, i, units, "right_s_unital")
}

/// Every `a in I` has a central `z in I` with `a z = a` (and then `z a = a`).
pub fn is_centrally_s_unital(r: &FiniteRing, i: &IdealHandle) -> Verdict {
    let central = r.central_elements();
    let units = find_units(
        r,
        i.elements(),
        i.generators(),
        |x| central.contains(x),
        UnitSide::Right,
    );
    if let Units::Single(z) = units {
        debug_assert!(i.generators().iter().all(|&a| r.mul(a, z) == a && r.mul(z, a) == a));
    }
    verdict_from(r, i, units, "centrally_s_unital")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_generated, left_annihilator, Side};
    use crate::ring::{make_cyclic_ring, matrix_unit, triangular_ring};
    use crate::Caps;

    #[test]
    fn s_unital_examples() {
        let z4 = make_cyclic_ring(4).unwrap();
        let whole = ideal_generated(&z4, &[1], Side::TwoSided);
        assert!(is_right_s_unital(&z4, &whole).holds);
        let zero = ideal_generated(&z4, &[], Side::TwoSided);
        assert!(is_right_s_unital(&z4, &zero).holds);
        assert!(is_centrally_s_unital(&z4, &zero).holds);
        let two = ideal_generated(&z4, &[2], Side::TwoSided);
        let v = is_right_s_unital(&z4, &two);
        assert!(!v.holds);
        assert_eq!(v.witness.elements, vec![vec![2]]);
        let z6 = make_cyclic_ring(6).unwrap();
        let three = ideal_generated(&z6, &[3], Side::TwoSided);
        let v = is_centrally_s_unital(&z6, &three);
        assert!(v.holds);
        assert_eq!(v.witness.units["ideal"][0].unit, Item::Coords(vec![3]));
    }

    #[test]
    fn triangular_annihilator_is_not_centrally_s_unital() {
        let z2 = make_cyclic_ring(2).unwrap();
        let t2 = triangular_ring(&z2, 2, &Caps::default()).unwrap();
        let e12 = matrix_unit(&z2, &t2, 2, true, 0, 1).unwrap();
        let e22 = matrix_unit(&z2, &t2, 2, true, 1, 1).unwrap();
        let l = left_annihilator(&t2, &[e12]);
        assert_eq!(l.len(), 4);
        let i = IdealHandle::from_elements(&t2, l, Side::TwoSided).unwrap();
        assert!(is_right_s_unital(&t2, &i).holds);
        let v = is_centrally_s_unital(&t2, &i);
        assert!(!v.holds);
        // Every nonzero element of I fails, e_22 among them.
        assert!(matches!(
            find_units(
                &t2,
                i.elements(),
                i.generators(),
                |x| t2.central_elements().contains(x),
                UnitSide::Right
            ),
            Units::Fails(_)
        ));
        assert!(!t2.central_elements().contains(e22));
        assert_eq!(t2.mul(e22, 0), 0);
    }
}
