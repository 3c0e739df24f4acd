use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::exec::Strategy;
use crate::frozen::FrozenRing;
use crate::ring::{Element, Ring};

fn left_annihilator(r: &Ring, x: Element) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(r.order());
    for s in r.elements() {
        if r.mul(s, x) == r.zero() {
            set.insert(s.index());
        }
    }
    set
}

fn principal_left_ideal(r: &Ring, x: Element) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(r.order());
    for s in r.elements() {
        set.insert(r.mul(s, x).index());
    }
    set
}

/// There is `b` with `l(x) = Rb` and `l(b) = Rx`, where `l` is the left
/// annihilator. Scans every candidate `b`; use [`LeftIdealIndex`] when
/// testing many elements of one ring.
pub fn is_left_morphic(r: &FrozenRing, x: Element) -> bool {
    let ann_x = left_annihilator(r, x);
    let ideal_x = principal_left_ideal(r, x);
    let target = ann_x.count_ones(..);
    r.elements().any(|b| {
        let rb = principal_left_ideal(r, b);
        rb.count_ones(..) == target && rb == ann_x && left_annihilator(r, b) == ideal_x
    })
}

/// Left annihilators and principal left ideals of every element, indexed so
/// that the morphic test costs one hash lookup per element.
pub struct LeftIdealIndex {
    annihilators: Vec<FixedBitSet>,
    ideals: Vec<FixedBitSet>,
    by_ideal: HashMap<FixedBitSet, Vec<Element>>,
}

impl LeftIdealIndex {
    pub fn new(r: &FrozenRing, strategy: Strategy) -> LeftIdealIndex {
        let n = r.order();
        let annihilators = strategy.map(n, |x| left_annihilator(r, Element::from_index(x)));
        let ideals = strategy.map(n, |x| principal_left_ideal(r, Element::from_index(x)));
        let mut by_ideal: HashMap<FixedBitSet, Vec<Element>> = HashMap::new();
        for (b, ideal) in ideals.iter().enumerate() {
            by_ideal
                .entry(ideal.clone())
                .or_default()
                .push(Element::from_index(b));
        }
        LeftIdealIndex {
            annihilators,
            ideals,
            by_ideal,
        }
    }

    /// Least `b` witnessing that `x` is left morphic.
    pub fn morphic_partner(&self, x: Element) -> Option<Element> {
        let candidates = self.by_ideal.get(&self.annihilators[x.index()])?;
        candidates
            .iter()
            .copied()
            .find(|b| self.annihilators[b.index()] == self.ideals[x.index()])
    }

    pub fn is_left_morphic(&self, x: Element) -> bool {
        self.morphic_partner(x).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::matrix_ring;
    use crate::frozen::freeze;
    use crate::ring::{make_zmod, Caps};

    #[test]
    fn zmod_is_morphic() {
        for n in 1..=30 {
            let r = freeze(&make_zmod(n, &Caps::DEFAULT).unwrap(), &Caps::DEFAULT).unwrap();
            assert!(r.elements().all(|x| is_left_morphic(&r, x)), "Z({n})");
        }
    }

    #[test]
    fn zero_and_units_partners() {
        let r = freeze(&make_zmod(12, &Caps::DEFAULT).unwrap(), &Caps::DEFAULT).unwrap();
        let idx = LeftIdealIndex::new(&r, Strategy::default());
        assert_eq!(idx.morphic_partner(r.zero()), Some(r.one()));
        for &u in r.units() {
            assert_eq!(idx.morphic_partner(u), Some(r.zero()));
        }
    }

    #[test]
    fn index_agrees_with_scan() {
        let m = matrix_ring(&make_zmod(2, &Caps::DEFAULT).unwrap(), 2, &Caps::DEFAULT).unwrap();
        let r = freeze(&m, &Caps::DEFAULT).unwrap();
        let idx = LeftIdealIndex::new(&r, Strategy::Sequential);
        for x in r.elements() {
            assert_eq!(idx.is_left_morphic(x), is_left_morphic(&r, x));
        }
    }
}
