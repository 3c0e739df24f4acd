//! Frozen rings: a [`Ring`] together with its units, idempotents,
//! nilpotents and Jacobson radical.

use std::ops::Deref;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::ring::{Caps, Element, Ring};

/// Structural sets of a frozen ring, each sorted by index with a membership
/// bitset alongside.
#[derive(Debug, Clone)]
pub struct RingCaches {
    units: Vec<Element>,
    inverse: Vec<Option<Element>>,
    idempotents: Vec<Element>,
    nilpotents: Vec<Element>,
    jacobson: Vec<Element>,
    is_unit: FixedBitSet,
    is_idempotent: FixedBitSet,
    is_nilpotent: FixedBitSet,
    is_jacobson: FixedBitSet,
}

fn bits(n: usize, members: &[Element]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for m in members {
        b.insert(m.index());
    }
    b
}

impl RingCaches {
    fn build(ring: &Ring, strategy: Strategy) -> RingCaches {
        let n = ring.order();
        let one = ring.one();
        let inverse: Vec<Option<Element>> = strategy.map(n, |x| {
            let x = Element::from_index(x);
            ring.elements()
                .find(|&y| ring.mul(x, y) == one && ring.mul(y, x) == one)
        });
        let units: Vec<Element> = ring
            .elements()
            .filter(|x| inverse[x.index()].is_some())
            .collect();
        let idempotents: Vec<Element> = ring.elements().filter(|&x| ring.mul(x, x) == x).collect();
        // A nilpotent x has x^m = 0 for some m <= n, so x^(2^t) = 0 once
        // 2^t >= n.
        let squarings = usize::BITS - n.saturating_sub(1).leading_zeros();
        let nil_flags = strategy.map(n, |x| {
            let mut p = Element::from_index(x);
            for _ in 0..squarings {
                p = ring.mul(p, p);
            }
            p == ring.zero()
        });
        let nilpotents: Vec<Element> = ring.elements().filter(|x| nil_flags[x.index()]).collect();
        let is_unit = bits(n, &units);
        let jac_flags = strategy.map(n, |x| {
            let x = Element::from_index(x);
            ring.elements()
                .all(|y| is_unit.contains(ring.sub(one, ring.mul(y, x)).index()))
        });
        let jacobson: Vec<Element> = ring.elements().filter(|x| jac_flags[x.index()]).collect();
        RingCaches {
            is_idempotent: bits(n, &idempotents),
            is_nilpotent: bits(n, &nilpotents),
            is_jacobson: bits(n, &jacobson),
            is_unit,
            units,
            inverse,
            idempotents,
            nilpotents,
            jacobson,
        }
    }
}

/// A ring whose caches are populated. Immutable and cheap to clone; derefs
/// to the underlying [`Ring`].
#[derive(Debug, Clone)]
pub struct FrozenRing {
    ring: Ring,
    caches: Arc<RingCaches>,
}

impl Deref for FrozenRing {
    type Target = Ring;

    fn deref(&self) -> &Ring {
        &self.ring
    }
}

/// Populates the caches of `ring`. Fails when the ring is above the
/// classification cap.
pub fn freeze(ring: &Ring, caps: &Caps) -> Result<FrozenRing> {
    freeze_with(ring, caps, Strategy::default())
}

pub fn freeze_with(ring: &Ring, caps: &Caps, strategy: Strategy) -> Result<FrozenRing> {
    if ring.order() > caps.classify {
        return Err(Error::cap(
            "ring to classify",
            ring.order() as u128,
            caps.classify,
        ));
    }
    Ok(FrozenRing {
        ring: ring.clone(),
        caches: Arc::new(RingCaches::build(ring, strategy)),
    })
}

impl FrozenRing {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Freezing is idempotent.
    pub fn freeze(&self) -> FrozenRing {
        self.clone()
    }

    pub fn units(&self) -> &[Element] {
        &self.caches.units
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.caches.idempotents
    }

    pub fn nilpotents(&self) -> &[Element] {
        &self.caches.nilpotents
    }

    /// `{ x : 1 - yx is a unit for every y }`.
    pub fn jacobson(&self) -> &[Element] {
        &self.caches.jacobson
    }

    pub fn inverse(&self, u: Element) -> Option<Element> {
        self.caches.inverse[u.index()]
    }

    #[inline]
    pub fn is_unit(&self, x: Element) -> bool {
        self.caches.is_unit.contains(x.index())
    }

    #[inline]
    pub fn is_idempotent(&self, x: Element) -> bool {
        self.caches.is_idempotent.contains(x.index())
    }

    /// Cache lookup; see [`Ring::is_nilpotent`] for the direct computation.
    #[inline]
    pub fn in_nil(&self, x: Element) -> bool {
        self.caches.is_nilpotent.contains(x.index())
    }

    #[inline]
    pub fn in_jacobson(&self, x: Element) -> bool {
        self.caches.is_jacobson.contains(x.index())
    }

    /// Least `k` such that every product of `k` radical elements vanishes,
    /// found by iterating `J^k` as a set of products. `None` if no such
    /// `k <= order` exists.
    pub fn jacobson_nilpotency_index(&self) -> Option<usize> {
        let n = self.order();
        let jac = self.jacobson();
        // J^1 contains J; J^{k+1} = { p * j } spans products of k+1 factors.
        let mut power = FixedBitSet::with_capacity(n);
        for j in jac {
            power.insert(j.index());
        }
        for k in 1..=n {
            if power.ones().all(|p| p == 0) {
                return Some(k);
            }
            let mut next = FixedBitSet::with_capacity(n);
            for p in power.ones() {
                for j in jac {
                    next.insert(self.mul(Element::from_index(p), *j).index());
                }
            }
            power = next;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    fn frozen(n: u64) -> FrozenRing {
        freeze(&make_zmod(n, &Caps::DEFAULT).unwrap(), &Caps::DEFAULT).unwrap()
    }

    fn idx(v: &[Element]) -> Vec<usize> {
        v.iter().map(|e| e.index()).collect()
    }

    /// Integer oracles for Z(n) built without the ring kernel.
    fn oracle_sets(n: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let units = (0..n)
            .filter(|&x| (0..n).any(|y| (x * y) % n == 1 % n))
            .collect();
        let idem = (0..n).filter(|&x| (x * x) % n == x).collect();
        let nil = (0..n)
            .filter(|&x| {
                let mut p = x % n;
                (0..n + 1).any(|_| {
                    let z = p == 0;
                    p = (p * x) % n;
                    z
                })
            })
            .collect();
        (units, idem, nil)
    }

    #[test]
    fn zmod_examples() {
        assert_eq!(idx(frozen(6).idempotents()), vec![0, 1, 3, 4]);
        assert_eq!(idx(frozen(8).nilpotents()), vec![0, 2, 4, 6]);
        assert_eq!(idx(frozen(4).jacobson()), vec![0, 2]);
        assert_eq!(idx(frozen(6).jacobson()), vec![0]);
        let z1 = frozen(1);
        assert_eq!(idx(z1.units()), vec![0]);
        assert_eq!(idx(z1.idempotents()), vec![0]);
        assert_eq!(idx(z1.nilpotents()), vec![0]);
    }

    #[test]
    fn zmod_sets_match_integer_oracle() {
        for n in 1..=40 {
            let r = frozen(n as u64);
            let (u, i, nil) = oracle_sets(n);
            assert_eq!(idx(r.units()), u, "units of Z({n})");
            assert_eq!(idx(r.idempotents()), i, "idempotents of Z({n})");
            assert_eq!(idx(r.nilpotents()), nil, "nilpotents of Z({n})");
        }
    }

    #[test]
    fn cap_on_freeze() {
        let r = make_zmod(5000, &Caps::DEFAULT).unwrap();
        assert!(freeze(&r, &Caps::DEFAULT).unwrap_err().is_cap());
    }

    #[test]
    fn sequential_and_default_agree() {
        let r = make_zmod(360, &Caps::DEFAULT).unwrap();
        let a = freeze_with(&r, &Caps::DEFAULT, Strategy::Sequential).unwrap();
        let b = freeze(&r, &Caps::DEFAULT).unwrap();
        assert_eq!(a.units(), b.units());
        assert_eq!(a.nilpotents(), b.nilpotents());
        assert_eq!(a.jacobson(), b.jacobson());
    }

    #[test]
    fn jacobson_nilpotency() {
        assert_eq!(frozen(8).jacobson_nilpotency_index(), Some(3));
        assert_eq!(frozen(6).jacobson_nilpotency_index(), Some(1));
    }
}
