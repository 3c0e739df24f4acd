//! Closed-form unit-regularity and regularity tests over `Z(n)` and `Z(n)G`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization(pub Vec<(u64, u32)>);

impl Factorization {
    pub fn product(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }
}

/// Trial-division factorization of `n >= 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut m = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(Factorization(out))
}

pub fn is_squarefree(n: u64) -> Result<bool> {
    Ok(factorize(n)?.is_squarefree())
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
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

/// `Z(n)` is unit-regular iff `n` is squarefree.
pub fn zn_unit_regular(n: u64) -> Result<bool> {
    is_squarefree(n)
}

/// `Z(n)G` is unit-regular iff `n` is squarefree and every element order of
/// `G` is coprime to `n`.
pub fn zng_unit_regular(n: u64, group: &FiniteGroup) -> Result<bool> {
    Ok(is_squarefree(n)?
        && group
            .element_orders()
            .iter()
            .all(|&o| gcd(n, o as u64) == 1))
}

/// The same test phrased through `|G|`: squarefree `n` with `gcd(n, |G|) = 1`.
pub fn zng_unit_regular_by_group_order(n: u64, group: &FiniteGroup) -> Result<bool> {
    Ok(is_squarefree(n)? && gcd(n, group.order() as u64) == 1)
}

/// Regularity of `Z(n)G`: `Z(n)` regular and every subgroup order a unit in
/// `Z(n)`. Over `Z(n)` regularity and unit-regularity coincide, so this is
/// the same formula as [`zng_unit_regular`].
pub fn connell_regular_zn(n: u64, group: &FiniteGroup) -> Result<bool> {
    zng_unit_regular(n, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::ring::Caps;
    use proptest::prelude::*;

    const CAPS: Caps = Caps::DEFAULT;

    #[test]
    fn factor_examples() {
        assert_eq!(factorize(6).unwrap().0, vec![(2, 1), (3, 1)]);
        assert!(is_squarefree(6).unwrap());
        assert_eq!(factorize(12).unwrap().0, vec![(2, 2), (3, 1)]);
        assert!(!is_squarefree(12).unwrap());
        assert!(factorize(1).unwrap().0.is_empty());
        assert!(is_squarefree(1).unwrap());
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factor_roundtrip_to_a_million() {
        for n in 1..=1_000_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.product(), n);
        }
    }

    #[test]
    fn factors_are_prime() {
        for n in 1..=5000u64 {
            for (p, _) in factorize(n).unwrap().0 {
                assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            }
        }
    }

    #[test]
    fn squarefree_examples() {
        assert!(zn_unit_regular(6).unwrap());
        assert!(!zn_unit_regular(4).unwrap());
        assert!(zn_unit_regular(1).unwrap());
    }

    #[test]
    fn group_ring_examples() {
        let c2 = cyclic(2, &CAPS).unwrap();
        let c3 = cyclic(3, &CAPS).unwrap();
        let c5 = cyclic(5, &CAPS).unwrap();
        let s3 = symmetric(3, &CAPS).unwrap();
        let trivial = cyclic(1, &CAPS).unwrap();
        assert!(zng_unit_regular(2, &c3).unwrap());
        assert!(!zng_unit_regular(2, &c2).unwrap());
        assert!(!zng_unit_regular(4, &c3).unwrap());
        assert!(!zng_unit_regular_by_group_order(2, &s3).unwrap());
        assert!(zng_unit_regular_by_group_order(5, &c2).unwrap());
        for n in 1..50 {
            assert_eq!(
                zng_unit_regular_by_group_order(n, &trivial).unwrap(),
                is_squarefree(n).unwrap()
            );
        }
        assert!(connell_regular_zn(2, &c3).unwrap());
        assert!(!connell_regular_zn(3, &s3).unwrap());
        assert!(connell_regular_zn(6, &c5).unwrap());
    }

    proptest! {
        #[test]
        fn element_and_group_order_forms_agree(n in 1u64..500, which in 0usize..6, m in 1usize..9) {
            let g = match which {
                0 => cyclic(m, &CAPS).unwrap(),
                1 => crate::groups::dihedral(m, &CAPS).unwrap(),
                2 => symmetric(m.min(4), &CAPS).unwrap(),
                3 => crate::groups::quaternion8(&CAPS).unwrap(),
                4 => crate::groups::group_product(&cyclic(m, &CAPS).unwrap(), &cyclic(2, &CAPS).unwrap(), &CAPS).unwrap(),
                _ => cyclic(1, &CAPS).unwrap(),
            };
            prop_assert_eq!(zng_unit_regular(n, &g).unwrap(), zng_unit_regular_by_group_order(n, &g).unwrap());
        }

        #[test]
        fn gcd_divides(a in 0u64..10_000, b in 0u64..10_000) {
            let g = gcd(a, b);
            if g > 0 {
                prop_assert_eq!(a % g, 0);
                prop_assert_eq!(b % g, 0);
            }
        }
    }
}
