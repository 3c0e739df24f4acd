//! Element- and ring-level decision procedures, all by exhaustive search over
//! a [`FrozenRing`].
//!
//! Searches are deterministic: idempotents and units are tried in ascending
//! index order and the first hit is returned.
//!
//! For finite rings the Jacobson radical is nilpotent, so the lower
//! nilradical, the Levitzki radical and `J(R)` coincide. "Weakly 2-primal"
//! is therefore decided by [`is_ni`], which holds exactly when
//! `Nil(R) = J(R)`.

mod morphic;
mod report;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frozen::FrozenRing;
use crate::ring::Element;

pub use morphic::{is_left_morphic, LeftIdealIndex};
pub use report::{classify, classify_with, Flags, PropertyReport, Radicals, Via, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    NilClean,
    StronglyNilClean,
    Clean,
}

/// `target = idempotent + other`, where `target` is `x` or, for the unit
/// variants, `unit_multiplier * x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub target: Element,
    pub idempotent: Element,
    pub other: Element,
    pub unit_multiplier: Option<Element>,
}

impl Decomposition {
    /// Re-checks the decomposition of `x` against the ring arithmetic.
    pub fn verify(&self, r: &FrozenRing, x: Element) -> bool {
        let target = match self.unit_multiplier {
            Some(u) => {
                if !r.is_unit(u) {
                    return false;
                }
                r.mul(u, x)
            }
            None => x,
        };
        let (e, b) = (self.idempotent, self.other);
        let other_ok = match self.kind {
            DecompositionKind::Clean => r.is_unit(b),
            _ => r.is_nilpotent(b),
        };
        let commute_ok =
            self.kind != DecompositionKind::StronglyNilClean || r.mul(e, b) == r.mul(b, e);
        target == self.target && r.add(e, b) == target && r.mul(e, e) == e && other_ok && commute_ok
    }
}

/// `x = x y x` for some `y`.
pub fn is_regular(r: &FrozenRing, x: Element) -> bool {
    regular_inverse(r, x).is_some()
}

/// Least `y` with `x y x = x`.
pub fn regular_inverse(r: &FrozenRing, x: Element) -> Option<Element> {
    r.elements().find(|&y| r.mul(r.mul(x, y), x) == x)
}

/// `x = x u x` for some unit `u`.
pub fn is_unit_regular(r: &FrozenRing, x: Element) -> bool {
    unit_regular_inverse(r, x).is_some()
}

pub fn unit_regular_inverse(r: &FrozenRing, x: Element) -> Option<Element> {
    r.units()
        .iter()
        .copied()
        .find(|&u| r.mul(r.mul(x, u), x) == x)
}

/// `x ∈ x²R ∩ Rx²`.
pub fn is_strongly_regular(r: &FrozenRing, x: Element) -> bool {
    let sq = r.mul(x, x);
    r.elements().any(|y| r.mul(sq, y) == x) && r.elements().any(|z| r.mul(z, sq) == x)
}

/// `x = e + b` with `e` idempotent and `b` nilpotent.
pub fn is_nil_clean(r: &FrozenRing, x: Element) -> Option<Decomposition> {
    r.idempotents().iter().find_map(|&e| {
        let b = r.sub(x, e);
        r.in_nil(b).then_some(Decomposition {
            kind: DecompositionKind::NilClean,
            target: x,
            idempotent: e,
            other: b,
            unit_multiplier: None,
        })
    })
}

/// Nil-clean with commuting parts.
pub fn is_strongly_nil_clean(r: &FrozenRing, x: Element) -> Option<Decomposition> {
    r.idempotents().iter().find_map(|&e| {
        let b = r.sub(x, e);
        (r.in_nil(b) && r.mul(e, b) == r.mul(b, e)).then_some(Decomposition {
            kind: DecompositionKind::StronglyNilClean,
            target: x,
            idempotent: e,
            other: b,
            unit_multiplier: None,
        })
    })
}

/// `x - x²` is nilpotent. Equivalent to strong nil-cleanness but decided
/// without any idempotent search.
pub fn snc_poly_criterion(r: &FrozenRing, x: Element) -> bool {
    r.in_nil(r.sub(x, r.mul(x, x)))
}

/// `u x` is nil-clean for some unit `u`.
pub fn is_unit_nil_clean(r: &FrozenRing, x: Element) -> Option<Decomposition> {
    r.units().iter().find_map(|&u| {
        is_nil_clean(r, r.mul(u, x)).map(|d| Decomposition {
            unit_multiplier: Some(u),
            ..d
        })
    })
}

/// `u x` is strongly nil-clean for some unit `u`. Units are screened with
/// [`snc_poly_criterion`]; the decomposition is then recovered by the
/// idempotent search, and both must agree.
pub fn is_strongly_unit_nil_clean(r: &FrozenRing, x: Element) -> Option<Decomposition> {
    r.units().iter().find_map(|&u| {
        let ux = r.mul(u, x);
        if !snc_poly_criterion(r, ux) {
            return None;
        }
        is_strongly_nil_clean(r, ux).map(|d| Decomposition {
            unit_multiplier: Some(u),
            ..d
        })
    })
}

/// `x = e + u` with `e` idempotent and `u` a unit.
pub fn is_clean(r: &FrozenRing, x: Element) -> Option<Decomposition> {
    r.idempotents().iter().find_map(|&e| {
        let u = r.sub(x, e);
        r.is_unit(u).then_some(Decomposition {
            kind: DecompositionKind::Clean,
            target: x,
            idempotent: e,
            other: u,
            unit_multiplier: None,
        })
    })
}

/// Lexicographically least `(m, n)` with `1 <= m < n` and `x^m = x^n`.
pub fn periodic_indices(r: &FrozenRing, x: Element) -> (usize, usize) {
    let mut first_seen: Vec<u32> = vec![0; r.order()];
    let mut p = x;
    let mut k = 1usize;
    loop {
        let slot = &mut first_seen[p.index()];
        if *slot != 0 {
            return (*slot as usize, k);
        }
        *slot = k as u32;
        p = r.mul(p, x);
        k += 1;
    }
}

/// Some power `x^k`, `k` up to the second periodic index, is strongly
/// regular.
pub fn is_strongly_pi_regular(r: &FrozenRing, x: Element) -> bool {
    strongly_pi_regular_exponent(r, x).is_some()
}

pub fn strongly_pi_regular_exponent(r: &FrozenRing, x: Element) -> Option<usize> {
    let (_, bound) = periodic_indices(r, x);
    let mut p = x;
    for k in 1..=bound {
        if is_strongly_regular(r, p) {
            return Some(k);
        }
        p = r.mul(p, x);
    }
    None
}

fn check_potency(m: u64) -> Result<()> {
    if m <= 1 {
        return Err(Error::InvalidArgument(format!(
            "potency exponent must exceed 1, got {m}"
        )));
    }
    Ok(())
}

/// `x^m = x`.
pub fn is_m_potent(r: &FrozenRing, x: Element, m: u64) -> Result<bool> {
    check_potency(m)?;
    Ok(r.pow(x, m) == x)
}

/// Every element is an `m`-potent plus a commuting nilpotent.
pub fn ring_strongly_m_nil_clean(r: &FrozenRing, m: u64) -> Result<bool> {
    check_potency(m)?;
    let potents: Vec<Element> = r.elements().filter(|&p| r.pow(p, m) == p).collect();
    Ok(r.elements().all(|x| {
        potents.iter().any(|&p| {
            let b = r.sub(x, p);
            r.in_nil(b) && r.mul(p, b) == r.mul(b, p)
        })
    }))
}

/// The set of nilpotent elements.
pub fn nil_set(r: &FrozenRing) -> &[Element] {
    r.nilpotents()
}

/// Why the nilpotent set fails to be an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiViolation {
    Sum(Element, Element),
    LeftMul(Element, Element),
    RightMul(Element, Element),
}

impl NiViolation {
    /// The non-nilpotent element produced from nilpotent operands.
    pub fn result(&self, r: &FrozenRing) -> Element {
        match *self {
            NiViolation::Sum(a, b) => r.add(a, b),
            NiViolation::LeftMul(s, a) => r.mul(s, a),
            NiViolation::RightMul(a, s) => r.mul(a, s),
        }
    }
}

/// First failure of closure of `Nil(R)` under addition and two-sided
/// multiplication by ring elements.
pub fn ni_violation(r: &FrozenRing) -> Option<NiViolation> {
    let nil = r.nilpotents();
    for &a in nil {
        for &b in nil {
            if !r.in_nil(r.add(a, b)) {
                return Some(NiViolation::Sum(a, b));
            }
        }
    }
    for &a in nil {
        for s in r.elements() {
            if !r.in_nil(r.mul(s, a)) {
                return Some(NiViolation::LeftMul(s, a));
            }
            if !r.in_nil(r.mul(a, s)) {
                return Some(NiViolation::RightMul(a, s));
            }
        }
    }
    None
}

/// `Nil(R)` is an ideal. At finite scale this is also the weakly 2-primal
/// test (see the module docs).
pub fn is_ni(r: &FrozenRing) -> bool {
    ni_violation(r).is_none()
}

pub fn is_reduced(r: &FrozenRing) -> bool {
    r.nilpotents().len() == 1
}

/// `J(R)` is closed under addition and two-sided multiplication.
pub fn jacobson_is_ideal(r: &FrozenRing) -> bool {
    let jac = r.jacobson();
    jac.iter()
        .all(|&a| jac.iter().all(|&b| r.in_jacobson(r.add(a, b))))
        && jac.iter().all(|&a| {
            r.elements()
                .all(|s| r.in_jacobson(r.mul(s, a)) && r.in_jacobson(r.mul(a, s)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_element, matrix_ring};
    use crate::frozen::freeze;
    use crate::ring::{make_zmod, Caps, Ring};

    const CAPS: Caps = Caps::DEFAULT;

    fn fz(n: u64) -> FrozenRing {
        freeze(&make_zmod(n, &CAPS).unwrap(), &CAPS).unwrap()
    }

    fn el(r: &Ring, i: usize) -> Element {
        r.element(i).unwrap()
    }

    fn m2z2() -> FrozenRing {
        freeze(
            &matrix_ring(&make_zmod(2, &CAPS).unwrap(), 2, &CAPS).unwrap(),
            &CAPS,
        )
        .unwrap()
    }

    fn mat(r: &FrozenRing, e: [usize; 4]) -> Element {
        let b = r.base().unwrap();
        let entries: Vec<Element> = e.iter().map(|&i| el(b, i)).collect();
        matrix_element(r, &entries).unwrap()
    }

    #[test]
    fn regular_examples() {
        let z4 = fz(4);
        assert!(!is_regular(&z4, el(&z4, 2)));
        let z6 = fz(6);
        assert!(is_regular(&z6, el(&z6, 2)));
        assert_eq!(regular_inverse(&z6, el(&z6, 2)), Some(el(&z6, 2)));
        assert!(is_regular(&z4, z4.zero()));
    }

    #[test]
    fn unit_regular_examples() {
        let z6 = fz(6);
        assert!(z6.elements().all(|x| is_unit_regular(&z6, x)));
        let z4 = fz(4);
        assert!(!is_unit_regular(&z4, el(&z4, 2)));
        assert!(is_unit_regular(&z4, z4.one()));
    }

    #[test]
    fn strongly_regular_examples() {
        let z12 = fz(12);
        for x in z12.elements() {
            assert_eq!(is_strongly_regular(&z12, x), is_regular(&z12, x));
        }
        let m = m2z2();
        let e12 = mat(&m, [0, 1, 0, 0]);
        assert!(!is_strongly_regular(&m, e12));
        for &e in m.idempotents() {
            assert!(is_strongly_regular(&m, e));
        }
    }

    #[test]
    fn nil_clean_examples() {
        let z3 = fz(3);
        assert!(is_nil_clean(&z3, el(&z3, 2)).is_none());
        let z4 = fz(4);
        let d = is_nil_clean(&z4, el(&z4, 3)).unwrap();
        assert_eq!((d.idempotent.index(), d.other.index()), (1, 2));
        let z6 = fz(6);
        let d = is_nil_clean(&z6, el(&z6, 4)).unwrap();
        assert_eq!((d.idempotent.index(), d.other.index()), (4, 0));
    }

    #[test]
    fn strongly_nil_clean_examples() {
        let m = m2z2();
        let x = mat(&m, [0, 1, 1, 1]);
        assert!(is_strongly_nil_clean(&m, x).is_none());
        assert!(!snc_poly_criterion(&m, x));
        assert_eq!(m.sub(x, m.mul(x, x)), m.one());
        let z4 = fz(4);
        let d = is_strongly_nil_clean(&z4, el(&z4, 3)).unwrap();
        assert_eq!((d.idempotent.index(), d.other.index()), (1, 2));
        assert!(d.verify(&z4, el(&z4, 3)));
        assert!(snc_poly_criterion(&z4, el(&z4, 3)));
        for &b in m.nilpotents() {
            let d = is_strongly_nil_clean(&m, b).unwrap();
            assert!(d.verify(&m, b));
        }
        let d = is_strongly_nil_clean(&m, mat(&m, [0, 1, 0, 0])).unwrap();
        assert_eq!(d.idempotent, m.zero());
    }

    #[test]
    fn unit_nil_clean_examples() {
        let z6 = fz(6);
        let two = el(&z6, 2);
        let d = is_unit_nil_clean(&z6, two).unwrap();
        assert!(d.verify(&z6, two));
        // Z(6): 1*2 = 2 is not nil-clean (2 - 0, 2 - 1, 2 - 3, 2 - 4 are
        // 2, 1, 5, 4, none nilpotent), so the unit found is 5.
        assert_eq!(d.unit_multiplier, Some(el(&z6, 5)));
        assert_eq!(d.target, el(&z6, 4));
        let d = is_strongly_unit_nil_clean(&z6, two).unwrap();
        assert_eq!(d.unit_multiplier, Some(el(&z6, 5)));
        let z4 = fz(4);
        let d = is_unit_nil_clean(&z4, el(&z4, 3)).unwrap();
        assert_eq!(d.unit_multiplier, Some(z4.one()));
    }

    #[test]
    fn m2z2_is_strongly_unit_nil_clean_everywhere() {
        let m = m2z2();
        for x in m.elements() {
            let d = is_strongly_unit_nil_clean(&m, x).expect("witness");
            assert!(d.verify(&m, x));
        }
    }

    #[test]
    fn clean_examples() {
        let z3 = fz(3);
        let d = is_clean(&z3, el(&z3, 2)).unwrap();
        assert_eq!((d.idempotent.index(), d.other.index()), (0, 2));
        let d = is_clean(&z3, z3.one()).unwrap();
        assert_eq!((d.idempotent.index(), d.other.index()), (0, 1));
    }

    #[test]
    fn periodic_examples() {
        let z4 = fz(4);
        assert_eq!(periodic_indices(&z4, el(&z4, 2)), (2, 3));
        assert_eq!(periodic_indices(&z4, el(&z4, 3)), (1, 3));
        let z6 = fz(6);
        for &e in z6.idempotents() {
            assert_eq!(periodic_indices(&z6, e), (1, 2));
        }
    }

    #[test]
    fn strongly_pi_regular_examples() {
        let z8 = fz(8);
        assert_eq!(strongly_pi_regular_exponent(&z8, el(&z8, 2)), Some(3));
        for &u in z8.units() {
            assert_eq!(strongly_pi_regular_exponent(&z8, u), Some(1));
        }
    }

    #[test]
    fn m_potent_examples() {
        let z3 = fz(3);
        assert!(is_m_potent(&z3, el(&z3, 2), 3).unwrap());
        assert!(is_m_potent(&z3, el(&z3, 2), 1).is_err());
        let z4 = fz(4);
        assert!(ring_strongly_m_nil_clean(&z4, 3).unwrap());
        assert!(ring_strongly_m_nil_clean(&z4, 0).is_err());
        let z5 = fz(5);
        assert!(!ring_strongly_m_nil_clean(&z5, 2).unwrap());
        for &e in z5.idempotents() {
            assert!(is_m_potent(&z5, e, 7).unwrap());
        }
    }

    #[test]
    fn ni_examples() {
        let z6 = fz(6);
        assert!(is_reduced(&z6) && is_ni(&z6));
        let m = m2z2();
        assert!(!is_ni(&m));
        let v = ni_violation(&m).unwrap();
        assert!(!m.in_nil(v.result(&m)));
        let z4 = fz(4);
        assert!(is_ni(&z4));
        assert_eq!(nil_set(&z4), z4.jacobson());
        assert!(!is_reduced(&z4));
    }
}
