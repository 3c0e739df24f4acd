//! Rings built from a base ring: full and upper-triangular matrices, group
//! rings, trivial extensions, generalized matrix rings `Ks(R)` and formal
//! matrix rings `FM(k, R, s)`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::ring::{checked_order, Caps, Construction, Element, Ring};

/// Associativity of `FM` rings is checked on every triple up to this order.
pub const FORMAL_EXHAUSTIVE_ORDER: usize = 256;
/// Random triples checked above [`FORMAL_EXHAUSTIVE_ORDER`].
pub const FORMAL_SAMPLE_TRIPLES: usize = 100_000;

/// The full matrix ring `M(k, R)`.
pub fn matrix_ring(base: &Ring, k: usize, caps: &Caps) -> Result<Ring> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be at least 1".into(),
        ));
    }
    let order = checked_order("matrix ring", base.order(), k * k, caps)?;
    Ok(Ring::build(
        format!("M({k}, {})", base.label()),
        order,
        Construction::Matrix {
            base: base.clone(),
            k,
        },
    ))
}

/// Upper-triangular `k x k` matrices over `R`, graded by superdiagonal.
pub fn upper_triangular(base: &Ring, k: usize, caps: &Caps) -> Result<Ring> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "matrix size must be at least 1".into(),
        ));
    }
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let order = checked_order("upper-triangular ring", base.order(), cells.len(), caps)?;
    Ok(Ring::build(
        format!("U({k}, {})", base.label()),
        order,
        Construction::UpperTriangular {
            base: base.clone(),
            k,
            cells,
        },
    ))
}

/// The group ring `RG` with convolution product.
pub fn group_ring(base: &Ring, group: &FiniteGroup, caps: &Caps) -> Result<Ring> {
    let order = checked_order("group ring", base.order(), group.order(), caps)?;
    Ok(Ring::build(
        format!("GR({}, {})", base.label(), group.label()),
        order,
        Construction::GroupRing {
            base: base.clone(),
            group: Arc::new(group.clone()),
        },
    ))
}

/// The trivial extension `R ∝ R`: pairs `(a, m)` with
/// `(a, m)(a', m') = (aa', am' + ma')`.
pub fn trivial_extension(base: &Ring, caps: &Caps) -> Result<Ring> {
    let order = checked_order("trivial extension", base.order(), 2, caps)?;
    Ok(Ring::build(
        format!("Triv({})", base.label()),
        order,
        Construction::TrivialExtension { base: base.clone() },
    ))
}

fn require_central(base: &Ring, s: Element) -> Result<()> {
    if !base.is_central(s) {
        return Err(Error::NotCentral {
            ring: base.label().to_string(),
            element: base.literal(s).to_string(),
        });
    }
    Ok(())
}

fn check_element(base: &Ring, s: Element) -> Result<()> {
    if s.index() >= base.order() {
        return Err(Error::InvalidArgument(format!(
            "{s} is not an element of {}",
            base.label()
        )));
    }
    Ok(())
}

/// The generalized matrix ring `Ks(R)`: quadruples `(a, x, y, b)` laid out
/// as `[[a, x], [y, b]]` where both off-diagonal pairings are scaled by the
/// central element `s`.
pub fn generalized_matrix(base: &Ring, s: Element, caps: &Caps) -> Result<Ring> {
    check_element(base, s)?;
    require_central(base, s)?;
    let order = checked_order("generalized matrix ring", base.order(), 4, caps)?;
    Ok(Ring::build(
        format!("Ks({}, {})", base.label(), base.literal(s)),
        order,
        Construction::Generalized {
            base: base.clone(),
            s,
        },
    ))
}

/// Exponent of `s` weighting `a_im * b_mj` in `FM(k, R, s)`.
///
/// This is the coboundary of `h(p, q) = [p < q]`, namely
/// `[i < m] + [m < j] - [i < j]`. It is never negative, vanishes when
/// `m = i` or `m = j`, and for `k = 2` is `1` exactly on `(0,1,0)` and
/// `(1,0,1)`, which reproduces `Ks(R)`.
pub fn formal_exponent(i: usize, m: usize, j: usize) -> u32 {
    let lt = |p: usize, q: usize| u32::from(p < q);
    lt(i, m) + lt(m, j) - lt(i, j)
}

/// The formal matrix ring `FM(k, R, s)` for a central nilpotent `s`.
///
/// The multiplication is `(AB)_ij = sum_m s^e(i,m,j) a_im b_mj` with
/// `e =` [`formal_exponent`]. Associativity is verified before returning:
/// on all triples up to [`FORMAL_EXHAUSTIVE_ORDER`], otherwise on
/// [`FORMAL_SAMPLE_TRIPLES`] seeded random triples.
pub fn formal_matrix(base: &Ring, k: usize, s: Element, caps: &Caps) -> Result<Ring> {
    formal_matrix_with(base, k, s, caps, formal_exponent)
}

pub(crate) fn formal_matrix_with(
    base: &Ring,
    k: usize,
    s: Element,
    caps: &Caps,
    exponent: fn(usize, usize, usize) -> u32,
) -> Result<Ring> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "formal matrix rings need size at least 2".into(),
        ));
    }
    check_element(base, s)?;
    require_central(base, s)?;
    if !base.is_nilpotent(s) {
        return Err(Error::NotNilpotent {
            ring: base.label().to_string(),
            element: base.literal(s).to_string(),
        });
    }
    let order = checked_order("formal matrix ring", base.order(), k * k, caps)?;
    let mut weights = Vec::with_capacity(k * k * k);
    for i in 0..k {
        for m in 0..k {
            for j in 0..k {
                weights.push(base.pow(s, exponent(i, m, j) as u64));
            }
        }
    }
    let ring = Ring::build(
        format!("FM({k}, {}, {})", base.label(), base.literal(s)),
        order,
        Construction::Formal {
            base: base.clone(),
            k,
            s,
            weights,
        },
    );
    verify_associative(&ring)?;
    Ok(ring)
}

fn verify_associative(ring: &Ring) -> Result<()> {
    let violation = |a: Element, b: Element, c: Element| {
        ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))
    };
    let found = if ring.order() <= FORMAL_EXHAUSTIVE_ORDER {
        ring.elements()
            .flat_map(|a| ring.elements().map(move |b| (a, b)))
            .flat_map(|(a, b)| ring.elements().map(move |c| (a, b, c)))
            .find(|&(a, b, c)| violation(a, b, c))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0a1);
        let n = ring.order();
        (0..FORMAL_SAMPLE_TRIPLES).find_map(|_| {
            let mut pick = || Element::from_index(rng.gen_range(0..n));
            let (a, b, c) = (pick(), pick(), pick());
            violation(a, b, c).then_some((a, b, c))
        })
    };
    match found {
        None => Ok(()),
        Some((a, b, c)) => Err(Error::AssociativityViolation {
            ring: ring.label().to_string(),
            a: ring.literal(a).to_string(),
            b: ring.literal(b).to_string(),
            c: ring.literal(c).to_string(),
        }),
    }
}

/// Coefficient sum of a group-ring element, a ring homomorphism `RG -> R`
/// whose kernel is the augmentation ideal.
pub fn augmentation(group_ring: &Ring, x: Element) -> Result<Element> {
    let (Some(base), Some(_)) = (group_ring.base(), group_ring.group()) else {
        return Err(Error::WrongConstruction(group_ring.label().to_string()));
    };
    Ok(group_ring
        .codec()
        .decode(x)
        .iter()
        .fold(base.zero(), |acc, &c| base.add(acc, c)))
}

/// Builds a group-ring element from its coefficients, indexed by group
/// element.
pub fn group_ring_element(group_ring: &Ring, coefficients: &[Element]) -> Result<Element> {
    let Some(group) = group_ring.group() else {
        return Err(Error::WrongConstruction(group_ring.label().to_string()));
    };
    if coefficients.len() != group.order() {
        return Err(Error::InvalidArgument(format!(
            "expected {} coefficients",
            group.order()
        )));
    }
    Ok(group_ring.codec().encode(coefficients))
}

/// Builds a matrix-like element from its row-major entries. Works for `M`,
/// `FM` and `Ks` (entries `a, x, y, b`); for `U` pass only the cells on or
/// above the diagonal, row by row.
pub fn matrix_element(ring: &Ring, entries: &[Element]) -> Result<Element> {
    let len = match ring.construction() {
        Construction::Matrix { k, .. } | Construction::Formal { k, .. } => k * k,
        Construction::UpperTriangular { cells, .. } => cells.len(),
        Construction::Generalized { .. } => 4,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "{} is not a matrix ring",
                ring.label()
            )))
        }
    };
    if entries.len() != len {
        return Err(Error::InvalidArgument(format!("expected {len} entries")));
    }
    Ok(ring.codec().encode(entries))
}

/// Builds the pair `(a, m)` of a trivial extension or the pair `(l, r)` of a
/// direct product.
pub fn pair_element(ring: &Ring, first: Element, second: Element) -> Result<Element> {
    match ring.construction() {
        Construction::TrivialExtension { .. } | Construction::Product { .. } => {
            Ok(ring.codec().encode(&[first, second]))
        }
        _ => Err(Error::InvalidArgument(format!(
            "{} is not a pair construction",
            ring.label()
        ))),
    }
}

/// Entries of an element in the same layout [`matrix_element`],
/// [`group_ring_element`] and [`pair_element`] accept.
pub fn components(ring: &Ring, x: Element) -> Vec<Element> {
    match ring.construction() {
        Construction::Zmod { .. } => vec![x],
        _ => ring.codec().decode(x).into_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};
    use crate::ring::make_zmod;
    use serde_json::json;

    const CAPS: Caps = Caps::DEFAULT;

    fn z(n: u64) -> Ring {
        make_zmod(n, &CAPS).unwrap()
    }

    fn el(r: &Ring, i: usize) -> Element {
        r.element(i).unwrap()
    }

    #[test]
    fn matrix_orders_and_caps() {
        assert_eq!(matrix_ring(&z(2), 2, &CAPS).unwrap().order(), 16);
        assert_eq!(matrix_ring(&z(1), 3, &CAPS).unwrap().order(), 1);
        assert_eq!(matrix_ring(&z(4), 2, &CAPS).unwrap().order(), 256);
        assert!(matrix_ring(&z(5), 4, &CAPS).unwrap_err().is_cap());
    }

    #[test]
    fn matrix_product_is_row_by_column() {
        let m = matrix_ring(&z(5), 2, &CAPS).unwrap();
        let b = z(5);
        let a = matrix_element(&m, &[el(&b, 1), el(&b, 2), el(&b, 3), el(&b, 4)]).unwrap();
        let c = matrix_element(&m, &[el(&b, 2), el(&b, 0), el(&b, 1), el(&b, 3)]).unwrap();
        // [[1,2],[3,4]] [[2,0],[1,3]] = [[4,6],[10,12]] = [[4,1],[0,2]] mod 5
        assert_eq!(m.literal(m.mul(a, c)), json!([[4, 1], [0, 2]]));
        assert_eq!(m.literal(m.one()), json!([[1, 0], [0, 1]]));
    }

    #[test]
    fn upper_triangular_layout() {
        let u = upper_triangular(&z(2), 3, &CAPS).unwrap();
        assert_eq!(u.order(), 64);
        assert_eq!(u.literal(u.one()), json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        assert!(u.check_axioms(0, 0).is_none());
        let u2 = upper_triangular(&z(6), 2, &CAPS).unwrap();
        assert_eq!(u2.order(), 216);
    }

    #[test]
    fn group_ring_square_of_one_plus_g() {
        let r = group_ring(&z(2), &cyclic(2, &CAPS).unwrap(), &CAPS).unwrap();
        assert_eq!(r.order(), 4);
        let x = group_ring_element(&r, &[el(&z(2), 1), el(&z(2), 1)]).unwrap();
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(augmentation(&r, x).unwrap().index(), 0);
        assert_eq!(augmentation(&r, r.one()).unwrap().index(), 1);
    }

    #[test]
    fn augmentation_of_three_plus_two_g() {
        let b = z(4);
        let r = group_ring(&b, &cyclic(2, &CAPS).unwrap(), &CAPS).unwrap();
        let x = group_ring_element(&r, &[el(&b, 3), el(&b, 2)]).unwrap();
        assert_eq!(augmentation(&r, x).unwrap().index(), 1);
        assert!(matches!(
            augmentation(&b, b.one()),
            Err(Error::WrongConstruction(_))
        ));
    }

    #[test]
    fn group_ring_over_s3_is_noncommutative() {
        let r = group_ring(&z(2), &symmetric(3, &CAPS).unwrap(), &CAPS).unwrap();
        assert_eq!(r.order(), 64);
        assert!(!r.is_commutative());
        assert!(r.check_axioms(0, 0).is_none());
    }

    #[test]
    fn trivial_extension_square_zero() {
        let t = trivial_extension(&z(2), &CAPS).unwrap();
        let m = pair_element(&t, el(&z(2), 0), el(&z(2), 1)).unwrap();
        assert_eq!(t.mul(m, m), t.zero());
        assert_eq!(t.literal(m), json!({"a": 0, "m": 1}));
    }

    #[test]
    fn generalized_matrix_formula() {
        let b = z(4);
        let k = generalized_matrix(&b, el(&b, 2), &CAPS).unwrap();
        assert_eq!(k.order(), 256);
        // (0,1,0,0)(0,0,1,0): top-left = s*x1*y2 = 2
        let p = matrix_element(&k, &[el(&b, 0), el(&b, 1), el(&b, 0), el(&b, 0)]).unwrap();
        let q = matrix_element(&k, &[el(&b, 0), el(&b, 0), el(&b, 1), el(&b, 0)]).unwrap();
        assert_eq!(k.literal(k.mul(p, q)), json!([[2, 0], [0, 0]]));
        assert_eq!(k.literal(k.mul(q, p)), json!([[0, 0], [0, 2]]));
    }

    #[test]
    fn zero_pairing_kills_offdiagonal_products() {
        let b = z(2);
        let k = generalized_matrix(&b, b.zero(), &CAPS).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                for x2 in 0..2 {
                    for y2 in 0..2 {
                        let p = matrix_element(&k, &[el(&b, 0), el(&b, x), el(&b, y), el(&b, 0)])
                            .unwrap();
                        let q = matrix_element(&k, &[el(&b, 0), el(&b, x2), el(&b, y2), el(&b, 0)])
                            .unwrap();
                        assert_eq!(k.mul(p, q), k.zero());
                    }
                }
            }
        }
    }

    #[test]
    fn ks_requires_central_s() {
        let m = matrix_ring(&z(2), 2, &CAPS).unwrap();
        let e12 = matrix_element(
            &m,
            &[el(&z(2), 0), el(&z(2), 1), el(&z(2), 0), el(&z(2), 0)],
        )
        .unwrap();
        assert!(matches!(
            generalized_matrix(&m, e12, &CAPS),
            Err(Error::NotCentral { .. })
        ));
    }

    #[test]
    fn formal_k2_equals_generalized() {
        for (n, s) in [(4u64, 2usize), (2, 0), (8, 4), (9, 3)] {
            let b = z(n);
            let f = formal_matrix(&b, 2, el(&b, s), &CAPS).unwrap();
            let g = generalized_matrix(&b, el(&b, s), &CAPS).unwrap();
            assert_eq!(f.order(), g.order());
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), g.mul(x, y), "FM(2, Z({n}), {s})");
                }
            }
        }
    }

    #[test]
    fn formal_requires_nilpotent() {
        let b = z(4);
        assert!(matches!(
            formal_matrix(&b, 2, b.one(), &CAPS),
            Err(Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn formal_k3_passes_gate() {
        let b = z(2);
        let f = formal_matrix(&b, 3, b.zero(), &CAPS).unwrap();
        assert_eq!(f.order(), 512);
        let b4 = z(4);
        let roomy = Caps {
            arithmetic: 1 << 20,
            ..CAPS
        };
        assert!(formal_matrix(&b4, 3, el(&b4, 2), &CAPS)
            .unwrap_err()
            .is_cap());
        assert_eq!(
            formal_matrix(&b4, 3, el(&b4, 2), &roomy).unwrap().order(),
            262_144
        );
    }

    #[test]
    fn wrong_exponent_scheme_is_rejected() {
        // returns to the diagonal through another index only
        fn bad(i: usize, m: usize, j: usize) -> u32 {
            u32::from(i == j && m != i)
        }
        let b = z(2);
        let err = formal_matrix_with(&b, 3, b.zero(), &CAPS, bad).unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation { .. }));
    }

    #[test]
    fn exponent_cocycle_identity() {
        for k in 2..6 {
            for i in 0..k {
                for m in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            assert_eq!(
                                formal_exponent(i, m, j) + formal_exponent(i, j, l),
                                formal_exponent(m, j, l) + formal_exponent(i, m, l)
                            );
                        }
                    }
                }
            }
        }
    }
}
