//! Constructions and caches checked against plain integer arithmetic.

use finring::constructions::{components, group_ring_element, matrix_element};
use finring::deciders::{is_strongly_nil_clean, is_strongly_unit_nil_clean};
use finring::fastpath::gcd;
use finring::{classify, freeze, parse, Caps, Element, FrozenRing, Ring};

fn build(src: &str) -> Ring {
    parse(src).unwrap().build(&Caps::DEFAULT).unwrap()
}

fn frozen(src: &str) -> FrozenRing {
    freeze(&build(src), &Caps::DEFAULT).unwrap()
}

fn ints(r: &Ring, x: Element) -> Vec<u64> {
    components(r, x).iter().map(|c| c.index() as u64).collect()
}

fn det_unit_count(n: u64) -> usize {
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let det = (a * d + n * n - (b * c) % n) % n;
                    if gcd(det, n) == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

#[test]
fn gl2_orders_match_determinant_count() {
    assert_eq!(det_unit_count(2), 6);
    assert_eq!(det_unit_count(4), 96);
    for n in [2, 3, 4, 5, 6] {
        let r = frozen(&format!("M(2, Z({n}))"));
        assert_eq!(r.units().len(), det_unit_count(n), "n = {n}");
    }
}

#[test]
fn matrix_product_matches_integer_product() {
    let n = 3u64;
    let r = build("M(2, Z(3))");
    for x in r.elements() {
        for y in r.elements() {
            let (a, b) = (ints(&r, x), ints(&r, y));
            let want: Vec<u64> = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| (a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j]) % n)
                .collect();
            assert_eq!(ints(&r, r.mul(x, y)), want);
        }
    }
}

#[test]
fn cyclic_group_ring_is_convolution() {
    let (n, m) = (4u64, 3usize);
    let r = build("GR(Z(4), C(3))");
    for x in r.elements() {
        for y in r.elements() {
            let (a, b) = (ints(&r, x), ints(&r, y));
            let mut want = vec![0u64; m];
            for i in 0..m {
                for j in 0..m {
                    want[(i + j) % m] = (want[(i + j) % m] + a[i] * b[j]) % n;
                }
            }
            assert_eq!(ints(&r, r.mul(x, y)), want);
        }
    }
}

#[test]
fn small_construction_censuses() {
    assert_eq!(frozen("U(2, Z(2))").nilpotents().len(), 2);
    let triv = frozen("Triv(Z(3))");
    assert_eq!(triv.units().len(), 6);
    assert!(triv.units().iter().all(|&u| gcd(ints(&triv, u)[0], 3) == 1));
    assert_eq!(frozen("Ks(Z(2), 1)").units().len(), 6);
    assert_eq!(frozen("Ks(Z(2), 0)").units().len(), 4);
}

#[test]
fn zmod_idempotent_count_is_two_to_the_prime_count() {
    for n in 1..=120u64 {
        let primes = (2..=n)
            .filter(|p| n % p == 0 && (2..*p).all(|d| p % d != 0))
            .count();
        assert_eq!(
            frozen(&format!("Z({n})")).idempotents().len(),
            1 << primes,
            "n = {n}"
        );
    }
}

#[test]
fn m2_f2_witness_has_identity_defect() {
    let r = frozen("M(2, Z(2))");
    let f2 = r.base().unwrap();
    let e = |v: usize| f2.element(v).unwrap();
    let x = matrix_element(&r, &[e(0), e(1), e(1), e(1)]).unwrap();
    assert_eq!(r.sub(x, r.mul(x, x)), r.one());
    assert!(is_strongly_nil_clean(&r, x).is_none());
    let d = is_strongly_unit_nil_clean(&r, x).unwrap();
    assert!(d.verify(&r, x));
}

#[test]
fn headline_classifications() {
    let (_, z6) = classify(&build("Z(6)"), &Caps::DEFAULT).unwrap();
    assert!(z6.flags.unit_regular);
    let (r, z2c2) = classify(&build("GR(Z(2), C(2))"), &Caps::DEFAULT).unwrap();
    assert!(!z2c2.flags.regular);
    assert!(z2c2.flags.strongly_unit_nil_clean);
    let one = r.base().unwrap().one();
    let g = group_ring_element(&r, &[one, one]).unwrap();
    assert_eq!(z2c2.witnesses["regular"].element, g.index());
}
