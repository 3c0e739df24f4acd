//! The finite-ring kernel: element handles, arithmetic over every supported
//! construction, and the base rings `Z(n)` and direct products.
//!
//! Elements are canonical indices `0..order`. Rings built from a base ring
//! store their elements as tuples of base elements packed in base-`|R|`
//! digits, so index `0` is always the zero element.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::groups::FiniteGroup;

/// Rings at or below this order get full addition and multiplication tables.
pub const TABLE_THRESHOLD: usize = 1024;

/// Ring axioms are checked on all triples up to this order and on random
/// triples above it.
pub const EXHAUSTIVE_LAW_ORDER: usize = 256;

/// Size limits for construction and classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest ring that may be frozen and classified.
    pub classify: usize,
    /// Largest ring that may be constructed for arithmetic.
    pub arithmetic: usize,
    /// Largest group.
    pub group: usize,
}

impl Caps {
    pub const DEFAULT: Caps = Caps {
        classify: 4096,
        arithmetic: 65536,
        group: 64,
    };

    /// Caps with the classification limit replaced by `n`.
    pub fn with_classify_cap(n: usize) -> Caps {
        Caps {
            classify: n,
            arithmetic: Caps::DEFAULT.arithmetic.max(n),
            ..Caps::DEFAULT
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::DEFAULT
    }
}

/// An element of a finite ring, identified by its canonical index.
///
/// Only meaningful together with the ring that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) const fn from_index(i: usize) -> Element {
        Element(i as u32)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

type Digits = SmallVec<[Element; 16]>;

/// Packs tuples of base elements into indices.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Codec {
    base: usize,
    len: usize,
}

impl Codec {
    pub(crate) fn new(base: usize, len: usize) -> Codec {
        Codec { base, len }
    }

    pub(crate) fn decode(&self, x: Element) -> Digits {
        let mut v = x.index();
        (0..self.len)
            .map(|_| {
                let d = v % self.base;
                v /= self.base;
                Element::from_index(d)
            })
            .collect()
    }

    pub(crate) fn encode(&self, digits: &[Element]) -> Element {
        debug_assert_eq!(digits.len(), self.len);
        let idx = digits
            .iter()
            .rev()
            .fold(0usize, |acc, d| acc * self.base + d.index());
        Element::from_index(idx)
    }
}

/// What a ring was built as. Exposed in a payload-free form by [`Ring::kind`].
#[derive(Clone)]
pub(crate) enum Construction {
    Zmod {
        n: u32,
    },
    Product {
        left: Ring,
        right: Ring,
    },
    Matrix {
        base: Ring,
        k: usize,
    },
    UpperTriangular {
        base: Ring,
        k: usize,
        /// Row-major `(i, j)` positions with `i <= j`.
        cells: Vec<(usize, usize)>,
    },
    GroupRing {
        base: Ring,
        group: Arc<FiniteGroup>,
    },
    TrivialExtension {
        base: Ring,
    },
    Generalized {
        base: Ring,
        s: Element,
    },
    Formal {
        base: Ring,
        k: usize,
        s: Element,
        /// `weights[(i*k + m)*k + j]` scales `a_im * b_mj`.
        weights: Vec<Element>,
    },
}

/// Payload-free tag of a ring's construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Zmod,
    Product,
    Matrix,
    UpperTriangular,
    GroupRing,
    TrivialExtension,
    Generalized,
    Formal,
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

struct Inner {
    label: String,
    order: usize,
    one: Element,
    construction: Construction,
    codec: Codec,
    tables: Option<Tables>,
}

/// A finite ring with materialized or evaluator-backed arithmetic.
///
/// Cloning is cheap; all clones share the same arithmetic.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.0.label)
            .field("order", &self.0.order)
            .finish()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

/// Checked order computation used by every constructor.
pub(crate) fn checked_order(
    what: &'static str,
    base: usize,
    exponent: usize,
    caps: &Caps,
) -> Result<usize> {
    let mut order: u128 = 1;
    for _ in 0..exponent {
        order = order.saturating_mul(base as u128);
        if order > caps.arithmetic as u128 {
            // keep going only far enough to report a sensible number
            order = order.min(u64::MAX as u128);
        }
    }
    if order > caps.arithmetic as u128 {
        return Err(Error::cap(what, order, caps.arithmetic));
    }
    Ok(order as usize)
}

impl Ring {
    pub(crate) fn build(label: String, order: usize, construction: Construction) -> Ring {
        let codec = match &construction {
            Construction::Zmod { n } => Codec::new(*n as usize, 1),
            Construction::Product { left, .. } => Codec::new(left.order(), 2),
            Construction::Matrix { base, k } => Codec::new(base.order(), k * k),
            Construction::UpperTriangular { base, cells, .. } => {
                Codec::new(base.order(), cells.len())
            }
            Construction::GroupRing { base, group } => Codec::new(base.order(), group.order()),
            Construction::TrivialExtension { base } => Codec::new(base.order(), 2),
            Construction::Generalized { base, .. } => Codec::new(base.order(), 4),
            Construction::Formal { base, k, .. } => Codec::new(base.order(), k * k),
        };
        let mut inner = Inner {
            label,
            order,
            one: Element::ZERO,
            construction,
            codec,
            tables: None,
        };
        inner.one = inner.compute_one();
        let mut ring = Ring(Arc::new(inner));
        if order <= TABLE_THRESHOLD {
            let tables = ring.materialize();
            Arc::get_mut(&mut ring.0)
                .expect("fresh ring is uniquely owned")
                .tables = Some(tables);
        }
        ring
    }

    fn materialize(&self) -> Tables {
        let n = self.order();
        let rows = |f: fn(&Inner, Element, Element) -> Element| -> Vec<u16> {
            Strategy::default()
                .map(n, |a| {
                    (0..n)
                        .map(|b| {
                            f(&self.0, Element::from_index(a), Element::from_index(b)).index()
                                as u16
                        })
                        .collect::<Vec<u16>>()
                })
                .concat()
        };
        let add = rows(Inner::add_eval);
        let mul = rows(Inner::mul_eval);
        let neg = (0..n)
            .map(|a| self.0.neg_eval(Element::from_index(a)).index() as u16)
            .collect();
        Tables { add, mul, neg }
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn one(&self) -> Element {
        self.0.one
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    /// The element with canonical index `i`, if in range.
    pub fn element(&self, i: usize) -> Option<Element> {
        (i < self.order()).then(|| Element::from_index(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(Element::from_index)
    }

    pub fn kind(&self) -> Kind {
        match &self.0.construction {
            Construction::Zmod { .. } => Kind::Zmod,
            Construction::Product { .. } => Kind::Product,
            Construction::Matrix { .. } => Kind::Matrix,
            Construction::UpperTriangular { .. } => Kind::UpperTriangular,
            Construction::GroupRing { .. } => Kind::GroupRing,
            Construction::TrivialExtension { .. } => Kind::TrivialExtension,
            Construction::Generalized { .. } => Kind::Generalized,
            Construction::Formal { .. } => Kind::Formal,
        }
    }

    pub(crate) fn construction(&self) -> &Construction {
        &self.0.construction
    }

    pub(crate) fn codec(&self) -> Codec {
        self.0.codec
    }

    /// The ring this one was built over, for single-base constructions.
    pub fn base(&self) -> Option<&Ring> {
        match &self.0.construction {
            Construction::Zmod { .. } | Construction::Product { .. } => None,
            Construction::Matrix { base, .. }
            | Construction::UpperTriangular { base, .. }
            | Construction::GroupRing { base, .. }
            | Construction::TrivialExtension { base }
            | Construction::Generalized { base, .. }
            | Construction::Formal { base, .. } => Some(base),
        }
    }

    /// Both factors of a direct product.
    pub fn factors(&self) -> Option<(&Ring, &Ring)> {
        match &self.0.construction {
            Construction::Product { left, right } => Some((left, right)),
            _ => None,
        }
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match &self.0.construction {
            Construction::GroupRing { group, .. } => Some(group),
            _ => None,
        }
    }

    /// The modulus `n` when this ring is `Z(n)`.
    pub fn modulus(&self) -> Option<u64> {
        match &self.0.construction {
            Construction::Zmod { n } => Some(*n as u64),
            _ => None,
        }
    }

    /// Matrix size for matrix-like constructions.
    pub fn matrix_size(&self) -> Option<usize> {
        match &self.0.construction {
            Construction::Matrix { k, .. }
            | Construction::UpperTriangular { k, .. }
            | Construction::Formal { k, .. } => Some(*k),
            Construction::Generalized { .. } => Some(2),
            _ => None,
        }
    }

    /// The pairing scalar of `Ks` and `FM` rings, as a base element.
    pub fn pairing_scalar(&self) -> Option<Element> {
        match &self.0.construction {
            Construction::Generalized { s, .. } | Construction::Formal { s, .. } => Some(*s),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.0.tables {
            Some(t) => Element(t.add[a.index() * self.0.order + b.index()] as u32),
            None => self.0.add_eval(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.0.tables {
            Some(t) => Element(t.mul[a.index() * self.0.order + b.index()] as u32),
            None => self.0.mul_eval(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        match &self.0.tables {
            Some(t) => Element(t.neg[a.index()] as u32),
            None => self.0.neg_eval(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// `x^k`, with `x^0 = 1`.
    pub fn pow(&self, x: Element, mut k: u64) -> Element {
        let mut acc = self.one();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The image of the integer `v` under `Z -> R`.
    pub fn from_int(&self, v: i64) -> Element {
        let mut acc = self.zero();
        let mut step = self.one();
        let mut k = v.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, step);
            }
            step = self.add(step, step);
            k >>= 1;
        }
        if v < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// True iff some power of `x` is zero, found by walking `x, x^2, ...`
    /// until a power repeats.
    pub fn is_nilpotent(&self, x: Element) -> bool {
        let mut seen = fixedbitset::FixedBitSet::with_capacity(self.order());
        let mut p = x;
        loop {
            if p == self.zero() {
                return true;
            }
            if seen.put(p.index()) {
                return false;
            }
            p = self.mul(p, x);
        }
    }

    pub fn is_central(&self, s: Element) -> bool {
        self.elements().all(|x| self.mul(s, x) == self.mul(x, s))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A human-auditable literal for `x`: integers for `Z(n)`, row lists for
    /// matrices, coefficient maps for group rings.
    pub fn literal(&self, x: Element) -> Value {
        let inner = &self.0;
        match &inner.construction {
            Construction::Zmod { .. } => json!(x.index()),
            Construction::Product { left, right } => {
                let n = left.order();
                json!([
                    left.literal(Element::from_index(x.index() % n)),
                    right.literal(Element::from_index(x.index() / n))
                ])
            }
            Construction::Matrix { base, k } | Construction::Formal { base, k, .. } => {
                let d = inner.codec.decode(x);
                let rows: Vec<Value> = (0..*k)
                    .map(|i| Value::Array((0..*k).map(|j| base.literal(d[i * k + j])).collect()))
                    .collect();
                Value::Array(rows)
            }
            Construction::UpperTriangular { base, k, cells } => {
                let d = inner.codec.decode(x);
                let rows: Vec<Value> = (0..*k)
                    .map(|i| {
                        Value::Array(
                            (0..*k)
                                .map(|j| match cells.iter().position(|&c| c == (i, j)) {
                                    Some(p) => base.literal(d[p]),
                                    None => base.literal(base.zero()),
                                })
                                .collect(),
                        )
                    })
                    .collect();
                Value::Array(rows)
            }
            Construction::Generalized { base, .. } => {
                let d = inner.codec.decode(x);
                json!([
                    [base.literal(d[0]), base.literal(d[1])],
                    [base.literal(d[2]), base.literal(d[3])]
                ])
            }
            Construction::GroupRing { base, group } => {
                let d = inner.codec.decode(x);
                let map: serde_json::Map<String, Value> = d
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != base.zero())
                    .map(|(g, c)| (group.name(g).to_string(), base.literal(*c)))
                    .collect();
                Value::Object(map)
            }
            Construction::TrivialExtension { base } => {
                let d = inner.codec.decode(x);
                json!({ "a": base.literal(d[0]), "m": base.literal(d[1]) })
            }
        }
    }

    /// Checks the ring axioms: exhaustively up to [`EXHAUSTIVE_LAW_ORDER`],
    /// otherwise on `samples` seeded random triples. Returns a description of
    /// the first violation.
    pub fn check_axioms(&self, samples: usize, seed: u64) -> Option<String> {
        let n = self.order();
        let (zero, one) = (self.zero(), self.one());
        if n > 1 && zero == one {
            return Some("zero equals one in a nonzero ring".into());
        }
        for a in self.elements() {
            if self.add(a, zero) != a || self.add(zero, a) != a {
                return Some(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, one) != a || self.mul(one, a) != a {
                return Some(format!("{a} * 1 != {a}"));
            }
            if self.add(a, self.neg(a)) != zero {
                return Some(format!("{a} + (-{a}) != 0"));
            }
        }
        let triple = |a: Element, b: Element, c: Element| -> Option<String> {
            if self.add(a, b) != self.add(b, a) {
                return Some(format!("addition does not commute at ({a}, {b})"));
            }
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Some(format!("addition not associative at ({a}, {b}, {c})"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Some(format!("multiplication not associative at ({a}, {b}, {c})"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Some(format!("left distributivity fails at ({a}, {b}, {c})"));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return Some(format!("right distributivity fails at ({a}, {b}, {c})"));
            }
            None
        };
        if n <= EXHAUSTIVE_LAW_ORDER {
            let hit = Strategy::default().first(n, |a| {
                let a = Element::from_index(a);
                self.elements()
                    .any(|b| self.elements().any(|c| triple(a, b, c).is_some()))
            })?;
            let a = Element::from_index(hit);
            self.elements()
                .flat_map(|b| self.elements().map(move |c| (b, c)))
                .find_map(|(b, c)| triple(a, b, c))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples).find_map(|_| {
                let mut pick = || Element::from_index(rng.gen_range(0..n));
                let (a, b, c) = (pick(), pick(), pick());
                triple(a, b, c)
            })
        }
    }
}

impl Inner {
    fn compute_one(&self) -> Element {
        match &self.construction {
            Construction::Zmod { n } => Element::from_index((1 % n) as usize),
            Construction::Product { left, right } => {
                Element::from_index(left.one().index() + left.order() * right.one().index())
            }
            Construction::Matrix { base, k } | Construction::Formal { base, k, .. } => {
                let mut d: Digits = SmallVec::from_elem(base.zero(), k * k);
                for i in 0..*k {
                    d[i * k + i] = base.one();
                }
                self.codec.encode(&d)
            }
            Construction::UpperTriangular { base, cells, .. } => {
                let d: Digits = cells
                    .iter()
                    .map(|&(i, j)| if i == j { base.one() } else { base.zero() })
                    .collect();
                self.codec.encode(&d)
            }
            Construction::GroupRing { base, group } => {
                let mut d: Digits = SmallVec::from_elem(base.zero(), group.order());
                d[group.identity()] = base.one();
                self.codec.encode(&d)
            }
            Construction::TrivialExtension { base } => {
                self.codec.encode(&[base.one(), base.zero()])
            }
            Construction::Generalized { base, .. } => {
                self.codec
                    .encode(&[base.one(), base.zero(), base.zero(), base.one()])
            }
        }
    }

    fn componentwise(
        &self,
        base: &Ring,
        a: Element,
        b: Element,
        f: fn(&Ring, Element, Element) -> Element,
    ) -> Element {
        let (x, y) = (self.codec.decode(a), self.codec.decode(b));
        let z: Digits = x.iter().zip(&y).map(|(&p, &q)| f(base, p, q)).collect();
        self.codec.encode(&z)
    }

    fn add_eval(&self, a: Element, b: Element) -> Element {
        match &self.construction {
            Construction::Zmod { n } => Element::from_index((a.index() + b.index()) % *n as usize),
            Construction::Product { left, right } => {
                let n = left.order();
                let l = left.add(
                    Element::from_index(a.index() % n),
                    Element::from_index(b.index() % n),
                );
                let r = right.add(
                    Element::from_index(a.index() / n),
                    Element::from_index(b.index() / n),
                );
                Element::from_index(l.index() + n * r.index())
            }
            Construction::Matrix { base, .. }
            | Construction::UpperTriangular { base, .. }
            | Construction::GroupRing { base, .. }
            | Construction::TrivialExtension { base }
            | Construction::Generalized { base, .. }
            | Construction::Formal { base, .. } => self.componentwise(base, a, b, Ring::add),
        }
    }

    fn neg_eval(&self, a: Element) -> Element {
        match &self.construction {
            Construction::Zmod { n } => {
                let n = *n as usize;
                Element::from_index((n - a.index()) % n)
            }
            Construction::Product { left, right } => {
                let n = left.order();
                let l = left.neg(Element::from_index(a.index() % n));
                let r = right.neg(Element::from_index(a.index() / n));
                Element::from_index(l.index() + n * r.index())
            }
            Construction::Matrix { base, .. }
            | Construction::UpperTriangular { base, .. }
            | Construction::GroupRing { base, .. }
            | Construction::TrivialExtension { base }
            | Construction::Generalized { base, .. }
            | Construction::Formal { base, .. } => {
                let z: Digits = self.codec.decode(a).iter().map(|&p| base.neg(p)).collect();
                self.codec.encode(&z)
            }
        }
    }

    fn mul_eval(&self, a: Element, b: Element) -> Element {
        match &self.construction {
            Construction::Zmod { n } => {
                Element::from_index(((a.index() as u64 * b.index() as u64) % *n as u64) as usize)
            }
            Construction::Product { left, right } => {
                let n = left.order();
                let l = left.mul(
                    Element::from_index(a.index() % n),
                    Element::from_index(b.index() % n),
                );
                let r = right.mul(
                    Element::from_index(a.index() / n),
                    Element::from_index(b.index() / n),
                );
                Element::from_index(l.index() + n * r.index())
            }
            Construction::Matrix { base, k } => {
                let (x, y) = (self.codec.decode(a), self.codec.decode(b));
                let k = *k;
                let z: Digits = (0..k * k)
                    .map(|ij| {
                        let (i, j) = (ij / k, ij % k);
                        (0..k).fold(base.zero(), |acc, m| {
                            base.add(acc, base.mul(x[i * k + m], y[m * k + j]))
                        })
                    })
                    .collect();
                self.codec.encode(&z)
            }
            Construction::UpperTriangular { base, k, cells } => {
                let (x, y) = (self.codec.decode(a), self.codec.decode(b));
                let k = *k;
                // position of (i, j), i <= j, in the row-major cell list
                let pos = |i: usize, j: usize| i * k - i * i.saturating_sub(1) / 2 + j - i;
                debug_assert!(cells.iter().enumerate().all(|(p, &(i, j))| pos(i, j) == p));
                let z: Digits = cells
                    .iter()
                    .map(|&(i, j)| {
                        (i..=j).fold(base.zero(), |acc, m| {
                            base.add(acc, base.mul(x[pos(i, m)], y[pos(m, j)]))
                        })
                    })
                    .collect();
                self.codec.encode(&z)
            }
            Construction::GroupRing { base, group } => {
                let (x, y) = (self.codec.decode(a), self.codec.decode(b));
                let mut z: Digits = SmallVec::from_elem(base.zero(), group.order());
                for (h, &xh) in x.iter().enumerate() {
                    if xh == base.zero() {
                        continue;
                    }
                    for (g, &yg) in y.iter().enumerate() {
                        if yg == base.zero() {
                            continue;
                        }
                        let t = group.mul(h, g);
                        z[t] = base.add(z[t], base.mul(xh, yg));
                    }
                }
                self.codec.encode(&z)
            }
            Construction::TrivialExtension { base } => {
                let (x, y) = (self.codec.decode(a), self.codec.decode(b));
                let first = base.mul(x[0], y[0]);
                let second = base.add(base.mul(x[0], y[1]), base.mul(x[1], y[0]));
                self.codec.encode(&[first, second])
            }
            Construction::Generalized { base, s } => {
                // (a1 x1; y1 b1)(a2 x2; y2 b2)
                let (p, q) = (self.codec.decode(a), self.codec.decode(b));
                let (a1, x1, y1, b1) = (p[0], p[1], p[2], p[3]);
                let (a2, x2, y2, b2) = (q[0], q[1], q[2], q[3]);
                let m = |u, v| base.mul(u, v);
                let top_left = base.add(m(a1, a2), m(*s, m(x1, y2)));
                let top_right = base.add(m(a1, x2), m(x1, b2));
                let bottom_left = base.add(m(y1, a2), m(b1, y2));
                let bottom_right = base.add(m(*s, m(y1, x2)), m(b1, b2));
                self.codec
                    .encode(&[top_left, top_right, bottom_left, bottom_right])
            }
            Construction::Formal {
                base, k, weights, ..
            } => {
                let (x, y) = (self.codec.decode(a), self.codec.decode(b));
                let k = *k;
                let z: Digits = (0..k * k)
                    .map(|ij| {
                        let (i, j) = (ij / k, ij % k);
                        (0..k).fold(base.zero(), |acc, m| {
                            let term = base.mul(x[i * k + m], y[m * k + j]);
                            base.add(acc, base.mul(weights[(i * k + m) * k + j], term))
                        })
                    })
                    .collect();
                self.codec.encode(&z)
            }
        }
    }
}

/// The residue ring `Z(n)`.
pub fn make_zmod(n: u64, caps: &Caps) -> Result<Ring> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z(0) is not a finite ring".into()));
    }
    if n > caps.arithmetic as u64 {
        return Err(Error::cap("Z(n)", n as u128, caps.arithmetic));
    }
    Ok(Ring::build(
        format!("Z({n})"),
        n as usize,
        Construction::Zmod { n: n as u32 },
    ))
}

/// The componentwise product `R x S`.
pub fn direct_product(left: &Ring, right: &Ring, caps: &Caps) -> Result<Ring> {
    let order = left.order() as u128 * right.order() as u128;
    if order > caps.arithmetic as u128 {
        return Err(Error::cap("direct product", order, caps.arithmetic));
    }
    Ok(Ring::build(
        format!("{} x {}", left.label(), right.label()),
        order as usize,
        Construction::Product {
            left: left.clone(),
            right: right.clone(),
        },
    ))
}
