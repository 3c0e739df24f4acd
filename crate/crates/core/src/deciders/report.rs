use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    is_clean, is_nil_clean, is_regular, is_strongly_nil_clean, is_strongly_pi_regular,
    is_strongly_regular, is_strongly_unit_nil_clean, is_unit_nil_clean, is_unit_regular,
    ni_violation, periodic_indices, NiViolation,
};
use crate::error::Result;
use crate::exec::Strategy;
use crate::frozen::{freeze_with, FrozenRing};
use crate::ring::{Caps, Element, Ring};

/// Ring-level properties; each holds iff it holds for every element (or, for
/// `ni` and `reduced`, for the nilpotent set).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub regular: bool,
    pub unit_regular: bool,
    pub strongly_regular: bool,
    pub clean: bool,
    pub nil_clean: bool,
    pub strongly_nil_clean: bool,
    pub unit_nil_clean: bool,
    pub strongly_unit_nil_clean: bool,
    pub strongly_pi_regular: bool,
    pub periodic: bool,
    pub ni: bool,
    pub reduced: bool,
}

impl Flags {
    pub const NAMES: [&'static str; 12] = [
        "regular",
        "unit_regular",
        "strongly_regular",
        "clean",
        "nil_clean",
        "strongly_nil_clean",
        "unit_nil_clean",
        "strongly_unit_nil_clean",
        "strongly_pi_regular",
        "periodic",
        "ni",
        "reduced",
    ];

    pub fn entries(&self) -> [(&'static str, bool); 12] {
        let v = [
            self.regular,
            self.unit_regular,
            self.strongly_regular,
            self.clean,
            self.nil_clean,
            self.strongly_nil_clean,
            self.unit_nil_clean,
            self.strongly_unit_nil_clean,
            self.strongly_pi_regular,
            self.periodic,
            self.ni,
            self.reduced,
        ];
        let mut out = [("", false); 12];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = (Self::NAMES[i], v[i]);
        }
        out
    }

    /// The first violated implication, if any.
    pub fn lattice_violation(&self) -> Option<&'static str> {
        let rules: [(bool, bool, &'static str); 8] = [
            (self.unit_regular, self.regular, "unit_regular => regular"),
            (
                self.strongly_nil_clean,
                self.nil_clean,
                "strongly_nil_clean => nil_clean",
            ),
            (
                self.nil_clean,
                self.unit_nil_clean,
                "nil_clean => unit_nil_clean",
            ),
            (
                self.strongly_nil_clean,
                self.strongly_unit_nil_clean,
                "strongly_nil_clean => strongly_unit_nil_clean",
            ),
            (
                self.strongly_unit_nil_clean,
                self.unit_nil_clean,
                "strongly_unit_nil_clean => unit_nil_clean",
            ),
            (self.nil_clean, self.clean, "nil_clean => clean"),
            (
                self.strongly_regular,
                self.regular,
                "strongly_regular => regular",
            ),
            (self.reduced, self.ni, "reduced => ni"),
        ];
        rules
            .iter()
            .find(|(premise, conclusion, _)| *premise && !*conclusion)
            .map(|r| r.2)
    }
}

/// How a non-elementwise witness was produced from nilpotent operands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Via {
    pub op: String,
    pub operands: [usize; 2],
}

/// An element refuting a flag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub element: usize,
    pub literal: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub via: Option<Via>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Radicals {
    pub jacobson: usize,
    pub nil: usize,
}

/// Classification of one ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub label: String,
    pub order: usize,
    pub flags: Flags,
    /// Least-index failing element for every false flag, keyed by flag name.
    pub witnesses: BTreeMap<String, Witness>,
    pub radicals: Radicals,
}

impl PropertyReport {
    /// Re-checks every stored witness against the element deciders.
    pub fn witnesses_verify(&self, r: &FrozenRing) -> bool {
        self.witnesses.iter().all(|(flag, w)| {
            let Some(x) = r.element(w.element) else {
                return false;
            };
            match flag.as_str() {
                "regular" => !is_regular(r, x),
                "unit_regular" => !is_unit_regular(r, x),
                "strongly_regular" => !is_strongly_regular(r, x),
                "clean" => is_clean(r, x).is_none(),
                "nil_clean" => is_nil_clean(r, x).is_none(),
                "strongly_nil_clean" => is_strongly_nil_clean(r, x).is_none(),
                "unit_nil_clean" => is_unit_nil_clean(r, x).is_none(),
                "strongly_unit_nil_clean" => is_strongly_unit_nil_clean(r, x).is_none(),
                "strongly_pi_regular" => !is_strongly_pi_regular(r, x),
                "periodic" => false,
                "reduced" => x != r.zero() && r.is_nilpotent(x),
                "ni" => {
                    let Some(via) = &w.via else { return false };
                    let (Some(a), Some(b)) =
                        (r.element(via.operands[0]), r.element(via.operands[1]))
                    else {
                        return false;
                    };
                    let produced = match via.op.as_str() {
                        "sum" if r.is_nilpotent(a) && r.is_nilpotent(b) => r.add(a, b),
                        "left" if r.is_nilpotent(b) => r.mul(a, b),
                        "right" if r.is_nilpotent(a) => r.mul(a, b),
                        _ => return false,
                    };
                    produced == x && !r.is_nilpotent(x)
                }
                _ => false,
            }
        })
    }
}

/// Freezes `ring` and classifies it.
pub fn classify(ring: &Ring, caps: &Caps) -> Result<(FrozenRing, PropertyReport)> {
    let frozen = freeze_with(ring, caps, Strategy::default())?;
    let report = classify_with(&frozen, Strategy::default());
    Ok((frozen, report))
}

/// Classifies a frozen ring. Each elementwise flag is a sweep that stops at
/// the least failing index.
pub fn classify_with(r: &FrozenRing, strategy: Strategy) -> PropertyReport {
    let n = r.order();
    let mut witnesses = BTreeMap::new();
    let literal = |x: Element| r.literal(x);
    let mut sweep = |name: &str, holds: &(dyn Fn(Element) -> bool + Sync)| -> bool {
        match strategy.first(n, |i| !holds(Element::from_index(i))) {
            None => true,
            Some(i) => {
                let x = Element::from_index(i);
                witnesses.insert(
                    name.to_string(),
                    Witness {
                        element: i,
                        literal: literal(x),
                        via: None,
                    },
                );
                false
            }
        }
    };

    let regular = sweep("regular", &|x| is_regular(r, x));
    let unit_regular = sweep("unit_regular", &|x| is_unit_regular(r, x));
    let strongly_regular = sweep("strongly_regular", &|x| is_strongly_regular(r, x));
    let clean = sweep("clean", &|x| is_clean(r, x).is_some());
    let nil_clean = sweep("nil_clean", &|x| is_nil_clean(r, x).is_some());
    let strongly_nil_clean = sweep("strongly_nil_clean", &|x| {
        is_strongly_nil_clean(r, x).is_some()
    });
    let unit_nil_clean = sweep("unit_nil_clean", &|x| is_unit_nil_clean(r, x).is_some());
    let strongly_unit_nil_clean = sweep("strongly_unit_nil_clean", &|x| {
        is_strongly_unit_nil_clean(r, x).is_some()
    });
    let strongly_pi_regular = sweep("strongly_pi_regular", &|x| is_strongly_pi_regular(r, x));
    let periodic = sweep("periodic", &|x| {
        let (m, k) = periodic_indices(r, x);
        m < k && r.pow(x, m as u64) == r.pow(x, k as u64)
    });

    let ni = match ni_violation(r) {
        None => true,
        Some(v) => {
            let (op, a, b) = match v {
                NiViolation::Sum(a, b) => ("sum", a, b),
                NiViolation::LeftMul(s, a) => ("left", s, a),
                NiViolation::RightMul(a, s) => ("right", a, s),
            };
            let x = v.result(r);
            witnesses.insert(
                "ni".to_string(),
                Witness {
                    element: x.index(),
                    literal: r.literal(x),
                    via: Some(Via {
                        op: op.to_string(),
                        operands: [a.index(), b.index()],
                    }),
                },
            );
            false
        }
    };
    let reduced = match r.nilpotents().iter().find(|&&b| b != r.zero()) {
        None => true,
        Some(&b) => {
            witnesses.insert(
                "reduced".to_string(),
                Witness {
                    element: b.index(),
                    literal: r.literal(b),
                    via: None,
                },
            );
            false
        }
    };

    PropertyReport {
        label: r.label().to_string(),
        order: n,
        flags: Flags {
            regular,
            unit_regular,
            strongly_regular,
            clean,
            nil_clean,
            strongly_nil_clean,
            unit_nil_clean,
            strongly_unit_nil_clean,
            strongly_pi_regular,
            periodic,
            ni,
            reduced,
        },
        witnesses,
        radicals: Radicals {
            jacobson: r.jacobson().len(),
            nil: r.nilpotents().len(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::matrix_ring;
    use crate::ring::make_zmod;

    const CAPS: Caps = Caps::DEFAULT;

    #[test]
    fn z6_is_unit_regular_and_reduced() {
        let (_, rep) = classify(&make_zmod(6, &CAPS).unwrap(), &CAPS).unwrap();
        assert!(rep.flags.unit_regular && rep.flags.reduced);
        assert!(!rep.witnesses.contains_key("unit_regular"));
    }

    #[test]
    fn z4_report() {
        let (r, rep) = classify(&make_zmod(4, &CAPS).unwrap(), &CAPS).unwrap();
        assert!(!rep.flags.unit_regular);
        assert_eq!(rep.witnesses["unit_regular"].element, 2);
        assert!(rep.flags.strongly_nil_clean);
        assert_eq!(
            rep.radicals,
            Radicals {
                jacobson: 2,
                nil: 2
            }
        );
        assert!(rep.witnesses_verify(&r));
    }

    #[test]
    fn zero_ring_all_true() {
        let (_, rep) = classify(&make_zmod(1, &CAPS).unwrap(), &CAPS).unwrap();
        assert!(rep.flags.entries().iter().all(|(_, v)| *v));
        assert!(rep.witnesses.is_empty());
    }

    #[test]
    fn m2z2_witnesses_reverify() {
        let m = matrix_ring(&make_zmod(2, &CAPS).unwrap(), 2, &CAPS).unwrap();
        let (r, rep) = classify(&m, &CAPS).unwrap();
        assert!(!rep.flags.ni);
        assert!(!rep.flags.strongly_nil_clean);
        assert!(rep.flags.strongly_unit_nil_clean);
        assert!(rep.flags.unit_regular);
        assert!(rep.witnesses_verify(&r));
        assert!(rep.flags.lattice_violation().is_none());
    }

    #[test]
    fn sequential_matches_default() {
        let m = matrix_ring(&make_zmod(3, &CAPS).unwrap(), 2, &CAPS).unwrap();
        let (r, rep) = classify(&m, &CAPS).unwrap();
        assert_eq!(classify_with(&r, Strategy::Sequential), rep);
    }

    #[test]
    fn json_flag_keys_match_names() {
        let (_, rep) = classify(&make_zmod(4, &CAPS).unwrap(), &CAPS).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        let keys: Vec<&str> = v["flags"]
            .as_object()
            .unwrap()
            .keys()
            .map(|k| k.as_str())
            .collect();
        let mut names = Flags::NAMES.to_vec();
        names.sort();
        let mut keys = keys;
        keys.sort();
        assert_eq!(keys, names);
    }
}
