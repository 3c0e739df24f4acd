use serde::Serialize;
use serde_json::{json, Value};

use super::{run_suite, Evidence, Outcome, SuiteFailure, SuiteReport};
use crate::constructions::{
    augmentation, generalized_matrix, group_ring, matrix_ring, upper_triangular,
};
use crate::deciders::{
    is_ni, is_regular, is_strongly_nil_clean, is_strongly_unit_nil_clean, is_unit_regular,
    jacobson_is_ideal, periodic_indices, snc_poly_criterion, LeftIdealIndex,
};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::expr::{GroupExpr, RingExpr};
use crate::fastpath::{
    connell_regular_zn, zn_unit_regular, zng_unit_regular, zng_unit_regular_by_group_order,
};
use crate::frozen::{freeze_with, FrozenRing};
use crate::groups::cyclic;
use crate::ring::{make_zmod, Caps, Element, Ring};

/// Caps and execution strategy shared by every suite.
#[derive(Debug, Clone, Copy, Default)]
pub struct Harness {
    pub caps: Caps,
    pub strategy: Strategy,
}

pub(crate) fn failure(
    case: &str,
    check: &str,
    expected: impl Serialize,
    got: impl Serialize,
    witness: Option<Value>,
) -> SuiteFailure {
    SuiteFailure {
        case: case.to_string(),
        check: check.to_string(),
        expected: serde_json::to_value(expected).expect("serializable"),
        got: serde_json::to_value(got).expect("serializable"),
        witness,
        report: None,
        shrunk: None,
    }
}

pub(crate) fn witness(r: &Ring, x: Element) -> Value {
    json!({ "element": x.index(), "literal": r.literal(x) })
}

fn outcome(failures: Vec<SuiteFailure>) -> Outcome {
    if failures.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail(failures)
    }
}

fn skip_reason(e: Error) -> Outcome {
    Outcome::Skip(e.to_string())
}

/// Least element failing `holds`, or `None` if it holds everywhere.
pub(crate) fn first_failure(
    r: &FrozenRing,
    strategy: Strategy,
    holds: impl Fn(Element) -> bool + Sync + Send,
) -> Option<Element> {
    strategy
        .first(r.order(), |i| !holds(Element::from_index(i)))
        .map(Element::from_index)
}

/// Counts of `(order, units, idempotents, nilpotents)`.
pub fn census(r: &FrozenRing) -> (usize, usize, usize, usize) {
    (
        r.order(),
        r.units().len(),
        r.idempotents().len(),
        r.nilpotents().len(),
    )
}

pub(crate) fn sunc_failure(r: &FrozenRing, strategy: Strategy) -> Option<Element> {
    first_failure(r, strategy, |x| is_strongly_unit_nil_clean(r, x).is_some())
}

// ---- individual checks, shared with the falsifier ----

pub(crate) fn check_snc_criterion(
    case: &str,
    r: &FrozenRing,
    strategy: Strategy,
) -> Vec<SuiteFailure> {
    first_failure(r, strategy, |x| {
        is_strongly_nil_clean(r, x).is_some() == snc_poly_criterion(r, x)
    })
    .map(|x| {
        failure(
            case,
            "strongly nil-clean iff x - x^2 nilpotent",
            snc_poly_criterion(r, x),
            is_strongly_nil_clean(r, x).is_some(),
            Some(witness(r, x)),
        )
    })
    .into_iter()
    .collect()
}

pub(crate) fn check_morphic(case: &str, r: &FrozenRing, strategy: Strategy) -> Vec<SuiteFailure> {
    let index = LeftIdealIndex::new(r, strategy);
    first_failure(r, strategy, |x| {
        is_unit_regular(r, x) == (is_regular(r, x) && index.is_left_morphic(x))
    })
    .map(|x| {
        failure(
            case,
            "unit-regular iff regular and left morphic",
            is_regular(r, x) && index.is_left_morphic(x),
            is_unit_regular(r, x),
            Some(witness(r, x)),
        )
    })
    .into_iter()
    .collect()
}

pub(crate) fn check_sunc_universal(
    case: &str,
    r: &FrozenRing,
    strategy: Strategy,
) -> Vec<SuiteFailure> {
    let mut out = Vec::new();
    let bad = first_failure(r, strategy, |x| match is_strongly_unit_nil_clean(r, x) {
        None => false,
        Some(d) => {
            let u = d.unit_multiplier.expect("unit variant records its unit");
            d.verify(r, x) && snc_poly_criterion(r, r.mul(u, x))
        }
    });
    if let Some(x) = bad {
        out.push(failure(
            case,
            "strongly unit nil-clean witness re-verifies",
            true,
            false,
            Some(witness(r, x)),
        ));
    }
    // u x strongly nil-clean for some unit u iff x - x^2 nilpotent after
    // multiplying by some unit
    let bad = first_failure(r, strategy, |x| {
        let by_poly = r
            .units()
            .iter()
            .any(|&u| snc_poly_criterion(r, r.mul(u, x)));
        let by_search = r
            .units()
            .iter()
            .any(|&u| is_strongly_nil_clean(r, r.mul(u, x)).is_some());
        by_poly == by_search
    });
    if let Some(x) = bad {
        out.push(failure(
            case,
            "unit-multiplied criterion agrees with search",
            true,
            false,
            Some(witness(r, x)),
        ));
    }
    out
}

pub(crate) fn check_radicals(case: &str, r: &FrozenRing) -> Vec<SuiteFailure> {
    let mut out = Vec::new();
    if !jacobson_is_ideal(r) {
        out.push(failure(case, "J is an ideal", true, false, None));
    }
    if let Some(&x) = r.jacobson().iter().find(|&&x| !r.in_nil(x)) {
        out.push(failure(
            case,
            "J inside Nil",
            true,
            false,
            Some(witness(r, x)),
        ));
    }
    if r.jacobson_nilpotency_index().is_none() {
        out.push(failure(case, "J is nilpotent", true, false, None));
    }
    let nil_equals_j = r.nilpotents() == r.jacobson();
    if is_ni(r) != nil_equals_j {
        out.push(failure(
            case,
            "NI iff Nil = J",
            nil_equals_j,
            is_ni(r),
            None,
        ));
    }
    if let Some(&x) = r.units().iter().find(|&&u| {
        r.inverse(u)
            .is_none_or(|v| r.inverse(v) != Some(u) || r.mul(u, v) != r.one())
    }) {
        out.push(failure(
            case,
            "inverse is an involution",
            true,
            false,
            Some(witness(r, x)),
        ));
    }
    if r.units().len() <= 256 {
        let closed = r
            .units()
            .iter()
            .all(|&u| r.units().iter().all(|&v| r.is_unit(r.mul(u, v))));
        if !closed {
            out.push(failure(
                case,
                "units closed under product",
                true,
                false,
                None,
            ));
        }
    }
    if let Some(x) = r.elements().find(|&x| r.is_nilpotent(x) != r.in_nil(x)) {
        out.push(failure(
            case,
            "power iteration agrees with nilpotent cache",
            r.in_nil(x),
            r.is_nilpotent(x),
            Some(witness(r, x)),
        ));
    }
    out
}

pub(crate) fn check_periodic(case: &str, r: &FrozenRing, strategy: Strategy) -> Vec<SuiteFailure> {
    first_failure(r, strategy, |x| {
        let (m, n) = periodic_indices(r, x);
        m >= 1 && m < n && r.pow(x, m as u64) == r.pow(x, n as u64)
    })
    .map(|x| failure(case, "periodic", true, false, Some(witness(r, x))))
    .into_iter()
    .collect()
}

/// Every element of the augmentation kernel is nilpotent when `G` is a
/// `p`-group and `p` is nilpotent in the base.
pub(crate) fn check_augmentation_nil(case: &str, rg: &FrozenRing) -> Vec<SuiteFailure> {
    let (Some(base), Some(group)) = (rg.base(), rg.group()) else {
        return Vec::new();
    };
    let Some(p) = group.p_group_prime() else {
        return Vec::new();
    };
    if !base.is_nilpotent(base.from_int(p as i64)) {
        return Vec::new();
    }
    rg.elements()
        .find(|&x| augmentation(rg, x).expect("group ring") == base.zero() && !rg.in_nil(x))
        .map(|x| {
            failure(
                case,
                "augmentation kernel is nil for p-groups with p nilpotent",
                true,
                false,
                Some(witness(rg, x)),
            )
        })
        .into_iter()
        .collect()
}

impl Harness {
    pub fn new(caps: Caps, strategy: Strategy) -> Harness {
        Harness { caps, strategy }
    }

    pub(crate) fn freeze(&self, ring: &Ring) -> Result<FrozenRing> {
        freeze_with(ring, &self.caps, self.strategy)
    }

    pub(crate) fn freeze_expr(&self, e: &RingExpr) -> Result<FrozenRing> {
        self.freeze(&e.build(&self.caps)?)
    }

    fn zng(&self, n: u64, g: &GroupExpr) -> Result<(FrozenRing, crate::groups::FiniteGroup)> {
        let group = g.build(&self.caps)?;
        let ring = group_ring(&make_zmod(n, &self.caps)?, &group, &self.caps)?;
        Ok((self.freeze(&ring)?, group))
    }

    /// `Z(n)` is unit-regular exactly when `n` is squarefree, for
    /// `1 <= n <= n_max`.
    pub fn zn_unit_regular_suite(&self, n_max: u64) -> Result<SuiteReport> {
        if n_max > 256 {
            return Err(Error::InvalidArgument(format!(
                "n_max must be at most 256, got {n_max}"
            )));
        }
        let cases: Vec<u64> = (1..=n_max).collect();
        Ok(run_suite(
            "zn-unit-regular",
            Evidence::Discriminating,
            &cases,
            self.strategy,
            |n| format!("Z({n})"),
            |&n| {
                let case = format!("Z({n})");
                let r = match make_zmod(n, &self.caps).and_then(|r| self.freeze(&r)) {
                    Ok(r) => r,
                    Err(e) => return skip_reason(e),
                };
                let fast = zn_unit_regular(n).expect("n >= 1");
                let bad = first_failure(&r, self.strategy, |x| is_unit_regular(&r, x));
                let brute = bad.is_none();
                let mut out = Vec::new();
                if brute != fast {
                    out.push(failure(
                        &case,
                        "unit-regular",
                        fast,
                        brute,
                        bad.map(|x| witness(&r, x)),
                    ));
                }
                outcome(out)
            },
        ))
    }

    /// Unit-regularity of `Z(n)G` against the squarefree/coprime-orders test.
    pub fn zng_unit_regular_suite(&self, cases: &[(u64, GroupExpr)]) -> SuiteReport {
        run_suite(
            "zng-unit-regular",
            Evidence::Discriminating,
            cases,
            self.strategy,
            |(n, g)| format!("GR(Z({n}), {g})"),
            |(n, g)| {
                let case = format!("GR(Z({n}), {g})");
                let (r, group) = match self.zng(*n, g) {
                    Ok(v) => v,
                    Err(e) => return skip_reason(e),
                };
                let fast = zng_unit_regular(*n, &group).expect("n >= 1");
                let by_order = zng_unit_regular_by_group_order(*n, &group).expect("n >= 1");
                let bad = first_failure(&r, self.strategy, |x| is_unit_regular(&r, x));
                let brute = bad.is_none();
                let mut out = Vec::new();
                if brute != fast {
                    out.push(failure(
                        &case,
                        "unit-regular",
                        fast,
                        brute,
                        bad.map(|x| witness(&r, x)),
                    ));
                }
                if fast != by_order {
                    out.push(failure(
                        &case,
                        "element orders vs group order",
                        fast,
                        by_order,
                        None,
                    ));
                }
                outcome(out)
            },
        )
    }

    /// Regularity of `Z(n)G` against the subgroup-order test, plus the
    /// coincidence of regularity and unit-regularity over `Z(n)`.
    pub fn zng_regular_suite(&self, cases: &[(u64, GroupExpr)]) -> SuiteReport {
        run_suite(
            "zng-regular",
            Evidence::Discriminating,
            cases,
            self.strategy,
            |(n, g)| format!("GR(Z({n}), {g})"),
            |(n, g)| {
                let case = format!("GR(Z({n}), {g})");
                let (r, group) = match self.zng(*n, g) {
                    Ok(v) => v,
                    Err(e) => return skip_reason(e),
                };
                let fast = connell_regular_zn(*n, &group).expect("n >= 1");
                let bad_reg = first_failure(&r, self.strategy, |x| is_regular(&r, x));
                let bad_ur = first_failure(&r, self.strategy, |x| is_unit_regular(&r, x));
                let mut out = Vec::new();
                if bad_reg.is_none() != fast {
                    out.push(failure(
                        &case,
                        "regular",
                        fast,
                        bad_reg.is_none(),
                        bad_reg.map(|x| witness(&r, x)),
                    ));
                }
                if bad_reg.is_none() != bad_ur.is_none() {
                    out.push(failure(
                        &case,
                        "regular iff unit-regular",
                        bad_reg.is_none(),
                        bad_ur.is_none(),
                        bad_ur.map(|x| witness(&r, x)),
                    ));
                }
                outcome(out)
            },
        )
    }

    /// `M(k, R)` is strongly unit nil-clean iff `R` is, over NI bases.
    pub fn matrix_sunc_suite(&self, bases: &[RingExpr], k: usize) -> SuiteReport {
        run_suite(
            "matrix-sunc",
            Evidence::Consistency,
            bases,
            self.strategy,
            |b| format!("M({k}, {b})"),
            |b| {
                let case = format!("M({k}, {b})");
                let base = match self.freeze_expr(b) {
                    Ok(r) => r,
                    Err(e) => return skip_reason(e),
                };
                if !is_ni(&base) {
                    return Outcome::Skip("base is not NI".into());
                }
                let m = match matrix_ring(&base, k, &self.caps).and_then(|m| self.freeze(&m)) {
                    Ok(m) => m,
                    Err(e) => return skip_reason(e),
                };
                let base_bad = sunc_failure(&base, self.strategy);
                let m_bad = sunc_failure(&m, self.strategy);
                let mut out = Vec::new();
                if base_bad.is_none() != m_bad.is_none() {
                    out.push(failure(
                        &case,
                        "matrix ring matches base",
                        base_bad.is_none(),
                        m_bad.is_none(),
                        m_bad.map(|x| witness(&m, x)),
                    ));
                }
                if let Some(x) = m_bad {
                    out.push(failure(
                        &case,
                        "strongly unit nil-clean",
                        true,
                        false,
                        Some(witness(&m, x)),
                    ));
                }
                outcome(out)
            },
        )
    }

    /// `Ks(R)`, `FM(k, R, s)` with nilpotent `s`, `U(k, R)` and `Triv(R)` are
    /// strongly unit nil-clean iff `R` is.
    pub fn morita_sunc_suite(&self, cases: &[RingExpr]) -> SuiteReport {
        run_suite(
            "morita-sunc",
            Evidence::Consistency,
            cases,
            self.strategy,
            |e| e.to_string(),
            |e| {
                let case = e.to_string();
                let ring = match e.build(&self.caps) {
                    Ok(r) => r,
                    Err(err) => return skip_reason(err),
                };
                let Some(base) = ring.base().cloned() else {
                    return Outcome::Skip("not built over a base ring".into());
                };
                if let Some(s) = ring.pairing_scalar() {
                    if !base.is_nilpotent(s) {
                        return Outcome::Skip("pairing scalar is not nilpotent".into());
                    }
                }
                let (r, b) = match (self.freeze(&ring), self.freeze(&base)) {
                    (Ok(r), Ok(b)) => (r, b),
                    (Err(err), _) | (_, Err(err)) => return skip_reason(err),
                };
                let r_bad = sunc_failure(&r, self.strategy);
                let b_bad = sunc_failure(&b, self.strategy);
                let mut out = Vec::new();
                if r_bad.is_none() != b_bad.is_none() {
                    out.push(failure(
                        &case,
                        "matches base ring",
                        b_bad.is_none(),
                        r_bad.is_none(),
                        r_bad.map(|x| witness(&r, x)),
                    ));
                }
                if let Some(x) = r_bad {
                    out.push(failure(
                        &case,
                        "strongly unit nil-clean",
                        true,
                        false,
                        Some(witness(&r, x)),
                    ));
                }
                outcome(out)
            },
        )
    }

    /// Group rings over finite groups are strongly unit nil-clean; the base
    /// inherits the property as a homomorphic image.
    pub fn group_ring_sunc_suite(&self, cases: &[(RingExpr, GroupExpr)]) -> SuiteReport {
        run_suite(
            "group-ring-sunc",
            Evidence::Consistency,
            cases,
            self.strategy,
            |(r, g)| format!("GR({r}, {g})"),
            |(re, ge)| {
                let case = format!("GR({re}, {ge})");
                let built = re.build(&self.caps).and_then(|base| {
                    let g = ge.build(&self.caps)?;
                    let rg = group_ring(&base, &g, &self.caps)?;
                    Ok((self.freeze(&base)?, self.freeze(&rg)?))
                });
                let (base, rg) = match built {
                    Ok(v) => v,
                    Err(e) => return skip_reason(e),
                };
                let rg_bad = sunc_failure(&rg, self.strategy);
                let base_bad = sunc_failure(&base, self.strategy);
                let mut out = Vec::new();
                if let Some(x) = rg_bad {
                    out.push(failure(
                        &case,
                        "strongly unit nil-clean",
                        true,
                        false,
                        Some(witness(&rg, x)),
                    ));
                }
                if rg_bad.is_none() {
                    if let Some(x) = base_bad {
                        out.push(failure(
                            &case,
                            "base inherits from group ring",
                            true,
                            false,
                            Some(witness(&base, x)),
                        ));
                    }
                }
                out.extend(check_augmentation_nil(&case, &rg));
                outcome(out)
            },
        )
    }

    /// Every element of `RG` is periodic, as is every element of `R`.
    pub fn periodic_group_ring_suite(&self, cases: &[(RingExpr, GroupExpr)]) -> SuiteReport {
        run_suite(
            "periodic",
            Evidence::Consistency,
            cases,
            self.strategy,
            |(r, g)| format!("GR({r}, {g})"),
            |(re, ge)| {
                let case = format!("GR({re}, {ge})");
                let built = re.build(&self.caps).and_then(|base| {
                    let g = ge.build(&self.caps)?;
                    let rg = group_ring(&base, &g, &self.caps)?;
                    Ok((self.freeze(&base)?, self.freeze(&rg)?))
                });
                let (base, rg) = match built {
                    Ok(v) => v,
                    Err(e) => return skip_reason(e),
                };
                let mut out = check_periodic(&case, &rg, self.strategy);
                out.extend(check_periodic(
                    &format!("{case} base"),
                    &base,
                    self.strategy,
                ));
                outcome(out)
            },
        )
    }

    /// Decomposition search for strong nil-cleanness agrees with nilpotency
    /// of `x - x^2` on every element.
    pub fn snc_criterion_suite(&self, corpus: &[RingExpr]) -> SuiteReport {
        self.corpus_suite(
            "snc-criterion",
            Evidence::Discriminating,
            corpus,
            |case, r| check_snc_criterion(case, r, self.strategy),
        )
    }

    /// Unit-regular iff regular and left morphic, on every element of rings
    /// of order at most 512.
    pub fn morphic_unit_regular_suite(&self, corpus: &[RingExpr]) -> SuiteReport {
        let small: Vec<RingExpr> = corpus
            .iter()
            .filter(|e| e.build(&self.caps).map_or(true, |r| r.order() <= 512))
            .cloned()
            .collect();
        self.corpus_suite(
            "morphic-unit-regular",
            Evidence::Discriminating,
            &small,
            |case, r| check_morphic(case, r, self.strategy),
        )
    }

    /// Every element has a re-verifiable strongly unit nil-clean witness.
    pub fn sunc_universality_suite(&self, corpus: &[RingExpr]) -> SuiteReport {
        self.corpus_suite(
            "sunc-universality",
            Evidence::Consistency,
            corpus,
            |case, r| check_sunc_universal(case, r, self.strategy),
        )
    }

    /// Jacobson radical and nilpotent-set invariants.
    pub fn radical_suite(&self, corpus: &[RingExpr]) -> SuiteReport {
        self.corpus_suite("radicals", Evidence::Discriminating, corpus, check_radicals)
    }

    /// Ring axioms: exhaustive up to order 256, sampled above.
    pub fn ring_law_suite(&self, corpus: &[RingExpr]) -> SuiteReport {
        run_suite(
            "ring-laws",
            Evidence::Consistency,
            corpus,
            self.strategy,
            |e| e.to_string(),
            |e| {
                let case = e.to_string();
                let r = match e.build(&self.caps) {
                    Ok(r) => r,
                    Err(err) => return skip_reason(err),
                };
                let out = r
                    .check_axioms(10_000, 0)
                    .map(|msg| failure(&case, "ring axioms", "all hold", msg, None))
                    .into_iter()
                    .collect();
                outcome(out)
            },
        )
    }

    /// Size-one constructions and `Ks(R, 1)` reproduce the censuses of `R`
    /// and `M(2, R)`.
    pub fn census_identity_suite(&self, bases: &[RingExpr]) -> SuiteReport {
        run_suite(
            "census-identities",
            Evidence::Consistency,
            bases,
            self.strategy,
            |e| e.to_string(),
            |e| {
                let case = e.to_string();
                let caps = &self.caps;
                let checks = (|| -> Result<Vec<SuiteFailure>> {
                    let base = e.build(caps)?;
                    let b = self.freeze(&base)?;
                    let want = census(&b);
                    let mut out = Vec::new();
                    let trivial = cyclic(1, caps)?;
                    for (name, ring) in [
                        ("M(1, R)", matrix_ring(&base, 1, caps)?),
                        ("U(1, R)", upper_triangular(&base, 1, caps)?),
                        ("GR(R, C(1))", group_ring(&base, &trivial, caps)?),
                    ] {
                        let got = census(&self.freeze(&ring)?);
                        if got != want {
                            out.push(failure(&case, name, want, got, None));
                        }
                    }
                    let ks = self.freeze(&generalized_matrix(&base, base.one(), caps)?)?;
                    let m2 = self.freeze(&matrix_ring(&base, 2, caps)?)?;
                    if census(&ks) != census(&m2) {
                        out.push(failure(
                            &case,
                            "Ks(R, 1) vs M(2, R)",
                            census(&m2),
                            census(&ks),
                            None,
                        ));
                    }
                    Ok(out)
                })();
                match checks {
                    Ok(out) => outcome(out),
                    Err(err) => skip_reason(err),
                }
            },
        )
    }

    fn corpus_suite<F>(
        &self,
        name: &str,
        evidence: Evidence,
        corpus: &[RingExpr],
        check: F,
    ) -> SuiteReport
    where
        F: Fn(&str, &FrozenRing) -> Vec<SuiteFailure> + Sync + Send,
    {
        run_suite(
            name,
            evidence,
            corpus,
            self.strategy,
            |e| e.to_string(),
            |e| match self.freeze_expr(e) {
                Ok(r) => outcome(check(&e.to_string(), &r)),
                Err(err) => skip_reason(err),
            },
        )
    }
}
