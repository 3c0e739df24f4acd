use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::suites::{
    check_augmentation_nil, check_morphic, check_periodic, check_radicals, check_snc_criterion,
    check_sunc_universal, failure, sunc_failure, witness, Harness,
};
use super::{run_suite, Evidence, Outcome, SuiteFailure, SuiteReport};
use crate::deciders::{classify_with, is_ni};
use crate::expr::{GroupExpr, RingExpr};
use crate::fastpath::{connell_regular_zn, zn_unit_regular, zng_unit_regular};
use crate::frozen::FrozenRing;
use crate::ring::Kind;

/// Relative frequency of each construction in generated instances.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorWeights {
    pub zmod: u32,
    pub product: u32,
    pub matrix: u32,
    pub upper: u32,
    pub group_ring: u32,
    pub triv: u32,
    pub ks: u32,
    pub formal: u32,
}

impl Default for GeneratorWeights {
    fn default() -> Self {
        GeneratorWeights {
            zmod: 3,
            product: 2,
            matrix: 2,
            upper: 2,
            group_ring: 3,
            triv: 2,
            ks: 2,
            formal: 1,
        }
    }
}

impl GeneratorWeights {
    pub fn zmod_only() -> Self {
        GeneratorWeights {
            zmod: 1,
            product: 0,
            matrix: 0,
            upper: 0,
            group_ring: 0,
            triv: 0,
            ks: 0,
            formal: 0,
        }
    }

    fn table(&self) -> [u32; 8] {
        [
            self.zmod,
            self.product,
            self.matrix,
            self.upper,
            self.group_ring,
            self.triv,
            self.ks,
            self.formal,
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub count: usize,
    pub weights: GeneratorWeights,
    /// Largest ring order generated.
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            count: 100,
            weights: GeneratorWeights::default(),
            cap: 512,
        }
    }
}

fn small_group(rng: &mut ChaCha8Rng) -> GroupExpr {
    match rng.gen_range(0..10) {
        0..=4 => GroupExpr::Cyclic(rng.gen_range(1..=6)),
        5 => GroupExpr::Dihedral(rng.gen_range(2..=3)),
        6 => GroupExpr::Symmetric(3),
        7 => GroupExpr::Q8,
        8 => GroupExpr::Product(
            Box::new(GroupExpr::Cyclic(2)),
            Box::new(GroupExpr::Cyclic(2)),
        ),
        _ => GroupExpr::Cyclic(1),
    }
}

fn small_base(rng: &mut ChaCha8Rng) -> RingExpr {
    let z = |n| Box::new(RingExpr::Zmod(n));
    match rng.gen_range(0..8) {
        0..=4 => RingExpr::Zmod(rng.gen_range(1..=8)),
        5 => RingExpr::Matrix(2, z(2)),
        6 => RingExpr::Upper(2, z(2)),
        _ => RingExpr::Triv(z(2)),
    }
}

fn nilpotent_residue(n: u64, rng: &mut ChaCha8Rng) -> i64 {
    let nil: Vec<u64> = (0..n)
        .filter(|&s| {
            let mut p = 1 % n;
            (0..n).any(|_| {
                p = (p * s) % n;
                p == 0
            })
        })
        .collect();
    nil[rng.gen_range(0..nil.len())] as i64
}

fn candidate(kind: usize, rng: &mut ChaCha8Rng) -> RingExpr {
    let z = |n| Box::new(RingExpr::Zmod(n));
    match kind {
        0 => RingExpr::Zmod(rng.gen_range(1..=36)),
        1 => RingExpr::Product(Box::new(small_base(rng)), Box::new(small_base(rng))),
        2 => RingExpr::Matrix(rng.gen_range(1..=3), z(rng.gen_range(1..=5))),
        3 => RingExpr::Upper(rng.gen_range(1..=3), z(rng.gen_range(1..=6))),
        4 => {
            let base = if rng.gen_bool(0.8) {
                RingExpr::Zmod(rng.gen_range(1..=6))
            } else {
                small_base(rng)
            };
            RingExpr::GroupRing(Box::new(base), small_group(rng))
        }
        5 => RingExpr::Triv(Box::new(if rng.gen_bool(0.7) {
            RingExpr::Zmod(rng.gen_range(1..=22))
        } else {
            small_base(rng)
        })),
        6 => {
            let n = rng.gen_range(1..=4);
            RingExpr::Ks(z(n), rng.gen_range(0..n as i64))
        }
        _ => {
            if rng.gen_bool(0.25) {
                RingExpr::Formal(3, z(2), 0)
            } else {
                let n = rng.gen_range(1..=4);
                RingExpr::Formal(2, z(n), nilpotent_residue(n, rng))
            }
        }
    }
}

/// The ring expressions a search with `config` evaluates, in order.
pub fn generate_instances(config: &SearchConfig) -> Vec<RingExpr> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let weights = config.weights.table();
    let total: u32 = weights.iter().sum();
    (0..config.count)
        .map(|_| {
            for _ in 0..64 {
                let kind = if total == 0 {
                    0
                } else {
                    let mut t = rng.gen_range(0..total);
                    weights
                        .iter()
                        .position(|&w| {
                            if t < w {
                                true
                            } else {
                                t -= w;
                                false
                            }
                        })
                        .expect("weights sum to total")
                };
                let e = candidate(kind, &mut rng);
                if e.order() <= config.cap as u128 {
                    return e;
                }
            }
            RingExpr::Zmod(rng.gen_range(1..=config.cap.clamp(1, 36) as u64))
        })
        .collect()
}

fn sunc_matches_base(case: &str, h: &Harness, r: &FrozenRing, check: &str) -> Vec<SuiteFailure> {
    let Some(base) = r.base() else {
        return Vec::new();
    };
    let Ok(b) = h.freeze(base) else {
        return Vec::new();
    };
    let (rb, bb) = (sunc_failure(r, h.strategy), sunc_failure(&b, h.strategy));
    if rb.is_none() != bb.is_none() {
        vec![failure(
            case,
            check,
            bb.is_none(),
            rb.is_none(),
            rb.map(|x| witness(r, x)),
        )]
    } else {
        Vec::new()
    }
}

/// Every applicable check on one ring. `Err` carries a skip reason.
fn evaluate(h: &Harness, e: &RingExpr, case: &str) -> Result<Vec<SuiteFailure>, String> {
    let r = h.freeze_expr(e).map_err(|err| err.to_string())?;
    let report = classify_with(&r, h.strategy);
    let f = report.flags;
    let mut out = Vec::new();

    if let Some(rule) = f.lattice_violation() {
        out.push(failure(case, rule, true, false, None));
    }
    for (name, holds) in [
        ("clean", f.clean),
        ("strongly_unit_nil_clean", f.strongly_unit_nil_clean),
        ("strongly_pi_regular", f.strongly_pi_regular),
        ("periodic", f.periodic),
    ] {
        if !holds {
            let w = report.witnesses.get(name).map(|w| w.literal.clone());
            out.push(failure(
                case,
                &format!("{name} holds in finite rings"),
                true,
                false,
                w,
            ));
        }
    }
    if !report.witnesses_verify(&r) {
        out.push(failure(case, "witnesses re-verify", true, false, None));
    }
    out.extend(check_snc_criterion(case, &r, h.strategy));
    if r.order() <= 512 {
        out.extend(check_morphic(case, &r, h.strategy));
    }
    out.extend(check_radicals(case, &r));
    out.extend(check_sunc_universal(case, &r, h.strategy));
    out.extend(check_periodic(case, &r, h.strategy));

    match r.kind() {
        Kind::Zmod => {
            let n = r.modulus().expect("Z(n)");
            let fast = zn_unit_regular(n).expect("n >= 1");
            if f.unit_regular != fast {
                out.push(failure(
                    case,
                    "Z(n) unit-regular iff n squarefree",
                    fast,
                    f.unit_regular,
                    None,
                ));
            }
            if f.regular != f.unit_regular {
                out.push(failure(
                    case,
                    "Z(n) regular iff unit-regular",
                    f.regular,
                    f.unit_regular,
                    None,
                ));
            }
        }
        Kind::GroupRing => {
            let group = r.group().expect("group ring");
            if let Some(n) = r.base().and_then(|b| b.modulus()) {
                let fast = zng_unit_regular(n, group).expect("n >= 1");
                if f.unit_regular != fast {
                    out.push(failure(
                        case,
                        "Z(n)G unit-regular test",
                        fast,
                        f.unit_regular,
                        None,
                    ));
                }
                let fast = connell_regular_zn(n, group).expect("n >= 1");
                if f.regular != fast {
                    out.push(failure(case, "Z(n)G regular test", fast, f.regular, None));
                }
            }
            if f.strongly_unit_nil_clean {
                out.extend(sunc_matches_base(
                    case,
                    h,
                    &r,
                    "base inherits from group ring",
                ));
            }
            out.extend(check_augmentation_nil(case, &r));
        }
        Kind::Matrix => {
            if let Ok(b) = h.freeze(r.base().expect("matrix base")) {
                let base_report = classify_with(&b, h.strategy);
                if base_report.flags.unit_regular != f.unit_regular {
                    out.push(failure(
                        case,
                        "M(k, R) unit-regular iff R is",
                        base_report.flags.unit_regular,
                        f.unit_regular,
                        None,
                    ));
                }
                if is_ni(&b) {
                    out.extend(sunc_matches_base(case, h, &r, "M(k, R) over NI base"));
                }
            }
        }
        Kind::UpperTriangular | Kind::TrivialExtension => {
            out.extend(sunc_matches_base(case, h, &r, "matches base ring"));
        }
        Kind::Generalized | Kind::Formal => {
            let s = r.pairing_scalar().expect("pairing scalar");
            if r.base().is_some_and(|b| b.is_nilpotent(s)) {
                out.extend(sunc_matches_base(
                    case,
                    h,
                    &r,
                    "nilpotent pairing matches base",
                ));
            }
        }
        Kind::Product => {}
    }

    if !out.is_empty() {
        for fl in &mut out {
            fl.report = Some(Box::new(report.clone()));
        }
    }
    Ok(out)
}

/// Descends into sub-expressions while they still fail one of `checks`.
fn shrink(h: &Harness, e: &RingExpr, checks: &[String]) -> Option<String> {
    let mut current: Option<RingExpr> = None;
    let mut frontier = e.clone();
    'outer: loop {
        for child in frontier.children() {
            if let Ok(fs) = evaluate(h, child, "shrink") {
                if fs.iter().any(|f| checks.contains(&f.check)) {
                    current = Some(child.clone());
                    frontier = child.clone();
                    continue 'outer;
                }
            }
        }
        return current.map(|c| c.to_string());
    }
}

/// Generates `config.count` random rings and runs every applicable check on
/// each. Deterministic in `config`.
pub fn falsify(h: &Harness, config: &SearchConfig) -> SuiteReport {
    let instances: Vec<(usize, RingExpr)> =
        generate_instances(config).into_iter().enumerate().collect();
    let describe = |(i, e): &(usize, RingExpr)| format!("#{i:04} {e}");
    run_suite(
        "falsify",
        Evidence::Discriminating,
        &instances,
        h.strategy,
        describe,
        |item| {
            let case = describe(item);
            match evaluate(h, &item.1, &case) {
                Err(reason) => Outcome::Skip(reason),
                Ok(fs) if fs.is_empty() => Outcome::Pass,
                Ok(mut fs) => {
                    let checks: Vec<String> = fs.iter().map(|f| f.check.clone()).collect();
                    let shrunk = shrink(h, &item.1, &checks);
                    for f in &mut fs {
                        f.shrunk = shrunk.clone();
                    }
                    Outcome::Fail(fs)
                }
            }
        },
    )
}
