//! `finring` command-line driver.
//!
//! Exit codes: 0 success, 1 a check failed, 2 parse or usage error,
//! 3 a size cap was exceeded.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use finring::fastpath::{connell_regular_zn, zn_unit_regular, zng_unit_regular};
use finring::harness::{self, census, falsify, Harness, SearchConfig, SuiteReport};
use finring::{
    classify_with, freeze, parse, Caps, Error, FrozenRing, Kind, PropertyReport, Strategy,
};
use serde::Serialize;
use serde_json::{json, Value};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "finring",
    version,
    about = "Finite ring classification and property checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide every ring property of a ring expression.
    Classify {
        expr: String,
        /// Also report the number-theoretic shortcuts and whether they agree.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        json: bool,
        /// Largest ring order to classify.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        /// Upper bound for the Z(n) suite.
        #[arg(long, default_value_t = 60)]
        n_max: u64,
        /// Matrix size for the matrix suite.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Randomized search for counterexamples.
    Search {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        json: bool,
        /// Largest generated ring order.
        #[arg(long, default_value_t = 512)]
        cap: usize,
    },
    /// Print the Jacobson radical and the set of nilpotents.
    Radicals {
        expr: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print element counts.
    Info {
        expr: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        cap: Option<usize>,
    },
}

/// Suite names accepted by `verify`.
const SUITES: &[&str] = &[
    "zn-unit-regular",
    "zng-unit-regular",
    "zng-regular",
    "matrix-sunc",
    "morita-sunc",
    "group-ring-sunc",
    "periodic",
    "snc-criterion",
    "morphic-unit-regular",
    "sunc-universality",
    "radicals",
    "ring-laws",
    "census",
];

fn caps(cap: Option<usize>) -> Caps {
    cap.map_or(Caps::DEFAULT, Caps::with_classify_cap)
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(if e.is_cap() { EXIT_CAP } else { EXIT_USAGE })
}

fn load(expr: &str, caps: &Caps) -> Result<FrozenRing, Error> {
    let ring = parse(expr)?.build(caps)?;
    freeze(&ring, caps)
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

#[derive(Serialize)]
struct FastVerdict {
    check: &'static str,
    fast: bool,
    brute: bool,
    agree: bool,
}

fn fast_verdicts(r: &FrozenRing, report: &PropertyReport) -> Vec<FastVerdict> {
    let verdict = |check, fast: bool, brute: bool| FastVerdict {
        check,
        fast,
        brute,
        agree: fast == brute,
    };
    let f = &report.flags;
    match r.kind() {
        Kind::Zmod => {
            let n = r.modulus().expect("Z(n)");
            vec![
                verdict(
                    "unit_regular",
                    zn_unit_regular(n).expect("n >= 1"),
                    f.unit_regular,
                ),
                verdict("regular", zn_unit_regular(n).expect("n >= 1"), f.regular),
            ]
        }
        Kind::GroupRing => match (r.base().and_then(|b| b.modulus()), r.group()) {
            (Some(n), Some(g)) => vec![
                verdict(
                    "unit_regular",
                    zng_unit_regular(n, g).expect("n >= 1"),
                    f.unit_regular,
                ),
                verdict(
                    "regular",
                    connell_regular_zn(n, g).expect("n >= 1"),
                    f.regular,
                ),
            ],
            _ => Vec::new(),
        },
        _ => Vec::new(),
    }
}

fn cmd_classify(expr: &str, fast: bool, as_json: bool, cap: Option<usize>) -> ExitCode {
    let caps = caps(cap);
    let start = Instant::now();
    let r = match load(expr, &caps) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let freeze_time = start.elapsed();
    let report = classify_with(&r, Strategy::default());
    let total = start.elapsed();
    let verdicts = fast.then(|| fast_verdicts(&r, &report));
    let agree = verdicts.iter().flatten().all(|v| v.agree);

    if as_json {
        let mut out = json!({
            "label": report.label,
            "order": report.order,
            "flags": report.flags,
            "witnesses": report.witnesses,
            "radicals": report.radicals,
            "timing": {
                "freeze_ms": freeze_time.as_secs_f64() * 1e3,
                "total_ms": total.as_secs_f64() * 1e3,
            },
        });
        if let Some(v) = &verdicts {
            out["fast"] = serde_json::to_value(v).expect("serializable");
        }
        print_json(&out);
    } else {
        println!("{}  (order {})", report.label, report.order);
        for (name, holds) in report.flags.entries() {
            let mark = if holds { "yes" } else { "no" };
            match report.witnesses.get(name) {
                Some(w) if !holds => println!("  {name:<26}{mark:<5}witness {}", w.literal),
                _ => println!("  {name:<26}{mark}"),
            }
        }
        println!(
            "  |J| = {}, |Nil| = {}",
            report.radicals.jacobson, report.radicals.nil
        );
        if let Some(vs) = &verdicts {
            if vs.is_empty() {
                println!("  fast paths: not applicable");
            }
            for v in vs {
                let status = if v.agree { "agree" } else { "DISAGREE" };
                println!(
                    "  fast {:<21}{} vs brute {}: {status}",
                    v.check, v.fast, v.brute
                );
            }
        }
        println!("  time {:.1} ms", total.as_secs_f64() * 1e3);
    }
    if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn run_named(h: &Harness, suite: &str, n_max: u64, k: usize) -> Option<Result<SuiteReport, Error>> {
    let corpus = harness::standard_corpus;
    Some(Ok(match suite {
        "zn-unit-regular" => return Some(h.zn_unit_regular_suite(n_max)),
        "zng-unit-regular" => h.zng_unit_regular_suite(&harness::default_zng_cases()),
        "zng-regular" => h.zng_regular_suite(&harness::default_connell_cases()),
        "matrix-sunc" => h.matrix_sunc_suite(&harness::default_matrix_bases(), k),
        "morita-sunc" => h.morita_sunc_suite(&harness::default_morita_cases()),
        "group-ring-sunc" => h.group_ring_sunc_suite(&harness::default_group_ring_cases()),
        "periodic" => h.periodic_group_ring_suite(&harness::default_periodic_cases()),
        "snc-criterion" => h.snc_criterion_suite(&harness::diesl_corpus()),
        "morphic-unit-regular" => h.morphic_unit_regular_suite(&corpus()),
        "sunc-universality" => h.sunc_universality_suite(&corpus()),
        "radicals" => h.radical_suite(&corpus()),
        "ring-laws" => h.ring_law_suite(&corpus()),
        "census" => h.census_identity_suite(&harness::default_matrix_bases()),
        _ => return None,
    }))
}

fn emit(report: &SuiteReport, as_json: bool) -> ExitCode {
    if as_json {
        println!("{}", report.to_json());
    } else {
        let evidence = serde_json::to_value(report.evidence).expect("serializable");
        println!(
            "{} [{}]: {}/{} passed, {} failed, {} skipped ({:.2} s)",
            report.suite,
            evidence.as_str().unwrap_or_default(),
            report.passed,
            report.attempted,
            report.failures.len(),
            report.skipped.len(),
            report.wall_time.as_secs_f64()
        );
        for f in &report.failures {
            print!(
                "  FAIL {}: {} expected {} got {}",
                f.case, f.check, f.expected, f.got
            );
            if let Some(w) = &f.witness {
                print!(" witness {w}");
            }
            if let Some(s) = &f.shrunk {
                print!(" shrunk to {s}");
            }
            println!();
        }
        for s in &report.skipped {
            println!("  skip {}: {}", s.case, s.reason);
        }
    }
    if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn cmd_verify(suite: &str, n_max: u64, k: usize, as_json: bool, cap: Option<usize>) -> ExitCode {
    let h = Harness::new(caps(cap), Strategy::default());
    match run_named(&h, suite, n_max, k) {
        None => {
            eprintln!(
                "error: unknown suite '{suite}'; known suites: {}",
                SUITES.join(", ")
            );
            ExitCode::from(EXIT_USAGE)
        }
        Some(Err(e)) => fail(&e),
        Some(Ok(report)) => emit(&report, as_json),
    }
}

fn cmd_search(seed: u64, count: usize, as_json: bool, cap: usize) -> ExitCode {
    let h = Harness::default();
    let config = SearchConfig {
        seed,
        count,
        cap,
        ..SearchConfig::default()
    };
    emit(&falsify(&h, &config), as_json)
}

fn literals(r: &FrozenRing, xs: &[finring::Element]) -> Vec<Value> {
    xs.iter().map(|&x| r.literal(x)).collect()
}

fn cmd_radicals(expr: &str, as_json: bool, cap: Option<usize>) -> ExitCode {
    let r = match load(expr, &caps(cap)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let (j, nil) = (literals(&r, r.jacobson()), literals(&r, r.nilpotents()));
    if as_json {
        print_json(&json!({ "label": r.label(), "jacobson": j, "nil": nil }));
    } else {
        let show = |v: &[Value]| {
            v.iter()
                .map(Value::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("{}", r.label());
        println!("  J   ({}): {{{}}}", j.len(), show(&j));
        println!("  Nil ({}): {{{}}}", nil.len(), show(&nil));
    }
    ExitCode::SUCCESS
}

fn cmd_info(expr: &str, as_json: bool, cap: Option<usize>) -> ExitCode {
    let r = match load(expr, &caps(cap)) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let (order, units, idempotents, nilpotents) = census(&r);
    let info = json!({
        "label": r.label(),
        "order": order,
        "units": units,
        "idempotents": idempotents,
        "nilpotents": nilpotents,
        "jacobson": r.jacobson().len(),
        "commutative": r.is_commutative(),
    });
    if as_json {
        print_json(&info);
    } else {
        println!("{}", r.label());
        for key in [
            "order",
            "units",
            "idempotents",
            "nilpotents",
            "jacobson",
            "commutative",
        ] {
            println!("  {key:<12}{}", info[key]);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            expr,
            fast,
            json,
            cap,
        } => cmd_classify(&expr, fast, json, cap),
        Command::Verify {
            suite,
            n_max,
            k,
            json,
            cap,
        } => cmd_verify(&suite, n_max, k, json, cap),
        Command::Search {
            seed,
            count,
            json,
            cap,
        } => cmd_search(seed, count, json, cap),
        Command::Radicals { expr, json, cap } => cmd_radicals(&expr, json, cap),
        Command::Info { expr, json, cap } => cmd_info(&expr, json, cap),
    }
}
