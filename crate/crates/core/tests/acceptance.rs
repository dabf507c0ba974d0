//! The acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or runs over its time budget.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rbc::{
    all_normal_forms, builtin_rules, find_matches, map_par, map_seq, normalize, phi, truth_table,
    verify_strict, verify_trace, word_rank, Diagram, GateKind, MoveWord, PositionedGate,
    TruthTable,
};

use common::{brute_force_matches, d, oracle_table, random_diagram, MatchKey};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn manifest(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn ac1_rule_strictness() -> Outcome {
    let report = verify_strict(&builtin_rules());
    ensure!(
        report.entries.len() == 12,
        "{} rules in the catalog",
        report.entries.len()
    );
    ensure!(
        report.strict_count() == 12,
        "{}/12 strict:\n{report}",
        report.strict_count()
    );
    for (name, vectors) in [
        ("p_yang_baxter", "(ll, lr, rr) > (ll, rl, rr)"),
        ("a_t3", "(tt, tt, tt) > (ε, ε, ε)"),
        ("s_t3_L", "(lt, lt, lt, rrr) > (tl, tl, tl, rrr)"),
    ] {
        let got = report.get(name).ok_or(format!("{name} missing"))?.vectors();
        ensure!(got == vectors, "{name}: {got} != {vectors}");
    }
    let cli = rbc::cli::run(["rbc", "verify-rules"]);
    let strict = cli
        .stdout
        .lines()
        .filter(|l| l.contains(": STRICT"))
        .count();
    ensure!(
        cli.code == 0 && strict == 12,
        "verify-rules printed {strict} STRICT lines"
    );
    Ok("12/12 STRICT, vectors exact".into())
}

fn ac2_fig1b() -> Outcome {
    let input = d(4, "t3@0 sw@2 sw@1 sw@0 t3@1");
    let (nf, trace) = normalize(&input).map_err(|e| e.to_string())?;
    ensure!(nf == d(4, "sw@2 sw@1 sw@0"), "normal form {nf}");
    ensure!(
        trace.rule_names() == ["s_t3_R", "a_t3"],
        "rules {:?}",
        trace.rule_names()
    );
    let before = oracle_table(&input);
    ensure!(before.len() == 16, "{} rows", before.len());
    ensure!(before == oracle_table(&nf), "truth table changed");
    ensure!(
        truth_table(&input).unwrap() == truth_table(&nf).unwrap(),
        "library truth tables differ"
    );
    Ok(format!("{nf} via s_t3_R, a_t3; 16/16 rows equal"))
}

fn ac3_non_confluence() -> Outcome {
    let input = d(3, "sw@0 sw@1 sw@0 t2@1");
    let nfs = all_normal_forms(&input, 100_000).map_err(|e| e.to_string())?;
    ensure!(nfs.len() >= 2, "only {} normal forms", nfs.len());
    let distinct: BTreeSet<String> = nfs.iter().map(|n| n.canonicalize().to_string()).collect();
    ensure!(distinct.len() == nfs.len(), "duplicate normal forms");
    for shown in ["sw@0 t2@0 sw@1 sw@0", "sw@1 sw@0 sw@1 t2@1"] {
        let shown = d(3, shown);
        ensure!(
            nfs.iter().any(|n| common::equivalent_oracle(n, &shown)),
            "{shown} not among the normal forms"
        );
    }
    let table = oracle_table(&input);
    ensure!(
        nfs.iter().all(|n| oracle_table(n) == table),
        "truth tables differ"
    );
    let golden = std::fs::read_to_string(manifest("tests/golden/non_confluent.nfs")).unwrap();
    let path = manifest("circuits/non_confluent.rbc").display().to_string();
    let cli = rbc::cli::run(["rbc", "nfs", &path]);
    ensure!(
        cli.stdout == golden,
        "nfs output differs from the golden file"
    );
    Ok(format!(
        "{} normal forms, one truth table, golden match",
        nfs.len()
    ))
}

fn ac4_termination() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e4_2024);
    let mut total_steps = 0;
    for i in 0..500 {
        let width = rng.gen_range(1..=6);
        let input = random_diagram(&mut rng, width, 25);
        let (nf, trace) = normalize(&input).map_err(|e| format!("#{i} {input}: {e}"))?;
        let report = verify_trace(&trace);
        ensure!(report.is_ok(), "#{i} {input}:\n{report}");
        ensure!(
            report.ranks.windows(2).all(|w| w[1] < w[0]),
            "#{i} ranks not strictly decreasing"
        );
        ensure!(
            oracle_table(&input) == oracle_table(&nf),
            "#{i} semantics changed"
        );
        ensure!(
            find_matches(&nf, &builtin_rules()).is_empty(),
            "#{i} result is reducible"
        );
        total_steps += trace.len();
    }
    Ok(format!("500 diagrams, {total_steps} verified steps"))
}

/// Swaps random adjacent commuting gates.
fn exchange_shuffle<R: Rng>(rng: &mut R, d: &Diagram) -> Diagram {
    let mut gates = d.gates().to_vec();
    for _ in 0..4 * gates.len() {
        let p = rng.gen_range(0..gates.len() - 1);
        let (a, b) = (gates[p], gates[p + 1]);
        if a.offset + a.kind.arity() <= b.offset || b.offset + b.kind.arity() <= a.offset {
            gates.swap(p, p + 1);
        }
    }
    Diagram::new(d.width(), gates).unwrap()
}

fn ac5_functoriality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0_2024);
    for i in 0..200 {
        let width = rng.gen_range(0..=6);
        let a = random_diagram(&mut rng, width, 12);
        let b = random_diagram(&mut rng, width, 12);
        let lhs = phi(&a.compose_seq(&b).unwrap());
        let rhs = map_seq(&phi(&a), &phi(&b)).unwrap();
        ensure!(lhs == rhs, "seq #{i}: {a} ; {b}");
    }
    for i in 0..200 {
        let (wa, wb) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let a = random_diagram(&mut rng, wa, 10);
        let b = random_diagram(&mut rng, wb, 10);
        let lhs = phi(&a.compose_par(&b));
        ensure!(lhs == map_par(&phi(&a), &phi(&b)), "par #{i}: {a} | {b}");
    }
    for i in 0..200 {
        let width = rng.gen_range(1..=6);
        let a = random_diagram(&mut rng, width, 20);
        ensure!(phi(&a) == phi(&a.canonicalize()), "canonical #{i}: {a}");
        if a.len() > 1 {
            let shuffled = exchange_shuffle(&mut rng, &a);
            ensure!(phi(&a) == phi(&shuffled), "shuffle #{i}: {a} vs {shuffled}");
        }
    }
    Ok("200 seq, 200 par, 200 exchange classes".into())
}

fn ac6_order_isomorphism() -> Outcome {
    let mut words: Vec<MoveWord> = vec![MoveWord::empty()];
    let mut layer = vec![String::new()];
    for _ in 0..4 {
        layer = layer
            .iter()
            .flat_map(|w| ["t", "r", "l"].map(|c| format!("{w}{c}")))
            .collect();
        words.extend(layer.iter().map(|s| s.parse::<MoveWord>().unwrap()));
    }
    ensure!(words.len() == 121, "{} words", words.len());
    // Built shortest first, each layer in t < r < l order: already sorted.
    let mut by_compare = words.clone();
    by_compare.sort_by(rbc::word_compare);
    ensure!(
        by_compare == words,
        "word_compare disagrees with length-then-lex order"
    );
    for (i, w) in words.iter().enumerate() {
        ensure!(
            word_rank(w) == BigUint::from(i),
            "rank({w}) = {} != {i}",
            word_rank(w)
        );
    }
    Ok("121 words ranked 0..=120".into())
}

fn ac7_matcher_oracle() -> Outcome {
    let rules = builtin_rules();
    let mut rng = ChaCha8Rng::seed_from_u64(0x3a7c_2024);
    let mut total = 0;
    for i in 0..200 {
        let width = rng.gen_range(1..=5);
        let host = random_diagram(&mut rng, width, 8);
        let got: BTreeSet<MatchKey> = find_matches(&host, &rules)
            .iter()
            .map(|m| (m.rule_index, m.sorted_gates(), m.offset))
            .collect();
        let want = brute_force_matches(&host, &rules);
        ensure!(got == want, "#{i} {host}: {got:?} != {want:?}");
        total += want.len();
    }
    Ok(format!("200 diagrams, {total} matches agree"))
}

fn ac8_self_inverse() -> Outcome {
    for kind in GateKind::ALL {
        let n = kind.arity();
        let g = Diagram::new(n, vec![PositionedGate::new(kind, 0)]).unwrap();
        let gg = g.compose_seq(&g).unwrap();
        ensure!(
            truth_table(&gg).unwrap() == TruthTable::identity(n),
            "{kind:?} table"
        );
        let (nf, trace) = normalize(&gg).map_err(|e| e.to_string())?;
        ensure!(nf == Diagram::identity(n), "{kind:?} normalizes to {nf}");
        ensure!(trace.len() == 1, "{kind:?} took {} steps", trace.len());
    }
    Ok("4 generators".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 rule strictness", ac1_rule_strictness, 1),
        ("AC2 fig1b reduction", ac2_fig1b, 1),
        ("AC3 non-confluence", ac3_non_confluence, 1),
        ("AC4 termination suite", ac4_termination, 60),
        ("AC5 functoriality suite", ac5_functoriality, 10),
        ("AC6 order isomorphism", ac6_order_isomorphism, 1),
        ("AC7 matcher oracle", ac7_matcher_oracle, 60),
        ("AC8 self-inverse generators", ac8_self_inverse, 1),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}, but took longer than {budget}s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    println!("{}/8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
