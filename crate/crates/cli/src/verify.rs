use std::process::ExitCode;

use anyhow::Result;
use jumbled::oracle::Oracle;
use jumbled::pnf::{pnf_from_index, pnf_relation_violation};
use jumbled::{CornerIndex, ParikhVector};
use serde_json::json;

use crate::input::read_text;
use crate::{Context, Format, RandomArgs};

const CHECKS: [&str; 4] = ["oracle-equivalence", "interval-lemma", "full-run-witness", "pnf-relations"];

/// Runs every check on one text; `None` means pass, otherwise a failure detail.
fn check_text(text: &[u8], oracle: &Oracle) -> Result<[Option<String>; 4]> {
    let index = CornerIndex::build(text)?;
    let set = oracle.parikh_set(text)?;

    let mut equivalence = None;
    'grid: for x in 0..=index.total_a() {
        for y in 0..=index.total_b() {
            let q = ParikhVector::new(x, y);
            if index.query(q) != set.contains(&q) {
                equivalence = Some(format!("query {q}: index {} oracle {}", index.query(q), set.contains(&q)));
                break 'grid;
            }
        }
    }
    let interval = (!oracle.verify_interval_lemma(text)?).then(|| "interval lemma violated".to_owned());
    let witness = (!oracle.full_run_witness_check(text)?).then(|| "missing full-run witness".to_owned());
    let pnf = pnf_relation_violation(&index, &pnf_from_index(&index));
    Ok([equivalence, interval, witness, pnf])
}

pub fn run(ctx: &Context, input: Option<&str>, random: &RandomArgs, max_oracle_n: usize) -> Result<ExitCode> {
    let oracle = Oracle::with_bound(max_oracle_n);
    let texts: Box<dyn Iterator<Item = Vec<u8>>> = match input {
        Some(path) => Box::new(std::iter::once(read_text(path, ctx.alphabet)?)),
        None => Box::new(random.texts()),
    };

    let mut total = 0usize;
    let mut passed = [0usize; 4];
    let mut first_failure: [Option<String>; 4] = Default::default();
    for text in texts {
        total += 1;
        for (i, outcome) in check_text(&text, &oracle)?.into_iter().enumerate() {
            match outcome {
                None => passed[i] += 1,
                Some(detail) => {
                    first_failure[i].get_or_insert_with(|| {
                        let shown = ctx.alphabet.render(&String::from_utf8_lossy(&text));
                        format!("{detail} (text {shown})")
                    });
                }
            }
        }
    }

    if ctx.format == Format::Tsv {
        println!("check\tpassed\ttotal\tstatus");
    }
    for (i, name) in CHECKS.iter().enumerate() {
        let ok = passed[i] == total;
        let status = if ok { "PASS" } else { "FAIL" };
        match ctx.format {
            Format::Human => println!("{status} {name} ({}/{total})", passed[i]),
            Format::Tsv => println!("{name}\t{}\t{total}\t{status}", passed[i]),
            Format::Jsonl => println!(
                "{}",
                json!({"check": name, "passed": passed[i], "total": total, "ok": ok})
            ),
        }
        if let Some(detail) = &first_failure[i] {
            eprintln!("{name}: {detail}");
        }
    }
    let all_ok = passed.iter().all(|&p| p == total);
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
