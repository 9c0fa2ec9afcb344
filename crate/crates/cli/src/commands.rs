use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use jumbled::rle::RunLengthEncoding;
use jumbled::{pnf_from_index, CornerIndex, ParikhVector};
use serde_json::json;

use crate::input::{load_index, open, read_text, save_index};
use crate::{Context, Format};

pub fn build(ctx: &Context, input: &str, index_path: &Path) -> Result<ExitCode> {
    let text = read_text(input, ctx.alphabet)?;
    let start = Instant::now();
    let rle = RunLengthEncoding::encode(&text)?;
    let index = CornerIndex::from_rle(&rle);
    let elapsed = start.elapsed();
    save_index(&index, index_path)?;

    let (peak_min, peak_max) = index.peak_working_size();
    let fields = [
        ("n", index.n().to_string()),
        ("rho", rle.rho().to_string()),
        ("l_min", index.l_min().len().to_string()),
        ("l_max", index.l_max().len().to_string()),
        ("peak_min", peak_min.to_string()),
        ("peak_max", peak_max.to_string()),
        ("build_ms", format!("{:.3}", elapsed.as_secs_f64() * 1e3)),
    ];
    print_record(ctx.format, &fields);
    Ok(ExitCode::SUCCESS)
}

/// Prints one record as `key=value` pairs, a TSV header and row, or a JSON object.
pub fn print_record(format: Format, fields: &[(&str, String)]) {
    match format {
        Format::Human => {
            let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
            println!("{}", line.join(" "));
        }
        Format::Tsv => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
            println!("{}\n{}", keys.join("\t"), values.join("\t"));
        }
        Format::Jsonl => {
            let object: serde_json::Map<String, serde_json::Value> = fields
                .iter()
                .map(|(k, v)| {
                    let value = v
                        .parse::<u64>()
                        .map(serde_json::Value::from)
                        .or_else(|_| v.parse::<f64>().map(serde_json::Value::from))
                        .unwrap_or_else(|_| serde_json::Value::from(v.as_str()));
                    (k.to_string(), value)
                })
                .collect();
            println!("{}", serde_json::Value::Object(object));
        }
    }
}

/// Parses `x y` or `{"x": .., "y": ..}`.
pub fn parse_query(line: &str) -> Result<ParikhVector> {
    let line = line.trim();
    if line.starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(line)?;
        let field = |name: &str| value.get(name).and_then(serde_json::Value::as_u64);
        return match (field("x"), field("y")) {
            (Some(x), Some(y)) => Ok(ParikhVector::new(x, y)),
            _ => bail!("expected non-negative integer fields \"x\" and \"y\""),
        };
    }
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(x), Some(y), None) => Ok(ParikhVector::new(x.parse()?, y.parse()?)),
        _ => bail!("expected two non-negative integers `x y`"),
    }
}

pub fn query(ctx: &Context, index_path: &Path, input: &str) -> Result<ExitCode> {
    let index = load_index(index_path)?;
    let reader = BufReader::new(open(input)?);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut failures = 0usize;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let q = match parse_query(&line) {
            Ok(q) => q,
            Err(err) => {
                failures += 1;
                out.flush()?;
                eprintln!("line {}: {err}: {:?}", lineno + 1, line);
                continue;
            }
        };
        let occurs = index.query(q);
        let verdict = if occurs { "occurs" } else { "not-occurs" };
        match ctx.format {
            Format::Human => writeln!(out, "{} {} {verdict}", q.x, q.y)?,
            Format::Tsv => writeln!(out, "{}\t{}\t{verdict}", q.x, q.y)?,
            Format::Jsonl => writeln!(out, "{}", json!({"x": q.x, "y": q.y, "occurs": occurs}))?,
        }
    }
    out.flush()?;
    if failures > 0 {
        eprintln!("{failures} malformed query line(s)");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn pnf(ctx: &Context, index_path: Option<&Path>, input: Option<&str>) -> Result<ExitCode> {
    let index = match (index_path, input) {
        (Some(path), _) => load_index(path)?,
        (None, Some(input)) => CornerIndex::build(&read_text(input, ctx.alphabet)?)?,
        (None, None) => bail!("either --index or --input is required"),
    };
    let pnfs = pnf_from_index(&index);
    let (a, b) = (ctx.alphabet.render(&pnfs.pnf_a), ctx.alphabet.render(&pnfs.pnf_b));
    match ctx.format {
        Format::Human | Format::Tsv => println!("{a}\n{b}"),
        Format::Jsonl => println!("{}", json!({"pnf_a": a, "pnf_b": b})),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn inspect(ctx: &Context, index_path: &Path) -> Result<ExitCode> {
    let index = load_index(index_path)?;
    let (peak_min, peak_max) = index.peak_working_size();
    let pairs = |list: &jumbled::CornerList| -> Vec<[u64; 2]> { list.iter().map(|p| [p.x, p.y]).collect() };
    match ctx.format {
        Format::Jsonl => println!(
            "{}",
            json!({
                "n": index.n(),
                "total_a": index.total_a(),
                "total_b": index.total_b(),
                "peak_min": peak_min,
                "peak_max": peak_max,
                "l_min": pairs(index.l_min()),
                "l_max": pairs(index.l_max()),
            })
        ),
        Format::Human | Format::Tsv => {
            let sep = if ctx.format == Format::Tsv { "\t" } else { " " };
            println!("n{sep}{}", index.n());
            println!("total_a{sep}{}", index.total_a());
            println!("total_b{sep}{}", index.total_b());
            println!("peak_min{sep}{peak_min}");
            println!("peak_max{sep}{peak_max}");
            for (name, list) in [("l_min", index.l_min()), ("l_max", index.l_max())] {
                for p in list {
                    println!("{name}{sep}{}{sep}{}", p.x, p.y);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
