use std::process::ExitCode;

use anyhow::Result;
use jumbled::rle::RunLengthEncoding;
use jumbled::CornerIndex;
use serde_json::json;

use crate::input::read_text;
use crate::{Context, Format, RandomArgs};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub n: u64,
    pub rho: u64,
    pub l_min: u64,
    pub l_max: u64,
    pub peak_min: u64,
    pub peak_max: u64,
}

pub fn measure(text: &[u8]) -> Result<Row> {
    let rle = RunLengthEncoding::encode(text)?;
    let index = CornerIndex::from_rle(&rle);
    let (peak_min, peak_max) = index.peak_working_size();
    Ok(Row {
        n: index.n(),
        rho: rle.rho() as u64,
        l_min: index.l_min().len() as u64,
        l_max: index.l_max().len() as u64,
        peak_min,
        peak_max,
    })
}

pub fn median(mut values: Vec<f64>) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    })
}

pub fn run(ctx: &Context, input: Option<&str>, random: &RandomArgs) -> Result<ExitCode> {
    let texts: Box<dyn Iterator<Item = Vec<u8>>> = match input {
        Some(path) => Box::new(std::iter::once(read_text(path, ctx.alphabet)?)),
        None => Box::new(random.texts()),
    };
    if ctx.format != Format::Jsonl {
        println!("n\trho\tl_min\tl_max\tpeak_min\tpeak_max");
    }
    let mut rows = Vec::new();
    for text in texts {
        let row = measure(&text)?;
        match ctx.format {
            Format::Jsonl => println!(
                "{}",
                json!({
                    "n": row.n, "rho": row.rho, "l_min": row.l_min, "l_max": row.l_max,
                    "peak_min": row.peak_min, "peak_max": row.peak_max,
                })
            ),
            _ => println!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                row.n, row.rho, row.l_min, row.l_max, row.peak_min, row.peak_max
            ),
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }

    let ratio = |f: fn(&Row) -> (u64, u64)| {
        median(
            rows.iter()
                .map(f)
                .filter(|&(_, den)| den > 0)
                .map(|(num, den)| num as f64 / den as f64)
                .collect(),
        )
    };
    let summary = [
        ("median_l_min_per_rho", ratio(|r| (r.l_min, r.rho))),
        ("median_l_max_per_rho", ratio(|r| (r.l_max, r.rho))),
        ("median_peak_min_per_l_min", ratio(|r| (r.peak_min, r.l_min))),
        ("median_peak_max_per_l_max", ratio(|r| (r.peak_max, r.l_max))),
    ];
    match ctx.format {
        Format::Jsonl => {
            let object: serde_json::Map<_, _> =
                summary.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            println!("{}", json!({ "summary": object }));
        }
        _ => {
            let parts: Vec<String> = summary
                .iter()
                .map(|(k, v)| match v {
                    Some(v) => format!("{k}={v:.4}"),
                    None => format!("{k}=NA"),
                })
                .collect();
            println!("# {}", parts.join("\t"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
