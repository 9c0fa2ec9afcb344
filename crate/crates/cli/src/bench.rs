use std::hint::black_box;
use std::path::Path;
use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use jumbled::oracle::sliding_window_query;
use jumbled::{CornerIndex, ParikhVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::print_record;
use crate::input::{load_index, read_text};
use crate::Context;

#[derive(Debug, Default)]
pub struct Report {
    pub queries: usize,
    pub occurs: usize,
    pub wall: Duration,
    /// Sorted per-query latencies.
    pub latencies: Vec<Duration>,
}

impl Report {
    pub fn percentile(&self, p: f64) -> Option<Duration> {
        if self.latencies.is_empty() {
            return None;
        }
        let rank = ((p / 100.0) * self.latencies.len() as f64).ceil() as usize;
        Some(self.latencies[rank.clamp(1, self.latencies.len()) - 1])
    }

    pub fn throughput(&self) -> f64 {
        if self.wall.is_zero() {
            0.0
        } else {
            self.queries as f64 / self.wall.as_secs_f64()
        }
    }
}

/// Uniform queries over `[0, total_a] x [0, total_b]`.
pub fn random_queries(index: &CornerIndex, count: usize, seed: u64) -> Vec<ParikhVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            ParikhVector::new(
                rng.random_range(0..=index.total_a()),
                rng.random_range(0..=index.total_b()),
            )
        })
        .collect()
}

/// Times every query, splitting the batch across `threads` readers of the same index.
pub fn measure(index: &CornerIndex, queries: &[ParikhVector], threads: usize) -> Report {
    if queries.is_empty() {
        return Report::default();
    }
    let chunk = queries.len().div_ceil(threads);
    let start = Instant::now();
    let parts: Vec<(usize, Vec<Duration>)> = thread::scope(|scope| {
        let handles: Vec<_> = queries
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut occurs = 0;
                    let mut latencies = Vec::with_capacity(part.len());
                    for &q in part {
                        let t = Instant::now();
                        let hit = black_box(index.query(black_box(q)));
                        latencies.push(t.elapsed());
                        occurs += hit as usize;
                    }
                    (occurs, latencies)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("bench thread panicked")).collect()
    });
    let wall = start.elapsed();
    let mut report = Report { queries: queries.len(), wall, ..Report::default() };
    for (occurs, latencies) in parts {
        report.occurs += occurs;
        report.latencies.extend(latencies);
    }
    report.latencies.sort_unstable();
    report
}

pub fn run(
    ctx: &Context,
    index_path: &Path,
    count: usize,
    threads: usize,
    seed: u64,
    input: Option<&str>,
) -> Result<ExitCode> {
    if threads == 0 {
        bail!("--threads must be at least 1");
    }
    let index = load_index(index_path)?;
    let queries = random_queries(&index, count, seed);
    let report = measure(&index, &queries, threads);

    let nanos = |d: Option<Duration>| d.map_or("NA".to_owned(), |d| d.as_nanos().to_string());
    let mean = if report.queries == 0 {
        "NA".to_owned()
    } else {
        format!("{:.1}", report.latencies.iter().sum::<Duration>().as_nanos() as f64 / report.queries as f64)
    };
    let mut fields = vec![
        ("queries", report.queries.to_string()),
        ("threads", threads.to_string()),
        ("occurs", report.occurs.to_string()),
        ("mean_ns", mean),
        ("p50_ns", nanos(report.percentile(50.0))),
        ("p90_ns", nanos(report.percentile(90.0))),
        ("p99_ns", nanos(report.percentile(99.0))),
        ("max_ns", nanos(report.latencies.last().copied())),
        ("throughput_qps", format!("{:.0}", report.throughput())),
    ];

    let mut exit = ExitCode::SUCCESS;
    if let Some(path) = input {
        let text = read_text(path, ctx.alphabet)?;
        if text.len() as u64 != index.n() {
            bail!("text has length {} but the index was built for length {}", text.len(), index.n());
        }
        // re-check every 100th query by a linear scan of the text
        let sample: Vec<_> = queries.iter().step_by(100).collect();
        let mismatches = sample
            .iter()
            .filter(|&&&q| index.query(q) != sliding_window_query(&text, q))
            .count();
        fields.push(("rechecked", sample.len().to_string()));
        fields.push(("mismatches", mismatches.to_string()));
        if mismatches > 0 {
            exit = ExitCode::from(1);
        }
    }
    print_record(ctx.format, &fields);
    Ok(exit)
}
