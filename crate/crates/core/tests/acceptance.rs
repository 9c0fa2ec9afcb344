//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::hint::black_box;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use jumbled::corner::{lmin_candidates, BuildObserver, CornerBuilder, CornerKind};
use jumbled::oracle::{self, Oracle};
use jumbled::pnf::{padded_run_count, pnf_from_index, verify_pnf_relations};
use jumbled::rle::encode;
use jumbled::textgen::{random_text_with_runs, TextModel};
use jumbled::{persist, CornerIndex, Error, IndexCheck, ParikhVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE: &[u8] = b"aabababbaaabbaabbb";

type Outcome = Result<String, String>;

fn pv(x: u64, y: u64) -> ParikhVector {
    ParikhVector::new(x, y)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

#[derive(Default)]
struct Trace {
    min_candidates: Vec<ParikhVector>,
    inserted: Vec<ParikhVector>,
    evicted: Vec<ParikhVector>,
}

impl BuildObserver for Trace {
    fn candidate(&mut self, kind: CornerKind, p: ParikhVector) {
        if kind == CornerKind::Min {
            self.min_candidates.push(p);
        }
    }

    fn inserted(&mut self, kind: CornerKind, p: ParikhVector) {
        if kind == CornerKind::Min {
            self.inserted.push(p);
        }
    }

    fn evicted(&mut self, kind: CornerKind, p: ParikhVector) {
        if kind == CornerKind::Min {
            self.evicted.push(p);
        }
    }
}

/// Counts only candidates, per list.
#[derive(Default)]
struct CandidateCount([u64; 2]);

impl BuildObserver for CandidateCount {
    fn candidate(&mut self, kind: CornerKind, _p: ParikhVector) {
        self.0[(kind == CornerKind::Max) as usize] += 1;
    }
}

/// Size-bound and cardinality checks shared by criteria 5 and 6.
#[derive(Default)]
struct Tally {
    strings: u64,
    size_violations: Vec<String>,
    count_violations: Vec<String>,
    cardinality_checked: u64,
    cardinality_violations: Vec<String>,
}

impl Tally {
    fn record(&mut self, text: &[u8]) -> CornerIndex {
        self.strings += 1;
        let rle = encode(text).unwrap();
        let r = rle.pairs() as u64;
        let tri = r * (r + 1) / 2;
        let mut counter = CandidateCount::default();
        let idx = CornerIndex::from_rle_observed(&rle, &mut counter);
        let show = || String::from_utf8_lossy(text).into_owned();
        if counter.0 != [tri, tri] {
            self.count_violations.push(format!("{}: {:?} != {tri}", show(), counter.0));
        }
        let (a, b) = (idx.total_a(), idx.total_b());
        if a > 0 && b > 0 {
            let (lmin, lmax) = (idx.l_min().len() as u64, idx.l_max().len() as u64);
            if lmin > a.min(b + 1).min(tri) || lmax > (a + 1).min(b).min(tri) {
                self.size_violations.push(format!("{}: |l_min|={lmin} |l_max|={lmax}", show()));
            }
        }
        if !text.is_empty() {
            self.cardinality_checked += 1;
            let pnf = pnf_from_index(&idx);
            let runs = padded_run_count(pnf.pnf_a.as_bytes()).unwrap();
            if runs != 2 * idx.l_min().len() {
                self.cardinality_violations
                    .push(format!("{}: |rle(PNF_a)|={runs} |l_min|={}", show(), idx.l_min().len()));
            }
        }
        idx
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let idx = CornerIndex::build(EXAMPLE).map_err(|e| e.to_string())?;
    let steps = idx.step_tables();
    ensure(idx.l_min().points() == [pv(3, 0), pv(5, 2), pv(7, 4), pv(9, 6)], || {
        format!("l_min = {:?}", idx.l_min())
    })?;
    ensure(
        idx.l_max().points() == [pv(0, 3), pv(2, 5), pv(5, 7), pv(6, 8), pv(7, 9)],
        || format!("l_max = {:?}", idx.l_max()),
    )?;
    ensure(steps.bmin == [0, 0, 0, 0, 2, 2, 4, 4, 6, 6], || format!("bmin = {:?}", steps.bmin))?;
    ensure(steps.bmax == [3, 3, 5, 5, 5, 7, 8, 9, 9, 9], || format!("bmax = {:?}", steps.bmax))?;
    let dense: Vec<u64> = (0..=9).map(|x| idx.bmin(x).unwrap()).collect();
    ensure(dense == steps.bmin, || "bmin lookups disagree with step table".into())?;
    let dense: Vec<u64> = (0..=9).map(|x| idx.bmax(x).unwrap()).collect();
    ensure(dense == steps.bmax, || "bmax lookups disagree with step table".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("lists and dense bmin/bmax tables match exactly".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let rle = encode(EXAMPLE).unwrap();
    let mut trace = Trace::default();
    let idx = CornerIndex::from_rle_observed(&rle, &mut trace);
    let expected: Vec<ParikhVector> = [
        (2, 0), (1, 0), (1, 0), (3, 0), (2, 0),
        (3, 1), (2, 1), (4, 2), (5, 2),
        (4, 2), (5, 3), (6, 4),
        (7, 4), (7, 5),
        (9, 6),
    ]
    .into_iter()
    .map(ParikhVector::from)
    .collect();
    ensure(trace.min_candidates == expected, || {
        format!("candidate order {:?}", trace.min_candidates)
    })?;
    let transient = [pv(2, 0), pv(4, 2), pv(6, 4)];
    ensure(trace.evicted == transient, || format!("evicted {:?}", trace.evicted))?;
    let final_set: BTreeSet<_> = idx.l_min().iter().copied().collect();
    let inserted_then_deleted: Vec<_> = trace
        .inserted
        .iter()
        .filter(|p| !final_set.contains(p))
        .copied()
        .collect();
    ensure(inserted_then_deleted == transient, || {
        format!("inserted-then-deleted {inserted_then_deleted:?}")
    })?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "15 candidates in order, transient {{(2,0),(4,2),(6,4)}}, peak working sizes {:?}",
        idx.peak_working_size()
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let idx = CornerIndex::build(EXAMPLE).unwrap();
    let pnfs = pnf_from_index(&idx);
    ensure(pnfs.pnf_a == "aaabbaabbaabbaabbb", || format!("PNF_a = {}", pnfs.pnf_a))?;
    ensure(pnfs.pnf_b == "bbbaabbaaabbababaa", || format!("PNF_b = {}", pnfs.pnf_b))?;
    ensure(verify_pnf_relations(&idx, &pnfs), || "rank/select relations fail".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("PNF_a, PNF_b reproduced; rank/select identities hold".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let idx = CornerIndex::build(EXAMPLE).unwrap();
    ensure(idx.query(pv(3, 3)), || "(3,3) should occur".into())?;
    ensure(!idx.query(pv(5, 1)), || "(5,1) should not occur".into())?;
    let t = idx.length_tables();
    ensure(t.big_f[6] == 4 && t.f[6] == 2, || format!("F(6)={} f(6)={}", t.big_f[6], t.f[6]))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("(3,3) occurs, (5,1) does not, F(6)=4, f(6)=2".into())
}

fn all_strings(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1u32 << n).map(move |bits| {
        (0..n)
            .map(|i| if bits >> i & 1 == 0 { b'a' } else { b'b' })
            .collect()
    })
}

fn criterion_5(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let mut strings = 0u64;
    let mut grid_points = 0u64;
    let mut mismatches = Vec::new();
    let mut lemma_failures = Vec::new();
    for n in 0..=14 {
        for text in all_strings(n) {
            strings += 1;
            let idx = tally.record(&text);
            let set = oracle::parikh_set_bruteforce(&text).unwrap();
            for x in 0..=idx.total_a() {
                for y in 0..=idx.total_b() {
                    grid_points += 1;
                    let q = pv(x, y);
                    if idx.query(q) != set.contains(&q) {
                        mismatches.push(format!("{} {q}", String::from_utf8_lossy(&text)));
                    }
                }
            }
            if n <= 12
                && !(oracle::verify_interval_lemma(&text).unwrap()
                    && oracle::full_run_witness_check(&text).unwrap())
            {
                lemma_failures.push(String::from_utf8_lossy(&text).into_owned());
            }
        }
    }
    ensure(strings == 32_767, || format!("enumerated {strings} strings"))?;
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first {:?}", mismatches.len(), mismatches.first())
    })?;
    ensure(lemma_failures.is_empty(), || format!("lemma failures: {lemma_failures:?}"))?;
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("{strings} strings (all of length 0..=14), {grid_points} grid queries, 0 mismatches"))
}

fn criterion_6(tally: &mut Tally) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut grid_points = 0u64;
    let mut mismatches = 0u64;
    for i in 0..1000 {
        let len = rng.random_range(0..=512);
        let model = if i % 2 == 0 {
            TextModel::FairCoin
        } else {
            TextModel::GeometricRuns(rng.random_range(0.02..0.5))
        };
        let text = model.generate(len, &mut rng);
        let idx = tally.record(&text);
        let table = Oracle::default().bmin_bmax(&text).unwrap();
        for x in 0..=idx.total_a() {
            for y in 0..=idx.total_b() {
                grid_points += 1;
                let q = pv(x, y);
                mismatches += (idx.query(q) != table.contains(q)) as u64;
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("1000 strings (fair coin + geometric runs), {grid_points} grid queries, 0 mismatches"))
}

fn criterion_7(tally: &Tally) -> Outcome {
    ensure(tally.size_violations.is_empty(), || {
        format!("size bound violated: {:?}", &tally.size_violations[..tally.size_violations.len().min(5)])
    })?;
    ensure(tally.count_violations.is_empty(), || {
        format!("candidate count off: {:?}", &tally.count_violations[..tally.count_violations.len().min(5)])
    })?;
    Ok(format!(
        "{} strings: |L_min| <= min(a, b+1, r(r+1)/2), |L_max| <= min(a+1, b, r(r+1)/2), r(r+1)/2 candidates per list",
        tally.strings
    ))
}

fn criterion_8(tally: &Tally) -> Outcome {
    ensure(tally.cardinality_violations.is_empty(), || {
        format!("{:?}", &tally.cardinality_violations[..tally.cardinality_violations.len().min(5)])
    })?;
    Ok(format!(
        "2|L_min| == padded |rle(PNF_a)| on {} non-empty strings",
        tally.cardinality_checked
    ))
}

fn min_time(reps: usize, mut f: impl FnMut()) -> Duration {
    (0..reps)
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn criterion_9() -> Outcome {
    const N: usize = 40_000;
    const QUERIES: usize = 400_000;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut build_coeffs = Vec::new();
    let mut query_coeffs = Vec::new();
    let mut details = Vec::new();
    for (rho, reps) in [(200usize, 30), (2_000, 5), (20_000, 2)] {
        let text = random_text_with_runs(N, rho, &mut rng);
        let mut idx = None;
        let build = min_time(reps, || idx = Some(CornerIndex::build(black_box(&text)).unwrap()));
        let idx = idx.unwrap();
        let queries: Vec<ParikhVector> = (0..QUERIES)
            .map(|_| pv(rng.random_range(0..=idx.total_a()), rng.random_range(0..=idx.total_b())))
            .collect();
        let query = min_time(3, || {
            let hits = queries.iter().filter(|&&q| idx.query(black_box(q))).count();
            black_box(hits);
        });
        let ln = (rho as f64).ln();
        let per_query = query.as_secs_f64() / QUERIES as f64;
        build_coeffs.push(build.as_secs_f64() / ((rho * rho) as f64 * ln));
        query_coeffs.push(per_query / ln);
        details.push(format!(
            "rho={rho}: build {:.2?} |L|={}+{}, {:.1} ns/query",
            build,
            idx.l_min().len(),
            idx.l_max().len(),
            per_query * 1e9
        ));
    }
    let max = build_coeffs.iter().cloned().fold(f64::MIN, f64::max);
    let min = build_coeffs.iter().cloned().fold(f64::MAX, f64::min);
    ensure(max / min <= 4.0, || {
        format!("build / (rho^2 ln rho) spread {:.2} > 4 [{}]", max / min, details.join("; "))
    })?;
    let growth = query_coeffs.iter().cloned().fold(f64::MIN, f64::max) / query_coeffs[0];
    ensure(growth <= 4.0, || {
        format!("query / ln rho grew by {growth:.2} > 4 [{}]", details.join("; "))
    })?;
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!(
        "build fit spread {:.2}, query/ln(rho) growth {growth:.2} [{}]",
        max / min,
        details.join("; ")
    ))
}

fn expect_check(bytes: &[u8], check: IndexCheck) -> Result<(), String> {
    match persist::from_bytes(bytes) {
        Err(Error::CorruptIndex(found)) if found == check => Ok(()),
        other => Err(format!("expected {check} rejection, got {other:?}")),
    }
}

fn put_u64(bytes: &mut [u8], at: usize, value: u64) {
    bytes[at..at + 8].copy_from_slice(&value.to_le_bytes());
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for i in 0..1000 {
        let len = rng.random_range(0..=512);
        let model = if i % 2 == 0 {
            TextModel::FairCoin
        } else {
            TextModel::GeometricRuns(0.1)
        };
        let idx = CornerIndex::build(&model.generate(len, &mut rng)).unwrap();
        let bytes = persist::to_bytes(&idx);
        ensure(bytes.len() as u64 == persist::encoded_len(&idx), || "size formula".into())?;
        let back = persist::from_bytes(&bytes).map_err(|e| e.to_string())?;
        ensure(back == idx && back.peak_working_size() == idx.peak_working_size(), || {
            format!("round trip {i} differs")
        })?;
    }

    let idx = CornerIndex::build(EXAMPLE).unwrap();
    let good = persist::to_bytes(&idx);
    let entry = |i: usize| 68 + 16 * i;
    let mut cases = 0;

    for cut in [0, 7, 11, 40, 67, 70, good.len() - 1] {
        expect_check(&good[..cut], IndexCheck::Truncated)?;
        cases += 1;
    }
    let mut bytes = good.clone();
    bytes.push(0);
    expect_check(&bytes, IndexCheck::TrailingBytes)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, 12, 19);
    expect_check(&bytes, IndexCheck::LengthSum)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, 36, 1 << 40);
    expect_check(&bytes, IndexCheck::ListSize)?;

    // swap l_min entries 1 and 2
    let mut bytes = good.clone();
    let tmp = bytes[entry(1)..entry(2)].to_vec();
    bytes.copy_within(entry(2)..entry(3), entry(1));
    bytes[entry(2)..entry(3)].copy_from_slice(&tmp);
    expect_check(&bytes, IndexCheck::MinOrder)?;

    // l_max starts at entry 4; equal x in consecutive entries
    let mut bytes = good.clone();
    put_u64(&mut bytes, entry(6), 2);
    expect_check(&bytes, IndexCheck::MaxOrder)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, entry(3), 8);
    expect_check(&bytes, IndexCheck::MinBoundary)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, entry(3) + 8, 10);
    expect_check(&bytes, IndexCheck::MinRange)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, entry(4), 1);
    expect_check(&bytes, IndexCheck::MaxBoundary)?;

    let mut bytes = good.clone();
    put_u64(&mut bytes, entry(8) + 8, 10);
    expect_check(&bytes, IndexCheck::MaxRange)?;
    cases += 9;

    let mut bytes = good.clone();
    bytes[0] ^= 0xff;
    ensure(matches!(persist::from_bytes(&bytes), Err(Error::Format(_))), || "bad magic accepted".into())?;
    let mut bytes = good.clone();
    bytes[8] = 9;
    ensure(matches!(persist::from_bytes(&bytes), Err(Error::Format(_))), || "bad version accepted".into())?;
    cases += 2;

    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("1000 round trips exact, {cases} corrupt files rejected with the named check"))
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for i in 0..100 {
        let len = rng.random_range(0..=256);
        let model = if i % 2 == 0 {
            TextModel::FairCoin
        } else {
            TextModel::GeometricRuns(0.2)
        };
        let text = model.generate(len, &mut rng);
        let rle = encode(&text).unwrap();
        let mut candidates: Vec<_> = lmin_candidates(&rle).collect();
        candidates.shuffle(&mut rng);
        let mut builder = CornerBuilder::new(CornerKind::Min);
        for p in candidates {
            builder.offer(p);
        }
        let shuffled = builder.finish();
        let reference = CornerIndex::from_rle(&rle);
        ensure(&shuffled == reference.l_min(), || {
            format!("{}: {:?} vs {:?}", String::from_utf8_lossy(&text), shuffled, reference.l_min())
        })?;
    }
    Ok("100 shuffled constructions identical".into())
}

fn main() -> ExitCode {
    let mut tally = Tally::default();
    let mut failed = 0;
    let mut report = |id: u32, name: &str, outcome: Outcome| {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {id:>2} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {id:>2} {name}: {detail}");
            }
        }
    };
    report(1, "worked-example golden", criterion_1());
    report(2, "construction trace", criterion_2());
    report(3, "PNF golden", criterion_3());
    report(4, "query golden", criterion_4());
    report(5, "exhaustive oracle equivalence", criterion_5(&mut tally));
    report(6, "randomized oracle equivalence", criterion_6(&mut tally));
    report(7, "size bounds", criterion_7(&tally));
    report(8, "cardinality identity", criterion_8(&tally));
    report(9, "scaling", criterion_9());
    report(10, "persistence", criterion_10());
    report(11, "insertion-order independence", criterion_11());
    if failed == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
