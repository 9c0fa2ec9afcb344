//! Prefix normal forms read off the corner lists.
//!
//! `PNF_a(s)` is the string whose length-`m` prefix has as many a's as the
//! most a's in any length-`m` substring of `s`; `PNF_b(s)` is the same for b's.
//! Drawn as a lattice walk (a = right, b = up), `PNF_a` traces `bmin` and
//! `PNF_b` traces `bmax`, so their run-length encodings are exactly the corner
//! lists.

use crate::corner::CornerIndex;
use crate::error::{Error, Result};
use crate::rle::RunLengthEncoding;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn byte(self) -> u8 {
        match self {
            Letter::A => b'a',
            Letter::B => b'b',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnfPair {
    pub pnf_a: String,
    pub pnf_b: String,
}

/// Number of `c`'s among the first `i` characters.
pub fn rank(text: &[u8], c: Letter, i: usize) -> Result<usize> {
    if i > text.len() {
        return Err(Error::PositionOutOfRange { index: i, len: text.len() });
    }
    Ok(text[..i].iter().filter(|&&x| x == c.byte()).count())
}

/// 1-based position of the `i`-th `c`.
pub fn select(text: &[u8], c: Letter, i: usize) -> Result<usize> {
    if i == 0 {
        let count = text.iter().filter(|&&x| x == c.byte()).count();
        return Err(Error::SelectOutOfRange { rank: i, count });
    }
    text.iter()
        .enumerate()
        .filter(|&(_, &x)| x == c.byte())
        .nth(i - 1)
        .map(|(pos, _)| pos + 1)
        .ok_or_else(|| Error::SelectOutOfRange {
            rank: i,
            count: text.iter().filter(|&&x| x == c.byte()).count(),
        })
}

/// Prefix counts of one letter, so that `rank` is a table lookup.
#[derive(Debug, Clone)]
pub struct RankTable {
    counts: Vec<usize>,
}

impl RankTable {
    pub fn new(text: &[u8], c: Letter) -> Self {
        let mut counts = Vec::with_capacity(text.len() + 1);
        counts.push(0);
        let mut acc = 0;
        for &x in text {
            acc += (x == c.byte()) as usize;
            counts.push(acc);
        }
        RankTable { counts }
    }

    pub fn rank(&self, i: usize) -> Option<usize> {
        self.counts.get(i).copied()
    }

    pub fn select(&self, i: usize) -> Option<usize> {
        if i == 0 || i > *self.counts.last()? {
            return None;
        }
        Some(self.counts.partition_point(|&c| c < i))
    }
}

/// Recovers both prefix normal forms from an index in `O(n)`.
pub fn pnf_from_index(index: &CornerIndex) -> PnfPair {
    // l_min = (p_1, q_0), ..., (p_r', q_{r'-1}) with p, q prefix sums of the
    // a- and b-runs of PNF_a, and q_r' = |s|_b.
    let mut a_runs = Vec::with_capacity(index.l_min().len());
    let mut b_runs = Vec::with_capacity(index.l_min().len());
    let mins = index.l_min().points();
    let mut prev_x = 0;
    for (m, p) in mins.iter().enumerate() {
        let next_q = mins.get(m + 1).map_or(index.total_b(), |next| next.y);
        a_runs.push(p.x - prev_x);
        b_runs.push(next_q - p.y);
        prev_x = p.x;
    }
    let pnf_a = decode_runs(&a_runs, &b_runs, index.n());

    // l_max = (0, y_0), (x_1, y_1), ... gives PNF_b = b^y0 a^x1 b^(y1-y0) ...
    // followed by whatever a's remain.
    let mut pnf_b = String::with_capacity(index.n() as usize);
    let (mut x, mut y) = (0, 0);
    for p in index.l_max() {
        push_run(&mut pnf_b, 'a', p.x - x);
        push_run(&mut pnf_b, 'b', p.y - y);
        (x, y) = (p.x, p.y);
    }
    push_run(&mut pnf_b, 'a', index.total_a() - x);
    push_run(&mut pnf_b, 'b', index.total_b() - y);

    PnfPair { pnf_a, pnf_b }
}

fn decode_runs(a_runs: &[u64], b_runs: &[u64], n: u64) -> String {
    let mut out = String::with_capacity(n as usize);
    for (&a, &b) in a_runs.iter().zip(b_runs) {
        push_run(&mut out, 'a', a);
        push_run(&mut out, 'b', b);
    }
    out
}

fn push_run(out: &mut String, c: char, len: u64) {
    out.extend(std::iter::repeat_n(c, len as usize));
}

/// Padded run count of a text: `2r` where `r` counts (a-run, b-run) pairs.
pub fn padded_run_count(text: &[u8]) -> Result<usize> {
    Ok(2 * RunLengthEncoding::encode(text)?.pairs())
}

/// Checks the rank/select identities linking the index to its PNFs and
/// returns a description of the first one that fails.
pub fn pnf_relation_violation(index: &CornerIndex, pnfs: &PnfPair) -> Option<String> {
    let n = index.n() as usize;
    let total_a = index.total_a() as usize;
    if pnfs.pnf_a.len() != n || pnfs.pnf_b.len() != n {
        return Some(format!(
            "PNF lengths {}/{} differ from text length {n}",
            pnfs.pnf_a.len(),
            pnfs.pnf_b.len()
        ));
    }
    let rank_a = RankTable::new(pnfs.pnf_a.as_bytes(), Letter::A);
    let b_side = RankTable::new(pnfs.pnf_b.as_bytes(), Letter::A);
    let lengths = index.length_tables();

    for i in 0..=n {
        let rank = rank_a.rank(i).unwrap() as u64;
        if lengths.big_f[i] != rank {
            return Some(format!("F({i}) = {} but rank_a(PNF_a, {i}) = {rank}", lengths.big_f[i]));
        }
    }
    for i in 1..=total_a {
        let bmin = index.bmin(i as u64).ok()?;
        let Some(pos) = rank_a.select(i) else {
            return Some(format!("PNF_a has fewer than {i} a's"));
        };
        if bmin != (pos - i) as u64 {
            return Some(format!("bmin({i}) = {bmin} but select_a(PNF_a, {i}) - {i} = {}", pos - i));
        }
    }
    for i in 0..total_a {
        let bmax = index.bmax(i as u64).ok()?;
        let Some(pos) = b_side.select(i + 1) else {
            return Some(format!("PNF_b has fewer than {} a's", i + 1));
        };
        if bmax != (pos - (i + 1)) as u64 {
            return Some(format!(
                "bmax({i}) = {bmax} but select_a(PNF_b, {}) - {} = {}",
                i + 1,
                i + 1,
                pos - (i + 1)
            ));
        }
    }
    let last = index.bmax(index.total_a()).ok()?;
    if last != index.total_b() {
        return Some(format!("bmax(|s|_a) = {last} but |s|_b = {}", index.total_b()));
    }
    None
}

pub fn verify_pnf_relations(index: &CornerIndex, pnfs: &PnfPair) -> bool {
    pnf_relation_violation(index, pnfs).is_none()
}
