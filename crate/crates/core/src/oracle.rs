//! Brute-force reference implementations.
//!
//! Nothing here touches the run-length or corner machinery: every answer is
//! derived by enumerating substrings of the raw text. Inputs are canonical
//! `a`/`b` byte strings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::parikh::ParikhVector;

pub const DEFAULT_MAX_N: usize = 4096;

/// Dense per-a-count tables of the fewest and most b's in a substring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BminBmaxTable {
    pub bmin: Vec<u64>,
    pub bmax: Vec<u64>,
}

impl BminBmaxTable {
    pub fn total_a(&self) -> u64 {
        self.bmin.len() as u64 - 1
    }

    pub fn contains(&self, q: ParikhVector) -> bool {
        match self.bmin.get(q.x as usize) {
            Some(&lo) => lo <= q.y && q.y <= self.bmax[q.x as usize],
            None => false,
        }
    }

    /// Points where `bmin` increases (plus the last a-count).
    pub fn min_corners(&self) -> Vec<ParikhVector> {
        let last = self.bmin.len() - 1;
        (0..=last)
            .filter(|&i| i == last || self.bmin[i] < self.bmin[i + 1])
            .map(|i| ParikhVector::new(i as u64, self.bmin[i]))
            .collect()
    }

    /// Points where `bmax` increases (plus a-count zero).
    pub fn max_corners(&self) -> Vec<ParikhVector> {
        (0..self.bmax.len())
            .filter(|&i| i == 0 || self.bmax[i] > self.bmax[i - 1])
            .map(|i| ParikhVector::new(i as u64, self.bmax[i]))
            .collect()
    }
}

/// Brute-force reference with a bound on text length.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub max_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { max_n: DEFAULT_MAX_N }
    }
}

impl Oracle {
    pub fn with_bound(max_n: usize) -> Self {
        Oracle { max_n }
    }

    fn check(&self, text: &[u8]) -> Result<()> {
        if text.len() > self.max_n {
            return Err(Error::OracleBound { len: text.len(), bound: self.max_n });
        }
        Ok(())
    }

    /// Every substring's Parikh vector, including the empty substring's.
    pub fn parikh_set(&self, text: &[u8]) -> Result<BTreeSet<ParikhVector>> {
        self.check(text)?;
        let mut set = BTreeSet::new();
        set.insert(ParikhVector::ZERO);
        for start in 0..text.len() {
            let mut p = ParikhVector::ZERO;
            for &c in &text[start..] {
                if c == b'a' {
                    p.x += 1;
                } else {
                    p.y += 1;
                }
                set.insert(p);
            }
        }
        Ok(set)
    }

    pub fn bmin_bmax(&self, text: &[u8]) -> Result<BminBmaxTable> {
        self.check(text)?;
        let total_a = text.iter().filter(|&&c| c == b'a').count();
        let mut bmin = vec![u64::MAX; total_a + 1];
        let mut bmax = vec![0; total_a + 1];
        bmin[0] = 0;
        for start in 0..text.len() {
            let (mut a, mut b) = (0usize, 0u64);
            for &c in &text[start..] {
                if c == b'a' {
                    a += 1;
                } else {
                    b += 1;
                }
                bmin[a] = bmin[a].min(b);
                bmax[a] = bmax[a].max(b);
            }
        }
        Ok(BminBmaxTable { bmin, bmax })
    }

    /// Fewest (`f`) and most (`F`) a's over substrings of each length `0..=n`.
    pub fn f_big_f(&self, text: &[u8]) -> Result<(Vec<u64>, Vec<u64>)> {
        self.check(text)?;
        let n = text.len();
        let mut f = vec![0; n + 1];
        let mut big_f = vec![0; n + 1];
        for m in 1..=n {
            let counts = window_a_counts(text, m);
            f[m] = counts.iter().copied().min().unwrap_or(0);
            big_f[m] = counts.iter().copied().max().unwrap_or(0);
        }
        Ok((f, big_f))
    }

    /// Prefix normal forms `(PNF_a, PNF_b)` built straight from window maxima.
    pub fn prefix_normal_forms(&self, text: &[u8]) -> Result<(String, String)> {
        self.check(text)?;
        let n = text.len();
        let mut pnf_a = String::with_capacity(n);
        let mut pnf_b = String::with_capacity(n);
        let (mut prev_a, mut prev_b) = (0, 0);
        for m in 1..=n {
            let counts = window_a_counts(text, m);
            let max_a = counts.iter().copied().max().unwrap();
            let max_b = m as u64 - counts.iter().copied().min().unwrap();
            pnf_a.push(if max_a > prev_a { 'a' } else { 'b' });
            pnf_b.push(if max_b > prev_b { 'b' } else { 'a' });
            prev_a = max_a;
            prev_b = max_b;
        }
        Ok((pnf_a, pnf_b))
    }

    /// For every length, the a-counts of length-m substrings form an interval.
    pub fn verify_interval_lemma(&self, text: &[u8]) -> Result<bool> {
        let set = self.parikh_set(text)?;
        for m in 0..=text.len() as u64 {
            let xs: Vec<u64> = (0..=m)
                .filter(|&x| set.contains(&ParikhVector::new(x, m - x)))
                .collect();
            if let (Some(&lo), Some(&hi)) = (xs.first(), xs.last()) {
                if (hi - lo + 1) as usize != xs.len() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks that every occurring vector is bounded by a substring made of
    /// whole a-runs (fewer-or-equal b's, more-or-equal a's), and dually by one
    /// made of whole b-runs. The empty substring counts as a witness.
    pub fn full_run_witness_check(&self, text: &[u8]) -> Result<bool> {
        let set = self.parikh_set(text)?;
        let n = text.len();
        // fewest b's among a-run witnesses with at least x a's
        let mut fewest_b = vec![u64::MAX; n + 2];
        for w in full_run_spans(text, b'a') {
            fewest_b[w.x as usize] = fewest_b[w.x as usize].min(w.y);
        }
        for x in (0..=n).rev() {
            fewest_b[x] = fewest_b[x].min(fewest_b[x + 1]);
        }
        // most b's among b-run witnesses with at most x a's
        // (the empty witness keeps every entry defined)
        let mut most_b = vec![0u64; n + 1];
        for w in full_run_spans(text, b'b') {
            most_b[w.x as usize] = most_b[w.x as usize].max(w.y);
        }
        for x in 1..=n {
            most_b[x] = most_b[x].max(most_b[x - 1]);
        }
        Ok(set.iter().all(|q| {
            let x = q.x as usize;
            fewest_b[x] <= q.y && most_b[x] >= q.y
        }))
    }
}

fn window_a_counts(text: &[u8], m: usize) -> Vec<u64> {
    text.windows(m)
        .map(|w| w.iter().filter(|&&c| c == b'a').count() as u64)
        .collect()
}

/// Parikh vectors of substrings that begin and end with a whole `c`-run.
fn full_run_spans(text: &[u8], c: u8) -> Vec<ParikhVector> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < text.len() {
        if text[i] == c {
            let start = i;
            while i < text.len() && text[i] == c {
                i += 1;
            }
            runs.push((start, i));
        } else {
            i += 1;
        }
    }
    let mut spans = vec![ParikhVector::ZERO];
    for (i, &(start, _)) in runs.iter().enumerate() {
        for &(_, end) in &runs[i..] {
            spans.push(ParikhVector::of(&text[start..end]));
        }
    }
    spans
}

/// Linear-time single query: does some window of length `x + y` hold exactly `x` a's?
pub fn sliding_window_query(text: &[u8], q: ParikhVector) -> bool {
    let m = q.len() as usize;
    if m == 0 {
        return true;
    }
    if m > text.len() {
        return false;
    }
    let mut a = text[..m].iter().filter(|&&c| c == b'a').count() as u64;
    if a == q.x {
        return true;
    }
    for i in m..text.len() {
        a += (text[i] == b'a') as u64;
        a -= (text[i - m] == b'a') as u64;
        if a == q.x {
            return true;
        }
    }
    false
}

/// Maximal elements of `set` under `dominates`.
pub fn maximal_elements(
    set: &BTreeSet<ParikhVector>,
    dominates: impl Fn(&ParikhVector, &ParikhVector) -> bool,
) -> Vec<ParikhVector> {
    set.iter()
        .filter(|q| !set.iter().any(|p| dominates(p, q)))
        .copied()
        .collect()
}

pub fn parikh_set_bruteforce(text: &[u8]) -> Result<BTreeSet<ParikhVector>> {
    Oracle::default().parikh_set(text)
}

pub fn bmin_bmax_naive(text: &[u8]) -> Result<BminBmaxTable> {
    Oracle::default().bmin_bmax(text)
}

pub fn verify_interval_lemma(text: &[u8]) -> Result<bool> {
    Oracle::default().verify_interval_lemma(text)
}

pub fn full_run_witness_check(text: &[u8]) -> Result<bool> {
    Oracle::default().full_run_witness_check(text)
}
