//! The Corner Index.
//!
//! `bmin(i)` and `bmax(i)` (fewest and most b's in a substring with exactly
//! `i` a's) are non-decreasing step functions of `i`, and `(x, y)` occurs in
//! the text iff `bmin(x) <= y <= bmax(x)`. The index keeps only the points
//! where the steps happen:
//!
//! * `l_min`: `(i, bmin(i))` where `i = |s|_a` or `bmin(i) < bmin(i + 1)`,
//! * `l_max`: `(i, bmax(i))` where `i = 0` or `bmax(i) > bmax(i - 1)`.
//!
//! Both lists are strictly increasing in both coordinates. `l_min` is the set
//! of maximal elements of the occurring Parikh vectors under
//! [`ParikhVector::dominates_min`], and `l_max` likewise under
//! [`ParikhVector::dominates_max`].
//!
//! Construction inspects one candidate per span of consecutive a-runs (for
//! `l_min`) or b-runs (for `l_max`), `r(r+1)/2` each, keeping the current
//! maximal elements in an ordered map keyed by a-count.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::parikh::ParikhVector;
use crate::rle::RunLengthEncoding;

/// Which of the two lists a builder maintains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerKind {
    Min,
    Max,
}

impl CornerKind {
    pub fn dominates(self, p: &ParikhVector, q: &ParikhVector) -> bool {
        match self {
            CornerKind::Min => p.dominates_min(q),
            CornerKind::Max => p.dominates_max(q),
        }
    }
}

/// Result of offering one candidate to a [`CornerBuilder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Offer {
    /// Span with no a's (min) or no b's (max); comes only from padded runs.
    Skipped,
    /// An element already in the list dominates the candidate.
    Dominated,
    /// The candidate is already in the list.
    Duplicate,
    /// Inserted after evicting this many dominated elements.
    Inserted { evicted: usize },
}

/// Hooks into construction, used for tracing and tests.
pub trait BuildObserver {
    fn candidate(&mut self, _kind: CornerKind, _p: ParikhVector) {}
    fn inserted(&mut self, _kind: CornerKind, _p: ParikhVector) {}
    fn evicted(&mut self, _kind: CornerKind, _p: ParikhVector) {}
}

impl BuildObserver for () {}

/// Incremental maintenance of one corner list.
#[derive(Debug, Clone)]
pub struct CornerBuilder {
    kind: CornerKind,
    set: BTreeMap<u64, u64>,
    peak: usize,
    inspected: u64,
}

impl CornerBuilder {
    pub fn new(kind: CornerKind) -> Self {
        CornerBuilder { kind, set: BTreeMap::new(), peak: 0, inspected: 0 }
    }

    pub fn kind(&self) -> CornerKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Largest size the list has reached so far.
    pub fn peak(&self) -> usize {
        self.peak
    }

    /// Number of candidates offered so far, skipped ones included.
    pub fn inspected(&self) -> u64 {
        self.inspected
    }

    pub fn offer(&mut self, p: ParikhVector) -> Offer {
        self.offer_observed(p, &mut ())
    }

    pub fn offer_observed<O: BuildObserver + ?Sized>(
        &mut self,
        p: ParikhVector,
        observer: &mut O,
    ) -> Offer {
        self.inspected += 1;
        observer.candidate(self.kind, p);
        let outcome = match self.kind {
            CornerKind::Min => self.offer_min(p, observer),
            CornerKind::Max => self.offer_max(p, observer),
        };
        self.peak = self.peak.max(self.set.len());
        outcome
    }

    fn offer_min<O: BuildObserver + ?Sized>(&mut self, p: ParikhVector, observer: &mut O) -> Offer {
        if p.x == 0 {
            return Offer::Skipped;
        }
        // The successor has the fewest b's among entries with at least p.x a's,
        // so it alone decides whether p is dominated.
        if let Some((&x, &y)) = self.set.range(p.x..).next() {
            if (x, y) == (p.x, p.y) {
                return Offer::Duplicate;
            }
            if y <= p.y {
                return Offer::Dominated;
            }
        }
        let mut evicted = 0;
        while let Some((&x, &y)) = self.set.range(..=p.x).next_back() {
            if y < p.y {
                break;
            }
            self.set.remove(&x);
            observer.evicted(self.kind, ParikhVector::new(x, y));
            evicted += 1;
        }
        self.set.insert(p.x, p.y);
        observer.inserted(self.kind, p);
        Offer::Inserted { evicted }
    }

    fn offer_max<O: BuildObserver + ?Sized>(&mut self, p: ParikhVector, observer: &mut O) -> Offer {
        if p.y == 0 {
            return Offer::Skipped;
        }
        if let Some((&x, &y)) = self.set.range(..=p.x).next_back() {
            if (x, y) == (p.x, p.y) {
                return Offer::Duplicate;
            }
            if y >= p.y {
                return Offer::Dominated;
            }
        }
        let mut evicted = 0;
        while let Some((&x, &y)) = self.set.range(p.x..).next() {
            if y > p.y {
                break;
            }
            self.set.remove(&x);
            observer.evicted(self.kind, ParikhVector::new(x, y));
            evicted += 1;
        }
        self.set.insert(p.x, p.y);
        observer.inserted(self.kind, p);
        Offer::Inserted { evicted }
    }

    /// Freezes the list. An empty list (no a's for `Min`, no b's for `Max`)
    /// becomes the single boundary point `(0, 0)`.
    pub fn finish(self) -> CornerList {
        let mut points: Vec<ParikhVector> = self
            .set
            .into_iter()
            .map(|(x, y)| ParikhVector::new(x, y))
            .collect();
        if points.is_empty() {
            points.push(ParikhVector::ZERO);
        }
        CornerList(points)
    }
}

/// Candidates for `l_min` in construction order: for `k = 1..=r` and each
/// start run `i`, the span of `k` a-runs starting at run `i` together with
/// the `k - 1` b-runs between them.
pub fn lmin_candidates(rle: &RunLengthEncoding) -> impl Iterator<Item = ParikhVector> + '_ {
    let (a, b) = rle.prefix_sums();
    let r = rle.pairs();
    (1..=r).flat_map(move |k| {
        let (a, b) = (a.clone(), b.clone());
        (0..=r - k).map(move |i| ParikhVector::new(a[i + k] - a[i], b[i + k - 1] - b[i]))
    })
}

/// Candidates for `l_max`: spans of `k` b-runs with the `k - 1` a-runs between them.
pub fn lmax_candidates(rle: &RunLengthEncoding) -> impl Iterator<Item = ParikhVector> + '_ {
    let (a, b) = rle.prefix_sums();
    let r = rle.pairs();
    (1..=r).flat_map(move |k| {
        let (a, b) = (a.clone(), b.clone());
        (0..=r - k).map(move |j| ParikhVector::new(a[j + k] - a[j + 1], b[j + k] - b[j]))
    })
}

/// One of the two corner lists, sorted strictly ascending in both coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CornerList(Vec<ParikhVector>);

impl CornerList {
    /// Wraps points without checking order. Use [`CornerList::is_strict_chain`] to validate.
    pub fn from_points(points: Vec<ParikhVector>) -> Self {
        CornerList(points)
    }

    pub fn points(&self) -> &[ParikhVector] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&ParikhVector> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&ParikhVector> {
        self.0.last()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ParikhVector> {
        self.0.iter()
    }

    /// Entry with the smallest a-count `>= x`.
    pub fn successor(&self, x: u64) -> Option<&ParikhVector> {
        let i = self.0.partition_point(|p| p.x < x);
        self.0.get(i)
    }

    /// Entry with the largest a-count `<= x`.
    pub fn predecessor(&self, x: u64) -> Option<&ParikhVector> {
        let i = self.0.partition_point(|p| p.x <= x);
        i.checked_sub(1).map(|i| &self.0[i])
    }

    pub fn is_strict_chain(&self) -> bool {
        self.0.windows(2).all(|w| w[0].x < w[1].x && w[0].y < w[1].y)
    }
}

impl<'a> IntoIterator for &'a CornerList {
    type Item = &'a ParikhVector;
    type IntoIter = std::slice::Iter<'a, ParikhVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Dense `bmin`/`bmax` tables recovered from an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTables {
    pub bmin: Vec<u64>,
    pub bmax: Vec<u64>,
}

/// Fewest (`f`) and most (`big_f`) a's over substrings of each length `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTables {
    pub f: Vec<u64>,
    pub big_f: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct CornerIndex {
    pub(crate) l_min: CornerList,
    pub(crate) l_max: CornerList,
    pub(crate) n: u64,
    pub(crate) total_a: u64,
    pub(crate) total_b: u64,
    pub(crate) peak_min: u64,
    pub(crate) peak_max: u64,
}

// Peak sizes are construction telemetry and do not take part in equality.
impl PartialEq for CornerIndex {
    fn eq(&self, other: &Self) -> bool {
        self.l_min == other.l_min
            && self.l_max == other.l_max
            && self.n == other.n
            && self.total_a == other.total_a
            && self.total_b == other.total_b
    }
}

impl Eq for CornerIndex {}

impl CornerIndex {
    /// Indexes a canonical `a`/`b` text.
    pub fn build(text: &[u8]) -> Result<Self> {
        let rle = RunLengthEncoding::encode(text)?;
        Ok(Self::from_rle(&rle))
    }

    pub fn from_rle(rle: &RunLengthEncoding) -> Self {
        Self::from_rle_observed(rle, &mut ())
    }

    pub fn from_rle_observed<O: BuildObserver + ?Sized>(
        rle: &RunLengthEncoding,
        observer: &mut O,
    ) -> Self {
        let (a, b) = rle.prefix_sums();
        let r = rle.pairs();
        let mut min = CornerBuilder::new(CornerKind::Min);
        let mut max = CornerBuilder::new(CornerKind::Max);
        for k in 1..=r {
            for i in 0..=r - k {
                min.offer_observed(ParikhVector::new(a[i + k] - a[i], b[i + k - 1] - b[i]), observer);
            }
        }
        for k in 1..=r {
            for j in 0..=r - k {
                max.offer_observed(ParikhVector::new(a[j + k] - a[j + 1], b[j + k] - b[j]), observer);
            }
        }
        let (peak_min, peak_max) = (min.peak() as u64, max.peak() as u64);
        let total_a = rle.total_a();
        let total_b = rle.total_b();
        CornerIndex {
            l_min: min.finish(),
            l_max: max.finish(),
            n: total_a + total_b,
            total_a,
            total_b,
            peak_min,
            peak_max,
        }
    }

    /// Assembles an index from parts. The caller is responsible for validity.
    pub fn from_parts(
        l_min: CornerList,
        l_max: CornerList,
        total_a: u64,
        total_b: u64,
        peaks: (u64, u64),
    ) -> Self {
        CornerIndex {
            l_min,
            l_max,
            n: total_a + total_b,
            total_a,
            total_b,
            peak_min: peaks.0,
            peak_max: peaks.1,
        }
    }

    pub fn l_min(&self) -> &CornerList {
        &self.l_min
    }

    pub fn l_max(&self) -> &CornerList {
        &self.l_max
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn total_a(&self) -> u64 {
        self.total_a
    }

    pub fn total_b(&self) -> u64 {
        self.total_b
    }

    /// Largest working sizes of `l_min` and `l_max` during construction.
    pub fn peak_working_size(&self) -> (u64, u64) {
        (self.peak_min, self.peak_max)
    }

    /// Fewest b's in a substring with exactly `x` a's.
    pub fn bmin(&self, x: u64) -> Result<u64> {
        if x > self.total_a {
            return Err(Error::OutOfRange { x, total_a: self.total_a });
        }
        Ok(self.l_min.successor(x).map_or(0, |p| p.y))
    }

    /// Most b's in a substring with exactly `x` a's.
    pub fn bmax(&self, x: u64) -> Result<u64> {
        if x > self.total_a {
            return Err(Error::OutOfRange { x, total_a: self.total_a });
        }
        Ok(self.l_max.predecessor(x).map_or(0, |p| p.y))
    }

    /// Does some substring have exactly `q.x` a's and `q.y` b's?
    pub fn query(&self, q: ParikhVector) -> bool {
        match (self.bmin(q.x), self.bmax(q.x)) {
            (Ok(lo), Ok(hi)) => lo <= q.y && q.y <= hi,
            _ => false,
        }
    }

    pub fn step_tables(&self) -> StepTables {
        let mut bmin = Vec::with_capacity(self.total_a as usize + 1);
        let mut bmax = Vec::with_capacity(self.total_a as usize + 1);
        let mut mins = self.l_min.iter().peekable();
        let mut maxs = self.l_max.iter().peekable();
        let mut current_max = 0;
        for x in 0..=self.total_a {
            while mins.peek().is_some_and(|p| p.x < x) {
                mins.next();
            }
            bmin.push(mins.peek().map_or(0, |p| p.y));
            while let Some(p) = maxs.next_if(|p| p.x <= x) {
                current_max = p.y;
            }
            bmax.push(current_max);
        }
        StepTables { bmin, bmax }
    }

    /// `f(m)`/`F(m)` for every length, derived from the step tables in `O(n)`.
    ///
    /// `F(m)` is the largest `i` with `i + bmin(i) <= m` and `f(m)` the smallest
    /// `i` with `i + bmax(i) >= m`; both sides are monotone in `i`.
    pub fn length_tables(&self) -> LengthTables {
        let steps = self.step_tables();
        let n = self.n as usize;
        let mut f = vec![0; n + 1];
        let mut big_f = vec![0; n + 1];
        let mut hi = 0usize;
        let mut lo = 0usize;
        for m in 0..=n {
            while hi + 1 < steps.bmin.len() && (hi + 1) as u64 + steps.bmin[hi + 1] <= m as u64 {
                hi += 1;
            }
            while lo < steps.bmax.len() && (lo as u64 + steps.bmax[lo]) < m as u64 {
                lo += 1;
            }
            big_f[m] = hi as u64;
            f[m] = lo as u64;
        }
        LengthTables { f, big_f }
    }
}

/// Builds `l_min` alone.
pub fn build_lmin(rle: &RunLengthEncoding) -> CornerList {
    let mut builder = CornerBuilder::new(CornerKind::Min);
    for p in lmin_candidates(rle) {
        builder.offer(p);
    }
    builder.finish()
}

/// Builds `l_max` alone.
pub fn build_lmax(rle: &RunLengthEncoding) -> CornerList {
    let mut builder = CornerBuilder::new(CornerKind::Max);
    for p in lmax_candidates(rle) {
        builder.offer(p);
    }
    builder.finish()
}

pub fn build_index(text: &[u8]) -> Result<CornerIndex> {
    CornerIndex::build(text)
}
