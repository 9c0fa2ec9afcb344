//! Random binary texts for experiments, benchmarks and tests.

use rand::Rng;
use rand_distr::{Distribution, Geometric};

/// How random texts are drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TextModel {
    /// Each character is an independent fair coin flip.
    FairCoin,
    /// Alternating runs whose lengths are `1 + Geometric(p)`, so the mean run
    /// length is `1/p`. The first letter is a fair coin flip.
    GeometricRuns(f64),
}

impl TextModel {
    pub fn generate<R: Rng + ?Sized>(&self, len: usize, rng: &mut R) -> Vec<u8> {
        match *self {
            TextModel::FairCoin => (0..len)
                .map(|_| if rng.random::<bool>() { b'a' } else { b'b' })
                .collect(),
            TextModel::GeometricRuns(p) => {
                let geometric = Geometric::new(p).expect("run probability must lie in (0, 1]");
                let mut text = Vec::with_capacity(len);
                let mut letter = if rng.random::<bool>() { b'a' } else { b'b' };
                while text.len() < len {
                    let run = 1 + geometric.sample(rng) as usize;
                    let run = run.min(len - text.len());
                    text.extend(std::iter::repeat_n(letter, run));
                    letter = if letter == b'a' { b'b' } else { b'a' };
                }
                text
            }
        }
    }
}

/// A text of length `len` with exactly `runs` maximal runs (`1 <= runs <= len`),
/// run lengths spread as evenly as possible, starting with `a`.
pub fn text_with_runs(len: usize, runs: usize) -> Vec<u8> {
    assert!(runs >= 1 && runs <= len, "need 1 <= runs <= len");
    let mut text = Vec::with_capacity(len);
    for i in 0..runs {
        let run = len / runs + usize::from(i < len % runs);
        let letter = if i % 2 == 0 { b'a' } else { b'b' };
        text.extend(std::iter::repeat_n(letter, run));
    }
    text
}

/// Like [`text_with_runs`] but with run lengths drawn at random.
pub fn random_text_with_runs<R: Rng + ?Sized>(len: usize, runs: usize, rng: &mut R) -> Vec<u8> {
    assert!(runs >= 1 && runs <= len, "need 1 <= runs <= len");
    // choose runs - 1 distinct cut points in 1..len
    let mut cuts = rand::seq::index::sample(rng, len - 1, runs - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect::<Vec<_>>();
    cuts.sort_unstable();
    cuts.push(len);
    let mut text = Vec::with_capacity(len);
    let mut start = 0;
    for (i, &end) in cuts.iter().enumerate() {
        let letter = if i % 2 == 0 { b'a' } else { b'b' };
        text.extend(std::iter::repeat_n(letter, end - start));
        start = end;
    }
    text
}
