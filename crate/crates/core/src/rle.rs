//! Run-length encoding of binary texts.
//!
//! A text is written as `a^u1 b^v1 a^u2 b^v2 ... a^ur b^vr`. Every run length is
//! non-zero except possibly `u1` (text starts with `b`) and `vr` (text ends with
//! `a`). The padding keeps a-runs and b-runs paired one to one, which is what
//! the corner construction indexes over.

use std::str::FromStr;

use crate::error::{Error, Result};

/// Character mapping used when reading texts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    /// Letters are `a` and `b`.
    #[default]
    Ab,
    /// `0` stands for `a` and `1` for `b`.
    Binary,
}

impl Alphabet {
    /// Maps `input` to the canonical `a`/`b` form.
    pub fn normalize(self, input: &[u8]) -> Result<Vec<u8>> {
        let (zero, one) = match self {
            Alphabet::Ab => (b'a', b'b'),
            Alphabet::Binary => (b'0', b'1'),
        };
        input
            .iter()
            .enumerate()
            .map(|(position, &c)| match c {
                c if c == zero => Ok(b'a'),
                c if c == one => Ok(b'b'),
                _ => Err(Error::InvalidCharacter { position, found: c as char }),
            })
            .collect()
    }

    /// Maps a canonical `a`/`b` text back to this alphabet.
    pub fn render(self, canonical: &str) -> String {
        match self {
            Alphabet::Ab => canonical.to_owned(),
            Alphabet::Binary => canonical
                .chars()
                .map(|c| if c == 'a' { '0' } else { '1' })
                .collect(),
        }
    }
}

impl FromStr for Alphabet {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "ab" => Ok(Alphabet::Ab),
            "01" => Ok(Alphabet::Binary),
            other => Err(format!("unknown alphabet {other:?}, expected `ab` or `01`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunLengthEncoding {
    a_runs: Vec<u64>,
    b_runs: Vec<u64>,
}

impl RunLengthEncoding {
    /// Encodes a canonical `a`/`b` text.
    pub fn encode(text: &[u8]) -> Result<Self> {
        let mut a_runs = Vec::new();
        let mut b_runs = Vec::new();
        let mut pos = 0;
        while pos < text.len() {
            let a = run_length(text, pos, b'a');
            pos += a;
            let b = run_length(text, pos, b'b');
            pos += b;
            if a == 0 && b == 0 {
                return Err(Error::InvalidCharacter {
                    position: pos,
                    found: text[pos] as char,
                });
            }
            a_runs.push(a as u64);
            b_runs.push(b as u64);
        }
        Ok(RunLengthEncoding { a_runs, b_runs })
    }

    /// Builds an encoding from explicit run lengths, checking the padding rules.
    pub fn from_runs(a_runs: Vec<u64>, b_runs: Vec<u64>) -> Result<Self> {
        if a_runs.len() != b_runs.len() {
            return Err(Error::MalformedEncoding(format!(
                "{} a-runs but {} b-runs",
                a_runs.len(),
                b_runs.len()
            )));
        }
        let r = a_runs.len();
        for i in 0..r {
            if a_runs[i] == 0 && i != 0 {
                return Err(Error::MalformedEncoding(format!("a-run {} is empty", i + 1)));
            }
            if b_runs[i] == 0 && i != r - 1 {
                return Err(Error::MalformedEncoding(format!("b-run {} is empty", i + 1)));
            }
        }
        if r == 1 && a_runs[0] == 0 && b_runs[0] == 0 {
            return Err(Error::MalformedEncoding("single pair of empty runs".into()));
        }
        Ok(RunLengthEncoding { a_runs, b_runs })
    }

    pub fn decode(&self) -> String {
        let mut out = String::with_capacity(self.len() as usize);
        for (&a, &b) in self.a_runs.iter().zip(&self.b_runs) {
            out.extend(std::iter::repeat_n('a', a as usize));
            out.extend(std::iter::repeat_n('b', b as usize));
        }
        out
    }

    pub fn a_runs(&self) -> &[u64] {
        &self.a_runs
    }

    pub fn b_runs(&self) -> &[u64] {
        &self.b_runs
    }

    /// Number of (a-run, b-run) pairs, counting padded empty runs.
    pub fn pairs(&self) -> usize {
        self.a_runs.len()
    }

    /// Number of non-zero runs.
    pub fn rho(&self) -> usize {
        self.a_runs
            .iter()
            .chain(&self.b_runs)
            .filter(|&&len| len != 0)
            .count()
    }

    pub fn total_a(&self) -> u64 {
        self.a_runs.iter().sum()
    }

    pub fn total_b(&self) -> u64 {
        self.b_runs.iter().sum()
    }

    pub fn len(&self) -> u64 {
        self.total_a() + self.total_b()
    }

    pub fn is_empty(&self) -> bool {
        self.a_runs.is_empty()
    }

    /// Prefix sums `(A, B)` with `A[i] = u1 + ... + ui` and `A[0] = 0`, likewise `B`.
    pub fn prefix_sums(&self) -> (Vec<u64>, Vec<u64>) {
        (prefix(&self.a_runs), prefix(&self.b_runs))
    }
}

fn run_length(text: &[u8], from: usize, c: u8) -> usize {
    text[from..].iter().take_while(|&&x| x == c).count()
}

fn prefix(runs: &[u64]) -> Vec<u64> {
    let mut sums = Vec::with_capacity(runs.len() + 1);
    sums.push(0);
    let mut acc = 0;
    for &len in runs {
        acc += len;
        sums.push(acc);
    }
    sums
}

pub fn encode(text: &[u8]) -> Result<RunLengthEncoding> {
    RunLengthEncoding::encode(text)
}

pub fn decode(rle: &RunLengthEncoding) -> String {
    rle.decode()
}

pub fn rho(rle: &RunLengthEncoding) -> usize {
    rle.rho()
}
