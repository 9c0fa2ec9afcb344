use std::fmt;

/// Counts of a's (`x`) and b's (`y`) in a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ParikhVector {
    pub x: u64,
    pub y: u64,
}

impl ParikhVector {
    pub const ZERO: ParikhVector = ParikhVector { x: 0, y: 0 };

    pub const fn new(x: u64, y: u64) -> Self {
        ParikhVector { x, y }
    }

    /// Parikh vector of a text over `a`/`b`. Other bytes are ignored.
    pub fn of(text: &[u8]) -> Self {
        let x = text.iter().filter(|&&c| c == b'a').count() as u64;
        let y = text.iter().filter(|&&c| c == b'b').count() as u64;
        ParikhVector { x, y }
    }

    pub fn len(&self) -> u64 {
        self.x + self.y
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `self` has at least as many a's and at most as many b's as `other`, and differs from it.
    pub fn dominates_min(&self, other: &ParikhVector) -> bool {
        self != other && self.x >= other.x && self.y <= other.y
    }

    /// Mirror order: at most as many a's and at least as many b's, and differs.
    pub fn dominates_max(&self, other: &ParikhVector) -> bool {
        self != other && self.x <= other.x && self.y >= other.y
    }

    pub fn swapped(&self) -> ParikhVector {
        ParikhVector { x: self.y, y: self.x }
    }
}

impl From<(u64, u64)> for ParikhVector {
    fn from((x, y): (u64, u64)) -> Self {
        ParikhVector { x, y }
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn dominates_min(p: ParikhVector, q: ParikhVector) -> bool {
    p.dominates_min(&q)
}

pub fn dominates_max(p: ParikhVector, q: ParikhVector) -> bool {
    p.dominates_max(&q)
}
