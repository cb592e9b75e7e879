use std::fmt;

/// Selects one of the conjugations `†0` (identity), `†1`, `†2`, `†3`.
///
/// Sign patterns on `(w0, w1, w2, w3)`:
///
/// | kind | signs  |
/// |------|--------|
/// | †0   | `++++` |
/// | †1   | `+-+-` |
/// | †2   | `++--` |
/// | †3   | `+--+` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjKind {
    Dag0,
    Dag1,
    Dag2,
    Dag3,
}

// Composition table of the conjugation group, indexed [first][second].
const COMPOSE: [[ConjKind; 4]; 4] = {
    use ConjKind::*;
    [[Dag0, Dag1, Dag2, Dag3], [Dag1, Dag0, Dag3, Dag2], [Dag2, Dag3, Dag0, Dag1], [Dag3, Dag2, Dag1, Dag0]]
};

impl ConjKind {
    pub const ALL: [ConjKind; 4] = [ConjKind::Dag0, ConjKind::Dag1, ConjKind::Dag2, ConjKind::Dag3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(k: usize) -> Option<Self> {
        Self::ALL.get(k).copied()
    }

    /// Sign multipliers applied to `(w0, w1, w2, w3)`.
    pub fn signs(self) -> [f64; 4] {
        match self {
            ConjKind::Dag0 => [1.0, 1.0, 1.0, 1.0],
            ConjKind::Dag1 => [1.0, -1.0, 1.0, -1.0],
            ConjKind::Dag2 => [1.0, 1.0, -1.0, -1.0],
            ConjKind::Dag3 => [1.0, -1.0, -1.0, 1.0],
        }
    }

    /// The conjugation equal to applying `self` first and then `then`.
    pub fn compose(self, then: ConjKind) -> ConjKind {
        COMPOSE[self.index()][then.index()]
    }
}

impl fmt::Display for ConjKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "†{}", self.index())
    }
}
