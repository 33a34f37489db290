use core::fmt;

/// Errors produced by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The image array is not a bijection of `0..n`.
    NotAPermutation,
    /// Permutations of degree zero are not allowed.
    EmptyPermutation,
    DegreeMismatch {
        left: usize,
        right: usize,
    },
    /// One of the two curves is not a single closed curve through every crossing.
    NotSingleCurve(Curve),
    UnknownCrossing {
        crossing: usize,
        n: usize,
    },
    /// A puncture mark names a face that does not exist.
    UnknownFace {
        face: usize,
        faces: usize,
    },
    /// Sign vectors must have one entry of `+1` or `-1` per crossing.
    MalformedSigns,
    /// The surface generated by the two permutations is disconnected.
    Intransitive,
    InvalidScheme(SchemeViolation),
    /// The odd/even construction was asked for the wrong parity.
    Parity {
        genus: usize,
        expected_odd: bool,
    },
    /// Minimal coherent filling pairs cannot be built below genus 3.
    GenusTooSmall {
        genus: usize,
    },
    InvalidPunctures {
        punctures: usize,
    },
    /// Not enough removable handles to split the scheme into the requested forest.
    InfeasibleRemoval {
        requested: usize,
        available: usize,
    },
}

/// Which of the two curves a message is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    Alpha,
    Beta,
}

/// The scheme condition that failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeViolation {
    EmptySeed,
    SpliceOutOfRange { arc: usize, splice: usize },
    DuplicateSplice { splice: usize },
    GapOutOfRange { arc: usize, gap: usize },
    RankCollision { gap: usize, rank: i64 },
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::Alpha => f.write_str("alpha"),
            Curve::Beta => f.write_str("beta"),
        }
    }
}

impl fmt::Display for SchemeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeViolation::EmptySeed => f.write_str("seed must have at least one crossing"),
            SchemeViolation::SpliceOutOfRange { arc, splice } => {
                write!(f, "arc {arc}: splice point {splice} is not a seed crossing")
            }
            SchemeViolation::DuplicateSplice { splice } => {
                write!(f, "splice point {splice} is used by more than one arc")
            }
            SchemeViolation::GapOutOfRange { arc, gap } => {
                write!(f, "arc {arc}: gap {gap} is not a seed gap")
            }
            SchemeViolation::RankCollision { gap, rank } => {
                write!(f, "rank {rank} is used twice in gap {gap}")
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPermutation => f.write_str("image array is not a permutation"),
            Error::EmptyPermutation => f.write_str("permutation degree must be positive"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::NotSingleCurve(curve) => {
                write!(
                    f,
                    "{curve} order is not a single cycle through every crossing"
                )
            }
            Error::UnknownCrossing { crossing, n } => {
                write!(f, "crossing {crossing} does not exist (n = {n})")
            }
            Error::UnknownFace { face, faces } => {
                write!(f, "face {face} does not exist ({faces} faces)")
            }
            Error::MalformedSigns => f.write_str("signs must be +1 or -1, one per crossing"),
            Error::Intransitive => f.write_str("gluing permutations do not act transitively"),
            Error::InvalidScheme(v) => write!(f, "invalid attaching scheme: {v}"),
            Error::Parity {
                genus,
                expected_odd,
            } => {
                let want = if *expected_odd { "odd" } else { "even" };
                write!(f, "genus {genus} is not {want}")
            }
            Error::GenusTooSmall { genus: 2 } => f.write_str(
                "no minimal coherent filling pair exists for genus 2: a genus-2 filling pair \
                 needs at least 4 crossings, and on the 2-crossing torus seed every 1-handle \
                 joins a boundary curve to itself",
            ),
            Error::GenusTooSmall { genus } => {
                write!(f, "genus {genus} is below 3, where the constructions start")
            }
            Error::InvalidPunctures { punctures } => {
                write!(f, "puncture count {punctures} must be at least 1")
            }
            Error::InfeasibleRemoval {
                requested,
                available,
            } => write!(
                f,
                "cannot remove {requested} handles, only {available} are removable"
            ),
        }
    }
}

impl core::error::Error for Error {}

impl From<SchemeViolation> for Error {
    fn from(v: SchemeViolation) -> Self {
        Error::InvalidScheme(v)
    }
}
