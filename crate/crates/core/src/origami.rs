//! Square-tiled surfaces from coherent filling pairs.
//!
//! Each crossing is the centre of a unit square; `α` runs east through it
//! and `β` north. The square to the right of `x` is `α(x)` and the square
//! on top is `β(x)`. Square corners meet at the centres of the faces of
//! `α ∪ β`, so a face with `4k` corners is a cone point of angle `2πk`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::perm::{is_transitive, Permutation};
use crate::surface::{faces, CurvePair};

/// Squares `0..n` glued by a right-neighbour and a top-neighbour map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Origami {
    right: Permutation,
    top: Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
}

impl Origami {
    /// Fails unless both maps have the same degree and the squares form
    /// one connected surface.
    pub fn new(right: Permutation, top: Permutation) -> Result<Self, Error> {
        if !is_transitive(&[&right, &top])? {
            return Err(Error::Intransitive);
        }
        Ok(Origami { right, top })
    }

    pub fn squares(&self) -> usize {
        self.right.degree()
    }

    pub fn right(&self) -> &Permutation {
        &self.right
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    /// Reads the curve pair back: `α` is the right map, `β` the top map.
    pub fn to_pair(&self) -> Result<CurvePair, Error> {
        CurvePair::new(self.right.clone(), self.top.clone())
    }
}

pub fn to_origami(pair: &CurvePair) -> Result<Origami, Error> {
    Origami::new(pair.alpha().clone(), pair.beta().clone())
}

/// Rows (horizontal) or columns (vertical) of squares.
pub fn cylinders(origami: &Origami, direction: Direction) -> Vec<Vec<usize>> {
    let p = match direction {
        Direction::Horizontal => &origami.right,
        Direction::Vertical => &origami.top,
    };
    p.cycles().into_cycles()
}

/// Cone points of the flat metric, one per face of `α ∪ β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityProfile {
    /// Order of the zero at each face, indexed by face id; regular points
    /// have order 0.
    pub zero_orders: Vec<usize>,
}

impl SingularityProfile {
    pub fn total_order(&self) -> usize {
        self.zero_orders.iter().sum()
    }

    /// Positive orders, largest first.
    pub fn positive_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self
            .zero_orders
            .iter()
            .copied()
            .filter(|&k| k > 0)
            .collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        orders
    }

    /// Faces whose cone angle is exactly `2π`.
    pub fn marked_points(&self) -> usize {
        self.zero_orders.iter().filter(|&&k| k == 0).count()
    }

    /// Stratum in the usual `H(k₁,…,k_r)` notation; a flat torus is `H(0)`.
    pub fn stratum(&self) -> String {
        let orders = self.positive_orders();
        if orders.is_empty() {
            return String::from("H(0)");
        }
        let parts: Vec<String> = orders.iter().map(|k| format!("{k}")).collect();
        format!("H({})", parts.join(","))
    }
}

impl fmt::Display for SingularityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.stratum())?;
        let marked = self.marked_points();
        if marked > 0 {
            write!(f, " with {marked} marked point")?;
            if marked > 1 {
                f.write_str("s")?;
            }
        }
        Ok(())
    }
}

/// # Panics
/// If a face has a corner count that is not a multiple of 4, which cannot
/// happen for a coherent pair.
pub fn singularities(pair: &CurvePair) -> SingularityProfile {
    let decomposition = faces(pair);
    let zero_orders = decomposition
        .corner_counts()
        .into_iter()
        .map(|c| {
            assert!(c % 4 == 0, "face with {c} corners on a coherent pair");
            c / 4 - 1
        })
        .collect();
    SingularityProfile { zero_orders }
}
