//! Curve pairs as rotation systems: darts, faces, corners and Euler data.
//!
//! Crossing `x` carries four darts, one per compass direction. `α` leaves
//! `x` eastward and arrives from the west; for a positive crossing `β`
//! leaves northward and arrives from the south. The rotation at every
//! crossing is counterclockwise `E, N, W, S`. The corner between a dart and
//! its counterclockwise successor is named by the quadrant it sits in, so
//! corner and dart indices coincide (`E -> NE`, `N -> NW`, `W -> SW`,
//! `S -> SE`).
//!
//! Faces are the orbits of `σ⁻¹ ∘ ι` on darts, where `σ` is the rotation
//! and `ι` the edge involution. This direction reproduces the compass
//! identities of the torus seed (`NE_i = NW_{i+1}`, `SE_i = SW_{i+1}`,
//! `NW_i = SE_i`).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Curve, Error};
use crate::perm::Permutation;

/// A coherent pair of oriented simple closed curves meeting in `n` points.
///
/// `alpha` sends each crossing to the next one along `α`, `beta` to the
/// next one along `β`. Every crossing has `β` passing `α` from south to
/// north. Punctures are counts attached to face ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePair {
    alpha: Permutation,
    beta: Permutation,
    punctures: BTreeMap<usize, u32>,
}

impl CurvePair {
    pub fn new(alpha: Permutation, beta: Permutation) -> Result<Self, Error> {
        if alpha.degree() != beta.degree() {
            return Err(Error::DegreeMismatch {
                left: alpha.degree(),
                right: beta.degree(),
            });
        }
        if !alpha.is_full_cycle() {
            return Err(Error::NotSingleCurve(Curve::Alpha));
        }
        if !beta.is_full_cycle() {
            return Err(Error::NotSingleCurve(Curve::Beta));
        }
        Ok(CurvePair {
            alpha,
            beta,
            punctures: BTreeMap::new(),
        })
    }

    /// The `⟨0,1⟩` and `⟨m,1⟩` curves on the torus, crossing `m` times.
    ///
    /// Both curves visit the crossings in the same cyclic order
    /// `0, 1, …, m-1`.
    pub fn torus_seed(m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::EmptyPermutation);
        }
        CurvePair::new(Permutation::rotation(m), Permutation::rotation(m))
    }

    /// Attaches puncture counts to faces; zero counts are dropped.
    pub fn with_punctures(mut self, marks: BTreeMap<usize, u32>) -> Result<Self, Error> {
        let face_count = faces(&self).len();
        for &face in marks.keys() {
            if face >= face_count {
                return Err(Error::UnknownFace {
                    face,
                    faces: face_count,
                });
            }
        }
        self.punctures = marks.into_iter().filter(|&(_, c)| c > 0).collect();
        Ok(self)
    }

    pub fn without_punctures(mut self) -> Self {
        self.punctures.clear();
        self
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.alpha.degree()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn punctures(&self) -> &BTreeMap<usize, u32> {
        &self.punctures
    }

    pub fn puncture_count(&self) -> usize {
        self.punctures.values().map(|&c| c as usize).sum()
    }

    /// Relabels crossings by `sigma` (`x` becomes `sigma(x)`).
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self, Error> {
        Ok(CurvePair {
            alpha: self.alpha.conjugate_by(sigma)?,
            beta: self.beta.conjugate_by(sigma)?,
            punctures: BTreeMap::new(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quadrant {
    NE = 0,
    NW = 1,
    SW = 2,
    SE = 3,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NE, Quadrant::NW, Quadrant::SW, Quadrant::SE];

    fn from_index(i: usize) -> Quadrant {
        Quadrant::ALL[i & 3]
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quadrant::NE => "NE",
            Quadrant::NW => "NW",
            Quadrant::SW => "SW",
            Quadrant::SE => "SE",
        })
    }
}

/// A quadrant at a crossing. Ordered by crossing, then `NE < NW < SW < SE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub crossing: usize,
    pub quadrant: Quadrant,
}

impl Corner {
    pub fn new(crossing: usize, quadrant: Quadrant) -> Self {
        Corner { crossing, quadrant }
    }

    pub fn index(self) -> usize {
        4 * self.crossing + self.quadrant as usize
    }

    pub fn from_index(i: usize) -> Self {
        Corner {
            crossing: i / 4,
            quadrant: Quadrant::from_index(i),
        }
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.quadrant, self.crossing)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    East = 0,
    North = 1,
    West = 2,
    South = 3,
}

impl Direction {
    const ALL: [Direction; 4] = [
        Direction::East,
        Direction::North,
        Direction::West,
        Direction::South,
    ];
}

/// Orientation of a crossing: positive when `β` passes `α` south to north.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_int(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Rotation system of `α ∪ β` with `4n` darts; dart `4x + d` points in
/// direction `d` at crossing `x`.
#[derive(Clone, Debug)]
pub struct DartMap {
    alpha: Permutation,
    alpha_inv: Permutation,
    beta: Permutation,
    beta_inv: Permutation,
    signs: Vec<Sign>,
}

impl DartMap {
    pub fn dart_count(&self) -> usize {
        4 * self.alpha.degree()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.alpha.degree()
    }

    pub fn dart(crossing: usize, direction: Direction) -> usize {
        4 * crossing + direction as usize
    }

    pub fn direction(dart: usize) -> Direction {
        Direction::ALL[dart & 3]
    }

    /// Counterclockwise successor at the same crossing.
    pub fn rotate(&self, dart: usize) -> usize {
        (dart & !3) | ((dart + 1) & 3)
    }

    pub fn rotate_back(&self, dart: usize) -> usize {
        (dart & !3) | ((dart + 3) & 3)
    }

    /// The other end of the edge carrying `dart`.
    pub fn involution(&self, dart: usize) -> usize {
        let x = dart / 4;
        match Self::direction(dart) {
            Direction::East => Self::dart(self.alpha.apply(x), Direction::West),
            Direction::West => Self::dart(self.alpha_inv.apply(x), Direction::East),
            dir => {
                let outgoing = matches!(
                    (dir, self.signs[x]),
                    (Direction::North, Sign::Positive) | (Direction::South, Sign::Negative)
                );
                let y = if outgoing {
                    self.beta.apply(x)
                } else {
                    self.beta_inv.apply(x)
                };
                // The far end is `β`-in at `y` when leaving `x`, `β`-out otherwise.
                let far_is_south = match self.signs[y] {
                    Sign::Positive => outgoing,
                    Sign::Negative => !outgoing,
                };
                Self::dart(
                    y,
                    if far_is_south {
                        Direction::South
                    } else {
                        Direction::North
                    },
                )
            }
        }
    }

    /// One step of face traversal: `σ⁻¹ ∘ ι`.
    pub fn face_step(&self, dart: usize) -> usize {
        self.rotate_back(self.involution(dart))
    }
}

pub fn dart_map(pair: &CurvePair) -> DartMap {
    build_dart_map(pair, vec![Sign::Positive; pair.n()])
}

fn build_dart_map(pair: &CurvePair, signs: Vec<Sign>) -> DartMap {
    DartMap {
        alpha: pair.alpha.clone(),
        alpha_inv: pair.alpha.inverse(),
        beta: pair.beta.clone(),
        beta_inv: pair.beta.inverse(),
        signs,
    }
}

/// Complementary regions of `α ∪ β` as cyclic corner sequences.
///
/// Face ids are assigned in order of each face's smallest corner; every
/// face's corner list starts at that corner and follows the traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDecomposition {
    faces: Vec<Vec<Corner>>,
    face_of: Vec<usize>,
}

impl FaceDecomposition {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Vec<Corner>] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &[Corner] {
        &self.faces[id]
    }

    pub fn face_of(&self, corner: Corner) -> usize {
        self.face_of[corner.index()]
    }

    /// Corner counts per face id.
    pub fn corner_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

fn trace_faces(map: &DartMap) -> FaceDecomposition {
    let darts = map.dart_count();
    let mut face_of = vec![usize::MAX; darts];
    let mut faces = Vec::new();
    for start in 0..darts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut face = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            face.push(Corner::from_index(d));
            d = map.face_step(d);
            if d == start {
                break;
            }
        }
        faces.push(face);
    }
    FaceDecomposition { faces, face_of }
}

pub fn faces(pair: &CurvePair) -> FaceDecomposition {
    trace_faces(&dart_map(pair))
}

/// Face labels of the `m`-crossing torus seed in the compass convention:
/// face `j` consists of `NE_j, NW_{j+1}, SE_{j+1}, SW_{j+2}` (indices mod
/// `m`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedFaceLabels {
    m: usize,
}

pub fn seed_face_labels(m: usize) -> Result<SeedFaceLabels, Error> {
    if m == 0 {
        return Err(Error::EmptyPermutation);
    }
    Ok(SeedFaceLabels { m })
}

impl SeedFaceLabels {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn face_of(&self, corner: Corner) -> usize {
        let m = self.m;
        let i = corner.crossing % m;
        let back = match corner.quadrant {
            Quadrant::NE => 0,
            Quadrant::NW | Quadrant::SE => 1,
            Quadrant::SW => 2,
        };
        (i + m - back % m) % m
    }

    /// Face just north of `α` in the gap between crossings `q` and `q+1`.
    pub fn north_of_gap(&self, gap: usize) -> usize {
        self.face_of(Corner::new(gap, Quadrant::NE))
    }

    /// Face just south of `α` in the gap between crossings `q` and `q+1`.
    pub fn south_of_gap(&self, gap: usize) -> usize {
        self.face_of(Corner::new(gap, Quadrant::SE))
    }
}

/// Euler data of the closed (or punctured) surface filled by a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
    /// Components of the boundary of a regular neighbourhood of `α ∪ β`.
    pub boundary_count: usize,
    pub punctures: usize,
}

impl SurfaceStats {
    fn from_counts(n: usize, faces: usize, punctures: usize) -> Self {
        let chi = faces as i64 - n as i64;
        let twice_genus = 2 - chi;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "inconsistent surface: {n} crossings and {faces} faces give χ = {chi}"
        );
        SurfaceStats {
            vertices: n,
            edges: 2 * n,
            faces,
            euler_characteristic: chi,
            genus: (twice_genus / 2) as usize,
            boundary_count: faces,
            punctures,
        }
    }

    /// The crossing count of a minimal filling pair on this surface:
    /// `2g - 1` when closed, `2g + p - 2` with `p > 0` punctures.
    pub fn minimal_crossings(&self) -> usize {
        if self.punctures == 0 {
            2 * self.genus - 1
        } else {
            2 * self.genus + self.punctures - 2
        }
    }
}

/// Vertices, edges, faces, Euler characteristic and genus.
///
/// Punctured faces are capped by once-punctured discs, which leaves the
/// genus formula `2 - 2g = F - n` unchanged.
pub fn stats(pair: &CurvePair) -> SurfaceStats {
    SurfaceStats::from_counts(pair.n(), faces(pair).len(), pair.puncture_count())
}

/// Result of checking the crossing signs of an imported pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub coherent: bool,
    /// Geometric intersection count `n`.
    pub geometric: usize,
    /// `|Σ signs|`.
    pub algebraic: usize,
    /// Crossings with sign `-1`.
    pub negative: Vec<usize>,
    /// Surface data of the rotation system with signs applied.
    pub faces: usize,
    pub genus: usize,
}

/// Checks that every crossing has the same sign, and computes the surface
/// of the rotation system with each negative crossing's `β` darts flipped.
pub fn verify_coherent_import(pair: &CurvePair, signs: &[i64]) -> Result<CoherenceReport, Error> {
    if signs.len() != pair.n() {
        return Err(Error::MalformedSigns);
    }
    let signs: Vec<Sign> = signs
        .iter()
        .map(|&s| Sign::from_int(s).ok_or(Error::MalformedSigns))
        .collect::<Result<_, _>>()?;
    let sum: i64 = signs.iter().map(|s| s.as_int()).sum();
    let negative: Vec<usize> = signs
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Sign::Negative)
        .map(|(x, _)| x)
        .collect();
    let face_count = trace_faces(&build_dart_map(pair, signs)).len();
    let surface = SurfaceStats::from_counts(pair.n(), face_count, 0);
    Ok(CoherenceReport {
        coherent: negative.is_empty() || negative.len() == pair.n(),
        geometric: pair.n(),
        algebraic: sum.unsigned_abs() as usize,
        negative,
        faces: face_count,
        genus: surface.genus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::commutator;

    fn q(crossing: usize, quadrant: Quadrant) -> Corner {
        Corner::new(crossing, quadrant)
    }

    #[test]
    fn rejects_multi_component_curves() {
        let split = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(
            CurvePair::new(split.clone(), Permutation::rotation(4)),
            Err(Error::NotSingleCurve(Curve::Alpha))
        );
        assert_eq!(
            CurvePair::new(Permutation::rotation(4), split),
            Err(Error::NotSingleCurve(Curve::Beta))
        );
        assert!(CurvePair::new(Permutation::rotation(3), Permutation::rotation(4)).is_err());
    }

    #[test]
    fn dart_counts() {
        let one = CurvePair::torus_seed(1).unwrap();
        let map = dart_map(&one);
        assert_eq!((map.dart_count(), map.edge_count()), (4, 2));
        let three = dart_map(&CurvePair::torus_seed(3).unwrap());
        assert_eq!((three.dart_count(), three.edge_count()), (12, 6));
    }

    #[test]
    fn involution_is_fixed_point_free() {
        let pair = CurvePair::new(
            Permutation::from_cyclic_order(&[0, 3, 1, 4, 2]).unwrap(),
            Permutation::rotation(5),
        )
        .unwrap();
        let map = dart_map(&pair);
        for d in 0..map.dart_count() {
            let e = map.involution(d);
            assert_ne!(d, e);
            assert_eq!(map.involution(e), d);
        }
    }

    #[test]
    fn single_crossing_torus_has_one_square_face() {
        let f = faces(&CurvePair::torus_seed(1).unwrap());
        assert_eq!(f.len(), 1);
        assert_eq!(f.face(0).len(), 4);
    }

    #[test]
    fn seed_faces_follow_compass_identities() {
        for m in 1..=12 {
            let pair = CurvePair::torus_seed(m).unwrap();
            let f = faces(&pair);
            assert_eq!(f.len(), m);
            assert!(f.corner_counts().iter().all(|&c| c == 4));
            let labels = seed_face_labels(m).unwrap();
            for i in 0..m {
                let next = (i + 1) % m;
                assert_eq!(
                    f.face_of(q(i, Quadrant::NE)),
                    f.face_of(q(next, Quadrant::NW))
                );
                assert_eq!(
                    f.face_of(q(i, Quadrant::SE)),
                    f.face_of(q(next, Quadrant::SW))
                );
                assert_eq!(f.face_of(q(i, Quadrant::NW)), f.face_of(q(i, Quadrant::SE)));
                assert_eq!(labels.face_of(q(i, Quadrant::NE)), i);
            }
        }
    }

    #[test]
    fn seed_label_examples() {
        let three = seed_face_labels(3).unwrap();
        assert_eq!(three.face_of(q(1, Quadrant::SW)), 2);
        assert_eq!(three.face_of(q(1, Quadrant::NE)), 1);
        let two = seed_face_labels(2).unwrap();
        for i in 0..2 {
            assert_eq!(
                two.face_of(q(i, Quadrant::SW)),
                two.face_of(q(i, Quadrant::NE))
            );
        }
        assert_eq!(seed_face_labels(0), Err(Error::EmptyPermutation));
    }

    #[test]
    fn face_ids_follow_smallest_corner() {
        let f = faces(&CurvePair::torus_seed(3).unwrap());
        let firsts: Vec<Corner> = f.faces().iter().map(|face| face[0]).collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        assert_eq!(firsts, sorted);
        for face in f.faces() {
            assert!(face.iter().all(|&c| c >= face[0]));
        }
    }

    #[test]
    fn seed_stats() {
        for m in 1..8 {
            let s = stats(&CurvePair::torus_seed(m).unwrap());
            assert_eq!((s.genus, s.faces, s.euler_characteristic), (1, m, 0));
        }
    }

    #[test]
    fn face_count_matches_commutator_on_fixed_example() {
        let pair = CurvePair::new(
            Permutation::rotation(5),
            Permutation::from_cyclic_order(&[0, 2, 4, 1, 3]).unwrap(),
        )
        .unwrap();
        let k = commutator(pair.alpha(), pair.beta()).unwrap();
        assert_eq!(faces(&pair).len(), k.cycle_count());
    }

    #[test]
    fn coherence_report_examples() {
        let five = CurvePair::torus_seed(5).unwrap();
        let r = verify_coherent_import(&five, &[1; 5]).unwrap();
        assert!(r.coherent);
        assert_eq!((r.geometric, r.algebraic), (5, 5));
        assert_eq!((r.faces, r.genus), (5, 1));

        let three = CurvePair::torus_seed(3).unwrap();
        let r = verify_coherent_import(&three, &[1, 1, -1]).unwrap();
        assert!(!r.coherent);
        assert_eq!((r.geometric, r.algebraic), (3, 1));
        assert_eq!(r.negative, vec![2]);

        let all_neg = verify_coherent_import(&three, &[-1, -1, -1]).unwrap();
        assert!(all_neg.coherent);
        assert_eq!(all_neg.algebraic, 3);
    }

    #[test]
    fn malformed_signs() {
        let three = CurvePair::torus_seed(3).unwrap();
        assert_eq!(
            verify_coherent_import(&three, &[1, 1]),
            Err(Error::MalformedSigns)
        );
        assert_eq!(
            verify_coherent_import(&three, &[1, 0, 1]),
            Err(Error::MalformedSigns)
        );
    }

    #[test]
    fn puncture_marks_must_name_faces() {
        let seed = CurvePair::torus_seed(2).unwrap();
        let ok = seed
            .clone()
            .with_punctures(BTreeMap::from([(1, 1), (0, 0)]))
            .unwrap();
        assert_eq!(ok.punctures().len(), 1);
        assert_eq!(ok.puncture_count(), 1);
        assert_eq!(
            seed.with_punctures(BTreeMap::from([(2, 1)])),
            Err(Error::UnknownFace { face: 2, faces: 2 })
        );
    }
}
