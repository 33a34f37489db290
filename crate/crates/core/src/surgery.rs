//! Shear and splice: 1-handle surgeries on `β` and attaching schemes.
//!
//! A surgery cuts `β` at a crossing `p` and reroutes it through the cores
//! of one or more 1-handles attached to the regular neighbourhood of
//! `α ∪ β`. Every new crossing is again `β` passing `α` south to north.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::agraph::AGraph;
use crate::error::{Error, SchemeViolation};
use crate::perm::Permutation;
use crate::surface::{self, seed_face_labels, Corner, CurvePair, Quadrant};

/// Point-local surgeries at a single crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SurgeryKind {
    /// One handle between the faces of the `SW` and `NE` corners.
    SingleSwNe,
    /// One handle between the faces of the `NW` and `SE` corners.
    SingleNwSe,
    /// Two handles, `NE`–`SW` and `NW`–`SW`, threaded by one arc.
    Double,
}

impl SurgeryKind {
    pub const ALL: [SurgeryKind; 3] = [
        SurgeryKind::SingleSwNe,
        SurgeryKind::SingleNwSe,
        SurgeryKind::Double,
    ];

    pub fn handles(self) -> usize {
        match self {
            SurgeryKind::SingleSwNe | SurgeryKind::SingleNwSe => 1,
            SurgeryKind::Double => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SurgeryKind::SingleSwNe => "single_sw_ne",
            SurgeryKind::SingleNwSe => "single_nw_se",
            SurgeryKind::Double => "double",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        SurgeryKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for SurgeryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    East,
    West,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::East => Side::West,
            Side::West => Side::East,
        }
    }
}

/// Where an interior arc crossing sits on the seed copy of `α`: in the
/// gap from seed crossing `gap` to `gap + 1`, ordered within the gap by
/// `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingPosition {
    pub gap: usize,
    pub rank: i64,
}

/// An oriented arc spliced into `β` at a seed crossing.
///
/// `β` arrives from below at the entry crossing, immediately beside the
/// splice point on `entry_side`, follows the arc through the interior
/// crossings in order, and leaves through the exit crossing immediately
/// beside the splice point on the other side. Consecutive crossings are
/// joined by one handle core, so an arc carries `interior.len() + 1`
/// handles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaArc {
    pub splice: usize,
    pub entry_side: Side,
    pub interior: Vec<CrossingPosition>,
}

impl GammaArc {
    pub fn new(splice: usize, entry_side: Side, interior: Vec<CrossingPosition>) -> Self {
        GammaArc {
            splice,
            entry_side,
            interior,
        }
    }

    /// The arc realizing a point-local surgery on the `m`-crossing seed.
    pub fn point(splice: usize, kind: SurgeryKind, m: usize) -> Self {
        match kind {
            SurgeryKind::SingleSwNe => GammaArc::new(splice, Side::East, Vec::new()),
            SurgeryKind::SingleNwSe => GammaArc::new(splice, Side::West, Vec::new()),
            SurgeryKind::Double => GammaArc::new(
                splice,
                Side::East,
                vec![CrossingPosition {
                    gap: (splice + m - 1) % m,
                    rank: 0,
                }],
            ),
        }
    }

    pub fn handles(&self) -> usize {
        self.interior.len() + 1
    }

    /// Crossings of the arc with `α`, entry and exit included.
    pub fn alpha_crossings(&self) -> usize {
        self.interior.len() + 2
    }

    /// Seed gap of each arc crossing in traversal order.
    fn gaps(&self, m: usize) -> Vec<usize> {
        let west_gap = (self.splice + m - 1) % m;
        let side_gap = |side| match side {
            Side::East => self.splice,
            Side::West => west_gap,
        };
        let mut gaps = Vec::with_capacity(self.alpha_crossings());
        gaps.push(side_gap(self.entry_side));
        gaps.extend(self.interior.iter().map(|p| p.gap));
        gaps.push(side_gap(self.entry_side.opposite()));
        gaps
    }
}

/// A 1-handle attaching scheme on the `seed_m`-crossing torus seed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scheme {
    seed_m: usize,
    arcs: Vec<GammaArc>,
}

impl Scheme {
    pub fn new(seed_m: usize, arcs: Vec<GammaArc>) -> Result<Self, Error> {
        if seed_m == 0 {
            return Err(SchemeViolation::EmptySeed.into());
        }
        let mut spliced = vec![false; seed_m];
        let mut ranks: Vec<Vec<i64>> = vec![Vec::new(); seed_m];
        for (k, arc) in arcs.iter().enumerate() {
            if arc.splice >= seed_m {
                return Err(SchemeViolation::SpliceOutOfRange {
                    arc: k,
                    splice: arc.splice,
                }
                .into());
            }
            if core::mem::replace(&mut spliced[arc.splice], true) {
                return Err(SchemeViolation::DuplicateSplice { splice: arc.splice }.into());
            }
            for pos in &arc.interior {
                if pos.gap >= seed_m {
                    return Err(SchemeViolation::GapOutOfRange {
                        arc: k,
                        gap: pos.gap,
                    }
                    .into());
                }
                if ranks[pos.gap].contains(&pos.rank) {
                    return Err(SchemeViolation::RankCollision {
                        gap: pos.gap,
                        rank: pos.rank,
                    }
                    .into());
                }
                ranks[pos.gap].push(pos.rank);
            }
        }
        Ok(Scheme { seed_m, arcs })
    }

    pub fn empty(seed_m: usize) -> Result<Self, Error> {
        Scheme::new(seed_m, Vec::new())
    }

    pub fn seed_m(&self) -> usize {
        self.seed_m
    }

    pub fn arcs(&self) -> &[GammaArc] {
        &self.arcs
    }

    /// Total `α`-crossings of all arcs minus the number of arcs.
    pub fn handle_count(&self) -> usize {
        self.arcs.iter().map(GammaArc::handles).sum()
    }

    pub fn apply(&self) -> CurvePair {
        apply_scheme(self)
    }

    pub fn a_graph(&self) -> AGraph {
        a_graph(self)
    }
}

/// Replaces `p` in the cyclic order of `perm` and returns the new order,
/// starting with the replacement.
fn splice_order(perm: &Permutation, p: usize, replacement: &[usize], tail: &[usize]) -> Vec<usize> {
    let mut order = Vec::with_capacity(perm.degree() + replacement.len() + tail.len());
    order.extend_from_slice(replacement);
    let mut x = perm.apply(p);
    while x != p {
        order.push(x);
        x = perm.apply(x);
    }
    order.extend_from_slice(tail);
    order
}

fn check_crossing(pair: &CurvePair, p: usize) -> Result<(), Error> {
    if p >= pair.n() {
        return Err(Error::UnknownCrossing {
            crossing: p,
            n: pair.n(),
        });
    }
    Ok(())
}

/// One handle, one shear and splice at `p`.
///
/// `p` is replaced by `x_L = p` and `x_R = n` in that order along `α`.
/// `β` runs `x_R, x_L` for [`SurgeryKind::SingleSwNe`] and `x_L, x_R` for
/// [`SurgeryKind::SingleNwSe`]. Puncture marks are dropped.
pub fn single_surgery(pair: &CurvePair, p: usize, kind: SurgeryKind) -> Result<CurvePair, Error> {
    check_crossing(pair, p)?;
    let (left, right) = (p, pair.n());
    let beta_run = match kind {
        SurgeryKind::SingleSwNe => [right, left],
        SurgeryKind::SingleNwSe => [left, right],
        SurgeryKind::Double => return double_surgery(pair, p),
    };
    let alpha = splice_order(pair.alpha(), p, &[left, right], &[]);
    let beta = splice_order(pair.beta(), p, &beta_run, &[]);
    CurvePair::new(
        Permutation::from_cyclic_order(&alpha)?,
        Permutation::from_cyclic_order(&beta)?,
    )
}

/// Two handles threaded by one arc, spliced at `p`.
///
/// New crossings are `x_L = p`, `x_M = n`, `x_R = n + 1`. Along `α` they
/// read `x_M, x_L, x_R` in place of `p`; along `β`, `x_R, x_M, x_L`.
pub fn double_surgery(pair: &CurvePair, p: usize) -> Result<CurvePair, Error> {
    check_crossing(pair, p)?;
    let (left, middle, right) = (p, pair.n(), pair.n() + 1);
    let alpha = splice_order(pair.alpha(), p, &[right], &[middle, left]);
    let beta = splice_order(pair.beta(), p, &[right, middle, left], &[]);
    CurvePair::new(
        Permutation::from_cyclic_order(&alpha)?,
        Permutation::from_cyclic_order(&beta)?,
    )
}

/// A scheme applied to its seed, with one corner of the result per seed
/// face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppliedScheme {
    pub pair: CurvePair,
    /// `seed_face_corners[j]` lies in the face that absorbed seed face `j`.
    pub seed_face_corners: Vec<Corner>,
}

/// Sort key of a crossing inside a seed gap: the east slot of the gap's
/// left splice point first, interior crossings by rank, the west slot of
/// the right splice point last.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum GapKey {
    EastSlot,
    Interior(i64),
    WestSlot,
}

/// Realizes every arc of `scheme` on the torus seed at once.
///
/// Crossings of the result are numbered in `α` order, starting from the
/// seed crossing `0` (or its east slot when it is a splice point), so `α`
/// is always the rotation `i -> i + 1`.
pub fn apply_scheme(scheme: &Scheme) -> CurvePair {
    apply_scheme_traced(scheme).pair
}

pub fn apply_scheme_traced(scheme: &Scheme) -> AppliedScheme {
    let m = scheme.seed_m;
    let arcs = &scheme.arcs;
    let mut arc_at = vec![None; m];
    for (k, arc) in arcs.iter().enumerate() {
        arc_at[arc.splice] = Some(k);
    }

    // Gap contents: (key, slot) where slot identifies the crossing.
    #[derive(Clone, Copy)]
    enum Slot {
        East(usize),
        West(usize),
        Interior(usize, usize),
    }
    let mut gaps: Vec<Vec<(GapKey, Slot)>> = vec![Vec::new(); m];
    for (k, arc) in arcs.iter().enumerate() {
        gaps[arc.splice].push((GapKey::EastSlot, Slot::East(k)));
        gaps[(arc.splice + m - 1) % m].push((GapKey::WestSlot, Slot::West(k)));
        for (i, pos) in arc.interior.iter().enumerate() {
            gaps[pos.gap].push((GapKey::Interior(pos.rank), Slot::Interior(k, i)));
        }
    }

    let mut seed_label = vec![usize::MAX; m];
    let mut east_label = vec![usize::MAX; arcs.len()];
    let mut west_label = vec![usize::MAX; arcs.len()];
    let mut interior_label: Vec<Vec<usize>> = arcs
        .iter()
        .map(|a| vec![usize::MAX; a.interior.len()])
        .collect();
    let mut gap_start = vec![usize::MAX; m];
    let mut next = 0;
    for q in 0..m {
        if arc_at[q].is_none() {
            seed_label[q] = next;
            gap_start[q] = next;
            next += 1;
        }
        let gap = &mut gaps[q];
        gap.sort_by_key(|&(key, _)| key);
        for &(_, slot) in gap.iter() {
            match slot {
                Slot::East(k) => {
                    east_label[k] = next;
                    gap_start[q] = next;
                }
                Slot::West(k) => west_label[k] = next,
                Slot::Interior(k, i) => interior_label[k][i] = next,
            }
            next += 1;
        }
    }
    let n = next;

    let mut beta_order = Vec::with_capacity(n);
    for q in 0..m {
        match arc_at[q] {
            None => beta_order.push(seed_label[q]),
            Some(k) => {
                let (entry, exit) = match arcs[k].entry_side {
                    Side::East => (east_label[k], west_label[k]),
                    Side::West => (west_label[k], east_label[k]),
                };
                beta_order.push(entry);
                beta_order.extend_from_slice(&interior_label[k]);
                beta_order.push(exit);
            }
        }
    }

    let pair = CurvePair::new(
        Permutation::rotation(n),
        Permutation::from_cyclic_order(&beta_order).expect("arc crossings are labelled once"),
    )
    .expect("spliced curves are single cycles");
    let seed_face_corners = gap_start
        .into_iter()
        .map(|x| Corner::new(x, Quadrant::NE))
        .collect();
    AppliedScheme {
        pair,
        seed_face_corners,
    }
}

/// The attaching graph of a scheme on its seed.
///
/// Each handle core leaves `α` northward at one arc crossing and reaches
/// `α` from the south at the next, so it joins the face north of the
/// first crossing's gap to the face south of the second's.
pub fn a_graph(scheme: &Scheme) -> AGraph {
    let m = scheme.seed_m;
    let labels = seed_face_labels(m).expect("scheme seeds are non-empty");
    let mut edges = Vec::with_capacity(scheme.handle_count());
    for arc in &scheme.arcs {
        let gaps = arc.gaps(m);
        for pair in gaps.windows(2) {
            edges.push((labels.north_of_gap(pair[0]), labels.south_of_gap(pair[1])));
        }
    }
    AGraph::new(m, edges)
}

/// What a scheme is expected to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Closed { genus: usize },
    Punctured { genus: usize, punctures: usize },
}

impl Target {
    pub fn genus(self) -> usize {
        match self {
            Target::Closed { genus } | Target::Punctured { genus, .. } => genus,
        }
    }

    /// Faces a minimal filling pair leaves in the complement.
    pub fn faces(self) -> usize {
        match self {
            Target::Closed { .. } => 1,
            Target::Punctured { punctures, .. } => punctures,
        }
    }

    pub fn minimal_crossings(self) -> usize {
        match self {
            Target::Closed { genus } => 2 * genus - 1,
            Target::Punctured { genus, punctures } => 2 * genus + punctures - 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub crossings: usize,
    pub faces: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    /// `H ≠ g - 1`.
    Unbalanced {
        handles: usize,
        expected: usize,
    },
    NotATree,
    /// Some component of the attaching graph has a cycle.
    NotAForest,
    ComponentCount {
        expected: usize,
        found: usize,
    },
    /// The applied scheme disagrees with the attaching-graph prediction.
    PredictionMismatch,
    NotMinimal {
        crossings: usize,
        expected: usize,
    },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Unbalanced { handles, expected } => {
                write!(
                    f,
                    "handle count {handles} differs from genus - 1 = {expected}"
                )
            }
            Issue::NotATree => f.write_str("attaching graph is not a connected tree"),
            Issue::NotAForest => f.write_str("attaching graph has a cycle"),
            Issue::ComponentCount { expected, found } => {
                write!(
                    f,
                    "attaching graph has {found} components, expected {expected}"
                )
            }
            Issue::PredictionMismatch => {
                f.write_str("applied scheme does not match the attaching-graph prediction")
            }
            Issue::NotMinimal {
                crossings,
                expected,
            } => {
                write!(
                    f,
                    "{crossings} crossings, a minimal filling pair has {expected}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub seed_m: usize,
    pub handles: usize,
    pub target: Target,
    pub balanced: bool,
    pub tree: bool,
    pub forest: bool,
    pub components: usize,
    /// Exact prediction from the attaching graph; only a forest has one.
    pub predicted: Option<Outcome>,
    /// Range the face count must fall in, from the attaching graph.
    pub face_bounds: (usize, usize),
    pub actual: Outcome,
    pub issues: Vec<Issue>,
}

impl SchemeReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks a scheme against a target surface and cross-checks the
/// attaching-graph prediction against the applied result.
pub fn validate_scheme(scheme: &Scheme, target: Target) -> SchemeReport {
    let graph = a_graph(scheme);
    let m = scheme.seed_m;
    let handles = scheme.handle_count();
    let components = graph.component_count();
    let predicted = graph.predicted_boundary_count().map(|faces| Outcome {
        crossings: m + handles,
        faces,
        genus: 1 + m - components,
    });
    let face_bounds = graph.boundary_count_bounds();
    let pair = apply_scheme(scheme);
    let s = surface::stats(&pair);
    let actual = Outcome {
        crossings: s.vertices,
        faces: s.faces,
        genus: s.genus,
    };

    let mut issues = Vec::new();
    let expected_handles = target.genus().saturating_sub(1);
    let balanced = handles + 1 == target.genus();
    if !balanced {
        issues.push(Issue::Unbalanced {
            handles,
            expected: expected_handles,
        });
    }
    let tree = graph.is_tree();
    let forest = graph.is_forest();
    match target {
        Target::Closed { .. } => {
            if !tree {
                issues.push(Issue::NotATree);
            }
        }
        Target::Punctured { punctures, .. } => {
            if !forest {
                issues.push(Issue::NotAForest);
            }
            if components != punctures {
                issues.push(Issue::ComponentCount {
                    expected: punctures,
                    found: components,
                });
            }
        }
    }
    let (low, high) = face_bounds;
    let consistent = match predicted {
        Some(p) => p == actual,
        None => {
            actual.crossings == m + handles
                && (low..=high).contains(&actual.faces)
                && (high - actual.faces).is_multiple_of(2)
        }
    };
    if !consistent {
        issues.push(Issue::PredictionMismatch);
    }
    let expected = target.minimal_crossings();
    if actual.crossings != expected || actual.faces != target.faces() {
        issues.push(Issue::NotMinimal {
            crossings: actual.crossings,
            expected,
        });
    }
    SchemeReport {
        seed_m: m,
        handles,
        target,
        balanced,
        tree,
        forest,
        components,
        predicted,
        face_bounds,
        actual,
        issues,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::simultaneous_conjugacy;
    use crate::surface::{faces, stats};

    fn seed(m: usize) -> CurvePair {
        CurvePair::torus_seed(m).unwrap()
    }

    fn unordered(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    #[test]
    fn single_on_seed_three() {
        let out = single_surgery(&seed(3), 1, SurgeryKind::SingleSwNe).unwrap();
        let s = stats(&out);
        assert_eq!((s.vertices, s.faces, s.genus), (4, 2, 2));
    }

    #[test]
    fn single_on_seed_two_is_a_self_band() {
        let out = single_surgery(&seed(2), 0, SurgeryKind::SingleSwNe).unwrap();
        let s = stats(&out);
        assert_eq!((s.vertices, s.faces, s.genus), (3, 3, 1));
    }

    #[test]
    fn nw_se_single_on_seed_splits_a_face() {
        for m in 1..6 {
            for p in 0..m {
                let out = single_surgery(&seed(m), p, SurgeryKind::SingleNwSe).unwrap();
                assert_eq!(faces(&out).len(), m + 1);
            }
        }
    }

    #[test]
    fn double_on_seed_four() {
        let out = double_surgery(&seed(4), 0).unwrap();
        let s = stats(&out);
        assert_eq!((s.vertices, s.faces, s.genus), (6, 2, 3));
    }

    #[test]
    fn double_edges_on_seed_four() {
        let scheme = Scheme::new(4, vec![GammaArc::point(0, SurgeryKind::Double, 4)]).unwrap();
        assert_eq!(unordered(a_graph(&scheme).edges()), vec![(0, 2), (2, 3)]);
    }

    #[test]
    fn crossing_counts_grow_by_handles() {
        let base = seed(5);
        for p in 0..5 {
            for kind in SurgeryKind::ALL {
                let out = single_surgery(&base, p, kind).unwrap();
                assert_eq!(out.n(), 5 + kind.handles());
            }
        }
        assert_eq!(
            single_surgery(&base, 5, SurgeryKind::SingleSwNe),
            Err(Error::UnknownCrossing { crossing: 5, n: 5 })
        );
        assert!(double_surgery(&base, 9).is_err());
    }

    #[test]
    fn empty_scheme_is_the_seed() {
        for m in 1..6 {
            assert_eq!(apply_scheme(&Scheme::empty(m).unwrap()), seed(m));
        }
    }

    #[test]
    fn scheme_validation_errors() {
        let east = |p| GammaArc::new(p, Side::East, vec![]);
        assert_eq!(
            Scheme::new(3, vec![east(1), east(1)]),
            Err(Error::InvalidScheme(SchemeViolation::DuplicateSplice {
                splice: 1
            }))
        );
        assert_eq!(
            Scheme::new(3, vec![east(3)]),
            Err(Error::InvalidScheme(SchemeViolation::SpliceOutOfRange {
                arc: 0,
                splice: 3
            }))
        );
        let at = |gap, rank| CrossingPosition { gap, rank };
        assert_eq!(
            Scheme::new(3, vec![GammaArc::new(0, Side::East, vec![at(4, 0)])]),
            Err(Error::InvalidScheme(SchemeViolation::GapOutOfRange {
                arc: 0,
                gap: 4
            }))
        );
        assert_eq!(
            Scheme::new(
                3,
                vec![
                    GammaArc::new(0, Side::East, vec![at(1, 7)]),
                    GammaArc::new(2, Side::West, vec![at(1, 7)]),
                ]
            ),
            Err(Error::InvalidScheme(SchemeViolation::RankCollision {
                gap: 1,
                rank: 7
            }))
        );
        assert_eq!(
            Scheme::new(0, vec![]),
            Err(Error::InvalidScheme(SchemeViolation::EmptySeed))
        );
    }

    #[test]
    fn two_singles_match_scheme_application() {
        let scheme = Scheme::new(
            3,
            vec![
                GammaArc::point(1, SurgeryKind::SingleSwNe, 3),
                GammaArc::point(2, SurgeryKind::SingleSwNe, 3),
            ],
        )
        .unwrap();
        let via_scheme = apply_scheme(&scheme);
        let first = single_surgery(&seed(3), 1, SurgeryKind::SingleSwNe).unwrap();
        let via_surgery = single_surgery(&first, 2, SurgeryKind::SingleSwNe).unwrap();
        assert_eq!(via_scheme.n(), 5);
        assert!(simultaneous_conjugacy(
            (via_scheme.alpha(), via_scheme.beta()),
            (via_surgery.alpha(), via_surgery.beta())
        )
        .unwrap()
        .is_some());
    }

    #[test]
    fn seed_two_single_is_a_self_loop() {
        let scheme = Scheme::new(2, vec![GammaArc::point(0, SurgeryKind::SingleSwNe, 2)]).unwrap();
        assert_eq!(a_graph(&scheme).edges(), &[(0, 0)]);
    }

    #[test]
    fn interior_arc_on_seed_six() {
        // One arc spliced at x_1 through four interior crossings: five handles.
        let at = |gap, rank| CrossingPosition { gap, rank };
        let scheme = Scheme::new(
            6,
            vec![GammaArc::new(
                1,
                Side::East,
                vec![at(4, 0), at(2, 0), at(5, 0), at(3, 0)],
            )],
        )
        .unwrap();
        assert_eq!(scheme.handle_count(), 5);
        let graph = a_graph(&scheme);
        let pair = apply_scheme(&scheme);
        assert_eq!(pair.n(), 11);
        assert_eq!(faces(&pair).len() == 1, graph.is_tree());
    }

    #[test]
    fn report_flags_cycles() {
        // Singles at 0 and 2 on seed 4 both give the edge {0, 2}.
        let scheme = Scheme::new(
            4,
            vec![
                GammaArc::point(0, SurgeryKind::SingleSwNe, 4),
                GammaArc::point(2, SurgeryKind::SingleSwNe, 4),
                GammaArc::point(1, SurgeryKind::SingleSwNe, 4),
            ],
        )
        .unwrap();
        let report = validate_scheme(&scheme, Target::Closed { genus: 4 });
        assert!(report.balanced);
        assert!(!report.tree);
        assert_ne!(report.actual.faces, 1);
        assert_eq!(report.predicted, None);
        assert!(!report.issues.contains(&Issue::PredictionMismatch));
        assert!(report.issues.contains(&Issue::NotATree));
    }
}
