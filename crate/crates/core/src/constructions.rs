//! Named constructions built from point-local surgeries on a torus seed.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::agraph::AGraph;
use crate::error::Error;
use crate::perm::{canonical_key, equivalent, Equivalence, Permutation};
use crate::surface::{faces, stats, CurvePair};
use crate::surgery::{apply_scheme_traced, GammaArc, Scheme, SurgeryKind};

/// A point-local surgery at one seed crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalSurgery {
    pub crossing: usize,
    pub kind: SurgeryKind,
}

/// A scheme in which every arc is a point-local surgery.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointScheme {
    seed_m: usize,
    surgeries: Vec<LocalSurgery>,
}

impl PointScheme {
    /// Surgeries are kept sorted by crossing.
    pub fn new(seed_m: usize, mut surgeries: Vec<LocalSurgery>) -> Result<Self, Error> {
        surgeries.sort();
        let arcs = surgeries
            .iter()
            .map(|s| GammaArc::point(s.crossing, s.kind, seed_m.max(1)))
            .collect();
        Scheme::new(seed_m, arcs)?;
        Ok(PointScheme { seed_m, surgeries })
    }

    pub fn seed_m(&self) -> usize {
        self.seed_m
    }

    pub fn surgeries(&self) -> &[LocalSurgery] {
        &self.surgeries
    }

    pub fn handle_count(&self) -> usize {
        self.surgeries.iter().map(|s| s.kind.handles()).sum()
    }

    pub fn to_scheme(&self) -> Scheme {
        let arcs = self
            .surgeries
            .iter()
            .map(|s| GammaArc::point(s.crossing, s.kind, self.seed_m))
            .collect();
        Scheme::new(self.seed_m, arcs).expect("validated on construction")
    }
}

fn singles(range: core::ops::Range<usize>) -> impl Iterator<Item = LocalSurgery> {
    range.map(|crossing| LocalSurgery {
        crossing,
        kind: SurgeryKind::SingleSwNe,
    })
}

/// `SW`–`NE` singles at crossings `1..g` of the `g`-crossing seed.
pub fn odd_point_scheme(g: usize) -> Result<PointScheme, Error> {
    if g.is_multiple_of(2) {
        return Err(Error::Parity {
            genus: g,
            expected_odd: true,
        });
    }
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    PointScheme::new(g, singles(1..g).collect())
}

/// A double at crossing `0` and `SW`–`NE` singles at crossings `3..g`.
pub fn even_point_scheme(g: usize) -> Result<PointScheme, Error> {
    if g % 2 == 1 {
        return Err(Error::Parity {
            genus: g,
            expected_odd: false,
        });
    }
    if g < 4 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    let mut surgeries = vec![LocalSurgery {
        crossing: 0,
        kind: SurgeryKind::Double,
    }];
    surgeries.extend(singles(3..g));
    PointScheme::new(g, surgeries)
}

pub fn odd_scheme(g: usize) -> Result<Scheme, Error> {
    Ok(odd_point_scheme(g)?.to_scheme())
}

pub fn even_scheme(g: usize) -> Result<Scheme, Error> {
    Ok(even_point_scheme(g)?.to_scheme())
}

/// The odd or even scheme, whichever matches the parity of `g`.
pub fn closed_point_scheme(g: usize) -> Result<PointScheme, Error> {
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    if g % 2 == 1 {
        odd_point_scheme(g)
    } else {
        even_point_scheme(g)
    }
}

/// A minimal coherent filling pair on the closed genus-`g` surface:
/// `2g - 1` crossings and a single complementary disc.
pub fn minimal_closed(g: usize) -> Result<CurvePair, Error> {
    Ok(closed_point_scheme(g)?.to_scheme().apply())
}

/// The point scheme used for genus `g` with `p` punctures.
///
/// Starts from the parity scheme on `g + p - 1` crossings and drops
/// `p - 1` handles: the singles at the highest crossings first, then the
/// `NW`–`SW` handle of the double (which leaves a `SW`–`NE` single).
pub fn punctured_point_scheme(g: usize, p: usize) -> Result<PointScheme, Error> {
    if g < 3 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    if p == 0 {
        return Err(Error::InvalidPunctures { punctures: p });
    }
    let m = g + p - 1;
    let base = closed_point_scheme(m)?;
    let mut surgeries = base.surgeries.clone();
    let mut to_remove = p - 1;
    let available = surgeries
        .iter()
        .filter(|s| s.kind != SurgeryKind::SingleNwSe)
        .count();
    if to_remove > available {
        return Err(Error::InfeasibleRemoval {
            requested: to_remove,
            available,
        });
    }
    for k in (0..surgeries.len()).rev() {
        if to_remove == 0 {
            break;
        }
        if surgeries[k].kind == SurgeryKind::SingleSwNe {
            surgeries.remove(k);
            to_remove -= 1;
        }
    }
    for s in surgeries.iter_mut().rev() {
        if to_remove == 0 {
            break;
        }
        if s.kind == SurgeryKind::Double {
            s.kind = SurgeryKind::SingleSwNe;
            to_remove -= 1;
        }
    }
    PointScheme::new(m, surgeries)
}

/// A minimal coherent filling pair on the genus-`g` surface with `p`
/// punctures: `2g + p - 2` crossings and `p` complementary faces, each
/// carrying one puncture.
pub fn minimal_punctured(g: usize, p: usize) -> Result<CurvePair, Error> {
    apply_punctured(&punctured_point_scheme(g, p)?.to_scheme())
}

/// Applies a scheme and places one puncture per component of its attaching
/// graph, on the face that the component's smallest seed face becomes.
///
/// For a forest the faces after surgery correspond one-to-one to the
/// components, so every face ends up with exactly one puncture.
pub fn apply_punctured(scheme: &Scheme) -> Result<CurvePair, Error> {
    let graph = scheme.a_graph();
    let applied = apply_scheme_traced(scheme);
    let decomposition = faces(&applied.pair);
    let mut marks = BTreeMap::new();
    for component in graph.components() {
        let designated = component.vertices[0];
        let face = decomposition.face_of(applied.seed_face_corners[designated]);
        *marks.entry(face).or_insert(0) += 1;
    }
    applied.pair.with_punctures(marks)
}

/// One candidate of the genus-2 exhaustion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Candidate {
    pub surgery: LocalSurgery,
    pub edge: (usize, usize),
    pub self_loop: bool,
    pub tree: bool,
    pub faces_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Report {
    pub candidates: Vec<Genus2Candidate>,
    /// Candidates whose attaching graph is a connected tree.
    pub valid: usize,
}

/// Tries every single-handle surgery on the 2-crossing seed.
pub fn genus2_search() -> Genus2Report {
    let m = 2;
    let mut candidates = Vec::new();
    for crossing in 0..m {
        for kind in [SurgeryKind::SingleSwNe, SurgeryKind::SingleNwSe] {
            let surgery = LocalSurgery { crossing, kind };
            let scheme = PointScheme::new(m, vec![surgery])
                .expect("single surgery on a seed crossing")
                .to_scheme();
            let graph = scheme.a_graph();
            let edge = graph.edges()[0];
            candidates.push(Genus2Candidate {
                surgery,
                edge,
                self_loop: edge.0 == edge.1,
                tree: graph.is_tree(),
                faces_after: faces(&scheme.apply()).len(),
            });
        }
    }
    let valid = candidates.iter().filter(|c| c.tree).count();
    Genus2Report { candidates, valid }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Maximum number of complete assignments to examine.
    pub budget: u64,
    pub dedup: bool,
    pub equivalence: Equivalence,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: 5_000_000,
            dedup: true,
            equivalence: Equivalence::CONJUGACY,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survivor {
    pub scheme: PointScheme,
    pub pair: CurvePair,
}

/// Indices into [`Enumeration::survivors`]; the first member represents
/// the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub members: Vec<usize>,
}

impl EquivalenceClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub genus: usize,
    pub survivors: Vec<Survivor>,
    pub classes: Vec<EquivalenceClass>,
    /// Complete assignments with `g - 1` handles that were examined.
    pub candidates: u64,
    /// Of those, how many had a tree as attaching graph.
    pub trees: u64,
    /// False when the budget ran out before the search finished.
    pub complete: bool,
}

/// Every assignment of nothing, a single or a double to the crossings of
/// the `g`-crossing seed with `g - 1` handles in total, kept when its
/// attaching graph is a tree.
///
/// Survivors are listed in lexicographic order of their assignments
/// (crossing by crossing, `none < single_sw_ne < single_nw_se < double`).
pub fn enumerate_point_schemes(
    g: usize,
    options: &EnumerationOptions,
) -> Result<Enumeration, Error> {
    if g == 0 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    let mut walk = Walk {
        m: g,
        budget: options.budget,
        assignment: vec![None; g],
        candidates: 0,
        trees: 0,
        exhausted: false,
        survivors: Vec::new(),
    };
    walk.visit(0, g - 1);

    let classes = if options.dedup {
        classify(&walk.survivors, options.equivalence)?
    } else {
        (0..walk.survivors.len())
            .map(|i| EquivalenceClass { members: vec![i] })
            .collect()
    };
    Ok(Enumeration {
        genus: g,
        survivors: walk.survivors,
        classes,
        candidates: walk.candidates,
        trees: walk.trees,
        complete: !walk.exhausted,
    })
}

struct Walk {
    m: usize,
    budget: u64,
    assignment: Vec<Option<SurgeryKind>>,
    candidates: u64,
    trees: u64,
    exhausted: bool,
    survivors: Vec<Survivor>,
}

impl Walk {
    fn visit(&mut self, crossing: usize, remaining: usize) {
        if self.exhausted {
            return;
        }
        if crossing == self.m {
            if remaining == 0 {
                self.examine();
            }
            return;
        }
        // At most two handles per remaining crossing.
        if remaining > 2 * (self.m - crossing) {
            return;
        }
        let options = [
            None,
            Some(SurgeryKind::SingleSwNe),
            Some(SurgeryKind::SingleNwSe),
            Some(SurgeryKind::Double),
        ];
        for kind in options {
            let cost = kind.map_or(0, SurgeryKind::handles);
            if cost > remaining {
                continue;
            }
            self.assignment[crossing] = kind;
            self.visit(crossing + 1, remaining - cost);
        }
        self.assignment[crossing] = None;
    }

    fn examine(&mut self) {
        if self.candidates >= self.budget {
            self.exhausted = true;
            return;
        }
        self.candidates += 1;
        let surgeries: Vec<LocalSurgery> = self
            .assignment
            .iter()
            .enumerate()
            .filter_map(|(crossing, k)| k.map(|kind| LocalSurgery { crossing, kind }))
            .collect();
        let scheme = PointScheme::new(self.m, surgeries).expect("one surgery per crossing");
        let full = scheme.to_scheme();
        let graph: AGraph = full.a_graph();
        if !graph.is_tree() {
            return;
        }
        self.trees += 1;
        let pair = full.apply();
        let s = stats(&pair);
        debug_assert_eq!((s.faces, s.genus), (1, self.m));
        if s.faces == 1 && s.genus == self.m && s.vertices == 2 * self.m - 1 {
            self.survivors.push(Survivor { scheme, pair });
        }
    }
}

fn classify(survivors: &[Survivor], eq: Equivalence) -> Result<Vec<EquivalenceClass>, Error> {
    let mut by_key: BTreeMap<(Permutation, Permutation), usize> = BTreeMap::new();
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for (i, s) in survivors.iter().enumerate() {
        let key = canonical_key(s.pair.alpha(), s.pair.beta(), eq)?
            .expect("filling pairs generate transitive groups");
        match by_key.get(&key) {
            Some(&c) => classes[c].members.push(i),
            None => {
                by_key.insert(key, classes.len());
                classes.push(EquivalenceClass { members: vec![i] });
            }
        }
    }
    for class in &classes {
        let rep = &survivors[class.representative()].pair;
        for &i in &class.members[1..] {
            let other = &survivors[i].pair;
            let witness = equivalent((other.alpha(), other.beta()), (rep.alpha(), rep.beta()), eq)?;
            assert!(
                witness.is_some(),
                "canonical keys agree but no conjugacy found"
            );
        }
    }
    Ok(classes)
}
