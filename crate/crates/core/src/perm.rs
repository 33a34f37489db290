//! Permutation algebra on `{0..n-1}`.
//!
//! A [`Permutation`] stores its image array; composition follows the
//! function convention `compose(a, b)(i) = a(b(i))`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A bijection of `{0..n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Disjoint cycles covering `{0..n-1}`.
///
/// Each cycle starts at its smallest element and cycles are sorted by that
/// element, so equal permutations give equal decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycle lengths in the order of the cycles.
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the permutation that sends each entry of `order` to the next
    /// one, cyclically. `order` must list every point of `{0..n-1}` once.
    pub fn from_cyclic_order(order: &[usize]) -> Result<Self, Error> {
        let n = order.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut images = vec![usize::MAX; n];
        for (k, &x) in order.iter().enumerate() {
            if x >= n || images[x] != usize::MAX {
                return Err(Error::NotAPermutation);
            }
            images[x] = order[(k + 1) % n];
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::NotAPermutation);
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "permutation degree must be positive");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The rotation `i -> i + 1 mod n`.
    pub fn rotation(n: usize) -> Self {
        assert!(n > 0, "permutation degree must be positive");
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self, Error> {
        check_degrees(self, other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    /// `sigma ∘ self ∘ sigma⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Result<Self, Error> {
        check_degrees(self, sigma)?;
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[sigma.images[i]] = sigma.images[j];
        }
        Ok(Permutation { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// True iff the permutation is a single cycle of length `n`.
    pub fn is_full_cycle(&self) -> bool {
        let n = self.degree();
        let mut x = 0;
        for step in 1..=n {
            x = self.images[x];
            if x == 0 {
                return step == n;
            }
        }
        false
    }

    /// Lists the orbit of `start`, in order.
    pub fn orbit_of(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut x = self.images[start];
        while x != start {
            out.push(x);
            x = self.images[x];
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation(")?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

/// Cycle notation, omitting fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().cycles() {
            if cycle.len() == 1 {
                continue;
            }
            any = true;
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn check_degrees(a: &Permutation, b: &Permutation) -> Result<(), Error> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, Error> {
    a.compose(b)
}

/// The commutator `v⁻¹ h⁻¹ v h` (rightmost factor applied first).
///
/// Its orbit through `x` lists, in order, the crossings whose north-east
/// corner lies on the same complementary face as the north-east corner of
/// `x`; the number of cycles is the number of faces of `α ∪ β`.
pub fn commutator(h: &Permutation, v: &Permutation) -> Result<Permutation, Error> {
    check_degrees(h, v)?;
    let hi = h.inverse();
    let vi = v.inverse();
    Ok(Permutation {
        images: (0..h.degree())
            .map(|x| vi.apply(hi.apply(v.apply(h.apply(x)))))
            .collect(),
    })
}

pub fn is_full_cycle(p: &Permutation) -> bool {
    p.is_full_cycle()
}

/// Orbits of the group generated by `gens`, each sorted, ordered by their
/// smallest element.
pub fn orbits(gens: &[&Permutation]) -> Result<Vec<Vec<usize>>, Error> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    for g in gens {
        check_degrees(first, g)?;
    }
    let n = first.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    Ok(out)
}

pub fn is_transitive(gens: &[&Permutation]) -> Result<bool, Error> {
    Ok(orbits(gens)?.len() <= 1)
}

/// Finds `σ` with `σ h1 σ⁻¹ = h2` and `σ v1 σ⁻¹ = v2`, if one exists.
///
/// Each orbit of `⟨h1, v1⟩` is handled by fixing the image of its smallest
/// point and propagating along the generators; a choice that forces a
/// contradiction is abandoned. For transitive pairs this is `n` candidate
/// propagations of `O(n)` each.
pub fn simultaneous_conjugacy(
    first: (&Permutation, &Permutation),
    second: (&Permutation, &Permutation),
) -> Result<Option<Permutation>, Error> {
    let (h1, v1) = first;
    let (h2, v2) = second;
    check_degrees(h1, v1)?;
    check_degrees(h2, v2)?;
    check_degrees(h1, h2)?;
    let n = h1.degree();
    let gens1 = [h1.clone(), v1.clone(), h1.inverse(), v1.inverse()];
    let gens2 = [h2.clone(), v2.clone(), h2.inverse(), v2.inverse()];
    let orbits1 = orbits(&[h1, v1])?;

    let mut search = ConjugacySearch {
        gens1: &gens1,
        gens2: &gens2,
        sigma: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.assign_orbits(&orbits1, 0) {
        let witness = Permutation {
            images: search.sigma,
        };
        debug_assert!(is_conjugacy_witness(&witness, first, second));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

struct ConjugacySearch<'a> {
    gens1: &'a [Permutation; 4],
    gens2: &'a [Permutation; 4],
    sigma: Vec<usize>,
    used: Vec<bool>,
}

impl ConjugacySearch<'_> {
    fn assign_orbits(&mut self, orbits: &[Vec<usize>], k: usize) -> bool {
        let Some(orbit) = orbits.get(k) else {
            return true;
        };
        let base = orbit[0];
        let n = self.sigma.len();
        for target in 0..n {
            if self.used[target] {
                continue;
            }
            let mut assigned = Vec::with_capacity(orbit.len());
            if self.propagate(base, target, &mut assigned) && self.assign_orbits(orbits, k + 1) {
                return true;
            }
            for x in assigned {
                self.used[self.sigma[x]] = false;
                self.sigma[x] = usize::MAX;
            }
        }
        false
    }

    /// Sets `σ(base) = target` and closes under `σ g1 = g2 σ`.
    fn propagate(&mut self, base: usize, target: usize, assigned: &mut Vec<usize>) -> bool {
        self.sigma[base] = target;
        self.used[target] = true;
        assigned.push(base);
        let mut k = assigned.len() - 1;
        while k < assigned.len() {
            let x = assigned[k];
            k += 1;
            let sx = self.sigma[x];
            for (g1, g2) in self.gens1.iter().zip(self.gens2.iter()) {
                let y = g1.apply(x);
                let sy = g2.apply(sx);
                match self.sigma[y] {
                    usize::MAX => {
                        if self.used[sy] {
                            return false;
                        }
                        self.sigma[y] = sy;
                        self.used[sy] = true;
                        assigned.push(y);
                    }
                    existing if existing != sy => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Checks `σ h1 σ⁻¹ = h2` and `σ v1 σ⁻¹ = v2` directly.
pub fn is_conjugacy_witness(
    sigma: &Permutation,
    first: (&Permutation, &Permutation),
    second: (&Permutation, &Permutation),
) -> bool {
    let n = sigma.degree();
    if [first.0, first.1, second.0, second.1]
        .iter()
        .any(|p| p.degree() != n)
    {
        return false;
    }
    (0..n).all(|x| {
        sigma.apply(first.0.apply(x)) == second.0.apply(sigma.apply(x))
            && sigma.apply(first.1.apply(x)) == second.1.apply(sigma.apply(x))
    })
}

/// Canonical representative of the simultaneous conjugacy class of a
/// transitive pair, or `None` if `⟨h, v⟩` is not transitive.
///
/// For every start point the pair is relabelled in breadth-first order
/// (generators tried as `h`, `v`); the lexicographically least result wins.
pub fn canonical_form(
    h: &Permutation,
    v: &Permutation,
) -> Result<Option<(Permutation, Permutation)>, Error> {
    check_degrees(h, v)?;
    let n = h.degree();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        order.clear();
        label[start] = 0;
        order.push(start);
        let mut k = 0;
        while k < order.len() {
            let x = order[k];
            k += 1;
            for g in [h, v] {
                let y = g.apply(x);
                if label[y] == usize::MAX {
                    label[y] = order.len();
                    order.push(y);
                }
            }
        }
        if order.len() != n {
            return Ok(None);
        }
        let relabel =
            |g: &Permutation| -> Vec<usize> { order.iter().map(|&x| label[g.apply(x)]).collect() };
        let candidate = (relabel(h), relabel(v));
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(best.map(|(h, v)| (Permutation { images: h }, Permutation { images: v })))
}

/// Coarser equivalences that may be layered on top of simultaneous
/// conjugacy. All flags are off by default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Equivalence {
    /// Also identify `(h, v)` with `(v, h)`.
    pub swap_curves: bool,
    /// Also identify `(h, v)` with `(h⁻¹, v⁻¹)`.
    pub reverse_orientation: bool,
    /// Also identify `(h, v)` with its mirror image `(h⁻¹, v)`: reflect the
    /// surface, which makes every crossing negative, then reverse `α`.
    pub mirror: bool,
}

impl Equivalence {
    pub const CONJUGACY: Equivalence = Equivalence {
        swap_curves: false,
        reverse_orientation: false,
        mirror: false,
    };

    /// Every pair identified with `(h, v)` before conjugacy is applied,
    /// starting with `(h, v)` itself.
    pub fn variants(&self, h: &Permutation, v: &Permutation) -> Vec<(Permutation, Permutation)> {
        let mut out = vec![(h.clone(), v.clone())];
        if self.reverse_orientation {
            out.push((h.inverse(), v.inverse()));
        }
        if self.mirror {
            let mirrored: Vec<_> = out.iter().map(|(a, b)| (a.inverse(), b.clone())).collect();
            out.extend(mirrored);
        }
        if self.swap_curves {
            let swapped: Vec<_> = out.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
            out.extend(swapped);
        }
        out
    }
}

/// Canonical key under `eq`: the least canonical form over all variants.
pub fn canonical_key(
    h: &Permutation,
    v: &Permutation,
    eq: Equivalence,
) -> Result<Option<(Permutation, Permutation)>, Error> {
    let mut best = None;
    for (a, b) in eq.variants(h, v) {
        let Some(form) = canonical_form(&a, &b)? else {
            return Ok(None);
        };
        if best.as_ref().is_none_or(|b| form < *b) {
            best = Some(form);
        }
    }
    Ok(best)
}

/// Searches for a conjugacy between `first` and any variant of `second`
/// allowed by `eq`.
pub fn equivalent(
    first: (&Permutation, &Permutation),
    second: (&Permutation, &Permutation),
    eq: Equivalence,
) -> Result<Option<Permutation>, Error> {
    for (a, b) in eq.variants(second.0, second.1) {
        if let Some(w) = simultaneous_conjugacy(first, (&a, &b))? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
