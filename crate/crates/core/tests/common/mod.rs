//! Reference arithmetic on plain image arrays, written independently of
//! the library so the integration tests can check it against something.

#![allow(dead_code)]

use fillpair_core::{CrossingPosition, GammaArc, Scheme, Side};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Images = Vec<usize>;

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Images {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
        }
    }
    count
}

/// Faces of a coherent pair are the cycles of `v⁻¹ h⁻¹ v h`: going once
/// round a square corner vertex of the square-tiled surface.
pub fn face_count(h: &[usize], v: &[usize]) -> usize {
    let word = compose(&inverse(v), &compose(&inverse(h), &compose(v, h)));
    cycle_count(&word)
}

pub fn rotation(n: usize) -> Images {
    (0..n).map(|i| (i + 1) % n).collect()
}

pub fn random_cycle<R: Rng>(n: usize, rng: &mut R) -> Images {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut p = vec![0; n];
    for k in 0..n {
        p[order[k]] = order[(k + 1) % n];
    }
    p
}

/// Every full cycle on `0..n`.
pub fn all_cycles(n: usize) -> Vec<Images> {
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |tail| {
        let mut order = vec![0];
        order.extend_from_slice(tail);
        let mut p = vec![0; n];
        for k in 0..n {
            p[order[k]] = order[(k + 1) % n];
        }
        out.push(p);
    });
    out
}

pub fn all_permutations(n: usize) -> Vec<Images> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut |p| out.push(p.to_vec()));
    out
}

fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `σ p σ⁻¹`.
pub fn conjugate(p: &[usize], sigma: &[usize]) -> Images {
    compose(sigma, &compose(p, &inverse(sigma)))
}

/// A random attaching scheme on the `m`-crossing seed with exactly `h`
/// handles, spread over at most `m` arcs with random interior positions.
pub fn random_scheme<R: Rng>(m: usize, h: usize, rng: &mut R) -> Scheme {
    assert!(h >= 1);
    let arc_count = rng.gen_range(1..=h.min(m));
    let mut splices: Vec<usize> = (0..m).collect();
    splices.shuffle(rng);
    splices.truncate(arc_count);
    // Each arc gets at least one handle; the rest are spread at random.
    let mut handles = vec![1; arc_count];
    for _ in arc_count..h {
        handles[rng.gen_range(0..arc_count)] += 1;
    }
    let mut used: Vec<Vec<i64>> = vec![Vec::new(); m];
    let arcs = splices
        .iter()
        .zip(&handles)
        .map(|(&splice, &k)| {
            let interior = (0..k - 1)
                .map(|_| {
                    let gap = rng.gen_range(0..m);
                    let rank = loop {
                        let r = rng.gen_range(-20..20);
                        if !used[gap].contains(&r) {
                            break r;
                        }
                    };
                    used[gap].push(rank);
                    CrossingPosition { gap, rank }
                })
                .collect();
            let side = if rng.gen_bool(0.5) {
                Side::East
            } else {
                Side::West
            };
            GammaArc::new(splice, side, interior)
        })
        .collect();
    Scheme::new(m, arcs).expect("random scheme respects the invariants")
}
