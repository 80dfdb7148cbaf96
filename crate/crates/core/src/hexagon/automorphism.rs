//! Automorphisms of the hexagon as point permutations.
//!
//! The search walks points in a fixed order and keeps, for every unmapped
//! point, a 63-bit mask of admissible images. Mapping `p ↦ q` refines each
//! mask to the vertices at the same collinearity distance from `q` as the
//! point is from `p`; an empty mask prunes the branch.

use std::collections::{HashSet, VecDeque};

use crate::geometry::POINT_COUNT;

use super::Hexagon;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPermutation(pub [u8; POINT_COUNT]);

impl std::fmt::Debug for PointPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl PointPermutation {
    pub fn identity() -> Self {
        let mut a = [0u8; POINT_COUNT];
        for (i, x) in a.iter_mut().enumerate() {
            *x = i as u8;
        }
        Self(a)
    }

    pub fn from_slice(images: &[usize]) -> Option<Self> {
        if images.len() != POINT_COUNT {
            return None;
        }
        let mut a = [0u8; POINT_COUNT];
        let mut seen = 0u64;
        for (i, &img) in images.iter().enumerate() {
            if img >= POINT_COUNT || seen >> img & 1 == 1 {
                return None;
            }
            seen |= 1 << img;
            a[i] = img as u8;
        }
        Some(Self(a))
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.0[p] as usize
    }

    /// Image of a point-set bitmask.
    pub fn apply_mask(&self, mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            let p = mask.trailing_zeros() as usize;
            out |= 1 << self.0[p];
            mask &= mask - 1;
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.map(|p| self.0[p as usize]))
    }

    pub fn inverse(&self) -> Self {
        let mut a = [0u8; POINT_COUNT];
        for (i, &p) in self.0.iter().enumerate() {
            a[p as usize] = i as u8;
        }
        Self(a)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn preserves_lines(&self, h: &Hexagon) -> bool {
        let masks: HashSet<u64> = (0..h.lines().len()).map(|l| h.line_mask(l)).collect();
        masks.iter().all(|&m| masks.contains(&self.apply_mask(m)))
    }
}

/// The full automorphism group: every element plus a small generating set.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    elements: Vec<PointPermutation>,
    generators: Vec<PointPermutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[PointPermutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[PointPermutation] {
        &self.generators
    }

    pub fn contains(&self, g: &PointPermutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Orbits of points under the generators.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(POINT_COUNT, |p, g| g.apply(p), &self.generators)
    }

    /// Orbits of hexagon-local line indices.
    pub fn line_orbits(&self, h: &Hexagon) -> Vec<Vec<usize>> {
        let index: std::collections::HashMap<u64, usize> =
            (0..h.lines().len()).map(|l| (h.line_mask(l), l)).collect();
        orbits_of(
            h.lines().len(),
            |l, g| index[&g.apply_mask(h.line_mask(l))],
            &self.generators,
        )
    }
}

fn orbits_of(
    n: usize,
    act: impl Fn(usize, &PointPermutation) -> usize,
    generators: &[PointPermutation],
) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut orbit = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = act(x, g);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Closure of `generators` under composition.
fn generated(generators: &[PointPermutation]) -> HashSet<PointPermutation> {
    let id = PointPermutation::identity();
    let mut set = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

struct Search<'a> {
    order: Vec<usize>,
    /// `rings[v][d]`: points at collinearity distance `d` from `v`.
    rings: Vec<[u64; 4]>,
    dist: &'a [Vec<usize>],
    image: [u8; POINT_COUNT],
    found: Vec<PointPermutation>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, candidates: &[u64; POINT_COUNT]) {
        if depth == POINT_COUNT {
            self.found.push(PointPermutation(self.image));
            return;
        }
        let p = self.order[depth];
        let mut options = candidates[p];
        while options != 0 {
            let q = options.trailing_zeros() as usize;
            options &= options - 1;
            let mut next = *candidates;
            let mut dead = false;
            for &r in &self.order[depth + 1..] {
                next[r] &= self.rings[q][self.dist[p][r]];
                if next[r] == 0 {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            self.image[p] = q as u8;
            self.run(depth + 1, &next);
        }
    }
}

/// Every point permutation of the hexagon that maps lines to lines.
pub fn automorphism_group(h: &Hexagon) -> AutomorphismGroup {
    let g = h.collinearity_graph();
    let dist = g.distance_matrix();
    let rings: Vec<[u64; 4]> = (0..POINT_COUNT)
        .map(|v| {
            let mut r = [0u64; 4];
            for (w, &d) in dist[v].iter().enumerate() {
                r[d] |= 1 << w;
            }
            r
        })
        .collect();
    // breadth-first order from point 0 keeps each new point close to mapped ones
    let order: Vec<usize> = {
        let d0 = &dist[0];
        let mut o: Vec<usize> = (0..POINT_COUNT).collect();
        o.sort_by_key(|&v| (d0[v], v));
        o
    };
    let all = (1u64 << POINT_COUNT) - 1;
    let mut search = Search {
        order,
        rings,
        dist: &dist,
        image: [0; POINT_COUNT],
        found: Vec::new(),
    };
    search.run(0, &[all; POINT_COUNT]);
    let mut elements: Vec<PointPermutation> = search
        .found
        .into_iter()
        .filter(|g| g.preserves_lines(h))
        .collect();
    elements.sort_unstable();

    let sigma = h.sigma().point_permutation();
    let mut generators = vec![PointPermutation::from_slice(&sigma).expect("σ permutes points")];
    let mut span = generated(&generators);
    for e in &elements {
        if span.len() == elements.len() {
            break;
        }
        if !span.contains(e) {
            generators.push(*e);
            span = generated(&generators);
        }
    }
    AutomorphismGroup { elements, generators }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_algebra() {
        let mut a = [0usize; POINT_COUNT];
        for (i, x) in a.iter_mut().enumerate() {
            *x = (i + 5) % POINT_COUNT;
        }
        let p = PointPermutation::from_slice(&a).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.apply_mask(0b11), 0b11 << 5);
        assert!(PointPermutation::from_slice(&[0; POINT_COUNT]).is_none());
        assert!(PointPermutation::from_slice(&[0; 3]).is_none());
    }

    #[test]
    fn group_of_the_built_hexagon() {
        let h = Hexagon::build().unwrap();
        let group = automorphism_group(&h);
        assert_eq!(group.order(), 12_096);
        assert!(group.contains(&PointPermutation::identity()));
        let sigma = PointPermutation::from_slice(&h.sigma().point_permutation()).unwrap();
        assert!(group.contains(&sigma));
        assert_eq!(generated(group.generators()).len(), 12_096);
        assert_eq!(group.point_orbits().len(), 1);
        assert_eq!(group.line_orbits(&h).len(), 1);
        for g in group.elements().iter().step_by(97) {
            assert!(g.preserves_lines(&h));
            assert!(group.contains(&g.inverse()));
        }
    }
}
