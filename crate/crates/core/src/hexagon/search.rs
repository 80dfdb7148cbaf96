use std::collections::BTreeSet;

use crate::geometry::{LinearMap, SymplecticSpace, POINT_COUNT};
use crate::graph::Graph;
use crate::{Error, Result};

use super::LINE_COUNT;

/// Orbits of W(5,2) lines under `map`, each sorted, ordered by least member.
pub fn line_orbits(space: &SymplecticSpace, map: &LinearMap) -> Vec<Vec<usize>> {
    let perm = map.point_permutation();
    let image = |l: usize| {
        let mut t = space.lines()[l].map(|p| perm[p]);
        t.sort_unstable();
        space.line_index(t).expect("symplectic maps send lines to lines")
    };
    let mut seen = vec![false; space.lines().len()];
    let mut orbits = Vec::new();
    for start in 0..space.lines().len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut l = image(start);
        while l != start {
            seen[l] = true;
            orbit.push(l);
            l = image(l);
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

struct Search<'a> {
    space: &'a SymplecticSpace,
    blocks: Vec<Vec<usize>>,
    /// `compatible[a][b]`: blocks `a` and `b` together stay a partial hexagon.
    compatible: Vec<Vec<bool>>,
    stack: Vec<usize>,
    degree: [u8; POINT_COUNT],
    chosen: Vec<usize>,
    solutions: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn fits(&self, block: &[usize]) -> bool {
        let mut degree = self.degree;
        for &l in block {
            for &p in &self.space.lines()[l] {
                degree[p] += 1;
                if degree[p] > 3 {
                    return false;
                }
            }
        }
        true
    }

    fn push(&mut self, block: usize) {
        for &l in &self.blocks[block] {
            for &p in &self.space.lines()[l] {
                self.degree[p] += 1;
            }
            self.chosen.push(l);
        }
    }

    fn pop(&mut self, block: usize) {
        for &l in &self.blocks[block] {
            for &p in &self.space.lines()[l] {
                self.degree[p] -= 1;
            }
            self.chosen.pop();
        }
    }

    /// No ordinary k-gon with k < 6, i.e. incidence girth at least 12.
    /// Only cycles through the last `fresh` lines are searched for.
    fn girth_ok(&self, fresh: usize) -> bool {
        girth_ok(self.space, &self.chosen, fresh)
    }

    fn run(&mut self, from: usize) {
        if self.chosen.len() == LINE_COUNT {
            if self.degree.iter().all(|&d| d == 3) {
                let mut s = self.chosen.clone();
                s.sort_unstable();
                self.solutions.push(s);
            }
            return;
        }
        let candidates: Vec<usize> = (from..self.blocks.len())
            .filter(|&b| {
                self.chosen.len() + self.blocks[b].len() <= LINE_COUNT
                    && self.stack.iter().all(|&a| self.compatible[a][b])
                    && self.fits(&self.blocks[b])
            })
            .collect();
        // every point still short of three lines must be reachable
        let mut supply = self.degree;
        let mut total = self.chosen.len();
        for &b in &candidates {
            total += self.blocks[b].len();
            for &l in &self.blocks[b] {
                for &p in &self.space.lines()[l] {
                    supply[p] = supply[p].saturating_add(1);
                }
            }
        }
        if total < LINE_COUNT || supply.iter().any(|&d| d < 3) {
            return;
        }
        for b in candidates {
            if !self.fits(&self.blocks[b]) {
                continue;
            }
            self.push(b);
            self.stack.push(b);
            if self.girth_ok(self.blocks[b].len()) {
                self.run(b + 1);
            }
            self.stack.pop();
            self.pop(b);
        }
    }
}

fn girth_ok(space: &SymplecticSpace, lines: &[usize], fresh: usize) -> bool {
    let mut g = Graph::new(POINT_COUNT + lines.len());
    for (i, &l) in lines.iter().enumerate() {
        for &p in &space.lines()[l] {
            g.add_edge(p, POINT_COUNT + i);
        }
    }
    (lines.len() - fresh..lines.len()).all(|i| g.shortest_cycle_from(POINT_COUNT + i, 11).is_none())
}

/// All hexagons (as sorted W(5,2) line-index sets) that are invariant under
/// `sigma` and contain the σ-closure of `seeds`, in lexicographic search
/// order. Errors with [`Error::NoHexagon`] when there is none.
///
/// Candidates are whole σ-orbits of lines, so any orbit sizes are handled;
/// for the tabulated σ all 45 orbits have size 7.
pub fn find_invariant_hexagons(
    space: &SymplecticSpace,
    sigma: &LinearMap,
    seeds: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let blocks = line_orbits(space, sigma);

    let forced: BTreeSet<usize> = seeds
        .iter()
        .map(|s| blocks.iter().position(|b| b.contains(s)).expect("every line is in a block"))
        .collect();
    let free: Vec<Vec<usize>> = blocks
        .iter()
        .enumerate()
        .filter(|(i, _)| !forced.contains(i))
        .map(|(_, b)| b.clone())
        .collect();

    let mut search = Search {
        space,
        blocks: forced.iter().map(|&i| blocks[i].clone()).collect(),
        compatible: Vec::new(),
        stack: Vec::new(),
        degree: [0; POINT_COUNT],
        chosen: Vec::new(),
        solutions: Vec::new(),
    };
    for i in 0..search.blocks.len() {
        if !search.fits(&search.blocks[i].clone()) {
            return Err(Error::NoHexagon);
        }
        search.push(i);
    }
    if !search.girth_ok(search.chosen.len()) {
        return Err(Error::NoHexagon);
    }
    let offset = search.blocks.len();
    search.blocks.extend(free);
    let base = search.chosen.clone();
    search.compatible = search
        .blocks
        .iter()
        .map(|a| {
            search
                .blocks
                .iter()
                .map(|b| {
                    let mut lines = base.clone();
                    lines.extend(a.iter().chain(b).copied());
                    lines.sort_unstable();
                    lines.dedup();
                    let mut degree = [0u8; POINT_COUNT];
                    lines.iter().flat_map(|&l| space.lines()[l]).for_each(|p| degree[p] += 1);
                    degree.iter().all(|&d| d <= 3) && girth_ok(space, &lines, lines.len())
                })
                .collect()
        })
        .collect();
    search.stack = (0..offset).collect();
    search.run(offset);
    if search.solutions.is_empty() {
        return Err(Error::NoHexagon);
    }
    search.solutions.sort();
    Ok(search.solutions)
}
